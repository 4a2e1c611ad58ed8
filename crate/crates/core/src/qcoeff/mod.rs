//! Exact coefficients: integer polynomials, the field ℚ(q), Laurent
//! numerators and q-numbers.

mod fp;
mod laurent;
mod poly;
mod ratfunc;
mod ring;

pub use fp::{fp_of_i128, Fp, PRIME};
pub use laurent::LPoly;
pub use poly::IntPoly;
pub use ratfunc::{bigint_json, q_factorial, q_number, QKind, RatFunc};
pub use ring::{Coeff, FieldCoeff, QRing, Symbolic};

use num_rational::BigRational;

/// Default generic evaluation points: rationals greater than one, far from
/// roots of unity.
pub fn default_points() -> Vec<BigRational> {
    vec![rational(7, 5), rational(9, 7)]
}

/// Three generic points, used where a third independent sample is wanted.
pub fn three_points() -> Vec<BigRational> {
    vec![rational(7, 5), rational(9, 7), rational(13, 11)]
}

pub fn rational(n: i64, d: i64) -> BigRational {
    BigRational::new(n.into(), d.into())
}

/// Parses `a/b` or `a` into a rational.
pub fn parse_rational(s: &str) -> Option<BigRational> {
    let s = s.trim();
    match s.split_once('/') {
        Some((n, d)) => {
            let n: num_bigint::BigInt = n.trim().parse().ok()?;
            let d: num_bigint::BigInt = d.trim().parse().ok()?;
            (d != 0.into()).then(|| BigRational::new(n, d))
        }
        None => Some(BigRational::from_integer(s.parse().ok()?)),
    }
}
