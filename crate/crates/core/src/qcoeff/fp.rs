use super::ring::{Coeff, FieldCoeff, QRing};
use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::ToPrimitive;

/// The Mersenne prime 2^61 − 1.
pub const PRIME: u64 = (1 << 61) - 1;

/// An element of the prime field 𝔽_p with p = 2^61 − 1.
///
/// Used for fast rank lower bounds and identity tests at random points; a
/// nonzero polynomial identity of low degree vanishes at a random point with
/// negligible probability.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Default)]
pub struct Fp(u64);

impl Fp {
    pub fn new(x: u64) -> Self {
        Fp(x % PRIME)
    }

    pub fn value(self) -> u64 {
        self.0
    }

    pub fn from_bigint(x: &BigInt) -> Self {
        let r = x.mod_floor(&BigInt::from(PRIME));
        Fp(r.to_u64().expect("reduced"))
    }

    /// Reduces a rational; `None` when p divides the denominator.
    pub fn from_rational(x: &BigRational) -> Option<Self> {
        let d = Self::from_bigint(x.denom());
        d.inverse().map(|d| Self::from_bigint(x.numer()).times(&d))
    }

    pub fn pow(self, mut e: u64) -> Self {
        let (mut base, mut acc) = (self, Fp(1));
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.times(&base);
            }
            base = base.times(&base);
            e >>= 1;
        }
        acc
    }

    /// Symmetric lift to (−p/2, p/2].
    pub fn signed(self) -> i64 {
        if self.0 > PRIME / 2 {
            -((PRIME - self.0) as i64)
        } else {
            self.0 as i64
        }
    }
}

impl Coeff for Fp {
    fn nil() -> Self {
        Fp(0)
    }
    fn unit() -> Self {
        Fp(1)
    }
    fn is_nil(&self) -> bool {
        self.0 == 0
    }
    fn plus(&self, other: &Self) -> Self {
        let s = self.0 + other.0;
        Fp(if s >= PRIME { s - PRIME } else { s })
    }
    fn times(&self, other: &Self) -> Self {
        let p = self.0 as u128 * other.0 as u128;
        let lo = (p & PRIME as u128) as u64;
        let hi = (p >> 61) as u64;
        Fp(lo).plus(&Fp(hi))
    }
    fn negate(&self) -> Self {
        Fp(if self.0 == 0 { 0 } else { PRIME - self.0 })
    }
    fn from_int(n: i64) -> Self {
        let r = Fp(n.unsigned_abs() % PRIME);
        if n < 0 {
            r.negate()
        } else {
            r
        }
    }
}

impl FieldCoeff for Fp {
    fn inverse(&self) -> Option<Self> {
        (self.0 != 0).then(|| self.pow(PRIME - 2))
    }
}

impl QRing<Fp> {
    /// Specialisation at a nonzero element of 𝔽_p.
    pub fn at_fp(q0: Fp) -> Self {
        Self::new(q0, q0.inverse().expect("q0 must be nonzero"))
    }
}

/// Reduction of an integer that may be negative.
pub fn fp_of_i128(x: i128) -> Fp {
    let r = (x.unsigned_abs() % PRIME as u128) as u64;
    if x.is_negative() {
        Fp(r).negate()
    } else {
        Fp(r)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn field_axioms() {
        let a = Fp::from_int(-5);
        let b = Fp::new(PRIME - 1);
        assert_eq!(a.plus(&Fp::from_int(5)), Fp::nil());
        assert_eq!(b.times(&b), Fp::unit());
        let x = Fp::new(123_456_789_012_345);
        assert_eq!(x.times(&x.inverse().unwrap()), Fp::unit());
        assert_eq!(Fp::from_rational(&BigRational::new(1.into(), 2.into())).unwrap().times(&Fp::from_int(2)), Fp::unit());
        assert_eq!(Fp::from_int(-3).signed(), -3);
        assert_eq!(fp_of_i128(-7), Fp::from_int(-7));
    }
}
