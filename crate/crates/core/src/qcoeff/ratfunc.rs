//! The field ℚ(q) of rational functions in one variable.

use super::poly::IntPoly;
use crate::error::{Error, Result};
use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::ser::{Serialize, SerializeStruct, Serializer};
use std::fmt;

/// A reduced fraction `num / den` of integer polynomials.
///
/// Normal form: `gcd(num, den) = 1` in ℚ[q], `den` has a positive leading
/// coefficient and the integer contents of `num` and `den` are coprime. Two
/// values are equal as field elements exactly when their normal forms agree.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RatFunc {
    num: IntPoly,
    den: IntPoly,
}

/// Which flavour of q-number to build.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum QKind {
    /// `[L] = (q^L - q^-L)/(q - q^-1)`
    Bracket,
    /// `{L} = (q^{2L} - 1)/(q^2 - 1)`
    Brace,
}

impl RatFunc {
    pub fn zero() -> Self {
        RatFunc { num: IntPoly::zero(), den: IntPoly::one() }
    }

    pub fn one() -> Self {
        Self::from_int(1)
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_bigint(BigInt::from(n))
    }

    pub fn from_bigint(n: BigInt) -> Self {
        RatFunc { num: IntPoly::constant(n), den: IntPoly::one() }
    }

    pub fn from_rational(r: &BigRational) -> Self {
        Self::new(IntPoly::constant(r.numer().clone()), IntPoly::constant(r.denom().clone()))
            .expect("rational has nonzero denominator")
    }

    pub fn from_poly(p: IntPoly) -> Self {
        RatFunc { num: p, den: IntPoly::one() }
    }

    /// The indeterminate `q`.
    pub fn q() -> Self {
        Self::q_pow(1)
    }

    /// `q^e` for any integer `e`; negative powers are stored as `1/q^{|e|}`.
    pub fn q_pow(e: i64) -> Self {
        let m = IntPoly::monomial(BigInt::one(), e.unsigned_abs() as usize);
        if e >= 0 {
            RatFunc { num: m, den: IntPoly::one() }
        } else {
            RatFunc { num: IntPoly::one(), den: m }
        }
    }

    /// Normalises `num / den`.
    pub fn new(num: IntPoly, den: IntPoly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::normalize(num, den))
    }

    fn normalize(num: IntPoly, den: IntPoly) -> Self {
        if num.is_zero() {
            return Self::zero();
        }
        let (mut num, mut den) = if den.is_constant() {
            (num, den)
        } else {
            let g = num.gcd(&den);
            if g.is_constant() {
                (num, den)
            } else {
                (num.div_exact(&g).expect("gcd divides"), den.div_exact(&g).expect("gcd divides"))
            }
        };
        let g = num.content().gcd(&den.content());
        if !g.is_one() {
            num = num.div_scalar(&g);
            den = den.div_scalar(&g);
        }
        if den.leading().is_some_and(|c| c.is_negative()) {
            num = num.neg();
            den = den.neg();
        }
        RatFunc { num, den }
    }

    pub fn numer(&self) -> &IntPoly {
        &self.num
    }

    pub fn denom(&self) -> &IntPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    /// True when the value lies in ℚ (no dependence on `q`).
    pub fn is_constant(&self) -> bool {
        self.num.is_constant() && self.den.is_constant()
    }

    pub fn add(&self, other: &Self) -> Self {
        if self.is_zero() {
            return other.clone();
        }
        if other.is_zero() {
            return self.clone();
        }
        if self.den == other.den {
            return Self::normalize(self.num.add(&other.num), self.den.clone());
        }
        let num = self.num.mul(&other.den).add(&other.num.mul(&self.den));
        Self::normalize(num, self.den.mul(&other.den))
    }

    pub fn neg(&self) -> Self {
        RatFunc { num: self.num.neg(), den: self.den.clone() }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        if self.den.is_one() && other.den.is_one() {
            return RatFunc { num: self.num.mul(&other.num), den: IntPoly::one() };
        }
        // Cross-cancel first so the products stay small.
        let g1 = self.num.gcd(&other.den);
        let g2 = other.num.gcd(&self.den);
        let n1 = self.num.div_exact(&g1).expect("gcd divides");
        let d2 = other.den.div_exact(&g1).expect("gcd divides");
        let n2 = other.num.div_exact(&g2).expect("gcd divides");
        let d1 = self.den.div_exact(&g2).expect("gcd divides");
        let mut num = n1.mul(&n2);
        let mut den = d1.mul(&d2);
        let g = num.content().gcd(&den.content());
        if !g.is_one() {
            num = num.div_scalar(&g);
            den = den.div_scalar(&g);
        }
        if den.leading().is_some_and(|c| c.is_negative()) {
            num = num.neg();
            den = den.neg();
        }
        RatFunc { num, den }
    }

    /// Multiplies by an integer.
    pub fn scale_int(&self, c: i64) -> Self {
        self.mul(&Self::from_int(c))
    }

    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::normalize(self.den.clone(), self.num.clone()))
    }

    pub fn div(&self, other: &Self) -> Result<Self> {
        Ok(self.mul(&other.inv()?))
    }

    pub fn pow(&self, e: i64) -> Result<Self> {
        let base = if e < 0 { self.inv()? } else { self.clone() };
        let mut acc = Self::one();
        for _ in 0..e.unsigned_abs() {
            acc = acc.mul(&base);
        }
        Ok(acc)
    }

    /// Exact value at a rational point.
    pub fn evaluate(&self, q0: &BigRational) -> Result<BigRational> {
        let d = self.den.eval(q0);
        if d.is_zero() {
            return Err(Error::Pole(q0.to_string()));
        }
        Ok(self.num.eval(q0) / d)
    }

    /// The constant value, if the function does not depend on `q`.
    pub fn as_rational(&self) -> Option<BigRational> {
        if !self.is_constant() {
            return None;
        }
        let n = self.num.coeffs().first().cloned().unwrap_or_default();
        Some(BigRational::new(n, self.den.coeffs()[0].clone()))
    }
}

/// The q-number `[L]` or `{L}` as a reduced rational function.
pub fn q_number(l: i64, kind: QKind) -> RatFunc {
    let one = RatFunc::one();
    match kind {
        QKind::Bracket => {
            let num = RatFunc::q_pow(l).sub(&RatFunc::q_pow(-l));
            let den = RatFunc::q().sub(&RatFunc::q_pow(-1));
            num.div(&den).expect("q - 1/q is nonzero")
        }
        QKind::Brace => {
            let num = RatFunc::q_pow(2 * l).sub(&one);
            let den = RatFunc::q_pow(2).sub(&one);
            num.div(&den).expect("q^2 - 1 is nonzero")
        }
    }
}

/// Product of `q_number(1..=l, kind)`, equal to 1 for `l = 0`.
pub fn q_factorial(l: u32, kind: QKind) -> RatFunc {
    (1..=l as i64).fold(RatFunc::one(), |acc, j| acc.mul(&q_number(j, kind)))
}

impl Default for RatFunc {
    fn default() -> Self {
        Self::zero()
    }
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let wrap = |p: &IntPoly| {
            if p.num_terms() > 1 {
                format!("({p})")
            } else {
                p.to_string()
            }
        };
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "{}/{}", wrap(&self.num), wrap(&self.den))
        }
    }
}

impl fmt::Debug for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

fn poly_json(p: &IntPoly) -> Vec<(usize, serde_json::Value)> {
    p.terms().map(|(e, c)| (e, bigint_json(c))).collect()
}

/// Integers that fit in `i64` are emitted as JSON numbers, larger ones as strings.
pub fn bigint_json(c: &BigInt) -> serde_json::Value {
    match i64::try_from(c) {
        Ok(v) => serde_json::Value::from(v),
        Err(_) => serde_json::Value::from(c.to_string()),
    }
}

impl Serialize for RatFunc {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("RatFunc", 2)?;
        st.serialize_field("num", &poly_json(&self.num))?;
        st.serialize_field("den", &poly_json(&self.den))?;
        st.end()
    }
}
