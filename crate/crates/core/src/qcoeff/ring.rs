//! A small abstraction over the coefficient rings the algebra code runs in.
//!
//! Hecke and fused products are written once against [`Coeff`] and then
//! instantiated over ℚ(q) itself, over Laurent polynomials (division-free
//! numerators), or over ℚ after specialising `q` to a rational point.

use super::laurent::LPoly;
use super::ratfunc::RatFunc;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use std::fmt::Debug;

pub trait Coeff: Clone + PartialEq + Debug + Send + Sync + 'static {
    fn nil() -> Self;
    fn unit() -> Self;
    fn is_nil(&self) -> bool;
    fn plus(&self, other: &Self) -> Self;
    fn times(&self, other: &Self) -> Self;
    fn negate(&self) -> Self;
    fn from_int(n: i64) -> Self;

    fn minus(&self, other: &Self) -> Self {
        self.plus(&other.negate())
    }

    fn accumulate(&mut self, other: &Self) {
        *self = self.plus(other);
    }
}

/// Coefficient rings that are fields.
pub trait FieldCoeff: Coeff {
    fn inverse(&self) -> Option<Self>;
}

/// Rings that contain the indeterminate `q` itself rather than a value of it.
pub trait Symbolic: Coeff {
    fn q_pow(e: i64) -> Self;
}

/// A coefficient ring together with the chosen value of `q`.
#[derive(Clone, Debug)]
pub struct QRing<C: Coeff> {
    q: C,
    q_inv: C,
    z: C,
}

impl<C: Coeff> QRing<C> {
    /// Builds the ring from `q` and its inverse.
    pub fn new(q: C, q_inv: C) -> Self {
        let z = q.minus(&q_inv);
        QRing { q, q_inv, z }
    }

    pub fn q(&self) -> &C {
        &self.q
    }

    pub fn q_inv(&self) -> &C {
        &self.q_inv
    }

    /// `q - q^{-1}`, the quadratic-relation coefficient.
    pub fn z(&self) -> &C {
        &self.z
    }

    pub fn q_pow(&self, e: i64) -> C {
        let base = if e >= 0 { &self.q } else { &self.q_inv };
        (0..e.unsigned_abs()).fold(C::unit(), |acc, _| acc.times(base))
    }
}

impl<C: Symbolic> QRing<C> {
    pub fn generic() -> Self {
        Self::new(C::q_pow(1), C::q_pow(-1))
    }
}

impl QRing<BigRational> {
    /// Specialisation at a nonzero rational point.
    pub fn at(q0: &BigRational) -> Self {
        assert!(!Zero::is_zero(q0), "q0 must be nonzero");
        Self::new(q0.clone(), q0.recip())
    }
}

impl Coeff for RatFunc {
    fn nil() -> Self {
        RatFunc::zero()
    }
    fn unit() -> Self {
        RatFunc::one()
    }
    fn is_nil(&self) -> bool {
        RatFunc::is_zero(self)
    }
    fn plus(&self, other: &Self) -> Self {
        self.add(other)
    }
    fn times(&self, other: &Self) -> Self {
        self.mul(other)
    }
    fn negate(&self) -> Self {
        self.neg()
    }
    fn from_int(n: i64) -> Self {
        RatFunc::from_int(n)
    }
}

impl FieldCoeff for RatFunc {
    fn inverse(&self) -> Option<Self> {
        self.inv().ok()
    }
}

impl Symbolic for RatFunc {
    fn q_pow(e: i64) -> Self {
        RatFunc::q_pow(e)
    }
}

impl Coeff for LPoly {
    fn nil() -> Self {
        LPoly::zero()
    }
    fn unit() -> Self {
        LPoly::one()
    }
    fn is_nil(&self) -> bool {
        LPoly::is_zero(self)
    }
    fn plus(&self, other: &Self) -> Self {
        self.add(other)
    }
    fn times(&self, other: &Self) -> Self {
        self.mul(other)
    }
    fn negate(&self) -> Self {
        self.neg()
    }
    fn from_int(n: i64) -> Self {
        LPoly::constant(n as i128)
    }
    fn accumulate(&mut self, other: &Self) {
        self.add_assign(other);
    }
}

impl Symbolic for LPoly {
    fn q_pow(e: i64) -> Self {
        LPoly::monomial(1, e as i32)
    }
}

impl Coeff for BigRational {
    fn nil() -> Self {
        Zero::zero()
    }
    fn unit() -> Self {
        One::one()
    }
    fn is_nil(&self) -> bool {
        Zero::is_zero(self)
    }
    fn plus(&self, other: &Self) -> Self {
        self + other
    }
    fn times(&self, other: &Self) -> Self {
        self * other
    }
    fn negate(&self) -> Self {
        -self
    }
    fn from_int(n: i64) -> Self {
        BigRational::from_integer(BigInt::from(n))
    }
    fn accumulate(&mut self, other: &Self) {
        *self += other;
    }
}

impl Coeff for BigInt {
    fn nil() -> Self {
        Zero::zero()
    }
    fn unit() -> Self {
        One::one()
    }
    fn is_nil(&self) -> bool {
        Zero::is_zero(self)
    }
    fn plus(&self, other: &Self) -> Self {
        self + other
    }
    fn times(&self, other: &Self) -> Self {
        self * other
    }
    fn negate(&self) -> Self {
        -self
    }
    fn from_int(n: i64) -> Self {
        BigInt::from(n)
    }
    fn accumulate(&mut self, other: &Self) {
        *self += other;
    }
}

impl FieldCoeff for BigRational {
    fn inverse(&self) -> Option<Self> {
        (!Zero::is_zero(self)).then(|| self.recip())
    }
}
