//! Laurent polynomials ℤ[q, q⁻¹] with machine-integer coefficients.
//!
//! Products in the Hecke algebra never need division, so numerators of
//! symmetrisers and of every structure constant live here. Arithmetic is
//! checked: an overflow panics rather than silently wrapping, and callers
//! that may approach the limit catch the panic and fall back to another ring.

use super::poly::IntPoly;
use super::ratfunc::RatFunc;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use std::fmt;

#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct LPoly {
    /// Exponent of `coeffs[0]`.
    low: i32,
    /// Both ends trimmed; empty means zero.
    coeffs: Vec<i128>,
}

#[inline]
fn add_c(a: i128, b: i128) -> i128 {
    a.checked_add(b).expect("Laurent coefficient overflow")
}

#[inline]
fn mul_c(a: i128, b: i128) -> i128 {
    a.checked_mul(b).expect("Laurent coefficient overflow")
}

impl LPoly {
    pub fn zero() -> Self {
        LPoly { low: 0, coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::monomial(1, 0)
    }

    pub fn constant(c: i128) -> Self {
        Self::monomial(c, 0)
    }

    pub fn monomial(c: i128, e: i32) -> Self {
        if c == 0 {
            Self::zero()
        } else {
            LPoly { low: e, coeffs: vec![c] }
        }
    }

    fn trimmed(mut low: i32, mut coeffs: Vec<i128>) -> Self {
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        let lead = coeffs.iter().take_while(|&&c| c == 0).count();
        if lead == coeffs.len() {
            return Self::zero();
        }
        if lead > 0 {
            coeffs.drain(..lead);
            low += lead as i32;
        }
        LPoly { low, coeffs }
    }

    pub fn from_terms<I: IntoIterator<Item = (i32, i128)>>(terms: I) -> Self {
        let terms: Vec<(i32, i128)> = terms.into_iter().collect();
        let Some(lo) = terms.iter().map(|t| t.0).min() else {
            return Self::zero();
        };
        let hi = terms.iter().map(|t| t.0).max().unwrap();
        let mut coeffs = vec![0i128; (hi - lo + 1) as usize];
        for (e, c) in terms {
            let slot = &mut coeffs[(e - lo) as usize];
            *slot = add_c(*slot, c);
        }
        Self::trimmed(lo, coeffs)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (i32, i128)> + '_ {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, &c)| c != 0)
            .map(|(i, &c)| (self.low + i as i32, c))
    }

    pub fn add(&self, other: &Self) -> Self {
        if self.is_zero() {
            return other.clone();
        }
        if other.is_zero() {
            return self.clone();
        }
        let lo = self.low.min(other.low);
        let hi = (self.low + self.coeffs.len() as i32).max(other.low + other.coeffs.len() as i32);
        let mut coeffs = vec![0i128; (hi - lo) as usize];
        for (i, &c) in self.coeffs.iter().enumerate() {
            coeffs[(self.low - lo) as usize + i] = c;
        }
        for (i, &c) in other.coeffs.iter().enumerate() {
            let slot = &mut coeffs[(other.low - lo) as usize + i];
            *slot = add_c(*slot, c);
        }
        Self::trimmed(lo, coeffs)
    }

    pub fn add_assign(&mut self, other: &Self) {
        if other.is_zero() {
            return;
        }
        if self.is_zero() {
            *self = other.clone();
            return;
        }
        let s_hi = self.low + self.coeffs.len() as i32;
        let o_hi = other.low + other.coeffs.len() as i32;
        if other.low >= self.low && o_hi <= s_hi {
            let off = (other.low - self.low) as usize;
            for (i, &c) in other.coeffs.iter().enumerate() {
                self.coeffs[off + i] = add_c(self.coeffs[off + i], c);
            }
            let low = self.low;
            *self = Self::trimmed(low, std::mem::take(&mut self.coeffs));
        } else {
            *self = self.add(other);
        }
    }

    pub fn neg(&self) -> Self {
        LPoly { low: self.low, coeffs: self.coeffs.iter().map(|&c| -c).collect() }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![0i128; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] = add_c(coeffs[i + j], mul_c(a, b));
            }
        }
        Self::trimmed(self.low + other.low, coeffs)
    }

    /// Multiplies by `q^e`.
    pub fn shift(&self, e: i32) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        LPoly { low: self.low + e, coeffs: self.coeffs.clone() }
    }

    pub fn eval(&self, q0: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for &c in self.coeffs.iter().rev() {
            acc = acc * q0 + BigRational::from_integer(BigInt::from(c));
        }
        let p = if self.low >= 0 {
            num_traits::pow(q0.clone(), self.low as usize)
        } else {
            num_traits::pow(q0.recip(), (-self.low) as usize)
        };
        acc * p
    }

    /// Value at `q = 1`.
    pub fn eval_one(&self) -> BigInt {
        self.coeffs.iter().map(|&c| BigInt::from(c)).sum()
    }

    pub fn to_ratfunc(&self) -> RatFunc {
        if self.is_zero() {
            return RatFunc::zero();
        }
        let p = IntPoly::from_coeffs(self.coeffs.iter().map(|&c| BigInt::from(c)).collect());
        RatFunc::from_poly(p).mul(&RatFunc::q_pow(self.low as i64))
    }

    pub fn is_one(&self) -> bool {
        self.low == 0 && self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }
}

impl fmt::Debug for LPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_ratfunc())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn arithmetic_matches_ratfunc() {
        let a = LPoly::from_terms([(-2, 3), (1, -1), (4, 2)]);
        let b = LPoly::from_terms([(0, 1), (-1, -1)]);
        let lhs = a.mul(&b).add(&a).to_ratfunc();
        let rhs = a.to_ratfunc().mul(&b.to_ratfunc()).add(&a.to_ratfunc());
        assert_eq!(lhs, rhs);
        assert!(a.sub(&a).is_zero());
    }

    #[test]
    fn add_assign_in_place_and_grow() {
        let mut a = LPoly::from_terms([(0, 1), (3, 1)]);
        a.add_assign(&LPoly::monomial(-1, 0));
        assert_eq!(a, LPoly::monomial(1, 3));
        a.add_assign(&LPoly::monomial(5, -4));
        assert_eq!(a, LPoly::from_terms([(3, 1), (-4, 5)]));
    }

    #[test]
    fn evaluation() {
        let a = LPoly::from_terms([(-1, 1), (1, 1)]);
        let q0 = BigRational::new(2.into(), 1.into());
        assert_eq!(a.eval(&q0), BigRational::new(5.into(), 2.into()));
        assert_eq!(a.eval_one(), BigInt::from(2));
    }
}
