//! The Hecke algebra H_m(q) in the basis {σ_w}.
//!
//! Elements are generic over the coefficient ring: ℚ(q) for the public
//! symbolic interface, Laurent polynomials for division-free numerators, and
//! ℚ after specialising `q`.

use crate::error::{Error, Result};
use crate::permcomb::{Blocks, Perm};
use crate::qcoeff::{q_factorial, Coeff, QKind, QRing, RatFunc, Symbolic};
use serde::ser::{Serialize, SerializeSeq, Serializer};
use std::collections::BTreeMap;

/// Which side a generator multiplies on.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    Left,
    Right,
}

/// A finite linear combination of the basis elements σ_w of H_m(q).
#[derive(Clone, PartialEq, Debug)]
pub struct HeckeElem<C: Coeff = RatFunc> {
    m: usize,
    terms: BTreeMap<Perm, C>,
}

impl<C: Coeff> HeckeElem<C> {
    pub fn zero(m: usize) -> Self {
        HeckeElem { m, terms: BTreeMap::new() }
    }

    pub fn one(m: usize) -> Self {
        Self::basis(Perm::identity(m))
    }

    /// The single basis element σ_w.
    pub fn basis(w: Perm) -> Self {
        Self::term(w, C::unit())
    }

    pub fn term(w: Perm, c: C) -> Self {
        let mut e = Self::zero(w.size());
        e.add_term(w, c);
        e
    }

    /// The generator σ_i (1-based).
    pub fn generator(m: usize, i: usize) -> Result<Self> {
        if i == 0 || i >= m {
            return Err(Error::OutOfRange(format!("σ_{i} in H_{m}")));
        }
        Ok(Self::basis(Perm::simple(m, i)))
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn terms(&self) -> &BTreeMap<Perm, C> {
        &self.terms
    }

    pub fn coeff(&self, w: &Perm) -> Option<&C> {
        self.terms.get(w)
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Adds `c · σ_w` in place, dropping the term if it cancels.
    pub fn add_term(&mut self, w: Perm, c: C) {
        debug_assert_eq!(w.size(), self.m);
        if c.is_nil() {
            return;
        }
        match self.terms.entry(w) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                o.get_mut().accumulate(&c);
                if o.get().is_nil() {
                    o.remove();
                }
            }
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_size(other)?;
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.add_term(w.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.scale(&C::from_int(-1)))
    }

    pub fn scale(&self, c: &C) -> Self {
        let mut out = Self::zero(self.m);
        for (w, d) in &self.terms {
            out.add_term(w.clone(), d.times(c));
        }
        out
    }

    fn check_size(&self, other: &Self) -> Result<()> {
        if self.m != other.m {
            return Err(Error::SizeMismatch(format!("H_{} vs H_{}", self.m, other.m)));
        }
        Ok(())
    }

    /// Multiplies by the generator σ_i on the given side.
    pub fn mul_gen(&self, i: usize, side: Side, ring: &QRing<C>) -> Result<Self> {
        if i == 0 || i >= self.m {
            return Err(Error::OutOfRange(format!("σ_{i} in H_{}", self.m)));
        }
        Ok(self.mul_gen_unchecked(i, side, ring))
    }

    fn mul_gen_unchecked(&self, i: usize, side: Side, ring: &QRing<C>) -> Self {
        let mut out = Self::zero(self.m);
        for (w, c) in &self.terms {
            let (moved, descent) = match side {
                Side::Right => (w.mul_simple_right(i), w.is_right_descent(i)),
                Side::Left => (w.mul_simple_left(i), w.is_left_descent(i)),
            };
            out.add_term(moved, c.clone());
            if descent {
                out.add_term(w.clone(), c.times(ring.z()));
            }
        }
        out
    }

    /// Right multiplication by the word `σ_{i_1} σ_{i_2} ⋯`.
    pub fn mul_word_right(&self, word: &[usize], ring: &QRing<C>) -> Self {
        word.iter().fold(self.clone(), |acc, &i| acc.mul_gen_unchecked(i, Side::Right, ring))
    }

    /// Left multiplication by the word `σ_{i_1} σ_{i_2} ⋯`.
    pub fn mul_word_left(&self, word: &[usize], ring: &QRing<C>) -> Self {
        word.iter().rev().fold(self.clone(), |acc, &i| acc.mul_gen_unchecked(i, Side::Left, ring))
    }

    /// The product `self · other`, expanding `other` along reduced words.
    pub fn mul_in(&self, other: &Self, ring: &QRing<C>) -> Result<Self> {
        self.check_size(other)?;
        let mut out = Self::zero(self.m);
        for (w, c) in &other.terms {
            let part = self.mul_word_right(&w.reduced_word(), ring);
            for (v, d) in part.terms {
                out.add_term(v, d.times(c));
            }
        }
        Ok(out)
    }

    /// Applies a ring map to every coefficient.
    pub fn map_coeffs<D: Coeff>(&self, f: impl Fn(&C) -> D) -> HeckeElem<D> {
        let mut out = HeckeElem::zero(self.m);
        for (w, c) in &self.terms {
            out.add_term(w.clone(), f(c));
        }
        out
    }

    /// Fallible variant of [`HeckeElem::map_coeffs`].
    pub fn try_map_coeffs<D: Coeff>(&self, f: impl Fn(&C) -> Result<D>) -> Result<HeckeElem<D>> {
        let mut out = HeckeElem::zero(self.m);
        for (w, c) in &self.terms {
            out.add_term(w.clone(), f(c)?);
        }
        Ok(out)
    }

    /// The anti-automorphism σ_w ↦ σ_{w^{-1}}.
    pub fn reverse(&self) -> Self {
        let mut out = Self::zero(self.m);
        for (w, c) in &self.terms {
            out.add_term(w.inverse(), c.clone());
        }
        out
    }

    /// Embeds into H_{m'} for `m' ≥ m` by fixing the extra points.
    pub fn extend(&self, m_new: usize) -> Self {
        let mut out = Self::zero(m_new);
        for (w, c) in &self.terms {
            let mut v = w.one_line();
            v.extend(self.m + 1..=m_new);
            out.add_term(Perm::from_one_line(&v).expect("extension is a permutation"), c.clone());
        }
        out
    }
}

impl<C: Symbolic> HeckeElem<C> {
    /// [`HeckeElem::mul_in`] at the generic parameter.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.mul_in(other, &QRing::generic())
    }

    pub fn mul_generator(&self, i: usize, side: Side) -> Result<Self> {
        self.mul_gen(i, side, &QRing::generic())
    }
}

/// The inverse of σ_i, namely σ_i − (q − q⁻¹).
pub fn generator_inverse<C: Coeff>(m: usize, i: usize, ring: &QRing<C>) -> Result<HeckeElem<C>> {
    let mut e = HeckeElem::generator(m, i)?;
    e.add_term(Perm::identity(m), ring.z().negate());
    Ok(e)
}

/// `Σ_w x^{ℓ(w)} σ_w` over the symmetric group on the strands
/// `start+1, …, start+len` of H_m.
///
/// Built as the ordered product over `r` of `Σ_j x^j σ_{r}σ_{r-1}⋯σ_{r-j+1}`,
/// whose terms are the minimal coset representatives, so lengths add and no
/// reduction ever happens.
pub fn weighted_sum<C: Coeff>(m: usize, start: usize, len: usize, x: &C, ring: &QRing<C>) -> HeckeElem<C> {
    let mut acc = HeckeElem::one(m);
    for factor in weighted_sum_factors(start, len, x) {
        let mut f = HeckeElem::zero(m);
        for (word, c) in factor {
            f.add_term(Perm::from_word(m, &word), c);
        }
        acc = acc.mul_in(&f, ring).expect("same size");
    }
    acc
}

/// The factors of [`weighted_sum`] in product order, each as a list of
/// `(reduced word, coefficient)` pairs.
pub fn weighted_sum_factors<C: Coeff>(start: usize, len: usize, x: &C) -> Vec<Vec<(Vec<usize>, C)>> {
    (1..len)
        .map(|r| {
            let mut word = Vec::new();
            let mut xp = C::unit();
            let mut factor = vec![(Vec::new(), C::unit())];
            for j in 1..=r {
                word.push(start + r + 1 - j);
                xp = xp.times(x);
                factor.push((word.clone(), xp.clone()));
            }
            factor
        })
        .collect()
}

/// Numerator `∏_a Σ_{w ∈ 𝔖_{k_a}} q^{ℓ(w)} σ_w` of the parabolic symmetriser.
pub fn parabolic_numerator<C: Coeff>(blocks: &Blocks, ring: &QRing<C>) -> HeckeElem<C> {
    let m = blocks.size();
    let mut acc = HeckeElem::one(m);
    for a in 0..blocks.len() {
        let part = weighted_sum(m, blocks.start(a), blocks.parts()[a], ring.q(), ring);
        acc = acc.mul_in(&part, ring).expect("same size");
    }
    acc
}

/// Denominator `∏_a {k_a}_q!` of the parabolic symmetriser.
pub fn parabolic_denominator(blocks: &Blocks) -> RatFunc {
    blocks
        .parts()
        .iter()
        .fold(RatFunc::one(), |acc, &k| acc.mul(&q_factorial(k as u32, QKind::Brace)))
}

/// The q-symmetriser P_m = Σ q^{ℓ(w)} σ_w / {m}_q!.
pub fn symmetrizer(m: usize) -> HeckeElem<RatFunc> {
    parabolic_symmetrizer(&Blocks::new(vec![m]))
}

/// The q-antisymmetriser P'_m = Σ (−q⁻¹)^{ℓ(w)} σ_w / Σ q^{−2ℓ(w)}.
pub fn antisymmetrizer(m: usize) -> HeckeElem<RatFunc> {
    let ring = QRing::<RatFunc>::generic();
    let x = RatFunc::q_pow(-1).neg();
    let num = weighted_sum(m, 0, m, &x, &ring);
    // Σ_w q^{-2ℓ(w)} = ∏_{j ≤ m} (1 + q^{-2} + ⋯ + q^{-2(j-1)})
    let mut den = RatFunc::one();
    for j in 1..=m as i64 {
        let s = (0..j).fold(RatFunc::zero(), |acc, i| acc.add(&RatFunc::q_pow(-2 * i)));
        den = den.mul(&s);
    }
    num.scale(&den.inv().expect("nonzero"))
}

/// P_{k,n}: the product of the block-local symmetrisers.
pub fn parabolic_symmetrizer(blocks: &Blocks) -> HeckeElem<RatFunc> {
    let ring = QRing::<RatFunc>::generic();
    let inv = parabolic_denominator(blocks).inv().expect("nonzero");
    parabolic_numerator(blocks, &ring).scale(&inv)
}

impl<C: Coeff + Serialize> Serialize for HeckeElem<C> {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = s.serialize_seq(Some(self.terms.len()))?;
        for (w, c) in &self.terms {
            seq.serialize_element(&(w, c))?;
        }
        seq.end()
    }
}
