//! Fused permutations and the fused Hecke algebra H_{k,n}(q).
//!
//! Elements are combinations of the standard basis F_w, indexed by
//! [`FusedPerm`] matrices. The q-product is computed inside H_m(q) through
//! F_u F_v = P σ_u P σ_v P and the collapse σ_π ↦ q^{ℓ(π)−ℓ(w)} F_w; the
//! q = 1 product is also available purely combinatorially, as an independent
//! check of the Hecke route.

use crate::error::{Error, Result};
use crate::hecke::{parabolic_denominator, parabolic_numerator, HeckeElem};
use crate::permcomb::{collapse, enumerate_fused, matrix_from_perm, rep_from_matrix, Blocks, FusedPerm, Perm};
use crate::qcoeff::{Coeff, LPoly, QRing, RatFunc};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::ser::{Serialize, SerializeSeq, Serializer};
use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, Mutex, OnceLock};

/// A linear combination of standard basis elements F_w.
#[derive(Clone, PartialEq, Debug)]
pub struct FusedElem<C: Coeff = RatFunc> {
    blocks: Blocks,
    terms: BTreeMap<FusedPerm, C>,
}

impl<C: Coeff> FusedElem<C> {
    pub fn zero(blocks: &Blocks) -> Self {
        FusedElem { blocks: blocks.clone(), terms: BTreeMap::new() }
    }

    /// The unit F_id, whose matrix is diagonal.
    pub fn one(blocks: &Blocks) -> Self {
        Self::basis(blocks, FusedPerm::identity(blocks)).expect("identity is valid")
    }

    pub fn basis(blocks: &Blocks, m: FusedPerm) -> Result<Self> {
        m.validate(blocks)?;
        let mut e = Self::zero(blocks);
        e.terms.insert(m, C::unit());
        Ok(e)
    }

    pub fn blocks(&self) -> &Blocks {
        &self.blocks
    }

    pub fn terms(&self) -> &BTreeMap<FusedPerm, C> {
        &self.terms
    }

    pub fn coeff(&self, m: &FusedPerm) -> Option<&C> {
        self.terms.get(m)
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, m: FusedPerm, c: C) {
        if c.is_nil() {
            return;
        }
        let slot = self.terms.entry(m.clone()).or_insert_with(C::nil);
        slot.accumulate(&c);
        if slot.is_nil() {
            self.terms.remove(&m);
        }
    }

    fn check_blocks(&self, other: &Self) -> Result<()> {
        if self.blocks != other.blocks {
            return Err(Error::SizeMismatch(format!(
                "blocks {:?} vs {:?}",
                self.blocks.parts(),
                other.blocks.parts()
            )));
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_blocks(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.scale(&C::from_int(-1)))
    }

    pub fn scale(&self, c: &C) -> Self {
        let mut out = Self::zero(&self.blocks);
        for (m, d) in &self.terms {
            out.add_term(m.clone(), d.times(c));
        }
        out
    }

    pub fn map_coeffs<D: Coeff>(&self, f: impl Fn(&C) -> D) -> FusedElem<D> {
        let mut out = FusedElem::zero(&self.blocks);
        for (m, c) in &self.terms {
            out.add_term(m.clone(), f(c));
        }
        out
    }

    pub fn try_map_coeffs<D: Coeff>(&self, f: impl Fn(&C) -> Result<D>) -> Result<FusedElem<D>> {
        let mut out = FusedElem::zero(&self.blocks);
        for (m, c) in &self.terms {
            out.add_term(m.clone(), f(c)?);
        }
        Ok(out)
    }

    /// Extends every matrix by identity diagonal blocks for the parts `extra`;
    /// the image of H_{k,n} in H_{k,n+extra.len()}.
    pub fn embed(&self, extra: &[usize]) -> Self {
        let mut parts = self.blocks.parts().to_vec();
        parts.extend_from_slice(extra);
        let mut out = Self::zero(&Blocks::new(parts));
        for (m, c) in &self.terms {
            out.add_term(m.embed(extra), c.clone());
        }
        out
    }
}

impl FusedElem<RatFunc> {
    /// Value of every coefficient at `q = q0`.
    pub fn evaluate(&self, q0: &BigRational) -> Result<FusedElem<BigRational>> {
        self.try_map_coeffs(|c| c.evaluate(q0))
    }
}

impl<C: Coeff + Serialize> Serialize for FusedElem<C> {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = s.serialize_seq(Some(self.terms.len()))?;
        for (m, c) in &self.terms {
            seq.serialize_element(&(m, c))?;
        }
        seq.end()
    }
}

/// Number of fused permutations for `blocks`.
pub fn dimension(blocks: &Blocks) -> usize {
    enumerate_fused(blocks).len()
}

/// Structure data for H_{k,n}(q) over a coefficient ring: the ordered basis,
/// the distinguished representatives, and the numerator P̃ = Σ q^{ℓ(w)} σ_w
/// of the parabolic symmetriser (so that P = P̃ / ∏ {k_a}!).
pub struct FusedAlgebra<C: Coeff> {
    blocks: Blocks,
    basis: Vec<FusedPerm>,
    index: HashMap<FusedPerm, usize>,
    reps: Vec<Perm>,
    words: Vec<Vec<usize>>,
    p_num: HeckeElem<C>,
    ring: QRing<C>,
    /// `1 / ∏ {k_a}!` in `C`, when the ring can divide.
    den_inv: Option<C>,
    table: Mutex<HashMap<(usize, usize), Arc<Vec<(usize, C)>>>>,
}

impl<C: Coeff> FusedAlgebra<C> {
    pub fn new(blocks: &Blocks, ring: QRing<C>, den_inv: Option<C>) -> Self {
        let basis = enumerate_fused(blocks);
        let index = basis.iter().enumerate().map(|(i, m)| (m.clone(), i)).collect();
        let reps: Vec<Perm> = basis.iter().map(|m| rep_from_matrix(m, blocks).expect("valid")).collect();
        let words = reps.iter().map(|w| w.reduced_word()).collect();
        let p_num = parabolic_numerator(blocks, &ring);
        FusedAlgebra {
            blocks: blocks.clone(),
            basis,
            index,
            reps,
            words,
            p_num,
            ring,
            den_inv,
            table: Mutex::new(HashMap::new()),
        }
    }

    pub fn blocks(&self) -> &Blocks {
        &self.blocks
    }

    pub fn basis(&self) -> &[FusedPerm] {
        &self.basis
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn index_of(&self, m: &FusedPerm) -> Option<usize> {
        self.index.get(m).copied()
    }

    /// Distinguished representative of basis element `i`.
    pub fn rep(&self, i: usize) -> &Perm {
        &self.reps[i]
    }

    pub fn word(&self, i: usize) -> &[usize] {
        &self.words[i]
    }

    pub fn ring(&self) -> &QRing<C> {
        &self.ring
    }

    /// P̃ = Σ_{w ∈ 𝔖^{k,n}} q^{ℓ(w)} σ_w.
    pub fn p_numerator(&self) -> &HeckeElem<C> {
        &self.p_num
    }

    pub fn den_inv(&self) -> Option<&C> {
        self.den_inv.as_ref()
    }

    /// The linear map x ↦ P x P written in the F basis, up to the factor
    /// (∏{k_a}!)²: each σ_π goes to q^{ℓ(π)−ℓ(w)} F_w.
    pub fn collapse_dense(&self, x: &HeckeElem<C>) -> Vec<C> {
        let mut out = vec![C::nil(); self.dim()];
        for (pi, c) in x.terms() {
            let (i, excess) = self.locate(pi);
            out[i].accumulate(&c.times(&self.ring.q_pow(excess as i64)));
        }
        out
    }

    /// Basis index and length excess of the double coset containing `pi`.
    pub fn locate(&self, pi: &Perm) -> (usize, usize) {
        let m = matrix_from_perm(pi, &self.blocks).expect("size matches");
        let i = self.index[&m];
        (i, pi.length() - self.reps[i].length())
    }

    pub fn collapse(&self, x: &HeckeElem<C>) -> FusedElem<C> {
        self.from_dense(&self.collapse_dense(x))
    }

    pub fn from_dense(&self, v: &[C]) -> FusedElem<C> {
        let mut out = FusedElem::zero(&self.blocks);
        for (i, c) in v.iter().enumerate() {
            out.add_term(self.basis[i].clone(), c.clone());
        }
        out
    }

    pub fn to_dense(&self, e: &FusedElem<C>) -> Vec<C> {
        let mut v = vec![C::nil(); self.dim()];
        for (m, c) in e.terms() {
            v[self.index[m]] = c.clone();
        }
        v
    }

    /// `collapse(σ_u P̃ σ_v)`: the product F_u F_v times ∏{k_a}!.
    pub fn product_numerator(&self, u: usize, v: usize) -> Arc<Vec<(usize, C)>> {
        if let Some(hit) = self.table.lock().unwrap().get(&(u, v)) {
            return hit.clone();
        }
        let x = self.p_num.mul_word_left(&self.words[u], &self.ring).mul_word_right(&self.words[v], &self.ring);
        let dense = self.collapse_dense(&x);
        let sparse: Vec<(usize, C)> = dense.into_iter().enumerate().filter(|(_, c)| !c.is_nil()).collect();
        let sparse = Arc::new(sparse);
        self.table.lock().unwrap().insert((u, v), sparse.clone());
        sparse
    }

    /// Bilinear product of elements given by their numerators: the result is
    /// `a · b` multiplied by ∏{k_a}!.
    pub fn mul_numerators(&self, a: &FusedElem<C>, b: &FusedElem<C>) -> Result<FusedElem<C>> {
        if a.blocks() != &self.blocks || b.blocks() != &self.blocks {
            return Err(Error::SizeMismatch("element blocks differ from algebra".into()));
        }
        let mut out = vec![C::nil(); self.dim()];
        for (mu, cu) in a.terms() {
            for (mv, cv) in b.terms() {
                let c = cu.times(cv);
                for (w, d) in self.product_numerator(self.index[mu], self.index[mv]).iter() {
                    out[*w].accumulate(&d.times(&c));
                }
            }
        }
        Ok(self.from_dense(&out))
    }

    /// The product in H_{k,n}(q); requires a ring in which ∏{k_a}! is invertible.
    pub fn mul(&self, a: &FusedElem<C>, b: &FusedElem<C>) -> Result<FusedElem<C>> {
        let inv = self
            .den_inv
            .as_ref()
            .ok_or_else(|| Error::Invalid("coefficient ring cannot divide by the symmetriser denominator".into()))?;
        Ok(self.mul_numerators(a, b)?.scale(inv))
    }

    /// Lifts an element to P x P inside H_m, up to the factor (∏{k_a}!)².
    pub fn lift_numerator(&self, e: &FusedElem<C>) -> HeckeElem<C> {
        let mut inner = HeckeElem::zero(self.blocks.size());
        for (m, c) in e.terms() {
            inner.add_term(self.reps[self.index[m]].clone(), c.clone());
        }
        let left = self.p_num.mul_in(&inner, &self.ring).expect("same size");
        left.mul_in(&self.p_num, &self.ring).expect("same size")
    }
}

impl FusedAlgebra<RatFunc> {
    pub fn symbolic(blocks: &Blocks) -> Self {
        let inv = parabolic_denominator(blocks).inv().expect("nonzero");
        Self::new(blocks, QRing::generic(), Some(inv))
    }
}

impl FusedAlgebra<LPoly> {
    /// Division-free numerators over ℤ[q, q⁻¹].
    pub fn numerators(blocks: &Blocks) -> Self {
        Self::new(blocks, QRing::generic(), None)
    }
}

impl FusedAlgebra<BigRational> {
    /// Specialisation at `q = q0`.
    pub fn at(blocks: &Blocks, q0: &BigRational) -> Result<Self> {
        let d = parabolic_denominator(blocks).evaluate(q0)?;
        if d.is_zero() {
            return Err(Error::Pole(q0.to_string()));
        }
        Ok(Self::new(blocks, QRing::at(q0), Some(d.recip())))
    }
}

/// Shared Laurent-numerator algebras, one per block composition.
pub fn shared_numerators(blocks: &Blocks) -> Arc<FusedAlgebra<LPoly>> {
    static CACHE: OnceLock<Mutex<HashMap<Blocks, Arc<FusedAlgebra<LPoly>>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(a) = cache.lock().unwrap().get(blocks) {
        return a.clone();
    }
    let a = Arc::new(FusedAlgebra::numerators(blocks));
    cache.lock().unwrap().insert(blocks.clone(), a.clone());
    a
}

/// The product in H_{k,n}(q) over ℚ(q).
pub fn multiply_q(a: &FusedElem<RatFunc>, b: &FusedElem<RatFunc>) -> Result<FusedElem<RatFunc>> {
    a.check_blocks(b)?;
    let alg = shared_numerators(a.blocks());
    let inv = parabolic_denominator(a.blocks()).inv().expect("nonzero");
    let mut out = FusedElem::zero(a.blocks());
    for (mu, cu) in a.terms() {
        for (mv, cv) in b.terms() {
            let c = cu.mul(cv).mul(&inv);
            let u = alg.index_of(mu).expect("basis label");
            let v = alg.index_of(mv).expect("basis label");
            for (w, d) in alg.product_numerator(u, v).iter() {
                out.add_term(alg.basis()[*w].clone(), d.to_ratfunc().mul(&c));
            }
        }
    }
    Ok(out)
}

/// Lifts F-basis coefficients to the element P x P of H_m(q).
pub fn lift(e: &FusedElem<RatFunc>) -> HeckeElem<RatFunc> {
    let alg = FusedAlgebra::<RatFunc>::symbolic(e.blocks());
    let d = alg.den_inv().unwrap().clone();
    alg.lift_numerator(e).scale(&d.mul(&d))
}

/// Collapses an element of P H_m(q) P (given in the σ basis) to the F basis.
pub fn collapse_to_fused(x: &HeckeElem<RatFunc>, blocks: &Blocks) -> Result<FusedElem<RatFunc>> {
    if x.m() != blocks.size() {
        return Err(Error::SizeMismatch("Hecke size differs from Σk".into()));
    }
    let mut out = FusedElem::zero(blocks);
    for (pi, c) in x.terms() {
        let (w, e) = collapse(pi, blocks)?;
        let m = matrix_from_perm(&w, blocks)?;
        out.add_term(m, c.mul(&RatFunc::q_pow(e as i64)));
    }
    Ok(out)
}

fn factorial(n: u32) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, j| acc * j)
}

/// Combinatorial product of two basis diagrams at q = 1: the sum over all
/// ways of joining the strands through the middle ellipses, normalised by
/// ∏ k_a!. Returned as integer weights over the common denominator.
fn classical_basis_product(a: &FusedPerm, b: &FusedPerm, k: &[usize]) -> BTreeMap<FusedPerm, BigRational> {
    let n = k.len();
    // partial[C] = total weight of the middle-ellipse choices made so far.
    let mut partial: BTreeMap<Vec<u32>, BigInt> = BTreeMap::new();
    partial.insert(vec![0; n * n], BigInt::one());
    for mid in 0..n {
        let rows: Vec<u32> = (0..n).map(|i| a.entry(i, mid)).collect();
        let cols: Vec<u32> = (0..n).map(|j| b.entry(mid, j)).collect();
        let base = rows.iter().chain(&cols).fold(BigInt::one(), |acc, &x| acc * factorial(x));
        let mut tables = Vec::new();
        contingency(&rows, &mut cols.clone(), 0, 0, &mut vec![0; n * n], n, &mut tables);
        let mut next: BTreeMap<Vec<u32>, BigInt> = BTreeMap::new();
        for (acc, w) in &partial {
            for t in &tables {
                let denom = t.iter().fold(BigInt::one(), |d, &x| d * factorial(x));
                let weight = &base / denom * w;
                let key: Vec<u32> = acc.iter().zip(t).map(|(x, y)| x + y).collect();
                *next.entry(key).or_insert_with(BigInt::zero) += weight;
            }
        }
        partial = next;
    }
    let norm = k.iter().fold(BigInt::one(), |acc, &x| acc * factorial(x as u32));
    partial
        .into_iter()
        .map(|(flat, w)| {
            let mat = flat.chunks(n.max(1)).map(|r| r.to_vec()).collect::<Vec<_>>();
            let mat = if n == 0 { Vec::new() } else { mat };
            (FusedPerm::new(mat), BigRational::new(w, norm.clone()))
        })
        .collect()
}

/// All nonnegative `n × n` tables with the given row and column sums.
fn contingency(rows: &[u32], cols: &mut [u32], i: usize, j: usize, cur: &mut Vec<u32>, n: usize, out: &mut Vec<Vec<u32>>) {
    if i == n {
        if cols.iter().all(|&c| c == 0) {
            out.push(cur.clone());
        }
        return;
    }
    let used: u32 = cur[i * n..i * n + j].iter().sum();
    let left = rows[i] - used;
    if j == n - 1 {
        if left <= cols[j] {
            cur[i * n + j] = left;
            cols[j] -= left;
            contingency(rows, cols, i + 1, 0, cur, n, out);
            cols[j] += left;
            cur[i * n + j] = 0;
        }
        return;
    }
    for v in 0..=left.min(cols[j]) {
        cur[i * n + j] = v;
        cols[j] -= v;
        contingency(rows, cols, i, j + 1, cur, n, out);
        cols[j] += v;
    }
    cur[i * n + j] = 0;
}

/// The product in H_{k,n}(1), computed from diagrams alone.
pub fn multiply_classical(a: &FusedElem<BigRational>, b: &FusedElem<BigRational>) -> Result<FusedElem<BigRational>> {
    a.check_blocks(b)?;
    let k = a.blocks().parts().to_vec();
    let mut out = FusedElem::zero(a.blocks());
    for (ma, ca) in a.terms() {
        for (mb, cb) in b.terms() {
            let c = ca * cb;
            for (m, w) in classical_basis_product(ma, mb, &k) {
                out.add_term(m, w * &c);
            }
        }
    }
    Ok(out)
}

/// [`multiply_classical`] for ℚ(q)-elements whose coefficients are constants.
pub fn multiply_classical_rf(a: &FusedElem<RatFunc>, b: &FusedElem<RatFunc>) -> Result<FusedElem<RatFunc>> {
    let to_q = |e: &FusedElem<RatFunc>| {
        e.try_map_coeffs(|c| c.as_rational().ok_or_else(|| Error::Precondition(format!("coefficient {c} depends on q"))))
    };
    let r = multiply_classical(&to_q(a)?, &to_q(b)?)?;
    Ok(r.map_coeffs(RatFunc::from_rational))
}

fn check_constant(blocks: &Blocks, i: usize) -> Result<usize> {
    let k = blocks.parts();
    if k.is_empty() || k.iter().any(|&x| x != k[0]) {
        return Err(Error::Precondition(format!("blocks {k:?} are not constant")));
    }
    if i == 0 || i >= k.len() {
        return Err(Error::OutOfRange(format!("index {i} for n = {}", k.len())));
    }
    Ok(k[0])
}

/// Σ_i: all strands of blocks i and i+1 cross.
pub fn sigma_element(blocks: &Blocks, i: usize) -> Result<FusedElem<RatFunc>> {
    let k = check_constant(blocks, i)? as u32;
    let mut m = FusedPerm::identity(blocks).mat().to_vec();
    m[i - 1][i - 1] = 0;
    m[i][i] = 0;
    m[i - 1][i] = k;
    m[i][i - 1] = k;
    FusedElem::basis(blocks, FusedPerm::new(m))
}

/// T_i: a single crossing between blocks i and i+1.
pub fn t_element(blocks: &Blocks, i: usize) -> Result<FusedElem<RatFunc>> {
    let k = check_constant(blocks, i)? as u32;
    let mut m = FusedPerm::identity(blocks).mat().to_vec();
    m[i - 1][i - 1] = k - 1;
    m[i][i] = k - 1;
    m[i - 1][i] = 1;
    m[i][i - 1] = 1;
    FusedElem::basis(blocks, FusedPerm::new(m))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qcoeff::rational;

    fn fp(v: &[&[u32]]) -> FusedPerm {
        FusedPerm::new(v.iter().map(|r| r.to_vec()).collect())
    }

    fn q() -> RatFunc {
        RatFunc::q()
    }

    #[test]
    fn classical_two_by_two() {
        let b = Blocks::new(vec![2, 2]);
        let x = FusedElem::<BigRational>::basis(&b, fp(&[&[1, 1], &[1, 1]])).unwrap();
        let r = multiply_classical(&x, &x).unwrap();
        let mut expected = FusedElem::zero(&b);
        expected.add_term(fp(&[&[2, 0], &[0, 2]]), rational(1, 4));
        expected.add_term(fp(&[&[1, 1], &[1, 1]]), rational(1, 2));
        expected.add_term(fp(&[&[0, 2], &[2, 0]]), rational(1, 4));
        assert_eq!(r, expected);
    }

    #[test]
    fn classical_two_one_one() {
        let b = Blocks::new(vec![2, 1, 1]);
        let x = FusedElem::<BigRational>::basis(&b, fp(&[&[1, 0, 1], &[1, 0, 0], &[0, 1, 0]])).unwrap();
        let y = FusedElem::<BigRational>::basis(&b, fp(&[&[1, 1, 0], &[1, 0, 0], &[0, 0, 1]])).unwrap();
        let r = multiply_classical(&x, &y).unwrap();
        let mut expected = FusedElem::zero(&b);
        expected.add_term(fp(&[&[1, 0, 1], &[0, 1, 0], &[1, 0, 0]]), rational(1, 2));
        expected.add_term(fp(&[&[0, 1, 1], &[1, 0, 0], &[1, 0, 0]]), rational(1, 2));
        assert_eq!(r, expected);
    }

    #[test]
    fn q_product_two_by_two() {
        let b = Blocks::new(vec![2, 2]);
        let x = FusedElem::basis(&b, fp(&[&[1, 1], &[1, 1]])).unwrap();
        let r = multiply_q(&x, &x).unwrap();
        let d = RatFunc::one().add(&q().mul(&q()));
        let d2 = d.mul(&d).inv().unwrap();
        let mid = q().sub(&RatFunc::q_pow(-1)).add(&RatFunc::q_pow(3).scale_int(2));
        let mut expected = FusedElem::zero(&b);
        expected.add_term(fp(&[&[2, 0], &[0, 2]]), d2.clone());
        expected.add_term(fp(&[&[1, 1], &[1, 1]]), mid.mul(&d2));
        expected.add_term(fp(&[&[0, 2], &[2, 0]]), q().mul(&q()).mul(&d2));
        assert_eq!(r, expected);
    }

    #[test]
    fn unit_and_sigma_relations() {
        let b = Blocks::new(vec![2, 2]);
        let one = FusedElem::one(&b);
        let s = sigma_element(&b, 1).unwrap();
        let t = t_element(&b, 1).unwrap();
        assert_eq!(multiply_q(&one, &s).unwrap(), s);
        let z = q().sub(&RatFunc::q_pow(-1));
        let rhs = s.scale(&z).add(&t.scale(&q().mul(&q()))).unwrap();
        assert_eq!(multiply_q(&t, &s).unwrap(), rhs);
        assert_eq!(multiply_q(&s, &t).unwrap(), rhs);
        assert!(sigma_element(&Blocks::new(vec![2, 1]), 1).is_err());
    }

    #[test]
    fn embedding_pads_with_identity() {
        let b = Blocks::new(vec![2, 2]);
        let s = sigma_element(&b, 1).unwrap();
        let e = s.embed(&[2]);
        assert_eq!(e, sigma_element(&Blocks::new(vec![2, 2, 2]), 1).unwrap());
        assert_eq!(FusedElem::<RatFunc>::one(&b).embed(&[2]), FusedElem::one(&Blocks::new(vec![2, 2, 2])));
    }
}
