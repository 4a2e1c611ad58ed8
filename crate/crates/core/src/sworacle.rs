//! Explicit Schur–Weyl oracle: the Ř-matrix action of H_m(q) on (ℚ^N)^{⊗m}
//! at a rational point q0, ranks of centraliser images and kernel tests.
//!
//! Tensor basis vectors e_{j_1}⊗⋯⊗e_{j_m} are indexed lexicographically by
//! (j_1, …, j_m) with letters 0..N. Vectors are kept sparse throughout.

use crate::error::{Error, Result};
use crate::fused::{shared_numerators, FusedElem};
use crate::hecke::HeckeElem;
use crate::linalg::{rank, rank_integer, rank_rational, Matrix};
use crate::permcomb::Blocks;
use crate::qcoeff::{Coeff, Fp, QRing, RatFunc};
use crate::seminormal::symmetrizer_denominator;
use crate::shapes::{kostka, s_set};
use crate::hecke::weighted_sum_factors;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::ser::{SerializeStruct, Serializer};
use serde::Serialize;
use std::collections::{BTreeMap, BTreeSet, HashMap};

/// Largest tensor space the oracle will build.
pub const MAX_TENSOR_DIM: usize = 6561;

/// Above this many matrix entries the centraliser rank is taken modulo a
/// large prime instead of exactly over ℚ.
const EXACT_RANK_BUDGET: usize = 400_000;

/// Tensor spaces up to this size are vectorised in full; larger ones only on
/// the balanced weight space.
const FULL_COLUMNS: usize = 256;

/// Sparse square matrix over ℚ; absent entries are zero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SparseMat {
    dim: usize,
    entries: BTreeMap<(usize, usize), BigRational>,
}

impl SparseMat {
    pub fn zeros(dim: usize) -> Self {
        SparseMat { dim, entries: BTreeMap::new() }
    }

    pub fn identity(dim: usize) -> Self {
        let entries = (0..dim).map(|i| ((i, i), BigRational::one())).collect();
        SparseMat { dim, entries }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, r: usize, c: usize) -> BigRational {
        self.entries.get(&(r, c)).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn entries(&self) -> impl Iterator<Item = (&(usize, usize), &BigRational)> {
        self.entries.iter()
    }

    pub fn nnz(&self) -> usize {
        self.entries.len()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    fn insert(&mut self, r: usize, c: usize, x: BigRational) {
        if !x.is_zero() {
            self.entries.insert((r, c), x);
        }
    }

    fn from_columns(dim: usize, cols: Vec<SVec<BigRational>>) -> Self {
        let mut m = SparseMat::zeros(dim);
        for (c, col) in cols.into_iter().enumerate() {
            for (r, x) in col {
                m.insert(r, c, x);
            }
        }
        m
    }

    pub fn mul(&self, other: &SparseMat) -> Result<SparseMat> {
        if self.dim != other.dim {
            return Err(Error::SizeMismatch(format!("{} vs {}", self.dim, other.dim)));
        }
        let mut rows: Vec<Vec<(usize, &BigRational)>> = vec![Vec::new(); other.dim];
        for (&(r, c), x) in &other.entries {
            rows[r].push((c, x));
        }
        let mut acc: BTreeMap<(usize, usize), BigRational> = BTreeMap::new();
        for (&(r, k), x) in &self.entries {
            for &(c, y) in &rows[k] {
                *acc.entry((r, c)).or_insert_with(BigRational::zero) += x * y;
            }
        }
        acc.retain(|_, x| !x.is_zero());
        Ok(SparseMat { dim: self.dim, entries: acc })
    }

    pub fn add(&self, other: &SparseMat) -> Result<SparseMat> {
        self.axpy(&BigRational::one(), other)
    }

    pub fn sub(&self, other: &SparseMat) -> Result<SparseMat> {
        self.axpy(&-BigRational::one(), other)
    }

    /// self + c·other
    pub fn axpy(&self, c: &BigRational, other: &SparseMat) -> Result<SparseMat> {
        if self.dim != other.dim {
            return Err(Error::SizeMismatch(format!("{} vs {}", self.dim, other.dim)));
        }
        let mut out = self.clone();
        for (&key, y) in &other.entries {
            let slot = out.entries.entry(key).or_insert_with(BigRational::zero);
            *slot += c * y;
            if slot.is_zero() {
                out.entries.remove(&key);
            }
        }
        Ok(out)
    }

    pub fn scale(&self, c: &BigRational) -> SparseMat {
        let mut out = SparseMat::zeros(self.dim);
        for (&(r, k), x) in &self.entries {
            out.insert(r, k, x * c);
        }
        out
    }

    pub fn to_dense(&self) -> Matrix<BigRational> {
        let mut m = Matrix::zeros(self.dim, self.dim);
        for (&(r, c), x) in &self.entries {
            m.set(r, c, x.clone());
        }
        m
    }

    /// Exact rank over ℚ.
    pub fn rank(&self) -> usize {
        rank_rational(&self.to_dense())
    }
}

impl Serialize for SparseMat {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let entries: Vec<(usize, usize, String)> = self.entries.iter().map(|(&(r, c), x)| (r, c, x.to_string())).collect();
        let mut st = s.serialize_struct("SparseMat", 2)?;
        st.serialize_field("dim", &self.dim)?;
        st.serialize_field("entries", &entries)?;
        st.end()
    }
}

type SVec<C> = BTreeMap<usize, C>;

fn check_point(q0: &BigRational) -> Result<()> {
    if q0.is_zero() || q0.abs().is_one() {
        return Err(Error::Precondition(format!("q0 = {q0} is not generic")));
    }
    Ok(())
}

/// N^m, refusing spaces beyond [`MAX_TENSOR_DIM`].
pub fn tensor_dim(n_letters: usize, m: usize) -> Result<usize> {
    if n_letters == 0 {
        return Err(Error::OutOfRange("N must be positive".into()));
    }
    let mut d: usize = 1;
    for _ in 0..m {
        d = d.checked_mul(n_letters).filter(|&d| d <= MAX_TENSOR_DIM).ok_or_else(|| {
            Error::Budget(format!("tensor space ({n_letters})^{m} exceeds {MAX_TENSOR_DIM}"))
        })?;
    }
    Ok(d)
}

/// The action of H_m(q) on the tensor space. A generator sends a diagonal
/// pair to `same`, a rising pair to `swap` on the swapped state plus `lower`
/// on itself, and a falling pair to `swap` on the swapped state alone. Inside
/// the weighted block sums the word of length j out of r carries
/// `wnum^j wden^(r-j)`.
struct Tensor<C: Coeff> {
    n_letters: usize,
    m: usize,
    strides: Vec<usize>,
    same: C,
    lower: C,
    swap: C,
    wnum: C,
    wden: C,
}

impl<C: Coeff> Tensor<C> {
    fn with_weights(n_letters: usize, m: usize, weights: [C; 5]) -> Result<Self> {
        let dim = tensor_dim(n_letters, m)?;
        let mut strides = Vec::with_capacity(m);
        let mut s = dim;
        for _ in 0..m {
            s /= n_letters;
            strides.push(s);
        }
        let [same, lower, swap, wnum, wden] = weights;
        Ok(Tensor { n_letters, m, strides, same, lower, swap, wnum, wden })
    }

    fn new(n_letters: usize, m: usize, ring: &QRing<C>) -> Result<Self> {
        let weights = [ring.q().clone(), ring.z().clone(), C::unit(), ring.q().clone(), C::unit()];
        Self::with_weights(n_letters, m, weights)
    }

    fn dim(&self) -> usize {
        self.strides.first().map_or(1, |s| s * self.n_letters)
    }

    fn digit(&self, idx: usize, t: usize) -> usize {
        (idx / self.strides[t]) % self.n_letters
    }

    /// Ř on tensor factors i, i+1 (1-based i).
    fn gen(&self, i: usize, v: &SVec<C>) -> SVec<C> {
        let (sa, sb) = (self.strides[i - 1], self.strides[i]);
        let mut out = SVec::new();
        let mut push = |k: usize, c: C| {
            let slot = out.entry(k).or_insert_with(C::nil);
            slot.accumulate(&c);
        };
        for (&idx, x) in v {
            let (a, b) = (self.digit(idx, i - 1), self.digit(idx, i));
            if a == b {
                push(idx, x.times(&self.same));
                continue;
            }
            let swapped = idx - a * sa - b * sb + b * sa + a * sb;
            push(swapped, x.times(&self.swap));
            if a < b {
                push(idx, x.times(&self.lower));
            }
        }
        out.retain(|_, c| !c.is_nil());
        out
    }

    fn word(&self, word: &[usize], v: &SVec<C>) -> SVec<C> {
        word.iter().rev().fold(v.clone(), |acc, &i| self.gen(i, &acc))
    }

    /// P̃ v: the product of the weighted sums of all blocks, never expanded.
    fn weighted(&self, blocks: &Blocks, v: &SVec<C>) -> SVec<C> {
        let mut out = v.clone();
        for a in (0..blocks.len()).rev() {
            for factor in weighted_sum_factors(blocks.start(a), blocks.parts()[a], &C::unit()).iter().rev() {
                let r = factor.len() - 1;
                let mut acc = SVec::new();
                for (word, _) in factor {
                    let c = power(&self.wnum, word.len()).times(&power(&self.wden, r - word.len()));
                    axpy(&mut acc, &c, &self.word(word, &out));
                }
                out = acc;
            }
        }
        out
    }

    fn hecke(&self, e: &HeckeElem<C>, v: &SVec<C>) -> SVec<C> {
        let mut acc = SVec::new();
        for (w, c) in e.terms() {
            axpy(&mut acc, c, &self.word(&w.reduced_word(), v));
        }
        acc
    }

    /// Σ c_w P̃ σ_w P̃ v for a fused element, without the 1/D² normalisation.
    fn fused(&self, e: &FusedElem<C>, v: &SVec<C>) -> SVec<C> {
        let alg = shared_numerators(e.blocks());
        let pv = self.weighted(e.blocks(), v);
        let mut acc = SVec::new();
        for (mat, c) in e.terms() {
            let i = alg.index_of(mat).expect("valid basis label");
            axpy(&mut acc, c, &self.word(alg.word(i), &pv));
        }
        self.weighted(e.blocks(), &acc)
    }

    /// Basis indices whose letter multiset is the balanced weight of N letters.
    fn balanced_weight(&self) -> Vec<usize> {
        let (base, extra) = (self.m / self.n_letters, self.m % self.n_letters);
        let target: Vec<usize> = (0..self.n_letters).map(|l| base + usize::from(l < extra)).collect();
        (0..self.dim())
            .filter(|&idx| {
                let mut counts = vec![0; self.n_letters];
                for t in 0..self.m {
                    counts[self.digit(idx, t)] += 1;
                }
                counts == target
            })
            .collect()
    }
}

fn axpy<C: Coeff>(acc: &mut SVec<C>, c: &C, v: &SVec<C>) {
    for (&k, x) in v {
        let slot = acc.entry(k).or_insert_with(C::nil);
        slot.accumulate(&x.times(c));
        if slot.is_nil() {
            acc.remove(&k);
        }
    }
}

fn power<C: Coeff>(x: &C, e: usize) -> C {
    (0..e).fold(C::unit(), |acc, _| acc.times(x))
}

fn unit<C: Coeff>(i: usize) -> SVec<C> {
    SVec::from([(i, C::unit())])
}

fn rational_tensor(n_letters: usize, m: usize, q0: &BigRational) -> Result<Tensor<BigRational>> {
    check_point(q0)?;
    Tensor::new(n_letters, m, &QRing::at(q0))
}

/// The action at q0 = a/b rescaled to integers: each generator is multiplied
/// by b²q0 and each weighted block sum by a power of b². Every image is a
/// nonzero multiple of the true one, so ranks are unchanged and no rational
/// arithmetic is needed.
fn integer_tensor(n_letters: usize, m: usize, q0: &BigRational) -> Result<Tensor<BigInt>> {
    check_point(q0)?;
    let (a, b) = (q0.numer().clone(), q0.denom().clone());
    let (a2, b2) = (&a * &a, &b * &b);
    Tensor::with_weights(n_letters, m, [a2.clone(), &a2 - &b2, &a * &b, BigInt::one(), b2])
}

/// Id ⊗ ⋯ ⊗ Ř ⊗ ⋯ ⊗ Id on factors i, i+1 of (ℚ^N)^{⊗m} at q = q0.
pub fn rmatrix_action(n_letters: usize, m: usize, i: usize, q0: &BigRational) -> Result<SparseMat> {
    if i == 0 || i >= m {
        return Err(Error::OutOfRange(format!("generator {i} in H_{m}")));
    }
    let t = rational_tensor(n_letters, m, q0)?;
    let cols = (0..t.dim()).map(|j| t.gen(i, &unit(j))).collect();
    Ok(SparseMat::from_columns(t.dim(), cols))
}

/// The image of a Hecke algebra element under the Ř-matrix representation.
pub fn rep_matrix_hecke(e: &HeckeElem<RatFunc>, n_letters: usize, q0: &BigRational) -> Result<SparseMat> {
    let t = rational_tensor(n_letters, e.m(), q0)?;
    let ev = e.try_map_coeffs(|c| c.evaluate(q0))?;
    let cols = (0..t.dim()).map(|j| t.hecke(&ev, &unit(j))).collect();
    Ok(SparseMat::from_columns(t.dim(), cols))
}

/// The image of a fused element, each F_w acting as P σ_w P on the whole
/// tensor space.
pub fn rep_matrix(e: &FusedElem<RatFunc>, n_letters: usize, q0: &BigRational) -> Result<SparseMat> {
    let t = rational_tensor(n_letters, e.blocks().size(), q0)?;
    let ev = e.evaluate(q0)?;
    let d = symmetrizer_denominator(e.blocks(), &QRing::at(q0));
    let norm = (&d * &d).recip();
    let cols = (0..t.dim()).map(|j| t.fused(&ev, &unit(j))).collect();
    Ok(SparseMat::from_columns(t.dim(), cols).scale(&norm))
}

/// The matrix of P_{k,n} = P̃ / ∏{k_a}!.
pub fn projector_matrix(blocks: &Blocks, n_letters: usize, q0: &BigRational) -> Result<SparseMat> {
    let t = rational_tensor(n_letters, blocks.size(), q0)?;
    let d = symmetrizer_denominator(blocks, &QRing::at(q0)).recip();
    let cols = (0..t.dim()).map(|j| t.weighted(blocks, &unit(j))).collect();
    Ok(SparseMat::from_columns(t.dim(), cols).scale(&d))
}

/// Σ_{λ ∈ S_{k,n}, l(λ) ≤ N} K_{λ,k}²: the dimension the centraliser is
/// expected to have.
pub fn schur_weyl_dim(k: &[usize], n: usize, n_letters: usize) -> Result<u64> {
    if k.len() < n {
        return Err(Error::OutOfRange(format!("k has {} entries, need {n}", k.len())));
    }
    let mut total = 0;
    for lambda in s_set(k, n)? {
        if lambda.len() <= n_letters {
            let c = kostka(&lambda, &k[..n])?;
            total += c * c;
        }
    }
    Ok(total)
}

/// How a centraliser rank was obtained.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum RankMode {
    /// Fraction-free elimination over ℚ at q0.
    Exact,
    /// Elimination modulo 2^61 − 1 after reducing q0; a lower bound for the
    /// rank over ℚ.
    ModularLowerBound,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CentralizerRank {
    pub dim: usize,
    pub mode: RankMode,
    /// Whether only the balanced weight space was used as test vectors.
    pub weight_restricted: bool,
    pub vectorised_length: usize,
}

/// Rows: the images of the basis F_w, vectorised on the chosen columns.
fn image_rows<C: Coeff>(t: &Tensor<C>, blocks: &Blocks, restrict: bool) -> Vec<SVec<C>> {
    let columns: Vec<usize> = if restrict { t.balanced_weight() } else { (0..t.dim()).collect() };
    let alg = shared_numerators(blocks);
    let mut rows = vec![SVec::new(); alg.dim()];
    for (jpos, &j) in columns.iter().enumerate() {
        let pv = t.weighted(blocks, &unit(j));
        let mut memo: HashMap<Vec<usize>, SVec<C>> = HashMap::new();
        memo.insert(Vec::new(), pv);
        for (b, row) in rows.iter_mut().enumerate() {
            let word = alg.word(b);
            let mut start = word.len();
            while !memo.contains_key(&word[start..]) {
                start -= 1;
            }
            let mut cur = memo[&word[start..]].clone();
            for s in (0..start).rev() {
                cur = t.gen(word[s], &cur);
                memo.insert(word[s..].to_vec(), cur.clone());
            }
            for (r, x) in t.weighted(blocks, &cur) {
                row.insert(r * columns.len() + jpos, x);
            }
        }
    }
    rows
}

fn dense_rows<C: Coeff>(rows: &[SVec<C>]) -> Result<Matrix<C>> {
    let keys: BTreeSet<usize> = rows.iter().flat_map(|r| r.keys().copied()).collect();
    let pos: HashMap<usize, usize> = keys.iter().enumerate().map(|(i, &k)| (k, i)).collect();
    let data = rows
        .iter()
        .map(|r| {
            let mut v = vec![C::nil(); keys.len()];
            for (k, x) in r {
                v[pos[k]] = x.clone();
            }
            v
        })
        .collect();
    if keys.is_empty() {
        return Ok(Matrix::zeros(rows.len(), 0));
    }
    Matrix::from_rows(data)
}

/// Dimension of the image of H_{k,n}(q0) in End((ℚ^N)^{⊗Σk}), with the
/// method used.
pub fn centralizer_rank(k: &[usize], n: usize, n_letters: usize, q0: &BigRational) -> Result<CentralizerRank> {
    if k.len() < n {
        return Err(Error::OutOfRange(format!("k has {} entries, need {n}", k.len())));
    }
    check_point(q0)?;
    let blocks = Blocks::new(k[..n].to_vec());
    let m = blocks.size();
    let big = tensor_dim(n_letters, m)? > FULL_COLUMNS;
    let int = integer_tensor(n_letters, m, q0)?;
    let width = if big { int.balanced_weight().len().pow(2) } else { int.dim().pow(2) };
    let basis = shared_numerators(&blocks).dim();
    if basis * width <= EXACT_RANK_BUDGET {
        let rows = image_rows(&int, &blocks, big);
        let dim = rank_integer(&dense_rows(&rows)?);
        return Ok(CentralizerRank { dim, mode: RankMode::Exact, weight_restricted: big, vectorised_length: width });
    }
    let qp = Fp::from_rational(q0).ok_or_else(|| Error::Pole(format!("{q0} modulo the prime")))?;
    let t = Tensor::new(n_letters, m, &QRing::<Fp>::at_fp(qp))?;
    let rows = image_rows(&t, &blocks, big);
    let dim = rank(&dense_rows(&rows)?);
    Ok(CentralizerRank { dim, mode: RankMode::ModularLowerBound, weight_restricted: big, vectorised_length: width })
}

pub fn centralizer_dim(k: &[usize], n: usize, n_letters: usize, q0: &BigRational) -> Result<usize> {
    Ok(centralizer_rank(k, n, n_letters, q0)?.dim)
}

/// Whether e acts as zero on the tensor space at every sample point. This is
/// a generic-point certificate, not a proof over ℚ(q).
pub fn kernel_member(e: &FusedElem<RatFunc>, n_letters: usize, q0s: &[BigRational]) -> Result<bool> {
    for q0 in q0s {
        let t = rational_tensor(n_letters, e.blocks().size(), q0)?;
        let ev = e.evaluate(q0)?;
        for j in 0..t.dim() {
            if !t.fused(&ev, &unit(j)).is_empty() {
                return Ok(false);
            }
        }
    }
    Ok(true)
}
