//! Seminormal representations of H_m(q) on skew shapes, images of the
//! symmetrisers, and the irreducible representations W_{k,λ} of the fused
//! Hecke algebras.
//!
//! Everything is generic over the coefficient field so the same code runs
//! symbolically over ℚ(q), at rational points, or over 𝔽_p.

use crate::error::{Error, Result};
use crate::fused::{FusedAlgebra, FusedElem};
use crate::hecke::{weighted_sum_factors, HeckeElem};
use crate::linalg::{rank, rank_ratfunc, Matrix};
use crate::permcomb::{enumerate_fused, rep_from_matrix, Blocks, FusedPerm, Perm};
use crate::qcoeff::{q_number, Coeff, FieldCoeff, QKind, QRing, RatFunc};
use crate::shapes::{bar_map, enumerate_semistandard, enumerate_standard, res_set, s_set, Partition, SkewShape, Tableau};
use serde::Serialize;
use std::collections::HashMap;

/// A representation matrix together with the tableaux labelling its basis.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct RepMatrix<C: Coeff + std::fmt::Display = RatFunc> {
    pub labels: Vec<Tableau>,
    pub matrix: Matrix<C>,
}

impl<C: Coeff + std::fmt::Display> RepMatrix<C> {
    pub fn dim(&self) -> usize {
        self.labels.len()
    }
}

/// The seminormal representation V_{λ/μ} with basis v_t, t standard.
pub struct Seminormal<C: FieldCoeff> {
    shape: SkewShape,
    basis: Vec<Tableau>,
    index: HashMap<Tableau, usize>,
    /// `gens[i-1][t]`: the nonzero entries `(row, coeff)` of σ_i v_t.
    gens: Vec<Vec<Vec<(usize, C)>>>,
    ring: QRing<C>,
}

impl<C: FieldCoeff> Seminormal<C> {
    pub fn new(shape: &SkewShape, ring: QRing<C>) -> Self {
        let basis = enumerate_standard(shape);
        let index: HashMap<Tableau, usize> = basis.iter().enumerate().map(|(i, t)| (t.clone(), i)).collect();
        let m = shape.size();
        let mut gens = Vec::new();
        for i in 1..m as u32 {
            let mut cols = Vec::with_capacity(basis.len());
            for t in &basis {
                let c_i = ring.q_pow(2 * t.classical_content(i).unwrap());
                let c_j = ring.q_pow(2 * t.classical_content(i + 1).unwrap());
                let inv = c_j.minus(&c_i).inverse().expect("contents of i and i+1 differ");
                let diag = ring.z().times(&c_j).times(&inv);
                let off = ring.q().times(&c_j).minus(&ring.q_inv().times(&c_i)).times(&inv);
                let mut col = vec![(index[t], diag)];
                if let Some(&s) = index.get(&t.swap(i)) {
                    col.push((s, off));
                }
                cols.push(col);
            }
            gens.push(cols);
        }
        Seminormal { shape: shape.clone(), basis, index, gens, ring }
    }

    pub fn shape(&self) -> &SkewShape {
        &self.shape
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Tableau] {
        &self.basis
    }

    pub fn index_of(&self, t: &Tableau) -> Option<usize> {
        self.index.get(t).copied()
    }

    pub fn ring(&self) -> &QRing<C> {
        &self.ring
    }

    fn check_gen(&self, i: usize) -> Result<()> {
        if i == 0 || i > self.gens.len() {
            return Err(Error::OutOfRange(format!("generator {i} on a shape of size {}", self.shape.size())));
        }
        Ok(())
    }

    /// Dense matrix of σ_i; column `t` holds the coordinates of σ_i v_t.
    pub fn generator_matrix(&self, i: usize) -> Result<Matrix<C>> {
        self.check_gen(i)?;
        let mut m = Matrix::zeros(self.dim(), self.dim());
        for (t, col) in self.gens[i - 1].iter().enumerate() {
            for (r, c) in col {
                m.set(*r, t, c.clone());
            }
        }
        Ok(m)
    }

    /// σ_i v.
    pub fn apply_gen(&self, i: usize, v: &[C]) -> Vec<C> {
        let mut out = vec![C::nil(); v.len()];
        for (t, x) in v.iter().enumerate() {
            if x.is_nil() {
                continue;
            }
            for (r, c) in &self.gens[i - 1][t] {
                out[*r].accumulate(&c.times(x));
            }
        }
        out
    }

    /// σ_{i_1} ⋯ σ_{i_l} v.
    pub fn apply_word(&self, word: &[usize], v: &[C]) -> Vec<C> {
        word.iter().rev().fold(v.to_vec(), |acc, &i| self.apply_gen(i, &acc))
    }

    pub fn apply_hecke(&self, e: &HeckeElem<C>, v: &[C]) -> Result<Vec<C>> {
        if e.m() != self.shape.size() && !(e.m() <= 1 && self.shape.size() <= 1) {
            return Err(Error::SizeMismatch(format!("H_{} acting on a shape of size {}", e.m(), self.shape.size())));
        }
        let mut out = vec![C::nil(); v.len()];
        for (w, c) in e.terms() {
            let y = self.apply_word(&w.reduced_word(), v);
            for (a, b) in out.iter_mut().zip(&y) {
                if !b.is_nil() {
                    a.accumulate(&b.times(c));
                }
            }
        }
        Ok(out)
    }

    /// Matrix of an arbitrary Hecke algebra element.
    pub fn of_hecke(&self, e: &HeckeElem<C>) -> Result<Matrix<C>> {
        let n = self.dim();
        let mut m = Matrix::zeros(n, n);
        for t in 0..n {
            let col = self.apply_hecke(e, &unit_vector(n, t))?;
            for (r, c) in col.into_iter().enumerate() {
                m.set(r, t, c);
            }
        }
        Ok(m)
    }

    /// Σ_{w ∈ 𝔖_{k_1}×⋯} x^{ℓ(w)} σ_w applied to `v`, one coset factor at a time.
    pub fn apply_weighted(&self, blocks: &Blocks, x: &C, v: &[C]) -> Vec<C> {
        let mut out = v.to_vec();
        for a in (0..blocks.len()).rev() {
            let factors = weighted_sum_factors(blocks.start(a), blocks.parts()[a], x);
            for factor in factors.iter().rev() {
                let mut acc = vec![C::nil(); out.len()];
                for (word, c) in factor {
                    let y = self.apply_word(word, &out);
                    for (a, b) in acc.iter_mut().zip(&y) {
                        if !b.is_nil() {
                            a.accumulate(&b.times(c));
                        }
                    }
                }
                out = acc;
            }
        }
        out
    }

    /// P_{k,n} v, for blocks covering the whole shape.
    pub fn apply_symmetrizer(&self, blocks: &Blocks, v: &[C]) -> Vec<C> {
        let d = symmetrizer_denominator(blocks, &self.ring).inverse().expect("generic q");
        self.apply_weighted(blocks, self.ring.q(), v).iter().map(|c| c.times(&d)).collect()
    }
}

fn unit_vector<C: Coeff>(n: usize, i: usize) -> Vec<C> {
    let mut v = vec![C::nil(); n];
    v[i] = C::unit();
    v
}

/// The q-contents c_i(t) = q^{2(col − row)} of the entries 1, …, size.
pub fn contents(t: &Tableau) -> Result<Vec<RatFunc>> {
    (1..=t.size() as u32)
        .map(|x| {
            t.classical_content(x)
                .map(|c| RatFunc::q_pow(2 * c))
                .ok_or_else(|| Error::Invalid(format!("{x} does not occur in the tableau")))
        })
        .collect()
}

/// ∏_a {k_a}_q! = ∏_a ∏_{j ≤ k_a} (1 + q² + ⋯ + q^{2(j−1)}) in the ring.
pub fn symmetrizer_denominator<C: Coeff>(blocks: &Blocks, ring: &QRing<C>) -> C {
    let q2 = ring.q().times(ring.q());
    let mut acc = C::unit();
    for &k in blocks.parts() {
        let mut brace = C::nil();
        let mut pw = C::unit();
        for _ in 0..k {
            brace.accumulate(&pw);
            pw = pw.times(&q2);
            acc = acc.times(&brace);
        }
    }
    acc
}

/// Matrix of σ_i on V_{shape} over ℚ(q).
pub fn generator_matrix(shape: &SkewShape, i: usize) -> Result<RepMatrix> {
    let rep = Seminormal::new(shape, QRing::generic());
    Ok(RepMatrix { matrix: rep.generator_matrix(i)?, labels: rep.basis.clone() })
}

/// The same matrix written with axial distances d and q-numbers:
/// diagonal q^d/[d], off-diagonal [d+1]/[d].
pub fn generator_matrix_axial(shape: &SkewShape, i: usize) -> Result<RepMatrix> {
    let basis = enumerate_standard(shape);
    if i == 0 || i >= shape.size() {
        return Err(Error::OutOfRange(format!("generator {i} on a shape of size {}", shape.size())));
    }
    let index: HashMap<&Tableau, usize> = basis.iter().enumerate().map(|(j, t)| (t, j)).collect();
    let mut m = Matrix::zeros(basis.len(), basis.len());
    for (col, t) in basis.iter().enumerate() {
        let i = i as u32;
        let d = t.classical_content(i + 1).unwrap() - t.classical_content(i).unwrap();
        let bd = q_number(d, QKind::Bracket);
        m.set(col, col, RatFunc::q_pow(d).div(&bd).expect("d ≠ 0"));
        let s = t.swap(i);
        if let Some(&r) = index.get(&s) {
            m.set(r, col, q_number(d + 1, QKind::Bracket).div(&bd).expect("d ≠ 0"));
        }
    }
    Ok(RepMatrix { matrix: m, labels: basis })
}

/// Matrix of a Hecke algebra element on V_{shape} over ℚ(q).
pub fn rep_of_hecke(e: &HeckeElem<RatFunc>, shape: &SkewShape) -> Result<RepMatrix> {
    let rep = Seminormal::new(shape, QRing::generic());
    Ok(RepMatrix { matrix: rep.of_hecke(e)?, labels: rep.basis.clone() })
}

/// Rank of P_k on V_{λ/μ} (k = |λ/μ|) and, when it is one, the spanning vector.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SymmetrizerImage<C: Coeff + std::fmt::Display = RatFunc> {
    pub rank: usize,
    pub vector: Option<Vec<C>>,
}

fn symmetrizer_matrix<C: FieldCoeff>(rep: &Seminormal<C>) -> Matrix<C> {
    let n = rep.dim();
    let blocks = Blocks::new(vec![rep.shape().size()]);
    let mut m = Matrix::zeros(n, n);
    for t in 0..n {
        for (r, c) in rep.apply_symmetrizer(&blocks, &unit_vector(n, t)).into_iter().enumerate() {
            m.set(r, t, c);
        }
    }
    m
}

fn image_from<C: FieldCoeff + std::fmt::Display>(rep: &Seminormal<C>, m: &Matrix<C>, r: usize) -> Result<SymmetrizerImage<C>> {
    let vector = if r == 1 {
        let ones = vec![C::unit(); rep.dim()];
        if m.mul_vec(&ones)? != ones {
            return Err(Error::Invalid("rank one image not spanned by the all-ones vector".into()));
        }
        Some(ones)
    } else {
        None
    };
    Ok(SymmetrizerImage { rank: r, vector })
}

/// Symbolic image of the q-symmetriser, ranked fraction-free over ℤ[q].
pub fn symmetrizer_image(shape: &SkewShape) -> Result<SymmetrizerImage> {
    let rep = Seminormal::new(shape, QRing::generic());
    let m = symmetrizer_matrix(&rep);
    let r = rank_ratfunc(&m);
    image_from(&rep, &m, r)
}

/// Image of the q-symmetriser over an arbitrary coefficient field.
pub fn symmetrizer_image_in<C: FieldCoeff + std::fmt::Display>(shape: &SkewShape, ring: QRing<C>) -> Result<SymmetrizerImage<C>> {
    let rep = Seminormal::new(shape, ring);
    let m = symmetrizer_matrix(&rep);
    let r = rank(&m);
    image_from(&rep, &m, r)
}

/// The irreducible representation W_{k,λ} = P_{k,n}(V_λ) of H_{k,n}(q),
/// in the basis w_T = Σ_{t̄ = T} v_t, T semistandard of weight k_{|n}.
pub struct FusedIrrep<C: FieldCoeff> {
    lambda: Partition,
    blocks: Blocks,
    labels: Vec<Tableau>,
    basis: Vec<FusedPerm>,
    index: HashMap<FusedPerm, usize>,
    mats: Vec<Matrix<C>>,
}

impl<C: FieldCoeff> FusedIrrep<C> {
    pub fn lambda(&self) -> &Partition {
        &self.lambda
    }

    pub fn blocks(&self) -> &Blocks {
        &self.blocks
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    /// Semistandard tableaux labelling the basis vectors w_T.
    pub fn labels(&self) -> &[Tableau] {
        &self.labels
    }

    /// Standard basis of the algebra, in enumeration order.
    pub fn basis(&self) -> &[FusedPerm] {
        &self.basis
    }

    pub fn matrices(&self) -> &[Matrix<C>] {
        &self.mats
    }

    pub fn matrix(&self, w: &FusedPerm) -> Option<&Matrix<C>> {
        self.index.get(w).map(|&i| &self.mats[i])
    }

    /// Matrix of an arbitrary element of H_{k,n}.
    pub fn represent(&self, e: &FusedElem<C>) -> Result<Matrix<C>> {
        let mut acc = Matrix::zeros(self.dim(), self.dim());
        for (w, c) in e.terms() {
            let m = self.matrix(w).ok_or_else(|| Error::SizeMismatch(format!("{w:?} is not a basis label")))?;
            acc.axpy(c, m);
        }
        Ok(acc)
    }

    /// Checks ρ(F_u)ρ(F_v) = ρ(F_u F_v) for the given index pairs, with the
    /// product taken in `alg`.
    pub fn check_morphism(&self, alg: &FusedAlgebra<C>, pairs: &[(usize, usize)]) -> Result<bool> {
        if alg.basis() != self.basis.as_slice() {
            return Err(Error::SizeMismatch("algebra and representation bases differ".into()));
        }
        let d = alg.den_inv().ok_or_else(|| Error::Invalid("algebra cannot divide".into()))?;
        for &(u, v) in pairs {
            let lhs = self.mats[u].mul(&self.mats[v])?;
            let mut rhs = Matrix::zeros(self.dim(), self.dim());
            for (w, c) in alg.product_numerator(u, v).iter() {
                rhs.axpy(&c.times(d), &self.mats[*w]);
            }
            if lhs != rhs {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

/// W_{k,λ} = P_{k,n}(V_λ) as a subspace of the seminormal module V_λ of
/// H_{Σk}(q), with the basis w_T = Σ_{t̄ = T} v_t. Any operator preserving
/// the subspace can be read off in this basis.
pub struct FusedModule<C: FieldCoeff> {
    lambda: Partition,
    blocks: Blocks,
    rep: Seminormal<C>,
    labels: Vec<Tableau>,
    owner: Vec<Option<usize>>,
    first: Vec<usize>,
}

impl<C: FieldCoeff> FusedModule<C> {
    pub fn new(lambda: &Partition, k: &[usize], n: usize, ring: QRing<C>) -> Result<Self> {
        if k.len() < n || !s_set(k, n)?.contains(lambda) {
            return Err(Error::Precondition(format!("{lambda} is not in S_{{k,{n}}}, so W is zero")));
        }
        let blocks = Blocks::new(k[..n].to_vec());
        let weight = blocks.parts().to_vec();
        let shape = SkewShape::straight(lambda.clone());
        let rep = Seminormal::new(&shape, ring);
        let labels = enumerate_semistandard(&shape, &weight)?;
        let label_index: HashMap<&Tableau, usize> = labels.iter().enumerate().map(|(i, t)| (t, i)).collect();
        // owner[t] = which w_T contains v_t, if any.
        let mut owner = vec![None; rep.dim()];
        let mut first = vec![usize::MAX; labels.len()];
        for (ti, t) in rep.basis().iter().enumerate() {
            if let Some(&s) = label_index.get(&bar_map(t, &weight, n)?) {
                owner[ti] = Some(s);
                first[s] = first[s].min(ti);
            }
        }
        Ok(FusedModule { lambda: lambda.clone(), blocks, rep, labels, owner, first })
    }

    pub fn lambda(&self) -> &Partition {
        &self.lambda
    }

    pub fn blocks(&self) -> &Blocks {
        &self.blocks
    }

    pub fn labels(&self) -> &[Tableau] {
        &self.labels
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn seminormal(&self) -> &Seminormal<C> {
        &self.rep
    }

    /// w_T as a vector of V_λ.
    pub fn vector(&self, s: usize) -> Vec<C> {
        self.owner.iter().map(|o| if *o == Some(s) { C::unit() } else { C::nil() }).collect()
    }

    /// Coordinates of a vector of V_λ in the basis w_T; fails when the vector
    /// is not in W_{k,λ}.
    pub fn coordinates(&self, y: &[C]) -> Result<Vec<C>> {
        for (ti, c) in y.iter().enumerate() {
            let expected = self.owner[ti].map_or(C::nil(), |s| y[self.first[s]].clone());
            if *c != expected {
                return Err(Error::Invalid(format!("vector leaves W_{{k,{}}}", self.lambda)));
            }
        }
        Ok(self.first.iter().map(|&f| y[f].clone()).collect())
    }

    /// Matrix of the operator `f` restricted to W_{k,λ}; columns are images.
    pub fn operator(&self, f: impl Fn(&Seminormal<C>, &[C]) -> Vec<C>) -> Result<Matrix<C>> {
        let mut m = Matrix::zeros(self.dim(), self.dim());
        for col in 0..self.dim() {
            let y = self.coordinates(&f(&self.rep, &self.vector(col)))?;
            for (s, c) in y.into_iter().enumerate() {
                m.set(s, col, c);
            }
        }
        Ok(m)
    }
}

/// Builds W_{k,λ} over the given ring.
pub fn fused_irrep_in<C: FieldCoeff>(lambda: &Partition, k: &[usize], n: usize, ring: QRing<C>) -> Result<FusedIrrep<C>> {
    let module = FusedModule::new(lambda, k, n, ring)?;
    let blocks = module.blocks.clone();
    let basis = enumerate_fused(&blocks);
    let index = basis.iter().enumerate().map(|(i, w)| (w.clone(), i)).collect();
    let mut mats = Vec::with_capacity(basis.len());
    for w in &basis {
        let word = rep_from_matrix(w, &blocks)?.reduced_word();
        // P σ_w P w_T = P σ_w w_T, since w_T already lies in P(V_λ).
        let m = module
            .operator(|rep, v| rep.apply_symmetrizer(&blocks, &rep.apply_word(&word, v)))
            .map_err(|_| Error::Invalid(format!("image of {w:?} leaves span of w_T")))?;
        mats.push(m);
    }
    Ok(FusedIrrep { lambda: lambda.clone(), blocks, labels: module.labels, basis, index, mats })
}

/// W_{k,λ} over ℚ(q).
pub fn fused_irrep(lambda: &Partition, k: &[usize], n: usize) -> Result<FusedIrrep<RatFunc>> {
    fused_irrep_in(lambda, k, n, QRing::generic())
}

/// Compares the character of W_{k,λ} restricted to H_{k,n−1} with the sum of
/// the characters of W_{k,μ} over μ ∈ Res_k(λ).
pub fn branching_check_in<C: FieldCoeff>(lambda: &Partition, k: &[usize], n: usize, ring: QRing<C>) -> Result<bool> {
    if n == 0 {
        return Err(Error::OutOfRange("restriction needs n ≥ 1".into()));
    }
    let top = fused_irrep_in(lambda, k, n, ring.clone())?;
    let lower: Vec<FusedIrrep<C>> = res_set(lambda, k, n)?
        .iter()
        .map(|mu| fused_irrep_in(mu, k, n - 1, ring.clone()))
        .collect::<Result<_>>()?;
    let small = Blocks::new(k[..n - 1].to_vec());
    for w in enumerate_fused(&small) {
        let big = w.embed(&[k[n - 1]]);
        let lhs = top.matrix(&big).expect("embedded label").trace();
        let mut rhs = C::nil();
        for irr in &lower {
            rhs.accumulate(&irr.matrix(&w).expect("label").trace());
        }
        if lhs != rhs {
            return Ok(false);
        }
    }
    Ok(true)
}

pub fn branching_check(lambda: &Partition, k: &[usize], n: usize) -> Result<bool> {
    branching_check_in(lambda, k, n, QRing::<RatFunc>::generic())
}

/// ρ(σ_w) for a permutation, through a reduced word.
pub fn perm_matrix<C: FieldCoeff>(rep: &Seminormal<C>, w: &Perm) -> Matrix<C> {
    let n = rep.dim();
    let word = w.reduced_word();
    let mut m = Matrix::zeros(n, n);
    for t in 0..n {
        for (r, c) in rep.apply_word(&word, &unit_vector(n, t)).into_iter().enumerate() {
            m.set(r, t, c);
        }
    }
    m
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qcoeff::rational;
    use crate::shapes::kostka;
    use num_rational::BigRational;

    fn p(v: &[usize]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    fn shape(v: &[usize]) -> SkewShape {
        SkewShape::straight(p(v))
    }

    #[test]
    fn one_dimensional_reps() {
        let q = RatFunc::q();
        for i in 1..4 {
            assert_eq!(generator_matrix(&shape(&[4]), i).unwrap().matrix, Matrix::from_rows(vec![vec![q.clone()]]).unwrap());
            let col = generator_matrix(&shape(&[1, 1, 1, 1]), i).unwrap().matrix;
            assert_eq!(col, Matrix::from_rows(vec![vec![RatFunc::q_pow(-1).neg()]]).unwrap());
        }
        assert!(generator_matrix(&shape(&[2]), 2).is_err());
    }

    #[test]
    fn quadratic_and_braid() {
        let ring = QRing::<RatFunc>::generic();
        let rep = Seminormal::new(&shape(&[3, 1]), ring.clone());
        let id = Matrix::identity(rep.dim());
        for i in 1..4 {
            let s = rep.generator_matrix(i).unwrap();
            assert_eq!(s.mul(&s).unwrap(), s.scale(ring.z()).add(&id).unwrap());
        }
        let rep = Seminormal::new(&shape(&[2, 2, 1]), ring);
        for i in 1..4 {
            let a = rep.generator_matrix(i).unwrap();
            let b = rep.generator_matrix(i + 1).unwrap();
            let aba = a.mul(&b).unwrap().mul(&a).unwrap();
            let bab = b.mul(&a).unwrap().mul(&b).unwrap();
            assert!(aba.sub(&bab).unwrap().is_zero());
        }
    }

    #[test]
    fn axial_form_agrees() {
        for sh in [shape(&[3, 1]), shape(&[2, 2, 1]), SkewShape::new(p(&[3, 2]), p(&[1])).unwrap()] {
            for i in 1..sh.size() {
                assert_eq!(generator_matrix(&sh, i).unwrap(), generator_matrix_axial(&sh, i).unwrap());
            }
        }
    }

    #[test]
    fn symmetrizer_images() {
        assert_eq!(symmetrizer_image(&shape(&[3])).unwrap().rank, 1);
        let two_col = SkewShape::new(p(&[2, 2]), p(&[1])).unwrap();
        assert_eq!(symmetrizer_image(&two_col).unwrap(), SymmetrizerImage { rank: 0, vector: None });
        let strip = SkewShape::new(p(&[3, 1]), p(&[1])).unwrap();
        let img = symmetrizer_image(&strip).unwrap();
        assert_eq!(img.rank, 1);
        assert_eq!(img.vector.unwrap().len(), 3);
    }

    #[test]
    fn example_irrep() {
        let w = fused_irrep(&p(&[3, 1]), &[2, 2], 2).unwrap();
        assert_eq!(w.dim(), 1);
        assert_eq!(w.labels()[0], Tableau::from_entries(&[&[1, 1, 2], &[2]]).unwrap());
        let alg = FusedAlgebra::<RatFunc>::symbolic(&Blocks::new(vec![2, 2]));
        let pairs: Vec<(usize, usize)> = (0..alg.dim()).flat_map(|u| (0..alg.dim()).map(move |v| (u, v))).collect();
        assert!(w.check_morphism(&alg, &pairs).unwrap());
        assert!(fused_irrep(&p(&[2, 2]), &[3, 1], 2).is_err());
    }

    #[test]
    fn dimensions_are_kostka_numbers() {
        let k = [2, 1, 2];
        let ring = QRing::<BigRational>::at(&rational(7, 5));
        let mut total = 0;
        for lambda in s_set(&k, 3).unwrap() {
            let w = fused_irrep_in(&lambda, &k, 3, ring.clone()).unwrap();
            assert_eq!(w.dim() as u64, kostka(&lambda, &k).unwrap());
            total += w.dim() * w.dim();
        }
        assert_eq!(total, enumerate_fused(&Blocks::new(k.to_vec())).len());
    }

    #[test]
    fn branching() {
        assert!(branching_check(&p(&[2]), &[2], 1).unwrap());
        let ring = QRing::<BigRational>::at(&rational(7, 5));
        assert!(branching_check_in(&p(&[4, 2]), &[2, 2, 2], 3, ring.clone()).unwrap());
        assert_eq!(res_set(&p(&[4, 2]), &[2, 2, 2], 3).unwrap(), vec![p(&[4]), p(&[3, 1]), p(&[2, 2])]);
        assert_eq!(res_set(&p(&[4, 1]), &[3, 1, 1], 3).unwrap(), vec![p(&[4]), p(&[3, 1])]);
        assert!(branching_check_in(&p(&[4, 1]), &[3, 1, 1], 3, ring).unwrap());
    }
}
