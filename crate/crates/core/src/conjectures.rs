//! The generalised q-antisymmetriser AS_{k,n}(q) and automated checks of the
//! two conjectures describing the centralisers as quotients:
//! AS_{k,N+1} is central in H_{k,N+1}(q), and it generates the ideal I^N.
//!
//! Two independent routes are used. Direct products in the fused algebra are
//! computed exactly over ℤ[q, q⁻¹] when the algebra is small. For every case,
//! AS also acts on each irreducible W_{k,λ} through its lift P Γ A Γ⁻¹ P,
//! with A applied in factorised form. AS is central exactly when all these
//! blocks are scalar, and the ideal it then generates is the sum of the
//! blocks where the scalar is nonzero.

use crate::error::{Error, Result};
use crate::fused::{dimension, shared_numerators, FusedAlgebra, FusedElem};
use crate::hecke::{generator_inverse, weighted_sum, HeckeElem};
use crate::linalg::{rank_rational, rank_ratfunc, Matrix};
use crate::permcomb::{Blocks, FusedPerm, Perm};
use crate::qcoeff::{rational, three_points, Coeff, FieldCoeff, LPoly, QRing, RatFunc};
use crate::seminormal::FusedModule;
use crate::shapes::{kostka, s_set, Partition};
use crate::sworacle::{kernel_member, tensor_dim};
use num_rational::BigRational;
use rayon::prelude::*;
use serde::Serialize;

fn check_k(k: &[usize], n: usize) -> Result<Blocks> {
    if k.len() < n {
        return Err(Error::OutOfRange(format!("k has {} entries, need {n}", k.len())));
    }
    let k = &k[..n];
    if k.contains(&0) || k.windows(2).any(|w| w[0] < w[1]) {
        return Err(Error::Precondition(format!("{k:?} must be positive and weakly decreasing")));
    }
    Ok(Blocks::new(k.to_vec()))
}

/// Reduced word of Γ: the blocks a = 2..n contribute
/// σ_{k_1+⋯+k_{a−1}} σ_{k_1+⋯+k_{a−1}−1} ⋯ σ_a.
pub fn gamma_word(k: &[usize], n: usize) -> Result<Vec<usize>> {
    check_k(k, n)?;
    let mut word = Vec::new();
    let mut top = k[0];
    for a in 2..=n {
        word.extend((a..=top).rev());
        top += k[a - 1];
    }
    Ok(word)
}

fn gamma_in<C: Coeff>(k: &[usize], n: usize, ring: &QRing<C>) -> Result<(HeckeElem<C>, HeckeElem<C>)> {
    let word = gamma_word(k, n)?;
    let m: usize = k[..n].iter().sum();
    let g = Perm::from_word(m, &word);
    if g.length() != word.len() {
        return Err(Error::Invalid("Γ is not reduced".into()));
    }
    let mut inv = HeckeElem::one(m);
    for &i in word.iter().rev() {
        inv = inv.mul_in(&generator_inverse(m, i, ring)?, ring)?;
    }
    Ok((HeckeElem::basis(g), inv))
}

/// Γ as a single basis element of H_{Σk}(q).
pub fn gamma(k: &[usize], n: usize) -> Result<HeckeElem> {
    Ok(gamma_in(k, n, &QRing::<RatFunc>::generic())?.0)
}

/// Γ⁻¹, expanded through σ_i⁻¹ = σ_i − (q − q⁻¹).
pub fn gamma_inverse(k: &[usize], n: usize) -> Result<HeckeElem> {
    Ok(gamma_in(k, n, &QRing::<RatFunc>::generic())?.1)
}

/// AS_{k,n}(q) with coefficients in ℤ[q, q⁻¹]: the F-basis expansion of
/// P Γ (Σ_{w ∈ 𝔖_n} (−q⁻¹)^{ℓ(w)} σ_w) Γ⁻¹ P.
pub fn as_element_laurent(k: &[usize], n: usize) -> Result<FusedElem<LPoly>> {
    let blocks = check_k(k, n)?;
    let ring = QRing::<LPoly>::generic();
    let (g, g_inv) = gamma_in(k, n, &ring)?;
    let a = weighted_sum(blocks.size(), 0, n, &LPoly::monomial(-1, -1), &ring);
    let x = g.mul_in(&a, &ring)?.mul_in(&g_inv, &ring)?;
    Ok(shared_numerators(&blocks).collapse(&x))
}

pub fn as_element(k: &[usize], n: usize) -> Result<FusedElem> {
    Ok(as_element_laurent(k, n)?.map_coeffs(|c| c.to_ratfunc()))
}

/// AS_{k,n}(1) by the diagram rule: Σ_w (−1)^{ℓ(w)} |w|_k, where |w|_k adds
/// k_a − 1 vertical edges at the a-th ellipses of the diagram of w.
pub fn as_element_classical(k: &[usize], n: usize) -> Result<FusedElem<BigRational>> {
    let blocks = check_k(k, n)?;
    let mut out = FusedElem::zero(&blocks);
    for w in Perm::all(n) {
        let mut mat = vec![vec![0u32; n]; n];
        for a in 0..n {
            mat[a][w.apply(a)] += 1;
            mat[a][a] += k[a] as u32 - 1;
        }
        let sign = if w.length() % 2 == 0 { 1 } else { -1 };
        out.add_term(FusedPerm::new(mat), rational(sign, 1));
    }
    Ok(out)
}

/// AS_{k,n}(q) evaluated at q = 1.
pub fn as_element_at_one(k: &[usize], n: usize) -> Result<FusedElem<BigRational>> {
    Ok(as_element_laurent(k, n)?.map_coeffs(|c| BigRational::from_integer(c.eval_one())))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Verified,
    Failed,
    Skipped,
}

impl Status {
    fn of(ok: bool) -> Self {
        if ok {
            Status::Verified
        } else {
            Status::Failed
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum QMode {
    Symbolic,
    EvaluatedAtPoints,
}

/// How a quantity in the report was obtained.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Method {
    /// Products F_u·AS·F_v over all pairs, rank at a generic point.
    ProductGrid,
    /// Products F_u·AS (enough once AS is known to be central).
    LeftProducts,
    /// Scalars by which AS acts on the irreducibles W_{k,λ}.
    IrreducibleBlocks,
}

/// Tunable limits for the checks.
#[derive(Clone, Debug, Serialize)]
pub struct Budget {
    /// Largest k_1 + ⋯ + k_{N+1} accepted.
    pub max_total: usize,
    /// Irreducible blocks are computed over ℚ(q) up to this total, and at
    /// `points` above it.
    pub symbolic_max_total: usize,
    /// Direct centrality products are run when dim H_{k,N+1} is at most this.
    pub direct_max_dim: usize,
    /// The full F_u·AS·F_v grid is used when dim H_{k,N+1} is at most this.
    pub grid_max_dim: usize,
    /// The grid rank is confirmed over ℚ(q) when the total is at most this.
    pub symbolic_rank_max_total: usize,
    #[serde(serialize_with = "ser_points")]
    pub points: Vec<BigRational>,
}

fn ser_points<S: serde::Serializer>(p: &[BigRational], s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_seq(p.iter().map(|x| x.to_string()))
}

impl Default for Budget {
    fn default() -> Self {
        Budget {
            max_total: 7,
            symbolic_max_total: 6,
            direct_max_dim: 130,
            grid_max_dim: 40,
            symbolic_rank_max_total: 5,
            points: three_points(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BlockScalar {
    pub lambda: Partition,
    pub dim: u64,
    pub scalar: bool,
    pub nonzero: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ConjReport {
    pub k: Vec<usize>,
    #[serde(rename = "N")]
    pub big_n: usize,
    pub algebra_dim: usize,
    pub centrality: Status,
    pub centrality_methods: Vec<Method>,
    pub ideal_dim_expected: u64,
    pub ideal_dim_computed: u64,
    pub ideal_method: Method,
    pub ideal_generation: Status,
    /// AS acts as zero on every W_{k,λ} with l(λ) ≤ N.
    pub kernel_irreducibles: Status,
    /// AS acts as zero on the tensor space (ℚ^N)^{⊗Σk} at the sample points.
    pub kernel_tensor: Status,
    pub q_mode: QMode,
    pub blocks: Vec<BlockScalar>,
}

impl ConjReport {
    pub fn passed(&self) -> bool {
        self.centrality == Status::Verified
            && self.ideal_generation == Status::Verified
            && self.kernel_irreducibles == Status::Verified
            && self.kernel_tensor != Status::Failed
    }
}

/// Σ_{λ ∈ S_{k,N+1}, l(λ) = N+1} K_{λ,k}²: the dimension of I^N in H_{k,N+1}.
pub fn expected_ideal_dim(k: &[usize], big_n: usize) -> Result<u64> {
    let n = big_n + 1;
    let mut total = 0;
    for lambda in s_set(k, n)? {
        if lambda.len() == n {
            let c = kostka(&lambda, &k[..n])?;
            total += c * c;
        }
    }
    Ok(total)
}

/// The matrix of AS_{k,n} on W_{k,λ}, computed from its lift.
pub fn as_block<C: FieldCoeff>(lambda: &Partition, k: &[usize], n: usize, ring: QRing<C>) -> Result<Matrix<C>> {
    let word = gamma_word(k, n)?;
    let module = FusedModule::new(lambda, k, n, ring.clone())?;
    let blocks = module.blocks().clone();
    let x = ring.q_inv().negate();
    let z = ring.z().clone();
    let first = Blocks::new(vec![n]);
    module.operator(|rep, v| {
        let mut y = v.to_vec();
        for &i in &word {
            let s = rep.apply_gen(i, &y);
            y = s.iter().zip(&y).map(|(a, b)| a.minus(&b.times(&z))).collect();
        }
        let y = rep.apply_weighted(&first, &x, &y);
        let y = rep.apply_word(&word, &y);
        rep.apply_symmetrizer(&blocks, &y)
    })
}

/// (is scalar, is nonzero)
fn scalar_shape<C: FieldCoeff>(m: &Matrix<C>) -> (bool, bool) {
    let d = m.rows();
    if d == 0 {
        return (true, false);
    }
    let c = m.get(0, 0).clone();
    let scalar = (0..d).all(|i| (0..d).all(|j| *m.get(i, j) == if i == j { c.clone() } else { C::nil() }));
    (scalar, !c.is_nil())
}

fn block_scalars(k: &[usize], n: usize, budget: &Budget) -> Result<(Vec<BlockScalar>, QMode)> {
    let total: usize = k[..n].iter().sum();
    let symbolic = total <= budget.symbolic_max_total;
    let mut out = Vec::new();
    for lambda in s_set(k, n)? {
        let dim = kostka(&lambda, &k[..n])?;
        let (scalar, nonzero) = if symbolic {
            scalar_shape(&as_block(&lambda, k, n, QRing::<RatFunc>::generic())?)
        } else {
            let mut scalar = true;
            let mut nz = Vec::new();
            for q0 in &budget.points {
                let (s, z) = scalar_shape(&as_block(&lambda, k, n, QRing::at(q0))?);
                scalar &= s;
                nz.push(z);
            }
            // A value that vanishes at some points but not others is not a
            // constant nonzero scalar; treat it as failing both ways.
            let consistent = nz.iter().all(|&b| b == nz[0]);
            (scalar && consistent, nz[0] && consistent)
        };
        out.push(BlockScalar { lambda, dim, scalar, nonzero });
    }
    let mode = if symbolic { QMode::Symbolic } else { QMode::EvaluatedAtPoints };
    Ok((out, mode))
}

fn basis_elem(alg: &FusedAlgebra<LPoly>, i: usize) -> FusedElem<LPoly> {
    FusedElem::basis(alg.blocks(), alg.basis()[i].clone()).expect("basis label")
}

fn eval_rows(alg: &FusedAlgebra<LPoly>, elems: &[FusedElem<LPoly>], q0: &BigRational) -> Matrix<BigRational> {
    let mut m = Matrix::zeros(elems.len(), alg.dim());
    for (r, e) in elems.iter().enumerate() {
        for (c, x) in alg.to_dense(e).into_iter().enumerate() {
            m.set(r, c, x.eval(q0));
        }
    }
    m
}

/// AS·F_w = F_w·AS for every basis element, exactly over ℤ[q, q⁻¹].
/// Returns the products F_w·AS and AS·F_w as well.
fn direct_centrality(alg: &FusedAlgebra<LPoly>, as_l: &FusedElem<LPoly>) -> Result<(bool, Vec<FusedElem<LPoly>>, Vec<FusedElem<LPoly>>)> {
    let mut ok = true;
    let (mut left, mut right) = (Vec::new(), Vec::new());
    for i in 0..alg.dim() {
        let f = basis_elem(alg, i);
        let l = alg.mul_numerators(&f, as_l)?;
        let r = alg.mul_numerators(as_l, &f)?;
        ok &= l == r;
        left.push(l);
        right.push(r);
    }
    Ok((ok, left, right))
}

/// Centrality of AS_{k,N+1} in H_{k,N+1}(q).
pub fn check_centrality(k: &[usize], big_n: usize) -> Result<Status> {
    let n = big_n + 1;
    check_k(k, n)?;
    let budget = Budget::default();
    if k[..n].iter().sum::<usize>() > budget.max_total {
        return Ok(Status::Skipped);
    }
    let (blocks, _) = block_scalars(k, n, &budget)?;
    Ok(Status::of(blocks.iter().all(|b| b.scalar)))
}

pub fn check_ideal_generation(k: &[usize], big_n: usize) -> Result<ConjReport> {
    check_conjectures(k, big_n, &Budget::default())
}

/// Runs every check for (k, N) and assembles the report.
pub fn check_conjectures(k: &[usize], big_n: usize, budget: &Budget) -> Result<ConjReport> {
    if big_n == 0 {
        return Err(Error::OutOfRange("N must be at least 1".into()));
    }
    let n = big_n + 1;
    let blocks = check_k(k, n)?;
    let total = blocks.size();
    if total > budget.max_total {
        return Err(Error::Budget(format!("k_1 + ... + k_{n} = {total} exceeds {}", budget.max_total)));
    }
    let k = &k[..n];
    let expected = expected_ideal_dim(k, big_n)?;
    let as_l = as_element_laurent(k, n)?;
    let alg = shared_numerators(&blocks);
    let q0 = &budget.points[0];

    let (scalars, q_mode) = block_scalars(k, n, budget)?;
    let mut central = scalars.iter().all(|b| b.scalar);
    let mut methods = vec![Method::IrreducibleBlocks];
    let kernel_irr = scalars.iter().filter(|b| b.lambda.len() <= big_n).all(|b| b.scalar && !b.nonzero);
    let from_blocks: u64 = scalars.iter().filter(|b| b.nonzero).map(|b| b.dim * b.dim).sum();

    let (ideal_dim, ideal_method) = if alg.dim() <= budget.direct_max_dim {
        let (ok, left, right) = direct_centrality(&alg, &as_l)?;
        central &= ok;
        methods.push(Method::LeftProducts);
        if alg.dim() <= budget.grid_max_dim {
            let mut grid = Vec::new();
            for u in 0..alg.dim() {
                let f = basis_elem(&alg, u);
                for r in &right {
                    grid.push(alg.mul_numerators(&f, r)?);
                }
            }
            let m = eval_rows(&alg, &grid, q0);
            let r = rank_rational(&m);
            if total <= budget.symbolic_rank_max_total {
                let sym = symbolic_rank(&alg, &grid);
                if sym != r {
                    return Err(Error::Invalid(format!("ideal rank {r} at {q0} but {sym} over ℚ(q)")));
                }
            }
            (r as u64, Method::ProductGrid)
        } else if ok {
            (rank_rational(&eval_rows(&alg, &left, q0)) as u64, Method::LeftProducts)
        } else {
            (from_blocks, Method::IrreducibleBlocks)
        }
    } else {
        (from_blocks, Method::IrreducibleBlocks)
    };

    let kernel_tensor = if tensor_dim(big_n, total).is_ok() {
        let as_rf = as_l.map_coeffs(|c| c.to_ratfunc());
        Status::of(kernel_member(&as_rf, big_n, &budget.points[..2.min(budget.points.len())])?)
    } else {
        Status::Skipped
    };
    let ideal_ok = ideal_dim == expected && kernel_irr && kernel_tensor != Status::Failed;
    Ok(ConjReport {
        k: k.to_vec(),
        big_n,
        algebra_dim: alg.dim(),
        centrality: Status::of(central),
        centrality_methods: methods,
        ideal_dim_expected: expected,
        ideal_dim_computed: ideal_dim,
        ideal_method,
        ideal_generation: Status::of(ideal_ok),
        kernel_irreducibles: Status::of(kernel_irr),
        kernel_tensor,
        q_mode,
        blocks: scalars,
    })
}

/// Rank over ℚ(q) of the span of the given elements.
fn symbolic_rank(alg: &FusedAlgebra<LPoly>, elems: &[FusedElem<LPoly>]) -> usize {
    let rows: Vec<Vec<RatFunc>> = elems.iter().map(|e| alg.to_dense(e).iter().map(|c| c.to_ratfunc()).collect()).collect();
    match Matrix::from_rows(rows) {
        Ok(m) => rank_ratfunc(&m),
        Err(_) => 0,
    }
}

/// All (k, N) with k a partition of at most `max_total` into N+1 ≥ 2 parts.
pub fn sweep_cases(max_total: usize) -> Vec<(Vec<usize>, usize)> {
    let mut out = Vec::new();
    for total in 2..=max_total {
        for p in Partition::all(total) {
            if p.len() >= 2 {
                out.push((p.parts().to_vec(), p.len() - 1));
            }
        }
    }
    out
}

/// Checks every case of [`sweep_cases`]; cases run in parallel and the
/// reports come back in case order.
pub fn sweep(budget: &Budget) -> Result<Vec<ConjReport>> {
    sweep_cases(budget.max_total).par_iter().map(|(k, n)| check_conjectures(k, *n, budget)).collect()
}

/// dim H_{k−1,n}: the algebra the ideal should be isomorphic to, as a
/// cross-check on [`expected_ideal_dim`].
pub fn reduced_algebra_dim(k: &[usize], n: usize) -> usize {
    dimension(&Blocks::new(k[..n].iter().map(|&x| x.saturating_sub(1)).collect()))
}
