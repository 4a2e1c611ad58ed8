//! Permutations, block compositions and distinguished double-coset
//! representatives.
//!
//! Products follow the diagram convention: `a.compose(&b)` stacks the diagram
//! of `a` on top of `b`, so `(a·b)(i) = b(a(i))`. With this convention the
//! block-multiplicity matrix of a product is read top to bottom, matching the
//! order in which fused diagrams are concatenated.

use crate::error::{Error, Result};
use serde::{Serialize, Serializer};
use smallvec::SmallVec;
use std::fmt;

type Images = SmallVec<[u8; 16]>;

/// A permutation of `{0, …, m-1}`, stored in one-line notation.
///
/// The public interface is 1-based, matching the usual one-line notation and
/// the generator names `s_1, …, s_{m-1}`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Perm {
    images: Images,
}

impl Perm {
    pub fn identity(m: usize) -> Self {
        assert!(m < 256, "permutations are limited to 255 points");
        Perm { images: (0..m as u8).collect() }
    }

    /// Builds a permutation from 1-based one-line notation.
    pub fn from_one_line(v: &[usize]) -> Result<Self> {
        let m = v.len();
        let mut seen = vec![false; m];
        for &x in v {
            if x == 0 || x > m || seen[x - 1] {
                return Err(Error::Invalid(format!("{v:?} is not a permutation")));
            }
            seen[x - 1] = true;
        }
        Ok(Perm { images: v.iter().map(|&x| (x - 1) as u8).collect() })
    }

    /// The simple transposition `s_i` (1-based, swapping `i` and `i+1`).
    pub fn simple(m: usize, i: usize) -> Self {
        assert!(i >= 1 && i < m, "generator index out of range");
        let mut p = Self::identity(m);
        p.images.swap(i - 1, i);
        p
    }

    /// The product `s_{w[0]} · s_{w[1]} · …`.
    pub fn from_word(m: usize, word: &[usize]) -> Self {
        word.iter().fold(Self::identity(m), |p, &i| p.mul_simple_right(i))
    }

    pub fn size(&self) -> usize {
        self.images.len()
    }

    /// 0-based image of a 0-based point.
    #[inline]
    pub fn apply(&self, i: usize) -> usize {
        self.images[i] as usize
    }

    /// 1-based one-line notation.
    pub fn one_line(&self) -> Vec<usize> {
        self.images.iter().map(|&x| x as usize + 1).collect()
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| i == x as usize)
    }

    /// `self · other`, the diagram of `self` on top: `i ↦ other(self(i))`.
    pub fn compose(&self, other: &Perm) -> Result<Perm> {
        if self.size() != other.size() {
            return Err(Error::SizeMismatch(format!("{} vs {}", self.size(), other.size())));
        }
        Ok(Perm { images: self.images.iter().map(|&x| other.images[x as usize]).collect() })
    }

    pub fn inverse(&self) -> Perm {
        let mut inv: Images = SmallVec::from_elem(0, self.size());
        for (i, &x) in self.images.iter().enumerate() {
            inv[x as usize] = i as u8;
        }
        Perm { images: inv }
    }

    /// Number of inversions.
    pub fn length(&self) -> usize {
        let v = &self.images;
        let mut count = 0;
        for i in 0..v.len() {
            for j in i + 1..v.len() {
                if v[i] > v[j] {
                    count += 1;
                }
            }
        }
        count
    }

    /// `self · s_i`: swaps the values `i` and `i+1`.
    pub fn mul_simple_right(&self, i: usize) -> Perm {
        let mut p = self.clone();
        let (a, b) = ((i - 1) as u8, i as u8);
        for x in p.images.iter_mut() {
            if *x == a {
                *x = b;
            } else if *x == b {
                *x = a;
            }
        }
        p
    }

    /// `s_i · self`: swaps the positions `i` and `i+1`.
    pub fn mul_simple_left(&self, i: usize) -> Perm {
        let mut p = self.clone();
        p.images.swap(i - 1, i);
        p
    }

    /// True when `ℓ(self · s_i) < ℓ(self)`.
    pub fn is_right_descent(&self, i: usize) -> bool {
        let (a, b) = ((i - 1) as u8, i as u8);
        self.images.iter().position(|&x| x == b) < self.images.iter().position(|&x| x == a)
    }

    /// True when `ℓ(s_i · self) < ℓ(self)`.
    pub fn is_left_descent(&self, i: usize) -> bool {
        self.images[i - 1] > self.images[i]
    }

    /// The lexicographically smallest reduced word `[i_1, …, i_l]` with
    /// `self = s_{i_1} ⋯ s_{i_l}`.
    pub fn reduced_word(&self) -> Vec<usize> {
        let mut w = self.clone();
        let mut word = Vec::new();
        while let Some(i) = (1..w.size()).find(|&i| w.is_left_descent(i)) {
            word.push(i);
            w = w.mul_simple_left(i);
        }
        word
    }

    /// All permutations of size `m` in lexicographic one-line order.
    pub fn all(m: usize) -> Vec<Perm> {
        let mut out = Vec::new();
        let mut cur = Self::identity(m);
        loop {
            out.push(cur.clone());
            // next lexicographic permutation
            let v = &mut cur.images;
            let Some(i) = (1..v.len()).rev().find(|&i| v[i - 1] < v[i]) else {
                break;
            };
            let j = (i..v.len()).rev().find(|&j| v[j] > v[i - 1]).unwrap();
            v.swap(i - 1, j);
            v[i..].reverse();
        }
        out
    }
}

impl fmt::Debug for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.one_line())
    }
}

impl fmt::Display for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.one_line().iter().map(|x| x.to_string()).collect();
        write!(f, "[{}]", s.join(","))
    }
}

impl Serialize for Perm {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.one_line().serialize(s)
    }
}

/// A composition `(k_1, …, k_n)` cutting `{1, …, m}` into consecutive blocks.
/// Empty blocks (`k_a = 0`) are allowed.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Serialize)]
pub struct Blocks {
    parts: Vec<usize>,
}

impl Blocks {
    pub fn new(parts: Vec<usize>) -> Self {
        Blocks { parts }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// Number of blocks `n`.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Total size `m = Σ k_a`.
    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    /// 0-based first position of block `a`.
    pub fn start(&self, a: usize) -> usize {
        self.parts[..a].iter().sum()
    }

    pub fn range(&self, a: usize) -> std::ops::Range<usize> {
        let s = self.start(a);
        s..s + self.parts[a]
    }

    /// Block index of each 0-based position.
    pub fn block_of(&self) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.size());
        for (a, &k) in self.parts.iter().enumerate() {
            out.extend(std::iter::repeat_n(a, k));
        }
        out
    }

    /// The generators `s_i` (1-based) lying inside some block; they generate
    /// the parabolic subgroup 𝔖^{k,n}.
    pub fn internal_generators(&self) -> Vec<usize> {
        let mut out = Vec::new();
        for a in 0..self.len() {
            let r = self.range(a);
            out.extend(r.start + 1..r.end);
        }
        out
    }

    /// The first `n` blocks.
    pub fn truncate(&self, n: usize) -> Blocks {
        Blocks::new(self.parts[..n].to_vec())
    }
}

/// True when `w` and `w^{-1}` are increasing on every block.
pub fn is_distinguished(w: &Perm, blocks: &Blocks) -> bool {
    let inv = w.inverse();
    (0..blocks.len()).all(|a| {
        let r = blocks.range(a);
        r.clone().skip(1).all(|i| w.apply(i - 1) < w.apply(i))
            && r.skip(1).all(|i| inv.apply(i - 1) < inv.apply(i))
    })
}

/// The block-multiplicity matrix: entry `(a, b)` counts the points of block
/// `a` sent into block `b`.
pub fn matrix_from_perm(w: &Perm, blocks: &Blocks) -> Result<FusedPerm> {
    if w.size() != blocks.size() {
        return Err(Error::SizeMismatch(format!("perm of size {} vs blocks {:?}", w.size(), blocks.parts)));
    }
    let of = blocks.block_of();
    let n = blocks.len();
    let mut mat = vec![vec![0u32; n]; n];
    for i in 0..w.size() {
        mat[of[i]][of[w.apply(i)]] += 1;
    }
    Ok(FusedPerm { mat })
}

/// The unique distinguished permutation with block-multiplicity matrix `m`.
///
/// Within domain block `a` the targets are listed in increasing order, and
/// within codomain block `b` the positions are handed out in increasing order
/// of the source block.
pub fn rep_from_matrix(m: &FusedPerm, blocks: &Blocks) -> Result<Perm> {
    m.validate(blocks)?;
    let n = blocks.len();
    let mut next: Vec<usize> = (0..n).map(|b| blocks.start(b)).collect();
    let mut images: Images = SmallVec::with_capacity(blocks.size());
    for a in 0..n {
        for b in 0..n {
            for _ in 0..m.mat[a][b] {
                images.push(next[b] as u8);
                next[b] += 1;
            }
        }
    }
    Ok(Perm { images })
}

/// Distinguished representative of the double coset of `pi` together with
/// the length difference `ℓ(pi) - ℓ(w)`.
pub fn collapse(pi: &Perm, blocks: &Blocks) -> Result<(Perm, usize)> {
    let w = rep_from_matrix(&matrix_from_perm(pi, blocks)?, blocks)?;
    let excess = pi.length() - w.length();
    Ok((w, excess))
}

/// A fused permutation: an `n × n` matrix of nonnegative integers whose row
/// and column sums are both `k`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FusedPerm {
    mat: Vec<Vec<u32>>,
}

impl FusedPerm {
    pub fn new(mat: Vec<Vec<u32>>) -> Self {
        FusedPerm { mat }
    }

    pub fn identity(blocks: &Blocks) -> Self {
        let n = blocks.len();
        let mut mat = vec![vec![0u32; n]; n];
        for (a, &k) in blocks.parts().iter().enumerate() {
            mat[a][a] = k as u32;
        }
        FusedPerm { mat }
    }

    pub fn mat(&self) -> &[Vec<u32>] {
        &self.mat
    }

    pub fn entry(&self, a: usize, b: usize) -> u32 {
        self.mat[a][b]
    }

    pub fn n(&self) -> usize {
        self.mat.len()
    }

    pub fn validate(&self, blocks: &Blocks) -> Result<()> {
        let n = blocks.len();
        if self.mat.len() != n || self.mat.iter().any(|r| r.len() != n) {
            return Err(Error::Invalid(format!("matrix is not {n}x{n}")));
        }
        for a in 0..n {
            let row: u32 = self.mat[a].iter().sum();
            let col: u32 = self.mat.iter().map(|r| r[a]).sum();
            if row as usize != blocks.parts()[a] || col as usize != blocks.parts()[a] {
                return Err(Error::Invalid(format!(
                    "row/column {a} sums ({row}, {col}) differ from k = {}",
                    blocks.parts()[a]
                )));
            }
        }
        Ok(())
    }

    /// Transposed matrix; corresponds to the inverse permutation.
    pub fn transpose(&self) -> Self {
        let n = self.n();
        FusedPerm { mat: (0..n).map(|a| (0..n).map(|b| self.mat[b][a]).collect()).collect() }
    }

    /// Extends by identity diagonal blocks for the additional parts.
    pub fn embed(&self, extra: &[usize]) -> Self {
        let n = self.n();
        let total = n + extra.len();
        let mut mat = vec![vec![0u32; total]; total];
        for a in 0..n {
            mat[a][..n].copy_from_slice(&self.mat[a]);
        }
        for (j, &k) in extra.iter().enumerate() {
            mat[n + j][n + j] = k as u32;
        }
        FusedPerm { mat }
    }
}

impl fmt::Debug for FusedPerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.mat)
    }
}

impl Serialize for FusedPerm {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.mat.serialize(s)
    }
}

/// All fused permutations for `blocks`, in row-major lexicographic order.
pub fn enumerate_fused(blocks: &Blocks) -> Vec<FusedPerm> {
    let n = blocks.len();
    let k: Vec<u32> = blocks.parts().iter().map(|&x| x as u32).collect();
    let mut out = Vec::new();
    let mut mat = vec![vec![0u32; n]; n];
    let mut col_left = k.clone();
    fill(0, 0, &k, &mut col_left, k.first().copied().unwrap_or(0), &mut mat, &mut out);
    out
}

fn fill(
    a: usize,
    b: usize,
    k: &[u32],
    col_left: &mut [u32],
    row_left: u32,
    mat: &mut Vec<Vec<u32>>,
    out: &mut Vec<FusedPerm>,
) {
    let n = k.len();
    if a == n {
        out.push(FusedPerm { mat: mat.clone() });
        return;
    }
    if b == n - 1 {
        // The last entry of a row is forced.
        if row_left > col_left[b] {
            return;
        }
        mat[a][b] = row_left;
        col_left[b] -= row_left;
        let next_row = k.get(a + 1).copied().unwrap_or(0);
        fill(a + 1, 0, k, col_left, next_row, mat, out);
        col_left[b] += row_left;
        mat[a][b] = 0;
        return;
    }
    for v in 0..=row_left.min(col_left[b]) {
        mat[a][b] = v;
        col_left[b] -= v;
        fill(a, b + 1, k, col_left, row_left - v, mat, out);
        col_left[b] += v;
    }
    mat[a][b] = 0;
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: &[usize]) -> Perm {
        Perm::from_one_line(v).unwrap()
    }

    #[test]
    fn lengths_and_words() {
        assert_eq!(Perm::identity(4).length(), 0);
        let w0 = p(&[3, 2, 1]);
        assert_eq!(w0.length(), 3);
        assert_eq!(w0.reduced_word(), vec![1, 2, 1]);
        let s1 = Perm::simple(3, 1);
        assert!(s1.compose(&s1).unwrap().is_identity());
        for w in Perm::all(4) {
            let word = w.reduced_word();
            assert_eq!(word.len(), w.length());
            assert_eq!(Perm::from_word(4, &word), w);
        }
    }

    #[test]
    fn composition_convention() {
        // s_1 then s_2 as diagrams: 1 -> 2 -> 3.
        let a = Perm::simple(3, 1).compose(&Perm::simple(3, 2)).unwrap();
        assert_eq!(a.apply(0), 2);
        assert_eq!(a, Perm::identity(3).mul_simple_right(1).mul_simple_right(2));
        assert!(Perm::identity(2).compose(&Perm::identity(3)).is_err());
    }

    #[test]
    fn distinguished_examples() {
        let b = Blocks::new(vec![2, 1, 1]);
        assert!(is_distinguished(&Perm::identity(4), &b));
        assert!(!is_distinguished(&Perm::simple(4, 1), &b));
        assert!(is_distinguished(&Perm::simple(4, 2), &b));
    }

    #[test]
    fn collapse_examples() {
        let b = Blocks::new(vec![2, 1, 1]);
        assert_eq!(collapse(&Perm::simple(4, 1), &b).unwrap(), (Perm::identity(4), 1));
        let b21 = Blocks::new(vec![2, 1]);
        let (w, e) = collapse(&p(&[3, 2, 1]), &b21).unwrap();
        assert!(is_distinguished(&w, &b21));
        assert_eq!(w.length() + e, 3);
    }

    #[test]
    fn matrix_reconstruction() {
        let b = Blocks::new(vec![2, 2]);
        let m = FusedPerm::new(vec![vec![1, 1], vec![1, 1]]);
        let w = rep_from_matrix(&m, &b).unwrap();
        assert_eq!(w, p(&[1, 3, 2, 4]));
        assert_eq!(w, Perm::simple(4, 2));
        assert!(is_distinguished(&w, &b));
        assert_eq!(matrix_from_perm(&w, &b).unwrap(), m);
        assert_eq!(rep_from_matrix(&FusedPerm::identity(&b), &b).unwrap(), Perm::identity(4));
        assert!(rep_from_matrix(&FusedPerm::new(vec![vec![2, 1], vec![0, 1]]), &b).is_err());
    }

    #[test]
    fn enumeration_counts() {
        let count = |v: &[usize]| enumerate_fused(&Blocks::new(v.to_vec())).len();
        assert_eq!(count(&[2, 1, 1]), 7);
        assert_eq!(count(&[2, 2]), 3);
        assert_eq!(count(&[2, 2, 2]), 21);
        assert_eq!(count(&[1, 1, 1, 1]), 24);
        assert_eq!(count(&[]), 1);
        let list = enumerate_fused(&Blocks::new(vec![2, 2, 2]));
        assert!(list.windows(2).all(|w| w[0] < w[1]));
    }
}
