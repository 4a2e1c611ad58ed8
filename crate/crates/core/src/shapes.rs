//! Partitions, skew shapes and Young tableaux, with the tableau combinatorics
//! that parametrises representations of the fused Hecke algebras.

use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};
use std::collections::HashMap;
use std::fmt;

/// A partition stored without trailing zeros.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Partition {
    parts: Vec<usize>,
}

impl TryFrom<Vec<usize>> for Partition {
    type Error = Error;
    fn try_from(v: Vec<usize>) -> Result<Self> {
        Partition::new(v)
    }
}

impl From<Partition> for Vec<usize> {
    fn from(p: Partition) -> Self {
        p.parts
    }
}

/// Reverse lexicographic: (3) < (2,1) < (1,1,1).
impl Ord for Partition {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        other.parts.cmp(&self.parts)
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Partition {
    /// Accepts trailing zeros and drops them; rejects increasing sequences.
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.windows(2).any(|w| w[0] < w[1]) || parts.contains(&0) {
            return Err(Error::Invalid(format!("{parts:?} is not a partition")));
        }
        Ok(Partition { parts })
    }

    pub fn empty() -> Self {
        Partition::default()
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Number of nonzero parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// λ_i with the convention λ_i = 0 past the last part (0-based index).
    pub fn part(&self, i: usize) -> usize {
        self.parts.get(i).copied().unwrap_or(0)
    }

    pub fn conjugate(&self) -> Partition {
        let cols = self.part(0);
        Partition { parts: (0..cols).map(|c| self.parts.iter().filter(|&&p| p > c).count()).collect() }
    }

    /// Node-set inclusion.
    pub fn contains(&self, other: &Partition) -> bool {
        other.len() <= self.len() && other.parts.iter().enumerate().all(|(i, &p)| p <= self.parts[i])
    }

    /// All partitions of `n`, in reverse lexicographic order.
    pub fn all(n: usize) -> Vec<Partition> {
        Self::all_bounded(n, usize::MAX)
    }

    /// Partitions of `n` with at most `max_len` parts.
    pub fn all_bounded(n: usize, max_len: usize) -> Vec<Partition> {
        fn go(rest: usize, max_part: usize, max_len: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
            if rest == 0 {
                out.push(Partition { parts: cur.clone() });
                return;
            }
            if cur.len() == max_len {
                return;
            }
            for p in (1..=rest.min(max_part)).rev() {
                cur.push(p);
                go(rest - p, p, max_len, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        go(n, n, max_len, &mut Vec::new(), &mut out);
        out
    }

    /// Number of standard tableaux, by the hook length formula.
    pub fn hook_count(&self) -> u128 {
        let conj = self.conjugate();
        let num: u128 = (1..=self.size() as u128).product();
        let hooks: u128 = self
            .parts
            .iter()
            .enumerate()
            .flat_map(|(r, &len)| {
                let conj = &conj;
                (0..len).map(move |c| (len - c + conj.parts[c] - r - 1) as u128)
            })
            .product();
        num / hooks
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.parts.iter().map(|p| p.to_string()).collect();
        write!(f, "({})", s.join(","))
    }
}

/// The decreasing rearrangement μ^ord of a composition, zeros dropped.
pub fn ordered(mu: &[usize]) -> Partition {
    let mut v: Vec<usize> = mu.iter().copied().filter(|&x| x > 0).collect();
    v.sort_unstable_by(|a, b| b.cmp(a));
    Partition { parts: v }
}

/// Dominance order λ ≥ μ.
pub fn dominance_geq(lambda: &Partition, mu: &Partition) -> Result<bool> {
    if lambda.size() != mu.size() {
        return Err(Error::SizeMismatch(format!("|{lambda}| != |{mu}|")));
    }
    let len = lambda.len().max(mu.len());
    let (mut a, mut b) = (0, 0);
    for i in 0..len {
        a += lambda.part(i);
        b += mu.part(i);
        if a < b {
            return Ok(false);
        }
    }
    Ok(true)
}

/// A skew shape λ/μ.
#[derive(Clone, PartialEq, Eq, Hash, Debug, PartialOrd, Ord, Serialize, Deserialize)]
pub struct SkewShape {
    outer: Partition,
    inner: Partition,
}

impl SkewShape {
    pub fn new(outer: Partition, inner: Partition) -> Result<Self> {
        if !outer.contains(&inner) {
            return Err(Error::Invalid(format!("{inner} is not contained in {outer}")));
        }
        Ok(SkewShape { outer, inner })
    }

    pub fn straight(outer: Partition) -> Self {
        SkewShape { outer, inner: Partition::empty() }
    }

    pub fn outer(&self) -> &Partition {
        &self.outer
    }

    pub fn inner(&self) -> &Partition {
        &self.inner
    }

    pub fn size(&self) -> usize {
        self.outer.size() - self.inner.size()
    }

    /// Cells `(row, col)` in row-major order, 0-based.
    pub fn cells(&self) -> Vec<(usize, usize)> {
        let mut v = Vec::new();
        for r in 0..self.outer.len() {
            for c in self.inner.part(r)..self.outer.part(r) {
                v.push((r, c));
            }
        }
        v
    }

    /// At most one cell in each column.
    pub fn is_horizontal_strip(&self) -> bool {
        (1..self.outer.len()).all(|r| self.outer.part(r) <= self.inner.part(r - 1))
    }
}

impl fmt::Display for SkewShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.inner.is_empty() {
            write!(f, "{}", self.outer)
        } else {
            write!(f, "{}/{}", self.outer, self.inner)
        }
    }
}

/// A filling of a skew shape. Row `r` holds `outer[r]` slots; inner cells are `None`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Tableau {
    shape: SkewShape,
    rows: Vec<Vec<Option<u32>>>,
}

impl PartialOrd for Tableau {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

/// Shape first, then the row-major reading sequence.
impl Ord for Tableau {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.shape.cmp(&other.shape).then_with(|| self.reading().cmp(&other.reading()))
    }
}

impl Serialize for Tableau {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.rows.serialize(s)
    }
}

impl Tableau {
    /// Builds a tableau from rows; `None` marks inner cells, which must form
    /// a left-justified partition.
    pub fn from_rows(rows: Vec<Vec<Option<u32>>>) -> Result<Self> {
        let outer = Partition::new(rows.iter().map(|r| r.len()).collect())?;
        if outer.len() != rows.len() {
            return Err(Error::Invalid("empty row inside a tableau".into()));
        }
        let mut inner = Vec::new();
        for r in &rows {
            let k = r.iter().take_while(|x| x.is_none()).count();
            if r[k..].iter().any(|x| x.is_none()) {
                return Err(Error::Invalid("inner cells must be left-justified".into()));
            }
            if r[k..].iter().any(|&x| x == Some(0)) {
                return Err(Error::Invalid("entries must be positive".into()));
            }
            inner.push(k);
        }
        let shape = SkewShape::new(outer, Partition::new(inner)?)?;
        Ok(Tableau { shape, rows })
    }

    /// A straight-shape tableau from plain rows of entries.
    pub fn from_entries(rows: &[&[u32]]) -> Result<Self> {
        Self::from_rows(rows.iter().map(|r| r.iter().map(|&x| Some(x)).collect()).collect())
    }

    fn empty(shape: &SkewShape) -> Self {
        let rows = (0..shape.outer.len()).map(|r| vec![None; shape.outer.part(r)]).collect();
        Tableau { shape: shape.clone(), rows }
    }

    pub fn shape(&self) -> &SkewShape {
        &self.shape
    }

    pub fn rows(&self) -> &[Vec<Option<u32>>] {
        &self.rows
    }

    pub fn entry(&self, r: usize, c: usize) -> Option<u32> {
        self.rows.get(r).and_then(|row| row.get(c).copied().flatten())
    }

    /// Entries in row-major order over the cells of the shape.
    pub fn reading(&self) -> Vec<u32> {
        self.rows.iter().flat_map(|r| r.iter().flatten().copied()).collect()
    }

    pub fn size(&self) -> usize {
        self.shape.size()
    }

    /// Weight ν: ν_a is the number of entries equal to a.
    pub fn weight(&self) -> Vec<usize> {
        let mut w = Vec::new();
        for x in self.reading() {
            let x = x as usize;
            if w.len() < x {
                w.resize(x, 0);
            }
            w[x - 1] += 1;
        }
        w
    }

    fn rows_cols_ok(&self, strict_rows: bool) -> bool {
        for (r, row) in self.rows.iter().enumerate() {
            for c in 0..row.len() {
                let Some(x) = row[c] else { continue };
                if let Some(Some(y)) = row.get(c + 1) {
                    if (strict_rows && *y <= x) || (!strict_rows && *y < x) {
                        return false;
                    }
                }
                if let Some(y) = self.entry(r + 1, c) {
                    if y <= x {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// Entries are 1..size, each once, increasing along rows and columns.
    pub fn is_standard(&self) -> bool {
        let mut seen = self.reading();
        seen.sort_unstable();
        seen.iter().enumerate().all(|(i, &x)| x as usize == i + 1) && self.rows_cols_ok(true)
    }

    /// Rows weakly increasing, columns strictly increasing.
    pub fn is_semistandard(&self) -> bool {
        self.rows_cols_ok(false)
    }

    /// The cell holding `x`.
    pub fn position(&self, x: u32) -> Option<(usize, usize)> {
        for (r, row) in self.rows.iter().enumerate() {
            if let Some(c) = row.iter().position(|&y| y == Some(x)) {
                return Some((r, c));
            }
        }
        None
    }

    /// Classical content col − row of the cell holding `x`.
    pub fn classical_content(&self, x: u32) -> Option<i64> {
        self.position(x).map(|(r, c)| c as i64 - r as i64)
    }

    /// The tableau with entries `i` and `i+1` exchanged.
    pub fn swap(&self, i: u32) -> Tableau {
        let mut t = self.clone();
        for row in &mut t.rows {
            for x in row.iter_mut().flatten() {
                if *x == i {
                    *x = i + 1;
                } else if *x == i + 1 {
                    *x = i;
                }
            }
        }
        t
    }
}

impl fmt::Display for Tableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self
            .rows
            .iter()
            .map(|r| {
                let cells: Vec<String> = r.iter().map(|x| x.map_or(".".to_string(), |v| v.to_string())).collect();
                format!("[{}]", cells.join(","))
            })
            .collect();
        write!(f, "[{}]", rows.join(","))
    }
}

/// Partitions μ with `inner ⊆ μ ⊆ outer` such that μ/`from` is a horizontal
/// strip of `size` cells.
fn strips_above(from: &[usize], outer: &Partition, size: usize) -> Vec<Vec<usize>> {
    let rows = outer.len();
    let mut out = Vec::new();
    fn go(r: usize, rows: usize, from: &[usize], outer: &Partition, left: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if r == rows {
            if left == 0 {
                out.push(cur.clone());
            }
            return;
        }
        let base = from.get(r).copied().unwrap_or(0);
        // A strip puts at most one cell per column: new row r stays within the old row r-1.
        let cap = if r == 0 { outer.part(0) } else { outer.part(r).min(from.get(r - 1).copied().unwrap_or(0)) };
        for v in base..=cap.min(base + left).max(base) {
            cur.push(v);
            go(r + 1, rows, from, outer, left - (v - base), cur, out);
            cur.pop();
        }
    }
    go(0, rows, from, outer, size, &mut Vec::new(), &mut out);
    out
}

/// All semistandard tableaux of the given shape and weight, sorted.
pub fn enumerate_semistandard(shape: &SkewShape, weight: &[usize]) -> Result<Vec<Tableau>> {
    if shape.size() != weight.iter().sum::<usize>() {
        return Err(Error::SizeMismatch(format!("|{shape}| != |{weight:?}|")));
    }
    let mut out = Vec::new();
    let start: Vec<usize> = (0..shape.outer.len()).map(|r| shape.inner.part(r)).collect();
    fill_strips(shape, weight, 0, &start, &mut Tableau::empty(shape), &mut out);
    out.sort();
    Ok(out)
}

fn fill_strips(shape: &SkewShape, weight: &[usize], a: usize, cur: &[usize], t: &mut Tableau, out: &mut Vec<Tableau>) {
    if a == weight.len() {
        out.push(t.clone());
        return;
    }
    for next in strips_above(cur, &shape.outer, weight[a]) {
        for (r, (&lo, &hi)) in cur.iter().zip(&next).enumerate() {
            for c in lo..hi {
                t.rows[r][c] = Some(a as u32 + 1);
            }
        }
        fill_strips(shape, weight, a + 1, &next, t, out);
        for (r, (&lo, &hi)) in cur.iter().zip(&next).enumerate() {
            for c in lo..hi {
                t.rows[r][c] = None;
            }
        }
    }
}

/// All standard tableaux of the shape, sorted by reading sequence.
pub fn enumerate_standard(shape: &SkewShape) -> Vec<Tableau> {
    enumerate_semistandard(shape, &vec![1; shape.size()]).expect("sizes agree")
}

/// Number of semistandard tableaux of shape λ and weight ν.
pub fn kostka(lambda: &Partition, nu: &[usize]) -> Result<u64> {
    kostka_skew(&SkewShape::straight(lambda.clone()), nu)
}

/// Kostka number of a skew shape, counted by successive horizontal strips.
pub fn kostka_skew(shape: &SkewShape, nu: &[usize]) -> Result<u64> {
    if shape.size() != nu.iter().sum::<usize>() {
        return Err(Error::SizeMismatch(format!("|{shape}| != |{nu:?}|")));
    }
    let start: Vec<usize> = (0..shape.outer.len()).map(|r| shape.inner.part(r)).collect();
    let mut layer: HashMap<Vec<usize>, u64> = HashMap::from([(start, 1)]);
    for &w in nu {
        let mut next: HashMap<Vec<usize>, u64> = HashMap::new();
        for (cur, count) in layer {
            for s in strips_above(&cur, &shape.outer, w) {
                *next.entry(s).or_insert(0) += count;
            }
        }
        layer = next;
    }
    Ok(layer.values().sum())
}

/// A semistandard tableau of shape λ and weight μ, built by placing the
/// largest letter in the bottom cells of the first μ_n columns, pushing those
/// cells to the right end of their rows, and recursing on what is left.
pub fn slide_witness(lambda: &Partition, mu: &[usize]) -> Result<Tableau> {
    if lambda.size() != mu.iter().sum::<usize>() {
        return Err(Error::SizeMismatch(format!("|{lambda}| != |{mu:?}|")));
    }
    if !dominance_geq(lambda, &ordered(mu))? {
        return Err(Error::Precondition(format!("{lambda} does not dominate {}", ordered(mu))));
    }
    let mut t = Tableau::empty(&SkewShape::straight(lambda.clone()));
    let mut remaining: Vec<usize> = lambda.parts.clone();
    for letter in (1..=mu.len()).rev() {
        let m = mu[letter - 1];
        let shape = Partition::new(remaining.clone())?;
        let conj = shape.conjugate();
        // Letters per row after the slide: bottoms of the first m columns.
        let mut per_row = vec![0usize; remaining.len()];
        for c in 0..m {
            let height = conj.part(c);
            if height == 0 {
                return Err(Error::Precondition("not enough columns for the last letter".into()));
            }
            per_row[height - 1] += 1;
        }
        for (r, &cnt) in per_row.iter().enumerate() {
            for c in remaining[r] - cnt..remaining[r] {
                t.rows[r][c] = Some(letter as u32);
            }
            remaining[r] -= cnt;
        }
        if remaining.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::Precondition("slide left a non-partition shape".into()));
        }
    }
    debug_assert!(t.is_semistandard());
    Ok(t)
}

fn prefix(k: &[usize], n: usize) -> Result<&[usize]> {
    k.get(..n).ok_or_else(|| Error::OutOfRange(format!("need {n} entries of k, have {}", k.len())))
}

/// S_{k,n}: partitions of k_1+…+k_n dominating the ordered prefix, in
/// reverse lexicographic order.
pub fn s_set(k: &[usize], n: usize) -> Result<Vec<Partition>> {
    let kn = prefix(k, n)?;
    let target = ordered(kn);
    Ok(Partition::all_bounded(target.size(), n.max(1))
        .into_iter()
        .filter(|l| dominance_geq(l, &target).unwrap())
        .collect())
}

/// Res_k(λ): μ in S_{k,n−1} with λ/μ a horizontal strip (of k_n cells).
pub fn res_set(lambda: &Partition, k: &[usize], n: usize) -> Result<Vec<Partition>> {
    if n == 0 || !s_set(k, n)?.contains(lambda) {
        return Err(Error::Precondition(format!("{lambda} is not in S_{{k,{n}}}")));
    }
    let lower = s_set(k, n - 1)?;
    let mut out: Vec<Partition> = lower
        .into_iter()
        .filter(|mu| lambda.contains(mu) && SkewShape::new(lambda.clone(), mu.clone()).unwrap().is_horizontal_strip())
        .collect();
    out.sort();
    Ok(out)
}

/// Replaces the first k_1 letters of a standard tableau by 1, the next k_2 by 2, and so on.
pub fn bar_map(t: &Tableau, k: &[usize], n: usize) -> Result<Tableau> {
    let kn = prefix(k, n)?;
    if !t.is_standard() {
        return Err(Error::Precondition(format!("{t} is not standard")));
    }
    if t.size() != kn.iter().sum::<usize>() {
        return Err(Error::SizeMismatch(format!("tableau size {} vs {kn:?}", t.size())));
    }
    let mut block = Vec::with_capacity(t.size());
    for (a, &ka) in kn.iter().enumerate() {
        block.extend(std::iter::repeat(a as u32 + 1).take(ka));
    }
    let mut out = t.clone();
    for row in &mut out.rows {
        for x in row.iter_mut().flatten() {
            *x = block[*x as usize - 1];
        }
    }
    Ok(out)
}

/// Removes the first column of a partition with exactly `n` parts.
pub fn phi_column_removal(lambda: &Partition, n: usize) -> Result<Partition> {
    if lambda.len() != n {
        return Err(Error::Precondition(format!("{lambda} has length {} not {n}", lambda.len())));
    }
    Partition::new(lambda.parts.iter().map(|p| p - 1).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: &[usize]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    fn straight(v: &[usize]) -> SkewShape {
        SkewShape::straight(p(v))
    }

    #[test]
    fn standard_counts() {
        assert_eq!(enumerate_standard(&straight(&[1])).len(), 1);
        assert_eq!(enumerate_standard(&straight(&[3, 1])).len(), 3);
        assert_eq!(p(&[3, 1]).hook_count(), 3);
        let skew = SkewShape::new(p(&[3, 2]), p(&[1])).unwrap();
        assert_eq!(enumerate_standard(&skew).len(), 5);
        for t in enumerate_standard(&skew) {
            assert!(t.is_standard());
        }
    }

    #[test]
    fn kostka_examples() {
        assert_eq!(kostka(&p(&[4, 4]), &[2, 2, 2, 2]).unwrap(), 3);
        let tabs = enumerate_semistandard(&straight(&[4, 4]), &[2, 2, 2, 2]).unwrap();
        let expected = [
            Tableau::from_entries(&[&[1, 1, 2, 2], &[3, 3, 4, 4]]).unwrap(),
            Tableau::from_entries(&[&[1, 1, 2, 3], &[2, 3, 4, 4]]).unwrap(),
            Tableau::from_entries(&[&[1, 1, 3, 3], &[2, 2, 4, 4]]).unwrap(),
        ];
        assert_eq!(tabs, expected);
        let a = kostka(&p(&[3, 1]), &[2, 1, 1]).unwrap();
        assert_eq!(a, kostka(&p(&[3, 1]), &[1, 2, 1]).unwrap());
        assert_eq!(a, kostka(&p(&[3, 1]), &[1, 1, 2]).unwrap());
        assert!(kostka(&p(&[3, 1]), &[2, 1]).is_err());
    }

    #[test]
    fn dominance_examples() {
        assert!(dominance_geq(&p(&[3, 3]), &p(&[2, 2, 2])).unwrap());
        assert!(!dominance_geq(&p(&[2, 2, 2]), &p(&[3, 3])).unwrap());
        assert!(dominance_geq(&p(&[2, 1]), &p(&[2, 1])).unwrap());
    }

    #[test]
    fn witnesses() {
        let t = slide_witness(&p(&[3]), &[3]).unwrap();
        assert_eq!(t, Tableau::from_entries(&[&[1, 1, 1]]).unwrap());
        let t = slide_witness(&p(&[4, 2]), &[2, 2, 2]).unwrap();
        assert!(t.is_semistandard());
        assert_eq!(t.weight(), vec![2, 2, 2]);
        assert!(slide_witness(&p(&[2, 2, 2]), &[3, 3]).is_err());
    }

    #[test]
    fn s_and_res_sets() {
        let s = s_set(&[2, 2, 2], 3).unwrap();
        assert_eq!(s, Partition::all_bounded(6, 3));
        assert_eq!(s.len(), 7);
        assert_eq!(s_set(&[1, 1, 1, 1], 4).unwrap(), Partition::all(4));
        assert_eq!(s_set(&[3, 1], 2).unwrap(), vec![p(&[4]), p(&[3, 1])]);
        assert_eq!(res_set(&p(&[2]), &[2], 1).unwrap(), vec![Partition::empty()]);
        assert_eq!(res_set(&p(&[3, 3]), &[2, 2, 2], 3).unwrap(), vec![p(&[3, 1])]);
        assert_eq!(res_set(&p(&[6]), &[2, 2, 2], 3).unwrap(), vec![p(&[4])]);
        assert!(res_set(&p(&[1, 1, 1, 1]), &[2, 2], 2).is_err());
    }

    #[test]
    fn bar_map_examples() {
        let t = Tableau::from_entries(&[&[1, 2, 3], &[4]]).unwrap();
        let b = bar_map(&t, &[2, 2], 2).unwrap();
        assert_eq!(b, Tableau::from_entries(&[&[1, 1, 2], &[2]]).unwrap());
        assert!(b.is_semistandard());
        let t = Tableau::from_entries(&[&[1, 3, 4], &[2]]).unwrap();
        let b = bar_map(&t, &[2, 2], 2).unwrap();
        assert_eq!(b, Tableau::from_entries(&[&[1, 2, 2], &[1]]).unwrap());
        assert!(!b.is_semistandard());
        assert_eq!(bar_map(&t, &[1, 1, 1, 1], 4).unwrap(), t);
    }

    #[test]
    fn column_removal() {
        assert_eq!(phi_column_removal(&p(&[1, 1, 1]), 3).unwrap(), Partition::empty());
        assert_eq!(phi_column_removal(&p(&[2, 2, 2]), 3).unwrap(), p(&[1, 1, 1]));
        let top: Vec<Partition> = s_set(&[2, 2, 2], 3).unwrap().into_iter().filter(|l| l.len() == 3).collect();
        let images: Vec<Partition> = top.iter().map(|l| phi_column_removal(l, 3).unwrap()).collect();
        assert_eq!(images, s_set(&[1, 1, 1], 3).unwrap());
        for (l, m) in top.iter().zip(&images) {
            assert_eq!(kostka(l, &[2, 2, 2]).unwrap(), kostka(m, &[1, 1, 1]).unwrap());
        }
        assert!(phi_column_removal(&p(&[2, 1]), 3).is_err());
    }

    #[test]
    fn contents_and_json() {
        let t = Tableau::from_entries(&[&[1, 2, 4], &[3]]).unwrap();
        let cc: Vec<i64> = (1..=4).map(|i| t.classical_content(i).unwrap()).collect();
        assert_eq!(cc, vec![0, 1, -1, 2]);
        let skew = Tableau::from_rows(vec![vec![None, Some(2), Some(4)], vec![Some(1), Some(3)]]).unwrap();
        assert!(skew.is_standard());
        assert_eq!(serde_json::to_string(&skew).unwrap(), "[[null,2,4],[1,3]]");
        assert_eq!(serde_json::to_string(&p(&[3, 1])).unwrap(), "[3,1]");
        let back: Partition = serde_json::from_str("[2,2]").unwrap();
        assert_eq!(back, p(&[2, 2]));
        assert!(serde_json::from_str::<Partition>("[1,2]").is_err());
    }
}
