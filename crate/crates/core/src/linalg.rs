//! Dense matrices over the coefficient rings, with exact rank computations.

use crate::error::{Error, Result};
use crate::qcoeff::{Coeff, FieldCoeff, IntPoly, RatFunc};
use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::ser::{Serialize, SerializeSeq, Serializer};
use std::fmt::Display;

/// A dense row-major matrix.
#[derive(Clone, PartialEq, Debug)]
pub struct Matrix<C: Coeff> {
    rows: usize,
    cols: usize,
    data: Vec<C>,
}

impl<C: Coeff> Matrix<C> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, data: vec![C::nil(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.data[i * n + i] = C::unit();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<C>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        if rows.iter().any(|x| x.len() != c) {
            return Err(Error::SizeMismatch("ragged matrix rows".into()));
        }
        Ok(Matrix { rows: r, cols: c, data: rows.into_iter().flatten().collect() })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &C {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, c: C) {
        self.data[i * self.cols + j] = c;
    }

    pub fn add_at(&mut self, i: usize, j: usize, c: &C) {
        self.data[i * self.cols + j].accumulate(c);
    }

    pub fn row(&self, i: usize) -> &[C] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<C> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn to_rows(&self) -> Vec<Vec<C>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|c| c.is_nil())
    }

    /// Matrix product; zero entries are skipped, so sparse factors are cheap.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        if self.cols != other.rows {
            return Err(Error::SizeMismatch(format!("{}x{} times {}x{}", self.rows, self.cols, other.rows, other.cols)));
        }
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_nil() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if !b.is_nil() {
                        out.data[i * other.cols + j].accumulate(&a.times(b));
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn mul_vec(&self, v: &[C]) -> Result<Vec<C>> {
        if v.len() != self.cols {
            return Err(Error::SizeMismatch("vector length".into()));
        }
        Ok((0..self.rows)
            .map(|i| {
                let mut acc = C::nil();
                for (a, b) in self.row(i).iter().zip(v) {
                    if !a.is_nil() && !b.is_nil() {
                        acc.accumulate(&a.times(b));
                    }
                }
                acc
            })
            .collect())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        if (self.rows, self.cols) != (other.rows, other.cols) {
            return Err(Error::SizeMismatch("matrix shapes differ".into()));
        }
        let data = self.data.iter().zip(&other.data).map(|(a, b)| a.plus(b)).collect();
        Ok(Matrix { rows: self.rows, cols: self.cols, data })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.scale(&C::from_int(-1)))
    }

    pub fn scale(&self, c: &C) -> Self {
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(|x| x.times(c)).collect() }
    }

    /// `self += c · other`.
    pub fn axpy(&mut self, c: &C, other: &Self) {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        for (a, b) in self.data.iter_mut().zip(&other.data) {
            if !b.is_nil() {
                a.accumulate(&b.times(c));
            }
        }
    }

    pub fn trace(&self) -> C {
        let mut acc = C::nil();
        for i in 0..self.rows.min(self.cols) {
            acc.accumulate(self.get(i, i));
        }
        acc
    }

    pub fn transpose(&self) -> Self {
        let mut out = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.set(j, i, self.get(i, j).clone());
            }
        }
        out
    }

    pub fn map<D: Coeff>(&self, f: impl Fn(&C) -> D) -> Matrix<D> {
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(f).collect() }
    }

    pub fn try_map<D: Coeff>(&self, f: impl Fn(&C) -> Result<D>) -> Result<Matrix<D>> {
        let data = self.data.iter().map(f).collect::<Result<Vec<D>>>()?;
        Ok(Matrix { rows: self.rows, cols: self.cols, data })
    }
}

impl<C: Coeff + Display> Serialize for Matrix<C> {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = s.serialize_seq(Some(self.rows))?;
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(|c| c.to_string()).collect();
            seq.serialize_element(&row)?;
        }
        seq.end()
    }
}

/// Rank by Gaussian elimination over a field.
pub fn rank<C: FieldCoeff>(m: &Matrix<C>) -> usize {
    let mut e = Echelon::new(m.cols());
    for i in 0..m.rows() {
        e.insert(m.row(i).to_vec());
    }
    e.dim()
}

/// An incrementally built row echelon form over a field.
#[derive(Clone, Debug)]
pub struct Echelon<C: FieldCoeff> {
    width: usize,
    rows: Vec<(usize, Vec<C>)>,
}

impl<C: FieldCoeff> Echelon<C> {
    pub fn new(width: usize) -> Self {
        Echelon { width, rows: Vec::new() }
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn width(&self) -> usize {
        self.width
    }

    fn reduce(&self, mut v: Vec<C>) -> Vec<C> {
        for (p, row) in &self.rows {
            if v[*p].is_nil() {
                continue;
            }
            let f = v[*p].clone();
            for (a, b) in v.iter_mut().zip(row).skip(*p) {
                if !b.is_nil() {
                    *a = a.minus(&f.times(b));
                }
            }
        }
        v
    }

    /// Adds `v` to the span; returns whether the dimension grew.
    pub fn insert(&mut self, v: Vec<C>) -> bool {
        assert_eq!(v.len(), self.width, "vector width");
        let v = self.reduce(v);
        let Some(p) = v.iter().position(|c| !c.is_nil()) else { return false };
        let inv = v[p].inverse().expect("nonzero pivot");
        let v: Vec<C> = v.iter().map(|c| c.times(&inv)).collect();
        // Keep earlier rows reduced against the new pivot so later reductions stay one-pass.
        for (_, row) in self.rows.iter_mut() {
            if !row[p].is_nil() {
                let f = row[p].clone();
                for (a, b) in row.iter_mut().zip(&v).skip(p) {
                    if !b.is_nil() {
                        *a = a.minus(&f.times(b));
                    }
                }
            }
        }
        self.rows.push((p, v));
        true
    }

    pub fn contains(&self, v: &[C]) -> bool {
        self.reduce(v.to_vec()).iter().all(|c| c.is_nil())
    }
}

/// Integral domains with exact division, for fraction-free elimination.
trait ExactDomain: Clone {
    fn is_zero_el(&self) -> bool;
    fn mul_el(&self, o: &Self) -> Self;
    fn sub_el(&self, o: &Self) -> Self;
    fn div_el(&self, o: &Self) -> Self;
    fn one_el() -> Self;
}

impl ExactDomain for BigInt {
    fn is_zero_el(&self) -> bool {
        self.is_zero()
    }
    fn mul_el(&self, o: &Self) -> Self {
        self * o
    }
    fn sub_el(&self, o: &Self) -> Self {
        self - o
    }
    fn div_el(&self, o: &Self) -> Self {
        debug_assert!((self % o).is_zero());
        self / o
    }
    fn one_el() -> Self {
        BigInt::one()
    }
}

impl ExactDomain for IntPoly {
    fn is_zero_el(&self) -> bool {
        self.is_zero()
    }
    fn mul_el(&self, o: &Self) -> Self {
        self.mul(o)
    }
    fn sub_el(&self, o: &Self) -> Self {
        self.sub(o)
    }
    fn div_el(&self, o: &Self) -> Self {
        self.div_exact(o).expect("Bareiss division is exact")
    }
    fn one_el() -> Self {
        IntPoly::one()
    }
}

/// Bareiss fraction-free elimination; every division is exact.
fn bareiss_rank<T: ExactDomain>(mut a: Vec<Vec<T>>) -> usize {
    let rows = a.len();
    let cols = a.first().map_or(0, |r| r.len());
    let mut prev = T::one_el();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !a[i][c].is_zero_el()) else { continue };
        a.swap(r, p);
        for i in r + 1..rows {
            for j in c + 1..cols {
                let v = a[r][c].mul_el(&a[i][j]).sub_el(&a[i][c].mul_el(&a[r][j]));
                a[i][j] = v.div_el(&prev);
            }
            a[i][c] = T::one_el().sub_el(&T::one_el());
        }
        prev = a[r][c].clone();
        r += 1;
    }
    r
}

/// Exact rank of a rational matrix: rows are cleared of denominators and
/// reduced fraction-free over ℤ.
pub fn rank_rational(m: &Matrix<BigRational>) -> usize {
    let rows = (0..m.rows())
        .map(|i| {
            let l = m.row(i).iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
            m.row(i).iter().map(|x| x.numer() * (&l / x.denom())).collect()
        })
        .collect();
    bareiss_rank::<BigInt>(rows)
}

/// Exact rank of an integer matrix.
pub fn rank_integer(m: &Matrix<BigInt>) -> usize {
    bareiss_rank::<BigInt>((0..m.rows()).map(|i| m.row(i).to_vec()).collect())
}

/// Exact rank over ℚ(q): rows are scaled into ℤ[q] and reduced fraction-free.
pub fn rank_ratfunc(m: &Matrix<RatFunc>) -> usize {
    let rows = (0..m.rows())
        .map(|i| {
            let row = m.row(i);
            let mut l = IntPoly::one();
            for x in row {
                let d = x.denom();
                let g = l.gcd(d);
                l = l.mul(&d.div_exact(&g).expect("gcd divides"));
            }
            row.iter()
                .map(|x| x.numer().mul(&l.div_exact(x.denom()).expect("lcm is a multiple")))
                .collect()
        })
        .collect();
    bareiss_rank::<IntPoly>(rows)
}
