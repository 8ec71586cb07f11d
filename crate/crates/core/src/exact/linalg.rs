//! Exact dense linear algebra: rank, determinants, nullspaces.
//!
//! Elimination is fraction-free in the Bareiss style: the two-row update
//! `(pivot*a[i][j] - a[i][c]*a[r][j]) / prev_pivot` keeps intermediate entries
//! at minor size over the integers and is exact field arithmetic otherwise.

use super::field::{Field, Rat, Rationals};
use crate::{Error, Result};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// Dense matrix over an exact field, row-major.
#[derive(Clone, Debug)]
pub struct Matrix<F: Field> {
    field: F,
    rows: usize,
    cols: usize,
    data: Vec<F::Elem>,
}

impl<F: Field> Matrix<F> {
    pub fn zeros(field: F, rows: usize, cols: usize) -> Self {
        let data = vec![field.zero(); rows * cols];
        Matrix { field, rows, cols, data }
    }

    pub fn identity(field: F, n: usize) -> Self {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            let one = m.field.one();
            m.set(i, i, one);
        }
        m
    }

    pub fn from_rows(field: F, rows: Vec<Vec<F::Elem>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::DimensionMismatch("ragged rows".into()));
        }
        Ok(Matrix { field, rows: r, cols: c, data: rows.into_iter().flatten().collect() })
    }

    pub fn from_fn(field: F, rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> F::Elem) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Matrix { field, rows, cols, data }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> &F::Elem {
        &self.data[i * self.cols + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: F::Elem) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[F::Elem] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    /// Matrix-vector product.
    pub fn apply(&self, v: &[F::Elem]) -> Result<Vec<F::Elem>> {
        if v.len() != self.cols {
            return Err(Error::DimensionMismatch(format!(
                "matrix has {} columns, vector has {}",
                self.cols,
                v.len()
            )));
        }
        let f = &self.field;
        Ok((0..self.rows)
            .map(|i| {
                let mut acc = f.zero();
                for j in 0..self.cols {
                    acc = f.add(&acc, &f.mul(self.get(i, j), &v[j]));
                }
                acc
            })
            .collect())
    }

    /// Fraction-free row echelon reduction. Returns (echelon, pivot columns, sign flips).
    fn echelon(&self) -> (Matrix<F>, Vec<usize>, bool) {
        let f = self.field.clone();
        let mut a = self.clone();
        let mut pivot_cols = Vec::new();
        let mut negate = false;
        let mut prev = f.one();
        let mut r = 0;
        for c in 0..a.cols {
            if r >= a.rows {
                break;
            }
            let Some(pr) = (r..a.rows).find(|&i| !f.is_zero(a.get(i, c))) else {
                continue;
            };
            if pr != r {
                for j in 0..a.cols {
                    a.data.swap(pr * a.cols + j, r * a.cols + j);
                }
                negate = !negate;
            }
            let pivot = a.get(r, c).clone();
            for i in r + 1..a.rows {
                let lower = a.get(i, c).clone();
                if f.is_zero(&lower) {
                    continue;
                }
                for j in c + 1..a.cols {
                    let num = f.sub(&f.mul(&pivot, a.get(i, j)), &f.mul(&lower, a.get(r, j)));
                    let v = f.div(&num, &prev).expect("previous pivot is nonzero");
                    a.set(i, j, v);
                }
                a.set(i, c, f.zero());
            }
            // rows above the pivot untouched; entries below cleared
            prev = pivot;
            pivot_cols.push(c);
            r += 1;
        }
        (a, pivot_cols, negate)
    }

    /// Exact rank.
    pub fn rank(&self) -> usize {
        self.echelon().1.len()
    }

    /// Exact determinant of a square matrix.
    pub fn det(&self) -> Result<F::Elem> {
        if self.rows != self.cols {
            return Err(Error::DimensionMismatch(format!(
                "determinant of a {}x{} matrix",
                self.rows, self.cols
            )));
        }
        let f = &self.field;
        if self.rows == 0 {
            return Ok(f.one());
        }
        let (ech, pivots, negate) = self.echelon();
        if pivots.len() < self.rows {
            return Ok(f.zero());
        }
        // The final Bareiss pivot is the determinant of the row-permuted matrix.
        let last = ech.get(self.rows - 1, pivots[self.rows - 1]).clone();
        Ok(if negate { f.neg(&last) } else { last })
    }

    /// Basis of the right kernel {v : Mv = 0}, each vector scaled so its
    /// first nonzero entry is one. Empty iff the matrix is injective.
    pub fn nullspace(&self) -> Vec<Vec<F::Elem>> {
        let f = &self.field;
        let (ech, pivot_cols, _) = self.echelon();
        let pivot_set: Vec<bool> = {
            let mut s = vec![false; self.cols];
            for &c in &pivot_cols {
                s[c] = true;
            }
            s
        };
        let free_cols: Vec<usize> = (0..self.cols).filter(|&c| !pivot_set[c]).collect();
        let mut basis = Vec::with_capacity(free_cols.len());
        for &fc in &free_cols {
            let mut v = vec![f.zero(); self.cols];
            v[fc] = f.one();
            // back-substitute pivot rows bottom-up
            for (row, &pc) in pivot_cols.iter().enumerate().rev() {
                let mut acc = f.zero();
                for j in pc + 1..self.cols {
                    acc = f.add(&acc, &f.mul(ech.get(row, j), &v[j]));
                }
                let val = f.div(&f.neg(&acc), ech.get(row, pc)).expect("pivot is nonzero");
                v[pc] = val;
            }
            // canonical scale: first nonzero entry = 1
            if let Some(first) = v.iter().position(|x| !f.is_zero(x)) {
                let scale = f.inv(&v[first].clone()).expect("nonzero");
                for x in v.iter_mut() {
                    *x = f.mul(x, &scale);
                }
            }
            basis.push(v);
        }
        basis
    }
}

impl Matrix<Rationals> {
    /// Kernel basis scaled to coprime integer entries with positive first
    /// nonzero entry.
    pub fn nullspace_integer(&self) -> Vec<Vec<BigInt>> {
        self.nullspace().into_iter().map(|v| integerize(&v)).collect()
    }
}

/// Clears denominators and content; flips sign so the first nonzero entry is
/// positive. The zero vector maps to itself.
pub fn integerize(v: &[Rat]) -> Vec<BigInt> {
    let mut den = BigInt::one();
    for x in v {
        den = den.lcm(x.denom());
    }
    let mut ints: Vec<BigInt> = v
        .iter()
        .map(|x| x.numer() * (&den / x.denom()))
        .collect();
    let mut content = BigInt::zero();
    for x in &ints {
        content = content.gcd(x);
    }
    if content.is_zero() {
        return ints;
    }
    for x in ints.iter_mut() {
        *x = &*x / &content;
    }
    if let Some(first) = ints.iter().find(|x| !x.is_zero()) {
        if first.is_negative() {
            for x in ints.iter_mut() {
                *x = -&*x;
            }
        }
    }
    ints
}

/// Determinant of the top m-by-m minor of the matrix with the given columns.
///
/// Each vector must live in F^n with n >= m; only the first m coordinates
/// enter the determinant.
pub fn det_top_minor<F: Field>(field: &F, vectors: &[Vec<F::Elem>], m: usize) -> Result<F::Elem> {
    if vectors.len() != m {
        return Err(Error::DimensionMismatch(format!(
            "need exactly {m} column vectors, got {}",
            vectors.len()
        )));
    }
    for v in vectors {
        if v.len() < m {
            return Err(Error::MinorTooLarge { m, n: v.len() });
        }
        if v.len() != vectors[0].len() {
            return Err(Error::DimensionMismatch("columns of unequal dimension".into()));
        }
    }
    let mat = Matrix::from_fn(field.clone(), m, m, |i, j| vectors[j][i].clone());
    mat.det()
}
