//! Exact rational matrices and Gauss-Jordan elimination.

use crate::rational::Rational;
use num::{One, Zero};

#[derive(Clone, Debug, PartialEq)]
pub struct RationalMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Rational>,
}

#[derive(Clone, Debug)]
pub struct Rref {
    pub matrix: RationalMatrix,
    pub rank: usize,
    pub pivot_cols: Vec<usize>,
}

impl RationalMatrix {
    pub fn zero(rows: usize, cols: usize) -> Self {
        RationalMatrix {
            rows,
            cols,
            data: vec![Rational::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zero(n, n);
        for i in 0..n {
            m.set(i, i, Rational::one());
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        RationalMatrix {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Rational {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Rational) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[Rational] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zero(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j).clone());
            }
        }
        t
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows, "dimension mismatch");
        let mut out = Self::zero(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let v = out.get(i, j) + a * other.get(k, j);
                    out.set(i, j, v);
                }
            }
        }
        out
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    /// Reduced row echelon form. Pivot selection is the first nonzero entry
    /// in column order, so the result is deterministic.
    pub fn rref(&self) -> Rref {
        let (m, _) = self.rref_with_transform();
        m
    }

    /// Rref plus the invertible row-operation matrix `e` with
    /// `e * self = rref`.
    pub fn rref_with_transform(&self) -> (Rref, RationalMatrix) {
        let mut a = self.clone();
        let mut e = RationalMatrix::identity(self.rows);
        let mut pivot_cols = Vec::new();
        let mut r = 0;
        for c in 0..a.cols {
            if r == a.rows {
                break;
            }
            let Some(p) = (r..a.rows).find(|&i| !a.get(i, c).is_zero()) else {
                continue;
            };
            a.swap_rows(r, p);
            e.swap_rows(r, p);
            let inv = {
                let v = a.get(r, c);
                Rational::one() / v
            };
            for j in 0..a.cols {
                let v = a.get(r, j) * &inv;
                a.set(r, j, v);
            }
            for j in 0..e.cols {
                let v = e.get(r, j) * &inv;
                e.set(r, j, v);
            }
            for i in 0..a.rows {
                if i == r || a.get(i, c).is_zero() {
                    continue;
                }
                let f = a.get(i, c).clone();
                for j in 0..a.cols {
                    let v = a.get(i, j) - &f * a.get(r, j);
                    a.set(i, j, v);
                }
                for j in 0..e.cols {
                    let v = e.get(i, j) - &f * e.get(r, j);
                    e.set(i, j, v);
                }
            }
            pivot_cols.push(c);
            r += 1;
        }
        (
            Rref {
                matrix: a,
                rank: r,
                pivot_cols,
            },
            e,
        )
    }

    pub fn rank(&self) -> usize {
        self.rref().rank
    }

    /// Inverse of a square matrix, `None` when singular.
    pub fn inverse(&self) -> Option<RationalMatrix> {
        assert_eq!(self.rows, self.cols);
        let (rref, e) = self.rref_with_transform();
        if rref.rank == self.rows {
            Some(e)
        } else {
            None
        }
    }
}

/// Solve `A x = b` exactly. Returns the deterministic solution with zeros on
/// all non-pivot columns, or `None` when the system is inconsistent.
pub fn solve(a: &RationalMatrix, b: &[Rational]) -> Option<Vec<Rational>> {
    assert_eq!(a.rows(), b.len(), "rhs length mismatch");
    let mut aug = RationalMatrix::zero(a.rows(), a.cols() + 1);
    for i in 0..a.rows() {
        for j in 0..a.cols() {
            aug.set(i, j, a.get(i, j).clone());
        }
        aug.set(i, a.cols(), b[i].clone());
    }
    let rref = aug.rref();
    if rref.pivot_cols.contains(&a.cols()) {
        return None;
    }
    let mut x = vec![Rational::zero(); a.cols()];
    for (row, &col) in rref.pivot_cols.iter().enumerate() {
        x[col] = rref.matrix.get(row, a.cols()).clone();
    }
    Some(x)
}
