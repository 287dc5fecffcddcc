//! Linear algebra over the prime field GF(p).
//!
//! Everything here is deterministic: pivots are the first nonzero entry,
//! eigenvalues are visited in ascending order as field elements, and kernel
//! bases come out of the echelon form with free columns ascending. The
//! eigenspace splitter turns a family of commuting matrices into their
//! common one-dimensional eigenspaces by repeatedly restricting each matrix
//! to the current invariant subspaces.

#[derive(Clone, Copy, Debug)]
pub struct PrimeField {
    pub p: u64,
}

impl PrimeField {
    pub fn new(p: u64) -> Self {
        PrimeField { p }
    }

    pub fn add(&self, a: u64, b: u64) -> u64 {
        (a + b) % self.p
    }

    pub fn sub(&self, a: u64, b: u64) -> u64 {
        (a + self.p - b % self.p) % self.p
    }

    pub fn mul(&self, a: u64, b: u64) -> u64 {
        ((a as u128 * b as u128) % self.p as u128) as u64
    }

    pub fn neg(&self, a: u64) -> u64 {
        (self.p - a % self.p) % self.p
    }

    pub fn pow(&self, mut base: u64, mut e: u64) -> u64 {
        base %= self.p;
        let mut acc = 1u64;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    pub fn inv(&self, a: u64) -> u64 {
        assert!(a % self.p != 0, "inverse of zero");
        self.pow(a, self.p - 2)
    }

    /// Multiplicative order of `a`, by checking divisors of p - 1.
    pub fn mult_order(&self, a: u64) -> u64 {
        assert!(a % self.p != 0);
        let mut order = self.p - 1;
        let mut m = self.p - 1;
        let mut q = 2;
        while q * q <= m {
            if m % q == 0 {
                while m % q == 0 {
                    m /= q;
                }
                while order % q == 0 && self.pow(a, order / q) == 1 {
                    order /= q;
                }
            }
            q += 1;
        }
        if m > 1 {
            while order % m == 0 && self.pow(a, order / m) == 1 {
                order /= m;
            }
        }
        order
    }
}

/// Dense row-major matrix over GF(p).
#[derive(Clone, Debug, PartialEq)]
pub struct ModMatrix {
    pub rows: usize,
    pub cols: usize,
    pub data: Vec<u64>,
}

impl ModMatrix {
    pub fn zero(rows: usize, cols: usize) -> Self {
        ModMatrix {
            rows,
            cols,
            data: vec![0; rows * cols],
        }
    }

    pub fn from_rows(rows: Vec<Vec<u64>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        assert!(rows.iter().all(|row| row.len() == c));
        ModMatrix {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn get(&self, i: usize, j: usize) -> u64 {
        self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: u64) {
        self.data[i * self.cols + j] = v;
    }

    pub fn mat_vec(&self, v: &[u64], f: PrimeField) -> Vec<u64> {
        assert_eq!(v.len(), self.cols);
        (0..self.rows)
            .map(|i| {
                let mut acc = 0u64;
                for j in 0..self.cols {
                    acc = f.add(acc, f.mul(self.get(i, j), v[j]));
                }
                acc
            })
            .collect()
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    /// In-place reduced row echelon form; returns pivot columns.
    pub fn rref(&mut self, f: PrimeField) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.cols {
            if r == self.rows {
                break;
            }
            let Some(p) = (r..self.rows).find(|&i| self.get(i, c) != 0) else {
                continue;
            };
            self.swap_rows(r, p);
            let inv = f.inv(self.get(r, c));
            for j in 0..self.cols {
                let v = f.mul(self.get(r, j), inv);
                self.set(r, j, v);
            }
            for i in 0..self.rows {
                if i == r || self.get(i, c) == 0 {
                    continue;
                }
                let factor = self.get(i, c);
                for j in 0..self.cols {
                    let v = f.sub(self.get(i, j), f.mul(factor, self.get(r, j)));
                    self.set(i, j, v);
                }
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }

    /// Basis of the kernel (column null space), deterministic: one vector per
    /// free column, ascending.
    pub fn kernel_basis(&self, f: PrimeField) -> Vec<Vec<u64>> {
        let mut m = self.clone();
        let pivots = m.rref(f);
        let pivot_set: Vec<Option<usize>> = {
            let mut v = vec![None; self.cols];
            for (row, &col) in pivots.iter().enumerate() {
                v[col] = Some(row);
            }
            v
        };
        let mut basis = Vec::new();
        for free in 0..self.cols {
            if pivot_set[free].is_some() {
                continue;
            }
            let mut vec = vec![0u64; self.cols];
            vec[free] = 1;
            for (col, &rowopt) in pivot_set.iter().enumerate() {
                if let Some(row) = rowopt {
                    vec[col] = f.neg(m.get(row, free));
                }
            }
            basis.push(vec);
        }
        basis
    }

    /// Characteristic polynomial coefficients (ascending, monic) via
    /// Hessenberg reduction; valid over GF(p) for any p.
    pub fn charpoly(&self, f: PrimeField) -> Vec<u64> {
        assert_eq!(self.rows, self.cols);
        let n = self.rows;
        if n == 0 {
            return vec![1];
        }
        let mut h = self.clone();
        // Similarity reduction to upper Hessenberg form.
        for c in 0..n.saturating_sub(2) {
            let Some(pivot) = (c + 1..n).find(|&i| h.get(i, c) != 0) else {
                continue;
            };
            if pivot != c + 1 {
                h.swap_rows(c + 1, pivot);
                for i in 0..n {
                    let tmp = h.get(i, c + 1);
                    h.set(i, c + 1, h.get(i, pivot));
                    h.set(i, pivot, tmp);
                }
            }
            let inv = f.inv(h.get(c + 1, c));
            for i in c + 2..n {
                let factor = f.mul(h.get(i, c), inv);
                if factor == 0 {
                    continue;
                }
                // row_i -= factor * row_{c+1}; col_{c+1} += factor * col_i
                for j in 0..n {
                    let v = f.sub(h.get(i, j), f.mul(factor, h.get(c + 1, j)));
                    h.set(i, j, v);
                }
                for i2 in 0..n {
                    let v = f.add(h.get(i2, c + 1), f.mul(factor, h.get(i2, i)));
                    h.set(i2, c + 1, v);
                }
            }
        }
        // char polys of leading principal blocks of the Hessenberg matrix
        let mut polys: Vec<Vec<u64>> = vec![vec![1]];
        for m in 1..=n {
            // p_m = (x - h[m-1][m-1]) p_{m-1} - sum_i h[i-1][m-1] prod(subdiag) p_{i-1}
            let mut pm = poly_mul_linear(&polys[m - 1], f.neg(h.get(m - 1, m - 1)), f);
            let mut subdiag = 1u64;
            for i in (1..m).rev() {
                subdiag = f.mul(subdiag, h.get(i, i - 1));
                if subdiag == 0 {
                    break;
                }
                let coeff = f.mul(h.get(i - 1, m - 1), subdiag);
                if coeff == 0 {
                    continue;
                }
                for (k, &c) in polys[i - 1].iter().enumerate() {
                    pm[k] = f.sub(pm[k], f.mul(coeff, c));
                }
            }
            polys.push(pm);
        }
        polys.pop().unwrap()
    }
}

/// p(x) * (x + c)
fn poly_mul_linear(p: &[u64], c: u64, f: PrimeField) -> Vec<u64> {
    let mut out = vec![0u64; p.len() + 1];
    for (i, &a) in p.iter().enumerate() {
        out[i + 1] = f.add(out[i + 1], a);
        out[i] = f.add(out[i], f.mul(a, c));
    }
    out
}

pub fn poly_eval(p: &[u64], x: u64, f: PrimeField) -> u64 {
    let mut acc = 0u64;
    for &c in p.iter().rev() {
        acc = f.add(f.mul(acc, x), c);
    }
    acc
}

/// Distinct roots in ascending order, by scanning the field.
pub fn poly_roots(p: &[u64], f: PrimeField) -> Vec<u64> {
    (0..f.p).filter(|&x| poly_eval(p, x, f) == 0).collect()
}

/// Common one-dimensional eigenspaces of a family of commuting matrices that
/// is known to be simultaneously diagonalizable with distinct joint spectra
/// (class matrices are). Panics if the family fails to split completely.
pub fn split_common_eigenvectors(mats: &[ModMatrix], f: PrimeField) -> Vec<Vec<u64>> {
    let n = mats.first().map_or(0, |m| m.rows);
    let identity_basis: Vec<Vec<u64>> = (0..n)
        .map(|i| {
            let mut v = vec![0u64; n];
            v[i] = 1;
            v
        })
        .collect();
    let mut subspaces: Vec<Vec<Vec<u64>>> = vec![identity_basis];

    for mat in mats {
        if subspaces.iter().all(|s| s.len() == 1) {
            break;
        }
        let mut next = Vec::new();
        for basis in subspaces {
            if basis.len() == 1 {
                next.push(basis);
                continue;
            }
            next.extend(split_subspace(mat, &basis, f));
        }
        subspaces = next;
    }
    assert!(
        subspaces.iter().all(|s| s.len() == 1),
        "commuting family failed to split into one-dimensional eigenspaces"
    );
    subspaces.into_iter().map(|mut s| s.pop().unwrap()).collect()
}

/// Split an invariant subspace into the eigenspaces of `mat` restricted to it.
fn split_subspace(mat: &ModMatrix, basis: &[Vec<u64>], f: PrimeField) -> Vec<Vec<Vec<u64>>> {
    let n = mat.rows;
    let d = basis.len();

    // Solve basis * c = mat * basis columnwise to express each image in the
    // basis; the subspace is invariant so the system is consistent.
    let images: Vec<Vec<u64>> = basis.iter().map(|v| mat.mat_vec(v, f)).collect();
    let mut aug = ModMatrix::zero(n, d + d);
    for (j, b) in basis.iter().enumerate() {
        for i in 0..n {
            aug.set(i, j, b[i]);
        }
    }
    for (j, img) in images.iter().enumerate() {
        for i in 0..n {
            aug.set(i, d + j, img[i]);
        }
    }
    let pivots = aug.rref(f);
    assert!(
        pivots.len() == d && pivots.iter().all(|&c| c < d),
        "basis vectors must be independent and the subspace invariant"
    );
    // Restriction matrix R with image_j = sum_i R[i][j] basis_i.
    let mut restriction = ModMatrix::zero(d, d);
    for i in 0..d {
        for j in 0..d {
            restriction.set(i, j, aug.get(i, d + j));
        }
    }

    let charpoly = restriction.charpoly(f);
    let mut out = Vec::new();
    let mut found = 0;
    for lambda in poly_roots(&charpoly, f) {
        let mut shifted = restriction.clone();
        for i in 0..d {
            let v = f.sub(shifted.get(i, i), lambda);
            shifted.set(i, i, v);
        }
        let kernel = shifted.kernel_basis(f);
        if kernel.is_empty() {
            continue;
        }
        found += kernel.len();
        let sub: Vec<Vec<u64>> = kernel
            .iter()
            .map(|coeffs| {
                let mut v = vec![0u64; n];
                for (i, &c) in coeffs.iter().enumerate() {
                    for k in 0..n {
                        v[k] = f.add(v[k], f.mul(c, basis[i][k]));
                    }
                }
                v
            })
            .collect();
        out.push(sub);
    }
    assert_eq!(
        found, d,
        "restriction must be diagonalizable over the prime field"
    );
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    const F7: PrimeField = PrimeField { p: 7 };

    #[test]
    fn field_basics() {
        assert_eq!(F7.add(5, 4), 2);
        assert_eq!(F7.sub(2, 5), 4);
        assert_eq!(F7.mul(3, 5), 1);
        assert_eq!(F7.inv(3), 5);
        assert_eq!(F7.pow(3, 6), 1);
        assert_eq!(F7.mult_order(3), 6);
        assert_eq!(F7.mult_order(2), 3);
        assert_eq!(F7.mult_order(1), 1);
    }

    #[test]
    fn kernel_of_singular_matrix() {
        // rows (1, 2), (2, 4) over GF(7): kernel spanned by (5, 1) = (-2, 1)
        let m = ModMatrix::from_rows(vec![vec![1, 2], vec![2, 4]]);
        let k = m.kernel_basis(F7);
        assert_eq!(k, vec![vec![5, 1]]);
    }

    #[test]
    fn charpoly_of_companion_like_matrix() {
        // [[0,1],[1,0]] has char poly x^2 - 1
        let m = ModMatrix::from_rows(vec![vec![0, 1], vec![1, 0]]);
        let p = m.charpoly(F7);
        assert_eq!(p, vec![6, 0, 1]);
        assert_eq!(poly_roots(&p, F7), vec![1, 6]);
    }

    #[test]
    fn charpoly_matches_trace_and_det_3x3() {
        let f = PrimeField::new(13);
        let m = ModMatrix::from_rows(vec![vec![1, 2, 3], vec![4, 5, 6], vec![7, 8, 10]]);
        let p = m.charpoly(f);
        assert_eq!(p.len(), 4);
        assert_eq!(p[3], 1);
        // trace = 16 = 3 mod 13; coefficient of x^2 is -trace
        assert_eq!(p[2], f.neg(3));
        // det(m) = -3 = 10 mod 13; constant term is (-1)^3 det
        assert_eq!(p[0], f.neg(10));
    }

    #[test]
    fn split_c2_class_matrices() {
        // Class matrices of the order-2 group over GF(3): M_0 = I,
        // M_1 = [[0,1],[1,0]] with eigenvalues 1 and 2.
        let f = PrimeField::new(3);
        let m0 = ModMatrix::from_rows(vec![vec![1, 0], vec![0, 1]]);
        let m1 = ModMatrix::from_rows(vec![vec![0, 1], vec![1, 0]]);
        let vecs = split_common_eigenvectors(&[m0, m1.clone()], f);
        assert_eq!(vecs.len(), 2);
        for v in &vecs {
            let image = m1.mat_vec(v, f);
            // eigenvector: image is a scalar multiple of v
            let lambda = if v[0] != 0 {
                f.mul(image[0], f.inv(v[0]))
            } else {
                f.mul(image[1], f.inv(v[1]))
            };
            assert_eq!(image, v.iter().map(|&x| f.mul(lambda, x)).collect::<Vec<_>>());
        }
    }

    #[test]
    fn split_diagonal_family() {
        let f = PrimeField::new(11);
        let a = ModMatrix::from_rows(vec![vec![2, 0, 0], vec![0, 2, 0], vec![0, 0, 5]]);
        let b = ModMatrix::from_rows(vec![vec![3, 0, 0], vec![0, 7, 0], vec![0, 0, 7]]);
        let vecs = split_common_eigenvectors(&[a, b], f);
        assert_eq!(vecs.len(), 3);
    }
}
