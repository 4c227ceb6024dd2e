//! Dense exact linear algebra over Q(zeta_8).
//!
//! Everything here is small (dimension at most 21) and exact. Subspaces are
//! kept in reduced row echelon form, which doubles as a canonical key for
//! equality of subspaces.

use crate::cyclo::Cyclo8;
use crate::error::{Error, Result};
use std::fmt;
use std::ops::Mul;

#[derive(Clone, PartialEq, Eq)]
pub struct Mat {
    pub rows: usize,
    pub cols: usize,
    data: Vec<Cyclo8>,
}

impl Mat {
    pub fn zero(rows: usize, cols: usize) -> Self {
        Mat { rows, cols, data: vec![Cyclo8::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Mat::zero(n, n);
        for i in 0..n {
            m[(i, i)] = Cyclo8::one();
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, f: impl Fn(usize, usize) -> Cyclo8) -> Self {
        let mut m = Mat::zero(rows, cols);
        for i in 0..rows {
            for j in 0..cols {
                m[(i, j)] = f(i, j);
            }
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Cyclo8>>) -> Self {
        let r = rows.len();
        let c = rows.first().map(|x| x.len()).unwrap_or(0);
        let mut data = Vec::with_capacity(r * c);
        for row in rows {
            assert_eq!(row.len(), c);
            data.extend(row);
        }
        Mat { rows: r, cols: c, data }
    }

    pub fn row(&self, i: usize) -> &[Cyclo8] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn rows_vec(&self) -> Vec<Vec<Cyclo8>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn col(&self, j: usize) -> Vec<Cyclo8> {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn transpose(&self) -> Mat {
        Mat::from_fn(self.cols, self.rows, |i, j| self[(j, i)].clone())
    }

    pub fn conj_entries(&self) -> Mat {
        Mat::from_fn(self.rows, self.cols, |i, j| self[(i, j)].conj())
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| x.is_zero())
    }

    pub fn apply(&self, v: &[Cyclo8]) -> Vec<Cyclo8> {
        assert_eq!(v.len(), self.cols);
        let mut out = vec![Cyclo8::zero(); self.rows];
        for i in 0..self.rows {
            let mut acc = Cyclo8::zero();
            for j in 0..self.cols {
                if !v[j].is_zero() && !self[(i, j)].is_zero() {
                    acc += &(&self[(i, j)] * &v[j]);
                }
            }
            out[i] = acc;
        }
        out
    }

    pub fn add(&self, other: &Mat) -> Mat {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Mat::from_fn(self.rows, self.cols, |i, j| &self[(i, j)] + &other[(i, j)])
    }

    pub fn sub(&self, other: &Mat) -> Mat {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Mat::from_fn(self.rows, self.cols, |i, j| &self[(i, j)] - &other[(i, j)])
    }

    pub fn scale(&self, s: &Cyclo8) -> Mat {
        Mat::from_fn(self.rows, self.cols, |i, j| &self[(i, j)] * s)
    }

    pub fn pow(&self, mut e: u32) -> Mat {
        assert_eq!(self.rows, self.cols);
        let mut base = self.clone();
        let mut acc = Mat::identity(self.rows);
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }

    /// In-place Gauss-Jordan reduction; returns pivot columns.
    pub fn rref_in_place(&mut self) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.cols {
            if r == self.rows {
                break;
            }
            let Some(p) = (r..self.rows).find(|&i| !self[(i, c)].is_zero()) else {
                continue;
            };
            self.swap_rows(r, p);
            let inv = self[(r, c)].inv().expect("pivot nonzero");
            for j in c..self.cols {
                self[(r, j)] = &self[(r, j)] * &inv;
            }
            for i in 0..self.rows {
                if i != r && !self[(i, c)].is_zero() {
                    let f = self[(i, c)].clone();
                    for j in c..self.cols {
                        let t = &self[(r, j)] * &f;
                        self[(i, j)] = &self[(i, j)] - &t;
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    pub fn rank(&self) -> usize {
        let mut m = self.clone();
        m.rref_in_place().len()
    }

    /// Basis of the right kernel, rows of the returned matrix.
    pub fn kernel(&self) -> Mat {
        let mut m = self.clone();
        let pivots = m.rref_in_place();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        let mut rows = Vec::new();
        for &fc in &free {
            let mut v = vec![Cyclo8::zero(); self.cols];
            v[fc] = Cyclo8::one();
            for (ri, &pc) in pivots.iter().enumerate() {
                v[pc] = -&m[(ri, fc)];
            }
            rows.push(v);
        }
        Mat::from_rows(if rows.is_empty() {
            vec![]
        } else {
            rows
        })
    }

    /// Solve self * x = b; None if inconsistent. Returns one solution.
    pub fn solve(&self, b: &[Cyclo8]) -> Option<Vec<Cyclo8>> {
        assert_eq!(b.len(), self.rows);
        let mut aug = Mat::zero(self.rows, self.cols + 1);
        for i in 0..self.rows {
            for j in 0..self.cols {
                aug[(i, j)] = self[(i, j)].clone();
            }
            aug[(i, self.cols)] = b[i].clone();
        }
        let pivots = aug.rref_in_place();
        if pivots.contains(&self.cols) {
            return None;
        }
        let mut x = vec![Cyclo8::zero(); self.cols];
        for (ri, &pc) in pivots.iter().enumerate() {
            x[pc] = aug[(ri, self.cols)].clone();
        }
        Some(x)
    }

    pub fn inverse(&self) -> Result<Mat> {
        assert_eq!(self.rows, self.cols);
        let n = self.rows;
        let mut aug = Mat::zero(n, 2 * n);
        for i in 0..n {
            for j in 0..n {
                aug[(i, j)] = self[(i, j)].clone();
            }
            aug[(i, n + i)] = Cyclo8::one();
        }
        let pivots = aug.rref_in_place();
        if pivots.len() != n {
            return Err(Error::InternalConsistency("matrix not invertible".into()));
        }
        Ok(Mat::from_fn(n, n, |i, j| aug[(i, n + j)].clone()))
    }
}

impl std::ops::Index<(usize, usize)> for Mat {
    type Output = Cyclo8;
    fn index(&self, (i, j): (usize, usize)) -> &Cyclo8 {
        &self.data[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for Mat {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Cyclo8 {
        &mut self.data[i * self.cols + j]
    }
}

impl<'a, 'b> Mul<&'b Mat> for &'a Mat {
    type Output = Mat;
    fn mul(self, rhs: &'b Mat) -> Mat {
        assert_eq!(self.cols, rhs.rows);
        let mut out = Mat::zero(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = &rhs[(k, j)];
                    if b.is_zero() {
                        continue;
                    }
                    let t = a * b;
                    let cur = &out[(i, j)] + &t;
                    out[(i, j)] = cur;
                }
            }
        }
        out
    }
}

impl fmt::Debug for Mat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Mat {}x{}", self.rows, self.cols)?;
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(|x| format!("{x}")).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        Ok(())
    }
}

/// A subspace of the ambient column space, kept as canonical RREF rows.
#[derive(Clone, PartialEq, Eq)]
pub struct Subspace {
    pub ambient: usize,
    /// RREF basis, one row per basis vector. May have zero rows.
    pub basis: Mat,
}

impl Subspace {
    pub fn zero(ambient: usize) -> Self {
        Subspace { ambient, basis: Mat::zero(0, ambient) }
    }

    pub fn full(ambient: usize) -> Self {
        Subspace { ambient, basis: Mat::identity(ambient) }
    }

    pub fn span(ambient: usize, vectors: &[Vec<Cyclo8>]) -> Self {
        if vectors.is_empty() {
            return Self::zero(ambient);
        }
        let mut m = Mat::from_rows(vectors.to_vec());
        let pivots = m.rref_in_place();
        let rank = pivots.len();
        let rows: Vec<Vec<Cyclo8>> = (0..rank).map(|i| m.row(i).to_vec()).collect();
        Subspace {
            ambient,
            basis: if rows.is_empty() { Mat::zero(0, ambient) } else { Mat::from_rows(rows) },
        }
    }

    pub fn dim(&self) -> usize {
        self.basis.rows
    }

    pub fn contains(&self, v: &[Cyclo8]) -> bool {
        if v.iter().all(|x| x.is_zero()) {
            return true;
        }
        let mut rows = self.basis.rows_vec();
        rows.push(v.to_vec());
        Subspace::span(self.ambient, &rows).dim() == self.dim()
    }

    pub fn contains_subspace(&self, other: &Subspace) -> bool {
        (0..other.basis.rows).all(|i| self.contains(other.basis.row(i)))
    }

    pub fn sum(&self, other: &Subspace) -> Subspace {
        let mut rows = self.basis.rows_vec();
        rows.extend(other.basis.rows_vec());
        Subspace::span(self.ambient, &rows)
    }

    /// Intersection via the kernel of the stacked coefficient relation
    /// (Zassenhaus-style).
    pub fn intersect(&self, other: &Subspace) -> Subspace {
        if self.dim() == 0 || other.dim() == 0 {
            return Subspace::zero(self.ambient);
        }
        // Solve a^T x_a - b^T x_b = 0 over the concatenated coefficients.
        let na = self.basis.rows;
        let nb = other.basis.rows;
        let stacked = Mat::from_fn(self.ambient, na + nb, |i, j| {
            if j < na {
                self.basis[(j, i)].clone()
            } else {
                -&other.basis[(j - na, i)]
            }
        });
        let ker = stacked.kernel();
        let mut vecs = Vec::new();
        for r in 0..ker.rows {
            let coeffs = ker.row(r);
            let mut v = vec![Cyclo8::zero(); self.ambient];
            for (a, c) in coeffs.iter().take(na).enumerate() {
                if c.is_zero() {
                    continue;
                }
                for (k, vk) in v.iter_mut().enumerate() {
                    *vk += &(c * &self.basis[(a, k)]);
                }
            }
            vecs.push(v);
        }
        Subspace::span(self.ambient, &vecs)
    }

    /// Image under a linear map.
    pub fn map(&self, m: &Mat) -> Subspace {
        let vecs: Vec<Vec<Cyclo8>> =
            (0..self.basis.rows).map(|i| m.apply(self.basis.row(i))).collect();
        Subspace::span(m.rows, &vecs)
    }

    /// Canonical serialization usable as a dictionary key.
    pub fn key(&self) -> String {
        let mut s = String::new();
        for i in 0..self.basis.rows {
            for x in self.basis.row(i) {
                s.push_str(&format!("{x};"));
            }
            s.push('|');
        }
        s
    }
}

impl fmt::Debug for Subspace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Subspace(dim {} of {})", self.dim(), self.ambient)
    }
}

/// Signature (positive, negative, null) of a Hermitian form given by its
/// Gram matrix w.r.t. conjugation, computed by exact congruence reduction.
pub fn hermitian_signature(gram: &Mat) -> Result<(usize, usize, usize)> {
    let n = gram.rows;
    assert_eq!(gram.rows, gram.cols);
    let mut g = gram.clone();
    // Hermitian sanity.
    for i in 0..n {
        for j in 0..n {
            if g[(i, j)].conj() != g[(j, i)] {
                return Err(Error::InternalConsistency("form is not Hermitian".into()));
            }
        }
    }
    let mut pos = 0;
    let mut neg = 0;
    let mut null = 0;
    let mut alive: Vec<usize> = (0..n).collect();
    while !alive.is_empty() {
        // Find a nonzero diagonal entry among alive indices.
        let diag = alive.iter().position(|&i| !g[(i, i)].is_zero());
        let pivot = if let Some(k) = diag {
            alive[k]
        } else {
            // All diagonal entries vanish; look for off-diagonal coupling.
            let mut found = None;
            'outer: for (a, &i) in alive.iter().enumerate() {
                for &j in alive.iter().skip(a + 1) {
                    if !g[(i, j)].is_zero() {
                        found = Some((i, j));
                        break 'outer;
                    }
                }
            }
            let Some((i, j)) = found else {
                null += alive.len();
                break;
            };
            // Replace e_i by e_i + u e_j to make the diagonal nonzero:
            // new G_ii = u conj(G_ij) + conj(u) G_ij; u = 1 or i works.
            let gij = g[(i, j)].clone();
            let u = if (&gij + &gij.conj()).is_zero() { Cyclo8::i() } else { Cyclo8::one() };
            // Row/col update: e_i += u e_j (sesquilinear in the second slot).
            for k in 0..n {
                let add = &u * &g[(j, k)];
                g[(i, k)] = &g[(i, k)] + &add;
            }
            for k in 0..n {
                let add = &u.conj() * &g[(k, j)];
                g[(k, i)] = &g[(k, i)] + &add;
            }
            i
        };
        let d = g[(pivot, pivot)].clone();
        let s = d.sign_real()?;
        if s > 0 {
            pos += 1;
        } else {
            neg += 1;
        }
        // Clear pivot row/column from the remaining block.
        let dinv = d.inv().expect("nonzero pivot");
        let others: Vec<usize> = alive.iter().copied().filter(|&i| i != pivot).collect();
        for &i in &others {
            let f = &g[(i, pivot)] * &dinv;
            if f.is_zero() {
                continue;
            }
            for &j in &others {
                let t = &(&f * &g[(pivot, j)]);
                g[(i, j)] = &g[(i, j)] - t;
            }
            g[(i, pivot)] = Cyclo8::zero();
            g[(pivot, i)] = Cyclo8::zero();
        }
        alive.retain(|&i| i != pivot);
    }
    Ok((pos, neg, null))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cyclo::rat_int;

    fn c(n: i64) -> Cyclo8 {
        Cyclo8::from_int(n)
    }

    #[test]
    fn rref_rank_kernel() {
        let m = Mat::from_rows(vec![
            vec![c(1), c(2), c(3)],
            vec![c(2), c(4), c(6)],
            vec![c(0), c(1), c(1)],
        ]);
        assert_eq!(m.rank(), 2);
        let k = m.kernel();
        assert_eq!(k.rows, 1);
        // Check kernel vector satisfies m v = 0.
        let v = k.row(0).to_vec();
        assert!(m.apply(&v).iter().all(|x| x.is_zero()));
    }

    #[test]
    fn subspace_ops() {
        let a = Subspace::span(3, &[vec![c(1), c(0), c(0)], vec![c(0), c(1), c(0)]]);
        let b = Subspace::span(3, &[vec![c(0), c(1), c(1)], vec![c(0), c(0), c(1)]]);
        assert_eq!(a.intersect(&b).dim(), 1);
        assert_eq!(a.sum(&b).dim(), 3);
        assert!(a.contains(&[c(2), c(-5), c(0)]));
        assert!(!a.contains(&[c(0), c(0), c(1)]));
    }

    #[test]
    fn signature_basic() {
        // diag(1, -2) plus a hyperbolic pair.
        let z = Cyclo8::zero();
        let g = Mat::from_rows(vec![
            vec![c(1), z.clone(), z.clone(), z.clone()],
            vec![z.clone(), c(-2), z.clone(), z.clone()],
            vec![z.clone(), z.clone(), z.clone(), Cyclo8::i()],
            vec![z.clone(), z.clone(), -Cyclo8::i(), z.clone()],
        ]);
        let (p, n, nul) = hermitian_signature(&g).unwrap();
        assert_eq!((p, n, nul), (2, 2, 0));
    }

    #[test]
    fn inverse_mat() {
        let m = Mat::from_rows(vec![
            vec![c(2), c(1)],
            vec![c(1), c(1)],
        ]);
        let inv = m.inverse().unwrap();
        assert_eq!(&m * &inv, Mat::identity(2));
    }

    #[test]
    fn scale_rat() {
        let m = Mat::identity(2).scale(&Cyclo8::from_rat(rat_int(3)));
        assert_eq!(m[(0, 0)], c(3));
    }
}
