//! Linear algebra over an exact scalar field on tensor powers of `C^N`.
//!
//! Basis vectors `v_{i_1} ⊗ … ⊗ v_{i_m}` are numbered with the first factor
//! most significant: `(i_1, …, i_m) ↦ Σ (i_k - 1) N^{m-k}`.  The matrix unit
//! `e_{ac} ⊗ e_{bd}` therefore maps `|c, d⟩` to `|a, b⟩`.
//!
//! Storage is dense; products skip zero entries and run row-parallel, which
//! keeps results deterministic.  For operators on four or more factors,
//! [`SparseVec`] applies two-factor operators to individual vectors without
//! materializing the large matrix.

use crate::error::{AlgebraError, Result};
use crate::exact_algebra::Scalar;
use rayon::prelude::*;
use std::collections::BTreeMap;
use std::fmt;

/// A dense rectangular matrix.
#[derive(Clone, PartialEq)]
pub struct Matrix<F> {
    rows: usize,
    cols: usize,
    data: Vec<F>,
}

impl<F: Scalar> Matrix<F> {
    pub fn zeros(rows: usize, cols: usize) -> Matrix<F> {
        Matrix { rows, cols, data: vec![F::zero(); rows * cols] }
    }

    pub fn identity(size: usize) -> Matrix<F> {
        let mut m = Matrix::zeros(size, size);
        for i in 0..size {
            m.data[i * size + i] = F::one();
        }
        m
    }

    /// Scalar multiple of the identity.
    pub fn scalar(size: usize, x: &F) -> Matrix<F> {
        let mut m = Matrix::zeros(size, size);
        for i in 0..size {
            m.data[i * size + i] = x.clone();
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> F) -> Matrix<F> {
        let mut data = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                data.push(f(r, c));
            }
        }
        Matrix { rows, cols, data }
    }

    /// Fallible variant of [`Matrix::from_fn`].
    pub fn try_from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Result<F>) -> Result<Matrix<F>> {
        let mut data = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                data.push(f(r, c)?);
            }
        }
        Ok(Matrix { rows, cols, data })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    /// Entries in row-major order.
    pub fn data(&self) -> &[F] {
        &self.data
    }

    pub fn into_data(self) -> Vec<F> {
        self.data
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    /// Entry at 0-based position `(r, c)`.
    pub fn get(&self, r: usize, c: usize) -> &F {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, x: F) {
        self.data[r * self.cols + c] = x;
    }

    /// Adds `x` to the entry at `(r, c)`.
    pub fn add_at(&mut self, r: usize, c: usize, x: &F) {
        let k = r * self.cols + c;
        self.data[k] = self.data[k].add(x);
    }

    /// Non-zero entries of row `r` as `(column, value)`.
    pub fn row_nonzeros(&self, r: usize) -> impl Iterator<Item = (usize, &F)> {
        self.data[r * self.cols..(r + 1) * self.cols].iter().enumerate().filter(|(_, x)| !x.is_zero())
    }

    /// All non-zero entries as `(row, column, value)` in row-major order.
    pub fn nonzeros(&self) -> impl Iterator<Item = (usize, usize, &F)> {
        let cols = self.cols;
        self.data.iter().enumerate().filter(|(_, x)| !x.is_zero()).map(move |(k, x)| (k / cols, k % cols, x))
    }

    pub fn nnz(&self) -> usize {
        self.data.iter().filter(|x| !x.is_zero()).count()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| x.is_zero())
    }

    pub fn is_identity(&self) -> bool {
        self.rows == self.cols
            && self.nonzeros().all(|(r, c, x)| r == c && x.is_one())
            && (0..self.rows).all(|i| !self.get(i, i).is_zero())
    }

    /// If the matrix is `x·I`, returns `x`.
    pub fn as_scalar(&self) -> Option<F> {
        if self.rows != self.cols || self.rows == 0 {
            return None;
        }
        let x = self.get(0, 0).clone();
        for r in 0..self.rows {
            for c in 0..self.cols {
                let e = self.get(r, c);
                let ok = if r == c { *e == x } else { e.is_zero() };
                if !ok {
                    return None;
                }
            }
        }
        Some(x)
    }

    pub fn map<G: Scalar>(&self, f: impl Fn(&F) -> G) -> Matrix<G> {
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(f).collect() }
    }

    pub fn try_map<G: Scalar>(&self, f: impl Fn(&F) -> Result<G>) -> Result<Matrix<G>> {
        let data = self.data.iter().map(f).collect::<Result<Vec<G>>>()?;
        Ok(Matrix { rows: self.rows, cols: self.cols, data })
    }

    pub fn add(&self, other: &Matrix<F>) -> Matrix<F> {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols), "shape mismatch in add");
        let data = self.data.iter().zip(&other.data).map(|(a, b)| a.add(b)).collect();
        Matrix { rows: self.rows, cols: self.cols, data }
    }

    pub fn sub(&self, other: &Matrix<F>) -> Matrix<F> {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols), "shape mismatch in sub");
        let data = self.data.iter().zip(&other.data).map(|(a, b)| a.sub(b)).collect();
        Matrix { rows: self.rows, cols: self.cols, data }
    }

    pub fn neg(&self) -> Matrix<F> {
        self.map(|x| x.neg())
    }

    pub fn scale(&self, k: &F) -> Matrix<F> {
        if k.is_one() {
            return self.clone();
        }
        self.map(|x| x.mul(k))
    }

    /// Matrix product, skipping zero entries on both sides.
    pub fn mul(&self, other: &Matrix<F>) -> Matrix<F> {
        assert_eq!(self.cols, other.rows, "shape mismatch in mul");
        let other_rows: Vec<Vec<(usize, &F)>> = (0..other.rows).map(|k| other.row_nonzeros(k).collect()).collect();
        let cols = other.cols;
        let rows: Vec<Vec<F>> = (0..self.rows)
            .into_par_iter()
            .map(|r| {
                let mut terms: Vec<Vec<F>> = vec![Vec::new(); cols];
                for (k, a) in self.row_nonzeros(r) {
                    for &(c, b) in &other_rows[k] {
                        terms[c].push(a.mul(b));
                    }
                }
                terms.iter().map(|t| F::sum(t.iter())).collect()
            })
            .collect();
        Matrix { rows: self.rows, cols, data: rows.into_iter().flatten().collect() }
    }

    /// Plain transpose (not the primed transpose of [`TensorOp::partial_transpose`]).
    pub fn transpose(&self) -> Matrix<F> {
        Matrix::from_fn(self.cols, self.rows, |r, c| self.get(c, r).clone())
    }

    /// Kronecker product `self ⊗ other`.
    pub fn kron(&self, other: &Matrix<F>) -> Matrix<F> {
        let (r2, c2) = (other.rows, other.cols);
        Matrix::from_fn(self.rows * r2, self.cols * c2, |r, c| {
            let a = self.get(r / r2, c / c2);
            if a.is_zero() {
                F::zero()
            } else {
                a.mul(other.get(r % r2, c % c2))
            }
        })
    }

    /// Exact inverse by Gauss–Jordan elimination.
    pub fn inverse(&self) -> Result<Matrix<F>> {
        if self.rows != self.cols {
            return Err(AlgebraError::InvalidArgument("inverse of a non-square matrix".into()));
        }
        let n = self.rows;
        let mut a = self.clone();
        let mut inv = Matrix::identity(n);
        for col in 0..n {
            let piv = (col..n).find(|&r| !a.get(r, col).is_zero()).ok_or(AlgebraError::DivisionByZero)?;
            if piv != col {
                a.swap_rows(piv, col);
                inv.swap_rows(piv, col);
            }
            let p = a.get(col, col).inv()?;
            a.scale_row(col, &p);
            inv.scale_row(col, &p);
            for r in 0..n {
                if r == col || a.get(r, col).is_zero() {
                    continue;
                }
                let f = a.get(r, col).clone();
                a.axpy_row(r, col, &f);
                inv.axpy_row(r, col, &f);
            }
        }
        Ok(inv)
    }

    fn swap_rows(&mut self, i: usize, j: usize) {
        for c in 0..self.cols {
            self.data.swap(i * self.cols + c, j * self.cols + c);
        }
    }

    fn scale_row(&mut self, i: usize, k: &F) {
        for c in 0..self.cols {
            let x = &self.data[i * self.cols + c];
            if !x.is_zero() {
                self.data[i * self.cols + c] = x.mul(k);
            }
        }
    }

    /// `row_r -= f * row_s`.
    fn axpy_row(&mut self, r: usize, s: usize, f: &F) {
        for c in 0..self.cols {
            let y = &self.data[s * self.cols + c];
            if !y.is_zero() {
                let t = f.mul(y);
                let k = r * self.cols + c;
                self.data[k] = self.data[k].sub(&t);
            }
        }
    }

    /// First position where two matrices differ.
    pub fn first_difference(&self, other: &Matrix<F>) -> Option<(usize, usize)> {
        (0..self.rows * self.cols).find(|&k| self.data[k] != other.data[k]).map(|k| (k / self.cols, k % self.cols))
    }

    /// Commutator `self·other - other·self`.
    pub fn commutator(&self, other: &Matrix<F>) -> Matrix<F> {
        self.mul(other).sub(&other.mul(self))
    }
}

impl<F: Scalar> fmt::Debug for Matrix<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{} [", self.rows, self.cols)?;
        for (r, c, x) in self.nonzeros() {
            writeln!(f, "  ({r},{c}) {x}")?;
        }
        write!(f, "]")
    }
}

/// An operator on `(C^{2n})^{⊗m}`.
#[derive(Clone, PartialEq)]
pub struct TensorOp<F> {
    pub n: usize,
    pub m: usize,
    pub mat: Matrix<F>,
}

impl<F: Scalar> fmt::Debug for TensorOp<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "TensorOp(n={}, m={}) {:?}", self.n, self.m, self.mat)
    }
}

fn check_index(i: usize, dim: usize) -> Result<()> {
    if i == 0 || i > dim {
        return Err(AlgebraError::IndexOutOfRange(format!("index {i} not in 1..={dim}")));
    }
    Ok(())
}

/// Splits a flat 0-based index into `m` base-`dim` digits, most significant first.
pub fn digits(mut k: usize, dim: usize, m: usize) -> Vec<usize> {
    let mut d = vec![0; m];
    for slot in (0..m).rev() {
        d[slot] = k % dim;
        k /= dim;
    }
    d
}

/// Inverse of [`digits`].
pub fn flat(d: &[usize], dim: usize) -> usize {
    d.iter().fold(0, |acc, &x| acc * dim + x)
}

impl<F: Scalar> TensorOp<F> {
    /// Dimension `N = 2n` of a single factor.
    pub fn dim(&self) -> usize {
        2 * self.n
    }

    pub fn new(n: usize, m: usize, mat: Matrix<F>) -> Result<TensorOp<F>> {
        let size = (2 * n).pow(m as u32);
        if mat.rows() != size || mat.cols() != size {
            return Err(AlgebraError::InvalidArgument(format!(
                "matrix of size {}x{} does not act on (C^{})^⊗{m}",
                mat.rows(),
                mat.cols(),
                2 * n
            )));
        }
        Ok(TensorOp { n, m, mat })
    }

    pub fn identity(n: usize, m: usize) -> TensorOp<F> {
        TensorOp { n, m, mat: Matrix::identity((2 * n).pow(m as u32)) }
    }

    /// The matrix unit `e_{ij}` on `C^{2n}` (1-based indices).
    pub fn unit(i: usize, j: usize, n: usize) -> Result<TensorOp<F>> {
        check_index(i, 2 * n)?;
        check_index(j, 2 * n)?;
        let mut mat = Matrix::zeros(2 * n, 2 * n);
        mat.set(i - 1, j - 1, F::one());
        Ok(TensorOp { n, m: 1, mat })
    }

    /// The flip `P = Σ e_{ij} ⊗ e_{ji}` on `C^{2n} ⊗ C^{2n}`.
    pub fn flip(n: usize) -> TensorOp<F> {
        let dim = 2 * n;
        let mut mat = Matrix::zeros(dim * dim, dim * dim);
        for i in 0..dim {
            for j in 0..dim {
                mat.set(i * dim + j, j * dim + i, F::one());
            }
        }
        TensorOp { n, m: 2, mat }
    }

    /// `D = diag(q^{ī})`.
    pub fn dmatrix(n: usize, q: &F) -> Result<TensorOp<F>> {
        let c = crate::cartan::CartanDatum::new(n)?;
        let mut mat = Matrix::zeros(2 * n, 2 * n);
        for i in 1..=2 * n {
            mat.set(i - 1, i - 1, q.powi(c.bar(i) as i32)?);
        }
        Ok(TensorOp { n, m: 1, mat })
    }

    /// Places `self` (on `self.m` factors) at the given 1-based factor
    /// positions of a `total`-fold tensor product, identity elsewhere.  The
    /// k-th factor of `self` goes to `positions[k]`.
    pub fn embed(&self, positions: &[usize], total: usize) -> Result<TensorOp<F>> {
        if positions.len() != self.m {
            return Err(AlgebraError::InvalidArgument(format!(
                "{} positions given for an operator on {} factors",
                positions.len(),
                self.m
            )));
        }
        for (k, &p) in positions.iter().enumerate() {
            check_index(p, total)?;
            if positions[..k].contains(&p) {
                return Err(AlgebraError::InvalidArgument(format!("position {p} used twice")));
            }
        }
        let dim = self.dim();
        let size = dim.pow(total as u32);
        let pos: Vec<usize> = positions.iter().map(|p| p - 1).collect();
        let rest: Vec<usize> = (0..total).filter(|k| !pos.contains(k)).collect();
        let mut mat = Matrix::zeros(size, size);
        for (r, c, x) in self.mat.nonzeros() {
            let rd = digits(r, dim, self.m);
            let cd = digits(c, dim, self.m);
            // Enumerate the digits of the untouched factors.
            for free in 0..dim.pow(rest.len() as u32) {
                let fd = digits(free, dim, rest.len());
                let mut row = vec![0; total];
                let mut col = vec![0; total];
                for (k, &p) in pos.iter().enumerate() {
                    row[p] = rd[k];
                    col[p] = cd[k];
                }
                for (k, &p) in rest.iter().enumerate() {
                    row[p] = fd[k];
                    col[p] = fd[k];
                }
                mat.set(flat(&row, dim), flat(&col, dim), x.clone());
            }
        }
        Ok(TensorOp { n: self.n, m: total, mat })
    }

    /// Tensor product `self ⊗ other`.
    pub fn tensor(&self, other: &TensorOp<F>) -> TensorOp<F> {
        TensorOp { n: self.n, m: self.m + other.m, mat: self.mat.kron(&other.mat) }
    }

    pub fn mul(&self, other: &TensorOp<F>) -> TensorOp<F> {
        TensorOp { n: self.n, m: self.m, mat: self.mat.mul(&other.mat) }
    }

    /// The partial transpose `t` on a 1-based factor: `e_{ij} ↦ e_{j'i'}`
    /// with `i' = 2n + 1 - i`.
    pub fn partial_transpose(&self, factor: usize) -> Result<TensorOp<F>> {
        check_index(factor, self.m)?;
        let dim = self.dim();
        let f = factor - 1;
        let size = self.mat.rows();
        let mut mat = Matrix::zeros(size, size);
        for (r, c, x) in self.mat.nonzeros() {
            let mut rd = digits(r, dim, self.m);
            let mut cd = digits(c, dim, self.m);
            let (i, j) = (rd[f], cd[f]);
            rd[f] = dim - 1 - j;
            cd[f] = dim - 1 - i;
            mat.set(flat(&rd, dim), flat(&cd, dim), x.clone());
        }
        Ok(TensorOp { n: self.n, m: self.m, mat })
    }

    /// Compression to the subspace spanned by basis vectors whose k-th
    /// index lies in `bands[k]` (a 1-based inclusive range, or `None` for
    /// the whole factor).  Bands must be symmetric, `[s, s']`.  With
    /// `require_invariant`, fails if the operator does not preserve the
    /// subspace.
    pub fn restrict(&self, bands: &[Option<(usize, usize)>], require_invariant: bool) -> Result<TensorOp<F>> {
        if bands.len() != self.m {
            return Err(AlgebraError::InvalidArgument("one band per factor required".into()));
        }
        let dim = self.dim();
        let mut new_n = None;
        for b in bands.iter().flatten() {
            let (lo, hi) = *b;
            check_index(lo, dim)?;
            check_index(hi, dim)?;
            if lo + hi != dim + 1 || lo > hi {
                return Err(AlgebraError::InvalidArgument(format!("band [{lo},{hi}] is not of the form [s, s']")));
            }
            let k = (hi - lo).div_ceil(2);
            if new_n.is_some_and(|x| x != k) {
                return Err(AlgebraError::InvalidArgument("bands of different sizes".into()));
            }
            new_n = Some(k);
        }
        let new_n = match new_n {
            Some(k) if bands.iter().all(|b| b.is_some()) => k,
            _ => {
                return Err(AlgebraError::InvalidArgument(
                    "every factor needs the same band to keep a tensor-power shape".into(),
                ))
            }
        };
        let lo = bands[0].expect("checked above").0 - 1;
        let inside = |d: &[usize]| d.iter().all(|&x| x >= lo && x < lo + 2 * new_n);
        let new_dim = 2 * new_n;
        let size = new_dim.pow(self.m as u32);
        let mut mat = Matrix::zeros(size, size);
        for (r, c, x) in self.mat.nonzeros() {
            let rd = digits(r, dim, self.m);
            let cd = digits(c, dim, self.m);
            match (inside(&rd), inside(&cd)) {
                (true, true) => {
                    let rr: Vec<usize> = rd.iter().map(|x| x - lo).collect();
                    let cc: Vec<usize> = cd.iter().map(|x| x - lo).collect();
                    mat.set(flat(&rr, new_dim), flat(&cc, new_dim), x.clone());
                }
                (false, true) if require_invariant => {
                    return Err(AlgebraError::Precondition("operator does not preserve the band subspace".into()));
                }
                _ => {}
            }
        }
        Ok(TensorOp { n: new_n, m: self.m, mat })
    }

    /// Entry `⟨rows| op |cols⟩` for 1-based multi-indices.
    pub fn entry(&self, rows: &[usize], cols: &[usize]) -> &F {
        let dim = self.dim();
        let r: Vec<usize> = rows.iter().map(|x| x - 1).collect();
        let c: Vec<usize> = cols.iter().map(|x| x - 1).collect();
        self.mat.get(flat(&r, dim), flat(&c, dim))
    }
}

/// A sparse vector in `(C^{2n})^{⊗m}`, keyed by 0-based index tuples.
#[derive(Clone, Debug, PartialEq)]
pub struct SparseVec<F> {
    pub dim: usize,
    pub entries: BTreeMap<Vec<usize>, F>,
}

impl<F: Scalar> SparseVec<F> {
    /// The basis vector with 1-based indices `idx`.
    pub fn basis(dim: usize, idx: &[usize]) -> SparseVec<F> {
        let mut entries = BTreeMap::new();
        entries.insert(idx.iter().map(|x| x - 1).collect(), F::one());
        SparseVec { dim, entries }
    }

    /// Applies a two-factor operator at 1-based factors `(a, b)`.  With
    /// `transpose`, applies the plain transpose instead (covector action).
    pub fn apply2(&self, op: &Matrix<F>, a: usize, b: usize, transpose: bool) -> SparseVec<F> {
        let dim = self.dim;
        let mut cols: BTreeMap<usize, Vec<(usize, F)>> = BTreeMap::new();
        for (r, c, x) in op.nonzeros() {
            let (r, c) = if transpose { (c, r) } else { (r, c) };
            cols.entry(c).or_default().push((r, x.clone()));
        }
        let mut out: BTreeMap<Vec<usize>, Vec<F>> = BTreeMap::new();
        for (key, val) in &self.entries {
            let c = key[a - 1] * dim + key[b - 1];
            if let Some(list) = cols.get(&c) {
                for (r, x) in list {
                    let mut k = key.clone();
                    k[a - 1] = r / dim;
                    k[b - 1] = r % dim;
                    out.entry(k).or_default().push(x.mul(val));
                }
            }
        }
        let entries =
            out.into_iter().map(|(k, v)| (k, F::sum(v.iter()))).filter(|(_, x)| !x.is_zero()).collect();
        SparseVec { dim, entries }
    }

    pub fn scale(&self, k: &F) -> SparseVec<F> {
        SparseVec {
            dim: self.dim,
            entries: self.entries.iter().map(|(i, x)| (i.clone(), x.mul(k))).filter(|(_, x)| !x.is_zero()).collect(),
        }
    }

    /// First index (1-based) where two vectors differ.
    pub fn first_difference(&self, other: &SparseVec<F>) -> Option<Vec<usize>> {
        let zero = F::zero();
        self.entries
            .keys()
            .chain(other.entries.keys())
            .find(|k| self.entries.get(*k).unwrap_or(&zero) != other.entries.get(*k).unwrap_or(&zero))
            .map(|k| k.iter().map(|x| x + 1).collect())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact_algebra::{BigRat, RatFunc, Var};

    type T = TensorOp<RatFunc>;

    #[test]
    fn units_multiply() {
        let e12 = T::unit(1, 2, 1).unwrap();
        let e21 = T::unit(2, 1, 1).unwrap();
        assert_eq!(e12.mul(&e21), T::unit(1, 1, 1).unwrap());
        assert!(T::unit(3, 1, 1).is_err());
    }

    #[test]
    fn flip_embedding_permutes_factors() {
        let p = T::flip(1).embed(&[1, 2], 3).unwrap();
        // |1,2,2> -> |2,1,2>
        assert!(p.entry(&[2, 1, 2], &[1, 2, 2]).is_one());
        assert!(p.mat.mul(&p.mat).is_identity());
    }

    #[test]
    fn partial_transpose_involution() {
        let x = T::unit(1, 2, 1).unwrap().tensor(&T::unit(1, 1, 1).unwrap());
        let t = x.partial_transpose(1).unwrap();
        // e_12 ↦ e_{2'1'} = e_{12} for N = 2.
        assert_eq!(t, T::unit(1, 2, 1).unwrap().tensor(&T::unit(1, 1, 1).unwrap()));
        assert_eq!(t.partial_transpose(1).unwrap(), x);
    }

    #[test]
    fn dmatrix_values() {
        let d = T::dmatrix(2, &RatFunc::var(Var::Q)).unwrap();
        assert_eq!(d.mat.get(0, 0), &RatFunc::var(Var::Q));
        assert_eq!(d.mat.get(3, 3), &RatFunc::q_pow(-1));
        assert!(d.mat.mul(&d.mat.inverse().unwrap()).is_identity());
    }

    #[test]
    fn restrict_unit() {
        let e22 = T::unit(2, 2, 2).unwrap();
        let r = e22.restrict(&[Some((2, 3))], false).unwrap();
        assert_eq!(r, T::unit(1, 1, 1).unwrap());
    }

    #[test]
    fn inverse_of_rational_matrix() {
        let m = Matrix::from_fn(2, 2, |r, c| BigRat::from_integer(((r + 2 * c + 1) as i64 * (1 + r as i64)).into()));
        let inv = m.inverse().unwrap();
        assert!(m.mul(&inv).is_identity());
    }
}
