//! Fuzzy subsets and fuzzy relations over `{0, …, n-1}`.
//!
//! Vectors and matrices are dense. Compositions are sup-⊗ products; the `_eps`
//! variants replace ⊗ by ⊗ε and the supremum by ⋁ε, so with `eps = 0` they
//! coincide with the exact ones.

use std::ops::{Deref, DerefMut, Index, IndexMut};

use crate::error::{Error, Result};
use crate::lattice::{self, Lattice};

#[derive(Clone, Debug, PartialEq, Default)]
pub struct FuzzyVec(pub Vec<f64>);

impl FuzzyVec {
    pub fn zeros(n: usize) -> Self {
        FuzzyVec(vec![0.0; n])
    }

    pub fn constant(n: usize, v: f64) -> Self {
        FuzzyVec(vec![v; n])
    }

    /// Indicator of a single index.
    pub fn unit(n: usize, q: usize) -> Self {
        let mut v = FuzzyVec::zeros(n);
        v[q] = 1.0;
        v
    }

    pub fn validated(values: Vec<f64>) -> Result<Self> {
        for &x in &values {
            lattice::Value::new(x)?;
        }
        Ok(FuzzyVec(values))
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Indices with a strictly positive degree.
    pub fn support(&self) -> Vec<usize> {
        (0..self.len()).filter(|&i| self.0[i] > 0.0).collect()
    }

    /// Per-entry rounding to the nearest multiple of `precision`.
    pub fn key(&self, precision: f64) -> Vec<i64> {
        quantize(&self.0, precision)
    }
}

impl From<Vec<f64>> for FuzzyVec {
    fn from(v: Vec<f64>) -> Self {
        FuzzyVec(v)
    }
}

impl Deref for FuzzyVec {
    type Target = [f64];
    fn deref(&self) -> &[f64] {
        &self.0
    }
}

impl DerefMut for FuzzyVec {
    fn deref_mut(&mut self) -> &mut [f64] {
        &mut self.0
    }
}

pub(crate) fn quantize(values: &[f64], precision: f64) -> Vec<i64> {
    values.iter().map(|&x| (x / precision).round() as i64).collect()
}

/// Square fuzzy relation, row-major.
#[derive(Clone, Debug, PartialEq, Default)]
pub struct FuzzyMat {
    n: usize,
    data: Vec<f64>,
}

impl FuzzyMat {
    pub fn zeros(n: usize) -> Self {
        FuzzyMat { n, data: vec![0.0; n * n] }
    }

    pub fn constant(n: usize, v: f64) -> Self {
        FuzzyMat { n, data: vec![v; n * n] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = FuzzyMat::zeros(n);
        for i in 0..n {
            m[(i, i)] = 1.0;
        }
        m
    }

    /// Builds a matrix from rows, checking squareness and the value range.
    pub fn from_rows(rows: Vec<Vec<f64>>) -> Result<Self> {
        let n = rows.len();
        let mut data = Vec::with_capacity(n * n);
        for row in rows {
            if row.len() != n {
                return Err(Error::DimensionMismatch { expected: n, found: row.len() });
            }
            for x in row {
                lattice::Value::new(x)?;
                data.push(x);
            }
        }
        Ok(FuzzyMat { n, data })
    }

    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize) -> f64) -> Self {
        let mut data = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                data.push(f(i, j));
            }
        }
        FuzzyMat { n, data }
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn row(&self, i: usize) -> &[f64] {
        &self.data[i * self.n..(i + 1) * self.n]
    }

    pub fn rows(&self) -> impl Iterator<Item = &[f64]> {
        // chunks(0) panics, so special-case the empty matrix
        self.data.chunks(self.n.max(1)).take(self.n)
    }

    pub fn column(&self, j: usize) -> FuzzyVec {
        FuzzyVec((0..self.n).map(|i| self[(i, j)]).collect())
    }

    pub fn transpose(&self) -> Self {
        FuzzyMat::from_fn(self.n, |i, j| self[(j, i)])
    }

    pub fn is_reflexive(&self) -> bool {
        (0..self.n).all(|i| self[(i, i)] == 1.0)
    }

    pub fn values(&self) -> &[f64] {
        &self.data
    }

    /// Sub-relation on the given indices, in the given order.
    pub fn restrict(&self, keep: &[usize]) -> Self {
        FuzzyMat::from_fn(keep.len(), |i, j| self[(keep[i], keep[j])])
    }
}

impl Index<(usize, usize)> for FuzzyMat {
    type Output = f64;
    fn index(&self, (i, j): (usize, usize)) -> &f64 {
        &self.data[i * self.n + j]
    }
}

impl IndexMut<(usize, usize)> for FuzzyMat {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut f64 {
        &mut self.data[i * self.n + j]
    }
}

fn same_len(expected: usize, found: usize) -> Result<()> {
    if expected == found {
        Ok(())
    } else {
        Err(Error::DimensionMismatch { expected, found })
    }
}

/// `f ∘ε g = ⋁ε { f(c) ⊗ε g(c) }`.
pub fn compose_eps_vv(f: &[f64], g: &[f64], eps: f64, lat: Lattice) -> Result<f64> {
    same_len(f.len(), g.len())?;
    Ok(lattice::join_eps(f.iter().zip(g).map(|(&x, &y)| lat.tnorm_eps(x, y, eps)), eps))
}

pub fn compose_eps_vm(f: &[f64], r: &FuzzyMat, eps: f64, lat: Lattice) -> Result<FuzzyVec> {
    same_len(r.dim(), f.len())?;
    let n = r.dim();
    Ok(FuzzyVec(
        (0..n)
            .map(|b| lattice::join_eps((0..n).map(|c| lat.tnorm_eps(f[c], r[(c, b)], eps)), eps))
            .collect(),
    ))
}

pub fn compose_eps_mv(r: &FuzzyMat, f: &[f64], eps: f64, lat: Lattice) -> Result<FuzzyVec> {
    same_len(r.dim(), f.len())?;
    Ok(FuzzyVec(
        r.rows()
            .map(|row| lattice::join_eps(row.iter().zip(f).map(|(&x, &y)| lat.tnorm_eps(x, y, eps)), eps))
            .collect(),
    ))
}

pub fn compose_eps_mm(r: &FuzzyMat, s: &FuzzyMat, eps: f64, lat: Lattice) -> Result<FuzzyMat> {
    same_len(r.dim(), s.dim())?;
    let n = r.dim();
    Ok(FuzzyMat::from_fn(n, |a, b| {
        lattice::join_eps((0..n).map(|c| lat.tnorm_eps(r[(a, c)], s[(c, b)], eps)), eps)
    }))
}

pub fn compose_vv(f: &[f64], g: &[f64], lat: Lattice) -> Result<f64> {
    compose_eps_vv(f, g, 0.0, lat)
}

pub fn compose_vm(f: &[f64], r: &FuzzyMat, lat: Lattice) -> Result<FuzzyVec> {
    compose_eps_vm(f, r, 0.0, lat)
}

pub fn compose_mv(r: &FuzzyMat, f: &[f64], lat: Lattice) -> Result<FuzzyVec> {
    compose_eps_mv(r, f, 0.0, lat)
}

pub fn compose_mm(r: &FuzzyMat, s: &FuzzyMat, lat: Lattice) -> Result<FuzzyMat> {
    compose_eps_mm(r, s, 0.0, lat)
}

/// `(f /ε g)(a, b) = g(b) →ε f(a)`.
pub fn right_residual_eps(f: &[f64], g: &[f64], eps: f64, lat: Lattice) -> Result<FuzzyMat> {
    same_len(f.len(), g.len())?;
    Ok(FuzzyMat::from_fn(f.len(), |a, b| lat.residuum_eps(g[b], f[a], eps)))
}

/// `(f \ε g)(a, b) = f(a) →ε g(b)`.
pub fn left_residual_eps(f: &[f64], g: &[f64], eps: f64, lat: Lattice) -> Result<FuzzyMat> {
    same_len(f.len(), g.len())?;
    Ok(FuzzyMat::from_fn(f.len(), |a, b| lat.residuum_eps(f[a], g[b], eps)))
}

pub fn truncate_vec(f: &[f64], eps: f64) -> FuzzyVec {
    FuzzyVec(f.iter().map(|&x| lattice::truncate(x, eps)).collect())
}

pub fn truncate_mat(r: &FuzzyMat, eps: f64) -> FuzzyMat {
    FuzzyMat { n: r.n, data: r.data.iter().map(|&x| lattice::truncate(x, eps)).collect() }
}

pub fn leq_eps_vec(f: &[f64], g: &[f64], eps: f64) -> bool {
    f.len() == g.len() && f.iter().zip(g).all(|(&x, &y)| lattice::leq_eps(x, y, eps))
}

pub fn eq_eps_vec(f: &[f64], g: &[f64], eps: f64) -> bool {
    leq_eps_vec(f, g, eps) && leq_eps_vec(g, f, eps)
}

pub fn leq_eps_mat(r: &FuzzyMat, s: &FuzzyMat, eps: f64) -> bool {
    r.n == s.n && leq_eps_vec(&r.data, &s.data, eps)
}

pub fn eq_eps_mat(r: &FuzzyMat, s: &FuzzyMat, eps: f64) -> bool {
    leq_eps_mat(r, s, eps) && leq_eps_mat(s, r, eps)
}

/// Reflexive, ε-transitive and fixed by ε-truncation.
pub fn is_eps_fpo(z: &FuzzyMat, eps: f64, lat: Lattice) -> bool {
    is_eps_fpo_within(z, eps, lat, 0.0)
}

/// [`is_eps_fpo`] allowing ε-transitivity to fail by at most `tol` per entry,
/// to absorb rounding in products of computed residua.
pub fn is_eps_fpo_within(z: &FuzzyMat, eps: f64, lat: Lattice, tol: f64) -> bool {
    if !z.is_reflexive() || *z != truncate_mat(z, eps) {
        return false;
    }
    let zz = compose_eps_mm(z, z, eps, lat).expect("square");
    zz.data.iter().zip(&z.data).all(|(&x, &y)| lattice::leq_eps(x - tol, y, eps))
}

/// Row `q` of `z`.
pub fn afterset(z: &FuzzyMat, q: usize) -> FuzzyVec {
    FuzzyVec(z.row(q).to_vec())
}

/// Column `q` of `z`.
pub fn foreset(z: &FuzzyMat, q: usize) -> FuzzyVec {
    z.column(q)
}
