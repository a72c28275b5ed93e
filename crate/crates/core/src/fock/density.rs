use std::collections::BTreeMap;

use nalgebra::DMatrix;

use super::SparseKet;
use crate::error::{Error, Result};
use crate::linalg::{hermitian_eigenvalues, hermiticity_deviation};
use crate::C64;

const HERMITIAN_TOL: f64 = 1e-12;
const TRACE_SLACK: f64 = 1e-9;
const NEGATIVE_EIG_TOL: f64 = 1e-9;

/// Hermitian operator on a composite space with recorded subsystem dimensions
/// (row-major: the first subsystem is the most significant index).
#[derive(Debug, Clone, PartialEq)]
pub struct DensityOperator {
    matrix: DMatrix<C64>,
    dims: Vec<usize>,
    truncation_loss: f64,
}

impl DensityOperator {
    pub fn new(matrix: DMatrix<C64>, dims: Vec<usize>) -> Result<Self> {
        let d: usize = dims.iter().product();
        if matrix.nrows() != d || matrix.ncols() != d || dims.is_empty() {
            return Err(Error::InvalidParameter {
                name: "dims",
                reason: format!("dims {dims:?} do not match a {}x{} matrix", matrix.nrows(), matrix.ncols()),
            });
        }
        let deviation = hermiticity_deviation(&matrix);
        if deviation > HERMITIAN_TOL {
            return Err(Error::NotHermitian { deviation });
        }
        Ok(Self { matrix, dims, truncation_loss: 0.0 })
    }

    /// `|ψ⟩⟨ψ|` for a dense vector.
    pub fn from_pure(psi: &[C64], dims: Vec<usize>) -> Result<Self> {
        let v = nalgebra::DVector::from_column_slice(psi);
        Self::new(&v * v.adjoint(), dims)
    }

    pub fn with_loss(mut self, loss: f64) -> Self {
        self.truncation_loss = loss;
        self
    }

    pub fn matrix(&self) -> &DMatrix<C64> {
        &self.matrix
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn dim(&self) -> usize {
        self.matrix.nrows()
    }

    pub fn truncation_loss(&self) -> f64 {
        self.truncation_loss
    }

    pub fn trace(&self) -> f64 {
        self.matrix.trace().re
    }

    /// Divides by the trace; the discarded weight `1 − trace` is added to the loss.
    pub fn normalized(&self) -> Result<Self> {
        let t = self.trace();
        if !(t > 0.0) {
            return Err(Error::BadTrace { trace: t, limit: 0.0 });
        }
        Ok(Self {
            matrix: self.matrix.map(|x| x / t),
            dims: self.dims.clone(),
            truncation_loss: self.truncation_loss + (1.0 - t),
        })
    }

    pub fn eigenvalues(&self) -> Vec<f64> {
        hermitian_eigenvalues(&self.matrix)
    }

    pub fn min_eigenvalue(&self) -> f64 {
        self.eigenvalues().first().copied().unwrap_or(0.0)
    }

    /// Hermitian, trace in `(0, 1 + 1e-9]`, smallest eigenvalue ≥ −1e-9.
    pub fn check_physical(&self) -> Result<()> {
        let deviation = hermiticity_deviation(&self.matrix);
        if deviation > HERMITIAN_TOL {
            return Err(Error::NotHermitian { deviation });
        }
        let t = self.trace();
        if !(t > 0.0 && t <= 1.0 + TRACE_SLACK) {
            return Err(Error::BadTrace { trace: t, limit: TRACE_SLACK });
        }
        let min = self.min_eigenvalue();
        if min < -NEGATIVE_EIG_TOL {
            return Err(Error::InvalidParameter {
                name: "density operator",
                reason: format!("negative eigenvalue {min:.3e}"),
            });
        }
        Ok(())
    }

    /// Reduced operator on the subsystems in `keep` (in that order).
    pub fn partial_trace(&self, keep: &[usize]) -> Result<Self> {
        let n = self.dims.len();
        if keep.is_empty() {
            return Err(Error::InvalidParameter { name: "keep", reason: "must not be empty".into() });
        }
        for (i, &k) in keep.iter().enumerate() {
            if k >= n || keep[..i].contains(&k) {
                return Err(Error::BadSubsystem { index: k, count: n });
            }
        }
        let traced: Vec<usize> = (0..n).filter(|s| !keep.contains(s)).collect();
        let kept_dims: Vec<usize> = keep.iter().map(|&s| self.dims[s]).collect();
        let traced_dims: Vec<usize> = traced.iter().map(|&s| self.dims[s]).collect();
        let dk: usize = kept_dims.iter().product();
        let dt: usize = traced_dims.iter().product();

        let strides = strides(&self.dims);
        let full_index = |kept: usize, tr: usize| -> usize {
            let mut idx = 0;
            let mut rem = kept;
            for (pos, &s) in keep.iter().enumerate().rev() {
                idx += (rem % kept_dims[pos]) * strides[s];
                rem /= kept_dims[pos];
            }
            let mut rem = tr;
            for (pos, &s) in traced.iter().enumerate().rev() {
                idx += (rem % traced_dims[pos]) * strides[s];
                rem /= traced_dims[pos];
            }
            idx
        };

        let mut out = DMatrix::zeros(dk, dk);
        for a in 0..dk {
            for b in 0..dk {
                let mut acc = C64::new(0.0, 0.0);
                for t in 0..dt {
                    acc += self.matrix[(full_index(a, t), full_index(b, t))];
                }
                out[(a, b)] = acc;
            }
        }
        Ok(Self::new(out, kept_dims)?.with_loss(self.truncation_loss))
    }

    /// Zero-pads every subsystem up to `dims` (occupation `n` keeps index `n`).
    pub fn embed(&self, dims: &[usize]) -> Result<Self> {
        if dims.len() != self.dims.len() || dims.iter().zip(&self.dims).any(|(a, b)| a < b) {
            return Err(Error::InvalidParameter {
                name: "dims",
                reason: format!("cannot embed {:?} into {dims:?}", self.dims),
            });
        }
        let old = strides(&self.dims);
        let new = strides(dims);
        let map = |i: usize| -> usize { (0..dims.len()).map(|s| ((i / old[s]) % self.dims[s]) * new[s]).sum() };
        let d: usize = dims.iter().product();
        let mut out = DMatrix::zeros(d, d);
        for i in 0..self.dim() {
            for j in 0..self.dim() {
                out[(map(i), map(j))] = self.matrix[(i, j)];
            }
        }
        Ok(Self { matrix: out, dims: dims.to_vec(), truncation_loss: self.truncation_loss })
    }
}

fn strides(dims: &[usize]) -> Vec<usize> {
    let mut s = vec![1; dims.len()];
    for i in (0..dims.len().saturating_sub(1)).rev() {
        s[i] = s[i + 1] * dims[i + 1];
    }
    s
}

/// `Tr_rest |left⟩⟨right|` over every mode not listed in `keep`; the result is
/// indexed by the occupations of the kept modes (row-major in `keep` order).
pub fn cross_reduced(left: &SparseKet, right: &SparseKet, keep: &[usize]) -> Result<DMatrix<C64>> {
    let set = left.modes();
    if **set != **right.modes() {
        return Err(Error::InvalidModeSet("kets live on different mode sets".into()));
    }
    if keep.is_empty() {
        return Err(Error::InvalidParameter { name: "keep", reason: "must not be empty".into() });
    }
    for (i, &m) in keep.iter().enumerate() {
        set.label(m)?;
        if keep[..i].contains(&m) {
            return Err(Error::InvalidParameter { name: "keep", reason: "repeated mode".into() });
        }
    }
    let dims: Vec<usize> = keep.iter().map(|&m| set.cutoff(m) + 1).collect();
    let d: usize = dims.iter().product();

    let split = |key: u64| -> (u64, usize) {
        let mut rest = key;
        let mut idx = 0;
        for (&m, &dm) in keep.iter().zip(&dims) {
            let n = set.occupation(key, m);
            rest -= n as u64 * set.stride(m);
            idx = idx * dm + n;
        }
        (rest, idx)
    };

    let mut by_rest: BTreeMap<u64, Vec<(usize, C64)>> = BTreeMap::new();
    for (&k, &a) in right.entries() {
        let (rest, idx) = split(k);
        by_rest.entry(rest).or_default().push((idx, a));
    }
    let mut out = DMatrix::zeros(d, d);
    for (&k, &a) in left.entries() {
        let (rest, i) = split(k);
        if let Some(col) = by_rest.get(&rest) {
            for &(j, b) in col {
                out[(i, j)] += a * b.conj();
            }
        }
    }
    Ok(out)
}

/// Reduced density operator of a ket on the modes in `keep`.
pub fn partial_trace(ket: &SparseKet, keep: &[usize]) -> Result<DensityOperator> {
    let m = cross_reduced(ket, ket, keep)?;
    let m = (&m + m.adjoint()) * C64::new(0.5, 0.0);
    let dims = keep.iter().map(|&k| ket.modes().cutoff(k) + 1).collect();
    Ok(DensityOperator::new(m, dims)?.with_loss(ket.truncation_loss()))
}

/// Transposes the indices of one subsystem.
pub fn partial_transpose(rho: &DensityOperator, subsystem: usize) -> Result<DMatrix<C64>> {
    let dims = rho.dims();
    if subsystem >= dims.len() {
        return Err(Error::BadSubsystem { index: subsystem, count: dims.len() });
    }
    let st = strides(dims)[subsystem];
    let ds = dims[subsystem];
    let m = rho.matrix();
    let d = rho.dim();
    let mut out = DMatrix::zeros(d, d);
    for col in 0..d {
        let js = (col / st) % ds;
        for row in 0..d {
            let is = (row / st) % ds;
            let r = row + js * st - is * st;
            let c = col + is * st - js * st;
            out[(r, c)] = m[(row, col)];
        }
    }
    Ok(out)
}

/// `½ ‖a − b‖₁`.
pub fn trace_distance(a: &DensityOperator, b: &DensityOperator) -> Result<f64> {
    if a.dims() != b.dims() {
        return Err(Error::InvalidParameter { name: "dims", reason: format!("{:?} vs {:?}", a.dims(), b.dims()) });
    }
    let diff = a.matrix() - b.matrix();
    Ok(0.5 * hermitian_eigenvalues(&diff).iter().map(|x| x.abs()).sum::<f64>())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64) -> C64 {
        C64::new(re, 0.0)
    }

    fn bell() -> DensityOperator {
        let h = std::f64::consts::FRAC_1_SQRT_2;
        DensityOperator::from_pure(&[c(h), c(0.0), c(0.0), c(h)], vec![2, 2]).unwrap()
    }

    #[test]
    fn bell_partial_transpose_has_minus_half() {
        let pt = partial_transpose(&bell(), 1).unwrap();
        let ev = hermitian_eigenvalues(&pt);
        assert!((ev[0] + 0.5).abs() < 1e-14);
        let pt0 = partial_transpose(&bell(), 0).unwrap();
        assert!((hermitian_eigenvalues(&pt0)[0] + 0.5).abs() < 1e-14);
        assert!(partial_transpose(&bell(), 2).is_err());
    }

    #[test]
    fn product_state_spectrum_survives_transpose() {
        let a = DMatrix::from_row_slice(2, 2, &[c(0.7), C64::new(0.1, 0.2), C64::new(0.1, -0.2), c(0.3)]);
        let b = DMatrix::from_row_slice(
            3,
            3,
            &[c(0.5), c(0.1), c(0.0), c(0.1), c(0.3), C64::new(0.0, 0.05), c(0.0), C64::new(0.0, -0.05), c(0.2)],
        );
        let rho = DensityOperator::new(a.kronecker(&b), vec![2, 3]).unwrap();
        let before = rho.eigenvalues();
        let after = hermitian_eigenvalues(&partial_transpose(&rho, 0).unwrap());
        for (x, y) in before.iter().zip(&after) {
            assert!((x - y).abs() < 1e-13);
        }
        let back = rho.partial_trace(&[1]).unwrap();
        assert!((back.matrix() - &b).norm() < 1e-14);
    }

    #[test]
    fn partial_trace_rejects_bad_keep() {
        assert!(bell().partial_trace(&[2]).is_err());
        assert!(bell().partial_trace(&[]).is_err());
        assert!(bell().partial_trace(&[0, 0]).is_err());
    }

    #[test]
    fn embed_pads_with_zeros() {
        let e = bell().embed(&[2, 3]).unwrap();
        assert_eq!(e.dim(), 6);
        assert!((e.trace() - 1.0).abs() < 1e-15);
        assert!((e.matrix()[(0, 4)] - c(0.5)).norm() < 1e-15);
    }

    #[test]
    fn non_hermitian_rejected() {
        let m = DMatrix::from_row_slice(2, 2, &[c(0.5), c(0.2), c(0.0), c(0.5)]);
        assert!(matches!(DensityOperator::new(m, vec![2]), Err(Error::NotHermitian { .. })));
    }
}
