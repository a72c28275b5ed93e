//! Small dense helpers on top of nalgebra.

use nalgebra::{DMatrix, DVector};

use crate::error::{invalid, Result};
use crate::C64;

const FLUSH_RELATIVE: f64 = 1e-30;

/// Largest entry of `|M − M†|`.
pub fn hermiticity_deviation(m: &DMatrix<C64>) -> f64 {
    if m.nrows() != m.ncols() {
        return f64::INFINITY;
    }
    let n = m.nrows();
    let mut worst = 0.0f64;
    for i in 0..n {
        for j in i..n {
            worst = worst.max((m[(i, j)] - m[(j, i)].conj()).norm());
        }
    }
    worst
}

/// Largest entry of `|U U† − 1|`; infinite for non-square input.
pub fn unitarity_deviation(u: &DMatrix<C64>) -> f64 {
    if u.nrows() != u.ncols() {
        return f64::INFINITY;
    }
    let p = u * u.adjoint();
    let mut worst = 0.0f64;
    for i in 0..p.nrows() {
        for j in 0..p.ncols() {
            let target = if i == j { 1.0 } else { 0.0 };
            worst = worst.max((p[(i, j)] - C64::new(target, 0.0)).norm());
        }
    }
    worst
}

/// Connected components of the exact non-zero pattern of a square matrix,
/// each sorted, ordered by their smallest index.
pub fn block_structure(m: &DMatrix<C64>) -> Vec<Vec<usize>> {
    let n = m.nrows();
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(p: &mut [usize], mut x: usize) -> usize {
        while p[x] != x {
            p[x] = p[p[x]];
            x = p[x];
        }
        x
    }
    for j in 0..n {
        for i in 0..n {
            if i != j && (m[(i, j)].re != 0.0 || m[(i, j)].im != 0.0) {
                let (a, b) = (find(&mut parent, i), find(&mut parent, j));
                if a != b {
                    parent[a.max(b)] = a.min(b);
                }
            }
        }
    }
    let mut groups: std::collections::BTreeMap<usize, Vec<usize>> = Default::default();
    for i in 0..n {
        let r = find(&mut parent, i);
        groups.entry(r).or_default().push(i);
    }
    groups.into_values().collect()
}

/// Ascending eigenvalues of a Hermitian matrix. Exact block structure is
/// exploited, so parity-conserving operators cost one small solve per sector.
///
/// Entries below `1e-30` of the largest one are flushed to zero first. By
/// Weyl's inequality this moves no eigenvalue by more than `dim · 1e-30 · max`,
/// and it keeps the QR iteration away from products that underflow into
/// subnormals, where it returns NaN.
pub fn hermitian_eigenvalues(m: &DMatrix<C64>) -> Vec<f64> {
    let scale = m.iter().fold(0.0f64, |acc, z| acc.max(z.norm()));
    let floor = FLUSH_RELATIVE * scale;
    let m = &m.map(|z| if z.norm() < floor { C64::new(0.0, 0.0) } else { z });
    let mut out = Vec::with_capacity(m.nrows());
    for block in block_structure(m) {
        if block.len() == 1 {
            out.push(m[(block[0], block[0])].re);
            continue;
        }
        let k = block.len();
        let sub = DMatrix::from_fn(k, k, |i, j| m[(block[i], block[j])]);
        let sub = (&sub + sub.adjoint()) * C64::new(0.5, 0.0);
        out.extend(sub.symmetric_eigenvalues().iter().copied());
    }
    out.sort_by(|a, b| a.total_cmp(b));
    out
}

/// `Σ |λ|` for a Hermitian matrix.
pub fn trace_norm(m: &DMatrix<C64>) -> f64 {
    hermitian_eigenvalues(m).iter().map(|x| x.abs()).sum()
}

/// A unitary whose first row is `g / ‖g‖`, completed by Gram–Schmidt against
/// the standard basis.
pub fn complete_unitary(g: &[C64]) -> Result<DMatrix<C64>> {
    let n = g.len();
    if n == 0 {
        return Err(invalid("g", "empty coefficient vector"));
    }
    let norm = g.iter().map(|x| x.norm_sqr()).sum::<f64>().sqrt();
    if !(norm > 0.0) || !norm.is_finite() {
        return Err(invalid("g", format!("cannot normalize vector of norm {norm}")));
    }
    let mut rows: Vec<DVector<C64>> = vec![DVector::from_iterator(n, g.iter().map(|x| x / norm))];
    for e in 0..n {
        if rows.len() == n {
            break;
        }
        let mut v = DVector::from_element(n, C64::new(0.0, 0.0));
        v[e] = C64::new(1.0, 0.0);
        // two passes keep the basis orthonormal to rounding
        for _ in 0..2 {
            for r in &rows {
                let proj = r.dotc(&v);
                v -= r * proj;
            }
        }
        let vn = v.norm();
        if vn > 1e-6 {
            rows.push(v / C64::new(vn, 0.0));
        }
    }
    if rows.len() != n {
        return Err(invalid("g", "basis completion failed"));
    }
    Ok(DMatrix::from_fn(n, n, |i, j| rows[i][j]))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn completion_is_unitary_with_first_row_g() {
        let g = [C64::new(0.3, 0.1), C64::new(-0.2, 0.4), C64::new(0.0, 0.0), C64::new(1.0, -0.5)];
        let u = complete_unitary(&g).unwrap();
        assert!(unitarity_deviation(&u) < 1e-13);
        let norm = g.iter().map(|x| x.norm_sqr()).sum::<f64>().sqrt();
        for j in 0..4 {
            assert!((u[(0, j)] - g[j] / norm).norm() < 1e-15);
        }
        assert!(complete_unitary(&[C64::new(0.0, 0.0)]).is_err());
        assert!(complete_unitary(&[]).is_err());
    }

    #[test]
    fn block_eigenvalues_match_dense() {
        let m = DMatrix::from_fn(6, 6, |i, j| {
            if (i + j) % 2 == 1 {
                C64::new(0.0, 0.0)
            } else if i == j {
                C64::new(i as f64, 0.0)
            } else {
                C64::new(0.1 * (i + j) as f64, 0.05 * (i as f64 - j as f64))
            }
        });
        assert_eq!(block_structure(&m).len(), 2);
        let fast = hermitian_eigenvalues(&m);
        let mut dense: Vec<f64> = m.clone().symmetric_eigenvalues().iter().copied().collect();
        dense.sort_by(|a, b| a.total_cmp(b));
        for (a, b) in fast.iter().zip(&dense) {
            assert!((a - b).abs() < 1e-12);
        }
    }
}
