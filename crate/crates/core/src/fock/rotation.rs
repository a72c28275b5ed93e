use std::collections::{BTreeMap, HashMap};

use nalgebra::DMatrix;

use super::SparseKet;
use crate::error::{Error, Result};
use crate::linalg::unitarity_deviation;
use crate::C64;

const UNITARY_TOL: f64 = 1e-12;

/// Re-expresses `ket` in a rotated basis of the selected modes.
///
/// Row `k` of `u` holds the coefficients of the new mode `b†ₖ = Σⱼ u[k,j] a†_{modes[j]}`,
/// and the new modes take over the positions of the old ones in the same order.
/// Components that land outside a cutoff are dropped into the truncation loss.
pub fn fock_lift_rotation(ket: &SparseKet, modes: &[usize], u: &DMatrix<C64>) -> Result<SparseKet> {
    let k = modes.len();
    if u.nrows() != k || u.ncols() != k {
        return Err(Error::InvalidParameter { name: "rotation", reason: format!("expected a {k}x{k} matrix") });
    }
    let deviation = unitarity_deviation(u);
    if deviation > UNITARY_TOL {
        return Err(Error::NotUnitary { deviation });
    }
    let set = ket.modes();
    for &m in modes {
        set.label(m)?;
    }

    let mut memo: HashMap<Vec<usize>, Vec<(Vec<usize>, C64)>> = HashMap::new();
    let mut kept: BTreeMap<u64, C64> = BTreeMap::new();
    let mut dropped: BTreeMap<Vec<usize>, C64> = BTreeMap::new();

    for (&key, &amp) in ket.entries() {
        let mut occ = set.unpack(key);
        let sub: Vec<usize> = modes.iter().map(|&m| occ[m]).collect();
        let image = memo.entry(sub).or_insert_with_key(|sub| expand(sub, u));
        for (out, c) in image.iter() {
            for (&m, &n) in modes.iter().zip(out) {
                occ[m] = n;
            }
            let v = amp * c;
            match set.pack(&occ) {
                Some(kk) => *kept.entry(kk).or_default() += v,
                None => *dropped.entry(occ.clone()).or_default() += v,
            }
        }
    }
    let lost: f64 = dropped.values().map(|a| a.norm_sqr()).sum();
    Ok(SparseKet::from_parts(set.clone(), kept, ket.truncation_loss() + lost))
}

/// Image of `Πⱼ (a†ⱼ)^{nⱼ}/√nⱼ! |0⟩` in the normalized occupation basis of the
/// rotated modes, using `a†ⱼ = Σₖ conj(u[k,j]) b†ₖ`.
fn expand(sub: &[usize], u: &DMatrix<C64>) -> Vec<(Vec<usize>, C64)> {
    let k = sub.len();
    // monomial coefficients of Π (b†)^m
    let mut poly: BTreeMap<Vec<usize>, C64> = BTreeMap::new();
    poly.insert(vec![0; k], C64::new(1.0, 0.0));
    for (j, &n) in sub.iter().enumerate() {
        for _ in 0..n {
            let mut next: BTreeMap<Vec<usize>, C64> = BTreeMap::new();
            for (mono, c) in &poly {
                for kk in 0..k {
                    let w = u[(kk, j)].conj();
                    if w == C64::new(0.0, 0.0) {
                        continue;
                    }
                    let mut m = mono.clone();
                    m[kk] += 1;
                    *next.entry(m).or_default() += c * w;
                }
            }
            poly = next;
        }
    }
    let norm_in: f64 = sub.iter().map(|&n| factorial(n)).product::<f64>().sqrt();
    poly.into_iter()
        .map(|(m, c)| {
            let norm_out: f64 = m.iter().map(|&n| factorial(n)).product::<f64>().sqrt();
            (m, c * (norm_out / norm_in))
        })
        .collect()
}

fn factorial(n: usize) -> f64 {
    (1..=n).map(|i| i as f64).product()
}
