use std::collections::BTreeMap;
use std::sync::Arc;

use super::ModeSet;
use crate::error::{Error, Result};
use crate::C64;

/// Amplitudes below this magnitude are not stored.
pub const PRUNE_BELOW: f64 = 1e-16;

/// A single creation or annihilation operator.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Ladder {
    Create(usize),
    Annihilate(usize),
}

/// Sparse state vector over a [`ModeSet`].
#[derive(Debug, Clone)]
pub struct SparseKet {
    modes: Arc<ModeSet>,
    amps: BTreeMap<u64, C64>,
    loss: f64,
}

impl SparseKet {
    pub fn vacuum(modes: Arc<ModeSet>) -> Self {
        let mut amps = BTreeMap::new();
        amps.insert(0, C64::new(1.0, 0.0));
        Self { modes, amps, loss: 0.0 }
    }

    pub fn zero(modes: Arc<ModeSet>) -> Self {
        Self { modes, amps: BTreeMap::new(), loss: 0.0 }
    }

    /// Builds a ket from explicit occupations; entries outside the cutoffs are
    /// counted as truncation loss.
    pub fn from_amplitudes<I>(modes: Arc<ModeSet>, entries: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Vec<usize>, C64)>,
    {
        let mut ket = Self::zero(modes);
        for (occ, amp) in entries {
            if occ.len() != ket.modes.len() {
                return Err(Error::InvalidModeSet(format!(
                    "occupation has {} entries, mode set has {}",
                    occ.len(),
                    ket.modes.len()
                )));
            }
            match ket.modes.pack(&occ) {
                Some(k) => *ket.amps.entry(k).or_default() += amp,
                None => ket.loss += amp.norm_sqr(),
            }
        }
        ket.prune();
        Ok(ket)
    }

    pub(crate) fn from_parts(modes: Arc<ModeSet>, amps: BTreeMap<u64, C64>, loss: f64) -> Self {
        let mut ket = Self { modes, amps, loss };
        ket.prune();
        ket
    }

    /// Moves the ket onto another mode set with the same number of modes
    /// (typically wider cutoffs); entries that do not fit count as loss.
    pub fn embed(&self, modes: Arc<ModeSet>) -> Result<SparseKet> {
        if modes.len() != self.modes.len() {
            return Err(Error::InvalidModeSet(format!("cannot embed {} modes into {}", self.modes.len(), modes.len())));
        }
        let mut amps = BTreeMap::new();
        let mut loss = self.loss;
        for (&k, &a) in &self.amps {
            match modes.pack(&self.modes.unpack(k)) {
                Some(nk) => {
                    amps.insert(nk, a);
                }
                None => loss += a.norm_sqr(),
            }
        }
        Ok(Self::from_parts(modes, amps, loss))
    }

    fn prune(&mut self) {
        self.amps.retain(|_, a| a.norm() >= PRUNE_BELOW);
    }

    pub fn modes(&self) -> &Arc<ModeSet> {
        &self.modes
    }

    pub fn entries(&self) -> &BTreeMap<u64, C64> {
        &self.amps
    }

    pub fn len(&self) -> usize {
        self.amps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.amps.is_empty()
    }

    pub fn amplitude(&self, occ: &[usize]) -> C64 {
        self.modes.pack(occ).and_then(|k| self.amps.get(&k).copied()).unwrap_or_default()
    }

    /// `(occupations, amplitude)` in key order.
    pub fn iter(&self) -> impl Iterator<Item = (Vec<usize>, C64)> + '_ {
        self.amps.iter().map(|(&k, &a)| (self.modes.unpack(k), a))
    }

    pub fn norm_sq(&self) -> f64 {
        self.amps.values().fold(0.0, |acc, a| acc + a.norm_sqr())
    }

    /// Weight dropped at cutoffs so far.
    pub fn truncation_loss(&self) -> f64 {
        self.loss
    }

    /// `⟨self|other⟩`.
    pub fn inner(&self, other: &SparseKet) -> C64 {
        self.amps.iter().filter_map(|(k, a)| other.amps.get(k).map(|b| a.conj() * b)).sum()
    }

    pub fn scale(&self, c: C64) -> SparseKet {
        let amps = self.amps.iter().map(|(&k, &a)| (k, a * c)).collect();
        Self::from_parts(self.modes.clone(), amps, self.loss * c.norm_sqr())
    }

    /// `self + other`; losses add.
    pub fn add(&self, other: &SparseKet) -> Result<SparseKet> {
        self.same_modes(other)?;
        let mut amps = self.amps.clone();
        for (&k, &b) in &other.amps {
            *amps.entry(k).or_default() += b;
        }
        Ok(Self::from_parts(self.modes.clone(), amps, self.loss + other.loss))
    }

    fn same_modes(&self, other: &SparseKet) -> Result<()> {
        if Arc::ptr_eq(&self.modes, &other.modes) || *self.modes == *other.modes {
            Ok(())
        } else {
            Err(Error::InvalidModeSet("kets live on different mode sets".into()))
        }
    }

    pub fn apply_creation(&self, mode: usize) -> Result<SparseKet> {
        self.apply(&[(C64::new(1.0, 0.0), Ladder::Create(mode))])
    }

    pub fn apply_annihilation(&self, mode: usize) -> Result<SparseKet> {
        self.apply(&[(C64::new(1.0, 0.0), Ladder::Annihilate(mode))])
    }

    /// Applies the linear combination `Σ cₖ Lₖ` of ladder operators. Output
    /// components beyond a cutoff are combined first, then dropped, and their
    /// squared magnitude is added to the loss.
    pub fn apply(&self, terms: &[(C64, Ladder)]) -> Result<SparseKet> {
        let m = &self.modes;
        for (_, op) in terms {
            let (Ladder::Create(i) | Ladder::Annihilate(i)) = *op;
            m.label(i)?;
        }
        let mut kept: BTreeMap<u64, C64> = BTreeMap::new();
        let mut dropped: BTreeMap<Vec<usize>, C64> = BTreeMap::new();
        for (&key, &amp) in &self.amps {
            for &(c, op) in terms {
                match op {
                    Ladder::Annihilate(i) => {
                        let n = m.occupation(key, i);
                        if n > 0 {
                            let v = amp * c * (n as f64).sqrt();
                            *kept.entry(key - m.stride(i)).or_default() += v;
                        }
                    }
                    Ladder::Create(i) => {
                        let n = m.occupation(key, i);
                        let v = amp * c * ((n + 1) as f64).sqrt();
                        let mut occ = m.unpack(key);
                        occ[i] += 1;
                        match m.pack(&occ) {
                            Some(k) => *kept.entry(k).or_default() += v,
                            None => *dropped.entry(occ).or_default() += v,
                        }
                    }
                }
            }
        }
        let lost: f64 = dropped.values().map(|a| a.norm_sqr()).sum();
        Ok(Self::from_parts(m.clone(), kept, self.loss + lost))
    }
}
