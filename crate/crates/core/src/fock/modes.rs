use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Region {
    I,
    II,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Helicity {
    Up,
    Down,
}

impl Helicity {
    pub fn flip(self) -> Self {
        match self {
            Helicity::Up => Helicity::Down,
            Helicity::Down => Helicity::Up,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum ModeRole {
    /// Frequency bin of the discretized band.
    Bin(usize),
    /// The detector mode `d_σ` (or its region-II partner).
    Detector,
    /// The k-th mode of the orthogonal complement of the detector mode.
    Complement(usize),
    /// Stand-in for everything outside the detector band.
    Environment,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct ModeLabel {
    pub region: Region,
    pub helicity: Helicity,
    pub role: ModeRole,
}

impl ModeLabel {
    pub fn new(region: Region, helicity: Helicity, role: ModeRole) -> Self {
        Self { region, helicity, role }
    }
}

impl fmt::Display for ModeLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let h = match self.helicity {
            Helicity::Up => "up",
            Helicity::Down => "down",
        };
        let role = match self.role {
            ModeRole::Bin(j) => format!("bin{j}"),
            ModeRole::Detector => "det".to_string(),
            ModeRole::Complement(k) => format!("perp{k}"),
            ModeRole::Environment => "env".to_string(),
        };
        write!(f, "{:?}/{h}/{role}", self.region)
    }
}

/// Ordered list of modes with cutoffs and the region I ↔ II pairing.
#[derive(Debug, Clone, PartialEq)]
pub struct ModeSet {
    labels: Vec<ModeLabel>,
    cutoffs: Vec<usize>,
    total_cutoff: Option<usize>,
    partners: Vec<Option<usize>>,
    strides: Vec<u64>,
}

impl ModeSet {
    /// All modes share the cutoff `n_max`.
    pub fn new(labels: Vec<ModeLabel>, n_max: usize) -> Result<Self> {
        let cutoffs = vec![n_max; labels.len()];
        Self::with_cutoffs(labels, cutoffs)
    }

    pub fn with_cutoffs(labels: Vec<ModeLabel>, cutoffs: Vec<usize>) -> Result<Self> {
        if labels.is_empty() {
            return Err(Error::InvalidModeSet("no modes".into()));
        }
        if cutoffs.len() != labels.len() {
            return Err(Error::InvalidModeSet("one cutoff per mode required".into()));
        }
        for (i, l) in labels.iter().enumerate() {
            if labels[..i].contains(l) {
                return Err(Error::InvalidModeSet(format!("duplicate label {l}")));
            }
        }
        let mut strides = vec![1u64; labels.len()];
        let mut acc: u64 = 1;
        for i in (0..labels.len()).rev() {
            strides[i] = acc;
            acc = acc
                .checked_mul(cutoffs[i] as u64 + 1)
                .ok_or_else(|| Error::InvalidModeSet("state space exceeds 64-bit indexing".into()))?;
        }
        let partners = vec![None; labels.len()];
        Ok(Self { labels, cutoffs, total_cutoff: None, partners, strides })
    }

    /// Caps the total photon number across all modes.
    pub fn with_total_cutoff(mut self, n_tot: usize) -> Self {
        self.total_cutoff = Some(n_tot);
        self
    }

    /// Records that region-II mode `ii` is the squeeze partner of region-I mode `i`.
    pub fn declare_partner(&mut self, i: usize, ii: usize) -> Result<()> {
        let (a, b) = (self.label(i)?, self.label(ii)?);
        if a.region != Region::I || b.region != Region::II {
            return Err(Error::InvalidModeSet(format!("{a} and {b} are not a region I/II pair")));
        }
        if a.helicity.flip() != b.helicity {
            return Err(Error::InvalidModeSet(format!("partner {b} of {a} must carry the opposite helicity")));
        }
        if self.partners[i].is_some() || self.partners[ii].is_some() {
            return Err(Error::InvalidModeSet(format!("{a} or {b} already has a partner")));
        }
        self.partners[i] = Some(ii);
        self.partners[ii] = Some(i);
        Ok(())
    }

    pub fn partner(&self, mode: usize) -> Option<usize> {
        self.partners.get(mode).copied().flatten()
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn labels(&self) -> &[ModeLabel] {
        &self.labels
    }

    pub fn label(&self, mode: usize) -> Result<ModeLabel> {
        self.labels.get(mode).copied().ok_or_else(|| Error::UnknownMode(format!("#{mode}")))
    }

    pub fn index_of(&self, label: &ModeLabel) -> Result<usize> {
        self.labels.iter().position(|l| l == label).ok_or_else(|| Error::UnknownMode(label.to_string()))
    }

    pub fn cutoff(&self, mode: usize) -> usize {
        self.cutoffs[mode]
    }

    pub fn total_cutoff(&self) -> Option<usize> {
        self.total_cutoff
    }

    /// Replaces one label, keeping cutoffs and pairing.
    pub fn relabel(&self, mode: usize, label: ModeLabel) -> Result<Self> {
        self.label(mode)?;
        let mut labels = self.labels.clone();
        labels[mode] = label;
        let mut out = Self::with_cutoffs(labels, self.cutoffs.clone())?;
        out.total_cutoff = self.total_cutoff;
        out.partners = self.partners.clone();
        Ok(out)
    }

    /// Whether an occupation vector respects every cutoff.
    pub fn admits(&self, occ: &[usize]) -> bool {
        occ.len() == self.len()
            && occ.iter().zip(&self.cutoffs).all(|(n, c)| n <= c)
            && self.total_cutoff.is_none_or(|t| occ.iter().sum::<usize>() <= t)
    }

    pub fn pack(&self, occ: &[usize]) -> Option<u64> {
        if !self.admits(occ) {
            return None;
        }
        Some(occ.iter().zip(&self.strides).map(|(&n, &s)| n as u64 * s).sum())
    }

    pub fn unpack(&self, key: u64) -> Vec<usize> {
        (0..self.len()).map(|m| self.occupation(key, m)).collect()
    }

    pub fn occupation(&self, key: u64, mode: usize) -> usize {
        ((key / self.strides[mode]) % (self.cutoffs[mode] as u64 + 1)) as usize
    }

    pub(crate) fn stride(&self, mode: usize) -> u64 {
        self.strides[mode]
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lab(region: Region, h: Helicity, j: usize) -> ModeLabel {
        ModeLabel::new(region, h, ModeRole::Bin(j))
    }

    #[test]
    fn pack_roundtrip_and_order() {
        let set = ModeSet::new(vec![lab(Region::I, Helicity::Up, 0), lab(Region::II, Helicity::Down, 0)], 3).unwrap();
        let k = set.pack(&[2, 1]).unwrap();
        assert_eq!(set.unpack(k), vec![2, 1]);
        assert!(set.pack(&[1, 3]).unwrap() < set.pack(&[2, 0]).unwrap());
        assert!(set.pack(&[4, 0]).is_none());
        let capped = set.clone().with_total_cutoff(3);
        assert!(capped.pack(&[2, 2]).is_none());
    }

    #[test]
    fn partner_rules() {
        let mut set = ModeSet::new(
            vec![lab(Region::I, Helicity::Up, 0), lab(Region::II, Helicity::Down, 0), lab(Region::II, Helicity::Up, 0)],
            2,
        )
        .unwrap();
        assert!(set.declare_partner(0, 2).is_err());
        set.declare_partner(0, 1).unwrap();
        assert_eq!(set.partner(1), Some(0));
        assert!(set.declare_partner(0, 1).is_err());
    }

    #[test]
    fn duplicate_labels_rejected() {
        let l = lab(Region::I, Helicity::Up, 0);
        assert!(ModeSet::new(vec![l, l], 2).is_err());
    }
}
