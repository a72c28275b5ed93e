//! Truncated multimode Fock space.
//!
//! Occupations are packed into mixed-radix `u64` keys (first mode most
//! significant), so iteration over a [`SparseKet`] is ordered and every
//! reduction runs in a fixed order. Components pushed past a cutoff are
//! dropped and their weight is added to the ket's truncation loss; nothing
//! is renormalized here.

mod density;
mod ket;
mod modes;
mod rotation;

pub use density::{cross_reduced, partial_trace, partial_transpose, trace_distance, DensityOperator};
pub use ket::{Ladder, SparseKet, PRUNE_BELOW};
pub use modes::{Helicity, ModeLabel, ModeRole, ModeSet, Region};
pub use rotation::fock_lift_rotation;
