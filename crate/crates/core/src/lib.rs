//! Normal subgroup lattices of finite groups, the coarse lower topology on
//! them, and machine verification — axiom by axiom, with witnesses — that
//! the space of proper normal subgroups is spectral.
//!
//! The layers, bottom up:
//! - [`group`]: validated Cayley tables, permutation closure, subgroups,
//!   conjugation, normal closures.
//! - [`lattice`]: enumeration of all normal subgroups with join/meet
//!   structure and maximal elements.
//! - [`topology`]: finite spaces generated from a closed-set subbasis, with
//!   exact T₀/sober/quasi-compact/openness predicates.
//! - [`verify`]: the spectral-space checks composed into per-group reports.
//! - [`catalog`]: pinned constructions of the standard small groups.
//!
//! Everything is immutable after construction and pure; callers may
//! parallelize over independent inputs freely.

pub mod bits;
pub mod catalog;
pub mod error;
pub mod group;
pub mod lattice;
pub mod topology;
pub mod verify;

pub use bits::BitSet;
pub use error::{Error, Result};
pub use group::{Group, Subgroup, Subset};
pub use lattice::{NormalLattice, ProperPointSet};
pub use topology::{FiniteSpace, Mode};
pub use verify::{SpectralReport, TheoremReport};

use serde::Serialize;

/// Size guardrails for the enumeration and topology layers. Defaults are
/// desk scale: elementary abelian 2-groups blow up the lattice, wide
/// antichains blow up the closed-set family, and both fail fast with a
/// named error instead of grinding.
#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct Caps {
    /// Maximum group order accepted by lattice enumeration.
    pub order_cap: usize,
    /// Maximum number of normal subgroups.
    pub lattice_cap: usize,
    /// Largest point count for which the closed-set family is materialized;
    /// beyond it the space switches to the order-theoretic representation.
    pub exhaustive_point_cap: usize,
    /// Maximum materialized closed-set family size.
    pub family_cap: usize,
    /// Maximum order for permutation-generator closure.
    pub closure_cap: usize,
}

impl Default for Caps {
    fn default() -> Self {
        Caps {
            order_cap: 128,
            lattice_cap: 4096,
            exhaustive_point_cap: 20,
            family_cap: 1 << 20,
            closure_cap: 10_000,
        }
    }
}
