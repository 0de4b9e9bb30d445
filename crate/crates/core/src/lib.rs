//! Minimum distance diagrams (MDDs) of multi-loop circulant networks.
//!
//! The crate computes exact distance tables of `C_n(s_1, …, s_r)`, builds and
//! enumerates MDDs, decides whether an MDD comes from a weight vector
//! (coherence), and for three steps computes the Hilbert bases of the octant
//! semigroups of the homogeneous lattice and the fan of coherent MDDs.

pub mod arith;
pub mod coherence;
pub mod cone;
pub mod enumerate;
pub mod error;
pub mod exec;
pub mod fan;
pub mod family;
pub mod hilbert;
pub mod io;
pub mod lattice;
pub mod mdd;
pub mod network;
pub mod weight;

pub use coherence::{is_coherent, Coherence, Constraint};
pub use enumerate::{enumerate_mdds, enumerate_mdds_with, EnumMode, Enumeration};
pub use error::{Error, Result};
pub use exec::Exec;
pub use family::{
    build_family, cyclic_shift, lift_network, verify_family, FamilyNetwork, FamilyReport, OctantCheck,
    DEFAULT_BRUTE_FORCE_LIMIT,
};
pub use fan::{
    candidate_rays, coherent_fan, coherent_fan_with, verify_wall, FanContext, FanSummary, RayCandidate,
    Rejection, Wall, WallVerdict,
};
pub use hilbert::{hilbert_basis, principal_hilbert_bases, HilbertBasis, Octant, Sign};
pub use lattice::{HomogeneousLattice, SignConstraint};
pub use network::{network_stats, CirculantNetwork, DistanceTable, NetworkStats, PathVector};
pub use mdd::{
    build_coherent_mdd, classify_double_loop_shape, is_unique_mdd, lex_mdd, staircase_generators,
    DoubleLoopShape, Mdd, Staircase, TiePolicy,
};
pub use weight::WeightVector;
