//! Exact-arithmetic toolkit for the moments `E|Perm(M)|^{2t}` and
//! `E|det(M)|^{2t}` of random complex Gaussian matrices and of k×k minors of
//! Haar-random d×d unitaries.
//!
//! Everything that can be exact is exact: partitions, Kostka numbers,
//! row/column-group traces, magic-square moment sums and unitary moments are
//! big-integer / big-rational computations. The two floating-point corners are
//! clearly fenced off: the Monte Carlo cross-validator ([`montecarlo`]) and
//! the large-deviation pipeline ([`largedev`]).

pub mod error;
pub mod exact;
pub mod largedev;
pub mod moments;
pub mod montecarlo;
pub mod partition;
pub mod special;
pub mod symfunc;
pub mod traces;

mod par;

pub use error::{Error, Result};
pub use par::Strategy;
pub use partition::Partition;
pub use traces::Grid;

/// Resource guards for the potentially expensive exact computations.
///
/// Exceeding a guard is a hard [`Error::Resource`], never silent truncation.
/// The defaults mirror the feasible frontier of the moment algorithm on a
/// desktop machine; raise them explicitly if you know what you are doing.
#[derive(Debug, Clone)]
pub struct Budget {
    /// Largest moment order for the 3×3 Gaussian ensemble (and dual images).
    pub gaussian_side3_max_order: u32,
    /// Largest moment order for the 4×4 Gaussian ensemble (and dual images).
    pub gaussian_side4_max_order: u32,
    /// Cell-count guard for permutation-module trace computations.
    pub psi_max_cells: u32,
    /// Depth guard for permutation-module trace computations.
    pub psi_max_depth: u32,
    /// Cell-count guard for the brute-force group enumeration (total count).
    pub brute_max_cells: u32,
    /// Cell-count guard for the brute-force distribution route.
    pub brute_dist_max_cells: u32,
    /// Area guard for typed 0..l matrix fill counting.
    pub typed_fill_max_area: u32,
}

impl Default for Budget {
    fn default() -> Self {
        Budget {
            gaussian_side3_max_order: 100,
            gaussian_side4_max_order: 10,
            psi_max_cells: 24,
            psi_max_depth: 4,
            brute_max_cells: 10,
            brute_dist_max_cells: 9,
            typed_fill_max_area: 36,
        }
    }
}

impl Budget {
    /// A budget with all guards effectively removed.
    pub fn unlimited() -> Self {
        Budget {
            gaussian_side3_max_order: u32::MAX,
            gaussian_side4_max_order: u32::MAX,
            psi_max_cells: u32::MAX,
            psi_max_depth: u32::MAX,
            brute_max_cells: u32::MAX,
            brute_dist_max_cells: u32::MAX,
            typed_fill_max_area: u32::MAX,
        }
    }
}
