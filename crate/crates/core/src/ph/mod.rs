//! Filtered complexes and persistent homology over F2.

pub mod complex;
pub mod freudenthal;
pub mod reduce;
pub mod rips;

pub use complex::{DistanceMatrix, FilteredComplex, FilteredGraph, Simplex};
pub use freudenthal::{freudenthal_grid_2d, freudenthal_grid_3d, lower_star};
pub use reduce::persistent_homology;
pub use rips::{clique_complex, vietoris_rips};
