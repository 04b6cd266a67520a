//! Seeded random data sources: point clouds on geometric objects, random
//! filtered graphs, Gaussian random fields, and kernel density estimates.
//! Every generator is a pure function of its parameters and seed.

pub mod grf;
pub mod kde;
pub mod points;

pub use grf::{grid_coordinates, squared_exponential, GrfSampler, GridField};
pub use kde::{default_bandwidth, triangular_kde};
pub use points::{
    add_gaussian_noise, default_torus_radii, diameter, er_filtered_graph, sample_annuli,
    sample_cube, sample_sphere, sample_torus,
};
