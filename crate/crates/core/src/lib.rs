//! Persistence landscapes with exact piecewise-linear arithmetic, diagram
//! metrics, statistical inference, random data models, and a persistent
//! homology engine for filtered simplicial complexes.

pub mod diagram;
pub mod error;
pub mod landscape;
pub mod metrics;
pub mod ph;
pub mod random;
pub mod stats;

pub use diagram::{DiagramPoint, PersistenceDiagram};
pub use error::{Error, Result};
pub use landscape::{tent, PersistenceLandscape};
pub use metrics::PNorm;
pub use pl::PiecewiseLinearFunction;

pub mod pl;
