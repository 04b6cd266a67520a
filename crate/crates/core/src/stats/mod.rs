//! Statistical inference on persistence landscapes: functionals, confidence
//! intervals, two-sample tests, Hotelling's T^2, and the permutation test.

mod functional;
mod inference;
mod permutation;
pub mod special;

pub use functional::Functional;
pub use inference::{
    confidence_interval, hotelling_t2, hotelling_t2_paired, levene_test, mean,
    sample_variance, two_sample_t, TMethod, TestResult,
};
pub use permutation::{permutation_test, permutation_test_exhaustive};
