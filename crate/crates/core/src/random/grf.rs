//! Stationary Gaussian random fields on small grids via dense Cholesky.

use nalgebra::{Cholesky, DMatrix, DVector};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;

use crate::error::{Error, Result};

/// Scalar field sampled on a 2-d or 3-d grid over the unit square/cube.
/// Values are row-major: index = (iz * ny + iy) * nx + ix, matching the
/// vertex ids of the grid triangulations.
#[derive(Debug, Clone, PartialEq)]
pub struct GridField {
    pub shape: Vec<usize>,
    pub values: Vec<f64>,
}

impl GridField {
    pub fn len(&self) -> usize {
        self.shape.iter().product()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

/// Squared-exponential autocovariance of the lag vector. At the default
/// scale 400 the covariance at lag length 0.05 is exactly 1/e.
pub fn squared_exponential(lag: &[f64], scale: f64) -> f64 {
    (-scale * lag.iter().map(|x| x * x).sum::<f64>()).exp()
}

/// Mean-zero unit-variance Gaussian field sampler with covariance
/// exp(-scale * |lag|^2) between grid nodes. Grid nodes span [0,1] along
/// each axis. The dense covariance matrix is factored once; each call to
/// `sample` is then one matrix-vector product, exact up to the 1e-10
/// diagonal jitter that keeps the factorization positive definite.
pub struct GrfSampler {
    shape: Vec<usize>,
    chol: Cholesky<f64, nalgebra::Dyn>,
}

const MAX_NODES: usize = 2704;
const JITTER: f64 = 1e-10;

impl GrfSampler {
    pub fn new(shape: &[usize], scale: f64) -> Result<Self> {
        if !(2..=3).contains(&shape.len()) || shape.iter().any(|&s| s < 2) {
            return Err(Error::InvalidParameter(format!(
                "grid shape must be 2-d or 3-d with sides >= 2, got {shape:?}"
            )));
        }
        let n: usize = shape.iter().product();
        if n > MAX_NODES {
            return Err(Error::InvalidParameter(format!(
                "{n} grid nodes exceed the dense-factorization limit {MAX_NODES}; \
                 use a coarser grid"
            )));
        }
        let coords = grid_coordinates(shape);
        let mut cov = DMatrix::zeros(n, n);
        for i in 0..n {
            for j in 0..=i {
                let lag: Vec<f64> = coords[i]
                    .iter()
                    .zip(&coords[j])
                    .map(|(a, b)| a - b)
                    .collect();
                let c = squared_exponential(&lag, scale);
                cov[(i, j)] = c;
                cov[(j, i)] = c;
            }
            cov[(i, i)] += JITTER;
        }
        let chol = Cholesky::new(cov).ok_or(Error::NotPositiveDefinite)?;
        Ok(GrfSampler {
            shape: shape.to_vec(),
            chol,
        })
    }

    pub fn shape(&self) -> &[usize] {
        &self.shape
    }

    pub fn sample(&self, seed: u64) -> GridField {
        let n: usize = self.shape.iter().product();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let z = DVector::from_iterator(n, (0..n).map(|_| rng.sample::<f64, _>(StandardNormal)));
        let values = (self.chol.l() * z).iter().copied().collect();
        GridField {
            shape: self.shape.clone(),
            values,
        }
    }
}

/// Node coordinates in [0,1]^d, row-major per GridField.
pub fn grid_coordinates(shape: &[usize]) -> Vec<Vec<f64>> {
    let step: Vec<f64> = shape.iter().map(|&s| 1.0 / (s - 1) as f64).collect();
    let n: usize = shape.iter().product();
    let mut coords = Vec::with_capacity(n);
    let mut idx = vec![0usize; shape.len()];
    for _ in 0..n {
        coords.push(idx.iter().zip(&step).map(|(&i, &h)| i as f64 * h).collect());
        for axis in 0..shape.len() {
            idx[axis] += 1;
            if idx[axis] < shape[axis] {
                break;
            }
            idx[axis] = 0;
        }
    }
    coords
}
