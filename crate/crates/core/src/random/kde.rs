//! Triangular-kernel density estimation.

use crate::error::{Error, Result};

/// Volume of the triangular bump max(1 - |x|/h, 0) in d dimensions:
/// (surface area of the unit (d-1)-sphere) * h^d / (d (d + 1)).
fn normalizer(d: usize, h: f64) -> f64 {
    let surface = match d {
        1 => 2.0,
        2 => std::f64::consts::TAU,
        3 => 2.0 * std::f64::consts::TAU,
        _ => unreachable!("dimension checked by the caller"),
    };
    surface * h.powi(d as i32) / (d * (d + 1)) as f64
}

/// Scott-style default bandwidth: n^{-1/(d+4)} times the average per-axis
/// standard deviation of the data.
pub fn default_bandwidth(cloud: &[Vec<f64>]) -> Result<f64> {
    if cloud.len() < 2 {
        return Err(Error::SampleTooSmall {
            what: "bandwidth selection",
            need: 2,
            got: cloud.len(),
        });
    }
    let (n, d) = (cloud.len(), cloud[0].len());
    let mut spread = 0.0;
    for axis in 0..d {
        let mean: f64 = cloud.iter().map(|p| p[axis]).sum::<f64>() / n as f64;
        let var: f64 = cloud
            .iter()
            .map(|p| (p[axis] - mean) * (p[axis] - mean))
            .sum::<f64>()
            / (n - 1) as f64;
        spread += var.sqrt();
    }
    spread /= d as f64;
    if spread == 0.0 {
        return Err(Error::InvalidParameter(
            "degenerate data: zero spread on every axis".into(),
        ));
    }
    Ok(spread * (n as f64).powf(-1.0 / (d as f64 + 4.0)))
}

/// Kernel density estimate with the triangular (cone) kernel at each of
/// the evaluation points.
pub fn triangular_kde(
    cloud: &[Vec<f64>],
    bandwidth: f64,
    eval_points: &[Vec<f64>],
) -> Result<Vec<f64>> {
    if cloud.is_empty() {
        return Err(Error::EmptySample);
    }
    let d = cloud[0].len();
    if !(1..=3).contains(&d) || cloud.iter().any(|p| p.len() != d) {
        return Err(Error::InvalidParameter(
            "kde data must share one ambient dimension in {1,2,3}".into(),
        ));
    }
    if !(bandwidth > 0.0) {
        return Err(Error::InvalidParameter(format!(
            "bandwidth must be positive, got {bandwidth}"
        )));
    }
    let scale = 1.0 / (cloud.len() as f64 * normalizer(d, bandwidth));
    Ok(eval_points
        .iter()
        .map(|v| {
            let mut sum = 0.0;
            for x in cloud {
                let dist = v
                    .iter()
                    .zip(x)
                    .map(|(a, b)| (a - b) * (a - b))
                    .sum::<f64>()
                    .sqrt();
                sum += (1.0 - dist / bandwidth).max(0.0);
            }
            sum * scale
        })
        .collect())
}
