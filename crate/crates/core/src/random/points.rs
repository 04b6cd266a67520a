//! Seeded point-cloud and random-graph generators.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;

use crate::error::{Error, Result};
use crate::ph::FilteredGraph;

pub const TAU: f64 = std::f64::consts::TAU;

/// n iid uniform points in the unit cube [0,1]^d.
pub fn sample_cube(n: usize, d: usize, seed: u64) -> Result<Vec<Vec<f64>>> {
    if n == 0 || !(2..=3).contains(&d) {
        return Err(Error::InvalidParameter(format!(
            "cube sampler needs n >= 1 and d in {{2,3}}, got n={n}, d={d}"
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    Ok((0..n)
        .map(|_| (0..d).map(|_| rng.random::<f64>()).collect())
        .collect())
}

/// n area-uniform points on a union of annuli sharing the same radii.
/// Each point picks a center uniformly (equal areas), then a radius by
/// inverting the CDF on r^2 and a uniform angle.
pub fn sample_annuli(
    n: usize,
    inner_r: f64,
    outer_r: f64,
    centers: &[[f64; 2]],
    seed: u64,
) -> Result<Vec<Vec<f64>>> {
    if n == 0 || centers.is_empty() || !(0.0 < inner_r && inner_r < outer_r) {
        return Err(Error::InvalidParameter(format!(
            "annuli sampler needs n >= 1, centers, and 0 < inner < outer, got \
             inner={inner_r}, outer={outer_r}"
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let (i2, o2) = (inner_r * inner_r, outer_r * outer_r);
    Ok((0..n)
        .map(|_| {
            let c = centers[rng.random_range(0..centers.len())];
            let r = (i2 + rng.random::<f64>() * (o2 - i2)).sqrt();
            let a = rng.random::<f64>() * TAU;
            vec![c[0] + r * a.cos(), c[1] + r * a.sin()]
        })
        .collect())
}

/// Default torus geometry: same surface area as the unit sphere, with the
/// tube radius half the center radius (4 pi^2 R r = 4 pi with r = R/2).
pub fn default_torus_radii() -> (f64, f64) {
    let big = (2.0 / std::f64::consts::PI).sqrt();
    (big, big / 2.0)
}

/// n surface-area-uniform points on the torus with center radius R and
/// tube radius r. The tube angle is drawn by rejection against its
/// density, which is proportional to R + r cos(theta).
pub fn sample_torus(n: usize, big_r: f64, small_r: f64, seed: u64) -> Result<Vec<Vec<f64>>> {
    if n == 0 || !(big_r > small_r && small_r > 0.0) {
        return Err(Error::InvalidParameter(format!(
            "torus sampler needs n >= 1 and R > r > 0, got R={big_r}, r={small_r}"
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    Ok((0..n)
        .map(|_| {
            let theta = loop {
                let t = rng.random::<f64>() * TAU;
                let accept = (big_r + small_r * t.cos()) / (big_r + small_r);
                if rng.random::<f64>() < accept {
                    break t;
                }
            };
            let phi = rng.random::<f64>() * TAU;
            let ring = big_r + small_r * theta.cos();
            vec![ring * phi.cos(), ring * phi.sin(), small_r * theta.sin()]
        })
        .collect())
}

/// n uniform points on the sphere of the given radius, via normalized
/// Gaussian triples.
pub fn sample_sphere(n: usize, radius: f64, seed: u64) -> Result<Vec<Vec<f64>>> {
    if n == 0 || !(radius > 0.0) {
        return Err(Error::InvalidParameter(format!(
            "sphere sampler needs n >= 1 and radius > 0, got radius={radius}"
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    Ok((0..n)
        .map(|_| loop {
            let g: Vec<f64> = (0..3).map(|_| rng.sample(StandardNormal)).collect();
            let norm = g.iter().map(|x| x * x).sum::<f64>().sqrt();
            if norm > 1e-12 {
                return g.iter().map(|x| x * radius / norm).collect();
            }
        })
        .collect())
}

/// Displace every point by iid isotropic Gaussian noise.
pub fn add_gaussian_noise(cloud: &[Vec<f64>], sigma: f64, seed: u64) -> Result<Vec<Vec<f64>>> {
    if sigma < 0.0 {
        return Err(Error::InvalidParameter(format!(
            "noise sigma must be non-negative, got {sigma}"
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    Ok(cloud
        .iter()
        .map(|p| {
            p.iter()
                .map(|&x| x + sigma * rng.sample::<f64, _>(StandardNormal))
                .collect()
        })
        .collect())
}

/// Largest pairwise distance of a point cloud, used to scale default
/// noise levels.
pub fn diameter(cloud: &[Vec<f64>]) -> f64 {
    let mut best: f64 = 0.0;
    for (i, p) in cloud.iter().enumerate() {
        for q in &cloud[..i] {
            let d2: f64 = p.iter().zip(q).map(|(a, b)| (a - b) * (a - b)).sum();
            best = best.max(d2);
        }
    }
    best.sqrt()
}

/// Complete graph on n vertices with iid uniform [0,1] edge filtration
/// values.
pub fn er_filtered_graph(n: usize, seed: u64) -> Result<FilteredGraph> {
    if n == 0 {
        return Err(Error::InvalidParameter("graph needs n >= 1".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges = Vec::with_capacity(n * (n - 1) / 2);
    for u in 0..n as u32 {
        for v in u + 1..n as u32 {
            edges.push((u, v, rng.random::<f64>()));
        }
    }
    Ok(FilteredGraph { n, edges })
}
