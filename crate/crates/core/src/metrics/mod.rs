//! Norms and distances: exact L^p norms of landscapes, landscape distances,
//! and optimal-matching diagram metrics with diagonal augmentation.

mod assignment;

pub use assignment::min_cost_assignment;

use crate::diagram::{DiagramPoint, PersistenceDiagram};
use crate::error::{Error, Result};
use crate::landscape::PersistenceLandscape;

/// Integer p >= 1, or infinity. General real exponents are not supported;
/// integer exponents keep all integration closed-form.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PNorm {
    Finite(u32),
    Infinity,
}

impl PNorm {
    pub fn finite(p: u32) -> Result<Self> {
        if p == 0 {
            return Err(Error::InvalidParameter("p must be >= 1".into()));
        }
        Ok(PNorm::Finite(p))
    }
}

impl std::str::FromStr for PNorm {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "inf" | "infinity" | "oo" => Ok(PNorm::Infinity),
            other => other
                .parse::<u32>()
                .ok()
                .filter(|&p| p >= 1)
                .map(PNorm::Finite)
                .ok_or_else(|| {
                    Error::InvalidParameter(format!("invalid p-norm '{other}'"))
                }),
        }
    }
}

/// ||lambda||_p, summing the per-level L^p integrals; the sup norm is the
/// largest absolute value over all stored levels (for a true landscape this
/// is attained on level 1).
pub fn lp_norm(landscape: &PersistenceLandscape, p: PNorm) -> f64 {
    match p {
        PNorm::Finite(p) => {
            let total: f64 = landscape.levels().iter().map(|l| l.lp_integral(p)).sum();
            total.powf(1.0 / p as f64)
        }
        PNorm::Infinity => landscape
            .levels()
            .iter()
            .map(|l| l.sup_abs())
            .fold(0.0, f64::max),
    }
}

/// Landscape distance Lambda_p = ||lambda - lambda'||_p, levels padded
/// with zero functions.
pub fn landscape_distance(
    a: &PersistenceLandscape,
    b: &PersistenceLandscape,
    p: PNorm,
) -> f64 {
    let diff = PersistenceLandscape::linear_combination(&[(1.0, a), (-1.0, b)]);
    lp_norm(&diff, p)
}

fn check_finite(d: &PersistenceDiagram) -> Result<()> {
    if let Some(p) = d.has_infinite_point() {
        return Err(Error::InfiniteInterval { birth: p.birth });
    }
    Ok(())
}

/// Bottleneck distance W_inf: the smallest eps admitting a diagonal-augmented
/// bijection moving no point farther than eps in the sup norm. Exact, by
/// binary search over candidate costs with a matching feasibility check.
pub fn bottleneck_distance(a: &PersistenceDiagram, b: &PersistenceDiagram) -> Result<f64> {
    check_finite(a)?;
    check_finite(b)?;
    let pa = &a.points;
    let pb = &b.points;
    let (n, m) = (pa.len(), pb.len());
    if n == 0 && m == 0 {
        return Ok(0.0);
    }
    let mut candidates: Vec<f64> = Vec::with_capacity(n * m + n + m + 1);
    candidates.push(0.0);
    for x in pa {
        candidates.push(x.diagonal_distance());
        for y in pb {
            candidates.push(x.linf_distance(y));
        }
    }
    for y in pb {
        candidates.push(y.diagonal_distance());
    }
    candidates.sort_by(f64::total_cmp);
    candidates.dedup();

    let total = n + m;
    let feasible = |eps: f64| {
        assignment::has_perfect_matching(total, |r, c| {
            match (r < n, c < m) {
                (true, true) => pa[r].linf_distance(&pb[c]) <= eps,
                (true, false) => pa[r].diagonal_distance() <= eps,
                (false, true) => pb[c].diagonal_distance() <= eps,
                (false, false) => true,
            }
        })
    };
    let idx = candidates.partition_point(|&eps| !feasible(eps));
    Ok(candidates[idx])
}

fn augmented_costs(
    a: &PersistenceDiagram,
    b: &PersistenceDiagram,
    cost: impl Fn(Option<&DiagramPoint>, Option<&DiagramPoint>) -> f64,
) -> Vec<Vec<f64>> {
    let (n, m) = (a.points.len(), b.points.len());
    let total = n + m;
    (0..total)
        .map(|r| {
            let src = if r < n { Some(&a.points[r]) } else { None };
            (0..total)
                .map(|c| {
                    let dst = if c < m { Some(&b.points[c]) } else { None };
                    cost(src, dst)
                })
                .collect()
        })
        .collect()
}

fn pair_eps(src: Option<&DiagramPoint>, dst: Option<&DiagramPoint>) -> f64 {
    match (src, dst) {
        (Some(x), Some(y)) => x.linf_distance(y),
        (Some(x), None) => x.diagonal_distance(),
        (None, Some(y)) => y.diagonal_distance(),
        (None, None) => 0.0,
    }
}

/// p-Wasserstein distance: [min over bijections of sum eps_j^p]^(1/p).
pub fn wasserstein_distance(
    a: &PersistenceDiagram,
    b: &PersistenceDiagram,
    p: u32,
) -> Result<f64> {
    assert!(p >= 1);
    check_finite(a)?;
    check_finite(b)?;
    let cost = augmented_costs(a, b, |s, d| pair_eps(s, d).powi(p as i32));
    if cost.is_empty() {
        return Ok(0.0);
    }
    let (_, total) = assignment::min_cost_assignment(&cost);
    Ok(total.max(0.0).powf(1.0 / p as f64))
}

/// Persistence-weighted p-Wasserstein distance: pair costs are weighted by
/// the persistence of the source point (first argument), so the metric is
/// asymmetric; diagonal sources have weight zero.
pub fn weighted_wasserstein(
    a: &PersistenceDiagram,
    b: &PersistenceDiagram,
    p: u32,
) -> Result<f64> {
    assert!(p >= 1);
    check_finite(a)?;
    check_finite(b)?;
    let cost = augmented_costs(a, b, |s, d| {
        let ell = s.map_or(0.0, |x| x.persistence());
        ell * pair_eps(s, d).powi(p as i32)
    });
    if cost.is_empty() {
        return Ok(0.0);
    }
    let (_, total) = assignment::min_cost_assignment(&cost);
    Ok(total.max(0.0).powf(1.0 / p as f64))
}

/// Upper bound for Lambda_p(D, D')^p: the minimum over diagonal-augmented
/// bijections of sum_j [ ell_j eps_j^p + 2/(p+1) eps_j^(p+1) ], with ell_j
/// the persistence of the source point.
pub fn stability_bound(
    a: &PersistenceDiagram,
    b: &PersistenceDiagram,
    p: u32,
) -> Result<f64> {
    assert!(p >= 1);
    check_finite(a)?;
    check_finite(b)?;
    let cost = augmented_costs(a, b, |s, d| {
        let ell = s.map_or(0.0, |x| x.persistence());
        let eps = pair_eps(s, d);
        ell * eps.powi(p as i32) + 2.0 / (p as f64 + 1.0) * eps.powi(p as i32 + 1)
    });
    if cost.is_empty() {
        return Ok(0.0);
    }
    let (_, total) = assignment::min_cost_assignment(&cost);
    Ok(total.max(0.0))
}

/// Single-pair bound ell * eps^p + 2/(p+1) * eps^(p+1), with ell the
/// persistence of `x` and eps the sup-norm displacement to `y`.
pub fn pair_bound(x: &DiagramPoint, y: &DiagramPoint, p: u32) -> f64 {
    let ell = x.persistence();
    let eps = x.linf_distance(y);
    ell * eps.powi(p as i32) + 2.0 / (p as f64 + 1.0) * eps.powi(p as i32 + 1)
}
