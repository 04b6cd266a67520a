//! Persistence landscapes: the k-th envelopes of tent functions.

use crate::diagram::{DiagramPoint, PersistenceDiagram};
use crate::error::{Error, Result};
use crate::pl::PiecewiseLinearFunction;

/// The triangle function (h - |t - m|)_+ contributed by one finite diagram
/// point, with m = (b+d)/2 and h = (d-b)/2. Zero persistence gives the zero
/// function.
pub fn tent(point: &DiagramPoint) -> Result<PiecewiseLinearFunction> {
    if point.is_infinite() {
        return Err(Error::InfiniteInterval { birth: point.birth });
    }
    if point.birth == point.death {
        return Ok(PiecewiseLinearFunction::zero());
    }
    Ok(PiecewiseLinearFunction::new(vec![
        (point.birth, 0.0),
        (point.midpoint(), point.half_length()),
        (point.death, 0.0),
    ]))
}

/// An ordered sequence of piecewise-linear levels lambda_1 >= lambda_2 >= ...
/// Only nonzero levels are stored. Landscapes built directly from diagrams
/// have all interior slopes in {-1, +1}; linear combinations in general do
/// not, but non-negative combinations still nest.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct PersistenceLandscape {
    levels: Vec<PiecewiseLinearFunction>,
}

impl PersistenceLandscape {
    pub fn empty() -> Self {
        PersistenceLandscape { levels: Vec::new() }
    }

    pub fn from_levels(levels: Vec<PiecewiseLinearFunction>) -> Self {
        let mut levels = levels;
        while levels.last().is_some_and(|l| l.is_zero()) {
            levels.pop();
        }
        PersistenceLandscape { levels }
    }

    /// Build the landscape of a finite diagram by peeling envelopes: points
    /// are sorted by (birth asc, death desc) and each level is swept left to
    /// right, pushing overlap leftovers down to later levels. Output is in
    /// canonical piecewise-linear form.
    pub fn from_diagram(
        diagram: &PersistenceDiagram,
        k_max: Option<usize>,
    ) -> Result<Self> {
        if let Some(p) = diagram.has_infinite_point() {
            return Err(Error::InfiniteInterval { birth: p.birth });
        }
        let mut intervals: Vec<(f64, f64)> = diagram
            .points
            .iter()
            .filter(|p| p.death > p.birth)
            .map(|p| (p.birth, p.death))
            .collect();
        intervals.sort_by(|a, b| a.0.total_cmp(&b.0).then(b.1.total_cmp(&a.1)));

        let mut levels = Vec::new();
        while !intervals.is_empty() {
            if k_max.is_some_and(|k| levels.len() >= k) {
                break;
            }
            let mut pts: Vec<(f64, f64)> = Vec::new();
            let (b, mut d) = intervals.remove(0);
            pts.push((b, 0.0));
            pts.push((0.5 * (b + d), 0.5 * (d - b)));
            loop {
                // The next interval in this level is the first remaining one
                // reaching past the current death; everything skipped is
                // dominated and stays for later levels.
                let next = intervals.iter().position(|&(_, di)| di > d);
                let (b2, d2) = match next {
                    Some(i) => intervals.remove(i),
                    None => {
                        pts.push((d, 0.0));
                        break;
                    }
                };
                if b2 >= d {
                    pts.push((d, 0.0));
                    if b2 > d {
                        pts.push((b2, 0.0));
                    }
                } else {
                    // Tents cross; the overlap [b2, d] feeds later levels.
                    pts.push((0.5 * (b2 + d), 0.5 * (d - b2)));
                    let leftover = (b2, d);
                    let at = intervals.partition_point(|&(bi, di)| {
                        bi < leftover.0 || (bi == leftover.0 && di > leftover.1)
                    });
                    intervals.insert(at, leftover);
                }
                pts.push((0.5 * (b2 + d2), 0.5 * (d2 - b2)));
                d = d2;
            }
            levels.push(PiecewiseLinearFunction::new(pts));
        }
        Ok(PersistenceLandscape { levels })
    }

    pub fn levels(&self) -> &[PiecewiseLinearFunction] {
        &self.levels
    }

    pub fn num_levels(&self) -> usize {
        self.levels.len()
    }

    pub fn level(&self, k: usize) -> Option<&PiecewiseLinearFunction> {
        if k == 0 {
            None
        } else {
            self.levels.get(k - 1)
        }
    }

    /// lambda_k(t) with 1-based k; zero for missing levels or t outside
    /// the support.
    pub fn evaluate(&self, k: usize, t: f64) -> f64 {
        self.level(k).map_or(0.0, |l| l.evaluate(t))
    }

    /// Union of level supports.
    pub fn support(&self) -> Option<(f64, f64)> {
        let mut out: Option<(f64, f64)> = None;
        for l in &self.levels {
            if let Some((a, b)) = l.support() {
                out = Some(match out {
                    Some((lo, hi)) => (lo.min(a), hi.max(b)),
                    None => (a, b),
                });
            }
        }
        out
    }

    /// Level-wise exact linear combination; missing levels count as zero.
    pub fn linear_combination(terms: &[(f64, &PersistenceLandscape)]) -> Self {
        let depth = terms.iter().map(|(_, l)| l.num_levels()).max().unwrap_or(0);
        let zero = PiecewiseLinearFunction::zero();
        let mut levels = Vec::with_capacity(depth);
        for k in 0..depth {
            let parts: Vec<(f64, &PiecewiseLinearFunction)> = terms
                .iter()
                .map(|&(c, l)| (c, l.levels.get(k).unwrap_or(&zero)))
                .collect();
            levels.push(PiecewiseLinearFunction::linear_combination(&parts));
        }
        Self::from_levels(levels)
    }

    /// Pointwise mean of a nonempty list of landscapes.
    pub fn mean(samples: &[PersistenceLandscape]) -> Result<Self> {
        if samples.is_empty() {
            return Err(Error::EmptySample);
        }
        let w = 1.0 / samples.len() as f64;
        let terms: Vec<(f64, &PersistenceLandscape)> =
            samples.iter().map(|l| (w, l)).collect();
        Ok(Self::linear_combination(&terms))
    }

    /// Functional equality up to tolerance, level by level.
    pub fn approx_eq(&self, other: &PersistenceLandscape, tol: f64) -> bool {
        let depth = self.num_levels().max(other.num_levels());
        let zero = PiecewiseLinearFunction::zero();
        (0..depth).all(|k| {
            let a = self.levels.get(k).unwrap_or(&zero);
            let b = other.levels.get(k).unwrap_or(&zero);
            a.approx_eq(b, tol)
        })
    }
}
