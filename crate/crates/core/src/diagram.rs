//! Persistence diagrams and the rank-function queries derived from them.

use crate::error::{Error, Result};

/// A single birth/death pair. `death` may be `f64::INFINITY` for an
/// essential class; `birth` is always finite.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DiagramPoint {
    pub birth: f64,
    pub death: f64,
}

impl DiagramPoint {
    pub fn new(birth: f64, death: f64) -> Result<Self> {
        if !birth.is_finite() || death.is_nan() || birth > death {
            return Err(Error::InvalidPoint { birth, death });
        }
        Ok(DiagramPoint { birth, death })
    }

    pub fn is_infinite(&self) -> bool {
        self.death.is_infinite()
    }

    /// Interval length d - b (the persistence of the class).
    pub fn persistence(&self) -> f64 {
        self.death - self.birth
    }

    /// Midpoint m = (b + d) / 2 of a finite interval.
    pub fn midpoint(&self) -> f64 {
        0.5 * (self.birth + self.death)
    }

    /// Half-length h = (d - b) / 2 of a finite interval.
    pub fn half_length(&self) -> f64 {
        0.5 * (self.death - self.birth)
    }

    /// sup-norm distance to another point.
    pub fn linf_distance(&self, other: &DiagramPoint) -> f64 {
        let db = (self.birth - other.birth).abs();
        let dd = (self.death - other.death).abs();
        db.max(dd)
    }

    /// Distance to the nearest diagonal point in the sup norm: (d - b) / 2.
    pub fn diagonal_distance(&self) -> f64 {
        self.half_length()
    }
}

/// Finite multiset of birth/death pairs in one homology degree.
/// Duplicates are allowed; points with zero persistence are permitted
/// and contribute nothing to landscapes or norms.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct PersistenceDiagram {
    pub degree: usize,
    pub points: Vec<DiagramPoint>,
}

impl PersistenceDiagram {
    pub fn new(degree: usize, points: Vec<DiagramPoint>) -> Self {
        PersistenceDiagram { degree, points }
    }

    /// Convenience constructor from (birth, death) pairs.
    pub fn from_pairs(degree: usize, pairs: &[(f64, f64)]) -> Result<Self> {
        let points = pairs
            .iter()
            .map(|&(b, d)| DiagramPoint::new(b, d))
            .collect::<Result<Vec<_>>>()?;
        Ok(PersistenceDiagram { degree, points })
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn has_infinite_point(&self) -> Option<&DiagramPoint> {
        self.points.iter().find(|p| p.is_infinite())
    }

    /// Rank function beta^{a,b}: the number of classes alive over the whole
    /// interval [a, b], i.e. points with b_i <= a and b <= d_i. Endpoints
    /// use the closed convention. Zero when a > b.
    pub fn rank(&self, a: f64, b: f64) -> usize {
        if a > b {
            return 0;
        }
        self.points
            .iter()
            .filter(|p| p.birth <= a && b <= p.death)
            .count()
    }

    /// Rescaled rank function: beta^{m-h, m+h} for h >= 0, zero otherwise.
    pub fn rescaled_rank(&self, m: f64, h: f64) -> usize {
        if h < 0.0 {
            return 0;
        }
        self.rank(m - h, m + h)
    }

    /// Clip the diagram to the window [-B, B] x [-B, B]: births below -B are
    /// raised to -B, deaths above B (including infinity) are cut to B, and
    /// points left with no persistence inside the window are dropped.
    pub fn threshold(&self, window: f64) -> Result<Self> {
        if !(window > 0.0) {
            return Err(Error::InvalidParameter(format!(
                "threshold window must be positive, got {window}"
            )));
        }
        let points = self
            .points
            .iter()
            .filter_map(|p| {
                let b = p.birth.max(-window);
                let d = p.death.min(window);
                if b < d {
                    Some(DiagramPoint { birth: b, death: d })
                } else {
                    None
                }
            })
            .collect();
        Ok(PersistenceDiagram {
            degree: self.degree,
            points,
        })
    }

    /// Sum of squared interval lengths, pers_2(D).
    pub fn pers_squared(&self) -> f64 {
        self.points.iter().map(|p| p.persistence().powi(2)).sum()
    }

    /// Length of the longest interval, pers_inf(D); zero for an empty diagram.
    pub fn pers_sup(&self) -> f64 {
        self.points
            .iter()
            .map(|p| p.persistence())
            .fold(0.0, f64::max)
    }
}
