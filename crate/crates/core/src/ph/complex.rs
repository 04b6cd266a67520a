//! Filtered simplicial complexes.

use std::collections::HashMap;

use crate::error::{Error, Result};

/// One simplex: sorted vertex ids plus its filtration value.
#[derive(Debug, Clone, PartialEq)]
pub struct Simplex {
    pub vertices: Vec<u32>,
    pub value: f64,
}

impl Simplex {
    pub fn new(mut vertices: Vec<u32>, value: f64) -> Self {
        vertices.sort_unstable();
        Simplex { vertices, value }
    }

    pub fn dimension(&self) -> usize {
        self.vertices.len() - 1
    }
}

/// A filtered complex: every face of a simplex must be present with a
/// filtration value no larger than the simplex's own.
#[derive(Debug, Clone, Default)]
pub struct FilteredComplex {
    pub simplices: Vec<Simplex>,
}

impl FilteredComplex {
    pub fn new(simplices: Vec<Simplex>) -> Self {
        FilteredComplex { simplices }
    }

    pub fn len(&self) -> usize {
        self.simplices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.simplices.is_empty()
    }

    pub fn max_dimension(&self) -> usize {
        self.simplices.iter().map(|s| s.dimension()).max().unwrap_or(0)
    }

    /// Check the filtration property, naming the first offending simplex.
    pub fn validate(&self) -> Result<()> {
        let mut by_vertices: HashMap<&[u32], f64> = HashMap::with_capacity(self.len());
        for s in &self.simplices {
            by_vertices.insert(&s.vertices, s.value);
        }
        let mut face = Vec::new();
        for s in &self.simplices {
            if s.dimension() == 0 {
                continue;
            }
            for skip in 0..s.vertices.len() {
                face.clear();
                face.extend(
                    s.vertices
                        .iter()
                        .enumerate()
                        .filter(|&(i, _)| i != skip)
                        .map(|(_, &v)| v),
                );
                match by_vertices.get(face.as_slice()) {
                    None => {
                        return Err(Error::InvalidFiltration {
                            simplex: s.vertices.clone(),
                            reason: format!("face {face:?} is missing"),
                        })
                    }
                    Some(&fv) if fv > s.value => {
                        return Err(Error::InvalidFiltration {
                            simplex: s.vertices.clone(),
                            reason: format!(
                                "face {face:?} enters at {fv} after the simplex at {}",
                                s.value
                            ),
                        })
                    }
                    _ => {}
                }
            }
        }
        Ok(())
    }
}

/// Symmetric dissimilarity matrix with zero diagonal. The triangle
/// inequality is not required.
#[derive(Debug, Clone)]
pub struct DistanceMatrix {
    n: usize,
    entries: Vec<f64>,
}

impl DistanceMatrix {
    /// Build from the full row-major matrix, checking symmetry and the
    /// zero diagonal.
    pub fn new(n: usize, entries: Vec<f64>) -> Result<Self> {
        if entries.len() != n * n {
            return Err(Error::InvalidParameter(format!(
                "distance matrix needs {} entries, got {}",
                n * n,
                entries.len()
            )));
        }
        for i in 0..n {
            if entries[i * n + i] != 0.0 {
                return Err(Error::InvalidParameter(format!(
                    "distance matrix diagonal entry {i} is nonzero"
                )));
            }
            for j in 0..i {
                let (a, b) = (entries[i * n + j], entries[j * n + i]);
                if a != b || a < 0.0 || !a.is_finite() {
                    return Err(Error::InvalidParameter(format!(
                        "distance matrix entries ({i},{j}) invalid: {a} vs {b}"
                    )));
                }
            }
        }
        Ok(DistanceMatrix { n, entries })
    }

    /// Pairwise Euclidean distances of a point cloud.
    pub fn from_points(points: &[Vec<f64>]) -> Self {
        let n = points.len();
        let mut entries = vec![0.0; n * n];
        for i in 0..n {
            for j in 0..i {
                let d = points[i]
                    .iter()
                    .zip(points[j].iter())
                    .map(|(a, b)| (a - b) * (a - b))
                    .sum::<f64>()
                    .sqrt();
                entries[i * n + j] = d;
                entries[j * n + i] = d;
            }
        }
        DistanceMatrix { n, entries }
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.entries[i * self.n + j]
    }
}

/// Complete filtered graph: n vertices at filtration 0, finite edge values.
#[derive(Debug, Clone)]
pub struct FilteredGraph {
    pub n: usize,
    /// (u, v, value) with u < v.
    pub edges: Vec<(u32, u32, f64)>,
}
