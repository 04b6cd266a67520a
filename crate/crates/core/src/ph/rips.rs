//! Vietoris-Rips and filtered clique (flag) complexes.

use crate::error::{Error, Result};
use crate::ph::complex::{DistanceMatrix, FilteredComplex, FilteredGraph, Simplex};

/// Flag expansion of a weighted graph given as per-vertex adjacency lists of
/// (neighbor, edge value) with neighbor > vertex. Each clique enters at the
/// max of its edge values; vertices enter at `vertex_value`.
fn flag_expand(
    n: usize,
    neighbors: &[Vec<(u32, f64)>],
    vertex_value: f64,
    top_vertices: usize,
) -> Vec<Simplex> {
    let mut simplices: Vec<Simplex> = (0..n)
        .map(|v| Simplex::new(vec![v as u32], vertex_value))
        .collect();
    let mut clique: Vec<u32> = Vec::with_capacity(top_vertices);
    for v in 0..n as u32 {
        clique.push(v);
        let candidates: Vec<(u32, f64)> = neighbors[v as usize].clone();
        grow(
            neighbors,
            &mut clique,
            &candidates,
            vertex_value,
            top_vertices,
            &mut simplices,
        );
        clique.pop();
    }
    simplices
}

fn grow(
    neighbors: &[Vec<(u32, f64)>],
    clique: &mut Vec<u32>,
    candidates: &[(u32, f64)],
    value: f64,
    top_vertices: usize,
    out: &mut Vec<Simplex>,
) {
    for (i, &(w, vw)) in candidates.iter().enumerate() {
        let new_value = value.max(vw);
        clique.push(w);
        out.push(Simplex::new(clique.clone(), new_value));
        if clique.len() < top_vertices {
            // Shrink the candidate pool to common neighbors of the clique,
            // folding in the edge values from each clique member to w's
            // successors.
            let mut next: Vec<(u32, f64)> = Vec::new();
            let ws = &neighbors[w as usize];
            for &(u, rest_val) in candidates[i + 1..].iter() {
                if let Ok(k) = ws.binary_search_by(|&(x, _)| x.cmp(&u)) {
                    next.push((u, rest_val.max(ws[k].1)));
                }
            }
            grow(neighbors, clique, &next, new_value, top_vertices, out);
        }
        clique.pop();
    }
}

/// Vietoris-Rips complex of a dissimilarity matrix. Simplices get the max
/// pairwise distance as filtration value and are kept while that value is
/// at most `max_radius`. Simplices with up to `max_dim + 2` vertices are
/// generated so that homology in degree `max_dim` comes out right.
pub fn vietoris_rips(
    d: &DistanceMatrix,
    max_dim: usize,
    max_radius: f64,
) -> Result<FilteredComplex> {
    if !(max_radius > 0.0) {
        return Err(Error::InvalidParameter(format!(
            "max_radius must be positive, got {max_radius}"
        )));
    }
    let n = d.len();
    let mut neighbors: Vec<Vec<(u32, f64)>> = vec![Vec::new(); n];
    for i in 0..n {
        for j in i + 1..n {
            let dist = d.get(i, j);
            if dist <= max_radius {
                neighbors[i].push((j as u32, dist));
            }
        }
    }
    Ok(FilteredComplex::new(flag_expand(
        n,
        &neighbors,
        0.0,
        max_dim + 2,
    )))
}

/// Filtered clique complex of a graph: simplex value = max incident edge
/// value, truncated at `max_filtration`. Vertices sit at filtration 0.
pub fn clique_complex(
    g: &FilteredGraph,
    max_dim: usize,
    max_filtration: f64,
) -> Result<FilteredComplex> {
    let mut neighbors: Vec<Vec<(u32, f64)>> = vec![Vec::new(); g.n];
    for &(u, v, value) in &g.edges {
        if u >= v || v as usize >= g.n {
            return Err(Error::InvalidParameter(format!(
                "bad edge ({u}, {v}) in a graph on {} vertices",
                g.n
            )));
        }
        if !value.is_finite() || value < 0.0 {
            return Err(Error::InvalidParameter(format!(
                "edge ({u}, {v}) has invalid filtration value {value}"
            )));
        }
        if value <= max_filtration {
            neighbors[u as usize].push((v, value));
        }
    }
    for adj in &mut neighbors {
        adj.sort_by_key(|&(v, _)| v);
    }
    Ok(FilteredComplex::new(flag_expand(
        g.n,
        &neighbors,
        0.0,
        max_dim + 2,
    )))
}
