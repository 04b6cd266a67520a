//! Persistent homology by boundary-matrix reduction over F2.

use std::collections::HashMap;

use crate::diagram::{DiagramPoint, PersistenceDiagram};
use crate::error::{Error, Result};
use crate::ph::complex::FilteredComplex;

/// Symmetric difference of two ascending index lists (column addition
/// over F2).
fn xor_columns(a: &[usize], b: &[usize]) -> Vec<usize> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => {
                out.push(a[i]);
                i += 1;
            }
            std::cmp::Ordering::Greater => {
                out.push(b[j]);
                j += 1;
            }
            std::cmp::Ordering::Equal => {
                i += 1;
                j += 1;
            }
        }
    }
    out.extend_from_slice(&a[i..]);
    out.extend_from_slice(&b[j..]);
    out
}

/// Compute persistence diagrams for degrees 0..=max_degree.
///
/// Columns are reduced in filtration order within each dimension, sweeping
/// dimensions top down so that paired birth columns can be cleared before
/// their own dimension is processed. The `reduced` flag prepends a virtual
/// empty simplex, killing the earliest-born essential degree-0 class.
///
/// Correct H_{max_degree} requires the complex to contain simplices of
/// dimension max_degree + 1; the constructors in this module take care of
/// that when asked for a given maximum degree.
pub fn persistent_homology(
    complex: &FilteredComplex,
    max_degree: usize,
    reduced: bool,
) -> Result<Vec<PersistenceDiagram>> {
    complex.validate()?;

    // Filtration order with deterministic tie-breaking.
    let mut order: Vec<usize> = (0..complex.len()).collect();
    order.sort_by(|&a, &b| {
        let (sa, sb) = (&complex.simplices[a], &complex.simplices[b]);
        sa.value
            .total_cmp(&sb.value)
            .then(sa.dimension().cmp(&sb.dimension()))
            .then_with(|| sa.vertices.cmp(&sb.vertices))
    });
    let mut position: HashMap<&[u32], usize> = HashMap::with_capacity(complex.len());
    for (pos, &idx) in order.iter().enumerate() {
        position.insert(&complex.simplices[idx].vertices, pos);
    }

    let n = complex.len();
    let mut boundary: Vec<Vec<usize>> = vec![Vec::new(); n];
    let mut dim_of: Vec<usize> = vec![0; n];
    let mut value_of: Vec<f64> = vec![0.0; n];
    for (pos, &idx) in order.iter().enumerate() {
        let s = &complex.simplices[idx];
        dim_of[pos] = s.dimension();
        value_of[pos] = s.value;
        if s.dimension() > 0 {
            let mut col = Vec::with_capacity(s.vertices.len());
            let mut face = Vec::with_capacity(s.vertices.len() - 1);
            for skip in 0..s.vertices.len() {
                face.clear();
                face.extend(
                    s.vertices
                        .iter()
                        .enumerate()
                        .filter(|&(i, _)| i != skip)
                        .map(|(_, &v)| v),
                );
                col.push(position[face.as_slice()]);
            }
            col.sort_unstable();
            boundary[pos] = col;
        }
    }

    let top_dim = complex.max_dimension();
    // pair_with_low[i] = column whose reduced form has lowest row i.
    let mut pair_with_low: Vec<Option<usize>> = vec![None; n];
    let mut reduced_cols: Vec<Option<Vec<usize>>> = vec![None; n];
    let mut cleared = vec![false; n];
    let mut pairs: Vec<(usize, usize)> = Vec::new();

    for dim in (1..=top_dim).rev() {
        for pos in 0..n {
            if dim_of[pos] != dim || cleared[pos] {
                continue;
            }
            let mut col = boundary[pos].clone();
            while let Some(&low) = col.last() {
                match pair_with_low[low] {
                    Some(other) => {
                        col = xor_columns(&col, reduced_cols[other].as_ref().unwrap())
                    }
                    None => break,
                }
            }
            if let Some(&low) = col.last() {
                pair_with_low[low] = Some(pos);
                pairs.push((low, pos));
                cleared[low] = true;
                reduced_cols[pos] = Some(col);
            }
        }
    }

    let mut diagrams: Vec<PersistenceDiagram> = (0..=max_degree)
        .map(|d| PersistenceDiagram::new(d, Vec::new()))
        .collect();
    let mut is_death = vec![false; n];
    for &(_, death) in &pairs {
        is_death[death] = true;
    }
    for &(birth, death) in &pairs {
        let d = dim_of[birth];
        if d <= max_degree {
            diagrams[d]
                .points
                .push(DiagramPoint::new(value_of[birth], value_of[death])?);
        }
    }
    // Unpaired, uncleared simplices carry essential classes.
    let mut essentials: Vec<(usize, f64)> = Vec::new();
    for pos in 0..n {
        if !cleared[pos] && !is_death[pos] {
            essentials.push((dim_of[pos], value_of[pos]));
        }
    }
    if reduced {
        // The virtual empty simplex pairs with the first vertex, so drop
        // the earliest-born essential degree-0 class.
        let first = essentials
            .iter()
            .enumerate()
            .filter(|(_, &(d, _))| d == 0)
            .min_by(|(_, a), (_, b)| a.1.total_cmp(&b.1))
            .map(|(i, _)| i);
        match first {
            Some(i) => {
                essentials.remove(i);
            }
            None => {
                return Err(Error::InvalidParameter(
                    "reduced homology of an empty complex".into(),
                ))
            }
        }
    }
    for (d, value) in essentials {
        if d <= max_degree {
            diagrams[d]
                .points
                .push(DiagramPoint::new(value, f64::INFINITY)?);
        }
    }
    for diag in &mut diagrams {
        diag.points.sort_by(|a, b| {
            a.birth.total_cmp(&b.birth).then(a.death.total_cmp(&b.death))
        });
    }
    Ok(diagrams)
}
