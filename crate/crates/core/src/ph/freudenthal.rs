//! Freudenthal triangulations of 2-d/3-d grids and lower-star filtrations.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::ph::complex::{FilteredComplex, Simplex};

/// Collect a set of top simplices together with all their faces.
fn close_under_faces(top: Vec<Vec<u32>>) -> Vec<Vec<u32>> {
    let mut all: BTreeSet<Vec<u32>> = BTreeSet::new();
    let mut stack = top;
    while let Some(s) = stack.pop() {
        if !all.insert(s.clone()) {
            continue;
        }
        if s.len() > 1 {
            for skip in 0..s.len() {
                let mut face = s.clone();
                face.remove(skip);
                stack.push(face);
            }
        }
    }
    all.into_iter().collect()
}

/// Triangulate an nx-by-ny grid: each cell splits into 2 triangles along
/// the main diagonal. Vertex ids are row-major, id = iy * nx + ix.
pub fn freudenthal_grid_2d(nx: usize, ny: usize) -> Result<Vec<Vec<u32>>> {
    if nx < 2 || ny < 2 {
        return Err(Error::InvalidParameter(format!(
            "grid must be at least 2x2, got {nx}x{ny}"
        )));
    }
    let id = |ix: usize, iy: usize| (iy * nx + ix) as u32;
    let mut top = Vec::with_capacity(2 * (nx - 1) * (ny - 1));
    for iy in 0..ny - 1 {
        for ix in 0..nx - 1 {
            let (a, b) = (id(ix, iy), id(ix + 1, iy));
            let (c, d) = (id(ix, iy + 1), id(ix + 1, iy + 1));
            top.push(vec![a, b, d]);
            top.push(vec![a, c, d]);
        }
    }
    Ok(close_under_faces(top))
}

/// Triangulate an nx-by-ny-by-nz grid: each cube splits into 6 tetrahedra,
/// one per monotone lattice path from the low corner to the high corner.
/// Vertex ids are row-major, id = (iz * ny + iy) * nx + ix.
pub fn freudenthal_grid_3d(nx: usize, ny: usize, nz: usize) -> Result<Vec<Vec<u32>>> {
    if nx < 2 || ny < 2 || nz < 2 {
        return Err(Error::InvalidParameter(format!(
            "grid must be at least 2x2x2, got {nx}x{ny}x{nz}"
        )));
    }
    let id = |ix: usize, iy: usize, iz: usize| ((iz * ny + iy) * nx + ix) as u32;
    let perms: [[usize; 3]; 6] = [
        [0, 1, 2],
        [0, 2, 1],
        [1, 0, 2],
        [1, 2, 0],
        [2, 0, 1],
        [2, 1, 0],
    ];
    let mut top = Vec::with_capacity(6 * (nx - 1) * (ny - 1) * (nz - 1));
    for iz in 0..nz - 1 {
        for iy in 0..ny - 1 {
            for ix in 0..nx - 1 {
                for perm in &perms {
                    let mut corner = [ix, iy, iz];
                    let mut tet = vec![id(corner[0], corner[1], corner[2])];
                    for &axis in perm {
                        corner[axis] += 1;
                        tet.push(id(corner[0], corner[1], corner[2]));
                    }
                    top.push(tet);
                }
            }
        }
    }
    Ok(close_under_faces(top))
}

/// Lower-star filtration: each simplex enters at the max of its vertex
/// values (so sublevel sets of the vertex function are realized). With
/// `negate` the values are flipped first, which turns superlevel sets of
/// the original function into sublevel sets of the filtration.
pub fn lower_star(
    values: &[f64],
    simplices: &[Vec<u32>],
    negate: bool,
) -> Result<FilteredComplex> {
    if values.iter().any(|v| !v.is_finite()) {
        return Err(Error::InvalidParameter(
            "lower-star vertex values must be finite".into(),
        ));
    }
    let sign = if negate { -1.0 } else { 1.0 };
    let mut out = Vec::with_capacity(simplices.len());
    for s in simplices {
        let mut value = f64::NEG_INFINITY;
        for &v in s {
            let idx = v as usize;
            if idx >= values.len() {
                return Err(Error::InvalidParameter(format!(
                    "simplex {s:?} references vertex {v} but only {} values given",
                    values.len()
                )));
            }
            value = value.max(sign * values[idx]);
        }
        out.push(Simplex::new(s.clone(), value));
    }
    Ok(FilteredComplex::new(out))
}
