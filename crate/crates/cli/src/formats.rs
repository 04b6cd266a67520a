//! File formats: diagram text files, landscape JSON, point/graph/value
//! inputs.

use std::fmt::Write as _;
use std::path::Path;

use landscape_core::ph::FilteredGraph;
use landscape_core::{DiagramPoint, PersistenceDiagram, PersistenceLandscape};
use serde::{Deserialize, Serialize};

use crate::usage;

/// One persistence diagram text file may mix degrees; each line is
/// `<degree> <birth> <death>` with `inf` allowed for the death, `#`
/// comments, and blank lines ignored.
pub fn read_diagram(path: &Path, degree: usize) -> anyhow::Result<PersistenceDiagram> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| usage(format!("cannot read {}: {e}", path.display())))?;
    let mut points = Vec::new();
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let mut fields = line.split_whitespace();
        let bad = || {
            usage(format!(
                "{}:{}: expected `<degree> <birth> <death>`, got `{raw}`",
                path.display(),
                lineno + 1
            ))
        };
        let deg: usize = fields.next().ok_or_else(bad)?.parse().map_err(|_| bad())?;
        let birth: f64 = fields.next().ok_or_else(bad)?.parse().map_err(|_| bad())?;
        let death_str = fields.next().ok_or_else(bad)?;
        if fields.next().is_some() {
            return Err(bad().into());
        }
        let death: f64 = match death_str {
            "inf" => f64::INFINITY,
            s => s.parse().map_err(|_| bad())?,
        };
        if deg != degree {
            continue;
        }
        points.push(DiagramPoint::new(birth, death).map_err(|e| {
            usage(format!("{}:{}: {e}", path.display(), lineno + 1))
        })?);
    }
    Ok(PersistenceDiagram::new(degree, points))
}

/// Write diagrams for several degrees into one text file.
pub fn write_diagrams(path: &Path, diagrams: &[PersistenceDiagram]) -> anyhow::Result<()> {
    let mut out = String::new();
    for d in diagrams {
        for p in &d.points {
            if p.is_infinite() {
                writeln!(out, "{} {} inf", d.degree, p.birth)?;
            } else {
                writeln!(out, "{} {} {}", d.degree, p.birth, p.death)?;
            }
        }
    }
    std::fs::write(path, out)?;
    Ok(())
}

#[derive(Serialize, Deserialize)]
struct LandscapeFile {
    kmax: usize,
    levels: Vec<Vec<(f64, f64)>>,
}

pub fn read_landscape(path: &Path) -> anyhow::Result<PersistenceLandscape> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| usage(format!("cannot read {}: {e}", path.display())))?;
    let file: LandscapeFile = serde_json::from_str(&text)
        .map_err(|e| usage(format!("{}: invalid landscape file: {e}", path.display())))?;
    if file.kmax != file.levels.len() {
        return Err(usage(format!(
            "{}: kmax {} does not match {} levels",
            path.display(),
            file.kmax,
            file.levels.len()
        ))
        .into());
    }
    let levels = file
        .levels
        .into_iter()
        .map(landscape_core::PiecewiseLinearFunction::new)
        .collect();
    Ok(PersistenceLandscape::from_levels(levels))
}

pub fn write_landscape(path: &Path, landscape: &PersistenceLandscape) -> anyhow::Result<()> {
    let file = LandscapeFile {
        kmax: landscape.levels().len(),
        levels: landscape
            .levels()
            .iter()
            .map(|f| f.critical_points().to_vec())
            .collect(),
    };
    std::fs::write(path, serde_json::to_string(&file)?)?;
    Ok(())
}

/// Point clouds: one point per line, comma-separated coordinates.
pub fn read_points(path: &Path) -> anyhow::Result<Vec<Vec<f64>>> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| usage(format!("cannot read {}: {e}", path.display())))?;
    let mut points = Vec::new();
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let p = line
            .split(',')
            .map(|s| s.trim().parse::<f64>())
            .collect::<Result<Vec<f64>, _>>()
            .map_err(|_| {
                usage(format!(
                    "{}:{}: expected comma-separated coordinates, got `{raw}`",
                    path.display(),
                    lineno + 1
                ))
            })?;
        if let Some(first) = points.first() as Option<&Vec<f64>> {
            if first.len() != p.len() {
                return Err(usage(format!(
                    "{}:{}: inconsistent dimension",
                    path.display(),
                    lineno + 1
                ))
                .into());
            }
        }
        points.push(p);
    }
    Ok(points)
}

pub fn write_points(path: &Path, points: &[Vec<f64>]) -> anyhow::Result<()> {
    let mut out = String::new();
    for p in points {
        let coords: Vec<String> = p.iter().map(|x| x.to_string()).collect();
        writeln!(out, "{}", coords.join(","))?;
    }
    std::fs::write(path, out)?;
    Ok(())
}

/// Filtered graphs: first non-comment line `vertices <n>`, then edge lines
/// `<u> <v> <value>`.
pub fn read_graph(path: &Path) -> anyhow::Result<FilteredGraph> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| usage(format!("cannot read {}: {e}", path.display())))?;
    let mut n: Option<usize> = None;
    let mut edges = Vec::new();
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let bad = || usage(format!("{}:{}: bad graph line `{raw}`", path.display(), lineno + 1));
        if n.is_none() {
            let mut fields = line.split_whitespace();
            if fields.next() != Some("vertices") {
                return Err(bad().into());
            }
            n = Some(fields.next().ok_or_else(bad)?.parse().map_err(|_| bad())?);
            continue;
        }
        let mut fields = line.split_whitespace();
        let u: u32 = fields.next().ok_or_else(bad)?.parse().map_err(|_| bad())?;
        let v: u32 = fields.next().ok_or_else(bad)?.parse().map_err(|_| bad())?;
        let w: f64 = fields.next().ok_or_else(bad)?.parse().map_err(|_| bad())?;
        let (u, v) = if u < v { (u, v) } else { (v, u) };
        edges.push((u, v, w));
    }
    let n = n.ok_or_else(|| usage(format!("{}: missing `vertices <n>` line", path.display())))?;
    Ok(FilteredGraph { n, edges })
}

pub fn write_graph(path: &Path, g: &FilteredGraph) -> anyhow::Result<()> {
    let mut out = format!("vertices {}\n", g.n);
    for &(u, v, w) in &g.edges {
        writeln!(out, "{u} {v} {w}")?;
    }
    std::fs::write(path, out)?;
    Ok(())
}

/// Grid values: first line `grid nx,ny[,nz]`, then one value per line in
/// row-major order.
pub fn read_grid_values(path: &Path) -> anyhow::Result<(Vec<usize>, Vec<f64>)> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| usage(format!("cannot read {}: {e}", path.display())))?;
    let mut shape: Option<Vec<usize>> = None;
    let mut values = Vec::new();
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let bad = || usage(format!("{}:{}: bad grid line `{raw}`", path.display(), lineno + 1));
        if shape.is_none() {
            let rest = line.strip_prefix("grid ").ok_or_else(bad)?;
            shape = Some(
                rest.split(',')
                    .map(|s| s.trim().parse::<usize>())
                    .collect::<Result<Vec<usize>, _>>()
                    .map_err(|_| bad())?,
            );
            continue;
        }
        values.push(line.parse::<f64>().map_err(|_| bad())?);
    }
    let shape = shape.ok_or_else(|| usage(format!("{}: missing `grid` header", path.display())))?;
    let expect: usize = shape.iter().product();
    if values.len() != expect {
        return Err(usage(format!(
            "{}: grid {shape:?} needs {expect} values, got {}",
            path.display(),
            values.len()
        ))
        .into());
    }
    Ok((shape, values))
}

pub fn write_grid_values(path: &Path, shape: &[usize], values: &[f64]) -> anyhow::Result<()> {
    let dims: Vec<String> = shape.iter().map(|s| s.to_string()).collect();
    let mut out = format!("grid {}\n", dims.join(","));
    for v in values {
        writeln!(out, "{v}")?;
    }
    std::fs::write(path, out)?;
    Ok(())
}
