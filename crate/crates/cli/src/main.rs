use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use landscape_cli::experiments::{
    run_clique, run_geometric, run_grf, run_torus_sphere, CliqueParams, GeometricParams,
    GrfParams, TorusSphereParams,
};
use landscape_cli::formats;
use landscape_cli::{usage, Usage};
use landscape_core::metrics::{
    bottleneck_distance, landscape_distance, lp_norm, wasserstein_distance,
    weighted_wasserstein,
};
use landscape_core::ph::{
    clique_complex, freudenthal_grid_2d, freudenthal_grid_3d, lower_star, persistent_homology,
    vietoris_rips, DistanceMatrix,
};
use landscape_core::random::{
    add_gaussian_noise, default_torus_radii, diameter, er_filtered_graph, sample_annuli,
    sample_cube, sample_sphere, sample_torus, GrfSampler,
};
use landscape_core::stats::{
    confidence_interval, hotelling_t2, levene_test, permutation_test, two_sample_t,
    Functional, TMethod, TestResult,
};
use landscape_core::{PNorm, PersistenceLandscape};

#[derive(Parser)]
#[command(name = "landscape", about = "Persistence landscape toolkit", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build a landscape from a persistence diagram file
    Compute {
        #[arg(long)]
        diagram: PathBuf,
        #[arg(long)]
        degree: usize,
        /// Keep only the first K levels
        #[arg(long)]
        kmax: Option<usize>,
        /// Clip the diagram to [-B, B] x [-B, B] first
        #[arg(long)]
        threshold: Option<f64>,
        #[arg(short, long)]
        output: PathBuf,
    },
    /// p-norm of a landscape
    Norm {
        #[arg(long)]
        p: PNorm,
        landscape: PathBuf,
    },
    /// p-norm distance between two landscapes
    Distance {
        #[arg(long)]
        p: PNorm,
        a: PathBuf,
        b: PathBuf,
    },
    /// Matching-based distance between two persistence diagrams
    DiagramDistance {
        #[arg(long)]
        metric: Metric,
        /// Required for wasserstein and weighted
        #[arg(long)]
        p: Option<u32>,
        #[arg(long)]
        degree: usize,
        a: PathBuf,
        b: PathBuf,
    },
    /// Pointwise mean of several landscapes
    Mean {
        #[arg(required = true)]
        landscapes: Vec<PathBuf>,
        #[arg(short, long)]
        output: PathBuf,
    },
    /// Confidence interval for the mean of a landscape functional
    Ci {
        #[arg(long, default_value_t = 0.05)]
        alpha: f64,
        /// e.g. indicator:B=10 or weighted:r=2,B=10
        #[arg(long)]
        functional: Functional,
        #[arg(required = true)]
        landscapes: Vec<PathBuf>,
    },
    /// Two-sample t test on a landscape functional
    Ttest {
        #[arg(long)]
        functional: Functional,
        #[arg(long, value_enum, default_value_t = Method::Pooled)]
        method: Method,
        #[command(flatten)]
        groups: Groups,
    },
    /// Levene's variance-equality test on a landscape functional
    Levene {
        #[arg(long)]
        functional: Functional,
        #[command(flatten)]
        groups: Groups,
    },
    /// Hotelling's T^2 test on a vector of landscape functionals
    Hotelling {
        #[arg(long, required = true)]
        functional: Vec<Functional>,
        #[command(flatten)]
        groups: Groups,
    },
    /// Permutation test on the distance between group mean landscapes
    Permtest {
        #[arg(long)]
        p: PNorm,
        #[arg(long, default_value_t = 1000)]
        reps: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[command(flatten)]
        groups: Groups,
    },
    /// Persistent homology of a filtered complex built from input data
    Ph {
        #[arg(long)]
        input: PathBuf,
        #[arg(long, value_enum)]
        filtration: Filtration,
        #[arg(long, default_value_t = 1)]
        maxdim: usize,
        /// Rips radius cutoff
        #[arg(long)]
        maxradius: Option<f64>,
        /// Clique filtration cutoff
        #[arg(long)]
        maxfilt: Option<f64>,
        /// Negate grid values (superlevel sets) for lowerstar
        #[arg(long)]
        negate: bool,
        #[arg(short, long)]
        output: PathBuf,
    },
    /// Generate random inputs
    #[command(subcommand)]
    Gen(Gen),
    /// Replicated end-to-end experiments with a JSON report
    #[command(subcommand)]
    Experiment(Experiment),
    /// Sample a landscape on a grid as CSV rows k,t,value
    ExportPlot {
        landscape: PathBuf,
        #[arg(long)]
        grid_step: f64,
        #[arg(short, long)]
        output: PathBuf,
    },
}

#[derive(Args)]
struct Groups {
    #[arg(long = "group-a", required = true, num_args = 1..)]
    a: Vec<PathBuf>,
    #[arg(long = "group-b", required = true, num_args = 1..)]
    b: Vec<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum Metric {
    Bottleneck,
    Wasserstein,
    Weighted,
}

#[derive(Clone, Copy, ValueEnum)]
enum Method {
    Pooled,
    Welch,
}

#[derive(Clone, Copy, ValueEnum)]
enum Filtration {
    Rips,
    Clique,
    Lowerstar,
}

#[derive(Subcommand)]
enum Gen {
    Cube {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 3)]
        dim: usize,
        #[arg(long)]
        seed: u64,
        #[arg(short, long)]
        output: PathBuf,
    },
    Annuli {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 0.5)]
        inner: f64,
        #[arg(long, default_value_t = 1.0)]
        outer: f64,
        /// Distance between the two annulus centers
        #[arg(long, default_value_t = 2.4)]
        separation: f64,
        #[arg(long)]
        seed: u64,
        #[arg(short, long)]
        output: PathBuf,
    },
    Torus {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        big_r: Option<f64>,
        #[arg(long)]
        small_r: Option<f64>,
        /// Gaussian noise level as a fraction of the diameter
        #[arg(long, default_value_t = 0.0)]
        noise: f64,
        #[arg(long)]
        seed: u64,
        #[arg(short, long)]
        output: PathBuf,
    },
    Sphere {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 1.0)]
        radius: f64,
        #[arg(long, default_value_t = 0.0)]
        noise: f64,
        #[arg(long)]
        seed: u64,
        #[arg(short, long)]
        output: PathBuf,
    },
    Er {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        seed: u64,
        #[arg(short, long)]
        output: PathBuf,
    },
    Grf {
        /// Grid shape, e.g. 32,32 or 10,10,10
        #[arg(long, value_delimiter = ',')]
        grid: Vec<usize>,
        #[arg(long, default_value_t = 400.0)]
        scale: f64,
        #[arg(long)]
        seed: u64,
        #[arg(short, long)]
        output: PathBuf,
    },
}

#[derive(Subcommand)]
enum Experiment {
    /// Uniform cube points, Vietoris-Rips persistence, per-degree CIs
    Geometric {
        #[arg(long, default_value_t = 100)]
        points: usize,
        #[arg(long, default_value_t = 3)]
        dims: usize,
        #[arg(long, default_value_t = 1)]
        maxdeg: usize,
        #[arg(long, default_value_t = 0.8)]
        maxradius: f64,
        #[arg(long, default_value_t = 100)]
        reps: usize,
        #[arg(long, default_value_t = 0.05)]
        alpha: f64,
        #[arg(long)]
        seed: u64,
        #[command(flatten)]
        out: ReportOut,
    },
    /// Random filtered graphs, truncated clique complexes
    Clique {
        #[arg(long, default_value_t = 25)]
        n: usize,
        #[arg(long, default_value_t = 0.55)]
        maxfilt: f64,
        #[arg(long, default_value_t = 1)]
        maxdeg: usize,
        #[arg(long, default_value_t = 10)]
        reps: usize,
        #[arg(long, default_value_t = 0.05)]
        alpha: f64,
        #[arg(long)]
        seed: u64,
        #[command(flatten)]
        out: ReportOut,
    },
    /// Gaussian random fields, lower-star persistence
    Grf {
        #[arg(long, value_delimiter = ',', default_value = "32,32")]
        grid: Vec<usize>,
        #[arg(long, default_value_t = 400.0)]
        scale: f64,
        #[arg(long)]
        negate: bool,
        #[arg(long, default_value_t = 100)]
        reps: usize,
        #[arg(long, default_value_t = 0.05)]
        alpha: f64,
        #[arg(long)]
        seed: u64,
        #[command(flatten)]
        out: ReportOut,
    },
    /// Torus vs sphere through noisy samples and density superlevel sets
    TorusSphere {
        #[arg(long, default_value_t = 300)]
        points: usize,
        #[arg(long, default_value_t = 20)]
        grid_side: usize,
        #[arg(long, default_value_t = 1.5)]
        halfwidth: f64,
        #[arg(long, default_value_t = 0.02)]
        noise: f64,
        /// Triangular-kernel bandwidth shared by both groups
        #[arg(long, default_value_t = 0.35)]
        bandwidth: f64,
        /// Integrate only the first K landscape levels (0 = all)
        #[arg(long, default_value_t = 1)]
        levels: usize,
        #[arg(long, default_value_t = 1)]
        maxdeg: usize,
        #[arg(long, default_value_t = 10)]
        reps: usize,
        #[arg(long, default_value_t = 0.05)]
        alpha: f64,
        #[arg(long)]
        seed: u64,
        #[command(flatten)]
        out: ReportOut,
    },
}

#[derive(Args)]
struct ReportOut {
    #[arg(short, long)]
    output: Option<PathBuf>,
    /// Include wall-clock timing in the report (breaks byte-identical
    /// reruns, so it is opt-in)
    #[arg(long)]
    timings: bool,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(err) => {
            eprintln!("error: {err}");
            if err.downcast_ref::<Usage>().is_some()
                || err.downcast_ref::<landscape_core::Error>().is_some()
            {
                ExitCode::from(2)
            } else {
                ExitCode::FAILURE
            }
        }
    }
}

fn read_group(paths: &[PathBuf]) -> anyhow::Result<Vec<PersistenceLandscape>> {
    paths.iter().map(|p| formats::read_landscape(p)).collect()
}

fn apply_functional(
    functional: &Functional,
    paths: &[PathBuf],
) -> anyhow::Result<Vec<f64>> {
    functional.validate()?;
    Ok(read_group(paths)?.iter().map(|l| functional.apply(l)).collect())
}

fn print_test(result: &TestResult) {
    println!("statistic {}", result.statistic);
    println!("df {}", result.degrees_of_freedom);
    println!("p-value {}", result.p_value);
}

fn run(command: Command) -> anyhow::Result<()> {
    match command {
        Command::Compute { diagram, degree, kmax, threshold, output } => {
            let mut d = formats::read_diagram(&diagram, degree)?;
            if let Some(window) = threshold {
                d = d.threshold(window)?;
            }
            let landscape = PersistenceLandscape::from_diagram(&d, kmax)?;
            formats::write_landscape(&output, &landscape)?;
        }
        Command::Norm { p, landscape } => {
            let l = formats::read_landscape(&landscape)?;
            println!("{}", lp_norm(&l, p));
        }
        Command::Distance { p, a, b } => {
            let (la, lb) = (formats::read_landscape(&a)?, formats::read_landscape(&b)?);
            println!("{}", landscape_distance(&la, &lb, p));
        }
        Command::DiagramDistance { metric, p, degree, a, b } => {
            let da = formats::read_diagram(&a, degree)?;
            let db = formats::read_diagram(&b, degree)?;
            let need_p = || {
                p.ok_or_else(|| usage("--p is required for this metric".into()))
            };
            let value = match metric {
                Metric::Bottleneck => bottleneck_distance(&da, &db)?,
                Metric::Wasserstein => wasserstein_distance(&da, &db, need_p()?)?,
                Metric::Weighted => weighted_wasserstein(&da, &db, need_p()?)?,
            };
            println!("{value}");
        }
        Command::Mean { landscapes, output } => {
            let ls = read_group(&landscapes)?;
            formats::write_landscape(&output, &PersistenceLandscape::mean(&ls)?)?;
        }
        Command::Ci { alpha, functional, landscapes } => {
            let ys = apply_functional(&functional, &landscapes)?;
            let (lo, hi) = confidence_interval(&ys, alpha)?;
            println!("{lo}");
            println!("{hi}");
        }
        Command::Ttest { functional, method, groups } => {
            let a = apply_functional(&functional, &groups.a)?;
            let b = apply_functional(&functional, &groups.b)?;
            let method = match method {
                Method::Pooled => TMethod::Pooled,
                Method::Welch => TMethod::Welch,
            };
            print_test(&two_sample_t(&a, &b, method)?);
        }
        Command::Levene { functional, groups } => {
            let a = apply_functional(&functional, &groups.a)?;
            let b = apply_functional(&functional, &groups.b)?;
            print_test(&levene_test(&a, &b)?);
        }
        Command::Hotelling { functional, groups } => {
            let vectorize = |paths: &[PathBuf]| -> anyhow::Result<Vec<Vec<f64>>> {
                for f in &functional {
                    f.validate()?;
                }
                Ok(read_group(paths)?
                    .iter()
                    .map(|l| functional.iter().map(|f| f.apply(l)).collect())
                    .collect())
            };
            let (a, b) = (vectorize(&groups.a)?, vectorize(&groups.b)?);
            print_test(&hotelling_t2(&a, &b)?);
        }
        Command::Permtest { p, reps, seed, groups } => {
            let a = read_group(&groups.a)?;
            let b = read_group(&groups.b)?;
            println!("p-value {}", permutation_test(&a, &b, p, reps, seed)?);
        }
        Command::Ph { input, filtration, maxdim, maxradius, maxfilt, negate, output } => {
            let complex = match filtration {
                Filtration::Rips => {
                    let points = formats::read_points(&input)?;
                    let dm = DistanceMatrix::from_points(&points);
                    let r = maxradius
                        .ok_or_else(|| usage("--maxradius is required for rips".into()))?;
                    vietoris_rips(&dm, maxdim, r)?
                }
                Filtration::Clique => {
                    let g = formats::read_graph(&input)?;
                    let cutoff = maxfilt.unwrap_or(f64::INFINITY);
                    clique_complex(&g, maxdim, cutoff)?
                }
                Filtration::Lowerstar => {
                    let (shape, values) = formats::read_grid_values(&input)?;
                    let simplices = match shape.as_slice() {
                        [nx, ny] => freudenthal_grid_2d(*nx, *ny)?,
                        [nx, ny, nz] => freudenthal_grid_3d(*nx, *ny, *nz)?,
                        _ => {
                            return Err(usage(format!(
                                "lowerstar needs a 2-d or 3-d grid, got {shape:?}"
                            ))
                            .into())
                        }
                    };
                    lower_star(&values, &simplices, negate)?
                }
            };
            let diagrams = persistent_homology(&complex, maxdim, true)?;
            formats::write_diagrams(&output, &diagrams)?;
        }
        Command::Gen(gen) => run_gen(gen)?,
        Command::Experiment(exp) => run_experiment(exp)?,
        Command::ExportPlot { landscape, grid_step, output } => {
            if !(grid_step > 0.0) {
                return Err(usage(format!("grid step must be positive, got {grid_step}")).into());
            }
            let l = formats::read_landscape(&landscape)?;
            let mut out = String::from("k,t,value\n");
            if let Some((lo, hi)) = l.support() {
                let steps = ((hi - lo) / grid_step).round() as usize;
                for k in 1..=l.num_levels() {
                    for i in 0..=steps {
                        let t = lo + i as f64 * grid_step;
                        out.push_str(&format!("{k},{t},{}\n", l.evaluate(k, t)));
                    }
                }
            }
            std::fs::write(&output, out)?;
        }
    }
    Ok(())
}

fn run_gen(gen: Gen) -> anyhow::Result<()> {
    match gen {
        Gen::Cube { n, dim, seed, output } => {
            formats::write_points(&output, &sample_cube(n, dim, seed)?)?;
        }
        Gen::Annuli { n, inner, outer, separation, seed, output } => {
            let centers = [[0.0, 0.0], [separation, 0.0]];
            formats::write_points(&output, &sample_annuli(n, inner, outer, &centers, seed)?)?;
        }
        Gen::Torus { n, big_r, small_r, noise, seed, output } => {
            let (db, ds) = default_torus_radii();
            let cloud = sample_torus(n, big_r.unwrap_or(db), small_r.unwrap_or(ds), seed)?;
            let cloud = maybe_noise(cloud, noise, seed)?;
            formats::write_points(&output, &cloud)?;
        }
        Gen::Sphere { n, radius, noise, seed, output } => {
            let cloud = sample_sphere(n, radius, seed)?;
            let cloud = maybe_noise(cloud, noise, seed)?;
            formats::write_points(&output, &cloud)?;
        }
        Gen::Er { n, seed, output } => {
            formats::write_graph(&output, &er_filtered_graph(n, seed)?)?;
        }
        Gen::Grf { grid, scale, seed, output } => {
            let field = GrfSampler::new(&grid, scale)?.sample(seed);
            formats::write_grid_values(&output, &field.shape, &field.values)?;
        }
    }
    Ok(())
}

fn maybe_noise(cloud: Vec<Vec<f64>>, factor: f64, seed: u64) -> anyhow::Result<Vec<Vec<f64>>> {
    if factor == 0.0 {
        return Ok(cloud);
    }
    let sigma = factor * diameter(&cloud);
    Ok(add_gaussian_noise(&cloud, sigma, seed.wrapping_add(0x9E3779B97F4A7C15))?)
}

fn run_experiment(exp: Experiment) -> anyhow::Result<()> {
    let start = Instant::now();
    let (mut report, out) = match exp {
        Experiment::Geometric { points, dims, maxdeg, maxradius, reps, alpha, seed, out } => (
            run_geometric(&GeometricParams {
                points,
                dims,
                max_degree: maxdeg,
                max_radius: maxradius,
                reps,
                alpha,
                seed,
            })?,
            out,
        ),
        Experiment::Clique { n, maxfilt, maxdeg, reps, alpha, seed, out } => (
            run_clique(&CliqueParams {
                n,
                max_filtration: maxfilt,
                max_degree: maxdeg,
                reps,
                alpha,
                seed,
            })?,
            out,
        ),
        Experiment::Grf { grid, scale, negate, reps, alpha, seed, out } => (
            run_grf(&GrfParams { shape: grid, scale, negate, reps, alpha, seed })?,
            out,
        ),
        Experiment::TorusSphere {
            points,
            grid_side,
            halfwidth,
            noise,
            bandwidth,
            levels,
            maxdeg,
            reps,
            alpha,
            seed,
            out,
        } => (
            run_torus_sphere(&TorusSphereParams {
                points,
                grid_side,
                domain_halfwidth: halfwidth,
                noise_factor: noise,
                bandwidth,
                levels: if levels == 0 { None } else { Some(levels) },
                max_degree: maxdeg,
                reps,
                alpha,
                seed,
            })?,
            out,
        ),
    };
    if out.timings {
        report.wall_clock_ms = Some(start.elapsed().as_secs_f64() * 1000.0);
    }
    let text = serde_json::to_string_pretty(&report)?;
    match out.output {
        Some(path) => std::fs::write(path, text)?,
        None => println!("{text}"),
    }
    Ok(())
}
