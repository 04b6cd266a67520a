//! Linear functionals Y = integral of f * lambda turning a landscape into a
//! single real observation.

use crate::error::{Error, Result};
use crate::landscape::PersistenceLandscape;
use crate::pl::PiecewiseLinearFunction;

/// The functional applied to a landscape.
#[derive(Debug, Clone)]
pub enum Functional {
    /// Indicator of [-B, B] on the first K levels (all levels if `levels`
    /// is None): Y = sum_{k<=K} of the integral of lambda_k over [-B, B].
    Indicator { window: f64, levels: Option<usize> },
    /// Weighted sum with per-level weight k^(-r) on [-B, B]; needs r > 1
    /// for summability.
    Weighted { decay: f64, window: f64 },
    /// Arbitrary piecewise-linear weight per level; levels beyond the
    /// supplied weights contribute zero.
    Custom(Vec<PiecewiseLinearFunction>),
}

impl Functional {
    pub fn validate(&self) -> Result<()> {
        match self {
            Functional::Indicator { window, .. } if *window <= 0.0 => Err(
                Error::InvalidParameter("indicator window B must be positive".into()),
            ),
            Functional::Weighted { decay, window } if *decay <= 1.0 || *window <= 0.0 => {
                Err(Error::InvalidParameter(
                    "weighted functional needs r > 1 and B > 0".into(),
                ))
            }
            _ => Ok(()),
        }
    }

    /// Exact evaluation of the functional on a landscape.
    pub fn apply(&self, landscape: &PersistenceLandscape) -> f64 {
        match self {
            Functional::Indicator { window, levels } => {
                let take = levels.unwrap_or(usize::MAX);
                landscape
                    .levels()
                    .iter()
                    .take(take)
                    .map(|l| l.integral_over(-window, *window))
                    .sum()
            }
            Functional::Weighted { decay, window } => landscape
                .levels()
                .iter()
                .enumerate()
                .map(|(i, l)| {
                    ((i + 1) as f64).powf(-decay) * l.integral_over(-window, *window)
                })
                .sum(),
            Functional::Custom(weights) => landscape
                .levels()
                .iter()
                .zip(weights.iter())
                .map(|(l, w)| l.integral_product(w))
                .sum(),
        }
    }
}

/// Parse the CLI spelling of a functional: `indicator:B=10`,
/// `indicator:B=10,K=3`, or `weighted:r=2,B=10`.
impl std::str::FromStr for Functional {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::InvalidParameter(format!("invalid functional spec '{s}'"));
        let (kind, args) = s.split_once(':').ok_or_else(bad)?;
        let mut window = None;
        let mut levels = None;
        let mut decay = None;
        for part in args.split(',') {
            let (key, val) = part.split_once('=').ok_or_else(bad)?;
            match key.trim() {
                "B" => window = Some(val.trim().parse::<f64>().map_err(|_| bad())?),
                "K" => levels = Some(val.trim().parse::<usize>().map_err(|_| bad())?),
                "r" => decay = Some(val.trim().parse::<f64>().map_err(|_| bad())?),
                _ => return Err(bad()),
            }
        }
        let f = match kind.trim() {
            "indicator" => Functional::Indicator {
                window: window.ok_or_else(bad)?,
                levels,
            },
            "weighted" => Functional::Weighted {
                decay: decay.ok_or_else(bad)?,
                window: window.ok_or_else(bad)?,
            },
            _ => return Err(bad()),
        };
        f.validate()?;
        Ok(f)
    }
}
