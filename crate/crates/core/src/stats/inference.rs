//! Classical inference on scalar samples produced by landscape functionals:
//! confidence intervals, two-sample t tests, Levene's variance test, and
//! Hotelling's T^2.

use nalgebra::{DMatrix, DVector};

use crate::error::{Error, Result};
use crate::stats::special::{f_cdf, student_cdf, student_upper_critical};

#[derive(Debug, Clone, PartialEq)]
pub struct TestResult {
    pub statistic: f64,
    pub degrees_of_freedom: f64,
    pub p_value: f64,
    pub method: String,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TMethod {
    Pooled,
    Welch,
}

pub fn mean(values: &[f64]) -> f64 {
    values.iter().sum::<f64>() / values.len() as f64
}

/// Unbiased sample variance (n - 1 denominator).
pub fn sample_variance(values: &[f64]) -> f64 {
    let m = mean(values);
    values.iter().map(|v| (v - m).powi(2)).sum::<f64>() / (values.len() - 1) as f64
}

fn need(what: &'static str, n: usize, min: usize) -> Result<()> {
    if n < min {
        return Err(Error::SampleTooSmall {
            what,
            need: min,
            got: n,
        });
    }
    Ok(())
}

/// Two-sided (1 - alpha) confidence interval for the mean:
/// mean +- t_(alpha/2, n-1) * S / sqrt(n).
pub fn confidence_interval(values: &[f64], alpha: f64) -> Result<(f64, f64)> {
    need("confidence interval", values.len(), 2)?;
    if !(alpha > 0.0 && alpha <= 1.0) {
        return Err(Error::InvalidParameter(format!(
            "alpha must lie in (0, 1], got {alpha}"
        )));
    }
    let n = values.len() as f64;
    let m = mean(values);
    let s = sample_variance(values).sqrt();
    let t = student_upper_critical(0.5 * alpha, n - 1.0);
    let half = t * s / n.sqrt();
    Ok((m - half, m + half))
}

fn two_sided_p(t: f64, df: f64) -> f64 {
    2.0 * (1.0 - student_cdf(t.abs(), df))
}

/// Independent two-sample t test: pooled-variance Student or Welch.
pub fn two_sample_t(a: &[f64], b: &[f64], method: TMethod) -> Result<TestResult> {
    need("two-sample t test", a.len(), 2)?;
    need("two-sample t test", b.len(), 2)?;
    let (n1, n2) = (a.len() as f64, b.len() as f64);
    let (m1, m2) = (mean(a), mean(b));
    let (v1, v2) = (sample_variance(a), sample_variance(b));
    let (statistic, df, label) = match method {
        TMethod::Pooled => {
            let df = n1 + n2 - 2.0;
            let pooled = ((n1 - 1.0) * v1 + (n2 - 1.0) * v2) / df;
            let se = (pooled * (1.0 / n1 + 1.0 / n2)).sqrt();
            ((m1 - m2) / se, df, "two-sample t (pooled)")
        }
        TMethod::Welch => {
            let se2 = v1 / n1 + v2 / n2;
            let df = se2 * se2
                / ((v1 / n1).powi(2) / (n1 - 1.0) + (v2 / n2).powi(2) / (n2 - 1.0));
            ((m1 - m2) / se2.sqrt(), df, "two-sample t (Welch)")
        }
    };
    // Zero-variance degeneracies get conventional p-values.
    if !statistic.is_finite() {
        let (stat, p) = if m1 == m2 {
            (0.0, 1.0)
        } else {
            (f64::INFINITY * (m1 - m2).signum(), 0.0)
        };
        return Ok(TestResult {
            statistic: stat,
            degrees_of_freedom: if df.is_finite() { df } else { n1 + n2 - 2.0 },
            p_value: p,
            method: label.to_string(),
        });
    }
    Ok(TestResult {
        statistic,
        degrees_of_freedom: df,
        p_value: two_sided_p(statistic, df),
        method: label.to_string(),
    })
}

/// Levene's test for equality of variances across two groups, centering at
/// group means.
pub fn levene_test(a: &[f64], b: &[f64]) -> Result<TestResult> {
    need("Levene test", a.len(), 2)?;
    need("Levene test", b.len(), 2)?;
    let za: Vec<f64> = {
        let m = mean(a);
        a.iter().map(|v| (v - m).abs()).collect()
    };
    let zb: Vec<f64> = {
        let m = mean(b);
        b.iter().map(|v| (v - m).abs()).collect()
    };
    let (n1, n2) = (za.len() as f64, zb.len() as f64);
    let n = n1 + n2;
    let (m1, m2) = (mean(&za), mean(&zb));
    let grand = (n1 * m1 + n2 * m2) / n;
    let between = n1 * (m1 - grand).powi(2) + n2 * (m2 - grand).powi(2);
    let within: f64 = za.iter().map(|z| (z - m1).powi(2)).sum::<f64>()
        + zb.iter().map(|z| (z - m2).powi(2)).sum::<f64>();
    let df = n - 2.0;
    let method = "Levene (mean-centered)".to_string();
    if within == 0.0 {
        // All centered deviations constant per group: W degenerates to 0
        // (identical spreads) or infinity (different spreads).
        let (statistic, p_value) = if between == 0.0 {
            (0.0, 1.0)
        } else {
            (f64::INFINITY, 0.0)
        };
        return Ok(TestResult {
            statistic,
            degrees_of_freedom: df,
            p_value,
            method,
        });
    }
    let w = df * between / within;
    Ok(TestResult {
        statistic: w,
        degrees_of_freedom: df,
        p_value: 1.0 - f_cdf(w, 1.0, df),
        method,
    })
}

/// Two-sample Hotelling T^2 with pooled covariance. The p-value comes from
/// the F transform F = (n1+n2-k-1) / (k (n1+n2-2)) * T^2 with
/// (k, n1+n2-k-1) degrees of freedom.
pub fn hotelling_t2(a: &[Vec<f64>], b: &[Vec<f64>]) -> Result<TestResult> {
    need("Hotelling T^2", a.len(), 2)?;
    need("Hotelling T^2", b.len(), 2)?;
    let k = a[0].len();
    if k == 0 || a.iter().chain(b.iter()).any(|v| v.len() != k) {
        return Err(Error::DimensionMismatch(
            "all observation vectors must share one positive dimension".into(),
        ));
    }
    let (n1, n2) = (a.len() as f64, b.len() as f64);
    if n1 + n2 - 2.0 <= k as f64 {
        return Err(Error::SampleTooSmall {
            what: "Hotelling T^2 (need n1+n2-2 > k)",
            need: k + 3,
            got: a.len() + b.len(),
        });
    }
    let mean_vec = |g: &[Vec<f64>]| {
        let mut m = DVector::zeros(k);
        for v in g {
            m += DVector::from_column_slice(v);
        }
        m / g.len() as f64
    };
    let ma = mean_vec(a);
    let mb = mean_vec(b);
    let mut pooled = DMatrix::<f64>::zeros(k, k);
    for (g, m) in [(a, &ma), (b, &mb)] {
        for v in g {
            let d = DVector::from_column_slice(v) - m;
            pooled += &d * d.transpose();
        }
    }
    pooled /= n1 + n2 - 2.0;
    let inv = pooled
        .clone()
        .try_inverse()
        .ok_or(Error::SingularCovariance)?;
    let diff = ma - mb;
    let t2 = (n1 * n2 / (n1 + n2)) * (diff.transpose() * inv * diff)[(0, 0)];
    let kf = k as f64;
    let f_df2 = n1 + n2 - kf - 1.0;
    let f_stat = f_df2 / (kf * (n1 + n2 - 2.0)) * t2;
    Ok(TestResult {
        statistic: t2,
        degrees_of_freedom: f_df2,
        p_value: 1.0 - f_cdf(f_stat, kf, f_df2),
        method: format!("Hotelling T^2 (two-sample, k={k})"),
    })
}

/// Paired / one-sample Hotelling T^2 on difference vectors supplied by the
/// caller: tests mean zero.
pub fn hotelling_t2_paired(diffs: &[Vec<f64>]) -> Result<TestResult> {
    need("paired Hotelling T^2", diffs.len(), 2)?;
    let k = diffs[0].len();
    if k == 0 || diffs.iter().any(|v| v.len() != k) {
        return Err(Error::DimensionMismatch(
            "all difference vectors must share one positive dimension".into(),
        ));
    }
    let n = diffs.len() as f64;
    if n - 1.0 <= k as f64 {
        return Err(Error::SampleTooSmall {
            what: "paired Hotelling T^2 (need n-1 > k)",
            need: k + 2,
            got: diffs.len(),
        });
    }
    let mut m = DVector::zeros(k);
    for v in diffs {
        m += DVector::from_column_slice(v);
    }
    m /= n;
    let mut cov = DMatrix::<f64>::zeros(k, k);
    for v in diffs {
        let d = DVector::from_column_slice(v) - &m;
        cov += &d * d.transpose();
    }
    cov /= n - 1.0;
    let inv = cov.try_inverse().ok_or(Error::SingularCovariance)?;
    let t2 = n * (m.transpose() * inv * &m)[(0, 0)];
    let kf = k as f64;
    let f_df2 = n - kf;
    let f_stat = f_df2 / (kf * (n - 1.0)) * t2;
    Ok(TestResult {
        statistic: t2,
        degrees_of_freedom: f_df2,
        p_value: 1.0 - f_cdf(f_stat, kf, f_df2),
        method: format!("Hotelling T^2 (paired, k={k})"),
    })
}
