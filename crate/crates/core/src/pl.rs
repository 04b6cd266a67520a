//! Exact piecewise-linear functions on the real line.
//!
//! A function is stored as its ordered critical points and is identically
//! zero outside their span. All algebra (linear combinations, L^p
//! integration, products) is closed-form, so norms and distances downstream
//! are exact up to floating-point roundoff.

/// Relative tolerance used when merging nearly identical abscissae and
/// pruning collinear critical points.
pub const CANONICAL_TOL: f64 = 1e-12;

#[derive(Debug, Clone, Default, PartialEq)]
pub struct PiecewiseLinearFunction {
    points: Vec<(f64, f64)>,
}

fn close(a: f64, b: f64) -> bool {
    (a - b).abs() <= CANONICAL_TOL * a.abs().max(b.abs()).max(1.0)
}

impl PiecewiseLinearFunction {
    /// The zero function (empty critical list).
    pub fn zero() -> Self {
        PiecewiseLinearFunction { points: Vec::new() }
    }

    /// Build from critical points, sorting and reducing to canonical form:
    /// strictly increasing abscissae, no three collinear points, redundant
    /// zero tails trimmed.
    pub fn new(mut points: Vec<(f64, f64)>) -> Self {
        points.sort_by(|a, b| a.0.total_cmp(&b.0));
        Self::from_sorted(points)
    }

    fn from_sorted(points: Vec<(f64, f64)>) -> Self {
        // Merge abscissae that coincide up to tolerance.
        let mut merged: Vec<(f64, f64)> = Vec::with_capacity(points.len());
        for (t, v) in points {
            match merged.last() {
                Some(&(tp, _)) if close(tp, t) => {}
                _ => merged.push((t, v)),
            }
        }
        // Drop interior collinear points.
        let mut out: Vec<(f64, f64)> = Vec::with_capacity(merged.len());
        for (t, v) in merged {
            while out.len() >= 2 {
                let (t0, v0) = out[out.len() - 2];
                let (t1, v1) = out[out.len() - 1];
                let expected = v0 + (v - v0) * (t1 - t0) / (t - t0);
                let scale = v0.abs().max(v1.abs()).max(v.abs()).max(1.0);
                if (v1 - expected).abs() <= CANONICAL_TOL * scale {
                    out.pop();
                } else {
                    break;
                }
            }
            out.push((t, v));
        }
        // Trim leading/trailing zero runs and degenerate lists.
        while out.len() >= 2 && out[0].1 == 0.0 && out[1].1 == 0.0 {
            out.remove(0);
        }
        while out.len() >= 2 && out[out.len() - 1].1 == 0.0 && out[out.len() - 2].1 == 0.0 {
            out.pop();
        }
        // Snap floating-point residue at the support boundary to exact zero
        // so the function genuinely vanishes at its endpoints.
        let scale = out.iter().map(|&(_, v)| v.abs()).fold(1.0, f64::max);
        for idx in [0, out.len().saturating_sub(1)] {
            if let Some(p) = out.get_mut(idx) {
                if p.1 != 0.0 && p.1.abs() <= CANONICAL_TOL * scale {
                    p.1 = 0.0;
                }
            }
        }
        while out.len() >= 2 && out[0].1 == 0.0 && out[1].1 == 0.0 {
            out.remove(0);
        }
        while out.len() >= 2 && out[out.len() - 1].1 == 0.0 && out[out.len() - 2].1 == 0.0 {
            out.pop();
        }
        if out.iter().all(|&(_, v)| v == 0.0) {
            out.clear();
        }
        PiecewiseLinearFunction { points: out }
    }

    pub fn critical_points(&self) -> &[(f64, f64)] {
        &self.points
    }

    pub fn is_zero(&self) -> bool {
        self.points.is_empty()
    }

    /// Support interval [t_first, t_last], if nonempty.
    pub fn support(&self) -> Option<(f64, f64)> {
        match (self.points.first(), self.points.last()) {
            (Some(&(a, _)), Some(&(b, _))) => Some((a, b)),
            _ => None,
        }
    }

    /// Linear interpolation at `t`; zero outside the support.
    pub fn evaluate(&self, t: f64) -> f64 {
        let n = self.points.len();
        if n == 0 || t < self.points[0].0 || t > self.points[n - 1].0 {
            return 0.0;
        }
        let i = self.points.partition_point(|&(x, _)| x <= t);
        if i == 0 {
            return self.points[0].1;
        }
        if i == n {
            return self.points[n - 1].1;
        }
        let (t0, v0) = self.points[i - 1];
        let (t1, v1) = self.points[i];
        v0 + (v1 - v0) * (t - t0) / (t1 - t0)
    }

    /// Largest absolute critical value (the sup norm of the function).
    pub fn sup_abs(&self) -> f64 {
        self.points.iter().map(|&(_, v)| v.abs()).fold(0.0, f64::max)
    }

    /// Exact linear combination sum c_i * f_i, computed by accumulating
    /// slope-change events. Inputs must vanish at their support endpoints
    /// (all functions produced by this crate do).
    pub fn linear_combination(terms: &[(f64, &PiecewiseLinearFunction)]) -> Self {
        let mut events: Vec<(f64, f64)> = Vec::new();
        for &(c, f) in terms {
            if c == 0.0 || f.is_zero() {
                continue;
            }
            let pts = &f.points;
            let mut prev_slope = 0.0;
            for i in 0..pts.len() {
                let slope = if i + 1 < pts.len() {
                    (pts[i + 1].1 - pts[i].1) / (pts[i + 1].0 - pts[i].0)
                } else {
                    0.0
                };
                events.push((pts[i].0, c * (slope - prev_slope)));
                prev_slope = slope;
            }
        }
        if events.is_empty() {
            return Self::zero();
        }
        events.sort_by(|a, b| a.0.total_cmp(&b.0));
        let mut points: Vec<(f64, f64)> = Vec::with_capacity(events.len());
        let mut slope = 0.0;
        let mut value = 0.0;
        let mut t_prev = events[0].0;
        let mut i = 0;
        while i < events.len() {
            let t = events[i].0;
            let mut dslope = 0.0;
            while i < events.len() && close(events[i].0, t) {
                dslope += events[i].1;
                i += 1;
            }
            value += slope * (t - t_prev);
            points.push((t, value));
            slope += dslope;
            t_prev = t;
        }
        Self::from_sorted(points)
    }

    /// Exact integral of |f|^p over the line, for integer p >= 1.
    pub fn lp_integral(&self, p: u32) -> f64 {
        assert!(p >= 1);
        let mut total = 0.0;
        for w in self.points.windows(2) {
            let (t0, v0) = w[0];
            let (t1, v1) = w[1];
            if v0 * v1 < 0.0 {
                // Split at the zero crossing.
                let tz = t0 + (t1 - t0) * v0 / (v0 - v1);
                total += segment_lp(t0, v0, tz, 0.0, p);
                total += segment_lp(tz, 0.0, t1, v1, p);
            } else {
                total += segment_lp(t0, v0, t1, v1, p);
            }
        }
        total
    }

    /// Signed integral of f over [a, b].
    pub fn integral_over(&self, a: f64, b: f64) -> f64 {
        if a >= b {
            return 0.0;
        }
        let mut total = 0.0;
        for w in self.points.windows(2) {
            let (t0, v0) = w[0];
            let (t1, v1) = w[1];
            let lo = t0.max(a);
            let hi = t1.min(b);
            if lo >= hi {
                continue;
            }
            let vlo = v0 + (v1 - v0) * (lo - t0) / (t1 - t0);
            let vhi = v0 + (v1 - v0) * (hi - t0) / (t1 - t0);
            total += 0.5 * (vlo + vhi) * (hi - lo);
        }
        total
    }

    /// Exact integral of f * g (piecewise quadratic, integrated by Simpson's
    /// rule per merged segment, which is exact for quadratics).
    pub fn integral_product(&self, other: &PiecewiseLinearFunction) -> f64 {
        let (a0, a1) = match self.support() {
            Some(s) => s,
            None => return 0.0,
        };
        let (b0, b1) = match other.support() {
            Some(s) => s,
            None => return 0.0,
        };
        let lo = a0.max(b0);
        let hi = a1.min(b1);
        if lo >= hi {
            return 0.0;
        }
        let mut cuts: Vec<f64> = self
            .points
            .iter()
            .chain(other.points.iter())
            .map(|&(t, _)| t)
            .filter(|&t| t >= lo && t <= hi)
            .collect();
        cuts.push(lo);
        cuts.push(hi);
        cuts.sort_by(f64::total_cmp);
        cuts.dedup_by(|a, b| close(*a, *b));
        let mut total = 0.0;
        for w in cuts.windows(2) {
            let (t0, t1) = (w[0], w[1]);
            let tm = 0.5 * (t0 + t1);
            let s = self.evaluate(t0) * other.evaluate(t0)
                + 4.0 * self.evaluate(tm) * other.evaluate(tm)
                + self.evaluate(t1) * other.evaluate(t1);
            total += s * (t1 - t0) / 6.0;
        }
        total
    }

    /// Equality of the underlying functions up to tolerance, checked at the
    /// union of critical abscissae and segment midpoints.
    pub fn approx_eq(&self, other: &PiecewiseLinearFunction, tol: f64) -> bool {
        let mut ts: Vec<f64> = self
            .points
            .iter()
            .chain(other.points.iter())
            .map(|&(t, _)| t)
            .collect();
        ts.sort_by(f64::total_cmp);
        let mut probes = Vec::with_capacity(2 * ts.len());
        for w in ts.windows(2) {
            probes.push(w[0]);
            probes.push(0.5 * (w[0] + w[1]));
        }
        if let Some(&last) = ts.last() {
            probes.push(last);
        }
        probes
            .iter()
            .all(|&t| (self.evaluate(t) - other.evaluate(t)).abs() <= tol)
    }
}

/// Integral of |linear|^p over one segment with no interior sign change.
fn segment_lp(t0: f64, v0: f64, t1: f64, v1: f64, p: u32) -> f64 {
    let dt = t1 - t0;
    if dt <= 0.0 {
        return 0.0;
    }
    let slope = (v1 - v0) / dt;
    let a0 = v0.abs();
    let a1 = v1.abs();
    if slope == 0.0 || a0 == a1 {
        return a0.powi(p as i32) * dt;
    }
    let sign = if v0 + v1 >= 0.0 { 1.0 } else { -1.0 };
    (a1.powi(p as i32 + 1) - a0.powi(p as i32 + 1)) / (sign * slope * (p as f64 + 1.0))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn tent(b: f64, d: f64) -> PiecewiseLinearFunction {
        PiecewiseLinearFunction::new(vec![(b, 0.0), (0.5 * (b + d), 0.5 * (d - b)), (d, 0.0)])
    }

    #[test]
    fn canonicalization_drops_collinear_points() {
        let f = PiecewiseLinearFunction::new(vec![
            (0.0, 0.0),
            (0.5, 0.5),
            (1.0, 1.0),
            (2.0, 0.0),
        ]);
        assert_eq!(f.critical_points(), &[(0.0, 0.0), (1.0, 1.0), (2.0, 0.0)]);
    }

    #[test]
    fn all_zero_values_collapse_to_zero_function() {
        let f = PiecewiseLinearFunction::new(vec![(0.0, 0.0), (1.0, 0.0), (5.0, 0.0)]);
        assert!(f.is_zero());
    }

    #[test]
    fn evaluate_interpolates_and_vanishes_outside() {
        let f = tent(0.0, 2.0);
        assert_eq!(f.evaluate(0.5), 0.5);
        assert_eq!(f.evaluate(1.0), 1.0);
        assert_eq!(f.evaluate(-0.1), 0.0);
        assert_eq!(f.evaluate(2.1), 0.0);
    }

    #[test]
    fn linear_combination_averages_pointwise() {
        let a = tent(0.0, 2.0);
        let b = tent(0.0, 4.0);
        let m = PiecewiseLinearFunction::linear_combination(&[(0.5, &a), (0.5, &b)]);
        assert_eq!(
            m.critical_points(),
            &[(0.0, 0.0), (1.0, 1.0), (2.0, 1.0), (4.0, 0.0)]
        );
    }

    #[test]
    fn linear_combination_cancels_exactly() {
        let a = tent(0.3, 2.7);
        let z = PiecewiseLinearFunction::linear_combination(&[(1.0, &a), (-1.0, &a)]);
        assert!(z.is_zero());
    }

    #[test]
    fn scaling_scales_values_not_abscissae() {
        let a = tent(0.0, 2.0);
        let s = PiecewiseLinearFunction::linear_combination(&[(2.0, &a)]);
        assert_eq!(s.critical_points(), &[(0.0, 0.0), (1.0, 2.0), (2.0, 0.0)]);
    }

    #[test]
    fn l1_and_l2_of_unit_tent() {
        let f = tent(0.0, 2.0);
        assert!((f.lp_integral(1) - 1.0).abs() < 1e-15);
        assert!((f.lp_integral(2) - 2.0 / 3.0).abs() < 1e-15);
    }

    #[test]
    fn lp_integral_handles_sign_changes() {
        // f goes from -1 at t=0 to +1 at t=2: integral of |f| is 1.
        let f = PiecewiseLinearFunction::new(vec![(-1.0, 0.0), (0.0, -1.0), (2.0, 1.0), (3.0, 0.0)]);
        let by_hand = 0.5 + 0.5 + 0.5 + 0.5;
        assert!((f.lp_integral(1) - by_hand).abs() < 1e-15);
    }

    #[test]
    fn integral_over_window() {
        let f = tent(0.0, 2.0);
        assert!((f.integral_over(0.0, 2.0) - 1.0).abs() < 1e-15);
        assert!((f.integral_over(0.0, 1.0) - 0.5).abs() < 1e-15);
        assert!((f.integral_over(-5.0, 5.0) - 1.0).abs() < 1e-15);
    }

    #[test]
    fn product_integral_matches_hand_value() {
        let f = tent(0.0, 2.0);
        // integral of tent^2 = 2/3
        assert!((f.integral_product(&f) - 2.0 / 3.0).abs() < 1e-15);
    }
}
