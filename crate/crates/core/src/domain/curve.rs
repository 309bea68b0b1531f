use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Two adjacent segments must agree at their shared breakpoint to within
/// this many kg/h for the curve to count as continuous.
pub const CONTINUITY_TOL: f64 = 1e-9;

#[derive(Debug, Error, PartialEq)]
pub enum CurveError {
    #[error("power {p} MW is below minimum load {min_load} MW")]
    BelowMinimumLoad { p: f64, min_load: f64 },
    #[error("power {p} MW exceeds capacity {capacity} MW")]
    AboveCapacity { p: f64, capacity: f64 },
    #[error("curve has no segments")]
    Empty,
}

/// One linear piece of the hydrogen production curve: over consumption
/// `[p_min, p_max]` MW the hydrogen rate is `slope_a * p + intercept_b` kg/h.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct CurveSegment {
    pub p_min: f64,
    pub p_max: f64,
    pub slope_a: f64,
    pub intercept_b: f64,
}

impl CurveSegment {
    pub fn output_at(&self, p: f64) -> f64 {
        self.slope_a * p + self.intercept_b
    }
}

/// Piecewise-linear hydrogen production curve. Segments are ordered,
/// contiguous (each `p_max` equals the next `p_min`) and continuous at the
/// shared breakpoints; the first `p_min` is the electrolyzer minimum load
/// and the last `p_max` its capacity.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ProductionCurve {
    pub segments: Vec<CurveSegment>,
}

impl ProductionCurve {
    pub fn new(segments: Vec<CurveSegment>) -> Self {
        Self { segments }
    }

    pub fn min_load(&self) -> f64 {
        self.segments.first().map(|s| s.p_min).unwrap_or(0.0)
    }

    pub fn capacity(&self) -> f64 {
        self.segments.last().map(|s| s.p_max).unwrap_or(0.0)
    }

    /// Largest hydrogen rate the curve can reach (checked at segment
    /// endpoints; linear pieces attain extremes there).
    pub fn max_output(&self) -> f64 {
        self.segments
            .iter()
            .flat_map(|s| [s.output_at(s.p_min), s.output_at(s.p_max)])
            .fold(0.0, f64::max)
    }

    /// Structural problems with this curve, if any. Empty means valid.
    pub fn issues(&self) -> Vec<String> {
        let mut out = Vec::new();
        if self.segments.is_empty() {
            out.push("production curve has no segments".to_string());
            return out;
        }
        for (k, seg) in self.segments.iter().enumerate() {
            if !(seg.p_min < seg.p_max) {
                out.push(format!(
                    "segment {k}: p_min {} must be < p_max {}",
                    seg.p_min, seg.p_max
                ));
            }
            if !(seg.slope_a > 0.0) {
                out.push(format!("segment {k}: slope {} must be > 0", seg.slope_a));
            }
            let lo = seg.output_at(seg.p_min).min(seg.output_at(seg.p_max));
            if lo < 0.0 {
                out.push(format!("segment {k}: hydrogen output dips below 0 ({lo} kg/h)"));
            }
            if !seg.p_min.is_finite() || !seg.p_max.is_finite() || !seg.slope_a.is_finite() {
                out.push(format!("segment {k}: non-finite coefficient"));
            }
        }
        for (k, pair) in self.segments.windows(2).enumerate() {
            let (a, b) = (&pair[0], &pair[1]);
            if a.p_max != b.p_min {
                out.push(format!(
                    "segments {k}/{}: not contiguous ({} vs {})",
                    k + 1,
                    a.p_max,
                    b.p_min
                ));
            }
            let gap = (a.output_at(a.p_max) - b.output_at(b.p_min)).abs();
            if gap > CONTINUITY_TOL {
                out.push(format!(
                    "segments {k}/{}: discontinuous at breakpoint {} (gap {gap} kg/h)",
                    k + 1,
                    a.p_max
                ));
            }
        }
        out
    }
}

/// Hydrogen production rate (kg/h) at consumption `p` MW.
///
/// `p = 0` produces nothing; a breakpoint belongs to the lower of the two
/// segments sharing it (the value is identical either way on a continuous
/// curve). Consumption strictly between 0 and minimum load, or above
/// capacity, is rejected.
pub fn evaluate_curve(curve: &ProductionCurve, p: f64) -> Result<f64, CurveError> {
    if curve.segments.is_empty() {
        return Err(CurveError::Empty);
    }
    if p == 0.0 {
        return Ok(0.0);
    }
    let min_load = curve.min_load();
    let capacity = curve.capacity();
    if p < min_load {
        return Err(CurveError::BelowMinimumLoad { p, min_load });
    }
    if p > capacity {
        return Err(CurveError::AboveCapacity { p, capacity });
    }
    for seg in &curve.segments {
        if p <= seg.p_max {
            return Ok(seg.output_at(p));
        }
    }
    // p == capacity handled above; unreachable on a contiguous curve.
    Ok(curve.segments.last().unwrap().output_at(p))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn one_segment() -> ProductionCurve {
        ProductionCurve::new(vec![CurveSegment {
            p_min: 1.0,
            p_max: 10.0,
            slope_a: 20.0,
            intercept_b: 0.0,
        }])
    }

    fn two_segments() -> ProductionCurve {
        // 21*3 - 1 = 62 = 18*3 + 8 at the breakpoint.
        ProductionCurve::new(vec![
            CurveSegment { p_min: 1.0, p_max: 3.0, slope_a: 21.0, intercept_b: -1.0 },
            CurveSegment { p_min: 3.0, p_max: 10.0, slope_a: 18.0, intercept_b: 8.0 },
        ])
    }

    #[test]
    fn zero_power_produces_nothing() {
        assert_eq!(evaluate_curve(&one_segment(), 0.0), Ok(0.0));
    }

    #[test]
    fn linear_evaluation_inside_segment() {
        assert_eq!(evaluate_curve(&one_segment(), 5.0), Ok(100.0));
    }

    #[test]
    fn breakpoint_agrees_from_both_segments() {
        let curve = two_segments();
        // Continuity oracle: evaluate both segment formulas at the shared
        // breakpoint and require that they agree before freezing the value.
        let lower = curve.segments[0].output_at(3.0);
        let upper = curve.segments[1].output_at(3.0);
        assert!((lower - upper).abs() <= CONTINUITY_TOL);
        assert_eq!(lower, 62.0);
        assert_eq!(evaluate_curve(&curve, 3.0), Ok(62.0));
        assert!(curve.issues().is_empty());
    }

    #[test]
    fn forbidden_band_and_overload_rejected() {
        let curve = one_segment();
        assert_eq!(
            evaluate_curve(&curve, 0.5),
            Err(CurveError::BelowMinimumLoad { p: 0.5, min_load: 1.0 })
        );
        assert_eq!(
            evaluate_curve(&curve, 10.5),
            Err(CurveError::AboveCapacity { p: 10.5, capacity: 10.0 })
        );
    }

    #[test]
    fn issues_flag_discontinuity_and_bad_slope() {
        let broken = ProductionCurve::new(vec![
            CurveSegment { p_min: 1.0, p_max: 3.0, slope_a: 21.0, intercept_b: -1.0 },
            CurveSegment { p_min: 3.0, p_max: 10.0, slope_a: -18.0, intercept_b: 9.0 },
        ]);
        let issues = broken.issues();
        assert!(issues.iter().any(|m| m.contains("slope")));
        assert!(issues.iter().any(|m| m.contains("discontinuous")));
    }
}
