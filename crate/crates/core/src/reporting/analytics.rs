use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::records::{GlucoseReading, SymptomCode, SymptomEntry};
use crate::time::{Timestamp, Window};

/// Target band for time in range, mmol/L, inclusive.
pub const TARGET_RANGE: (f64, f64) = (3.9, 10.0);

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GlucoseTrend {
    pub n: usize,
    pub mean: Option<f64>,
    /// Population standard deviation.
    pub sd: Option<f64>,
    /// Least-squares slope, mmol/L per day since the period start.
    pub slope_per_day: Option<f64>,
    pub time_in_range: Option<f64>,
}

pub fn days_since(start: Timestamp, at: Timestamp) -> f64 {
    (at - start).num_milliseconds() as f64 / 86_400_000.0
}

/// Least-squares slope of `y` on `x`; absent for fewer than two points or
/// when every `x` is the same.
pub fn ols_slope(points: &[(f64, f64)]) -> Option<f64> {
    if points.len() < 2 {
        return None;
    }
    let n = points.len() as f64;
    let mx = points.iter().map(|p| p.0).sum::<f64>() / n;
    let my = points.iter().map(|p| p.1).sum::<f64>() / n;
    let sxx: f64 = points.iter().map(|p| (p.0 - mx).powi(2)).sum();
    let sxy: f64 = points.iter().map(|p| (p.0 - mx) * (p.1 - my)).sum();
    (sxx > 0.0).then(|| sxy / sxx)
}

pub fn glucose_trend(series: &[GlucoseReading], period: Window) -> GlucoseTrend {
    let points: Vec<(f64, f64)> = series
        .iter()
        .filter(|r| period.contains(&r.taken_at))
        .map(|r| (days_since(period.start, r.taken_at), r.value))
        .collect();
    let n = points.len();
    if n == 0 {
        return GlucoseTrend {
            n,
            mean: None,
            sd: None,
            slope_per_day: None,
            time_in_range: None,
        };
    }
    let mean = points.iter().map(|p| p.1).sum::<f64>() / n as f64;
    let var = points.iter().map(|p| (p.1 - mean).powi(2)).sum::<f64>() / n as f64;
    let in_range = points
        .iter()
        .filter(|p| p.1 >= TARGET_RANGE.0 && p.1 <= TARGET_RANGE.1)
        .count();
    GlucoseTrend {
        n,
        mean: Some(mean),
        sd: Some(var.sqrt()),
        slope_per_day: ols_slope(&points),
        time_in_range: Some(in_range as f64 / n as f64),
    }
}

pub fn symptom_frequency(entries: &[SymptomEntry], period: Window) -> BTreeMap<SymptomCode, usize> {
    let mut counts = BTreeMap::new();
    for e in entries.iter().filter(|e| period.contains(&e.at)) {
        *counts.entry(e.code).or_insert(0) += 1;
    }
    counts
}
