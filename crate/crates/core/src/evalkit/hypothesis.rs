use serde::{Deserialize, Serialize};

use super::special::{normal_two_sided, student_t_two_sided};
use super::EvalError;

/// Mean, sample standard deviation (n - 1) and size of one group.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SummaryStats {
    pub mean: f64,
    pub sd: f64,
    pub n: usize,
}

impl SummaryStats {
    pub fn new(mean: f64, sd: f64, n: usize) -> Result<Self, EvalError> {
        let s = Self { mean, sd, n };
        s.validate()?;
        Ok(s)
    }

    pub fn validate(&self) -> Result<(), EvalError> {
        if self.n < 2 {
            return Err(EvalError::TooFewObservations { needed: 2, got: self.n });
        }
        if !self.mean.is_finite() || !self.sd.is_finite() {
            return Err(EvalError::NotFinite);
        }
        if self.sd < 0.0 {
            return Err(EvalError::OutOfRange(format!("standard deviation {}", self.sd)));
        }
        Ok(())
    }

    pub fn of_sample(sample: &[f64]) -> Result<Self, EvalError> {
        if sample.len() < 2 {
            return Err(EvalError::TooFewObservations { needed: 2, got: sample.len() });
        }
        let n = sample.len() as f64;
        let mean = sample.iter().sum::<f64>() / n;
        let ss: f64 = sample.iter().map(|x| (x - mean).powi(2)).sum();
        Self::new(mean, (ss / (n - 1.0)).sqrt(), sample.len())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct TTest {
    pub t: f64,
    pub df: f64,
    pub p_two_sided: f64,
}

/// Welch's unequal-variance t-test. When both groups have zero variance the
/// result is p = 1 for equal means and p = 0 otherwise.
pub fn welch_t_from_summary(a: SummaryStats, b: SummaryStats) -> Result<TTest, EvalError> {
    a.validate()?;
    b.validate()?;
    let va = a.sd * a.sd / a.n as f64;
    let vb = b.sd * b.sd / b.n as f64;
    let diff = a.mean - b.mean;
    if va + vb == 0.0 {
        let df = (a.n + b.n - 2) as f64;
        return Ok(if diff == 0.0 {
            TTest { t: 0.0, df, p_two_sided: 1.0 }
        } else {
            TTest { t: diff.signum() * f64::INFINITY, df, p_two_sided: 0.0 }
        });
    }
    let t = diff / (va + vb).sqrt();
    let df = (va + vb).powi(2) / (va * va / (a.n - 1) as f64 + vb * vb / (b.n - 1) as f64);
    Ok(TTest { t, df, p_two_sided: student_t_two_sided(t, df) })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum UMethod {
    Exact,
    Normal,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct MannWhitney {
    /// U for the first sample.
    pub u: f64,
    pub p_two_sided: f64,
    pub method: UMethod,
}

/// Samples at or below this size per group use the exact path.
pub const EXACT_MAX_N: usize = 8;
/// Largest pooled size the exact path accepts when forced.
pub const EXACT_LIMIT: usize = 120;

/// Midranks of `values` doubled so they are integers, in input order.
pub fn doubled_midranks(values: &[f64]) -> Vec<u64> {
    let mut order: Vec<usize> = (0..values.len()).collect();
    order.sort_by(|&a, &b| values[a].total_cmp(&values[b]));
    let mut ranks = vec![0u64; values.len()];
    let mut i = 0;
    while i < order.len() {
        let mut j = i;
        while j + 1 < order.len() && values[order[j + 1]] == values[order[i]] {
            j += 1;
        }
        // positions i..=j hold ranks i+1..=j+1; doubled mean is i+j+2
        for &idx in &order[i..=j] {
            ranks[idx] = (i + j + 2) as u64;
        }
        i = j + 1;
    }
    ranks
}

/// Doubled U deviation `|2U - n_a n_b|` for a doubled rank sum of the first
/// group. Exact in integers.
pub fn doubled_u_deviation(doubled_rank_sum: u64, n_a: usize, n_b: usize) -> u64 {
    let two_u = doubled_rank_sum as i128 - (n_a * (n_a + 1)) as i128;
    (two_u - (n_a * n_b) as i128).unsigned_abs() as u64
}

/// Number of labelings whose deviation is at least `observed`, and the total
/// number of labelings, by dynamic programming over doubled rank sums.
fn exact_tail(ranks: &[u64], n_a: usize, observed: u64) -> (u128, u128) {
    let max_sum: u64 = ranks.iter().sum();
    let width = max_sum as usize + 1;
    // counts[k][s]: subsets of size k with doubled rank sum s
    let mut counts = vec![vec![0u128; width]; n_a + 1];
    counts[0][0] = 1;
    for &r in ranks {
        let r = r as usize;
        for k in (1..=n_a).rev() {
            let (lo, hi) = counts.split_at_mut(k);
            let prev = &lo[k - 1];
            let cur = &mut hi[0];
            for s in (r..width).rev() {
                cur[s] += prev[s - r];
            }
        }
    }
    let n_b = ranks.len() - n_a;
    let mut tail = 0u128;
    let mut total = 0u128;
    for (s, c) in counts[n_a].iter().enumerate() {
        if *c == 0 {
            continue;
        }
        total += c;
        if doubled_u_deviation(s as u64, n_a, n_b) >= observed {
            tail += c;
        }
    }
    (tail, total)
}

/// Rank-sum test. Exact enumeration of all labelings when both groups have
/// at most [`EXACT_MAX_N`] values (or `force_exact`); otherwise the normal
/// approximation with tie and continuity corrections.
pub fn mann_whitney_u(a: &[f64], b: &[f64], force_exact: bool) -> Result<MannWhitney, EvalError> {
    if a.is_empty() || b.is_empty() {
        return Err(EvalError::EmptySample);
    }
    if a.iter().chain(b).any(|v| !v.is_finite()) {
        return Err(EvalError::NotFinite);
    }
    let (n_a, n_b) = (a.len(), b.len());
    let pooled: Vec<f64> = a.iter().chain(b).copied().collect();
    let ranks = doubled_midranks(&pooled);
    let rank_sum: u64 = ranks[..n_a].iter().sum();
    let u = (rank_sum as f64 / 2.0) - (n_a * (n_a + 1)) as f64 / 2.0;
    let exact = force_exact || (n_a <= EXACT_MAX_N && n_b <= EXACT_MAX_N);
    if exact {
        if pooled.len() > EXACT_LIMIT {
            return Err(EvalError::ExactTooLarge(pooled.len()));
        }
        let observed = doubled_u_deviation(rank_sum, n_a, n_b);
        let (tail, total) = exact_tail(&ranks, n_a, observed);
        return Ok(MannWhitney {
            u,
            p_two_sided: tail as f64 / total as f64,
            method: UMethod::Exact,
        });
    }
    let n = pooled.len() as f64;
    let mut sorted = pooled.clone();
    sorted.sort_by(f64::total_cmp);
    let mut tie_term = 0.0;
    let mut i = 0;
    while i < sorted.len() {
        let mut j = i;
        while j + 1 < sorted.len() && sorted[j + 1] == sorted[i] {
            j += 1;
        }
        let t = (j - i + 1) as f64;
        tie_term += t * t * t - t;
        i = j + 1;
    }
    let nab = (n_a * n_b) as f64;
    let var = nab / 12.0 * ((n + 1.0) - tie_term / (n * (n - 1.0)));
    let p = if var <= 0.0 {
        1.0
    } else {
        let z = ((u - nab / 2.0).abs() - 0.5).max(0.0) / var.sqrt();
        normal_two_sided(z)
    };
    Ok(MannWhitney { u, p_two_sided: p, method: UMethod::Normal })
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Normality {
    pub normal: bool,
    pub skew: f64,
    pub excess_kurtosis: f64,
}

pub const NORMALITY_MIN_N: usize = 8;

/// Moment skewness and excess kurtosis; normal when both are below 1 in
/// magnitude.
pub fn normality_heuristic(sample: &[f64]) -> Result<Normality, EvalError> {
    if sample.len() < NORMALITY_MIN_N {
        return Err(EvalError::TooFewObservations { needed: NORMALITY_MIN_N, got: sample.len() });
    }
    if sample.iter().any(|v| !v.is_finite()) {
        return Err(EvalError::NotFinite);
    }
    let n = sample.len() as f64;
    let mean = sample.iter().sum::<f64>() / n;
    let moment = |p: i32| sample.iter().map(|x| (x - mean).powi(p)).sum::<f64>() / n;
    let m2 = moment(2);
    if m2 == 0.0 {
        return Err(EvalError::ZeroVariance);
    }
    let skew = moment(3) / m2.powf(1.5);
    let excess_kurtosis = moment(4) / (m2 * m2) - 3.0;
    Ok(Normality {
        normal: skew.abs() < 1.0 && excess_kurtosis.abs() < 1.0,
        skew,
        excess_kurtosis,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum TestChoice {
    Auto,
    Welch,
    MannWhitney,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "test", rename_all = "snake_case")]
pub enum Comparison {
    Welch(TTest),
    MannWhitney(MannWhitney),
}

impl Comparison {
    pub fn p_two_sided(&self) -> f64 {
        match self {
            Comparison::Welch(t) => t.p_two_sided,
            Comparison::MannWhitney(u) => u.p_two_sided,
        }
    }
}

/// Compare two raw samples. `Auto` uses Welch when both samples pass the
/// normality heuristic and Mann-Whitney otherwise, including when either is
/// too small or constant for the heuristic.
pub fn compare_samples(a: &[f64], b: &[f64], choice: TestChoice) -> Result<Comparison, EvalError> {
    let welch = || Ok(Comparison::Welch(welch_t_from_summary(SummaryStats::of_sample(a)?, SummaryStats::of_sample(b)?)?));
    match choice {
        TestChoice::Welch => welch(),
        TestChoice::MannWhitney => Ok(Comparison::MannWhitney(mann_whitney_u(a, b, false)?)),
        TestChoice::Auto => {
            let normal = |s: &[f64]| normality_heuristic(s).map(|n| n.normal).unwrap_or(false);
            if normal(a) && normal(b) {
                welch()
            } else {
                Ok(Comparison::MannWhitney(mann_whitney_u(a, b, false)?))
            }
        }
    }
}
