//! Closed-form cost evaluation: exact iteration and step counts for the
//! sequential sort, domain-growth regime classification, the
//! range-probability trade-off, and the hypercube-style parallel
//! performance model (time, processor-time product, speedup, efficiency).
//!
//! All functions are pure. Counts are `u128` so domain sizes up to 10^22
//! stay exact; the parallel model itself is real-valued (no integer
//! truncation) and all logarithms are base 2.

use serde::Serialize;

use crate::error::ModelError;

/// `k <= linear_factor * n` classifies as linear,
/// `k <= linear_factor * n * log2(n)` as linearithmic.
pub const DEFAULT_LINEAR_FACTOR: f64 = 8.0;
/// Largest growth exponent still considered worth running.
pub const DEFAULT_MAX_EXPONENT: f64 = 1.7;
/// Exponent for the parallelizability point check `2p log2 p < k^a`.
pub const DEFAULT_PARALLEL_EXPONENT: f64 = 1.0;

/// Exact sequential cost: `iterations = n + k`, `steps = 2n + k`, fixed for
/// every input of the same size and domain.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct SequentialCost {
    pub n: u128,
    pub k: u128,
    pub iterations: u128,
    pub steps: u128,
}

pub fn sequential_cost(n: u128, k: u128) -> SequentialCost {
    SequentialCost {
        n,
        k,
        iterations: n + k,
        steps: 2 * n + k,
    }
}

/// Growth exponent `a = ln k / ln n`, defined for `n >= 2`, `k >= n`.
pub fn exponent(n: u128, k: u128) -> Result<f64, ModelError> {
    if n < 2 || k < n {
        return Err(ModelError::UndefinedExponent { n, k });
    }
    Ok((k as f64).ln() / (n as f64).ln())
}

/// Probability `n / k` that a uniformly chosen domain value is present.
pub fn hit_probability(n: u128, k: u128) -> Result<f64, ModelError> {
    if n < 1 || k < n {
        return Err(ModelError::InvalidRatio { n, k });
    }
    Ok(n as f64 / k as f64)
}

/// The trade-off invariant `P * n^(a-1)` for a domain family `k = c * n^a`,
/// which collapses to `1/c` for every member of the family.
///
/// `k` is real-valued here: the family relation rarely lands on an integer,
/// and the invariant only holds exactly for the analytic value.
pub fn tradeoff_constant(n: u128, k: f64, a: f64) -> Result<f64, ModelError> {
    if n < 2 || !k.is_finite() || k <= 0.0 {
        return Err(ModelError::UndefinedExponent { n, k: k as u128 });
    }
    let n = n as f64;
    Ok(n / k * n.powf(a - 1.0))
}

/// How the domain size grows relative to the input size.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum Regime {
    /// `k = O(n)`: the sort runs in linear time.
    Linear,
    /// `k = O(n log n)`: on par with comparison sorts.
    Linearithmic,
    /// `k ~ n^a` with `a` below the acceptable exponent.
    Polynomial,
    /// Domain growth too steep for the sort to pay off.
    Unfavorable,
}

/// Thresholds for [`classify_regime_with`].
#[derive(Debug, Clone, Copy)]
pub struct RegimeThresholds {
    pub linear_factor: f64,
    pub max_exponent: f64,
}

impl Default for RegimeThresholds {
    fn default() -> Self {
        RegimeThresholds {
            linear_factor: DEFAULT_LINEAR_FACTOR,
            max_exponent: DEFAULT_MAX_EXPONENT,
        }
    }
}

/// Suitability report for a problem size `(n, k)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct RegimeReport {
    pub n: u128,
    pub k: u128,
    pub exponent_a: f64,
    pub hit_probability: f64,
    pub regime: Regime,
}

pub fn classify_regime(n: u128, k: u128) -> Result<RegimeReport, ModelError> {
    classify_regime_with(n, k, &RegimeThresholds::default())
}

pub fn classify_regime_with(
    n: u128,
    k: u128,
    thresholds: &RegimeThresholds,
) -> Result<RegimeReport, ModelError> {
    let exponent_a = exponent(n, k)?;
    let hit_probability = hit_probability(n, k)?;
    let (nf, kf) = (n as f64, k as f64);
    let regime = if kf <= thresholds.linear_factor * nf {
        Regime::Linear
    } else if kf <= thresholds.linear_factor * nf * nf.log2() {
        Regime::Linearithmic
    } else if exponent_a < thresholds.max_exponent {
        Regime::Polynomial
    } else {
        Regime::Unfavorable
    };
    Ok(RegimeReport {
        n,
        k,
        exponent_a,
        hit_probability,
        regime,
    })
}

/// Analytical performance of the parallel sort on `p` workers.
///
/// `time = n/p + 2 log2 p + k/p`, `processor_time = n + 2p log2 p + k`,
/// `speedup = p (n+k) / (n + k + 2p log2 p)`, `efficiency = speedup / p`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ParallelEstimate {
    pub n: u128,
    pub k: u128,
    pub p: u64,
    pub time: f64,
    pub processor_time: f64,
    pub speedup: f64,
    pub efficiency: f64,
}

pub fn parallel_estimate(n: u128, k: u128, p: u64) -> Result<ParallelEstimate, ModelError> {
    if p == 0 || !p.is_power_of_two() {
        return Err(ModelError::NonPowerOfTwoWorkers { workers: p });
    }
    if n < 1 || k < 1 {
        return Err(ModelError::InvalidRatio { n, k });
    }
    let (nf, kf, pf) = (n as f64, k as f64, p as f64);
    let log_p = p.trailing_zeros() as f64;
    let work = nf + kf;
    let overhead = 2.0 * pf * log_p;
    let speedup = pf * work / (work + overhead);
    Ok(ParallelEstimate {
        n,
        k,
        p,
        time: nf / pf + 2.0 * log_p + kf / pf,
        processor_time: work + overhead,
        speedup,
        efficiency: speedup / pf,
    })
}

/// Point check that the combine overhead stays below the emit work:
/// `2p log2 p < k^a`. Returns the verdict and the ratio `2p log2 p / k`
/// as the margin.
pub fn parallelizable_check(n: u128, k: u128, p: u64) -> Result<(bool, f64), ModelError> {
    parallelizable_check_with(n, k, p, DEFAULT_PARALLEL_EXPONENT)
}

pub fn parallelizable_check_with(
    n: u128,
    k: u128,
    p: u64,
    a: f64,
) -> Result<(bool, f64), ModelError> {
    // Same preconditions as the estimate; n does not enter the inequality.
    parallel_estimate(n, k, p)?;
    let overhead = 2.0 * p as f64 * p.trailing_zeros() as f64;
    let kf = k as f64;
    Ok((overhead < kf.powf(a), overhead / kf))
}

/// One line of a speedup/efficiency table; invalid rows keep their error
/// instead of aborting the rest.
#[derive(Debug, Clone, Serialize)]
pub struct SpeedupEntry {
    pub n: u128,
    pub k: u128,
    pub p: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub speedup: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub efficiency: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
}

#[derive(Debug, Clone, Serialize)]
pub struct SpeedupTable {
    pub rows: Vec<SpeedupEntry>,
}

pub fn speedup_table(rows: &[(u128, u128, u64)]) -> SpeedupTable {
    let rows = rows
        .iter()
        .map(|&(n, k, p)| match parallel_estimate(n, k, p) {
            Ok(estimate) => SpeedupEntry {
                n,
                k,
                p,
                speedup: Some(estimate.speedup),
                efficiency: Some(estimate.efficiency),
                error: None,
            },
            Err(err) => SpeedupEntry {
                n,
                k,
                p,
                speedup: None,
                efficiency: None,
                error: Some(err.to_string()),
            },
        })
        .collect();
    SpeedupTable { rows }
}

impl SpeedupTable {
    /// Aligned plain-text rendering, one row per entry.
    pub fn render_text(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!(
            "{:>12} {:>14} {:>6} {:>10} {:>10}\n",
            "n", "k", "p", "speedup", "efficiency"
        ));
        for row in &self.rows {
            match (&row.speedup, &row.efficiency, &row.error) {
                (Some(s), Some(e), _) => out.push_str(&format!(
                    "{:>12} {:>14} {:>6} {:>10.4} {:>10.4}\n",
                    row.n, row.k, row.p, s, e
                )),
                (_, _, Some(err)) => out.push_str(&format!(
                    "{:>12} {:>14} {:>6} error: {}\n",
                    row.n, row.k, row.p, err
                )),
                _ => unreachable!("entry has either values or an error"),
            }
        }
        out
    }
}
