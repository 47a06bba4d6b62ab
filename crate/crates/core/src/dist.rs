//! Degree-distribution families and least-squares fitting against a reference
//! degree histogram.
//!
//! Three families are supported:
//!
//! | family    | unnormalized pmf                 |
//! |-----------|----------------------------------|
//! | lognormal | `exp(-(log2(x) / alpha)^beta)`   |
//! | powerlaw  | `beta * x^-alpha`                |
//! | zipf      | `x^-alpha / zeta(alpha)`         |
//!
//! Fitting minimizes the Euclidean distance between the normalized model
//! frequencies over degrees `1..=dmax` and the normalized reference counts.
//! The reported `mse` is the squared residual divided by `dmax`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Family {
    Lognormal,
    Powerlaw,
    Zipf,
}

impl Family {
    pub const ALL: [Family; 3] = [Family::Lognormal, Family::Powerlaw, Family::Zipf];

    pub fn name(self) -> &'static str {
        match self {
            Family::Lognormal => "lognormal",
            Family::Powerlaw => "powerlaw",
            Family::Zipf => "zipf",
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "lognormal" => Ok(Family::Lognormal),
            "powerlaw" => Ok(Family::Powerlaw),
            "zipf" => Ok(Family::Zipf),
            other => Err(Error::InvalidDistribution(format!("unknown family `{other}`"))),
        }
    }
}

/// A distribution family with its parameters.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct DistributionSpec {
    pub family: Family,
    pub alpha: f64,
    pub beta: Option<f64>,
}

impl DistributionSpec {
    pub fn new(family: Family, alpha: f64, beta: Option<f64>) -> Result<Self> {
        let spec = Self { family, alpha, beta };
        spec.validate()?;
        Ok(spec)
    }

    pub fn lognormal(alpha: f64, beta: f64) -> Result<Self> {
        Self::new(Family::Lognormal, alpha, Some(beta))
    }

    pub fn powerlaw(alpha: f64, beta: f64) -> Result<Self> {
        Self::new(Family::Powerlaw, alpha, Some(beta))
    }

    pub fn zipf(alpha: f64) -> Result<Self> {
        Self::new(Family::Zipf, alpha, None)
    }

    pub fn validate(&self) -> Result<()> {
        let bad = |msg: String| Err(Error::InvalidDistribution(msg));
        if !(self.alpha.is_finite() && self.alpha > 0.0) {
            return bad(format!("alpha must be positive, got {}", self.alpha));
        }
        match self.family {
            Family::Lognormal | Family::Powerlaw => match self.beta {
                Some(b) if b.is_finite() && b > 0.0 => Ok(()),
                Some(b) => bad(format!("beta must be positive, got {b}")),
                None => bad(format!("{} requires beta", self.family)),
            },
            Family::Zipf if self.alpha <= 1.0 => {
                bad(format!("zipf requires alpha > 1, got {}", self.alpha))
            }
            Family::Zipf => Ok(()),
        }
    }
}

/// Reference degree histogram: `counts[d - 1]` nodes have degree `d`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DegreeCountVector {
    counts: Vec<u64>,
}

impl DegreeCountVector {
    /// Trailing zero counts are trimmed so the last entry is the maximum degree.
    pub fn new(mut counts: Vec<u64>) -> Result<Self> {
        while counts.last() == Some(&0) {
            counts.pop();
        }
        if counts.is_empty() {
            return Err(Error::InvalidCounts("no node has a positive degree".into()));
        }
        Ok(Self { counts })
    }

    pub fn counts(&self) -> &[u64] {
        &self.counts
    }

    pub fn max_degree(&self) -> usize {
        self.counts.len()
    }

    pub fn node_count(&self) -> u64 {
        self.counts.iter().sum()
    }

    /// Sum of degrees, i.e. twice the edge count of any realization.
    pub fn degree_sum(&self) -> u64 {
        self.counts
            .iter()
            .enumerate()
            .map(|(i, &c)| (i as u64 + 1) * c)
            .sum()
    }

    pub fn frequencies(&self) -> FrequencyVector {
        let n = self.node_count() as f64;
        FrequencyVector(self.counts.iter().map(|&c| c as f64 / n).collect())
    }
}

/// Probabilities over degrees `1..=len`, summing to one.
#[derive(Debug, Clone, PartialEq)]
pub struct FrequencyVector(Vec<f64>);

impl FrequencyVector {
    pub fn probs(&self) -> &[f64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

/// Riemann zeta for real `s > 1`: 1000 direct terms, then the Euler-Maclaurin
/// tail (integral, half-term and three Bernoulli corrections).
pub fn zeta(s: f64) -> Result<f64> {
    if !(s > 1.0) || !s.is_finite() {
        return Err(Error::InvalidDistribution(format!(
            "zeta needs a finite argument > 1, got {s}"
        )));
    }
    const N: u32 = 1000;
    let head: f64 = (1..N).rev().map(|k| f64::from(k).powf(-s)).sum();
    let n = f64::from(N);
    let n_s = n.powf(-s);
    let tail = n.powf(1.0 - s) / (s - 1.0) + 0.5 * n_s + s * n_s / n / 12.0
        - s * (s + 1.0) * (s + 2.0) * n_s / n.powi(3) / 720.0
        + s * (s + 1.0) * (s + 2.0) * (s + 3.0) * (s + 4.0) * n_s / n.powi(5) / 30240.0;
    Ok(head + tail)
}

/// Unnormalized pmf value at degree `d`.
pub fn pmf_value(spec: &DistributionSpec, d: usize) -> Result<f64> {
    spec.validate()?;
    if d == 0 {
        return Err(Error::InvalidDistribution("degree must be at least 1".into()));
    }
    Ok(raw_pmf(spec.family, spec.alpha, spec.beta.unwrap_or(1.0), d) * zipf_scale(spec)?)
}

fn zipf_scale(spec: &DistributionSpec) -> Result<f64> {
    match spec.family {
        Family::Zipf => Ok(1.0 / zeta(spec.alpha)?),
        _ => Ok(1.0),
    }
}

#[inline]
fn raw_pmf(family: Family, alpha: f64, beta: f64, d: usize) -> f64 {
    let x = d as f64;
    match family {
        Family::Lognormal => (-(x.log2() / alpha).powf(beta)).exp(),
        Family::Powerlaw => beta * x.powf(-alpha),
        Family::Zipf => x.powf(-alpha),
    }
}

/// Model frequencies over `1..=d_max`, renormalized over that range.
pub fn frequency_of(spec: &DistributionSpec, d_max: usize) -> Result<FrequencyVector> {
    spec.validate()?;
    if d_max == 0 {
        return Err(Error::InvalidDistribution("d_max must be at least 1".into()));
    }
    // zeta(alpha) cancels under normalization.
    let values: Vec<f64> = (1..=d_max)
        .map(|d| raw_pmf(spec.family, spec.alpha, spec.beta.unwrap_or(1.0), d))
        .collect();
    normalize(values).ok_or_else(|| {
        Error::InvalidDistribution(format!("pmf vanishes on 1..={d_max} for {spec:?}"))
    })
}

fn normalize(mut values: Vec<f64>) -> Option<FrequencyVector> {
    let total: f64 = values.iter().sum();
    if !(total > 0.0) || !total.is_finite() {
        return None;
    }
    for v in &mut values {
        *v /= total;
    }
    Some(FrequencyVector(values))
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct FitResult {
    pub spec: DistributionSpec,
    /// Squared residual norm divided by the maximum degree.
    pub mse: f64,
}

impl FitResult {
    /// Squared residual norm, the quantity actually minimized.
    pub fn objective(&self, reference: &DegreeCountVector) -> f64 {
        self.mse * reference.max_degree() as f64
    }
}

/// Squared distance between model and reference frequency vectors.
/// Invalid parameters score `+inf`.
pub fn objective(spec: &DistributionSpec, reference: &DegreeCountVector) -> f64 {
    let target = reference.frequencies();
    match frequency_of(spec, reference.max_degree()) {
        Ok(model) => model
            .probs()
            .iter()
            .zip(target.probs())
            .map(|(a, b)| (a - b) * (a - b))
            .sum(),
        Err(_) => f64::INFINITY,
    }
}

const GRID_POINTS: usize = 25;
const GRID_LO: f64 = 0.1;
const GRID_HI: f64 = 10.0;
const REFINE_STARTS: usize = 5;

fn log_grid(lo: f64, hi: f64, points: usize) -> Vec<f64> {
    let (a, b) = (lo.ln(), hi.ln());
    (0..points)
        .map(|i| (a + (b - a) * i as f64 / (points - 1) as f64).exp())
        .collect()
}

/// Unconstrained coordinates for each family. Lognormal optimizes
/// `(ln alpha, ln beta)`; powerlaw `ln alpha`; zipf `ln(alpha - 1)`.
/// The powerlaw scale does not affect normalized frequencies, so it is not a
/// free coordinate.
fn decode(family: Family, x: &[f64], reference: &DegreeCountVector) -> DistributionSpec {
    match family {
        Family::Lognormal => DistributionSpec {
            family,
            alpha: x[0].exp(),
            beta: Some(x[1].exp()),
        },
        Family::Powerlaw => {
            let alpha = x[0].exp();
            DistributionSpec {
                family,
                alpha,
                beta: Some(powerlaw_scale(alpha, reference.max_degree())),
            }
        }
        Family::Zipf => DistributionSpec {
            family,
            alpha: 1.0 + x[0].exp(),
            beta: None,
        },
    }
}

/// Scale that turns `x^-alpha` into a pmf on `1..=d_max`.
pub fn powerlaw_scale(alpha: f64, d_max: usize) -> f64 {
    1.0 / (1..=d_max).map(|d| (d as f64).powf(-alpha)).sum::<f64>()
}

fn grid_starts(family: Family) -> Vec<Vec<f64>> {
    let axis = log_grid(GRID_LO, GRID_HI, GRID_POINTS);
    match family {
        Family::Lognormal => axis
            .iter()
            .flat_map(|&a| axis.iter().map(move |&b| vec![a.ln(), b.ln()]))
            .collect(),
        Family::Powerlaw => axis.iter().map(|&a| vec![a.ln()]).collect(),
        Family::Zipf => log_grid(0.01, GRID_HI - 1.0, GRID_POINTS)
            .into_iter()
            .map(|a| vec![a.ln()])
            .collect(),
    }
}

/// Fits `family` to `reference`: a log-spaced grid over the parameter box
/// followed by Nelder-Mead refinement from the best grid points.
pub fn fit(reference: &DegreeCountVector, family: Family) -> Result<FitResult> {
    let fail = |reason: &str| Error::FitFailed {
        family: family.to_string(),
        reason: reason.to_string(),
    };
    if reference.max_degree() < 2 {
        return Err(fail("reference has a single degree; every model matches it exactly"));
    }
    let score = |x: &[f64]| objective(&decode(family, x, reference), reference);

    let mut scored: Vec<(f64, Vec<f64>)> = grid_starts(family)
        .into_iter()
        .map(|x| (score(&x), x))
        .filter(|(f, _)| f.is_finite())
        .collect();
    if scored.is_empty() {
        return Err(fail("objective is undefined on the whole grid"));
    }
    scored.sort_by(|a, b| a.0.total_cmp(&b.0));
    let (lo, hi) = (scored[0].0, scored[scored.len() - 1].0);
    if hi - lo <= f64::EPSILON * hi.max(1e-300) {
        return Err(fail("objective is flat over the grid"));
    }

    let mut best: Option<(f64, Vec<f64>)> = None;
    for (f0, x0) in scored.iter().take(REFINE_STARTS) {
        let (x, f) = nelder_mead(&score, x0, 0.1, 1e-10, 4000);
        let (x, f) = if f <= *f0 { (x, f) } else { (x0.clone(), *f0) };
        if best.as_ref().is_none_or(|(bf, _)| f < *bf) {
            best = Some((f, x));
        }
    }
    let (f, x) = best.expect("at least one start");
    let spec = decode(family, &x, reference);
    spec.validate()?;
    Ok(FitResult {
        spec,
        mse: f / reference.max_degree() as f64,
    })
}

/// Fits every family, in [`Family::ALL`] order.
pub fn fit_all(reference: &DegreeCountVector) -> Result<Vec<FitResult>> {
    Family::ALL.iter().map(|&f| fit(reference, f)).collect()
}

/// Derivative-free simplex minimization. Stops when the spread of function
/// values over the simplex falls below `ftol` relative to the best value and
/// the simplex has collapsed, or after `max_iter` iterations.
fn nelder_mead<F>(f: &F, start: &[f64], step: f64, ftol: f64, max_iter: usize) -> (Vec<f64>, f64)
where
    F: Fn(&[f64]) -> f64,
{
    let dim = start.len();
    let mut simplex: Vec<(Vec<f64>, f64)> = Vec::with_capacity(dim + 1);
    simplex.push((start.to_vec(), f(start)));
    for i in 0..dim {
        let mut x = start.to_vec();
        x[i] += step;
        let fx = f(&x);
        simplex.push((x, fx));
    }

    let point = |c: &[f64], w: &[f64], t: f64| -> Vec<f64> {
        c.iter().zip(w).map(|(a, b)| a + t * (b - a)).collect()
    };

    for _ in 0..max_iter {
        simplex.sort_by(|a, b| a.1.total_cmp(&b.1));
        let (f_best, f_worst) = (simplex[0].1, simplex[dim].1);
        let size = simplex[1..]
            .iter()
            .flat_map(|(x, _)| x.iter().zip(&simplex[0].0).map(|(a, b)| (a - b).abs()))
            .fold(0.0f64, f64::max);
        if (f_worst - f_best).abs() <= ftol * f_best.abs() + 1e-300 && size < 1e-9 {
            break;
        }

        let mut centroid = vec![0.0; dim];
        for (x, _) in &simplex[..dim] {
            for (c, xi) in centroid.iter_mut().zip(x) {
                *c += xi / dim as f64;
            }
        }
        let worst = simplex[dim].0.clone();

        let reflected = point(&centroid, &worst, -1.0);
        let f_r = f(&reflected);
        if f_r < simplex[0].1 {
            let expanded = point(&centroid, &worst, -2.0);
            let f_e = f(&expanded);
            simplex[dim] = if f_e < f_r { (expanded, f_e) } else { (reflected, f_r) };
            continue;
        }
        if f_r < simplex[dim - 1].1 {
            simplex[dim] = (reflected, f_r);
            continue;
        }
        let (contracted, f_c) = if f_r < simplex[dim].1 {
            let c = point(&centroid, &reflected, 0.5);
            let fc = f(&c);
            (c, fc)
        } else {
            let c = point(&centroid, &worst, 0.5);
            let fc = f(&c);
            (c, fc)
        };
        if f_c < simplex[dim].1.min(f_r) {
            simplex[dim] = (contracted, f_c);
            continue;
        }
        // shrink toward the best vertex
        let best = simplex[0].0.clone();
        for (x, fx) in simplex.iter_mut().skip(1) {
            *x = point(&best, x, 0.5);
            *fx = f(x);
        }
    }
    simplex.sort_by(|a, b| a.1.total_cmp(&b.1));
    let (x, fx) = simplex.swap_remove(0);
    (x, fx)
}
