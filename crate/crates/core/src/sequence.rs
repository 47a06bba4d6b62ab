//! Degree sequences: graphicality testing and sampling from a fitted
//! distribution.

use rand::distributions::{Distribution, WeightedIndex};
use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::dist::{frequency_of, DistributionSpec};
use crate::error::{Error, Result};
use crate::rng::{stream, Purpose};

/// Havel-Hakimi test: repeatedly remove the largest entry `v` and decrement
/// the next `v` largest entries. Succeeds when everything reaches zero.
pub fn is_graphical(degrees: &[usize]) -> bool {
    let mut s = degrees.to_vec();
    loop {
        s.retain(|&d| d > 0);
        if s.is_empty() {
            return true;
        }
        s.sort_unstable_by(|a, b| b.cmp(a));
        let v = s[0];
        let rest = &mut s[1..];
        if v > rest.len() {
            return false;
        }
        for d in &mut rest[..v] {
            // entries are positive after retain, so this never underflows
            *d -= 1;
        }
        s.remove(0);
    }
}

/// Per-node target degrees with an even sum that passes [`is_graphical`].
/// Every entry is at least one.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct DegreeSequence(Vec<usize>);

impl DegreeSequence {
    pub fn new(degrees: Vec<usize>) -> Result<Self> {
        if degrees.is_empty() {
            return Err(Error::InvalidSequence("empty sequence".into()));
        }
        if let Some(i) = degrees.iter().position(|&d| d == 0) {
            return Err(Error::InvalidSequence(format!("node {i} has degree 0")));
        }
        if degrees.iter().sum::<usize>() % 2 != 0 {
            return Err(Error::InvalidSequence("degree sum is odd".into()));
        }
        if !is_graphical(&degrees) {
            return Err(Error::InvalidSequence(format!(
                "{degrees:?} is not graphical"
            )));
        }
        Ok(Self(degrees))
    }

    pub fn degrees(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn edge_count(&self) -> usize {
        self.0.iter().sum::<usize>() / 2
    }

    pub fn max_degree(&self) -> usize {
        self.0.iter().copied().max().unwrap_or(0)
    }
}

impl TryFrom<Vec<usize>> for DegreeSequence {
    type Error = Error;

    fn try_from(v: Vec<usize>) -> Result<Self> {
        Self::new(v)
    }
}

impl From<DegreeSequence> for Vec<usize> {
    fn from(s: DegreeSequence) -> Self {
        s.0
    }
}

/// How to reach the target degree sum.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SumMode {
    /// Redraw the whole sequence until the sum is right.
    #[default]
    Reject,
    /// Nudge random entries by one until the sum is right, then test.
    Repair,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SequenceRequest {
    pub n: usize,
    pub m: usize,
    pub d_max: usize,
    pub spec: DistributionSpec,
    pub seed: u64,
    pub max_attempts: usize,
    pub mode: SumMode,
}

impl SequenceRequest {
    pub const DEFAULT_MAX_ATTEMPTS: usize = 100_000;

    pub fn new(n: usize, m: usize, d_max: usize, spec: DistributionSpec, seed: u64) -> Self {
        Self {
            n,
            m,
            d_max,
            spec,
            seed,
            max_attempts: Self::DEFAULT_MAX_ATTEMPTS,
            mode: SumMode::Reject,
        }
    }

    pub fn validate(&self) -> Result<()> {
        let bad = |msg: String| Err(Error::InvalidRequest(msg));
        if self.n < 2 {
            return bad(format!("n must be at least 2, got {}", self.n));
        }
        if self.d_max == 0 {
            return bad("d_max must be at least 1".into());
        }
        if self.m + 1 < self.n {
            return bad(format!(
                "m = {} is below n - 1 = {}; no connected graph exists",
                self.m,
                self.n - 1
            ));
        }
        if 2 * self.m > self.n * self.d_max {
            return bad(format!(
                "m = {} exceeds n * d_max / 2 = {}",
                self.m,
                self.n * self.d_max / 2
            ));
        }
        if self.max_attempts == 0 {
            return bad("max_attempts must be positive".into());
        }
        self.spec.validate()
    }
}

/// Draws `n` i.i.d. degrees from the model restricted to `1..=d_max` until the
/// sum is `2m` and the sequence is graphical.
pub fn sample_sequence(req: &SequenceRequest) -> Result<DegreeSequence> {
    req.validate()?;
    let freqs = frequency_of(&req.spec, req.d_max)?;
    let dist = WeightedIndex::new(freqs.probs())
        .map_err(|e| Error::InvalidDistribution(e.to_string()))?;
    let mut rng = stream(req.seed, Purpose::Sequence, 0);
    let target = 2 * req.m;

    let mut sum_misses = 0;
    let mut non_graphical = 0;
    let mut s = vec![0usize; req.n];
    for _ in 0..req.max_attempts {
        for d in s.iter_mut() {
            *d = dist.sample(&mut rng) + 1;
        }
        if req.mode == SumMode::Repair {
            repair_sum(&mut s, target, req.d_max, &mut rng);
        }
        if s.iter().sum::<usize>() != target {
            sum_misses += 1;
            continue;
        }
        if !is_graphical(&s) {
            non_graphical += 1;
            continue;
        }
        return DegreeSequence::new(s);
    }
    Err(Error::SamplingExhausted {
        attempts: req.max_attempts,
        sum_misses,
        non_graphical,
    })
}

/// Moves uniformly chosen entries one step toward the target sum, keeping
/// every entry in `1..=d_max`. The request bounds guarantee the target is
/// reachable.
fn repair_sum<R: Rng + ?Sized>(s: &mut [usize], target: usize, d_max: usize, rng: &mut R) {
    let mut sum: usize = s.iter().sum();
    while sum != target {
        let i = rng.gen_range(0..s.len());
        if sum < target && s[i] < d_max {
            s[i] += 1;
            sum += 1;
        } else if sum > target && s[i] > 1 {
            s[i] -= 1;
            sum -= 1;
        }
    }
}
