//! The clique number as the maximum of a quadratic form on the simplex.
//!
//! For a maximum clique of size `k`, `max xᵀAx = 1 − 1/k` over the simplex,
//! and with the regularized matrix `A + ½𝟙` the maximum is `1 − 1/(2k)`,
//! attained only at characteristic vectors of maximum cliques. The ascent
//! here is replicator dynamics `xᵢ ← xᵢ(Mx)ᵢ / xᵀMx`, which stays on the
//! simplex and never decreases the objective for symmetric nonnegative `M`.

use num_bigint::BigInt;
use num_rational::BigRational;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, Exp1};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::par;

/// Sum-to-one tolerance for simplex membership.
pub const SIMPLEX_TOL: f64 = 1e-12;
const VALUE_TOL: f64 = 1e-12;
const MAX_ITERATIONS: usize = 100_000;
const ROUNDING_GUARD: f64 = 0.45;
pub const DEFAULT_STARTS: usize = 32;

/// A point of `Kₙ = {x ≥ 0, Σxᵢ = 1}`.
#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(transparent)]
pub struct SimplexVector(Vec<f64>);

impl SimplexVector {
    pub fn new(x: Vec<f64>) -> Result<Self> {
        if x.iter().any(|v| !v.is_finite() || *v < 0.0) {
            return Err(Error::Contract("simplex vector has a negative or non-finite entry".into()));
        }
        let sum: f64 = x.iter().sum();
        if (sum - 1.0).abs() > SIMPLEX_TOL {
            return Err(Error::Contract(format!("simplex vector sums to {sum}")));
        }
        Ok(Self(x))
    }

    pub fn barycenter(n: usize) -> Self {
        Self(vec![1.0 / n as f64; n])
    }

    /// Indicator of vertex `i`.
    pub fn vertex(n: usize, i: usize) -> Self {
        let mut x = vec![0.0; n];
        x[i] = 1.0;
        Self(x)
    }

    /// `1/|s|` on the members of a nonempty set.
    pub fn characteristic(s: &VertexSet) -> Result<Self> {
        let k = s.len();
        if k == 0 {
            return Err(Error::Contract("characteristic vector of the empty set".into()));
        }
        let mut x = vec![0.0; s.universe()];
        for v in s.iter() {
            x[v] = 1.0 / k as f64;
        }
        Ok(Self(x))
    }

    /// Uniform on the simplex (normalized exponentials).
    pub fn random<R: rand::Rng + ?Sized>(n: usize, rng: &mut R) -> Self {
        let e: Vec<f64> = (0..n).map(|_| Exp1.sample(rng)).collect();
        let sum: f64 = e.iter().sum();
        Self(e.into_iter().map(|v| v / sum).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn as_slice(&self) -> &[f64] {
        &self.0
    }
}

/// `xᵀAx` at the characteristic vector of a clique, in exact arithmetic.
pub fn ms_value_of_clique(g: &Graph, c: &VertexSet) -> Result<BigRational> {
    if !g.is_clique(c) {
        return Err(Error::Contract(format!("{c} is not a clique")));
    }
    let k = c.len();
    if k == 0 {
        return Err(Error::Contract("the empty set has no characteristic vector".into()));
    }
    let members: Vec<usize> = c.iter().collect();
    let adjacent_pairs: usize =
        members.iter().map(|&i| members.iter().filter(|&&j| g.has_edge(i, j)).count()).sum();
    Ok(BigRational::new(BigInt::from(adjacent_pairs), BigInt::from(k * k)))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Objective {
    /// `M = A`; maximizers need not be characteristic vectors.
    Plain,
    /// `M = A + ½𝟙`; maximizers are exactly maximum-clique characteristic vectors.
    Regularized,
}

#[derive(Clone, Debug, Serialize)]
pub struct MsResult {
    pub objective: Objective,
    pub value: f64,
    pub k_estimate: usize,
    pub x_star: SimplexVector,
    pub starts: usize,
    /// Start index that produced the best value.
    pub best_start: usize,
    pub iterations: usize,
    pub converged: bool,
    /// `{i : x*ᵢ > 1/(2n)}`, 1-based when serialized.
    #[serde(serialize_with = "serialize_labels")]
    pub support: VertexSet,
    pub support_is_clique: bool,
    /// The support is a clique of exactly `k_estimate` vertices, so
    /// `k_estimate` is a certified lower bound on the clique number.
    pub verified: bool,
}

fn serialize_labels<S: serde::Serializer>(s: &VertexSet, ser: S) -> std::result::Result<S::Ok, S::Error> {
    ser.collect_seq(s.labels())
}

struct Ascent {
    value: f64,
    x: Vec<f64>,
    iterations: usize,
    converged: bool,
}

/// Multi-start replicator ascent. Start 0 is the barycenter; the rest are
/// uniform random points drawn from per-start ChaCha streams of `seed`.
pub fn maximize_ms(g: &Graph, objective: Objective, starts: usize, seed: u64) -> Result<MsResult> {
    if starts == 0 {
        return Err(Error::InvalidInput("at least one start is required".into()));
    }
    let n = g.n();
    if n == 0 {
        return Err(Error::InvalidInput("graph has no vertices".into()));
    }
    let diag = match objective {
        Objective::Plain => 0.0,
        Objective::Regularized => 0.5,
    };
    let neighbours: Vec<Vec<usize>> = (0..n).map(|i| g.neighbors(i).iter().collect()).collect();
    let runs = par::map_range(starts, |idx| {
        let x0 = if idx == 0 {
            SimplexVector::barycenter(n)
        } else {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            rng.set_stream(idx as u64);
            SimplexVector::random(n, &mut rng)
        };
        ascend(&neighbours, diag, x0.0)
    });
    let mut best: Option<(usize, Ascent)> = None;
    for (idx, run) in runs.into_iter().enumerate() {
        let run = run?;
        if best.as_ref().is_none_or(|(_, b)| run.value > b.value) {
            best = Some((idx, run));
        }
    }
    let (best_start, run) = best.expect("starts >= 1");

    let raw = match objective {
        Objective::Plain => 1.0 / (1.0 - run.value),
        Objective::Regularized => 1.0 / (2.0 * (1.0 - run.value)),
    };
    let k_estimate = raw.round().max(1.0) as usize;
    let rounded_cleanly = (raw - raw.round()).abs() < ROUNDING_GUARD;
    let threshold = 1.0 / (2.0 * n as f64);
    let support = VertexSet::from_members(n, (0..n).filter(|&i| run.x[i] > threshold));
    let support_is_clique = g.is_clique(&support);
    let verified = support_is_clique && support.len() == k_estimate;
    Ok(MsResult {
        objective,
        value: run.value,
        k_estimate,
        x_star: SimplexVector(run.x),
        starts,
        best_start,
        iterations: run.iterations,
        converged: run.converged && rounded_cleanly,
        support,
        support_is_clique,
        verified,
    })
}

fn quadratic(neighbours: &[Vec<usize>], diag: f64, x: &[f64], mx: &mut [f64]) -> f64 {
    for (i, nb) in neighbours.iter().enumerate() {
        mx[i] = nb.iter().map(|&j| x[j]).sum::<f64>() + diag * x[i];
    }
    x.iter().zip(mx.iter()).map(|(a, b)| a * b).sum()
}

fn ascend(neighbours: &[Vec<usize>], diag: f64, mut x: Vec<f64>) -> Result<Ascent> {
    let n = x.len();
    let mut mx = vec![0.0; n];
    let mut value = quadratic(neighbours, diag, &x, &mut mx);
    for it in 1..=MAX_ITERATIONS {
        if value == 0.0 {
            // M = A with no edge inside the support: every point is stationary.
            return Ok(Ascent { value, x, iterations: it - 1, converged: true });
        }
        for i in 0..n {
            x[i] *= mx[i] / value;
        }
        let sum: f64 = x.iter().sum();
        x.iter_mut().for_each(|v| *v /= sum);
        let next = quadratic(neighbours, diag, &x, &mut mx);
        if !next.is_finite() || x.iter().any(|v| !v.is_finite()) {
            return Err(Error::Numeric(format!("non-finite iterate at step {it}")));
        }
        if next < value - VALUE_TOL {
            return Err(Error::Numeric(format!("objective decreased from {value} to {next} at step {it}")));
        }
        let delta = (next - value).abs();
        value = next;
        if delta < VALUE_TOL {
            return Ok(Ascent { value, x, iterations: it, converged: true });
        }
    }
    Ok(Ascent { value, x, iterations: MAX_ITERATIONS, converged: false })
}
