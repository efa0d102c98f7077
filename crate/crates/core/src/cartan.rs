//! The graph spinor `Ψ(Ā)` and clique extraction from Fock components.
//!
//! Each vertex maps to `z̄ᵢ = αᵢpᵢ + Σⱼ āᵢⱼαⱼqⱼ` built from the complement
//! adjacency `Ā`. With all `α = 1` the half-anticommutators reproduce `Ā`,
//! so a vertex set spans a totally null plane exactly when it is a clique of
//! the original graph. Summing the `z̄ᵢ` of a maximal clique gives a
//! saturated vector that uses `n` distinct Witt indices: `pᵢ` on the clique,
//! `qⱼ` everywhere else. That index pattern is a Fock basis element, and
//! `Ψ(Ā)` is the sum of those elements over all maximal cliques.

use num_bigint::BigInt;
use num_rational::BigRational;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::clifford::{apply_witt, cartan_kernel_with, FockIndex, Spinor, WittVector, MAX_N};
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::limits::Limits;
use crate::oracle;
use crate::par;

/// The `n` vectors `z̄ᵢ` for a graph's complement.
#[derive(Clone, Debug)]
pub struct ZbarSystem {
    pub n: usize,
    pub alphas: Vec<i64>,
    pub zbars: Vec<WittVector<i64>>,
    complement: Graph,
}

pub fn build_zbar_system(g: &Graph, alphas: Option<&[i64]>) -> Result<ZbarSystem> {
    let n = g.n();
    let alphas = match alphas {
        Some(a) if a.len() != n => return Err(Error::DimensionMismatch { expected: n, found: a.len() }),
        Some(a) if a.contains(&0) => return Err(Error::InvalidInput("α coefficients must be nonzero".into())),
        Some(a) => a.to_vec(),
        None => vec![1; n],
    };
    let complement = g.complement();
    let zbars: Vec<WittVector<i64>> = (0..n)
        .map(|i| {
            let mut v = WittVector::zero(n);
            v.alpha[i] = alphas[i];
            for j in complement.neighbors(i).iter() {
                v.beta[j] = alphas[j];
            }
            v
        })
        .collect();
    let system = ZbarSystem { n, alphas, zbars, complement };
    system.check_pairings()?;
    Ok(system)
}

impl ZbarSystem {
    /// `āᵢⱼ` of the complement graph.
    pub fn abar(&self, i: usize, j: usize) -> bool {
        self.complement.has_edge(i, j)
    }

    pub fn complement(&self) -> &Graph {
        &self.complement
    }

    /// `z̄ᵢ·z̄ⱼ = ½[z̄ᵢ, z̄ⱼ]₊`; equals `āᵢⱼ` when every `α = 1`.
    pub fn pairing(&self, i: usize, j: usize) -> BigRational {
        let anti = self.zbars[i].anticommutator(&self.zbars[j]).expect("same dimension");
        BigRational::new(BigInt::from(anti), BigInt::from(2))
    }

    pub fn pairing_matrix(&self) -> Vec<Vec<BigRational>> {
        (0..self.n).map(|i| (0..self.n).map(|j| self.pairing(i, j)).collect()).collect()
    }

    /// `[z̄ᵢ, z̄ⱼ]₊ = āᵢⱼ(αᵢ² + αⱼ²)`, which is `2āᵢⱼ` for unit `α`.
    fn check_pairings(&self) -> Result<()> {
        for i in 0..self.n {
            for j in 0..self.n {
                let anti = self.zbars[i].anticommutator(&self.zbars[j])?;
                let abar = i64::from(self.abar(i, j));
                let expected = abar * (self.alphas[i] * self.alphas[i] + self.alphas[j] * self.alphas[j]);
                if anti != expected {
                    return Err(Error::Contract(format!("pairing of z̄{} and z̄{} is {anti}", i + 1, j + 1)));
                }
            }
        }
        Ok(())
    }

    /// `Z̄ = Σ_{i∈x} z̄ᵢ`.
    pub fn sum(&self, x: &VertexSet) -> WittVector<i64> {
        x.iter().fold(WittVector::zero(self.n), |acc, i| acc.add(&self.zbars[i]))
    }

    pub fn select(&self, x: &VertexSet) -> Vec<WittVector<i64>> {
        x.iter().map(|i| self.zbars[i].clone()).collect()
    }
}

/// A maximal clique seen as a saturated null vector.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SaturatedVector {
    /// Indices carrying a `p` (the clique).
    pub clique: VertexSet,
    /// `Q_l`: indices carrying a `q`.
    pub q_indices: VertexSet,
    pub fock_index: FockIndex,
}

impl SaturatedVector {
    /// Reads the `p`/`q` pattern off `Z̄ = Σ_{i∈clique} z̄ᵢ` and checks that
    /// it uses each index exactly once.
    fn from_clique(system: &ZbarSystem, clique: VertexSet) -> Result<Self> {
        let n = system.n;
        let z = system.sum(&clique);
        if !z.is_null() {
            return Err(Error::Contract(format!("{clique} is not a clique: Z̄² ≠ 0")));
        }
        let p_indices = VertexSet::from_members(n, (0..n).filter(|&j| z.alpha[j] != 0));
        let q_indices = VertexSet::from_members(n, (0..n).filter(|&j| z.beta[j] != 0));
        if p_indices != clique || !p_indices.is_disjoint(&q_indices) || p_indices.len() + q_indices.len() != n {
            return Err(Error::Contract(format!("Z̄ for {clique} is not saturated")));
        }
        let mask = q_indices.to_mask().expect("n <= 62");
        Ok(Self { clique, q_indices, fock_index: FockIndex(mask) })
    }

    /// Adding any outside `z̄ᵥ` destroys nullness.
    pub fn is_saturated(&self, system: &ZbarSystem) -> bool {
        let z = system.sum(&self.clique);
        z.is_null() && self.q_indices.iter().all(|v| !z.add(&system.zbars[v]).is_null())
    }

    /// `dim(P ∩ M(ω_s)) = n − popcount(s)`.
    pub fn p_dimension(&self) -> usize {
        self.clique.len()
    }
}

/// Everything derived from a graph on the spinor side.
#[derive(Clone, Debug)]
pub struct GraphSpinor {
    pub zbars: ZbarSystem,
    /// Sorted by Fock index.
    pub saturated: Vec<SaturatedVector>,
    pub psi: Spinor<i64>,
}

impl GraphSpinor {
    pub fn new(g: &Graph, limits: &Limits) -> Result<Self> {
        Self::with_coefficients(g, None, limits)
    }

    /// `xis[l]` multiplies the component of the `l`-th saturated vector in
    /// Fock-index order; `None` means all ones.
    pub fn with_coefficients(g: &Graph, xis: Option<&[i64]>, limits: &Limits) -> Result<Self> {
        let n = g.n();
        if n > MAX_N {
            return Err(Error::ResourceLimit(format!("Fock indices need n <= {MAX_N}, got {n}")));
        }
        let zbars = build_zbar_system(g, None)?;
        let saturated = saturated_from(&zbars, g, limits)?;
        let xis: Vec<i64> = match xis {
            Some(x) if x.len() != saturated.len() => {
                return Err(Error::DimensionMismatch { expected: saturated.len(), found: x.len() })
            }
            Some(x) if x.contains(&0) => return Err(Error::InvalidInput("ξ coefficients must be nonzero".into())),
            Some(x) => x.to_vec(),
            None => vec![1; saturated.len()],
        };
        let psi = Spinor::from_terms(n, saturated.iter().zip(&xis).map(|(sv, &xi)| (sv.fock_index.0, xi)));
        Ok(Self { zbars, saturated, psi })
    }

    pub fn n(&self) -> usize {
        self.zbars.n
    }

    /// `Ψ(Ā)` with each component multiplied by `Δ(l, x) = Π_{j∈Q_l} δ(xⱼ, 0)`.
    pub fn gated(&self, x: &VertexSet) -> Spinor<i64> {
        let mut out = Spinor::zero(self.n());
        for sv in self.saturated.iter().filter(|sv| sv.q_indices.is_disjoint(x)) {
            out.add_term(sv.fock_index, self.psi.get(sv.fock_index.0));
        }
        out
    }

    pub fn annihilation(&self, x: &VertexSet) -> Result<Annihilation> {
        let gated = self.gated(x);
        if gated.is_zero() {
            return Ok(Annihilation::GatedEmpty);
        }
        let residual = apply_witt(&self.zbars.sum(x), &gated)?;
        Ok(if residual.is_zero() {
            Annihilation::Annihilated { components: gated.nnz() }
        } else {
            Annihilation::Residual { components: residual.nnz() }
        })
    }

    /// Largest `n − popcount(s)` over the components of `Ψ(Ā)`. Ties go to
    /// the largest Fock index, i.e. the clique with the smallest bitmask.
    pub fn max_clique(&self) -> (usize, VertexSet) {
        let n = self.n();
        let best = self.psi.iter().map(|(s, _)| s).max_by_key(|s| (n - s.popcount() as usize, s.0));
        match best {
            Some(s) => {
                let q = VertexSet::from_mask(n, s.0);
                (n - s.popcount() as usize, q.complement())
            }
            None => (0, VertexSet::empty(n)),
        }
    }
}

fn saturated_from(zbars: &ZbarSystem, g: &Graph, limits: &Limits) -> Result<Vec<SaturatedVector>> {
    let cliques = oracle::maximal_cliques_with(g, limits)?;
    let mut out = par::try_map(&cliques, |c| SaturatedVector::from_clique(zbars, c.clone()))?;
    out.sort_by_key(|sv| sv.fock_index);
    Ok(out)
}

/// Outcome of `(Σ_{i∈x} z̄ᵢ) · gated Ψ(Ā)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "outcome", rename_all = "snake_case")]
pub enum Annihilation {
    /// A nonzero gated spinor mapped to exactly zero.
    Annihilated { components: usize },
    /// No maximal clique contains `x`; the zero spinor is trivially killed.
    GatedEmpty,
    /// A nonzero residual survived.
    Residual { components: usize },
}

impl Annihilation {
    /// The Cartan equation holds (possibly vacuously).
    pub fn holds(self) -> bool {
        !matches!(self, Annihilation::Residual { .. })
    }

    /// The Cartan equation holds on a nonzero spinor.
    pub fn is_genuine(self) -> bool {
        matches!(self, Annihilation::Annihilated { .. })
    }
}

pub fn saturated_vectors(g: &Graph) -> Result<Vec<SaturatedVector>> {
    Ok(GraphSpinor::new(g, &Limits::default())?.saturated)
}

pub fn psi_of_graph(g: &Graph, xis: Option<&[i64]>) -> Result<Spinor<i64>> {
    Ok(GraphSpinor::with_coefficients(g, xis, &Limits::default())?.psi)
}

/// `Ψ(Ā)` with seeded random nonzero `ξ_l ∈ ±[1, 9]`.
pub fn psi_of_graph_seeded(g: &Graph, seed: u64) -> Result<Spinor<i64>> {
    let count = saturated_vectors(g)?.len();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let xis: Vec<i64> = (0..count)
        .map(|_| {
            let m = rng.random_range(1..=9i64);
            if rng.random_bool(0.5) { m } else { -m }
        })
        .collect();
    psi_of_graph(g, Some(&xis))
}

pub fn gated_psi(g: &Graph, x: &VertexSet) -> Result<Spinor<i64>> {
    Ok(GraphSpinor::new(g, &Limits::default())?.gated(x))
}

pub fn annihilation_check(g: &Graph, x: &VertexSet) -> Result<Annihilation> {
    GraphSpinor::new(g, &Limits::default())?.annihilation(x)
}

/// Dimension of the common Cartan kernel of `{z̄ᵢ : i ∈ x}`; positive
/// exactly when `x` is a clique.
pub fn clique_spinor_correspondence(g: &Graph, x: &VertexSet) -> Result<usize> {
    clique_spinor_correspondence_with(g, x, &Limits::default())
}

pub fn clique_spinor_correspondence_with(g: &Graph, x: &VertexSet, limits: &Limits) -> Result<usize> {
    let system = build_zbar_system(g, None)?;
    Ok(cartan_kernel_with(g.n(), &system.select(x), limits)?.dimension)
}

pub fn spinorial_max_clique(g: &Graph) -> Result<(usize, VertexSet)> {
    spinorial_max_clique_with(g, &Limits::default())
}

pub fn spinorial_max_clique_with(g: &Graph, limits: &Limits) -> Result<(usize, VertexSet)> {
    Ok(GraphSpinor::new(g, limits)?.max_clique())
}

/// Largest `x ∈ {0,1}ⁿ` with `Z̄² = (Σ_{i∈x} z̄ᵢ)² = 0`, searched by
/// decreasing size. Ties go to the first set in lexicographic mask order.
pub fn solve_binary_form(g: &Graph) -> Result<(usize, VertexSet)> {
    solve_binary_form_with(g, &Limits::default())
}

pub fn solve_binary_form_with(g: &Graph, limits: &Limits) -> Result<(usize, VertexSet)> {
    let n = g.n();
    if n > limits.max_exhaustive_n || n > 63 {
        return Err(Error::ResourceLimit(format!(
            "binary search over 2^n selections needs n <= {}, got {n}",
            limits.max_exhaustive_n.min(63)
        )));
    }
    let system = build_zbar_system(g, None)?;
    for size in (1..=n).rev() {
        let mut mask: u64 = (1u64 << size) - 1;
        let end = 1u64 << n;
        while mask < end {
            let x = VertexSet::from_mask(n, mask);
            if system.sum(&x).is_null() {
                return Ok((size, x));
            }
            // Gosper: next mask with the same popcount.
            let c = mask & mask.wrapping_neg();
            let r = mask + c;
            mask = (((r ^ mask) >> 2) / c) | r;
        }
    }
    Ok((0, VertexSet::empty(n)))
}
