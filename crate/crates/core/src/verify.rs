//! Runs every cross-module invariant on a single graph.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::cartan::{self, GraphSpinor};
use crate::error::Result;
use crate::exact;
use crate::graph::{reconstruct_from_maximal_cliques, Graph, VertexSet};
use crate::limits::Limits;
use crate::matroot::{gram_quadratic, sqrt_root};
use crate::motzkin::{maximize_ms, Objective, SimplexVector, DEFAULT_STARTS};
use crate::oracle;

const MATRIX_TOL: f64 = 1e-9;
/// Largest `n` for which Cartan kernels of small vertex subsets are checked.
const KERNEL_CHECK_N: usize = 8;
const RANDOM_SIMPLEX_POINTS: usize = 16;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

#[derive(Clone, Debug, Serialize)]
pub struct Check {
    pub name: &'static str,
    pub status: Status,
    pub detail: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct VerifyReport {
    pub n: usize,
    pub edges: usize,
    pub passed: bool,
    pub checks: Vec<Check>,
}

struct Suite {
    checks: Vec<Check>,
}

impl Suite {
    fn record(&mut self, name: &'static str, ok: bool, detail: impl Into<String>) {
        let status = if ok { Status::Pass } else { Status::Fail };
        self.checks.push(Check { name, status, detail: detail.into() });
    }

    fn skip(&mut self, name: &'static str, detail: impl Into<String>) {
        self.checks.push(Check { name, status: Status::Skipped, detail: detail.into() });
    }

    fn run(&mut self, name: &'static str, f: impl FnOnce() -> Result<(bool, String)>) {
        match f() {
            Ok((ok, detail)) => self.record(name, ok, detail),
            Err(e) => self.record(name, false, format!("error: {e}")),
        }
    }
}

pub fn verify_instance(g: &Graph, seed: u64, limits: &Limits) -> VerifyReport {
    let n = g.n();
    let mut suite = Suite { checks: Vec::new() };

    suite.run("graph.invariants", || {
        g.check_invariants()?;
        let ok = g.complement().complement() == *g;
        Ok((ok, "symmetric, zero diagonal, complement is an involution".into()))
    });

    let maximal = oracle::maximal_cliques_with(g, limits);
    let k_oracle = maximal.as_ref().ok().map(|m| m.iter().map(VertexSet::len).max().unwrap_or(0));

    suite.run("graph.reconstruct", || {
        let m = maximal.clone()?;
        let ok = reconstruct_from_maximal_cliques(n, &m)? == *g;
        Ok((ok, format!("rebuilt from {} maximal cliques", m.len())))
    });

    if n <= limits.max_exhaustive_n {
        suite.run("oracle.exhaustive", || {
            let m = maximal.clone()?;
            let all = oracle::exhaustive_cliques_with(g, limits)?;
            let filtered: Vec<VertexSet> = all.iter().filter(|c| g.is_maximal_clique(c)).cloned().collect();
            Ok((filtered == m, format!("{} cliques, {} maximal", all.len(), m.len())))
        });
    } else {
        suite.skip("oracle.exhaustive", format!("n = {n} exceeds {}", limits.max_exhaustive_n));
    }

    suite.run("matroot.residuals", || {
        let d = sqrt_root(&g.adjacency_matrix())?;
        let r = d.residuals();
        let exact_rank = exact::rank(&adjacency_rows(g));
        let ok = r.within(MATRIX_TOL) && d.rank == exact_rank;
        Ok((ok, format!("‖B²−A‖ = {:.2e}, max|diag BᵀB| = {:.2e}, rank {} (exact {exact_rank})", r.square, r.null_columns, d.rank)))
    });

    suite.run("matroot.gram_quadratic", || {
        let d = sqrt_root(&g.adjacency_matrix())?;
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut worst: f64 = 0.0;
        let mut points = vec![SimplexVector::barycenter(n)];
        points.extend((0..RANDOM_SIMPLEX_POINTS).map(|_| SimplexVector::random(n, &mut rng)));
        for x in &points {
            let direct = quadratic_form(g, x.as_slice());
            worst = worst.max((gram_quadratic(&d, x)? - direct).abs());
        }
        Ok((worst <= MATRIX_TOL, format!("max |(Bx)² − xᵀAx| = {worst:.2e} over {} points", points.len())))
    });

    let spinor = GraphSpinor::new(g, limits);

    suite.run("cartan.saturated_bijection", || {
        let gs = spinor.clone()?;
        let m = maximal.clone()?;
        let mut from_spinor: Vec<VertexSet> = gs.saturated.iter().map(|s| s.clique.clone()).collect();
        from_spinor.sort();
        let saturated = gs.saturated.iter().all(|s| s.is_saturated(&gs.zbars));
        Ok((from_spinor == m && saturated, format!("{} saturated vectors", gs.saturated.len())))
    });

    if n <= limits.max_exhaustive_n {
        suite.run("cartan.annihilation", || {
            let gs = spinor.clone()?;
            let cliques = oracle::exhaustive_cliques_with(g, limits)?;
            let mut bad = 0;
            for c in &cliques {
                if !gs.annihilation(c)?.is_genuine() {
                    bad += 1;
                }
            }
            Ok((bad == 0, format!("{} cliques, {bad} not annihilated", cliques.len())))
        });
    } else {
        suite.skip("cartan.annihilation", format!("n = {n} exceeds {}", limits.max_exhaustive_n));
    }

    suite.run("cartan.method_agreement", || {
        let gs = spinor.clone()?;
        let (k_spin, w_spin) = gs.max_clique();
        let k = k_oracle.ok_or_else(|| maximal.clone().unwrap_err())?;
        let binary = if n <= limits.max_exhaustive_n { Some(cartan::solve_binary_form_with(g, limits)?.0) } else { None };
        let ok = k_spin == k && g.is_clique(&w_spin) && w_spin.len() == k && binary.is_none_or(|b| b == k);
        let binary_text = binary.map_or("skipped".to_string(), |b| b.to_string());
        Ok((ok, format!("oracle {k}, spinor {k_spin}, binary {binary_text}")))
    });

    if n <= KERNEL_CHECK_N.min(limits.max_kernel_n) {
        suite.run("cartan.kernel_dichotomy", || {
            let mut checked = 0;
            let mut bad = 0;
            for mask in 1u64..1 << n {
                if mask.count_ones() > 3 {
                    continue;
                }
                let x = VertexSet::from_mask(n, mask);
                let dim = cartan::clique_spinor_correspondence_with(g, &x, limits)?;
                checked += 1;
                if (dim > 0) != g.is_clique(&x) {
                    bad += 1;
                }
            }
            Ok((bad == 0, format!("{checked} subsets of size ≤ 3, {bad} mismatches")))
        });
    } else {
        suite.skip("cartan.kernel_dichotomy", format!("n = {n} exceeds {}", KERNEL_CHECK_N.min(limits.max_kernel_n)));
    }

    if n > 0 {
        suite.run("motzkin.bounds", || {
            let k = k_oracle.ok_or_else(|| maximal.clone().unwrap_err())?;
            let plain = maximize_ms(g, Objective::Plain, DEFAULT_STARTS, seed)?;
            let reg = maximize_ms(g, Objective::Regularized, DEFAULT_STARTS, seed)?;
            let bound = 1.0 - 1.0 / n as f64;
            let ok = plain.value >= 0.0
                && plain.value <= bound + MATRIX_TOL
                && plain.value <= 1.0 - 1.0 / k as f64 + MATRIX_TOL
                && reg.value <= 1.0 - 1.0 / (2.0 * k as f64) + MATRIX_TOL
                && (!reg.verified || reg.k_estimate <= k);
            Ok((ok, format!("plain {:.6}, regularized {:.6} (k̂ = {}, verified {})", plain.value, reg.value, reg.k_estimate, reg.verified)))
        });
    } else {
        suite.skip("motzkin.bounds", "empty graph");
    }

    let passed = suite.checks.iter().all(|c| c.status != Status::Fail);
    VerifyReport { n, edges: g.edge_count(), passed, checks: suite.checks }
}

fn adjacency_rows(g: &Graph) -> Vec<Vec<i64>> {
    (0..g.n()).map(|i| (0..g.n()).map(|j| i64::from(g.has_edge(i, j))).collect()).collect()
}

fn quadratic_form(g: &Graph, x: &[f64]) -> f64 {
    g.edges().iter().map(|&(u, v)| 2.0 * x[u] * x[v]).sum()
}
