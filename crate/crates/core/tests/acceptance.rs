//! Acceptance suite. Prints one PASS/FAIL line per criterion and exits
//! nonzero if any criterion fails or exceeds its time budget.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use num_rational::BigRational;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use spinclique::cartan::{self, GraphSpinor};
use spinclique::clifford::random::{random_tnp, random_witt_set};
use spinclique::clifford::{
    apply_p, apply_q, cartan_kernel, full_spinor_seeded, is_tnp, spinor_from_tnp, spinor_from_tnp_on, Spinor,
    WittVector,
};
use spinclique::graph::reconstruct_from_maximal_cliques;
use spinclique::matroot::sqrt_root;
use spinclique::motzkin::{maximize_ms, ms_value_of_clique, Objective};
use spinclique::{oracle, par, Graph, Limits, VertexSet};

type Outcome = Result<String, String>;

struct Criterion {
    id: u32,
    name: &'static str,
    budget: Duration,
    run: fn() -> Outcome,
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond { Ok(()) } else { Err(msg()) }
}

fn err<E: std::fmt::Display>(e: E) -> String {
    e.to_string()
}

fn ratio(num: i64, den: i64) -> BigRational {
    BigRational::new(num.into(), den.into())
}

fn random_graphs(count: usize, max_n: usize, seed: u64) -> Vec<Graph> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let n = rng.random_range(1..=max_n);
            let p = rng.random_range(0.1..0.9);
            Graph::random(n, p, &mut rng)
        })
        .collect()
}

/// All 1024 graphs on five vertices followed by 200 random graphs with n ≤ 12.
fn corpus() -> Vec<Graph> {
    let mut graphs: Vec<Graph> = Graph::all_on(5).collect();
    graphs.extend(random_graphs(200, 12, 0xC04B05));
    graphs
}

fn motzkin_straus() -> Outcome {
    for k in 2..=8usize {
        let g = Graph::complete(k);
        let r = maximize_ms(&g, Objective::Plain, 8, 1).map_err(err)?;
        let want = 1.0 - 1.0 / k as f64;
        ensure((r.value - want).abs() <= 1e-8, || format!("K{k}: value {} vs {want}", r.value))?;
        let exact = ms_value_of_clique(&g, &VertexSet::full(k)).map_err(err)?;
        ensure(exact == ratio(k as i64 - 1, k as i64), || format!("K{k}: exact value {exact}"))?;
    }
    Ok("K2..K8 within 1e-8, exact values 1 - 1/k".into())
}

fn bomze() -> Outcome {
    for k in 2..=8usize {
        let r = maximize_ms(&Graph::complete(k), Objective::Regularized, 8, 1).map_err(err)?;
        let want = 1.0 - 1.0 / (2.0 * k as f64);
        ensure((r.value - want).abs() <= 1e-8, || format!("K{k}: value {} vs {want}", r.value))?;
    }
    let graphs = random_graphs(200, 12, 0xB03E);
    let rows = par::try_map(&graphs, |g| -> spinclique::Result<(usize, bool, usize)> {
        let (k, _) = oracle::max_clique_exact(g)?;
        let r = maximize_ms(g, Objective::Regularized, 32, 7)?;
        Ok((k, r.verified, r.k_estimate))
    })
    .map_err(err)?;
    let matches = rows.iter().filter(|(k, verified, est)| *verified && est == k).count();
    let above = rows.iter().filter(|(k, _, est)| est > k).count();
    ensure(above == 0, || format!("{above} estimates exceed the clique number"))?;
    ensure(matches * 100 >= 95 * rows.len(), || format!("{matches}/{} verified matches", rows.len()))?;
    Ok(format!("K2..K8 within 1e-8, {matches}/{} verified matches, none above", rows.len()))
}

fn square_root() -> Outcome {
    let graphs = random_graphs(100, 30, 0x5027);
    let mut worst_square: f64 = 0.0;
    let mut worst_null: f64 = 0.0;
    for g in &graphs {
        let r = sqrt_root(&g.adjacency_matrix()).map_err(err)?.residuals();
        worst_square = worst_square.max(r.square);
        worst_null = worst_null.max(r.null_columns);
    }
    ensure(worst_square <= 1e-9 && worst_null <= 1e-9, || {
        format!("max ‖B²−A‖ = {worst_square:.2e}, max |diag BᵀB| = {worst_null:.2e}")
    })?;
    Ok(format!("max ‖B²−A‖ = {worst_square:.2e}, max |diag BᵀB| = {worst_null:.2e}"))
}

fn witt_algebra() -> Outcome {
    let mut checked = 0usize;
    for n in 1..=10usize {
        let failures: Vec<String> = par::map_range(1 << n, |s| {
            let omega = Spinor::<i64>::basis(n, s as u64);
            for j in 1..=n {
                let pj = apply_p(j, &omega).unwrap();
                let qj = apply_q(j, &omega).unwrap();
                if !apply_p(j, &pj).unwrap().is_zero() || !apply_q(j, &qj).unwrap().is_zero() {
                    return Some(format!("n={n} s={s} j={j}: square not zero"));
                }
                for k in 1..=n {
                    let anti = apply_q(k, &pj).unwrap().add(&apply_p(j, &apply_q(k, &omega).unwrap()).unwrap());
                    let want = if j == k { omega.clone() } else { Spinor::zero(n) };
                    if anti != want {
                        return Some(format!("n={n} s={s} j={j} k={k}: anticommutator wrong"));
                    }
                }
            }
            None
        })
        .into_iter()
        .flatten()
        .collect();
        if let Some(f) = failures.first() {
            return Err(f.clone());
        }
        checked += (1 << n) * n * (n + 2);
    }
    Ok(format!("{checked} identities on Fock bases for n = 1..10"))
}

fn prop1() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(0x91);
    let mut slack_min = usize::MAX;
    let mut tight = 0;
    for trial in 0..200u64 {
        let n = rng.random_range(1..=8usize);
        let k = rng.random_range(0..=n);
        let vs = random_tnp(n, k, &mut rng);
        let base = full_spinor_seeded(n, 1000 + trial).map_err(err)?;
        let phi = spinor_from_tnp_on(&vs, &base).map_err(err)?;
        let bound = 1usize << (n - k);
        ensure(phi.nnz() >= bound, || format!("trial {trial}: n={n} k={k} has {} < {bound} components", phi.nnz()))?;
        slack_min = slack_min.min(phi.nnz() - bound);
        tight += usize::from(phi.nnz() == bound);
    }
    Ok(format!("200 TNPs, {tight} exactly at 2^(n-k), min slack {slack_min}"))
}

fn prop3() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(0x93);
    let sets: Vec<(usize, Vec<WittVector<i64>>)> = (0..500)
        .map(|_| {
            let n = rng.random_range(1..=8usize);
            (n, random_witt_set(n, &mut rng))
        })
        .collect();
    let rows = par::try_map(&sets, |(n, vs)| -> spinclique::Result<(bool, usize)> {
        Ok((is_tnp(vs)?, cartan_kernel(*n, vs)?.dimension))
    })
    .map_err(err)?;
    let tnps = rows.iter().filter(|(t, _)| *t).count();
    let bad = rows.iter().filter(|(t, d)| *t != (*d > 0)).count();
    ensure(bad == 0, || format!("{bad} of 500 sets violate the dichotomy"))?;
    Ok(format!("500 sets ({tnps} TNPs), kernel nonzero exactly on TNPs"))
}

fn end_to_end() -> Outcome {
    let graphs = corpus();
    let mismatches: Vec<String> = par::try_map(&graphs, |g| -> spinclique::Result<Option<String>> {
        let (k_oracle, _) = oracle::max_clique_exact(g)?;
        let (k_spin, w_spin) = cartan::spinorial_max_clique(g)?;
        let (k_bin, w_bin) = cartan::solve_binary_form(g)?;
        let witnesses_ok = g.is_clique(&w_spin) && w_spin.len() == k_spin && g.is_clique(&w_bin) && w_bin.len() == k_bin;
        Ok((k_oracle != k_spin || k_oracle != k_bin || !witnesses_ok)
            .then(|| format!("n={} m={}: oracle {k_oracle}, spinor {k_spin}, binary {k_bin}", g.n(), g.edge_count())))
    })
    .map_err(err)?
    .into_iter()
    .flatten()
    .collect();
    ensure(mismatches.is_empty(), || format!("{} mismatches, first: {}", mismatches.len(), mismatches[0]))?;

    let small: Vec<Graph> = Graph::all_on(5).collect();
    let bad: usize = par::try_map(&small, |g| -> spinclique::Result<usize> {
        let mut bad = 0;
        for mask in 0u64..32 {
            let x = VertexSet::from_mask(5, mask);
            if (cartan::clique_spinor_correspondence(g, &x)? > 0) != g.is_clique(&x) {
                bad += 1;
            }
        }
        Ok(bad)
    })
    .map_err(err)?
    .into_iter()
    .sum();
    ensure(bad == 0, || format!("{bad} subsets where kernel positivity differs from being a clique"))?;
    Ok(format!("{} graphs agree three ways, 32768 subsets correspond", graphs.len()))
}

fn saturation() -> Outcome {
    let graphs = corpus();
    let rows = par::try_map(&graphs, |g| -> spinclique::Result<Option<String>> {
        let gs = GraphSpinor::new(g, &Limits::default())?;
        let maximal = oracle::maximal_cliques(g)?;
        let mut from_spinor: Vec<VertexSet> = gs.saturated.iter().map(|s| s.clique.clone()).collect();
        from_spinor.sort();
        if from_spinor != maximal || gs.psi.nnz() != maximal.len() {
            return Ok(Some(format!("n={}: saturated vectors differ from maximal cliques", g.n())));
        }
        if let Some(sv) = gs.saturated.iter().find(|s| !s.is_saturated(&gs.zbars)) {
            return Ok(Some(format!("n={}: {} is not saturated", g.n(), sv.clique)));
        }
        for c in oracle::exhaustive_cliques(g)? {
            let outcome = gs.annihilation(&c)?;
            if !outcome.is_genuine() {
                return Ok(Some(format!("n={}: clique {c} gives {outcome:?}", g.n())));
            }
        }
        Ok(None)
    })
    .map_err(err)?;
    let failures: Vec<&String> = rows.iter().flatten().collect();
    ensure(failures.is_empty(), || format!("{} failures, first: {}", failures.len(), failures[0]))?;
    Ok(format!("{} graphs: bijection holds, every clique annihilates its gated spinor", graphs.len()))
}

fn reconstruction() -> Outcome {
    let mut graphs: Vec<Graph> = Graph::all_on(5).collect();
    graphs.extend(random_graphs(100, 15, 0x9EC0));
    for g in &graphs {
        let rebuilt = reconstruct_from_maximal_cliques(g.n(), &oracle::maximal_cliques(g).map_err(err)?).map_err(err)?;
        ensure(rebuilt == *g, || format!("n={} m={}: reconstruction differs", g.n(), g.edge_count()))?;
    }
    Ok(format!("{} graphs rebuilt exactly", graphs.len()))
}

fn worked_facts() -> Outcome {
    for n in 1..=8usize {
        let psi = cartan::psi_of_graph(&Graph::complete(n), None).map_err(err)?;
        ensure(psi == Spinor::basis(n, 0), || format!("Ψ(K{n}) = {:?}", psi.indices()))?;

        let all_p: Vec<WittVector<i64>> = (1..=n).map(|j| WittVector::p(n, j)).collect();
        let phi = spinor_from_tnp(n, &all_p).map_err(err)?;
        ensure(phi.indices() == [0], || format!("n={n}: Φ(p₁…pₙ) has indices {:?}", phi.indices()))?;
        let kernel = cartan_kernel(n, &all_p).map_err(err)?;
        ensure(kernel.dimension == 1 && kernel.basis[0].indices() == [0], || format!("n={n}: kernel of P"))?;

        let mut q_first = all_p.clone();
        q_first[0] = WittVector::q(n, 1);
        let phi = spinor_from_tnp(n, &q_first).map_err(err)?;
        ensure(phi.indices() == [1], || format!("n={n}: Φ(q₁,p₂…pₙ) has indices {:?}", phi.indices()))?;
        let kernel = cartan_kernel(n, &q_first).map_err(err)?;
        ensure(kernel.dimension == 1 && kernel.basis[0].indices() == [1], || format!("n={n}: kernel of q₁,p₂…"))?;
    }
    Ok("n = 1..8: Ψ(Kₙ) = ω₀, Φ(P) ∝ ω₀, Φ(q₁,p₂…pₙ) ∝ ω₁".into())
}

fn main() -> ExitCode {
    let criteria = [
        Criterion { id: 1, name: "motzkin-straus closed form", budget: Duration::from_secs(1), run: motzkin_straus },
        Criterion { id: 2, name: "regularized objective", budget: Duration::from_secs(30), run: bomze },
        Criterion { id: 3, name: "matrix square root", budget: Duration::from_secs(10), run: square_root },
        Criterion { id: 4, name: "witt operator algebra", budget: Duration::from_secs(5), run: witt_algebra },
        Criterion { id: 5, name: "tnp spinor support bound", budget: Duration::from_secs(5), run: prop1 },
        Criterion { id: 6, name: "cartan kernel dichotomy", budget: Duration::from_secs(30), run: prop3 },
        Criterion { id: 7, name: "three-way max clique", budget: Duration::from_secs(120), run: end_to_end },
        Criterion { id: 8, name: "saturation bijection", budget: Duration::from_secs(60), run: saturation },
        Criterion { id: 9, name: "reconstruction", budget: Duration::from_secs(10), run: reconstruction },
        Criterion { id: 10, name: "worked spinor facts", budget: Duration::from_secs(1), run: worked_facts },
    ];
    let filter: Vec<String> = std::env::args().skip(1).filter(|a| !a.starts_with('-')).collect();
    let mut failed = 0;
    for c in &criteria {
        if !filter.is_empty() && !filter.iter().any(|f| c.name.contains(f.as_str()) || *f == c.id.to_string()) {
            continue;
        }
        let start = Instant::now();
        let outcome = (c.run)();
        let elapsed = start.elapsed();
        let (ok, detail) = match outcome {
            Ok(d) if elapsed <= c.budget => (true, d),
            Ok(d) => (false, format!("{d}; over budget {:?}", c.budget)),
            Err(d) => (false, d),
        };
        failed += usize::from(!ok);
        println!(
            "{} {:>2} {:<28} {:>8.3}s  {detail}",
            if ok { "PASS" } else { "FAIL" },
            c.id,
            c.name,
            elapsed.as_secs_f64()
        );
    }
    if failed == 0 { ExitCode::SUCCESS } else { ExitCode::FAILURE }
}
