use nalgebra::DMatrix;
use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use spinclique::cartan::{self, GraphSpinor};
use spinclique::clifford::random::random_tnp;
use spinclique::clifford::{
    apply_witt, cartan_kernel, full_spinor_seeded, spinor_from_tnp_on, Spinor, SpinorJson, WittVector,
};
use spinclique::graph::GraphJson;
use spinclique::matroot::sqrt_root;
use spinclique::{exact, oracle, Graph, Limits, VertexSet};

fn graph_strategy(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n, any::<u64>(), 0.05f64..0.95).prop_map(|(n, seed, p)| {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        Graph::random(n, p, &mut rng)
    })
}

fn spinor_strategy() -> impl Strategy<Value = Spinor<i64>> {
    (1usize..=10).prop_flat_map(|n| {
        proptest::collection::vec((0..1u64 << n, -50i64..=50), 0..40)
            .prop_map(move |terms| Spinor::from_terms(n, terms))
    })
}

proptest! {
    #[test]
    fn graph_json_round_trip(g in graph_strategy(20)) {
        let text = serde_json::to_string(&g.to_json()).unwrap();
        let back: GraphJson = serde_json::from_str(&text).unwrap();
        prop_assert_eq!(Graph::from_json(&back).unwrap(), g);
    }

    #[test]
    fn graph_dimacs_round_trip(g in graph_strategy(20)) {
        prop_assert_eq!(Graph::parse_dimacs(&g.to_dimacs()).unwrap(), g);
    }

    #[test]
    fn spinor_json_round_trip(s in spinor_strategy()) {
        let text = serde_json::to_string(&s.to_json()).unwrap();
        let back: SpinorJson = serde_json::from_str(&text).unwrap();
        prop_assert_eq!(Spinor::<i64>::from_json(&back).unwrap(), s);
    }

    #[test]
    fn bigrational_spinor_json_round_trip(terms in proptest::collection::vec((0u64..64, -9i64..=9, 1i64..=9), 0..10)) {
        let s = Spinor::from_terms(6, terms.into_iter().map(|(i, a, b)| (i, BigRational::new(BigInt::from(a), BigInt::from(b)))));
        let back = Spinor::<BigRational>::from_json(&s.to_json()).unwrap();
        prop_assert_eq!(back, s);
    }

    #[test]
    fn complement_is_an_involution(g in graph_strategy(30)) {
        let c = g.complement();
        prop_assert_eq!(c.edge_count() + g.edge_count(), g.n() * (g.n() - 1) / 2);
        prop_assert_eq!(c.complement(), g);
    }

    #[test]
    fn witness_cliques_are_maximum(g in graph_strategy(14)) {
        let (k, w) = oracle::max_clique_exact(&g).unwrap();
        prop_assert!(g.is_clique(&w) && w.len() == k);
        let (k_spin, w_spin) = cartan::spinorial_max_clique(&g).unwrap();
        prop_assert_eq!(k_spin, k);
        prop_assert!(g.is_clique(&w_spin));
    }

    #[test]
    fn spinor_is_order_independent_up_to_sign(seed in any::<u64>(), n in 1usize..=6) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let k = rng.random_range(1..=n);
        let mut vs = random_tnp(n, k, &mut rng);
        let base = full_spinor_seeded(n, seed).unwrap();
        let a = spinor_from_tnp_on(&vs, &base).unwrap();
        vs.reverse();
        let b = spinor_from_tnp_on(&vs, &base).unwrap();
        prop_assert!(a.equals_up_to_sign(&b));
    }
}

#[test]
fn cartan_equation_holds_for_spinors_of_tnps() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for trial in 0..100 {
        let n = rng.random_range(1..=7usize);
        let k = rng.random_range(0..=n);
        let vs = random_tnp(n, k, &mut rng);
        let phi = spinor_from_tnp_on(&vs, &full_spinor_seeded(n, trial).unwrap()).unwrap();
        assert!(phi.nnz() >= 1 << (n - k));
        for v in &vs {
            assert!(apply_witt(v, &phi).unwrap().is_zero(), "trial {trial}");
        }
    }
}

#[test]
fn kernel_of_tnp_is_at_least_the_lower_bound() {
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    for _ in 0..60 {
        let n = rng.random_range(1..=6usize);
        let k = rng.random_range(1..=n);
        let vs = random_tnp(n, k, &mut rng);
        let kernel = cartan_kernel(n, &vs).unwrap();
        assert!(kernel.dimension >= 1 << (n - k));
    }
}

#[test]
fn witt_relations_exhaustive_via_vectors() {
    // vw + wv acts as the scalar [v, w]₊ on every Fock basis element.
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for n in 1..=6usize {
        let v = WittVector::new((0..n).map(|_| rng.random_range(-3..=3)).collect(), (0..n).map(|_| rng.random_range(-3..=3)).collect()).unwrap();
        let w = WittVector::new((0..n).map(|_| rng.random_range(-3..=3)).collect(), (0..n).map(|_| rng.random_range(-3..=3)).collect()).unwrap();
        let anti: i64 = v.anticommutator(&w).unwrap();
        for s in 0..1u64 << n {
            let omega = Spinor::<i64>::basis(n, s);
            let lhs = apply_witt(&v, &apply_witt(&w, &omega).unwrap()).unwrap().add(&apply_witt(&w, &apply_witt(&v, &omega).unwrap()).unwrap());
            assert_eq!(lhs, omega.scale(&anti));
        }
    }
}

#[test]
fn independent_set_columns_span_small_planes() {
    // Columns of B indexed by an independent set are mutually orthogonal
    // null vectors, so they span at most n/2 dimensions. Rounding-level
    // eigenvalues leave singular values near √ε, hence the loose cutoff.
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    for _ in 0..30 {
        let n = rng.random_range(2..=12usize);
        let g = Graph::random(n, 0.3, &mut rng);
        let d = sqrt_root(&g.adjacency_matrix()).unwrap();
        let (_, s) = oracle::max_clique_exact(&g.complement()).unwrap();
        let cols: Vec<usize> = s.iter().collect();
        let m = DMatrix::<Complex64>::from_fn(n, cols.len(), |i, j| d.b[(i, cols[j])]);
        let sv = m.svd(false, false).singular_values;
        let rank = sv.iter().filter(|&&x| x > 1e-6).count();
        assert!(rank <= n / 2, "n={n}, |S|={}, rank {rank}", cols.len());
    }
}

#[test]
fn numeric_rank_matches_exact_rank() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for _ in 0..20 {
        let n = rng.random_range(1..=16usize);
        let g = Graph::random(n, 0.5, &mut rng);
        let rows: Vec<Vec<i64>> = (0..n).map(|i| (0..n).map(|j| i64::from(g.has_edge(i, j))).collect()).collect();
        assert_eq!(sqrt_root(&g.adjacency_matrix()).unwrap().rank, exact::rank(&rows));
    }
}

#[test]
fn graph_spinor_components_match_maximal_cliques() {
    for g in Graph::all_on(4) {
        let gs = GraphSpinor::new(&g, &Limits::default()).unwrap();
        let cliques = oracle::maximal_cliques(&g).unwrap();
        assert_eq!(gs.psi.nnz(), cliques.len());
        for sv in &gs.saturated {
            assert_eq!(sv.q_indices, sv.clique.complement());
            assert_eq!(sv.p_dimension(), sv.clique.len());
        }
    }
}

#[test]
fn non_cliques_have_trivial_kernels() {
    let g = Graph::cycle(5);
    for mask in 0u64..32 {
        let x = VertexSet::from_mask(5, mask);
        let dim = cartan::clique_spinor_correspondence(&g, &x).unwrap();
        assert_eq!(dim > 0, g.is_clique(&x), "{x}");
    }
}
