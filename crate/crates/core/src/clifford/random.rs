//! Seeded generators of Witt-vector sets for property tests and benches.

use rand::seq::SliceRandom;
use rand::Rng;

use super::witt::WittVector;

/// A random `k`-dimensional TNP: `k` basis vectors drawn from `{p_j}` and
/// `{q_j}` with pairwise distinct indices, mixed by a random unimodular
/// matrix `L·U` (unit triangular factors, entries in `[-2, 2]`).
pub fn random_tnp<R: Rng + ?Sized>(n: usize, k: usize, rng: &mut R) -> Vec<WittVector<i64>> {
    assert!(k <= n);
    let mut idx: Vec<usize> = (1..=n).collect();
    idx.shuffle(rng);
    let basis: Vec<WittVector<i64>> = idx[..k]
        .iter()
        .map(|&j| if rng.random_bool(0.5) { WittVector::p(n, j) } else { WittVector::q(n, j) })
        .collect();
    let lower = unit_triangular(k, true, rng);
    let upper = unit_triangular(k, false, rng);
    let mix: Vec<Vec<i64>> =
        (0..k).map(|i| (0..k).map(|j| (0..k).map(|m| lower[i][m] * upper[m][j]).sum()).collect()).collect();
    mix.iter()
        .map(|row| {
            row.iter().zip(&basis).fold(WittVector::zero(n), |acc, (&c, b)| if c == 0 { acc } else { acc.add(&b.scale(&c)) })
        })
        .collect()
}

fn unit_triangular<R: Rng + ?Sized>(k: usize, lower: bool, rng: &mut R) -> Vec<Vec<i64>> {
    (0..k)
        .map(|i| {
            (0..k)
                .map(|j| match (i == j, (j < i) == lower) {
                    (true, _) => 1,
                    (false, true) => rng.random_range(-2..=2),
                    (false, false) => 0,
                })
                .collect()
        })
        .collect()
}

/// A random set of `1..=n` vectors: a TNP, a TNP with one coefficient
/// nudged, or unstructured small integers, in roughly equal proportion.
pub fn random_witt_set<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Vec<WittVector<i64>> {
    let k = rng.random_range(1..=n);
    match rng.random_range(0..3) {
        0 => random_tnp(n, k, rng),
        1 => {
            let mut vs = random_tnp(n, k, rng);
            let i = rng.random_range(0..k);
            let j = rng.random_range(0..n);
            let bump = if rng.random_bool(0.5) { 1 } else { -1 };
            if rng.random_bool(0.5) {
                vs[i].alpha[j] += bump;
            } else {
                vs[i].beta[j] += bump;
            }
            vs
        }
        _ => (0..k)
            .map(|_| WittVector {
                alpha: (0..n).map(|_| rng.random_range(-2..=2)).collect(),
                beta: (0..n).map(|_| rng.random_range(-2..=2)).collect(),
            })
            .collect(),
    }
}
