//! Combinatorial ground truth: maximal-clique enumeration (Bron–Kerbosch with
//! pivoting), exact maximum clique, and brute-force clique listing.

use std::sync::atomic::{AtomicUsize, Ordering};

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::limits::Limits;
use crate::par;

/// All maximal cliques, sorted lexicographically by member list.
pub fn maximal_cliques(g: &Graph) -> Result<Vec<VertexSet>> {
    maximal_cliques_with(g, &Limits::default())
}

pub fn maximal_cliques_with(g: &Graph, limits: &Limits) -> Result<Vec<VertexSet>> {
    let n = g.n();
    if n == 0 {
        return Ok(Vec::new());
    }
    let found = AtomicUsize::new(0);
    let cap = limits.max_cliques;
    // Each maximal clique is reported from its lowest vertex, so the top
    // level splits into independent branches.
    let branches = par::map_range(n, |v| {
        let nb = g.neighbors(v);
        let mut later = VertexSet::empty(n);
        let mut earlier = VertexSet::empty(n);
        for w in nb.iter() {
            if w > v {
                later.insert(w);
            } else {
                earlier.insert(w);
            }
        }
        let mut out = Vec::new();
        let mut search = Search { g, found: &found, cap, out: &mut out };
        search.expand(VertexSet::from_members(n, [v]), later, earlier).map(|()| out)
    });
    let mut all = Vec::new();
    for b in branches {
        all.extend(b?);
    }
    all.sort();
    Ok(all)
}

struct Search<'a> {
    g: &'a Graph,
    found: &'a AtomicUsize,
    cap: usize,
    out: &'a mut Vec<VertexSet>,
}

impl Search<'_> {
    fn expand(&mut self, r: VertexSet, mut p: VertexSet, mut x: VertexSet) -> Result<()> {
        if p.is_empty() {
            if x.is_empty() {
                let count = self.found.fetch_add(1, Ordering::Relaxed) + 1;
                if count > self.cap {
                    return Err(cap_error(self.cap, self.g.n()));
                }
                self.out.push(r);
            }
            return Ok(());
        }
        if self.found.load(Ordering::Relaxed) > self.cap {
            return Err(cap_error(self.cap, self.g.n()));
        }
        // Pivot: vertex of P ∪ X with the most neighbours inside P.
        let pivot = p
            .union(&x)
            .iter()
            .max_by_key(|&u| (p.intersection_len(self.g.neighbors(u)), std::cmp::Reverse(u)))
            .expect("P is nonempty");
        let candidates = p.difference(self.g.neighbors(pivot));
        for v in candidates.iter() {
            let nb = self.g.neighbors(v);
            let mut r2 = r.clone();
            r2.insert(v);
            self.expand(r2, p.intersection(nb), x.intersection(nb))?;
            p.remove(v);
            x.insert(v);
        }
        Ok(())
    }
}

fn cap_error(cap: usize, n: usize) -> Error {
    Error::ResourceLimit(format!(
        "more than {cap} maximal cliques; a graph on {n} vertices can have up to 3^(n/3) ≈ {:.3e} (Moon–Moser bound)",
        3f64.powf(n as f64 / 3.0)
    ))
}

/// Size and a witness of a maximum clique. The witness is the
/// lexicographically first maximal clique of maximum size.
pub fn max_clique_exact(g: &Graph) -> Result<(usize, VertexSet)> {
    max_clique_exact_with(g, &Limits::default())
}

pub fn max_clique_exact_with(g: &Graph, limits: &Limits) -> Result<(usize, VertexSet)> {
    let cliques = maximal_cliques_with(g, limits)?;
    let mut best = VertexSet::empty(g.n());
    for c in cliques {
        if c.len() > best.len() {
            best = c;
        }
    }
    Ok((best.len(), best))
}

/// Every nonempty clique, found by checking all `2^n - 1` subsets.
pub fn exhaustive_cliques(g: &Graph) -> Result<Vec<VertexSet>> {
    exhaustive_cliques_with(g, &Limits::default())
}

pub fn exhaustive_cliques_with(g: &Graph, limits: &Limits) -> Result<Vec<VertexSet>> {
    let n = g.n();
    if n > limits.max_exhaustive_n || n > 63 {
        return Err(Error::ResourceLimit(format!(
            "exhaustive clique listing needs n <= {}, got {n}",
            limits.max_exhaustive_n.min(63)
        )));
    }
    let closed: Vec<u64> = (0..n).map(|v| g.neighbors(v).to_mask().unwrap_or(0) | 1 << v).collect();
    let mut out: Vec<VertexSet> = (1..1u64 << n)
        .filter(|&mask| {
            let mut rest = mask;
            while rest != 0 {
                let v = rest.trailing_zeros() as usize;
                if closed[v] & mask != mask {
                    return false;
                }
                rest &= rest - 1;
            }
            true
        })
        .map(|mask| VertexSet::from_mask(n, mask))
        .collect();
    out.sort();
    Ok(out)
}
