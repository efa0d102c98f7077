//! Undirected simple graphs stored as per-vertex adjacency bitsets.
//!
//! Vertices are 0-based internally. DIMACS files, JSON and every report use
//! 1-based labels.

use std::cmp::Ordering;
use std::fmt;

use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

const WORD: usize = 64;

/// A subset of `[0, n)` as a packed bitset.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct VertexSet {
    n: usize,
    words: Vec<u64>,
}

impl VertexSet {
    pub fn empty(n: usize) -> Self {
        Self { n, words: vec![0; n.div_ceil(WORD)] }
    }

    pub fn full(n: usize) -> Self {
        let mut s = Self::empty(n);
        for (i, w) in s.words.iter_mut().enumerate() {
            let lo = i * WORD;
            let bits = (n - lo).min(WORD);
            *w = if bits == WORD { u64::MAX } else { (1u64 << bits) - 1 };
        }
        s
    }

    /// Builds a set from 0-based members. Panics if a member is `>= n`.
    pub fn from_members<I: IntoIterator<Item = usize>>(n: usize, members: I) -> Self {
        let mut s = Self::empty(n);
        for v in members {
            s.insert(v);
        }
        s
    }

    /// Builds a set from 1-based labels, rejecting anything outside `1..=n`.
    pub fn from_labels(n: usize, labels: &[usize]) -> Result<Self> {
        let mut s = Self::empty(n);
        for &l in labels {
            if l == 0 || l > n {
                return Err(Error::IndexOutOfRange { index: l, n });
            }
            s.insert(l - 1);
        }
        Ok(s)
    }

    /// Low `n` bits of `mask` (requires `n <= 64`).
    pub fn from_mask(n: usize, mask: u64) -> Self {
        assert!(n <= WORD, "from_mask needs n <= 64");
        let mut s = Self::empty(n);
        if n > 0 {
            let keep = if n == WORD { u64::MAX } else { (1u64 << n) - 1 };
            s.words[0] = mask & keep;
        }
        s
    }

    /// The set as a machine word, if it fits.
    pub fn to_mask(&self) -> Option<u64> {
        match self.words.len() {
            0 => Some(0),
            1 => Some(self.words[0]),
            _ => None,
        }
    }

    pub fn universe(&self) -> usize {
        self.n
    }

    pub fn contains(&self, v: usize) -> bool {
        v < self.n && self.words[v / WORD] >> (v % WORD) & 1 == 1
    }

    pub fn insert(&mut self, v: usize) {
        assert!(v < self.n, "vertex {v} outside universe of size {}", self.n);
        self.words[v / WORD] |= 1 << (v % WORD);
    }

    pub fn remove(&mut self, v: usize) {
        if v < self.n {
            self.words[v / WORD] &= !(1 << (v % WORD));
        }
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(i, &w)| {
            let mut w = w;
            std::iter::from_fn(move || {
                if w == 0 {
                    return None;
                }
                let b = w.trailing_zeros() as usize;
                w &= w - 1;
                Some(i * WORD + b)
            })
        })
    }

    pub fn first(&self) -> Option<usize> {
        self.iter().next()
    }

    /// 1-based labels in ascending order.
    pub fn labels(&self) -> Vec<usize> {
        self.iter().map(|v| v + 1).collect()
    }

    pub fn intersection(&self, other: &Self) -> Self {
        self.zip_with(other, |a, b| a & b)
    }

    pub fn union(&self, other: &Self) -> Self {
        self.zip_with(other, |a, b| a | b)
    }

    pub fn difference(&self, other: &Self) -> Self {
        self.zip_with(other, |a, b| a & !b)
    }

    pub fn complement(&self) -> Self {
        Self::full(self.n).difference(self)
    }

    pub fn intersection_len(&self, other: &Self) -> usize {
        self.words.iter().zip(&other.words).map(|(a, b)| (a & b).count_ones() as usize).sum()
    }

    pub fn is_subset(&self, other: &Self) -> bool {
        self.words.iter().zip(&other.words).all(|(a, b)| a & !b == 0)
    }

    pub fn is_disjoint(&self, other: &Self) -> bool {
        self.words.iter().zip(&other.words).all(|(a, b)| a & b == 0)
    }

    fn zip_with(&self, other: &Self, f: impl Fn(u64, u64) -> u64) -> Self {
        debug_assert_eq!(self.n, other.n);
        Self { n: self.n, words: self.words.iter().zip(&other.words).map(|(&a, &b)| f(a, b)).collect() }
    }
}

/// Lexicographic order on the ascending member lists.
impl Ord for VertexSet {
    fn cmp(&self, other: &Self) -> Ordering {
        self.iter().cmp(other.iter()).then(self.n.cmp(&other.n))
    }
}

impl PartialOrd for VertexSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// `{1,2,3}` with 1-based labels.
impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, l) in self.labels().iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{l}")?;
        }
        f.write_str("}")
    }
}

/// Undirected simple graph: symmetric 0/1 adjacency with zero diagonal.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Graph {
    adj: Vec<VertexSet>,
}

impl Graph {
    /// `n` isolated vertices.
    pub fn empty(n: usize) -> Self {
        Self { adj: vec![VertexSet::empty(n); n] }
    }

    pub fn complete(n: usize) -> Self {
        Self::empty(n).complement()
    }

    /// Builds from 0-based edges. Duplicates collapse; self-loops and
    /// out-of-range endpoints are rejected.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Self::empty(n);
        for &(u, v) in edges {
            g.try_add_edge(u, v)?;
        }
        Ok(g)
    }

    /// Cycle on `n >= 3` vertices.
    pub fn cycle(n: usize) -> Self {
        let mut g = Self::empty(n);
        for i in 0..n {
            g.add_edge(i, (i + 1) % n);
        }
        g
    }

    pub fn path(n: usize) -> Self {
        let mut g = Self::empty(n);
        for i in 1..n {
            g.add_edge(i - 1, i);
        }
        g
    }

    /// The graph whose edge set is selected by `mask` over the pairs
    /// `(0,1), (0,2), ..., (n-2,n-1)` in that order.
    pub fn from_edge_mask(n: usize, mask: u64) -> Self {
        let mut g = Self::empty(n);
        let mut bit = 0;
        for i in 0..n {
            for j in i + 1..n {
                if mask >> bit & 1 == 1 {
                    g.add_edge(i, j);
                }
                bit += 1;
            }
        }
        g
    }

    /// Every labelled graph on `n` vertices (`n <= 11`).
    pub fn all_on(n: usize) -> impl Iterator<Item = Graph> {
        let pairs = n * n.saturating_sub(1) / 2;
        assert!(pairs < 64, "too many graphs to enumerate");
        (0..1u64 << pairs).map(move |m| Graph::from_edge_mask(n, m))
    }

    /// Erdős–Rényi G(n, p).
    pub fn random<R: Rng + ?Sized>(n: usize, p: f64, rng: &mut R) -> Self {
        let mut g = Self::empty(n);
        for i in 0..n {
            for j in i + 1..n {
                if rng.random_bool(p) {
                    g.add_edge(i, j);
                }
            }
        }
        g
    }

    fn add_edge(&mut self, u: usize, v: usize) {
        self.adj[u].insert(v);
        self.adj[v].insert(u);
    }

    fn try_add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        let n = self.n();
        if u >= n || v >= n {
            return Err(Error::IndexOutOfRange { index: u.max(v) + 1, n });
        }
        if u == v {
            return Err(Error::InvalidInput(format!("self-loop on vertex {}", u + 1)));
        }
        self.add_edge(u, v);
        Ok(())
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(VertexSet::len).sum::<usize>() / 2
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].contains(v)
    }

    pub fn neighbors(&self, v: usize) -> &VertexSet {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    /// 0-based edges `(u, v)` with `u < v`, in row order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        (0..self.n()).flat_map(|u| self.adj[u].iter().filter(move |&v| v > u).map(move |v| (u, v))).collect()
    }

    /// `J - I - A`.
    pub fn complement(&self) -> Self {
        let n = self.n();
        let adj = (0..n)
            .map(|i| {
                let mut row = self.adj[i].complement();
                row.remove(i);
                row
            })
            .collect();
        Self { adj }
    }

    /// Pairwise adjacency of all members. The empty set counts as a clique.
    pub fn is_clique(&self, s: &VertexSet) -> bool {
        s.iter().all(|v| {
            let mut rest = s.clone();
            rest.remove(v);
            rest.is_subset(&self.adj[v])
        })
    }

    /// A clique that no outside vertex extends.
    pub fn is_maximal_clique(&self, s: &VertexSet) -> bool {
        self.is_clique(s) && (0..self.n()).filter(|v| !s.contains(*v)).all(|v| !s.is_subset(&self.adj[v]))
    }

    /// Dense 0/1 adjacency matrix.
    pub fn adjacency_matrix(&self) -> nalgebra::DMatrix<f64> {
        let n = self.n();
        nalgebra::DMatrix::from_fn(n, n, |i, j| if self.has_edge(i, j) { 1.0 } else { 0.0 })
    }

    /// Checks symmetry and the zero diagonal.
    pub fn check_invariants(&self) -> Result<()> {
        let n = self.n();
        for i in 0..n {
            if self.adj[i].universe() != n {
                return Err(Error::Contract(format!("row {} has wrong width", i + 1)));
            }
            if self.adj[i].contains(i) {
                return Err(Error::Contract(format!("nonzero diagonal at {}", i + 1)));
            }
            for j in self.adj[i].iter() {
                if !self.adj[j].contains(i) {
                    return Err(Error::Contract(format!("asymmetric entry ({}, {})", i + 1, j + 1)));
                }
            }
        }
        Ok(())
    }

    /// Parses the DIMACS `edge` format.
    pub fn parse_dimacs(text: &str) -> Result<Self> {
        let mut graph: Option<Graph> = None;
        for (idx, raw) in text.lines().enumerate() {
            let line_no = idx + 1;
            let err = |message: String| Error::Parse { line: line_no, message };
            let line = raw.trim();
            if line.is_empty() {
                continue;
            }
            let mut fields = line.split_whitespace();
            match fields.next() {
                Some("c") => {}
                Some("p") => {
                    if graph.is_some() {
                        return Err(err("duplicate problem line".into()));
                    }
                    let kind = fields.next().ok_or_else(|| err("missing problem kind".into()))?;
                    if kind != "edge" && kind != "col" {
                        return Err(err(format!("unsupported problem kind `{kind}`")));
                    }
                    let n = parse_field(fields.next(), "vertex count").map_err(err)?;
                    let _m = parse_field(fields.next(), "edge count").map_err(err)?;
                    if fields.next().is_some() {
                        return Err(err("trailing fields on problem line".into()));
                    }
                    graph = Some(Graph::empty(n));
                }
                Some("e") => {
                    let g = graph.as_mut().ok_or_else(|| err("edge before problem line".into()))?;
                    let u = parse_field(fields.next(), "edge endpoint").map_err(err)?;
                    let v = parse_field(fields.next(), "edge endpoint").map_err(err)?;
                    if fields.next().is_some() {
                        return Err(err("trailing fields on edge line".into()));
                    }
                    let n = g.n();
                    for w in [u, v] {
                        if w == 0 || w > n {
                            return Err(err(format!("vertex {w} out of range 1..={n}")));
                        }
                    }
                    if u == v {
                        return Err(err(format!("self-loop on vertex {u}")));
                    }
                    g.add_edge(u - 1, v - 1);
                }
                Some(tag) => return Err(err(format!("unrecognised line tag `{tag}`"))),
                None => {}
            }
        }
        graph.ok_or(Error::Parse { line: text.lines().count(), message: "missing problem line".into() })
    }

    pub fn to_dimacs(&self) -> String {
        let edges = self.edges();
        let mut out = format!("p edge {} {}\n", self.n(), edges.len());
        for (u, v) in edges {
            out.push_str(&format!("e {} {}\n", u + 1, v + 1));
        }
        out
    }

    pub fn to_json(&self) -> GraphJson {
        GraphJson { n: self.n(), edges: self.edges().into_iter().map(|(u, v)| [u + 1, v + 1]).collect() }
    }

    pub fn from_json(json: &GraphJson) -> Result<Self> {
        let mut g = Graph::empty(json.n);
        for &[u, v] in &json.edges {
            if u == 0 || v == 0 {
                return Err(Error::IndexOutOfRange { index: 0, n: json.n });
            }
            g.try_add_edge(u - 1, v - 1)?;
        }
        Ok(g)
    }
}

fn parse_field(field: Option<&str>, what: &str) -> std::result::Result<usize, String> {
    let s = field.ok_or_else(|| format!("missing {what}"))?;
    s.parse().map_err(|_| format!("bad {what} `{s}`"))
}

/// Wire form: `{"n": 3, "edges": [[1, 2], [2, 3]]}`, 1-based with `u < v`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphJson {
    pub n: usize,
    pub edges: Vec<[usize; 2]>,
}

/// Rebuilds a graph as the union of the edges inside each maximal clique.
pub fn reconstruct_from_maximal_cliques(n: usize, cliques: &[VertexSet]) -> Result<Graph> {
    if n > 0 && cliques.is_empty() {
        return Err(Error::InvalidInput("no maximal cliques given for a nonempty graph".into()));
    }
    let mut g = Graph::empty(n);
    for c in cliques {
        let members: Vec<usize> = c.iter().collect();
        if let Some(&v) = members.iter().find(|&&v| v >= n) {
            return Err(Error::IndexOutOfRange { index: v + 1, n });
        }
        for (a, &u) in members.iter().enumerate() {
            for &v in &members[a + 1..] {
                g.add_edge(u, v);
            }
        }
    }
    Ok(g)
}
