//! Exact linear algebra over ℚ on sparse rows.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

/// Sparse row, strictly increasing column indices, no stored zeros.
pub type SparseRow = Vec<(usize, BigRational)>;

pub fn rational(v: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(v))
}

/// Row-echelon basis built one row at a time.
#[derive(Clone, Debug, Default)]
pub struct Echelon {
    cols: usize,
    /// Pivot column → row whose leading entry (at that column) is 1.
    pivots: BTreeMap<usize, SparseRow>,
}

impl Echelon {
    pub fn new(cols: usize) -> Self {
        Self { cols, pivots: BTreeMap::new() }
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    pub fn is_full_rank(&self) -> bool {
        self.pivots.len() == self.cols
    }

    /// Reduces `row` against the basis and keeps the remainder if nonzero.
    /// Returns whether the rank grew.
    pub fn push(&mut self, mut row: SparseRow) -> bool {
        row.retain(|(_, v)| !v.is_zero());
        loop {
            let Some((lead, coeff)) = row.first().cloned() else { return false };
            debug_assert!(lead < self.cols);
            match self.pivots.get(&lead) {
                Some(pivot) => row = axpy(&row, &-coeff, pivot),
                None => {
                    let inv = coeff.recip();
                    for (_, v) in row.iter_mut() {
                        *v *= &inv;
                    }
                    self.pivots.insert(lead, row);
                    return true;
                }
            }
        }
    }

    /// Basis of the right null space, one dense vector per free column.
    pub fn kernel(&self) -> Vec<Vec<BigRational>> {
        let reduced = self.reduced();
        let free: Vec<usize> = (0..self.cols).filter(|c| !reduced.contains_key(c)).collect();
        free.iter()
            .map(|&f| {
                let mut v = vec![BigRational::zero(); self.cols];
                v[f] = BigRational::one();
                for (&p, row) in &reduced {
                    if let Ok(i) = row.binary_search_by_key(&f, |(c, _)| *c) {
                        v[p] = -row[i].1.clone();
                    }
                }
                v
            })
            .collect()
    }

    /// Fully reduced form: every pivot column is zero outside its own row.
    fn reduced(&self) -> BTreeMap<usize, SparseRow> {
        let mut done: BTreeMap<usize, SparseRow> = BTreeMap::new();
        for (&p, row) in self.pivots.iter().rev() {
            let mut row = row.clone();
            // Later pivots are already reduced; clear their columns here.
            let hits: Vec<(usize, BigRational)> =
                row.iter().filter(|(c, _)| *c != p && done.contains_key(c)).cloned().collect();
            for (c, v) in hits {
                row = axpy(&row, &-v, &done[&c]);
            }
            done.insert(p, row);
        }
        done
    }
}

/// `a + s·b` on sparse rows.
fn axpy(a: &SparseRow, s: &BigRational, b: &SparseRow) -> SparseRow {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        let take_a = j >= b.len() || (i < a.len() && a[i].0 < b[j].0);
        let take_b = i >= a.len() || (j < b.len() && b[j].0 < a[i].0);
        if take_a {
            out.push(a[i].clone());
            i += 1;
        } else if take_b {
            out.push((b[j].0, s * &b[j].1));
            j += 1;
        } else {
            let v = &a[i].1 + s * &b[j].1;
            if !v.is_zero() {
                out.push((a[i].0, v));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

/// Rank of a dense integer matrix.
pub fn rank(rows: &[Vec<i64>]) -> usize {
    let cols = rows.first().map_or(0, Vec::len);
    let mut e = Echelon::new(cols);
    for r in rows {
        e.push(r.iter().enumerate().filter(|(_, v)| **v != 0).map(|(c, &v)| (c, rational(v))).collect());
    }
    e.rank()
}
