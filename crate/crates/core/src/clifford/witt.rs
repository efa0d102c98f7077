//! Grade-1 elements in the Witt basis and their left action on spinors.
//!
//! The Witt basis relates to orthonormal generators by
//! `p_j = ½(γ_{2j-1} + iγ_{2j})`, `q_j = ½(γ_{2j-1} - iγ_{2j})`, and obeys
//! `[p_j, p_k]₊ = [q_j, q_k]₊ = 0`, `[p_j, q_k]₊ = δ_jk`.

use super::scalar::Scalar;
use super::spinor::Spinor;
use crate::error::{Error, Result};
use crate::par;

/// `v = Σ_j (α_j p_j + β_j q_j)`.
#[derive(Clone, Debug, PartialEq)]
pub struct WittVector<T> {
    pub alpha: Vec<T>,
    pub beta: Vec<T>,
}

impl<T: Scalar> WittVector<T> {
    pub fn zero(n: usize) -> Self {
        Self { alpha: vec![T::zero(); n], beta: vec![T::zero(); n] }
    }

    pub fn new(alpha: Vec<T>, beta: Vec<T>) -> Result<Self> {
        if alpha.len() != beta.len() {
            return Err(Error::DimensionMismatch { expected: alpha.len(), found: beta.len() });
        }
        Ok(Self { alpha, beta })
    }

    /// `p_j`, 1-based.
    pub fn p(n: usize, j: usize) -> Self {
        let mut v = Self::zero(n);
        v.alpha[j - 1] = T::one();
        v
    }

    /// `q_j`, 1-based.
    pub fn q(n: usize, j: usize) -> Self {
        let mut v = Self::zero(n);
        v.beta[j - 1] = T::one();
        v
    }

    pub fn n(&self) -> usize {
        self.alpha.len()
    }

    pub fn add(&self, other: &Self) -> Self {
        let zip = |a: &[T], b: &[T]| a.iter().zip(b).map(|(x, y)| x.clone() + y.clone()).collect();
        Self { alpha: zip(&self.alpha, &other.alpha), beta: zip(&self.beta, &other.beta) }
    }

    pub fn scale(&self, c: &T) -> Self {
        let s = |a: &[T]| a.iter().map(|x| c.clone() * x.clone()).collect();
        Self { alpha: s(&self.alpha), beta: s(&self.beta) }
    }

    pub fn is_zero(&self) -> bool {
        self.alpha.iter().chain(&self.beta).all(T::is_zero)
    }

    /// `[v, w]₊ = Σ_l (α_l β'_l + α'_l β_l)`, a multiple of the identity.
    pub fn anticommutator(&self, other: &Self) -> Result<T> {
        check_dim(self.n(), other.n())?;
        Ok((0..self.n()).fold(T::zero(), |acc, l| {
            acc + self.alpha[l].clone() * other.beta[l].clone() + other.alpha[l].clone() * self.beta[l].clone()
        }))
    }

    /// `v² = Σ_l α_l β_l`.
    pub fn square(&self) -> T {
        (0..self.n()).fold(T::zero(), |acc, l| acc + self.alpha[l].clone() * self.beta[l].clone())
    }

    pub fn is_null(&self) -> bool {
        self.square().is_zero()
    }

    pub fn map<U: Scalar>(&self, f: impl Fn(&T) -> U) -> WittVector<U> {
        WittVector { alpha: self.alpha.iter().map(&f).collect(), beta: self.beta.iter().map(&f).collect() }
    }
}

fn check_dim(expected: usize, found: usize) -> Result<()> {
    if expected == found { Ok(()) } else { Err(Error::DimensionMismatch { expected, found }) }
}

fn check_index(j: usize, n: usize) -> Result<()> {
    if (1..=n).contains(&j) { Ok(()) } else { Err(Error::IndexOutOfRange { index: j, n }) }
}

fn signed<T: Scalar>(sign: i8, c: T) -> T {
    if sign < 0 { -c } else { c }
}

/// `q_j Φ`: raises each `ω_s` lacking `q_j`, annihilates the rest.
pub fn apply_q<T: Scalar>(j: usize, phi: &Spinor<T>) -> Result<Spinor<T>> {
    check_index(j, phi.n())?;
    let mut out = Spinor::zero(phi.n());
    for (s, c) in phi.iter() {
        if !s.has_q(j) {
            out.add_term(s.with_q(j), signed(s.ladder_sign(j), c.clone()));
        }
    }
    Ok(out)
}

/// `p_j Φ`: lowers each `ω_s` containing `q_j`, annihilates the rest.
pub fn apply_p<T: Scalar>(j: usize, phi: &Spinor<T>) -> Result<Spinor<T>> {
    check_index(j, phi.n())?;
    let mut out = Spinor::zero(phi.n());
    for (s, c) in phi.iter() {
        if s.has_q(j) {
            out.add_term(s.without_q(j), signed(s.ladder_sign(j), c.clone()));
        }
    }
    Ok(out)
}

/// Spinors above this many components have their ladder terms evaluated in
/// parallel.
const PARALLEL_NNZ: usize = 1 << 12;

/// `vΦ = Σ_j α_j p_j Φ + β_j q_j Φ`.
pub fn apply_witt<T: Scalar>(v: &WittVector<T>, phi: &Spinor<T>) -> Result<Spinor<T>> {
    let n = phi.n();
    check_dim(n, v.n())?;
    let term = |j: usize| -> Spinor<T> {
        let mut out = Spinor::zero(n);
        let (a, b) = (&v.alpha[j - 1], &v.beta[j - 1]);
        if a.is_zero() && b.is_zero() {
            return out;
        }
        for (s, c) in phi.iter() {
            let sign = s.ladder_sign(j);
            if s.has_q(j) {
                if !a.is_zero() {
                    out.add_term(s.without_q(j), signed(sign, a.clone() * c.clone()));
                }
            } else if !b.is_zero() {
                out.add_term(s.with_q(j), signed(sign, b.clone() * c.clone()));
            }
        }
        out
    };
    let terms: Vec<Spinor<T>> = if phi.nnz() >= PARALLEL_NNZ {
        par::map_range(n, |j| term(j + 1))
    } else {
        (1..=n).map(term).collect()
    };
    let mut out = Spinor::zero(n);
    for t in terms {
        for (s, c) in t.iter() {
            out.add_term(s, c.clone());
        }
    }
    Ok(out)
}

/// Whether the vectors are null and pairwise anticommuting, i.e. span a
/// totally null plane.
pub fn is_tnp<T: Scalar>(vs: &[WittVector<T>]) -> Result<bool> {
    let Some(first) = vs.first() else { return Ok(true) };
    for v in vs {
        check_dim(first.n(), v.n())?;
    }
    for (i, v) in vs.iter().enumerate() {
        if !v.is_null() {
            return Ok(false);
        }
        for w in &vs[i + 1..] {
            if !v.anticommutator(w)?.is_zero() {
                return Ok(false);
            }
        }
    }
    Ok(true)
}
