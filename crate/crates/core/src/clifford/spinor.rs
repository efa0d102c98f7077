use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use serde_json::Value;

use super::fock::{FockIndex, MAX_N};
use super::scalar::{JsonCoeff, Scalar};
use crate::error::{Error, Result};

/// `Φ = Σ ξ_s ω_s` stored sparsely; zero coefficients are never kept.
#[derive(Clone, Debug, PartialEq)]
pub struct Spinor<T> {
    n: usize,
    components: BTreeMap<FockIndex, T>,
}

impl<T: Scalar> Spinor<T> {
    pub fn zero(n: usize) -> Self {
        assert!(n <= MAX_N, "Fock basis size {n} exceeds {MAX_N}");
        Self { n, components: BTreeMap::new() }
    }

    /// The basis element `ω_s` with coefficient one.
    pub fn basis(n: usize, s: u64) -> Self {
        Self::monomial(n, s, T::one())
    }

    pub fn monomial(n: usize, s: u64, coeff: T) -> Self {
        let mut out = Self::zero(n);
        out.add_term(FockIndex(s), coeff);
        out
    }

    pub fn from_terms<I: IntoIterator<Item = (u64, T)>>(n: usize, terms: I) -> Self {
        let mut out = Self::zero(n);
        for (s, c) in terms {
            out.add_term(FockIndex(s), c);
        }
        out
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Adds `coeff · ω_s`, dropping the entry if it cancels.
    pub fn add_term(&mut self, s: FockIndex, coeff: T) {
        assert!(s.0 >> self.n == 0, "Fock index {} out of range for n = {}", s.0, self.n);
        if coeff.is_zero() {
            return;
        }
        match self.components.remove(&s) {
            Some(old) => {
                let sum = old + coeff;
                if !sum.is_zero() {
                    self.components.insert(s, sum);
                }
            }
            None => {
                self.components.insert(s, coeff);
            }
        }
    }

    pub fn get(&self, s: u64) -> T {
        self.components.get(&FockIndex(s)).cloned().unwrap_or_else(T::zero)
    }

    pub fn nnz(&self) -> usize {
        self.components.len()
    }

    pub fn is_zero(&self) -> bool {
        self.components.is_empty()
    }

    /// Components in ascending Fock index.
    pub fn iter(&self) -> impl Iterator<Item = (FockIndex, &T)> {
        self.components.iter().map(|(k, v)| (*k, v))
    }

    pub fn indices(&self) -> Vec<u64> {
        self.components.keys().map(|k| k.0).collect()
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.n, other.n);
        let mut out = self.clone();
        for (k, v) in other.iter() {
            out.add_term(k, v.clone());
        }
        out
    }

    pub fn scale(&self, c: &T) -> Self {
        let mut out = Self::zero(self.n);
        for (k, v) in self.iter() {
            out.add_term(k, c.clone() * v.clone());
        }
        out
    }

    pub fn neg(&self) -> Self {
        Self { n: self.n, components: self.components.iter().map(|(k, v)| (*k, -v.clone())).collect() }
    }

    /// `self = ±other`.
    pub fn equals_up_to_sign(&self, other: &Self) -> bool {
        self == other || *self == other.neg()
    }

    pub fn map<U: Scalar>(&self, f: impl Fn(&T) -> U) -> Spinor<U> {
        let mut out = Spinor::zero(self.n);
        for (k, v) in self.iter() {
            out.add_term(k, f(v));
        }
        out
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SpinorJson {
    pub n: usize,
    pub components: Vec<ComponentJson>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ComponentJson {
    pub index: u64,
    pub bits: String,
    pub coeff: Value,
}

impl<T: Scalar + JsonCoeff> Spinor<T> {
    pub fn to_json(&self) -> SpinorJson {
        SpinorJson {
            n: self.n,
            components: self
                .iter()
                .map(|(k, v)| ComponentJson { index: k.0, bits: k.bit_string(self.n), coeff: v.to_json() })
                .collect(),
        }
    }

    pub fn from_json(json: &SpinorJson) -> Result<Self> {
        if json.n > MAX_N {
            return Err(Error::InvalidInput(format!("spinor size {} exceeds {MAX_N}", json.n)));
        }
        let mut out = Self::zero(json.n);
        for c in &json.components {
            if c.index >> json.n != 0 {
                return Err(Error::InvalidInput(format!("index {} out of range for n = {}", c.index, json.n)));
            }
            if c.bits != FockIndex(c.index).bit_string(json.n) {
                return Err(Error::InvalidInput(format!("bits `{}` disagree with index {}", c.bits, c.index)));
            }
            let coeff = T::from_json(&c.coeff)
                .ok_or_else(|| Error::InvalidInput(format!("bad coefficient at index {}", c.index)))?;
            if coeff.is_zero() {
                return Err(Error::InvalidInput(format!("stored zero at index {}", c.index)));
            }
            out.add_term(FockIndex(c.index), coeff);
        }
        Ok(out)
    }
}
