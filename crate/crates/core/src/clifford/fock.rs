use std::fmt;

use serde::{Deserialize, Serialize};

/// Largest basis size a Fock index can address.
pub const MAX_N: usize = 62;

/// Index `s` of the Fock basis element `ω_s`: bit `j-1` is set exactly when
/// `q_j` is present in `ω_s = q_{j1}…q_{jr} ω₀` (ascending indices).
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct FockIndex(pub u64);

impl FockIndex {
    pub const VACUUM: FockIndex = FockIndex(0);

    pub fn bits(self) -> u64 {
        self.0
    }

    /// Whether `q_j` (1-based) is present.
    pub fn has_q(self, j: usize) -> bool {
        self.0 >> (j - 1) & 1 == 1
    }

    pub fn popcount(self) -> u32 {
        self.0.count_ones()
    }

    /// `+1` or `-1` for moving a ladder operator with index `j` past the
    /// `q`'s of smaller index in `ω_s`.
    pub fn ladder_sign(self, j: usize) -> i8 {
        let below = self.0 & ((1u64 << (j - 1)) - 1);
        if below.count_ones().is_multiple_of(2) { 1 } else { -1 }
    }

    pub fn with_q(self, j: usize) -> FockIndex {
        FockIndex(self.0 | 1 << (j - 1))
    }

    pub fn without_q(self, j: usize) -> FockIndex {
        FockIndex(self.0 & !(1 << (j - 1)))
    }

    /// `n`-digit binary string, rightmost digit = `q₁`.
    pub fn bit_string(self, n: usize) -> String {
        if n == 0 {
            return String::new();
        }
        format!("{:0width$b}", self.0, width = n)
    }
}

impl fmt::Display for FockIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ω{}", self.0)
    }
}
