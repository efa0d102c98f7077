/// Resource guards shared by the enumeration and dense-spinor code paths.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Limits {
    /// Cap on the number of maximal cliques enumerated.
    pub max_cliques: usize,
    /// Largest `n` for which the dense `2^n` spinor `Φ(𝟙)` is built.
    pub max_full_spinor_n: usize,
    /// Largest `n` for exact Cartan-kernel elimination over `2^n` unknowns.
    pub max_kernel_n: usize,
    /// Largest `n` for brute-force subset enumeration.
    pub max_exhaustive_n: usize,
}

impl Limits {
    /// Overrides every dense guard at once.
    pub fn with_dense_n(mut self, n: usize) -> Self {
        self.max_full_spinor_n = n;
        self.max_kernel_n = n;
        self.max_exhaustive_n = n;
        self
    }
}

impl Default for Limits {
    fn default() -> Self {
        Self { max_cliques: 1_000_000, max_full_spinor_n: 20, max_kernel_n: 14, max_exhaustive_n: 20 }
    }
}
