use num_rational::BigRational;
use num_traits::Zero;

use super::fock::FockIndex;
use super::scalar::{Scalar, ToRational};
use super::spinor::Spinor;
use super::witt::{apply_witt, WittVector};
use crate::error::{Error, Result};
use crate::exact::{Echelon, SparseRow};
use crate::limits::Limits;

/// Common solutions `{Φ : v_i Φ = 0 for all i}` of the Cartan equation.
#[derive(Clone, Debug)]
pub struct CartanKernel {
    pub dimension: usize,
    pub basis: Vec<Spinor<BigRational>>,
}

pub fn cartan_kernel<T: Scalar + ToRational>(n: usize, vs: &[WittVector<T>]) -> Result<CartanKernel> {
    cartan_kernel_with(n, vs, &Limits::default())
}

/// Solves the stacked `2^n`-unknown linear system exactly over ℚ.
pub fn cartan_kernel_with<T: Scalar + ToRational>(
    n: usize,
    vs: &[WittVector<T>],
    limits: &Limits,
) -> Result<CartanKernel> {
    if n > limits.max_kernel_n {
        return Err(Error::ResourceLimit(format!("Cartan kernel needs n <= {}, got {n}", limits.max_kernel_n)));
    }
    let vs: Vec<WittVector<BigRational>> = vs
        .iter()
        .map(|v| {
            if v.n() != n {
                return Err(Error::DimensionMismatch { expected: n, found: v.n() });
            }
            Ok(v.map(ToRational::to_rational))
        })
        .collect::<Result<_>>()?;
    let size = 1usize << n;
    let mut echelon = Echelon::new(size);
    'outer: for v in &vs {
        for t in 0..size as u64 {
            echelon.push(equation_row(v, FockIndex(t)));
            if echelon.is_full_rank() {
                break 'outer;
            }
        }
    }
    let basis: Vec<Spinor<BigRational>> = echelon
        .kernel()
        .into_iter()
        .map(|dense| {
            Spinor::from_terms(n, dense.into_iter().enumerate().filter(|(_, c)| !c.is_zero()).map(|(s, c)| (s as u64, c)))
        })
        .collect();
    for phi in &basis {
        for v in &vs {
            if !apply_witt(v, phi)?.is_zero() {
                return Err(Error::Numeric("kernel vector fails the Cartan equation".into()));
            }
        }
    }
    Ok(CartanKernel { dimension: basis.len(), basis })
}

/// Coefficients of `(vΦ)_t` in terms of the unknowns `ξ_s`.
fn equation_row(v: &WittVector<BigRational>, t: FockIndex) -> SparseRow {
    let mut row: SparseRow = Vec::new();
    for j in 1..=v.n() {
        let sign = t.ladder_sign(j);
        // (p_j Φ)_t reads ξ_{t+q_j}; (q_j Φ)_t reads ξ_{t-q_j}.
        let (source, coeff) =
            if t.has_q(j) { (t.without_q(j), &v.beta[j - 1]) } else { (t.with_q(j), &v.alpha[j - 1]) };
        if !coeff.is_zero() {
            let c = if sign < 0 { -coeff.clone() } else { coeff.clone() };
            row.push((source.0 as usize, c));
        }
    }
    row.sort_by_key(|(c, _)| *c);
    row
}
