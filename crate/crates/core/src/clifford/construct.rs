use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::scalar::Scalar;
use super::spinor::Spinor;
use super::witt::{apply_witt, is_tnp, WittVector};
use crate::error::{Error, Result};
use crate::limits::Limits;

fn check_dense(n: usize, limits: &Limits) -> Result<()> {
    if n > limits.max_full_spinor_n {
        return Err(Error::ResourceLimit(format!(
            "dense spinor needs n <= {}, got {n}",
            limits.max_full_spinor_n
        )));
    }
    Ok(())
}

/// `Φ(𝟙)` with every coefficient equal to one.
pub fn full_spinor<T: Scalar>(n: usize) -> Result<Spinor<T>> {
    full_spinor_with(n, &Limits::default())
}

pub fn full_spinor_with<T: Scalar>(n: usize, limits: &Limits) -> Result<Spinor<T>> {
    check_dense(n, limits)?;
    Ok(Spinor::from_terms(n, (0..1u64 << n).map(|s| (s, T::one()))))
}

/// `Φ(𝟙)` with seeded random nonzero coefficients in `±[1, 9]`, which keeps
/// accidental cancellations from hiding sign errors.
pub fn full_spinor_seeded(n: usize, seed: u64) -> Result<Spinor<i64>> {
    full_spinor_seeded_with(n, seed, &Limits::default())
}

pub fn full_spinor_seeded_with(n: usize, seed: u64, limits: &Limits) -> Result<Spinor<i64>> {
    check_dense(n, limits)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    Ok(Spinor::from_terms(
        n,
        (0..1u64 << n).map(|s| {
            let m = rng.random_range(1..=9i64);
            (s, if rng.random_bool(0.5) { m } else { -m })
        }),
    ))
}

/// `Φ(v₁,…,v_k) = v₁⋯v_k Φ(𝟙)` with the default `Φ(𝟙)`.
pub fn spinor_from_tnp<T: Scalar>(n: usize, vs: &[WittVector<T>]) -> Result<Spinor<T>> {
    spinor_from_tnp_on(vs, &full_spinor(n)?)
}

/// `v₁⋯v_k base`: applies `v_k` first and `v₁` last. The vectors must span
/// a totally null plane, otherwise no nonzero solution exists.
pub fn spinor_from_tnp_on<T: Scalar>(vs: &[WittVector<T>], base: &Spinor<T>) -> Result<Spinor<T>> {
    for v in vs {
        if v.n() != base.n() {
            return Err(Error::DimensionMismatch { expected: base.n(), found: v.n() });
        }
    }
    if !is_tnp(vs)? {
        return Err(Error::Contract(
            "vectors do not span a totally null plane, so the Cartan equation has only the zero solution".into(),
        ));
    }
    let mut phi = base.clone();
    for v in vs.iter().rev() {
        phi = apply_witt(v, &phi)?;
    }
    Ok(phi)
}
