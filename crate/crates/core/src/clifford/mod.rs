//! Fock-space spinor engine: ladder actions of Witt-basis vectors, totally
//! null plane tests, spinors built from TNPs and exact Cartan kernels.

mod construct;
mod fock;
mod kernel;
pub mod random;
mod scalar;
mod spinor;
mod witt;

pub use construct::{
    full_spinor, full_spinor_seeded, full_spinor_seeded_with, full_spinor_with, spinor_from_tnp, spinor_from_tnp_on,
};
pub use fock::{FockIndex, MAX_N};
pub use kernel::{cartan_kernel, cartan_kernel_with, CartanKernel};
pub use scalar::{JsonCoeff, Scalar, ToRational};
pub use spinor::{ComponentJson, Spinor, SpinorJson};
pub use witt::{apply_p, apply_q, apply_witt, is_tnp, WittVector};
