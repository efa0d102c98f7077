//! Symmetric eigendecomposition and the complex symmetric square root
//! `B = Oᵀ √Λ O` with `B² = A`.
//!
//! For an adjacency matrix the columns `zᵢ` of `B` satisfy `zⱼᵀzₖ = aⱼₖ`, so
//! each is a null vector (`zᵢᵀzᵢ = aᵢᵢ = 0`) and `xᵀAx = (Bx)²`.

use nalgebra::DMatrix;
use num_complex::Complex64;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::motzkin::SimplexVector;

const OFF_DIAGONAL_TOL: f64 = 1e-12;
const MAX_SWEEPS: usize = 100;

/// Eigenvalues (descending) and `O` whose rows are the matching unit
/// eigenvectors, so `A = Oᵀ Λ O`.
pub fn eigendecompose(a: &DMatrix<f64>) -> Result<(Vec<f64>, DMatrix<f64>)> {
    let n = a.nrows();
    if a.ncols() != n {
        return Err(Error::DimensionMismatch { expected: n, found: a.ncols() });
    }
    for i in 0..n {
        for j in i + 1..n {
            if a[(i, j)] != a[(j, i)] {
                return Err(Error::Contract(format!("matrix is not symmetric at ({}, {})", i + 1, j + 1)));
            }
        }
    }
    let (values, vectors) = jacobi(a.clone())?;
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&x, &y| values[y].total_cmp(&values[x]));
    let eigenvalues = order.iter().map(|&k| values[k]).collect();
    let o = DMatrix::from_fn(n, n, |r, c| vectors[(c, order[r])]);
    Ok((eigenvalues, o))
}

/// Cyclic Jacobi rotations. Returns the diagonal and the accumulated
/// rotation whose columns are eigenvectors.
fn jacobi(mut a: DMatrix<f64>) -> Result<(Vec<f64>, DMatrix<f64>)> {
    let n = a.nrows();
    let mut v = DMatrix::<f64>::identity(n, n);
    let scale = a.norm().max(1.0);
    for _ in 0..MAX_SWEEPS {
        if off_diagonal_norm(&a) <= OFF_DIAGONAL_TOL * scale {
            return Ok(((0..n).map(|i| a[(i, i)]).collect(), v));
        }
        for p in 0..n {
            for q in p + 1..n {
                let apq = a[(p, q)];
                if apq == 0.0 {
                    continue;
                }
                let theta = (a[(q, q)] - a[(p, p)]) / (2.0 * apq);
                let t = theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt());
                let t = if theta == 0.0 { 1.0 } else { t };
                let c = 1.0 / (t * t + 1.0).sqrt();
                let s = t * c;
                rotate(&mut a, &mut v, p, q, c, s);
            }
        }
    }
    if off_diagonal_norm(&a) <= OFF_DIAGONAL_TOL * scale {
        return Ok(((0..n).map(|i| a[(i, i)]).collect(), v));
    }
    Err(Error::Numeric(format!("Jacobi did not converge in {MAX_SWEEPS} sweeps")))
}

/// `A ← Jᵀ A J`, `V ← V J` for the rotation in the `(p, q)` plane.
fn rotate(a: &mut DMatrix<f64>, v: &mut DMatrix<f64>, p: usize, q: usize, c: f64, s: f64) {
    let n = a.nrows();
    for k in 0..n {
        let (akp, akq) = (a[(k, p)], a[(k, q)]);
        a[(k, p)] = c * akp - s * akq;
        a[(k, q)] = s * akp + c * akq;
    }
    for k in 0..n {
        let (apk, aqk) = (a[(p, k)], a[(q, k)]);
        a[(p, k)] = c * apk - s * aqk;
        a[(q, k)] = s * apk + c * aqk;
    }
    a[(p, q)] = 0.0;
    a[(q, p)] = 0.0;
    for k in 0..n {
        let (vkp, vkq) = (v[(k, p)], v[(k, q)]);
        v[(k, p)] = c * vkp - s * vkq;
        v[(k, q)] = s * vkp + c * vkq;
    }
}

fn off_diagonal_norm(a: &DMatrix<f64>) -> f64 {
    let n = a.nrows();
    let mut sum = 0.0;
    for i in 0..n {
        for j in 0..n {
            if i != j {
                sum += a[(i, j)] * a[(i, j)];
            }
        }
    }
    sum.sqrt()
}

/// `A = B²` together with the eigen-data it was built from.
#[derive(Clone, Debug)]
pub struct SqrtDecomposition {
    pub a: DMatrix<f64>,
    pub eigenvalues: Vec<f64>,
    /// Rows are eigenvectors.
    pub eigenvectors: DMatrix<f64>,
    pub b: DMatrix<Complex64>,
    pub zero_tol: f64,
    pub rank: usize,
}

/// Max-norm residuals of the decomposition invariants.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct Residuals {
    /// `‖O Oᵀ − 𝟙‖`
    pub orthogonality: f64,
    /// `‖B − Bᵀ‖`
    pub symmetry: f64,
    /// `‖B·B − A‖`
    pub square: f64,
    /// `max |(BᵀB)ᵢᵢ|`
    pub null_columns: f64,
    /// `‖Oᵀ Λ O − A‖`
    pub reconstruction: f64,
}

impl Residuals {
    pub fn within(&self, tol: f64) -> bool {
        self.orthogonality <= tol
            && self.symmetry == 0.0
            && self.square <= tol
            && self.null_columns <= tol
            && self.reconstruction <= tol
    }
}

/// Principal-branch square root: `√λ ≥ 0` for `λ ≥ 0`, `i√|λ|` otherwise.
pub fn sqrt_root(a: &DMatrix<f64>) -> Result<SqrtDecomposition> {
    let (eigenvalues, o) = eigendecompose(a)?;
    let n = a.nrows();
    let roots: Vec<Complex64> = eigenvalues
        .iter()
        .map(|&l| if l >= 0.0 { Complex64::new(l.sqrt(), 0.0) } else { Complex64::new(0.0, (-l).sqrt()) })
        .collect();
    let mut b = DMatrix::<Complex64>::zeros(n, n);
    for i in 0..n {
        for j in i..n {
            let entry: Complex64 = (0..n).map(|k| roots[k] * (o[(k, i)] * o[(k, j)])).sum();
            b[(i, j)] = entry;
            b[(j, i)] = entry;
        }
    }
    let zero_tol = 1e-9 * a.amax().max(1.0);
    let rank = eigenvalues.iter().filter(|l| l.abs() > zero_tol).count();
    Ok(SqrtDecomposition { a: a.clone(), eigenvalues, eigenvectors: o, b, zero_tol, rank })
}

impl SqrtDecomposition {
    pub fn n(&self) -> usize {
        self.a.nrows()
    }

    pub fn residuals(&self) -> Residuals {
        let n = self.n();
        let o = &self.eigenvectors;
        let orthogonality = (o * o.transpose() - DMatrix::<f64>::identity(n, n)).amax();
        let symmetry = (&self.b - self.b.transpose()).iter().map(|z| z.norm()).fold(0.0, f64::max);
        let a_c = self.a.map(|x| Complex64::new(x, 0.0));
        let square = (&self.b * &self.b - &a_c).iter().map(|z| z.norm()).fold(0.0, f64::max);
        let gram = self.b.transpose() * &self.b;
        let null_columns = (0..n).map(|i| gram[(i, i)].norm()).fold(0.0, f64::max);
        let lambda = DMatrix::from_diagonal(&nalgebra::DVector::from_vec(self.eigenvalues.clone()));
        let reconstruction = (o.transpose() * lambda * o - &self.a).amax();
        Residuals { orthogonality, symmetry, square, null_columns, reconstruction }
    }

    /// Column `zᵢ` of `B`.
    pub fn column(&self, i: usize) -> Vec<Complex64> {
        self.b.column(i).iter().copied().collect()
    }

    /// Row-major `[re, im]` pairs of `B`.
    pub fn b_pairs(&self) -> Vec<[f64; 2]> {
        let n = self.n();
        (0..n).flat_map(|i| (0..n).map(move |j| (i, j))).map(|(i, j)| [self.b[(i, j)].re, self.b[(i, j)].im]).collect()
    }
}

/// Imaginary parts above this are treated as a broken decomposition.
const IMAG_TOL: f64 = 1e-9;

/// `(Bx)·(Bx)` (no conjugation), which equals `xᵀAx` and is real.
pub fn gram_quadratic(decomp: &SqrtDecomposition, x: &SimplexVector) -> Result<f64> {
    let n = decomp.n();
    if x.len() != n {
        return Err(Error::DimensionMismatch { expected: n, found: x.len() });
    }
    let z: Vec<Complex64> =
        (0..n).map(|i| (0..n).map(|j| decomp.b[(i, j)] * x.as_slice()[j]).sum()).collect();
    let square: Complex64 = z.iter().map(|c| c * c).sum();
    if square.im.abs() > IMAG_TOL {
        return Err(Error::Numeric(format!("Z² has imaginary part {:e}", square.im)));
    }
    Ok(square.re)
}

#[derive(Clone, Debug, Serialize)]
pub struct DecomposeReport {
    pub n: usize,
    pub eigenvalues: Vec<f64>,
    pub rank: usize,
    pub zero_tol: f64,
    pub residuals: Residuals,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub b: Option<Vec<[f64; 2]>>,
}

impl SqrtDecomposition {
    pub fn report(&self, include_b: bool) -> DecomposeReport {
        DecomposeReport {
            n: self.n(),
            eigenvalues: self.eigenvalues.clone(),
            rank: self.rank,
            zero_tol: self.zero_tol,
            residuals: self.residuals(),
            b: include_b.then(|| self.b_pairs()),
        }
    }
}
