//! Symmetric eigendecomposition via cyclic Jacobi rotations.
//!
//! The statistical pipeline only ever decomposes small matrices (p up to a
//! few dozen), where Jacobi is robust and, with a fixed sweep order, fully
//! deterministic across platforms.

use super::mat::{Mat, SymMatrix};
use crate::error::{Error, Result};

const MAX_SWEEPS: usize = 64;

/// Eigenvalues (ascending) with matching eigenvector columns.
#[derive(Debug, Clone)]
pub struct EigenDecomposition {
    /// Eigenvalues sorted ascending.
    pub eigenvalues: Vec<f64>,
    /// Column i is the unit eigenvector for `eigenvalues[i]`. Columns are
    /// sign-normalized so the largest-magnitude component is positive.
    pub eigenvectors: Mat,
}

impl EigenDecomposition {
    pub fn dim(&self) -> usize {
        self.eigenvalues.len()
    }

    pub fn eigenvector(&self, i: usize) -> Vec<f64> {
        self.eigenvectors.column(i)
    }

    /// Reconstruct V diag(f(lambda)) V'.
    pub fn reassemble(&self, f: impl Fn(f64) -> f64) -> SymMatrix {
        let n = self.dim();
        let mut out = Mat::zeros(n, n);
        for k in 0..n {
            let fl = f(self.eigenvalues[k]);
            if fl == 0.0 {
                continue;
            }
            for i in 0..n {
                let vik = self.eigenvectors[(i, k)];
                for j in 0..n {
                    out[(i, j)] += fl * vik * self.eigenvectors[(j, k)];
                }
            }
        }
        SymMatrix::from_mat(&out).expect("square by construction")
    }
}

/// Cyclic Jacobi eigendecomposition of a symmetric matrix.
///
/// Sweeps the upper triangle in row-major order until the off-diagonal mass
/// is negligible relative to the Frobenius norm. Eigenvalues come back
/// ascending; ties keep their pre-sort order.
pub fn sym_eigen(m: &SymMatrix) -> Result<EigenDecomposition> {
    if !m.is_finite() {
        return Err(Error::DomainError("matrix has non-finite entries".into()));
    }
    let n = m.dim();
    if n == 0 {
        return Err(Error::DomainError("empty matrix".into()));
    }
    let mut a = m.as_mat().clone();
    let mut v = Mat::identity(n);
    let norm = m.frobenius_norm().max(f64::MIN_POSITIVE);
    let tol = 1e-14 * norm;

    let mut converged = false;
    for _ in 0..MAX_SWEEPS {
        let mut off = 0.0;
        for p in 0..n {
            for q in (p + 1)..n {
                off += a[(p, q)] * a[(p, q)];
            }
        }
        if off.sqrt() <= tol {
            converged = true;
            break;
        }
        for p in 0..n.saturating_sub(1) {
            for q in (p + 1)..n {
                let apq = a[(p, q)];
                if apq.abs() <= 1e-300 {
                    continue;
                }
                let app = a[(p, p)];
                let aqq = a[(q, q)];
                let theta = 0.5 * (aqq - app) / apq;
                // smaller-angle root of t^2 + 2 t theta - 1 = 0
                let t = if theta.abs() > 1e150 {
                    0.5 / theta
                } else {
                    let sign = if theta >= 0.0 { 1.0 } else { -1.0 };
                    sign / (theta.abs() + (1.0 + theta * theta).sqrt())
                };
                let c = 1.0 / (1.0 + t * t).sqrt();
                let s = t * c;

                // rotate rows/columns p and q of A
                for k in 0..n {
                    let akp = a[(k, p)];
                    let akq = a[(k, q)];
                    a[(k, p)] = c * akp - s * akq;
                    a[(k, q)] = s * akp + c * akq;
                }
                for k in 0..n {
                    let apk = a[(p, k)];
                    let aqk = a[(q, k)];
                    a[(p, k)] = c * apk - s * aqk;
                    a[(q, k)] = s * apk + c * aqk;
                }
                a[(p, q)] = 0.0;
                a[(q, p)] = 0.0;

                for k in 0..n {
                    let vkp = v[(k, p)];
                    let vkq = v[(k, q)];
                    v[(k, p)] = c * vkp - s * vkq;
                    v[(k, q)] = s * vkp + c * vkq;
                }
            }
        }
    }
    if !converged {
        // final check after the sweep cap
        let mut off = 0.0;
        for p in 0..n {
            for q in (p + 1)..n {
                off += a[(p, q)] * a[(p, q)];
            }
        }
        if off.sqrt() > tol {
            return Err(Error::NumericalFailure(format!(
                "Jacobi did not converge in {MAX_SWEEPS} sweeps (off-diagonal {:.3e})",
                off.sqrt()
            )));
        }
    }

    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| a[(i, i)].partial_cmp(&a[(j, j)]).unwrap());

    let mut eigenvalues = Vec::with_capacity(n);
    let mut eigenvectors = Mat::zeros(n, n);
    for (new_col, &old_col) in order.iter().enumerate() {
        eigenvalues.push(a[(old_col, old_col)]);
        let mut col: Vec<f64> = (0..n).map(|i| v[(i, old_col)]).collect();
        canonicalize_sign(&mut col);
        for i in 0..n {
            eigenvectors[(i, new_col)] = col[i];
        }
    }
    Ok(EigenDecomposition {
        eigenvalues,
        eigenvectors,
    })
}

/// Flip `v` so its largest-magnitude component is positive (smallest index
/// wins on exact magnitude ties).
pub fn canonicalize_sign(v: &mut [f64]) {
    let mut idx = 0;
    let mut best = -1.0;
    for (i, x) in v.iter().enumerate() {
        if x.abs() > best {
            best = x.abs();
            idx = i;
        }
    }
    if v[idx] < 0.0 {
        for x in v.iter_mut() {
            *x = -*x;
        }
    }
}

/// Symmetric inverse square root with an eigenvalue floor:
/// V diag(max(lambda_i, floor)^{-1/2}) V'.
///
/// Equals the exact inverse square root when min lambda >= floor. Any
/// eigenvalue below `-floor` is treated as a genuine negative and rejected.
pub fn spd_sqrt_inverse(m: &SymMatrix, floor: f64) -> Result<SymMatrix> {
    if !(floor > 0.0) {
        return Err(Error::DomainError("floor must be positive".into()));
    }
    let eig = sym_eigen(m)?;
    if let Some(&min) = eig
        .eigenvalues
        .iter()
        .min_by(|a, b| a.partial_cmp(b).unwrap())
    {
        if min < -floor {
            return Err(Error::NotPositiveSemiDefinite(format!(
                "eigenvalue {min:.6e} below -floor ({floor:.3e})"
            )));
        }
    }
    Ok(eig.reassemble(|l| l.max(floor).powf(-0.5)))
}

/// Default eigenvalue floor for `spd_sqrt_inverse` given the matrix scale.
pub fn default_floor(m: &SymMatrix) -> f64 {
    1e-10 * m.frobenius_norm().max(1.0)
}
