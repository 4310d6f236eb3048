//! Shared numerical primitives: small dense symmetric linear algebra,
//! special-function CDFs, quadrature and a reproducible random stream.

pub mod eigen;
pub mod mat;
pub mod quad;
pub mod rng;
pub mod special;

pub use eigen::{canonicalize_sign, default_floor, spd_sqrt_inverse, sym_eigen, EigenDecomposition};
pub use mat::{dot, norm2, Mat, SymMatrix};
pub use quad::{equispaced, integrate_grid};
pub use rng::RandomStream;
pub use special::{chi_square_quantile, chi_square_survival, normal_cdf, normal_quantile};
