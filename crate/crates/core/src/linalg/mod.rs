//! Exact dense linear algebra over `Q` and `GF(p)`.

mod matrix;
mod poly;
mod spectral;
mod subspace;

pub use matrix::Matrix;
pub use poly::Poly;
pub use spectral::{
    char_poly, fitting_decomposition, is_nilpotent_operator, rational_eigenvalues,
    simultaneous_weight_spaces, Eigenpair, Spectrum, Weight, WeightDecomposition,
};
pub use subspace::Subspace;

/// Reduced row-echelon form of `m` with zero rows dropped.
pub fn rref(m: &Matrix) -> Matrix {
    m.rref()
}
