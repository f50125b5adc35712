//! Confluent Vandermonde matrices defined by the roots and multiplicities of a
//! monic characteristic polynomial.
//!
//! The crate builds the matrix, evaluates its determinant in closed form,
//! inverts it with an O(n²) recursion over auxiliary coefficients, and uses
//! the inverse for linear solves, Hermite interpolation, and checking the
//! companion/Jordan similarity `F·V = V·J`.
//!
//! ```
//! use cvm_core::{RootSpec, build_cvm, invert_cvm, densemat::DenseMatrix};
//!
//! let spec = RootSpec::new(vec![(-1.0, 2), (2.0, 1)]).unwrap();
//! let v = build_cvm(&spec);
//! let v_inv = invert_cvm(&spec);
//! let residual = v.matmul(&v_inv).unwrap().max_abs_diff(&DenseMatrix::identity(3)).unwrap();
//! assert!(residual < 1e-12);
//! ```

pub mod bench;
pub mod canonical;
pub mod cli;
pub mod cvm;
pub mod densemat;
pub mod error;
pub mod hermite;
pub mod poly;

pub use canonical::{companion_matrix, jordan_matrix, similarity_residual, CanonicalPair};
pub use cvm::{
    build_cvm, compute_k, cvm_det, invert_cvm, solve_cvm, CvmWorkspace, JordanBlockSpec,
};
pub use densemat::DenseMatrix;
pub use error::{CvmError, Result};
pub use hermite::{hermite_interpolate, poly_eval_derivative, HermiteData};
pub use poly::{expand_from_roots, Poly, Root, RootSpec};
