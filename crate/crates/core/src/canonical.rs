//! Companion and Jordan forms of the characteristic polynomial.
//!
//! With `F` in bottom-row companion form and `J` the block-diagonal Jordan
//! form in root order, the confluent Vandermonde matrix satisfies
//! `F·V = V·J`.

use crate::cvm::{build_cvm, JordanBlockSpec};
use crate::densemat::DenseMatrix;
use crate::poly::{Poly, RootSpec};

#[derive(Debug, Clone, PartialEq)]
pub struct CanonicalPair {
    pub companion: DenseMatrix,
    pub jordan: DenseMatrix,
}

impl CanonicalPair {
    pub fn from_spec(spec: &RootSpec) -> Self {
        Self {
            companion: companion_matrix(&Poly::from_roots(spec)),
            jordan: jordan_matrix(spec),
        }
    }
}

/// Ones on the superdiagonal; last row `[-a_n, -a_{n-1}, …, -a_1]`.
///
/// This layout gives `F·f(λ) = λ·f(λ)` for `f(λ) = [1, λ, …, λ^{n-1}]ᵀ`
/// whenever `p(λ) = 0`.
pub fn companion_matrix(p: &Poly) -> DenseMatrix {
    let n = p.degree();
    assert!(n >= 1, "companion matrix needs degree >= 1");
    let mut f = DenseMatrix::zeros(n, n);
    for i in 0..n - 1 {
        f[(i, i + 1)] = 1.0;
    }
    for (j, &a) in p.coeffs().iter().rev().enumerate() {
        f[(n - 1, j)] = -a;
    }
    f
}

/// Block-diagonal matrix of elementary Jordan blocks in spec order.
pub fn jordan_matrix(spec: &RootSpec) -> DenseMatrix {
    let n = spec.n();
    let mut j = DenseMatrix::zeros(n, n);
    for (root, offset) in spec.iter().zip(spec.block_offsets()) {
        let block = JordanBlockSpec::new(root.lambda, root.multiplicity).to_matrix();
        for a in 0..root.multiplicity {
            for b in 0..root.multiplicity {
                j[(offset + a, offset + b)] = block[(a, b)];
            }
        }
    }
    j
}

/// `‖F·V - V·J‖_max`.
pub fn similarity_residual(spec: &RootSpec) -> f64 {
    let v = build_cvm(spec);
    let CanonicalPair { companion, jordan } = CanonicalPair::from_spec(spec);
    let fv = companion.matmul(&v).expect("square n×n");
    let vj = v.matmul(&jordan).expect("square n×n");
    fv.max_abs_diff(&vj).expect("same shape")
}
