//! Hermite interpolation through one confluent Vandermonde inversion.
//!
//! Node `λ_k` with multiplicity `n_k` carries the prescribed values
//! `P(λ_k), P'(λ_k), …, P^{(n_k-1)}(λ_k)`. Since column `(k, j)` of `V` is
//! `f^{(j)}(λ_k)/j!`, the coefficient vector `c` of `P` satisfies
//! `Vᵀ·c = d` with `d_{(k,j)} = y_{k,j}/j!`, so `c = (V⁻¹)ᵀ·d`.
//!
//! Coefficients here are ascending (`c[0]` is the constant term), unlike
//! the `a`-indexing of [`Poly`](crate::poly::Poly).

use crate::cvm::invert_cvm;
use crate::error::{CvmError, Result};
use crate::poly::{horner_ascending, RootSpec};

/// Nodes plus, for each node, derivative values of orders `0..n_k`.
#[derive(Debug, Clone, PartialEq)]
pub struct HermiteData {
    spec: RootSpec,
    values: Vec<Vec<f64>>,
}

impl HermiteData {
    pub fn new(spec: RootSpec, values: Vec<Vec<f64>>) -> Result<Self> {
        if values.len() != spec.r() {
            return Err(CvmError::DimensionMismatch {
                expected: format!("{} derivative lists", spec.r()),
                found: format!("{}", values.len()),
            });
        }
        for (root, (r, ys)) in spec.iter().zip(&values).enumerate() {
            if ys.len() != r.multiplicity {
                return Err(CvmError::HermiteShape {
                    root,
                    expected: r.multiplicity,
                    found: ys.len(),
                });
            }
        }
        Ok(Self { spec, values })
    }

    pub fn spec(&self) -> &RootSpec {
        &self.spec
    }

    /// `values()[k][j]` is the prescribed `j`-th derivative at root `k`.
    pub fn values(&self) -> &[Vec<f64>] {
        &self.values
    }
}

/// Ascending coefficients `c_0..c_{n-1}` of the unique polynomial of degree
/// below `n` meeting every prescribed derivative value.
pub fn hermite_interpolate(data: &HermiteData) -> Vec<f64> {
    let n = data.spec.n();
    let mut d = Vec::with_capacity(n);
    for ys in &data.values {
        let mut factorial = 1.0;
        for (j, &y) in ys.iter().enumerate() {
            if j > 0 {
                factorial *= j as f64;
            }
            d.push(y / factorial);
        }
    }
    let inv = invert_cvm(&data.spec);
    let mut c = vec![0.0; n];
    for (i, &di) in d.iter().enumerate() {
        for (cj, &v) in c.iter_mut().zip(inv.row(i)) {
            *cj += v * di;
        }
    }
    c
}

/// `order`-th derivative of `Σ c_m x^m` at `x`.
pub fn poly_eval_derivative(c: &[f64], order: usize, x: f64) -> f64 {
    let mut coeffs = c.to_vec();
    for _ in 0..order {
        if coeffs.len() <= 1 {
            return 0.0;
        }
        coeffs = coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(m, &cm)| m as f64 * cm)
            .collect();
    }
    horner_ascending(&coeffs, x)
}
