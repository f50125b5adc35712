//! Characteristic polynomials in factored and expanded form.

use crate::error::{CvmError, Result};

/// A distinct root together with its multiplicity.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Root {
    pub lambda: f64,
    pub multiplicity: usize,
}

/// Ordered list of pairwise-distinct roots with positive multiplicities.
///
/// Defines `p(s) = (s - λ₁)^{n₁} ⋯ (s - λ_r)^{n_r}` and the matrix dimension
/// `n = n₁ + ⋯ + n_r`. Distinctness is exact equality on the stored `f64`
/// values; nearly coincident roots are accepted.
#[derive(Debug, Clone, PartialEq)]
pub struct RootSpec {
    roots: Vec<Root>,
    n: usize,
}

impl RootSpec {
    pub fn new(roots: impl IntoIterator<Item = (f64, usize)>) -> Result<Self> {
        let roots: Vec<Root> = roots
            .into_iter()
            .map(|(lambda, multiplicity)| Root {
                lambda,
                multiplicity,
            })
            .collect();
        Self::from_roots(roots)
    }

    pub fn from_roots(roots: Vec<Root>) -> Result<Self> {
        if roots.is_empty() {
            return Err(CvmError::EmptySpec);
        }
        for (index, root) in roots.iter().enumerate() {
            if !root.lambda.is_finite() {
                return Err(CvmError::NonFiniteRoot {
                    index,
                    lambda: root.lambda,
                });
            }
            if root.multiplicity == 0 {
                return Err(CvmError::ZeroMultiplicity { index });
            }
            if let Some(first) = roots[..index].iter().position(|r| r.lambda == root.lambda) {
                return Err(CvmError::DuplicateRoot {
                    index,
                    first,
                    lambda: root.lambda,
                });
            }
        }
        let n = roots.iter().map(|r| r.multiplicity).sum();
        Ok(Self { roots, n })
    }

    /// Matrix dimension, the total degree of `p`.
    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of distinct roots.
    pub fn r(&self) -> usize {
        self.roots.len()
    }

    pub fn roots(&self) -> &[Root] {
        &self.roots
    }

    pub fn iter(&self) -> impl Iterator<Item = &Root> {
        self.roots.iter()
    }

    /// Row/column offset at which the block of root `k` starts.
    pub fn block_offsets(&self) -> Vec<usize> {
        self.roots
            .iter()
            .scan(0, |acc, r| {
                let start = *acc;
                *acc += r.multiplicity;
                Some(start)
            })
            .collect()
    }
}

/// Monic polynomial `sⁿ + a₁sⁿ⁻¹ + ⋯ + a_{n-1}s + a_n`.
///
/// Coefficients are stored as `[a₁, …, a_n]`, so `a₁` multiplies `sⁿ⁻¹`
/// and `a_n` is the constant term. The leading 1 is implicit. Use
/// [`Poly::a`] for 1-based access and [`Poly::ascending`] for the
/// constant-first layout used by interpolation.
#[derive(Debug, Clone, PartialEq)]
pub struct Poly {
    coeffs: Vec<f64>,
}

impl Poly {
    /// Wraps `[a₁, …, a_n]`.
    pub fn from_coeffs(coeffs: Vec<f64>) -> Self {
        Self { coeffs }
    }

    /// Expands `∏ (s - λ_k)^{n_k}` by multiplying in one linear factor at a
    /// time, in spec order. O(n²).
    pub fn from_roots(spec: &RootSpec) -> Self {
        let n = spec.n();
        let mut coeffs = Vec::with_capacity(n);
        for root in spec.iter() {
            for _ in 0..root.multiplicity {
                multiply_linear(&mut coeffs, root.lambda);
            }
        }
        Self { coeffs }
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len()
    }

    /// `[a₁, …, a_n]`.
    pub fn coeffs(&self) -> &[f64] {
        &self.coeffs
    }

    /// 1-based coefficient `a_i` (`a_0 = 1`).
    pub fn a(&self, i: usize) -> f64 {
        if i == 0 {
            1.0
        } else {
            self.coeffs[i - 1]
        }
    }

    /// Coefficients with ascending powers, leading 1 included (length n+1).
    pub fn ascending(&self) -> Vec<f64> {
        self.coeffs
            .iter()
            .rev()
            .copied()
            .chain(std::iter::once(1.0))
            .collect()
    }

    /// Horner evaluation.
    pub fn eval(&self, x: f64) -> f64 {
        self.coeffs.iter().fold(1.0, |acc, &a| acc * x + a)
    }

    /// Coefficients of `p'` in ascending powers; degree n-1, leading
    /// coefficient n. A degree-0 polynomial yields `[0.0]`.
    pub fn derivative(&self) -> Vec<f64> {
        let asc = self.ascending();
        if asc.len() == 1 {
            return vec![0.0];
        }
        asc.iter()
            .enumerate()
            .skip(1)
            .map(|(power, &c)| power as f64 * c)
            .collect()
    }
}

/// Convenience wrapper around [`Poly::from_roots`].
pub fn expand_from_roots(spec: &RootSpec) -> Poly {
    Poly::from_roots(spec)
}

// p(s) ← p(s)·(s - λ) on the a-indexed coefficients: a'_i = a_i - λ·a_{i-1}.
fn multiply_linear(coeffs: &mut Vec<f64>, lambda: f64) {
    coeffs.push(0.0);
    for i in (1..coeffs.len()).rev() {
        coeffs[i] -= lambda * coeffs[i - 1];
    }
    coeffs[0] -= lambda;
}

/// Evaluates an ascending coefficient vector by Horner's scheme.
pub fn horner_ascending(coeffs: &[f64], x: f64) -> f64 {
    coeffs.iter().rev().fold(0.0, |acc, &c| acc * x + c)
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    pub(crate) fn appendix() -> RootSpec {
        RootSpec::new(vec![(-0.5, 1), (-3.0, 2), (-2.0, 3), (-1.0, 4)]).unwrap()
    }

    #[test]
    fn appendix_expansion() {
        let p = Poly::from_roots(&appendix());
        let expected = [
            16.5, 119.0, 493.5, 1302.0, 2281.5, 2687.0, 2098.5, 1039.0, 294.0, 36.0,
        ];
        assert_eq!(p.degree(), 10);
        for (got, want) in p.coeffs().iter().zip(expected) {
            assert_relative_eq!(*got, want, max_relative = 1e-12);
        }
        assert_eq!(p.a(1), 16.5);
        assert_eq!(p.a(10), 36.0);
    }

    #[test]
    fn trivial_expansions() {
        let p = Poly::from_roots(&RootSpec::new(vec![(0.0, 1)]).unwrap());
        assert_eq!(p.coeffs(), &[0.0]);
        let p = Poly::from_roots(&RootSpec::new(vec![(1.0, 1), (-1.0, 1)]).unwrap());
        assert_eq!(p.coeffs(), &[0.0, -1.0]);
    }

    #[test]
    fn eval_examples() {
        let p = Poly::from_roots(&appendix());
        assert_eq!(p.eval(-3.0), 0.0);
        assert_eq!(p.eval(0.0), 36.0);
        let q = Poly::from_coeffs(vec![0.0, -1.0]);
        assert_eq!(q.eval(2.0), 3.0);
    }

    #[test]
    fn derivative_examples() {
        assert_eq!(
            Poly::from_coeffs(vec![0.0, -1.0]).derivative(),
            vec![0.0, 2.0]
        );
        assert_eq!(Poly::from_coeffs(vec![0.0]).derivative(), vec![1.0]);
        assert_eq!(Poly::from_coeffs(vec![]).derivative(), vec![0.0]);
    }

    #[test]
    fn derivative_at_simple_root_matches_product_rule() {
        let spec = appendix();
        let p = Poly::from_roots(&spec);
        let dp = horner_ascending(&p.derivative(), -0.5);
        // p'(λ₁) = ∏_{k≠1} (λ₁ - λ_k)^{n_k} at a simple root
        let oracle: f64 = spec.roots()[1..]
            .iter()
            .map(|r| (-0.5 - r.lambda).powi(r.multiplicity as i32))
            .product();
        assert!(oracle != 0.0);
        assert_relative_eq!(dp, oracle, max_relative = 1e-12);
    }

    #[test]
    fn rejects_invalid_specs() {
        assert_eq!(RootSpec::new(vec![]), Err(CvmError::EmptySpec));
        assert_eq!(
            RootSpec::new(vec![(1.0, 1), (2.0, 0)]),
            Err(CvmError::ZeroMultiplicity { index: 1 })
        );
        assert_eq!(
            RootSpec::new(vec![(1.0, 1), (2.0, 2), (1.0, 3)]),
            Err(CvmError::DuplicateRoot {
                index: 2,
                first: 0,
                lambda: 1.0
            })
        );
        assert!(matches!(
            RootSpec::new(vec![(f64::NAN, 1)]),
            Err(CvmError::NonFiniteRoot { index: 0, .. })
        ));
        // exact comparison: a nearby value is a distinct root
        assert!(RootSpec::new(vec![(1.0, 1), (1.0 + f64::EPSILON, 1)]).is_ok());
    }

    #[test]
    fn spec_dimensions() {
        let spec = appendix();
        assert_eq!(spec.n(), 10);
        assert_eq!(spec.r(), 4);
        assert_eq!(spec.block_offsets(), vec![0, 1, 3, 6]);
    }
}
