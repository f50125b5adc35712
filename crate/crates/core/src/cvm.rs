//! Confluent Vandermonde matrix construction, determinant, and O(n²) inverse.
//!
//! For roots `λ_1..λ_r` with multiplicities `n_1..n_r`, block `k` of the
//! matrix holds the columns `f^{(d)}(λ_k)/d!`, `d = 0..n_k`, of
//! `f(s) = [1, s, …, s^{n-1}]ᵀ`, i.e. entry `(i, d) = C(i, d)·λ_k^{i-d}`.
//!
//! The inverse is the vertical stack of `n_k × n` blocks `W_k`. The last
//! column of `W_k` is the vector of auxiliary coefficients
//! `[K_{k,1}, …, K_{k,n_k}]`; moving left, each column is the previous one
//! multiplied by the elementary Jordan block `J_k` plus a multiple of the
//! last column, weighted by the characteristic polynomial's coefficients.

use crate::densemat::DenseMatrix;
use crate::error::{CvmError, Result};
use crate::poly::{Poly, RootSpec};

/// Elementary Jordan block: `lambda` on the diagonal, ones on the superdiagonal.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct JordanBlockSpec {
    pub lambda: f64,
    pub size: usize,
}

impl JordanBlockSpec {
    pub fn new(lambda: f64, size: usize) -> Self {
        assert!(size >= 1, "Jordan block must have size >= 1");
        Self { lambda, size }
    }

    /// `h ← J·h` in place: `h_i ← λ·h_i + h_{i+1}` with `h_{size} = 0`.
    pub fn apply_in_place(&self, h: &mut [f64]) {
        debug_assert_eq!(h.len(), self.size);
        for i in 0..h.len() {
            let next = h.get(i + 1).copied().unwrap_or(0.0);
            h[i] = self.lambda * h[i] + next;
        }
    }

    pub fn to_matrix(&self) -> DenseMatrix {
        let mut m = DenseMatrix::zeros(self.size, self.size);
        for i in 0..self.size {
            m[(i, i)] = self.lambda;
            if i + 1 < self.size {
                m[(i, i + 1)] = 1.0;
            }
        }
        m
    }
}

/// Counts scalar multiply-adds performed by the inversion kernels.
#[derive(Debug, Default, Clone, Copy, PartialEq, Eq)]
pub struct OpCounter {
    pub multiply_adds: u64,
}

impl OpCounter {
    #[inline]
    fn add(&mut self, n: usize) {
        self.multiply_adds += n as u64;
    }
}

/// One update of the `L` recursion, reported by [`compute_k_traced`].
///
/// Root indices `k` and `i` are 0-based; `l_value` is the unscaled
/// `L_{ki}^{(q+1)}(λ_k)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LStep {
    pub k: usize,
    pub q: usize,
    pub i: usize,
    pub l_value: f64,
}

/// Auxiliary coefficient table plus the scratch buffers of its recursion.
#[derive(Debug, Clone)]
pub struct CvmWorkspace {
    /// `k_table[k][j - 1] = K_{k,j}`, `j = 1..=n_k`.
    k_table: Vec<Vec<f64>>,
    /// `L^{(q)}/q!` per foreign root; slot `k` is unused while processing `k`.
    l_scaled: Vec<f64>,
    /// `(λ_k - λ_i)^q` per foreign root.
    powers: Vec<f64>,
}

impl CvmWorkspace {
    fn new(spec: &RootSpec) -> Self {
        Self {
            k_table: spec.iter().map(|r| vec![0.0; r.multiplicity]).collect(),
            l_scaled: vec![0.0; spec.r()],
            powers: vec![0.0; spec.r()],
        }
    }

    /// `K_{k,j}` with 1-based `k` and `j`, matching the usual notation.
    pub fn k(&self, k: usize, j: usize) -> f64 {
        self.k_table[k - 1][j - 1]
    }

    /// Auxiliary coefficients of root `k` (0-based), `[K_{k,1}, …, K_{k,n_k}]`.
    pub fn block(&self, k: usize) -> &[f64] {
        &self.k_table[k]
    }

    pub fn table(&self) -> &[Vec<f64>] {
        &self.k_table
    }
}

/// Builds the n×n confluent Vandermonde matrix in O(n²).
///
/// Columns of each block follow `c_d(i+1) = λ·c_d(i) + c_{d-1}(i)`, which
/// produces the binomial-weighted powers without forming factorials.
pub fn build_cvm(spec: &RootSpec) -> DenseMatrix {
    let n = spec.n();
    let mut v = DenseMatrix::zeros(n, n);
    let mut col = 0;
    for root in spec.iter() {
        let lambda = root.lambda;
        for d in 0..root.multiplicity {
            v[(d, col)] = 1.0;
            for i in d + 1..n {
                let prev_same = v[(i - 1, col)];
                let prev_lower = if d == 0 { 0.0 } else { v[(i - 1, col - 1)] };
                v[(i, col)] = lambda * prev_same + prev_lower;
            }
            col += 1;
        }
    }
    v
}

/// `det V = ∏_{i<j} (λ_j - λ_i)^{n_i·n_j}`, O(r²).
pub fn cvm_det(spec: &RootSpec) -> f64 {
    let roots = spec.roots();
    let mut det = 1.0;
    for j in 1..roots.len() {
        for i in 0..j {
            let exp = roots[i].multiplicity * roots[j].multiplicity;
            det *= powu(roots[j].lambda - roots[i].lambda, exp);
        }
    }
    det
}

fn powu(base: f64, exp: usize) -> f64 {
    match i32::try_from(exp) {
        Ok(e) => base.powi(e),
        Err(_) => base.powf(exp as f64),
    }
}

/// Fills the auxiliary coefficient table.
pub fn compute_k(spec: &RootSpec) -> CvmWorkspace {
    let mut ws = CvmWorkspace::new(spec);
    fill_k(spec, &mut ws, &mut OpCounter::default(), &mut |_| {});
    ws
}

/// [`compute_k`] that reports every `L` update to `observe`.
pub fn compute_k_traced(spec: &RootSpec, mut observe: impl FnMut(LStep)) -> CvmWorkspace {
    let mut ws = CvmWorkspace::new(spec);
    fill_k(spec, &mut ws, &mut OpCounter::default(), &mut observe);
    ws
}

// For each k:
//   K_{k,n_k} = 1 / ∏_{i≠k} (λ_k - λ_i)^{n_i}
//   for q = 0..n_k-2:
//     M_i ← ((λ_k - λ_i)^q · K_{k,n_k-q} - q·M_i) / (q+1)        (M = L/q!)
//     K_{k,n_k-q-1} = -Σ_{i≠k} n_i · M_i / (λ_k - λ_i)^{q+1}
fn fill_k(
    spec: &RootSpec,
    ws: &mut CvmWorkspace,
    ops: &mut OpCounter,
    observe: &mut dyn FnMut(LStep),
) {
    let roots = spec.roots();
    let r = roots.len();
    for (k, root_k) in roots.iter().enumerate() {
        let lambda_k = root_k.lambda;
        let n_k = root_k.multiplicity;

        let mut denom = 1.0;
        for (i, root_i) in roots.iter().enumerate() {
            if i != k {
                denom *= powu(lambda_k - root_i.lambda, root_i.multiplicity);
                ops.add(1);
            }
        }
        let block = &mut ws.k_table[k];
        block[n_k - 1] = 1.0 / denom;

        for i in 0..r {
            if i != k {
                ws.l_scaled[i] = 0.0;
                ws.powers[i] = 1.0;
            }
        }

        // Literal L^{(q+1)} = M^{(q+1)}·(q+1)!; only needed for tracing.
        let mut factorial = 1.0;
        for q in 0..n_k.saturating_sub(1) {
            let k_top = block[n_k - 1 - q];
            let qf = q as f64;
            factorial *= qf + 1.0;
            let mut sum = 0.0;
            for (i, root_i) in roots.iter().enumerate() {
                if i == k {
                    continue;
                }
                let delta = lambda_k - root_i.lambda;
                let m = (ws.powers[i] * k_top - qf * ws.l_scaled[i]) / (qf + 1.0);
                ws.l_scaled[i] = m;
                ws.powers[i] *= delta;
                sum += root_i.multiplicity as f64 * m / ws.powers[i];
                ops.add(4);
                observe(LStep {
                    k,
                    q,
                    i,
                    l_value: m * factorial,
                });
            }
            block[n_k - 2 - q] = -sum;
        }
    }
}

/// Inverse of the confluent Vandermonde matrix in O(n²).
pub fn invert_cvm(spec: &RootSpec) -> DenseMatrix {
    invert_cvm_counted(spec).0
}

/// [`invert_cvm`] together with the number of multiply-adds spent in the
/// auxiliary-coefficient recursion and the column recursion.
pub fn invert_cvm_counted(spec: &RootSpec) -> (DenseMatrix, OpCounter) {
    let n = spec.n();
    let poly = Poly::from_roots(spec);
    let mut ops = OpCounter::default();
    let mut ws = CvmWorkspace::new(spec);
    fill_k(spec, &mut ws, &mut ops, &mut |_| {});

    let mut inv = DenseMatrix::zeros(n, n);
    let mut row0 = 0;
    for (k, root) in spec.iter().enumerate() {
        let n_k = root.multiplicity;
        let lambda = root.lambda;
        let h_first = ws.block(k);
        let mut h: Vec<DoubleDouble> = h_first.iter().map(|&x| DoubleDouble::from(x)).collect();
        // h_1 goes to the last column, h_j to column n - j.
        for j in 1..=n {
            if j > 1 {
                let a = poly.a(j - 1);
                // h ← J_k·h + a·h_1, ascending so h[i + 1] is still the old value
                for i in 0..n_k {
                    let next = h.get(i + 1).copied().unwrap_or_default();
                    h[i] = h[i]
                        .mul_f64(lambda)
                        .add(next)
                        .add(DoubleDouble::product(a, h_first[i]));
                }
                ops.add(2 * n_k);
            }
            let col = n - j;
            for (d, value) in h.iter().enumerate() {
                inv[(row0 + d, col)] = value.to_f64();
            }
        }
        row0 += n_k;
    }
    (inv, ops)
}

/// Unevaluated sum `hi + lo` with `|lo| ≤ ulp(hi)/2`.
///
/// The column recursion is a Horner-type scheme whose intermediate values
/// can exceed the final entries by several orders of magnitude; carrying
/// the columns in double-double keeps the rounded result within a few ulps.
#[derive(Debug, Default, Clone, Copy, PartialEq)]
struct DoubleDouble {
    hi: f64,
    lo: f64,
}

impl From<f64> for DoubleDouble {
    fn from(hi: f64) -> Self {
        Self { hi, lo: 0.0 }
    }
}

impl DoubleDouble {
    #[inline]
    fn fast_two_sum(a: f64, b: f64) -> Self {
        let hi = a + b;
        Self {
            hi,
            lo: b - (hi - a),
        }
    }

    #[inline]
    fn two_sum(a: f64, b: f64) -> (f64, f64) {
        let s = a + b;
        let bb = s - a;
        (s, (a - (s - bb)) + (b - bb))
    }

    /// Exact product `a·b`.
    #[inline]
    fn product(a: f64, b: f64) -> Self {
        let hi = a * b;
        Self {
            hi,
            lo: a.mul_add(b, -hi),
        }
    }

    #[inline]
    fn mul_f64(self, c: f64) -> Self {
        let p = Self::product(self.hi, c);
        Self::fast_two_sum(p.hi, p.lo + self.lo * c)
    }

    #[inline]
    fn add(self, other: Self) -> Self {
        let (s, e) = Self::two_sum(self.hi, other.hi);
        Self::fast_two_sum(s, e + self.lo + other.lo)
    }

    #[inline]
    fn to_f64(self) -> f64 {
        self.hi + self.lo
    }
}

/// Solves `V·x = b` as `x = V⁻¹·b`.
pub fn solve_cvm(spec: &RootSpec, b: &[f64]) -> Result<Vec<f64>> {
    if b.len() != spec.n() {
        return Err(CvmError::DimensionMismatch {
            expected: format!("right-hand side of length {}", spec.n()),
            found: format!("length {}", b.len()),
        });
    }
    invert_cvm(spec).matvec(b)
}
