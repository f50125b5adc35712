//! Shared generators and independent oracles for the integration tests.
#![allow(dead_code)]

use cvm_core::RootSpec;
use rand::Rng;

/// Bounds for randomly generated root specifications.
#[derive(Debug, Clone, Copy)]
pub struct Family {
    pub lo: f64,
    pub hi: f64,
    pub min_gap: f64,
    pub max_mult: usize,
    pub max_n: usize,
    pub max_r: usize,
}

impl Family {
    /// n ≤ 24, roots in [-4, 4] with gap ≥ 0.25, multiplicities ≤ 6.
    pub const WIDE: Family = Family {
        lo: -4.0,
        hi: 4.0,
        min_gap: 0.25,
        max_mult: 6,
        max_n: 24,
        max_r: 8,
    };

    /// n ≤ 16, |λ| ≤ 3, gap ≥ 0.25.
    pub const CANONICAL: Family = Family {
        lo: -3.0,
        hi: 3.0,
        min_gap: 0.25,
        max_mult: 6,
        max_n: 16,
        max_r: 8,
    };

    /// Interpolation nodes: [-1, 1], gap ≥ 0.3, multiplicities ≤ 3, n ≤ 16.
    pub const HERMITE: Family = Family {
        lo: -1.0,
        hi: 1.0,
        min_gap: 0.3,
        max_mult: 3,
        max_n: 16,
        max_r: 6,
    };

    /// Well-conditioned desk family used by the core property tests.
    pub const DESK: Family = Family {
        lo: -1.5,
        hi: 1.5,
        min_gap: 0.5,
        max_mult: 3,
        max_n: 12,
        max_r: 4,
    };
}

pub fn random_spec<R: Rng>(rng: &mut R, fam: Family) -> RootSpec {
    // rejection sampling stalls when r roots barely fit
    let fits = ((fam.hi - fam.lo) / (1.25 * fam.min_gap)) as usize + 1;
    let max_r = fam.max_r.min(fits).max(1);
    let mults = loop {
        let r = rng.gen_range(1..=max_r);
        let mults: Vec<usize> = (0..r).map(|_| rng.gen_range(1..=fam.max_mult)).collect();
        if mults.iter().sum::<usize>() <= fam.max_n {
            break mults;
        }
    };
    let roots = 'outer: loop {
        let mut roots: Vec<f64> = Vec::with_capacity(mults.len());
        for _ in 0..10_000 {
            if roots.len() == mults.len() {
                break 'outer roots;
            }
            let x = rng.gen_range(fam.lo..=fam.hi);
            if roots.iter().all(|y| (x - y).abs() >= fam.min_gap) {
                roots.push(x);
            }
        }
        if roots.len() == mults.len() {
            break roots;
        }
    };
    RootSpec::new(roots.into_iter().zip(mults)).unwrap()
}

/// `(k, q, i, L^{(q+1)})`
pub type LTrace = (usize, usize, usize, f64);

/// Auxiliary coefficients straight from the factorial formulas:
/// `L^{(q+1)} = q!·Δ^q·K_{n_k-q} - q·L^{(q)}`,
/// `K_{n_k-q-1} = -1/(q+1)! · Σ n_i L^{(q+1)} / Δ^{q+1}`.
/// Also returns every `(k, q, i, L^{(q+1)})` in iteration order.
pub fn literal_k(spec: &RootSpec) -> (Vec<Vec<f64>>, Vec<LTrace>) {
    let roots = spec.roots();
    let fact = |m: usize| (1..=m).fold(1.0_f64, |f, x| f * x as f64);
    let mut table = Vec::new();
    let mut trace = Vec::new();
    for (k, rk) in roots.iter().enumerate() {
        let nk = rk.multiplicity;
        let mut kk = vec![0.0; nk + 1]; // 1-based
        let mut denom = 1.0;
        for (i, ri) in roots.iter().enumerate() {
            if i != k {
                denom *= (rk.lambda - ri.lambda).powi(ri.multiplicity as i32);
            }
        }
        kk[nk] = 1.0 / denom;
        let mut l = vec![0.0; roots.len()];
        for q in 0..nk.saturating_sub(1) {
            let mut sum = 0.0;
            for (i, ri) in roots.iter().enumerate() {
                if i == k {
                    continue;
                }
                let delta = rk.lambda - ri.lambda;
                l[i] = fact(q) * delta.powi(q as i32) * kk[nk - q] - q as f64 * l[i];
                trace.push((k, q, i, l[i]));
                sum += ri.multiplicity as f64 * l[i] / delta.powi(q as i32 + 1);
            }
            kk[nk - q - 1] = -sum / fact(q + 1);
        }
        table.push(kk[1..].to_vec());
    }
    (table, trace)
}

/// Coefficients (ascending) of the Lagrange interpolant through `(x_k, y_k)`,
/// expanded from the product form of each basis polynomial.
pub fn lagrange_coeffs(xs: &[f64], ys: &[f64]) -> Vec<f64> {
    let n = xs.len();
    let mut out = vec![0.0; n];
    for k in 0..n {
        let mut basis = vec![1.0];
        let mut scale = 1.0;
        for m in 0..n {
            if m == k {
                continue;
            }
            // basis ← basis · (x - x_m)
            let mut next = vec![0.0; basis.len() + 1];
            for (p, &b) in basis.iter().enumerate() {
                next[p + 1] += b;
                next[p] -= xs[m] * b;
            }
            basis = next;
            scale *= xs[k] - xs[m];
        }
        for (o, b) in out.iter_mut().zip(&basis) {
            *o += ys[k] * b / scale;
        }
    }
    out
}

/// `∏ (x - λ_k)^{n_k}` evaluated directly.
pub fn product_form(spec: &RootSpec, x: f64) -> f64 {
    spec.iter()
        .map(|r| (x - r.lambda).powi(r.multiplicity as i32))
        .product()
}

/// `‖a - b‖∞ / ‖b‖∞`.
pub fn normwise_rel(a: &[f64], b: &[f64]) -> f64 {
    let diff = a
        .iter()
        .zip(b)
        .fold(0.0_f64, |m, (x, y)| m.max((x - y).abs()));
    let scale = b.iter().fold(0.0_f64, |m, y| m.max(y.abs()));
    if scale == 0.0 {
        diff
    } else {
        diff / scale
    }
}
