//! Spectral radius with certificates, the closed-form book formula, the
//! quadratic and regular eigenvalue bounds, exact characteristic-polynomial
//! arithmetic for tie resolution, and the L^λ diagnostic level sets.

use num_bigint::BigInt;
use std::cmp::Ordering;

use crate::graph::BitIter;
use crate::{Error, Graph, Result, VertexSet};

/// Default power-iteration tolerance.
pub const DEFAULT_TOL: f64 = 1e-12;
/// Comparison epsilon for "equal extremal value" decisions.
pub const RHO_EPS: f64 = 1e-9;
const ITERATION_CAP: usize = 1_000_000;

/// Result of a spectral-radius computation.
///
/// `perron` is a nonnegative unit vector supported on one maximizing
/// component and zero elsewhere; `residual` is the ∞-norm of A·x − ρ·x.
#[derive(Debug, Clone)]
pub struct SpectralCertificate {
    pub rho: f64,
    pub perron: Vec<f64>,
    pub iterations: usize,
    pub residual: f64,
}

/// Power iteration on A + I restricted to one component; the shift kills the
/// period-2 oscillation on bipartite components, and the all-ones start is
/// never orthogonal to the Perron vector.
fn component_rho(g: &Graph, comp: u64, tol: f64) -> Result<(f64, Vec<f64>, usize, f64)> {
    let n = g.n();
    let size = comp.count_ones() as f64;
    let mut x = vec![0.0f64; n];
    for v in BitIter(comp) {
        x[v] = 1.0 / size.sqrt();
    }
    if comp.count_ones() == 1 {
        return Ok((0.0, x, 0, 0.0));
    }
    let mut y = vec![0.0f64; n];
    for it in 1..=ITERATION_CAP {
        for v in BitIter(comp) {
            let mut acc = x[v];
            for u in BitIter(g.neighbors_mask(v) & comp) {
                acc += x[u];
            }
            y[v] = acc;
        }
        let mu: f64 = BitIter(comp).map(|v| x[v] * y[v]).sum();
        let residual = BitIter(comp)
            .map(|v| (y[v] - mu * x[v]).abs())
            .fold(0.0, f64::max);
        if residual <= tol {
            return Ok((mu - 1.0, x, it, residual));
        }
        let norm: f64 = BitIter(comp).map(|v| y[v] * y[v]).sum::<f64>().sqrt();
        for v in BitIter(comp) {
            x[v] = y[v] / norm;
        }
    }
    Err(Error::NonConvergence(ITERATION_CAP))
}

/// Spectral radius of the adjacency matrix with a convergence certificate.
/// ρ is the maximum over connected components; the Perron vector belongs to
/// a maximizing component and is zero elsewhere.
pub fn spectral_radius(g: &Graph, tol: f64) -> Result<SpectralCertificate> {
    if g.n() == 0 {
        return Ok(SpectralCertificate {
            rho: 0.0,
            perron: Vec::new(),
            iterations: 0,
            residual: 0.0,
        });
    }
    let mut best: Option<(f64, Vec<f64>, usize, f64)> = None;
    let mut total_iter = 0usize;
    for comp in g.components() {
        let (rho, x, it, res) = component_rho(g, comp.0, tol)?;
        total_iter += it;
        if best.as_ref().is_none_or(|(b, ..)| rho > *b) {
            best = Some((rho, x, it, res));
        }
    }
    let (rho, perron, _, residual) = best.expect("n >= 1 has a component");
    Ok(SpectralCertificate {
        rho,
        perron,
        iterations: total_iter,
        residual,
    })
}

pub fn spectral_radius_default(g: &Graph) -> Result<SpectralCertificate> {
    spectral_radius(g, DEFAULT_TOL)
}

/// Closed form ρ(B_{γ,n−γ}) = (γ−1)/2 + √(γn − (3γ²+2γ−1)/4).
pub fn book_rho(gamma: usize, n: usize) -> f64 {
    assert!(gamma >= 1 && gamma < n, "book_rho needs 1 <= gamma < n");
    let g = gamma as f64;
    let n = n as f64;
    (g - 1.0) / 2.0 + (g * n - (3.0 * g * g + 2.0 * g - 1.0) / 4.0).sqrt()
}

/// One evaluated inequality.
#[derive(Debug, Clone, serde::Serialize)]
pub struct BoundReport {
    pub name: String,
    pub lhs: f64,
    pub rhs: f64,
    pub satisfied: bool,
    pub slack: f64,
}

impl BoundReport {
    fn new(name: impl Into<String>, lhs: f64, rhs: f64) -> Self {
        BoundReport {
            name: name.into(),
            lhs,
            rhs,
            satisfied: lhs <= rhs + RHO_EPS,
            slack: rhs - lhs,
        }
    }

    /// Equality at the given epsilon.
    pub fn is_equality(&self, eps: f64) -> bool {
        self.slack.abs() <= eps
    }
}

/// The quadratic bound (ρ−γ+1)(ρ−α) ≤ (n−γ)γ.
pub fn quadratic_upper_bound_check(rho: f64, gamma: usize, alpha: usize, n: usize) -> BoundReport {
    let g = gamma as f64;
    let a = alpha as f64;
    let lhs = (rho - g + 1.0) * (rho - a);
    let rhs = (n as f64 - g) * g;
    BoundReport::new("quadratic-upper", lhs, rhs)
}

/// The explicit first-order form √(γn) + (α+γ−1)/2 derived from the
/// quadratic bound; informational only, the asymptotic remainder carries an
/// unspecified constant and is never asserted.
pub fn explicit_upper_estimate(gamma: usize, alpha: usize, n: usize) -> f64 {
    (gamma as f64 * n as f64).sqrt() + (alpha as f64 + gamma as f64 - 1.0) / 2.0
}

/// The regular-family bound ρ² − (s1+γ−2)ρ ≤ γ(n−γ) − (γ−1)(s1−1), with
/// equality exactly on K_γ ∇ R for (s1−1)-regular R. The caller asserts the
/// host has the K_γ ∇ (max degree ≤ s1−1) shape.
pub fn regular_bound_check(rho: f64, s1: usize, gamma: usize, n: usize) -> BoundReport {
    assert!(gamma >= 1, "regular bound needs gamma >= 1");
    let s = s1 as f64;
    let g = gamma as f64;
    let lhs = rho * rho - (s + g - 2.0) * rho;
    let rhs = g * (n as f64 - g) - (g - 1.0) * (s - 1.0);
    BoundReport::new("regular-equality", lhs, rhs)
}

/// The per-vertex edge coefficient 2^{|H|+1}·e(H): an H-minor-free graph on
/// n vertices has fewer than this many edges per vertex times n.
pub fn edge_density_bound(h: &Graph) -> Result<u128> {
    if h.n() == 0 || h.min_degree() == 0 {
        return Err(Error::InvalidParameters(
            "edge density bound needs minimum degree >= 1".into(),
        ));
    }
    Ok((1u128 << (h.n() + 1)) * h.edge_count() as u128)
}

/// L^λ = {u : x_u ≥ (10·C_ℍ)^{−λ} x_{u*}} for the certificate's Perron
/// vector. Monotone in λ.
pub fn lambda_level_set(cert: &SpectralCertificate, lambda: f64, c_family: u128) -> VertexSet {
    assert!(lambda > 0.0, "lambda must be positive");
    let x_max = cert.perron.iter().cloned().fold(0.0, f64::max);
    let threshold = (10.0 * c_family as f64).powf(-lambda) * x_max;
    cert.perron
        .iter()
        .enumerate()
        .filter(|(_, &x)| x >= threshold)
        .map(|(v, _)| v)
        .collect()
}

/// All vertices adjacent to every other vertex.
pub fn dominating_vertices(g: &Graph) -> VertexSet {
    g.dominating_vertices()
}

const CHAR_POLY_CAP: usize = 20;

/// Coefficients of det(xI − A), leading coefficient first, computed exactly
/// by the Faddeev–LeVerrier recurrence in i128. Capped at 20 vertices to
/// stay within integer range; searches live well below that.
#[allow(clippy::needless_range_loop)]
pub fn char_poly(g: &Graph) -> Result<Vec<i128>> {
    let n = g.n();
    if n > CHAR_POLY_CAP {
        return Err(Error::Unsupported(format!(
            "exact characteristic polynomial capped at {CHAR_POLY_CAP} vertices, got {n}"
        )));
    }
    let a = |i: usize, j: usize| -> i128 { g.has_edge(i, j) as i128 };
    let mut coeffs = vec![0i128; n + 1];
    coeffs[0] = 1;
    // m holds M_k; starts as identity.
    let mut m: Vec<Vec<i128>> = (0..n)
        .map(|i| (0..n).map(|j| (i == j) as i128).collect())
        .collect();
    for k in 1..=n {
        // am = A * m
        let mut am = vec![vec![0i128; n]; n];
        for (i, am_row) in am.iter_mut().enumerate() {
            for j in 0..n {
                let mut acc = 0i128;
                for l in 0..n {
                    acc += a(i, l) * m[l][j];
                }
                am_row[j] = acc;
            }
        }
        let trace: i128 = (0..n).map(|i| am[i][i]).sum();
        let c = -trace / k as i128;
        debug_assert_eq!(-trace % k as i128, 0, "Faddeev-LeVerrier division is exact");
        coeffs[k] = c;
        for (i, am_row) in am.iter_mut().enumerate() {
            am_row[i] += c;
        }
        m = am;
    }
    Ok(coeffs)
}

/// Sign of p(num / 2^shift) for the integer polynomial given by `coeffs`
/// (leading first). Exact via big integers.
#[allow(clippy::needless_range_loop)]
fn char_poly_sign_at(coeffs: &[i128], num: i128, shift: u32) -> Ordering {
    let n = coeffs.len() - 1;
    let num = BigInt::from(num);
    let two_shift = BigInt::from(1) << shift;
    let mut acc = BigInt::from(0);
    // p(x)·2^{shift·n} = Σ c_k · num^{n−k} · 2^{shift·k}
    let mut num_pow = BigInt::from(1);
    let mut pows = vec![BigInt::from(1); n + 1];
    for k in 1..=n {
        num_pow *= &num;
        pows[k] = num_pow.clone();
    }
    let mut shift_pow = BigInt::from(1);
    for (k, &c) in coeffs.iter().enumerate() {
        acc += BigInt::from(c) * &pows[n - k] * &shift_pow;
        shift_pow *= &two_shift;
    }
    acc.cmp(&BigInt::from(0))
}

const DYADIC_SHIFT: u32 = 48;

fn to_dyadic(x: f64) -> i128 {
    (x * (1u64 << DYADIC_SHIFT) as f64).round() as i128
}

fn from_dyadic(num: i128) -> f64 {
    num as f64 / (1u64 << DYADIC_SHIFT) as f64
}

/// Narrows the largest root of a connected component's characteristic
/// polynomial by exact sign bisection, starting from the certified numeric
/// estimate. Returns `None` when a sign bracket cannot be established (the
/// subdominant eigenvalue is too close), in which case callers keep the
/// numeric interval.
fn refine_component_rho(coeffs: &[i128], est: f64, width: f64) -> Option<(f64, f64)> {
    let mut lo = to_dyadic(est - 1e-6);
    let mut hi = to_dyadic(est + 1e-6);
    // p > 0 strictly above the largest root.
    let mut tries = 0;
    while char_poly_sign_at(coeffs, hi, DYADIC_SHIFT) != Ordering::Greater {
        hi += to_dyadic(1e-6).max(1);
        tries += 1;
        if tries > 64 {
            return None;
        }
    }
    if char_poly_sign_at(coeffs, lo, DYADIC_SHIFT) == Ordering::Greater {
        // The window sits above the root or inside a positive dip; walk down
        // a little before giving up.
        let step = to_dyadic(1e-6).max(1);
        let mut found = false;
        for _ in 0..64 {
            lo -= step;
            if char_poly_sign_at(coeffs, lo, DYADIC_SHIFT) != Ordering::Greater {
                found = true;
                break;
            }
        }
        if !found {
            return None;
        }
    }
    while from_dyadic(hi - lo) > width && hi - lo > 1 {
        let mid = lo + (hi - lo) / 2;
        if char_poly_sign_at(coeffs, mid, DYADIC_SHIFT) == Ordering::Greater {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    Some((from_dyadic(lo), from_dyadic(hi)))
}

/// Encloses ρ(G) in an interval of at most `width` when exact refinement
/// succeeds; otherwise the certified numeric interval [ρ−res, ρ+res].
/// Exact refinement works per component, where the Perron root is simple.
/// A component whose iteration stalls at the default tolerance is retried at
/// a loose one; the exact bisection recovers the precision.
pub fn rho_exact_interval(g: &Graph, width: f64) -> Result<(f64, f64)> {
    if g.n() == 0 {
        return Ok((0.0, 0.0));
    }
    let mut best = (f64::NEG_INFINITY, f64::NEG_INFINITY);
    for comp in g.components() {
        let sub = g.induced(&comp)?;
        let cert = match spectral_radius_default(&sub) {
            Ok(c) => c,
            Err(Error::NonConvergence(_)) => spectral_radius(&sub, 1e-7)?,
            Err(e) => return Err(e),
        };
        let interval = if sub.n() <= CHAR_POLY_CAP {
            let coeffs = char_poly(&sub)?;
            refine_component_rho(&coeffs, cert.rho, width)
                .unwrap_or((cert.rho - cert.residual, cert.rho + cert.residual))
        } else {
            (cert.rho - cert.residual, cert.rho + cert.residual)
        };
        if interval.0 > best.0 {
            best = interval;
        }
    }
    Ok(best)
}

/// ρ for extremal comparisons: the certified iteration when it converges,
/// the exact bisection midpoint when it stalls.
pub fn rho_for_comparison(g: &Graph) -> Result<f64> {
    match spectral_radius_default(g) {
        Ok(cert) => Ok(cert.rho),
        Err(Error::NonConvergence(_)) => {
            let (lo, hi) = rho_exact_interval(g, 1e-12)?;
            Ok((lo + hi) / 2.0)
        }
        Err(e) => Err(e),
    }
}
