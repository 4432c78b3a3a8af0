//! Adaptive Gauss–Legendre quadrature.
//!
//! The profile integrals this crate needs (`x(u) = ∫ du/√X(u)` and the
//! quartic-kernel integrals behind the elliptic special functions) are smooth
//! away from the zeros of the radicand, and every integrable endpoint
//! singularity is removed analytically by a substitution *before* the
//! integrand reaches this module (see [`crate::profiles`]). What remains is a
//! workhorse for smooth integrands: 12-point Gauss–Legendre panels refined by
//! bisection until the panel-halving error estimate meets an absolute
//! tolerance.
//!
//! The Legendre nodes are generated at startup by Newton iteration on the
//! three-term recurrence and cached; no tables are embedded.
//!
//! ```
//! use zmc_separable::quadrature::{integrate, QuadratureConfig};
//!
//! let cfg = QuadratureConfig::default();
//! let v = integrate(|x| (-x * x).exp(), 0.0, 10.0, &cfg).unwrap();
//! assert!((v - std::f64::consts::PI.sqrt() / 2.0).abs() < 1e-12);
//! ```

use crate::types::{Result, ZmcError};
use std::sync::OnceLock;

/// Number of Gauss–Legendre points per panel.
const PANEL_ORDER: usize = 12;

/// Tuning knobs for the adaptive integrator.
///
/// The defaults integrate every profile in the built-in catalog to
/// `abs_tol = 1e-12`; raise `max_depth`/`max_panels` only if you feed the
/// integrator nastier integrands than it was designed for (it will tell you
/// by returning [`ZmcError::QuadratureFailure`] rather than silently
/// degrading).
#[derive(Debug, Clone, Copy)]
pub struct QuadratureConfig {
    /// Absolute tolerance on the whole integral.
    pub abs_tol: f64,
    /// Maximum bisection depth for a single panel.
    pub max_depth: u32,
    /// Total panel-evaluation budget across the whole call.
    pub max_panels: usize,
}

impl Default for QuadratureConfig {
    fn default() -> Self {
        QuadratureConfig { abs_tol: 1e-12, max_depth: 48, max_panels: 400_000 }
    }
}

impl QuadratureConfig {
    /// Same limits as [`Default`] but a caller-chosen absolute tolerance.
    pub fn with_tol(abs_tol: f64) -> Self {
        QuadratureConfig { abs_tol, ..Self::default() }
    }
}

/// Nodes and weights of the `n`-point Gauss–Legendre rule on `[-1, 1]`.
///
/// Roots of the Legendre polynomial `P_n` are found by Newton iteration from
/// the Chebyshev-like initial guesses `cos(π (i − 1/4) / (n + 1/2))`; the
/// recurrence `(k+1) P_{k+1} = (2k+1) x P_k − k P_{k−1}` supplies values and
/// derivatives. Accuracy is at the round-off level for the small `n` used
/// here.
pub fn legendre_nodes(n: usize) -> Vec<(f64, f64)> {
    assert!(n >= 2, "rule order must be at least 2");
    let mut out = Vec::with_capacity(n);
    for i in 1..=n {
        let mut x = (std::f64::consts::PI * (i as f64 - 0.25) / (n as f64 + 0.5)).cos();
        // Newton iteration; converges in a handful of steps from these guesses.
        for _ in 0..100 {
            let (p, dp) = legendre_value_and_derivative(n, x);
            let step = p / dp;
            x -= step;
            if step.abs() < 1e-15 {
                break;
            }
        }
        let (_, dp) = legendre_value_and_derivative(n, x);
        let w = 2.0 / ((1.0 - x * x) * dp * dp);
        out.push((x, w));
    }
    // The guesses enumerate roots from +1 down to −1; sort ascending for
    // reproducible node order.
    out.sort_by(|a, b| a.0.partial_cmp(&b.0).unwrap());
    out
}

/// `(P_n(x), P_n'(x))` via the three-term recurrence.
fn legendre_value_and_derivative(n: usize, x: f64) -> (f64, f64) {
    let mut p_prev = 1.0; // P_0
    let mut p = x; // P_1
    for k in 1..n {
        let kf = k as f64;
        let p_next = ((2.0 * kf + 1.0) * x * p - kf * p_prev) / (kf + 1.0);
        p_prev = p;
        p = p_next;
    }
    // P_n'(x) = n (x P_n − P_{n−1}) / (x² − 1)
    let dp = (n as f64) * (x * p - p_prev) / (x * x - 1.0);
    (p, dp)
}

fn panel_nodes() -> &'static [(f64, f64)] {
    static NODES: OnceLock<Vec<(f64, f64)>> = OnceLock::new();
    NODES.get_or_init(|| legendre_nodes(PANEL_ORDER))
}

/// Single fixed-order panel on `[a, b]`.
fn panel(f: &impl Fn(f64) -> f64, a: f64, b: f64) -> f64 {
    let half = 0.5 * (b - a);
    let mid = 0.5 * (a + b);
    let mut acc = 0.0;
    for &(x, w) in panel_nodes() {
        acc += w * f(mid + half * x);
    }
    acc * half
}

/// Integrate `f` over `[a, b]` adaptively to the configured absolute
/// tolerance.
///
/// Reversed limits negate the result. Acceptance is a *global* budget, not a
/// per-panel verdict: each bisection splits the local tolerance evenly
/// between the halves (so a fully converged dyadic partition's targets sum to
/// `abs_tol`), but a leaf that stops improving — rounding floor, depth,
/// budget, or an interval collapsed to adjacent floats — is kept with its
/// error estimate, and the call fails only if the accumulated estimates
/// exceed `abs_tol` or the machine-precision floor `~ε·∫|f|`, whichever is
/// larger. This keeps isolated noise-floor panels (estimates that cannot
/// shrink below rounding level) from vetoing an integral whose total error is
/// far inside tolerance. Non-finite integrand values and a blown budget both
/// surface as [`ZmcError::QuadratureFailure`] carrying the accumulated bound.
pub fn integrate(f: impl Fn(f64) -> f64, a: f64, b: f64, cfg: &QuadratureConfig) -> Result<f64> {
    if a == b {
        return Ok(0.0);
    }
    let (lo, hi, orient) = if a < b { (a, b, 1.0) } else { (b, a, -1.0) };

    let mut total = 0.0;
    let mut err_sum = 0.0_f64;
    let mut abs_sum = 0.0_f64;
    let mut panels_used = 1usize;
    let mut stack = vec![(lo, hi, cfg.abs_tol, 0u32, panel(&f, lo, hi))];

    while let Some((a, b, tol, depth, whole)) = stack.pop() {
        let m = 0.5 * (a + b);
        let left = panel(&f, a, m);
        let right = panel(&f, m, b);
        panels_used += 2;
        let refined = left + right;
        let err = (refined - whole).abs();

        if !refined.is_finite() {
            return Err(ZmcError::QuadratureFailure { tol: cfg.abs_tol, best: f64::INFINITY });
        }

        // Round-off floor: once the estimate is at machine precision relative
        // to the panel's own mass, splitting further only churns rounding
        // noise (the estimate cannot decrease below ~ε·∫|f| over the panel).
        let floor = 50.0 * f64::EPSILON * refined.abs();
        if err <= tol.max(floor)
            || depth >= cfg.max_depth
            || panels_used >= cfg.max_panels
            || m <= a
            || m >= b
        {
            total += refined;
            err_sum += err;
            abs_sum += refined.abs();
        } else {
            stack.push((a, m, 0.5 * tol, depth + 1, left));
            stack.push((m, b, 0.5 * tol, depth + 1, right));
        }
    }

    if err_sum > cfg.abs_tol.max(50.0 * f64::EPSILON * abs_sum) {
        return Err(ZmcError::QuadratureFailure { tol: cfg.abs_tol, best: err_sum });
    }
    Ok(orient * total)
}

/// A simple zero of a radicand at the boundary of its positivity interval.
///
/// `ratio(e)` must return `W(root ± e) / e` for `e ≥ 0`, with the sign chosen
/// so the offset points *into* the interval, computed in a cancellation-free
/// form (so `ratio(0)` is the finite limit `|W′(root)|`). The `τ = root ± s²`
/// substitution then turns the integrable `1/√W` endpoint singularity into
/// the smooth integrand `2/√(ratio(s²))`.
pub(crate) struct SqrtEndpoint<'a> {
    pub root: f64,
    pub ratio: &'a dyn Fn(f64) -> f64,
}

/// Integrate `∫_a^b dt/√W(t)` where `W > 0` on the interior and may have
/// simple zeros at the declared `left`/`right` endpoints (with `a`, `b`
/// allowed to sit exactly on them). Pieces near a declared root use the `s²`
/// substitution; the smooth middle is integrated directly.
pub(crate) fn integrate_inverse_sqrt(
    radicand: &dyn Fn(f64) -> f64,
    left: Option<SqrtEndpoint<'_>>,
    right: Option<SqrtEndpoint<'_>>,
    a: f64,
    b: f64,
    cfg: &QuadratureConfig,
) -> Result<f64> {
    debug_assert!(a <= b);
    if a == b {
        return Ok(0.0);
    }

    // Chart widths: a fixed reach, shrunk if both ends have roots so the two
    // charts can never overlap.
    let base_width = match (&left, &right) {
        (Some(l), Some(r)) => (0.25 * (r.root - l.root)).min(0.5),
        _ => 0.5,
    };

    let mut cuts = vec![a, b];
    if let Some(l) = &left {
        let hi = l.root + base_width;
        if a < hi && hi < b {
            cuts.push(hi);
        }
    }
    if let Some(r) = &right {
        let lo = r.root - base_width;
        if a < lo && lo < b {
            cuts.push(lo);
        }
    }
    cuts.sort_by(|x, y| x.partial_cmp(y).unwrap());

    let mut total = 0.0;
    for pair in cuts.windows(2) {
        let (p, q) = (pair[0], pair[1]);
        if p == q {
            continue;
        }
        let in_left_chart = left
            .as_ref()
            .map(|l| q <= l.root + base_width + 1e-300)
            .unwrap_or(false);
        let in_right_chart = right
            .as_ref()
            .map(|r| p >= r.root - base_width - 1e-300)
            .unwrap_or(false);
        total += if in_left_chart {
            let l = left.as_ref().unwrap();
            let s_lo = (p - l.root).max(0.0).sqrt();
            let s_hi = (q - l.root).max(0.0).sqrt();
            integrate(|s| 2.0 / (l.ratio)(s * s).sqrt(), s_lo, s_hi, cfg)?
        } else if in_right_chart {
            let r = right.as_ref().unwrap();
            let s_lo = (r.root - q).max(0.0).sqrt();
            let s_hi = (r.root - p).max(0.0).sqrt();
            integrate(|s| 2.0 / (r.ratio)(s * s).sqrt(), s_lo, s_hi, cfg)?
        } else {
            integrate(|t| 1.0 / radicand(t).sqrt(), p, q, cfg)?
        };
    }
    Ok(total)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn weights_sum_to_interval_length() {
        let nodes = legendre_nodes(PANEL_ORDER);
        let sum: f64 = nodes.iter().map(|&(_, w)| w).sum();
        assert!((sum - 2.0).abs() < 1e-14);
    }

    #[test]
    fn rule_is_exact_for_high_degree_polynomials() {
        // A 12-point rule integrates degree ≤ 23 exactly.
        let nodes = legendre_nodes(PANEL_ORDER);
        let quad: f64 = nodes.iter().map(|&(x, w)| w * x.powi(22)).sum();
        assert!((quad - 2.0 / 23.0).abs() < 1e-14, "got {quad}");
    }

    #[test]
    fn smooth_integrals_hit_tolerance() {
        let cfg = QuadratureConfig::default();
        let v = integrate(|x| 4.0 / (1.0 + x * x), 0.0, 1.0, &cfg).unwrap();
        assert!((v - std::f64::consts::PI).abs() < 1e-12);

        let v = integrate(f64::sin, 0.0, std::f64::consts::PI, &cfg).unwrap();
        assert!((v - 2.0).abs() < 1e-12);
    }

    #[test]
    fn reversed_limits_flip_sign() {
        let cfg = QuadratureConfig::default();
        let fwd = integrate(|x| x * x, 0.0, 2.0, &cfg).unwrap();
        let bwd = integrate(|x| x * x, 2.0, 0.0, &cfg).unwrap();
        assert!((fwd + bwd).abs() < 1e-14);
        assert!((fwd - 8.0 / 3.0).abs() < 1e-12);
    }

    #[test]
    fn sharp_but_smooth_peak_converges() {
        let cfg = QuadratureConfig::default();
        let eps = 1e-3;
        let v = integrate(|x| 1.0 / (eps * eps + x * x), 0.0, 1.0, &cfg).unwrap();
        let exact = (1.0 / eps) * (1.0 / eps).atan();
        assert!((v - exact).abs() < 1e-9, "got {v}, want {exact}");
    }

    #[test]
    fn endpoint_singularity_is_rejected_not_mangled() {
        // 1/√x is integrable but unreachable for a fixed-order interior rule
        // at this tolerance; the integrator must report failure rather than
        // return a wrong value.
        let cfg = QuadratureConfig { max_depth: 20, max_panels: 10_000, ..Default::default() };
        let r = integrate(|x| 1.0 / x.sqrt(), 0.0, 1.0, &cfg);
        assert!(matches!(r, Err(ZmcError::QuadratureFailure { .. })));
    }

    #[test]
    fn zero_length_interval_is_zero() {
        let cfg = QuadratureConfig::default();
        assert_eq!(integrate(|x| x.exp(), 1.5, 1.5, &cfg).unwrap(), 0.0);
    }

    #[test]
    fn sqrt_endpoint_charts_recover_exact_singular_integrals() {
        let cfg = QuadratureConfig::default();

        // ∫₀¹ dt/√(1−t²) = π/2, simple zero of the radicand at the right end.
        let w = |t: f64| 1.0 - t * t;
        let ratio = |e: f64| 2.0 - e; // (1−(1−e)²)/e
        let v = integrate_inverse_sqrt(
            &w,
            None,
            Some(SqrtEndpoint { root: 1.0, ratio: &ratio }),
            0.0,
            1.0,
            &cfg,
        )
        .unwrap();
        assert!((v - std::f64::consts::FRAC_PI_2).abs() < 1e-12, "got {v}");

        // ∫₀¹ dt/√(t(1−t)) = π, simple zeros at both ends.
        let w2 = |t: f64| t * (1.0 - t);
        let ratio_l = |e: f64| 1.0 - e; // (e(1−e))/e
        let ratio_r = |e: f64| 1.0 - e; // ((1−e)e)/e
        let v = integrate_inverse_sqrt(
            &w2,
            Some(SqrtEndpoint { root: 0.0, ratio: &ratio_l }),
            Some(SqrtEndpoint { root: 1.0, ratio: &ratio_r }),
            0.0,
            1.0,
            &cfg,
        )
        .unwrap();
        assert!((v - std::f64::consts::PI).abs() < 1e-12, "got {v}");
    }

    #[test]
    fn partial_spans_within_charted_interval() {
        // Same radicand, integrating from the singular endpoint to an
        // interior stop: ∫₀^t dt/√(1−t²) = arcsin(t).
        let cfg = QuadratureConfig::default();
        let w = |t: f64| 1.0 - t * t;
        let ratio = |e: f64| 2.0 - e;
        let v = integrate_inverse_sqrt(
            &w,
            None,
            Some(SqrtEndpoint { root: 1.0, ratio: &ratio }),
            0.3,
            0.999_999,
            &cfg,
        )
        .unwrap();
        let exact = (0.999_999_f64).asin() - (0.3_f64).asin();
        assert!((v - exact).abs() < 1e-11, "got {v}, want {exact}");
    }
}
