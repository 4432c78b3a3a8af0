//! Quartic elliptic integrals and their inverse functions.
//!
//! Several profile families integrate to coordinate functions of the form
//! `x = ∫ dτ/√Q(τ)` with `Q` an even quartic. This module evaluates such
//! integrals (`forward`) and inverts them (`inverse`) for any kernel
//!
//! ```text
//! Q(τ) = q4·τ⁴ + q2·τ² + q0
//! ```
//!
//! that is positive on an interval around a chosen base point. Endpoint
//! square-root singularities at simple roots of `Q` are removed by the
//! `τ = r ± s²` substitution with an exact shifted-polynomial ratio, and the
//! unbounded direction is handled by the reciprocal substitution `σ = 1/τ`,
//! which maps `∫_T^∞ dτ/√Q` onto the mirrored kernel `q0σ⁴ + q2σ² + q4` on
//! `[0, 1/T]`.
//!
//! The four named kernels used by the built-in surface catalog:
//!
//! | constructor | kernel | base | inverse function |
//! |---|---|---|---|
//! | [`EllipticKernel::v`] | `τ⁴ − 1` | 1 | `V`: increasing, `V(0) = 1` |
//! | [`EllipticKernel::m`] | `1 − τ⁴` | 0 | `M`: increasing, `M(0) = 0`, bounded |
//! | [`EllipticKernel::f_hat`] | `τ⁴ − τ² + 1` | 0 | `F̂`: odd, defined on a bounded range |
//! | [`EllipticKernel::g_hat`] | `τ⁴ + τ² + 1` | 0 | `Ĝ`: odd, defined on a bounded range |
//!
//! ```
//! use zmc_separable::profiles::elliptic::EllipticKernel;
//!
//! let v = EllipticKernel::v();
//! // V is the inverse of ξ(t) = ∫₁^t dτ/√(τ⁴−1).
//! let xi = v.forward(2.0).unwrap();
//! let t = v.inverse(xi).unwrap();
//! assert!((t - 2.0).abs() < 1e-10);
//! ```

use crate::quadrature::{integrate, integrate_inverse_sqrt, QuadratureConfig, SqrtEndpoint};
use crate::roots;
use crate::types::{Result, ZmcError};

/// An even quartic radicand with a base point and output scale; see the
/// module docs.
#[derive(Debug, Clone)]
pub struct EllipticKernel {
    pub q4: f64,
    pub q2: f64,
    pub q0: f64,
    /// Lower limit of the defining integral; `forward(base_point) = 0`.
    pub base_point: f64,
    /// Multiplier applied to the integral (must be positive).
    pub scale: f64,
    /// Maximal interval around `base_point` on which `Q > 0`.
    interval: (f64, f64),
    /// Whether each finite interval end is a simple root of `Q` (charted).
    lo_simple: bool,
    hi_simple: bool,
    /// |τ| beyond which the reciprocal substitution takes over.
    t_cut: f64,
    /// Output range `(forward(lo), forward(hi))`; finite unless an interval
    /// end is a non-simple root.
    range: (f64, f64),
    cfg: QuadratureConfig,
}

impl EllipticKernel {
    /// Build a kernel, locating the positivity interval around `base_point`
    /// and precomputing the output range. Fails if `Q(base_point) < 0`, if
    /// the base sits on a *multiple* root (the integral would diverge at its
    /// own lower limit), or if `scale ≤ 0`.
    pub fn new(q4: f64, q2: f64, q0: f64, base_point: f64, scale: f64) -> Result<Self> {
        if !(scale > 0.0) {
            return Err(ZmcError::InvalidConstants(format!(
                "elliptic kernel scale must be positive, got {scale}"
            )));
        }
        let q = |t: f64| q4 * t.powi(4) + q2 * t * t + q0;
        let coeff_scale = q4.abs().max(q2.abs()).max(q0.abs()).max(1.0);

        // Real roots of the biquadratic, both signs, ascending.
        let mut rts: Vec<f64> = Vec::new();
        if q4 != 0.0 {
            let disc = q2 * q2 - 4.0 * q4 * q0;
            if disc >= 0.0 {
                let sq = disc.sqrt();
                for s in [(-q2 - sq) / (2.0 * q4), (-q2 + sq) / (2.0 * q4)] {
                    if s > 0.0 {
                        rts.push(s.sqrt());
                        rts.push(-s.sqrt());
                    } else if s == 0.0 {
                        rts.push(0.0);
                    }
                }
            }
        } else if q2 != 0.0 {
            let s = -q0 / q2;
            if s > 0.0 {
                rts.push(s.sqrt());
                rts.push(-s.sqrt());
            } else if s == 0.0 {
                rts.push(0.0);
            }
        }
        rts.sort_by(|a, b| a.partial_cmp(b).unwrap());
        rts.dedup();

        // Interval between consecutive roots (±∞ padded) that contains the
        // base point with Q > 0 inside.
        let mut bounds = vec![f64::NEG_INFINITY];
        bounds.extend(&rts);
        bounds.push(f64::INFINITY);
        let mut interval = None;
        for w in bounds.windows(2) {
            let (lo, hi) = (w[0], w[1]);
            if !(base_point >= lo && base_point <= hi) || lo == hi {
                continue;
            }
            let probe = match (lo.is_finite(), hi.is_finite()) {
                (true, true) => 0.5 * (lo + hi),
                (true, false) => lo + 1.0,
                (false, true) => hi - 1.0,
                (false, false) => 0.0,
            };
            if q(probe) > 0.0 {
                interval = Some((lo, hi));
                break;
            }
        }
        let Some((lo, hi)) = interval else {
            return Err(ZmcError::InvalidConstants(format!(
                "base point {base_point} is not adjacent to a positivity interval of the kernel"
            )));
        };

        let q_prime = |t: f64| 4.0 * q4 * t.powi(3) + 2.0 * q2 * t;
        let simple = |r: f64| q_prime(r).abs() > 1e-9 * coeff_scale;
        let lo_simple = lo.is_finite() && simple(lo);
        let hi_simple = hi.is_finite() && simple(hi);
        if (base_point == lo && lo.is_finite() && !lo_simple)
            || (base_point == hi && hi.is_finite() && !hi_simple)
        {
            return Err(ZmcError::InvalidConstants(
                "base point sits on a multiple root; the integral diverges there".into(),
            ));
        }

        let t_cut = 1.0 + 2.0 * rts.iter().fold(0.0_f64, |m, r| m.max(r.abs()));
        let mut kernel = EllipticKernel {
            q4,
            q2,
            q0,
            base_point,
            scale,
            interval: (lo, hi),
            lo_simple,
            hi_simple,
            t_cut,
            range: (0.0, 0.0),
            cfg: QuadratureConfig::with_tol(1e-13),
        };
        let lo_xi = if lo.is_finite() && !lo_simple {
            f64::NEG_INFINITY
        } else {
            kernel.forward_unchecked(lo)?
        };
        let hi_xi = if hi.is_finite() && !hi_simple {
            f64::INFINITY
        } else {
            kernel.forward_unchecked(hi)?
        };
        kernel.range = (lo_xi, hi_xi);
        Ok(kernel)
    }

    /// Kernel of `ξ(t) = ∫₁^t dτ/√(τ⁴−1)`; its inverse `V` satisfies
    /// `V(0) = 1`, grows without bound, and `(log V)′ = √(V⁴−1)/V`.
    pub fn v() -> Self {
        Self::new(1.0, 0.0, -1.0, 1.0, 1.0).expect("fixed kernel is valid")
    }

    /// Kernel of `ψ(t) = ∫₀^t dτ/√(1−τ⁴)`; its inverse `M` is the
    /// lemniscatic sine, increasing from `M(0) = 0` to `M(ψ₁) = 1` where
    /// `ψ₁ = ∫₀¹ dτ/√(1−τ⁴)`.
    pub fn m() -> Self {
        Self::new(-1.0, 0.0, 1.0, 0.0, 1.0).expect("fixed kernel is valid")
    }

    /// Kernel of `∫₀^t dτ/√(τ⁴−τ²+1)` (positive definite, palindromic); the
    /// inverse `F̂` is odd and defined on `(−ξ∞, ξ∞)` with
    /// `ξ∞ = 2∫₀¹ dτ/√(τ⁴−τ²+1)`.
    pub fn f_hat() -> Self {
        Self::new(1.0, -1.0, 1.0, 0.0, 1.0).expect("fixed kernel is valid")
    }

    /// Kernel of `∫₀^t dτ/√(τ⁴+τ²+1)`; the inverse `Ĝ` is odd and defined on
    /// `(−ξ∞, ξ∞)` with `ξ∞ = 2∫₀¹ dτ/√(τ⁴+τ²+1)`.
    pub fn g_hat() -> Self {
        Self::new(1.0, 1.0, 1.0, 0.0, 1.0).expect("fixed kernel is valid")
    }

    /// `Q(t)`.
    pub fn q(&self, t: f64) -> f64 {
        self.q4 * t.powi(4) + self.q2 * t * t + self.q0
    }

    /// Maximal interval around the base point with `Q > 0`.
    pub fn positivity_interval(&self) -> (f64, f64) {
        self.interval
    }

    /// Output range `(forward(lo), forward(hi))` of the integral over its
    /// positivity interval; entries are ±∞ only if an interval end is a
    /// multiple root.
    pub fn output_range(&self) -> (f64, f64) {
        self.range
    }

    /// `scale · ∫_base^t dτ/√Q(τ)`, negative for `t` below the base point.
    /// `t` may sit exactly on an interval endpoint (including ±∞) and gets
    /// the convergent limit there.
    pub fn forward(&self, t: f64) -> Result<f64> {
        let (lo, hi) = self.interval;
        if !(t >= lo && t <= hi) {
            return Err(ZmcError::DomainError { axis: "τ", value: t, lo, hi });
        }
        self.forward_unchecked(t)
    }

    fn forward_unchecked(&self, t: f64) -> Result<f64> {
        let base = self.base_point;
        let (a, b, orient) = if t >= base { (base, t, 1.0) } else { (t, base, -1.0) };
        let mut total = 0.0;
        // Negative reciprocal zone [a, −t_cut]: by evenness of Q this equals
        // the mirrored positive zone.
        if a < -self.t_cut {
            let q_end = b.min(-self.t_cut);
            if a < q_end {
                total += self.reciprocal_piece(-q_end, -a)?;
            }
        }
        // Charted middle.
        let p = a.max(-self.t_cut);
        let q_end = b.min(self.t_cut);
        if p < q_end {
            total += self.charted_piece(p, q_end)?;
        }
        // Positive reciprocal zone [t_cut, b].
        if b > self.t_cut {
            let p = a.max(self.t_cut);
            if p < b {
                total += self.reciprocal_piece(p, b)?;
            }
        }
        Ok(self.scale * orient * total)
    }

    /// `∫_p^q dτ/√Q` for `t_cut ≤ p ≤ q ≤ ∞` via `σ = 1/τ`.
    fn reciprocal_piece(&self, p: f64, q: f64) -> Result<f64> {
        let (q4, q2, q0) = (self.q4, self.q2, self.q0);
        let s_lo = if q.is_infinite() { 0.0 } else { 1.0 / q };
        let s_hi = 1.0 / p;
        integrate(
            |s| {
                let s2 = s * s;
                1.0 / (q0 * s2 * s2 + q2 * s2 + q4).sqrt()
            },
            s_lo,
            s_hi,
            &self.cfg,
        )
    }

    /// `∫_p^q dτ/√Q` within `[−t_cut, t_cut]`, charts at simple interval-end
    /// roots.
    fn charted_piece(&self, p: f64, q: f64) -> Result<f64> {
        let (lo, hi) = self.interval;
        let radicand = |t: f64| self.q(t);
        let left_ratio = self.lo_simple.then(|| self.root_ratio(lo, 1.0));
        let right_ratio = self.hi_simple.then(|| self.root_ratio(hi, -1.0));
        let left = left_ratio.as_ref().map(|r| SqrtEndpoint { root: lo, ratio: r });
        let right = right_ratio.as_ref().map(|r| SqrtEndpoint { root: hi, ratio: r });
        integrate_inverse_sqrt(&radicand, left, right, p, q, &self.cfg)
    }

    /// Exact shifted-polynomial form of `Q(r + dir·e)/e` at a root `r`:
    /// `dir·Q′(r) + Q″(r)/2·e + dir·Q‴(r)/6·e² + q4·e³` (the `Q(r)` term is
    /// dropped, enforcing the root exactly).
    fn root_ratio(&self, r: f64, dir: f64) -> impl Fn(f64) -> f64 {
        let d1 = 4.0 * self.q4 * r.powi(3) + 2.0 * self.q2 * r;
        let d2 = 12.0 * self.q4 * r * r + 2.0 * self.q2;
        let d3 = 24.0 * self.q4 * r;
        let q4 = self.q4;
        move |e: f64| dir * d1 + 0.5 * d2 * e + dir * d3 / 6.0 * e * e + q4 * e * e * e
    }

    /// Inverse of [`Self::forward`]: the `t` with `forward(t) = xi`, found by
    /// bracketed root finding on the strictly monotone forward map.
    pub fn inverse(&self, xi: f64) -> Result<f64> {
        let (xi_lo, xi_hi) = self.range;
        let slack = 1e-9 * (1.0 + xi.abs());
        if !(xi >= xi_lo - slack && xi <= xi_hi + slack) {
            return Err(ZmcError::RangeError { value: xi, lo: xi_lo, hi: xi_hi });
        }
        let xi_q = xi.clamp(xi_lo, xi_hi);
        if xi_q == 0.0 {
            return Ok(self.base_point);
        }
        let (lo, hi) = self.interval;
        let phi = |t: f64| match self.forward_unchecked(t) {
            Ok(v) => v - xi_q,
            Err(_) => f64::NAN,
        };
        let (bl, bh) = if xi_q > 0.0 {
            let bh = if hi.is_finite() {
                hi
            } else {
                match roots::expand_bracket(&phi, self.base_point, 1.0, 1.0, 1e9) {
                    Some((_, outer)) => outer,
                    None => {
                        return Err(ZmcError::RangeError { value: xi, lo: xi_lo, hi: xi_hi })
                    }
                }
            };
            (self.base_point, bh)
        } else {
            let bl = if lo.is_finite() {
                lo
            } else {
                match roots::expand_bracket(&phi, self.base_point, 1.0, -1.0, -1e9) {
                    Some((_, outer)) => outer,
                    None => {
                        return Err(ZmcError::RangeError { value: xi, lo: xi_lo, hi: xi_hi })
                    }
                }
            };
            (bl, self.base_point)
        };
        let mut t = roots::brent(phi, bl, bh, 1e-13, 200).ok_or(ZmcError::RangeError {
            value: xi,
            lo: xi_lo,
            hi: xi_hi,
        })?;
        // Brent stops on bracket width, which leaves jitter at the tolerance
        // scale; downstream finite differences of values built on this
        // inverse would amplify it. Newton steps with the analytic derivative
        // ξ′(t) = scale/√Q(t) pin t to the accuracy of the quadrature itself,
        // which varies smoothly with the query. Near interval-end roots
        // (√Q → 0) the step degenerates to zero, which is safe: there the
        // forward map is steep and Brent's answer is already sharp.
        for _ in 0..2 {
            let q = self.q(t);
            if !(q > 0.0) {
                break;
            }
            let Ok(val) = self.forward_unchecked(t) else { break };
            let next = (t - (val - xi_q) * q.sqrt() / self.scale).clamp(lo, hi);
            if next == t {
                break;
            }
            t = next;
        }
        Ok(t)
    }
}

/// Free-function alias for [`EllipticKernel::forward`].
pub fn elliptic_forward(kernel: &EllipticKernel, t: f64) -> Result<f64> {
    kernel.forward(t)
}

/// Free-function alias for [`EllipticKernel::inverse`].
pub fn elliptic_inverse(kernel: &EllipticKernel, xi: f64) -> Result<f64> {
    kernel.inverse(xi)
}

/// `ψ₁ = ∫₀¹ dτ/√(1−τ⁴)`: the quarter period of the lemniscatic functions,
/// to full double precision. `M` increases from 0 to 1 on `[0, ψ₁]`, and the
/// same number is the convergent value of `∫₁^∞ dτ/√(τ⁴−1)` (substitute
/// `τ → 1/τ`).
pub const PSI_1: f64 = 1.311_028_777_146_059_9;

#[cfg(test)]
mod tests {
    use super::*;

    // Reference values computed with 30-digit arithmetic from the defining
    // integrals (independent of the code under test).
    const I_V_AT_2: f64 = 0.807_819_333_968_729_0;
    const F_HALF_RANGE: f64 = 1.078_257_823_749_821_6;
    const G_HALF_RANGE: f64 = 0.842_875_177_406_298_0;

    #[test]
    fn positivity_intervals_are_correct() {
        assert_eq!(EllipticKernel::v().positivity_interval(), (1.0, f64::INFINITY));
        assert_eq!(EllipticKernel::m().positivity_interval(), (-1.0, 1.0));
        let (lo, hi) = EllipticKernel::f_hat().positivity_interval();
        assert!(lo.is_infinite() && hi.is_infinite());
    }

    #[test]
    fn forward_matches_frozen_reference_values() {
        let v = EllipticKernel::v();
        assert!((v.forward(2.0).unwrap() - I_V_AT_2).abs() < 1e-12);
        let m = EllipticKernel::m();
        assert!((m.forward(1.0).unwrap() - PSI_1).abs() < 1e-12);
        let f = EllipticKernel::f_hat();
        assert!((f.forward(1.0).unwrap() - F_HALF_RANGE).abs() < 1e-12);
        let g = EllipticKernel::g_hat();
        assert!((g.forward(1.0).unwrap() - G_HALF_RANGE).abs() < 1e-12);
    }

    #[test]
    fn tail_identity_of_the_v_integral() {
        // ∫₁^∞ dτ/√(τ⁴−1) = ∫₀¹ dσ/√(1−σ⁴) = ψ₁ exactly (τ → 1/τ).
        let v = EllipticKernel::v();
        let total = v.forward(f64::INFINITY).unwrap();
        assert!((total - PSI_1).abs() < 1e-12, "got {total}");
        assert_eq!(v.output_range().1, total);
    }

    #[test]
    fn palindromic_kernels_have_doubled_ranges() {
        // For kernels invariant under τ → 1/τ the full half-line integral is
        // twice the [0,1] part.
        let f = EllipticKernel::f_hat();
        assert!((f.output_range().1 - 2.0 * F_HALF_RANGE).abs() < 1e-12);
        let g = EllipticKernel::g_hat();
        assert!((g.output_range().1 - 2.0 * G_HALF_RANGE).abs() < 1e-12);
        // Both are odd: range symmetric about 0.
        assert!((f.output_range().0 + f.output_range().1).abs() < 1e-12);
    }

    #[test]
    fn inverse_round_trips() {
        let kernels = [
            EllipticKernel::v(),
            EllipticKernel::m(),
            EllipticKernel::f_hat(),
            EllipticKernel::g_hat(),
        ];
        for kernel in &kernels {
            let (lo, hi) = kernel.positivity_interval();
            let t_lo = if lo.is_finite() { lo + 1e-6 } else { -3.0 };
            let t_hi = if hi.is_finite() { hi - 1e-6 } else { 3.0 };
            for i in 0..25 {
                let t = t_lo + (t_hi - t_lo) * i as f64 / 24.0;
                let xi = kernel.forward(t).unwrap();
                let back = kernel.inverse(xi).unwrap();
                assert!(
                    (back - t).abs() < 1e-9,
                    "kernel ({},{},{}): t={t} xi={xi} back={back}",
                    kernel.q4,
                    kernel.q2,
                    kernel.q0
                );
            }
        }
    }

    #[test]
    fn inverse_at_base_and_out_of_range() {
        let v = EllipticKernel::v();
        assert_eq!(v.inverse(0.0).unwrap(), 1.0);
        // The V integral saturates at ψ₁; far beyond is out of range.
        assert!(matches!(v.inverse(2.0), Err(ZmcError::RangeError { .. })));
        let m = EllipticKernel::m();
        assert!(matches!(m.inverse(1.5), Err(ZmcError::RangeError { .. })));
        // Endpoint value inverts to the endpoint.
        let t = m.inverse(PSI_1).unwrap();
        assert!((t - 1.0).abs() < 1e-9);
    }

    #[test]
    fn v_and_m_are_reciprocal_mirrors() {
        // V(ξ) = 1/M(ψ₁ − ξ): the τ → 1/τ substitution inside the integral.
        let v = EllipticKernel::v();
        let m = EllipticKernel::m();
        for &xi in &[0.1, 0.4, 0.8, 1.2] {
            let lhs = v.inverse(xi).unwrap();
            let rhs = 1.0 / m.inverse(PSI_1 - xi).unwrap();
            assert!((lhs - rhs).abs() < 1e-9, "xi={xi}: V={lhs} vs 1/M={rhs}");
        }
    }

    #[test]
    fn degenerate_bases_are_rejected() {
        // Q = τ⁴ + τ² has a double root at the requested base 0.
        assert!(EllipticKernel::new(1.0, 1.0, 0.0, 0.0, 1.0).is_err());
        // Base point in a negative region.
        assert!(EllipticKernel::new(1.0, 0.0, -1.0, 0.0, 1.0).is_err());
    }

    #[test]
    fn forward_outside_interval_is_a_domain_error() {
        let v = EllipticKernel::v();
        assert!(matches!(v.forward(0.5), Err(ZmcError::DomainError { .. })));
        assert!(matches!(v.forward(-2.0), Err(ZmcError::DomainError { .. })));
    }
}
