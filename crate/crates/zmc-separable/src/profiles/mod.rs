//! Profile functions: the squared-derivative families `X(u)` and the
//! coordinate functions they induce.
//!
//! A separable surface `f(x) + g(y) + h(z) = 0` with zero mean curvature has
//! `X(u) = f′(x)²` (as a function of `u = f(x)`) in one of three closed-form
//! families selected by the constant `K = X‴/X′`:
//!
//! * `K = k² > 0`: `X(u) = a + b·e^{ku} + c·e^{−ku}`
//! * `K = 0`:      `X(u) = a + b·u + c·u²`
//! * `K = −k² < 0`: `X(u) = a + b·cos(ku) + c·sin(ku)`
//!
//! The coordinate function is recovered from `dx = du / (±√X(u))` by
//! quadrature. Two implementations of the same [`AxisMap`] interface exist on
//! purpose:
//!
//! * [`ClosedFormMap`] wraps a hand-written closed form (e.g.
//!   `f(x) = log sinh x`) and is what the catalog uses for evaluation;
//! * [`ProfileMap`] reconstructs the map purely numerically from `X` — it
//!   integrates `1/√X` with singular-endpoint substitutions and inverts the
//!   result by bracketed root finding.
//!
//! Agreement between the two routes is one of the crate's main verification
//! instruments: they share no formulas beyond `X` itself.

use crate::quadrature::{integrate, integrate_inverse_sqrt, QuadratureConfig, SqrtEndpoint};
use crate::roots;
use crate::types::{CaseK, CoeffRow, Profile, Result, ZmcError};

pub mod elliptic;

/// Evaluate the `order`-th derivative (0–3) of `X(u)` for the given family.
///
/// Total in `u` for every case: the families are entire functions.
///
/// ```
/// use zmc_separable::profiles::eval_X;
/// use zmc_separable::types::{CaseK, CoeffRow};
///
/// // X(u) = 1 + e^{−2u}: X(0) = 1 + 1 = 2.
/// let x = eval_X(CoeffRow::new(1.0, 0.0, 1.0), CaseK::positive(), 0.0, 0);
/// assert_eq!(x, 2.0);
/// // Third-derivative ratio X‴/X′ equals K = k² = 4 everywhere.
/// let d1 = eval_X(CoeffRow::new(1.0, 0.0, 1.0), CaseK::positive(), 0.7, 1);
/// let d3 = eval_X(CoeffRow::new(1.0, 0.0, 1.0), CaseK::positive(), 0.7, 3);
/// assert!((d3 / d1 - 4.0).abs() < 1e-12);
/// ```
#[allow(non_snake_case)]
pub fn eval_X(coeffs: CoeffRow, case: CaseK, u: f64, order: u8) -> f64 {
    assert!(order <= 3, "derivative order must be 0..=3");
    let CoeffRow { a, b, c } = coeffs;
    match case {
        CaseK::Positive { k } => {
            let kp = k.powi(order as i32);
            let km = (-k).powi(order as i32);
            let head = if order == 0 { a } else { 0.0 };
            head + b * kp * (k * u).exp() + c * km * (-k * u).exp()
        }
        CaseK::Zero => match order {
            0 => a + u * (b + c * u),
            1 => b + 2.0 * c * u,
            2 => 2.0 * c,
            _ => 0.0,
        },
        CaseK::Negative { k } => {
            let (s, co) = (k * u).sin_cos();
            match order {
                0 => a + b * co + c * s,
                1 => k * (-b * s + c * co),
                2 => k * k * (-b * co - c * s),
                _ => k * k * k * (b * s - c * co),
            }
        }
    }
}

/// Maximum deviation of `X‴/X′` from the case constant `K` over the samples.
///
/// Samples where `|X′| < 1e−8` are skipped (the ratio is indeterminate
/// there); if every sample is skipped the check cannot conclude anything and
/// reports [`ZmcError::AllSamplesDegenerate`].
pub fn kk_ratio_check(coeffs: CoeffRow, case: CaseK, u_samples: &[f64]) -> Result<f64> {
    kk_ratio_of(
        |u| eval_X(coeffs, case, u, 1),
        |u| eval_X(coeffs, case, u, 3),
        case.big_k(),
        u_samples,
    )
}

/// Generic form of [`kk_ratio_check`] over arbitrary derivative evaluators;
/// lets tests verify that a corrupted evaluator is actually detected.
pub(crate) fn kk_ratio_of(
    d1: impl Fn(f64) -> f64,
    d3: impl Fn(f64) -> f64,
    big_k: f64,
    u_samples: &[f64],
) -> Result<f64> {
    let mut max_dev: Option<f64> = None;
    for &u in u_samples {
        let x1 = d1(u);
        if x1.abs() < 1e-8 {
            continue;
        }
        let dev = (d3(u) / x1 - big_k).abs();
        max_dev = Some(max_dev.map_or(dev, |m: f64| m.max(dev)));
    }
    max_dev.ok_or(ZmcError::AllSamplesDegenerate)
}

/// A concrete coordinate function for one axis: `u = f(x)` with two
/// derivatives and a domain.
///
/// Implemented by [`ClosedFormMap`] (hand-written formulas, possibly spanning
/// several monotone branches) and [`ProfileMap`] (numeric reconstruction of a
/// single monotone branch from `X`).
pub trait AxisMap: Send + Sync {
    /// `u = f(x)`.
    fn value(&self, x: f64) -> Result<f64>;
    /// `f′(x)`.
    fn d1(&self, x: f64) -> Result<f64>;
    /// `f″(x)`.
    fn d2(&self, x: f64) -> Result<f64>;
    /// Closed interval of valid coordinates (bounds may be ±∞; evaluation at
    /// an endpoint may still fail if the value diverges there).
    fn x_domain(&self) -> (f64, f64);
    /// The squared-derivative family this map solves.
    fn profile(&self) -> &Profile;
}

/// Hand-written closed form of a coordinate function.
///
/// `value_fn` and `d1_fn` supply `f` and `f′`; the second derivative comes
/// from the family identity `2f″(x) = X′(f(x))`, which holds on every branch
/// and costs no extra formula.
pub struct ClosedFormMap {
    profile: Profile,
    x_domain: (f64, f64),
    value_fn: Box<dyn Fn(f64) -> f64 + Send + Sync>,
    d1_fn: Box<dyn Fn(f64) -> f64 + Send + Sync>,
}

impl ClosedFormMap {
    pub fn new(
        profile: Profile,
        x_domain: (f64, f64),
        value_fn: impl Fn(f64) -> f64 + Send + Sync + 'static,
        d1_fn: impl Fn(f64) -> f64 + Send + Sync + 'static,
    ) -> Self {
        ClosedFormMap { profile, x_domain, value_fn: Box::new(value_fn), d1_fn: Box::new(d1_fn) }
    }

    fn check(&self, x: f64) -> Result<()> {
        let (lo, hi) = self.x_domain;
        if x >= lo && x <= hi {
            Ok(())
        } else {
            Err(ZmcError::DomainError { axis: self.profile.axis.name(), value: x, lo, hi })
        }
    }
}

impl AxisMap for ClosedFormMap {
    fn value(&self, x: f64) -> Result<f64> {
        self.check(x)?;
        Ok((self.value_fn)(x))
    }

    fn d1(&self, x: f64) -> Result<f64> {
        self.check(x)?;
        Ok((self.d1_fn)(x))
    }

    fn d2(&self, x: f64) -> Result<f64> {
        let u = self.value(x)?;
        Ok(0.5 * eval_X(self.profile.coeffs, self.profile.case, u, 1))
    }

    fn x_domain(&self) -> (f64, f64) {
        self.x_domain
    }

    fn profile(&self) -> &Profile {
        &self.profile
    }
}

/// What happens to `X` at one end of its positivity interval; decides how the
/// profile integral behaves there.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum EndKind {
    /// `X(r) = 0`, `X′(r) ≠ 0`: square-root singularity, finite coordinate
    /// limit (a turning point of the coordinate function).
    SimpleRoot,
    /// `X(r) = X′(r) = 0`: logarithmic divergence, infinite coordinate range.
    DoubleRoot,
    /// `X(r) > 0` at a finite endpoint: plain integrable end.
    Regular,
    /// Infinite endpoint with convergent tail (exponential growth of `X`).
    TailConvergent,
    /// Infinite endpoint with divergent tail.
    TailDivergent,
}

fn classify_end(profile: &Profile, at: f64, is_left: bool) -> EndKind {
    let CoeffRow { a, b, c } = profile.coeffs;
    if at.is_infinite() {
        return match profile.case {
            // X grows like b·e^{ku} (resp. c·e^{−ku}), so 1/√X decays
            // exponentially iff the leading coefficient is positive.
            CaseK::Positive { .. } => {
                let converges = if is_left { c > 0.0 } else { b > 0.0 };
                if converges {
                    EndKind::TailConvergent
                } else {
                    EndKind::TailDivergent
                }
            }
            // Bounded-oscillation and quadratic families both give
            // non-integrable 1/√X tails.
            _ => EndKind::TailDivergent,
        };
    }
    let scale = a.abs().max(b.abs()).max(c.abs()).max(1.0);
    let x0 = eval_X(profile.coeffs, profile.case, at, 0);
    let x1 = eval_X(profile.coeffs, profile.case, at, 1);
    if x0.abs() <= 1e-9 * scale {
        if x1.abs() > 1e-6 * scale {
            EndKind::SimpleRoot
        } else {
            EndKind::DoubleRoot
        }
    } else {
        EndKind::Regular
    }
}

/// Cancellation-free evaluation of `X(r + dir·e)/e` at a root `r` of `X`
/// (`dir = ±1` points into the domain). Enforces `X(r) = 0` exactly so the
/// chart integrand `2/√(ratio)` is clean even when `r` carries round-off.
fn root_ratio(
    coeffs: CoeffRow,
    case: CaseK,
    r: f64,
    dir: f64,
) -> Box<dyn Fn(f64) -> f64 + Send + Sync> {
    let CoeffRow { a, b, c } = coeffs;
    match case {
        CaseK::Positive { k } => {
            // X(r+d) = a + B·e^{kd} + C·e^{−kd} with B = b·e^{kr}; using
            // C := −(a+B) (the root condition) gives
            // X(r+d) = −a·expm1(−kd) + B·(expm1(kd) − expm1(−kd)).
            let big_b = b * (k * r).exp();
            Box::new(move |e| {
                if e == 0.0 {
                    return dir * k * (a + 2.0 * big_b);
                }
                let d = dir * e;
                (-a * (-k * d).exp_m1() + big_b * ((k * d).exp_m1() - (-k * d).exp_m1())) / e
            })
        }
        CaseK::Negative { k } => {
            // X(r+d) = a + b̂·cos(kd) + ĉ·sin(kd) with b̂ := −a (root
            // condition), so X(r+d) = 2a·sin²(kd/2) + ĉ·sin(kd).
            let c_hat = -b * (k * r).sin() + c * (k * r).cos();
            Box::new(move |e| {
                if e == 0.0 {
                    return dir * k * c_hat;
                }
                let d = dir * e;
                let half = (0.5 * k * d).sin();
                (2.0 * a * half * half + c_hat * (k * d).sin()) / e
            })
        }
        CaseK::Zero => {
            // X(r+d) = X′(r)·d + c·d² exactly.
            let slope = b + 2.0 * c * r;
            Box::new(move |e| dir * slope + c * e)
        }
    }
}

/// Cancellation-free evaluation of `X(r + du)` anchored at `r`: the value is
/// assembled from `expm1`/`sinh²`/`sin²` pieces so that evaluating near a
/// (near-)double root of `X` costs relative accuracy `O(ε)` instead of the
/// `O(ε/du²)` the plain three-term sum loses to cancellation. Exact algebra
/// for any `r`, not only roots.
fn shifted_radicand(
    coeffs: CoeffRow,
    case: CaseK,
    r: f64,
) -> Box<dyn Fn(f64) -> f64 + Send + Sync> {
    let CoeffRow { a, b, c } = coeffs;
    match case {
        CaseK::Positive { k } => {
            // X(r+du) = a + B·e^{k·du} + C·e^{−k·du} with B = b·e^{kr},
            // C = c·e^{−kr}; regrouped as
            // X(r) + 4B·sinh²(k·du/2) + (C−B)·expm1(−k·du),
            // where X(r) and C−B are du-free and the du-terms are clean.
            let big_b = b * (k * r).exp();
            let big_c = c * (-k * r).exp();
            let at_r = a + big_b + big_c;
            Box::new(move |du| {
                let s = (0.5 * k * du).sinh();
                at_r + 4.0 * big_b * s * s + (big_c - big_b) * (-k * du).exp_m1()
            })
        }
        CaseK::Negative { k } => {
            // X(r+du) = a + b̂·cos(k·du) + ĉ·sin(k·du) by angle addition;
            // cos(k·du) − 1 = −2·sin²(k·du/2) keeps the zero exact.
            let b_hat = b * (k * r).cos() + c * (k * r).sin();
            let c_hat = -b * (k * r).sin() + c * (k * r).cos();
            let at_r = a + b_hat;
            Box::new(move |du| {
                let s = (0.5 * k * du).sin();
                at_r - 2.0 * b_hat * s * s + c_hat * (k * du).sin()
            })
        }
        CaseK::Zero => {
            // X(r+du) = X(r) + X′(r)·du + c·du², exactly.
            let at_r = a + b * r + c * r * r;
            let slope = b + 2.0 * c * r;
            Box::new(move |du| at_r + slope * du + c * du * du)
        }
    }
}

/// Numeric reconstruction of one monotone branch of a coordinate function
/// from its squared-derivative family.
///
/// Construction computes the coordinate range once (finite limits at turning
/// points and convergent tails, ±∞ otherwise); [`ProfileMap::x_from_u`]
/// integrates `1/√X` from the anchor with singular-endpoint charts, and
/// [`ProfileMap::u_from_coordinate`] inverts that strictly monotone map by
/// bracketed root finding — never by marching the ODE across turning points.
pub struct ProfileMap {
    profile: Profile,
    cfg: QuadratureConfig,
    lo_kind: EndKind,
    hi_kind: EndKind,
    /// Ordered coordinate range (x_min, x_max); entries may be ±∞.
    range: (f64, f64),
}

impl ProfileMap {
    pub fn new(profile: Profile) -> Result<Self> {
        // Profile integrals need a touch more headroom than the raw 1e−12
        // panel tolerance when the anchor sits on a turning point.
        Self::with_config(profile, QuadratureConfig::with_tol(1e-13))
    }

    pub fn with_config(profile: Profile, cfg: QuadratureConfig) -> Result<Self> {
        let (lo, hi) = profile.u_domain;
        if !(lo < hi) {
            return Err(ZmcError::InvalidConstants(format!(
                "empty profile domain [{lo}, {hi}]"
            )));
        }
        let u0 = profile.anchor.1;
        if !(u0 >= lo && u0 <= hi) {
            return Err(ZmcError::InvalidConstants(format!(
                "anchor value {u0} outside domain [{lo}, {hi}]"
            )));
        }
        // X must be positive on the interior; sample a finite window.
        let wlo = lo.max(u0 - 20.0);
        let whi = hi.min(u0 + 20.0);
        let scale = profile
            .coeffs
            .a
            .abs()
            .max(profile.coeffs.b.abs())
            .max(profile.coeffs.c.abs())
            .max(1.0);
        for i in 0..64 {
            let t = wlo + (whi - wlo) * (i as f64 + 0.5) / 64.0;
            if eval_X(profile.coeffs, profile.case, t, 0) < -1e-9 * scale {
                return Err(ZmcError::InvalidConstants(format!(
                    "X({t}) < 0 inside the declared domain"
                )));
            }
        }
        let lo_kind = classify_end(&profile, lo, true);
        let hi_kind = classify_end(&profile, hi, false);
        let mut map = ProfileMap { profile, cfg, lo_kind, hi_kind, range: (0.0, 0.0) };
        map.range = map.compute_range()?;
        Ok(map)
    }

    pub fn profile(&self) -> &Profile {
        &self.profile
    }

    /// Ordered coordinate range `(x_min, x_max)`; may contain ±∞.
    pub fn coordinate_range(&self) -> (f64, f64) {
        self.range
    }

    /// Width of the logarithmic chart window at a double-root domain end:
    /// half the domain when that is short (so two double-root ends tile it),
    /// capped at 1 so the window never reaches tail territory on unbounded
    /// domains.
    fn chart_window(&self) -> f64 {
        let (lo, hi) = self.profile.u_domain;
        let span = hi - lo;
        if span.is_finite() {
            (0.5 * span).min(1.0)
        } else {
            1.0
        }
    }

    /// `X(u)` for derivative queries: the anchored shifted form near
    /// double-root domain ends (where the raw three-term sum cancels to
    /// round-off), the plain evaluator elsewhere.
    fn radicand_accurate(&self, u: f64) -> f64 {
        let (lo, hi) = self.profile.u_domain;
        let w = self.chart_window();
        if self.lo_kind == EndKind::DoubleRoot && u - lo <= w {
            shifted_radicand(self.profile.coeffs, self.profile.case, lo)(u - lo)
        } else if self.hi_kind == EndKind::DoubleRoot && hi - u <= w {
            shifted_radicand(self.profile.coeffs, self.profile.case, hi)(u - hi)
        } else {
            eval_X(self.profile.coeffs, self.profile.case, u, 0)
        }
    }

    /// `∫_a^b du/√X(u)` for `lo ≤ a ≤ b ≤ hi`, with substitution charts at
    /// singular domain ends. Simple roots of `X` get the square-root chart
    /// ([`SqrtEndpoint`]); a double root at `r` makes the integrand diverge
    /// like `1/|u − r|`, which plain adaptive panels resolve too slowly, so
    /// segments inside the chart window get the substitution `u = r ∓ e^σ`,
    /// whose integrand `e^σ/√X(r ∓ e^σ)` is bounded and analytic all the way
    /// to the root.
    fn segment_integral(&self, a: f64, b: f64) -> Result<f64> {
        let p = &self.profile;
        let (lo, hi) = p.u_domain;
        let coeffs = p.coeffs;
        let case = p.case;
        let radicand = move |t: f64| eval_X(coeffs, case, t, 0);
        if !(b > a) {
            return Ok(0.0);
        }

        let mut total = 0.0;
        let (mut a, mut b) = (a, b);
        if self.lo_kind == EndKind::DoubleRoot {
            if a <= lo {
                return Ok(f64::INFINITY);
            }
            let window = lo + self.chart_window();
            if a < window {
                let cut = window.min(b);
                let shifted = shifted_radicand(coeffs, case, lo);
                total += integrate(
                    |s| {
                        let d = s.exp();
                        d / shifted(d).sqrt()
                    },
                    (a - lo).ln(),
                    (cut - lo).ln(),
                    &self.cfg,
                )?;
                a = cut;
            }
        }
        if self.hi_kind == EndKind::DoubleRoot && b > a {
            if b >= hi {
                return Ok(f64::INFINITY);
            }
            let window = hi - self.chart_window();
            if b > window {
                let cut = window.max(a);
                let shifted = shifted_radicand(coeffs, case, hi);
                total += integrate(
                    |s| {
                        let d = s.exp();
                        d / shifted(-d).sqrt()
                    },
                    (hi - b).ln(),
                    (hi - cut).ln(),
                    &self.cfg,
                )?;
                b = cut;
            }
        }
        if !(b > a) {
            return Ok(total);
        }

        let left_ratio = if self.lo_kind == EndKind::SimpleRoot {
            Some(root_ratio(coeffs, case, lo, 1.0))
        } else {
            None
        };
        let right_ratio = if self.hi_kind == EndKind::SimpleRoot {
            Some(root_ratio(coeffs, case, hi, -1.0))
        } else {
            None
        };
        let left = left_ratio
            .as_ref()
            .map(|r| SqrtEndpoint { root: lo, ratio: r });
        let right = right_ratio
            .as_ref()
            .map(|r| SqrtEndpoint { root: hi, ratio: r });
        Ok(total + integrate_inverse_sqrt(&radicand, left, right, a, b, &self.cfg)?)
    }

    /// Convergent tail `∫_U^{+∞} du/√X` for the exponential family with
    /// `b > 0`: the substitution `σ = e^{−k(u−U)/2}` maps it to
    /// `(2/k)·∫_0^1 dσ/√(aσ² + bE + cσ⁴/E)` with `E = e^{kU}`, a smooth
    /// integrand because `σ²X > 0` on the domain and `bE > 0` at `σ = 0`.
    fn tail_plus(&self, u_start: f64) -> Result<f64> {
        let CoeffRow { a, b, c } = self.profile.coeffs;
        let k = self.profile.case.k().expect("tail only for exponential case");
        let e_factor = (k * u_start).exp();
        let v = integrate(
            |s| 1.0 / (a * s * s + b * e_factor + c * s.powi(4) / e_factor).sqrt(),
            0.0,
            1.0,
            &self.cfg,
        )?;
        Ok(2.0 / k * v)
    }

    /// Mirror image of [`Self::tail_plus`]: `∫_{−∞}^{U} du/√X` for `c > 0`.
    fn tail_minus(&self, u_start: f64) -> Result<f64> {
        let CoeffRow { a, b, c } = self.profile.coeffs;
        let k = self.profile.case.k().expect("tail only for exponential case");
        let e_factor = (-k * u_start).exp();
        let v = integrate(
            |s| 1.0 / (a * s * s + c * e_factor + b * s.powi(4) / e_factor).sqrt(),
            0.0,
            1.0,
            &self.cfg,
        )?;
        Ok(2.0 / k * v)
    }

    fn compute_range(&self) -> Result<(f64, f64)> {
        let (lo, hi) = self.profile.u_domain;
        let (x0, u0) = self.profile.anchor;
        let s = self.profile.sign.value();

        let len_lo = match self.lo_kind {
            EndKind::SimpleRoot | EndKind::Regular => self.segment_integral(lo, u0)?,
            EndKind::DoubleRoot | EndKind::TailDivergent => f64::INFINITY,
            EndKind::TailConvergent => {
                let u_star = u0 - 1.0;
                self.tail_minus(u_star)? + self.segment_integral(u_star, u0)?
            }
        };
        let len_hi = match self.hi_kind {
            EndKind::SimpleRoot | EndKind::Regular => self.segment_integral(u0, hi)?,
            EndKind::DoubleRoot | EndKind::TailDivergent => f64::INFINITY,
            EndKind::TailConvergent => {
                let u_star = u0 + 1.0;
                self.segment_integral(u0, u_star)? + self.tail_plus(u_star)?
            }
        };
        let x_at_lo = x0 - s * len_lo;
        let x_at_hi = x0 + s * len_hi;
        Ok((x_at_lo.min(x_at_hi), x_at_lo.max(x_at_hi)))
    }

    /// The coordinate at which the profile reaches value `u`: the signed
    /// integral `x(u) = x₀ + sign·∫_{u₀}^{u} dt/√X(t)`. Strictly monotone in
    /// `u`; endpoints of the `u`-domain are allowed (turning points give the
    /// finite limit, divergent ends give ±∞).
    pub fn x_from_u(&self, u: f64) -> Result<f64> {
        let (lo, hi) = self.profile.u_domain;
        if !(u >= lo && u <= hi) {
            return Err(ZmcError::DomainError {
                axis: self.profile.axis.name(),
                value: u,
                lo,
                hi,
            });
        }
        let s = self.profile.sign.value();
        // Divergent endpoints map to infinite coordinates.
        if u == lo && matches!(self.lo_kind, EndKind::DoubleRoot | EndKind::TailDivergent) {
            return Ok(-s * f64::INFINITY);
        }
        if u == hi && matches!(self.hi_kind, EndKind::DoubleRoot | EndKind::TailDivergent) {
            return Ok(s * f64::INFINITY);
        }
        let (x0, u0) = self.profile.anchor;
        let (a, b, orient) = if u >= u0 { (u0, u, 1.0) } else { (u, u0, -1.0) };
        let i = self.segment_integral(a, b)?;
        Ok(x0 + s * orient * i)
    }

    /// Inverse of [`Self::x_from_u`]: the profile value at coordinate `x`.
    pub fn u_from_coordinate(&self, x: f64) -> Result<f64> {
        let (x_min, x_max) = self.range;
        let slack = 1e-9 * (1.0 + x.abs());
        if !(x >= x_min - slack && x <= x_max + slack) {
            return Err(ZmcError::DomainError {
                axis: self.profile.axis.name(),
                value: x,
                lo: x_min,
                hi: x_max,
            });
        }
        let xq = x.clamp(x_min, x_max);
        let (lo, hi) = self.profile.u_domain;
        let (x0, u0) = self.profile.anchor;
        let s = self.profile.sign.value();

        // Choose the side of the anchor the target lies on; the map is
        // monotone increasing in u for sign +, decreasing for sign −.
        let going_up = (xq - x0) * s >= 0.0;
        let phi = |u: f64| match self.x_from_u(u) {
            Ok(v) => (v - xq) * s, // increasing in u
            Err(_) => f64::NAN,
        };
        let (bl, bh) = if going_up {
            let bh = if hi.is_finite() {
                hi
            } else {
                match roots::expand_bracket(&phi, u0, 1.0, 1.0, 1e12) {
                    Some((_, outer)) => outer,
                    None => {
                        return Err(ZmcError::NoConvergence {
                            reason: format!("no profile value found for coordinate {x}"),
                        })
                    }
                }
            };
            (u0, bh)
        } else {
            let bl = if lo.is_finite() {
                lo
            } else {
                match roots::expand_bracket(&phi, u0, 1.0, -1.0, -1e12) {
                    Some((_, outer)) => outer,
                    None => {
                        return Err(ZmcError::NoConvergence {
                            reason: format!("no profile value found for coordinate {x}"),
                        })
                    }
                }
            };
            (bl, u0)
        };
        // A finite u-end at a double root of X maps to coordinate ±∞, which
        // the bracketed solver rejects outright. φ is monotone, so probing
        // geometrically from the finite-valued end toward the divergent one
        // finds an interior point on the far side of the root; the probes
        // passed on the way tighten the near side.
        let (fl, fh) = (phi(bl), phi(bh));
        if fl == 0.0 {
            return Ok(bl);
        }
        if fh == 0.0 {
            return Ok(bh);
        }
        let stall = || ZmcError::NoConvergence {
            reason: format!("profile inversion stalled for coordinate {x}"),
        };
        let (bl, bh) = if !fl.is_finite() {
            refit_divergent_end(&phi, bl, bh, fh).ok_or_else(stall)?
        } else if !fh.is_finite() {
            let (far, near) = refit_divergent_end(&phi, bh, bl, fl).ok_or_else(stall)?;
            (near, far)
        } else {
            (bl, bh)
        };
        if bl == bh {
            return Ok(bl);
        }
        let mut u = roots::brent(&phi, bl, bh, 1e-13, 200).ok_or_else(stall)?;
        // Newton polish: dφ/du = 1/√X(u) exactly. Deep inside a double-root
        // end the root can be orders of magnitude smaller than the solver's
        // absolute interval tolerance, leaving an O(1) *relative* error that
        // each Newton step squares; a handful of guarded steps reaches the
        // quadrature floor, and the monotone-decrease guard exits early
        // everywhere else.
        let mut f_u = phi(u);
        for _ in 0..6 {
            if !f_u.is_finite() || f_u == 0.0 {
                break;
            }
            let x_val = self.radicand_accurate(u);
            if !(x_val > 0.0) {
                break;
            }
            let next = u - f_u * x_val.sqrt();
            if !(next > lo && next < hi) {
                break;
            }
            let f_next = phi(next);
            if !f_next.is_finite() || f_next.abs() >= f_u.abs() {
                break;
            }
            u = next;
            f_u = f_next;
        }
        Ok(u)
    }
}

/// Support for [`ProfileMap::u_from_coordinate`]: `phi` is monotone on the
/// bracket but not finite at `bad`. Walks probes `bad + (good − bad)/2ʲ`
/// toward `bad` until one lands on the far side of the root, tightening the
/// near side with every finite probe passed on the way. Returns a
/// sign-changing `(far, near)` pair; a degenerate pair when every probe sits
/// on the near side (the root is then within `2⁻⁶⁰` of the bracket width from
/// `bad`, and the caller takes the last probe); or `None` when a probe failed
/// to evaluate and no sign change was ever seen, which means the root hides
/// behind a stretch the quadrature cannot cross.
fn refit_divergent_end(
    phi: &impl Fn(f64) -> f64,
    bad: f64,
    good: f64,
    f_good: f64,
) -> Option<(f64, f64)> {
    let mut near = good;
    let mut saw_failure = false;
    for j in 1..=60 {
        let m = bad + (good - bad) * 2f64.powi(-j);
        let pm = phi(m);
        if !pm.is_finite() {
            saw_failure = true;
            continue;
        }
        if pm == 0.0 || pm.signum() != f_good.signum() {
            return Some((m, near));
        }
        near = m;
    }
    if saw_failure {
        None
    } else {
        Some((near, near))
    }
}

impl AxisMap for ProfileMap {
    fn value(&self, x: f64) -> Result<f64> {
        self.u_from_coordinate(x)
    }

    fn d1(&self, x: f64) -> Result<f64> {
        let u = self.u_from_coordinate(x)?;
        let x_val = self.radicand_accurate(u).max(0.0);
        Ok(self.profile.sign.value() * x_val.sqrt())
    }

    fn d2(&self, x: f64) -> Result<f64> {
        let u = self.u_from_coordinate(x)?;
        Ok(0.5 * eval_X(self.profile.coeffs, self.profile.case, u, 1))
    }

    fn x_domain(&self) -> (f64, f64) {
        self.range
    }

    fn profile(&self) -> &Profile {
        &self.profile
    }
}

/// Free-function form of [`ProfileMap::x_from_u`] for one-shot use.
pub fn coordinate_from_u(profile: &Profile, u: f64) -> Result<f64> {
    ProfileMap::new(*profile)?.x_from_u(u)
}

/// Free-function form of [`ProfileMap::u_from_coordinate`] for one-shot use.
/// Build a [`ProfileMap`] once if you invert repeatedly: the coordinate range
/// is recomputed on every call here.
pub fn u_from_coordinate(profile: &Profile, x: f64) -> Result<f64> {
    ProfileMap::new(*profile)?.u_from_coordinate(x)
}

/// Maximum over samples of the defect in the two family identities
/// `f′(x)² = X(f(x))` and `2f″(x) = X′(f(x))`, with the derivatives taken by
/// finite differences on the map's *values* only. This deliberately ignores
/// the map's own `d1`/`d2`, so it catches a map whose value and derivative
/// formulas disagree.
///
/// The second derivative uses the five-point stencil at step 1e−3 rather
/// than the three-point one at a smaller step: the value-rounding floor of a
/// second difference is `~ε·|f|/h²`, which for profiles reaching `|f| ≈ 10`
/// would already eat a 1e−6 budget at `h = 1e−4`, while the wider five-point
/// stencil keeps truncation at `O(h⁴ f⁽⁶⁾)` and rounding near 1e−8 at once.
pub fn derivative_identity_check(map: &dyn AxisMap, x_samples: &[f64]) -> Result<f64> {
    const H1: f64 = 1e-5;
    const H2: f64 = 1e-3;
    let prof = map.profile();
    let mut max_dev = 0.0_f64;
    for &x in x_samples {
        let u = map.value(x)?;
        let d1 = (map.value(x + H1)? - map.value(x - H1)?) / (2.0 * H1);
        let d2 = (-map.value(x + 2.0 * H2)? + 16.0 * map.value(x + H2)? - 30.0 * u
            + 16.0 * map.value(x - H2)?
            - map.value(x - 2.0 * H2)?)
            / (12.0 * H2 * H2);
        let dev1 = (d1 * d1 - eval_X(prof.coeffs, prof.case, u, 0)).abs();
        let dev2 = (2.0 * d2 - eval_X(prof.coeffs, prof.case, u, 1)).abs();
        max_dev = max_dev.max(dev1).max(dev2);
    }
    Ok(max_dev)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::types::{Axis, Profile, Sign};

    fn log_sinh_profile() -> Profile {
        // f(x) = log sinh x: X(u) = 1 + e^{−2u}, domain all of ℝ, anchor
        // f(arcsinh 1) = 0.
        Profile::new(
            Axis::X,
            CaseK::positive(),
            CoeffRow::new(1.0, 0.0, 1.0),
            Sign::Plus,
            (f64::NEG_INFINITY, f64::INFINITY),
            (1.0_f64.asinh(), 0.0),
        )
    }

    #[test]
    fn eval_x_spot_values() {
        // Quadratic family with a = 2, c = −2: X(0) = 2.
        let x = eval_X(CoeffRow::new(2.0, 0.0, -2.0), CaseK::Zero, 0.0, 0);
        assert_eq!(x, 2.0);
        // Trigonometric derivatives.
        let c = CoeffRow::new(0.5, 0.25, -0.75);
        let k = 1.3;
        let u = 0.4;
        let case = CaseK::Negative { k };
        let h = 1e-6;
        let fd = (eval_X(c, case, u + h, 0) - eval_X(c, case, u - h, 0)) / (2.0 * h);
        assert!((fd - eval_X(c, case, u, 1)).abs() < 1e-7);
    }

    #[test]
    fn kk_ratio_is_tight_for_all_families() {
        let us: Vec<f64> = (0..100).map(|i| -1.0 + 2.0 * i as f64 / 99.0).collect();
        let dev = kk_ratio_check(CoeffRow::new(1.0, 0.0, 1.0), CaseK::positive(), &us).unwrap();
        assert!(dev < 1e-10);
        let dev =
            kk_ratio_check(CoeffRow::new(0.3, 1.0, -0.5), CaseK::Negative { k: 1.0 }, &us).unwrap();
        assert!(dev < 1e-10);
        let dev = kk_ratio_check(CoeffRow::new(2.0, 0.0, -2.0), CaseK::Zero, &us).unwrap();
        assert!(dev < 1e-14);
    }

    #[test]
    fn kk_ratio_detects_corrupted_evaluator() {
        let us: Vec<f64> = (0..50).map(|i| -1.0 + 2.0 * i as f64 / 49.0).collect();
        let c = CoeffRow::new(1.0, 0.0, 1.0);
        let case = CaseK::positive();
        // Inject a rogue e^{3u} term into the third derivative.
        let dev = kk_ratio_of(
            |u| eval_X(c, case, u, 1),
            |u| eval_X(c, case, u, 3) + (3.0 * u).exp(),
            case.big_k(),
            &us,
        )
        .unwrap();
        assert!(dev > 1.0);
    }

    #[test]
    fn kk_ratio_flags_all_degenerate_samples() {
        // X = const: X′ ≡ 0, every sample skipped.
        let r = kk_ratio_check(CoeffRow::new(1.0, 0.0, 0.0), CaseK::Zero, &[0.0, 1.0]);
        assert!(matches!(r, Err(ZmcError::AllSamplesDegenerate)));
    }

    #[test]
    fn log_sinh_map_reproduces_known_values() {
        let map = ProfileMap::new(log_sinh_profile()).unwrap();
        // x(u) = arcsinh(e^u).
        let x = map.x_from_u(0.0).unwrap();
        assert!((x - 1.0_f64.asinh()).abs() < 1e-12);
        let x = map.x_from_u(1.0).unwrap();
        assert!((x - std::f64::consts::E.asinh()).abs() < 1e-11, "got {x}");
        let x = map.x_from_u(-3.0).unwrap();
        assert!((x - (-3.0_f64).exp().asinh()).abs() < 1e-11, "got {x}");
        // Coordinate range is (0, ∞): convergent tail at u → −∞.
        let (lo, hi) = map.coordinate_range();
        assert!(lo.abs() < 1e-9, "range start {lo}");
        assert!(hi.is_infinite());
    }

    #[test]
    fn log_sinh_round_trip() {
        let map = ProfileMap::new(log_sinh_profile()).unwrap();
        for i in 0..40 {
            let u = -4.0 + 8.0 * i as f64 / 39.0;
            let x = map.x_from_u(u).unwrap();
            let back = map.u_from_coordinate(x).unwrap();
            assert!((back - u).abs() < 1e-9, "u={u} x={x} back={back}");
        }
    }

    #[test]
    fn arcsin_profile_with_turning_points() {
        // X(u) = 2(1−u²) (quadratic family): f(x) = sin(√2·x)-type profile,
        // x(u) = arcsin(u)/√2, turning points at u = ±1.
        let profile = Profile::new(
            Axis::X,
            CaseK::Zero,
            CoeffRow::new(2.0, 0.0, -2.0),
            Sign::Plus,
            (-1.0, 1.0),
            (0.0, 0.0),
        );
        let map = ProfileMap::new(profile).unwrap();
        let root2 = std::f64::consts::SQRT_2;
        let x = map.x_from_u(0.5).unwrap();
        assert!((x - 0.5_f64.asin() / root2).abs() < 1e-12, "got {x}");
        // Finite range, reached exactly at the turning points.
        let (lo, hi) = map.coordinate_range();
        let quarter = std::f64::consts::FRAC_PI_2 / root2;
        assert!((hi - quarter).abs() < 1e-11, "hi={hi}");
        assert!((lo + quarter).abs() < 1e-11, "lo={lo}");
        // Round-trip close to the singular ends.
        for &u in &[-0.999, -0.5, 0.0, 0.9, 0.99999] {
            let x = map.x_from_u(u).unwrap();
            let back = map.u_from_coordinate(x).unwrap();
            assert!((back - u).abs() < 1e-8, "u={u} back={back}");
        }
        // Evaluation at the turning point itself gives the limit coordinate.
        let x_end = map.x_from_u(1.0).unwrap();
        assert!((x_end - quarter).abs() < 1e-11);
    }

    #[test]
    fn double_root_end_has_infinite_range() {
        // X(u) = e^{2u} + e^{−2u} − 2 = 4·sinh²u: double root at u = 0.
        // On (−∞, 0) this is the f(x) = log tanh x profile.
        let profile = Profile::new(
            Axis::X,
            CaseK::positive(),
            CoeffRow::new(-2.0, 1.0, 1.0),
            Sign::Plus,
            (f64::NEG_INFINITY, 0.0),
            (0.5_f64.atanh(), 0.5_f64.ln()),
        );
        let map = ProfileMap::new(profile).unwrap();
        let (lo, hi) = map.coordinate_range();
        assert!(lo.abs() < 1e-9, "lo={lo}"); // x → 0 as u → −∞ (tail converges)
        assert!(hi.is_infinite()); // log divergence at the double root
        // Spot value: f(1) = log tanh 1.
        let x = map.x_from_u(1.0_f64.tanh().ln()).unwrap();
        assert!((x - 1.0).abs() < 1e-10, "got {x}");
    }

    #[test]
    fn double_root_chart_reaches_deep_coordinates() {
        // Same log-tanh profile as above. Without a chart at the double
        // root, adaptive panels starve once tanh x is within ~5e−3 of 1
        // (x ≳ 3); the logarithmic substitution keeps both directions
        // accurate far beyond that.
        let profile = Profile::new(
            Axis::X,
            CaseK::positive(),
            CoeffRow::new(-2.0, 1.0, 1.0),
            Sign::Plus,
            (f64::NEG_INFINITY, 0.0),
            (0.5_f64.atanh(), 0.5_f64.ln()),
        );
        let map = ProfileMap::new(profile).unwrap();
        for i in 0..40 {
            let x = 0.2 + 14.8 * i as f64 / 39.0;
            let u = map.u_from_coordinate(x).unwrap();
            assert!((u - x.tanh().ln()).abs() < 1e-11, "x={x} u={u}");
            let back = map.x_from_u(u).unwrap();
            assert!((back - x).abs() < 1e-10, "x={x} back={back}");
        }
        // x_from_u stays accurate arbitrarily close to the root: the exact
        // inverse of u = log tanh x is x = artanh(e^u).
        for &u in &[-1e-6, -1e-10, -1e-13] {
            let x = map.x_from_u(u).unwrap();
            let exact = 0.5 * ((1.0 + u.exp()).ln() - (-u.exp_m1()).ln()); // artanh(e^u)
            assert!(
                (x - exact).abs() < 1e-9 * exact.max(1.0),
                "u={u} x={x} exact={exact}"
            );
        }
    }

    #[test]
    fn double_roots_at_both_ends_invert_deeply() {
        // X(u) = (1 − cos u)/2 = sin²(u/2): double roots at both ends of
        // (0, 2π). With f(0) = π the exact solution is f(x) = 4·arctan(e^{x/2}).
        let profile = Profile::new(
            Axis::X,
            CaseK::negative(),
            CoeffRow::new(0.5, -0.5, 0.0),
            Sign::Plus,
            (0.0, 2.0 * std::f64::consts::PI),
            (0.0, std::f64::consts::PI),
        );
        let map = ProfileMap::new(profile).unwrap();
        let (lo, hi) = map.coordinate_range();
        assert!(lo.is_infinite() && hi.is_infinite());
        for i in 0..=40 {
            let x = -22.0 + 44.0 * i as f64 / 40.0;
            let u = map.u_from_coordinate(x).unwrap();
            let exact = 4.0 * (0.5 * x).exp().atan();
            assert!((u - exact).abs() < 1e-10, "x={x} u={u} exact={exact}");
            let back = map.x_from_u(u).unwrap();
            assert!((back - x).abs() < 1e-8, "x={x} back={back}");
        }
    }

    #[test]
    fn trig_profile_round_trip() {
        // X(u) = 1 + sin u (k = 1): double roots at u = −π/2 + 2πn; take the
        // branch (−π/2, 3π/2) anchored at u = 0.
        let profile = Profile::new(
            Axis::Z,
            CaseK::negative(),
            CoeffRow::new(1.0, 0.0, 1.0),
            Sign::Plus,
            (-std::f64::consts::FRAC_PI_2, 3.0 * std::f64::consts::FRAC_PI_2),
            (0.0, 0.0),
        );
        let map = ProfileMap::new(profile).unwrap();
        let (lo, hi) = map.coordinate_range();
        assert!(lo.is_infinite() && hi.is_infinite());
        for &u in &[-1.2, -0.3, 0.0, 0.9, 2.8] {
            let x = map.x_from_u(u).unwrap();
            let back = map.u_from_coordinate(x).unwrap();
            assert!((back - u).abs() < 1e-9, "u={u} back={back}");
        }
    }

    #[test]
    fn out_of_domain_coordinates_are_rejected() {
        let profile = Profile::new(
            Axis::Y,
            CaseK::Zero,
            CoeffRow::new(2.0, 0.0, -2.0),
            Sign::Plus,
            (-1.0, 1.0),
            (0.0, 0.0),
        );
        let map = ProfileMap::new(profile).unwrap();
        let too_far = 2.0;
        assert!(matches!(
            map.u_from_coordinate(too_far),
            Err(ZmcError::DomainError { .. })
        ));
        assert!(matches!(map.x_from_u(1.5), Err(ZmcError::DomainError { .. })));
    }

    #[test]
    fn closed_form_map_agrees_with_profile_map() {
        // Dual routes for f = log sinh x.
        let profile = log_sinh_profile();
        let closed = ClosedFormMap::new(
            profile,
            (0.0, f64::INFINITY),
            |x: f64| x.sinh().ln(),
            |x: f64| 1.0 / x.tanh(),
        );
        let numeric = ProfileMap::new(profile).unwrap();
        for i in 1..=20 {
            let x = 0.15 * i as f64;
            let a = closed.value(x).unwrap();
            let b = numeric.value(x).unwrap();
            assert!((a - b).abs() < 1e-9, "x={x}: closed {a} vs numeric {b}");
        }
    }

    #[test]
    fn derivative_identity_check_closed_form() {
        let profile = log_sinh_profile();
        let closed = ClosedFormMap::new(
            profile,
            (0.0, f64::INFINITY),
            |x: f64| x.sinh().ln(),
            |x: f64| 1.0 / x.tanh(),
        );
        // Samples start at 0.5: the second difference carries a truncation
        // term ~(h²/6)·f⁗, and f⁗ ~ −6/x⁴ blows past the 1e-6 budget closer
        // to the x → 0 domain end (callers sample central bands for the same
        // reason).
        let xs: Vec<f64> = (0..100).map(|i| 0.5 + 2.5 * i as f64 / 99.0).collect();
        let dev = derivative_identity_check(&closed, &xs).unwrap();
        assert!(dev < 1e-6, "dev={dev}");
    }

    #[test]
    fn derivative_identity_check_numeric_route() {
        let map = ProfileMap::new(log_sinh_profile()).unwrap();
        let xs = [0.4, 0.9, 1.7];
        let dev = derivative_identity_check(&map, &xs).unwrap();
        assert!(dev < 1e-6, "dev={dev}");
    }

    #[test]
    fn free_functions_match_methods() {
        let profile = log_sinh_profile();
        let x = coordinate_from_u(&profile, 0.3).unwrap();
        let u = u_from_coordinate(&profile, x).unwrap();
        assert!((u - 0.3).abs() < 1e-9);
    }
}
