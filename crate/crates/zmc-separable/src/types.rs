//! Shared domain types.
//!
//! Everything here is a passive value type: the solution-family selector
//! [`CaseK`], the nine-coefficient [`ConstantsTriple`], the per-axis
//! [`Profile`] description, causal-character tags, and the error enum used
//! across the crate. All types are immutable after construction and cheap to
//! clone, so they can be shared freely across threads.
//!
//! Conventions used throughout the crate:
//!
//! * The ambient space is Lorentz–Minkowski 3-space: the metric is
//!   `dx² + dy² − dz²`, so the Lorentzian gradient of `F` is
//!   `(F_x, F_y, −F_z)` and the causal character of a level set is decided by
//!   the sign of `f′² + g′² − h′²`.
//! * A separable surface is the zero set of `F(x,y,z) = f(x) + g(y) + h(z)`.
//!   With `u = f(x)`, `v = g(y)`, `w = h(z)` the squared derivatives
//!   `X(u) = f′²`, `Y(v) = g′²`, `Z(w) = h′²` belong to one of three
//!   closed-form families selected by the constant `K = X‴/X′`.

use serde::{Deserialize, Serialize};
use std::fmt;

/// Absolute tolerance accepted for the constraint residuals of any
/// [`ConstantsTriple`] admitted into a surface.
pub const RESIDUAL_TOL: f64 = 1e-12;

/// Default tolerance on the normalized causal margin below which a point is
/// tagged [`CausalClass::Lightlike`]. Overridable per call and via the
/// `ZMC_TOL` environment variable in the CLI.
pub const LIGHTLIKE_TOL: f64 = 1e-8;

/// Sign of the family constant `K = X‴/X′` together with the normalized
/// frequency `k` where applicable.
///
/// `K > 0` (`K = k²`) selects exponential profiles, `K < 0` (`K = −k²`)
/// trigonometric ones, and `K = 0` quadratic polynomials. The canonical
/// normalizations are `k = 2` for the positive case and `k = 1` for the
/// negative case; [`crate::constraints::rescale`] moves between values of `k`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub enum CaseK {
    /// `K = k² > 0`: `X(u) = a + b·e^{ku} + c·e^{−ku}`.
    Positive { k: f64 },
    /// `K = 0`: `X(u) = a + b·u + c·u²`.
    Zero,
    /// `K = −k² < 0`: `X(u) = a + b·cos(ku) + c·sin(ku)`.
    Negative { k: f64 },
}

impl CaseK {
    /// Canonical positive case, `k = 2`.
    pub const fn positive() -> Self {
        CaseK::Positive { k: 2.0 }
    }

    /// Canonical negative case, `k = 1`.
    pub const fn negative() -> Self {
        CaseK::Negative { k: 1.0 }
    }

    /// The value of `K = X‴/X′` for this case.
    pub fn big_k(&self) -> f64 {
        match *self {
            CaseK::Positive { k } => k * k,
            CaseK::Zero => 0.0,
            CaseK::Negative { k } => -(k * k),
        }
    }

    /// The frequency `k`, or `None` for the quadratic case.
    pub fn k(&self) -> Option<f64> {
        match *self {
            CaseK::Positive { k } | CaseK::Negative { k } => Some(k),
            CaseK::Zero => None,
        }
    }

    /// Short machine tag used by the registry file and the CLI.
    pub fn tag(&self) -> &'static str {
        match self {
            CaseK::Positive { .. } => "pos",
            CaseK::Zero => "zero",
            CaseK::Negative { .. } => "neg",
        }
    }
}

impl fmt::Display for CaseK {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            CaseK::Positive { k } => write!(f, "K={} (k={})", k * k, k),
            CaseK::Zero => write!(f, "K=0"),
            CaseK::Negative { k } => write!(f, "K=-{} (k={})", k * k, k),
        }
    }
}

/// One row `(a, b, c)` of the coefficient table: the three constants defining
/// one of `X`, `Y`, `Z` in its solution family.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct CoeffRow {
    pub a: f64,
    pub b: f64,
    pub c: f64,
}

impl CoeffRow {
    pub const fn new(a: f64, b: f64, c: f64) -> Self {
        CoeffRow { a, b, c }
    }

    /// True when `b = c = 0`, i.e. `X` is constant (`K ≠ 0`) and the profile
    /// would be linear — excluded from surfaces but still evaluable.
    pub fn is_degenerate(&self) -> bool {
        self.b == 0.0 && self.c == 0.0
    }
}

/// The nine constants `a_i, b_i, c_i` plus the case selector: everything
/// needed to evaluate `X`, `Y`, `Z`.
///
/// Rows are indexed 0, 1, 2 for the x-, y-, z-axis respectively.
///
/// ```
/// use zmc_separable::types::{CaseK, CoeffRow, ConstantsTriple};
///
/// // sinh(x)·sinh(y) = cosh(z)
/// let c = ConstantsTriple::new(
///     CaseK::positive(),
///     [CoeffRow::new(1.0, 0.0, 1.0),
///      CoeffRow::new(1.0, 0.0, 1.0),
///      CoeffRow::new(1.0, -1.0, 0.0)],
/// );
/// assert_eq!(c.case.big_k(), 4.0);
/// ```
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ConstantsTriple {
    pub case: CaseK,
    pub rows: [CoeffRow; 3],
}

impl ConstantsTriple {
    pub const fn new(case: CaseK, rows: [CoeffRow; 3]) -> Self {
        ConstantsTriple { case, rows }
    }

    /// Convenience constructor from three `(a, b, c)` tuples.
    pub fn from_tuples(case: CaseK, a: (f64, f64, f64), b: (f64, f64, f64), c: (f64, f64, f64)) -> Self {
        ConstantsTriple {
            case,
            rows: [
                CoeffRow::new(a.0, b.0, c.0),
                CoeffRow::new(a.1, b.1, c.1),
                CoeffRow::new(a.2, b.2, c.2),
            ],
        }
    }

    /// True when every row has some non-constant part (`(b_i, c_i) ≠ (0,0)`);
    /// required of surfaces since constant `X` means a linear profile.
    pub fn is_nondegenerate(&self) -> bool {
        self.rows.iter().all(|r| !r.is_degenerate())
    }
}

/// Coordinate axis of a profile.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Axis {
    X,
    Y,
    Z,
}

impl Axis {
    pub fn index(self) -> usize {
        match self {
            Axis::X => 0,
            Axis::Y => 1,
            Axis::Z => 2,
        }
    }

    /// Inverse of [`Axis::index`].
    ///
    /// # Panics
    /// Panics if `i > 2`.
    pub fn from_index(i: usize) -> Self {
        match i {
            0 => Axis::X,
            1 => Axis::Y,
            2 => Axis::Z,
            _ => panic!("axis index {i} out of range"),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Axis::X => "x",
            Axis::Y => "y",
            Axis::Z => "z",
        }
    }
}

/// Branch sign of a profile derivative: `f′ = sign · √X(f)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn value(self) -> f64 {
        match self {
            Sign::Plus => 1.0,
            Sign::Minus => -1.0,
        }
    }
}

/// One coordinate function (`f`, `g`, or `h`) described through its
/// squared-derivative function `X` and the data fixing a concrete branch.
///
/// The coordinate function itself is recovered by integrating
/// `dx = du / (sign·√X(u))` from the anchor; see
/// [`crate::profiles::ProfileMap`]. The `u_domain` is the open interval on
/// which `X > 0`; an endpoint may be a turning point (simple zero of `X`,
/// reached at a finite coordinate) or an asymptotic end.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Profile {
    pub axis: Axis,
    pub case: CaseK,
    pub coeffs: CoeffRow,
    /// Branch sign of the derivative on this monotone branch.
    pub sign: Sign,
    /// Open interval of `u` on which `X(u) > 0`; may be unbounded.
    pub u_domain: (f64, f64),
    /// `(x0, u0)`: the coordinate and profile value fixing the integration
    /// constant, i.e. `f(x0) = u0`.
    pub anchor: (f64, f64),
}

impl Profile {
    pub fn new(
        axis: Axis,
        case: CaseK,
        coeffs: CoeffRow,
        sign: Sign,
        u_domain: (f64, f64),
        anchor: (f64, f64),
    ) -> Self {
        Profile { axis, case, coeffs, sign, u_domain, anchor }
    }
}

/// Causal character of a point, together with the normalized margin that
/// decided it.
///
/// The margin is `(f′² + g′² − h′²) / (f′² + g′² + h′²)`, which is scale-free:
/// profiles with exponentially large derivatives and arcsin-type profiles get
/// the same lightlike tolerance.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub enum CausalClass {
    Spacelike { margin: f64 },
    Timelike { margin: f64 },
    Lightlike { margin: f64 },
}

impl CausalClass {
    /// Classify a normalized margin at tolerance `tol`.
    pub fn from_margin(margin: f64, tol: f64) -> Self {
        if margin > tol {
            CausalClass::Timelike { margin }
        } else if margin < -tol {
            CausalClass::Spacelike { margin }
        } else {
            CausalClass::Lightlike { margin }
        }
    }

    pub fn margin(&self) -> f64 {
        match *self {
            CausalClass::Spacelike { margin }
            | CausalClass::Timelike { margin }
            | CausalClass::Lightlike { margin } => margin,
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            CausalClass::Spacelike { .. } => "Spacelike",
            CausalClass::Timelike { .. } => "Timelike",
            CausalClass::Lightlike { .. } => "Lightlike",
        }
    }
}

/// Causal character expected of a whole catalog entry.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum ExpectedClass {
    /// Every sample is spacelike, except exactly on declared lightlike loci.
    Spacelike,
    /// Every sample is timelike, except exactly on declared lightlike loci.
    Timelike,
    /// Both spacelike and timelike regions occur on the sampled box.
    Mixed,
}

impl ExpectedClass {
    pub fn name(&self) -> &'static str {
        match self {
            ExpectedClass::Spacelike => "Spacelike",
            ExpectedClass::Timelike => "Timelike",
            ExpectedClass::Mixed => "Mixed",
        }
    }
}

/// Axis-aligned sampling box.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Box3 {
    pub min: [f64; 3],
    pub max: [f64; 3],
}

impl Box3 {
    pub const fn new(min: [f64; 3], max: [f64; 3]) -> Self {
        Box3 { min, max }
    }

    pub fn contains(&self, p: [f64; 3]) -> bool {
        (0..3).all(|i| p[i] >= self.min[i] && p[i] <= self.max[i])
    }

    /// Edge lengths.
    pub fn extent(&self) -> [f64; 3] {
        [
            self.max[0] - self.min[0],
            self.max[1] - self.min[1],
            self.max[2] - self.min[2],
        ]
    }
}

/// A straight line of lightlike points declared by a catalog entry:
/// `p(t) = point + t·direction` for `t` in `t_range`.
///
/// `t_range` is chosen so the whole segment lies inside the domains of the
/// entry's three profiles (not necessarily inside the bounding box, which is
/// a rendering choice); checks sample it uniformly.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct LocusLine {
    pub point: [f64; 3],
    pub direction: [f64; 3],
    pub t_range: (f64, f64),
}

impl LocusLine {
    pub const fn new(point: [f64; 3], direction: [f64; 3], t_range: (f64, f64)) -> Self {
        LocusLine { point, direction, t_range }
    }

    pub fn at(&self, t: f64) -> [f64; 3] {
        [
            self.point[0] + t * self.direction[0],
            self.point[1] + t * self.direction[1],
            self.point[2] + t * self.direction[2],
        ]
    }
}

/// A named free parameter of a catalog entry with its admissible open range
/// and default value.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FreeParam {
    pub name: &'static str,
    pub default: f64,
    /// Open admissible interval; infinite bounds allowed.
    pub range: (f64, f64),
}

/// Errors shared across the crate.
#[derive(Debug, thiserror::Error)]
pub enum ZmcError {
    #[error("{axis}-coordinate {value} outside profile domain [{lo}, {hi}]")]
    DomainError { axis: &'static str, value: f64, lo: f64, hi: f64 },

    #[error("adaptive quadrature failed to reach tolerance {tol:e} (best error estimate {best:e})")]
    QuadratureFailure { tol: f64, best: f64 },

    #[error("value {value} outside invertible range [{lo}, {hi}]")]
    RangeError { value: f64, lo: f64, hi: f64 },

    #[error("no root of the third profile for target {target}")]
    NoRoot { target: f64 },

    #[error("point ({x}, {y}, {z}) is off the surface: |F| = {residual:e} > {tol:e}")]
    OffSurface { x: f64, y: f64, z: f64, residual: f64, tol: f64 },

    #[error("degenerate (lightlike) point: |<grad F, grad F>| = {norm:e} below {tol:e}")]
    DegeneratePoint { norm: f64, tol: f64 },

    #[error("constraint solver did not converge: {reason}")]
    NoConvergence { reason: String },

    #[error("invalid scale factor {0} (must be nonzero)")]
    InvalidScale(f64),

    #[error("parameter {name}={value} out of admissible range: {detail}")]
    ParamOutOfRange { name: String, value: f64, detail: String },

    #[error("unknown catalog entry `{0}`")]
    UnknownEntry(String),

    #[error("every sample point was skipped (|X'| below threshold everywhere)")]
    AllSamplesDegenerate,

    #[error("constants rejected: {0}")]
    InvalidConstants(String),

    #[error("no sign change of F inside the sampling box")]
    EmptyLevelSet,

    #[error("I/O failure: {0}")]
    Io(#[from] std::io::Error),
}

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, ZmcError>;

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn case_k_values() {
        assert_eq!(CaseK::positive().big_k(), 4.0);
        assert_eq!(CaseK::negative().big_k(), -1.0);
        assert_eq!(CaseK::Zero.big_k(), 0.0);
        assert_eq!(CaseK::Zero.k(), None);
        assert_eq!(CaseK::positive().k(), Some(2.0));
    }

    #[test]
    fn margin_classification_respects_tolerance() {
        assert_eq!(CausalClass::from_margin(0.5, 1e-8).name(), "Timelike");
        assert_eq!(CausalClass::from_margin(-0.5, 1e-8).name(), "Spacelike");
        assert_eq!(CausalClass::from_margin(5e-9, 1e-8).name(), "Lightlike");
        assert_eq!(CausalClass::from_margin(-5e-9, 1e-8).name(), "Lightlike");
    }

    #[test]
    fn nondegeneracy_detects_constant_rows() {
        let ok = ConstantsTriple::from_tuples(
            CaseK::positive(),
            (1.0, 1.0, 1.0),
            (0.0, 0.0, -1.0),
            (1.0, 1.0, 0.0),
        );
        assert!(ok.is_nondegenerate());
        let bad = ConstantsTriple::from_tuples(
            CaseK::positive(),
            (1.0, 1.0, 1.0),
            (0.0, 0.0, 0.0),
            (1.0, 1.0, 0.0),
        );
        assert!(!bad.is_nondegenerate());
    }

    #[test]
    fn box_contains_and_extent() {
        let b = Box3::new([-1.0, 0.0, 2.0], [1.0, 2.0, 3.0]);
        assert!(b.contains([0.0, 1.0, 2.5]));
        assert!(!b.contains([0.0, 1.0, 3.5]));
        assert_eq!(b.extent(), [2.0, 2.0, 1.0]);
    }

    #[test]
    fn locus_line_parametrization() {
        let l = LocusLine::new([1.0, 0.0, 0.0], [0.0, 1.0, 1.0], (-1.0, 1.0));
        assert_eq!(l.at(0.5), [1.0, 0.5, 0.5]);
    }
}
