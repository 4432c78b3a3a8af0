//! Entry constructors for the worked catalog.
//!
//! Kept separate from the module logic so each surface reads as one block:
//! coefficient rows, closed forms (`f`, `g`, `h` and first derivatives),
//! numeric branch descriptors, sampling box, lightlike loci, and free
//! parameters. Family constructors (`constants_*`) rebuild the coefficient
//! table at arbitrary parameter values for [`super::instantiate`].

use std::f64::consts::{FRAC_PI_2, FRAC_PI_4, LN_2, PI};
use std::sync::{Arc, OnceLock};

use super::{AxisClosedForm, CatalogEntry};
use crate::profiles::elliptic::{EllipticKernel, PSI_1};
use crate::types::{
    Axis, Box3, CaseK, CoeffRow, ConstantsTriple, ExpectedClass, FreeParam, LocusLine, Profile,
    Result, Sign, ZmcError,
};

const INF: f64 = f64::INFINITY;
const SQRT2: f64 = std::f64::consts::SQRT_2;
/// √6; frequency of the z-profile in the second trigonometric-case example.
const SQRT6: f64 = 2.449_489_742_783_178;

fn row(a: f64, b: f64, c: f64) -> CoeffRow {
    CoeffRow::new(a, b, c)
}

#[allow(clippy::too_many_arguments)]
fn prof(
    axis: Axis,
    case: CaseK,
    coeffs: CoeffRow,
    sign: Sign,
    u_domain: (f64, f64),
    anchor: (f64, f64),
) -> Profile {
    Profile::new(axis, case, coeffs, sign, u_domain, anchor)
}

fn cf(
    x_domain: (f64, f64),
    value: impl Fn(f64) -> f64 + Send + Sync + 'static,
    d1: impl Fn(f64) -> f64 + Send + Sync + 'static,
) -> AxisClosedForm {
    AxisClosedForm { x_domain, value: Arc::new(value), d1: Arc::new(d1) }
}

fn fp(name: &'static str, default: f64, range: (f64, f64)) -> FreeParam {
    FreeParam { name, default, range }
}

fn param_err(name: &str, value: f64, detail: impl Into<String>) -> ZmcError {
    ZmcError::ParamOutOfRange { name: name.to_string(), value, detail: detail.into() }
}

// ---------------------------------------------------------------------------
// Shared special-function kernels (built once; all four are fixed tables).
// ---------------------------------------------------------------------------

pub(crate) fn kernel_v() -> &'static EllipticKernel {
    static K: OnceLock<EllipticKernel> = OnceLock::new();
    K.get_or_init(EllipticKernel::v)
}

pub(crate) fn kernel_m() -> &'static EllipticKernel {
    static K: OnceLock<EllipticKernel> = OnceLock::new();
    K.get_or_init(EllipticKernel::m)
}

pub(crate) fn kernel_f_hat() -> &'static EllipticKernel {
    static K: OnceLock<EllipticKernel> = OnceLock::new();
    K.get_or_init(EllipticKernel::f_hat)
}

pub(crate) fn kernel_g_hat() -> &'static EllipticKernel {
    static K: OnceLock<EllipticKernel> = OnceLock::new();
    K.get_or_init(EllipticKernel::g_hat)
}

// ---------------------------------------------------------------------------
// Family constructors.
// ---------------------------------------------------------------------------

fn constants_exp_pair(p: &[f64]) -> Result<ConstantsTriple> {
    let (c1, c2) = (p[0], p[1]);
    if !(c1 > 0.0) {
        return Err(param_err("c1", c1, "must be positive"));
    }
    if !(c2 > 0.0) {
        return Err(param_err("c2", c2, "must be positive"));
    }
    let c3 = c1 * c2 / (c1 + c2);
    Ok(ConstantsTriple::new(
        CaseK::Zero,
        [row(0.0, 0.0, c1), row(0.0, 0.0, c2), row(0.0, 0.0, c3)],
    ))
}

fn check_alpha_beta(p: &[f64]) -> Result<(f64, f64)> {
    let (a2, b2) = (p[0], p[1]);
    if !(a2 > 1.0) {
        return Err(param_err("alpha2", a2, "must exceed 1"));
    }
    if !(b2 > 0.0) {
        return Err(param_err("beta2", b2, "must be positive"));
    }
    if (b2 - (a2 - 1.0)).abs() > 1e-9 * a2.max(1.0) {
        return Err(param_err("beta2", b2, format!("must equal alpha2 - 1 = {}", a2 - 1.0)));
    }
    Ok((a2, b2))
}

fn constants_sin_triple(p: &[f64]) -> Result<ConstantsTriple> {
    let (a2, b2) = check_alpha_beta(p)?;
    Ok(ConstantsTriple::new(
        CaseK::Zero,
        [
            row(a2 * b2, 0.0, -(a2 * b2)),
            row(a2 * b2 * b2, 0.0, -a2),
            row(a2 * a2 * b2, 0.0, -b2),
        ],
    ))
}

fn constants_cosh_triple(p: &[f64]) -> Result<ConstantsTriple> {
    let (a2, b2) = check_alpha_beta(p)?;
    Ok(ConstantsTriple::new(
        CaseK::Zero,
        [
            row(-(a2 * b2), 0.0, a2 * b2),
            row(-(a2 * b2 * b2), 0.0, a2),
            row(-(a2 * a2 * b2), 0.0, b2),
        ],
    ))
}

fn constants_scaled_pair(p: &[f64]) -> Result<ConstantsTriple> {
    let (a, c) = (p[0], p[1]);
    if a == 0.0 {
        return Err(param_err("a", a, "must be nonzero"));
    }
    if c == 0.0 {
        return Err(param_err("c", c, "must be nonzero"));
    }
    Ok(ConstantsTriple::new(
        CaseK::Zero,
        [row(a, 0.0, 2.0 * c), row(a, 0.0, 2.0 * c), row(2.0 * a, 0.0, c)],
    ))
}

fn require_nonzero_m(m: f64) -> Result<f64> {
    if m.abs() < 1e-9 {
        Err(param_err("m", m, "family degenerates to a linear profile at m = 0"))
    } else {
        Ok(m)
    }
}

fn constants_product_first(p: &[f64]) -> Result<ConstantsTriple> {
    let m = require_nonzero_m(p[0])?;
    Ok(ConstantsTriple::new(
        CaseK::positive(),
        [row(1.0, 0.0, 1.0), row(1.0, 0.0, m), row(1.0, -m, 0.0)],
    ))
}

fn constants_product_second(p: &[f64]) -> Result<ConstantsTriple> {
    let m = require_nonzero_m(p[0])?;
    Ok(ConstantsTriple::new(
        CaseK::positive(),
        [row(1.0, 0.0, -1.0), row(1.0, 0.0, m), row(1.0, m, 0.0)],
    ))
}

fn constants_sinh_sin(p: &[f64]) -> Result<ConstantsTriple> {
    let m = p[0];
    Ok(ConstantsTriple::new(
        CaseK::positive(),
        [row(1.0, 0.0, 1.0), row(-1.0, 1.0, 0.0), row(2.0 * m - 1.0, m, m - 1.0)],
    ))
}

fn constants_sinh_dual(p: &[f64]) -> Result<ConstantsTriple> {
    let m = p[0];
    Ok(ConstantsTriple::new(
        CaseK::positive(),
        [row(1.0, 1.0, 0.0), row(1.0 - 2.0 * m, m - 1.0, m), row(1.0, 0.0, 1.0)],
    ))
}

fn constants_sin_cosh_first(p: &[f64]) -> Result<ConstantsTriple> {
    let m = p[0];
    Ok(ConstantsTriple::new(
        CaseK::positive(),
        [
            row(-1.0, 0.0, 1.0),
            row(1.0, -1.0, 0.0),
            row(m, 0.5 * (1.0 - m), -0.5 * (1.0 + m)),
        ],
    ))
}

fn constants_sin_cosh_second(p: &[f64]) -> Result<ConstantsTriple> {
    let m = p[0];
    Ok(ConstantsTriple::new(
        CaseK::positive(),
        [
            row(-1.0, 0.0, 1.0),
            row(m, -0.5 * (m + 1.0), 0.5 * (1.0 - m)),
            row(-1.0, 1.0, 0.0),
        ],
    ))
}

fn constants_elliptic_product(p: &[f64]) -> Result<ConstantsTriple> {
    let m = p[0];
    let m2 = m * m;
    Ok(ConstantsTriple::new(
        CaseK::positive(),
        [
            row(1.0 - 2.0 * m2, m2 * m2, 1.0),
            row(-1.0, 1.0, m2),
            row(1.0, 1.0, m2),
        ],
    ))
}

// ---------------------------------------------------------------------------
// The entries, in presentation order.
// ---------------------------------------------------------------------------

/// `e^{√c1·x} + e^{√c2·y} − e^{√c3·z} = 0` with `1/c3 = 1/c1 + 1/c2`.
fn exp_same_sign() -> CatalogEntry {
    let case = CaseK::Zero;
    let rows = [row(0.0, 0.0, 1.0), row(0.0, 0.0, 1.0), row(0.0, 0.0, 0.5)];
    CatalogEntry {
        name: "exp-same-sign",
        section_ref: "3.1",
        aliases: &["3.1-same-sign"],
        family: "3.1",
        implicit_string: "exp(x) + exp(y) = exp(z/sqrt(2))",
        expected_class: ExpectedClass::Timelike,
        constants: ConstantsTriple::new(case, rows),
        profiles: [
            prof(Axis::X, case, rows[0], Sign::Plus, (0.0, INF), (0.0, 1.0)),
            prof(Axis::Y, case, rows[1], Sign::Plus, (0.0, INF), (0.0, 1.0)),
            prof(Axis::Z, case, rows[2], Sign::Minus, (-INF, 0.0), (0.0, -1.0)),
        ],
        bounding_box: Box3::new([-2.0, -2.0, -2.0], [2.0, 2.0, 4.0]),
        lightlike_loci: vec![LocusLine::new([0.0, 0.0, SQRT2 * LN_2], [1.0, 1.0, SQRT2], (-2.0, 2.0))],
        free_params: vec![fp("c1", 1.0, (0.0, INF)), fp("c2", 1.0, (0.0, INF))],
        periods: vec![],
        notes: "all three exponentials positive; lightlike along x = y",
        closed: [
            cf((-INF, INF), |x| x.exp(), |x| x.exp()),
            cf((-INF, INF), |y| y.exp(), |y| y.exp()),
            cf(
                (-INF, INF),
                |z| -(z / SQRT2).exp(),
                |z| -(z / SQRT2).exp() / SQRT2,
            ),
        ],
        constants_fn: Some(constants_exp_pair),
    }
}

/// Same coefficient table, opposite sign pattern: `e^y = e^x + e^{z/√2}`.
fn exp_opposite_sign() -> CatalogEntry {
    let case = CaseK::Zero;
    let rows = [row(0.0, 0.0, 1.0), row(0.0, 0.0, 1.0), row(0.0, 0.0, 0.5)];
    CatalogEntry {
        name: "exp-opposite-sign",
        section_ref: "3.1",
        aliases: &["3.1-opposite-sign"],
        family: "3.1",
        implicit_string: "exp(y) = exp(x) + exp(z/sqrt(2))",
        expected_class: ExpectedClass::Timelike,
        constants: ConstantsTriple::new(case, rows),
        profiles: [
            prof(Axis::X, case, rows[0], Sign::Plus, (0.0, INF), (0.0, 1.0)),
            prof(Axis::Y, case, rows[1], Sign::Minus, (-INF, 0.0), (0.0, -1.0)),
            prof(Axis::Z, case, rows[2], Sign::Plus, (0.0, INF), (0.0, 1.0)),
        ],
        bounding_box: Box3::new([-2.0, -2.0, -3.0], [2.0, 2.0, 3.0]),
        lightlike_loci: vec![],
        free_params: vec![fp("c1", 1.0, (0.0, INF)), fp("c2", 1.0, (0.0, INF))],
        periods: vec![],
        notes: "sign-mixed companion of exp-same-sign; timelike everywhere",
        closed: [
            cf((-INF, INF), |x| x.exp(), |x| x.exp()),
            cf((-INF, INF), |y| -y.exp(), |y| -y.exp()),
            cf((-INF, INF), |z| (z / SQRT2).exp(), |z| (z / SQRT2).exp() / SQRT2),
        ],
        constants_fn: Some(constants_exp_pair),
    }
}

/// `sin(√2 x) + sin(√2 y) + 2 sin z = 0` (the `α² = 2` member).
fn sin_triple() -> CatalogEntry {
    let case = CaseK::Zero;
    let rows = [row(2.0, 0.0, -2.0), row(2.0, 0.0, -2.0), row(4.0, 0.0, -1.0)];
    CatalogEntry {
        name: "sin-triple",
        section_ref: "3.2",
        aliases: &["3.2-sin"],
        family: "3.2-sin",
        implicit_string: "sin(sqrt(2)x) + sin(sqrt(2)y) + 2sin(z) = 0",
        expected_class: ExpectedClass::Spacelike,
        constants: ConstantsTriple::new(case, rows),
        profiles: [
            prof(Axis::X, case, rows[0], Sign::Plus, (-1.0, 1.0), (0.0, 0.0)),
            prof(Axis::Y, case, rows[1], Sign::Plus, (-1.0, 1.0), (0.0, 0.0)),
            prof(Axis::Z, case, rows[2], Sign::Plus, (-2.0, 2.0), (0.0, 0.0)),
        ],
        bounding_box: Box3::new([-2.3, -2.3, -3.3], [2.3, 2.3, 3.3]),
        lightlike_loci: vec![
            LocusLine::new([0.0, 0.0, 0.0], [1.0, 1.0, -SQRT2], (-2.0, 2.0)),
            LocusLine::new([0.0, PI / SQRT2, PI], [1.0, -1.0, SQRT2], (-2.0, 2.0)),
        ],
        free_params: vec![fp("alpha2", 2.0, (1.0, INF)), fp("beta2", 1.0, (0.0, INF))],
        periods: vec![
            [SQRT2 * PI, 0.0, 0.0],
            [0.0, SQRT2 * PI, 0.0],
            [0.0, 0.0, 2.0 * PI],
        ],
        notes: "triply periodic; one monotone branch per axis around the origin",
        closed: [
            cf((-INF, INF), |x| (SQRT2 * x).sin(), |x| SQRT2 * (SQRT2 * x).cos()),
            cf((-INF, INF), |y| (SQRT2 * y).sin(), |y| SQRT2 * (SQRT2 * y).cos()),
            cf((-INF, INF), |z| 2.0 * z.sin(), |z| 2.0 * z.cos()),
        ],
        constants_fn: Some(constants_sin_triple),
    }
}

/// `cosh(√2 x) + cosh(√2 y) = 2 cosh z`, the sign-reversed companion.
fn cosh_triple() -> CatalogEntry {
    let case = CaseK::Zero;
    let rows = [row(-2.0, 0.0, 2.0), row(-2.0, 0.0, 2.0), row(-4.0, 0.0, 1.0)];
    let d = (-1.5, 1.5);
    CatalogEntry {
        name: "cosh-triple",
        section_ref: "3.2",
        aliases: &["3.2-cosh"],
        family: "3.2-cosh",
        implicit_string: "cosh(sqrt(2)x) + cosh(sqrt(2)y) = 2cosh(z)",
        expected_class: ExpectedClass::Timelike,
        constants: ConstantsTriple::new(case, rows),
        profiles: [
            prof(Axis::X, case, rows[0], Sign::Plus, (1.0, INF), (0.0, 1.0)),
            prof(Axis::Y, case, rows[1], Sign::Plus, (1.0, INF), (0.0, 1.0)),
            prof(Axis::Z, case, rows[2], Sign::Minus, (-INF, -2.0), (0.0, -2.0)),
        ],
        bounding_box: Box3::new([-1.5, -1.5, -2.2], [1.5, 1.5, 2.2]),
        lightlike_loci: vec![
            LocusLine::new([0.0; 3], [1.0, 1.0, SQRT2], d),
            LocusLine::new([0.0; 3], [1.0, 1.0, -SQRT2], d),
            LocusLine::new([0.0; 3], [1.0, -1.0, SQRT2], d),
            LocusLine::new([0.0; 3], [1.0, -1.0, -SQRT2], d),
        ],
        free_params: vec![fp("alpha2", 2.0, (1.0, INF)), fp("beta2", 1.0, (0.0, INF))],
        periods: vec![],
        notes: "four lightlike lines through the origin",
        closed: [
            cf((-INF, INF), |x| (SQRT2 * x).cosh(), |x| SQRT2 * (SQRT2 * x).sinh()),
            cf((-INF, INF), |y| (SQRT2 * y).cosh(), |y| SQRT2 * (SQRT2 * y).sinh()),
            cf((-INF, INF), |z| -2.0 * z.cosh(), |z| -2.0 * z.sinh()),
        ],
        constants_fn: Some(constants_cosh_triple),
    }
}

/// `sinh(√2 x) + sinh(√2 y) + 2 sinh z = 0` (scaled family at `a = c = 1`).
fn sinh_triple() -> CatalogEntry {
    let case = CaseK::Zero;
    let rows = [row(1.0, 0.0, 2.0), row(1.0, 0.0, 2.0), row(2.0, 0.0, 1.0)];
    CatalogEntry {
        name: "sinh-triple",
        section_ref: "3.3",
        aliases: &["3.3-sinh"],
        family: "3.3",
        implicit_string: "sinh(sqrt(2)x) + sinh(sqrt(2)y) + 2sinh(z) = 0",
        expected_class: ExpectedClass::Timelike,
        constants: ConstantsTriple::new(case, rows),
        profiles: [
            prof(Axis::X, case, rows[0], Sign::Plus, (-INF, INF), (0.0, 0.0)),
            prof(Axis::Y, case, rows[1], Sign::Plus, (-INF, INF), (0.0, 0.0)),
            prof(Axis::Z, case, rows[2], Sign::Plus, (-INF, INF), (0.0, 0.0)),
        ],
        bounding_box: Box3::new([-2.0, -2.0, -2.9], [2.0, 2.0, 2.9]),
        lightlike_loci: vec![LocusLine::new([0.0; 3], [1.0, 1.0, -SQRT2], (-2.0, 2.0))],
        free_params: vec![fp("a", 1.0, (-INF, INF)), fp("c", 1.0, (-INF, INF))],
        periods: vec![],
        notes: "entire graphs; single lightlike line x = y, z = -sqrt(2)x",
        closed: [
            cf((-INF, INF), |x| (SQRT2 * x).sinh() / SQRT2, |x| (SQRT2 * x).cosh()),
            cf((-INF, INF), |y| (SQRT2 * y).sinh() / SQRT2, |y| (SQRT2 * y).cosh()),
            cf((-INF, INF), |z| SQRT2 * z.sinh(), |z| SQRT2 * z.cosh()),
        ],
        constants_fn: Some(constants_scaled_pair),
    }
}

/// The scaled family at `a = 1, c = −1`: same zero set as `sin-triple`.
fn sin_triple_alt() -> CatalogEntry {
    let case = CaseK::Zero;
    let rows = [row(1.0, 0.0, -2.0), row(1.0, 0.0, -2.0), row(2.0, 0.0, -1.0)];
    let r = 1.0 / SQRT2;
    CatalogEntry {
        name: "sin-triple-alt",
        section_ref: "3.3",
        aliases: &["3.3-sin"],
        family: "3.3",
        implicit_string: "sin(sqrt(2)x) + sin(sqrt(2)y) + 2sin(z) = 0",
        expected_class: ExpectedClass::Spacelike,
        constants: ConstantsTriple::new(case, rows),
        profiles: [
            prof(Axis::X, case, rows[0], Sign::Plus, (-r, r), (0.0, 0.0)),
            prof(Axis::Y, case, rows[1], Sign::Plus, (-r, r), (0.0, 0.0)),
            prof(Axis::Z, case, rows[2], Sign::Plus, (-SQRT2, SQRT2), (0.0, 0.0)),
        ],
        bounding_box: Box3::new([-2.3, -2.3, -3.3], [2.3, 2.3, 3.3]),
        lightlike_loci: vec![
            LocusLine::new([0.0, 0.0, 0.0], [1.0, 1.0, -SQRT2], (-2.0, 2.0)),
            LocusLine::new([0.0, PI / SQRT2, PI], [1.0, -1.0, SQRT2], (-2.0, 2.0)),
        ],
        free_params: vec![fp("a", 1.0, (-INF, INF)), fp("c", -1.0, (-INF, INF))],
        periods: vec![
            [SQRT2 * PI, 0.0, 0.0],
            [0.0, SQRT2 * PI, 0.0],
            [0.0, 0.0, 2.0 * PI],
        ],
        notes: "same zero set as sin-triple with rescaled coefficient rows",
        closed: [
            cf((-INF, INF), |x| (SQRT2 * x).sin() / SQRT2, |x| (SQRT2 * x).cos()),
            cf((-INF, INF), |y| (SQRT2 * y).sin() / SQRT2, |y| (SQRT2 * y).cos()),
            cf((-INF, INF), |z| SQRT2 * z.sin(), |z| SQRT2 * z.cos()),
        ],
        constants_fn: Some(constants_scaled_pair),
    }
}

/// The scaled family at `a = −1, c = 1`: same zero set as `cosh-triple`.
fn cosh_triple_alt() -> CatalogEntry {
    let case = CaseK::Zero;
    let rows = [row(-1.0, 0.0, 2.0), row(-1.0, 0.0, 2.0), row(-2.0, 0.0, 1.0)];
    let r = 1.0 / SQRT2;
    let d = (-1.5, 1.5);
    CatalogEntry {
        name: "cosh-triple-alt",
        section_ref: "3.3",
        aliases: &["3.3-cosh"],
        family: "3.3",
        implicit_string: "cosh(sqrt(2)x) + cosh(sqrt(2)y) = 2cosh(z)",
        expected_class: ExpectedClass::Timelike,
        constants: ConstantsTriple::new(case, rows),
        profiles: [
            prof(Axis::X, case, rows[0], Sign::Plus, (r, INF), (0.0, r)),
            prof(Axis::Y, case, rows[1], Sign::Plus, (r, INF), (0.0, r)),
            prof(Axis::Z, case, rows[2], Sign::Minus, (-INF, -SQRT2), (0.0, -SQRT2)),
        ],
        bounding_box: Box3::new([-1.5, -1.5, -2.2], [1.5, 1.5, 2.2]),
        lightlike_loci: vec![
            LocusLine::new([0.0; 3], [1.0, 1.0, SQRT2], d),
            LocusLine::new([0.0; 3], [1.0, 1.0, -SQRT2], d),
            LocusLine::new([0.0; 3], [1.0, -1.0, SQRT2], d),
            LocusLine::new([0.0; 3], [1.0, -1.0, -SQRT2], d),
        ],
        free_params: vec![fp("a", -1.0, (-INF, INF)), fp("c", 1.0, (-INF, INF))],
        periods: vec![],
        notes: "same zero set as cosh-triple with rescaled coefficient rows",
        closed: [
            cf((-INF, INF), |x| (SQRT2 * x).cosh() / SQRT2, |x| (SQRT2 * x).sinh()),
            cf((-INF, INF), |y| (SQRT2 * y).cosh() / SQRT2, |y| (SQRT2 * y).sinh()),
            cf((-INF, INF), |z| -SQRT2 * z.cosh(), |z| -SQRT2 * z.sinh()),
        ],
        constants_fn: Some(constants_scaled_pair),
    }
}

/// `sinh x · sinh y = cosh z` (product family, first kind, `m = 1`).
fn sinh_sinh_cosh() -> CatalogEntry {
    let case = CaseK::positive();
    let rows = [row(1.0, 0.0, 1.0), row(1.0, 0.0, 1.0), row(1.0, -1.0, 0.0)];
    let u0 = 1.0_f64.asinh();
    CatalogEntry {
        name: "sinh-sinh-cosh",
        section_ref: "4.1.1",
        aliases: &["4.1.1-sinh-sinh-cosh"],
        family: "4.1.1",
        implicit_string: "sinh(x)sinh(y) = cosh(z)",
        expected_class: ExpectedClass::Timelike,
        constants: ConstantsTriple::new(case, rows),
        profiles: [
            prof(Axis::X, case, rows[0], Sign::Plus, (-INF, INF), (u0, 0.0)),
            prof(Axis::Y, case, rows[1], Sign::Plus, (-INF, INF), (u0, 0.0)),
            prof(Axis::Z, case, rows[2], Sign::Minus, (-INF, 0.0), (0.0, 0.0)),
        ],
        bounding_box: Box3::new([0.25, 0.25, -2.0], [2.2, 2.2, 2.0]),
        lightlike_loci: vec![],
        free_params: vec![fp("m", 1.0, (-INF, INF))],
        periods: vec![],
        notes: "timelike everywhere on x, y > 0",
        closed: [
            cf((0.0, INF), |x| x.sinh().ln(), |x| 1.0 / x.tanh()),
            cf((0.0, INF), |y| y.sinh().ln(), |y| 1.0 / y.tanh()),
            cf((-INF, INF), |z| -z.cosh().ln(), |z| -z.tanh()),
        ],
        constants_fn: Some(constants_product_first),
    }
}

/// `sinh x · cosh y = sinh z` (product family, first kind, `m = −1`).
fn scherk_timelike_2nd() -> CatalogEntry {
    let case = CaseK::positive();
    let rows = [row(1.0, 0.0, 1.0), row(1.0, 0.0, -1.0), row(1.0, 1.0, 0.0)];
    let u0 = 1.0_f64.asinh();
    CatalogEntry {
        name: "scherk-timelike-2nd",
        section_ref: "4.1.1",
        aliases: &["4.1.1-scherk-2nd"],
        family: "4.1.1",
        implicit_string: "sinh(x)cosh(y) = sinh(z)",
        expected_class: ExpectedClass::Timelike,
        constants: ConstantsTriple::new(case, rows),
        profiles: [
            prof(Axis::X, case, rows[0], Sign::Plus, (-INF, INF), (u0, 0.0)),
            prof(Axis::Y, case, rows[1], Sign::Plus, (0.0, INF), (0.0, 0.0)),
            prof(Axis::Z, case, rows[2], Sign::Minus, (-INF, INF), (u0, 0.0)),
        ],
        bounding_box: Box3::new([0.25, -1.6, 0.25], [2.2, 1.6, 2.2]),
        lightlike_loci: vec![LocusLine::new([0.0; 3], [1.0, 0.0, 1.0], (0.25, 2.2))],
        free_params: vec![fp("m", -1.0, (-INF, INF))],
        periods: vec![],
        notes: "lightlike along x = z in the y = 0 plane",
        closed: [
            cf((0.0, INF), |x| x.sinh().ln(), |x| 1.0 / x.tanh()),
            cf((-INF, INF), |y| y.cosh().ln(), |y| y.tanh()),
            cf((0.0, INF), |z| -(z.sinh().ln()), |z| -1.0 / z.tanh()),
        ],
        constants_fn: Some(constants_product_first),
    }
}

/// `cosh x · sinh y = sinh z` (product family, second kind, `m = 1`).
fn cosh_sinh_sinh() -> CatalogEntry {
    let case = CaseK::positive();
    let rows = [row(1.0, 0.0, -1.0), row(1.0, 0.0, 1.0), row(1.0, 1.0, 0.0)];
    let u0 = 1.0_f64.asinh();
    CatalogEntry {
        name: "cosh-sinh-sinh",
        section_ref: "4.1.2",
        aliases: &["4.1.2-cosh-sinh-sinh"],
        family: "4.1.2",
        implicit_string: "cosh(x)sinh(y) = sinh(z)",
        expected_class: ExpectedClass::Timelike,
        constants: ConstantsTriple::new(case, rows),
        profiles: [
            prof(Axis::X, case, rows[0], Sign::Plus, (0.0, INF), (0.0, 0.0)),
            prof(Axis::Y, case, rows[1], Sign::Plus, (-INF, INF), (u0, 0.0)),
            prof(Axis::Z, case, rows[2], Sign::Minus, (-INF, INF), (u0, 0.0)),
        ],
        bounding_box: Box3::new([-1.6, 0.25, 0.25], [1.6, 2.2, 2.2]),
        lightlike_loci: vec![LocusLine::new([0.0; 3], [0.0, 1.0, 1.0], (0.25, 2.2))],
        free_params: vec![fp("m", 1.0, (-INF, INF))],
        periods: vec![],
        notes: "lightlike along y = z in the x = 0 plane",
        closed: [
            cf((-INF, INF), |x| x.cosh().ln(), |x| x.tanh()),
            cf((0.0, INF), |y| y.sinh().ln(), |y| 1.0 / y.tanh()),
            cf((0.0, INF), |z| -(z.sinh().ln()), |z| -1.0 / z.tanh()),
        ],
        constants_fn: Some(constants_product_second),
    }
}

/// `cosh x · cosh y = cosh z` (product family, second kind, `m = −1`).
fn scherk_timelike_1st() -> CatalogEntry {
    let case = CaseK::positive();
    let rows = [row(1.0, 0.0, -1.0), row(1.0, 0.0, -1.0), row(1.0, -1.0, 0.0)];
    let d = (-1.8, 1.8);
    CatalogEntry {
        name: "scherk-timelike-1st",
        section_ref: "4.1.2",
        aliases: &["4.1.2-scherk-1st"],
        family: "4.1.2",
        implicit_string: "cosh(x)cosh(y) = cosh(z)",
        expected_class: ExpectedClass::Timelike,
        constants: ConstantsTriple::new(case, rows),
        profiles: [
            prof(Axis::X, case, rows[0], Sign::Plus, (0.0, INF), (0.0, 0.0)),
            prof(Axis::Y, case, rows[1], Sign::Plus, (0.0, INF), (0.0, 0.0)),
            prof(Axis::Z, case, rows[2], Sign::Minus, (-INF, 0.0), (0.0, 0.0)),
        ],
        bounding_box: Box3::new([-1.8, -1.8, -1.8], [1.8, 1.8, 1.8]),
        lightlike_loci: vec![
            LocusLine::new([0.0; 3], [0.0, 1.0, 1.0], d),
            LocusLine::new([0.0; 3], [0.0, 1.0, -1.0], d),
            LocusLine::new([0.0; 3], [1.0, 0.0, 1.0], d),
            LocusLine::new([0.0; 3], [1.0, 0.0, -1.0], d),
        ],
        free_params: vec![fp("m", -1.0, (-INF, INF))],
        periods: vec![],
        notes: "conelike point at the origin; four lightlike lines through it",
        closed: [
            cf((-INF, INF), |x| x.cosh().ln(), |x| x.tanh()),
            cf((-INF, INF), |y| y.cosh().ln(), |y| y.tanh()),
            cf((-INF, INF), |z| -z.cosh().ln(), |z| -z.tanh()),
        ],
        constants_fn: Some(constants_product_second),
    }
}

/// `sin x · sin y = sin z`: the spacelike counterpart, obtained from the
/// doubly-ruled product surface by reversing the sign of every row.
fn scherk_spacelike() -> CatalogEntry {
    let case = CaseK::positive();
    let rows = [row(-1.0, 0.0, 1.0), row(-1.0, 0.0, 1.0), row(-1.0, 1.0, 0.0)];
    let d = (0.2, 2.94);
    CatalogEntry {
        name: "scherk-spacelike",
        section_ref: "4.1.2",
        aliases: &["4.1.2-scherk-spacelike"],
        family: "4.1.2-flip",
        implicit_string: "sin(x)sin(y) = sin(z)",
        expected_class: ExpectedClass::Spacelike,
        constants: ConstantsTriple::new(case, rows),
        profiles: [
            prof(Axis::X, case, rows[0], Sign::Plus, (-INF, 0.0), (FRAC_PI_2, 0.0)),
            prof(Axis::Y, case, rows[1], Sign::Plus, (-INF, 0.0), (FRAC_PI_2, 0.0)),
            prof(Axis::Z, case, rows[2], Sign::Minus, (0.0, INF), (FRAC_PI_2, 0.0)),
        ],
        bounding_box: Box3::new([0.2, 0.2, 0.2], [2.94, 2.94, 2.94]),
        lightlike_loci: vec![
            LocusLine::new([FRAC_PI_2, 0.0, 0.0], [0.0, 1.0, 1.0], d),
            LocusLine::new([FRAC_PI_2, PI, 0.0], [0.0, -1.0, 1.0], d),
            LocusLine::new([0.0, FRAC_PI_2, 0.0], [1.0, 0.0, 1.0], d),
            LocusLine::new([PI, FRAC_PI_2, 0.0], [-1.0, 0.0, 1.0], d),
        ],
        free_params: vec![],
        periods: vec![
            [2.0 * PI, 0.0, 0.0],
            [0.0, 2.0 * PI, 0.0],
            [0.0, 0.0, 2.0 * PI],
        ],
        notes: "spacelike on the open cell (0, pi)^3 away from four lightlike lines",
        closed: [
            cf((0.0, PI), |x| x.sin().ln(), |x| x.cos() / x.sin()),
            cf((0.0, PI), |y| y.sin().ln(), |y| y.cos() / y.sin()),
            cf((0.0, PI), |z| -(z.sin().ln()), |z| -z.cos() / z.sin()),
        ],
        constants_fn: None,
    }
}

/// `x = −y·tan z`: the helicoid over the elliptic coefficient pattern.
fn helicoid_elliptic() -> CatalogEntry {
    let case = CaseK::positive();
    let rows = [row(0.0, 1.0, 0.0), row(0.0, 0.0, 1.0), row(2.0, 1.0, 1.0)];
    CatalogEntry {
        name: "helicoid-elliptic",
        section_ref: "4.1.3",
        aliases: &["4.1.3-elliptic-helicoid"],
        family: "4.1.3",
        implicit_string: "x = -y*tan(z)",
        expected_class: ExpectedClass::Mixed,
        constants: ConstantsTriple::new(case, rows),
        profiles: [
            prof(Axis::X, case, rows[0], Sign::Plus, (-INF, INF), (-1.0, 0.0)),
            prof(Axis::Y, case, rows[1], Sign::Plus, (-INF, INF), (1.0, 0.0)),
            prof(Axis::Z, case, rows[2], Sign::Plus, (-INF, INF), (FRAC_PI_4, 0.0)),
        ],
        bounding_box: Box3::new([-2.4, 0.12, 0.12], [-0.12, 2.4, FRAC_PI_2 - 0.12]),
        lightlike_loci: vec![],
        free_params: vec![],
        periods: vec![[0.0, 0.0, PI]],
        notes: "ruled; both causal characters occur inside the box",
        closed: [
            cf((-INF, 0.0), |x| -(-x).ln(), |x| -1.0 / x),
            cf((0.0, INF), |y| y.ln(), |y| 1.0 / y),
            cf((0.0, FRAC_PI_2), |z| z.tan().ln(), |z| 2.0 / (2.0 * z).sin()),
        ],
        constants_fn: None,
    }
}

/// `x = z·tanh y`: the helicoid over the hyperbolic coefficient pattern.
fn helicoid_hyperbolic() -> CatalogEntry {
    let case = CaseK::positive();
    let rows = [row(0.0, 1.0, 0.0), row(-2.0, 1.0, 1.0), row(0.0, 0.0, 1.0)];
    let y0 = -0.5_f64.atanh();
    CatalogEntry {
        name: "helicoid-hyperbolic",
        section_ref: "4.1.3",
        aliases: &["4.1.3-hyperbolic-helicoid"],
        family: "4.1.3",
        implicit_string: "x = z*tanh(y)",
        expected_class: ExpectedClass::Timelike,
        constants: ConstantsTriple::new(case, rows),
        profiles: [
            prof(Axis::X, case, rows[0], Sign::Plus, (-INF, INF), (-1.0, 0.0)),
            prof(Axis::Y, case, rows[1], Sign::Minus, (-INF, 0.0), (y0, -LN_2)),
            prof(Axis::Z, case, rows[2], Sign::Plus, (-INF, INF), (1.0, 0.0)),
        ],
        bounding_box: Box3::new([-2.4, -2.4, 0.12], [-0.12, -0.12, 2.4]),
        lightlike_loci: vec![],
        free_params: vec![],
        periods: vec![],
        notes: "ruled and timelike on the sampled sheet",
        closed: [
            cf((-INF, 0.0), |x| -(-x).ln(), |x| -1.0 / x),
            cf(
                (-INF, 0.0),
                |y| (-y.tanh()).ln(),
                |y| {
                    let t = y.tanh();
                    (1.0 - t * t) / t
                },
            ),
            cf((0.0, INF), |z| z.ln(), |z| 1.0 / z),
        ],
        constants_fn: None,
    }
}

/// `tanh x · tanh y = tanh(z/√2)`.
fn tanh_triple() -> CatalogEntry {
    let case = CaseK::positive();
    let rows = [row(-2.0, 1.0, 1.0), row(-2.0, 1.0, 1.0), row(-1.0, 0.5, 0.5)];
    let x0 = 0.5_f64.atanh();
    CatalogEntry {
        name: "tanh-triple",
        section_ref: "4.1.4",
        aliases: &["4.1.4"],
        family: "4.1.4",
        implicit_string: "tanh(x)tanh(y) = tanh(z/sqrt(2))",
        expected_class: ExpectedClass::Mixed,
        constants: ConstantsTriple::new(case, rows),
        profiles: [
            prof(Axis::X, case, rows[0], Sign::Plus, (-INF, 0.0), (x0, -LN_2)),
            prof(Axis::Y, case, rows[1], Sign::Plus, (-INF, 0.0), (x0, -LN_2)),
            prof(Axis::Z, case, rows[2], Sign::Minus, (0.0, INF), (SQRT2 * x0, LN_2)),
        ],
        bounding_box: Box3::new([0.3, 0.3, 0.1], [2.5, 2.5, 3.05]),
        lightlike_loci: vec![],
        free_params: vec![],
        periods: vec![],
        notes: "mixed causal character; no straight lightlike lines",
        closed: [
            cf((0.0, INF), |x| x.tanh().ln(), |x| 2.0 / (2.0 * x).sinh()),
            cf((0.0, INF), |y| y.tanh().ln(), |y| 2.0 / (2.0 * y).sinh()),
            cf(
                (0.0, INF),
                |z| -((z / SQRT2).tanh().ln()),
                |z| -SQRT2 / (SQRT2 * z).sinh(),
            ),
        ],
        constants_fn: None,
    }
}

/// `sinh x · V(z/√2) = sin y` — first elliptic-profile surface (`m = 1/2`).
fn v_surface() -> CatalogEntry {
    let case = CaseK::positive();
    let rows = [row(1.0, 0.0, 1.0), row(-1.0, 1.0, 0.0), row(0.0, 0.5, -0.5)];
    let u0 = 1.0_f64.asinh();
    let v_sup = SQRT2 * (kernel_v().output_range().1 - 1e-8);
    CatalogEntry {
        name: "v-surface",
        section_ref: "4.2.1",
        aliases: &["4.2.1-v"],
        family: "4.2.1",
        implicit_string: "sinh(x)*V(z/sqrt(2)) = sin(y)",
        expected_class: ExpectedClass::Timelike,
        constants: ConstantsTriple::new(case, rows),
        profiles: [
            prof(Axis::X, case, rows[0], Sign::Plus, (-INF, INF), (u0, 0.0)),
            prof(Axis::Y, case, rows[1], Sign::Minus, (0.0, INF), (FRAC_PI_2, 0.0)),
            prof(Axis::Z, case, rows[2], Sign::Plus, (0.0, INF), (0.0, 0.0)),
        ],
        bounding_box: Box3::new([0.25, 0.2, 0.08], [2.2, PI - 0.2, 1.7]),
        lightlike_loci: vec![],
        free_params: vec![fp("m", 0.5, (-INF, INF))],
        periods: vec![[0.0, 2.0 * PI, 0.0]],
        notes: "z-profile inverts an incomplete elliptic integral; z in (0, sqrt(2)*psi1)",
        closed: [
            cf((0.0, INF), |x| x.sinh().ln(), |x| 1.0 / x.tanh()),
            cf((0.0, PI), |y| -(y.sin().ln()), |y| -y.cos() / y.sin()),
            cf(
                (0.0, v_sup),
                |z| kernel_v().inverse(z / SQRT2).map(f64::ln).unwrap_or(f64::NAN),
                |z| match kernel_v().inverse(z / SQRT2) {
                    Ok(t) => (t.powi(4) - 1.0).max(0.0).sqrt() / (SQRT2 * t),
                    Err(_) => f64::NAN,
                },
            ),
        ],
        constants_fn: Some(constants_sinh_sin),
    }
}

/// `sinh x = sin y · sinh z` (`m = 1` member of the same family).
fn sinh_sin_sinh() -> CatalogEntry {
    let case = CaseK::positive();
    let rows = [row(1.0, 0.0, 1.0), row(-1.0, 1.0, 0.0), row(1.0, 1.0, 0.0)];
    let u0 = 1.0_f64.asinh();
    CatalogEntry {
        name: "sinh-sin-sinh",
        section_ref: "4.2.1",
        aliases: &["4.2.1-sin"],
        family: "4.2.1",
        implicit_string: "sinh(x) = sin(y)sinh(z)",
        expected_class: ExpectedClass::Timelike,
        constants: ConstantsTriple::new(case, rows),
        profiles: [
            prof(Axis::X, case, rows[0], Sign::Plus, (-INF, INF), (u0, 0.0)),
            prof(Axis::Y, case, rows[1], Sign::Minus, (0.0, INF), (FRAC_PI_2, 0.0)),
            prof(Axis::Z, case, rows[2], Sign::Minus, (-INF, INF), (u0, 0.0)),
        ],
        bounding_box: Box3::new([0.25, 0.2, 0.25], [2.2, PI - 0.2, 2.2]),
        lightlike_loci: vec![LocusLine::new([0.0, FRAC_PI_2, 0.0], [1.0, 0.0, 1.0], (0.25, 2.2))],
        free_params: vec![fp("m", 1.0, (-INF, INF))],
        periods: vec![[0.0, 2.0 * PI, 0.0]],
        notes: "periodic in y; lightlike along x = z at y = pi/2",
        closed: [
            cf((0.0, INF), |x| x.sinh().ln(), |x| 1.0 / x.tanh()),
            cf((0.0, PI), |y| -(y.sin().ln()), |y| -y.cos() / y.sin()),
            cf((0.0, INF), |z| -(z.sinh().ln()), |z| -1.0 / z.tanh()),
        ],
        constants_fn: Some(constants_sinh_sin),
    }
}

/// `sinh z · M(y/√2) = sinh x` — second elliptic-profile surface (`m = 1/2`).
fn m_surface() -> CatalogEntry {
    let case = CaseK::positive();
    let rows = [row(1.0, 1.0, 0.0), row(0.0, -0.5, 0.5), row(1.0, 0.0, 1.0)];
    let u0 = 1.0_f64.asinh();
    let y_turn = SQRT2 * PSI_1;
    let m_sup = 2.0 * SQRT2 * kernel_m().output_range().1 - 1e-9;
    CatalogEntry {
        name: "m-surface",
        section_ref: "4.2.2",
        aliases: &["4.2.2-m"],
        family: "4.2.2",
        implicit_string: "sinh(z)*M(y/sqrt(2)) = sinh(x)",
        expected_class: ExpectedClass::Timelike,
        constants: ConstantsTriple::new(case, rows),
        profiles: [
            prof(Axis::X, case, rows[0], Sign::Minus, (-INF, INF), (u0, 0.0)),
            prof(Axis::Y, case, rows[1], Sign::Plus, (-INF, 0.0), (y_turn, 0.0)),
            prof(Axis::Z, case, rows[2], Sign::Plus, (-INF, INF), (u0, 0.0)),
        ],
        bounding_box: Box3::new([0.25, 0.3, 0.25], [2.2, 3.4, 2.2]),
        lightlike_loci: vec![LocusLine::new([0.0, y_turn, 0.0], [1.0, 0.0, 1.0], (0.25, 2.2))],
        free_params: vec![fp("m", 0.5, (-INF, INF))],
        periods: vec![],
        notes: "margin stays positive but dips within 2e-5 of lightlike near the locus",
        closed: [
            cf((0.0, INF), |x| -(x.sinh().ln()), |x| -1.0 / x.tanh()),
            cf(
                (0.0, m_sup),
                |y| {
                    let k = kernel_m();
                    let psi1 = k.output_range().1;
                    let psi = y / SQRT2;
                    k.inverse(psi.min(2.0 * psi1 - psi)).map(f64::ln).unwrap_or(f64::NAN)
                },
                |y| {
                    let k = kernel_m();
                    let psi1 = k.output_range().1;
                    let psi = y / SQRT2;
                    let s = if psi <= psi1 { 1.0 } else { -1.0 };
                    match k.inverse(psi.min(2.0 * psi1 - psi)) {
                        Ok(t) => s * (1.0 - t.powi(4)).max(0.0).sqrt() / (SQRT2 * t),
                        Err(_) => f64::NAN,
                    }
                },
            ),
            cf((0.0, INF), |z| z.sinh().ln(), |z| 1.0 / z.tanh()),
        ],
        constants_fn: Some(constants_sinh_dual),
    }
}

/// `sinh x · cosh y = sinh z` again, from the dual family at `m = 0`.
fn sinh_cosh_sinh_dual() -> CatalogEntry {
    let case = CaseK::positive();
    let rows = [row(1.0, 1.0, 0.0), row(1.0, -1.0, 0.0), row(1.0, 0.0, 1.0)];
    let u0 = 1.0_f64.asinh();
    CatalogEntry {
        name: "sinh-cosh-sinh-dual",
        section_ref: "4.2.2",
        aliases: &["4.2.2-cosh"],
        family: "4.2.2",
        implicit_string: "sinh(x)cosh(y) = sinh(z)",
        expected_class: ExpectedClass::Timelike,
        constants: ConstantsTriple::new(case, rows),
        profiles: [
            prof(Axis::X, case, rows[0], Sign::Minus, (-INF, INF), (u0, 0.0)),
            prof(Axis::Y, case, rows[1], Sign::Minus, (-INF, 0.0), (0.0, 0.0)),
            prof(Axis::Z, case, rows[2], Sign::Plus, (-INF, INF), (u0, 0.0)),
        ],
        bounding_box: Box3::new([0.25, -1.6, 0.25], [2.2, 1.6, 2.2]),
        lightlike_loci: vec![LocusLine::new([0.0; 3], [1.0, 0.0, 1.0], (0.25, 2.2))],
        free_params: vec![fp("m", 0.0, (-INF, INF))],
        periods: vec![],
        notes: "same zero set as scherk-timelike-2nd via a different row table",
        closed: [
            cf((0.0, INF), |x| -(x.sinh().ln()), |x| -1.0 / x.tanh()),
            cf((-INF, INF), |y| -(y.cosh().ln()), |y| -y.tanh()),
            cf((0.0, INF), |z| z.sinh().ln(), |z| 1.0 / z.tanh()),
        ],
        constants_fn: Some(constants_sinh_dual),
    }
}

/// `sinh x = sin y · sinh z` again, from the dual family at `m = 1`.
fn sinh_sin_sinh_dual() -> CatalogEntry {
    let case = CaseK::positive();
    let rows = [row(1.0, 1.0, 0.0), row(-1.0, 0.0, 1.0), row(1.0, 0.0, 1.0)];
    let u0 = 1.0_f64.asinh();
    CatalogEntry {
        name: "sinh-sin-sinh-dual",
        section_ref: "4.2.2",
        aliases: &["4.2.2-sin"],
        family: "4.2.2",
        implicit_string: "sinh(x) = sin(y)sinh(z)",
        expected_class: ExpectedClass::Timelike,
        constants: ConstantsTriple::new(case, rows),
        profiles: [
            prof(Axis::X, case, rows[0], Sign::Minus, (-INF, INF), (u0, 0.0)),
            prof(Axis::Y, case, rows[1], Sign::Plus, (-INF, 0.0), (FRAC_PI_2, 0.0)),
            prof(Axis::Z, case, rows[2], Sign::Plus, (-INF, INF), (u0, 0.0)),
        ],
        bounding_box: Box3::new([0.25, 0.2, 0.25], [2.2, PI - 0.2, 2.2]),
        lightlike_loci: vec![LocusLine::new([0.0, FRAC_PI_2, 0.0], [1.0, 0.0, 1.0], (0.25, 2.2))],
        free_params: vec![fp("m", 1.0, (-INF, INF))],
        periods: vec![[0.0, 2.0 * PI, 0.0]],
        notes: "same zero set as sinh-sin-sinh via a different row table",
        closed: [
            cf((0.0, INF), |x| -(x.sinh().ln()), |x| -1.0 / x.tanh()),
            cf((0.0, PI), |y| y.sin().ln(), |y| y.cos() / y.sin()),
            cf((0.0, INF), |z| z.sinh().ln(), |z| 1.0 / z.tanh()),
        ],
        constants_fn: Some(constants_sinh_dual),
    }
}

/// `sin x · cosh z = cosh y` (trigonometric–hyperbolic mix, first table, `m = 1`).
fn sin_cosh_cosh() -> CatalogEntry {
    let case = CaseK::positive();
    let rows = [row(-1.0, 0.0, 1.0), row(1.0, -1.0, 0.0), row(1.0, 0.0, -1.0)];
    CatalogEntry {
        name: "sin-cosh-cosh",
        section_ref: "4.2.3",
        aliases: &["4.2.3-cosh-cosh"],
        family: "4.2.3-t1",
        implicit_string: "sin(x)cosh(z) = cosh(y)",
        expected_class: ExpectedClass::Timelike,
        constants: ConstantsTriple::new(case, rows),
        profiles: [
            prof(Axis::X, case, rows[0], Sign::Plus, (-INF, 0.0), (FRAC_PI_2, 0.0)),
            prof(Axis::Y, case, rows[1], Sign::Minus, (-INF, 0.0), (0.0, 0.0)),
            prof(Axis::Z, case, rows[2], Sign::Plus, (0.0, INF), (0.0, 0.0)),
        ],
        bounding_box: Box3::new([0.2, -1.6, -1.9], [PI - 0.2, 1.6, 1.9]),
        lightlike_loci: vec![
            LocusLine::new([FRAC_PI_2, 0.0, 0.0], [0.0, 1.0, 1.0], (-1.5, 1.5)),
            LocusLine::new([FRAC_PI_2, 0.0, 0.0], [0.0, 1.0, -1.0], (-1.5, 1.5)),
        ],
        free_params: vec![fp("m", 1.0, (-INF, INF))],
        periods: vec![[2.0 * PI, 0.0, 0.0]],
        notes: "conelike point at (pi/2, 0, 0) where both loci cross",
        closed: [
            cf((0.0, PI), |x| x.sin().ln(), |x| x.cos() / x.sin()),
            cf((-INF, INF), |y| -(y.cosh().ln()), |y| -y.tanh()),
            cf((-INF, INF), |z| z.cosh().ln(), |z| z.tanh()),
        ],
        constants_fn: Some(constants_sin_cosh_first),
    }
}

/// `sin x · V(z/√2) = cosh y` (same table at `m = 0`; elliptic z-profile).
fn sin_v_cosh() -> CatalogEntry {
    let case = CaseK::positive();
    let rows = [row(-1.0, 0.0, 1.0), row(1.0, -1.0, 0.0), row(0.0, 0.5, -0.5)];
    let v_sup = SQRT2 * (kernel_v().output_range().1 - 1e-8);
    CatalogEntry {
        name: "sin-v-cosh",
        section_ref: "4.2.3",
        aliases: &["4.2.3-v"],
        family: "4.2.3-t1",
        implicit_string: "sin(x)*V(z/sqrt(2)) = cosh(y)",
        expected_class: ExpectedClass::Mixed,
        constants: ConstantsTriple::new(case, rows),
        profiles: [
            prof(Axis::X, case, rows[0], Sign::Plus, (-INF, 0.0), (FRAC_PI_2, 0.0)),
            prof(Axis::Y, case, rows[1], Sign::Minus, (-INF, 0.0), (0.0, 0.0)),
            prof(Axis::Z, case, rows[2], Sign::Plus, (0.0, INF), (0.0, 0.0)),
        ],
        bounding_box: Box3::new([0.2, -1.6, -1.7], [PI - 0.2, 1.6, 1.7]),
        lightlike_loci: vec![],
        free_params: vec![fp("m", 0.0, (-INF, INF))],
        periods: vec![[2.0 * PI, 0.0, 0.0]],
        notes: "lightlike set is the curve cosh^2(y) + sin^2(x) = 2, not a line",
        closed: [
            cf((0.0, PI), |x| x.sin().ln(), |x| x.cos() / x.sin()),
            cf((-INF, INF), |y| -(y.cosh().ln()), |y| -y.tanh()),
            cf(
                (-v_sup, v_sup),
                |z| kernel_v().inverse(z.abs() / SQRT2).map(f64::ln).unwrap_or(f64::NAN),
                |z| match kernel_v().inverse(z.abs() / SQRT2) {
                    Ok(t) => z.signum() * (t.powi(4) - 1.0).max(0.0).sqrt() / (SQRT2 * t),
                    Err(_) => f64::NAN,
                },
            ),
        ],
        constants_fn: Some(constants_sin_cosh_first),
    }
}

/// `sin x = cosh y · sin z` (second table, `m = 1`).
fn sin_cosh_sin() -> CatalogEntry {
    let case = CaseK::positive();
    let rows = [row(-1.0, 0.0, 1.0), row(1.0, -1.0, 0.0), row(-1.0, 1.0, 0.0)];
    let d = (0.2, 2.94);
    CatalogEntry {
        name: "sin-cosh-sin",
        section_ref: "4.2.3",
        aliases: &["4.2.3-cosh-sin"],
        family: "4.2.3-t2",
        implicit_string: "sin(x) = cosh(y)sin(z)",
        expected_class: ExpectedClass::Spacelike,
        constants: ConstantsTriple::new(case, rows),
        profiles: [
            prof(Axis::X, case, rows[0], Sign::Plus, (-INF, 0.0), (FRAC_PI_2, 0.0)),
            prof(Axis::Y, case, rows[1], Sign::Minus, (-INF, 0.0), (0.0, 0.0)),
            prof(Axis::Z, case, rows[2], Sign::Minus, (0.0, INF), (FRAC_PI_2, 0.0)),
        ],
        bounding_box: Box3::new([0.2, -1.2, 0.2], [PI - 0.2, 1.2, PI - 0.2]),
        lightlike_loci: vec![
            LocusLine::new([0.0, 0.0, 0.0], [1.0, 0.0, 1.0], d),
            LocusLine::new([0.0, 0.0, PI], [1.0, 0.0, -1.0], d),
        ],
        free_params: vec![fp("m", 1.0, (-INF, INF))],
        periods: vec![[2.0 * PI, 0.0, 0.0], [0.0, 0.0, 2.0 * PI]],
        notes: "spacelike between the two lightlike lines in the y = 0 plane",
        closed: [
            cf((0.0, PI), |x| x.sin().ln(), |x| x.cos() / x.sin()),
            cf((-INF, INF), |y| -(y.cosh().ln()), |y| -y.tanh()),
            cf((0.0, PI), |z| -(z.sin().ln()), |z| -z.cos() / z.sin()),
        ],
        constants_fn: Some(constants_sin_cosh_second),
    }
}

/// `sin x · M(y/√2) = sin z` (second table at `m = 0`; elliptic y-profile).
fn sin_m_sin() -> CatalogEntry {
    let case = CaseK::positive();
    let rows = [row(-1.0, 0.0, 1.0), row(0.0, -0.5, 0.5), row(-1.0, 1.0, 0.0)];
    let y_turn = SQRT2 * PSI_1;
    let m_sup = 2.0 * SQRT2 * kernel_m().output_range().1 - 1e-9;
    let d = (0.2, 2.94);
    CatalogEntry {
        name: "sin-m-sin",
        section_ref: "4.2.3",
        aliases: &["4.2.3-m-sin"],
        family: "4.2.3-t2",
        implicit_string: "sin(x)*M(y/sqrt(2)) = sin(z)",
        expected_class: ExpectedClass::Spacelike,
        constants: ConstantsTriple::new(case, rows),
        profiles: [
            prof(Axis::X, case, rows[0], Sign::Plus, (-INF, 0.0), (FRAC_PI_2, 0.0)),
            prof(Axis::Y, case, rows[1], Sign::Plus, (-INF, 0.0), (y_turn, 0.0)),
            prof(Axis::Z, case, rows[2], Sign::Minus, (0.0, INF), (FRAC_PI_2, 0.0)),
        ],
        bounding_box: Box3::new([0.2, 0.25, 0.2], [PI - 0.2, 3.45, PI - 0.2]),
        lightlike_loci: vec![
            LocusLine::new([0.0, y_turn, 0.0], [1.0, 0.0, 1.0], d),
            LocusLine::new([0.0, y_turn, PI], [1.0, 0.0, -1.0], d),
        ],
        free_params: vec![fp("m", 0.0, (-INF, INF))],
        periods: vec![[2.0 * PI, 0.0, 0.0], [0.0, 0.0, 2.0 * PI]],
        notes: "y-profile reflects at sqrt(2)*psi1 where M peaks at 1",
        closed: [
            cf((0.0, PI), |x| x.sin().ln(), |x| x.cos() / x.sin()),
            cf(
                (0.0, m_sup),
                |y| {
                    let k = kernel_m();
                    let psi1 = k.output_range().1;
                    let psi = y / SQRT2;
                    k.inverse(psi.min(2.0 * psi1 - psi)).map(f64::ln).unwrap_or(f64::NAN)
                },
                |y| {
                    let k = kernel_m();
                    let psi1 = k.output_range().1;
                    let psi = y / SQRT2;
                    let s = if psi <= psi1 { 1.0 } else { -1.0 };
                    match k.inverse(psi.min(2.0 * psi1 - psi)) {
                        Ok(t) => s * (1.0 - t.powi(4)).max(0.0).sqrt() / (SQRT2 * t),
                        Err(_) => f64::NAN,
                    }
                },
            ),
            cf((0.0, PI), |z| -(z.sin().ln()), |z| -z.cos() / z.sin()),
        ],
        constants_fn: Some(constants_sin_cosh_second),
    }
}

/// `F(x)·F(y)·G(z) = 1` with both profiles inverting elliptic integrals.
fn elliptic_product() -> CatalogEntry {
    let case = CaseK::positive();
    let rows = [row(-1.0, 1.0, 1.0), row(-1.0, 1.0, 1.0), row(1.0, 1.0, 1.0)];
    let f1 = kernel_f_hat().forward(1.0).expect("F kernel forward(1)");
    let g1 = kernel_g_hat().forward(1.0).expect("G kernel forward(1)");
    let f_sup = kernel_f_hat().output_range().1 - 1e-8;
    let g_sup = kernel_g_hat().output_range().1 - 1e-8;
    CatalogEntry {
        name: "elliptic-product",
        section_ref: "4.3",
        aliases: &["4.3"],
        family: "4.3",
        implicit_string: "F(x)*F(y)*G(z) = 1",
        expected_class: ExpectedClass::Mixed,
        constants: ConstantsTriple::new(case, rows),
        profiles: [
            prof(Axis::X, case, rows[0], Sign::Plus, (-INF, INF), (f1, 0.0)),
            prof(Axis::Y, case, rows[1], Sign::Plus, (-INF, INF), (f1, 0.0)),
            prof(Axis::Z, case, rows[2], Sign::Plus, (-INF, INF), (g1, 0.0)),
        ],
        bounding_box: Box3::new(
            [0.12, 0.12, 0.12],
            [2.0 * f1 - 0.12, 2.0 * f1 - 0.12, 2.0 * g1 - 0.12],
        ),
        lightlike_loci: vec![],
        free_params: vec![fp("m", 1.0, (-INF, INF))],
        periods: vec![],
        notes: "all three coordinates confined to finite slabs",
        closed: [
            cf(
                (0.0, f_sup),
                |x| kernel_f_hat().inverse(x).map(f64::ln).unwrap_or(f64::NAN),
                |x| match kernel_f_hat().inverse(x) {
                    Ok(t) => kernel_f_hat().q(t).max(0.0).sqrt() / t,
                    Err(_) => f64::NAN,
                },
            ),
            cf(
                (0.0, f_sup),
                |y| kernel_f_hat().inverse(y).map(f64::ln).unwrap_or(f64::NAN),
                |y| match kernel_f_hat().inverse(y) {
                    Ok(t) => kernel_f_hat().q(t).max(0.0).sqrt() / t,
                    Err(_) => f64::NAN,
                },
            ),
            cf(
                (0.0, g_sup),
                |z| kernel_g_hat().inverse(z).map(f64::ln).unwrap_or(f64::NAN),
                |z| match kernel_g_hat().inverse(z) {
                    Ok(t) => kernel_g_hat().q(t).max(0.0).sqrt() / t,
                    Err(_) => f64::NAN,
                },
            ),
        ],
        constants_fn: Some(constants_elliptic_product),
    }
}

/// First trigonometric-case example: arctan–sinh profiles, `k = 1`.
fn k_neg_example_1() -> CatalogEntry {
    let case = CaseK::negative();
    let rows = [row(1.0, 0.0, 1.0), row(1.0, 0.0, 1.0), row(0.5, 0.5, 0.0)];
    CatalogEntry {
        name: "k-neg-example-1",
        section_ref: "5.1",
        aliases: &["5.1"],
        family: "5.1",
        implicit_string:
            "arctan(sinh(x/sqrt(2))) + arctan(sinh(y/sqrt(2))) + arctan(sinh(z/2)) = -pi/2",
        expected_class: ExpectedClass::Timelike,
        constants: ConstantsTriple::new(case, rows),
        profiles: [
            prof(Axis::X, case, rows[0], Sign::Plus, (-FRAC_PI_2, 3.0 * FRAC_PI_2), (0.0, FRAC_PI_2)),
            prof(Axis::Y, case, rows[1], Sign::Plus, (-FRAC_PI_2, 3.0 * FRAC_PI_2), (0.0, FRAC_PI_2)),
            prof(Axis::Z, case, rows[2], Sign::Plus, (-PI, PI), (0.0, 0.0)),
        ],
        bounding_box: Box3::new([-2.5, -2.5, -2.5], [2.5, 2.5, 2.5]),
        lightlike_loci: vec![],
        free_params: vec![],
        periods: vec![],
        notes: "entire timelike graph; profiles take values in bounded intervals",
        closed: [
            cf(
                (-INF, INF),
                |x| FRAC_PI_2 + 2.0 * (x / SQRT2).sinh().atan(),
                |x| SQRT2 / (x / SQRT2).cosh(),
            ),
            cf(
                (-INF, INF),
                |y| FRAC_PI_2 + 2.0 * (y / SQRT2).sinh().atan(),
                |y| SQRT2 / (y / SQRT2).cosh(),
            ),
            cf(
                (-INF, INF),
                |z| 2.0 * (0.5 * z).sinh().atan(),
                |z| 1.0 / (0.5 * z).cosh(),
            ),
        ],
        constants_fn: None,
    }
}

/// Second trigonometric-case example: three distinct frequencies.
fn k_neg_example_2() -> CatalogEntry {
    let case = CaseK::negative();
    let rows = [row(0.5, 0.5, 0.0), row(1.0, 0.0, 1.0), row(1.0 / 3.0, 0.0, 1.0 / 3.0)];
    CatalogEntry {
        name: "k-neg-example-2",
        section_ref: "5.2",
        aliases: &["5.2"],
        family: "5.2",
        implicit_string:
            "arctan(sinh(x/2)) + arctan(sinh(y/sqrt(2))) + arctan(sinh(z/sqrt(6))) = -pi/2",
        expected_class: ExpectedClass::Timelike,
        constants: ConstantsTriple::new(case, rows),
        profiles: [
            prof(Axis::X, case, rows[0], Sign::Plus, (-PI, PI), (0.0, 0.0)),
            prof(Axis::Y, case, rows[1], Sign::Plus, (-FRAC_PI_2, 3.0 * FRAC_PI_2), (0.0, FRAC_PI_2)),
            prof(Axis::Z, case, rows[2], Sign::Plus, (-FRAC_PI_2, 3.0 * FRAC_PI_2), (0.0, FRAC_PI_2)),
        ],
        bounding_box: Box3::new([-2.8, -2.8, -2.8], [2.8, 2.8, 2.8]),
        lightlike_loci: vec![],
        free_params: vec![],
        periods: vec![],
        notes: "entire timelike graph with three distinct profile frequencies",
        closed: [
            cf(
                (-INF, INF),
                |x| 2.0 * (0.5 * x).sinh().atan(),
                |x| 1.0 / (0.5 * x).cosh(),
            ),
            cf(
                (-INF, INF),
                |y| FRAC_PI_2 + 2.0 * (y / SQRT2).sinh().atan(),
                |y| SQRT2 / (y / SQRT2).cosh(),
            ),
            cf(
                (-INF, INF),
                |z| FRAC_PI_2 + 2.0 * (z / SQRT6).sinh().atan(),
                |z| (2.0 / SQRT6) / (z / SQRT6).cosh(),
            ),
        ],
        constants_fn: None,
    }
}

/// Build the full catalog in presentation order.
pub(super) fn build() -> Vec<CatalogEntry> {
    vec![
        exp_same_sign(),
        exp_opposite_sign(),
        sin_triple(),
        cosh_triple(),
        sinh_triple(),
        sin_triple_alt(),
        cosh_triple_alt(),
        sinh_sinh_cosh(),
        scherk_timelike_2nd(),
        cosh_sinh_sinh(),
        scherk_timelike_1st(),
        scherk_spacelike(),
        helicoid_elliptic(),
        helicoid_hyperbolic(),
        tanh_triple(),
        v_surface(),
        sinh_sin_sinh(),
        m_surface(),
        sinh_cosh_sinh_dual(),
        sinh_sin_sinh_dual(),
        sin_cosh_cosh(),
        sin_v_cosh(),
        sin_cosh_sin(),
        sin_m_sin(),
        elliptic_product(),
        k_neg_example_1(),
        k_neg_example_2(),
    ]
}
