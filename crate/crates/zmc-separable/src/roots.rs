//! Bracketed scalar root finding.
//!
//! A single safeguarded solver (Brent's method: bisection, secant, and
//! inverse quadratic interpolation) shared by profile inversion, elliptic
//! inversion, and on-surface point solving. All callers supply a bracket with
//! a sign change; monotonicity is their business, convergence is ours.
//!
//! ```
//! use zmc_separable::roots::brent;
//!
//! let r = brent(|x| x * x - 2.0, 0.0, 2.0, 1e-14, 100).unwrap();
//! assert!((r - 2f64.sqrt()).abs() < 1e-12);
//! ```

/// Find a root of `f` in `[a, b]`, which must bracket a sign change
/// (`f(a)·f(b) ≤ 0`). Returns `None` if the bracket is invalid or the
/// iteration budget runs out before the interval shrinks below `tol`
/// (plus a floating-point floor proportional to the root's magnitude).
pub fn brent(f: impl Fn(f64) -> f64, a: f64, b: f64, tol: f64, max_iter: usize) -> Option<f64> {
    let (mut a, mut b) = (a, b);
    let mut fa = f(a);
    let mut fb = f(b);
    if fa == 0.0 {
        return Some(a);
    }
    if fb == 0.0 {
        return Some(b);
    }
    if fa.signum() == fb.signum() || !fa.is_finite() || !fb.is_finite() {
        return None;
    }

    let mut c = a;
    let mut fc = fa;
    let mut d = b - a;
    let mut e = d;

    for _ in 0..max_iter {
        if fb.signum() == fc.signum() {
            c = a;
            fc = fa;
            d = b - a;
            e = d;
        }
        if fc.abs() < fb.abs() {
            a = b;
            b = c;
            c = a;
            fa = fb;
            fb = fc;
            fc = fa;
        }
        let tol1 = 2.0 * f64::EPSILON * b.abs() + 0.5 * tol;
        let xm = 0.5 * (c - b);
        if xm.abs() <= tol1 || fb == 0.0 {
            return Some(b);
        }
        if e.abs() >= tol1 && fa.abs() > fb.abs() {
            // Attempt interpolation: secant if only two points, inverse
            // quadratic if three are distinct.
            let s = fb / fa;
            let (mut p, mut q);
            if a == c {
                p = 2.0 * xm * s;
                q = 1.0 - s;
            } else {
                let qq = fa / fc;
                let r = fb / fc;
                p = s * (2.0 * xm * qq * (qq - r) - (b - a) * (r - 1.0));
                q = (qq - 1.0) * (r - 1.0) * (s - 1.0);
            }
            if p > 0.0 {
                q = -q;
            }
            p = p.abs();
            let min1 = 3.0 * xm * q - (tol1 * q).abs();
            let min2 = (e * q).abs();
            if 2.0 * p < min1.min(min2) {
                // Interpolation accepted.
                e = d;
                d = p / q;
            } else {
                d = xm;
                e = d;
            }
        } else {
            d = xm;
            e = d;
        }
        a = b;
        fa = fb;
        b += if d.abs() > tol1 { d } else { tol1.copysign(xm) };
        fb = f(b);
        if !fb.is_finite() {
            return None;
        }
    }
    None
}

/// Expand a bracket outward from `x0` in direction `dir` (±1) until `f`
/// changes sign relative to `f(x0)`, doubling the step each time but never
/// stepping past `limit`. Returns the bracketing pair `(inner, outer)` or
/// `None` if the limit is reached without a sign change.
pub fn expand_bracket(
    f: impl Fn(f64) -> f64,
    x0: f64,
    first_step: f64,
    dir: f64,
    limit: f64,
) -> Option<(f64, f64)> {
    let f0 = f(x0);
    if f0 == 0.0 {
        return Some((x0, x0));
    }
    let mut inner = x0;
    let mut step = first_step.abs() * dir.signum();
    for _ in 0..200 {
        let mut outer = inner + step;
        let clamped = if dir > 0.0 { outer >= limit } else { outer <= limit };
        if clamped {
            outer = limit;
        }
        let fo = f(outer);
        if fo.is_finite() && fo.signum() != f0.signum() {
            return Some((inner, outer));
        }
        if clamped {
            return None;
        }
        inner = outer;
        step *= 2.0;
    }
    None
}
