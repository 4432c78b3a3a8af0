//! The algebraic constraint systems linking the nine profile coefficients.
//!
//! Substituting the closed-form families for `X`, `Y`, `Z` into the
//! zero-mean-curvature identity
//!
//! ```text
//! A := (Y−Z)X′ + (X−Z)Y′ − (X+Y)Z′ = 0   on   u + v + w = 0
//! ```
//!
//! and matching coefficients of the independent basis functions yields six
//! polynomial equations in `a_i, b_i, c_i` — one system per sign of `K`.
//! This module evaluates those residuals, the three secondary identities
//! obtained by differentiating `A` along the plane `u+v+w=0`, the homothety
//! rescaling that moves between values of `k`, and a small damped
//! Gauss–Newton solver for finding new coefficient sets.

use crate::profiles::eval_X;
use crate::types::{CaseK, CoeffRow, ConstantsTriple, Result, ZmcError};

/// Left-hand sides of the six constraint equations for the triple's case, in
/// the displayed top-to-bottom order. A valid surface has max-norm below
/// [`crate::types::RESIDUAL_TOL`].
///
/// ```
/// use zmc_separable::constraints::residuals;
/// use zmc_separable::types::{CaseK, ConstantsTriple};
///
/// // sinh(x)·sinh(y) = cosh(z): a=(1,1,1), b=(0,0,−1), c=(1,1,0).
/// let c = ConstantsTriple::from_tuples(
///     CaseK::positive(),
///     (1.0, 1.0, 1.0),
///     (0.0, 0.0, -1.0),
///     (1.0, 1.0, 0.0),
/// );
/// assert_eq!(residuals(&c), [0.0; 6]);
/// ```
pub fn residuals(constants: &ConstantsTriple) -> [f64; 6] {
    let [r1, r2, r3] = constants.rows;
    let (a1, b1, c1) = (r1.a, r1.b, r1.c);
    let (a2, b2, c2) = (r2.a, r2.b, r2.c);
    let (a3, b3, c3) = (r3.a, r3.b, r3.c);
    match constants.case {
        CaseK::Positive { .. } => [
            (a2 - a3) * c1 + 2.0 * b2 * b3,
            (a1 - a3) * c2 + 2.0 * b1 * b3,
            (a2 - a3) * b1 + 2.0 * c2 * c3,
            (a1 - a3) * b2 + 2.0 * c1 * c3,
            (a1 + a2) * b3 + 2.0 * c1 * c2,
            (a1 + a2) * c3 + 2.0 * b1 * b2,
        ],
        CaseK::Negative { .. } => [
            (a2 - a3) * c1 - b3 * c2 - b2 * c3,
            (a1 - a3) * c2 - b3 * c1 - b1 * c3,
            (a2 - a3) * b1 + b2 * b3 - c2 * c3,
            (a1 - a3) * b2 + b1 * b3 - c1 * c3,
            (a1 + a2) * b3 + b1 * b2 - c1 * c2,
            (a1 + a2) * c3 - b2 * c1 - b1 * c2,
        ],
        CaseK::Zero => [
            a1 * (b2 - b3) + a2 * (b1 - b3) - a3 * (b1 + b2),
            b1 * b2 + b2 * b3 + 2.0 * c1 * (a2 - a3) + 2.0 * c3 * (a1 + a2),
            b1 * b2 + b1 * b3 + 2.0 * c2 * (a1 - a3) + 2.0 * c3 * (a1 + a2),
            c1 * (b2 + b3) + c3 * (b1 - b2),
            c2 * (b1 + b3) - c3 * (b1 - b2),
            c1 * c2 - c1 * c3 - c2 * c3,
        ],
    }
}

/// Max-norm of [`residuals`].
pub fn residual_max_norm(constants: &ConstantsTriple) -> f64 {
    residuals(constants).iter().fold(0.0, |m, r| m.max(r.abs()))
}

/// The three secondary identities obtained by differentiating `A = 0` along
/// the plane `u+v+w = 0` (differences of partials in the three directions):
///
/// ```text
/// B₁ = (Y−Z)X″ − (X−Z)Y″ − (X′−Y′)Z′
/// B₂ = (Y′+Z′)X′ + (X−Z)Y″ + Z″(X+Y)
/// B₃ = (Y−Z)X″ + (X′+Z′)Y′ + (X+Y)Z″
/// ```
///
/// evaluated formally at `(u, v, −u−v)`. On solutions of the constraint
/// system all three vanish identically; they are a consequence, not an extra
/// condition, and the property tests confirm exactly that.
pub fn residuals_secondary(constants: &ConstantsTriple, u: f64, v: f64) -> [f64; 3] {
    let w = -u - v;
    let case = constants.case;
    let [rx, ry, rz] = constants.rows;
    let x = |o: u8| eval_X(rx, case, u, o);
    let y = |o: u8| eval_X(ry, case, v, o);
    let z = |o: u8| eval_X(rz, case, w, o);
    let b1 = (y(0) - z(0)) * x(2) - (x(0) - z(0)) * y(2) - (x(1) - y(1)) * z(1);
    let b2 = (y(1) + z(1)) * x(1) + (x(0) - z(0)) * y(2) + z(2) * (x(0) + y(0));
    let b3 = (y(0) - z(0)) * x(2) + (x(1) + z(1)) * y(1) + (x(0) + y(0)) * z(2);
    [b1, b2, b3]
}

/// Constants of the surface dilated by `λ` (`x ↦ λx` on all three axes).
///
/// With `f̃(x) = λ·f(x/λ)` the profile values scale as `ũ = λu` while
/// `X̃(ũ) = X(u)`, so the family constant transforms as `K̃ = K/λ²`:
/// for `K ≠ 0` the rows are unchanged and only `k̃ = k/|λ|` moves (a negative
/// `λ` additionally reflects the argument, swapping `b ↔ c` in the
/// exponential family and negating `c` in the trigonometric one); for `K = 0`
/// the rows become `(a, b/λ, c/λ²)`. Residuals are preserved exactly in all
/// cases.
pub fn rescale(constants: &ConstantsTriple, lambda: f64) -> Result<ConstantsTriple> {
    if lambda == 0.0 || !lambda.is_finite() {
        return Err(ZmcError::InvalidScale(lambda));
    }
    let case = rescale_case(constants.case, lambda);
    let rows = constants.rows.map(|r| rescale_row(r, constants.case, lambda));
    Ok(ConstantsTriple::new(case, rows))
}

/// The dilated family tag: `k̃ = k/|λ|` for the exponential and trigonometric
/// cases, unchanged for the quadratic case.
pub(crate) fn rescale_case(case: CaseK, lambda: f64) -> CaseK {
    let l = lambda.abs();
    match case {
        CaseK::Positive { k } => CaseK::Positive { k: k / l },
        CaseK::Negative { k } => CaseK::Negative { k: k / l },
        CaseK::Zero => CaseK::Zero,
    }
}

/// One row of the dilation: `X̃(ũ) = X(ũ/λ)` expressed in the canonical form
/// of the rescaled case. Negative `λ` reflects the profile argument, which
/// swaps (exponential case) or reflects (trigonometric case) the `b`/`c`
/// parts.
pub(crate) fn rescale_row(row: CoeffRow, case: CaseK, lambda: f64) -> CoeffRow {
    let reflect = lambda < 0.0;
    match case {
        CaseK::Positive { .. } => {
            if reflect {
                CoeffRow::new(row.a, row.c, row.b)
            } else {
                row
            }
        }
        CaseK::Negative { .. } => {
            if reflect {
                CoeffRow::new(row.a, row.b, -row.c)
            } else {
                row
            }
        }
        CaseK::Zero => CoeffRow::new(row.a, row.b / lambda, row.c / (lambda * lambda)),
    }
}

/// Jacobian column of the residual vector with respect to parameter `idx`
/// (packed order `a₁,b₁,c₁,a₂,b₂,c₂,a₃,b₃,c₃`).
///
/// The residuals are quadratic polynomials in the nine parameters, so the
/// centered difference is *exact* up to round-off — no analytic table to get
/// wrong.
fn jacobian_column(constants: &ConstantsTriple, idx: usize) -> [f64; 6] {
    const H: f64 = 1e-3;
    let mut plus = *constants;
    let mut minus = *constants;
    set_param(&mut plus, idx, get_param(constants, idx) + H);
    set_param(&mut minus, idx, get_param(constants, idx) - H);
    let rp = residuals(&plus);
    let rm = residuals(&minus);
    let mut col = [0.0; 6];
    for i in 0..6 {
        col[i] = (rp[i] - rm[i]) / (2.0 * H);
    }
    col
}

fn get_param(c: &ConstantsTriple, idx: usize) -> f64 {
    let row = &c.rows[idx / 3];
    match idx % 3 {
        0 => row.a,
        1 => row.b,
        _ => row.c,
    }
}

fn set_param(c: &mut ConstantsTriple, idx: usize, value: f64) {
    let row = &mut c.rows[idx / 3];
    match idx % 3 {
        0 => row.a = value,
        1 => row.b = value,
        _ => row.c = value,
    }
}

/// Solve a small dense linear system by Gaussian elimination with partial
/// pivoting. Returns `None` on (numerical) singularity.
fn solve_dense(mut a: Vec<Vec<f64>>, mut b: Vec<f64>) -> Option<Vec<f64>> {
    let n = b.len();
    for col in 0..n {
        let pivot = (col..n).max_by(|&i, &j| a[i][col].abs().partial_cmp(&a[j][col].abs()).unwrap())?;
        if a[pivot][col].abs() < 1e-300 {
            return None;
        }
        a.swap(col, pivot);
        b.swap(col, pivot);
        for row in (col + 1)..n {
            let f = a[row][col] / a[col][col];
            for k in col..n {
                a[row][k] -= f * a[col][k];
            }
            b[row] -= f * b[col];
        }
    }
    let mut x = vec![0.0; n];
    for col in (0..n).rev() {
        let mut s = b[col];
        for k in (col + 1)..n {
            s -= a[col][k] * x[k];
        }
        x[col] = s / a[col][col];
    }
    Some(x)
}

/// Search for constants satisfying the case's constraint system, starting
/// from `seed` and keeping the masked entries fixed.
///
/// `frozen_mask` uses the packed order `a₁,b₁,c₁,a₂,b₂,c₂,a₃,b₃,c₃`. At least
/// three entries must be frozen: the solution varieties are generically
/// 3-parameter families, so a fully free search would wander along the
/// family instead of converging. The iteration is Levenberg–Marquardt-damped
/// Gauss–Newton with backtracking, at most 200 steps, declaring success at
/// residual max-norm `< 1e−12`.
///
/// A converged triple in which some row has `b = c = 0` describes a constant
/// `X` — a linear coordinate function, i.e. a cylindrical/translation
/// surface outside this crate's scope — and is reported as
/// [`ZmcError::NoConvergence`] rather than returned as a spurious success.
pub fn solve_from_seed(
    case: CaseK,
    seed: &ConstantsTriple,
    frozen_mask: [bool; 9],
) -> Result<ConstantsTriple> {
    let frozen_count = frozen_mask.iter().filter(|&&f| f).count();
    if frozen_count < 3 {
        return Err(ZmcError::InvalidConstants(format!(
            "freeze at least 3 of the 9 constants (got {frozen_count}); the solution \
             families are 3-parameter to begin with"
        )));
    }
    let free: Vec<usize> = (0..9).filter(|&i| !frozen_mask[i]).collect();
    let mut current = ConstantsTriple { case, rows: seed.rows };

    let max_norm = |c: &ConstantsTriple| residuals(c).iter().fold(0.0_f64, |m, r| m.max(r.abs()));

    let mut mu = 1e-10;
    for _ in 0..200 {
        let r = residuals(&current);
        let norm = r.iter().fold(0.0_f64, |m, v| m.max(v.abs()));
        if norm < 1e-12 {
            return finish(current);
        }
        if free.is_empty() {
            break;
        }

        // J columns for the free parameters only.
        let cols: Vec<[f64; 6]> = free.iter().map(|&i| jacobian_column(&current, i)).collect();
        let nf = free.len();
        // Normal equations (JᵀJ + μI)δ = −Jᵀr.
        let mut jtj = vec![vec![0.0; nf]; nf];
        let mut jtr = vec![0.0; nf];
        for i in 0..nf {
            for j in 0..nf {
                jtj[i][j] = (0..6).map(|k| cols[i][k] * cols[j][k]).sum();
            }
            jtr[i] = -(0..6).map(|k| cols[i][k] * r[k]).sum::<f64>();
            jtj[i][i] += mu;
        }
        let Some(delta) = solve_dense(jtj, jtr) else {
            mu = (mu * 10.0).min(1e6);
            continue;
        };

        // Backtracking on the residual max-norm.
        let mut step = 1.0;
        let mut accepted = false;
        for _ in 0..30 {
            let mut trial = current;
            for (slot, &i) in free.iter().enumerate() {
                set_param(&mut trial, i, get_param(&current, i) + step * delta[slot]);
            }
            if max_norm(&trial) < norm {
                current = trial;
                accepted = true;
                break;
            }
            step *= 0.5;
        }
        if accepted {
            mu = (mu / 3.0).max(1e-14);
        } else {
            mu = (mu * 10.0).min(1e6);
            if mu >= 1e6 {
                break;
            }
        }
    }

    let final_norm = max_norm(&current);
    if final_norm < 1e-12 {
        return finish(current);
    }
    Err(ZmcError::NoConvergence {
        reason: format!("residual max-norm {final_norm:.3e} after iteration budget"),
    })
}

fn finish(c: ConstantsTriple) -> Result<ConstantsTriple> {
    if !c.is_nondegenerate() {
        return Err(ZmcError::NoConvergence {
            reason: "converged to a degenerate triple (a row has b = c = 0, i.e. a linear \
                     coordinate function — a cylindrical surface, not a separable ZMC one)"
                .into(),
        });
    }
    Ok(c)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn scherk_like() -> ConstantsTriple {
        // sinh(x)·sinh(y) = cosh(z).
        ConstantsTriple::from_tuples(
            CaseK::positive(),
            (1.0, 1.0, 1.0),
            (0.0, 0.0, -1.0),
            (1.0, 1.0, 0.0),
        )
    }

    #[test]
    fn known_solutions_have_zero_residuals() {
        assert_eq!(residuals(&scherk_like()), [0.0; 6]);

        // Triply periodic quadratic-family example: a=(2,2,4), b=0,
        // c=(−2,−2,−1).
        let sin_triple = ConstantsTriple::from_tuples(
            CaseK::Zero,
            (2.0, 2.0, 4.0),
            (0.0, 0.0, 0.0),
            (-2.0, -2.0, -1.0),
        );
        assert_eq!(residuals(&sin_triple), [0.0; 6]);

        // All-zero constants satisfy every system.
        let zero = ConstantsTriple::from_tuples(
            CaseK::negative(),
            (0.0, 0.0, 0.0),
            (0.0, 0.0, 0.0),
            (0.0, 0.0, 0.0),
        );
        assert_eq!(residuals(&zero), [0.0; 6]);
    }

    #[test]
    fn perturbation_shows_up_at_full_size() {
        let mut c = scherk_like();
        c.rows[0].a = 1.1;
        let r = residuals(&c);
        let norm = r.iter().fold(0.0_f64, |m, v| m.max(v.abs()));
        assert!((norm - 0.1).abs() < 1e-15, "expected max-norm 0.1, got {norm}");
    }

    #[test]
    fn secondary_identities_vanish_on_solutions() {
        let c = scherk_like();
        for i in 0..20 {
            for j in 0..20 {
                let u = -1.0 + 2.0 * i as f64 / 19.0;
                let v = -1.0 + 2.0 * j as f64 / 19.0;
                let b = residuals_secondary(&c, u, v);
                let norm = b.iter().fold(0.0_f64, |m, x| m.max(x.abs()));
                assert!(norm < 1e-10, "B at ({u},{v}) = {b:?}");
            }
        }
    }

    #[test]
    fn secondary_identities_detect_perturbation() {
        let mut c = scherk_like();
        c.rows[0].a = 1.1;
        let b = residuals_secondary(&c, 0.3, -0.1);
        let norm = b.iter().fold(0.0_f64, |m, x| m.max(x.abs()));
        assert!(norm > 1e-3, "perturbed B too small: {b:?}");
    }

    #[test]
    fn rescale_halves_k_and_keeps_residuals() {
        let c = scherk_like();
        let scaled = rescale(&c, 2.0).unwrap();
        assert_eq!(scaled.case, CaseK::Positive { k: 1.0 });
        assert_eq!(scaled.rows, c.rows);
        assert_eq!(residuals(&scaled), [0.0; 6]);
        // K̃·λ² = K.
        assert!((scaled.case.big_k() * 4.0 - c.case.big_k()).abs() < 1e-12);
        // λ = 1 is the identity.
        assert_eq!(rescale(&c, 1.0).unwrap(), c);
    }

    #[test]
    fn rescale_handles_negative_and_zero_scale() {
        let c = scherk_like();
        let reflected = rescale(&c, -1.0).unwrap();
        // b and c swap; the system maps onto itself.
        assert_eq!(reflected.rows[2], CoeffRow::new(1.0, 0.0, -1.0));
        assert_eq!(residuals(&reflected), [0.0; 6]);
        assert!(matches!(rescale(&c, 0.0), Err(ZmcError::InvalidScale(_))));

        // Quadratic family: rows transform as (a, b/λ, c/λ²).
        let q = ConstantsTriple::from_tuples(
            CaseK::Zero,
            (2.0, 2.0, 4.0),
            (0.0, 0.0, 0.0),
            (-2.0, -2.0, -1.0),
        );
        let s = rescale(&q, 3.0).unwrap();
        assert_eq!(s.rows[0].c, -2.0 / 9.0);
        let norm = residuals(&s).iter().fold(0.0_f64, |m, v| m.max(v.abs()));
        assert!(norm < 1e-15);
    }

    #[test]
    fn solver_is_a_fixed_point_on_solutions() {
        let c = scherk_like();
        let frozen = [false, true, false, false, false, false, false, true, true];
        let out = solve_from_seed(c.case, &c, frozen).unwrap();
        assert_eq!(out, c, "an exact solution must be returned unchanged");
    }

    #[test]
    fn solver_recovers_from_noisy_seed() {
        let exact = scherk_like();
        // Freeze b₁, b₃, c₃ (indices 1, 7, 8); noise on everything else.
        let frozen = [false, true, false, false, false, false, false, true, true];
        let mut seed = exact;
        let noise = [3e-4, 0.0, -8e-4, 5e-4, -2e-4, 7e-4, -6e-4, 0.0, 0.0];
        for i in 0..9 {
            set_param(&mut seed, i, get_param(&exact, i) + noise[i]);
        }
        let out = solve_from_seed(exact.case, &seed, frozen).unwrap();
        let norm = residual_max_norm(&out);
        assert!(norm < 1e-12, "converged residual {norm}");
        for i in [1usize, 7, 8] {
            assert_eq!(get_param(&out, i), get_param(&exact, i), "frozen entry {i} moved");
        }
        // The freeze leaves a small solution family; the solver should stay
        // in the seed's neighborhood rather than wander along it.
        for i in 0..9 {
            assert!(
                (get_param(&out, i) - get_param(&exact, i)).abs() < 1e-2,
                "parameter {i} left the basin: {}",
                get_param(&out, i)
            );
        }
    }

    #[test]
    fn solver_rejects_degenerate_limit() {
        // All-zero seed with the a-row frozen at nonzero values converges to
        // b = c = 0: a constant-X (cylindrical) solution, reported as failure.
        let seed = ConstantsTriple::from_tuples(
            CaseK::positive(),
            (1.0, 1.0, 1.0),
            (0.0, 0.0, 0.0),
            (0.0, 0.0, 0.0),
        );
        let frozen = [true, false, false, true, false, false, true, false, false];
        let r = solve_from_seed(seed.case, &seed, frozen);
        assert!(matches!(r, Err(ZmcError::NoConvergence { .. })), "got {r:?}");
    }

    #[test]
    fn solver_requires_three_frozen() {
        let c = scherk_like();
        let r = solve_from_seed(c.case, &c, [false; 9]);
        assert!(matches!(r, Err(ZmcError::InvalidConstants(_))));
    }
}
