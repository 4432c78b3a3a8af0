//! Randomized invariants over the public API: algebraic identities that must
//! hold for *every* admissible input, not just the catalog entries.

use std::sync::OnceLock;

use proptest::prelude::*;

use zmc_separable::catalog;
use zmc_separable::constraints::{self, solve_from_seed};
use zmc_separable::profiles::{eval_X, ProfileMap};
use zmc_separable::report::on_surface_samples;
use zmc_separable::roots;
use zmc_separable::types::{Axis, CaseK, CausalClass, CoeffRow, Profile, Sign, ZmcError};

/// A dilation factor bounded away from zero, both signs.
fn lambda_strategy() -> impl Strategy<Value = f64> {
    (0.125_f64..8.0, any::<bool>()).prop_map(|(m, neg)| if neg { -m } else { m })
}

/// Any of the three coefficient families with a nondegenerate row.
fn case_strategy() -> impl Strategy<Value = CaseK> {
    prop_oneof![Just(CaseK::positive()), Just(CaseK::negative()), Just(CaseK::Zero)]
}

fn row_strategy() -> impl Strategy<Value = CoeffRow> {
    ((-4.0_f64..4.0), (-4.0_f64..4.0), (-4.0_f64..4.0))
        .prop_map(|(a, b, c)| CoeffRow::new(a, b, c))
        .prop_filter("need b or c nonzero", |r| !r.is_degenerate())
}

proptest! {
    /// Dilating an exact coefficient solution yields another exact solution:
    /// the six constraint polynomials stay at round-off for any admissible
    /// dilation factor.
    #[test]
    fn rescale_preserves_constraints(
        idx in 0usize..27,
        lambda in lambda_strategy(),
    ) {
        let entry = &catalog::entries()[idx % catalog::entries().len()];
        let scaled = constraints::rescale(&entry.constants, lambda).unwrap();
        let residual = constraints::residual_max_norm(&scaled);
        // 1/lambda^2 can amplify coefficients by up to 64, and the residual
        // polynomials are quadratic in them.
        prop_assert!(
            residual < 1e-10,
            "entry {} lambda {lambda}: residual {residual:e}", entry.name
        );
    }

    /// Dilating by `lambda` and back by `1/lambda` returns the original
    /// coefficient table slot-for-slot to round-off.
    #[test]
    fn rescale_round_trips(
        idx in 0usize..27,
        lambda in lambda_strategy(),
    ) {
        let entry = &catalog::entries()[idx % catalog::entries().len()];
        let there = constraints::rescale(&entry.constants, lambda).unwrap();
        let back = constraints::rescale(&there, 1.0 / lambda).unwrap();
        for (orig, round) in entry.constants.rows.iter().zip(&back.rows) {
            for (o, r) in [(orig.a, round.a), (orig.b, round.b), (orig.c, round.c)] {
                prop_assert!(
                    (o - r).abs() <= 1e-12 * o.abs().max(1.0),
                    "entry {} lambda {lambda}: slot {o} came back as {r}", entry.name
                );
            }
        }
        match (entry.constants.case, back.case) {
            (CaseK::Zero, CaseK::Zero) => {}
            (orig, round) => {
                let (ko, kr) = (orig.k().unwrap(), round.k().unwrap());
                prop_assert!((ko - kr).abs() <= 1e-13 * ko.abs());
            }
        }
    }

    /// The classification of a normalized margin is a true trichotomy: the
    /// three classes partition the real line at `±tol` and the class always
    /// carries the margin it was built from.
    #[test]
    fn causal_classification_trichotomy(
        margin in -2.0_f64..2.0,
        tol in 1e-12_f64..1e-2,
    ) {
        let class = CausalClass::from_margin(margin, tol);
        prop_assert_eq!(class.margin(), margin);
        match class {
            CausalClass::Timelike { .. } => prop_assert!(margin > tol),
            CausalClass::Spacelike { .. } => prop_assert!(margin < -tol),
            CausalClass::Lightlike { .. } => prop_assert!(margin.abs() <= tol),
        }
    }

    /// Bracketed root finding recovers a known simple root of a strictly
    /// increasing cubic through any bracket that contains it.
    #[test]
    fn brent_finds_bracketed_roots(
        root in -5.0_f64..5.0,
        slope in 0.05_f64..10.0,
        left in 0.1_f64..10.0,
        right in 0.1_f64..10.0,
    ) {
        let f = |x: f64| (x - root) * (slope + (x - root) * (x - root));
        let found = roots::brent(f, root - left, root + right, 1e-14, 200);
        prop_assert!(found.is_some());
        let found = found.unwrap();
        prop_assert!(
            (found - root).abs() < 1e-9 * root.abs().max(1.0),
            "root {root}, found {found}"
        );
    }

    /// Every admissible coefficient row satisfies the family's defining
    /// third-derivative ratio `X''' = K X'` identically in `u` — not only
    /// rows that happen to solve the surface constraints.
    #[test]
    fn family_rows_satisfy_derivative_ratio(
        case in case_strategy(),
        row in row_strategy(),
        u in -3.0_f64..3.0,
    ) {
        let d1 = eval_X(row, case, u, 1);
        let d3 = eval_X(row, case, u, 3);
        let scale = d1.abs().max(d3.abs()).max(1.0);
        prop_assert!(
            (d3 - case.big_k() * d1).abs() <= 1e-12 * scale,
            "case {case}: X'={d1}, X'''={d3}"
        );
    }

    /// Whenever the constraint solver reports success it has actually
    /// produced a solution, and it has not touched any frozen slot.
    #[test]
    fn solver_success_means_solved_and_frozen_respected(
        idx in 0usize..27,
        noise in proptest::array::uniform6(-0.08_f64..0.08),
    ) {
        let entry = &catalog::entries()[idx % catalog::entries().len()];
        let target = entry.constants;
        let mut seed = target;
        let frozen = [true, true, true, false, false, false, false, false, false];
        for (slot, delta) in noise.iter().enumerate() {
            let row = &mut seed.rows[1 + slot / 3];
            match slot % 3 {
                0 => row.a += delta,
                1 => row.b += delta,
                _ => row.c += delta,
            }
        }
        match solve_from_seed(target.case, &seed, frozen) {
            Ok(solved) => {
                prop_assert!(constraints::residual_max_norm(&solved) < 1e-12);
                prop_assert_eq!(solved.rows[0].a, seed.rows[0].a);
                prop_assert_eq!(solved.rows[0].b, seed.rows[0].b);
                prop_assert_eq!(solved.rows[0].c, seed.rows[0].c);
            }
            // A noisy seed is allowed to fall outside the convergence basin
            // or degenerate; it is only forbidden to "succeed" untruthfully.
            Err(ZmcError::NoConvergence(_)) => {}
            Err(other) => prop_assert!(false, "unexpected error {other}"),
        }
    }
}

fn sinh_map() -> &'static ProfileMap {
    static MAP: OnceLock<ProfileMap> = OnceLock::new();
    MAP.get_or_init(|| {
        let profile = Profile::new(
            Axis::X,
            CaseK::Zero,
            CoeffRow::new(1.0, 0.0, 1.0),
            Sign::Plus,
            (f64::NEG_INFINITY, f64::INFINITY),
            (0.0, 0.0),
        );
        ProfileMap::new(profile).expect("X = 1 + u^2 is positive everywhere")
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    /// The numeric coordinate map and its inverse are mutually consistent on
    /// a profile with no closed-form shortcuts in the code path.
    #[test]
    fn profile_map_round_trips(u in -5.0_f64..5.0) {
        let map = sinh_map();
        let x = map.x_from_u(u).unwrap();
        // Exact solution is f = sinh, so x = asinh(u).
        prop_assert!((x - u.asinh()).abs() <= 1e-10 * x.abs().max(1.0));
        let back = map.u_from_coordinate(x).unwrap();
        prop_assert!(
            (back - u).abs() <= 1e-9 * u.abs().max(1.0),
            "u {u} -> x {x} -> u {back}"
        );
    }

    /// Randomly seeded on-surface sampling really lands on the zero set, and
    /// normalized margins always sit in [-1, 1].
    #[test]
    fn on_surface_samples_lie_on_surface(seed in any::<u64>()) {
        let entry = catalog::find("tanh-triple").unwrap();
        let surface = entry.surface().unwrap();
        for p in on_surface_samples(&surface, 32, seed) {
            let pt = surface.eval(p[0], p[1], p[2]).unwrap();
            prop_assert!(pt.on_surface_residual() < 1e-9, "|F| = {:e}", pt.on_surface_residual());
            prop_assert!(pt.margin.abs() <= 1.0 + 1e-15, "margin {}", pt.margin);
        }
    }
}

#[test]
fn rescale_rejects_zero_factor() {
    let entry = catalog::find("exp-same-sign").unwrap();
    assert!(matches!(
        constraints::rescale(&entry.constants, 0.0),
        Err(ZmcError::InvalidScale(_))
    ));
}
