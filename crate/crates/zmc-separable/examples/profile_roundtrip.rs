//! Numeric reconstruction of coordinate functions from their
//! squared-derivative profiles.
//!
//! A coordinate function `f` is described by `f′² = X(f)` plus a branch sign,
//! a positivity window for `X`, and one anchor point. [`ProfileMap`] turns
//! that description into an evaluable map by integrating `du/√X(u)` — no
//! closed formula needed. This example reconstructs two profiles whose closed
//! forms *are* known and checks the reconstruction against them:
//!
//! * quadratic family, `X(u) = 1 + u²` anchored at `f(0) = 0`, whose exact
//!   solution is `f(x) = sinh(x)`;
//! * exponential family, `X(u) = e²ᵘ + e⁻²ᵘ − 2 = 4·sinh²(u)` on `u < 0`
//!   anchored at `f(atanh(½)) = ln(½)`, whose exact solution is
//!   `f(x) = ln tanh(x)` — a profile with one finite coordinate limit and one
//!   infinite one.
//!
//! ```text
//! cargo run --release --example profile_roundtrip
//! ```

use zmc_separable::profiles::{derivative_identity_check, kk_ratio_check, ProfileMap};
use zmc_separable::types::{Axis, CaseK, CoeffRow, Profile, Sign};

fn main() -> zmc_separable::Result<()> {
    // --- Quadratic family: X(u) = 1 + u², exact solution sinh. ---
    let sinh_profile = Profile::new(
        Axis::X,
        CaseK::Zero,
        CoeffRow::new(1.0, 0.0, 1.0),
        Sign::Plus,
        (f64::NEG_INFINITY, f64::INFINITY),
        (0.0, 0.0),
    );
    let map = ProfileMap::new(sinh_profile)?;
    println!("X(u) = 1 + u^2, f(0) = 0   (exact: f = sinh)");
    println!("  coordinate range: {:?}", map.coordinate_range());

    let mut worst_value = 0.0_f64;
    let mut worst_roundtrip = 0.0_f64;
    for i in 0..=40 {
        let x = -2.0 + 4.0 * i as f64 / 40.0;
        let u = map.u_from_coordinate(x)?;
        worst_value = worst_value.max((u - x.sinh()).abs());
        worst_roundtrip = worst_roundtrip.max((map.x_from_u(u)? - x).abs());
    }
    println!("  max |f(x) - sinh x|  over [-2, 2]: {worst_value:.3e}");
    println!("  max round-trip |x_from_u(f(x)) - x|: {worst_roundtrip:.3e}");
    assert!(worst_value < 1e-10 && worst_roundtrip < 1e-10);

    // The reconstructed map satisfies its own defining identities
    // (f′² = X(f), 2f″ = X′(f)), checked by value-only finite differences.
    let xs: Vec<f64> = (0..=60).map(|i| -1.5 + 3.0 * i as f64 / 60.0).collect();
    let dev = derivative_identity_check(&map, &xs)?;
    println!("  profile-identity defect: {dev:.3e}");
    assert!(dev < 1e-6);

    // And its X satisfies the family's third-derivative ratio X‴/X′ = K.
    let us: Vec<f64> = (0..=60).map(|i| -3.0 + 6.0 * i as f64 / 60.0).collect();
    let kk = kk_ratio_check(sinh_profile.coeffs, sinh_profile.case, &us)?;
    println!("  |X'''/X' - K|: {kk:.3e}  (K = {})", sinh_profile.case.big_k());
    assert!(kk < 1e-12);

    // --- Exponential family: X(u) = 4 sinh²u on u < 0, exact ln tanh. ---
    let x0 = 0.5_f64.atanh();
    let tanh_profile = Profile::new(
        Axis::X,
        CaseK::positive(), // k = 2, K = 4
        CoeffRow::new(-2.0, 1.0, 1.0),
        Sign::Plus,
        (f64::NEG_INFINITY, 0.0),
        (x0, 0.5_f64.ln()),
    );
    let map = ProfileMap::new(tanh_profile)?;
    let (lo, hi) = map.coordinate_range();
    println!("\nX(u) = e^2u + e^-2u - 2 on u < 0, f(atanh 1/2) = ln 1/2   (exact: f = ln tanh)");
    println!("  coordinate range: ({lo:.6}, {hi})");
    // u → -∞ is a convergent tail (finite coordinate limit 0); u → 0 is a
    // double root of X, so the coordinate diverges there.
    assert!(lo.abs() < 1e-9 && hi.is_infinite());

    // The range includes coordinates where tanh(x) is within 1e-7 of 1;
    // inversion there runs through the logarithmic chart at the double root
    // of X rather than brute-force adaptive panels.
    let mut worst_value = 0.0_f64;
    let mut worst_roundtrip = 0.0_f64;
    for i in 0..=40 {
        let x = 0.05 + (8.0 - 0.05) * i as f64 / 40.0;
        let u = map.u_from_coordinate(x)?;
        worst_value = worst_value.max((u - x.tanh().ln()).abs());
        worst_roundtrip = worst_roundtrip.max((map.x_from_u(u)? - x).abs());
    }
    println!("  max |f(x) - ln tanh x| over [0.05, 8]: {worst_value:.3e}");
    println!("  max round-trip |x_from_u(f(x)) - x|: {worst_roundtrip:.3e}");
    assert!(worst_value < 1e-9 && worst_roundtrip < 1e-9);

    // Out-of-range queries are typed errors, not NaNs.
    let err = map.u_from_coordinate(-1.0).unwrap_err();
    println!("  f(-1) -> {err}");
    Ok(())
}
