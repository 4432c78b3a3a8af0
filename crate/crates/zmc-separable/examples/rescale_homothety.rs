//! Homothety: dilating a surface stays inside the solution families.
//!
//! The dilation `x ↦ λx` maps a separable zero-mean-curvature surface to
//! another one: the family constant transforms as `K̃ = K/λ²` (so `k̃ = k/|λ|`)
//! while the constraint residuals are preserved exactly. This example
//! rescales coefficient tables, verifies the invariants, and checks that
//! scaled copies of on-surface points land on the rescaled surface.
//!
//! ```text
//! cargo run --release --example rescale_homothety
//! ```

use zmc_separable::catalog;
use zmc_separable::constraints::{rescale, residual_max_norm};
use zmc_separable::report::{homothety_check, on_surface_samples};

fn main() -> zmc_separable::Result<()> {
    let entry = catalog::find("scherk-timelike-1st").expect("catalog entry");
    let constants = entry.constants;
    println!("{}: case {}, residual {:.3e}", entry.name, constants.case, residual_max_norm(&constants));

    // K̃ = K/λ² at the coefficient level, for positive and negative λ.
    println!("\ncoefficient-level rescaling:");
    for lambda in [0.5, 2.0, -3.0, 7.5] {
        let scaled = rescale(&constants, lambda)?;
        let k_expected = constants.case.big_k() / (lambda * lambda);
        let k_got = scaled.case.big_k();
        let residual = residual_max_norm(&scaled);
        println!(
            "  λ = {lambda:>4}: K {} -> {:.6} (expected {:.6}), residual {:.3e}",
            constants.case.big_k(),
            k_got,
            k_expected,
            residual
        );
        assert!((k_got - k_expected).abs() <= 1e-15 * k_expected.abs());
        assert!(residual < 1e-12, "rescaling must preserve the constraints");
    }

    // Scale factor 0 (or a non-finite one) is rejected.
    let err = rescale(&constants, 0.0).unwrap_err();
    println!("  λ = 0 -> {err}");

    // Surface-level homothety: if p is on the surface, λp is on the rescaled
    // surface. homothety_check measures max |F̃(λp)| over sample points.
    println!("\nsurface-level homothety:");
    let surface = entry.surface()?;
    let points = on_surface_samples(&surface, 200, 9);
    println!("  {} on-surface sample points", points.len());
    for lambda in [0.25, 0.5, 2.0, 4.0, -1.5] {
        let worst = homothety_check(&surface, lambda, &points)?;
        println!("  λ = {lambda:>5}: max |F̃(λp)| = {worst:.3e}");
        assert!(worst < 1e-9);
    }

    // The quadratic family moves its rows instead of its case tag.
    let entry = catalog::find("sin-triple").expect("catalog entry");
    let constants = entry.constants;
    let scaled = rescale(&constants, 2.0)?;
    println!(
        "\n{}: case {} rows rescale as (a, b/λ, c/λ²):",
        entry.name, constants.case
    );
    for (before, after) in constants.rows.iter().zip(&scaled.rows) {
        println!(
            "  ({:+.3}, {:+.3}, {:+.3}) -> ({:+.3}, {:+.3}, {:+.3})",
            before.a, before.b, before.c, after.a, after.b, after.c
        );
    }
    assert!(residual_max_norm(&scaled) < 1e-12);
    Ok(())
}
