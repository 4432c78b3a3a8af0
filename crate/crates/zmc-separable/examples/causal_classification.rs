//! Causal classification of surface points.
//!
//! In the metric `dx² + dy² − dz²` a tangent plane is spacelike, timelike, or
//! lightlike according to the sign of `⟨∇F, ∇F⟩ = f′² + g′² − h′²`. Each
//! evaluated point reports the scale-free margin
//! `(f′² + g′² − h′²)/(f′² + g′² + h′²)`, classified against a tolerance.
//! This example classifies sample points on a mixed-character surface and a
//! single-character one, takes class censuses, and checks a surface that
//! contains genuine lightlike lines.
//!
//! ```text
//! cargo run --release --example causal_classification
//! ```

use zmc_separable::catalog;
use zmc_separable::report::{on_surface_samples, ClassCensus};
use zmc_separable::surface::lightlike_locus_check;
use zmc_separable::types::{CausalClass, ExpectedClass, LIGHTLIKE_TOL};

fn main() -> zmc_separable::Result<()> {
    // --- A mixed surface: both causal characters on one zero set. ---
    let entry = catalog::find("tanh-triple").expect("catalog entry");
    let surface = entry.surface()?;
    println!("{}: {}", entry.name, entry.implicit_string);

    let points = on_surface_samples(&surface, 600, 42);
    println!("  sampled {} on-surface points", points.len());

    // Classify a few individual points to show the margin.
    for p in points.iter().step_by(points.len() / 6) {
        let pt = surface.eval(p[0], p[1], p[2])?;
        println!(
            "  ({:+.3}, {:+.3}, {:+.3})  margin {:+.4}  {}",
            p[0],
            p[1],
            p[2],
            pt.margin,
            pt.causal_class(LIGHTLIKE_TOL).name()
        );
    }

    let census = ClassCensus::of(&surface, &points, LIGHTLIKE_TOL);
    println!(
        "  census: {} spacelike / {} timelike / {} lightlike (expected {})",
        census.spacelike,
        census.timelike,
        census.lightlike,
        entry.expected_class.name()
    );
    assert!(census.covers(ExpectedClass::Mixed), "mixed surface must show both characters");
    assert_eq!(census.violations(entry.expected_class), 0);

    // --- A single-character surface: every sample is timelike. ---
    let entry = catalog::find("exp-same-sign").expect("catalog entry");
    let surface = entry.surface()?;
    let points = on_surface_samples(&surface, 600, 42);
    let census = ClassCensus::of(&surface, &points, LIGHTLIKE_TOL);
    println!("\n{}: {}", entry.name, entry.implicit_string);
    println!(
        "  census: {} spacelike / {} timelike / {} lightlike (expected {})",
        census.spacelike,
        census.timelike,
        census.lightlike,
        entry.expected_class.name()
    );
    assert_eq!(census.violations(entry.expected_class), 0);
    assert_eq!(census.spacelike, 0);

    // --- Declared lightlike lines lie on the surface with margin ~ 0. ---
    let entry = catalog::find("scherk-timelike-1st").expect("catalog entry");
    let surface = entry.surface()?;
    println!("\n{}: {} declared lightlike line(s)", entry.name, entry.lightlike_loci.len());
    for line in &entry.lightlike_loci {
        let rep = lightlike_locus_check(&surface, line, 64)?;
        println!(
            "  through ({:+.4}, {:+.4}, {:+.4}) dir ({:+.3}, {:+.3}, {:+.3}): max|F| {:.2e}, max|margin| {:.2e}",
            line.point[0], line.point[1], line.point[2],
            line.direction[0], line.direction[1], line.direction[2],
            rep.max_f_value, rep.max_margin
        );
        assert!(rep.passes(1e-7));
    }

    // The classification trichotomy itself, at the margin level.
    for (margin, want) in [(0.5, "Timelike"), (-0.5, "Spacelike"), (1e-12, "Lightlike")] {
        let class = CausalClass::from_margin(margin, LIGHTLIKE_TOL);
        println!("margin {margin:+.0e} -> {}", class.name());
        assert_eq!(class.name(), want);
    }
    Ok(())
}
