//! Tour of the built-in surface catalog.
//!
//! Lists every entry with its family, expected causal class, and implicit
//! equation; then demonstrates the three lookup routes (name, alias,
//! section-style key) and parameterized instantiation.
//!
//! ```text
//! cargo run --release --example catalog_tour
//! ```

use zmc_separable::catalog;
use zmc_separable::types::ExpectedClass;

fn main() -> zmc_separable::Result<()> {
    let entries = catalog::entries();
    println!("catalog: {} entries\n", entries.len());

    println!(
        "{:<24} {:<7} {:<10} {}",
        "name", "key", "class", "implicit equation"
    );
    println!("{}", "-".repeat(100));
    for e in entries {
        println!(
            "{:<24} {:<7} {:<10} {}",
            e.name,
            e.section_ref,
            e.expected_class.name(),
            e.implicit_string
        );
    }

    // Census of expected classes across the catalog.
    let count = |c: ExpectedClass| entries.iter().filter(|e| e.expected_class == c).count();
    println!(
        "\nexpected classes: {} timelike, {} spacelike, {} mixed",
        count(ExpectedClass::Timelike),
        count(ExpectedClass::Spacelike),
        count(ExpectedClass::Mixed),
    );

    // Lookup routes: exact name, alias, or section-style key (which resolves
    // to the first entry of that section).
    let by_name = catalog::find("scherk-timelike-1st").expect("name lookup");
    let by_alias = catalog::find(by_name.aliases[0]).expect("alias lookup");
    let by_key = catalog::find(by_name.section_ref).expect("section-style lookup");
    println!(
        "\nlookup routes: alias `{}` -> `{}`; key `{}` -> `{}` (first of its section)",
        by_name.aliases[0], by_alias.name, by_name.section_ref, by_key.name
    );
    assert!(std::ptr::eq(by_name, by_alias));
    assert_eq!(by_key.section_ref, by_name.section_ref);

    // Entries with free parameters can be rebuilt at non-default values; the
    // coordinate functions are then reconstructed numerically.
    let parameterized: Vec<_> = entries.iter().filter(|e| !e.free_params.is_empty()).collect();
    println!("\n{} entries take free parameters:", parameterized.len());
    for e in &parameterized {
        let params: Vec<String> = e
            .free_params
            .iter()
            .map(|p| format!("{}={} in ({}, {})", p.name, p.default, p.range.0, p.range.1))
            .collect();
        println!("  {:<24} {}", e.name, params.join(", "));
    }

    let name = parameterized[0].name;
    let p0 = &parameterized[0].free_params[0];
    let bump = if p0.range.1.is_finite() { 0.25 * (p0.range.1 - p0.default).min(1.0) } else { 0.25 };
    let (param, value) = (p0.name, p0.default + bump);
    let surface = catalog::instantiate(name, &[(param, value)])?;
    let bb = surface.bounding_box();
    let (x, y) = (
        0.5 * (bb.min[0] + bb.max[0]),
        0.5 * (bb.min[1] + bb.max[1]),
    );
    let z = surface.solve_third_coordinate(x, y, None)?;
    let p = surface.eval(x, y, z)?;
    println!(
        "\ninstantiate(\"{name}\", {param}={value:.4}): point ({x:.4}, {y:.4}, {z:.4}), |F| = {:.3e}",
        p.f_value.abs()
    );
    assert!(p.f_value.abs() < 1e-9);

    // Unknown names are a clean error, not a panic.
    let err = catalog::instantiate("no-such-surface", &[]).unwrap_err();
    println!("unknown entry -> {err}");
    Ok(())
}
