//! Run the full verification battery on a few catalog entries.
//!
//! Each entry is checked against the same battery: coefficient constraints,
//! the pointwise first-order identity, the vanishing mean-curvature
//! numerator on surface samples, analytic-vs-finite-difference agreement,
//! the third-derivative ratio, profile identities, closed-form/numeric
//! crosschecks, lightlike loci, causal-class expectations, and declared
//! periods. Every check reports a measured residual against a fixed
//! tolerance.
//!
//! ```text
//! cargo run --release --example verify_identities
//! ```

use zmc_separable::catalog;
use zmc_separable::report::{check_entry, VerifyConfig};

fn main() {
    // Moderate sample counts keep this example fast; the `zmc verify`
    // command uses the heavier defaults.
    let cfg = VerifyConfig {
        identity_samples: 2_000,
        surface_samples: 300,
        fd_samples: 40,
        crosscheck_samples: 60,
        profile_samples: 32,
        ..Default::default()
    };

    let names = [
        "exp-same-sign",        // exponential family, closed logarithmic forms
        "scherk-timelike-1st",  // doubly periodic, carries lightlike lines
        "k-neg-example-1",      // trigonometric family
        "sin-triple",           // quadratic family, triply periodic
        "v-surface",            // elliptic-integral coordinate functions
    ];

    let mut all_passed = true;
    for name in names {
        let entry = catalog::find(name).expect("catalog entry");
        let report = check_entry(entry, &cfg);
        println!("{} [{}]  expected {}", entry.name, entry.section_ref, entry.expected_class.name());
        for c in &report.checks {
            println!(
                "  {:<28} {:>12.3e}  tol {:>8.0e}  {}",
                c.check,
                c.residual,
                c.tolerance,
                if c.passed { "pass" } else { "FAIL" }
            );
            if !c.passed {
                println!("      {}", c.detail);
            }
        }
        all_passed &= report.passed();
        println!();
    }

    println!("{}", if all_passed { "all entries passed" } else { "FAILURES above" });
    assert!(all_passed);
}
