//! The quartic-kernel special functions behind several catalog families.
//!
//! Some coordinate functions are inverses of integrals `ξ(t) = ∫ dτ/√Q(τ)`
//! with an even quartic `Q`. [`EllipticKernel`] evaluates such an integral
//! (`forward`) and inverts it (`inverse`) for the four kernels the catalog
//! uses, handling the endpoint square-root singularities and the unbounded
//! direction internally. This example exercises forward/inverse round trips,
//! the finite output ranges, and a reflection identity tying the `τ⁴ − 1` and
//! `1 − τ⁴` kernels together through the constant [`PSI_1`].
//!
//! ```text
//! cargo run --release --example elliptic_functions
//! ```

use zmc_separable::profiles::elliptic::{EllipticKernel, PSI_1};

fn roundtrip(kernel: &EllipticKernel, label: &str, ts: &[f64]) -> zmc_separable::Result<f64> {
    let mut worst = 0.0_f64;
    for &t in ts {
        let xi = kernel.forward(t)?;
        let back = kernel.inverse(xi)?;
        worst = worst.max((back - t).abs() / t.abs().max(1.0));
    }
    println!("  {label:<28} max relative round-trip error {worst:.3e} over {} points", ts.len());
    Ok(worst)
}

fn main() -> zmc_separable::Result<()> {
    let v = EllipticKernel::v(); //  Q = τ⁴ − 1,      base 1: V increasing, V(0) = 1
    let m = EllipticKernel::m(); //  Q = 1 − τ⁴,      base 0: M increasing, bounded
    let f = EllipticKernel::f_hat(); // Q = τ⁴ − τ² + 1, base 0: F̂ odd
    let g = EllipticKernel::g_hat(); // Q = τ⁴ + τ² + 1, base 0: Ĝ odd

    println!("positivity intervals and output ranges:");
    for (kernel, label) in [(&v, "V"), (&m, "M"), (&f, "F-hat"), (&g, "G-hat")] {
        let (plo, phi) = kernel.positivity_interval();
        let (rlo, rhi) = kernel.output_range();
        println!("  {label:<6} Q > 0 on ({plo:>6.2}, {phi:>6.2})   ξ range ({rlo:+.6}, {rhi:+.6})");
    }

    // forward ∘ inverse and inverse ∘ forward agree to near round-off.
    println!("\nround trips (inverse(forward(t)) vs t):");
    let grid = |lo: f64, hi: f64, n: usize| -> Vec<f64> {
        (0..n).map(|i| lo + (hi - lo) * i as f64 / (n - 1) as f64).collect()
    };
    let mut worst = 0.0_f64;
    worst = worst.max(roundtrip(&v, "V kernel, t in [1.001, 50]", &grid(1.001, 50.0, 200))?);
    worst = worst.max(roundtrip(&m, "M kernel, t in [-0.999, 0.999]", &grid(-0.999, 0.999, 200))?);
    worst = worst.max(roundtrip(&f, "F-hat kernel, t in [-20, 20]", &grid(-20.0, 20.0, 200))?);
    worst = worst.max(roundtrip(&g, "G-hat kernel, t in [-20, 20]", &grid(-20.0, 20.0, 200))?);
    assert!(worst < 1e-9, "worst round-trip {worst:e}");

    // The reciprocal substitution σ = 1/τ maps the upper tail of the V
    // integral onto the M integral, so V's and M's improper integrals share
    // the value Ψ₁ and the two kernels satisfy
    //     ∫₁^t dτ/√(τ⁴−1) + ∫₀^{1/t} dσ/√(1−σ⁴) = Ψ₁      (t ≥ 1).
    println!("\nreflection identity ξ_V(t) + ξ_M(1/t) = Ψ₁ = {PSI_1:.16}:");
    let mut worst = 0.0_f64;
    for &t in &[1.0, 1.5, 2.0, 5.0, 25.0] {
        let lhs = v.forward(t)? + m.forward(1.0 / t)?;
        worst = worst.max((lhs - PSI_1).abs());
        println!("  t = {t:>5}: |ξ_V + ξ_M∘recip - Ψ₁| = {:.3e}", (lhs - PSI_1).abs());
    }
    assert!(worst < 1e-11);

    // M's forward integral to its positivity endpoint is exactly Ψ₁ as well.
    let (_, m_hi) = m.output_range();
    println!("\nM output range upper end vs Ψ₁: {:.3e}", (m_hi - PSI_1).abs());
    assert!((m_hi - PSI_1).abs() < 1e-11);

    // Queries outside the invertible range are typed errors.
    let (_, rhi) = f.output_range();
    let err = f.inverse(rhi + 0.1).unwrap_err();
    println!("F-hat inverse past its range -> {err}");
    Ok(())
}
