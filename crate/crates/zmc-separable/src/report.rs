//! The per-entry verification pipeline.
//!
//! Every catalog surface must satisfy the same battery of invariants:
//! coefficient constraints, the pointwise first-order identity, vanishing
//! mean-curvature numerator on the surface, derivative consistency, the
//! third-derivative ratio, closed-form/numeric agreement, declared lightlike
//! loci, causal-class expectations, and declared periods. This module runs
//! that battery uniformly and reports one measured residual per check, so a
//! regression anywhere in the stack shows up as a number, not a panic.
//!
//! ```
//! use zmc_separable::report::{check_entry, VerifyConfig};
//! use zmc_separable::catalog;
//!
//! let cfg = VerifyConfig { identity_samples: 200, surface_samples: 50, ..Default::default() };
//! let report = check_entry(catalog::find("exp-opposite-sign").unwrap(), &cfg);
//! assert!(report.passed(), "{report:#?}");
//! ```

use std::io::Write;
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::catalog::CatalogEntry;
use crate::constraints;
use crate::profiles::{derivative_identity_check, kk_ratio_check, AxisMap};
use crate::roots;
use crate::surface::{
    lightlike_locus_check, zmc_identity_residual, zmc_identity_scale, Surface,
};
use crate::types::{
    Axis, CausalClass, ConstantsTriple, ExpectedClass, Result, ZmcError, LIGHTLIKE_TOL,
    RESIDUAL_TOL,
};

/// Tolerance for the coefficient constraint systems (exact algebra).
pub const TOL_CONSTRAINTS: f64 = RESIDUAL_TOL;
/// Tolerance for the relative first-order identity residual.
pub const TOL_IDENTITY: f64 = 1e-9;
/// Tolerance for the relative mean-curvature numerator on-surface.
pub const TOL_CURVATURE: f64 = 1e-7;
/// Tolerance for analytic-vs-finite-difference derivative agreement.
pub const TOL_FD: f64 = 1e-5;
/// Tolerance for the third-derivative ratio `X‴/X′ − K`.
pub const TOL_KK: f64 = 1e-9;
/// Tolerance for the value-only profile identities `f′² = X(f)`, `2f″ = X′(f)`.
pub const TOL_PROFILE_IDENTITY: f64 = 1e-6;
/// Tolerance for declared lightlike loci (`|F|` and `|margin|` on the line).
pub const TOL_LOCUS: f64 = 1e-7;
/// Tolerance for closed-form vs numeric coordinate functions.
pub const TOL_CROSSCHECK: f64 = 1e-8;
/// Tolerance for declared translation periods.
pub const TOL_PERIODICITY: f64 = 1e-12;

/// Sample counts and tolerances for one verification run.
#[derive(Debug, Clone, Copy)]
pub struct VerifyConfig {
    /// Margin tolerance used for causal classification.
    pub lightlike_tol: f64,
    /// Random `(u, v)` pairs for the first-order identity.
    pub identity_samples: usize,
    /// On-surface points for curvature and causal checks.
    pub surface_samples: usize,
    /// Subset of the on-surface points re-checked by finite differences.
    pub fd_samples: usize,
    /// Per-axis samples for the closed-form/numeric crosscheck.
    pub crosscheck_samples: usize,
    /// Samples per declared lightlike line.
    pub locus_samples: usize,
    /// Quasi-random base points for the periodicity check.
    pub periodicity_samples: usize,
    /// Per-axis samples for profile-identity and third-derivative checks.
    pub profile_samples: usize,
    pub seed: u64,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig {
            lightlike_tol: LIGHTLIKE_TOL,
            identity_samples: 10_000,
            surface_samples: 1_000,
            fd_samples: 100,
            crosscheck_samples: 200,
            locus_samples: 32,
            periodicity_samples: 64,
            profile_samples: 48,
            seed: 0x5eed_cafe,
        }
    }
}

/// One named check with its measured residual.
#[derive(Debug, Clone, Serialize)]
pub struct CheckOutcome {
    pub check: &'static str,
    pub residual: f64,
    pub tolerance: f64,
    pub passed: bool,
    pub detail: String,
}

/// All check outcomes for one catalog entry.
#[derive(Debug, Clone, Serialize)]
pub struct EntryReport {
    pub entry: String,
    pub section_ref: String,
    pub checks: Vec<CheckOutcome>,
}

impl EntryReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    /// The outcome of a named check, if it ran.
    pub fn check(&self, name: &str) -> Option<&CheckOutcome> {
        self.checks.iter().find(|c| c.check == name)
    }
}

/// Cached scan of one axis map at fixed nodes, so that repeated root queries
/// along the same axis skip the rescan that [`Surface::solve_axis`] performs
/// per call. The node values depend only on the axis, never on the query.
pub struct AxisRootCache {
    axis: Axis,
    nodes: Vec<(f64, f64)>,
    extent: f64,
}

impl AxisRootCache {
    /// Scan `axis` over the bounding box ∩ map domain at `nodes + 1` points.
    pub fn new(surface: &Surface, axis: Axis, nodes: usize) -> Self {
        let i = axis.index();
        let bb = surface.bounding_box();
        let map = surface.map(axis);
        let (dlo, dhi) = map.x_domain();
        let mut lo = bb.min[i].max(dlo);
        let mut hi = bb.max[i].min(dhi);
        let ext = (hi - lo).max(0.0);
        if lo == dlo && dlo.is_finite() {
            lo += 1e-9 * ext.max(1.0);
        }
        if hi == dhi && dhi.is_finite() {
            hi -= 1e-9 * ext.max(1.0);
        }
        let n = nodes.max(16);
        let mut v = Vec::with_capacity(n + 1);
        for j in 0..=n {
            let t = lo + (hi - lo) * j as f64 / n as f64;
            v.push((t, map.value(t).unwrap_or(f64::NAN)));
        }
        AxisRootCache { axis, nodes: v, extent: ext }
    }

    /// All coordinates on the cached axis where the map attains `target`,
    /// ascending. Bisection cells come from the cache; only the refinement
    /// evaluates the map.
    pub fn roots(&self, surface: &Surface, target: f64) -> Vec<f64> {
        let map = surface.map(self.axis);
        let phi = |t: f64| map.value(t).map_or(f64::NAN, |v| v - target);
        let mut found = Vec::new();
        for w in self.nodes.windows(2) {
            let (t0, v0) = w[0];
            let (t1, v1) = w[1];
            let (p0, p1) = (v0 - target, v1 - target);
            if !p0.is_finite() || !p1.is_finite() {
                continue;
            }
            if p0 == 0.0 {
                found.push(t0);
            } else if p0 * p1 < 0.0 {
                if let Some(r) = roots::brent(phi, t0, t1, 1e-13, 200) {
                    found.push(r);
                }
            }
        }
        if let Some(&(t, v)) = self.nodes.last() {
            if v - target == 0.0 {
                found.push(t);
            }
        }
        found.dedup_by(|a, b| (*a - *b).abs() < 1e-9 * self.extent.max(1.0));
        found
    }
}

/// Wall-clock cost of a handful of map evaluations on one axis; used only to
/// pick the cheapest solve axis, so jitter is harmless (a bad pick is slower,
/// never wrong).
fn axis_eval_cost(surface: &Surface, axis: Axis) -> f64 {
    let i = axis.index();
    let bb = surface.bounding_box();
    let map = surface.map(axis);
    let start = Instant::now();
    let mut acc = 0.0;
    for j in 0..5 {
        let t = bb.min[i] + (bb.max[i] - bb.min[i]) * (j as f64 + 0.5) / 5.0;
        acc += map.value(t).unwrap_or(0.0);
    }
    std::hint::black_box(acc);
    start.elapsed().as_secs_f64() + 1e-9
}

/// Up to `count` random on-surface points inside the bounding box.
///
/// Two coordinates are drawn uniformly; the third solves `F = 0` along the
/// axis whose map is cheapest to evaluate (elliptic-profile axes cost orders
/// of magnitude more per call than closed trigonometric ones, and the solve
/// axis is scanned far more often than the drawn ones).
pub fn on_surface_samples(surface: &Surface, count: usize, seed: u64) -> Vec<[f64; 3]> {
    let cost: Vec<f64> = (0..3).map(|i| axis_eval_cost(surface, Axis::from_index(i))).collect();
    const SCAN: f64 = 257.0;
    const REFINE: f64 = 14.0;
    let score = |a: usize| -> f64 {
        let sides: f64 = (0..3).filter(|&b| b != a).map(|b| cost[b]).sum();
        SCAN * cost[a] + count as f64 * (REFINE * cost[a] + sides)
    };
    let solve = (0..3).min_by(|&a, &b| score(a).partial_cmp(&score(b)).unwrap()).unwrap();
    let axis = Axis::from_index(solve);
    let [s1, s2] = match solve {
        0 => [1, 2],
        1 => [0, 2],
        _ => [0, 1],
    };

    let cache = AxisRootCache::new(surface, axis, 256);
    let bb = surface.bounding_box();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut pts = Vec::with_capacity(count);
    let mut attempts = 0usize;
    while pts.len() < count && attempts < 10 * count.max(8) {
        attempts += 1;
        let c1 = rng.gen_range(bb.min[s1]..=bb.max[s1]);
        let c2 = rng.gen_range(bb.min[s2]..=bb.max[s2]);
        let (Ok(v1), Ok(v2)) = (
            surface.map(Axis::from_index(s1)).value(c1),
            surface.map(Axis::from_index(s2)).value(c2),
        ) else {
            continue;
        };
        if !(v1.is_finite() && v2.is_finite()) {
            continue;
        }
        for r in cache.roots(surface, -(v1 + v2)) {
            let mut p = [0.0; 3];
            p[s1] = c1;
            p[s2] = c2;
            p[solve] = r;
            pts.push(p);
            if pts.len() == count {
                break;
            }
        }
    }
    pts
}

/// Largest relative first-order identity residual over random `(u, v)`.
pub fn identity_check(constants: &ConstantsTriple, samples: usize, seed: u64) -> f64 {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut worst = 0.0_f64;
    for _ in 0..samples {
        let u = rng.gen_range(-3.0..3.0);
        let v = rng.gen_range(-3.0..3.0);
        let r = zmc_identity_residual(constants, u, v).abs() / zmc_identity_scale(constants, u, v);
        worst = worst.max(r);
    }
    worst
}

/// On-surface curvature statistics: the worst relative numerator and the
/// worst disagreement between its two formulations.
#[derive(Debug, Clone, Copy, Serialize)]
pub struct CurvatureStats {
    pub max_relative: f64,
    pub max_gap: f64,
    pub used: usize,
    pub skipped: usize,
}

/// Evaluate the mean-curvature numerator at each point; points that fail the
/// on-surface precondition or sit on a degenerate locus are skipped.
pub fn curvature_check(surface: &Surface, points: &[[f64; 3]]) -> CurvatureStats {
    let mut stats = CurvatureStats { max_relative: 0.0, max_gap: 0.0, used: 0, skipped: 0 };
    for p in points {
        match surface.mean_curvature_numerator(p[0], p[1], p[2]) {
            Ok(c) => {
                stats.used += 1;
                stats.max_relative = stats.max_relative.max(c.relative_residual());
                stats.max_gap = stats.max_gap.max(c.formulation_gap());
            }
            Err(_) => stats.skipped += 1,
        }
    }
    stats
}

/// Worst analytic-vs-finite-difference disagreement over the points.
pub fn fd_agreement_check(surface: &Surface, points: &[[f64; 3]]) -> f64 {
    let mut worst = 0.0_f64;
    for p in points {
        if let Ok(d) = surface.derivative_consistency(p[0], p[1], p[2]) {
            worst = worst.max(d);
        }
    }
    worst
}

/// Worst third-derivative ratio deviation `|X‴/X′ − K|` over interior samples
/// of each axis's positivity window.
pub fn kk_check(entry: &CatalogEntry, samples_per_axis: usize) -> Result<f64> {
    let mut worst = 0.0_f64;
    for prof in &entry.profiles {
        let (wlo, whi) = prof.u_domain;
        let lo = wlo.max(-5.0);
        let hi = whi.min(5.0);
        if !(hi > lo) {
            continue;
        }
        let pad = 1e-3 * (hi - lo);
        let n = samples_per_axis.max(2);
        let us: Vec<f64> = (0..n)
            .map(|j| lo + pad + (hi - lo - 2.0 * pad) * j as f64 / (n - 1) as f64)
            .collect();
        worst = worst.max(kk_ratio_check(prof.coeffs, prof.case, &us)?);
    }
    Ok(worst)
}

/// Worst value-only profile-identity defect over the central band of each
/// axis. The band (15% inset per side) avoids domain-end singularities where
/// finite-difference truncation in the *check* blows up without indicating
/// any defect in the checked formulas.
pub fn profile_identity_check(entry: &CatalogEntry, samples_per_axis: usize) -> Result<f64> {
    let mut worst = 0.0_f64;
    for i in 0..3 {
        let map = entry.closed_map(i);
        let (dlo, dhi) = (map.x_domain().0, map.x_domain().1);
        let lo = entry.bounding_box.min[i].max(dlo);
        let hi = entry.bounding_box.max[i].min(dhi);
        if !(hi > lo) {
            continue;
        }
        let pad = 0.15 * (hi - lo);
        let (lo, hi) = (lo + pad, hi - pad);
        let n = samples_per_axis.max(2);
        let xs: Vec<f64> =
            (0..n).map(|j| lo + (hi - lo) * j as f64 / (n - 1) as f64).collect();
        worst = worst.max(derivative_identity_check(&map, &xs)?);
    }
    Ok(worst)
}

/// Causal-class counts over a point set.
#[derive(Debug, Clone, Copy, Default, Serialize)]
pub struct ClassCensus {
    pub spacelike: usize,
    pub timelike: usize,
    pub lightlike: usize,
}

impl ClassCensus {
    pub fn of(surface: &Surface, points: &[[f64; 3]], tol: f64) -> ClassCensus {
        let mut census = ClassCensus::default();
        for p in points {
            let Ok(pt) = surface.eval(p[0], p[1], p[2]) else { continue };
            match pt.causal_class(tol) {
                CausalClass::Spacelike { .. } => census.spacelike += 1,
                CausalClass::Timelike { .. } => census.timelike += 1,
                CausalClass::Lightlike { .. } => census.lightlike += 1,
            }
        }
        census
    }

    /// Samples on the strictly wrong side of the expectation. Lightlike
    /// samples never count: near a declared locus the margin honestly passes
    /// through zero.
    pub fn violations(&self, expected: ExpectedClass) -> usize {
        match expected {
            ExpectedClass::Spacelike => self.timelike,
            ExpectedClass::Timelike => self.spacelike,
            ExpectedClass::Mixed => 0,
        }
    }

    /// For a `Mixed` expectation, whether both open classes actually showed.
    pub fn covers(&self, expected: ExpectedClass) -> bool {
        match expected {
            ExpectedClass::Mixed => self.spacelike > 0 && self.timelike > 0,
            _ => true,
        }
    }

    pub fn total(&self) -> usize {
        self.spacelike + self.timelike + self.lightlike
    }
}

/// Largest `|F̃(λp)| / max(1, |λ|)` over on-surface points `p` of the
/// original surface, where `F̃` is the surface rescaled by `lambda`. Zero in
/// exact arithmetic: homothety maps the zero set onto the rescaled zero set.
pub fn homothety_check(surface: &Surface, lambda: f64, points: &[[f64; 3]]) -> Result<f64> {
    let scaled = surface.rescaled(lambda)?;
    let mut worst = 0.0_f64;
    for p in points {
        let f = scaled.f_value(lambda * p[0], lambda * p[1], lambda * p[2])?;
        worst = worst.max(f.abs() / lambda.abs().max(1.0));
    }
    Ok(worst)
}

fn entry_seed(cfg: &VerifyConfig, name: &str) -> u64 {
    cfg.seed ^ name.bytes().fold(0u64, |h, b| h.wrapping_mul(31).wrapping_add(b as u64))
}

/// Run the full check battery on one entry.
pub fn check_entry(entry: &CatalogEntry, cfg: &VerifyConfig) -> EntryReport {
    let mut checks: Vec<CheckOutcome> = Vec::new();
    let mut push = |check: &'static str, residual: f64, tol: f64, detail: String| {
        checks.push(CheckOutcome {
            check,
            residual,
            tolerance: tol,
            passed: residual.is_finite() && residual < tol,
            detail,
        });
    };

    push(
        "constraint-residuals",
        constraints::residual_max_norm(&entry.constants),
        TOL_CONSTRAINTS,
        format!("6-equation system, case {}", entry.constants.case.tag()),
    );

    push(
        "first-order-identity",
        identity_check(&entry.constants, cfg.identity_samples, entry_seed(cfg, entry.name)),
        TOL_IDENTITY,
        format!("{} random (u, v) in [-3, 3]^2, relative", cfg.identity_samples),
    );

    match kk_check(entry, cfg.profile_samples.max(16)) {
        Ok(r) => push(
            "third-derivative-ratio",
            r,
            TOL_KK,
            "X'''/X' - K over positivity windows".into(),
        ),
        Err(e) => push("third-derivative-ratio", f64::INFINITY, TOL_KK, e.to_string()),
    }

    match profile_identity_check(entry, cfg.profile_samples) {
        Ok(r) => push(
            "profile-derivative-identity",
            r,
            TOL_PROFILE_IDENTITY,
            "f'^2 = X(f), 2f'' = X'(f) by value-only finite differences".into(),
        ),
        Err(e) => {
            push("profile-derivative-identity", f64::INFINITY, TOL_PROFILE_IDENTITY, e.to_string())
        }
    }

    match entry.closed_form_crosscheck(cfg.crosscheck_samples) {
        Ok(r) => push(
            "closed-form-crosscheck",
            r,
            TOL_CROSSCHECK,
            format!("{} samples/axis vs numeric reconstruction", cfg.crosscheck_samples),
        ),
        Err(e) => push("closed-form-crosscheck", f64::INFINITY, TOL_CROSSCHECK, e.to_string()),
    }

    if let Some(r) = entry.periodicity_residual(cfg.periodicity_samples) {
        push(
            "periodicity",
            r,
            TOL_PERIODICITY,
            format!("{} declared period(s)", entry.periods.len()),
        );
    }

    match entry.surface() {
        Err(e) => push("surface-construction", f64::INFINITY, 1.0, e.to_string()),
        Ok(surface) => {
            if !entry.lightlike_loci.is_empty() {
                let mut worst = 0.0_f64;
                let mut err: Option<ZmcError> = None;
                for line in &entry.lightlike_loci {
                    match lightlike_locus_check(&surface, line, cfg.locus_samples) {
                        Ok(rep) => worst = worst.max(rep.max_f_value).max(rep.max_margin),
                        Err(e) => err = Some(e),
                    }
                }
                match err {
                    None => push(
                        "lightlike-loci",
                        worst,
                        TOL_LOCUS,
                        format!(
                            "{} line(s) x {} samples, |F| and |margin|",
                            entry.lightlike_loci.len(),
                            cfg.locus_samples
                        ),
                    ),
                    Some(e) => push("lightlike-loci", f64::INFINITY, TOL_LOCUS, e.to_string()),
                }
            }

            let points =
                on_surface_samples(&surface, cfg.surface_samples, entry_seed(cfg, entry.name));
            if points.is_empty() {
                push(
                    "on-surface-sampling",
                    f64::INFINITY,
                    1.0,
                    "no on-surface points found in the bounding box".into(),
                );
            } else {
                let stats = curvature_check(&surface, &points);
                push(
                    "curvature-numerator",
                    stats.max_relative.max(stats.max_gap),
                    TOL_CURVATURE,
                    format!(
                        "{} points ({} skipped), both formulations, relative",
                        stats.used, stats.skipped
                    ),
                );

                let fd_pts = &points[..points.len().min(cfg.fd_samples)];
                push(
                    "derivative-fd-agreement",
                    fd_agreement_check(&surface, fd_pts),
                    TOL_FD,
                    format!("{} points, centered differences of F", fd_pts.len()),
                );

                let census = ClassCensus::of(&surface, &points, cfg.lightlike_tol);
                let violations = census.violations(entry.expected_class);
                let covers = census.covers(entry.expected_class);
                checks.push(CheckOutcome {
                    check: "causal-census",
                    residual: violations as f64,
                    tolerance: 1.0,
                    passed: violations == 0 && covers,
                    detail: format!(
                        "expected {}: spacelike={}, timelike={}, lightlike={}",
                        entry.expected_class.name(),
                        census.spacelike,
                        census.timelike,
                        census.lightlike
                    ),
                });
            }
        }
    }

    EntryReport {
        entry: entry.name.to_string(),
        section_ref: entry.section_ref.to_string(),
        checks,
    }
}

/// Run [`check_entry`] over the whole catalog, in presentation order.
pub fn check_all(cfg: &VerifyConfig) -> Vec<EntryReport> {
    crate::catalog::entries().iter().map(|e| check_entry(e, cfg)).collect()
}

/// Classify an `resolution × resolution` grid of `(x, y)` cell centers over
/// the bounding box, solving `F = 0` along `z` for each column, and write one
/// CSV row per on-surface point in the fixed six-column schema
/// `x,y,z,class,margin,A_residual`. Returns the number of rows written.
pub fn classification_csv(
    surface: &Surface,
    resolution: usize,
    tol: f64,
    out: &mut dyn Write,
) -> Result<usize> {
    let res = resolution.max(1);
    let cache = AxisRootCache::new(surface, Axis::Z, (4 * res).max(256));
    let bb = surface.bounding_box();
    let constants = surface.constants();
    writeln!(out, "x,y,z,class,margin,A_residual")?;
    let mut rows = 0usize;
    for i in 0..res {
        let x = bb.min[0] + (bb.max[0] - bb.min[0]) * (i as f64 + 0.5) / res as f64;
        let Ok(fx) = surface.map(Axis::X).value(x) else { continue };
        for j in 0..res {
            let y = bb.min[1] + (bb.max[1] - bb.min[1]) * (j as f64 + 0.5) / res as f64;
            let Ok(gy) = surface.map(Axis::Y).value(y) else { continue };
            if !(fx.is_finite() && gy.is_finite()) {
                continue;
            }
            for z in cache.roots(surface, -(fx + gy)) {
                let Ok(pt) = surface.eval(x, y, z) else { continue };
                let [u, v, _] = pt.profile_values;
                let a_res =
                    zmc_identity_residual(constants, u, v).abs() / zmc_identity_scale(constants, u, v);
                writeln!(
                    out,
                    "{:.9},{:.9},{:.9},{},{:.6e},{:.6e}",
                    x,
                    y,
                    z,
                    pt.causal_class(tol).name(),
                    pt.margin,
                    a_res
                )?;
                rows += 1;
            }
        }
    }
    Ok(rows)
}
