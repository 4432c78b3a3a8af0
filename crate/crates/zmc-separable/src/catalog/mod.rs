//! The worked catalog: every explicit separable zero-mean-curvature surface
//! this crate knows how to build, keyed by a stable kebab-case name.
//!
//! Each [`CatalogEntry`] carries two independent routes to the same surface:
//!
//! 1. **Closed forms** — hand-written `f`, `g`, `h` and their first
//!    derivatives ([`CatalogEntry::surface`]).
//! 2. **Numeric profiles** — the coefficient rows alone, integrated back into
//!    coordinate functions by [`crate::profiles::ProfileMap`]
//!    ([`CatalogEntry::numeric_surface`]).
//!
//! [`CatalogEntry::closed_form_crosscheck`] compares the two routes sample by
//! sample; agreement is the strongest internal consistency check the crate
//! has, because the routes share nothing but the coefficient table.
//!
//! Entries are looked up by exact name (`"scherk-spacelike"`), by a
//! section-style key (`"4.1.2"`), or by a descriptive alias
//! (`"3.2-sin"`); see [`find`]. Entries with free parameters can be rebuilt
//! at non-default parameter values with [`instantiate`], which solves the
//! coefficient table for the requested parameters and reconstructs the
//! coordinate functions numerically.
//!
//! ```
//! use zmc_separable::catalog;
//!
//! let entry = catalog::find("scherk-spacelike").unwrap();
//! assert_eq!(entry.section_ref, "4.1.2");
//! let surface = entry.surface().unwrap();
//! let p = surface.eval(1.0, 1.2, 0.9).unwrap();
//! assert!(p.margin < 0.0); // spacelike sample
//! ```

mod entries;

use std::sync::{Arc, OnceLock};

use crate::constraints;
use crate::profiles::{AxisMap, ClosedFormMap, ProfileMap};
use crate::surface::Surface;
use crate::types::{
    Axis, Box3, CaseK, CoeffRow, ConstantsTriple, ExpectedClass, FreeParam, LocusLine, Profile,
    Result, Sign, ZmcError,
};

/// A shared closure `f64 -> f64`, used for stored closed-form values and
/// derivatives. Stored behind `Arc` so an entry can hand out any number of
/// [`ClosedFormMap`]s without re-writing the formulas.
pub(crate) type ScalarFn = Arc<dyn Fn(f64) -> f64 + Send + Sync>;

/// Hand-written closed form for one axis: the coordinate function, its first
/// derivative, and the coordinate interval on which the formula is valid.
pub(crate) struct AxisClosedForm {
    pub(crate) x_domain: (f64, f64),
    pub(crate) value: ScalarFn,
    pub(crate) d1: ScalarFn,
}

/// Signature of a family constructor: maps resolved parameter values (in
/// [`CatalogEntry::free_params`] order) to a full coefficient table.
pub(crate) type ConstantsFn = fn(&[f64]) -> Result<ConstantsTriple>;

/// One catalog surface: coefficient table, closed forms, numeric profile
/// descriptors, and everything a check pipeline needs to exercise it.
pub struct CatalogEntry {
    /// Stable kebab-case identifier, unique across the catalog.
    pub name: &'static str,
    /// Section-style key (`"4.2.1"`); several entries may share one.
    pub section_ref: &'static str,
    /// Extra lookup keys accepted by [`find`].
    pub aliases: &'static [&'static str],
    /// Groups entries produced by the same parameterized constructor.
    pub family: &'static str,
    /// Human-readable implicit equation of the zero set.
    pub implicit_string: &'static str,
    /// Causal character expected away from the declared lightlike loci.
    pub expected_class: ExpectedClass,
    /// The coefficient table `(case; rows for X, Y, Z)`.
    pub constants: ConstantsTriple,
    /// Numeric profile descriptors, one monotone branch per axis. The branch
    /// is chosen to agree with the closed form near its anchor.
    pub profiles: [Profile; 3],
    /// Default sampling box for meshing, classification, and checks.
    pub bounding_box: Box3,
    /// Straight lightlike lines contained in the surface, if any.
    pub lightlike_loci: Vec<LocusLine>,
    /// Free parameters accepted by [`instantiate`], with defaults.
    pub free_params: Vec<FreeParam>,
    /// Translation periods `T` with `F(p + T) = F(p)`, if any.
    pub periods: Vec<[f64; 3]>,
    /// One-line description of branch choices and other fine print.
    pub notes: &'static str,
    pub(crate) closed: [AxisClosedForm; 3],
    pub(crate) constants_fn: Option<ConstantsFn>,
}

impl std::fmt::Debug for CatalogEntry {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("CatalogEntry")
            .field("name", &self.name)
            .field("section_ref", &self.section_ref)
            .field("expected_class", &self.expected_class)
            .field("constants", &self.constants)
            .finish_non_exhaustive()
    }
}

impl CatalogEntry {
    /// The closed-form map for one axis (0 = x, 1 = y, 2 = z).
    pub(crate) fn closed_map(&self, i: usize) -> ClosedFormMap {
        let cf = &self.closed[i];
        let v = cf.value.clone();
        let d = cf.d1.clone();
        ClosedFormMap::new(self.profiles[i], cf.x_domain, move |x| v(x), move |x| d(x))
    }

    /// Evaluate the stored closed-form coordinate functions directly, without
    /// any domain check. Used by the periodicity check, which deliberately
    /// steps outside the single-branch domain of the numeric maps; returns
    /// NaN or ±∞ where the formula is undefined.
    pub(crate) fn closed_value_unchecked(&self, i: usize, x: f64) -> f64 {
        (self.closed[i].value)(x)
    }

    /// Build the surface from its hand-written closed forms.
    pub fn surface(&self) -> Result<Surface> {
        let maps: [Arc<dyn AxisMap>; 3] = [
            Arc::new(self.closed_map(0)),
            Arc::new(self.closed_map(1)),
            Arc::new(self.closed_map(2)),
        ];
        Ok(Surface::new(maps, self.constants, self.bounding_box))
    }

    /// Build the surface by numeric reconstruction from the coefficient rows
    /// alone. Covers one monotone branch per axis (the branch the profile
    /// descriptor anchors), which is always enough to overlap the bounding
    /// box on at least a sub-box.
    pub fn numeric_surface(&self) -> Result<Surface> {
        let maps: [Arc<dyn AxisMap>; 3] = [
            Arc::new(ProfileMap::new(self.profiles[0])?),
            Arc::new(ProfileMap::new(self.profiles[1])?),
            Arc::new(ProfileMap::new(self.profiles[2])?),
        ];
        Ok(Surface::new(maps, self.constants, self.bounding_box))
    }

    /// Maximum absolute difference between the closed-form and numeric
    /// coordinate functions over `samples_per_axis` points per axis.
    ///
    /// Samples are taken where the closed-form domain, the numeric branch's
    /// coordinate range, and the bounding box all overlap.
    pub fn closed_form_crosscheck(&self, samples_per_axis: usize) -> Result<f64> {
        let mut worst = 0.0_f64;
        for i in 0..3 {
            let closed = self.closed_map(i);
            let numeric = ProfileMap::new(self.profiles[i])?;
            let (dlo, dhi) = closed.x_domain();
            let (nlo, nhi) = numeric.coordinate_range();
            let lo = dlo.max(nlo).max(self.bounding_box.min[i]);
            let hi = dhi.min(nhi).min(self.bounding_box.max[i]);
            if !(hi > lo) {
                return Err(ZmcError::InvalidConstants(format!(
                    "{}: axis {} has no overlap between closed form, numeric branch, and box",
                    self.name,
                    Axis::from_index(i).name(),
                )));
            }
            let pad = 1e-9 + 1e-6 * (hi - lo);
            let (lo, hi) = (lo + pad, hi - pad);
            let n = samples_per_axis.max(2);
            for j in 0..n {
                let x = lo + (hi - lo) * j as f64 / (n - 1) as f64;
                let diff = (closed.value(x)? - numeric.value(x)?).abs();
                worst = worst.max(diff);
            }
        }
        Ok(worst)
    }

    /// Check the declared translation periods: the largest `|F(p+T) − F(p)|`
    /// over quasi-random points `p` in the bounding box, or `None` when the
    /// entry declares no periods.
    ///
    /// Evaluates the stored closed forms directly (the shifted point usually
    /// leaves the single monotone branch the maps cover) and skips samples
    /// where either evaluation is non-finite.
    pub fn periodicity_residual(&self, samples: usize) -> Option<f64> {
        if self.periods.is_empty() {
            return None;
        }
        // Additive low-discrepancy sequence (fractional parts of multiples of
        // the plastic-number powers), deterministic and parameter-free.
        const ALPHA: [f64; 3] = [0.754_877_666_246_692_8, 0.569_840_290_998_053_2, 0.430_159_709_001_946_8];
        let b = &self.bounding_box;
        let mut worst = f64::NEG_INFINITY;
        for s in 0..samples.max(1) {
            let mut p = [0.0_f64; 3];
            for i in 0..3 {
                let t = ((s + 1) as f64 * ALPHA[i]).fract();
                p[i] = b.min[i] + t * (b.max[i] - b.min[i]);
            }
            let f0: f64 = (0..3).map(|i| self.closed_value_unchecked(i, p[i])).sum();
            if !f0.is_finite() {
                continue;
            }
            for period in &self.periods {
                let f1: f64 = (0..3)
                    .map(|i| self.closed_value_unchecked(i, p[i] + period[i]))
                    .sum();
                if f1.is_finite() {
                    worst = worst.max((f1 - f0).abs());
                }
            }
        }
        Some(if worst.is_finite() { worst } else { f64::INFINITY })
    }

    /// Default parameter vector in [`CatalogEntry::free_params`] order.
    pub fn default_params(&self) -> Vec<f64> {
        self.free_params.iter().map(|p| p.default).collect()
    }
}

/// All catalog entries, in presentation order. Built once.
pub fn entries() -> &'static [CatalogEntry] {
    static ENTRIES: OnceLock<Vec<CatalogEntry>> = OnceLock::new();
    ENTRIES.get_or_init(entries::build)
}

/// Look up an entry by exact name, then by alias, then by section-style key
/// (first entry of the section wins).
pub fn find(name: &str) -> Option<&'static CatalogEntry> {
    let all = entries();
    all.iter()
        .find(|e| e.name == name)
        .or_else(|| all.iter().find(|e| e.aliases.contains(&name)))
        .or_else(|| all.iter().find(|e| e.section_ref == name))
}

/// All entries a lookup key could refer to: a single entry for an exact name
/// or alias, every entry of a section for a section-style key.
fn candidates(name: &str) -> Vec<&'static CatalogEntry> {
    let all = entries();
    if let Some(e) = all.iter().find(|e| e.name == name) {
        return vec![e];
    }
    if let Some(e) = all.iter().find(|e| e.aliases.contains(&name)) {
        return vec![e];
    }
    all.iter().filter(|e| e.section_ref == name).collect()
}

/// Build a surface for `name` with the given `(parameter, value)` overrides.
///
/// Unset parameters keep their defaults. If the resolved parameter vector
/// matches a catalog entry's defaults, that entry's closed-form surface is
/// returned; otherwise the family's coefficient table is rebuilt at the
/// requested parameters and the coordinate functions are reconstructed
/// numerically (one monotone branch per axis, branches chosen so the three
/// value ranges can sum to zero).
///
/// Errors with [`ZmcError::UnknownEntry`] for an unknown name and
/// [`ZmcError::ParamOutOfRange`] for unknown parameter names, values outside
/// the declared open range, or values at which the family degenerates.
pub fn instantiate(name: &str, params: &[(&str, f64)]) -> Result<Surface> {
    let cands = candidates(name);
    let base = *cands.first().ok_or_else(|| ZmcError::UnknownEntry(name.to_string()))?;

    if base.free_params.is_empty() {
        if let Some((k, v)) = params.first() {
            return Err(ZmcError::ParamOutOfRange {
                name: (*k).to_string(),
                value: *v,
                detail: format!("entry `{}` has no free parameters", base.name),
            });
        }
        return base.surface();
    }

    let mut resolved = base.default_params();
    for (k, v) in params {
        let idx = base
            .free_params
            .iter()
            .position(|p| p.name == *k)
            .ok_or_else(|| ZmcError::ParamOutOfRange {
                name: (*k).to_string(),
                value: *v,
                detail: format!(
                    "unknown parameter for `{}`; expected one of: {}",
                    base.name,
                    base.free_params
                        .iter()
                        .map(|p| p.name)
                        .collect::<Vec<_>>()
                        .join(", "),
                ),
            })?;
        let fp = &base.free_params[idx];
        if !(*v > fp.range.0 && *v < fp.range.1) {
            return Err(ZmcError::ParamOutOfRange {
                name: (*k).to_string(),
                value: *v,
                detail: format!("outside admissible open range ({}, {})", fp.range.0, fp.range.1),
            });
        }
        resolved[idx] = *v;
    }

    // A candidate whose defaults match the resolved vector has hand-written
    // closed forms; prefer those.
    for cand in &cands {
        if cand.family != base.family || cand.free_params.len() != resolved.len() {
            continue;
        }
        let same_names = cand
            .free_params
            .iter()
            .zip(&base.free_params)
            .all(|(a, b)| a.name == b.name);
        let same_values = cand
            .free_params
            .iter()
            .zip(&resolved)
            .all(|(p, v)| (p.default - v).abs() <= 1e-12 * p.default.abs().max(1.0));
        if same_names && same_values {
            return cand.surface();
        }
    }

    let build = base.constants_fn.ok_or_else(|| ZmcError::ParamOutOfRange {
        name: base.free_params[0].name.to_string(),
        value: resolved[0],
        detail: format!("entry `{}` has no parameterized constructor", base.name),
    })?;
    let constants = build(&resolved)?;

    // Safety net: the freshly built table must satisfy the constraint system.
    let scale = constants
        .rows
        .iter()
        .flat_map(|r| [r.a.abs(), r.b.abs(), r.c.abs()])
        .fold(1.0_f64, f64::max)
        .powi(3);
    let res = constraints::residual_max_norm(&constants);
    if res > 1e-9 * scale {
        return Err(ZmcError::InvalidConstants(format!(
            "family `{}` at {:?}: constraint residual {res:.3e} exceeds 1e-9·scale",
            base.family, resolved,
        )));
    }

    numeric_surface_for(&constants).map_err(|e| match e {
        ZmcError::InvalidConstants(detail) => ZmcError::ParamOutOfRange {
            name: base.free_params[0].name.to_string(),
            value: resolved[0],
            detail,
        },
        other => other,
    })
}

/// Convenience wrapper: [`CatalogEntry::closed_form_crosscheck`] by name.
pub fn closed_form_crosscheck(name: &str, samples_per_axis: usize) -> Result<f64> {
    let entry = find(name).ok_or_else(|| ZmcError::UnknownEntry(name.to_string()))?;
    entry.closed_form_crosscheck(samples_per_axis)
}

// ---------------------------------------------------------------------------
// Generic numeric construction (used by `instantiate` at non-default
// parameters, where no hand-written closed form exists).
// ---------------------------------------------------------------------------

/// The open intervals on which `X(u) > 0`, in increasing order.
///
/// Exact per case: roots of a quadratic in `u` (quadratic case), in
/// `t = e^{ku}` (exponential case), or a phase condition (trigonometric
/// case; one representative window per period, or all of ℝ when `X` never
/// vanishes).
pub(crate) fn positivity_windows(row: CoeffRow, case: CaseK) -> Vec<(f64, f64)> {
    const INF: f64 = f64::INFINITY;
    match case {
        CaseK::Zero => {
            let (a, b, c) = (row.a, row.b, row.c);
            if c != 0.0 {
                let disc = b * b - 4.0 * a * c;
                if c > 0.0 {
                    if disc < 0.0 {
                        vec![(-INF, INF)]
                    } else {
                        let s = disc.sqrt();
                        let r1 = (-b - s) / (2.0 * c);
                        let r2 = (-b + s) / (2.0 * c);
                        vec![(-INF, r1.min(r2)), (r1.max(r2), INF)]
                    }
                } else if disc > 0.0 {
                    let s = disc.sqrt();
                    let r1 = (-b - s) / (2.0 * c);
                    let r2 = (-b + s) / (2.0 * c);
                    vec![(r1.min(r2), r1.max(r2))]
                } else {
                    vec![]
                }
            } else if b != 0.0 {
                let r = -a / b;
                if b > 0.0 {
                    vec![(r, INF)]
                } else {
                    vec![(-INF, r)]
                }
            } else if a > 0.0 {
                vec![(-INF, INF)]
            } else {
                vec![]
            }
        }
        CaseK::Positive { k } => {
            // X = a + b·e^{ku} + c·e^{-ku}; with t = e^{ku} > 0 the sign of X
            // is the sign of q(t) = b·t² + a·t + c.
            let (a, b, c) = (row.a, row.b, row.c);
            let mut ts: Vec<f64> = Vec::new();
            if b != 0.0 {
                let disc = a * a - 4.0 * b * c;
                if disc >= 0.0 {
                    let s = disc.sqrt();
                    for r in [(-a - s) / (2.0 * b), (-a + s) / (2.0 * b)] {
                        if r > 0.0 {
                            ts.push(r);
                        }
                    }
                }
            } else if a != 0.0 {
                let r = -c / a;
                if r > 0.0 {
                    ts.push(r);
                }
            } else {
                return if c > 0.0 { vec![(-INF, INF)] } else { vec![] };
            }
            ts.sort_by(|x, y| x.partial_cmp(y).unwrap());
            ts.dedup_by(|x, y| (*x - *y).abs() <= 1e-14 * y.abs());
            let mut bounds = vec![0.0];
            bounds.extend(ts.iter().copied());
            bounds.push(INF);
            let q = |t: f64| b * t * t + a * t + c;
            let mut windows = Vec::new();
            for w in bounds.windows(2) {
                let (tlo, thi) = (w[0], w[1]);
                let mid = if thi.is_infinite() {
                    tlo.max(1.0) * 2.0 + 1.0
                } else {
                    0.5 * (tlo + thi)
                };
                if q(mid) > 0.0 {
                    let ulo = if tlo == 0.0 { -INF } else { tlo.ln() / k };
                    let uhi = if thi.is_infinite() { INF } else { thi.ln() / k };
                    windows.push((ulo, uhi));
                }
            }
            windows
        }
        CaseK::Negative { k } => {
            // X = a + R·cos(ku − φ) with R = hypot(b, c), φ = atan2(c, b).
            let (a, b, c) = (row.a, row.b, row.c);
            let r = b.hypot(c);
            if r == 0.0 {
                return if a > 0.0 { vec![(-INF, INF)] } else { vec![] };
            }
            let phi = c.atan2(b);
            if a - r > 0.0 {
                vec![(-INF, INF)]
            } else if a + r <= 0.0 {
                vec![]
            } else {
                // One representative window around the maximum at ku = φ.
                let theta = (-a / r).clamp(-1.0, 1.0).acos();
                vec![((phi - theta) / k, (phi + theta) / k)]
            }
        }
    }
}

/// Pick an interior anchor value inside a positivity window: the scanned
/// argmax of `X`, clamped to a finite search range for unbounded windows.
fn pick_anchor_u(row: CoeffRow, case: CaseK, window: (f64, f64)) -> f64 {
    let lo = window.0.max(-12.0);
    let hi = window.1.min(12.0);
    let pad = 1e-3 * (hi - lo);
    let (lo, hi) = (lo + pad, hi - pad);
    let mut best = (0.5 * (lo + hi), f64::NEG_INFINITY);
    for i in 0..=256 {
        let u = lo + (hi - lo) * i as f64 / 256.0;
        let x = crate::profiles::eval_X(row, case, u, 0);
        if x > best.1 {
            best = (u, x);
        }
    }
    best.0
}

/// Build a surface from a raw coefficient table with no closed forms: one
/// numerically reconstructed monotone branch per axis.
///
/// Branch (positivity window) combinations are tried in order until the sum
/// of the three value ranges straddles zero, so the level set `F = 0` is
/// non-empty; errors with [`ZmcError::InvalidConstants`] when some axis has
/// no window or no combination works.
pub(crate) fn numeric_surface_for(constants: &ConstantsTriple) -> Result<Surface> {
    let case = constants.case;
    let windows: Vec<Vec<(f64, f64)>> = (0..3)
        .map(|i| positivity_windows(constants.rows[i], case))
        .collect();
    for (i, w) in windows.iter().enumerate() {
        if w.is_empty() {
            return Err(ZmcError::InvalidConstants(format!(
                "axis {}: X(u) has no positivity window",
                Axis::from_index(i).name(),
            )));
        }
    }

    let mut chosen: Option<[(f64, f64); 3]> = None;
    'outer: for &wx in &windows[0] {
        for &wy in &windows[1] {
            for &wz in &windows[2] {
                let lo = wx.0 + wy.0 + wz.0;
                let hi = wx.1 + wy.1 + wz.1;
                if lo < 0.0 && hi > 0.0 {
                    chosen = Some([wx, wy, wz]);
                    break 'outer;
                }
            }
        }
    }
    let chosen = chosen.ok_or_else(|| {
        ZmcError::InvalidConstants(
            "no combination of positivity windows allows f + g + h = 0; level set empty"
                .to_string(),
        )
    })?;

    let mut maps: Vec<Arc<dyn AxisMap>> = Vec::with_capacity(3);
    let mut bmin = [0.0_f64; 3];
    let mut bmax = [0.0_f64; 3];
    for i in 0..3 {
        let row = constants.rows[i];
        let window = chosen[i];
        let u0 = pick_anchor_u(row, case, window);
        let profile = Profile::new(Axis::from_index(i), case, row, Sign::Plus, window, (0.0, u0));
        let map = ProfileMap::new(profile)?;
        let (rlo, rhi) = map.coordinate_range();
        let lo = rlo.max(-2.5);
        let hi = rhi.min(2.5);
        if !(hi > lo) {
            return Err(ZmcError::InvalidConstants(format!(
                "axis {}: degenerate coordinate range [{rlo}, {rhi}]",
                Axis::from_index(i).name(),
            )));
        }
        let inset = 0.05 * (hi - lo);
        bmin[i] = lo + inset;
        bmax[i] = hi - inset;
        maps.push(Arc::new(map));
    }
    let maps: [Arc<dyn AxisMap>; 3] = [maps[0].clone(), maps[1].clone(), maps[2].clone()];
    Ok(Surface::new(maps, *constants, Box3::new(bmin, bmax)))
}

// ---------------------------------------------------------------------------
// Registry serialization.
// ---------------------------------------------------------------------------

fn fmt_f64(v: f64) -> String {
    format!("{v}")
}

fn fmt_row(r: CoeffRow) -> String {
    format!("{},{},{}", fmt_f64(r.a), fmt_f64(r.b), fmt_f64(r.c))
}

/// The registry file contents: one pipe-separated record per entry, with a
/// commented header. Checked verbatim against `data/registry.txt` by a test,
/// so the shipped table can never drift from the code.
pub fn registry_text() -> String {
    let mut out = String::new();
    out.push_str("# Catalog registry: one record per entry, fields separated by `|`.\n");
    out.push_str("# name|section|case|row_x(a,b,c)|row_y|row_z|signs|params|box(min..max per axis)|loci|class\n");
    for e in entries() {
        let case = match e.constants.case {
            CaseK::Positive { k } => format!("pos k={}", fmt_f64(k)),
            CaseK::Zero => "zero".to_string(),
            CaseK::Negative { k } => format!("neg k={}", fmt_f64(k)),
        };
        let signs: String = e
            .profiles
            .iter()
            .map(|p| match p.sign {
                Sign::Plus => '+',
                Sign::Minus => '-',
            })
            .collect();
        let params = if e.free_params.is_empty() {
            "-".to_string()
        } else {
            e.free_params
                .iter()
                .map(|p| format!("{}={}", p.name, fmt_f64(p.default)))
                .collect::<Vec<_>>()
                .join(";")
        };
        let b = &e.bounding_box;
        let boxes = (0..3)
            .map(|i| format!("{}..{}", fmt_f64(b.min[i]), fmt_f64(b.max[i])))
            .collect::<Vec<_>>()
            .join(";");
        let rec = format!(
            "{}|{}|{}|{}|{}|{}|{}|{}|{}|loci={}|{}\n",
            e.name,
            e.section_ref,
            case,
            fmt_row(e.constants.rows[0]),
            fmt_row(e.constants.rows[1]),
            fmt_row(e.constants.rows[2]),
            signs,
            params,
            boxes,
            e.lightlike_loci.len(),
            e.expected_class.name().to_lowercase(),
        );
        out.push_str(&rec);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constraints::residual_max_norm;
    use crate::surface::lightlike_locus_check;
    use crate::types::RESIDUAL_TOL;

    #[test]
    fn catalog_has_all_entries_with_unique_names() {
        let all = entries();
        assert_eq!(all.len(), 27);
        let mut names: Vec<&str> = all.iter().map(|e| e.name).collect();
        names.sort_unstable();
        names.dedup();
        assert_eq!(names.len(), 27, "duplicate entry names");
    }

    #[test]
    fn every_entry_satisfies_the_constraint_system() {
        for e in entries() {
            let res = residual_max_norm(&e.constants);
            assert!(res < RESIDUAL_TOL, "{}: residual {res:.3e}", e.name);
        }
    }

    #[test]
    fn lookup_by_name_alias_and_section() {
        assert_eq!(find("scherk-spacelike").unwrap().name, "scherk-spacelike");
        assert_eq!(find("3.2-sin").unwrap().name, "sin-triple");
        assert_eq!(find("4.1.4").unwrap().name, "tanh-triple");
        assert_eq!(find("4.2.1").unwrap().name, "v-surface");
        assert_eq!(find("5.1").unwrap().name, "k-neg-example-1");
        assert!(find("no-such-surface").is_none());
    }

    #[test]
    fn closed_and_numeric_routes_agree_on_a_quick_panel() {
        // The acceptance suite runs the full-resolution version; this is a
        // fast smoke test over a few structurally distinct entries.
        for name in ["exp-same-sign", "sin-triple", "scherk-timelike-1st", "tanh-triple", "k-neg-example-1"] {
            let worst = closed_form_crosscheck(name, 24).unwrap();
            assert!(worst < 1e-8, "{name}: crosscheck {worst:.3e}");
        }
    }

    #[test]
    fn elliptic_entries_crosscheck_too() {
        for name in ["v-surface", "m-surface", "elliptic-product"] {
            let worst = closed_form_crosscheck(name, 16).unwrap();
            assert!(worst < 1e-8, "{name}: crosscheck {worst:.3e}");
        }
    }

    #[test]
    fn declared_loci_are_lightlike_and_on_surface() {
        for e in entries() {
            if e.lightlike_loci.is_empty() {
                continue;
            }
            let s = e.surface().unwrap();
            for (j, line) in e.lightlike_loci.iter().enumerate() {
                let report = lightlike_locus_check(&s, line, 16).unwrap();
                assert!(
                    report.passes(1e-7),
                    "{} locus {j}: |F|≤{:.3e}, |margin|≤{:.3e}",
                    e.name,
                    report.max_f_value,
                    report.max_margin,
                );
            }
        }
    }

    #[test]
    fn declared_periods_hold() {
        for e in entries() {
            if let Some(res) = e.periodicity_residual(64) {
                assert!(res < 1e-9, "{}: period residual {res:.3e}", e.name);
            }
        }
    }

    #[test]
    fn instantiate_default_params_returns_the_catalog_entry() {
        let s = instantiate("sinh-sin-sinh", &[]).unwrap();
        let direct = find("sinh-sin-sinh").unwrap().surface().unwrap();
        let p = s.eval(1.0, 1.2, 1.1).unwrap();
        let q = direct.eval(1.0, 1.2, 1.1).unwrap();
        assert!((p.f_value - q.f_value).abs() < 1e-14);
    }

    #[test]
    fn instantiate_resolves_family_defaults_by_section_key() {
        // section key + the second member's default parameters → its closed forms
        let s = instantiate("4.2.1", &[("m", 1.0)]).unwrap();
        let direct = find("sinh-sin-sinh").unwrap().surface().unwrap();
        let p = s.eval(1.0, 1.2, 1.1).unwrap();
        let q = direct.eval(1.0, 1.2, 1.1).unwrap();
        assert!((p.f_value - q.f_value).abs() < 1e-14);
    }

    #[test]
    fn instantiate_generic_parameters_yield_a_valid_zmc_surface() {
        let s = instantiate("4.2.1", &[("m", 0.7)]).unwrap();
        let b = *s.bounding_box();
        // Solve for a surface point and check the curvature numerator there.
        let x = 0.5 * (b.min[0] + b.max[0]);
        let y = 0.5 * (b.min[1] + b.max[1]);
        let z = s
            .solve_axis(crate::types::Axis::Z, (x, y))
            .ok()
            .and_then(|mut v| v.pop());
        if let Some(z) = z {
            let c = s.mean_curvature_numerator(x, y, z).unwrap();
            assert!(c.relative_residual() < 1e-7, "residual {:.3e}", c.relative_residual());
        } else {
            // The midline may miss the level set; fall back to a scan.
            let mut hit = false;
            for i in 0..25 {
                let t = i as f64 / 24.0;
                let x = b.min[0] + t * (b.max[0] - b.min[0]);
                if let Ok(mut zs) = s.solve_axis(crate::types::Axis::Z, (x, y)) {
                    if let Some(z) = zs.pop() {
                        let c = s.mean_curvature_numerator(x, y, z).unwrap();
                        assert!(c.relative_residual() < 1e-7);
                        hit = true;
                        break;
                    }
                }
            }
            assert!(hit, "no surface point found in box");
        }
    }

    #[test]
    fn instantiate_rejects_degenerate_and_unknown_parameters() {
        match instantiate("4.2.1", &[("m", 0.0)]) {
            Err(ZmcError::ParamOutOfRange { .. }) => {}
            other => panic!("expected ParamOutOfRange, got {other:?}"),
        }
        match instantiate("sinh-sin-sinh", &[("q", 1.0)]) {
            Err(ZmcError::ParamOutOfRange { .. }) => {}
            other => panic!("expected ParamOutOfRange, got {other:?}"),
        }
        match instantiate("no-such", &[]) {
            Err(ZmcError::UnknownEntry(_)) => {}
            other => panic!("expected UnknownEntry, got {other:?}"),
        }
        // Fixed entries take no parameters.
        match instantiate("helicoid-elliptic", &[("m", 1.0)]) {
            Err(ZmcError::ParamOutOfRange { .. }) => {}
            other => panic!("expected ParamOutOfRange, got {other:?}"),
        }
    }

    #[test]
    fn instantiate_scaled_sin_family() {
        let s = instantiate("3.2-sin", &[("alpha2", 3.0), ("beta2", 2.0)]).unwrap();
        let res = residual_max_norm(s.constants());
        assert!(res < 1e-9, "residual {res:.3e}");
        // Mismatched beta2 is rejected.
        assert!(instantiate("3.2-sin", &[("alpha2", 3.0), ("beta2", 1.0)]).is_err());
    }

    #[test]
    fn positivity_windows_cover_the_basic_shapes() {
        // 2 − 2u²: single window (−1, 1).
        let w = positivity_windows(CoeffRow::new(2.0, 0.0, -2.0), CaseK::Zero);
        assert_eq!(w.len(), 1);
        assert!((w[0].0 + 1.0).abs() < 1e-12 && (w[0].1 - 1.0).abs() < 1e-12);
        // 1 + e^{−2u}: everywhere positive.
        let w = positivity_windows(CoeffRow::new(1.0, 0.0, 1.0), CaseK::positive());
        assert_eq!(w, vec![(f64::NEG_INFINITY, f64::INFINITY)]);
        // −1 + e^{2u}: positive for u > 0.
        let w = positivity_windows(CoeffRow::new(-1.0, 1.0, 0.0), CaseK::positive());
        assert_eq!(w.len(), 1);
        assert!(w[0].0.abs() < 1e-12 && w[0].1.is_infinite());
        // 1 + sin u: window (−π/2, 3π/2) around the maximum.
        let w = positivity_windows(CoeffRow::new(1.0, 0.0, 1.0), CaseK::negative());
        assert_eq!(w.len(), 1);
        assert!((w[0].0 + std::f64::consts::FRAC_PI_2).abs() < 1e-9);
        assert!((w[0].1 - 3.0 * std::f64::consts::FRAC_PI_2).abs() < 1e-9);
        // −1 − e^{−2u}: empty.
        let w = positivity_windows(CoeffRow::new(-1.0, 0.0, -1.0), CaseK::positive());
        assert!(w.is_empty());
    }

    #[test]
    fn registry_file_matches_generated_text() {
        let generated = registry_text();
        if std::env::var("ZMC_REGISTRY_REGEN").is_ok() {
            let path = concat!(env!("CARGO_MANIFEST_DIR"), "/data/registry.txt");
            std::fs::write(path, &generated).unwrap();
        }
        let shipped = include_str!("../../data/registry.txt");
        assert_eq!(shipped, generated, "data/registry.txt is stale; regenerate with ZMC_REGISTRY_REGEN=1");
    }

    #[test]
    fn expected_class_census() {
        let all = entries();
        let count = |c: ExpectedClass| all.iter().filter(|e| e.expected_class == c).count();
        assert_eq!(count(ExpectedClass::Timelike), 18);
        assert_eq!(count(ExpectedClass::Spacelike), 5);
        assert_eq!(count(ExpectedClass::Mixed), 4);
    }
}
