//! Level-set triangulation (marching cubes) and mesh export.
//!
//! A separable field `F(x, y, z) = f(x) + g(y) + h(z)` is sampled on a
//! regular grid over the surface's bounding box. Separability keeps the cost
//! linear in the resolution: one pass per axis caches `f`, `g`, `h` and their
//! first derivatives at the grid planes, after which every corner value is a
//! three-term sum and no further map evaluations are needed — vertex
//! positions come from linear interpolation along sign-changing cell edges,
//! and vertex derivative data from interpolating the cached end-point
//! derivatives.
//!
//! Each vertex carries its causal classification (from the interpolated
//! gradient margin), so exported meshes visualize how the surface crosses
//! between spacelike, timelike, and lightlike regions.
//!
//! ```
//! use zmc_separable::catalog;
//! use zmc_separable::mesh::{extract, MeshConfig};
//!
//! let entry = catalog::find("scherk-timelike-1st").unwrap();
//! let surface = entry.surface().unwrap();
//! let mesh = extract(&surface, &MeshConfig { resolution: 16, ..Default::default() }).unwrap();
//! assert!(!mesh.triangles.is_empty());
//! assert!(mesh.audit(&surface).unwrap().passes());
//! ```

mod tables;

use std::collections::HashMap;
use std::io::{self, Write};

use crate::surface::{zmc_identity_residual, zmc_identity_scale, Surface};
use crate::types::{Axis, CausalClass, Result, ZmcError, LIGHTLIKE_TOL};

/// Mesh extraction settings.
#[derive(Debug, Clone, Copy)]
pub struct MeshConfig {
    /// Cells per axis; the grid has `resolution + 1` sample planes per axis.
    pub resolution: usize,
    /// Margin tolerance for per-vertex causal classification.
    pub lightlike_tol: f64,
}

impl Default for MeshConfig {
    fn default() -> Self {
        MeshConfig { resolution: 96, lightlike_tol: LIGHTLIKE_TOL }
    }
}

/// Cube corner offsets in grid steps, in the order the lookup tables assume.
const CORNER_OFFSETS: [[usize; 3]; 8] = [
    [0, 0, 0],
    [0, 1, 0],
    [1, 1, 0],
    [1, 0, 0],
    [0, 0, 1],
    [0, 1, 1],
    [1, 1, 1],
    [1, 0, 1],
];

/// The two corners joined by each of the 12 cube edges, in table order. Every
/// pair is listed with the lower corner first, so an edge always runs in the
/// positive direction of exactly one axis.
const EDGE_ENDPOINTS: [[usize; 2]; 12] = [
    [0, 1],
    [1, 2],
    [3, 2],
    [0, 3],
    [4, 5],
    [5, 6],
    [7, 6],
    [4, 7],
    [0, 4],
    [1, 5],
    [2, 6],
    [3, 7],
];

/// One triangulation vertex with its pointwise diagnostics.
#[derive(Debug, Clone, Copy)]
pub struct MeshVertex {
    pub position: [f64; 3],
    /// Normalized causal margin from the interpolated gradient.
    pub margin: f64,
    pub class: CausalClass,
    /// Relative first-order zero-mean-curvature identity residual at the
    /// vertex's interpolated profile values.
    pub identity_residual: f64,
    /// `0.5 · (cell diagonal) · max|∇F|` over the generating edge's
    /// endpoints: the allowance for [`Mesh::audit`].
    audit_bound: f64,
    /// Sum of the two cached on-grid profile values, so the audit only has to
    /// re-evaluate the one interpolated axis.
    grid_value_sum: f64,
    /// The axis along which this vertex's generating edge runs.
    off_axis: Axis,
}

/// A triangulated level set with per-vertex causal data.
///
/// Triangles are consistently oriented with normals pointing toward the
/// `F > 0` side. Vertices shared between cells are emitted once (indexed by
/// their generating grid edge).
#[derive(Debug)]
pub struct Mesh {
    pub vertices: Vec<MeshVertex>,
    pub triangles: Vec<[usize; 3]>,
    /// Space diagonal of one grid cell.
    pub cell_diagonal: f64,
}

/// The result of re-evaluating `F` exactly at every vertex. Marching-cubes
/// positions are linear interpolations, so they sit *near* the level set; the
/// audit checks each `|F|` against the first-order allowance
/// `0.5 · (cell diagonal) · max|∇F|` recorded on the vertex.
#[derive(Debug, Clone, Copy)]
pub struct MeshAudit {
    pub vertices: usize,
    /// Largest `|F|` over all vertices.
    pub max_f_value: f64,
    /// Largest ratio of `|F|` to the per-vertex allowance; ≤ 1 passes.
    pub worst_ratio: f64,
}

impl MeshAudit {
    pub fn passes(&self) -> bool {
        self.worst_ratio <= 1.0
    }
}

/// Triangulate the zero level set of `surface` over its bounding box.
///
/// Returns [`ZmcError::EmptyLevelSet`] when no grid cell sees a sign change
/// (the box misses the surface entirely).
pub fn extract(surface: &Surface, cfg: &MeshConfig) -> Result<Mesh> {
    let n = cfg.resolution.max(1);
    let bb = surface.bounding_box();

    // Per-axis caches of node coordinate, profile value, and derivative.
    let mut coords: [Vec<f64>; 3] = Default::default();
    let mut values: [Vec<f64>; 3] = Default::default();
    let mut d1s: [Vec<f64>; 3] = Default::default();
    let mut step = [0.0_f64; 3];
    for a in 0..3 {
        let map = surface.map(Axis::from_index(a));
        step[a] = (bb.max[a] - bb.min[a]) / n as f64;
        for j in 0..=n {
            let t = bb.min[a] + step[a] * j as f64;
            coords[a].push(t);
            values[a].push(map.value(t).unwrap_or(f64::NAN));
            d1s[a].push(map.d1(t).unwrap_or(f64::NAN));
        }
    }
    let cell_diagonal = (step[0] * step[0] + step[1] * step[1] + step[2] * step[2]).sqrt();

    let corner_value =
        |g: [usize; 3]| -> f64 { values[0][g[0]] + values[1][g[1]] + values[2][g[2]] };
    let corner_grad_norm = |g: [usize; 3]| -> f64 {
        let gx = d1s[0][g[0]];
        let gy = d1s[1][g[1]];
        let gz = d1s[2][g[2]];
        (gx * gx + gy * gy + gz * gz).sqrt()
    };

    let mut vertices: Vec<MeshVertex> = Vec::new();
    // Euclidean gradient per vertex, kept aside for triangle orientation.
    let mut vertex_grads: Vec<[f64; 3]> = Vec::new();
    let mut triangles: Vec<[usize; 3]> = Vec::new();
    // Global edge id (base node, axis) → vertex index.
    let mut edge_vertex: HashMap<u64, usize> = HashMap::new();
    let nodes = (n + 1) as u64;

    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                let mut corner_grid = [[0usize; 3]; 8];
                let mut corner_f = [0.0_f64; 8];
                let mut finite = true;
                for (c, off) in CORNER_OFFSETS.iter().enumerate() {
                    let g = [i + off[0], j + off[1], k + off[2]];
                    corner_grid[c] = g;
                    corner_f[c] = corner_value(g);
                    finite &= corner_f[c].is_finite();
                }
                if !finite {
                    continue;
                }
                let mut config = 0usize;
                for (c, &f) in corner_f.iter().enumerate() {
                    if f > 0.0 {
                        config |= 1 << c;
                    }
                }
                let mask = tables::EDGE_CROSSINGS[config];
                if mask == 0 {
                    continue;
                }

                let mut edge_verts = [usize::MAX; 12];
                for (e, ends) in EDGE_ENDPOINTS.iter().enumerate() {
                    if mask >> e & 1 == 0 {
                        continue;
                    }
                    let (ga, gb) = (corner_grid[ends[0]], corner_grid[ends[1]]);
                    let axis = (0..3).find(|&a| ga[a] != gb[a]).expect("cube edge spans an axis");
                    let key = (((ga[0] as u64 * nodes) + ga[1] as u64) * nodes + ga[2] as u64) * 3
                        + axis as u64;
                    let id = *edge_vertex.entry(key).or_insert_with(|| {
                        let (fa, fb) = (corner_f[ends[0]], corner_f[ends[1]]);
                        let t = (fa / (fa - fb)).clamp(0.0, 1.0);
                        let mut position = [0.0; 3];
                        let mut grad = [0.0; 3];
                        let mut profile_vals = [0.0; 3];
                        for a in 0..3 {
                            position[a] = coords[a][ga[a]];
                            grad[a] = d1s[a][ga[a]];
                            profile_vals[a] = values[a][ga[a]];
                        }
                        position[axis] = coords[axis][ga[axis]] + t * step[axis];
                        grad[axis] = (1.0 - t) * d1s[axis][ga[axis]] + t * d1s[axis][gb[axis]];
                        let grid_value_sum = (0..3)
                            .filter(|&a| a != axis)
                            .map(|a| profile_vals[a])
                            .sum::<f64>();
                        profile_vals[axis] =
                            (1.0 - t) * values[axis][ga[axis]] + t * values[axis][gb[axis]];

                        let sq = grad[0] * grad[0] + grad[1] * grad[1] + grad[2] * grad[2];
                        let lorentz = sq - 2.0 * grad[2] * grad[2];
                        let margin = if sq == 0.0 { 0.0 } else { lorentz / sq };
                        let constants = surface.constants();
                        let a_res =
                            zmc_identity_residual(constants, profile_vals[0], profile_vals[1])
                                .abs()
                                / zmc_identity_scale(constants, profile_vals[0], profile_vals[1]);
                        let audit_bound = 0.5
                            * cell_diagonal
                            * corner_grad_norm(ga).max(corner_grad_norm(gb));

                        vertices.push(MeshVertex {
                            position,
                            margin,
                            class: CausalClass::from_margin(margin, cfg.lightlike_tol),
                            identity_residual: a_res,
                            audit_bound,
                            grid_value_sum,
                            off_axis: Axis::from_index(axis),
                        });
                        vertex_grads.push(grad);
                        vertices.len() - 1
                    });
                    edge_verts[e] = id;
                }

                let tri_row = &tables::CELL_TRIANGLES[config];
                for tri in tri_row.chunks(3) {
                    if tri[0] < 0 {
                        break;
                    }
                    let ids =
                        [edge_verts[tri[0] as usize], edge_verts[tri[1] as usize], edge_verts[tri[2] as usize]];
                    if ids[0] == ids[1] || ids[1] == ids[2] || ids[0] == ids[2] {
                        continue; // interpolation collapsed the triangle
                    }
                    triangles.push(orient(ids, &vertices, &vertex_grads));
                }
            }
        }
    }

    if triangles.is_empty() {
        return Err(ZmcError::EmptyLevelSet);
    }
    Ok(Mesh { vertices, triangles, cell_diagonal })
}

/// Order a triangle so that its normal points toward the `F > 0` side, using
/// the averaged vertex gradients as the reference direction.
fn orient(ids: [usize; 3], vertices: &[MeshVertex], grads: &[[f64; 3]]) -> [usize; 3] {
    let p = |i: usize| vertices[ids[i]].position;
    let (p0, p1, p2) = (p(0), p(1), p(2));
    let e1 = [p1[0] - p0[0], p1[1] - p0[1], p1[2] - p0[2]];
    let e2 = [p2[0] - p0[0], p2[1] - p0[1], p2[2] - p0[2]];
    let normal = [
        e1[1] * e2[2] - e1[2] * e2[1],
        e1[2] * e2[0] - e1[0] * e2[2],
        e1[0] * e2[1] - e1[1] * e2[0],
    ];
    let mut g = [0.0; 3];
    for &id in &ids {
        for a in 0..3 {
            g[a] += grads[id][a];
        }
    }
    if normal[0] * g[0] + normal[1] * g[1] + normal[2] * g[2] < 0.0 {
        [ids[0], ids[2], ids[1]]
    } else {
        ids
    }
}

fn class_color(class: CausalClass) -> &'static str {
    match class {
        CausalClass::Spacelike { .. } => "0 0 1",
        CausalClass::Timelike { .. } => "1 0 0",
        CausalClass::Lightlike { .. } => "0 1 0",
    }
}

impl Mesh {
    /// Re-evaluate `F` exactly at every vertex and compare against the
    /// per-vertex first-order allowance. Costs one axis-map evaluation per
    /// vertex (the other two profile values are cached grid values).
    pub fn audit(&self, surface: &Surface) -> Result<MeshAudit> {
        let mut max_f = 0.0_f64;
        let mut worst = 0.0_f64;
        for v in &self.vertices {
            let off = surface.map(v.off_axis).value(v.position[v.off_axis.index()])?;
            let f = (v.grid_value_sum + off).abs();
            max_f = max_f.max(f);
            worst = worst.max(f / v.audit_bound.max(f64::MIN_POSITIVE));
        }
        Ok(MeshAudit { vertices: self.vertices.len(), max_f_value: max_f, worst_ratio: worst })
    }

    /// Write a Wavefront OBJ with per-vertex colors (`v x y z r g b`):
    /// spacelike blue, timelike red, lightlike green, faces 1-indexed.
    pub fn write_obj(&self, out: &mut dyn Write) -> io::Result<()> {
        writeln!(out, "# separable zero-mean-curvature level set")?;
        writeln!(out, "# vertex format: v x y z r g b")?;
        writeln!(out, "# colors: spacelike = blue, timelike = red, lightlike = green")?;
        for v in &self.vertices {
            writeln!(
                out,
                "v {:.9} {:.9} {:.9} {}",
                v.position[0],
                v.position[1],
                v.position[2],
                class_color(v.class)
            )?;
        }
        for t in &self.triangles {
            writeln!(out, "f {} {} {}", t[0] + 1, t[1] + 1, t[2] + 1)?;
        }
        Ok(())
    }

    /// Write the vertex table as CSV with the fixed six-column schema
    /// `x,y,z,class,margin,A_residual`.
    pub fn write_csv(&self, out: &mut dyn Write) -> io::Result<()> {
        writeln!(out, "x,y,z,class,margin,A_residual")?;
        for v in &self.vertices {
            writeln!(
                out,
                "{:.9},{:.9},{:.9},{},{:.6e},{:.6e}",
                v.position[0],
                v.position[1],
                v.position[2],
                v.class.name(),
                v.margin,
                v.identity_residual
            )?;
        }
        Ok(())
    }

    /// Total Euclidean surface area of the triangulation.
    pub fn area(&self) -> f64 {
        let mut total = 0.0;
        for t in &self.triangles {
            let p = |i: usize| self.vertices[t[i]].position;
            let (p0, p1, p2) = (p(0), p(1), p(2));
            let e1 = [p1[0] - p0[0], p1[1] - p0[1], p1[2] - p0[2]];
            let e2 = [p2[0] - p0[0], p2[1] - p0[1], p2[2] - p0[2]];
            let n = [
                e1[1] * e2[2] - e1[2] * e2[1],
                e1[2] * e2[0] - e1[0] * e2[2],
                e1[0] * e2[1] - e1[1] * e2[0],
            ];
            total += 0.5 * (n[0] * n[0] + n[1] * n[1] + n[2] * n[2]).sqrt();
        }
        total
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::profiles::ClosedFormMap;
    use crate::types::{Box3, CaseK, CoeffRow, ConstantsTriple, Profile, Sign};
    use std::collections::HashMap;
    use std::sync::Arc;

    const INF: f64 = f64::INFINITY;

    /// `x² + y² + z² − 1 = 0` as a separable field: `f(x) = x² − 1`,
    /// `g(y) = y²`, `h(z) = z²`. Each piece is an exact member of the
    /// quadratic family (`f′² = 4x² = 4(u + 1)`, etc.), so analytic second
    /// derivatives work too — but the coefficient rows do *not* satisfy the
    /// zero-mean-curvature constraints: a sphere is not such a surface. Mesh
    /// extraction never assumes they do.
    fn sphere() -> Surface {
        let prof = |axis, a, b| {
            Profile::new(
                axis,
                CaseK::Zero,
                CoeffRow::new(a, b, 0.0),
                Sign::Plus,
                (-INF, INF),
                (0.0, 0.0),
            )
        };
        let fx = ClosedFormMap::new(
            prof(Axis::X, 4.0, 4.0),
            (-INF, INF),
            |x| x * x - 1.0,
            |x| 2.0 * x,
        );
        let gy =
            ClosedFormMap::new(prof(Axis::Y, 0.0, 4.0), (-INF, INF), |y| y * y, |y| 2.0 * y);
        let hz =
            ClosedFormMap::new(prof(Axis::Z, 0.0, 4.0), (-INF, INF), |z| z * z, |z| 2.0 * z);
        let constants = ConstantsTriple::new(
            CaseK::Zero,
            [CoeffRow::new(4.0, 4.0, 0.0), CoeffRow::new(0.0, 4.0, 0.0), CoeffRow::new(0.0, 4.0, 0.0)],
        );
        Surface::new(
            [Arc::new(fx), Arc::new(gy), Arc::new(hz)],
            constants,
            Box3::new([-1.3, -1.3, -1.3], [1.3, 1.3, 1.3]),
        )
    }

    #[test]
    fn sphere_mesh_is_a_closed_manifold() {
        let surface = sphere();
        let mesh = extract(&surface, &MeshConfig { resolution: 24, ..Default::default() })
            .expect("sphere crosses the box");

        // Every undirected edge is shared by exactly two triangles.
        let mut edge_count: HashMap<(usize, usize), usize> = HashMap::new();
        for t in &mesh.triangles {
            for (a, b) in [(t[0], t[1]), (t[1], t[2]), (t[2], t[0])] {
                *edge_count.entry((a.min(b), a.max(b))).or_insert(0) += 1;
            }
        }
        assert!(edge_count.values().all(|&c| c == 2), "open or non-manifold edge");

        // Euler characteristic of a sphere.
        let v = mesh.vertices.len() as i64;
        let e = edge_count.len() as i64;
        let f = mesh.triangles.len() as i64;
        assert_eq!(v - e + f, 2);

        // Area of the unit sphere, to discretization accuracy.
        let area = mesh.area();
        assert!(
            (area - 4.0 * std::f64::consts::PI).abs() < 0.05 * 4.0 * std::f64::consts::PI,
            "area {area}"
        );
    }

    #[test]
    fn sphere_mesh_orientation_points_outward() {
        let surface = sphere();
        let mesh = extract(&surface, &MeshConfig { resolution: 16, ..Default::default() }).unwrap();
        // ∇F = 2(x, y, z) points away from the origin, so every oriented
        // normal must too.
        for t in &mesh.triangles {
            let p = |i: usize| mesh.vertices[t[i]].position;
            let (p0, p1, p2) = (p(0), p(1), p(2));
            let e1 = [p1[0] - p0[0], p1[1] - p0[1], p1[2] - p0[2]];
            let e2 = [p2[0] - p0[0], p2[1] - p0[1], p2[2] - p0[2]];
            let n = [
                e1[1] * e2[2] - e1[2] * e2[1],
                e1[2] * e2[0] - e1[0] * e2[2],
                e1[0] * e2[1] - e1[1] * e2[0],
            ];
            let c = [
                (p0[0] + p1[0] + p2[0]) / 3.0,
                (p0[1] + p1[1] + p2[1]) / 3.0,
                (p0[2] + p1[2] + p2[2]) / 3.0,
            ];
            assert!(n[0] * c[0] + n[1] * c[1] + n[2] * c[2] > 0.0);
        }
    }

    #[test]
    fn sphere_mesh_passes_audit_and_shows_both_classes() {
        let surface = sphere();
        let mesh = extract(&surface, &MeshConfig { resolution: 20, ..Default::default() }).unwrap();
        let audit = mesh.audit(&surface).unwrap();
        assert!(audit.passes(), "worst ratio {}", audit.worst_ratio);
        assert!(audit.max_f_value < mesh.cell_diagonal * 4.0);

        // On the unit sphere the margin is (x² + y² − z²) = 1 − 2z²: negative
        // caps near the poles (spacelike) and a positive band around the
        // equator (timelike), so both classes must appear.
        let has_spacelike =
            mesh.vertices.iter().any(|v| matches!(v.class, CausalClass::Spacelike { .. }));
        let has_timelike =
            mesh.vertices.iter().any(|v| matches!(v.class, CausalClass::Timelike { .. }));
        assert!(has_spacelike && has_timelike);
    }

    #[test]
    fn empty_level_set_is_reported() {
        let prof = Profile::new(
            Axis::X,
            CaseK::Zero,
            CoeffRow::new(0.0, 4.0, 0.0),
            Sign::Plus,
            (-INF, INF),
            (0.0, 0.0),
        );
        let away =
            ClosedFormMap::new(prof, (-INF, INF), |x| x * x + 10.0, |x| 2.0 * x);
        let gy = ClosedFormMap::new(
            Profile::new(Axis::Y, CaseK::Zero, CoeffRow::new(0.0, 4.0, 0.0), Sign::Plus, (-INF, INF), (0.0, 0.0)),
            (-INF, INF),
            |y| y * y,
            |y| 2.0 * y,
        );
        let hz = ClosedFormMap::new(
            Profile::new(Axis::Z, CaseK::Zero, CoeffRow::new(0.0, 4.0, 0.0), Sign::Plus, (-INF, INF), (0.0, 0.0)),
            (-INF, INF),
            |z| z * z,
            |z| 2.0 * z,
        );
        let surface = Surface::new(
            [Arc::new(away), Arc::new(gy), Arc::new(hz)],
            ConstantsTriple::new(CaseK::Zero, [CoeffRow::new(0.0, 4.0, 0.0); 3]),
            Box3::new([-1.0, -1.0, -1.0], [1.0, 1.0, 1.0]),
        );
        let err = extract(&surface, &MeshConfig { resolution: 8, ..Default::default() });
        assert!(matches!(err, Err(ZmcError::EmptyLevelSet)));
    }

    #[test]
    fn writers_produce_consistent_output() {
        let surface = sphere();
        let mesh = extract(&surface, &MeshConfig { resolution: 10, ..Default::default() }).unwrap();

        let mut obj = Vec::new();
        mesh.write_obj(&mut obj).unwrap();
        let obj = String::from_utf8(obj).unwrap();
        let v_lines: Vec<&str> = obj.lines().filter(|l| l.starts_with("v ")).collect();
        let f_lines: Vec<&str> = obj.lines().filter(|l| l.starts_with("f ")).collect();
        assert_eq!(v_lines.len(), mesh.vertices.len());
        assert_eq!(f_lines.len(), mesh.triangles.len());
        for line in &v_lines {
            assert_eq!(line.split_whitespace().count(), 7, "v x y z r g b: {line}");
        }
        for line in &f_lines {
            let ids: Vec<usize> =
                line.split_whitespace().skip(1).map(|s| s.parse().unwrap()).collect();
            assert_eq!(ids.len(), 3);
            assert!(ids.iter().all(|&i| i >= 1 && i <= mesh.vertices.len()));
        }

        let mut csv = Vec::new();
        mesh.write_csv(&mut csv).unwrap();
        let csv = String::from_utf8(csv).unwrap();
        let mut lines = csv.lines();
        assert_eq!(lines.next(), Some("x,y,z,class,margin,A_residual"));
        let rows: Vec<&str> = lines.collect();
        assert_eq!(rows.len(), mesh.vertices.len());
        for row in rows {
            assert_eq!(row.split(',').count(), 6);
        }
    }
}
