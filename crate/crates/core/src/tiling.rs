//! The tiling data model, gentiling/reptiling validators, the tiling graph
//! with vertex classification, and the derived analyses (corner roles,
//! grid-triviality, side-ratio rationality, vertex-degree audit).

use std::collections::{BTreeMap, BTreeSet};

use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::exact::{
    rational_sqrt, triangle_area2, Point, QuadScalar, Rational,
};
use crate::geom::{
    point_in_triangle, point_on_segment, triangles_interior_disjoint, ApproxBox,
};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum TilingError {
    #[error("coordinate radicand {found} does not match the scene radicand {scene}")]
    MixedRadicands { scene: Rational, found: Rational },
    #[error("master triangle is degenerate")]
    DegenerateMaster,
    #[error("tile {0} is degenerate")]
    DegenerateTile(usize),
}

/// A master triangle together with a list of tile triangles, all with exact
/// coordinates over one scene radicand.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Tiling {
    radicand: Rational,
    master: [Point; 3],
    tiles: Vec<[Point; 3]>,
}

fn check_point(p: &Point, scene: &Rational) -> Result<(), TilingError> {
    for c in [&p.x, &p.y] {
        let d = c.radicand();
        if !d.is_zero() && d != scene {
            return Err(TilingError::MixedRadicands {
                scene: scene.clone(),
                found: d.clone(),
            });
        }
    }
    Ok(())
}

impl Tiling {
    pub fn new(
        radicand: Rational,
        master: [Point; 3],
        tiles: Vec<[Point; 3]>,
    ) -> Result<Tiling, TilingError> {
        if radicand.is_negative() {
            return Err(TilingError::MixedRadicands {
                scene: radicand.clone(),
                found: radicand,
            });
        }
        for p in &master {
            check_point(p, &radicand)?;
        }
        for t in &tiles {
            for p in t {
                check_point(p, &radicand)?;
            }
        }
        if triangle_area2(&master[0], &master[1], &master[2]).is_zero() {
            return Err(TilingError::DegenerateMaster);
        }
        for (i, t) in tiles.iter().enumerate() {
            if triangle_area2(&t[0], &t[1], &t[2]).is_zero() {
                return Err(TilingError::DegenerateTile(i));
            }
        }
        Ok(Tiling {
            radicand,
            master,
            tiles,
        })
    }

    /// Builds a tiling, inferring the scene radicand from the coordinates.
    pub fn infer(master: [Point; 3], tiles: Vec<[Point; 3]>) -> Result<Tiling, TilingError> {
        let mut d = Rational::zero();
        for p in master.iter().chain(tiles.iter().flatten()) {
            for c in [&p.x, &p.y] {
                if !c.radicand().is_zero() {
                    d = c.radicand().clone();
                }
            }
        }
        Tiling::new(d, master, tiles)
    }

    pub fn radicand(&self) -> &Rational {
        &self.radicand
    }

    pub fn master(&self) -> &[Point; 3] {
        &self.master
    }

    pub fn tiles(&self) -> &[[Point; 3]] {
        &self.tiles
    }

    pub fn tile_count(&self) -> usize {
        self.tiles.len()
    }

    pub fn master_area2(&self) -> QuadScalar {
        triangle_area2(&self.master[0], &self.master[1], &self.master[2]).abs()
    }

    pub fn tile_area2(&self, i: usize) -> QuadScalar {
        let t = &self.tiles[i];
        triangle_area2(&t[0], &t[1], &t[2]).abs()
    }

    /// Squared side lengths, side `k` opposite corner `k`.
    pub fn master_sides2(&self) -> [QuadScalar; 3] {
        sides2(&self.master)
    }
}

pub fn sides2(t: &[Point; 3]) -> [QuadScalar; 3] {
    [
        t[2].sub(&t[1]).norm2(),
        t[0].sub(&t[2]).norm2(),
        t[1].sub(&t[0]).norm2(),
    ]
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    DegenerateTile(usize),
    NotSimilar(usize),
    AreaMismatch,
    Overlap(usize, usize),
    OutsideMaster(usize),
    UnequalTileAreas(usize, usize),
    TooFewTiles,
}

#[derive(Debug, Clone, Default)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn ok(&self) -> bool {
        self.violations.is_empty()
    }
}

fn sorted3(mut v: [QuadScalar; 3]) -> [QuadScalar; 3] {
    v.sort();
    v
}

/// Whether a tile is similar to the master: its multiset of squared side
/// lengths is proportional to the master's.
fn similar_to_master(master_sorted2: &[QuadScalar; 3], tile: &[Point; 3]) -> bool {
    let t = sorted3(sides2(tile));
    &t[0] * &master_sorted2[1] == &t[1] * &master_sorted2[0]
        && &t[0] * &master_sorted2[2] == &t[2] * &master_sorted2[0]
}

/// Checks that every tile is similar to the master, areas sum exactly, tiles
/// are pairwise interior-disjoint, and every tile lies inside the master.
pub fn validate_gentiling(t: &Tiling) -> ValidationReport {
    let mut report = ValidationReport::default();
    if t.tile_count() < 2 {
        report.violations.push(Violation::TooFewTiles);
    }
    let master_sorted = sorted3(t.master_sides2());
    let mut area_sum = QuadScalar::zero();
    for (i, tile) in t.tiles().iter().enumerate() {
        let a = triangle_area2(&tile[0], &tile[1], &tile[2]);
        if a.is_zero() {
            report.violations.push(Violation::DegenerateTile(i));
            continue;
        }
        area_sum = &area_sum + &a.abs();
        if !similar_to_master(&master_sorted, tile) {
            report.violations.push(Violation::NotSimilar(i));
        }
        if !tile
            .iter()
            .all(|p| point_in_triangle(p, t.master(), false))
        {
            report.violations.push(Violation::OutsideMaster(i));
        }
    }
    if area_sum != t.master_area2() {
        report.violations.push(Violation::AreaMismatch);
    }
    let boxes: Vec<ApproxBox> = t.tiles().iter().map(ApproxBox::of_triangle).collect();
    for i in 0..t.tile_count() {
        for j in (i + 1)..t.tile_count() {
            if !boxes[i].intersects(&boxes[j]) {
                continue;
            }
            if !triangles_interior_disjoint(&t.tiles()[i], &t.tiles()[j]) {
                report.violations.push(Violation::Overlap(i, j));
            }
        }
    }
    report
}

/// A gentiling whose tiles all have equal area; congruence follows from
/// similarity plus equal area.
pub fn validate_reptiling(t: &Tiling) -> ValidationReport {
    let mut report = validate_gentiling(t);
    if t.tile_count() > 0 {
        let a0 = t.tile_area2(0);
        for i in 1..t.tile_count() {
            if t.tile_area2(i) != a0 {
                report.violations.push(Violation::UnequalTileAreas(0, i));
                break;
            }
        }
    }
    report
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum VertexClass {
    Master,
    Half,
    Full,
}

/// Symbolic labels for the distinct master angle classes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AngleLabel {
    /// Corner A of a scalene master.
    Alpha,
    /// Corner B of a scalene master.
    Beta,
    /// Corner C of a scalene master.
    Gamma,
    /// The repeated angle of an isosceles master.
    Lambda,
    /// The unique angle of an isosceles master.
    Tau,
    /// The single class of an equilateral master.
    Any,
}

/// Exact comparable key for a corner angle in `(0, pi)`:
/// `cos = dot / sqrt(denom2)`. Two angles are equal iff the cosine signs
/// match and `dot^2 * other.denom2 == other.dot^2 * denom2`.
#[derive(Debug, Clone)]
pub struct AngleKey {
    dot: QuadScalar,
    denom2: QuadScalar,
}

impl AngleKey {
    pub fn of_corner(t: &[Point; 3], i: usize) -> AngleKey {
        let u = t[(i + 1) % 3].sub(&t[i]);
        let v = t[(i + 2) % 3].sub(&t[i]);
        AngleKey {
            dot: u.dot(&v),
            denom2: &u.norm2() * &v.norm2(),
        }
    }

    pub fn same_angle(&self, other: &AngleKey) -> bool {
        if self.dot.signum() != other.dot.signum() {
            return false;
        }
        &(&self.dot * &self.dot) * &other.denom2 == &(&other.dot * &other.dot) * &self.denom2
    }
}

/// The distinct angle classes of a master triangle, with the two equal
/// classes of an isosceles master merged.
#[derive(Debug, Clone)]
pub struct AngleClasses {
    pub keys: Vec<AngleKey>,
    pub labels: Vec<AngleLabel>,
    pub corner_class: [usize; 3],
}

impl AngleClasses {
    pub fn of_master(master: &[Point; 3]) -> AngleClasses {
        let corner_keys: Vec<AngleKey> =
            (0..3).map(|i| AngleKey::of_corner(master, i)).collect();
        let eq01 = corner_keys[0].same_angle(&corner_keys[1]);
        let eq02 = corner_keys[0].same_angle(&corner_keys[2]);
        let eq12 = corner_keys[1].same_angle(&corner_keys[2]);
        if eq01 && eq02 {
            AngleClasses {
                keys: vec![corner_keys[0].clone()],
                labels: vec![AngleLabel::Any],
                corner_class: [0, 0, 0],
            }
        } else if eq01 || eq02 || eq12 {
            // Repeated class first, unique class second.
            let (corner_class, repeated_corner, unique_corner) = if eq01 {
                ([0, 0, 1], 0, 2)
            } else if eq02 {
                ([0, 1, 0], 0, 1)
            } else {
                ([1, 0, 0], 1, 0)
            };
            AngleClasses {
                keys: vec![
                    corner_keys[repeated_corner].clone(),
                    corner_keys[unique_corner].clone(),
                ],
                labels: vec![AngleLabel::Lambda, AngleLabel::Tau],
                corner_class,
            }
        } else {
            AngleClasses {
                keys: corner_keys,
                labels: vec![AngleLabel::Alpha, AngleLabel::Beta, AngleLabel::Gamma],
                corner_class: [0, 1, 2],
            }
        }
    }

    pub fn len(&self) -> usize {
        self.keys.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Class index of a tile corner angle; `None` when it matches no master
    /// angle (cannot happen for tiles similar to the master).
    pub fn classify(&self, key: &AngleKey) -> Option<usize> {
        self.keys.iter().position(|k| k.same_angle(key))
    }
}

#[derive(Debug, Clone)]
pub struct GraphVertex {
    pub point: Point,
    pub class: VertexClass,
    pub hanging: bool,
    pub edge_adjacencies: usize,
    pub zeta_degrees: Vec<usize>,
}

/// The graph of a tiling: deduplicated tile corners as vertices and maximal
/// boundary segments split at every vertex as edges.
#[derive(Debug, Clone)]
pub struct TilingGraph {
    pub vertices: Vec<GraphVertex>,
    pub edges: Vec<(usize, usize)>,
    pub angle_classes: AngleClasses,
    pub full_count: usize,
    pub half_count: usize,
}

impl TilingGraph {
    pub fn vertex_index(&self, p: &Point) -> Option<usize> {
        self.vertices
            .binary_search_by(|v| v.point.cmp(p))
            .ok()
    }

    pub fn hanging_count(&self) -> usize {
        self.vertices.iter().filter(|v| v.hanging).count()
    }
}

/// Builds the tiling graph. Vertex order is lexicographic by `(x, y)`, so
/// identical inputs produce identical graphs.
pub fn build_graph(t: &Tiling) -> TilingGraph {
    let classes = AngleClasses::of_master(t.master());
    let mut point_set: BTreeSet<Point> = BTreeSet::new();
    for tile in t.tiles() {
        for p in tile {
            point_set.insert(p.clone());
        }
    }
    let points: Vec<Point> = point_set.into_iter().collect();
    let index: BTreeMap<&Point, usize> =
        points.iter().enumerate().map(|(i, p)| (p, i)).collect();

    let mut zeta = vec![vec![0usize; classes.len()]; points.len()];
    let mut edge_adj = vec![0usize; points.len()];
    let mut edges: BTreeSet<(usize, usize)> = BTreeSet::new();

    for tile in t.tiles() {
        for i in 0..3 {
            let key = AngleKey::of_corner(tile, i);
            let class = classes
                .classify(&key)
                .expect("tile corner angle matches no master angle");
            zeta[index[&tile[i]]][class] += 1;
        }
        // Split each side at every vertex lying on it.
        for i in 0..3 {
            let a = &tile[(i + 1) % 3];
            let b = &tile[(i + 2) % 3];
            let dir = b.sub(a);
            let mut on_side: Vec<(QuadScalar, usize)> = Vec::new();
            for (pi, p) in points.iter().enumerate() {
                if point_on_segment(p, a, b, false) {
                    on_side.push((dir.dot(&p.sub(a)), pi));
                } else if point_on_segment(p, a, b, true) {
                    unreachable!();
                }
            }
            on_side.sort_by(|x, y| x.0.cmp(&y.0));
            for w in on_side.windows(2) {
                let (u, v) = (w[0].1, w[1].1);
                edges.insert((u.min(v), u.max(v)));
            }
            // Interior points of this side are edge-adjacent to this tile.
            for (_, pi) in &on_side {
                let p = &points[*pi];
                if p != a && p != b {
                    edge_adj[*pi] += 1;
                }
            }
        }
    }

    let master = t.master();
    let mut vertices = Vec::with_capacity(points.len());
    let mut full_count = 0;
    let mut half_count = 0;
    for (pi, p) in points.iter().enumerate() {
        let is_master = master.iter().any(|m| m == p);
        let on_master_side = !is_master
            && (0..3).any(|k| {
                point_on_segment(p, &master[(k + 1) % 3], &master[(k + 2) % 3], true)
            });
        let (class, hanging) = if is_master {
            (VertexClass::Master, false)
        } else if on_master_side {
            half_count += 1;
            (VertexClass::Half, false)
        } else if edge_adj[pi] > 0 {
            half_count += 1;
            (VertexClass::Half, true)
        } else {
            full_count += 1;
            (VertexClass::Full, false)
        };
        vertices.push(GraphVertex {
            point: p.clone(),
            class,
            hanging,
            edge_adjacencies: edge_adj[pi],
            zeta_degrees: zeta[pi].clone(),
        });
    }

    TilingGraph {
        vertices,
        edges: edges.into_iter().collect(),
        angle_classes: classes,
        full_count,
        half_count,
    }
}

/// The vertex-count identity `r = 2f + h + 1` of valid gentilings.
pub fn check_euler(g: &TilingGraph, r: usize) -> bool {
    r == 2 * g.full_count + g.half_count + 1
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CornerRole {
    Fan(usize),
    Cap,
    Neither,
}

/// Classifies each master corner: a fan when two or more tiles meet there, a
/// cap when the single tile's opposite edge is subdivided by other vertices.
pub fn detect_caps_fans(t: &Tiling, g: &TilingGraph) -> [CornerRole; 3] {
    let mut roles = [CornerRole::Neither, CornerRole::Neither, CornerRole::Neither];
    for (k, corner) in t.master().iter().enumerate() {
        let adjacent: Vec<&[Point; 3]> = t
            .tiles()
            .iter()
            .filter(|tile| tile.iter().any(|p| p == corner))
            .collect();
        if adjacent.len() >= 2 {
            roles[k] = CornerRole::Fan(adjacent.len());
        } else if let [tile] = adjacent.as_slice() {
            let ci = tile.iter().position(|p| p == corner).unwrap();
            let (a, b) = (&tile[(ci + 1) % 3], &tile[(ci + 2) % 3]);
            let subdivided = g
                .vertices
                .iter()
                .any(|v| point_on_segment(&v.point, a, b, true));
            if subdivided {
                roles[k] = CornerRole::Cap;
            }
        }
    }
    roles
}

/// Barycentric-style coordinates of `p` in the master frame:
/// `p = m0 + s*(m1 - m0) + t*(m2 - m0)`.
fn master_frame_coords(master: &[Point; 3], p: &Point) -> (QuadScalar, QuadScalar) {
    let u = master[1].sub(&master[0]);
    let v = master[2].sub(&master[0]);
    let det = u.cross(&v);
    let w = p.sub(&master[0]);
    (&w.cross(&v) / &det, &u.cross(&w) / &det)
}

/// Whether every tile is a union of cells of some `n`-grid of the master.
///
/// In master-frame coordinates a tile qualifies iff its vertices are rational
/// and its edges run in the three grid directions; the finest grid is then
/// the lcm of the coordinate denominators, and grid-aligned triangles with
/// lattice corners are automatically unions of cells.
pub fn is_trivial_tiling(t: &Tiling) -> bool {
    for tile in t.tiles() {
        let mut coords = Vec::with_capacity(3);
        for p in tile {
            let (s, tt) = master_frame_coords(t.master(), p);
            let (s, tt) = match (s.as_rational(), tt.as_rational()) {
                (Some(a), Some(b)) => (a.clone(), b.clone()),
                _ => return false,
            };
            coords.push((s, tt));
        }
        for i in 0..3 {
            let (s0, t0) = &coords[i];
            let (s1, t1) = &coords[(i + 1) % 3];
            let ds = s1 - s0;
            let dt = t1 - t0;
            let grid_dir = ds.is_zero() || dt.is_zero() || (&ds + &dt).is_zero();
            if !grid_dir {
                return false;
            }
        }
    }
    true
}

/// The finest grid scale compatible with a trivial tiling, when one exists.
pub fn trivial_grid_scale(t: &Tiling) -> Option<num_bigint::BigInt> {
    if !is_trivial_tiling(t) {
        return None;
    }
    let mut n = num_bigint::BigInt::one();
    for tile in t.tiles() {
        for p in tile {
            let (s, tt) = master_frame_coords(t.master(), p);
            for c in [s, tt] {
                n = n.lcm(c.as_rational()?.denom());
            }
        }
    }
    Some(n)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SideRatio {
    Rational(Rational),
    Irrational,
}

#[derive(Debug, Clone)]
pub struct SideRatioReport {
    /// One entry per side pair `(i, j)` with `i < j`, ratio given as
    /// `shorter/longer` when rational.
    pub pairs: Vec<(usize, usize, SideRatio)>,
    /// At least one pair of sides has a rational length ratio other than 1.
    pub rational_triangle: bool,
}

/// Decides, for each pair of master sides, whether the length ratio is
/// rational, reporting it in lowest terms.
pub fn side_ratio_rationality(t: &Tiling) -> SideRatioReport {
    let s2 = t.master_sides2();
    let mut pairs = Vec::new();
    let mut rational_triangle = false;
    for i in 0..3 {
        for j in (i + 1)..3 {
            let (num, den) = if s2[i].cmp_exact(&s2[j]) == std::cmp::Ordering::Less {
                (&s2[i], &s2[j])
            } else {
                (&s2[j], &s2[i])
            };
            let ratio2 = num / den;
            let entry = match ratio2.as_rational().and_then(rational_sqrt) {
                Some(r) => {
                    if r != Rational::one() {
                        rational_triangle = true;
                    }
                    SideRatio::Rational(r)
                }
                None => SideRatio::Irrational,
            };
            pairs.push((i, j, entry));
        }
    }
    SideRatioReport {
        pairs,
        rational_triangle,
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum AuditError {
    #[error("audit requires a tiling without hanging vertices")]
    HangingVerticesPresent,
    #[error("audit requires a valid reptiling")]
    NotAReptiling,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AuditMode {
    Scalene,
    Isosceles,
    Equilateral,
}

#[derive(Debug, Clone)]
pub struct AuditViolation {
    pub vertex: usize,
    pub expected: Vec<usize>,
    pub found: Vec<usize>,
}

#[derive(Debug, Clone)]
pub struct AuditReport {
    pub mode: AuditMode,
    pub violations: Vec<AuditViolation>,
}

impl AuditReport {
    pub fn ok(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Verifies the per-class degree identities of reptilings without hanging
/// vertices: full vertices carry two corners of every class (four of the
/// repeated class when the master is isosceles), boundary vertices half of
/// that, and the master corners one adjacency of each class in total.
pub fn audit_vertex_degrees(t: &Tiling, g: &TilingGraph) -> Result<AuditReport, AuditError> {
    if g.vertices.iter().any(|v| v.hanging) {
        return Err(AuditError::HangingVerticesPresent);
    }
    if !validate_reptiling(t).ok() {
        return Err(AuditError::NotAReptiling);
    }
    let classes = &g.angle_classes;
    let mode = match classes.labels.as_slice() {
        [AngleLabel::Any] => AuditMode::Equilateral,
        [AngleLabel::Lambda, AngleLabel::Tau] => AuditMode::Isosceles,
        _ => AuditMode::Scalene,
    };
    let mut violations = Vec::new();
    let mut master_totals = vec![0usize; classes.len()];
    for (vi, v) in g.vertices.iter().enumerate() {
        match v.class {
            VertexClass::Master => {
                for (c, d) in v.zeta_degrees.iter().enumerate() {
                    master_totals[c] += d;
                }
            }
            VertexClass::Full | VertexClass::Half => {
                let scale = if v.class == VertexClass::Full { 2 } else { 1 };
                let expected: Vec<usize> = match mode {
                    AuditMode::Scalene => vec![scale; 3],
                    AuditMode::Isosceles => vec![2 * scale, scale],
                    AuditMode::Equilateral => vec![3 * scale],
                };
                if v.zeta_degrees != expected {
                    violations.push(AuditViolation {
                        vertex: vi,
                        expected,
                        found: v.zeta_degrees.clone(),
                    });
                }
            }
        }
    }
    let expected_master: Vec<usize> = match mode {
        AuditMode::Scalene => vec![1; 3],
        AuditMode::Isosceles => vec![2, 1],
        AuditMode::Equilateral => vec![3],
    };
    if master_totals != expected_master {
        violations.push(AuditViolation {
            vertex: usize::MAX,
            expected: expected_master,
            found: master_totals,
        });
    }
    Ok(AuditReport { mode, violations })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct;
    use crate::exact::rat;

    fn acute_master() -> [Point; 3] {
        [
            Point::from_ints(0, 0),
            Point::from_ints(4, 0),
            Point::from_ints(1, 2),
        ]
    }

    #[test]
    fn trivial_grid_validates() {
        let t = construct::trivial_reptiling(&acute_master(), 2).unwrap();
        assert_eq!(t.tile_count(), 4);
        assert!(validate_reptiling(&t).ok());
    }

    #[test]
    fn perturbed_tile_breaks_validation() {
        let t = construct::trivial_reptiling(&acute_master(), 2).unwrap();
        let shifted = |dx: i64| {
            let mut tiles = t.tiles().to_vec();
            let shift = crate::exact::Vec2::new(
                QuadScalar::from_rational(crate::exact::ratio(dx, 100)),
                QuadScalar::zero(),
            );
            tiles[0] = [
                tiles[0][0].add(&shift),
                tiles[0][1].add(&shift),
                tiles[0][2].add(&shift),
            ];
            Tiling::new(rat(0), t.master().clone(), tiles).unwrap()
        };
        let right = validate_gentiling(&shifted(1));
        assert!(!right.ok());
        assert!(right
            .violations
            .iter()
            .any(|v| matches!(v, Violation::Overlap(_, _))));
        let left = validate_gentiling(&shifted(-1));
        assert!(!left.ok());
        assert!(left
            .violations
            .iter()
            .any(|v| matches!(v, Violation::OutsideMaster(0))));
    }

    #[test]
    fn graph_counts_trivial() {
        // f = (n-1)(n-2)/2 and h = 3(n-1) for the n-grid.
        for n in 2..=6u32 {
            let t = construct::trivial_reptiling(&acute_master(), n).unwrap();
            let g = build_graph(&t);
            let f = ((n - 1) * (n - 2) / 2) as usize;
            let h = (3 * (n - 1)) as usize;
            assert_eq!(g.full_count, f, "n = {n}");
            assert_eq!(g.half_count, h, "n = {n}");
            assert!(check_euler(&g, t.tile_count()));
            assert_eq!(g.hanging_count(), 0);
        }
    }

    #[test]
    fn euler_negative_control() {
        let t = construct::trivial_reptiling(&acute_master(), 2).unwrap();
        let g = build_graph(&t);
        // Fabricated count: r = 2 would need h = 1 here.
        assert!(!check_euler(&g, 2));
    }

    #[test]
    fn caps_fans_trivial_all_neither() {
        let t = construct::trivial_reptiling(&acute_master(), 3).unwrap();
        let g = build_graph(&t);
        assert_eq!(
            detect_caps_fans(&t, &g),
            [CornerRole::Neither, CornerRole::Neither, CornerRole::Neither]
        );
    }

    #[test]
    fn two_tile_split_has_fan_at_right_angle() {
        let master = [
            Point::from_ints(0, 0),
            Point::from_ints(2, 0),
            Point::from_ints(1, 1),
        ];
        let tiles = vec![
            [
                Point::from_ints(0, 0),
                Point::from_ints(1, 1),
                Point::from_ints(1, 0),
            ],
            [
                Point::from_ints(1, 1),
                Point::from_ints(2, 0),
                Point::from_ints(1, 0),
            ],
        ];
        let t = Tiling::new(rat(0), master, tiles).unwrap();
        assert!(validate_reptiling(&t).ok());
        let g = build_graph(&t);
        let roles = detect_caps_fans(&t, &g);
        assert_eq!(roles[2], CornerRole::Fan(2));
        assert_eq!(roles[0], CornerRole::Neither);
        assert_eq!(roles[1], CornerRole::Neither);
    }

    #[test]
    fn trivial_detection() {
        for n in 2..=8u32 {
            let t = construct::trivial_reptiling(&acute_master(), n).unwrap();
            assert!(is_trivial_tiling(&t), "n = {n}");
            assert_eq!(
                trivial_grid_scale(&t),
                Some(num_bigint::BigInt::from(n)),
                "n = {n}"
            );
        }
    }

    #[test]
    fn side_ratios_3_4_5() {
        let master = [
            Point::from_ints(0, 0),
            Point::from_ints(3, 0),
            Point::from_ints(0, 4),
        ];
        let t = Tiling::new(rat(0), master, vec![]).unwrap();
        let report = side_ratio_rationality(&t);
        assert!(report.rational_triangle);
        let ratios: Vec<Rational> = report
            .pairs
            .iter()
            .map(|(_, _, r)| match r {
                SideRatio::Rational(q) => q.clone(),
                SideRatio::Irrational => panic!("expected rational"),
            })
            .collect();
        let expect: BTreeSet<Rational> = [
            crate::exact::ratio(3, 4),
            crate::exact::ratio(3, 5),
            crate::exact::ratio(4, 5),
        ]
        .into_iter()
        .collect();
        assert_eq!(ratios.into_iter().collect::<BTreeSet<_>>(), expect);
    }

    #[test]
    fn side_ratios_irrational_master() {
        let t = Tiling::new(rat(0), acute_master(), vec![]).unwrap();
        let report = side_ratio_rationality(&t);
        assert!(!report.rational_triangle);
        assert!(report
            .pairs
            .iter()
            .all(|(_, _, r)| *r == SideRatio::Irrational));
    }

    #[test]
    fn side_ratios_equilateral_not_rational_triangle() {
        // Equilateral over d = 3: all ratios are 1, so, despite being
        // rational numbers, the triangle does not count as rational.
        let master = [
            Point::from_ints(0, 0),
            Point::from_ints(2, 0),
            Point::new(
                QuadScalar::from_int(1),
                QuadScalar::sqrt_of(rat(3)),
            ),
        ];
        let t = Tiling::new(rat(3), master, vec![]).unwrap();
        let report = side_ratio_rationality(&t);
        assert!(!report.rational_triangle);
        for (_, _, r) in &report.pairs {
            assert_eq!(*r, SideRatio::Rational(Rational::one()));
        }
    }

    #[test]
    fn audit_trivial_scalene() {
        let t = construct::trivial_reptiling(&acute_master(), 3).unwrap();
        let g = build_graph(&t);
        let report = audit_vertex_degrees(&t, &g).unwrap();
        assert_eq!(report.mode, AuditMode::Scalene);
        assert!(report.ok());
    }

    #[test]
    fn audit_trivial_isosceles() {
        let master = [
            Point::from_ints(0, 0),
            Point::from_ints(2, 0),
            Point::new(
                QuadScalar::from_int(1),
                QuadScalar::new(rat(0), rat(1), rat(15)),
            ),
        ];
        let t = construct::trivial_reptiling(&master, 3).unwrap();
        let g = build_graph(&t);
        assert_eq!(g.angle_classes.labels, vec![AngleLabel::Lambda, AngleLabel::Tau]);
        let report = audit_vertex_degrees(&t, &g).unwrap();
        assert_eq!(report.mode, AuditMode::Isosceles);
        assert!(report.ok());
    }

    #[test]
    fn audit_trivial_equilateral() {
        let master = [
            Point::from_ints(0, 0),
            Point::from_ints(2, 0),
            Point::new(QuadScalar::from_int(1), QuadScalar::sqrt_of(rat(3))),
        ];
        let t = construct::trivial_reptiling(&master, 3).unwrap();
        let g = build_graph(&t);
        let report = audit_vertex_degrees(&t, &g).unwrap();
        assert_eq!(report.mode, AuditMode::Equilateral);
        assert!(report.ok());
    }

    #[test]
    fn zeta_degree_sum_is_r_per_class() {
        for n in 2..=5u32 {
            let t = construct::trivial_reptiling(&acute_master(), n).unwrap();
            let g = build_graph(&t);
            for c in 0..g.angle_classes.len() {
                let total: usize = g.vertices.iter().map(|v| v.zeta_degrees[c]).sum();
                assert_eq!(total, t.tile_count());
            }
        }
    }
}
