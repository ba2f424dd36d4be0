//! Exhaustive backtracking enumeration of the `n^2`-reptilings of a master
//! triangle.
//!
//! The search grows a partial tiling from the lexicographically smallest
//! *convex corner* of the uncovered region: a boundary point whose uncovered
//! angular gap is less than a half turn. Any tile covering the start of such
//! a gap must sit flush against the gap's first ray with a corner at the
//! point, so branching over the finitely many flush placements is complete.
//! Every placement stays inside the scene field `Q(sqrt(d))`; a flush length
//! ratio whose square root does not exist in the field cannot occur in any
//! tiling whose segment decompositions balance over the field, and is
//! pruned.

use std::collections::{BTreeMap, BTreeSet};

use num_traits::Zero;

use crate::exact::{triangle_area2, Point, QuadScalar, Rational, Vec2};
use crate::geom::{point_on_segment, triangles_interior_disjoint, ApproxBox, Direction};
use crate::tiling::{sides2, validate_reptiling, Tiling};

/// Limits for backtracking searches.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchBudget {
    pub max_nodes: u64,
    pub max_tilings: u64,
}

impl SearchBudget {
    pub fn new(max_nodes: u64, max_tilings: u64) -> SearchBudget {
        SearchBudget {
            max_nodes,
            max_tilings,
        }
    }
}

impl Default for SearchBudget {
    fn default() -> SearchBudget {
        SearchBudget::new(2_000_000, 10_000)
    }
}

#[derive(Debug, Clone)]
pub struct EnumerationResult {
    pub tilings: Vec<Tiling>,
    pub exhaustive: bool,
    pub nodes_explored: u64,
}

/// Angular comparison key: an angle in `(0, pi)` with
/// `cos = dot / sqrt(denom2)`.
#[derive(Clone, Debug)]
struct CosKey {
    dot: QuadScalar,
    denom2: QuadScalar,
}

impl CosKey {
    fn of_dirs(u: &Vec2, v: &Vec2) -> CosKey {
        CosKey {
            dot: u.dot(v),
            denom2: &u.norm2() * &v.norm2(),
        }
    }

    /// Orders by angle, not by cosine.
    fn cmp_angle(&self, other: &CosKey) -> std::cmp::Ordering {
        use std::cmp::Ordering;
        let s1 = self.dot.signum();
        let s2 = other.dot.signum();
        if s1 != s2 {
            // A larger cosine sign means a smaller angle.
            return s2.cmp(&s1);
        }
        let lhs = &(&self.dot * &self.dot) * &other.denom2;
        let rhs = &(&other.dot * &other.dot) * &self.denom2;
        match (lhs.cmp_exact(&rhs), s1) {
            (Ordering::Equal, _) => Ordering::Equal,
            (ord, 1) => ord.reverse(),
            (ord, -1) => ord,
            (_, _) => Ordering::Equal,
        }
    }
}

/// CCW position comparison of `x` and `y` relative to base direction `a`
/// (position 0), positions in `[0, 2 pi)`.
fn ccw_cmp_from(a: &Direction, x: &Direction, y: &Direction) -> std::cmp::Ordering {
    use std::cmp::Ordering;
    let xa = x == a;
    let ya = y == a;
    if xa && ya {
        return Ordering::Equal;
    }
    if xa {
        return Ordering::Less;
    }
    if ya {
        return Ordering::Greater;
    }
    let half = |d: &Direction| -> u8 {
        // Strictly within the first half turn from a, or at the half turn
        // and beyond. Parallel-same was handled above.
        if a.0.cross(&d.0).signum() > 0 {
            0
        } else {
            1
        }
    };
    let (hx, hy) = (half(x), half(y));
    if hx != hy {
        return hx.cmp(&hy);
    }
    match x.0.cross(&y.0).signum() {
        1 => Ordering::Less,
        -1 => Ordering::Greater,
        _ => Ordering::Equal,
    }
}

/// Whether the sector `[s, e]` lies within the CCW wedge `[a, b]`. Sectors
/// never straddle a wedge boundary, so endpoint tests suffice.
fn sector_in_wedge(a: &Direction, b: &Direction, s: &Direction, e: &Direction) -> bool {
    use std::cmp::Ordering;
    let start_ok = s == a || (s != b && ccw_cmp_from(a, s, b) == Ordering::Less);
    if !start_ok {
        return false;
    }
    e != a && ccw_cmp_from(a, e, b) != Ordering::Greater
}

type Tri = [Point; 3];

/// Uncovered angular gaps at a point, as CCW `(start, end)` arcs.
fn gap_arcs(v: &Point, master: &[Point; 3], placed: &[Tri]) -> Vec<(Direction, Direction)> {
    let mut wedges: Vec<(Direction, Direction)> = Vec::new();

    for t in placed {
        if let Some(i) = t.iter().position(|p| p == v) {
            let d1 = Direction::of(t[(i + 1) % 3].sub(&t[i]));
            let d2 = Direction::of(t[(i + 2) % 3].sub(&t[i]));
            if d1.0.cross(&d2.0).signum() > 0 {
                wedges.push((d1, d2));
            } else {
                wedges.push((d2, d1));
            }
        } else {
            for i in 0..3 {
                let (a, b) = (&t[(i + 1) % 3], &t[(i + 2) % 3]);
                if point_on_segment(v, a, b, true) {
                    let e = Direction::of(b.sub(v));
                    let third = t[i].sub(v);
                    if e.0.cross(&third).signum() > 0 {
                        let opp = e.opposite();
                        wedges.push((e, opp));
                    } else {
                        let opp = e.opposite();
                        wedges.push((opp, e));
                    }
                    break;
                }
            }
        }
    }

    // The complement of the master counts as covered.
    if let Some(k) = master.iter().position(|p| p == v) {
        let d_next = Direction::of(master[(k + 1) % 3].sub(v));
        let d_prev = Direction::of(master[(k + 2) % 3].sub(v));
        // CCW master: interior wedge (d_next, d_prev), outside the rest.
        wedges.push((d_prev, d_next));
    } else {
        for k in 0..3 {
            let (a, b) = (&master[(k + 1) % 3], &master[(k + 2) % 3]);
            if point_on_segment(v, a, b, true) {
                let e = Direction::of(b.sub(v));
                let third = master[k].sub(v);
                if e.0.cross(&third).signum() > 0 {
                    let opp = e.opposite();
                    wedges.push((opp, e));
                } else {
                    let opp = e.opposite();
                    wedges.push((e, opp));
                }
                break;
            }
        }
    }

    if wedges.is_empty() {
        return Vec::new();
    }

    let mut dirs: Vec<Direction> = Vec::new();
    for (a, b) in &wedges {
        for d in [a, b] {
            if !dirs.contains(d) {
                dirs.push(d.clone());
            }
        }
    }
    dirs.sort_by(|x, y| x.cmp_ccw(y));
    let m = dirs.len();
    let covered: Vec<bool> = (0..m)
        .map(|i| {
            let s = &dirs[i];
            let e = &dirs[(i + 1) % m];
            wedges.iter().any(|(a, b)| sector_in_wedge(a, b, s, e))
        })
        .collect();
    if covered.iter().all(|c| *c) {
        return Vec::new();
    }
    let start_at = match (0..m).find(|i| covered[*i]) {
        Some(i) => i,
        // No coverage at all cannot happen for points taken from placed
        // tiles or the master; return the full circle defensively.
        None => return vec![(dirs[0].clone(), dirs[0].clone())],
    };
    // Merge consecutive uncovered sectors into maximal arcs.
    let mut arcs = Vec::new();
    let mut i = start_at;
    loop {
        let next = (i + 1) % m;
        if covered[i] && !covered[next] {
            let run_start = next;
            let mut j = next;
            while !covered[j] {
                j = (j + 1) % m;
            }
            arcs.push((dirs[run_start].clone(), dirs[j].clone()));
            i = j;
        } else {
            i = next;
        }
        if i == start_at {
            break;
        }
    }
    arcs
}

struct ProtoTile {
    /// Squared side lengths, side `k` opposite corner `k`.
    sides2: [QuadScalar; 3],
    /// Unsigned doubled tile area.
    area2: QuadScalar,
    min_angle: CosKey,
    corners: Vec<CosKey>,
}

struct Searcher<'a> {
    master: [Point; 3],
    scene_d: Rational,
    proto: ProtoTile,
    target: usize,
    budget: &'a SearchBudget,
    reverse_order: bool,
    placed: Vec<Tri>,
    boxes: Vec<ApproxBox>,
    vertex_counts: BTreeMap<Point, usize>,
    results: BTreeSet<Vec<Vec<Point>>>,
    tilings: Vec<Vec<Tri>>,
    nodes: u64,
    truncated: bool,
}

fn canonical(tiles: &[Tri]) -> Vec<Vec<Point>> {
    let mut out: Vec<Vec<Point>> = tiles
        .iter()
        .map(|t| {
            let mut v = t.to_vec();
            v.sort();
            v
        })
        .collect();
    out.sort();
    out
}

impl<'a> Searcher<'a> {
    /// Lexicographically smallest point with an uncovered gap of less than a
    /// half turn, together with that gap.
    fn open_corner(&self) -> Option<(Point, Direction, Direction)> {
        for v in self.vertex_counts.keys() {
            for (s, e) in gap_arcs(v, &self.master, &self.placed) {
                if s.0.cross(&e.0).signum() > 0 {
                    return Some((v.clone(), s, e));
                }
            }
        }
        None
    }

    fn fits(&self, tile: &Tri) -> bool {
        if !tile
            .iter()
            .all(|p| crate::geom::point_in_triangle(p, &self.master, false))
        {
            return false;
        }
        let tb = ApproxBox::of_triangle(tile);
        for (i, other) in self.placed.iter().enumerate() {
            if tb.intersects(&self.boxes[i]) && !triangles_interior_disjoint(tile, other) {
                return false;
            }
        }
        true
    }

    /// All flush placements at `v` along ray `s` within the gap `[s, e]`.
    fn candidates(&self, v: &Point, s: &Direction, e: &Direction) -> Vec<Tri> {
        let mut seen: BTreeSet<Vec<Point>> = BTreeSet::new();
        let mut tris = Vec::new();
        let ray = &s.0;
        let ray_norm2 = ray.norm2();
        let gap_angle = CosKey::of_dirs(&s.0, &e.0);
        for corner in 0..3 {
            if self.proto.corners[corner].cmp_angle(&gap_angle).is_gt() {
                continue;
            }
            let g1 = (corner + 1) % 3;
            let g2 = (corner + 2) % 3;
            for (flush_opp, apex_opp) in [(g2, g1), (g1, g2)] {
                let flush2 = &self.proto.sides2[flush_opp];
                let apex2 = &self.proto.sides2[apex_opp];
                let opposite2 = &self.proto.sides2[corner];
                let ratio2 = flush2 / &ray_norm2;
                let t = match ratio2.sqrt_in_field(&self.scene_d) {
                    Some(t) => t,
                    None => continue,
                };
                let p = v.add(&ray.scale(&t));
                // Apex from the base by exact offsets: law of cosines along
                // the base, area quotient towards the CCW side.
                let base = p.sub(v);
                let along =
                    &(&(apex2 + flush2) - opposite2) / &(&QuadScalar::from_int(2) * flush2);
                let height = &self.proto.area2 / flush2;
                let w = v.add(&base.scale(&along).add(&base.perp().scale(&height)));
                let tile: Tri = [v.clone(), p, w];
                let apex_dir = Direction::of(tile[2].sub(v));
                let within = apex_dir == *e
                    || ccw_cmp_from(s, &apex_dir, e) != std::cmp::Ordering::Greater;
                if !within {
                    continue;
                }
                let mut key = tile.to_vec();
                key.sort();
                if seen.insert(key) {
                    tris.push(tile);
                }
            }
        }
        if self.reverse_order {
            tris.reverse();
        }
        tris
    }

    fn place(&mut self, tile: Tri) {
        self.boxes.push(ApproxBox::of_triangle(&tile));
        for p in &tile {
            *self.vertex_counts.entry(p.clone()).or_insert(0) += 1;
        }
        self.placed.push(tile);
    }

    fn unplace(&mut self) {
        let tile = self.placed.pop().unwrap();
        self.boxes.pop();
        for p in &tile {
            let c = self.vertex_counts.get_mut(p).unwrap();
            *c -= 1;
            if *c == 0 {
                self.vertex_counts.remove(p);
            }
        }
    }

    fn dfs(&mut self) {
        self.nodes += 1;
        if self.nodes > self.budget.max_nodes
            || self.tilings.len() as u64 >= self.budget.max_tilings
        {
            self.truncated = true;
            return;
        }
        if self.placed.len() == self.target {
            let key = canonical(&self.placed);
            if self.results.insert(key) {
                self.tilings.push(self.placed.clone());
            }
            return;
        }
        let (v, s, e) = match self.open_corner() {
            Some(c) => c,
            None => return,
        };
        // A gap smaller than the smallest tile angle can never be filled.
        if CosKey::of_dirs(&s.0, &e.0)
            .cmp_angle(&self.proto.min_angle)
            .is_lt()
        {
            return;
        }
        for tile in self.candidates(&v, &s, &e) {
            if !self.fits(&tile) {
                continue;
            }
            self.place(tile);
            self.dfs();
            self.unplace();
            if self.truncated {
                return;
            }
        }
    }
}

/// Enumerates all `n^2`-reptilings of the master, up to the budget. Every
/// returned tiling passes the reptiling validator; the exhaustiveness flag
/// is true only when the full search tree was explored.
pub fn enumerate_reptilings(
    master: &[Point; 3],
    n: u32,
    budget: &SearchBudget,
) -> EnumerationResult {
    enumerate_with_order(master, n, budget, false)
}

/// Variant with reversed candidate order, for checking that the output set
/// does not depend on the search order.
pub fn enumerate_with_order(
    master: &[Point; 3],
    n: u32,
    budget: &SearchBudget,
    reverse_order: bool,
) -> EnumerationResult {
    assert!(n >= 1, "n must be positive");
    let mut master = master.clone();
    if triangle_area2(&master[0], &master[1], &master[2]).signum() < 0 {
        master.swap(1, 2);
    }
    let mut scene_d = Rational::from_integer(0.into());
    for p in &master {
        for c in [&p.x, &p.y] {
            if !c.radicand().is_zero() {
                scene_d = c.radicand().clone();
            }
        }
    }
    let msides = sides2(&master);
    let nn2 = QuadScalar::from_int((n as i64) * (n as i64));
    let corners: Vec<CosKey> = (0..3)
        .map(|i| {
            let u = master[(i + 1) % 3].sub(&master[i]);
            let w = master[(i + 2) % 3].sub(&master[i]);
            CosKey::of_dirs(&u, &w)
        })
        .collect();
    let mut min_angle = corners[0].clone();
    for c in &corners[1..] {
        if c.cmp_angle(&min_angle).is_lt() {
            min_angle = c.clone();
        }
    }
    let area2 = triangle_area2(&master[0], &master[1], &master[2]).abs();
    let proto = ProtoTile {
        sides2: [&msides[0] / &nn2, &msides[1] / &nn2, &msides[2] / &nn2],
        area2: &area2 / &nn2,
        min_angle,
        corners,
    };
    let mut vertex_counts = BTreeMap::new();
    for p in &master {
        vertex_counts.insert(p.clone(), 1usize);
    }
    let mut searcher = Searcher {
        master: master.clone(),
        scene_d,
        proto,
        target: (n as usize) * (n as usize),
        budget,
        reverse_order,
        placed: Vec::new(),
        boxes: Vec::new(),
        vertex_counts,
        results: BTreeSet::new(),
        tilings: Vec::new(),
        nodes: 0,
        truncated: false,
    };
    searcher.dfs();
    let mut tilings: Vec<Tiling> = searcher
        .tilings
        .iter()
        .map(|tiles| {
            let t = Tiling::infer(master.clone(), tiles.clone()).expect("searched tile valid");
            debug_assert!(validate_reptiling(&t).ok());
            t
        })
        .collect();
    tilings.sort_by(|a, b| canonical(a.tiles()).cmp(&canonical(b.tiles())));
    EnumerationResult {
        tilings,
        exhaustive: !searcher.truncated,
        nodes_explored: searcher.nodes,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct;
    use crate::exact::rat;
    use crate::tiling::{build_graph, check_euler, is_trivial_tiling};

    fn budget() -> SearchBudget {
        SearchBudget::new(5_000_000, 10_000)
    }

    #[test]
    fn irrational_acute_master_n2_only_trivial() {
        let master = [
            Point::from_ints(0, 0),
            Point::from_ints(4, 0),
            Point::from_ints(1, 2),
        ];
        let result = enumerate_reptilings(&master, 2, &budget());
        assert!(result.exhaustive);
        assert_eq!(result.tilings.len(), 1);
        assert!(is_trivial_tiling(&result.tilings[0]));
    }

    #[test]
    fn right_isosceles_n2_has_multiple_tilings() {
        let master = [
            Point::from_ints(0, 0),
            Point::from_ints(2, 0),
            Point::from_ints(0, 2),
        ];
        let result = enumerate_reptilings(&master, 2, &budget());
        assert!(result.exhaustive);
        assert!(result.tilings.len() >= 2, "found {}", result.tilings.len());
        let canon_sets: BTreeSet<_> = result
            .tilings
            .iter()
            .map(|t| canonical(t.tiles()))
            .collect();
        let grid = construct::trivial_reptiling(&master, 2).unwrap();
        assert!(canon_sets.contains(&canonical(grid.tiles())));
        // The two-median split.
        let medians = vec![
            [
                Point::from_ints(0, 0),
                Point::from_ints(1, 0),
                Point::from_ints(1, 1),
            ],
            [
                Point::from_ints(1, 0),
                Point::from_ints(2, 0),
                Point::from_ints(1, 1),
            ],
            [
                Point::from_ints(0, 0),
                Point::from_ints(1, 1),
                Point::from_ints(0, 1),
            ],
            [
                Point::from_ints(0, 1),
                Point::from_ints(1, 1),
                Point::from_ints(0, 2),
            ],
        ];
        assert!(canon_sets.contains(&canonical(&medians)));
        for t in &result.tilings {
            assert!(validate_reptiling(t).ok());
            let g = build_graph(t);
            assert!(check_euler(&g, t.tile_count()));
        }
    }

    #[test]
    fn ratio_master_n3_finds_nontrivial() {
        let master = [
            Point::from_ints(0, 0),
            Point::from_ints(2, 0),
            Point::new(
                QuadScalar::from_int(1),
                QuadScalar::new(rat(0), rat(1), rat(15)),
            ),
        ];
        let result = enumerate_reptilings(&master, 3, &budget());
        let nontrivial: Vec<_> = result
            .tilings
            .iter()
            .filter(|t| !is_trivial_tiling(t))
            .collect();
        assert!(
            !nontrivial.is_empty(),
            "expected a non-trivial tiling among {} results",
            result.tilings.len()
        );
        let flip = construct::rhombus_flip(&master, 2, 1, 3).unwrap();
        let canon_sets: BTreeSet<_> = result
            .tilings
            .iter()
            .map(|t| canonical(t.tiles()))
            .collect();
        assert!(canon_sets.contains(&canonical(flip.tiles())));
        // Oblique master: every non-trivial result has a hanging vertex.
        for t in &nontrivial {
            let g = build_graph(t);
            assert!(g.hanging_count() >= 1);
        }
    }

    #[test]
    fn order_invariance() {
        let master = [
            Point::from_ints(0, 0),
            Point::from_ints(2, 0),
            Point::from_ints(0, 2),
        ];
        let fwd = enumerate_reptilings(&master, 2, &budget());
        let rev = enumerate_with_order(&master, 2, &budget(), true);
        assert!(fwd.exhaustive && rev.exhaustive);
        let a: Vec<_> = fwd.tilings.iter().map(|t| canonical(t.tiles())).collect();
        let b: Vec<_> = rev.tilings.iter().map(|t| canonical(t.tiles())).collect();
        assert_eq!(a, b);
    }

    #[test]
    fn budget_exhaustion_flagged() {
        let master = [
            Point::from_ints(0, 0),
            Point::from_ints(2, 0),
            Point::from_ints(0, 2),
        ];
        let result = enumerate_reptilings(&master, 2, &SearchBudget::new(2, 10));
        assert!(!result.exhaustive);
    }
}
