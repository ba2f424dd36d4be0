//! Self-similar traversal-order rules over gentilings: exact entry/exit
//! points, continuity and face-continuity checking, measure checking,
//! evaluation of the traversal map, and the built-in curve catalog.
//!
//! A rule is an ordered gentiling: each child is a similarity from the
//! master onto a tile plus a reversal flag. A reversed child is traversed
//! backwards, so it contributes the image of the exit where an unreversed
//! child contributes the image of the entry, and its sub-parameter flips
//! `t -> 1 - t`.

use num_traits::Zero;
use thiserror::Error;

use crate::construct;
use crate::exact::{
    rat, similarity_from_triangles, AffineSimilarity, Point, QuadScalar, Rational,
};
use crate::geom::triangles_share_segment;
use crate::tiling::{validate_gentiling, Tiling, TilingError};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CurveError {
    #[error("children do not form a valid gentiling of the master")]
    InvalidGentiling,
    #[error(transparent)]
    Tiling(#[from] TilingError),
    #[error("breakpoints must increase from 0 to 1")]
    BadBreakpoints,
    #[error("fixed-point system is singular")]
    SingularFixedPointSystem,
    #[error("unknown curve name {0:?}")]
    UnknownName(String),
    #[error("this curve requires a right-triangle master")]
    NotRightTriangle,
    #[error("parameter must lie in [0, 1)")]
    ParameterOutOfRange,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CurveChild {
    pub map: AffineSimilarity,
    pub reversed: bool,
}

/// An ordered gentiling with per-child similarity maps and reversal flags.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CurveRule {
    radicand: Rational,
    master: [Point; 3],
    children: Vec<CurveChild>,
    /// `r + 1` interval breakpoints from 0 to 1.
    breakpoints: Vec<QuadScalar>,
}

impl CurveRule {
    /// Builds a rule with breakpoints derived from the children's area
    /// fractions; the children's images must form a valid gentiling.
    pub fn new(
        radicand: Rational,
        master: [Point; 3],
        children: Vec<CurveChild>,
    ) -> Result<CurveRule, CurveError> {
        let mut breakpoints = Vec::with_capacity(children.len() + 1);
        let mut acc = QuadScalar::zero();
        breakpoints.push(acc.clone());
        for child in &children {
            acc = &acc + &child.map.det().abs();
            breakpoints.push(acc.clone());
        }
        CurveRule::with_breakpoints(radicand, master, children, breakpoints)
    }

    /// Builds a rule with explicit breakpoints (used to express rules whose
    /// intervals deliberately disagree with the area fractions).
    pub fn with_breakpoints(
        radicand: Rational,
        master: [Point; 3],
        children: Vec<CurveChild>,
        breakpoints: Vec<QuadScalar>,
    ) -> Result<CurveRule, CurveError> {
        if breakpoints.len() != children.len() + 1
            || !breakpoints[0].is_zero()
            || breakpoints[children.len()] != QuadScalar::one()
            || breakpoints.windows(2).any(|w| (&w[1] - &w[0]).signum() <= 0)
        {
            return Err(CurveError::BadBreakpoints);
        }
        let rule = CurveRule {
            radicand,
            master,
            children,
            breakpoints,
        };
        let tiling = rule.induced_tiling()?;
        if !validate_gentiling(&tiling).ok() {
            return Err(CurveError::InvalidGentiling);
        }
        Ok(rule)
    }

    pub fn radicand(&self) -> &Rational {
        &self.radicand
    }

    pub fn master(&self) -> &[Point; 3] {
        &self.master
    }

    pub fn children(&self) -> &[CurveChild] {
        &self.children
    }

    pub fn breakpoints(&self) -> &[QuadScalar] {
        &self.breakpoints
    }

    pub fn induced_tiling(&self) -> Result<Tiling, TilingError> {
        let tiles = self
            .children
            .iter()
            .map(|c| c.map.apply_triangle(&self.master))
            .collect();
        Tiling::new(self.radicand.clone(), self.master.clone(), tiles)
    }

    /// The rule traversing the same tiling backwards: children in reverse
    /// order. Flags stay as they are: each flag is relative to the curve
    /// being defined, and reversing the whole curve reverses every
    /// sub-curve along with it.
    pub fn reversed(&self) -> CurveRule {
        let children = self.children.iter().rev().cloned().collect();
        CurveRule::new(self.radicand.clone(), self.master.clone(), children)
            .expect("reversal preserves validity")
    }
}

/// Exact entry and exit points of the traversal.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EntryExit {
    pub entry: Point,
    pub exit: Point,
}

/// Solves the linear fixed-point system: the entry lies in the first child
/// (at its own entry, or exit when reversed) and the exit in the last.
pub fn solve_entry_exit(rule: &CurveRule) -> Result<EntryExit, CurveError> {
    let first = &rule.children[0];
    let last = &rule.children[rule.children.len() - 1];
    // Unknowns (ex, ey, xx, xy).
    let mut a = vec![vec![QuadScalar::zero(); 4]; 4];
    let mut b = vec![QuadScalar::zero(); 4];
    let one = QuadScalar::one();

    let mut fill = |row: usize, target_col: usize, arg_col: usize, map: &AffineSimilarity,
                    a: &mut Vec<Vec<QuadScalar>>,
                    b: &mut Vec<QuadScalar>| {
        // target - M * arg = t
        a[row][target_col] = &a[row][target_col] + &one;
        a[row][arg_col] = &a[row][arg_col] - &map.m00;
        a[row][arg_col + 1] = &a[row][arg_col + 1] - &map.m01;
        a[row + 1][target_col + 1] = &a[row + 1][target_col + 1] + &one;
        a[row + 1][arg_col] = &a[row + 1][arg_col] - &map.m10;
        a[row + 1][arg_col + 1] = &a[row + 1][arg_col + 1] - &map.m11;
        b[row] = map.tx.clone();
        b[row + 1] = map.ty.clone();
    };

    let first_arg = if first.reversed { 2 } else { 0 };
    fill(0, 0, first_arg, &first.map, &mut a, &mut b);
    let last_arg = if last.reversed { 0 } else { 2 };
    fill(2, 2, last_arg, &last.map, &mut a, &mut b);

    let sol = solve_linear(&mut a, &mut b).ok_or(CurveError::SingularFixedPointSystem)?;
    Ok(EntryExit {
        entry: Point::new(sol[0].clone(), sol[1].clone()),
        exit: Point::new(sol[2].clone(), sol[3].clone()),
    })
}

/// Gaussian elimination over the scene field.
fn solve_linear(
    a: &mut Vec<Vec<QuadScalar>>,
    b: &mut Vec<QuadScalar>,
) -> Option<Vec<QuadScalar>> {
    let n = b.len();
    for col in 0..n {
        let pivot = (col..n).find(|r| !a[*r][col].is_zero())?;
        a.swap(col, pivot);
        b.swap(col, pivot);
        let inv = a[col][col].inverse().ok()?;
        for c in col..n {
            a[col][c] = &a[col][c] * &inv;
        }
        b[col] = &b[col] * &inv;
        for r in 0..n {
            if r != col && !a[r][col].is_zero() {
                let f = a[r][col].clone();
                for c in col..n {
                    a[r][c] = &a[r][c] - &(&f * &a[col][c]);
                }
                b[r] = &b[r] - &(&f * &b[col]);
            }
        }
    }
    Some(b.clone())
}

/// Start point of child `i`'s sub-curve.
fn child_start(rule: &CurveRule, ee: &EntryExit, i: usize) -> Point {
    let c = &rule.children[i];
    c.map.apply(if c.reversed { &ee.exit } else { &ee.entry })
}

/// End point of child `i`'s sub-curve.
fn child_end(rule: &CurveRule, ee: &EntryExit, i: usize) -> Point {
    let c = &rule.children[i];
    c.map.apply(if c.reversed { &ee.entry } else { &ee.exit })
}

#[derive(Debug, Clone)]
pub struct ContinuityReport {
    pub ok: bool,
    /// Junction indices `i` where child `i` does not end where child `i + 1`
    /// starts.
    pub failing_junctions: Vec<usize>,
}

/// Exact check that consecutive sub-curves meet: the end point of child `i`
/// equals the start point of child `i + 1`.
pub fn check_continuity(rule: &CurveRule) -> Result<ContinuityReport, CurveError> {
    let ee = solve_entry_exit(rule)?;
    let mut failing = Vec::new();
    for i in 0..rule.children.len() - 1 {
        if child_end(rule, &ee, i) != child_start(rule, &ee, i + 1) {
            failing.push(i);
        }
    }
    Ok(ContinuityReport {
        ok: failing.is_empty(),
        failing_junctions: failing,
    })
}

/// Depth-`k` tiles in traversal order, as accumulated maps with reversal
/// parity.
pub fn expand(rule: &CurveRule, depth: u32) -> Vec<(AffineSimilarity, bool)> {
    let mut level = vec![(AffineSimilarity::identity(), false)];
    for _ in 0..depth {
        let mut next = Vec::with_capacity(level.len() * rule.children.len());
        for (map, parity) in &level {
            let iter: Box<dyn Iterator<Item = &CurveChild>> = if *parity {
                Box::new(rule.children.iter().rev())
            } else {
                Box::new(rule.children.iter())
            };
            for child in iter {
                next.push((map.compose(&child.map), *parity ^ child.reversed));
            }
        }
        level = next;
    }
    level
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FaceContinuityReport {
    pub ok: bool,
    /// First failing `(level, pair_index)` when not face-continuous.
    pub first_failure: Option<(u32, usize)>,
}

/// Expands the rule level by level up to `depth` and checks that every pair
/// of consecutive tiles in traversal order shares a segment of positive
/// length.
pub fn check_face_continuity(rule: &CurveRule, depth: u32) -> FaceContinuityReport {
    for level in 1..=depth {
        let tiles: Vec<[Point; 3]> = expand(rule, level)
            .iter()
            .map(|(m, _)| m.apply_triangle(&rule.master))
            .collect();
        for i in 0..tiles.len() - 1 {
            if !triangles_share_segment(&tiles[i], &tiles[i + 1]) {
                return FaceContinuityReport {
                    ok: false,
                    first_failure: Some((level, i)),
                };
            }
        }
    }
    FaceContinuityReport {
        ok: true,
        first_failure: None,
    }
}

/// Exact check that the parameter intervals equal the area fractions and sum
/// to one.
pub fn check_measure(rule: &CurveRule) -> bool {
    let mut acc = QuadScalar::zero();
    for (i, child) in rule.children.iter().enumerate() {
        let frac = child.map.det().abs();
        let width = &rule.breakpoints[i + 1] - &rule.breakpoints[i];
        if width != frac {
            return false;
        }
        acc = &acc + &frac;
    }
    acc == QuadScalar::one()
}

/// Descends `depth` levels at parameter `t`, returning the tile containing
/// the parameter and the point where the curve enters it.
pub fn evaluate(
    rule: &CurveRule,
    t: &Rational,
    depth: u32,
) -> Result<([Point; 3], Point), CurveError> {
    if t < &Rational::zero() || t >= &Rational::from_integer(1.into()) {
        return Err(CurveError::ParameterOutOfRange);
    }
    let ee = solve_entry_exit(rule)?;
    let mut map = AffineSimilarity::identity();
    let mut parity = false;
    let mut t = QuadScalar::from_rational(t.clone());
    for _ in 0..depth {
        // Interval lookup; the last child owns its right endpoint.
        let mut idx = rule.children.len() - 1;
        for i in 0..rule.children.len() {
            if t.cmp_exact(&rule.breakpoints[i + 1]) == std::cmp::Ordering::Less {
                idx = i;
                break;
            }
        }
        let child = &rule.children[idx];
        let width = &rule.breakpoints[idx + 1] - &rule.breakpoints[idx];
        t = &(&t - &rule.breakpoints[idx]) / &width;
        if child.reversed {
            t = &QuadScalar::one() - &t;
        }
        map = map.compose(&child.map);
        parity ^= child.reversed;
    }
    let tile = map.apply_triangle(&rule.master);
    let start = map.apply(if parity { &ee.exit } else { &ee.entry });
    Ok((tile, start))
}

/// Entry/exit junction chain of the depth-`k` tiles with consecutive
/// duplicates removed; with continuity this is a connected polyline.
pub fn junction_chain(rule: &CurveRule, depth: u32) -> Result<Vec<Point>, CurveError> {
    let ee = solve_entry_exit(rule)?;
    let maps = expand(rule, depth);
    let mut chain: Vec<Point> = Vec::with_capacity(maps.len() + 1);
    for (map, parity) in &maps {
        let start = map.apply(if *parity { &ee.exit } else { &ee.entry });
        let end = map.apply(if *parity { &ee.entry } else { &ee.exit });
        if chain.last() != Some(&start) {
            chain.push(start);
        }
        if chain.last() != Some(&end) {
            chain.push(end);
        }
    }
    Ok(chain)
}

/// The distinct junction points of the depth-`k` expansion, in order of
/// first visit.
pub fn polyline(rule: &CurveRule, depth: u32) -> Result<Vec<Point>, CurveError> {
    let chain = junction_chain(rule, depth)?;
    let mut seen: std::collections::BTreeSet<Point> = std::collections::BTreeSet::new();
    let mut out = Vec::new();
    for p in chain {
        if seen.insert(p.clone()) {
            out.push(p);
        }
    }
    Ok(out)
}

fn child(master: &[Point; 3], dst: [Point; 3], reversed: bool) -> CurveChild {
    CurveChild {
        map: similarity_from_triangles(master, &dst).expect("builtin data is a similarity"),
        reversed,
    }
}

/// The two-tile rule on the right isosceles triangle.
pub fn sierpinski() -> CurveRule {
    let master = [
        Point::from_ints(0, 0),
        Point::from_ints(2, 0),
        Point::from_ints(1, 1),
    ];
    let c1 = child(
        &master,
        [
            Point::from_ints(0, 0),
            Point::from_ints(1, 1),
            Point::from_ints(1, 0),
        ],
        false,
    );
    let c2 = child(
        &master,
        [
            Point::from_ints(1, 1),
            Point::from_ints(2, 0),
            Point::from_ints(1, 0),
        ],
        false,
    );
    CurveRule::new(rat(0), master, vec![c1, c2]).expect("builtin rule valid")
}

/// The two-tile altitude rule on an arbitrary right triangle.
pub fn polya(master: &[Point; 3]) -> Result<CurveRule, CurveError> {
    let mut right = None;
    for c in 0..3 {
        let u = master[(c + 1) % 3].sub(&master[c]);
        let v = master[(c + 2) % 3].sub(&master[c]);
        if u.dot(&v).is_zero() {
            right = Some(c);
            break;
        }
    }
    let cidx = right.ok_or(CurveError::NotRightTriangle)?;
    let a = master[(cidx + 1) % 3].clone();
    let b = master[(cidx + 2) % 3].clone();
    let c = master[cidx].clone();
    let ab = b.sub(&a);
    let t = &ab.dot(&c.sub(&a)) / &ab.norm2();
    let foot = a.add(&ab.scale(&t));
    // With corner labels (A, B, C), child 1 sends (A, B, C) to (A, C, H) and
    // child 2 to (C, B, H), H being the altitude foot.
    let frame = [a.clone(), b.clone(), c.clone()];
    let c1 = CurveChild {
        map: similarity_from_triangles(&frame, &[a.clone(), c.clone(), foot.clone()])
            .map_err(|_| CurveError::NotRightTriangle)?,
        reversed: false,
    };
    let c2 = CurveChild {
        map: similarity_from_triangles(&frame, &[c.clone(), b.clone(), foot.clone()])
            .map_err(|_| CurveError::NotRightTriangle)?,
        reversed: false,
    };
    let mut d = Rational::zero();
    for p in master {
        for coord in [&p.x, &p.y] {
            if !coord.radicand().is_zero() {
                d = coord.radicand().clone();
            }
        }
    }
    CurveRule::new(d, frame, vec![c1, c2])
}

/// The three-tile rule on the right triangle with legs 1 and sqrt(3).
pub fn rep3_curve() -> CurveRule {
    let t = construct::rep3().expect("construction valid");
    let master = t.master().clone();
    let tiles = t.tiles();
    // Tiles are (A, C, X1), (A, Y1, X1), (B, X1, Y1) with master (C, B, A);
    // correspondences follow the corner angles.
    let dst1 = [tiles[0][1].clone(), tiles[0][0].clone(), tiles[0][2].clone()];
    let dst2 = [tiles[1][1].clone(), tiles[1][0].clone(), tiles[1][2].clone()];
    let dst3 = [tiles[2][2].clone(), tiles[2][0].clone(), tiles[2][1].clone()];
    let children = vec![
        child(&master, dst1, false),
        child(&master, dst2, true),
        child(&master, dst3, false),
    ];
    CurveRule::new(rat(3), master, children).expect("builtin rule valid")
}

/// The five-tile rule on the isosceles triangle with base angles pi/6.
pub fn kaiser5_curve() -> CurveRule {
    let t = construct::kaiser5().expect("construction valid");
    let master = t.master().clone();
    let tiles = t.tiles();
    // Tiles are (A,C,P1), (O,A,P1), (O,P1,P2), (O,P2,A), (A,B,P2) with
    // master (C, B, A); traversal order visits them as 1, 2, 3, 4, 5 with
    // base corners mapping to base corners and the wide corner to the apex.
    let dst1 = [tiles[0][1].clone(), tiles[0][0].clone(), tiles[0][2].clone()];
    let dst2 = [tiles[1][1].clone(), tiles[1][2].clone(), tiles[1][0].clone()];
    let dst3 = [tiles[2][1].clone(), tiles[2][2].clone(), tiles[2][0].clone()];
    let dst4 = [tiles[3][1].clone(), tiles[3][2].clone(), tiles[3][0].clone()];
    let dst5 = [tiles[4][0].clone(), tiles[4][1].clone(), tiles[4][2].clone()];
    let children = vec![
        child(&master, dst1, false),
        child(&master, dst2, false),
        child(&master, dst3, false),
        child(&master, dst4, false),
        child(&master, dst5, false),
    ];
    CurveRule::new(rat(3), master, children).expect("builtin rule valid")
}

/// Built-in rules by name. The Polya rule defaults to the right triangle
/// with legs 1 and 2.
pub fn builtin_curve(name: &str) -> Result<CurveRule, CurveError> {
    match name {
        "sierpinski" => Ok(sierpinski()),
        "rep3" => Ok(rep3_curve()),
        "kaiser5" => Ok(kaiser5_curve()),
        "polya" => {
            let master = [
                Point::from_ints(0, 1),
                Point::from_ints(2, 0),
                Point::from_ints(0, 0),
            ];
            polya(&master)
        }
        other => Err(CurveError::UnknownName(other.to_string())),
    }
}

pub const BUILTIN_NAMES: [&str; 4] = ["sierpinski", "rep3", "polya", "kaiser5"];
