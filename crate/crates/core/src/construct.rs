//! Generators for the tilings the library can build directly. Every
//! generator returns a [`Tiling`] that passes its validator; the validators
//! are the oracle for the internal layouts.

use num_traits::Zero;
use thiserror::Error;

use crate::exact::{rat, ratio, Point, QuadScalar, Rational, Vec2};
use crate::tiling::{Tiling, TilingError};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ConstructError {
    #[error("invalid parameter: {0}")]
    InvalidParams(String),
    #[error("no pair of master sides has exact length ratio {p}:{q}")]
    RatioMismatch { p: u64, q: u64 },
    #[error("grid too coarse: need n >= p + q")]
    NTooSmall,
    #[error("master has no right angle")]
    NotRightTriangle,
    #[error("no gentiling with {0} tiles exists")]
    ImpossibleCount(u64),
    #[error(transparent)]
    Tiling(#[from] TilingError),
}

fn qrat(r: Rational) -> QuadScalar {
    QuadScalar::from_rational(r)
}

/// `m0 + s*(m1 - m0) + t*(m2 - m0)` for rational grid coordinates.
fn grid_point(master: &[Point; 3], s: Rational, t: Rational) -> Point {
    let u = master[1].sub(&master[0]);
    let v = master[2].sub(&master[0]);
    master[0].add(&u.scale(&qrat(s)).add(&v.scale(&qrat(t))))
}

/// Subdivides `master` into `n^2` congruent similar copies on the regular
/// grid.
pub fn trivial_reptiling(master: &[Point; 3], n: u32) -> Result<Tiling, ConstructError> {
    if n < 2 {
        return Err(ConstructError::InvalidParams(
            "trivial reptiling needs n >= 2".into(),
        ));
    }
    Ok(Tiling::infer(master.clone(), grid_tiles(master, n, &[]))?)
}

/// An up-pointing merged block: grid anchor `(i, j)` and scale `k`.
#[derive(Clone, Copy, Debug)]
struct Block {
    i: u32,
    j: u32,
    k: u32,
}

impl Block {
    fn contains_up(&self, i: u32, j: u32) -> bool {
        i >= self.i && j >= self.j && i + j + 1 < self.i + self.j + self.k + 1
    }
    fn contains_down(&self, i: u32, j: u32) -> bool {
        i >= self.i && j >= self.j && i + j + 2 < self.i + self.j + self.k + 1
    }
}

/// Grid cells of the `n`-grid minus merged blocks, plus one tile per block.
fn grid_tiles(master: &[Point; 3], n: u32, blocks: &[Block]) -> Vec<[Point; 3]> {
    let nn = rat(n as i64);
    let v = |i: u32, j: u32| {
        grid_point(
            master,
            ratio(i as i64, 1) / nn.clone(),
            ratio(j as i64, 1) / nn.clone(),
        )
    };
    let mut tiles = Vec::new();
    for b in blocks {
        if b.k >= 1 {
            tiles.push([v(b.i, b.j), v(b.i + b.k, b.j), v(b.i, b.j + b.k)]);
        }
    }
    for j in 0..n {
        for i in 0..n {
            if i + j + 1 <= n && !blocks.iter().any(|b| b.contains_up(i, j)) {
                tiles.push([v(i, j), v(i + 1, j), v(i, j + 1)]);
            }
            if i + j + 2 <= n && !blocks.iter().any(|b| b.contains_down(i, j)) {
                tiles.push([v(i + 1, j), v(i, j + 1), v(i + 1, j + 1)]);
            }
        }
    }
    tiles
}

/// A gentiling with `r` tiles built by merging grid blocks; possible exactly
/// for `r = 4` and `r >= 6`.
pub fn trivial_gentiling(master: &[Point; 3], r: u64) -> Result<Tiling, ConstructError> {
    if r < 2 || r == 2 || r == 3 || r == 5 {
        return Err(ConstructError::ImpossibleCount(r));
    }
    if r == 4 {
        return trivial_reptiling(master, 2);
    }
    let (n, blocks) = if r % 2 == 0 {
        // r = 2n: one block of scale n-1 at the top corner.
        let n = (r / 2) as u32;
        (n, vec![Block { i: 0, j: 1, k: n - 1 }])
    } else if r % 4 == 1 {
        // r = 4n - 3: one block of scale n-2 at the top corner.
        let n = ((r + 3) / 4) as u32;
        (n, vec![Block { i: 0, j: 2, k: n - 2 }])
    } else {
        // r = 4n - 9: top block of scale n-2 plus two scale-2 blocks in the
        // bottom two rows.
        let n = ((r + 9) / 4) as u32;
        (
            n,
            vec![
                Block { i: 0, j: 2, k: n - 2 },
                Block { i: 0, j: 0, k: 2 },
                Block { i: 2, j: 0, k: 2 },
            ],
        )
    };
    let blocks: Vec<Block> = blocks.into_iter().filter(|b| b.k >= 2).collect();
    let tiles = grid_tiles(master, n, &blocks);
    debug_assert_eq!(tiles.len() as u64, r);
    Ok(Tiling::infer(master.clone(), tiles)?)
}

/// Takes the trivial `n^2` grid of a master whose sides through one corner
/// have exact length ratio `p:q`, locates the rhombus spanned by `p` short
/// and `q` long tile edges at that corner, and mirrors its sub-tiling at the
/// diagonal.
pub fn rhombus_flip(
    master: &[Point; 3],
    p: u64,
    q: u64,
    n: u32,
) -> Result<Tiling, ConstructError> {
    if !(p > q && q >= 1) || num_integer::gcd(p, q) != 1 {
        return Err(ConstructError::InvalidParams(
            "need coprime p > q >= 1".into(),
        ));
    }
    if (n as u64) < p + q {
        return Err(ConstructError::NTooSmall);
    }
    // Relabel corners so the sides from `c` to `short_end` and `long_end`
    // have ratio q : p... i.e. |c->long| / |c->short| = p/q.
    let pp = rat((p * p) as i64);
    let qq = rat((q * q) as i64);
    let mut frame: Option<[Point; 3]> = None;
    'outer: for c in 0..3 {
        for (e1, e2) in [((c + 1) % 3, (c + 2) % 3), ((c + 2) % 3, (c + 1) % 3)] {
            let l1 = master[e1].sub(&master[c]).norm2();
            let l2 = master[e2].sub(&master[c]).norm2();
            // l2 / l1 == (p/q)^2
            if &l2 * &qrat(qq.clone()) == &l1 * &qrat(pp.clone()) {
                frame = Some([
                    master[c].clone(),
                    master[e1].clone(),
                    master[e2].clone(),
                ]);
                break 'outer;
            }
        }
    }
    let frame = frame.ok_or(ConstructError::RatioMismatch { p, q })?;

    // In frame coordinates: C at origin, the short side towards frame[1],
    // the long side towards frame[2].
    let all = grid_tiles(&frame, n, &[]);
    let u = frame[1]
        .sub(&frame[0])
        .scale(&qrat(ratio(p as i64, n as i64)));
    let v = frame[2]
        .sub(&frame[0])
        .scale(&qrat(ratio(q as i64, n as i64)));
    let w = u.add(&v);
    let w2 = w.norm2();
    let origin = &frame[0];
    let reflect = |pt: &Point| -> Point {
        let x = pt.sub(origin);
        let coef = &(&x.dot(&w) * &QuadScalar::from_int(2)) / &w2;
        origin.add(&w.scale(&coef).add(&x.scale(&QuadScalar::from_int(-1))))
    };
    let in_rhombus = |tile: &[Point; 3]| -> bool {
        // All vertices inside the closed parallelogram spanned by u, v.
        tile.iter().all(|pt| {
            let x = pt.sub(origin);
            let det = u.cross(&v);
            let s = &x.cross(&v) / &det;
            let t = &u.cross(&x) / &det;
            s.signum() >= 0
                && t.signum() >= 0
                && (&s - &QuadScalar::one()).signum() <= 0
                && (&t - &QuadScalar::one()).signum() <= 0
        })
    };
    let tiles: Vec<[Point; 3]> = all
        .into_iter()
        .map(|tile| {
            if in_rhombus(&tile) {
                [
                    reflect(&tile[0]),
                    reflect(&tile[1]),
                    reflect(&tile[2]),
                ]
            } else {
                tile
            }
        })
        .collect();
    Ok(Tiling::infer(master.clone(), tiles)?)
}

/// Parameters of the corner-splitting family: a triangle with angles
/// `alpha, 2 alpha, pi - 3 alpha` has side ratios `p : q : r` with
/// `q^2 = p^2 + p r` and `p < r < 3 p`; `cos alpha = q / (2 p)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SplitParams {
    pub p: u64,
    pub q: u64,
    pub r: u64,
}

impl SplitParams {
    pub fn new(p: u64, q: u64, r: u64) -> Result<SplitParams, ConstructError> {
        if p == 0 || q == 0 || r == 0 || !(p < r && r < 3 * p) || q * q != p * p + p * r {
            return Err(ConstructError::InvalidParams(
                "need p < r < 3p and q^2 = p^2 + p*r".into(),
            ));
        }
        Ok(SplitParams { p, q, r })
    }

    /// Scene radicand `4 p^2 - q^2`.
    pub fn radicand(&self) -> Rational {
        rat((4 * self.p * self.p - self.q * self.q) as i64)
    }

    pub fn master_scale(&self) -> u64 {
        2 * self.p + self.r
    }

    pub fn refined_tile_count(&self) -> u64 {
        let m = self.master_scale();
        m * m
    }
}

/// Builds the corner-splitting tiling: the master vertex with the doubled
/// angle is met by two `q`-scaled tiles, an `r`-scaled tile sits at the
/// opposite end of the base, four `p`-scaled tiles and a parallelogram strip
/// of `2 p (r - p)` unit tiles fill the rest. With `refine` every scaled tile
/// is subdivided by its trivial grid, giving `(2p + r)^2` congruent tiles.
pub fn corner_split(params: SplitParams, refine: bool) -> Result<Tiling, ConstructError> {
    let SplitParams { p, q, r } = params;
    let d = params.radicand();
    let m = params.master_scale();
    let (p, q, r, m) = (p as i64, q as i64, r as i64, m as i64);

    let root = |coef: Rational| QuadScalar::new(Rational::zero(), coef, d.clone());
    // cos/sin of alpha, 2 alpha, 3 alpha over the scene field.
    let c1 = qrat(ratio(q, 2 * p));
    let s1 = root(ratio(1, 2 * p));
    let c2 = qrat(ratio(q * q - 2 * p * p, 2 * p * p));
    let s2 = root(ratio(q, 2 * p * p));
    let c3 = qrat(Rational::new(
        (q * (q * q - 3 * p * p)).into(),
        (2 * p * p * p).into(),
    ));
    let s3 = root(ratio(r, 2 * p * p));

    let pt = |x: QuadScalar, y: QuadScalar| Point::new(x, y);
    let scale_dir = |len: i64, c: &QuadScalar, s: &QuadScalar| {
        Vec2::new(
            c.clone() * QuadScalar::from_int(len),
            s.clone() * QuadScalar::from_int(len),
        )
    };

    let v_corner = pt(QuadScalar::zero(), QuadScalar::zero());
    let w_corner = pt(QuadScalar::from_int(m * r), QuadScalar::zero());
    let u_corner = v_corner.add(&scale_dir(m * p, &c2, &s2));

    let q_pt = v_corner.add(&scale_dir(q * r, &c1, &s1));
    let b0 = pt(QuadScalar::from_int(q * q), QuadScalar::zero());
    let wb = pt(QuadScalar::from_int(m * r - r * r), QuadScalar::zero());
    let wu = w_corner.add(&scale_dir(q * r, &(-&c1), &s1));
    let p1 = v_corner.add(&scale_dir(q * q, &c2, &s2));
    let u2 = u_corner.add(&scale_dir(p * q, &c1, &(-&s1)));
    let tr = q_pt.add(&Vec2::new(
        QuadScalar::from_int(p * (r - p)),
        QuadScalar::zero(),
    ));

    // The seven scaled tiles with their scale factors.
    let scaled: Vec<([Point; 3], i64)> = vec![
        ([v_corner.clone(), b0.clone(), q_pt.clone()], q),
        ([v_corner.clone(), p1.clone(), q_pt.clone()], q),
        ([w_corner.clone(), wb.clone(), wu.clone()], r),
        ([u_corner.clone(), p1.clone(), u2.clone()], p),
        ([wu.clone(), u2.clone(), q_pt.clone()], p),
        ([wb.clone(), tr.clone(), wu.clone()], p),
        ([q_pt.clone(), p1.clone(), u2.clone()], p),
    ];

    // Parallelogram strip of 2 p (r - p) unit tiles between the base and the
    // line through Q: (r - p) columns of unit edges along the base, p rows of
    // unit edges in the third-angle direction.
    let mut tiles: Vec<[Point; 3]> = Vec::new();
    let g = |i: i64, j: i64| -> Point {
        b0.add(&Vec2::new(
            QuadScalar::from_int(i * p),
            QuadScalar::zero(),
        ))
        .add(&scale_dir(j * q, &c3, &s3))
    };
    for i in 0..(r - p) {
        for j in 0..p {
            tiles.push([g(i, j), g(i + 1, j), g(i + 1, j + 1)]);
            tiles.push([g(i, j), g(i + 1, j + 1), g(i, j + 1)]);
        }
    }

    for (tri, scale) in scaled {
        if refine {
            tiles.extend(grid_tiles(&tri, scale as u32, &[]));
        } else {
            tiles.push(tri);
        }
    }

    let master = [v_corner, w_corner, u_corner];
    Ok(Tiling::new(d, master, tiles)?)
}

/// Splits a right triangle at the altitude from the right-angle corner into
/// two similar triangles.
pub fn right_split(master: &[Point; 3]) -> Result<Tiling, ConstructError> {
    let mut right_corner = None;
    for c in 0..3 {
        let u = master[(c + 1) % 3].sub(&master[c]);
        let v = master[(c + 2) % 3].sub(&master[c]);
        if u.dot(&v).is_zero() {
            right_corner = Some(c);
            break;
        }
    }
    let c = right_corner.ok_or(ConstructError::NotRightTriangle)?;
    let a = &master[(c + 1) % 3];
    let b = &master[(c + 2) % 3];
    let r = &master[c];
    let ab = b.sub(a);
    let t = &ab.dot(&r.sub(a)) / &ab.norm2();
    let foot = a.add(&ab.scale(&t));
    let tiles = vec![
        [a.clone(), foot.clone(), r.clone()],
        [foot.clone(), b.clone(), r.clone()],
    ];
    Ok(Tiling::infer(master.clone(), tiles)?)
}

/// A right triangle with legs `l` and `m` split at the altitude, each part
/// subdivided trivially, yielding `l^2 + m^2` congruent tiles.
pub fn snover(l: u32, m: u32) -> Result<Tiling, ConstructError> {
    if l < 1 || m < 1 {
        return Err(ConstructError::InvalidParams("need l, m >= 1".into()));
    }
    let (li, mi) = (l as i64, m as i64);
    let d = li * li + mi * mi;
    let c = Point::from_ints(0, 0);
    let b = Point::from_ints(mi, 0);
    let a = Point::from_ints(0, li);
    // Altitude foot from the right angle to the hypotenuse: rational.
    let foot = Point::new(
        qrat(ratio(mi * li * li, d)),
        qrat(ratio(li * mi * mi, d)),
    );
    let mut tiles = grid_tiles(&[c.clone(), b.clone(), foot.clone()], m, &[]);
    tiles.extend(grid_tiles(&[a.clone(), c.clone(), foot.clone()], l, &[]));
    Ok(Tiling::infer([c, b, a], tiles)?)
}

/// The five-tile gentiling of the isosceles triangle with base angles pi/6:
/// two scale `1/sqrt(3)` tiles covering the base corners and three scale
/// `1/3` tiles splitting the leftover equilateral around its center, four
/// tiles fanning the apex.
pub fn kaiser5() -> Result<Tiling, ConstructError> {
    let d = rat(3);
    let root = |coef: Rational| QuadScalar::new(Rational::zero(), coef, d.clone());
    let c = Point::from_ints(0, 0);
    let b = Point::new(root(rat(2)), QuadScalar::zero());
    let a = Point::new(root(rat(1)), QuadScalar::one());
    let p1 = Point::new(root(ratio(2, 3)), QuadScalar::zero());
    let p2 = Point::new(root(ratio(4, 3)), QuadScalar::zero());
    let o = Point::new(root(rat(1)), qrat(ratio(1, 3)));
    let tiles = vec![
        [a.clone(), c.clone(), p1.clone()],
        [o.clone(), a.clone(), p1.clone()],
        [o.clone(), p1.clone(), p2.clone()],
        [o.clone(), p2.clone(), a.clone()],
        [a.clone(), b.clone(), p2.clone()],
    ];
    Ok(Tiling::new(d, [c, b, a], tiles)?)
}

/// The three-tile reptiling of the right triangle with legs `1` and
/// `sqrt(3)`, with two tiles meeting at the vertex with the middle angle.
pub fn rep3() -> Result<Tiling, ConstructError> {
    let d = rat(3);
    let root = |coef: Rational| QuadScalar::new(Rational::zero(), coef, d.clone());
    let c = Point::from_ints(0, 0);
    let b = Point::new(root(rat(1)), QuadScalar::zero());
    let a = Point::from_ints(0, 1);
    let x1 = Point::new(root(ratio(1, 3)), QuadScalar::zero());
    let y1 = Point::new(root(ratio(1, 2)), qrat(ratio(1, 2)));
    let tiles = vec![
        [a.clone(), c.clone(), x1.clone()],
        [a.clone(), y1.clone(), x1.clone()],
        [b.clone(), x1.clone(), y1.clone()],
    ];
    Ok(Tiling::new(d, [c, b, a], tiles)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tiling::{
        build_graph, check_euler, detect_caps_fans, is_trivial_tiling, validate_gentiling,
        validate_reptiling, CornerRole, Violation,
    };

    fn acute_master() -> [Point; 3] {
        [
            Point::from_ints(0, 0),
            Point::from_ints(4, 0),
            Point::from_ints(1, 2),
        ]
    }

    /// Isosceles acute master with side ratio 2:1 over radicand 15.
    pub fn ratio_2_1_master() -> [Point; 3] {
        [
            Point::from_ints(0, 0),
            Point::from_ints(2, 0),
            Point::new(
                QuadScalar::from_int(1),
                QuadScalar::new(rat(0), rat(1), rat(15)),
            ),
        ]
    }

    #[test]
    fn trivial_counts_and_checks() {
        let t = trivial_reptiling(&acute_master(), 5).unwrap();
        assert_eq!(t.tile_count(), 25);
        assert!(validate_reptiling(&t).ok());
        let g = build_graph(&t);
        assert_eq!(g.full_count, 6);
        assert_eq!(g.half_count, 12);
        assert!(check_euler(&g, 25));
        assert!(is_trivial_tiling(&t));
        assert!(trivial_reptiling(&acute_master(), 1).is_err());
    }

    #[test]
    fn trivial_gentiling_counts() {
        for r in [4u64, 6, 7, 8, 9, 10, 11, 12, 13, 15, 17, 19, 21] {
            let t = trivial_gentiling(&acute_master(), r).unwrap();
            assert_eq!(t.tile_count() as u64, r, "r = {r}");
            assert!(validate_gentiling(&t).ok(), "r = {r}");
            assert!(is_trivial_tiling(&t), "r = {r}");
            let g = build_graph(&t);
            assert!(check_euler(&g, t.tile_count()), "r = {r}");
        }
        for r in [2u64, 3, 5] {
            assert!(matches!(
                trivial_gentiling(&acute_master(), r),
                Err(ConstructError::ImpossibleCount(_))
            ));
        }
    }

    #[test]
    fn trivial_gentiling_r6_size_multiset() {
        let t = trivial_gentiling(&acute_master(), 6).unwrap();
        let mut areas: Vec<QuadScalar> = (0..t.tile_count()).map(|i| t.tile_area2(i)).collect();
        areas.sort();
        let unit = areas[0].clone();
        let expect: Vec<QuadScalar> = [1, 1, 1, 1, 1, 4]
            .iter()
            .map(|k| &unit * &QuadScalar::from_int(*k))
            .collect();
        assert_eq!(areas, expect);
    }

    #[test]
    fn rhombus_flip_basic() {
        let t = rhombus_flip(&ratio_2_1_master(), 2, 1, 3).unwrap();
        assert_eq!(t.tile_count(), 9);
        assert!(validate_reptiling(&t).ok());
        assert!(!is_trivial_tiling(&t));
        let g = build_graph(&t);
        assert!(check_euler(&g, 9));
        assert!(g.hanging_count() >= 1);
    }

    #[test]
    fn rhombus_flip_agrees_with_grid_outside() {
        let t = rhombus_flip(&ratio_2_1_master(), 2, 1, 3).unwrap();
        let grid = trivial_reptiling(&ratio_2_1_master(), 3).unwrap();
        let canon = |tile: &[Point; 3]| {
            let mut v = tile.to_vec();
            v.sort();
            v
        };
        let grid_set: std::collections::BTreeSet<_> = grid.tiles().iter().map(canon).collect();
        let flip_set: std::collections::BTreeSet<_> = t.tiles().iter().map(canon).collect();
        let shared = grid_set.intersection(&flip_set).count();
        assert!(shared < grid_set.len());
        // The flip touches exactly the 2*p*q rhombus cells.
        assert_eq!(grid_set.len() - shared, 4);
    }

    #[test]
    fn rhombus_flip_errors() {
        assert!(matches!(
            rhombus_flip(&ratio_2_1_master(), 2, 1, 2),
            Err(ConstructError::NTooSmall)
        ));
        assert!(matches!(
            rhombus_flip(&acute_master(), 2, 1, 3),
            Err(ConstructError::RatioMismatch { .. })
        ));
    }

    #[test]
    fn corner_split_small() {
        let params = SplitParams::new(4, 6, 5).unwrap();
        let gen = corner_split(params, false).unwrap();
        assert_eq!(gen.tile_count() as u64, 7 + 2 * 4 * (5 - 4));
        assert!(validate_gentiling(&gen).ok());

        let rep = corner_split(params, true).unwrap();
        assert_eq!(rep.tile_count(), 169);
        assert!(validate_reptiling(&rep).ok());
        let g = build_graph(&rep);
        assert!(check_euler(&g, 169));
        let roles = detect_caps_fans(&rep, &g);
        let fans: Vec<_> = roles
            .iter()
            .filter(|r| matches!(r, CornerRole::Fan(_)))
            .collect();
        assert_eq!(fans.len(), 1);
        assert_eq!(*fans[0], CornerRole::Fan(2));
    }

    #[test]
    fn corner_split_counts_up_to_30() {
        // All valid integer parameter triples with 2p + r <= 30.
        let mut found = Vec::new();
        for p in 1..=14u64 {
            for r in (p + 1)..(3 * p) {
                if 2 * p + r > 30 {
                    continue;
                }
                let qq = p * p + p * r;
                let q = (qq as f64).sqrt() as u64;
                for qc in [q.saturating_sub(1), q, q + 1] {
                    if qc * qc == qq {
                        found.push((p, qc, r));
                    }
                }
            }
        }
        assert!(found.contains(&(4, 6, 5)));
        for (p, q, r) in found {
            let params = SplitParams::new(p, q, r).unwrap();
            let t = corner_split(params, true).unwrap();
            assert_eq!(t.tile_count() as u64, (2 * p + r) * (2 * p + r));
            assert!(validate_reptiling(&t).ok(), "({p},{q},{r})");
        }
    }

    #[test]
    fn corner_split_scale_multiset_identity() {
        // 4 p^2 + 2 q^2 + r^2 + 2 p (r - p) = (2p + r)^2 given q^2 = p^2 + pr.
        for (p, q, r) in [(4u64, 6, 5), (9, 15, 16), (8, 12, 10)] {
            assert_eq!(q * q, p * p + p * r);
            assert_eq!(
                4 * p * p + 2 * q * q + r * r + 2 * p * (r - p),
                (2 * p + r) * (2 * p + r)
            );
        }
    }

    #[test]
    fn corner_split_rejects_bad_params() {
        assert!(SplitParams::new(4, 6, 12).is_err());
        assert!(SplitParams::new(4, 7, 5).is_err());
    }

    #[test]
    fn right_split_cases() {
        let iso = [
            Point::from_ints(0, 0),
            Point::from_ints(1, 0),
            Point::from_ints(0, 1),
        ];
        let t = right_split(&iso).unwrap();
        assert_eq!(t.tile_count(), 2);
        assert!(validate_reptiling(&t).ok());

        let skew = [
            Point::from_ints(0, 0),
            Point::from_ints(2, 0),
            Point::from_ints(0, 1),
        ];
        let t2 = right_split(&skew).unwrap();
        assert!(validate_gentiling(&t2).ok());
        let rep = validate_reptiling(&t2);
        assert!(rep
            .violations
            .iter()
            .any(|v| matches!(v, Violation::UnequalTileAreas(_, _))));
        // Area ratio 1 : 4.
        let (a0, a1) = (t2.tile_area2(0), t2.tile_area2(1));
        let (small, large) = if a0.cmp_exact(&a1) == std::cmp::Ordering::Less {
            (a0, a1)
        } else {
            (a1, a0)
        };
        assert_eq!(&small * &QuadScalar::from_int(4), large);

        let equilateral = [
            Point::from_ints(0, 0),
            Point::from_ints(2, 0),
            Point::new(QuadScalar::from_int(1), QuadScalar::sqrt_of(rat(3))),
        ];
        assert!(matches!(
            right_split(&equilateral),
            Err(ConstructError::NotRightTriangle)
        ));
    }

    #[test]
    fn snover_counts() {
        let t = snover(1, 2).unwrap();
        assert_eq!(t.tile_count(), 5);
        assert!(validate_reptiling(&t).ok());

        let t2 = snover(1, 1).unwrap();
        assert_eq!(t2.tile_count(), 2);
        assert!(validate_reptiling(&t2).ok());

        let t3 = snover(2, 3).unwrap();
        assert_eq!(t3.tile_count(), 13);
        assert!(validate_reptiling(&t3).ok());
        let g = build_graph(&t3);
        assert!(check_euler(&g, 13));
    }

    #[test]
    fn kaiser5_structure() {
        let t = kaiser5().unwrap();
        assert_eq!(t.tile_count(), 5);
        assert!(validate_gentiling(&t).ok());
        let g = build_graph(&t);
        assert!(check_euler(&g, 5));
        let roles = detect_caps_fans(&t, &g);
        // Four tiles fan the apex, which is master corner 2.
        assert_eq!(roles[2], CornerRole::Fan(4));
        assert!(!is_trivial_tiling(&t));
    }

    #[test]
    fn rep3_structure() {
        let t = rep3().unwrap();
        assert_eq!(t.tile_count(), 3);
        assert!(validate_reptiling(&t).ok());
        let g = build_graph(&t);
        assert!(check_euler(&g, 3));
        let roles = detect_caps_fans(&t, &g);
        let fans: Vec<_> = (0..3)
            .filter(|k| matches!(roles[*k], CornerRole::Fan(_)))
            .collect();
        assert_eq!(fans.len(), 1);
        assert_eq!(roles[fans[0]], CornerRole::Fan(2));
    }
}
