//! Exact predicates on segments and triangles.
//!
//! Everything here decides by signs of cross and dot products; no lengths are
//! ever taken. The conservative floating-point bounding boxes exist purely to
//! prune pairs before an exact test and never influence a verdict.

use crate::exact::{Point, QuadScalar, Vec2};

/// Sign of twice the signed area of (a, b, c).
pub fn orient(a: &Point, b: &Point, c: &Point) -> i32 {
    b.sub(a).cross(&c.sub(a)).signum()
}

/// Whether `p` lies inside the triangle; `strict` excludes the boundary.
pub fn point_in_triangle(p: &Point, t: &[Point; 3], strict: bool) -> bool {
    let s = orient(&t[0], &t[1], &t[2]);
    debug_assert!(s != 0, "degenerate triangle");
    for i in 0..3 {
        let o = orient(&t[i], &t[(i + 1) % 3], p);
        if o == -s || (strict && o == 0) {
            return false;
        }
    }
    true
}

/// Whether `p` lies on segment `[a, b]`; `strict` excludes the endpoints.
pub fn point_on_segment(p: &Point, a: &Point, b: &Point, strict: bool) -> bool {
    let ab = b.sub(a);
    let ap = p.sub(a);
    if !ab.cross(&ap).is_zero() {
        return false;
    }
    let t = ab.dot(&ap);
    let len2 = ab.norm2();
    let lo = t.signum();
    let hi = (&t - &len2).signum();
    if strict {
        lo > 0 && hi < 0
    } else {
        lo >= 0 && hi <= 0
    }
}

/// Whether the interiors of two nondegenerate triangles intersect.
///
/// Separating-axis test over the six edge lines: the interiors are disjoint
/// iff some edge line of one triangle has the whole other triangle on its
/// outer closed side.
pub fn triangles_interior_disjoint(t1: &[Point; 3], t2: &[Point; 3]) -> bool {
    separating_edge(t1, t2) || separating_edge(t2, t1)
}

fn separating_edge(t: &[Point; 3], other: &[Point; 3]) -> bool {
    for i in 0..3 {
        let p = &t[i];
        let q = &t[(i + 1) % 3];
        let w = &t[(i + 2) % 3];
        let side = orient(p, q, w);
        debug_assert!(side != 0);
        if other.iter().all(|v| {
            let o = orient(p, q, v);
            o == 0 || o == -side
        }) {
            return true;
        }
    }
    false
}

/// Whether segments `[a, b]` and `[c, d]` are collinear and overlap in a
/// segment of positive length.
pub fn segments_overlap_positively(a: &Point, b: &Point, c: &Point, d: &Point) -> bool {
    let ab = b.sub(a);
    if !ab.cross(&c.sub(a)).is_zero() || !ab.cross(&d.sub(a)).is_zero() {
        return false;
    }
    // Project onto ab: overlap of [0, |ab|^2] with [tc, td].
    let tc = ab.dot(&c.sub(a));
    let td = ab.dot(&d.sub(a));
    let len2 = ab.norm2();
    let (lo, hi) = if tc.cmp_exact(&td) == std::cmp::Ordering::Less {
        (tc, td)
    } else {
        (td, tc)
    };
    let start = if lo.signum() > 0 { lo } else { QuadScalar::zero() };
    let end = if (&hi - &len2).signum() < 0 { hi } else { len2 };
    (&end - &start).signum() > 0
}

/// Whether two triangles of a tiling share a boundary segment of positive
/// length. Valid tiles never properly cross, so checking edge pairs suffices.
pub fn triangles_share_segment(t1: &[Point; 3], t2: &[Point; 3]) -> bool {
    for i in 0..3 {
        for j in 0..3 {
            if segments_overlap_positively(
                &t1[i],
                &t1[(i + 1) % 3],
                &t2[j],
                &t2[(j + 1) % 3],
            ) {
                return true;
            }
        }
    }
    false
}

/// Outward-rounded floating-point bounds, safe for pruning only.
#[derive(Clone, Copy, Debug)]
pub struct ApproxBox {
    pub min_x: f64,
    pub min_y: f64,
    pub max_x: f64,
    pub max_y: f64,
}

fn pad(v: f64) -> f64 {
    v.abs() * 1e-9 + 1e-9
}

impl ApproxBox {
    pub fn of_triangle(t: &[Point; 3]) -> ApproxBox {
        let xs: Vec<f64> = t.iter().map(|p| p.x.to_f64()).collect();
        let ys: Vec<f64> = t.iter().map(|p| p.y.to_f64()).collect();
        let min_x = xs.iter().cloned().fold(f64::INFINITY, f64::min);
        let max_x = xs.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
        let min_y = ys.iter().cloned().fold(f64::INFINITY, f64::min);
        let max_y = ys.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
        ApproxBox {
            min_x: min_x - pad(min_x),
            min_y: min_y - pad(min_y),
            max_x: max_x + pad(max_x),
            max_y: max_y + pad(max_y),
        }
    }

    pub fn intersects(&self, other: &ApproxBox) -> bool {
        self.min_x <= other.max_x
            && other.min_x <= self.max_x
            && self.min_y <= other.max_y
            && other.min_y <= self.max_y
    }
}

/// Exact angular direction of a nonzero vector, ordered counterclockwise
/// starting from the positive x-axis. Equality is directional: two vectors
/// compare equal iff they are positive multiples of each other.
#[derive(Clone, Debug)]
pub struct Direction(pub Vec2);

impl PartialEq for Direction {
    fn eq(&self, other: &Direction) -> bool {
        self.0.cross(&other.0).is_zero() && self.0.dot(&other.0).signum() > 0
    }
}

impl Eq for Direction {}

impl Direction {
    pub fn of(v: Vec2) -> Direction {
        debug_assert!(!v.is_zero());
        Direction(v)
    }

    fn half(&self) -> u8 {
        // 0: angle in [0, pi), 1: in [pi, 2 pi)
        let sy = self.0.y.signum();
        if sy > 0 || (sy == 0 && self.0.x.signum() > 0) {
            0
        } else {
            1
        }
    }

    pub fn cmp_ccw(&self, other: &Direction) -> std::cmp::Ordering {
        let (h1, h2) = (self.half(), other.half());
        if h1 != h2 {
            return h1.cmp(&h2);
        }
        // Same half-plane: compare by cross product.
        match self.0.cross(&other.0).signum() {
            1 => std::cmp::Ordering::Less,
            -1 => std::cmp::Ordering::Greater,
            _ => std::cmp::Ordering::Equal,
        }
    }

    pub fn opposite(&self) -> Direction {
        Direction(Vec2::new(-&self.0.x, -&self.0.y))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::QuadScalar;

    fn p(x: i64, y: i64) -> Point {
        Point::from_ints(x, y)
    }

    #[test]
    fn interior_disjoint_cases() {
        let a = [p(0, 0), p(2, 0), p(0, 2)];
        // Identical triangles overlap.
        assert!(!triangles_interior_disjoint(&a, &a));
        // Sharing a full edge, opposite sides: disjoint.
        let b = [p(2, 0), p(0, 2), p(2, 2)];
        assert!(triangles_interior_disjoint(&a, &b));
        // Touching at a single point: disjoint.
        let c = [p(2, 0), p(4, 0), p(2, 2)];
        assert!(triangles_interior_disjoint(&a, &c));
        // One inside the other: overlap.
        let d = [p(0, 0), p(1, 0), p(0, 1)];
        assert!(!triangles_interior_disjoint(&a, &d));
        // Far apart: disjoint.
        let e = [p(10, 10), p(12, 10), p(10, 12)];
        assert!(triangles_interior_disjoint(&a, &e));
        // Proper crossing: overlap.
        let f = [p(1, -1), p(3, 1), p(-1, 1)];
        assert!(!triangles_interior_disjoint(&a, &f));
    }

    #[test]
    fn segment_overlap_cases() {
        assert!(segments_overlap_positively(
            &p(0, 0),
            &p(4, 0),
            &p(1, 0),
            &p(2, 0)
        ));
        // Touching in one point only.
        assert!(!segments_overlap_positively(
            &p(0, 0),
            &p(1, 0),
            &p(1, 0),
            &p(2, 0)
        ));
        // Parallel but offset.
        assert!(!segments_overlap_positively(
            &p(0, 0),
            &p(1, 0),
            &p(0, 1),
            &p(1, 1)
        ));
        // Crossing, not collinear.
        assert!(!segments_overlap_positively(
            &p(0, 0),
            &p(2, 2),
            &p(0, 2),
            &p(2, 0)
        ));
    }

    #[test]
    fn point_tests() {
        let t = [p(0, 0), p(4, 0), p(0, 4)];
        assert!(point_in_triangle(&p(1, 1), &t, true));
        assert!(point_in_triangle(&p(2, 0), &t, false));
        assert!(!point_in_triangle(&p(2, 0), &t, true));
        assert!(!point_in_triangle(&p(5, 5), &t, false));
        assert!(point_on_segment(&p(2, 0), &p(0, 0), &p(4, 0), true));
        assert!(!point_on_segment(&p(0, 0), &p(0, 0), &p(4, 0), true));
        assert!(point_on_segment(&p(0, 0), &p(0, 0), &p(4, 0), false));
    }

    #[test]
    fn direction_order() {
        let dirs = [
            Direction::of(Vec2::new(QuadScalar::from_int(1), QuadScalar::from_int(0))),
            Direction::of(Vec2::new(QuadScalar::from_int(1), QuadScalar::from_int(1))),
            Direction::of(Vec2::new(QuadScalar::from_int(0), QuadScalar::from_int(1))),
            Direction::of(Vec2::new(QuadScalar::from_int(-1), QuadScalar::from_int(0))),
            Direction::of(Vec2::new(QuadScalar::from_int(0), QuadScalar::from_int(-1))),
        ];
        for w in dirs.windows(2) {
            assert_eq!(w[0].cmp_ccw(&w[1]), std::cmp::Ordering::Less);
        }
    }
}
