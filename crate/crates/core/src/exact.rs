//! Exact arithmetic over `Q` and `Q(sqrt(d))`, points, and affine similarity
//! maps.
//!
//! A [`QuadScalar`] stores `a + b*sqrt(d)` with arbitrary-precision rational
//! `a`, `b`, `d`. Representation is unique: if `d` is the square of a
//! rational the irrational part is collapsed into `a` at construction, and a
//! scalar with `b == 0` always carries `d == 0`. Structural equality is
//! therefore semantic equality. Two scalars with distinct nonzero radicands
//! belong to different scenes; combining them is a programming error and
//! panics.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

/// Arbitrary-precision rational, always in lowest terms with positive
/// denominator.
pub type Rational = BigRational;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ExactError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("radicand must be nonnegative")]
    NegativeRadicand,
    #[error("source triangle is degenerate")]
    DegenerateSource,
    #[error("the affine map sending the given triangles is not a similarity")]
    NotASimilarity,
    #[error("linear system is singular")]
    SingularSystem,
}

/// Shorthand for building a `Rational` from an integer.
pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// `num/den` as a rational; panics if `den == 0`.
pub fn ratio(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

/// Exact square root of a rational, if it is the square of a rational.
pub fn rational_sqrt(q: &Rational) -> Option<Rational> {
    if q.is_negative() {
        return None;
    }
    let sn = q.numer().sqrt();
    if &sn * &sn != *q.numer() {
        return None;
    }
    let sd = q.denom().sqrt();
    if &sd * &sd != *q.denom() {
        return None;
    }
    Some(Rational::new(sn, sd))
}

/// Exact number `a + b*sqrt(d)` over the rationals.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct QuadScalar {
    a: Rational,
    b: Rational,
    d: Rational,
}

impl QuadScalar {
    /// Builds `a + b*sqrt(d)`, collapsing perfect-square radicands so the
    /// representation is unique. Panics if `d < 0`.
    pub fn new(a: Rational, b: Rational, d: Rational) -> QuadScalar {
        assert!(!d.is_negative(), "radicand must be nonnegative");
        let mut s = QuadScalar { a, b, d };
        s.normalize();
        s
    }

    pub fn from_rational(a: Rational) -> QuadScalar {
        QuadScalar {
            a,
            b: Rational::zero(),
            d: Rational::zero(),
        }
    }

    pub fn from_int(n: i64) -> QuadScalar {
        QuadScalar::from_rational(rat(n))
    }

    /// `sqrt(d)` as a scalar (collapsed if `d` is a perfect square).
    pub fn sqrt_of(d: Rational) -> QuadScalar {
        QuadScalar::new(Rational::zero(), Rational::one(), d)
    }

    pub fn zero() -> QuadScalar {
        QuadScalar::from_int(0)
    }

    pub fn one() -> QuadScalar {
        QuadScalar::from_int(1)
    }

    pub fn rational_part(&self) -> &Rational {
        &self.a
    }

    pub fn radical_coeff(&self) -> &Rational {
        &self.b
    }

    pub fn radicand(&self) -> &Rational {
        &self.d
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    pub fn is_rational(&self) -> bool {
        self.b.is_zero()
    }

    /// The rational value if `b == 0`.
    pub fn as_rational(&self) -> Option<&Rational> {
        if self.b.is_zero() {
            Some(&self.a)
        } else {
            None
        }
    }

    fn normalize(&mut self) {
        if self.b.is_zero() || self.d.is_zero() {
            self.b = Rational::zero();
            self.d = Rational::zero();
            return;
        }
        if let Some(s) = rational_sqrt(&self.d) {
            self.a = &self.a + &self.b * s;
            self.b = Rational::zero();
            self.d = Rational::zero();
        }
    }

    fn unify_radicand(&self, other: &QuadScalar) -> Rational {
        if self.b.is_zero() {
            other.d.clone()
        } else if other.b.is_zero() || self.d == other.d {
            self.d.clone()
        } else {
            panic!(
                "incompatible radicands: sqrt({}) vs sqrt({})",
                self.d, other.d
            );
        }
    }

    /// Sign of the real number, decided exactly: when `a` and `b` disagree in
    /// sign, compare `a^2` against `b^2 * d`.
    pub fn signum(&self) -> i32 {
        let sa = rational_signum(&self.a);
        if self.b.is_zero() {
            return sa;
        }
        let sb = rational_signum(&self.b);
        if sa == 0 {
            return sb;
        }
        if sa == sb {
            return sa;
        }
        let a2 = &self.a * &self.a;
        let b2d = &self.b * &self.b * &self.d;
        match a2.cmp(&b2d) {
            Ordering::Greater => sa,
            Ordering::Less => sb,
            Ordering::Equal => 0,
        }
    }

    pub fn is_positive(&self) -> bool {
        self.signum() > 0
    }

    pub fn is_negative(&self) -> bool {
        self.signum() < 0
    }

    pub fn abs(&self) -> QuadScalar {
        if self.is_negative() {
            -self
        } else {
            self.clone()
        }
    }

    /// Multiplicative inverse via the conjugate:
    /// `1/(a + b*sqrt(d)) = (a - b*sqrt(d)) / (a^2 - b^2 d)`.
    pub fn inverse(&self) -> Result<QuadScalar, ExactError> {
        if self.is_zero() {
            return Err(ExactError::DivisionByZero);
        }
        let norm = &self.a * &self.a - &self.b * &self.b * &self.d;
        debug_assert!(!norm.is_zero());
        Ok(QuadScalar {
            a: &self.a / &norm,
            b: -(&self.b / &norm),
            d: if self.b.is_zero() {
                Rational::zero()
            } else {
                self.d.clone()
            },
        })
    }

    pub fn checked_div(&self, other: &QuadScalar) -> Result<QuadScalar, ExactError> {
        Ok(self * &other.inverse()?)
    }

    /// Exact in-field square root: a `t >= 0` with `t*t == self`, expressed
    /// over the scene radicand `d`, if one exists.
    pub fn sqrt_in_field(&self, d: &Rational) -> Option<QuadScalar> {
        let sign = self.signum();
        if sign < 0 {
            return None;
        }
        if sign == 0 {
            return Some(QuadScalar::zero());
        }
        if let Some(a) = self.as_rational() {
            if let Some(r) = rational_sqrt(a) {
                return Some(QuadScalar::from_rational(r));
            }
            // a = y^2 * d for rational y
            if !d.is_zero() {
                if let Some(y) = rational_sqrt(&(a / d)) {
                    return Some(QuadScalar::new(Rational::zero(), y, d.clone()));
                }
            }
            return None;
        }
        // (u + v sqrt(d))^2 = a + b sqrt(d): u^2 + v^2 d = a, 2uv = b.
        // u^2 solves t^2 - a t + b^2 d / 4 = 0.
        let disc = &self.a * &self.a - &self.b * &self.b * &self.d;
        let s = rational_sqrt(&disc)?;
        let two = rat(2);
        for root in [(&self.a + &s) / &two, (&self.a - &s) / &two] {
            if let Some(u) = rational_sqrt(&root) {
                if u.is_zero() {
                    continue;
                }
                let v = &self.b / (&u * &two);
                let cand = QuadScalar::new(u, v, self.d.clone());
                if cand.signum() >= 0 && (&cand * &cand) == *self {
                    return Some(cand);
                }
                let neg = -&cand;
                if neg.signum() >= 0 && (&neg * &neg) == *self {
                    return Some(neg);
                }
            }
        }
        None
    }

    /// Decimal approximation; used only at rendering boundaries.
    pub fn to_f64(&self) -> f64 {
        let mut v = rational_to_f64(&self.a);
        if !self.b.is_zero() {
            v += rational_to_f64(&self.b) * rational_to_f64(&self.d).sqrt();
        }
        v
    }

    /// Exact comparison within a scene. Panics on incompatible radicands.
    pub fn cmp_exact(&self, other: &QuadScalar) -> Ordering {
        if self == other {
            return Ordering::Equal;
        }
        match (self - other).signum() {
            1 => Ordering::Greater,
            -1 => Ordering::Less,
            _ => Ordering::Equal,
        }
    }
}

pub fn rational_signum(q: &Rational) -> i32 {
    if q.is_zero() {
        0
    } else if q.is_positive() {
        1
    } else {
        -1
    }
}

pub fn rational_to_f64(q: &Rational) -> f64 {
    num_traits::ToPrimitive::to_f64(q).unwrap_or(f64::NAN)
}

impl PartialOrd for QuadScalar {
    fn partial_cmp(&self, other: &QuadScalar) -> Option<Ordering> {
        Some(self.cmp_exact(other))
    }
}

impl Ord for QuadScalar {
    fn cmp(&self, other: &QuadScalar) -> Ordering {
        self.cmp_exact(other)
    }
}

impl fmt::Debug for QuadScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.b.is_zero() {
            write!(f, "{}", self.a)
        } else {
            write!(f, "{} + {}*sqrt({})", self.a, self.b, self.d)
        }
    }
}

impl fmt::Display for QuadScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

impl<'a, 'b> Add<&'b QuadScalar> for &'a QuadScalar {
    type Output = QuadScalar;
    fn add(self, rhs: &'b QuadScalar) -> QuadScalar {
        let d = self.unify_radicand(rhs);
        QuadScalar::new(&self.a + &rhs.a, &self.b + &rhs.b, d)
    }
}

impl<'a, 'b> Sub<&'b QuadScalar> for &'a QuadScalar {
    type Output = QuadScalar;
    fn sub(self, rhs: &'b QuadScalar) -> QuadScalar {
        let d = self.unify_radicand(rhs);
        QuadScalar::new(&self.a - &rhs.a, &self.b - &rhs.b, d)
    }
}

impl<'a, 'b> Mul<&'b QuadScalar> for &'a QuadScalar {
    type Output = QuadScalar;
    fn mul(self, rhs: &'b QuadScalar) -> QuadScalar {
        let d = self.unify_radicand(rhs);
        let a = &self.a * &rhs.a + &self.b * &rhs.b * &d;
        let b = &self.a * &rhs.b + &self.b * &rhs.a;
        QuadScalar::new(a, b, d)
    }
}

impl<'a, 'b> Div<&'b QuadScalar> for &'a QuadScalar {
    type Output = QuadScalar;
    fn div(self, rhs: &'b QuadScalar) -> QuadScalar {
        self.checked_div(rhs).expect("division by zero")
    }
}

impl<'a> Neg for &'a QuadScalar {
    type Output = QuadScalar;
    fn neg(self) -> QuadScalar {
        QuadScalar {
            a: -&self.a,
            b: -&self.b,
            d: self.d.clone(),
        }
    }
}

macro_rules! forward_owned_binop {
    ($tr:ident, $m:ident) => {
        impl $tr<QuadScalar> for QuadScalar {
            type Output = QuadScalar;
            fn $m(self, rhs: QuadScalar) -> QuadScalar {
                (&self).$m(&rhs)
            }
        }
        impl<'a> $tr<&'a QuadScalar> for QuadScalar {
            type Output = QuadScalar;
            fn $m(self, rhs: &'a QuadScalar) -> QuadScalar {
                (&self).$m(rhs)
            }
        }
        impl<'a> $tr<QuadScalar> for &'a QuadScalar {
            type Output = QuadScalar;
            fn $m(self, rhs: QuadScalar) -> QuadScalar {
                self.$m(&rhs)
            }
        }
    };
}

forward_owned_binop!(Add, add);
forward_owned_binop!(Sub, sub);
forward_owned_binop!(Mul, mul);
forward_owned_binop!(Div, div);

impl Neg for QuadScalar {
    type Output = QuadScalar;
    fn neg(self) -> QuadScalar {
        -&self
    }
}

/// A point of the scene plane.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Point {
    pub x: QuadScalar,
    pub y: QuadScalar,
}

impl Point {
    pub fn new(x: QuadScalar, y: QuadScalar) -> Point {
        Point { x, y }
    }

    pub fn from_ints(x: i64, y: i64) -> Point {
        Point::new(QuadScalar::from_int(x), QuadScalar::from_int(y))
    }

    pub fn sub(&self, other: &Point) -> Vec2 {
        Vec2 {
            x: &self.x - &other.x,
            y: &self.y - &other.y,
        }
    }

    pub fn add(&self, v: &Vec2) -> Point {
        Point {
            x: &self.x + &v.x,
            y: &self.y + &v.y,
        }
    }
}

impl fmt::Debug for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({:?}, {:?})", self.x, self.y)
    }
}

/// A displacement between points.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Vec2 {
    pub x: QuadScalar,
    pub y: QuadScalar,
}

impl Vec2 {
    pub fn new(x: QuadScalar, y: QuadScalar) -> Vec2 {
        Vec2 { x, y }
    }

    pub fn cross(&self, other: &Vec2) -> QuadScalar {
        &(&self.x * &other.y) - &(&self.y * &other.x)
    }

    pub fn dot(&self, other: &Vec2) -> QuadScalar {
        &(&self.x * &other.x) + &(&self.y * &other.y)
    }

    pub fn norm2(&self) -> QuadScalar {
        self.dot(self)
    }

    pub fn scale(&self, s: &QuadScalar) -> Vec2 {
        Vec2 {
            x: &self.x * s,
            y: &self.y * s,
        }
    }

    /// Counterclockwise quarter turn.
    pub fn perp(&self) -> Vec2 {
        Vec2 {
            x: -&self.y,
            y: self.x.clone(),
        }
    }

    pub fn add(&self, other: &Vec2) -> Vec2 {
        Vec2 {
            x: &self.x + &other.x,
            y: &self.y + &other.y,
        }
    }

    pub fn is_zero(&self) -> bool {
        self.x.is_zero() && self.y.is_zero()
    }
}

/// Twice the signed area of a triangle (positive for counterclockwise order).
pub fn triangle_area2(p1: &Point, p2: &Point, p3: &Point) -> QuadScalar {
    p2.sub(p1).cross(&p3.sub(p1))
}

/// An affine map whose linear part is a scaled orthogonal matrix. A negative
/// determinant marks an indirect (reflecting) similarity.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct AffineSimilarity {
    pub m00: QuadScalar,
    pub m01: QuadScalar,
    pub m10: QuadScalar,
    pub m11: QuadScalar,
    pub tx: QuadScalar,
    pub ty: QuadScalar,
}

impl AffineSimilarity {
    /// Validates the scaled-orthogonality invariant and nonzero determinant.
    pub fn new(
        m00: QuadScalar,
        m01: QuadScalar,
        m10: QuadScalar,
        m11: QuadScalar,
        tx: QuadScalar,
        ty: QuadScalar,
    ) -> Result<AffineSimilarity, ExactError> {
        let s = AffineSimilarity {
            m00,
            m01,
            m10,
            m11,
            tx,
            ty,
        };
        let col0 = &(&s.m00 * &s.m00) + &(&s.m10 * &s.m10);
        let col1 = &(&s.m01 * &s.m01) + &(&s.m11 * &s.m11);
        let ortho = &(&s.m00 * &s.m01) + &(&s.m10 * &s.m11);
        if col0 != col1 || !ortho.is_zero() {
            return Err(ExactError::NotASimilarity);
        }
        if s.det().is_zero() {
            return Err(ExactError::NotASimilarity);
        }
        Ok(s)
    }

    pub fn identity() -> AffineSimilarity {
        AffineSimilarity {
            m00: QuadScalar::one(),
            m01: QuadScalar::zero(),
            m10: QuadScalar::zero(),
            m11: QuadScalar::one(),
            tx: QuadScalar::zero(),
            ty: QuadScalar::zero(),
        }
    }

    pub fn det(&self) -> QuadScalar {
        &(&self.m00 * &self.m11) - &(&self.m01 * &self.m10)
    }

    pub fn apply(&self, p: &Point) -> Point {
        Point {
            x: &(&(&self.m00 * &p.x) + &(&self.m01 * &p.y)) + &self.tx,
            y: &(&(&self.m10 * &p.x) + &(&self.m11 * &p.y)) + &self.ty,
        }
    }

    pub fn apply_triangle(&self, t: &[Point; 3]) -> [Point; 3] {
        [
            self.apply(&t[0]),
            self.apply(&t[1]),
            self.apply(&t[2]),
        ]
    }

    /// `self` after `other`: `(self.compose(other))(p) = self(other(p))`.
    pub fn compose(&self, other: &AffineSimilarity) -> AffineSimilarity {
        AffineSimilarity {
            m00: &(&self.m00 * &other.m00) + &(&self.m01 * &other.m10),
            m01: &(&self.m00 * &other.m01) + &(&self.m01 * &other.m11),
            m10: &(&self.m10 * &other.m00) + &(&self.m11 * &other.m10),
            m11: &(&self.m10 * &other.m01) + &(&self.m11 * &other.m11),
            tx: &(&(&self.m00 * &other.tx) + &(&self.m01 * &other.ty)) + &self.tx,
            ty: &(&(&self.m10 * &other.tx) + &(&self.m11 * &other.ty)) + &self.ty,
        }
    }

    pub fn inverse(&self) -> Result<AffineSimilarity, ExactError> {
        let det = self.det();
        if det.is_zero() {
            return Err(ExactError::SingularSystem);
        }
        let m00 = &self.m11 / &det;
        let m01 = &(-&self.m01) / &det;
        let m10 = &(-&self.m10) / &det;
        let m11 = &self.m00 / &det;
        let tx = -(&(&m00 * &self.tx) + &(&m01 * &self.ty));
        let ty = -(&(&m10 * &self.tx) + &(&m11 * &self.ty));
        Ok(AffineSimilarity {
            m00,
            m01,
            m10,
            m11,
            tx,
            ty,
        })
    }
}

/// The unique affine map sending `src` vertices to `dst` vertices in order,
/// provided it is a similarity.
pub fn similarity_from_triangles(
    src: &[Point; 3],
    dst: &[Point; 3],
) -> Result<AffineSimilarity, ExactError> {
    let u1 = src[1].sub(&src[0]);
    let v1 = src[2].sub(&src[0]);
    let det = u1.cross(&v1);
    if det.is_zero() {
        return Err(ExactError::DegenerateSource);
    }
    let u2 = dst[1].sub(&dst[0]);
    let v2 = dst[2].sub(&dst[0]);
    // M = [u2 v2] * [u1 v1]^{-1}
    let inv00 = &v1.y / &det;
    let inv01 = &(-&v1.x) / &det;
    let inv10 = &(-&u1.y) / &det;
    let inv11 = &u1.x / &det;
    let m00 = &(&u2.x * &inv00) + &(&v2.x * &inv10);
    let m01 = &(&u2.x * &inv01) + &(&v2.x * &inv11);
    let m10 = &(&u2.y * &inv00) + &(&v2.y * &inv10);
    let m11 = &(&u2.y * &inv01) + &(&v2.y * &inv11);
    let tx = &dst[0].x - &(&(&m00 * &src[0].x) + &(&m01 * &src[0].y));
    let ty = &dst[0].y - &(&(&m10 * &src[0].x) + &(&m11 * &src[0].y));
    AffineSimilarity::new(m00, m01, m10, m11, tx, ty)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn qs(a: i64, b: i64, d: i64) -> QuadScalar {
        QuadScalar::new(rat(a), rat(b), rat(d))
    }

    #[test]
    fn sign_of_zero() {
        assert_eq!(qs(0, 0, 7).signum(), 0);
    }

    #[test]
    fn sign_of_mixed_signs() {
        // -3 + 2*sqrt(7) > 0 since 4*7 = 28 > 9
        assert_eq!(qs(-3, 2, 7).signum(), 1);
        // 3 - 2*sqrt(2) > 0 since 9 > 8
        assert_eq!(qs(3, -2, 2).signum(), 1);
        assert_eq!(qs(-3, 1, 2).signum(), -1);
    }

    #[test]
    fn conjugate_product() {
        let x = qs(1, 1, 2);
        let y = qs(1, -1, 2);
        assert_eq!(&x * &y, qs(-1, 0, 0));
    }

    #[test]
    fn radicand_square() {
        let s = qs(0, 1, 7);
        assert_eq!(&s * &s, QuadScalar::from_int(7));
    }

    #[test]
    fn inverse_of_one_plus_sqrt2() {
        let x = qs(1, 1, 2);
        let inv = x.inverse().unwrap();
        assert_eq!(inv, qs(-1, 1, 2));
        assert_eq!(&x * &inv, QuadScalar::one());
    }

    #[test]
    fn division_by_zero_reported() {
        assert_eq!(
            QuadScalar::one().checked_div(&QuadScalar::zero()),
            Err(ExactError::DivisionByZero)
        );
    }

    #[test]
    fn perfect_square_collapse() {
        // b*sqrt(9/4) collapses: a + 2*sqrt(9/4) = a + 3
        let s = QuadScalar::new(rat(1), rat(2), ratio(9, 4));
        assert_eq!(s, QuadScalar::from_int(4));
        assert!(s.is_rational());
    }

    #[test]
    fn div_mul_roundtrip() {
        let x = qs(3, 2, 5);
        let y = qs(-1, 4, 5);
        let q = &x / &y;
        assert_eq!(&q * &y, x);
    }

    #[test]
    fn sign_multiplicative() {
        let vals = [qs(0, 0, 3), qs(2, -1, 3), qs(-5, 3, 3), qs(1, 1, 3)];
        for x in &vals {
            for y in &vals {
                assert_eq!((x * y).signum(), x.signum() * y.signum());
            }
        }
    }

    #[test]
    fn sqrt_in_field_cases() {
        let d = rat(15);
        // sqrt(15/16) = (1/4) sqrt(15)
        let x = QuadScalar::from_rational(ratio(15, 16));
        let r = x.sqrt_in_field(&d).unwrap();
        assert_eq!(&r * &r, x);
        assert!(!r.is_rational());
        // sqrt(4) = 2
        let y = QuadScalar::from_int(4);
        assert_eq!(y.sqrt_in_field(&d).unwrap(), QuadScalar::from_int(2));
        // sqrt(7 + 4 sqrt(3)) = 2 + sqrt(3)
        let z = QuadScalar::new(rat(7), rat(4), rat(3));
        let s = z.sqrt_in_field(&rat(3)).unwrap();
        assert_eq!(s, QuadScalar::new(rat(2), rat(1), rat(3)));
        // sqrt(2) over d = 3: not representable
        assert!(QuadScalar::from_int(2).sqrt_in_field(&rat(3)).is_none());
    }

    #[test]
    fn similarity_example() {
        let src = [
            Point::from_ints(0, 0),
            Point::from_ints(2, 0),
            Point::from_ints(1, 1),
        ];
        let dst = [
            Point::from_ints(0, 0),
            Point::from_ints(1, 1),
            Point::from_ints(1, 0),
        ];
        let m = similarity_from_triangles(&src, &dst).unwrap();
        assert_eq!(m.m00, QuadScalar::from_rational(ratio(1, 2)));
        assert_eq!(m.m01, QuadScalar::from_rational(ratio(1, 2)));
        assert_eq!(m.m10, QuadScalar::from_rational(ratio(1, 2)));
        assert_eq!(m.m11, QuadScalar::from_rational(ratio(-1, 2)));
        assert!(m.tx.is_zero() && m.ty.is_zero());
        assert_eq!(m.det(), QuadScalar::from_rational(ratio(-1, 2)));
        for (s, d) in src.iter().zip(dst.iter()) {
            assert_eq!(&m.apply(s), d);
        }
    }

    #[test]
    fn similarity_identity() {
        let src = [
            Point::from_ints(0, 0),
            Point::from_ints(2, 0),
            Point::from_ints(1, 1),
        ];
        let m = similarity_from_triangles(&src, &src).unwrap();
        assert_eq!(m, AffineSimilarity::identity());
        assert_eq!(m.det(), QuadScalar::one());
    }

    #[test]
    fn shear_is_not_similarity() {
        let src = [
            Point::from_ints(0, 0),
            Point::from_ints(1, 0),
            Point::from_ints(0, 1),
        ];
        let dst = [
            Point::from_ints(0, 0),
            Point::from_ints(2, 0),
            Point::from_ints(1, 1),
        ];
        assert_eq!(
            similarity_from_triangles(&src, &dst),
            Err(ExactError::NotASimilarity)
        );
    }

    #[test]
    fn degenerate_source_rejected() {
        let src = [
            Point::from_ints(0, 0),
            Point::from_ints(1, 0),
            Point::from_ints(2, 0),
        ];
        let dst = src.clone();
        assert_eq!(
            similarity_from_triangles(&src, &dst),
            Err(ExactError::DegenerateSource)
        );
    }

    #[test]
    fn similarity_composition_sends_vertices() {
        let a = [
            Point::from_ints(0, 0),
            Point::from_ints(4, 0),
            Point::from_ints(1, 2),
        ];
        let b = [
            Point::from_ints(1, 1),
            Point::from_ints(1, 9),
            Point::from_ints(-3, 3),
        ];
        // c is b rotated a quarter turn and translated.
        let c = [
            Point::from_ints(0, 1),
            Point::from_ints(-8, 1),
            Point::from_ints(-2, -3),
        ];
        let ab = similarity_from_triangles(&a, &b).unwrap();
        let bc = similarity_from_triangles(&b, &c).unwrap();
        let ac = bc.compose(&ab);
        for (p, q) in a.iter().zip(c.iter()) {
            assert_eq!(&ac.apply(p), q);
        }
    }

    #[test]
    fn area2_examples() {
        assert_eq!(
            triangle_area2(
                &Point::from_ints(0, 0),
                &Point::from_ints(2, 0),
                &Point::from_ints(1, 1)
            ),
            QuadScalar::from_int(2)
        );
        assert_eq!(
            triangle_area2(
                &Point::from_ints(0, 0),
                &Point::from_ints(1, 0),
                &Point::from_ints(2, 0)
            ),
            QuadScalar::zero()
        );
        assert_eq!(
            triangle_area2(
                &Point::from_ints(0, 0),
                &Point::from_ints(0, 1),
                &Point::from_ints(1, 0)
            ),
            QuadScalar::from_int(-1)
        );
    }
}
