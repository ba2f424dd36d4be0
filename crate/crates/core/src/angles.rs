//! Exact enumeration of vertex angle signatures and side-length relations.
//!
//! Angles are handled in two regimes: as exact rational multiples of pi, or
//! as a one-parameter family `alpha, k*alpha, pi - (k+1)*alpha` where `alpha`
//! satisfies no rational relation with pi, so identities must match the
//! `alpha` and `pi` coefficients separately.

use num_traits::{One, Signed};
use thiserror::Error;

use crate::exact::{rat, ratio, QuadScalar, Rational};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum AngleError {
    #[error("invalid angle specification: {0}")]
    InvalidSpec(String),
    #[error("precondition not met: {0}")]
    PreconditionNotMet(String),
}

/// The three angles of a triangle, as an exact specification.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AngleSpec {
    /// Angles are the given rational multiples of pi; they must sum to 1.
    RationalPi([Rational; 3]),
    /// Angles `alpha, k*alpha, pi - (k+1)*alpha` with `alpha` generic.
    Family { k: u32 },
}

impl AngleSpec {
    pub fn rational_pi(fractions: [Rational; 3]) -> Result<AngleSpec, AngleError> {
        let sum: Rational = fractions.iter().cloned().sum();
        if fractions.iter().any(|f| !f.is_positive()) || sum != Rational::one() {
            return Err(AngleError::InvalidSpec(
                "angles must be positive and sum to pi".into(),
            ));
        }
        Ok(AngleSpec::RationalPi(fractions))
    }

    pub fn two_pi_over_m(m: u64, k: u32) -> Result<AngleSpec, AngleError> {
        let alpha = ratio(2, m as i64);
        let delta = ratio(2 * k as i64, m as i64);
        let phi = Rational::one() - &alpha - &delta;
        AngleSpec::rational_pi([alpha, delta, phi])
    }

    pub fn family(k: u32) -> Result<AngleSpec, AngleError> {
        if k < 2 {
            return Err(AngleError::InvalidSpec("family needs k >= 2".into()));
        }
        Ok(AngleSpec::Family { k })
    }
}

/// Target angle sum at a vertex.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Target {
    /// A boundary (half) vertex: the angles fill pi.
    HalfTurn,
    /// A full (interior) vertex: the angles fill 2 pi.
    FullTurn,
}

impl Target {
    fn pi_multiple(self) -> i64 {
        match self {
            Target::HalfTurn => 1,
            Target::FullTurn => 2,
        }
    }
}

/// Nonnegative integer multiplicities `(d0, d1, d2)` with
/// `d0*a0 + d1*a1 + d2*a2 = target`.
pub type VertexSignature = (u64, u64, u64);

fn floor_u64(q: &Rational) -> u64 {
    if q.is_negative() {
        0
    } else {
        u64::try_from(q.to_integer()).unwrap_or(u64::MAX)
    }
}

/// Complete list of vertex signatures for the spec at the target, sorted.
pub fn vertex_signatures(spec: &AngleSpec, target: Target) -> Vec<VertexSignature> {
    let mut out = Vec::new();
    match spec {
        AngleSpec::RationalPi(fr) => {
            let goal = rat(target.pi_multiple());
            for d0 in 0..=floor_u64(&(&goal / &fr[0])) {
                let rem0 = &goal - &fr[0] * rat(d0 as i64);
                if rem0.is_negative() {
                    break;
                }
                for d1 in 0..=floor_u64(&(&rem0 / &fr[1])) {
                    let rem1 = &rem0 - &fr[1] * rat(d1 as i64);
                    if rem1.is_negative() {
                        break;
                    }
                    let q = &rem1 / &fr[2];
                    if q.is_integer() {
                        out.push((d0, d1, u64::try_from(q.to_integer()).unwrap()));
                    }
                }
            }
        }
        AngleSpec::Family { k } => {
            // Coefficient matching: d2 = target on the pi part and
            // d0 + k*d1 = (k+1)*d2 on the alpha part.
            let k = *k as u64;
            let d2 = target.pi_multiple() as u64;
            let need = (k + 1) * d2;
            let mut d1 = 0;
            while k * d1 <= need {
                out.push((need - k * d1, d1, d2));
                d1 += 1;
            }
        }
    }
    out.sort();
    out
}

/// Candidate acute-triangle angle triples admitting a `k`-splitting
/// gentiling with `k >= 3`, replayed from the counting constraints: the
/// smallest angle must be `2 pi / m` for odd `m in {4k+1, 4k+3}`, the
/// triangle must be acute and scalene, and a full vertex must hold five
/// large angles, so `5 beta <= 2 pi` for the middle angle `beta`. The
/// isosceles branch solves to `k <= 2` and is empty here.
pub fn splitting_candidates(k: u32) -> Result<Vec<[Rational; 3]>, AngleError> {
    if k < 3 {
        return Err(AngleError::PreconditionNotMet("needs k >= 3".into()));
    }
    let mut out = Vec::new();
    // Isosceles branch: beta = k pi/(2k+1) and 5 beta <= 2 pi solves to
    // k <= 2.
    let iso_beta = ratio(k as i64, 2 * k as i64 + 1);
    debug_assert!(iso_beta * rat(5) > rat(2));
    for m in [4 * k as i64 + 1, 4 * k as i64 + 3] {
        let alpha = ratio(2, m);
        let delta = ratio(2 * k as i64, m);
        let phi = Rational::one() - &alpha - &delta;
        if !phi.is_positive() {
            continue;
        }
        let mut angles = [alpha, delta, phi];
        angles.sort();
        if angles[0] == angles[1] || angles[1] == angles[2] {
            continue;
        }
        if angles[2] >= ratio(1, 2) {
            continue;
        }
        if &angles[1] * rat(5) > rat(2) {
            continue;
        }
        out.push(angles);
    }
    Ok(out)
}

/// One certified relation `lambda * len(lhs) = mu * len(i) + nu * len(j)` on
/// the unsquared side lengths, `{i, j}` being the other two sides in cyclic
/// order.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct SideRelation {
    pub lhs: usize,
    pub lambda: u64,
    pub mu: u64,
    pub nu: u64,
}

/// Finds all relations between the side lengths with coefficients in
/// `1..=bound`, given the squared lengths.
///
/// A candidate is certified by squaring twice: with
/// `t = lambda^2 s1 - mu^2 s2 - nu^2 s3`, the relation holds iff `t >= 0`
/// and `t^2 = 4 mu^2 nu^2 s2 s3`, all decided in the scene field.
pub fn side_relation_search(sides2: &[QuadScalar; 3], bound: u64) -> Vec<SideRelation> {
    let mut out = Vec::new();
    for lhs in 0..3 {
        let (i, j) = ((lhs + 1) % 3, (lhs + 2) % 3);
        let (s1, s2, s3) = (&sides2[lhs], &sides2[i], &sides2[j]);
        for lambda in 1..=bound {
            let l2s1 = &QuadScalar::from_int((lambda * lambda) as i64) * s1;
            for mu in 1..=bound {
                let rem = &l2s1 - &(&QuadScalar::from_int((mu * mu) as i64) * s2);
                if rem.signum() <= 0 {
                    break;
                }
                for nu in 1..=bound {
                    let t = &rem - &(&QuadScalar::from_int((nu * nu) as i64) * s3);
                    if t.signum() < 0 {
                        break;
                    }
                    let rhs_sq =
                        &(&QuadScalar::from_int((4 * mu * mu * nu * nu) as i64) * s2) * s3;
                    if &t * &t == rhs_sq {
                        out.push(SideRelation {
                            lhs,
                            lambda,
                            mu,
                            nu,
                        });
                    }
                }
            }
        }
    }
    out.sort();
    out
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SplitVerdict {
    /// No splitting gentiling can exist; the named angle class is the
    /// exhausted resource.
    Impossible { limiting: LimitingResource },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LimitingResource {
    /// The widest angle's corners are exactly accounted for, so that master
    /// corner cannot be split.
    Gamma,
    /// The middle angle's corners are exactly accounted for, blocking the
    /// remaining split candidate `beta = k * alpha`.
    Beta,
}

/// Replays the vertex-capacity counting for triangles whose largest angle
/// exceeds `2 pi / 3`: no such triangle admits a `k`-splitting gentiling for
/// `k >= 3`.
pub fn obtuse_split_check(angles: [Rational; 3], k: u32) -> Result<SplitVerdict, AngleError> {
    let sum: Rational = angles.iter().cloned().sum();
    if sum != Rational::one() || angles.iter().any(|a| !a.is_positive()) {
        return Err(AngleError::InvalidSpec(
            "angles must be positive rational multiples of pi summing to pi".into(),
        ));
    }
    if k < 3 {
        return Err(AngleError::PreconditionNotMet("needs k >= 3".into()));
    }
    let mut sorted = angles;
    sorted.sort();
    let (alpha, beta, gamma) = (&sorted[0], &sorted[1], &sorted[2]);
    if *gamma <= ratio(2, 3) {
        return Err(AngleError::PreconditionNotMet(
            "largest angle must exceed 2 pi / 3".into(),
        ));
    }
    // 3 gamma > 2 pi and 2 gamma > pi hold automatically, so gamma corners
    // are exactly accounted for: two per full vertex, one per half vertex,
    // one at a master corner. The widest master corner cannot split. The
    // only remaining split candidate is beta = k * alpha, and then
    // 2 gamma + 3 beta > 2 pi and gamma + 2 beta > pi pin the beta corners
    // the same way.
    let limiting = if *beta == alpha * rat(k as i64) {
        LimitingResource::Beta
    } else {
        LimitingResource::Gamma
    };
    Ok(SplitVerdict::Impossible { limiting })
}
