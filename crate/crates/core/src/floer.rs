//! Rank-level Floer calculus: HF ranks of curve pairs, exact triangles as
//! interval propagation, and the staircase shape of L-space knots.
//!
//! All ranks are dimensions over a field, so an exact triangle
//! `A → B → C → A` only constrains `rk B` to lie between `|rk A - rk C|`
//! and `rk A + rk C`.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::curve::Curve;
use crate::error::{Error, Result};
use crate::linalg::LaurentPoly;
use crate::scalar::Scalar;

/// `lo ≤ rank ≤ hi`; `hi = None` means no upper bound.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub struct RankInterval {
    pub lo: u64,
    pub hi: Option<u64>,
}

impl RankInterval {
    pub fn new(lo: u64, hi: Option<u64>) -> Option<Self> {
        match hi {
            Some(h) if h < lo => None,
            _ => Some(RankInterval { lo, hi }),
        }
    }

    pub fn exact(v: u64) -> Self {
        RankInterval { lo: v, hi: Some(v) }
    }

    pub fn at_least(v: u64) -> Self {
        RankInterval { lo: v, hi: None }
    }

    pub fn unknown() -> Self {
        Self::at_least(0)
    }

    pub fn contains(&self, v: u64) -> bool {
        v >= self.lo && self.hi.is_none_or(|h| v <= h)
    }

    /// Whether every value of `other` lies in `self`.
    pub fn contains_interval(&self, other: &RankInterval) -> bool {
        other.lo >= self.lo
            && match (self.hi, other.hi) {
                (None, _) => true,
                (Some(_), None) => false,
                (Some(a), Some(b)) => b <= a,
            }
    }

    pub fn is_exact(&self) -> bool {
        self.hi == Some(self.lo)
    }

    /// Rank bounds for a tensor product.
    pub fn tensor(&self, other: &RankInterval) -> RankInterval {
        let hi = match (self.hi, other.hi) {
            (Some(0), _) | (_, Some(0)) => Some(0),
            (Some(a), Some(b)) => Some(a * b),
            _ => None,
        };
        RankInterval {
            lo: self.lo * other.lo,
            hi,
        }
    }
}

impl fmt::Display for RankInterval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.hi {
            Some(h) => write!(f, "[{}, {}]", self.lo, h),
            None => write!(f, "[{}, inf)", self.lo),
        }
    }
}

/// Bounds on the third vertex of an exact triangle with the other two
/// vertices in `a` and `c`.
pub fn triangle_propagate(a: RankInterval, c: RankInterval) -> RankInterval {
    let gap = |x: &RankInterval, y: &RankInterval| y.hi.map_or(0, |h| x.lo.saturating_sub(h));
    let lo = gap(&a, &c).max(gap(&c, &a));
    let hi = match (a.hi, c.hi) {
        (Some(x), Some(y)) => Some(x + y),
        _ => None,
    };
    RankInterval { lo, hi }
}

/// Rank of Floer homology of two essential curves: 2 for isotopic curves,
/// the geometric intersection number otherwise.
pub fn hf_rank(a: &Curve, b: &Curve) -> Result<u64> {
    if a.is_isotopic(b)? {
        Ok(2)
    } else {
        Ok(a.intersection_number(b)? as u64)
    }
}

/// Positions `0 = n₀ < … < n_k` and Maslov levels `δᵢ` of an L-space knot
/// complex.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub struct Staircase {
    ns: Vec<i64>,
    deltas: Vec<i64>,
}

impl Staircase {
    /// Computes the levels from the positions.
    pub fn new(ns: Vec<i64>) -> Result<Self> {
        if ns.first() != Some(&0) {
            return Err(Error::NotLSpaceForm("positions must start at 0".into()));
        }
        if ns.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::NotLSpaceForm(
                "positions must be strictly increasing".into(),
            ));
        }
        let k = ns.len() - 1;
        let mut deltas = vec![0; k + 1];
        for i in (0..k).rev() {
            deltas[i] = if (k - i) % 2 == 1 {
                deltas[i + 1] - 2 * (ns[i + 1] - ns[i]) + 1
            } else {
                deltas[i + 1] - 1
            };
        }
        Ok(Staircase { ns, deltas })
    }

    pub fn ns(&self) -> &[i64] {
        &self.ns
    }

    pub fn deltas(&self) -> &[i64] {
        &self.deltas
    }

    /// `k`, the index of the last position.
    pub fn k(&self) -> usize {
        self.ns.len() - 1
    }

    /// `n_k`, which is the genus of the knot.
    pub fn genus(&self) -> i64 {
        self.ns[self.k()]
    }

    /// The Alexander polynomial with this staircase, lowest term at `t⁰`.
    pub fn to_polynomial<T: Scalar>(&self) -> LaurentPoly<T> {
        let k = self.k();
        let sign = |i: usize| {
            if (k - i).is_multiple_of(2) {
                T::one()
            } else {
                -T::one()
            }
        };
        let mut terms = vec![(0, sign(0))];
        for (i, &n) in self.ns.iter().enumerate().skip(1) {
            terms.push((n, sign(i)));
            terms.push((-n, sign(i)));
        }
        LaurentPoly::from_terms(terms).normalized()
    }
}

/// Reads the staircase off an Alexander polynomial, rejecting anything
/// that is not of L-space form. The polynomial is taken up to `±tᵏ`.
pub fn staircase_from_alexander<T: Scalar>(p: &LaurentPoly<T>) -> Result<Staircase> {
    let fail = |m: String| Err(Error::NotLSpaceForm(m));
    if p.is_zero() {
        return fail("zero polynomial".into());
    }
    let Some(q) = p.normalized().centered() else {
        return fail("odd exponent span, so the polynomial is not symmetric".into());
    };
    let terms = q.terms();
    for (e, c) in &terms {
        if !(c.is_one() || (-c.clone()).is_one()) {
            return fail(format!("coefficient {c} of t^{e} is not 0 or ±1"));
        }
        if q.coeff(-e) != *c {
            return fail(format!("not symmetric: t^{e} and t^{} differ", -e));
        }
    }
    if q.coeff(0).is_zero() {
        return fail("constant term (after centering) is zero".into());
    }
    if terms.windows(2).any(|w| w[0].1 == w[1].1) {
        return fail("signs of the nonzero coefficients do not alternate".into());
    }
    let ns = terms.iter().map(|(e, _)| *e).filter(|e| *e >= 0).collect();
    Staircase::new(ns)
}

/// Rank and Maslov level of knot Floer homology in one Alexander grading.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub struct GradingRank {
    pub rank: u64,
    pub maslov: Option<i64>,
}

/// Knot Floer ranks by Alexander grading `-n_k ..= n_k`.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct HfkProfile {
    pub gradings: BTreeMap<i64, GradingRank>,
}

impl HfkProfile {
    pub fn rank(&self, j: i64) -> u64 {
        self.gradings.get(&j).map_or(0, |g| g.rank)
    }

    pub fn maslov(&self, j: i64) -> Option<i64> {
        self.gradings.get(&j).and_then(|g| g.maslov)
    }

    pub fn total_rank(&self) -> u64 {
        self.gradings.values().map(|g| g.rank).sum()
    }

    pub fn max_rank(&self) -> u64 {
        self.gradings.values().map(|g| g.rank).max().unwrap_or(0)
    }
}

/// Rank one at `±nᵢ` with level `δᵢ` (stored for both signs), zero
/// elsewhere.
pub fn lspace_profile(s: &Staircase) -> HfkProfile {
    let top = s.genus();
    let mut gradings: BTreeMap<i64, GradingRank> = (-top..=top)
        .map(|j| (j, GradingRank { rank: 0, maslov: None }))
        .collect();
    for (&n, &d) in s.ns.iter().zip(&s.deltas) {
        for j in [n, -n] {
            gradings.insert(
                j,
                GradingRank {
                    rank: 1,
                    maslov: Some(d),
                },
            );
        }
    }
    HfkProfile { gradings }
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    ObstructionFound,
    Inconclusive,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::ObstructionFound => "obstruction_found",
            Verdict::Inconclusive => "inconclusive",
        })
    }
}

/// A genus-g L-space knot has rank at most 1 in each grading `|j| ≤ g` and
/// rank 0 beyond; a larger lower bound rules the knot out.
pub fn lspace_obstruction(rank_lower_bound: i64, at_grading: i64, genus: i64) -> Verdict {
    let cap = if at_grading.abs() <= genus { 1 } else { 0 };
    if rank_lower_bound > cap {
        Verdict::ObstructionFound
    } else {
        Verdict::Inconclusive
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn poly(c: &[i64]) -> LaurentPoly<i64> {
        LaurentPoly::new(0, c.to_vec())
    }

    #[test]
    fn trefoil_and_cinquefoil() {
        let s = staircase_from_alexander(&poly(&[1, -1, 1])).unwrap();
        assert_eq!((s.ns(), s.deltas()), (&[0, 1][..], &[-1, 0][..]));
        let s = staircase_from_alexander(&poly(&[1, -1, 1, -1, 1])).unwrap();
        assert_eq!((s.ns(), s.deltas()), (&[0, 1, 2][..], &[-2, -1, 0][..]));
        assert_eq!(lspace_profile(&s).total_rank(), 5);
    }

    #[test]
    fn rejections() {
        for c in [&[1, 1, 1][..], &[1, -2, 1], &[1, 0, 1], &[1, -1], &[1, -1, 0, 1, -1, 1]] {
            let e = staircase_from_alexander(&poly(c)).unwrap_err();
            assert_eq!(e.name(), "NotLSpaceForm", "{c:?}");
        }
    }

    #[test]
    fn gaps_in_the_staircase() {
        // T(3,4): t^6 - t^5 + t^3 - t + 1
        let s = staircase_from_alexander(&poly(&[1, -1, 0, 1, 0, -1, 1])).unwrap();
        assert_eq!(s.ns(), &[0, 2, 3]);
        assert_eq!(s.deltas(), &[-2, -1, 0]);
        assert_eq!(s.to_polynomial::<i64>(), poly(&[1, -1, 0, 1, 0, -1, 1]));
    }

    #[test]
    fn triangle_examples() {
        let e = RankInterval::exact;
        assert_eq!(triangle_propagate(e(1), e(0)), e(1));
        assert_eq!(triangle_propagate(e(16), e(1)), RankInterval::new(15, Some(17)).unwrap());
        assert_eq!(triangle_propagate(e(0), e(0)), e(0));
        assert_eq!(
            triangle_propagate(RankInterval::unknown(), e(3)),
            RankInterval::unknown()
        );
        assert_eq!(
            triangle_propagate(RankInterval::at_least(10), e(3)),
            RankInterval::at_least(7)
        );
    }

    #[test]
    fn obstruction() {
        assert_eq!(lspace_obstruction(11, -1, 2), Verdict::ObstructionFound);
        assert_eq!(lspace_obstruction(1, -1, 2), Verdict::Inconclusive);
        assert_eq!(lspace_obstruction(-5, -1, 2), Verdict::Inconclusive);
    }
}
