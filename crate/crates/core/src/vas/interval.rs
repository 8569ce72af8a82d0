use std::cmp::Ordering;
use std::fmt;

use num_bigint::{BigInt, Sign};
use num_rational::BigRational;
use num_traits::One;

use crate::error::{Error, Result};
use crate::poly::IntPoly;
use crate::Rational;

/// An isolating result: either an exact rational root or an open interval
/// with rational endpoints containing exactly one root.
#[derive(Clone, PartialEq, Eq, Hash)]
pub enum RootInterval {
    Exact(Rational),
    Open(Rational, Rational),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum IntervalKind {
    Exact,
    Open,
}

impl RootInterval {
    pub fn exact_int(v: i64) -> Self {
        RootInterval::Exact(BigRational::from_integer(v.into()))
    }

    pub fn kind(&self) -> IntervalKind {
        match self {
            RootInterval::Exact(_) => IntervalKind::Exact,
            RootInterval::Open(..) => IntervalKind::Open,
        }
    }

    pub fn lo(&self) -> &Rational {
        match self {
            RootInterval::Exact(r) | RootInterval::Open(r, _) => r,
        }
    }

    pub fn hi(&self) -> &Rational {
        match self {
            RootInterval::Exact(r) | RootInterval::Open(_, r) => r,
        }
    }

    /// Whether `x` is the exact point or lies strictly inside the interval.
    pub fn contains(&self, x: &Rational) -> bool {
        match self {
            RootInterval::Exact(r) => r == x,
            RootInterval::Open(lo, hi) => lo < x && x < hi,
        }
    }

    /// `x -> -x`.
    pub fn mirror(&self) -> RootInterval {
        match self {
            RootInterval::Exact(r) => RootInterval::Exact(-r),
            RootInterval::Open(lo, hi) => RootInterval::Open(-hi, -lo),
        }
    }

    pub(crate) fn sort_key(a: &RootInterval, b: &RootInterval) -> Ordering {
        a.lo().cmp(b.lo()).then_with(|| a.hi().cmp(b.hi()))
    }
}

impl fmt::Debug for RootInterval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RootInterval::Exact(r) => write!(f, "[{r}]"),
            RootInterval::Open(lo, hi) => write!(f, "({lo}, {hi})"),
        }
    }
}

/// Moves endpoints of an open result off roots of `f`.
///
/// The continued-fraction loop can emit an open interval whose endpoint is an
/// exact root found at a split point. `f` is square-free, so the sign just
/// inside such an endpoint is the sign of `f'` there; dyadic points are
/// probed until one lands strictly between the endpoint and the isolated
/// root. A probe hitting the root exactly turns the result into an exact one.
pub(crate) fn clear_root_endpoints(f: &IntPoly, iv: RootInterval) -> Result<RootInterval> {
    let RootInterval::Open(mut lo, mut hi) = iv else {
        return Ok(iv);
    };
    let df = f.derivative();
    if f.eval_sign(&lo) == Sign::NoSign {
        let inside = df.eval_sign(&lo);
        match probe(f, &lo, &hi, inside, true)? {
            Probe::Root(r) => return Ok(RootInterval::Exact(r)),
            Probe::Point(t) => lo = t,
        }
    }
    if f.eval_sign(&hi) == Sign::NoSign {
        let inside = -df.eval_sign(&hi);
        match probe(f, &lo, &hi, inside, false)? {
            Probe::Root(r) => return Ok(RootInterval::Exact(r)),
            Probe::Point(t) => hi = t,
        }
    }
    Ok(RootInterval::Open(lo, hi))
}

enum Probe {
    Root(Rational),
    Point(Rational),
}

fn probe(f: &IntPoly, lo: &Rational, hi: &Rational, inside: Sign, from_lo: bool) -> Result<Probe> {
    if inside == Sign::NoSign {
        return Err(Error::Invariant("polynomial is not square-free at an endpoint".into()));
    }
    // Start a unit away (or mid-interval if narrower) so the probe count
    // depends on the gap to the isolated root, not on the interval width.
    let half = (hi - lo) / BigInt::from(2);
    let mut step = half.min(BigRational::one());
    loop {
        let t = if from_lo { lo + &step } else { hi - &step };
        match f.eval_sign(&t) {
            Sign::NoSign => return Ok(Probe::Root(t)),
            s if s == inside => return Ok(Probe::Point(t)),
            _ => {}
        }
        step /= BigInt::from(2);
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> Rational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn contains_and_mirror() {
        let iv = RootInterval::Open(q(1, 1), q(2, 1));
        assert!(iv.contains(&q(3, 2)));
        assert!(!iv.contains(&q(1, 1)));
        assert_eq!(iv.mirror(), RootInterval::Open(q(-2, 1), q(-1, 1)));
        assert_eq!(RootInterval::exact_int(3).mirror(), RootInterval::exact_int(-3));
    }

    #[test]
    fn endpoint_roots_are_cleared() {
        // (x-1)(x-3): interval (1, 4) holds the root 3 but starts on root 1
        let f = IntPoly::from_i64s(&[3, -4, 1]);
        let out = clear_root_endpoints(&f, RootInterval::Open(q(1, 1), q(4, 1))).unwrap();
        match out {
            RootInterval::Open(lo, hi) => {
                assert!(lo > q(1, 1) && lo < q(3, 1));
                assert_eq!(hi, q(4, 1));
            }
            RootInterval::Exact(r) => assert_eq!(r, q(3, 1)),
        }
        // (x-1)(x-2)(x-3): probing (1, 3) hits 2 exactly
        let g = IntPoly::from_i64s(&[-6, 11, -6, 1]);
        let out = clear_root_endpoints(&g, RootInterval::Open(q(1, 1), q(3, 1))).unwrap();
        assert_eq!(out, RootInterval::exact_int(2));
    }
}
