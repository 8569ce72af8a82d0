//! The `y = x^k` substitution trick.

use num_bigint::{BigInt, Sign};
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::RootInterval;
use crate::bounds::cauchy_bound;
use crate::error::{Error, Result};
use crate::poly::IntPoly;
use crate::Rational;

/// `(P1, k)` with `P(x) = P1(x^k)` and `k` the gcd of the exponents in use.
pub fn detect_power_substitution(p: &IntPoly) -> (IntPoly, usize) {
    let k = p.exponent_gcd();
    if k <= 1 {
        return (p.clone(), 1);
    }
    let p1 = p.contract(k).expect("exponent gcd divides every exponent");
    (p1, k)
}

/// Turns isolating results for the real roots of `P1` into isolating results
/// for the real roots of `P(x) = P1(x^k)`.
///
/// Every `y`-result is first given a window: the result itself when open, or
/// the span between the midpoints to its neighbours when exact. Inside the
/// window the root is bracketed by bisection on `P1`, and dyadic `k`-th roots
/// are searched so that `(L^k, H^k)` sits inside the window yet covers the
/// bracket.
pub fn map_back_roots(
    intervals: &[RootInterval],
    k: usize,
    p: &IntPoly,
) -> Result<Vec<RootInterval>> {
    if k == 1 {
        return Ok(intervals.to_vec());
    }
    if k == 0 {
        return Err(Error::pre("substitution exponent must be positive"));
    }
    let p1 = p
        .contract(k)
        .ok_or_else(|| Error::pre(format!("polynomial is not a polynomial in x^{k}")))?;
    let mut ys = intervals.to_vec();
    ys.sort_by(RootInterval::sort_key);
    let cap = if p1.degree().unwrap_or(0) > 0 {
        cauchy_bound(&p1)?
    } else {
        BigRational::one()
    };
    let even = k.is_multiple_of(2);

    let mut out = Vec::new();
    for (idx, iv) in ys.iter().enumerate() {
        if iv.lo().is_negative() && iv.hi().is_positive() {
            return Err(Error::pre("y-interval straddles zero"));
        }
        let negative = match iv {
            RootInterval::Exact(r) => r.is_negative(),
            RootInterval::Open(_, hi) => !hi.is_positive(),
        };
        if let RootInterval::Exact(r) = iv {
            if r.is_zero() {
                out.push(RootInterval::exact_int(0));
                continue;
            }
        }
        if negative && even {
            continue;
        }
        // work on magnitudes; mirror at the end for negative y
        // midpoints to the neighbours keep the windows of exact roots disjoint
        let two = BigRational::from_integer(BigInt::from(2));
        let prev_hi = match idx.checked_sub(1) {
            Some(i) => (ys[i].hi() + iv.lo()) / &two,
            None => -cap.clone(),
        };
        let next_lo = match ys.get(idx + 1) {
            Some(n) => (iv.hi() + n.lo()) / &two,
            None => cap.clone(),
        };
        let (window_lo, window_hi, bracket) = match iv {
            RootInterval::Exact(r) => {
                let (wl, wh) = if negative {
                    (-next_lo.min(BigRational::zero()), -prev_hi)
                } else {
                    (prev_hi.max(BigRational::zero()), next_lo)
                };
                (wl, wh, Bracket::Point(r.abs()))
            }
            RootInterval::Open(lo, hi) => {
                let (wl, wh) = if negative { (-hi, -lo) } else { (lo.clone(), hi.clone()) };
                let sign_flip = negative && k % 2 == 1;
                let b = refine_bracket(&p1, &wl, &wh, sign_flip)?;
                (wl, wh, b)
            }
        };
        let mags: Vec<RootInterval> = match &bracket {
            Bracket::Point(r) => match exact_kth_root(r, k) {
                Some(x) => vec![RootInterval::Exact(x)],
                None => {
                    let (l, h) = kth_root_enclosure(&window_lo, &window_hi, r, r, k);
                    vec![RootInterval::Open(l, h)]
                }
            },
            Bracket::Open(bl, bh) => {
                let (l, h) = kth_root_enclosure(&window_lo, &window_hi, bl, bh, k);
                vec![RootInterval::Open(l, h)]
            }
        };
        for m in mags {
            if even {
                out.push(m.mirror());
                out.push(m);
            } else if negative {
                out.push(m.mirror());
            } else {
                out.push(m);
            }
        }
    }
    for iv in &out {
        if let RootInterval::Open(lo, hi) = iv {
            if p.eval_sign(lo) == Sign::NoSign || p.eval_sign(hi) == Sign::NoSign {
                return Err(Error::Invariant("mapped interval has a root endpoint".into()));
            }
        }
    }
    out.sort_by(RootInterval::sort_key);
    Ok(out)
}

enum Bracket {
    Point(Rational),
    Open(Rational, Rational),
}

/// Bisects the magnitude window `(lo, hi)` of one `P1` root until the bracket
/// has moved off both window ends. `sign_flip` evaluates `P1(-y)` instead.
fn refine_bracket(p1: &IntPoly, lo: &Rational, hi: &Rational, sign_flip: bool) -> Result<Bracket> {
    let sign_at = |y: &Rational| {
        if sign_flip {
            p1.eval_sign(&-y)
        } else {
            p1.eval_sign(y)
        }
    };
    let s_lo = sign_at(lo);
    let s_hi = sign_at(hi);
    if s_lo == Sign::NoSign || s_hi == Sign::NoSign || s_lo == s_hi {
        return Err(Error::pre("y-interval does not bracket a simple root"));
    }
    let (mut bl, mut bh) = (lo.clone(), hi.clone());
    let two = BigRational::from_integer(BigInt::from(2));
    while &bl == lo || &bh == hi {
        let mid = (&bl + &bh) / &two;
        match sign_at(&mid) {
            Sign::NoSign => return Ok(Bracket::Point(mid)),
            s if s == s_lo => bl = mid,
            _ => bh = mid,
        }
    }
    Ok(Bracket::Open(bl, bh))
}

/// Rational `k`-th root of a nonnegative rational, when it exists.
fn exact_kth_root(r: &Rational, k: usize) -> Option<Rational> {
    let k32 = k as u32;
    let n = r.numer().nth_root(k32);
    let d = r.denom().nth_root(k32);
    (n.pow(k32) == *r.numer() && d.pow(k32) == *r.denom()).then(|| BigRational::new(n, d))
}

/// Dyadic `L < H` with `lo < L^k <= bl` and `bh <= H^k < hi`.
///
/// Requires `0 <= lo < bl <= bh < hi`.
fn kth_root_enclosure(
    lo: &Rational,
    hi: &Rational,
    bl: &Rational,
    bh: &Rational,
    k: usize,
) -> (Rational, Rational) {
    let k32 = k as u32;
    let mut prec = 8usize;
    loop {
        let scale = BigInt::one() << (prec * k);
        let scaled = |r: &Rational| r * BigRational::from_integer(scale.clone());
        // smallest m with m^k > lo * 2^(pk)
        let m_lo = scaled(lo).floor().to_integer().nth_root(k32) + BigInt::one();
        // largest m with m^k < hi * 2^(pk)
        let m_hi = (scaled(hi).ceil().to_integer() - BigInt::one()).nth_root(k32);
        let lo_ok = BigRational::from_integer(m_lo.pow(k32)) <= scaled(bl);
        let hi_ok = BigRational::from_integer(m_hi.pow(k32)) >= scaled(bh);
        if lo_ok && hi_ok {
            let den = BigInt::one() << prec;
            return (BigRational::new(m_lo, den.clone()), BigRational::new(m_hi, den));
        }
        prec *= 2;
    }
}
