//! Upper and lower bounds on the positive roots of integer polynomials.
//!
//! The central object is the suffix-sum certificate: a nonnegative `u` bounds
//! the positive roots of `P` (leading coefficient positive) whenever every
//! partial Horner value `q_j = sum_{i>=j} a_i u^(i-j)` is nonnegative. The
//! greedy routines below decide that certificate for `u = 1` and for the
//! dyadic candidates `u = 1/2^k` without evaluating it directly, matching
//! positive coefficient mass against negative mass from the top down.
//!
//! Cauchy and ASV (pairing) bounds are provided as baselines.

use std::borrow::Cow;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::poly::IntPoly;
use crate::Rational;

/// Outcome of [`lower_bound`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum BoundResult {
    /// A positive rational that no positive root lies below.
    Certified(Rational),
    /// The bound step could not certify anything useful.
    Uncertified,
}

impl BoundResult {
    pub fn value(&self) -> Option<&Rational> {
        match self {
            BoundResult::Certified(v) => Some(v),
            BoundResult::Uncertified => None,
        }
    }
}

/// Coefficients with the leading one made positive.
fn oriented(p: &IntPoly) -> Cow<'_, [BigInt]> {
    if p.leading().is_some_and(Signed::is_negative) {
        Cow::Owned(p.coeffs().iter().map(|c| -c).collect())
    } else {
        Cow::Borrowed(p.coeffs())
    }
}

/// True iff every suffix Horner value of `P` at `u` is nonnegative.
pub fn certificate_holds(p: &IntPoly, u: &Rational) -> Result<bool> {
    if u.is_negative() {
        return Err(Error::NegativeBound);
    }
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let a = oriented(p);
    let n = a.len() - 1;
    let (num, den) = (u.numer(), u.denom());
    // s_j = den^(n-j) * q_j keeps everything integral
    let mut s = a[n].clone();
    let mut den_pow = BigInt::one();
    for c in a[..n].iter().rev() {
        den_pow *= den;
        s = s * num + c * &den_pow;
        if s.is_negative() {
            return Ok(false);
        }
    }
    Ok(true)
}

struct Layout {
    n: usize,
    /// Highest index below `n` holding a negative coefficient.
    start: usize,
    /// Lowest index holding a negative coefficient.
    last_neg: usize,
}

fn layout(a: &[BigInt]) -> Result<Layout> {
    let n = a.len().checked_sub(1).ok_or(Error::ZeroPolynomial)?;
    let last_neg = a
        .iter()
        .position(Signed::is_negative)
        .ok_or_else(|| Error::pre("no coefficient of sign opposite to the leading one"))?;
    let start = (0..n).rev().find(|&i| a[i].is_negative()).unwrap_or(last_neg);
    Ok(Layout { n, start, last_neg })
}

/// Decides whether the certificate holds at `u = 1`, by greedy matching.
///
/// Requires some coefficient of sign opposite to the leading one.
pub fn less_than_one(p: &IntPoly) -> Result<bool> {
    let a = oriented(p);
    let Layout { n, start, last_neg } = layout(&a)?;
    let (n, ln) = (n as isize, last_neg as isize);
    let at = |k: isize| &a[k as usize];

    let mut cf_sum = at(n).clone();
    let mut i = n - 1;
    let mut j = start as isize;
    let mut last = j;
    while i >= ln - 1 && j >= ln - 1 {
        if cf_sum.is_negative() {
            while i > last && !at(i).is_positive() {
                i -= 1;
            }
            if i == last {
                return Ok(false);
            }
            cf_sum += at(i).abs();
            i -= 1;
        } else {
            if j == ln - 1 {
                return Ok(true);
            }
            while j >= ln && !at(j).is_negative() {
                j -= 1;
            }
            cf_sum -= at(j).abs();
            last = j;
            j -= 1;
        }
    }
    Ok(true)
}

/// Instrumentation for one [`up_bound`] call.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct UpBoundTrace {
    /// Whether the `u = 1` pre-check succeeded.
    pub less_than_one: bool,
    /// Number of weighted greedy passes executed.
    pub passes: usize,
    /// Most times any single coefficient was visited within one pass.
    pub max_touches: usize,
}

/// One weighted pass: does the certificate hold at `u = 1/2^base`?
///
/// Scaling the suffix sums by `2^((n-j) base)` turns the candidate into a
/// unit-weight problem with coefficients `a_i 2^((n-i) base)`.
fn weighted_pass(a: &[BigInt], lay: &Layout, base: usize, touches: &mut [usize]) -> bool {
    let (n, ln) = (lay.n as isize, lay.last_neg as isize);
    let at = |k: isize| &a[k as usize];
    let weight = |k: isize| (n - k) as usize * base;
    let touch = |k: isize, t: &mut [usize]| {
        if k >= 0 {
            t[k as usize] += 1;
        }
    };

    let mut i = n - 1;
    let mut j = lay.start as isize;
    touch(i, touches);
    touch(j, touches);
    let mut cf_sum = at(n).clone();
    while i >= ln - 1 && j >= ln - 1 {
        if cf_sum.is_negative() {
            while i > j && !at(i).is_positive() {
                i -= 1;
                touch(i, touches);
            }
            if i == j {
                return false;
            }
            cf_sum += at(i).abs() << weight(i);
            i -= 1;
            touch(i, touches);
        } else {
            if j == ln - 1 {
                return true;
            }
            while j >= ln && !at(j).is_negative() {
                j -= 1;
                touch(j, touches);
            }
            cf_sum -= at(j).abs() << weight(j);
            j -= 1;
            touch(j, touches);
        }
    }
    // Both pointers stay at or above `last_neg - 1`, so the loop only exits
    // through the returns above.
    unreachable!("greedy pass left its index range")
}

/// Upper bound of the positive roots in `O(n log(u+1))` coefficient steps.
///
/// Returns `1/2^(b-1)` for the first `b >= 1` at which the certificate fails,
/// or the sentinel `2` when the certificate already fails at `1`. The
/// sentinel is not a certified bound.
pub fn up_bound(p: &IntPoly) -> Result<Rational> {
    up_bound_traced(p).map(|(u, _)| u)
}

pub fn up_bound_traced(p: &IntPoly) -> Result<(Rational, UpBoundTrace)> {
    let a = oriented(p);
    let lay = layout(&a)?;
    let mut trace = UpBoundTrace::default();
    if !less_than_one(p)? {
        return Ok((BigRational::from_integer(2.into()), trace));
    }
    trace.less_than_one = true;
    let mut touches = vec![0usize; a.len()];
    let mut base = 1usize;
    loop {
        touches.iter_mut().for_each(|t| *t = 0);
        let holds = weighted_pass(&a, &lay, base, &mut touches);
        trace.passes += 1;
        trace.max_touches = trace.max_touches.max(touches.iter().copied().max().unwrap_or(0));
        if !holds {
            break;
        }
        base += 1;
    }
    let u = BigRational::new(BigInt::one(), BigInt::one() << (base - 1));
    Ok((u, trace))
}

/// Lower bound of the positive roots, via the upper bound of the reversal.
///
/// A certified result is a power of two `>= 1`; the sentinel path of
/// [`up_bound`] maps to [`BoundResult::Uncertified`].
pub fn lower_bound(p: &IntPoly) -> Result<BoundResult> {
    if p.sign_variation() == 0 {
        return Err(Error::pre("lower bound needs at least one sign variation"));
    }
    let v = up_bound(&p.reverse()?)?;
    if v > BigRational::one() {
        Ok(BoundResult::Uncertified)
    } else {
        Ok(BoundResult::Certified(v.recip()))
    }
}

/// `1 + max_{i<n} |a_i| / |a_n|`, a strict bound on the modulus of every root.
pub fn cauchy_bound(p: &IntPoly) -> Result<Rational> {
    let n = match p.degree() {
        None => return Err(Error::ZeroPolynomial),
        Some(0) => return Err(Error::pre("Cauchy bound needs degree >= 1")),
        Some(n) => n,
    };
    let lead = p.coeffs()[n].abs();
    let max = p.coeffs()[..n].iter().map(Signed::abs).max().unwrap_or_default();
    Ok(BigRational::one() + BigRational::new(max, lead))
}

/// One matched (positive part, negative term) pair of the ASV bound.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AsvPair {
    pub pos_exp: usize,
    /// The (possibly split) positive coefficient.
    pub pos_coeff: Rational,
    pub neg_exp: usize,
    /// Magnitude of the negative coefficient.
    pub neg_coeff: BigInt,
}

impl AsvPair {
    /// `(b/c, e)` such that the pair's exact bound is `(b/c)^(1/e)`.
    pub fn ratio_and_gap(&self) -> (Rational, usize) {
        (
            BigRational::from_integer(self.neg_coeff.clone()) / &self.pos_coeff,
            self.pos_exp - self.neg_exp,
        )
    }

    /// Smallest power of two `2^m` with `(2^m)^e >= b/c`.
    pub fn rounded_bound(&self) -> Rational {
        let (ratio, e) = self.ratio_and_gap();
        let e = e as i64;
        let pow2_ge = |m: i64| -> bool {
            let me = m * e;
            if me >= 0 {
                ratio.denom() << (me as usize) >= *ratio.numer()
            } else {
                *ratio.denom() >= ratio.numer() << ((-me) as usize)
            }
        };
        let approx_log = ratio.numer().bits() as i64 - ratio.denom().bits() as i64;
        let mut m = approx_log.div_euclid(e);
        while pow2_ge(m - 1) {
            m -= 1;
        }
        while !pow2_ge(m) {
            m += 1;
        }
        pow2(m)
    }
}

fn pow2(m: i64) -> Rational {
    if m >= 0 {
        BigRational::from_integer(BigInt::one() << (m as usize))
    } else {
        BigRational::new(BigInt::one(), BigInt::one() << ((-m) as usize))
    }
}

/// The deterministic pairing used by [`asv_bound`].
///
/// Coefficients are grouped into alternating runs of positive and negative
/// terms, highest exponent first. Within each (positive run, negative run)
/// pair the k-th negative term is matched with the k-th positive term; when
/// the negative run is longer, the lowest positive term of the run is split
/// into equal parts to cover the surplus.
pub fn asv_pairs(p: &IntPoly) -> Result<Vec<AsvPair>> {
    if p.leading().is_some_and(Signed::is_negative) {
        return Err(Error::pre("ASV bound needs a positive leading coefficient"));
    }
    let a = p.coeffs();
    let mut runs: Vec<(bool, Vec<usize>)> = Vec::new();
    for (i, c) in a.iter().enumerate().rev() {
        if c.is_zero() {
            continue;
        }
        let positive = c.is_positive();
        match runs.last_mut() {
            Some((sign, idx)) if *sign == positive => idx.push(i),
            _ => runs.push((positive, vec![i])),
        }
    }
    let mut pairs = Vec::new();
    for w in runs.chunks(2) {
        let [(true, pos), (false, neg)] = w else {
            continue;
        };
        let (t, s) = (pos.len(), neg.len());
        for (k, &ne) in neg.iter().enumerate() {
            let (pe, parts) = if t >= s || k + 1 < t {
                (pos[k], 1)
            } else {
                (pos[t - 1], s - t + 1)
            };
            pairs.push(AsvPair {
                pos_exp: pe,
                pos_coeff: BigRational::new(a[pe].clone(), BigInt::from(parts)),
                neg_exp: ne,
                neg_coeff: a[ne].abs(),
            });
        }
    }
    if pairs.is_empty() {
        return Err(Error::pre("no negative term below a positive term"));
    }
    Ok(pairs)
}

/// ASV pairing bound with each pair rounded up to a power of two.
pub fn asv_bound(p: &IntPoly) -> Result<Rational> {
    let pairs = asv_pairs(p)?;
    Ok(pairs
        .iter()
        .map(AsvPair::rounded_bound)
        .max()
        .expect("asv_pairs is nonempty"))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> IntPoly {
        IntPoly::from_i64s(c)
    }

    fn q(n: i64, d: i64) -> Rational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn certificate_examples() {
        let p1 = p(&[-2, 1, 1]);
        assert!(certificate_holds(&p1, &q(1, 1)).unwrap());
        // suffix sums 1, 3/2, -5/4
        assert!(!certificate_holds(&p1, &q(1, 2)).unwrap());
        assert!(certificate_holds(&p(&[1, 0, 1]), &q(0, 1)).unwrap());
        assert_eq!(certificate_holds(&p1, &q(-1, 2)), Err(Error::NegativeBound));
    }

    #[test]
    fn certificate_is_sign_symmetric() {
        let p1 = p(&[2, -1, -1]);
        assert!(certificate_holds(&p1, &q(1, 1)).unwrap());
        assert!(!certificate_holds(&p1, &q(1, 2)).unwrap());
    }

    #[test]
    fn less_than_one_examples() {
        // suffix sums at 1 are 1, 2, 0: the certificate holds with a root at 1
        assert!(less_than_one(&p(&[-2, 1, 1])).unwrap());
        assert!(less_than_one(&p(&[-1, 0, 4])).unwrap());
        assert!(!less_than_one(&p(&[1, -3, 0, 1])).unwrap());
        assert!(less_than_one(&p(&[1, 2, 3])).is_err());
    }

    #[test]
    fn up_bound_examples() {
        assert_eq!(up_bound(&p(&[-1, 0, 4])).unwrap(), q(1, 2));
        assert_eq!(up_bound(&p(&[-1, 0, 16])).unwrap(), q(1, 4));
        assert_eq!(up_bound(&p(&[-2, 1, 1])).unwrap(), q(1, 1));
        // x^3 - 3x + 1: certificate fails at 1, sentinel
        assert_eq!(up_bound(&p(&[1, -3, 0, 1])).unwrap(), q(2, 1));
    }

    #[test]
    fn up_bound_trace_counts_passes() {
        let (u, t) = up_bound_traced(&p(&[-1, 0, 16])).unwrap();
        assert_eq!(u, q(1, 4));
        assert!(t.less_than_one);
        assert_eq!(t.passes, 3);
        assert!(t.max_touches <= 2);
    }

    #[test]
    fn lower_bound_examples() {
        // roots 2, 4
        assert_eq!(
            lower_bound(&p(&[8, -6, 1])).unwrap(),
            BoundResult::Certified(q(1, 1))
        );
        // positive root exactly 1
        assert_eq!(
            lower_bound(&p(&[-2, 1, 1])).unwrap(),
            BoundResult::Certified(q(1, 1))
        );
        // x^2 - x - 2 = (x-2)(x+1); reversal has positive root 1/2
        assert_eq!(
            lower_bound(&p(&[-2, -1, 1])).unwrap(),
            BoundResult::Certified(q(2, 1))
        );
        // roots near 0.3 and 3.3: reversal fails the check at 1
        assert_eq!(lower_bound(&p(&[1, -3, 0, 1])).unwrap(), BoundResult::Uncertified);
        assert!(lower_bound(&p(&[1, 1])).is_err());
    }

    #[test]
    fn cauchy_examples() {
        assert_eq!(cauchy_bound(&p(&[-2, 0, 1])).unwrap(), q(3, 1));
        assert_eq!(cauchy_bound(&p(&[-2, 1, 1])).unwrap(), q(3, 1));
        assert_eq!(cauchy_bound(&p(&[0, -8, 0, 2])).unwrap(), q(5, 1));
        assert!(cauchy_bound(&p(&[4])).is_err());
    }

    #[test]
    fn asv_examples() {
        let pairs = asv_pairs(&p(&[-2, 1, 1])).unwrap();
        assert_eq!(pairs.len(), 1);
        // exact value sqrt(2)
        assert_eq!(pairs[0].ratio_and_gap(), (q(2, 1), 2));
        assert_eq!(asv_bound(&p(&[-2, 1, 1])).unwrap(), q(2, 1));
        assert_eq!(asv_bound(&p(&[1, -2, 1])).unwrap(), q(2, 1));
        assert_eq!(asv_bound(&p(&[-1, 0, 0, 1])).unwrap(), q(1, 1));
        assert!(asv_bound(&p(&[1, 2, 3])).is_err());
    }

    #[test]
    fn asv_splits_short_positive_run() {
        // x^3 - x - 1: one positive term covers two negatives, split in halves
        let pairs = asv_pairs(&p(&[-1, -1, 0, 1])).unwrap();
        assert_eq!(pairs.len(), 2);
        assert!(pairs.iter().all(|pr| pr.pos_coeff == q(1, 2)));
        let u = asv_bound(&p(&[-1, -1, 0, 1])).unwrap();
        assert!(certificate_holds(&p(&[-1, -1, 0, 1]), &u).unwrap());
    }

    #[test]
    fn asv_rounding_handles_small_ratios() {
        // 16x^2 - 1: exact bound 1/4
        assert_eq!(asv_bound(&p(&[-1, 0, 16])).unwrap(), q(1, 4));
        // 9x^2 - 1: exact 1/3, rounds up to 1/2
        assert_eq!(asv_bound(&p(&[-1, 0, 9])).unwrap(), q(1, 2));
    }
}
