//! Sturm-sequence root counting and a bisection isolator built on it.
//!
//! Slow but independent of the continued-fraction engine; used to check it.

use num_bigint::{BigInt, Sign};
use num_rational::BigRational;

use crate::error::{Error, Result};
use crate::poly::{pseudo_remainder, square_free_part, IntPoly};
use crate::vas::RootInterval;
use crate::Rational;

/// `p0 = P, p1 = P', p_{i+1} = -prem(p_{i-1}, p_i)` up to positive scaling.
#[derive(Debug, Clone)]
pub struct SturmChain {
    polys: Vec<IntPoly>,
}

impl SturmChain {
    pub fn new(p: &IntPoly) -> Result<Self> {
        if p.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let mut polys = vec![p.clone()];
        let d = p.derivative();
        if d.is_zero() {
            return Ok(SturmChain { polys });
        }
        polys.push(d);
        loop {
            let n = polys.len();
            let r = pseudo_remainder(&polys[n - 2], &polys[n - 1]);
            if r.is_zero() {
                break;
            }
            let content = r.content();
            let next = IntPoly::new(r.coeffs().iter().map(|c| -(c / &content)).collect());
            let done = next.degree() == Some(0);
            polys.push(next);
            if done {
                break;
            }
        }
        Ok(SturmChain { polys })
    }

    pub fn polys(&self) -> &[IntPoly] {
        &self.polys
    }

    /// Sign variations of the chain evaluated at `x`.
    pub fn variations_at(&self, x: &Rational) -> usize {
        let mut last = Sign::NoSign;
        let mut count = 0;
        for p in &self.polys {
            let s = p.eval_sign(x);
            if s == Sign::NoSign {
                continue;
            }
            if last != Sign::NoSign && s != last {
                count += 1;
            }
            last = s;
        }
        count
    }

    /// Roots of a square-free chain head in the open `(a, b)`.
    ///
    /// At a simple root the head drops out of the variation count exactly as
    /// it does just to the right of it, so `a` may itself be a root; a root
    /// at `b` is subtracted explicitly.
    fn count_open(&self, a: &Rational, b: &Rational) -> usize {
        let at_b = usize::from(self.polys[0].eval_sign(b) == Sign::NoSign);
        self.variations_at(a) - self.variations_at(b) - at_b
    }
}

/// Number of distinct real roots of a square-free `P` in `(a, b)`.
pub fn sturm_count(p: &IntPoly, a: &Rational, b: &Rational) -> Result<usize> {
    if a >= b {
        return Err(Error::pre("sturm_count needs a < b"));
    }
    if p.eval_sign(a) == Sign::NoSign || p.eval_sign(b) == Sign::NoSign {
        return Err(Error::pre("interval endpoint is a root"));
    }
    let chain = SturmChain::new(p)?;
    Ok(chain.count_open(a, b))
}

/// `2^(k+1)` with `2^(k*i) >= |a_(n-i) / a_n|` for every `i`.
///
/// Fujiwara's bound rounded up to a power of two, from bit lengths alone.
/// Much tighter than Cauchy's when the coefficients grow like `n!`.
fn root_radius(p: &IntPoly) -> Rational {
    let c = p.coeffs();
    let n = c.len() - 1;
    let lead_bits = c[n].bits();
    let mut k = 0u64;
    for i in 1..=n {
        let a = &c[n - i];
        if a.sign() == Sign::NoSign {
            continue;
        }
        // |a / a_n| < 2^(bits(a) - bits(a_n) + 1)
        let excess = (a.bits() + 1).saturating_sub(lead_bits);
        k = k.max(excess.div_ceil(i as u64));
    }
    BigRational::from_integer(BigInt::from(1) << (k + 1))
}

/// Isolates all real roots by Sturm-guided bisection of `(-R, R)` with `R`
/// a root radius bound.
pub fn oracle_isolate(p: &IntPoly) -> Result<Vec<RootInterval>> {
    let Some(deg) = p.degree() else {
        return Err(Error::ZeroPolynomial);
    };
    if deg == 0 {
        return Ok(Vec::new());
    }
    let f = square_free_part(p)?;
    let chain = SturmChain::new(&f)?;
    let cap = root_radius(&f);
    let two = BigRational::from_integer(BigInt::from(2));

    let mut out = Vec::new();
    let total = chain.count_open(&-cap.clone(), &cap);
    let mut work = vec![(-cap.clone(), cap, total)];
    while let Some((lo, hi, count)) = work.pop() {
        let clean_ends = f.eval_sign(&lo) != Sign::NoSign && f.eval_sign(&hi) != Sign::NoSign;
        match count {
            0 => continue,
            1 if clean_ends => {
                out.push(RootInterval::Open(lo, hi));
                continue;
            }
            _ => {}
        }
        let mid = (&lo + &hi) / &two;
        let left = chain.count_open(&lo, &mid);
        let mut right = count - left;
        if f.eval_sign(&mid) == Sign::NoSign {
            out.push(RootInterval::Exact(mid.clone()));
            right -= 1;
        }
        work.push((mid.clone(), hi, right));
        work.push((lo, mid, left));
    }
    out.sort_by(|a, b| a.lo().cmp(b.lo()));
    Ok(out)
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
    fn sturm_count_examples() {
        let f = p(&[-2, 0, 1]);
        assert_eq!(sturm_count(&f, &q(0, 1), &q(2, 1)).unwrap(), 1);
        assert_eq!(sturm_count(&f, &q(-2, 1), &q(2, 1)).unwrap(), 2);
        assert_eq!(sturm_count(&p(&[1, 0, 1]), &q(-10, 1), &q(10, 1)).unwrap(), 0);
        assert!(sturm_count(&p(&[-1, 1]), &q(1, 1), &q(2, 1)).is_err());
        assert!(sturm_count(&f, &q(2, 1), &q(1, 1)).is_err());
    }

    #[test]
    fn root_radius_covers_roots() {
        // roots 1..5, and 1/2, and -1000
        let mut w = p(&[-1, 2]);
        for r in [1, 2, 3, 4, 5, -1000] {
            w = &w * &p(&[-r, 1]);
        }
        let r = root_radius(&w);
        assert!(r > q(1000, 1));
        assert!(r <= q(4096, 1));
        assert_eq!(root_radius(&p(&[1, 0, 1])), q(4, 1));
    }

    #[test]
    fn chain_ends_in_constant_for_square_free() {
        let chain = SturmChain::new(&p(&[1, -3, 0, 1])).unwrap();
        assert_eq!(chain.polys().last().unwrap().degree(), Some(0));
    }

    #[test]
    fn oracle_isolate_examples() {
        let r = oracle_isolate(&p(&[0, -1, 0, 1])).unwrap();
        assert_eq!(r.len(), 3);
        for (iv, x) in r.iter().zip([-1, 0, 1]) {
            assert!(iv.contains(&q(x, 1)), "{iv:?} misses {x}");
        }
        let mut w5 = IntPoly::one();
        for i in 1..=5 {
            w5 = &w5 * &p(&[-i, 1]);
        }
        let r = oracle_isolate(&w5).unwrap();
        assert_eq!(r.len(), 5);
        for (i, iv) in r.iter().enumerate() {
            assert!(iv.contains(&q(i as i64 + 1, 1)));
        }
        assert!(oracle_isolate(&p(&[1, 0, 1])).unwrap().is_empty());
    }
}
