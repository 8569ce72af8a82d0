//! Continued-fraction real-root isolation.
//!
//! [`cf_positive`] isolates the positive roots of a square-free polynomial by
//! walking a tree of Möbius transforms. Each node carries the transformed
//! polynomial and a Descartes budget; a certified lower bound shifts the node
//! toward its smallest root, otherwise the node splits into the images of
//! `(0, 1)` and `(1, inf)`. [`isolate`] wraps this for all real roots.

mod interval;
mod subst;

use num_bigint::{BigInt, Sign};
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::bounds::{cauchy_bound, lower_bound, BoundResult};
use crate::error::{Error, Result};
use crate::poly::{square_free_part, IntPoly};
use crate::Rational;

pub use interval::{IntervalKind, RootInterval};
pub use subst::{detect_power_substitution, map_back_roots};

/// `x -> (a x + b) / (c x + d)`, mapping `(0, inf)` onto a node's interval.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Mobius {
    pub a: BigInt,
    pub b: BigInt,
    pub c: BigInt,
    pub d: BigInt,
}

impl Mobius {
    pub fn identity() -> Self {
        Mobius {
            a: BigInt::one(),
            b: BigInt::zero(),
            c: BigInt::zero(),
            d: BigInt::one(),
        }
    }

    pub fn new(a: i64, b: i64, c: i64, d: i64) -> Self {
        Mobius {
            a: a.into(),
            b: b.into(),
            c: c.into(),
            d: d.into(),
        }
    }

    /// Image of `x = 0`, i.e. `b/d`.
    pub fn at_zero(&self) -> Rational {
        BigRational::new(self.b.clone(), self.d.clone())
    }

    /// Image of `x` under the map.
    pub fn apply(&self, x: &Rational) -> Rational {
        let num = x * BigRational::from(self.a.clone()) + BigRational::from(self.b.clone());
        let den = x * BigRational::from(self.c.clone()) + BigRational::from(self.d.clone());
        num / den
    }

    /// Substitute `x -> 2^k (x + 1)`.
    fn scale_and_shift(&mut self, k: usize) {
        self.a <<= k;
        self.c <<= k;
        self.b += &self.a;
        self.d += &self.c;
    }

    /// `x -> x + 1`: the image of `(1, inf)`.
    fn right(&self) -> Mobius {
        Mobius {
            a: self.a.clone(),
            b: &self.a + &self.b,
            c: self.c.clone(),
            d: &self.c + &self.d,
        }
    }

    /// `x -> 1 / (x + 1)`: the image of `(0, 1)`.
    fn left(&self) -> Mobius {
        Mobius {
            a: self.b.clone(),
            b: &self.a + &self.b,
            c: self.d.clone(),
            d: &self.c + &self.d,
        }
    }

    fn check(&self) -> Result<()> {
        if (self.c.is_zero() && self.d.is_zero()) || (self.a.is_zero() && self.b.is_zero()) {
            return Err(Error::pre("degenerate Möbius transform"));
        }
        Ok(())
    }
}

/// A pending node of the isolation loop.
#[derive(Debug, Clone)]
pub struct CFNode {
    pub mobius: Mobius,
    pub poly: IntPoly,
    /// Sign-variation budget: an even-defect overestimate of `V(poly)`.
    pub svar: usize,
}

/// The interval a node covers, with infinity replaced by `cap`.
///
/// When `c = 0` the node's map is a pure shift `x -> (a x + b)/d` and covers
/// `(b/d, inf)`.
pub fn intvl(m: &Mobius, cap: &Rational) -> Result<RootInterval> {
    m.check()?;
    if !m.c.is_zero() && !m.d.is_zero() {
        let x = BigRational::new(m.a.clone(), m.c.clone());
        let y = BigRational::new(m.b.clone(), m.d.clone());
        return Ok(if x <= y {
            RootInterval::Open(x, y)
        } else {
            RootInterval::Open(y, x)
        });
    }
    let lo = if m.c.is_zero() {
        BigRational::new(m.b.clone(), m.d.clone())
    } else {
        BigRational::new(m.a.clone(), m.c.clone())
    };
    if &lo >= cap {
        return Err(Error::pre("cap does not exceed the interval start"));
    }
    Ok(RootInterval::Open(lo, cap.clone()))
}

/// Outcome of the `V = 2` shortcut test.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EarlySplit {
    /// One root in `(0, 1)` and one in `(1, inf)`.
    SplitCertain,
    RootAtOne,
    Inconclusive,
}

/// For `V(P) = 2`: compares the sign of `P(1)` with the leading sign.
pub fn early_split_check(p: &IntPoly) -> Result<EarlySplit> {
    if p.sign_variation() != 2 {
        return Err(Error::pre("early split check needs exactly two sign variations"));
    }
    let at_one = p.sign_at_one();
    let lead = p.leading().map(BigInt::sign).unwrap_or(Sign::NoSign);
    Ok(match at_one {
        Sign::NoSign => EarlySplit::RootAtOne,
        s if s != lead => EarlySplit::SplitCertain,
        _ => EarlySplit::Inconclusive,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct IsolateOptions {
    /// Isolate through `y = x^k` when all exponents share a factor `k > 1`.
    pub substitution: bool,
    /// Use the `P(1)` sign test on nodes with two sign variations.
    pub early_split: bool,
    /// Recompute every child emitted on its budget alone and check `V = 1`.
    pub paranoid: bool,
}

impl Default for IsolateOptions {
    fn default() -> Self {
        IsolateOptions {
            substitution: true,
            early_split: true,
            paranoid: false,
        }
    }
}

/// Counters gathered over one or more isolation calls.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct IsolateStats {
    pub nodes: usize,
    pub taylor_shifts: usize,
    pub early_splits: usize,
    pub budget_emissions: usize,
    pub paranoid_checks: usize,
}

/// Isolation driver holding options and counters.
#[derive(Debug, Default)]
pub struct Isolator {
    opts: IsolateOptions,
    stats: IsolateStats,
}

impl Isolator {
    pub fn new(opts: IsolateOptions) -> Self {
        Isolator {
            opts,
            stats: IsolateStats::default(),
        }
    }

    pub fn options(&self) -> IsolateOptions {
        self.opts
    }

    pub fn stats(&self) -> &IsolateStats {
        &self.stats
    }

    /// All real roots of `p`, sorted ascending.
    pub fn isolate(&mut self, p: &IntPoly) -> Result<Vec<RootInterval>> {
        let Some(deg) = p.degree() else {
            return Err(Error::ZeroPolynomial);
        };
        if deg == 0 {
            return Ok(Vec::new());
        }
        let sqf = square_free_part(p)?;
        let mut out = Vec::new();
        let (q, zeros) = sqf.strip_zero_roots();
        if zeros > 0 {
            out.push(RootInterval::exact_int(0));
        }
        if q.degree().unwrap_or(0) > 0 {
            let (q1, k) = detect_power_substitution(&q);
            if self.opts.substitution && k > 1 {
                let ys = self.isolate_nonzero(&q1)?;
                out.extend(map_back_roots(&ys, k, &q)?);
            } else {
                out.extend(self.isolate_nonzero(&q)?);
            }
        }
        // a result ending at 0 is only root-free for q, not for sqf
        let mut out = out
            .into_iter()
            .map(|iv| interval::clear_root_endpoints(&sqf, iv))
            .collect::<Result<Vec<_>>>()?;
        out.sort_by(RootInterval::sort_key);
        Ok(out)
    }

    /// Square-free `q` with `q(0) != 0`: positive roots, then the mirror of
    /// the positive roots of `q(-x)`.
    fn isolate_nonzero(&mut self, q: &IntPoly) -> Result<Vec<RootInterval>> {
        let mut out = self.cf_positive(q)?;
        out.extend(self.cf_positive(&q.negate_x())?.iter().map(RootInterval::mirror));
        out.sort_by(RootInterval::sort_key);
        Ok(out)
    }

    /// Isolating intervals of the positive roots of a square-free `f` with
    /// `f(0) != 0`.
    pub fn cf_positive(&mut self, f: &IntPoly) -> Result<Vec<RootInterval>> {
        match f.degree() {
            None => return Err(Error::ZeroPolynomial),
            Some(0) => return Ok(Vec::new()),
            _ => {}
        }
        if f.constant_term_is_zero() {
            return Err(Error::pre("cf_positive needs a nonzero constant term"));
        }
        let s = f.sign_variation();
        if s == 0 {
            return Ok(Vec::new());
        }
        let cap = cauchy_bound(f)?;
        let mut roots = Vec::new();
        let mut stack = vec![CFNode {
            mobius: Mobius::identity(),
            poly: f.clone(),
            svar: s,
        }];

        while let Some(CFNode { mut mobius, mut poly, .. }) = stack.pop() {
            self.stats.nodes += 1;
            let mut s = poly.sign_variation();
            if s == 0 {
                continue;
            }

            if let BoundResult::Certified(alpha) = lower_bound(&poly)? {
                if alpha >= BigRational::one() {
                    let k = (alpha.numer().bits() - 1) as usize;
                    mobius.scale_and_shift(k);
                    poly = poly.homothety_pow2(k as u64);
                    poly.strip_pow2_content();
                    poly = poly.taylor_shift_1();
                    self.stats.taylor_shifts += 1;
                    if poly.constant_term_is_zero() {
                        roots.push(RootInterval::Exact(mobius.at_zero()));
                        poly = poly.shift_down()?;
                    }
                    s = poly.sign_variation();
                    match s {
                        0 => continue,
                        1 => {
                            roots.push(intvl(&mobius, &cap)?);
                            continue;
                        }
                        _ => {}
                    }
                }
            }

            let (m1, m2) = (mobius.right(), mobius.left());

            if self.opts.early_split
                && s == 2
                && early_split_check(&poly)? == EarlySplit::SplitCertain
            {
                self.stats.early_splits += 1;
                roots.push(intvl(&m1, &cap)?);
                roots.push(intvl(&m2, &cap)?);
                continue;
            }

            let mut p1 = poly.taylor_shift_1();
            self.stats.taylor_shifts += 1;
            let mut r = 0;
            if p1.constant_term_is_zero() {
                roots.push(RootInterval::Exact(m1.at_zero()));
                p1 = p1.shift_down()?;
                r = 1;
            }
            let s1 = p1.sign_variation();
            let mut s2 = s.checked_sub(s1 + r).ok_or_else(|| {
                Error::Invariant(format!("child variations {s1}+{r} exceed parent {s}"))
            })?;

            let mut p2 = None;
            if s2 > 1 {
                let mut q = poly.reverse()?.taylor_shift_1();
                self.stats.taylor_shifts += 1;
                if q.constant_term_is_zero() {
                    q = q.shift_down()?;
                    s2 = q.sign_variation();
                }
                p2 = Some(q);
            } else if s2 == 1 {
                self.stats.budget_emissions += 1;
                if self.opts.paranoid {
                    self.check_budget_emission(&poly)?;
                }
            }

            match s1 {
                0 => {}
                1 => roots.push(intvl(&m1, &cap)?),
                _ => stack.push(CFNode {
                    mobius: m1,
                    poly: p1,
                    svar: s1,
                }),
            }
            match (s2, p2) {
                (0, _) => {}
                (1, _) => roots.push(intvl(&m2, &cap)?),
                (_, Some(p2)) => stack.push(CFNode {
                    mobius: m2,
                    poly: p2,
                    svar: s2,
                }),
                (_, None) => unreachable!("budget above one always computes the child"),
            }
        }

        let mut out = roots
            .into_iter()
            .map(|iv| interval::clear_root_endpoints(f, iv))
            .collect::<Result<Vec<_>>>()?;
        out.sort_by(RootInterval::sort_key);
        Ok(out)
    }

    fn check_budget_emission(&mut self, poly: &IntPoly) -> Result<()> {
        self.stats.paranoid_checks += 1;
        let (p2, _) = poly.reverse()?.taylor_shift_1().strip_zero_roots();
        let v = p2.sign_variation();
        if v != 1 {
            return Err(Error::Invariant(format!(
                "child emitted on budget 1 has {v} sign variations"
            )));
        }
        Ok(())
    }
}

/// [`Isolator::cf_positive`] with default options.
pub fn cf_positive(f: &IntPoly) -> Result<Vec<RootInterval>> {
    Isolator::default().cf_positive(f)
}

/// [`Isolator::isolate`] with the given options.
pub fn isolate(p: &IntPoly, opts: IsolateOptions) -> Result<Vec<RootInterval>> {
    Isolator::new(opts).isolate(p)
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

    fn assert_isolates_single_sign_change(f: &IntPoly, iv: &RootInterval) {
        if let RootInterval::Open(lo, hi) = iv {
            let (a, b) = (f.eval_sign(lo), f.eval_sign(hi));
            assert!(a != Sign::NoSign && b != Sign::NoSign);
            assert_ne!(a, b, "{iv:?} has no sign change");
        }
    }

    #[test]
    fn intvl_examples() {
        let cap = q(100, 1);
        assert_eq!(
            intvl(&Mobius::new(1, 2, 1, 1), &cap).unwrap(),
            RootInterval::Open(q(1, 1), q(2, 1))
        );
        assert_eq!(
            intvl(&Mobius::new(1, 0, 0, 1), &q(3, 1)).unwrap(),
            RootInterval::Open(q(0, 1), q(3, 1))
        );
        assert_eq!(
            intvl(&Mobius::new(2, 1, 1, 1), &cap).unwrap(),
            RootInterval::Open(q(1, 1), q(2, 1))
        );
        // pure shift by 4
        assert_eq!(
            intvl(&Mobius::new(1, 4, 0, 1), &cap).unwrap(),
            RootInterval::Open(q(4, 1), cap.clone())
        );
        assert!(intvl(&Mobius::new(1, 0, 0, 0), &cap).is_err());
        assert!(intvl(&Mobius::new(0, 0, 1, 1), &cap).is_err());
    }

    #[test]
    fn cf_positive_examples() {
        assert!(cf_positive(&p(&[1, 0, 1])).unwrap().is_empty());

        let two = cf_positive(&p(&[2, -3, 1])).unwrap();
        assert_eq!(two.len(), 2);
        assert!(two[0].contains(&q(1, 1)));
        assert!(two[1].contains(&q(2, 1)));

        let f = p(&[-2, 0, 1]);
        let sqrt2 = cf_positive(&f).unwrap();
        assert_eq!(sqrt2.len(), 1);
        assert_eq!(sqrt2[0].kind(), IntervalKind::Open);
        assert_isolates_single_sign_change(&f, &sqrt2[0]);

        assert!(cf_positive(&p(&[0, 1, 1])).is_err());
    }

    #[test]
    fn isolate_examples() {
        let opts = IsolateOptions::default();
        let r = isolate(&p(&[0, -1, 0, 1]), opts).unwrap();
        assert_eq!(r.len(), 3);
        assert!(r[0].contains(&q(-1, 1)));
        assert_eq!(r[1], RootInterval::exact_int(0));
        assert!(r[2].contains(&q(1, 1)));

        assert!(isolate(&p(&[1, 0, 1]), opts).unwrap().is_empty());

        let r = isolate(&p(&[1, -2, 1]), opts).unwrap();
        assert_eq!(r.len(), 1);
        assert!(r[0].contains(&q(1, 1)));

        assert_eq!(isolate(&IntPoly::zero(), opts), Err(Error::ZeroPolynomial));
        assert!(isolate(&p(&[7]), opts).unwrap().is_empty());
    }

    #[test]
    fn early_split_examples() {
        assert_eq!(early_split_check(&p(&[2, -5, 2])).unwrap(), EarlySplit::SplitCertain);
        assert_eq!(early_split_check(&p(&[6, -5, 1])).unwrap(), EarlySplit::Inconclusive);
        assert_eq!(early_split_check(&p(&[2, -3, 1])).unwrap(), EarlySplit::RootAtOne);
        assert!(early_split_check(&p(&[-1, 1])).is_err());
    }

    #[test]
    fn wilkinson_ten_is_all_exact() {
        let mut w = IntPoly::one();
        for i in 1..=10 {
            w = &w * &p(&[-i, 1]);
        }
        let r = isolate(&w, IsolateOptions::default()).unwrap();
        assert_eq!(r.len(), 10);
        for (i, iv) in r.iter().enumerate() {
            assert!(iv.contains(&q(i as i64 + 1, 1)), "{iv:?}");
        }
    }

    #[test]
    fn paranoid_mode_counts_checks() {
        let mut w = IntPoly::one();
        for i in 1..=12 {
            w = &w * &p(&[-2 * i - 1, 2]);
        }
        let mut iso = Isolator::new(IsolateOptions {
            paranoid: true,
            ..Default::default()
        });
        let r = iso.isolate(&(&w - &IntPoly::one())).unwrap();
        assert_eq!(r.len(), 12);
        assert_eq!(iso.stats().paranoid_checks, iso.stats().budget_emissions);
    }

    #[test]
    fn options_toggle_paths_with_equal_counts() {
        let poly = p(&[1, -3, 0, 1]);
        for early_split in [false, true] {
            let r = isolate(
                &poly,
                IsolateOptions {
                    early_split,
                    ..Default::default()
                },
            )
            .unwrap();
            assert_eq!(r.len(), 3);
            for iv in &r {
                assert_isolates_single_sign_change(&poly, iv);
            }
        }
    }
}
