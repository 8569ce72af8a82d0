//! Dense univariate polynomials over arbitrary-precision integers.
//!
//! Coefficients are stored low-to-high (`coeffs[i]` multiplies `x^i`) and
//! the vector never ends in a zero, so the zero polynomial is the empty
//! vector and `degree == len - 1` otherwise.

mod gcd;
mod modular;

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::Rational;

pub use gcd::{gcd, square_free_part};
pub(crate) use gcd::pseudo_remainder;

#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

/// Number of sign changes in `coeffs`, ignoring zero entries.
pub fn sign_variation(coeffs: &[BigInt]) -> usize {
    let mut last = Sign::NoSign;
    let mut count = 0;
    for c in coeffs {
        let s = c.sign();
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

impl IntPoly {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        IntPoly { coeffs }
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        IntPoly { coeffs: Vec::new() }
    }

    pub fn constant(c: BigInt) -> Self {
        Self::new(vec![c])
    }

    pub fn one() -> Self {
        Self::constant(BigInt::one())
    }

    /// The polynomial `x`.
    pub fn x() -> Self {
        Self::from_i64s(&[0, 1])
    }

    /// `c * x^k`
    pub fn monomial(c: BigInt, k: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); k];
        coeffs.push(c);
        Self::new(coeffs)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<BigInt> {
        self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    /// Coefficient of `x^i`, zero past the degree.
    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    pub fn constant_term_is_zero(&self) -> bool {
        self.coeffs.first().is_none_or(Zero::is_zero)
    }

    pub fn sign_variation(&self) -> usize {
        sign_variation(&self.coeffs)
    }

    /// `P(x + 1)` by the classical Horner scheme.
    pub fn taylor_shift_1(&self) -> IntPoly {
        let mut a = self.coeffs.clone();
        taylor_shift_in_place(&mut a);
        IntPoly { coeffs: a }
    }

    /// `x^n P(1/x)` with trailing zeros stripped.
    pub fn reverse(&self) -> Result<IntPoly> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let mut a = self.coeffs.clone();
        a.reverse();
        Ok(IntPoly::new(a))
    }

    /// `P(2^k x)`.
    pub fn homothety_pow2(&self, k: u64) -> IntPoly {
        if k == 0 {
            return self.clone();
        }
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(i, c)| c << (k as usize * i))
            .collect();
        IntPoly { coeffs }
    }

    /// `P / x`; requires a zero constant term.
    pub fn shift_down(&self) -> Result<IntPoly> {
        if self.is_zero() {
            return Ok(IntPoly::zero());
        }
        if !self.coeffs[0].is_zero() {
            return Err(Error::NonzeroConstantTerm);
        }
        Ok(IntPoly {
            coeffs: self.coeffs[1..].to_vec(),
        })
    }

    /// Strip the largest power of `x` dividing `P`; returns the multiplicity too.
    pub fn strip_zero_roots(&self) -> (IntPoly, usize) {
        let k = self.coeffs.iter().take_while(|c| c.is_zero()).count();
        (
            IntPoly {
                coeffs: self.coeffs[k..].to_vec(),
            },
            k,
        )
    }

    /// `P(-x)`.
    pub fn negate_x(&self) -> IntPoly {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(i, c)| if i % 2 == 1 { -c } else { c.clone() })
            .collect();
        IntPoly { coeffs }
    }

    /// Exact sign of `P(q)`, computed on `den^n P(num/den)` in integers.
    pub fn eval_sign(&self, q: &Rational) -> Sign {
        self.eval_scaled(q).sign()
    }

    /// `den^n * P(num/den)` where `n` is the degree.
    pub fn eval_scaled(&self, q: &Rational) -> BigInt {
        let Some(n) = self.degree() else {
            return BigInt::zero();
        };
        let (num, den) = (q.numer(), q.denom());
        let mut acc = self.coeffs[n].clone();
        let mut den_pow = BigInt::one();
        for c in self.coeffs[..n].iter().rev() {
            den_pow *= den;
            acc = acc * num + c * &den_pow;
        }
        acc
    }

    /// Sign of `P(1)`, i.e. of the coefficient sum.
    pub fn sign_at_one(&self) -> Sign {
        self.coeffs.iter().sum::<BigInt>().sign()
    }

    pub fn derivative(&self) -> IntPoly {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| c * BigInt::from(i))
            .collect();
        IntPoly::new(coeffs)
    }

    /// Gcd of the coefficients (nonnegative; zero for the zero polynomial).
    pub fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for c in &self.coeffs {
            g = g.gcd(c);
            if g.is_one() {
                break;
            }
        }
        g
    }

    /// Divides out the content and makes the leading coefficient positive.
    pub fn primitive_part(&self) -> IntPoly {
        if self.is_zero() {
            return IntPoly::zero();
        }
        let mut g = self.content();
        if self.leading().is_some_and(Signed::is_negative) {
            g = -g;
        }
        if g.is_one() {
            return self.clone();
        }
        IntPoly {
            coeffs: self.coeffs.iter().map(|c| c / &g).collect(),
        }
    }

    /// Removes the common power-of-two factor of the coefficients. Signs and
    /// roots are unchanged.
    pub(crate) fn strip_pow2_content(&mut self) {
        let Some(tz) = self.coeffs.iter().filter_map(BigInt::trailing_zeros).min() else {
            return;
        };
        if tz > 0 {
            for c in &mut self.coeffs {
                *c >>= tz as usize;
            }
        }
    }

    /// Exact quotient `P / Q` over the integers.
    pub fn exact_div(&self, q: &IntPoly) -> Result<IntPoly> {
        let (quot, rem) = self.div_rem_exact_lc(q)?;
        if !rem.is_zero() {
            return Err(Error::InexactDivision);
        }
        Ok(quot)
    }

    fn div_rem_exact_lc(&self, q: &IntPoly) -> Result<(IntPoly, IntPoly)> {
        let Some(dq) = q.degree() else {
            return Err(Error::ZeroPolynomial);
        };
        let Some(dp) = self.degree() else {
            return Ok((IntPoly::zero(), IntPoly::zero()));
        };
        if dp < dq {
            return Ok((IntPoly::zero(), self.clone()));
        }
        let lq = &q.coeffs[dq];
        let mut rem = self.coeffs.clone();
        let mut quot = vec![BigInt::zero(); dp - dq + 1];
        for k in (0..=dp - dq).rev() {
            let top = &rem[k + dq];
            if top.is_zero() {
                continue;
            }
            let (f, r) = top.div_rem(lq);
            if !r.is_zero() {
                return Err(Error::InexactDivision);
            }
            for (j, qc) in q.coeffs.iter().enumerate() {
                rem[k + j] -= &f * qc;
            }
            quot[k] = f;
        }
        Ok((IntPoly::new(quot), IntPoly::new(rem)))
    }

    /// Exponent gcd of the nonzero terms and the contracted polynomial.
    pub(crate) fn exponent_gcd(&self) -> usize {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .fold(0usize, |g, (i, _)| g.gcd(&i))
    }

    /// `x^k`-contraction: the `Q` with `P(x) = Q(x^k)`, or `None` when some
    /// nonzero exponent is not a multiple of `k`.
    pub(crate) fn contract(&self, k: usize) -> Option<IntPoly> {
        if k == 0 {
            return None;
        }
        let ok = self
            .coeffs
            .iter()
            .enumerate()
            .all(|(i, c)| c.is_zero() || i % k == 0);
        ok.then(|| IntPoly::new(self.coeffs.iter().step_by(k).cloned().collect()))
    }

    pub fn pow(&self, mut e: u32) -> IntPoly {
        let mut base = self.clone();
        let mut acc = IntPoly::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }
}

/// In-place `P(x) <- P(x + 1)`. O(n^2) additions.
pub(crate) fn taylor_shift_in_place(a: &mut [BigInt]) {
    let n = a.len();
    if n < 2 {
        return;
    }
    for k in (0..n - 1).rev() {
        for j in k..n - 1 {
            let (lo, hi) = a.split_at_mut(j + 1);
            lo[j] += &hi[0];
        }
    }
}

impl Add for &IntPoly {
    type Output = IntPoly;
    fn add(self, rhs: &IntPoly) -> IntPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n)
            .map(|i| match (self.coeffs.get(i), rhs.coeffs.get(i)) {
                (Some(a), Some(b)) => a + b,
                (Some(a), None) | (None, Some(a)) => a.clone(),
                (None, None) => unreachable!(),
            })
            .collect();
        IntPoly::new(coeffs)
    }
}

impl Sub for &IntPoly {
    type Output = IntPoly;
    fn sub(self, rhs: &IntPoly) -> IntPoly {
        self + &(-rhs)
    }
}

impl Neg for &IntPoly {
    type Output = IntPoly;
    fn neg(self) -> IntPoly {
        IntPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Neg for IntPoly {
    type Output = IntPoly;
    fn neg(mut self) -> IntPoly {
        for c in &mut self.coeffs {
            *c = -std::mem::take(c);
        }
        self
    }
}

impl Mul for &IntPoly {
    type Output = IntPoly;
    fn mul(self, rhs: &IntPoly) -> IntPoly {
        if self.is_zero() || rhs.is_zero() {
            return IntPoly::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        IntPoly::new(out)
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for IntPoly {
            type Output = IntPoly;
            fn $m(self, rhs: IntPoly) -> IntPoly {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl fmt::Display for IntPoly {
    /// High-to-low human form, e.g. `x^2 - 2*x + 1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            first = false;
            match (i, mag.is_one()) {
                (0, _) => write!(f, "{mag}")?,
                (1, true) => write!(f, "x")?,
                (1, false) => write!(f, "{mag}*x")?,
                (_, true) => write!(f, "x^{i}")?,
                (_, false) => write!(f, "{mag}*x^{i}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "IntPoly({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::BigRational;

    fn p(c: &[i64]) -> IntPoly {
        IntPoly::from_i64s(c)
    }

    fn q(n: i64, d: i64) -> Rational {
        BigRational::new(n.into(), d.into())
    }

    fn bigs(c: &[i64]) -> Vec<BigInt> {
        c.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn sign_variation_examples() {
        assert_eq!(sign_variation(&bigs(&[1, -1, 1])), 2);
        assert_eq!(sign_variation(&bigs(&[1, 0, 0, -2])), 1);
        assert_eq!(sign_variation(&[]), 0);
        assert_eq!(sign_variation(&bigs(&[0, 0, 5])), 0);
    }

    #[test]
    fn normalization_strips_trailing_zeros() {
        assert!(p(&[0, 0]).is_zero());
        assert_eq!(p(&[1, 2, 0, 0]).degree(), Some(1));
        assert_eq!(IntPoly::zero().degree(), None);
    }

    #[test]
    fn taylor_shift_examples() {
        assert_eq!(p(&[0, 0, 1]).taylor_shift_1(), p(&[1, 2, 1]));
        assert_eq!(p(&[0, 1]).taylor_shift_1(), p(&[1, 1]));
        // 2(x+1)^3 - (x+1), expanded by multiplication
        let xp1 = p(&[1, 1]);
        let oracle = &(&p(&[2]) * &xp1.pow(3)) - &xp1;
        assert_eq!(oracle, p(&[1, 5, 6, 2]));
        assert_eq!(p(&[0, -1, 0, 2]).taylor_shift_1(), oracle);
    }

    #[test]
    fn reverse_examples() {
        assert_eq!(p(&[1, 2, 3]).reverse().unwrap(), p(&[3, 2, 1]));
        assert_eq!(p(&[0, 0, 1]).reverse().unwrap(), p(&[1]));
        assert_eq!(p(&[1, -2, 0, 1]).reverse().unwrap(), p(&[1, 0, -2, 1]));
        assert_eq!(IntPoly::zero().reverse(), Err(Error::ZeroPolynomial));
    }

    #[test]
    fn homothety_examples() {
        assert_eq!(p(&[0, 1, 1]).homothety_pow2(1), p(&[0, 2, 4]));
        assert_eq!(p(&[3, -1, 7]).homothety_pow2(0), p(&[3, -1, 7]));
        assert_eq!(p(&[-1, 0, 0, 1]).homothety_pow2(2), p(&[-1, 0, 0, 64]));
    }

    #[test]
    fn shift_down_examples() {
        assert_eq!(p(&[0, 2, 1]).shift_down().unwrap(), p(&[2, 1]));
        assert_eq!(p(&[0, 1]).shift_down().unwrap(), p(&[1]));
        assert_eq!(p(&[0, -5, 0, 3]).shift_down().unwrap(), p(&[-5, 0, 3]));
        assert_eq!(p(&[1, 1]).shift_down(), Err(Error::NonzeroConstantTerm));
    }

    #[test]
    fn eval_sign_examples() {
        assert_eq!(p(&[-2, 0, 1]).eval_sign(&q(1, 1)), Sign::Minus);
        assert_eq!(p(&[-2, 0, 1]).eval_sign(&q(3, 2)), Sign::Plus);
        assert_eq!(p(&[-1, 1]).eval_sign(&q(1, 1)), Sign::NoSign);
        assert_eq!(p(&[-1, 3]).eval_sign(&q(1, 3)), Sign::NoSign);
        assert_eq!(p(&[1, 0, 1]).eval_sign(&q(-7, 3)), Sign::Plus);
        assert_eq!(IntPoly::zero().eval_sign(&q(1, 2)), Sign::NoSign);
    }

    #[test]
    fn derivative_examples() {
        assert_eq!(p(&[0, 0, 0, 1]).derivative(), p(&[0, 0, 3]));
        assert!(p(&[5]).derivative().is_zero());
        assert_eq!(p(&[2, -3, 1]).derivative(), p(&[-3, 2]));
    }

    #[test]
    fn ring_op_examples() {
        assert_eq!(&p(&[-1, 1]) * &p(&[2, 1]), p(&[-2, 1, 1]));
        assert_eq!(p(&[-1, 0, 1]).exact_div(&p(&[-1, 1])).unwrap(), p(&[1, 1]));
        assert!((&p(&[0, 1]) + &p(&[0, -1])).is_zero());
        assert_eq!(
            p(&[1, 0, 1]).exact_div(&p(&[-1, 1])),
            Err(Error::InexactDivision)
        );
        assert_eq!(p(&[1, 2]).exact_div(&p(&[0, 2])), Err(Error::InexactDivision));
        assert_eq!(-p(&[1, -2]), p(&[-1, 2]));
        assert_eq!(&p(&[1, 2, 3]) - &p(&[1, 2, 3]), IntPoly::zero());
    }

    #[test]
    fn display_is_high_to_low() {
        assert_eq!(p(&[-2, 1, 1]).to_string(), "x^2 + x - 2");
        assert_eq!(p(&[0, -3, 0, 2]).to_string(), "2*x^3 - 3*x");
        assert_eq!(IntPoly::zero().to_string(), "0");
    }

    #[test]
    fn content_and_primitive_part() {
        assert_eq!(p(&[4, -6, 2]).content(), BigInt::from(2));
        assert_eq!(p(&[4, -6, -2]).primitive_part(), p(&[-2, 3, 1]));
    }

    #[test]
    fn contraction() {
        let poly = p(&[4, 0, -5, 0, 1]);
        assert_eq!(poly.exponent_gcd(), 2);
        assert_eq!(poly.contract(2), Some(p(&[4, -5, 1])));
        assert_eq!(poly.contract(3), None);
    }
}
