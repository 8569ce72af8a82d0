//! Word-sized modular arithmetic used to certify trivial gcds quickly.

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};

use super::IntPoly;

const PRIMES: [u64; 3] = [
    2_305_843_009_213_693_951, // 2^61 - 1
    4_611_686_018_427_387_847,
    1_152_921_504_606_846_883,
];

fn reduce(c: &BigInt, p: u64) -> u64 {
    let m = BigInt::from(p);
    let r = ((c % &m) + &m) % &m;
    r.to_u64().expect("residue fits in u64")
}

fn mul(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn pow(mut a: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1;
    while e > 0 {
        if e & 1 == 1 {
            acc = mul(acc, a, p);
        }
        a = mul(a, a, p);
        e >>= 1;
    }
    acc
}

fn trim(v: &mut Vec<u64>) {
    while v.last() == Some(&0) {
        v.pop();
    }
}

fn gcd_degree_mod(a: &IntPoly, b: &IntPoly, p: u64) -> Option<usize> {
    let mut x: Vec<u64> = a.coeffs().iter().map(|c| reduce(c, p)).collect();
    let mut y: Vec<u64> = b.coeffs().iter().map(|c| reduce(c, p)).collect();
    trim(&mut x);
    trim(&mut y);
    if x.is_empty() {
        return None;
    }
    while !y.is_empty() {
        let inv = pow(*y.last().unwrap(), p - 2, p);
        while x.len() >= y.len() {
            let f = mul(*x.last().unwrap(), inv, p);
            let s = x.len() - y.len();
            for (j, &c) in y.iter().enumerate() {
                x[s + j] = (x[s + j] + p - mul(f, c, p)) % p;
            }
            trim(&mut x);
            if x.is_empty() {
                break;
            }
        }
        std::mem::swap(&mut x, &mut y);
    }
    Some(x.len() - 1)
}

/// Upper bound on the degree of `gcd(a, b)` over the rationals.
///
/// Reducing modulo a prime that does not divide `lc(a)` keeps the degree of
/// the true gcd, so any such prime gives a valid bound.
pub(super) fn gcd_degree_bound(a: &IntPoly, b: &IntPoly) -> usize {
    let trivial = a.degree().unwrap_or(0).min(b.degree().unwrap_or(0));
    let Some(lc) = a.leading() else {
        return trivial;
    };
    let mut best = trivial;
    for &p in &PRIMES {
        if (lc % BigInt::from(p)).is_zero() {
            continue;
        }
        if let Some(d) = gcd_degree_mod(a, b, p) {
            best = best.min(d);
            if best == 0 {
                break;
            }
        }
    }
    best
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn detects_coprime_and_common_factor() {
        let a = IntPoly::from_i64s(&[-1, 0, 1]);
        let b = IntPoly::from_i64s(&[-1, 1]);
        assert_eq!(gcd_degree_bound(&a, &b), 1);
        let c = IntPoly::from_i64s(&[1, 0, 1]);
        assert_eq!(gcd_degree_bound(&c, &b), 0);
    }
}
