use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::{modular, IntPoly};
use crate::error::{Error, Result};

/// `lc(b)^k a mod b` by repeated leading-term elimination, with `k` the number
/// of elimination steps actually taken.
fn prem_steps(a: &IntPoly, b: &IntPoly) -> (Vec<BigInt>, u32) {
    let db = b.degree().expect("pseudo-remainder by zero polynomial");
    let lb = &b.coeffs[db];
    let mut r = a.coeffs.clone();
    let mut steps = 0u32;
    while r.len() > db && !r.is_empty() {
        let dr = r.len() - 1;
        let lr = r[dr].clone();
        let shift = dr - db;
        for c in r.iter_mut() {
            *c *= lb;
        }
        for (j, bc) in b.coeffs.iter().enumerate() {
            r[shift + j] -= &lr * bc;
        }
        debug_assert!(r[dr].is_zero());
        while r.last().is_some_and(Zero::is_zero) {
            r.pop();
        }
        steps += 1;
    }
    (r, steps)
}

/// Remainder `r` with `m*a = q*b + r` for some positive integer `m`.
///
/// The multiplier is kept positive so that the sign pattern of `a` and `r`
/// stays comparable, which Sturm chains rely on.
pub(crate) fn pseudo_remainder(a: &IntPoly, b: &IntPoly) -> IntPoly {
    let (r, steps) = prem_steps(a, b);
    let r = IntPoly::new(r);
    if b.leading().is_some_and(Signed::is_negative) && steps % 2 == 1 {
        -r
    } else {
        r
    }
}

/// The classical `lc(b)^(deg a - deg b + 1) a mod b`.
fn prem(a: &IntPoly, b: &IntPoly) -> IntPoly {
    let delta = a.coeffs.len() - b.coeffs.len() + 1;
    let (r, steps) = prem_steps(a, b);
    let missing = delta as u32 - steps;
    let lb = b.leading().expect("nonzero divisor");
    let scale = num_traits::pow(lb.clone(), missing as usize);
    IntPoly::new(r.into_iter().map(|c| c * &scale).collect())
}

/// Greatest common divisor over the rationals, normalized to a primitive
/// integer polynomial with positive leading coefficient.
pub fn gcd(p: &IntPoly, q: &IntPoly) -> Result<IntPoly> {
    match (p.is_zero(), q.is_zero()) {
        (true, true) => return Err(Error::ZeroPolynomial),
        (true, false) => return Ok(q.primitive_part()),
        (false, true) => return Ok(p.primitive_part()),
        _ => {}
    }
    if p.degree() == Some(0) || q.degree() == Some(0) {
        return Ok(IntPoly::one());
    }
    if modular::gcd_degree_bound(p, q) == 0 {
        return Ok(IntPoly::one());
    }
    subresultant_prs(p.primitive_part(), q.primitive_part())
}

/// Last nonzero term of the subresultant remainder sequence, made primitive.
///
/// Divides each pseudo-remainder by the known factor `beta`, which keeps
/// coefficient growth linear without any coefficient gcds along the way.
fn subresultant_prs(mut a: IntPoly, mut b: IntPoly) -> Result<IntPoly> {
    if a.degree() < b.degree() {
        std::mem::swap(&mut a, &mut b);
    }
    let mut delta = a.degree().unwrap_or(0) - b.degree().unwrap_or(0);
    let mut beta = if delta.is_multiple_of(2) { -BigInt::one() } else { BigInt::one() };
    let mut psi = -BigInt::one();
    loop {
        let r = prem(&a, &b);
        match r.degree() {
            None => return Ok(b.primitive_part()),
            Some(0) => return Ok(IntPoly::one()),
            Some(_) => {}
        }
        let r = div_scalar(&r, &beta)?;
        a = b;
        b = r;
        let lc = a.leading().expect("nonzero").clone();
        // psi <- (-lc)^delta / psi^(delta - 1)
        psi = if delta == 0 {
            psi
        } else {
            let num = num_traits::pow(-&lc, delta);
            let den = num_traits::pow(psi.clone(), delta - 1);
            exact_int_div(&num, &den)?
        };
        delta = a.degree().unwrap_or(0) - b.degree().unwrap_or(0);
        beta = -lc * num_traits::pow(psi.clone(), delta);
    }
}

fn div_scalar(p: &IntPoly, d: &BigInt) -> Result<IntPoly> {
    let c = p.coeffs().iter().map(|c| exact_int_div(c, d)).collect::<Result<Vec<_>>>()?;
    Ok(IntPoly::new(c))
}

fn exact_int_div(a: &BigInt, b: &BigInt) -> Result<BigInt> {
    let (q, r) = a.div_rem(b);
    if r.is_zero() {
        Ok(q)
    } else {
        Err(Error::InexactDivision)
    }
}

/// `P / gcd(P, P')`: same distinct roots, all simple, leading sign kept.
pub fn square_free_part(p: &IntPoly) -> Result<IntPoly> {
    match p.degree() {
        None => return Err(Error::ZeroPolynomial),
        Some(0) => return Err(Error::pre("square-free part needs degree >= 1")),
        _ => {}
    }
    // x^m is handled directly; it would otherwise force the full remainder
    // sequence on sparse inputs
    let (q, zeros) = p.strip_zero_roots();
    let sqf = if q.degree() == Some(0) {
        q
    } else {
        let g = gcd(&q, &q.derivative())?;
        if g.degree() == Some(0) {
            q
        } else {
            q.exact_div(&g)?
        }
    };
    Ok(if zeros > 0 { &sqf * &IntPoly::x() } else { sqf })
}
