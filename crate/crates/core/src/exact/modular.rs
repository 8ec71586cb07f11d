//! Chinese remaindering and rational reconstruction.
//!
//! Searches run over 62-bit prime fields; exact integers or rationals are
//! recovered afterwards by combining residues across primes.

use super::field::Rat;
use crate::{Error, Result};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// Combines residues into the unique value in [0, M), M the product of the
/// (pairwise coprime) moduli.
pub fn crt(residues: &[(u64, u64)]) -> Result<(BigInt, BigInt)> {
    if residues.is_empty() {
        return Err(Error::EmptyInput("no residues to combine".into()));
    }
    let mut value = BigInt::from(residues[0].0);
    let mut modulus = BigInt::from(residues[0].1);
    for &(r, p) in &residues[1..] {
        let bp = BigInt::from(p);
        let inv = mod_inverse(&modulus, &bp).ok_or_else(|| {
            Error::Reconstruction(format!("moduli not coprime at prime {p}"))
        })?;
        // value + modulus * ((r - value) * inv mod p)
        let delta = (BigInt::from(r) - &value).mod_floor(&bp);
        let k = (delta * inv).mod_floor(&bp);
        value += &modulus * k;
        modulus *= bp;
    }
    Ok((value, modulus))
}

/// Combines residues into the balanced representative in (-M/2, M/2].
pub fn crt_signed(residues: &[(u64, u64)]) -> Result<(BigInt, BigInt)> {
    let (v, m) = crt(residues)?;
    let half = &m >> 1;
    Ok(if v > half { (v - &m, m) } else { (v, m) })
}

fn mod_inverse(a: &BigInt, m: &BigInt) -> Option<BigInt> {
    let e = a.extended_gcd(m);
    if e.gcd.is_one() {
        Some(e.x.mod_floor(m))
    } else {
        None
    }
}

/// Recovers the unique rational num/den with |num| <= bound_num,
/// 0 < den <= bound_den, gcd(den, m) = 1 and num = a * den (mod m),
/// provided bound_num * bound_den * 2 < m. Returns `None` when no such
/// rational exists.
pub fn rational_reconstruct_bounded(
    a: &BigInt,
    m: &BigInt,
    bound_num: &BigInt,
    bound_den: &BigInt,
) -> Option<(BigInt, BigInt)> {
    let a = a.mod_floor(m);
    // extended Euclid on (m, a); remainders shrink below bound_num
    let mut r0 = m.clone();
    let mut r1 = a.clone();
    let mut t0 = BigInt::zero();
    let mut t1 = BigInt::one();
    while &r1 > bound_num {
        let q = &r0 / &r1;
        let r2 = &r0 - &q * &r1;
        let t2 = &t0 - &q * &t1;
        r0 = r1;
        r1 = r2;
        t0 = t1;
        t1 = t2;
    }
    let (num, den) = if t1.is_negative() { (-r1, -t1) } else { (r1, t1) };
    if den.is_zero() || &den > bound_den {
        return None;
    }
    if !num.gcd(&den).is_one() && !(num.is_zero() && den.is_one()) {
        let g = num.gcd(&den);
        let (num, den) = (&num / &g, &den / &g);
        if !(&num * &den).is_zero() || num.is_zero() {
            return verify_congruence(&num, &den, &a, m).then_some((num, den));
        }
        return None;
    }
    verify_congruence(&num, &den, &a, m).then_some((num, den))
}

fn verify_congruence(num: &BigInt, den: &BigInt, a: &BigInt, m: &BigInt) -> bool {
    ((a * den) - num).mod_floor(m).is_zero()
}

/// Rational reconstruction with the symmetric bound sqrt(m/2) on numerator
/// and denominator.
pub fn rational_reconstruct(a: &BigInt, m: &BigInt) -> Option<Rat> {
    let bound = (m >> 1).sqrt();
    let (num, den) = rational_reconstruct_bounded(a, m, &bound, &bound)?;
    Some(Rat::new(num, den))
}

/// Reconstructs an exact rational from per-prime residues, given bounds on
/// numerator and denominator magnitude. Errors when the prime set is too
/// small for the bounds.
pub fn reconstruct_rational_from_residues(
    residues: &[(u64, u64)],
    bound_num: &BigInt,
    bound_den: &BigInt,
) -> Result<Rat> {
    let (v, m) = crt(residues)?;
    if &(BigInt::from(2) * bound_num * bound_den) >= &m {
        return Err(Error::Reconstruction(format!(
            "modulus {m} too small for bounds {bound_num} x {bound_den}"
        )));
    }
    rational_reconstruct_bounded(&v, &m, bound_num, bound_den)
        .map(|(n, d)| Rat::new(n, d))
        .ok_or_else(|| Error::Reconstruction("no rational matches the residues".into()))
}

/// Reconstructs an exact integer from per-prime residues, given a magnitude
/// bound. Errors when the prime set is too small for the bound.
pub fn reconstruct_integer_from_residues(residues: &[(u64, u64)], bound: &BigInt) -> Result<BigInt> {
    let (v, m) = crt_signed(residues)?;
    if &(BigInt::from(2) * bound) >= &m {
        return Err(Error::Reconstruction(format!(
            "modulus {m} too small for integer bound {bound}"
        )));
    }
    if v.abs() > *bound {
        return Err(Error::Reconstruction(format!(
            "reconstructed value {v} exceeds the stated bound {bound}"
        )));
    }
    Ok(v)
}
