//! Scalar domains behind the exact pipeline.
//!
//! Every computation in this crate runs over a [`Field`] implementation:
//! either arbitrary-precision rationals ([`Rationals`]) or a fixed odd prime
//! field ([`PrimeField`]) with a 62-bit default modulus. Arithmetic is exact
//! in both; no rounding ever occurs.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::fmt::Debug;

/// Exact rational scalar: canonical reduced form, positive denominator.
pub type Rat = BigRational;

/// Field operations threaded through a context object so that prime-field
/// elements stay bare `u64`s in hot loops.
pub trait Field: Clone + Send + Sync {
    type Elem: Clone + PartialEq + Debug + Send + Sync;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn is_zero(&self, a: &Self::Elem) -> bool;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    /// Multiplicative inverse; `None` for zero.
    fn inv(&self, a: &Self::Elem) -> Option<Self::Elem>;
    fn from_i64(&self, v: i64) -> Self::Elem;
    /// Image of an exact rational in this field. `None` when the
    /// denominator is not invertible (prime divides it).
    fn from_rat(&self, r: &Rat) -> Option<Self::Elem>;

    fn div(&self, a: &Self::Elem, b: &Self::Elem) -> Option<Self::Elem> {
        self.inv(b).map(|bi| self.mul(a, &bi))
    }

    fn add_assign(&self, a: &mut Self::Elem, b: &Self::Elem) {
        *a = self.add(a, b);
    }

    fn mul_assign(&self, a: &mut Self::Elem, b: &Self::Elem) {
        *a = self.mul(a, b);
    }
}

/// The field of arbitrary-precision rationals.
#[derive(Clone, Copy, Debug, Default)]
pub struct Rationals;

impl Field for Rationals {
    type Elem = Rat;

    fn zero(&self) -> Rat {
        Rat::zero()
    }

    fn one(&self) -> Rat {
        Rat::one()
    }

    fn is_zero(&self, a: &Rat) -> bool {
        a.is_zero()
    }

    fn add(&self, a: &Rat, b: &Rat) -> Rat {
        a + b
    }

    fn sub(&self, a: &Rat, b: &Rat) -> Rat {
        a - b
    }

    fn mul(&self, a: &Rat, b: &Rat) -> Rat {
        a * b
    }

    fn neg(&self, a: &Rat) -> Rat {
        -a
    }

    fn inv(&self, a: &Rat) -> Option<Rat> {
        if a.is_zero() {
            None
        } else {
            Some(a.recip())
        }
    }

    fn from_i64(&self, v: i64) -> Rat {
        Rat::from_integer(BigInt::from(v))
    }

    fn from_rat(&self, r: &Rat) -> Option<Rat> {
        Some(r.clone())
    }
}

/// Default 62-bit prime moduli, largest first. All primes just below 2^62.
pub const DEFAULT_PRIMES: [u64; 6] = [
    4611686018427387847, // 2^62 - 57
    4611686018427387817, // 2^62 - 87
    4611686018427387787, // 2^62 - 117
    4611686018427387761, // 2^62 - 143
    4611686018427387751, // 2^62 - 153
    4611686018427387737, // 2^62 - 167
];

/// Prime field F_p for an odd prime p < 2^63.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PrimeField {
    p: u64,
}

impl PrimeField {
    /// Builds the field, checking primality (deterministic Miller-Rabin).
    pub fn new(p: u64) -> crate::Result<Self> {
        if p < 3 || p % 2 == 0 || !is_prime_u64(p) {
            return Err(crate::Error::InvalidData(format!("{p} is not an odd prime")));
        }
        if p >= 1 << 63 {
            return Err(crate::Error::InvalidData(format!("prime {p} must be < 2^63")));
        }
        Ok(PrimeField { p })
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    pub fn pow(&self, mut base: u64, mut exp: u64) -> u64 {
        let mut acc = 1u64;
        base %= self.p;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = mul_mod(acc, base, self.p);
            }
            base = mul_mod(base, base, self.p);
            exp >>= 1;
        }
        acc
    }

    /// Uniform element, using rejection sampling.
    pub fn sample<R: rand::Rng>(&self, rng: &mut R) -> u64 {
        rng.gen_range(0..self.p)
    }
}

#[inline]
fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

impl Field for PrimeField {
    type Elem = u64;

    #[inline]
    fn zero(&self) -> u64 {
        0
    }

    #[inline]
    fn one(&self) -> u64 {
        1
    }

    #[inline]
    fn is_zero(&self, a: &u64) -> bool {
        *a == 0
    }

    #[inline]
    fn add(&self, a: &u64, b: &u64) -> u64 {
        let s = a + b;
        if s >= self.p {
            s - self.p
        } else {
            s
        }
    }

    #[inline]
    fn sub(&self, a: &u64, b: &u64) -> u64 {
        if a >= b {
            a - b
        } else {
            a + self.p - b
        }
    }

    #[inline]
    fn mul(&self, a: &u64, b: &u64) -> u64 {
        mul_mod(*a, *b, self.p)
    }

    #[inline]
    fn neg(&self, a: &u64) -> u64 {
        if *a == 0 {
            0
        } else {
            self.p - a
        }
    }

    fn inv(&self, a: &u64) -> Option<u64> {
        if *a == 0 {
            None
        } else {
            Some(self.pow(*a, self.p - 2))
        }
    }

    fn from_i64(&self, v: i64) -> u64 {
        let r = v.rem_euclid(self.p as i64);
        r as u64
    }

    fn from_rat(&self, r: &Rat) -> Option<u64> {
        let num = bigint_mod_u64(r.numer(), self.p);
        let den = bigint_mod_u64(r.denom(), self.p);
        let den_inv = self.inv(&den)?;
        Some(self.mul(&num, &den_inv))
    }
}

/// Residue of a signed big integer in [0, p).
pub fn bigint_mod_u64(v: &BigInt, p: u64) -> u64 {
    let m = BigInt::from(p);
    let r = v.mod_floor(&m);
    let (_, digits) = r.to_u64_digits();
    match digits.len() {
        0 => 0,
        1 => digits[0],
        _ => unreachable!("residue below a u64 modulus"),
    }
}

/// Deterministic Miller-Rabin for u64 (the standard 7-witness set).
pub fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for q in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n == q {
            return true;
        }
        if n % q == 0 {
            return false;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d % 2 == 0 {
        d /= 2;
        s += 1;
    }
    'witness: for a in [2u64, 325, 9375, 28178, 450775, 9780504, 1795265022] {
        let a = a % n;
        if a == 0 {
            continue;
        }
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 0..s - 1 {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1u64;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, m);
        }
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    acc
}

/// Parses an exact scalar from its decimal-string form, e.g. `"-4/5"` or `"12"`.
pub fn rat_from_str(s: &str) -> crate::Result<Rat> {
    let parse_int = |t: &str| -> crate::Result<BigInt> {
        t.trim()
            .parse::<BigInt>()
            .map_err(|e| crate::Error::InvalidData(format!("bad integer {t:?}: {e}")))
    };
    match s.split_once('/') {
        Some((num, den)) => {
            let d = parse_int(den)?;
            if d.is_zero() {
                return Err(crate::Error::InvalidData(format!("zero denominator in {s:?}")));
            }
            Ok(Rat::new(parse_int(num)?, d))
        }
        None => Ok(Rat::from_integer(parse_int(s)?)),
    }
}

/// Serializes an exact scalar as a decimal string; integers drop the `/1`.
pub fn rat_to_str(r: &Rat) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Convenience constructor for integer rationals.
pub fn rat_int(v: i64) -> Rat {
    Rat::from_integer(BigInt::from(v))
}

/// Convenience constructor for fractions.
pub fn rat(num: i64, den: i64) -> Rat {
    Rat::new(BigInt::from(num), BigInt::from(den))
}

/// True when the rational is an integer and negative.
pub fn rat_is_negative(r: &Rat) -> bool {
    r.numer().is_negative()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn default_primes_are_prime_and_large() {
        for &p in &DEFAULT_PRIMES {
            assert!(is_prime_u64(p), "{p} must be prime");
            assert!(p >= 1 << 61, "{p} must be at least 2^61");
            assert!(p % 2 == 1);
        }
    }

    #[test]
    fn prime_field_arithmetic_round_trips() {
        let f = PrimeField::new(DEFAULT_PRIMES[0]).unwrap();
        let a = 123456789123456789u64 % f.modulus();
        let b = 987654321987654321u64 % f.modulus();
        let ab = f.mul(&a, &b);
        let binv = f.inv(&b).unwrap();
        assert_eq!(f.mul(&ab, &binv), a);
        assert_eq!(f.add(&a, &f.neg(&a)), 0);
        assert_eq!(f.sub(&a, &a), 0);
    }

    #[test]
    fn rational_images_respect_field_ops() {
        let f = PrimeField::new(DEFAULT_PRIMES[1]).unwrap();
        let x = rat(3, 7);
        let y = rat(-5, 2);
        let lhs = f.from_rat(&(x.clone() * y.clone())).unwrap();
        let rhs = f.mul(&f.from_rat(&x).unwrap(), &f.from_rat(&y).unwrap());
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn scalar_strings_round_trip() {
        for s in ["0", "-17", "3/4", "-22/7", "123456789012345678901234567890"] {
            let r = rat_from_str(s).unwrap();
            assert_eq!(rat_to_str(&r), s);
        }
        assert_eq!(rat_to_str(&rat_from_str("4/2").unwrap()), "2");
        assert!(rat_from_str("1/0").is_err());
        assert!(rat_from_str("abc").is_err());
    }

    #[test]
    fn miller_rabin_agrees_with_small_sieve() {
        let mut sieve = vec![true; 10000];
        sieve[0] = false;
        sieve[1] = false;
        for i in 2..10000 {
            if sieve[i] {
                for j in (i * i..10000).step_by(i) {
                    sieve[j] = false;
                }
            }
        }
        for n in 0..10000u64 {
            assert_eq!(is_prime_u64(n), sieve[n as usize], "mismatch at {n}");
        }
    }
}
