//! Dense univariate polynomials over the rationals, low degree first.
//!
//! Canonical form: the coefficient vector is empty for the zero polynomial
//! and otherwise ends in a nonzero leading coefficient.

use super::field::{rat_to_str, Rat};
use crate::{Error, Result};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UniPoly {
    coeffs: Vec<Rat>,
}

impl UniPoly {
    pub fn zero() -> Self {
        UniPoly { coeffs: Vec::new() }
    }

    pub fn from_coeffs(coeffs: Vec<Rat>) -> Self {
        let mut p = UniPoly { coeffs };
        p.normalize();
        p
    }

    pub fn from_i64_coeffs(coeffs: &[i64]) -> Self {
        Self::from_coeffs(coeffs.iter().map(|&c| Rat::from_integer(BigInt::from(c))).collect())
    }

    fn normalize(&mut self) {
        while self.coeffs.last().map_or(false, |c| c.is_zero()) {
            self.coeffs.pop();
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> Rat {
        self.coeffs.get(i).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn eval(&self, x: &Rat) -> Rat {
        let mut acc = Rat::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn add(&self, other: &UniPoly) -> UniPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            out.push(self.coeff(i) + other.coeff(i));
        }
        UniPoly::from_coeffs(out)
    }

    pub fn scale(&self, s: &Rat) -> UniPoly {
        UniPoly::from_coeffs(self.coeffs.iter().map(|c| c * s).collect())
    }

    pub fn mul(&self, other: &UniPoly) -> UniPoly {
        if self.is_zero() || other.is_zero() {
            return UniPoly::zero();
        }
        let mut out = vec![Rat::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        UniPoly::from_coeffs(out)
    }

    /// Remainder of self modulo other (other nonzero).
    fn rem(&self, other: &UniPoly) -> UniPoly {
        let d = other.degree().expect("divisor must be nonzero");
        let lead = other.coeffs.last().unwrap().clone();
        let mut r = self.clone();
        while let Some(rd) = r.degree() {
            if rd < d {
                break;
            }
            let factor = r.coeffs.last().unwrap() / &lead;
            let shift = rd - d;
            for (i, c) in other.coeffs.iter().enumerate() {
                let t = &factor * c;
                r.coeffs[i + shift] -= t;
            }
            r.normalize();
        }
        r
    }

    /// Monic greatest common divisor; gcd(0, f) = monic f.
    pub fn gcd(&self, other: &UniPoly) -> UniPoly {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        match a.coeffs.last() {
            None => a,
            Some(lead) => {
                let inv = lead.recip();
                a.scale(&inv)
            }
        }
    }

    /// Integer polynomial with the same roots: clears denominators and
    /// removes integer content; leading coefficient positive.
    pub fn primitive_integer(&self) -> Vec<BigInt> {
        if self.is_zero() {
            return Vec::new();
        }
        let mut den = BigInt::one();
        for c in &self.coeffs {
            den = den.lcm(c.denom());
        }
        let mut ints: Vec<BigInt> = self.coeffs.iter().map(|c| c.numer() * (&den / c.denom())).collect();
        let mut content = BigInt::zero();
        for x in &ints {
            content = content.gcd(x);
        }
        for x in ints.iter_mut() {
            *x = &*x / &content;
        }
        if ints.last().unwrap().is_negative() {
            for x in ints.iter_mut() {
                *x = -&*x;
            }
        }
        ints
    }

    /// All rational roots, found by the divisor test on the primitive
    /// integer form. Exact; no multiplicities.
    pub fn rational_roots(&self) -> Result<Vec<Rat>> {
        if self.is_zero() {
            return Err(Error::EmptyInput("rational roots of the zero polynomial".into()));
        }
        let mut ints = self.primitive_integer();
        let mut roots = Vec::new();
        // factor out powers of x
        let val = ints.iter().take_while(|c| c.is_zero()).count();
        if val > 0 {
            roots.push(Rat::zero());
            ints.drain(..val);
        }
        if ints.len() <= 1 {
            roots.sort();
            return Ok(roots);
        }
        let a0 = ints.first().unwrap().clone();
        let an = ints.last().unwrap().clone();
        let poly = UniPoly::from_coeffs(ints.iter().map(|c| Rat::from_integer(c.clone())).collect());
        for p in divisors(&a0)? {
            for s in divisors(&an)? {
                for sign in [1i64, -1] {
                    let cand = Rat::new(&p * BigInt::from(sign), s.clone());
                    if poly.eval(&cand).is_zero() && !roots.contains(&cand) {
                        roots.push(cand);
                    }
                }
            }
        }
        roots.sort();
        Ok(roots)
    }

    /// Newton interpolation through all points; exact coefficients.
    ///
    /// Returns the unique minimal-degree polynomial through the points.
    /// Duplicate abscissas are rejected.
    pub fn interpolate(points: &[(Rat, Rat)]) -> Result<UniPoly> {
        if points.is_empty() {
            return Err(Error::EmptyInput("no interpolation points".into()));
        }
        for (i, (qi, _)) in points.iter().enumerate() {
            for (qj, _) in points.iter().skip(i + 1) {
                if qi == qj {
                    return Err(Error::InconsistentPoints(format!(
                        "duplicate abscissa {}",
                        rat_to_str(qi)
                    )));
                }
            }
        }
        // divided differences
        let n = points.len();
        let mut table: Vec<Rat> = points.iter().map(|(_, v)| v.clone()).collect();
        let mut newton_coeffs = vec![table[0].clone()];
        for level in 1..n {
            for i in (level..n).rev() {
                let num = &table[i] - &table[i - 1];
                let den = &points[i].0 - &points[i - level].0;
                table[i] = num / den;
            }
            newton_coeffs.push(table[level].clone());
        }
        // expand the Newton form
        let mut result = UniPoly::zero();
        let mut basis = UniPoly::from_coeffs(vec![Rat::one()]);
        for (k, c) in newton_coeffs.iter().enumerate() {
            result = result.add(&basis.scale(c));
            if k + 1 < n {
                let linear = UniPoly::from_coeffs(vec![-&points[k].0, Rat::one()]);
                basis = basis.mul(&linear);
            }
        }
        Ok(result)
    }

    /// Coefficients as decimal strings, low degree first.
    pub fn to_strings(&self) -> Vec<String> {
        self.coeffs.iter().map(rat_to_str).collect()
    }

    pub fn from_strings(strs: &[String]) -> Result<UniPoly> {
        let coeffs = strs
            .iter()
            .map(|s| super::field::rat_from_str(s))
            .collect::<Result<Vec<_>>>()?;
        Ok(UniPoly::from_coeffs(coeffs))
    }
}

/// Positive divisors of a nonzero integer via trial division.
///
/// Large prime cofactors are handled when they fit in a u64; beyond that the
/// input is outside this crate's intended range and an error is returned.
fn divisors(v: &BigInt) -> Result<Vec<BigInt>> {
    let mut n = v.abs();
    if n.is_zero() {
        return Err(Error::EmptyInput("divisors of zero".into()));
    }
    let mut primes: Vec<(BigInt, u32)> = Vec::new();
    let mut push = |p: BigInt, primes: &mut Vec<(BigInt, u32)>| {
        if let Some(last) = primes.last_mut() {
            if last.0 == p {
                last.1 += 1;
                return;
            }
        }
        primes.push((p, 1));
    };
    let mut d = 2u64;
    while d < 1_000_000 {
        let bd = BigInt::from(d);
        if (&bd * &bd) > n {
            break;
        }
        while (&n % &bd).is_zero() {
            n = &n / &bd;
            push(bd.clone(), &mut primes);
        }
        d += 1;
    }
    if !n.is_one() {
        if let Ok(small) = u64::try_from(&n) {
            if super::field::is_prime_u64(small) {
                push(n.clone(), &mut primes);
            } else {
                // composite cofactor with two factors above 10^6
                let mut f = 1_000_000u64;
                let mut rem = small;
                while f * f <= rem {
                    if rem % f == 0 {
                        push(BigInt::from(f), &mut primes);
                        rem /= f;
                    } else {
                        f += 1;
                    }
                }
                push(BigInt::from(rem), &mut primes);
            }
        } else {
            return Err(Error::Reconstruction(format!(
                "cannot enumerate divisors of {v}: cofactor too large"
            )));
        }
    }
    let mut divs = vec![BigInt::one()];
    for (p, e) in primes {
        let mut next = Vec::with_capacity(divs.len() * (e as usize + 1));
        for d0 in &divs {
            let mut pk = BigInt::one();
            for _ in 0..=e {
                next.push(d0 * &pk);
                pk = &pk * &p;
            }
        }
        divs = next;
    }
    divs.sort();
    divs.dedup();
    Ok(divs)
}

/// Common rational roots of a family of polynomials, together with the gcd
/// they were read from.
#[derive(Clone, Debug)]
pub struct CommonRoots {
    pub roots: Vec<Rat>,
    pub gcd: UniPoly,
}

/// Rational roots shared by all input polynomials: the roots of their gcd.
///
/// Zero polynomials impose no constraint and are skipped; an empty or
/// all-zero input list is an error.
pub fn common_roots(polys: &[UniPoly]) -> Result<CommonRoots> {
    let nonzero: Vec<&UniPoly> = polys.iter().filter(|p| !p.is_zero()).collect();
    if nonzero.is_empty() {
        return Err(Error::EmptyInput("common roots of an all-zero list".into()));
    }
    let mut g = nonzero[0].clone();
    for p in &nonzero[1..] {
        g = g.gcd(p);
    }
    let roots = if g.degree() == Some(0) { Vec::new() } else { g.rational_roots()? };
    Ok(CommonRoots { roots, gcd: g })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::field::{rat, rat_int};

    fn ipoints(pts: &[(i64, i64)]) -> Vec<(Rat, Rat)> {
        pts.iter().map(|&(q, v)| (rat_int(q), rat_int(v))).collect()
    }

    #[test]
    fn interpolate_square_and_constant() {
        let p = UniPoly::interpolate(&ipoints(&[(0, 0), (1, 1), (2, 4)])).unwrap();
        assert_eq!(p, UniPoly::from_i64_coeffs(&[0, 0, 1]));
        let c = UniPoly::interpolate(&ipoints(&[(0, 7), (1, 7)])).unwrap();
        assert_eq!(c, UniPoly::from_i64_coeffs(&[7]));
    }

    #[test]
    fn interpolate_recovers_the_degree_three_family_polynomial() {
        // -730140480 (q + 1) q^2 = -730140480 q^2 - 730140480 q^3
        let target = UniPoly::from_i64_coeffs(&[0, 0, -730140480, -730140480]);
        let pts: Vec<(Rat, Rat)> =
            (-10..=10).map(|q| (rat_int(q), target.eval(&rat_int(q)))).collect();
        assert_eq!(pts.len(), 21);
        let rec = UniPoly::interpolate(&pts).unwrap();
        assert_eq!(rec, target);
    }

    #[test]
    fn interpolate_rejects_duplicate_abscissas() {
        let err = UniPoly::interpolate(&ipoints(&[(1, 2), (1, 3)]));
        assert!(matches!(err, Err(Error::InconsistentPoints(_))));
    }

    #[test]
    fn rational_roots_by_divisor_test() {
        // q^2 (q + 1)
        let p = UniPoly::from_i64_coeffs(&[0, 0, 1, 1]);
        assert_eq!(p.rational_roots().unwrap(), vec![rat_int(-1), rat_int(0)]);
        // (3q + 2) q
        let p = UniPoly::from_i64_coeffs(&[0, 2, 3]);
        assert_eq!(p.rational_roots().unwrap(), vec![rat(-2, 3), rat_int(0)]);
        // (2q - 3)(q + 5)
        let p = UniPoly::from_i64_coeffs(&[-15, 7, 2]);
        assert_eq!(p.rational_roots().unwrap(), vec![rat_int(-5), rat(3, 2)]);
        // no rational roots
        let p = UniPoly::from_i64_coeffs(&[1, 0, 1]);
        assert!(p.rational_roots().unwrap().is_empty());
    }

    #[test]
    fn common_roots_examples() {
        let a = UniPoly::from_i64_coeffs(&[0, 2, 3]); // q (3q + 2)
        let b = UniPoly::from_i64_coeffs(&[0, 0, 1, 1]); // q^2 (q + 1)
        let cr = common_roots(&[a.clone(), b]).unwrap();
        assert_eq!(cr.roots, vec![rat_int(0)]);

        let q = UniPoly::from_i64_coeffs(&[0, 1]);
        let cr = common_roots(&[q.clone(), q.clone()]).unwrap();
        assert_eq!(cr.roots, vec![rat_int(0)]);

        let qm1 = UniPoly::from_i64_coeffs(&[-1, 1]);
        let qp1 = UniPoly::from_i64_coeffs(&[1, 1]);
        let cr = common_roots(&[qm1, qp1]).unwrap();
        assert!(cr.roots.is_empty());
        assert_eq!(cr.gcd.degree(), Some(0));

        assert!(common_roots(&[]).is_err());
        assert!(common_roots(&[UniPoly::zero()]).is_err());
        // zero polynomials impose no constraint
        let cr = common_roots(&[UniPoly::zero(), a]).unwrap();
        assert_eq!(cr.roots, vec![rat(-2, 3), rat_int(0)]);
    }

    #[test]
    fn gcd_is_monic_and_divides() {
        let a = UniPoly::from_i64_coeffs(&[0, 0, 2, 2]); // 2q^2(q+1)
        let b = UniPoly::from_i64_coeffs(&[0, 6, 6]); // 6q(q+1)
        let g = a.gcd(&b);
        // q(q+1) = q + q^2
        assert_eq!(g, UniPoly::from_i64_coeffs(&[0, 1, 1]));
    }
}
