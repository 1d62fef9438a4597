//! Polynomials over prime fields `F_p` with word-sized `p`, and the
//! distinct-degree factorization that reads off Frobenius cycle types.

use num_bigint::BigUint;

use crate::arith;
use crate::error::{Error, Result};
use crate::perm::CycleType;
use crate::poly::PolyQ;

#[inline]
pub fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

#[inline]
fn add_mod(a: u64, b: u64, p: u64) -> u64 {
    let s = a as u128 + b as u128;
    (s % p as u128) as u64
}

#[inline]
fn sub_mod(a: u64, b: u64, p: u64) -> u64 {
    if a >= b {
        a - b
    } else {
        p - (b - a)
    }
}

pub fn pow_mod(mut base: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1 % p;
    base %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = mul_mod(acc, base, p);
        }
        base = mul_mod(base, base, p);
        e >>= 1;
    }
    acc
}

/// Inverse of a nonzero residue modulo a prime.
pub fn inv_mod(a: u64, p: u64) -> u64 {
    debug_assert!(!a.is_multiple_of(p));
    pow_mod(a, p - 2, p)
}

/// Legendre symbol `(a/p)` for an odd prime `p`: 0, 1 or -1.
pub fn legendre(a: u64, p: u64) -> i8 {
    let a = a % p;
    if a == 0 {
        return 0;
    }
    if pow_mod(a, (p - 1) / 2, p) == 1 {
        1
    } else {
        -1
    }
}

/// Deterministic Miller–Rabin for all of `u64`.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    const SMALL: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
    for &q in &SMALL {
        if n.is_multiple_of(q) {
            return n == q;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d.is_multiple_of(2) {
        d /= 2;
        s += 1;
    }
    'witness: for &a in &SMALL {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// Consecutive primes 2, 3, 5, ...
#[derive(Clone, Debug, Default)]
pub struct Primes {
    last: u64,
}

impl Primes {
    pub fn new() -> Self {
        Primes { last: 1 }
    }
}

impl Iterator for Primes {
    type Item = u64;

    fn next(&mut self) -> Option<u64> {
        let mut n = self.last + 1;
        while !is_prime(n) {
            n += 1;
        }
        self.last = n;
        Some(n)
    }
}

/// Polynomial over `F_p`, ascending residues with no trailing zeros.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct PolyFp {
    p: u64,
    coeffs: Vec<u64>,
}

impl PolyFp {
    pub fn new(p: u64, coeffs: Vec<u64>) -> Self {
        let mut coeffs: Vec<u64> = coeffs.into_iter().map(|c| c % p).collect();
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        PolyFp { p, coeffs }
    }

    pub fn from_signed(p: u64, coeffs: &[i64]) -> Self {
        let pi = p as i128;
        Self::new(
            p,
            coeffs
                .iter()
                .map(|&c| (((c as i128) % pi + pi) % pi) as u64)
                .collect(),
        )
    }

    pub fn x(p: u64) -> Self {
        Self::new(p, vec![0, 1])
    }

    pub fn one(p: u64) -> Self {
        Self::new(p, vec![1])
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    fn deg(&self) -> isize {
        self.coeffs.len() as isize - 1
    }

    pub fn monic(&self) -> Self {
        match self.coeffs.last() {
            None => self.clone(),
            Some(&lc) => {
                let inv = inv_mod(lc, self.p);
                PolyFp {
                    p: self.p,
                    coeffs: self
                        .coeffs
                        .iter()
                        .map(|&c| mul_mod(c, inv, self.p))
                        .collect(),
                }
            }
        }
    }

    pub fn derivative(&self) -> Self {
        let p = self.p;
        Self::new(
            p,
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, &c)| mul_mod(c, k as u64 % p, p))
                .collect(),
        )
    }

    pub fn sub(&self, other: &PolyFp) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let p = self.p;
        Self::new(
            p,
            (0..n)
                .map(|k| {
                    sub_mod(
                        *self.coeffs.get(k).unwrap_or(&0),
                        *other.coeffs.get(k).unwrap_or(&0),
                        p,
                    )
                })
                .collect(),
        )
    }

    pub fn mul(&self, other: &PolyFp) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::new(self.p, Vec::new());
        }
        let p = self.p;
        let mut out = vec![0u64; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                out[i + j] = add_mod(out[i + j], mul_mod(a, b, p), p);
            }
        }
        Self::new(p, out)
    }

    /// Quotient and remainder; `divisor` must be nonzero.
    pub fn div_rem(&self, divisor: &PolyFp) -> (PolyFp, PolyFp) {
        assert!(!divisor.is_zero(), "division by zero polynomial");
        let p = self.p;
        let db = divisor.coeffs.len() - 1;
        let inv = inv_mod(divisor.coeffs[db], p);
        let mut r = self.coeffs.clone();
        if r.len() <= db {
            return (Self::new(p, Vec::new()), self.clone());
        }
        let mut q = vec![0u64; r.len() - db];
        for k in (db..r.len()).rev() {
            let c = mul_mod(r[k], inv, p);
            if c == 0 {
                continue;
            }
            q[k - db] = c;
            for (j, &dj) in divisor.coeffs.iter().enumerate() {
                let idx = k - db + j;
                r[idx] = sub_mod(r[idx], mul_mod(c, dj, p), p);
            }
        }
        r.truncate(db);
        (Self::new(p, q), Self::new(p, r))
    }

    pub fn rem(&self, divisor: &PolyFp) -> PolyFp {
        self.div_rem(divisor).1
    }

    /// Monic gcd (zero if both are zero).
    pub fn gcd(&self, other: &PolyFp) -> PolyFp {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    pub fn mul_mod_poly(&self, other: &PolyFp, modulus: &PolyFp) -> PolyFp {
        self.mul(other).rem(modulus)
    }
}

/// `base^e mod modulus` by square-and-multiply.
pub fn powmod(base: &PolyFp, e: &BigUint, modulus: &PolyFp) -> Result<PolyFp> {
    if modulus.degree().unwrap_or(0) < 1 {
        return Err(Error::Degenerate("modulus must have degree at least 1"));
    }
    let p = base.p;
    let mut acc = PolyFp::one(p).rem(modulus);
    let b = base.rem(modulus);
    let bits = e.bits();
    for i in (0..bits).rev() {
        acc = acc.mul_mod_poly(&acc, modulus);
        if e.bit(i) {
            acc = acc.mul_mod_poly(&b, modulus);
        }
    }
    Ok(acc)
}

/// Outcome of reducing a rational polynomial modulo a prime.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Reduction {
    Good(PolyFp),
    /// `p` divides a denominator or the leading numerator.
    BadPrime,
}

pub fn reduce_mod_p(f: &PolyQ, p: u64) -> Result<Reduction> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let mut coeffs = Vec::with_capacity(f.coeffs().len());
    for c in f.coeffs() {
        match arith::rational_mod_u64(c, p) {
            None => return Ok(Reduction::BadPrime),
            Some(r) => coeffs.push(r),
        }
    }
    if *coeffs.last().unwrap() == 0 {
        return Ok(Reduction::BadPrime);
    }
    Ok(Reduction::Good(PolyFp::new(p, coeffs)))
}

/// Degrees of the irreducible factors of a squarefree `f`, or `None` when
/// `f` is not squarefree.
pub fn ddf_cycle_type(f: &PolyFp) -> Result<Option<CycleType>> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let p = f.p;
    let mut f = f.monic();
    if f.degree() == Some(0) {
        return Ok(Some(CycleType::new(Vec::new())));
    }
    if f.gcd(&f.derivative()).degree() != Some(0) {
        return Ok(None);
    }
    let mut parts = Vec::new();
    let x = PolyFp::x(p);
    let pe = BigUint::from(p);
    let mut h = x.rem(&f);
    let mut d = 1;
    while f.deg() >= 2 * d as isize {
        h = powmod(&h, &pe, &f)?;
        let g = h.sub(&x).gcd(&f);
        if let Some(k) = g.degree().filter(|&k| k > 0) {
            for _ in 0..k / d {
                parts.push(d);
            }
            f = f.div_rem(&g).0;
            h = h.rem(&f);
        }
        d += 1;
    }
    if let Some(k) = f.degree().filter(|&k| k > 0) {
        parts.push(k);
    }
    Ok(Some(CycleType::new(parts)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::BigRational;
    use num_bigint::BigInt;

    fn ct(parts: &[usize]) -> CycleType {
        CycleType::new(parts.to_vec())
    }

    #[test]
    fn primality() {
        let small: Vec<u64> = Primes::new().take(10).collect();
        assert_eq!(small, vec![2, 3, 5, 7, 11, 13, 17, 19, 23, 29]);
        assert!(is_prime(9801219477271));
        assert!(!is_prime(1));
        assert!(!is_prime(561));
        assert!(is_prime(18446744073709551557));
    }

    #[test]
    fn reduction_examples() {
        let h = PolyQ::trinomial(24, &BigRational::from_integer(BigInt::from(1)));
        match reduce_mod_p(&h, 5).unwrap() {
            Reduction::Good(r) => {
                let mut expect = [0u64; 25];
                expect[24] = 1;
                expect[1] = 4;
                expect[0] = 4;
                assert_eq!(r.coeffs(), &expect[..]);
            }
            Reduction::BadPrime => panic!("5 is good for X^24 - X - 1"),
        }
        let u = BigRational::new(BigInt::from(1), num_traits::pow(BigInt::from(23), 23));
        let g = PolyQ::trinomial(24, &u);
        assert_eq!(reduce_mod_p(&g, 23).unwrap(), Reduction::BadPrime);
        assert_eq!(reduce_mod_p(&h, 25), Err(Error::NotPrime(25)));
        let non_monic = PolyQ::from_ints(&[1, 0, 7]);
        assert_eq!(reduce_mod_p(&non_monic, 7).unwrap(), Reduction::BadPrime);
    }

    #[test]
    fn ddf_small_examples() {
        let f = PolyFp::new(2, vec![1, 1, 1]);
        assert_eq!(ddf_cycle_type(&f).unwrap(), Some(ct(&[2])));
        let g = PolyFp::new(2, vec![1, 0, 1]);
        assert_eq!(ddf_cycle_type(&g).unwrap(), None);
        assert_eq!(
            ddf_cycle_type(&PolyFp::new(3, vec![])),
            Err(Error::ZeroPolynomial)
        );
        // X^3 - X over F_3 splits into three linear factors.
        let h = PolyFp::from_signed(3, &[0, -1, 0, 1]);
        assert_eq!(ddf_cycle_type(&h).unwrap(), Some(ct(&[1, 1, 1])));
        // X^4 + 1 over F_3 = (X^2 + X + 2)(X^2 + 2X + 2)
        let q = PolyFp::new(3, vec![1, 0, 0, 0, 1]);
        assert_eq!(ddf_cycle_type(&q).unwrap(), Some(ct(&[2, 2])));
    }

    #[test]
    fn powmod_examples() {
        let f = PolyFp::from_signed(5, &{
            let mut c = vec![0i64; 25];
            c[24] = 1;
            c[1] = -1;
            c[0] = -1;
            c
        });
        let x = PolyFp::x(5);
        assert_eq!(powmod(&x, &BigUint::from(1u32), &f).unwrap(), x);
        let m = PolyFp::new(3, vec![1, 0, 1]);
        assert_eq!(
            powmod(&PolyFp::x(3), &BigUint::from(3u32), &m).unwrap(),
            PolyFp::new(3, vec![0, 2])
        );
        // X^(5^2) equals two Frobenius steps.
        let once = powmod(&x, &BigUint::from(5u32), &f).unwrap();
        let twice = powmod(&once, &BigUint::from(5u32), &f).unwrap();
        assert_eq!(powmod(&x, &BigUint::from(25u32), &f).unwrap(), twice);
    }

    #[test]
    fn legendre_symbols() {
        assert_eq!(legendre(2, 7), 1);
        assert_eq!(legendre(3, 7), -1);
        assert_eq!(legendre(14, 7), 0);
    }
}
