//! Dense univariate polynomials over `Q`, with exact resultants and
//! discriminants.
//!
//! Resultant convention: `Res(f, g) = lc(f)^deg(g) · ∏ g(α)` over the roots
//! `α` of `f`, which is the determinant of the Sylvester matrix. With it,
//! `Res(X - a, X - b) = a - b` and
//! `disc(f) = (-1)^(n(n-1)/2) · Res(f, f') / lc(f)`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::arith::{self, BigRational};
use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct PolyQ {
    /// Ascending; no trailing zeros (the zero polynomial is empty).
    coeffs: Vec<BigRational>,
}

impl PolyQ {
    pub fn new(mut coeffs: Vec<BigRational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        PolyQ { coeffs }
    }

    pub fn zero() -> Self {
        PolyQ { coeffs: Vec::new() }
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::new(
            coeffs
                .iter()
                .map(|&c| arith::rat_int(BigInt::from(c)))
                .collect(),
        )
    }

    pub fn from_bigints(coeffs: &[BigInt]) -> Self {
        Self::new(coeffs.iter().cloned().map(arith::rat_int).collect())
    }

    pub fn constant(c: BigRational) -> Self {
        Self::new(vec![c])
    }

    /// `c·X^k`.
    pub fn monomial(c: BigRational, k: usize) -> Self {
        let mut coeffs = vec![BigRational::zero(); k + 1];
        coeffs[k] = c;
        Self::new(coeffs)
    }

    /// `X^n - u·(X + 1)`, the trinomial family of the symmetric-group realizations.
    pub fn trinomial(n: usize, u: &BigRational) -> Self {
        let mut coeffs = vec![BigRational::zero(); n + 1];
        coeffs[n] = BigRational::one();
        coeffs[1] -= u;
        coeffs[0] -= u;
        Self::new(coeffs)
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> BigRational {
        self.coeffs
            .get(k)
            .cloned()
            .unwrap_or_else(BigRational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&BigRational> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        self.leading().is_some_and(One::is_one)
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c * BigRational::from_integer(BigInt::from(k)))
                .collect(),
        )
    }

    /// Horner evaluation.
    pub fn eval(&self, x: &BigRational) -> BigRational {
        self.coeffs
            .iter()
            .rev()
            .fold(BigRational::zero(), |acc, c| acc * x + c)
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        Self::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    /// Writes `self = integer_part / denominator` with `integer_part` in
    /// `Z[X]`; returns `(integer_part, denominator)` with the least positive
    /// common denominator.
    pub fn clear_denominators(&self) -> (Vec<BigInt>, BigInt) {
        let den = self
            .coeffs
            .iter()
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let ints = self
            .coeffs
            .iter()
            .map(|c| c.numer() * (&den / c.denom()))
            .collect();
        (ints, den)
    }

    /// Polynomial file representation.
    pub fn to_file(&self) -> PolyFile {
        let coefficients = if self.is_zero() {
            vec!["0/1".to_string()]
        } else {
            self.coeffs
                .iter()
                .map(|c| format!("{}/{}", c.numer(), c.denom()))
                .collect()
        };
        PolyFile {
            degree: self.degree().unwrap_or(0),
            coefficients,
        }
    }

    pub fn from_file(file: &PolyFile) -> Result<Self> {
        if file.coefficients.len() != file.degree + 1 {
            return Err(Error::Parse(format!(
                "degree {} needs {} coefficients, got {}",
                file.degree,
                file.degree + 1,
                file.coefficients.len()
            )));
        }
        let coeffs = file
            .coefficients
            .iter()
            .map(|s| parse_coefficient(s))
            .collect::<Result<Vec<_>>>()?;
        let p = PolyQ::new(coeffs);
        if p.degree().unwrap_or(0) != file.degree {
            return Err(Error::Parse("leading coefficient is zero".into()));
        }
        Ok(p)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&self.to_file()).expect("plain data")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let file: PolyFile = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
        Self::from_file(&file)
    }
}

/// `{"degree": n, "coefficients": ["num/den", ...]}`, ascending.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolyFile {
    pub degree: usize,
    pub coefficients: Vec<String>,
}

/// Parses a coefficient written either expanded (`"-12/5"`, `"7"`) or in
/// factored form (`"-2^67*3^24/(23^23*31)"`, `·` also accepted as product).
pub fn parse_coefficient(text: &str) -> Result<BigRational> {
    let t: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    let (neg, body) = match t.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, t.strip_prefix('+').unwrap_or(&t)),
    };
    let (num, den) = match body.split_once('/') {
        Some((n, d)) => (n, Some(d)),
        None => (body, None),
    };
    let num = parse_product(num)?;
    let den = match den {
        Some(d) => parse_product(d)?,
        None => BigInt::one(),
    };
    if den.is_zero() {
        return Err(Error::Parse(format!("zero denominator in {text:?}")));
    }
    let r = BigRational::new(num, den);
    Ok(if neg { -r } else { r })
}

fn parse_product(text: &str) -> Result<BigInt> {
    let inner = text
        .strip_prefix('(')
        .and_then(|s| s.strip_suffix(')'))
        .unwrap_or(text);
    if inner.is_empty() {
        return Err(Error::Parse("empty coefficient".into()));
    }
    let mut acc = BigInt::one();
    for factor in inner.split(['*', '·']) {
        let value = match factor.split_once('^') {
            Some((b, e)) => {
                let e: u32 = e
                    .parse()
                    .map_err(|_| Error::Parse(format!("bad exponent in {factor:?}")))?;
                num_traits::pow(arith::parse_int(b)?, e as usize)
            }
            None => arith::parse_int(factor)?,
        };
        acc *= value;
    }
    Ok(acc)
}

impl fmt::Debug for PolyQ {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for PolyQ {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let sign = if c.is_negative() { "-" } else { "+" };
            if first {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            let a = c.abs();
            let show_coeff = !a.is_one() || k == 0;
            if show_coeff {
                if a.denom().is_one() {
                    write!(f, "{}", a.numer())?;
                } else {
                    write!(f, "({}/{})", a.numer(), a.denom())?;
                }
            }
            match k {
                0 => {}
                1 => f.write_str(if show_coeff { "*X" } else { "X" })?,
                _ => write!(f, "{}X^{k}", if show_coeff { "*" } else { "" })?,
            }
        }
        Ok(())
    }
}

impl Add for &PolyQ {
    type Output = PolyQ;
    fn add(self, rhs: &PolyQ) -> PolyQ {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        PolyQ::new((0..n).map(|k| self.coeff(k) + rhs.coeff(k)).collect())
    }
}

impl Sub for &PolyQ {
    type Output = PolyQ;
    fn sub(self, rhs: &PolyQ) -> PolyQ {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        PolyQ::new((0..n).map(|k| self.coeff(k) - rhs.coeff(k)).collect())
    }
}

impl Neg for &PolyQ {
    type Output = PolyQ;
    fn neg(self) -> PolyQ {
        PolyQ::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

impl Mul for &PolyQ {
    type Output = PolyQ;
    fn mul(self, rhs: &PolyQ) -> PolyQ {
        if self.is_zero() || rhs.is_zero() {
            return PolyQ::zero();
        }
        let mut out = vec![BigRational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        PolyQ::new(out)
    }
}

/// Exact resultant of two nonzero polynomials.
pub fn resultant(f: &PolyQ, g: &PolyQ) -> Result<BigRational> {
    if f.is_zero() || g.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let (fi, fd) = f.clear_denominators();
    let (gi, gd) = g.clear_denominators();
    let m = f.degree().unwrap();
    let n = g.degree().unwrap();
    // Res(F/a, G/b) = a^-deg(g) · b^-deg(f) · Res(F, G)
    let res = subresultant_resultant(&fi, &gi);
    let scale = num_traits::pow(fd, n) * num_traits::pow(gd, m);
    Ok(BigRational::new(res, scale))
}

/// `disc(f) = (-1)^(n(n-1)/2) · Res(f, f') / lc(f)`.
pub fn discriminant(f: &PolyQ) -> Result<BigRational> {
    let n = match f.degree() {
        None => return Err(Error::ZeroPolynomial),
        Some(0) => return Err(Error::ConstantPolynomial),
        Some(n) => n,
    };
    let res = resultant(f, &f.derivative())?;
    let signed = if (n * (n - 1) / 2) % 2 == 1 {
        -res
    } else {
        res
    };
    Ok(signed / f.leading().unwrap())
}

/// Closed form `disc(X^24 - u(X+1)) = -(23^23·u + 24^24)·u^23`.
pub fn trinomial_disc(u: &BigRational) -> Result<BigRational> {
    trinomial_disc_n(24, u)
}

/// `disc(X^n - u(X+1))` for any `n ≥ 2`, from the standard trinomial formula
/// `disc(X^n + aX + b) = (-1)^(n(n-1)/2) (n^n b^(n-1) + (-1)^(n-1) (n-1)^(n-1) a^n)`.
pub fn trinomial_disc_n(n: usize, u: &BigRational) -> Result<BigRational> {
    if u.is_zero() {
        return Err(Error::Degenerate("u = 0 gives X^n, which is not separable"));
    }
    if n < 2 {
        return Err(Error::Degenerate("trinomial degree must be at least 2"));
    }
    let a = -u.clone();
    let nn = BigRational::from_integer(num_traits::pow(BigInt::from(n), n));
    let mm = BigRational::from_integer(num_traits::pow(BigInt::from(n - 1), n - 1));
    let first = nn * num_traits::pow(a.clone(), n - 1);
    let second = mm * num_traits::pow(a, n);
    let inner = if (n - 1).is_multiple_of(2) {
        first + second
    } else {
        first - second
    };
    Ok(if (n * (n - 1) / 2) % 2 == 1 {
        -inner
    } else {
        inner
    })
}

fn trim(p: &mut Vec<BigInt>) {
    while p.last().is_some_and(Zero::is_zero) {
        p.pop();
    }
}

fn content(p: &[BigInt]) -> BigInt {
    p.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c))
}

/// `lc(b)^(deg a - deg b + 1) · a  mod  b`.
fn pseudo_remainder(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let db = b.len() - 1;
    let lb = &b[db];
    let delta = a.len() - b.len();
    let mut r: Vec<BigInt> = a.to_vec();
    let mut steps = 0usize;
    while r.len() >= b.len() {
        let dr = r.len() - 1;
        let lr = r[dr].clone();
        let shift = dr - db;
        for c in r.iter_mut() {
            *c *= lb;
        }
        for (k, bk) in b.iter().enumerate() {
            r[k + shift] -= &lr * bk;
        }
        trim(&mut r);
        steps += 1;
    }
    let extra = delta + 1 - steps;
    if extra > 0 {
        let m = num_traits::pow(lb.clone(), extra);
        for c in r.iter_mut() {
            *c *= &m;
        }
    }
    r
}

/// Resultant in `Z[X]` by the subresultant algorithm (Collins–Brown), with
/// contents split off first. Inputs must be nonzero and trimmed.
fn subresultant_resultant(a: &[BigInt], b: &[BigInt]) -> BigInt {
    let mut a: Vec<BigInt> = a.to_vec();
    let mut b: Vec<BigInt> = b.to_vec();
    trim(&mut a);
    trim(&mut b);
    let mut s = BigInt::one();
    if a.len() < b.len() {
        std::mem::swap(&mut a, &mut b);
        let (da, db) = (a.len() - 1, b.len() - 1);
        if da % 2 == 1 && db % 2 == 1 {
            s = -s;
        }
    }
    let (da, db) = (a.len() - 1, b.len() - 1);
    if db == 0 {
        return num_traits::pow(b[0].clone(), da);
    }
    let ca = content(&a);
    let cb = content(&b);
    for c in a.iter_mut() {
        *c /= &ca;
    }
    for c in b.iter_mut() {
        *c /= &cb;
    }
    let t = num_traits::pow(ca, db) * num_traits::pow(cb, da);
    let mut g = BigInt::one();
    let mut h = BigInt::one();
    loop {
        let (da, db) = (a.len() - 1, b.len() - 1);
        let delta = da - db;
        if da % 2 == 1 && db % 2 == 1 {
            s = -s;
        }
        let r = pseudo_remainder(&a, &b);
        if r.is_empty() {
            return BigInt::zero();
        }
        let divisor = &g * num_traits::pow(h.clone(), delta);
        a = b;
        b = r.into_iter().map(|c| c / &divisor).collect();
        g = a.last().unwrap().clone();
        // h <- g^delta / h^(delta - 1)
        h = if delta == 0 {
            h
        } else {
            num_traits::pow(g.clone(), delta) / num_traits::pow(h.clone(), delta - 1)
        };
        if b.len() == 1 {
            let da = a.len() - 1;
            let lb = b[0].clone();
            // deg a >= 1 here: it was the previous non-constant b.
            let hh = num_traits::pow(lb, da) / num_traits::pow(h, da - 1);
            return s * t * hh;
        }
    }
}
