//! Exact integers and rationals, perfect squares and square classes in
//! `Q^× / (Q^×)^2`.
//!
//! Square-class questions are answered with integer square roots of reduced
//! numerators and denominators only; nothing here factors integers.

use num_bigint::{BigInt, BigUint, Sign};
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub use num_rational::BigRational;

/// `(floor(sqrt(n)), exact)` for `n >= 0`.
pub fn integer_sqrt(n: &BigInt) -> Result<(BigInt, bool)> {
    if n.is_negative() {
        return Err(Error::NegativeSqrt);
    }
    let root = n.sqrt();
    let exact = &root * &root == *n;
    Ok((root, exact))
}

/// Whether `a = b^2` for some rational `b`.
pub fn is_square(a: &BigRational) -> bool {
    if a.is_negative() {
        return false;
    }
    // Ratio keeps numerator and denominator coprime with denominator > 0.
    let (_, num_exact) = integer_sqrt(a.numer()).expect("non-negative");
    num_exact && integer_sqrt(a.denom()).expect("positive").1
}

/// Whether `a ≡ b` in `Q^× / (Q^×)^2`, i.e. `a·b` is a rational square.
pub fn square_class_equal(a: &BigRational, b: &BigRational) -> Result<bool> {
    if a.is_zero() || b.is_zero() {
        return Err(Error::ZeroSquareClass);
    }
    Ok(is_square(&(a * b)))
}

/// Expands a factored integer `∏ p^e`.
pub fn factored_constant(factors: &[(u64, u32)]) -> BigInt {
    factors.iter().fold(BigInt::one(), |acc, &(p, e)| {
        acc * num_traits::pow(BigInt::from(p), e as usize)
    })
}

pub fn big(n: i64) -> BigInt {
    BigInt::from(n)
}

pub fn pow(base: i64, e: u32) -> BigInt {
    num_traits::pow(BigInt::from(base), e as usize)
}

pub fn rat(n: BigInt, d: BigInt) -> BigRational {
    BigRational::new(n, d)
}

pub fn rat_int(n: BigInt) -> BigRational {
    BigRational::from_integer(n)
}

/// Parses a decimal integer with optional sign.
pub fn parse_int(s: &str) -> Result<BigInt> {
    let t = s.trim();
    t.parse::<BigInt>()
        .map_err(|_| Error::Parse(format!("not a decimal integer: {t:?}")))
}

/// Parses `"num/den"` or a bare integer.
pub fn parse_rational(s: &str) -> Result<BigRational> {
    match s.split_once('/') {
        None => Ok(rat_int(parse_int(s)?)),
        Some((n, d)) => {
            let d = parse_int(d)?;
            if d.is_zero() {
                return Err(Error::Parse(format!("zero denominator in {s:?}")));
            }
            Ok(BigRational::new(parse_int(n)?, d))
        }
    }
}

/// `"num/den"` in lowest terms, or just `"num"` when the denominator is 1.
pub fn format_rational(r: &BigRational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Residue of an integer mod a word-sized `p`.
pub fn mod_u64(n: &BigInt, p: u64) -> u64 {
    let r = (n % BigInt::from(p)) + BigInt::from(p);
    let r: BigUint = (r % BigInt::from(p)).to_biguint().expect("non-negative");
    r.iter_u64_digits().next().unwrap_or(0)
}

/// Residue of a rational mod `p`, or `None` if `p` divides the denominator.
pub fn rational_mod_u64(r: &BigRational, p: u64) -> Option<u64> {
    let d = mod_u64(r.denom(), p);
    if d == 0 {
        return None;
    }
    let n = mod_u64(r.numer(), p);
    Some(crate::modp::mul_mod(n, crate::modp::inv_mod(d, p), p))
}

pub fn sign_of(n: &BigInt) -> i8 {
    match n.sign() {
        Sign::Minus => -1,
        Sign::NoSign => 0,
        Sign::Plus => 1,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: i64, d: i64) -> BigRational {
        BigRational::new(big(n), big(d))
    }

    #[test]
    fn integer_sqrt_examples() {
        assert_eq!(integer_sqrt(&big(0)).unwrap(), (big(0), true));
        let (root, exact) = integer_sqrt(&pow(24, 24)).unwrap();
        assert!(exact);
        assert_eq!(root, pow(2, 36) * pow(3, 12));
        let n = pow(23, 23);
        let (root, exact) = integer_sqrt(&n).unwrap();
        assert!(!exact);
        assert!(&root * &root <= n && (&root + 1) * (&root + 1) > n);
        assert_eq!(integer_sqrt(&big(-4)), Err(Error::NegativeSqrt));
    }

    #[test]
    fn is_square_examples() {
        assert!(is_square(&r(4, 9)));
        assert!(!is_square(&r(-1, 1)));
        assert!(!is_square(&r(2, 1)));
        assert!(is_square(&r(0, 1)));
        let a = BigRational::new(pow(2, 1728) * pow(3, 576), pow(23, 552));
        assert!(is_square(&a));
    }

    #[test]
    fn square_class_examples() {
        assert!(square_class_equal(&r(8, 1), &r(2, 1)).unwrap());
        assert!(square_class_equal(&r(-3, 5), &r(-3, 5)).unwrap());
        assert!(!square_class_equal(&r(-1, 1), &r(1, 1)).unwrap());
        let c = parse_int("1437417619559484462138047").unwrap();
        assert!(!square_class_equal(&rat_int(&c * 7), &rat_int(c)).unwrap());
        assert_eq!(
            square_class_equal(&r(0, 1), &r(1, 1)),
            Err(Error::ZeroSquareClass)
        );
    }

    #[test]
    fn factored_constants() {
        assert_eq!(factored_constant(&[]), big(1));
        assert_eq!(factored_constant(&[(2, 5)]), big(32));
        let q = factored_constant(&[(31, 1), (281, 1), (1201, 1), (70529, 1), (9801219477271, 1)]);
        // Oracle: direct multiplication against the digits of 23·7c + 1.
        let lhs = parse_int("231424236749076998404225567").unwrap() + 1;
        assert_eq!(lhs, q * 32);
    }

    #[test]
    fn rational_text_round_trip() {
        for s in [
            "0",
            "-7",
            "3/4",
            "-10/3",
            "123456789012345678901234567891/2",
        ] {
            assert_eq!(format_rational(&parse_rational(s).unwrap()), s);
        }
        assert_eq!(format_rational(&parse_rational("6/4").unwrap()), "3/2");
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("x").is_err());
    }

    #[test]
    fn residues() {
        assert_eq!(mod_u64(&big(-1), 7), 6);
        assert_eq!(rational_mod_u64(&r(1, 2), 7), Some(4));
        assert_eq!(rational_mod_u64(&r(1, 7), 7), None);
    }
}
