//! The polynomials whose Galois groups are the three cube groups, and the
//! exact parameter derivations behind the trinomials.
//!
//! All trinomials are normalized as `X^24 - u(X + 1)`. A polynomial written
//! `X^24 + C(X + 1)` therefore has `u = -C`.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::arith::{self, BigRational};
use crate::error::{Error, Result};
use crate::poly::{parse_coefficient, PolyQ};

pub const C: &str = "1437417619559484462138047";
/// `31 · 281 · 1201 · 70529 · 9801219477271`.
pub const Q_FACTORS: [u64; 5] = [31, 281, 1201, 70529, 9801219477271];
pub const Z: &str = "14464014796817312400264098";
pub const P2: &str = "195574568093355782014153";

/// Coefficients of the corner polynomial, from `X^24` down to the constant.
pub const F_COEFFS_DESC: [i64; 25] = [
    1, 0, -24, 8, 252, -168, -1484, -627, 26628, -97918, 199671, -266679, 234997, -114681, -10107,
    63686, -45384, 6819, 12880, -12096, 5502, -1504, 252, -24, 1,
];

/// `C` in `X^24 + C(X^2 + 1)`.
pub const G_EDGE_COEFF: &str =
    "3852443469645611961262219752967766016/384257037754753807138505851908147025";

/// The `X + 1` coefficients as printed, each with its printed sign.
pub const G_REVENGE_COEFF: &str = "2^67*3^24/(23^23*31*281*1201*70529*9801219477271)";
pub const H1_COEFF: &str = "2^64*3^23/(23^23*31*281*1201*70529*9801219477271)";
pub const H2_COEFF: &str =
    "-2^75*3^14*31*281*1201*70529*9801219477271/(7^2*23^22*195574568093355782014153^2)";
pub const H3_COEFF: &str = "-2^72*3^24*7*1437417619559484462138047/23^22";

fn int(s: &str) -> BigInt {
    arith::parse_int(s).expect("constant is a decimal integer")
}

fn coeff(s: &str) -> BigRational {
    parse_coefficient(s).expect("constant parses")
}

/// The degree-24 polynomial whose group is `(C3 ≀ S8)°`.
pub fn f_corner() -> PolyQ {
    let asc: Vec<i64> = F_COEFFS_DESC.iter().rev().copied().collect();
    PolyQ::from_ints(&asc)
}

/// `X^24 + C(X^2 + 1)`, group `(C2 ≀ S12)°`.
pub fn g_edge() -> PolyQ {
    let c = coeff(G_EDGE_COEFF);
    let mut coeffs = vec![BigRational::zero(); 25];
    coeffs[0] = c.clone();
    coeffs[2] = c;
    coeffs[24] = BigRational::one();
    PolyQ::new(coeffs)
}

/// `G(Y) = Y^12 + C(Y + 1)` with `g_edge(X) = G(X^2)`. Frobenius acts on
/// the 12 root pairs `{±α}` as on the roots of `G`, so the parity of `G mod p`
/// is the sign of the block permutation, the character linked to the corners.
pub fn g_edge_blocks() -> PolyQ {
    PolyQ::trinomial(12, &-coeff(G_EDGE_COEFF))
}

/// `X^24 - u(X + 1)` from a coefficient printed as `+C`.
fn trinomial_from_printed(printed: &BigRational) -> PolyQ {
    PolyQ::trinomial(24, &-printed)
}

/// The Revenge-cube trinomial with its printed coefficient.
pub fn g_revenge() -> PolyQ {
    trinomial_from_printed(&coeff(G_REVENGE_COEFF))
}

/// `X^24 - X - 1`.
pub fn h_revenge() -> PolyQ {
    PolyQ::trinomial(24, &BigRational::one())
}

pub fn h1_literal() -> PolyQ {
    trinomial_from_printed(&coeff(H1_COEFF))
}

pub fn h2() -> PolyQ {
    trinomial_from_printed(&coeff(H2_COEFF))
}

pub fn h3() -> PolyQ {
    trinomial_from_printed(&coeff(H3_COEFF))
}

/// `u` of a polynomial `X^24 - u(X + 1)`.
pub fn trinomial_u(h: &PolyQ) -> Result<BigRational> {
    let u = -h.coeff(0);
    let shape = h.degree() == Some(24)
        && h.is_monic()
        && h.coeff(1) == h.coeff(0)
        && (2..24).all(|k| h.coeff(k).is_zero());
    if shape {
        Ok(u)
    } else {
        Err(Error::Degenerate("not of the form X^24 - u(X + 1)"))
    }
}

/// Exact parameters of the trinomial families.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TheoremParameters {
    pub c: BigInt,
    /// `7c`, the square class shared by the corner and edge discriminants.
    pub target: BigInt,
    pub q_const: BigInt,
    pub z: BigInt,
    pub r: BigInt,
    pub v1: BigRational,
    pub v3: BigRational,
    pub p2: BigInt,
    pub s: BigRational,
    pub t: BigRational,
    /// `u1` from the derivation at `v1`.
    pub u1: BigRational,
    /// `u1` read from the printed `h1`.
    pub u1_literal: BigRational,
    pub w: BigRational,
    pub v2: BigRational,
    pub u2: BigRational,
    pub u3: BigRational,
}

fn r24() -> BigRational {
    BigRational::from_integer(arith::pow(24, 24))
}

/// `t(s) = (24^24 / 23^23) · (-1) / (23 · 7c · s^2 + 1)`.
pub fn t_of(s: &BigRational, target: &BigInt) -> BigRational {
    let denom = BigRational::from_integer(target * 23) * s * s + BigRational::one();
    -(r24() / BigRational::from_integer(arith::pow(23, 23))) / denom
}

/// `u = v · 24^24 / 23^22`.
pub fn u_of_v(v: &BigRational) -> BigRational {
    v * r24() / BigRational::from_integer(arith::pow(23, 22))
}

fn check(ok: bool, what: &str) -> Result<()> {
    if ok {
        Ok(())
    } else {
        Err(Error::IdentityFailed(what.to_string()))
    }
}

/// Derives every parameter and checks the integer and rational identities
/// tying them together; a failure means a transcription error.
pub fn derive_parameters() -> Result<TheoremParameters> {
    let c = int(C);
    let target = &c * 7;
    let q_const = Q_FACTORS.iter().fold(BigInt::one(), |acc, &p| acc * p);
    let z = int(Z);
    let p2 = int(P2);
    let r = BigInt::one();
    let one = BigRational::one();

    check(&target * 23 + 1 == &q_const * 32, "23*7c + 1 = 32*Q")?;
    check(&target * 23 + 1 == &z * 16, "23*7c + 1 = 16*z")?;
    check(
        &z * 23 - &r * &r == arith::factored_constant(&[(3, 5), (7, 1)]) * &p2,
        "23z - r^2 = 3^5*7*p2",
    )?;

    let s = one.clone();
    let t = t_of(&s, &target);
    let v1 = one.clone();
    let u1 = t_of(&v1, &target);
    let u1_literal = -coeff(H1_COEFF);

    let zr = BigRational::from_integer(z.clone());
    let rr = BigRational::from_integer(r.clone());
    let w = BigRational::from_integer(&r * 2)
        / (&zr * BigRational::from_integer(23.into()) - &rr * &rr);
    let v2 = &zr * &w * &w;
    let v3 = BigRational::from_integer(target.clone());
    let u2 = u_of_v(&v2);
    let u3 = u_of_v(&v3);

    let r2 = &rr * &rr;
    let twenty_three = BigRational::from_integer(23.into());
    let ratio = (&twenty_three * &zr + &r2) / (&twenty_three * &zr - &r2);
    check(
        &twenty_three * &v2 + &one == &ratio * &ratio,
        "23*v2 + 1 = ((23z + r^2)/(23z - r^2))^2",
    )?;

    Ok(TheoremParameters {
        c,
        target,
        q_const,
        z,
        r,
        v1,
        v3,
        p2,
        s,
        t,
        u1,
        u1_literal,
        w,
        v2,
        u2,
        u3,
    })
}

impl TheoremParameters {
    /// Every parameter as a decimal string, in a fixed order.
    pub fn as_strings(&self) -> Vec<(&'static str, String)> {
        let f = arith::format_rational;
        vec![
            ("c", self.c.to_string()),
            ("target", self.target.to_string()),
            ("q_const", self.q_const.to_string()),
            ("z", self.z.to_string()),
            ("r", self.r.to_string()),
            ("p2", self.p2.to_string()),
            ("s", f(&self.s)),
            ("t", f(&self.t)),
            ("v1", f(&self.v1)),
            ("u1", f(&self.u1)),
            ("u1_literal", f(&self.u1_literal)),
            ("w", f(&self.w)),
            ("v2", f(&self.v2)),
            ("u2", f(&self.u2)),
            ("v3", f(&self.v3)),
            ("u3", f(&self.u3)),
        ]
    }

    pub fn target_rational(&self) -> BigRational {
        BigRational::from_integer(self.target.clone())
    }

    pub fn h1_derived(&self) -> PolyQ {
        PolyQ::trinomial(24, &self.u1)
    }

    /// `2^67 · 3^24 / (23^23 · Q)` with a minus sign: the expected `t(1)`.
    pub fn expected_t(&self) -> BigRational {
        -BigRational::new(
            arith::pow(2, 67) * arith::pow(3, 24),
            arith::pow(23, 23) * &self.q_const,
        )
    }

    pub fn expected_u2(&self) -> BigRational {
        BigRational::new(
            arith::pow(2, 75) * arith::pow(3, 14) * &self.q_const,
            arith::pow(7, 2) * arith::pow(23, 22) * &self.p2 * &self.p2,
        )
    }

    pub fn expected_u3(&self) -> BigRational {
        BigRational::new(
            arith::pow(2, 72) * arith::pow(3, 24) * &self.target,
            arith::pow(23, 22),
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parameters_derive() {
        let p = derive_parameters().unwrap();
        assert_eq!(p.target.to_string(), "10061923336916391234966329");
        assert_eq!(p.z, &p.q_const * 2);
        assert_eq!(p.t, p.expected_t());
        assert_eq!(p.u2, p.expected_u2());
        assert_eq!(p.u3, p.expected_u3());
        // The printed h1 coefficient is the derived one divided by 24.
        assert_eq!(&p.u1_literal * BigRational::from_integer(24.into()), p.u1);
        assert_eq!(p.u1, p.t);
    }

    #[test]
    fn printed_polynomials() {
        let p = derive_parameters().unwrap();
        assert_eq!(trinomial_u(&g_revenge()).unwrap(), p.t);
        assert_eq!(trinomial_u(&h2()).unwrap(), p.u2);
        assert_eq!(trinomial_u(&h3()).unwrap(), p.u3);
        assert_eq!(trinomial_u(&h_revenge()).unwrap(), BigRational::one());
        assert!(trinomial_u(&f_corner()).is_err());
        let f = f_corner();
        assert_eq!(f.degree(), Some(24));
        assert_eq!(f.coeff(23), BigRational::zero());
        assert_eq!(f.coeff(0), BigRational::one());
        assert_eq!(g_edge().coeff(2), g_edge().coeff(0));
    }
}
