//! Restricted wreath products `(C_n ≀ S_m)°`, fiber products over sign
//! characters, and the order formulas of the three cube groups.

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::group::GroupHandle;
use crate::perm::Permutation;

/// `(x, σ)` with `x ∈ Z_n^m` and `σ ∈ S_m`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct WreathElement {
    n: u8,
    x: Vec<u8>,
    sigma: Permutation,
}

impl WreathElement {
    pub fn new(n: u8, x: Vec<u8>, sigma: Permutation) -> Result<Self> {
        if n < 2 || x.len() != sigma.degree() || x.iter().any(|&v| v >= n) {
            return Err(Error::Inconsistent("twist vector does not fit".into()));
        }
        Ok(WreathElement { n, x, sigma })
    }

    pub fn identity(n: u8, m: usize) -> Self {
        WreathElement {
            n,
            x: vec![0; m],
            sigma: Permutation::identity(m),
        }
    }

    pub fn modulus(&self) -> u8 {
        self.n
    }

    pub fn twists(&self) -> &[u8] {
        &self.x
    }

    pub fn sigma(&self) -> &Permutation {
        &self.sigma
    }

    pub fn twist_sum(&self) -> u8 {
        (self.x.iter().map(|&v| v as u32).sum::<u32>() % self.n as u32) as u8
    }

    /// Membership in the kernel `(C_n ≀ S_m)°` of `(x, σ) ↦ Σ x_i`.
    pub fn in_restricted(&self) -> bool {
        self.twist_sum() == 0
    }

    /// `(x, σ)(x′, σ′) = (x + σ·x′, σσ′)` with `(σ·x′)_i = x′_{σ⁻¹(i)}`.
    pub fn mul(&self, other: &WreathElement) -> Result<WreathElement> {
        if self.n != other.n || self.x.len() != other.x.len() {
            return Err(Error::DegreeMismatch(self.x.len(), other.x.len()));
        }
        let inv = self.sigma.inverse();
        let x = (0..self.x.len())
            .map(|i| (self.x[i] + other.x[inv.image(i + 1) - 1]) % self.n)
            .collect();
        Ok(WreathElement {
            n: self.n,
            x,
            sigma: self.sigma.compose(&other.sigma)?,
        })
    }

    pub fn inverse(&self) -> WreathElement {
        // (x, σ)⁻¹ = (-σ⁻¹·x, σ⁻¹).
        let sigma = self.sigma.inverse();
        let x = (0..self.x.len())
            .map(|i| (self.n - self.x[self.sigma.image(i + 1) - 1]) % self.n)
            .collect();
        WreathElement {
            n: self.n,
            x,
            sigma,
        }
    }

    pub fn is_identity(&self) -> bool {
        self.sigma.is_identity() && self.x.iter().all(|&v| v == 0)
    }

    /// The imprimitive action on `n·m` points: block `i` is
    /// `{i·n + 1, …, i·n + n}`, and `(i, a) ↦ (σ(i), a + x_{σ(i)})`.
    /// This is a faithful homomorphism for the product above.
    pub fn to_permutation(&self) -> Permutation {
        let n = self.n as usize;
        let m = self.x.len();
        let mut images = Vec::with_capacity(n * m);
        for i in 0..m {
            let j = self.sigma.image(i + 1) - 1;
            for a in 0..n {
                images.push((j * n + (a + self.x[j] as usize) % n) as u32);
            }
        }
        Permutation::from_raw(images)
    }

    pub fn order(&self) -> BigUint {
        self.to_permutation().order()
    }
}

fn factorial(m: usize) -> BigUint {
    (1..=m as u64).fold(BigUint::one(), |acc, k| acc * k)
}

/// `|(C_n ≀ S_m)°| = n^(m-1) · m!`.
pub fn restricted_wreath_order(n: u32, m: usize) -> Result<BigUint> {
    if n < 2 || m < 2 {
        return Err(Error::Degenerate(
            "restricted wreath order needs n >= 2 and m >= 2",
        ));
    }
    Ok(num_traits::pow(BigUint::from(n), m - 1) * factorial(m))
}

/// A group by its order and the values of a sign character on a generating
/// set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FactorSpec {
    pub name: String,
    pub order: BigUint,
    pub character_on_generators: Vec<i8>,
}

impl FactorSpec {
    pub fn new(name: &str, order: BigUint, character_on_generators: Vec<i8>) -> Self {
        FactorSpec {
            name: name.to_string(),
            order,
            character_on_generators,
        }
    }

    /// Sign of the block permutation on generators of `(C_n ≀ S_m)°`.
    pub fn restricted_wreath(n: u32, m: usize) -> Result<Self> {
        Ok(FactorSpec::new(
            &format!("(C{n} wr S{m})°"),
            restricted_wreath_order(n, m)?,
            wreath_generators(n as u8, m)
                .iter()
                .map(|g| g.sigma.sign())
                .collect(),
        ))
    }

    pub fn symmetric(m: usize) -> Self {
        // Generators (1 2) and (1 2 … m).
        let long = if m.is_multiple_of(2) { -1 } else { 1 };
        FactorSpec::new(&format!("S{m}"), factorial(m), vec![-1, long])
    }

    pub fn surjective(&self) -> bool {
        self.character_on_generators.contains(&-1)
    }
}

/// `{(a, b) ∈ A × B : φ(a) = ψ(b)}` for sign characters `φ`, `ψ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiberSpec {
    pub left: FactorSpec,
    pub right: FactorSpec,
}

impl FiberSpec {
    pub fn new(left: FactorSpec, right: FactorSpec) -> Self {
        FiberSpec { left, right }
    }

    pub fn order(&self) -> Result<BigUint> {
        fiber_order(
            &self.left.order,
            &self.right.order,
            self.left.surjective() && self.right.surjective(),
        )
    }

    pub fn as_factor(&self, name: &str) -> Result<FactorSpec> {
        // The sign of the fiber product is the common value of both characters.
        Ok(FactorSpec::new(name, self.order()?, vec![-1]))
    }
}

/// `|A ×_sign B| = |A|·|B| / 2` when both characters are onto `{±1}`.
pub fn fiber_order(a: &BigUint, b: &BigUint, surjective: bool) -> Result<BigUint> {
    if !surjective {
        return Err(Error::NotSurjective);
    }
    Ok(a * b / 2u32)
}

/// Generators of `(C_n ≀ S_m)°`: the transposition `(1 2)` and the long
/// cycle with zero twists, and the twist `e_1 - e_2`.
pub fn wreath_generators(n: u8, m: usize) -> Vec<WreathElement> {
    let mut out = Vec::new();
    if m >= 2 {
        let t = Permutation::from_cycles(&[vec![1, 2]], m).expect("valid cycle");
        out.push(WreathElement::new(n, vec![0; m], t).expect("shape"));
        let long: Vec<usize> = (1..=m).collect();
        let c = Permutation::from_cycles(&[long], m).expect("valid cycle");
        out.push(WreathElement::new(n, vec![0; m], c).expect("shape"));
        let mut x = vec![0; m];
        x[0] = 1;
        x[1] = n - 1;
        out.push(WreathElement::new(n, x, Permutation::identity(m)).expect("shape"));
    }
    out
}

/// `|R3| = |(C3 ≀ S8)° ×_sign (C2 ≀ S12)°|`.
pub fn r3_predicted_order() -> Result<BigUint> {
    FiberSpec::new(
        FactorSpec::restricted_wreath(3, 8)?,
        FactorSpec::restricted_wreath(2, 12)?,
    )
    .order()
}

/// `|R4| = |(C3 ≀ S8)° ×_sign S24| · 24!`.
pub fn r4_predicted_order() -> Result<BigUint> {
    let fiber = FiberSpec::new(
        FactorSpec::restricted_wreath(3, 8)?,
        FactorSpec::symmetric(24),
    );
    Ok(fiber.order()? * factorial(24))
}

/// `|R5| = |(R3 ×_sign S24) ×_sign (S24 × S24)| = |R3| · (24!)^3 / 4`.
pub fn r5_predicted_order() -> Result<BigUint> {
    let r3 = FactorSpec::new("R3", r3_predicted_order()?, vec![-1]);
    let inner = FiberSpec::new(r3, FactorSpec::symmetric(24)).as_factor("R3 x S24")?;
    let pair = FactorSpec::new("S24 x S24", factorial(24) * factorial(24), vec![-1, 1]);
    FiberSpec::new(inner, pair).order()
}

/// An element of the abstract `R3`: corner part in `C3 ≀ S8`, edge part in
/// `C2 ≀ S12`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct R3Element {
    pub corners: WreathElement,
    pub edges: WreathElement,
}

impl R3Element {
    pub fn mul(&self, other: &R3Element) -> Result<R3Element> {
        Ok(R3Element {
            corners: self.corners.mul(&other.corners)?,
            edges: self.edges.mul(&other.edges)?,
        })
    }

    /// Membership in `(C3 ≀ S8)° ×_sign (C2 ≀ S12)°`.
    pub fn is_valid(&self) -> bool {
        self.corners.in_restricted()
            && self.edges.in_restricted()
            && self.corners.sigma.sign() == self.edges.sigma.sign()
    }

    pub fn is_identity(&self) -> bool {
        self.corners.is_identity() && self.edges.is_identity()
    }
}

/// Generators of the abstract `R3`: corner and edge twists, 3-cycles on
/// each side, and a simultaneous transposition.
pub fn r3_abstract_generators() -> Vec<R3Element> {
    let c_id = || WreathElement::identity(3, 8);
    let e_id = || WreathElement::identity(2, 12);
    let cycle = |m: usize, pts: Vec<usize>| Permutation::from_cycles(&[pts], m).expect("valid");
    let mut cx = vec![0; 8];
    cx[0] = 1;
    cx[1] = 2;
    let mut ex = vec![0; 12];
    ex[0] = 1;
    ex[1] = 1;
    vec![
        R3Element {
            corners: WreathElement::new(3, cx, Permutation::identity(8)).expect("shape"),
            edges: e_id(),
        },
        R3Element {
            corners: c_id(),
            edges: WreathElement::new(2, ex, Permutation::identity(12)).expect("shape"),
        },
        R3Element {
            corners: WreathElement::new(3, vec![0; 8], cycle(8, vec![1, 2, 3])).expect("shape"),
            edges: e_id(),
        },
        R3Element {
            corners: c_id(),
            edges: WreathElement::new(2, vec![0; 12], cycle(12, vec![1, 2, 3])).expect("shape"),
        },
        R3Element {
            corners: WreathElement::new(3, vec![0; 8], cycle(8, (1..=8).collect())).expect("shape"),
            edges: WreathElement::new(2, vec![0; 12], cycle(12, vec![1, 2])).expect("shape"),
        },
    ]
}

/// `((0,…,0), id; (1,…,1), id)`: every edge flipped in place.
pub fn superflip() -> R3Element {
    R3Element {
        corners: WreathElement::identity(3, 8),
        edges: WreathElement::new(2, vec![1; 12], Permutation::identity(12)).expect("shape"),
    }
}

/// `|G / [G, G]|`, or `None` when the derived-subgroup computation exceeds
/// the strong-generator cap.
pub fn abelianization_order(group: &GroupHandle, cap: usize) -> Result<Option<BigUint>> {
    match group.derived_subgroup(cap)? {
        None => Ok(None),
        Some(d) => {
            let dord = d.order();
            if dord.is_zero() {
                return Err(Error::Inconsistent("empty derived subgroup".into()));
            }
            Ok(Some(group.order() / dord))
        }
    }
}

/// Strong-generator cap used for derived subgroups of the cube groups.
pub const DERIVED_CAP: usize = 2000;

pub fn abelianization_order_r3() -> Result<Option<BigUint>> {
    let model = crate::cube::StickerModel::r3()?;
    abelianization_order(model.group(), DERIVED_CAP)
}
