use std::collections::{BTreeSet, HashSet, VecDeque};

use cubegalois::evidence::predict_wreath_types;
use cubegalois::group::GroupHandle;
use cubegalois::structure::*;
use cubegalois::{CycleType, Permutation};
use num_bigint::BigUint;
use proptest::prelude::*;

/// Every element of the group generated by `gens`, by breadth-first closure.
fn closure(gens: &[Permutation]) -> HashSet<Permutation> {
    let id = Permutation::identity(gens[0].degree());
    let mut seen = HashSet::from([id.clone()]);
    let mut queue = VecDeque::from([id]);
    while let Some(p) = queue.pop_front() {
        for g in gens {
            let q = g.compose(&p).unwrap();
            if seen.insert(q.clone()) {
                queue.push_back(q);
            }
        }
    }
    seen
}

/// All elements `(x, σ)` of `(C_n ≀ S_m)°` written out directly.
fn enumerate_restricted(n: u8, m: usize) -> Vec<WreathElement> {
    let sigmas: Vec<Permutation> = closure(&[
        Permutation::from_cycles(&[vec![1, 2]], m).unwrap(),
        Permutation::from_cycles(&[(1..=m).collect()], m).unwrap(),
    ])
    .into_iter()
    .collect();
    let mut out = Vec::new();
    let total = (n as usize).pow(m as u32);
    for code in 0..total {
        let mut x = Vec::with_capacity(m);
        let mut c = code;
        for _ in 0..m {
            x.push((c % n as usize) as u8);
            c /= n as usize;
        }
        if x.iter().map(|&v| v as usize).sum::<usize>() % n as usize != 0 {
            continue;
        }
        for s in &sigmas {
            out.push(WreathElement::new(n, x.clone(), s.clone()).unwrap());
        }
    }
    out
}

#[test]
fn wreath_order_matches_enumeration() {
    for n in 2u8..=4 {
        for m in 2usize..=8 {
            let full = (n as u64).pow(m as u32) * (1..=m as u64).product::<u64>();
            if full > 100_000 {
                continue;
            }
            let gens: Vec<Permutation> = wreath_generators(n, m)
                .iter()
                .map(|g| g.to_permutation())
                .collect();
            let elems = closure(&gens);
            assert_eq!(
                BigUint::from(elems.len()),
                restricted_wreath_order(n as u32, m).unwrap(),
                "n={n} m={m}"
            );
            assert_eq!(enumerate_restricted(n, m).len(), elems.len());
        }
    }
}

#[test]
fn predicted_types_match_enumeration() {
    for (n, m) in [(2u8, 2usize), (2, 3), (3, 2), (3, 4)] {
        let brute: BTreeSet<CycleType> = enumerate_restricted(n, m)
            .iter()
            .map(|e| e.to_permutation().cycle_type())
            .collect();
        assert_eq!(
            brute,
            predict_wreath_types(n as usize, m).unwrap(),
            "n={n} m={m}"
        );
    }
    assert_eq!(enumerate_restricted(3, 4).len(), 648);
    assert_eq!(enumerate_restricted(2, 2).len(), 4);
}

#[test]
fn edge_wreath_is_even() {
    // (C2 ≀ S12)° sits inside A24: its discriminant class is trivial.
    assert!(predict_wreath_types(2, 12)
        .unwrap()
        .iter()
        .all(|t| t.parity() == 1));
    assert!(predict_wreath_types(3, 8)
        .unwrap()
        .iter()
        .any(|t| t.parity() == -1));
}

#[test]
fn predicted_orders_match_sticker_groups() {
    let n3 = "43252003274489856000".parse::<BigUint>().unwrap();
    let n4 = "16972688908618238933770849245964147960401887232000000000"
        .parse::<BigUint>()
        .unwrap();
    let n5 = "2582636272886959379162819698174683585918088940054237132144778804568925405184000000000000000"
        .parse::<BigUint>()
        .unwrap();
    assert_eq!(r3_predicted_order().unwrap(), n3);
    assert_eq!(r4_predicted_order().unwrap(), n4);
    assert_eq!(r5_predicted_order().unwrap(), n5);
    assert_eq!(&n5 % &n4, BigUint::from(0u32));
    let f24: BigUint = (1..=24u32).map(BigUint::from).product();
    assert_eq!(&n3 * &f24 * &f24 * &f24 / 4u32, n5);
}

#[test]
fn tiny_fiber_product() {
    // S2 ×_sign S2 enumerated directly: pairs with equal signs.
    let s2 = [
        Permutation::identity(2),
        Permutation::from_cycles(&[vec![1, 2]], 2).unwrap(),
    ];
    let count = s2
        .iter()
        .flat_map(|a| s2.iter().map(move |b| (a, b)))
        .filter(|(a, b)| a.sign() == b.sign())
        .count();
    let two = BigUint::from(2u32);
    assert_eq!(BigUint::from(count), fiber_order(&two, &two, true).unwrap());
    let trivial = FactorSpec::new("C1", BigUint::from(1u32), vec![1]);
    assert!(FiberSpec::new(trivial, FactorSpec::symmetric(2))
        .order()
        .is_err());
}

#[test]
fn abelianizations() {
    assert_eq!(
        abelianization_order_r3().unwrap(),
        Some(BigUint::from(2u32))
    );
    let s24 = GroupHandle::build(&[
        Permutation::from_cycles(&[vec![1, 2]], 24).unwrap(),
        Permutation::from_cycles(&[(1..=24).collect()], 24).unwrap(),
    ])
    .unwrap();
    assert_eq!(
        abelianization_order(&s24, DERIVED_CAP).unwrap(),
        Some(BigUint::from(2u32))
    );
    let a5 = GroupHandle::build(&[
        Permutation::from_cycles(&[vec![1, 2, 3]], 5).unwrap(),
        Permutation::from_cycles(&[vec![1, 2, 3, 4, 5]], 5).unwrap(),
    ])
    .unwrap();
    assert_eq!(
        abelianization_order(&a5, DERIVED_CAP).unwrap(),
        Some(BigUint::from(1u32))
    );
}

#[test]
fn superflip_abstract() {
    let s = superflip();
    assert_eq!(s.edges.order(), BigUint::from(2u32));
    for g in r3_abstract_generators() {
        assert_eq!(s.mul(&g).unwrap(), g.mul(&s).unwrap());
    }
}

fn element(n: u8, m: usize) -> impl Strategy<Value = WreathElement> {
    (
        proptest::collection::vec(0..n, m),
        Just(m).prop_perturb(|m, mut rng| {
            let mut images: Vec<usize> = (1..=m).collect();
            for i in (1..m).rev() {
                images.swap(i, rng.random_range(0..=i));
            }
            images
        }),
    )
        .prop_map(move |(x, images)| {
            WreathElement::new(n, x, Permutation::from_images(&images).unwrap()).unwrap()
        })
}

proptest! {
    #[test]
    fn wreath_multiplication_is_associative(a in element(3, 6), b in element(3, 6), c in element(3, 6)) {
        let left = a.mul(&b).unwrap().mul(&c).unwrap();
        let right = a.mul(&b.mul(&c).unwrap()).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn wreath_inverse_and_action(a in element(2, 7), b in element(2, 7)) {
        prop_assert!(a.mul(&a.inverse()).unwrap().is_identity());
        prop_assert!(a.inverse().mul(&a).unwrap().is_identity());
        let ab = a.mul(&b).unwrap().to_permutation();
        prop_assert_eq!(ab, a.to_permutation().compose(&b.to_permutation()).unwrap());
        prop_assert_eq!(a.mul(&b).unwrap().twist_sum(), (a.twist_sum() + b.twist_sum()) % 2);
    }
}
