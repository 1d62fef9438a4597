use cubegalois::cube::{ClassAssignment, ConfigTuple, PieceClass, StickerModel};
use cubegalois::perm::{orbits, parse_cycles};
use cubegalois::Permutation;
use num_bigint::BigUint;
use std::sync::OnceLock;

const N5: &str =
    "2582636272886959379162819698174683585918088940054237132144778804568925405184000000000000000";
const N4: &str = "16972688908618238933770849245964147960401887232000000000";
const N3: &str = "43252003274489856000";

fn r5() -> &'static StickerModel {
    static M: OnceLock<StickerModel> = OnceLock::new();
    M.get_or_init(|| StickerModel::r5().unwrap())
}

fn r3() -> &'static StickerModel {
    static M: OnceLock<StickerModel> = OnceLock::new();
    M.get_or_init(|| StickerModel::r3().unwrap())
}

fn default_assignment() -> ClassAssignment {
    ClassAssignment {
        tau: PieceClass::XCenter,
        rho_c: PieceClass::PlusCenter,
        rho_e: PieceClass::Wing,
    }
}

fn orbit_sizes(m: &StickerModel) -> Vec<usize> {
    let mut sizes: Vec<usize> = orbits(&m.generator_perms())
        .unwrap()
        .iter()
        .map(Vec::len)
        .collect();
    sizes.sort_unstable();
    sizes
}

#[test]
fn orders_are_exact() {
    assert_eq!(r5().group().order(), N5.parse::<BigUint>().unwrap());
    assert_eq!(
        StickerModel::r4().unwrap().group().order(),
        N4.parse::<BigUint>().unwrap()
    );
    assert_eq!(r3().group().order(), N3.parse::<BigUint>().unwrap());
}

#[test]
fn r5_classes_and_orbits() {
    let m = r5();
    assert_eq!(m.degree(), 144);
    // Wings split into two orbits: a wing cannot be flipped in place.
    assert_eq!(orbit_sizes(m), vec![24; 6]);
    let sizes: Vec<(PieceClass, usize, usize)> = m
        .classes()
        .iter()
        .map(|c| (c.class, c.points.len(), c.pieces.len()))
        .collect();
    assert_eq!(
        sizes,
        vec![
            (PieceClass::Corner, 24, 8),
            (PieceClass::CentralEdge, 24, 12),
            (PieceClass::Wing, 48, 24),
            (PieceClass::PlusCenter, 24, 24),
            (PieceClass::XCenter, 24, 24),
        ]
    );
    for c in m.classes() {
        for g in m.generator_perms() {
            assert!(c
                .points
                .iter()
                .all(|p| c.points.binary_search(&g.image(*p)).is_ok()));
        }
    }
    assert_eq!(m.generator("r1").unwrap().image(40), 88);
}

#[test]
fn r4_restriction() {
    let m = StickerModel::r4().unwrap();
    assert_eq!(m.degree(), 96);
    assert_eq!(m.generators().len(), 12);
    assert_eq!(orbit_sizes(&m), vec![24; 4]);
    let classes: Vec<(PieceClass, usize)> = m
        .classes()
        .iter()
        .map(|c| (c.class, c.points.len()))
        .collect();
    assert_eq!(
        classes,
        vec![
            (PieceClass::Corner, 24),
            (PieceClass::Wing, 48),
            (PieceClass::XCenter, 24)
        ]
    );
    let words = m.generator_words();
    let r2 = words.iter().find(|(n, _)| n == "r2").unwrap();
    assert_eq!(r2.1, "(39 87 10 95)(27 75 22 83)(15 63 34 71)(3 51 46 59)");
    for (name, g) in m.generators() {
        let signs = m.sign_vector(g).unwrap();
        assert_eq!(
            signs[0].1, signs[2].1,
            "corner and x-centre signs differ for {name}"
        );
    }
}

#[test]
fn r3_model_basics() {
    let m = r3();
    assert_eq!(orbit_sizes(m), vec![24, 24]);
    for (_, g) in m.generators() {
        assert_eq!(g.order(), BigUint::from(4u32));
    }
}

#[test]
fn generator_table_integrity() {
    assert_eq!(
        r5().table_digest(),
        cubegalois::cube::tables::R5_TABLE_SHA256
    );
    // The dump reproduces the embedded strings verbatim.
    for ((name, text), (n, t)) in r5()
        .generator_words()
        .iter()
        .zip(cubegalois::cube::tables::R5_GENERATORS)
    {
        assert_eq!((name.as_str(), text.as_str()), (n, t));
    }
}

#[test]
fn shipped_solved_state_matches_model() {
    let shipped = cubegalois::cube::shipped_r5_solved_state().unwrap();
    assert_eq!(shipped, r5().solved_state());
    assert_eq!(shipped.version, 1);
}

#[test]
fn induced_cubie_permutations() {
    let m = r5();
    let id = Permutation::identity(144);
    assert!(m
        .induced_cubie_perm(&id, PieceClass::Corner)
        .unwrap()
        .is_identity());
    let r1 = m
        .induced_cubie_perm(m.generator("r1").unwrap(), PieceClass::Corner)
        .unwrap();
    assert_eq!(r1.degree(), 8);
    assert_eq!(r1.cycle_type().parts(), &[4, 1, 1, 1, 1]);
    assert_eq!(r1.sign(), -1);
    let r2 = m
        .induced_cubie_perm(m.generator("r2").unwrap(), PieceClass::Corner)
        .unwrap();
    assert!(r2.is_identity());
    // A transposition of two facets of different corners breaks the blocks.
    let bad = parse_cycles("(1 5)", 144).unwrap();
    assert!(m.induced_cubie_perm(&bad, PieceClass::Corner).is_err());
}

/// The subgroup of {±1}^k generated by the given vectors.
fn span(vectors: &[Vec<i8>]) -> std::collections::BTreeSet<Vec<i8>> {
    let mut set = std::collections::BTreeSet::new();
    set.insert(vec![1i8; vectors[0].len()]);
    loop {
        let current: Vec<Vec<i8>> = set.iter().cloned().collect();
        let before = set.len();
        for a in &current {
            for v in vectors {
                set.insert(a.iter().zip(v).map(|(x, y)| x * y).collect());
            }
        }
        if set.len() == before {
            return set;
        }
    }
}

#[test]
fn sign_character_image_has_order_four() {
    let m = r5();
    let id = Permutation::identity(144);
    assert!(m.sign_vector(&id).unwrap().iter().all(|&(_, s)| s == 1));
    let vectors: Vec<Vec<i8>> = m
        .generators()
        .iter()
        .map(|(_, g)| {
            m.sign_vector(g)
                .unwrap()
                .into_iter()
                .map(|(_, s)| s)
                .collect()
        })
        .collect();
    let span = span(&vectors);
    assert_eq!(span.len(), 4);
    for (i, p) in m.group().sampler(7).take(1000).enumerate() {
        let v: Vec<i8> = m
            .sign_vector(&p)
            .unwrap()
            .into_iter()
            .map(|(_, s)| s)
            .collect();
        assert!(span.contains(&v), "sample {i} leaves the sign span");
    }
}

#[test]
fn orientation_sums_vanish() {
    let m = r5();
    let id = Permutation::identity(144);
    assert_eq!(m.orientation_sum(&id, PieceClass::Corner).unwrap(), 0);
    for (name, g) in m.generators() {
        assert_eq!(
            m.orientation_sum(g, PieceClass::Corner).unwrap(),
            0,
            "{name}"
        );
        assert_eq!(
            m.orientation_sum(g, PieceClass::CentralEdge).unwrap(),
            0,
            "{name}"
        );
    }
    for p in m.group().sampler(11).take(1000) {
        assert_eq!(m.orientation_sum(&p, PieceClass::Corner).unwrap(), 0);
        assert_eq!(m.orientation_sum(&p, PieceClass::CentralEdge).unwrap(), 0);
    }
    assert!(m.orientation_sum(&id, PieceClass::Wing).is_err());
}

#[test]
fn class_assignment_for_conditions_three_and_four() {
    let found = r5().consistent_assignments().unwrap();
    assert_eq!(found.len(), 2);
    assert!(found.iter().all(|a| a.tau == PieceClass::XCenter));
    assert!(found.contains(&default_assignment()));
}

#[test]
fn validity_examples() {
    let m = r5();
    let a = default_assignment();
    let initial = ConfigTuple::initial();
    let report = m.validity_check(&initial, a, true).unwrap();
    assert!(report.valid);
    assert_eq!(report.member, Some(true));

    let mut twisted = ConfigTuple::initial();
    twisted.x[0] = 1;
    let report = m.validity_check(&twisted, a, true).unwrap();
    assert!(!report.twist_sum_zero);
    assert!(!report.valid);
    assert_eq!(report.member, Some(false));

    for (name, g) in m.generators() {
        let t = m.read_config(g, a).unwrap();
        assert_eq!(&m.encode_config(&t, a).unwrap(), g, "{name} round trip");
        let report = m.validity_check(&t, a, true).unwrap();
        assert!(report.valid && report.member == Some(true), "{name}");
    }

    // Swapping two x-centres alone flips sign(τ) only.
    let mut odd = ConfigTuple::initial();
    odd.tau = Permutation::from_cycles(&[vec![1, 2]], 24).unwrap();
    let report = m.validity_check(&odd, a, true).unwrap();
    assert!(!report.valid);
    assert_eq!(report.member, Some(false));
}

#[test]
fn corner_sticker_transposition_is_not_a_member() {
    let p = parse_cycles("(1 85)", 144).unwrap();
    assert!(!r5().group().contains(&p).unwrap());
}

#[test]
fn r3_superflip_is_central() {
    let m = r3();
    let edges = m.class(PieceClass::CentralEdge).unwrap();
    let cycles: Vec<Vec<usize>> = edges.pieces.clone();
    let flip = Permutation::from_cycles(&cycles, 48).unwrap();
    assert_eq!(flip.order(), BigUint::from(2u32));
    for (_, g) in m.generators() {
        assert_eq!(flip.compose(g).unwrap(), g.compose(&flip).unwrap());
    }
    assert!(m.group().contains(&flip).unwrap());
    // A single flipped edge is not reachable.
    let one = Permutation::from_cycles(&cycles[..1], 48).unwrap();
    assert!(!m.group().contains(&one).unwrap());
}

#[test]
fn unsupported_sizes() {
    assert!(StickerModel::for_size(6).is_err());
    assert!(r3()
        .read_config(&Permutation::identity(48), default_assignment())
        .is_err());
}
