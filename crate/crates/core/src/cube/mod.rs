//! Sticker-level models of the 3x3x3, 4x4x4 and 5x5x5 cube groups.
//!
//! Facet classes are generator orbits (checked against the position of each
//! facet on the unfolded net); pieces are blocks of imprimitivity seeded by
//! two facets of one physical piece.

mod config;
pub mod tables;

use std::fmt;
use std::sync::OnceLock;

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::error::{Error, Result};
use crate::group::GroupHandle;
use crate::perm::{self, Permutation};

pub use config::{ClassAssignment, ConfigTuple, ValidityReport};

/// Kinds of movable pieces.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum PieceClass {
    Corner,
    /// The middle edge piece (the only edge piece of the 3x3x3).
    CentralEdge,
    Wing,
    PlusCenter,
    XCenter,
}

impl PieceClass {
    pub const ALL: [PieceClass; 5] = [
        PieceClass::Corner,
        PieceClass::CentralEdge,
        PieceClass::Wing,
        PieceClass::PlusCenter,
        PieceClass::XCenter,
    ];

    pub fn name(self) -> &'static str {
        match self {
            PieceClass::Corner => "corner",
            PieceClass::CentralEdge => "central-edge",
            PieceClass::Wing => "wing",
            PieceClass::PlusCenter => "plus-center",
            PieceClass::XCenter => "x-center",
        }
    }

    fn piece_size(self) -> usize {
        match self {
            PieceClass::Corner => 3,
            PieceClass::CentralEdge | PieceClass::Wing => 2,
            PieceClass::PlusCenter | PieceClass::XCenter => 1,
        }
    }
}

impl fmt::Display for PieceClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// One class of facets together with its pieces.
#[derive(Clone, Debug)]
pub struct StickerClass {
    pub class: PieceClass,
    /// Sorted facet labels.
    pub points: Vec<usize>,
    /// Generator orbits making up this class.
    pub orbits: Vec<Vec<usize>>,
    /// Pieces, ordered by smallest label. Within a piece the facets are in
    /// reference order: the reference facet first, then (for corners) the
    /// other two in right-handed order of their face normals.
    pub pieces: Vec<Vec<usize>>,
}

#[derive(Clone, Debug)]
pub struct StickerModel {
    size: usize,
    degree: usize,
    generators: Vec<(String, Permutation)>,
    words: Vec<(String, Vec<Vec<usize>>)>,
    faces: Vec<char>,
    classes: Vec<StickerClass>,
    /// `piece_of[label - 1]` = (index into `classes`, piece index, position in piece).
    piece_of: Vec<(usize, usize, usize)>,
    group: OnceLock<GroupHandle>,
}

/// Facet position on a face grid of side `n`, as a piece class.
fn class_at(n: usize, r: usize, c: usize) -> Option<PieceClass> {
    let last = n - 1;
    let rim = |x: usize| x == 0 || x == last;
    let mid = |x: usize| n % 2 == 1 && x == n / 2;
    match (rim(r), rim(c)) {
        (true, true) => Some(PieceClass::Corner),
        (true, false) | (false, true) => {
            let other = if rim(r) { c } else { r };
            if mid(other) {
                Some(PieceClass::CentralEdge)
            } else {
                Some(PieceClass::Wing)
            }
        }
        (false, false) => match (mid(r), mid(c)) {
            (true, true) => None,
            (true, false) | (false, true) => Some(PieceClass::PlusCenter),
            (false, false) => Some(PieceClass::XCenter),
        },
    }
}

fn normal(face: char) -> [i32; 3] {
    match face {
        'R' => [1, 0, 0],
        'L' => [-1, 0, 0],
        'F' => [0, 1, 0],
        'B' => [0, -1, 0],
        'U' => [0, 0, 1],
        'D' => [0, 0, -1],
        _ => unreachable!("face letters are fixed"),
    }
}

fn handedness(a: [i32; 3], b: [i32; 3], c: [i32; 3]) -> i32 {
    let cross = [
        a[1] * b[2] - a[2] * b[1],
        a[2] * b[0] - a[0] * b[2],
        a[0] * b[1] - a[1] * b[0],
    ];
    cross[0] * c[0] + cross[1] * c[1] + cross[2] * c[2]
}

impl StickerModel {
    /// Professor's cube: the twelve turns on 144 facets.
    pub fn r5() -> Result<StickerModel> {
        let words = tables::R5_GENERATORS
            .iter()
            .map(|(name, text)| Ok((name.to_string(), perm::parse_cycle_list(text)?)))
            .collect::<Result<Vec<_>>>()?;
        let (faces, geometry) = net_geometry(5, 144);
        Self::assemble(
            5,
            144,
            words,
            faces,
            geometry,
            &[
                (PieceClass::Corner, tables::R5_CORNER_SEED),
                (PieceClass::Wing, tables::R5_WING_SEED),
                (PieceClass::CentralEdge, tables::R5_CENTRAL_EDGE_SEED),
            ],
        )
    }

    /// Revenge cube: the Professor's cube turns with every label above 96
    /// deleted. Generators keep their names even if they become trivial.
    pub fn r4() -> Result<StickerModel> {
        let words = tables::R5_GENERATORS
            .iter()
            .map(|(name, text)| {
                let cycles = perm::parse_cycle_list(text)?
                    .into_iter()
                    .map(|c| c.into_iter().filter(|&p| p <= 96).collect::<Vec<_>>())
                    .filter(|c| c.len() > 1)
                    .collect();
                Ok((name.to_string(), cycles))
            })
            .collect::<Result<Vec<_>>>()?;
        let (faces, geometry) = net_geometry(5, 144);
        Self::assemble(
            4,
            96,
            words,
            faces[..96].to_vec(),
            geometry[..96].to_vec(),
            &[
                (PieceClass::Corner, tables::R5_CORNER_SEED),
                (PieceClass::Wing, tables::R5_WING_SEED),
            ],
        )
    }

    /// Rubik's cube: six quarter turns on 48 facets.
    pub fn r3() -> Result<StickerModel> {
        let words = tables::R3_GENERATORS
            .iter()
            .map(|(name, text)| Ok((name.to_string(), perm::parse_cycle_list(text)?)))
            .collect::<Result<Vec<_>>>()?;
        let mut faces = Vec::with_capacity(48);
        let mut geometry = Vec::with_capacity(48);
        const CELLS: [(usize, usize); 8] = [
            (0, 0),
            (0, 1),
            (0, 2),
            (1, 0),
            (1, 2),
            (2, 0),
            (2, 1),
            (2, 2),
        ];
        for face in tables::R3_FACES {
            for (r, c) in CELLS {
                faces.push(face);
                geometry.push(class_at(3, r, c));
            }
        }
        Self::assemble(
            3,
            48,
            words,
            faces,
            geometry,
            &[
                (PieceClass::Corner, tables::R3_CORNER_SEED),
                (PieceClass::CentralEdge, tables::R3_EDGE_SEED),
            ],
        )
    }

    pub fn for_size(n: usize) -> Result<StickerModel> {
        match n {
            3 => Self::r3(),
            4 => Self::r4(),
            5 => Self::r5(),
            _ => Err(Error::Degenerate("cube size must be 3, 4 or 5")),
        }
    }

    fn assemble(
        size: usize,
        degree: usize,
        words: Vec<(String, Vec<Vec<usize>>)>,
        faces: Vec<char>,
        geometry: Vec<Option<PieceClass>>,
        seeds: &[(PieceClass, (usize, usize))],
    ) -> Result<StickerModel> {
        let generators = words
            .iter()
            .map(|(name, cycles)| Ok((name.clone(), Permutation::from_cycles(cycles, degree)?)))
            .collect::<Result<Vec<_>>>()?;
        let gens: Vec<Permutation> = generators.iter().map(|(_, g)| g.clone()).collect();

        let mut by_class: Vec<(PieceClass, Vec<Vec<usize>>)> = Vec::new();
        for orbit in perm::orbits(&gens)? {
            let class = geometry[orbit[0] - 1].ok_or_else(|| {
                Error::Inconsistent(format!("label {} is a fixed face centre", orbit[0]))
            })?;
            if orbit.iter().any(|&p| geometry[p - 1] != Some(class)) {
                return Err(Error::Inconsistent(format!(
                    "orbit of {} mixes piece classes",
                    orbit[0]
                )));
            }
            match by_class.iter_mut().find(|(c, _)| *c == class) {
                Some((_, orbits)) => orbits.push(orbit),
                None => by_class.push((class, vec![orbit])),
            }
        }
        by_class.sort_by_key(|(c, _)| *c);

        let mut classes = Vec::new();
        for (class, orbits) in by_class {
            let mut points: Vec<usize> = orbits.iter().flatten().copied().collect();
            points.sort_unstable();
            let pieces = if class.piece_size() == 1 {
                points.iter().map(|&p| vec![p]).collect()
            } else {
                let seed = seeds
                    .iter()
                    .find(|(c, _)| *c == class)
                    .map(|(_, s)| *s)
                    .ok_or(Error::Inconsistent(format!("no seed pair for {class}")))?;
                let blocks = perm::block_system(&gens, &points, seed)?.ok_or(
                    Error::Inconsistent(format!("{class} facets form no blocks")),
                )?;
                if blocks.iter().any(|b| b.len() != class.piece_size()) {
                    return Err(Error::Inconsistent(format!(
                        "{class} blocks have the wrong size"
                    )));
                }
                blocks
                    .into_iter()
                    .map(|b| order_piece(class, b, &faces, &orbits))
                    .collect::<Result<Vec<_>>>()?
            };
            classes.push(StickerClass {
                class,
                points,
                orbits,
                pieces,
            });
        }

        let mut piece_of = vec![(usize::MAX, 0, 0); degree];
        for (ci, cls) in classes.iter().enumerate() {
            for (pi, piece) in cls.pieces.iter().enumerate() {
                for (k, &s) in piece.iter().enumerate() {
                    piece_of[s - 1] = (ci, pi, k);
                }
            }
        }

        Ok(StickerModel {
            size,
            degree,
            generators,
            words,
            faces,
            classes,
            piece_of,
            group: OnceLock::new(),
        })
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn generators(&self) -> &[(String, Permutation)] {
        &self.generators
    }

    pub fn generator(&self, name: &str) -> Option<&Permutation> {
        self.generators
            .iter()
            .find(|(n, _)| n == name)
            .map(|(_, g)| g)
    }

    pub fn generator_perms(&self) -> Vec<Permutation> {
        self.generators.iter().map(|(_, g)| g.clone()).collect()
    }

    /// Generators in their written cycle order (the dump format).
    pub fn generator_words(&self) -> Vec<(String, String)> {
        self.words
            .iter()
            .map(|(n, c)| {
                let text = if c.is_empty() {
                    "()".to_string()
                } else {
                    perm::format_cycle_list(c)
                };
                (n.clone(), text)
            })
            .collect()
    }

    pub fn face_of(&self, label: usize) -> char {
        self.faces[label - 1]
    }

    pub fn classes(&self) -> &[StickerClass] {
        &self.classes
    }

    pub fn class(&self, class: PieceClass) -> Option<&StickerClass> {
        self.classes.iter().find(|c| c.class == class)
    }

    fn class_index(&self, class: PieceClass) -> Result<usize> {
        self.classes
            .iter()
            .position(|c| c.class == class)
            .ok_or(Error::Degenerate("piece class not present in this model"))
    }

    /// The sticker group (built once, then shared).
    pub fn group(&self) -> &GroupHandle {
        self.group.get_or_init(|| {
            GroupHandle::build(&self.generator_perms()).expect("generators share a degree")
        })
    }

    /// For each piece of `class`: the piece it is sent to and the position,
    /// within that piece, of the image of its reference facet.
    fn piece_images(&self, p: &Permutation, class: PieceClass) -> Result<Vec<(usize, usize)>> {
        if p.degree() != self.degree {
            return Err(Error::DegreeMismatch(self.degree, p.degree()));
        }
        let ci = self.class_index(class)?;
        let cls = &self.classes[ci];
        cls.pieces
            .iter()
            .map(|piece| {
                let (c0, target, k0) = self.piece_of[p.image(piece[0]) - 1];
                if c0 != ci {
                    return Err(Error::BlockViolation);
                }
                for &s in &piece[1..] {
                    let (c, t, _) = self.piece_of[p.image(s) - 1];
                    if c != ci || t != target {
                        return Err(Error::BlockViolation);
                    }
                }
                Ok((target, k0))
            })
            .collect()
    }

    /// The permutation of piece positions induced by a facet permutation.
    pub fn induced_cubie_perm(&self, p: &Permutation, class: PieceClass) -> Result<Permutation> {
        let images: Vec<usize> = self
            .piece_images(p, class)?
            .into_iter()
            .map(|(t, _)| t + 1)
            .collect();
        Permutation::from_images(&images).map_err(|_| Error::BlockViolation)
    }

    /// Signs of the induced piece permutations, one per class present, in
    /// the order corner, central edge, wing, plus-centre, x-centre.
    pub fn sign_vector(&self, p: &Permutation) -> Result<Vec<(PieceClass, i8)>> {
        self.classes
            .iter()
            .map(|c| Ok((c.class, self.induced_cubie_perm(p, c.class)?.sign())))
            .collect()
    }

    /// Total twist of corners (mod 3) or flip of central edges (mod 2)
    /// relative to the reference facets.
    pub fn orientation_sum(&self, p: &Permutation, class: PieceClass) -> Result<u8> {
        let modulus = match class {
            PieceClass::Corner => 3,
            PieceClass::CentralEdge => 2,
            _ => {
                return Err(Error::Degenerate(
                    "orientation is defined for corners and central edges",
                ))
            }
        };
        let total: usize = self.piece_images(p, class)?.iter().map(|&(_, k)| k).sum();
        Ok((total % modulus) as u8)
    }

    /// SHA-256 over `name=cycles` lines of the generator table.
    pub fn table_digest(&self) -> String {
        let mut h = Sha256::new();
        for (name, text) in self.generator_words() {
            h.update(name.as_bytes());
            h.update(b"=");
            h.update(text.as_bytes());
            h.update(b"\n");
        }
        h.finalize().iter().map(|b| format!("{b:02x}")).collect()
    }

    /// The solved-state correspondence: every piece of every class with its
    /// facets in reference order.
    pub fn solved_state(&self) -> SolvedState {
        SolvedState {
            version: 1,
            cube: self.size,
            degree: self.degree,
            faces: self.faces.iter().map(|c| c.to_string()).collect::<String>(),
            classes: self
                .classes
                .iter()
                .map(|c| SolvedClass {
                    class: c.class,
                    pieces: c.pieces.clone(),
                })
                .collect(),
        }
    }
}

/// Versioned solved-state table (facet faces and piece facets).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SolvedState {
    pub version: u32,
    pub cube: usize,
    pub degree: usize,
    /// Face letter of labels 1..=degree, concatenated.
    pub faces: String,
    pub classes: Vec<SolvedClass>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SolvedClass {
    pub class: PieceClass,
    pub pieces: Vec<Vec<usize>>,
}

/// The shipped solved-state table for the Professor's cube.
pub const R5_SOLVED_STATE_JSON: &str = include_str!("../../data/r5_solved_state.json");

pub fn shipped_r5_solved_state() -> Result<SolvedState> {
    serde_json::from_str(R5_SOLVED_STATE_JSON).map_err(|e| Error::Parse(e.to_string()))
}

/// Face letter and piece class of labels `1..=degree` on the 5x5x5 net.
fn net_geometry(n: usize, degree: usize) -> (Vec<char>, Vec<Option<PieceClass>>) {
    let mut faces = vec!['?'; degree];
    let mut geometry = vec![None; degree];
    for (face, grid) in tables::R5_NET {
        for (r, row) in grid.iter().enumerate() {
            for (c, &label) in row.iter().enumerate() {
                if label != 0 {
                    faces[label as usize - 1] = face;
                    geometry[label as usize - 1] = class_at(n, r, c);
                }
            }
        }
    }
    (faces, geometry)
}

/// Orders the facets of a piece: reference facet first. Corners take the
/// U/D facet as reference and list the other two right-handedly. Two-facet
/// pieces take the U/D facet, else the F/B facet, except wings, whose
/// reference is the facet lying in the first orbit of the class.
fn order_piece(
    class: PieceClass,
    mut piece: Vec<usize>,
    faces: &[char],
    orbits: &[Vec<usize>],
) -> Result<Vec<usize>> {
    let face = |s: usize| faces[s - 1];
    let rank = |s: usize| match face(s) {
        'U' | 'D' => 0,
        'F' | 'B' => 1,
        _ => 2,
    };
    match class {
        PieceClass::Corner => {
            piece.sort_by_key(|&s| rank(s));
            if rank(piece[0]) != 0 {
                return Err(Error::Inconsistent(format!(
                    "corner {piece:?} has no U/D facet"
                )));
            }
            let (a, b, c) = (
                normal(face(piece[0])),
                normal(face(piece[1])),
                normal(face(piece[2])),
            );
            match handedness(a, b, c) {
                h if h > 0 => {}
                h if h < 0 => piece.swap(1, 2),
                _ => {
                    return Err(Error::Inconsistent(format!(
                        "corner {piece:?} is degenerate"
                    )))
                }
            }
        }
        PieceClass::Wing if orbits.len() == 2 => {
            piece.sort_by_key(|s| usize::from(!orbits[0].contains(s)));
        }
        _ => piece.sort_by_key(|&s| (rank(s), s)),
    }
    Ok(piece)
}
