//! Permutations of `{1, ..., N}` with explicit degree.
//!
//! Composition convention, used everywhere in this crate:
//! `p.compose(&q)` is `p ∘ q`, i.e. `(p ∘ q)(i) = p(q(i))` (apply `q` first).
//!
//! Points are 1-based in every public signature and in cycle notation;
//! storage is 0-based.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<u32>,
}

impl Permutation {
    pub fn identity(degree: usize) -> Self {
        Permutation {
            images: (0..degree as u32).collect(),
        }
    }

    /// Builds a permutation from 1-based images: `images[i - 1]` is the image of `i`.
    pub fn from_images(images: &[usize]) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        let mut out = Vec::with_capacity(n);
        for &img in images {
            if img == 0 || img > n {
                return Err(Error::PointOutOfRange {
                    point: img,
                    degree: n,
                });
            }
            if std::mem::replace(&mut seen[img - 1], true) {
                return Err(Error::NotBijection(n));
            }
            out.push((img - 1) as u32);
        }
        Ok(Permutation { images: out })
    }

    /// 0-based images; caller guarantees bijectivity.
    pub(crate) fn from_raw(images: Vec<u32>) -> Self {
        debug_assert!(is_bijection(&images));
        Permutation { images }
    }

    pub(crate) fn raw(&self) -> &[u32] {
        &self.images
    }

    /// Builds a permutation from disjoint cycles of 1-based points.
    pub fn from_cycles(cycles: &[Vec<usize>], degree: usize) -> Result<Self> {
        let mut images: Vec<u32> = (0..degree as u32).collect();
        let mut seen = vec![false; degree];
        for cycle in cycles {
            for &pt in cycle {
                if pt == 0 || pt > degree {
                    return Err(Error::PointOutOfRange { point: pt, degree });
                }
                if std::mem::replace(&mut seen[pt - 1], true) {
                    return Err(Error::RepeatedPoint(pt));
                }
            }
            for (k, &pt) in cycle.iter().enumerate() {
                let next = cycle[(k + 1) % cycle.len()];
                images[pt - 1] = (next - 1) as u32;
            }
        }
        Ok(Permutation { images })
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    /// Image of the 1-based point `i`.
    pub fn image(&self, i: usize) -> usize {
        self.images[i - 1] as usize + 1
    }

    /// 1-based image list.
    pub fn images(&self) -> Vec<usize> {
        self.images.iter().map(|&x| x as usize + 1).collect()
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| i as u32 == x)
    }

    /// `self ∘ other`: apply `other` first, then `self`.
    pub fn compose(&self, other: &Permutation) -> Result<Permutation> {
        if self.degree() != other.degree() {
            return Err(Error::DegreeMismatch(self.degree(), other.degree()));
        }
        Ok(self.compose_unchecked(other))
    }

    pub(crate) fn compose_unchecked(&self, other: &Permutation) -> Permutation {
        Permutation {
            images: other
                .images
                .iter()
                .map(|&x| self.images[x as usize])
                .collect(),
        }
    }

    /// Writes `self ∘ other` into `out` without allocating.
    pub(crate) fn compose_into(&self, other: &Permutation, out: &mut Permutation) {
        for (o, &x) in out.images.iter_mut().zip(&other.images) {
            *o = self.images[x as usize];
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0u32; self.images.len()];
        for (i, &x) in self.images.iter().enumerate() {
            inv[x as usize] = i as u32;
        }
        Permutation { images: inv }
    }

    pub fn pow(&self, mut e: u64) -> Permutation {
        let mut base = self.clone();
        let mut acc = Permutation::identity(self.degree());
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.compose_unchecked(&base);
            }
            base = base.compose_unchecked(&base);
            e >>= 1;
        }
        acc
    }

    /// Disjoint cycles of length ≥ 2, each starting at its smallest point,
    /// sorted by that point. 1-based.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut cycle = Vec::new();
            let mut j = start;
            while !seen[j] {
                seen[j] = true;
                cycle.push(j + 1);
                j = self.images[j] as usize;
            }
            if cycle.len() > 1 {
                out.push(cycle);
            }
        }
        out
    }

    pub fn cycle_type(&self) -> CycleType {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut parts = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut len = 0;
            let mut j = start;
            while !seen[j] {
                seen[j] = true;
                len += 1;
                j = self.images[j] as usize;
            }
            parts.push(len);
        }
        CycleType::new(parts)
    }

    /// +1 or -1.
    pub fn sign(&self) -> i8 {
        // Count transpositions directly: a cycle of length L is L - 1 of them.
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut transpositions = 0usize;
        for start in 0..n {
            let mut j = start;
            let mut len = 0;
            while !seen[j] {
                seen[j] = true;
                len += 1;
                j = self.images[j] as usize;
            }
            if len > 0 {
                transpositions += len - 1;
            }
        }
        if transpositions.is_multiple_of(2) {
            1
        } else {
            -1
        }
    }

    /// Multiplicative order as the lcm of cycle lengths.
    pub fn order(&self) -> num_bigint::BigUint {
        self.cycle_type().lcm()
    }

    /// Canonical cycle notation: cycles sorted by smallest point, fixed points
    /// omitted, identity printed as `()`.
    pub fn to_cycle_string(&self) -> String {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return "()".to_string();
        }
        format_cycle_list(&cycles)
    }

    /// Restriction to the points `1..=degree`, which must be an invariant set.
    pub fn restrict(&self, degree: usize) -> Result<Permutation> {
        let images: Vec<u32> = self.images[..degree].to_vec();
        if images.iter().any(|&x| x as usize >= degree) {
            return Err(Error::Inconsistent(format!(
                "points 1..={degree} are not invariant"
            )));
        }
        Ok(Permutation { images })
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "Permutation[{}]{}",
            self.degree(),
            self.to_cycle_string()
        )
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_cycle_string())
    }
}

fn is_bijection(images: &[u32]) -> bool {
    let mut seen = vec![false; images.len()];
    images
        .iter()
        .all(|&x| (x as usize) < images.len() && !std::mem::replace(&mut seen[x as usize], true))
}

/// Parses whitespace-tolerant cycle notation into its list of cycles, keeping
/// the written order of cycles and of points within each cycle.
pub fn parse_cycle_list(text: &str) -> Result<Vec<Vec<usize>>> {
    let bytes = text.as_bytes();
    let mut cycles = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        match bytes[i] {
            b if b.is_ascii_whitespace() => i += 1,
            b'(' => {
                i += 1;
                let mut cycle = Vec::new();
                loop {
                    while i < bytes.len() && (bytes[i].is_ascii_whitespace() || bytes[i] == b',') {
                        i += 1;
                    }
                    if i >= bytes.len() {
                        return Err(Error::Malformed {
                            pos: i,
                            msg: "unclosed parenthesis",
                        });
                    }
                    if bytes[i] == b')' {
                        i += 1;
                        break;
                    }
                    let start = i;
                    while i < bytes.len() && bytes[i].is_ascii_digit() {
                        i += 1;
                    }
                    if start == i {
                        return Err(Error::Malformed {
                            pos: i,
                            msg: "expected a point",
                        });
                    }
                    let pt: usize = text[start..i].parse().map_err(|_| Error::Malformed {
                        pos: start,
                        msg: "point does not fit in a machine word",
                    })?;
                    cycle.push(pt);
                }
                if !cycle.is_empty() {
                    cycles.push(cycle);
                }
            }
            _ => {
                return Err(Error::Malformed {
                    pos: i,
                    msg: "expected '('",
                })
            }
        }
    }
    Ok(cycles)
}

/// Parses cycle notation for a permutation of `1..=degree`. Points not
/// mentioned are fixed; a point may appear at most once overall.
pub fn parse_cycles(text: &str, degree: usize) -> Result<Permutation> {
    Permutation::from_cycles(&parse_cycle_list(text)?, degree)
}

pub fn format_cycle_list(cycles: &[Vec<usize>]) -> String {
    let mut s = String::new();
    for c in cycles {
        s.push('(');
        for (k, p) in c.iter().enumerate() {
            if k > 0 {
                s.push(' ');
            }
            s.push_str(&p.to_string());
        }
        s.push(')');
    }
    s
}

/// Multiset of cycle lengths (fixed points included), stored in
/// non-increasing order.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct CycleType {
    parts: Vec<usize>,
}

impl CycleType {
    pub fn new(mut parts: Vec<usize>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        CycleType { parts }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn degree(&self) -> usize {
        self.parts.iter().sum()
    }

    /// `(-1)^(N - number of parts)`.
    pub fn parity(&self) -> i8 {
        if (self.degree() - self.parts.len()).is_multiple_of(2) {
            1
        } else {
            -1
        }
    }

    pub fn count(&self, len: usize) -> usize {
        self.parts.iter().filter(|&&p| p == len).count()
    }

    pub fn lcm(&self) -> num_bigint::BigUint {
        use num_integer::Integer;
        self.parts
            .iter()
            .fold(num_bigint::BigUint::from(1u32), |acc, &p| {
                acc.lcm(&num_bigint::BigUint::from(p))
            })
    }

    /// Exponent notation, e.g. `4^11 1^100`.
    pub fn exponent_string(&self) -> String {
        let mut counts: BTreeMap<usize, usize> = BTreeMap::new();
        for &p in &self.parts {
            *counts.entry(p).or_default() += 1;
        }
        counts
            .iter()
            .rev()
            .map(|(p, c)| {
                if *c == 1 {
                    p.to_string()
                } else {
                    format!("{p}^{c}")
                }
            })
            .collect::<Vec<_>>()
            .join(" ")
    }
}

impl fmt::Debug for CycleType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{}}}", self.exponent_string())
    }
}

impl fmt::Display for CycleType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{}}}", self.exponent_string())
    }
}

struct UnionFind {
    parent: Vec<usize>,
    size: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
            size: vec![1; n],
        }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    /// Returns the new root when two classes merge.
    fn union(&mut self, a: usize, b: usize) -> Option<usize> {
        let (mut ra, mut rb) = (self.find(a), self.find(b));
        if ra == rb {
            return None;
        }
        if self.size[ra] < self.size[rb] {
            std::mem::swap(&mut ra, &mut rb);
        }
        self.parent[rb] = ra;
        self.size[ra] += self.size[rb];
        Some(ra)
    }

    fn classes(&mut self, points: impl Iterator<Item = usize>) -> Vec<Vec<usize>> {
        let mut by_root: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
        for p in points {
            let r = self.find(p);
            by_root.entry(r).or_default().push(p);
        }
        let mut out: Vec<Vec<usize>> = by_root.into_values().collect();
        for c in &mut out {
            c.sort_unstable();
        }
        out.sort_unstable_by_key(|c| c[0]);
        out
    }
}

fn common_degree(gens: &[Permutation]) -> Result<usize> {
    let n = gens.first().ok_or(Error::NoGenerators)?.degree();
    for g in gens {
        if g.degree() != n {
            return Err(Error::DegreeMismatch(n, g.degree()));
        }
    }
    Ok(n)
}

/// Orbits of the group generated by `gens`, as sorted 1-based point lists
/// ordered by smallest element.
pub fn orbits(gens: &[Permutation]) -> Result<Vec<Vec<usize>>> {
    let n = common_degree(gens)?;
    let mut uf = UnionFind::new(n);
    for g in gens {
        for (i, &x) in g.images.iter().enumerate() {
            uf.union(i, x as usize);
        }
    }
    Ok(uf
        .classes(0..n)
        .into_iter()
        .map(|c| c.into_iter().map(|p| p + 1).collect())
        .collect())
}

/// Smallest block system on the invariant set `orbit` having both seed points
/// in one block. Returns `None` when that block is all of `orbit`.
pub fn block_system(
    gens: &[Permutation],
    orbit: &[usize],
    seed: (usize, usize),
) -> Result<Option<Vec<Vec<usize>>>> {
    let n = common_degree(gens)?;
    let mut in_orbit = vec![false; n];
    for &p in orbit {
        if p == 0 || p > n {
            return Err(Error::PointOutOfRange {
                point: p,
                degree: n,
            });
        }
        in_orbit[p - 1] = true;
    }
    for s in [seed.0, seed.1] {
        if s == 0 || s > n || !in_orbit[s - 1] {
            return Err(Error::SeedOutsideOrbit(s));
        }
    }
    for g in gens {
        if orbit.iter().any(|&p| !in_orbit[g.images[p - 1] as usize]) {
            return Err(Error::Inconsistent(
                "generators do not preserve the orbit".into(),
            ));
        }
    }
    let mut uf = UnionFind::new(n);
    let mut queue = Vec::new();
    if uf.union(seed.0 - 1, seed.1 - 1).is_some() {
        queue.push((seed.0 - 1, seed.1 - 1));
    }
    while let Some((a, b)) = queue.pop() {
        for g in gens {
            let (ga, gb) = (g.images[a] as usize, g.images[b] as usize);
            if uf.union(ga, gb).is_some() {
                queue.push((ga, gb));
            }
        }
    }
    let blocks: Vec<Vec<usize>> = uf
        .classes(orbit.iter().map(|&p| p - 1))
        .into_iter()
        .map(|c| c.into_iter().map(|p| p + 1).collect())
        .collect();
    if blocks.len() == 1 {
        Ok(None)
    } else {
        Ok(Some(blocks))
    }
}
