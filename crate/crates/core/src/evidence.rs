//! Frobenius cycle types as Galois-group evidence.
//!
//! For a prime `p` not dividing the leading coefficient or any denominator,
//! and with `f mod p` squarefree, the degrees of the irreducible factors of
//! `f mod p` are the cycle type of a Frobenius element of `Gal(f/Q)` acting
//! on the roots (Dedekind). Everything here is built on that fact.

use std::collections::{BTreeMap, BTreeSet};
use std::ops::ControlFlow;

use serde::{Serialize, Serializer};

use crate::arith;
use crate::error::{Error, Result};
use crate::modp::{self, Primes, Reduction};
use crate::perm::CycleType;
use crate::poly::{self, PolyQ};

/// Primes are examined in chunks of this size; within a chunk the work is
/// spread over the worker pool, and results are merged in prime order.
const CHUNK: usize = 128;

/// Tunable limits. Defaults match the acceptance thresholds.
#[derive(Clone, Debug, PartialEq)]
pub struct Thresholds {
    /// A scan fails when fewer good primes than `min(budget, this)` turn up.
    pub min_good_primes: usize,
    /// At most `budget * search_factor` primes are examined.
    pub search_factor: usize,
    /// Distinct cycle types expected for a degree-24 polynomial with group S24
    /// over 500 good primes.
    pub min_distinct_types_symmetric: usize,
    /// Window for the fraction of even Frobenius types when the discriminant
    /// is not a square.
    pub even_fraction_window: (f64, f64),
}

impl Default for Thresholds {
    fn default() -> Self {
        Thresholds {
            min_good_primes: 5,
            search_factor: 10,
            min_distinct_types_symmetric: 50,
            even_fraction_window: (0.4, 0.6),
        }
    }
}

/// What happened at one prime.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Observation {
    Good(CycleType),
    Bad,
}

/// Cycle type of `f mod p`, or `Bad` when `p` is a bad prime for `f`.
pub fn observe(f: &PolyQ, p: u64) -> Result<Observation> {
    match modp::reduce_mod_p(f, p)? {
        Reduction::BadPrime => Ok(Observation::Bad),
        Reduction::Good(fp) => Ok(match modp::ddf_cycle_type(&fp)? {
            Some(t) => Observation::Good(t),
            None => Observation::Bad,
        }),
    }
}

fn observe_all(polys: &[&PolyQ], primes: &[u64]) -> Result<Vec<Vec<Observation>>> {
    let one = |&p: &u64| {
        polys
            .iter()
            .map(|f| observe(f, p))
            .collect::<Result<Vec<_>>>()
    };
    #[cfg(feature = "parallel")]
    {
        use rayon::prelude::*;
        primes.par_iter().map(one).collect()
    }
    #[cfg(not(feature = "parallel"))]
    {
        primes.iter().map(one).collect()
    }
}

/// Walks the prime stream from 2, handing `visit` the observations of all
/// polynomials at each prime, in order, until it breaks or `max_primes` primes
/// have been seen. Returns the number of primes visited.
fn walk<F>(polys: &[&PolyQ], max_primes: usize, mut visit: F) -> Result<usize>
where
    F: FnMut(u64, &[Observation]) -> ControlFlow<()>,
{
    let mut primes = Primes::new();
    let mut seen = 0;
    while seen < max_primes {
        let chunk: Vec<u64> = primes.by_ref().take(CHUNK.min(max_primes - seen)).collect();
        let results = observe_all(polys, &chunk)?;
        for (p, obs) in chunk.iter().zip(&results) {
            seen += 1;
            if visit(*p, obs).is_break() {
                return Ok(seen);
            }
        }
    }
    Ok(seen)
}

/// Observed Frobenius data of one polynomial over consecutive primes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EvidenceProfile {
    pub id: String,
    pub primes_scanned: usize,
    pub bad_primes: Vec<u64>,
    /// Good primes with their cycle types, in increasing prime order.
    pub observations: Vec<(u64, CycleType)>,
}

impl EvidenceProfile {
    pub fn good_primes(&self) -> usize {
        self.observations.len()
    }

    /// Multiset of observed types.
    pub fn observed_types(&self) -> BTreeMap<CycleType, usize> {
        let mut out = BTreeMap::new();
        for (_, t) in &self.observations {
            *out.entry(t.clone()).or_insert(0) += 1;
        }
        out
    }

    pub fn parity_history(&self) -> Vec<i8> {
        self.observations.iter().map(|(_, t)| t.parity()).collect()
    }

    pub fn distinct_types(&self) -> usize {
        self.observed_types().len()
    }

    pub fn count_of(&self, parts: &[usize]) -> usize {
        let t = CycleType::new(parts.to_vec());
        self.observations.iter().filter(|(_, o)| *o == t).count()
    }

    pub fn even_fraction(&self) -> f64 {
        if self.observations.is_empty() {
            return 0.0;
        }
        let even = self
            .observations
            .iter()
            .filter(|(_, t)| t.parity() == 1)
            .count();
        even as f64 / self.observations.len() as f64
    }

    /// Observed types outside `allowed`, with the first prime showing each.
    pub fn types_outside(&self, allowed: &BTreeSet<CycleType>) -> Vec<(u64, CycleType)> {
        let mut seen = BTreeSet::new();
        self.observations
            .iter()
            .filter(|(_, t)| !allowed.contains(t) && seen.insert(t.clone()))
            .cloned()
            .collect()
    }
}

impl Serialize for EvidenceProfile {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Wire<'a> {
            id: &'a str,
            primes_scanned: String,
            good_primes: String,
            bad_primes: Vec<String>,
            observed_types: BTreeMap<String, String>,
            parity_history: Vec<i8>,
        }
        Wire {
            id: &self.id,
            primes_scanned: self.primes_scanned.to_string(),
            good_primes: self.good_primes().to_string(),
            bad_primes: self.bad_primes.iter().map(u64::to_string).collect(),
            observed_types: self
                .observed_types()
                .into_iter()
                .map(|(t, c)| (t.exponent_string(), c.to_string()))
                .collect(),
            parity_history: self.parity_history(),
        }
        .serialize(s)
    }
}

/// Frobenius types of `f` at its first `budget` good primes.
pub fn scan(f: &PolyQ, budget: usize) -> Result<EvidenceProfile> {
    scan_with(f, budget, "f", &Thresholds::default())
}

pub fn scan_with(
    f: &PolyQ,
    budget: usize,
    id: &str,
    limits: &Thresholds,
) -> Result<EvidenceProfile> {
    if f.degree().unwrap_or(0) == 0 {
        return Err(Error::ConstantPolynomial);
    }
    let mut bad = Vec::new();
    let mut good = Vec::new();
    let max = budget.saturating_mul(limits.search_factor).max(1);
    let scanned = walk(&[f], max, |p, obs| {
        match &obs[0] {
            Observation::Good(t) => good.push((p, t.clone())),
            Observation::Bad => bad.push(p),
        }
        if good.len() >= budget {
            ControlFlow::Break(())
        } else {
            ControlFlow::Continue(())
        }
    })?;
    if good.len() < budget.min(limits.min_good_primes) {
        return Err(Error::TooFewGoodPrimes {
            found: good.len(),
            searched: scanned,
        });
    }
    Ok(EvidenceProfile {
        id: id.to_string(),
        primes_scanned: scanned,
        bad_primes: bad,
        observations: good,
    })
}

fn partitions(m: usize, max: usize, prefix: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
    if m == 0 {
        out.push(prefix.clone());
        return;
    }
    for part in (1..=m.min(max)).rev() {
        prefix.push(part);
        partitions(m - part, part, prefix, out);
        prefix.pop();
    }
}

/// Whether `k` nonzero elements of `Z_n` can sum to zero.
fn zero_sum_possible(n: usize, k: usize) -> bool {
    match k {
        0 => true,
        1 => false,
        _ => n > 2 || k.is_multiple_of(2),
    }
}

/// All cycle types of `(C_n ≀ S_m)°` acting on `n·m` points.
///
/// An element `(x, σ)` moves each `σ`-cycle of length `ℓ` as one `nℓ`-cycle
/// when the twists along it sum to a nonzero `t`, and as `n` cycles of length
/// `ℓ` when they sum to zero; the twist sums must add up to zero overall.
pub fn predict_wreath_types(n: usize, m: usize) -> Result<BTreeSet<CycleType>> {
    if n != 2 && n != 3 {
        return Err(Error::UnsupportedWreath(n));
    }
    let mut parts = Vec::new();
    partitions(m, m, &mut Vec::new(), &mut parts);
    let mut out = BTreeSet::new();
    for partition in parts {
        // Distinct lengths with multiplicities; pick how many of each twist.
        let mut groups: Vec<(usize, usize)> = Vec::new();
        for &l in &partition {
            match groups.last_mut() {
                Some((len, c)) if *len == l => *c += 1,
                _ => groups.push((l, 1)),
            }
        }
        let mut choice = vec![0usize; groups.len()];
        loop {
            let twisted: usize = choice.iter().sum();
            if zero_sum_possible(n, twisted) {
                let mut cycle = Vec::new();
                for (&(l, c), &k) in groups.iter().zip(&choice) {
                    cycle.extend(std::iter::repeat_n(n * l, k));
                    cycle.extend(std::iter::repeat_n(l, n * (c - k)));
                }
                out.insert(CycleType::new(cycle));
            }
            // Odometer over 0..=multiplicity per group.
            let mut i = 0;
            while i < choice.len() {
                if choice[i] < groups[i].1 {
                    choice[i] += 1;
                    break;
                }
                choice[i] = 0;
                i += 1;
            }
            if i == choice.len() {
                break;
            }
        }
    }
    Ok(out)
}

/// Witnesses that `Gal(f/Q)` is the full symmetric group `S_n`.
///
/// Soundness, for `G = Gal(f/Q)` on the `n` roots:
/// 1. A Frobenius element with type `{n}` is an `n`-cycle, so `G` is transitive.
/// 2. Type `{n-1, 1}` gives a point stabilizer transitive on the remaining
///    `n-1` points, so `G` is 2-transitive, hence primitive.
/// 3. Type with a single part `q` (prime, `q <= n-3`) dividing no other part:
///    raising that element to the lcm `L` of the other parts kills them and,
///    as `gcd(q, L) = 1`, leaves a `q`-cycle. Jordan's theorem: a primitive
///    group of degree `n` containing a `q`-cycle for a prime `q <= n-3`
///    contains `A_n`.
/// 4. `disc f` not a rational square means `G` is not inside `A_n`.
///
/// Together `G = S_n`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SymmetricCertificate {
    pub degree: usize,
    pub transitive_prime: u64,
    pub primitive_prime: u64,
    pub jordan_prime: u64,
    pub jordan_q: usize,
    pub disc_nonsquare: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "outcome", rename_all = "kebab-case")]
pub enum Certification {
    Certified(SymmetricCertificate),
    Inconclusive {
        reason: String,
        primes_scanned: usize,
    },
}

fn is_small_prime(q: usize) -> bool {
    q >= 2
        && (2..q)
            .take_while(|d| d * d <= q)
            .all(|d| !q.is_multiple_of(d))
}

/// The Jordan prime isolated by `t`, if any: the smallest prime `q <= n-3`
/// appearing exactly once in `t` and dividing no other part.
pub fn jordan_witness(t: &CycleType) -> Option<usize> {
    let n = t.degree();
    let mut candidates: Vec<usize> = t
        .parts()
        .iter()
        .copied()
        .filter(|&q| is_small_prime(q) && q + 3 <= n && t.count(q) == 1)
        .filter(|&q| t.parts().iter().all(|&l| l == q || l % q != 0))
        .collect();
    candidates.sort_unstable();
    candidates.first().copied()
}

impl SymmetricCertificate {
    /// Re-derives every witness from scratch; `Ok(())` iff all hold for `f`.
    pub fn revalidate(&self, f: &PolyQ) -> Result<()> {
        let n = f.degree().ok_or(Error::ZeroPolynomial)?;
        let fail = |what: String| Err(Error::Inconsistent(what));
        if n != self.degree {
            return fail(format!("degree {n} differs from certified {}", self.degree));
        }
        let type_at = |p: u64| -> Result<CycleType> {
            match observe(f, p)? {
                Observation::Good(t) => Ok(t),
                Observation::Bad => Err(Error::Inconsistent(format!("{p} is a bad prime"))),
            }
        };
        if type_at(self.transitive_prime)?.parts() != [n] {
            return fail(format!("no {n}-cycle at {}", self.transitive_prime));
        }
        if n > 1 && type_at(self.primitive_prime)?.parts() != [n - 1, 1] {
            return fail(format!(
                "no ({}, 1) type at {}",
                n - 1,
                self.primitive_prime
            ));
        }
        let jt = type_at(self.jordan_prime)?;
        let q = self.jordan_q;
        let isolated = is_small_prime(q)
            && q + 3 <= n
            && jt.count(q) == 1
            && jt.parts().iter().all(|&l| l == q || l % q != 0);
        if !isolated {
            return fail(format!(
                "type {jt} at {} does not isolate a {q}-cycle",
                self.jordan_prime
            ));
        }
        let nonsquare = !arith::is_square(&poly::discriminant(f)?);
        if !nonsquare || !self.disc_nonsquare {
            return fail("discriminant is a square".into());
        }
        Ok(())
    }
}

/// Searches the first `budget` primes for the witnesses of
/// [`SymmetricCertificate`].
pub fn certify_symmetric(f: &PolyQ, budget: usize) -> Result<Certification> {
    let n = f.degree().ok_or(Error::ZeroPolynomial)?;
    let disc = poly::discriminant(f)?;
    if disc == arith::BigRational::from_integer(0.into()) {
        return Err(Error::Degenerate("discriminant is zero"));
    }
    let disc_nonsquare = !arith::is_square(&disc);
    let (mut transitive, mut primitive, mut jordan) = (None, None, None);
    let scanned = walk(&[f], budget, |p, obs| {
        if let Observation::Good(t) = &obs[0] {
            if transitive.is_none() && t.parts() == [n] {
                transitive = Some(p);
            }
            if primitive.is_none() && n > 1 && t.parts() == [n - 1, 1] {
                primitive = Some(p);
            }
            if jordan.is_none() {
                jordan = jordan_witness(t).map(|q| (p, q));
            }
        }
        if transitive.is_some() && primitive.is_some() && jordan.is_some() {
            ControlFlow::Break(())
        } else {
            ControlFlow::Continue(())
        }
    })?;
    let missing: Vec<&str> = [
        (transitive.is_none(), "irreducible reduction"),
        (primitive.is_none(), "(n-1, 1) reduction"),
        (jordan.is_none(), "isolated small prime cycle"),
        (!disc_nonsquare, "non-square discriminant"),
    ]
    .iter()
    .filter(|(m, _)| *m)
    .map(|(_, w)| *w)
    .collect();
    if !missing.is_empty() {
        return Ok(Certification::Inconclusive {
            reason: format!("missing: {}", missing.join(", ")),
            primes_scanned: scanned,
        });
    }
    let (jordan_prime, jordan_q) = jordan.expect("checked");
    Ok(Certification::Certified(SymmetricCertificate {
        degree: n,
        transitive_prime: transitive.expect("checked"),
        primitive_prime: primitive.expect("checked"),
        jordan_prime,
        jordan_q,
        disc_nonsquare,
    }))
}

/// Result of comparing Frobenius parities of several polynomials.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LinkageReport {
    /// Common good primes examined.
    pub primes_checked: usize,
    pub primes_scanned: usize,
    /// Primes where the parities disagree with the expected relation.
    pub violations: Vec<u64>,
}

impl LinkageReport {
    pub fn linked(&self) -> bool {
        self.violations.is_empty()
    }
}

fn linkage(
    polys: &[&PolyQ],
    budget: usize,
    relation: impl Fn(&[i8]) -> bool,
) -> Result<LinkageReport> {
    for f in polys {
        if poly::discriminant(f)? == arith::BigRational::from_integer(0.into()) {
            return Err(Error::Degenerate("discriminant is zero"));
        }
    }
    let limits = Thresholds::default();
    let mut checked = 0;
    let mut violations = Vec::new();
    let scanned = walk(
        polys,
        budget.saturating_mul(limits.search_factor),
        |p, obs| {
            let parities: Option<Vec<i8>> = obs
                .iter()
                .map(|o| match o {
                    Observation::Good(t) => Some(t.parity()),
                    Observation::Bad => None,
                })
                .collect();
            if let Some(par) = parities {
                checked += 1;
                if !relation(&par) {
                    violations.push(p);
                }
            }
            if checked >= budget {
                ControlFlow::Break(())
            } else {
                ControlFlow::Continue(())
            }
        },
    )?;
    Ok(LinkageReport {
        primes_checked: checked,
        primes_scanned: scanned,
        violations,
    })
}

/// Checks `parity(Frob_p | f) = parity(Frob_p | g)` at common good primes.
/// By the parity law this holds at every prime when `disc f ≡ disc g`
/// modulo squares; a violation proves the classes differ.
pub fn parity_linkage(f: &PolyQ, g: &PolyQ, budget: usize) -> Result<LinkageReport> {
    linkage(&[f, g], budget, |p| p[0] == p[1])
}

/// Checks `parity(f) = parity(h2) · parity(h3)` at common good primes.
pub fn triple_parity_linkage(
    f: &PolyQ,
    h2: &PolyQ,
    h3: &PolyQ,
    budget: usize,
) -> Result<LinkageReport> {
    linkage(&[f, h2, h3], budget, |p| p[0] == p[1] * p[2])
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ct(parts: &[usize]) -> CycleType {
        CycleType::new(parts.to_vec())
    }

    #[test]
    fn quadratic_scan() {
        let f = PolyQ::from_ints(&[1, 0, 1]);
        let profile = scan(&f, 3).unwrap();
        assert_eq!(profile.good_primes(), 3);
        assert_eq!(profile.bad_primes, vec![2]);
        for (_, t) in &profile.observations {
            assert!(*t == ct(&[2]) || *t == ct(&[1, 1]));
        }
        // The parity history matches the types.
        assert_eq!(profile.parity_history(), vec![-1, 1, -1]);
    }

    #[test]
    fn too_few_good_primes() {
        // A perfect square is never squarefree mod p.
        let f = PolyQ::from_ints(&[1, 2, 1]);
        assert!(matches!(
            scan(&f, 10),
            Err(Error::TooFewGoodPrimes { found: 0, .. })
        ));
    }

    #[test]
    fn small_wreath_predictions() {
        let set = predict_wreath_types(3, 1).unwrap();
        assert_eq!(set.into_iter().collect::<Vec<_>>(), vec![ct(&[1, 1, 1])]);
        let set = predict_wreath_types(2, 2).unwrap();
        let expect: BTreeSet<CycleType> = [ct(&[1, 1, 1, 1]), ct(&[2, 2])].into_iter().collect();
        assert_eq!(set, expect);
        let big = predict_wreath_types(3, 8).unwrap();
        assert!(!big.contains(&ct(&[24])));
        assert!(big.contains(&ct(&[8, 8, 8])));
        assert!(big.iter().all(|t| t.degree() == 24));
        assert!(predict_wreath_types(4, 2).is_err());
    }

    #[test]
    fn jordan_witnesses() {
        assert_eq!(jordan_witness(&ct(&[7, 5, 4, 3, 2, 1, 1, 1])), Some(3));
        assert_eq!(jordan_witness(&ct(&[6, 3, 1])), None);
        assert_eq!(jordan_witness(&ct(&[5, 5, 14])), None);
        assert_eq!(jordan_witness(&ct(&[21, 2, 1])), Some(2));
        assert_eq!(jordan_witness(&ct(&[21, 3])), None);
        assert_eq!(jordan_witness(&ct(&[19, 4, 1])), Some(19));
    }

    #[test]
    fn self_linkage() {
        let f = PolyQ::from_ints(&[-1, -1, 0, 0, 0, 1]);
        let r = parity_linkage(&f, &f, 50).unwrap();
        assert!(r.linked());
        assert_eq!(r.primes_checked, 50);
    }
}
