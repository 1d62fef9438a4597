//! Independent oracles shared by the integration tests.
#![allow(dead_code)]

use std::collections::BTreeSet;

use cubegalois::modp;
use cubegalois::{CycleType, Permutation};
use num_bigint::BigUint;

pub fn factorial(n: u32) -> BigUint {
    (1..=n).map(BigUint::from).product()
}

/// Polynomials over F_p as ascending coefficient vectors, for the brute-force
/// factorization oracle.
fn trim(mut v: Vec<u64>) -> Vec<u64> {
    while v.last() == Some(&0) {
        v.pop();
    }
    v
}

fn rem(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let mut r = a.to_vec();
    let db = b.len() - 1;
    let inv = modp::inv_mod(b[db], p);
    while r.len() > db && !r.is_empty() {
        let k = r.len() - 1;
        let c = r[k] * inv % p;
        for i in 0..=db {
            r[k - db + i] = (r[k - db + i] + p * p - c * b[i] % p) % p;
        }
        r = trim(r);
    }
    r
}

fn quo(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let db = b.len() - 1;
    let inv = modp::inv_mod(b[db], p);
    let mut r = a.to_vec();
    let mut q = vec![0; a.len() - db];
    while r.len() > db {
        let k = r.len() - 1;
        let c = r[k] * inv % p;
        q[k - db] = c;
        for i in 0..=db {
            r[k - db + i] = (r[k - db + i] + p * p - c * b[i] % p) % p;
        }
        r = trim(r);
    }
    q
}

/// Factor degrees by trial division with monic polynomials of increasing
/// degree; `None` if a factor repeats.
pub fn brute_factor_degrees(f: &[u64], p: u64) -> Option<Vec<usize>> {
    let mut f = f.to_vec();
    let mut degrees = Vec::new();
    let mut d = 1;
    while f.len() > 1 {
        if 2 * d > f.len() - 1 {
            degrees.push(f.len() - 1);
            break;
        }
        let mut found = false;
        for code in 0..p.pow(d as u32) {
            let mut cand: Vec<u64> = (0..d).map(|i| code / p.pow(i as u32) % p).collect();
            cand.push(1);
            if rem(&f, &cand, p).is_empty() {
                f = quo(&f, &cand, p);
                if rem(&f, &cand, p).is_empty() {
                    return None;
                }
                degrees.push(d);
                found = true;
                break;
            }
        }
        if !found {
            d += 1;
        }
    }
    degrees.sort_unstable_by(|a, b| b.cmp(a));
    Some(degrees)
}

/// All permutations of `1..=m`, by Heap's algorithm.
fn all_perms(m: usize) -> Vec<Vec<usize>> {
    let mut a: Vec<usize> = (1..=m).collect();
    let mut out = vec![a.clone()];
    let mut c = vec![0; m];
    let mut i = 0;
    while i < m {
        if c[i] < i {
            if i % 2 == 0 {
                a.swap(0, i);
            } else {
                a.swap(c[i], i);
            }
            out.push(a.clone());
            c[i] += 1;
            i = 0;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
    out
}

/// Cycle types of `(C_n ≀ S_m)°` acting on `n·m` points, every element
/// written out: `(i, a) -> (σ(i), a + x_σ(i))`, point `i·n + a + 1`.
pub fn brute_wreath_types(n: usize, m: usize) -> BTreeSet<CycleType> {
    let mut types = BTreeSet::new();
    let sigmas = all_perms(m);
    for code in 0..n.pow(m as u32) {
        let x: Vec<usize> = (0..m).map(|i| code / n.pow(i as u32) % n).collect();
        if x.iter().sum::<usize>() % n != 0 {
            continue;
        }
        for s in &sigmas {
            let mut images = vec![0; n * m];
            for i in 0..m {
                let si = s[i] - 1;
                for a in 0..n {
                    images[i * n + a] = si * n + (a + x[si]) % n + 1;
                }
            }
            types.insert(Permutation::from_images(&images).unwrap().cycle_type());
        }
    }
    types
}
