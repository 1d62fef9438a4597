//! Independent oracles for the integration tests.

use cubegalois::modp;

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
