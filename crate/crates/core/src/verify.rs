//! Theorem check suites and the report format.

use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use num_bigint::BigUint;
use serde::{Serialize, Serializer};

use crate::arith::{self, BigRational};
use crate::cube::StickerModel;
use crate::error::{Error, Result};
use crate::evidence::{self, Certification, Thresholds};
use crate::poly::{self, PolyQ};
use crate::structure;
use crate::theorem::{self, TheoremParameters};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skip,
    Inconclusive,
}

impl Status {
    pub fn from_bool(ok: bool) -> Status {
        if ok {
            Status::Pass
        } else {
            Status::Fail
        }
    }

    pub fn label(self) -> &'static str {
        match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::Skip => "SKIP",
            Status::Inconclusive => "INCONCLUSIVE",
        }
    }
}

fn as_string<S: Serializer>(v: &u128, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&v.to_string())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckReport {
    pub id: String,
    pub status: Status,
    pub expected: String,
    pub actual: String,
    pub citation: String,
    #[serde(serialize_with = "as_string")]
    pub ms: u128,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Summary {
    pub pass: usize,
    pub fail: usize,
    pub skip: usize,
    pub inconclusive: usize,
}

impl Serialize for Summary {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = s.serialize_struct("Summary", 4)?;
        st.serialize_field("pass", &self.pass.to_string())?;
        st.serialize_field("fail", &self.fail.to_string())?;
        st.serialize_field("skip", &self.skip.to_string())?;
        st.serialize_field("inconclusive", &self.inconclusive.to_string())?;
        st.end()
    }
}

/// `{"version": 1, "checks": [...], "summary": {...}}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Report {
    pub version: u32,
    pub checks: Vec<CheckReport>,
    pub summary: Summary,
}

impl Report {
    pub fn new(checks: Vec<CheckReport>) -> Self {
        let mut summary = Summary::default();
        for c in &checks {
            match c.status {
                Status::Pass => summary.pass += 1,
                Status::Fail => summary.fail += 1,
                Status::Skip => summary.skip += 1,
                Status::Inconclusive => summary.inconclusive += 1,
            }
        }
        Report {
            version: 1,
            checks,
            summary,
        }
    }

    pub fn failed(&self) -> bool {
        self.summary.fail > 0
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for c in &self.checks {
            out.push_str(&format!("{:<12} {}\n", c.status.label(), c.id));
            out.push_str(&format!("             expected: {}\n", c.expected));
            out.push_str(&format!("             actual:   {}\n", c.actual));
            out.push_str(&format!("             ({}; {} ms)\n", c.citation, c.ms));
        }
        let s = &self.summary;
        out.push_str(&format!(
            "summary: {} pass, {} fail, {} skip, {} inconclusive\n",
            s.pass, s.fail, s.skip, s.inconclusive
        ));
        out
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Theorem {
    Rubik,
    Revenge,
    Professor,
}

impl FromStr for Theorem {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "rubik" => Ok(Theorem::Rubik),
            "revenge" => Ok(Theorem::Revenge),
            "professor" => Ok(Theorem::Professor),
            _ => Err(Error::Parse(format!("unknown theorem {s:?}"))),
        }
    }
}

impl fmt::Display for Theorem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Theorem::Rubik => "rubik",
            Theorem::Revenge => "revenge",
            Theorem::Professor => "professor",
        })
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct VerifyOptions {
    pub linkage_budget: usize,
    pub triple_budget: usize,
    pub certify_budget: usize,
    pub scan_budget: usize,
    /// Record wall times; off gives byte-identical reports.
    pub timing: bool,
    pub thresholds: Thresholds,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions {
            linkage_budget: 300,
            triple_budget: 200,
            certify_budget: 2000,
            scan_budget: 500,
            timing: true,
            thresholds: Thresholds::default(),
        }
    }
}

/// Collects checks, timing each one.
pub struct Suite<'a> {
    prefix: String,
    opts: &'a VerifyOptions,
    checks: Vec<CheckReport>,
}

/// Outcome of one check body: status, expected, actual.
pub type Outcome = (Status, String, String);

impl<'a> Suite<'a> {
    pub fn new(prefix: &str, opts: &'a VerifyOptions) -> Self {
        Suite {
            prefix: prefix.to_string(),
            opts,
            checks: Vec::new(),
        }
    }

    /// Runs `body`; an error becomes a failed check carrying the message.
    pub fn check(&mut self, id: &str, citation: &str, body: impl FnOnce() -> Result<Outcome>) {
        let start = Instant::now();
        let (status, expected, actual) = match body() {
            Ok(o) => o,
            Err(e) => (Status::Fail, "no error".to_string(), format!("error: {e}")),
        };
        let ms = if self.opts.timing {
            start.elapsed().as_millis()
        } else {
            0
        };
        self.checks.push(CheckReport {
            id: format!("{}.{}", self.prefix, id),
            status,
            expected,
            actual,
            citation: citation.to_string(),
            ms,
        });
    }

    pub fn finish(self) -> Vec<CheckReport> {
        self.checks
    }
}

fn equal<T: PartialEq + fmt::Display>(expected: T, actual: T) -> Result<Outcome> {
    Ok((
        Status::from_bool(expected == actual),
        expected.to_string(),
        actual.to_string(),
    ))
}

fn rational_equal(expected: &BigRational, actual: &BigRational) -> Result<Outcome> {
    Ok((
        Status::from_bool(expected == actual),
        arith::format_rational(expected),
        arith::format_rational(actual),
    ))
}

fn class_check(d: &BigRational, target: &BigRational, want: bool) -> Result<Outcome> {
    let same = arith::square_class_equal(d, target)?;
    let describe = |b: bool| {
        if b {
            format!("≡ {} mod squares", arith::format_rational(target))
        } else {
            format!("≢ {} mod squares", arith::format_rational(target))
        }
    };
    Ok((
        Status::from_bool(same == want),
        describe(want),
        describe(same),
    ))
}

fn certify_check(f: &PolyQ, budget: usize) -> Result<Outcome> {
    match evidence::certify_symmetric(f, budget)? {
        Certification::Certified(cert) => {
            cert.revalidate(f)?;
            Ok((
                Status::Pass,
                "Gal = S24 certificate".into(),
                format!(
                    "24-cycle at p={}, (23,1) at p={}, {}-cycle isolated at p={}, disc non-square",
                    cert.transitive_prime, cert.primitive_prime, cert.jordan_q, cert.jordan_prime
                ),
            ))
        }
        Certification::Inconclusive {
            reason,
            primes_scanned,
        } => Ok((
            Status::Inconclusive,
            "Gal = S24 certificate".into(),
            format!("{reason} after {primes_scanned} primes"),
        )),
    }
}

fn linkage_check(report: evidence::LinkageReport) -> Result<Outcome> {
    let actual = if report.linked() {
        format!(
            "0 violations over {} common good primes",
            report.primes_checked
        )
    } else {
        let shown: Vec<String> = report
            .violations
            .iter()
            .take(5)
            .map(u64::to_string)
            .collect();
        format!(
            "{} violations over {} common good primes (first at p = {})",
            report.violations.len(),
            report.primes_checked,
            shown.join(", ")
        )
    };
    Ok((
        Status::from_bool(report.linked()),
        "0 violations".into(),
        actual,
    ))
}

fn types_check(f: &PolyQ, n: usize, m: usize, opts: &VerifyOptions, id: &str) -> Result<Outcome> {
    let allowed = evidence::predict_wreath_types(n, m)?;
    let profile = evidence::scan_with(f, opts.scan_budget, id, &opts.thresholds)?;
    let outside = profile.types_outside(&allowed);
    let actual = if outside.is_empty() {
        format!(
            "{} good primes, {} distinct types, all predicted",
            profile.good_primes(),
            profile.distinct_types()
        )
    } else {
        format!(
            "type {} at p = {} is not predicted",
            outside[0].1, outside[0].0
        )
    };
    Ok((
        Status::from_bool(outside.is_empty()),
        format!(
            "every type in the {} predicted types of (C{n} wr S{m})°",
            allowed.len()
        ),
        actual,
    ))
}

fn order_check(predicted: Result<BigUint>, size: usize) -> Result<Outcome> {
    let predicted = predicted?;
    let model = StickerModel::for_size(size)?;
    equal(predicted, model.group().order())
}

fn corner_checks(s: &mut Suite, params: &TheoremParameters, opts: &VerifyOptions) {
    let target = params.target_rational();
    s.check(
        "disc-f-class",
        "corner polynomial: quadratic subfield Q(sqrt(7c))",
        || class_check(&poly::discriminant(&theorem::f_corner())?, &target, true),
    );
    s.check(
        "types-f-in-wreath-3-8",
        "corner polynomial: group (C3 wr S8)°",
        || types_check(&theorem::f_corner(), 3, 8, opts, "f"),
    );
    s.check(
        "f-no-irreducible-reduction",
        "corner polynomial: no 24-cycle in (C3 wr S8)°",
        || {
            let profile = evidence::scan_with(
                &theorem::f_corner(),
                opts.scan_budget,
                "f",
                &opts.thresholds,
            )?;
            equal(0, profile.count_of(&[24]))
        },
    );
}

fn rubik_suite(s: &mut Suite, params: &TheoremParameters, opts: &VerifyOptions) {
    let target = params.target_rational();
    corner_checks(s, params, opts);
    s.check(
        "disc-f-vs-g",
        "3x3x3 realization: corner/edge discriminant classes (literal)",
        || {
            let (df, dg) = (
                poly::discriminant(&theorem::f_corner())?,
                poly::discriminant(&theorem::g_edge())?,
            );
            let same = arith::square_class_equal(&df, &dg)?;
            Ok((
                Status::from_bool(same),
                "disc f ≡ disc g mod squares".into(),
                format!(
                    "disc f {} disc g; disc g is {}a square",
                    if same { "≡" } else { "≢" },
                    if arith::is_square(&dg) { "" } else { "not " }
                ),
            ))
        },
    );
    s.check(
        "disc-f-vs-g-blocks",
        "3x3x3 realization: sign of corner vs edge-pair permutation",
        || {
            let (df, dg) = (
                poly::discriminant(&theorem::f_corner())?,
                poly::discriminant(&theorem::g_edge_blocks())?,
            );
            let same = arith::square_class_equal(&df, &dg)?;
            Ok((
                Status::from_bool(same),
                "disc f ≡ disc G, g(X) = G(X^2)".into(),
                same.to_string(),
            ))
        },
    );
    s.check(
        "disc-fg-class",
        "3x3x3 realization: quadratic subfield Q(sqrt(7c))",
        || {
            class_check(
                &poly::discriminant(&(&theorem::f_corner() * &theorem::g_edge()))?,
                &target,
                true,
            )
        },
    );
    s.check(
        "types-g-in-wreath-2-12",
        "edge polynomial: group (C2 wr S12)°",
        || types_check(&theorem::g_edge(), 2, 12, opts, "g"),
    );
    s.check(
        "parity-f-g",
        "3x3x3 realization: linked sign characters (literal)",
        || {
            linkage_check(evidence::parity_linkage(
                &theorem::f_corner(),
                &theorem::g_edge(),
                opts.linkage_budget,
            )?)
        },
    );
    s.check(
        "parity-f-g-blocks",
        "3x3x3 realization: linked sign characters via G",
        || {
            linkage_check(evidence::parity_linkage(
                &theorem::f_corner(),
                &theorem::g_edge_blocks(),
                opts.linkage_budget,
            )?)
        },
    );
    s.check("order", "3x3x3 group: fiber product order", || {
        order_check(structure::r3_predicted_order(), 3)
    });
}

fn revenge_suite(s: &mut Suite, params: &TheoremParameters, opts: &VerifyOptions) {
    let target = params.target_rational();
    corner_checks(s, params, opts);
    s.check(
        "t-coefficient",
        "4x4x4 realization: trinomial coefficient t(1)",
        || rational_equal(&theorem::trinomial_u(&theorem::g_revenge())?, &params.t),
    );
    s.check(
        "t-closed-form",
        "4x4x4 realization: t(1) = -2^67 3^24 / (23^23 Q)",
        || rational_equal(&params.expected_t(), &params.t),
    );
    s.check(
        "disc-g-class",
        "4x4x4 realization: disc g in the class of 7c",
        || class_check(&poly::trinomial_disc(&params.t)?, &target, true),
    );
    s.check(
        "parity-f-g",
        "4x4x4 realization: linked sign characters",
        || {
            linkage_check(evidence::parity_linkage(
                &theorem::f_corner(),
                &theorem::g_revenge(),
                opts.linkage_budget,
            )?)
        },
    );
    s.check(
        "disc-h-class",
        "4x4x4 realization: X^24 - X - 1 is an independent factor",
        || {
            class_check(
                &poly::trinomial_disc(&BigRational::from_integer(1.into()))?,
                &target,
                false,
            )
        },
    );
    s.check("certify-g", "4x4x4 realization: Gal(g) = S24", || {
        certify_check(&theorem::g_revenge(), opts.certify_budget)
    });
    s.check("certify-h", "4x4x4 realization: Gal(h) = S24", || {
        certify_check(&theorem::h_revenge(), opts.certify_budget)
    });
    s.check(
        "order",
        "4x4x4 group: fiber product order times 24!",
        || order_check(structure::r4_predicted_order(), 4),
    );
}

fn professor_suite(s: &mut Suite, params: &TheoremParameters, opts: &VerifyOptions) {
    let target = params.target_rational();
    let p = params;
    s.check(
        "identity-32q",
        "5x5x5 parameters: 23*7c + 1 = 32*Q = 16*z",
        || {
            let lhs: num_bigint::BigInt = &p.target * 23 + 1;
            let q32: num_bigint::BigInt = &p.q_const * 32;
            let z16: num_bigint::BigInt = &p.z * 16;
            Ok((
                Status::from_bool(lhs == q32 && lhs == z16),
                q32.to_string(),
                lhs.to_string(),
            ))
        },
    );
    s.check(
        "identity-p2",
        "5x5x5 parameters: 23z - r^2 = 3^5*7*p2",
        || {
            equal(
                arith::factored_constant(&[(3, 5), (7, 1)]) * &p.p2,
                &p.z * 23 - &p.r * &p.r,
            )
        },
    );
    s.check(
        "identity-v2-square",
        "5x5x5 parameters: 23*v2 + 1 is a square",
        || {
            let v =
                BigRational::from_integer(23.into()) * &p.v2 + BigRational::from_integer(1.into());
            Ok((
                Status::from_bool(arith::is_square(&v)),
                "a rational square".into(),
                arith::format_rational(&v),
            ))
        },
    );
    s.check(
        "u2-coefficient",
        "5x5x5 realization: coefficient of h2",
        || rational_equal(&theorem::trinomial_u(&theorem::h2())?, &p.u2),
    );
    s.check(
        "u3-coefficient",
        "5x5x5 realization: coefficient of h3",
        || rational_equal(&theorem::trinomial_u(&theorem::h3())?, &p.u3),
    );
    s.check(
        "u1-derived-vs-literal",
        "5x5x5 realization: coefficient of h1 (derived at v1 = 1)",
        || {
            let lit = theorem::trinomial_u(&theorem::h1_literal())?;
            let ratio = &p.u1 / &lit;
            Ok((
                Status::from_bool(lit == p.u1),
                arith::format_rational(&p.u1),
                format!(
                    "{} (derived / printed = {})",
                    arith::format_rational(&lit),
                    arith::format_rational(&ratio)
                ),
            ))
        },
    );
    s.check(
        "disc-h1-derived",
        "5x5x5 realization: disc h1 ≡ 7c (derived u1)",
        || class_check(&poly::trinomial_disc(&p.u1)?, &target, true),
    );
    s.check(
        "disc-h1-literal",
        "5x5x5 realization: disc h1 ≡ 7c (printed h1)",
        || class_check(&poly::discriminant(&theorem::h1_literal())?, &target, true),
    );
    s.check(
        "disc-h2-h3",
        "5x5x5 realization: disc h2 * disc h3 ≡ 7c",
        || {
            class_check(
                &(poly::trinomial_disc(&p.u2)? * poly::trinomial_disc(&p.u3)?),
                &target,
                true,
            )
        },
    );
    s.check(
        "disc-f-vs-g-blocks",
        "5x5x5 realization: corner/edge-pair sign link",
        || {
            let (df, dg) = (
                poly::discriminant(&theorem::f_corner())?,
                poly::discriminant(&theorem::g_edge_blocks())?,
            );
            let same = arith::square_class_equal(&df, &dg)?;
            Ok((
                Status::from_bool(same),
                "disc f ≡ disc G, g(X) = G(X^2)".into(),
                same.to_string(),
            ))
        },
    );
    for (id, h) in [
        ("certify-h1-derived", p.h1_derived()),
        ("certify-h1-literal", theorem::h1_literal()),
        ("certify-h2", theorem::h2()),
        ("certify-h3", theorem::h3()),
    ] {
        s.check(id, "5x5x5 realization: Gal(h_i) = S24", || {
            certify_check(&h, opts.certify_budget)
        });
    }
    s.check(
        "parity-f-h1-derived",
        "5x5x5 realization: sign link of h1 (derived u1)",
        || {
            linkage_check(evidence::parity_linkage(
                &theorem::f_corner(),
                &p.h1_derived(),
                opts.linkage_budget,
            )?)
        },
    );
    s.check(
        "parity-f-h1-literal",
        "5x5x5 realization: sign link of h1 (printed h1)",
        || {
            linkage_check(evidence::parity_linkage(
                &theorem::f_corner(),
                &theorem::h1_literal(),
                opts.linkage_budget,
            )?)
        },
    );
    s.check(
        "triple-parity-f-h2-h3",
        "5x5x5 realization: sign link of h2*h3",
        || {
            linkage_check(evidence::triple_parity_linkage(
                &theorem::f_corner(),
                &theorem::h2(),
                &theorem::h3(),
                opts.triple_budget,
            )?)
        },
    );
    s.check("order", "5x5x5 group: |R3| (24!)^3 / 4", || {
        order_check(structure::r5_predicted_order(), 5)
    });
}

/// Runs one theorem suite. Failures are report entries, never errors.
pub fn verify_theorem(which: Theorem, opts: &VerifyOptions) -> Vec<CheckReport> {
    let mut s = Suite::new(&which.to_string(), opts);
    let params = match theorem::derive_parameters() {
        Ok(p) => p,
        Err(e) => {
            s.check("parameters", "trinomial parameter derivation", || Err(e));
            return s.finish();
        }
    };
    match which {
        Theorem::Rubik => rubik_suite(&mut s, &params, opts),
        Theorem::Revenge => revenge_suite(&mut s, &params, opts),
        Theorem::Professor => professor_suite(&mut s, &params, opts),
    }
    s.finish()
}

/// Discriminant of `f`, optionally compared with a square class.
pub fn disc_report(
    f: &PolyQ,
    versus: Option<&BigRational>,
    opts: &VerifyOptions,
) -> Result<Vec<CheckReport>> {
    let d = poly::discriminant(f)?;
    let mut s = Suite::new("disc", opts);
    let shown = arith::format_rational(&d);
    s.check("value", "exact discriminant", || {
        Ok((Status::Pass, "disc f".into(), shown))
    });
    if let Some(v) = versus {
        s.check("square-class", "square class comparison", || {
            class_check(&d, v, true)
        });
    }
    Ok(s.finish())
}
