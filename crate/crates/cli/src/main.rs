use std::fs;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use cubegalois::arith;
use cubegalois::cube::StickerModel;
use cubegalois::evidence::{self, Certification, Thresholds};
use cubegalois::verify::{self, Report, Status, Suite, Theorem, VerifyOptions};
use cubegalois::{GroupHandle, PolyQ};
use serde_json::json;

#[derive(Parser, Debug)]
#[command(
    name = "cubegalois",
    version,
    about = "Verify cube groups and their Galois realizations"
)]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = ReportFormat::Text)]
    report: ReportFormat,
    /// Worker threads for prime scans (default: logical cores).
    #[arg(long, global = true)]
    jobs: Option<usize>,
    /// Seed for the randomized phase of group construction.
    #[arg(long, global = true)]
    seed: Option<u64>,
    /// Write output here instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Report 0 ms for every check, making reports byte-identical.
    #[arg(long, global = true)]
    no_timing: bool,
    /// Prime budget for parity linkage checks in `verify`.
    #[arg(long, global = true, default_value_t = 300)]
    linkage_primes: usize,
    /// Prime budget for symmetric certification in `verify`.
    #[arg(long, global = true, default_value_t = 2000)]
    certify_primes: usize,
    #[command(subcommand)]
    command: Command,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum ReportFormat {
    Text,
    Json,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum GensFormat {
    Cycles,
    Json,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum CertifyMode {
    Symmetric,
    #[value(name = "wreath-3-8")]
    Wreath38,
    #[value(name = "wreath-2-12")]
    Wreath212,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum TheoremArg {
    Rubik,
    Revenge,
    Professor,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Exact order of a cube group.
    Order {
        #[arg(long, value_parser = clap::value_parser!(u8).range(3..=5))]
        cube: u8,
    },
    /// Dump the generators of a cube group.
    Gens {
        #[arg(long, value_parser = clap::value_parser!(u8).range(3..=5))]
        cube: u8,
        #[arg(long, value_enum, default_value_t = GensFormat::Cycles)]
        format: GensFormat,
    },
    /// Exact discriminant of a polynomial file.
    Disc {
        #[arg(long)]
        poly: PathBuf,
        /// Compare the square class of the discriminant with this integer.
        #[arg(long, allow_hyphen_values = true)]
        square_class_vs: Option<String>,
    },
    /// Frobenius cycle types over the first good primes.
    Frobenius {
        #[arg(long)]
        poly: PathBuf,
        /// Number of good primes.
        #[arg(long)]
        primes: usize,
        #[arg(long, value_enum)]
        certify: Option<CertifyMode>,
    },
    /// Run a theorem check suite.
    Verify {
        #[arg(long, value_enum)]
        theorem: TheoremArg,
    },
}

/// Failure that is the caller's fault (bad file, bad value): exit 2.
struct UsageError(String);

impl<E: std::fmt::Display> From<E> for UsageError {
    fn from(e: E) -> Self {
        UsageError(e.to_string())
    }
}

struct Output {
    text: String,
    failed: bool,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(jobs) = cli.jobs {
        if jobs == 0 {
            eprintln!("error: --jobs must be at least 1");
            return ExitCode::from(2);
        }
        // Only fails if a pool already exists, which cannot happen here.
        let _ = rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build_global();
    }
    if cli.linkage_primes == 0 || cli.certify_primes == 0 {
        eprintln!("error: prime budgets must be at least 1");
        return ExitCode::from(2);
    }
    let result = run(&cli);
    let out = match result {
        Ok(out) => out,
        Err(UsageError(msg)) => {
            eprintln!("error: {msg}");
            return ExitCode::from(2);
        }
    };
    let written = match &cli.out {
        Some(path) => fs::write(path, &out.text),
        None => std::io::stdout().write_all(out.text.as_bytes()),
    };
    if let Err(e) = written {
        eprintln!("error: cannot write output: {e}");
        return ExitCode::from(2);
    }
    if out.failed {
        ExitCode::from(1)
    } else {
        ExitCode::SUCCESS
    }
}

fn options(cli: &Cli) -> VerifyOptions {
    VerifyOptions {
        timing: !cli.no_timing,
        linkage_budget: cli.linkage_primes,
        certify_budget: cli.certify_primes,
        ..VerifyOptions::default()
    }
}

fn read_poly(path: &PathBuf) -> Result<PolyQ, UsageError> {
    let text =
        fs::read_to_string(path).map_err(|e| UsageError(format!("{}: {e}", path.display())))?;
    PolyQ::from_json(&text).map_err(|e| UsageError(format!("{}: {e}", path.display())))
}

fn render(cli: &Cli, report: &Report, extra: Option<(&str, serde_json::Value)>) -> String {
    match cli.report {
        ReportFormat::Text => report.to_text(),
        ReportFormat::Json => {
            let mut value = serde_json::to_value(report).expect("report serializes");
            if let Some((key, v)) = extra {
                value[key] = v;
            }
            serde_json::to_string_pretty(&value).expect("json") + "\n"
        }
    }
}

fn run(cli: &Cli) -> Result<Output, UsageError> {
    match &cli.command {
        Command::Order { cube } => {
            let model = StickerModel::for_size(*cube as usize)?;
            let group = match cli.seed {
                Some(seed) => GroupHandle::build_seeded(&model.generator_perms(), seed)?,
                None => model.group().clone(),
            };
            let order = group.order().to_string();
            let text = match cli.report {
                ReportFormat::Text => format!("{order}\n"),
                ReportFormat::Json => {
                    let v = json!({
                        "cube": cube.to_string(),
                        "degree": model.degree().to_string(),
                        "order": order,
                    });
                    serde_json::to_string_pretty(&v).expect("json") + "\n"
                }
            };
            Ok(Output {
                text,
                failed: false,
            })
        }
        Command::Gens { cube, format } => {
            let model = StickerModel::for_size(*cube as usize)?;
            let words = model.generator_words();
            let json_out = *format == GensFormat::Json || cli.report == ReportFormat::Json;
            let text = if json_out {
                let gens: Vec<_> = words
                    .iter()
                    .map(|(n, c)| json!({ "name": n, "cycles": c }))
                    .collect();
                let v = json!({ "cube": cube.to_string(), "degree": model.degree().to_string(), "generators": gens });
                serde_json::to_string_pretty(&v).expect("json") + "\n"
            } else {
                words.iter().map(|(n, c)| format!("{n} = {c}\n")).collect()
            };
            Ok(Output {
                text,
                failed: false,
            })
        }
        Command::Disc {
            poly,
            square_class_vs,
        } => {
            let f = read_poly(poly)?;
            let versus = match square_class_vs {
                Some(s) => {
                    let v = arith::parse_rational(s)?;
                    if v == arith::BigRational::from_integer(0.into()) {
                        return Err(UsageError("square class of 0 is undefined".into()));
                    }
                    Some(v)
                }
                None => None,
            };
            let report = Report::new(verify::disc_report(&f, versus.as_ref(), &options(cli))?);
            Ok(Output {
                text: render(cli, &report, None),
                failed: report.failed(),
            })
        }
        Command::Frobenius {
            poly,
            primes,
            certify,
        } => {
            let f = read_poly(poly)?;
            if *primes == 0 {
                return Err(UsageError("--primes must be at least 1".into()));
            }
            let opts = options(cli);
            let profile = evidence::scan_with(
                &f,
                *primes,
                &poly.display().to_string(),
                &Thresholds::default(),
            )?;
            let mut suite = Suite::new("frobenius", &opts);
            suite.check("scan", "Frobenius cycle types", || {
                Ok((
                    Status::Pass,
                    format!("{primes} good primes"),
                    format!(
                        "{} good primes in {} scanned, {} distinct types",
                        profile.good_primes(),
                        profile.primes_scanned,
                        profile.distinct_types()
                    ),
                ))
            });
            match certify {
                Some(CertifyMode::Symmetric) => {
                    suite.check("certify-symmetric", "Jordan chain for S_n", || {
                        match evidence::certify_symmetric(&f, *primes)? {
                            Certification::Certified(c) => {
                                c.revalidate(&f)?;
                                Ok((
                                    Status::Pass,
                                    "certificate".into(),
                                    serde_json::to_string(&c).expect("json"),
                                ))
                            }
                            Certification::Inconclusive {
                                reason,
                                primes_scanned,
                            } => Ok((
                                Status::Inconclusive,
                                "certificate".into(),
                                format!("{reason} after {primes_scanned} primes"),
                            )),
                        }
                    })
                }
                Some(mode) => {
                    let (n, m) = if *mode == CertifyMode::Wreath38 {
                        (3, 8)
                    } else {
                        (2, 12)
                    };
                    suite.check(
                        &format!("types-in-wreath-{n}-{m}"),
                        "predicted wreath cycle types",
                        || {
                            let allowed = evidence::predict_wreath_types(n, m)?;
                            let outside = profile.types_outside(&allowed);
                            let actual = match outside.first() {
                                None => "all observed types predicted".to_string(),
                                Some((p, t)) => format!("type {t} at p = {p} is not predicted"),
                            };
                            Ok((
                                Status::from_bool(outside.is_empty()),
                                format!("types within (C{n} wr S{m})°"),
                                actual,
                            ))
                        },
                    )
                }
                None => {}
            }
            let report = Report::new(suite.finish());
            let text = match cli.report {
                ReportFormat::Json => render(
                    cli,
                    &report,
                    Some(("profile", serde_json::to_value(&profile).expect("json"))),
                ),
                ReportFormat::Text => {
                    let mut s = String::new();
                    let mut types: Vec<_> = profile.observed_types().into_iter().collect();
                    types.sort_by(|a, b| b.1.cmp(&a.1).then_with(|| a.0.cmp(&b.0)));
                    for (t, count) in types {
                        s.push_str(&format!("{count:>6}  {}\n", t.exponent_string()));
                    }
                    let bad: Vec<String> = profile.bad_primes.iter().map(u64::to_string).collect();
                    s.push_str(&format!(
                        "bad primes: {}\n",
                        if bad.is_empty() {
                            "none".into()
                        } else {
                            bad.join(" ")
                        }
                    ));
                    s.push_str(&format!("even fraction: {:.3}\n", profile.even_fraction()));
                    s + &report.to_text()
                }
            };
            Ok(Output {
                text,
                failed: report.failed(),
            })
        }
        Command::Verify { theorem } => {
            let which = match theorem {
                TheoremArg::Rubik => Theorem::Rubik,
                TheoremArg::Revenge => Theorem::Revenge,
                TheoremArg::Professor => Theorem::Professor,
            };
            let report = Report::new(verify::verify_theorem(which, &options(cli)));
            Ok(Output {
                text: render(cli, &report, None),
                failed: report.failed(),
            })
        }
    }
}
