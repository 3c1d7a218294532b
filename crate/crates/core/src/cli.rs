//! Command-line front end.
//!
//! Exit codes: 0 when the computation succeeds and every check passes, 1 on a
//! failed check or an IO/computation error, 2 on a usage error.

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use crate::appendix::{am_gamma_series, compare_solutions_report, gamma_vergne, r_series};
use crate::free_lie::{bch, HallBasis};
use crate::kv::{
    beta_series, gamma_odd_series, gamma_series, kv_jet_with, lemma_l14_check,
    passing_pi_conventions, skew_images_rank, verify_eq1_jet, verify_lemma_d2,
    verify_symmetry_order1, PiConvention,
};
use crate::rational::Rational;
use crate::series::{phi1_series, psi_series, Series1};
use crate::trace::{f_consistency_check, verify_eq2_linearized};

pub const ORDER_CAP: usize = 12;

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "kvjet",
    version,
    about = "Exact checks for universal symmetric Kashiwara-Vergne jets"
)]
pub struct Cli {
    #[command(flatten)]
    pub config: Config,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct Config {
    /// Truncation order.
    #[arg(long, global = true, default_value_t = 8)]
    pub order: usize,
    /// The parameter α as "p/q".
    #[arg(long, global = true, default_value = "1/4", allow_hyphen_values = true)]
    pub alpha: Rational,
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    /// Write to this file instead of standard output.
    #[arg(long, global = true)]
    pub output: Option<PathBuf>,
    /// Allow orders above the default cap.
    #[arg(long, global = true)]
    pub unsafe_order: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Pretty,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
#[value(rename_all = "snake_case")]
pub enum SeriesName {
    Phi1,
    Psi,
    Beta,
    Gamma,
    GammaOdd,
    #[value(name = "R")]
    R,
    GammaVergne,
    GammaAm,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ConventionArg {
    Reflected,
    Literal,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print a named series.
    Series {
        #[arg(long, value_enum)]
        name: SeriesName,
    },
    /// Hall coordinates of log(exp x exp y).
    Bch,
    /// The Hall basis and its degree counts.
    Hall,
    /// Check the first equation on the order-two jet.
    VerifyEq1 {
        /// Prefactor convention for π; by default every convention is tried.
        #[arg(long, value_enum)]
        convention: Option<ConventionArg>,
    },
    /// Check the bracket-form kernel of the second y-derivative of the BCH series.
    VerifyD2,
    /// Check the trace equation on the three-dimensional model, linear in ε.
    VerifyTrace {
        #[arg(long, default_value = "0", allow_hyphen_values = true)]
        rho: Rational,
    },
    /// Check A(x, y) = B(-y, -x) at order one.
    VerifySymmetry,
    /// Rank and membership checks for [y, y]-bracket images.
    Independence {
        /// Single index instead of every index that fits the order.
        #[arg(long)]
        n: Option<usize>,
    },
    /// Consistency of the equations with ψ replaced by f = ψ + Σ c t^k.
    FCheck {
        /// Perturbation "k:c", repeatable.
        #[arg(long = "perturb", value_parser = parse_perturbation, allow_hyphen_values = true)]
        perturb: Vec<(usize, Rational)>,
    },
    /// Compare the universal, Vergne and AM jets.
    CompareAppendix,
}

fn parse_perturbation(s: &str) -> Result<(usize, Rational), String> {
    let (k, c) = s
        .split_once(':')
        .ok_or_else(|| format!("expected k:c, got {s:?}"))?;
    let k = k.trim().parse::<usize>().map_err(|e| e.to_string())?;
    let c = c.trim().parse::<Rational>().map_err(|e| e.to_string())?;
    Ok((k, c))
}

/// What a subcommand produced.
pub struct Outcome {
    pub json: Value,
    pub pass: bool,
    /// Set when the natural table is a single series.
    pub series: Option<Series1>,
}

impl Outcome {
    fn report<T: Serialize>(report: &T, pass: bool) -> Result<Self, String> {
        let json = serde_json::to_value(report).map_err(|e| e.to_string())?;
        Ok(Outcome {
            json,
            pass,
            series: None,
        })
    }
}

pub fn execute(cli: &Cli) -> Result<Outcome, String> {
    let cfg = &cli.config;
    let order = cfg.order;
    let alpha = &cfg.alpha;
    let err = |e: crate::Error| e.to_string();
    match &cli.command {
        Command::Series { name } => {
            let series = match name {
                SeriesName::Phi1 => phi1_series(order),
                SeriesName::Psi => psi_series(order),
                SeriesName::Beta => beta_series(alpha, order),
                SeriesName::Gamma => gamma_series(alpha, order),
                SeriesName::GammaOdd => gamma_odd_series(alpha, order),
                SeriesName::R => r_series(order),
                SeriesName::GammaVergne => gamma_vergne(order),
                SeriesName::GammaAm => am_gamma_series(order),
            };
            let name = name
                .to_possible_value()
                .expect("no skipped variants")
                .get_name()
                .to_string();
            let mut json = json!({ "name": name, "order": order, "coeffs": series });
            if matches!(name.as_str(), "beta" | "gamma" | "gamma_odd") {
                json["alpha"] = json!(alpha);
            }
            Ok(Outcome {
                json,
                pass: true,
                series: Some(series),
            })
        }
        Command::Bch => {
            let basis = HallBasis::new(order);
            let z = bch(&basis).map_err(|e| e.to_string())?;
            let coords = basis.expand_in_basis(&z).map_err(|e| e.to_string())?;
            let terms: Vec<Value> = coords
                .into_iter()
                .flat_map(|(d, cs)| {
                    let basis = &basis;
                    cs.into_iter().map(move |(i, c)| {
                        json!({ "degree": d, "hall_word": basis.words()[i].tree.to_string(), "coeff": c })
                    })
                })
                .collect();
            Ok(Outcome {
                json: json!({ "order": order, "terms": terms }),
                pass: true,
                series: None,
            })
        }
        Command::Hall => {
            let basis = HallBasis::new(order);
            let words: Vec<Value> = basis
                .words()
                .iter()
                .map(|w| json!({ "degree": w.degree, "y_degree": w.y_degree, "word": w.tree.to_string() }))
                .collect();
            let json =
                json!({ "order": order, "degree_counts": basis.degree_counts(), "words": words });
            Ok(Outcome {
                json,
                pass: true,
                series: None,
            })
        }
        Command::VerifyEq1 { convention } => {
            let basis = HallBasis::new(order);
            let chosen = match convention {
                Some(ConventionArg::Reflected) => PiConvention::Reflected,
                Some(ConventionArg::Literal) => PiConvention::Literal,
                None => passing_pi_conventions(&basis, alpha)
                    .map_err(err)?
                    .first()
                    .copied()
                    .unwrap_or_default(),
            };
            let jet = kv_jet_with(alpha, order, chosen).map_err(err)?;
            let report = verify_eq1_jet(&basis, &jet).map_err(err)?;
            Outcome::report(&report, report.pass)
        }
        Command::VerifyD2 => {
            let report = verify_lemma_d2(&HallBasis::new(order)).map_err(err)?;
            Outcome::report(&report, report.pass)
        }
        Command::VerifyTrace { rho } => {
            let gamma = gamma_series(alpha, order);
            let report =
                verify_eq2_linearized(alpha, &gamma, rho, order).map_err(|e| e.to_string())?;
            Outcome::report(&report, report.pass)
        }
        Command::VerifySymmetry => {
            let report = verify_symmetry_order1(alpha, order).map_err(err)?;
            Outcome::report(&report, report.pass)
        }
        Command::Independence { n } => {
            let l14: Vec<usize> = match n {
                Some(n) => vec![*n],
                None => (0..).take_while(|n| 2 * n + 3 <= order).collect(),
            };
            let skew: Vec<usize> = match n {
                Some(n) => vec![*n],
                None => (1..).take_while(|n| n + 2 <= order).collect(),
            };
            let mut pass = true;
            let mut l14_rows = Vec::new();
            for n in l14 {
                let ok = lemma_l14_check(n).map_err(err)?;
                pass &= ok;
                l14_rows.push(json!({ "n": n, "degree": 2 * n + 3, "pass": ok }));
            }
            let mut skew_rows = Vec::new();
            for n in skew {
                let (rank, count) = skew_images_rank(n).map_err(err)?;
                pass &= rank == count;
                skew_rows.push(json!({ "n": n, "degree": n + 2, "rank": rank, "count": count, "pass": rank == count }));
            }
            let json =
                json!({ "lemma_l14": l14_rows, "skew_injectivity": skew_rows, "pass": pass });
            Ok(Outcome {
                json,
                pass,
                series: None,
            })
        }
        Command::FCheck { perturb } => {
            let mut f = psi_series(order + 1);
            for (k, c) in perturb {
                if *k > order + 1 {
                    return Err(format!(
                        "perturbation degree {k} exceeds order {}",
                        order + 1
                    ));
                }
                f = &f + &Series1::monomial(*k, c.clone(), order + 1);
            }
            let report = f_consistency_check(&f, alpha).map_err(|e| e.to_string())?;
            Outcome::report(&report, report.consistent)
        }
        Command::CompareAppendix => {
            let report = compare_solutions_report(order).map_err(|e| e.to_string())?;
            Outcome::report(&report, report.pass)
        }
    }
}

/// Render an outcome. Output is a pure function of the outcome.
pub fn render(outcome: &Outcome, format: Format) -> String {
    match (format, &outcome.series) {
        (Format::Json, _) => {
            let mut s =
                serde_json::to_string_pretty(&outcome.json).expect("Value always serializes");
            s.push('\n');
            s
        }
        (Format::Csv, Some(series)) => {
            let mut s = String::from("degree,coefficient\n");
            for (k, c) in series.coeffs().iter().enumerate() {
                s.push_str(&format!("{k},{c}\n"));
            }
            s
        }
        (Format::Pretty, Some(series)) => format!("{}\n", series.pretty("t")),
        (Format::Csv, None) => {
            let mut rows = Vec::new();
            flatten("", &outcome.json, &mut rows);
            let mut s = String::from("key,value\n");
            for (k, v) in rows {
                s.push_str(&format!("{k},{v}\n"));
            }
            s
        }
        (Format::Pretty, None) => {
            let mut rows = Vec::new();
            flatten("", &outcome.json, &mut rows);
            rows.iter().map(|(k, v)| format!("{k}: {v}\n")).collect()
        }
    }
}

fn flatten(prefix: &str, v: &Value, out: &mut Vec<(String, String)>) {
    let key = |k: &str| {
        if prefix.is_empty() {
            k.to_string()
        } else {
            format!("{prefix}.{k}")
        }
    };
    match v {
        Value::Object(map) => {
            for (k, v) in map {
                flatten(&key(k), v, out);
            }
        }
        Value::Array(items) => {
            for (i, v) in items.iter().enumerate() {
                flatten(&key(&i.to_string()), v, out);
            }
        }
        Value::String(s) => out.push((prefix.to_string(), s.clone())),
        other => out.push((prefix.to_string(), other.to_string())),
    }
}

fn first_failure(json: &Value) -> Option<String> {
    let first = json.get("failures")?.get(0)?;
    Some(first.to_string())
}

/// Parse `argv`, run, write the result, and return the exit code.
pub fn run<I, T>(argv: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            if e.exit_code() == 0 {
                let _ = write!(stdout, "{}", e.render());
                return EXIT_OK;
            }
            let _ = write!(stderr, "{}", e.render());
            return EXIT_USAGE;
        }
    };
    let cfg = &cli.config;
    if cfg.order == 0 {
        let _ = writeln!(stderr, "error: --order must be positive");
        return EXIT_USAGE;
    }
    if cfg.order > ORDER_CAP && !cfg.unsafe_order {
        let _ = writeln!(
            stderr,
            "error: --order {} exceeds the cap {ORDER_CAP}; pass --unsafe-order to lift it",
            cfg.order
        );
        return EXIT_USAGE;
    }
    let outcome = match execute(&cli) {
        Ok(o) => o,
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            return EXIT_FAIL;
        }
    };
    let text = render(&outcome, cfg.format);
    let written = match &cfg.output {
        Some(path) => fs::write(path, text.as_bytes()),
        None => stdout.write_all(text.as_bytes()),
    };
    if let Err(e) = written {
        let _ = writeln!(stderr, "error: cannot write output: {e}");
        return EXIT_FAIL;
    }
    if outcome.pass {
        EXIT_OK
    } else {
        let detail = first_failure(&outcome.json)
            .map(|f| format!(": first failure {f}"))
            .unwrap_or_default();
        let _ = writeln!(stderr, "check failed{detail}");
        EXIT_FAIL
    }
}
