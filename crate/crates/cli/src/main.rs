//! `kacjet`: command-line front end for the kacjet library.

use std::collections::BTreeMap;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use kacjet::bruteforce::{
    absolutely_indecomposable_count, ask_counts, count_iso_classes, enumerate_orbits, jet_counts,
    moment_fiber_count, LinearFamily,
};
use kacjet::exactalg::rat;
use kacjet::hall::{orbit_labels, HallAlgebra, HallFunction, Orbit, Specialization};
use kacjet::kacpoly::{
    gloop_a2, gloop_a3, gloop_kac_from_recurrence, gloop_kac_from_zeta, gloop_z, kronecker_a,
    kronecker_kac_from_zeta, kronecker_z, limit_a, limit_b, order_complex_hilbert, poincare_from_zeta_at,
    rank1_fiber_count, toric_kac_trees, toric_kac_chains,
};
use kacjet::verify::{run_suites, Suite};
use kacjet::{Caps, Error, QPolynomial, Quiver, RationalFunction};
use serde_json::{json, Value};

const EXIT_USAGE: u8 = 2;
const EXIT_CAP: u8 = 3;
const EXIT_VERIFY: u8 = 4;

#[derive(Parser)]
#[command(name = "kacjet", version, about = "Kac polynomials, moment-map fibers and jet counts over F_q[t]/(t^alpha)")]
struct Cli {
    #[command(flatten)]
    common: Common,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Common {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,
    /// Largest brute-force space, as log2 of its point count.
    #[arg(long, default_value_t = 24, global = true)]
    max_space_log2: u32,
    /// Largest group enumerated element by element.
    #[arg(long, default_value_t = 100_000, global = true)]
    max_group: u64,
    /// Worker threads for counting sums (default: all cores).
    #[arg(long, global = true)]
    jobs: Option<usize>,
    /// Also write the JSON record to this file.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Method {
    Trees,
    Chains,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum SuiteArg {
    Symbolic,
    Brute,
    Cross,
    Hall,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ZetaOf {
    Gloop,
    Kronecker,
}

#[derive(Subcommand)]
enum Command {
    /// Kac polynomial in rank (1,...,1), or a brute-force count over F_q in any rank.
    Kac {
        #[arg(long)]
        quiver: PathBuf,
        #[arg(long)]
        alpha: usize,
        #[arg(long, value_enum, default_value_t = Method::Trees)]
        method: Method,
        /// Count absolutely indecomposable orbits over F_q instead.
        #[arg(long)]
        q: Option<u32>,
        /// Rank vector for --q, comma separated (default all ones).
        #[arg(long, value_delimiter = ',')]
        rank: Option<Vec<usize>>,
    },
    /// Kac polynomial of the g-loop quiver in rank 1, 2 or 3.
    KacGloop {
        #[arg(long)]
        g: usize,
        #[arg(long)]
        alpha: usize,
        #[arg(long, default_value_t = 2)]
        rank: usize,
        /// Use the closed form instead of the recurrence (ranks 2 and 3).
        #[arg(long)]
        closed_form: bool,
        /// Rank 2 from the zeta function of the moment map.
        #[arg(long, conflicts_with = "closed_form")]
        from_zeta: bool,
        /// Count isomorphism classes (M_r) over F_q by brute force instead.
        #[arg(long)]
        q: Option<u32>,
    },
    /// Kac polynomial of the r-Kronecker quiver in rank (1,2).
    KacKronecker {
        #[arg(long)]
        r: usize,
        #[arg(long)]
        alpha: usize,
        /// Reconstruct from the zeta function of the moment map.
        #[arg(long)]
        from_zeta: bool,
    },
    /// #mu^{-1}(t^{alpha-1} lambda): brute force over F_q, or symbolic in rank (1,...,1).
    FiberCount {
        #[arg(long)]
        quiver: PathBuf,
        #[arg(long)]
        alpha: usize,
        #[arg(long, value_delimiter = ',')]
        rank: Option<Vec<usize>>,
        /// Field size; omit for the symbolic rank-(1,...,1) count.
        #[arg(long)]
        q: Option<u32>,
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        lambda: Option<Vec<i64>>,
    },
    /// Jet counts N_1..N_n of mu = 0 over F_q[t]/(t^n).
    JetSeries {
        #[arg(long, required_unless_present = "zeta_of")]
        quiver: Option<PathBuf>,
        #[arg(long, value_delimiter = ',')]
        rank: Option<Vec<usize>>,
        #[arg(long)]
        q: u32,
        #[arg(long)]
        n_max: usize,
        /// Expand a tabulated zeta function instead of enumerating (g-loop rank 2, Kronecker rank (1,2)).
        #[arg(long, value_enum)]
        zeta_of: Option<ZetaOf>,
        /// Number of loops or Kronecker arrows for --zeta-of.
        #[arg(long, default_value_t = 2)]
        param: usize,
    },
    /// Average kernel sizes of the moment-map family over F_q[t]/(t^n).
    Ask {
        #[arg(long)]
        quiver: PathBuf,
        #[arg(long, value_delimiter = ',')]
        rank: Vec<usize>,
        #[arg(long)]
        q: u32,
        #[arg(long)]
        n_max: usize,
    },
    /// The alpha -> infinity limits A_Q and B of a 2-connected quiver.
    Limits {
        #[arg(long)]
        quiver: PathBuf,
    },
    /// Fine Hilbert series of the order complex of arrow subsets, specialised in q.
    Hilbert {
        #[arg(long)]
        quiver: PathBuf,
    },
    /// Structure constants 1_a * 1_b of the Hall algebra of (A_2, alpha).
    Hall {
        #[arg(long)]
        alpha: usize,
        /// Field size; omit for the q -> 1 specialisation.
        #[arg(long)]
        q: Option<u32>,
        /// Rank of the left (quotient) factor, e.g. 0,1.
        #[arg(long, value_delimiter = ',')]
        left: Vec<usize>,
        /// Rank of the right (submodule) factor, e.g. 1,0.
        #[arg(long, value_delimiter = ',')]
        right: Vec<usize>,
    },
    /// Run acceptance checks.
    Verify {
        /// Suites to run (default: all).
        #[arg(long, value_enum, value_delimiter = ',')]
        suite: Vec<SuiteArg>,
        /// Print elapsed time per check (output then varies between runs).
        #[arg(long)]
        timings: bool,
    },
}

enum Failure {
    Usage(String),
    Core(Error),
    Verification(String),
    Io(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Core(e)
    }
}

/// A computed result: text for humans and the JSON record.
struct Report {
    text: String,
    record: Value,
}

fn record(quiver: Option<&Quiver>, alpha: Option<usize>, rank: Option<&[usize]>, q: Option<u32>, kind: &str, value: Value) -> Value {
    json!({
        "quiver": quiver.map(|q| serde_json::from_str::<Value>(&q.to_json()).expect("json")),
        "alpha": alpha,
        "rank": rank,
        "q": q,
        "kind": kind,
        "value": value,
    })
}

fn poly_json(p: &QPolynomial) -> Value {
    let coeffs: Vec<String> = match p.degree() {
        None => vec![],
        Some(d) => (0..=d).map(|k| p.coeff(k).to_string()).collect(),
    };
    json!({ "coefficients": coeffs, "string": p.to_string() })
}

fn rf_json(f: &RationalFunction) -> Value {
    match f.as_polynomial() {
        Some(p) if p.low_degree().is_none_or(|d| d >= 0) => poly_json(&p),
        _ => json!({
            "numerator": poly_json(&f.numer())["coefficients"],
            "denominator": poly_json(&f.denom())["coefficients"],
            "string": f.to_compact_string(),
        }),
    }
}

fn rf_text(f: &RationalFunction) -> String {
    match f.as_polynomial() {
        Some(p) if p.low_degree().is_none_or(|d| d >= 0) => p.to_string(),
        _ => f.to_compact_string(),
    }
}

fn load_quiver(path: &PathBuf) -> Result<Quiver, Failure> {
    let s = std::fs::read_to_string(path).map_err(|e| Failure::Usage(format!("cannot read {}: {e}", path.display())))?;
    Ok(Quiver::from_json(&s)?)
}

fn ones(q: &Quiver) -> Vec<usize> {
    vec![1; q.num_vertices()]
}

fn check_rank(q: &Quiver, rank: &[usize]) -> Result<(), Failure> {
    if rank.len() != q.num_vertices() {
        return Err(Failure::Usage(format!("rank has {} entries, quiver has {} vertices", rank.len(), q.num_vertices())));
    }
    Ok(())
}

fn run(cli: &Cli, caps: &Caps) -> Result<Report, Failure> {
    match &cli.command {
        Command::Kac { quiver, alpha, method, q, rank } => {
            let qv = load_quiver(quiver)?;
            if let Some(q) = q {
                let rank = rank.clone().unwrap_or_else(|| ones(&qv));
                check_rank(&qv, &rank)?;
                let n = absolutely_indecomposable_count(&enumerate_orbits(&qv, *alpha, &rank, *q, caps)?);
                return Ok(Report {
                    text: n.to_string(),
                    record: record(Some(&qv), Some(*alpha), Some(&rank), Some(*q), "absolutely_indecomposable_count", json!(n)),
                });
            }
            if rank.as_ref().is_some_and(|r| r.iter().any(|&x| x != 1)) {
                return Err(Failure::Usage("symbolic Kac polynomials need rank (1,...,1); pass --q for other ranks".into()));
            }
            let p = match method {
                Method::Trees => toric_kac_trees(&qv, *alpha)?,
                Method::Chains => toric_kac_chains(&qv, *alpha)?,
            };
            Ok(Report {
                text: p.to_string(),
                record: record(Some(&qv), Some(*alpha), Some(&ones(&qv)), None, "kac", poly_json(&p)),
            })
        }
        Command::KacGloop { g, alpha, rank, closed_form, from_zeta, q } => {
            let qv = Quiver::g_loop(*g);
            if let Some(q) = q {
                let n = count_iso_classes(&qv, *alpha, &[*rank], *q, caps)?;
                return Ok(Report {
                    text: n.to_string(),
                    record: record(Some(&qv), Some(*alpha), Some(&[*rank]), Some(*q), "iso_class_count", json!(n.to_string())),
                });
            }
            if !(1..=3).contains(rank) {
                return Err(Failure::Usage("--rank must be 1, 2 or 3".into()));
            }
            let f = match (rank, closed_form, from_zeta) {
                (2, true, _) => gloop_a2(*g, *alpha)?,
                (3, true, _) => gloop_a3(*g, *alpha)?,
                (2, _, true) => gloop_kac_from_zeta(*g, *alpha)?,
                (_, false, true) => return Err(Failure::Usage("--from-zeta is available in rank 2".into())),
                _ => gloop_kac_from_recurrence(*g, *alpha, *rank)?,
            };
            Ok(Report {
                text: rf_text(&f),
                record: record(Some(&qv), Some(*alpha), Some(&[*rank]), None, "kac", rf_json(&f)),
            })
        }
        Command::KacKronecker { r, alpha, from_zeta } => {
            let f = if *from_zeta { kronecker_kac_from_zeta(*r, *alpha)? } else { kronecker_a(*r, *alpha)? };
            Ok(Report {
                text: rf_text(&f),
                record: record(Some(&Quiver::kronecker(*r)), Some(*alpha), Some(&[1, 2]), None, "kac", rf_json(&f)),
            })
        }
        Command::FiberCount { quiver, alpha, rank, q, lambda } => {
            let qv = load_quiver(quiver)?;
            let rank = rank.clone().unwrap_or_else(|| ones(&qv));
            check_rank(&qv, &rank)?;
            let lambda = lambda.clone().unwrap_or_default();
            match q {
                Some(q) => {
                    let n = moment_fiber_count(&qv, *alpha, &rank, *q, &lambda, caps)?;
                    Ok(Report {
                        text: n.to_string(),
                        record: record(Some(&qv), Some(*alpha), Some(&rank), Some(*q), "fiber_count", json!(n.to_string())),
                    })
                }
                None => {
                    if rank.iter().any(|&x| x != 1) || lambda.iter().any(|&l| l != 0) {
                        return Err(Failure::Usage("the symbolic count needs rank (1,...,1) and lambda = 0; pass --q".into()));
                    }
                    let f = rank1_fiber_count(&qv, *alpha)?;
                    Ok(Report {
                        text: rf_text(&f),
                        record: record(Some(&qv), Some(*alpha), Some(&rank), None, "fiber_count", rf_json(&f)),
                    })
                }
            }
        }
        Command::JetSeries { quiver, rank, q, n_max, zeta_of, param } => {
            let (qv, rank, values): (Quiver, Vec<usize>, Vec<String>) = match zeta_of {
                Some(which) => {
                    let (qv, rank, z, m) = match which {
                        ZetaOf::Gloop => (Quiver::g_loop(*param), vec![2], gloop_z(*param, n_max + 1)?, 8 * param),
                        ZetaOf::Kronecker => (Quiver::kronecker(*param), vec![1, 2], kronecker_z(*param, n_max + 1)?, 4 * param),
                    };
                    let v = poincare_from_zeta_at(&z, &rat(*q as i64), m, *n_max)?;
                    (qv, rank, v.iter().map(|x| x.to_string()).collect())
                }
                None => {
                    let qv = load_quiver(quiver.as_ref().expect("clap enforces --quiver"))?;
                    let rank = rank.clone().unwrap_or_else(|| ones(&qv));
                    check_rank(&qv, &rank)?;
                    let v = jet_counts(&qv, &rank, *q, *n_max, caps)?;
                    (qv, rank, v.iter().map(|x| x.to_string()).collect())
                }
            };
            Ok(Report {
                text: values.join("\n"),
                record: record(Some(&qv), None, Some(&rank), Some(*q), "jet_counts", json!(values)),
            })
        }
        Command::Ask { quiver, rank, q, n_max } => {
            let qv = load_quiver(quiver)?;
            check_rank(&qv, rank)?;
            let fam = LinearFamily::moment_map(&qv, rank)?;
            let v: Vec<String> = ask_counts(&fam, *q, *n_max, caps)?.iter().map(|x| x.to_string()).collect();
            Ok(Report {
                text: v.join("\n"),
                record: record(Some(&qv), None, Some(rank), Some(*q), "ask", json!(v)),
            })
        }
        Command::Limits { quiver } => {
            let qv = load_quiver(quiver)?;
            let (a, b) = (limit_a(&qv)?, limit_b(&qv)?);
            Ok(Report {
                text: format!("A: {}\nB: {}", rf_text(&a), rf_text(&b)),
                record: record(Some(&qv), None, Some(&ones(&qv)), None, "limits", json!({ "A": rf_json(&a), "B": rf_json(&b) })),
            })
        }
        Command::Hilbert { quiver } => {
            let qv = load_quiver(quiver)?;
            let h = order_complex_hilbert(&qv)?;
            Ok(Report {
                text: rf_text(&h),
                record: record(Some(&qv), None, None, None, "hilbert", rf_json(&h)),
            })
        }
        Command::Hall { alpha, q, left, right } => {
            let pair = |v: &[usize], name: &str| -> Result<[usize; 2], Failure> {
                match v {
                    [a, b] => Ok([*a, *b]),
                    _ => Err(Failure::Usage(format!("--{name} needs two entries, e.g. 1,0"))),
                }
            };
            let (l, r) = (pair(left, "left")?, pair(right, "right")?);
            let spec = q.map_or(Specialization::Classical, Specialization::AtQ);
            let h = HallAlgebra::new(*alpha, spec, *caps)?;
            let mut table: BTreeMap<String, BTreeMap<String, String>> = BTreeMap::new();
            let mut text = Vec::new();
            for la in orbit_labels(*alpha, l) {
                for lb in orbit_labels(*alpha, r) {
                    let a = Orbit { rank: l, label: la.clone() };
                    let b = Orbit { rank: r, label: lb };
                    let p = h.product(&HallFunction::indicator(*alpha, &a)?, &HallFunction::indicator(*alpha, &b)?)?;
                    let sum = [l[0] + r[0], l[1] + r[1]];
                    let row: BTreeMap<String, String> = p
                        .values()
                        .iter()
                        .map(|(lab, v)| (Orbit { rank: sum, label: lab.clone() }.to_string(), v.to_string()))
                        .collect();
                    text.push(format!("1{a} * 1{b} = {p}"));
                    table.insert(format!("{a} * {b}"), row);
                }
            }
            let spec_name = q.map_or("classical".to_string(), |q| q.to_string());
            Ok(Report {
                text: text.join("\n"),
                record: json!({
                    "quiver": "A2", "alpha": alpha, "rank": [l, r], "q": spec_name,
                    "kind": "hall_structure_constants", "value": table,
                }),
            })
        }
        Command::Verify { suite, timings } => {
            let suites: Vec<Suite> = suite
                .iter()
                .map(|s| match s {
                    SuiteArg::Symbolic => Suite::Symbolic,
                    SuiteArg::Brute => Suite::Brute,
                    SuiteArg::Cross => Suite::Cross,
                    SuiteArg::Hall => Suite::Hall,
                })
                .collect();
            let outcomes = run_suites(&suites, caps);
            let text: Vec<String> = outcomes.iter().map(|o| o.render(*timings)).collect();
            let rec = json!(outcomes
                .iter()
                .map(|o| json!({
                    "id": o.id, "name": o.name, "identity": o.identity, "passed": o.passed,
                    "failures": o.failures, "error": o.error.as_ref().map(|e| e.to_string()),
                }))
                .collect::<Vec<_>>());
            let failed: Vec<&str> = outcomes.iter().filter(|o| !o.passed).map(|o| o.identity).collect();
            let report = Report { text: text.join("\n"), record: rec };
            if failed.is_empty() {
                Ok(report)
            } else {
                emit(cli, &report)?;
                Err(Failure::Verification(format!("identity failed: {}", failed.join("; "))))
            }
        }
    }
}

fn emit(cli: &Cli, report: &Report) -> Result<(), Failure> {
    let json = serde_json::to_string_pretty(&report.record).expect("json");
    let body = match cli.common.format {
        Format::Text => &report.text,
        Format::Json => &json,
    };
    // A closed pipe (e.g. `| head`) is not an error worth reporting.
    let mut out = std::io::stdout().lock();
    let _ = writeln!(out, "{body}").and_then(|_| out.flush());
    if let Some(path) = &cli.common.out {
        std::fs::write(path, json + "\n").map_err(|e| Failure::Io(format!("cannot write {}: {e}", path.display())))?;
    }
    Ok(())
}

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::CapExceeded { .. } | Error::EndTooLargeForLocalityTest(_) => EXIT_CAP,
        Error::Parse(_)
        | Error::InvalidInput(_)
        | Error::InvalidType(_)
        | Error::NotConnected
        | Error::Not2Connected
        | Error::DimensionMismatch { .. }
        | Error::UnsupportedField(_)
        | Error::NonGenericLambda(_)
        | Error::CharacteristicTooSmall { .. } => EXIT_USAGE,
        _ => 1,
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(n) = cli.common.jobs {
        if n == 0 {
            eprintln!("error: --jobs must be positive");
            return ExitCode::from(EXIT_USAGE);
        }
        rayon::ThreadPoolBuilder::new().num_threads(n).build_global().expect("thread pool set once");
    }
    let caps = Caps {
        max_space_log2: cli.common.max_space_log2,
        max_group: cli.common.max_group,
        ..Caps::default()
    };
    let result = run(&cli, &caps).and_then(|r| emit(&cli, &r));
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Usage(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(EXIT_USAGE)
        }
        Err(Failure::Core(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e))
        }
        Err(Failure::Verification(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(EXIT_VERIFY)
        }
        Err(Failure::Io(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(1)
        }
    }
}

