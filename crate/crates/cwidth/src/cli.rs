//! Argument parsing and dispatch for the `cwidth` binary.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use cwidth_core::amalgam::{AmalgamSpec, Syllable};
use cwidth_core::hnn::{t_length_lower_bound, HnnError};
use cwidth_core::quasimorphism::{choose_a, SegmentQuasimorphism};
use cwidth_core::width::{bfs_lengths, check_quotient_inequality, WidthError};
use cwidth_core::witness::{WitnessConfig, WitnessError};
use cwidth_core::Element;
use serde_json::{json, Value};

use crate::formats::{self, FormatError};
use crate::scan;
use crate::words::{self, WordError};

pub const EXIT_OK: u8 = 0;
pub const EXIT_VIOLATION: u8 = 1;
pub const EXIT_INVALID: u8 = 2;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error(transparent)]
    Format(#[from] FormatError),
    #[error("{what}: {source}")]
    Word { what: String, source: WordError },
    #[error("{0}")]
    Invalid(String),
}

fn word_err(what: &str) -> impl FnOnce(WordError) -> CliError + '_ {
    move |source| CliError::Word {
        what: what.to_string(),
        source,
    }
}

#[derive(Parser, Debug)]
#[command(
    name = "cwidth",
    version,
    about = "Normal forms, quasimorphisms and C-width bounds"
)]
pub struct Cli {
    #[command(subcommand)]
    command: Command,
    #[command(flatten)]
    common: Common,
}

#[derive(Args, Debug, Clone)]
struct Common {
    /// Seed for randomized reports.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Number of random samples.
    #[arg(long, global = true)]
    samples: Option<usize>,
    /// Maximum syllable length of sampled or enumerated words.
    #[arg(long = "max-len", global = true)]
    max_len: Option<usize>,
    #[arg(long, global = true, value_enum, default_value_t = Output::Tsv)]
    output: Output,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum Output {
    Tsv,
    Json,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Finite group files.
    #[command(subcommand)]
    Group(GroupCmd),
    /// Amalgamated free products.
    #[command(subcommand)]
    Amalgam(AmalgamCmd),
    /// The segment-counting quasimorphism.
    #[command(subcommand)]
    Qm(QmCmd),
    /// Unbounded witness family.
    #[command(subcommand)]
    Witness(WitnessCmd),
    /// HNN extensions.
    #[command(subcommand)]
    Hnn(HnnCmd),
    /// Word lengths in finite groups.
    #[command(subcommand)]
    Width(WidthCmd),
    /// Graphs of groups.
    #[command(subcommand)]
    Gog(GogCmd),
}

#[derive(Subcommand, Debug)]
enum GroupCmd {
    /// Load and check a group file.
    Validate { file: PathBuf },
    /// Print HaH and Ha^-1H.
    Doublecoset {
        file: PathBuf,
        /// Subgroup members, whitespace separated.
        #[arg(long)]
        h: String,
        element: String,
    },
}

#[derive(Subcommand, Debug)]
enum AmalgamCmd {
    Reduce {
        spec: PathBuf,
        word: String,
    },
    Equal {
        spec: PathBuf,
        left: String,
        right: String,
    },
    Length {
        spec: PathBuf,
        word: String,
    },
}

#[derive(Args, Debug)]
struct QmArgs {
    spec: PathBuf,
    /// The letter `a`, e.g. `1:x`. Chosen automatically when omitted.
    #[arg(long)]
    a: Option<String>,
}

#[derive(Subcommand, Debug)]
enum QmCmd {
    F {
        #[command(flatten)]
        qm: QmArgs,
        word: String,
    },
    LowerBound {
        #[command(flatten)]
        qm: QmArgs,
        word: String,
    },
    /// f(gh) - f(g) - f(h) over random pairs; fails if any defect exceeds 9.
    DefectScan {
        #[command(flatten)]
        qm: QmArgs,
    },
    /// f(g^-1 k g) over factor elements k; exhaustive unless --samples is set.
    ConjugateScan {
        #[command(flatten)]
        qm: QmArgs,
    },
}

#[derive(Subcommand, Debug)]
enum WitnessCmd {
    Run {
        spec: PathBuf,
        #[arg(long)]
        a: String,
        #[arg(long)]
        b: String,
        #[arg(long = "max-n", default_value_t = 20)]
        max_n: usize,
    },
}

#[derive(Subcommand, Debug)]
enum HnnCmd {
    Reduce {
        spec: PathBuf,
        word: String,
    },
    Texp {
        spec: PathBuf,
        word: String,
    },
    Bound {
        spec: PathBuf,
        word: String,
        #[arg(long = "max-gen-texp", default_value_t = 1)]
        max_gen_texp: u64,
    },
}

#[derive(Subcommand, Debug)]
enum WidthCmd {
    Bfs {
        group: PathBuf,
        /// Generators, whitespace separated.
        #[arg(long)]
        gens: String,
        /// Close the generating set under conjugation first.
        #[arg(long = "conj-closure")]
        conj_closure: bool,
    },
    QuotientCheck {
        group: PathBuf,
        /// Members of the normal subgroup N.
        #[arg(long)]
        normal: String,
        /// Representatives in G of generators of G/N.
        #[arg(long)]
        gens: String,
    },
}

#[derive(Subcommand, Debug)]
enum GogCmd {
    Classify { graph: PathBuf },
}

/// Report produced by a subcommand.
struct Outcome {
    tsv: Vec<String>,
    json: Value,
    violated: bool,
    notes: Vec<String>,
}

impl Outcome {
    fn ok(tsv: Vec<String>, json: Value) -> Self {
        Outcome {
            tsv,
            json,
            violated: false,
            notes: Vec::new(),
        }
    }
}

fn line(value: impl ToString) -> Vec<String> {
    vec![value.to_string()]
}

/// Runs the CLI with `args` (including the program name) and returns the
/// exit code. Data goes to `out`, diagnostics to `err`.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() {
                EXIT_INVALID
            } else {
                EXIT_OK
            };
            let text = e.render().to_string();
            let _ = if e.use_stderr() {
                err.write_all(text.as_bytes())
            } else {
                out.write_all(text.as_bytes())
            };
            return code;
        }
    };
    match dispatch(&cli) {
        Ok(outcome) => {
            for note in &outcome.notes {
                let _ = writeln!(err, "{note}");
            }
            let written = match cli.common.output {
                Output::Tsv => outcome.tsv.iter().try_for_each(|l| writeln!(out, "{l}")),
                Output::Json => writeln!(out, "{}", outcome.json),
            };
            if let Err(e) = written {
                let _ = writeln!(err, "error: {e}");
                return EXIT_INVALID;
            }
            if outcome.violated {
                EXIT_VIOLATION
            } else {
                EXIT_OK
            }
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_INVALID
        }
    }
}

fn dispatch(cli: &Cli) -> Result<Outcome, CliError> {
    let common = &cli.common;
    match &cli.command {
        Command::Group(cmd) => group(cmd),
        Command::Amalgam(cmd) => amalgam(cmd),
        Command::Qm(cmd) => qm(cmd, common),
        Command::Witness(cmd) => witness(cmd),
        Command::Hnn(cmd) => hnn(cmd),
        Command::Width(cmd) => width(cmd),
        Command::Gog(GogCmd::Classify { graph }) => {
            let g = formats::load_graph(graph)?;
            let verdict = g.classify();
            let json = json!({ "verdict": verdict.label(), "certificate": verdict.to_string() });
            Ok(Outcome::ok(
                line(format!("{}\t{verdict}", verdict.label())),
                json,
            ))
        }
    }
}

fn group(cmd: &GroupCmd) -> Result<Outcome, CliError> {
    match cmd {
        GroupCmd::Validate { file } => {
            let g = formats::load_group(file)?;
            let tsv = vec![
                format!("name\t{}", g.name()),
                format!("order\t{}", g.order()),
                format!("abelian\t{}", g.is_abelian()),
            ];
            let json = json!({
                "name": g.name(),
                "order": g.order(),
                "abelian": g.is_abelian(),
                "elements": g.element_names(),
            });
            Ok(Outcome::ok(tsv, json))
        }
        GroupCmd::Doublecoset { file, h, element } => {
            let g = formats::load_group(file)?;
            let members = words::parse_element_list(&g, h).map_err(word_err("--h"))?;
            let h = g
                .subgroup(&members)
                .map_err(|e| CliError::Invalid(format!("--h: {e}")))?;
            let a = words::parse_element_list(&g, element).map_err(word_err("element"))?;
            let [a] = a.as_slice() else {
                return Err(CliError::Invalid("expected exactly one element".into()));
            };
            let names = |set: &std::collections::BTreeSet<Element>| -> Vec<String> {
                set.iter().map(|&x| g.element_name(x).to_string()).collect()
            };
            let hah = names(&g.double_coset(&h, *a));
            let hah_inv = names(&g.double_coset(&h, g.inv(*a)));
            let distinct = g.inverse_coset_distinct(&h, *a);
            let tsv = vec![
                format!("HaH\t{}", hah.join(" ")),
                format!("Ha^-1H\t{}", hah_inv.join(" ")),
                format!("distinct\t{distinct}"),
            ];
            let json = json!({ "double_coset": hah, "inverse_double_coset": hah_inv, "distinct": distinct });
            Ok(Outcome::ok(tsv, json))
        }
    }
}

fn amalgam(cmd: &AmalgamCmd) -> Result<Outcome, CliError> {
    match cmd {
        AmalgamCmd::Reduce { spec, word } => {
            let spec = formats::load_amalgam(spec)?;
            let w = words::parse_amalgam_word(&spec, word).map_err(word_err("word"))?;
            let text = words::format_amalgam_word(&spec, &w);
            let json = json!({ "word": text, "syllable_length": w.syllable_length() });
            Ok(Outcome::ok(line(text), json))
        }
        AmalgamCmd::Equal { spec, left, right } => {
            let spec = formats::load_amalgam(spec)?;
            let l = words::parse_amalgam_word(&spec, left).map_err(word_err("left"))?;
            let r = words::parse_amalgam_word(&spec, right).map_err(word_err("right"))?;
            let eq = spec.equal(&l, &r);
            Ok(Outcome::ok(line(eq), json!({ "equal": eq })))
        }
        AmalgamCmd::Length { spec, word } => {
            let spec = formats::load_amalgam(spec)?;
            let w = words::parse_amalgam_word(&spec, word).map_err(word_err("word"))?;
            let n = w.syllable_length();
            Ok(Outcome::ok(line(n), json!({ "syllable_length": n })))
        }
    }
}

fn pick_a(spec: &AmalgamSpec, a: Option<&str>) -> Result<Syllable, CliError> {
    match a {
        Some(token) => words::parse_syllable(spec, token.trim(), 1).map_err(word_err("--a")),
        None => choose_a(spec).ok_or_else(|| {
            CliError::Invalid("no element a with HaH != Ha^-1H in either factor".into())
        }),
    }
}

fn with_qm<T>(
    args: &QmArgs,
    body: impl FnOnce(&SegmentQuasimorphism<'_>) -> Result<T, CliError>,
) -> Result<T, CliError> {
    let spec = formats::load_amalgam(&args.spec)?;
    let a = pick_a(&spec, args.a.as_deref())?;
    let qm =
        SegmentQuasimorphism::new(&spec, a).map_err(|e| CliError::Invalid(format!("--a: {e}")))?;
    body(&qm)
}

fn qm(cmd: &QmCmd, common: &Common) -> Result<Outcome, CliError> {
    match cmd {
        QmCmd::F { qm, word } => with_qm(qm, |q| {
            let w = words::parse_amalgam_word(q.spec(), word).map_err(word_err("word"))?;
            let f = q.f(&w);
            let a = words::format_syllable(q.spec(), q.a());
            Ok(Outcome::ok(line(f), json!({ "a": a, "f": f })))
        }),
        QmCmd::LowerBound { qm, word } => with_qm(qm, |q| {
            let w = words::parse_amalgam_word(q.spec(), word).map_err(word_err("word"))?;
            let bound = q.length_lower_bound(&w);
            Ok(Outcome::ok(
                line(bound),
                json!({ "f": q.f(&w), "lower_bound": bound }),
            ))
        }),
        QmCmd::DefectScan { qm } => with_qm(qm, |q| {
            let samples = common.samples.unwrap_or(1000);
            let max_len = common.max_len.unwrap_or(20);
            let report = scan::defect_scan(q, common.seed, samples, max_len);
            let mut tsv = vec!["seed\tsample\t|g|\t|h|\tf(g)\tf(h)\tf(gh)\tdefect".to_string()];
            tsv.extend(report.rows.iter().map(|r| {
                format!(
                    "{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}",
                    r.seed, r.sample, r.len_g, r.len_h, r.f_g, r.f_h, r.f_gh, r.defect
                )
            }));
            tsv.push(format!(
                "# min_defect={} max_defect={}",
                report.min_defect, report.max_defect
            ));
            let mut notes: Vec<String> = report
                .violations()
                .map(|r| format!("violation: sample {} has defect {} > 9", r.sample, r.defect))
                .collect();
            notes.extend(
                report
                    .low_excursions()
                    .map(|r| format!("finding: sample {} has defect {} < -9", r.sample, r.defect)),
            );
            let violated = report.violations().next().is_some();
            let json = serde_json::to_value(&report).expect("serializable");
            Ok(Outcome {
                tsv,
                json,
                violated,
                notes,
            })
        }),
        QmCmd::ConjugateScan { qm } => with_qm(qm, |q| {
            let max_len = common.max_len.unwrap_or(4);
            let report = match common.samples {
                Some(n) => scan::conjugate_scan_sampled(q, common.seed, n, max_len),
                None => scan::conjugate_scan_exhaustive(q, max_len),
            };
            let mut tsv = vec!["k\tg\tf".to_string()];
            tsv.extend(
                report
                    .violations
                    .iter()
                    .map(|v| format!("{}\t{}\t{}", v.k, v.g, v.f)),
            );
            tsv.push(format!(
                "# checked={} max_f={} violations={}",
                report.checked,
                report.max_f,
                report.violations.len()
            ));
            let violated = !report.violations.is_empty();
            let json = serde_json::to_value(&report).expect("serializable");
            Ok(Outcome {
                tsv,
                json,
                violated,
                notes: Vec::new(),
            })
        }),
    }
}

fn witness(cmd: &WitnessCmd) -> Result<Outcome, CliError> {
    let WitnessCmd::Run { spec, a, b, max_n } = cmd;
    let spec = formats::load_amalgam(spec)?;
    let a = words::parse_syllable(&spec, a.trim(), 1).map_err(word_err("--a"))?;
    let b = words::parse_syllable(&spec, b.trim(), 1).map_err(word_err("--b"))?;
    let cfg = WitnessConfig::new(&spec, a, b, *max_n)
        .map_err(|e: WitnessError| CliError::Invalid(e.to_string()))?;
    let rows = cfg.run_experiment();
    let mut tsv = vec!["n\tsyllable_length\tf\tlower_bound".to_string()];
    tsv.extend(
        rows.iter()
            .map(|r| format!("{}\t{}\t{}\t{}", r.n, r.syllable_length, r.f, r.lower_bound)),
    );
    let notes: Vec<String> = rows
        .iter()
        .filter(|r| r.f + 1 < r.n)
        .map(|r| format!("violation: f(g_{}) = {} < {}", r.n, r.f, r.n - 1))
        .collect();
    let json = Value::Array(
        rows.iter()
            .map(|r| json!({ "n": r.n, "syllable_length": r.syllable_length, "f": r.f, "lower_bound": r.lower_bound }))
            .collect(),
    );
    Ok(Outcome {
        tsv,
        json,
        violated: !notes.is_empty(),
        notes,
    })
}

fn hnn(cmd: &HnnCmd) -> Result<Outcome, CliError> {
    match cmd {
        HnnCmd::Reduce { spec, word } => {
            let spec = formats::load_hnn(spec)?;
            let w = words::parse_hnn_word(&spec, word).map_err(word_err("word"))?;
            let r = spec.britton_reduce(&w);
            let text = words::format_hnn_word(&spec, &r);
            let json = json!({ "word": text, "stable_length": r.stable_length() });
            Ok(Outcome::ok(line(text), json))
        }
        HnnCmd::Texp { spec, word } => {
            let spec = formats::load_hnn(spec)?;
            let w = words::parse_hnn_word(&spec, word).map_err(word_err("word"))?;
            let e = w.t_exponent();
            Ok(Outcome::ok(line(e), json!({ "t_exponent": e })))
        }
        HnnCmd::Bound {
            spec,
            word,
            max_gen_texp,
        } => {
            let spec = formats::load_hnn(spec)?;
            let w = words::parse_hnn_word(&spec, word).map_err(word_err("word"))?;
            let bound = t_length_lower_bound(&w, *max_gen_texp).map_err(|e: HnnError| {
                CliError::Invalid(format!("{e}: element is unreachable by such generators"))
            })?;
            Ok(Outcome::ok(
                line(bound),
                json!({ "t_exponent": w.t_exponent(), "lower_bound": bound }),
            ))
        }
    }
}

fn width(cmd: &WidthCmd) -> Result<Outcome, CliError> {
    match cmd {
        WidthCmd::Bfs {
            group,
            gens,
            conj_closure,
        } => {
            let g = formats::load_group(group)?;
            let mut s = words::parse_element_list(&g, gens).map_err(word_err("--gens"))?;
            if *conj_closure {
                s = g.conjugacy_closure(&s).into_iter().collect();
            }
            let table = bfs_lengths(&g, &s);
            let mut tsv = vec!["element\tlength".to_string()];
            let mut rows = Vec::new();
            for x in g.elements() {
                let name = g.element_name(x);
                let len = table.length(x);
                tsv.push(match len {
                    Some(l) => format!("{name}\t{l}"),
                    None => format!("{name}\tunreachable"),
                });
                rows.push(json!({ "element": name, "length": len }));
            }
            let mut notes = Vec::new();
            let width = match table.first_unreachable() {
                Some(x) => {
                    notes.push(format!(
                        "{} is unreachable: the set does not generate",
                        g.element_name(x)
                    ));
                    Value::Null
                }
                None => {
                    tsv.push(format!("# width={}", table.max_length()));
                    json!(table.max_length())
                }
            };
            Ok(Outcome {
                tsv,
                json: json!({ "lengths": rows, "width": width }),
                violated: false,
                notes,
            })
        }
        WidthCmd::QuotientCheck {
            group,
            normal,
            gens,
        } => {
            let g = formats::load_group(group)?;
            let n = words::parse_element_list(&g, normal).map_err(word_err("--normal"))?;
            let n = g
                .subgroup(&n)
                .map_err(|e| CliError::Invalid(format!("--normal: {e}")))?;
            let s = words::parse_element_list(&g, gens).map_err(word_err("--gens"))?;
            let check = check_quotient_inequality(&g, &n, &s)
                .map_err(|e: WidthError| CliError::Invalid(e.to_string()))?;
            let violation = check.violation.map(|x| g.element_name(x).to_string());
            let tsv = match &violation {
                None => line("PASS"),
                Some(x) => line(format!("FAIL\t{x}")),
            };
            let json =
                json!({ "holds": check.holds(), "violation": violation, "checked": check.checked });
            Ok(Outcome {
                tsv,
                json,
                violated: !check.holds(),
                notes: Vec::new(),
            })
        }
    }
}
