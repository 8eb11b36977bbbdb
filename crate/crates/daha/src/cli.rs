//! Command-line front end. [`run`] parses arguments, dispatches, and
//! returns the exit code: 0 on success, 1 when a verification fails, 2 on
//! usage or input errors.

use std::ffi::OsString;
use std::io::{Read, Write};

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use crate::daha::check_relations;
use crate::diagram::{enumerate_standard, DiagramKind, PeriodicDiagram};
use crate::embedding::{
    build_wtilde, certificate, classify, column_reading, compute_e, convexity_violations, special_order,
    target_character, verify_factors, Classification, DEFAULT_BOUND,
};
use crate::error::DahaError;
use crate::semisimple::torsion_check;
use crate::weyl::AffinePermutation;

#[derive(Parser, Debug)]
#[command(name = "daha", version, about = "Periodic skew diagrams and Verma embeddings for the degenerate DAHA")]
struct Cli {
    /// Word-length bound for enumerations and kernel checks.
    #[arg(long, global = true, default_value_t = DEFAULT_BOUND)]
    bound: usize,
    /// Direction coefficients for the touched rows, e.g. 1,3,7.
    #[arg(long, global = true, value_delimiter = ',', allow_hyphen_values = true)]
    directions: Option<Vec<i64>>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Seed for randomized checks.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Ascii,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Kind {
    Cherednik,
    Skew,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Check the diagram conditions.
    Validate {
        diagram: String,
        #[arg(long, value_enum, default_value_t = Kind::Cherednik)]
        kind: Kind,
    },
    /// Draw the diagram, labelled by T_0 or by wT_0.
    Show {
        diagram: String,
        /// Window of w, e.g. 1,3,2,4.
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        window: Option<Vec<i64>>,
    },
    /// The character χ_D.
    Chi { diagram: String },
    /// The column-reading permutation w̃.
    Wtilde { diagram: String },
    /// The special order on the inversions of w̃ and its reduced word.
    SpecialOrder { diagram: String },
    /// The fused eigenvector E_D.
    ComputeE { diagram: String },
    /// E_D plus kernel vanishing up to --bound.
    VerifyEmbedding { diagram: String },
    /// Decide whether L_D embeds into a Verma module.
    Classify { diagram: String },
    /// The torsion identities for diagrams with an infinite column.
    CheckTorsion { diagram: String },
    /// Random checks of the defining relations on Verma modules.
    CheckRelations {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        kappa: i64,
        #[arg(long, default_value_t = 50)]
        trials: usize,
    },
    /// Standard tableaux wT_0 with l(w) <= --bound.
    EnumerateTableaux { diagram: String },
}

struct Outcome {
    value: Value,
    ascii: String,
    ok: bool,
}

impl Outcome {
    fn new(value: impl Serialize, ascii: String, ok: bool) -> Self {
        Self {
            value: serde_json::to_value(value).expect("serializable"),
            ascii,
            ok,
        }
    }
}

fn exit_code(e: &DahaError) -> i32 {
    match e {
        DahaError::Verification(_) | DahaError::PoleAtZero { .. } => 1,
        _ => 2,
    }
}

fn read_diagram(arg: &str, stdin: &mut dyn Read) -> Result<PeriodicDiagram, String> {
    let text = if arg == "-" {
        let mut s = String::new();
        stdin.read_to_string(&mut s).map_err(|e| format!("reading stdin: {e}"))?;
        s
    } else if arg.trim_start().starts_with('{') {
        arg.to_string()
    } else {
        std::fs::read_to_string(arg).map_err(|e| format!("reading {arg}: {e}"))?
    };
    PeriodicDiagram::from_json(&text).map_err(|e| e.to_string())
}

fn windows(ws: &[AffinePermutation]) -> Vec<Vec<i64>> {
    ws.iter().map(|w| w.window().to_vec()).collect()
}

fn fmt_list<T: std::fmt::Display>(xs: &[T]) -> String {
    xs.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ")
}

fn dispatch(cli: &Cli, stdin: &mut dyn Read) -> Result<Outcome, (i32, String)> {
    let dirs = cli.directions.as_deref();
    let load = |arg: &str, stdin: &mut dyn Read| read_diagram(arg, stdin).map_err(|e| (2, e));
    let lib = |e: DahaError| (exit_code(&e), e.to_string());
    Ok(match &cli.command {
        Command::Validate { diagram, kind } => {
            let d = load(diagram, stdin)?;
            let k = match kind {
                Kind::Cherednik => DiagramKind::Cherednik,
                Kind::Skew => DiagramKind::Skew,
            };
            match d.validate(k) {
                Ok(()) => Outcome::new(
                    json!({"valid": true, "cherednik": d.is_cherednik(), "skew": d.is_skew(), "n": d.n(), "kappa": d.kappa()}),
                    format!("valid (n = {}, kappa = {})", d.n(), d.kappa()),
                    true,
                ),
                Err(v) => Outcome::new(
                    json!({"valid": false, "violation": v}),
                    format!("violates {}: {}", v.condition, v.message),
                    false,
                ),
            }
        }
        Command::Show { diagram, window } => {
            let d = load(diagram, stdin)?;
            let w = match window {
                Some(v) => Some(AffinePermutation::from_window(v.clone()).map_err(|e| (2, e.to_string()))?),
                None => None,
            };
            if let Some(w) = &w {
                if w.n() != d.n() {
                    return Err((2, format!("window has length {}, diagram has n = {}", w.n(), d.n())));
                }
            }
            let pic = d.render(w.as_ref());
            Outcome::new(json!({"picture": pic}), pic, true)
        }
        Command::Chi { diagram } => {
            let d = load(diagram, stdin)?;
            let chi: Vec<i64> = (1..=d.n() as i64).map(|i| d.content(i)).collect();
            Outcome::new(json!({"chi": chi, "kappa": d.kappa()}), fmt_list(&chi), true)
        }
        Command::Wtilde { diagram } => {
            let d = load(diagram, stdin)?;
            let raw = column_reading(&d).map_err(lib)?;
            let w = build_wtilde(&d).map_err(lib)?;
            let target = target_character(&d, &w).map_err(lib)?;
            Outcome::new(
                json!({
                    "raw_reading": raw.window(),
                    "shift": raw.grade(),
                    "wtilde": w.window(),
                    "length": w.length(),
                    "target_character": target.as_ints(),
                }),
                fmt_list(w.window()),
                true,
            )
        }
        Command::SpecialOrder { diagram } => {
            let d = load(diagram, stdin)?;
            let data = special_order(&d).map_err(lib)?;
            let bad = convexity_violations(&data);
            let roots: Vec<String> = data.ordered_roots.iter().map(|r| format!("{r:?}")).collect();
            let ascii = format!("{}\nword: {}", roots.join(" < "), fmt_list(&data.word));
            Outcome::new(
                json!({
                    "wtilde": data.wtilde.window(),
                    "ordered_roots": data.ordered_roots.iter().map(|r| [r.i, r.j]).collect::<Vec<_>>(),
                    "word": data.word,
                    "violations": bad,
                }),
                ascii,
                bad.is_empty(),
            )
        }
        Command::ComputeE { diagram } => {
            let d = load(diagram, stdin)?;
            let data = compute_e(&d, dirs).map_err(lib)?;
            let ascii = format!("E = ({}) · 1_{:?}", data.e, data.target.as_ints().unwrap_or_default());
            Outcome::new(certificate(&data, None), ascii, true)
        }
        Command::VerifyEmbedding { diagram } => {
            let d = load(diagram, stdin)?;
            let data = compute_e(&d, dirs).map_err(lib)?;
            let rep = verify_factors(&data, cli.bound, dirs);
            let ascii = format!(
                "{} kernel generators checked up to length {}, {} failures; image rank {}/{}",
                rep.generators.len(),
                rep.bound,
                rep.failures,
                rep.image_rank,
                rep.image_size
            );
            let ok = rep.passed();
            Outcome::new(certificate(&data, Some(&rep)), ascii, ok)
        }
        Command::Classify { diagram } => {
            let d = load(diagram, stdin)?;
            let c = classify(&d, cli.bound, dirs).map_err(lib)?;
            let ascii = match &c {
                Classification::Embeddable(cert) => {
                    format!("Embeddable, target character {}", cert.target_character)
                }
                Classification::NotEmbeddable(_) => "NotEmbeddable: (x_1 + ... + x_k - x_{k+1} - ... - x_{2k}) v_T0 = 0".into(),
            };
            Outcome {
                ok: c.consistent(),
                value: c.to_json(),
                ascii,
            }
        }
        Command::CheckTorsion { diagram } => {
            let d = load(diagram, stdin)?;
            let rep = torsion_check(&d).map_err(lib)?;
            let ascii = format!(
                "block sums equal: {}, closed form: {}, witness annihilates: {}",
                rep.block_sums_equal, rep.closed_form_matches, rep.witness_annihilates
            );
            let ok = rep.passed();
            Outcome::new(rep, ascii, ok)
        }
        Command::CheckRelations { n, kappa, trials } => {
            if *n < 2 {
                return Err((2, "need n >= 2".into()));
            }
            let rep = check_relations(*n, *kappa, *trials, cli.seed);
            let ascii = rep
                .tallies
                .iter()
                .map(|t| format!("{:<40} {:>6} checked {:>4} failed", t.relation, t.checked, t.failed))
                .collect::<Vec<_>>()
                .join("\n");
            let ok = rep.failures() == 0;
            Outcome::new(rep, ascii, ok)
        }
        Command::EnumerateTableaux { diagram } => {
            let d = load(diagram, stdin)?;
            let ws = enumerate_standard(&d, cli.bound);
            let ascii = ws
                .iter()
                .map(|w| format!("{:?}", w.window()))
                .collect::<Vec<_>>()
                .join("\n");
            Outcome::new(json!({"bound": cli.bound, "windows": windows(&ws)}), ascii, true)
        }
    })
}

/// Runs the CLI on `args` (including the program name) with the given
/// streams and returns the exit code.
pub fn run_with<I, T>(args: I, stdin: &mut dyn Read, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = if code == 0 { write!(out, "{e}") } else { write!(err, "{e}") };
            return code;
        }
    };
    match dispatch(&cli, stdin) {
        Ok(o) => {
            let text = match cli.format {
                Format::Json => serde_json::to_string_pretty(&o.value).expect("serializable"),
                Format::Ascii => o.ascii,
            };
            let _ = writeln!(out, "{text}");
            if o.ok {
                0
            } else {
                1
            }
        }
        Err((code, msg)) => {
            let _ = writeln!(err, "error: {msg}");
            code
        }
    }
}

/// Runs the CLI against the process streams.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let stdin = std::io::stdin();
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    run_with(args, &mut stdin.lock(), &mut stdout.lock(), &mut stderr.lock())
}
