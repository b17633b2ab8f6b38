//! `infl`: prove and refute sequents of the unit-free involutive
//! residuated logic, translate formulas, check derivations, and work with
//! finite algebra models.
//!
//! Exit codes: 0 proved / valid / all pass; 1 refuted / invalid / mismatch;
//! 2 resource budget exhausted; 3 input or usage error.

use std::collections::BTreeMap;
use std::fs;
use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Duration;

use clap::error::ErrorKind;
use clap::{Parser, Subcommand};
use infl_core::algebra::{
    check_class, countermodel, load_algebra, AlgebraClass, Assignment, ExpandError, FiniteAlgebra,
};
use infl_core::parse::{parse_formula, parse_sequent, parse_simple_sequent};
use infl_core::prover::{check_derivation, prove, Exhaustion, Outcome, SearchConfig};
use infl_core::rules::RuleSetId;
use infl_core::sequent::Sequent;
use infl_core::systems::{check_simple_derivation, decide_g_with, decide_qg_with, ko, DecideError};
use infl_core::Derivation;
use serde::Serialize;

mod corpus;

const EXIT_OK: u8 = 0;
const EXIT_NO: u8 = 1;
const EXIT_RESOURCE: u8 = 2;
const EXIT_INPUT: u8 = 3;

#[derive(Parser)]
#[command(
    name = "infl",
    version,
    about = "Decision procedure and finite-algebra workbench for unit-free involutive residuated logic",
    disable_help_subcommand = true
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Search for a cut-free proof of a sequent.
    Prove {
        /// Sequent text, e.g. "p , p \ q => q".
        sequent: String,
        /// Searchable system: gb or qgc.
        #[arg(long, default_value = "gb")]
        system: String,
        /// Per-query time budget in seconds.
        #[arg(long, default_value_t = 10.0)]
        time_budget: f64,
        /// Symbol bound on premises; defaults to the goal's own size, which
        /// no backward rule exceeds.
        #[arg(long)]
        max_symbol_size: Option<usize>,
        /// Print `a -> bot` as `~a` in text output.
        #[arg(long)]
        sugar: bool,
        #[arg(long)]
        json: bool,
    },
    /// Decide provability in g, qg, or gb. The simple systems are decided
    /// through the structural one; `--trace` shows the translated sequent.
    Decide {
        sequent: String,
        #[arg(long)]
        system: String,
        #[arg(long, default_value_t = 10.0)]
        time_budget: f64,
        #[arg(long)]
        trace: bool,
        #[arg(long)]
        json: bool,
    },
    /// Apply the Kolmogorov double-negation translation to a formula.
    Translate {
        formula: String,
        #[arg(long)]
        sugar: bool,
        #[arg(long)]
        json: bool,
    },
    /// Check a derivation (JSON, from a file or stdin) against a system.
    CheckProof {
        /// One of g, qg, gb, qgc, gc.
        #[arg(long)]
        system: String,
        /// Derivation JSON file; stdin when omitted.
        file: Option<PathBuf>,
    },
    /// Check a finite algebra against the laws of a class.
    CheckAlgebra {
        /// Algebra file (text or JSON), or `builtin:involutive`.
        file: String,
        /// One of lattice, crl, mncrl, dncrl, qincrl, incrl, cbrl.
        #[arg(long)]
        class: String,
        #[arg(long)]
        json: bool,
    },
    /// Extend a quasi-involutive algebra with the second fusion, its
    /// residual, and bounds.
    Expand {
        /// Algebra file (text or JSON), or `builtin:involutive`.
        file: String,
        #[arg(long)]
        json: bool,
    },
    /// Search small bounded models for one refuting a sequent.
    Countermodel {
        sequent: String,
        /// Largest carrier to try (at most 4).
        #[arg(long, default_value_t = 3)]
        max_size: usize,
        #[arg(long)]
        json: bool,
    },
    /// Run a provability corpus; the built-in one when no file is given.
    Corpus {
        file: Option<PathBuf>,
        #[arg(long, default_value_t = 10.0)]
        time_budget: f64,
        #[arg(long)]
        json: bool,
    },
}

fn main() -> ExitCode {
    // die quietly when a downstream pipe closes, like other unix tools
    #[cfg(unix)]
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => EXIT_OK,
                _ => EXIT_INPUT,
            };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    ExitCode::from(run(cli.command))
}

fn run(command: Command) -> u8 {
    match command {
        Command::Prove {
            sequent,
            system,
            time_budget,
            max_symbol_size,
            sugar,
            json,
        } => cmd_prove(&sequent, &system, time_budget, max_symbol_size, sugar, json),
        Command::Decide {
            sequent,
            system,
            time_budget,
            trace,
            json,
        } => cmd_decide(&sequent, &system, time_budget, trace, json),
        Command::Translate {
            formula,
            sugar,
            json,
        } => cmd_translate(&formula, sugar, json),
        Command::CheckProof { system, file } => cmd_check_proof(&system, file.as_deref()),
        Command::CheckAlgebra { file, class, json } => cmd_check_algebra(&file, &class, json),
        Command::Expand { file, json } => cmd_expand(&file, json),
        Command::Countermodel {
            sequent,
            max_size,
            json,
        } => cmd_countermodel(&sequent, max_size, json),
        Command::Corpus {
            file,
            time_budget,
            json,
        } => corpus::cmd_corpus(file.as_deref(), time_budget, json),
    }
}

fn input_error(message: impl std::fmt::Display) -> u8 {
    eprintln!("error: {message}");
    EXIT_INPUT
}

fn config(time_budget: f64, rule_set: RuleSetId) -> SearchConfig {
    SearchConfig {
        rule_set,
        time_budget: Duration::from_secs_f64(time_budget),
        ..SearchConfig::default()
    }
}

#[derive(Serialize)]
struct ProveJson {
    outcome: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    derivation: Option<serde_json::Value>,
    #[serde(skip_serializing_if = "Option::is_none")]
    reason: Option<String>,
}

fn cmd_prove(
    sequent: &str,
    system: &str,
    time_budget: f64,
    max_symbol_size: Option<usize>,
    sugar: bool,
    json: bool,
) -> u8 {
    let rule_set = match RuleSetId::from_name(system) {
        Some(set) if set.is_searchable() => set,
        Some(_) => {
            return input_error(format!("system `{system}` is not searchable; use `decide`"))
        }
        None => return input_error(format!("unknown system `{system}`")),
    };
    let goal = match parse_sequent(sequent) {
        Ok(seq) => seq,
        Err(e) => return input_error(e),
    };
    let cfg = SearchConfig {
        max_symbol_size,
        ..config(time_budget, rule_set)
    };
    let outcome = prove(&goal, &cfg);
    let (code, derivation, reason) = match &outcome {
        Outcome::Proved(d) => (EXIT_OK, Some(d.clone()), None),
        Outcome::Refuted => (EXIT_NO, None, None),
        Outcome::ResourceExceeded(r) => (EXIT_RESOURCE, None, Some(r.to_string())),
    };
    if json {
        let payload = ProveJson {
            outcome: outcome.kind(),
            derivation: derivation
                .as_ref()
                .map(|d| serde_json::from_str(&d.to_json()).expect("derivation JSON")),
            reason,
        };
        println!("{}", serde_json::to_string_pretty(&payload).unwrap());
    } else {
        match &outcome {
            Outcome::Proved(d) => print!("{}", d.render_text(sugar)),
            Outcome::Refuted => println!("refuted: no {rule_set} derivation exists"),
            Outcome::ResourceExceeded(r) => println!("resource exceeded: {r}"),
        }
    }
    code
}

#[derive(Serialize)]
struct DecideJson {
    system: String,
    sequent: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    translated: Option<String>,
    outcome: &'static str,
}

fn cmd_decide(sequent: &str, system: &str, time_budget: f64, trace: bool, json: bool) -> u8 {
    let Some(rule_set) = RuleSetId::from_name(system) else {
        return input_error(format!("unknown system `{system}`"));
    };
    let cfg = config(time_budget, RuleSetId::Gb);
    let mut translated = None;
    let outcome: Result<bool, Exhaustion> = match rule_set {
        RuleSetId::Gb => {
            let goal = match parse_sequent(sequent) {
                Ok(seq) => seq,
                Err(e) => return input_error(e),
            };
            match prove(&goal, &cfg) {
                Outcome::Proved(_) => Ok(true),
                Outcome::Refuted => Ok(false),
                Outcome::ResourceExceeded(r) => Err(r),
            }
        }
        RuleSetId::G | RuleSetId::Qg => {
            let goal = match parse_simple_sequent(sequent) {
                Ok(seq) => seq,
                Err(e) => return input_error(e),
            };
            if !goal.lhs.in_neg_language() || !goal.rhs.in_neg_language() {
                return input_error("simple systems take negation-language sequents");
            }
            if rule_set == RuleSetId::G {
                match (ko(&goal.lhs), ko(&goal.rhs)) {
                    (Ok(ka), Ok(kb)) => {
                        translated = Some(Sequent::simple(ka, kb).display_sugared().to_string());
                    }
                    _ => unreachable!("negation language was checked"),
                }
            }
            let decided = if rule_set == RuleSetId::G {
                decide_g_with(&goal.lhs, &goal.rhs, &cfg).map_err(|e| match e {
                    DecideError::Resource(r) => r,
                    DecideError::Ko(_) => unreachable!("negation language was checked"),
                })
            } else {
                decide_qg_with(&goal.lhs, &goal.rhs, &cfg)
            };
            match decided {
                Ok(b) => Ok(b),
                Err(r) => Err(r),
            }
        }
        _ => {
            return input_error(format!(
                "system `{system}` has no decision reduction; use `prove --system {system}`"
            ))
        }
    };
    let (code, kind) = match outcome {
        Ok(true) => (EXIT_OK, "proved"),
        Ok(false) => (EXIT_NO, "refuted"),
        Err(_) => (EXIT_RESOURCE, "resource-exceeded"),
    };
    if json {
        let payload = DecideJson {
            system: system.to_string(),
            sequent: sequent.trim().to_string(),
            translated: if trace { translated } else { None },
            outcome: kind,
        };
        println!("{}", serde_json::to_string_pretty(&payload).unwrap());
    } else {
        if trace {
            if let Some(t) = &translated {
                println!("translated: {t}");
            }
        }
        println!("{kind}");
    }
    code
}

#[derive(Serialize)]
struct TranslateJson {
    input: String,
    translation: String,
}

fn cmd_translate(formula: &str, sugar: bool, json: bool) -> u8 {
    let parsed = match parse_formula(formula) {
        Ok(f) => f,
        Err(e) => return input_error(e),
    };
    let translated = match ko(&parsed) {
        Ok(f) => f,
        Err(e) => return input_error(e),
    };
    if json {
        let payload = TranslateJson {
            input: parsed.display_sugared().to_string(),
            translation: translated.display_sugared().to_string(),
        };
        println!("{}", serde_json::to_string_pretty(&payload).unwrap());
    } else if sugar {
        println!("{}", translated.display_sugared());
    } else {
        println!("{translated}");
    }
    EXIT_OK
}

fn cmd_check_proof(system: &str, file: Option<&std::path::Path>) -> u8 {
    let Some(rule_set) = RuleSetId::from_name(system) else {
        return input_error(format!("unknown system `{system}`"));
    };
    let text = match file {
        Some(path) => match fs::read_to_string(path) {
            Ok(text) => text,
            Err(e) => return input_error(format!("{}: {e}", path.display())),
        },
        None => {
            let mut buffer = String::new();
            if let Err(e) = std::io::stdin().read_to_string(&mut buffer) {
                return input_error(e);
            }
            buffer
        }
    };
    let derivation = match Derivation::from_json(&text) {
        Ok(d) => d,
        Err(e) => return input_error(e),
    };
    let result = if rule_set.is_simple() {
        check_simple_derivation(&derivation, rule_set)
    } else {
        check_derivation(&derivation, rule_set)
    };
    match result {
        Ok(()) => {
            println!(
                "valid ({} node(s) under {rule_set})",
                derivation.node_count()
            );
            EXIT_OK
        }
        Err(e) => {
            println!("invalid: {e}");
            EXIT_NO
        }
    }
}

fn read_algebra(arg: &str) -> Result<FiniteAlgebra, String> {
    if arg == "builtin:involutive" {
        return Ok(FiniteAlgebra::involutive_example());
    }
    let text = fs::read_to_string(arg).map_err(|e| format!("{arg}: {e}"))?;
    if text.trim_start().starts_with('{') {
        FiniteAlgebra::from_json(&text).map_err(|e| e.to_string())
    } else {
        load_algebra(&text).map_err(|e| e.to_string())
    }
}

#[derive(Serialize)]
struct LawJson {
    name: String,
    holds: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    witness: Option<String>,
}

#[derive(Serialize)]
struct CheckAlgebraJson {
    class: String,
    pass: bool,
    laws: Vec<LawJson>,
}

fn cmd_check_algebra(file: &str, class: &str, json: bool) -> u8 {
    let Some(class) = AlgebraClass::from_name(class) else {
        return input_error(format!("unknown class `{class}`"));
    };
    let algebra = match read_algebra(file) {
        Ok(m) => m,
        Err(e) => return input_error(e),
    };
    let report = match check_class(&algebra, class) {
        Ok(report) => report,
        Err(e) => return input_error(e),
    };
    if json {
        let payload = CheckAlgebraJson {
            class: class.name().to_string(),
            pass: report.all_hold(),
            laws: report
                .laws
                .iter()
                .map(|l| LawJson {
                    name: l.name.clone(),
                    holds: l.holds,
                    witness: l.witness.clone(),
                })
                .collect(),
        };
        println!("{}", serde_json::to_string_pretty(&payload).unwrap());
    } else {
        print!("{report}");
    }
    if report.all_hold() {
        EXIT_OK
    } else {
        EXIT_NO
    }
}

fn cmd_expand(file: &str, json: bool) -> u8 {
    let algebra = match read_algebra(file) {
        Ok(m) => m,
        Err(e) => return input_error(e),
    };
    match algebra.expand() {
        Ok(expanded) => {
            if json {
                println!("{}", expanded.to_json());
            } else {
                print!("{}", expanded.to_text());
            }
            EXIT_OK
        }
        Err(e @ ExpandError::Missing(_)) => input_error(e),
        Err(e @ ExpandError::LawViolated { .. }) => {
            println!("not expandable: {e}");
            EXIT_NO
        }
    }
}

#[derive(Serialize)]
struct CountermodelJson {
    found: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    algebra: Option<serde_json::Value>,
    #[serde(skip_serializing_if = "Option::is_none")]
    assignment: Option<BTreeMap<String, String>>,
}

fn assignment_names(mu: &Assignment, m: &FiniteAlgebra) -> BTreeMap<String, String> {
    mu.bindings()
        .map(|(atom, e)| (atom.to_string(), m.name(e).to_string()))
        .collect()
}

fn cmd_countermodel(sequent: &str, max_size: usize, json: bool) -> u8 {
    if !(1..=4).contains(&max_size) {
        return input_error("--max-size must be between 1 and 4");
    }
    let goal = match parse_sequent(sequent) {
        Ok(seq) => seq,
        Err(e) => return input_error(e),
    };
    match countermodel(&goal, max_size) {
        Some((model, assignment)) => {
            if json {
                let payload = CountermodelJson {
                    found: true,
                    algebra: Some(serde_json::from_str(&model.to_json()).unwrap()),
                    assignment: Some(assignment_names(&assignment, &model)),
                };
                println!("{}", serde_json::to_string_pretty(&payload).unwrap());
            } else {
                println!("countermodel found ({} elements):", model.size());
                print!("{}", model.to_text());
                println!("assignment: {}", assignment.describe(&model));
            }
            EXIT_OK
        }
        None => {
            if json {
                let payload = CountermodelJson {
                    found: false,
                    algebra: None,
                    assignment: None,
                };
                println!("{}", serde_json::to_string_pretty(&payload).unwrap());
            } else {
                println!("no countermodel up to size {max_size}");
            }
            EXIT_NO
        }
    }
}
