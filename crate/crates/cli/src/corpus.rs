//! The corpus runner: a line-oriented regression format
//! `name | system | sequent | expected | source`, decided entry by entry.

use std::path::Path;
use std::time::Instant;

use infl_core::prover::{prove, Outcome};
use infl_core::rules::RuleSetId;
use infl_core::systems::{decide_g_with, decide_qg_with, DecideError};
use infl_core::{parse_sequent, parse_simple_sequent};
use serde::Serialize;

use crate::{config, input_error, EXIT_NO, EXIT_OK};

const BUILTIN: &str = include_str!("../corpus/builtin.corpus");

#[derive(Debug, Clone)]
struct Entry {
    name: String,
    system: RuleSetId,
    sequent: String,
    expected: &'static str,
    #[allow(dead_code)]
    source: String,
}

fn parse_corpus(text: &str) -> Result<Vec<Entry>, String> {
    let mut entries = Vec::new();
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let fields: Vec<&str> = line.split('|').map(str::trim).collect();
        if fields.len() != 5 {
            return Err(format!(
                "line {}: expected `name | system | sequent | expected | source`",
                lineno + 1
            ));
        }
        let system = RuleSetId::from_name(fields[1])
            .filter(|s| matches!(s, RuleSetId::G | RuleSetId::Qg | RuleSetId::Gb))
            .ok_or_else(|| format!("line {}: unknown system `{}`", lineno + 1, fields[1]))?;
        let expected = match fields[3] {
            "proved" => "proved",
            "refuted" => "refuted",
            other => {
                return Err(format!(
                    "line {}: unknown expectation `{other}`",
                    lineno + 1
                ));
            }
        };
        entries.push(Entry {
            name: fields[0].to_string(),
            system,
            sequent: fields[2].to_string(),
            expected,
            source: fields[4].to_string(),
        });
    }
    Ok(entries)
}

fn run_entry(entry: &Entry, time_budget: f64) -> Result<&'static str, String> {
    let cfg = config(time_budget, RuleSetId::Gb);
    match entry.system {
        RuleSetId::Gb => {
            let goal = parse_sequent(&entry.sequent).map_err(|e| e.to_string())?;
            Ok(match prove(&goal, &cfg) {
                Outcome::Proved(_) => "proved",
                Outcome::Refuted => "refuted",
                Outcome::ResourceExceeded(_) => "resource-exceeded",
            })
        }
        RuleSetId::G | RuleSetId::Qg => {
            let goal = parse_simple_sequent(&entry.sequent).map_err(|e| e.to_string())?;
            let decided = if entry.system == RuleSetId::G {
                decide_g_with(&goal.lhs, &goal.rhs, &cfg).map_err(|e| match e {
                    DecideError::Resource(_) => "resource".to_string(),
                    DecideError::Ko(k) => k.to_string(),
                })
            } else {
                decide_qg_with(&goal.lhs, &goal.rhs, &cfg).map_err(|e| e.to_string())
            };
            match decided {
                Ok(true) => Ok("proved"),
                Ok(false) => Ok("refuted"),
                Err(e) if e == "resource" => Ok("resource-exceeded"),
                Err(e) => Err(e),
            }
        }
        _ => unreachable!("corpus systems are g, qg, gb"),
    }
}

#[derive(Serialize)]
struct EntryJson {
    name: String,
    system: String,
    sequent: String,
    expected: String,
    got: String,
    pass: bool,
}

#[derive(Serialize)]
struct CorpusJson {
    entries: Vec<EntryJson>,
    passed: usize,
    failed: usize,
}

pub fn cmd_corpus(file: Option<&Path>, time_budget: f64, json: bool) -> u8 {
    let text = match file {
        Some(path) => match std::fs::read_to_string(path) {
            Ok(text) => text,
            Err(e) => return input_error(format!("{}: {e}", path.display())),
        },
        None => BUILTIN.to_string(),
    };
    let entries = match parse_corpus(&text) {
        Ok(entries) => entries,
        Err(e) => return input_error(e),
    };
    let started = Instant::now();
    let mut results = Vec::new();
    for entry in &entries {
        let got = match run_entry(entry, time_budget) {
            Ok(kind) => kind.to_string(),
            Err(e) => format!("error: {e}"),
        };
        let pass = got == entry.expected;
        if !json {
            if pass {
                println!("PASS {}", entry.name);
            } else {
                println!(
                    "FAIL {}: expected {}, got {got}",
                    entry.name, entry.expected
                );
            }
        }
        results.push(EntryJson {
            name: entry.name.clone(),
            system: entry.system.name().to_string(),
            sequent: entry.sequent.clone(),
            expected: entry.expected.to_string(),
            got,
            pass,
        });
    }
    let passed = results.iter().filter(|r| r.pass).count();
    let failed = results.len() - passed;
    if json {
        let payload = CorpusJson {
            entries: results,
            passed,
            failed,
        };
        println!("{}", serde_json::to_string_pretty(&payload).unwrap());
    } else {
        println!(
            "{passed} passed, {failed} failed, {} total in {:?}",
            passed + failed,
            started.elapsed()
        );
    }
    if failed == 0 {
        EXIT_OK
    } else {
        EXIT_NO
    }
}
