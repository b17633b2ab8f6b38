//! Text and JSON serialization for finite algebras.
//!
//! The text format is line-oriented. `#` starts a comment, blank lines are
//! skipped. An `elements:` line names the carrier in order, `leq:` is
//! followed by a 0/1 matrix (row `i`, column `j` holds 1 when element `i`
//! is below element `j`), and each operation section holds one row per
//! element with entries given by element name. `neg:` is a single row;
//! `dot:`, `under:`, `star:` and `arrow:` are full tables. `elements`,
//! `leq`, `dot` and `under` are required. Loading performs no law
//! checking.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use super::FiniteAlgebra;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraFormatError {
    #[error("line {line}: {message}")]
    Malformed { line: usize, message: String },
    #[error("line {line}: unknown element `{name}`")]
    UnknownElement { line: usize, name: String },
    #[error("section `{0}` is missing")]
    MissingSection(&'static str),
    #[error("section `{section}` expects {expected} row(s), found {found}")]
    WrongShape {
        section: String,
        expected: usize,
        found: usize,
    },
    #[error("invalid algebra JSON: {0}")]
    Json(String),
}

pub fn load_algebra(text: &str) -> Result<FiniteAlgebra, AlgebraFormatError> {
    let mut elems: Option<Vec<String>> = None;
    let mut leq: Vec<Vec<bool>> = Vec::new();
    let mut neg: Option<Vec<usize>> = None;
    let mut dot: Vec<Vec<usize>> = Vec::new();
    let mut under: Vec<Vec<usize>> = Vec::new();
    let mut star: Vec<Vec<usize>> = Vec::new();
    let mut arrow: Vec<Vec<usize>> = Vec::new();

    #[derive(PartialEq, Clone, Copy)]
    enum Section {
        None,
        Leq,
        Dot,
        Under,
        Star,
        Arrow,
    }
    let mut section = Section::None;

    for (lineno, raw) in text.lines().enumerate() {
        let line = lineno + 1;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let malformed = |message: &str| AlgebraFormatError::Malformed {
            line,
            message: message.to_string(),
        };

        if let Some(rest) = content.strip_prefix("elements:") {
            elems = Some(rest.split_whitespace().map(String::from).collect());
            section = Section::None;
            continue;
        }
        let elems_ref = elems.as_ref();
        let n = elems_ref.map(Vec::len).unwrap_or(0);
        let parse_row = |rest: &str| -> Result<Vec<usize>, AlgebraFormatError> {
            let names = elems_ref.ok_or_else(|| malformed("`elements:` must come first"))?;
            rest.split_whitespace()
                .map(|tok| {
                    names.iter().position(|e| e == tok).ok_or_else(|| {
                        AlgebraFormatError::UnknownElement {
                            line,
                            name: tok.to_string(),
                        }
                    })
                })
                .collect()
        };

        if let Some(rest) = content.strip_prefix("neg:") {
            let row = parse_row(rest)?;
            if row.len() != n {
                return Err(AlgebraFormatError::WrongShape {
                    section: "neg".into(),
                    expected: n,
                    found: row.len(),
                });
            }
            neg = Some(row);
            section = Section::None;
            continue;
        }
        if content == "leq:" {
            section = Section::Leq;
            continue;
        }
        if content == "dot:" {
            section = Section::Dot;
            continue;
        }
        if content == "under:" {
            section = Section::Under;
            continue;
        }
        if content == "star:" {
            section = Section::Star;
            continue;
        }
        if content == "arrow:" {
            section = Section::Arrow;
            continue;
        }

        match section {
            Section::Leq => {
                let row: Result<Vec<bool>, _> = content
                    .split_whitespace()
                    .map(|tok| match tok {
                        "0" => Ok(false),
                        "1" => Ok(true),
                        other => Err(malformed(&format!("expected 0 or 1, found `{other}`"))),
                    })
                    .collect();
                let row = row?;
                if row.len() != n {
                    return Err(AlgebraFormatError::WrongShape {
                        section: "leq".into(),
                        expected: n,
                        found: row.len(),
                    });
                }
                leq.push(row);
            }
            Section::Dot | Section::Under | Section::Star | Section::Arrow => {
                let row = parse_row(content)?;
                if row.len() != n {
                    let name = match section {
                        Section::Dot => "dot",
                        Section::Under => "under",
                        Section::Star => "star",
                        _ => "arrow",
                    };
                    return Err(AlgebraFormatError::WrongShape {
                        section: name.into(),
                        expected: n,
                        found: row.len(),
                    });
                }
                match section {
                    Section::Dot => dot.push(row),
                    Section::Under => under.push(row),
                    Section::Star => star.push(row),
                    _ => arrow.push(row),
                }
            }
            Section::None => return Err(malformed("content outside any section")),
        }
    }

    let elems = elems.ok_or(AlgebraFormatError::MissingSection("elements"))?;
    if elems.is_empty() {
        return Err(AlgebraFormatError::Malformed {
            line: 0,
            message: "carrier must be nonempty".into(),
        });
    }
    let n = elems.len();
    let shape = |name: &str, rows: &Vec<Vec<usize>>| -> Result<(), AlgebraFormatError> {
        if rows.len() != n {
            Err(AlgebraFormatError::WrongShape {
                section: name.into(),
                expected: n,
                found: rows.len(),
            })
        } else {
            Ok(())
        }
    };
    if leq.is_empty() {
        return Err(AlgebraFormatError::MissingSection("leq"));
    }
    if leq.len() != n {
        return Err(AlgebraFormatError::WrongShape {
            section: "leq".into(),
            expected: n,
            found: leq.len(),
        });
    }
    if dot.is_empty() {
        return Err(AlgebraFormatError::MissingSection("dot"));
    }
    shape("dot", &dot)?;
    if under.is_empty() {
        return Err(AlgebraFormatError::MissingSection("under"));
    }
    shape("under", &under)?;

    let mut algebra = FiniteAlgebra::new(elems, leq, dot, under);
    if let Some(neg) = neg {
        algebra = algebra.with_neg(neg);
    }
    match (star.is_empty(), arrow.is_empty()) {
        (true, true) => {}
        (false, false) => {
            shape("star", &star)?;
            shape("arrow", &arrow)?;
            algebra = algebra.with_star_arrow(star, arrow);
        }
        (true, false) => return Err(AlgebraFormatError::MissingSection("star")),
        (false, true) => return Err(AlgebraFormatError::MissingSection("arrow")),
    }
    Ok(algebra)
}

impl FiniteAlgebra {
    /// Render in the text format accepted by [`load_algebra`].
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        out.push_str("elements:");
        for e in self.elems() {
            out.push(' ');
            out.push_str(e);
        }
        out.push_str("\nleq:\n");
        for row in self.leq_table() {
            let cells: Vec<&str> = row.iter().map(|&b| if b { "1" } else { "0" }).collect();
            out.push_str(&cells.join(" "));
            out.push('\n');
        }
        if let Some(neg) = self.neg_table() {
            out.push_str("neg:");
            for &v in neg {
                out.push(' ');
                out.push_str(self.name(v));
            }
            out.push('\n');
        }
        self.write_table(&mut out, "dot", self.dot_table());
        self.write_table(&mut out, "under", self.under_table());
        if let Some(star) = self.star_table() {
            self.write_table(&mut out, "star", star);
        }
        if let Some(arrow) = self.arrow_table() {
            self.write_table(&mut out, "arrow", arrow);
        }
        out
    }

    fn write_table(&self, out: &mut String, name: &str, table: &[Vec<usize>]) {
        out.push_str(name);
        out.push_str(":\n");
        for row in table {
            let cells: Vec<&str> = row.iter().map(|&v| self.name(v)).collect();
            out.push_str(&cells.join(" "));
            out.push('\n');
        }
    }

    pub fn to_json(&self) -> String {
        let by_name = |table: &[Vec<usize>]| -> Vec<Vec<String>> {
            table
                .iter()
                .map(|row| row.iter().map(|&v| self.name(v).to_string()).collect())
                .collect()
        };
        let json = AlgebraJson {
            elements: self.elems().to_vec(),
            leq: self
                .leq_table()
                .iter()
                .map(|row| row.iter().map(|&b| u8::from(b)).collect())
                .collect(),
            neg: self
                .neg_table()
                .map(|t| t.iter().map(|&v| self.name(v).to_string()).collect()),
            dot: by_name(self.dot_table()),
            under: by_name(self.under_table()),
            star: self.star_table().map(by_name),
            arrow: self.arrow_table().map(by_name),
        };
        serde_json::to_string_pretty(&json).expect("algebra serializes")
    }

    pub fn from_json(text: &str) -> Result<FiniteAlgebra, AlgebraFormatError> {
        let json: AlgebraJson =
            serde_json::from_str(text).map_err(|e| AlgebraFormatError::Json(e.to_string()))?;
        let n = json.elements.len();
        let index = |name: &str| -> Result<usize, AlgebraFormatError> {
            json.elements.iter().position(|e| e == name).ok_or_else(|| {
                AlgebraFormatError::UnknownElement {
                    line: 0,
                    name: name.to_string(),
                }
            })
        };
        let table =
            |section: &str, rows: &[Vec<String>]| -> Result<Vec<Vec<usize>>, AlgebraFormatError> {
                if rows.len() != n || rows.iter().any(|r| r.len() != n) {
                    return Err(AlgebraFormatError::WrongShape {
                        section: section.into(),
                        expected: n,
                        found: rows.len(),
                    });
                }
                rows.iter()
                    .map(|row| row.iter().map(|cell| index(cell)).collect())
                    .collect()
            };
        if json.leq.len() != n || json.leq.iter().any(|r| r.len() != n) {
            return Err(AlgebraFormatError::WrongShape {
                section: "leq".into(),
                expected: n,
                found: json.leq.len(),
            });
        }
        let leq = json
            .leq
            .iter()
            .map(|row| row.iter().map(|&v| v != 0).collect())
            .collect();
        let mut algebra = FiniteAlgebra::new(
            json.elements.clone(),
            leq,
            table("dot", &json.dot)?,
            table("under", &json.under)?,
        );
        if let Some(neg) = &json.neg {
            if neg.len() != n {
                return Err(AlgebraFormatError::WrongShape {
                    section: "neg".into(),
                    expected: n,
                    found: neg.len(),
                });
            }
            let neg = neg
                .iter()
                .map(|cell| index(cell))
                .collect::<Result<Vec<_>, _>>()?;
            algebra = algebra.with_neg(neg);
        }
        match (&json.star, &json.arrow) {
            (Some(star), Some(arrow)) => {
                algebra = algebra.with_star_arrow(table("star", star)?, table("arrow", arrow)?);
            }
            (None, None) => {}
            (Some(_), None) => return Err(AlgebraFormatError::MissingSection("arrow")),
            (None, Some(_)) => return Err(AlgebraFormatError::MissingSection("star")),
        }
        Ok(algebra)
    }
}

#[derive(Debug, Serialize, Deserialize)]
struct AlgebraJson {
    elements: Vec<String>,
    leq: Vec<Vec<u8>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    neg: Option<Vec<String>>,
    dot: Vec<Vec<String>>,
    under: Vec<Vec<String>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    star: Option<Vec<Vec<String>>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    arrow: Option<Vec<Vec<String>>>,
}
