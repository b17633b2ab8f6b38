//! Rule-labeled derivation trees.
//!
//! A derivation node is a conclusion sequent, the rule that produced it, and
//! the derivations of its premises. Simple-calculus derivations use
//! single-formula antecedents. The JSON wire format is
//! `{"rule": <name>, "sequent": <text>, "premises": [...]}` where the
//! sequent is rendered in the text syntax of [`crate::parse`].

use serde::{Deserialize, Serialize};

use crate::parse::{parse_sequent, ParseError};
use crate::rules::RuleId;
use crate::sequent::Sequent;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Derivation {
    pub sequent: Sequent,
    pub rule: RuleId,
    pub premises: Vec<Derivation>,
}

impl Derivation {
    pub fn new(sequent: Sequent, rule: RuleId, premises: Vec<Derivation>) -> Derivation {
        Derivation {
            sequent,
            rule,
            premises,
        }
    }

    pub fn leaf(sequent: Sequent, rule: RuleId) -> Derivation {
        Derivation::new(sequent, rule, Vec::new())
    }

    /// Number of nodes.
    pub fn node_count(&self) -> usize {
        1 + self
            .premises
            .iter()
            .map(Derivation::node_count)
            .sum::<usize>()
    }

    /// All sequents in the tree, conclusion first.
    pub fn sequents(&self) -> Vec<&Sequent> {
        let mut out = Vec::new();
        self.collect_sequents(&mut out);
        out
    }

    fn collect_sequents<'a>(&'a self, out: &mut Vec<&'a Sequent>) {
        out.push(&self.sequent);
        for premise in &self.premises {
            premise.collect_sequents(out);
        }
    }

    /// Indented text rendering, conclusion on the first line.
    pub fn render_text(&self, sugar: bool) -> String {
        let mut out = String::new();
        self.render_into(&mut out, 0, sugar);
        out
    }

    fn render_into(&self, out: &mut String, depth: usize, sugar: bool) {
        for _ in 0..depth {
            out.push_str("  ");
        }
        if sugar {
            out.push_str(&format!(
                "{}   [{}]\n",
                self.sequent.display_sugared(),
                self.rule
            ));
        } else {
            out.push_str(&format!("{}   [{}]\n", self.sequent, self.rule));
        }
        for premise in &self.premises {
            premise.render_into(out, depth + 1, sugar);
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&DerivationJson::from(self)).expect("derivation serializes")
    }

    pub fn from_json(text: &str) -> Result<Derivation, DerivationJsonError> {
        let raw: DerivationJson = serde_json::from_str(text).map_err(DerivationJsonError::Json)?;
        raw.try_into()
    }
}

#[derive(Debug, thiserror::Error)]
pub enum DerivationJsonError {
    #[error("invalid derivation JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("unknown rule `{0}`")]
    UnknownRule(String),
    #[error("invalid sequent text: {0}")]
    Sequent(#[from] ParseError),
}

#[derive(Debug, Serialize, Deserialize)]
struct DerivationJson {
    rule: String,
    sequent: String,
    premises: Vec<DerivationJson>,
}

impl From<&Derivation> for DerivationJson {
    fn from(d: &Derivation) -> DerivationJson {
        DerivationJson {
            rule: d.rule.name().to_string(),
            sequent: d.sequent.to_string(),
            premises: d.premises.iter().map(DerivationJson::from).collect(),
        }
    }
}

impl TryFrom<DerivationJson> for Derivation {
    type Error = DerivationJsonError;

    fn try_from(raw: DerivationJson) -> Result<Derivation, DerivationJsonError> {
        let rule = RuleId::from_name(&raw.rule)
            .ok_or_else(|| DerivationJsonError::UnknownRule(raw.rule.clone()))?;
        let sequent = parse_sequent(&raw.sequent)?;
        let premises = raw
            .premises
            .into_iter()
            .map(Derivation::try_from)
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Derivation {
            sequent,
            rule,
            premises,
        })
    }
}
