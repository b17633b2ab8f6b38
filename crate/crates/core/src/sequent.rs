//! Sequents: a structure antecedent and a formula succedent.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::formula::Formula;
use crate::structure::Structure;

/// `Γ => a` with a canonical antecedent.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Sequent {
    pub antecedent: Structure,
    pub succedent: Formula,
}

impl Sequent {
    pub fn new(antecedent: Structure, succedent: Formula) -> Sequent {
        Sequent {
            antecedent: antecedent.canonicalize(),
            succedent,
        }
    }

    /// `a => b` with a single-formula antecedent.
    pub fn simple(lhs: Formula, rhs: Formula) -> Sequent {
        Sequent::new(Structure::leaf(lhs), rhs)
    }

    /// Total count of atom and connective occurrences on both sides. No
    /// backward rule of the searchable calculi increases this measure, so it
    /// bounds the proof search space.
    pub fn symbol_size(&self) -> usize {
        self.antecedent.symbol_size() + self.succedent.symbol_size()
    }

    /// Subformula closure of all formulas in the sequent.
    pub fn subformulas(&self) -> BTreeSet<Formula> {
        let mut out = self.succedent.subformulas();
        for f in self.antecedent.formulas() {
            out.extend(f.subformulas());
        }
        out
    }

    pub fn atoms(&self) -> BTreeSet<String> {
        let mut out = self.antecedent.atoms();
        out.extend(self.succedent.atoms());
        out
    }

    pub fn display_sugared(&self) -> SequentDisplay<'_> {
        SequentDisplay {
            sequent: self,
            sugar: true,
        }
    }
}

impl fmt::Display for Sequent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} => {}", self.antecedent, self.succedent)
    }
}

pub struct SequentDisplay<'a> {
    sequent: &'a Sequent,
    sugar: bool,
}

impl fmt::Display for SequentDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.sugar {
            write!(
                f,
                "{} => {}",
                self.sequent.antecedent.display_sugared(),
                self.sequent.succedent.display_sugared()
            )
        } else {
            write!(f, "{}", self.sequent)
        }
    }
}

/// A sequent of the simple calculi: formula on both sides.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct SimpleSequent {
    pub lhs: Formula,
    pub rhs: Formula,
}

impl SimpleSequent {
    pub fn new(lhs: Formula, rhs: Formula) -> SimpleSequent {
        SimpleSequent { lhs, rhs }
    }

    pub fn to_sequent(&self) -> Sequent {
        Sequent::simple(self.lhs.clone(), self.rhs.clone())
    }

    /// View a single-formula sequent as a simple one.
    pub fn from_sequent(seq: &Sequent) -> Option<SimpleSequent> {
        match &seq.antecedent {
            Structure::Leaf(f) => Some(SimpleSequent::new(f.clone(), seq.succedent.clone())),
            _ => None,
        }
    }
}

impl fmt::Display for SimpleSequent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} => {}", self.lhs, self.rhs)
    }
}
