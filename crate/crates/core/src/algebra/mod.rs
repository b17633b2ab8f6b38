//! Finite algebras: models for the calculi and everything needed to check
//! them: law checking per algebra class, formula evaluation, sequent
//! validity, the expansion of a quasi-involutive algebra to a bounded
//! bi-residuated one, small-algebra enumeration, and countermodel search.
//!
//! An algebra is a carrier with an order relation and operation tables.
//! Meets and joins are derived from the order; `.` and `\` tables are
//! always present, while `~`, `*` and `->` tables are optional. Loading
//! never checks laws; that is [`check_class`]'s job.
//!
//! [`check_class`]: laws::check_class

mod enumerate;
mod format;
mod laws;

pub use enumerate::{countermodel, enumerate_algebras};
pub use format::{load_algebra, AlgebraFormatError};
pub use laws::{
    check_class, classify_negation, no_unit_witness, AlgebraClass, ClassReport, LawReport,
    MissingTable, NegationClass,
};

use std::collections::BTreeMap;
use std::fmt;

use thiserror::Error;

use crate::formula::Formula;
use crate::sequent::Sequent;

/// Derived meet/join tables; `None` marks pairs the order fails to bound.
type PartialTable = Vec<Vec<Option<usize>>>;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteAlgebra {
    elems: Vec<String>,
    leq: Vec<Vec<bool>>,
    dot: Vec<Vec<usize>>,
    under: Vec<Vec<usize>>,
    neg: Option<Vec<usize>>,
    star: Option<Vec<Vec<usize>>>,
    arrow: Option<Vec<Vec<usize>>>,
    // glb/lub derived from leq
    meet: PartialTable,
    join: PartialTable,
}

impl FiniteAlgebra {
    pub fn new(
        elems: Vec<String>,
        leq: Vec<Vec<bool>>,
        dot: Vec<Vec<usize>>,
        under: Vec<Vec<usize>>,
    ) -> FiniteAlgebra {
        let (meet, join) = derive_lattice_tables(&leq);
        FiniteAlgebra {
            elems,
            leq,
            dot,
            under,
            neg: None,
            star: None,
            arrow: None,
            meet,
            join,
        }
    }

    pub fn with_neg(mut self, neg: Vec<usize>) -> FiniteAlgebra {
        self.neg = Some(neg);
        self
    }

    pub fn with_star_arrow(
        mut self,
        star: Vec<Vec<usize>>,
        arrow: Vec<Vec<usize>>,
    ) -> FiniteAlgebra {
        self.star = Some(star);
        self.arrow = Some(arrow);
        self
    }

    pub fn size(&self) -> usize {
        self.elems.len()
    }

    pub fn elems(&self) -> &[String] {
        &self.elems
    }

    pub fn name(&self, i: usize) -> &str {
        &self.elems[i]
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.elems.iter().position(|e| e == name)
    }

    pub fn leq(&self, i: usize, j: usize) -> bool {
        self.leq[i][j]
    }

    pub fn leq_table(&self) -> &[Vec<bool>] {
        &self.leq
    }

    pub fn dot(&self, i: usize, j: usize) -> usize {
        self.dot[i][j]
    }

    pub fn dot_table(&self) -> &[Vec<usize>] {
        &self.dot
    }

    pub fn under(&self, i: usize, j: usize) -> usize {
        self.under[i][j]
    }

    pub fn under_table(&self) -> &[Vec<usize>] {
        &self.under
    }

    pub fn neg(&self, i: usize) -> Option<usize> {
        self.neg.as_ref().map(|t| t[i])
    }

    pub fn neg_table(&self) -> Option<&[usize]> {
        self.neg.as_deref()
    }

    pub fn star(&self, i: usize, j: usize) -> Option<usize> {
        self.star.as_ref().map(|t| t[i][j])
    }

    pub fn star_table(&self) -> Option<&[Vec<usize>]> {
        self.star.as_deref()
    }

    pub fn arrow(&self, i: usize, j: usize) -> Option<usize> {
        self.arrow.as_ref().map(|t| t[i][j])
    }

    pub fn arrow_table(&self) -> Option<&[Vec<usize>]> {
        self.arrow.as_deref()
    }

    pub fn meet(&self, i: usize, j: usize) -> Option<usize> {
        self.meet[i][j]
    }

    pub fn join(&self, i: usize, j: usize) -> Option<usize> {
        self.join[i][j]
    }

    /// The least element under `leq`, if there is one.
    pub fn least(&self) -> Option<usize> {
        (0..self.size()).find(|&i| (0..self.size()).all(|j| self.leq[i][j]))
    }

    /// The greatest element under `leq`, if there is one.
    pub fn greatest(&self) -> Option<usize> {
        (0..self.size()).find(|&i| (0..self.size()).all(|j| self.leq[j][i]))
    }

    /// The built-in five-element involutive example: the diamond order
    /// `c < a, b, e < d` with `a`, `b`, `e` pairwise incomparable, a fixed
    /// involution swapping `c` and `d`, and the matching fusion and
    /// residual tables. It is involutive but embeds in no unital algebra:
    /// `x . ~x` is not constant.
    pub fn involutive_example() -> FiniteAlgebra {
        let elems = ["a", "b", "c", "d", "e"].map(String::from).to_vec();
        let leq = vec![
            vec![true, false, false, true, false],
            vec![false, true, false, true, false],
            vec![true, true, true, true, true],
            vec![false, false, false, true, false],
            vec![false, false, false, true, true],
        ];
        let dot = vec![
            vec![1, 0, 2, 3, 3],
            vec![0, 1, 2, 3, 3],
            vec![2, 2, 2, 2, 2],
            vec![3, 3, 2, 3, 3],
            vec![3, 3, 2, 3, 3],
        ];
        let under = vec![
            vec![1, 0, 2, 3, 2],
            vec![0, 1, 2, 3, 2],
            vec![3, 3, 3, 3, 3],
            vec![2, 2, 2, 3, 2],
            vec![2, 2, 2, 3, 2],
        ];
        FiniteAlgebra::new(elems, leq, dot, under).with_neg(vec![0, 1, 3, 2, 4])
    }

    /// Extend a quasi-involutive algebra with `*`, `->` and bounds:
    /// `a * b` is the least element when `a <= ~b` and the greatest
    /// otherwise, and `a -> b` is `~a` unless `b` is the greatest element,
    /// in which case it is the greatest element. The result is a bounded
    /// bi-residuated algebra in which `~a` coincides with `a -> bot`.
    pub fn expand(&self) -> Result<FiniteAlgebra, ExpandError> {
        let report = check_class(self, AlgebraClass::QIncRl).map_err(ExpandError::Missing)?;
        if let Some(law) = report.laws.iter().find(|l| !l.holds) {
            return Err(ExpandError::LawViolated {
                law: law.name.clone(),
                witness: law.witness.clone().unwrap_or_default(),
            });
        }
        let n = self.size();
        let bottom = self.least().expect("lattice has a least element");
        let top = self.greatest().expect("lattice has a greatest element");
        let neg = self
            .neg
            .as_ref()
            .expect("quasi-involutive algebra has a negation");
        let mut star = vec![vec![0; n]; n];
        let mut arrow = vec![vec![0; n]; n];
        for a in 0..n {
            for b in 0..n {
                star[a][b] = if self.leq(a, neg[b]) { bottom } else { top };
                arrow[a][b] = if b != top { neg[a] } else { top };
            }
        }
        Ok(self.clone().with_star_arrow(star, arrow))
    }

    pub fn eval(&self, f: &Formula, assignment: &Assignment) -> Result<usize, EvalError> {
        self.eval_with(f, assignment, NegStyle::Tables)
    }

    /// Homomorphic evaluation. With [`NegStyle::Tables`] (the default),
    /// `->`, `*` and `bot` evaluate through their tables and bounds. With
    /// [`NegStyle::NegTable`] the stored `~` pattern `a -> bot` evaluates
    /// through the `~` table instead, and `*`, bare `->` and bare `bot`
    /// are rejected; that is how negation-language sequents are checked
    /// against algebras that carry only a negation.
    pub fn eval_with(
        &self,
        f: &Formula,
        assignment: &Assignment,
        style: NegStyle,
    ) -> Result<usize, EvalError> {
        match f {
            Formula::Atom(p) => assignment
                .get(p)
                .ok_or_else(|| EvalError::UnboundAtom(p.clone())),
            Formula::Bottom => match style {
                NegStyle::Tables => self.least().ok_or(EvalError::NoLeast),
                NegStyle::NegTable => Err(EvalError::OutsideNegLanguage("bot")),
            },
            Formula::Arrow(a, b) => match style {
                NegStyle::Tables => {
                    let x = self.eval_with(a, assignment, style)?;
                    let y = self.eval_with(b, assignment, style)?;
                    self.arrow(x, y).ok_or(EvalError::MissingTable("arrow"))
                }
                NegStyle::NegTable => {
                    if **b != Formula::Bottom {
                        return Err(EvalError::OutsideNegLanguage("->"));
                    }
                    let x = self.eval_with(a, assignment, style)?;
                    self.neg(x).ok_or(EvalError::MissingTable("neg"))
                }
            },
            Formula::Star(a, b) => match style {
                NegStyle::Tables => {
                    let x = self.eval_with(a, assignment, style)?;
                    let y = self.eval_with(b, assignment, style)?;
                    self.star(x, y).ok_or(EvalError::MissingTable("star"))
                }
                NegStyle::NegTable => Err(EvalError::OutsideNegLanguage("*")),
            },
            Formula::Fuse(a, b) => {
                let x = self.eval_with(a, assignment, style)?;
                let y = self.eval_with(b, assignment, style)?;
                Ok(self.dot(x, y))
            }
            Formula::Under(a, b) => {
                let x = self.eval_with(a, assignment, style)?;
                let y = self.eval_with(b, assignment, style)?;
                Ok(self.under(x, y))
            }
            Formula::Meet(a, b) => {
                let x = self.eval_with(a, assignment, style)?;
                let y = self.eval_with(b, assignment, style)?;
                self.meet(x, y).ok_or(EvalError::NoLattice)
            }
            Formula::Join(a, b) => {
                let x = self.eval_with(a, assignment, style)?;
                let y = self.eval_with(b, assignment, style)?;
                self.join(x, y).ok_or(EvalError::NoLattice)
            }
        }
    }

    pub fn valid(&self, seq: &Sequent) -> Result<Validity, EvalError> {
        self.valid_with(seq, NegStyle::Tables)
    }

    /// Exhaustive validity of `G => a`: the antecedent's formula image must
    /// evaluate below the succedent under every assignment. Returns the
    /// first refuting assignment otherwise.
    pub fn valid_with(&self, seq: &Sequent, style: NegStyle) -> Result<Validity, EvalError> {
        let atoms: Vec<String> = seq.atoms().into_iter().collect();
        let lhs = seq.antecedent.to_formula();
        for assignment in Assignments::new(self.size(), &atoms) {
            let left = self.eval_with(&lhs, &assignment, style)?;
            let right = self.eval_with(&seq.succedent, &assignment, style)?;
            if !self.leq(left, right) {
                return Ok(Validity::Refuted(assignment));
            }
        }
        Ok(Validity::Valid)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Validity {
    Valid,
    Refuted(Assignment),
}

impl Validity {
    pub fn is_valid(&self) -> bool {
        matches!(self, Validity::Valid)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum NegStyle {
    #[default]
    Tables,
    NegTable,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EvalError {
    #[error("atom `{0}` is not assigned")]
    UnboundAtom(String),
    #[error("algebra has no `{0}` table")]
    MissingTable(&'static str),
    #[error("`{0}` does not occur in the negation language")]
    OutsideNegLanguage(&'static str),
    #[error("order has no least element")]
    NoLeast,
    #[error("order is not a lattice")]
    NoLattice,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ExpandError {
    #[error("expansion requires a quasi-involutive algebra: {0}")]
    Missing(MissingTable),
    #[error("expansion precondition fails law `{law}` (witness: {witness})")]
    LawViolated { law: String, witness: String },
}

/// A total map from the atoms of a sequent to carrier elements.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Assignment {
    map: BTreeMap<String, usize>,
}

impl Assignment {
    pub fn new() -> Assignment {
        Assignment::default()
    }

    pub fn bind(mut self, atom: impl Into<String>, element: usize) -> Assignment {
        self.map.insert(atom.into(), element);
        self
    }

    pub fn get(&self, atom: &str) -> Option<usize> {
        self.map.get(atom).copied()
    }

    /// Bindings in atom order.
    pub fn bindings(&self) -> impl Iterator<Item = (&str, usize)> {
        self.map.iter().map(|(atom, &e)| (atom.as_str(), e))
    }

    pub fn describe(&self, algebra: &FiniteAlgebra) -> String {
        self.map
            .iter()
            .map(|(atom, &e)| format!("{atom} := {}", algebra.name(e)))
            .collect::<Vec<_>>()
            .join(", ")
    }
}

impl fmt::Display for Assignment {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, (atom, e)) in self.map.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{atom} := #{e}")?;
        }
        Ok(())
    }
}

/// Odometer over all `size^k` assignments of `k` atoms, in lexicographic
/// order.
struct Assignments<'a> {
    size: usize,
    atoms: &'a [String],
    counters: Vec<usize>,
    done: bool,
}

impl<'a> Assignments<'a> {
    fn new(size: usize, atoms: &'a [String]) -> Assignments<'a> {
        Assignments {
            size,
            atoms,
            counters: vec![0; atoms.len()],
            done: size == 0,
        }
    }
}

impl Iterator for Assignments<'_> {
    type Item = Assignment;

    fn next(&mut self) -> Option<Assignment> {
        if self.done {
            return None;
        }
        let mut assignment = Assignment::new();
        for (atom, &e) in self.atoms.iter().zip(&self.counters) {
            assignment = assignment.bind(atom.clone(), e);
        }
        let mut i = 0;
        loop {
            if i == self.counters.len() {
                self.done = true;
                break;
            }
            self.counters[i] += 1;
            if self.counters[i] < self.size {
                break;
            }
            self.counters[i] = 0;
            i += 1;
        }
        Some(assignment)
    }
}

fn derive_lattice_tables(leq: &[Vec<bool>]) -> (PartialTable, PartialTable) {
    let n = leq.len();
    let mut meet = vec![vec![None; n]; n];
    let mut join = vec![vec![None; n]; n];
    for i in 0..n {
        for j in 0..n {
            let lower: Vec<usize> = (0..n).filter(|&k| leq[k][i] && leq[k][j]).collect();
            meet[i][j] = lower
                .iter()
                .copied()
                .find(|&m| lower.iter().all(|&k| leq[k][m]));
            let upper: Vec<usize> = (0..n).filter(|&k| leq[i][k] && leq[j][k]).collect();
            join[i][j] = upper
                .iter()
                .copied()
                .find(|&m| upper.iter().all(|&k| leq[m][k]));
        }
    }
    (meet, join)
}
