//! Formula syntax for the bounded bi-residuated language.
//!
//! Formulas are built from atoms with fusion `.`, its residual `\`, lattice
//! connectives `/\` and `\/`, a second (non-associative) fusion `*` with
//! residual `->`, and the falsity constant `bot`. Negation and truth are
//! abbreviations and are always stored desugared:
//!
//! * `~a` is `a -> bot`
//! * `top` is `bot -> bot`
//!
//! The negation-language fragment (atoms, `.`, `\`, `/\`, `\/`, `~`) is the
//! input language of the simple calculi and the Kolmogorov translation; its
//! formulas are exactly those in which `->`, `*` and `bot` occur only inside
//! the `~` pattern.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

/// A formula. `Ord` provides the fixed total order used to canonicalize
/// structures; beyond being total and deterministic its details carry no
/// meaning.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Formula {
    Atom(String),
    /// Associative-commutative fusion `a . b`.
    Fuse(Box<Formula>, Box<Formula>),
    /// Residual of fusion: `a \ b`.
    Under(Box<Formula>, Box<Formula>),
    /// Lattice meet `a /\ b`.
    Meet(Box<Formula>, Box<Formula>),
    /// Lattice join `a \/ b`.
    Join(Box<Formula>, Box<Formula>),
    /// Non-associative fusion `a * b`.
    Star(Box<Formula>, Box<Formula>),
    /// Residual of `*`: `a -> b`.
    Arrow(Box<Formula>, Box<Formula>),
    /// Least element `bot`.
    Bottom,
}

impl Formula {
    pub fn atom(name: impl Into<String>) -> Formula {
        Formula::Atom(name.into())
    }

    pub fn fuse(a: Formula, b: Formula) -> Formula {
        Formula::Fuse(Box::new(a), Box::new(b))
    }

    pub fn under(a: Formula, b: Formula) -> Formula {
        Formula::Under(Box::new(a), Box::new(b))
    }

    pub fn meet(a: Formula, b: Formula) -> Formula {
        Formula::Meet(Box::new(a), Box::new(b))
    }

    pub fn join(a: Formula, b: Formula) -> Formula {
        Formula::Join(Box::new(a), Box::new(b))
    }

    pub fn star(a: Formula, b: Formula) -> Formula {
        Formula::Star(Box::new(a), Box::new(b))
    }

    pub fn arrow(a: Formula, b: Formula) -> Formula {
        Formula::Arrow(Box::new(a), Box::new(b))
    }

    /// `~a`, stored as `a -> bot`.
    #[allow(clippy::should_implement_trait)]
    pub fn neg(a: Formula) -> Formula {
        Formula::arrow(a, Formula::Bottom)
    }

    /// `top`, stored as `bot -> bot`.
    pub fn top() -> Formula {
        Formula::neg(Formula::Bottom)
    }

    /// If this formula is a stored negation `a -> bot`, return `a`.
    pub fn as_neg(&self) -> Option<&Formula> {
        match self {
            Formula::Arrow(a, b) if **b == Formula::Bottom => Some(a),
            _ => None,
        }
    }

    /// Number of atom and connective occurrences. `bot` counts as one
    /// symbol; a stored `~a` counts as `a -> bot`, i.e. `size(a) + 2`.
    pub fn symbol_size(&self) -> usize {
        match self {
            Formula::Atom(_) | Formula::Bottom => 1,
            Formula::Fuse(a, b)
            | Formula::Under(a, b)
            | Formula::Meet(a, b)
            | Formula::Join(a, b)
            | Formula::Star(a, b)
            | Formula::Arrow(a, b) => 1 + a.symbol_size() + b.symbol_size(),
        }
    }

    /// The set of subformulas, including the formula itself.
    pub fn subformulas(&self) -> BTreeSet<Formula> {
        let mut out = BTreeSet::new();
        self.collect_subformulas(&mut out);
        out
    }

    fn collect_subformulas(&self, out: &mut BTreeSet<Formula>) {
        out.insert(self.clone());
        match self {
            Formula::Atom(_) | Formula::Bottom => {}
            Formula::Fuse(a, b)
            | Formula::Under(a, b)
            | Formula::Meet(a, b)
            | Formula::Join(a, b)
            | Formula::Star(a, b)
            | Formula::Arrow(a, b) => {
                a.collect_subformulas(out);
                b.collect_subformulas(out);
            }
        }
    }

    /// Atom names occurring in the formula.
    pub fn atoms(&self) -> BTreeSet<String> {
        let mut out = BTreeSet::new();
        self.collect_atoms(&mut out);
        out
    }

    pub(crate) fn collect_atoms(&self, out: &mut BTreeSet<String>) {
        match self {
            Formula::Atom(p) => {
                out.insert(p.clone());
            }
            Formula::Bottom => {}
            Formula::Fuse(a, b)
            | Formula::Under(a, b)
            | Formula::Meet(a, b)
            | Formula::Join(a, b)
            | Formula::Star(a, b)
            | Formula::Arrow(a, b) => {
                a.collect_atoms(out);
                b.collect_atoms(out);
            }
        }
    }

    /// True for formulas of the negation language: atoms, `.`, `\`, `/\`,
    /// `\/`, with `->`/`bot` occurring only as the stored `~` pattern.
    pub fn in_neg_language(&self) -> bool {
        match self {
            Formula::Atom(_) => true,
            Formula::Bottom | Formula::Star(..) => false,
            Formula::Arrow(a, b) => **b == Formula::Bottom && a.in_neg_language(),
            Formula::Fuse(a, b)
            | Formula::Under(a, b)
            | Formula::Meet(a, b)
            | Formula::Join(a, b) => a.in_neg_language() && b.in_neg_language(),
        }
    }

    /// Render with `~`/`top` sugar.
    pub fn display_sugared(&self) -> FormulaDisplay<'_> {
        FormulaDisplay {
            formula: self,
            sugar: true,
        }
    }
}

/// Binding strength, loosest first. Used by both the printer and the parser.
/// All binary connectives are non-associative, so a child at the same level
/// as its parent must be parenthesized.
pub(crate) fn precedence(f: &Formula) -> u8 {
    match f {
        Formula::Join(..) => 1,
        Formula::Meet(..) => 2,
        Formula::Arrow(..) => 3,
        Formula::Under(..) => 4,
        Formula::Star(..) => 5,
        Formula::Fuse(..) => 6,
        // atoms, bot, and sugared ~ bind tightest
        Formula::Atom(_) | Formula::Bottom => 7,
    }
}

pub struct FormulaDisplay<'a> {
    formula: &'a Formula,
    sugar: bool,
}

impl fmt::Display for FormulaDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_formula(f, self.formula, self.sugar, 0)
    }
}

impl fmt::Display for Formula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_formula(f, self, false, 0)
    }
}

fn write_formula(f: &mut fmt::Formatter<'_>, x: &Formula, sugar: bool, min: u8) -> fmt::Result {
    if sugar {
        if *x == Formula::top() {
            return write!(f, "top");
        }
        if let Some(inner) = x.as_neg() {
            // ~ binds tightest; its operand needs parens unless primary or ~
            write!(f, "~")?;
            let primary = matches!(inner, Formula::Atom(_) | Formula::Bottom)
                || inner.as_neg().is_some()
                || *inner == Formula::top();
            if primary {
                return write_formula(f, inner, sugar, 0);
            }
            write!(f, "(")?;
            write_formula(f, inner, sugar, 0)?;
            return write!(f, ")");
        }
    }
    let prec = precedence(x);
    let (op, a, b) = match x {
        Formula::Atom(p) => return write!(f, "{p}"),
        Formula::Bottom => return write!(f, "bot"),
        Formula::Fuse(a, b) => (".", a, b),
        Formula::Under(a, b) => ("\\", a, b),
        Formula::Meet(a, b) => ("/\\", a, b),
        Formula::Join(a, b) => ("\\/", a, b),
        Formula::Star(a, b) => ("*", a, b),
        Formula::Arrow(a, b) => ("->", a, b),
    };
    let parens = prec < min;
    if parens {
        write!(f, "(")?;
    }
    // non-associative: children must bind strictly tighter
    write_formula(f, a, sugar, prec + 1)?;
    write!(f, " {op} ")?;
    write_formula(f, b, sugar, prec + 1)?;
    if parens {
        write!(f, ")")?;
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p() -> Formula {
        Formula::atom("p")
    }

    fn q() -> Formula {
        Formula::atom("q")
    }

    #[test]
    fn negation_is_stored_desugared() {
        assert_eq!(Formula::neg(p()), Formula::arrow(p(), Formula::Bottom));
        assert_eq!(
            Formula::top(),
            Formula::arrow(Formula::Bottom, Formula::Bottom)
        );
    }

    #[test]
    fn symbol_size_counts_atoms_and_connectives() {
        assert_eq!(p().symbol_size(), 1);
        assert_eq!(Formula::fuse(p(), q()).symbol_size(), 3);
        assert_eq!(Formula::neg(p()).symbol_size(), 3);
        assert_eq!(Formula::Bottom.symbol_size(), 1);
    }

    #[test]
    fn subformulas_of_fusion() {
        let f = Formula::fuse(p(), q());
        let subs = f.subformulas();
        assert_eq!(subs.len(), 3);
        assert!(subs.contains(&f) && subs.contains(&p()) && subs.contains(&q()));
    }

    #[test]
    fn subformulas_of_negation_include_bottom() {
        let f = Formula::neg(p());
        let subs = f.subformulas();
        assert_eq!(subs.len(), 3);
        assert!(subs.contains(&Formula::Bottom));
        assert!(subs.contains(&p()));
    }

    #[test]
    fn neg_language_membership() {
        assert!(Formula::neg(Formula::fuse(p(), q())).in_neg_language());
        assert!(!Formula::star(p(), q()).in_neg_language());
        assert!(!Formula::arrow(p(), q()).in_neg_language());
        assert!(!Formula::Bottom.in_neg_language());
        assert!(!Formula::top().in_neg_language());
    }

    #[test]
    fn display_plain_and_sugared() {
        let f = Formula::neg(Formula::neg(p()));
        assert_eq!(f.to_string(), "(p -> bot) -> bot");
        assert_eq!(f.display_sugared().to_string(), "~~p");
        assert_eq!(Formula::top().display_sugared().to_string(), "top");
        let g = Formula::neg(Formula::fuse(p(), q()));
        assert_eq!(g.display_sugared().to_string(), "~(p . q)");
    }

    #[test]
    fn display_parenthesizes_non_associative_nesting() {
        let f = Formula::fuse(Formula::fuse(p(), q()), p());
        assert_eq!(f.to_string(), "(p . q) . p");
        let g = Formula::under(Formula::star(p(), q()), p());
        assert_eq!(g.to_string(), "p * q \\ p");
    }
}
