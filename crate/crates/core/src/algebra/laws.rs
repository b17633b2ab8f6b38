//! Law checking per algebra class and the negation classifier.

use std::fmt;

use thiserror::Error;

use super::FiniteAlgebra;

/// The algebra classes the checker knows: plain lattices, the residuated
/// lattice-ordered commutative semigroups (`crl`), their negation variants
/// in increasing strength (minimal `mncrl`, De Morgan `dncrl`,
/// quasi-involutive `qincrl`, involutive `incrl`; subminimal is not a
/// class of its own), and the bounded bi-residuated class (`cbrl`) with a
/// second fusion, its residual, and bounds.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AlgebraClass {
    Lattice,
    CRl,
    MnCRl,
    DnCRl,
    QIncRl,
    IncRl,
    CbRl,
}

impl AlgebraClass {
    pub fn name(self) -> &'static str {
        match self {
            AlgebraClass::Lattice => "lattice",
            AlgebraClass::CRl => "crl",
            AlgebraClass::MnCRl => "mncrl",
            AlgebraClass::DnCRl => "dncrl",
            AlgebraClass::QIncRl => "qincrl",
            AlgebraClass::IncRl => "incrl",
            AlgebraClass::CbRl => "cbrl",
        }
    }

    pub fn from_name(name: &str) -> Option<AlgebraClass> {
        let all = [
            AlgebraClass::Lattice,
            AlgebraClass::CRl,
            AlgebraClass::MnCRl,
            AlgebraClass::DnCRl,
            AlgebraClass::QIncRl,
            AlgebraClass::IncRl,
            AlgebraClass::CbRl,
        ];
        all.into_iter().find(|c| c.name() == name)
    }

    fn needs_neg(self) -> bool {
        matches!(
            self,
            AlgebraClass::MnCRl | AlgebraClass::DnCRl | AlgebraClass::QIncRl | AlgebraClass::IncRl
        )
    }
}

impl fmt::Display for AlgebraClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.name())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("class `{class}` requires a `{op}` table")]
pub struct MissingTable {
    pub class: AlgebraClass,
    pub op: &'static str,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LawReport {
    pub name: String,
    pub holds: bool,
    /// Elements violating the law, by name.
    pub witness: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassReport {
    pub class: AlgebraClass,
    pub laws: Vec<LawReport>,
}

impl ClassReport {
    pub fn all_hold(&self) -> bool {
        self.laws.iter().all(|l| l.holds)
    }

    pub fn failures(&self) -> impl Iterator<Item = &LawReport> {
        self.laws.iter().filter(|l| !l.holds)
    }
}

impl fmt::Display for ClassReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "class {}: {}",
            self.class,
            if self.all_hold() { "pass" } else { "FAIL" }
        )?;
        for law in &self.laws {
            match (&law.holds, &law.witness) {
                (true, _) => writeln!(f, "  pass  {}", law.name)?,
                (false, Some(w)) => writeln!(f, "  FAIL  {} (witness: {w})", law.name)?,
                (false, None) => writeln!(f, "  FAIL  {}", law.name)?,
            }
        }
        Ok(())
    }
}

/// Check every law of `class` against the tables of `m`, reporting each
/// with a witness on failure.
pub fn check_class(m: &FiniteAlgebra, class: AlgebraClass) -> Result<ClassReport, MissingTable> {
    if class.needs_neg() && m.neg_table().is_none() {
        return Err(MissingTable { class, op: "neg" });
    }
    if class == AlgebraClass::CbRl && (m.star_table().is_none() || m.arrow_table().is_none()) {
        let op = if m.star_table().is_none() {
            "star"
        } else {
            "arrow"
        };
        return Err(MissingTable { class, op });
    }

    let mut laws = Vec::new();
    lattice_laws(m, &mut laws);
    if class != AlgebraClass::Lattice {
        semigroup_laws(m, &mut laws);
    }
    match class {
        AlgebraClass::Lattice | AlgebraClass::CRl => {}
        AlgebraClass::MnCRl => {
            push(&mut laws, "mn: a <= ~c implies c <= ~a", law_mn(m));
        }
        AlgebraClass::DnCRl => {
            push(&mut laws, "mn: a <= ~c implies c <= ~a", law_mn(m));
            push(&mut laws, "dn-upper: ~~a <= a", law_dn_upper(m));
        }
        AlgebraClass::QIncRl => {
            push(
                &mut laws,
                "smn: a . b <= ~c implies c . b <= ~a",
                law_smn(m),
            );
            push(&mut laws, "mn: a <= ~c implies c <= ~a", law_mn(m));
            push(&mut laws, "dn1: a <= ~~a", law_dn1(m));
        }
        AlgebraClass::IncRl => {
            push(&mut laws, "dn: ~~a = a", law_dn(m));
            push(&mut laws, "in: a \\ ~b = b \\ ~a", law_in(m));
        }
        AlgebraClass::CbRl => {
            push(&mut laws, "star commutative", law_star_commutative(m));
            push(
                &mut laws,
                "star residuation: a * b <= c iff b <= a -> c",
                law_star_res(m),
            );
            push(&mut laws, "bottom is least", law_has_least(m));
            push(&mut laws, "top is greatest", law_has_greatest(m));
            push(
                &mut laws,
                "interchange: (a . b) * c = bot implies (a . c) * b = bot",
                law_interchange(m),
            );
            push(
                &mut laws,
                "star negation: a * (a -> bot) = bot",
                law_star_neg(m),
            );
            if m.neg_table().is_some() {
                push(
                    &mut laws,
                    "neg coincides with a -> bot",
                    law_neg_coherent(m),
                );
            }
        }
    }
    Ok(ClassReport { class, laws })
}

fn push(laws: &mut Vec<LawReport>, name: &str, witness: Option<String>) {
    laws.push(LawReport {
        name: name.to_string(),
        holds: witness.is_none(),
        witness,
    });
}

fn lattice_laws(m: &FiniteAlgebra, laws: &mut Vec<LawReport>) {
    push(laws, "leq reflexive", {
        (0..m.size())
            .find(|&a| !m.leq(a, a))
            .map(|a| m.name(a).to_string())
    });
    push(laws, "leq antisymmetric", {
        pairs(m.size())
            .find(|&(a, b)| a != b && m.leq(a, b) && m.leq(b, a))
            .map(|(a, b)| format!("{}, {}", m.name(a), m.name(b)))
    });
    push(laws, "leq transitive", {
        triples(m.size())
            .find(|&(a, b, c)| m.leq(a, b) && m.leq(b, c) && !m.leq(a, c))
            .map(|(a, b, c)| format!("{}, {}, {}", m.name(a), m.name(b), m.name(c)))
    });
    push(laws, "meets exist", {
        pairs(m.size())
            .find(|&(a, b)| m.meet(a, b).is_none())
            .map(|(a, b)| format!("{}, {}", m.name(a), m.name(b)))
    });
    push(laws, "joins exist", {
        pairs(m.size())
            .find(|&(a, b)| m.join(a, b).is_none())
            .map(|(a, b)| format!("{}, {}", m.name(a), m.name(b)))
    });
}

fn semigroup_laws(m: &FiniteAlgebra, laws: &mut Vec<LawReport>) {
    push(laws, "dot commutative", {
        pairs(m.size())
            .find(|&(a, b)| m.dot(a, b) != m.dot(b, a))
            .map(|(a, b)| format!("{}, {}", m.name(a), m.name(b)))
    });
    push(laws, "dot associative", {
        triples(m.size())
            .find(|&(a, b, c)| m.dot(m.dot(a, b), c) != m.dot(a, m.dot(b, c)))
            .map(|(a, b, c)| format!("{}, {}, {}", m.name(a), m.name(b), m.name(c)))
    });
    push(laws, "residuation: a . b <= c iff b <= a \\ c", {
        triples(m.size())
            .find(|&(a, b, c)| m.leq(m.dot(a, b), c) != m.leq(b, m.under(a, c)))
            .map(|(a, b, c)| format!("{}, {}, {}", m.name(a), m.name(b), m.name(c)))
    });
}

fn law_mn(m: &FiniteAlgebra) -> Option<String> {
    let neg = m.neg_table().unwrap();
    pairs(m.size())
        .find(|&(a, c)| m.leq(a, neg[c]) && !m.leq(c, neg[a]))
        .map(|(a, c)| format!("{}, {}", m.name(a), m.name(c)))
}

fn law_smn(m: &FiniteAlgebra) -> Option<String> {
    let neg = m.neg_table().unwrap();
    triples(m.size())
        .find(|&(a, b, c)| m.leq(m.dot(a, b), neg[c]) && !m.leq(m.dot(c, b), neg[a]))
        .map(|(a, b, c)| format!("{}, {}, {}", m.name(a), m.name(b), m.name(c)))
}

fn law_dn1(m: &FiniteAlgebra) -> Option<String> {
    let neg = m.neg_table().unwrap();
    (0..m.size())
        .find(|&a| !m.leq(a, neg[neg[a]]))
        .map(|a| m.name(a).to_string())
}

fn law_dn_upper(m: &FiniteAlgebra) -> Option<String> {
    let neg = m.neg_table().unwrap();
    (0..m.size())
        .find(|&a| !m.leq(neg[neg[a]], a))
        .map(|a| m.name(a).to_string())
}

fn law_dn(m: &FiniteAlgebra) -> Option<String> {
    let neg = m.neg_table().unwrap();
    (0..m.size())
        .find(|&a| neg[neg[a]] != a)
        .map(|a| m.name(a).to_string())
}

fn law_in(m: &FiniteAlgebra) -> Option<String> {
    let neg = m.neg_table().unwrap();
    pairs(m.size())
        .find(|&(a, b)| m.under(a, neg[b]) != m.under(b, neg[a]))
        .map(|(a, b)| format!("{}, {}", m.name(a), m.name(b)))
}

fn law_ctr(m: &FiniteAlgebra) -> Option<String> {
    let neg = m.neg_table().unwrap();
    pairs(m.size())
        .find(|&(a, b)| m.leq(a, b) && !m.leq(neg[b], neg[a]))
        .map(|(a, b)| format!("{}, {}", m.name(a), m.name(b)))
}

fn law_star_commutative(m: &FiniteAlgebra) -> Option<String> {
    pairs(m.size())
        .find(|&(a, b)| m.star(a, b) != m.star(b, a))
        .map(|(a, b)| format!("{}, {}", m.name(a), m.name(b)))
}

fn law_star_res(m: &FiniteAlgebra) -> Option<String> {
    triples(m.size())
        .find(|&(a, b, c)| m.leq(m.star(a, b).unwrap(), c) != m.leq(b, m.arrow(a, c).unwrap()))
        .map(|(a, b, c)| format!("{}, {}, {}", m.name(a), m.name(b), m.name(c)))
}

fn law_has_least(m: &FiniteAlgebra) -> Option<String> {
    if m.least().is_some() {
        None
    } else {
        Some("no element below all others".to_string())
    }
}

fn law_has_greatest(m: &FiniteAlgebra) -> Option<String> {
    if m.greatest().is_some() {
        None
    } else {
        Some("no element above all others".to_string())
    }
}

fn law_interchange(m: &FiniteAlgebra) -> Option<String> {
    let Some(bottom) = m.least() else {
        return Some("no least element".to_string());
    };
    triples(m.size())
        .find(|&(a, b, c)| {
            m.star(m.dot(a, b), c) == Some(bottom) && m.star(m.dot(a, c), b) != Some(bottom)
        })
        .map(|(a, b, c)| format!("{}, {}, {}", m.name(a), m.name(b), m.name(c)))
}

fn law_star_neg(m: &FiniteAlgebra) -> Option<String> {
    let Some(bottom) = m.least() else {
        return Some("no least element".to_string());
    };
    (0..m.size())
        .find(|&a| m.star(a, m.arrow(a, bottom).unwrap()) != Some(bottom))
        .map(|a| m.name(a).to_string())
}

fn law_neg_coherent(m: &FiniteAlgebra) -> Option<String> {
    let Some(bottom) = m.least() else {
        return Some("no least element".to_string());
    };
    let neg = m.neg_table().unwrap();
    (0..m.size())
        .find(|&a| m.arrow(a, bottom) != Some(neg[a]))
        .map(|a| m.name(a).to_string())
}

/// Negation strength, weakest to strongest. The classifier returns the
/// strongest class all of whose defining laws hold: plain contraposition
/// gives subminimal, the conditional form minimal, adding `~~a <= a` gives
/// De Morgan, the side-formula conditional gives quasi-involutive, and
/// quasi-involutive with `~~a = a` is involutive.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum NegationClass {
    None,
    Subminimal,
    Minimal,
    DeMorgan,
    QuasiInvolutive,
    Involutive,
}

impl NegationClass {
    pub fn name(self) -> &'static str {
        match self {
            NegationClass::None => "none",
            NegationClass::Subminimal => "subminimal",
            NegationClass::Minimal => "minimal",
            NegationClass::DeMorgan => "de-morgan",
            NegationClass::QuasiInvolutive => "quasi-involutive",
            NegationClass::Involutive => "involutive",
        }
    }
}

impl fmt::Display for NegationClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.name())
    }
}

/// Classify the negation of `m`. The algebra must carry a `~` table.
pub fn classify_negation(m: &FiniteAlgebra) -> NegationClass {
    assert!(
        m.neg_table().is_some(),
        "classify_negation requires a neg table"
    );
    let smn = law_smn(m).is_none();
    let mn = law_mn(m).is_none();
    let ctr = law_ctr(m).is_none();
    let dn_upper = law_dn_upper(m).is_none();
    let dn_eq = law_dn(m).is_none();
    if smn && mn && dn_eq {
        NegationClass::Involutive
    } else if smn && mn {
        NegationClass::QuasiInvolutive
    } else if mn && dn_upper {
        NegationClass::DeMorgan
    } else if mn {
        NegationClass::Minimal
    } else if ctr {
        NegationClass::Subminimal
    } else {
        NegationClass::None
    }
}

/// True when no element can serve as the common value of `x . ~x`, i.e.
/// the algebra embeds in no unital one.
pub fn no_unit_witness(m: &FiniteAlgebra) -> bool {
    let Some(neg) = m.neg_table() else {
        panic!("no_unit_witness requires a neg table");
    };
    (0..m.size()).all(|y| (0..m.size()).any(|x| m.dot(x, neg[x]) != y))
}

fn pairs(n: usize) -> impl Iterator<Item = (usize, usize)> {
    (0..n).flat_map(move |a| (0..n).map(move |b| (a, b)))
}

fn triples(n: usize) -> impl Iterator<Item = (usize, usize, usize)> {
    (0..n).flat_map(move |a| (0..n).flat_map(move |b| (0..n).map(move |c| (a, b, c))))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn two_chain_meet() -> FiniteAlgebra {
        // 0 < 1 with fusion = meet and the matching residual
        FiniteAlgebra::new(
            vec!["o".into(), "i".into()],
            vec![vec![true, true], vec![false, true]],
            vec![vec![0, 0], vec![0, 1]],
            vec![vec![1, 1], vec![0, 1]],
        )
    }

    #[test]
    fn example_passes_involutive_class() {
        let m = FiniteAlgebra::involutive_example();
        let report = check_class(&m, AlgebraClass::IncRl).unwrap();
        assert!(report.all_hold(), "{report}");
    }

    #[test]
    fn edited_negation_fails_dn_with_witness() {
        let base = FiniteAlgebra::involutive_example();
        let mut neg = base.neg_table().unwrap().to_vec();
        neg[0] = 1; // ~a = b
        let m = FiniteAlgebra::new(
            base.elems().to_vec(),
            base.leq_table().to_vec(),
            base.dot_table().to_vec(),
            base.under_table().to_vec(),
        )
        .with_neg(neg);
        let report = check_class(&m, AlgebraClass::IncRl).unwrap();
        let dn = report
            .laws
            .iter()
            .find(|l| l.name.starts_with("dn:"))
            .unwrap();
        assert!(!dn.holds);
        assert_eq!(dn.witness.as_deref(), Some("a"));
    }

    #[test]
    fn two_chain_passes_crl() {
        let report = check_class(&two_chain_meet(), AlgebraClass::CRl).unwrap();
        assert!(report.all_hold(), "{report}");
    }

    #[test]
    fn missing_neg_table_reported() {
        let err = check_class(&two_chain_meet(), AlgebraClass::IncRl).unwrap_err();
        assert_eq!(err.op, "neg");
    }

    #[test]
    fn classify_example_as_involutive() {
        assert_eq!(
            classify_negation(&FiniteAlgebra::involutive_example()),
            NegationClass::Involutive
        );
    }

    #[test]
    fn classify_two_chain_swap_as_involutive() {
        let m = two_chain_meet().with_neg(vec![1, 0]);
        assert_eq!(classify_negation(&m), NegationClass::Involutive);
    }

    #[test]
    fn classify_constant_top_negation_as_quasi_involutive() {
        let m = two_chain_meet().with_neg(vec![1, 1]);
        assert_eq!(classify_negation(&m), NegationClass::QuasiInvolutive);
    }

    #[test]
    fn classify_identity_negation_as_none() {
        // identity fails even plain contraposition on a chain
        let m = two_chain_meet().with_neg(vec![0, 1]);
        assert_eq!(classify_negation(&m), NegationClass::None);
    }

    #[test]
    fn no_unit_witness_examples() {
        assert!(no_unit_witness(&FiniteAlgebra::involutive_example()));
        let chain = two_chain_meet().with_neg(vec![1, 0]);
        assert!(!no_unit_witness(&chain));
        let point = FiniteAlgebra::new(
            vec!["o".into()],
            vec![vec![true]],
            vec![vec![0]],
            vec![vec![0]],
        )
        .with_neg(vec![0]);
        assert!(!no_unit_witness(&point));
    }

    #[test]
    fn expanded_example_passes_cbrl() {
        let m = FiniteAlgebra::involutive_example().expand().unwrap();
        let report = check_class(&m, AlgebraClass::CbRl).unwrap();
        assert!(report.all_hold(), "{report}");
    }
}
