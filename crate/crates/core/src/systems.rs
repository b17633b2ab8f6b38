//! The simple calculi and their reductions.
//!
//! The simple involutive system `g` and its double-negation-free variant
//! `qg` both contain cut, so they are never searched directly. Instead:
//!
//! * a `qg` sequent holds iff the structural system proves it as stated
//!   (the structural system is a conservative extension), and
//! * a `g` sequent holds iff `qg` proves its Kolmogorov translation.
//!
//! Derivations in `g`/`qg` can still be checked node by node, and a proved
//! `g` sequent can be packaged as a cut-free derivation by proving the
//! translated sequent in the negation-rule system and closing with the two
//! translation rules.
//!
//! Fusion patterns in the simple rule schemata match in either operand
//! order: the calculus is commutative, and its own admissible-rule
//! derivations instantiate `a . b` both ways.

use thiserror::Error;

use crate::derivation::Derivation;
use crate::formula::Formula;
use crate::prover::{prove, CheckError, Exhaustion, Outcome, SearchConfig};
use crate::rules::{RuleId, RuleSetId};
use crate::sequent::{Sequent, SimpleSequent};
use crate::structure::Structure;
pub use crate::translate::{ko, KoError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DecideError {
    #[error(transparent)]
    Ko(#[from] KoError),
    #[error("{0}")]
    Resource(Exhaustion),
}

/// Does `qg` prove `a => b`? Decided by proving the sequent in the
/// structural system, which is conservative over `qg`.
pub fn decide_qg(a: &Formula, b: &Formula) -> Result<bool, Exhaustion> {
    decide_qg_with(a, b, &SearchConfig::default())
}

pub fn decide_qg_with(a: &Formula, b: &Formula, cfg: &SearchConfig) -> Result<bool, Exhaustion> {
    let mut cfg = cfg.clone();
    cfg.rule_set = RuleSetId::Gb;
    match prove(&Sequent::simple(a.clone(), b.clone()), &cfg) {
        Outcome::Proved(_) => Ok(true),
        Outcome::Refuted => Ok(false),
        Outcome::ResourceExceeded(reason) => Err(reason),
    }
}

/// Does `g` prove `a => b`? Decided as `qg` on the Kolmogorov translations.
pub fn decide_g(a: &Formula, b: &Formula) -> Result<bool, DecideError> {
    decide_g_with(a, b, &SearchConfig::default())
}

pub fn decide_g_with(a: &Formula, b: &Formula, cfg: &SearchConfig) -> Result<bool, DecideError> {
    let ka = ko(a)?;
    let kb = ko(b)?;
    decide_qg_with(&ka, &kb, cfg).map_err(DecideError::Resource)
}

/// `qg` proves `ko(~~a) => ko(a)` for every negation-language formula `a`;
/// the translation of the double-negation axiom needs no axiom. This checks
/// one instance through the structural system.
pub fn lemma1_check(a: &Formula) -> Result<bool, DecideError> {
    lemma1_check_with(a, &SearchConfig::default())
}

pub fn lemma1_check_with(a: &Formula, cfg: &SearchConfig) -> Result<bool, DecideError> {
    let ka = ko(a)?;
    // ko(~~a) = ~~ko(a)
    let lhs = Formula::neg(Formula::neg(ka.clone()));
    decide_qg_with(&lhs, &ka, cfg).map_err(DecideError::Resource)
}

/// If `g` proves `a => b`, produce a cut-free derivation of it: prove the
/// translated sequent in the negation-rule system, then close with one
/// application of each translation rule.
pub fn emit_gc_derivation(
    a: &Formula,
    b: &Formula,
    cfg: &SearchConfig,
) -> Result<Option<Derivation>, DecideError> {
    let ka = ko(a)?;
    let kb = ko(b)?;
    let mut cfg = cfg.clone();
    cfg.rule_set = RuleSetId::Qgc;
    match prove(&Sequent::simple(ka.clone(), kb), &cfg) {
        Outcome::Proved(translated) => {
            let after_ko_r = Derivation::new(
                Sequent::simple(ka, b.clone()),
                RuleId::KoR,
                vec![translated],
            );
            let root = Derivation::new(
                Sequent::simple(a.clone(), b.clone()),
                RuleId::KoL,
                vec![after_ko_r],
            );
            Ok(Some(root))
        }
        Outcome::Refuted => Ok(None),
        Outcome::ResourceExceeded(reason) => Err(DecideError::Resource(reason)),
    }
}

/// Check a derivation whose sequents are all single-formula against the
/// schemata of `g` or `qg`. Reports the first failing node.
pub fn check_simple_derivation(
    derivation: &Derivation,
    system: RuleSetId,
) -> Result<(), CheckError> {
    assert!(
        system.is_simple(),
        "rule set `{system}` is structural; use prover::check_derivation"
    );
    check_simple_node(derivation, system, &mut Vec::new())
}

fn check_simple_node(
    node: &Derivation,
    system: RuleSetId,
    path: &mut Vec<usize>,
) -> Result<(), CheckError> {
    let fail = |message: String, path: &[usize]| CheckError {
        path: path.to_vec(),
        rule: node.rule,
        sequent: node.sequent.to_string(),
        message,
    };
    let Some(seq) = SimpleSequent::from_sequent(&node.sequent) else {
        return Err(fail("not a single-formula sequent".into(), path));
    };
    if !system.contains(node.rule) {
        return Err(fail(format!("rule is not part of system `{system}`"), path));
    }
    if node.premises.len() != node.rule.arity() {
        return Err(fail(
            format!(
                "expected {} premise(s), found {}",
                node.rule.arity(),
                node.premises.len()
            ),
            path,
        ));
    }
    let mut premises = Vec::with_capacity(node.premises.len());
    for (i, premise) in node.premises.iter().enumerate() {
        match SimpleSequent::from_sequent(&premise.sequent) {
            Some(s) => premises.push(s),
            None => {
                path.push(i);
                let err = CheckError {
                    path: path.to_vec(),
                    rule: premise.rule,
                    sequent: premise.sequent.to_string(),
                    message: "not a single-formula sequent".into(),
                };
                path.pop();
                return Err(err);
            }
        }
    }
    if !simple_instance_matches(node.rule, &seq, &premises) {
        return Err(fail("no instantiation matches the premises".into(), path));
    }
    for (i, premise) in node.premises.iter().enumerate() {
        path.push(i);
        check_simple_node(premise, system, path)?;
        path.pop();
    }
    Ok(())
}

/// The two operand orders of a fusion.
fn fuse_splits(f: &Formula) -> Vec<(&Formula, &Formula)> {
    match f {
        Formula::Fuse(a, b) => {
            if a == b {
                vec![(a, b)]
            } else {
                vec![(a, b), (b, a)]
            }
        }
        _ => Vec::new(),
    }
}

fn is_fuse_of(f: &Formula, a: &Formula, b: &Formula) -> bool {
    *f == Formula::fuse(a.clone(), b.clone()) || *f == Formula::fuse(b.clone(), a.clone())
}

fn simple_instance_matches(rule: RuleId, seq: &SimpleSequent, premises: &[SimpleSequent]) -> bool {
    match rule {
        RuleId::Id => seq.lhs == seq.rhs,
        RuleId::Dn2 => seq.lhs == Formula::neg(Formula::neg(seq.rhs.clone())),
        RuleId::Res => {
            // from a . b => c infer b => a \ c
            let Formula::Under(a, c) = &seq.rhs else {
                return false;
            };
            premises[0].rhs == **c && is_fuse_of(&premises[0].lhs, a, &seq.lhs)
        }
        RuleId::ResInv => {
            // from b => a \ c infer a . b => c
            fuse_splits(&seq.lhs).into_iter().any(|(a, b)| {
                premises[0].lhs == *b
                    && premises[0].rhs == Formula::under(a.clone(), seq.rhs.clone())
            })
        }
        RuleId::MeetL => {
            // either conjunct may be the premise's antecedent
            let Formula::Meet(a, b) = &seq.lhs else {
                return false;
            };
            premises[0].rhs == seq.rhs && (premises[0].lhs == **a || premises[0].lhs == **b)
        }
        RuleId::MeetR => {
            let Formula::Meet(a, b) = &seq.rhs else {
                return false;
            };
            premises[0] == SimpleSequent::new(seq.lhs.clone(), (**a).clone())
                && premises[1] == SimpleSequent::new(seq.lhs.clone(), (**b).clone())
        }
        RuleId::JoinL => {
            let Formula::Join(a, b) = &seq.lhs else {
                return false;
            };
            premises[0] == SimpleSequent::new((**a).clone(), seq.rhs.clone())
                && premises[1] == SimpleSequent::new((**b).clone(), seq.rhs.clone())
        }
        RuleId::JoinR => {
            // either disjunct may be the premise's succedent
            let Formula::Join(a, b) = &seq.rhs else {
                return false;
            };
            premises[0].lhs == seq.lhs && (premises[0].rhs == **a || premises[0].rhs == **b)
        }
        RuleId::Neg => {
            // from a . b => ~c infer c . b => ~a
            let Some(a) = seq.rhs.as_neg() else {
                return false;
            };
            let Some(pc) = premises[0].rhs.as_neg() else {
                return false;
            };
            fuse_splits(&seq.lhs)
                .into_iter()
                .any(|(c, b)| c == pc && is_fuse_of(&premises[0].lhs, a, b))
        }
        RuleId::Mn => {
            // from a => ~c infer c => ~a
            let Some(a) = seq.rhs.as_neg() else {
                return false;
            };
            premises[0].lhs == *a && premises[0].rhs == Formula::neg(seq.lhs.clone())
        }
        RuleId::Cut => {
            premises[0].lhs == seq.lhs
                && premises[0].rhs == premises[1].lhs
                && premises[1].rhs == seq.rhs
        }
        _ => false,
    }
}

/// Hand-built derivations in the simple calculi: the admissible rules and a
/// few closed instances, used as fixtures for the checker and as the
/// curated corpus behind the translation coherence tests.
pub mod transcripts {
    use super::*;

    fn simple(lhs: Formula, rhs: Formula) -> Sequent {
        Sequent::new(Structure::leaf(lhs), rhs)
    }

    fn lhs_formula(d: &Derivation) -> Formula {
        match &d.sequent.antecedent {
            Structure::Leaf(f) => f.clone(),
            other => panic!("transcript premise has a structural antecedent: {other}"),
        }
    }

    pub fn identity(a: &Formula) -> Derivation {
        Derivation::leaf(simple(a.clone(), a.clone()), RuleId::Id)
    }

    /// `~~a => a`, only derivable in `g`.
    pub fn dn2(a: &Formula) -> Derivation {
        Derivation::leaf(
            simple(Formula::neg(Formula::neg(a.clone())), a.clone()),
            RuleId::Dn2,
        )
    }

    /// `a => ~~a` from plain contraposition on an identity axiom.
    pub fn dn1(a: &Formula) -> Derivation {
        let neg_a = Formula::neg(a.clone());
        Derivation::new(
            simple(a.clone(), Formula::neg(neg_a.clone())),
            RuleId::Mn,
            vec![identity(&neg_a)],
        )
    }

    /// Cut two simple derivations `a => b` and `b => c` into `a => c`.
    pub fn cut(left: Derivation, right: Derivation) -> Derivation {
        let conclusion = simple(lhs_formula(&left), right.sequent.succedent.clone());
        Derivation::new(conclusion, RuleId::Cut, vec![left, right])
    }

    /// Contraposition as a derived rule: from `a => b` build `~b => ~a`.
    pub fn contrapose(premise: Derivation) -> Derivation {
        let a = lhs_formula(&premise);
        let b = premise.sequent.succedent.clone();
        let lifted = cut(premise, dn1(&b));
        Derivation::new(
            simple(Formula::neg(b), Formula::neg(a)),
            RuleId::Mn,
            vec![lifted],
        )
    }

    /// The side-formula contraposition rule, derived: from `x . y => c`
    /// build `~c . y => ~x`.
    pub fn neg_flip(premise: Derivation) -> Derivation {
        let Formula::Fuse(x, y) = lhs_formula(&premise) else {
            panic!("neg_flip premise must have a fusion antecedent");
        };
        let c = premise.sequent.succedent.clone();
        let lifted = cut(premise, dn1(&c));
        Derivation::new(
            simple(
                Formula::fuse(Formula::neg(c), (*y).clone()),
                Formula::neg((*x).clone()),
            ),
            RuleId::Neg,
            vec![lifted],
        )
    }

    /// `~~~a => ~a`.
    pub fn triple_neg(a: &Formula) -> Derivation {
        contrapose(dn1(a))
    }

    /// Monotonicity of fusion, derived: from `a1 => b1` and `a2 => b2`
    /// build `a1 . a2 => b1 . b2`.
    pub fn mon(d1: Derivation, d2: Derivation) -> Derivation {
        let a1 = lhs_formula(&d1);
        let b1 = d1.sequent.succedent.clone();
        let a2 = lhs_formula(&d2);
        let b2 = d2.sequent.succedent.clone();

        let b1a2 = Formula::fuse(b1.clone(), a2.clone());
        let first = Derivation::new(
            simple(Formula::fuse(a1.clone(), a2.clone()), b1a2.clone()),
            RuleId::ResInv,
            vec![cut(
                d1,
                Derivation::new(
                    simple(b1.clone(), Formula::under(a2.clone(), b1a2.clone())),
                    RuleId::Res,
                    vec![identity(&b1a2)],
                ),
            )],
        );

        let b1b2 = Formula::fuse(b1.clone(), b2.clone());
        let second = Derivation::new(
            simple(b1a2, b1b2.clone()),
            RuleId::ResInv,
            vec![cut(
                d2,
                Derivation::new(
                    simple(b2, Formula::under(b1, b1b2.clone())),
                    RuleId::Res,
                    vec![identity(&b1b2)],
                ),
            )],
        );

        cut(first, second)
    }

    /// `~~(~~a \ ~~b) => ~~a \ ~~b`, derivable without the double-negation
    /// axiom.
    pub fn dn_under(a: &Formula, b: &Formula) -> Derivation {
        let nna = Formula::neg(Formula::neg(a.clone()));
        let nnb = Formula::neg(Formula::neg(b.clone()));
        let residual = Formula::under(nna.clone(), nnb.clone());

        // (~~a \ ~~b) . ~~a => ~~b, fused in the order the flips below need
        let applied = Derivation::new(
            simple(Formula::fuse(residual.clone(), nna.clone()), nnb.clone()),
            RuleId::ResInv,
            vec![identity(&residual)],
        );
        // ~~~b . ~~a => ~(~~a \ ~~b), then ~~(~~a \ ~~b) . ~~a => ~4 b
        let flipped = neg_flip(neg_flip(applied));
        // ~4 b => ~~b
        let collapse = triple_neg(&Formula::neg(b.clone()));
        let chained = cut(flipped, collapse);
        Derivation::new(
            simple(Formula::neg(Formula::neg(residual.clone())), residual),
            RuleId::Res,
            vec![chained],
        )
    }

    /// `~~(~~a /\ ~~b) => ~~a /\ ~~b`, derivable without the double-negation
    /// axiom.
    pub fn dn_meet(a: &Formula, b: &Formula) -> Derivation {
        let nna = Formula::neg(Formula::neg(a.clone()));
        let nnb = Formula::neg(Formula::neg(b.clone()));
        let meet = Formula::meet(nna.clone(), nnb.clone());
        let nn_meet = Formula::neg(Formula::neg(meet.clone()));

        let component = |part: &Formula, inner: &Formula| {
            // meet => part, then contrapose twice and collapse ~4
            let project = Derivation::new(
                simple(meet.clone(), part.clone()),
                RuleId::MeetL,
                vec![identity(part)],
            );
            let doubled = contrapose(contrapose(project));
            let collapse = triple_neg(&Formula::neg(inner.clone()));
            cut(doubled, collapse)
        };

        Derivation::new(
            simple(nn_meet, meet.clone()),
            RuleId::MeetR,
            vec![component(&nna, a), component(&nnb, b)],
        )
    }

    /// A closed use of the side-formula contraposition rule:
    /// `q . (p \ ~q) => ~p`.
    pub fn neg_rule_sample(p: &Formula, q: &Formula) -> Derivation {
        let neg_q = Formula::neg(q.clone());
        let residual = Formula::under(p.clone(), neg_q.clone());
        let applied = Derivation::new(
            simple(Formula::fuse(p.clone(), residual.clone()), neg_q),
            RuleId::ResInv,
            vec![identity(&residual)],
        );
        Derivation::new(
            simple(Formula::fuse(q.clone(), residual), Formula::neg(p.clone())),
            RuleId::Neg,
            vec![applied],
        )
    }

    /// The curated corpus: named derivations together with the weakest
    /// system each checks under.
    pub fn curated() -> Vec<(&'static str, Derivation, RuleSetId)> {
        let p = Formula::atom("p");
        let q = Formula::atom("q");
        vec![
            ("identity", identity(&p), RuleSetId::Qg),
            ("dn1", dn1(&p), RuleSetId::Qg),
            ("dn2", dn2(&p), RuleSetId::G),
            ("triple-negation", triple_neg(&p), RuleSetId::Qg),
            ("mon", mon(dn1(&p), identity(&q)), RuleSetId::Qg),
            ("dn-under", dn_under(&p, &q), RuleSetId::Qg),
            (
                "dn-under-converse",
                dn1(&Formula::under(
                    Formula::neg(Formula::neg(p.clone())),
                    Formula::neg(Formula::neg(q.clone())),
                )),
                RuleSetId::Qg,
            ),
            ("dn-meet", dn_meet(&p, &q), RuleSetId::Qg),
            ("neg-rule", neg_rule_sample(&p, &q), RuleSetId::Qg),
        ]
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_formula;

    fn f(text: &str) -> Formula {
        parse_formula(text).unwrap()
    }

    #[test]
    fn decide_qg_examples() {
        assert!(decide_qg(&f("p"), &f("~~p")).unwrap());
        assert!(!decide_qg(&f("~~p"), &f("p")).unwrap());
        assert!(decide_qg(&f("p . (p \\ q)"), &f("q")).unwrap());
    }

    #[test]
    fn decide_g_examples() {
        assert!(decide_g(&f("~~p"), &f("p")).unwrap());
        assert!(decide_g(&f("p"), &f("~~p")).unwrap());
        assert!(!decide_g(&f("p"), &f("q")).unwrap());
    }

    #[test]
    fn lemma1_examples() {
        assert!(lemma1_check(&f("p")).unwrap());
        assert!(lemma1_check(&f("p /\\ q")).unwrap());
        assert!(lemma1_check(&f("~p")).unwrap());
    }

    #[test]
    fn involutive_system_collapses_double_negation_both_ways() {
        for text in ["p", "~p", "p . q", "p /\\ (q \\/ p)", "p \\ q"] {
            let a = f(text);
            let nna = Formula::neg(Formula::neg(a.clone()));
            assert!(decide_g(&nna, &a).unwrap(), "~~({text}) => {text}");
            assert!(decide_g(&a, &nna).unwrap(), "{text} => ~~({text})");
        }
    }

    #[test]
    fn curated_corpus_checks_under_its_systems() {
        for (name, derivation, system) in transcripts::curated() {
            check_simple_derivation(&derivation, system).unwrap_or_else(|e| panic!("{name}: {e}"));
            // everything checkable in qg is checkable in g
            check_simple_derivation(&derivation, RuleSetId::G)
                .unwrap_or_else(|e| panic!("{name} under g: {e}"));
        }
    }

    #[test]
    fn mon_transcript_checks_under_g() {
        let d = transcripts::mon(
            transcripts::identity(&f("p")),
            transcripts::identity(&f("q")),
        );
        check_simple_derivation(&d, RuleSetId::G).unwrap();
        assert_eq!(d.sequent, Sequent::simple(f("p . q"), f("p . q")));
    }

    #[test]
    fn dn_under_transcript_avoids_the_double_negation_axiom() {
        let d = transcripts::dn_under(&f("p"), &f("q"));
        check_simple_derivation(&d, RuleSetId::Qg).unwrap();
        assert_eq!(
            d.sequent,
            Sequent::simple(f("~~(~~p \\ ~~q)"), f("~~p \\ ~~q"))
        );
    }

    #[test]
    fn dn2_node_rejected_under_qg() {
        let d = transcripts::dn2(&f("p"));
        let err = check_simple_derivation(&d, RuleSetId::Qg).unwrap_err();
        assert!(err.message.contains("not part of system"));
        check_simple_derivation(&d, RuleSetId::G).unwrap();
    }

    #[test]
    fn emit_gc_examples() {
        let cfg = SearchConfig::default();
        let d = emit_gc_derivation(&f("~~p"), &f("p"), &cfg)
            .unwrap()
            .expect("derivable");
        assert_eq!(d.rule, RuleId::KoL);
        assert_eq!(d.sequent, Sequent::simple(f("~~p"), f("p")));
        crate::prover::check_derivation(&d, RuleSetId::Gc).unwrap();

        assert!(emit_gc_derivation(&f("p"), &f("p"), &cfg)
            .unwrap()
            .is_some());
        assert!(emit_gc_derivation(&f("p"), &f("q"), &cfg)
            .unwrap()
            .is_none());
    }

    #[test]
    fn embedding_coherence_on_the_curated_corpus() {
        for (name, derivation, _) in transcripts::curated() {
            let seq = SimpleSequent::from_sequent(&derivation.sequent).unwrap();
            let ka = ko(&seq.lhs).unwrap();
            let kb = ko(&seq.rhs).unwrap();
            assert!(
                decide_qg(&ka, &kb).unwrap(),
                "{name}: translation of {seq} should be derivable"
            );
        }
    }

    #[test]
    fn ko_shape_invariant() {
        for text in ["p", "p \\ q", "~(p . q)", "p /\\ (q \\/ p)"] {
            let translated = ko(&f(text)).unwrap();
            assert!(translated.as_neg().is_some());
        }
    }
}
