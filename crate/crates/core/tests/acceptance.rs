//! Acceptance suite. Each test prints one pass line; run with
//! `cargo test -p infl-core --test acceptance -- --nocapture` to see them.

mod common;

use std::time::{Duration, Instant};

use infl_core::algebra::{
    check_class, countermodel, enumerate_algebras, no_unit_witness, AlgebraClass, FiniteAlgebra,
    NegStyle,
};
use infl_core::formula::Formula;
use infl_core::parse::{parse_formula, parse_sequent};
use infl_core::prover::{check_derivation, prove, Outcome, SearchConfig};
use infl_core::rules::RuleSetId;
use infl_core::sequent::Sequent;
use infl_core::structure::Structure;
use infl_core::systems::{decide_g, lemma1_check};
use rand::rngs::StdRng;
use rand::{RngExt, SeedableRng};

/// The provable inequation corpus: algebraic fusion and residual laws,
/// the double-negation facts, both double-negation closure equivalences,
/// the monotonicity closure, and the product-with-negation collapse.
fn corpus() -> Vec<(&'static str, &'static str)> {
    vec![
        ("fusion-2", "q . (q \\ p) => p"),
        ("fusion-4-dist", "p . (q \\/ r) => (p . q) \\/ (p . r)"),
        ("fusion-4-undist", "(p . q) \\/ (p . r) => p . (q \\/ r)"),
        ("fusion-6", "(p \\ r) . q => p \\ (r . q)"),
        ("fusion-7", "(p \\ q) . (q \\ r) => p \\ r"),
        ("fusion-8", "p \\ r => (q . p) \\ (q . r)"),
        ("fusion-9-curry", "q \\ (p \\ r) => (p . q) \\ r"),
        ("fusion-9-uncurry", "(p . q) \\ r => q \\ (p \\ r)"),
        ("residual-3-dist", "r \\ (p /\\ q) => (r \\ p) /\\ (r \\ q)"),
        (
            "residual-3-undist",
            "(r \\ p) /\\ (r \\ q) => r \\ (p /\\ q)",
        ),
        ("residual-4", "q \\ r => (p \\ q) \\ (p \\ r)"),
        ("residual-6-swap", "p \\ (q \\ r) => q \\ (p \\ r)"),
        ("residual-6-unswap", "q \\ (p \\ r) => p \\ (q \\ r)"),
        ("residual-7", "r => (r \\ p) \\ p"),
        ("negation-dn1", "p => ~~p"),
        ("dn1-axiom-form", "p => ~~p"),
        ("dn-meet", "~~(~~p /\\ ~~q) => ~~p /\\ ~~q"),
        ("dn-meet-converse", "~~p /\\ ~~q => ~~(~~p /\\ ~~q)"),
        ("dn-under", "~~(~~p \\ ~~q) => ~~p \\ ~~q"),
        ("dn-under-converse", "~~p \\ ~~q => ~~(~~p \\ ~~q)"),
        ("mon-closure", "(p \\ q) . (r \\ s) => (p . r) \\ (q . s)"),
        ("star-negation", "p ; ~p => bot"),
    ]
}

fn prove_default(seq: &Sequent) -> Outcome {
    prove(seq, &SearchConfig::default())
}

#[test]
fn criterion_01_builtin_algebra_certification() {
    let started = Instant::now();
    let m = FiniteAlgebra::involutive_example();
    let report = check_class(&m, AlgebraClass::IncRl).expect("tables present");
    assert!(report.all_hold(), "{report}");
    for required in ["residuation", "in:", "dn:"] {
        assert!(
            report.laws.iter().any(|l| l.name.contains(required)),
            "law `{required}` missing from the report"
        );
    }
    assert!(no_unit_witness(&m), "x . ~x must not be constant");
    let elapsed = started.elapsed();
    assert!(elapsed < Duration::from_secs(1), "took {elapsed:?}");
    println!("PASS criterion 1: built-in algebra passes every involutive-class law ({elapsed:?})");
}

#[test]
fn criterion_02_corpus_provability() {
    let started = Instant::now();
    for (name, text) in corpus() {
        let seq = parse_sequent(text).unwrap();
        let item = Instant::now();
        match prove_default(&seq) {
            Outcome::Proved(d) => {
                check_derivation(&d, RuleSetId::Gb)
                    .unwrap_or_else(|e| panic!("{name}: produced derivation fails: {e}"));
            }
            other => panic!("{name} ({text}): expected a proof, got {other:?}"),
        }
        let elapsed = item.elapsed();
        assert!(elapsed < Duration::from_secs(10), "{name} took {elapsed:?}");
    }
    println!(
        "PASS criterion 2: all {} corpus sequents prove and check ({:?})",
        corpus().len(),
        started.elapsed()
    );
}

#[test]
fn criterion_03_double_negation_separation() {
    let started = Instant::now();
    let dn2 = parse_sequent("~~p => p").unwrap();
    assert_eq!(prove_default(&dn2), Outcome::Refuted);
    // independent cross-check: a finite countermodel exists
    let (model, mu) = countermodel(&dn2, 2).expect("a two-element countermodel refutes ~~p => p");
    let lhs = model.eval(&dn2.antecedent.to_formula(), &mu).unwrap();
    let rhs = model.eval(&dn2.succedent, &mu).unwrap();
    assert!(!model.leq(lhs, rhs));

    let p = parse_formula("p").unwrap();
    let nnp = parse_formula("~~p").unwrap();
    assert!(
        decide_g(&nnp, &p).unwrap(),
        "the involutive system accepts ~~p => p"
    );
    let elapsed = started.elapsed();
    assert!(elapsed < Duration::from_secs(20), "took {elapsed:?}");
    println!(
        "PASS criterion 3: ~~p => p refuted cut-free yet accepted via translation ({elapsed:?})"
    );
}

/// Sampled cut-admissibility inputs: a proved minor premise, a proved major
/// premise with the cut formula in context, and the cut conclusion.
fn cut_samples(count: usize, max_symbols: usize) -> Vec<(Sequent, Sequent, Sequent)> {
    let mut rng = StdRng::seed_from_u64(0xC07);
    let mut samples = Vec::new();
    let mut attempts = 0usize;
    while samples.len() < count {
        attempts += 1;
        assert!(attempts < 300_000, "sampling stalled at {}", samples.len());

        let minor = common::random_sequent(&mut rng, 7);
        if !prove_default(&minor).is_proved() {
            continue;
        }
        let alpha = minor.succedent.clone();

        // a context around the cut formula
        let host = common::random_sequent(&mut rng, 6);
        let contexts = host.antecedent.contexts();
        let (ctx, _) = &contexts[rng.random_range(0..contexts.len())];
        let major_antecedent = ctx.fill(Structure::leaf(alpha.clone()));
        let beta = match rng.random_range(0..4) {
            0 => alpha.clone(),
            1 => Formula::join(alpha.clone(), common::random_formula(&mut rng, 1)),
            2 => Formula::neg(Formula::neg(alpha.clone())),
            _ => common::random_formula(&mut rng, 2),
        };
        let major = Sequent::new(major_antecedent, beta);
        let conclusion = Sequent::new(ctx.fill(minor.antecedent.clone()), major.succedent.clone());
        if conclusion.symbol_size() > max_symbols {
            continue;
        }
        if !prove_default(&major).is_proved() {
            continue;
        }
        samples.push((minor, major, conclusion));
    }
    samples
}

#[test]
fn criterion_04_cut_admissibility_sampling() {
    let started = Instant::now();
    let samples = cut_samples(100, 14);
    for (minor, major, conclusion) in &samples {
        match prove_default(conclusion) {
            Outcome::Proved(_) => {}
            other => panic!(
                "cut of ({minor}) into ({major}) gives ({conclusion}): expected a proof, got {other:?}"
            ),
        }
    }
    println!(
        "PASS criterion 4: {} sampled cuts all admissible ({:?})",
        samples.len(),
        started.elapsed()
    );
}

#[test]
fn criterion_05_soundness_sweep() {
    let started = Instant::now();
    // everything proved under criteria 2-4
    let mut proved: Vec<Sequent> = corpus()
        .iter()
        .map(|(_, text)| parse_sequent(text).unwrap())
        .collect();
    let p = parse_formula("p").unwrap();
    let ko_dn2 = Sequent::simple(
        Formula::neg(Formula::neg(
            infl_core::systems::ko(&Formula::neg(Formula::neg(p.clone()))).unwrap(),
        )),
        infl_core::systems::ko(&Formula::neg(Formula::neg(p))).unwrap(),
    );
    assert!(prove_default(&ko_dn2).is_proved());
    proved.push(ko_dn2);
    for (minor, major, conclusion) in cut_samples(100, 14) {
        proved.extend([minor, major, conclusion]);
    }

    let mut models = vec![FiniteAlgebra::involutive_example().expand().unwrap()];
    models.extend(enumerate_algebras(3, AlgebraClass::CbRl));
    let mut checked = 0usize;
    for seq in &proved {
        for m in &models {
            let verdict = m.valid_with(seq, NegStyle::Tables).unwrap();
            assert!(
                verdict.is_valid(),
                "proved sequent {seq} refuted in a {}-element model",
                m.size()
            );
            checked += 1;
        }
    }
    let elapsed = started.elapsed();
    assert!(elapsed < Duration::from_secs(600), "took {elapsed:?}");
    println!(
        "PASS criterion 5: {} proved sequents valid across {} models, {checked} checks, zero violations ({elapsed:?})",
        proved.len(),
        models.len()
    );
}

#[test]
fn criterion_06_expansion_totality() {
    let started = Instant::now();
    let algebras = enumerate_algebras(4, AlgebraClass::QIncRl);
    assert!(!algebras.is_empty());
    for m in &algebras {
        let expanded = m.expand().unwrap_or_else(|e| {
            panic!(
                "a {}-element quasi-involutive algebra fails to expand: {e}",
                m.size()
            )
        });
        let report = check_class(&expanded, AlgebraClass::CbRl).unwrap();
        assert!(report.all_hold(), "{report}");
        for required in ["interchange", "star negation"] {
            let law = report
                .laws
                .iter()
                .find(|l| l.name.contains(required))
                .unwrap_or_else(|| panic!("law `{required}` missing"));
            assert!(law.holds);
        }
    }
    println!(
        "PASS criterion 6: all {} enumerated quasi-involutive algebras expand and certify ({:?})",
        algebras.len(),
        started.elapsed()
    );
}

#[test]
fn criterion_07_translation_collapse_exhaustive() {
    let started = Instant::now();
    let atoms = vec![Formula::atom("p"), Formula::atom("q")];
    let mut by_count: Vec<Vec<Formula>> = vec![atoms];
    for c in 1..=3usize {
        let mut level: Vec<Formula> = by_count[c - 1].iter().cloned().map(Formula::neg).collect();
        for left in 0..c {
            let right = c - 1 - left;
            for a in &by_count[left] {
                for b in &by_count[right] {
                    level.push(Formula::fuse(a.clone(), b.clone()));
                    level.push(Formula::under(a.clone(), b.clone()));
                    level.push(Formula::meet(a.clone(), b.clone()));
                    level.push(Formula::join(a.clone(), b.clone()));
                }
            }
        }
        by_count.push(level);
    }
    let total: usize = by_count.iter().map(Vec::len).sum();
    let mut worst = Duration::ZERO;
    for level in &by_count {
        for f in level {
            let item = Instant::now();
            assert!(
                lemma1_check(f).unwrap(),
                "translated double negation fails to collapse for {f}"
            );
            worst = worst.max(item.elapsed());
        }
    }
    assert!(
        worst < Duration::from_secs(10),
        "worst single check took {worst:?}"
    );
    println!(
        "PASS criterion 7: translated double negation collapses for all {total} formulas, worst {worst:?} ({:?})",
        started.elapsed()
    );
}

#[test]
fn criterion_08_canonical_invariance_and_memo_agreement() {
    let started = Instant::now();
    let mut rng = StdRng::seed_from_u64(0x8E0);
    let no_memo = SearchConfig {
        memoize: false,
        ..SearchConfig::default()
    };
    for _ in 0..200 {
        let seq = common::random_sequent(&mut rng, 12);
        let baseline = prove_default(&seq);
        let without = prove(&seq, &no_memo);
        assert_eq!(baseline.kind(), without.kind(), "memoization changed {seq}");
        for _ in 0..5 {
            let permuted_raw = common::permute_structure(&mut rng, &seq.antecedent);
            let permuted = Sequent::new(permuted_raw, seq.succedent.clone());
            assert_eq!(permuted, seq, "canonicalization must collapse permutations");
            let outcome = prove_default(&permuted);
            assert_eq!(outcome.kind(), baseline.kind(), "permutation changed {seq}");
            if let Outcome::Proved(d) = &outcome {
                check_derivation(d, RuleSetId::Gb).unwrap();
            }
        }
    }
    println!(
        "PASS criterion 8: outcomes invariant under 5 permutations of 200 sequents, memoization agrees ({:?})",
        started.elapsed()
    );
}
