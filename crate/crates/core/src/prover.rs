//! Exhaustive backward proof search for the cut-free structural calculi.
//!
//! The search enumerates every backward rule instance of the goal. Because
//! exchange and associativity are baked into the structure representation,
//! no backward step increases the sequent's symbol count: the logical rules
//! strictly decrease it and the remaining steps preserve it, so the search
//! space is finite and `Refuted` certifies that no derivation exists in the
//! calculus.
//!
//! The one size-preserving structural rule, regrouping at falsity (`rbot`),
//! would loop under naive backward application. It is handled by orbit
//! saturation instead: a sequent of shape `_ ; _ => bot` is provable iff
//! some member of its (finite) closure under regrouping moves is provable
//! by another rule. Orbit members are mutually derivable, so memoizing the
//! whole orbit at once is sound.
//!
//! A prover instance owns its memo table, so concurrent queries over
//! separate configurations are independent. Inputs and outputs are
//! immutable.

use std::collections::{HashMap, HashSet};
use std::fmt;
use std::time::{Duration, Instant};

use crate::derivation::Derivation;
use crate::formula::Formula;
use crate::rules::{RuleId, RuleSetId};
use crate::sequent::Sequent;
use crate::structure::{Frame, Structure};
use crate::translate::ko;

/// Search parameters. The defaults decide desk-scale sequents; the symbol
/// bound never needs raising because no backward rule increases it.
#[derive(Debug, Clone)]
pub struct SearchConfig {
    pub rule_set: RuleSetId,
    /// Bound on premise symbol counts; defaults to the goal's own size,
    /// which every reachable premise already satisfies.
    pub max_symbol_size: Option<usize>,
    pub time_budget: Duration,
    pub memo_capacity: usize,
    pub memoize: bool,
    /// Restrict the identity axiom to atoms. Off by default: identity at
    /// arbitrary formulas matches the calculus and shortens proofs.
    pub atom_identity_only: bool,
}

impl Default for SearchConfig {
    fn default() -> SearchConfig {
        SearchConfig {
            rule_set: RuleSetId::Gb,
            max_symbol_size: None,
            time_budget: Duration::from_secs(10),
            memo_capacity: 1 << 22,
            memoize: true,
            atom_identity_only: false,
        }
    }
}

impl SearchConfig {
    pub fn for_rule_set(rule_set: RuleSetId) -> SearchConfig {
        SearchConfig {
            rule_set,
            ..SearchConfig::default()
        }
    }
}

/// Result of a search. `Refuted` is only returned after the bounded search
/// space has been explored exhaustively.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Outcome {
    Proved(Derivation),
    Refuted,
    ResourceExceeded(Exhaustion),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Exhaustion {
    TimeBudget,
    MemoCapacity,
}

impl fmt::Display for Exhaustion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Exhaustion::TimeBudget => write!(f, "time budget exhausted"),
            Exhaustion::MemoCapacity => write!(f, "memo capacity exhausted"),
        }
    }
}

impl Outcome {
    pub fn is_proved(&self) -> bool {
        matches!(self, Outcome::Proved(_))
    }

    pub fn derivation(&self) -> Option<&Derivation> {
        match self {
            Outcome::Proved(d) => Some(d),
            _ => None,
        }
    }

    /// `proved` / `refuted` / `resource-exceeded`.
    pub fn kind(&self) -> &'static str {
        match self {
            Outcome::Proved(_) => "proved",
            Outcome::Refuted => "refuted",
            Outcome::ResourceExceeded(_) => "resource-exceeded",
        }
    }
}

/// Decide `goal` in the configured cut-free system.
///
/// Panics if the rule set is not searchable (`g` and `qg` contain cut and
/// are decided through the structural system instead; see
/// [`crate::systems`]).
pub fn prove(goal: &Sequent, cfg: &SearchConfig) -> Outcome {
    assert!(
        cfg.rule_set.is_searchable(),
        "rule set `{}` is not searchable; decide it via its reduction",
        cfg.rule_set
    );
    let goal = Sequent::new(goal.antecedent.clone(), goal.succedent.clone());
    let mut engine = Engine::new(cfg, goal.symbol_size());
    match engine.search(&goal) {
        Ok(Some(d)) => Outcome::Proved(d),
        Ok(None) => Outcome::Refuted,
        Err(reason) => Outcome::ResourceExceeded(reason),
    }
}

struct Engine<'a> {
    cfg: &'a SearchConfig,
    bound: usize,
    memo: HashMap<Sequent, Option<Derivation>>,
    in_progress: HashSet<Sequent>,
    deadline: Instant,
    ticks: u32,
}

impl<'a> Engine<'a> {
    fn new(cfg: &'a SearchConfig, goal_size: usize) -> Engine<'a> {
        let bound = cfg.max_symbol_size.map_or(goal_size, |b| b.max(goal_size));
        Engine {
            cfg,
            bound,
            memo: HashMap::new(),
            in_progress: HashSet::new(),
            deadline: Instant::now() + cfg.time_budget,
            ticks: 0,
        }
    }

    fn tick(&mut self) -> Result<(), Exhaustion> {
        self.ticks = self.ticks.wrapping_add(1);
        if self.ticks.is_multiple_of(64) && Instant::now() > self.deadline {
            return Err(Exhaustion::TimeBudget);
        }
        Ok(())
    }

    fn memo_insert(&mut self, key: Sequent, value: Option<Derivation>) -> Result<(), Exhaustion> {
        if !self.cfg.memoize {
            return Ok(());
        }
        if self.memo.len() >= self.cfg.memo_capacity {
            return Err(Exhaustion::MemoCapacity);
        }
        self.memo.insert(key, value);
        Ok(())
    }

    fn search(&mut self, goal: &Sequent) -> Result<Option<Derivation>, Exhaustion> {
        self.tick()?;
        if self.cfg.memoize {
            if let Some(hit) = self.memo.get(goal) {
                return Ok(hit.clone());
            }
        }

        let (members, parents) = orbit_with_parents(goal);
        // An in-progress member means this goal is (equivalent to) an
        // ancestor of itself; a proof found through it would have a shorter
        // witness elsewhere, so fail this branch. Orbits are equivalence
        // classes, so either all members are fresh or the goal itself is
        // marked.
        if members.iter().any(|m| self.in_progress.contains(m)) {
            return Ok(None);
        }
        for member in &members {
            self.in_progress.insert(member.clone());
        }

        let outcome = self.search_orbit(&members);

        for member in &members {
            self.in_progress.remove(member);
        }

        match outcome? {
            Some((index, derivation)) => {
                let rebased = rebase_through_orbit(&members, &parents, index, derivation);
                self.memo_insert(goal.clone(), Some(rebased.clone()))?;
                Ok(Some(rebased))
            }
            None => {
                // members are mutually derivable: all refuted together
                for member in &members {
                    self.memo_insert(member.clone(), None)?;
                }
                Ok(None)
            }
        }
    }

    fn search_orbit(
        &mut self,
        members: &[Sequent],
    ) -> Result<Option<(usize, Derivation)>, Exhaustion> {
        for (index, member) in members.iter().enumerate() {
            if self.cfg.memoize {
                match self.memo.get(member) {
                    Some(Some(d)) => return Ok(Some((index, d.clone()))),
                    Some(None) => continue,
                    None => {}
                }
            }
            for (rule, premises) in applicable_rule_instances(member, self.cfg.rule_set) {
                if rule == RuleId::Id
                    && self.cfg.atom_identity_only
                    && !matches!(member.succedent, Formula::Atom(_))
                {
                    continue;
                }
                if premises.iter().any(|p| p.symbol_size() > self.bound) {
                    continue;
                }
                let mut subproofs = Vec::with_capacity(premises.len());
                let mut all_proved = true;
                for premise in &premises {
                    match self.search(premise)? {
                        Some(d) => subproofs.push(d),
                        None => {
                            all_proved = false;
                            break;
                        }
                    }
                }
                if all_proved {
                    let derivation = Derivation::new(member.clone(), rule, subproofs);
                    if self.cfg.memoize && index > 0 {
                        self.memo_insert(member.clone(), Some(derivation.clone()))?;
                    }
                    return Ok(Some((index, derivation)));
                }
            }
        }
        Ok(None)
    }
}

/// The closure of `goal` under regrouping-at-falsity moves, the goal first,
/// in deterministic breadth-first order. For goals that are not of shape
/// `_ ; _ => bot` this is the singleton `{goal}`.
pub fn rbot_orbit(goal: &Sequent) -> Vec<Sequent> {
    orbit_with_parents(goal).0
}

fn orbit_with_parents(goal: &Sequent) -> (Vec<Sequent>, Vec<Option<usize>>) {
    let mut order = vec![goal.clone()];
    let mut parents = vec![None];
    let mut seen: HashSet<Sequent> = order.iter().cloned().collect();
    let mut next = 0;
    while next < order.len() {
        for moved in rbot_moves(&order[next]) {
            if seen.insert(moved.clone()) {
                order.push(moved);
                parents.push(Some(next));
            }
        }
        next += 1;
    }
    (order, parents)
}

/// Single regrouping steps from a `_ ; _ => bot` sequent: read one side of
/// the semicolon as a comma split `D1 , D2` and swap `D2` with the other
/// side. The move relation is symmetric, so orbits are equivalence classes.
fn rbot_moves(seq: &Sequent) -> Vec<Sequent> {
    let mut out = Vec::new();
    if seq.succedent != Formula::Bottom {
        return out;
    }
    let Structure::Semi(left, right) = &seq.antecedent else {
        return out;
    };
    for (split_side, other_side) in [(left, right), (right, left)] {
        let Structure::Comma(children) = &**split_side else {
            continue;
        };
        let n = children.len();
        crate::structure::assert_mask_width(n);
        for mask in 1u32..((1u32 << n) - 1) {
            let mut keep = Vec::new();
            let mut moved_out = Vec::new();
            for (i, child) in children.iter().enumerate() {
                if mask & (1 << i) != 0 {
                    keep.push(child.clone());
                } else {
                    moved_out.push(child.clone());
                }
            }
            keep.push((**other_side).clone());
            let antecedent = Structure::semi(Structure::comma(keep), Structure::comma(moved_out));
            let moved = Sequent::new(antecedent, Formula::Bottom);
            if moved != *seq && !out.contains(&moved) {
                out.push(moved);
            }
        }
    }
    out
}

fn rebase_through_orbit(
    members: &[Sequent],
    parents: &[Option<usize>],
    index: usize,
    derivation: Derivation,
) -> Derivation {
    let mut node = derivation;
    let mut at = index;
    while let Some(parent) = parents[at] {
        node = Derivation::new(members[parent].clone(), RuleId::RBot, vec![node]);
        at = parent;
    }
    node
}

/// Every backward rule instance of `goal` in the given system: the rule and
/// the premises it requires, premises canonicalized. Cut, the translation
/// rules, and regrouping at falsity are not enumerated here; the first two
/// are never searched and the last is covered by [`rbot_orbit`]. Order:
/// identity, right rules, left rules, weakening from falsity.
pub fn applicable_rule_instances(
    goal: &Sequent,
    rule_set: RuleSetId,
) -> Vec<(RuleId, Vec<Sequent>)> {
    assert!(
        !rule_set.is_simple(),
        "rule set `{rule_set}` is not a structural system"
    );
    let mut out: Vec<(RuleId, Vec<Sequent>)> = Vec::new();
    let push = |entry: (RuleId, Vec<Sequent>), out: &mut Vec<(RuleId, Vec<Sequent>)>| {
        if !out.contains(&entry) {
            out.push(entry);
        }
    };

    if let Structure::Leaf(f) = &goal.antecedent {
        if *f == goal.succedent {
            push((RuleId::Id, Vec::new()), &mut out);
        }
    }

    // right rules
    match &goal.succedent {
        Formula::Fuse(a, b) if rule_set.contains(RuleId::DotR) => {
            if let Structure::Comma(children) = &goal.antecedent {
                let n = children.len();
                crate::structure::assert_mask_width(n);
                for mask in 1u32..((1u32 << n) - 1) {
                    let mut first = Vec::new();
                    let mut second = Vec::new();
                    for (i, child) in children.iter().enumerate() {
                        if mask & (1 << i) != 0 {
                            first.push(child.clone());
                        } else {
                            second.push(child.clone());
                        }
                    }
                    push(
                        (
                            RuleId::DotR,
                            vec![
                                Sequent::new(Structure::comma(first), (**a).clone()),
                                Sequent::new(Structure::comma(second), (**b).clone()),
                            ],
                        ),
                        &mut out,
                    );
                }
            }
        }
        Formula::Star(a, b) if rule_set.contains(RuleId::StarR) => {
            if let Structure::Semi(left, right) = &goal.antecedent {
                for (first, second) in [(left, right), (right, left)] {
                    push(
                        (
                            RuleId::StarR,
                            vec![
                                Sequent::new((**first).clone(), (**a).clone()),
                                Sequent::new((**second).clone(), (**b).clone()),
                            ],
                        ),
                        &mut out,
                    );
                }
            }
        }
        Formula::Under(a, b) if rule_set.contains(RuleId::UnderR) => {
            let antecedent = Structure::comma(vec![
                Structure::leaf((**a).clone()),
                goal.antecedent.clone(),
            ]);
            push(
                (
                    RuleId::UnderR,
                    vec![Sequent::new(antecedent, (**b).clone())],
                ),
                &mut out,
            );
        }
        Formula::Arrow(a, b) => {
            if rule_set.contains(RuleId::ArrowR) {
                let antecedent =
                    Structure::semi(Structure::leaf((**a).clone()), goal.antecedent.clone());
                push(
                    (
                        RuleId::ArrowR,
                        vec![Sequent::new(antecedent, (**b).clone())],
                    ),
                    &mut out,
                );
            } else if rule_set.contains(RuleId::NegR) && **b == Formula::Bottom {
                let antecedent =
                    Structure::semi(Structure::leaf((**a).clone()), goal.antecedent.clone());
                push(
                    (
                        RuleId::NegR,
                        vec![Sequent::new(antecedent, Formula::Bottom)],
                    ),
                    &mut out,
                );
            }
        }
        Formula::Meet(a, b) if rule_set.contains(RuleId::MeetR) => {
            push(
                (
                    RuleId::MeetR,
                    vec![
                        Sequent::new(goal.antecedent.clone(), (**a).clone()),
                        Sequent::new(goal.antecedent.clone(), (**b).clone()),
                    ],
                ),
                &mut out,
            );
        }
        Formula::Join(a, b) if rule_set.contains(RuleId::JoinR) => {
            // the principal disjunct may be either component
            push(
                (
                    RuleId::JoinR,
                    vec![Sequent::new(goal.antecedent.clone(), (**a).clone())],
                ),
                &mut out,
            );
            push(
                (
                    RuleId::JoinR,
                    vec![Sequent::new(goal.antecedent.clone(), (**b).clone())],
                ),
                &mut out,
            );
        }
        _ => {}
    }

    // left rules, one batch per principal formula occurrence
    for (ctx, principal) in goal.antecedent.formula_contexts() {
        match &principal {
            Formula::Fuse(a, b) if rule_set.contains(RuleId::DotL) => {
                let plug = Structure::comma(vec![
                    Structure::leaf((**a).clone()),
                    Structure::leaf((**b).clone()),
                ]);
                push(
                    (
                        RuleId::DotL,
                        vec![Sequent::new(ctx.fill(plug), goal.succedent.clone())],
                    ),
                    &mut out,
                );
            }
            Formula::Star(a, b) if rule_set.contains(RuleId::StarL) => {
                let plug = Structure::semi(
                    Structure::leaf((**a).clone()),
                    Structure::leaf((**b).clone()),
                );
                push(
                    (
                        RuleId::StarL,
                        vec![Sequent::new(ctx.fill(plug), goal.succedent.clone())],
                    ),
                    &mut out,
                );
            }
            Formula::Meet(a, b) if rule_set.contains(RuleId::MeetL) => {
                // the principal conjunct may be either component
                for part in [a, b] {
                    push(
                        (
                            RuleId::MeetL,
                            vec![Sequent::new(
                                ctx.fill(Structure::leaf((**part).clone())),
                                goal.succedent.clone(),
                            )],
                        ),
                        &mut out,
                    );
                }
            }
            Formula::Join(a, b) if rule_set.contains(RuleId::JoinL) => {
                push(
                    (
                        RuleId::JoinL,
                        vec![
                            Sequent::new(
                                ctx.fill(Structure::leaf((**a).clone())),
                                goal.succedent.clone(),
                            ),
                            Sequent::new(
                                ctx.fill(Structure::leaf((**b).clone())),
                                goal.succedent.clone(),
                            ),
                        ],
                    ),
                    &mut out,
                );
            }
            Formula::Under(a, b) if rule_set.contains(RuleId::UnderL) => {
                // the principal must sit in a comma next to the minor part
                if let Some(Frame::Comma(siblings)) = ctx.innermost() {
                    let outer = ctx.without_innermost();
                    let n = siblings.len();
                    crate::structure::assert_mask_width(n);
                    for mask in 1u32..(1u32 << n) {
                        let mut minor = Vec::new();
                        let mut rest = Vec::new();
                        for (i, sibling) in siblings.iter().enumerate() {
                            if mask & (1 << i) != 0 {
                                minor.push(sibling.clone());
                            } else {
                                rest.push(sibling.clone());
                            }
                        }
                        let residual_ctx = outer.clone().wrap_comma(rest);
                        push(
                            (
                                RuleId::UnderL,
                                vec![
                                    Sequent::new(Structure::comma(minor), (**a).clone()),
                                    Sequent::new(
                                        residual_ctx.fill(Structure::leaf((**b).clone())),
                                        goal.succedent.clone(),
                                    ),
                                ],
                            ),
                            &mut out,
                        );
                    }
                }
            }
            Formula::Arrow(a, b) => {
                // the principal must sit on one side of a semicolon
                if let Some(Frame::Semi(other)) = ctx.innermost() {
                    let outer = ctx.without_innermost();
                    if rule_set.contains(RuleId::ArrowL) {
                        push(
                            (
                                RuleId::ArrowL,
                                vec![
                                    Sequent::new(other.clone(), (**a).clone()),
                                    Sequent::new(
                                        outer.fill(Structure::leaf((**b).clone())),
                                        goal.succedent.clone(),
                                    ),
                                ],
                            ),
                            &mut out,
                        );
                    } else if rule_set.contains(RuleId::NegL)
                        && **b == Formula::Bottom
                        && goal.succedent == Formula::Bottom
                        && outer.is_hole()
                    {
                        push(
                            (
                                RuleId::NegL,
                                vec![Sequent::new(other.clone(), (**a).clone())],
                            ),
                            &mut out,
                        );
                    }
                }
            }
            _ => {}
        }
    }

    // weakening from falsity, one instance per substructure occurrence
    if rule_set.contains(RuleId::Bot) {
        for (_, part) in goal.antecedent.contexts() {
            let premise = Sequent::new(part, Formula::Bottom);
            if premise == *goal {
                continue; // identical premise: nothing gained
            }
            push((RuleId::Bot, vec![premise]), &mut out);
        }
    }

    out
}

/// Why a derivation failed to check.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error(
    "rule `{rule}` at node {path:?} does not match its schema: {message} (conclusion: {sequent})"
)]
pub struct CheckError {
    /// Child indices from the root to the failing node.
    pub path: Vec<usize>,
    pub rule: RuleId,
    pub sequent: String,
    pub message: String,
}

/// Check every node of `derivation` against the schemata of `rule_set`
/// (a structural system: `gb`, `qgc` or `gc`). Cut is accepted where the
/// system lists it, which lets externally supplied proofs with cut be
/// validated against the cut-free search results.
pub fn check_derivation(derivation: &Derivation, rule_set: RuleSetId) -> Result<(), CheckError> {
    assert!(
        !rule_set.is_simple(),
        "rule set `{rule_set}` is simple; use systems::check_simple_derivation"
    );
    check_node(derivation, rule_set, &mut Vec::new())
}

fn check_node(
    node: &Derivation,
    rule_set: RuleSetId,
    path: &mut Vec<usize>,
) -> Result<(), CheckError> {
    let fail = |message: String, path: &[usize]| CheckError {
        path: path.to_vec(),
        rule: node.rule,
        sequent: node.sequent.to_string(),
        message,
    };

    if !rule_set.contains(node.rule) {
        return Err(fail(
            format!("rule is not part of system `{rule_set}`"),
            path,
        ));
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
    let premise_sequents: Vec<Sequent> = node.premises.iter().map(|p| p.sequent.clone()).collect();

    let ok = match node.rule {
        RuleId::Cut => check_cut(&node.sequent, &premise_sequents),
        RuleId::RBot => {
            node.sequent.succedent == Formula::Bottom
                && rbot_moves(&node.sequent).contains(&premise_sequents[0])
        }
        RuleId::KoL => check_ko_left(&node.sequent, &premise_sequents[0]),
        RuleId::KoR => check_ko_right(&node.sequent, &premise_sequents[0]),
        _ => applicable_rule_instances(&node.sequent, rule_set)
            .into_iter()
            .any(|(rule, premises)| rule == node.rule && premises == premise_sequents),
    };
    if !ok {
        return Err(fail("no instantiation matches the premises".into(), path));
    }
    for (i, premise) in node.premises.iter().enumerate() {
        path.push(i);
        check_node(premise, rule_set, path)?;
        path.pop();
    }
    Ok(())
}

fn check_cut(conclusion: &Sequent, premises: &[Sequent]) -> bool {
    let (minor, major) = (&premises[0], &premises[1]);
    if major.succedent != conclusion.succedent {
        return false;
    }
    conclusion
        .antecedent
        .contexts()
        .into_iter()
        .any(|(ctx, part)| {
            part == minor.antecedent
                && ctx.fill(Structure::leaf(minor.succedent.clone())) == major.antecedent
        })
}

fn check_ko_left(conclusion: &Sequent, premise: &Sequent) -> bool {
    if premise.succedent != conclusion.succedent {
        return false;
    }
    conclusion
        .antecedent
        .formula_contexts()
        .into_iter()
        .any(|(ctx, f)| match ko(&f) {
            Ok(translated) => ctx.fill(Structure::leaf(translated)) == premise.antecedent,
            Err(_) => false,
        })
}

fn check_ko_right(conclusion: &Sequent, premise: &Sequent) -> bool {
    premise.antecedent == conclusion.antecedent
        && match ko(&conclusion.succedent) {
            Ok(translated) => premise.succedent == translated,
            Err(_) => false,
        }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_sequent;

    fn seq(text: &str) -> Sequent {
        parse_sequent(text).unwrap()
    }

    fn prove_gb(text: &str) -> Outcome {
        prove(&seq(text), &SearchConfig::default())
    }

    #[test]
    fn identity_axiom() {
        let outcome = prove_gb("p => p");
        let d = outcome.derivation().expect("proved");
        assert_eq!(d.rule, RuleId::Id);
        assert!(d.premises.is_empty());
    }

    #[test]
    fn double_negation_introduction_proved() {
        assert!(prove_gb("p => ~~p").is_proved());
    }

    #[test]
    fn double_negation_elimination_refuted() {
        assert_eq!(prove_gb("~~p => p"), Outcome::Refuted);
    }

    #[test]
    fn modus_ponens_shape_proved() {
        assert!(prove_gb("p , p \\ q => q").is_proved());
    }

    #[test]
    fn star_with_negation_collapses_to_bottom() {
        assert!(prove_gb("p ; ~p => bot").is_proved());
    }

    #[test]
    fn proved_derivations_check() {
        for text in ["p => p", "p => ~~p", "p , p \\ q => q", "p ; ~p => bot"] {
            let outcome = prove_gb(text);
            let d = outcome
                .derivation()
                .unwrap_or_else(|| panic!("{text} should prove"));
            check_derivation(d, RuleSetId::Gb).unwrap();
            assert_eq!(d.sequent, seq(text));
        }
    }

    #[test]
    fn orbit_of_comma_semi_bottom() {
        let orbit = rbot_orbit(&seq("(p , q) ; r => bot"));
        assert_eq!(orbit.len(), 3);
        assert!(orbit.contains(&seq("(p , r) ; q => bot")));
        assert!(orbit.contains(&seq("(q , r) ; p => bot")));
    }

    #[test]
    fn orbit_without_semi_is_singleton() {
        assert_eq!(rbot_orbit(&seq("p => bot")), vec![seq("p => bot")]);
    }

    #[test]
    fn orbit_of_leaf_sides_is_singleton() {
        // no proper split of a leaf
        assert_eq!(rbot_orbit(&seq("p ; q => bot")), vec![seq("p ; q => bot")]);
    }

    #[test]
    fn fusion_right_enumerates_bipartitions() {
        let instances = applicable_rule_instances(&seq("p , q => p . q"), RuleSetId::Gb);
        let expected = (RuleId::DotR, vec![seq("p => p"), seq("q => q")]);
        assert!(instances.contains(&expected));
    }

    #[test]
    fn residual_right_premise() {
        let instances = applicable_rule_instances(&seq("p => q \\ r"), RuleSetId::Gb);
        let expected = (RuleId::UnderR, vec![seq("q , p => r")]);
        assert!(instances.contains(&expected));
    }

    #[test]
    fn arrow_left_instance_through_semi() {
        let instances = applicable_rule_instances(&seq("p ; ~p => bot"), RuleSetId::Gb);
        let expected = (RuleId::ArrowL, vec![seq("p => p"), seq("bot => bot")]);
        assert!(instances.contains(&expected));
    }

    #[test]
    fn check_rejects_mismatched_premise() {
        // dotL whose premise fused the wrong formulas
        let bad = Derivation::new(
            seq("p . q => p . q"),
            RuleId::DotL,
            vec![Derivation::leaf(seq("p , p => p . q"), RuleId::Id)],
        );
        assert!(check_derivation(&bad, RuleSetId::Gb).is_err());
    }

    #[test]
    fn check_accepts_cut_nodes_in_gb() {
        let cut = Derivation::new(
            seq("p => p \\/ q"),
            RuleId::Cut,
            vec![
                Derivation::leaf(seq("p => p"), RuleId::Id),
                Derivation::new(
                    seq("p => p \\/ q"),
                    RuleId::JoinR,
                    vec![Derivation::leaf(seq("p => p"), RuleId::Id)],
                ),
            ],
        );
        check_derivation(&cut, RuleSetId::Gb).unwrap();
    }

    #[test]
    fn qgc_decides_negation_language_goals() {
        let cfg = SearchConfig::for_rule_set(RuleSetId::Qgc);
        assert!(prove(&seq("p => ~~p"), &cfg).is_proved());
        assert_eq!(prove(&seq("~~p => p"), &cfg), Outcome::Refuted);
    }

    #[test]
    fn memoization_does_not_change_outcomes() {
        let plain = SearchConfig {
            memoize: false,
            ..SearchConfig::default()
        };
        for text in [
            "p => ~~p",
            "~~p => p",
            "p , q => p . q",
            "p /\\ q => q \\/ r",
        ] {
            let with = prove(&seq(text), &SearchConfig::default());
            let without = prove(&seq(text), &plain);
            assert_eq!(with.kind(), without.kind(), "{text}");
        }
    }

    #[test]
    fn refutation_is_fast_for_distinct_atoms() {
        assert_eq!(prove_gb("p => q"), Outcome::Refuted);
    }

    #[test]
    fn atom_restricted_identity_still_decides() {
        let cfg = SearchConfig {
            atom_identity_only: true,
            ..SearchConfig::default()
        };
        // composite identity must now go through the logical rules
        let outcome = prove(&seq("p . q => p . q"), &cfg);
        let d = outcome.derivation().expect("still provable");
        assert_ne!(d.rule, RuleId::Id);
        check_derivation(d, RuleSetId::Gb).unwrap();
        assert_eq!(prove(&seq("~~p => p"), &cfg), Outcome::Refuted);
    }
}
