//! Rule identifiers and the rule sets they belong to.
//!
//! Five systems are supported. `g` is the simple calculus of the involutive
//! logic (sequents are formula pairs) and `qg` its variant without the
//! double-negation axiom; both contain cut and are used only for checking
//! derivations; deciding them goes through `gb`. `gb` is the cut-free
//! structural calculus with both fusions and bounds, searched exhaustively
//! by the prover. `qgc` replaces the `*`/`->` rules of `gb` by negation
//! rules, and `gc` extends `qgc` with the two translation rules that close
//! derivations of the involutive logic.

use std::fmt;

use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum RuleSetId {
    G,
    Qg,
    Gb,
    Qgc,
    Gc,
}

impl RuleSetId {
    pub fn name(self) -> &'static str {
        match self {
            RuleSetId::G => "g",
            RuleSetId::Qg => "qg",
            RuleSetId::Gb => "gb",
            RuleSetId::Qgc => "qgc",
            RuleSetId::Gc => "gc",
        }
    }

    pub fn from_name(name: &str) -> Option<RuleSetId> {
        match name {
            "g" => Some(RuleSetId::G),
            "qg" => Some(RuleSetId::Qg),
            "gb" => Some(RuleSetId::Gb),
            "qgc" => Some(RuleSetId::Qgc),
            "gc" => Some(RuleSetId::Gc),
            _ => None,
        }
    }

    /// Systems whose sequents are formula pairs rather than structures.
    pub fn is_simple(self) -> bool {
        matches!(self, RuleSetId::G | RuleSetId::Qg)
    }

    /// Systems the prover can search directly (cut-free, size-monotone).
    pub fn is_searchable(self) -> bool {
        matches!(self, RuleSetId::Gb | RuleSetId::Qgc)
    }

    pub fn members(self) -> &'static [RuleId] {
        use RuleId::*;
        match self {
            RuleSetId::G => &[
                Id, Dn2, Res, ResInv, MeetL, MeetR, JoinL, JoinR, Neg, Mn, Cut,
            ],
            RuleSetId::Qg => &[Id, Res, ResInv, MeetL, MeetR, JoinL, JoinR, Neg, Mn, Cut],
            RuleSetId::Gb => &[
                Id, DotL, DotR, StarL, StarR, UnderL, UnderR, ArrowL, ArrowR, MeetL, MeetR, JoinL,
                JoinR, Bot, RBot, Cut,
            ],
            RuleSetId::Qgc => &[
                Id, DotL, DotR, UnderL, UnderR, MeetL, MeetR, JoinL, JoinR, Bot, RBot, NegL, NegR,
                Cut,
            ],
            RuleSetId::Gc => &[
                Id, DotL, DotR, UnderL, UnderR, MeetL, MeetR, JoinL, JoinR, Bot, RBot, NegL, NegR,
                KoL, KoR, Cut,
            ],
        }
    }

    pub fn contains(self, rule: RuleId) -> bool {
        self.members().contains(&rule)
    }
}

impl fmt::Display for RuleSetId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.name())
    }
}

/// A rule identifier. The `meetL`/`meetR`/`joinL`/`joinR`/`id`/`cut` names
/// are shared between the structural and the simple systems; which schema
/// applies is determined by the rule set a derivation is checked against.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum RuleId {
    /// `a => a`
    Id,
    /// fusion left: from `G[a , b] => c` infer `G[a . b] => c`
    DotL,
    /// fusion right: from `G1 => a` and `G2 => b` infer `G1 , G2 => a . b`
    DotR,
    StarL,
    StarR,
    /// from `D => a` and `G[b] => c` infer `G[D , a \ b] => c`
    UnderL,
    /// from `a , G => b` infer `G => a \ b`
    UnderR,
    /// from `D => a` and `G[b] => c` infer `G[D ; a -> b] => c`
    ArrowL,
    /// from `a ; G => b` infer `G => a -> b`
    ArrowR,
    MeetL,
    MeetR,
    JoinL,
    JoinR,
    /// weakening from falsity: from `D => bot` infer `G[D] => a`
    Bot,
    /// regrouping at falsity: from `(D1 , D2) ; D3 => bot` infer
    /// `(D1 , D3) ; D2 => bot`
    RBot,
    /// from `D => a` infer `D ; ~a => bot`
    NegL,
    /// from `a ; G => bot` infer `G => ~a`
    NegR,
    /// from `G[ko(a)] => b` infer `G[a] => b`
    KoL,
    /// from `G => ko(a)` infer `G => a`
    KoR,
    Cut,
    /// double-negation axiom of the simple involutive system: `~~a => a`
    Dn2,
    /// residuation: from `a . b => c` infer `b => a \ c`
    Res,
    /// inverse residuation: from `b => a \ c` infer `a . b => c`
    ResInv,
    /// contraposition with side formula: from `a . b => ~c` infer
    /// `c . b => ~a`
    Neg,
    /// plain contraposition: from `a => ~c` infer `c => ~a`
    Mn,
}

impl RuleId {
    pub fn name(self) -> &'static str {
        match self {
            RuleId::Id => "id",
            RuleId::DotL => "dotL",
            RuleId::DotR => "dotR",
            RuleId::StarL => "starL",
            RuleId::StarR => "starR",
            RuleId::UnderL => "underL",
            RuleId::UnderR => "underR",
            RuleId::ArrowL => "arrowL",
            RuleId::ArrowR => "arrowR",
            RuleId::MeetL => "meetL",
            RuleId::MeetR => "meetR",
            RuleId::JoinL => "joinL",
            RuleId::JoinR => "joinR",
            RuleId::Bot => "bot",
            RuleId::RBot => "rbot",
            RuleId::NegL => "negL",
            RuleId::NegR => "negR",
            RuleId::KoL => "koL",
            RuleId::KoR => "koR",
            RuleId::Cut => "cut",
            RuleId::Dn2 => "dn2",
            RuleId::Res => "res",
            RuleId::ResInv => "resInv",
            RuleId::Neg => "neg",
            RuleId::Mn => "mn",
        }
    }

    pub fn from_name(name: &str) -> Option<RuleId> {
        use RuleId::*;
        let all = [
            Id, DotL, DotR, StarL, StarR, UnderL, UnderR, ArrowL, ArrowR, MeetL, MeetR, JoinL,
            JoinR, Bot, RBot, NegL, NegR, KoL, KoR, Cut, Dn2, Res, ResInv, Neg, Mn,
        ];
        all.into_iter().find(|r| r.name() == name)
    }

    /// Number of premises.
    pub fn arity(self) -> usize {
        use RuleId::*;
        match self {
            Id | Dn2 => 0,
            DotL | StarL | UnderR | ArrowR | MeetL | JoinR | Bot | RBot | NegL | NegR | KoL
            | KoR | Res | ResInv | Neg | Mn => 1,
            DotR | StarR | UnderL | ArrowL | MeetR | JoinL | Cut => 2,
        }
    }
}

impl fmt::Display for RuleId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.name())
    }
}
