//! Decision procedure and finite-algebra workbench for the logic of
//! involutive commutative residuated lattice-ordered semigroups without
//! unit.
//!
//! The crate has four parts:
//!
//! * syntax: formulas, formula structures, sequents and derivations, with
//!   a text grammar and JSON wire formats ([`formula`], [`structure`],
//!   [`sequent`], [`parse`], [`derivation`]);
//! * an exhaustive backward prover for the cut-free structural calculus,
//!   returning a checkable derivation or a certified refutation
//!   ([`prover`]);
//! * the system registry, the Kolmogorov double-negation translation, and
//!   the reductions that decide the simple calculi through the structural
//!   one ([`rules`], [`systems`]);
//! * a finite-algebra workbench: law checking for every algebra class, the
//!   expansion of a quasi-involutive algebra to a bounded bi-residuated
//!   one, small-algebra enumeration and countermodel search ([`algebra`]).
//!
//! All values are immutable after construction and freely shareable across
//! threads.
//!
//! ```
//! use infl_core::algebra::FiniteAlgebra;
//! use infl_core::prover::{check_derivation, prove, Outcome, SearchConfig};
//! use infl_core::{parse_sequent, RuleSetId};
//!
//! let goal = parse_sequent("p , p \\ q => q")?;
//! let Outcome::Proved(derivation) = prove(&goal, &SearchConfig::default()) else {
//!     unreachable!("residual application is derivable");
//! };
//! check_derivation(&derivation, RuleSetId::Gb)?;
//!
//! // and the proved sequent holds in the expanded built-in model
//! let model = FiniteAlgebra::involutive_example().expand()?;
//! assert!(model.valid(&goal)?.is_valid());
//! # Ok::<(), Box<dyn std::error::Error>>(())
//! ```

pub mod algebra;
pub mod derivation;
pub mod formula;
pub mod parse;
pub mod prover;
pub mod rules;
pub mod sequent;
pub mod structure;
pub mod systems;
pub mod translate;

pub use derivation::Derivation;
pub use formula::Formula;
pub use parse::{parse_formula, parse_sequent, parse_simple_sequent, ParseError, ParseOptions};
pub use prover::{Outcome, SearchConfig};
pub use rules::{RuleId, RuleSetId};
pub use sequent::{Sequent, SimpleSequent};
pub use structure::{Context, Structure};
