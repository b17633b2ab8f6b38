//! The Kolmogorov double-negation translation.
//!
//! Defined on the negation language only: atoms get a double negation,
//! binary connectives translate their operands and double-negate the
//! result, and a negation translates to the negation of the translation.
//! Formulas containing `*`, a bare `->`, or a bare `bot` are rejected.
//!
//! Every output is itself a negation, which is what makes the translated
//! double-negation axiom derivable without assuming it.

use thiserror::Error;

use crate::formula::Formula;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum KoError {
    #[error("`*` is outside the negation language")]
    Star,
    #[error("`->` outside the negation pattern `a -> bot` is outside the negation language")]
    BareArrow,
    #[error("`bot` outside the negation pattern is outside the negation language")]
    BareBottom,
}

/// Translate a negation-language formula. The result is desugared like
/// every formula: `~a` appears as `a -> bot`.
pub fn ko(formula: &Formula) -> Result<Formula, KoError> {
    match formula {
        Formula::Atom(_) => Ok(double_neg(formula.clone())),
        Formula::Arrow(a, b) if **b == Formula::Bottom => Ok(Formula::neg(ko(a)?)),
        Formula::Meet(a, b) => Ok(double_neg(Formula::meet(ko(a)?, ko(b)?))),
        Formula::Join(a, b) => Ok(double_neg(Formula::join(ko(a)?, ko(b)?))),
        Formula::Fuse(a, b) => Ok(double_neg(Formula::fuse(ko(a)?, ko(b)?))),
        Formula::Under(a, b) => Ok(double_neg(Formula::under(ko(a)?, ko(b)?))),
        Formula::Star(..) => Err(KoError::Star),
        Formula::Arrow(..) => Err(KoError::BareArrow),
        Formula::Bottom => Err(KoError::BareBottom),
    }
}

fn double_neg(f: Formula) -> Formula {
    Formula::neg(Formula::neg(f))
}
