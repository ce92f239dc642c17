//! Natural and lexicographic revision, on histories and directly on level orders.

use crate::error::{Error, Result};
use crate::formula::Formula;
use crate::orders::{LevelOrder, LexOrder, NaturalOrder};
use crate::translate::{lex_step, natural_step, partition_problem};

fn prepend(history: &[Formula], f: &Formula) -> Vec<Formula> {
    std::iter::once(f.clone())
        .chain(history.iter().cloned())
        .collect()
}

/// `[f, S_1, …, S_m]`. Any formula is accepted; one without models is inert.
pub fn revise_natural_history(o: &NaturalOrder, f: &Formula) -> Result<NaturalOrder> {
    NaturalOrder::new(o.alphabet().clone(), prepend(o.history(), f))
}

/// `[f, S_1, …, S_m]`.
pub fn revise_lex_history(o: &LexOrder, f: &Formula) -> Result<LexOrder> {
    LexOrder::new(o.alphabet().clone(), prepend(o.history(), f))
}

fn check_revisable(q: &LevelOrder, f: &Formula) -> Result<()> {
    f.check_alphabet(q.alphabet())?;
    q.alphabet().check_cap()?;
    if let Some(problem) = partition_problem(q.alphabet(), q.levels())? {
        return Err(Error::NotNormalized(problem));
    }
    Ok(())
}

/// Natural revision of a level order: the models of `f` in the first class containing any become
/// the new first class, everything else keeps its relative order.
///
/// `q` must partition the model space (levels without models are tolerated). Fails with
/// [`Error::InconsistentRevision`] when `f` has no models.
pub fn revise_level_naturally(q: &LevelOrder, f: &Formula) -> Result<LevelOrder> {
    check_revisable(q, f)?;
    LevelOrder::new(
        q.alphabet().clone(),
        natural_step(q.alphabet(), q.levels(), f)?,
    )
}

/// Lexicographic revision of a level order: every class splits into its `f` part and its `¬f`
/// part, all `f` parts first. With `prune`, levels without models are dropped.
///
/// `q` must partition the model space (levels without models are tolerated).
pub fn revise_level_lexicographically(
    q: &LevelOrder,
    f: &Formula,
    prune: bool,
) -> Result<LevelOrder> {
    check_revisable(q, f)?;
    LevelOrder::new(
        q.alphabet().clone(),
        lex_step(q.alphabet(), q.levels(), f, prune)?,
    )
}
