//! Translations between the four representations. Every function returns an order equivalent to
//! its input.
//!
//! Lexicographic and natural histories are turned into level orders back to front, starting from
//! the level order `[true]` and applying one revision step per history formula (see
//! [`natural_step`] and [`lex_step`]). Level orders become histories by reusing their normalized
//! sequence unchanged.

use crate::error::{Error, Result};
use crate::formula::{formula_from_models, is_consistent, Alphabet, Formula, Model};
use crate::orders::{classes_of, ExplicitOrder, Kind, LevelOrder, LexOrder, NaturalOrder, Order};

/// Default bound on the length of level sequences built by [`lex_to_level`].
pub const DEFAULT_LENGTH_CAP: usize = 1 << 20;

/// How [`natural_to_level`] treats history formulae without models.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum InconsistentHistory {
    /// Fail with [`Error::InconsistentRevision`].
    #[default]
    Reject,
    /// Drop them first; they do not affect the natural order.
    Drop,
}

fn satisfiable_together(f: &Formula, g: &Formula, alphabet: &Alphabet) -> Result<bool> {
    Ok(alphabet.models()?.any(|m| f.eval(m) && g.eval(m)))
}

/// Why `levels` is not a partition of the model space, if it is not.
///
/// A partition here means every model satisfies exactly one level. Levels without models are
/// allowed.
pub fn partition_problem(alphabet: &Alphabet, levels: &[Formula]) -> Result<Option<String>> {
    for m in alphabet.models()? {
        let mut satisfied = levels.iter().enumerate().filter(|(_, f)| f.eval(m));
        match (satisfied.next(), satisfied.next()) {
            (None, _) => return Ok(Some(format!("model {m} satisfies no level"))),
            (Some((a, _)), Some((b, _))) => {
                return Ok(Some(format!(
                    "model {m} satisfies levels {} and {}",
                    a + 1,
                    b + 1
                )))
            }
            _ => {}
        }
    }
    Ok(None)
}

/// Why `o` is not normalized, if it is not: levels must be mutually inconsistent, jointly
/// exhaustive and individually consistent.
pub fn normalization_problem(o: &LevelOrder) -> Result<Option<String>> {
    if let Some(problem) = partition_problem(o.alphabet(), o.levels())? {
        return Ok(Some(problem));
    }
    for (k, f) in o.levels().iter().enumerate() {
        if !is_consistent(f, o.alphabet())? {
            return Ok(Some(format!("level {} has no models", k + 1)));
        }
    }
    Ok(None)
}

fn drop_inconsistent(alphabet: &Alphabet, levels: Vec<Formula>) -> Result<Vec<Formula>> {
    let mut kept = Vec::with_capacity(levels.len());
    for f in levels {
        if is_consistent(&f, alphabet)? {
            kept.push(f);
        }
    }
    Ok(kept)
}

/// An equivalent level order whose levels are mutually inconsistent, jointly exhaustive and
/// consistent.
///
/// Already normalized input is returned unchanged. A partition with empty levels only loses
/// those levels. Otherwise level `k` becomes `S_k ∧ ¬S_{k-1} ∧ … ∧ ¬S_1`, levels without models
/// are dropped, and `¬S_1 ∧ … ∧ ¬S_m` (repeated levels negated once) is appended when some model
/// satisfies no level.
pub fn normalize_level(o: &LevelOrder) -> Result<LevelOrder> {
    let alphabet = o.alphabet();
    alphabet.check_cap()?;
    if o.is_flagged_normalized() {
        return Ok(o.clone());
    }
    let levels = o.levels();
    if partition_problem(alphabet, levels)?.is_none() {
        let kept = drop_inconsistent(alphabet, levels.to_vec())?;
        return Ok(LevelOrder::normalized_unchecked(alphabet.clone(), kept));
    }

    let disjoint = levels.iter().enumerate().map(|(k, s)| {
        Formula::conjunction(
            std::iter::once(s.clone())
                .chain(levels[..k].iter().rev().map(|p| Formula::not(p.clone()))),
        )
    });
    let mut normalized = drop_inconsistent(alphabet, disjoint.collect())?;
    let uncovered = alphabet
        .models()?
        .any(|m| levels.iter().all(|f| !f.eval(m)));
    if uncovered {
        let mut distinct: Vec<&Formula> = Vec::new();
        for f in levels {
            if !distinct.contains(&f) {
                distinct.push(f);
            }
        }
        normalized.push(Formula::conjunction(
            distinct.into_iter().map(|f| Formula::not(f.clone())),
        ));
    }
    Ok(LevelOrder::normalized_unchecked(
        alphabet.clone(),
        normalized,
    ))
}

/// One natural revision of the partition `q` by `f`:
/// `[f ∧ Q_c, Q_1, …, Q_{c-1}, ¬f ∧ Q_c, Q_{c+1}, …, Q_k]`, with `Q_c` the first level
/// consistent with `f`.
pub fn natural_step(alphabet: &Alphabet, q: &[Formula], f: &Formula) -> Result<Vec<Formula>> {
    let mut c = None;
    for (k, qk) in q.iter().enumerate() {
        if satisfiable_together(f, qk, alphabet)? {
            c = Some(k);
            break;
        }
    }
    let c =
        c.ok_or_else(|| Error::InconsistentRevision(format!("`{f}` is consistent with no level")))?;
    let mut out = Vec::with_capacity(q.len() + 1);
    out.push(Formula::and(f.clone(), q[c].clone()));
    out.extend(q[..c].iter().cloned());
    out.push(Formula::and(Formula::not(f.clone()), q[c].clone()));
    out.extend(q[c + 1..].iter().cloned());
    Ok(out)
}

/// One lexicographic revision of `q` by `f`:
/// `[f ∧ Q_1, …, f ∧ Q_k, ¬f ∧ Q_1, …, ¬f ∧ Q_k]`, without inconsistent members when `prune`.
pub fn lex_step(
    alphabet: &Alphabet,
    q: &[Formula],
    f: &Formula,
    prune: bool,
) -> Result<Vec<Formula>> {
    let negated = Formula::not(f.clone());
    let doubled = q
        .iter()
        .map(|qk| Formula::and(f.clone(), qk.clone()))
        .chain(q.iter().map(|qk| Formula::and(negated.clone(), qk.clone())));
    if prune {
        drop_inconsistent(alphabet, doubled.collect())
    } else {
        Ok(doubled.collect())
    }
}

/// Natural history to level order, rejecting inconsistent history formulae.
pub fn natural_to_level(o: &NaturalOrder) -> Result<LevelOrder> {
    natural_to_level_with(o, InconsistentHistory::Reject)
}

/// Natural history to level order. With [`InconsistentHistory::Reject`] the output has exactly
/// one level more than the history has formulae.
pub fn natural_to_level_with(o: &NaturalOrder, mode: InconsistentHistory) -> Result<LevelOrder> {
    let alphabet = o.alphabet();
    alphabet.check_cap()?;
    let mut q = vec![Formula::truth()];
    for f in o.history().iter().rev() {
        if mode == InconsistentHistory::Drop && !is_consistent(f, alphabet)? {
            continue;
        }
        q = natural_step(alphabet, &q, f)?;
    }
    LevelOrder::new(alphabet.clone(), q)
}

/// Lexicographic history to level order with the default length cap.
pub fn lex_to_level(o: &LexOrder, prune: bool) -> Result<LevelOrder> {
    lex_to_level_capped(o, prune, DEFAULT_LENGTH_CAP)
}

/// Lexicographic history to level order. Unpruned output has `2^m` levels; pruning after every
/// doubling leaves one level per equivalence class.
pub fn lex_to_level_capped(o: &LexOrder, prune: bool, length_cap: usize) -> Result<LevelOrder> {
    let alphabet = o.alphabet();
    alphabet.check_cap()?;
    let mut q = vec![Formula::truth()];
    for f in o.history().iter().rev() {
        let next = q.len().saturating_mul(2);
        if !prune && next > length_cap {
            return Err(Error::LengthCapExceeded {
                length: next,
                cap: length_cap,
            });
        }
        q = lex_step(alphabet, &q, f, prune)?;
        if q.len() > length_cap {
            return Err(Error::LengthCapExceeded {
                length: q.len(),
                cap: length_cap,
            });
        }
    }
    if prune {
        Ok(LevelOrder::normalized_unchecked(alphabet.clone(), q))
    } else {
        LevelOrder::new(alphabet.clone(), q)
    }
}

/// The natural order of the normalized level sequence.
pub fn level_to_natural(o: &LevelOrder) -> Result<NaturalOrder> {
    let normalized = normalize_level(o)?;
    NaturalOrder::new(o.alphabet().clone(), normalized.into_levels())
}

/// The lexicographic order of the normalized level sequence.
pub fn level_to_lex(o: &LevelOrder) -> Result<LexOrder> {
    let normalized = normalize_level(o)?;
    LexOrder::new(o.alphabet().clone(), normalized.into_levels())
}

/// One level per equivalence class, each the disjunction of the minterms of its models.
pub fn explicit_to_level(o: &ExplicitOrder) -> Result<LevelOrder> {
    let alphabet = o.alphabet();
    let classes = classes_of(&Order::Explicit(o.clone()))?;
    let levels = classes
        .classes()
        .iter()
        .map(|class| formula_from_models(class, alphabet))
        .collect();
    Ok(LevelOrder::normalized_unchecked(alphabet.clone(), levels))
}

/// All pairs `⟨I,J⟩` with `I ≤ J`.
pub fn to_explicit(o: &Order) -> Result<ExplicitOrder> {
    let alphabet = o.alphabet();
    if let Order::Explicit(e) = o {
        alphabet.check_cap()?;
        return Ok(e.clone());
    }
    let models: Vec<Model> = alphabet.models()?.collect();
    let mut cmp = o.comparator()?;
    let mut pairs = Vec::new();
    for &i in &models {
        for &j in &models {
            if cmp.leq(i, j) {
                pairs.push((i, j));
            }
        }
    }
    ExplicitOrder::new(alphabet.clone(), pairs)
}

/// `level_to_lex ∘ natural_to_level`.
pub fn natural_to_lex(o: &NaturalOrder) -> Result<LexOrder> {
    level_to_lex(&natural_to_level(o)?)
}

/// Options for [`translate`].
#[derive(Clone, Copy, Debug, Default)]
pub struct TranslateOptions {
    /// Drop inconsistent levels while translating lexicographic histories.
    pub prune: bool,
    /// Drop inconsistent natural-history formulae instead of failing.
    pub lenient: bool,
    /// Length cap for lexicographic-to-level translation; [`DEFAULT_LENGTH_CAP`] when `None`.
    pub length_cap: Option<usize>,
}

fn to_level(o: &Order, options: TranslateOptions) -> Result<LevelOrder> {
    match o {
        Order::Explicit(e) => explicit_to_level(e),
        Order::Level(l) => Ok(l.clone()),
        Order::Lexicographic(l) => lex_to_level_capped(
            l,
            options.prune,
            options.length_cap.unwrap_or(DEFAULT_LENGTH_CAP),
        ),
        Order::Natural(n) => {
            let mode = if options.lenient {
                InconsistentHistory::Drop
            } else {
                InconsistentHistory::Reject
            };
            natural_to_level_with(n, mode)
        }
    }
}

/// Any representation to any other, routed through level orders. Translating to the input's own
/// kind returns it unchanged.
pub fn translate(o: &Order, to: Kind, options: TranslateOptions) -> Result<Order> {
    if o.kind() == to {
        return Ok(o.clone());
    }
    Ok(match to {
        Kind::Explicit => to_explicit(o)?.into(),
        Kind::Level => to_level(o, options)?.into(),
        Kind::Lexicographic => level_to_lex(&to_level(o, options)?)?.into(),
        Kind::Natural => level_to_natural(&to_level(o, options)?)?.into(),
    })
}
