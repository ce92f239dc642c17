//! The four representations of a connected preorder over models, compared by `I ≤ J`.
//!
//! - [`ExplicitOrder`]: the set of pairs itself.
//! - [`LevelOrder`]: `[S_1,…,S_m]`, a model sits at the index of the first formula it satisfies;
//!   models satisfying none form an implicit last class.
//! - [`LexOrder`]: a history of lexicographic revisions, `S_1` the most recent.
//! - [`NaturalOrder`]: a history of natural revisions, `S_1` the most recent.
//!
//! The comparison functions follow the inductive definitions directly and are used as the
//! reference semantics for the translations.

mod explicit;
mod natural;

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::formula::{Alphabet, Formula, Model};

pub use explicit::{validate_explicit, ExplicitOrder, Violation};
pub use natural::NaturalEvaluator;

fn check_formulae(alphabet: &Alphabet, formulae: &[Formula]) -> Result<()> {
    formulae.iter().try_for_each(|f| f.check_alphabet(alphabet))
}

/// Sequence of formulae read as plausibility levels, most plausible first.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LevelOrder {
    alphabet: Alphabet,
    levels: Vec<Formula>,
    normalized: bool,
}

impl LevelOrder {
    pub fn new(alphabet: Alphabet, levels: Vec<Formula>) -> Result<Self> {
        check_formulae(&alphabet, &levels)?;
        Ok(Self {
            alphabet,
            levels,
            normalized: false,
        })
    }

    /// Only for sequences known to be normalized: mutually inconsistent, jointly exhaustive and
    /// free of inconsistent members.
    pub(crate) fn normalized_unchecked(alphabet: Alphabet, levels: Vec<Formula>) -> Self {
        Self {
            alphabet,
            levels,
            normalized: true,
        }
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn levels(&self) -> &[Formula] {
        &self.levels
    }

    pub fn into_levels(self) -> Vec<Formula> {
        self.levels
    }

    /// Set only by [`crate::translate::normalize_level`] and the constructions that preserve it.
    pub fn is_flagged_normalized(&self) -> bool {
        self.normalized
    }

    /// Position of the first level satisfied by `m`.
    pub fn level_of(&self, m: Model) -> Option<usize> {
        self.levels.iter().position(|f| f.eval(m))
    }

    pub fn leq(&self, i: Model, j: Model) -> Result<bool> {
        self.alphabet.expect_model(i)?;
        self.alphabet.expect_model(j)?;
        Ok(self.leq_unchecked(i, j))
    }

    fn leq_unchecked(&self, i: Model, j: Model) -> bool {
        match (self.level_of(i), self.level_of(j)) {
            (_, None) => true,
            (Some(a), Some(b)) => a <= b,
            (None, Some(_)) => false,
        }
    }
}

/// The order induced by a single formula: `I ≤_F J` iff `I ⊨ F` or `J ⊭ F`.
pub fn leq_formula(f: &Formula, i: Model, j: Model) -> bool {
    f.eval(i) || !f.eval(j)
}

fn leq_lex_history(history: &[Formula], i: Model, j: Model) -> bool {
    match history.split_first() {
        None => true,
        Some((first, rest)) => {
            leq_formula(first, i, j) && (!leq_formula(first, j, i) || leq_lex_history(rest, i, j))
        }
    }
}

/// Lexicographic revisions, most recent first.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LexOrder {
    alphabet: Alphabet,
    history: Vec<Formula>,
}

impl LexOrder {
    pub fn new(alphabet: Alphabet, history: Vec<Formula>) -> Result<Self> {
        check_formulae(&alphabet, &history)?;
        Ok(Self { alphabet, history })
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn history(&self) -> &[Formula] {
        &self.history
    }

    pub fn leq(&self, i: Model, j: Model) -> Result<bool> {
        self.alphabet.expect_model(i)?;
        self.alphabet.expect_model(j)?;
        Ok(leq_lex_history(&self.history, i, j))
    }
}

/// Natural revisions, most recent first.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NaturalOrder {
    alphabet: Alphabet,
    history: Vec<Formula>,
}

impl NaturalOrder {
    pub fn new(alphabet: Alphabet, history: Vec<Formula>) -> Result<Self> {
        check_formulae(&alphabet, &history)?;
        Ok(Self { alphabet, history })
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn history(&self) -> &[Formula] {
        &self.history
    }

    /// A single comparison. Repeated comparisons should share a [`NaturalEvaluator`].
    pub fn leq(&self, i: Model, j: Model) -> Result<bool> {
        self.alphabet.expect_model(i)?;
        self.alphabet.expect_model(j)?;
        Ok(NaturalEvaluator::new(self)?.leq(i, j))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Kind {
    Explicit,
    Level,
    Lexicographic,
    Natural,
}

impl Kind {
    pub const ALL: [Kind; 4] = [
        Kind::Explicit,
        Kind::Level,
        Kind::Lexicographic,
        Kind::Natural,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Kind::Explicit => "explicit",
            Kind::Level => "level",
            Kind::Lexicographic => "lexicographic",
            Kind::Natural => "natural",
        }
    }
}

impl fmt::Display for Kind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Kind {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        Kind::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| format!("unknown order kind `{s}`"))
    }
}

/// Any of the four representations.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Order {
    Explicit(ExplicitOrder),
    Level(LevelOrder),
    Lexicographic(LexOrder),
    Natural(NaturalOrder),
}

impl Order {
    pub fn kind(&self) -> Kind {
        match self {
            Order::Explicit(_) => Kind::Explicit,
            Order::Level(_) => Kind::Level,
            Order::Lexicographic(_) => Kind::Lexicographic,
            Order::Natural(_) => Kind::Natural,
        }
    }

    pub fn alphabet(&self) -> &Alphabet {
        match self {
            Order::Explicit(o) => o.alphabet(),
            Order::Level(o) => o.alphabet(),
            Order::Lexicographic(o) => o.alphabet(),
            Order::Natural(o) => o.alphabet(),
        }
    }

    /// The formula sequence; empty for explicit orders.
    pub fn formulae(&self) -> &[Formula] {
        match self {
            Order::Explicit(_) => &[],
            Order::Level(o) => o.levels(),
            Order::Lexicographic(o) => o.history(),
            Order::Natural(o) => o.history(),
        }
    }

    pub fn leq(&self, i: Model, j: Model) -> Result<bool> {
        match self {
            Order::Explicit(o) => o.leq(i, j),
            Order::Level(o) => o.leq(i, j),
            Order::Lexicographic(o) => o.leq(i, j),
            Order::Natural(o) => o.leq(i, j),
        }
    }

    /// A reusable comparison closure over models of this order's alphabet.
    ///
    /// Widths are not rechecked per call. Enumerates the model space for natural orders, so
    /// the cap applies.
    pub fn comparator(&self) -> Result<Comparator<'_>> {
        Ok(match self {
            Order::Explicit(o) => Comparator::Explicit(o),
            Order::Level(o) => Comparator::Level(o),
            Order::Lexicographic(o) => Comparator::Lex(o.history()),
            Order::Natural(o) => Comparator::Natural(Box::new(NaturalEvaluator::new(o)?)),
        })
    }
}

impl From<ExplicitOrder> for Order {
    fn from(o: ExplicitOrder) -> Self {
        Order::Explicit(o)
    }
}

impl From<LevelOrder> for Order {
    fn from(o: LevelOrder) -> Self {
        Order::Level(o)
    }
}

impl From<LexOrder> for Order {
    fn from(o: LexOrder) -> Self {
        Order::Lexicographic(o)
    }
}

impl From<NaturalOrder> for Order {
    fn from(o: NaturalOrder) -> Self {
        Order::Natural(o)
    }
}

pub enum Comparator<'a> {
    Explicit(&'a ExplicitOrder),
    Level(&'a LevelOrder),
    Lex(&'a [Formula]),
    Natural(Box<NaturalEvaluator<'a>>),
}

impl Comparator<'_> {
    pub fn leq(&mut self, i: Model, j: Model) -> bool {
        match self {
            Comparator::Explicit(o) => o.contains(i, j),
            Comparator::Level(o) => o.leq_unchecked(i, j),
            Comparator::Lex(history) => leq_lex_history(history, i, j),
            Comparator::Natural(eval) => eval.leq(i, j),
        }
    }
}

/// The equivalence classes of an order, most plausible first.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassPartition {
    alphabet: Alphabet,
    classes: Vec<BTreeSet<Model>>,
}

impl ClassPartition {
    /// Checks disjointness, nonemptiness and exhaustiveness.
    pub fn new(alphabet: Alphabet, classes: Vec<BTreeSet<Model>>) -> Result<Self> {
        let partition = Self { alphabet, classes };
        if let Some(problem) = partition.problem()? {
            return Err(Error::Invariant(problem));
        }
        Ok(partition)
    }

    fn problem(&self) -> Result<Option<String>> {
        let mut seen = BTreeSet::new();
        for (k, class) in self.classes.iter().enumerate() {
            if class.is_empty() {
                return Ok(Some(format!("class {} is empty", k + 1)));
            }
            for &m in class {
                self.alphabet.expect_model(m)?;
                if !seen.insert(m) {
                    return Ok(Some(format!("model {m} appears in two classes")));
                }
            }
        }
        if seen.len() != self.alphabet.model_count() {
            return Ok(Some(format!(
                "classes cover {} of {} models",
                seen.len(),
                self.alphabet.model_count()
            )));
        }
        Ok(None)
    }

    /// Whether the invariants hold; used by property tests.
    pub fn is_valid(&self) -> bool {
        matches!(self.problem(), Ok(None))
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn classes(&self) -> &[BTreeSet<Model>] {
        &self.classes
    }

    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    /// Bitstrings of each class, sorted, one class per entry.
    pub fn to_strings(&self) -> Vec<Vec<String>> {
        self.classes
            .iter()
            .map(|c| c.iter().map(Model::to_string).collect())
            .collect()
    }
}

fn class_input_check(o: &Order) -> Result<()> {
    o.alphabet().check_cap()?;
    if let Order::Explicit(e) = o {
        e.ensure_preorder()?;
    }
    Ok(())
}

/// The ordered equivalence classes of `o`.
///
/// Sorts the model space with the order's comparison and groups ties; on a connected preorder
/// this yields the same partition as repeatedly removing the minimal models
/// ([`classes_by_stripping`]).
pub fn classes_of(o: &Order) -> Result<ClassPartition> {
    class_input_check(o)?;
    let alphabet = o.alphabet().clone();
    let mut cmp = o.comparator()?;
    let mut models: Vec<Model> = alphabet.models()?.collect();
    models.sort_by(|&i, &j| match (cmp.leq(i, j), cmp.leq(j, i)) {
        (true, false) => std::cmp::Ordering::Less,
        (false, true) => std::cmp::Ordering::Greater,
        _ => std::cmp::Ordering::Equal,
    });
    let mut classes: Vec<BTreeSet<Model>> = Vec::new();
    let mut representative: Option<Model> = None;
    for m in models {
        match representative {
            Some(r) if cmp.leq(r, m) && cmp.leq(m, r) => {
                classes.last_mut().expect("class opened").insert(m);
            }
            _ => {
                classes.push(BTreeSet::from([m]));
                representative = Some(m);
            }
        }
    }
    Ok(ClassPartition { alphabet, classes })
}

/// Class extraction by repeatedly collecting the models below every remaining model.
///
/// Quadratic per class; kept as an independent route to cross-check [`classes_of`].
pub fn classes_by_stripping(o: &Order) -> Result<ClassPartition> {
    class_input_check(o)?;
    let alphabet = o.alphabet().clone();
    let mut cmp = o.comparator()?;
    let mut remaining: Vec<Model> = alphabet.models()?.collect();
    let mut classes = Vec::new();
    while !remaining.is_empty() {
        let (minimal, rest): (Vec<Model>, Vec<Model>) = remaining
            .iter()
            .partition(|&&i| remaining.iter().all(|&j| cmp.leq(i, j)));
        if minimal.is_empty() {
            return Err(Error::Invariant(
                "no minimal model among the remaining ones".into(),
            ));
        }
        classes.push(minimal.into_iter().collect());
        remaining = rest;
    }
    Ok(ClassPartition { alphabet, classes })
}

/// Whether `a` and `b` induce the same order, decided by comparing their class sequences.
pub fn equivalent(a: &Order, b: &Order) -> Result<bool> {
    a.alphabet().expect_same(b.alphabet())?;
    Ok(classes_of(a)? == classes_of(b)?)
}

/// Whether `a` and `b` agree on `I ≤ J` for every pair of models. Brute force over `4^n` pairs.
pub fn agree_pairwise(a: &Order, b: &Order) -> Result<bool> {
    a.alphabet().expect_same(b.alphabet())?;
    let models: Vec<Model> = a.alphabet().models()?.collect();
    let (mut ca, mut cb) = (a.comparator()?, b.comparator()?);
    Ok(models
        .iter()
        .all(|&i| models.iter().all(|&j| ca.leq(i, j) == cb.leq(i, j))))
}
