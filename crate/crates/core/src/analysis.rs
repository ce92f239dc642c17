//! Size accounting, class counting, and the lexicographic-to-level blowup experiment.

use std::collections::HashSet;
use std::time::Instant;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::formula::{Alphabet, Formula, Node, DEFAULT_CAP};
use crate::orders::{classes_of, Kind, LevelOrder, LexOrder, NaturalOrder, Order};
use crate::translate::lex_to_level;

/// Sizes of an order. The `size` of a formula-based order is its node count plus its formula
/// count.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SizeReport {
    pub kind: Kind,
    pub formulae: usize,
    pub nodes: usize,
    /// Number of stored pairs; zero unless explicit.
    pub pairs: usize,
    pub classes: usize,
}

impl SizeReport {
    pub fn size(&self) -> usize {
        self.nodes + self.formulae
    }
}

impl Serialize for Kind {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(self.name())
    }
}

/// Tree nodes plus formula count.
pub fn sequence_size(formulae: &[Formula]) -> usize {
    formulae.iter().map(Formula::size).sum::<usize>() + formulae.len()
}

pub fn size_report(o: &Order) -> Result<SizeReport> {
    let classes = classes_of(o)?.len();
    let formulae = o.formulae();
    let pairs = match o {
        Order::Explicit(e) => e.pairs().len(),
        _ => 0,
    };
    Ok(SizeReport {
        kind: o.kind(),
        formulae: formulae.len(),
        nodes: formulae.iter().map(Formula::size).sum(),
        pairs,
        classes,
    })
}

/// Storage actually held by a sequence whose formulae share subtrees.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SharedSize {
    /// Distinct nodes.
    pub nodes: usize,
    /// Distinct variable and constant occurrences.
    pub symbols: usize,
}

/// Counts every shared node once.
pub fn shared_size(formulae: &[Formula]) -> SharedSize {
    let mut seen = HashSet::new();
    let mut size = SharedSize {
        nodes: 0,
        symbols: 0,
    };
    let mut stack: Vec<&Formula> = formulae.iter().collect();
    while let Some(f) = stack.pop() {
        if !seen.insert(f.as_ptr()) {
            continue;
        }
        size.nodes += 1;
        match f.node() {
            Node::True | Node::False | Node::Var(_) => size.symbols += 1,
            Node::Not(g) => stack.push(g),
            Node::And(g, h) | Node::Or(g, h) | Node::Implies(g, h) | Node::Iff(g, h) => {
                stack.push(g);
                stack.push(h);
            }
        }
    }
    size
}

/// Orders whose class count is bounded by their formula count plus one.
pub trait ClassBounded {
    fn formula_count(&self) -> usize;
    fn to_order(&self) -> Order;
}

impl ClassBounded for LevelOrder {
    fn formula_count(&self) -> usize {
        self.levels().len()
    }

    fn to_order(&self) -> Order {
        self.clone().into()
    }
}

impl ClassBounded for NaturalOrder {
    fn formula_count(&self) -> usize {
        self.history().len()
    }

    fn to_order(&self) -> Order {
        self.clone().into()
    }
}

/// Whether the order has at most `m + 1` classes for `m` formulae. Always true; exposed as a
/// diagnostic.
pub fn class_bound_check<O: ClassBounded>(o: &O) -> Result<bool> {
    Ok(classes_of(&o.to_order())?.len() <= o.formula_count() + 1)
}

/// One row of [`blowup_experiment`].
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct BlowupRow {
    pub n: usize,
    /// Size of the lexicographic order `[x1, …, xn]`.
    pub lex_size: usize,
    pub classes: usize,
    /// Length of the pruned level translation.
    pub level_len: usize,
    /// Translation wall time; informational.
    pub millis: f64,
}

impl BlowupRow {
    /// `classes = 2^n` and `level_len ≥ 2^n − 1`.
    pub fn check(&self) -> Result<()> {
        let expected = 1usize << self.n;
        if self.classes != expected {
            return Err(Error::Invariant(format!(
                "n = {}: {} classes, expected {expected}",
                self.n, self.classes
            )));
        }
        if self.level_len + 1 < expected {
            return Err(Error::Invariant(format!(
                "n = {}: level translation has {} formulae, fewer than {}",
                self.n,
                self.level_len,
                expected - 1
            )));
        }
        Ok(())
    }
}

/// The lexicographic order `[x1, …, xn]`.
pub fn variable_chain(n: usize) -> Result<LexOrder> {
    let alphabet = Alphabet::new((1..=n).map(|i| format!("x{i}")))?;
    let history = (0..n).map(|i| Formula::var_at(&alphabet, i)).collect();
    LexOrder::new(alphabet, history)
}

/// For every `n` in `1..=max_n`: classes of `[x1, …, xn]` and the length of its pruned level
/// translation. Rows come back ordered by `n`.
pub fn blowup_experiment(max_n: usize) -> Result<Vec<BlowupRow>> {
    if max_n > DEFAULT_CAP {
        return Err(Error::CapExceeded {
            vars: max_n,
            cap: DEFAULT_CAP,
        });
    }
    (1..=max_n).map(blowup_row).collect()
}

pub fn blowup_row(n: usize) -> Result<BlowupRow> {
    let lex = variable_chain(n)?;
    let lex_size = sequence_size(lex.history());
    let classes = classes_of(&lex.clone().into())?.len();
    let start = Instant::now();
    let level = lex_to_level(&lex, true)?;
    let millis = start.elapsed().as_secs_f64() * 1e3;
    let row = BlowupRow {
        n,
        lex_size,
        classes,
        level_len: level.levels().len(),
        millis,
    };
    row.check()?;
    Ok(row)
}
