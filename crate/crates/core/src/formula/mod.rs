//! Propositional formulae over a fixed [`Alphabet`], their models, and the text syntax.
//!
//! Subformulae are reference counted, so a formula reused in several places of a translated
//! order is stored once.

mod alphabet;
mod parser;

use std::collections::BTreeSet;
use std::fmt;
use std::sync::Arc;

pub use alphabet::{Alphabet, Model, DEFAULT_CAP, MAX_WIDTH};
pub use parser::parse;

use crate::error::{Error, Result};

/// A variable occurrence: the name together with its position in the alphabet.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Var {
    index: usize,
    name: Arc<str>,
}

impl Var {
    pub fn index(&self) -> usize {
        self.index
    }

    pub fn name(&self) -> &str {
        &self.name
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Node {
    True,
    False,
    Var(Var),
    Not(Formula),
    And(Formula, Formula),
    Or(Formula, Formula),
    Implies(Formula, Formula),
    Iff(Formula, Formula),
}

/// A propositional formula. Cloning is cheap and shares the tree.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Formula(Arc<Node>);

impl Formula {
    pub fn new(node: Node) -> Self {
        Self(Arc::new(node))
    }

    pub fn truth() -> Self {
        Self::new(Node::True)
    }

    pub fn falsity() -> Self {
        Self::new(Node::False)
    }

    pub fn var(alphabet: &Alphabet, name: &str) -> Result<Self> {
        let index = alphabet
            .index_of(name)
            .ok_or_else(|| Error::UndeclaredVariable(name.to_string()))?;
        Ok(Self::var_at(alphabet, index))
    }

    /// The `index`-th variable of `alphabet`. Panics when out of range.
    pub fn var_at(alphabet: &Alphabet, index: usize) -> Self {
        Self::new(Node::Var(Var {
            index,
            name: alphabet.vars()[index].as_str().into(),
        }))
    }

    #[allow(clippy::should_implement_trait)]
    pub fn not(f: Formula) -> Self {
        Self::new(Node::Not(f))
    }

    pub fn and(f: Formula, g: Formula) -> Self {
        Self::new(Node::And(f, g))
    }

    pub fn or(f: Formula, g: Formula) -> Self {
        Self::new(Node::Or(f, g))
    }

    pub fn implies(f: Formula, g: Formula) -> Self {
        Self::new(Node::Implies(f, g))
    }

    pub fn iff(f: Formula, g: Formula) -> Self {
        Self::new(Node::Iff(f, g))
    }

    /// Left-nested conjunction; `true` when empty.
    pub fn conjunction<I: IntoIterator<Item = Formula>>(fs: I) -> Self {
        fs.into_iter().reduce(Self::and).unwrap_or_else(Self::truth)
    }

    /// Left-nested disjunction; `false` when empty.
    pub fn disjunction<I: IntoIterator<Item = Formula>>(fs: I) -> Self {
        fs.into_iter()
            .reduce(Self::or)
            .unwrap_or_else(Self::falsity)
    }

    pub fn node(&self) -> &Node {
        &self.0
    }

    /// Identity of the shared node, used for measuring shared storage.
    pub(crate) fn as_ptr(&self) -> *const Node {
        Arc::as_ptr(&self.0)
    }

    pub fn eval(&self, m: Model) -> bool {
        match self.node() {
            Node::True => true,
            Node::False => false,
            Node::Var(v) => m.get(v.index),
            Node::Not(f) => !f.eval(m),
            Node::And(f, g) => f.eval(m) && g.eval(m),
            Node::Or(f, g) => f.eval(m) || g.eval(m),
            Node::Implies(f, g) => !f.eval(m) || g.eval(m),
            Node::Iff(f, g) => f.eval(m) == g.eval(m),
        }
    }

    /// Number of syntax-tree nodes, counting shared subtrees once per occurrence.
    pub fn size(&self) -> usize {
        match self.node() {
            Node::True | Node::False | Node::Var(_) => 1,
            Node::Not(f) => 1 + f.size(),
            Node::And(f, g) | Node::Or(f, g) | Node::Implies(f, g) | Node::Iff(f, g) => {
                1 + f.size() + g.size()
            }
        }
    }

    /// Variables occurring in the formula, by alphabet index.
    pub fn variables(&self) -> BTreeSet<usize> {
        let mut out = BTreeSet::new();
        self.collect_vars(&mut out);
        out
    }

    fn collect_vars(&self, out: &mut BTreeSet<usize>) {
        match self.node() {
            Node::True | Node::False => {}
            Node::Var(v) => {
                out.insert(v.index);
            }
            Node::Not(f) => f.collect_vars(out),
            Node::And(f, g) | Node::Or(f, g) | Node::Implies(f, g) | Node::Iff(f, g) => {
                f.collect_vars(out);
                g.collect_vars(out);
            }
        }
    }

    /// Fails unless every variable of the formula is the same-named variable of `alphabet`.
    pub fn check_alphabet(&self, alphabet: &Alphabet) -> Result<()> {
        match self.node() {
            Node::True | Node::False => Ok(()),
            Node::Var(v) => match alphabet.vars().get(v.index) {
                Some(name) if name.as_str() == v.name() => Ok(()),
                _ => Err(Error::UndeclaredVariable(v.name().to_string())),
            },
            Node::Not(f) => f.check_alphabet(alphabet),
            Node::And(f, g) | Node::Or(f, g) | Node::Implies(f, g) | Node::Iff(f, g) => {
                f.check_alphabet(alphabet)?;
                g.check_alphabet(alphabet)
            }
        }
    }

    /// Constant folding and double-negation elimination. Never applied implicitly.
    pub fn simplify(&self) -> Formula {
        use Node::*;
        let constant = |f: &Formula| match f.node() {
            True => Some(true),
            False => Some(false),
            _ => None,
        };
        let lift = |b: bool| {
            if b {
                Formula::truth()
            } else {
                Formula::falsity()
            }
        };
        match self.node() {
            True | False | Var(_) => self.clone(),
            Not(f) => {
                let f = f.simplify();
                match f.node() {
                    True => Formula::falsity(),
                    False => Formula::truth(),
                    Not(inner) => inner.clone(),
                    _ => Formula::not(f),
                }
            }
            And(f, g) => {
                let (f, g) = (f.simplify(), g.simplify());
                match (constant(&f), constant(&g)) {
                    (Some(false), _) | (_, Some(false)) => Formula::falsity(),
                    (Some(true), _) => g,
                    (_, Some(true)) => f,
                    _ => Formula::and(f, g),
                }
            }
            Or(f, g) => {
                let (f, g) = (f.simplify(), g.simplify());
                match (constant(&f), constant(&g)) {
                    (Some(true), _) | (_, Some(true)) => Formula::truth(),
                    (Some(false), _) => g,
                    (_, Some(false)) => f,
                    _ => Formula::or(f, g),
                }
            }
            Implies(f, g) => {
                let (f, g) = (f.simplify(), g.simplify());
                match (constant(&f), constant(&g)) {
                    (Some(false), _) | (_, Some(true)) => Formula::truth(),
                    (Some(true), _) => g,
                    (_, Some(false)) => Formula::not(f).simplify(),
                    _ => Formula::implies(f, g),
                }
            }
            Iff(f, g) => {
                let (f, g) = (f.simplify(), g.simplify());
                match (constant(&f), constant(&g)) {
                    (Some(a), Some(b)) => lift(a == b),
                    (Some(true), None) => g,
                    (None, Some(true)) => f,
                    (Some(false), None) => Formula::not(g).simplify(),
                    (None, Some(false)) => Formula::not(f).simplify(),
                    _ => Formula::iff(f, g),
                }
            }
        }
    }

    fn precedence(&self) -> u8 {
        match self.node() {
            Node::Iff(..) => 1,
            Node::Implies(..) => 2,
            Node::Or(..) => 3,
            Node::And(..) => 4,
            Node::Not(_) => 5,
            Node::True | Node::False | Node::Var(_) => 6,
        }
    }

    fn fmt_child(&self, f: &mut fmt::Formatter<'_>, parens: bool) -> fmt::Result {
        if parens {
            write!(f, "({self})")
        } else {
            write!(f, "{self}")
        }
    }

    fn fmt_binary(
        &self,
        f: &mut fmt::Formatter<'_>,
        op: &str,
        lhs: &Formula,
        rhs: &Formula,
        right_assoc: bool,
    ) -> fmt::Result {
        let p = self.precedence();
        let (lp, rp) = (lhs.precedence(), rhs.precedence());
        let (left_parens, right_parens) = if right_assoc {
            (lp <= p, rp < p)
        } else {
            (lp < p, rp <= p)
        };
        lhs.fmt_child(f, left_parens)?;
        write!(f, " {op} ")?;
        rhs.fmt_child(f, right_parens)
    }
}

/// Canonical text form, accepted back by [`parse`].
impl fmt::Display for Formula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.node() {
            Node::True => f.write_str("true"),
            Node::False => f.write_str("false"),
            Node::Var(v) => f.write_str(v.name()),
            Node::Not(g) => {
                f.write_str("!")?;
                g.fmt_child(f, g.precedence() < self.precedence())
            }
            Node::And(l, r) => self.fmt_binary(f, "&", l, r, false),
            Node::Or(l, r) => self.fmt_binary(f, "|", l, r, false),
            Node::Implies(l, r) => self.fmt_binary(f, "->", l, r, true),
            Node::Iff(l, r) => self.fmt_binary(f, "<->", l, r, false),
        }
    }
}

impl fmt::Debug for Formula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Formula({self})")
    }
}

/// All models of `f`, by exhaustive enumeration.
pub fn models_of(f: &Formula, alphabet: &Alphabet) -> Result<BTreeSet<Model>> {
    Ok(alphabet.models()?.filter(|&m| f.eval(m)).collect())
}

/// Whether `f` has a model; stops at the first one found.
pub fn is_consistent(f: &Formula, alphabet: &Alphabet) -> Result<bool> {
    Ok(alphabet.models()?.any(|m| f.eval(m)))
}

/// The conjunction of literals satisfied exactly by `m`.
pub fn minterm(m: Model, alphabet: &Alphabet) -> Formula {
    Formula::conjunction((0..alphabet.len()).map(|i| {
        let v = Formula::var_at(alphabet, i);
        if m.get(i) {
            v
        } else {
            Formula::not(v)
        }
    }))
}

/// A disjunction of minterms whose models are exactly `models`; `false` for the empty set.
pub fn formula_from_models<'a, I>(models: I, alphabet: &Alphabet) -> Formula
where
    I: IntoIterator<Item = &'a Model>,
{
    Formula::disjunction(models.into_iter().map(|&m| minterm(m, alphabet)))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ab() -> Alphabet {
        Alphabet::new(["a", "b"]).unwrap()
    }

    fn model_strings(ms: &BTreeSet<Model>) -> Vec<String> {
        ms.iter().map(Model::to_string).collect()
    }

    #[test]
    fn eval_truth_table() {
        let alphabet = ab();
        let f = parse("a | b", &alphabet).unwrap();
        assert!(f.eval(alphabet.parse_model("10").unwrap()));
        assert!(!f.eval(alphabet.parse_model("00").unwrap()));
        let t = Formula::truth();
        assert!(alphabet.models().unwrap().all(|m| t.eval(m)));
    }

    #[test]
    fn models_of_examples() {
        let alphabet = ab();
        let f = parse("a & !b", &alphabet).unwrap();
        assert_eq!(model_strings(&models_of(&f, &alphabet).unwrap()), ["10"]);

        let a = Alphabet::new(["a"]).unwrap();
        let t = Formula::truth();
        assert_eq!(model_strings(&models_of(&t, &a).unwrap()), ["0", "1"]);
        let contradiction = parse("a & !a", &a).unwrap();
        assert!(models_of(&contradiction, &a).unwrap().is_empty());
    }

    #[test]
    fn consistency_examples() {
        let alphabet = ab();
        for (text, expected) in [("a & !a", false), ("a | b", true), ("!(a -> a)", false)] {
            let f = parse(text, &alphabet).unwrap();
            assert_eq!(is_consistent(&f, &alphabet).unwrap(), expected, "{text}");
        }
    }

    #[test]
    fn formula_from_models_examples() {
        let alphabet = ab();
        assert_eq!(
            formula_from_models(&BTreeSet::new(), &alphabet),
            Formula::falsity()
        );

        let single: BTreeSet<Model> = [alphabet.parse_model("10").unwrap()].into();
        let f = formula_from_models(&single, &alphabet);
        assert_eq!(f.to_string(), "a & !b");

        let all: BTreeSet<Model> = alphabet.models().unwrap().collect();
        let f = formula_from_models(&all, &alphabet);
        assert_eq!(models_of(&f, &alphabet).unwrap(), all);
    }

    #[test]
    fn enumeration_respects_cap() {
        let alphabet = ab().with_cap(1);
        let f = Formula::truth();
        assert!(matches!(
            models_of(&f, &alphabet),
            Err(Error::CapExceeded { .. })
        ));
        assert!(matches!(
            is_consistent(&f, &alphabet),
            Err(Error::CapExceeded { .. })
        ));
    }

    #[test]
    fn render_minimal_parentheses() {
        let alphabet = Alphabet::new(["a", "b", "c"]).unwrap();
        for text in [
            "!a & b -> c",
            "a -> b -> c",
            "(a -> b) -> c",
            "a & (b | c)",
            "a | b | c",
            "a | (b | c)",
            "!(a & b)",
            "!!a",
            "a <-> b <-> c",
            "a <-> (b <-> c)",
            "(a <-> b) -> c",
        ] {
            let f = parse(text, &alphabet).unwrap();
            assert_eq!(f.to_string(), text);
        }
    }

    #[test]
    fn check_alphabet_detects_foreign_variables() {
        let f = parse("a & b", &ab()).unwrap();
        assert!(f.check_alphabet(&ab()).is_ok());
        let ba = Alphabet::new(["b", "a"]).unwrap();
        assert!(f.check_alphabet(&ba).is_err());
        let only_a = Alphabet::new(["a"]).unwrap();
        assert_eq!(
            f.check_alphabet(&only_a),
            Err(Error::UndeclaredVariable("b".into()))
        );
    }

    #[test]
    fn simplify_folds_constants() {
        let alphabet = ab();
        let f = parse("!!a & true", &alphabet).unwrap();
        assert_eq!(f.simplify().to_string(), "a");
        let g = parse("(a | false) -> false", &alphabet).unwrap();
        assert_eq!(g.simplify().to_string(), "!a");
        let h = parse("b <-> true", &alphabet).unwrap();
        assert_eq!(h.simplify().to_string(), "b");
    }

    #[test]
    fn sizes_count_tree_nodes() {
        let alphabet = ab();
        assert_eq!(parse("a | b", &alphabet).unwrap().size(), 3);
        assert_eq!(parse("!a", &alphabet).unwrap().size(), 2);
        assert_eq!(Formula::truth().size(), 1);
    }
}
