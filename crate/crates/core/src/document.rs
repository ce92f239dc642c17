//! The line-oriented order file format.
//!
//! ```text
//! doxastic v1
//! kind: lexicographic
//! vars: a b
//! formula: a
//! formula: b
//! ```
//!
//! Formula lines list `S_1` first. Explicit orders use `pair: <I> <J>` lines, meaning `I ≤ J`,
//! with models written as bitstrings in variable order. `#` starts a comment; blank lines are
//! ignored.

use std::fmt::Write as _;
use std::path::Path;

use crate::error::{Error, Result};
use crate::formula::{parse, Alphabet, Formula, Model};
use crate::orders::{ExplicitOrder, Kind, LevelOrder, LexOrder, NaturalOrder, Order};

pub const HEADER: &str = "doxastic v1";

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Body {
    Formulae(Vec<Formula>),
    Pairs(Vec<(Model, Model)>),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrderDocument {
    pub kind: Kind,
    pub alphabet: Alphabet,
    pub body: Body,
}

/// A non-blank line with comments removed, and where its content starts.
struct Line<'a> {
    number: usize,
    indent: usize,
    text: &'a str,
}

fn content_lines(source: &str) -> impl Iterator<Item = Line<'_>> {
    source.lines().enumerate().filter_map(|(k, raw)| {
        let uncommented = raw.split('#').next().unwrap_or("");
        let text = uncommented.trim();
        if text.is_empty() {
            return None;
        }
        let indent = uncommented.len() - uncommented.trim_start().len();
        Some(Line {
            number: k + 1,
            indent,
            text,
        })
    })
}

fn doc_error(line: &Line<'_>, offset: usize, message: impl Into<String>) -> Error {
    Error::Document {
        line: line.number,
        column: line.indent + offset + 1,
        message: message.into(),
    }
}

/// Splits `key: value`, returning the value and its offset within the line.
fn field<'a>(line: &Line<'a>, key: &str) -> Result<(&'a str, usize)> {
    let rest = line
        .text
        .strip_prefix(key)
        .and_then(|r| r.strip_prefix(':'))
        .ok_or_else(|| doc_error(line, 0, format!("expected `{key}:`")))?;
    let value = rest.trim_start();
    Ok((value, line.text.len() - value.len()))
}

fn parse_model_at(
    line: &Line<'_>,
    offset: usize,
    text: &str,
    alphabet: &Alphabet,
) -> Result<Model> {
    alphabet
        .parse_model(text)
        .map_err(|e| doc_error(line, offset, e.to_string()))
}

impl OrderDocument {
    pub fn parse(source: &str) -> Result<Self> {
        let mut lines = content_lines(source);
        let end_of_input = |what: &str| Error::Document {
            line: source.lines().count().max(1),
            column: 1,
            message: format!("missing {what}"),
        };

        let header = lines
            .next()
            .ok_or_else(|| end_of_input("`doxastic v1` header"))?;
        if header.text.split_whitespace().collect::<Vec<_>>() != ["doxastic", "v1"] {
            return Err(doc_error(&header, 0, format!("expected `{HEADER}`")));
        }

        let kind_line = lines.next().ok_or_else(|| end_of_input("`kind:` line"))?;
        let (kind_text, offset) = field(&kind_line, "kind")?;
        let kind: Kind = kind_text
            .parse()
            .map_err(|e: String| doc_error(&kind_line, offset, e))?;

        let vars_line = lines.next().ok_or_else(|| end_of_input("`vars:` line"))?;
        let (vars_text, offset) = field(&vars_line, "vars")?;
        let alphabet = Alphabet::new(vars_text.split_whitespace())
            .map_err(|e| doc_error(&vars_line, offset, e.to_string()))?;

        let body = match kind {
            Kind::Explicit => {
                let mut pairs = Vec::new();
                for line in lines {
                    let (value, offset) = field(&line, "pair")?;
                    let parts: Vec<&str> = value.split_whitespace().collect();
                    let [i, j] = parts[..] else {
                        return Err(doc_error(&line, offset, "expected two models"));
                    };
                    let j_offset = offset + value.rfind(j).unwrap_or(0);
                    pairs.push((
                        parse_model_at(&line, offset, i, &alphabet)?,
                        parse_model_at(&line, j_offset, j, &alphabet)?,
                    ));
                }
                Body::Pairs(pairs)
            }
            _ => {
                let mut formulae = Vec::new();
                for line in lines {
                    let (value, offset) = field(&line, "formula")?;
                    let formula = parse(value, &alphabet).map_err(|e| match e {
                        Error::Syntax { column, message } => {
                            doc_error(&line, offset + column - 1, message)
                        }
                        other => doc_error(&line, offset, other.to_string()),
                    })?;
                    formulae.push(formula);
                }
                Body::Formulae(formulae)
            }
        };
        Ok(Self {
            kind,
            alphabet,
            body,
        })
    }

    /// Canonical text: no comments, one space after each colon, pairs in model order.
    pub fn serialize(&self) -> String {
        let mut out = String::new();
        out.push_str(HEADER);
        out.push('\n');
        let _ = writeln!(out, "kind: {}", self.kind);
        if self.alphabet.is_empty() {
            out.push_str("vars:\n");
        } else {
            let _ = writeln!(out, "vars: {}", self.alphabet);
        }
        match &self.body {
            Body::Formulae(fs) => {
                for f in fs {
                    let _ = writeln!(out, "formula: {f}");
                }
            }
            Body::Pairs(pairs) => {
                let mut sorted = pairs.clone();
                sorted.sort();
                sorted.dedup();
                for (i, j) in sorted {
                    let _ = writeln!(out, "pair: {i} {j}");
                }
            }
        }
        out
    }

    pub fn from_order(o: &Order) -> Self {
        let body = match o {
            Order::Explicit(e) => Body::Pairs(e.pairs().iter().copied().collect()),
            other => Body::Formulae(other.formulae().to_vec()),
        };
        Self {
            kind: o.kind(),
            alphabet: o.alphabet().clone(),
            body,
        }
    }

    /// Builds the order. Explicit orders are checked against the preorder axioms when `validate`.
    pub fn into_order(self, validate: bool) -> Result<Order> {
        let Self {
            kind,
            alphabet,
            body,
        } = self;
        Ok(match (kind, body) {
            (Kind::Explicit, Body::Pairs(pairs)) => {
                let o = ExplicitOrder::new(alphabet, pairs)?;
                if validate {
                    o.ensure_preorder()?;
                }
                o.into()
            }
            (Kind::Level, Body::Formulae(fs)) => LevelOrder::new(alphabet, fs)?.into(),
            (Kind::Lexicographic, Body::Formulae(fs)) => LexOrder::new(alphabet, fs)?.into(),
            (Kind::Natural, Body::Formulae(fs)) => NaturalOrder::new(alphabet, fs)?.into(),
            (kind, _) => {
                return Err(Error::Document {
                    line: 2,
                    column: 1,
                    message: format!("body does not match kind `{kind}`"),
                })
            }
        })
    }
}

/// Reads and builds an order. `cap` replaces the enumeration cap of the declared alphabet.
pub fn load(path: &Path, cap: usize, validate: bool) -> std::result::Result<Order, LoadError> {
    let source =
        std::fs::read_to_string(path).map_err(|e| LoadError::Io(path.display().to_string(), e))?;
    let mut doc = OrderDocument::parse(&source)?;
    doc.alphabet = doc.alphabet.with_cap(cap);
    Ok(doc.into_order(validate)?)
}

#[derive(Debug, thiserror::Error)]
pub enum LoadError {
    #[error("cannot read {0}: {1}")]
    Io(String, std::io::Error),
    #[error(transparent)]
    Order(#[from] Error),
}
