use std::cmp::Ordering;
use std::collections::HashSet;
use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};

/// Default bound on the number of variables for operations that enumerate the model space.
pub const DEFAULT_CAP: usize = 20;

/// Hard width limit imposed by the packed model representation.
pub const MAX_WIDTH: usize = 63;

/// An ordered list of distinct propositional variables.
///
/// The order fixes the model space: position `i` of every [`Model`] is the value of `vars[i]`.
/// Equality only looks at the variables, never at the cap.
#[derive(Clone, Debug)]
pub struct Alphabet {
    vars: Arc<[String]>,
    cap: usize,
}

impl Alphabet {
    pub fn new<I, S>(vars: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let vars: Vec<String> = vars.into_iter().map(Into::into).collect();
        let mut seen = HashSet::new();
        for v in &vars {
            if !is_identifier(v) {
                return Err(Error::InvalidAlphabet(format!(
                    "`{v}` is not a variable name"
                )));
            }
            if !seen.insert(v.as_str()) {
                return Err(Error::InvalidAlphabet(format!("duplicate variable `{v}`")));
            }
        }
        if vars.len() > MAX_WIDTH {
            return Err(Error::InvalidAlphabet(format!(
                "{} variables exceed the supported width of {MAX_WIDTH}",
                vars.len()
            )));
        }
        Ok(Self {
            vars: vars.into(),
            cap: DEFAULT_CAP,
        })
    }

    /// Replaces the enumeration cap.
    pub fn with_cap(mut self, cap: usize) -> Self {
        self.cap = cap;
        self
    }

    pub fn cap(&self) -> usize {
        self.cap
    }

    pub fn len(&self) -> usize {
        self.vars.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vars.is_empty()
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.vars.iter().position(|v| v == name)
    }

    /// Fails unless the model space of this alphabet may be enumerated.
    pub fn check_cap(&self) -> Result<()> {
        if self.len() > self.cap {
            return Err(Error::CapExceeded {
                vars: self.len(),
                cap: self.cap,
            });
        }
        Ok(())
    }

    /// Number of models, `2^n`.
    pub fn model_count(&self) -> usize {
        1usize << self.len()
    }

    /// Every model of the alphabet, in index order. Subject to the cap.
    pub fn models(&self) -> Result<impl Iterator<Item = Model> + Clone> {
        self.check_cap()?;
        let width = self.len() as u8;
        Ok((0..self.model_count() as u64).map(move |bits| Model { bits, width }))
    }

    /// Parses a bitstring in variable order.
    pub fn parse_model(&self, text: &str) -> Result<Model> {
        let model: Model = text.parse()?;
        if model.width() != self.len() {
            return Err(Error::InvalidModel {
                text: text.to_string(),
                message: format!("expected {} bits, found {}", self.len(), model.width()),
            });
        }
        Ok(model)
    }

    /// Fails with [`Error::AlphabetMismatch`] unless both alphabets declare the same variables.
    pub fn expect_same(&self, other: &Alphabet) -> Result<()> {
        if self != other {
            return Err(Error::AlphabetMismatch {
                left: self.vars.join(" "),
                right: other.vars.join(" "),
            });
        }
        Ok(())
    }

    pub(crate) fn expect_model(&self, m: Model) -> Result<()> {
        if m.width() != self.len() {
            return Err(Error::AlphabetMismatch {
                left: self.vars.join(" "),
                right: format!("model {m} of width {}", m.width()),
            });
        }
        Ok(())
    }
}

impl PartialEq for Alphabet {
    fn eq(&self, other: &Self) -> bool {
        self.vars == other.vars
    }
}

impl Eq for Alphabet {}

impl fmt::Display for Alphabet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.vars.join(" "))
    }
}

pub(crate) fn is_identifier(s: &str) -> bool {
    let mut chars = s.chars();
    match chars.next() {
        Some(c) if c.is_ascii_alphabetic() || c == '_' => {}
        _ => return false,
    }
    chars.all(|c| c.is_ascii_alphanumeric() || c == '_') && s != "true" && s != "false"
}

/// A total truth assignment, packed as bits: bit `i` is the value of the `i`-th variable.
///
/// Models order as their bitstrings do, so `"01" < "10"`.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Model {
    bits: u64,
    width: u8,
}

impl Model {
    pub fn from_bits(bits: u64, width: usize) -> Self {
        debug_assert!(width <= MAX_WIDTH);
        let mask = if width == 0 {
            0
        } else {
            u64::MAX >> (64 - width)
        };
        Self {
            bits: bits & mask,
            width: width as u8,
        }
    }

    pub fn from_values(values: &[bool]) -> Self {
        let bits = values
            .iter()
            .enumerate()
            .fold(0u64, |acc, (i, &v)| acc | ((v as u64) << i));
        Self::from_bits(bits, values.len())
    }

    pub fn bits(self) -> u64 {
        self.bits
    }

    /// Position in the enumeration order of [`Alphabet::models`].
    pub fn index(self) -> usize {
        self.bits as usize
    }

    pub fn width(self) -> usize {
        self.width as usize
    }

    pub fn get(self, var: usize) -> bool {
        (self.bits >> var) & 1 == 1
    }

    fn sort_key(self) -> u64 {
        if self.width == 0 {
            0
        } else {
            self.bits.reverse_bits() >> (64 - self.width as u32)
        }
    }
}

impl Ord for Model {
    fn cmp(&self, other: &Self) -> Ordering {
        self.width
            .cmp(&other.width)
            .then_with(|| self.sort_key().cmp(&other.sort_key()))
    }
}

impl PartialOrd for Model {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Model {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.width() {
            f.write_str(if self.get(i) { "1" } else { "0" })?;
        }
        Ok(())
    }
}

impl fmt::Debug for Model {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Model({self})")
    }
}

impl std::str::FromStr for Model {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        let invalid = |message: &str| Error::InvalidModel {
            text: text.to_string(),
            message: message.to_string(),
        };
        if text.len() > MAX_WIDTH {
            return Err(invalid("too many bits"));
        }
        let values = text
            .chars()
            .map(|c| match c {
                '0' => Ok(false),
                '1' => Ok(true),
                _ => Err(invalid("models are bitstrings of 0 and 1")),
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Self::from_values(&values))
    }
}
