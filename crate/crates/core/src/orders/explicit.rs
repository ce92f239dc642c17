use std::collections::BTreeSet;
use std::fmt;

use crate::error::{Error, Result};
use crate::formula::{Alphabet, Model};

/// An order given as the set of pairs `⟨I,J⟩` with `I ≤ J`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExplicitOrder {
    alphabet: Alphabet,
    pairs: BTreeSet<(Model, Model)>,
    matrix: Option<Matrix>,
}

/// Largest alphabet whose pairs are also indexed as a dense bit matrix (8 MiB).
const DENSE_VARS: usize = 13;

/// Row `i` holds the models `j` with `⟨i,j⟩` present, indexed by [`Model::index`].
#[derive(Clone, Debug, PartialEq, Eq)]
struct Matrix {
    words: usize,
    bits: Vec<u64>,
}

impl Matrix {
    fn new(models: usize, pairs: &BTreeSet<(Model, Model)>) -> Self {
        let words = models.div_ceil(64);
        let mut bits = vec![0; models * words];
        for &(i, j) in pairs {
            bits[i.index() * words + j.index() / 64] |= 1 << (j.index() % 64);
        }
        Self { words, bits }
    }

    fn get(&self, i: Model, j: Model) -> bool {
        self.bits[i.index() * self.words + j.index() / 64] >> (j.index() % 64) & 1 == 1
    }

    fn row(&self, i: Model) -> &[u64] {
        &self.bits[i.index() * self.words..][..self.words]
    }
}

impl ExplicitOrder {
    /// Builds the order without checking the preorder axioms; see [`validate_explicit`].
    pub fn new<I>(alphabet: Alphabet, pairs: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Model, Model)>,
    {
        let pairs: BTreeSet<(Model, Model)> = pairs.into_iter().collect();
        for &(i, j) in &pairs {
            alphabet.expect_model(i)?;
            alphabet.expect_model(j)?;
        }
        let matrix =
            (alphabet.len() <= DENSE_VARS).then(|| Matrix::new(alphabet.model_count(), &pairs));
        Ok(Self {
            alphabet,
            pairs,
            matrix,
        })
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn pairs(&self) -> &BTreeSet<(Model, Model)> {
        &self.pairs
    }

    pub fn leq(&self, i: Model, j: Model) -> Result<bool> {
        self.alphabet.expect_model(i)?;
        self.alphabet.expect_model(j)?;
        Ok(self.contains(i, j))
    }

    pub(crate) fn contains(&self, i: Model, j: Model) -> bool {
        match &self.matrix {
            Some(matrix) => matrix.get(i, j),
            None => self.pairs.contains(&(i, j)),
        }
    }

    /// Fails with [`Error::NotPreorder`] unless the pairs form a connected preorder.
    pub fn ensure_preorder(&self) -> Result<()> {
        let violations = validate_explicit(self)?;
        if violations.is_empty() {
            Ok(())
        } else {
            Err(Error::NotPreorder(violations))
        }
    }
}

/// A failure of one of the connected-preorder axioms.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Violation {
    /// `⟨I,I⟩` is missing.
    Reflexivity(Model),
    /// `⟨I,J⟩` and `⟨J,H⟩` are present, `⟨I,H⟩` is not.
    Transitivity(Model, Model, Model),
    /// Neither `⟨I,J⟩` nor `⟨J,I⟩` is present.
    Connectedness(Model, Model),
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::Reflexivity(i) => write!(f, "reflexivity fails at {i}"),
            Violation::Transitivity(i, j, h) => {
                write!(f, "transitivity fails at {i} <= {j} <= {h}")
            }
            Violation::Connectedness(i, j) => write!(f, "{i} and {j} are incomparable"),
        }
    }
}

/// Every reflexivity, transitivity and connectedness violation of the order.
///
/// Connectedness violations are reported once per unordered pair, with the smaller model first.
pub fn validate_explicit(o: &ExplicitOrder) -> Result<Vec<Violation>> {
    validate(o, o.matrix.as_ref())
}

fn validate(o: &ExplicitOrder, matrix: Option<&Matrix>) -> Result<Vec<Violation>> {
    let models: Vec<Model> = o.alphabet.models()?.collect();
    let mut violations = Vec::new();
    for &i in &models {
        if !o.contains(i, i) {
            violations.push(Violation::Reflexivity(i));
        }
    }
    for (a, &i) in models.iter().enumerate() {
        for &j in &models[a + 1..] {
            if !o.contains(i, j) && !o.contains(j, i) {
                let (lo, hi) = if i < j { (i, j) } else { (j, i) };
                violations.push(Violation::Connectedness(lo, hi));
            }
        }
    }
    if let Some(matrix) = matrix {
        let mut ordered = models.clone();
        ordered.sort();
        for &(i, j) in &o.pairs {
            let (above_i, above_j) = (matrix.row(i), matrix.row(j));
            if above_j.iter().zip(above_i).all(|(&bj, &bi)| bj & !bi == 0) {
                continue;
            }
            for &h in &ordered {
                if matrix.get(j, h) && !matrix.get(i, h) {
                    violations.push(Violation::Transitivity(i, j, h));
                }
            }
        }
        return Ok(violations);
    }
    for &(i, j) in &o.pairs {
        let successors = o.pairs.range((j, Model::from_bits(0, j.width()))..);
        for &(_, h) in successors.take_while(|(first, _)| *first == j) {
            if !o.contains(i, h) {
                violations.push(Violation::Transitivity(i, j, h));
            }
        }
    }
    Ok(violations)
}
