use std::collections::HashMap;

use crate::error::Result;
use crate::formula::{Formula, Model};

use super::NaturalOrder;

/// Evaluates the natural order by its recursive definition.
///
/// `I ≤_S J` holds when `S` is empty, or `I` is a minimal model of `S_1` under the tail order
/// `R`, or `I ≤_R J` while `J` is not such a minimal model. Minimality of a model with respect to
/// a history suffix is memoized per evaluator, keyed by suffix position and model.
pub struct NaturalEvaluator<'a> {
    history: &'a [Formula],
    models: Vec<Model>,
    satisfying: Vec<Option<Vec<Model>>>,
    minimal: HashMap<(usize, Model), bool>,
}

impl<'a> NaturalEvaluator<'a> {
    pub fn new(order: &'a NaturalOrder) -> Result<Self> {
        let models = order.alphabet().models()?.collect();
        Ok(Self {
            history: order.history(),
            models,
            satisfying: vec![None; order.history().len()],
            minimal: HashMap::new(),
        })
    }

    pub fn leq(&mut self, i: Model, j: Model) -> bool {
        self.leq_from(0, i, j)
    }

    fn leq_from(&mut self, pos: usize, i: Model, j: Model) -> bool {
        if pos == self.history.len() {
            return true;
        }
        if self.is_minimal(pos, i) {
            return true;
        }
        self.leq_from(pos + 1, i, j) && !self.is_minimal(pos, j)
    }

    /// `x ∈ Mod(S_pos)` and `∀K ∈ Mod(S_pos) . x ≤_R K`, where `R` is the suffix after `pos`.
    fn is_minimal(&mut self, pos: usize, x: Model) -> bool {
        if let Some(&cached) = self.minimal.get(&(pos, x)) {
            return cached;
        }
        let result = self.history[pos].eval(x) && {
            let satisfying = self.satisfying_models(pos);
            satisfying.iter().all(|&k| self.leq_from(pos + 1, x, k))
        };
        self.minimal.insert((pos, x), result);
        result
    }

    fn satisfying_models(&mut self, pos: usize) -> Vec<Model> {
        if let Some(ms) = &self.satisfying[pos] {
            return ms.clone();
        }
        let f = &self.history[pos];
        let ms: Vec<Model> = self.models.iter().copied().filter(|&m| f.eval(m)).collect();
        self.satisfying[pos] = Some(ms.clone());
        ms
    }
}
