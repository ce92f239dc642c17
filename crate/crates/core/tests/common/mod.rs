#![allow(dead_code)]

use doxastic::formula::Node;
use doxastic::orders::{ExplicitOrder, LevelOrder, LexOrder, NaturalOrder, Order};
use doxastic::{Alphabet, Formula, Model};
use rand::seq::SliceRandom;
use rand::Rng;

pub const NAMES: [&str; 8] = ["a", "b", "c", "d", "e", "f", "g", "h"];

pub fn alphabet(n: usize) -> Alphabet {
    Alphabet::new(NAMES[..n].iter().copied()).unwrap()
}

/// Random formula of depth at most `depth` using every connective.
pub fn random_formula<R: Rng>(rng: &mut R, alphabet: &Alphabet, depth: usize) -> Formula {
    let leaf = depth == 0 || rng.gen_bool(0.3);
    if leaf {
        return match rng.gen_range(0..10) {
            0 => Formula::truth(),
            1 => Formula::falsity(),
            _ if alphabet.is_empty() => Formula::truth(),
            _ => Formula::var_at(alphabet, rng.gen_range(0..alphabet.len())),
        };
    }
    let sub = |rng: &mut R| random_formula(rng, alphabet, depth - 1);
    match rng.gen_range(0..9) {
        0 | 1 => Formula::not(sub(rng)),
        2 | 3 => Formula::and(sub(rng), sub(rng)),
        4 | 5 => Formula::or(sub(rng), sub(rng)),
        6 | 7 => Formula::implies(sub(rng), sub(rng)),
        _ => Formula::iff(sub(rng), sub(rng)),
    }
}

pub fn random_formulae<R: Rng>(
    rng: &mut R,
    alphabet: &Alphabet,
    len: usize,
    depth: usize,
) -> Vec<Formula> {
    (0..len)
        .map(|_| random_formula(rng, alphabet, depth))
        .collect()
}

/// Explicit order from a random ranking of the models.
pub fn random_explicit<R: Rng>(rng: &mut R, alphabet: &Alphabet) -> ExplicitOrder {
    let models: Vec<Model> = alphabet.models().unwrap().collect();
    let ranks = rng.gen_range(1..=models.len());
    let rank: Vec<usize> = models.iter().map(|_| rng.gen_range(0..ranks)).collect();
    let mut pairs = Vec::new();
    for (a, &i) in models.iter().enumerate() {
        for (b, &j) in models.iter().enumerate() {
            if rank[a] <= rank[b] {
                pairs.push((i, j));
            }
        }
    }
    pairs.shuffle(rng);
    ExplicitOrder::new(alphabet.clone(), pairs).unwrap()
}

pub fn random_level<R: Rng>(
    rng: &mut R,
    alphabet: &Alphabet,
    len: usize,
    depth: usize,
) -> LevelOrder {
    LevelOrder::new(alphabet.clone(), random_formulae(rng, alphabet, len, depth)).unwrap()
}

pub fn random_lex<R: Rng>(rng: &mut R, alphabet: &Alphabet, len: usize, depth: usize) -> LexOrder {
    LexOrder::new(alphabet.clone(), random_formulae(rng, alphabet, len, depth)).unwrap()
}

pub fn random_natural<R: Rng>(
    rng: &mut R,
    alphabet: &Alphabet,
    len: usize,
    depth: usize,
) -> NaturalOrder {
    NaturalOrder::new(alphabet.clone(), random_formulae(rng, alphabet, len, depth)).unwrap()
}

pub fn models(alphabet: &Alphabet) -> Vec<Model> {
    alphabet.models().unwrap().collect()
}

/// Reflexivity, transitivity and connectedness over the whole model space.
pub fn preorder_failure(o: &Order) -> Option<String> {
    let ms = models(o.alphabet());
    let mut cmp = o.comparator().unwrap();
    let n = ms.len();
    let mut table = vec![false; n * n];
    for (a, &i) in ms.iter().enumerate() {
        for (b, &j) in ms.iter().enumerate() {
            table[a * n + b] = cmp.leq(i, j);
        }
    }
    let leq = |a: usize, b: usize| table[a * n + b];
    for a in 0..n {
        if !leq(a, a) {
            return Some(format!("not reflexive at {}", ms[a]));
        }
        for b in 0..n {
            if !leq(a, b) && !leq(b, a) {
                return Some(format!("{} and {} incomparable", ms[a], ms[b]));
            }
            if leq(a, b) {
                for c in 0..n {
                    if leq(b, c) && !leq(a, c) {
                        return Some(format!("not transitive at {} {} {}", ms[a], ms[b], ms[c]));
                    }
                }
            }
        }
    }
    None
}

/// Natural order relation straight from the recursive definition, built from the last
/// history formula back to the first. `table[a][b]` holds `models[a] ≤ models[b]`.
pub fn natural_table(history: &[Formula], models: &[Model]) -> Vec<Vec<bool>> {
    let n = models.len();
    let mut table = vec![vec![true; n]; n];
    for s in history.iter().rev() {
        let sat: Vec<usize> = (0..n).filter(|&k| s.eval(models[k])).collect();
        let minimal: Vec<bool> = (0..n)
            .map(|x| s.eval(models[x]) && sat.iter().all(|&k| table[x][k]))
            .collect();
        let next = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| minimal[i] || (table[i][j] && !minimal[j]))
                    .collect()
            })
            .collect();
        table = next;
    }
    table
}

/// Variable and constant occurrences.
pub fn symbols(f: &Formula) -> usize {
    match f.node() {
        Node::True | Node::False | Node::Var(_) => 1,
        Node::Not(g) => symbols(g),
        Node::And(g, h) | Node::Or(g, h) | Node::Implies(g, h) | Node::Iff(g, h) => {
            symbols(g) + symbols(h)
        }
    }
}
