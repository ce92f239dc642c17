mod common;

use std::collections::BTreeSet;

use common::*;
use doxastic::analysis::class_bound_check;
use doxastic::document::OrderDocument;
use doxastic::formula::{formula_from_models, is_consistent, models_of, parse};
use doxastic::orders::{agree_pairwise, classes_by_stripping, classes_of, equivalent, leq_formula};
use doxastic::revision::{
    revise_level_lexicographically, revise_level_naturally, revise_lex_history,
    revise_natural_history,
};
use doxastic::translate::{
    level_to_lex, level_to_natural, lex_to_level, natural_to_level, natural_to_level_with,
    normalization_problem, normalize_level, InconsistentHistory,
};
use doxastic::{Alphabet, Formula, LevelOrder, LexOrder, Model, NaturalOrder, Order};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

#[derive(Debug, Clone)]
enum Shape {
    True,
    False,
    Var(usize),
    Not(Box<Shape>),
    Bin(u8, Box<Shape>, Box<Shape>),
}

fn shape(vars: usize) -> impl Strategy<Value = Shape> {
    let leaf = prop_oneof![
        Just(Shape::True),
        Just(Shape::False),
        (0..vars).prop_map(Shape::Var),
    ];
    leaf.prop_recursive(5, 40, 2, |inner| {
        prop_oneof![
            inner.clone().prop_map(|s| Shape::Not(Box::new(s))),
            (0u8..4, inner.clone(), inner).prop_map(|(op, l, r)| Shape::Bin(
                op,
                Box::new(l),
                Box::new(r)
            )),
        ]
    })
}

fn build(shape: &Shape, alphabet: &Alphabet) -> Formula {
    match shape {
        Shape::True => Formula::truth(),
        Shape::False => Formula::falsity(),
        Shape::Var(i) => Formula::var_at(alphabet, *i),
        Shape::Not(s) => Formula::not(build(s, alphabet)),
        Shape::Bin(op, l, r) => {
            let (l, r) = (build(l, alphabet), build(r, alphabet));
            match op {
                0 => Formula::and(l, r),
                1 => Formula::or(l, r),
                2 => Formula::implies(l, r),
                _ => Formula::iff(l, r),
            }
        }
    }
}

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn any_order(rng: &mut ChaCha8Rng, alphabet: &Alphabet, kind: u8, len: usize) -> Order {
    match kind % 4 {
        0 => random_explicit(rng, alphabet).into(),
        1 => random_level(rng, alphabet, len, 3).into(),
        2 => random_lex(rng, alphabet, len, 3).into(),
        _ => random_natural(rng, alphabet, len, 3).into(),
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn render_parse_round_trip(s in shape(3)) {
        let alphabet = alphabet(3);
        let f = build(&s, &alphabet);
        let reparsed = parse(&f.to_string(), &alphabet).unwrap();
        prop_assert_eq!(reparsed, f);
    }

    #[test]
    fn models_match_evaluation(s in shape(4)) {
        let alphabet = alphabet(4);
        let f = build(&s, &alphabet);
        let ms = models_of(&f, &alphabet).unwrap();
        for m in alphabet.models().unwrap() {
            prop_assert_eq!(ms.contains(&m), f.eval(m));
        }
        prop_assert_eq!(is_consistent(&f, &alphabet).unwrap(), !ms.is_empty());
    }

    #[test]
    fn simplify_preserves_models(s in shape(3)) {
        let alphabet = alphabet(3);
        let f = build(&s, &alphabet);
        prop_assert_eq!(models_of(&f.simplify(), &alphabet).unwrap(), models_of(&f, &alphabet).unwrap());
    }

    #[test]
    fn minterm_disjunction_has_exact_models(mask in any::<u16>()) {
        let alphabet = alphabet(4);
        let set: BTreeSet<Model> = alphabet.models().unwrap().filter(|m| mask >> m.index() & 1 == 1).collect();
        let f = formula_from_models(&set, &alphabet);
        prop_assert_eq!(models_of(&f, &alphabet).unwrap(), set);
    }

    #[test]
    fn every_representation_is_a_connected_preorder(seed in any::<u64>(), n in 0usize..=6, len in 0usize..=4, kind in 0u8..4) {
        let alphabet = alphabet(n);
        let o = any_order(&mut rng(seed), &alphabet, kind, len);
        prop_assert_eq!(preorder_failure(&o), None);
    }

    #[test]
    fn class_extraction_routes_agree(seed in any::<u64>(), n in 0usize..=4, len in 0usize..=4, kind in 0u8..4) {
        let alphabet = alphabet(n);
        let o = any_order(&mut rng(seed), &alphabet, kind, len);
        let classes = classes_of(&o).unwrap();
        prop_assert!(classes.is_valid());
        prop_assert_eq!(classes, classes_by_stripping(&o).unwrap());
    }

    #[test]
    fn equivalence_agrees_with_pairwise_oracle(seed in any::<u64>(), n in 1usize..=5, len in 0usize..=3, k1 in 0u8..4, k2 in 0u8..4) {
        let alphabet = alphabet(n.min(3));
        let mut r = rng(seed);
        let a = any_order(&mut r, &alphabet, k1, len);
        // half of the time compare against a translation, so that equivalent pairs occur
        let b = if r.gen_bool(0.5) {
            doxastic::translate::translate(&a, doxastic::Kind::ALL[k2 as usize], doxastic::translate::TranslateOptions { prune: true, lenient: true, length_cap: None }).unwrap()
        } else {
            any_order(&mut r, &alphabet, k2, len)
        };
        prop_assert_eq!(equivalent(&a, &b).unwrap(), agree_pairwise(&a, &b).unwrap());
    }

    #[test]
    fn lex_ties_are_ties_for_every_member(seed in any::<u64>(), n in 1usize..=4, len in 0usize..=5) {
        let alphabet = alphabet(n);
        let o = random_lex(&mut rng(seed), &alphabet, len, 3);
        for i in models(&alphabet) {
            for j in models(&alphabet) {
                if o.leq(i, j).unwrap() && o.leq(j, i).unwrap() {
                    for s in o.history() {
                        prop_assert!(leq_formula(s, i, j) && leq_formula(s, j, i));
                    }
                }
            }
        }
    }

    #[test]
    fn natural_model_falsifying_everything_is_last(seed in any::<u64>(), n in 1usize..=4, len in 0usize..=5) {
        let alphabet = alphabet(n);
        let o = random_natural(&mut rng(seed), &alphabet, len, 3);
        for j in models(&alphabet) {
            if o.history().iter().all(|s| !s.eval(j)) {
                for i in models(&alphabet) {
                    prop_assert!(o.leq(i, j).unwrap());
                }
            }
        }
    }

    #[test]
    fn empty_histories_are_level_truth(n in 0usize..=4) {
        let alphabet = alphabet(n);
        let truth: Order = LevelOrder::new(alphabet.clone(), vec![Formula::truth()]).unwrap().into();
        let lex: Order = LexOrder::new(alphabet.clone(), vec![]).unwrap().into();
        let natural: Order = NaturalOrder::new(alphabet.clone(), vec![]).unwrap().into();
        prop_assert!(agree_pairwise(&lex, &truth).unwrap());
        prop_assert!(agree_pairwise(&natural, &truth).unwrap());
    }

    #[test]
    fn translation_lengths(seed in any::<u64>(), n in 1usize..=4, len in 0usize..=5) {
        let alphabet = alphabet(n);
        let mut r = rng(seed);
        let natural = random_natural(&mut r, &alphabet, len, 3);
        let consistent = natural.history().iter().all(|f| is_consistent(f, &alphabet).unwrap());
        match natural_to_level(&natural) {
            Ok(level) => {
                prop_assert!(consistent);
                prop_assert_eq!(level.levels().len(), len + 1);
            }
            Err(doxastic::Error::InconsistentRevision(_)) => prop_assert!(!consistent),
            Err(e) => return Err(TestCaseError::fail(e.to_string())),
        }

        let lex = random_lex(&mut r, &alphabet, len, 3);
        prop_assert_eq!(lex_to_level(&lex, false).unwrap().levels().len(), 1 << len);
        let classes = classes_of(&lex.clone().into()).unwrap().len();
        prop_assert_eq!(lex_to_level(&lex, true).unwrap().levels().len(), classes);
    }

    #[test]
    fn level_to_histories_reuse_normalized_sequence(seed in any::<u64>(), n in 1usize..=4, len in 0usize..=5) {
        let alphabet = alphabet(n);
        let level = random_level(&mut rng(seed), &alphabet, len, 3);
        let normalized = normalize_level(&level).unwrap();
        prop_assert_eq!(normalization_problem(&normalized).unwrap(), None);
        let natural = level_to_natural(&level).unwrap();
        let lex = level_to_lex(&level).unwrap();
        prop_assert_eq!(natural.history(), normalized.levels());
        prop_assert_eq!(lex.history(), normalized.levels());
        // one class per level once normalized
        prop_assert_eq!(classes_of(&normalized.clone().into()).unwrap().len(), normalized.levels().len());
        prop_assert!(class_bound_check(&level).unwrap());
    }

    #[test]
    fn translation_cycles_return_equivalent_orders(seed in any::<u64>(), n in 1usize..=4, len in 0usize..=4) {
        let alphabet = alphabet(n);
        let natural = random_natural(&mut rng(seed), &alphabet, len, 3);
        let start: Order = natural.clone().into();
        let level = natural_to_level_with(&natural, InconsistentHistory::Drop).unwrap();
        let lex = level_to_lex(&level).unwrap();
        let level_again = lex_to_level(&lex, true).unwrap();
        let natural_again = level_to_natural(&level_again).unwrap();
        let explicit = doxastic::translate::to_explicit(&natural_again.into()).unwrap();
        let back = doxastic::translate::explicit_to_level(&explicit).unwrap();
        prop_assert!(equivalent(&start, &back.into()).unwrap());
    }

    #[test]
    fn level_revisions_commute_with_histories(seed in any::<u64>(), n in 1usize..=4, len in 0usize..=4) {
        let alphabet = alphabet(n);
        let mut r = rng(seed);
        let q = normalize_level(&random_level(&mut r, &alphabet, len, 3)).unwrap();
        let f = random_formula(&mut r, &alphabet, 3);

        let lex_direct = revise_level_lexicographically(&q, &f, true).unwrap();
        let lex_path = lex_to_level(&revise_lex_history(&level_to_lex(&q).unwrap(), &f).unwrap(), true).unwrap();
        prop_assert!(equivalent(&lex_direct.into(), &lex_path.into()).unwrap());

        if !is_consistent(&f, &alphabet).unwrap() {
            prop_assert!(revise_level_naturally(&q, &f).is_err());
            return Ok(());
        }
        let natural_direct = revise_level_naturally(&q, &f).unwrap();
        let natural_path = natural_to_level(&revise_natural_history(&level_to_natural(&q).unwrap(), &f).unwrap()).unwrap();
        prop_assert!(equivalent(&natural_direct.clone().into(), &natural_path.into()).unwrap());

        // the new first class is exactly Mod(f ∧ Q_c)
        let c = q.levels().iter().position(|qc| alphabet.models().unwrap().any(|m| f.eval(m) && qc.eval(m))).unwrap();
        let expected: BTreeSet<Model> = alphabet.models().unwrap().filter(|&m| f.eval(m) && q.levels()[c].eval(m)).collect();
        let classes = classes_of(&natural_direct.into()).unwrap();
        prop_assert_eq!(&classes.classes()[0], &expected);

        let lex_classes = classes_of(&revise_level_lexicographically(&q, &f, false).unwrap().into()).unwrap();
        let models_f = models_of(&f, &alphabet).unwrap();
        prop_assert!(lex_classes.classes()[0].is_subset(&models_f));
    }

    #[test]
    fn natural_revision_within_first_class_is_idempotent(seed in any::<u64>(), n in 1usize..=4, len in 0usize..=4) {
        let alphabet = alphabet(n);
        let mut r = rng(seed);
        let q = normalize_level(&random_level(&mut r, &alphabet, len, 3)).unwrap();
        let f = random_formula(&mut r, &alphabet, 3);
        let meets_first = alphabet.models().unwrap().any(|m| f.eval(m) && q.levels()[0].eval(m));
        prop_assume!(meets_first);
        let once = revise_level_naturally(&q, &f).unwrap();
        let twice = revise_level_naturally(&once, &f).unwrap();
        prop_assert!(equivalent(&once.into(), &twice.into()).unwrap());
    }

    #[test]
    fn documents_round_trip(seed in any::<u64>(), n in 1usize..=3, len in 0usize..=4, kind in 0u8..4) {
        let alphabet = alphabet(n);
        let o = any_order(&mut rng(seed), &alphabet, kind, len);
        let text = OrderDocument::from_order(&o).serialize();
        let doc = OrderDocument::parse(&text).unwrap();
        prop_assert_eq!(doc.serialize(), text.clone());
        prop_assert_eq!(doc.into_order(true).unwrap(), o);
    }
}
