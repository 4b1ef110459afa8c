use mcg_core::twist::{certify_model, h1_matrix, model, relations, verify_relation, Clause, MODEL_NAMES};
use mcg_core::TwistWord;
use proptest::prelude::*;

fn twist_word(names: Vec<String>, max_len: usize) -> impl Strategy<Value = TwistWord> {
    prop::collection::vec((prop::sample::select(names), prop_oneof![Just(-2), Just(-1), Just(1), Just(2)]), 0..=max_len)
        .prop_map(TwistWord)
}

fn model_and_words() -> impl Strategy<Value = (String, TwistWord, TwistWord)> {
    prop::sample::select(MODEL_NAMES.to_vec()).prop_flat_map(|name| {
        let names: Vec<String> = model(name).unwrap().curve_names().iter().map(|s| s.to_string()).collect();
        (Just(name.to_string()), twist_word(names.clone(), 6), twist_word(names, 6))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1_000))]

    #[test]
    fn h1_matrix_is_multiplicative((name, w1, w2) in model_and_words()) {
        let m = model(&name).unwrap();
        let product = h1_matrix(&m, &w1).unwrap().mul(&h1_matrix(&m, &w2).unwrap()).unwrap();
        prop_assert_eq!(h1_matrix(&m, &w1.concat(&w2)).unwrap(), product);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(50))]

    #[test]
    fn relations_survive_conjugation(idx in 0usize..6, pick in any::<prop::sample::Index>(), e in prop_oneof![Just(-1), Just(1)]) {
        let rels = relations();
        let rel = &rels[idx % rels.len()];
        let m = model(rel.model).unwrap();
        let names = m.curve_names();
        let tau = TwistWord::new(&[(names[pick.index(names.len())], e)]);
        let lhs = tau.concat(&rel.lhs).concat(&tau.inverse());
        let rhs = tau.concat(&rel.rhs).concat(&tau.inverse());
        prop_assert!(verify_relation(&m, &lhs, &rhs).unwrap(), "{} conjugated by {}", rel.id, tau);
    }
}

#[test]
fn homology_precheck_for_three_holes() {
    let m = model("genus1_q3").unwrap();
    for rel in relations().iter().filter(|r| r.model == "genus1_q3") {
        assert_eq!(h1_matrix(&m, &rel.lhs).unwrap(), h1_matrix(&m, &rel.rhs).unwrap(), "{}", rel.id);
    }
}

#[test]
fn every_model_certifies_clause_by_clause() {
    for name in MODEL_NAMES {
        let report = certify_model(&model(name).unwrap());
        for c in Clause::ALL {
            assert!(report.clause(c).passed, "{name} clause {}: {:?}", c.label(), report.clause(c).failures);
        }
    }
}
