mod common;

use braidq::braid::{check_braid_relations, parse_word};
use braidq::reps::{
    burau_reduced, burau_unreduced, lie_rep, lk, qpascal_rep, sym2_quantized, BurauForm, LambdaSpec, LkNotation,
};
use braidq::{LaurentPoly, PolyMatrix, Representation};
use common::word;
use proptest::prelude::*;

fn reps(n: usize) -> Vec<Representation> {
    let mut out = vec![
        burau_unreduced(n).unwrap(),
        burau_reduced(n, BurauForm::Standard).unwrap(),
        burau_reduced(n, BurauForm::Conjugated).unwrap(),
        lk(n, LkNotation::New).unwrap(),
        lk(n, LkNotation::Bigelow).unwrap(),
    ];
    if n >= 3 {
        out.push(sym2_quantized(n).unwrap());
    }
    out
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn word_round_trip(w in (2usize..=6).prop_flat_map(|n| word(n, 12))) {
        prop_assert_eq!(parse_word(&w.to_string(), w.strands()).unwrap(), w.clone());
        prop_assert_eq!(parse_word(&w.to_symbolic(), w.strands()).unwrap(), w);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn word_times_inverse_is_identity(w in (2usize..=4).prop_flat_map(|n| word(n, 6))) {
        let ww = w.concat(&w.inverse()).unwrap();
        for rep in reps(w.strands()) {
            prop_assert!(rep.image_of_word(&ww).unwrap().is_identity(), "{}", rep.label());
        }
    }
}

#[test]
fn relations_hold_for_every_constructor() {
    for n in 2..=6 {
        for rep in reps(n) {
            assert!(check_braid_relations(&rep).all_passed(), "{} n={n}", rep.label());
        }
    }
    for n in 1..=8 {
        let lam = LambdaSpec::geometric(n, &LaurentPoly::one(), &LaurentPoly::t(), &LaurentPoly::one()).unwrap();
        assert!(check_braid_relations(&qpascal_rep(&lam).unwrap()).all_passed(), "qpascal dim {}", n + 1);
    }
    for strands in 2..=4 {
        for m in 1..=3 {
            assert!(check_braid_relations(&lie_rep(strands, m).unwrap()).all_passed(), "lie {strands} {m}");
        }
    }
}

#[test]
fn sym2_at_q_one_is_symmetric_square() {
    for n in 3..=6 {
        let quantized = sym2_quantized(n).unwrap().substitute(&LaurentPoly::t(), &LaurentPoly::one()).unwrap();
        let burau = burau_reduced(n, BurauForm::Conjugated).unwrap();
        for r in 1..n {
            let plain: PolyMatrix = burau.generator(r).sym_power(2).unwrap();
            assert_eq!(quantized.generator(r), &plain, "n={n} s{r}");
        }
    }
}
