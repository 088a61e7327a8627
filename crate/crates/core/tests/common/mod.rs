#![allow(dead_code)]

use braidq::{BraidWord, LaurentPoly, Monomial, PolyMatrix};
use num_bigint::BigInt;
use proptest::prelude::*;

pub fn poly(max_terms: usize, max_exp: i64, max_coeff: i64) -> impl Strategy<Value = LaurentPoly> {
    prop::collection::vec(
        (-max_exp..=max_exp, -max_exp..=max_exp, -max_coeff..=max_coeff),
        0..=max_terms,
    )
    .prop_map(|terms| {
        LaurentPoly::from_terms(terms.into_iter().map(|(et, eq, c)| (Monomial::new(et, eq), BigInt::from(c))))
    })
}

pub fn small_poly() -> impl Strategy<Value = LaurentPoly> {
    poly(3, 2, 3)
}

pub fn nonzero_poly() -> impl Strategy<Value = LaurentPoly> {
    small_poly().prop_filter("nonzero", |p| !p.is_zero())
}

pub fn matrix(n: usize, entry: impl Strategy<Value = LaurentPoly>) -> impl Strategy<Value = PolyMatrix> {
    prop::collection::vec(entry, n * n).prop_map(move |e| PolyMatrix::new(n, n, e).unwrap())
}

pub fn word(strands: usize, max_len: usize) -> impl Strategy<Value = BraidWord> {
    let gens = (strands - 1) as i64;
    prop::collection::vec((1..=gens, any::<bool>()), 0..=max_len).prop_map(move |v| {
        BraidWord::new(strands, v.into_iter().map(|(g, pos)| if pos { g } else { -g }).collect()).unwrap()
    })
}
