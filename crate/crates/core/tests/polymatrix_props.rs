mod common;

use braidq::ring::{bareiss_det, cofactor_det};
use braidq::{LaurentPoly, PolyMatrix};
use common::{matrix, poly};
use proptest::prelude::*;

fn entry() -> impl Strategy<Value = LaurentPoly> {
    poly(2, 1, 2)
}

fn strictly_upper(n: usize) -> impl Strategy<Value = PolyMatrix> {
    prop::collection::vec(-3i64..=3, n * n).prop_map(move |v| {
        let mut m = PolyMatrix::zeros(n, n);
        for i in 0..n {
            for j in i + 1..n {
                m.set(i, j, LaurentPoly::constant(v[i * n + j]));
            }
        }
        m
    })
}

fn binomial(n: usize, k: usize) -> usize {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn det_is_multiplicative(a in matrix(4, entry()), b in matrix(4, entry())) {
        let ab = (&a * &b).determinant().unwrap();
        prop_assert_eq!(ab, &a.determinant().unwrap() * &b.determinant().unwrap());
    }

    #[test]
    fn generalized_char_poly_matches_direct(
        (a, lambdas) in (1usize..=4).prop_flat_map(|n| (matrix(n, entry()), prop::collection::vec(entry(), n)))
    ) {
        prop_assert_eq!(
            a.generalized_char_poly(&lambdas).unwrap(),
            a.generalized_char_poly_direct(&lambdas).unwrap()
        );
    }

    #[test]
    fn bareiss_matches_cofactor(a in (1usize..=5).prop_flat_map(|n| matrix(n, poly(2, 1, 2)))) {
        let rows = a.to_rows();
        prop_assert_eq!(bareiss_det(rows.clone()), cofactor_det(&rows));
        prop_assert_eq!(a.determinant().unwrap(), a.cofactor_determinant().unwrap());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(60))]

    #[test]
    fn symmetric_square_is_functorial(
        (a, b) in (3usize..=4).prop_flat_map(|n| (matrix(n, entry()), matrix(n, entry())))
    ) {
        let ab = &a * &b;
        prop_assert_eq!(ab.sym_power(2).unwrap(), &a.sym_power(2).unwrap() * &b.sym_power(2).unwrap());
        prop_assert_eq!(ab.ext_power(2).unwrap(), &a.ext_power(2).unwrap() * &b.ext_power(2).unwrap());
    }

    #[test]
    fn exp_of_nilpotent_is_invertible(a in (1usize..=6).prop_flat_map(strictly_upper)) {
        let n = a.rows();
        let forward = a.exp_nilpotent();
        let backward = (-&a).exp_nilpotent();
        if let (Ok(f), Ok(b)) = (forward, backward) {
            prop_assert_eq!(&f * &b, PolyMatrix::identity(n));
        }
    }

    #[test]
    fn sharp_is_multiplicative_involution(
        (a, b) in (1usize..=4).prop_flat_map(|n| (matrix(n, entry()), matrix(n, entry())))
    ) {
        prop_assert_eq!((&a * &b).sharp(), &a.sharp() * &b.sharp());
        prop_assert_eq!(a.sharp().sharp(), a);
    }

    #[test]
    fn inverse_of_unimodular(a in (1usize..=4).prop_flat_map(strictly_upper)) {
        let n = a.rows();
        let m = &PolyMatrix::identity(n) + &a;
        let inv = m.inverse().unwrap();
        prop_assert_eq!(&m * &inv, PolyMatrix::identity(n));
    }
}

#[test]
fn powers_of_identity_have_binomial_dimensions() {
    for n in 1..=5 {
        for m in 1..=4 {
            let s = PolyMatrix::identity(n).sym_power(m).unwrap();
            assert_eq!(s.rows(), binomial(n + m - 1, m));
            assert!(s.is_identity());
            if m <= n {
                let e = PolyMatrix::identity(n).ext_power(m).unwrap();
                assert_eq!(e.rows(), binomial(n, m));
                assert!(e.is_identity());
            }
        }
    }
}

#[test]
fn exp_of_small_nilpotents_is_exact() {
    for n in 1..=6 {
        let mut a = PolyMatrix::zeros(n, n);
        for i in 0..n.saturating_sub(1) {
            a.set(i, i + 1, LaurentPoly::constant((i + 1) as i64));
        }
        let f = a.exp_nilpotent().unwrap();
        let b = (-&a).exp_nilpotent().unwrap();
        assert!((&f * &b).is_identity(), "n={n}");
    }
}
