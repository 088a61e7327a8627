mod common;

use braidq::laurent::{q_binomial, BracketKind};
use braidq::{LaurentPoly, Monomial};
use common::{nonzero_poly, small_poly};
use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;

fn binomial(n: u64, k: u64) -> i64 {
    (0..k).fold(1u64, |acc, i| acc * (n - i) / (i + 1)) as i64
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn ring_axioms(a in small_poly(), b in small_poly(), c in small_poly()) {
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&a - &a, LaurentPoly::zero());
        prop_assert_eq!(&a * &LaurentPoly::one(), a.clone());
    }

    #[test]
    fn exact_div_inverts_multiplication(a in small_poly(), b in nonzero_poly()) {
        prop_assert_eq!((&a * &b).exact_div(&b).unwrap(), a);
    }

    #[test]
    fn display_parse_round_trip(a in small_poly()) {
        let parsed: LaurentPoly = a.to_string().parse().unwrap();
        prop_assert_eq!(parsed, a);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn evaluation_is_a_ring_map(
        a in small_poly(),
        b in small_poly(),
        tn in 1i64..5, td in 1i64..5,
        qn in -4i64..5, qd in 1i64..5,
    ) {
        prop_assume!(qn != 0);
        let t0 = BigRational::new(BigInt::from(tn), BigInt::from(td));
        let q0 = BigRational::new(BigInt::from(qn), BigInt::from(qd));
        let ev = |p: &LaurentPoly| p.eval_rational(&t0, &q0).unwrap();
        prop_assert_eq!(ev(&(&a + &b)), ev(&a) + ev(&b));
        prop_assert_eq!(ev(&(&a * &b)), ev(&a) * ev(&b));
    }
}

#[test]
fn q_pascal_recurrence() {
    for n in 1..=12usize {
        for k in 0..=n as i64 {
            let left = q_binomial(n, k, BracketKind::Paren);
            let right = &q_binomial(n - 1, k - 1, BracketKind::Paren)
                + &q_binomial(n - 1, k, BracketKind::Paren).shift(Monomial::new(0, k));
            assert_eq!(left, right, "n={n} k={k}");
        }
    }
}

#[test]
fn q_binomial_at_one_is_binomial() {
    for n in 0..=12usize {
        for k in 0..=n {
            let at_one = q_binomial(n, k as i64, BracketKind::Paren)
                .substitute_poly(&LaurentPoly::t(), &LaurentPoly::one())
                .unwrap();
            assert_eq!(at_one, LaurentPoly::constant(binomial(n as u64, k as u64)), "n={n} k={k}");
        }
    }
}

/// `∏_{j<k} (1 + q^j x) = Σ_r q^{r(r-1)/2} C_k^r(q) x^r`, with `x` carried by `t`.
#[test]
fn gauss_binomial_theorem() {
    let x = LaurentPoly::t();
    for k in 0..=8usize {
        let left = (0..k).fold(LaurentPoly::one(), |acc, j| {
            &acc * &(&LaurentPoly::one() + &x.shift(Monomial::new(0, j as i64)))
        });
        let mut right = LaurentPoly::zero();
        for r in 0..=k as i64 {
            right += &q_binomial(k, r, BracketKind::Paren).shift(Monomial::new(r, r * (r - 1) / 2));
        }
        assert_eq!(left, right, "k={k}");
    }
}
