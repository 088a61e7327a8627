use crate::error::{Error, Result};
use crate::laurent::LaurentPoly;
use crate::polymatrix::PolyMatrix;

use super::Representation;

/// The two printed forms of the reduced Burau representation.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BurauForm {
    /// `σ_1 ↦ [[-t,0],[-1,1]] ⊕ I`, interior blocks `[[1,-t,0],[0,-t,0],[0,-1,1]]`.
    Standard,
    /// `σ_1 ↦ [[-t,t],[0,1]] ⊕ I`, interior blocks `[[1,0,0],[1,-t,t],[0,0,1]]`.
    Conjugated,
}

impl BurauForm {
    pub fn name(self) -> &'static str {
        match self {
            BurauForm::Standard => "standard",
            BurauForm::Conjugated => "conjugated",
        }
    }
}

/// `σ_i ↦ I_{i-1} ⊕ [[1-t, t],[1, 0]] ⊕ I_{n-i-1}`.
pub fn burau_unreduced(n: usize) -> Result<Representation> {
    if n < 2 {
        return Err(Error::Invalid(format!("{n} strands")));
    }
    let t = LaurentPoly::t();
    let gens = (1..n)
        .map(|i| {
            let mut m = PolyMatrix::identity(n);
            m.set(i - 1, i - 1, &LaurentPoly::one() - &t);
            m.set(i - 1, i, t.clone());
            m.set(i, i - 1, LaurentPoly::one());
            m.set(i, i, LaurentPoly::zero());
            m
        })
        .collect();
    Representation::new(n, format!("burau({n})"), gens)
}

/// Reduced Burau representation on `n - 1` dimensions; `n = 2` gives `σ_1 ↦ (-t)`.
pub fn burau_reduced(n: usize, form: BurauForm) -> Result<Representation> {
    if n < 2 {
        return Err(Error::Invalid(format!("{n} strands")));
    }
    let d = n - 1;
    let t = LaurentPoly::t();
    let gens = (1..n)
        .map(|i| {
            let k = i - 1;
            let mut m = PolyMatrix::identity(d);
            m.set(k, k, -&t);
            match form {
                BurauForm::Conjugated => {
                    if i >= 2 {
                        m.set(k, k - 1, LaurentPoly::one());
                    }
                    if i + 1 < n {
                        m.set(k, k + 1, t.clone());
                    }
                }
                BurauForm::Standard => {
                    if i >= 2 {
                        m.set(k - 1, k, -&t);
                    }
                    if i + 1 < n {
                        m.set(k + 1, k, LaurentPoly::constant(-1));
                    }
                }
            }
            m
        })
        .collect();
    Representation::new(n, format!("reduced-burau({n}, {})", form.name()), gens)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::braid::{check_braid_relations, parse_word};

    fn pm(rows: &[&str]) -> PolyMatrix {
        PolyMatrix::parse_rows(rows).unwrap()
    }

    #[test]
    fn printed_matrices() {
        let b3 = burau_reduced(3, BurauForm::Conjugated).unwrap();
        assert_eq!(b3.generator(1), &pm(&["-t, t", "0, 1"]));
        assert_eq!(b3.generator(2), &pm(&["1, 0", "1, -t"]));
        let b4 = burau_reduced(4, BurauForm::Conjugated).unwrap();
        assert_eq!(b4.generator(2), &pm(&["1, 0, 0", "1, -t, t", "0, 0, 1"]));
        let s4 = burau_reduced(4, BurauForm::Standard).unwrap();
        assert_eq!(s4.generator(1), &pm(&["-t, 0, 0", "-1, 1, 0", "0, 0, 1"]));
        assert_eq!(s4.generator(2), &pm(&["1, -t, 0", "0, -t, 0", "0, -1, 1"]));
        assert_eq!(s4.generator(3), &pm(&["1, 0, 0", "0, 1, -t", "0, 0, -t"]));
        assert_eq!(burau_reduced(2, BurauForm::Standard).unwrap().generator(1), &pm(&["-t"]));
        assert_eq!(burau_unreduced(2).unwrap().generator(1), &pm(&["1-t, t", "1, 0"]));
    }

    #[test]
    fn relations_and_word_image() {
        for n in 2..=6 {
            assert!(check_braid_relations(&burau_unreduced(n).unwrap()).all_passed());
            for form in [BurauForm::Standard, BurauForm::Conjugated] {
                assert!(check_braid_relations(&burau_reduced(n, form).unwrap()).all_passed());
            }
        }
        let b3 = burau_reduced(3, BurauForm::Conjugated).unwrap();
        let w = parse_word("1 2 2 2", 3).unwrap();
        assert_eq!(b3.image_of_word(&w).unwrap(), pm(&["t^3-t^2, -t^4", "t^2-t+1, -t^3"]));
    }

    #[test]
    fn permutation_specialization() {
        let b = burau_unreduced(4).unwrap().substitute(&LaurentPoly::one(), &LaurentPoly::q()).unwrap();
        for g in b.generators() {
            assert_eq!(g.determinant().unwrap(), LaurentPoly::constant(-1));
            for i in 0..4 {
                let row: LaurentPoly = (0..4).fold(LaurentPoly::zero(), |acc, j| &acc + g.get(i, j));
                assert!(row.is_one());
            }
        }
    }
}
