use crate::error::{Error, Result};
use crate::laurent::{q_binomial, BracketKind, LaurentPoly};
use crate::polymatrix::PolyMatrix;

use super::{q_inverse, Representation};

/// Diagonal deformation `Λ_n = diag(λ_0, …, λ_n)` with unit entries.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LambdaSpec {
    entries: Vec<LaurentPoly>,
}

impl LambdaSpec {
    /// Checks that every entry is a unit and `λ_r λ_{n-r}` is constant.
    pub fn new(entries: Vec<LaurentPoly>) -> Result<Self> {
        let spec = LambdaSpec::unchecked(entries)?;
        let n = spec.n();
        let c = &spec.entries[0] * &spec.entries[n];
        for r in 1..=n {
            let p = &spec.entries[r] * &spec.entries[n - r];
            if p != c {
                return Err(Error::Invalid(format!(
                    "lambda_{r} * lambda_{} = {p} differs from lambda_0 * lambda_{n} = {c}",
                    n - r
                )));
            }
        }
        Ok(spec)
    }

    /// Only checks that the entries are units; used for negative controls.
    pub fn unchecked(entries: Vec<LaurentPoly>) -> Result<Self> {
        if entries.len() < 2 {
            return Err(Error::Invalid("lambda needs at least two entries".into()));
        }
        if let Some(bad) = entries.iter().find(|e| !e.is_unit()) {
            return Err(Error::Invalid(format!("lambda entry {bad} is not a unit")));
        }
        Ok(LambdaSpec { entries })
    }

    pub fn identity(n: usize) -> Self {
        LambdaSpec {
            entries: vec![LaurentPoly::one(); n + 1],
        }
    }

    /// `λ_r = s · a^{n-r} · b^r`; `s`, `a`, `b` must be units.
    pub fn geometric(n: usize, s: &LaurentPoly, a: &LaurentPoly, b: &LaurentPoly) -> Result<Self> {
        let entries = (0..=n)
            .map(|r| Ok(&(s * &a.pow((n - r) as i64)?) * &b.pow(r as i64)?))
            .collect::<Result<Vec<_>>>()?;
        LambdaSpec::new(entries)
    }

    pub fn entries(&self) -> &[LaurentPoly] {
        &self.entries
    }

    /// The dimension parameter: the matrices are `(n+1) × (n+1)`.
    pub fn n(&self) -> usize {
        self.entries.len() - 1
    }

    pub fn matrix(&self) -> PolyMatrix {
        PolyMatrix::diag(&self.entries)
    }
}

/// `σ_1(q, n)_{km} = C_{n-k}^{n-m}(q)`, 0-indexed.
pub fn qpascal_sigma1(n: usize) -> PolyMatrix {
    let mut m = PolyMatrix::zeros(n + 1, n + 1);
    for k in 0..=n {
        for j in k..=n {
            m.set(k, j, q_binomial(n - k, (n - j) as i64, BracketKind::Paren));
        }
    }
    m
}

/// `σ_1(q, n)` with `q` replaced by a given Laurent polynomial.
pub fn qpascal_sigma1_at(n: usize, q: &LaurentPoly) -> Result<PolyMatrix> {
    qpascal_sigma1(n).substitute_poly(&LaurentPoly::t(), q)
}

/// `σ_2(q, n) = (σ_1(q⁻¹, n)⁻¹)♯`.
pub fn qpascal_sigma2(n: usize) -> PolyMatrix {
    qpascal_sigma1(n)
        .map(q_inverse)
        .inverse()
        .expect("unipotent")
        .sharp()
}

/// `D_n(q) = diag(q^{r(r-1)/2})`, `0 ≤ r ≤ n`.
pub fn d_matrix(n: usize) -> PolyMatrix {
    let entries: Vec<LaurentPoly> = (0..=n as i64)
        .map(|r| LaurentPoly::monomial(1, 0, r * (r - 1) / 2))
        .collect();
    PolyMatrix::diag(&entries)
}

fn build(lambda: &LambdaSpec) -> (PolyMatrix, PolyMatrix) {
    let n = lambda.n();
    let l = lambda.matrix();
    let d = d_matrix(n);
    let s1 = &(&qpascal_sigma1(n) * &d.sharp()) * &l;
    let s2 = &(&l.sharp() * &d) * &qpascal_sigma2(n);
    (s1, s2)
}

/// `σ_1 ↦ σ_1(q,n) D♯ Λ`, `σ_2 ↦ Λ♯ D σ_2(q,n)`.
pub fn qpascal_rep(lambda: &LambdaSpec) -> Result<Representation> {
    LambdaSpec::new(lambda.entries.clone())?;
    qpascal_rep_unchecked(lambda)
}

/// As [`qpascal_rep`] without the `λ_r λ_{n-r}` check.
pub fn qpascal_rep_unchecked(lambda: &LambdaSpec) -> Result<Representation> {
    let (s1, s2) = build(lambda);
    Representation::new(3, format!("qpascal({})", lambda.n()), vec![s1, s2])
}

/// The ♯-conjugated form: `σ_1 ↦ Λ D♯ σ_1(q⁻¹,n)⁻¹`, `σ_2 ↦ σ_1(q,n)♯ D Λ♯`.
///
/// These are the images of `σ_2` and `σ_1` of [`qpascal_rep`] under `A ↦ A♯`, in that order.
pub fn qpascal_t_form(lambda: &LambdaSpec) -> Result<Representation> {
    LambdaSpec::new(lambda.entries.clone())?;
    let (s1, s2) = build(lambda);
    Representation::new(3, format!("qpascal-t({})", lambda.n()), vec![s2.sharp(), s1.sharp()])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::braid::check_braid_relations;
    use crate::laurent::lp;

    fn pm(rows: &[&str]) -> PolyMatrix {
        PolyMatrix::parse_rows(rows).unwrap()
    }

    #[test]
    fn pascal_matrices() {
        let at1 = |n| qpascal_sigma1_at(n, &LaurentPoly::one()).unwrap();
        assert_eq!(at1(1), pm(&["1, 1", "0, 1"]));
        assert_eq!(at1(2), pm(&["1, 2, 1", "0, 1, 1", "0, 0, 1"]));
        let s = qpascal_sigma1(4);
        assert_eq!(s.get(0, 1), &lp("(1+q)*(1+q^2)"));
        assert_eq!(s.get(0, 2), &lp("(1+q^2)*(1+q+q^2)"));
    }

    #[test]
    fn dimension_three_example() {
        let lambda = LambdaSpec::new(vec![lp("t^2"), lp("-t"), lp("1")]).unwrap();
        let t = qpascal_t_form(&lambda).unwrap();
        assert_eq!(t.generator(1), &pm(&["t^2*q, -t^2*(1+q), t^2", "0, -t, t", "0, 0, 1"]));
        assert_eq!(t.generator(2), &pm(&["1, 0, 0", "1, -t, 0", "1, -t*(1+q), t^2*q"]));
    }

    #[test]
    fn relations_and_negative_control() {
        for n in 1..=5 {
            let lambda = LambdaSpec::geometric(n, &lp("q"), &lp("-t"), &lp("1")).unwrap();
            assert!(check_braid_relations(&qpascal_rep(&lambda).unwrap()).all_passed());
            assert!(check_braid_relations(&qpascal_t_form(&lambda).unwrap()).all_passed());
        }
        let bad = LambdaSpec::unchecked(vec![lp("-t^3"), lp("q*t^2"), lp("-q^-1*t"), lp("t")]).unwrap();
        assert!(LambdaSpec::new(bad.entries().to_vec()).is_err());
        assert!(!check_braid_relations(&qpascal_rep_unchecked(&bad).unwrap()).all_passed());
    }
}
