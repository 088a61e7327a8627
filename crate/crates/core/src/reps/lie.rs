use crate::error::{Error, Result};
use crate::laurent::LaurentPoly;
use crate::polymatrix::{PolyMatrix, SymIndex};

use super::Representation;

/// Images of `E_kk`, `X_k = E_{k,k+1}` and `Y_k = E_{k+1,k}` in a module over `gl_k`.
#[derive(Clone, Debug, PartialEq)]
pub struct LieModule {
    pub e: Vec<PolyMatrix>,
    pub x: Vec<PolyMatrix>,
    pub y: Vec<PolyMatrix>,
}

/// `S^m` of the natural module of `gl_k`, in the unnormalized symmetric basis.
///
/// `E_ij` sends `e_α` to `(α_i + 1) e_{α - ε_j + ε_i}`; for `k = 2` this gives the
/// bidiagonal `sl_2` generators with superdiagonal `m, m-1, …, 1`.
pub fn gl_sym_power_module(k: usize, m: usize) -> Result<LieModule> {
    if k == 0 || m == 0 {
        return Err(Error::Invalid(format!("S^{m} of gl_{k}")));
    }
    let index = SymIndex::new(k, m);
    let dim = index.len();
    let counts: Vec<Vec<i64>> = index
        .tuples()
        .iter()
        .map(|tuple| {
            let mut c = vec![0i64; k + 1];
            for &v in tuple {
                c[v] += 1;
            }
            c
        })
        .collect();
    let unit = |i: usize, j: usize| {
        let mut out = PolyMatrix::zeros(dim, dim);
        for (col, tuple) in index.tuples().iter().enumerate() {
            let Some(slot) = tuple.iter().position(|&v| v == j) else {
                continue;
            };
            let mut image = tuple.clone();
            image[slot] = i;
            let row = index.position(&image).expect("same degree");
            let coeff = if i == j { counts[col][i] } else { counts[col][i] + 1 };
            out.set(row, col, LaurentPoly::constant(coeff));
        }
        out
    };
    Ok(LieModule {
        e: (1..=k).map(|i| unit(i, i)).collect(),
        x: (1..k).map(|i| unit(i, i + 1)).collect(),
        y: (1..k).map(|i| unit(i + 1, i)).collect(),
    })
}

/// `exp(s·π(E_kk))` with `s = ln(-t)`: `diag((-t)^{d_i})` for integer weights `d_i`.
fn weight_exponential(e: &PolyMatrix) -> Result<PolyMatrix> {
    if !e.is_square() {
        return Err(Error::Invalid("weight matrix is not square".into()));
    }
    let n = e.rows();
    let minus_t = -LaurentPoly::t();
    let mut out = PolyMatrix::zeros(n, n);
    for i in 0..n {
        for j in 0..n {
            if i != j && !e.get(i, j).is_zero() {
                return Err(Error::Invalid("weight matrix is not diagonal".into()));
            }
        }
        let d = e
            .get(i, i)
            .as_constant()
            .and_then(|c| i64::try_from(c).ok())
            .ok_or_else(|| Error::Invalid("weight is not an integer".into()))?;
        out.set(i, i, minus_t.pow(d)?);
    }
    Ok(out)
}

/// Representation of `B_n` from a `gl_{n-1}` module:
/// `σ_1 = exp(sE_11) exp(-X_1)`, `σ_k = exp(Y_{k-1}) exp(sE_kk) exp(-X_k)`,
/// `σ_{n-1} = exp(Y_{n-2}) exp(sE_{n-1,n-1})`.
pub fn braid_from_lie_rep(
    pi_ekk: &[PolyMatrix],
    pi_x: &[PolyMatrix],
    pi_y: &[PolyMatrix],
    strands: usize,
) -> Result<Representation> {
    if strands < 2 {
        return Err(Error::Invalid(format!("{strands} strands")));
    }
    let k = strands - 1;
    if pi_ekk.len() != k || pi_x.len() != k - 1 || pi_y.len() != k - 1 {
        return Err(Error::Invalid(format!(
            "{strands} strands need {k} weights and {} raising and lowering operators",
            k - 1
        )));
    }
    let mut gens = Vec::with_capacity(k);
    for i in 1..=k {
        let mut g = weight_exponential(&pi_ekk[i - 1])?;
        if i > 1 {
            g = pi_y[i - 2].exp_nilpotent()?.try_mul(&g)?;
        }
        if i < k {
            g = g.try_mul(&(-&pi_x[i - 1]).exp_nilpotent()?)?;
        }
        gens.push(g);
    }
    Representation::new(strands, format!("lie({strands})"), gens)
}

/// [`braid_from_lie_rep`] applied to `S^m` of the natural module of `gl_{n-1}`.
pub fn lie_rep(strands: usize, m: usize) -> Result<Representation> {
    if strands < 2 {
        return Err(Error::Invalid(format!("{strands} strands")));
    }
    let module = gl_sym_power_module(strands - 1, m)?;
    let mut rep = braid_from_lie_rep(&module.e, &module.x, &module.y, strands)?;
    rep.label = format!("lie({strands}, S^{m})");
    Ok(rep)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::braid::check_braid_relations;
    use crate::reps::{burau_reduced, BurauForm};

    #[test]
    fn natural_module_gives_burau() {
        for n in 2..=6 {
            let rep = lie_rep(n, 1).unwrap();
            assert_eq!(
                rep.generators(),
                burau_reduced(n, BurauForm::Conjugated).unwrap().generators()
            );
        }
    }

    #[test]
    fn sl2_modules() {
        let module = gl_sym_power_module(2, 3).unwrap();
        assert_eq!(
            module.x[0],
            PolyMatrix::from_ints(&[&[0, 3, 0, 0], &[0, 0, 2, 0], &[0, 0, 0, 1], &[0, 0, 0, 0]])
        );
        assert_eq!(
            module.y[0],
            PolyMatrix::from_ints(&[&[0, 0, 0, 0], &[1, 0, 0, 0], &[0, 2, 0, 0], &[0, 0, 3, 0]])
        );
        let h = &module.e[0] - &module.e[1];
        assert_eq!(h, PolyMatrix::diag(&[3, 1, -1, -3].map(LaurentPoly::constant)));
        for m in 1..=5 {
            assert!(check_braid_relations(&lie_rep(3, m).unwrap()).all_passed());
        }
        assert!(check_braid_relations(&lie_rep(4, 2).unwrap()).all_passed());
    }

    #[test]
    fn rejects_bad_input() {
        let module = gl_sym_power_module(2, 2).unwrap();
        let mut e = module.e.clone();
        e[0] = module.x[0].clone();
        assert!(braid_from_lie_rep(&e, &module.x, &module.y, 3).is_err());
        let x = vec![PolyMatrix::identity(3)];
        assert_eq!(
            braid_from_lie_rep(&module.e, &x, &module.y, 3).unwrap_err(),
            Error::NotNilpotent
        );
    }
}
