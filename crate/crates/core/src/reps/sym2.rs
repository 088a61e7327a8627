use crate::error::{Error, Result};
use crate::laurent::LaurentPoly;
use crate::polymatrix::{PolyMatrix, SymIndex};

use super::{elementary, minus_t_slot, Representation};

/// `[S²(U)]_q`: every constant entry `±2` becomes `±(1+q)`.
pub fn quantize_square(m: &PolyMatrix) -> PolyMatrix {
    let two = LaurentPoly::constant(2);
    let one_plus_q = &LaurentPoly::one() + &LaurentPoly::q();
    m.map(|p| {
        if *p == two {
            one_plus_q.clone()
        } else if *p == -&two {
            -&one_plus_q
        } else {
            p.clone()
        }
    })
}

/// `D_{k,m}(q)`: scales `e^s_{kk}` of `S²(ℂ^m)` by `q`.
pub fn d_kn(k: usize, m: usize) -> PolyMatrix {
    let index = SymIndex::pairs(m);
    let mut d = PolyMatrix::identity(index.len());
    let p = index.position(&[k, k]).expect("1 ≤ k ≤ m");
    d.set(p, p, LaurentPoly::q());
    d
}

fn sq(m: &PolyMatrix) -> PolyMatrix {
    m.sym_power(2).expect("square input")
}

/// Quantized symmetric square of the conjugated reduced Burau representation of `B_n`:
/// `σ_k ↦ [S²(exp Y_{k-1})]_q S²(exp sE_kk) [S²(exp -X_k)]_q D_{k,n-1}(q)`.
pub fn sym2_quantized(n: usize) -> Result<Representation> {
    if n < 3 {
        return Err(Error::Invalid(format!(
            "quantized symmetric square needs at least 3 strands, got {n}"
        )));
    }
    let m = n - 1;
    let gens = (1..=m)
        .map(|k| {
            let mut g = sq(&minus_t_slot(m, k));
            if k > 1 {
                g = &quantize_square(&sq(&elementary(m, k, k - 1, 1))) * &g;
            }
            if k < m {
                g = &g * &quantize_square(&sq(&elementary(m, k, k + 1, -1)));
            }
            &g * &d_kn(k, m)
        })
        .collect();
    Representation::new(n, format!("sym2q({n})"), gens)
}

/// `C_n⁻¹`: column `w_{ij}` is `Σ_{i ≤ k ≤ r ≤ j} e^s_{kr}`, over `S²(ℂ^{n-1})`.
pub fn change_of_basis_inverse(n: usize) -> Result<PolyMatrix> {
    let index = pairs_for(n)?;
    let dim = index.len();
    let mut e = PolyMatrix::zeros(dim, dim);
    for (col, ij) in index.tuples().iter().enumerate() {
        for (row, kr) in index.tuples().iter().enumerate() {
            if ij[0] <= kr[0] && kr[1] <= ij[1] {
                e.set(row, col, LaurentPoly::one());
            }
        }
    }
    Ok(e)
}

/// `(C_n, C_n⁻¹)`, with `C_n` obtained by exact inversion.
pub fn change_of_basis(n: usize) -> Result<(PolyMatrix, PolyMatrix)> {
    let inv = change_of_basis_inverse(n)?;
    Ok((inv.inverse()?, inv))
}

/// `C_n` from the case-split expansion of each `e^s_{ij}` in the `w` basis:
/// the alternating sum for `j - i ≤ 1`, otherwise
/// `[-w_ii] + Σ_{i<r<j} (w_{i+1,r} - w_{ir}) + w_ij - w_{i+1,j}` with `-w_ii` only for `i > 1`.
///
/// This agrees with the inverse of [`change_of_basis_inverse`] for `n ≤ 4` only. From `n = 5`
/// on the inverse has `e^s_{ij} = w_ij - w_{i+1,j} - w_{i,j-1} + w_{i+1,j-1}` for `j - i ≥ 2`.
pub fn change_of_basis_case_split(n: usize) -> Result<PolyMatrix> {
    let index = pairs_for(n)?;
    let dim = index.len();
    let mut c = PolyMatrix::zeros(dim, dim);
    for (col, ij) in index.tuples().iter().enumerate() {
        let (i, j) = (ij[0], ij[1]);
        let mut add = |k: usize, r: usize, v: i64| {
            let row = index.position(&[k, r]).expect("pair in range");
            let cur = c.get(row, col).clone();
            c.set(row, col, &cur + &LaurentPoly::constant(v));
        };
        if j - i <= 1 {
            for k in i..=j {
                for r in k..=j {
                    let sign = if (i + j + k + r) % 2 == 0 { 1 } else { -1 };
                    add(k, r, sign);
                }
            }
        } else {
            if i > 1 {
                add(i, i, -1);
            }
            for r in i + 1..j {
                add(i, r, -1);
                add(i + 1, r, 1);
            }
            add(i, j, 1);
            add(i + 1, j, -1);
        }
    }
    Ok(c)
}

/// Reading of the off-diagonal blocks of the first block row of `C_n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BlockConvention {
    /// `e_{1r}⁻¹ = 0` for `r ≥ 2` and `e_{kr}⁻¹ = (-e_{kk}⁻¹, 0)` for `2 ≤ k < r`.
    Literal,
    /// `e_{k,k+1}⁻¹ = (-e_{kk}⁻¹, 0)` for every `k ≥ 1` and `e_{kr}⁻¹ = 0` for `r ≥ k + 2`;
    /// this is the exact inverse of `E_n`.
    Corrected,
}

/// `(E_n, E_n⁻¹)` assembled block by block; block `(k, r)` is `k × r` and
/// collects the pairs whose larger index is `k` (rows) and `r` (columns).
pub fn change_of_basis_blocks(n: usize, convention: BlockConvention) -> Result<(PolyMatrix, PolyMatrix)> {
    let index = pairs_for(n)?;
    let m = n - 1;
    let dim = index.len();
    let offset = |k: usize| (k - 1) * k / 2;
    let mut e = PolyMatrix::zeros(dim, dim);
    let mut c = PolyMatrix::zeros(dim, dim);
    for k in 1..=m {
        for r in k..=m {
            for a in 0..k {
                for b in 0..k {
                    if b <= a {
                        e.set(offset(k) + a, offset(r) + b, LaurentPoly::one());
                    }
                    let inv_kk = if a == b {
                        1
                    } else if a == b + 1 {
                        -1
                    } else {
                        0
                    };
                    let value = match convention {
                        _ if k == r => inv_kk,
                        BlockConvention::Literal if k == 1 => 0,
                        BlockConvention::Literal => -inv_kk,
                        BlockConvention::Corrected if r == k + 1 => -inv_kk,
                        BlockConvention::Corrected => 0,
                    };
                    if value != 0 {
                        c.set(offset(k) + a, offset(r) + b, LaurentPoly::constant(value));
                    }
                }
            }
        }
    }
    Ok((e, c))
}

fn pairs_for(n: usize) -> Result<SymIndex> {
    if n < 3 {
        return Err(Error::Invalid(format!("change of basis needs at least 3 strands, got {n}")));
    }
    Ok(SymIndex::pairs(n - 1))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::braid::check_braid_relations;
    use crate::reps::{burau_reduced, BurauForm};

    fn pm(rows: &[&str]) -> PolyMatrix {
        PolyMatrix::parse_rows(rows).unwrap()
    }

    #[test]
    fn three_strands() {
        let s = sym2_quantized(3).unwrap();
        assert_eq!(s.generator(1), &pm(&["t^2*q, -t^2*(1+q), t^2", "0, -t, t", "0, 0, 1"]));
        assert_eq!(s.generator(2), &pm(&["1, 0, 0", "1, -t, 0", "1, -t*(1+q), t^2*q"]));
        let (c, ci) = change_of_basis(3).unwrap();
        assert_eq!(c, pm(&["1, -1, 0", "0, 1, 0", "0, -1, 1"]));
        assert_eq!(ci, pm(&["1, 1, 0", "0, 1, 0", "0, 1, 1"]));
        assert!(sym2_quantized(2).is_err());
    }

    #[test]
    fn q_one_is_plain_square() {
        for n in 3..=5 {
            let s = sym2_quantized(n).unwrap().substitute(&LaurentPoly::t(), &LaurentPoly::one()).unwrap();
            let b = burau_reduced(n, BurauForm::Conjugated).unwrap();
            for i in 1..n {
                assert_eq!(s.generator(i), &b.generator(i).sym_power(2).unwrap());
            }
        }
    }

    #[test]
    fn relations_and_bases() {
        for n in 3..=6 {
            assert!(check_braid_relations(&sym2_quantized(n).unwrap()).all_passed());
            let (c, ci) = change_of_basis(n).unwrap();
            assert_eq!(change_of_basis_case_split(n).unwrap() == c, n <= 4);
            let (e, einv) = change_of_basis_blocks(n, BlockConvention::Corrected).unwrap();
            assert_eq!(e, ci);
            assert_eq!(einv, c);
            let (e, literal) = change_of_basis_blocks(n, BlockConvention::Literal).unwrap();
            assert_eq!(e, ci);
            assert_ne!(literal, c);
        }
    }
}
