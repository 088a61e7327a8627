use crate::error::{Error, Result};
use crate::laurent::{lp, LaurentPoly};
use crate::polymatrix::{ExtIndex, PolyMatrix};

use super::Representation;

/// Parameterization of the Lawrence–Krammer action on `F_{j,k}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LkNotation {
    /// Burau parameter `t`, quantization parameter `q`; eigenvalue `qt²` on `F_{i,i+1}`.
    New,
    /// The older convention with the roles of the letters exchanged; eigenvalue `-tq²`.
    Bigelow,
}

impl LkNotation {
    pub fn name(self) -> &'static str {
        match self {
            LkNotation::New => "new",
            LkNotation::Bigelow => "bigelow",
        }
    }
}

struct Coefficients {
    /// `i = j-1`: coefficients of `F_{i,k}`, `F_{i,j}`, `F_{j,k}`.
    below: [LaurentPoly; 3],
    /// `i = k-1 ≠ j`: coefficients of `F_{j,i}`, `F_{j,k}`, `F_{i,k}`.
    inside: [LaurentPoly; 3],
    /// `i = j = k-1`.
    diagonal: LaurentPoly,
}

fn coefficients(notation: LkNotation) -> Coefficients {
    match notation {
        LkNotation::New => Coefficients {
            below: [lp("t"), lp("t^2 - t"), lp("1 - t")],
            inside: [lp("t"), lp("1 - t"), lp("t^2*q - t*q")],
            diagonal: lp("t^2*q"),
        },
        LkNotation::Bigelow => Coefficients {
            below: [lp("q"), lp("q^2 - q"), lp("1 - q")],
            inside: [lp("q"), lp("1 - q"), lp("q*t - q^2*t")],
            diagonal: lp("-t*q^2"),
        },
    }
}

/// Lawrence–Krammer representation on the basis `F_{j,k}`, `1 ≤ j < k ≤ n`, in colex order.
pub fn lk(n: usize, notation: LkNotation) -> Result<Representation> {
    if n < 2 {
        return Err(Error::Invalid(format!("{n} strands")));
    }
    let index = ExtIndex::new(n, 2);
    let dim = index.len();
    let pos = |a: usize, b: usize| index.position(&[a.min(b), a.max(b)]).expect("valid pair");
    let c = coefficients(notation);
    let gens = (1..n)
        .map(|i| {
            let mut m = PolyMatrix::zeros(dim, dim);
            for (col, pair) in index.tuples().iter().enumerate() {
                let (j, k) = (pair[0], pair[1]);
                let mut put = |a: usize, b: usize, v: &LaurentPoly| m.set(pos(a, b), col, v.clone());
                if i == j && i + 1 == k {
                    put(j, k, &c.diagonal);
                } else if i + 1 == j {
                    put(i, k, &c.below[0]);
                    put(i, j, &c.below[1]);
                    put(j, k, &c.below[2]);
                } else if i == j {
                    put(j + 1, k, &LaurentPoly::one());
                } else if i + 1 == k {
                    put(j, i, &c.inside[0]);
                    put(j, k, &c.inside[1]);
                    put(i, k, &c.inside[2]);
                } else if i == k {
                    put(j, k + 1, &LaurentPoly::one());
                } else {
                    put(j, k, &LaurentPoly::one());
                }
            }
            m
        })
        .collect();
    Representation::new(n, format!("lk({n}, {})", notation.name()), gens)
}
