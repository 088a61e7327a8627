//! Braid group representations: Burau (unreduced and reduced), Lawrence–Krammer,
//! the quantized symmetric square of reduced Burau, the q-Pascal family of `B_3`,
//! and representations built from modules over `gl_k`.

mod burau;
mod krammer;
mod lie;
mod qpascal;
mod sym2;
mod verify;

pub use burau::{burau_reduced, burau_unreduced, BurauForm};
pub use krammer::{lk, LkNotation};
pub use lie::{braid_from_lie_rep, gl_sym_power_module, lie_rep, LieModule};
pub use qpascal::{
    d_matrix, qpascal_rep, qpascal_rep_unchecked, qpascal_sigma1, qpascal_sigma1_at, qpascal_sigma2,
    qpascal_t_form, LambdaSpec,
};
pub use sym2::{
    change_of_basis, change_of_basis_blocks, change_of_basis_case_split, change_of_basis_inverse,
    d_kn, quantize_square, sym2_quantized, BlockConvention,
};
pub use verify::{
    verify_bigelow_bridge, verify_ext_square_identity, verify_lk_equivalence, verify_spectrum,
    verify_stability,
};

use crate::braid::BraidWord;
use crate::error::{Error, Result};
use crate::laurent::LaurentPoly;
use crate::polymatrix::PolyMatrix;

/// Generator images of `B_n` together with their exact inverses.
#[derive(Clone, Debug, PartialEq)]
pub struct Representation {
    strands: usize,
    dim: usize,
    gens: Vec<PolyMatrix>,
    invs: Vec<PolyMatrix>,
    label: String,
}

impl Representation {
    /// Builds a representation from the images of `σ_1, …, σ_{n-1}`, inverting each.
    pub fn new(strands: usize, label: impl Into<String>, gens: Vec<PolyMatrix>) -> Result<Self> {
        let invs = gens.iter().map(PolyMatrix::inverse).collect::<Result<Vec<_>>>()?;
        Representation::from_parts(strands, label, gens, invs)
    }

    /// Builds a representation from images and inverses supplied by the caller.
    pub fn from_parts(
        strands: usize,
        label: impl Into<String>,
        gens: Vec<PolyMatrix>,
        invs: Vec<PolyMatrix>,
    ) -> Result<Self> {
        if strands < 2 {
            return Err(Error::Invalid(format!("{strands} strands")));
        }
        if gens.len() != strands - 1 || invs.len() != strands - 1 {
            return Err(Error::Invalid(format!(
                "{} generator images for {strands} strands",
                gens.len()
            )));
        }
        let dim = gens[0].rows();
        for (g, h) in gens.iter().zip(&invs) {
            if g.shape() != (dim, dim) || h.shape() != (dim, dim) {
                return Err(Error::Shape {
                    op: "representation",
                    left: (dim, dim),
                    right: g.shape(),
                });
            }
            if !(g * h).is_identity() {
                return Err(Error::NotInvertible("supplied inverse is wrong".into()));
            }
        }
        Ok(Representation {
            strands,
            dim,
            gens,
            invs,
            label: label.into(),
        })
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn with_label(mut self, label: impl Into<String>) -> Self {
        self.label = label.into();
        self
    }

    pub fn generators(&self) -> &[PolyMatrix] {
        &self.gens
    }

    pub fn inverses(&self) -> &[PolyMatrix] {
        &self.invs
    }

    /// Image of `σ_i`, `1 ≤ i ≤ n-1`.
    pub fn generator(&self, i: usize) -> &PolyMatrix {
        &self.gens[i - 1]
    }

    /// Image of `σ_i⁻¹`.
    pub fn inverse_generator(&self, i: usize) -> &PolyMatrix {
        &self.invs[i - 1]
    }

    /// Image of a signed letter.
    pub fn letter(&self, l: i64) -> &PolyMatrix {
        let i = l.unsigned_abs() as usize;
        if l > 0 {
            self.generator(i)
        } else {
            self.inverse_generator(i)
        }
    }

    pub fn image_of_word(&self, w: &BraidWord) -> Result<PolyMatrix> {
        if w.strands() != self.strands {
            return Err(Error::StrandMismatch(self.strands, w.strands()));
        }
        Ok(w.letters()
            .iter()
            .fold(PolyMatrix::identity(self.dim), |acc, &l| &acc * self.letter(l)))
    }

    /// Applies the substitution `t ↦ t_image`, `q ↦ q_image` to every matrix.
    ///
    /// Monomial images keep inverses in the ring; other images may make the
    /// result fail to be a representation over the Laurent ring.
    pub fn substitute(&self, t_image: &LaurentPoly, q_image: &LaurentPoly) -> Result<Self> {
        let sub = |m: &PolyMatrix| m.substitute_poly(t_image, q_image);
        Ok(Representation {
            strands: self.strands,
            dim: self.dim,
            gens: self.gens.iter().map(sub).collect::<Result<_>>()?,
            invs: self.invs.iter().map(sub).collect::<Result<_>>()?,
            label: format!("{}[t={t_image}, q={q_image}]", self.label),
        })
    }

    /// Same representation with one generator image replaced; used for negative controls.
    pub fn with_generator(&self, i: usize, image: PolyMatrix) -> Result<Self> {
        let mut gens = self.gens.clone();
        gens[i - 1] = image;
        Representation::new(self.strands, format!("{} (modified s{i})", self.label), gens)
    }
}

/// `exp(s·E_kk)` with `s = ln(-t)`: the identity with `-t` in slot `k` (1-based).
pub(crate) fn minus_t_slot(dim: usize, k: usize) -> PolyMatrix {
    let mut m = PolyMatrix::identity(dim);
    m.set(k - 1, k - 1, -LaurentPoly::t());
    m
}

/// `I + c·E_ij` with 1-based indices.
pub(crate) fn elementary(dim: usize, i: usize, j: usize, c: i64) -> PolyMatrix {
    let mut m = PolyMatrix::identity(dim);
    m.set(i - 1, j - 1, LaurentPoly::constant(c));
    m
}

pub(crate) fn q_inverse(p: &LaurentPoly) -> LaurentPoly {
    p.substitute_poly(&LaurentPoly::t(), &LaurentPoly::monomial(1, 0, -1))
        .expect("monomial substitution")
}
