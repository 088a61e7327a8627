//! Integral domains with exact division, fraction-free elimination over them,
//! and univariate polynomials used for characteristic polynomials.

use std::fmt;

use crate::laurent::LaurentPoly;

/// A commutative integral domain whose division is defined when exact.
pub trait ExactRing: Clone + PartialEq {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;
    /// `Some(c)` with `self = other * c`, `None` when no such `c` exists.
    fn div_exact(&self, other: &Self) -> Option<Self>;
}

impl ExactRing for LaurentPoly {
    fn zero() -> Self {
        LaurentPoly::zero()
    }
    fn one() -> Self {
        LaurentPoly::one()
    }
    fn is_zero(&self) -> bool {
        LaurentPoly::is_zero(self)
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn sub(&self, other: &Self) -> Self {
        self - other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn neg(&self) -> Self {
        -self
    }
    fn div_exact(&self, other: &Self) -> Option<Self> {
        self.exact_div(other).ok()
    }
}

/// Determinant by Bareiss elimination with row swaps.
///
/// Every interior division is exact in an integral domain; a failed division
/// indicates a bug in the ring implementation and panics.
pub fn bareiss_det<R: ExactRing>(mut m: Vec<Vec<R>>) -> R {
    let n = m.len();
    if n == 0 {
        return R::one();
    }
    let mut sign_negative = false;
    let mut prev = R::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&i| !m[i][k].is_zero()) {
                Some(p) => {
                    m.swap(k, p);
                    sign_negative = !sign_negative;
                }
                None => return R::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = m[k][k].mul(&m[i][j]).sub(&m[i][k].mul(&m[k][j]));
                m[i][j] = num
                    .div_exact(&prev)
                    .expect("Bareiss division is exact in an integral domain");
            }
            m[i][k] = R::zero();
        }
        prev = m[k][k].clone();
    }
    let d = m[n - 1][n - 1].clone();
    if sign_negative {
        d.neg()
    } else {
        d
    }
}

/// Determinant by Laplace expansion along the first row; exponential, used as an oracle.
pub fn cofactor_det<R: ExactRing>(m: &[Vec<R>]) -> R {
    let n = m.len();
    if n == 0 {
        return R::one();
    }
    if n == 1 {
        return m[0][0].clone();
    }
    let mut acc = R::zero();
    for j in 0..n {
        if m[0][j].is_zero() {
            continue;
        }
        let minor: Vec<Vec<R>> = m[1..]
            .iter()
            .map(|row| {
                row.iter()
                    .enumerate()
                    .filter(|(c, _)| *c != j)
                    .map(|(_, v)| v.clone())
                    .collect()
            })
            .collect();
        let term = m[0][j].mul(&cofactor_det(&minor));
        acc = if j % 2 == 0 { acc.add(&term) } else { acc.sub(&term) };
    }
    acc
}

/// Polynomial `Σ coeffs[k] x^k` over the Laurent ring; no trailing zero coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct UniPoly {
    coeffs: Vec<LaurentPoly>,
}

impl UniPoly {
    pub fn new(mut coeffs: Vec<LaurentPoly>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        UniPoly { coeffs }
    }

    pub fn constant(c: LaurentPoly) -> Self {
        UniPoly::new(vec![c])
    }

    /// `x - root`
    pub fn linear(root: &LaurentPoly) -> Self {
        UniPoly::new(vec![-root, LaurentPoly::one()])
    }

    pub fn x() -> Self {
        UniPoly::new(vec![LaurentPoly::zero(), LaurentPoly::one()])
    }

    pub fn coeffs(&self) -> &[LaurentPoly] {
        &self.coeffs
    }

    /// Degree in `x`; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Product of `(x - r)^k` over the given roots with multiplicities.
    pub fn from_roots(roots: &[(LaurentPoly, usize)]) -> Self {
        let mut acc = <UniPoly as ExactRing>::one();
        for (r, k) in roots {
            for _ in 0..*k {
                acc = acc.mul(&UniPoly::linear(r));
            }
        }
        acc
    }

    pub fn pow(&self, k: usize) -> Self {
        (0..k).fold(<UniPoly as ExactRing>::one(), |acc, _| acc.mul(self))
    }

    /// Value at `x = v`.
    pub fn eval(&self, v: &LaurentPoly) -> LaurentPoly {
        self.coeffs
            .iter()
            .rev()
            .fold(LaurentPoly::zero(), |acc, c| &(&acc * v) + c)
    }
}

impl ExactRing for UniPoly {
    fn zero() -> Self {
        UniPoly::default()
    }
    fn one() -> Self {
        UniPoly::constant(LaurentPoly::one())
    }
    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
    fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let zero = LaurentPoly::zero();
        UniPoly::new(
            (0..n)
                .map(|k| self.coeffs.get(k).unwrap_or(&zero) + other.coeffs.get(k).unwrap_or(&zero))
                .collect(),
        )
    }
    fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }
    fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return UniPoly::zero();
        }
        let mut out = vec![LaurentPoly::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += &(a * b);
            }
        }
        UniPoly::new(out)
    }
    fn neg(&self) -> Self {
        UniPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
    fn div_exact(&self, other: &Self) -> Option<Self> {
        let db = other.degree()?;
        let lb = &other.coeffs[db];
        let mut rem = self.coeffs.clone();
        let Some(da) = self.degree() else {
            return Some(UniPoly::zero());
        };
        if da < db {
            return None;
        }
        let mut quot = vec![LaurentPoly::zero(); da - db + 1];
        for k in (0..=da - db).rev() {
            let lead = &rem[k + db];
            if lead.is_zero() {
                continue;
            }
            let c = lead.exact_div(lb).ok()?;
            for (j, b) in other.coeffs.iter().enumerate() {
                rem[k + j] -= &(&c * b);
            }
            quot[k] = c;
        }
        if rem.iter().any(|c| !c.is_zero()) {
            return None;
        }
        Some(UniPoly::new(quot))
    }
}

impl fmt::Display for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match k {
                0 => write!(f, "({c})")?,
                1 => write!(f, "({c})*x")?,
                _ => write!(f, "({c})*x^{k}")?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::laurent::lp;

    fn grid(rows: &[&[&str]]) -> Vec<Vec<LaurentPoly>> {
        rows.iter().map(|r| r.iter().map(|s| lp(s)).collect()).collect()
    }

    #[test]
    fn bareiss_matches_cofactor() {
        let m = grid(&[&["0", "t", "1"], &["q", "1", "t"], &["1", "0", "t*q"]]);
        assert_eq!(bareiss_det(m.clone()), cofactor_det(&m));
        assert_eq!(bareiss_det(grid(&[&["0", "1"], &["1", "0"]])), lp("-1"));
        assert_eq!(bareiss_det(grid(&[&["t", "t"], &["1", "1"]])), lp("0"));
    }

    #[test]
    fn unipoly_division() {
        let a = UniPoly::from_roots(&[(lp("t"), 2), (lp("q"), 1)]);
        let b = UniPoly::linear(&lp("t"));
        let c = a.div_exact(&b).unwrap();
        assert_eq!(c, UniPoly::from_roots(&[(lp("t"), 1), (lp("q"), 1)]));
        assert!(a.div_exact(&UniPoly::linear(&lp("1"))).is_none());
        assert_eq!(a.eval(&lp("q")), LaurentPoly::zero());
    }
}
