//! Dense matrices over the Laurent ring.
//!
//! Besides the usual arithmetic this module provides fraction-free determinants
//! and inverses, Kronecker, symmetric and exterior powers, exponentials of
//! nilpotent matrices, the central symmetry `A ↦ A♯` and characteristic polynomials.
//!
//! Symmetric and exterior power bases are ordered colexicographically: tuples are
//! compared starting from their largest entry, so the degree-two symmetric basis
//! of a three dimensional space reads `e11, e12, e22, e13, e23, e33`.

use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::laurent::LaurentPoly;
use crate::ring::{bareiss_det, cofactor_det, UniPoly};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct PolyMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<LaurentPoly>,
}

impl PolyMatrix {
    pub fn new(rows: usize, cols: usize, entries: Vec<LaurentPoly>) -> Result<Self> {
        if entries.len() != rows * cols {
            return Err(Error::Invalid(format!(
                "{} entries for a {rows}x{cols} matrix",
                entries.len()
            )));
        }
        Ok(PolyMatrix { rows, cols, entries })
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        PolyMatrix {
            rows,
            cols,
            entries: vec![LaurentPoly::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = PolyMatrix::zeros(n, n);
        for i in 0..n {
            m.set(i, i, LaurentPoly::one());
        }
        m
    }

    pub fn diag(values: &[LaurentPoly]) -> Self {
        let mut m = PolyMatrix::zeros(values.len(), values.len());
        for (i, v) in values.iter().enumerate() {
            m.set(i, i, v.clone());
        }
        m
    }

    /// Matrix unit `E_{ij}` (0-indexed) of size `n`.
    pub fn unit(n: usize, i: usize, j: usize) -> Self {
        let mut m = PolyMatrix::zeros(n, n);
        m.set(i, j, LaurentPoly::one());
        m
    }

    pub fn from_rows(rows: Vec<Vec<LaurentPoly>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::Invalid("ragged rows".to_string()));
        }
        Ok(PolyMatrix {
            rows: r,
            cols: c,
            entries: rows.into_iter().flatten().collect(),
        })
    }

    pub fn from_ints(rows: &[&[i64]]) -> Self {
        PolyMatrix::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&v| LaurentPoly::constant(v)).collect())
                .collect(),
        )
        .expect("rectangular integer rows")
    }

    /// Parses rows written as comma separated polynomial literals.
    pub fn parse_rows(rows: &[&str]) -> Result<Self> {
        let parsed = rows
            .iter()
            .map(|r| {
                r.trim()
                    .trim_start_matches('[')
                    .trim_end_matches(']')
                    .split(',')
                    .map(|s| s.trim().parse::<LaurentPoly>())
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        PolyMatrix::from_rows(parsed)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &LaurentPoly {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: LaurentPoly) {
        self.entries[i * self.cols + j] = v;
    }

    pub fn entries(&self) -> &[LaurentPoly] {
        &self.entries
    }

    pub fn to_rows(&self) -> Vec<Vec<LaurentPoly>> {
        self.entries.chunks(self.cols.max(1)).map(<[_]>::to_vec).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(LaurentPoly::is_zero)
    }

    pub fn is_identity(&self) -> bool {
        self.is_square() && *self == PolyMatrix::identity(self.rows)
    }

    pub fn map<F: Fn(&LaurentPoly) -> LaurentPoly>(&self, f: F) -> Self {
        PolyMatrix {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(f).collect(),
        }
    }

    pub fn try_map<F: Fn(&LaurentPoly) -> Result<LaurentPoly>>(&self, f: F) -> Result<Self> {
        Ok(PolyMatrix {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(f).collect::<Result<_>>()?,
        })
    }

    /// Entrywise substitution of polynomials for `t` and `q`.
    pub fn substitute_poly(&self, t_image: &LaurentPoly, q_image: &LaurentPoly) -> Result<Self> {
        self.try_map(|p| p.substitute_poly(t_image, q_image))
    }

    pub fn try_mul(&self, other: &PolyMatrix) -> Result<PolyMatrix> {
        if self.cols != other.rows {
            return Err(Error::Shape {
                op: "multiply",
                left: self.shape(),
                right: other.shape(),
            });
        }
        let mut out = PolyMatrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if b.is_zero() {
                        continue;
                    }
                    out.entries[i * other.cols + j] += &(a * b);
                }
            }
        }
        Ok(out)
    }

    pub fn try_add(&self, other: &PolyMatrix) -> Result<PolyMatrix> {
        self.zip_with(other, "add", |a, b| a + b)
    }

    pub fn try_sub(&self, other: &PolyMatrix) -> Result<PolyMatrix> {
        self.zip_with(other, "subtract", |a, b| a - b)
    }

    fn zip_with<F>(&self, other: &PolyMatrix, op: &'static str, f: F) -> Result<PolyMatrix>
    where
        F: Fn(&LaurentPoly, &LaurentPoly) -> LaurentPoly,
    {
        if self.shape() != other.shape() {
            return Err(Error::Shape {
                op,
                left: self.shape(),
                right: other.shape(),
            });
        }
        Ok(PolyMatrix {
            rows: self.rows,
            cols: self.cols,
            entries: self
                .entries
                .iter()
                .zip(&other.entries)
                .map(|(a, b)| f(a, b))
                .collect(),
        })
    }

    pub fn scale(&self, c: &LaurentPoly) -> PolyMatrix {
        self.map(|p| p * c)
    }

    pub fn pow(&self, k: usize) -> PolyMatrix {
        (0..k).fold(PolyMatrix::identity(self.rows), |acc, _| &acc * self)
    }

    pub fn transpose(&self) -> PolyMatrix {
        let mut out = PolyMatrix::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.set(j, i, self.get(i, j).clone());
            }
        }
        out
    }

    /// Block diagonal matrix `self ⊕ other`.
    pub fn direct_sum(&self, other: &PolyMatrix) -> PolyMatrix {
        let mut out = PolyMatrix::zeros(self.rows + other.rows, self.cols + other.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.set(i, j, self.get(i, j).clone());
            }
        }
        for i in 0..other.rows {
            for j in 0..other.cols {
                out.set(self.rows + i, self.cols + j, other.get(i, j).clone());
            }
        }
        out
    }

    /// `P A P⁻¹` for the permutation matrix sending `e_i` to `e_{perm[i]}`.
    pub fn permute(&self, perm: &[usize]) -> Result<PolyMatrix> {
        if !self.is_square() || perm.len() != self.rows {
            return Err(Error::Shape {
                op: "permute",
                left: self.shape(),
                right: (perm.len(), perm.len()),
            });
        }
        let mut out = PolyMatrix::zeros(self.rows, self.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.set(perm[i], perm[j], self.get(i, j).clone());
            }
        }
        Ok(out)
    }

    pub fn permutation_matrix(perm: &[usize]) -> PolyMatrix {
        let mut out = PolyMatrix::zeros(perm.len(), perm.len());
        for (i, &p) in perm.iter().enumerate() {
            out.set(p, i, LaurentPoly::one());
        }
        out
    }

    /// Submatrix on the given row and column indices.
    pub fn submatrix(&self, rows: &[usize], cols: &[usize]) -> PolyMatrix {
        let mut out = PolyMatrix::zeros(rows.len(), cols.len());
        for (a, &i) in rows.iter().enumerate() {
            for (b, &j) in cols.iter().enumerate() {
                out.set(a, b, self.get(i, j).clone());
            }
        }
        out
    }

    fn require_square(&self, op: &'static str) -> Result<()> {
        if self.is_square() {
            Ok(())
        } else {
            Err(Error::Shape {
                op,
                left: self.shape(),
                right: self.shape(),
            })
        }
    }

    /// Determinant via fraction-free Bareiss elimination.
    pub fn determinant(&self) -> Result<LaurentPoly> {
        self.require_square("determinant")?;
        Ok(bareiss_det(self.to_rows()))
    }

    /// Determinant via cofactor expansion; only sensible for small sizes.
    pub fn cofactor_determinant(&self) -> Result<LaurentPoly> {
        self.require_square("determinant")?;
        Ok(cofactor_det(&self.to_rows()))
    }

    /// Exact inverse; the determinant must be a unit `±t^a q^b`.
    ///
    /// Fraction-free Gauss–Jordan on `[A | I]` ends with `[d I | d A⁻¹]`.
    pub fn inverse(&self) -> Result<PolyMatrix> {
        self.require_square("inverse")?;
        let n = self.rows;
        let w = 2 * n;
        let mut m: Vec<Vec<LaurentPoly>> = (0..n)
            .map(|i| {
                let mut row: Vec<LaurentPoly> = (0..n).map(|j| self.get(i, j).clone()).collect();
                row.extend((0..n).map(|j| LaurentPoly::constant((i == j) as i64)));
                row
            })
            .collect();
        let mut prev = LaurentPoly::one();
        for k in 0..n {
            if m[k][k].is_zero() {
                match (k + 1..n).find(|&i| !m[i][k].is_zero()) {
                    Some(p) => m.swap(k, p),
                    None => return Err(Error::NotInvertible("0".to_string())),
                }
            }
            for i in 0..n {
                if i == k {
                    continue;
                }
                for j in 0..w {
                    if j == k {
                        continue;
                    }
                    let num = &(&m[k][k] * &m[i][j]) - &(&m[i][k] * &m[k][j]);
                    m[i][j] = num
                        .exact_div(&prev)
                        .expect("fraction-free elimination divides exactly");
                }
                m[i][k] = LaurentPoly::zero();
            }
            prev = m[k][k].clone();
        }
        let d = m[0][0].clone();
        if !d.is_unit() {
            return Err(Error::NotInvertible(d.to_string()));
        }
        let mut out = PolyMatrix::zeros(n, n);
        for (i, row) in m.iter().enumerate() {
            for j in 0..n {
                out.set(i, j, row[n + j].exact_div(&d)?);
            }
        }
        Ok(out)
    }

    /// Adjugate matrix from cofactors; an independent route to `det · A⁻¹`.
    pub fn adjugate(&self) -> Result<PolyMatrix> {
        self.require_square("adjugate")?;
        let n = self.rows;
        let mut out = PolyMatrix::zeros(n, n);
        for i in 0..n {
            for j in 0..n {
                let rows: Vec<usize> = (0..n).filter(|&r| r != j).collect();
                let cols: Vec<usize> = (0..n).filter(|&c| c != i).collect();
                let minor = self.submatrix(&rows, &cols).determinant()?;
                out.set(i, j, if (i + j) % 2 == 0 { minor } else { -minor });
            }
        }
        Ok(out)
    }

    /// Kronecker product; row `(i, k)` of the result is `i * b.rows + k`.
    pub fn tensor_product(&self, other: &PolyMatrix) -> PolyMatrix {
        let mut out = PolyMatrix::zeros(self.rows * other.rows, self.cols * other.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let a = self.get(i, j);
                if a.is_zero() {
                    continue;
                }
                for k in 0..other.rows {
                    for l in 0..other.cols {
                        out.set(i * other.rows + k, j * other.cols + l, a * other.get(k, l));
                    }
                }
            }
        }
        out
    }

    /// Action on the m-th symmetric power in the unnormalized symmetrized basis.
    pub fn sym_power(&self, m: usize) -> Result<PolyMatrix> {
        self.require_square("sym_power")?;
        let index = SymIndex::new(self.rows, m);
        let dim = index.len();
        let mut out = PolyMatrix::zeros(dim, dim);
        for (col, alpha) in index.tuples().iter().enumerate() {
            let perms = distinct_permutations(alpha);
            for (row, beta) in index.tuples().iter().enumerate() {
                let mut acc = LaurentPoly::zero();
                for p in &perms {
                    let mut prod = LaurentPoly::one();
                    for (b, a) in beta.iter().zip(p) {
                        let e = self.get(b - 1, a - 1);
                        if e.is_zero() {
                            prod = LaurentPoly::zero();
                            break;
                        }
                        prod = &prod * e;
                    }
                    acc += &prod;
                }
                out.set(row, col, acc);
            }
        }
        Ok(out)
    }

    /// Action on the m-th exterior power: the m×m minors in colex order.
    pub fn ext_power(&self, m: usize) -> Result<PolyMatrix> {
        self.require_square("ext_power")?;
        if m > self.rows {
            return Err(Error::Invalid(format!(
                "exterior power {m} of a {}-dimensional space",
                self.rows
            )));
        }
        let index = ExtIndex::new(self.rows, m);
        let dim = index.len();
        let mut out = PolyMatrix::zeros(dim, dim);
        for (r, rows) in index.tuples().iter().enumerate() {
            let rows: Vec<usize> = rows.iter().map(|i| i - 1).collect();
            for (c, cols) in index.tuples().iter().enumerate() {
                let cols: Vec<usize> = cols.iter().map(|i| i - 1).collect();
                out.set(r, c, self.submatrix(&rows, &cols).determinant()?);
            }
        }
        Ok(out)
    }

    /// `exp(A) = Σ A^k / k!` for nilpotent `A`.
    pub fn exp_nilpotent(&self) -> Result<PolyMatrix> {
        self.require_square("exp_nilpotent")?;
        let n = self.rows;
        if !self.pow(n).is_zero() {
            return Err(Error::NotNilpotent);
        }
        let mut out = PolyMatrix::identity(n);
        let mut power = PolyMatrix::identity(n);
        let mut factorial = BigInt::from(1);
        for k in 1..=n {
            power = &power * self;
            if power.is_zero() {
                return Ok(out);
            }
            if k == n {
                break;
            }
            factorial *= k;
            let term = power
                .try_map(|p| p.div_integer(&factorial))
                .map_err(|_| Error::InexactFactorial)?;
            out = &out + &term;
        }
        Err(Error::NotNilpotent)
    }

    /// Central symmetry `a♯_{km} = a_{n-k, n-m}`.
    pub fn sharp(&self) -> PolyMatrix {
        let mut out = PolyMatrix::zeros(self.rows, self.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.set(self.rows - 1 - i, self.cols - 1 - j, self.get(i, j).clone());
            }
        }
        out
    }

    /// `det(C + Σ λ_k E_kk)` expanded as `det C + Σ_S λ_S · det C_{S̄}`,
    /// where `C_{S̄}` is the principal minor with the rows and columns of `S` removed.
    pub fn generalized_char_poly(&self, lambdas: &[LaurentPoly]) -> Result<LaurentPoly> {
        self.require_square("generalized_char_poly")?;
        let n = self.rows;
        if lambdas.len() != n {
            return Err(Error::Shape {
                op: "generalized_char_poly",
                left: self.shape(),
                right: (lambdas.len(), lambdas.len()),
            });
        }
        let mut acc = LaurentPoly::zero();
        for mask in 0u64..(1u64 << n) {
            let mut weight = LaurentPoly::one();
            let mut rest = Vec::new();
            for (i, lambda) in lambdas.iter().enumerate() {
                if mask & (1 << i) != 0 {
                    weight = &weight * lambda;
                } else {
                    rest.push(i);
                }
            }
            if weight.is_zero() {
                continue;
            }
            let minor = self.submatrix(&rest, &rest).determinant()?;
            acc += &(&weight * &minor);
        }
        Ok(acc)
    }

    /// `det(C + diag(λ))` computed directly.
    pub fn generalized_char_poly_direct(&self, lambdas: &[LaurentPoly]) -> Result<LaurentPoly> {
        if lambdas.len() != self.rows {
            return Err(Error::Shape {
                op: "generalized_char_poly",
                left: self.shape(),
                right: (lambdas.len(), lambdas.len()),
            });
        }
        self.try_add(&PolyMatrix::diag(lambdas))?.determinant()
    }

    /// `det(x I - A)` as a polynomial in `x` over the Laurent ring.
    pub fn char_poly(&self) -> Result<UniPoly> {
        self.require_square("char_poly")?;
        let n = self.rows;
        let m: Vec<Vec<UniPoly>> = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| {
                        let c = -self.get(i, j);
                        if i == j {
                            UniPoly::new(vec![c, LaurentPoly::one()])
                        } else {
                            UniPoly::constant(c)
                        }
                    })
                    .collect()
            })
            .collect();
        Ok(bareiss_det(m))
    }

    /// The matrix difference `self - other` when shapes agree.
    pub fn difference(&self, other: &PolyMatrix) -> Result<PolyMatrix> {
        self.try_sub(other)
    }

    pub fn to_json(&self) -> Value {
        json!({
            "rows": self.rows,
            "cols": self.cols,
            "entries": self.to_rows().iter().map(|r| r.iter().map(LaurentPoly::to_json).collect::<Vec<_>>()).collect::<Vec<_>>(),
        })
    }

    pub fn from_json(v: &Value) -> Result<Self> {
        let bad = |msg: &str| Error::Parse {
            pos: 0,
            msg: msg.to_string(),
        };
        let rows = v
            .get("entries")
            .and_then(Value::as_array)
            .ok_or_else(|| bad("missing entries"))?;
        let parsed = rows
            .iter()
            .map(|r| {
                r.as_array()
                    .ok_or_else(|| bad("row is not an array"))?
                    .iter()
                    .map(LaurentPoly::from_json)
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        PolyMatrix::from_rows(parsed)
    }

    pub fn to_latex(&self) -> String {
        let body: Vec<String> = self
            .to_rows()
            .iter()
            .map(|r| r.iter().map(LaurentPoly::to_latex).collect::<Vec<_>>().join("&") + "\\\\")
            .collect();
        format!(
            "\\left(\\begin{{smallmatrix}}\n{}\n\\end{{smallmatrix}}\\right)",
            body.join("\n")
        )
    }

    /// Positions `(i, j)` (0-indexed) where two equally shaped matrices differ.
    pub fn mismatches(&self, other: &PolyMatrix) -> Vec<(usize, usize)> {
        if self.shape() != other.shape() {
            return vec![];
        }
        let mut out = Vec::new();
        for i in 0..self.rows {
            for j in 0..self.cols {
                if self.get(i, j) != other.get(i, j) {
                    out.push((i, j));
                }
            }
        }
        out
    }
}

impl fmt::Display for PolyMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, row) in self.to_rows().iter().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            let cells: Vec<String> = row.iter().map(ToString::to_string).collect();
            write!(f, "[{}]", cells.join(", "))?;
        }
        Ok(())
    }
}

impl Mul<&PolyMatrix> for &PolyMatrix {
    type Output = PolyMatrix;

    /// Panics on a shape mismatch; use [`PolyMatrix::try_mul`] for a checked product.
    fn mul(self, rhs: &PolyMatrix) -> PolyMatrix {
        self.try_mul(rhs).unwrap_or_else(|e| panic!("{e}"))
    }
}

impl Add<&PolyMatrix> for &PolyMatrix {
    type Output = PolyMatrix;
    fn add(self, rhs: &PolyMatrix) -> PolyMatrix {
        self.try_add(rhs).unwrap_or_else(|e| panic!("{e}"))
    }
}

impl Sub<&PolyMatrix> for &PolyMatrix {
    type Output = PolyMatrix;
    fn sub(self, rhs: &PolyMatrix) -> PolyMatrix {
        self.try_sub(rhs).unwrap_or_else(|e| panic!("{e}"))
    }
}

impl Neg for &PolyMatrix {
    type Output = PolyMatrix;
    fn neg(self) -> PolyMatrix {
        self.map(|p| -p)
    }
}

/// Basis of the m-th symmetric power of an n-dimensional space: nondecreasing
/// 1-based tuples in colex order.
#[derive(Clone, Debug)]
pub struct SymIndex {
    n: usize,
    tuples: Vec<Vec<usize>>,
    lookup: HashMap<Vec<usize>, usize>,
}

impl SymIndex {
    pub fn new(n: usize, m: usize) -> Self {
        let mut tuples = Vec::new();
        let mut cur = Vec::with_capacity(m);
        gen_tuples(n, m, 1, false, &mut cur, &mut tuples);
        colex_sort(&mut tuples);
        let lookup = tuples.iter().cloned().enumerate().map(|(i, t)| (t, i)).collect();
        SymIndex { n, tuples, lookup }
    }

    /// Degree-two basis `(k, r)`, `k ≤ r`.
    pub fn pairs(n: usize) -> Self {
        SymIndex::new(n, 2)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.tuples.len()
    }

    pub fn is_empty(&self) -> bool {
        self.tuples.is_empty()
    }

    pub fn tuples(&self) -> &[Vec<usize>] {
        &self.tuples
    }

    /// Position of a tuple given in any order.
    pub fn position(&self, tuple: &[usize]) -> Option<usize> {
        let mut key = tuple.to_vec();
        key.sort_unstable();
        self.lookup.get(&key).copied()
    }
}

/// Basis of the m-th exterior power: strictly increasing 1-based tuples in colex order.
#[derive(Clone, Debug)]
pub struct ExtIndex {
    n: usize,
    tuples: Vec<Vec<usize>>,
}

impl ExtIndex {
    pub fn new(n: usize, m: usize) -> Self {
        let mut tuples = Vec::new();
        let mut cur = Vec::with_capacity(m);
        gen_tuples(n, m, 1, true, &mut cur, &mut tuples);
        colex_sort(&mut tuples);
        ExtIndex { n, tuples }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.tuples.len()
    }

    pub fn is_empty(&self) -> bool {
        self.tuples.is_empty()
    }

    pub fn tuples(&self) -> &[Vec<usize>] {
        &self.tuples
    }

    pub fn position(&self, tuple: &[usize]) -> Option<usize> {
        self.tuples.iter().position(|t| t == tuple)
    }
}

fn gen_tuples(n: usize, m: usize, start: usize, strict: bool, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
    if cur.len() == m {
        out.push(cur.clone());
        return;
    }
    for v in start..=n {
        cur.push(v);
        gen_tuples(n, m, if strict { v + 1 } else { v }, strict, cur, out);
        cur.pop();
    }
}

fn colex_sort(tuples: &mut [Vec<usize>]) {
    tuples.sort_by(|a, b| a.iter().rev().cmp(b.iter().rev()));
}

/// All distinct orderings of a multiset, starting from its sorted form.
fn distinct_permutations(items: &[usize]) -> Vec<Vec<usize>> {
    let mut cur = items.to_vec();
    cur.sort_unstable();
    let mut out = vec![cur.clone()];
    loop {
        let Some(i) = (1..cur.len()).rev().find(|&i| cur[i - 1] < cur[i]) else {
            return out;
        };
        let j = (i..cur.len()).rev().find(|&j| cur[j] > cur[i - 1]).unwrap();
        cur.swap(i - 1, j);
        cur[i..].reverse();
        out.push(cur.clone());
    }
}

impl fmt::Debug for PolyMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::laurent::lp;

    fn pm(rows: &[&str]) -> PolyMatrix {
        PolyMatrix::parse_rows(rows).unwrap()
    }

    #[test]
    fn product_example() {
        let a = pm(&["-t, t", "0, 1"]);
        let b = pm(&["1, 0", "1, -t"]);
        assert_eq!(&a * &b.pow(3), pm(&["t^3-t^2, -t^4", "t^2-t+1, -t^3"]));
        assert_eq!(&a * &PolyMatrix::identity(2), a);
        assert!(a.try_mul(&PolyMatrix::identity(3)).is_err());
    }

    #[test]
    fn direct_sum_places_blocks() {
        let m = PolyMatrix::identity(2).direct_sum(&pm(&["1, 0", "1, -t"]));
        assert_eq!(m.get(3, 2), &lp("1"));
        assert_eq!(m.get(3, 3), &lp("-t"));
        assert_eq!(m.rows(), 4);
    }

    #[test]
    fn inverse_examples() {
        let a = pm(&["-t, t", "0, 1"]);
        assert_eq!(a.inverse().unwrap(), pm(&["-t^-1, 1", "0, 1"]));
        assert!(PolyMatrix::identity(4).inverse().unwrap().is_identity());
        let c3 = PolyMatrix::from_ints(&[&[1, -1, 0], &[0, 1, 0], &[0, -1, 1]]);
        assert_eq!(
            c3.inverse().unwrap(),
            PolyMatrix::from_ints(&[&[1, 1, 0], &[0, 1, 0], &[0, 1, 1]])
        );
        assert!(matches!(pm(&["1, 1", "0, 1+t"]).inverse(), Err(Error::NotInvertible(_))));
        let p = pm(&["0, 1, 0", "t, 0, 0", "0, 0, q"]);
        assert!((&p * &p.inverse().unwrap()).is_identity());
    }

    #[test]
    fn inverse_agrees_with_adjugate() {
        let a = pm(&["1-t, t, 0", "1, 0, 0", "0, q, -t*q"]);
        let det = a.determinant().unwrap();
        assert_eq!(a.inverse().unwrap().scale(&det), a.adjugate().unwrap());
    }

    #[test]
    fn tensor_examples() {
        assert!(PolyMatrix::identity(2).tensor_product(&PolyMatrix::identity(2)).is_identity());
        let n = PolyMatrix::unit(2, 0, 1);
        assert_eq!(n.tensor_product(&n), PolyMatrix::unit(4, 0, 3));
        let a = pm(&["-t, t", "0, 1"]);
        let aa = a.tensor_product(&a);
        let sym = pm(&["0", "1", "1", "0"]);
        let image = &aa * &sym;
        assert_eq!(image.get(1, 0), image.get(2, 0));
    }

    #[test]
    fn sym_power_examples() {
        let a = pm(&["-t, t", "0, 1"]);
        assert_eq!(
            a.sym_power(2).unwrap(),
            pm(&["t^2, -2*t^2, t^2", "0, -t, t", "0, 0, 1"])
        );
        assert!(PolyMatrix::identity(3).sym_power(2).unwrap().is_identity());
        let u = PolyMatrix::from_ints(&[&[1, 1], &[0, 1]]);
        assert_eq!(
            u.sym_power(3).unwrap(),
            PolyMatrix::from_ints(&[&[1, 3, 3, 1], &[0, 1, 2, 1], &[0, 0, 1, 1], &[0, 0, 0, 1]])
        );
    }

    #[test]
    fn sym_index_is_colex() {
        let idx = SymIndex::pairs(3);
        let expected: Vec<Vec<usize>> =
            vec![vec![1, 1], vec![1, 2], vec![2, 2], vec![1, 3], vec![2, 3], vec![3, 3]];
        assert_eq!(idx.tuples(), expected.as_slice());
        assert_eq!(idx.position(&[3, 1]), Some(3));
        assert_eq!(ExtIndex::new(4, 2).tuples()[3], vec![1, 4]);
    }

    #[test]
    fn ext_power_examples() {
        let s1 = pm(&["-t, t, 0", "0, 1, 0", "0, 0, 1"]);
        let s2 = pm(&["1, 0, 0", "1, -t, t", "0, 0, 1"]);
        assert_eq!(s1.ext_power(2).unwrap(), pm(&["-t, 0, 0", "0, -t, t", "0, 0, 1"]));
        assert_eq!(s2.ext_power(2).unwrap(), pm(&["-t, t, 0", "0, 1, 0", "0, 1, -t"]));
        let top = s2.ext_power(3).unwrap();
        assert_eq!(top, PolyMatrix::diag(&[s2.determinant().unwrap()]));
    }

    #[test]
    fn exp_examples() {
        assert_eq!(
            PolyMatrix::unit(2, 0, 1).exp_nilpotent().unwrap(),
            PolyMatrix::from_ints(&[&[1, 1], &[0, 1]])
        );
        assert!(PolyMatrix::zeros(3, 3).exp_nilpotent().unwrap().is_identity());
        let x = PolyMatrix::from_ints(&[&[0, 3, 0, 0], &[0, 0, 2, 0], &[0, 0, 0, 1], &[0, 0, 0, 0]]);
        assert_eq!(
            x.exp_nilpotent().unwrap(),
            PolyMatrix::from_ints(&[&[1, 3, 3, 1], &[0, 1, 2, 1], &[0, 0, 1, 1], &[0, 0, 0, 1]])
        );
        assert_eq!(PolyMatrix::identity(2).exp_nilpotent(), Err(Error::NotNilpotent));
        let jordan = PolyMatrix::from_ints(&[&[0, 1, 0], &[0, 0, 1], &[0, 0, 0]]);
        assert_eq!(jordan.exp_nilpotent(), Err(Error::InexactFactorial));
        let even = jordan.scale(&lp("2"));
        assert_eq!(even.exp_nilpotent().unwrap().get(0, 2), &lp("2"));
    }

    #[test]
    fn sharp_examples() {
        let d = PolyMatrix::diag(&[lp("t"), lp("q"), lp("1")]);
        assert_eq!(d.sharp(), PolyMatrix::diag(&[lp("1"), lp("q"), lp("t")]));
        assert_eq!(
            PolyMatrix::from_ints(&[&[1, 1], &[0, 1]]).sharp(),
            PolyMatrix::from_ints(&[&[1, 0], &[1, 1]])
        );
        let a = pm(&["t, 1, 0", "q, 2, t", "0, 1, 1"]);
        assert_eq!(a.sharp().sharp(), a);
    }

    #[test]
    fn char_poly_examples() {
        let cp = PolyMatrix::identity(2).char_poly().unwrap();
        assert_eq!(cp, UniPoly::from_roots(&[(lp("1"), 2)]));
        let b = pm(&["-t, t, 0", "0, 1, 0", "0, 0, 1"]);
        assert_eq!(
            b.char_poly().unwrap(),
            UniPoly::from_roots(&[(lp("-t"), 1), (lp("1"), 2)])
        );
    }

    #[test]
    fn generalized_char_poly_examples() {
        let x = lp("t*q");
        let lambdas = vec![x.clone(); 3];
        assert_eq!(
            PolyMatrix::zeros(3, 3).generalized_char_poly(&lambdas).unwrap(),
            x.pow(3).unwrap()
        );
        let c = pm(&["1, 2, 0", "t, 0, q", "3, 1, 1"]);
        assert_eq!(
            c.generalized_char_poly(&lambdas).unwrap(),
            c.generalized_char_poly_direct(&lambdas).unwrap()
        );
        assert!(c.generalized_char_poly(&lambdas[..2]).is_err());
    }

    #[test]
    fn renders_text_json_latex() {
        let a = pm(&["1-t, t", "1, 0"]);
        assert_eq!(a.to_string(), "[-t + 1, t]\n[1, 0]");
        assert_eq!(PolyMatrix::from_json(&a.to_json()).unwrap(), a);
        assert!(a.to_latex().contains("-t+1&t\\\\"));
    }
}
