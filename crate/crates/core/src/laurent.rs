//! Sparse Laurent polynomials in `t` and `q` with big-integer coefficients,
//! normalized fractions of them, and q-combinatorics.
//!
//! The canonical text form lists terms in descending graded-lex order, e.g.
//! `t^4*q^2 - t^2*q + 1`. The same grammar is accepted by [`LaurentPoly::from_str`],
//! together with parentheses and integer powers.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde_json::{json, Value};

use crate::error::{Error, Result};

/// Exponent pair `t^et * q^eq`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
pub struct Monomial {
    pub et: i64,
    pub eq: i64,
}

impl Monomial {
    pub const ONE: Monomial = Monomial { et: 0, eq: 0 };

    pub fn new(et: i64, eq: i64) -> Self {
        Monomial { et, eq }
    }

    pub fn degree(&self) -> i64 {
        self.et + self.eq
    }


    pub fn inv(self) -> Monomial {
        Monomial::new(-self.et, -self.eq)
    }

    /// `true` when `self` divides `other` among ordinary monomials.
    fn divides(&self, other: &Monomial) -> bool {
        self.et <= other.et && self.eq <= other.eq
    }
}

impl Mul for Monomial {
    type Output = Monomial;

    fn mul(self, other: Monomial) -> Monomial {
        Monomial::new(self.et + other.et, self.eq + other.eq)
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.degree(), self.et, self.eq).cmp(&(other.degree(), other.et, other.eq))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Element of ℤ[t, t⁻¹, q, q⁻¹] stored as a map from monomials to nonzero coefficients.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct LaurentPoly {
    terms: BTreeMap<Monomial, BigInt>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        LaurentPoly::default()
    }

    pub fn one() -> Self {
        LaurentPoly::constant(1)
    }

    pub fn constant(c: i64) -> Self {
        LaurentPoly::term(BigInt::from(c), Monomial::ONE)
    }

    pub fn from_bigint(c: BigInt) -> Self {
        LaurentPoly::term(c, Monomial::ONE)
    }

    /// Single term `c * t^et * q^eq`.
    pub fn monomial(c: i64, et: i64, eq: i64) -> Self {
        LaurentPoly::term(BigInt::from(c), Monomial::new(et, eq))
    }

    pub fn term(c: BigInt, m: Monomial) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        LaurentPoly { terms }
    }

    pub fn t() -> Self {
        LaurentPoly::monomial(1, 1, 0)
    }

    pub fn q() -> Self {
        LaurentPoly::monomial(1, 0, 1)
    }

    /// Builds a polynomial from arbitrary terms, merging repeats and dropping zeros.
    pub fn from_terms<I: IntoIterator<Item = (Monomial, BigInt)>>(iter: I) -> Self {
        let mut p = LaurentPoly::zero();
        for (m, c) in iter {
            p.add_term(m, c);
        }
        p
    }

    pub fn terms(&self) -> &BTreeMap<Monomial, BigInt> {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.as_constant().is_some_and(|c| c.is_one())
    }

    pub fn coeff(&self, m: Monomial) -> BigInt {
        self.terms.get(&m).cloned().unwrap_or_default()
    }

    /// The constant value if the polynomial has no variable part.
    pub fn as_constant(&self) -> Option<BigInt> {
        match self.terms.len() {
            0 => Some(BigInt::zero()),
            1 => self.terms.get(&Monomial::ONE).cloned(),
            _ => None,
        }
    }

    pub fn as_monomial(&self) -> Option<(BigInt, Monomial)> {
        if self.terms.len() == 1 {
            self.terms.iter().next().map(|(m, c)| (c.clone(), *m))
        } else {
            None
        }
    }

    /// Units of the ring are exactly `±t^a q^b`.
    pub fn is_unit(&self) -> bool {
        self.as_monomial().is_some_and(|(c, _)| c.abs().is_one())
    }

    /// Greatest term under the graded-lex order.
    pub fn leading(&self) -> Option<(Monomial, &BigInt)> {
        self.terms.iter().next_back().map(|(m, c)| (*m, c))
    }

    pub fn lowest(&self) -> Option<(Monomial, &BigInt)> {
        self.terms.iter().next().map(|(m, c)| (*m, c))
    }

    /// Componentwise minimum exponents (the monomial content).
    pub fn min_exponents(&self) -> Monomial {
        let mut it = self.terms.keys();
        let Some(first) = it.next() else {
            return Monomial::ONE;
        };
        it.fold(*first, |acc, m| Monomial::new(acc.et.min(m.et), acc.eq.min(m.eq)))
    }

    pub fn max_exponents(&self) -> Monomial {
        let mut it = self.terms.keys();
        let Some(first) = it.next() else {
            return Monomial::ONE;
        };
        it.fold(*first, |acc, m| Monomial::new(acc.et.max(m.et), acc.eq.max(m.eq)))
    }

    /// Nonnegative gcd of the coefficients.
    pub fn content(&self) -> BigInt {
        self.terms
            .values()
            .fold(BigInt::zero(), |acc, c| acc.gcd(c))
    }

    fn add_term(&mut self, m: Monomial, c: BigInt) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(v) => {
                *v += c;
                if v.is_zero() {
                    self.terms.remove(&m);
                }
            }
            None => {
                self.terms.insert(m, c);
            }
        }
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return LaurentPoly::zero();
        }
        LaurentPoly {
            terms: self.terms.iter().map(|(m, v)| (*m, v * c)).collect(),
        }
    }

    pub fn scale_i64(&self, c: i64) -> Self {
        self.scale(&BigInt::from(c))
    }

    /// Multiplies by `t^et q^eq`.
    pub fn shift(&self, m: Monomial) -> Self {
        LaurentPoly {
            terms: self.terms.iter().map(|(k, v)| (k.mul(m), v.clone())).collect(),
        }
    }

    /// Divides every coefficient by `c`, failing unless all divisions are exact.
    pub fn div_integer(&self, c: &BigInt) -> Result<Self> {
        if c.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        let mut terms = BTreeMap::new();
        for (m, v) in &self.terms {
            let (quot, rem) = v.div_rem(c);
            if !rem.is_zero() {
                return Err(Error::NotDivisible);
            }
            terms.insert(*m, quot);
        }
        Ok(LaurentPoly { terms })
    }

    /// Integer power; negative exponents are allowed only for units.
    pub fn pow(&self, e: i64) -> Result<Self> {
        if e < 0 {
            let (c, m) = self.as_monomial().ok_or(Error::NegativePower)?;
            if !c.abs().is_one() {
                return Err(Error::NegativePower);
            }
            let k = -e;
            let sign = if c.is_negative() && k % 2 == 1 { -1 } else { 1 };
            return Ok(LaurentPoly::term(
                BigInt::from(sign),
                Monomial::new(-m.et * k, -m.eq * k),
            ));
        }
        let mut result = LaurentPoly::one();
        let mut base = self.clone();
        let mut k = e;
        while k > 0 {
            if k & 1 == 1 {
                result = &result * &base;
            }
            k >>= 1;
            if k > 0 {
                base = &base * &base;
            }
        }
        Ok(result)
    }

    /// Exact quotient `self / b` in the Laurent ring.
    ///
    /// Both operands are shifted to ordinary polynomials and long division cancels
    /// leading terms under the graded-lex order; any leftover means "not divisible".
    pub fn exact_div(&self, b: &LaurentPoly) -> Result<LaurentPoly> {
        if b.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        if self.is_zero() {
            return Ok(LaurentPoly::zero());
        }
        if let Some((c, m)) = b.as_monomial() {
            return Ok(self.div_integer(&c)?.shift(m.inv()));
        }
        let ma = self.min_exponents();
        let mb = b.min_exponents();
        let mut rem = self.shift(ma.inv());
        let divisor = b.shift(mb.inv());
        let (lm_b, lc_b) = divisor.leading().map(|(m, c)| (m, c.clone())).unwrap();
        let mut quotient = LaurentPoly::zero();
        while let Some((lm_r, lc_r)) = rem.leading() {
            if !lm_b.divides(&lm_r) {
                return Err(Error::NotDivisible);
            }
            let (qc, r) = lc_r.div_rem(&lc_b);
            if !r.is_zero() {
                return Err(Error::NotDivisible);
            }
            let qm = Monomial::new(lm_r.et - lm_b.et, lm_r.eq - lm_b.eq);
            for (m, c) in &divisor.terms {
                rem.add_term(m.mul(qm), -(c * &qc));
            }
            quotient.add_term(qm, qc);
        }
        Ok(quotient.shift(Monomial::new(ma.et - mb.et, ma.eq - mb.eq)))
    }

    /// `true` when `b` divides `self` in the Laurent ring.
    pub fn divisible_by(&self, b: &LaurentPoly) -> bool {
        self.exact_div(b).is_ok()
    }

    /// Substitutes fractions for `t` and `q` and renormalizes.
    pub fn substitute(&self, t_image: &PolyFraction, q_image: &PolyFraction) -> Result<PolyFraction> {
        let mut acc = PolyFraction::zero();
        let mut tcache: BTreeMap<i64, PolyFraction> = BTreeMap::new();
        let mut qcache: BTreeMap<i64, PolyFraction> = BTreeMap::new();
        for (m, c) in &self.terms {
            let tp = match tcache.get(&m.et) {
                Some(v) => v.clone(),
                None => {
                    let v = t_image.pow(m.et)?;
                    tcache.insert(m.et, v.clone());
                    v
                }
            };
            let qp = match qcache.get(&m.eq) {
                Some(v) => v.clone(),
                None => {
                    let v = q_image.pow(m.eq)?;
                    qcache.insert(m.eq, v.clone());
                    v
                }
            };
            let term = PolyFraction::from_poly(LaurentPoly::from_bigint(c.clone()));
            acc = acc.add(&term.mul(&tp).mul(&qp));
        }
        Ok(acc)
    }

    /// Substitutes polynomials for `t` and `q`. Negative exponents require unit images.
    pub fn substitute_poly(&self, t_image: &LaurentPoly, q_image: &LaurentPoly) -> Result<LaurentPoly> {
        let mut acc = LaurentPoly::zero();
        for (m, c) in &self.terms {
            let part = &t_image.pow(m.et)? * &q_image.pow(m.eq)?;
            acc += &part.scale(c);
        }
        Ok(acc)
    }

    /// Exact rational evaluation at `t = t_val`, `q = q_val`.
    pub fn eval_rational(&self, t_val: &BigRational, q_val: &BigRational) -> Result<BigRational> {
        let mut acc = BigRational::zero();
        for (m, c) in &self.terms {
            let tp = rational_pow(t_val, m.et)?;
            let qp = rational_pow(q_val, m.eq)?;
            acc += BigRational::from_integer(c.clone()) * tp * qp;
        }
        Ok(acc)
    }

    pub fn to_json(&self) -> Value {
        Value::Array(
            self.terms
                .iter()
                .rev()
                .map(|(m, c)| json!({"c": bigint_to_json(c), "et": m.et, "eq": m.eq}))
                .collect(),
        )
    }

    pub fn from_json(v: &Value) -> Result<Self> {
        let bad = |msg: &str| Error::Parse {
            pos: 0,
            msg: msg.to_string(),
        };
        let arr = v.as_array().ok_or_else(|| bad("expected an array of terms"))?;
        let mut p = LaurentPoly::zero();
        for item in arr {
            let c = match item.get("c") {
                Some(Value::Number(n)) => n
                    .to_string()
                    .parse::<BigInt>()
                    .map_err(|_| bad("coefficient is not an integer"))?,
                Some(Value::String(s)) => s
                    .parse::<BigInt>()
                    .map_err(|_| bad("coefficient is not an integer"))?,
                _ => return Err(bad("missing coefficient")),
            };
            let et = item.get("et").and_then(Value::as_i64).ok_or_else(|| bad("missing et"))?;
            let eq = item.get("eq").and_then(Value::as_i64).ok_or_else(|| bad("missing eq"))?;
            p.add_term(Monomial::new(et, eq), c);
        }
        Ok(p)
    }

    /// LaTeX rendering of the expanded form, e.g. `t^{4}q^{2}-t^{2}q+1`.
    pub fn to_latex(&self) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, (m, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            if i == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push(if neg { '-' } else { '+' });
            }
            let abs = c.abs();
            let mono = latex_monomial(m);
            if mono.is_empty() {
                out.push_str(&abs.to_string());
            } else {
                if !abs.is_one() {
                    out.push_str(&abs.to_string());
                }
                out.push_str(&mono);
            }
        }
        out
    }
}

fn latex_monomial(m: &Monomial) -> String {
    let mut s = String::new();
    for (name, e) in [("t", m.et), ("q", m.eq)] {
        match e {
            0 => {}
            1 => s.push_str(name),
            _ => s.push_str(&format!("{name}^{{{e}}}")),
        }
    }
    s
}

fn bigint_to_json(c: &BigInt) -> Value {
    match i64::try_from(c) {
        Ok(v) => json!(v),
        Err(_) => Value::String(c.to_string()),
    }
}

fn rational_pow(x: &BigRational, e: i64) -> Result<BigRational> {
    if e < 0 && x.is_zero() {
        return Err(Error::ZeroSubstitution);
    }
    let base = if e < 0 { x.recip() } else { x.clone() };
    Ok(num_traits::pow(base, e.unsigned_abs() as usize))
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (m, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            if i == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, "{}", if neg { " - " } else { " + " })?;
            }
            let abs = c.abs();
            let mut parts = Vec::new();
            for (name, e) in [("t", m.et), ("q", m.eq)] {
                match e {
                    0 => {}
                    1 => parts.push(name.to_string()),
                    _ => parts.push(format!("{name}^{e}")),
                }
            }
            if parts.is_empty() {
                write!(f, "{abs}")?;
            } else {
                if !abs.is_one() {
                    write!(f, "{abs}*")?;
                }
                write!(f, "{}", parts.join("*"))?;
            }
        }
        Ok(())
    }
}

impl FromStr for LaurentPoly {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut p = PolyParser {
            chars: s.chars().collect(),
            pos: 0,
        };
        let value = p.sum()?;
        p.skip_ws();
        if p.pos < p.chars.len() {
            return Err(p.error("unexpected character"));
        }
        Ok(value)
    }
}

struct PolyParser {
    chars: Vec<char>,
    pos: usize,
}

impl PolyParser {
    fn error(&self, msg: &str) -> Error {
        Error::Parse {
            pos: self.pos,
            msg: msg.to_string(),
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.chars.len() && self.chars[self.pos].is_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.chars.get(self.pos).copied()
    }

    fn sum(&mut self) -> Result<LaurentPoly> {
        let mut acc = LaurentPoly::zero();
        let mut sign = 1;
        match self.peek() {
            Some('-') | Some('−') => {
                sign = -1;
                self.pos += 1;
            }
            Some('+') => self.pos += 1,
            None => return Err(self.error("empty expression")),
            _ => {}
        }
        loop {
            let term = self.product()?;
            if sign < 0 {
                acc -= &term;
            } else {
                acc += &term;
            }
            match self.peek() {
                Some('+') => {
                    sign = 1;
                    self.pos += 1;
                }
                Some('-') | Some('−') => {
                    sign = -1;
                    self.pos += 1;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn product(&mut self) -> Result<LaurentPoly> {
        let mut acc = self.factor()?;
        loop {
            match self.peek() {
                Some('*') => {
                    self.pos += 1;
                    acc = &acc * &self.factor()?;
                }
                Some(c) if c.is_ascii_digit() || c == 't' || c == 'q' || c == '(' => {
                    acc = &acc * &self.factor()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn factor(&mut self) -> Result<LaurentPoly> {
        let start = self.pos;
        let base = match self.peek() {
            Some('t') => {
                self.pos += 1;
                LaurentPoly::t()
            }
            Some('q') => {
                self.pos += 1;
                LaurentPoly::q()
            }
            Some('(') => {
                self.pos += 1;
                let inner = self.sum()?;
                if self.peek() != Some(')') {
                    return Err(self.error("expected ')'"));
                }
                self.pos += 1;
                inner
            }
            Some(c) if c.is_ascii_digit() => LaurentPoly::from_bigint(self.integer()?),
            _ => return Err(self.error("expected a term")),
        };
        if self.peek() == Some('^') {
            self.pos += 1;
            let e = self.exponent()?;
            return base.pow(e).map_err(|_| Error::Parse {
                pos: start,
                msg: "negative power of a non-unit".to_string(),
            });
        }
        Ok(base)
    }

    fn integer(&mut self) -> Result<BigInt> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.chars.len() && self.chars[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.error("expected digits"));
        }
        let text: String = self.chars[start..self.pos].iter().collect();
        text.parse::<BigInt>().map_err(|_| self.error("bad integer"))
    }

    fn exponent(&mut self) -> Result<i64> {
        let paren = self.peek() == Some('(');
        if paren {
            self.pos += 1;
        }
        let mut sign = 1;
        match self.peek() {
            Some('-') | Some('−') => {
                sign = -1;
                self.pos += 1;
            }
            Some('+') => self.pos += 1,
            _ => {}
        }
        let n = self.integer()?;
        let n = i64::try_from(&n).map_err(|_| self.error("exponent too large"))?;
        if paren {
            if self.peek() != Some(')') {
                return Err(self.error("expected ')'"));
            }
            self.pos += 1;
        }
        Ok(sign * n)
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident) => {
        impl $trait<LaurentPoly> for LaurentPoly {
            type Output = LaurentPoly;
            fn $method(self, rhs: LaurentPoly) -> LaurentPoly {
                (&self).$method(&rhs)
            }
        }
        impl $trait<&LaurentPoly> for LaurentPoly {
            type Output = LaurentPoly;
            fn $method(self, rhs: &LaurentPoly) -> LaurentPoly {
                (&self).$method(rhs)
            }
        }
        impl $trait<LaurentPoly> for &LaurentPoly {
            type Output = LaurentPoly;
            fn $method(self, rhs: LaurentPoly) -> LaurentPoly {
                self.$method(&rhs)
            }
        }
    };
}

impl Add<&LaurentPoly> for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Sub<&LaurentPoly> for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Mul<&LaurentPoly> for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        if self.is_zero() || rhs.is_zero() {
            return LaurentPoly::zero();
        }
        let mut out = LaurentPoly::zero();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                out.add_term(ma.mul(*mb), ca * cb);
            }
        }
        out
    }
}

forward_binop!(Add, add);
forward_binop!(Sub, sub);
forward_binop!(Mul, mul);

impl AddAssign<&LaurentPoly> for LaurentPoly {
    fn add_assign(&mut self, rhs: &LaurentPoly) {
        for (m, c) in &rhs.terms {
            self.add_term(*m, c.clone());
        }
    }
}

impl SubAssign<&LaurentPoly> for LaurentPoly {
    fn sub_assign(&mut self, rhs: &LaurentPoly) {
        for (m, c) in &rhs.terms {
            self.add_term(*m, -c.clone());
        }
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            terms: self.terms.iter().map(|(m, c)| (*m, -c.clone())).collect(),
        }
    }
}

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        -&self
    }
}

impl From<i64> for LaurentPoly {
    fn from(c: i64) -> Self {
        LaurentPoly::constant(c)
    }
}

/// Parses a polynomial literal, panicking on malformed input. Intended for fixtures.
pub fn lp(s: &str) -> LaurentPoly {
    s.parse()
        .unwrap_or_else(|e| panic!("bad polynomial literal {s:?}: {e}"))
}

/// A quotient `num / den` kept in canonical form.
///
/// No polynomial gcd is taken; monomial and integer contents are stripped, and
/// the denominator is cleared whenever it divides the numerator exactly.
#[derive(Clone)]
pub struct PolyFraction {
    num: LaurentPoly,
    den: LaurentPoly,
}

impl PolyFraction {
    pub fn new(num: LaurentPoly, den: LaurentPoly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        Ok(Self::canonical(num, den))
    }

    pub fn from_poly(p: LaurentPoly) -> Self {
        PolyFraction {
            num: p,
            den: LaurentPoly::one(),
        }
    }

    pub fn zero() -> Self {
        PolyFraction::from_poly(LaurentPoly::zero())
    }

    pub fn one() -> Self {
        PolyFraction::from_poly(LaurentPoly::one())
    }

    pub fn from_rational(r: &BigRational) -> Self {
        Self::canonical(
            LaurentPoly::from_bigint(r.numer().clone()),
            LaurentPoly::from_bigint(r.denom().clone()),
        )
    }

    pub fn num(&self) -> &LaurentPoly {
        &self.num
    }

    pub fn den(&self) -> &LaurentPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// The polynomial value when the denominator is `1`.
    pub fn as_poly(&self) -> Option<&LaurentPoly> {
        if self.den.is_one() {
            Some(&self.num)
        } else {
            None
        }
    }

    fn canonical(num: LaurentPoly, den: LaurentPoly) -> Self {
        if num.is_zero() {
            return PolyFraction::zero();
        }
        let (mut cn, mut mn, mut pn) = split_content(&num);
        let (cd, md, mut pd) = split_content(&den);
        if !pd.is_one() {
            if let Ok(quot) = pn.exact_div(&pd) {
                let (c2, m2, p2) = split_content(&quot);
                cn *= c2;
                mn = mn.mul(m2);
                pn = p2;
                pd = LaurentPoly::one();
            }
        }
        let g = cn.gcd(&cd);
        let cn = cn / &g;
        let cd = cd / &g;
        let mut num = pn.scale(&cn).shift(Monomial::new(mn.et - md.et, mn.eq - md.eq));
        let mut den = pd.scale(&cd);
        if den.leading().is_some_and(|(_, c)| c.is_negative()) {
            num = -num;
            den = -den;
        }
        PolyFraction { num, den }
    }

    pub fn add(&self, other: &PolyFraction) -> PolyFraction {
        if self.den == other.den {
            return Self::canonical(&self.num + &other.num, self.den.clone());
        }
        Self::canonical(
            &(&self.num * &other.den) + &(&other.num * &self.den),
            &self.den * &other.den,
        )
    }

    pub fn neg(&self) -> PolyFraction {
        PolyFraction {
            num: -&self.num,
            den: self.den.clone(),
        }
    }

    pub fn sub(&self, other: &PolyFraction) -> PolyFraction {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &PolyFraction) -> PolyFraction {
        Self::canonical(&self.num * &other.num, &self.den * &other.den)
    }

    pub fn recip(&self) -> Result<PolyFraction> {
        if self.num.is_zero() {
            return Err(Error::ZeroSubstitution);
        }
        Ok(Self::canonical(self.den.clone(), self.num.clone()))
    }

    pub fn div(&self, other: &PolyFraction) -> Result<PolyFraction> {
        Ok(self.mul(&other.recip()?))
    }

    pub fn pow(&self, e: i64) -> Result<PolyFraction> {
        let base = if e < 0 { self.recip()? } else { self.clone() };
        Ok(Self::canonical(
            base.num.pow(e.abs())?,
            base.den.pow(e.abs())?,
        ))
    }

    /// Substitutes fractions for both variables in numerator and denominator.
    pub fn substitute(&self, t_image: &PolyFraction, q_image: &PolyFraction) -> Result<PolyFraction> {
        let n = self.num.substitute(t_image, q_image)?;
        let d = self.den.substitute(t_image, q_image)?;
        if d.is_zero() {
            return Err(Error::DenominatorVanishes(self.den.to_string()));
        }
        n.div(&d)
    }

    pub fn to_json(&self) -> Value {
        json!({"num": self.num.to_json(), "den": self.den.to_json()})
    }
}

/// Splits `p = c * t^m * prim` with `c > 0` and `prim` free of monomial and integer content.
fn split_content(p: &LaurentPoly) -> (BigInt, Monomial, LaurentPoly) {
    if p.is_zero() {
        return (BigInt::zero(), Monomial::ONE, LaurentPoly::zero());
    }
    let c = p.content();
    let m = p.min_exponents();
    let prim = p.shift(m.inv()).div_integer(&c).expect("content divides");
    (c, m, prim)
}

impl PartialEq for PolyFraction {
    fn eq(&self, other: &Self) -> bool {
        &self.num * &other.den == &other.num * &self.den
    }
}

impl Eq for PolyFraction {}

impl fmt::Display for PolyFraction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

impl From<LaurentPoly> for PolyFraction {
    fn from(p: LaurentPoly) -> Self {
        PolyFraction::from_poly(p)
    }
}

/// The two flavours of q-natural numbers.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BracketKind {
    /// `(n)_q = 1 + q + … + q^{n-1}`
    Paren,
    /// `[n]_q = (q^n - q^{-n}) / (q - q^{-1})`
    Bracket,
}

pub fn q_natural(n: usize, kind: BracketKind) -> LaurentPoly {
    let n = n as i64;
    match kind {
        BracketKind::Paren => LaurentPoly::from_terms((0..n).map(|k| (Monomial::new(0, k), BigInt::one()))),
        BracketKind::Bracket => LaurentPoly::from_terms(
            (0..n).map(|k| (Monomial::new(0, n - 1 - 2 * k), BigInt::one())),
        ),
    }
}

pub fn q_factorial(n: usize, kind: BracketKind) -> LaurentPoly {
    (1..=n).fold(LaurentPoly::one(), |acc, k| &acc * &q_natural(k, kind))
}

/// Gaussian binomial coefficient; zero when `k` lies outside `[0, n]`.
pub fn q_binomial(n: usize, k: i64, kind: BracketKind) -> LaurentPoly {
    if k < 0 || k as usize > n {
        return LaurentPoly::zero();
    }
    let k = k as usize;
    match kind {
        BracketKind::Paren => {
            let mut row = vec![LaurentPoly::one()];
            for m in 1..=n {
                let mut next = vec![LaurentPoly::one(); m + 1];
                for j in 1..m {
                    next[j] = &row[j - 1] + &row[j].shift(Monomial::new(0, j as i64));
                }
                row = next;
            }
            row.swap_remove(k)
        }
        BracketKind::Bracket => {
            let den = &q_factorial(k, kind) * &q_factorial(n - k, kind);
            q_factorial(n, kind)
                .exact_div(&den)
                .expect("Gaussian binomials are Laurent polynomials")
        }
    }
}

/// `(a; q)_n = ∏_{k=0}^{n-1} (1 - a q^k)`.
pub fn q_pochhammer(a: &LaurentPoly, n: usize) -> LaurentPoly {
    (0..n).fold(LaurentPoly::one(), |acc, k| {
        let factor = &LaurentPoly::one() - &a.shift(Monomial::new(0, k as i64));
        &acc * &factor
    })
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Debug for PolyFraction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn renders_canonical_form() {
        let p = lp("1 - t^2*q + t^4*q^2");
        assert_eq!(p.to_string(), "t^4*q^2 - t^2*q + 1");
        assert_eq!(lp("-t^-1").to_string(), "-t^-1");
        assert_eq!(lp("2*t*q^-3 - 5").to_string(), "-5 + 2*t*q^-3");
        assert_eq!(LaurentPoly::zero().to_string(), "0");
    }

    #[test]
    fn parses_nested_expressions() {
        assert_eq!(lp("t*(t-1)"), lp("t^2 - t"));
        assert_eq!(lp("-t^2(1+q)"), lp("-t^2 - t^2*q"));
        assert_eq!(lp("(1+q)(1+q^2)"), lp("1+q+q^2+q^3"));
        assert_eq!(lp("(-t)^3"), lp("-t^3"));
        assert_eq!(lp("t^(-2)"), lp("t^-2"));
        assert!("t +".parse::<LaurentPoly>().is_err());
        assert!("(1+t)^-1".parse::<LaurentPoly>().is_err());
    }

    #[test]
    fn arithmetic_examples() {
        assert_eq!(&lp("t-1") * &lp("t+1"), lp("t^2-1"));
        assert_eq!(lp("-t").pow(3).unwrap(), lp("-t^3"));
        assert_eq!(&lp("t^2-t+1") * &lp("t+1"), lp("t^3+1"));
        assert_eq!(lp("-t").pow(-1).unwrap(), lp("-t^-1"));
        assert_eq!(lp("1+t").pow(-1), Err(Error::NegativePower));
    }

    #[test]
    fn exact_division_examples() {
        assert_eq!(lp("t^4+t^2+1").exact_div(&lp("t^2+t+1")).unwrap(), lp("t^2-t+1"));
        assert_eq!(lp("t^12-1").exact_div(&lp("t^6-1")).unwrap(), lp("t^6+1"));
        assert_eq!(lp("t^2+1").exact_div(&lp("t-1")), Err(Error::NotDivisible));
        assert_eq!(lp("t^-3 - t^-1").exact_div(&lp("t^-1")).unwrap(), lp("t^-2 - 1"));
        assert_eq!(
            lp("q^-1*t^3 - q^-1*t").exact_div(&lp("t*q - q")).unwrap(),
            lp("q^-2*t^2 + q^-2*t")
        );
    }

    #[test]
    fn substitution_examples() {
        let t2q = PolyFraction::from_poly(lp("t^2*q"));
        let q = PolyFraction::from_poly(lp("q"));
        let r = lp("t^2-t+1").substitute(&t2q, &q).unwrap();
        assert_eq!(r.as_poly().unwrap(), &lp("t^4*q^2 - t^2*q + 1"));
        let inv = PolyFraction::from_poly(lp("-t^-1"));
        assert_eq!(lp("t").substitute(&inv, &q).unwrap().as_poly().unwrap(), &lp("-t^-1"));
        let swapped = lp("q*t^2")
            .substitute(&PolyFraction::from_poly(lp("-q")), &PolyFraction::from_poly(lp("t")))
            .unwrap();
        assert_eq!(swapped.as_poly().unwrap(), &lp("t*q^2"));
    }

    #[test]
    fn evaluation_examples() {
        let r = |n: i64, d: i64| BigRational::new(n.into(), d.into());
        assert_eq!(lp("t^2-t+1").eval_rational(&r(2, 1), &r(1, 1)).unwrap(), r(3, 1));
        assert_eq!(lp("t^-1").eval_rational(&r(1, 2), &r(1, 1)).unwrap(), r(2, 1));
        assert_eq!(lp("t^6*q^2-1").eval_rational(&r(1, 1), &r(1, 1)).unwrap(), r(0, 1));
        assert_eq!(
            lp("t^-1").eval_rational(&r(0, 1), &r(1, 1)),
            Err(Error::ZeroSubstitution)
        );
    }

    #[test]
    fn q_numbers() {
        assert_eq!(q_natural(0, BracketKind::Paren), LaurentPoly::zero());
        assert_eq!(q_natural(3, BracketKind::Paren), lp("1+q+q^2"));
        assert_eq!(q_natural(3, BracketKind::Bracket), lp("q^-2+1+q^2"));
        assert_eq!(q_binomial(5, 0, BracketKind::Paren), LaurentPoly::one());
        assert_eq!(q_binomial(4, 2, BracketKind::Paren), lp("(1+q^2)(1+q+q^2)"));
        assert_eq!(q_binomial(4, 1, BracketKind::Paren), lp("(1+q)(1+q^2)"));
        assert_eq!(q_binomial(4, 5, BracketKind::Paren), LaurentPoly::zero());
        assert_eq!(q_binomial(4, 2, BracketKind::Bracket), lp("q^-4+q^-2+2+q^2+q^4"));
    }

    #[test]
    fn pochhammer_examples() {
        assert_eq!(q_pochhammer(&lp("t"), 0), LaurentPoly::one());
        assert_eq!(q_pochhammer(&lp("-t"), 2), lp("1 + (1+q)*t + q*t^2"));
        assert_eq!(q_pochhammer(&lp("q"), 1), lp("1-q"));
    }

    #[test]
    fn fraction_canonical_form() {
        let f = PolyFraction::new(lp("2*t^3 - 2*t"), lp("-4*t^2 + 4*t")).unwrap();
        assert_eq!(f.num(), &lp("-t - 1"));
        assert_eq!(f.den(), &lp("2"));
        let g = PolyFraction::new(lp("t^6*q^3 - 1"), lp("t^2*q - 1")).unwrap();
        assert!(g.den().is_one());
        let h = PolyFraction::new(lp("t^2+1"), lp("t-1")).unwrap();
        assert_eq!(h.den(), &lp("t-1"));
        assert_eq!(h, PolyFraction::new(lp("2*t^3+2*t"), lp("2*t^2-2*t")).unwrap());
        assert!(PolyFraction::new(lp("1"), LaurentPoly::zero()).is_err());
    }

    #[test]
    fn json_round_trip() {
        let p = lp("t^4*q^2 - t^2*q + 1");
        let v = p.to_json();
        assert_eq!(v[0]["c"], json!(1));
        assert_eq!(LaurentPoly::from_json(&v).unwrap(), p);
    }
}
