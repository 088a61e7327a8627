//! Alexander polynomial and the Krammer rational function of braid closures,
//! with Markov-move tests.

use serde_json::{json, Value};

use crate::braid::BraidWord;
use crate::error::{Error, Result};
use crate::laurent::{LaurentPoly, Monomial, PolyFraction};
use crate::polymatrix::PolyMatrix;
use crate::report::{Check, Report};
use crate::reps::{burau_reduced, lk, BurauForm, LkNotation, Representation};

#[derive(Clone, Debug, PartialEq)]
pub struct AlexanderResult {
    pub raw_fraction: PolyFraction,
    /// Quotient scaled by a unit `±t^k` to minimum degree 0 and positive lowest coefficient.
    pub normalized: LaurentPoly,
}

#[derive(Clone, Debug, PartialEq)]
pub struct KrammerResult {
    pub fraction: PolyFraction,
    /// The quotient when the denominator divides the numerator exactly.
    pub collapsed: Option<LaurentPoly>,
}

impl AlexanderResult {
    pub fn to_json(&self) -> Value {
        json!({
            "invariant": "alexander",
            "num": self.raw_fraction.num().to_json(),
            "den": self.raw_fraction.den().to_json(),
            "collapsed": self.normalized.to_json(),
        })
    }
}

impl KrammerResult {
    pub fn to_json(&self) -> Value {
        json!({
            "invariant": "krammer",
            "num": self.fraction.num().to_json(),
            "den": self.fraction.den().to_json(),
            "collapsed": self.collapsed.as_ref().map(LaurentPoly::to_json),
        })
    }
}

/// `det(ρ(w) - I)` and `det(ρ(σ_1 ⋯ σ_{n-1}) - I)`.
fn closure_dets(rep: &Representation, w: &BraidWord) -> Result<(LaurentPoly, LaurentPoly)> {
    let id = PolyMatrix::identity(rep.dim());
    let num = (&rep.image_of_word(w)? - &id).determinant()?;
    let den = (&rep.image_of_word(&BraidWord::coxeter(w.strands()))? - &id).determinant()?;
    Ok((num, den))
}

/// Multiplies by the unit `±t^a q^b` giving minimum exponents 0 and a positive lowest coefficient.
pub fn normalize_unit(p: &LaurentPoly) -> LaurentPoly {
    if p.is_zero() {
        return LaurentPoly::zero();
    }
    let shifted = p.shift(p.min_exponents().inv());
    match shifted.lowest() {
        Some((_, c)) if c.sign() == num_bigint::Sign::Minus => -shifted,
        _ => shifted,
    }
}

/// Alexander polynomial of the closure of `w` from the reduced Burau representation.
pub fn alexander(w: &BraidWord) -> Result<AlexanderResult> {
    let rep = burau_reduced(w.strands(), BurauForm::Conjugated)?;
    let (num, den) = closure_dets(&rep, w)?;
    if den.is_zero() {
        return Err(Error::ZeroDenominator);
    }
    let quotient = num.exact_div(&den)?;
    Ok(AlexanderResult {
        raw_fraction: PolyFraction::new(num, den)?,
        normalized: normalize_unit(&quotient),
    })
}

/// `det(k_n(w) - I) / det(k_n(σ_1 ⋯ σ_{n-1}) - I)` for the Lawrence–Krammer representation.
pub fn krammer_fraction(w: &BraidWord) -> Result<KrammerResult> {
    let rep = lk(w.strands(), LkNotation::New)?;
    let (num, den) = closure_dets(&rep, w)?;
    let collapsed = num.exact_div(&den).ok();
    Ok(KrammerResult {
        fraction: PolyFraction::new(num, den)?,
        collapsed,
    })
}

/// Substitutes `t ↦ t_value`, `q ↦ q_value` into a fraction and renormalizes.
pub fn specialize(fraction: &PolyFraction, t_value: &PolyFraction, q_value: &PolyFraction) -> Result<PolyFraction> {
    fraction.substitute(t_value, q_value)
}

/// Sets `t = value`, keeping `q`.
pub fn specialize_t(fraction: &PolyFraction, value: &PolyFraction) -> Result<PolyFraction> {
    specialize(fraction, value, &LaurentPoly::q().into())
}

/// Sets `q = value`, keeping `t`.
pub fn specialize_q(fraction: &PolyFraction, value: &PolyFraction) -> Result<PolyFraction> {
    specialize(fraction, &LaurentPoly::t().into(), value)
}

/// Invariance of both functions under `w ↦ g w g⁻¹` for each conjugator `g`.
pub fn markov1_test(w: &BraidWord, conjugators: &[BraidWord]) -> Result<Report> {
    let mut report = Report::new(format!("markov1 on [{w}]"));
    let k = krammer_fraction(w)?;
    let a = alexander(w)?;
    for g in conjugators {
        let c = w.conjugate(g)?;
        let kc = krammer_fraction(&c)?;
        let ac = alexander(&c)?;
        report.push(Check::new(format!("krammer([{c}]) = krammer([{w}])"), kc.fraction == k.fraction));
        report.push(Check::new(format!("alexander([{c}]) = alexander([{w}])"), ac.normalized == a.normalized));
    }
    Ok(report)
}

/// Comparison of `w` on `n` strands with `w σ_n` on `n + 1` strands.
#[derive(Clone, Debug)]
pub struct Markov2Probe {
    pub before: KrammerResult,
    pub after: KrammerResult,
    /// `after / before`, when `before` is nonzero.
    pub ratio: Option<PolyFraction>,
    pub ratio_q1: Option<PolyFraction>,
    pub ratio_t1: Option<PolyFraction>,
    pub alexander_before: LaurentPoly,
    pub alexander_after: LaurentPoly,
}

impl Markov2Probe {
    pub fn krammer_equal(&self) -> bool {
        self.before.fraction == self.after.fraction
    }

    pub fn alexander_equal(&self) -> bool {
        self.alexander_before == self.alexander_after
    }

    /// Data summary; the Krammer line records the observed behaviour rather than a requirement.
    pub fn to_report(&self) -> Report {
        let mut report = Report::new("markov2 probe");
        let show = |f: &Option<PolyFraction>| f.as_ref().map_or("undefined".to_string(), |r| r.to_string());
        report.push(
            Check::new("krammer fraction data", true).with_detail(format!(
                "before {}, after {}, ratio {}, ratio at q=1 {}, ratio at t=1 {}, equal: {}",
                self.before.fraction,
                self.after.fraction,
                show(&self.ratio),
                show(&self.ratio_q1),
                show(&self.ratio_t1),
                self.krammer_equal()
            )),
        );
        report.push(
            Check::new("alexander unchanged under stabilization", self.alexander_equal())
                .with_detail(format!("{} vs {}", self.alexander_before, self.alexander_after)),
        );
        report
    }
}

pub fn markov2_probe(w: &BraidWord) -> Result<Markov2Probe> {
    let stabilized = w.stabilize();
    let before = krammer_fraction(w)?;
    let after = krammer_fraction(&stabilized)?;
    let ratio = after.fraction.div(&before.fraction).ok();
    let one = PolyFraction::one();
    let ratio_q1 = ratio.as_ref().and_then(|r| specialize_q(r, &one).ok());
    let ratio_t1 = ratio.as_ref().and_then(|r| specialize_t(r, &one).ok());
    Ok(Markov2Probe {
        before,
        after,
        ratio,
        ratio_q1,
        ratio_t1,
        alexander_before: alexander(w)?.normalized,
        alexander_after: alexander(&stabilized)?.normalized,
    })
}

/// The lowest monomial of a polynomial, `1` for zero.
pub fn lowest_monomial(p: &LaurentPoly) -> Monomial {
    if p.is_zero() {
        Monomial::ONE
    } else {
        p.min_exponents()
    }
}
