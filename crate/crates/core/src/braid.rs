//! Braid words on `n` strands and the relation checks applied to representations.
//!
//! Two input grammars are accepted: whitespace separated signed integers
//! (`1 -2 3`) and symbolic letters with optional powers (`s1 s2^-1 s1^3`).

use std::fmt;

use crate::error::{Error, Result};
use crate::report::{Check, Report};
use crate::reps::Representation;

/// A word in the Artin generators; letter `i` is `σ_i`, letter `-i` is `σ_i⁻¹`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BraidWord {
    strands: usize,
    letters: Vec<i64>,
}

impl BraidWord {
    pub fn new(strands: usize, letters: Vec<i64>) -> Result<Self> {
        if strands < 2 {
            return Err(Error::Invalid(format!("{strands} strands")));
        }
        for (pos, &l) in letters.iter().enumerate() {
            if l == 0 || l.unsigned_abs() as usize >= strands {
                return Err(Error::IndexRange {
                    pos,
                    index: l,
                    strands,
                });
            }
        }
        Ok(BraidWord { strands, letters })
    }

    pub fn identity(strands: usize) -> Self {
        BraidWord {
            strands,
            letters: Vec::new(),
        }
    }

    /// The word `σ_1 σ_2 … σ_{n-1}`.
    pub fn coxeter(strands: usize) -> Self {
        BraidWord {
            strands,
            letters: (1..strands as i64).collect(),
        }
    }

    pub fn parse(text: &str, strands: usize) -> Result<Self> {
        parse_word(text, strands)
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn letters(&self) -> &[i64] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn inverse(&self) -> Self {
        BraidWord {
            strands: self.strands,
            letters: self.letters.iter().rev().map(|l| -l).collect(),
        }
    }

    pub fn concat(&self, other: &BraidWord) -> Result<Self> {
        if self.strands != other.strands {
            return Err(Error::StrandMismatch(self.strands, other.strands));
        }
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        Ok(BraidWord {
            strands: self.strands,
            letters,
        })
    }

    /// `g · self · g⁻¹`
    pub fn conjugate(&self, g: &BraidWord) -> Result<Self> {
        g.concat(self)?.concat(&g.inverse())
    }

    /// Cancels adjacent `σ_i σ_i⁻¹` pairs until none remain.
    pub fn free_reduce(&self) -> Self {
        let mut out: Vec<i64> = Vec::with_capacity(self.letters.len());
        for &l in &self.letters {
            if out.last() == Some(&-l) {
                out.pop();
            } else {
                out.push(l);
            }
        }
        BraidWord {
            strands: self.strands,
            letters: out,
        }
    }

    /// The same letters regarded on more strands.
    pub fn widen(&self, strands: usize) -> Result<Self> {
        if strands < self.strands {
            return Err(Error::StrandMismatch(self.strands, strands));
        }
        Ok(BraidWord {
            strands,
            letters: self.letters.clone(),
        })
    }

    /// Stabilization `w ↦ w σ_n` on `n + 1` strands.
    pub fn stabilize(&self) -> Self {
        let mut letters = self.letters.clone();
        letters.push(self.strands as i64);
        BraidWord {
            strands: self.strands + 1,
            letters,
        }
    }

    /// Symbolic rendering, e.g. `s1 s2^-1`.
    pub fn to_symbolic(&self) -> String {
        self.letters
            .iter()
            .map(|&l| if l > 0 { format!("s{l}") } else { format!("s{}^-1", -l) })
            .collect::<Vec<_>>()
            .join(" ")
    }
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.letters.iter().map(i64::to_string).collect();
        write!(f, "{}", parts.join(" "))
    }
}

/// Parses a braid word in either grammar. Positions in errors are character offsets.
pub fn parse_word(text: &str, strands: usize) -> Result<BraidWord> {
    if strands < 2 {
        return Err(Error::Invalid(format!("{strands} strands")));
    }
    let mut letters = Vec::new();
    let chars: Vec<char> = text.chars().collect();
    let mut i = 0;
    while i < chars.len() {
        if chars[i].is_whitespace() || chars[i] == ',' {
            i += 1;
            continue;
        }
        let start = i;
        while i < chars.len() && !chars[i].is_whitespace() && chars[i] != ',' {
            i += 1;
        }
        let token: String = chars[start..i].iter().collect();
        let malformed = || Error::WordParse {
            pos: start,
            token: token.clone(),
        };
        let (index, power) = if let Some(rest) = token.strip_prefix(['s', 'S', 'σ']) {
            let (idx, pow) = match rest.split_once('^') {
                Some((a, b)) => (a, b.trim_start_matches('(').trim_end_matches(')')),
                None => (rest, "1"),
            };
            let idx: i64 = parse_unsigned(idx).ok_or_else(malformed)?;
            let pow: i64 = pow.parse().map_err(|_| malformed())?;
            (idx, pow)
        } else {
            let v: i64 = token.parse().map_err(|_| malformed())?;
            (v.abs(), v.signum())
        };
        if index == 0 || index as usize >= strands {
            let signed = if power < 0 { -index } else { index };
            return Err(Error::IndexRange {
                pos: start,
                index: signed,
                strands,
            });
        }
        let letter = if power < 0 { -index } else { index };
        for _ in 0..power.unsigned_abs() {
            letters.push(letter);
        }
    }
    Ok(BraidWord { strands, letters })
}

fn parse_unsigned(s: &str) -> Option<i64> {
    if s.is_empty() || !s.chars().all(|c| c.is_ascii_digit()) {
        return None;
    }
    s.parse().ok()
}

/// Checks `σ_i σ_{i+1} σ_i = σ_{i+1} σ_i σ_{i+1}` and far commutation on the images.
pub fn check_braid_relations(rep: &Representation) -> Report {
    let mut report = Report::new(format!("braid relations: {}", rep.label()));
    let n = rep.strands();
    for i in 1..n.saturating_sub(1) {
        let a = rep.generator(i);
        let b = rep.generator(i + 1);
        let left = &(a * b) * a;
        let right = &(b * a) * b;
        report.push(Check::matrices(format!("s{i} s{} s{i} = s{} s{i} s{}", i + 1, i + 1, i + 1), &left, &right));
    }
    for i in 1..n {
        for j in i + 2..n {
            let a = rep.generator(i);
            let b = rep.generator(j);
            report.push(Check::matrices(format!("s{i} s{j} = s{j} s{i}"), &(a * b), &(b * a)));
        }
    }
    for i in 1..n {
        let prod = rep.generator(i) * rep.inverse_generator(i);
        report.push(Check::new(format!("s{i} s{i}^-1 = I"), prod.is_identity()));
    }
    report
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_both_grammars() {
        assert_eq!(parse_word("1 1 1", 2).unwrap().letters(), &[1, 1, 1]);
        assert_eq!(parse_word("1 2 2 2", 3).unwrap().letters(), &[1, 2, 2, 2]);
        assert!(parse_word("", 5).unwrap().is_empty());
        assert_eq!(parse_word("s1 s2^-1 s1^3", 3).unwrap().letters(), &[1, -2, 1, 1, 1]);
        assert_eq!(parse_word("1 -2 3", 4).unwrap().letters(), &[1, -2, 3]);
    }

    #[test]
    fn reports_errors_with_positions() {
        assert_eq!(
            parse_word("1 x 2", 3),
            Err(Error::WordParse {
                pos: 2,
                token: "x".to_string()
            })
        );
        assert_eq!(
            parse_word("1 0", 3),
            Err(Error::IndexRange {
                pos: 2,
                index: 0,
                strands: 3
            })
        );
        assert_eq!(
            parse_word("s1 -3", 3),
            Err(Error::IndexRange {
                pos: 3,
                index: -3,
                strands: 3
            })
        );
        assert!(parse_word("s1^", 3).is_err());
    }

    #[test]
    fn word_operations() {
        let w = parse_word("1 -2", 3).unwrap();
        assert_eq!(w.inverse().to_string(), "2 -1");
        let t = parse_word("1 1 1", 3).unwrap();
        let g = parse_word("2", 3).unwrap();
        assert_eq!(t.conjugate(&g).unwrap().to_string(), "2 1 1 1 -2");
        assert_eq!(parse_word("1 -1 2", 3).unwrap().free_reduce().to_string(), "2");
        assert_eq!(
            t.concat(&BraidWord::identity(4)),
            Err(Error::StrandMismatch(3, 4))
        );
        assert_eq!(parse_word("1 1 1", 2).unwrap().stabilize().to_string(), "1 1 1 2");
        assert_eq!(w.to_symbolic(), "s1 s2^-1");
    }
}
