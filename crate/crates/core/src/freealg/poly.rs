use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::Signed;

use super::word::Word;
use crate::error::{Error, Result};
use crate::linalg::{Field, Rational};

/// Noncommutative polynomial: a finite map from words to nonzero coefficients.
#[derive(Clone, PartialEq)]
pub struct FreePoly<T> {
    terms: BTreeMap<Word, T>,
    zero: T,
}

impl<T: Field> FreePoly<T> {
    pub fn zero(zero: &T) -> Self {
        FreePoly {
            terms: BTreeMap::new(),
            zero: zero.zero_like(),
        }
    }

    pub fn monomial(coef: T, word: Word) -> Self {
        let mut p = FreePoly::zero(&coef);
        p.add_term(word, coef);
        p
    }

    pub fn from_terms(zero: &T, terms: impl IntoIterator<Item = (Word, T)>) -> Self {
        let mut p = FreePoly::zero(zero);
        for (w, c) in terms {
            p.add_term(w, c);
        }
        p
    }

    /// Parses words and attaches coefficients, e.g. `[("xyz", a), ("yxz", b)]`.
    pub fn from_pairs(zero: &T, terms: &[(&str, T)]) -> Self {
        FreePoly::from_terms(
            zero,
            terms
                .iter()
                .map(|(w, c)| (w.parse().expect("valid word literal"), c.clone())),
        )
    }

    pub fn add_term(&mut self, word: Word, coef: T) {
        if coef.is_zero() {
            return;
        }
        match self.terms.remove(&word) {
            Some(old) => {
                let s = old + coef;
                if !s.is_zero() {
                    self.terms.insert(word, s);
                }
            }
            None => {
                self.terms.insert(word, coef);
            }
        }
    }

    pub fn zero_elem(&self) -> &T {
        &self.zero
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Word, &T)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, w: &Word) -> T {
        self.terms
            .get(w)
            .cloned()
            .unwrap_or_else(|| self.zero.clone())
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_empty(&self) -> bool {
        self.is_zero()
    }

    /// Common degree of all words, `None` if inhomogeneous or zero.
    pub fn homogeneous_degree(&self) -> Option<usize> {
        let mut it = self.terms.keys().map(Word::degree);
        let d = it.next()?;
        it.all(|e| e == d).then_some(d)
    }

    pub fn scale(&self, s: &T) -> Self {
        FreePoly::from_terms(
            &self.zero,
            self.terms
                .iter()
                .map(|(w, c)| (w.clone(), c.clone() * s.clone())),
        )
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.add_term(w.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.add_term(w.clone(), -c.clone());
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = FreePoly::zero(&self.zero);
        for (w1, c1) in &self.terms {
            for (w2, c2) in &other.terms {
                out.add_term(w1.concat(w2), c1.clone() * c2.clone());
            }
        }
        out
    }

    pub fn left_mul_word(&self, w: &Word) -> Self {
        FreePoly::from_terms(
            &self.zero,
            self.terms.iter().map(|(v, c)| (w.concat(v), c.clone())),
        )
    }

    pub fn right_mul_word(&self, w: &Word) -> Self {
        FreePoly::from_terms(
            &self.zero,
            self.terms.iter().map(|(v, c)| (v.concat(w), c.clone())),
        )
    }

    /// Coordinates in the lexicographic basis of lowercase words of degree `d`.
    pub fn coordinates(&self, d: usize) -> Vec<T> {
        let mut v = vec![self.zero.clone(); 3usize.pow(d as u32)];
        for (w, c) in &self.terms {
            assert!(
                w.degree() == d && w.is_lowercase(),
                "word {w} outside degree-{d} basis"
            );
            v[w.index()] = c.clone();
        }
        v
    }

    pub fn map_coefficients<U: Field>(&self, zero: &U, f: impl Fn(&T) -> U) -> FreePoly<U> {
        FreePoly::from_terms(zero, self.terms.iter().map(|(w, c)| (w.clone(), f(c))))
    }

    /// Renames letters through `f`, e.g. lowercase to uppercase.
    pub fn map_letters(&self, f: impl Fn(u8) -> u8) -> Self {
        FreePoly::from_terms(
            &self.zero,
            self.terms
                .iter()
                .map(|(w, c)| (Word(w.0.iter().map(|&l| f(l)).collect()), c.clone())),
        )
    }
}

impl<T: fmt::Debug> fmt::Debug for FreePoly<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(w, c)| format!("{c:?}*{w}"))
            .collect();
        f.write_str(&parts.join(" + "))
    }
}

/// Canonical text: `coef*word` terms joined by `+`, rationals as `p/q`.
impl fmt::Display for FreePoly<Rational> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let parts: Vec<String> = self.terms.iter().map(|(w, c)| format!("{c}*{w}")).collect();
        f.write_str(&parts.join("+"))
    }
}

impl FromStr for FreePoly<Rational> {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let zero = Rational::from_integer(BigInt::from(0));
        let s = s.trim();
        if s == "0" {
            return Ok(FreePoly::zero(&zero));
        }
        let mut p = FreePoly::zero(&zero);
        for term in s.split('+') {
            let (coef, word) = term
                .split_once('*')
                .ok_or_else(|| Error::Usage(format!("term {term:?} lacks `coef*word` form")))?;
            let coef: Rational = coef
                .parse()
                .map_err(|_| Error::Usage(format!("bad rational coefficient {coef:?}")))?;
            if coef.denom().is_negative() {
                return Err(Error::Usage(format!("non-canonical coefficient {coef}")));
            }
            p.add_term(word.parse()?, coef);
        }
        Ok(p)
    }
}
