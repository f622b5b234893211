//! Sparse noncommutative polynomials in `X_1..X_n`, i.e. elements of the
//! tensor algebra `⊕ V^{⊗m}` with rational coefficients.
//!
//! A monomial `X_{a_1} ... X_{a_m}` (equivalently `e_{a_1} ⊗ ... ⊗ e_{a_m}`)
//! is stored as the word `[a_1, ..., a_m]` with 1-based letters.

use std::collections::BTreeMap;

use num_traits::Zero;

use crate::rational::{to_fraction_string, Q};

pub type Word = Vec<u8>;

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Poly {
    terms: BTreeMap<Word, Q>,
}

impl Poly {
    pub fn zero() -> Self {
        Poly::default()
    }

    pub fn one() -> Self {
        Poly::monomial(Vec::new(), crate::rational::one())
    }

    pub fn monomial(word: Word, c: Q) -> Self {
        let mut p = Poly::zero();
        p.add_term(word, c);
        p
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (Word, Q)>) -> Self {
        let mut p = Poly::zero();
        for (w, c) in terms {
            p.add_term(w, c);
        }
        p
    }

    pub fn terms(&self) -> &BTreeMap<Word, Q> {
        &self.terms
    }

    pub fn into_terms(self) -> BTreeMap<Word, Q> {
        self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, w: &[u8]) -> Q {
        self.terms.get(w).cloned().unwrap_or_else(Q::zero)
    }

    pub fn add_term(&mut self, word: Word, c: Q) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(word) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn add_scaled(&mut self, other: &Poly, c: &Q) {
        if c.is_zero() {
            return;
        }
        for (w, a) in &other.terms {
            self.add_term(w.clone(), a * c);
        }
    }

    pub fn add(&self, other: &Poly) -> Poly {
        let mut out = self.clone();
        out.add_scaled(other, &crate::rational::one());
        out
    }

    pub fn sub(&self, other: &Poly) -> Poly {
        let mut out = self.clone();
        out.add_scaled(other, &crate::rational::q(-1));
        out
    }

    pub fn scale(&self, c: &Q) -> Poly {
        let mut out = Poly::zero();
        out.add_scaled(self, c);
        out
    }

    /// Product, dropping monomials longer than `cutoff` when given.
    pub fn mul_truncated(&self, other: &Poly, cutoff: Option<usize>) -> Poly {
        let mut out = Poly::zero();
        for (u, a) in &self.terms {
            for (v, b) in &other.terms {
                if cutoff.is_some_and(|k| u.len() + v.len() > k) {
                    continue;
                }
                let mut w = u.clone();
                w.extend_from_slice(v);
                out.add_term(w, a * b);
            }
        }
        out
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        self.mul_truncated(other, None)
    }

    /// `uv - vu`.
    pub fn commutator(&self, other: &Poly) -> Poly {
        self.mul(other).sub(&other.mul(self))
    }

    /// Degree-`m` homogeneous part.
    pub fn homogeneous_part(&self, m: usize) -> Poly {
        Poly {
            terms: self
                .terms
                .iter()
                .filter(|(w, _)| w.len() == m)
                .map(|(w, c)| (w.clone(), c.clone()))
                .collect(),
        }
    }

    /// Some degree if every monomial has it; `None` for zero or mixed degrees.
    pub fn homogeneous_degree(&self) -> Option<usize> {
        let mut degs = self.terms.keys().map(Vec::len);
        let d = degs.next()?;
        degs.all(|e| e == d).then_some(d)
    }

    pub fn max_letter(&self) -> u8 {
        self.terms
            .keys()
            .flat_map(|w| w.iter().copied())
            .max()
            .unwrap_or(0)
    }
}

/// Human-readable `c*e1e2 + ...` rendering, used in reports.
pub fn format_word(w: &[u8]) -> String {
    w.iter().map(u8::to_string).collect::<Vec<_>>().join(".")
}

pub fn parse_word_label(s: &str) -> Option<Word> {
    if s.is_empty() {
        return Some(Vec::new());
    }
    s.split('.').map(|t| t.parse::<u8>().ok()).collect()
}

impl std::fmt::Display for Poly {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(w, c)| format!("{}*[{}]", to_fraction_string(c), format_word(w)))
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}
