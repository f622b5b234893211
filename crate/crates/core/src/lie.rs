//! The free Lie algebra over `Q` on `e_1, ..., e_n`, realized inside the
//! tensor algebra and coordinatized by the Lyndon basis.
//!
//! Letters are ordered `1 < 2 < ... < n`. The basis element attached to a
//! Lyndon word `w` is its standard bracketing `P_w`: for `w = uv` with `v` the
//! longest proper Lyndon suffix, `P_w = [P_u, P_v]`. Expanded in the tensor
//! algebra, `P_w` equals `w` plus lexicographically larger words, which makes
//! the change of basis triangular.

use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, Mutex, OnceLock};

use num_traits::{One, Zero};
use thiserror::Error;

use crate::rational::{q, Q};
use crate::tensor::{format_word, Poly, Word};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LieError {
    #[error("rank mismatch: {0} vs {1}")]
    RankMismatch(usize, usize),
    #[error("tensor is not homogeneous")]
    NotHomogeneous,
    #[error("tensor is not a Lie element; Dynkin defect D(t) - m t = {defect}")]
    NotLie { defect: Poly },
    #[error("{0:?} is not a Lyndon word")]
    NotLyndon(Word),
    #[error("letter {letter} out of range for rank {rank}")]
    LetterOutOfRange { letter: u8, rank: usize },
    #[error("empty bracket")]
    Empty,
}

fn mobius(mut n: u64) -> i64 {
    let mut result = 1i64;
    let mut p = 2u64;
    while p * p <= n {
        if n.is_multiple_of(p) {
            n /= p;
            if n.is_multiple_of(p) {
                return 0;
            }
            result = -result;
        }
        p += 1;
    }
    if n > 1 {
        result = -result;
    }
    result
}

/// Dimension of `Lie_m(V)` for `dim V = n`: `(1/m) Σ_{d|m} μ(d) n^{m/d}`.
pub fn witt_number(n: u64, m: u64) -> u64 {
    assert!(m >= 1);
    let mut total: i128 = 0;
    for d in 1..=m {
        if m.is_multiple_of(d) {
            total += mobius(d) as i128 * (n as i128).pow((m / d) as u32);
        }
    }
    (total / m as i128) as u64
}

pub fn is_lyndon(w: &[u8]) -> bool {
    let m = w.len();
    if m == 0 {
        return false;
    }
    (1..m).all(|r| {
        let rotated = w[r..].iter().chain(w[..r].iter());
        w.iter().lt(rotated)
    })
}

/// All Lyndon words of length `m` over `1..=n`, in lexicographic order.
pub fn lyndon_words(n: usize, m: usize) -> Vec<Word> {
    // Duval's generation of Lyndon words of length <= m, filtered to length m.
    let mut out = Vec::new();
    if n == 0 || m == 0 {
        return out;
    }
    let n = n as u8;
    let mut w: Vec<u8> = vec![1];
    loop {
        if w.len() == m {
            out.push(w.clone());
        }
        let k = w.len();
        while w.len() < m {
            let c = w[w.len() - k];
            w.push(c);
        }
        while w.last() == Some(&n) {
            w.pop();
        }
        match w.last_mut() {
            None => break,
            Some(c) => *c += 1,
        }
    }
    out
}

/// `(u, v)` with `w = uv` and `v` the longest proper Lyndon suffix.
pub fn standard_factorization(w: &[u8]) -> Option<(&[u8], &[u8])> {
    (1..w.len())
        .find(|&s| is_lyndon(&w[s..]))
        .map(|s| w.split_at(s))
}

fn expansion_cache() -> &'static Mutex<HashMap<Word, Arc<Poly>>> {
    static CACHE: OnceLock<Mutex<HashMap<Word, Arc<Poly>>>> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

/// Tensor expansion of the standard bracketing `P_w` of a Lyndon word.
pub fn lyndon_bracket_tensor(w: &[u8]) -> Arc<Poly> {
    if let Some(p) = expansion_cache().lock().unwrap().get(w) {
        return p.clone();
    }
    let p = match standard_factorization(w) {
        None => Poly::monomial(w.to_vec(), Q::one()),
        Some((u, v)) => lyndon_bracket_tensor(u).commutator(&lyndon_bracket_tensor(v)),
    };
    let p = Arc::new(p);
    expansion_cache()
        .lock()
        .unwrap()
        .insert(w.to_vec(), p.clone());
    p
}

/// Tensor expansion of the left-normed bracket `[e_{w_1}, e_{w_2}, ..., e_{w_m}]`.
pub fn left_normed_tensor(w: &[u8]) -> Poly {
    let mut acc = match w.first() {
        None => return Poly::zero(),
        Some(&a) => Poly::monomial(vec![a], Q::one()),
    };
    for &a in &w[1..] {
        acc = acc.commutator(&Poly::monomial(vec![a], Q::one()));
    }
    acc
}

/// Dynkin operator: linear extension of `a_1...a_m ↦ [a_1, ..., a_m]` (left-normed).
pub fn dynkin_operator(t: &Poly) -> Poly {
    let mut out = Poly::zero();
    for (w, c) in t.terms() {
        out.add_scaled(&left_normed_tensor(w), c);
    }
    out
}

/// Dynkin–Specht–Wever criterion: a homogeneous degree-`m` tensor `t` is a
/// Lie element iff `D(t) = m t`.
pub fn is_lie_element(t: &Poly) -> Result<bool, LieError> {
    if t.is_zero() {
        return Ok(true);
    }
    let m = t.homogeneous_degree().ok_or(LieError::NotHomogeneous)?;
    Ok(dynkin_defect(t, m).is_zero())
}

fn dynkin_defect(t: &Poly, m: usize) -> Poly {
    dynkin_operator(t).sub(&t.scale(&q(m as i64)))
}

/// A homogeneous element of the free Lie algebra in Lyndon coordinates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LieElement {
    rank: usize,
    degree: usize,
    coords: BTreeMap<Word, Q>,
}

impl LieElement {
    pub fn zero(rank: usize, degree: usize) -> Self {
        LieElement {
            rank,
            degree,
            coords: BTreeMap::new(),
        }
    }

    pub fn generator(rank: usize, i: usize) -> Result<Self, LieError> {
        Self::basis(rank, vec![i as u8])
    }

    /// The basis element `P_w`.
    pub fn basis(rank: usize, w: Word) -> Result<Self, LieError> {
        check_letters(&w, rank)?;
        if !is_lyndon(&w) {
            return Err(LieError::NotLyndon(w));
        }
        let degree = w.len();
        Ok(LieElement {
            rank,
            degree,
            coords: BTreeMap::from([(w, Q::one())]),
        })
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn coords(&self) -> &BTreeMap<Word, Q> {
        &self.coords
    }

    pub fn is_zero(&self) -> bool {
        self.coords.is_empty()
    }

    pub fn to_tensor(&self) -> Poly {
        let mut out = Poly::zero();
        for (w, c) in &self.coords {
            out.add_scaled(&lyndon_bracket_tensor(w), c);
        }
        out
    }

    /// Lyndon coordinates of a Lie tensor, by eliminating leading terms in
    /// lexicographic order.
    pub fn from_tensor(rank: usize, t: &Poly) -> Result<Self, LieError> {
        if t.is_zero() {
            return Ok(LieElement::zero(rank, 0));
        }
        let degree = t.homogeneous_degree().ok_or(LieError::NotHomogeneous)?;
        if t.max_letter() as usize > rank {
            return Err(LieError::LetterOutOfRange {
                letter: t.max_letter(),
                rank,
            });
        }
        let mut rest = t.clone();
        let mut coords = BTreeMap::new();
        while let Some((w, c)) = rest
            .terms()
            .iter()
            .next()
            .map(|(w, c)| (w.clone(), c.clone()))
        {
            if !is_lyndon(&w) {
                return Err(LieError::NotLie {
                    defect: dynkin_defect(t, degree),
                });
            }
            rest.add_scaled(&lyndon_bracket_tensor(&w), &-c.clone());
            coords.insert(w, c);
        }
        Ok(LieElement {
            rank,
            degree,
            coords,
        })
    }

    pub fn add(&self, other: &LieElement) -> Result<LieElement, LieError> {
        if self.rank != other.rank {
            return Err(LieError::RankMismatch(self.rank, other.rank));
        }
        if self.is_zero() {
            return Ok(other.clone());
        }
        let mut coords = self.coords.clone();
        for (w, c) in &other.coords {
            let e = coords.entry(w.clone()).or_insert_with(Q::zero);
            *e += c;
            if e.is_zero() {
                coords.remove(w);
            }
        }
        Ok(LieElement {
            rank: self.rank,
            degree: self.degree.max(other.degree),
            coords,
        })
    }

    pub fn scale(&self, c: &Q) -> LieElement {
        if c.is_zero() {
            return LieElement::zero(self.rank, self.degree);
        }
        LieElement {
            rank: self.rank,
            degree: self.degree,
            coords: self
                .coords
                .iter()
                .map(|(w, a)| (w.clone(), a * c))
                .collect(),
        }
    }

    pub fn bracket(&self, other: &LieElement) -> Result<LieElement, LieError> {
        if self.rank != other.rank {
            return Err(LieError::RankMismatch(self.rank, other.rank));
        }
        let t = self.to_tensor().commutator(&other.to_tensor());
        let mut out = LieElement::from_tensor(self.rank, &t)?;
        out.degree = self.degree + other.degree;
        Ok(out)
    }

    /// `[[v_1, v_2], ..., v_k]`.
    pub fn left_normed(elements: &[LieElement]) -> Result<LieElement, LieError> {
        let (first, rest) = elements.split_first().ok_or(LieError::Empty)?;
        rest.iter().try_fold(first.clone(), |acc, v| acc.bracket(v))
    }
}

impl std::fmt::Display for LieElement {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.coords.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .coords
            .iter()
            .map(|(w, c)| {
                format!(
                    "{}*P[{}]",
                    crate::rational::to_fraction_string(c),
                    format_word(w)
                )
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

fn check_letters(w: &[u8], rank: usize) -> Result<(), LieError> {
    for &a in w {
        if a == 0 || a as usize > rank {
            return Err(LieError::LetterOutOfRange { letter: a, rank });
        }
    }
    Ok(())
}
