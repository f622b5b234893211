//! Truncated Magnus expansion `x_i ↦ 1 + X_i`, the Johnson filtration depth
//! and the Johnson homomorphism.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::autf::{FreeAutomorphism, FreeWord};
use crate::exactlin::{
    induced_operator, IntMatrix, LinAlgError, LinearOperator, Space, TensorVector,
};
use crate::lie::{is_lyndon, LieElement, LieError};
use crate::rational::{fraction_serde, Q};
use crate::tensor::{format_word, parse_word_label, Poly, Word};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MagnusError {
    #[error("cutoff {cutoff} is below the minimum {min}")]
    CutoffTooSmall { cutoff: usize, min: usize },
    #[error("depth too small: degree-{degree} terms survive, depth {required} required")]
    DepthTooSmall { degree: usize, required: usize },
    #[error("rank mismatch: {0} vs {1}")]
    RankMismatch(usize, usize),
    #[error("malformed Johnson image: {0}")]
    Malformed(String),
    #[error(transparent)]
    Lie(#[from] LieError),
    #[error(transparent)]
    LinAlg(#[from] LinAlgError),
}

/// An element of `Q<X_1..X_n>` modulo monomials of degree above `cutoff`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruncatedSeries {
    rank: usize,
    cutoff: usize,
    poly: Poly,
}

impl TruncatedSeries {
    pub fn one(rank: usize, cutoff: usize) -> Self {
        TruncatedSeries {
            rank,
            cutoff,
            poly: Poly::one(),
        }
    }

    /// Truncates `p` at `cutoff`.
    pub fn from_poly(rank: usize, cutoff: usize, p: &Poly) -> Self {
        TruncatedSeries {
            rank,
            cutoff,
            poly: Poly::from_terms(
                p.terms()
                    .iter()
                    .filter(|(w, _)| w.len() <= cutoff)
                    .map(|(w, c)| (w.clone(), c.clone())),
            ),
        }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn cutoff(&self) -> usize {
        self.cutoff
    }

    pub fn poly(&self) -> &Poly {
        &self.poly
    }

    pub fn coeff(&self, w: &[u8]) -> Q {
        self.poly.coeff(w)
    }

    pub fn homogeneous_part(&self, d: usize) -> Poly {
        self.poly.homogeneous_part(d)
    }

    /// Truncated product; the cutoff of the result is the smaller one.
    pub fn mul(&self, other: &TruncatedSeries) -> Result<TruncatedSeries, MagnusError> {
        if self.rank != other.rank {
            return Err(MagnusError::RankMismatch(self.rank, other.rank));
        }
        let cutoff = self.cutoff.min(other.cutoff);
        Ok(TruncatedSeries {
            rank: self.rank,
            cutoff,
            poly: self.poly.mul_truncated(&other.poly, Some(cutoff)),
        })
    }

    /// Right multiplication by the expansion of `x_a^{±1}`.
    fn mul_letter(&mut self, letter: i32) {
        let a = letter.unsigned_abs() as u8;
        let mut out = self.poly.clone();
        for (w, c) in self.poly.terms() {
            let mut cur = w.clone();
            let mut coef = c.clone();
            while cur.len() < self.cutoff {
                cur.push(a);
                if letter < 0 {
                    coef = -coef;
                }
                out.add_term(cur.clone(), coef.clone());
                if letter > 0 {
                    break;
                }
            }
        }
        self.poly = out;
    }
}

impl fmt::Display for TruncatedSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} + O(deg {})", self.poly, self.cutoff + 1)
    }
}

/// Image of `w` under `x_i ↦ 1 + X_i`, `x_i^{-1} ↦ 1 − X_i + X_i² − ...`,
/// truncated above degree `cutoff`.
pub fn magnus_expand(w: &FreeWord, cutoff: usize) -> Result<TruncatedSeries, MagnusError> {
    if cutoff < 1 {
        return Err(MagnusError::CutoffTooSmall { cutoff, min: 1 });
    }
    let mut s = TruncatedSeries::one(w.rank(), cutoff);
    for &l in w.letters() {
        s.mul_letter(l);
    }
    Ok(s)
}

/// Depth in the Johnson filtration, as far as a cutoff can see.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Depth {
    Exact(usize),
    /// Every degree up to the cutoff vanished.
    AtLeast(usize),
}

impl Depth {
    pub fn at_least(&self, k: usize) -> bool {
        match *self {
            Depth::Exact(d) => d >= k,
            Depth::AtLeast(c) => c >= k,
        }
    }
}

impl fmt::Display for Depth {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Depth::Exact(d) => write!(f, "{d}"),
            Depth::AtLeast(c) => write!(f, ">={c}"),
        }
    }
}

impl Serialize for Depth {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            Depth::Exact(d) => s.serialize_u64(*d as u64),
            Depth::AtLeast(_) => s.serialize_str(&self.to_string()),
        }
    }
}

fn lowest_degree(s: &TruncatedSeries) -> Option<usize> {
    s.poly
        .terms()
        .keys()
        .map(Vec::len)
        .filter(|&d| d >= 1)
        .min()
}

fn deviations(phi: &FreeAutomorphism, cutoff: usize) -> Result<Vec<TruncatedSeries>, MagnusError> {
    (1..=phi.rank())
        .map(|i| {
            let x = FreeWord::generator(phi.rank(), i).expect("index in range");
            magnus_expand(&x.inverse().mul(phi.image(i)), cutoff)
        })
        .collect()
}

/// Largest `d < cutoff` such that every `x_i^{-1} φ(x_i)` has vanishing
/// expansion in degrees `1..=d`; `0` when `φ` is not IA.
pub fn johnson_depth(phi: &FreeAutomorphism, cutoff: usize) -> Result<Depth, MagnusError> {
    if cutoff < 2 {
        return Err(MagnusError::CutoffTooSmall { cutoff, min: 2 });
    }
    if !phi.is_ia() {
        return Ok(Depth::Exact(0));
    }
    let low = deviations(phi, cutoff)?
        .iter()
        .filter_map(lowest_degree)
        .min();
    Ok(match low {
        Some(d) => Depth::Exact(d - 1),
        None => Depth::AtLeast(cutoff),
    })
}

/// `Σ_i e_i^* ⊗ (degree-(k+1) part of x_i^{-1} φ(x_i))`, in Lyndon coordinates.
pub fn johnson_image(phi: &FreeAutomorphism, k: usize) -> Result<JohnsonImage, MagnusError> {
    if k < 1 {
        return Err(MagnusError::CutoffTooSmall { cutoff: k, min: 1 });
    }
    image_from_deviations(phi.rank(), k, &deviations(phi, k + 1)?)
}

fn image_from_deviations(
    n: usize,
    k: usize,
    devs: &[TruncatedSeries],
) -> Result<JohnsonImage, MagnusError> {
    let mut components = BTreeMap::new();
    for (idx, s) in devs.iter().enumerate() {
        if let Some(d) = lowest_degree(s).filter(|&d| d <= k) {
            return Err(MagnusError::DepthTooSmall {
                degree: d,
                required: k,
            });
        }
        let part = s.homogeneous_part(k + 1);
        let lie = LieElement::from_tensor(n, &part)?;
        if !lie.is_zero() {
            components.insert(idx as u8 + 1, lie);
        }
    }
    Ok(JohnsonImage {
        rank: n,
        k,
        components,
    })
}

/// An automorphism seen through its action on `Q<X_1..X_n>` modulo degree
/// above `cutoff`: the truncated expansions of `φ(x_1), ..., φ(x_n)`.
///
/// Composition substitutes series instead of words, so long products stay
/// cheap where composing the automorphisms themselves would not.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruncatedAutomorphism {
    rank: usize,
    cutoff: usize,
    images: Vec<TruncatedSeries>,
}

impl TruncatedAutomorphism {
    pub fn new(phi: &FreeAutomorphism, cutoff: usize) -> Result<Self, MagnusError> {
        let images = phi
            .images()
            .iter()
            .map(|w| magnus_expand(w, cutoff))
            .collect::<Result<_, _>>()?;
        Ok(TruncatedAutomorphism {
            rank: phi.rank(),
            cutoff,
            images,
        })
    }

    pub fn identity(rank: usize, cutoff: usize) -> Self {
        let images = (1..=rank)
            .map(|i| {
                let x = FreeWord::generator(rank, i).expect("index in range");
                magnus_expand(&x, cutoff).expect("cutoff checked by caller")
            })
            .collect();
        TruncatedAutomorphism {
            rank,
            cutoff,
            images,
        }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn cutoff(&self) -> usize {
        self.cutoff
    }

    /// Expansion of `φ(x_i)`.
    pub fn image(&self, i: usize) -> &TruncatedSeries {
        &self.images[i - 1]
    }

    /// `self ∘ other`: each `X_j` in the expansion of `other(x_i)` is replaced by
    /// `self(x_j) − 1`.
    pub fn compose(&self, other: &TruncatedAutomorphism) -> Result<Self, MagnusError> {
        if self.rank != other.rank {
            return Err(MagnusError::RankMismatch(self.rank, other.rank));
        }
        let cutoff = self.cutoff.min(other.cutoff);
        let ys: Vec<Poly> = self
            .images
            .iter()
            .map(|s| s.poly.sub(&Poly::one()))
            .collect();
        let mut cache: BTreeMap<Word, Poly> = BTreeMap::new();
        cache.insert(Vec::new(), Poly::one());
        let mut images = Vec::with_capacity(self.rank);
        for s in &other.images {
            let mut out = Poly::zero();
            for (w, c) in s.poly.terms() {
                if w.len() > cutoff {
                    continue;
                }
                out.add_scaled(substituted(&mut cache, &ys, w, cutoff), c);
            }
            images.push(TruncatedSeries {
                rank: self.rank,
                cutoff,
                poly: out,
            });
        }
        Ok(TruncatedAutomorphism {
            rank: self.rank,
            cutoff,
            images,
        })
    }

    /// Degree-`k` Johnson image, read off at the cutoff `k + 1`.
    pub fn johnson_image(&self, k: usize) -> Result<JohnsonImage, MagnusError> {
        if k < 1 || k + 1 > self.cutoff {
            return Err(MagnusError::CutoffTooSmall {
                cutoff: self.cutoff,
                min: k + 1,
            });
        }
        let devs = (1..=self.rank)
            .map(|i| {
                let x = FreeWord::generator(self.rank, i).expect("index in range");
                magnus_expand(&x.inverse(), k + 1)?.mul(&self.images[i - 1])
            })
            .collect::<Result<Vec<_>, _>>()?;
        image_from_deviations(self.rank, k, &devs)
    }
}

/// `Y_{w_1} ⋯ Y_{w_d}` truncated at `cutoff`, memoised by prefix.
fn substituted<'a>(
    cache: &'a mut BTreeMap<Word, Poly>,
    ys: &[Poly],
    w: &[u8],
    cutoff: usize,
) -> &'a Poly {
    if !cache.contains_key(w) {
        let (last, prefix) = w.split_last().expect("empty word is cached");
        let head = substituted(cache, ys, prefix, cutoff).clone();
        let p = head.mul_truncated(&ys[*last as usize - 1], Some(cutoff));
        cache.insert(w.to_vec(), p);
    }
    &cache[w]
}

/// An element of `V^* ⊗ Lie_{k+1}(V)`, one Lie component per dual index.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JohnsonImage {
    rank: usize,
    k: usize,
    components: BTreeMap<u8, LieElement>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct JohnsonTerm {
    pub dual_index: usize,
    pub lyndon_word: String,
    #[serde(with = "fraction_serde")]
    pub coefficient: Q,
}

impl JohnsonImage {
    pub fn zero(rank: usize, k: usize) -> Self {
        JohnsonImage {
            rank,
            k,
            components: BTreeMap::new(),
        }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn space(&self) -> Space {
        Space::Mk {
            n: self.rank,
            k: self.k,
        }
    }

    /// Lie component paired with `e_i^*`.
    pub fn component(&self, i: usize) -> LieElement {
        self.components
            .get(&(i as u8))
            .cloned()
            .unwrap_or_else(|| LieElement::zero(self.rank, self.k + 1))
    }

    pub fn is_zero(&self) -> bool {
        self.components.is_empty()
    }

    pub fn to_vector(&self) -> TensorVector {
        let mut terms = BTreeMap::new();
        for (i, lie) in &self.components {
            for (w, c) in lie.coords() {
                let mut l = vec![*i];
                l.extend_from_slice(w);
                terms.insert(l, c.clone());
            }
        }
        TensorVector::from_terms(self.space(), terms).expect("Lyndon labels")
    }

    pub fn from_vector(v: &TensorVector) -> Result<Self, MagnusError> {
        let Space::Mk { n, k } = v.space() else {
            return Err(MagnusError::Malformed(format!("not in Mk: {}", v.space())));
        };
        let mut components: BTreeMap<u8, LieElement> = BTreeMap::new();
        for (l, c) in v.coords() {
            let e = LieElement::basis(n, l[1..].to_vec())?.scale(c);
            let slot = components
                .entry(l[0])
                .or_insert_with(|| LieElement::zero(n, k + 1));
            *slot = slot.add(&e)?;
        }
        components.retain(|_, e| !e.is_zero());
        Ok(JohnsonImage {
            rank: n,
            k,
            components,
        })
    }

    pub fn add(&self, other: &JohnsonImage) -> Result<JohnsonImage, MagnusError> {
        let v = self.to_vector().add(&other.to_vector())?;
        JohnsonImage::from_vector(&v)
    }

    pub fn scale(&self, c: &Q) -> JohnsonImage {
        JohnsonImage::from_vector(&self.to_vector().scale(c)).expect("same space")
    }

    /// The Dynkin test on every component.
    pub fn components_are_lie(&self) -> Result<bool, MagnusError> {
        for lie in self.components.values() {
            if !crate::lie::is_lie_element(&lie.to_tensor())? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn to_json(&self) -> Vec<JohnsonTerm> {
        self.to_vector()
            .coords()
            .iter()
            .map(|(l, c)| JohnsonTerm {
                dual_index: l[0] as usize,
                lyndon_word: format_word(&l[1..]),
                coefficient: c.clone(),
            })
            .collect()
    }

    pub fn from_json(rank: usize, k: usize, terms: &[JohnsonTerm]) -> Result<Self, MagnusError> {
        let space = Space::Mk { n: rank, k };
        let mut labelled: Vec<(Word, Q)> = Vec::new();
        for t in terms {
            let w = parse_word_label(&t.lyndon_word)
                .filter(|w| w.len() == k + 1 && is_lyndon(w))
                .ok_or_else(|| MagnusError::Malformed(t.lyndon_word.clone()))?;
            let mut l = vec![t.dual_index as u8];
            l.extend(w);
            labelled.push((l, t.coefficient.clone()));
        }
        JohnsonImage::from_vector(&TensorVector::from_terms(space, labelled)?)
    }
}

impl fmt::Display for JohnsonImage {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.components.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .components
            .iter()
            .map(|(i, lie)| format!("e{i}* ⊗ ({lie})"))
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// The action of the abelianization of `g` on `space`.
pub fn abelianized_action(
    g: &FreeAutomorphism,
    space: Space,
) -> Result<LinearOperator, MagnusError> {
    let m = IntMatrix::from_rows(g.abelianized_matrix())?;
    let inv = IntMatrix::from_rows(g.inverse().abelianized_matrix())?;
    Ok(induced_operator("ab(g)", &m, &inv, space)?)
}
