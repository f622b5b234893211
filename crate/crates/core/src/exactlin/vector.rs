use std::collections::btree_map::Entry;
use std::collections::BTreeMap;

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use super::{LinAlgError, Space};
use crate::rational::{fraction_serde, Q};
use crate::tensor::{format_word, parse_word_label, Poly, Word};

/// A rational vector in a [`Space`], stored sparsely by basis label.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TensorVector {
    space: Space,
    coords: BTreeMap<Word, Q>,
}

impl TensorVector {
    pub fn zero(space: Space) -> Self {
        TensorVector {
            space,
            coords: BTreeMap::new(),
        }
    }

    pub fn basis(space: Space, label: Word) -> Result<Self, LinAlgError> {
        Self::from_terms(space, [(label, crate::rational::one())])
    }

    pub fn from_terms(
        space: Space,
        terms: impl IntoIterator<Item = (Word, Q)>,
    ) -> Result<Self, LinAlgError> {
        let mut v = TensorVector::zero(space);
        for (l, c) in terms {
            if !space.contains_label(&l) {
                return Err(LinAlgError::BadLabel {
                    space: space.to_string(),
                    label: format_word(&l),
                });
            }
            v.add_term(l, c);
        }
        Ok(v)
    }

    pub(crate) fn from_map_unchecked(space: Space, coords: BTreeMap<Word, Q>) -> Self {
        debug_assert!(coords.keys().all(|l| space.contains_label(l)));
        debug_assert!(coords.values().all(|c| !c.is_zero()));
        TensorVector { space, coords }
    }

    /// Interprets a homogeneous tensor as a vector of `Tensor { n, m }`.
    pub fn from_poly(space: Space, p: &Poly) -> Result<Self, LinAlgError> {
        Self::from_terms(space, p.terms().iter().map(|(w, c)| (w.clone(), c.clone())))
    }

    pub fn to_poly(&self) -> Poly {
        Poly::from_terms(self.coords.iter().map(|(w, c)| (w.clone(), c.clone())))
    }

    pub fn space(&self) -> Space {
        self.space
    }

    pub fn coords(&self) -> &BTreeMap<Word, Q> {
        &self.coords
    }

    pub fn coeff(&self, label: &[u8]) -> Q {
        self.coords.get(label).cloned().unwrap_or_else(Q::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coords.is_empty()
    }

    pub(crate) fn add_term(&mut self, label: Word, c: Q) {
        if c.is_zero() {
            return;
        }
        match self.coords.entry(label) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn add_scaled(&mut self, other: &TensorVector, c: &Q) -> Result<(), LinAlgError> {
        self.check_space(other)?;
        if c.is_zero() {
            return Ok(());
        }
        for (l, a) in &other.coords {
            let e = self.coords.entry(l.clone()).or_insert_with(Q::zero);
            *e += a * c;
            if e.is_zero() {
                self.coords.remove(l);
            }
        }
        Ok(())
    }

    pub fn add(&self, other: &TensorVector) -> Result<TensorVector, LinAlgError> {
        let mut out = self.clone();
        out.add_scaled(other, &crate::rational::one())?;
        Ok(out)
    }

    pub fn sub(&self, other: &TensorVector) -> Result<TensorVector, LinAlgError> {
        let mut out = self.clone();
        out.add_scaled(other, &crate::rational::q(-1))?;
        Ok(out)
    }

    pub fn scale(&self, c: &Q) -> TensorVector {
        if c.is_zero() {
            return TensorVector::zero(self.space);
        }
        TensorVector {
            space: self.space,
            coords: self
                .coords
                .iter()
                .map(|(l, a)| (l.clone(), a * c))
                .collect(),
        }
    }

    pub(crate) fn check_space(&self, other: &TensorVector) -> Result<(), LinAlgError> {
        if self.space != other.space {
            return Err(LinAlgError::SpaceMismatch {
                left: self.space.to_string(),
                right: other.space.to_string(),
            });
        }
        Ok(())
    }

    pub fn to_json_terms(&self) -> Vec<LabelledCoefficient> {
        self.coords
            .iter()
            .map(|(l, c)| LabelledCoefficient {
                label: format_word(l),
                coefficient: c.clone(),
            })
            .collect()
    }

    pub fn from_json_terms(
        space: Space,
        terms: &[LabelledCoefficient],
    ) -> Result<Self, LinAlgError> {
        let parsed = terms
            .iter()
            .map(|t| {
                parse_word_label(&t.label)
                    .map(|l| (l, t.coefficient.clone()))
                    .ok_or_else(|| LinAlgError::BadLabel {
                        space: space.to_string(),
                        label: t.label.clone(),
                    })
            })
            .collect::<Result<Vec<_>, _>>()?;
        Self::from_terms(space, parsed)
    }
}

/// One coordinate in serialized form.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LabelledCoefficient {
    pub label: String,
    #[serde(with = "fraction_serde")]
    pub coefficient: Q,
}

impl std::fmt::Display for TensorVector {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}: {}", self.space, self.to_poly())
    }
}
