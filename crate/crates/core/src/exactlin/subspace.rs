use std::collections::{BTreeMap, VecDeque};

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use super::{LabelledCoefficient, LinAlgError, LinearOperator, Space, TensorVector};
use crate::rational::Q;
use crate::tensor::Word;

type Row = BTreeMap<Word, Q>;

fn axpy(target: &mut Row, row: &Row, c: &Q) {
    for (l, a) in row {
        let e = target.entry(l.clone()).or_insert_with(Q::zero);
        *e -= a * c;
        if e.is_zero() {
            target.remove(l);
        }
    }
}

/// A subspace held in reduced row echelon form. Each row is keyed by its pivot
/// (its smallest label, coefficient 1), and no row mentions another pivot.
#[derive(Clone, Debug)]
pub struct Subspace {
    space: Space,
    rows: BTreeMap<Word, Row>,
}

impl Subspace {
    pub fn zero(space: Space) -> Self {
        Subspace {
            space,
            rows: BTreeMap::new(),
        }
    }

    pub fn whole(space: Space) -> Self {
        let rows = space
            .basis_labels()
            .into_iter()
            .map(|l| (l.clone(), BTreeMap::from([(l, Q::one())])))
            .collect();
        Subspace { space, rows }
    }

    pub fn space(&self) -> Space {
        self.space
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    fn check(&self, v: &TensorVector) -> Result<(), LinAlgError> {
        if v.space() != self.space {
            return Err(LinAlgError::SpaceMismatch {
                left: self.space.to_string(),
                right: v.space().to_string(),
            });
        }
        Ok(())
    }

    fn reduce_row(&self, mut v: Row) -> Row {
        let hits: Vec<(Word, Q)> = v
            .iter()
            .filter(|(l, _)| self.rows.contains_key(*l))
            .map(|(l, c)| (l.clone(), c.clone()))
            .collect();
        // rows are fully reduced, so eliminating one pivot never creates another
        for (l, c) in hits {
            axpy(&mut v, &self.rows[&l], &c);
        }
        v
    }

    /// Remainder of `v` modulo the subspace.
    pub fn reduce(&self, v: &TensorVector) -> Result<TensorVector, LinAlgError> {
        self.check(v)?;
        Ok(TensorVector::from_map_unchecked(
            self.space,
            self.reduce_row(v.coords().clone()),
        ))
    }

    pub fn contains(&self, v: &TensorVector) -> Result<bool, LinAlgError> {
        Ok(self.reduce(v)?.is_zero())
    }

    /// Adds `v` to the subspace. Returns the reduced remainder when it was new.
    pub fn insert(&mut self, v: &TensorVector) -> Result<Option<TensorVector>, LinAlgError> {
        self.check(v)?;
        let r = self.reduce_row(v.coords().clone());
        Ok(self.insert_reduced(r))
    }

    fn insert_reduced(&mut self, mut r: Row) -> Option<TensorVector> {
        let (pivot, lead) = r.iter().next().map(|(l, c)| (l.clone(), c.clone()))?;
        let remainder = TensorVector::from_map_unchecked(self.space, r.clone());
        let inv = lead.recip();
        for c in r.values_mut() {
            *c *= &inv;
        }
        for row in self.rows.values_mut() {
            if let Some(c) = row.get(&pivot).cloned() {
                axpy(row, &r, &c);
            }
        }
        self.rows.insert(pivot, r);
        Some(remainder)
    }

    pub fn basis(&self) -> Vec<TensorVector> {
        self.rows
            .values()
            .map(|r| TensorVector::from_map_unchecked(self.space, r.clone()))
            .collect()
    }

    pub fn pivots(&self) -> impl Iterator<Item = &Word> {
        self.rows.keys()
    }

    pub fn is_subspace_of(&self, other: &Subspace) -> Result<bool, LinAlgError> {
        if self.space != other.space {
            return Err(LinAlgError::SpaceMismatch {
                left: self.space.to_string(),
                right: other.space.to_string(),
            });
        }
        Ok(self
            .rows
            .values()
            .all(|r| other.reduce_row(r.clone()).is_empty()))
    }

    pub fn to_json(&self) -> SubspaceJson {
        SubspaceJson {
            space: self.space.to_string(),
            dim: self.dim(),
            basis: self
                .basis()
                .iter()
                .map(TensorVector::to_json_terms)
                .collect(),
        }
    }
}

impl PartialEq for Subspace {
    /// Reduced row echelon form is canonical.
    fn eq(&self, other: &Self) -> bool {
        self.space == other.space && self.rows == other.rows
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SubspaceJson {
    pub space: String,
    pub dim: usize,
    pub basis: Vec<Vec<LabelledCoefficient>>,
}

pub fn span_basis(space: Space, vectors: &[TensorVector]) -> Result<Subspace, LinAlgError> {
    let mut s = Subspace::zero(space);
    for v in vectors {
        s.insert(v)?;
    }
    Ok(s)
}

/// Kernel of a linear map given by the images of the source basis.
pub fn kernel_of_images(
    source: Space,
    target: Space,
    images: impl IntoIterator<Item = (Word, TensorVector)>,
) -> Result<Subspace, LinAlgError> {
    // echelon rows of images, each tracking the source combination producing it
    let mut rows: BTreeMap<Word, (Row, Row)> = BTreeMap::new();
    let mut kernel = Subspace::zero(source);
    for (label, img) in images {
        if img.space() != target {
            return Err(LinAlgError::SpaceMismatch {
                left: target.to_string(),
                right: img.space().to_string(),
            });
        }
        let mut v = img.coords().clone();
        let mut combo: Row = BTreeMap::from([(label, Q::one())]);
        let hits: Vec<(Word, Q)> = v
            .iter()
            .filter(|(l, _)| rows.contains_key(*l))
            .map(|(l, c)| (l.clone(), c.clone()))
            .collect();
        for (l, c) in hits {
            let (r, rc) = &rows[&l];
            axpy(&mut v, r, &c);
            axpy(&mut combo, rc, &c);
        }
        match v.iter().next().map(|(l, c)| (l.clone(), c.clone())) {
            None => {
                kernel.insert_reduced(kernel.reduce_row(combo));
            }
            Some((pivot, lead)) => {
                let inv = lead.recip();
                v.values_mut().for_each(|c| *c *= &inv);
                combo.values_mut().for_each(|c| *c *= &inv);
                for (r, rc) in rows.values_mut() {
                    if let Some(c) = r.get(&pivot).cloned() {
                        axpy(r, &v, &c);
                        axpy(rc, &combo, &c);
                    }
                }
                rows.insert(pivot, (v, combo));
            }
        }
    }
    Ok(kernel)
}

pub fn kernel_basis(op: &LinearOperator) -> Result<Subspace, LinAlgError> {
    let src = op.source();
    let images = src
        .basis_labels()
        .into_iter()
        .map(|l| {
            let e = TensorVector::basis(src, l.clone())?;
            Ok((l, op.apply(&e)?))
        })
        .collect::<Result<Vec<_>, LinAlgError>>()?;
    kernel_of_images(src, op.target(), images)
}

pub fn subspace_equal(a: &Subspace, b: &Subspace) -> Result<bool, LinAlgError> {
    Ok(a.dim() == b.dim() && a.is_subspace_of(b)? && b.is_subspace_of(a)?)
}

/// Smallest subspace containing `seeds` and stable under every generator and
/// its inverse.
pub fn orbit_saturate(
    generators: &[&LinearOperator],
    seeds: &[TensorVector],
) -> Result<Subspace, LinAlgError> {
    let space = match (seeds.first(), generators.first()) {
        (Some(v), _) => v.space(),
        (None, Some(g)) => g.source(),
        (None, None) => {
            return Err(LinAlgError::Constraint(
                "orbit of nothing: no seeds and no generators".into(),
            ))
        }
    };
    let mut ops: Vec<&LinearOperator> = Vec::new();
    for g in generators {
        if g.source() != space || g.target() != space {
            return Err(LinAlgError::SpaceMismatch {
                left: space.to_string(),
                right: format!("{} -> {}", g.source(), g.target()),
            });
        }
        let inv = g.inverse().ok_or_else(|| LinAlgError::MissingInverse {
            operator: g.name().to_string(),
        })?;
        ops.push(g);
        ops.push(inv);
    }
    let mut sub = Subspace::zero(space);
    let mut queue = VecDeque::new();
    for s in seeds {
        if let Some(r) = sub.insert(s)? {
            queue.push_back(r);
        }
    }
    while let Some(v) = queue.pop_front() {
        for g in &ops {
            if let Some(r) = sub.insert(&g.apply(&v)?)? {
                queue.push_back(r);
            }
        }
    }
    Ok(sub)
}
