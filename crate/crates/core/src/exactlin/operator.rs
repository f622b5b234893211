use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::{Arc, Mutex};

use num_traits::Zero;

use super::{IntMatrix, LinAlgError, Space, TensorVector};
use crate::lie::{lyndon_bracket_tensor, LieElement};
use crate::rational::{q, Q};
use crate::tensor::{Poly, Word};

type Image = Arc<Vec<(Word, Q)>>;
type Action = dyn Fn(&[u8]) -> Vec<(Word, Q)> + Send + Sync;

/// A linear map between two [`Space`]s, defined on basis labels.
///
/// Images of basis labels are memoized. An operator may carry a witness for
/// its inverse, which orbit saturation requires.
pub struct LinearOperator {
    name: String,
    source: Space,
    target: Space,
    action: Arc<Action>,
    cache: Mutex<HashMap<Word, Image>>,
    inverse: Option<Box<LinearOperator>>,
}

impl LinearOperator {
    pub fn new(
        name: impl Into<String>,
        source: Space,
        target: Space,
        action: impl Fn(&[u8]) -> Vec<(Word, Q)> + Send + Sync + 'static,
    ) -> Self {
        LinearOperator {
            name: name.into(),
            source,
            target,
            action: Arc::new(action),
            cache: Mutex::new(HashMap::new()),
            inverse: None,
        }
    }

    pub fn zero(source: Space, target: Space) -> Self {
        LinearOperator::new("0", source, target, |_| Vec::new())
    }

    /// Attaches an inverse witness. It is checked on every basis label.
    pub fn with_inverse(mut self, inverse: LinearOperator) -> Result<Self, LinAlgError> {
        if inverse.source != self.target || inverse.target != self.source {
            return Err(LinAlgError::SpaceMismatch {
                left: format!("{} -> {}", self.source, self.target),
                right: format!("{} -> {}", inverse.source, inverse.target),
            });
        }
        for l in self.source.basis_labels() {
            let e = TensorVector::basis(self.source, l.clone())?;
            if inverse.apply(&self.apply(&e)?)? != e {
                return Err(LinAlgError::BadInverse {
                    operator: self.name.clone(),
                });
            }
        }
        for l in self.target.basis_labels() {
            let e = TensorVector::basis(self.target, l)?;
            if self.apply(&inverse.apply(&e)?)? != e {
                return Err(LinAlgError::BadInverse {
                    operator: self.name.clone(),
                });
            }
        }
        self.inverse = Some(Box::new(inverse));
        Ok(self)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn source(&self) -> Space {
        self.source
    }

    pub fn target(&self) -> Space {
        self.target
    }

    pub fn inverse(&self) -> Option<&LinearOperator> {
        self.inverse.as_deref()
    }

    fn image_of(&self, label: &[u8]) -> Image {
        if let Some(img) = self.cache.lock().unwrap().get(label) {
            return img.clone();
        }
        let img = Arc::new((self.action)(label));
        self.cache
            .lock()
            .unwrap()
            .insert(label.to_vec(), img.clone());
        img
    }

    pub fn apply(&self, v: &TensorVector) -> Result<TensorVector, LinAlgError> {
        if v.space() != self.source {
            return Err(LinAlgError::SpaceMismatch {
                left: self.source.to_string(),
                right: v.space().to_string(),
            });
        }
        let mut acc: BTreeMap<Word, Q> = BTreeMap::new();
        for (l, c) in v.coords() {
            for (m, a) in self.image_of(l).iter() {
                let e = acc.entry(m.clone()).or_insert_with(Q::zero);
                *e += a * c;
            }
        }
        acc.retain(|_, c| !c.is_zero());
        Ok(TensorVector::from_map_unchecked(self.target, acc))
    }

    /// `self ∘ other`.
    pub fn compose(
        self: &Arc<Self>,
        other: &Arc<LinearOperator>,
    ) -> Result<LinearOperator, LinAlgError> {
        if other.target != self.source {
            return Err(LinAlgError::SpaceMismatch {
                left: self.source.to_string(),
                right: other.target.to_string(),
            });
        }
        let (f, g) = (self.clone(), other.clone());
        let src = other.source;
        Ok(LinearOperator::new(
            format!("{}*{}", self.name, other.name),
            src,
            self.target,
            move |l| {
                let e = TensorVector::basis(src, l.to_vec()).expect("label of source");
                let v = f.apply(&g.apply(&e).expect("space")).expect("space");
                v.coords()
                    .iter()
                    .map(|(w, c)| (w.clone(), c.clone()))
                    .collect()
            },
        ))
    }
}

impl fmt::Debug for LinearOperator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "LinearOperator({}: {} -> {}{})",
            self.name,
            self.source,
            self.target,
            if self.inverse.is_some() {
                ", invertible"
            } else {
                ""
            }
        )
    }
}

/// Expands `(Σ c_1 e_a) ⊗ ... ⊗ (Σ c_m e_a)` into simple tensors.
pub(crate) fn expand_product(factors: &[Vec<(u8, Q)>]) -> Vec<(Word, Q)> {
    let mut acc: Vec<(Word, Q)> = vec![(Vec::new(), q(1))];
    for f in factors {
        let mut next = Vec::with_capacity(acc.len() * f.len());
        for (w, c) in &acc {
            for (a, x) in f {
                let mut w2 = w.clone();
                w2.push(*a);
                next.push((w2, c * x));
            }
        }
        acc = next;
    }
    acc
}

fn to_q(v: Vec<(u8, i64)>) -> Vec<(u8, Q)> {
    v.into_iter().map(|(a, x)| (a, q(x))).collect()
}

/// Sorts a sequence of distinct indices, returning the sign of the sorting
/// permutation; `None` if an index repeats.
pub(crate) fn sort_with_sign(w: &mut [u8]) -> Option<i64> {
    let mut sign = 1;
    for i in 1..w.len() {
        let mut j = i;
        while j > 0 && w[j - 1] > w[j] {
            w.swap(j - 1, j);
            sign = -sign;
            j -= 1;
        }
    }
    w.windows(2).all(|p| p[0] != p[1]).then_some(sign)
}

/// The functorial action on `space` of the matrix `g` acting on `V`; `g_inv`
/// is used on dual factors (inverse transpose).
fn induced_action(
    g: &IntMatrix,
    g_inv: &IntMatrix,
    space: Space,
) -> impl Fn(&[u8]) -> Vec<(Word, Q)> + Send + Sync + 'static {
    let cols: Vec<Vec<(u8, Q)>> = (1..=g.dim()).map(|j| to_q(g.column(j))).collect();
    let dual_rows: Vec<Vec<(u8, Q)>> = (1..=g.dim()).map(|i| to_q(g_inv.row(i))).collect();
    let apply_tensor = {
        let cols = cols.clone();
        move |w: &[u8]| -> Vec<(Word, Q)> {
            let factors: Vec<Vec<(u8, Q)>> =
                w.iter().map(|&a| cols[a as usize - 1].clone()).collect();
            expand_product(&factors)
        }
    };
    move |l: &[u8]| -> Vec<(Word, Q)> {
        match space {
            Space::V { .. } | Space::Tensor { .. } => apply_tensor(l),
            Space::Dual { .. } => dual_rows[l[0] as usize - 1]
                .iter()
                .map(|(a, c)| (vec![*a], c.clone()))
                .collect(),
            Space::DualTensor { .. } => {
                let mut factors = vec![dual_rows[l[0] as usize - 1].clone()];
                factors.extend(l[1..].iter().map(|&a| cols[a as usize - 1].clone()));
                expand_product(&factors)
            }
            Space::Mk { n, .. } => {
                let pw = lyndon_bracket_tensor(&l[1..]);
                let mut moved = Poly::zero();
                for (w, c) in pw.terms() {
                    for (w2, c2) in apply_tensor(w) {
                        moved.add_term(w2, c * c2);
                    }
                }
                let lie = LieElement::from_tensor(n, &moved)
                    .expect("linear automorphisms preserve Lie elements");
                let mut out = Vec::new();
                for (d, x) in &dual_rows[l[0] as usize - 1] {
                    for (w, c) in lie.coords() {
                        let mut lab = vec![*d];
                        lab.extend_from_slice(w);
                        out.push((lab, x * c));
                    }
                }
                out
            }
            Space::WedgeSymp { .. } => {
                let mut out = Vec::new();
                for (mut w, c) in apply_tensor(l) {
                    if let Some(s) = sort_with_sign(&mut w) {
                        out.push((w, c * q(s)));
                    }
                }
                out
            }
        }
    }
}

/// The operator induced on `space` by `g` (with inverse `g_inv`), carrying the
/// induced operator of `g_inv` as its inverse witness.
pub fn induced_operator(
    name: &str,
    g: &IntMatrix,
    g_inv: &IntMatrix,
    space: Space,
) -> Result<LinearOperator, LinAlgError> {
    if g.dim() != space.base_dim() || g_inv.dim() != space.base_dim() {
        return Err(LinAlgError::Constraint(format!(
            "matrix of size {} does not act on {space}",
            g.dim()
        )));
    }
    if !g.mul(g_inv).is_identity() {
        return Err(LinAlgError::BadInverse {
            operator: name.to_string(),
        });
    }
    let fwd = LinearOperator::new(name, space, space, induced_action(g, g_inv, space));
    let back = LinearOperator::new(
        format!("{name}^-1"),
        space,
        space,
        induced_action(g_inv, g, space),
    );
    Ok(LinearOperator {
        inverse: Some(Box::new(back)),
        ..fwd
    })
}
