use std::collections::BTreeSet;

use super::{LinAlgError, Space, Subspace, TensorVector};
use crate::lie::{left_normed_tensor, lyndon_bracket_tensor, LieElement};
use crate::magnus::JohnsonImage;
use crate::rational::q;
use crate::tensor::Word;

/// Rewrites a vector of `V^* ⊗ Lie_{k+1}(V)` inside `V^* ⊗ V^{⊗(k+1)}`.
pub fn mk_to_dual_tensor(v: &TensorVector) -> Result<TensorVector, LinAlgError> {
    let Space::Mk { n, k } = v.space() else {
        return Err(LinAlgError::WrongSpace {
            expected: "Mk".into(),
            found: v.space().to_string(),
        });
    };
    let mut out = TensorVector::zero(Space::DualTensor { n, m: k + 1 });
    for (l, c) in v.coords() {
        for (w, a) in lyndon_bracket_tensor(&l[1..]).terms() {
            let mut lab = vec![l[0]];
            lab.extend_from_slice(w);
            out.add_term(lab, a * c);
        }
    }
    Ok(out)
}

/// The contraction `v^* ⊗ v_0 ⊗ ... ⊗ v_k ↦ v^*(v_0) v_1 ⊗ ... ⊗ v_k`.
/// Vectors of `Mk` are first embedded in the tensor algebra.
pub fn phi_map(t: &TensorVector) -> Result<TensorVector, LinAlgError> {
    let t = match t.space() {
        Space::Mk { .. } => mk_to_dual_tensor(t)?,
        Space::DualTensor { m, .. } if m >= 2 => t.clone(),
        other => {
            return Err(LinAlgError::WrongSpace {
                expected: "DualTensor with m >= 2 or Mk".into(),
                found: other.to_string(),
            })
        }
    };
    let Space::DualTensor { n, m } = t.space() else {
        unreachable!()
    };
    let mut out = TensorVector::zero(Space::Tensor { n, m: m - 1 });
    for (l, c) in t.coords() {
        if l[0] == l[1] {
            out.add_term(l[2..].to_vec(), c.clone());
        }
    }
    Ok(out)
}

/// `Φ` applied to the tensor embedding of a Johnson image.
pub fn tau_map(j: &JohnsonImage) -> Result<TensorVector, LinAlgError> {
    phi_map(&j.to_vector())
}

/// `γ(v_1 ⊗ ... ⊗ v_k) = v_2 ⊗ ... ⊗ v_k ⊗ v_1`.
pub fn cyclic_shift(t: &TensorVector) -> Result<TensorVector, LinAlgError> {
    let Space::Tensor { .. } = t.space() else {
        return Err(LinAlgError::WrongSpace {
            expected: "Tensor".into(),
            found: t.space().to_string(),
        });
    };
    let mut out = TensorVector::zero(t.space());
    for (l, c) in t.coords() {
        let mut w = l.clone();
        if !w.is_empty() {
            w.rotate_left(1);
        }
        out.add_term(w, c.clone());
    }
    Ok(out)
}

fn rotations(w: &[u8]) -> BTreeSet<Word> {
    (0..w.len().max(1))
        .map(|s| {
            let mut r = w.to_vec();
            if !r.is_empty() {
                r.rotate_left(s);
            }
            r
        })
        .collect()
}

/// Basis of the `γ`-invariants of `V^{⊗k}`: one orbit sum per necklace.
pub fn w_basis(n: usize, k: usize) -> Result<Subspace, LinAlgError> {
    if k == 0 {
        return Err(LinAlgError::Constraint("k must be at least 1".into()));
    }
    let space = Space::Tensor { n, m: k };
    let mut seen = BTreeSet::new();
    let mut sums = Vec::new();
    for w in space.basis_labels() {
        if seen.contains(&w) {
            continue;
        }
        let orbit = rotations(&w);
        seen.extend(orbit.iter().cloned());
        sums.push(TensorVector::from_terms(
            space,
            orbit.into_iter().map(|r| (r, q(1))),
        )?);
    }
    super::span_basis(space, &sums)
}

/// Basis of `im(1 - γ)`, the kernel of the projection of `V^{⊗k}` onto its
/// `γ`-coinvariants. It is the complement of [`w_basis`] for the invariant
/// inner product.
pub fn cyclic_difference_basis(n: usize, k: usize) -> Result<Subspace, LinAlgError> {
    if k == 0 {
        return Err(LinAlgError::Constraint("k must be at least 1".into()));
    }
    let space = Space::Tensor { n, m: k };
    let mut vs = Vec::new();
    for w in space.basis_labels() {
        let e = TensorVector::basis(space, w)?;
        vs.push(e.sub(&cyclic_shift(&e)?)?);
    }
    super::span_basis(space, &vs)
}

/// Number of necklaces of length `k` over `n` letters.
pub fn necklace_count(n: usize, k: usize) -> usize {
    Space::Tensor { n, m: k }
        .basis_labels()
        .into_iter()
        .filter(|w| rotations(w).iter().next() == Some(w))
        .count()
}

/// `e_δ = e_i^* ⊗ [e_{ω_1}, ..., e_{ω_{k+1}}]` for `δ = iω`, in Lyndon
/// coordinates of `Mk(n, k)`.
pub fn e_delta(n: usize, delta: &[u8]) -> Result<TensorVector, LinAlgError> {
    if delta.len() < 3 {
        return Err(LinAlgError::Constraint(format!(
            "index sequence {delta:?} is too short"
        )));
    }
    if delta.iter().any(|&a| a == 0 || a as usize > n) {
        return Err(LinAlgError::Constraint(format!(
            "index sequence {delta:?} out of range for n = {n}"
        )));
    }
    let k = delta.len() - 2;
    let lie = LieElement::from_tensor(n, &left_normed_tensor(&delta[1..]))?;
    let space = Space::Mk { n, k };
    TensorVector::from_terms(
        space,
        lie.coords().iter().map(|(w, c)| {
            let mut l = vec![delta[0]];
            l.extend_from_slice(w);
            (l, c.clone())
        }),
    )
}

/// `e_{w_1} ⊗ ... ⊗ e_{w_k}` as a vector of `Tensor(n, k)`.
pub fn simple_tensor(n: usize, w: &[u8]) -> Result<TensorVector, LinAlgError> {
    TensorVector::basis(Space::Tensor { n, m: w.len() }, w.to_vec())
}
