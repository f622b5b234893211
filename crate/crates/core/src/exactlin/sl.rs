use std::collections::BTreeMap;

use num_traits::Zero;
use serde::Serialize;

use super::operator::expand_product;
use super::phi::{e_delta, phi_map};
use super::{
    induced_operator, kernel_of_images, orbit_saturate, subspace_equal, IntMatrix, LinAlgError,
    LinearOperator, Space, TensorVector,
};
use crate::lie::lyndon_words;
use crate::rational::{fraction_serde, q, Q};
use crate::tensor::{format_word, Word};

/// The elementary matrix `E_ij`: `e_j ↦ e_j + e_i`, other basis vectors fixed.
pub fn elementary_matrix(i: usize, j: usize, n: usize) -> Result<IntMatrix, LinAlgError> {
    elementary_power(i, j, n, 1)
}

fn elementary_power(i: usize, j: usize, n: usize, p: i64) -> Result<IntMatrix, LinAlgError> {
    if i == j || i == 0 || j == 0 || i > n || j > n {
        return Err(LinAlgError::Constraint(format!(
            "E_{{{i},{j}}} needs distinct indices in 1..={n}"
        )));
    }
    let mut m = IntMatrix::identity(n);
    m.set(i, j, p);
    Ok(m)
}

/// `E_ij` acting on `V = Q^n`.
pub fn elementary_sl(i: usize, j: usize, n: usize) -> Result<LinearOperator, LinAlgError> {
    elementary_on(i, j, Space::V { n })
}

/// `E_ij` acting on any space built from `V` (`V^*` via inverse transpose).
pub fn elementary_on(i: usize, j: usize, space: Space) -> Result<LinearOperator, LinAlgError> {
    let n = space.base_dim();
    induced_operator(
        &format!("E{i},{j}"),
        &elementary_power(i, j, n, 1)?,
        &elementary_power(i, j, n, -1)?,
        space,
    )
}

/// All `E_ij`, `i ≠ j`, acting on `space`.
pub fn sl_generators(space: Space) -> Result<Vec<LinearOperator>, LinAlgError> {
    let n = space.base_dim();
    let mut out = Vec::new();
    for i in 1..=n {
        for j in 1..=n {
            if i != j {
                out.push(elementary_on(i, j, space)?);
            }
        }
    }
    Ok(out)
}

/// Number of occurrences of `δ_0` in the tail `δ_1 ... δ_{k+1}`.
pub fn c_count(delta: &[u8]) -> usize {
    match delta.split_first() {
        Some((i, tail)) => tail.iter().filter(|&&a| a == *i).count(),
        None => 0,
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct SequenceTerm {
    pub sequence: String,
    #[serde(with = "fraction_serde")]
    pub coefficient: Q,
    pub c: usize,
}

/// Outcome of the reduction step `z = E_ij² e_δ' − 2 E_ij e_δ'`.
#[derive(Clone, Debug, Serialize)]
pub struct ZReport {
    pub delta: String,
    pub j: usize,
    pub delta_prime: String,
    pub c: usize,
    #[serde(with = "fraction_serde")]
    pub leading_coefficient: Q,
    #[serde(with = "fraction_serde")]
    pub expected_leading: Q,
    pub u_terms: Vec<SequenceTerm>,
    pub max_u_c: Option<usize>,
    /// The sequence-level expansion evaluates to the same vector as the
    /// induced operator on Lyndon coordinates.
    pub consistent: bool,
    pub holds: bool,
}

/// `E_ij^p` applied to `e_δ` by multilinearity, as a formal sum of index
/// sequences: `e_i^*` becomes `e_i^* − p e_j^*`, each `e_j` in the tail
/// becomes `e_j + p e_i`.
fn formal_elementary(delta: &[u8], i: u8, j: u8, p: i64) -> BTreeMap<Word, Q> {
    let dual = |d: u8| {
        if d == i {
            vec![(i, q(1)), (j, q(-p))]
        } else {
            vec![(d, q(1))]
        }
    };
    let col = |a: u8| {
        if a == j {
            vec![(j, q(1)), (i, q(p))]
        } else {
            vec![(a, q(1))]
        }
    };
    let mut factors = vec![dual(delta[0])];
    factors.extend(delta[1..].iter().map(|&a| col(a)));
    let mut out: BTreeMap<Word, Q> = BTreeMap::new();
    for (w, c) in expand_product(&factors) {
        *out.entry(w).or_insert_with(Q::zero) += c;
    }
    out
}

pub fn z_decomposition(n: usize, delta: &[u8]) -> Result<ZReport, LinAlgError> {
    let c = c_count(delta);
    if delta.len() < 3 || c < 2 {
        return Err(LinAlgError::Constraint(format!(
            "reduction step needs c(δ) ≥ 2, got {c} for {}",
            format_word(delta)
        )));
    }
    let i = delta[0];
    let j = (1..=n as u8)
        .find(|a| !delta.contains(a))
        .ok_or_else(|| LinAlgError::Constraint(format!("no index outside {delta:?}")))?;
    let mut dp = delta.to_vec();
    for a in dp[1..].iter_mut() {
        if *a == i {
            *a = j;
        }
    }
    let mut z = formal_elementary(&dp, i, j, 2);
    for (w, x) in formal_elementary(&dp, i, j, 1) {
        *z.entry(w).or_insert_with(Q::zero) -= x * q(2);
    }
    z.retain(|_, x| !x.is_zero());
    let leading = z.get(delta).cloned().unwrap_or_else(Q::zero);
    let expected = q((1i64 << c) - 2);
    let u_terms: Vec<SequenceTerm> = z
        .iter()
        .filter(|(w, _)| w.as_slice() != delta)
        .map(|(w, x)| SequenceTerm {
            sequence: format_word(w),
            coefficient: x.clone(),
            c: c_count(w),
        })
        .collect();
    let max_u_c = u_terms.iter().map(|t| t.c).max();

    let space = Space::Mk {
        n,
        k: delta.len() - 2,
    };
    let e = elementary_on(i as usize, j as usize, space)?;
    let ed = e_delta(n, &dp)?;
    let once = e.apply(&ed)?;
    let direct = e.apply(&once)?.sub(&once.scale(&q(2)))?;
    let mut formal = TensorVector::zero(space);
    for (w, x) in &z {
        formal.add_scaled(&e_delta(n, w)?, x)?;
    }
    let consistent = formal == direct;
    let holds = consistent && leading == expected && max_u_c.is_none_or(|m| m < c);
    Ok(ZReport {
        delta: format_word(delta),
        j: j as usize,
        delta_prime: format_word(&dp),
        c,
        leading_coefficient: leading,
        expected_leading: expected,
        u_terms,
        max_u_c,
        consistent,
        holds,
    })
}

fn closing_constraints(
    n: usize,
    k: usize,
    i: usize,
    j: usize,
    eps: &[u8],
) -> Result<(), LinAlgError> {
    let bad = |m: String| Err(LinAlgError::Constraint(m));
    if eps.len() != k || k == 0 {
        return bad(format!("ε must have length k = {k}"));
    }
    if i == j || i == 0 || j == 0 || i > n || j > n {
        return bad(format!("need distinct i, j in 1..={n}"));
    }
    if eps
        .iter()
        .any(|&a| a == 0 || a as usize > n || a as usize == i || a as usize == j)
    {
        return bad(format!("ε entries must lie in 1..={n} and avoid i, j"));
    }
    Ok(())
}

/// Both sides of `e_{iiε} − e_{jjε} = E_ij e_{ijε} − e_{ijε} + e_{jiε}`.
pub fn closing_identity_sides(
    n: usize,
    k: usize,
    i: usize,
    j: usize,
    eps: &[u8],
) -> Result<(TensorVector, TensorVector), LinAlgError> {
    closing_constraints(n, k, i, j, eps)?;
    let seq = |a: usize, b: usize| {
        let mut s = vec![a as u8, b as u8];
        s.extend_from_slice(eps);
        e_delta(n, &s)
    };
    let lhs = seq(i, i)?.sub(&seq(j, j)?)?;
    let e = elementary_on(i, j, Space::Mk { n, k })?;
    let eij = seq(i, j)?;
    let rhs = e.apply(&eij)?.sub(&eij)?.add(&seq(j, i)?)?;
    Ok((lhs, rhs))
}

pub fn closing_identity_check(
    n: usize,
    k: usize,
    i: usize,
    j: usize,
    eps: &[u8],
) -> Result<bool, LinAlgError> {
    let (lhs, rhs) = closing_identity_sides(n, k, i, j, eps)?;
    Ok(lhs == rhs)
}

#[derive(Clone, Debug, Serialize)]
pub struct KernelClaimReport {
    pub n: usize,
    pub k: usize,
    pub space: String,
    pub ambient_dim: usize,
    pub seed_count: usize,
    pub seeds_in_kernel: bool,
    pub saturated_dim: usize,
    pub kernel_dim: usize,
    pub equal: bool,
}

/// Compares the `SL_n`-saturation of `{e_i^* ⊗ P_w : i ∉ w}` with the kernel
/// of `Φ` on `V^* ⊗ Lie_{k+1}(V)`.
pub fn kernel_claim_check(n: usize, k: usize) -> Result<KernelClaimReport, LinAlgError> {
    if k < 2 || k + 2 > n {
        return Err(LinAlgError::Constraint(format!(
            "need 2 ≤ k ≤ n − 2, got n = {n}, k = {k}"
        )));
    }
    kernel_claim_compare(n, k)
}

/// The same comparison without the range restriction; only `k ≥ 1` and
/// `n ≥ 2` are required.
pub fn kernel_claim_compare(n: usize, k: usize) -> Result<KernelClaimReport, LinAlgError> {
    if k < 1 || n < 2 {
        return Err(LinAlgError::Constraint(format!(
            "need k ≥ 1 and n ≥ 2, got n = {n}, k = {k}"
        )));
    }
    let space = Space::Mk { n, k };
    let labels = space.basis_labels();
    let kernel = kernel_of_images(
        space,
        Space::Tensor { n, m: k },
        labels
            .iter()
            .map(|l| {
                let e = TensorVector::basis(space, l.clone())?;
                Ok((l.clone(), phi_map(&e)?))
            })
            .collect::<Result<Vec<_>, LinAlgError>>()?,
    )?;
    let mut seeds = Vec::new();
    for i in 1..=n as u8 {
        for w in lyndon_words(n, k + 1) {
            if !w.contains(&i) {
                let mut l = vec![i];
                l.extend(w);
                seeds.push(TensorVector::basis(space, l)?);
            }
        }
    }
    let seeds_in_kernel = seeds
        .iter()
        .map(|s| phi_map(s).map(|v| v.is_zero()))
        .collect::<Result<Vec<_>, _>>()?
        .into_iter()
        .all(|b| b);
    let gens = sl_generators(space)?;
    let refs: Vec<&LinearOperator> = gens.iter().collect();
    let sat = orbit_saturate(&refs, &seeds)?;
    Ok(KernelClaimReport {
        n,
        k,
        space: space.to_string(),
        ambient_dim: labels.len(),
        seed_count: seeds.len(),
        seeds_in_kernel,
        saturated_dim: sat.dim(),
        kernel_dim: kernel.dim(),
        equal: subspace_equal(&sat, &kernel)?,
    })
}
