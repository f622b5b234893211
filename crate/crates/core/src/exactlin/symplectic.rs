use serde::Serialize;

use super::operator::sort_with_sign;
use super::{
    induced_operator, orbit_saturate, IntMatrix, LinAlgError, LinearOperator, Space, TensorVector,
};
use crate::rational::q;

/// Index of `a_i` in the symplectic basis `a_1..a_g, b_1..b_g`.
pub fn a(i: usize) -> u8 {
    i as u8
}

/// Index of `b_i`.
pub fn b(i: usize, g: usize) -> u8 {
    (g + i) as u8
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum SpGenerator {
    /// `a_i ↦ b_i`, `b_i ↦ −a_i`.
    Sigma(usize),
    /// `b_i ↦ b_i + a_j`, `b_j ↦ b_j + a_i`.
    Tau(usize, usize),
    /// `x ↦ x + ω(x, v) v` for an integer vector `v`.
    Transvection(Vec<i64>),
}

/// `ω(a_i, b_i) = 1 = −ω(b_i, a_i)`, all other pairings zero.
pub fn symplectic_form(g: usize) -> IntMatrix {
    let mut j = IntMatrix::identity(2 * g);
    for r in 1..=2 * g {
        j.set(r, r, 0);
    }
    for i in 1..=g {
        j.set(a(i) as usize, b(i, g) as usize, 1);
        j.set(b(i, g) as usize, a(i) as usize, -1);
    }
    j
}

pub fn preserves_symplectic_form(m: &IntMatrix, g: usize) -> bool {
    let j = symplectic_form(g);
    m.dim() == 2 * g && m.transpose().mul(&j).mul(m) == j
}

/// Matrix of the generator together with the matrix of its inverse.
pub fn sp_matrices(kind: &SpGenerator, g: usize) -> Result<(IntMatrix, IntMatrix), LinAlgError> {
    let bad = |m: String| Err(LinAlgError::Constraint(m));
    let d = 2 * g;
    let mut m = IntMatrix::identity(d);
    let mut inv = IntMatrix::identity(d);
    match kind {
        SpGenerator::Sigma(i) => {
            let i = *i;
            if i == 0 || i > g {
                return bad(format!("σ_{i} needs 1 ≤ i ≤ {g}"));
            }
            let (ai, bi) = (a(i) as usize, b(i, g) as usize);
            m.set(ai, ai, 0);
            m.set(bi, bi, 0);
            m.set(bi, ai, 1);
            m.set(ai, bi, -1);
            inv.set(ai, ai, 0);
            inv.set(bi, bi, 0);
            inv.set(bi, ai, -1);
            inv.set(ai, bi, 1);
        }
        SpGenerator::Tau(i, j) => {
            let (i, j) = (*i, *j);
            if i == j || i == 0 || j == 0 || i > g || j > g {
                return bad(format!("τ_{{{i},{j}}} needs distinct indices in 1..={g}"));
            }
            m.set(a(j) as usize, b(i, g) as usize, 1);
            m.set(a(i) as usize, b(j, g) as usize, 1);
            inv.set(a(j) as usize, b(i, g) as usize, -1);
            inv.set(a(i) as usize, b(j, g) as usize, -1);
        }
        SpGenerator::Transvection(v) => {
            if v.len() != d {
                return bad(format!("transvection vector must have length {d}"));
            }
            let jm = symplectic_form(g);
            // column c of T_v is e_c + ω(e_c, v) v
            for c in 1..=d {
                let w: i64 = (1..=d).map(|r| jm.get(c, r) * v[r - 1]).sum();
                for r in 1..=d {
                    m.set(r, c, m.get(r, c) + w * v[r - 1]);
                    inv.set(r, c, inv.get(r, c) - w * v[r - 1]);
                }
            }
        }
    }
    Ok((m, inv))
}

fn kind_name(kind: &SpGenerator) -> String {
    match kind {
        SpGenerator::Sigma(i) => format!("sigma{i}"),
        SpGenerator::Tau(i, j) => format!("tau{i},{j}"),
        SpGenerator::Transvection(v) => format!("T{v:?}"),
    }
}

/// The generator acting on `V = Q^{2g}`.
pub fn sp_generator(kind: &SpGenerator, g: usize) -> Result<LinearOperator, LinAlgError> {
    let (m, inv) = sp_matrices(kind, g)?;
    induced_operator(&kind_name(kind), &m, &inv, Space::V { n: 2 * g })
}

/// The generator acting on `⋀^degree V`.
pub fn wedge_lift(
    kind: &SpGenerator,
    g: usize,
    degree: usize,
) -> Result<LinearOperator, LinAlgError> {
    let (m, inv) = sp_matrices(kind, g)?;
    induced_operator(&kind_name(kind), &m, &inv, Space::WedgeSymp { g, degree })
}

pub fn wedge3_lift(kind: &SpGenerator, g: usize) -> Result<LinearOperator, LinAlgError> {
    wedge_lift(kind, g, 3)
}

/// `e_{p_1} ∧ ... ∧ e_{p_d}` in sorted form (zero on repeated indices).
pub fn wedge(g: usize, indices: &[u8]) -> Result<TensorVector, LinAlgError> {
    let space = Space::WedgeSymp {
        g,
        degree: indices.len(),
    };
    let mut w = indices.to_vec();
    match sort_with_sign(&mut w) {
        Some(s) => TensorVector::from_terms(space, [(w, q(s))]),
        None => Ok(TensorVector::zero(space)),
    }
}

/// `{σ_i} ∪ {τ_ij : i ≠ j}`.
pub fn basic_generators(g: usize) -> Vec<SpGenerator> {
    let mut out: Vec<SpGenerator> = (1..=g).map(SpGenerator::Sigma).collect();
    for i in 1..=g {
        for j in 1..=g {
            if i != j {
                out.push(SpGenerator::Tau(i, j));
            }
        }
    }
    out
}

/// Transvections along `a_i`, `b_i`, `a_i + a_j`, `b_i + b_j`, `a_i + b_j`.
pub fn extended_generators(g: usize) -> Vec<SpGenerator> {
    let unit = |p: u8| {
        let mut v = vec![0i64; 2 * g];
        v[p as usize - 1] = 1;
        v
    };
    let sum = |p: u8, r: u8| {
        let mut v = unit(p);
        v[r as usize - 1] += 1;
        v
    };
    let mut out = basic_generators(g);
    for i in 1..=g {
        out.push(SpGenerator::Transvection(unit(a(i))));
        out.push(SpGenerator::Transvection(unit(b(i, g))));
        for j in 1..=g {
            if i < j {
                out.push(SpGenerator::Transvection(sum(a(i), a(j))));
                out.push(SpGenerator::Transvection(sum(b(i, g), b(j, g))));
            }
            if i != j {
                out.push(SpGenerator::Transvection(sum(a(i), b(j, g))));
            }
        }
    }
    out
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum OrbitStatus {
    Spans,
    Inconclusive,
}

#[derive(Clone, Debug, Serialize)]
pub struct SpOrbitReport {
    pub g: usize,
    pub extended_generators: bool,
    pub generator_count: usize,
    pub target_dim: usize,
    pub saturated_dim: usize,
    pub status: OrbitStatus,
}

/// Saturates `a_1 ∧ a_2 ∧ b_2` in `⋀³V`. Falling short of the full dimension
/// only shows that the chosen generators do not suffice, hence `Inconclusive`.
pub fn sp_orbit_check(g: usize, extended: bool) -> Result<SpOrbitReport, LinAlgError> {
    if g < 2 {
        return Err(LinAlgError::Constraint("need g ≥ 2".into()));
    }
    let kinds = if extended {
        extended_generators(g)
    } else {
        basic_generators(g)
    };
    let ops = kinds
        .iter()
        .map(|k| wedge3_lift(k, g))
        .collect::<Result<Vec<_>, _>>()?;
    let refs: Vec<&LinearOperator> = ops.iter().collect();
    let seed = wedge(g, &[a(1), a(2), b(2, g)])?;
    let sat = orbit_saturate(&refs, &[seed])?;
    let target = Space::WedgeSymp { g, degree: 3 }.dim();
    Ok(SpOrbitReport {
        g,
        extended_generators: extended,
        generator_count: kinds.len(),
        target_dim: target,
        saturated_dim: sat.dim(),
        status: if sat.dim() == target {
            OrbitStatus::Spans
        } else {
            OrbitStatus::Inconclusive
        },
    })
}
