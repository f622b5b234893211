use std::fmt;

use crate::lie::{is_lyndon, lyndon_words};
use crate::tensor::Word;

/// A structured rational vector space with a canonical basis of labels.
///
/// Labels are small letter strings:
/// - `V`, `Dual`: `[i]`;
/// - `Tensor`: a word of length `m` (the simple tensor `e_{w_1} ⊗ ... ⊗ e_{w_m}`);
/// - `DualTensor`: `[i, w_1, ..., w_m]` for `e_i^* ⊗ e_{w_1} ⊗ ... ⊗ e_{w_m}`;
/// - `Mk`: `[i, w...]` with `w` a Lyndon word of length `k + 1`, standing for
///   `e_i^* ⊗ P_w` in `V^* ⊗ Lie_{k+1}(V)`. For `k = 1` this is
///   `Hom(V, ⋀²V)` via `[e_a, e_b] ↔ e_a ∧ e_b`;
/// - `WedgeSymp`: a strictly increasing sequence of indices in `1..=2g`, where
///   `a_i = i` and `b_i = g + i`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Space {
    V { n: usize },
    Dual { n: usize },
    Tensor { n: usize, m: usize },
    DualTensor { n: usize, m: usize },
    Mk { n: usize, k: usize },
    WedgeSymp { g: usize, degree: usize },
}

impl Space {
    /// `Hom(V, ⋀²V)`, identified with `V^* ⊗ Lie_2(V)`.
    pub fn hom_wedge2(n: usize) -> Space {
        Space::Mk { n, k: 1 }
    }

    /// Dimension of the underlying `V`.
    pub fn base_dim(&self) -> usize {
        match *self {
            Space::V { n }
            | Space::Dual { n }
            | Space::Tensor { n, .. }
            | Space::DualTensor { n, .. }
            | Space::Mk { n, .. } => n,
            Space::WedgeSymp { g, .. } => 2 * g,
        }
    }

    pub fn contains_label(&self, l: &[u8]) -> bool {
        let d = self.base_dim();
        let in_range = |a: &u8| *a >= 1 && (*a as usize) <= d;
        if !l.iter().all(in_range) {
            return false;
        }
        match *self {
            Space::V { .. } | Space::Dual { .. } => l.len() == 1,
            Space::Tensor { m, .. } => l.len() == m,
            Space::DualTensor { m, .. } => l.len() == m + 1,
            Space::Mk { k, .. } => l.len() == k + 2 && is_lyndon(&l[1..]),
            Space::WedgeSymp { degree, .. } => {
                l.len() == degree && l.windows(2).all(|p| p[0] < p[1])
            }
        }
    }

    /// All basis labels in increasing order.
    pub fn basis_labels(&self) -> Vec<Word> {
        match *self {
            Space::V { n } | Space::Dual { n } => (1..=n as u8).map(|i| vec![i]).collect(),
            Space::Tensor { n, m } => all_words(n, m),
            Space::DualTensor { n, m } => all_words(n, m + 1),
            Space::Mk { n, k } => {
                let lyn = lyndon_words(n, k + 1);
                let mut out = Vec::with_capacity(n * lyn.len());
                for i in 1..=n as u8 {
                    for w in &lyn {
                        let mut l = vec![i];
                        l.extend_from_slice(w);
                        out.push(l);
                    }
                }
                out
            }
            Space::WedgeSymp { g, degree } => increasing_sequences(2 * g, degree),
        }
    }

    pub fn dim(&self) -> usize {
        self.basis_labels().len()
    }
}

pub(crate) fn all_words(n: usize, m: usize) -> Vec<Word> {
    let mut out: Vec<Word> = vec![Vec::new()];
    for _ in 0..m {
        out = out
            .into_iter()
            .flat_map(|w| {
                (1..=n as u8).map(move |a| {
                    let mut v = w.clone();
                    v.push(a);
                    v
                })
            })
            .collect();
    }
    out
}

fn increasing_sequences(d: usize, k: usize) -> Vec<Word> {
    fn rec(start: u8, d: u8, k: usize, cur: &mut Word, out: &mut Vec<Word>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for a in start..=d {
            cur.push(a);
            rec(a + 1, d, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(1, d as u8, k, &mut Vec::new(), &mut out);
    out
}

impl fmt::Display for Space {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Space::V { n } => write!(f, "V(n={n})"),
            Space::Dual { n } => write!(f, "Vdual(n={n})"),
            Space::Tensor { n, m } => write!(f, "Tensor(n={n},m={m})"),
            Space::DualTensor { n, m } => write!(f, "DualTensor(n={n},m={m})"),
            Space::Mk { n, k } => write!(f, "Mk(n={n},k={k})"),
            Space::WedgeSymp { g, degree } => write!(f, "Wedge{degree}Symp(g={g})"),
        }
    }
}
