//! Finite-generation certificates: a sequence `x_1..x_r` with character
//! values and, for each `i ≥ 2`, an index `j < i` with `χ(x_j) ≠ 0` and a word
//! in `x_1..x_{i-1}` equal to `[x_j, x_i]`.

use std::collections::{BTreeMap, HashMap, VecDeque};

use num_traits::Zero;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::autf::{nielsen_decompose, AutfError, FreeAutomorphism, SupportSet};
use crate::commgraph::{conjugate_path, lowest_outside, GraphError, SubgroupHandle};
use crate::rational::{fraction_vec_serde, Q};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CertError {
    #[error("malformed certificate: {0}")]
    Malformed(String),
    #[error("element {0} is not IA")]
    NotIa(String),
    #[error("chooser supplied no element with nonzero character on {vertex}")]
    ChooserFailed { vertex: String },
    #[error("chooser element is not in {vertex}")]
    ChooserOutside { vertex: String },
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Autf(#[from] AutfError),
}

/// Character values on named elements, keyed by the automorphism text.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Character {
    values: BTreeMap<String, Q>,
}

impl Character {
    pub fn new() -> Self {
        Character::default()
    }

    pub fn set(&mut self, g: &FreeAutomorphism, v: Q) {
        self.values.insert(g.to_string(), v);
    }

    pub fn get(&self, g: &FreeAutomorphism) -> Option<&Q> {
        self.values.get(&g.to_string())
    }
}

/// Witness for entry `i`: `[x_j, x_i] = word`, with `word` a list of signed
/// 1-based indices into the element list.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    pub i: usize,
    pub j: usize,
    pub word: Vec<i64>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BnsCertificate {
    pub elements: Vec<FreeAutomorphism>,
    pub chi: Vec<Q>,
    pub witnesses: Vec<Witness>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CertificateJson {
    pub elements: Vec<String>,
    #[serde(with = "fraction_vec_serde")]
    pub chi: Vec<Q>,
    pub witnesses: Vec<Witness>,
}

impl BnsCertificate {
    pub fn to_json(&self) -> CertificateJson {
        CertificateJson {
            elements: self.elements.iter().map(|e| e.to_string()).collect(),
            chi: self.chi.clone(),
            witnesses: self.witnesses.clone(),
        }
    }

    pub fn from_json(j: &CertificateJson) -> Result<Self, CertError> {
        let elements = j
            .elements
            .iter()
            .map(|s| s.parse::<FreeAutomorphism>())
            .collect::<Result<Vec<_>, _>>()?;
        Ok(BnsCertificate {
            elements,
            chi: j.chi.clone(),
            witnesses: j.witnesses.clone(),
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "condition", rename_all = "snake_case")]
pub enum Failure {
    /// `χ(x_1) = 0`.
    FirstCharacterZero,
    /// The cited `x_j` has `χ(x_j) = 0`.
    WitnessCharacterZero { i: usize, j: usize },
    /// `[x_j, x_i]` differs from the witness word.
    CommutatorMismatch { i: usize, j: usize },
    /// The witness word has nonzero total character, impossible for a
    /// commutator.
    CharacterInconsistent { i: usize },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Verdict {
    pub valid: bool,
    pub failure: Option<Failure>,
    pub scope: String,
}

const SCOPE: &str = "G is taken to be the subgroup generated by the listed elements";

fn eval_word(word: &[i64], elements: &[FreeAutomorphism], n: usize) -> FreeAutomorphism {
    word.iter().fold(FreeAutomorphism::identity(n), |acc, &l| {
        let e = &elements[l.unsigned_abs() as usize - 1];
        let f = if l > 0 { e.clone() } else { e.inverse() };
        acc.compose(&f).expect("ranks checked")
    })
}

fn check_shape(c: &BnsCertificate) -> Result<usize, CertError> {
    let bad = |m: String| Err(CertError::Malformed(m));
    let r = c.elements.len();
    if r == 0 {
        return bad("no elements".into());
    }
    if c.chi.len() != r {
        return bad(format!("{} character values for {r} elements", c.chi.len()));
    }
    let n = c.elements[0].rank();
    if c.elements.iter().any(|e| e.rank() != n) {
        return bad("elements of different ranks".into());
    }
    let mut seen = vec![false; r + 1];
    for w in &c.witnesses {
        if w.i < 2 || w.i > r {
            return bad(format!("witness index i = {} outside 2..={r}", w.i));
        }
        if w.j == 0 || w.j >= w.i {
            return bad(format!(
                "witness for i = {} cites j = {}, need 1 <= j < i",
                w.i, w.j
            ));
        }
        if let Some(&l) = w
            .word
            .iter()
            .find(|&&l| l == 0 || l.unsigned_abs() as usize >= w.i)
        {
            return bad(format!(
                "witness for i = {} uses letter {l} outside x_1..x_{}",
                w.i,
                w.i - 1
            ));
        }
        if std::mem::replace(&mut seen[w.i], true) {
            return bad(format!("two witnesses for i = {}", w.i));
        }
    }
    if let Some(i) = (2..=r).find(|&i| !seen[i]) {
        return bad(format!("no witness for i = {i}"));
    }
    Ok(n)
}

/// Checks the certificate, reporting the first failing condition.
pub fn check_certificate(c: &BnsCertificate) -> Result<Verdict, CertError> {
    let n = check_shape(c)?;
    let verdict = |failure: Option<Failure>| Verdict {
        valid: failure.is_none(),
        failure,
        scope: SCOPE.to_string(),
    };
    if c.chi[0].is_zero() {
        return Ok(verdict(Some(Failure::FirstCharacterZero)));
    }
    let mut ws: Vec<&Witness> = c.witnesses.iter().collect();
    ws.sort_by_key(|w| w.i);
    for w in ws {
        let (i, j) = (w.i, w.j);
        if c.chi[j - 1].is_zero() {
            return Ok(verdict(Some(Failure::WitnessCharacterZero { i, j })));
        }
        let comm = c.elements[j - 1].group_commutator(&c.elements[i - 1])?;
        if comm != eval_word(&w.word, &c.elements, n) {
            return Ok(verdict(Some(Failure::CommutatorMismatch { i, j })));
        }
        let sum = w.word.iter().fold(Q::zero(), |acc, &l| {
            let v = &c.chi[l.unsigned_abs() as usize - 1];
            if l > 0 {
                acc + v
            } else {
                acc - v
            }
        });
        if !sum.is_zero() {
            return Ok(verdict(Some(Failure::CharacterInconsistent { i })));
        }
    }
    Ok(verdict(None))
}

/// Picks an element of the given conjugated parabolic together with its
/// character value, or `None`.
pub type Chooser<'a> = dyn FnMut(&SubgroupHandle) -> Option<(FreeAutomorphism, Q)> + 'a;

#[derive(Clone, Debug)]
pub struct AssembledCertificate {
    pub certificate: BnsCertificate,
    /// Vertices in the order used (breadth-first from `Γ_[m]`, ties broken by
    /// first occurrence along the paths).
    pub vertex_order: Vec<SubgroupHandle>,
}

fn element_in(h: &SubgroupHandle, g: &FreeAutomorphism) -> Result<bool, CertError> {
    // g ∈ c^{-1} Γ_I c  iff  c g c^{-1} ∈ Γ_I
    let c = h.conjugator_element()?;
    let x = g.conjugate_by(&c.inverse())?;
    Ok(x.is_saut() && x.minimal_support().is_subset(h.indices()))
}

/// Builds a certificate from the commuting-graph paths joining `Γ_[m]` to
/// `Γ_[m]^t` for `t ∈ T`.
pub fn assemble_certificate(
    n: usize,
    ts: &[FreeAutomorphism],
    m: usize,
    chi_seed: &Character,
    chooser: &mut Chooser<'_>,
) -> Result<AssembledCertificate, CertError> {
    let base: Vec<usize> = (1..=m).collect();
    let root = SubgroupHandle::standard(n, &base)?;
    for t in ts {
        if t.rank() != n {
            return Err(AutfError::RankMismatch {
                left: n,
                right: t.rank(),
            }
            .into());
        }
        if !t.is_ia() {
            return Err(CertError::NotIa(t.to_string()));
        }
    }

    // vertices deduplicated by canonical handle, first occurrence wins
    let mut keys: HashMap<SubgroupHandle, usize> = HashMap::new();
    let mut found: Vec<SubgroupHandle> = Vec::new();
    let mut adj: Vec<Vec<usize>> = Vec::new();
    let mut intern =
        |h: &SubgroupHandle, found: &mut Vec<SubgroupHandle>, adj: &mut Vec<Vec<usize>>| {
            *keys.entry(h.canonical()).or_insert_with(|| {
                found.push(h.clone());
                adj.push(Vec::new());
                found.len() - 1
            })
        };
    intern(&root, &mut found, &mut adj);
    let mut t_vertex = Vec::with_capacity(ts.len());
    for t in ts {
        let word = nielsen_decompose(t)?;
        let path = conjugate_path(n, &base, &word)?;
        let ids: Vec<usize> = path
            .vertices
            .iter()
            .map(|h| intern(h, &mut found, &mut adj))
            .collect();
        for w in ids.windows(2) {
            if w[0] != w[1] && !adj[w[0]].contains(&w[1]) {
                adj[w[0]].push(w[1]);
                adj[w[1]].push(w[0]);
            }
        }
        t_vertex.push(*ids.last().expect("nonempty path"));
    }
    // a root with no neighbour gets one, so extra entries at the root have a witness
    if adj[0].is_empty() && t_vertex.contains(&0) {
        let k = lowest_outside(m, n, &SupportSet::new(base.clone()))?;
        let h = SubgroupHandle::new(n, k, Vec::new())?;
        let id = intern(&h, &mut found, &mut adj);
        adj[0].push(id);
        adj[id].push(0);
    }

    let mut order = Vec::new();
    let mut parent: Vec<Option<usize>> = vec![None; found.len()];
    let mut visited = vec![false; found.len()];
    let mut queue = VecDeque::from([0usize]);
    visited[0] = true;
    while let Some(v) = queue.pop_front() {
        order.push(v);
        for &u in &adj[v] {
            if !visited[u] {
                visited[u] = true;
                parent[u] = Some(v);
                queue.push_back(u);
            }
        }
    }
    let pos: HashMap<usize, usize> = order.iter().enumerate().map(|(p, &v)| (v, p + 1)).collect();

    let mut elements: Vec<FreeAutomorphism> = Vec::new();
    let mut chi: Vec<Q> = Vec::new();
    let mut witnesses = Vec::new();
    let mut choose = |h: &SubgroupHandle| -> Result<(FreeAutomorphism, Q), CertError> {
        let (g, v) = chooser(h).ok_or_else(|| CertError::ChooserFailed {
            vertex: h.to_string(),
        })?;
        if v.is_zero() {
            return Err(CertError::ChooserFailed {
                vertex: h.to_string(),
            });
        }
        if !element_in(h, &g)? {
            return Err(CertError::ChooserOutside {
                vertex: h.to_string(),
            });
        }
        Ok((g, v))
    };
    let (g1, chi1) = choose(&found[0])?;
    elements.push(g1.clone());
    chi.push(chi1.clone());
    // forced choices g_1^t, first t per vertex
    let mut forced: HashMap<usize, usize> = HashMap::new();
    for (idx, &v) in t_vertex.iter().enumerate() {
        forced.entry(v).or_insert(idx);
    }
    for &v in &order[1..] {
        let (g, val) = match forced.get(&v) {
            Some(&ti) => (g1.conjugate_by(&ts[ti])?, chi1.clone()),
            None => choose(&found[v])?,
        };
        elements.push(g);
        chi.push(val);
        witnesses.push(Witness {
            i: elements.len(),
            j: pos[&parent[v].expect("reached by BFS")],
            word: Vec::new(),
        });
    }
    // conjugates g_1^t for t whose vertex already carries another element
    let mut conj_index: Vec<usize> = Vec::with_capacity(ts.len());
    for (idx, t) in ts.iter().enumerate() {
        let v = t_vertex[idx];
        if v != 0 && forced[&v] == idx {
            conj_index.push(pos[&v]);
            continue;
        }
        let neighbour = match parent[v] {
            Some(p) => pos[&p],
            None => pos[adj[0].first().expect("root neighbour added above")],
        };
        elements.push(g1.conjugate_by(t)?);
        chi.push(chi1.clone());
        witnesses.push(Witness {
            i: elements.len(),
            j: neighbour,
            word: Vec::new(),
        });
        conj_index.push(elements.len());
    }
    // finally the generators themselves: [g_1, t] = g_1^{-1} g_1^t
    for (idx, t) in ts.iter().enumerate() {
        elements.push(t.clone());
        chi.push(chi_seed.get(t).cloned().unwrap_or_else(Q::zero));
        witnesses.push(Witness {
            i: elements.len(),
            j: 1,
            word: vec![-1, conj_index[idx] as i64],
        });
    }
    Ok(AssembledCertificate {
        certificate: BnsCertificate {
            elements,
            chi,
            witnesses,
        },
        vertex_order: order.iter().map(|&v| found[v].clone()).collect(),
    })
}
