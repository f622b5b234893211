//! The commuting graph on conjugates of the parabolic subgroups `Γ_I` of
//! `SAut(F_n)`, and the path builder connecting `Γ_I` to `Γ_I^g`.

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::autf::{eval_nielsen_word, AutfError, FreeAutomorphism, NielsenGen, Side, SupportSet};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("parabolic on {size} index(es) has no Nielsen generators in SAut")]
    Degenerate { size: usize },
    #[error("bound 2m + 1 <= n violated: m = {m}, n = {n}")]
    Bound { m: usize, n: usize },
    #[error("no {m} indices outside {avoid:?} in rank {n}")]
    NoRoom {
        m: usize,
        n: usize,
        avoid: Vec<usize>,
    },
    #[error("index set {0:?} is out of range")]
    BadIndices(Vec<usize>),
    #[error(transparent)]
    Autf(#[from] AutfError),
}

/// The subgroup `Γ_I^g = g^{-1} Γ_I g`, with `g` given as a Nielsen word.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SubgroupHandle {
    #[serde(skip)]
    rank: usize,
    #[serde(rename = "I")]
    indices: SupportSet,
    conjugator: Vec<NielsenGen>,
}

impl SubgroupHandle {
    pub fn new(
        rank: usize,
        indices: SupportSet,
        conjugator: Vec<NielsenGen>,
    ) -> Result<Self, GraphError> {
        if indices.is_empty() || indices.indices().iter().any(|&i| i == 0 || i > rank) {
            return Err(GraphError::BadIndices(indices.indices().to_vec()));
        }
        for s in &conjugator {
            if s.i == s.j || s.i == 0 || s.j == 0 || s.i > rank || s.j > rank || s.exp.abs() != 1 {
                return Err(GraphError::Autf(AutfError::Constraint(format!(
                    "invalid Nielsen letter {s}"
                ))));
            }
        }
        Ok(SubgroupHandle {
            rank,
            indices,
            conjugator,
        })
    }

    /// The standard parabolic `Γ_I`.
    pub fn standard(rank: usize, indices: &[usize]) -> Result<Self, GraphError> {
        Self::new(rank, SupportSet::new(indices.to_vec()), Vec::new())
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub(crate) fn with_rank(mut self, rank: usize) -> Self {
        self.rank = rank;
        self
    }

    pub fn indices(&self) -> &SupportSet {
        &self.indices
    }

    pub fn conjugator(&self) -> &[NielsenGen] {
        &self.conjugator
    }

    pub fn conjugator_element(&self) -> Result<FreeAutomorphism, GraphError> {
        Ok(eval_nielsen_word(&self.conjugator, self.rank)?)
    }

    /// `(Γ_I^g)^h = Γ_I^{gh}`.
    pub fn translate(&self, h: &[NielsenGen]) -> SubgroupHandle {
        let mut c = self.conjugator.clone();
        c.extend_from_slice(h);
        SubgroupHandle {
            conjugator: c,
            ..self.clone()
        }
    }

    /// Same subgroup, shorter conjugator: free cancellation, then leading
    /// letters that lie in `Γ_I` or commute with it are dropped.
    pub fn canonical(&self) -> SubgroupHandle {
        let mut word: Vec<NielsenGen> = Vec::new();
        for &s in &self.conjugator {
            if word.last() == Some(&s.inverse()) {
                word.pop();
            } else {
                word.push(s);
            }
        }
        let skip = word
            .iter()
            .take_while(|s| {
                let sup = SupportSet::new(s.support().to_vec());
                sup.is_subset(&self.indices) || sup.is_disjoint(&self.indices)
            })
            .count();
        SubgroupHandle {
            conjugator: word[skip..].to_vec(),
            ..self.clone()
        }
    }
}

impl fmt::Display for SubgroupHandle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let idx: Vec<String> = self
            .indices
            .indices()
            .iter()
            .map(usize::to_string)
            .collect();
        write!(f, "Γ{{{}}}", idx.join(","))?;
        if !self.conjugator.is_empty() {
            let c: Vec<String> = self.conjugator.iter().map(NielsenGen::to_string).collect();
            write!(f, "^({})", c.join(" "))?;
        }
        Ok(())
    }
}

/// `{L_ab, R_ab : a ≠ b ∈ I}`, each conjugated by the handle's conjugator.
pub fn parabolic_generators(h: &SubgroupHandle) -> Result<Vec<FreeAutomorphism>, GraphError> {
    let idx = h.indices.indices();
    if idx.len() <= 1 {
        return Err(GraphError::Degenerate { size: idx.len() });
    }
    let g = h.conjugator_element()?;
    let mut out = Vec::with_capacity(2 * idx.len() * (idx.len() - 1));
    for side in [Side::Left, Side::Right] {
        for &a in idx {
            for &b in idx {
                if a != b {
                    out.push(
                        NielsenGen::new(side, a, b, 1)
                            .to_automorphism(h.rank)?
                            .conjugate_by(&g)?,
                    );
                }
            }
        }
    }
    Ok(out)
}

/// Whether the two subgroups commute elementwise.
pub fn commutes(h1: &SubgroupHandle, h2: &SubgroupHandle) -> Result<bool, GraphError> {
    if h1.rank != h2.rank {
        return Err(AutfError::RankMismatch {
            left: h1.rank,
            right: h2.rank,
        }
        .into());
    }
    let (g1, g2) = (parabolic_generators(h1)?, parabolic_generators(h2)?);
    for a in &g1 {
        for b in &g2 {
            if !a.commutes_with(b)? {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// An ordered list of vertices of the commuting graph.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct GraphPath {
    pub vertices: Vec<SubgroupHandle>,
}

impl GraphPath {
    pub fn edges(&self) -> usize {
        self.vertices.len().saturating_sub(1)
    }

    pub fn first(&self) -> Option<&SubgroupHandle> {
        self.vertices.first()
    }

    pub fn last(&self) -> Option<&SubgroupHandle> {
        self.vertices.last()
    }

    /// Restores the rank after deserialization.
    pub fn with_rank(self, rank: usize) -> GraphPath {
        GraphPath {
            vertices: self
                .vertices
                .into_iter()
                .map(|h| h.with_rank(rank))
                .collect(),
        }
    }

    /// Appends `other`, merging the shared endpoint.
    fn concat(&mut self, other: GraphPath) {
        let mut it = other.vertices.into_iter().peekable();
        if let (Some(last), Some(first)) = (self.vertices.last(), it.peek()) {
            if last.canonical() == first.canonical() {
                it.next();
            }
        }
        self.vertices.extend(it);
    }
}

impl fmt::Display for GraphPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .vertices
            .iter()
            .map(SubgroupHandle::to_string)
            .collect();
        write!(f, "{}", parts.join(" -- "))
    }
}

fn check_bound(m: usize, n: usize) -> Result<(), GraphError> {
    if m < 2 {
        return Err(GraphError::Degenerate { size: m });
    }
    if 2 * m + 1 > n {
        return Err(GraphError::Bound { m, n });
    }
    Ok(())
}

/// The `m` smallest indices of `[n]` outside `avoid`.
pub fn lowest_outside(m: usize, n: usize, avoid: &SupportSet) -> Result<SupportSet, GraphError> {
    let k: Vec<usize> = (1..=n).filter(|&a| !avoid.contains(a)).take(m).collect();
    if k.len() < m {
        return Err(GraphError::NoRoom {
            m,
            n,
            avoid: avoid.indices().to_vec(),
        });
    }
    Ok(SupportSet::new(k))
}

/// The path `η_s` from `Γ_I` to `Γ_I^s`: trivial when `s` has support
/// disjoint from `I`, else `Γ_I -- Γ_K -- Γ_I^s` with `K` the lowest `m`
/// indices avoiding `I` and the support of `s`.
pub fn generator_edge_path(
    n: usize,
    indices: &[usize],
    s: NielsenGen,
) -> Result<GraphPath, GraphError> {
    let start = SubgroupHandle::standard(n, indices)?;
    let m = start.indices.len();
    check_bound(m, n)?;
    let sup = s.to_automorphism(n)?.minimal_support();
    if sup.is_disjoint(&start.indices) {
        return Ok(GraphPath {
            vertices: vec![start],
        });
    }
    let k = lowest_outside(m, n, &start.indices.union(&sup))?;
    let end = start.translate(&[s]);
    Ok(GraphPath {
        vertices: vec![start, SubgroupHandle::new(n, k, Vec::new())?, end],
    })
}

/// Path from `Γ_I` to `Γ_I^g` for `g = s_1 ... s_l`:
/// `η_{s_l} • η_{s_{l-1}}^{s_l} • ... • η_{s_1}^{s_2 ... s_l}`.
pub fn conjugate_path(
    n: usize,
    indices: &[usize],
    g: &[NielsenGen],
) -> Result<GraphPath, GraphError> {
    let start = SubgroupHandle::standard(n, indices)?;
    check_bound(start.indices.len(), n)?;
    let mut path = GraphPath {
        vertices: vec![start],
    };
    for t in (0..g.len()).rev() {
        let suffix = &g[t + 1..];
        let seg = generator_edge_path(n, indices, g[t])?;
        path.concat(GraphPath {
            vertices: seg.vertices.iter().map(|h| h.translate(suffix)).collect(),
        });
    }
    Ok(path)
}

/// Every consecutive pair commutes elementwise, after collapsing steps
/// between handles that are equal by [`SubgroupHandle::canonical`].
pub fn verify_path(p: &GraphPath) -> bool {
    let Some(first) = p.vertices.first() else {
        return true;
    };
    let m = first.indices.len();
    if p.vertices
        .iter()
        .any(|h| h.indices.len() != m || h.rank != first.rank)
    {
        return false;
    }
    p.vertices
        .windows(2)
        .all(|w| w[0].canonical() == w[1].canonical() || commutes(&w[0], &w[1]).unwrap_or(false))
}
