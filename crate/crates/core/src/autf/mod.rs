//! Free group words and automorphisms of `F_n`.

mod automorphism;
pub mod families;
mod nielsen;
mod text;
mod word;

use thiserror::Error;

pub use automorphism::{integer_determinant, FreeAutomorphism};
pub use families::{
    eval_nielsen_word, make_magnus_c, make_magnus_m, make_nielsen, make_s, make_s_right_normed,
    make_signed_permutation, make_t, NielsenGen, Side,
};
pub use nielsen::{invert_images, nielsen_decompose};
pub use text::{parse_images, parse_word};
pub use word::FreeWord;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AutfError {
    #[error("generator index {index} out of range for rank {rank}")]
    IndexOutOfRange { index: usize, rank: usize },
    #[error("rank mismatch: {left} vs {right}")]
    RankMismatch { left: usize, right: usize },
    #[error("index {index} repeated")]
    RepeatedIndex { index: usize },
    #[error("exponent must be ±1, got {0}")]
    BadExponent(i8),
    #[error("{0}")]
    Constraint(String),
    #[error("inverse witness fails on x{generator}")]
    BadInverseWitness { generator: usize },
    #[error("empty commutator")]
    EmptyCommutator,
    #[error("images do not define an automorphism")]
    NotInvertible,
    #[error("greedy Nielsen reduction is stuck; supply an explicit inverse")]
    NielsenReductionStuck,
    #[error("automorphism does not lie in SAut(F_n)")]
    NotSpecial,
    #[error("parse error: {0}")]
    Parse(String),
}

/// A subset `I` of `[n]`, kept sorted.
#[derive(
    Debug,
    Clone,
    PartialEq,
    Eq,
    Hash,
    PartialOrd,
    Ord,
    Default,
    serde::Serialize,
    serde::Deserialize,
)]
#[serde(transparent)]
pub struct SupportSet(Vec<usize>);

impl SupportSet {
    pub fn new(mut indices: Vec<usize>) -> Self {
        indices.sort_unstable();
        indices.dedup();
        SupportSet(indices)
    }

    pub fn indices(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, i: usize) -> bool {
        self.0.binary_search(&i).is_ok()
    }

    pub fn is_subset(&self, other: &SupportSet) -> bool {
        self.0.iter().all(|&i| other.contains(i))
    }

    pub fn is_disjoint(&self, other: &SupportSet) -> bool {
        !self.0.iter().any(|&i| other.contains(i))
    }

    pub fn union(&self, other: &SupportSet) -> SupportSet {
        SupportSet::new(self.0.iter().chain(other.0.iter()).copied().collect())
    }
}

impl FromIterator<usize> for SupportSet {
    fn from_iter<T: IntoIterator<Item = usize>>(iter: T) -> Self {
        SupportSet::new(iter.into_iter().collect())
    }
}
