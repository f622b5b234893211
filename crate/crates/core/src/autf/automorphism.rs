use std::fmt;

use super::{AutfError, FreeWord, SupportSet};

/// An automorphism of `F_n`, stored as the images of the basis together with
/// the images of the basis under its inverse.
///
/// Composition uses left-action notation: `compose(f, g)` applies `g` first.
#[derive(Clone)]
pub struct FreeAutomorphism {
    rank: usize,
    images: Vec<FreeWord>,
    inverse_images: Vec<FreeWord>,
}

impl FreeAutomorphism {
    pub fn identity(rank: usize) -> Self {
        let basis: Vec<FreeWord> = (1..=rank)
            .map(|i| FreeWord::reduce(&[i as i32], rank).unwrap())
            .collect();
        FreeAutomorphism {
            rank,
            images: basis.clone(),
            inverse_images: basis,
        }
    }

    /// Builds an automorphism from basis images and a witness for its inverse.
    /// Both composites are checked against the identity.
    pub fn new(images: Vec<FreeWord>, inverse_images: Vec<FreeWord>) -> Result<Self, AutfError> {
        let rank = images.len();
        if inverse_images.len() != rank {
            return Err(AutfError::RankMismatch {
                left: rank,
                right: inverse_images.len(),
            });
        }
        for w in images.iter().chain(inverse_images.iter()) {
            if w.rank() != rank {
                return Err(AutfError::RankMismatch {
                    left: rank,
                    right: w.rank(),
                });
            }
        }
        let f = FreeAutomorphism {
            rank,
            images,
            inverse_images,
        };
        let forward = Self::from_parts_unchecked(rank, f.images.clone(), Vec::new());
        let backward = Self::from_parts_unchecked(rank, f.inverse_images.clone(), Vec::new());
        for i in 1..=rank {
            let x = FreeWord::reduce(&[i as i32], rank).unwrap();
            if forward.apply(&backward.apply(&x)) != x || backward.apply(&forward.apply(&x)) != x {
                return Err(AutfError::BadInverseWitness { generator: i });
            }
        }
        Ok(f)
    }

    pub(crate) fn from_parts_unchecked(
        rank: usize,
        images: Vec<FreeWord>,
        inverse_images: Vec<FreeWord>,
    ) -> Self {
        FreeAutomorphism {
            rank,
            images,
            inverse_images,
        }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Image of `x_i` (1-based).
    pub fn image(&self, i: usize) -> &FreeWord {
        &self.images[i - 1]
    }

    pub fn images(&self) -> &[FreeWord] {
        &self.images
    }

    pub fn inverse_images(&self) -> &[FreeWord] {
        &self.inverse_images
    }

    pub fn apply(&self, w: &FreeWord) -> FreeWord {
        let mut out = FreeWord::identity(self.rank);
        for &l in w.letters() {
            let img = &self.images[l.unsigned_abs() as usize - 1];
            if l > 0 {
                out = out.mul(img);
            } else {
                out = out.mul(&img.inverse());
            }
        }
        out
    }

    pub fn inverse(&self) -> FreeAutomorphism {
        FreeAutomorphism {
            rank: self.rank,
            images: self.inverse_images.clone(),
            inverse_images: self.images.clone(),
        }
    }

    /// `self ∘ other`: applies `other` first.
    pub fn compose(&self, other: &FreeAutomorphism) -> Result<FreeAutomorphism, AutfError> {
        self.check_rank(other)?;
        Ok(self.compose_unchecked(other))
    }

    fn compose_unchecked(&self, other: &FreeAutomorphism) -> FreeAutomorphism {
        let inv_self = self.inverse();
        let inv_other = other.inverse();
        FreeAutomorphism {
            rank: self.rank,
            images: other.images.iter().map(|w| self.apply(w)).collect(),
            inverse_images: inv_self.images.iter().map(|w| inv_other.apply(w)).collect(),
        }
    }

    /// Group commutator `f^-1 g^-1 f g`.
    pub fn group_commutator(
        &self,
        other: &FreeAutomorphism,
    ) -> Result<FreeAutomorphism, AutfError> {
        self.check_rank(other)?;
        let fi = self.inverse();
        let gi = other.inverse();
        Ok(fi
            .compose_unchecked(&gi)
            .compose_unchecked(self)
            .compose_unchecked(other))
    }

    /// Left-normed group commutator `[[g_1, g_2], ..., g_k]`.
    pub fn left_normed_commutator(
        elements: &[FreeAutomorphism],
    ) -> Result<FreeAutomorphism, AutfError> {
        let (first, rest) = elements.split_first().ok_or(AutfError::EmptyCommutator)?;
        rest.iter()
            .try_fold(first.clone(), |acc, g| acc.group_commutator(g))
    }

    /// Conjugate `g^-1 ∘ self ∘ g`.
    pub fn conjugate_by(&self, g: &FreeAutomorphism) -> Result<FreeAutomorphism, AutfError> {
        self.check_rank(g)?;
        Ok(g.inverse().compose_unchecked(self).compose_unchecked(g))
    }

    pub fn pow(&self, e: i64) -> FreeAutomorphism {
        let base = if e < 0 { self.inverse() } else { self.clone() };
        let mut acc = FreeAutomorphism::identity(self.rank);
        for _ in 0..e.unsigned_abs() {
            acc = acc.compose_unchecked(&base);
        }
        acc
    }

    pub fn is_identity(&self) -> bool {
        self.images
            .iter()
            .enumerate()
            .all(|(k, w)| w.letters() == [k as i32 + 1])
    }

    pub fn commutes_with(&self, other: &FreeAutomorphism) -> Result<bool, AutfError> {
        self.check_rank(other)?;
        Ok(self.compose_unchecked(other) == other.compose_unchecked(self))
    }

    /// Matrix of the induced map on `Z^n`; column `i` is the class of the
    /// image of `x_i`.
    pub fn abelianized_matrix(&self) -> Vec<Vec<i64>> {
        let n = self.rank;
        let mut m = vec![vec![0i64; n]; n];
        for (col, w) in self.images.iter().enumerate() {
            for (row, e) in w.abelianization().into_iter().enumerate() {
                m[row][col] = e;
            }
        }
        m
    }

    pub fn is_ia(&self) -> bool {
        self.abelianized_matrix()
            .iter()
            .enumerate()
            .all(|(r, row)| row.iter().enumerate().all(|(c, &v)| v == i64::from(r == c)))
    }

    pub fn is_saut(&self) -> bool {
        integer_determinant(&self.abelianized_matrix()) == 1
    }

    /// The smallest `I` with `self ∈ Γ_I`: moved generators together with all
    /// generators occurring in their images.
    pub fn minimal_support(&self) -> SupportSet {
        let mut idx = Vec::new();
        for (k, w) in self.images.iter().enumerate() {
            if w.letters() != [k as i32 + 1] {
                idx.push(k + 1);
                idx.extend(w.support());
            }
        }
        SupportSet::new(idx)
    }

    pub fn complexity(&self) -> usize {
        self.minimal_support().len()
    }

    fn check_rank(&self, other: &FreeAutomorphism) -> Result<(), AutfError> {
        if self.rank != other.rank {
            return Err(AutfError::RankMismatch {
                left: self.rank,
                right: other.rank,
            });
        }
        Ok(())
    }
}

impl PartialEq for FreeAutomorphism {
    fn eq(&self, other: &Self) -> bool {
        self.rank == other.rank && self.images == other.images
    }
}

impl Eq for FreeAutomorphism {}

impl std::hash::Hash for FreeAutomorphism {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.rank.hash(state);
        self.images.hash(state);
    }
}

impl fmt::Debug for FreeAutomorphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FreeAutomorphism({self})")
    }
}

/// Bareiss fraction-free elimination.
pub fn integer_determinant(m: &[Vec<i64>]) -> i128 {
    let n = m.len();
    if n == 0 {
        return 1;
    }
    let mut a: Vec<Vec<i128>> = m
        .iter()
        .map(|r| r.iter().map(|&v| v as i128).collect())
        .collect();
    let mut sign = 1i128;
    let mut prev = 1i128;
    for k in 0..n - 1 {
        if a[k][k] == 0 {
            match (k + 1..n).find(|&r| a[r][k] != 0) {
                Some(r) => {
                    a.swap(k, r);
                    sign = -sign;
                }
                None => return 0,
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
            }
        }
        prev = a[k][k];
    }
    sign * a[n - 1][n - 1]
}
