use std::fmt;

use super::AutfError;

/// A freely reduced word in the free group `F_n`.
///
/// Letters are signed generator indices: `i` stands for `x_i` and `-i` for
/// `x_i^-1`, with `1 <= i <= rank`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FreeWord {
    rank: usize,
    letters: Vec<i32>,
}

impl FreeWord {
    pub fn identity(rank: usize) -> Self {
        FreeWord {
            rank,
            letters: Vec::new(),
        }
    }

    pub fn generator(rank: usize, i: usize) -> Result<Self, AutfError> {
        Self::reduce(&[i as i32], rank)
    }

    /// Freely reduces an arbitrary letter sequence.
    pub fn reduce(letters: &[i32], rank: usize) -> Result<Self, AutfError> {
        for &l in letters {
            check_letter(l, rank)?;
        }
        Ok(FreeWord {
            rank,
            letters: reduce_letters(letters.iter().copied()),
        })
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn letters(&self) -> &[i32] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn mul(&self, other: &FreeWord) -> FreeWord {
        debug_assert_eq!(self.rank, other.rank);
        let mut out = self.letters.clone();
        for &l in &other.letters {
            if out.last() == Some(&-l) {
                out.pop();
            } else {
                out.push(l);
            }
        }
        FreeWord {
            rank: self.rank,
            letters: out,
        }
    }

    pub fn inverse(&self) -> FreeWord {
        FreeWord {
            rank: self.rank,
            letters: self.letters.iter().rev().map(|l| -l).collect(),
        }
    }

    /// `u^-1 v^-1 u v`.
    pub fn commutator(&self, other: &FreeWord) -> FreeWord {
        self.inverse().mul(&other.inverse()).mul(self).mul(other)
    }

    /// Left-normed commutator `[[[w_1, w_2], w_3], ..., w_m]`.
    pub fn left_normed_commutator(words: &[FreeWord]) -> Option<FreeWord> {
        let (first, rest) = words.split_first()?;
        Some(rest.iter().fold(first.clone(), |acc, w| acc.commutator(w)))
    }

    /// Exponent sum of each generator, i.e. the image in `Z^n`.
    pub fn abelianization(&self) -> Vec<i64> {
        let mut v = vec![0i64; self.rank];
        for &l in &self.letters {
            v[l.unsigned_abs() as usize - 1] += l.signum() as i64;
        }
        v
    }

    /// Generator indices that occur in the word.
    pub fn support(&self) -> Vec<usize> {
        let mut s: Vec<usize> = self
            .letters
            .iter()
            .map(|l| l.unsigned_abs() as usize)
            .collect();
        s.sort_unstable();
        s.dedup();
        s
    }
}

pub(crate) fn check_letter(l: i32, rank: usize) -> Result<(), AutfError> {
    let i = l.unsigned_abs() as usize;
    if l == 0 || i > rank {
        return Err(AutfError::IndexOutOfRange { index: i, rank });
    }
    Ok(())
}

pub(crate) fn reduce_letters(letters: impl IntoIterator<Item = i32>) -> Vec<i32> {
    let mut out: Vec<i32> = Vec::new();
    for l in letters {
        if out.last() == Some(&-l) {
            out.pop();
        } else {
            out.push(l);
        }
    }
    out
}

impl fmt::Display for FreeWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return write!(f, "1");
        }
        for (k, &l) in self.letters.iter().enumerate() {
            if k > 0 {
                write!(f, " ")?;
            }
            if l > 0 {
                write!(f, "x{l}")?;
            } else {
                write!(f, "x{}^-1", -l)?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for FreeWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FreeWord[{self}]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(l: &[i32]) -> FreeWord {
        FreeWord::reduce(l, 4).unwrap()
    }

    #[test]
    fn reduce_examples() {
        assert!(w(&[1, -1]).is_empty());
        assert_eq!(w(&[1, 2, -2, 1]).letters(), &[1, 1]);
        assert_eq!(w(&[-2, 1, 2]).letters(), &[-2, 1, 2]);
        assert_eq!(w(&[1, 2, 3, -3, -2, -1]), FreeWord::identity(4));
    }

    #[test]
    fn out_of_range() {
        assert_eq!(
            FreeWord::reduce(&[5], 4),
            Err(AutfError::IndexOutOfRange { index: 5, rank: 4 })
        );
        assert!(FreeWord::reduce(&[0], 4).is_err());
    }

    #[test]
    fn commutator_convention() {
        let c = w(&[1]).commutator(&w(&[2]));
        assert_eq!(c.letters(), &[-1, -2, 1, 2]);
        assert_eq!(c.abelianization(), vec![0, 0, 0, 0]);
    }

    #[test]
    fn display() {
        assert_eq!(w(&[-2, 1, 2]).to_string(), "x2^-1 x1 x2");
        assert_eq!(FreeWord::identity(2).to_string(), "1");
    }
}
