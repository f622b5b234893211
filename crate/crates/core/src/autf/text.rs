//! Text format `rank=n; x1 -> <word>; ...; xn -> <word>`.
//!
//! Words are whitespace-separated tokens `xi` or `xi^-1`; `1` (or nothing)
//! denotes the empty word. Unreduced input is accepted and reduced.

use std::fmt;
use std::str::FromStr;

use super::nielsen::invert_images;
use super::{AutfError, FreeAutomorphism, FreeWord};

fn parse_err(msg: impl Into<String>) -> AutfError {
    AutfError::Parse(msg.into())
}

/// Parses a word over `F_rank`.
pub fn parse_word(s: &str, rank: usize) -> Result<FreeWord, AutfError> {
    let mut letters = Vec::new();
    for tok in s.split_whitespace() {
        if tok == "1" {
            continue;
        }
        let (base, inv) = match tok.strip_suffix("^-1") {
            Some(b) => (b, true),
            None => (tok, false),
        };
        let idx: i32 = base
            .strip_prefix('x')
            .and_then(|d| d.parse().ok())
            .ok_or_else(|| parse_err(format!("bad letter {tok:?}")))?;
        letters.push(if inv { -idx } else { idx });
    }
    FreeWord::reduce(&letters, rank)
}

/// Parses the basis images only.
pub fn parse_images(s: &str) -> Result<Vec<FreeWord>, AutfError> {
    let mut parts = s.split(';').map(str::trim).filter(|p| !p.is_empty());
    let head = parts.next().ok_or_else(|| parse_err("empty input"))?;
    let rank: usize = head
        .strip_prefix("rank")
        .and_then(|r| r.trim_start().strip_prefix('='))
        .and_then(|r| r.trim().parse().ok())
        .ok_or_else(|| parse_err(format!("expected `rank=n`, got {head:?}")))?;
    let mut images: Vec<Option<FreeWord>> = vec![None; rank];
    for part in parts {
        let (lhs, rhs) = part
            .split_once("->")
            .ok_or_else(|| parse_err(format!("expected `xi -> word`, got {part:?}")))?;
        let i: usize = lhs
            .trim()
            .strip_prefix('x')
            .and_then(|d| d.parse().ok())
            .ok_or_else(|| parse_err(format!("bad generator {lhs:?}")))?;
        if i == 0 || i > rank {
            return Err(AutfError::IndexOutOfRange { index: i, rank });
        }
        if images[i - 1].is_some() {
            return Err(parse_err(format!("x{i} assigned twice")));
        }
        images[i - 1] = Some(parse_word(rhs, rank)?);
    }
    images
        .into_iter()
        .enumerate()
        .map(|(k, w)| w.ok_or_else(|| parse_err(format!("missing image of x{}", k + 1))))
        .collect()
}

impl FromStr for FreeAutomorphism {
    type Err = AutfError;

    /// Parses the text format; the inverse is recovered by Nielsen reduction.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        invert_images(parse_images(s)?)
    }
}

impl fmt::Display for FreeAutomorphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "rank={}", self.rank())?;
        for (k, w) in self.images().iter().enumerate() {
            write!(f, "; x{} -> {}", k + 1, w)?;
        }
        Ok(())
    }
}
