//! Greedy Nielsen reduction of basis-image tuples.
//!
//! Used to recover an inverse witness (or a word in the Nielsen generators)
//! for automorphisms given by images alone. This is a bounded search: it only
//! takes strictly length-decreasing moves and reports failure when stuck.

use super::families::{make_signed_permutation, NielsenGen, Side};
use super::{AutfError, FreeAutomorphism, FreeWord};

const MAX_STEPS: usize = 100_000;

struct Reduction {
    /// Moves `N_1, ..., N_r` with `φ ∘ N_1 ∘ ... ∘ N_r = P`.
    moves: Vec<NielsenGen>,
    /// Signed permutation `P`, as signed targets.
    residual: Vec<i32>,
}

fn cancellation(a: &[i32], b: &[i32]) -> usize {
    a.iter()
        .rev()
        .zip(b.iter())
        .take_while(|(x, y)| **x == -**y)
        .count()
}

fn greedy_reduce(images: &[FreeWord]) -> Result<Reduction, AutfError> {
    let n = images.len();
    let mut tuple: Vec<FreeWord> = images.to_vec();
    let mut moves = Vec::new();
    for _ in 0..MAX_STEPS {
        if tuple.iter().all(|w| w.len() == 1) {
            let residual: Vec<i32> = tuple.iter().map(|w| w.letters()[0]).collect();
            let mut seen = vec![false; n];
            for &l in &residual {
                let k = l.unsigned_abs() as usize - 1;
                if seen[k] {
                    return Err(AutfError::NotInvertible);
                }
                seen[k] = true;
            }
            return Ok(Reduction { moves, residual });
        }
        if tuple.iter().any(|w| w.is_empty()) {
            return Err(AutfError::NotInvertible);
        }
        let mut best: Option<(usize, NielsenGen)> = None;
        for i in 0..n {
            for j in 0..n {
                if i == j {
                    continue;
                }
                let (ui, uj) = (tuple[i].letters(), tuple[j].letters());
                let uj_inv = tuple[j].inverse();
                for (side, exp) in [
                    (Side::Left, 1i8),
                    (Side::Left, -1),
                    (Side::Right, 1),
                    (Side::Right, -1),
                ] {
                    let factor = if exp == 1 { uj } else { uj_inv.letters() };
                    let c = match side {
                        Side::Left => cancellation(factor, ui),
                        Side::Right => cancellation(ui, factor),
                    };
                    // new length of u_i is |u_i| + |u_j| - 2c
                    if 2 * c > uj.len() {
                        let gain = 2 * c - uj.len();
                        if best.is_none_or(|(g, _)| gain > g) {
                            best = Some((gain, NielsenGen::new(side, i + 1, j + 1, exp)));
                        }
                    }
                }
            }
        }
        let (_, mv) = best.ok_or(AutfError::NielsenReductionStuck)?;
        apply_move(&mut tuple, mv);
        moves.push(mv);
    }
    Err(AutfError::NielsenReductionStuck)
}

/// Replaces the tuple `u` (images under `φ`) with the images under `φ ∘ mv`.
fn apply_move(tuple: &mut [FreeWord], mv: NielsenGen) {
    let uj = if mv.exp == 1 {
        tuple[mv.j - 1].clone()
    } else {
        tuple[mv.j - 1].inverse()
    };
    let ui = &tuple[mv.i - 1];
    tuple[mv.i - 1] = match mv.side {
        Side::Left => uj.mul(ui),
        Side::Right => ui.mul(&uj),
    };
}

/// Inverse of the automorphism with the given basis images, found by greedy
/// Nielsen reduction. The result is verified before it is returned.
pub fn invert_images(images: Vec<FreeWord>) -> Result<FreeAutomorphism, AutfError> {
    let n = images.len();
    let red = greedy_reduce(&images)?;
    let p = make_signed_permutation(&red.residual)?;
    let mut inv = FreeAutomorphism::identity(n);
    for mv in &red.moves {
        inv = inv.compose(&mv.to_automorphism(n)?)?;
    }
    let inv = inv.compose(&p.inverse())?;
    FreeAutomorphism::new(images, inv.images().to_vec())
}

/// Writes `φ ∈ SAut(F_n)` as a word `s_1 ... s_l` in the Nielsen generators,
/// so that `φ = s_1 ∘ ... ∘ s_l`.
pub fn nielsen_decompose(phi: &FreeAutomorphism) -> Result<Vec<NielsenGen>, AutfError> {
    let n = phi.rank();
    let mut red = greedy_reduce(phi.images())?;
    let mut tuple: Vec<i32> = red.residual.clone();
    // Sort the signed permutation with rotations (u_p, u_q) -> (u_q, u_p^-1).
    let rotate = |tuple: &mut Vec<i32>, moves: &mut Vec<NielsenGen>, p: usize, q: usize| {
        moves.push(NielsenGen::new(Side::Right, p + 1, q + 1, 1));
        moves.push(NielsenGen::new(Side::Right, q + 1, p + 1, -1));
        moves.push(NielsenGen::new(Side::Left, p + 1, q + 1, 1));
        let (a, b) = (tuple[p], tuple[q]);
        tuple[p] = b;
        tuple[q] = -a;
    };
    for p in 0..n {
        if tuple[p].unsigned_abs() as usize != p + 1 {
            let q = (0..n)
                .find(|&q| tuple[q].unsigned_abs() as usize == p + 1)
                .expect("permutation");
            rotate(&mut tuple, &mut red.moves, p, q);
        }
    }
    let negative: Vec<usize> = (0..n).filter(|&p| tuple[p] < 0).collect();
    if negative.len() % 2 == 1 {
        return Err(AutfError::NotSpecial);
    }
    for pair in negative.chunks(2) {
        rotate(&mut tuple, &mut red.moves, pair[0], pair[1]);
        rotate(&mut tuple, &mut red.moves, pair[0], pair[1]);
    }
    debug_assert!(tuple.iter().enumerate().all(|(p, &l)| l == p as i32 + 1));
    Ok(red.moves.iter().rev().map(|m| m.inverse()).collect())
}
