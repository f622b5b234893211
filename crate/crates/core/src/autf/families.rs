//! Named generator families of `Aut(F_n)`.

use std::fmt;

use serde::{Deserialize, Serialize};

use super::{AutfError, FreeAutomorphism, FreeWord};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    Left,
    Right,
}

/// A Nielsen generator `L_ij^{±1}` or `R_ij^{±1}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct NielsenGen {
    pub side: Side,
    pub i: usize,
    pub j: usize,
    pub exp: i8,
}

impl NielsenGen {
    pub fn new(side: Side, i: usize, j: usize, exp: i8) -> Self {
        NielsenGen { side, i, j, exp }
    }

    pub fn inverse(self) -> Self {
        NielsenGen {
            exp: -self.exp,
            ..self
        }
    }

    pub fn to_automorphism(self, n: usize) -> Result<FreeAutomorphism, AutfError> {
        make_nielsen(self.side, self.i, self.j, self.exp, n)
    }

    /// Both indices the generator touches.
    pub fn support(self) -> [usize; 2] {
        [self.i, self.j]
    }
}

impl fmt::Display for NielsenGen {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self.side {
            Side::Left => 'L',
            Side::Right => 'R',
        };
        if self.exp < 0 {
            write!(f, "{s}{}{}^-1", self.i, self.j)
        } else {
            write!(f, "{s}{}{}", self.i, self.j)
        }
    }
}

// Serialized as `[side, i, j, exp]`.
impl Serialize for NielsenGen {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        (self.side, self.i, self.j, self.exp).serialize(s)
    }
}

impl<'de> Deserialize<'de> for NielsenGen {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let (side, i, j, exp) = <(Side, usize, usize, i8)>::deserialize(d)?;
        Ok(NielsenGen { side, i, j, exp })
    }
}

/// Product `s_1 s_2 ... s_l` of Nielsen generators, evaluated left to right
/// with [`FreeAutomorphism::compose`].
pub fn eval_nielsen_word(word: &[NielsenGen], n: usize) -> Result<FreeAutomorphism, AutfError> {
    word.iter()
        .try_fold(FreeAutomorphism::identity(n), |acc, s| {
            acc.compose(&s.to_automorphism(n)?)
        })
}

fn check_indices(indices: &[usize], n: usize) -> Result<(), AutfError> {
    for (k, &a) in indices.iter().enumerate() {
        if a == 0 || a > n {
            return Err(AutfError::IndexOutOfRange { index: a, rank: n });
        }
        if indices[..k].contains(&a) {
            return Err(AutfError::RepeatedIndex { index: a });
        }
    }
    Ok(())
}

fn x(n: usize, i: usize) -> FreeWord {
    FreeWord::reduce(&[i as i32], n).expect("index checked")
}

/// Automorphism fixing every `x_l` except `x_i ↦ image`, with `x_i ↦ inv_image`
/// for the inverse.
fn transvection_like(n: usize, i: usize, image: FreeWord, inv_image: FreeWord) -> FreeAutomorphism {
    let mut images: Vec<FreeWord> = (1..=n).map(|l| x(n, l)).collect();
    let mut inverse = images.clone();
    images[i - 1] = image;
    inverse[i - 1] = inv_image;
    FreeAutomorphism::from_parts_unchecked(n, images, inverse)
}

/// `L_ij: x_i ↦ x_j x_i` and `R_ij: x_i ↦ x_i x_j`; `exp = -1` gives the inverse.
pub fn make_nielsen(
    side: Side,
    i: usize,
    j: usize,
    exp: i8,
    n: usize,
) -> Result<FreeAutomorphism, AutfError> {
    check_indices(&[i, j], n)?;
    if exp != 1 && exp != -1 {
        return Err(AutfError::BadExponent(exp));
    }
    let xj = x(n, j);
    let xi = x(n, i);
    let (fwd, back) = match side {
        Side::Left => (xj.mul(&xi), xj.inverse().mul(&xi)),
        Side::Right => (xi.mul(&xj), xi.mul(&xj.inverse())),
    };
    Ok(if exp == 1 {
        transvection_like(n, i, fwd, back)
    } else {
        transvection_like(n, i, back, fwd)
    })
}

/// `C_ij: x_i ↦ x_j^-1 x_i x_j`.
pub fn make_magnus_c(i: usize, j: usize, n: usize) -> Result<FreeAutomorphism, AutfError> {
    check_indices(&[i, j], n)?;
    let xi = x(n, i);
    let xj = x(n, j);
    Ok(transvection_like(
        n,
        i,
        xj.inverse().mul(&xi).mul(&xj),
        xj.mul(&xi).mul(&xj.inverse()),
    ))
}

/// `M_ijk: x_i ↦ x_i [x_j, x_k]`.
pub fn make_magnus_m(
    i: usize,
    j: usize,
    k: usize,
    n: usize,
) -> Result<FreeAutomorphism, AutfError> {
    check_indices(&[i, j, k], n)?;
    let c = x(n, j).commutator(&x(n, k));
    let xi = x(n, i);
    Ok(transvection_like(n, i, xi.mul(&c), xi.mul(&c.inverse())))
}

/// `T_{i,ω}: x_i ↦ x_i [x_{ω_1}, ..., x_{ω_{k+1}}]` (left-normed).
pub fn make_t(i: usize, omega: &[usize], n: usize) -> Result<FreeAutomorphism, AutfError> {
    check_indices(&[i], n)?;
    if omega.len() < 2 {
        return Err(AutfError::Constraint(format!(
            "T needs |omega| >= 2, got {}",
            omega.len()
        )));
    }
    for &w in omega {
        if w == 0 || w > n {
            return Err(AutfError::IndexOutOfRange { index: w, rank: n });
        }
        if w == i {
            return Err(AutfError::Constraint(format!(
                "T_{{{i},omega}} requires {i} not in omega"
            )));
        }
    }
    let gens: Vec<FreeWord> = omega.iter().map(|&w| x(n, w)).collect();
    let c = FreeWord::left_normed_commutator(&gens).expect("nonempty");
    let xi = x(n, i);
    Ok(transvection_like(n, i, xi.mul(&c), xi.mul(&c.inverse())))
}

fn s_factors(
    mu: &[usize],
    i: usize,
    j: usize,
    n: usize,
) -> Result<Vec<FreeAutomorphism>, AutfError> {
    let k = mu.len();
    check_indices(&[i, j], n)?;
    if k < 2 {
        return Err(AutfError::Constraint(format!("S needs |mu| >= 2, got {k}")));
    }
    if k + 2 > n {
        return Err(AutfError::Constraint(format!(
            "S needs |mu| <= n - 2, got |mu| = {k}, n = {n}"
        )));
    }
    for &m in mu {
        if m == 0 || m > n {
            return Err(AutfError::IndexOutOfRange { index: m, rank: n });
        }
        if m == i || m == j {
            return Err(AutfError::Constraint(format!(
                "S_mu requires i = {i} and j = {j} outside mu"
            )));
        }
    }
    let mut factors = Vec::with_capacity(k);
    factors.push(make_magnus_m(i, j, mu[0], n)?);
    for &m in &mu[1..k - 1] {
        factors.push(make_magnus_c(i, m, n)?);
    }
    factors.push(make_magnus_m(j, i, mu[k - 1], n)?);
    Ok(factors)
}

/// `S_μ = [M_{ijμ_1}, C_{iμ_2}, ..., C_{iμ_{k-1}}, M_{jiμ_k}]`, left-normed, with
/// the auxiliary indices `i`, `j` given explicitly.
pub fn make_s(mu: &[usize], i: usize, j: usize, n: usize) -> Result<FreeAutomorphism, AutfError> {
    FreeAutomorphism::left_normed_commutator(&s_factors(mu, i, j, n)?)
}

/// The same factors bracketed from the right:
/// `[M_{ijμ_1}, [C_{iμ_2}, [..., M_{jiμ_k}]]]`. Agrees with [`make_s`] for
/// `|μ| = 2`.
pub fn make_s_right_normed(
    mu: &[usize],
    i: usize,
    j: usize,
    n: usize,
) -> Result<FreeAutomorphism, AutfError> {
    let factors = s_factors(mu, i, j, n)?;
    let (last, rest) = factors.split_last().expect("k >= 2");
    rest.iter()
        .rev()
        .try_fold(last.clone(), |acc, g| g.group_commutator(&acc))
}

/// Automorphism sending `x_i ↦ x_{σ(i)}^{ε_i}`; `perm` is given as signed
/// targets, e.g. `[2, -1]` for `x_1 ↦ x_2, x_2 ↦ x_1^-1`.
pub fn make_signed_permutation(perm: &[i32]) -> Result<FreeAutomorphism, AutfError> {
    let n = perm.len();
    let targets: Vec<usize> = perm.iter().map(|p| p.unsigned_abs() as usize).collect();
    check_indices(&targets, n)?;
    let images: Vec<FreeWord> = perm
        .iter()
        .map(|&p| FreeWord::reduce(&[p], n))
        .collect::<Result<_, _>>()?;
    let mut inverse = vec![FreeWord::identity(n); n];
    for (k, &p) in perm.iter().enumerate() {
        let src = (k + 1) as i32 * p.signum();
        inverse[p.unsigned_abs() as usize - 1] = FreeWord::reduce(&[src], n)?;
    }
    Ok(FreeAutomorphism::from_parts_unchecked(n, images, inverse))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(l: &[i32], n: usize) -> FreeWord {
        FreeWord::reduce(l, n).unwrap()
    }

    fn checked(f: &FreeAutomorphism) {
        FreeAutomorphism::new(f.images().to_vec(), f.inverse_images().to_vec()).unwrap();
    }

    #[test]
    fn nielsen_images() {
        let l12 = make_nielsen(Side::Left, 1, 2, 1, 3).unwrap();
        assert_eq!(l12.image(1), &w(&[2, 1], 3));
        assert_eq!(l12.image(2), &w(&[2], 3));
        let r12 = make_nielsen(Side::Right, 1, 2, 1, 3).unwrap();
        assert_eq!(r12.image(1), &w(&[1, 2], 3));
        let l12i = make_nielsen(Side::Left, 1, 2, -1, 3).unwrap();
        assert_eq!(l12i.image(1), &w(&[-2, 1], 3));
        assert_eq!(l12.compose(&l12i).unwrap(), FreeAutomorphism::identity(3));
        checked(&l12);
        checked(&r12);
        assert!(matches!(
            make_nielsen(Side::Left, 2, 2, 1, 3),
            Err(AutfError::RepeatedIndex { index: 2 })
        ));
    }

    #[test]
    fn magnus_images() {
        let c12 = make_magnus_c(1, 2, 3).unwrap();
        assert_eq!(c12.image(1), &w(&[-2, 1, 2], 3));
        assert_eq!(c12.image(2), &w(&[2], 3));
        let m123 = make_magnus_m(1, 2, 3, 3).unwrap();
        assert_eq!(m123.image(1), &w(&[1, -2, -3, 2, 3], 3));
        checked(&c12);
        checked(&m123);
        assert!(make_magnus_m(1, 2, 1, 3).is_err());
    }

    #[test]
    fn c_is_right_times_inverse_left() {
        let r = make_nielsen(Side::Right, 1, 2, 1, 3).unwrap();
        let li = make_nielsen(Side::Left, 1, 2, -1, 3).unwrap();
        assert_eq!(r.compose(&li).unwrap(), make_magnus_c(1, 2, 3).unwrap());
    }

    #[test]
    fn t_family() {
        assert_eq!(
            make_t(1, &[2, 3], 3).unwrap(),
            make_magnus_m(1, 2, 3, 3).unwrap()
        );
        let t = make_t(1, &[2, 3, 2], 3).unwrap();
        let c = w(&[2], 3).commutator(&w(&[3], 3)).commutator(&w(&[2], 3));
        assert_eq!(t.image(1), &w(&[1], 3).mul(&c));
        checked(&t);
        let t4 = make_t(1, &[2, 3, 4], 4).unwrap();
        assert_eq!(t4.minimal_support().indices(), &[1, 2, 3, 4]);
        assert_eq!(t4.complexity(), 4);
        assert!(make_t(1, &[2, 1], 3).is_err());
    }

    #[test]
    fn s_family() {
        let s = make_s(&[1, 2], 3, 4, 5).unwrap();
        let expected = make_magnus_m(3, 4, 1, 5)
            .unwrap()
            .group_commutator(&make_magnus_m(4, 3, 2, 5).unwrap())
            .unwrap();
        assert_eq!(s, expected);
        assert!(s.is_ia());
        checked(&s);
        assert!(make_s(&[1, 2], 1, 4, 5).is_err());
        assert!(make_s(&[1], 3, 4, 5).is_err());
        assert!(make_s(&[1, 2, 3], 4, 5, 4).is_err());
    }

    #[test]
    fn signed_permutation_inverse() {
        let p = make_signed_permutation(&[2, -1]).unwrap();
        checked(&p);
        assert!(p.is_saut());
        assert_eq!(p.pow(4), FreeAutomorphism::identity(2));
        let swap = make_signed_permutation(&[2, 1]).unwrap();
        assert!(!swap.is_saut());
    }

    #[test]
    fn nielsen_word_eval() {
        let word = [
            NielsenGen::new(Side::Right, 1, 2, 1),
            NielsenGen::new(Side::Left, 1, 2, -1),
        ];
        assert_eq!(
            eval_nielsen_word(&word, 3).unwrap(),
            make_magnus_c(1, 2, 3).unwrap()
        );
        let json = serde_json::to_string(&word[1]).unwrap();
        assert_eq!(json, r#"["left",1,2,-1]"#);
        let back: NielsenGen = serde_json::from_str(&json).unwrap();
        assert_eq!(back, word[1]);
    }
}
