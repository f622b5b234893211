use torelli_core::autf::*;

fn w(l: &[i32], n: usize) -> FreeWord {
    FreeWord::reduce(l, n).unwrap()
}

fn x(n: usize, i: usize) -> FreeWord {
    FreeWord::generator(n, i).unwrap()
}

fn comm(a: &FreeWord, b: &FreeWord) -> FreeWord {
    a.commutator(b)
}

#[test]
fn free_reduction() {
    assert!(w(&[1, -1], 2).is_empty());
    assert_eq!(w(&[1, 2, -2, 1], 2).letters(), &[1, 1]);
    assert_eq!(w(&[-2, 1, 2], 2).letters(), &[-2, 1, 2]);
    assert!(FreeWord::reduce(&[3], 2).is_err());
    assert!(FreeWord::reduce(&[0], 2).is_err());
}

#[test]
fn composition_and_commutators() {
    let phi = make_magnus_m(1, 2, 3, 3).unwrap();
    assert!(phi.compose(&phi.inverse()).unwrap().is_identity());
    let l12 = make_nielsen(Side::Left, 1, 2, 1, 4).unwrap();
    let l34 = make_nielsen(Side::Left, 3, 4, 1, 4).unwrap();
    assert!(l12.group_commutator(&l34).unwrap().is_identity());
    let c12 = make_magnus_c(1, 2, 2).unwrap();
    assert_eq!(c12.image(1).letters(), &[-2, 1, 2]);
}

#[test]
fn compose_applies_right_factor_first() {
    let l12 = make_nielsen(Side::Left, 1, 2, 1, 2).unwrap();
    let r21 = make_nielsen(Side::Right, 2, 1, 1, 2).unwrap();
    // r21 first: x1 ↦ x1, then l12: x1 ↦ x2 x1.
    let f = l12.compose(&r21).unwrap();
    assert_eq!(f.image(1).letters(), &[2, 1]);
    // x2 ↦ x2 x1 ↦ x2 (x2 x1).
    assert_eq!(f.image(2).letters(), &[2, 2, 1]);
}

#[test]
fn nielsen_generators() {
    let l = make_nielsen(Side::Left, 1, 2, 1, 2).unwrap();
    assert_eq!(l.image(1).letters(), &[2, 1]);
    assert_eq!(l.image(2).letters(), &[2]);
    let r = make_nielsen(Side::Right, 1, 2, 1, 2).unwrap();
    assert_eq!(r.image(1).letters(), &[1, 2]);
    let li = make_nielsen(Side::Left, 1, 2, -1, 2).unwrap();
    assert_eq!(li.image(1).letters(), &[-2, 1]);
    assert!(make_nielsen(Side::Left, 1, 1, 1, 2).is_err());
    assert!(make_nielsen(Side::Left, 1, 2, 2, 2).is_err());
}

#[test]
fn magnus_generators() {
    let m = make_magnus_m(1, 2, 3, 3).unwrap();
    assert_eq!(m.image(1).letters(), &[1, -2, -3, 2, 3]);
    assert!(m.is_ia());
    let c = make_magnus_c(1, 2, 3).unwrap();
    assert!(c.is_ia());
    assert_eq!(
        c.abelianized_matrix(),
        vec![vec![1, 0, 0], vec![0, 1, 0], vec![0, 0, 1]]
    );
}

#[test]
fn t_family() {
    let t = make_t(1, &[2, 3], 3).unwrap();
    assert_eq!(t, make_magnus_m(1, 2, 3, 3).unwrap());
    let t = make_t(1, &[2, 3, 2], 3).unwrap();
    let expected = x(3, 1).mul(&comm(&comm(&x(3, 2), &x(3, 3)), &x(3, 2)));
    assert_eq!(t.image(1), &expected);
    let t = make_t(1, &[2, 3, 4], 4).unwrap();
    assert_eq!(t.minimal_support().indices(), &[1, 2, 3, 4]);
    assert_eq!(t.complexity(), 4);
    assert!(make_t(1, &[2, 2], 3).unwrap().is_identity());
    assert!(make_t(1, &[2], 3).is_err());
    assert!(make_t(1, &[1, 2], 3).is_err());
}

#[test]
fn s_family() {
    let s = make_s(&[1, 2], 3, 4, 5).unwrap();
    let m341 = make_magnus_m(3, 4, 1, 5).unwrap();
    let m432 = make_magnus_m(4, 3, 2, 5).unwrap();
    assert_eq!(s, m341.group_commutator(&m432).unwrap());
    assert!(s.is_ia());
    let s = make_s(&[1, 2, 5], 3, 4, 5).unwrap();
    assert!(s.is_ia());
    assert!(make_s(&[1, 2], 3, 3, 5).is_err());
}

#[test]
fn abelianized_matrices() {
    let l = make_nielsen(Side::Left, 1, 2, 1, 2).unwrap();
    let m = l.abelianized_matrix();
    // Column 1 is the abelianized image of x1 = x2 x1.
    assert_eq!(m[0][0], 1);
    assert_eq!(m[1][0], 1);
    assert_eq!(m[0][1], 0);
    assert_eq!(m[1][1], 1);
    let swap = make_signed_permutation(&[2, -1]).unwrap();
    assert_eq!(integer_determinant(&swap.abelianized_matrix()), 1);
    assert!(swap.is_saut());
    let flip = make_signed_permutation(&[-1, 2]).unwrap();
    assert_eq!(integer_determinant(&flip.abelianized_matrix()), -1);
    assert!(!flip.is_saut());
    assert!(make_signed_permutation(&[1, 1]).is_err());
}

#[test]
fn complexity_and_support() {
    assert_eq!(make_magnus_c(1, 2, 4).unwrap().complexity(), 2);
    assert_eq!(make_magnus_m(1, 2, 3, 4).unwrap().complexity(), 3);
    assert_eq!(FreeAutomorphism::identity(4).complexity(), 0);
    let l12 = make_nielsen(Side::Left, 1, 2, 1, 4).unwrap();
    let l34 = make_nielsen(Side::Left, 3, 4, 1, 4).unwrap();
    let f = l12.compose(&l34).unwrap();
    assert_eq!(f.minimal_support().indices(), &[1, 2, 3, 4]);
}

#[test]
fn nielsen_decomposition_round_trip() {
    let s = make_s(&[1, 2], 3, 4, 4).unwrap();
    let word = nielsen_decompose(&s).unwrap();
    assert_eq!(eval_nielsen_word(&word, 4).unwrap(), s);
}

#[test]
fn parse_images_text() {
    let phi: FreeAutomorphism = "rank=2; x1 -> x2^-1 x1 x2; x2 -> x2".parse().unwrap();
    assert_eq!(phi, make_magnus_c(1, 2, 2).unwrap());
    assert_eq!(phi.to_string().parse::<FreeAutomorphism>().unwrap(), phi);
    let images = parse_images("rank=2; x1 -> x1 x1; x2 -> x2").unwrap();
    assert!(invert_images(images).is_err());
    assert!("rank=2; x1 -> x3".parse::<FreeAutomorphism>().is_err());
}
