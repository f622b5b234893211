use torelli_core::autf::*;
use torelli_core::lie::{is_lie_element, LieElement};
use torelli_core::magnus::*;
use torelli_core::rational::q;
use torelli_core::tensor::Poly;

fn w(l: &[i32], n: usize) -> FreeWord {
    FreeWord::reduce(l, n).unwrap()
}

#[test]
fn expand_generator_and_inverse() {
    let s = magnus_expand(&w(&[1], 2), 3).unwrap();
    assert_eq!(
        *s.poly(),
        Poly::from_terms([(vec![], q(1)), (vec![1], q(1))])
    );
    let s = magnus_expand(&w(&[-1], 2), 3).unwrap();
    assert_eq!(
        *s.poly(),
        Poly::from_terms([
            (vec![], q(1)),
            (vec![1], q(-1)),
            (vec![1, 1], q(1)),
            (vec![1, 1, 1], q(-1))
        ])
    );
    let s = magnus_expand(&w(&[1, -1], 2), 4).unwrap();
    assert_eq!(*s.poly(), Poly::one());
}

#[test]
fn expand_commutator() {
    let c = w(&[1], 2).commutator(&w(&[2], 2));
    let s = magnus_expand(&c, 3).unwrap();
    assert_eq!(s.homogeneous_part(1), Poly::zero());
    assert_eq!(
        s.homogeneous_part(2),
        Poly::from_terms([(vec![1, 2], q(1)), (vec![2, 1], q(-1))])
    );
    assert_eq!(s.coeff(&[]), q(1));
    assert!(magnus_expand(&c, 0).is_err());
}

#[test]
fn depth_examples() {
    let n = 4;
    assert_eq!(
        johnson_depth(&FreeAutomorphism::identity(n), 5).unwrap(),
        Depth::AtLeast(5)
    );
    assert_eq!(
        johnson_depth(&make_magnus_c(1, 2, n).unwrap(), 4).unwrap(),
        Depth::Exact(1)
    );
    assert_eq!(
        johnson_depth(&make_magnus_m(1, 2, 3, n).unwrap(), 4).unwrap(),
        Depth::Exact(1)
    );
    assert_eq!(
        johnson_depth(&make_t(1, &[2, 3, 4], n).unwrap(), 4).unwrap(),
        Depth::Exact(2)
    );
    assert_eq!(
        johnson_depth(&make_nielsen(Side::Left, 1, 2, 1, n).unwrap(), 4).unwrap(),
        Depth::Exact(0)
    );
    let s = make_s(&[1, 2], 3, 4, 5).unwrap();
    assert_eq!(johnson_depth(&s, 4).unwrap(), Depth::Exact(2));
    assert!(johnson_depth(&s, 1).is_err());
    assert_eq!(Depth::AtLeast(5).to_string(), ">=5");
}

#[test]
fn image_examples() {
    let n = 3;
    let c = johnson_image(&make_magnus_c(1, 2, n).unwrap(), 1).unwrap();
    let e12 = LieElement::basis(n, vec![1, 2]).unwrap();
    assert_eq!(c.component(1), e12);
    assert!(c.component(2).is_zero());
    let m = johnson_image(&make_magnus_m(1, 2, 3, n).unwrap(), 1).unwrap();
    assert_eq!(m.component(1), LieElement::basis(n, vec![2, 3]).unwrap());
}

#[test]
fn image_of_t_is_left_normed_bracket() {
    let n = 5;
    for (i, omega) in [
        (1usize, vec![2usize, 3, 4]),
        (3, vec![1, 1, 2]),
        (2, vec![4, 5, 1, 4]),
    ] {
        let k = omega.len() - 1;
        let img = johnson_image(&make_t(i, &omega, n).unwrap(), k).unwrap();
        let gens: Vec<LieElement> = omega
            .iter()
            .map(|&a| LieElement::generator(n, a).unwrap())
            .collect();
        assert_eq!(img.component(i), LieElement::left_normed(&gens).unwrap());
        assert!(img.components_are_lie().unwrap());
    }
}

#[test]
fn image_requires_depth() {
    let c = make_magnus_c(1, 2, 3).unwrap();
    assert_eq!(
        johnson_image(&c, 2),
        Err(MagnusError::DepthTooSmall {
            degree: 2,
            required: 2
        })
    );
}

#[test]
fn image_is_additive() {
    let n = 4;
    let f = make_magnus_c(1, 2, n).unwrap();
    let g = make_magnus_m(3, 1, 4, n).unwrap();
    let lhs = johnson_image(&f.compose(&g).unwrap(), 1).unwrap();
    let rhs = johnson_image(&f, 1)
        .unwrap()
        .add(&johnson_image(&g, 1).unwrap())
        .unwrap();
    assert_eq!(lhs, rhs);
}

#[test]
fn image_json_round_trip() {
    let img = johnson_image(&make_s(&[1, 2], 3, 4, 5).unwrap(), 2).unwrap();
    let js = serde_json::to_string(&img.to_json()).unwrap();
    assert!(js.contains("\"lyndon_word\":\"1.2.3\""));
    assert!(js.contains("\"coefficient\":\"-1\""));
    let back: Vec<JohnsonTerm> = serde_json::from_str(&js).unwrap();
    assert_eq!(JohnsonImage::from_json(5, 2, &back).unwrap(), img);
}

#[test]
fn lie_test_examples() {
    let br = Poly::from_terms([(vec![1, 2], q(1)), (vec![2, 1], q(-1))]);
    assert!(is_lie_element(&br).unwrap());
    assert!(!is_lie_element(&Poly::monomial(vec![1, 2], q(1))).unwrap());
    let img = johnson_image(&make_t(1, &[2, 3, 2], 3).unwrap(), 2).unwrap();
    assert!(is_lie_element(&img.component(1).to_tensor()).unwrap());
}
