mod common;

macro_rules! property {
    ($($name:ident: $seed:expr;)*) => {$(
        #[test]
        fn $name() {
            assert_eq!(common::$name($seed), Ok(common::CASES));
        }
    )*};
}

property! {
    free_reduction_confluence: 0x01;
    magnus_homomorphism: 0x02;
    depth_filtration: 0x03;
    gamma_containment: 0x04;
    johnson_equivariance: 0x05;
    johnson_images_are_lie: 0x06;
    truncated_composition: 0x16;
    jacobi_antisymmetry: 0x07;
    witt_dimensions: 0x08;
    support_subadditivity: 0x09;
    disjoint_support_commutation: 0x0a;
    signed_permutations_conjugate_parabolics: 0x0b;
    t_and_s_are_ia: 0x0c;
    phi_equivariance: 0x0d;
    phi_on_basis_elements: 0x0e;
    w_fixed_by_shift: 0x0f;
    wedge_lift_homomorphism: 0x10;
    saturation_is_invariant: 0x11;
    commutes_symmetric: 0x12;
    handles_fixed_by_good_conjugators: 0x13;
    paths_verify: 0x14;
    certificate_invariants: 0x15;
}
