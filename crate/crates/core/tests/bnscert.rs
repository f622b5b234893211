use torelli_core::autf::*;
use torelli_core::bnscert::*;
use torelli_core::commgraph::SubgroupHandle;
use torelli_core::rational::{q, Q};

fn chooser(n: usize) -> impl FnMut(&SubgroupHandle) -> Option<(FreeAutomorphism, Q)> {
    move |h: &SubgroupHandle| {
        let idx = h.indices().indices();
        let c = h.conjugator_element().ok()?;
        Some((
            make_magnus_c(idx[0], idx[1], n)
                .ok()?
                .conjugate_by(&c)
                .ok()?,
            q(1),
        ))
    }
}

fn lr_certificate() -> BnsCertificate {
    BnsCertificate {
        elements: vec![
            make_nielsen(Side::Left, 1, 2, 1, 3).unwrap(),
            make_nielsen(Side::Right, 1, 2, 1, 3).unwrap(),
        ],
        chi: vec![q(1), q(1)],
        witnesses: vec![Witness {
            i: 2,
            j: 1,
            word: vec![],
        }],
    }
}

#[test]
fn commuting_pair_is_valid() {
    let v = check_certificate(&lr_certificate()).unwrap();
    assert!(v.valid);
    assert!(v.scope.contains("generated by the listed elements"));
}

#[test]
fn zero_first_character_fails() {
    let mut c = lr_certificate();
    c.chi[0] = q(0);
    assert_eq!(
        check_certificate(&c).unwrap().failure,
        Some(Failure::FirstCharacterZero)
    );
}

#[test]
fn corrupted_word_fails() {
    let mut c = lr_certificate();
    c.witnesses[0].word = vec![1];
    assert_eq!(
        check_certificate(&c).unwrap().failure,
        Some(Failure::CommutatorMismatch { i: 2, j: 1 })
    );
}

#[test]
fn malformed_indices() {
    let mut c = lr_certificate();
    c.witnesses[0].j = 2;
    assert!(matches!(
        check_certificate(&c),
        Err(CertError::Malformed(_))
    ));
    let mut c = lr_certificate();
    c.witnesses[0].word = vec![2];
    assert!(matches!(
        check_certificate(&c),
        Err(CertError::Malformed(_))
    ));
    let mut c = lr_certificate();
    c.witnesses.clear();
    assert!(matches!(
        check_certificate(&c),
        Err(CertError::Malformed(_))
    ));
}

#[test]
fn inconsistent_character_fails() {
    let n = 3;
    let a = make_nielsen(Side::Left, 1, 2, 1, n).unwrap();
    let mut c = BnsCertificate {
        elements: vec![a.clone(), a, FreeAutomorphism::identity(n)],
        chi: vec![q(1), q(1), q(1)],
        witnesses: vec![
            Witness {
                i: 2,
                j: 1,
                word: vec![],
            },
            Witness {
                i: 3,
                j: 1,
                word: vec![1, -2],
            },
        ],
    };
    assert!(check_certificate(&c).unwrap().valid);
    c.chi[1] = q(2);
    assert_eq!(
        check_certificate(&c).unwrap().failure,
        Some(Failure::CharacterInconsistent { i: 3 })
    );
}

#[test]
fn assemble_examples() {
    let n = 5;
    let empty = assemble_certificate(n, &[], 2, &Character::new(), &mut chooser(n)).unwrap();
    assert_eq!(empty.certificate.elements.len(), 1);
    assert!(check_certificate(&empty.certificate).unwrap().valid);

    let ts = vec![make_magnus_c(1, 2, n).unwrap()];
    let a = assemble_certificate(n, &ts, 2, &Character::new(), &mut chooser(n)).unwrap();
    assert!(check_certificate(&a.certificate).unwrap().valid);
    assert_eq!(
        a.vertex_order[0],
        SubgroupHandle::standard(n, &[1, 2]).unwrap()
    );

    let ts = vec![
        make_magnus_c(1, 2, n).unwrap(),
        make_magnus_m(1, 2, 3, n).unwrap(),
    ];
    let a = assemble_certificate(n, &ts, 2, &Character::new(), &mut chooser(n)).unwrap();
    assert!(check_certificate(&a.certificate).unwrap().valid);
}

#[test]
fn chooser_failures() {
    let n = 5;
    let ts = vec![make_magnus_m(1, 2, 3, n).unwrap()];
    let mut vanishing = |h: &SubgroupHandle| chooser(n)(h).map(|(g, _)| (g, q(0)));
    assert!(matches!(
        assemble_certificate(n, &ts, 2, &Character::new(), &mut vanishing),
        Err(CertError::ChooserFailed { .. })
    ));
    let mut outside = |_: &SubgroupHandle| Some((make_magnus_c(3, 5, n).unwrap(), q(1)));
    assert!(matches!(
        assemble_certificate(n, &ts, 2, &Character::new(), &mut outside),
        Err(CertError::ChooserOutside { .. })
    ));
    let non_ia = vec![make_nielsen(Side::Left, 1, 2, 1, n).unwrap()];
    assert!(matches!(
        assemble_certificate(n, &non_ia, 2, &Character::new(), &mut chooser(n)),
        Err(CertError::NotIa(_))
    ));
}

#[test]
fn certificate_json_round_trip() {
    let c = lr_certificate();
    let js = serde_json::to_value(c.to_json()).unwrap();
    assert_eq!(js["chi"], serde_json::json!(["1", "1"]));
    assert_eq!(
        js["witnesses"][0],
        serde_json::json!({"i": 2, "j": 1, "word": []})
    );
    let back = BnsCertificate::from_json(&serde_json::from_value(js).unwrap()).unwrap();
    assert_eq!(back, c);
}
