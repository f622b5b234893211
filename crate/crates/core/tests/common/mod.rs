//! Seeded property suites shared by the `properties` and `acceptance` targets.
#![allow(dead_code)]

use std::fmt::Debug;

use proptest::prelude::*;
use proptest::test_runner::{Config, RngAlgorithm, TestCaseError, TestRng, TestRunner};

use torelli_core::autf::*;
use torelli_core::bnscert::*;
use torelli_core::commgraph::*;
use torelli_core::exactlin::symplectic::*;
use torelli_core::exactlin::*;
use torelli_core::lie::*;
use torelli_core::magnus::*;
use torelli_core::rational::{q, q_frac, Q};

pub const CASES: u32 = 200;

/// Runs `CASES` cases of `test` from a ChaCha stream seeded by `seed`.
pub fn run<S>(
    seed: u64,
    strat: S,
    test: impl Fn(S::Value) -> Result<(), TestCaseError>,
) -> Result<u32, String>
where
    S: Strategy,
    S::Value: Debug,
{
    let mut bytes = [0u8; 32];
    bytes[..8].copy_from_slice(&seed.to_le_bytes());
    let config = Config {
        cases: CASES,
        failure_persistence: None,
        ..Config::default()
    };
    let mut runner =
        TestRunner::new_with_rng(config, TestRng::from_seed(RngAlgorithm::ChaCha, &bytes));
    runner
        .run(&strat, test)
        .map(|_| CASES)
        .map_err(|e| e.to_string())
}

fn fail<E: Debug>(e: E) -> TestCaseError {
    TestCaseError::fail(format!("{e:?}"))
}

pub fn letters(n: i32, max_len: usize) -> impl Strategy<Value = Vec<i32>> + Clone {
    prop::collection::vec(
        (1..=n, any::<bool>()).prop_map(|(i, s)| if s { i } else { -i }),
        0..=max_len,
    )
}

pub fn nielsen(n: usize) -> impl Strategy<Value = NielsenGen> + Clone {
    (any::<bool>(), 1..=n, 1..n, any::<bool>()).prop_map(move |(left, i, d, pos)| {
        let j = (i - 1 + d) % n + 1;
        let side = if left { Side::Left } else { Side::Right };
        NielsenGen::new(side, i, j, if pos { 1 } else { -1 })
    })
}

/// Nielsen generators with both indices in `pool`.
pub fn nielsen_in(pool: Vec<usize>) -> impl Strategy<Value = NielsenGen> + Clone {
    let k = pool.len();
    (any::<bool>(), 0..k, 1..k, any::<bool>()).prop_map(move |(left, a, d, pos)| {
        let (i, j) = (pool[a], pool[(a + d) % k]);
        let side = if left { Side::Left } else { Side::Right };
        NielsenGen::new(side, i, j, if pos { 1 } else { -1 })
    })
}

/// A Magnus generator `C_ij` or `M_ijk`, possibly inverted.
pub fn ia_generator(n: usize) -> impl Strategy<Value = (Vec<usize>, bool)> + Clone {
    let c = (1..=n, 1..n).prop_map(move |(i, d)| vec![i, (i - 1 + d) % n + 1]);
    let m = (1..=n, 1..n, 1..n - 1).prop_map(move |(i, d, e)| {
        let j = (i - 1 + d) % n + 1;
        let rest: Vec<usize> = (1..=n).filter(|&x| x != i && x != j).collect();
        vec![i, j, rest[e - 1]]
    });
    (prop_oneof![c, m], any::<bool>())
}

pub fn ia_element(n: usize, factors: &[(Vec<usize>, bool)]) -> FreeAutomorphism {
    let mut acc = FreeAutomorphism::identity(n);
    for (idx, inv) in factors {
        let g = if idx.len() == 2 {
            make_magnus_c(idx[0], idx[1], n).unwrap()
        } else {
            make_magnus_m(idx[0], idx[1], idx[2], n).unwrap()
        };
        let g = if *inv { g.inverse() } else { g };
        acc = acc.compose(&g).unwrap();
    }
    acc
}

pub fn free_reduction_confluence(seed: u64) -> Result<u32, String> {
    run(seed, (letters(4, 16), letters(4, 16)), |(u, v)| {
        let ru = FreeWord::reduce(&u, 4).map_err(fail)?;
        let rv = FreeWord::reduce(&v, 4).map_err(fail)?;
        let uv: Vec<i32> = u.iter().chain(&v).copied().collect();
        prop_assert_eq!(ru.mul(&rv), FreeWord::reduce(&uv, 4).map_err(fail)?);
        let again = FreeWord::reduce(ru.letters(), 4).map_err(fail)?;
        prop_assert_eq!(again, ru);
        Ok(())
    })
}

pub fn magnus_homomorphism(seed: u64) -> Result<u32, String> {
    run(
        seed,
        (letters(3, 8), letters(3, 8), 1usize..=4),
        |(u, v, cutoff)| {
            let u = FreeWord::reduce(&u, 3).map_err(fail)?;
            let v = FreeWord::reduce(&v, 3).map_err(fail)?;
            let lhs = magnus_expand(&u.mul(&v), cutoff).map_err(fail)?;
            let rhs = magnus_expand(&u, cutoff)
                .and_then(|a| a.mul(&magnus_expand(&v, cutoff)?))
                .map_err(fail)?;
            prop_assert_eq!(lhs, rhs);
            Ok(())
        },
    )
}

fn exact_depth(d: Depth) -> Option<usize> {
    match d {
        Depth::Exact(k) => Some(k),
        Depth::AtLeast(_) => None,
    }
}

pub fn depth_filtration(seed: u64) -> Result<u32, String> {
    let n = 3;
    let cutoff = 4;
    let elem = prop::collection::vec(ia_generator(n), 1..=2);
    run(seed, (elem.clone(), elem), move |(a, b)| {
        let (f, g) = (ia_element(n, &a), ia_element(n, &b));
        let df = exact_depth(johnson_depth(&f, cutoff).map_err(fail)?);
        let dg = exact_depth(johnson_depth(&g, cutoff).map_err(fail)?);
        let (Some(df), Some(dg)) = (df, dg) else {
            return Ok(());
        };
        let c = f.group_commutator(&g).map_err(fail)?;
        let dc = johnson_depth(&c, cutoff).map_err(fail)?;
        prop_assert!(dc.at_least((df + dg).min(cutoff)), "{dc} < {df} + {dg}");
        Ok(())
    })
}

pub fn gamma_containment(seed: u64) -> Result<u32, String> {
    let n = 3;
    run(
        seed,
        prop::collection::vec(ia_generator(n), 2..=3),
        move |factors| {
            let gs: Vec<FreeAutomorphism> = factors
                .iter()
                .map(|s| ia_element(n, std::slice::from_ref(s)))
                .collect();
            let c = FreeAutomorphism::left_normed_commutator(&gs).map_err(fail)?;
            let k = gs.len();
            let d = johnson_depth(&c, k + 1).map_err(fail)?;
            prop_assert!(d.at_least(k), "depth {d} for {k}-fold commutator");
            Ok(())
        },
    )
}

pub fn johnson_equivariance(seed: u64) -> Result<u32, String> {
    let n = 3;
    let strat = (
        ia_generator(n),
        prop::collection::vec(nielsen(n), 0..=3),
        1usize..=2,
    );
    run(seed, strat, move |(phi, g, k)| {
        let phi = ia_element(n, &[phi]);
        let phi = if k == 2 {
            let c = make_magnus_c(1, 2, n).unwrap();
            phi.group_commutator(&c).map_err(fail)?
        } else {
            phi
        };
        let g = eval_nielsen_word(&g, n).map_err(fail)?;
        let image = johnson_image(&phi, k).map_err(fail)?;
        let moved =
            johnson_image(&phi.conjugate_by(&g.inverse()).map_err(fail)?, k).map_err(fail)?;
        let act = abelianized_action(&g, image.space()).map_err(fail)?;
        prop_assert_eq!(
            moved.to_vector(),
            act.apply(&image.to_vector()).map_err(fail)?
        );
        Ok(())
    })
}

pub fn truncated_composition(seed: u64) -> Result<u32, String> {
    let n = 3;
    let w = prop::collection::vec(nielsen(n), 0..=4);
    run(seed, (w.clone(), w, 1usize..=2), move |(a, b, k)| {
        let f = eval_nielsen_word(&a, n).map_err(fail)?;
        let g = eval_nielsen_word(&b, n).map_err(fail)?;
        let fg = f.compose(&g).map_err(fail)?;
        let cut = k + 1;
        let composed = TruncatedAutomorphism::new(&f, cut)
            .and_then(|t| t.compose(&TruncatedAutomorphism::new(&g, cut)?))
            .map_err(fail)?;
        prop_assert_eq!(
            &composed,
            &TruncatedAutomorphism::new(&fg, cut).map_err(fail)?
        );
        if let Ok(image) = johnson_image(&fg, k) {
            prop_assert_eq!(composed.johnson_image(k).map_err(fail)?, image);
        }
        Ok(())
    })
}

pub fn johnson_images_are_lie(seed: u64) -> Result<u32, String> {
    let n = 3;
    run(
        seed,
        prop::collection::vec(ia_generator(n), 1..=3),
        move |factors| {
            let phi = ia_element(n, &factors);
            let image = johnson_image(&phi, 1).map_err(fail)?;
            prop_assert!(image.components_are_lie().map_err(fail)?);
            Ok(())
        },
    )
}

fn lie_element(n: usize, degree: usize) -> impl Strategy<Value = LieElement> {
    let words = lyndon_words(n, degree);
    let len = words.len();
    prop::collection::vec((0..len, -3i64..=3), 1..=3).prop_map(move |terms| {
        let mut acc = LieElement::zero(n, degree);
        for (i, c) in terms {
            let b = LieElement::basis(n, words[i].clone()).unwrap();
            acc = acc.add(&b.scale(&q(c))).unwrap();
        }
        acc
    })
}

pub fn jacobi_antisymmetry(seed: u64) -> Result<u32, String> {
    let n = 3;
    let strat = (1usize..=2, 1usize..=2, 1usize..=2)
        .prop_flat_map(move |(a, b, c)| (lie_element(n, a), lie_element(n, b), lie_element(n, c)));
    run(seed, strat, |(x, y, z)| {
        let br = |a: &LieElement, b: &LieElement| a.bracket(b).map_err(fail);
        prop_assert_eq!(br(&x, &y)?, br(&y, &x)?.scale(&q(-1)));
        let j1 = br(&x, &br(&y, &z)?)?;
        let j2 = br(&y, &br(&z, &x)?)?;
        let j3 = br(&z, &br(&x, &y)?)?;
        prop_assert!(j1
            .add(&j2)
            .and_then(|s| s.add(&j3))
            .map_err(fail)?
            .is_zero());
        Ok(())
    })
}

/// Witt dimensions for every `n ≤ 6`, `m ≤ 5`, and round trips of random
/// brackets through Lyndon coordinates.
pub fn witt_dimensions(seed: u64) -> Result<u32, String> {
    for n in 1..=6 {
        for m in 1..=5 {
            let words = lyndon_words(n, m);
            if words.len() as u64 != witt_number(n as u64, m as u64) {
                return Err(format!("Lie_{m}(Q^{n}): {} Lyndon words", words.len()));
            }
            if let Some(w) = words
                .iter()
                .find(|w| lyndon_bracket_tensor(w).coeff(w) != q(1))
            {
                return Err(format!("leading coefficient of {w:?}"));
            }
        }
    }
    let strat =
        (2usize..=4).prop_flat_map(|n| (Just(n), prop::collection::vec(1..=n as u8, 2..=5)));
    run(seed, strat, |(n, w)| {
        let t = left_normed_tensor(&w);
        let lie = LieElement::from_tensor(n, &t).map_err(fail)?;
        prop_assert_eq!(lie.to_tensor(), t);
        Ok(())
    })
}

pub fn support_subadditivity(seed: u64) -> Result<u32, String> {
    let n = 5;
    let w = prop::collection::vec(nielsen(n), 0..=4);
    run(seed, (w.clone(), w), move |(a, b)| {
        let g = eval_nielsen_word(&a, n).map_err(fail)?;
        let h = eval_nielsen_word(&b, n).map_err(fail)?;
        let c = g.group_commutator(&h).map_err(fail)?;
        let both = g.minimal_support().union(&h.minimal_support());
        prop_assert!(c.minimal_support().is_subset(&both));
        if g.minimal_support().is_disjoint(&h.minimal_support()) {
            prop_assert!(c.is_identity());
        }
        Ok(())
    })
}

pub fn disjoint_support_commutation(seed: u64) -> Result<u32, String> {
    let n = 6;
    let strat =
        prop::sample::subsequence((1..=n).collect::<Vec<_>>(), 2..=4).prop_flat_map(move |a| {
            let b: Vec<usize> = (1..=n).filter(|x| !a.contains(x)).collect();
            (
                prop::collection::vec(nielsen_in(a), 1..=4),
                prop::collection::vec(nielsen_in(b), 1..=4),
            )
        });
    run(seed, strat, move |(a, b)| {
        let g = eval_nielsen_word(&a, n).map_err(fail)?;
        let h = eval_nielsen_word(&b, n).map_err(fail)?;
        prop_assert!(g.minimal_support().is_disjoint(&h.minimal_support()));
        prop_assert!(g.group_commutator(&h).map_err(fail)?.is_identity());
        Ok(())
    })
}

pub fn signed_permutations_conjugate_parabolics(seed: u64) -> Result<u32, String> {
    let n = 5;
    let strat = (
        Just((1..=n as i32).collect::<Vec<_>>()).prop_shuffle(),
        prop::collection::vec(any::<bool>(), n),
        prop::sample::subsequence((1..=n).collect::<Vec<_>>(), 2..=3),
    );
    run(seed, strat, move |(perm, signs, idx)| {
        let signed: Vec<i32> = perm
            .iter()
            .zip(&signs)
            .map(|(&p, &s)| if s { p } else { -p })
            .collect();
        let sigma = make_signed_permutation(&signed).map_err(fail)?;
        let image: Vec<usize> = idx.iter().map(|&i| perm[i - 1] as usize).collect();
        let h = SubgroupHandle::standard(n, &image).map_err(fail)?;
        let target = SupportSet::new(idx.clone());
        for gen in parabolic_generators(&h).map_err(fail)? {
            let moved = gen.conjugate_by(&sigma).map_err(fail)?;
            prop_assert!(moved.is_saut() && moved.minimal_support().is_subset(&target));
        }
        Ok(())
    })
}

pub fn t_and_s_are_ia(seed: u64) -> Result<u32, String> {
    let n = 5;
    let t = (1..=n, prop::collection::vec(1..n, 2..=4)).prop_map(move |(i, shifts)| {
        (
            i,
            shifts
                .iter()
                .map(|d| (i - 1 + d) % n + 1)
                .collect::<Vec<_>>(),
        )
    });
    let s = prop::collection::vec(1..=3usize, 2..=3);
    run(seed, (t, s), move |((i, omega), mu)| {
        prop_assert!(make_t(i, &omega, n).map_err(fail)?.is_ia());
        prop_assert!(make_s(&mu, 4, 5, n).map_err(fail)?.is_ia());
        Ok(())
    })
}

fn elementary_word(n: usize) -> impl Strategy<Value = Vec<(usize, usize)>> {
    prop::collection::vec(
        (1..=n, 1..n).prop_map(move |(i, d)| (i, (i - 1 + d) % n + 1)),
        1..=3,
    )
}

fn random_vector(space: Space, max_terms: usize) -> impl Strategy<Value = TensorVector> {
    let labels = space.basis_labels();
    let len = labels.len();
    prop::collection::vec((0..len, -4i64..=4), 1..=max_terms).prop_map(move |terms| {
        TensorVector::from_terms(
            space,
            terms.into_iter().map(|(i, c)| (labels[i].clone(), q(c))),
        )
        .unwrap()
    })
}

pub fn phi_equivariance(seed: u64) -> Result<u32, String> {
    let n = 3;
    let strat = (2usize..=3).prop_flat_map(move |m| {
        (
            random_vector(Space::DualTensor { n, m }, 6),
            elementary_word(n),
        )
    });
    run(seed, strat, move |(t, word)| {
        let Space::DualTensor { m, .. } = t.space() else {
            unreachable!()
        };
        let (mut gt, mut phit) = (t.clone(), phi_map(&t).map_err(fail)?);
        for &(i, j) in &word {
            gt = elementary_on(i, j, t.space())
                .and_then(|e| e.apply(&gt))
                .map_err(fail)?;
            phit = elementary_on(i, j, Space::Tensor { n, m: m - 1 })
                .and_then(|e| e.apply(&phit))
                .map_err(fail)?;
        }
        prop_assert_eq!(phi_map(&gt).map_err(fail)?, phit);
        Ok(())
    })
}

pub fn phi_on_basis_elements(seed: u64) -> Result<u32, String> {
    let n = 4;
    let strat = (1..=n as u8, prop::collection::vec(1..=n as u8, 2..=3));
    run(seed, strat, move |(i, eps)| {
        if eps.contains(&i) {
            return Ok(());
        }
        let e = e_delta(n, &[vec![i], eps.clone()].concat()).map_err(fail)?;
        prop_assert!(phi_map(&e).map_err(fail)?.is_zero());
        let e = e_delta(n, &[vec![i, i], eps.clone()].concat()).map_err(fail)?;
        let expect =
            TensorVector::basis(Space::Tensor { n, m: eps.len() }, eps.clone()).map_err(fail)?;
        prop_assert_eq!(phi_map(&e).map_err(fail)?, expect);
        Ok(())
    })
}

pub fn w_fixed_by_shift(seed: u64) -> Result<u32, String> {
    for n in 1..=4 {
        for k in 1..=4 {
            let w = w_basis(n, k).map_err(|e| e.to_string())?;
            if w.dim() != necklace_count(n, k) {
                return Err(format!("dim W = {} for n={n}, k={k}", w.dim()));
            }
        }
    }
    let strat = (1usize..=4, 1usize..=4).prop_flat_map(|(n, k)| {
        let dim = w_basis(n, k).unwrap().dim();
        (
            Just((n, k)),
            prop::collection::vec((0..dim, -5i64..=5), 1..=4),
        )
    });
    run(seed, strat, |((n, k), terms)| {
        let basis = w_basis(n, k).map_err(fail)?.basis();
        let mut v = TensorVector::zero(Space::Tensor { n, m: k });
        for (i, c) in terms {
            v = v.add(&basis[i].scale(&q(c))).map_err(fail)?;
        }
        prop_assert_eq!(cyclic_shift(&v).map_err(fail)?, v);
        Ok(())
    })
}

fn sp_kind(g: usize) -> impl Strategy<Value = SpGenerator> {
    let gens = extended_generators(g);
    (0..gens.len()).prop_map(move |i| gens[i].clone())
}

pub fn wedge_lift_homomorphism(seed: u64) -> Result<u32, String> {
    let g = 3;
    let space = Space::WedgeSymp { g, degree: 3 };
    let strat = (
        prop::collection::vec(sp_kind(g), 1..=3),
        random_vector(space, 4),
    );
    run(seed, strat, move |(kinds, v)| {
        let mut m = IntMatrix::identity(2 * g);
        let mut m_inv = IntMatrix::identity(2 * g);
        let mut stepwise = v.clone();
        for kind in kinds.iter().rev() {
            let (a, a_inv) = sp_matrices(kind, g).map_err(fail)?;
            prop_assert!(preserves_symplectic_form(&a, g));
            m = a.mul(&m);
            m_inv = m_inv.mul(&a_inv);
            stepwise = wedge3_lift(kind, g)
                .and_then(|op| op.apply(&stepwise))
                .map_err(fail)?;
        }
        let whole = induced_operator("product", &m, &m_inv, space).map_err(fail)?;
        prop_assert_eq!(whole.apply(&v).map_err(fail)?, stepwise);
        Ok(())
    })
}

pub fn saturation_is_invariant(seed: u64) -> Result<u32, String> {
    let n = 3;
    let space = Space::Tensor { n, m: 2 };
    let gens = vec![
        elementary_on(1, 2, space).unwrap(),
        elementary_on(2, 3, space).unwrap(),
    ];
    run(
        seed,
        prop::collection::vec(random_vector(space, 2), 1..=2),
        move |seeds| {
            let refs: Vec<&LinearOperator> = gens.iter().collect();
            let sat = orbit_saturate(&refs, &seeds).map_err(fail)?;
            for s in &seeds {
                prop_assert!(sat.contains(s).map_err(fail)?);
            }
            for b in sat.basis() {
                for op in &gens {
                    prop_assert!(sat.contains(&op.apply(&b).map_err(fail)?).map_err(fail)?);
                }
            }
            Ok(())
        },
    )
}

pub fn commutes_symmetric(seed: u64) -> Result<u32, String> {
    let n = 5;
    let handle = (
        prop::sample::subsequence((1..=n).collect::<Vec<_>>(), 2),
        prop::collection::vec(nielsen(n), 0..=2),
    );
    run(
        seed,
        (handle.clone(), handle),
        move |((i1, c1), (i2, c2))| {
            let h1 = SubgroupHandle::new(n, SupportSet::new(i1), c1).map_err(fail)?;
            let h2 = SubgroupHandle::new(n, SupportSet::new(i2), c2).map_err(fail)?;
            prop_assert_eq!(
                commutes(&h1, &h2).map_err(fail)?,
                commutes(&h2, &h1).map_err(fail)?
            );
            Ok(())
        },
    )
}

pub fn handles_fixed_by_good_conjugators(seed: u64) -> Result<u32, String> {
    let n = 5;
    run(seed, nielsen_in(vec![3, 4, 5]), move |s| {
        let h = SubgroupHandle::standard(n, &[1, 2]).map_err(fail)?;
        prop_assert_eq!(
            parabolic_generators(&h.translate(&[s])).map_err(fail)?,
            parabolic_generators(&h).map_err(fail)?
        );
        Ok(())
    })
}

pub fn paths_verify(seed: u64) -> Result<u32, String> {
    let n = 5;
    run(seed, prop::collection::vec(nielsen(n), 0..=8), move |g| {
        let p = conjugate_path(n, &[1, 2], &g).map_err(fail)?;
        prop_assert!(verify_path(&p));
        prop_assert!(p.edges() <= 2 * g.len());
        let end = SubgroupHandle::standard(n, &[1, 2])
            .map_err(fail)?
            .translate(&g);
        prop_assert_eq!(p.last().map(|h| h.canonical()), Some(end.canonical()));
        Ok(())
    })
}

pub fn standard_chooser(n: usize) -> impl FnMut(&SubgroupHandle) -> Option<(FreeAutomorphism, Q)> {
    move |h: &SubgroupHandle| {
        let idx = h.indices().indices();
        let c = h.conjugator_element().ok()?;
        let g = make_magnus_c(idx[0], idx[1], n)
            .ok()?
            .conjugate_by(&c)
            .ok()?;
        Some((g, q(1)))
    }
}

fn t_pool(n: usize) -> Vec<FreeAutomorphism> {
    vec![
        make_magnus_c(1, 2, n).unwrap(),
        make_magnus_m(1, 2, 3, n).unwrap(),
        make_magnus_c(3, 4, n).unwrap(),
        make_magnus_m(2, 3, 5, n).unwrap(),
        make_magnus_c(5, 1, n).unwrap(),
    ]
}

/// Assembled certificates validate, and validity survives positive rescaling
/// of χ and swaps of adjacent independent entries.
pub fn certificate_invariants(seed: u64) -> Result<u32, String> {
    let n = 5;
    let pool = t_pool(n);
    let strat = (
        prop::sample::subsequence((0..pool.len()).collect::<Vec<_>>(), 0..=3),
        1i64..=9,
        1i64..=9,
        any::<prop::sample::Index>(),
    );
    run(seed, strat, move |(pick, num, den, swap)| {
        let ts: Vec<FreeAutomorphism> = pick.iter().map(|&i| pool[i].clone()).collect();
        let cert = assemble_certificate(n, &ts, 2, &Character::new(), &mut standard_chooser(n))
            .map_err(fail)?
            .certificate;
        prop_assert!(check_certificate(&cert).map_err(fail)?.valid);
        let r = q_frac(num, den);
        let mut scaled = cert.clone();
        scaled.chi.iter_mut().for_each(|c| *c = &*c * &r);
        prop_assert!(check_certificate(&scaled).map_err(fail)?.valid);

        let len = cert.elements.len();
        if len >= 3 {
            let p = 2 + swap.index(len - 2);
            if p < len {
                let refs = |i: usize, other: usize| {
                    cert.witnesses.iter().any(|w| {
                        w.i == i
                            && (w.j == other
                                || w.word.iter().any(|&l| l.unsigned_abs() as usize == other))
                    })
                };
                if !refs(p, p + 1) && !refs(p + 1, p) {
                    prop_assert!(
                        check_certificate(&swap_adjacent(&cert, p))
                            .map_err(fail)?
                            .valid
                    );
                }
            }
        }
        Ok(())
    })
}

/// Swaps entries `p` and `p + 1` (1-based), renumbering witnesses.
pub fn swap_adjacent(c: &BnsCertificate, p: usize) -> BnsCertificate {
    let map = |i: usize| match i {
        _ if i == p => p + 1,
        _ if i == p + 1 => p,
        _ => i,
    };
    let mut out = c.clone();
    out.elements.swap(p - 1, p);
    out.chi.swap(p - 1, p);
    for w in &mut out.witnesses {
        w.i = map(w.i);
        w.j = map(w.j);
        for l in &mut w.word {
            let m = map(l.unsigned_abs() as usize) as i64;
            *l = if *l > 0 { m } else { -m };
        }
    }
    out
}
