use std::fmt;
use std::str::FromStr;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};
use thiserror::Error;

use torelli_core::autf::{
    make_magnus_c, make_magnus_m, make_s, make_s_right_normed, make_t, AutfError, FreeAutomorphism,
    NielsenGen, Side,
};
use torelli_core::bnscert::{
    assemble_certificate, check_certificate, BnsCertificate, CertError, Character, Failure,
};
use torelli_core::commgraph::{conjugate_path, verify_path, GraphError, SubgroupHandle};
use torelli_core::exactlin::symplectic::{
    a, b, sp_orbit_check, wedge, wedge_lift, OrbitStatus, SpGenerator,
};
use torelli_core::exactlin::{
    closing_identity_check, cyclic_difference_basis, kernel_claim_check, kernel_claim_compare,
    orbit_saturate, sl_generators, span_basis, tau_map, w_basis, z_decomposition, LinAlgError,
    LinearOperator, Space, TensorVector,
};
use torelli_core::magnus::{
    johnson_depth, johnson_image, Depth, MagnusError, TruncatedAutomorphism,
};
use torelli_core::rational::{q, Q};

use crate::report::{Params, Status, SuiteReport};

#[derive(Debug, Error)]
pub enum SuiteError {
    #[error("unknown suite `{0}`")]
    UnknownSuite(String),
    #[error("invalid parameters: {0}")]
    InvalidParams(String),
    #[error(transparent)]
    Autf(#[from] AutfError),
    #[error(transparent)]
    Magnus(#[from] MagnusError),
    #[error(transparent)]
    LinAlg(#[from] LinAlgError),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Cert(#[from] CertError),
}

type Result<T> = std::result::Result<T, SuiteError>;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    Iaab,
    TauIdentities,
    KernelClaim,
    SpOrbit,
    SlReduction,
    Paths,
    Certificates,
    DepthTable,
}

impl Suite {
    pub const ALL: [Suite; 8] = [
        Suite::Iaab,
        Suite::TauIdentities,
        Suite::KernelClaim,
        Suite::SpOrbit,
        Suite::SlReduction,
        Suite::Paths,
        Suite::Certificates,
        Suite::DepthTable,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Iaab => "iaab",
            Suite::TauIdentities => "tau-identities",
            Suite::KernelClaim => "kernel-claim",
            Suite::SpOrbit => "sp-orbit",
            Suite::SlReduction => "sl-reduction",
            Suite::Paths => "paths",
            Suite::Certificates => "certificates",
            Suite::DepthTable => "depth-table",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = SuiteError;

    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL
            .into_iter()
            .find(|x| x.name() == s)
            .ok_or_else(|| SuiteError::UnknownSuite(s.to_string()))
    }
}

pub fn run_suite(suite: Suite, p: &Params) -> Result<SuiteReport> {
    let start = std::time::Instant::now();
    let mut report = match suite {
        Suite::Iaab => iaab(p),
        Suite::TauIdentities => tau_identities(p),
        Suite::KernelClaim => kernel_claim(p),
        Suite::SpOrbit => sp_orbit(p),
        Suite::SlReduction => sl_reduction(p),
        Suite::Paths => paths(p),
        Suite::Certificates => certificates(p),
        Suite::DepthTable => depth_table(p),
    }?;
    report.wall_time_ms = start.elapsed().as_secs_f64() * 1e3;
    Ok(report)
}

pub const ANCHOR_IA_AB: &str = "Hom(V_Z, ⋀^2 V_Z)";
pub const ANCHOR_D3: &str = "in fact d=3";
pub const ANCHOR_NORMAL: &str = "normally generated by C_12";
pub const ANCHOR_T_KERNEL: &str = "belongs to Ker(Φ)";
pub const ANCHOR_S_FORMULA: &str = "τ(s_μ) = e_{μ1}⊗…⊗e_{μk} − e_{μ2}⊗…⊗e_{μk}⊗e_{μ1}";
pub const ANCHOR_W: &str = "τ(JL(k)) ⊆ W";
pub const ANCHOR_KERNEL: &str = "A = Ker(τ)";
pub const ANCHOR_Z: &str = "z = (2^{c(δ)} − 2) e_δ + u";
pub const ANCHOR_CLOSING: &str = "E_ij t_{i,jε} − t_{i,jε} + t_{j,iε}";
pub const ANCHOR_SP_IDENTITIES: &str = "τ_tu(a_t∧b_t) = a_t∧b_t + a_t∧a_u";
pub const ANCHOR_SP_SPANS: &str = "The Sp_2g(Z)-orbit of this element spans";
pub const ANCHOR_CONNECTED: &str = "connected whenever 2m+c−1 ≤ n";
pub const ANCHOR_BNS: &str = "there exists j<i such that χ(x_j) ≠ 0";
pub const ANCHOR_DEPTH: &str = "lie in G(k)";

fn rng(p: &Params) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(p.seed.unwrap_or(0))
}

fn ks(p: &Params, default: &[usize]) -> Vec<usize> {
    p.k.map(|k| vec![k]).unwrap_or_else(|| default.to_vec())
}

fn need(cond: bool, msg: impl FnOnce() -> String) -> Result<()> {
    if cond {
        Ok(())
    } else {
        Err(SuiteError::InvalidParams(msg()))
    }
}

/// The two smallest indices of `[n]` outside `mu`.
pub fn two_outside(mu: &[usize], n: usize) -> Option<(usize, usize)> {
    let mut it = (1..=n).filter(|x| !mu.contains(x));
    Some((it.next()?, it.next()?))
}

fn s_literal(mu: &[usize], n: usize) -> Result<FreeAutomorphism> {
    let (i, j) = two_outside(mu, n)
        .ok_or_else(|| SuiteError::InvalidParams(format!("no room for S_{mu:?} in rank {n}")))?;
    Ok(make_s(mu, i, j, n)?)
}

fn label(w: &[usize]) -> Vec<u8> {
    w.iter().map(|&x| x as u8).collect()
}

fn dotted(w: &[usize]) -> String {
    w.iter()
        .map(|x| x.to_string())
        .collect::<Vec<_>>()
        .join(".")
}

/// Every sequence of length `k` over `1..=letters`.
fn sequences(letters: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = vec![vec![]];
    for _ in 0..k {
        out = out
            .into_iter()
            .flat_map(|w| {
                (1..=letters).map(move |x| {
                    let mut w = w.clone();
                    w.push(x);
                    w
                })
            })
            .collect();
    }
    out
}

/// `ω` of length `len` avoiding `i`, with `ω_1 ≠ ω_2` so that the bracket is nonzero.
fn sample_omega(r: &mut ChaCha8Rng, n: usize, i: usize, len: usize) -> Vec<usize> {
    let others: Vec<usize> = (1..=n).filter(|&x| x != i).collect();
    let mut w: Vec<usize> = (0..len).map(|_| *others.choose(r).unwrap()).collect();
    while w[1] == w[0] {
        w[1] = *others.choose(r).unwrap();
    }
    w
}

fn sample_mu(r: &mut ChaCha8Rng, n: usize, k: usize) -> Vec<usize> {
    loop {
        let mu: Vec<usize> = (0..k).map(|_| r.gen_range(1..=n)).collect();
        if two_outside(&mu, n).is_some() {
            return mu;
        }
    }
}

fn ia_generators(n: usize) -> Result<Vec<(String, FreeAutomorphism)>> {
    let mut out = Vec::new();
    for i in 1..=n {
        for j in 1..=n {
            if i != j {
                out.push((format!("C{i}{j}"), make_magnus_c(i, j, n)?));
            }
        }
    }
    for i in 1..=n {
        for j in 1..=n {
            for k in j + 1..=n {
                if i != j && i != k {
                    out.push((format!("M{i}{j}{k}"), make_magnus_m(i, j, k, n)?));
                }
            }
        }
    }
    Ok(out)
}

pub fn iaab(p: &Params) -> Result<SuiteReport> {
    let ns = p.n.map(|n| vec![n]).unwrap_or_else(|| vec![3, 4, 5]);
    for &n in &ns {
        need(n >= 3, || format!("iaab needs n ≥ 3, got {n}"))?;
    }
    let mut rep = SuiteReport::new("iaab", json!({ "n": ns }));
    for n in ns {
        let space = Space::Mk { n, k: 1 };
        let full = n * n * (n - 1) / 2;
        let gens = ia_generators(n)?;
        let images = gens
            .iter()
            .map(|(_, g)| Ok(johnson_image(g, 1)?.to_vector()))
            .collect::<Result<Vec<_>>>()?;
        rep.check(format!("ia-ab-dimension n={n}"), ANCHOR_IA_AB, || {
            let dim = span_basis(space, &images)?.dim();
            Ok::<_, SuiteError>((
                Status::from_bool(dim == full),
                json!({ "n": n, "generators": gens.len(), "dim": dim, "expected": full }),
            ))
        })?;
        rep.check(format!("c-only-dimension n={n}"), ANCHOR_D3, || {
            let c_images: Vec<TensorVector> = gens
                .iter()
                .zip(&images)
                .filter(|((name, _), _)| name.starts_with('C'))
                .map(|(_, v)| v.clone())
                .collect();
            let dim = span_basis(space, &c_images)?.dim();
            let expected = n * (n - 1);
            Ok::<_, SuiteError>((
                Status::from_bool(dim == expected && dim < full),
                json!({ "n": n, "dim": dim, "expected": expected, "full": full }),
            ))
        })?;
        rep.check(format!("normal-generation n={n}"), ANCHOR_NORMAL, || {
            let seed = johnson_image(&make_magnus_c(1, 2, n)?, 1)?.to_vector();
            let ops = sl_generators(space)?;
            let refs: Vec<&LinearOperator> = ops.iter().collect();
            let dim = orbit_saturate(&refs, &[seed])?.dim();
            Ok::<_, SuiteError>((
                Status::from_bool(dim == full),
                json!({ "n": n, "saturated_dim": dim, "expected": full }),
            ))
        })?;
    }
    Ok(rep)
}

pub fn tau_identities(p: &Params) -> Result<SuiteReport> {
    let n = p.n.unwrap_or(5);
    let ks = ks(p, &[2, 3]);
    let trials = p.trials.unwrap_or(50);
    for &k in &ks {
        need(k >= 2 && k + 2 <= n, || {
            format!("tau-identities needs 2 ≤ k ≤ n − 2, got n = {n}, k = {k}")
        })?;
    }
    let mut r = rng(p);
    let mut rep = SuiteReport::new(
        "tau-identities",
        json!({ "n": n, "k": ks, "trials": trials, "seed": p.seed.unwrap_or(0) }),
    );
    for k in ks {
        let samples: Vec<(usize, Vec<usize>)> = (0..trials)
            .map(|_| {
                let i = r.gen_range(1..=n);
                (i, sample_omega(&mut r, n, i, k + 1))
            })
            .collect();
        rep.check(format!("tau-t-vanishes k={k}"), ANCHOR_T_KERNEL, || {
            let mut bad = Vec::new();
            for (i, omega) in &samples {
                let t = make_t(*i, omega, n)?;
                if !tau_map(&johnson_image(&t, k)?)?.is_zero() {
                    bad.push(format!("T_{{{i},{}}}", dotted(omega)));
                }
            }
            Ok::<_, SuiteError>((
                Status::from_bool(bad.is_empty()),
                json!({ "k": k, "sampled": samples.len(), "nonzero": bad }),
            ))
        })?;

        let space = Space::Tensor { n, m: k };
        let expected = |mu: &[usize]| -> Result<TensorVector> {
            let mut rot = mu[1..].to_vec();
            rot.push(mu[0]);
            Ok(TensorVector::basis(space, label(mu))?
                .sub(&TensorVector::basis(space, label(&rot))?)?)
        };
        let mus = sequences(3, k);
        let s_check = |right: bool| {
            let mut bad = Vec::new();
            for mu in &mus {
                let (i, j) = two_outside(mu, n).expect("three letters leave room");
                let s = if right {
                    make_s_right_normed(mu, i, j, n)?
                } else {
                    make_s(mu, i, j, n)?
                };
                let got = tau_map(&johnson_image(&s, k)?)?;
                if got != expected(mu)? {
                    bad.push(
                        json!({ "mu": dotted(mu), "i": i, "j": j, "tau": got.to_json_terms() }),
                    );
                }
            }
            let first: Vec<Value> = bad.iter().take(3).cloned().collect();
            Ok::<_, SuiteError>((
                Status::from_bool(bad.is_empty()),
                json!({ "k": k, "checked": mus.len(), "mismatches": bad.len(), "first_mismatches": first }),
            ))
        };
        rep.check(format!("tau-s-formula k={k}"), ANCHOR_S_FORMULA, || {
            s_check(false)
        })?;
        rep.check(
            format!("tau-s-formula-right-normed k={k}"),
            ANCHOR_S_FORMULA,
            || s_check(true),
        )?;

        let mut products = Vec::new();
        let mut taus = Vec::new();
        for _ in 0..trials {
            let mut acc = TruncatedAutomorphism::identity(n, k + 1);
            let mut names = Vec::new();
            for _ in 0..r.gen_range(1..=3) {
                let (name, f) = if r.gen_bool(0.5) {
                    let i = r.gen_range(1..=n);
                    let omega = sample_omega(&mut r, n, i, k + 1);
                    (
                        format!("T_{{{i},{}}}", dotted(&omega)),
                        make_t(i, &omega, n)?,
                    )
                } else {
                    let mu = sample_mu(&mut r, n, k);
                    (format!("S_{}", dotted(&mu)), s_literal(&mu, n)?)
                };
                let (name, f) = if r.gen_bool(0.5) {
                    (name + "^-1", f.inverse())
                } else {
                    (name, f)
                };
                names.push(name);
                acc = acc.compose(&TruncatedAutomorphism::new(&f, k + 1)?)?;
            }
            products.push(names.join(" "));
            taus.push(tau_map(&acc.johnson_image(k)?)?);
        }
        let nonzero = taus.iter().filter(|t| !t.is_zero()).count();
        rep.check(format!("tau-in-w k={k}"), ANCHOR_W, || {
            let w = w_basis(n, k)?;
            let inside = taus.iter().map(|t| w.contains(t)).collect::<std::result::Result<Vec<_>, _>>()?;
            let count = inside.iter().filter(|&&x| x).count();
            let outside: Vec<&String> = products.iter().zip(&inside).filter(|(_, &x)| !x).map(|(p, _)| p).take(3).collect();
            Ok::<_, SuiteError>((
                Status::from_bool(count == taus.len()),
                json!({ "k": k, "products": taus.len(), "nonzero_tau": nonzero, "in_w": count, "w_dim": w.dim(), "first_outside": outside }),
            ))
        })?;
        rep.check(format!("tau-in-cyclic-differences k={k}"), ANCHOR_W, || {
            let d = cyclic_difference_basis(n, k)?;
            let inside = taus.iter().map(|t| d.contains(t)).collect::<std::result::Result<Vec<_>, _>>()?;
            let count = inside.iter().filter(|&&x| x).count();
            Ok::<_, SuiteError>((
                Status::from_bool(count == taus.len()),
                json!({ "k": k, "products": taus.len(), "nonzero_tau": nonzero, "in_image_of_1_minus_shift": count, "dim": d.dim() }),
            ))
        })?;
    }
    Ok(rep)
}

pub fn kernel_claim(p: &Params) -> Result<SuiteReport> {
    let n = p.n.unwrap_or(4);
    let k = p.k.unwrap_or(2);
    need(k >= 1 && n >= 2, || {
        format!("kernel-claim needs k ≥ 1, n ≥ 2, got n = {n}, k = {k}")
    })?;
    let in_range = k >= 2 && k + 2 <= n;
    let mut rep = SuiteReport::new("kernel-claim", json!({ "n": n, "k": k }));
    rep.check(format!("kernel-claim n={n} k={k}"), ANCHOR_KERNEL, || {
        let r = if in_range {
            kernel_claim_check(n, k)?
        } else {
            kernel_claim_compare(n, k)?
        };
        let mut values = serde_json::to_value(&r).expect("report serializes");
        values["within_2_le_k_le_n_minus_2"] = json!(in_range);
        Ok::<_, SuiteError>((Status::from_bool(r.equal && r.seeds_in_kernel), values))
    })?;
    Ok(rep)
}

/// The four σ/τ identities in `⋀²V`, and the same with a third factor `a_r`
/// in `⋀³V`, for every ordered pair `t ≠ u`.
fn sp_identities(g: usize) -> Result<(usize, Vec<String>)> {
    let mut checked = 0;
    let mut bad = Vec::new();
    for t in 1..=g {
        for u in 1..=g {
            if t == u {
                continue;
            }
            let r = (1..=g).find(|&r| r != t && r != u);
            for extra in [None, r] {
                let degree = if extra.is_some() { 3 } else { 2 };
                let tail: Vec<u8> = extra.map(|r| vec![a(r)]).unwrap_or_default();
                let w = |x: u8, y: u8| {
                    let mut v = vec![x, y];
                    v.extend_from_slice(&tail);
                    wedge(g, &v)
                };
                let lift = |k: SpGenerator| wedge_lift(&k, g, degree);
                let (at, bt, au, bu) = (a(t), b(t, g), a(u), b(u, g));
                let cases = [
                    (
                        "tau_tu(a_t^b_t)",
                        lift(SpGenerator::Tau(t, u))?.apply(&w(at, bt)?)?,
                        w(at, bt)?.add(&w(at, au)?)?,
                    ),
                    (
                        "sigma_t(a_t^a_u)",
                        lift(SpGenerator::Sigma(t))?.apply(&w(at, au)?)?,
                        w(bt, au)?,
                    ),
                    (
                        "sigma_u(a_t^a_u)",
                        lift(SpGenerator::Sigma(u))?.apply(&w(at, au)?)?,
                        w(at, bu)?,
                    ),
                    (
                        "sigma_t(a_t^b_u)",
                        lift(SpGenerator::Sigma(t))?.apply(&w(at, bu)?)?,
                        w(bt, bu)?,
                    ),
                ];
                for (name, lhs, rhs) in cases {
                    checked += 1;
                    if lhs != rhs {
                        bad.push(format!("{name} t={t} u={u} degree={degree}"));
                    }
                }
            }
        }
    }
    Ok((checked, bad))
}

pub fn sp_orbit(p: &Params) -> Result<SuiteReport> {
    let gs = p.g.map(|g| vec![g]).unwrap_or_else(|| vec![3, 4]);
    for &g in &gs {
        need(g >= 2, || format!("sp-orbit needs g ≥ 2, got {g}"))?;
    }
    let ext = p.extended_sp_generators;
    let mut rep = SuiteReport::new(
        "sp-orbit",
        json!({ "g": gs, "extended_sp_generators": ext }),
    );
    for g in gs {
        rep.check(format!("sp-identities g={g}"), ANCHOR_SP_IDENTITIES, || {
            let (checked, bad) = sp_identities(g)?;
            Ok::<_, SuiteError>((
                Status::from_bool(bad.is_empty()),
                json!({ "g": g, "checked": checked, "failed": bad }),
            ))
        })?;
        rep.check(format!("wedge3-orbit-spans g={g}"), ANCHOR_SP_SPANS, || {
            let r = sp_orbit_check(g, ext)?;
            let status = match r.status {
                OrbitStatus::Spans => Status::Pass,
                OrbitStatus::Inconclusive => Status::Inconclusive,
            };
            Ok::<_, SuiteError>((status, serde_json::to_value(&r).expect("report serializes")))
        })?;
    }
    Ok(rep)
}

fn sample_delta(r: &mut ChaCha8Rng, n: usize, k: usize) -> Vec<u8> {
    let c = *[2usize, 3]
        .iter()
        .filter(|&&c| c <= k + 1)
        .collect::<Vec<_>>()
        .choose(r)
        .unwrap();
    let d0 = r.gen_range(1..=n);
    let others: Vec<usize> = (1..=n).filter(|&x| x != d0).collect();
    let mut tail: Vec<usize> = vec![d0; *c];
    tail.extend((0..k + 1 - c).map(|_| *others.choose(r).unwrap()));
    tail.shuffle(r);
    let mut delta = vec![d0 as u8];
    delta.extend(tail.into_iter().map(|x| x as u8));
    delta
}

pub fn sl_reduction(p: &Params) -> Result<SuiteReport> {
    let n = p.n.unwrap_or(5);
    let ks = ks(p, &[2, 3]);
    let trials = p.trials.unwrap_or(20);
    for &k in &ks {
        need(k >= 2 && k + 2 <= n, || {
            format!("sl-reduction needs 2 ≤ k ≤ n − 2, got n = {n}, k = {k}")
        })?;
    }
    let mut r = rng(p);
    let mut rep = SuiteReport::new(
        "sl-reduction",
        json!({ "n": n, "k": ks, "trials": trials, "seed": p.seed.unwrap_or(0) }),
    );
    let deltas: Vec<Vec<u8>> = (0..trials)
        .map(|t| sample_delta(&mut r, n, ks[t % ks.len()]))
        .collect();
    rep.check("z-decomposition", ANCHOR_Z, || {
        let mut bad = Vec::new();
        let mut cs = Vec::new();
        for d in &deltas {
            let z = z_decomposition(n, d)?;
            cs.push(z.c);
            if !(z.holds && z.consistent) {
                bad.push(serde_json::to_value(&z).expect("report serializes"));
            }
        }
        let labels: Vec<String> = deltas
            .iter()
            .map(|d| dotted(&d.iter().map(|&x| x as usize).collect::<Vec<_>>()))
            .collect();
        Ok::<_, SuiteError>((
            Status::from_bool(bad.is_empty()),
            json!({ "sampled": labels, "c": cs, "failures": bad }),
        ))
    })?;
    let closings: Vec<(usize, usize, usize, Vec<u8>)> = (0..trials)
        .map(|t| {
            let k = ks[t % ks.len()];
            let i = r.gen_range(1..=n);
            let j = loop {
                let j = r.gen_range(1..=n);
                if j != i {
                    break j;
                }
            };
            let rest: Vec<u8> = (1..=n)
                .filter(|&x| x != i && x != j)
                .map(|x| x as u8)
                .collect();
            let eps = (0..k).map(|_| *rest.choose(&mut r).unwrap()).collect();
            (k, i, j, eps)
        })
        .collect();
    rep.check("closing-identity", ANCHOR_CLOSING, || {
        let mut bad = Vec::new();
        for (k, i, j, eps) in &closings {
            if !closing_identity_check(n, *k, *i, *j, eps)? {
                bad.push(json!({ "k": k, "i": i, "j": j, "eps": eps }));
            }
        }
        Ok::<_, SuiteError>((
            Status::from_bool(bad.is_empty()),
            json!({ "sampled": closings.len(), "failures": bad }),
        ))
    })?;
    Ok(rep)
}

fn random_nielsen_word(r: &mut ChaCha8Rng, n: usize, max_len: usize) -> Vec<NielsenGen> {
    let len = r.gen_range(0..=max_len);
    (0..len)
        .map(|_| {
            let i = r.gen_range(1..=n);
            let j = (i - 1 + r.gen_range(1..n)) % n + 1;
            let side = if r.gen_bool(0.5) {
                Side::Left
            } else {
                Side::Right
            };
            NielsenGen::new(side, i, j, if r.gen_bool(0.5) { 1 } else { -1 })
        })
        .collect()
}

pub fn paths(p: &Params) -> Result<SuiteReport> {
    let n = p.n.unwrap_or(5);
    let m = p.m.unwrap_or(2);
    let trials = p.trials.unwrap_or(100);
    need(m >= 2 && 2 * m < n, || {
        format!("paths needs m ≥ 2 and 2m + 1 ≤ n, got n = {n}, m = {m}")
    })?;
    let mut r = rng(p);
    let words: Vec<Vec<NielsenGen>> = (0..trials)
        .map(|_| random_nielsen_word(&mut r, n, 8))
        .collect();
    let base: Vec<usize> = (1..=m).collect();
    let mut rep = SuiteReport::new(
        "paths",
        json!({ "n": n, "m": m, "trials": trials, "seed": p.seed.unwrap_or(0), "max_word_length": 8 }),
    );
    let mut built = Vec::new();
    rep.check("paths-verify", ANCHOR_CONNECTED, || {
        let mut failures = Vec::new();
        for w in &words {
            match conjugate_path(n, &base, w) {
                Ok(path) => {
                    let target = SubgroupHandle::standard(n, &base)?.translate(w).canonical();
                    let ends = path.last().map(|h| h.canonical()) == Some(target);
                    if !(verify_path(&path) && ends) {
                        failures.push(json!({ "word": w, "path": path }));
                    }
                    built.push((w.len(), path.edges()));
                }
                Err(e) => failures.push(json!({ "word": w, "error": e.to_string() })),
            }
        }
        Ok::<_, SuiteError>((
            Status::from_bool(failures.is_empty()),
            json!({ "trials": words.len(), "verified": words.len() - failures.len(), "failures": failures }),
        ))
    })?;
    rep.check("path-length-bound", ANCHOR_CONNECTED, || {
        let over: Vec<Value> = built
            .iter()
            .filter(|(len, edges)| *edges > 2 * len)
            .map(|(len, edges)| json!({ "word_length": len, "edges": edges }))
            .collect();
        let total_edges: usize = built.iter().map(|(_, e)| e).sum();
        let total_len: usize = built.iter().map(|(l, _)| l).sum();
        Ok::<_, SuiteError>((
            Status::from_bool(over.is_empty() && built.len() == words.len()),
            json!({ "paths": built.len(), "total_edges": total_edges, "total_word_length": total_len, "violations": over }),
        ))
    })?;
    Ok(rep)
}

/// For each vertex `Γ_I^c`, the conjugate of `C_{I_1 I_2}` with character 1.
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

fn verdict_value(c: &BnsCertificate) -> Value {
    match check_certificate(c) {
        Ok(v) => serde_json::to_value(v).expect("verdict serializes"),
        Err(e) => json!({ "error": e.to_string() }),
    }
}

pub fn certificates(p: &Params) -> Result<SuiteReport> {
    let n = p.n.unwrap_or(5);
    let m = p.m.unwrap_or(2);
    need(m >= 2 && 2 * m < n && n >= 3, || {
        format!("certificates needs m ≥ 2 and 2m + 1 ≤ n, got n = {n}, m = {m}")
    })?;
    let mut rep = SuiteReport::new("certificates", json!({ "n": n, "m": m }));
    let sets: Vec<(&str, Vec<FreeAutomorphism>)> = vec![
        ("{C12}", vec![make_magnus_c(1, 2, n)?]),
        (
            "{C12, M123}",
            vec![make_magnus_c(1, 2, n)?, make_magnus_m(1, 2, 3, n)?],
        ),
    ];
    let mut last = None;
    for (name, ts) in &sets {
        rep.check(format!("assemble-and-check T={name}"), ANCHOR_BNS, || {
            let a = assemble_certificate(n, ts, m, &Character::new(), &mut standard_chooser(n))?;
            let v = check_certificate(&a.certificate)?;
            let back = BnsCertificate::from_json(&a.certificate.to_json())?;
            let ok = v.valid && back == a.certificate;
            let values = json!({
                "certificate": a.certificate.to_json(),
                "vertex_order": a.vertex_order,
                "verdict": v,
                "json_round_trip": back == a.certificate,
            });
            last = Some(a.certificate);
            Ok::<_, SuiteError>((Status::from_bool(ok), values))
        })?;
    }
    let Some(cert) = last else {
        return Ok(rep);
    };

    rep.check("corrupt-first-character", ANCHOR_BNS, || {
        let mut c = cert.clone();
        c.chi[0] = q(0);
        let v = check_certificate(&c)?;
        let ok = v.failure == Some(Failure::FirstCharacterZero);
        Ok::<_, SuiteError>((Status::from_bool(ok), json!({ "verdict": v })))
    })?;
    rep.check("corrupt-witness-word", ANCHOR_BNS, || {
        let mut c = cert.clone();
        let first = (0..c.witnesses.len()).min_by_key(|&x| c.witnesses[x].i);
        let Some(x) = first else {
            return Ok((
                Status::Fail,
                json!({ "error": "certificate has no witnesses" }),
            ));
        };
        c.witnesses[x].word.push(1);
        let (i, j) = (c.witnesses[x].i, c.witnesses[x].j);
        let v = check_certificate(&c)?;
        let ok = v.failure == Some(Failure::CommutatorMismatch { i, j });
        Ok::<_, SuiteError>((
            Status::from_bool(ok),
            json!({ "i": i, "j": j, "verdict": v }),
        ))
    })?;
    rep.check("corrupt-dangling-j", ANCHOR_BNS, || {
        let mut c = cert.clone();
        let Some(w) = c.witnesses.first_mut() else {
            return Ok((
                Status::Fail,
                json!({ "error": "certificate has no witnesses" }),
            ));
        };
        w.j = c.elements.len() + 1;
        let ok = matches!(check_certificate(&c), Err(CertError::Malformed(_)));
        Ok::<_, SuiteError>((
            Status::from_bool(ok),
            json!({ "verdict": verdict_value(&c) }),
        ))
    })?;
    Ok(rep)
}

pub fn depth_table(p: &Params) -> Result<SuiteReport> {
    let n = p.n.unwrap_or(5);
    let ks = ks(p, &[2, 3]);
    let trials = p.trials.unwrap_or(20);
    need(n >= 3, || format!("depth-table needs n ≥ 3, got {n}"))?;
    for &k in &ks {
        need(k >= 2 && k + 2 <= n, || {
            format!("depth-table needs 2 ≤ k ≤ n − 2, got n = {n}, k = {k}")
        })?;
    }
    let mut r = rng(p);
    let mut rep = SuiteReport::new(
        "depth-table",
        json!({ "n": n, "k": ks, "trials": trials, "seed": p.seed.unwrap_or(0) }),
    );
    let depth_row = |rows: &[(String, FreeAutomorphism)], k: usize| -> Result<(Status, Value)> {
        let mut bad = Vec::new();
        for (name, g) in rows {
            let d = johnson_depth(g, k + 1)?;
            if d != Depth::Exact(k) {
                bad.push(json!({ "element": name, "depth": d }));
            }
        }
        Ok((
            Status::from_bool(bad.is_empty()),
            json!({ "expected": k, "checked": rows.len(), "mismatches": bad }),
        ))
    };
    let gens = ia_generators(n)?;
    rep.check("depth-magnus-generators", ANCHOR_DEPTH, || {
        depth_row(&gens, 1)
    })?;
    for k in ks {
        let ts = (0..trials)
            .map(|_| {
                let i = r.gen_range(1..=n);
                let omega = sample_omega(&mut r, n, i, k + 1);
                Ok((
                    format!("T_{{{i},{}}}", dotted(&omega)),
                    make_t(i, &omega, n)?,
                ))
            })
            .collect::<Result<Vec<_>>>()?;
        rep.check(format!("depth-t k={k}"), ANCHOR_DEPTH, || depth_row(&ts, k))?;
        let ss = sequences(3, k)
            .into_iter()
            .map(|mu| Ok((format!("S_{}", dotted(&mu)), s_literal(&mu, n)?)))
            .collect::<Result<Vec<_>>>()?;
        rep.check(format!("depth-s k={k}"), ANCHOR_DEPTH, || depth_row(&ss, k))?;
    }
    Ok(rep)
}

/// Depth of each automorphism up to `cutoff`, with its Johnson image when exact.
pub fn depth_of(g: &FreeAutomorphism, cutoff: usize) -> Result<Value> {
    let d = johnson_depth(g, cutoff)?;
    let image = match d {
        Depth::Exact(k) if k >= 1 => Some(johnson_image(g, k)?.to_json()),
        _ => None,
    };
    Ok(json!({ "automorphism": g.to_string(), "depth": d, "johnson_image": image }))
}
