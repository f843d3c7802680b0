//! One line per acceptance criterion; the test fails if any criterion does.

mod common;

use std::sync::Arc;
use std::time::{Duration, Instant};

use common::*;
use gradtilt::algebra::GradedAlgebra;
use gradtilt::algiso::algebra_isomorphism;
use gradtilt::arquiver::ar_quiver;
use gradtilt::bimodule::{verify_m_is_dual_gamma, verify_m_syzygy_sequence, verify_m_tensor_t};
use gradtilt::constructions::*;
use gradtilt::decompose::decompose;
use gradtilt::hom::find_isomorphism;
use gradtilt::identities::{verify_hom_decomposition, verify_preprojective_identities};
use gradtilt::module::{GradedModule, Grading};
use gradtilt::resolution::{cosyzygy, strip_projectives, syzygy};
use gradtilt::structure::{gorenstein_parameter, is_self_injective, is_symmetric, GlobalDimension};
use gradtilt::tilting::{build_t, self_extensions, verify_gamma_findim};

type Outcome = Result<(), String>;

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Outcome {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn within(start: Instant, limit: Duration, what: &str) -> Outcome {
    let t = start.elapsed();
    ensure(t < limit, || format!("{what} took {t:?}, limit {limit:?}"))
}

fn gamma(a: &Arc<GradedAlgebra>) -> Arc<GradedAlgebra> {
    build_t(a).unwrap().gamma_algebra()
}

fn criterion_1() -> Outcome {
    let start = Instant::now();
    for n in [2usize, 3] {
        let g = gamma(&truncated_polynomial(Q, n).unwrap());
        ensure(g.dim() == n * (n + 1) / 2, || format!("n={n}: dim Γ = {}", g.dim()))?;
        let ut = upper_triangular(Q, n).unwrap();
        let iso = algebra_isomorphism(&g, &ut, 0);
        ensure(iso.is_found(), || format!("n={n}: Γ vs upper triangular: {}", iso.describe()))?;
    }
    within(start, Duration::from_secs(1), "criterion 1")
}

/// Vertices can be ordered so that the only arrows are `mult` parallel
/// arrows between consecutive vertices, all pointing the same way.
fn is_linear_with_multiplicity(quiver: &[Vec<usize>], mult: usize) -> bool {
    let n = quiver.len();
    let nonzero: Vec<(usize, usize)> = (0..n)
        .flat_map(|i| (0..n).map(move |j| (i, j)))
        .filter(|&(i, j)| quiver[i][j] != 0)
        .collect();
    if n == 0 || nonzero.len() != n - 1 || nonzero.iter().any(|&(i, j)| quiver[i][j] != mult) {
        return false;
    }
    let out = |i: usize| nonzero.iter().filter(|e| e.0 == i).count();
    let inn = |i: usize| nonzero.iter().filter(|e| e.1 == i).count();
    let Some(mut cur) = (0..n).find(|&i| inn(i) == 0) else {
        return false;
    };
    let mut seen = 1;
    while out(cur) == 1 {
        cur = nonzero.iter().find(|e| e.0 == cur).unwrap().1;
        seen += 1;
        if seen > n {
            return false;
        }
    }
    seen == n
}

fn criterion_2() -> Outcome {
    let start = Instant::now();
    for n in [2usize, 3] {
        let a = square_zero_polynomial(Q, n).unwrap();
        let ell = n;
        let g = gamma(&a);
        let quiver = g.gabriel_quiver();
        ensure(is_linear_with_multiplicity(&quiver, n), || format!("n={n}: Gabriel quiver {quiver:?}"))?;
        // Σ_{0≤p≤q<ℓ} dim A_{q−p}
        let dims = a.dims_by_degree();
        let expected: usize = (0..ell)
            .map(|d| (ell - d) * dims.get(&(d as i64)).copied().unwrap_or(0))
            .sum();
        ensure(g.dim() == expected, || format!("n={n}: dim Γ = {}, formula {expected}", g.dim()))?;
    }
    within(start, Duration::from_secs(5), "criterion 2")
}

fn criterion_3() -> Outcome {
    let start = Instant::now();
    for n in 1..=3 {
        let a = te_a(n);
        let lambda = path_algebra_a(Q, n).unwrap().degree_zero_part().0;
        ensure(is_symmetric(&a), || format!("TE(KA{n}) not symmetric"))?;
        let ell = gorenstein_parameter(&a).unwrap();
        ensure(ell == Some(1), || format!("TE(KA{n}): Gorenstein parameter {ell:?}"))?;
        let g = gamma(&a);
        let iso = algebra_isomorphism(&g, &lambda, 0);
        ensure(iso.is_found(), || format!("TE(KA{n}): Γ vs Λ: {}", iso.describe()))?;
    }
    within(start, Duration::from_secs(5), "criterion 3")
}

fn criterion_4() -> Outcome {
    let mut cases: Vec<(String, Arc<GradedAlgebra>, i64)> = Vec::new();
    for n in 1..=3 {
        cases.push((format!("TE(KA{n})"), te_a(n), 1));
    }
    for n in 1..=4 {
        cases.push((format!("K[x]/(x^{})", n + 1), truncated_polynomial(Q, n).unwrap(), n as i64));
    }
    for n in 1..=3 {
        cases.push((format!("K[x1..x{n}]/(xi^2)"), square_zero_polynomial(Q, n).unwrap(), n as i64));
    }
    for (name, a, expected) in cases {
        let ell = gorenstein_parameter(&a).unwrap();
        ensure(ell == Some(expected), || format!("{name}: {ell:?}, expected {expected}"))?;
    }
    Ok(())
}

fn criterion_5() -> Outcome {
    for n in 2..=4 {
        let start = Instant::now();
        ensure(is_self_injective(&pi_a(n)).is_some(), || format!("Π(A{n}) not self-injective"))?;
        within(start, Duration::from_secs(10), &format!("Π(A{n})"))?;
        let ka = path_algebra_a(Q, n).unwrap();
        ensure(is_self_injective(&ka).is_none(), || format!("KA{n} reported self-injective"))?;
    }
    Ok(())
}

fn criterion_6() -> Outcome {
    for (name, a) in examples() {
        let t = build_t(&a).map_err(|e| format!("{name}: {e}"))?;
        let w = self_extensions(&t.stripped_modules(), 6).map_err(|e| format!("{name}: {e}"))?;
        ensure(w.is_empty(), || format!("{name}: nonzero {w:?}"))?;
    }
    Ok(())
}

/// The ideal (x^i)/(x³) of K[x]/(x³).
fn cubic_ideal(a: &Arc<GradedAlgebra>, i: usize) -> GradedModule {
    let reg = GradedModule::regular(a);
    let f = a.field();
    let mut v = vec![f.zero(); reg.dim()];
    let k = (0..reg.dim()).find(|&k| reg.slot(k).0 == i as i64).unwrap();
    v[k] = f.one();
    reg.submodule(&reg.generated_submodule(&[v])).0
}

fn criterion_7() -> Outcome {
    let start = Instant::now();
    let a = truncated_polynomial(Q, 2).unwrap();
    let q = ar_quiver(&a, -1, 3, 0).map_err(|e| e.to_string())?;
    let golden = include_str!("golden/ar1_cubic.dot");
    ensure(q.to_dot() == golden, || format!("DOT differs:\n{}", q.to_dot()))?;
    ensure(q.classes.len() == 2, || format!("{} classes", q.classes.len()))?;
    for (c, i) in q.classes.iter().zip([1, 2]) {
        let x = cubic_ideal(&a, i);
        let found = find_isomorphism(&c.representative, &x, 0).map_err(|e| e.to_string())?;
        ensure(found.is_found(), || format!("{} is not X^{i}", c.name))?;
    }
    let label = |k: usize| q.vertices[k].label.clone();
    let mut solid: Vec<(String, String, usize)> =
        q.solid_arrows.iter().map(|&(s, t, m)| (label(s), label(t), m)).collect();
    let mut expected = Vec::new();
    for j in -1..=3 {
        expected.push((format!("X2({j})"), format!("X1({j})"), 1));
        if j < 3 {
            expected.push((format!("X1({j})"), format!("X2({})", j + 1), 1));
        }
    }
    solid.sort();
    expected.sort();
    ensure(solid == expected, || format!("arrows {solid:?}"))?;
    for &(s, t) in &q.tau_arrows {
        let (vs, vt) = (&q.vertices[s], &q.vertices[t]);
        ensure(vs.class == vt.class && vt.shift == vs.shift - 1, || format!("τ {} -> {}", vs.label, vt.label))?;
    }
    ensure(q.tau_arrows.len() == 8, || format!("{} τ arrows", q.tau_arrows.len()))?;
    ensure(q.mesh_violations().is_empty(), || format!("{:?}", q.mesh_violations()))?;
    within(start, Duration::from_secs(2), "criterion 7")
}

fn criterion_8() -> Outcome {
    let a = truncated_polynomial(Q, 2).unwrap();
    let mut mods = Vec::new();
    for i in [1, 2] {
        let x = cubic_ideal(&a, i);
        mods.push((format!("X{i}(1)"), x.shift(1)));
        mods.push((format!("X{i}"), x));
    }
    for (nx, x) in &mods {
        for (ny, y) in &mods {
            let d = verify_hom_decomposition(x, y, 2, true).map_err(|e| e.to_string())?;
            ensure(d.holds(), || format!("{nx}, {ny}: {} vs {:?}", d.lhs, d.terms))?;
        }
    }
    Ok(())
}

fn bimodule_examples() -> Vec<(String, Arc<GradedAlgebra>)> {
    vec![
        ("K[x]/(x^3)".into(), truncated_polynomial(Q, 2).unwrap()),
        ("K[x,y]/(x^2,y^2)".into(), square_zero_polynomial(Q, 2).unwrap()),
        ("TE(KA2)".into(), te_a(2)),
    ]
}

fn criterion_9() -> Outcome {
    for (name, a) in bimodule_examples() {
        let s = verify_m_syzygy_sequence(&a, 0).map_err(|e| format!("{name}: {e}"))?;
        ensure(s.holds(), || format!("{name}: {s:?}"))?;
        let t = verify_m_tensor_t(&a, 0).map_err(|e| format!("{name}: {e}"))?;
        ensure(t.holds(), || format!("{name}: {t:?}"))?;
    }
    Ok(())
}

fn criterion_10() -> Outcome {
    for (name, a) in bimodule_examples() {
        let d = verify_m_is_dual_gamma(&a, 0).map_err(|e| format!("{name}: {e}"))?;
        ensure(d.holds(), || format!("{name}: {d:?}"))?;
    }
    Ok(())
}

fn criterion_11() -> Outcome {
    let start = Instant::now();
    for n in [2, 3] {
        let r = verify_preprojective_identities(&linear_quiver(n), Q, 0).map_err(|e| e.to_string())?;
        ensure(r.holds(), || format!("A{n}: {r:?}"))?;
        if n == 2 {
            ensure((r.gamma_dim, r.stable_end_dim) == (1, 1), || format!("A2: {r:?}"))?;
        }
        if n == 3 {
            ensure(r.dim_pi == 10, || format!("dim Π(A3) = {}", r.dim_pi))?;
        }
    }
    within(start, Duration::from_secs(30), "criterion 11")
}

fn criterion_12() -> Outcome {
    let mut checked = 0;
    for (name, a) in examples() {
        let t = build_t(&a).map_err(|e| format!("{name}: {e}"))?;
        let r = verify_gamma_findim(&t, 32);
        if let GlobalDimension::Finite(_) = r.degree_zero {
            checked += 1;
            ensure(matches!(r.gamma, Some(GlobalDimension::Finite(_))), || format!("{name}: {r:?}"))?;
        }
    }
    ensure(checked > 0, || "no example with finite gl.dim A_0".into())
}

fn reassemble(pieces: &[(GradedModule, usize)], a: &Arc<GradedAlgebra>) -> GradedModule {
    let parts: Vec<GradedModule> = pieces
        .iter()
        .flat_map(|(m, k)| std::iter::repeat(m.clone()).take(*k))
        .collect();
    GradedModule::direct_sum(a, Grading::Z, &parts).0
}

fn isomorphic(x: &GradedModule, y: &GradedModule) -> Result<bool, String> {
    if x.dim() != y.dim() {
        return Ok(false);
    }
    if x.is_zero() {
        return Ok(true);
    }
    Ok(find_isomorphism(x, y, 0).map_err(|e| e.to_string())?.is_found())
}

fn criterion_13() -> Outcome {
    let start = Instant::now();
    for (ai, (name, a)) in examples().into_iter().enumerate() {
        let mut rng = rng(1000 + ai as u64);
        let mods: Vec<GradedModule> = (0..50).map(|_| random_module(&a, 12, &mut rng)).collect();
        for (k, x) in mods.iter().enumerate() {
            let y = &mods[(k + 1) % mods.len()];
            let order = 1 + (k % 3) as i64;
            for stable in [false, true] {
                let d = verify_hom_decomposition(x, y, order, stable).map_err(|e| format!("{name}: {e}"))?;
                ensure(d.holds(), || format!("{name} #{k} a={order} stable={stable}: {d:?}"))?;
            }
            let dd = x.dual().dual();
            ensure(isomorphic(&dd, x)?, || format!("{name} #{k}: DDX ≇ X"))?;
            let stripped = strip_projectives(x).0;
            let back = cosyzygy(&syzygy(x)).map_err(|e| format!("{name}: {e}"))?;
            ensure(isomorphic(&back, &stripped)?, || format!("{name} #{k}: Ω⁻¹ΩX ≇ X"))?;
            let pieces = decompose(x, k as u64).map_err(|e| format!("{name} #{k}: {e}"))?;
            ensure(isomorphic(&reassemble(&pieces, &a), x)?, || format!("{name} #{k}: reassembly"))?;
        }
    }
    within(start, Duration::from_secs(60), "criterion 13")
}

fn main() {
    let criteria: [(&str, fn() -> Outcome); 13] = [
        ("Γ of K[x]/(x^{n+1}) is upper triangular", criterion_1),
        ("Γ of K[x_i]/(x_i^2) is the Beilinson algebra of a linear quiver", criterion_2),
        ("trivial extensions: symmetric, ℓ = 1, Γ ≅ Λ", criterion_3),
        ("Gorenstein parameters", criterion_4),
        ("Π(A_n) self-injective, KA_n not", criterion_5),
        ("no self-extensions of T̲ for 1 ≤ |i| ≤ 6", criterion_6),
        ("AR quiver of K[x]/(x^3) on window -1..3", criterion_7),
        ("stable Hom identity for F_2 on K[x]/(x^3)", criterion_8),
        ("M → ⊕A(i) → T̲(ℓ) exact and M ⊗_Γ T̲ ≅ M", criterion_9),
        ("M ≅ DΓ as bimodules", criterion_10),
        ("preprojective layers and stable endomorphisms", criterion_11),
        ("gl.dim Γ finite when gl.dim A_0 is", criterion_12),
        ("random-module identities", criterion_13),
    ];
    let mut failed = Vec::new();
    for (k, (desc, f)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let r = f();
        let t = start.elapsed();
        match &r {
            Ok(()) => println!("PASS criterion {:>2}: {desc} ({t:.2?})", k + 1),
            Err(e) => {
                println!("FAIL criterion {:>2}: {desc} ({t:.2?}): {e}", k + 1);
                failed.push(k + 1);
            }
        }
    }
    if !failed.is_empty() {
        eprintln!("failed criteria: {failed:?}");
        std::process::exit(1);
    }
}
