//! The verification suites behind `gradtilt verify`.

use std::sync::Arc;

use serde_json::json;

use gradtilt::algebra::GradedAlgebra;
use gradtilt::bimodule::{build_m, verify_m_is_dual_gamma, verify_m_syzygy_sequence, verify_m_tensor_t};
use gradtilt::identities::{verify_hom_decomposition, verify_preprojective_identities};
use gradtilt::module::GradedModule;
use gradtilt::quiver::Quiver;
use gradtilt::structure::{gorenstein_parameter, is_self_injective, is_symmetric, GlobalDimension};
use gradtilt::tilting::{
    build_t, self_extensions, verify_dual_regular, verify_gamma_findim, verify_gamma_is_beilinson,
    verify_projective_orthogonality,
};
use gradtilt::Error;

use crate::report::Check;

pub const SUITES: [&str; 5] = ["tilting", "bimodule", "cyclic", "preprojective", "all"];

pub struct Context<'a> {
    pub name: &'a str,
    pub algebra: &'a Arc<GradedAlgebra>,
    pub preprojective_of: Option<&'a Quiver>,
    pub seed: u64,
    pub cap: usize,
}

const TILTING: [&str; 7] = [
    "tilting.summands",
    "tilting.stable_end",
    "tilting.no_self_ext",
    "tilting.gamma_beilinson",
    "tilting.gamma_findim",
    "tilting.projective_orthogonality",
    "tilting.dual_regular",
];

pub fn tilting(cx: &Context) -> Vec<Check> {
    let name = cx.name;
    let a = cx.algebra;
    if is_self_injective(a).is_none() || !a.is_positively_graded() {
        return TILTING
            .iter()
            .map(|c| Check::skipped(c, name, "algebra is not positively graded self-injective"))
            .collect();
    }
    let data = match build_t(a) {
        Ok(d) => d,
        Err(e) => {
            return vec![Check::new(TILTING[0], name, false, json!({ "error": e.to_string() }))];
        }
    };
    let mut out = Vec::new();
    let summands: Vec<_> = data
        .summands
        .iter()
        .map(|s| json!({ "summand": s.label(a), "dim": s.module.dim(), "projective": s.projective }))
        .collect();
    let last_projective = (0..a.num_vertices()).all(|v| {
        data.summands
            .iter()
            .filter(|s| s.vertex == v)
            .last()
            .is_some_and(|s| s.projective)
    });
    out.push(Check::new(TILTING[0], name, last_projective, json!({ "summands": summands, "cutoff": data.cutoff })));
    out.push(Check::run(TILTING[1], name, || {
        let ok = data.stable_equals_plain()?;
        Ok((ok, json!({ "gamma_dim": data.gamma_algebra().dim() })))
    }));
    out.push(Check::run(TILTING[2], name, || {
        let w = self_extensions(&data.stripped_modules(), 6)?;
        Ok((w.is_empty(), json!({ "range": 6, "nonzero": w })))
    }));
    out.push(match verify_gamma_is_beilinson(&data) {
        Ok(c) => Check::new(
            TILTING[3],
            name,
            c.verified,
            json!({
                "ell": c.ell,
                "beilinson_dim": c.beilinson.dim(),
                "gamma_dim": data.gamma_algebra().dim(),
                "on_the_nose": c.on_the_nose,
            }),
        ),
        Err(Error::NoGorensteinParameter) => Check::skipped(TILTING[3], name, "no Gorenstein parameter"),
        Err(e) => Check::new(TILTING[3], name, false, json!({ "error": e.to_string() })),
    });
    let fin = verify_gamma_findim(&data, cx.cap);
    out.push(match fin.degree_zero {
        GlobalDimension::Finite(_) => Check::new(TILTING[4], name, fin.holds(), json!(fin)),
        GlobalDimension::AtLeast(_) => Check::skipped(TILTING[4], name, "A_0 has infinite global dimension"),
    });
    out.push(Check::run(TILTING[5], name, || {
        Ok((verify_projective_orthogonality(&data, 3)?, json!({ "extra_shifts": 3 })))
    }));
    let ell = gorenstein_parameter(a).ok().flatten();
    out.push(match ell {
        Some(l) if is_symmetric(a) => Check::run(TILTING[6], name, || {
            Ok((verify_dual_regular(a, l, cx.seed)?, json!({ "ell": l })))
        }),
        _ => Check::skipped(TILTING[6], name, "algebra is not symmetric with a Gorenstein parameter"),
    });
    out
}

const BIMODULE: [&str; 4] = [
    "bimodule.actions_commute",
    "bimodule.syzygy_sequence",
    "bimodule.tensor",
    "bimodule.dual_gamma",
];

pub fn bimodule(cx: &Context) -> Vec<Check> {
    let name = cx.name;
    let a = cx.algebra;
    let ell = if a.is_positively_graded() && is_self_injective(a).is_some() {
        gorenstein_parameter(a).ok().flatten()
    } else {
        None
    };
    let Some(ell) = ell.filter(|&l| l >= 1) else {
        return BIMODULE
            .iter()
            .map(|c| Check::skipped(c, name, "needs a Gorenstein parameter of at least 1"))
            .collect();
    };
    let mut out = Vec::new();
    out.push(Check::run(BIMODULE[0], name, || {
        let b = build_m(a)?;
        Ok((b.actions_commute(), json!({ "ell": ell, "dim_m": b.m.dim(), "dim_gamma": b.gamma.dim() })))
    }));
    out.push(Check::run(BIMODULE[1], name, || {
        let r = verify_m_syzygy_sequence(a, cx.seed)?;
        Ok((r.holds(), json!(r)))
    }));
    out.push(Check::run(BIMODULE[2], name, || {
        let r = verify_m_tensor_t(a, cx.seed)?;
        Ok((r.holds(), json!(r)))
    }));
    out.push(if is_symmetric(a) {
        Check::run(BIMODULE[3], name, || {
            let r = verify_m_is_dual_gamma(a, cx.seed)?;
            Ok((r.holds(), json!(r)))
        })
    } else {
        Check::skipped(BIMODULE[3], name, "algebra is not symmetric")
    });
    out
}

/// Simples and, when available, the summands of T̲, each with its shift by 1.
fn cyclic_test_modules(a: &Arc<GradedAlgebra>) -> Vec<(String, GradedModule)> {
    let mut base: Vec<(String, GradedModule)> = (0..a.num_vertices())
        .map(|v| (format!("S{}", a.vertex_labels()[v]), GradedModule::simple(a, v, 0)))
        .collect();
    if let Ok(data) = build_t(a) {
        for &k in &data.stripped {
            base.push((data.summands[k].label(a), data.summands[k].module.clone()));
        }
    }
    let mut out = Vec::new();
    for (n, m) in base {
        out.push((format!("{n}(1)"), m.shift(1)));
        out.push((n, m));
    }
    out
}

pub fn cyclic(cx: &Context) -> Vec<Check> {
    let name = cx.name;
    let a = cx.algebra;
    let modules = cyclic_test_modules(a);
    let self_injective = is_self_injective(a).is_some();
    let mut out = Vec::new();
    for stable in [false, true] {
        let check = if stable { "cyclic.stable_hom_decomposition" } else { "cyclic.hom_decomposition" };
        if stable && !self_injective {
            out.push(Check::skipped(check, name, "stable categories need a self-injective algebra"));
            continue;
        }
        out.push(Check::run(check, name, || {
            let mut failures = Vec::new();
            let mut count = 0;
            for order in [1, 2] {
                for (nx, x) in &modules {
                    for (ny, y) in &modules {
                        let d = verify_hom_decomposition(x, y, order, stable)?;
                        count += 1;
                        if !d.holds() {
                            failures.push(json!({ "x": nx, "y": ny, "a": order, "lhs": d.lhs, "rhs": d.rhs() }));
                        }
                    }
                }
            }
            Ok((failures.is_empty(), json!({ "pairs": count, "failures": failures })))
        }));
    }
    out
}

pub fn preprojective(cx: &Context) -> Vec<Check> {
    let check = "preprojective.identities";
    let Some(q) = cx.preprojective_of else {
        return vec![Check::skipped(check, cx.name, "algebra is not given as preprojective_of")];
    };
    vec![Check::run(check, cx.name, || {
        let r = verify_preprojective_identities(q, cx.algebra.field(), cx.seed)?;
        Ok((r.holds(), json!(r)))
    })]
}

pub fn run(suite: &str, cx: &Context) -> Option<Vec<Check>> {
    Some(match suite {
        "tilting" => tilting(cx),
        "bimodule" => bimodule(cx),
        "cyclic" => cyclic(cx),
        "preprojective" => preprojective(cx),
        "all" => {
            let mut v = tilting(cx);
            v.extend(bimodule(cx));
            v.extend(cyclic(cx));
            v.extend(preprojective(cx));
            v
        }
        _ => return None,
    })
}
