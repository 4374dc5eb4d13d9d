use std::collections::BTreeMap;
use std::fs;
use std::path::Path;

use serde_json::{json, Map, Value};
use sha2::{Digest, Sha256};
use weakhopf::emcat::{
    base_monoid, coherence_check, frobenius_failures, module_tensor, r_bimodule_actions,
    unit_constraints, BaseMonoid, RightModule, FROBENIUS_LAWS,
};
use weakhopf::hopf::{check_left_hopf, idempotent_e_t, idempotent_f, solve_antipode, whm_report};
use weakhopf::lincore::{compose, rank};
use weakhopf::wbm::{check_all, check_tau_axioms, sqcap};
use weakhopf::zoo::{corpus, mutate, super_exterior, MutationTarget, Source};
use weakhopf::WeakBimonoid;

use crate::format::{AlgebraSpec, InputError};
use crate::report::{matrix_value, Report};

pub struct Loaded {
    pub spec: AlgebraSpec,
    pub bimonoid: WeakBimonoid,
    pub modules: Vec<(String, RightModule)>,
    pub digest: String,
}

pub fn load(path: &Path) -> Result<Loaded, InputError> {
    let bytes = fs::read(path).map_err(|source| InputError::Io {
        path: path.display().to_string(),
        source,
    })?;
    let digest = Sha256::digest(&bytes)
        .iter()
        .map(|b| format!("{b:02x}"))
        .collect();
    let text = String::from_utf8(bytes).map_err(|e| InputError::Syntax {
        line: 0,
        column: 0,
        message: e.to_string(),
    })?;
    let spec = AlgebraSpec::parse(&text)?;
    let (bimonoid, modules) = spec.build()?;
    Ok(Loaded {
        spec,
        bimonoid,
        modules,
        digest,
    })
}

fn sample_pairs(dims: &[usize]) -> Vec<(usize, usize)> {
    dims.iter()
        .flat_map(|&x| dims.iter().map(move |&y| (x, y)))
        .collect()
}

/// Monoid, comonoid and compatibility laws, then the opmonoidal conditions.
/// Returns whether every check held.
fn axioms_section(r: &mut Report, b: &WeakBimonoid, dims: &[usize]) -> bool {
    let ax = check_all(b);
    r.add_axioms("axioms", &ax);
    let mut ok = ax.all_hold();
    if b.is_symmetric() {
        match check_tau_axioms(b, dims) {
            Ok(tau) => {
                ok &= tau.all_hold();
                r.add_axioms("tau", &tau);
            }
            Err(e) => {
                ok = false;
                r.error(format!("tau: {e}"));
            }
        }
    } else {
        r.skip("tau", "custom braid");
    }
    ok
}

fn base_section(r: &mut Report, b: &WeakBimonoid) -> Option<BaseMonoid> {
    if !b.is_symmetric() {
        r.skip("base", "custom braid");
        return None;
    }
    match base_monoid(b) {
        Ok(base) => {
            let failed = frobenius_failures(&base);
            for law in FROBENIUS_LAWS {
                r.add_flag("base", law, !failed.contains(&law));
            }
            r.derive(
                "base",
                json!({
                    "r_dim": base.r_dim,
                    "sqcap": matrix_value(&sqcap(b).expect("split above")),
                    "p": matrix_value(&base.p),
                    "i": matrix_value(&base.i),
                    "mu": matrix_value(&base.mu_r),
                    "eta": matrix_value(&base.eta_r),
                    "delta": matrix_value(&base.delta_r),
                    "eps": matrix_value(&base.eps_r),
                }),
            );
            Some(base)
        }
        Err(e) => {
            r.error(format!("base: {e}"));
            None
        }
    }
}

fn family(name: &str) -> &str {
    name.split('[').next().unwrap_or(name)
}

fn modules_section(
    r: &mut Report,
    b: &WeakBimonoid,
    base: &BaseMonoid,
    declared: &[(String, RightModule)],
) {
    let mut all = vec![("base".to_string(), base.module())];
    all.extend(declared.iter().cloned());
    all.push(("regular".to_string(), RightModule::regular(b)));
    let mods: Vec<RightModule> = all.iter().map(|(_, m)| m.clone()).collect();
    match coherence_check(&mods, b) {
        Ok(rep) => {
            let mut families: Vec<(String, bool, usize)> = Vec::new();
            for c in &rep.entries {
                let f = family(&c.name);
                match families.iter_mut().find(|(n, _, _)| n == f) {
                    Some(slot) => {
                        slot.1 &= c.holds;
                        slot.2 += 1;
                    }
                    None => families.push((f.to_string(), c.holds, 1)),
                }
            }
            for (name, holds, n) in families {
                r.add_family("modules", &name, holds, n);
            }
        }
        Err(e) => r.error(format!("modules: {e}")),
    }
    for (name, m) in &all {
        let ok = r_bimodule_actions(m, b, base).is_ok();
        r.add_flag("modules", &format!("r_bimodule[{name}]"), ok);
    }
    let carriers: Map<String, Value> = all
        .iter()
        .map(|(n, m)| (n.clone(), json!(m.carrier())))
        .collect();
    r.derive("modules", Value::Object(carriers));
}

fn hopf_section(r: &mut Report, b: &WeakBimonoid, dims: &[usize], require_hopf: bool, ranks: bool) {
    let res = match solve_antipode(b) {
        Ok(res) => res,
        Err(e) => {
            r.error(format!("antipode: {e}"));
            return;
        }
    };
    let opt = |m: &Option<weakhopf::LinMap>| m.as_ref().map_or(json!("none"), matrix_value);
    r.derive(
        "antipode",
        json!({
            "nu": opt(&res.nu),
            "unique": res.unique,
            "invertible": res.invertible,
            "nu_inverse": opt(&res.nu_inverse),
            "nu_op": opt(&res.nu_op),
        }),
    );
    r.add_axioms("hopf", &res.equations_report);
    if let Some(nu) = &res.nu {
        for (x, y) in sample_pairs(dims) {
            match whm_report(b, nu, x, y) {
                Ok(rep) => r.add_axioms("hopf", &rep),
                Err(e) => r.error(format!("weak Hopf identities at X={x}, Y={y}: {e}")),
            }
        }
    }
    match check_left_hopf(b) {
        Ok((rep, v)) => {
            let mut rep = rep;
            rep.entries
                .retain(|c| c.name.starts_with("left_hopf.") && c.name != "left_hopf.nu_op_exists");
            r.add_axioms("hopf", &rep);
            r.derive(
                "verdicts",
                json!({
                    "right_weak_hopf": v.right_weak_hopf,
                    "left_weak_hopf": v.left_weak_hopf,
                    "antipode_invertible": v.antipode_invertible,
                }),
            );
            if require_hopf {
                r.add_flag("hopf", "hopf.required", v.antipode_invertible);
            }
        }
        Err(e) => r.error(format!("left Hopf: {e}")),
    }
    if ranks {
        let mut m = Map::new();
        for (x, y) in sample_pairs(dims) {
            let tag = format!("[X={x},Y={y}]");
            match idempotent_e_t(b, x, y) {
                Ok(e) => m.insert(format!("E{tag}"), json!(rank(&e))),
                Err(e) => m.insert(format!("E{tag}"), json!(e.to_string())),
            };
            match idempotent_f(b, x, y) {
                Ok(f) => m.insert(format!("F{tag}"), json!(rank(&f))),
                Err(e) => m.insert(format!("F{tag}"), json!(e.to_string())),
            };
        }
        r.derive("ranks", Value::Object(m));
    }
}

pub fn check(l: &Loaded, dims: &[usize]) -> Report {
    let mut r = Report::new("check", l.digest.clone());
    axioms_section(&mut r, &l.bimonoid, dims);
    r
}

pub fn base(l: &Loaded, dims: &[usize]) -> Report {
    let mut r = Report::new("base", l.digest.clone());
    if axioms_section(&mut r, &l.bimonoid, dims) {
        base_section(&mut r, &l.bimonoid);
    } else {
        r.skip("base", "axioms fail");
    }
    r
}

pub fn antipode(l: &Loaded, dims: &[usize], require_hopf: bool) -> Report {
    let mut r = Report::new("antipode", l.digest.clone());
    if axioms_section(&mut r, &l.bimonoid, dims) {
        hopf_section(&mut r, &l.bimonoid, dims, require_hopf, false);
    } else {
        r.skip("hopf", "axioms fail");
    }
    r
}

pub fn report(l: &Loaded, dims: &[usize], require_hopf: bool) -> Report {
    let mut r = Report::new("report", l.digest.clone());
    let b = &l.bimonoid;
    if !axioms_section(&mut r, b, dims) {
        for s in ["base", "modules", "hopf"] {
            r.skip(s, "axioms fail");
        }
        return r;
    }
    match base_section(&mut r, b) {
        Some(base) => modules_section(&mut r, b, &base, &l.modules),
        None if b.is_symmetric() => r.skip("modules", "no base monoid"),
        None => r.skip("modules", "custom braid"),
    }
    hopf_section(&mut r, b, dims, require_hopf, true);
    r
}

/// `A□C` for two modules named in the file, or the built-in `regular` and
/// `base`.
pub fn module_tensor_cmd(
    l: &Loaded,
    a: &str,
    c: &str,
    dims: &[usize],
) -> Result<Report, InputError> {
    let b = &l.bimonoid;
    let mut r = Report::new("module-tensor", l.digest.clone());
    if !b.is_symmetric() {
        return Err(InputError::Usage(
            "module-tensor needs the symmetric swap, but the input sets a custom braid".into(),
        ));
    }
    let base = if axioms_section(&mut r, b, dims) {
        base_section(&mut r, b)
    } else {
        None
    };
    let resolve = |name: &str| -> Result<Option<RightModule>, InputError> {
        match name {
            "regular" => Ok(Some(RightModule::regular(b))),
            "base" => Ok(base.as_ref().map(BaseMonoid::module)),
            _ => l
                .modules
                .iter()
                .find(|(n, _)| n == name)
                .map(|(_, m)| Some(m.clone()))
                .ok_or_else(|| InputError::Usage(format!("no module named {name:?} in the input"))),
        }
    };
    let (ma, mc) = (resolve(a)?, resolve(c)?);
    let (Some(ma), Some(mc)) = (ma, mc) else {
        r.skip("tensor", "no base monoid");
        return Ok(r);
    };
    match module_tensor(&ma, &mc, b) {
        Ok(t) => {
            let ip = compose(&t.i, &t.p).expect("signatures");
            let pi = compose(&t.p, &t.i).expect("signatures");
            r.add_flag("tensor", "E.idempotent", true);
            r.add_flag("tensor", "split.section_retraction", ip == t.e);
            r.add_flag("tensor", "split.retraction_section", pi.is_identity());
            for (name, m) in [(a, &ma), (c, &mc)] {
                let ok = unit_constraints(m, b).is_ok();
                r.add_flag("tensor", &format!("unit_constraints[{name}]"), ok);
            }
            r.derive(
                "tensor",
                json!({
                    "left": a,
                    "right": c,
                    "rank": t.p.cod(),
                    "e": matrix_value(&t.e),
                    "p": matrix_value(&t.p),
                    "i": matrix_value(&t.i),
                    "action": matrix_value(t.product.action()),
                }),
            );
        }
        Err(e) => r.error(format!("tensor: {e}")),
    }
    Ok(r)
}

/// Writes every corpus algebra, and the graded exterior algebra, as
/// `<name>.json` under `dir`.
pub fn write_corpus(dir: &Path) -> Result<Vec<String>, InputError> {
    let io = |source| InputError::Io {
        path: dir.display().to_string(),
        source,
    };
    fs::create_dir_all(dir).map_err(io)?;
    let mut written = Vec::new();
    for e in corpus() {
        let modules = e.modules().expect("corpus modules");
        let (source, objects) = match &e.source {
            Source::Groupoid(g) => ("groupoid", g.objects()),
            Source::Monoid(_) => ("monoid", 1),
        };
        let meta = BTreeMap::from([
            ("name".to_string(), e.name.to_string()),
            ("source".to_string(), source.to_string()),
            ("objects".to_string(), objects.to_string()),
        ]);
        let spec = AlgebraSpec::from_parts(&e.bimonoid, &modules[1..2], meta);
        let path = dir.join(format!("{}.json", e.name));
        fs::write(&path, spec.to_json()).map_err(io)?;
        written.push(e.name.to_string());
    }
    let meta = BTreeMap::from([
        ("name".to_string(), "exterior".to_string()),
        ("source".to_string(), "graded".to_string()),
    ]);
    let spec = AlgebraSpec::from_parts(&super_exterior(), &[], meta);
    fs::write(dir.join("exterior.json"), spec.to_json()).map_err(io)?;
    written.push("exterior".to_string());
    Ok(written)
}

/// The mutant of the algebra in `l` that breaks `target`, as a file.
pub fn mutate_cmd(l: &Loaded, target: &str) -> Result<AlgebraSpec, InputError> {
    let t: MutationTarget = target
        .parse()
        .map_err(|_| InputError::Usage(format!("unknown mutation target {target:?}")))?;
    let m = mutate(&l.bimonoid, t).map_err(|e| InputError::Usage(e.to_string()))?;
    let mut meta = l.spec.meta.clone();
    meta.insert("mutated".to_string(), t.name().to_string());
    Ok(AlgebraSpec::from_parts(&m, &[], meta))
}
