use crate::emcat::{base_monoid, BaseMonoid};
use crate::error::{check_dim, Error, Result};
use crate::lincore::{is_invertible, path, tensor, LinMap};
use crate::wbm::{AxiomReport, WeakBimonoid};

fn ev(maps: &[&LinMap]) -> LinMap {
    path(maps).expect("signatures")
}

/// The conditions for `g_X = X ⊗ g` to be a morphism of the induced weak
/// bimonads `– ⊗ B -> – ⊗ B'`. Since every component is `X ⊗ g`, each
/// diagram reduces to its instance at `X = Y = K`: compatibility with `τ`
/// (comultiplication), `τ₀` (counit), `m` (multiplication) and `u` (unit).
pub fn check_morphism(g: &LinMap, b: &WeakBimonoid, b2: &WeakBimonoid) -> Result<AxiomReport> {
    check_dim("morphism domain", b.dim(), g.dom())?;
    check_dim("morphism codomain", b2.dim(), g.cod())?;
    let mut rep = AxiomReport::new();
    rep.check(
        "morphism.comultiplication",
        ev(&[g, b2.delta()]),
        ev(&[b.delta(), &tensor(g, g)]),
    );
    rep.check("morphism.counit", ev(&[g, b2.eps()]), b.eps().clone());
    rep.check(
        "morphism.multiplication",
        ev(&[&tensor(g, g), b2.mu()]),
        ev(&[b.mu(), g]),
    );
    rep.check("morphism.unit", ev(&[b.eta(), g]), b2.eta().clone());
    Ok(rep)
}

/// `γ = P'∘g∘I : R -> R'`, checked to be an isomorphism of separable
/// Frobenius monoids.
pub fn base_iso(g: &LinMap, b: &WeakBimonoid, b2: &WeakBimonoid) -> Result<LinMap> {
    let rep = check_morphism(g, b, b2)?;
    if !rep.all_hold() {
        return Err(Error::NotAMorphism(
            rep.failed_names().into_iter().map(String::from).collect(),
        ));
    }
    let r = base_monoid(b)?;
    let r2 = base_monoid(b2)?;
    let gamma = ev(&[&r.i, g, &r2.p]);
    let failed = frobenius_map_failures(&gamma, &r, &r2);
    if !failed.is_empty() {
        return Err(Error::NotAMorphism(failed));
    }
    Ok(gamma)
}

fn frobenius_map_failures(gamma: &LinMap, r: &BaseMonoid, r2: &BaseMonoid) -> Vec<String> {
    let mut failed = Vec::new();
    if !is_invertible(gamma) {
        failed.push("base.invertible".to_string());
        return failed;
    }
    let gg = tensor(gamma, gamma);
    let checks = [
        (
            "base.multiplication",
            ev(&[&r.mu_r, gamma]),
            ev(&[&gg, &r2.mu_r]),
        ),
        ("base.unit", ev(&[&r.eta_r, gamma]), r2.eta_r.clone()),
        (
            "base.comultiplication",
            ev(&[&r.delta_r, &gg]),
            ev(&[gamma, &r2.delta_r]),
        ),
        ("base.counit", ev(&[gamma, &r2.eps_r]), r.eps_r.clone()),
    ];
    for (name, l, rhs) in checks {
        if l != rhs {
            failed.push(name.to_string());
        }
    }
    failed
}
