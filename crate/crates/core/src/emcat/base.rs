use crate::error::{Error, Result};
use crate::lincore::{path, split_idempotent, tensor, LinMap};
use crate::wbm::{sqcap, InducedMonad, WeakBimonoid};

use super::RightModule;

/// The base object `R`, obtained by splitting `⊓ = I∘P`, with its separable
/// Frobenius structure.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BaseMonoid {
    pub r_dim: usize,
    /// `P : B -> R`
    pub p: LinMap,
    /// `I : R -> B`
    pub i: LinMap,
    /// `r = P∘μ∘(I⊗B) : R⊗B -> R`
    pub r_action: LinMap,
    pub mu_r: LinMap,
    pub eta_r: LinMap,
    pub delta_r: LinMap,
    pub eps_r: LinMap,
}

impl BaseMonoid {
    /// `(R, r)` as a right module.
    pub fn module(&self) -> RightModule {
        RightModule::unchecked(self.r_action.clone())
    }
}

fn ev(maps: &[&LinMap]) -> LinMap {
    path(maps).expect("signatures")
}

/// Builds `R` and verifies the monoid, comonoid, Frobenius and separability
/// laws; the first failing law is reported as
/// [`Error::FrobeniusCheckFailed`].
pub fn base_monoid(b: &WeakBimonoid) -> Result<BaseMonoid> {
    b.require_symmetric()?;
    let pi = sqcap(b)?;
    let split = split_idempotent(&pi)?;
    let (p, i) = (split.retraction, split.section);
    let n = p.cod();
    let id_r = LinMap::identity(n);
    let t = InducedMonad::new(b);

    let r_action = ev(&[&tensor(&i, &b.id()), b.mu(), &p]);
    RightModule::unchecked(r_action.clone())
        .validate(b)
        .map_err(|e| Error::FrobeniusCheckFailed(format!("R is not a module: {e}")))?;
    let e_rr = t.e_modules(&r_action, &r_action);

    let mu_r = ev(&[&e_rr, &tensor(&id_r, &i), &tensor(&id_r, b.eps())]);
    let eta_r = ev(&[b.eta(), &p]);
    let delta_r = ev(&[&tensor(&id_r, b.eta()), &tensor(&id_r, &p), &e_rr]);
    let eps_r = ev(&[&i, b.eps()]);

    let base = BaseMonoid {
        r_dim: n,
        p,
        i,
        r_action,
        mu_r,
        eta_r,
        delta_r,
        eps_r,
    };
    if let Some(law) = frobenius_failures(&base).into_iter().next() {
        return Err(Error::FrobeniusCheckFailed(law.to_string()));
    }
    Ok(base)
}

/// Names of the separable Frobenius laws that fail for `base`.
pub fn frobenius_failures(base: &BaseMonoid) -> Vec<&'static str> {
    let id = LinMap::identity(base.r_dim);
    let (mu, eta, delta, eps) = (&base.mu_r, &base.eta_r, &base.delta_r, &base.eps_r);
    let checks = [
        (
            "associativity",
            ev(&[&tensor(mu, &id), mu]),
            ev(&[&tensor(&id, mu), mu]),
        ),
        ("unit.left", ev(&[&tensor(eta, &id), mu]), id.clone()),
        ("unit.right", ev(&[&tensor(&id, eta), mu]), id.clone()),
        (
            "coassociativity",
            ev(&[delta, &tensor(delta, &id)]),
            ev(&[delta, &tensor(&id, delta)]),
        ),
        ("counit.left", ev(&[delta, &tensor(eps, &id)]), id.clone()),
        ("counit.right", ev(&[delta, &tensor(&id, eps)]), id.clone()),
        (
            "frobenius.left",
            ev(&[&tensor(&id, delta), &tensor(mu, &id)]),
            ev(&[mu, delta]),
        ),
        (
            "frobenius.right",
            ev(&[&tensor(delta, &id), &tensor(&id, mu)]),
            ev(&[mu, delta]),
        ),
        ("separability", ev(&[delta, mu]), id),
    ];
    checks
        .into_iter()
        .filter(|(_, l, r)| l != r)
        .map(|(name, _, _)| name)
        .collect()
}

/// All nine law names, in checking order.
pub const FROBENIUS_LAWS: [&str; 9] = [
    "associativity",
    "unit.left",
    "unit.right",
    "coassociativity",
    "counit.left",
    "counit.right",
    "frobenius.left",
    "frobenius.right",
    "separability",
];
