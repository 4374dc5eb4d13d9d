use crate::error::{Error, Result};
use crate::lincore::{path, tensor, tensor_all, LinMap};
use crate::wbm::{InducedMonad, WeakBimonoid};

use super::{BaseMonoid, RightModule};

/// The `R`-bimodule structure of a right `B`-module.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BimoduleActions {
    /// `R⊗A⊗R -> A`
    pub two_sided: LinMap,
    /// `R⊗A -> A`
    pub left: LinMap,
    /// `A⊗R -> A`
    pub right: LinMap,
}

fn ev(maps: &[&LinMap]) -> Result<LinMap> {
    path(maps)
}

/// `(τ₀⊗A⊗τ₀)∘(I⊗A⊗I)∘E⁽³⁾_{R,A,R}`, its one-sided restrictions along
/// `η_R`, and a check of the bimodule laws.
pub fn r_bimodule_actions(
    a: &RightModule,
    b: &WeakBimonoid,
    base: &BaseMonoid,
) -> Result<BimoduleActions> {
    b.require_symmetric()?;
    let t = InducedMonad::new(b);
    let n = a.carrier();
    let id_a = LinMap::identity(n);
    let id_r = LinMap::identity(base.r_dim);
    let r = &base.r_action;
    let e3 = t.e3_modules(r, a.action(), r);
    let two_sided = ev(&[
        &e3,
        &tensor_all(&[&base.i, &id_a, &base.i]),
        &tensor_all(&[b.eps(), &id_a, b.eps()]),
    ])?;
    let left = ev(&[&tensor_all(&[&id_r, &id_a, &base.eta_r]), &two_sided])?;
    let right = ev(&[&tensor_all(&[&base.eta_r, &id_a, &id_r]), &two_sided])?;

    let fail = |law: &str| Err(Error::BimoduleLawFailed(law.to_string()));
    let mu_r = &base.mu_r;
    if ev(&[&tensor(mu_r, &id_a), &left])? != ev(&[&tensor(&id_r, &left), &left])? {
        return fail("left action is not associative");
    }
    if ev(&[&tensor(&base.eta_r, &id_a), &left])? != id_a {
        return fail("left action is not unital");
    }
    if ev(&[&tensor(&id_a, mu_r), &right])? != ev(&[&tensor(&right, &id_r), &right])? {
        return fail("right action is not associative");
    }
    if ev(&[&tensor(&id_a, &base.eta_r), &right])? != id_a {
        return fail("right action is not unital");
    }
    let via_left_first = ev(&[&tensor(&left, &id_r), &right])?;
    let via_right_first = ev(&[&tensor(&id_r, &right), &left])?;
    if via_left_first != two_sided || via_right_first != two_sided {
        return fail("two-sided action does not factor through the one-sided actions");
    }
    Ok(BimoduleActions {
        two_sided,
        left,
        right,
    })
}
