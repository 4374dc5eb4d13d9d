use crate::error::{Error, Result};
use crate::lincore::{compose, path, solve_linear, tensor_all, LinMap};
use crate::scalar::Scalar;
use crate::wbm::{AxiomReport, WeakBimonoid};

use super::antipode::{op_antipode_report, opposite, solve_antipode};
use super::canonical::{canonical_map, conjugate, e_kk, f_kk, idempotent_e_t, idempotent_f};

fn ev(maps: &[&LinMap]) -> LinMap {
    path(maps).expect("signatures")
}

/// `χ_{K,K} = (μ⊗B)∘(B⊗φ⊗B)∘(B⊗δ)`, i.e. `x⊗y ↦ x·φ(y₁)⊗y₂`.
pub fn chi_kk(b: &WeakBimonoid, phi: &LinMap) -> LinMap {
    let one = b.id();
    ev(&[
        &tensor_all(&[&one, b.delta()]),
        &tensor_all(&[&one, phi, &one]),
        &tensor_all(&[b.mu(), &one]),
    ])
}

/// `χ_{X,Y}` built from a candidate antipode `ν`.
pub fn chi_witness(b: &WeakBimonoid, nu: &LinMap, x: usize, y: usize) -> LinMap {
    conjugate(b, x, y, &chi_kk(b, nu))
}

/// The weak Hopf identities `χ∘E = χ = F∘χ`, `χ∘can = F`, `can∘χ = E` for
/// the `χ` built from `nu`, plus the retract factorisation
/// `can = E∘can∘F`.
pub fn whm_report(b: &WeakBimonoid, nu: &LinMap, x: usize, y: usize) -> Result<AxiomReport> {
    let chi = chi_witness(b, nu, x, y);
    let e = idempotent_e_t(b, x, y)?;
    let f = idempotent_f(b, x, y)?;
    let can = canonical_map(b, x, y)?;
    let tag = format!("[X={x},Y={y}]");
    let mut rep = AxiomReport::new();
    rep.check(format!("whm.chi_E{tag}"), compose(&chi, &e)?, chi.clone());
    rep.check(format!("whm.F_chi{tag}"), compose(&f, &chi)?, chi.clone());
    rep.check(format!("whm.chi_can{tag}"), compose(&chi, &can)?, f.clone());
    rep.check(format!("whm.can_chi{tag}"), compose(&can, &chi)?, e.clone());
    rep.check(format!("whm.can_retract{tag}"), ev(&[&f, &can, &e]), can);
    Ok(rep)
}

/// Like [`whm_report`], but any failing identity is an error.
pub fn verify_whm(b: &WeakBimonoid, nu: &LinMap, x: usize, y: usize) -> Result<AxiomReport> {
    let rep = whm_report(b, nu, x, y)?;
    if let Some(bad) = rep.failures().next() {
        return Err(Error::WhmVerificationFailed(bad.name.clone()));
    }
    Ok(rep)
}

/// Decides whether `– ⊗ B` is a weak right Hopf monad without going through
/// the convolution equations: searches the natural endomorphisms
/// `χ_{K,K} = (μ⊗B)∘(B⊗φ⊗B)∘(B⊗δ)` for one satisfying the weak Hopf
/// identities at `X = Y = K`, and returns its `φ`.
pub fn right_weak_hopf(b: &WeakBimonoid) -> Result<Option<LinMap>> {
    let d = b.dim();
    let n = d * d;
    let e = e_kk(b);
    let f = f_kk(b);
    let can = canonical_map(b, 1, 1)?;
    let mut cols: [Vec<Vec<(usize, Scalar)>>; 4] = Default::default();
    for k in 0..n {
        let unit = LinMap::from_entries(d, d, [(k / d, k % d, Scalar::one())])?;
        let chi = chi_kk(b, &unit);
        let exprs = [
            compose(&chi, &e)?.sub(&chi)?,
            compose(&f, &chi)?.sub(&chi)?,
            compose(&chi, &can)?,
            compose(&can, &chi)?,
        ];
        for (slot, x) in cols.iter_mut().zip(exprs) {
            slot.push(x.vectorize().column(0).to_vec());
        }
    }
    let zero = LinMap::zero(n * n, 1);
    let rhs = [zero.clone(), zero, f.vectorize(), e.vectorize()];
    let mut constraints = Vec::with_capacity(4);
    for (c, r) in cols.into_iter().zip(rhs) {
        constraints.push((LinMap::from_columns(n * n, c)?, r));
    }
    match solve_linear(&constraints)?.solution() {
        Some(x) => Ok(Some(LinMap::unvectorize(x, d, d)?)),
        None => Ok(None),
    }
}

/// `– ⊗ B` is a left weak Hopf monad iff `– ⊗ B^op` is a right one.
pub fn left_weak_hopf(b: &WeakBimonoid) -> Result<Option<LinMap>> {
    right_weak_hopf(&opposite(b))
}

/// Verdicts on the Hopf property reached along independent routes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HopfVerdicts {
    pub right_weak_hopf: bool,
    pub left_weak_hopf: bool,
    pub antipode_invertible: bool,
}

impl HopfVerdicts {
    pub fn coincide(&self) -> bool {
        self.right_weak_hopf == self.left_weak_hopf
            && self.left_weak_hopf == self.antipode_invertible
    }
}

/// The left-handed side: solves for `ν^op` on `B^op`, checks its three
/// diagrams, and cross-checks the right/left/invertible verdicts, including
/// `ν^op = ν⁻¹` when both exist.
pub fn check_left_hopf(b: &WeakBimonoid) -> Result<(AxiomReport, HopfVerdicts)> {
    let ar = solve_antipode(b)?;
    let mut rep = AxiomReport::new();
    rep.flag("left_hopf.nu_op_exists", ar.nu_op.is_some());
    if let Some(w) = &ar.nu_op {
        rep.extend(op_antipode_report(b, w));
    }
    let verdicts = HopfVerdicts {
        right_weak_hopf: right_weak_hopf(b)?.is_some(),
        left_weak_hopf: left_weak_hopf(b)?.is_some(),
        antipode_invertible: ar.nu.is_some() && ar.invertible,
    };
    rep.flag("left_hopf.verdicts_coincide", verdicts.coincide());
    if let (Some(inv), Some(w)) = (&ar.nu_inverse, &ar.nu_op) {
        rep.check("left_hopf.nu_op_is_nu_inverse", w.clone(), inv.clone());
    }
    Ok((rep, verdicts))
}
