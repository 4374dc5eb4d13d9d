use crate::error::{Error, Result};
use crate::lincore::{path, tensor, tensor_all, LinMap};
use crate::wbm::bimonoid::{mu2, t3, validate_monoid_comonoid};
use crate::wbm::{AxiomReport, InducedMonad, WeakBimonoid};

fn ev(maps: &[&LinMap]) -> LinMap {
    path(maps).expect("composite of checked signatures")
}

fn id(n: usize) -> LinMap {
    LinMap::identity(n)
}

/// Compatibility axioms between the monoid and comonoid, evaluated with the
/// braid of `b`:
///
/// * `counit_target.{braided,plain}`: `ε(x·1₁)·1₂·y = ε(x·y₁)·y₂`, once
///   with `c⁻¹` threaded through both sides and once without;
/// * `unit_comult.{braided,plain}`: `δ²(1) = 1₁ ⊗ 1₂·1'₁ ⊗ 1'₂` and the
///   variant with `c⁻¹` between the two copies of `δ(1)`;
/// * `comult_multiplicative`: `δ∘μ = (μ⊗μ)∘(B⊗c⊗B)∘(δ⊗δ)`;
/// * `counit_mult.{braided,plain}`: `ε(x·y·z) = ε(x·y₁)·ε(y₂·z)`, and with
///   the factors of `δ(y)` braided by `c⁻¹`.
pub fn check_weak_bimonoid(b: &WeakBimonoid) -> AxiomReport {
    let mut rep = AxiomReport::new();
    let one = b.id();
    let (mu, eta, delta, eps) = (b.mu(), b.eta(), b.delta(), b.eps());
    let c = b.braid();
    let ci = b.braid_inv();

    let insert_unit = t3(&one, eta, &one); // B⊗η⊗B
    let split_mid = t3(&one, delta, &one); // B⊗δ⊗B
    let braid_mid_inv = t3(&one, ci, &one);
    let mu_mu = tensor(mu, mu);
    let eps_b = tensor(eps, &one);

    rep.check(
        "counit_target.braided",
        ev(&[&insert_unit, &split_mid, &braid_mid_inv, &mu_mu, &eps_b]),
        ev(&[
            &tensor(&one, delta),
            &tensor(&one, ci),
            &tensor(mu, &one),
            &eps_b,
        ]),
    );
    rep.check(
        "counit_target.plain",
        ev(&[&insert_unit, &split_mid, &mu_mu, &eps_b]),
        ev(&[&tensor(&one, delta), &tensor(mu, &one), &eps_b]),
    );

    let delta2_eta = ev(&[eta, delta, &tensor(delta, &one)]);
    let eta_eta = tensor(eta, eta);
    let dd = tensor(delta, delta);
    let mid_mu = t3(&one, mu, &one);
    rep.check(
        "unit_comult.braided",
        delta2_eta.clone(),
        ev(&[&eta_eta, &dd, &braid_mid_inv, &mid_mu]),
    );
    rep.check(
        "unit_comult.plain",
        delta2_eta,
        ev(&[&eta_eta, &dd, &mid_mu]),
    );

    rep.check(
        "comult_multiplicative",
        ev(&[mu, delta]),
        ev(&[&dd, &t3(&one, &c, &one), &mu_mu]),
    );

    let eps_eps = tensor(eps, eps);
    let lhs_v = ev(&[&mu2(b), eps]);
    rep.check(
        "counit_mult.braided",
        lhs_v.clone(),
        ev(&[&split_mid, &braid_mid_inv, &mu_mu, &eps_eps]),
    );
    rep.check(
        "counit_mult.plain",
        lhs_v,
        ev(&[&split_mid, &mu_mu, &eps_eps]),
    );
    rep
}

/// The six (co)monoid laws followed by the compatibility axioms.
pub fn check_all(b: &WeakBimonoid) -> AxiomReport {
    let mut rep = validate_monoid_comonoid(b);
    rep.extend(check_weak_bimonoid(b));
    rep
}

/// `t = (B⊗ε)∘(B⊗μ)∘(c⊗B)∘(B⊗δ)∘(B⊗η)`, written out directly.
pub fn t_map(b: &WeakBimonoid) -> LinMap {
    let one = b.id();
    ev(&[
        &tensor(&one, b.eta()),
        &tensor(&one, b.delta()),
        &tensor(&b.braid(), &one),
        &tensor(&one, b.mu()),
        &tensor(&one, b.eps()),
    ])
}

/// `⊓ = (TK⊗τ₀)∘(TK⊗m_K)∘τ_{K,TK}∘u_{TK}` assembled from the monad, with
/// `c_{TK,B}` the braid of `b`.
fn sqcap_generic(b: &WeakBimonoid) -> LinMap {
    let t = InducedMonad::new(b);
    let d = b.dim();
    let tau_k_tk = t.tau_with(1, &b.braid()).expect("braid is B⊗B -> B⊗B");
    ev(&[
        &t.u(d),
        &tau_k_tk,
        &tensor(&id(d), &t.m(1)),
        &tensor(&id(d), &t.tau0()),
    ])
}

/// The idempotent `⊓` on `TK = B`.
///
/// Fails with [`Error::IdempotencyFailed`] if `⊓` is not idempotent, does not
/// satisfy `⊓∘m_K∘T⊓ = ⊓∘m_K`, or disagrees with [`t_map`].
pub fn sqcap(b: &WeakBimonoid) -> Result<LinMap> {
    let p = sqcap_generic(b);
    if ev(&[&p, &p]) != p {
        return Err(Error::IdempotencyFailed("sqcap is not idempotent".into()));
    }
    if !sqcap_module_map(b, &p) {
        return Err(Error::IdempotencyFailed(
            "sqcap . m_K . T(sqcap) differs from sqcap . m_K".into(),
        ));
    }
    if p != t_map(b) {
        return Err(Error::IdempotencyFailed(
            "generic sqcap differs from the direct composite t".into(),
        ));
    }
    Ok(p)
}

fn sqcap_module_map(b: &WeakBimonoid, p: &LinMap) -> bool {
    let t = InducedMonad::new(b);
    ev(&[&t.map(p), b.mu(), p]) == ev(&[b.mu(), p])
}

/// Names of the opmonoidal conditions checked by [`check_tau_axioms`]. Each
/// entry in the report is suffixed with the sampled dimensions.
pub const TAU_RIGHT_UNIT: &str = "tau.right_unit";
pub const TAU_LEFT_UNIT: &str = "tau.left_unit";
pub const TAU_LEFT_ASSOC: &str = "tau.left_assoc";
pub const TAU_RIGHT_ASSOC: &str = "tau.right_assoc";
pub const TAU_MULTIPLICATIVE: &str = "tau.multiplicative";
pub const SQCAP_MODULE_MAP: &str = "sqcap.module_map";
pub const E3_FACTORS: &str = "E3.factors";

/// The opmonoidal conditions characterising weak bimonads, for
/// `T = – ⊗ B` at every `X, Y, Z` drawn from `dims`, together with the
/// module-map property of `⊓` and the factorisation of `E⁽³⁾`.
///
/// Requires the symmetric swap: `c_{Y,B}` for arbitrary `Y` is not
/// determined by a braid on `B` alone.
pub fn check_tau_axioms(b: &WeakBimonoid, dims: &[usize]) -> Result<AxiomReport> {
    b.require_symmetric()?;
    if dims.is_empty() || dims.contains(&0) {
        return Err(Error::Precondition(
            "dims must be a non-empty list of positive integers".into(),
        ));
    }
    let t = InducedMonad::new(b);
    let d = b.dim();
    let mut rep = AxiomReport::new();

    for &x in dims {
        let (lhs, rhs) = tau_right_unit(&t, x);
        rep.check(format!("{TAU_RIGHT_UNIT}[X={x}]"), lhs, rhs);
    }
    for &x in dims {
        let (lhs, rhs) = tau_left_unit(&t, x);
        rep.check(format!("{TAU_LEFT_UNIT}[X={x}]"), lhs, rhs);
    }
    for &x in dims {
        for &y in dims {
            for &z in dims {
                let bottom = tau_assoc_bottom(&t, x, y, z);
                rep.check(
                    format!("{TAU_LEFT_ASSOC}[X={x},Y={y},Z={z}]"),
                    tau_left_assoc_top(&t, x, y, z),
                    bottom.clone(),
                );
                rep.check(
                    format!("{TAU_RIGHT_ASSOC}[X={x},Y={y},Z={z}]"),
                    tau_right_assoc_top(&t, x, y, z),
                    bottom,
                );
            }
        }
    }
    for &x in dims {
        for &y in dims {
            let (lhs, rhs) = tau_multiplicative(&t, x, y);
            rep.check(format!("{TAU_MULTIPLICATIVE}[X={x},Y={y}]"), lhs, rhs);
        }
    }

    let p = sqcap_generic(b);
    rep.check(
        SQCAP_MODULE_MAP,
        ev(&[&t.map(&p), b.mu(), &p]),
        ev(&[b.mu(), &p]),
    );

    for &x in dims {
        for &y in dims {
            for &z in dims {
                let (mx, my, mz) = (t.m(x), t.m(y), t.m(z));
                let e3 = t.e3_modules(&mx, &my, &mz);
                let e_xy = tensor(&t.e_free(x, y), &id(z * d));
                let e_yz = tensor(&id(x * d), &t.e_free(y, z));
                let tag = format!("[X={x},Y={y},Z={z}]");
                rep.check(
                    format!("{E3_FACTORS}.left{tag}"),
                    ev(&[&e_xy, &e_yz]),
                    e3.clone(),
                );
                rep.check(format!("{E3_FACTORS}.right{tag}"), ev(&[&e_yz, &e_xy]), e3);
            }
        }
    }
    Ok(rep)
}

/// Both sides of the condition on `T(X ⊗ TK) -> TX`.
fn tau_right_unit(t: &InducedMonad, x: usize) -> (LinMap, LinMap) {
    let d = t.d();
    let txk = id(x * d);
    let top = ev(&[
        &t.map(&t.u(x * d)),
        &t.map(&t.tau(x, d)),
        &t.map(&tensor(&txk, &t.m(1))),
        &t.map(&tensor(&txk, &t.tau0())),
        &t.m(x),
    ]);
    let bottom = ev(&[
        &t.tau(x, d),
        &tensor(&txk, &t.m(1)),
        &tensor(&txk, &t.tau0()),
    ]);
    (top, bottom)
}

/// Both sides of the condition on `T(TK ⊗ X) -> TX`.
fn tau_left_unit(t: &InducedMonad, x: usize) -> (LinMap, LinMap) {
    let d = t.d();
    let tx = id(x * d);
    let top = ev(&[
        &t.map(&t.u(d * x)),
        &t.map(&t.tau(d, x)),
        &t.map(&tensor(&t.m(1), &tx)),
        &t.map(&tensor(&t.tau0(), &tx)),
        &t.m(x),
    ]);
    let bottom = ev(&[&t.tau(d, x), &tensor(&t.m(1), &tx), &tensor(&t.tau0(), &tx)]);
    (top, bottom)
}

/// `(τ_{X,Y} ⊗ TZ) ∘ τ_{X⊗Y,Z} ∘ u_{X⊗Y⊗Z}`.
fn tau_assoc_bottom(t: &InducedMonad, x: usize, y: usize, z: usize) -> LinMap {
    ev(&[&t.u(x * y * z), &t.tau3(x, y, z)])
}

fn tau_left_assoc_top(t: &InducedMonad, x: usize, y: usize, z: usize) -> LinMap {
    let d = t.d();
    let tz = id(z * d);
    ev(&[
        &tensor(&id(x), &t.u(y * z)),
        &tensor(&id(x), &t.tau(y, z)),
        &tensor(&t.u(x * y * d), &tz),
        &tensor(&t.tau(x, y * d), &tz),
        &tensor_all(&[&id(x * d), &t.m(y), &tz]),
    ])
}

fn tau_right_assoc_top(t: &InducedMonad, x: usize, y: usize, z: usize) -> LinMap {
    let d = t.d();
    let tx = id(x * d);
    ev(&[
        &tensor(&t.u(x * y), &id(z)),
        &tensor(&t.tau(x, y), &id(z)),
        &tensor(&tx, &t.u(y * d * z)),
        &tensor(&tx, &t.tau(y * d, z)),
        &tensor_all(&[&tx, &t.m(y), &id(z * d)]),
    ])
}

/// `(m_X ⊗ m_Y) ∘ τ_{TX,TY} ∘ Tτ_{X,Y}` against `τ_{X,Y} ∘ m_{X⊗Y}`.
fn tau_multiplicative(t: &InducedMonad, x: usize, y: usize) -> (LinMap, LinMap) {
    let d = t.d();
    let lhs = ev(&[
        &t.map(&t.tau(x, y)),
        &t.tau(x * d, y * d),
        &tensor(&t.m(x), &t.m(y)),
    ]);
    let rhs = ev(&[&t.m(x * y), &t.tau(x, y)]);
    (lhs, rhs)
}
