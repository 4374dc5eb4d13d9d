use crate::error::{Error, Result};
use crate::lincore::{compose, path, swap, tensor, tensor_all, LinMap};
use crate::wbm::{InducedMonad, WeakBimonoid};

fn ev(maps: &[&LinMap]) -> LinMap {
    path(maps).expect("signatures")
}

fn id(n: usize) -> LinMap {
    LinMap::identity(n)
}

/// Transports an endomorphism `f` of `B⊗B` to `X⊗B⊗Y⊗B` as
/// `(X⊗c_{Y,B}⊗B)∘(X⊗Y⊗f)∘(X⊗c⁻¹_{Y,B}⊗B)`.
pub fn conjugate(b: &WeakBimonoid, x: usize, y: usize, f: &LinMap) -> LinMap {
    let d = b.dim();
    let one = id(d);
    ev(&[
        &tensor_all(&[&id(x), &swap(d, y), &one]),
        &tensor_all(&[&id(x * y), f]),
        &tensor_all(&[&id(x), &swap(y, d), &one]),
    ])
}

/// `γ_X = (m_X⊗B)∘(TX⊗δ)` on `T²X`.
pub fn fusion(b: &WeakBimonoid, x: usize) -> Result<LinMap> {
    let t = InducedMonad::new(b);
    let g = ev(&[&tensor(&id(t.obj(x)), b.delta()), &tensor(&t.m(x), &b.id())]);
    if g != can_direct(&t, x, 1) {
        return Err(Error::FormsDisagree(format!(
            "the fusion operator at X={x}"
        )));
    }
    Ok(g)
}

fn can_direct(t: &InducedMonad, x: usize, y: usize) -> LinMap {
    let d = t.d();
    ev(&[&t.tau(x * d, y), &tensor(&t.m(x), &id(y * d))])
}

/// `can_{X,Y} = (m_X⊗TY)∘τ_{TX,Y}`, checked against its factorisation through
/// the fusion operator at `K`.
pub fn canonical_map(b: &WeakBimonoid, x: usize, y: usize) -> Result<LinMap> {
    let t = InducedMonad::new(b);
    let can = can_direct(&t, x, y);
    let gamma_k = fusion(b, 1)?;
    if can != conjugate(b, x, y, &gamma_k) {
        return Err(Error::FormsDisagree(format!(
            "the canonical map at X={x}, Y={y}"
        )));
    }
    Ok(can)
}

/// `(TX⊗m_Y)∘τ_{X,TY}`.
pub fn left_canonical_map(b: &WeakBimonoid, x: usize, y: usize) -> LinMap {
    let t = InducedMonad::new(b);
    let d = b.dim();
    let c = compose(&tensor(&swap(y, d), &id(d)), &tensor(&id(y), &b.braid())).expect("signatures");
    let tau = t.tau_with(x, &c).expect("signatures");
    ev(&[&tau, &tensor(&id(x * d), &t.m(y))])
}

/// `F_{K,K} = (B⊗ε⊗B)∘(μ⊗μ⊗B)∘(B⊗c⁻¹⊗B⊗B)∘(B⊗δ⊗δ)∘(B⊗η⊗B)`.
pub fn f_kk(b: &WeakBimonoid) -> LinMap {
    let one = b.id();
    ev(&[
        &tensor_all(&[&one, b.eta(), &one]),
        &tensor_all(&[&one, b.delta(), b.delta()]),
        &tensor_all(&[&one, b.braid_inv(), &one, &one]),
        &tensor_all(&[b.mu(), b.mu(), &one]),
        &tensor_all(&[&one, b.eps(), &one]),
    ])
}

/// `F_{X,Y}` on `T(TX⊗Y)`.
pub fn idempotent_f(b: &WeakBimonoid, x: usize, y: usize) -> Result<LinMap> {
    let f = conjugate(b, x, y, &f_kk(b));
    if compose(&f, &f)? != f {
        return Err(Error::IdempotencyFailed(format!("F at X={x}, Y={y}")));
    }
    Ok(f)
}

/// `E_{TK,TK} = (μ⊗μ)∘(B⊗c⊗B)∘(B⊗B⊗δ)∘(B⊗B⊗η)`.
pub fn e_kk(b: &WeakBimonoid) -> LinMap {
    let one = b.id();
    let b2 = id(b.dim() * b.dim());
    ev(&[
        &tensor(&b2, b.eta()),
        &tensor(&b2, b.delta()),
        &tensor_all(&[&one, &b.braid(), &one]),
        &tensor(b.mu(), b.mu()),
    ])
}

/// `E_{TX,TY}`, computed on the free modules `TX`, `TY` and by transporting
/// `E_{TK,TK}`; the two must agree and be idempotent.
pub fn idempotent_e_t(b: &WeakBimonoid, x: usize, y: usize) -> Result<LinMap> {
    let generic = InducedMonad::new(b).e_free_braided(x, y);
    let transported = conjugate(b, x, y, &e_kk(b));
    if generic != transported {
        return Err(Error::FormsDisagree(format!("E_(TX,TY) at X={x}, Y={y}")));
    }
    if compose(&generic, &generic)? != generic {
        return Err(Error::IdempotencyFailed(format!(
            "E_(TX,TY) at X={x}, Y={y}"
        )));
    }
    Ok(generic)
}
