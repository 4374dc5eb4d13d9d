use crate::error::{check_dim, Result};
use crate::lincore::{compose, path, swap, tensor, tensor_all, LinMap};
use crate::wbm::WeakBimonoid;

/// The monad `T = – ⊗ B` on finite-dimensional spaces, with the opmonoidal
/// structure `τ_{X,Y} = (X ⊗ c_{Y,B} ⊗ B) ∘ (X ⊗ Y ⊗ δ)` and `τ₀ = ε`.
///
/// Objects are dimensions. For a plain object `Y = k^y` the braiding
/// `c_{Y,B}` is always the swap; [`InducedMonad::tau_with`] accepts an
/// explicit `c_{Y,B}` for the few places where `Y = B`.
#[derive(Debug, Clone, Copy)]
pub struct InducedMonad<'a> {
    b: &'a WeakBimonoid,
}

fn id(n: usize) -> LinMap {
    LinMap::identity(n)
}

impl<'a> InducedMonad<'a> {
    pub fn new(b: &'a WeakBimonoid) -> Self {
        InducedMonad { b }
    }

    pub fn bimonoid(&self) -> &'a WeakBimonoid {
        self.b
    }

    /// `dim B`.
    pub fn d(&self) -> usize {
        self.b.dim()
    }

    /// `dim TX`.
    pub fn obj(&self, x: usize) -> usize {
        x * self.d()
    }

    /// `Tf = f ⊗ B`.
    pub fn map(&self, f: &LinMap) -> LinMap {
        tensor(f, &self.b.id())
    }

    /// `m_X = X ⊗ μ : X⊗B⊗B -> X⊗B`.
    pub fn m(&self, x: usize) -> LinMap {
        tensor(&id(x), self.b.mu())
    }

    /// `u_X = X ⊗ η : X -> X⊗B`.
    pub fn u(&self, x: usize) -> LinMap {
        tensor(&id(x), self.b.eta())
    }

    pub fn tau0(&self) -> LinMap {
        self.b.eps().clone()
    }

    /// `τ_{X,Y}` with the symmetric swap as `c_{Y,B}`.
    pub fn tau(&self, x: usize, y: usize) -> LinMap {
        self.tau_with(x, &swap(y, self.d()))
            .expect("swap has the right signature")
    }

    /// `τ_{X,Y}` for an explicitly given `c_{Y,B} : Y⊗B -> B⊗Y`.
    pub fn tau_with(&self, x: usize, c_yb: &LinMap) -> Result<LinMap> {
        let d = self.d();
        let y = c_yb.dom() / d;
        check_dim("c_{Y,B} domain", y * d, c_yb.dom())?;
        check_dim("c_{Y,B} codomain", y * d, c_yb.cod())?;
        let split = tensor_all(&[&id(x * y), self.b.delta()]);
        let braid = tensor_all(&[&id(x), c_yb, &id(d)]);
        compose(&braid, &split)
    }

    /// `τ_{TX,TY}`, using `c_{Y⊗B,B} = (c_{Y,B}⊗B)∘(Y⊗c_{B,B})` so that a
    /// custom braid on `B` is honoured.
    pub fn tau_free(&self, x: usize, y: usize) -> LinMap {
        let d = self.d();
        let c = compose(
            &tensor(&swap(y, d), &id(d)),
            &tensor(&id(y), &self.b.braid()),
        )
        .expect("signatures");
        self.tau_with(x * d, &c).expect("signatures")
    }

    /// `E_{TX,TY} = (m_X⊗m_Y)∘τ_{TX,TY}∘u_{TX⊗TY}`, honouring the braid.
    pub fn e_free_braided(&self, x: usize, y: usize) -> LinMap {
        let d = self.d();
        path(&[
            &self.u(x * d * y * d),
            &self.tau_free(x, y),
            &tensor(&self.m(x), &self.m(y)),
        ])
        .expect("signatures")
    }

    /// `τ⁽³⁾_{X,Y,Z} = (τ_{X,Y} ⊗ TZ) ∘ τ_{X⊗Y,Z}`.
    pub fn tau3(&self, x: usize, y: usize, z: usize) -> LinMap {
        let first = self.tau(x * y, z);
        let second = tensor(&self.tau(x, y), &id(self.obj(z)));
        compose(&second, &first).expect("signatures")
    }

    /// The other bracketing, `(TX ⊗ τ_{Y,Z}) ∘ τ_{X,Y⊗Z}`.
    pub fn tau3_alt(&self, x: usize, y: usize, z: usize) -> LinMap {
        let first = self.tau(x, y * z);
        let second = tensor(&id(self.obj(x)), &self.tau(y, z));
        compose(&second, &first).expect("signatures")
    }

    /// `E_{A,C} = (a ⊗ c) ∘ τ_{A,C} ∘ u_{A⊗C}` for right modules given by
    /// their actions `a : A⊗B -> A`, `c : C⊗B -> C`.
    pub fn e_modules(&self, a: &LinMap, c: &LinMap) -> LinMap {
        let (na, nc) = (a.cod(), c.cod());
        path(&[&self.u(na * nc), &self.tau(na, nc), &tensor(a, c)]).expect("signatures")
    }

    /// `E_{TX,TY}` on free modules.
    pub fn e_free(&self, x: usize, y: usize) -> LinMap {
        self.e_modules(&self.m(x), &self.m(y))
    }

    /// `E⁽³⁾ = (a ⊗ c ⊗ e) ∘ τ⁽³⁾ ∘ u` for three right modules.
    pub fn e3_modules(&self, a: &LinMap, c: &LinMap, e: &LinMap) -> LinMap {
        let (na, nc, ne) = (a.cod(), c.cod(), e.cod());
        path(&[
            &self.u(na * nc * ne),
            &self.tau3(na, nc, ne),
            &tensor_all(&[a, c, e]),
        ])
        .expect("signatures")
    }
}

/// `τ_{X,Y}` for the monad induced by `b`.
pub fn tau(b: &WeakBimonoid, x: usize, y: usize) -> LinMap {
    InducedMonad::new(b).tau(x, y)
}

pub fn tau0(b: &WeakBimonoid) -> LinMap {
    b.eps().clone()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn discrete2() -> WeakBimonoid {
        WeakBimonoid::new(
            2,
            LinMap::from_int_rows(&[&[1, 0, 0, 0], &[0, 0, 0, 1]]),
            LinMap::from_int_rows(&[&[1], &[1]]),
            LinMap::from_int_rows(&[&[1, 0], &[0, 0], &[0, 0], &[0, 1]]),
            LinMap::from_int_rows(&[&[1, 1]]),
        )
        .unwrap()
    }

    #[test]
    fn tau_at_unit_objects_is_delta() {
        let b = discrete2();
        assert_eq!(tau(&b, 1, 1), *b.delta());
        assert_eq!(tau0(&b), *b.eps());
    }

    #[test]
    fn tau_one_two_on_discrete_algebra() {
        // (y, b) at index 2y + b goes to (b, y, b) at index 4b + 2y + b.
        let b = discrete2();
        let t = tau(&b, 1, 2);
        assert_eq!((t.cod(), t.dom()), (8, 4));
        let mut expected = vec![vec![0i64; 4]; 8];
        for y in 0..2 {
            for e in 0..2 {
                expected[4 * e + 2 * y + e][2 * y + e] = 1;
            }
        }
        let rows: Vec<&[i64]> = expected.iter().map(|r| r.as_slice()).collect();
        assert_eq!(t, LinMap::from_int_rows(&rows));
    }

    #[test]
    fn monad_laws_and_counitality() {
        let b = discrete2();
        let t = InducedMonad::new(&b);
        for x in 1..=2 {
            let tx = t.obj(x);
            let assoc_l = compose(&t.m(x), &t.map(&t.m(x))).unwrap();
            let assoc_r = compose(&t.m(x), &t.m(tx)).unwrap();
            assert_eq!(assoc_l, assoc_r);
            assert!(compose(&t.m(x), &t.u(tx)).unwrap().is_identity());
            assert!(compose(&t.m(x), &t.map(&t.u(x))).unwrap().is_identity());
            let counit = compose(&tensor(&id(tx), &t.tau0()), &t.tau(x, 1)).unwrap();
            assert!(counit.is_identity());
        }
    }

    #[test]
    fn tau3_bracketings_agree() {
        let b = discrete2();
        let t = InducedMonad::new(&b);
        assert_eq!(t.tau3(1, 2, 2), t.tau3_alt(1, 2, 2));
    }
}
