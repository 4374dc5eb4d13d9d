use crate::error::{check_dim, Error, Result};
use crate::lincore::{compose, inverse, path, swap, tensor, tensor_all, LinMap};
use crate::wbm::AxiomReport;

/// Weak bimonoid data `(B, μ, η, δ, ε)` on `k^dim`, optionally with a
/// Yang–Baxter operator standing in for the braiding `c_{B,B}`.
///
/// Construction only checks signatures and the braid; the (co)monoid laws
/// and the compatibility axioms are reported by the checkers, so broken
/// inputs remain representable.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeakBimonoid {
    dim: usize,
    mu: LinMap,
    eta: LinMap,
    delta: LinMap,
    eps: LinMap,
    braid: Option<LinMap>,
    braid_inv: LinMap,
}

impl WeakBimonoid {
    pub fn new(dim: usize, mu: LinMap, eta: LinMap, delta: LinMap, eps: LinMap) -> Result<Self> {
        Self::with_braid(dim, mu, eta, delta, eps, None)
    }

    pub fn with_braid(
        dim: usize,
        mu: LinMap,
        eta: LinMap,
        delta: LinMap,
        eps: LinMap,
        braid: Option<LinMap>,
    ) -> Result<Self> {
        if dim == 0 {
            return Err(Error::Precondition(
                "dimension of B must be positive".into(),
            ));
        }
        let d2 = dim * dim;
        check_dim("mu domain", d2, mu.dom())?;
        check_dim("mu codomain", dim, mu.cod())?;
        check_dim("eta domain", 1, eta.dom())?;
        check_dim("eta codomain", dim, eta.cod())?;
        check_dim("delta domain", dim, delta.dom())?;
        check_dim("delta codomain", d2, delta.cod())?;
        check_dim("eps domain", dim, eps.dom())?;
        check_dim("eps codomain", 1, eps.cod())?;
        let braid_inv = match &braid {
            None => swap(dim, dim),
            Some(c) => {
                check_dim("braid domain", d2, c.dom())?;
                check_dim("braid codomain", d2, c.cod())?;
                let inv = inverse(c).map_err(|_| Error::InvalidBraid("not invertible".into()))?;
                let id = LinMap::identity(dim);
                let c1 = tensor(c, &id);
                let c2 = tensor(&id, c);
                if path(&[&c1, &c2, &c1])? != path(&[&c2, &c1, &c2])? {
                    return Err(Error::InvalidBraid("Yang-Baxter equation fails".into()));
                }
                inv
            }
        };
        // A braid equal to the swap is not "custom".
        let braid = braid.filter(|c| *c != swap(dim, dim));
        Ok(WeakBimonoid {
            dim,
            mu,
            eta,
            delta,
            eps,
            braid,
            braid_inv,
        })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn mu(&self) -> &LinMap {
        &self.mu
    }

    pub fn eta(&self) -> &LinMap {
        &self.eta
    }

    pub fn delta(&self) -> &LinMap {
        &self.delta
    }

    pub fn eps(&self) -> &LinMap {
        &self.eps
    }

    /// `c_{B,B}`; the swap unless a custom braid is installed.
    pub fn braid(&self) -> LinMap {
        self.braid
            .clone()
            .unwrap_or_else(|| swap(self.dim, self.dim))
    }

    pub fn braid_inv(&self) -> &LinMap {
        &self.braid_inv
    }

    pub fn custom_braid(&self) -> Option<&LinMap> {
        self.braid.as_ref()
    }

    pub fn is_symmetric(&self) -> bool {
        self.braid.is_none()
    }

    pub(crate) fn require_symmetric(&self) -> Result<()> {
        if self.is_symmetric() {
            Ok(())
        } else {
            Err(Error::CustomBraidUnsupported)
        }
    }

    pub fn id(&self) -> LinMap {
        LinMap::identity(self.dim)
    }

    /// Returns a copy with the given structure maps replaced, re-checking
    /// signatures.
    pub fn replace(
        &self,
        mu: Option<LinMap>,
        eta: Option<LinMap>,
        delta: Option<LinMap>,
        eps: Option<LinMap>,
    ) -> Result<Self> {
        Self::with_braid(
            self.dim,
            mu.unwrap_or_else(|| self.mu.clone()),
            eta.unwrap_or_else(|| self.eta.clone()),
            delta.unwrap_or_else(|| self.delta.clone()),
            eps.unwrap_or_else(|| self.eps.clone()),
            self.braid.clone(),
        )
    }
}

/// Associativity, both unit laws, coassociativity and both counit laws.
pub fn validate_monoid_comonoid(b: &WeakBimonoid) -> AxiomReport {
    let mut rep = AxiomReport::new();
    let id = b.id();
    let (mu, eta, delta, eps) = (b.mu(), b.eta(), b.delta(), b.eps());
    let ev = |maps: &[&LinMap]| path(maps).expect("structure maps have checked signatures");

    rep.check(
        "associativity",
        ev(&[&tensor(mu, &id), mu]),
        ev(&[&tensor(&id, mu), mu]),
    );
    rep.check("unit.left", ev(&[&tensor(eta, &id), mu]), id.clone());
    rep.check("unit.right", ev(&[&tensor(&id, eta), mu]), id.clone());
    rep.check(
        "coassociativity",
        ev(&[delta, &tensor(delta, &id)]),
        ev(&[delta, &tensor(&id, delta)]),
    );
    rep.check("counit.left", ev(&[delta, &tensor(eps, &id)]), id.clone());
    rep.check("counit.right", ev(&[delta, &tensor(&id, eps)]), id);
    rep
}

/// `μ ∘ (f ⊗ g) ∘ δ`.
pub fn convolve(f: &LinMap, g: &LinMap, b: &WeakBimonoid) -> Result<LinMap> {
    let d = b.dim();
    for (name, m) in [("left factor", f), ("right factor", g)] {
        check_dim(name, d, m.dom())?;
        check_dim(name, d, m.cod())?;
    }
    compose(b.mu(), &compose(&tensor(f, g), b.delta())?)
}

/// `μ ∘ (μ ⊗ B)`: the twofold product `B^3 -> B`.
pub(crate) fn mu2(b: &WeakBimonoid) -> LinMap {
    compose(b.mu(), &tensor(b.mu(), &b.id())).expect("signatures")
}

/// `(δ ⊗ B) ∘ δ`: the twofold coproduct `B -> B^3`.
pub(crate) fn delta2(b: &WeakBimonoid) -> LinMap {
    compose(&tensor(b.delta(), &b.id()), b.delta()).expect("signatures")
}

pub(crate) fn t3(a: &LinMap, b: &LinMap, c: &LinMap) -> LinMap {
    tensor_all(&[a, b, c])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Scalar;

    fn int(rows: &[&[i64]]) -> LinMap {
        LinMap::from_int_rows(rows)
    }

    fn trivial() -> WeakBimonoid {
        let one = int(&[&[1]]);
        WeakBimonoid::new(1, one.clone(), one.clone(), one.clone(), one).unwrap()
    }

    #[test]
    fn trivial_passes() {
        assert!(validate_monoid_comonoid(&trivial()).all_hold());
    }

    #[test]
    fn rejects_bad_signatures() {
        let one = int(&[&[1]]);
        let err = WeakBimonoid::new(2, one.clone(), one.clone(), one.clone(), one).unwrap_err();
        assert!(matches!(err, Error::DimensionMismatch { .. }));
    }

    #[test]
    fn non_associative_product_has_witness() {
        // e·e = f, f·e = e, e·f = f·f = 0 ; basis order (e, f)
        // columns of mu indexed by (x, y) -> 2x + y
        let mu =
            LinMap::from_entries(2, 4, [(1, 0, Scalar::one()), (0, 2, Scalar::one())]).unwrap();
        let b = WeakBimonoid::new(
            2,
            mu,
            int(&[&[1], &[0]]),
            int(&[&[1, 0], &[0, 0], &[0, 0], &[0, 1]]),
            int(&[&[1, 1]]),
        )
        .unwrap();
        let rep = validate_monoid_comonoid(&b);
        let assoc = rep.get("associativity").unwrap();
        assert!(!assoc.holds);
        let w = assoc.witness.as_ref().unwrap();
        assert_ne!(w.lhs, w.rhs);
        // (e·e)·e = f·e = e while e·(e·e) = e·f = 0
        assert_eq!(w.lhs.get(0, 0), Scalar::one());
        assert_eq!(w.rhs.get(0, 0), Scalar::zero());
    }

    #[test]
    fn braid_must_satisfy_yang_baxter() {
        let one = int(&[&[1]]);
        let bad = int(&[&[1, 1, 0, 0], &[0, 1, 0, 0], &[0, 0, 1, 0], &[0, 0, 0, 1]]);
        let e = WeakBimonoid::with_braid(
            2,
            LinMap::zero(2, 4),
            LinMap::zero(2, 1),
            LinMap::zero(4, 2),
            LinMap::zero(1, 2),
            Some(bad),
        );
        assert!(matches!(e, Err(Error::InvalidBraid(_))));
        let singular = WeakBimonoid::with_braid(
            1,
            one.clone(),
            one.clone(),
            one.clone(),
            one,
            Some(int(&[&[0]])),
        );
        assert!(matches!(singular, Err(Error::InvalidBraid(_))));
    }
}
