use crate::error::{check_dim, Error, Result};
use crate::lincore::{compose, tensor, LinMap};
use crate::wbm::WeakBimonoid;

/// A right `B`-module `(A, a : A⊗B -> A)`, i.e. an algebra for `– ⊗ B`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RightModule {
    carrier: usize,
    action: LinMap,
}

impl RightModule {
    /// Validates associativity and unitality of `action` over `b`.
    pub fn new(action: LinMap, b: &WeakBimonoid) -> Result<Self> {
        let d = b.dim();
        if !action.dom().is_multiple_of(d) {
            return Err(Error::InvalidModule(format!(
                "action domain {} is not a multiple of dim B = {d}",
                action.dom()
            )));
        }
        let carrier = action.cod();
        check_dim("module action domain", carrier * d, action.dom())?;
        let m = RightModule { carrier, action };
        m.validate(b)?;
        Ok(m)
    }

    /// Skips validation; for internally constructed modules that are checked
    /// by their constructor.
    pub(crate) fn unchecked(action: LinMap) -> Self {
        RightModule {
            carrier: action.cod(),
            action,
        }
    }

    /// `B` acting on itself by right multiplication.
    pub fn regular(b: &WeakBimonoid) -> Self {
        Self::unchecked(b.mu().clone())
    }

    pub fn carrier(&self) -> usize {
        self.carrier
    }

    pub fn action(&self) -> &LinMap {
        &self.action
    }

    pub(crate) fn validate(&self, b: &WeakBimonoid) -> Result<()> {
        let id = LinMap::identity(self.carrier);
        let a = &self.action;
        let lhs = compose(a, &tensor(a, &b.id()))?;
        let rhs = compose(a, &tensor(&id, b.mu()))?;
        if lhs != rhs {
            return Err(Error::InvalidModule("action is not associative".into()));
        }
        if compose(a, &tensor(&id, b.eta()))? != id {
            return Err(Error::InvalidModule("action is not unital".into()));
        }
        Ok(())
    }

    /// True iff `f : self -> other` commutes with the actions.
    pub fn is_morphism_to(&self, other: &RightModule, f: &LinMap, b: &WeakBimonoid) -> bool {
        if f.dom() != self.carrier || f.cod() != other.carrier {
            return false;
        }
        let lhs = compose(f, &self.action);
        let rhs = compose(&other.action, &tensor(f, &b.id()));
        matches!((lhs, rhs), (Ok(l), Ok(r)) if l == r)
    }
}
