//! Weak bimonoids, their axioms, and the weak bimonad `– ⊗ B`.

mod axioms;
mod bimonoid;
mod monad;
mod morphism;
mod report;

pub use axioms::{
    check_all, check_tau_axioms, check_weak_bimonoid, sqcap, t_map, E3_FACTORS, SQCAP_MODULE_MAP,
    TAU_LEFT_ASSOC, TAU_LEFT_UNIT, TAU_MULTIPLICATIVE, TAU_RIGHT_ASSOC, TAU_RIGHT_UNIT,
};
pub use bimonoid::{convolve, validate_monoid_comonoid, WeakBimonoid};
pub(crate) use bimonoid::{delta2, mu2};
pub use monad::{tau, tau0, InducedMonad};
pub use morphism::{base_iso, check_morphism};
pub use report::{AxiomCheck, AxiomReport, Witness};
