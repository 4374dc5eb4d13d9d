//! Right modules over a weak bimonoid: the base monoid `R`, truncated tensor
//! products, unit and associativity constraints, and the `R`-bimodule
//! structure of a module.

mod actions;
mod base;
mod module;
mod tensor;

pub use actions::{r_bimodule_actions, BimoduleActions};
pub use base::{base_monoid, frobenius_failures, BaseMonoid, FROBENIUS_LAWS};
pub use module::RightModule;
pub use tensor::{
    associator, coherence_check, module_tensor, unit_constraints, ModuleTensor, UnitConstraints,
};
