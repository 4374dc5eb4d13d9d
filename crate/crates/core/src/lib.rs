//! Exact evaluation of weak bimonoids and the weak bimonads they induce.
//!
//! Every structure map is a [`LinMap`] over the rationals and every diagram
//! is decided by exact matrix equality. The crate is organised by layer:
//!
//! * [`lincore`] – rational matrices, Kronecker products, swaps, idempotent
//!   splitting and linear solving;
//! * [`wbm`] – weak bimonoid data, its axioms, the induced monad `– ⊗ B` with
//!   its opmonoidal structure, and morphisms;
//! * [`emcat`] – the base monoid `R`, truncated tensor products of right
//!   modules and the monoidal coherence data;
//! * [`hopf`] – canonical maps, convolution, antipodes and weak Hopf witnesses;
//! * [`zoo`] – groupoid and monoid algebras and deliberately broken mutants.

pub mod emcat;
pub mod error;
pub mod hopf;
pub mod lincore;
pub mod scalar;
pub mod wbm;
pub mod zoo;

pub use error::{Error, Result};
pub use lincore::LinMap;
pub use scalar::Scalar;
pub use wbm::{AxiomCheck, AxiomReport, WeakBimonoid};
