//! Canonical maps, convolution and antipodes.

mod antipode;
mod canonical;
mod whm;

pub use crate::wbm::convolve;
pub use antipode::{
    op_antipode_report, opposite, solve_antipode, structure_maps, AntipodeResult, StructureMaps,
};
pub use canonical::{
    canonical_map, conjugate, e_kk, f_kk, fusion, idempotent_e_t, idempotent_f, left_canonical_map,
};
pub use whm::{
    check_left_hopf, chi_kk, chi_witness, left_weak_hopf, right_weak_hopf, verify_whm, whm_report,
    HopfVerdicts,
};
