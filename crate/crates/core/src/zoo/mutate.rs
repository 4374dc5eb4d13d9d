use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::lincore::{inverse, path, tensor, LinMap};
use crate::scalar::Scalar;
use crate::wbm::{check_weak_bimonoid, validate_monoid_comonoid, AxiomReport, WeakBimonoid};

/// The law a mutant is meant to break.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum MutationTarget {
    Associativity,
    Unit,
    Coassociativity,
    Counit,
    CounitTarget,
    UnitComult,
    ComultMultiplicative,
    CounitMult,
}

impl MutationTarget {
    pub const ALL: [MutationTarget; 8] = [
        MutationTarget::Associativity,
        MutationTarget::Unit,
        MutationTarget::Coassociativity,
        MutationTarget::Counit,
        MutationTarget::CounitTarget,
        MutationTarget::UnitComult,
        MutationTarget::ComultMultiplicative,
        MutationTarget::CounitMult,
    ];

    pub fn name(self) -> &'static str {
        match self {
            MutationTarget::Associativity => "associativity",
            MutationTarget::Unit => "unit",
            MutationTarget::Coassociativity => "coassociativity",
            MutationTarget::Counit => "counit",
            MutationTarget::CounitTarget => "counit_target",
            MutationTarget::UnitComult => "unit_comult",
            MutationTarget::ComultMultiplicative => "comult_multiplicative",
            MutationTarget::CounitMult => "counit_mult",
        }
    }

    /// Whether the target is one of the monoid/comonoid laws rather than a
    /// compatibility axiom.
    pub fn is_structural(self) -> bool {
        matches!(
            self,
            MutationTarget::Associativity
                | MutationTarget::Unit
                | MutationTarget::Coassociativity
                | MutationTarget::Counit
        )
    }

    /// True iff some report entry belonging to this target fails.
    pub fn fails_in(self, rep: &AxiomReport) -> bool {
        let prefix = self.name();
        rep.failures()
            .any(|e| e.name == prefix || e.name.starts_with(&format!("{prefix}.")))
    }
}

impl fmt::Display for MutationTarget {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for MutationTarget {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::ALL
            .into_iter()
            .find(|t| t.name() == s)
            .ok_or_else(|| Error::Precondition(format!("unknown mutation target {s:?}")))
    }
}

fn ev(maps: &[&LinMap]) -> LinMap {
    path(maps).expect("signatures")
}

/// Each nonzero entry doubled and each zero entry set to one, in column order.
fn entry_bumps(f: &LinMap) -> Vec<LinMap> {
    let mut out = Vec::new();
    for c in 0..f.dom() {
        for r in 0..f.cod() {
            let v = f.get(r, c);
            let nv = if v.is_zero() { Scalar::one() } else { &v + &v };
            let mut rows = f.to_rows();
            rows[r][c] = nv;
            out.push(LinMap::from_rows(f.cod(), f.dom(), &rows).expect("same shape"));
        }
    }
    out
}

/// Invertible `φ` used to transport one of the two structures: `2·id`,
/// then `id + E_{ij}` for every `(i, j)` in row order.
fn twists(d: usize) -> Vec<LinMap> {
    let mut out = vec![LinMap::identity(d).scale(&Scalar::from_int(2))];
    for i in 0..d {
        for j in 0..d {
            let e = LinMap::from_entries(d, d, [(i, j, Scalar::one())]).expect("in range");
            out.push(LinMap::identity(d).add(&e).expect("same shape"));
        }
    }
    out
}

fn candidates(b: &WeakBimonoid, target: MutationTarget) -> Vec<WeakBimonoid> {
    let rebuild = |mu, eta, delta, eps| b.replace(mu, eta, delta, eps).ok();
    let out: Vec<Option<WeakBimonoid>> = match target {
        MutationTarget::Associativity => entry_bumps(b.mu())
            .into_iter()
            .map(|m| rebuild(Some(m), None, None, None))
            .collect(),
        MutationTarget::Unit => entry_bumps(b.eta())
            .into_iter()
            .map(|m| rebuild(None, Some(m), None, None))
            .collect(),
        MutationTarget::Coassociativity => entry_bumps(b.delta())
            .into_iter()
            .map(|m| rebuild(None, None, Some(m), None))
            .collect(),
        MutationTarget::Counit => entry_bumps(b.eps())
            .into_iter()
            .map(|m| rebuild(None, None, None, Some(m)))
            .collect(),
        _ => {
            let mut v = Vec::new();
            for phi in twists(b.dim()) {
                let phi_inv = inverse(&phi).expect("unitriangular or scalar");
                // transported comonoid
                let delta = ev(&[&phi_inv, b.delta(), &tensor(&phi, &phi)]);
                let eps = ev(&[&phi_inv, b.eps()]);
                v.push(rebuild(None, None, Some(delta), Some(eps)));
                // transported monoid
                let mu = ev(&[&tensor(&phi_inv, &phi_inv), b.mu(), &phi]);
                let eta = ev(&[b.eta(), &phi]);
                v.push(rebuild(Some(mu), Some(eta), None, None));
            }
            v
        }
    };
    out.into_iter().flatten().collect()
}

/// A copy of `b` in which the `target` law fails.
///
/// Monoid and comonoid laws are broken by changing one entry of the
/// relevant structure map. Compatibility axioms are broken by transporting
/// either the monoid or the comonoid along an invertible map, which keeps
/// both of them lawful. Among the candidates that break `target`, the one
/// with the fewest failing checks wins, earliest first. If no candidate
/// breaks `target` (as happens in dimension one) the result is the first
/// candidate that breaks anything; `Err` if there is none.
pub fn mutate(b: &WeakBimonoid, target: MutationTarget) -> Result<WeakBimonoid> {
    let score = |m: &WeakBimonoid| -> AxiomReport {
        let mut rep = validate_monoid_comonoid(m);
        if !target.is_structural() {
            rep.extend(check_weak_bimonoid(m));
        }
        rep
    };
    let mut best: Option<(usize, WeakBimonoid)> = None;
    let mut fallback = None;
    for m in candidates(b, target) {
        let rep = score(&m);
        let failures = rep.failures().count();
        if target.fails_in(&rep) {
            if best.as_ref().is_none_or(|(n, _)| failures < *n) {
                best = Some((failures, m));
            }
        } else if fallback.is_none() && failures > 0 {
            fallback = Some(m);
        }
    }
    best.map(|(_, m)| m)
        .or(fallback)
        .ok_or_else(|| Error::Precondition(format!("no mutant of this algebra breaks {target}")))
}
