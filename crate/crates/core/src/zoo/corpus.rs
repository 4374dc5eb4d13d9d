use crate::emcat::{base_monoid, RightModule};
use crate::error::Result;
use crate::lincore::LinMap;
use crate::scalar::Scalar;
use crate::wbm::WeakBimonoid;

use super::{groupoid_algebra, monoid_algebra, FiniteGroupoid, FiniteMonoidTable};

/// Where a corpus algebra comes from.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Source {
    Groupoid(FiniteGroupoid),
    Monoid(FiniteMonoidTable),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CorpusEntry {
    pub name: &'static str,
    pub source: Source,
    pub bimonoid: WeakBimonoid,
}

impl CorpusEntry {
    fn groupoid(name: &'static str, g: FiniteGroupoid) -> Self {
        let bimonoid = groupoid_algebra(&g);
        CorpusEntry {
            name,
            source: Source::Groupoid(g),
            bimonoid,
        }
    }

    fn monoid(name: &'static str, m: FiniteMonoidTable) -> Self {
        let bimonoid = monoid_algebra(&m);
        CorpusEntry {
            name,
            source: Source::Monoid(m),
            bimonoid,
        }
    }

    /// `g ↦ g⁻¹` for groupoid and group algebras; `None` when some basis
    /// element has no inverse.
    pub fn expected_antipode(&self) -> Option<LinMap> {
        match &self.source {
            Source::Groupoid(g) => Some(g.inverse_map()),
            Source::Monoid(m) => m.inverse_map(),
        }
    }

    /// Number of objects of the underlying groupoid, `1` for monoids.
    pub fn objects(&self) -> usize {
        match &self.source {
            Source::Groupoid(g) => g.objects(),
            Source::Monoid(_) => 1,
        }
    }

    /// The base module `R`, one small module and the regular module.
    ///
    /// The small module is `k` with `x·m = ε(m)x` when the counit is a
    /// character (monoid algebras and groups), and otherwise the right ideal
    /// spanned by the arrows into object `0`.
    pub fn modules(&self) -> Result<Vec<(String, RightModule)>> {
        let b = &self.bimonoid;
        let small = match &self.source {
            Source::Groupoid(g) if g.objects() > 1 => ("ideal0".to_string(), arrows_into(g, 0, b)?),
            _ => ("trivial".to_string(), RightModule::new(b.eps().clone(), b)?),
        };
        Ok(vec![
            ("base".to_string(), base_monoid(b)?.module()),
            small,
            ("regular".to_string(), RightModule::regular(b)),
        ])
    }
}

fn arrows_into(g: &FiniteGroupoid, x: usize, b: &WeakBimonoid) -> Result<RightModule> {
    let n = g.arrow_count();
    let basis: Vec<usize> = (0..n).filter(|&a| g.arrows()[a].target == x).collect();
    let pos = |a: usize| basis.iter().position(|&k| k == a);
    let mut entries = Vec::new();
    for (k, &a) in basis.iter().enumerate() {
        for h in 0..n {
            if let Some(ah) = g.compose(a, h) {
                let row = pos(ah).expect("the ideal is closed under composition");
                entries.push((row, k * n + h, Scalar::one()));
            }
        }
    }
    let action = LinMap::from_entries(basis.len(), basis.len() * n, entries)?;
    RightModule::new(action, b)
}

/// The nine reference algebras:
///
/// | name | algebra | dim |
/// |---|---|---|
/// | `trivial` | `k` | 1 |
/// | `discrete2` | `k × k` | 2 |
/// | `z2` | `kZ/2` | 2 |
/// | `pair2` | 2×2 matrices | 4 |
/// | `z3`, `z4` | `kZ/3`, `kZ/4` | 3, 4 |
/// | `pair2_z2` | pair groupoid on 2 objects × `Z/2` | 8 |
/// | `idempotent` | `{1, x}` with `x² = x` | 2 |
/// | `nilpotent` | `{1, x, 0}` with `x² = 0` | 3 |
pub fn corpus() -> Vec<CorpusEntry> {
    let ok = |r: Result<FiniteGroupoid>| r.expect("builtin groupoid");
    let okm = |r: Result<FiniteMonoidTable>| r.expect("builtin monoid");
    vec![
        CorpusEntry::groupoid("trivial", ok(FiniteGroupoid::discrete(1))),
        CorpusEntry::groupoid("discrete2", ok(FiniteGroupoid::discrete(2))),
        CorpusEntry::monoid("z2", okm(FiniteMonoidTable::cyclic(2))),
        CorpusEntry::groupoid("pair2", ok(FiniteGroupoid::pair(2))),
        CorpusEntry::groupoid("z3", ok(FiniteGroupoid::cyclic(3))),
        CorpusEntry::groupoid("z4", ok(FiniteGroupoid::cyclic(4))),
        CorpusEntry::groupoid(
            "pair2_z2",
            ok(ok(FiniteGroupoid::pair(2)).product(&ok(FiniteGroupoid::cyclic(2)))),
        ),
        CorpusEntry::monoid(
            "idempotent",
            okm(FiniteMonoidTable::new(vec![vec![0, 1], vec![1, 1]], 0)),
        ),
        CorpusEntry::monoid(
            "nilpotent",
            okm(FiniteMonoidTable::new(
                vec![vec![0, 1, 2], vec![1, 2, 2], vec![2, 2, 2]],
                0,
            )),
        ),
    ]
}

/// Looks up a corpus algebra by name.
pub fn corpus_entry(name: &str) -> Option<CorpusEntry> {
    corpus().into_iter().find(|e| e.name == name)
}

/// The exterior algebra `k[θ]/(θ²)` with `θ` primitive and odd, braided by
/// the Koszul sign `c(x⊗y) = (-1)^{|x||y|} y⊗x`. Basis `{1, θ}`.
pub fn super_exterior() -> WeakBimonoid {
    let mu = LinMap::from_int_rows(&[&[1, 0, 0, 0], &[0, 1, 1, 0]]);
    let eta = LinMap::from_int_rows(&[&[1], &[0]]);
    let delta = LinMap::from_int_rows(&[&[1, 0], &[0, 1], &[0, 1], &[0, 0]]);
    let eps = LinMap::from_int_rows(&[&[1, 0]]);
    let braid =
        LinMap::from_int_rows(&[&[1, 0, 0, 0], &[0, 0, 1, 0], &[0, 1, 0, 0], &[0, 0, 0, -1]]);
    WeakBimonoid::with_braid(2, mu, eta, delta, eps, Some(braid)).expect("valid braid")
}
