use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::lincore::LinMap;
use crate::scalar::Scalar;
use crate::wbm::WeakBimonoid;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Arrow {
    pub source: usize,
    pub target: usize,
    pub label: String,
}

/// A finite groupoid with an explicit composition table.
///
/// `compose[(g, h)] = g∘h` is defined exactly when `source(g) = target(h)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteGroupoid {
    objects: usize,
    arrows: Vec<Arrow>,
    compose: HashMap<(usize, usize), usize>,
    inverses: Vec<usize>,
}

impl FiniteGroupoid {
    pub fn new(
        objects: usize,
        arrows: Vec<Arrow>,
        compose: HashMap<(usize, usize), usize>,
        inverses: Vec<usize>,
    ) -> Result<Self> {
        let g = FiniteGroupoid {
            objects,
            arrows,
            compose,
            inverses,
        };
        g.validate()?;
        Ok(g)
    }

    fn validate(&self) -> Result<()> {
        let bad = |m: String| Err(Error::InvalidGroupoid(m));
        let n = self.arrows.len();
        if self.objects == 0 {
            return bad("no objects".into());
        }
        if self.inverses.len() != n {
            return bad("inverse table has the wrong length".into());
        }
        for (k, a) in self.arrows.iter().enumerate() {
            if a.source >= self.objects || a.target >= self.objects {
                return bad(format!("arrow {k} has an endpoint out of range"));
            }
        }
        for g in 0..n {
            for h in 0..n {
                let composable = self.arrows[g].source == self.arrows[h].target;
                match (composable, self.compose.get(&(g, h))) {
                    (true, Some(&gh)) => {
                        if gh >= n
                            || self.arrows[gh].source != self.arrows[h].source
                            || self.arrows[gh].target != self.arrows[g].target
                        {
                            return bad(format!("composite of {g} and {h} has wrong endpoints"));
                        }
                    }
                    (true, None) => return bad(format!("composite of {g} and {h} missing")),
                    (false, Some(_)) => {
                        return bad(format!(
                            "composite of {g} and {h} defined but not composable"
                        ))
                    }
                    (false, None) => {}
                }
            }
        }
        for ((f, g), fg) in &self.compose {
            for h in 0..n {
                if let (Some(gh), Some(fg_h)) =
                    (self.compose.get(&(*g, h)), self.compose.get(&(*fg, h)))
                {
                    if self.compose.get(&(*f, *gh)) != Some(fg_h) {
                        return bad(format!("composition not associative at ({f}, {g}, {h})"));
                    }
                }
            }
        }
        let mut ids = Vec::with_capacity(self.objects);
        for x in 0..self.objects {
            match self.find_identity(x) {
                Some(e) => ids.push(e),
                None => return bad(format!("object {x} has no identity arrow")),
            }
        }
        for g in 0..n {
            let inv = self.inverses[g];
            let a = &self.arrows[g];
            if inv >= n
                || self.compose.get(&(g, inv)) != Some(&ids[a.target])
                || self.compose.get(&(inv, g)) != Some(&ids[a.source])
            {
                return bad(format!("arrow {g} has no two-sided inverse"));
            }
        }
        Ok(())
    }

    fn find_identity(&self, x: usize) -> Option<usize> {
        (0..self.arrows.len()).find(|&e| {
            let a = &self.arrows[e];
            a.source == x
                && a.target == x
                && (0..self.arrows.len()).all(|g| {
                    let b = &self.arrows[g];
                    (b.target != x || self.compose.get(&(e, g)) == Some(&g))
                        && (b.source != x || self.compose.get(&(g, e)) == Some(&g))
                })
        })
    }

    pub fn objects(&self) -> usize {
        self.objects
    }

    pub fn arrows(&self) -> &[Arrow] {
        &self.arrows
    }

    pub fn arrow_count(&self) -> usize {
        self.arrows.len()
    }

    pub fn compose(&self, g: usize, h: usize) -> Option<usize> {
        self.compose.get(&(g, h)).copied()
    }

    pub fn inverse(&self, g: usize) -> usize {
        self.inverses[g]
    }

    pub fn identity(&self, x: usize) -> usize {
        self.find_identity(x).expect("validated")
    }

    /// `n` objects and only identity arrows.
    pub fn discrete(n: usize) -> Result<Self> {
        let arrows = (0..n)
            .map(|x| Arrow {
                source: x,
                target: x,
                label: format!("id{x}"),
            })
            .collect();
        let compose = (0..n).map(|x| ((x, x), x)).collect();
        Self::new(n, arrows, compose, (0..n).collect())
    }

    /// One arrow `j -> i` for every pair of objects, at index `i·n + j`.
    pub fn pair(n: usize) -> Result<Self> {
        let mut arrows = Vec::with_capacity(n * n);
        let mut compose = HashMap::new();
        for i in 0..n {
            for j in 0..n {
                arrows.push(Arrow {
                    source: j,
                    target: i,
                    label: format!("f{i}{j}"),
                });
                for l in 0..n {
                    compose.insert((i * n + j, j * n + l), i * n + l);
                }
            }
        }
        let inverses = (0..n * n).map(|k| (k % n) * n + k / n).collect();
        Self::new(n, arrows, compose, inverses)
    }

    /// The cyclic group of order `m` as a one-object groupoid; arrow `k` is
    /// the generator to the power `k`.
    pub fn cyclic(m: usize) -> Result<Self> {
        let arrows = (0..m)
            .map(|k| Arrow {
                source: 0,
                target: 0,
                label: format!("g{k}"),
            })
            .collect();
        let mut compose = HashMap::new();
        for a in 0..m {
            for b in 0..m {
                compose.insert((a, b), (a + b) % m);
            }
        }
        let inverses = (0..m).map(|k| (m - k) % m).collect();
        Self::new(1, arrows, compose, inverses)
    }

    /// The product groupoid; arrow `(a, b)` sits at index `a·|G₂| + b`.
    pub fn product(&self, other: &FiniteGroupoid) -> Result<Self> {
        let (n1, n2) = (self.arrow_count(), other.arrow_count());
        let o2 = other.objects;
        let mut arrows = Vec::with_capacity(n1 * n2);
        for a in &self.arrows {
            for b in &other.arrows {
                arrows.push(Arrow {
                    source: a.source * o2 + b.source,
                    target: a.target * o2 + b.target,
                    label: format!("{}.{}", a.label, b.label),
                });
            }
        }
        let mut compose = HashMap::new();
        for (&(g1, h1), &gh1) in &self.compose {
            for (&(g2, h2), &gh2) in &other.compose {
                compose.insert((g1 * n2 + g2, h1 * n2 + h2), gh1 * n2 + gh2);
            }
        }
        let inverses = (0..n1 * n2)
            .map(|k| self.inverses[k / n2] * n2 + other.inverses[k % n2])
            .collect();
        Self::new(self.objects * o2, arrows, compose, inverses)
    }

    /// `ν(g) = g⁻¹` as a permutation matrix.
    pub fn inverse_map(&self) -> LinMap {
        LinMap::permutation(&self.inverses).expect("inverse is a bijection")
    }
}

/// The groupoid algebra: `μ(g⊗h) = g∘h` when composable and `0` otherwise,
/// `η = Σ identities`, `δ(g) = g⊗g`, `ε(g) = 1`.
pub fn groupoid_algebra(g: &FiniteGroupoid) -> WeakBimonoid {
    let n = g.arrow_count();
    let one = Scalar::one;
    let mu = LinMap::from_entries(
        n,
        n * n,
        g.compose
            .iter()
            .map(|(&(a, b), &ab)| (ab, a * n + b, one())),
    )
    .expect("indices in range");
    let eta = LinMap::from_entries(n, 1, (0..g.objects).map(|x| (g.identity(x), 0, one())))
        .expect("indices in range");
    let delta = LinMap::from_entries(n * n, n, (0..n).map(|a| (a * n + a, a, one())))
        .expect("indices in range");
    let eps = LinMap::from_entries(1, n, (0..n).map(|a| (0, a, one()))).expect("indices in range");
    WeakBimonoid::new(n, mu, eta, delta, eps).expect("signatures match")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn validation_rejects_missing_inverse() {
        let arrows = vec![
            Arrow {
                source: 0,
                target: 0,
                label: "e".into(),
            },
            Arrow {
                source: 0,
                target: 0,
                label: "x".into(),
            },
        ];
        // the monoid {e, x} with x·x = x
        let compose = [((0, 0), 0), ((0, 1), 1), ((1, 0), 1), ((1, 1), 1)]
            .into_iter()
            .collect();
        let e = FiniteGroupoid::new(1, arrows, compose, vec![0, 1]);
        assert!(matches!(e, Err(Error::InvalidGroupoid(_))));
    }

    #[test]
    fn pair_groupoid_matrix_units() {
        let g = FiniteGroupoid::pair(2).unwrap();
        assert_eq!(g.arrow_count(), 4);
        // f01 ∘ f10 = f00
        assert_eq!(g.compose(1, 2), Some(0));
        assert_eq!(g.compose(1, 1), None);
        assert_eq!(g.inverse(1), 2);
        assert_eq!(g.identity(1), 3);
    }

    #[test]
    fn product_with_cyclic_group() {
        let g = FiniteGroupoid::pair(2)
            .unwrap()
            .product(&FiniteGroupoid::cyclic(2).unwrap())
            .unwrap();
        assert_eq!((g.objects(), g.arrow_count()), (2, 8));
        let b = groupoid_algebra(&g);
        assert_eq!(b.dim(), 8);
    }
}
