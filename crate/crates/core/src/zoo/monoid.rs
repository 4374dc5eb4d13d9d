use crate::error::{Error, Result};
use crate::lincore::LinMap;
use crate::scalar::Scalar;
use crate::wbm::WeakBimonoid;

/// A finite monoid given by its multiplication table `table[a][b] = a·b`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteMonoidTable {
    table: Vec<Vec<usize>>,
    unit: usize,
}

impl FiniteMonoidTable {
    pub fn new(table: Vec<Vec<usize>>, unit: usize) -> Result<Self> {
        let n = table.len();
        let bad = |m: String| Err(Error::InvalidMonoid(m));
        if n == 0 {
            return bad("empty table".into());
        }
        if unit >= n {
            return bad(format!("unit {unit} out of range"));
        }
        for (a, row) in table.iter().enumerate() {
            if row.len() != n || row.iter().any(|&c| c >= n) {
                return bad(format!("row {a} is malformed"));
            }
        }
        for a in 0..n {
            if table[unit][a] != a || table[a][unit] != a {
                return bad(format!("{unit} is not a unit for {a}"));
            }
            for b in 0..n {
                for c in 0..n {
                    if table[table[a][b]][c] != table[a][table[b][c]] {
                        return bad(format!("not associative at ({a}, {b}, {c})"));
                    }
                }
            }
        }
        Ok(FiniteMonoidTable { table, unit })
    }

    /// `Z/m` with `k` the generator to the power `k`.
    pub fn cyclic(m: usize) -> Result<Self> {
        let table = (0..m)
            .map(|a| (0..m).map(|b| (a + b) % m).collect())
            .collect();
        Self::new(table, 0)
    }

    pub fn size(&self) -> usize {
        self.table.len()
    }

    pub fn unit(&self) -> usize {
        self.unit
    }

    pub fn product(&self, a: usize, b: usize) -> usize {
        self.table[a][b]
    }

    pub fn is_group(&self) -> bool {
        (0..self.size()).all(|a| (0..self.size()).any(|b| self.table[a][b] == self.unit))
    }

    /// The inverse permutation when the monoid is a group.
    pub fn inverse_map(&self) -> Option<LinMap> {
        let perm: Option<Vec<usize>> = (0..self.size())
            .map(|a| (0..self.size()).find(|&b| self.table[a][b] == self.unit))
            .collect();
        perm.map(|p| LinMap::permutation(&p).expect("group inverse is a bijection"))
    }
}

/// The monoid algebra with `δ(m) = m⊗m`, `ε(m) = 1`.
pub fn monoid_algebra(m: &FiniteMonoidTable) -> WeakBimonoid {
    let n = m.size();
    let one = Scalar::one;
    let mu = LinMap::from_entries(
        n,
        n * n,
        (0..n * n).map(|k| (m.product(k / n, k % n), k, one())),
    )
    .expect("indices in range");
    let eta = LinMap::from_entries(n, 1, [(m.unit(), 0, one())]).expect("indices in range");
    let delta = LinMap::from_entries(n * n, n, (0..n).map(|a| (a * n + a, a, one())))
        .expect("indices in range");
    let eps = LinMap::from_entries(1, n, (0..n).map(|a| (0, a, one()))).expect("indices in range");
    WeakBimonoid::new(n, mu, eta, delta, eps).expect("signatures match")
}
