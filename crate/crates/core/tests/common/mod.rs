//! Dense reference arithmetic over `BigRational`, written independently of
//! the sparse engine, plus table-level oracles for the corpus.
#![allow(dead_code, clippy::needless_range_loop)]

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::ChaCha8Rng;
use weakhopf::zoo::{FiniteGroupoid, FiniteMonoidTable};
use weakhopf::{LinMap, Scalar, WeakBimonoid};

pub type Q = BigRational;

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Dense {
    pub rows: usize,
    pub cols: usize,
    pub a: Vec<Vec<Q>>,
}

pub fn q(n: i64) -> Q {
    Q::from_integer(BigInt::from(n))
}

impl Dense {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Dense {
            rows,
            cols,
            a: vec![vec![Q::zero(); cols]; rows],
        }
    }

    pub fn id(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.a[i][i] = Q::one();
        }
        m
    }

    /// `e_i ⊗ e_j ↦ e_j ⊗ e_i` on `k^m ⊗ k^n`, basis index `i·n + j`.
    pub fn swap(m: usize, n: usize) -> Self {
        let mut s = Self::zeros(m * n, m * n);
        for i in 0..m {
            for j in 0..n {
                s.a[j * m + i][i * n + j] = Q::one();
            }
        }
        s
    }

    pub fn of(f: &LinMap) -> Self {
        let mut m = Self::zeros(f.cod(), f.dom());
        for (r, row) in f.to_rows().into_iter().enumerate() {
            for (c, v) in row.into_iter().enumerate() {
                m.a[r][c] = Q::new(v.numer(), v.denom());
            }
        }
        m
    }

    /// `self ∘ other`.
    pub fn after(&self, other: &Dense) -> Dense {
        assert_eq!(self.cols, other.rows, "composable");
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                if self.a[i][k].is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    if !other.a[k][j].is_zero() {
                        out.a[i][j] += &self.a[i][k] * &other.a[k][j];
                    }
                }
            }
        }
        out
    }

    pub fn kron(&self, other: &Dense) -> Dense {
        let mut out = Self::zeros(self.rows * other.rows, self.cols * other.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                if self.a[i][j].is_zero() {
                    continue;
                }
                for k in 0..other.rows {
                    for l in 0..other.cols {
                        out.a[i * other.rows + k][j * other.cols + l] =
                            &self.a[i][j] * &other.a[k][l];
                    }
                }
            }
        }
        out
    }

    pub fn is_identity(&self) -> bool {
        *self == Self::id(self.rows)
    }
}

/// Composite of maps listed in the order they are applied.
pub fn chain(maps: &[&Dense]) -> Dense {
    let mut acc = maps[0].clone();
    for m in &maps[1..] {
        acc = m.after(&acc);
    }
    acc
}

pub fn kron(maps: &[&Dense]) -> Dense {
    let mut acc = maps[0].clone();
    for m in &maps[1..] {
        acc = acc.kron(m);
    }
    acc
}

/// Dense copies of the structure maps.
pub struct Dn {
    pub d: usize,
    pub mu: Dense,
    pub eta: Dense,
    pub delta: Dense,
    pub eps: Dense,
    pub one: Dense,
}

impl Dn {
    pub fn of(b: &WeakBimonoid) -> Self {
        Dn {
            d: b.dim(),
            mu: Dense::of(b.mu()),
            eta: Dense::of(b.eta()),
            delta: Dense::of(b.delta()),
            eps: Dense::of(b.eps()),
            one: Dense::id(b.dim()),
        }
    }

    pub fn sw(&self) -> Dense {
        Dense::swap(self.d, self.d)
    }

    /// Both sides of every monoid, comonoid and compatibility law for the
    /// symmetric swap, keyed by report entry name.
    pub fn laws(&self) -> Vec<(&'static str, Dense, Dense)> {
        let (mu, eta, delta, eps, one) = (&self.mu, &self.eta, &self.delta, &self.eps, &self.one);
        let c = self.sw();
        let mid = |f: &Dense| kron(&[one, f, one]);
        vec![
            (
                "associativity",
                chain(&[&kron(&[mu, one]), mu]),
                chain(&[&kron(&[one, mu]), mu]),
            ),
            ("unit.left", chain(&[&kron(&[eta, one]), mu]), one.clone()),
            ("unit.right", chain(&[&kron(&[one, eta]), mu]), one.clone()),
            (
                "coassociativity",
                chain(&[delta, &kron(&[delta, one])]),
                chain(&[delta, &kron(&[one, delta])]),
            ),
            (
                "counit.left",
                chain(&[delta, &kron(&[eps, one])]),
                one.clone(),
            ),
            (
                "counit.right",
                chain(&[delta, &kron(&[one, eps])]),
                one.clone(),
            ),
            (
                "counit_target.braided",
                chain(&[
                    &mid(eta),
                    &mid(delta),
                    &mid(&c),
                    &kron(&[mu, mu]),
                    &kron(&[eps, one]),
                ]),
                chain(&[
                    &kron(&[one, delta]),
                    &kron(&[one, &c]),
                    &kron(&[mu, one]),
                    &kron(&[eps, one]),
                ]),
            ),
            (
                "counit_target.plain",
                chain(&[&mid(eta), &mid(delta), &kron(&[mu, mu]), &kron(&[eps, one])]),
                chain(&[&kron(&[one, delta]), &kron(&[mu, one]), &kron(&[eps, one])]),
            ),
            (
                "unit_comult.braided",
                chain(&[eta, delta, &kron(&[delta, one])]),
                chain(&[
                    &kron(&[eta, eta]),
                    &kron(&[delta, delta]),
                    &mid(&c),
                    &mid(mu),
                ]),
            ),
            (
                "unit_comult.plain",
                chain(&[eta, delta, &kron(&[delta, one])]),
                chain(&[&kron(&[eta, eta]), &kron(&[delta, delta]), &mid(mu)]),
            ),
            (
                "comult_multiplicative",
                chain(&[mu, delta]),
                chain(&[&kron(&[delta, delta]), &mid(&c), &kron(&[mu, mu])]),
            ),
            (
                "counit_mult.braided",
                chain(&[&kron(&[mu, one]), mu, eps]),
                chain(&[&mid(delta), &mid(&c), &kron(&[mu, mu]), &kron(&[eps, eps])]),
            ),
            (
                "counit_mult.plain",
                chain(&[&kron(&[mu, one]), mu, eps]),
                chain(&[&mid(delta), &kron(&[mu, mu]), &kron(&[eps, eps])]),
            ),
        ]
    }

    /// `f ∗ g = μ∘(f⊗g)∘δ`.
    pub fn conv(&self, f: &Dense, g: &Dense) -> Dense {
        chain(&[&self.delta, &f.kron(g), &self.mu])
    }
}

/// `g ↦ g⁻¹`, found by scanning the composition table for the arrow whose
/// composite with `g` is an identity.
pub fn groupoid_inverse_oracle(g: &FiniteGroupoid) -> Dense {
    let n = g.arrow_count();
    let is_identity = |a: usize| {
        let ar = &g.arrows()[a];
        ar.source == ar.target && (0..n).all(|h| g.compose(a, h).is_none_or(|ah| ah == h))
    };
    let mut m = Dense::zeros(n, n);
    for a in 0..n {
        let inv = (0..n)
            .find(|&b| {
                g.compose(a, b).is_some_and(is_identity) && g.compose(b, a).is_some_and(is_identity)
            })
            .expect("groupoid");
        m.a[inv][a] = Q::one();
    }
    m
}

/// `t(g) = id_{source g}` on a groupoid algebra.
pub fn groupoid_sqcap_oracle(g: &FiniteGroupoid) -> Dense {
    let n = g.arrow_count();
    let mut m = Dense::zeros(n, n);
    for a in 0..n {
        let x = g.arrows()[a].source;
        let idx = (0..n)
            .find(|&e| {
                let ar = &g.arrows()[e];
                ar.source == x && ar.target == x && g.compose(a, e) == Some(a)
            })
            .expect("identity");
        m.a[idx][a] = Q::one();
    }
    m
}

/// `t(m) = 1` on a monoid algebra.
pub fn monoid_sqcap_oracle(m: &FiniteMonoidTable) -> Dense {
    let n = m.size();
    let mut out = Dense::zeros(n, n);
    for a in 0..n {
        out.a[m.unit()][a] = Q::one();
    }
    out
}

/// Every element has a two-sided inverse.
pub fn is_group_oracle(m: &FiniteMonoidTable) -> bool {
    let n = m.size();
    (0..n).all(|a| (0..n).any(|b| m.product(a, b) == m.unit() && m.product(b, a) == m.unit()))
}

/// Rank by dense Gaussian elimination.
pub fn dense_rank(m: &Dense) -> usize {
    let mut a = m.a.clone();
    let mut rank = 0;
    for col in 0..m.cols {
        let Some(p) = (rank..m.rows).find(|&r| !a[r][col].is_zero()) else {
            continue;
        };
        a.swap(rank, p);
        let pivot = a[rank][col].clone();
        for r in 0..m.rows {
            if r != rank && !a[r][col].is_zero() {
                let f = &a[r][col] / &pivot;
                for c in col..m.cols {
                    let v = &f * &a[rank][c];
                    a[r][c] -= v;
                }
            }
        }
        rank += 1;
    }
    rank
}

pub fn hcat(a: &Dense, b: &Dense) -> Dense {
    let mut out = Dense::zeros(a.rows, a.cols + b.cols);
    for r in 0..a.rows {
        out.a[r][..a.cols].clone_from_slice(&a.a[r]);
        out.a[r][a.cols..].clone_from_slice(&b.a[r]);
    }
    out
}

pub fn int_map(rows: &[Vec<i64>]) -> LinMap {
    let cod = rows.len();
    let dom = rows.first().map_or(0, Vec::len);
    let entries = rows.iter().enumerate().flat_map(|(r, row)| {
        row.iter()
            .enumerate()
            .filter(|(_, v)| **v != 0)
            .map(move |(c, v)| (r, c, Scalar::from_int(*v)))
    });
    LinMap::from_entries(cod, dom, entries).unwrap()
}

/// `U·V` with `U = [I; M]`, `V = [I − N·M, N]`, so that `V·U = I` and the
/// product is an idempotent of rank `k`; then conjugated by a permutation.
pub fn random_idempotent(rng: &mut ChaCha8Rng, n: usize, k: usize) -> Vec<Vec<i64>> {
    let m: Vec<Vec<i64>> = (0..n - k)
        .map(|_| (0..k).map(|_| rng.gen_range(-2..=2)).collect())
        .collect();
    let nn: Vec<Vec<i64>> = (0..k)
        .map(|_| (0..n - k).map(|_| rng.gen_range(-2..=2)).collect())
        .collect();
    let mut u = vec![vec![0i64; k]; n];
    for i in 0..k {
        u[i][i] = 1;
    }
    for i in 0..n - k {
        u[k + i].clone_from(&m[i]);
    }
    let mut v = vec![vec![0i64; n]; k];
    for i in 0..k {
        for j in 0..k {
            let nm: i64 = (0..n - k).map(|l| nn[i][l] * m[l][j]).sum();
            v[i][j] = i64::from(i == j) - nm;
        }
        for j in 0..n - k {
            v[i][k + j] = nn[i][j];
        }
    }
    let mut perm: Vec<usize> = (0..n).collect();
    perm.shuffle(rng);
    let mut e = vec![vec![0i64; n]; n];
    for r in 0..n {
        for c in 0..n {
            e[perm[r]][perm[c]] = (0..k).map(|l| u[r][l] * v[l][c]).sum();
        }
    }
    e
}
