use std::fmt;

use crate::error::{check_dim, Error, Result};
use crate::scalar::Scalar;

/// A linear map `k^dom -> k^cod` given by an exact `cod x dom` matrix.
///
/// Storage is column-sparse: column `j` holds the image of the `j`-th basis
/// vector as `(row, value)` pairs sorted by row with no explicit zeros. The
/// representation is canonical, so `==` is exact matrix equality.
///
/// Tensor products index their basis left-major: in `X ⊗ Y` the pair `(i, j)`
/// sits at `i * dim(Y) + j`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct LinMap {
    dom: usize,
    cod: usize,
    cols: Vec<Vec<(usize, Scalar)>>,
}

impl LinMap {
    pub fn zero(cod: usize, dom: usize) -> Self {
        LinMap {
            dom,
            cod,
            cols: vec![Vec::new(); dom],
        }
    }

    pub fn identity(n: usize) -> Self {
        LinMap {
            dom: n,
            cod: n,
            cols: (0..n).map(|i| vec![(i, Scalar::one())]).collect(),
        }
    }

    /// Builds a map from `(row, col, value)` triples; repeated positions add up.
    pub fn from_entries<I>(cod: usize, dom: usize, entries: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize, Scalar)>,
    {
        let mut cols: Vec<Vec<(usize, Scalar)>> = vec![Vec::new(); dom];
        for (r, c, v) in entries {
            if r >= cod {
                return Err(Error::DimensionMismatch {
                    context: "entry row index".into(),
                    expected: cod,
                    found: r,
                });
            }
            if c >= dom {
                return Err(Error::DimensionMismatch {
                    context: "entry column index".into(),
                    expected: dom,
                    found: c,
                });
            }
            cols[c].push((r, v));
        }
        for col in &mut cols {
            *col = normalize_column(std::mem::take(col));
        }
        Ok(LinMap { dom, cod, cols })
    }

    /// Builds a map from its rows. `rows.len()` must equal `cod` and each row
    /// must have `dom` entries.
    pub fn from_rows(cod: usize, dom: usize, rows: &[Vec<Scalar>]) -> Result<Self> {
        check_dim("row count", cod, rows.len())?;
        let mut cols: Vec<Vec<(usize, Scalar)>> = vec![Vec::new(); dom];
        for (r, row) in rows.iter().enumerate() {
            check_dim("row length", dom, row.len())?;
            for (c, v) in row.iter().enumerate() {
                if !v.is_zero() {
                    cols[c].push((r, v.clone()));
                }
            }
        }
        Ok(LinMap { dom, cod, cols })
    }

    /// Integer-matrix convenience constructor, mostly for tests and generators.
    pub fn from_int_rows(rows: &[&[i64]]) -> Self {
        let cod = rows.len();
        let dom = rows.first().map_or(0, |r| r.len());
        let rows: Vec<Vec<Scalar>> = rows
            .iter()
            .map(|r| r.iter().map(|&x| Scalar::from_int(x)).collect())
            .collect();
        LinMap::from_rows(cod, dom, &rows).expect("ragged integer matrix")
    }

    /// A `n x 1` column vector.
    pub fn column_vector(values: &[Scalar]) -> Self {
        let col = values
            .iter()
            .enumerate()
            .filter(|(_, v)| !v.is_zero())
            .map(|(i, v)| (i, v.clone()))
            .collect();
        LinMap {
            dom: 1,
            cod: values.len(),
            cols: vec![col],
        }
    }

    /// A `1 x n` row vector.
    pub fn row_vector(values: &[Scalar]) -> Self {
        LinMap {
            dom: values.len(),
            cod: 1,
            cols: values
                .iter()
                .map(|v| {
                    if v.is_zero() {
                        Vec::new()
                    } else {
                        vec![(0, v.clone())]
                    }
                })
                .collect(),
        }
    }

    /// Builds a map from the images of the basis vectors, given sparsely.
    pub fn from_columns(cod: usize, columns: Vec<Vec<(usize, Scalar)>>) -> Result<Self> {
        let dom = columns.len();
        let mut cols = Vec::with_capacity(dom);
        for col in columns {
            if let Some((r, _)) = col.iter().find(|(r, _)| *r >= cod) {
                return Err(Error::DimensionMismatch {
                    context: "column entry".into(),
                    expected: cod,
                    found: *r,
                });
            }
            cols.push(normalize_column(col));
        }
        Ok(LinMap { dom, cod, cols })
    }

    /// The permutation matrix sending basis vector `i` to `perm[i]`.
    pub fn permutation(perm: &[usize]) -> Result<Self> {
        let n = perm.len();
        let mut seen = vec![false; n];
        for &p in perm {
            if p >= n || seen[p] {
                return Err(Error::Precondition(format!(
                    "{perm:?} is not a permutation"
                )));
            }
            seen[p] = true;
        }
        Ok(LinMap {
            dom: n,
            cod: n,
            cols: perm.iter().map(|&p| vec![(p, Scalar::one())]).collect(),
        })
    }

    pub fn dom(&self) -> usize {
        self.dom
    }

    pub fn cod(&self) -> usize {
        self.cod
    }

    pub fn is_square(&self) -> bool {
        self.dom == self.cod
    }

    pub fn get(&self, row: usize, col: usize) -> Scalar {
        assert!(row < self.cod && col < self.dom, "index out of range");
        match self.cols[col].binary_search_by_key(&row, |(r, _)| *r) {
            Ok(k) => self.cols[col][k].1.clone(),
            Err(_) => Scalar::zero(),
        }
    }

    /// Sparse image of the `j`-th basis vector.
    pub fn column(&self, j: usize) -> &[(usize, Scalar)] {
        &self.cols[j]
    }

    pub fn columns(&self) -> &[Vec<(usize, Scalar)>] {
        &self.cols
    }

    pub fn nnz(&self) -> usize {
        self.cols.iter().map(Vec::len).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.cols.iter().all(Vec::is_empty)
    }

    pub fn is_identity(&self) -> bool {
        self.is_square()
            && self
                .cols
                .iter()
                .enumerate()
                .all(|(j, c)| c.len() == 1 && c[0].0 == j && c[0].1.is_one())
    }

    /// Dense row-major copy of the entries.
    pub fn to_rows(&self) -> Vec<Vec<Scalar>> {
        let mut rows = vec![vec![Scalar::zero(); self.dom]; self.cod];
        for (c, col) in self.cols.iter().enumerate() {
            for (r, v) in col {
                rows[*r][c] = v.clone();
            }
        }
        rows
    }

    /// Sparse rows, each sorted by column.
    pub fn to_sparse_rows(&self) -> Vec<Vec<(usize, Scalar)>> {
        let mut rows: Vec<Vec<(usize, Scalar)>> = vec![Vec::new(); self.cod];
        for (c, col) in self.cols.iter().enumerate() {
            for (r, v) in col {
                rows[*r].push((c, v.clone()));
            }
        }
        rows
    }

    pub fn transpose(&self) -> LinMap {
        LinMap {
            dom: self.cod,
            cod: self.dom,
            cols: self.to_sparse_rows(),
        }
    }

    /// `g ∘ self`: diagram-order composition.
    pub fn then(&self, g: &LinMap) -> Result<LinMap> {
        compose(g, self)
    }

    pub fn scale(&self, s: &Scalar) -> LinMap {
        if s.is_zero() {
            return LinMap::zero(self.cod, self.dom);
        }
        LinMap {
            dom: self.dom,
            cod: self.cod,
            cols: self
                .cols
                .iter()
                .map(|c| c.iter().map(|(r, v)| (*r, v * s)).collect())
                .collect(),
        }
    }

    pub fn add(&self, other: &LinMap) -> Result<LinMap> {
        self.combine(other, false)
    }

    pub fn sub(&self, other: &LinMap) -> Result<LinMap> {
        self.combine(other, true)
    }

    fn combine(&self, other: &LinMap, negate: bool) -> Result<LinMap> {
        check_dim("sum domain", self.dom, other.dom)?;
        check_dim("sum codomain", self.cod, other.cod)?;
        let cols = self
            .cols
            .iter()
            .zip(&other.cols)
            .map(|(a, b)| {
                merge_axpy(
                    a,
                    b,
                    &if negate {
                        -Scalar::one()
                    } else {
                        Scalar::one()
                    },
                )
            })
            .collect();
        Ok(LinMap {
            dom: self.dom,
            cod: self.cod,
            cols,
        })
    }

    /// Flattens a map row-major into a `cod*dom x 1` column.
    pub fn vectorize(&self) -> LinMap {
        let n = self.dom;
        let mut col: Vec<(usize, Scalar)> = Vec::with_capacity(self.nnz());
        for (c, entries) in self.cols.iter().enumerate() {
            for (r, v) in entries {
                col.push((r * n + c, v.clone()));
            }
        }
        col.sort_by_key(|(i, _)| *i);
        LinMap {
            dom: 1,
            cod: self.cod * self.dom,
            cols: vec![col],
        }
    }

    /// Inverse of [`vectorize`](Self::vectorize).
    pub fn unvectorize(v: &LinMap, cod: usize, dom: usize) -> Result<LinMap> {
        check_dim("vector width", 1, v.dom)?;
        check_dim("vector length", cod * dom, v.cod)?;
        let entries = v.cols[0].iter().map(|(i, x)| (i / dom, i % dom, x.clone()));
        LinMap::from_entries(cod, dom, entries)
    }
}

fn normalize_column(mut col: Vec<(usize, Scalar)>) -> Vec<(usize, Scalar)> {
    col.sort_by_key(|(r, _)| *r);
    let mut out: Vec<(usize, Scalar)> = Vec::with_capacity(col.len());
    for (r, v) in col {
        match out.last_mut() {
            Some((lr, lv)) if *lr == r => *lv += &v,
            _ => out.push((r, v)),
        }
    }
    out.retain(|(_, v)| !v.is_zero());
    out
}

/// `a + s*b` for sorted sparse vectors.
pub(crate) fn merge_axpy(
    a: &[(usize, Scalar)],
    b: &[(usize, Scalar)],
    s: &Scalar,
) -> Vec<(usize, Scalar)> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        if j == b.len() || (i < a.len() && a[i].0 < b[j].0) {
            out.push(a[i].clone());
            i += 1;
        } else if i == a.len() || b[j].0 < a[i].0 {
            out.push((b[j].0, s * &b[j].1));
            j += 1;
        } else {
            let v = &a[i].1 + &(s * &b[j].1);
            if !v.is_zero() {
                out.push((a[i].0, v));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

/// `g ∘ f`. Fails unless `f.cod == g.dom`.
pub fn compose(g: &LinMap, f: &LinMap) -> Result<LinMap> {
    if f.cod != g.dom {
        return Err(Error::DimensionMismatch {
            context: "composition".into(),
            expected: g.dom,
            found: f.cod,
        });
    }
    let mut acc = vec![Scalar::zero(); g.cod];
    let mut touched: Vec<usize> = Vec::new();
    let mut mark = vec![false; g.cod];
    let cols = f
        .cols
        .iter()
        .map(|fcol| {
            for (k, fv) in fcol {
                for (r, gv) in &g.cols[*k] {
                    if !mark[*r] {
                        mark[*r] = true;
                        touched.push(*r);
                    }
                    acc[*r] += &(fv * gv);
                }
            }
            touched.sort_unstable();
            let mut col = Vec::with_capacity(touched.len());
            for &r in &touched {
                let v = std::mem::take(&mut acc[r]);
                mark[r] = false;
                if !v.is_zero() {
                    col.push((r, v));
                }
            }
            touched.clear();
            col
        })
        .collect();
    Ok(LinMap {
        dom: f.dom,
        cod: g.cod,
        cols,
    })
}

/// Composes a path given in diagram order: `path(&[f, g, h]) = h ∘ g ∘ f`.
pub fn path(maps: &[&LinMap]) -> Result<LinMap> {
    let (first, rest) = maps
        .split_first()
        .ok_or_else(|| Error::Precondition("empty composite".into()))?;
    rest.iter().try_fold((*first).clone(), |acc, m| acc.then(m))
}

/// Kronecker product `f ⊗ g`, left factor most significant.
pub fn tensor(f: &LinMap, g: &LinMap) -> LinMap {
    let mut cols = Vec::with_capacity(f.dom * g.dom);
    for fcol in &f.cols {
        for gcol in &g.cols {
            let mut col = Vec::with_capacity(fcol.len() * gcol.len());
            for (r1, v1) in fcol {
                for (r2, v2) in gcol {
                    col.push((r1 * g.cod + r2, v1 * v2));
                }
            }
            cols.push(col);
        }
    }
    LinMap {
        dom: f.dom * g.dom,
        cod: f.cod * g.cod,
        cols,
    }
}

/// Tensor of several maps, left to right; the empty product is `id_1`.
pub fn tensor_all(maps: &[&LinMap]) -> LinMap {
    maps.iter()
        .fold(LinMap::identity(1), |acc, m| tensor(&acc, m))
}

/// The symmetry `k^m ⊗ k^n -> k^n ⊗ k^m`, `(i, j) ↦ (j, i)`.
pub fn swap(m: usize, n: usize) -> LinMap {
    let perm: Vec<usize> = (0..m * n).map(|idx| (idx % n) * m + idx / n).collect();
    LinMap::permutation(&perm).expect("swap is a permutation")
}

impl fmt::Debug for LinMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LinMap({}x{})", self.cod, self.dom)?;
        if self.cod * self.dom <= 256 {
            write!(f, " {self}")?;
        }
        Ok(())
    }
}

impl fmt::Display for LinMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, row) in self.to_rows().iter().enumerate() {
            if i > 0 {
                write!(f, "; ")?;
            }
            let cells: Vec<String> = row.iter().map(ToString::to_string).collect();
            write!(f, "{}", cells.join(" "))?;
        }
        write!(f, "]")
    }
}
