//! Exact Gauss–Jordan elimination on sparse rows, and what is built on it:
//! rank, deterministic idempotent splitting, linear solving and inversion.

use crate::error::{check_dim, Error, Result};
use crate::scalar::Scalar;

use super::linmap::{compose, merge_axpy, LinMap};

type SparseRow = Vec<(usize, Scalar)>;

/// Reduced row echelon form: `rows[k]` has a leading 1 at `pivots[k]`, and
/// every other row is zero in that column. Pivots are strictly increasing.
#[derive(Debug, Clone)]
pub struct Rref {
    pub rows: Vec<SparseRow>,
    pub pivots: Vec<usize>,
    pub ncols: usize,
}

/// Row-reduces `rows` (each sorted by column). Ties between candidate pivot
/// rows are broken by the lowest original row index.
pub fn rref(rows: Vec<SparseRow>, ncols: usize) -> Rref {
    let mut pending: Vec<SparseRow> = rows.into_iter().filter(|r| !r.is_empty()).collect();
    let mut done: Vec<SparseRow> = Vec::new();
    let mut pivots: Vec<usize> = Vec::new();

    // Pending rows are already reduced against every pivot found so far, so
    // the next pivot column is the smallest leading column among them.
    while let Some(col) = pending.iter().filter_map(|r| r.first().map(|e| e.0)).min() {
        let idx = pending
            .iter()
            .position(|r| r.first().map(|e| e.0) == Some(col))
            .expect("pivot row exists");
        let mut prow = pending.remove(idx);
        let inv = prow[0].1.recip().expect("leading entry is nonzero");
        if !inv.is_one() {
            for e in prow.iter_mut() {
                e.1 = &e.1 * &inv;
            }
        }
        for row in pending.iter_mut().chain(done.iter_mut()) {
            if let Ok(k) = row.binary_search_by_key(&col, |e| e.0) {
                let factor = -&row[k].1;
                *row = merge_axpy(row, &prow, &factor);
            }
        }
        pending.retain(|r| !r.is_empty());
        done.push(prow);
        pivots.push(col);
    }
    Rref {
        rows: done,
        pivots,
        ncols,
    }
}

pub fn rank(f: &LinMap) -> usize {
    // Column space is smaller to reduce when the map is wide.
    if f.dom() <= f.cod() {
        rref(f.columns().to_vec(), f.cod()).pivots.len()
    } else {
        rref(f.to_sparse_rows(), f.dom()).pivots.len()
    }
}

/// A retraction/section pair `(P, I)` with `I ∘ P = e` and `P ∘ I = id`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SplitIdempotent {
    pub retraction: LinMap,
    pub section: LinMap,
}

impl SplitIdempotent {
    pub fn rank(&self) -> usize {
        self.section.dom()
    }
}

/// Splits an idempotent. The section's columns are the reduced column echelon
/// basis of the image, so the result only depends on `image(e)` and `e`.
pub fn split_idempotent(e: &LinMap) -> Result<SplitIdempotent> {
    if !e.is_square() {
        return Err(Error::NotSquare {
            cod: e.cod(),
            dom: e.dom(),
        });
    }
    if compose(e, e)? != *e {
        return Err(Error::NotIdempotent);
    }
    let n = e.cod();
    let red = rref(e.columns().to_vec(), n);
    let section = LinMap::from_columns(n, red.rows.clone())?;
    // Image vectors have coordinates equal to their entries at the pivot rows.
    let rows = e.to_sparse_rows();
    let mut entries = Vec::new();
    for (k, &p) in red.pivots.iter().enumerate() {
        for (c, v) in &rows[p] {
            entries.push((k, *c, v.clone()));
        }
    }
    let retraction = LinMap::from_entries(red.pivots.len(), n, entries)?;
    Ok(SplitIdempotent {
        retraction,
        section,
    })
}

/// Outcome of [`solve_linear`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Solution {
    /// A particular solution (free variables set to zero) and the dimension of
    /// the solution space; `nullity > 0` flags non-uniqueness.
    Solved {
        x: LinMap,
        nullity: usize,
    },
    NoSolution,
}

impl Solution {
    pub fn solution(&self) -> Option<&LinMap> {
        match self {
            Solution::Solved { x, .. } => Some(x),
            Solution::NoSolution => None,
        }
    }

    pub fn is_unique(&self) -> bool {
        matches!(self, Solution::Solved { nullity: 0, .. })
    }
}

/// Solves the stacked system `op_k · x = rhs_k` for a column vector `x`.
///
/// Every operator must share the same domain (the unknown space) and each
/// `rhs_k` must be a column with `op_k.cod()` entries.
pub fn solve_linear(constraints: &[(LinMap, LinMap)]) -> Result<Solution> {
    let n = match constraints.first() {
        Some((op, _)) => op.dom(),
        None => return Err(Error::Precondition("no constraints".into())),
    };
    let mut rows: Vec<SparseRow> = Vec::new();
    for (op, rhs) in constraints {
        check_dim("unknown space", n, op.dom())?;
        check_dim("right-hand side width", 1, rhs.dom())?;
        check_dim("right-hand side length", op.cod(), rhs.cod())?;
        let mut b = vec![Scalar::zero(); op.cod()];
        for (r, v) in rhs.column(0) {
            b[*r] = v.clone();
        }
        for (r, mut row) in op.to_sparse_rows().into_iter().enumerate() {
            if !b[r].is_zero() {
                row.push((n, std::mem::take(&mut b[r])));
            }
            rows.push(row);
        }
    }
    let red = rref(rows, n + 1);
    if red.pivots.last() == Some(&n) {
        return Ok(Solution::NoSolution);
    }
    let mut x = vec![Scalar::zero(); n];
    for (row, &p) in red.rows.iter().zip(&red.pivots) {
        if let Some((c, v)) = row.last() {
            if *c == n {
                x[p] = v.clone();
            }
        }
    }
    Ok(Solution::Solved {
        x: LinMap::column_vector(&x),
        nullity: n - red.pivots.len(),
    })
}

pub fn is_invertible(f: &LinMap) -> bool {
    f.is_square() && rank(f) == f.dom()
}

pub fn inverse(f: &LinMap) -> Result<LinMap> {
    if !f.is_square() {
        return Err(Error::NotInvertible);
    }
    let n = f.dom();
    let rows: Vec<SparseRow> = f
        .to_sparse_rows()
        .into_iter()
        .enumerate()
        .map(|(i, mut r)| {
            r.push((n + i, Scalar::one()));
            r
        })
        .collect();
    let red = rref(rows, 2 * n);
    // The augmented block has full rank, so there are exactly n pivots; f is
    // invertible iff they all land in its own columns.
    if red.pivots.iter().enumerate().any(|(k, &p)| k != p) {
        return Err(Error::NotInvertible);
    }
    let entries = red.rows.iter().take(n).enumerate().flat_map(|(i, row)| {
        row.iter()
            .filter(|(c, _)| *c >= n)
            .map(move |(c, v)| (i, c - n, v.clone()))
    });
    LinMap::from_entries(n, n, entries)
}
