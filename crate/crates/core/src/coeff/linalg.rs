//! Exact linear algebra over `Q(q)`.
//!
//! Systems are eliminated fraction-free over `Z[q, q^-1]`: rows are combined
//! by cross-multiplication (or by exact unit division when the pivot is
//! `±q^k`) and quotients are only formed when reading off a solution.
//! Rows are stored sparsely since the systems coming out of normal-form
//! computations have a handful of nonzeros per row.

use std::collections::BTreeMap;

use crate::coeff::{LaurentPoly, RationalFunction};

pub type SparseRow = BTreeMap<usize, LaurentPoly>;

#[derive(Debug, Clone, Copy, PartialEq, Eq, thiserror::Error)]
pub enum SolveError {
    #[error("the system has no solution")]
    NoSolution,
    #[error("the system has more than one solution")]
    NonUnique,
    #[error("matrix is not rectangular or does not match the right-hand side")]
    Shape,
}

/// A system after Gauss–Jordan elimination on its first `unknowns` columns.
///
/// Columns at index `unknowns..` are right-hand sides carried along through
/// the same row operations.
#[derive(Debug, Clone)]
pub struct Echelon {
    unknowns: usize,
    rows: Vec<SparseRow>,
    /// pivot row for each unknown column
    pivot_of_col: Vec<Option<usize>>,
    is_pivot_row: Vec<bool>,
}

fn pivot_cost(p: &LaurentPoly) -> (u8, usize, u64) {
    if p.is_unit() {
        return (0, 0, 0);
    }
    let bits = p.terms().map(|(_, c)| c.bits()).max().unwrap_or(0);
    (1, p.num_terms(), bits)
}

/// `target -= factor * source`
fn row_sub_mul(target: &mut SparseRow, factor: &LaurentPoly, source: &SparseRow) {
    for (&c, v) in source {
        let entry = target.entry(c).or_default();
        let mut delta = LaurentPoly::zero();
        delta.add_mul(factor, v);
        *entry -= &delta;
        if entry.is_zero() {
            target.remove(&c);
        }
    }
}

fn row_scale(row: &mut SparseRow, factor: &LaurentPoly) {
    for v in row.values_mut() {
        *v = &*v * factor;
    }
}

/// Divide a row by the gcd of its entries.
fn make_primitive(row: &mut SparseRow) {
    let mut g = LaurentPoly::zero();
    for v in row.values() {
        g = g.gcd(v);
        if g.is_one() {
            return;
        }
    }
    if g.is_zero() || g.is_one() {
        return;
    }
    for v in row.values_mut() {
        *v = v.div_exact(&g).expect("gcd divides every entry");
    }
}

impl Echelon {
    /// Gauss–Jordan elimination of `rows` over the columns `0..unknowns`.
    pub fn new(mut rows: Vec<SparseRow>, unknowns: usize) -> Echelon {
        let mut pivot_of_col = vec![None; unknowns];
        let mut is_pivot_row = vec![false; rows.len()];
        for col in 0..unknowns {
            let best = rows
                .iter()
                .enumerate()
                .filter(|(r, row)| !is_pivot_row[*r] && row.contains_key(&col))
                .min_by_key(|(r, row)| (pivot_cost(&row[&col]), row.len(), *r))
                .map(|(r, _)| r);
            let Some(prow) = best else { continue };
            is_pivot_row[prow] = true;
            pivot_of_col[col] = Some(prow);
            let pivot_row = rows[prow].clone();
            let pv = &pivot_row[&col];
            let unit_inv = pv.unit_inverse();
            for (r, row) in rows.iter_mut().enumerate() {
                if r == prow {
                    continue;
                }
                let Some(e) = row.get(&col).cloned() else {
                    continue;
                };
                match &unit_inv {
                    Some(inv) => row_sub_mul(row, &(&e * inv), &pivot_row),
                    None => {
                        row_scale(row, pv);
                        row_sub_mul(row, &e, &pivot_row);
                        make_primitive(row);
                    }
                }
                debug_assert!(!row.contains_key(&col));
            }
        }
        Echelon {
            unknowns,
            rows,
            pivot_of_col,
            is_pivot_row,
        }
    }

    pub fn rank(&self) -> usize {
        self.pivot_of_col.iter().filter(|p| p.is_some()).count()
    }

    pub fn unknowns(&self) -> usize {
        self.unknowns
    }

    /// Whether the right-hand side stored in column `rhs` lies in the span
    /// of the unknown columns.
    pub fn is_consistent(&self, rhs: usize) -> bool {
        self.rows
            .iter()
            .zip(&self.is_pivot_row)
            .all(|(row, &piv)| piv || !row.contains_key(&rhs))
    }

    /// The unique solution for the right-hand side in column `rhs`.
    pub fn solve(&self, rhs: usize) -> Result<Vec<RationalFunction>, SolveError> {
        if !self.is_consistent(rhs) {
            return Err(SolveError::NoSolution);
        }
        if self.rank() < self.unknowns {
            return Err(SolveError::NonUnique);
        }
        let mut x = Vec::with_capacity(self.unknowns);
        for (col, prow) in self.pivot_of_col.iter().enumerate() {
            let row = &self.rows[prow.expect("full rank")];
            let b = row.get(&rhs).cloned().unwrap_or_default();
            let pv = row[&col].clone();
            x.push(RationalFunction::new(b, pv).expect("pivot is nonzero"));
        }
        Ok(x)
    }
}

/// Rank of a set of sparse column vectors.
pub fn rank_of_columns(columns: &[BTreeMap<usize, LaurentPoly>]) -> usize {
    let mut rows: BTreeMap<usize, SparseRow> = BTreeMap::new();
    for (c, col) in columns.iter().enumerate() {
        for (&r, v) in col {
            rows.entry(r).or_default().insert(c, v.clone());
        }
    }
    Echelon::new(rows.into_values().collect(), columns.len()).rank()
}

/// Solve `matrix * x = rhs` exactly over `Q(q)`.
///
/// Each row is first multiplied by the lcm of its denominators, then the
/// integral system is eliminated without division.
pub fn rf_solve(
    matrix: &[Vec<RationalFunction>],
    rhs: &[RationalFunction],
) -> Result<Vec<RationalFunction>, SolveError> {
    if matrix.len() != rhs.len() {
        return Err(SolveError::Shape);
    }
    let ncols = matrix.first().map_or(0, Vec::len);
    if matrix.iter().any(|r| r.len() != ncols) {
        return Err(SolveError::Shape);
    }
    let rows = matrix
        .iter()
        .zip(rhs)
        .map(|(row, b)| {
            let entries: Vec<&RationalFunction> = row.iter().chain(std::iter::once(b)).collect();
            let lcm = entries.iter().fold(LaurentPoly::one(), |acc, e| {
                let g = acc.gcd(e.denom());
                (&acc * e.denom())
                    .div_exact(&g)
                    .expect("gcd divides product")
            });
            entries
                .into_iter()
                .enumerate()
                .filter(|(_, e)| !e.is_zero())
                .map(|(c, e)| {
                    let scale = lcm.div_exact(e.denom()).expect("lcm is a multiple");
                    (c, e.numer() * &scale)
                })
                .collect::<SparseRow>()
        })
        .collect();
    Echelon::new(rows, ncols).solve(ncols)
}
