use rayon::prelude::*;

use super::Polynomial;
use crate::error::{Error, Result};

/// Dense row-major matrix of polynomials.
pub type Matrix = Vec<Vec<Polynomial>>;

fn check_square(m: &[Vec<Polynomial>]) -> Result<usize> {
    let n = m.len();
    if n == 0 {
        return Err(Error::DegenerateSystem("empty matrix".into()));
    }
    let nvars = m[0].first().map(Polynomial::nvars).unwrap_or(0);
    for (r, row) in m.iter().enumerate() {
        if row.len() != n {
            return Err(Error::NonSquare {
                rows: n,
                row: r,
                cols: row.len(),
            });
        }
        if let Some(bad) = row.iter().find(|p| p.nvars() != nvars) {
            return Err(Error::VarCountMismatch {
                left: nvars,
                right: bad.nvars(),
            });
        }
    }
    Ok(nvars)
}

/// Determinant by fraction-free (Bareiss) elimination.
///
/// Every division performed is exact in the polynomial ring. The pivot at
/// step `k` is the first row at or below `k` with a nonzero entry in
/// column `k`; a column with no such entry makes the determinant zero.
/// Row updates within a step run in parallel and are independent of each
/// other, so the result does not depend on scheduling.
pub fn bareiss_determinant(m: &[Vec<Polynomial>]) -> Result<Polynomial> {
    let nvars = check_square(m)?;
    let n = m.len();
    let mut a: Matrix = m.to_vec();
    let mut negate = false;
    let mut prev = Polynomial::one(nvars);

    for k in 0..n - 1 {
        let Some(p) = (k..n).find(|&r| !a[r][k].is_zero()) else {
            return Ok(Polynomial::zero(nvars));
        };
        if p != k {
            a.swap(p, k);
            negate = !negate;
        }
        let (top, bottom) = a.split_at_mut(k + 1);
        let pivot_row = &top[k];
        let pivot = &pivot_row[k];
        let prev_ref = &prev;
        bottom.par_iter_mut().try_for_each(|row| -> Result<()> {
            let lead = row[k].clone();
            for j in (k + 1)..n {
                let num = &(&row[j] * pivot) - &(&lead * &pivot_row[j]);
                row[j] = if k == 0 {
                    num
                } else {
                    num.exact_divide(prev_ref)?.ok_or_else(|| {
                        Error::Consistency("inexact division during Bareiss elimination".into())
                    })?
                };
            }
            row[k] = Polynomial::zero(nvars);
            Ok(())
        })?;
        prev = a[k][k].clone();
    }

    let det = a[n - 1][n - 1].clone();
    Ok(if negate { -&det } else { det })
}
