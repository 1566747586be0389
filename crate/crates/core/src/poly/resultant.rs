use super::{bareiss_determinant, Matrix, Polynomial};
use crate::error::{Error, Result};

/// Sylvester resultant of `p` and `q` with respect to `z_var`.
///
/// Both inputs are read as univariate in `z_var` with coefficients in the
/// other variables; the result lives in the same polynomial ring and is
/// free of `z_var`.
pub fn sylvester_resultant(p: &Polynomial, q: &Polynomial, var: usize) -> Result<Polynomial> {
    if p.nvars() != q.nvars() {
        return Err(Error::VarCountMismatch {
            left: p.nvars(),
            right: q.nvars(),
        });
    }
    let pc = p.coefficients_in(var)?;
    let qc = q.coefficients_in(var)?;
    let m = pc.len() - 1;
    let n = qc.len() - 1;
    if p.is_zero() || m == 0 {
        return Err(Error::ConstantInVariable(var));
    }
    if q.is_zero() || n == 0 {
        return Err(Error::ConstantInVariable(var));
    }
    let size = m + n;
    let nvars = p.nvars();
    let mut mat: Matrix = vec![vec![Polynomial::zero(nvars); size]; size];
    // Rows 0..n carry shifted copies of p, rows n..n+m shifted copies of q,
    // coefficients listed from the highest power down.
    for r in 0..n {
        for (j, c) in pc.iter().rev().enumerate() {
            mat[r][r + j] = c.clone();
        }
    }
    for r in 0..m {
        for (j, c) in qc.iter().rev().enumerate() {
            mat[n + r][r + j] = c.clone();
        }
    }
    bareiss_determinant(&mat)
}
