use num_rational::BigRational;

use crate::error::{Error, Result};
use crate::field::{Field, Rationals};
use crate::QMatrix;

/// `m_ij = a_i + a_j`; rank at most two.
pub fn sumset_matrix(a: &[BigRational]) -> Result<QMatrix> {
    for (i, x) in a.iter().enumerate() {
        if a[..i].contains(x) {
            return Err(Error::Duplicate(x.to_string()));
        }
    }
    Ok(QMatrix::from_fn(Rationals, a.len(), a.len(), |i, j| &a[i] + &a[j]))
}

/// Scans all `i < j` and `k` distinct from both, in lexicographic order, for
/// `a_jj * a_ik == a_jk * a_ij`. Returns the first such triple.
pub fn rectangle_check<F: Field>(m: &crate::ExactMatrix<F>) -> Result<Option<(usize, usize, usize)>> {
    if !m.is_square() {
        return Err(Error::dims(format!("rectangle condition needs a square matrix, got {}x{}", m.rows(), m.cols())));
    }
    let f = m.field();
    let n = m.rows();
    for i in 0..n {
        for j in i + 1..n {
            for k in (0..n).filter(|&k| k != i && k != j) {
                let lhs = f.mul(m.get(j, j), m.get(i, k));
                let rhs = f.mul(m.get(j, k), m.get(i, j));
                if lhs == rhs {
                    return Ok(Some((i, j, k)));
                }
            }
        }
    }
    Ok(None)
}
