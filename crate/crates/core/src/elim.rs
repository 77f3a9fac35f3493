//! Elimination kernels: rank, greedy row basis, dependency forms.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::field::{Field, Rationals};
use crate::matrix::ExactMatrix;

/// Rank by ordinary row reduction, pivoting on the first nonzero entry.
pub(crate) fn gauss_rank<F: Field>(m: &ExactMatrix<F>) -> usize {
    let f = m.field();
    let mut a = m.row_vecs();
    let (rows, cols) = (m.rows(), m.cols());
    let mut rank = 0;
    for c in 0..cols {
        if rank == rows {
            break;
        }
        let Some(p) = (rank..rows).find(|&r| !f.is_zero(&a[r][c])) else {
            continue;
        };
        a.swap(rank, p);
        let inv = f.inv(&a[rank][c]).expect("nonzero pivot");
        for r in rank + 1..rows {
            if f.is_zero(&a[r][c]) {
                continue;
            }
            let factor = f.mul(&a[r][c], &inv);
            for j in c..cols {
                let t = f.mul(&factor, &a[rank][j]);
                a[r][j] = f.sub(&a[r][j], &t);
            }
        }
        rank += 1;
    }
    rank
}

/// Fraction-free (Bareiss) rank over Q. Rows are first cleared of
/// denominators, which does not change the rank.
pub(crate) fn bareiss_rank(m: &ExactMatrix<Rationals>) -> usize {
    let (rows, cols) = (m.rows(), m.cols());
    let mut a: Vec<Vec<BigInt>> = (0..rows)
        .map(|i| {
            let row = m.row(i);
            let lcm = row.iter().fold(BigInt::one(), |acc, q| acc.lcm(q.denom()));
            row.iter().map(|q| q.numer() * (&lcm / q.denom())).collect()
        })
        .collect();
    let mut prev = BigInt::one();
    let mut rank = 0;
    for c in 0..cols {
        if rank == rows {
            break;
        }
        let Some(p) = (rank..rows).find(|&r| !a[r][c].is_zero()) else {
            continue;
        };
        a.swap(rank, p);
        let (top, rest) = a.split_at_mut(rank + 1);
        let pivot_row = &top[rank];
        let pivot = &pivot_row[c];
        for row in rest.iter_mut() {
            let lead = row[c].clone();
            for j in c + 1..cols {
                let v = pivot * &row[j] - &lead * &pivot_row[j];
                row[j] = v / &prev;
            }
            row[c] = BigInt::zero();
        }
        prev = a[rank][c].clone();
        rank += 1;
    }
    rank
}

/// Greedy top-to-bottom scan: a row joins the basis iff it is independent
/// of the rows already chosen. Returns the lexicographically first maximal
/// independent row set together with those rows.
pub fn row_basis<F: Field>(m: &ExactMatrix<F>) -> (Vec<usize>, Vec<Vec<F::Elem>>) {
    let f = m.field();
    let mut echelon: Vec<(usize, Vec<F::Elem>)> = Vec::new();
    let mut indices = Vec::new();
    for i in 0..m.rows() {
        let mut r = m.row(i).to_vec();
        for (piv, e) in &echelon {
            if f.is_zero(&r[*piv]) {
                continue;
            }
            let factor = f.div(&r[*piv], &e[*piv]).expect("nonzero pivot");
            for (x, y) in r.iter_mut().zip(e) {
                *x = f.sub(x, &f.mul(&factor, y));
            }
        }
        if let Some(piv) = r.iter().position(|x| !f.is_zero(x)) {
            echelon.push((piv, r));
            indices.push(i);
        }
    }
    let rows = indices.iter().map(|&i| m.row(i).to_vec()).collect();
    (indices, rows)
}

/// Linear relation `c0*w + c1*v1 + ... + cd*vd = 0` between a target row `w`
/// and basis rows `v1..vd`, normalized to `c0 = 1`.
#[derive(Debug, Clone, PartialEq)]
pub struct DependencyForm<F: Field> {
    pub target_row: usize,
    /// `c0, c1, ..., cd`.
    pub coefficients: Vec<F::Elem>,
    pub basis: Vec<usize>,
}

impl<F: Field> DependencyForm<F> {
    pub fn c0(&self) -> &F::Elem {
        &self.coefficients[0]
    }

    /// Coefficient of the `k`-th basis row (0-based).
    pub fn basis_coeff(&self, k: usize) -> &F::Elem {
        &self.coefficients[k + 1]
    }

    /// Evaluates the form on the rows of `m`, column by column.
    pub fn residual(&self, m: &ExactMatrix<F>) -> Vec<F::Elem> {
        let f = m.field();
        (0..m.cols())
            .map(|j| {
                let mut acc = f.mul(self.c0(), m.get(self.target_row, j));
                for (k, &b) in self.basis.iter().enumerate() {
                    acc = f.add(&acc, &f.mul(self.basis_coeff(k), m.get(b, j)));
                }
                acc
            })
            .collect()
    }

    /// Indices `k` (into the basis list) with nonzero coefficient.
    pub fn support(&self, f: &F) -> Vec<usize> {
        (0..self.basis.len()).filter(|&k| !f.is_zero(self.basis_coeff(k))).collect()
    }
}

/// Expresses `target` through the basis rows and returns the normalized
/// dependency form, re-verified exactly against `m`.
pub fn dependency_coefficients<F: Field>(
    m: &ExactMatrix<F>,
    basis: &[usize],
    target: usize,
) -> Result<DependencyForm<F>> {
    let f = m.field();
    if target >= m.rows() || basis.iter().any(|&b| b >= m.rows()) {
        return Err(Error::invalid("row index out of range"));
    }
    let d = basis.len();
    let n = m.cols();
    // Columns are the basis rows; last column is the target row.
    let mut a: Vec<Vec<F::Elem>> = (0..n)
        .map(|j| {
            let mut row: Vec<F::Elem> = basis.iter().map(|&b| m.get(b, j).clone()).collect();
            row.push(m.get(target, j).clone());
            row
        })
        .collect();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..d {
        let Some(p) = (r..n).find(|&i| !f.is_zero(&a[i][c])) else {
            continue;
        };
        a.swap(r, p);
        let inv = f.inv(&a[r][c]).expect("nonzero pivot");
        for x in a[r].iter_mut() {
            *x = f.mul(x, &inv);
        }
        for i in 0..n {
            if i == r || f.is_zero(&a[i][c]) {
                continue;
            }
            let factor = a[i][c].clone();
            for j in 0..=d {
                let t = f.mul(&factor, &a[r][j]);
                a[i][j] = f.sub(&a[i][j], &t);
            }
        }
        pivots.push((r, c));
        r += 1;
    }
    let not_in_span = || Error::NotInSpan { target, basis: basis.to_vec() };
    if (r..n).any(|i| !f.is_zero(&a[i][d])) {
        return Err(not_in_span());
    }
    let mut x = vec![f.zero(); d];
    for &(row, col) in &pivots {
        x[col] = a[row][d].clone();
    }
    let mut coefficients = vec![f.one()];
    coefficients.extend(x.iter().map(|v| f.neg(v)));
    let form = DependencyForm { target_row: target, coefficients, basis: basis.to_vec() };
    if form.residual(m).iter().any(|v| !f.is_zero(v)) {
        return Err(not_in_span());
    }
    Ok(form)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::PrimeField;

    fn q(v: i64) -> num_rational::BigRational {
        Rationals.from_i64(v)
    }

    #[test]
    fn rank_examples() {
        assert_eq!(ExactMatrix::identity(Rationals, 3).rank(), 3);
        let sumset = ExactMatrix::from_i64_rows(&[[2, 3, 4], [3, 4, 5], [4, 5, 6]]);
        assert_eq!(sumset.rank(), 2);
        let delta = ExactMatrix::from_i64_rows(&[[0, 1, 1], [1, 0, 2], [1, 2, 0]]);
        assert_eq!(delta.rank(), 3);
    }

    #[test]
    fn bareiss_agrees_with_gauss_on_rationals() {
        let m = ExactMatrix::from_fn(Rationals, 5, 6, |i, j| {
            num_rational::BigRational::new(((i * j) as i64 % 7 - 3).into(), ((i + 2 * j) as i64 % 5 + 1).into())
        });
        assert_eq!(bareiss_rank(&m), gauss_rank(&m));
    }

    #[test]
    fn row_basis_examples() {
        let (idx, _) = row_basis(&ExactMatrix::identity(Rationals, 4));
        assert_eq!(idx, vec![0, 1, 2, 3]);
        let m = ExactMatrix::from_i64_rows(&[[1, 0, 0], [0, 1, 0], [1, 1, 0]]);
        assert_eq!(row_basis(&m).0, vec![0, 1]);
        let sumset = ExactMatrix::from_i64_rows(&[[2, 3, 4], [3, 4, 5], [4, 5, 6]]);
        let (idx, rows) = row_basis(&sumset);
        assert_eq!(idx, vec![0, 1]);
        assert_eq!(rows[1], vec![q(3), q(4), q(5)]);
    }

    #[test]
    fn dependency_examples() {
        let m = ExactMatrix::from_i64_rows(&[[1, 0, 2], [0, 1, 3], [1, 1, 5]]);
        let form = dependency_coefficients(&m, &[0, 1], 2).unwrap();
        assert_eq!(form.coefficients, vec![q(1), q(-1), q(-1)]);

        let m = ExactMatrix::from_i64_rows(&[[1, 2], [0, 1], [2, 4]]);
        let form = dependency_coefficients(&m, &[0, 1], 2).unwrap();
        assert_eq!(form.coefficients, vec![q(1), q(-2), q(0)]);

        let sumset = ExactMatrix::from_i64_rows(&[[2, 3, 4], [3, 4, 5], [4, 5, 6]]);
        let form = dependency_coefficients(&sumset, &[0, 1], 2).unwrap();
        assert_eq!(form.coefficients, vec![q(1), q(1), q(-2)]);
        assert!(form.residual(&sumset).iter().all(|v| v == &q(0)));
    }

    #[test]
    fn dependency_outside_span_fails() {
        let m = ExactMatrix::identity(Rationals, 3);
        assert_eq!(
            dependency_coefficients(&m, &[0, 1], 2),
            Err(Error::NotInSpan { target: 2, basis: vec![0, 1] })
        );
    }

    #[test]
    fn rank_mod_p_drops() {
        let f = PrimeField::new(3).unwrap();
        // [[1,2],[2,1]] has det -3.
        let m = ExactMatrix::new(f, 2, 2, vec![1, 2, 2, 1]).unwrap();
        assert_eq!(m.rank(), 1);
        assert_eq!(ExactMatrix::from_i64_rows(&[[1, 2], [2, 1]]).rank(), 2);
    }
}
