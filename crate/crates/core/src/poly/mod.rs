//! Polynomial machinery: entrywise, row-wise and multivariate application
//! to matrices, annihilators, and the associated rank bounds.

mod multi;
mod uni;

pub use multi::MultiPoly;
pub use uni::UniPoly;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, ToPrimitive};

use crate::arith::{binomial, prime_power};
use crate::error::{Error, Result};
use crate::field::Field;
use crate::matrix::ExactMatrix;

fn check_field<F: Field>(m: &ExactMatrix<F>, f: &F) -> Result<()> {
    if m.field() != f {
        return Err(Error::RingMismatch {
            left: m.field().spec().to_string(),
            right: f.spec().to_string(),
        });
    }
    Ok(())
}

/// `result(i, j) = P(M(i, j))`.
pub fn apply_entrywise<F: Field>(m: &ExactMatrix<F>, p: &UniPoly<F>) -> Result<ExactMatrix<F>> {
    check_field(m, p.field())?;
    Ok(m.map(|_, _, x| p.eval(x)))
}

/// Row `i` is mapped through `polys[i]`.
pub fn apply_rowwise<F: Field>(m: &ExactMatrix<F>, polys: &[UniPoly<F>]) -> Result<ExactMatrix<F>> {
    if polys.len() != m.rows() {
        return Err(Error::dims(format!("{} polynomials for {} rows", polys.len(), m.rows())));
    }
    for p in polys {
        check_field(m, p.field())?;
    }
    Ok(m.map(|i, _, x| polys[i].eval(x)))
}

/// Coordinate-wise `u_j = Q(z_1j, ..., z_rj)` for rows `z_1..z_r`.
pub fn apply_multivariate<F: Field>(rows: &[&[F::Elem]], q: &MultiPoly<F>) -> Result<Vec<F::Elem>> {
    if rows.len() != q.vars() {
        return Err(Error::dims(format!(
            "{} rows supplied to a {}-variable polynomial",
            rows.len(),
            q.vars()
        )));
    }
    let n = rows.first().map_or(0, |r| r.len());
    if rows.iter().any(|r| r.len() != n) {
        return Err(Error::dims("rows of unequal length"));
    }
    (0..n)
        .map(|j| {
            let point: Vec<F::Elem> = rows.iter().map(|r| r[j].clone()).collect();
            q.eval(&point)
        })
        .collect()
}

/// `prod_i binom(k_i + d_i, d_i)`: rank cap for rows obtained by applying
/// polynomials of degree at most `k_i` in variable `i` to rows of matrices
/// of rank `d_i`.
pub fn t11_bound(degrees: &[u64], ranks: &[u64]) -> Result<BigUint> {
    if degrees.len() != ranks.len() {
        return Err(Error::dims(format!("{} degrees vs {} ranks", degrees.len(), ranks.len())));
    }
    Ok(degrees
        .iter()
        .zip(ranks)
        .map(|(&k, &d)| binomial(k + d, d))
        .product())
}

/// `binom(x - 1, q - 1) mod p`, computed as the exact integer
/// `prod_{i=0}^{q-2} (x - 1 - i) / (q - 1)!`. Nonzero iff `q | x`.
pub fn lucas_poly_eval(x: &BigInt, q: u64, p: u64) -> Result<u64> {
    match prime_power(q) {
        Some((base, _)) if base == p => {}
        _ => return Err(Error::invalid(format!("{q} is not a power of the prime {p}"))),
    }
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for i in 0..q - 1 {
        num *= x - 1 - BigInt::from(i);
        den *= BigInt::from(i + 1);
    }
    let (value, rem) = num.div_rem(&den);
    debug_assert!(rem == BigInt::from(0), "binomial product must divide exactly");
    Ok(value.mod_floor(&BigInt::from(p)).to_u64().expect("residue fits u64"))
}
