//! Integer lattice membership through column Hermite reduction.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// Solves `A x = t` over the integers, `A` given as rows. Returns one
/// solution or `None` when `t` is outside the column lattice of `A`.
pub fn solve_integer(a: &[Vec<BigInt>], t: &[BigInt]) -> Option<Vec<BigInt>> {
    let m = a.len();
    assert_eq!(m, t.len(), "right-hand side length");
    let k = a.first().map_or(0, Vec::len);
    let mut h: Vec<Vec<BigInt>> = a.to_vec();
    // u starts as the identity; every column operation on h is mirrored on u.
    let mut u: Vec<Vec<BigInt>> = (0..k)
        .map(|i| (0..k).map(|j| if i == j { BigInt::one() } else { BigInt::zero() }).collect())
        .collect();

    let swap_cols = |mat: &mut Vec<Vec<BigInt>>, a: usize, b: usize| {
        for row in mat.iter_mut() {
            row.swap(a, b);
        }
    };
    // col[dst] -= q * col[src]
    let axpy = |mat: &mut Vec<Vec<BigInt>>, dst: usize, src: usize, q: &BigInt| {
        for row in mat.iter_mut() {
            let delta = q * &row[src];
            row[dst] -= delta;
        }
    };

    let mut pivots: Vec<(usize, usize)> = Vec::new();
    let mut col = 0;
    for r in 0..m {
        if col == k {
            break;
        }
        loop {
            let nonzero: Vec<usize> = (col..k).filter(|&c| !h[r][c].is_zero()).collect();
            if nonzero.len() <= 1 {
                if let Some(&c) = nonzero.first() {
                    if c != col {
                        swap_cols(&mut h, c, col);
                        swap_cols(&mut u, c, col);
                    }
                    if h[r][col].is_negative() {
                        for mat in [&mut h, &mut u] {
                            for row in mat.iter_mut() {
                                row[col] = -&row[col];
                            }
                        }
                    }
                    pivots.push((r, col));
                    col += 1;
                }
                break;
            }
            let best = *nonzero.iter().min_by_key(|&&c| h[r][c].abs()).unwrap();
            if best != col {
                swap_cols(&mut h, best, col);
                swap_cols(&mut u, best, col);
            }
            for c in col + 1..k {
                if h[r][c].is_zero() {
                    continue;
                }
                let q = h[r][c].div_floor(&h[r][col]);
                axpy(&mut h, c, col, &q);
                axpy(&mut u, c, col, &q);
            }
        }
    }

    // Forward substitution on the lower echelon form.
    let mut y = vec![BigInt::zero(); k];
    for &(r, c) in &pivots {
        let partial: BigInt = (0..c).map(|j| &h[r][j] * &y[j]).sum();
        let (q, rem) = (&t[r] - partial).div_rem(&h[r][c]);
        if !rem.is_zero() {
            return None;
        }
        y[c] = q;
    }
    for r in 0..m {
        let lhs: BigInt = (0..k).map(|j| &h[r][j] * &y[j]).sum();
        if lhs != t[r] {
            return None;
        }
    }
    Some((0..k).map(|i| (0..k).map(|j| &u[i][j] * &y[j]).sum()).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    fn check(a: &[Vec<BigInt>], t: &[BigInt], x: &[BigInt]) {
        for (row, ti) in a.iter().zip(t) {
            let s: BigInt = row.iter().zip(x).map(|(p, q)| p * q).sum();
            assert_eq!(&s, ti);
        }
    }

    #[test]
    fn dependent_generators() {
        // columns: 4 = 2^2, 6 = 2*3, 9 = 3^2 over primes (2, 3)
        let a = vec![ints(&[2, 1, 0]), ints(&[0, 1, 2])];
        for t in [ints(&[1, 1]), ints(&[2, 0]), ints(&[0, 2]), ints(&[3, -1])] {
            let x = solve_integer(&a, &t).expect("in lattice");
            check(&a, &t, &x);
        }
        // 2 alone has odd total degree: not generated by 4, 6, 9
        assert!(solve_integer(&a, &ints(&[1, 0])).is_none());
    }

    #[test]
    fn parity_slack_column() {
        // one generator of exponent 1 and sign parity 1, slack 2 on the sign row
        let a = vec![ints(&[1, 0]), ints(&[1, 2])];
        assert!(solve_integer(&a, &ints(&[3, 1])).is_some());
        assert!(solve_integer(&a, &ints(&[3, 0])).is_none());
    }

    #[test]
    fn empty_lattice() {
        let a: Vec<Vec<BigInt>> = vec![vec![], vec![]];
        assert_eq!(solve_integer(&a, &ints(&[0, 0])), Some(vec![]));
        assert!(solve_integer(&a, &ints(&[1, 0])).is_none());
    }
}
