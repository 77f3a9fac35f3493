//! Reference implementations used only by the tests. They share no code
//! with the library beyond the number types.

#![allow(dead_code)]

use std::collections::BTreeSet;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Zero};

pub fn q(v: i64) -> BigRational {
    BigRational::from_integer(v.into())
}

pub fn qf(n: i64, d: i64) -> BigRational {
    BigRational::new(n.into(), d.into())
}

/// Gauss-Jordan rank with a pivot search over the whole remaining block.
pub fn rank_q(rows: &[Vec<BigRational>]) -> usize {
    let mut a: Vec<Vec<BigRational>> = rows.to_vec();
    let n = a.len();
    let m = a.first().map_or(0, Vec::len);
    let mut rank = 0;
    let mut used_cols = vec![false; m];
    while rank < n {
        let mut pivot = None;
        'search: for r in rank..n {
            for c in 0..m {
                if !used_cols[c] && !a[r][c].is_zero() {
                    pivot = Some((r, c));
                    break 'search;
                }
            }
        }
        let Some((r, c)) = pivot else { break };
        a.swap(rank, r);
        used_cols[c] = true;
        let p = a[rank][c].clone();
        for x in a[rank].iter_mut() {
            *x = &*x / &p;
        }
        for i in 0..n {
            if i != rank && !a[i][c].is_zero() {
                let f = a[i][c].clone();
                for j in 0..m {
                    let t = &f * &a[rank][j];
                    a[i][j] = &a[i][j] - t;
                }
            }
        }
        rank += 1;
    }
    rank
}

fn pow_mod(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1u64 % p;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = (acc as u128 * b as u128 % p as u128) as u64;
        }
        b = (b as u128 * b as u128 % p as u128) as u64;
        e >>= 1;
    }
    acc
}

/// Rank over `F_p` by elimination with Fermat inverses.
pub fn rank_mod(rows: &[Vec<u64>], p: u64) -> usize {
    let mut a: Vec<Vec<u64>> = rows.iter().map(|r| r.iter().map(|x| x % p).collect()).collect();
    let n = a.len();
    let m = a.first().map_or(0, Vec::len);
    let mut rank = 0;
    for c in 0..m {
        let Some(r) = (rank..n).find(|&r| a[r][c] != 0) else { continue };
        a.swap(rank, r);
        let inv = pow_mod(a[rank][c], p - 2, p);
        for i in rank + 1..n {
            let f = a[i][c] * inv % p;
            for j in 0..m {
                a[i][j] = (a[i][j] + p * p - f * a[rank][j] % p) % p;
            }
        }
        rank += 1;
    }
    rank
}

/// Pascal's triangle.
pub fn binom(n: u64, k: u64) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let mut row = vec![BigUint::one()];
    for _ in 0..n {
        let mut next = vec![BigUint::one(); row.len() + 1];
        for i in 1..row.len() {
            next[i] = &row[i - 1] + &row[i];
        }
        row = next;
    }
    row[k as usize].clone()
}

/// Primes dividing `n`, by trial division.
pub fn prime_divisors(mut n: u64) -> BTreeSet<u64> {
    let mut out = BTreeSet::new();
    let mut d = 2;
    while d * d <= n {
        while n.is_multiple_of(d) {
            out.insert(d);
            n /= d;
        }
        d += 1;
    }
    if n > 1 {
        out.insert(n);
    }
    out
}

pub fn is_prime(n: u64) -> bool {
    n >= 2 && (2..n).take_while(|d| d * d <= n).all(|d| !n.is_multiple_of(d))
}

pub fn is_square(v: &BigInt) -> bool {
    if v < &BigInt::zero() {
        return false;
    }
    let r = v.sqrt();
    &r * &r == *v
}

/// Every proper nonempty subset of `terms` has nonzero sum.
pub fn no_proper_zero_subsum(terms: &[BigRational]) -> bool {
    let m = terms.len();
    (1u32..(1 << m) - 1).all(|mask| {
        let s: BigRational = (0..m).filter(|i| mask >> i & 1 == 1).map(|i| terms[i].clone()).sum();
        !s.is_zero()
    })
}

/// Distinct squared distances from each point to its predecessors.
pub fn prefix_counts(points: &[Vec<i64>]) -> Vec<usize> {
    (0..points.len())
        .map(|i| {
            let set: BTreeSet<i64> = (0..i)
                .map(|j| points[i].iter().zip(&points[j]).map(|(a, b)| (a - b) * (a - b)).sum())
                .collect();
            set.len()
        })
        .collect()
}
