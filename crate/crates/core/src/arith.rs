//! Integer number theory: primality, factorization, binomials.

use std::collections::BTreeMap;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

const TRIAL_LIMIT: u64 = 1_000_000;

// Witness set that makes Miller-Rabin deterministic below 3.3 * 10^24.
const MR_BASES: [u64; 13] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41];

fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn pow_mod(mut a: u64, mut e: u64, m: u64) -> u64 {
    let mut acc = 1 % m;
    a %= m;
    while e > 0 {
        if e & 1 == 1 {
            acc = mul_mod(acc, a, m);
        }
        a = mul_mod(a, a, m);
        e >>= 1;
    }
    acc
}

/// Deterministic primality test for 64-bit integers.
pub fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for &p in &MR_BASES {
        if n.is_multiple_of(p) {
            return n == p;
        }
    }
    let s = (n - 1).trailing_zeros();
    let d = (n - 1) >> s;
    'witness: for &a in &MR_BASES[..12] {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// Miller-Rabin over the fixed witness set; exact for `n < 3.3e24`.
pub fn is_prime(n: &BigUint) -> bool {
    if let Some(small) = n.to_u64() {
        return is_prime_u64(small);
    }
    let one = BigUint::one();
    let two = BigUint::from(2u32);
    if n.is_even() {
        return false;
    }
    let n_minus_1 = n - &one;
    let s = n_minus_1.trailing_zeros().unwrap_or(0);
    let d = &n_minus_1 >> s;
    'witness: for &a in &MR_BASES {
        let mut x = BigUint::from(a).modpow(&d, n);
        if x == one || x == n_minus_1 {
            continue;
        }
        for _ in 1..s {
            x = x.modpow(&two, n);
            if x == n_minus_1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// Brent's variant of Pollard rho; returns a nontrivial factor of an odd composite.
fn pollard_rho(n: &BigUint) -> BigUint {
    let one = BigUint::one();
    let mut c = BigUint::one();
    loop {
        let f = |x: &BigUint| (x * x + &c) % n;
        let mut y = BigUint::from(2u32);
        let mut r: u64 = 1;
        let mut q = BigUint::one();
        let mut g = BigUint::one();
        let mut x = y.clone();
        let mut ys = y.clone();
        const BATCH: u64 = 64;
        while g == one {
            x = y.clone();
            for _ in 0..r {
                y = f(&y);
            }
            let mut k = 0;
            while k < r && g == one {
                ys = y.clone();
                for _ in 0..BATCH.min(r - k) {
                    y = f(&y);
                    let diff = if x > y { &x - &y } else { &y - &x };
                    q = (q * diff) % n;
                }
                g = q.gcd(n);
                k += BATCH;
            }
            r *= 2;
        }
        if &g == n {
            loop {
                ys = f(&ys);
                let diff = if x > ys { &x - &ys } else { &ys - &x };
                g = diff.gcd(n);
                if g != one {
                    break;
                }
            }
        }
        if &g != n {
            return g;
        }
        c += 1u32;
    }
}

fn factor_into(n: BigUint, out: &mut BTreeMap<BigUint, u32>) {
    if n.is_one() {
        return;
    }
    if is_prime(&n) {
        *out.entry(n).or_insert(0) += 1;
        return;
    }
    let d = pollard_rho(&n);
    let rest = &n / &d;
    factor_into(d, out);
    factor_into(rest, out);
}

/// Prime factorization of a positive integer: trial division up to 10^6,
/// then Miller-Rabin and Pollard rho on the cofactor.
pub fn factorize(n: &BigUint) -> BTreeMap<BigUint, u32> {
    assert!(!n.is_zero(), "cannot factor zero");
    let mut out = BTreeMap::new();
    let mut rest = n.clone();
    let push = |p: u64, rest: &mut BigUint, out: &mut BTreeMap<BigUint, u32>| {
        let bp = BigUint::from(p);
        let mut e = 0;
        while (&*rest % &bp).is_zero() {
            *rest /= &bp;
            e += 1;
        }
        if e > 0 {
            out.insert(bp, e);
        }
    };
    push(2, &mut rest, &mut out);
    let mut p = 3u64;
    while p <= TRIAL_LIMIT {
        if BigUint::from(p * p) > rest {
            break;
        }
        push(p, &mut rest, &mut out);
        p += 2;
    }
    if !rest.is_one() {
        let mut big = BTreeMap::new();
        factor_into(rest, &mut big);
        for (q, e) in big {
            *out.entry(q).or_insert(0) += e;
        }
    }
    out
}

/// `binom(n, k)` as an exact big integer (zero when `k > n`).
pub fn binomial(n: u64, k: u64) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for i in 0..k {
        acc *= n - i;
        acc /= i + 1;
    }
    acc
}

/// `base^exp >= threshold`, decided by repeated multiplication with early exit.
pub fn pow_at_least(base: &BigUint, exp: &BigUint, threshold: &BigUint) -> bool {
    if threshold <= &BigUint::one() {
        return true;
    }
    if base <= &BigUint::one() {
        return false;
    }
    let mut acc = BigUint::one();
    let mut i = BigUint::zero();
    while &i < exp {
        acc *= base;
        if &acc >= threshold {
            return true;
        }
        i += 1u32;
    }
    false
}

/// If `q = p^k` with `p` prime and `k >= 1`, returns `(p, k)`.
pub fn prime_power(q: u64) -> Option<(u64, u32)> {
    if q < 2 {
        return None;
    }
    let p = (2..=q).find(|d| q.is_multiple_of(*d))?;
    let mut rest = q;
    let mut k = 0;
    while rest.is_multiple_of(p) {
        rest /= p;
        k += 1;
    }
    (rest == 1).then_some((p, k))
}
