//! Closed-form bounds, evaluated exactly.

use num_bigint::BigUint;
use num_traits::{One, Pow};

use crate::arith::{binomial, pow_at_least};
use crate::error::{Error, Result};
use crate::poly::t11_bound;

/// Largest `A(m, r)` materialized as an integer, in bits.
const MAX_BITS: u64 = 1 << 24;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum BoundKind {
    /// `(8m)^(4 m^4 (m + m r + 1))`: non-degenerate solutions of an
    /// `m`-term unit equation over a group of rank `r`.
    Subspace { m: u64, r: u64 },
    /// `l^(l t)`: multicolor Ramsey number for a monochromatic `K_t` in `l` colors.
    Ramsey { t: u64, colors: u64 },
    /// `binom(k + d, k)`: rank after a degree-`k` polynomial on a rank-`d` matrix.
    Noga { k: u64, d: u64 },
    /// `binom(k + d - 1, k)`: same for the monomial `x^k`.
    NogaMonomial { k: u64, d: u64 },
    /// `binom(rho + s, rho)`: size cap with at most `s` sub-diagonal values per row.
    Matrix { rho: u64, s: u64 },
    /// `prod binom(k_i + d_i, d_i)`.
    T11 { degrees: Vec<u64>, ranks: Vec<u64> },
    /// `binom(p + d, d + 1) + 1`: point-count threshold forcing a distance divisible by `p`.
    Points2 { p: u64, d: u64 },
    /// `binom(q + d + 1, d + 1)`: the same for a prime power `q`.
    PrimePower { q: u64, d: u64 },
    /// `binom(d + 2 + s, d + 2)`: prefix distinct-distance threshold.
    Prefix { s: u64, d: u64 },
}

impl BoundKind {
    /// Builds a kind from its command-line name and positional parameters.
    pub fn from_name(name: &str, params: &[u64]) -> Result<Self> {
        let want = |n: usize| -> Result<()> {
            if params.len() != n {
                return Err(Error::invalid(format!("bound {name} takes {n} parameters, got {}", params.len())));
            }
            Ok(())
        };
        let kind = match name {
            "A" | "subspace" => {
                want(2)?;
                BoundKind::Subspace { m: params[0], r: params[1] }
            }
            "R" | "ramsey" => {
                want(2)?;
                BoundKind::Ramsey { t: params[0], colors: params[1] }
            }
            "noga" => {
                want(2)?;
                BoundKind::Noga { k: params[0], d: params[1] }
            }
            "noga-monomial" => {
                want(2)?;
                BoundKind::NogaMonomial { k: params[0], d: params[1] }
            }
            "matrix" => {
                want(2)?;
                BoundKind::Matrix { rho: params[0], s: params[1] }
            }
            "t11" => {
                if !params.len().is_multiple_of(2) {
                    return Err(Error::invalid("t11 takes (k, d) pairs"));
                }
                let (degrees, ranks) = params.chunks(2).map(|c| (c[0], c[1])).unzip();
                BoundKind::T11 { degrees, ranks }
            }
            "points2" => {
                want(2)?;
                BoundKind::Points2 { p: params[0], d: params[1] }
            }
            "prime-power" => {
                want(2)?;
                BoundKind::PrimePower { q: params[0], d: params[1] }
            }
            "prefix" => {
                want(2)?;
                BoundKind::Prefix { s: params[0], d: params[1] }
            }
            other => return Err(Error::invalid(format!("unknown bound kind {other:?}"))),
        };
        Ok(kind)
    }
}

fn subspace_parts(m: u64, r: u64) -> (BigUint, BigUint) {
    let base = BigUint::from(8 * m);
    let m4 = BigUint::from(m).pow(4u32);
    let exp = BigUint::from(4u32) * m4 * BigUint::from(m + m * r + 1);
    (base, exp)
}

/// Exact value of the named formula.
pub fn bound_eval(kind: &BoundKind) -> Result<BigUint> {
    Ok(match kind {
        BoundKind::Subspace { m, r } => {
            if *m == 0 {
                return Err(Error::invalid("A(m, r) needs m >= 1"));
            }
            let (base, exp) = subspace_parts(*m, *r);
            let bits = exp.clone() * BigUint::from(base.bits());
            if bits > BigUint::from(MAX_BITS) {
                return Err(Error::Budget(format!(
                    "A({m}, {r}) has about {bits} bits; use subspace_bound_at_least"
                )));
            }
            let e: u32 = exp.try_into().expect("checked by bit budget");
            Pow::pow(base, e)
        }
        BoundKind::Ramsey { t, colors } => {
            let e = colors.checked_mul(*t).filter(|&e| e <= MAX_BITS).ok_or_else(|| {
                Error::Budget(format!("R({t}, {colors}) exponent too large"))
            })?;
            Pow::pow(BigUint::from(*colors), e as u32)
        }
        BoundKind::Noga { k, d } => binomial(k + d, *k),
        BoundKind::NogaMonomial { k, d } => {
            if *d == 0 {
                BigUint::from(u8::from(*k == 0))
            } else {
                binomial(k + d - 1, *k)
            }
        }
        BoundKind::Matrix { rho, s } => binomial(rho + s, *rho),
        BoundKind::T11 { degrees, ranks } => t11_bound(degrees, ranks)?,
        BoundKind::Points2 { p, d } => binomial(p + d, d + 1) + BigUint::one(),
        BoundKind::PrimePower { q, d } => binomial(q + d + 1, d + 1),
        BoundKind::Prefix { s, d } => binomial(d + 2 + s, d + 2),
    })
}

/// `A(m, r) >= x` without materializing `A(m, r)`.
pub fn subspace_bound_at_least(m: u64, r: u64, x: &BigUint) -> bool {
    let (base, exp) = subspace_parts(m, r);
    pow_at_least(&base, &exp, x)
}
