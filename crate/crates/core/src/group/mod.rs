//! Finitely generated subgroups of the nonzero rationals.

mod bounds;
mod lattice;
mod sunit;

pub use bounds::{bound_eval, subspace_bound_at_least, BoundKind};
pub use lattice::solve_integer;
pub use sunit::{enumerate_sunit, SUnitBudget, SUnitEquation, SUnitSolution};
pub(crate) use sunit::no_vanishing_proper_subsum;

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Pow, Signed, Zero};

use crate::arith::factorize;
use crate::error::{Error, Result};
use crate::field::Rationals;
use crate::matrix::ExactMatrix;

/// Prime exponent vector of a nonzero rational: `x = sign * prod p^e`.
pub fn prime_exponents(x: &BigRational) -> BTreeMap<BigUint, BigInt> {
    assert!(!x.is_zero(), "zero has no factorization");
    let mut out: BTreeMap<BigUint, BigInt> = BTreeMap::new();
    for (p, e) in factorize(x.numer().magnitude()) {
        *out.entry(p).or_default() += e;
    }
    for (p, e) in factorize(x.denom().magnitude()) {
        *out.entry(p).or_default() -= e;
    }
    out
}

/// Number of distinct primes dividing a numerator or denominator of some
/// element; this is the rank of the group generated by those primes, which
/// contains the group generated by the elements.
pub fn group_rank(elements: &[BigRational]) -> Result<usize> {
    Ok(prime_support(elements)?.len())
}

/// Sorted distinct primes appearing in the elements.
pub fn prime_support(elements: &[BigRational]) -> Result<Vec<BigUint>> {
    let mut primes = BTreeSet::new();
    for x in elements {
        if x.is_zero() {
            return Err(Error::invalid("0 is not an element of the multiplicative group"));
        }
        primes.extend(prime_exponents(x).into_keys());
    }
    Ok(primes.into_iter().collect())
}

/// Exponents witnessing `x = (-1)^torsion * prod g_i^{e_i}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Witness {
    pub exponents: Vec<BigInt>,
    /// Whether the torsion element -1 is used.
    pub torsion: bool,
}

/// Subgroup of Q* generated by a list of rationals, optionally with -1 adjoined.
#[derive(Debug, Clone, PartialEq)]
pub struct GroupSpec {
    generators: Vec<BigRational>,
    torsion: bool,
    primes: Vec<BigUint>,
    /// `lattice[p][g]`: exponent of prime `p` in generator `g`.
    lattice: Vec<Vec<BigInt>>,
}

impl GroupSpec {
    /// Generators equal to `1` are dropped and `-1` sets the torsion flag.
    pub fn new(generators: Vec<BigRational>, include_torsion: bool) -> Result<Self> {
        let mut torsion = include_torsion;
        let mut gens = Vec::new();
        for g in generators {
            if g.is_zero() {
                return Err(Error::invalid("generator 0 is not invertible"));
            }
            if g.abs().is_one() {
                torsion |= g.is_negative();
                continue;
            }
            if !gens.contains(&g) {
                gens.push(g);
            }
        }
        let primes = prime_support(&gens)?;
        let factored: Vec<_> = gens.iter().map(prime_exponents).collect();
        let lattice = primes
            .iter()
            .map(|p| factored.iter().map(|f| f.get(p).cloned().unwrap_or_default()).collect())
            .collect();
        Ok(GroupSpec { generators: gens, torsion, primes, lattice })
    }

    /// Parses a comma-separated list such as `-1,2,3/5`.
    pub fn parse(spec: &str) -> Result<Self> {
        let gens = spec
            .split(',')
            .map(str::trim)
            .filter(|s| !s.is_empty())
            .map(crate::io::parse_rational)
            .collect::<Result<Vec<_>>>()?;
        Self::new(gens, false)
    }

    /// `<2>`, `<2, 3>`, ...: the group generated by small integers.
    pub fn from_integers(gens: &[i64], include_torsion: bool) -> Self {
        let gens = gens.iter().map(|&g| BigRational::from_integer(g.into())).collect();
        Self::new(gens, include_torsion).expect("nonzero generators")
    }

    pub fn generators(&self) -> &[BigRational] {
        &self.generators
    }

    pub fn has_torsion(&self) -> bool {
        self.torsion
    }

    pub fn primes(&self) -> &[BigUint] {
        &self.primes
    }

    /// Rank of the torsion-free part: the rank of the exponent lattice.
    pub fn rank(&self) -> usize {
        let rows: Vec<Vec<BigRational>> = self
            .lattice
            .iter()
            .map(|r| r.iter().map(|e| BigRational::from_integer(e.clone())).collect())
            .collect();
        if rows.is_empty() {
            return 0;
        }
        ExactMatrix::from_rows(Rationals, rows).expect("rectangular").rank()
    }

    /// Evaluates `(-1)^torsion * prod g_i^{e_i}`.
    pub fn evaluate(&self, w: &Witness) -> BigRational {
        let mut acc = BigRational::one();
        for (g, e) in self.generators.iter().zip(&w.exponents) {
            let mag: BigUint = e.magnitude().clone();
            let pow = Pow::pow(g, mag);
            acc *= if e.is_negative() { pow.recip() } else { pow };
        }
        if w.torsion {
            acc = -acc;
        }
        acc
    }

    /// Decides `x in G`, returning exponents when it is.
    pub fn membership(&self, x: &BigRational) -> Option<Witness> {
        if x.is_zero() {
            return None;
        }
        let exps = prime_exponents(x);
        if exps.keys().any(|p| self.primes.binary_search(p).is_err()) {
            return None;
        }
        let g = self.generators.len();
        let mut a: Vec<Vec<BigInt>> = self.lattice.clone();
        let mut t: Vec<BigInt> =
            self.primes.iter().map(|p| exps.get(p).cloned().unwrap_or_default()).collect();
        if !self.torsion {
            // Sign parity: sum(s_i e_i) + 2k = [x < 0].
            for row in a.iter_mut() {
                row.push(BigInt::zero());
            }
            let mut sign_row: Vec<BigInt> = self
                .generators
                .iter()
                .map(|gen| BigInt::from(u8::from(gen.is_negative())))
                .collect();
            sign_row.push(BigInt::from(2));
            a.push(sign_row);
            t.push(BigInt::from(u8::from(x.is_negative())));
        }
        let sol = solve_integer(&a, &t)?;
        let exponents = sol[..g].to_vec();
        let mut w = Witness { exponents, torsion: false };
        if self.evaluate(&w) != *x {
            w.torsion = true;
        }
        debug_assert_eq!(&self.evaluate(&w), x);
        Some(w)
    }

    pub fn contains(&self, x: &BigRational) -> bool {
        self.membership(x).is_some()
    }
}

impl fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts: Vec<String> = Vec::new();
        if self.torsion {
            parts.push("-1".into());
        }
        parts.extend(self.generators.iter().map(ToString::to_string));
        write!(f, "<{}>", parts.join(", "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn rank_examples() {
        assert_eq!(group_rank(&[q(1, 1), q(-1, 1)]).unwrap(), 0);
        assert_eq!(group_rank(&[q(2, 1), q(1, 2), q(8, 1)]).unwrap(), 1);
        assert_eq!(group_rank(&[q(6, 1), q(10, 1)]).unwrap(), 3);
        assert!(group_rank(&[q(0, 1)]).is_err());
        // The generated lattice itself only has rank 2.
        assert_eq!(GroupSpec::from_integers(&[6, 10], false).rank(), 2);
    }

    #[test]
    fn membership_examples() {
        let g2 = GroupSpec::from_integers(&[2], false);
        let w = g2.membership(&q(8, 1)).unwrap();
        assert_eq!(w.exponents, vec![BigInt::from(3)]);
        let g23 = GroupSpec::from_integers(&[2, 3], false);
        let w = g23.membership(&q(12, 1)).unwrap();
        assert_eq!(w.exponents, vec![BigInt::from(2), BigInt::from(1)]);
        assert!(g23.membership(&q(5, 1)).is_none());
        assert!(g23.membership(&q(0, 1)).is_none());
        assert!(g23.contains(&q(2, 9)));
    }

    #[test]
    fn sign_handling() {
        let g = GroupSpec::from_integers(&[2], false);
        assert!(!g.contains(&q(-2, 1)));
        let g = GroupSpec::from_integers(&[-2], false);
        assert!(g.contains(&q(-2, 1)));
        assert!(g.contains(&q(4, 1)));
        assert!(!g.contains(&q(-4, 1)));
        let g = GroupSpec::from_integers(&[-2, 3], false);
        assert!(!g.contains(&q(-1, 1)));
        let g = GroupSpec::from_integers(&[-2, 2], false);
        assert!(g.contains(&q(-1, 1)));
        let g = GroupSpec::parse("-1, 2").unwrap();
        assert!(g.has_torsion());
        assert!(g.contains(&q(-4, 1)));
        assert_eq!(g.to_string(), "<-1, 2>");
    }

    #[test]
    fn dependent_generators_membership() {
        let g = GroupSpec::from_integers(&[4, 6, 9], false);
        assert!(g.contains(&q(6, 1)));
        assert!(g.contains(&q(2, 3)));
        assert!(!g.contains(&q(2, 1)));
        assert_eq!(g.rank(), 2);
    }
}
