//! Exhaustive non-degenerate solutions of `a_1 z_1 + ... + a_m z_m = 1`
//! with every `z_i` drawn from an exponent box of a group.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::{GroupSpec, Witness};
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq)]
pub struct SUnitEquation {
    coeffs: Vec<BigRational>,
}

impl SUnitEquation {
    pub fn new(coeffs: Vec<BigRational>) -> Result<Self> {
        if coeffs.is_empty() {
            return Err(Error::invalid("equation needs at least one term"));
        }
        if coeffs.iter().any(Zero::is_zero) {
            return Err(Error::invalid("equation coefficients must be nonzero"));
        }
        Ok(SUnitEquation { coeffs })
    }

    /// `z_1 + ... + z_m = 1`.
    pub fn unit(m: usize) -> Result<Self> {
        Self::new(vec![BigRational::one(); m])
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn terms(&self) -> usize {
        self.coeffs.len()
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct SUnitSolution {
    pub values: Vec<BigRational>,
    pub exponents: Vec<Witness>,
}

impl SUnitSolution {
    /// Re-checks the equation, membership of every value, and that no proper
    /// nonempty sub-sum of the terms vanishes.
    pub fn validate(&self, eq: &SUnitEquation, group: &GroupSpec) -> bool {
        if self.values.len() != eq.terms() {
            return false;
        }
        let terms: Vec<BigRational> = eq.coeffs.iter().zip(&self.values).map(|(a, z)| a * z).collect();
        let total: BigRational = terms.iter().sum();
        total.is_one()
            && self.values.iter().zip(&self.exponents).all(|(z, w)| group.evaluate(w) == *z)
            && self.values.iter().all(|z| group.contains(z))
            && no_vanishing_proper_subsum(&terms)
    }
}

/// True when every proper nonempty subset of `terms` has nonzero sum.
pub(crate) fn no_vanishing_proper_subsum(terms: &[BigRational]) -> bool {
    let m = terms.len();
    let full = (1u64 << m) - 1;
    (1..full).all(|mask| {
        let s: BigRational = (0..m).filter(|i| mask >> i & 1 == 1).map(|i| &terms[i]).sum();
        !s.is_zero()
    })
}

/// Guards on the size of the exhaustive scan.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SUnitBudget {
    pub max_generators: usize,
    pub max_exponent: u32,
    pub max_terms: usize,
    pub max_points: u64,
}

impl Default for SUnitBudget {
    fn default() -> Self {
        SUnitBudget { max_generators: 3, max_exponent: 12, max_terms: 6, max_points: 50_000_000 }
    }
}

/// Group elements with exponents in `[-bound, bound]`, deduplicated, in
/// lexicographic exponent order with the positive sign first.
fn candidates(group: &GroupSpec, bound: u32) -> Vec<(BigRational, Witness)> {
    let g = group.generators().len();
    let b = bound as i64;
    let mut exps = vec![-b; g];
    let mut out = Vec::new();
    let mut seen: HashMap<BigRational, ()> = HashMap::new();
    loop {
        let base = Witness { exponents: exps.iter().map(|&e| BigInt::from(e)).collect(), torsion: false };
        let signs: &[bool] = if group.has_torsion() { &[false, true] } else { &[false] };
        for &torsion in signs {
            let w = Witness { torsion, ..base.clone() };
            let z = group.evaluate(&w);
            if seen.insert(z.clone(), ()).is_none() {
                out.push((z, w));
            }
        }
        // odometer, last coordinate fastest
        let mut i = g;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if exps[i] < b {
                exps[i] += 1;
                for e in exps.iter_mut().skip(i + 1) {
                    *e = -b;
                }
                break;
            }
        }
    }
}

/// Every non-degenerate solution with all `z_i` in the exponent box
/// `[-bound, bound]^g` (times `{+-1}` when -1 is in the group), ordered
/// lexicographically by exponent vectors. The last unknown is solved for
/// and looked up, which visits the same box as a full scan.
pub fn enumerate_sunit(
    eq: &SUnitEquation,
    group: &GroupSpec,
    bound: u32,
    budget: &SUnitBudget,
) -> Result<Vec<SUnitSolution>> {
    let g = group.generators().len();
    let m = eq.terms();
    if g > budget.max_generators {
        return Err(Error::Budget(format!("{g} generators exceed the limit {}", budget.max_generators)));
    }
    if bound > budget.max_exponent {
        return Err(Error::Budget(format!(
            "exponent bound {bound} exceeds the limit {}",
            budget.max_exponent
        )));
    }
    if m > budget.max_terms {
        return Err(Error::Budget(format!("{m} terms exceed the limit {}", budget.max_terms)));
    }
    let per_var = (2 * bound as u64 + 1).pow(g as u32) * if group.has_torsion() { 2 } else { 1 };
    let points = per_var.checked_pow(m as u32 - 1).unwrap_or(u64::MAX);
    if points > budget.max_points {
        return Err(Error::Budget(format!(
            "scan of {points} points exceeds the limit {}",
            budget.max_points
        )));
    }

    let cands = candidates(group, bound);
    let index: HashMap<&BigRational, usize> = cands.iter().enumerate().map(|(i, (z, _))| (z, i)).collect();
    let a = eq.coeffs();
    let mut out = Vec::new();
    let mut idx = vec![0usize; m - 1];
    loop {
        let partial: BigRational = idx.iter().zip(a).map(|(&i, ai)| ai * &cands[i].0).sum();
        let last = (BigRational::one() - partial) / &a[m - 1];
        if let Some(&j) = index.get(&last) {
            let picks: Vec<usize> = idx.iter().copied().chain([j]).collect();
            let values: Vec<BigRational> = picks.iter().map(|&i| cands[i].0.clone()).collect();
            let terms: Vec<BigRational> = a.iter().zip(&values).map(|(x, z)| x * z).collect();
            if no_vanishing_proper_subsum(&terms) {
                out.push(SUnitSolution {
                    values,
                    exponents: picks.iter().map(|&i| cands[i].1.clone()).collect(),
                });
            }
        }
        let mut k = m - 1;
        loop {
            if k == 0 {
                return Ok(out);
            }
            k -= 1;
            if idx[k] + 1 < cands.len() {
                idx[k] += 1;
                for e in idx.iter_mut().skip(k + 1) {
                    *e = 0;
                }
                break;
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn single_term() {
        let eq = SUnitEquation::unit(1).unwrap();
        let g = GroupSpec::from_integers(&[2], false);
        let sols = enumerate_sunit(&eq, &g, 5, &SUnitBudget::default()).unwrap();
        assert_eq!(sols.len(), 1);
        assert_eq!(sols[0].values, vec![q(1, 1)]);
    }

    #[test]
    fn two_terms_over_signed_powers_of_two() {
        let eq = SUnitEquation::unit(2).unwrap();
        let g = GroupSpec::from_integers(&[-1, 2], false);
        let sols = enumerate_sunit(&eq, &g, 10, &SUnitBudget::default()).unwrap();
        let mut vals: Vec<Vec<BigRational>> = sols.iter().map(|s| s.values.clone()).collect();
        vals.sort();
        let mut expect = vec![vec![q(2, 1), q(-1, 1)], vec![q(-1, 1), q(2, 1)], vec![q(1, 2), q(1, 2)]];
        expect.sort();
        assert_eq!(vals, expect);
        assert!(sols.iter().all(|s| s.validate(&eq, &g)));
    }

    #[test]
    fn three_terms_filter_degenerate() {
        let eq = SUnitEquation::unit(3).unwrap();
        let g = GroupSpec::from_integers(&[-1, 2], false);
        let sols = enumerate_sunit(&eq, &g, 6, &SUnitBudget::default()).unwrap();
        let vals: Vec<Vec<BigRational>> = sols.iter().map(|s| s.values.clone()).collect();
        assert!(vals.contains(&vec![q(4, 1), q(-2, 1), q(-1, 1)]));
        assert!(!vals.contains(&vec![q(2, 1), q(-2, 1), q(1, 1)]));
    }

    #[test]
    fn budget_guards() {
        let eq = SUnitEquation::unit(2).unwrap();
        let g = GroupSpec::from_integers(&[2, 3, 5, 7], false);
        assert!(matches!(
            enumerate_sunit(&eq, &g, 2, &SUnitBudget::default()),
            Err(Error::Budget(_))
        ));
        let g = GroupSpec::from_integers(&[2], false);
        assert!(matches!(
            enumerate_sunit(&eq, &g, 13, &SUnitBudget::default()),
            Err(Error::Budget(_))
        ));
    }

    #[test]
    fn rejects_zero_coefficient() {
        assert!(SUnitEquation::new(vec![q(1, 1), q(0, 1)]).is_err());
        assert!(SUnitEquation::new(vec![]).is_err());
    }
}
