use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::field::Field;

/// Sparse multivariate polynomial: exponent vector -> nonzero coefficient.
#[derive(Debug, Clone, PartialEq)]
pub struct MultiPoly<F: Field> {
    field: F,
    vars: usize,
    terms: BTreeMap<Vec<u32>, F::Elem>,
}

impl<F: Field> MultiPoly<F> {
    /// Like terms are combined and zero coefficients dropped.
    pub fn new(field: F, vars: usize, terms: impl IntoIterator<Item = (Vec<u32>, F::Elem)>) -> Result<Self> {
        let mut map: BTreeMap<Vec<u32>, F::Elem> = BTreeMap::new();
        for (exp, c) in terms {
            if exp.len() != vars {
                return Err(Error::dims(format!(
                    "exponent vector of length {} in a {vars}-variable polynomial",
                    exp.len()
                )));
            }
            let slot = map.entry(exp).or_insert_with(|| field.zero());
            *slot = field.add(slot, &c);
        }
        map.retain(|_, c| !field.is_zero(c));
        Ok(MultiPoly { field, vars, terms: map })
    }

    pub fn zero(field: F, vars: usize) -> Self {
        MultiPoly { field, vars, terms: BTreeMap::new() }
    }

    pub fn constant(field: F, vars: usize, c: F::Elem) -> Self {
        Self::new(field, vars, [(vec![0; vars], c)]).expect("arity matches")
    }

    /// The coordinate function `x_i` (0-based).
    pub fn var(field: F, vars: usize, i: usize) -> Self {
        assert!(i < vars, "variable {i} out of range");
        let mut exp = vec![0; vars];
        exp[i] = 1;
        let one = field.one();
        Self::new(field, vars, [(exp, one)]).expect("arity matches")
    }

    /// Univariate polynomial `sum c_k x_i^k` embedded in `vars` variables.
    pub fn from_uni(p: &super::UniPoly<F>, vars: usize, i: usize) -> Self {
        let terms = p.coeffs().iter().enumerate().map(|(k, c)| {
            let mut exp = vec![0; vars];
            exp[i] = k as u32;
            (exp, c.clone())
        });
        Self::new(p.field().clone(), vars, terms).expect("arity matches")
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn vars(&self) -> usize {
        self.vars
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u32>, &F::Elem)> {
        self.terms.iter()
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Max exponent of variable `i` over all monomials (0 for the zero polynomial).
    pub fn degree_in(&self, i: usize) -> u32 {
        self.terms.keys().map(|e| e[i]).max().unwrap_or(0)
    }

    pub fn constant_term(&self) -> F::Elem {
        self.terms
            .get(&vec![0; self.vars])
            .cloned()
            .unwrap_or_else(|| self.field.zero())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_arity(other)?;
        let terms = self.terms.iter().chain(&other.terms).map(|(e, c)| (e.clone(), c.clone()));
        Self::new(self.field.clone(), self.vars, terms)
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_arity(other)?;
        let f = &self.field;
        let mut terms = Vec::with_capacity(self.terms.len() * other.terms.len());
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                let exp = ea.iter().zip(eb).map(|(a, b)| a + b).collect();
                terms.push((exp, f.mul(ca, cb)));
            }
        }
        Self::new(f.clone(), self.vars, terms)
    }

    /// Monomial-by-monomial evaluation with square-and-multiply powers.
    pub fn eval(&self, point: &[F::Elem]) -> Result<F::Elem> {
        if point.len() != self.vars {
            return Err(Error::dims(format!(
                "{}-variable polynomial evaluated at a point of length {}",
                self.vars,
                point.len()
            )));
        }
        let f = &self.field;
        let mut acc = f.zero();
        for (exp, c) in &self.terms {
            let mut term = c.clone();
            for (x, &e) in point.iter().zip(exp) {
                if e > 0 {
                    term = f.mul(&term, &f.pow(x, e as u64));
                }
            }
            acc = f.add(&acc, &term);
        }
        Ok(acc)
    }

    fn check_arity(&self, other: &Self) -> Result<()> {
        if self.vars != other.vars {
            return Err(Error::dims(format!("{} vs {} variables", self.vars, other.vars)));
        }
        Ok(())
    }
}
