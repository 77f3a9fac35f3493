use crate::error::{Error, Result};
use crate::field::Field;

/// Dense univariate polynomial, coefficients low to high.
#[derive(Debug, Clone, PartialEq)]
pub struct UniPoly<F: Field> {
    field: F,
    coeffs: Vec<F::Elem>,
}

impl<F: Field> UniPoly<F> {
    /// Trailing zero coefficients are dropped; an empty list is the zero polynomial.
    pub fn new(field: F, mut coeffs: Vec<F::Elem>) -> Self {
        while coeffs.last().is_some_and(|c| field.is_zero(c)) {
            coeffs.pop();
        }
        UniPoly { field, coeffs }
    }

    pub fn zero(field: F) -> Self {
        UniPoly { field, coeffs: Vec::new() }
    }

    pub fn constant(field: F, c: F::Elem) -> Self {
        Self::new(field, vec![c])
    }

    /// The identity polynomial `x`.
    pub fn x(field: F) -> Self {
        Self::monomial(field, 1)
    }

    /// `x^k`.
    pub fn monomial(field: F, k: usize) -> Self {
        let mut coeffs = vec![field.zero(); k + 1];
        coeffs[k] = field.one();
        UniPoly { field, coeffs }
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn coeffs(&self) -> &[F::Elem] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Whether the polynomial is `c * x^k` for some `k`.
    pub fn is_monomial(&self) -> bool {
        self.coeffs.iter().filter(|c| !self.field.is_zero(c)).count() == 1
    }

    /// Horner evaluation.
    pub fn eval(&self, x: &F::Elem) -> F::Elem {
        let f = &self.field;
        self.coeffs
            .iter()
            .rev()
            .fold(f.zero(), |acc, c| f.add(&f.mul(&acc, x), c))
    }

    pub fn mul(&self, other: &Self) -> Self {
        let f = &self.field;
        if self.is_zero() || other.is_zero() {
            return Self::zero(f.clone());
        }
        let mut out = vec![f.zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] = f.add(&out[i + j], &f.mul(a, b));
            }
        }
        Self::new(f.clone(), out)
    }

    /// Monic `prod (x - v)` over a set of distinct values. The empty set gives 1.
    pub fn annihilator(field: F, values: &[F::Elem]) -> Result<Self> {
        for (i, v) in values.iter().enumerate() {
            if values[..i].contains(v) {
                return Err(Error::Duplicate(field.to_rational(v).to_string()));
            }
        }
        let one = field.one();
        let mut acc = Self::constant(field.clone(), one.clone());
        for v in values {
            let factor = Self::new(field.clone(), vec![field.neg(v), one.clone()]);
            acc = acc.mul(&factor);
        }
        Ok(acc)
    }
}
