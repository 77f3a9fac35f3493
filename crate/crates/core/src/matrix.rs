use std::fmt;

use crate::error::{Error, Result};
use crate::field::{Field, Rationals};

/// Dense row-major matrix over an exact field. Immutable once built.
#[derive(Clone, PartialEq)]
pub struct ExactMatrix<F: Field> {
    field: F,
    rows: usize,
    cols: usize,
    entries: Vec<F::Elem>,
}

impl<F: Field> ExactMatrix<F> {
    pub fn new(field: F, rows: usize, cols: usize, entries: Vec<F::Elem>) -> Result<Self> {
        if rows * cols != entries.len() {
            return Err(Error::dims(format!(
                "{rows}x{cols} matrix needs {} entries, got {}",
                rows * cols,
                entries.len()
            )));
        }
        if let Some(pos) = entries.iter().position(|e| !field.is_canonical(e)) {
            return Err(Error::invalid(format!(
                "entry ({}, {}) is not a canonical element of {}",
                pos / cols.max(1),
                pos % cols.max(1),
                field.spec()
            )));
        }
        Ok(ExactMatrix { field, rows, cols, entries })
    }

    pub fn from_rows(field: F, rows: Vec<Vec<F::Elem>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if let Some(i) = rows.iter().position(|row| row.len() != c) {
            return Err(Error::dims(format!("row {i} has length {}, expected {c}", rows[i].len())));
        }
        Self::new(field, r, c, rows.into_iter().flatten().collect())
    }

    pub fn from_fn(field: F, rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> F::Elem) -> Self {
        let mut entries = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                entries.push(f(i, j));
            }
        }
        ExactMatrix { field, rows, cols, entries }
    }

    pub fn zeros(field: F, rows: usize, cols: usize) -> Self {
        let z = field.zero();
        Self::from_fn(field, rows, cols, |_, _| z.clone())
    }

    pub fn identity(field: F, n: usize) -> Self {
        let (z, o) = (field.zero(), field.one());
        Self::from_fn(field, n, n, |i, j| if i == j { o.clone() } else { z.clone() })
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn entries(&self) -> &[F::Elem] {
        &self.entries
    }

    pub fn get(&self, i: usize, j: usize) -> &F::Elem {
        assert!(i < self.rows && j < self.cols, "index ({i}, {j}) out of bounds");
        &self.entries[i * self.cols + j]
    }

    pub fn row(&self, i: usize) -> &[F::Elem] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_vecs(&self) -> Vec<Vec<F::Elem>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.field.clone(), self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    /// Submatrix on the given row and column index lists (in the given order).
    pub fn submatrix(&self, rows: &[usize], cols: &[usize]) -> Self {
        Self::from_fn(self.field.clone(), rows.len(), cols.len(), |i, j| {
            self.get(rows[i], cols[j]).clone()
        })
    }

    pub fn principal(&self, idx: &[usize]) -> Self {
        self.submatrix(idx, idx)
    }

    pub fn map(&self, mut f: impl FnMut(usize, usize, &F::Elem) -> F::Elem) -> Self {
        Self::from_fn(self.field.clone(), self.rows, self.cols, |i, j| f(i, j, self.get(i, j)))
    }

    /// Entrywise image in another field.
    pub fn map_into<G: Field>(&self, target: G, f: impl Fn(&F::Elem) -> G::Elem) -> ExactMatrix<G> {
        let entries = self.entries.iter().map(f).collect();
        ExactMatrix { field: target, rows: self.rows, cols: self.cols, entries }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_same(other)?;
        Ok(self.map(|i, j, a| self.field.add(a, other.get(i, j))))
    }

    pub fn scale(&self, c: &F::Elem) -> Self {
        self.map(|_, _, a| self.field.mul(a, c))
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_ring(other)?;
        if self.cols != other.rows {
            return Err(Error::dims(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let f = &self.field;
        Ok(Self::from_fn(f.clone(), self.rows, other.cols, |i, j| {
            (0..self.cols).fold(f.zero(), |acc, k| f.add(&acc, &f.mul(self.get(i, k), other.get(k, j))))
        }))
    }

    /// Exact rank over the matrix's field.
    pub fn rank(&self) -> usize {
        self.field.rank(self)
    }

    /// Entrywise product. Rank is at most the product of the ranks.
    pub fn hadamard(&self, other: &Self) -> Result<Self> {
        self.check_same(other)?;
        Ok(self.map(|i, j, a| self.field.mul(a, other.get(i, j))))
    }

    /// Kronecker product; `(i1*p + i2, j1*q + j2) -> a[i1][j1] * b[i2][j2]`.
    pub fn kronecker(&self, other: &Self) -> Result<Self> {
        self.check_ring(other)?;
        let (p, q) = (other.rows, other.cols);
        let f = &self.field;
        Ok(Self::from_fn(f.clone(), self.rows * p, self.cols * q, |i, j| {
            f.mul(self.get(i / p, j / q), other.get(i % p, j % q))
        }))
    }

    fn check_ring(&self, other: &Self) -> Result<()> {
        if self.field != other.field {
            return Err(Error::RingMismatch {
                left: self.field.spec().to_string(),
                right: other.field.spec().to_string(),
            });
        }
        Ok(())
    }

    fn check_same(&self, other: &Self) -> Result<()> {
        self.check_ring(other)?;
        if (self.rows, self.cols) != (other.rows, other.cols) {
            return Err(Error::dims(format!(
                "{}x{} vs {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        Ok(())
    }
}

impl ExactMatrix<Rationals> {
    /// Convenience constructor from small integer rows.
    pub fn from_i64_rows<R: AsRef<[i64]>>(rows: &[R]) -> Self {
        let rows = rows
            .iter()
            .map(|r| r.as_ref().iter().map(|&v| Rationals.from_i64(v)).collect())
            .collect();
        Self::from_rows(Rationals, rows).expect("ragged integer rows")
    }
}

impl<F: Field> fmt::Debug for ExactMatrix<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "ExactMatrix<{}> {}x{} [", self.field.spec(), self.rows, self.cols)?;
        for i in 0..self.rows {
            let row: Vec<String> = self
                .row(i)
                .iter()
                .map(|e| self.field.to_rational(e).to_string())
                .collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}
