use num_traits::Zero;

use crate::constructions::rectangle_check;
use crate::elim::{dependency_coefficients, row_basis, DependencyForm};
use crate::error::{Error, Result};
use crate::field::Rationals;
use crate::group::no_vanishing_proper_subsum;
use crate::group::GroupSpec;
use crate::{QMatrix, Rational};

/// Size guards for the replay pipelines.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ReplayCaps {
    /// Largest dependency support searched for minimal zero sub-sums.
    pub max_support: usize,
    pub max_n: usize,
}

impl Default for ReplayCaps {
    fn default() -> Self {
        ReplayCaps { max_support: 12, max_n: 512 }
    }
}

/// Which hypothesis admitted the matrix.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Precondition {
    DiagonalOutsideGroup,
    RectangleCondition,
}

impl Precondition {
    pub fn as_str(self) -> &'static str {
        match self {
            Precondition::DiagonalOutsideGroup => "diagonal outside group",
            Precondition::RectangleCondition => "rectangle condition",
        }
    }
}

/// Label of one off-diagonal entry `M(row, col)` of a non-basis row.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LabelRecord {
    pub row: usize,
    pub col: usize,
    /// Positions in the basis list; the zero sub-sum is the target term plus these.
    pub index_set: Vec<usize>,
    pub label: usize,
}

impl LabelRecord {
    /// The terms `c0 w_i` and `c_l v_(l,i)` for `l` in the index set.
    pub fn terms(&self, m: &QMatrix, form: &DependencyForm<Rationals>) -> Vec<Rational> {
        let mut t = vec![form.c0() * m.get(self.row, self.col)];
        t.extend(self.index_set.iter().map(|&k| form.basis_coeff(k) * m.get(form.basis[k], self.col)));
        t
    }

    /// Recomputes the sub-sum from `m`: zero in total, nonzero on every
    /// proper subset, and labelled by its smallest index.
    pub fn validate(&self, m: &QMatrix, form: &DependencyForm<Rationals>) -> bool {
        if form.target_row != self.row || self.index_set.first() != Some(&self.label) {
            return false;
        }
        if !self.index_set.windows(2).all(|w| w[0] < w[1]) {
            return false;
        }
        let terms = self.terms(m, form);
        terms.iter().sum::<Rational>().is_zero() && no_vanishing_proper_subsum(&terms)
    }
}

/// Output of [`label_matrix`].
#[derive(Debug, Clone, PartialEq)]
pub struct Labeling {
    pub basis: Vec<usize>,
    pub nonbasis: Vec<usize>,
    /// One dependency per non-basis row, in `nonbasis` order.
    pub forms: Vec<DependencyForm<Rationals>>,
    /// Off-diagonal entries between non-basis rows and columns, row-major.
    pub records: Vec<LabelRecord>,
    pub precondition: Precondition,
}

impl Labeling {
    pub fn rank(&self) -> usize {
        self.basis.len()
    }

    /// Number of non-basis rows.
    pub fn live(&self) -> usize {
        self.nonbasis.len()
    }

    /// Record for non-basis positions `a != b`.
    pub fn record(&self, a: usize, b: usize) -> &LabelRecord {
        assert_ne!(a, b, "diagonal entries are not labelled");
        let n = self.live();
        &self.records[a * (n - 1) + if b < a { b } else { b - 1 }]
    }

    /// `labels[a][b]` for `b < a`: the lower-triangular colouring.
    pub fn lower_labels(&self) -> Vec<Vec<usize>> {
        (0..self.live()).map(|a| (0..a).map(|b| self.record(a, b).label).collect()).collect()
    }

    pub fn validate_all(&self, m: &QMatrix) -> bool {
        let n = self.live();
        (0..n).all(|a| (0..n).filter(|&b| b != a).all(|b| self.record(a, b).validate(m, &self.forms[a])))
    }
}

/// Checks the group hypothesis on `m` and reports which variant holds.
pub fn check_hypothesis(m: &QMatrix, g: &GroupSpec) -> Result<Precondition> {
    if !m.is_square() {
        return Err(Error::dims(format!("replay needs a square matrix, got {}x{}", m.rows(), m.cols())));
    }
    let n = m.rows();
    for i in 0..n {
        for j in 0..n {
            if i != j && !g.contains(m.get(i, j)) {
                return Err(Error::Hypothesis(format!(
                    "off-diagonal entry ({i}, {j}) = {} is not in {g}",
                    m.get(i, j)
                )));
            }
        }
    }
    match (0..n).find(|&i| g.contains(m.get(i, i))) {
        None => Ok(Precondition::DiagonalOutsideGroup),
        Some(i) => match rectangle_check(m)? {
            None => Ok(Precondition::RectangleCondition),
            Some((a, b, c)) => Err(Error::Hypothesis(format!(
                "diagonal entry ({i}, {i}) = {} is in {g} and the rectangle condition fails at ({a}, {b}, {c})",
                m.get(i, i)
            ))),
        },
    }
}

/// Advances `idx` to the next `k`-subset of `0..n` in lexicographic order.
fn next_combination(idx: &mut [usize], n: usize) -> bool {
    let k = idx.len();
    for i in (0..k).rev() {
        if idx[i] < n - k + i {
            idx[i] += 1;
            for t in i + 1..k {
                idx[t] = idx[t - 1] + 1;
            }
            return true;
        }
    }
    false
}

/// Smallest zero sub-sum containing `t0`, by size then lexicographically.
/// Returns positions into `others`. Minimal size rules out vanishing
/// proper sub-sums.
fn minimal_zero_subsum(t0: &Rational, others: &[Rational]) -> Option<Vec<usize>> {
    for size in 1..=others.len() {
        let mut idx: Vec<usize> = (0..size).collect();
        loop {
            let sum: Rational = t0 + idx.iter().map(|&k| &others[k]).sum::<Rational>();
            if sum.is_zero() {
                return Some(idx);
            }
            if !next_combination(&mut idx, others.len()) {
                break;
            }
        }
    }
    None
}

/// Extracts the row basis, the dependency of each other row on it, and a
/// label for every off-diagonal entry between non-basis rows and columns.
pub fn label_matrix(m: &QMatrix, g: &GroupSpec, caps: &ReplayCaps) -> Result<Labeling> {
    if m.rows() > caps.max_n {
        return Err(Error::Budget(format!("n = {} exceeds the replay cap {}", m.rows(), caps.max_n)));
    }
    let precondition = check_hypothesis(m, g)?;
    label_matrix_unchecked(m, precondition, caps)
}

/// [`label_matrix`] without the group hypothesis check. Entries that take
/// part in a sub-sum must still be nonzero.
pub fn label_matrix_unchecked(m: &QMatrix, precondition: Precondition, caps: &ReplayCaps) -> Result<Labeling> {
    if m.rows() > caps.max_n {
        return Err(Error::Budget(format!("n = {} exceeds the replay cap {}", m.rows(), caps.max_n)));
    }
    let (basis, _) = row_basis(m);
    let nonbasis: Vec<usize> = (0..m.rows()).filter(|i| basis.binary_search(i).is_err()).collect();
    let forms = nonbasis
        .iter()
        .map(|&w| dependency_coefficients(m, &basis, w))
        .collect::<Result<Vec<_>>>()?;
    let f = Rationals;
    let mut records = Vec::with_capacity(nonbasis.len() * nonbasis.len().saturating_sub(1));
    for (a, &w) in nonbasis.iter().enumerate() {
        let form = &forms[a];
        let support = form.support(&f);
        if support.len() > caps.max_support {
            return Err(Error::Budget(format!(
                "row {w} depends on {} basis rows, above the sub-sum cap {}",
                support.len(),
                caps.max_support
            )));
        }
        for &i in &nonbasis {
            if i == w {
                continue;
            }
            let t0 = form.c0() * m.get(w, i);
            let others: Vec<Rational> =
                support.iter().map(|&k| form.basis_coeff(k) * m.get(basis[k], i)).collect();
            let pick = minimal_zero_subsum(&t0, &others).ok_or_else(|| {
                Error::Hypothesis(format!("entry ({w}, {i}) has no zero sub-sum; is it zero?"))
            })?;
            let index_set: Vec<usize> = pick.iter().map(|&p| support[p]).collect();
            records.push(LabelRecord { row: w, col: i, label: index_set[0], index_set });
        }
    }
    Ok(Labeling { basis, nonbasis, forms, records, precondition })
}
