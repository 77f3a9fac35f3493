use std::collections::BTreeSet;

use num_bigint::BigUint;
use num_rational::BigRational;
use num_traits::Zero;

use super::PointSet;
use crate::arith::binomial;
use crate::error::{Error, Result};
use crate::field::{Field, Rationals};
use crate::poly::MultiPoly;
use crate::QMatrix;

/// Squared-distance matrix with its `d + 2` rank-one parts:
/// `delta = x2 - 2 * sum_k xy[k] + y2`.
#[derive(Debug, Clone, PartialEq)]
pub struct DistanceParts {
    pub delta: QMatrix,
    /// Row `i` constant `|p_i|^2`.
    pub x2: QMatrix,
    /// `(i, j) -> p_ik * p_jk`.
    pub xy: Vec<QMatrix>,
    /// Column `j` constant `|p_j|^2`.
    pub y2: QMatrix,
}

impl DistanceParts {
    pub fn recombine(&self) -> QMatrix {
        let two = Rationals.from_i64(-2);
        let mut acc = self.x2.add(&self.y2).expect("same shape");
        for part in &self.xy {
            acc = acc.add(&part.scale(&two)).expect("same shape");
        }
        acc
    }
}

pub fn squared_distance_matrix(s: &PointSet) -> DistanceParts {
    let n = s.len();
    let norms: Vec<BigRational> = s
        .points()
        .iter()
        .map(|p| p.iter().fold(BigRational::zero(), |acc, c| acc + c * c))
        .collect();
    let delta = QMatrix::from_fn(Rationals, n, n, |i, j| s.sq_dist(i, j));
    let x2 = QMatrix::from_fn(Rationals, n, n, |i, _| norms[i].clone());
    let y2 = QMatrix::from_fn(Rationals, n, n, |_, j| norms[j].clone());
    let xy = (0..s.dim())
        .map(|k| QMatrix::from_fn(Rationals, n, n, |i, j| &s.point(i)[k] * &s.point(j)[k]))
        .collect();
    let parts = DistanceParts { delta, x2, xy, y2 };
    assert_eq!(parts.recombine(), parts.delta, "distance decomposition must be exact");
    parts
}

/// `m_ij = P(x_i - x_j)` for a polynomial vanishing at the origin.
pub fn poly_difference_matrix(s: &PointSet, p: &MultiPoly<Rationals>) -> Result<QMatrix> {
    if p.vars() != s.dim() {
        return Err(Error::dims(format!("{}-variable polynomial on {}-dimensional points", p.vars(), s.dim())));
    }
    if !p.constant_term().is_zero() {
        return Err(Error::invalid("polynomial must vanish at zero"));
    }
    let n = s.len();
    let mut entries = Vec::with_capacity(n * n);
    for i in 0..n {
        for j in 0..n {
            let diff: Vec<BigRational> = s.point(i).iter().zip(s.point(j)).map(|(a, b)| a - b).collect();
            entries.push(p.eval(&diff)?);
        }
    }
    QMatrix::new(Rationals, n, n, entries)
}

/// `counts[i]` = number of distinct distances from `p_i` to `p_0..p_{i-1}`.
/// Distances are compared through their squares.
pub fn prefix_distinct_counts(s: &PointSet) -> Vec<usize> {
    (0..s.len())
        .map(|i| (0..i).map(|j| s.sq_dist(i, j)).collect::<BTreeSet<_>>().len())
        .collect()
}

#[derive(Debug, Clone, PartialEq)]
pub struct PrefixAudit {
    pub counts: Vec<usize>,
    pub s: u64,
    pub max_count: usize,
    /// `binom(d + 2 + s, d + 2)`.
    pub bound: BigUint,
    /// More points than the bound: some count must exceed `s`.
    pub forced: bool,
    /// Some count exceeds `s`.
    pub exceeds: bool,
}

impl PrefixAudit {
    /// The implication `forced => exceeds`.
    pub fn holds(&self) -> bool {
        !self.forced || self.exceeds
    }
}

pub fn prefix_audit(points: &PointSet, s: u64) -> PrefixAudit {
    let counts = prefix_distinct_counts(points);
    let max_count = counts.iter().copied().max().unwrap_or(0);
    let d = points.dim() as u64;
    let bound = binomial(d + 2 + s, d + 2);
    PrefixAudit {
        forced: BigUint::from(points.len()) > bound,
        exceeds: max_count as u64 > s,
        counts,
        s,
        max_count,
        bound,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(v: i64) -> BigRational {
        BigRational::from_integer(v.into())
    }

    #[test]
    fn single_point() {
        let s = PointSet::from_i64(&[[3, 4]]).unwrap();
        assert_eq!(squared_distance_matrix(&s).delta, QMatrix::from_i64_rows(&[[0]]));
        assert_eq!(prefix_distinct_counts(&s), vec![0]);
    }

    #[test]
    fn right_triangle() {
        let s = PointSet::from_i64(&[[0, 0], [1, 0], [0, 1]]).unwrap();
        let parts = squared_distance_matrix(&s);
        assert_eq!(parts.delta, QMatrix::from_i64_rows(&[[0, 1, 1], [1, 0, 2], [1, 2, 0]]));
        assert_eq!(parts.delta.rank(), 3);
        assert!(parts.xy.iter().all(|p| p.rank() <= 1));
    }

    #[test]
    fn rectangle_values() {
        let s = PointSet::from_i64(&[[0, 0], [3, 0], [3, 4], [0, 4]]).unwrap();
        let delta = squared_distance_matrix(&s).delta;
        let vals: BTreeSet<BigRational> =
            (0..4).flat_map(|i| (0..4).filter(move |&j| j != i).map(move |j| (i, j))).map(|(i, j)| delta.get(i, j).clone()).collect();
        assert_eq!(vals, [q(9), q(16), q(25)].into_iter().collect());
        assert!(delta.rank() <= 4);
    }

    #[test]
    fn polydiff_examples() {
        let s = PointSet::from_i64(&[[0], [1], [3]]).unwrap();
        let z1 = MultiPoly::var(Rationals, 1, 0);
        assert_eq!(
            poly_difference_matrix(&s, &z1).unwrap(),
            QMatrix::from_i64_rows(&[[0, -1, -3], [1, 0, -2], [3, 2, 0]])
        );
        let rect = PointSet::from_i64(&[[0, 0], [3, 0], [3, 4], [0, 4]]).unwrap();
        let sq = |i| MultiPoly::var(Rationals, 2, i).mul(&MultiPoly::var(Rationals, 2, i)).unwrap();
        let norm = sq(0).add(&sq(1)).unwrap();
        assert_eq!(poly_difference_matrix(&rect, &norm).unwrap(), squared_distance_matrix(&rect).delta);
        let quartic = norm.mul(&norm).unwrap();
        let m = poly_difference_matrix(&rect, &quartic).unwrap();
        let vals: BTreeSet<BigRational> = (0..4)
            .flat_map(|i| (0..4).filter(move |&j| j != i).map(move |j| (i, j)))
            .map(|(i, j)| m.get(i, j).clone())
            .collect();
        assert_eq!(vals, [q(81), q(256), q(625)].into_iter().collect());
        let shifted = norm.add(&MultiPoly::constant(Rationals, 2, q(1))).unwrap();
        assert!(poly_difference_matrix(&rect, &shifted).is_err());
    }

    #[test]
    fn prefix_examples() {
        let line = PointSet::from_i64(&[[0], [1], [2], [4]]).unwrap();
        assert_eq!(prefix_distinct_counts(&line), vec![0, 1, 2, 3]);
        let square = PointSet::from_i64(&[[0, 0], [1, 0], [1, 1], [0, 1]]).unwrap();
        assert_eq!(prefix_distinct_counts(&square), vec![0, 1, 2, 2]);
        let audit = prefix_audit(&square, 0);
        assert_eq!(audit.bound, BigUint::from(1u32));
        assert!(audit.forced && audit.exceeds && audit.holds());
    }
}
