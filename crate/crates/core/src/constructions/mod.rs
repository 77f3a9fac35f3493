//! Explicit matrix and point-set constructions.

mod circle;
mod distance;
mod planes;
mod sumset;

pub use circle::{concyclic, integral_circle_points, integral_distances, MAX_CIRCLE_POINTS};
pub use distance::{
    poly_difference_matrix, prefix_audit, prefix_distinct_counts, squared_distance_matrix, DistanceParts,
    PrefixAudit,
};
pub use planes::{enumerate_planes, expected_member_count, planes_gram, Plane, PlanesGramResult};
pub use sumset::{rectangle_check, sumset_matrix};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use crate::error::{Error, Result};

/// Ordered, pairwise distinct points with exact rational coordinates.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PointSet {
    dim: usize,
    points: Vec<Vec<BigRational>>,
}

impl PointSet {
    pub fn new(points: Vec<Vec<BigRational>>) -> Result<Self> {
        let dim = points
            .first()
            .map(Vec::len)
            .ok_or_else(|| Error::invalid("a point set needs at least one point"))?;
        if dim == 0 {
            return Err(Error::invalid("points need at least one coordinate"));
        }
        if let Some(i) = points.iter().position(|p| p.len() != dim) {
            return Err(Error::dims(format!("point {i} has {} coordinates, expected {dim}", points[i].len())));
        }
        for i in 0..points.len() {
            if let Some(j) = points[..i].iter().position(|p| p == &points[i]) {
                return Err(Error::Duplicate(format!("points {j} and {i} coincide")));
            }
        }
        Ok(PointSet { dim, points })
    }

    pub fn from_i64<R: AsRef<[i64]>>(points: &[R]) -> Result<Self> {
        Self::new(
            points
                .iter()
                .map(|p| p.as_ref().iter().map(|&c| BigRational::from_integer(c.into())).collect())
                .collect(),
        )
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn points(&self) -> &[Vec<BigRational>] {
        &self.points
    }

    pub fn point(&self, i: usize) -> &[BigRational] {
        &self.points[i]
    }

    /// Exact squared Euclidean distance.
    pub fn sq_dist(&self, i: usize, j: usize) -> BigRational {
        self.points[i]
            .iter()
            .zip(&self.points[j])
            .map(|(a, b)| {
                let t = a - b;
                &t * &t
            })
            .fold(BigRational::zero(), |acc, t| acc + t)
    }

    /// Squared distance as an integer, if it is one.
    pub fn int_sq_dist(&self, i: usize, j: usize) -> Option<BigInt> {
        let d = self.sq_dist(i, j);
        d.is_integer().then(|| d.to_integer())
    }
}
