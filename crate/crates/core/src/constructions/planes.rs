//! 2-flats of the affine space `F_3^d` and the Gram matrix of their
//! incidence vectors, each extended by one common extra point `z`.

use num_bigint::BigUint;

use crate::error::{Error, Result};
use crate::field::{Field, Rationals};
use crate::QMatrix;

pub const MAX_ENUM_DIM: usize = 5;
/// The Gram matrix for `d = 5` would have about 10^9 entries.
pub const MAX_GRAM_DIM: usize = 4;

/// One 2-flat: a direction plane in reduced echelon form plus the smallest
/// point of the coset.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Plane {
    pub directions: [Vec<u8>; 2],
    pub representative: Vec<u8>,
    /// Sorted point indices (base-3 encoding, first coordinate most significant).
    pub points: Vec<usize>,
}

fn decode(mut idx: usize, d: usize) -> Vec<u8> {
    let mut v = vec![0u8; d];
    for k in (0..d).rev() {
        v[k] = (idx % 3) as u8;
        idx /= 3;
    }
    v
}

fn encode(v: &[u8]) -> usize {
    v.iter().fold(0, |acc, &c| acc * 3 + c as usize)
}

/// All 2-dimensional subspaces of `F_3^d` in reduced row echelon form,
/// ordered by pivot columns then free entries.
fn subspaces(d: usize) -> Vec<[Vec<u8>; 2]> {
    let mut out = Vec::new();
    for c1 in 0..d {
        for c2 in c1 + 1..d {
            // free slots: row 1 at columns > c1 except c2, row 2 at columns > c2
            let free1: Vec<usize> = (c1 + 1..d).filter(|&c| c != c2).collect();
            let free2: Vec<usize> = (c2 + 1..d).collect();
            let total = free1.len() + free2.len();
            for code in 0..3usize.pow(total as u32) {
                let digits = decode(code, total);
                let mut r1 = vec![0u8; d];
                let mut r2 = vec![0u8; d];
                r1[c1] = 1;
                r2[c2] = 1;
                for (slot, &c) in free1.iter().enumerate() {
                    r1[c] = digits[slot];
                }
                for (slot, &c) in free2.iter().enumerate() {
                    r2[c] = digits[free1.len() + slot];
                }
                out.push([r1, r2]);
            }
        }
    }
    out
}

/// Every 2-flat of `F_3^d`, without duplicates.
pub fn enumerate_planes(d: usize) -> Result<Vec<Plane>> {
    if !(2..=MAX_ENUM_DIM).contains(&d) {
        return Err(Error::invalid(format!("plane enumeration needs 2 <= d <= {MAX_ENUM_DIM}, got {d}")));
    }
    let npoints = 3usize.pow(d as u32);
    let mut planes = Vec::new();
    for dirs in subspaces(d) {
        let mut covered = vec![false; npoints];
        for start in 0..npoints {
            if covered[start] {
                continue;
            }
            let base = decode(start, d);
            let mut pts: Vec<usize> = Vec::with_capacity(9);
            for a in 0..3u8 {
                for b in 0..3u8 {
                    let p: Vec<u8> = (0..d).map(|k| (base[k] + a * dirs[0][k] + b * dirs[1][k]) % 3).collect();
                    pts.push(encode(&p));
                }
            }
            pts.sort_unstable();
            for &p in &pts {
                covered[p] = true;
            }
            planes.push(Plane { directions: dirs.clone(), representative: base, points: pts });
        }
    }
    Ok(planes)
}

/// `3^d (3^d - 1)(3^d - 3) / (3^2 (3^2 - 1)(3^2 - 3))`.
pub fn expected_member_count(d: usize) -> BigUint {
    let q = BigUint::from(3u32).pow(d as u32);
    (&q * (&q - 1u32) * (&q - 3u32)) / BigUint::from(9u32 * 8 * 6)
}

#[derive(Debug, Clone, PartialEq)]
pub struct PlanesGramResult {
    pub d: usize,
    pub planes: Vec<Plane>,
    /// Inner products of the 0/1 incidence vectors over the `3^d + 1` ground set.
    pub gram: QMatrix,
    pub rank_cap: usize,
}

impl PlanesGramResult {
    pub fn member_count(&self) -> usize {
        self.planes.len()
    }

    /// Index of the extra point `z` in the ground set.
    pub fn extra_point(&self) -> usize {
        3usize.pow(self.d as u32)
    }

    /// Incidence vector of member `i` (the flat plus `z`).
    pub fn incidence(&self, i: usize) -> Vec<u8> {
        let mut v = vec![0u8; self.rank_cap];
        for &p in &self.planes[i].points {
            v[p] = 1;
        }
        v[self.extra_point()] = 1;
        v
    }

    /// Size of the intersection of two flats (without `z`).
    pub fn flat_intersection(&self, i: usize, j: usize) -> usize {
        let (a, b) = (&self.planes[i].points, &self.planes[j].points);
        a.iter().filter(|p| b.binary_search(p).is_ok()).count()
    }
}

pub fn planes_gram(d: usize) -> Result<PlanesGramResult> {
    if !(2..=MAX_ENUM_DIM).contains(&d) {
        return Err(Error::invalid(format!("planes Gram matrix needs 2 <= d <= {MAX_ENUM_DIM}, got {d}")));
    }
    if d > MAX_GRAM_DIM {
        return Err(Error::Budget(format!(
            "the Gram matrix for d = {d} has {}^2 entries",
            expected_member_count(d)
        )));
    }
    let planes = enumerate_planes(d)?;
    debug_assert_eq!(BigUint::from(planes.len()), expected_member_count(d));
    let npoints = 3usize.pow(d as u32);
    let masks: Vec<Vec<bool>> = planes
        .iter()
        .map(|pl| {
            let mut m = vec![false; npoints];
            for &p in &pl.points {
                m[p] = true;
            }
            m
        })
        .collect();
    let n = planes.len();
    let gram = QMatrix::from_fn(Rationals, n, n, |i, j| {
        let shared = planes[j].points.iter().filter(|&&p| masks[i][p]).count();
        Rationals.from_i64(shared as i64 + 1)
    });
    Ok(PlanesGramResult { d, planes, gram, rank_cap: npoints + 1 })
}
