//! Concyclic planar point sets with all pairwise distances integral.

use num_bigint::BigInt;
use num_integer::{Integer, Roots};
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::PointSet;
use crate::error::{Error, Result};

pub const MAX_CIRCLE_POINTS: usize = 12;

type Q = BigRational;

fn q(n: i64) -> Q {
    Q::from_integer(n.into())
}

/// Half-angles with rational (cos, sin): zero first, then both orientations
/// of each primitive Pythagorean triple by increasing hypotenuse.
fn half_angle_pool(n: usize) -> Vec<(Q, Q)> {
    let mut pool = vec![(q(1), q(0))];
    let mut c: i64 = 2;
    while pool.len() < n {
        c += 1;
        for a in 1..c {
            let b2 = c * c - a * a;
            let b = b2.sqrt();
            if b * b != b2 || b <= a || a.gcd(&b) != 1 {
                continue;
            }
            pool.push((Q::new(a.into(), c.into()), Q::new(b.into(), c.into())));
            pool.push((Q::new(b.into(), c.into()), Q::new(a.into(), c.into())));
        }
    }
    pool.truncate(n);
    pool
}

/// `n` points on one circle with every pairwise distance a positive integer.
/// The first point is the origin and the second lies on the positive x-axis.
pub fn integral_circle_points(n: usize) -> Result<PointSet> {
    if !(2..=MAX_CIRCLE_POINTS).contains(&n) {
        return Err(Error::invalid(format!(
            "integral circle points need 2 <= n <= {MAX_CIRCLE_POINTS}, got {n}"
        )));
    }
    let pool = half_angle_pool(n);
    if pool.len() < n {
        return Err(Error::Budget(format!("half-angle pool exhausted before {n} points")));
    }
    // Circle of diameter 1: the point at angle 2*phi is ((cos 2phi)/2, (sin 2phi)/2).
    let half = Q::new(1.into(), 2.into());
    let raw: Vec<(Q, Q)> = pool
        .iter()
        .map(|(c, s)| ((c * c - s * s) * &half, c * s))
        .collect();
    let (c1, s1) = &pool[1];
    let (c0, s0) = &pool[0];
    // Unit direction from p0 to p1 is (-sin(phi0+phi1), cos(phi0+phi1)).
    let cos_sum = c0 * c1 - s0 * s1;
    let sin_sum = s0 * c1 + c0 * s1;
    let (ux, uy) = (-sin_sum, cos_sum);
    let placed: Vec<(Q, Q)> = raw
        .iter()
        .map(|(x, y)| {
            let (dx, dy) = (x - &raw[0].0, y - &raw[0].1);
            (&dx * &ux + &dy * &uy, &dy * &ux - &dx * &uy)
        })
        .collect();
    let chords: Vec<Q> = (0..n)
        .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
        .map(|(i, j)| {
            let (ci, si) = &pool[i];
            let (cj, sj) = &pool[j];
            (si * cj - ci * sj).abs()
        })
        .collect();
    let all: Vec<&Q> = placed.iter().flat_map(|(x, y)| [x, y]).chain(&chords).collect();
    let lcm = all.iter().fold(BigInt::one(), |acc, v| acc.lcm(v.denom()));
    let ints: Vec<BigInt> = all.iter().map(|v| v.numer() * (&lcm / v.denom())).collect();
    let g = ints.iter().fold(BigInt::zero(), |acc, v| acc.gcd(v));
    let scale = Q::new(lcm, g);
    let points = placed
        .into_iter()
        .map(|(x, y)| vec![x * &scale, y * &scale])
        .collect();
    let set = PointSet::new(points)?;
    if !integral_distances(&set) {
        return Err(Error::Hypothesis("constructed points have a non-integral distance".into()));
    }
    if !concyclic(&set) {
        return Err(Error::Hypothesis("constructed points are not concyclic".into()));
    }
    Ok(set)
}

/// Every pairwise distance is an integer: squared distances are perfect squares.
pub fn integral_distances(set: &PointSet) -> bool {
    (0..set.len()).all(|i| {
        (i + 1..set.len()).all(|j| {
            set.int_sq_dist(i, j).is_some_and(|d| {
                let r = d.sqrt();
                &r * &r == d
            })
        })
    })
}

/// Planar points all lying on the circumcircle of the first three.
/// Sets of at most two points count as concyclic; a collinear first triple does not.
pub fn concyclic(set: &PointSet) -> bool {
    if set.dim() != 2 {
        return false;
    }
    if set.len() < 3 {
        return true;
    }
    let p = |i: usize| (&set.point(i)[0], &set.point(i)[1]);
    let ((ax, ay), (bx, by), (cx, cy)) = (p(0), p(1), p(2));
    let det = q(2) * ((bx - ax) * (cy - ay) - (by - ay) * (cx - ax));
    if det.is_zero() {
        return false;
    }
    let nb = (bx - ax) * (bx - ax) + (by - ay) * (by - ay);
    let nc = (cx - ax) * (cx - ax) + (cy - ay) * (cy - ay);
    let ux = ax + ((cy - ay) * &nb - (by - ay) * &nc) / &det;
    let uy = ay + ((bx - ax) * &nc - (cx - ax) * &nb) / &det;
    let r2 = |i: usize| {
        let (x, y) = p(i);
        (x - &ux) * (x - &ux) + (y - &uy) * (y - &uy)
    };
    let r0 = r2(0);
    (1..set.len()).all(|i| r2(i) == r0)
}
