use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};
use serde_json::{json, Value};

use crate::arith::{is_prime_u64, prime_power};
use crate::constructions::PointSet;
use crate::error::{Error, Result};
use crate::field::{Field, PrimeField};
use crate::group::{bound_eval, BoundKind};
use crate::poly::{apply_entrywise, lucas_poly_eval, UniPoly};
use crate::report::{checks_to_json, Check};
use crate::FpMatrix;

/// Largest prime power accepted by [`prime_power_certificate`].
pub const MAX_PRIME_POWER: u64 = 64;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    /// Some squared distance is divisible by the modulus.
    Witness,
    /// No divisible pair, and the rank argument goes through.
    Certified,
    Failed,
}

impl Verdict {
    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::Witness => "witness",
            Verdict::Certified => "certified",
            Verdict::Failed => "failed",
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct CertificateReport {
    pub point_count: usize,
    pub dim: usize,
    pub p: u64,
    /// The prime power, for the `q` variant.
    pub q: Option<u64>,
    /// First pair `(i, j)`, `i < j`, with divisible squared distance.
    pub witness: Option<(usize, usize, BigInt)>,
    pub transformed: Option<FpMatrix>,
    pub transformed_rank: Option<usize>,
    pub bound: num_bigint::BigUint,
    pub verdict: Verdict,
    pub checks: Vec<Check>,
}

impl CertificateReport {
    pub fn to_json(&self) -> Value {
        json!({
            "kind": if self.q.is_some() { "prime-power" } else { "points2" },
            "point_count": self.point_count,
            "dim": self.dim,
            "p": self.p,
            "q": self.q,
            "witness": self.witness.as_ref().map(|(i, j, d2)| json!({"i": i, "j": j, "sq_dist": d2.to_string()})),
            "transformed_rank": self.transformed_rank,
            "transformed": self.transformed.as_ref().map(crate::io::matrix_to_json),
            "bound": self.bound.to_string(),
            "verdict": self.verdict.as_str(),
            "checks": checks_to_json(&self.checks),
        })
    }
}

fn integer_distances(s: &PointSet) -> Result<Vec<Vec<BigInt>>> {
    let n = s.len();
    let mut out = vec![vec![BigInt::zero(); n]; n];
    for i in 0..n {
        for j in 0..n {
            if i != j {
                out[i][j] = s.int_sq_dist(i, j).ok_or_else(|| {
                    Error::Hypothesis(format!("squared distance between points {i} and {j} is not an integer"))
                })?;
            }
        }
    }
    Ok(out)
}

fn first_divisible(delta: &[Vec<BigInt>], modulus: u64) -> Option<(usize, usize, BigInt)> {
    let m = BigInt::from(modulus);
    let n = delta.len();
    (0..n)
        .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
        .find(|&(i, j)| delta[i][j].is_multiple_of(&m))
        .map(|(i, j)| (i, j, delta[i][j].clone()))
}

fn reduce(delta: &[Vec<BigInt>], field: PrimeField) -> FpMatrix {
    let n = delta.len();
    let p = BigInt::from(field.modulus());
    FpMatrix::from_fn(field, n, n, |i, j| delta[i][j].mod_floor(&p).to_u64().expect("residue fits"))
}

/// Either a pair at squared distance divisible by `p`, or the transform
/// `x^(p-1)` of the distance matrix over `F_p`, whose rank must then be at
/// least `T - 1` with `T - 1 <= binom(p + d, d + 1)`.
pub fn points2_certificate(s: &PointSet, p: u64) -> Result<CertificateReport> {
    if !is_prime_u64(p) {
        return Err(Error::NotPrime(p));
    }
    let delta = integer_distances(s)?;
    let (t, d) = (s.len(), s.dim());
    let bound = bound_eval(&BoundKind::Points2 { p, d: d as u64 })? - 1u32;
    let mut report = CertificateReport {
        point_count: t,
        dim: d,
        p,
        q: None,
        witness: first_divisible(&delta, p),
        transformed: None,
        transformed_rank: None,
        bound: bound.clone(),
        verdict: Verdict::Witness,
        checks: Vec::new(),
    };
    if let Some((i, j, d2)) = &report.witness {
        report.checks.push(Check::holds(
            "p divides a squared distance",
            format!("{p} | {d2} at ({i}, {j})"),
            (d2 % BigInt::from(p)).is_zero(),
        ));
        return Ok(report);
    }
    let field = PrimeField::new(p)?;
    let reduced = reduce(&delta, field);
    let fermat = UniPoly::monomial(field, (p - 1) as usize);
    let tm = apply_entrywise(&reduced, &fermat)?;
    let pattern = (0..t).all(|i| (0..t).all(|j| *tm.get(i, j) == u64::from(i != j)));
    let rank = tm.rank();
    let need = t.saturating_sub(1);
    report.checks.push(Check::holds("x^(p-1) maps distances to J - I", format!("{t}x{t} over F_{p}"), pattern));
    report.checks.push(Check::ge("rank over F_p >= T - 1", rank, need));
    report.checks.push(Check::le("T - 1 <= binom(p + d, d + 1)", num_bigint::BigUint::from(need), bound));
    report.verdict = if report.checks.iter().all(|c| c.pass) { Verdict::Certified } else { Verdict::Failed };
    report.transformed = Some(tm);
    report.transformed_rank = Some(rank);
    Ok(report)
}

/// The prime-power variant: a pair at squared distance divisible by `q`,
/// or the transform `binom(x - 1, q - 1)` over `F_p`, which must be a
/// full-rank diagonal matrix with `T <= binom(q + d + 1, d + 1)`.
pub fn prime_power_certificate(s: &PointSet, q: u64) -> Result<CertificateReport> {
    let (p, _) = prime_power(q).ok_or_else(|| Error::invalid(format!("{q} is not a prime power")))?;
    if q > MAX_PRIME_POWER {
        return Err(Error::Budget(format!("q = {q} exceeds {MAX_PRIME_POWER}")));
    }
    let delta = integer_distances(s)?;
    let (t, d) = (s.len(), s.dim());
    let bound = bound_eval(&BoundKind::PrimePower { q, d: d as u64 })?;
    let mut report = CertificateReport {
        point_count: t,
        dim: d,
        p,
        q: Some(q),
        witness: first_divisible(&delta, q),
        transformed: None,
        transformed_rank: None,
        bound: bound.clone(),
        verdict: Verdict::Witness,
        checks: Vec::new(),
    };
    if let Some((i, j, d2)) = &report.witness {
        report.checks.push(Check::holds(
            "q divides a squared distance",
            format!("{q} | {d2} at ({i}, {j})"),
            (d2 % BigInt::from(q)).is_zero(),
        ));
        return Ok(report);
    }
    let field = PrimeField::new(p)?;
    let mut entries = Vec::with_capacity(t * t);
    for row in &delta {
        for x in row {
            entries.push(lucas_poly_eval(x, q, p)?);
        }
    }
    let tm = FpMatrix::new(field, t, t, entries)?;
    let pattern = (0..t).all(|i| (0..t).all(|j| (i == j) != field.is_zero(tm.get(i, j))));
    let rank = tm.rank();
    report.checks.push(Check::holds(
        "binom(x - 1, q - 1) is nonzero exactly on the diagonal",
        format!("{t}x{t} over F_{p}"),
        pattern,
    ));
    report.checks.push(Check::eq("rank over F_p = T", rank, t));
    report.checks.push(Check::le("T <= binom(q + d + 1, d + 1)", num_bigint::BigUint::from(t), bound));
    report.verdict = if report.checks.iter().all(|c| c.pass) { Verdict::Certified } else { Verdict::Failed };
    report.transformed = Some(tm);
    report.transformed_rank = Some(rank);
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigUint;

    fn rectangle() -> PointSet {
        PointSet::from_i64(&[[0, 0], [3, 0], [3, 4], [0, 4]]).unwrap()
    }

    #[test]
    fn rectangle_mod_seven_certifies() {
        let r = points2_certificate(&rectangle(), 7).unwrap();
        assert_eq!(r.verdict, Verdict::Certified);
        assert_eq!(r.transformed_rank, Some(4));
        assert_eq!(r.bound, BigUint::from(84u32));
        let tm = r.transformed.unwrap();
        for i in 0..4 {
            for j in 0..4 {
                assert_eq!(*tm.get(i, j), u64::from(i != j));
            }
        }
    }

    #[test]
    fn rectangle_small_primes_give_witnesses() {
        let r = points2_certificate(&rectangle(), 3).unwrap();
        assert_eq!(r.verdict, Verdict::Witness);
        assert_eq!(r.witness, Some((0, 1, BigInt::from(9))));
        let r = points2_certificate(&rectangle(), 2).unwrap();
        assert_eq!(r.witness, Some((0, 3, BigInt::from(16))));
    }

    #[test]
    fn two_points_mod_two() {
        let s = PointSet::from_i64(&[[0, 0], [1, 0]]).unwrap();
        let r = points2_certificate(&s, 2).unwrap();
        assert_eq!(r.verdict, Verdict::Certified);
        assert_eq!(r.transformed_rank, Some(2));
        assert_eq!(r.bound + 1u32, BigUint::from(5u32));
    }

    #[test]
    fn prime_power_examples() {
        let r = prime_power_certificate(&rectangle(), 4).unwrap();
        assert_eq!(r.verdict, Verdict::Witness);
        assert_eq!(r.witness.as_ref().unwrap().2, BigInt::from(16));
        let s = PointSet::from_i64(&[[0, 0], [3, 0]]).unwrap();
        let r = prime_power_certificate(&s, 4).unwrap();
        assert_eq!(r.verdict, Verdict::Certified);
        assert_eq!(r.p, 2);
        assert_eq!(r.transformed_rank, Some(2));
        let single = PointSet::from_i64(&[[5, 5]]).unwrap();
        let r = prime_power_certificate(&single, 9).unwrap();
        assert_eq!(r.verdict, Verdict::Certified);
        assert_eq!(r.transformed_rank, Some(1));
    }

    #[test]
    fn argument_errors() {
        assert_eq!(points2_certificate(&rectangle(), 9).unwrap_err(), Error::NotPrime(9));
        assert!(prime_power_certificate(&rectangle(), 12).is_err());
        assert!(matches!(prime_power_certificate(&rectangle(), 81), Err(Error::Budget(_))));
        let q = |n: i64, d: i64| num_rational::BigRational::new(n.into(), d.into());
        let half = PointSet::new(vec![vec![q(1, 2), q(0, 1)], vec![q(0, 1), q(0, 1)]]).unwrap();
        assert!(matches!(points2_certificate(&half, 3), Err(Error::Hypothesis(_))));
    }
}
