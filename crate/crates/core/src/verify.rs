//! Seeded batches of random instances checked against the rank bounds.
//!
//! Every suite draws from one `ChaCha8Rng` seeded with the caller's seed,
//! so a (suite, seed, trials) triple always reproduces the same report.

use std::collections::BTreeSet;

use num_bigint::BigUint;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use crate::arith::binomial;
use crate::constructions::{prefix_audit, PointSet};
use crate::error::{Error, Result};
use crate::field::{Field, Rationals};
use crate::poly::{apply_entrywise, apply_multivariate, apply_rowwise, t11_bound, MultiPoly, UniPoly};
use crate::report::{all_pass, checks_to_json, Check};
use crate::{QMatrix, Rational};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Suite {
    /// Polynomial applied entrywise to a low-rank matrix.
    Noga,
    /// Row-wise annihilation of few sub-diagonal values.
    Matrix,
    /// Hadamard and Kronecker rank relations.
    Hadamard,
    /// Multivariate polynomials applied to rows of several matrices.
    T11,
    /// Prefix distinct-distance threshold on random planar sets.
    Prefix,
}

impl Suite {
    pub fn name(self) -> &'static str {
        match self {
            Suite::Noga => "noga",
            Suite::Matrix => "matrix",
            Suite::Hadamard => "hadamard",
            Suite::T11 => "t11",
            Suite::Prefix => "prefix",
        }
    }

    pub fn from_name(s: &str) -> Result<Self> {
        Ok(match s {
            "noga" => Suite::Noga,
            "matrix" => Suite::Matrix,
            "hadamard" => Suite::Hadamard,
            "t11" => Suite::T11,
            "prefix" => Suite::Prefix,
            other => return Err(Error::invalid(format!("unknown suite {other:?}"))),
        })
    }

    pub fn default_trials(self) -> usize {
        match self {
            Suite::Noga | Suite::Hadamard => 200,
            Suite::Matrix => 100,
            Suite::T11 | Suite::Prefix => 50,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct SuiteReport {
    pub suite: Suite,
    pub seed: u64,
    pub trials: usize,
    pub checks: Vec<Check>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        all_pass(&self.checks)
    }

    pub fn failures(&self) -> usize {
        self.checks.iter().filter(|c| !c.pass).count()
    }

    pub fn to_json(&self) -> Value {
        json!({
            "suite": self.suite.name(),
            "seed": self.seed,
            "trials": self.trials,
            "pass": self.passed(),
            "failures": self.failures(),
            "checks": checks_to_json(&self.checks),
        })
    }
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn q(v: i64) -> Rational {
    Rationals.from_i64(v)
}

fn small(rng: &mut impl Rng) -> Rational {
    q(rng.gen_range(-5..=5))
}

/// `rows x cols` product of random `rows x d` and `d x cols` integer matrices,
/// resampled until its rank is exactly `d`.
pub fn planted_rank(rng: &mut impl Rng, rows: usize, cols: usize, d: usize) -> QMatrix {
    assert!(d <= rows.min(cols), "rank {d} impossible for {rows}x{cols}");
    loop {
        let u = QMatrix::from_fn(Rationals, rows, d, |_, _| small(rng));
        let v = QMatrix::from_fn(Rationals, d, cols, |_, _| small(rng));
        let m = u.mul(&v).expect("shapes agree");
        if m.rank() == d {
            return m;
        }
    }
}

/// Random polynomial of exact degree `k` with small integer coefficients.
pub fn random_poly(rng: &mut impl Rng, k: usize) -> UniPoly<Rationals> {
    let mut coeffs: Vec<Rational> = (0..=k).map(|_| small(rng)).collect();
    while coeffs[k] == q(0) {
        coeffs[k] = small(rng);
    }
    UniPoly::new(Rationals, coeffs)
}

/// Distinct integer points in `[0, side]^dim`.
pub fn random_points(rng: &mut impl Rng, n: usize, dim: usize, side: i64) -> PointSet {
    let mut seen = BTreeSet::new();
    let mut pts = Vec::with_capacity(n);
    while pts.len() < n {
        let p: Vec<i64> = (0..dim).map(|_| rng.gen_range(0..=side)).collect();
        if seen.insert(p.clone()) {
            pts.push(p);
        }
    }
    PointSet::from_i64(&pts).expect("distinct points")
}

pub fn run_suite(suite: Suite, seed: u64, trials: usize) -> Result<SuiteReport> {
    let mut rng = rng(seed);
    let mut checks = Vec::with_capacity(trials * 2);
    for t in 0..trials {
        match suite {
            Suite::Noga => noga_trial(&mut rng, t, &mut checks)?,
            Suite::Matrix => matrix_trial(&mut rng, t, &mut checks)?,
            Suite::Hadamard => hadamard_trial(&mut rng, t, &mut checks)?,
            Suite::T11 => t11_trial(&mut rng, t, &mut checks)?,
            Suite::Prefix => prefix_trial(&mut rng, t, &mut checks),
        }
    }
    Ok(SuiteReport { suite, seed, trials, checks })
}

fn noga_trial(rng: &mut impl Rng, t: usize, checks: &mut Vec<Check>) -> Result<()> {
    let n = rng.gen_range(1..=12);
    let d = rng.gen_range(1..=4usize.min(n));
    let k = rng.gen_range(0..=3);
    let m = planted_rank(rng, n, n, d);
    let p = random_poly(rng, k);
    let rank = apply_entrywise(&m, &p)?.rank();
    let (k, d64) = (k as u64, d as u64);
    checks.push(Check::le(&format!("trial {t}: rank(P(M)) <= binom(k + d, k)"), BigUint::from(rank), binomial(k + d64, k)));
    let mono = apply_entrywise(&m, &UniPoly::monomial(Rationals, k as usize))?.rank();
    checks.push(Check::le(
        &format!("trial {t}: rank(M^k) <= binom(k + d - 1, k)"),
        BigUint::from(mono),
        binomial(k + d64 - 1, k),
    ));
    Ok(())
}

fn matrix_trial(rng: &mut impl Rng, t: usize, checks: &mut Vec<Check>) -> Result<()> {
    let n = rng.gen_range(2..=8);
    let s = rng.gen_range(1..=3usize);
    let mut rows = Vec::with_capacity(n);
    let mut sub_values = Vec::with_capacity(n);
    for i in 0..n {
        let mut pool: Vec<i64> = (-6..=6).collect();
        pool.shuffle(rng);
        let vals = &pool[..s];
        let diag = pool[s];
        let row: Vec<Rational> = (0..n)
            .map(|j| match j.cmp(&i) {
                std::cmp::Ordering::Less => q(*vals.choose(rng).expect("s >= 1")),
                std::cmp::Ordering::Equal => q(diag),
                std::cmp::Ordering::Greater => small(rng),
            })
            .collect();
        let used: BTreeSet<Rational> = row[..i].iter().cloned().collect();
        sub_values.push(used.into_iter().collect::<Vec<_>>());
        rows.push(row);
    }
    let m = QMatrix::from_rows(Rationals, rows)?;
    let polys = sub_values
        .iter()
        .map(|vs| UniPoly::annihilator(Rationals, vs))
        .collect::<Result<Vec<_>>>()?;
    let a = apply_rowwise(&m, &polys)?;
    let lower_zero = (0..n).all(|i| (0..i).all(|j| a.get(i, j) == &q(0)));
    let diag = (0..n).all(|i| a.get(i, i) != &q(0));
    checks.push(Check::holds(
        &format!("trial {t}: annihilation zeroes the lower triangle and keeps the diagonal"),
        format!("{n}x{n}"),
        lower_zero && diag,
    ));
    checks.push(Check::eq(&format!("trial {t}: annihilated rank = n"), a.rank(), n));
    let rho = m.rank() as u64;
    checks.push(Check::le(
        &format!("trial {t}: n <= binom(rho + s, rho)"),
        BigUint::from(n),
        binomial(rho + s as u64, rho),
    ));
    Ok(())
}

fn hadamard_trial(rng: &mut impl Rng, t: usize, checks: &mut Vec<Check>) -> Result<()> {
    let n = rng.gen_range(1..=6);
    let m = rng.gen_range(1..=6);
    let ra = rng.gen_range(0..=3usize.min(n).min(m));
    let rb = rng.gen_range(0..=3usize.min(n).min(m));
    let a = planted_rank(rng, n, m, ra);
    let b = planted_rank(rng, n, m, rb);
    checks.push(Check::le(&format!("trial {t}: rank(A o B) <= rank(A) rank(B)"), a.hadamard(&b)?.rank(), ra * rb));
    checks.push(Check::eq(&format!("trial {t}: rank(A x B) = rank(A) rank(B)"), a.kronecker(&b)?.rank(), ra * rb));
    Ok(())
}

fn t11_trial(rng: &mut impl Rng, t: usize, checks: &mut Vec<Check>) -> Result<()> {
    let r = rng.gen_range(1..=3usize);
    let cols = rng.gen_range(4..=16);
    let sources: Vec<QMatrix> = (0..r)
        .map(|_| {
            let rows = rng.gen_range(1..=6);
            let d = rng.gen_range(1..=2usize.min(rows));
            planted_rank(rng, rows, cols, d)
        })
        .collect();
    let ranks: Vec<u64> = sources.iter().map(|a| a.rank() as u64).collect();
    let degrees: Vec<u64> = (0..r).map(|_| rng.gen_range(0..=2)).collect();
    let out_rows = rng.gen_range(1..=24);
    let mut rows = Vec::with_capacity(out_rows);
    let mut max_deg = vec![0u64; r];
    for _ in 0..out_rows {
        let terms: Vec<(Vec<u32>, Rational)> = (0..rng.gen_range(1..=4))
            .map(|_| {
                let exp: Vec<u32> = degrees.iter().map(|&k| rng.gen_range(0..=k as u32)).collect();
                (exp, small(rng))
            })
            .collect();
        let poly = MultiPoly::new(Rationals, r, terms)?;
        for (i, md) in max_deg.iter_mut().enumerate() {
            *md = (*md).max(poly.degree_in(i) as u64);
        }
        let picked: Vec<&[Rational]> = sources.iter().map(|a| a.row(rng.gen_range(0..a.rows()))).collect();
        rows.push(apply_multivariate(&picked, &poly)?);
    }
    let stacked = QMatrix::from_rows(Rationals, rows)?;
    debug_assert!(max_deg.iter().zip(&degrees).all(|(a, b)| a <= b));
    checks.push(Check::le(
        &format!("trial {t}: rank(stacked) <= prod binom(k_i + d_i, d_i)"),
        BigUint::from(stacked.rank()),
        t11_bound(&degrees, &ranks)?,
    ));
    Ok(())
}

fn prefix_trial(rng: &mut impl Rng, t: usize, checks: &mut Vec<Check>) {
    let n = rng.gen_range(1..=20);
    let pts = random_points(rng, n, 2, 12);
    for s in 0..=3u64 {
        let audit = prefix_audit(&pts, s);
        checks.push(Check::holds(
            &format!("trial {t}, s = {s}: n > binom(d + 2 + s, d + 2) forces a prefix count > s"),
            format!("n = {n}, max count = {}, bound = {}", audit.max_count, audit.bound),
            audit.holds(),
        ));
    }
}
