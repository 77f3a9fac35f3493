use std::collections::BTreeSet;

use num_bigint::BigUint;
use num_traits::{One, Zero};

use super::labels::{label_matrix, Labeling, ReplayCaps};
use super::{Artifacts, FirstArtifacts, ReplayMode, ReplayReport};
use crate::arith::binomial;
use crate::error::{Error, Result};
use crate::field::{Field, Rationals};
use crate::group::{subspace_bound_at_least, GroupSpec};
use crate::poly::{apply_rowwise, UniPoly};
use crate::report::Check;
use crate::{QMatrix, Rational};

/// A principal index set whose sub-diagonal labels all agree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MonoSet {
    /// Increasing positions into the labelled vertex set.
    pub indices: Vec<usize>,
    /// The common label, `None` when fewer than two indices were chosen.
    pub label: Option<usize>,
    /// `ceil(log_d(N) / d)` for `d >= 2`, `N` for `d <= 1`.
    pub floor: usize,
}

/// Smallest `f` with `d^(f d) >= n`, i.e. `ceil(log_d(n) / d)`.
pub fn ramsey_floor(n: usize, d: usize) -> usize {
    if d <= 1 {
        return n;
    }
    let target = BigUint::from(n);
    let step = BigUint::from(d).pow(d as u32);
    let mut acc = BigUint::one();
    let mut f = 0;
    while acc < target {
        acc *= &step;
        f += 1;
    }
    f
}

/// Greedy neighborhood chasing on the colouring `labels[i][j]` (`j < i`).
/// The anchor is always the smallest live vertex; the live set shrinks to the
/// anchor's neighbours in its majority colour, ties to the smallest colour.
pub fn mono_principal_submatrix(labels: &[Vec<usize>], colors: usize) -> MonoSet {
    let n = labels.len();
    let floor = ramsey_floor(n, colors);
    let label = |a: usize, b: usize| if a > b { labels[a][b] } else { labels[b][a] };
    let mut live: Vec<usize> = (0..n).collect();
    let mut chain: Vec<(usize, Option<usize>)> = Vec::new();
    while let Some((&anchor, rest)) = live.split_first() {
        if rest.is_empty() {
            chain.push((anchor, None));
            break;
        }
        let mut counts: Vec<usize> = Vec::new();
        for &v in rest {
            let c = label(v, anchor);
            if counts.len() <= c {
                counts.resize(c + 1, 0);
            }
            counts[c] += 1;
        }
        let best = (0..counts.len()).max_by_key(|&c| (counts[c], std::cmp::Reverse(c))).expect("nonempty");
        chain.push((anchor, Some(best)));
        live = rest.iter().copied().filter(|&v| label(v, anchor) == best).collect();
    }
    let mut freq: Vec<usize> = Vec::new();
    for &(_, c) in &chain {
        if let Some(c) = c {
            if freq.len() <= c {
                freq.resize(c + 1, 0);
            }
            freq[c] += 1;
        }
    }
    let Some(top) = (0..freq.len()).filter(|&c| freq[c] > 0).max_by_key(|&c| (freq[c], std::cmp::Reverse(c))) else {
        return MonoSet { indices: chain.iter().map(|&(a, _)| a).collect(), label: None, floor };
    };
    let mut indices: Vec<usize> = chain.iter().filter(|&&(_, c)| c == Some(top)).map(|&(a, _)| a).collect();
    indices.push(chain.last().expect("nonempty chain").0);
    MonoSet { indices, label: Some(top), floor }
}

/// Exhaustive scan: every sub-diagonal pair of `indices` carries `label`.
pub fn is_monochromatic(labels: &[Vec<usize>], indices: &[usize], label: Option<usize>) -> bool {
    let mut seen = BTreeSet::new();
    for (x, &a) in indices.iter().enumerate() {
        for &b in &indices[..x] {
            let c = if a > b { labels[a][b] } else { labels[b][a] };
            seen.insert(c);
        }
    }
    match label {
        Some(l) => seen.iter().all(|&c| c == l),
        None => seen.len() <= 1,
    }
}

/// Divides entry `(a, b)` of the principal submatrix on `u` (positions in the
/// non-basis list) by `c_l(a) * v_(l, b)`. A row whose dependency has
/// `c_l = 0` is left unscaled.
pub fn normalize_u(m: &QMatrix, lab: &Labeling, u: &[usize], label: usize) -> Result<QMatrix> {
    let f = Rationals;
    let vrow = lab.basis[label];
    let mut rows = Vec::with_capacity(u.len());
    for &a in u {
        let c = lab.forms[a].basis_coeff(label);
        let rf = if c.is_zero() { f.one() } else { c.clone() };
        let mut row = Vec::with_capacity(u.len());
        for &b in u {
            let col = lab.nonbasis[b];
            let v = m.get(vrow, col);
            if v.is_zero() {
                return Err(Error::ZeroDivisor(format!("basis entry ({vrow}, {col}) is zero")));
            }
            row.push(m.get(lab.nonbasis[a], col) / (&rf * v));
        }
        rows.push(row);
    }
    QMatrix::from_rows(f, rows)
}

/// Distinct strictly-sub-diagonal values of row `i`.
fn subdiagonal_values(u: &QMatrix, i: usize) -> Vec<Rational> {
    let set: BTreeSet<Rational> = (0..i).map(|j| u.get(i, j).clone()).collect();
    set.into_iter().collect()
}

/// Replays the Ramsey-based argument on `m`: labels, a monochromatic
/// principal submatrix `U`, its normalization `U'`, and row-wise annihilation.
pub fn replay_first(m: &QMatrix, g: &GroupSpec, caps: &ReplayCaps) -> Result<ReplayReport> {
    let lab = label_matrix(m, g, caps)?;
    let d = lab.rank();
    let nlive = lab.live();
    let labels = lab.lower_labels();
    let mono = mono_principal_submatrix(&labels, d);
    let label = mono.label.unwrap_or(0);
    let mut checks = vec![
        Check::holds("label records re-validate", format!("{} records", lab.records.len()), lab.validate_all(m)),
        Check::holds(
            "U is monochromatic",
            format!("{} indices", mono.indices.len()),
            is_monochromatic(&labels, &mono.indices, mono.label),
        ),
        Check::ge("|U| >= ceil(log_d(n - d) / d)", mono.indices.len(), mono.floor),
    ];
    let (u_prime, distinct, final_matrix) = if d == 0 || mono.indices.is_empty() {
        (QMatrix::zeros(Rationals, 0, 0), Vec::new(), QMatrix::zeros(Rationals, 0, 0))
    } else {
        let up = normalize_u(m, &lab, &mono.indices, label)?;
        let k = up.rows();
        let distinct_rows = (0..k).all(|i| {
            let diag = up.get(i, i);
            (0..k).all(|j| j == i || up.get(i, j) != diag)
        });
        checks.push(Check::holds("U' diagonal differs from its row", "every row", distinct_rows));
        let values: Vec<Vec<Rational>> = (0..k).map(|i| subdiagonal_values(&up, i)).collect();
        let polys = values
            .iter()
            .map(|vs| UniPoly::annihilator(Rationals, vs))
            .collect::<Result<Vec<_>>>()?;
        let fin = apply_rowwise(&up, &polys)?;
        let lower_zero = (0..k).all(|i| (0..i).all(|j| fin.get(i, j).is_zero()));
        let diag_nonzero = (0..k).all(|i| !fin.get(i, i).is_zero());
        checks.push(Check::holds("annihilated lower triangle is zero", format!("{k}x{k}"), lower_zero));
        checks.push(Check::holds("annihilated diagonal is nonzero", format!("{k}x{k}"), diag_nonzero));
        let counts: Vec<usize> = values.iter().map(Vec::len).collect();
        (up, counts, fin)
    };
    let rank_m = m.rank();
    let rank_up = u_prime.rank();
    checks.push(Check::le("rank(U') <= rank(M)", rank_up, rank_m));
    let s = distinct.iter().copied().max().unwrap_or(0);
    if !distinct.is_empty() {
        let cap = binomial((rank_up + s) as u64, rank_up as u64);
        checks.push(Check::le("|U| <= binom(rank(U') + s, rank(U'))", BigUint::from(mono.indices.len()), cap));
        checks.push(subspace_cap_check("s <= 2^(d-1) A(d, r)", s, d, g.rank()));
    }
    let artifacts = Artifacts::First(FirstArtifacts {
        live_rows: nlive,
        record_count: lab.records.len(),
        labels,
        u_rows: mono.indices.iter().map(|&a| lab.nonbasis[a]).collect(),
        label: mono.label,
        floor: mono.floor,
        u_prime,
        distinct_counts: distinct,
    });
    Ok(ReplayReport {
        mode: ReplayMode::First,
        n: m.rows(),
        basis: lab.basis.clone(),
        rank: d,
        precondition: lab.precondition,
        artifacts,
        final_matrix,
        checks,
    })
}

/// `count <= 2^(d-1) A(d, r)`, decided without materializing `A`.
pub(crate) fn subspace_cap_check(name: &str, count: usize, d: usize, r: usize) -> Check {
    let rhs = format!("2^{} * A({d}, {r})", d.saturating_sub(1));
    let pass = if d == 0 {
        count == 0
    } else {
        let per = BigUint::one() << (d - 1);
        let need = (BigUint::from(count) + &per - 1u32) / &per;
        subspace_bound_at_least(d as u64, r as u64, &need)
    };
    Check::new(name, count, "<=", rhs, pass)
}
