use std::collections::BTreeSet;

use num_bigint::BigUint;
use num_traits::Zero;

use super::first::subspace_cap_check;
use super::labels::{label_matrix, ReplayCaps};
use super::{Artifacts, ReplayMode, ReplayReport, SecondArtifacts};
use crate::error::{Error, Result};
use crate::field::{Field, Rationals};
use crate::group::GroupSpec;
use crate::poly::{apply_multivariate, t11_bound, MultiPoly, UniPoly};
use crate::report::Check;
use crate::{QMatrix, Rational};

/// Upper limit on the number of monomials in an expanded `Q_w`.
pub const MAX_Q_TERMS: usize = 1 << 20;

/// Replays the Ramsey-free argument: the matrices `M_l` and `A_l`, the value
/// sets `S_(w,l)`, the polynomials `Q_w`, and the diagonal-only result.
pub fn replay_second(m: &QMatrix, g: &GroupSpec, caps: &ReplayCaps) -> Result<ReplayReport> {
    let lab = label_matrix(m, g, caps)?;
    let f = Rationals;
    let d = lab.rank();
    let nl = lab.live();
    let rank_m = m.rank();
    let mut checks = vec![Check::holds(
        "label records re-validate",
        format!("{} records", lab.records.len()),
        lab.validate_all(m),
    )];

    // M_l(w, j) = m_wj / v_lj over non-basis rows and columns; A_l rescales row w by c_l(w).
    let mut m_ranks = Vec::with_capacity(d);
    let mut a_mats = Vec::with_capacity(d);
    for (l, &vrow) in lab.basis.iter().enumerate() {
        let mut m_rows = Vec::with_capacity(nl);
        let mut a_rows = Vec::with_capacity(nl);
        for (a, &w) in lab.nonbasis.iter().enumerate() {
            let mut row = Vec::with_capacity(nl);
            for &j in &lab.nonbasis {
                let v = m.get(vrow, j);
                if v.is_zero() {
                    return Err(Error::ZeroDivisor(format!("basis entry ({vrow}, {j}) is zero")));
                }
                row.push(m.get(w, j) / v);
            }
            let c = lab.forms[a].basis_coeff(l);
            let a_row: Vec<Rational> = if c.is_zero() { row.clone() } else { row.iter().map(|x| x / c).collect() };
            m_rows.push(row);
            a_rows.push(a_row);
        }
        let m_l = QMatrix::from_rows(f, m_rows)?;
        let a_l = QMatrix::from_rows(f, a_rows)?;
        m_ranks.push(m_l.rank());
        a_mats.push(a_l);
    }
    let a_ranks: Vec<usize> = a_mats.iter().map(QMatrix::rank).collect();
    checks.push(Check::le("max rank(M_l) <= rank(M)", m_ranks.iter().copied().max().unwrap_or(0), rank_m));
    checks.push(Check::le("max rank(A_l) <= rank(M)", a_ranks.iter().copied().max().unwrap_or(0), rank_m));

    // S_(w,l): values A_l(w, i) over off-diagonal i whose index set contains l.
    let mut s_sets: Vec<Vec<BTreeSet<Rational>>> = vec![vec![BTreeSet::new(); d]; nl];
    let mut class_counts: Vec<usize> = Vec::with_capacity(nl);
    for a in 0..nl {
        let mut classes = BTreeSet::new();
        for b in (0..nl).filter(|&b| b != a) {
            let rec = lab.record(a, b);
            classes.insert(rec.index_set.clone());
            for &l in &rec.index_set {
                s_sets[a][l].insert(a_mats[l].get(a, b).clone());
            }
        }
        class_counts.push(classes.len());
    }
    let covers = (0..nl).all(|a| {
        (0..nl).filter(|&b| b != a).all(|b| (0..d).any(|l| s_sets[a][l].contains(a_mats[l].get(a, b))))
    });
    let avoids = (0..nl).all(|a| (0..d).all(|l| !s_sets[a][l].contains(a_mats[l].get(a, a))));
    checks.push(Check::holds("every off-diagonal entry lies in some S_(w,l)", format!("{nl} rows"), covers));
    checks.push(Check::holds("no diagonal entry of A_l lies in S_(w,l)", format!("{nl} rows"), avoids));
    let max_s = s_sets.iter().flatten().map(BTreeSet::len).max().unwrap_or(0);
    checks.push(subspace_cap_check("max |S_(w,l)| <= 2^(d-1) A(d, r)", max_s, d, g.rank()));

    // Q_w and the final matrix.
    let mut q_degrees: Vec<Vec<u32>> = Vec::with_capacity(nl);
    let mut q_terms: Vec<usize> = Vec::with_capacity(nl);
    let mut final_rows = Vec::with_capacity(nl);
    for a in 0..nl {
        let q = q_polynomial(&s_sets[a], d)?;
        q_degrees.push((0..d).map(|l| q.degree_in(l)).collect());
        q_terms.push(q.term_count());
        let rows: Vec<&[Rational]> = a_mats.iter().map(|am| am.row(a)).collect();
        final_rows.push(apply_multivariate(&rows, &q)?);
    }
    let final_matrix = if nl == 0 { QMatrix::zeros(f, 0, 0) } else { QMatrix::from_rows(f, final_rows)? };
    let degrees_match = (0..nl).all(|a| (0..d).all(|l| q_degrees[a][l] as usize == s_sets[a][l].len()));
    checks.push(Check::holds("deg_l(Q_w) = |S_(w,l)|", format!("{nl} rows"), degrees_match));
    let diag_only = (0..nl).all(|i| {
        (0..nl).all(|j| if i == j { !final_matrix.get(i, j).is_zero() } else { final_matrix.get(i, j).is_zero() })
    });
    checks.push(Check::holds("final matrix is diagonal-nonzero / off-diagonal-zero", format!("{nl}x{nl}"), diag_only));
    let final_rank = final_matrix.rank();
    checks.push(Check::eq("rank(final) = n - d", final_rank, nl));
    let deg: Vec<u64> = (0..d).map(|l| s_sets.iter().map(|row| row[l].len()).max().unwrap_or(0) as u64).collect();
    let cap = t11_bound(&deg, &vec![d as u64; d])?;
    checks.push(Check::le("n - d <= prod binom(d + deg_l, d)", BigUint::from(nl), cap.clone()));
    let ranks: Vec<u64> = a_ranks.iter().map(|&r| r as u64).collect();
    let cap_actual = t11_bound(&deg, &ranks)?;
    checks.push(Check::le("rank(final) <= prod binom(deg_l + rank(A_l), rank(A_l))", BigUint::from(final_rank), cap_actual));

    let artifacts = Artifacts::Second(SecondArtifacts {
        live_rows: nl,
        m_ranks,
        a_ranks,
        s_sizes: s_sets.iter().map(|row| row.iter().map(BTreeSet::len).collect()).collect(),
        class_counts,
        q_degrees,
        q_terms,
        degree_caps: deg,
        t11_cap: cap,
    });
    Ok(ReplayReport {
        mode: ReplayMode::Second,
        n: m.rows(),
        basis: lab.basis.clone(),
        rank: d,
        precondition: lab.precondition,
        artifacts,
        final_matrix,
        checks,
    })
}

/// `prod_l prod_(s in S_l) (x_l - s)` in `d` variables.
fn q_polynomial(sets: &[BTreeSet<Rational>], d: usize) -> Result<MultiPoly<Rationals>> {
    let f = Rationals;
    let size: usize = sets.iter().map(|s| s.len() + 1).product();
    if size > MAX_Q_TERMS {
        return Err(Error::Budget(format!("Q_w would have {size} monomials, above {MAX_Q_TERMS}")));
    }
    let mut q = MultiPoly::constant(f, d, f.one());
    for (l, set) in sets.iter().enumerate() {
        if set.is_empty() {
            continue;
        }
        let values: Vec<Rational> = set.iter().cloned().collect();
        let ann = UniPoly::annihilator(f, &values)?;
        q = q.mul(&MultiPoly::from_uni(&ann, d, l))?;
    }
    Ok(q)
}
