//! Executable replays of the two rank-bound arguments and the
//! distance-divisibility certificates.

mod certificate;
mod first;
mod labels;
mod second;

pub use certificate::{points2_certificate, prime_power_certificate, CertificateReport, Verdict, MAX_PRIME_POWER};
pub use first::{is_monochromatic, mono_principal_submatrix, normalize_u, ramsey_floor, replay_first, MonoSet};
pub use labels::{
    check_hypothesis, label_matrix, label_matrix_unchecked, LabelRecord, Labeling, Precondition, ReplayCaps,
};
pub use second::{replay_second, MAX_Q_TERMS};

use num_bigint::BigUint;
use serde_json::{json, Value};

use crate::io::matrix_to_json;
use crate::report::{all_pass, checks_to_json, Check};
use crate::QMatrix;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ReplayMode {
    First,
    Second,
}

#[derive(Debug, Clone, PartialEq)]
pub struct FirstArtifacts {
    pub live_rows: usize,
    pub record_count: usize,
    pub labels: Vec<Vec<usize>>,
    /// Original row indices of `U`.
    pub u_rows: Vec<usize>,
    pub label: Option<usize>,
    pub floor: usize,
    pub u_prime: QMatrix,
    /// Distinct sub-diagonal values per row of `U'`.
    pub distinct_counts: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct SecondArtifacts {
    pub live_rows: usize,
    pub m_ranks: Vec<usize>,
    pub a_ranks: Vec<usize>,
    /// `|S_(w,l)|` per non-basis row `w` and basis position `l`.
    pub s_sizes: Vec<Vec<usize>>,
    /// Distinct index sets per row.
    pub class_counts: Vec<usize>,
    pub q_degrees: Vec<Vec<u32>>,
    pub q_terms: Vec<usize>,
    /// `deg_l = max_w |S_(w,l)|`.
    pub degree_caps: Vec<u64>,
    pub t11_cap: BigUint,
}

#[derive(Debug, Clone, PartialEq)]
pub enum Artifacts {
    First(FirstArtifacts),
    Second(SecondArtifacts),
}

#[derive(Debug, Clone, PartialEq)]
pub struct ReplayReport {
    pub mode: ReplayMode,
    pub n: usize,
    pub basis: Vec<usize>,
    pub rank: usize,
    pub precondition: Precondition,
    pub artifacts: Artifacts,
    pub final_matrix: QMatrix,
    pub checks: Vec<Check>,
}

impl ReplayReport {
    pub fn passed(&self) -> bool {
        all_pass(&self.checks)
    }

    pub fn check(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }

    pub fn to_json(&self) -> Value {
        let artifacts = match &self.artifacts {
            Artifacts::First(a) => json!({
                "live_rows": a.live_rows,
                "record_count": a.record_count,
                "labels": a.labels,
                "u_rows": a.u_rows,
                "label": a.label,
                "floor": a.floor,
                "u_prime": matrix_to_json(&a.u_prime),
                "distinct_counts": a.distinct_counts,
            }),
            Artifacts::Second(a) => json!({
                "live_rows": a.live_rows,
                "m_ranks": a.m_ranks,
                "a_ranks": a.a_ranks,
                "s_sizes": a.s_sizes,
                "class_counts": a.class_counts,
                "q_degrees": a.q_degrees,
                "q_terms": a.q_terms,
                "degree_caps": a.degree_caps,
                "t11_cap": a.t11_cap.to_string(),
            }),
        };
        json!({
            "mode": match self.mode { ReplayMode::First => "first", ReplayMode::Second => "second" },
            "n": self.n,
            "basis": self.basis,
            "rank": self.rank,
            "precondition": self.precondition.as_str(),
            "artifacts": artifacts,
            "final_matrix": matrix_to_json(&self.final_matrix),
            "pass": self.passed(),
            "checks": checks_to_json(&self.checks),
        })
    }
}
