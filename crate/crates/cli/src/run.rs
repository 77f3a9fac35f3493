use std::fs;
use std::io::Write;
use std::path::Path;

use grouprank::constructions::{
    concyclic, expected_member_count, integral_circle_points, integral_distances, planes_gram, poly_difference_matrix, prefix_audit, rectangle_check, squared_distance_matrix,
    sumset_matrix, PointSet,
};
use grouprank::group::{bound_eval, enumerate_sunit, group_rank, prime_support, BoundKind, GroupSpec, SUnitBudget, SUnitEquation};
use grouprank::io::{
    matrix_from_json, matrix_to_json, multi_poly_from_json, parse_matrix, parse_points_csv, parse_q_matrix,
    parse_rational, points_to_csv, rational_to_json, ring_to_json, AnyMatrix,
};
use grouprank::replay::{points2_certificate, prime_power_certificate, replay_first, replay_second, ReplayCaps, Verdict};
use grouprank::verify::{run_suite, Suite};
use grouprank::{Error, Field, FpMatrix, PrimeField, QMatrix, Rational, Rationals};
use serde_json::{json, Value};

use crate::args::{AuditCmd, BoundCmd, CertifyCmd, CheckCmd, Command, Construct, GroupCmd, Out, PairArgs, ReplayArgs, ReplayCmd};
use crate::error::{CliError, CliResult, Status};

pub fn execute(cmd: Command) -> CliResult<Status> {
    match cmd {
        Command::Rank { input, modulus, out } => rank(&input, modulus, &out),
        Command::Hadamard(args) => pair(args, false),
        Command::Kron(args) => pair(args, true),
        Command::Construct(c) => construct(c),
        Command::Check(CheckCmd::Rectangle { input, out }) => rectangle(&input, &out),
        Command::Group(g) => group(g),
        Command::Bound(b) => bound(b),
        Command::Replay(r) => replay(r),
        Command::Certify(c) => certify(c),
        Command::Audit(AuditCmd::PrefixDistances { input, s, out }) => audit(&input, s, &out),
        Command::Verify(v) => {
            let suite = Suite::from_name(&v.suite)?;
            let report = run_suite(suite, v.seed, v.trials.unwrap_or_else(|| suite.default_trials()))?;
            emit_json(&v.out, &report.to_json())?;
            Ok(Status::from_pass(report.passed()))
        }
    }
}

fn read(path: &Path) -> CliResult<String> {
    fs::read_to_string(path).map_err(|source| CliError::Io { path: path.to_path_buf(), source })
}

fn emit_text(out: &Out, text: &str) -> CliResult<()> {
    match &out.out {
        Some(path) => fs::write(path, text).map_err(|source| CliError::Io { path: path.clone(), source }),
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout
                .write_all(text.as_bytes())
                .map_err(|source| CliError::Io { path: "<stdout>".into(), source })
        }
    }
}

fn emit_json(out: &Out, v: &Value) -> CliResult<()> {
    let mut text = serde_json::to_string_pretty(v).expect("JSON values serialize");
    text.push('\n');
    emit_text(out, &text)
}

fn parse_list(s: &str) -> CliResult<Vec<Rational>> {
    Ok(s.split(',').map(str::trim).filter(|t| !t.is_empty()).map(parse_rational).collect::<Result<_, _>>()?)
}

fn points(path: &Path) -> CliResult<PointSet> {
    Ok(parse_points_csv(&read(path)?)?)
}

fn rank(input: &Path, modulus: Option<u64>, out: &Out) -> CliResult<Status> {
    let m = parse_matrix(&read(input)?)?;
    let m = match (m, modulus) {
        (m, None) => m,
        (AnyMatrix::Q(q), Some(p)) => {
            let f = PrimeField::new(p)?;
            let entries = q.entries().iter().map(|e| f.from_rational(e)).collect::<Result<Vec<_>, _>>()?;
            AnyMatrix::Fp(FpMatrix::new(f, q.rows(), q.cols(), entries)?)
        }
        (AnyMatrix::Fp(m), Some(p)) if m.field().modulus() == p => AnyMatrix::Fp(m),
        (AnyMatrix::Fp(m), Some(p)) => {
            return Err(Error::RingMismatch { left: m.field().spec().to_string(), right: format!("F_{p}") }.into())
        }
    };
    let (r, ring, rows, cols) = match &m {
        AnyMatrix::Q(q) => (q.rank(), ring_to_json(q.field().spec()), q.rows(), q.cols()),
        AnyMatrix::Fp(f) => (f.rank(), ring_to_json(f.field().spec()), f.rows(), f.cols()),
    };
    println!("{r}");
    if out.out.is_some() {
        emit_json(out, &json!({"ring": ring, "rows": rows, "cols": cols, "rank": r}))?;
    }
    Ok(Status::Ok)
}

fn pair(args: PairArgs, kron: bool) -> CliResult<Status> {
    let a = parse_matrix(&read(&args.a)?)?;
    let b = parse_matrix(&read(&args.b)?)?;
    let result = match (a, b) {
        (AnyMatrix::Q(a), AnyMatrix::Q(b)) => AnyMatrix::Q(if kron { a.kronecker(&b)? } else { a.hadamard(&b)? }),
        (AnyMatrix::Fp(a), AnyMatrix::Fp(b)) => AnyMatrix::Fp(if kron { a.kronecker(&b)? } else { a.hadamard(&b)? }),
        (a, b) => {
            let spec = |m: &AnyMatrix| match m {
                AnyMatrix::Q(_) => "Q".to_string(),
                AnyMatrix::Fp(f) => f.field().spec().to_string(),
            };
            return Err(Error::RingMismatch { left: spec(&a), right: spec(&b) }.into());
        }
    };
    emit_json(&args.out, &result.to_json())?;
    Ok(Status::Ok)
}

/// Serializes `m`, parses it back, and compares.
fn round_trip(m: &QMatrix) -> bool {
    matches!(matrix_from_json(&matrix_to_json(m)), Ok(AnyMatrix::Q(back)) if &back == m)
}

fn construct(c: Construct) -> CliResult<Status> {
    match c {
        Construct::Sumset { values, out } => {
            let m = sumset_matrix(&parse_list(&values)?)?;
            emit_json(&out, &matrix_to_json(&m))?;
            Ok(Status::from_pass(round_trip(&m) && m.rank() <= 2))
        }
        Construct::Distances { input, out } => {
            let s = points(&input)?;
            let parts = squared_distance_matrix(&s);
            emit_json(&out, &matrix_to_json(&parts.delta))?;
            let ok = round_trip(&parts.delta) && parts.recombine() == parts.delta && parts.delta.rank() <= s.dim() + 2;
            Ok(Status::from_pass(ok))
        }
        Construct::Planes { d, out } => {
            let g = planes_gram(d)?;
            emit_json(&out, &matrix_to_json(&g.gram))?;
            let (ten, allowed) = (Rationals.from_i64(10), [1, 2, 4].map(|v| Rationals.from_i64(v)));
            let n = g.member_count();
            let entries_ok = (0..n).all(|i| {
                (0..n).all(|j| if i == j { g.gram.get(i, j) == &ten } else { allowed.contains(g.gram.get(i, j)) })
            });
            let count_ok = expected_member_count(d) == n.into();
            let rank_ok = d > 3 || g.gram.rank() <= g.rank_cap;
            Ok(Status::from_pass(round_trip(&g.gram) && entries_ok && count_ok && rank_ok))
        }
        Construct::Circle { n, out } => {
            let s = integral_circle_points(n)?;
            let csv = points_to_csv(&s);
            emit_text(&out, &csv)?;
            let back = parse_points_csv(&csv)?;
            Ok(Status::from_pass(back == s && concyclic(&back) && integral_distances(&back)))
        }
        Construct::Polydiff { input, poly, out } => {
            let s = points(&input)?;
            let text = read(&poly)?;
            let v: Value = serde_json::from_str(&text).map_err(|e| Error::Parse(format!("{}: {e}", poly.display())))?;
            let p = multi_poly_from_json(Rationals, &v)?;
            let m = poly_difference_matrix(&s, &p)?;
            emit_json(&out, &matrix_to_json(&m))?;
            let zero_diag = (0..m.rows()).all(|i| Rationals.is_zero(m.get(i, i)));
            Ok(Status::from_pass(round_trip(&m) && zero_diag))
        }
    }
}

fn rectangle(input: &Path, out: &Out) -> CliResult<Status> {
    let witness = match parse_matrix(&read(input)?)? {
        AnyMatrix::Q(m) => rectangle_check(&m)?,
        AnyMatrix::Fp(m) => rectangle_check(&m)?,
    };
    emit_json(out, &json!({"ok": witness.is_none(), "witness": witness.map(|(i, j, k)| [i, j, k])}))?;
    Ok(Status::from_pass(witness.is_none()))
}

fn group(g: GroupCmd) -> CliResult<Status> {
    match g {
        GroupCmd::Rank { elements, out } => {
            let els = parse_list(&elements)?;
            let r = group_rank(&els)?;
            println!("{r}");
            if out.out.is_some() {
                let primes: Vec<String> = prime_support(&els)?.iter().map(ToString::to_string).collect();
                emit_json(&out, &json!({"rank": r, "primes": primes}))?;
            }
            Ok(Status::Ok)
        }
        GroupCmd::Member { group, x, out } => {
            let g = GroupSpec::parse(&group)?;
            let x = parse_rational(&x)?;
            let w = g.membership(&x);
            let report = json!({
                "group": g.to_string(),
                "x": rational_to_json(&x),
                "member": w.is_some(),
                "torsion": w.as_ref().map(|w| w.torsion),
                "exponents": w.as_ref().map(|w| w.exponents.iter().map(exponent_json).collect::<Vec<_>>()),
            });
            emit_json(&out, &report)?;
            Ok(Status::Ok)
        }
        GroupCmd::Sunit { group, coeffs, bound, budget, out } => {
            let g = GroupSpec::parse(&group)?;
            let eq = SUnitEquation::new(parse_list(&coeffs)?)?;
            let budget = SUnitBudget {
                max_generators: budget.max_generators,
                max_exponent: budget.max_exponent,
                max_terms: budget.max_terms,
                max_points: budget.max_points,
            };
            let sols = enumerate_sunit(&eq, &g, bound, &budget)?;
            let mut text = String::new();
            for s in &sols {
                let exps: Vec<Vec<Value>> = s
                    .exponents
                    .iter()
                    .map(|w| {
                        let sign = g.has_torsion().then(|| json!(u8::from(w.torsion)));
                        sign.into_iter().chain(w.exponents.iter().map(exponent_json)).collect()
                    })
                    .collect();
                let z: Vec<Value> = s.values.iter().map(rational_to_json).collect();
                text.push_str(&json!({"z": z, "exps": exps}).to_string());
                text.push('\n');
            }
            emit_text(&out, &text)?;
            Ok(Status::from_pass(sols.iter().all(|s| s.validate(&eq, &g))))
        }
    }
}

fn exponent_json(e: &impl ToString) -> Value {
    let s = e.to_string();
    s.parse::<i64>().map_or(Value::String(s), |v| json!(v))
}

fn bound(b: BoundCmd) -> CliResult<Status> {
    let kind = match b {
        BoundCmd::A { m, r } => BoundKind::Subspace { m, r },
        BoundCmd::Ramsey { t, colors } => BoundKind::Ramsey { t, colors },
        BoundCmd::Noga { k, d, monomial: false } => BoundKind::Noga { k, d },
        BoundCmd::Noga { k, d, monomial: true } => BoundKind::NogaMonomial { k, d },
        BoundCmd::Matrix { rho, s } => BoundKind::Matrix { rho, s },
        BoundCmd::T11 { degrees, ranks } => BoundKind::T11 { degrees, ranks },
        BoundCmd::Points2 { p, d } => BoundKind::Points2 { p, d },
        BoundCmd::PrimePower { q, d } => BoundKind::PrimePower { q, d },
        BoundCmd::Prefix { s, d } => BoundKind::Prefix { s, d },
    };
    println!("{}", bound_eval(&kind)?);
    Ok(Status::Ok)
}

fn replay(r: ReplayCmd) -> CliResult<Status> {
    let (args, second): (ReplayArgs, bool) = match r {
        ReplayCmd::First(a) => (a, false),
        ReplayCmd::Second(a) => (a, true),
    };
    let m = parse_q_matrix(&read(&args.input)?)?;
    let g = GroupSpec::parse(&args.group)?;
    let caps = ReplayCaps { max_support: args.max_support, max_n: args.max_n };
    let report = if second { replay_second(&m, &g, &caps)? } else { replay_first(&m, &g, &caps)? };
    emit_json(&args.out, &report.to_json())?;
    Ok(Status::from_pass(report.passed()))
}

fn certify(c: CertifyCmd) -> CliResult<Status> {
    let (report, out) = match c {
        CertifyCmd::P { input, p, out } => (points2_certificate(&points(&input)?, p)?, out),
        CertifyCmd::Q { input, q, out } => (prime_power_certificate(&points(&input)?, q)?, out),
    };
    emit_json(&out, &report.to_json())?;
    Ok(Status::from_pass(report.verdict != Verdict::Failed))
}

fn audit(input: &Path, s: u64, out: &Out) -> CliResult<Status> {
    let a = prefix_audit(&points(input)?, s);
    emit_json(
        out,
        &json!({
            "counts": a.counts,
            "s": a.s,
            "max_count": a.max_count,
            "bound": a.bound.to_string(),
            "forced": a.forced,
            "exceeds": a.exceeds,
            "holds": a.holds(),
        }),
    )?;
    Ok(Status::from_pass(a.holds()))
}
