//! Acceptance gate. Prints one `PASS`/`FAIL` line per criterion and exits
//! non-zero if any criterion fails.
//!
//! Every check compares the engine against an independent oracle: exhaustive
//! search for the finite rings, rank arithmetic and the defining equations for
//! the rational matrices.

use std::collections::BTreeSet;
use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use bcinv_core::backend::Backend;
use bcinv_core::linalg::Matrix;
use bcinv_core::scalar::Rationals;
use bcinv_core::verify::SweepConfig;
use bcinv_core::{cross_backend_check, oracle, run_suite, Coincidence, Engine, FiniteBackend, MatrixBackend, RingHandle};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Outcome = Result<String, String>;

fn zn(n: u64) -> FiniteBackend {
    FiniteBackend::new(&RingHandle::modular(n).expect("valid modulus")).expect("enumerable")
}

fn within(label: &str, limit: Duration, start: Instant, detail: String) -> Outcome {
    let elapsed = start.elapsed();
    if elapsed > limit {
        Err(format!("{detail}; took {elapsed:.1?}, limit {limit:?} ({label})"))
    } else {
        Ok(format!("{detail}; {elapsed:.1?}"))
    }
}

fn triples(r: &FiniteBackend) -> impl Iterator<Item = [u32; 3]> + '_ {
    let u = r.elements().expect("finite");
    u.iter()
        .flat_map(move |&a| u.iter().flat_map(move |&b| u.iter().map(move |&c| [a, b, c])))
}

/// Five existence criteria against brute-force search, then the closed form
/// for every inner inverse of `cab`.
fn criteria_and_formula() -> (Outcome, Outcome) {
    let start = Instant::now();
    let (mut checked, mut bad_criteria, mut formulas, mut bad_formula) = (0u64, Vec::new(), 0u64, Vec::new());
    for n in 2..=12 {
        let r = zn(n);
        let e = Engine::new(&r);
        let u = r.elements().expect("finite");
        for [a, b, c] in triples(&r) {
            checked += 1;
            let truth = match oracle::brute_force_bc(&r, u, &a, &b, &c) {
                Ok(t) => t,
                Err(err) => {
                    bad_criteria.push(format!("zn:{n} ({a},{b},{c}): {err}"));
                    continue;
                }
            };
            let verdicts = [
                e.bc_exists_drazin(&a, &b, &c),
                e.bc_exists_kcc(&a, &b, &c),
                e.bc_exists_annihilator(&a, &b, &c),
                e.formula_conditions(&a, &b, &c),
                e.bc_exists_fiveway(&a, &b, &c),
            ];
            if verdicts.iter().any(|v| v.as_ref().ok() != Some(&truth.is_some())) {
                bad_criteria.push(format!("zn:{n} ({},{},{})", r.render(&a), r.render(&b), r.render(&c)));
            }
            if let Some(y) = truth {
                let cab = e.cab(&a, &b, &c);
                for g in u.iter().filter(|g| r.mul3(&cab, g, &cab) == cab) {
                    formulas += 1;
                    if r.mul3(&b, g, &c) != y {
                        bad_formula.push(format!("zn:{n} ({a},{b},{c}) g={g}"));
                    }
                }
            }
        }
    }
    let limit = Duration::from_secs(60);
    let first = if bad_criteria.is_empty() {
        within("criteria", limit, start, format!("{checked} triples over zn:2..12, five criteria match search"))
    } else {
        Err(format!("{} mismatches, first {}", bad_criteria.len(), bad_criteria[0]))
    };
    let second = if bad_formula.is_empty() {
        within("formula", limit, start, format!("{formulas} (triple, inner inverse) pairs give the searched value"))
    } else {
        Err(format!("{} mismatches, first {}", bad_formula.len(), bad_formula[0]))
    };
    (first, second)
}

fn cross_backend() -> Outcome {
    let start = Instant::now();
    let report = cross_backend_check(2, 2, &SweepConfig::default()).map_err(|e| e.to_string())?;
    if report.tuples_checked != 4096 || !report.passed() {
        return Err(format!(
            "{} triples, {} disagreements",
            report.tuples_checked, report.counterexample_count
        ));
    }
    within("crosscheck", Duration::from_secs(30), start, "4096 triples over M2(Z2) agree".into())
}

/// With `cab` regular, the parametrised one-sided families enumerate exactly
/// the definitional one-sided inverses, and collapse to one common value when
/// both exist.
fn one_sided() -> Outcome {
    let start = Instant::now();
    let mut bad = Vec::new();
    let mut checked = 0u64;
    for n in 2..=8 {
        let r = zn(n);
        let e = Engine::new(&r);
        let u = r.elements().expect("finite");
        for [a, b, c] in triples(&r) {
            if !r.is_regular(&e.cab(&a, &b, &c)) {
                continue;
            }
            checked += 1;
            let run = || -> bcinv_core::Result<bool> {
                let left: BTreeSet<u32> = oracle::all_left_bc(&r, u, &a, &b, &c)?.into_iter().collect();
                let right: BTreeSet<u32> = oracle::all_right_bc(&r, u, &a, &b, &c)?.into_iter().collect();
                let left_family: BTreeSet<u32> = if e.is_left_invertible(&a, &b, &c)? {
                    u.iter().map(|v| e.left_bc_family(&a, &b, &c, v)).collect::<Result<_, _>>()?
                } else {
                    BTreeSet::new()
                };
                let right_family: BTreeSet<u32> = if e.is_right_invertible(&a, &b, &c)? {
                    u.iter().map(|v| e.right_bc_family(&a, &b, &c, v)).collect::<Result<_, _>>()?
                } else {
                    BTreeSet::new()
                };
                let coincide = match e.left_right_coincide(&a, &b, &c)? {
                    Coincidence::Both(x) => left.len() == 1 && left == right && left.contains(&x),
                    _ => left.is_empty() || right.is_empty(),
                };
                Ok(left == left_family && right == right_family && coincide)
            };
            if !matches!(run(), Ok(true)) {
                bad.push(format!("zn:{n} ({a},{b},{c})"));
            }
        }
    }
    if !bad.is_empty() {
        return Err(format!("{} mismatches, first {}", bad.len(), bad[0]));
    }
    within("one-sided", Duration::from_secs(30), start, format!("{checked} triples with regular cab over zn:2..8"))
}

fn q_power(r: &MatrixBackend<Rationals>, a: &Matrix<Rationals>, k: usize) -> Matrix<Rationals> {
    r.pow(a, k)
}

/// Smallest `k ≥ 1` with `rank a^k = rank a^(k+1)`.
fn drazin_index(r: &MatrixBackend<Rationals>, a: &Matrix<Rationals>) -> usize {
    (1..).find(|&k| q_power(r, a, k).rank() == q_power(r, a, k + 1).rank()).expect("ranks stabilise")
}

fn rational_specialisations() -> Outcome {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(0x5EED_0005);
    let backends: Vec<MatrixBackend<Rationals>> = (2..=6)
        .map(|k| MatrixBackend::new(&RingHandle::rational_matrices(k).expect("valid size")).expect("matrix ring"))
        .collect();
    let mut bad = Vec::new();
    let samples = 500;
    for i in 0..samples {
        let r = &backends[rng.gen_range(0..backends.len())];
        let size = r.ring().matrix_size().expect("matrix ring");
        let a = r.random_element(&mut rng);
        let e = Engine::new(r);
        let check = || -> bcinv_core::Result<Vec<&'static str>> {
            let mut failed = Vec::new();
            let mp = e.moore_penrose(&a)?;
            if !mp.value.as_ref().is_some_and(|x| oracle::is_moore_penrose(r, x, &a).unwrap_or(false)) {
                failed.push("moore_penrose");
            }
            let dz = e.drazin_inverse(&a)?;
            let k = drazin_index(r, &a);
            let ak = r.pow(&a, k);
            let drazin_ok = dz.value.as_ref().is_some_and(|x| {
                r.mul3(&ak, x, &a) == ak && r.mul3(x, &a, x) == *x && r.mul(&a, x) == r.mul(x, &a)
            });
            if !drazin_ok || dz.index != Some(k) || k > size {
                failed.push("drazin");
            }
            let core = e.core_inverse(&a)?;
            let group = e.group_inverse(&a)?.exists;
            let one_three = e.one_three_inverse(&a)?.is_some();
            let group_by_rank = a.rank() == r.mul(&a, &a).rank();
            let core_ok = match &core.value {
                Some(x) => {
                    let ax = r.mul(&a, x);
                    r.mul(&ax, &a) == a
                        && r.mul3(x, &a, x) == *x
                        && r.star(&ax)? == ax
                        && r.mul3(x, &a, &a) == a
                        && r.mul(&ax, x) == *x
                }
                None => true,
            };
            if core.exists != (group && one_three) || group != group_by_rank || !one_three || !core_ok {
                failed.push("core");
            }
            Ok(failed)
        };
        match check() {
            Ok(failed) if failed.is_empty() => {}
            Ok(failed) => bad.push(format!("sample {i} {}: {}", r.render(&a), failed.join(","))),
            Err(err) => bad.push(format!("sample {i} {}: {err}", r.render(&a))),
        }
    }
    if !bad.is_empty() {
        return Err(format!("{} failures, first {}", bad.len(), bad[0]));
    }
    within("specialisations", Duration::from_secs(120), start, format!("{samples} seeded matrices, sizes 2..6"))
}

/// Changing generators of `bR` and `Rc` changes nothing; the inverse along
/// `d` is the `(d,d)`-inverse and `d(ad)#` whenever either exists.
fn invariance() -> Outcome {
    let start = Instant::now();
    let (mut checked, mut bad) = (0u64, Vec::new());
    for n in 2..=8 {
        let r = zn(n);
        let e = Engine::new(&r);
        let u = r.elements().expect("finite");
        let same_right = |x: &u32, y: &u32| e.right_eq(x, y).unwrap_or(false);
        let same_left = |x: &u32, y: &u32| e.left_eq(x, y).unwrap_or(false);
        for [a, b, c] in triples(&r) {
            for p in u.iter().filter(|p| same_right(&b, p)) {
                for v in u.iter().filter(|v| same_left(&c, v)) {
                    checked += 1;
                    let bc = oracle::brute_force_bc(&r, u, &a, &b, &c);
                    let pv = oracle::brute_force_bc(&r, u, &a, p, v);
                    let engine = e.generator_invariance(&a, &b, &c, p, v);
                    let agrees = matches!((&bc, &pv), (Ok(x), Ok(y)) if x == y);
                    if !agrees || !matches!(engine, Ok(true)) {
                        bad.push(format!("zn:{n} a={a} (b,c)=({b},{c}) (u,v)=({p},{v})"));
                    }
                }
            }
        }
        for &a in u {
            for &d in u {
                checked += 1;
                let truth = oracle::brute_force_along(&r, u, &a, &d);
                let ad_sharp = oracle::brute_force_group(&r, u, &r.mul(&a, &d)).map(|g| r.mul(&d, &g));
                let along = e.inverse_along(&a, &d).map(|x| x.value);
                let bc = e.bc_inverse(&a, &d, &d).map(|x| x.value);
                let ok = match (&truth, &along, &bc) {
                    (Ok(t), Ok(x), Ok(y)) => t == x && t == y && (t.is_none() || ad_sharp == *t),
                    _ => false,
                };
                if !ok {
                    bad.push(format!("zn:{n} along a={a} d={d}"));
                }
            }
        }
    }
    if !bad.is_empty() {
        return Err(format!("{} mismatches, first {}", bad.len(), bad[0]));
    }
    within("invariance", Duration::from_secs(60), start, format!("{checked} cases over zn:2..8"))
}

fn inner_outer_suite() -> Outcome {
    let start = Instant::now();
    let rings: Vec<String> = (2..=10).map(|n| format!("zn:{n}")).chain(["mat:zn:2:2".to_string()]).collect();
    let mut tuples = 0;
    for spec in &rings {
        let ring = RingHandle::parse(spec).map_err(|e| e.to_string())?;
        let report = run_suite(&ring, "thm-inofbcbca", &SweepConfig::default()).map_err(|e| format!("{spec}: {e}"))?;
        if !report.passed() || report.mode != bcinv_core::verify::Mode::Exhaustive {
            return Err(format!("{spec}: {} counterexamples", report.counterexample_count));
        }
        tuples += report.tuples_checked;
    }
    within("inner+outer", Duration::from_secs(60), start, format!("{tuples} tuples over zn:2..10 and M2(Z2)"))
}

fn bcinv(args: &[&str]) -> Result<(String, i32), String> {
    let out = Command::new(env!("CARGO_BIN_EXE_bcinv"))
        .args(args)
        .output()
        .map_err(|e| format!("spawn: {e}"))?;
    Ok((String::from_utf8_lossy(&out.stdout).into_owned(), out.status.code().unwrap_or(-1)))
}

fn cli_goldens() -> Outcome {
    let compute = [
        (
            vec!["compute", "--ring", "zn:6", "--op", "bc_inverse", "--a", "2", "--b", "4", "--c", "4"],
            r#"{"exists":true,"value":"2","index":null,"criteria":{"DrazinIdeal":true,"KccDecomp":true,"AnnihilatorDecomp":true,"FormulaConditions":true,"FiveWay":true,"HybridDef":true,"AnnihilatorDef":true},"inner_inverse_used":"2","definitional_check":true}"#,
        ),
        (
            vec!["compute", "--ring", "mat:q:2", "--op", "moore_penrose", "--a", "[[2,0],[0,0]]"],
            r#"{"exists":true,"value":"[[1/2,0],[0,0]]","index":null,"criteria":{"DrazinIdeal":true,"KccDecomp":true,"AnnihilatorDecomp":true,"FormulaConditions":true,"FiveWay":true,"HybridDef":true,"AnnihilatorDef":true},"inner_inverse_used":"[[1/8,0],[0,0]]","definitional_check":true}"#,
        ),
    ];
    for (args, golden) in &compute {
        let (stdout, code) = bcinv(args)?;
        if stdout.trim_end() != *golden || code != 0 {
            return Err(format!("`bcinv {}` gave exit {code}: {stdout}", args.join(" ")));
        }
    }
    let (stdout, code) = bcinv(&["verify", "--ring", "zn:6", "--suite", "all"])?;
    let lines: Vec<serde_json::Value> = stdout
        .lines()
        .map(serde_json::from_str)
        .collect::<Result<_, _>>()
        .map_err(|e| format!("verify output is not JSONL: {e}"))?;
    if code != 0 || lines.is_empty() || lines.iter().any(|l| l["verdict"] != "pass") {
        return Err(format!("verify zn:6 all: exit {code}"));
    }
    let (_, code) = bcinv(&["compute", "--ring", "zn:6", "--op", "no_such_op", "--a", "1"])?;
    if code != 2 {
        return Err(format!("unknown op exited {code}, expected 2"));
    }
    Ok(format!("2 compute transcripts byte-identical; verify zn:6 all exit 0 over {} suites", lines.len()))
}

fn main() -> ExitCode {
    let (c1, c2) = criteria_and_formula();
    let results = [
        ("1 criterion equivalence", c1),
        ("2 closed form, every inner inverse", c2),
        ("3 cross-backend", cross_backend()),
        ("4 one-sided families", one_sided()),
        ("5 rational specialisations", rational_specialisations()),
        ("6 generator invariance and along", invariance()),
        ("7 inner (b,c)-inverse characterisation", inner_outer_suite()),
        ("8 CLI transcripts", cli_goldens()),
    ];
    let mut all = true;
    for (name, outcome) in &results {
        match outcome {
            Ok(detail) => println!("PASS criterion {name}: {detail}"),
            Err(detail) => {
                all = false;
                println!("FAIL criterion {name}: {detail}");
            }
        }
    }
    if all {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
