use std::process::ExitCode;

use bcinv_core::backend::Backend;
use bcinv_core::dispatch::AnyBackend;
use bcinv_core::engine::{Engine, ReportJson};
use bcinv_core::verify::{self, applicable_suites, SweepConfig, DEFAULT_SAMPLES, DEFAULT_SEED};
use bcinv_core::{with_backend, Error, RingHandle};
use clap::{Args, Parser, Subcommand};
use serde::Serialize;
use serde_json::json;

#[derive(Parser)]
#[command(name = "bcinv", version, about = "Exact (b,c)-inverses over finite and matrix rings")]
struct Cli {
    /// Indent JSON output.
    #[arg(long, global = true)]
    pretty: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute one generalized inverse and print its report.
    Compute(ComputeArgs),
    /// Run theorem-verification suites.
    Verify {
        #[arg(long)]
        ring: String,
        /// Suite id, or `all`.
        #[arg(long)]
        suite: String,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
        /// Sample tuples instead of sweeping all of them.
        #[arg(long)]
        sampled: bool,
    },
    /// List elements, units, idempotents and regular elements.
    Enumerate {
        #[arg(long)]
        ring: String,
    },
    /// Compare the enumeration and subspace backends on M_k(Z_p).
    Crosscheck {
        #[arg(long)]
        p: u64,
        #[arg(long)]
        k: usize,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
        #[arg(long)]
        sampled: bool,
    },
}

#[derive(Args)]
struct ComputeArgs {
    #[arg(long)]
    ring: String,
    #[arg(long)]
    op: String,
    #[arg(long, allow_hyphen_values = true)]
    a: String,
    #[arg(long, allow_hyphen_values = true)]
    b: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    c: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    d: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    v: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    u: Option<String>,
}

/// Operations and the element arguments each takes beyond `a`; a trailing
/// `?` marks an optional one.
const OPS: &[(&str, &[&str])] = &[
    ("bc_inverse", &["b", "c"]),
    ("inner_outer_bc", &["b", "c"]),
    ("inner_outer_right", &["b"]),
    ("inner_outer_left", &["c"]),
    ("left_bc_inverse", &["b", "c", "v?"]),
    ("right_bc_inverse", &["b", "c", "u?"]),
    ("inverse_along", &["d"]),
    ("bc_via_along", &["b", "c", "d"]),
    ("group_inverse", &[]),
    ("drazin_inverse", &[]),
    ("moore_penrose", &[]),
    ("core_inverse", &[]),
    ("dual_core_inverse", &[]),
    ("one_three_inverse", &[]),
    ("one_four_inverse", &[]),
];

enum Failure {
    Usage(String),
    Domain(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Domain(e)
    }
}

fn emit(value: &impl serde::Serialize, pretty: bool) {
    let text = if pretty {
        serde_json::to_string_pretty(value)
    } else {
        serde_json::to_string(value)
    };
    println!("{}", text.expect("reports serialize"));
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match &cli.command {
        Command::Compute(args) => compute(args, cli.pretty),
        Command::Verify {
            ring,
            suite,
            seed,
            sampled,
        } => run_verify(ring, suite, *seed, *sampled, cli.pretty),
        Command::Enumerate { ring } => enumerate(ring, cli.pretty),
        Command::Crosscheck { p, k, seed, sampled } => {
            let config = SweepConfig {
                seed: *seed,
                sampled: *sampled,
                samples: DEFAULT_SAMPLES,
            };
            verify::cross_backend_check(*p, *k, &config)
                .map(|report| {
                    emit(&report, cli.pretty);
                    report.passed()
                })
                .map_err(Failure::Domain)
        }
    };
    match outcome {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Domain(e)) => {
            emit(&json!({"error": e.kind(), "message": e.to_string()}), cli.pretty);
            ExitCode::from(1)
        }
    }
}

/// The arguments `op` takes, in order, after arity checking.
fn operands(args: &ComputeArgs) -> Result<Vec<Option<&str>>, Failure> {
    let Some((_, params)) = OPS.iter().find(|(name, _)| *name == args.op) else {
        let known = OPS.iter().map(|(n, _)| *n).collect::<Vec<_>>().join(", ");
        return Err(Failure::Usage(format!("unknown op `{}` (expected one of: {known})", args.op)));
    };
    let given = [("b", &args.b), ("c", &args.c), ("d", &args.d), ("v", &args.v), ("u", &args.u)];
    let mut out = Vec::new();
    for (name, value) in given {
        let param = params.iter().find(|p| p.trim_end_matches('?') == name);
        match (param, value) {
            (None, Some(_)) => return Err(Failure::Usage(format!("--{name} is not an argument of {}", args.op))),
            (Some(p), None) if !p.ends_with('?') => {
                return Err(Failure::Usage(format!("{} requires --{name}", args.op)))
            }
            _ => {}
        }
    }
    for p in params.iter() {
        let name = p.trim_end_matches('?');
        let value = given.iter().find(|(n, _)| *n == name).and_then(|(_, v)| v.as_deref());
        out.push(value);
    }
    Ok(out)
}

fn compute(args: &ComputeArgs, pretty: bool) -> Result<bool, Failure> {
    let operands = operands(args)?;
    let ring = RingHandle::parse(&args.ring)?;
    let backend = AnyBackend::for_ring(&ring)?;
    let report = with_backend!(&backend, |r| compute_on(r, &args.op, &args.a, &operands))?;
    emit(&report, pretty);
    Ok(true)
}

fn compute_on<B: Backend>(r: &B, op: &str, a: &str, rest: &[Option<&str>]) -> Result<ReportJson, Error> {
    let e = Engine::new(r);
    let a = r.parse(a)?;
    let args: Vec<Option<B::Elem>> = rest.iter().map(|x| x.map(|lit| r.parse(lit)).transpose()).collect::<Result<_, _>>()?;
    let arg = |i: usize| args[i].clone().expect("required operand present");
    let report = match op {
        "bc_inverse" => e.bc_inverse(&a, &arg(0), &arg(1))?,
        "inner_outer_bc" => e.inner_outer_bc(&a, &arg(0), &arg(1))?,
        "inverse_along" => e.inverse_along(&a, &arg(0))?,
        "group_inverse" => e.group_inverse(&a)?,
        "drazin_inverse" => e.drazin_inverse(&a)?,
        "moore_penrose" => e.moore_penrose(&a)?,
        "core_inverse" => e.core_inverse(&a)?,
        "dual_core_inverse" => e.dual_core_inverse(&a)?,
        _ => {
            let (value, valid) = match op {
                "inner_outer_right" => {
                    let b = arg(0);
                    let y = e.inner_outer_right(&a, &b)?;
                    let ok = y.as_ref().map(|y| Ok::<_, Error>(r.mul3(&a, y, &a) == a && e.right_eq(y, &b)?)).transpose()?;
                    (y, ok)
                }
                "inner_outer_left" => {
                    let c = arg(0);
                    let y = e.inner_outer_left(&a, &c)?;
                    let ok = y.as_ref().map(|y| Ok::<_, Error>(r.mul3(&a, y, &a) == a && e.left_eq(y, &c)?)).transpose()?;
                    (y, ok)
                }
                "left_bc_inverse" => {
                    let (b, c) = (arg(0), arg(1));
                    let v = args[2].clone().unwrap_or_else(|| r.zero());
                    let x = e.left_bc_family(&a, &b, &c, &v)?;
                    let ok = e.is_left_bc(&x, &a, &b, &c)?;
                    (Some(x), Some(ok))
                }
                "right_bc_inverse" => {
                    let (b, c) = (arg(0), arg(1));
                    let u = args[2].clone().unwrap_or_else(|| r.zero());
                    let y = e.right_bc_family(&a, &b, &c, &u)?;
                    let ok = e.is_right_bc(&y, &a, &b, &c)?;
                    (Some(y), Some(ok))
                }
                "bc_via_along" => {
                    let (b, c, d) = (arg(0), arg(1), arg(2));
                    let y = e.bc_via_along(&a, &b, &c, &d)?;
                    let ok = e.is_bc_inverse(&y, &a, &b, &c)?;
                    (Some(y), Some(ok))
                }
                "one_three_inverse" => {
                    let x = e.one_three_inverse(&a)?;
                    let ok = x.as_ref().map(|x| bcinv_core::oracle::is_one_three(r, x, &a)).transpose()?;
                    (x, ok)
                }
                "one_four_inverse" => {
                    let x = e.one_four_inverse(&a)?;
                    let ok = x.as_ref().map(|x| bcinv_core::oracle::is_one_four(r, x, &a)).transpose()?;
                    (x, ok)
                }
                other => unreachable!("op {other} passed arity checking"),
            };
            return Ok(ReportJson {
                exists: value.is_some(),
                value: value.as_ref().map(|v| r.render(v)),
                index: None,
                invertible: None,
                criteria: Default::default(),
                inner_inverse_used: None,
                definitional_check: valid.unwrap_or(false),
            });
        }
    };
    Ok(report.to_json(r))
}

fn run_verify(ring: &str, suite: &str, seed: u64, sampled: bool, pretty: bool) -> Result<bool, Failure> {
    let ring = RingHandle::parse(ring)?;
    let suites = if suite == "all" {
        applicable_suites(&ring)
    } else if verify::SUITES.contains(&suite) {
        vec![verify::SUITES.iter().copied().find(|s| *s == suite).expect("listed")]
    } else {
        return Err(Error::UnknownSuite(suite.to_string()).into());
    };
    let config = SweepConfig {
        seed,
        sampled,
        samples: DEFAULT_SAMPLES,
    };
    let backend = AnyBackend::for_ring(&ring)?;
    let mut all_passed = true;
    for id in suites {
        let report = with_backend!(&backend, |r| verify::run_suite_on(r, id, &config))?;
        all_passed &= report.passed();
        emit(&report, pretty);
    }
    Ok(all_passed)
}

fn enumerate(ring: &str, pretty: bool) -> Result<bool, Failure> {
    let ring = RingHandle::parse(ring)?;
    let backend = AnyBackend::for_ring(&ring)?;
    let listing = with_backend!(&backend, |r| listing(r))?;
    emit(&listing, pretty);
    Ok(true)
}

#[derive(Serialize)]
struct Listing {
    ring: String,
    cardinality: usize,
    elements: Vec<String>,
    units: Vec<String>,
    idempotents: Vec<String>,
    regular: Vec<RegularElement>,
}

#[derive(Serialize)]
struct RegularElement {
    element: String,
    inner_inverses: usize,
}

fn listing<B: Backend>(r: &B) -> Result<Listing, Error> {
    let ring = r.ring();
    let Some(elements) = r.elements() else {
        return Err(match ring.cardinality() {
            None => Error::InfiniteRing,
            Some(n) => Error::CardinalityGuard(format!("{ring} has {n} elements")),
        });
    };
    let render = |xs: Vec<&B::Elem>| xs.into_iter().map(|x| r.render(x)).collect::<Vec<_>>();
    let units = elements.iter().filter(|x| r.is_unit(x).is_some()).collect();
    let idempotents = elements.iter().filter(|x| r.mul(x, x) == **x).collect();
    let regular = elements
        .iter()
        .filter_map(|a| {
            let inner_inverses = elements.iter().filter(|g| r.mul3(a, g, a) == *a).count();
            (inner_inverses > 0).then(|| RegularElement {
                element: r.render(a),
                inner_inverses,
            })
        })
        .collect();
    Ok(Listing {
        ring: ring.label().to_string(),
        cardinality: elements.len(),
        elements: render(elements.iter().collect()),
        units: render(units),
        idempotents: render(idempotents),
        regular,
    })
}
