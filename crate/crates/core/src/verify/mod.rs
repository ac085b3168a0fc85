//! Theorem-verification sweeps.
//!
//! A suite quantifies over a tuple of "outer" variables and, inside its
//! check, over any witness variables the statement mentions. Over an
//! enumerable ring every outer tuple is visited in canonical order and every
//! witness ranges over the whole ring. Otherwise the sweep is sampled: outer
//! tuples are drawn from a seeded generator and witnesses are derived from
//! the engine (e.g. an inner inverse, a computed inverse) plus a few random
//! draws.
//!
//! Work is split by the first outer coordinate (or by sample index) and
//! merged in order, so the report does not depend on the thread count.

use std::fmt::Display;
use std::time::Instant;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::backend::Backend;
use crate::dispatch::AnyBackend;
use crate::engine::Engine;
use crate::error::{Error, Result};
use crate::ring::RingHandle;
use crate::with_backend;

mod crosscheck;
mod suites;

pub use crosscheck::cross_backend_check;
pub use suites::SUITES;

pub const DEFAULT_SEED: u64 = 0x5EED_B0C1;
pub const DEFAULT_SAMPLES: usize = 500;
/// Exhaustive sweeps over more outer tuples than this are refused.
pub const TUPLE_GUARD: u128 = 4_000_000;
/// Counterexamples kept per report; the total is always counted.
pub const COUNTEREXAMPLE_CAP: usize = 16;
/// Random witnesses added to the derived ones in sampled mode.
const RANDOM_WITNESSES: usize = 4;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SweepConfig {
    pub seed: u64,
    /// Force sampling even when the ring could be enumerated.
    pub sampled: bool,
    pub samples: usize,
}

impl Default for SweepConfig {
    fn default() -> Self {
        SweepConfig {
            seed: DEFAULT_SEED,
            sampled: false,
            samples: DEFAULT_SAMPLES,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    Exhaustive,
    Sampled,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Counterexample {
    /// `(name, literal)` for every quantified variable involved.
    pub inputs: Vec<(String, String)>,
    pub expected: String,
    pub got: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SuiteReport {
    pub suite: String,
    pub ring: String,
    pub mode: Mode,
    pub seed: Option<u64>,
    pub tuples_checked: u64,
    pub counterexample_count: u64,
    pub counterexamples: Vec<Counterexample>,
    pub elapsed_ms: u64,
    pub verdict: Verdict,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.verdict == Verdict::Pass
    }

    /// The report with its timing field zeroed, for byte comparison.
    pub fn without_timing(&self) -> SuiteReport {
        SuiteReport {
            elapsed_ms: 0,
            ..self.clone()
        }
    }

    fn build(suite: &str, ring: &RingHandle, mode: Mode, seed: Option<u64>, tally: Tally, start: Instant) -> Self {
        SuiteReport {
            suite: suite.to_string(),
            ring: ring.label().to_string(),
            mode,
            seed,
            tuples_checked: tally.checked,
            counterexample_count: tally.failures,
            verdict: if tally.failures == 0 { Verdict::Pass } else { Verdict::Fail },
            counterexamples: tally.kept,
            elapsed_ms: start.elapsed().as_millis() as u64,
        }
    }
}

/// Shared state for suite checks.
pub(crate) struct Ctx<'a, B: Backend> {
    pub r: &'a B,
    pub e: Engine<'a, B>,
    pub universe: Option<&'a [B::Elem]>,
}

impl<'a, B: Backend> Ctx<'a, B> {
    pub fn exhaustive(&self) -> bool {
        self.universe.is_some()
    }

    /// Every element, or `derived` plus a few random draws when sampling.
    pub fn witnesses(&self, rng: &mut ChaCha8Rng, derived: Vec<B::Elem>) -> Vec<B::Elem> {
        match self.universe {
            Some(u) => u.to_vec(),
            None => {
                let mut out = derived;
                out.extend((0..RANDOM_WITNESSES).map(|_| self.r.random_element(rng)));
                out
            }
        }
    }

    /// All inner inverses of `m`, or a handful of them when sampling.
    pub fn inner_inverses(&self, m: &B::Elem) -> Vec<B::Elem> {
        match self.universe {
            Some(u) => u.iter().filter(|g| self.r.mul3(m, g, m) == *m).cloned().collect(),
            None => self.r.inner_inverse_witnesses(m, RANDOM_WITNESSES),
        }
    }

    /// Whether some element of the ring satisfies `pred`; `None` when the
    /// ring cannot be searched.
    pub fn search(&self, mut pred: impl FnMut(&B::Elem) -> Result<bool>) -> Result<Option<Option<B::Elem>>> {
        let Some(u) = self.universe else {
            return Ok(None);
        };
        for x in u {
            if pred(x)? {
                return Ok(Some(Some(x.clone())));
            }
        }
        Ok(Some(None))
    }

    /// Elements of the form `x·w` for units `w` among `pool`, always
    /// including `x` itself: generators of `xR`.
    pub fn right_associates(&self, x: &B::Elem, pool: &[B::Elem]) -> Vec<B::Elem> {
        let mut out = vec![x.clone()];
        out.extend(pool.iter().filter(|w| self.r.is_unit(w).is_some()).map(|w| self.r.mul(x, w)));
        out
    }

    pub fn left_associates(&self, x: &B::Elem, pool: &[B::Elem]) -> Vec<B::Elem> {
        let mut out = vec![x.clone()];
        out.extend(pool.iter().filter(|w| self.r.is_unit(w).is_some()).map(|w| self.r.mul(w, x)));
        out
    }
}

#[derive(Default)]
pub(crate) struct Tally {
    checked: u64,
    failures: u64,
    kept: Vec<Counterexample>,
}

impl Tally {
    fn absorb(&mut self, other: Tally) {
        self.checked += other.checked;
        self.failures += other.failures;
        let room = COUNTEREXAMPLE_CAP.saturating_sub(self.kept.len());
        self.kept.extend(other.kept.into_iter().take(room));
    }
}

/// Collects counterexamples for one chunk of the sweep.
pub(crate) struct Rec<'a, B: Backend> {
    r: &'a B,
    tally: Tally,
}

impl<'a, B: Backend> Rec<'a, B> {
    fn new(r: &'a B) -> Self {
        Rec { r, tally: Tally::default() }
    }

    pub fn fail(&mut self, inputs: &[(&str, &B::Elem)], expected: impl Display, got: impl Display) {
        self.tally.failures += 1;
        if self.tally.kept.len() < COUNTEREXAMPLE_CAP {
            self.tally.kept.push(Counterexample {
                inputs: inputs
                    .iter()
                    .map(|(name, x)| (name.to_string(), self.r.render(x)))
                    .collect(),
                expected: expected.to_string(),
                got: got.to_string(),
            });
        }
    }

    /// Records a failure unless `cond` holds.
    pub fn expect(&mut self, cond: bool, inputs: &[(&str, &B::Elem)], what: &str) {
        if !cond {
            self.fail(inputs, what, "violated");
        }
    }

    /// Records a failure unless all verdicts agree.
    pub fn agree(&mut self, inputs: &[(&str, &B::Elem)], verdicts: &[(&str, bool)]) {
        let first = verdicts[0].1;
        if verdicts.iter().any(|(_, v)| *v != first) {
            let got = verdicts
                .iter()
                .map(|(name, v)| format!("{name}={v}"))
                .collect::<Vec<_>>()
                .join(", ");
            self.fail(inputs, "all equivalent statements agree", got);
        }
    }

    /// Records a failure unless the two optional values coincide.
    pub fn same(&mut self, inputs: &[(&str, &B::Elem)], what: &str, expected: &Option<B::Elem>, got: &Option<B::Elem>) {
        if expected != got {
            let show = |x: &Option<B::Elem>| x.as_ref().map_or("none".to_string(), |x| self.r.render(x));
            let (e, g) = (show(expected), show(got));
            self.fail(inputs, format!("{what} = {e}"), g);
        }
    }
}

pub(crate) type Check<B> = fn(&Ctx<'_, B>, &[<B as Backend>::Elem], &mut Rec<'_, B>, &mut ChaCha8Rng) -> Result<()>;

pub(crate) struct Suite<B: Backend> {
    pub id: &'static str,
    pub vars: &'static [&'static str],
    pub needs_star: bool,
    pub check: Check<B>,
}

/// Errors a check may raise that describe a defect rather than a bad request.
fn is_finding(e: &Error) -> bool {
    matches!(
        e,
        Error::CriteriaDisagreement { .. } | Error::UniquenessViolation(..) | Error::NotRegular(_)
    )
}

fn run_tuple<B: Backend>(
    ctx: &Ctx<'_, B>,
    suite: &Suite<B>,
    tuple: &[B::Elem],
    rec: &mut Rec<'_, B>,
    rng: &mut ChaCha8Rng,
) -> Result<()> {
    rec.tally.checked += 1;
    match (suite.check)(ctx, tuple, rec, rng) {
        Err(e) if is_finding(&e) => {
            let inputs: Vec<_> = suite.vars.iter().copied().zip(tuple.iter()).collect();
            rec.fail(&inputs, "no internal inconsistency", e);
            Ok(())
        }
        other => other,
    }
}

fn sweep_exhaustive<B: Backend>(ctx: &Ctx<'_, B>, suite: &Suite<B>, universe: &[B::Elem], seed: u64) -> Result<Tally> {
    let n = universe.len();
    let k = suite.vars.len();
    let total = (n as u128).checked_pow(k as u32).unwrap_or(u128::MAX);
    if total > TUPLE_GUARD {
        return Err(Error::CardinalityGuard(format!(
            "{} needs {total} tuples over {}; use sampled mode",
            suite.id,
            ctx.r.ring()
        )));
    }
    let tail_count = n.pow(k as u32 - 1);
    let chunks: Vec<Result<Tally>> = (0..n)
        .into_par_iter()
        .map(|first| {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            rng.set_stream(first as u64);
            let mut rec = Rec::new(ctx.r);
            let mut tuple = vec![universe[first].clone(); k];
            for mut t in 0..tail_count {
                for slot in (1..k).rev() {
                    tuple[slot] = universe[t % n].clone();
                    t /= n;
                }
                run_tuple(ctx, suite, &tuple, &mut rec, &mut rng)?;
            }
            Ok(rec.tally)
        })
        .collect();
    merge(chunks)
}

fn sweep_sampled<B: Backend>(ctx: &Ctx<'_, B>, suite: &Suite<B>, config: &SweepConfig) -> Result<Tally> {
    let chunks: Vec<Result<Tally>> = (0..config.samples)
        .into_par_iter()
        .map(|i| {
            let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
            rng.set_stream(i as u64);
            let tuple: Vec<B::Elem> = suite.vars.iter().map(|_| ctx.r.random_element(&mut rng)).collect();
            let mut rec = Rec::new(ctx.r);
            run_tuple(ctx, suite, &tuple, &mut rec, &mut rng)?;
            Ok(rec.tally)
        })
        .collect();
    merge(chunks)
}

fn merge(chunks: Vec<Result<Tally>>) -> Result<Tally> {
    let mut total = Tally::default();
    for chunk in chunks {
        total.absorb(chunk?);
    }
    Ok(total)
}

/// Runs one suite against an already constructed backend.
pub fn run_suite_on<B: Backend>(backend: &B, suite_id: &str, config: &SweepConfig) -> Result<SuiteReport> {
    let start = Instant::now();
    let suite = suites::lookup::<B>(suite_id).ok_or_else(|| Error::UnknownSuite(suite_id.to_string()))?;
    if suite.needs_star && !backend.has_involution() {
        return Err(Error::NoInvolution);
    }
    let enumerable = if config.sampled { None } else { backend.elements() };
    let ctx = Ctx {
        r: backend,
        e: Engine::new(backend),
        universe: enumerable,
    };
    let ring = backend.ring();
    match enumerable {
        Some(universe) => {
            let tally = sweep_exhaustive(&ctx, &suite, universe, config.seed)?;
            Ok(SuiteReport::build(suite.id, ring, Mode::Exhaustive, None, tally, start))
        }
        None => {
            if ring.cardinality().is_some() && !config.sampled {
                return Err(Error::CardinalityGuard(format!(
                    "{ring} is too large to enumerate; use sampled mode"
                )));
            }
            let tally = sweep_sampled(&ctx, &suite, config)?;
            Ok(SuiteReport::build(suite.id, ring, Mode::Sampled, Some(config.seed), tally, start))
        }
    }
}

/// Runs one suite, choosing the backend from the ring.
pub fn run_suite(ring: &RingHandle, suite_id: &str, config: &SweepConfig) -> Result<SuiteReport> {
    if !SUITES.contains(&suite_id) {
        return Err(Error::UnknownSuite(suite_id.to_string()));
    }
    let backend = AnyBackend::for_ring(ring)?;
    with_backend!(&backend, |b| run_suite_on(b, suite_id, config))
}

/// Suite ids that apply to `ring`: all of them, minus the ones that need an
/// involution when the ring has none.
pub fn applicable_suites(ring: &RingHandle) -> Vec<&'static str> {
    SUITES
        .iter()
        .copied()
        .filter(|id| ring.has_involution() || !suites::STAR_SUITES.contains(id))
        .collect()
}
