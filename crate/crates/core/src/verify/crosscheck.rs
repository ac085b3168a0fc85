//! The enumeration backend and the subspace backend, run side by side on
//! `M_k(ℤₚ)`.

use std::time::Instant;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use super::{Mode, Rec, SuiteReport, SweepConfig, Tally, TUPLE_GUARD};
use crate::backend::{Backend, FiniteBackend, MatrixBackend, MatrixScalars};
use crate::engine::Engine;
use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::ring::RingHandle;
use crate::scalar::Zmod;

struct Pair {
    finite: FiniteBackend,
    matrix: MatrixBackend<Zmod>,
    /// Finite element index → matrix.
    as_matrix: Vec<Matrix<Zmod>>,
}

impl Pair {
    fn new(p: u64, k: usize) -> Result<Self> {
        let finite = FiniteBackend::new(&RingHandle::modular_matrices(p, k)?)?;
        let matrix = MatrixBackend::new(&RingHandle::prime_field_matrices(p, k)?)?;
        let as_matrix = (0..finite.cardinality() as u32)
            .map(|i| {
                Zmod::unwrap_payload(finite.element(i).payload())
                    .cloned()
                    .ok_or(Error::MixedRings)
            })
            .collect::<Result<_>>()?;
        Ok(Pair {
            finite,
            matrix,
            as_matrix,
        })
    }

    fn compare(&self, t: [u32; 3], rec: &mut Rec<'_, FiniteBackend>) {
        let [a, b, c] = t;
        let inputs = [("a", &a), ("b", &b), ("c", &c)];
        let by_table = Engine::new(&self.finite).bc_inverse(&a, &b, &c);
        let [ma, mb, mc] = t.map(|i| &self.as_matrix[i as usize]);
        let by_subspace = Engine::new(&self.matrix).bc_inverse(ma, mb, mc);
        match (by_table, by_subspace) {
            (Ok(x), Ok(y)) => {
                let x_value = x.value.map(|i| self.as_matrix[i as usize].clone());
                if x.exists != y.exists || x_value != y.value || x.criteria != y.criteria {
                    rec.fail(&inputs, summary(&self.matrix, x.exists, &x_value, &x.criteria), summary(&self.matrix, y.exists, &y.value, &y.criteria));
                }
            }
            (x, y) => rec.fail(&inputs, format!("enumeration: {}", outcome(&x)), format!("subspaces: {}", outcome(&y))),
        }
    }
}

fn outcome<T>(r: &Result<T>) -> String {
    match r {
        Ok(_) => "answered".to_string(),
        Err(e) => e.to_string(),
    }
}

fn summary(
    m: &MatrixBackend<Zmod>,
    exists: bool,
    value: &Option<Matrix<Zmod>>,
    criteria: &std::collections::BTreeMap<crate::engine::CriterionId, bool>,
) -> String {
    let value = value.as_ref().map_or("none".to_string(), |v| m.render(v));
    format!("exists={exists} value={value} criteria={criteria:?}")
}

/// Compares the two backends on every triple of `M_k(ℤₚ)`, or on
/// `config.samples` seeded triples in sampled mode.
pub fn cross_backend_check(p: u64, k: usize, config: &SweepConfig) -> Result<SuiteReport> {
    let start = Instant::now();
    let ring = RingHandle::modular_matrices(p, k)?;
    if !crate::scalar::is_prime(p) {
        return Err(Error::InvalidRing(format!("{p} is not prime")));
    }
    let size = ring.cardinality().unwrap_or(u128::MAX);
    let triples = size.checked_pow(3).unwrap_or(u128::MAX);
    if !config.sampled && triples > TUPLE_GUARD {
        return Err(Error::CardinalityGuard(format!(
            "{ring} has {size} elements, {triples} triples; use sampled mode"
        )));
    }
    let pair = Pair::new(p, k)?;
    let n = pair.finite.cardinality() as u32;
    let chunks: Vec<Tally> = if config.sampled {
        (0..config.samples)
            .into_par_iter()
            .map(|i| {
                let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
                rng.set_stream(i as u64);
                let t = [0; 3].map(|_| pair.finite.random_element(&mut rng));
                let mut rec = Rec::new(&pair.finite);
                rec.tally.checked += 1;
                pair.compare(t, &mut rec);
                rec.tally
            })
            .collect()
    } else {
        (0..n)
            .into_par_iter()
            .map(|a| {
                let mut rec = Rec::new(&pair.finite);
                for b in 0..n {
                    for c in 0..n {
                        rec.tally.checked += 1;
                        pair.compare([a, b, c], &mut rec);
                    }
                }
                rec.tally
            })
            .collect()
    };
    let mut tally = Tally::default();
    for chunk in chunks {
        tally.absorb(chunk);
    }
    let (mode, seed) = if config.sampled {
        (Mode::Sampled, Some(config.seed))
    } else {
        (Mode::Exhaustive, None)
    };
    Ok(SuiteReport::build("crosscheck", &ring, mode, seed, tally, start))
}
