//! Picks a backend for a ring spec at runtime.

use crate::backend::{FiniteBackend, MatrixBackend, CARDINALITY_GUARD};
use crate::error::{Error, Result};
use crate::ring::{RingHandle, RingKind, ScalarField};
use crate::scalar::{is_prime, Rationals, Zmod};

pub enum AnyBackend {
    Finite(FiniteBackend),
    Rational(MatrixBackend<Rationals>),
    Prime(MatrixBackend<Zmod>),
}

impl AnyBackend {
    /// `ℤₙ`, table rings and small `M_k(ℤₙ)` are enumerated; `M_k(ℚ)` and
    /// `M_k(𝔽ₚ)` go through subspaces. A prime-modulus `M_k(ℤₙ)` too large
    /// to enumerate falls back to the subspace backend.
    pub fn for_ring(ring: &RingHandle) -> Result<Self> {
        match ring.kind() {
            RingKind::Modular { .. } | RingKind::Table(_) => Ok(AnyBackend::Finite(FiniteBackend::new(ring)?)),
            RingKind::Matrix {
                field: ScalarField::Rationals,
                ..
            } => Ok(AnyBackend::Rational(MatrixBackend::new(ring)?)),
            RingKind::Matrix {
                field: ScalarField::PrimeField(_),
                ..
            } => Ok(AnyBackend::Prime(MatrixBackend::new(ring)?)),
            RingKind::FiniteMatrix { modulus, .. } => {
                let small = ring.cardinality().is_some_and(|n| n <= CARDINALITY_GUARD);
                if small {
                    Ok(AnyBackend::Finite(FiniteBackend::new(ring)?))
                } else if is_prime(*modulus) {
                    Ok(AnyBackend::Prime(MatrixBackend::new(ring)?))
                } else {
                    Err(Error::CardinalityGuard(format!(
                        "{ring} has more than {CARDINALITY_GUARD} elements"
                    )))
                }
            }
        }
    }
}

/// Runs `$body` with `$b` bound to the concrete backend inside `$any`.
#[macro_export]
macro_rules! with_backend {
    ($any:expr, |$b:ident| $body:expr) => {
        match $any {
            $crate::dispatch::AnyBackend::Finite($b) => $body,
            $crate::dispatch::AnyBackend::Rational($b) => $body,
            $crate::dispatch::AnyBackend::Prime($b) => $body,
        }
    };
}
