//! Exact `(b,c)`-inverses over finite rings and matrix rings.

pub mod backend;
pub mod dispatch;
pub mod engine;
pub mod error;
pub mod linalg;
pub mod oracle;
pub mod ring;
pub mod scalar;
pub mod verify;

pub use backend::{Backend, FiniteBackend, MatrixBackend, CARDINALITY_GUARD};
pub use engine::{Coincidence, CriterionId, Engine, InverseReport, ReportJson};
pub use error::{Error, Result};
pub use ring::{Element, Involution, RingHandle, RingKind};
pub use verify::{cross_backend_check, run_suite, run_suite_on, SuiteReport, SweepConfig, SUITES};
