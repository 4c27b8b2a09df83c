//! Groebner-basis engine for graded submodules of free modules over
//! positively multigraded polynomial rings over the rationals.
//!
//! The distinguishing feature is a Buchberger driver that treats only a
//! minimal set of critical pairs: the classical Gebauer-Moeller rules are
//! combined with an on-the-fly minimalization of the critical syzygies, so
//! that the pairs surviving to the reduction step form a minimal generating
//! system of the syzygy module of the leading terms.

pub mod coeff;
pub mod engine;
pub mod error;
pub mod grading;
pub mod oracle;
pub mod ordering;
pub mod pairset;
pub mod reduction;
pub mod term;
pub mod vector;

pub use coeff::Coefficient;
pub use engine::{EngineConfig, EngineEvent, GbOutcome};
pub use error::{AlgebraError, EngineError};
pub use grading::{DegreeMatrix, Homogeneity, MultiDegree, RingContext, ShiftVector};
pub use ordering::{BaseOrder, InducedOrdering, ModuleExtension, OrderingSpec};
pub use pairset::{CriticalPair, PairCollections, PairStats, Strategy};
pub use reduction::{LeadingData, ReductionMode};
pub use term::{ModuleTerm, Term};
pub use vector::ModuleVector;
