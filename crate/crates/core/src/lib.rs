//! Maximum sparse ideals of numerical semigroups and the isometry-dual
//! property of punctured one-point AG codes on Hermitian curves.
//!
//! The crate is layered bottom-up:
//!
//! * [`semigroup`]: numerical semigroups given by generators.
//! * [`sparse_ideals`]: ideals stored by complement, divisor sets `D(i)`,
//!   gap-pair counts `G(i)`, maximum sparse ideals and their leaders.
//! * [`gf`]: small finite fields `GF(p^m)` with log/antilog tables.
//! * [`hermitian`]: points and pole-order basis of the Hermitian curve,
//!   the rank profile `W*` of a one-point code sequence, and the
//!   isometry-dual criterion together with a brute-force oracle.
//! * [`puncturing`]: qualifying point subsets, their inclusion hierarchy
//!   and the inheritance check on punctured sequences.

pub mod cli;
pub mod error;
pub mod gf;
pub mod hermitian;
pub mod linalg;
pub mod puncturing;
pub mod semigroup;
pub mod sparse_ideals;

pub use error::{Error, Result};
pub use gf::{Field, FieldElement};
pub use hermitian::{BasisFunction, CodeSequence, CurvePoint, HermitianCurve};
pub use puncturing::{HierarchyGraph, InheritanceReport, PointSet};
pub use semigroup::NumericalSemigroup;
pub use sparse_ideals::{InclusionReport, SemigroupIdeal};
