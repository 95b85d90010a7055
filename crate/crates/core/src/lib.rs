//! Exact computation in the q-deformed W(2,2) algebra and its quantum group.
//!
//! * [`coeff`]: Laurent polynomials over the integers, q-integers.
//! * [`algebra`]: PBW normal ordering under the deformed relations.
//! * [`hopf`]: coproduct, counit, antipode and axiom checks.
//! * [`oscrep`]: boson/fermion oscillator realization used as an independent oracle.
//! * [`expr`], [`format`], [`suites`]: parser, output formats and verification suites for the CLI.

pub mod algebra;
pub mod coeff;
pub mod error;
pub mod expr;
pub mod format;
pub mod hopf;
pub mod oscrep;
pub mod suites;

pub use algebra::{Algebra, DeformationProfile, Element, Generator, NormalWord, Word};
pub use coeff::{q_int, LaurentPoly, Rational, Vars};
pub use error::{Error, Result};
