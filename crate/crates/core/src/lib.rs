//! Exact engine for the spinor construction of the level-one `D4^(1)`
//! modules and their branching to `G2^(1)`.

pub mod chevalley;
pub mod fock;
pub mod hwv;
pub mod linalg;
pub mod operators;
pub mod qseries;
pub mod report;
pub mod roots;
pub mod scalars;
pub mod suites;

pub use report::{CheckResult, Status};
pub use scalars::{Eisenstein, Field, Rational};
