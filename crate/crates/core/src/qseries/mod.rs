//! Truncated power series over the rationals and the character identities
//! behind the branching rules.
//!
//! - [`Series`] stores `c_0..c_N` densely; binary operations keep the smaller order.
//! - [`products`] builds `φ`, `a`, `b`, `v`, `c`, `F` by product and by a second route.
//! - [`characters`] expands minimal-model characters; fractional offsets stay separate.
//! - [`identities`] runs the identity suites.

pub mod characters;
pub mod identities;
pub mod products;
pub mod series;

pub use characters::{minimal_character, Character, MinimalModelLabel};
pub use products::{G2Module, QSeriesError, Sector};
pub use series::{series_arith, Series, SeriesError, SeriesOp};

pub const DEFAULT_ORDER: usize = 200;
