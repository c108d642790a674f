//! The 24-dimensional Chevalley algebra, its triality automorphisms, and the
//! Lie algebra `so(8)` acting on it together with its `G2` and `B3` subalgebras.

mod algebra;
mod so8;
mod subalgebras;
mod tables;
mod triality;

pub use algebra::*;
pub use so8::*;
pub use subalgebras::*;
pub use tables::*;
pub use triality::*;
