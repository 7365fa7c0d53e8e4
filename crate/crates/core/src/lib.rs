//! Jack polynomials, their power-sum coefficients, generalized binomial
//! coefficients, and the rectangular-shape recurrences built on them.

pub mod error;
pub mod interp;
pub mod jack;
pub mod partitions;
pub mod rect;
pub mod reference;
pub mod symfun;
pub mod theta;
pub mod vars;
pub mod verify;

pub use error::{JackError, Result};
pub use partitions::{enumerate_partitions, PartMove, Partition};
pub use symfun::{Basis, SymFun};
