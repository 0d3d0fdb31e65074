//! Exact arithmetic on truncated formal semi-Laurent series (finitely many
//! negative powers) and the generalized Riordan group built from them.
//!
//! A [`Series`] carries an absolute precision: coefficients below it are
//! known exactly, nothing is claimed about the rest. Every operation reports
//! the precision it can guarantee, and the randomized suites in [`verify`]
//! check that claim by perturbing inputs past their precision.
//!
//! ```
//! use semilaurent::{field::int, RiordanArray, Series};
//!
//! // Pascal's triangle as the pair (1/(1-z), z/(1-z))
//! let g = Series::new(0, vec![int(1); 10]);
//! let f = Series::new(1, vec![int(1); 10]);
//! let pascal = RiordanArray::new(g, f).unwrap();
//! assert_eq!(pascal.entry(5, 2), Some(int(10)));
//! ```

pub mod compose;
pub mod error;
pub mod field;
pub mod json;
pub mod lie;
pub mod riordan;
pub mod series;
pub mod verify;

pub use error::{Error, Result};
pub use field::{Dual, Field, Rational};
pub use lie::{ClassicalOperator, TangentPair};
pub use riordan::{MatrixWindow, RiordanArray};
pub use series::{Kind, Order, Series};
