//! Exact upper bounds on the dimension of `q`-ary codes, with a brute-force
//! oracle for small parameters.
//!
//! * [`exact`]: big-integer counting primitives.
//! * [`bounds`]: Bound A and the classical bounds it is compared against.
//! * [`oracle`]: exhaustive enumeration of small systematic codes.
//! * [`report`]: tables, golden-table diffing and CLI formatting.

pub mod bounds;
pub mod error;
pub mod exact;
pub mod oracle;
pub mod report;

pub use error::{Error, Result};
pub use exact::{ExactNat, ExactRatio, RhsVariant};
