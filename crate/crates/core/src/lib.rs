//! Exact real-root isolation for integer polynomials by continued fractions.
//!
//! ```
//! use rootiso::{isolate, IntPoly, IsolateOptions};
//!
//! let p = IntPoly::from_i64s(&[-2, 0, 1]); // x^2 - 2
//! let roots = isolate(&p, IsolateOptions::default()).unwrap();
//! assert_eq!(roots.len(), 2);
//! ```

pub mod bench;
pub mod bounds;
pub mod error;
pub mod io;
pub mod oracle;
pub mod poly;
pub mod vas;

/// Exact reduced fraction with a positive denominator.
pub type Rational = num_rational::BigRational;

pub use bounds::{asv_bound, cauchy_bound, certificate_holds, less_than_one, lower_bound, up_bound, BoundResult};
pub use error::{Error, Result};
pub use oracle::{oracle_isolate, sturm_count, SturmChain};
pub use poly::{gcd, sign_variation, square_free_part, IntPoly};
pub use vas::{isolate, IsolateOptions, IsolateStats, Isolator, RootInterval};
