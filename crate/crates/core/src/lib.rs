//! Exact formal power series over the rationals and the inversion machinery
//! built on them: compositional inverses, Lagrange inversion, triangular
//! transform pairs, partition-sum formulas for Stirling numbers and
//! self-inverse series.
//!
//! ```
//! use serinv::series::NamedSeries;
//! use serinv::stirling::{StirlingKind, StirlingMethod};
//!
//! let geom = NamedSeries::Geom.series(4, None).unwrap();
//! assert_eq!(geom.reverse().unwrap().to_string(), "x - x^2 + x^3 - x^4 + O(x^5)");
//!
//! let s = StirlingMethod::Partition.compute(StirlingKind::Second, 6, 3).unwrap();
//! assert_eq!(s, 90.into());
//! ```

pub mod error;
pub mod identities;
pub mod inversion;
pub mod partitions;
pub mod polyt;
pub mod rational;
pub mod series;
pub mod stirling;

pub use error::{Error, Result};
pub use rational::Rational;
pub use series::Series;

#[cfg(doctest)]
#[doc = include_str!("../../../README.md")]
mod readme {}

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/series.md")]
    mod series {}
    #[doc = include_str!("../../../book/src/partitions.md")]
    mod partitions {}
    #[doc = include_str!("../../../book/src/stirling.md")]
    mod stirling {}
    #[doc = include_str!("../../../book/src/inversion.md")]
    mod inversion {}
    #[doc = include_str!("../../../book/src/self_inverse.md")]
    mod self_inverse {}
    #[doc = include_str!("../../../book/src/verification.md")]
    mod verification {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
}
