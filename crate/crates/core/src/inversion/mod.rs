//! Sequence inversion pairs and coefficient formulas for inverse series.
//!
//! * [`kernel`]: the triangular transform pair
//!   `a_n = n sum_m [x^{n-m}] f^m b_m`, `b_n = (1/n) sum_m [x^{n-m}] f^{-n} a_m`
//!   and its binomial and exponential specializations.
//! * [`involution`]: the self-inverse transform with kernel
//!   `(-1)^{n/k} binom(m/k, n/k)`.
//! * [`reversion`]: partition-sum formulas for the coefficients of powers of
//!   an inverse series.
//! * [`self_inverse`]: completing a series `-x + a_1 x^2 + ...` with
//!   `a(a(x)) = x` from its odd-indexed coefficients.

pub mod involution;
pub mod kernel;
pub mod reversion;
pub mod self_inverse;

use serde::{Deserialize, Serialize};

use crate::error::{usage, Error, Result};
use crate::rational::{parse_rational, Rational};

pub use involution::involution_k;
pub use kernel::{
    binomial_kernel, binomial_orthogonality_sums, build_kernel, exponential_kernel,
    orthogonality_sums, rescaled_exponential_transform, transform_apply, Direction,
    TransformKernel,
};
pub use reversion::{
    from_negated_identity, inverse_pair_transform, negated_identity_series,
    reversion_power_coefficient,
};
pub use self_inverse::{self_inverse_complete, self_inverse_constraint_sum, SelfInverseSeries};

/// Finite sequence starting at index `offset` (0 or 1).
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "SequenceJson", into = "SequenceJson")]
pub struct Sequence {
    offset: usize,
    values: Vec<Rational>,
}

/// Wire form: `{"offset": 0|1, "values": ["p/q", ...]}`.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct SequenceJson {
    offset: usize,
    values: Vec<String>,
}

impl TryFrom<SequenceJson> for Sequence {
    type Error = Error;

    fn try_from(json: SequenceJson) -> Result<Sequence> {
        let values = json
            .values
            .iter()
            .map(|v| parse_rational(v))
            .collect::<Result<Vec<_>>>()?;
        Sequence::new(json.offset, values)
    }
}

impl From<Sequence> for SequenceJson {
    fn from(s: Sequence) -> SequenceJson {
        SequenceJson {
            offset: s.offset,
            values: s.values.iter().map(Rational::to_string).collect(),
        }
    }
}

impl Sequence {
    pub fn new(offset: usize, values: Vec<Rational>) -> Result<Self> {
        if offset > 1 {
            return usage(format!("sequence offset must be 0 or 1, got {offset}"));
        }
        Ok(Sequence { offset, values })
    }

    /// `(a_1, a_2, ...)`.
    pub fn one_based(values: Vec<Rational>) -> Self {
        Sequence { offset: 1, values }
    }

    /// `(a_0, a_1, ...)`.
    pub fn zero_based(values: Vec<Rational>) -> Self {
        Sequence { offset: 0, values }
    }

    pub fn offset(&self) -> usize {
        self.offset
    }

    pub fn values(&self) -> &[Rational] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// Term at absolute index `i`.
    pub fn get(&self, i: usize) -> Option<&Rational> {
        self.values.get(i.checked_sub(self.offset)?)
    }
}
