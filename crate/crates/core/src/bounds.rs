//! Closed-form extremal values for nonhamiltonian graphs.

use num_bigint::BigUint;
use num_rational::Ratio;
use serde::Serialize;

use crate::error::{check_order, Error, Result};
use crate::exact::{factorial, falling_factorial, ExactCount};
use crate::graph::extremal_graph;
use crate::paths::count_paths;

/// An (order, path length) pair in the range where the extremal result applies.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct BoundQuery {
    pub n: usize,
    pub k: usize,
}

impl BoundQuery {
    /// Requires `n >= 6` and `1 <= k <= n - 1`.
    pub fn new(n: usize, k: usize) -> Result<Self> {
        if n < 6 {
            return Err(Error::InvalidParameters(format!(
                "extremal bound needs n >= 6, got {n}"
            )));
        }
        if k == 0 || k >= n {
            return Err(Error::PathLengthOutOfRange { k, max: n - 1 });
        }
        Ok(BoundQuery { n, k })
    }
}

/// Maximum number of length-k paths in a nonhamiltonian graph of order n,
/// evaluated as P(n-1, k+1)/2 + P(n-2, k-1).
pub fn theorem2_bound(q: BoundQuery) -> ExactCount {
    let (n, k) = (q.n as u64, q.k as u64);
    // A product of k+1 consecutive integers is even.
    let half = falling_factorial(n - 1, k + 1) / 2u32;
    ExactCount::from(half + falling_factorial(n - 2, k - 1))
}

/// The same bound in product form, P(n-2, k-1)·[(n-1)(n-1-k)/2 + 1], kept
/// rational so the two forms can be compared without trusting the algebra.
pub fn theorem2_bound_product_form(q: BoundQuery) -> Ratio<BigUint> {
    let (n, k) = (q.n as u64, q.k as u64);
    let bracket = Ratio::new(BigUint::from((n - 1) * (n - 1 - k)), BigUint::from(2u32))
        + Ratio::from_integer(BigUint::from(1u32));
    Ratio::from_integer(falling_factorial(n - 2, k - 1)) * bracket
}

/// (n² - 3n + 4)/2, the largest size of a nonhamiltonian graph of order n.
pub fn ore_bondy_max_size(n: usize) -> Result<ExactCount> {
    if n < 5 {
        return Err(Error::InvalidParameters(format!(
            "maximum nonhamiltonian size is stated for n >= 5, got {n}"
        )));
    }
    let n = n as u64;
    Ok(ExactCount::from((n * n - 3 * n + 4) / 2))
}

/// (n-2)!, the largest number of Hamilton paths in a nonhamiltonian graph.
pub fn corollary3_value(n: usize) -> Result<ExactCount> {
    if n < 6 {
        return Err(Error::InvalidParameters(format!(
            "Hamilton path maximum is stated for n >= 6, got {n}"
        )));
    }
    Ok(factorial(n as u64 - 2))
}

/// Whether K_{n-1}·K_2 has exactly the bound's number of length-k paths,
/// counted directly. Limited to n <= 10.
pub fn extremal_attainment_check(q: BoundQuery) -> Result<bool> {
    check_order(q.n, 6, 10)?;
    let direct = count_paths(&extremal_graph(q.n)?, q.k)?;
    Ok(direct == theorem2_bound(q))
}
