//! Exact arithmetic building blocks: big rationals, signed square roots of
//! rationals, exact rational linear algebra, and Gaussian rationals.

mod complex;
mod matrix;
mod surd;

pub use complex::ExactComplex;
pub use matrix::ExactMatrix;
pub use surd::SignedSqrtRational;

pub use num_bigint::BigInt;
pub use num_rational::BigRational;

use num_traits::{One, Signed};
use std::cell::RefCell;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ExactError {
    /// `checked_add` was asked to add square roots from different radical
    /// classes; the sum would leave the representable set.
    #[error("radicands {0} and {1} differ by a non-square factor")]
    IncompatibleRadicals(String, String),
    /// A linear system has no solution.
    #[error("linear system is inconsistent")]
    InconsistentSystem,
    /// A linear system that must have a unique solution is rank-deficient.
    #[error("linear system is rank-deficient")]
    SingularSystem,
    /// The candidate eigenvalues do not account for the whole space.
    #[error("candidate eigenvalues span {found} of {dim} dimensions")]
    SpanFailure { found: usize, dim: usize },
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
}

thread_local! {
    static FACTORIALS: RefCell<Vec<BigInt>> = RefCell::new(vec![BigInt::one()]);
}

/// n! as a big integer, memoized per thread.
pub fn factorial(n: usize) -> BigInt {
    FACTORIALS.with(|cell| {
        let mut table = cell.borrow_mut();
        while table.len() <= n {
            let next = table.last().unwrap() * BigInt::from(table.len());
            table.push(next);
        }
        table[n].clone()
    })
}

/// Exact square root of an integer, if it is a perfect square.
pub fn sqrt_exact_int(n: &BigInt) -> Option<BigInt> {
    if n.is_negative() {
        return None;
    }
    let r = n.sqrt();
    if &(&r * &r) == n {
        Some(r)
    } else {
        None
    }
}

/// Exact square root of a nonnegative rational, if it is a perfect square.
pub fn sqrt_exact(q: &BigRational) -> Option<BigRational> {
    // numerator and denominator are coprime, so q is a square iff both are
    let num = sqrt_exact_int(q.numer())?;
    let den = sqrt_exact_int(q.denom())?;
    Some(BigRational::new(num, den))
}

/// Shorthand for a rational from machine integers.
pub fn rational(num: i64, den: i64) -> BigRational {
    BigRational::new(num.into(), den.into())
}

/// Shorthand for an integer as a rational.
pub fn integer(n: i64) -> BigRational {
    BigRational::from_integer(n.into())
}

/// Nearest double to a rational; NaN only for values outside the double range.
pub fn to_f64(q: &BigRational) -> f64 {
    use num_traits::ToPrimitive;
    q.to_f64().unwrap_or(f64::NAN)
}
