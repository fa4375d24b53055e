//! Exact scalar, polynomial, rational-function and truncated-series
//! arithmetic over Gaussian rationals.
//!
//! All values are immutable after construction and every operation is a pure
//! function, so the types here can be shared freely between threads.

pub mod error;
pub mod linsolve;
pub mod multipoly;
pub mod pfrac;
pub mod ratfunc;
pub mod scalar;
pub mod series;
pub mod symtab;
pub mod unirat;

pub use error::ExactError;
pub use linsolve::solve_fraction_free;
pub use multipoly::MultiPoly;
pub use ratfunc::RatFunc;
pub use scalar::ExactScalar;
pub use series::TruncSeries;
pub use symtab::Symbol;
pub use unirat::{RatDifferential, UniRat};

/// Bernoulli number B_n (B_1 = -1/2 convention), exact.
pub fn bernoulli(n: usize) -> num_rational::BigRational {
    use num_bigint::BigInt;
    use num_rational::BigRational;
    use num_traits::{One, Zero};
    let mut b: Vec<BigRational> = Vec::with_capacity(n + 1);
    for m in 0..=n {
        b.push(BigRational::new(BigInt::one(), BigInt::from(m as i64 + 1)));
        for j in (1..=m).rev() {
            let diff = b[j - 1].clone() - b[j].clone();
            b[j - 1] = diff * BigRational::from_integer(BigInt::from(j as i64));
        }
    }
    if n == 0 {
        BigRational::one()
    } else if n == 1 {
        -BigRational::new(BigInt::one(), BigInt::from(2))
    } else if n % 2 == 1 {
        BigRational::zero()
    } else {
        b[0].clone()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;
    use num_rational::BigRational;

    fn br(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn bernoulli_table() {
        assert_eq!(bernoulli(0), br(1, 1));
        assert_eq!(bernoulli(1), br(-1, 2));
        assert_eq!(bernoulli(2), br(1, 6));
        assert_eq!(bernoulli(4), br(-1, 30));
        assert_eq!(bernoulli(6), br(1, 42));
        assert_eq!(bernoulli(8), br(-1, 30));
        assert_eq!(bernoulli(10), br(5, 66));
        assert_eq!(bernoulli(12), br(-691, 2730));
        assert_eq!(bernoulli(3), br(0, 1));
    }
}
