use exactcore::scalar::ExactScalar;
use exactcore::series::TruncSeries;
use exactcore::symtab::{symbol, Symbol};
use num_bigint::BigInt;
use num_rational::BigRational;

pub fn qvar() -> Symbol {
    symbol("q")
}

/// sigma_m(k) = sum of d^m over divisors d of k, by trial division.
pub fn divisor_sum(k: u64, m: u32) -> BigInt {
    let mut total = BigInt::from(0);
    let mut d = 1u64;
    while d * d <= k {
        if k % d == 0 {
            total += BigInt::from(d).pow(m);
            let e = k / d;
            if e != d {
                total += BigInt::from(e).pow(m);
            }
        }
        d += 1;
    }
    total
}

/// Eisenstein series E_{2n}(q) = 1 - (4n/B_{2n}) sum_k sigma_{2n-1}(k) q^k
/// to the given truncation order, for n = 1, 2, 3.
pub fn eisenstein(n: u32, order: i64) -> TruncSeries<ExactScalar> {
    assert!((1..=3).contains(&n), "only E2, E4, E6 are used here");
    assert!(order >= 1);
    let b = exactcore::bernoulli(2 * n as usize);
    let factor = -BigRational::from_integer(BigInt::from(4 * n as i64)) / b;
    let mut s = TruncSeries::zero(qvar(), 1, order);
    s.set(0, ExactScalar::one());
    for k in 1..order {
        let coeff = &factor * BigRational::from_integer(divisor_sum(k as u64, 2 * n - 1));
        s.set(k, ExactScalar::from_rational(coeff));
    }
    s
}

/// The discriminant cusp form Delta(q) = eta(q)^24 = q prod (1-q^k)^24.
///
/// Construction runs both the eta-product route and (E4^3 - E6^2)/1728 and
/// asserts their agreement to the requested order.
pub fn delta_q(order: i64) -> TruncSeries<ExactScalar> {
    assert!(order >= 1);
    let q = qvar();
    let mut prod = TruncSeries::constant(q, 1, ExactScalar::one(), order);
    for k in 1..order {
        let mut f = TruncSeries::zero(q, 1, order);
        f.set(0, ExactScalar::one());
        f.set(k, ExactScalar::from_int(-1));
        prod = prod.mul(&f.pow(24));
    }
    let eta24 = prod.shift(1).truncate(order);

    let e4 = eisenstein(2, order);
    let e6 = eisenstein(3, order);
    let alt = e4.pow(3).sub(&e6.pow(2)).scale_rat(1, 1728);
    assert_eq!(eta24, alt.truncate(eta24.order), "eta^24 != (E4^3-E6^2)/1728");
    eta24
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sc(n: i64) -> ExactScalar {
        ExactScalar::from_int(n)
    }

    #[test]
    fn divisor_sums() {
        assert_eq!(divisor_sum(6, 1), BigInt::from(12));
        assert_eq!(divisor_sum(4, 3), BigInt::from(1 + 8 + 64));
        assert_eq!(divisor_sum(1, 5), BigInt::from(1));
    }

    #[test]
    fn eisenstein_expansions() {
        let e2 = eisenstein(1, 4);
        assert_eq!(e2.coeff(0), sc(1));
        assert_eq!(e2.coeff(1), sc(-24));
        assert_eq!(e2.coeff(2), sc(-72));
        assert_eq!(e2.coeff(3), sc(-96));
        let e4 = eisenstein(2, 3);
        assert_eq!(e4.coeff(1), sc(240));
        assert_eq!(e4.coeff(2), sc(2160));
        let e6 = eisenstein(3, 3);
        assert_eq!(e6.coeff(1), sc(-504));
        assert_eq!(e6.coeff(2), sc(-16632));
    }

    #[test]
    fn delta_expansion() {
        let d = delta_q(5);
        assert_eq!(d.coeff(0), sc(0));
        assert_eq!(d.coeff(1), sc(1));
        assert_eq!(d.coeff(2), sc(-24));
        assert_eq!(d.coeff(3), sc(252));
        assert_eq!(d.coeff(4), sc(-1472));
    }
}
