use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};

/// Arbitrary-precision Gaussian rational `re + im*i`.
///
/// `BigRational` keeps numerator/denominator in lowest terms with a positive
/// denominator, so arithmetic here is exact by construction.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ExactScalar {
    pub re: BigRational,
    pub im: BigRational,
}

impl ExactScalar {
    pub fn zero() -> Self {
        Self { re: BigRational::zero(), im: BigRational::zero() }
    }

    pub fn one() -> Self {
        Self { re: BigRational::one(), im: BigRational::zero() }
    }

    /// The imaginary unit.
    pub fn i() -> Self {
        Self { re: BigRational::zero(), im: BigRational::one() }
    }

    pub fn from_int(n: i64) -> Self {
        Self { re: BigRational::from_integer(BigInt::from(n)), im: BigRational::zero() }
    }

    pub fn from_ratio(num: i64, den: i64) -> Self {
        assert!(den != 0, "zero denominator");
        Self { re: BigRational::new(BigInt::from(num), BigInt::from(den)), im: BigRational::zero() }
    }

    pub fn from_rational(r: BigRational) -> Self {
        Self { re: r, im: BigRational::zero() }
    }

    /// `re + im*i` from two integer ratios.
    pub fn gaussian(re_n: i64, re_d: i64, im_n: i64, im_d: i64) -> Self {
        Self {
            re: BigRational::new(BigInt::from(re_n), BigInt::from(re_d)),
            im: BigRational::new(BigInt::from(im_n), BigInt::from(im_d)),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.re.is_one() && self.im.is_zero()
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    pub fn conj(&self) -> Self {
        Self { re: self.re.clone(), im: -self.im.clone() }
    }

    /// Squared modulus as a rational.
    pub fn norm(&self) -> BigRational {
        &self.re * &self.re + &self.im * &self.im
    }

    pub fn inv(&self) -> Self {
        assert!(!self.is_zero(), "division by zero scalar");
        let n = self.norm();
        Self { re: &self.re / &n, im: -&self.im / &n }
    }

    pub fn pow(&self, e: i64) -> Self {
        if e < 0 {
            return self.inv().pow(-e);
        }
        let mut acc = Self::one();
        let mut base = self.clone();
        let mut e = e as u64;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Square root when it exists in the Gaussian rationals, with the branch
    /// whose real part is positive (or positive imaginary part on the cut).
    pub fn sqrt(&self) -> Option<Self> {
        fn rational_sqrt(r: &BigRational) -> Option<BigRational> {
            if r.is_negative() {
                return None;
            }
            let n = r.numer().sqrt();
            let d = r.denom().sqrt();
            if &(&n * &n) == r.numer() && &(&d * &d) == r.denom() {
                Some(BigRational::new(n, d))
            } else {
                None
            }
        }
        if self.im.is_zero() {
            if let Some(s) = rational_sqrt(&self.re) {
                return Some(Self::from_rational(s));
            }
            // sqrt of a negative rational may still be Gaussian: -a -> i*sqrt(a)
            let neg = -self.re.clone();
            if let Some(s) = rational_sqrt(&neg) {
                return Some(Self { re: BigRational::zero(), im: s });
            }
            return None;
        }
        // General Gaussian square root: need |z| to be a rational square.
        let m = rational_sqrt(&self.norm())?;
        let two = BigRational::from_integer(BigInt::from(2));
        let re2 = (&m + &self.re) / &two;
        let im2 = (&m - &self.re) / &two;
        let a = rational_sqrt(&re2)?;
        let b = rational_sqrt(&im2)?;
        let b = if self.im.is_negative() { -b } else { b };
        Some(Self { re: a, im: b })
    }
}

impl fmt::Debug for ExactScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

/// Serializes as "p/q" for real values and "p/q+r/s*i" otherwise.
impl fmt::Display for ExactScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fn rat(r: &BigRational) -> String {
            if r.denom().is_one() {
                format!("{}", r.numer())
            } else {
                format!("{}/{}", r.numer(), r.denom())
            }
        }
        if self.im.is_zero() {
            write!(f, "{}", rat(&self.re))
        } else if self.re.is_zero() {
            write!(f, "{}*i", rat(&self.im))
        } else if self.im.is_negative() {
            write!(f, "{}-{}*i", rat(&self.re), rat(&-self.im.clone()))
        } else {
            write!(f, "{}+{}*i", rat(&self.re), rat(&self.im))
        }
    }
}

impl ExactScalar {
    /// Parses the `Display` format back.
    pub fn parse(s: &str) -> Option<Self> {
        fn rat(s: &str) -> Option<BigRational> {
            let s = s.trim();
            if let Some((n, d)) = s.split_once('/') {
                Some(BigRational::new(n.parse().ok()?, d.parse().ok()?))
            } else {
                Some(BigRational::from_integer(s.parse().ok()?))
            }
        }
        let s = s.trim();
        if let Some(body) = s.strip_suffix("*i") {
            // find the sign splitting re from im (not the leading sign)
            let bytes = body.as_bytes();
            for k in (1..bytes.len()).rev() {
                if (bytes[k] == b'+' || bytes[k] == b'-') && bytes[k - 1] != b'/' {
                    let (re_s, im_s) = body.split_at(k);
                    // reject splits inside a fraction like "-1/2" (digit check)
                    if re_s.chars().last().map(|c| c.is_ascii_digit()) == Some(true) {
                        let re = rat(re_s)?;
                        let im = rat(im_s)?;
                        return Some(Self { re, im });
                    }
                }
            }
            return Some(Self { re: BigRational::zero(), im: rat(body)? });
        }
        Some(Self::from_rational(rat(s)?))
    }
}

impl Add for &ExactScalar {
    type Output = ExactScalar;
    fn add(self, rhs: &ExactScalar) -> ExactScalar {
        ExactScalar { re: &self.re + &rhs.re, im: &self.im + &rhs.im }
    }
}

impl Sub for &ExactScalar {
    type Output = ExactScalar;
    fn sub(self, rhs: &ExactScalar) -> ExactScalar {
        ExactScalar { re: &self.re - &rhs.re, im: &self.im - &rhs.im }
    }
}

impl Mul for &ExactScalar {
    type Output = ExactScalar;
    fn mul(self, rhs: &ExactScalar) -> ExactScalar {
        // real values dominate every pipeline; skip the complex cross terms
        if self.im.is_zero() {
            if rhs.im.is_zero() {
                return ExactScalar { re: &self.re * &rhs.re, im: BigRational::zero() };
            }
            return ExactScalar { re: &self.re * &rhs.re, im: &self.re * &rhs.im };
        }
        if rhs.im.is_zero() {
            return ExactScalar { re: &self.re * &rhs.re, im: &self.im * &rhs.re };
        }
        ExactScalar {
            re: &self.re * &rhs.re - &self.im * &rhs.im,
            im: &self.re * &rhs.im + &self.im * &rhs.re,
        }
    }
}

impl Div for &ExactScalar {
    type Output = ExactScalar;
    fn div(self, rhs: &ExactScalar) -> ExactScalar {
        self * &rhs.inv()
    }
}

impl Neg for &ExactScalar {
    type Output = ExactScalar;
    fn neg(self) -> ExactScalar {
        ExactScalar { re: -self.re.clone(), im: -self.im.clone() }
    }
}

macro_rules! forward_owned {
    ($Op:ident, $op:ident) => {
        impl $Op for ExactScalar {
            type Output = ExactScalar;
            fn $op(self, rhs: ExactScalar) -> ExactScalar {
                (&self).$op(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);
forward_owned!(Div, div);

impl Neg for ExactScalar {
    type Output = ExactScalar;
    fn neg(self) -> ExactScalar {
        -&self
    }
}

impl AddAssign<&ExactScalar> for ExactScalar {
    fn add_assign(&mut self, rhs: &ExactScalar) {
        self.re += &rhs.re;
        self.im += &rhs.im;
    }
}

impl SubAssign<&ExactScalar> for ExactScalar {
    fn sub_assign(&mut self, rhs: &ExactScalar) {
        self.re -= &rhs.re;
        self.im -= &rhs.im;
    }
}

impl MulAssign<&ExactScalar> for ExactScalar {
    fn mul_assign(&mut self, rhs: &ExactScalar) {
        *self = &*self * rhs;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exact_field_ops() {
        let a = ExactScalar::gaussian(3, 7, -2, 5);
        let b = ExactScalar::gaussian(-1, 3, 4, 9);
        let prod = &(&a * &b) / &b;
        assert_eq!(prod, a);
        assert_eq!(&a - &a, ExactScalar::zero());
        assert_eq!(&ExactScalar::i() * &ExactScalar::i(), ExactScalar::from_int(-1));
    }

    #[test]
    fn sqrt_branches() {
        assert_eq!(ExactScalar::from_ratio(9, 4).sqrt().unwrap(), ExactScalar::from_ratio(3, 2));
        assert_eq!(ExactScalar::from_int(-4).sqrt().unwrap(), ExactScalar::gaussian(0, 1, 2, 1));
        // 2i = (1+i)^2
        let z = ExactScalar::gaussian(0, 1, 2, 1);
        assert_eq!(z.sqrt().unwrap(), ExactScalar::gaussian(1, 1, 1, 1));
        assert!(ExactScalar::from_int(2).sqrt().is_none());
    }

    #[test]
    fn display_parse_roundtrip() {
        for s in [
            ExactScalar::from_ratio(-3, 7),
            ExactScalar::gaussian(1, 2, -5, 3),
            ExactScalar::gaussian(0, 1, 7, 4),
            ExactScalar::from_int(12),
        ] {
            assert_eq!(ExactScalar::parse(&s.to_string()).unwrap(), s);
        }
        assert_eq!(ExactScalar::parse("1/2+1/3*i").unwrap(), ExactScalar::gaussian(1, 2, 1, 3));
    }
}
