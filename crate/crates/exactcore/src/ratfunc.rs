use crate::multipoly::{Monomial, MultiPoly};
use crate::scalar::ExactScalar;
use crate::symtab::Symbol;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

/// Normalized fraction of multivariate polynomials.
///
/// Invariants: the denominator is nonzero, shares no common factor with the
/// numerator, and has leading coefficient 1 in the canonical monomial order.
#[derive(Clone, PartialEq, Eq)]
pub struct RatFunc {
    pub num: MultiPoly,
    pub den: MultiPoly,
}

impl RatFunc {
    pub fn zero() -> Self {
        Self { num: MultiPoly::zero(), den: MultiPoly::one() }
    }

    pub fn one() -> Self {
        Self { num: MultiPoly::one(), den: MultiPoly::one() }
    }

    pub fn from_poly(p: MultiPoly) -> Self {
        Self { num: p, den: MultiPoly::one() }
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_poly(MultiPoly::from_int(n))
    }

    pub fn from_ratio(n: i64, d: i64) -> Self {
        Self::from_poly(MultiPoly::from_ratio(n, d))
    }

    pub fn from_scalar(c: ExactScalar) -> Self {
        Self::from_poly(MultiPoly::constant(c))
    }

    pub fn var(s: Symbol) -> Self {
        Self::from_poly(MultiPoly::var(s))
    }

    pub fn new(num: MultiPoly, den: MultiPoly) -> Self {
        assert!(!den.is_zero(), "zero denominator");
        let mut r = Self { num, den };
        r.reduce();
        r
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn as_poly(&self) -> Option<&MultiPoly> {
        if self.den == MultiPoly::one() {
            Some(&self.num)
        } else {
            None
        }
    }

    pub fn as_constant(&self) -> Option<ExactScalar> {
        self.as_poly().and_then(|p| p.as_constant())
    }

    pub fn inv(&self) -> Self {
        assert!(!self.is_zero(), "inverting zero");
        Self::new(self.den.clone(), self.num.clone())
    }

    pub fn scale(&self, c: &ExactScalar) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self { num: self.num.scale(c), den: self.den.clone() }
    }

    pub fn eval_symbol(&self, s: Symbol, v: &ExactScalar) -> RatFunc {
        RatFunc::new(self.num.eval_symbol(s, v), self.den.eval_symbol(s, v))
    }

    fn reduce(&mut self) {
        if self.num.is_zero() {
            self.den = MultiPoly::one();
            return;
        }
        // Pull monomial content out of both parts so gcd_poly sees honest
        // polynomials; the balance nm/dm rides along on the numerator as a
        // Laurent monomial.
        let nm = monomial_content(&self.num);
        let dm = monomial_content(&self.den);
        let num = self.num.mul_monomial(&negate_mono(&nm), &ExactScalar::one());
        let den = self.den.mul_monomial(&negate_mono(&dm), &ExactScalar::one());
        let shift = nm.try_div(&dm);

        let g = gcd_poly(&num, &den);
        let (num, den) = if g.is_constant() {
            (num, den)
        } else {
            (
                num.try_exact_div(&g).expect("gcd divides numerator"),
                den.try_exact_div(&g).expect("gcd divides denominator"),
            )
        };
        let num = num.mul_monomial(&shift, &ExactScalar::one());
        // canonical leading coefficient 1 on the denominator
        let lc = den.leading().map(|(_, c)| c.clone()).expect("nonzero den");
        let lcinv = lc.inv();
        self.num = num.scale(&lcinv);
        self.den = den.scale(&lcinv);
    }
}

fn negate_mono(m: &Monomial) -> Monomial {
    let mut v = m.clone();
    for e in v.0.iter_mut() {
        *e = -*e;
    }
    v
}

/// Componentwise minimum of all exponent vectors (the monomial gcd, which for
/// Laurent polynomials may have negative entries).
fn monomial_content(p: &MultiPoly) -> Monomial {
    let mut acc: Option<Vec<i32>> = None;
    for m in p.terms.keys() {
        match &mut acc {
            None => {
                acc = Some({
                    let mut v = m.0.clone();
                    v.resize(v.len().max(1), 0);
                    v
                })
            }
            Some(v) => {
                let n = v.len().max(m.0.len());
                v.resize(n, 0);
                for (i, item) in v.iter_mut().enumerate() {
                    *item = (*item).min(m.exp(i));
                }
            }
        }
    }
    let mut m = Monomial(acc.unwrap_or_default());
    while m.0.last() == Some(&0) {
        m.0.pop();
    }
    m
}

/// Multivariate polynomial gcd by primitive subresultant PRS, recursing on
/// the highest symbol present. Inputs must have non-negative exponents.
pub fn gcd_poly(a: &MultiPoly, b: &MultiPoly) -> MultiPoly {
    if a.is_zero() {
        return make_monic(b);
    }
    if b.is_zero() {
        return make_monic(a);
    }
    if a.is_constant() || b.is_constant() {
        return MultiPoly::one();
    }
    let support: Vec<Symbol> = {
        let mut s = a.support();
        s.extend(b.support());
        s.sort_unstable();
        s.dedup();
        s
    };
    let main = *support.last().expect("nonconstant");
    let ua = to_recursive(a, main);
    let ub = to_recursive(b, main);
    let (ca, pa) = primitive(&ua);
    let (cb, pb) = primitive(&ub);
    let content_gcd = gcd_poly(&ca, &cb);
    let prim_gcd = prs_gcd(pa, pb);
    let g = &from_recursive(&prim_gcd, main) * &content_gcd;
    make_monic(&g)
}

fn make_monic(p: &MultiPoly) -> MultiPoly {
    match p.leading() {
        None => MultiPoly::zero(),
        Some((_, c)) => p.scale(&c.inv()),
    }
}

/// Dense coefficient list in the main symbol, constant term first.
fn to_recursive(p: &MultiPoly, main: Symbol) -> Vec<MultiPoly> {
    let deg = p.degree_in(main).unwrap_or(0).max(0) as usize;
    assert!(p.min_degree_in(main).unwrap_or(0) >= 0, "gcd on Laurent input");
    let mut out = vec![MultiPoly::zero(); deg + 1];
    for (m, c) in &p.terms {
        let e = m.exp(main) as usize;
        let mut rest = m.clone();
        if rest.0.len() > main {
            rest.0[main] = 0;
            while rest.0.last() == Some(&0) {
                rest.0.pop();
            }
        }
        out[e].add_term(rest, c.clone());
    }
    out
}

fn from_recursive(coeffs: &[MultiPoly], main: Symbol) -> MultiPoly {
    let mut out = MultiPoly::zero();
    for (e, c) in coeffs.iter().enumerate() {
        out = &out + &c.mul_monomial(&Monomial::var(main, e as i32), &ExactScalar::one());
    }
    out
}

fn trim_rec(v: &mut Vec<MultiPoly>) {
    while v.last().map(|c| c.is_zero()) == Some(true) {
        v.pop();
    }
}

/// Content/primitive-part split of a recursive polynomial.
fn primitive(p: &[MultiPoly]) -> (MultiPoly, Vec<MultiPoly>) {
    let mut content = MultiPoly::zero();
    for c in p {
        content = gcd_poly(&content, c);
        if content.is_constant() && !content.is_zero() {
            content = MultiPoly::one();
            break;
        }
    }
    if content.is_zero() {
        return (MultiPoly::zero(), Vec::new());
    }
    let prim: Vec<MultiPoly> =
        p.iter().map(|c| c.try_exact_div(&content).expect("content divides")).collect();
    (content, prim)
}

/// Pseudo-remainder of dense recursive polynomials.
fn pseudo_rem(a: &[MultiPoly], b: &[MultiPoly]) -> Vec<MultiPoly> {
    let mut r: Vec<MultiPoly> = a.to_vec();
    trim_rec(&mut r);
    let db = b.len() - 1;
    let lb = &b[db];
    while r.len() >= b.len() && !r.is_empty() {
        let dr = r.len() - 1;
        let lr = r[dr].clone();
        // r = lb*r - lr*x^(dr-db)*b
        for c in r.iter_mut() {
            *c = &*c * lb;
        }
        for (i, bc) in b.iter().enumerate() {
            let idx = dr - db + i;
            r[idx] = &r[idx] - &(&lr * bc);
        }
        trim_rec(&mut r);
    }
    r
}

/// Primitive PRS gcd of primitive recursive polynomials.
fn prs_gcd(mut a: Vec<MultiPoly>, mut b: Vec<MultiPoly>) -> Vec<MultiPoly> {
    trim_rec(&mut a);
    trim_rec(&mut b);
    if a.len() < b.len() {
        std::mem::swap(&mut a, &mut b);
    }
    while !b.is_empty() {
        let r = pseudo_rem(&a, &b);
        a = b;
        b = r;
        if !b.is_empty() {
            let (_, p) = primitive(&b);
            b = p;
        }
    }
    if a.len() <= 1 {
        return vec![MultiPoly::one()];
    }
    a
}

impl RatFunc {
    fn den_is_one(&self) -> bool {
        self.den.as_constant().map(|c| c.is_one()) == Some(true)
    }
}

impl Add for &RatFunc {
    type Output = RatFunc;
    fn add(self, rhs: &RatFunc) -> RatFunc {
        if self.den_is_one() && rhs.den_is_one() {
            return RatFunc { num: &self.num + &rhs.num, den: MultiPoly::one() };
        }
        RatFunc::new(
            &(&self.num * &rhs.den) + &(&rhs.num * &self.den),
            &self.den * &rhs.den,
        )
    }
}

impl Sub for &RatFunc {
    type Output = RatFunc;
    fn sub(self, rhs: &RatFunc) -> RatFunc {
        if self.den_is_one() && rhs.den_is_one() {
            return RatFunc { num: &self.num - &rhs.num, den: MultiPoly::one() };
        }
        RatFunc::new(
            &(&self.num * &rhs.den) - &(&rhs.num * &self.den),
            &self.den * &rhs.den,
        )
    }
}

impl Mul for &RatFunc {
    type Output = RatFunc;
    fn mul(self, rhs: &RatFunc) -> RatFunc {
        if self.den_is_one() && rhs.den_is_one() {
            return RatFunc { num: &self.num * &rhs.num, den: MultiPoly::one() };
        }
        RatFunc::new(&self.num * &rhs.num, &self.den * &rhs.den)
    }
}

impl Div for &RatFunc {
    type Output = RatFunc;
    fn div(self, rhs: &RatFunc) -> RatFunc {
        assert!(!rhs.is_zero(), "division by zero");
        RatFunc::new(&self.num * &rhs.den, &self.den * &rhs.num)
    }
}

impl Neg for &RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        RatFunc { num: -&self.num, den: self.den.clone() }
    }
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den == MultiPoly::one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "[{}] / [{}]", self.num, self.den)
        }
    }
}

impl fmt::Debug for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::symtab::{C, NU};

    fn nu() -> MultiPoly {
        MultiPoly::var(NU)
    }
    fn cc() -> MultiPoly {
        MultiPoly::var(C)
    }

    #[test]
    fn reduction_cancels_common_factors() {
        let num = &(&nu() + &MultiPoly::one()) * &(&cc() + &nu());
        let den = &(&nu() + &MultiPoly::one()) * &MultiPoly::from_int(3);
        let r = RatFunc::new(num, den);
        assert_eq!(r, RatFunc::from_poly((&cc() + &nu()).scale(&ExactScalar::from_ratio(1, 3))));
    }

    #[test]
    fn bivariate_gcd() {
        // gcd((nu+c)^2 (nu-1), (nu+c)(c+2)) = nu+c (up to scaling)
        let p = &(&(&nu() + &cc()) * &(&nu() + &cc())) * &(&nu() - &MultiPoly::one());
        let q = &(&nu() + &cc()) * &(&cc() + &MultiPoly::from_int(2));
        let g = gcd_poly(&p, &q);
        assert_eq!(g, &nu() + &cc());
    }

    #[test]
    fn field_ops() {
        let a = RatFunc::new(nu(), &cc() + &MultiPoly::one());
        let b = RatFunc::new(cc(), nu());
        let prod = &(&a * &b) / &b;
        assert_eq!(prod, a);
        let s = &a - &a;
        assert!(s.is_zero());
    }
}
