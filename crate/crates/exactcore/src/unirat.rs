use crate::scalar::ExactScalar;
use crate::series::{Coeff, TruncSeries};
use crate::symtab::Symbol;
use std::fmt;

/// Points of the projective line relevant to the residue calculus here.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Point {
    Zero,
    One,
    MinusOne,
    Infinity,
    Finite(ExactScalar),
}

fn poly_trim(v: &mut Vec<ExactScalar>) {
    while v.last().map(|c| c.is_zero()) == Some(true) {
        v.pop();
    }
}

fn poly_mul(a: &[ExactScalar], b: &[ExactScalar]) -> Vec<ExactScalar> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![ExactScalar::zero(); a.len() + b.len() - 1];
    for (i, ai) in a.iter().enumerate() {
        if ai.is_zero() {
            continue;
        }
        for (j, bj) in b.iter().enumerate() {
            let p = ai * bj;
            out[i + j] += &p;
        }
    }
    poly_trim(&mut out);
    out
}

fn poly_add(a: &[ExactScalar], b: &[ExactScalar]) -> Vec<ExactScalar> {
    let mut out = vec![ExactScalar::zero(); a.len().max(b.len())];
    for (i, c) in a.iter().enumerate() {
        out[i] += c;
    }
    for (i, c) in b.iter().enumerate() {
        out[i] += c;
    }
    poly_trim(&mut out);
    out
}

fn poly_scale(a: &[ExactScalar], c: &ExactScalar) -> Vec<ExactScalar> {
    if c.is_zero() {
        return Vec::new();
    }
    a.iter().map(|x| x * c).collect()
}

fn poly_eval(a: &[ExactScalar], at: &ExactScalar) -> ExactScalar {
    let mut acc = ExactScalar::zero();
    for c in a.iter().rev() {
        acc = &(&acc * at) + c;
    }
    acc
}

/// Divides by (x - r); requires a zero remainder.
fn poly_div_root(a: &[ExactScalar], r: &ExactScalar) -> Vec<ExactScalar> {
    if a.is_empty() {
        return Vec::new();
    }
    let mut out = vec![ExactScalar::zero(); a.len() - 1];
    let mut carry = ExactScalar::zero();
    for i in (0..a.len()).rev() {
        if i == 0 {
            debug_assert!((&(&carry * r) + &a[0]).is_zero(), "nonzero remainder");
            break;
        }
        let q = &a[i] + &(&carry * r);
        out[i - 1] = q.clone();
        carry = q;
    }
    poly_trim(&mut out);
    out
}

/// Taylor coefficients of the polynomial around `at`.
fn poly_shift(a: &[ExactScalar], at: &ExactScalar) -> Vec<ExactScalar> {
    // repeated synthetic division
    let mut work = a.to_vec();
    let mut out = Vec::with_capacity(a.len());
    for _ in 0..a.len() {
        if work.is_empty() {
            break;
        }
        let rem = poly_eval(&work, at);
        out.push(rem.clone());
        // (work - rem)/(x-at)
        let mut shifted = work.clone();
        if shifted.is_empty() {
            break;
        }
        shifted[0] = &shifted[0] - &rem;
        work = poly_div_root(&shifted, at);
    }
    poly_trim(&mut out);
    out
}

/// Univariate rational function `num / (z^zp (z-1)^mp (z+1)^pp)` over the
/// Gaussian rationals, in the fixed variable `var`.
///
/// The denominator factorization is specialized to the pole locations this
/// workspace produces (0, ±1, ∞); anything else is rejected loudly.
#[derive(Clone, PartialEq)]
pub struct UniRat {
    pub var: Symbol,
    pub num: Vec<ExactScalar>,
    pub zp: u32,
    pub mp: u32,
    pub pp: u32,
}

impl UniRat {
    pub fn zero(var: Symbol) -> Self {
        Self { var, num: Vec::new(), zp: 0, mp: 0, pp: 0 }
    }

    pub fn constant(var: Symbol, c: ExactScalar) -> Self {
        let num = if c.is_zero() { Vec::new() } else { vec![c] };
        Self { var, num, zp: 0, mp: 0, pp: 0 }
    }

    pub fn one(var: Symbol) -> Self {
        Self::constant(var, ExactScalar::one())
    }

    /// z^e for any integer e.
    pub fn zpow(var: Symbol, e: i32) -> Self {
        if e >= 0 {
            let mut num = vec![ExactScalar::zero(); e as usize + 1];
            num[e as usize] = ExactScalar::one();
            Self { var, num, zp: 0, mp: 0, pp: 0 }
        } else {
            Self { var, num: vec![ExactScalar::one()], zp: (-e) as u32, mp: 0, pp: 0 }
        }
    }

    pub fn from_poly(var: Symbol, num: Vec<ExactScalar>) -> Self {
        let mut s = Self { var, num, zp: 0, mp: 0, pp: 0 };
        poly_trim(&mut s.num);
        s
    }

    /// num / (z^zp (z-1)^mp (z+1)^pp), normalized.
    pub fn new(var: Symbol, num: Vec<ExactScalar>, zp: u32, mp: u32, pp: u32) -> Self {
        let mut s = Self { var, num, zp, mp, pp };
        poly_trim(&mut s.num);
        s.normalize();
        s
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_empty()
    }

    fn normalize(&mut self) {
        if self.num.is_empty() {
            self.zp = 0;
            self.mp = 0;
            self.pp = 0;
            return;
        }
        while self.zp > 0 && self.num.first().map(|c| c.is_zero()) == Some(true) {
            self.num.remove(0);
            self.zp -= 1;
        }
        let one = ExactScalar::one();
        let mone = ExactScalar::from_int(-1);
        while self.mp > 0 && poly_eval(&self.num, &one).is_zero() {
            let mut shifted = self.num.clone();
            shifted[0] = shifted[0].clone(); // keep
            self.num = poly_div_root(&shifted, &one);
            self.mp -= 1;
        }
        while self.pp > 0 && poly_eval(&self.num, &mone).is_zero() {
            self.num = poly_div_root(&self.num.clone(), &mone);
            self.pp -= 1;
        }
    }

    pub fn add(&self, rhs: &Self) -> Self {
        assert_eq!(self.var, rhs.var);
        let zp = self.zp.max(rhs.zp);
        let mp = self.mp.max(rhs.mp);
        let pp = self.pp.max(rhs.pp);
        let lift = |f: &Self| -> Vec<ExactScalar> {
            let mut n = f.num.clone();
            // multiply by z^(zp-f.zp) etc.
            let dz = (zp - f.zp) as usize;
            if dz > 0 {
                let mut v = vec![ExactScalar::zero(); dz];
                v.extend(n);
                n = v;
            }
            for _ in 0..(mp - f.mp) {
                n = poly_mul(&n, &[ExactScalar::from_int(-1), ExactScalar::one()]);
            }
            for _ in 0..(pp - f.pp) {
                n = poly_mul(&n, &[ExactScalar::one(), ExactScalar::one()]);
            }
            n
        };
        Self::new(self.var, poly_add(&lift(self), &lift(rhs)), zp, mp, pp)
    }

    pub fn neg(&self) -> Self {
        Self {
            var: self.var,
            num: self.num.iter().map(|c| -c).collect(),
            zp: self.zp,
            mp: self.mp,
            pp: self.pp,
        }
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.neg())
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        assert_eq!(self.var, rhs.var);
        Self::new(
            self.var,
            poly_mul(&self.num, &rhs.num),
            self.zp + rhs.zp,
            self.mp + rhs.mp,
            self.pp + rhs.pp,
        )
    }

    pub fn scale(&self, c: &ExactScalar) -> Self {
        Self::new(self.var, poly_scale(&self.num, c), self.zp, self.mp, self.pp)
    }

    /// Division; the divisor's numerator must factor over {z, z-1, z+1} up to
    /// a constant, otherwise the quotient would leave the allowed pole set.
    pub fn div(&self, rhs: &Self) -> Self {
        assert!(!rhs.is_zero(), "division by zero");
        let (c, z, m, p) = factor_monomial(&rhs.num)
            .unwrap_or_else(|| panic!("divisor has a pole/zero outside 0, +-1, infinity"));
        let inv = c.inv();
        // self / rhs = self * (z^rhs.zp (z-1)^rhs.mp (z+1)^rhs.pp) / (c z^z (z-1)^m (z+1)^p)
        let mut num = poly_scale(&self.num, &inv);
        let mut extra_z = rhs.zp as i64 - z as i64;
        let mut extra_m = rhs.mp as i64 - m as i64;
        let mut extra_p = rhs.pp as i64 - p as i64;
        let mut zp = self.zp as i64;
        let mut mp = self.mp as i64;
        let mut pp = self.pp as i64;
        if extra_z > 0 {
            let mut v = vec![ExactScalar::zero(); extra_z as usize];
            v.extend(num);
            num = v;
            extra_z = 0;
        }
        zp -= extra_z;
        while extra_m > 0 {
            num = poly_mul(&num, &[ExactScalar::from_int(-1), ExactScalar::one()]);
            extra_m -= 1;
        }
        mp -= extra_m;
        while extra_p > 0 {
            num = poly_mul(&num, &[ExactScalar::one(), ExactScalar::one()]);
            extra_p -= 1;
        }
        pp -= extra_p;
        Self::new(self.var, num, zp as u32, mp as u32, pp as u32)
    }

    pub fn eval(&self, at: &ExactScalar) -> ExactScalar {
        let n = poly_eval(&self.num, at);
        let one = ExactScalar::one();
        let d = at.pow(self.zp as i64)
            * (at - &one).pow(self.mp as i64)
            * (at + &one).pow(self.pp as i64);
        &n / &d
    }

    /// Pole order at a point (0 when regular there).
    pub fn pole_order(&self, p: &Point) -> i64 {
        match p {
            Point::Zero => self.zp as i64 - self.num.iter().take_while(|c| c.is_zero()).count() as i64,
            Point::One => self.mp as i64,
            Point::MinusOne => self.pp as i64,
            Point::Finite(_) => 0,
            Point::Infinity => {
                self.num.len() as i64 - 1 - (self.zp + self.mp + self.pp) as i64
            }
        }
        .max(0)
    }

    /// Laurent expansion around a finite point, as a series in a local
    /// variable `eps = z - p`, with `order` known coefficients contract.
    pub fn series_at(&self, p: &Point, local_var: Symbol, order: i64) -> TruncSeries<ExactScalar> {
        let (at, this_pow) = match p {
            Point::Zero => (ExactScalar::zero(), self.zp),
            Point::One => (ExactScalar::one(), self.mp),
            Point::MinusOne => (ExactScalar::from_int(-1), self.pp),
            Point::Finite(v) => (v.clone(), 0),
            Point::Infinity => panic!("use series_at_infinity"),
        };
        // f = num / ((eps+at)^zp (eps+at-1)^mp (eps+at+1)^pp)
        // with the factor vanishing at `at` pulled out as eps^this_pow.
        let mut out = TruncSeries::zero(local_var, 1, order);
        let num_shifted = poly_shift(&self.num, &at);
        let mut numer = TruncSeries::zero(local_var, 1, order + this_pow as i64);
        for (k, c) in num_shifted.iter().enumerate() {
            numer.set(k as i64, c.clone());
        }
        let den_factor = |root: ExactScalar, pow: u32, skip: bool| -> TruncSeries<ExactScalar> {
            // (eps + (at - root))^pow, skipping the vanishing factor
            let mut base = TruncSeries::zero(local_var, 1, order + this_pow as i64);
            if skip {
                base.set(0, ExactScalar::one());
                return base;
            }
            base.set(0, &at - &root);
            base.set(1, ExactScalar::one());
            base.pow(pow)
        };
        let d0 = den_factor(ExactScalar::zero(), self.zp, matches!(p, Point::Zero));
        let d1 = den_factor(ExactScalar::one(), self.mp, matches!(p, Point::One));
        let d2 = den_factor(ExactScalar::from_int(-1), self.pp, matches!(p, Point::MinusOne));
        let den = d0.mul(&d1).mul(&d2);
        let series = numer.mul(&den.inv()).shift(-(this_pow as i64));
        out.order = order.min(series.order);
        for (k, c) in series.coeffs.iter() {
            out.set(*k, c.clone());
        }
        out
    }

    /// Expansion at infinity in w = 1/z: f(1/w) as a series in w.
    pub fn series_at_infinity(&self, local_var: Symbol, order: i64) -> TruncSeries<ExactScalar> {
        // f = sum num[k] z^k / (z^zp (z-1)^mp (z+1)^pp)
        // in w: num part: sum num[k] w^{-k}; denominator:
        // z^zp = w^{-zp}; (z-1)^mp = w^{-mp}(1-w)^mp; (z+1)^pp = w^{-pp}(1+w)^pp
        let dtot = (self.zp + self.mp + self.pp) as i64;
        let ndeg = self.num.len() as i64 - 1;
        // lowest w-power: dtot - ndeg
        let work_order = order + ndeg.max(0) + 2;
        let mut numer = TruncSeries::zero(local_var, 1, work_order);
        for (k, c) in self.num.iter().enumerate() {
            numer.set(ndeg - k as i64, c.clone()); // times global w^{-ndeg}
        }
        let mut one_minus = TruncSeries::zero(local_var, 1, work_order);
        one_minus.set(0, ExactScalar::one());
        one_minus.set(1, ExactScalar::from_int(-1));
        let mut one_plus = TruncSeries::zero(local_var, 1, work_order);
        one_plus.set(0, ExactScalar::one());
        one_plus.set(1, ExactScalar::one());
        let den = one_minus.pow(self.mp).mul(&one_plus.pow(self.pp));
        let series = numer.mul(&den.inv());
        // overall w^{dtot - ndeg}: numer already encodes w^{-k+ndeg}, so shift
        // by dtot - ndeg ... total exponent = (ndeg - k) + (dtot - ndeg) = dtot - k.
        series.shift(dtot - ndeg).truncate(order)
    }

    /// Exact residue of `self * dz` at a point.
    pub fn residue(&self, p: &Point) -> ExactScalar {
        match p {
            Point::Infinity => {
                // res_inf f dz = -[w^{-1}-coefficient of f(1/w) * (-dw/w^2)]
                // = -(coefficient of w^1 in f(1/w) * w^2) => coefficient of w^1
                // in f(1/w) is what multiplies dw/w... do it via series:
                // f dz = f(1/w) (-1/w^2) dw; residue at w=0.
                let s = self.series_at_infinity(self.var, 2);
                // need coefficient of w^1 of f(1/w): residue of -f(1/w)/w^2 dw
                // at 0 is -(coefficient of w^1).
                -s.coeff(1)
            }
            Point::Finite(v) => {
                debug_assert!(
                    !v.is_zero() && !(v - &ExactScalar::one()).is_zero()
                        && !(v + &ExactScalar::one()).is_zero()
                );
                ExactScalar::zero()
            }
            _ => {
                let m = match p {
                    Point::Zero => self.zp,
                    Point::One => self.mp,
                    Point::MinusOne => self.pp,
                    _ => unreachable!(),
                };
                if m == 0 {
                    return ExactScalar::zero();
                }
                let s = self.series_at(p, self.var, 0);
                if -1 >= s.order {
                    panic!("insufficient precision for residue");
                }
                if s.coeffs.contains_key(&-1) {
                    s.coeff(-1)
                } else {
                    ExactScalar::zero()
                }
            }
        }
    }

    /// Antiderivative with value 0 at infinity. Requires all finite residues
    /// to vanish and decay O(z^-2) at infinity.
    pub fn antiderivative_from_infinity(&self) -> Self {
        let parts = self.partial_fractions();
        let mut out = UniRat::zero(self.var);
        for (b, c) in parts {
            let term = match b {
                BasisEl::P(e) => {
                    assert!(e <= -2, "not integrable from infinity (z^{e} term)");
                    UniRat::zpow(self.var, e + 1).scale(&c.scale_rat(1, (e + 1) as i64))
                }
                BasisEl::M1(m) => {
                    assert!(m >= 2, "logarithmic singularity at z=1");
                    // (z-1)^(1-m)/(1-m)
                    UniRat::new(self.var, vec![c.scale_rat(1, 1 - m as i64)], 0, m - 1, 0)
                }
                BasisEl::P1(m) => {
                    assert!(m >= 2, "logarithmic singularity at z=-1");
                    UniRat::new(self.var, vec![c.scale_rat(1, 1 - m as i64)], 0, 0, m - 1)
                }
            };
            out = out.add(&term);
        }
        out
    }

    /// Partial-fraction decomposition into the canonical basis.
    pub fn partial_fractions(&self) -> Vec<(BasisEl, ExactScalar)> {
        let mut out: Vec<(BasisEl, ExactScalar)> = Vec::new();
        let mut remainder = self.clone();
        // singular parts at the three special points
        for (point, pow) in [
            (Point::Zero, self.zp),
            (Point::One, self.mp),
            (Point::MinusOne, self.pp),
        ] {
            if pow == 0 {
                continue;
            }
            let s = self.series_at(&point, self.var, 0);
            for (k, c) in s.coeffs.iter() {
                if *k >= 0 || c.is_zero() {
                    continue;
                }
                let m = (-k) as u32;
                let (b, piece) = match point {
                    Point::Zero => (BasisEl::P(*k as i32), UniRat::zpow(self.var, *k as i32)),
                    Point::One => (BasisEl::M1(m), UniRat::new(self.var, vec![ExactScalar::one()], 0, m, 0)),
                    Point::MinusOne => (BasisEl::P1(m), UniRat::new(self.var, vec![ExactScalar::one()], 0, 0, m)),
                    _ => unreachable!(),
                };
                out.push((b, c.clone()));
                remainder = remainder.sub(&piece.scale(c));
            }
        }
        // remainder must now be a polynomial
        assert!(
            remainder.zp == 0 && remainder.mp == 0 && remainder.pp == 0,
            "partial fraction remainder not polynomial"
        );
        for (e, c) in remainder.num.iter().enumerate() {
            if !c.is_zero() {
                out.push((BasisEl::P(e as i32), c.clone()));
            }
        }
        out.sort_by_key(|(b, _)| *b);
        out
    }
}

/// Tries to write a polynomial as c z^a (z-1)^b (z+1)^d.
fn factor_monomial(num: &[ExactScalar]) -> Option<(ExactScalar, u32, u32, u32)> {
    let mut n = num.to_vec();
    poly_trim(&mut n);
    if n.is_empty() {
        return None;
    }
    let mut z = 0;
    let mut m = 0;
    let mut p = 0;
    while n.first().map(|c| c.is_zero()) == Some(true) {
        n.remove(0);
        z += 1;
    }
    let one = ExactScalar::one();
    let mone = ExactScalar::from_int(-1);
    while n.len() > 1 && poly_eval(&n, &one).is_zero() {
        let mut s = n.clone();
        s[0] = s[0].clone();
        n = poly_div_root(&s, &one);
        m += 1;
    }
    while n.len() > 1 && poly_eval(&n, &mone).is_zero() {
        n = poly_div_root(&n.clone(), &mone);
        p += 1;
    }
    if n.len() == 1 {
        Some((n[0].clone(), z, m, p))
    } else {
        None
    }
}

/// Canonical partial-fraction basis on the z-sphere with poles in {0, ±1, ∞}:
/// `P(e)` is z^e (Laurent), `M1(m)` is (z-1)^{-m}, `P1(m)` is (z+1)^{-m}.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum BasisEl {
    P(i32),
    M1(u32),
    P1(u32),
}

impl BasisEl {
    pub fn to_unirat(self, var: Symbol) -> UniRat {
        match self {
            BasisEl::P(e) => UniRat::zpow(var, e),
            BasisEl::M1(m) => UniRat::new(var, vec![ExactScalar::one()], 0, m, 0),
            BasisEl::P1(m) => UniRat::new(var, vec![ExactScalar::one()], 0, 0, m),
        }
    }

    /// Value under z -> -z, as a basis multiple: (el', sign).
    pub fn negate_arg(self) -> (BasisEl, ExactScalar) {
        match self {
            BasisEl::P(e) => (BasisEl::P(e), ExactScalar::from_int(if e % 2 == 0 { 1 } else { -1 })),
            // 1/(-z-1)^m = (-1)^m/(z+1)^m
            BasisEl::M1(m) => {
                (BasisEl::P1(m), ExactScalar::from_int(if m % 2 == 0 { 1 } else { -1 }))
            }
            BasisEl::P1(m) => {
                (BasisEl::M1(m), ExactScalar::from_int(if m % 2 == 0 { 1 } else { -1 }))
            }
        }
    }
}

/// A univariate rational differential `value * dz`; residues are exact.
#[derive(Clone, PartialEq)]
pub struct RatDifferential {
    pub value: UniRat,
}

impl RatDifferential {
    pub fn new(value: UniRat) -> Self {
        Self { value }
    }

    pub fn residue(&self, p: &Point) -> ExactScalar {
        self.value.residue(p)
    }
}

impl Coeff for UniRat {
    fn zero() -> Self {
        // series code always builds from an existing element; the var here is
        // a placeholder fixed up by add/mul compatibility asserts
        UniRat { var: usize::MAX, num: Vec::new(), zp: 0, mp: 0, pp: 0 }
    }
    fn one() -> Self {
        UniRat { var: usize::MAX, num: vec![ExactScalar::one()], zp: 0, mp: 0, pp: 0 }
    }
    fn is_zero(&self) -> bool {
        self.num.is_empty()
    }
    fn add(&self, rhs: &Self) -> Self {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        let mut a = self.clone();
        let mut b = rhs.clone();
        if a.var == usize::MAX {
            a.var = b.var;
        }
        if b.var == usize::MAX {
            b.var = a.var;
        }
        a.add(&b)
    }
    fn sub(&self, rhs: &Self) -> Self {
        Coeff::add(self, &rhs.neg())
    }
    fn mul(&self, rhs: &Self) -> Self {
        if self.is_zero() || rhs.is_zero() {
            return <UniRat as Coeff>::zero();
        }
        let mut a = self.clone();
        let mut b = rhs.clone();
        if a.var == usize::MAX {
            a.var = b.var;
        }
        if b.var == usize::MAX {
            b.var = a.var;
        }
        a.mul(&b)
    }
    fn neg(&self) -> Self {
        self.neg()
    }
    fn scale_rat(&self, n: i64, d: i64) -> Self {
        self.scale(&ExactScalar::from_ratio(n, d))
    }
    fn scale_exact(&self, c: &ExactScalar) -> Self {
        self.scale(c)
    }
    fn invert(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        let a = self.clone();
        if a.var == usize::MAX {
            panic!("inverting placeholder unirat");
        }
        let one = UniRat::one(a.var);
        Some(one.div(&a))
    }
    fn try_sqrt(&self) -> Option<Self> {
        None
    }
}

impl fmt::Display for UniRat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        if self.num.is_empty() {
            write!(f, "0")?;
        }
        for (k, c) in self.num.iter().enumerate() {
            if !c.is_zero() {
                write!(f, "+({c})z^{k}")?;
            }
        }
        write!(f, ")")?;
        if self.zp + self.mp + self.pp > 0 {
            write!(f, "/(z^{} (z-1)^{} (z+1)^{})", self.zp, self.mp, self.pp)?;
        }
        Ok(())
    }
}

impl fmt::Debug for UniRat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::symtab::symbol;

    fn zvar() -> Symbol {
        symbol("zeta")
    }

    fn sc(n: i64, d: i64) -> ExactScalar {
        ExactScalar::from_ratio(n, d)
    }

    #[test]
    fn residue_basics() {
        // res_0 (1/z) dz = 1
        let f = UniRat::zpow(zvar(), -1);
        assert_eq!(f.residue(&Point::Zero), sc(1, 1));
        // res_0 (1/z^2) dz = 0
        let f = UniRat::zpow(zvar(), -2);
        assert_eq!(f.residue(&Point::Zero), sc(0, 1));
        // res_inf z dz = 0 (w-substitution oracle)
        let f = UniRat::zpow(zvar(), 1);
        assert_eq!(f.residue(&Point::Infinity), sc(0, 1));
        // res_inf (1/z) dz = -1
        let f = UniRat::zpow(zvar(), -1);
        assert_eq!(f.residue(&Point::Infinity), sc(-1, 1));
    }

    #[test]
    fn residue_at_one() {
        // 1/((z-1)(z+1)) = 1/2 (1/(z-1) - 1/(z+1))
        let f = UniRat::new(zvar(), vec![ExactScalar::one()], 0, 1, 1);
        assert_eq!(f.residue(&Point::One), sc(1, 2));
        assert_eq!(f.residue(&Point::MinusOne), sc(-1, 2));
        assert_eq!(f.residue(&Point::Zero), sc(0, 1));
        assert_eq!(f.residue(&Point::Infinity), sc(0, 1));
    }

    #[test]
    fn global_residue_theorem() {
        // arbitrary f with deg(num)+2 <= deg(den): residues sum to zero
        let f = UniRat::new(
            zvar(),
            vec![sc(3, 7), sc(-2, 1), sc(5, 3)],
            2,
            2,
            1,
        );
        let total = f.residue(&Point::Zero)
            + f.residue(&Point::One)
            + f.residue(&Point::MinusOne)
            + f.residue(&Point::Infinity);
        assert!(total.is_zero());
    }

    #[test]
    fn partial_fraction_roundtrip() {
        let f = UniRat::new(
            zvar(),
            vec![sc(1, 2), sc(0, 1), sc(-3, 1), sc(1, 1), sc(2, 5)],
            3,
            2,
            1,
        );
        let parts = f.partial_fractions();
        let mut back = UniRat::zero(zvar());
        for (b, c) in parts {
            back = back.add(&b.to_unirat(zvar()).scale(&c));
        }
        assert_eq!(back, f);
    }

    #[test]
    fn antiderivative() {
        // d/dz (1/z) = -1/z^2, so the antiderivative of -1/z^2 vanishing at
        // infinity is 1/z
        let f = UniRat::zpow(zvar(), -2).neg();
        let g = f.antiderivative_from_infinity();
        assert_eq!(g, UniRat::zpow(zvar(), -1));
    }

    #[test]
    fn series_expansions() {
        // 1/(z-1) around 0: -(1 + z + z^2 + ...)
        let f = UniRat::new(zvar(), vec![ExactScalar::one()], 0, 1, 0);
        let s = f.series_at(&Point::Zero, zvar(), 4);
        for k in 0..4 {
            assert_eq!(s.coeff(k), sc(-1, 1));
        }
        // around z=1: 1/eps
        let s1 = f.series_at(&Point::One, zvar(), 2);
        assert_eq!(s1.coeff(-1), sc(1, 1));
        assert_eq!(s1.coeff(0), sc(0, 1));
        // at infinity: 1/(z-1) = w + w^2 + ...
        let si = f.series_at_infinity(zvar(), 4);
        assert_eq!(si.coeff(1), sc(1, 1));
        assert_eq!(si.coeff(2), sc(1, 1));
    }

    #[test]
    fn division_checks_pole_set() {
        let a = UniRat::from_poly(zvar(), vec![sc(0, 1), sc(2, 1)]); // 2z
        let b = UniRat::new(zvar(), vec![ExactScalar::one()], 1, 1, 0); // 1/(z(z-1))
        let q = b.div(&a); // 1/(2 z^2 (z-1))
        assert_eq!(q, UniRat::new(zvar(), vec![sc(1, 2)], 2, 1, 0));
    }
}
