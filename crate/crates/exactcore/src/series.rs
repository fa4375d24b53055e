use crate::multipoly::MultiPoly;
use crate::ratfunc::RatFunc;
use crate::scalar::ExactScalar;
use crate::symtab::{symbol_name, Symbol};
use std::collections::BTreeMap;
use std::fmt;

/// Coefficient ring for truncated series.
pub trait Coeff: Clone + PartialEq {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, rhs: &Self) -> Self;
    fn sub(&self, rhs: &Self) -> Self;
    fn mul(&self, rhs: &Self) -> Self;
    fn neg(&self) -> Self;
    /// Multiplication by an exact rational.
    fn scale_rat(&self, n: i64, d: i64) -> Self;
    /// Multiplication by an exact Gaussian-rational scalar.
    fn scale_exact(&self, c: &ExactScalar) -> Self;
    /// Multiplicative inverse when available.
    fn invert(&self) -> Option<Self>;
    /// A square root when available (branch with positive leading part).
    fn try_sqrt(&self) -> Option<Self>;
}

impl Coeff for ExactScalar {
    fn zero() -> Self {
        ExactScalar::zero()
    }
    fn one() -> Self {
        ExactScalar::one()
    }
    fn is_zero(&self) -> bool {
        self.is_zero()
    }
    fn add(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn sub(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn neg(&self) -> Self {
        -self
    }
    fn scale_rat(&self, n: i64, d: i64) -> Self {
        self * &ExactScalar::from_ratio(n, d)
    }
    fn scale_exact(&self, c: &ExactScalar) -> Self {
        self * c
    }
    fn invert(&self) -> Option<Self> {
        if self.is_zero() {
            None
        } else {
            Some(self.inv())
        }
    }
    fn try_sqrt(&self) -> Option<Self> {
        self.sqrt()
    }
}

impl Coeff for MultiPoly {
    fn zero() -> Self {
        MultiPoly::zero()
    }
    fn one() -> Self {
        MultiPoly::one()
    }
    fn is_zero(&self) -> bool {
        self.is_zero()
    }
    fn add(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn sub(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn neg(&self) -> Self {
        -self
    }
    fn scale_rat(&self, n: i64, d: i64) -> Self {
        self.scale(&ExactScalar::from_ratio(n, d))
    }
    fn scale_exact(&self, c: &ExactScalar) -> Self {
        self.scale(c)
    }
    fn invert(&self) -> Option<Self> {
        // invertible elements: nonzero scalar multiples of (Laurent) monomials
        if self.terms.len() != 1 {
            return None;
        }
        let (m, c) = self.terms.iter().next().unwrap();
        let mut inv_m = m.clone();
        for e in inv_m.0.iter_mut() {
            *e = -*e;
        }
        Some(MultiPoly::monomial(inv_m, c.inv()))
    }
    fn try_sqrt(&self) -> Option<Self> {
        if self.terms.len() != 1 {
            return self.as_constant().and_then(|c| c.sqrt()).map(MultiPoly::constant);
        }
        let (m, c) = self.terms.iter().next().unwrap();
        if m.0.iter().any(|e| e % 2 != 0) {
            return None;
        }
        let mut half = m.clone();
        for e in half.0.iter_mut() {
            *e /= 2;
        }
        Some(MultiPoly::monomial(half, c.sqrt()?))
    }
}

impl Coeff for RatFunc {
    fn zero() -> Self {
        RatFunc::zero()
    }
    fn one() -> Self {
        RatFunc::one()
    }
    fn is_zero(&self) -> bool {
        self.is_zero()
    }
    fn add(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn sub(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn neg(&self) -> Self {
        -self
    }
    fn scale_rat(&self, n: i64, d: i64) -> Self {
        self.scale(&ExactScalar::from_ratio(n, d))
    }
    fn scale_exact(&self, c: &ExactScalar) -> Self {
        self.scale(c)
    }
    fn invert(&self) -> Option<Self> {
        if self.is_zero() {
            None
        } else {
            Some(self.inv())
        }
    }
    fn try_sqrt(&self) -> Option<Self> {
        None
    }
}

/// Sentinel order for series known exactly (polynomials).
pub const EXACT: i64 = i64::MAX / 4;

/// Truncated formal series in one expansion variable.
///
/// Exponents are `key / base_den`; every key `>= order` is unknown. The
/// truncation order is a hard contract: operations lower the output order
/// rather than report coefficients they cannot know.
#[derive(Clone, PartialEq)]
pub struct TruncSeries<C: Coeff = ExactScalar> {
    pub var: Symbol,
    pub base_den: u32,
    pub coeffs: BTreeMap<i64, C>,
    pub order: i64,
}

impl<C: Coeff> TruncSeries<C> {
    pub fn zero(var: Symbol, base_den: u32, order: i64) -> Self {
        Self { var, base_den, coeffs: BTreeMap::new(), order }
    }

    pub fn constant(var: Symbol, base_den: u32, c: C, order: i64) -> Self {
        let mut s = Self::zero(var, base_den, order);
        s.set(0, c);
        s
    }

    pub fn one_exact(var: Symbol) -> Self {
        Self::constant(var, 1, C::one(), EXACT)
    }

    /// The variable itself, exact.
    pub fn x(var: Symbol) -> Self {
        let mut s = Self::zero(var, 1, EXACT);
        s.set(1, C::one());
        s
    }

    pub fn from_pairs(var: Symbol, base_den: u32, pairs: Vec<(i64, C)>, order: i64) -> Self {
        let mut s = Self::zero(var, base_den, order);
        for (k, c) in pairs {
            s.set(k, c);
        }
        s
    }

    /// Sets a coefficient; keys at or beyond the truncation order are dropped.
    pub fn set(&mut self, key: i64, c: C) {
        if key >= self.order || c.is_zero() {
            self.coeffs.remove(&key);
            return;
        }
        self.coeffs.insert(key, c);
    }

    pub fn coeff(&self, key: i64) -> C {
        assert!(key < self.order, "coefficient at {key} beyond truncation order {}", self.order);
        self.coeffs.get(&key).cloned().unwrap_or_else(C::zero)
    }

    /// Lowest key with a nonzero coefficient; falls back to the order for a
    /// series with no known nonzero terms (the pessimistic valuation).
    pub fn valuation(&self) -> i64 {
        self.coeffs.keys().next().copied().unwrap_or(self.order)
    }

    pub fn is_zero_to_order(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn truncate(&self, order: i64) -> Self {
        let mut out = self.clone();
        out.order = out.order.min(order);
        out.coeffs.retain(|k, _| *k < order.min(self.order));
        out
    }

    fn check_compat(&self, rhs: &Self) {
        assert_eq!(self.var, rhs.var, "series variable mismatch");
        assert_eq!(self.base_den, rhs.base_den, "series base denominator mismatch");
    }

    pub fn add(&self, rhs: &Self) -> Self {
        self.check_compat(rhs);
        let order = self.order.min(rhs.order);
        let mut out = Self::zero(self.var, self.base_den, order);
        for (k, c) in self.coeffs.iter().chain(rhs.coeffs.iter()) {
            if *k < order {
                let cur = out.coeffs.get(k).cloned().unwrap_or_else(C::zero);
                out.set(*k, cur.add(c));
            }
        }
        out
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.neg())
    }

    pub fn neg(&self) -> Self {
        Self {
            var: self.var,
            base_den: self.base_den,
            coeffs: self.coeffs.iter().map(|(k, c)| (*k, c.neg())).collect(),
            order: self.order,
        }
    }

    pub fn scale(&self, c: &C) -> Self {
        let mut out = Self::zero(self.var, self.base_den, self.order);
        for (k, v) in &self.coeffs {
            out.set(*k, v.mul(c));
        }
        out
    }

    pub fn scale_rat(&self, n: i64, d: i64) -> Self {
        let mut out = Self::zero(self.var, self.base_den, self.order);
        for (k, v) in &self.coeffs {
            out.set(*k, v.scale_rat(n, d));
        }
        out
    }

    /// Multiply by x^(shift/base_den).
    pub fn shift(&self, shift: i64) -> Self {
        Self {
            var: self.var,
            base_den: self.base_den,
            coeffs: self.coeffs.iter().map(|(k, c)| (k + shift, c.clone())).collect(),
            order: self.order.saturating_add(shift).min(EXACT),
        }
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        self.check_compat(rhs);
        // pessimistic order: first unknown product exponent
        let o1 = self.order.saturating_add(rhs.valuation());
        let o2 = rhs.order.saturating_add(self.valuation());
        let order = o1.min(o2).min(EXACT);
        let mut out = Self::zero(self.var, self.base_den, order);
        for (k1, c1) in &self.coeffs {
            for (k2, c2) in &rhs.coeffs {
                let k = k1 + k2;
                if k < order {
                    let cur = out.coeffs.get(&k).cloned().unwrap_or_else(C::zero);
                    out.set(k, cur.add(&c1.mul(c2)));
                }
            }
        }
        out
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::constant(self.var, self.base_den, C::one(), EXACT);
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    /// Multiplicative inverse; requires an invertible lowest coefficient.
    pub fn inv(&self) -> Self {
        let lead_key = self.valuation();
        assert!(lead_key < self.order, "inverting series with no known terms");
        let lead = self.coeffs.get(&lead_key).expect("nonzero lead");
        let lead_inv = lead.invert().expect("leading coefficient not invertible");
        // self = lead x^l (1 + h) with val(h) > 0
        let mut h = self.shift(-lead_key).scale(&lead_inv);
        let order = h.order; // relative precision
        h.set(0, C::zero());
        let mut acc = Self::constant(self.var, self.base_den, C::one(), order);
        let mut term = Self::constant(self.var, self.base_den, C::one(), order);
        let hv = h.valuation().max(1);
        let mut k = hv;
        while k < order {
            term = term.mul(&h).neg();
            acc = acc.add(&term);
            k += hv;
        }
        acc.scale(&lead_inv).shift(-lead_key)
    }

    pub fn div(&self, rhs: &Self) -> Self {
        self.mul(&rhs.inv())
    }

    /// exp of a series with positive valuation.
    pub fn exp(&self) -> Self {
        assert!(self.valuation() > 0, "exp needs positive valuation");
        let order = self.order;
        let mut acc = Self::constant(self.var, self.base_den, C::one(), order);
        let mut term = Self::constant(self.var, self.base_den, C::one(), order);
        let v = self.valuation().max(1);
        let mut n: i64 = 1;
        while n * v < order {
            term = term.mul(self).scale_rat(1, n);
            acc = acc.add(&term);
            n += 1;
        }
        acc
    }

    /// log of a series with constant term 1.
    pub fn log(&self) -> Self {
        let one = C::one();
        assert!(self.coeffs.get(&0) == Some(&one), "log needs constant term 1");
        let mut h = self.clone();
        h.set(0, C::zero());
        let order = self.order;
        let mut acc = Self::zero(self.var, self.base_den, order);
        let mut term = Self::constant(self.var, self.base_den, C::one(), order);
        let v = h.valuation().max(1);
        let mut n: i64 = 1;
        while (n - 1) * v < order {
            term = term.mul(&h);
            let signed = if n % 2 == 0 { term.neg() } else { term.clone() };
            acc = acc.add(&signed.scale_rat(1, n));
            n += 1;
        }
        acc
    }

    /// Square root with the default branch from the coefficient ring.
    pub fn sqrt(&self) -> Option<Self> {
        let lead_key = self.valuation();
        if lead_key >= self.order {
            return None;
        }
        let lead = self.coeffs.get(&lead_key)?.clone();
        let root = lead.try_sqrt()?;
        Some(self.sqrt_with_branch(&root))
    }

    /// Square root with a caller-supplied leading value (the branch choice).
    /// The leading exponent must be even.
    pub fn sqrt_with_branch(&self, branch_lead: &C) -> Self {
        let lead_key = self.valuation();
        assert!(lead_key % 2 == 0, "odd leading exponent has no series square root");
        let lead = self.coeffs.get(&lead_key).expect("nonzero lead").clone();
        assert!(branch_lead.mul(branch_lead) == lead, "branch value does not square to lead");
        let lead_inv = lead.invert().expect("leading coefficient not invertible");
        let mut h = self.shift(-lead_key).scale(&lead_inv);
        let order = h.order;
        h.set(0, C::zero());
        // (1+h)^(1/2) by the binomial series
        let mut acc = Self::constant(self.var, self.base_den, C::one(), order);
        let mut term = Self::constant(self.var, self.base_den, C::one(), order);
        let v = h.valuation().max(1);
        let mut n: i64 = 0;
        // binom(1/2, n+1) = binom(1/2, n) * (1/2 - n)/(n+1)
        while (n + 1) * v < order {
            term = term.mul(&h).scale_rat(1 - 2 * n, 2 * (n + 1));
            acc = acc.add(&term);
            n += 1;
        }
        acc.scale(branch_lead).shift(lead_key / 2)
    }

    /// Substitutes `inner` (positive valuation, same base_den) for the
    /// variable. Exponents of `self` must be non-negative.
    pub fn compose(&self, inner: &Self) -> Self {
        assert!(inner.valuation() > 0, "composition needs positive inner valuation");
        assert!(
            self.coeffs.keys().next().map(|k| *k >= 0) != Some(false),
            "composition into Laurent series"
        );
        let iv = inner.valuation().max(1);
        // x^k known to min(inner.order + (k-1)*iv, ...); the output order is
        // limited both by inner's precision and self's truncation.
        let order = inner
            .order
            .min(self.order.saturating_mul(iv))
            .min(EXACT);
        let mut out = Self::zero(inner.var, inner.base_den, order);
        let mut pow_cache: Vec<TruncSeries<C>> =
            vec![Self::constant(inner.var, inner.base_den, C::one(), order)];
        for (k, c) in &self.coeffs {
            let k = *k as usize;
            while pow_cache.len() <= k {
                let next = pow_cache.last().unwrap().mul(inner);
                pow_cache.push(next);
            }
            out = out.add(&pow_cache[k].scale(c));
        }
        out
    }

    /// Compositional inverse: g with self(g(x)) = x + O(x^order).
    /// Needs zero constant term and invertible linear coefficient.
    pub fn reversion(&self) -> Self {
        assert_eq!(self.base_den, 1, "reversion for integer-exponent series");
        assert!(self.coeffs.get(&0).is_none(), "reversion needs zero constant term");
        let f1 = self.coeffs.get(&1).cloned().unwrap_or_else(C::zero);
        let f1_inv = f1.invert().expect("zero linear coefficient");
        let order = self.order;
        let mut g = Self::zero(self.var, 1, order);
        g.set(1, f1_inv.clone());
        let mut k = 2;
        while k < order {
            let err = self.compose(&g);
            // err = x + e_k x^k + ...
            let mut e = err.clone();
            e.set(1, e.coeff(1).sub(&C::one()));
            let ek = if k < e.order { e.coeff(k) } else { C::zero() };
            if !ek.is_zero() {
                g.set(k, g.coeff(k).sub(&ek.mul(&f1_inv)));
            }
            k += 1;
        }
        g
    }

    /// x d/dx (exponent-weighted derivative), exact on fractional exponents.
    pub fn x_d_dx(&self) -> Self {
        let mut out = Self::zero(self.var, self.base_den, self.order);
        for (k, c) in &self.coeffs {
            out.set(*k, c.scale_rat(*k, self.base_den as i64));
        }
        out
    }

    /// Converts to a finer exponent lattice (e.g. base_den 1 -> 2).
    pub fn with_base_den(&self, base_den: u32) -> Self {
        assert!(base_den % self.base_den == 0, "incompatible base_den refinement");
        let f = (base_den / self.base_den) as i64;
        Self {
            var: self.var,
            base_den,
            coeffs: self.coeffs.iter().map(|(k, c)| (k * f, c.clone())).collect(),
            order: self.order.saturating_mul(f).min(EXACT),
        }
    }

    pub fn map_coeffs<D: Coeff>(&self, f: impl Fn(&C) -> D) -> TruncSeries<D> {
        let mut out = TruncSeries::<D>::zero(self.var, self.base_den, self.order);
        for (k, c) in &self.coeffs {
            out.set(*k, f(c));
        }
        out
    }

    pub fn scale_exact(&self, c: &ExactScalar) -> Self {
        let mut out = Self::zero(self.var, self.base_den, self.order);
        for (k, v) in &self.coeffs {
            out.set(*k, v.scale_exact(c));
        }
        out
    }
}

/// Placeholder variable for context-free zero/one series built through the
/// `Coeff` trait; fixed up on first combination with a concrete series.
pub const VAR_ANY: Symbol = usize::MAX;

fn unify_vars<C: Coeff>(a: &TruncSeries<C>, b: &TruncSeries<C>) -> (TruncSeries<C>, TruncSeries<C>) {
    let mut a = a.clone();
    let mut b = b.clone();
    if a.var == VAR_ANY {
        a.var = b.var;
        a.base_den = b.base_den;
    }
    if b.var == VAR_ANY {
        b.var = a.var;
        b.base_den = a.base_den;
    }
    (a, b)
}

/// Truncated series form a ring, so they can serve as coefficients of an
/// outer series (nested truncations).
impl<C: Coeff> Coeff for TruncSeries<C> {
    fn zero() -> Self {
        TruncSeries { var: VAR_ANY, base_den: 1, coeffs: BTreeMap::new(), order: EXACT }
    }
    fn one() -> Self {
        let mut s: Self = Coeff::zero();
        s.coeffs.insert(0, C::one());
        s
    }
    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
    fn add(&self, rhs: &Self) -> Self {
        let (a, b) = unify_vars(self, rhs);
        a.add(&b)
    }
    fn sub(&self, rhs: &Self) -> Self {
        let (a, b) = unify_vars(self, rhs);
        a.sub(&b)
    }
    fn mul(&self, rhs: &Self) -> Self {
        let (a, b) = unify_vars(self, rhs);
        a.mul(&b)
    }
    fn neg(&self) -> Self {
        TruncSeries::neg(self)
    }
    fn scale_rat(&self, n: i64, d: i64) -> Self {
        TruncSeries::scale_rat(self, n, d)
    }
    fn scale_exact(&self, c: &ExactScalar) -> Self {
        TruncSeries::scale_exact(self, c)
    }
    fn invert(&self) -> Option<Self> {
        let lead_key = self.valuation();
        if lead_key >= self.order {
            return None;
        }
        self.coeffs.get(&lead_key)?.invert()?;
        Some(self.inv())
    }
    fn try_sqrt(&self) -> Option<Self> {
        self.sqrt()
    }
}

impl<C: Coeff + fmt::Display> fmt::Display for TruncSeries<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let v = symbol_name(self.var);
        if self.coeffs.is_empty() {
            write!(f, "0")?;
        } else {
            let mut first = true;
            for (k, c) in &self.coeffs {
                if !first {
                    write!(f, " + ")?;
                }
                first = false;
                if self.base_den == 1 {
                    write!(f, "({c})*{v}^{k}")?;
                } else {
                    write!(f, "({c})*{v}^({k}/{})", self.base_den)?;
                }
            }
        }
        if self.order < EXACT {
            if self.base_den == 1 {
                write!(f, " + O({v}^{})", self.order)?;
            } else {
                write!(f, " + O({v}^({}/{}))", self.order, self.base_den)?;
            }
        }
        Ok(())
    }
}

impl<C: Coeff + fmt::Display> fmt::Debug for TruncSeries<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::symtab::symbol;

    type S = TruncSeries<ExactScalar>;

    fn x() -> S {
        S::x(symbol("x"))
    }

    fn sc(n: i64, d: i64) -> ExactScalar {
        ExactScalar::from_ratio(n, d)
    }

    #[test]
    fn telescoping_product() {
        // (1+x)(1-x) = 1-x^2
        let one = S::one_exact(symbol("x"));
        let p = one.add(&x()).mul(&one.sub(&x()));
        assert_eq!(p.coeff(0), sc(1, 1));
        assert_eq!(p.coeff(1), sc(0, 1));
        assert_eq!(p.coeff(2), sc(-1, 1));
    }

    #[test]
    fn exp_log_identity() {
        let one = S::one_exact(symbol("x")).truncate(10);
        let f = one.add(&x().truncate(10));
        let g = f.log().exp();
        for k in 0..10 {
            assert_eq!(g.coeff(k), f.coeff(k), "coefficient {k}");
        }
    }

    #[test]
    fn geometric_inverse() {
        // 1/(1-x) = 1 + x + x^2 + ...
        let one = S::one_exact(symbol("x")).truncate(8);
        let f = one.sub(&x().truncate(8));
        let g = f.inv();
        for k in 0..8 {
            assert_eq!(g.coeff(k), sc(1, 1));
        }
    }

    #[test]
    fn reversion_example() {
        // f(x) = x + x^2  =>  g(x) = x - x^2 + 2x^3 - 5x^4 (oracle: compose back)
        let mut f = S::zero(symbol("x"), 1, 6);
        f.set(1, sc(1, 1));
        f.set(2, sc(1, 1));
        let g = f.reversion();
        assert_eq!(g.coeff(1), sc(1, 1));
        assert_eq!(g.coeff(2), sc(-1, 1));
        assert_eq!(g.coeff(3), sc(2, 1));
        assert_eq!(g.coeff(4), sc(-5, 1));
        let id = f.compose(&g);
        assert_eq!(id.coeff(1), sc(1, 1));
        for k in 2..id.order {
            assert_eq!(id.coeff(k), sc(0, 1), "coefficient {k}");
        }
        // identity reverts to identity
        let idf = x().truncate(6);
        assert_eq!(idf.reversion().coeff(1), sc(1, 1));
    }

    #[test]
    fn sqrt_binomial() {
        // sqrt(1+x) = 1 + x/2 - x^2/8 + ...
        let f = S::one_exact(symbol("x")).truncate(6).add(&x().truncate(6));
        let g = f.sqrt().unwrap();
        assert_eq!(g.coeff(0), sc(1, 1));
        assert_eq!(g.coeff(1), sc(1, 2));
        assert_eq!(g.coeff(2), sc(-1, 8));
        // sqrt(4+4x) with branch +2 = 2 + x - x^2/4
        let f2 = f.scale(&sc(4, 1));
        let g2 = f2.sqrt_with_branch(&sc(2, 1));
        assert_eq!(g2.coeff(0), sc(2, 1));
        assert_eq!(g2.coeff(1), sc(1, 1));
        assert_eq!(g2.coeff(2), sc(-1, 4));
    }

    #[test]
    fn truncation_is_pessimistic() {
        // multiplying by x^2 type series cannot invent knowledge
        let mut a = S::zero(symbol("x"), 1, 5);
        a.set(0, sc(1, 1));
        let mut b = S::zero(symbol("x"), 1, 3);
        b.set(1, sc(1, 1));
        let p = a.mul(&b);
        assert_eq!(p.order, 3.min(5 + 1)); // b's order limits through a's valuation 0
    }

    #[test]
    fn half_integer_exponents() {
        // (x^(1/2))^2 = x with base_den 2
        let mut r = S::zero(symbol("x"), 2, 9);
        r.set(1, sc(1, 1));
        let p = r.mul(&r);
        assert_eq!(p.coeff(2), sc(1, 1));
        assert_eq!(p.base_den, 2);
    }
}
