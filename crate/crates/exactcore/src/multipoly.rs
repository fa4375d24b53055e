use crate::scalar::ExactScalar;
use crate::symtab::{symbol_name, Symbol};
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// Exponent vector over the global symbol table, trailing zeros trimmed.
/// Negative exponents are allowed (Laurent monomials), which covers the
/// `beta^{-2}` and `nu^{-1}` bookkeeping that shows up downstream.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Default)]
pub struct Monomial(pub Vec<i32>);

impl Monomial {
    pub fn one() -> Self {
        Monomial(Vec::new())
    }

    pub fn var(s: Symbol, e: i32) -> Self {
        let mut v = vec![0; s + 1];
        v[s] = e;
        let mut m = Monomial(v);
        m.trim();
        m
    }

    fn trim(&mut self) {
        while self.0.last() == Some(&0) {
            self.0.pop();
        }
    }

    pub fn exp(&self, s: Symbol) -> i32 {
        self.0.get(s).copied().unwrap_or(0)
    }

    pub fn mul(&self, rhs: &Monomial) -> Monomial {
        let n = self.0.len().max(rhs.0.len());
        let mut v = vec![0; n];
        for (i, item) in v.iter_mut().enumerate() {
            *item = self.exp(i) + rhs.exp(i);
        }
        let mut m = Monomial(v);
        m.trim();
        m
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    /// Componentwise quotient if every exponent of `rhs` divides in.
    pub fn try_div(&self, rhs: &Monomial) -> Monomial {
        let n = self.0.len().max(rhs.0.len());
        let mut v = vec![0; n];
        for (i, item) in v.iter_mut().enumerate() {
            *item = self.exp(i) - rhs.exp(i);
        }
        let mut m = Monomial(v);
        m.trim();
        m
    }

    pub fn total_degree(&self) -> i64 {
        self.0.iter().map(|e| *e as i64).sum()
    }
}

/// Sparse multivariate polynomial with `ExactScalar` coefficients.
/// Zero coefficients are never stored.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct MultiPoly {
    pub terms: BTreeMap<Monomial, ExactScalar>,
}

impl MultiPoly {
    pub fn zero() -> Self {
        Self { terms: BTreeMap::new() }
    }

    pub fn one() -> Self {
        Self::constant(ExactScalar::one())
    }

    pub fn constant(c: ExactScalar) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(Monomial::one(), c);
        }
        Self { terms }
    }

    pub fn from_int(n: i64) -> Self {
        Self::constant(ExactScalar::from_int(n))
    }

    pub fn from_ratio(n: i64, d: i64) -> Self {
        Self::constant(ExactScalar::from_ratio(n, d))
    }

    pub fn var(s: Symbol) -> Self {
        Self::var_pow(s, 1)
    }

    pub fn var_pow(s: Symbol, e: i32) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(Monomial::var(s, e), ExactScalar::one());
        Self { terms }
    }

    pub fn monomial(m: Monomial, c: ExactScalar) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        Self { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.is_empty() || (self.terms.len() == 1 && self.terms.keys().next().unwrap().is_one())
    }

    pub fn as_constant(&self) -> Option<ExactScalar> {
        if self.terms.is_empty() {
            Some(ExactScalar::zero())
        } else if self.is_constant() {
            Some(self.terms.values().next().unwrap().clone())
        } else {
            None
        }
    }

    pub fn add_term(&mut self, m: Monomial, c: ExactScalar) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(m) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += &c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn scale(&self, c: &ExactScalar) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self { terms: self.terms.iter().map(|(m, v)| (m.clone(), v * c)).collect() }
    }

    pub fn mul_monomial(&self, m: &Monomial, c: &ExactScalar) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self { terms: self.terms.iter().map(|(k, v)| (k.mul(m), v * c)).collect() }
    }

    /// Degree in one symbol, `None` for the zero polynomial.
    pub fn degree_in(&self, s: Symbol) -> Option<i32> {
        self.terms.keys().map(|m| m.exp(s)).max()
    }

    pub fn min_degree_in(&self, s: Symbol) -> Option<i32> {
        self.terms.keys().map(|m| m.exp(s)).min()
    }

    /// Symbols with a nonzero exponent anywhere.
    pub fn support(&self) -> Vec<Symbol> {
        let mut seen = std::collections::BTreeSet::new();
        for m in self.terms.keys() {
            for (i, e) in m.0.iter().enumerate() {
                if *e != 0 {
                    seen.insert(i);
                }
            }
        }
        seen.into_iter().collect()
    }

    /// Leading term in the canonical monomial order.
    pub fn leading(&self) -> Option<(&Monomial, &ExactScalar)> {
        self.terms.iter().next_back()
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one();
        let mut base = self.clone();
        let mut e = e;
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

    /// Substitutes a polynomial for a symbol. The symbol must occur with
    /// non-negative exponents only.
    pub fn substitute(&self, s: Symbol, value: &MultiPoly) -> MultiPoly {
        let mut out = MultiPoly::zero();
        let mut pow_cache: Vec<MultiPoly> = vec![MultiPoly::one()];
        for (m, c) in &self.terms {
            let e = m.exp(s);
            assert!(e >= 0, "substitute into negative power of {}", symbol_name(s));
            while pow_cache.len() <= e as usize {
                let next = &pow_cache[pow_cache.len() - 1] * value;
                pow_cache.push(next);
            }
            let mut rest = m.clone();
            if rest.0.len() > s {
                rest.0[s] = 0;
                rest.trim();
            }
            out = &out + &pow_cache[e as usize].mul_monomial(&rest, c);
        }
        out
    }

    /// Evaluates one symbol at an exact scalar.
    pub fn eval_symbol(&self, s: Symbol, v: &ExactScalar) -> MultiPoly {
        let mut out = MultiPoly::zero();
        for (m, c) in &self.terms {
            let e = m.exp(s);
            let factor = v.pow(e as i64);
            let mut rest = m.clone();
            if rest.0.len() > s {
                rest.0[s] = 0;
                rest.trim();
            }
            out.add_term(rest, &factor * c);
        }
        out
    }

    /// Partial derivative.
    pub fn derivative(&self, s: Symbol) -> MultiPoly {
        let mut out = MultiPoly::zero();
        for (m, c) in &self.terms {
            let e = m.exp(s);
            if e == 0 {
                continue;
            }
            let mut m2 = m.clone();
            if m2.0.len() <= s {
                m2.0.resize(s + 1, 0);
            }
            m2.0[s] = e - 1;
            m2.trim();
            out.add_term(m2, c * &ExactScalar::from_int(e as i64));
        }
        out
    }

    /// Exact multivariate division; `None` if `rhs` does not divide exactly.
    pub fn try_exact_div(&self, rhs: &MultiPoly) -> Option<MultiPoly> {
        assert!(!rhs.is_zero(), "division by zero polynomial");
        if self.is_zero() {
            return Some(MultiPoly::zero());
        }
        if let Some(c) = rhs.as_constant() {
            return Some(self.scale(&c.inv()));
        }
        let (lm, lc) = rhs.leading().map(|(m, c)| (m.clone(), c.clone())).unwrap();
        let mut rem = self.clone();
        let mut quot = MultiPoly::zero();
        while !rem.is_zero() {
            let (rm, rc) = rem.leading().map(|(m, c)| (m.clone(), c.clone())).unwrap();
            let q = rm.try_div(&lm);
            // all exponents of lm must be subsumed
            if lm.0.iter().enumerate().any(|(i, e)| *e > 0 && rm.exp(i) < *e || *e < 0 && rm.exp(i) > *e)
            {
                return None;
            }
            let qc = &rc / &lc;
            quot.add_term(q.clone(), qc.clone());
            rem = &rem - &rhs.mul_monomial(&q, &qc);
            // guard against non-termination on pathological orders
            if let Some((nm, _)) = rem.leading() {
                if nm >= &rm {
                    return None;
                }
            }
        }
        Some(quot)
    }
}

impl Add for &MultiPoly {
    type Output = MultiPoly;
    fn add(self, rhs: &MultiPoly) -> MultiPoly {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }
}

impl Sub for &MultiPoly {
    type Output = MultiPoly;
    fn sub(self, rhs: &MultiPoly) -> MultiPoly {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), -c);
        }
        out
    }
}

impl Mul for &MultiPoly {
    type Output = MultiPoly;
    fn mul(self, rhs: &MultiPoly) -> MultiPoly {
        let mut out = MultiPoly::zero();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &rhs.terms {
                out.add_term(m1.mul(m2), c1 * c2);
            }
        }
        out
    }
}

impl Neg for &MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        MultiPoly { terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect() }
    }
}

fn fmt_poly(p: &MultiPoly, f: &mut fmt::Formatter<'_>) -> fmt::Result {
    if p.terms.is_empty() {
        return write!(f, "0");
    }
    let mut first = true;
    for (m, c) in p.terms.iter().rev() {
        if !first {
            write!(f, " + ")?;
        }
        first = false;
        write!(f, "({c})")?;
        for (i, e) in m.0.iter().enumerate() {
            if *e != 0 {
                write!(f, "*{}^{}", symbol_name(i), e)?;
            }
        }
    }
    Ok(())
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_poly(self, f)
    }
}

impl fmt::Debug for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_poly(self, f)
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
    fn arithmetic() {
        let p = &(&nu() + &cc()) * &(&nu() - &cc());
        let q = &(&nu() * &nu()) - &(&cc() * &cc());
        assert_eq!(p, q);
        assert_eq!(p.degree_in(NU), Some(2));
    }

    #[test]
    fn exact_division() {
        let a = &(&nu() + &MultiPoly::one()) * &(&cc() + &nu());
        let q = a.try_exact_div(&(&nu() + &MultiPoly::one())).unwrap();
        assert_eq!(q, &cc() + &nu());
        assert!(a.try_exact_div(&(&nu() + &MultiPoly::from_int(2))).is_none());
    }

    #[test]
    fn substitution_and_derivative() {
        // d/dnu (nu^3 c) = 3 nu^2 c
        let p = &nu().pow(3) * &cc();
        let d = p.derivative(NU);
        assert_eq!(d, nu().pow(2).scale(&ExactScalar::from_int(3)).mul_monomial(&Monomial::var(C, 1), &ExactScalar::one()));
        let sub = p.substitute(NU, &MultiPoly::from_int(2));
        assert_eq!(sub, cc().scale(&ExactScalar::from_int(8)));
    }
}
