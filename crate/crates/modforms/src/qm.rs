use crate::eisenstein::{eisenstein, qvar};
use exactcore::scalar::ExactScalar;
use exactcore::series::{Coeff, TruncSeries};
use std::collections::BTreeMap;
use std::fmt;

/// Element of C[E4, E6, E2]: a map from (a, b, k) to the coefficient of
/// E4^a E6^b E2^k. The coefficient ring is generic so the refined pipeline
/// can use Laurent polynomials in the deformation parameter.
///
/// Weight of a term is 4a + 6b + 2k; depth is the E2-degree k.
#[derive(Clone, PartialEq)]
pub struct QuasiModularPoly<C: Coeff = ExactScalar> {
    pub terms: BTreeMap<(u32, u32, u32), C>,
}

impl<C: Coeff> Default for QuasiModularPoly<C> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<C: Coeff> QuasiModularPoly<C> {
    pub fn zero() -> Self {
        Self { terms: BTreeMap::new() }
    }

    pub fn constant(c: C) -> Self {
        let mut p = Self::zero();
        p.add_term(0, 0, 0, c);
        p
    }

    pub fn one() -> Self {
        Self::constant(C::one())
    }

    pub fn term(a: u32, b: u32, k: u32, c: C) -> Self {
        let mut p = Self::zero();
        p.add_term(a, b, k, c);
        p
    }

    pub fn e2() -> Self {
        Self::term(0, 0, 1, C::one())
    }

    pub fn e4() -> Self {
        Self::term(1, 0, 0, C::one())
    }

    pub fn e6() -> Self {
        Self::term(0, 1, 0, C::one())
    }

    /// (E4^3 - E6^2)/1728 as a polynomial (the cusp form Delta).
    pub fn delta_poly() -> Self {
        let mut p = Self::zero();
        p.add_term(3, 0, 0, C::one().scale_rat(1, 1728));
        p.add_term(0, 2, 0, C::one().scale_rat(-1, 1728));
        p
    }

    pub fn add_term(&mut self, a: u32, b: u32, k: u32, c: C) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry((a, b, k)) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                let v = e.get().add(&c);
                if v.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = v;
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let mut out = self.clone();
        for (&(a, b, k), c) in &rhs.terms {
            out.add_term(a, b, k, c.clone());
        }
        out
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.neg())
    }

    pub fn neg(&self) -> Self {
        Self { terms: self.terms.iter().map(|(k, c)| (*k, c.neg())).collect() }
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        let mut out = Self::zero();
        for (&(a1, b1, k1), c1) in &self.terms {
            for (&(a2, b2, k2), c2) in &rhs.terms {
                out.add_term(a1 + a2, b1 + b2, k1 + k2, c1.mul(c2));
            }
        }
        out
    }

    pub fn scale(&self, c: &C) -> Self {
        let mut out = Self::zero();
        for (&(a, b, k), v) in &self.terms {
            out.add_term(a, b, k, v.mul(c));
        }
        out
    }

    pub fn scale_rat(&self, n: i64, d: i64) -> Self {
        Self { terms: self.terms.iter().map(|(k, c)| (*k, c.scale_rat(n, d))).collect() }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    /// Common weight 4a+6b+2k of all terms; `None` if inhomogeneous or zero.
    pub fn weight(&self) -> Option<u32> {
        let mut w = None;
        for &(a, b, k) in self.terms.keys() {
            let tw = 4 * a + 6 * b + 2 * k;
            match w {
                None => w = Some(tw),
                Some(prev) if prev != tw => return None,
                _ => {}
            }
        }
        w
    }

    /// Maximal E2-degree.
    pub fn depth(&self) -> u32 {
        self.terms.keys().map(|&(_, _, k)| k).max().unwrap_or(0)
    }

    /// d/dE2 of the polynomial.
    pub fn e2_derivative(&self) -> Self {
        let mut out = Self::zero();
        for (&(a, b, k), c) in &self.terms {
            if k > 0 {
                out.add_term(a, b, k - 1, c.scale_rat(k as i64, 1));
            }
        }
        out
    }

    /// Antiderivative in E2 with integration constant zero.
    pub fn e2_antiderivative(&self) -> Self {
        let mut out = Self::zero();
        for (&(a, b, k), c) in &self.terms {
            out.add_term(a, b, k + 1, c.scale_rat(1, k as i64 + 1));
        }
        out
    }

    /// The E2-free part (depth-zero terms).
    pub fn e2_free_part(&self) -> Self {
        let mut out = Self::zero();
        for (&(a, b, k), c) in &self.terms {
            if k == 0 {
                out.add_term(a, b, 0, c.clone());
            }
        }
        out
    }

    /// Applies D_tau = q d/dq through the Ramanujan rules
    /// D E2 = (E2^2 - E4)/12, D E4 = (E2 E4 - E6)/3, D E6 = (E2 E6 - E4^2)/2,
    /// extended as a derivation.
    pub fn d_tau(&self) -> Self {
        let de2 = Self::term(0, 0, 2, C::one().scale_rat(1, 12))
            .add(&Self::term(1, 0, 0, C::one().scale_rat(-1, 12)));
        let de4 = Self::term(1, 0, 1, C::one().scale_rat(1, 3))
            .add(&Self::term(0, 1, 0, C::one().scale_rat(-1, 3)));
        let de6 = Self::term(0, 1, 1, C::one().scale_rat(1, 2))
            .add(&Self::term(2, 0, 0, C::one().scale_rat(-1, 2)));
        let mut out = Self::zero();
        for (&(a, b, k), c) in &self.terms {
            if a > 0 {
                let rest = Self::term(a - 1, b, k, c.scale_rat(a as i64, 1));
                out = out.add(&rest.mul(&de4));
            }
            if b > 0 {
                let rest = Self::term(a, b - 1, k, c.scale_rat(b as i64, 1));
                out = out.add(&rest.mul(&de6));
            }
            if k > 0 {
                let rest = Self::term(a, b, k - 1, c.scale_rat(k as i64, 1));
                out = out.add(&rest.mul(&de2));
            }
        }
        out
    }

    /// q-expansion by substituting the Eisenstein series, exact to `order`.
    pub fn qexpand(&self, order: i64) -> TruncSeries<C> {
        assert!(order >= 1);
        let e2 = eisenstein(1, order);
        let e4 = eisenstein(2, order);
        let e6 = eisenstein(3, order);
        let mut out = TruncSeries::<C>::zero(qvar(), 1, order);
        let mut cache: BTreeMap<(u32, u32, u32), TruncSeries<ExactScalar>> = BTreeMap::new();
        for (&(a, b, k), c) in &self.terms {
            let s = cache
                .entry((a, b, k))
                .or_insert_with(|| e4.pow(a).mul(&e6.pow(b)).mul(&e2.pow(k)))
                .clone();
            for (key, sc) in &s.coeffs {
                let cur = out.coeffs.get(key).cloned().unwrap_or_else(C::zero);
                out.set(*key, cur.add(&c.scale_exact(sc)));
            }
        }
        out
    }

    pub fn map_coeffs<D: Coeff>(&self, f: impl Fn(&C) -> D) -> QuasiModularPoly<D> {
        let mut out = QuasiModularPoly::<D>::zero();
        for (&(a, b, k), c) in &self.terms {
            out.add_term(a, b, k, f(c));
        }
        out
    }
}

impl<C: Coeff + fmt::Display> fmt::Display for QuasiModularPoly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (&(a, b, k), c) in self.terms.iter().rev() {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "({c})")?;
            if a > 0 {
                write!(f, "*E4^{a}")?;
            }
            if b > 0 {
                write!(f, "*E6^{b}")?;
            }
            if k > 0 {
                write!(f, "*E2^{k}")?;
            }
        }
        Ok(())
    }
}

impl<C: Coeff + fmt::Display> fmt::Debug for QuasiModularPoly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    type Q = QuasiModularPoly<ExactScalar>;

    #[test]
    fn d_tau_rules() {
        // D E2 = (E2^2 - E4)/12
        let d = Q::e2().d_tau();
        let expect = Q::term(0, 0, 2, ExactScalar::from_ratio(1, 12))
            .add(&Q::term(1, 0, 0, ExactScalar::from_ratio(-1, 12)));
        assert_eq!(d, expect);
        // D 1 = 0
        assert!(Q::one().d_tau().is_zero());
    }

    #[test]
    fn d_tau_discriminant() {
        // D(E4^3 - E6^2) = E2 (E4^3 - E6^2), checked against q-expansions
        let disc = Q::e4().pow(3).sub(&Q::e6().pow(2));
        let lhs = disc.d_tau();
        let rhs = disc.mul(&Q::e2());
        assert_eq!(lhs, rhs);
        // termwise q-series differentiation oracle
        let order = 12;
        let series = disc.qexpand(order);
        let dq_oracle = series.x_d_dx();
        assert_eq!(lhs.qexpand(order).truncate(dq_oracle.order), dq_oracle);
    }

    #[test]
    fn weight_and_depth() {
        let p = Q::term(2, 1, 3, ExactScalar::one());
        assert_eq!(p.weight(), Some(4 * 2 + 6 + 2 * 3));
        assert_eq!(p.depth(), 3);
        assert_eq!(p.d_tau().weight(), Some(p.weight().unwrap() + 2));
    }

    #[test]
    fn qexpand_values() {
        // E2 E4 - E6 = 720 q + 246240 q^2 + ...
        let p = Q::e2().mul(&Q::e4()).sub(&Q::e6());
        let s = p.qexpand(3);
        assert_eq!(s.coeff(0), ExactScalar::zero());
        assert_eq!(s.coeff(1), ExactScalar::from_int(720));
        // E4^3 - E6^2 = 1728 q - 41472 q^2 + ...
        let d = Q::e4().pow(3).sub(&Q::e6().pow(2)).qexpand(3);
        assert_eq!(d.coeff(1), ExactScalar::from_int(1728));
        assert_eq!(d.coeff(2), ExactScalar::from_int(-41472));
        // qexpand(0) = 0
        assert!(Q::zero().qexpand(3).is_zero_to_order());
    }
}
