//! Multivariate functions on copies of the projective line, stored in a
//! per-variable partial-fraction basis.
//!
//! A term is a coefficient times a product of one `BasisEl` per variable
//! slot. Multiplication is defined only when the factors carry nontrivial
//! dependence in disjoint slots, which is the invariant of the residue-based
//! recursions built on top of this type: at most one factor touches a given
//! spectator variable.

use crate::scalar::ExactScalar;
use crate::series::Coeff;
use crate::unirat::BasisEl;
use std::collections::BTreeMap;
use std::fmt;

pub const SLOT_ONE: BasisEl = BasisEl::P(0);

/// Multivariate partial-fraction element with coefficients in `S`.
#[derive(Clone, PartialEq)]
pub struct Pf<S: Coeff> {
    /// Number of variable slots; `usize::MAX` marks a context-free constant.
    pub nvars: usize,
    pub terms: BTreeMap<Vec<BasisEl>, S>,
}

impl<S: Coeff> Pf<S> {
    pub fn zero(nvars: usize) -> Self {
        Self { nvars, terms: BTreeMap::new() }
    }

    pub fn constant(nvars: usize, c: S) -> Self {
        let mut p = Self::zero(nvars);
        p.add_term(vec![SLOT_ONE; nvars], c);
        p
    }

    pub fn add_term(&mut self, key: Vec<BasisEl>, c: S) {
        if c.is_zero() {
            return;
        }
        debug_assert!(self.nvars == usize::MAX || key.len() == self.nvars);
        use std::collections::btree_map::Entry;
        match self.terms.entry(key) {
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

    /// Single-slot element c * b(z_slot).
    pub fn slot(nvars: usize, slot: usize, b: BasisEl, c: S) -> Self {
        let mut key = vec![SLOT_ONE; nvars];
        key[slot] = b;
        let mut p = Self::zero(nvars);
        p.add_term(key, c);
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Constant value if no slot carries dependence.
    pub fn as_constant(&self) -> Option<S> {
        if self.terms.is_empty() {
            return Some(S::zero());
        }
        if self.terms.len() == 1 {
            let (k, v) = self.terms.iter().next().unwrap();
            if k.iter().all(|b| *b == SLOT_ONE) {
                return Some(v.clone());
            }
        }
        None
    }

    /// Reindexes slots through `map`: new slot index = map[old slot index].
    pub fn remap(&self, new_nvars: usize, map: &[usize]) -> Self {
        let mut out = Self::zero(new_nvars);
        for (k, c) in &self.terms {
            let mut key = vec![SLOT_ONE; new_nvars];
            for (old, b) in k.iter().enumerate() {
                if *b != SLOT_ONE {
                    assert!(key[map[old]] == SLOT_ONE, "slot collision in remap");
                    key[map[old]] = *b;
                }
            }
            out.add_term(key, c.clone());
        }
        out
    }

    /// Applies z -> -z in one slot.
    pub fn negate_slot(&self, slot: usize) -> Self {
        let mut out = Self::zero(self.nvars);
        for (k, c) in &self.terms {
            let mut key = k.clone();
            let (nb, sign) = key[slot].negate_arg();
            key[slot] = nb;
            out.add_term(key, c.scale_exact(&sign));
        }
        out
    }

    pub fn map_coeffs<T: Coeff>(&self, f: impl Fn(&S) -> T) -> Pf<T> {
        let mut out = Pf::<T>::zero(self.nvars);
        for (k, c) in &self.terms {
            out.add_term(k.clone(), f(c));
        }
        out
    }
}

impl<S: Coeff> Coeff for Pf<S> {
    fn zero() -> Self {
        Pf { nvars: usize::MAX, terms: BTreeMap::new() }
    }
    fn one() -> Self {
        let mut p: Self = Coeff::zero();
        p.terms.insert(Vec::new(), S::one());
        p
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
    fn add(&self, rhs: &Self) -> Self {
        let nvars = if self.nvars == usize::MAX { rhs.nvars } else { self.nvars };
        // context-free constants carry a shorter (empty) key: pad it
        let fix = |k: &Vec<BasisEl>| -> Vec<BasisEl> {
            if nvars != usize::MAX && k.len() != nvars {
                let mut key = vec![SLOT_ONE; nvars];
                key[..k.len()].copy_from_slice(k);
                key
            } else {
                k.clone()
            }
        };
        let mut out = Self::zero(nvars);
        for (k, c) in self.terms.iter().chain(rhs.terms.iter()) {
            out.add_term(fix(k), c.clone());
        }
        out
    }
    fn sub(&self, rhs: &Self) -> Self {
        Coeff::add(self, &Coeff::neg(rhs))
    }
    fn mul(&self, rhs: &Self) -> Self {
        let nvars = if self.nvars == usize::MAX { rhs.nvars } else { self.nvars };
        let mut out = Self::zero(nvars);
        for (k1, c1) in &self.terms {
            for (k2, c2) in &rhs.terms {
                let n = k1.len().max(k2.len());
                let mut key = vec![SLOT_ONE; if nvars == usize::MAX { n } else { nvars }];
                for (i, item) in key.iter_mut().enumerate() {
                    let a = k1.get(i).copied().unwrap_or(SLOT_ONE);
                    let b = k2.get(i).copied().unwrap_or(SLOT_ONE);
                    *item = match (a == SLOT_ONE, b == SLOT_ONE) {
                        (true, _) => b,
                        (_, true) => a,
                        _ => panic!("pfrac product with colliding slot {i}"),
                    };
                }
                out.add_term(key, c1.mul(c2));
            }
        }
        out
    }
    fn neg(&self) -> Self {
        Pf { nvars: self.nvars, terms: self.terms.iter().map(|(k, c)| (k.clone(), c.neg())).collect() }
    }
    fn scale_rat(&self, n: i64, d: i64) -> Self {
        Pf {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(k, c)| (k.clone(), c.scale_rat(n, d))).collect(),
        }
    }
    fn scale_exact(&self, c: &ExactScalar) -> Self {
        Pf {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(k, v)| (k.clone(), v.scale_exact(c))).collect(),
        }
    }
    fn invert(&self) -> Option<Self> {
        let c = self.as_constant()?;
        Some(Pf::constant(self.nvars, c.invert()?))
    }
    fn try_sqrt(&self) -> Option<Self> {
        let c = self.as_constant()?;
        Some(Pf::constant(self.nvars, c.try_sqrt()?))
    }
}

impl<S: Coeff + fmt::Display> fmt::Display for Pf<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in &self.terms {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "({c})")?;
            for (i, b) in k.iter().enumerate() {
                if *b != SLOT_ONE {
                    write!(f, "*{b:?}[{i}]")?;
                }
            }
        }
        Ok(())
    }
}

impl<S: Coeff + fmt::Display> fmt::Debug for Pf<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    type P = Pf<ExactScalar>;

    fn sc(n: i64) -> ExactScalar {
        ExactScalar::from_int(n)
    }

    #[test]
    fn disjoint_product() {
        let a = P::slot(2, 0, BasisEl::P(-2), sc(3));
        let b = P::slot(2, 1, BasisEl::M1(1), sc(5));
        let p = a.mul(&b);
        assert_eq!(p.terms.len(), 1);
        let (k, c) = p.terms.iter().next().unwrap();
        assert_eq!(k, &vec![BasisEl::P(-2), BasisEl::M1(1)]);
        assert_eq!(c, &sc(15));
    }

    #[test]
    fn negate_slot_signs() {
        let a = P::slot(1, 0, BasisEl::M1(3), sc(1));
        let n = a.negate_slot(0);
        let (k, c) = n.terms.iter().next().unwrap();
        assert_eq!(k[0], BasisEl::P1(3));
        assert_eq!(c, &sc(-1));
    }

    #[test]
    #[should_panic(expected = "colliding slot")]
    fn colliding_product_panics() {
        let a = P::slot(1, 0, BasisEl::P(-1), sc(1));
        let b = P::slot(1, 0, BasisEl::P(-1), sc(1));
        let _ = a.mul(&b);
    }
}
