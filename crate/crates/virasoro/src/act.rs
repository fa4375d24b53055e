//! Left action of Virasoro generators on the rank-2 Whittaker module,
//! normal-ordered back into the PBW basis.
//!
//! The commutation relations are [L_m, L_n] = (m-n) L_{m+n} +
//! (c/12) m (m^2-1) δ_{m+n,0}, and the cyclic vector obeys
//! L_2|J> = -nu |J>, L_3|J> = 0, L_4|J> = 1/4 |J>, L_{>=5}|J> = 0.
//!
//! Normal ordering is a confluent rewrite towards weakly increasing
//! generator words; termination is guarded by a step counter.

use crate::pbw::{PBWKey, PBWVector};
use exactcore::multipoly::MultiPoly;
use exactcore::ratfunc::RatFunc;
use exactcore::symtab::{C, NU};
use std::collections::HashMap;
use std::sync::{Arc, RwLock};

/// Shared normal-ordering context with a memo table for generator images.
#[derive(Default)]
pub struct ActCtx {
    memo: RwLock<HashMap<(i64, PBWKey), Arc<PBWVector>>>,
    memo_shifted: RwLock<HashMap<(i64, PBWKey), Arc<PBWVector>>>,
    steps: std::sync::atomic::AtomicU64,
}

impl ActCtx {
    pub fn new() -> Self {
        Self::default()
    }

    /// Rewrite steps taken so far (termination diagnostics).
    pub fn steps(&self) -> u64 {
        self.steps.load(std::sync::atomic::Ordering::Relaxed)
    }

    /// L_n applied to a PBW basis vector.
    pub fn apply_gen_key(&self, n: i64, key: &PBWKey) -> Arc<PBWVector> {
        if let Some(hit) = self.memo.read().unwrap().get(&(n, key.clone())) {
            return hit.clone();
        }
        let count = self.steps.fetch_add(1, std::sync::atomic::Ordering::Relaxed);
        assert!(count < 500_000_000, "normal ordering failed to terminate");
        let result = Arc::new(self.apply_gen_uncached(n, key));
        self.memo.write().unwrap().insert((n, key.clone()), result.clone());
        result
    }

    fn apply_gen_uncached(&self, n: i64, key: &PBWKey) -> PBWVector {
        let word = key.word();
        if word.is_empty() {
            return base_action(n);
        }
        let h = word[0];
        if n <= h {
            return PBWVector::unit(key.prepend(n));
        }
        let tail = PBWKey::from_word(&word[1..]);
        // L_n L_h = L_h L_n + (n-h) L_{n+h} + (c/12) n (n^2-1) δ_{n+h,0}
        let mut out = self.left_mul(h, &self.apply_gen_key(n, &tail));
        let swap = self.apply_gen_key(n + h, &tail);
        let mut tmp = PBWVector::zero();
        tmp.axpy(&RatFunc::from_int(n - h), &swap);
        out = out.add(&tmp);
        if n + h == 0 {
            let central = MultiPoly::var(C).scale(
                &exactcore::scalar::ExactScalar::from_ratio(n * (n * n - 1), 12),
            );
            let mut t = PBWVector::zero();
            t.axpy(&RatFunc::from_poly(central), &PBWVector::unit(tail));
            out = out.add(&t);
        }
        out
    }

    fn left_mul(&self, h: i64, v: &PBWVector) -> PBWVector {
        let mut out = PBWVector::zero();
        for (k, c) in &v.entries {
            out.axpy(c, &self.apply_gen_key(h, k));
        }
        out
    }

    /// L_n applied to an arbitrary module vector.
    pub fn act_ln(&self, n: i64, v: &PBWVector) -> PBWVector {
        let mut out = PBWVector::zero();
        for (k, c) in &v.entries {
            out.axpy(c, &self.apply_gen_key(n, k));
        }
        out
    }

    /// (L_n - Λ_n) on a basis vector, with Λ_2 = -nu, Λ_3 = 0, Λ_4 = 1/4,
    /// Λ_{>=5} = 0, memoized.
    pub fn apply_gen_shifted_key(&self, n: i64, key: &PBWKey) -> Arc<PBWVector> {
        if !matches!(n, 2 | 4) {
            return self.apply_gen_key(n, key);
        }
        if let Some(hit) = self.memo_shifted.read().unwrap().get(&(n, key.clone())) {
            return hit.clone();
        }
        let mut out = (*self.apply_gen_key(n, key)).clone();
        let unit = PBWVector::unit(key.clone());
        match n {
            2 => {
                let nu = RatFunc::from_poly(MultiPoly::var(NU));
                out = out.add(&unit.scale(&nu));
            }
            4 => {
                out = out.sub(&unit.scale(&RatFunc::from_ratio(1, 4)));
            }
            _ => unreachable!(),
        }
        let out = Arc::new(out);
        self.memo_shifted.write().unwrap().insert((n, key.clone()), out.clone());
        out
    }

    /// L_n with the eigenvalue subtracted, on an arbitrary vector.
    pub fn act_ln_shifted(&self, n: i64, v: &PBWVector) -> PBWVector {
        let mut out = PBWVector::zero();
        for (k, c) in &v.entries {
            out.axpy(c, &self.apply_gen_shifted_key(n, k));
        }
        out
    }
}

/// L_n |J>.
fn base_action(n: i64) -> PBWVector {
    match n {
        n if n <= 1 => PBWVector::unit(PBWKey::vacuum().prepend(n)),
        2 => {
            let mut v = PBWVector::zero();
            v.add_entry(PBWKey::vacuum(), RatFunc::from_poly(-&MultiPoly::var(NU)));
            v
        }
        3 => PBWVector::zero(),
        4 => {
            let mut v = PBWVector::zero();
            v.add_entry(PBWKey::vacuum(), RatFunc::from_ratio(1, 4));
            v
        }
        _ => PBWVector::zero(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn nu() -> RatFunc {
        RatFunc::from_poly(MultiPoly::var(NU))
    }

    #[test]
    fn base_rules() {
        let ctx = ActCtx::new();
        let j = PBWVector::vacuum();
        assert!(ctx.act_ln(3, &j).is_zero());
        assert_eq!(ctx.act_ln(2, &j), j.scale(&-&nu()));
        assert_eq!(ctx.act_ln(4, &j), j.scale(&RatFunc::from_ratio(1, 4)));
        assert!(ctx.act_ln(7, &j).is_zero());
    }

    #[test]
    fn single_commutator_oracle() {
        // L_5 L_{-1}|J> = [L_5, L_{-1}]|J> = 6 L_4 |J> = 3/2 |J>
        let ctx = ActCtx::new();
        let v = PBWVector::unit(PBWKey::new(vec![1], 0, 0));
        let got = ctx.act_ln(5, &v);
        assert_eq!(got, PBWVector::vacuum().scale(&RatFunc::from_ratio(3, 2)));
    }

    #[test]
    fn l2_on_l1() {
        // L_2 L_1 |J> = L_1 L_2 |J> + [L_2, L_1]|J> = -nu L_1|J> + L_3|J>
        //            = -nu L_1 |J>
        let ctx = ActCtx::new();
        let v = PBWVector::unit(PBWKey::new(vec![], 0, 1));
        let got = ctx.act_ln(2, &v);
        assert_eq!(got, v.scale(&-&nu()));
    }

    #[test]
    fn central_term_appears() {
        // L_5 L_{-5}|J> = [L_5,L_{-5}]|J> + L_{-5} L_5 |J>
        //              = 10 L_0 |J> + (c/12)(5)(24) |J> = 10 L_0|J> + 10c|J>
        let ctx = ActCtx::new();
        let v = PBWVector::unit(PBWKey::new(vec![5], 0, 0));
        let got = ctx.act_ln(5, &v);
        let mut expect = PBWVector::zero();
        expect.add_entry(PBWKey::new(vec![], 1, 0), RatFunc::from_int(10));
        expect.add_entry(
            PBWKey::vacuum(),
            RatFunc::from_poly(MultiPoly::var(C).scale(&exactcore::scalar::ExactScalar::from_int(10))),
        );
        assert_eq!(got, expect);
    }

    #[test]
    fn nontrivial_reordering() {
        // L_3 L_{-1} L_{-1} |J> = -8 nu L_{-1}|J> + 12 L_1|J>
        let ctx = ActCtx::new();
        let v = PBWVector::unit(PBWKey::new(vec![1, 1], 0, 0));
        let got = ctx.act_ln(3, &v);
        let mut expect = PBWVector::zero();
        expect.add_entry(PBWKey::new(vec![1], 0, 0), (-&nu()).scale(&exactcore::scalar::ExactScalar::from_int(8)));
        expect.add_entry(PBWKey::new(vec![], 0, 1), RatFunc::from_int(12));
        assert_eq!(got, expect);
    }
}
