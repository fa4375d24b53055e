//! First-order differential-operator realizations of the positive Virasoro
//! half at half-integer rank, and the symbolic commutator check
//! [Ls_m, Ls_n] = (n - m) Ls_{m+n} (the antihomomorphism convention).

use exactcore::multipoly::MultiPoly;
use exactcore::scalar::ExactScalar;
use exactcore::symtab::{symbol, Symbol};
use std::collections::BTreeMap;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum RealizationError {
    #[error("commutator defect for (m, n) = ({m}, {n}) at rank {rank_num}/2: {defect}")]
    CommutatorDefect { m: i64, n: i64, rank_num: i64, defect: String },
    #[error("rank parameter s = {0} out of the supported range 1..=5")]
    BadRank(u32),
}

/// First-order differential operator a0 + sum_j a_j d/dc_j with polynomial
/// coefficients.
#[derive(Clone, PartialEq, Debug)]
pub struct DiffOp {
    pub scalar: MultiPoly,
    pub derivs: BTreeMap<Symbol, MultiPoly>,
}

impl DiffOp {
    pub fn zero() -> Self {
        Self { scalar: MultiPoly::zero(), derivs: BTreeMap::new() }
    }

    pub fn is_zero(&self) -> bool {
        self.scalar.is_zero() && self.derivs.values().all(|p| p.is_zero())
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let mut out = self.clone();
        out.scalar = &out.scalar + &rhs.scalar;
        for (s, p) in &rhs.derivs {
            let cur = out.derivs.remove(s).unwrap_or_else(MultiPoly::zero);
            let v = &cur + p;
            if !v.is_zero() {
                out.derivs.insert(*s, v);
            }
        }
        out
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.scale(&ExactScalar::from_int(-1)))
    }

    pub fn scale(&self, c: &ExactScalar) -> Self {
        Self {
            scalar: self.scalar.scale(c),
            derivs: self.derivs.iter().map(|(s, p)| (*s, p.scale(c))).collect(),
        }
    }

    /// Commutator of two first-order operators (again first order):
    /// [A, B] = sum_j (a_j ∂_j b_0 - b_j ∂_j a_0)
    ///        + sum_k ( sum_j a_j ∂_j b_k - b_j ∂_j a_k ) ∂_k.
    pub fn commutator(&self, rhs: &Self) -> Self {
        let mut scalar = MultiPoly::zero();
        for (j, aj) in &self.derivs {
            scalar = &scalar + &(aj * &rhs.scalar.derivative(*j));
        }
        for (j, bj) in &rhs.derivs {
            scalar = &scalar - &(bj * &self.scalar.derivative(*j));
        }
        let mut derivs: BTreeMap<Symbol, MultiPoly> = BTreeMap::new();
        let keys: Vec<Symbol> = self.derivs.keys().chain(rhs.derivs.keys()).copied().collect();
        for k in keys {
            let mut acc = MultiPoly::zero();
            let bk = rhs.derivs.get(&k).cloned().unwrap_or_else(MultiPoly::zero);
            let ak = self.derivs.get(&k).cloned().unwrap_or_else(MultiPoly::zero);
            for (j, aj) in &self.derivs {
                acc = &acc + &(aj * &bk.derivative(*j));
            }
            for (j, bj) in &rhs.derivs {
                acc = &acc - &(bj * &ak.derivative(*j));
            }
            if !acc.is_zero() {
                derivs.insert(k, acc);
            }
        }
        derivs.retain(|_, p| !p.is_zero());
        Self { scalar, derivs }
    }
}

/// Symbol of c_{j/2} for odd j (doubled index).
fn c_sym(doubled: i64) -> Symbol {
    symbol(match doubled {
        1 => "ch1",
        3 => "ch3",
        5 => "ch5",
        7 => "ch7",
        9 => "ch9",
        _ => panic!("coefficient index {doubled}/2 out of range"),
    })
}

/// The rank-(s - 1/2) realization of L_n for 0 <= n <= 2s - 1 acting on
/// polynomials in c_{1/2}, ..., c_{s-1/2}; higher generators map to zero.
pub fn realization_op(s: u32, n: i64) -> DiffOp {
    assert!((1..=5).contains(&s));
    let s2 = 2 * s as i64; // doubled rank cutoff: indices run over odd 1..s2-1
    if n >= s2 {
        return DiffOp::zero();
    }
    let mut op = DiffOp::zero();
    if n >= s as i64 {
        // -sum_{k=n-s+1/2}^{s-1/2} c_k c_{n-k}
        let mut kk = 2 * (n - s as i64) + 1; // doubled k from n-s+1/2
        while kk <= s2 - 1 {
            let other = 2 * n - kk;
            op.scalar = &op.scalar
                - &(&MultiPoly::var(c_sym(kk)) * &MultiPoly::var(c_sym(other)));
            kk += 2;
        }
    } else {
        // -sum_k c_k c_{n-k} over in-range pairs
        let mut kk = 1;
        while kk <= s2 - 1 {
            let other = 2 * n - kk;
            if other >= 1 && other <= s2 - 1 {
                op.scalar = &op.scalar
                    - &(&MultiPoly::var(c_sym(kk)) * &MultiPoly::var(c_sym(other)));
            }
            kk += 2;
        }
        // + sum_{k=1/2}^{s-n-1/2} k c_{n+k} d/dc_k
        let mut kk = 1;
        while kk <= s2 - 1 - 2 * n {
            let target = 2 * n + kk;
            let coeff = MultiPoly::var(c_sym(target))
                .scale(&ExactScalar::from_ratio(kk, 2));
            let cur = op.derivs.remove(&c_sym(kk)).unwrap_or_else(MultiPoly::zero);
            op.derivs.insert(c_sym(kk), &cur + &coeff);
            kk += 2;
        }
    }
    op.derivs.retain(|_, p| !p.is_zero());
    op
}

#[derive(Clone, Debug)]
pub struct RealizationReport {
    pub s: u32,
    pub pairs_checked: usize,
}

/// Verifies [Ls_m, Ls_n] = (n - m) Ls_{m+n} for all 0 <= m < n <= 2s - 1.
pub fn check_half_integer_realization(s: u32) -> Result<RealizationReport, RealizationError> {
    if !(1..=5).contains(&s) {
        return Err(RealizationError::BadRank(s));
    }
    let top = 2 * s as i64 - 1;
    let mut pairs = 0;
    for m in 0..=top {
        for n in (m + 1)..=top {
            let lm = realization_op(s, m);
            let ln = realization_op(s, n);
            let lhs = lm.commutator(&ln);
            let rhs = realization_op(s, m + n).scale(&ExactScalar::from_int(n - m));
            let defect = lhs.sub(&rhs);
            if !defect.is_zero() {
                return Err(RealizationError::CommutatorDefect {
                    m,
                    n,
                    rank_num: 2 * s as i64 - 1,
                    defect: format!("{defect:?}"),
                });
            }
            pairs += 1;
        }
    }
    Ok(RealizationReport { s, pairs_checked: pairs })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rank_52_operators_explicit() {
        // L5 = -c_{5/2}^2
        let l5 = realization_op(3, 5);
        let c52 = MultiPoly::var(c_sym(5));
        assert_eq!(l5.scalar, -&(&c52 * &c52));
        assert!(l5.derivs.is_empty());
        // L0 = (5 c_{5/2}/2) d_{5/2} + (3 c_{3/2}/2) d_{3/2} + (c_{1/2}/2) d_{1/2}
        let l0 = realization_op(3, 0);
        assert!(l0.scalar.is_zero());
        assert_eq!(
            l0.derivs.get(&c_sym(1)).unwrap(),
            &MultiPoly::var(c_sym(1)).scale(&ExactScalar::from_ratio(1, 2))
        );
        assert_eq!(
            l0.derivs.get(&c_sym(3)).unwrap(),
            &MultiPoly::var(c_sym(3)).scale(&ExactScalar::from_ratio(3, 2))
        );
        assert_eq!(
            l0.derivs.get(&c_sym(5)).unwrap(),
            &MultiPoly::var(c_sym(5)).scale(&ExactScalar::from_ratio(5, 2))
        );
        // L2 = -2 c_{1/2} c_{3/2} + (c_{5/2}/2) d_{1/2}
        let l2 = realization_op(3, 2);
        let expect_scalar = (&MultiPoly::var(c_sym(1)) * &MultiPoly::var(c_sym(3)))
            .scale(&ExactScalar::from_int(-2));
        assert_eq!(l2.scalar, expect_scalar);
        assert_eq!(
            l2.derivs.get(&c_sym(1)).unwrap(),
            &MultiPoly::var(c_sym(5)).scale(&ExactScalar::from_ratio(1, 2))
        );
    }

    #[test]
    fn rank_12_commutator() {
        // s = 1: L1 = -c_{1/2}^2, L0 = (c_{1/2}/2) d_{1/2}; [L0, L1] = L1
        let l0 = realization_op(1, 0);
        let l1 = realization_op(1, 1);
        let com = l0.commutator(&l1);
        assert_eq!(com, l1);
    }

    #[test]
    fn all_ranks_close() {
        for s in 1..=3 {
            let rep = check_half_integer_realization(s).unwrap();
            assert!(rep.pairs_checked > 0);
        }
    }

    #[test]
    fn self_commutator_vanishes() {
        let l3 = realization_op(3, 3);
        assert!(l3.commutator(&l3).is_zero());
    }
}
