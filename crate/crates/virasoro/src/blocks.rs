//! Irregular conformal block coefficients from the Whittaker descendants:
//! U_ln = xi([L_2, G_2]|J>)/30 and U_k = xi([L_2, G_{2k+2}]|J>)/(60 k),
//! with [L_2, G]|J> = L_2 G|J> + nu G|J>.

use crate::whittaker::{WhittakerEngine, WhittakerError};
use exactcore::multipoly::MultiPoly;
use exactcore::ratfunc::RatFunc;

#[derive(Clone, Debug)]
pub struct BlockCoeffs {
    /// Coefficient of ln(eps): U_ln(nu) as a polynomial in nu, c.
    pub u_ln: MultiPoly,
    /// U_k(nu) for k = 1..=kmax.
    pub u: Vec<MultiPoly>,
}

pub fn block_coeffs(engine: &mut WhittakerEngine, kmax: usize) -> Result<BlockCoeffs, WhittakerError> {
    let com2 = |engine: &mut WhittakerEngine, k: usize| -> Result<RatFunc, WhittakerError> {
        let g = engine.descendant(k)?.clone();
        Ok(engine.ctx.act_ln_shifted(2, &g).xi())
    };
    let u_ln_rf = com2(engine, 2)?.scale(&exactcore::scalar::ExactScalar::from_ratio(1, 30));
    let mut u = Vec::with_capacity(kmax);
    for k in 1..=kmax {
        let raw = com2(engine, 2 * k + 2)?;
        u.push(as_poly(raw.scale(&exactcore::scalar::ExactScalar::from_ratio(1, 60 * k as i64))));
    }
    Ok(BlockCoeffs { u_ln: as_poly(u_ln_rf), u })
}

fn as_poly(r: RatFunc) -> MultiPoly {
    r.as_poly().cloned().unwrap_or_else(|| panic!("block coefficient is not polynomial: {r}"))
}

/// The shortcut for the same matrix element directly from the stored G
/// coefficients: xi([L_2, G_{2k}]|J>) = (c/2) G_{(2);0,0}
/// + sum_{l=1}^{k} 2^{l-2} (G_{empty;l-1,2} - 4 nu G_{empty;l,0}).
pub fn xi_l2_commutator_shortcut(
    engine: &mut WhittakerEngine,
    k2: usize,
) -> Result<RatFunc, WhittakerError> {
    use crate::pbw::PBWKey;
    assert!(k2 % 2 == 0 && k2 >= 2);
    let g = engine.descendant(k2)?.clone();
    let coeff = |key: PBWKey| g.entries.get(&key).cloned().unwrap_or_else(RatFunc::zero);
    let c_half = RatFunc::from_poly(
        MultiPoly::var(exactcore::symtab::C).scale(&exactcore::scalar::ExactScalar::from_ratio(1, 2)),
    );
    let nu4 = RatFunc::from_poly(
        MultiPoly::var(exactcore::symtab::NU).scale(&exactcore::scalar::ExactScalar::from_int(4)),
    );
    let mut acc = &c_half * &coeff(PBWKey::new(vec![2], 0, 0));
    for l in 1..=(k2 / 2) as u32 {
        let a = coeff(PBWKey::new(vec![], l - 1, 2));
        let b = coeff(PBWKey::new(vec![], l, 0));
        let term = &a - &(&nu4 * &b);
        // 2^(l-2) can be 1/2 for l = 1
        let scaled = if l >= 2 {
            term.scale(&exactcore::scalar::ExactScalar::from_int(1 << (l - 2)))
        } else {
            term.scale(&exactcore::scalar::ExactScalar::from_ratio(1, 2))
        };
        acc = &acc + &scaled;
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::whittaker::Parallelism;
    use exactcore::scalar::ExactScalar;
    use exactcore::symtab::{C, NU};

    fn nu() -> MultiPoly {
        MultiPoly::var(NU)
    }
    fn cm1() -> MultiPoly {
        &MultiPoly::var(C) - &MultiPoly::one()
    }

    #[test]
    fn u_ln_and_u1() {
        let mut eng = WhittakerEngine::new(Parallelism::default());
        let bc = block_coeffs(&mut eng, 1).unwrap();
        // U_ln = nu^2 + 1/30 - 7(c-1)/360
        let expect_ln = &(&nu().pow(2) + &MultiPoly::from_ratio(1, 30))
            - &cm1().scale(&ExactScalar::from_ratio(7, 360));
        assert_eq!(bc.u_ln, expect_ln);
        // U_1 = nu(94 nu^2 + 17)/2 - 77 nu (c-1)/24
        let expect1 = &(&nu() * &(&nu().pow(2).scale(&ExactScalar::from_int(94)) + &MultiPoly::from_int(17)))
            .scale(&ExactScalar::from_ratio(1, 2))
            - &(&nu() * &cm1()).scale(&ExactScalar::from_ratio(77, 24));
        assert_eq!(bc.u[0], expect1);
    }

    #[test]
    fn shortcut_identity_matches_direct() {
        let mut eng = WhittakerEngine::new(Parallelism::default());
        for k2 in [2usize, 4, 6] {
            let g = eng.descendant(k2).unwrap().clone();
            let direct = eng.ctx.act_ln_shifted(2, &g).xi();
            let short = xi_l2_commutator_shortcut(&mut eng, k2).unwrap();
            assert!((&direct - &short).is_zero(), "k = {k2}");
        }
    }
}
