use crate::qm::QuasiModularPoly;
use exactcore::scalar::ExactScalar;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum BasisError {
    #[error("no modular-form basis for weight {0}")]
    BadWeight(i64),
}

/// Basis V_j = E4^(a0-3j) E6^b0 Delta^j of the weight-k modular forms,
/// chosen so that V_j = q^j (1 + O(q)).
pub struct ModularBasis {
    pub weight: u32,
    pub elements: Vec<QuasiModularPoly<ExactScalar>>,
    pub dim: usize,
}

/// dim M_k and the basis exponents below: b0 = 1 for k = 2 mod 4 else 0,
/// a0 = (k - 6 b0)/4, dim = 1 + floor(a0/3).
pub fn vj_basis(weight: i64) -> Result<ModularBasis, BasisError> {
    if weight < 4 || weight % 2 != 0 {
        return Err(BasisError::BadWeight(weight));
    }
    let weight = weight as u32;
    let b0 = if weight % 4 == 2 { 1u32 } else { 0u32 };
    let a0 = (weight - 6 * b0) / 4;
    let dim = 1 + (a0 / 3) as usize;
    let delta = QuasiModularPoly::<ExactScalar>::delta_poly();
    let mut elements = Vec::with_capacity(dim);
    for j in 0..dim as u32 {
        let v = QuasiModularPoly::term(a0 - 3 * j, b0, 0, ExactScalar::one())
            .mul(&delta.pow(j));
        elements.push(v);
    }
    Ok(ModularBasis { weight, elements, dim })
}

/// The dimension d_g of the weight-14(g-1) space, in closed form.
pub fn dim_m14(g: u32) -> usize {
    let g = g as i64;
    if g % 2 == 0 {
        ((7 * g - 4) / 6) as usize
    } else {
        ((7 * g - 1) / 6) as usize
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn weight_14_is_one_dimensional() {
        let b = vj_basis(14).unwrap();
        assert_eq!(b.dim, 1);
        // V0 = E4^2 E6
        assert_eq!(b.elements[0], QuasiModularPoly::term(2, 1, 0, ExactScalar::one()));
    }

    #[test]
    fn weight_28_matches_display() {
        let b = vj_basis(28).unwrap();
        assert_eq!(b.dim, 3);
        let e4 = QuasiModularPoly::<ExactScalar>::e4();
        let delta = QuasiModularPoly::<ExactScalar>::delta_poly();
        assert_eq!(b.elements[0], e4.pow(7));
        assert_eq!(b.elements[1], e4.pow(4).mul(&delta));
        assert_eq!(b.elements[2], e4.pow(1).mul(&delta.pow(2)));
        // q-expansion oracle: V_j = q^j (1 + O(q))
        for (j, v) in b.elements.iter().enumerate() {
            let s = v.qexpand(b.dim as i64 + 1);
            for k in 0..j {
                assert!(s.coeff(k as i64).is_zero(), "V_{j} at q^{k}");
            }
            assert_eq!(s.coeff(j as i64), ExactScalar::one());
        }
    }

    #[test]
    fn dims_match_closed_form() {
        for g in 2..=10u32 {
            let w = 14 * (g as i64 - 1);
            let b = vj_basis(w).unwrap();
            assert_eq!(b.dim, dim_m14(g), "g = {g}");
        }
    }

    #[test]
    fn unitriangular_expansion_matrix() {
        for w in [14i64, 28, 42, 56, 70, 84] {
            let b = vj_basis(w).unwrap();
            for (j, v) in b.elements.iter().enumerate() {
                let s = v.qexpand(b.dim as i64);
                for k in 0..b.dim.min(j) {
                    assert!(s.coeff(k as i64).is_zero());
                }
                if j < b.dim {
                    assert_eq!(s.coeff(j as i64), ExactScalar::one());
                }
            }
        }
    }

    #[test]
    fn odd_weight_rejected() {
        assert!(vj_basis(13).is_err());
        assert!(vj_basis(-4).is_err());
    }
}
