use crate::error::ExactError;
use crate::multipoly::MultiPoly;
use crate::ratfunc::RatFunc;

/// Solves `A x = b` exactly over the rational-function field by
/// fraction-free (Bareiss) elimination on a cleared-denominator copy.
///
/// `A` may be overdetermined (more rows than columns); every surplus row is
/// verified against the solution and an inconsistency is reported with the
/// offending row index. Rank deficiency is an error.
pub fn solve_fraction_free(a: &[Vec<RatFunc>], b: &[RatFunc]) -> Result<Vec<RatFunc>, ExactError> {
    let m = a.len();
    assert_eq!(m, b.len(), "row count mismatch");
    let n = if m == 0 { 0 } else { a[0].len() };
    if n == 0 {
        return Ok(Vec::new());
    }
    assert!(m >= n, "underdetermined system");

    // clear denominators row by row
    let mut rows: Vec<Vec<MultiPoly>> = Vec::with_capacity(m);
    for (i, row) in a.iter().enumerate() {
        let mut den = MultiPoly::one();
        for e in row.iter().chain(std::iter::once(&b[i])) {
            den = &den * &e.den;
        }
        let mut cleared: Vec<MultiPoly> = Vec::with_capacity(n + 1);
        for e in row.iter().chain(std::iter::once(&b[i])) {
            let d = den.try_exact_div(&e.den).expect("den divides product");
            cleared.push(&e.num * &d);
        }
        rows.push(cleared);
    }

    // Bareiss elimination with column pivoting by row swap
    let mut prev_pivot = MultiPoly::one();
    let mut pivot_row_of_col = vec![usize::MAX; n];
    let mut used = vec![false; m];
    for col in 0..n {
        // choose an unused row with a nonzero entry in this column,
        // preferring low-complexity pivots
        let mut best: Option<usize> = None;
        for (r, row) in rows.iter().enumerate() {
            if used[r] || row[col].is_zero() {
                continue;
            }
            let complexity = row[col].terms.len();
            if best.map(|b| rows[b][col].terms.len() > complexity) != Some(false) {
                best = Some(r);
            }
        }
        let piv = best.ok_or(ExactError::SingularSystem)?;
        used[piv] = true;
        pivot_row_of_col[col] = piv;
        let pivot = rows[piv][col].clone();
        for r in 0..m {
            if used[r] || r == piv {
                continue;
            }
            // row_r = (pivot*row_r - row_r[col]*row_piv) / prev_pivot, exact
            let factor = rows[r][col].clone();
            for k in 0..=n {
                let t = &(&pivot * &rows[r][k]) - &(&factor * &rows[piv][k]);
                rows[r][k] = t
                    .try_exact_div(&prev_pivot)
                    .expect("Bareiss division is exact");
            }
        }
        prev_pivot = pivot;
    }

    // back substitution over the fraction field
    let mut x = vec![RatFunc::zero(); n];
    for col in (0..n).rev() {
        let r = pivot_row_of_col[col];
        let mut acc = RatFunc::new(rows[r][n].clone(), MultiPoly::one());
        for k in (col + 1)..n {
            let coeff = RatFunc::from_poly(rows[r][k].clone());
            acc = &acc - &(&coeff * &x[k]);
        }
        let pivot = RatFunc::from_poly(rows[r][col].clone());
        x[col] = &acc / &pivot;
    }

    // verify every original row (covers the overdetermined remainder)
    for (i, row) in a.iter().enumerate() {
        let mut acc = RatFunc::zero();
        for (k, item) in x.iter().enumerate() {
            acc = &acc + &(&row[k] * item);
        }
        if &acc - &b[i] != RatFunc::zero() {
            return Err(ExactError::ConsistencyViolation { row: i });
        }
    }
    Ok(x)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::symtab::{C, NU};

    fn rf(p: MultiPoly) -> RatFunc {
        RatFunc::from_poly(p)
    }

    #[test]
    fn identity_system() {
        let n = 4;
        let mut a = vec![vec![RatFunc::zero(); n]; n];
        let mut b = Vec::new();
        for (i, row) in a.iter_mut().enumerate() {
            row[i] = RatFunc::one();
            b.push(rf(MultiPoly::from_int(i as i64 + 5)));
        }
        let x = solve_fraction_free(&a, &b).unwrap();
        assert_eq!(x, b);
    }

    #[test]
    fn diagonal_symbolic() {
        // [[nu,0],[0,c]] x = [nu^2, c^2]  =>  x = [nu, c]
        let nu = MultiPoly::var(NU);
        let c = MultiPoly::var(C);
        let a = vec![
            vec![rf(nu.clone()), RatFunc::zero()],
            vec![RatFunc::zero(), rf(c.clone())],
        ];
        let b = vec![rf(&nu * &nu), rf(&c * &c)];
        let x = solve_fraction_free(&a, &b).unwrap();
        assert_eq!(x, vec![rf(nu), rf(c)]);
    }

    #[test]
    fn overdetermined_consistent_and_not() {
        let one = RatFunc::one();
        let two = RatFunc::from_int(2);
        // x = 1 from two consistent rows
        let a = vec![vec![one.clone()], vec![two.clone()]];
        let b = vec![one.clone(), two.clone()];
        assert_eq!(solve_fraction_free(&a, &b).unwrap(), vec![one.clone()]);
        // inconsistent second row reported
        let b_bad = vec![one.clone(), RatFunc::from_int(3)];
        match solve_fraction_free(&a, &b_bad) {
            Err(ExactError::ConsistencyViolation { row }) => assert_eq!(row, 1),
            other => panic!("expected inconsistency, got {other:?}"),
        }
    }

    #[test]
    fn singular_reported() {
        let one = RatFunc::one();
        let a = vec![vec![one.clone(), one.clone()], vec![one.clone(), one.clone()]];
        let b = vec![one.clone(), one.clone()];
        assert!(matches!(solve_fraction_free(&a, &b), Err(ExactError::SingularSystem)));
    }

    #[test]
    fn residual_vanishes_identically() {
        // dense 3x3 with symbolic entries
        let nu = rf(MultiPoly::var(NU));
        let c = rf(MultiPoly::var(C));
        let one = RatFunc::one();
        let a = vec![
            vec![nu.clone(), one.clone(), RatFunc::zero()],
            vec![one.clone(), c.clone(), nu.clone()],
            vec![RatFunc::zero(), one.clone(), &c + &one],
        ];
        let b = vec![&nu + &one, c.clone(), one.clone()];
        let x = solve_fraction_free(&a, &b).unwrap();
        for (i, row) in a.iter().enumerate() {
            let mut acc = RatFunc::zero();
            for (k, xv) in x.iter().enumerate() {
                acc = &acc + &(&row[k] * xv);
            }
            assert!((&acc - &b[i]).is_zero(), "row {i}");
        }
    }
}
