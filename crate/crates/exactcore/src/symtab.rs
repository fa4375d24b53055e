//! Global ordered symbol table.
//!
//! The coefficient domains of this workspace are drawn from one fixed list of
//! indeterminates; a `Symbol` is an index into it. Fixing the table at build
//! time keeps exponent vectors comparable across crates.

pub type Symbol = usize;

/// Canonical symbol order. Polynomial monomial order follows this list.
pub const SYMBOLS: &[&str] = &[
    "nu",   // monodromy parameter
    "c",    // Virasoro central charge
    "beta", // refinement parameter
    "q0",   // degenerate-curve modulus
    "t",    // isomonodromic time
    "u",    // second curve modulus
    "lam5", // rank-5/2 eigenvalue
    "eps",  // irregular block expansion variable
    "x",    // curve coordinate
    "ysq",  // y^2 on the curve
    "S",    // A-period ratio eta_A/omega_A
    "g2",   // elliptic invariant
    "g3",   // elliptic invariant
    "e1",   // half-period value
    "e2",   // half-period value
    "e3",   // half-period value
    "zeta", // uniformizer of the degenerate cubic
    "w",    // Zhukovsky variable
    "q",    // elliptic nome
    "hbar", // genus-counting parameter
    "sinv", // inverse Painleve time
    "ch1",  // c_{1/2}
    "ch3",  // c_{3/2}
    "ch5",  // c_{5/2}
    "ch7",  // c_{7/2}
    "ch9",  // c_{9/2}
];

pub fn symbol(name: &str) -> Symbol {
    SYMBOLS
        .iter()
        .position(|s| *s == name)
        .unwrap_or_else(|| panic!("unknown symbol {name:?}"))
}

pub fn symbol_name(s: Symbol) -> &'static str {
    SYMBOLS[s]
}

pub const NU: Symbol = 0;
pub const C: Symbol = 1;
pub const BETA: Symbol = 2;
pub const Q0: Symbol = 3;

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lookup() {
        assert_eq!(symbol("nu"), NU);
        assert_eq!(symbol("c"), C);
        assert_eq!(symbol_name(Q0), "q0");
    }
}
