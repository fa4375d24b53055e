use exactcore::ratfunc::RatFunc;
use std::collections::BTreeMap;
use std::fmt;

/// Integer partition: non-increasing positive parts.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Default)]
pub struct Partition(pub Vec<u32>);

impl Partition {
    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    pub fn new(mut parts: Vec<u32>) -> Self {
        parts.sort_unstable_by(|a, b| b.cmp(a));
        assert!(parts.iter().all(|p| *p > 0), "parts must be positive");
        Partition(parts)
    }

    pub fn size(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

/// PBW basis label for L_{-λ1}...L_{-λl} L_0^{m0} L_1^{m1} |J>.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Default)]
pub struct PBWKey {
    pub lambda: Partition,
    pub m0: u32,
    pub m1: u32,
}

impl PBWKey {
    pub fn vacuum() -> Self {
        Self::default()
    }

    pub fn new(lambda: Vec<u32>, m0: u32, m1: u32) -> Self {
        Self { lambda: Partition::new(lambda), m0, m1 }
    }

    /// |λ| + 2 m0 + m1, the degree entering the selection rules.
    pub fn deg2(&self) -> u32 {
        self.lambda.size() + 2 * self.m0 + self.m1
    }

    /// |λ| + m0 + m1.
    pub fn deg1(&self) -> u32 {
        self.lambda.size() + self.m0 + self.m1
    }

    /// Size of the shifted-label partition used in the pairing order:
    /// each L_{-k} counts k+2, L_0 counts 2 and L_1 counts 1.
    pub fn shifted_size(&self) -> u32 {
        self.lambda.size() + 2 * self.lambda.len() as u32 + 2 * self.m0 + self.m1
    }

    /// Generator word, weakly increasing indices (canonical PBW order).
    pub fn word(&self) -> Vec<i64> {
        let mut w: Vec<i64> = self.lambda.0.iter().map(|p| -(*p as i64)).collect();
        w.extend(std::iter::repeat(0).take(self.m0 as usize));
        w.extend(std::iter::repeat(1).take(self.m1 as usize));
        w
    }

    /// Key from a weakly increasing generator word (indices <= 1).
    pub fn from_word(w: &[i64]) -> Self {
        let mut lambda = Vec::new();
        let mut m0 = 0;
        let mut m1 = 0;
        for &g in w {
            match g {
                g if g <= -1 => lambda.push((-g) as u32),
                0 => m0 += 1,
                1 => m1 += 1,
                _ => panic!("invalid PBW generator index {g}"),
            }
        }
        Self::new(lambda, m0, m1)
    }

    /// Prepends one generator, which must keep the word weakly increasing.
    pub fn prepend(&self, g: i64) -> Self {
        debug_assert!(g <= self.word().first().copied().unwrap_or(2));
        let mut k = self.clone();
        match g {
            g if g <= -1 => {
                k.lambda.0.push((-g) as u32);
                k.lambda.0.sort_unstable_by(|a, b| b.cmp(a));
            }
            0 => k.m0 += 1,
            1 => k.m1 += 1,
            _ => panic!("invalid PBW generator index {g}"),
        }
        k
    }
}

impl fmt::Display for PBWKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.lambda.is_empty() && self.m0 == 0 && self.m1 == 0 {
            return write!(f, "|J>");
        }
        for p in &self.lambda.0 {
            write!(f, "L[-{p}]")?;
        }
        if self.m0 > 0 {
            write!(f, "L[0]^{}", self.m0)?;
        }
        if self.m1 > 0 {
            write!(f, "L[1]^{}", self.m1)?;
        }
        write!(f, "|J>")
    }
}

/// Finitely supported vector in the rank-2 Whittaker module, coefficients in
/// the rational-function field of (nu, c). No zero entries are stored.
#[derive(Clone, PartialEq, Default)]
pub struct PBWVector {
    pub entries: BTreeMap<PBWKey, RatFunc>,
}

impl PBWVector {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn vacuum() -> Self {
        Self::unit(PBWKey::vacuum())
    }

    pub fn unit(key: PBWKey) -> Self {
        let mut v = Self::zero();
        v.add_entry(key, RatFunc::one());
        v
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn add_entry(&mut self, key: PBWKey, c: RatFunc) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.entries.entry(key) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                let v = e.get() + &c;
                if v.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = v;
                }
            }
        }
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let mut out = self.clone();
        for (k, c) in &rhs.entries {
            out.add_entry(k.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        let mut out = self.clone();
        for (k, c) in &rhs.entries {
            out.add_entry(k.clone(), -c);
        }
        out
    }

    pub fn scale(&self, c: &RatFunc) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self { entries: self.entries.iter().map(|(k, v)| (k.clone(), v * c)).collect() }
    }

    pub fn axpy(&mut self, c: &RatFunc, v: &Self) {
        if c.is_zero() {
            return;
        }
        for (k, val) in &v.entries {
            self.add_entry(k.clone(), val * c);
        }
    }

    /// Coefficient of the vacuum key |J> (the functional xi).
    pub fn xi(&self) -> RatFunc {
        self.entries.get(&PBWKey::vacuum()).cloned().unwrap_or_else(RatFunc::zero)
    }

    /// Drops entries with deg2 strictly below the bound. A probe word whose
    /// own deg2 exceeds an entry's deg2 annihilates it, so such entries
    /// cannot contribute to the final vacuum component.
    pub fn prune_deg2_below(&self, bound: u32) -> Self {
        if bound == 0 {
            return self.clone();
        }
        Self {
            entries: self
                .entries
                .iter()
                .filter(|(k, _)| k.deg2() >= bound)
                .map(|(k, c)| (k.clone(), c.clone()))
                .collect(),
        }
    }
}

impl fmt::Display for PBWVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.entries.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in &self.entries {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "({c}) {k}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for PBWVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn degrees() {
        let k = PBWKey::new(vec![2, 1], 1, 3);
        assert_eq!(k.deg2(), 3 + 2 + 3);
        assert_eq!(k.deg1(), 3 + 1 + 3);
        assert_eq!(k.shifted_size(), 3 + 4 + 2 + 3);
        assert_eq!(k.word(), vec![-2, -1, 0, 1, 1, 1]);
    }

    #[test]
    fn word_roundtrip() {
        let k = PBWKey::new(vec![5, 2, 2], 2, 1);
        assert_eq!(PBWKey::from_word(&k.word()), k);
    }
}
