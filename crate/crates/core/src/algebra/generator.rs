use std::fmt;

use crate::error::{Error, Result};

/// Largest admissible |n| for `L_n`, `W_n`. Keeps q-exponents such as
/// `-2(n+1)m` far inside `i64`.
pub const INDEX_CAP: i64 = 1 << 20;

/// One generator of the algebra.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Generator {
    T,
    TInv,
    L(i64),
    W(i64),
}

impl Generator {
    /// `L_n`, rejecting indices beyond the cap.
    pub fn l(n: i64) -> Result<Self> {
        check_index(n).map(|_| Generator::L(n))
    }

    pub fn w(n: i64) -> Result<Self> {
        check_index(n).map(|_| Generator::W(n))
    }

    pub fn is_t(self) -> bool {
        matches!(self, Generator::T | Generator::TInv)
    }

    pub fn index(self) -> Option<i64> {
        match self {
            Generator::L(n) | Generator::W(n) => Some(n),
            _ => None,
        }
    }

    pub fn validate(self) -> Result<()> {
        match self.index() {
            Some(n) => check_index(n),
            None => Ok(()),
        }
    }
}

pub fn check_index(n: i64) -> Result<()> {
    if n.abs() > INDEX_CAP {
        Err(Error::IndexCap {
            index: n,
            cap: INDEX_CAP,
        })
    } else {
        Ok(())
    }
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Generator::T => f.write_str("T"),
            Generator::TInv => f.write_str("T^-1"),
            Generator::L(n) => write!(f, "L[{n}]"),
            Generator::W(n) => write!(f, "W[{n}]"),
        }
    }
}

/// A word in the free monoid on the generators; the empty word is the unit.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct Word(pub Vec<Generator>);

impl Word {
    pub fn new(gens: impl Into<Vec<Generator>>) -> Self {
        Word(gens.into())
    }

    pub fn unit() -> Self {
        Word(Vec::new())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_t_free(&self) -> bool {
        !self.0.iter().any(|g| g.is_t())
    }

    pub fn validate(&self) -> Result<()> {
        self.0.iter().try_for_each(|g| g.validate())
    }

    /// True iff the word already reads as a basis monomial: T-powers of one
    /// sign first, then weakly ascending `L` indices, then weakly ascending
    /// `W` indices.
    pub fn is_normal(&self) -> bool {
        // 0 = T block, 1 = L block, 2 = W block
        let mut phase = 0;
        let mut t_sign = None;
        let mut last: Option<i64> = None;
        for g in &self.0 {
            match *g {
                Generator::T | Generator::TInv => {
                    if phase != 0 {
                        return false;
                    }
                    let s = *g == Generator::T;
                    if t_sign.is_some_and(|prev| prev != s) {
                        return false;
                    }
                    t_sign = Some(s);
                }
                Generator::L(n) => {
                    if phase > 1 || (phase == 1 && last.is_some_and(|m| m > n)) {
                        return false;
                    }
                    phase = 1;
                    last = Some(n);
                }
                Generator::W(n) => {
                    if phase < 2 {
                        phase = 2;
                        last = None;
                    }
                    if last.is_some_and(|m| m > n) {
                        return false;
                    }
                    last = Some(n);
                }
            }
        }
        true
    }
}

impl FromIterator<Generator> for Word {
    fn from_iter<I: IntoIterator<Item = Generator>>(iter: I) -> Self {
        Word(iter.into_iter().collect())
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("1");
        }
        for (i, g) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{g}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::Generator::*;
    use super::*;

    #[test]
    fn normal_words() {
        assert!(Word::new([T, T, L(1), L(1), L(3), W(0)]).is_normal());
        assert!(!Word::new([L(2), L(1)]).is_normal());
        assert!(!Word::new([W(0), L(1)]).is_normal());
        assert!(!Word::new([T, TInv]).is_normal());
        assert!(!Word::new([L(0), T]).is_normal());
        assert!(!Word::new([W(3), W(1)]).is_normal());
        assert!(Word::new([TInv, TInv, W(-4), W(3)]).is_normal());
        assert!(Word::new([L(5), W(-5)]).is_normal());
        assert!(Word::unit().is_normal());
    }

    #[test]
    fn index_cap() {
        assert!(Generator::l(INDEX_CAP).is_ok());
        assert!(matches!(
            Generator::w(-INDEX_CAP - 1),
            Err(Error::IndexCap { .. })
        ));
    }
}
