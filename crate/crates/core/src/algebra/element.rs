use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Neg, Sub};

use num_traits::{One, Signed, Zero};

use super::generator::{check_index, Generator, Word};
use crate::coeff::{LaurentPoly, Rational};
use crate::error::Result;

/// A basis monomial `T^d L_{i1}^{k1} ... L_{im}^{km} W_{j1}^{l1} ... W_{jn}^{ln}`
/// with strictly ascending indices inside each block and positive multiplicities.
///
/// Field order gives the canonical ordering: by `d`, then the L-block, then the
/// W-block, each compared lexicographically.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct NormalWord {
    t_exp: i64,
    l_block: Vec<(i64, u32)>,
    w_block: Vec<(i64, u32)>,
}

fn push_block(block: &mut Vec<(i64, u32)>, n: i64) -> bool {
    match block.last_mut() {
        Some((m, k)) if *m == n => {
            *k += 1;
            true
        }
        Some((m, _)) if *m > n => false,
        _ => {
            block.push((n, 1));
            true
        }
    }
}

fn valid_block(block: &[(i64, u32)]) -> bool {
    block.iter().all(|&(_, k)| k > 0) && block.windows(2).all(|w| w[0].0 < w[1].0)
}

impl NormalWord {
    pub fn unit() -> Self {
        Self::default()
    }

    /// Builds a basis monomial from its blocks. Returns `None` if the blocks
    /// are not strictly ascending with positive multiplicities.
    pub fn from_parts(
        t_exp: i64,
        l_block: Vec<(i64, u32)>,
        w_block: Vec<(i64, u32)>,
    ) -> Result<Option<Self>> {
        for &(n, _) in l_block.iter().chain(&w_block) {
            check_index(n)?;
        }
        if !valid_block(&l_block) || !valid_block(&w_block) {
            return Ok(None);
        }
        Ok(Some(Self {
            t_exp,
            l_block,
            w_block,
        }))
    }

    pub fn t_power(d: i64) -> Self {
        Self {
            t_exp: d,
            ..Self::default()
        }
    }

    pub fn generator(g: Generator) -> Self {
        match g {
            Generator::T => Self::t_power(1),
            Generator::TInv => Self::t_power(-1),
            Generator::L(n) => Self {
                l_block: vec![(n, 1)],
                ..Self::default()
            },
            Generator::W(n) => Self {
                w_block: vec![(n, 1)],
                ..Self::default()
            },
        }
    }

    /// Reads an irreducible word. `None` if the word is not in normal form.
    pub fn from_word(word: &[Generator]) -> Option<Self> {
        let mut nw = Self::default();
        let mut t_sign = 0i64;
        let mut phase = 0;
        for g in word {
            match *g {
                Generator::T | Generator::TInv => {
                    let s = if *g == Generator::T { 1 } else { -1 };
                    if phase != 0 || (t_sign != 0 && t_sign != s) {
                        return None;
                    }
                    t_sign = s;
                    nw.t_exp += s;
                }
                Generator::L(n) => {
                    if phase > 1 || !push_block(&mut nw.l_block, n) {
                        return None;
                    }
                    phase = 1;
                }
                Generator::W(n) => {
                    if !push_block(&mut nw.w_block, n) {
                        return None;
                    }
                    phase = 2;
                }
            }
        }
        Some(nw)
    }

    pub fn t_exp(&self) -> i64 {
        self.t_exp
    }

    pub fn l_block(&self) -> &[(i64, u32)] {
        &self.l_block
    }

    pub fn w_block(&self) -> &[(i64, u32)] {
        &self.w_block
    }

    pub fn is_unit(&self) -> bool {
        self.t_exp == 0 && self.l_block.is_empty() && self.w_block.is_empty()
    }

    /// No L or W factors.
    pub fn is_pure_t(&self) -> bool {
        self.l_block.is_empty() && self.w_block.is_empty()
    }

    /// Splits off the T-power: `self = T^d * rest` with `rest` T-free. The
    /// split is unique, giving the vector-space factorization
    /// `U_q ≅ F[T, T^-1] ⊗ U(W_q)`.
    pub fn split_t(&self) -> (i64, NormalWord) {
        (
            self.t_exp,
            NormalWord {
                t_exp: 0,
                l_block: self.l_block.clone(),
                w_block: self.w_block.clone(),
            },
        )
    }

    pub fn with_t_exp(&self, d: i64) -> Self {
        NormalWord {
            t_exp: d,
            ..self.clone()
        }
    }

    /// The generator sequence: `T` (or `T^-1`) repeated `|d|` times, then the
    /// L factors, then the W factors, multiplicities expanded.
    pub fn generators(&self) -> Vec<Generator> {
        let t = if self.t_exp >= 0 {
            Generator::T
        } else {
            Generator::TInv
        };
        let mut out: Vec<Generator> =
            std::iter::repeat_n(t, self.t_exp.unsigned_abs() as usize).collect();
        for &(n, k) in &self.l_block {
            out.extend(std::iter::repeat_n(Generator::L(n), k as usize));
        }
        for &(n, k) in &self.w_block {
            out.extend(std::iter::repeat_n(Generator::W(n), k as usize));
        }
        out
    }

    pub fn to_word(&self) -> Word {
        Word(self.generators())
    }

    /// Number of L and W factors counted with multiplicity.
    pub fn degree(&self) -> u64 {
        self.l_block
            .iter()
            .chain(&self.w_block)
            .map(|&(_, k)| k as u64)
            .sum()
    }
}

impl fmt::Display for NormalWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_unit() {
            return f.write_str("1");
        }
        let mut parts: Vec<String> = Vec::new();
        match self.t_exp {
            0 => {}
            1 => parts.push("T".into()),
            d => parts.push(format!("T^{d}")),
        }
        for (name, block) in [("L", &self.l_block), ("W", &self.w_block)] {
            for &(n, k) in block {
                if k == 1 {
                    parts.push(format!("{name}[{n}]"));
                } else {
                    parts.push(format!("{name}[{n}]^{k}"));
                }
            }
        }
        f.write_str(&parts.join(" "))
    }
}

/// A finite linear combination of basis monomials with Laurent-polynomial
/// coefficients. Zero coefficients are never stored.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct Element {
    terms: BTreeMap<NormalWord, LaurentPoly>,
}

impl Element {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::scalar(LaurentPoly::one())
    }

    pub fn scalar(c: LaurentPoly) -> Self {
        Self::term(c, NormalWord::unit())
    }

    pub fn term(c: LaurentPoly, w: NormalWord) -> Self {
        let mut e = Self::zero();
        e.add_term(w, c);
        e
    }

    pub fn basis(w: NormalWord) -> Self {
        Self::term(LaurentPoly::one(), w)
    }

    pub fn generator(g: Generator) -> Result<Self> {
        g.validate()?;
        Ok(Self::basis(NormalWord::generator(g)))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&NormalWord, &LaurentPoly)> {
        self.terms.iter()
    }

    pub fn coeff(&self, w: &NormalWord) -> LaurentPoly {
        self.terms.get(w).cloned().unwrap_or_default()
    }

    pub fn uses_p(&self) -> bool {
        self.terms.values().any(LaurentPoly::uses_p)
    }

    pub fn is_t_free(&self) -> bool {
        self.terms.keys().all(|w| w.t_exp == 0)
    }

    pub fn add_term(&mut self, w: NormalWord, c: LaurentPoly) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(w) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += &c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn add_scaled(&mut self, other: &Element, c: &LaurentPoly) -> Result<()> {
        for (w, k) in &other.terms {
            self.add_term(w.clone(), k.mul(c)?);
        }
        Ok(())
    }

    pub fn scale(&self, c: &LaurentPoly) -> Result<Self> {
        let mut out = Self::zero();
        out.add_scaled(self, c)?;
        Ok(out)
    }

    /// Applies `f` to every coefficient, pruning zeros.
    pub fn map_coeffs(
        &self,
        mut f: impl FnMut(&LaurentPoly) -> Result<LaurentPoly>,
    ) -> Result<Self> {
        let mut out = Self::zero();
        for (w, c) in &self.terms {
            out.add_term(w.clone(), f(c)?);
        }
        Ok(out)
    }

    /// Evaluates every coefficient at a point.
    pub fn eval(&self, q: &Rational, p: Option<&Rational>) -> Result<NumericElement> {
        let mut out = NumericElement::default();
        for (w, c) in &self.terms {
            out.add_term(w.clone(), c.eval(q, p)?);
        }
        Ok(out)
    }
}

impl Add for &Element {
    type Output = Element;
    fn add(self, rhs: &Element) -> Element {
        let mut out = self.clone();
        for (w, c) in &rhs.terms {
            out.add_term(w.clone(), c.clone());
        }
        out
    }
}

impl Add for Element {
    type Output = Element;
    fn add(self, rhs: Element) -> Element {
        &self + &rhs
    }
}

impl Sub for &Element {
    type Output = Element;
    fn sub(self, rhs: &Element) -> Element {
        let mut out = self.clone();
        for (w, c) in &rhs.terms {
            out.add_term(w.clone(), -c);
        }
        out
    }
}

impl Sub for Element {
    type Output = Element;
    fn sub(self, rhs: Element) -> Element {
        &self - &rhs
    }
}

impl Neg for &Element {
    type Output = Element;
    fn neg(self) -> Element {
        Element {
            terms: self.terms.iter().map(|(w, c)| (w.clone(), -c)).collect(),
        }
    }
}

impl Neg for Element {
    type Output = Element;
    fn neg(self) -> Element {
        -&self
    }
}

/// Writes one `coeff * word` term of a sum; `first` controls the leading sign.
pub(crate) fn fmt_scaled_term(
    f: &mut impl fmt::Write,
    first: bool,
    c: &LaurentPoly,
    body: &str,
    body_is_unit: bool,
) -> fmt::Result {
    if let Some((_, k)) = c.as_monomial() {
        let negative = k.is_negative();
        match (first, negative) {
            (true, true) => f.write_str("-")?,
            (true, false) => {}
            (false, true) => f.write_str(" - ")?,
            (false, false) => f.write_str(" + ")?,
        }
        let mag = if negative { -c } else { c.clone() };
        if body_is_unit {
            write!(f, "{mag}")
        } else if mag.is_one() {
            f.write_str(body)
        } else {
            write!(f, "{mag} * {body}")
        }
    } else {
        if !first {
            f.write_str(" + ")?;
        }
        if body_is_unit {
            write!(f, "({c})")
        } else {
            write!(f, "({c}) * {body}")
        }
    }
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (w, c)) in self.terms.iter().enumerate() {
            fmt_scaled_term(f, i == 0, c, &w.to_string(), w.is_unit())?;
        }
        Ok(())
    }
}

impl fmt::Debug for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Element({self})")
    }
}

/// An element with exact rational coefficients (evaluation or classical limit).
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct NumericElement {
    terms: BTreeMap<NormalWord, Rational>,
}

impl NumericElement {
    pub fn add_term(&mut self, w: NormalWord, c: Rational) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(w.clone()).or_insert_with(Rational::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&w);
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&NormalWord, &Rational)> {
        self.terms.iter()
    }

    pub fn coeff(&self, w: &NormalWord) -> Rational {
        self.terms.get(w).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }
}

impl fmt::Display for NumericElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (w, c)) in self.terms.iter().enumerate() {
            let negative = c.is_negative();
            match (i == 0, negative) {
                (true, true) => f.write_str("-")?,
                (true, false) => {}
                (false, true) => f.write_str(" - ")?,
                (false, false) => f.write_str(" + ")?,
            }
            let mag = c.abs();
            if w.is_unit() {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                write!(f, "{w}")?;
            } else {
                write!(f, "{mag} * {w}")?;
            }
        }
        Ok(())
    }
}
