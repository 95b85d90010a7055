//! Normal ordering into the PBW basis.
//!
//! Strategy: rewrite the leftmost reducible adjacent pair, recursively, until
//! the word reads `T^d (ascending L) (ascending W)`. The result for a given
//! word is a deterministic function of that word, so it is memoized.
//!
//! Standard profile, `n > m` where an order is required:
//!
//! ```text
//! T T^-1 -> 1,  T^-1 T -> 1
//! X_n T^±1 -> q^{±2(n+1)} T^±1 X_n                     (X = L, W)
//! L_n L_m -> q^{2(m-n)} L_m L_n + q^{m-n}[m-n] L_{m+n}
//! W_m L_n -> q^{2(n-m)} L_n W_m - q^{n-m}[m-n] W_{m+n}  (all m, n)
//! W_n W_m -> q^{2(m-n)} W_m W_n
//! ```
//!
//! Generalized profile (`p` stands for `q^c`, no `T`):
//!
//! ```text
//! L_n L_m -> q^{m-n} p^{n-m} L_m L_n - q^{m-n} [n-m]^c L_{m+n}
//! W_m L_n -> q^{n-m} p^{m-n} L_n W_m + p^{m-n} [n-m]^c W_{m+n}
//! W_n W_m -> q^{m-n} p^{n-m} W_m W_n
//! ```

use std::cell::RefCell;
use std::collections::HashMap;
use std::fmt;

use super::element::{Element, NormalWord, NumericElement};
use super::generator::{check_index, Generator, Word};
use crate::coeff::{q_int, LaurentPoly, Rational, Vars};
use crate::error::{Error, Result};

/// Which defining relations the rewrite engine uses.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum DeformationProfile {
    /// One-parameter relations: one-variable coefficients, `T^±1` allowed.
    #[default]
    Standard,
    /// Two-parameter relations with `p = q^c`; `T` is rejected.
    Generalized,
}

impl DeformationProfile {
    pub fn vars(self) -> Vars {
        match self {
            DeformationProfile::Standard => Vars::One,
            DeformationProfile::Generalized => Vars::Two,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            DeformationProfile::Standard => "standard",
            DeformationProfile::Generalized => "generalized",
        }
    }
}

impl fmt::Display for DeformationProfile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl std::str::FromStr for DeformationProfile {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "standard" => Ok(DeformationProfile::Standard),
            "generalized" => Ok(DeformationProfile::Generalized),
            other => Err(Error::Usage(format!("unknown profile `{other}`"))),
        }
    }
}

/// Replacement for one reducible adjacent pair: a linear combination of short words.
type Step = Vec<(LaurentPoly, Vec<Generator>)>;

const CACHE_LIMIT: usize = 1 << 18;

/// Normalization context for one profile, with a word cache.
///
/// Not `Sync`; build one per thread.
pub struct Algebra {
    profile: DeformationProfile,
    cache: RefCell<HashMap<Vec<Generator>, Element>>,
}

impl Algebra {
    pub fn new(profile: DeformationProfile) -> Self {
        Self {
            profile,
            cache: RefCell::new(HashMap::new()),
        }
    }

    pub fn standard() -> Self {
        Self::new(DeformationProfile::Standard)
    }

    pub fn generalized() -> Self {
        Self::new(DeformationProfile::Generalized)
    }

    pub fn profile(&self) -> DeformationProfile {
        self.profile
    }

    fn check_generator(&self, g: Generator) -> Result<()> {
        g.validate()?;
        if g.is_t() && self.profile == DeformationProfile::Generalized {
            return Err(Error::UnsupportedProfile {
                profile: self.profile.name(),
                what: format!("generator {g} (no T relations for the generalized deformation)"),
            });
        }
        Ok(())
    }

    fn check_normal_word(&self, w: &NormalWord) -> Result<()> {
        if w.t_exp() != 0 && self.profile == DeformationProfile::Generalized {
            return Err(Error::UnsupportedProfile {
                profile: self.profile.name(),
                what: format!("basis word {w} contains T"),
            });
        }
        Ok(())
    }

    /// Lifts a generator into the algebra.
    pub fn generator(&self, g: Generator) -> Result<Element> {
        self.check_generator(g)?;
        Element::generator(g)
    }

    /// Normal form of an arbitrary word.
    pub fn normalize(&self, word: &Word) -> Result<Element> {
        for g in &word.0 {
            self.check_generator(*g)?;
        }
        self.normalize_slice(&word.0)
    }

    fn normalize_slice(&self, word: &[Generator]) -> Result<Element> {
        if let Some(nw) = NormalWord::from_word(word) {
            return Ok(Element::basis(nw));
        }
        if let Some(hit) = self.cache.borrow().get(word) {
            return Ok(hit.clone());
        }
        let (i, step) = self
            .leftmost_step(word)?
            .expect("a word that is not normal has a reducible pair");
        let mut out = Element::zero();
        let mut buf = Vec::with_capacity(word.len() + 1);
        for (c, mid) in step {
            buf.clear();
            buf.extend_from_slice(&word[..i]);
            buf.extend_from_slice(&mid);
            buf.extend_from_slice(&word[i + 2..]);
            let sub = self.normalize_slice(&buf)?;
            out.add_scaled(&sub, &c)?;
        }
        let mut cache = self.cache.borrow_mut();
        if cache.len() >= CACHE_LIMIT {
            cache.clear();
        }
        cache.insert(word.to_vec(), out.clone());
        Ok(out)
    }

    fn leftmost_step(&self, word: &[Generator]) -> Result<Option<(usize, Step)>> {
        for i in 0..word.len().saturating_sub(1) {
            if let Some(step) = self.pair_step(word[i], word[i + 1])? {
                return Ok(Some((i, step)));
            }
        }
        Ok(None)
    }

    fn pair_step(&self, a: Generator, b: Generator) -> Result<Option<Step>> {
        use Generator::*;
        let step = match (a, b) {
            (T, TInv) | (TInv, T) => vec![(LaurentPoly::one(), vec![])],
            (L(n) | W(n), T | TInv) => {
                let sign = if b == T { 1 } else { -1 };
                let e = exp(&[2 * sign * (n + 1)])?;
                vec![(LaurentPoly::q_pow(e), vec![b, a])]
            }
            (L(n), L(m)) if n > m => {
                let s = sum_index(n, m)?;
                let (swap, corr) = self.ll_coefficients(n, m)?;
                vec![(swap, vec![L(m), L(n)]), (corr, vec![L(s)])]
            }
            (W(m), L(n)) => {
                let s = sum_index(n, m)?;
                let (swap, corr) = self.wl_coefficients(m, n)?;
                vec![(swap, vec![L(n), W(m)]), (corr, vec![W(s)])]
            }
            (W(n), W(m)) if n > m => {
                let swap = self.swap_coefficient(n, m)?;
                vec![(swap, vec![W(m), W(n)])]
            }
            _ => return Ok(None),
        };
        Ok(Some(step))
    }

    /// Coefficient of the reordered pair when `X_n X_m -> coeff * X_m X_n`.
    fn swap_coefficient(&self, n: i64, m: i64) -> Result<LaurentPoly> {
        let d = m - n;
        Ok(match self.profile {
            DeformationProfile::Standard => LaurentPoly::q_pow(exp(&[2 * d])?),
            DeformationProfile::Generalized => LaurentPoly::monomial(1, d, -d),
        })
    }

    /// `L_n L_m` with `n > m`: (reordered coefficient, `L_{m+n}` coefficient).
    fn ll_coefficients(&self, n: i64, m: i64) -> Result<(LaurentPoly, LaurentPoly)> {
        let swap = self.swap_coefficient(n, m)?;
        let corr = match self.profile {
            DeformationProfile::Standard => q_int(m - n, Vars::One).shift(m - n, 0)?,
            DeformationProfile::Generalized => -q_int(n - m, Vars::Two).shift(m - n, 0)?,
        };
        Ok((swap, corr))
    }

    /// `W_m L_n`: (coefficient of `L_n W_m`, coefficient of `W_{m+n}`).
    fn wl_coefficients(&self, m: i64, n: i64) -> Result<(LaurentPoly, LaurentPoly)> {
        let d = n - m;
        Ok(match self.profile {
            DeformationProfile::Standard => (
                LaurentPoly::q_pow(exp(&[2 * d])?),
                -q_int(m - n, Vars::One).shift(d, 0)?,
            ),
            DeformationProfile::Generalized => (
                LaurentPoly::monomial(1, d, -d),
                q_int(d, Vars::Two).shift(0, -d)?,
            ),
        })
    }

    /// Product of two elements, normalized.
    pub fn multiply(&self, x: &Element, y: &Element) -> Result<Element> {
        let mut out = Element::zero();
        let mut buf = Vec::new();
        for (wx, cx) in x.terms() {
            self.check_normal_word(wx)?;
            for (wy, cy) in y.terms() {
                self.check_normal_word(wy)?;
                buf.clear();
                buf.extend(wx.generators());
                buf.extend(wy.generators());
                let prod = self.normalize_slice(&buf)?;
                out.add_scaled(&prod, &cx.mul(cy)?)?;
            }
        }
        Ok(out)
    }

    /// Product of a sequence of elements, left to right.
    pub fn product<'a>(&self, factors: impl IntoIterator<Item = &'a Element>) -> Result<Element> {
        let mut acc = Element::one();
        for f in factors {
            acc = self.multiply(&acc, f)?;
        }
        Ok(acc)
    }

    /// Non-negative integer power; negative powers only for pure T-powers.
    pub fn pow(&self, x: &Element, k: i64) -> Result<Element> {
        if k < 0 {
            let inv = self.inverse(x)?;
            return self.pow(&inv, -k);
        }
        let mut acc = Element::one();
        for _ in 0..k {
            acc = self.multiply(&acc, x)?;
        }
        Ok(acc)
    }

    /// Inverse of a unit: `c * T^d` with `c` a unit coefficient.
    pub fn inverse(&self, x: &Element) -> Result<Element> {
        let mut terms = x.terms();
        if let (Some((w, c)), None) = (terms.next(), terms.next()) {
            if w.is_pure_t() {
                if let Ok(ci) = c.pow(-1) {
                    return Ok(Element::term(ci, NormalWord::t_power(-w.t_exp())));
                }
            }
        }
        Err(Error::UnsupportedInverse(format!("({x})^-1")))
    }

    /// The deformed commutator `alpha * x y - beta * y x`.
    pub fn q_bracket(
        &self,
        x: &Element,
        y: &Element,
        alpha: &LaurentPoly,
        beta: &LaurentPoly,
    ) -> Result<Element> {
        let xy = self.multiply(x, y)?.scale(alpha)?;
        let yx = self.multiply(y, x)?.scale(beta)?;
        Ok(&xy - &yx)
    }
}

fn exp(parts: &[i64]) -> Result<i64> {
    parts
        .iter()
        .try_fold(0i64, |acc, &x| acc.checked_add(x))
        .ok_or_else(|| Error::ArithmeticBound("structure-constant exponent overflow".into()))
}

fn sum_index(n: i64, m: i64) -> Result<i64> {
    let s = n + m;
    check_index(s)?;
    Ok(s)
}

/// Normal form of a word under `profile`.
pub fn normalize(word: &Word, profile: DeformationProfile) -> Result<Element> {
    Algebra::new(profile).normalize(word)
}

pub fn multiply(x: &Element, y: &Element, profile: DeformationProfile) -> Result<Element> {
    Algebra::new(profile).multiply(x, y)
}

pub fn q_bracket(
    x: &Element,
    y: &Element,
    alpha: &LaurentPoly,
    beta: &LaurentPoly,
    profile: DeformationProfile,
) -> Result<Element> {
    Algebra::new(profile).q_bracket(x, y, alpha, beta)
}

/// Coefficients evaluated at `q = 1` (and `p = 1`), which is always defined.
pub fn classical_limit(x: &Element) -> NumericElement {
    let one = Rational::from_integer(1.into());
    let p = x.uses_p().then_some(&one);
    x.eval(&one, p).expect("evaluation at 1 never fails")
}

/// Scalar, generator or word, lifted into the algebra.
pub enum Source<'a> {
    Scalar(LaurentPoly),
    Generator(Generator),
    Word(&'a Word),
}

pub fn element_from(src: Source<'_>, profile: DeformationProfile) -> Result<Element> {
    let alg = Algebra::new(profile);
    match src {
        Source::Scalar(c) => Ok(Element::scalar(c)),
        Source::Generator(g) => alg.generator(g),
        Source::Word(w) => alg.normalize(w),
    }
}

#[cfg(test)]
mod tests {
    use super::Generator::*;
    use super::*;
    use num_bigint::BigInt;

    fn nw(gens: &[Generator]) -> NormalWord {
        NormalWord::from_word(gens).unwrap()
    }

    fn q(e: i64) -> LaurentPoly {
        LaurentPoly::q_pow(e)
    }

    #[test]
    fn descending_l_pair() {
        let got = normalize(&Word::new([L(2), L(1)]), DeformationProfile::Standard).unwrap();
        let mut want = Element::term(q(-2), nw(&[L(1), L(2)]));
        want.add_term(nw(&[L(3)]), -q(-1));
        assert_eq!(got, want);
    }

    #[test]
    fn t_moves_to_front() {
        // T L_0 = q^-2 L_0 T, and the basis puts T first
        let alg = Algebra::standard();
        let lhs = alg.normalize(&Word::new([T, L(0)])).unwrap();
        assert_eq!(lhs, Element::basis(nw(&[T, L(0)])));
        let rhs = alg
            .normalize(&Word::new([L(0), T]))
            .unwrap()
            .scale(&q(-2))
            .unwrap();
        assert_eq!(lhs, rhs);
        let got = alg.normalize(&Word::new([L(1), W(-3), TInv])).unwrap();
        assert_eq!(got, Element::term(q(-4 + 4), nw(&[TInv, L(1), W(-3)])));
    }

    #[test]
    fn t_cancels() {
        let got = normalize(&Word::new([T, TInv]), DeformationProfile::Standard).unwrap();
        assert_eq!(got, Element::one());
        let got = normalize(&Word::new([TInv, L(4), T]), DeformationProfile::Standard).unwrap();
        // T^-1 L_4 = q^10 L_4 T^-1
        assert_eq!(got, Element::term(q(10), nw(&[L(4)])));
    }

    #[test]
    fn w_before_l() {
        let got = normalize(&Word::new([W(1), L(0)]), DeformationProfile::Standard).unwrap();
        let mut want = Element::term(q(-2), nw(&[L(0), W(1)]));
        want.add_term(nw(&[W(1)]), -q(-1));
        assert_eq!(got, want);
    }

    #[test]
    fn w_pair_and_equal_indices() {
        let alg = Algebra::standard();
        let w1 = alg.generator(W(1)).unwrap();
        let w0 = alg.generator(W(0)).unwrap();
        assert_eq!(
            alg.multiply(&w1, &w0).unwrap(),
            Element::term(q(-2), nw(&[W(0), W(1)]))
        );
        let l1 = alg.generator(L(1)).unwrap();
        assert_eq!(
            alg.multiply(&l1, &l1).unwrap(),
            Element::basis(nw(&[L(1), L(1)]))
        );
        let w2 = alg.generator(W(2)).unwrap();
        assert_eq!(
            alg.multiply(&w2, &w2).unwrap(),
            Element::basis(nw(&[W(2), W(2)]))
        );
    }

    #[test]
    fn t_then_inverse_l() {
        let alg = Algebra::standard();
        let t = alg.generator(T).unwrap();
        let x = alg.normalize(&Word::new([TInv, L(5)])).unwrap();
        assert_eq!(alg.multiply(&t, &x).unwrap(), Element::basis(nw(&[L(5)])));
    }

    #[test]
    fn brackets() {
        let alg = Algebra::standard();
        let l0 = alg.generator(L(0)).unwrap();
        let l1 = alg.generator(L(1)).unwrap();
        let got = alg.q_bracket(&l0, &l1, &q(-1), &q(1)).unwrap();
        assert_eq!(got, l1);
        let w0 = alg.generator(W(0)).unwrap();
        let w3 = alg.generator(W(3)).unwrap();
        assert!(alg.q_bracket(&w0, &w3, &q(-3), &q(3)).unwrap().is_zero());
        let x = &l0 + &w3;
        let one = LaurentPoly::one();
        assert!(alg.q_bracket(&x, &x, &one, &one).unwrap().is_zero());
    }

    #[test]
    fn classical_limits() {
        let alg = Algebra::standard();
        let l1 = alg.generator(L(1)).unwrap();
        let l2 = alg.generator(L(2)).unwrap();
        let lim = classical_limit(&alg.q_bracket(&l1, &l2, &q(-1), &q(1)).unwrap());
        assert_eq!(lim.len(), 1);
        assert_eq!(
            lim.coeff(&nw(&[L(3)])),
            Rational::from_integer(BigInt::from(1))
        );
        let diff = &alg.normalize(&Word::new([L(2), L(1)])).unwrap()
            - &alg.normalize(&Word::new([L(1), L(2)])).unwrap();
        let lim = classical_limit(&diff);
        assert_eq!(lim.len(), 1);
        assert_eq!(
            lim.coeff(&nw(&[L(3)])),
            Rational::from_integer(BigInt::from(-1))
        );
        let w1 = alg.generator(W(1)).unwrap();
        let w2 = alg.generator(W(2)).unwrap();
        assert!(classical_limit(&alg.q_bracket(&w1, &w2, &q(-1), &q(1)).unwrap()).is_zero());
    }

    #[test]
    fn element_sources() {
        let p = DeformationProfile::Standard;
        assert_eq!(
            element_from(Source::Generator(L(3)), p).unwrap(),
            Element::basis(nw(&[L(3)]))
        );
        assert_eq!(
            element_from(Source::Word(&Word::unit()), p).unwrap(),
            Element::one()
        );
        let two = q_int(2, Vars::One);
        assert_eq!(
            element_from(Source::Scalar(two), p).unwrap(),
            Element::scalar(q(1) + q(-1))
        );
        assert!(element_from(Source::Generator(L(1 << 21)), p).is_err());
    }

    #[test]
    fn generalized_rejects_t() {
        let err = normalize(&Word::new([T, L(0)]), DeformationProfile::Generalized).unwrap_err();
        assert!(matches!(err, Error::UnsupportedProfile { .. }));
    }

    #[test]
    fn generalized_specialises_to_standard() {
        let g = Algebra::generalized();
        let s = Algebra::standard();
        for w in [
            vec![L(2), L(-1)],
            vec![W(3), L(1)],
            vec![W(2), W(-2)],
            vec![W(0), L(3), L(-1)],
        ] {
            let word = Word::new(w);
            let lhs = g
                .normalize(&word)
                .unwrap()
                .map_coeffs(|c| c.substitute_p_inverse_q())
                .unwrap();
            assert_eq!(lhs, s.normalize(&word).unwrap(), "{word}");
        }
    }

    #[test]
    fn inverse_powers() {
        let alg = Algebra::standard();
        let t = alg.generator(T).unwrap();
        assert_eq!(
            alg.pow(&t, -2).unwrap(),
            Element::basis(NormalWord::t_power(-2))
        );
        let l = alg.generator(L(0)).unwrap();
        assert!(matches!(alg.pow(&l, -1), Err(Error::UnsupportedInverse(_))));
    }
}
