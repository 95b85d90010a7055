//! Hopf structure of `U_q`: coproduct, counit and antipode, computed exactly
//! in the tensor square, plus checks of every Hopf axiom.
//!
//! On generators:
//!
//! ```text
//! Δ(T^±1) = T^±1 ⊗ T^±1        ε(T^±1) = 1     S(T^±1) = T^∓1
//! Δ(X_n)  = X_n ⊗ T^n + T^n ⊗ X_n   ε(X_n) = 0   S(X_n) = -T^-n X_n T^-n
//! ```
//!
//! `Δ` and `ε` extend multiplicatively, `S` anti-multiplicatively, all
//! linearly. Only the standard profile carries a Hopf structure.

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::One;

use crate::algebra::{Algebra, DeformationProfile, Element, Generator, NormalWord, Word};
use crate::coeff::{q_int, LaurentPoly, Vars};
use crate::error::{Error, Result};

/// Element of `U_q ⊗ U_q`: a combination of pairs of basis monomials.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct TensorElement {
    terms: BTreeMap<(NormalWord, NormalWord), LaurentPoly>,
}

impl TensorElement {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::pure(LaurentPoly::one(), NormalWord::unit(), NormalWord::unit())
    }

    pub fn pure(c: LaurentPoly, a: NormalWord, b: NormalWord) -> Self {
        let mut t = Self::zero();
        t.add_term(a, b, c);
        t
    }

    /// `x ⊗ y` for two elements.
    pub fn tensor(x: &Element, y: &Element) -> Result<Self> {
        let mut t = Self::zero();
        for (a, ca) in x.terms() {
            for (b, cb) in y.terms() {
                t.add_term(a.clone(), b.clone(), ca.mul(cb)?);
            }
        }
        Ok(t)
    }

    pub fn add_term(&mut self, a: NormalWord, b: NormalWord, c: LaurentPoly) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry((a, b)) {
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

    pub fn terms(&self) -> impl Iterator<Item = (&NormalWord, &NormalWord, &LaurentPoly)> {
        self.terms.iter().map(|((a, b), c)| (a, b, c))
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

    /// Swap the two tensor factors.
    pub fn flip(&self) -> Self {
        let mut t = Self::zero();
        for ((a, b), c) in &self.terms {
            t.add_term(b.clone(), a.clone(), c.clone());
        }
        t
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut t = self.clone();
        for ((a, b), c) in &other.terms {
            t.add_term(a.clone(), b.clone(), -c);
        }
        t
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut t = self.clone();
        for ((a, b), c) in &other.terms {
            t.add_term(a.clone(), b.clone(), c.clone());
        }
        t
    }

    pub fn scale(&self, k: &LaurentPoly) -> Result<Self> {
        let mut t = Self::zero();
        for ((a, b), c) in &self.terms {
            t.add_term(a.clone(), b.clone(), c.mul(k)?);
        }
        Ok(t)
    }
}

impl fmt::Display for TensorElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, ((a, b), c)) in self.terms.iter().enumerate() {
            let body = format!("({a}) (x) ({b})");
            crate::algebra::fmt_scaled_term(f, i == 0, c, &body, false)?;
        }
        Ok(())
    }
}

impl fmt::Debug for TensorElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "TensorElement({self})")
    }
}

/// Element of `U_q ⊗ U_q ⊗ U_q`, stored as flat triples.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct TripleTensor {
    terms: BTreeMap<(NormalWord, NormalWord, NormalWord), LaurentPoly>,
}

impl TripleTensor {
    fn add_term(&mut self, key: (NormalWord, NormalWord, NormalWord), c: LaurentPoly) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(key) {
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

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }
}

impl fmt::Display for TripleTensor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, ((a, b, c), k)) in self.terms.iter().enumerate() {
            let body = format!("({a}) (x) ({b}) (x) ({c})");
            crate::algebra::fmt_scaled_term(f, i == 0, k, &body, false)?;
        }
        Ok(())
    }
}

/// Which structure map a closed form or relation check refers to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum HopfMap {
    Delta,
    Counit,
    Antipode,
}

/// Result of a closed-form evaluation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ClosedForm {
    Tensor(TensorElement),
    Element(Element),
}

/// A defining relation of `U_q`, as two formal sides over raw words.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Relation {
    /// `T T^-1 = 1 = T^-1 T`
    TInverse,
    /// `T^m L_n = q^{-2(n+1)m} L_n T^m`
    TL,
    /// `T^m W_n = q^{-2(n+1)m} W_n T^m`
    TW,
    /// `q^{n-m} L_n L_m - q^{m-n} L_m L_n = [m-n] L_{m+n}`
    LL,
    /// `q^{n-m} L_n W_m - q^{m-n} W_m L_n = [m-n] W_{m+n}`
    LW,
    /// `q^{n-m} W_n W_m - q^{m-n} W_m W_n = 0`
    WW,
}

impl Relation {
    pub const ALL: [Relation; 6] = [
        Relation::TInverse,
        Relation::TL,
        Relation::TW,
        Relation::LL,
        Relation::LW,
        Relation::WW,
    ];
}

/// A formal linear combination of unnormalized words.
pub type FormalSum = Vec<(LaurentPoly, Word)>;

fn t_power_word(m: i64) -> Vec<Generator> {
    let g = if m >= 0 {
        Generator::T
    } else {
        Generator::TInv
    };
    vec![g; m.unsigned_abs() as usize]
}

/// Left and right side of a relation at indices `(m, n)`. For the `T T^-1` relation the
/// indices are ignored and the pair `T T^-1 = T^-1 T` is returned.
pub fn relation_sides(rel: Relation, m: i64, n: i64) -> Result<(FormalSum, FormalSum)> {
    use Generator::*;
    let q = LaurentPoly::q_pow;
    let one = LaurentPoly::one;
    Ok(match rel {
        Relation::TInverse => (
            vec![(one(), Word::new([T, TInv]))],
            vec![(one(), Word::new([TInv, T]))],
        ),
        Relation::TL | Relation::TW => {
            let x = if rel == Relation::TL {
                Generator::l(n)?
            } else {
                Generator::w(n)?
            };
            let mut lhs = t_power_word(m);
            lhs.push(x);
            let mut rhs = vec![x];
            rhs.extend(t_power_word(m));
            let e = (n + 1)
                .checked_mul(m)
                .and_then(|v| v.checked_mul(-2))
                .ok_or_else(|| Error::ArithmeticBound("relation exponent overflow".into()))?;
            (vec![(one(), Word(lhs))], vec![(q(e), Word(rhs))])
        }
        Relation::LL | Relation::LW | Relation::WW => {
            let (a, b) = match rel {
                Relation::LL => (Generator::l(n)?, Generator::l(m)?),
                Relation::LW => (Generator::l(n)?, Generator::w(m)?),
                _ => (Generator::w(n)?, Generator::w(m)?),
            };
            let lhs = vec![
                (q(n - m), Word::new([a, b])),
                (-q(m - n), Word::new([b, a])),
            ];
            let rhs = match rel {
                Relation::LL => vec![(q_int(m - n, Vars::One), Word::new([Generator::l(m + n)?]))],
                Relation::LW => vec![(q_int(m - n, Vars::One), Word::new([Generator::w(m + n)?]))],
                _ => vec![],
            };
            (lhs, rhs)
        }
    })
}

/// Hopf-structure context over the standard profile.
pub struct Hopf {
    alg: Algebra,
}

impl Default for Hopf {
    fn default() -> Self {
        Self::new()
    }
}

impl Hopf {
    pub fn new() -> Self {
        Self {
            alg: Algebra::new(DeformationProfile::Standard),
        }
    }

    pub fn algebra(&self) -> &Algebra {
        &self.alg
    }

    fn basis_product(&self, a: &NormalWord, b: &NormalWord) -> Result<Element> {
        self.alg
            .multiply(&Element::basis(a.clone()), &Element::basis(b.clone()))
    }

    /// Componentwise product `(a ⊗ b)(c ⊗ d) = ac ⊗ bd`.
    pub fn tensor_multiply(&self, u: &TensorElement, v: &TensorElement) -> Result<TensorElement> {
        let mut out = TensorElement::zero();
        for (a, b, cu) in u.terms() {
            for (c, d, cv) in v.terms() {
                let left = self.basis_product(a, c)?;
                let right = self.basis_product(b, d)?;
                let k = cu.mul(cv)?;
                for (x, cx) in left.terms() {
                    let kx = k.mul(cx)?;
                    for (y, cy) in right.terms() {
                        out.add_term(x.clone(), y.clone(), kx.mul(cy)?);
                    }
                }
            }
        }
        Ok(out)
    }

    /// `Δ` on a single generator.
    pub fn coproduct_generator(&self, g: Generator) -> Result<TensorElement> {
        g.validate()?;
        Ok(match g {
            Generator::T | Generator::TInv => {
                let w = NormalWord::generator(g);
                TensorElement::pure(LaurentPoly::one(), w.clone(), w)
            }
            Generator::L(n) | Generator::W(n) => {
                let x = NormalWord::generator(g);
                let t = NormalWord::t_power(n);
                let mut out = TensorElement::pure(LaurentPoly::one(), x.clone(), t.clone());
                out.add_term(t, x, LaurentPoly::one());
                out
            }
        })
    }

    /// `Δ` of a generator sequence, multiplied out left to right.
    pub fn coproduct_word(&self, gens: &[Generator]) -> Result<TensorElement> {
        let mut acc = TensorElement::one();
        for g in gens {
            acc = self.tensor_multiply(&acc, &self.coproduct_generator(*g)?)?;
        }
        Ok(acc)
    }

    pub fn coproduct(&self, x: &Element) -> Result<TensorElement> {
        let mut out = TensorElement::zero();
        for (w, c) in x.terms() {
            let img = self.coproduct_word(&w.generators())?;
            out = out.add(&img.scale(c)?);
        }
        Ok(out)
    }

    /// `ε`: a basis monomial maps to 1 if it is a pure T-power, else 0.
    pub fn counit(&self, x: &Element) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (w, c) in x.terms() {
            if w.is_pure_t() {
                out += c;
            }
        }
        out
    }

    /// `ε` of a generator sequence.
    pub fn counit_word(&self, gens: &[Generator]) -> LaurentPoly {
        if gens.iter().all(|g| g.is_t()) {
            LaurentPoly::one()
        } else {
            LaurentPoly::zero()
        }
    }

    /// `S` on a single generator.
    pub fn antipode_generator(&self, g: Generator) -> Result<Element> {
        g.validate()?;
        match g {
            Generator::T => Ok(Element::basis(NormalWord::t_power(-1))),
            Generator::TInv => Ok(Element::basis(NormalWord::t_power(1))),
            Generator::L(n) | Generator::W(n) => {
                let mut w = t_power_word(-n);
                w.push(g);
                w.extend(t_power_word(-n));
                Ok(-self.alg.normalize(&Word(w))?)
            }
        }
    }

    /// `S` of a generator sequence: images multiplied in reverse order.
    pub fn antipode_word(&self, gens: &[Generator]) -> Result<Element> {
        let mut acc = Element::one();
        for g in gens.iter().rev() {
            acc = self.alg.multiply(&acc, &self.antipode_generator(*g)?)?;
        }
        Ok(acc)
    }

    pub fn antipode(&self, x: &Element) -> Result<Element> {
        let mut out = Element::zero();
        for (w, c) in x.terms() {
            out.add_scaled(&self.antipode_word(&w.generators())?, c)?;
        }
        Ok(out)
    }

    /// The inverse antipode from its own generator formulas
    /// `S^-1(T) = T^-1`, `S^-1(X_m) = -T^-m X_m T^-m`, extended
    /// anti-multiplicatively.
    pub fn antipode_inverse(&self, x: &Element) -> Result<Element> {
        let mut out = Element::zero();
        for (w, c) in x.terms() {
            let mut acc = Element::one();
            for g in w.generators().iter().rev() {
                let img = match *g {
                    Generator::T => Element::basis(NormalWord::t_power(-1)),
                    Generator::TInv => Element::basis(NormalWord::t_power(1)),
                    Generator::L(m) | Generator::W(m) => {
                        let t = Element::basis(NormalWord::t_power(-m));
                        let x = Element::basis(NormalWord::generator(*g));
                        -self.alg.product([&t, &x, &t])?
                    }
                };
                acc = self.alg.multiply(&acc, &img)?;
            }
            out.add_scaled(&acc, c)?;
        }
        Ok(out)
    }

    /// Multiplication map `U_q ⊗ U_q -> U_q`.
    pub fn mult(&self, t: &TensorElement) -> Result<Element> {
        let mut out = Element::zero();
        for (a, b, c) in t.terms() {
            out.add_scaled(&self.basis_product(a, b)?, c)?;
        }
        Ok(out)
    }

    /// `(f ⊗ 1)` or `(1 ⊗ f)` for a linear map `f` on basis monomials.
    fn map_slot(
        &self,
        t: &TensorElement,
        left: bool,
        mut f: impl FnMut(&NormalWord) -> Result<Element>,
    ) -> Result<TensorElement> {
        let mut out = TensorElement::zero();
        for (a, b, c) in t.terms() {
            let img = f(if left { a } else { b })?;
            for (w, k) in img.terms() {
                let k = c.mul(k)?;
                if left {
                    out.add_term(w.clone(), b.clone(), k);
                } else {
                    out.add_term(a.clone(), w.clone(), k);
                }
            }
        }
        Ok(out)
    }

    /// `(Δ ⊗ 1) Δ (x)`.
    pub fn coassoc_left(&self, x: &Element) -> Result<TripleTensor> {
        let mut out = TripleTensor::default();
        for (a, b, c) in self.coproduct(x)?.terms() {
            for (a1, a2, k) in self.coproduct_word(&a.generators())?.terms() {
                out.add_term((a1.clone(), a2.clone(), b.clone()), c.mul(k)?);
            }
        }
        Ok(out)
    }

    /// `(1 ⊗ Δ) Δ (x)`.
    pub fn coassoc_right(&self, x: &Element) -> Result<TripleTensor> {
        let mut out = TripleTensor::default();
        for (a, b, c) in self.coproduct(x)?.terms() {
            for (b1, b2, k) in self.coproduct_word(&b.generators())?.terms() {
                out.add_term((a.clone(), b1.clone(), b2.clone()), c.mul(k)?);
            }
        }
        Ok(out)
    }

    /// Closed forms for powers of a single generator:
    /// `Δ(X_n^r) = Σ_i C(r,i) X_n^{r-i} T^{in} ⊗ T^{(r-i)n} X_n^i` and
    /// `S(X_n^r) = (-1)^r T^{-rn} X_n^r T^{-rn}`.
    pub fn power_closed_form(
        &self,
        map: HopfMap,
        gen: Generator,
        n: i64,
        r: u32,
    ) -> Result<ClosedForm> {
        let x = match gen {
            Generator::L(_) => Generator::l(n)?,
            Generator::W(_) => Generator::w(n)?,
            _ => return Err(Error::Usage("closed forms exist for L and W only".into())),
        };
        let r = r as i64;
        let scaled = |k: i64| -> Result<i64> {
            k.checked_mul(n)
                .ok_or_else(|| Error::ArithmeticBound("T exponent overflow".into()))
        };
        match map {
            HopfMap::Delta => {
                let mut out = TensorElement::zero();
                let mut binom = BigInt::one();
                for i in 0..=r {
                    let mut left = vec![x; (r - i) as usize];
                    left.extend(t_power_word(scaled(i)?));
                    let mut right = t_power_word(scaled(r - i)?);
                    right.extend(vec![x; i as usize]);
                    let a = self.alg.normalize(&Word(left))?;
                    let b = self.alg.normalize(&Word(right))?;
                    let k = LaurentPoly::constant(binom.clone());
                    out = out.add(&TensorElement::tensor(&a, &b)?.scale(&k)?);
                    binom = binom * BigInt::from(r - i) / BigInt::from(i + 1);
                }
                Ok(ClosedForm::Tensor(out))
            }
            HopfMap::Antipode => {
                let mut w = t_power_word(-scaled(r)?);
                w.extend(vec![x; r as usize]);
                w.extend(t_power_word(-scaled(r)?));
                let sign = if r % 2 == 0 { 1 } else { -1 };
                let e = self.alg.normalize(&Word(w))?;
                Ok(ClosedForm::Element(e.scale(&LaurentPoly::constant(sign))?))
            }
            HopfMap::Counit => Err(Error::Usage(
                "no closed form is needed for the counit".into(),
            )),
        }
    }

    /// Applies `map` to a formal sum of raw words, generator by generator.
    pub fn apply_to_formal(&self, map: HopfMap, sum: &FormalSum) -> Result<MapImage> {
        Ok(match map {
            HopfMap::Delta => {
                let mut out = TensorElement::zero();
                for (c, w) in sum {
                    out = out.add(&self.coproduct_word(&w.0)?.scale(c)?);
                }
                MapImage::Tensor(out)
            }
            HopfMap::Counit => {
                let mut out = LaurentPoly::zero();
                for (c, w) in sum {
                    out += &c.mul(&self.counit_word(&w.0))?;
                }
                MapImage::Scalar(out)
            }
            HopfMap::Antipode => {
                let mut out = Element::zero();
                for (c, w) in sum {
                    out.add_scaled(&self.antipode_word(&w.0)?, c)?;
                }
                MapImage::Element(out)
            }
        })
    }

    /// Checks one identity exactly. See [`Axiom`] for the catalogue.
    pub fn check_axiom(&self, axiom: Axiom, subject: &Subject) -> Result<AxiomOutcome> {
        let mismatch =
            |s: &'static str| Error::Usage(format!("axiom `{}` expects {s}", axiom.id()));
        match axiom {
            Axiom::Coassoc => {
                let x = subject.element().ok_or_else(|| mismatch("an element"))?;
                let l = self.coassoc_left(x)?;
                let r = self.coassoc_right(x)?;
                Ok(outcome_eq(&l, &r))
            }
            Axiom::CounitLeft | Axiom::CounitRight => {
                let x = subject.element().ok_or_else(|| mismatch("an element"))?;
                let d = self.coproduct(x)?;
                // left diagram: (1 ⊗ ε)Δ(x) = x ⊗ 1 ; right: (ε ⊗ 1)Δ(x) = 1 ⊗ x
                let left_slot = axiom == Axiom::CounitRight;
                let got = self.map_slot(&d, left_slot, |w| {
                    Ok(Element::scalar(self.counit(&Element::basis(w.clone()))))
                })?;
                let unit = Element::one();
                let want = if left_slot {
                    TensorElement::tensor(&unit, x)?
                } else {
                    TensorElement::tensor(x, &unit)?
                };
                Ok(outcome_eq(&got, &want))
            }
            Axiom::AntipodeLeft | Axiom::AntipodeRight => {
                let x = subject.element().ok_or_else(|| mismatch("an element"))?;
                let d = self.coproduct(x)?;
                let s_left = axiom == Axiom::AntipodeRight;
                let mapped = self.map_slot(&d, s_left, |w| self.antipode_word(&w.generators()))?;
                let got = self.mult(&mapped)?;
                let want = Element::scalar(self.counit(x));
                Ok(outcome_eq(&got, &want))
            }
            Axiom::SSquared => {
                let x = subject.element().ok_or_else(|| mismatch("an element"))?;
                let got = self.antipode(&self.antipode(x)?)?;
                Ok(outcome_eq(&got, x))
            }
            Axiom::DeltaHom => match subject {
                Subject::Pair(x, y) => {
                    let got = self.coproduct(&self.alg.multiply(x, y)?)?;
                    let want = self.tensor_multiply(&self.coproduct(x)?, &self.coproduct(y)?)?;
                    Ok(outcome_eq(&got, &want))
                }
                Subject::Indices(m, n) => {
                    self.relation_preserved(Relation::LL, HopfMap::Delta, *m, *n)
                }
                _ => Err(mismatch("an element pair or an index pair")),
            },
            Axiom::SAntihom => {
                let Subject::Pair(x, y) = subject else {
                    return Err(mismatch("an element pair"));
                };
                let got = self.antipode(&self.alg.multiply(x, y)?)?;
                let want = self.alg.multiply(&self.antipode(y)?, &self.antipode(x)?)?;
                Ok(outcome_eq(&got, &want))
            }
            Axiom::RelationPreservation => {
                let Subject::Relation {
                    relation,
                    map,
                    m,
                    n,
                } = subject
                else {
                    return Err(mismatch("a relation with indices"));
                };
                self.relation_preserved(*relation, *map, *m, *n)
            }
            Axiom::CocommutativityWitness => {
                let x = subject.element().ok_or_else(|| mismatch("an element"))?;
                let d = self.coproduct(x)?;
                let diff = d.flip().sub(&d);
                Ok(AxiomOutcome {
                    holds: !diff.is_zero(),
                    witness: (!diff.is_zero()).then(|| diff.to_string()),
                })
            }
            Axiom::CommutativityWitness => {
                let Subject::Pair(x, y) = subject else {
                    return Err(mismatch("an element pair"));
                };
                let diff = &self.alg.multiply(x, y)? - &self.alg.multiply(y, x)?;
                Ok(AxiomOutcome {
                    holds: !diff.is_zero(),
                    witness: (!diff.is_zero()).then(|| diff.to_string()),
                })
            }
        }
    }

    fn relation_preserved(
        &self,
        rel: Relation,
        map: HopfMap,
        m: i64,
        n: i64,
    ) -> Result<AxiomOutcome> {
        let (lhs, rhs) = relation_sides(rel, m, n)?;
        let l = self.apply_to_formal(map, &lhs)?;
        let r = self.apply_to_formal(map, &rhs)?;
        Ok(match (l, r) {
            (MapImage::Tensor(a), MapImage::Tensor(b)) => outcome_eq(&a, &b),
            (MapImage::Element(a), MapImage::Element(b)) => outcome_eq(&a, &b),
            (MapImage::Scalar(a), MapImage::Scalar(b)) => outcome_eq(&a, &b),
            _ => unreachable!("both sides use the same map"),
        })
    }
}

/// Image of a formal sum under one of the structure maps.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum MapImage {
    Tensor(TensorElement),
    Element(Element),
    Scalar(LaurentPoly),
}

trait Difference {
    fn difference(&self, other: &Self) -> String;
}

impl Difference for TensorElement {
    fn difference(&self, other: &Self) -> String {
        self.sub(other).to_string()
    }
}

impl Difference for Element {
    fn difference(&self, other: &Self) -> String {
        (self - other).to_string()
    }
}

impl Difference for LaurentPoly {
    fn difference(&self, other: &Self) -> String {
        (self - other).to_string()
    }
}

impl Difference for TripleTensor {
    fn difference(&self, other: &Self) -> String {
        let mut d = self.clone();
        for (k, c) in &other.terms {
            d.add_term(k.clone(), -c);
        }
        d.to_string()
    }
}

fn outcome_eq<T: PartialEq + Difference>(got: &T, want: &T) -> AxiomOutcome {
    if got == want {
        AxiomOutcome {
            holds: true,
            witness: None,
        }
    } else {
        AxiomOutcome {
            holds: false,
            witness: Some(got.difference(want)),
        }
    }
}

/// Identities checked by [`Hopf::check_axiom`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Axiom {
    /// `(1⊗Δ)Δ = (Δ⊗1)Δ`
    Coassoc,
    /// `(1⊗ε)Δ(x) = x⊗1`
    CounitLeft,
    /// `(ε⊗1)Δ(x) = 1⊗x`
    CounitRight,
    /// `m(1⊗S)Δ(x) = ε(x)1`
    AntipodeLeft,
    /// `m(S⊗1)Δ(x) = ε(x)1`
    AntipodeRight,
    SSquared,
    /// `Δ(xy) = Δ(x)Δ(y)`, or the `L L` relation preserved by `Δ` for an index pair.
    DeltaHom,
    /// `S(xy) = S(y)S(x)`
    SAntihom,
    RelationPreservation,
    /// Holds iff `flip(Δ(x)) ≠ Δ(x)`.
    CocommutativityWitness,
    /// Holds iff `xy ≠ yx`.
    CommutativityWitness,
}

impl Axiom {
    pub const ALL: [Axiom; 11] = [
        Axiom::Coassoc,
        Axiom::CounitLeft,
        Axiom::CounitRight,
        Axiom::AntipodeLeft,
        Axiom::AntipodeRight,
        Axiom::SSquared,
        Axiom::DeltaHom,
        Axiom::SAntihom,
        Axiom::RelationPreservation,
        Axiom::CocommutativityWitness,
        Axiom::CommutativityWitness,
    ];

    pub fn id(self) -> &'static str {
        match self {
            Axiom::Coassoc => "coassoc",
            Axiom::CounitLeft => "counit-left",
            Axiom::CounitRight => "counit-right",
            Axiom::AntipodeLeft => "antipode-left",
            Axiom::AntipodeRight => "antipode-right",
            Axiom::SSquared => "s-squared",
            Axiom::DeltaHom => "delta-hom",
            Axiom::SAntihom => "s-antihom",
            Axiom::RelationPreservation => "relation-preservation",
            Axiom::CocommutativityWitness => "cocommutativity-witness",
            Axiom::CommutativityWitness => "commutativity-witness",
        }
    }
}

impl FromStr for Axiom {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Axiom::ALL
            .into_iter()
            .find(|a| a.id() == s)
            .ok_or_else(|| Error::UnknownAxiom(s.to_string()))
    }
}

/// What an axiom is checked on.
#[derive(Debug, Clone)]
pub enum Subject {
    Element(Element),
    Pair(Element, Element),
    Indices(i64, i64),
    Relation {
        relation: Relation,
        map: HopfMap,
        m: i64,
        n: i64,
    },
}

impl Subject {
    fn element(&self) -> Option<&Element> {
        match self {
            Subject::Element(x) => Some(x),
            _ => None,
        }
    }
}

/// Verdict of one check. `witness` holds the printed difference on failure
/// (or the exhibited violation for the witness-style checks).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AxiomOutcome {
    pub holds: bool,
    pub witness: Option<String>,
}

#[cfg(test)]
mod tests {
    use super::*;
    use Generator::*;

    fn nw(g: &[Generator]) -> NormalWord {
        NormalWord::from_word(g).unwrap()
    }

    fn gen(g: Generator) -> Element {
        Element::generator(g).unwrap()
    }

    #[test]
    fn tensor_products() {
        let h = Hopf::new();
        let t = nw(&[T]);
        let ti = nw(&[TInv]);
        let u = TensorElement::pure(LaurentPoly::one(), t.clone(), t.clone());
        let v = TensorElement::pure(LaurentPoly::one(), ti.clone(), ti);
        assert_eq!(h.tensor_multiply(&u, &v).unwrap(), TensorElement::one());

        let l1 = nw(&[L(1)]);
        let u = TensorElement::pure(LaurentPoly::one(), l1.clone(), NormalWord::unit());
        let v = TensorElement::pure(LaurentPoly::one(), NormalWord::unit(), l1.clone());
        assert_eq!(
            h.tensor_multiply(&u, &v).unwrap(),
            TensorElement::pure(LaurentPoly::one(), l1.clone(), l1.clone())
        );

        // (L_1 ⊗ T)(T ⊗ L_1) = L_1 T ⊗ T L_1 = q^4 T L_1 ⊗ T L_1
        let u = TensorElement::pure(LaurentPoly::one(), l1.clone(), t.clone());
        let v = TensorElement::pure(LaurentPoly::one(), t, l1);
        let tl1 = nw(&[T, L(1)]);
        assert_eq!(
            h.tensor_multiply(&u, &v).unwrap(),
            TensorElement::pure(LaurentPoly::q_pow(4), tl1.clone(), tl1)
        );
    }

    #[test]
    fn coproduct_on_generators() {
        let h = Hopf::new();
        let mut want = TensorElement::pure(LaurentPoly::one(), nw(&[L(0)]), NormalWord::unit());
        want.add_term(NormalWord::unit(), nw(&[L(0)]), LaurentPoly::one());
        assert_eq!(h.coproduct(&gen(L(0))).unwrap(), want);
        assert_eq!(
            h.coproduct(&gen(T)).unwrap(),
            TensorElement::pure(LaurentPoly::one(), nw(&[T]), nw(&[T]))
        );
        for r in -3..=3 {
            let tr = NormalWord::t_power(r);
            assert_eq!(
                h.coproduct(&Element::basis(tr.clone())).unwrap(),
                TensorElement::pure(LaurentPoly::one(), tr.clone(), tr)
            );
        }
    }

    #[test]
    fn counit_values() {
        let h = Hopf::new();
        assert!(h.counit(&Element::basis(NormalWord::t_power(5))).is_one());
        let lw = h.algebra().multiply(&gen(L(5)), &gen(W(2))).unwrap();
        assert!(h.counit(&lw).is_zero());
        let x = &Element::term(LaurentPoly::constant(3), NormalWord::t_power(2)) + &gen(L(1));
        assert_eq!(h.counit(&x), LaurentPoly::constant(3));
    }

    #[test]
    fn antipode_values() {
        let h = Hopf::new();
        assert_eq!(h.antipode(&gen(L(0))).unwrap(), -gen(L(0)));
        assert_eq!(h.antipode(&gen(T)).unwrap(), gen(TInv));
        let l3 = gen(L(3));
        assert_eq!(h.antipode(&h.antipode(&l3).unwrap()).unwrap(), l3);
        assert_eq!(h.antipode_inverse(&h.antipode(&l3).unwrap()).unwrap(), l3);
    }

    #[test]
    fn closed_form_anchors() {
        let h = Hopf::new();
        assert_eq!(
            h.power_closed_form(HopfMap::Delta, L(0), 3, 0).unwrap(),
            ClosedForm::Tensor(TensorElement::one())
        );
        let ClosedForm::Tensor(d1) = h.power_closed_form(HopfMap::Delta, L(0), 2, 1).unwrap()
        else {
            panic!()
        };
        assert_eq!(d1, h.coproduct(&gen(L(2))).unwrap());
        let ClosedForm::Tensor(d2) = h.power_closed_form(HopfMap::Delta, L(0), 1, 2).unwrap()
        else {
            panic!()
        };
        let sq = h.algebra().pow(&gen(L(1)), 2).unwrap();
        assert_eq!(d2, h.coproduct(&sq).unwrap());
        // middle term 2 L_1 T ⊗ T L_1 = 2 q^4 T L_1 ⊗ T L_1
        assert_eq!(d2.terms().count(), 3);
        let ClosedForm::Element(s) = h.power_closed_form(HopfMap::Antipode, W(0), 2, 3).unwrap()
        else {
            panic!()
        };
        let cube = h.algebra().pow(&gen(W(2)), 3).unwrap();
        assert_eq!(s, h.antipode(&cube).unwrap());
    }

    #[test]
    fn axioms_on_generators() {
        let h = Hopf::new();
        for n in -3..=3 {
            for g in [L(n), W(n)] {
                let x = Subject::Element(gen(g));
                for a in [
                    Axiom::Coassoc,
                    Axiom::CounitLeft,
                    Axiom::CounitRight,
                    Axiom::AntipodeLeft,
                    Axiom::AntipodeRight,
                    Axiom::SSquared,
                ] {
                    let o = h.check_axiom(a, &x).unwrap();
                    assert!(o.holds, "{} on {g}: {:?}", a.id(), o.witness);
                }
            }
        }
        let o = h
            .check_axiom(Axiom::DeltaHom, &Subject::Indices(2, -1))
            .unwrap();
        assert!(o.holds, "{:?}", o.witness);
    }

    #[test]
    fn witnesses() {
        let h = Hopf::new();
        // Δ(L_1) = L_1 ⊗ T + T ⊗ L_1 is symmetric under the flip
        let o = h
            .check_axiom(Axiom::CocommutativityWitness, &Subject::Element(gen(L(1))))
            .unwrap();
        assert!(!o.holds && o.witness.is_none());
        let o = h
            .check_axiom(
                Axiom::CommutativityWitness,
                &Subject::Pair(gen(T), gen(L(0))),
            )
            .unwrap();
        assert!(o.holds);
        let o = h
            .check_axiom(Axiom::CocommutativityWitness, &Subject::Element(gen(T)))
            .unwrap();
        assert!(!o.holds);
    }

    #[test]
    fn axiom_ids() {
        for a in Axiom::ALL {
            assert_eq!(a.id().parse::<Axiom>().unwrap(), a);
        }
        assert!(matches!(
            "bogus".parse::<Axiom>(),
            Err(Error::UnknownAxiom(_))
        ));
        let h = Hopf::new();
        assert!(h
            .check_axiom(Axiom::SAntihom, &Subject::Indices(0, 0))
            .is_err());
    }
}
