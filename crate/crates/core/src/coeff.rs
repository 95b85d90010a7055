//! Exact coefficient ring: Laurent polynomials over the integers in `q`, and
//! optionally in a second indeterminate `p` standing for `q^c`.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Exact rational evaluation target.
pub type Rational = BigRational;

/// Which indeterminates a coefficient may use.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Vars {
    /// `q` only.
    One,
    /// `q` and `p = q^c`.
    Two,
}

/// Exponent vector `(e_q, e_p)`. Ordered lexicographically.
pub type Exponent = (i64, i64);

/// Sparse Laurent polynomial with arbitrary-precision integer coefficients.
///
/// No stored coefficient is ever zero, so structural equality is equality in
/// the ring.
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LaurentPoly {
    terms: BTreeMap<Exponent, BigInt>,
}

fn exp_add(a: Exponent, b: Exponent) -> Result<Exponent> {
    match (a.0.checked_add(b.0), a.1.checked_add(b.1)) {
        (Some(x), Some(y)) => Ok((x, y)),
        _ => Err(Error::ArithmeticBound(format!(
            "exponent sum {a:?} + {b:?} overflows"
        ))),
    }
}

fn exp_scale(a: Exponent, k: i64) -> Result<Exponent> {
    match (a.0.checked_mul(k), a.1.checked_mul(k)) {
        (Some(x), Some(y)) => Ok((x, y)),
        _ => Err(Error::ArithmeticBound(format!(
            "exponent {a:?} times {k} overflows"
        ))),
    }
}

impl LaurentPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(1)
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::monomial(c, 0, 0)
    }

    /// `c * q^eq * p^ep`.
    pub fn monomial(c: impl Into<BigInt>, eq: i64, ep: i64) -> Self {
        let c = c.into();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert((eq, ep), c);
        }
        Self { terms }
    }

    pub fn q() -> Self {
        Self::q_pow(1)
    }

    pub fn p() -> Self {
        Self::p_pow(1)
    }

    pub fn q_pow(e: i64) -> Self {
        Self::monomial(1, e, 0)
    }

    pub fn p_pow(e: i64) -> Self {
        Self::monomial(1, 0, e)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&(0, 0)).is_some_and(|c| c.is_one())
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in ascending canonical order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (Exponent, &BigInt)> + '_ {
        self.terms.iter().map(|(e, c)| (*e, c))
    }

    /// True if some term carries a nonzero `p` exponent.
    pub fn uses_p(&self) -> bool {
        self.terms.keys().any(|&(_, ep)| ep != 0)
    }

    /// The single term, if this is a monomial.
    pub fn as_monomial(&self) -> Option<(Exponent, &BigInt)> {
        if self.terms.len() == 1 {
            self.terms.iter().next().map(|(e, c)| (*e, c))
        } else {
            None
        }
    }

    /// The constant value, if the polynomial has no variable terms.
    pub fn as_constant(&self) -> Option<BigInt> {
        match self.terms.len() {
            0 => Some(BigInt::zero()),
            1 => self.terms.get(&(0, 0)).cloned(),
            _ => None,
        }
    }

    fn add_term(&mut self, e: Exponent, c: BigInt) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(e) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn scale(&self, k: &BigInt) -> Self {
        if k.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self.terms.iter().map(|(e, c)| (*e, c * k)).collect(),
        }
    }

    /// Multiply by `q^eq * p^ep`.
    pub fn shift(&self, eq: i64, ep: i64) -> Result<Self> {
        let mut terms = BTreeMap::new();
        for (e, c) in &self.terms {
            terms.insert(exp_add(*e, (eq, ep))?, c.clone());
        }
        Ok(Self { terms })
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        if let Some((e, c)) = other.as_monomial() {
            return Ok(self.shift(e.0, e.1)?.scale(c));
        }
        if let Some((e, c)) = self.as_monomial() {
            return Ok(other.shift(e.0, e.1)?.scale(c));
        }
        let mut out = Self::zero();
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                out.add_term(exp_add(*ea, *eb)?, ca * cb);
            }
        }
        Ok(out)
    }

    /// Integer power. Negative exponents are only defined for monomials with
    /// coefficient ±1 (the units of the ring).
    pub fn pow(&self, k: i64) -> Result<Self> {
        if k < 0 {
            return match self.as_monomial() {
                Some((e, c)) if c.abs().is_one() => {
                    let c = if k % 2 != 0 { c.clone() } else { BigInt::one() };
                    let e = exp_scale(e, k)?;
                    Ok(Self::monomial(c, e.0, e.1))
                }
                _ => Err(Error::UnsupportedInverse(format!("({self})^{k}"))),
            };
        }
        if let Some((e, c)) = self.as_monomial() {
            let e = exp_scale(e, k)?;
            let k = u32::try_from(k)
                .map_err(|_| Error::ArithmeticBound(format!("power {k} too large")))?;
            return Ok(Self::monomial(
                num_traits::pow(c.clone(), k as usize),
                e.0,
                e.1,
            ));
        }
        let mut result = Self::one();
        let mut base = self.clone();
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                result = result.mul(&base)?;
            }
            k >>= 1;
            if k > 0 {
                base = base.mul(&base)?;
            }
        }
        Ok(result)
    }

    /// Substitute `p ↦ q^{-1}`, i.e. specialise the generalized deformation to `c = -1`.
    pub fn substitute_p_inverse_q(&self) -> Result<Self> {
        let mut out = Self::zero();
        for (&(eq, ep), c) in &self.terms {
            let e = eq
                .checked_sub(ep)
                .ok_or_else(|| Error::ArithmeticBound("exponent overflow in p ↦ q^-1".into()))?;
            out.add_term((e, 0), c.clone());
        }
        Ok(out)
    }

    /// Exact value at `q = q_val` (and `p = p_val` when the polynomial uses `p`).
    pub fn eval(&self, q_val: &Rational, p_val: Option<&Rational>) -> Result<Rational> {
        if q_val.is_zero() {
            return Err(Error::Domain("q must be nonzero".into()));
        }
        if let Some(p) = p_val {
            if p.is_zero() {
                return Err(Error::Domain("p must be nonzero".into()));
            }
        } else if self.uses_p() {
            return Err(Error::Domain(
                "a value for p is required to evaluate a two-variable coefficient".into(),
            ));
        }
        let mut total = Rational::zero();
        for (&(eq, ep), c) in &self.terms {
            let mut v = Rational::from_integer(c.clone());
            v *= rational_pow(q_val, eq)?;
            if ep != 0 {
                // p_val presence was checked above
                v *= rational_pow(p_val.expect("p value"), ep)?;
            }
            total += v;
        }
        Ok(total)
    }
}

fn rational_pow(x: &Rational, e: i64) -> Result<Rational> {
    let e32 = i32::try_from(e)
        .map_err(|_| Error::ArithmeticBound(format!("evaluation exponent {e} too large")))?;
    Ok(num_traits::Pow::pow(x, e32))
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Add for LaurentPoly {
    type Output = LaurentPoly;
    fn add(mut self, rhs: LaurentPoly) -> LaurentPoly {
        self += &rhs;
        self
    }
}

impl AddAssign<&LaurentPoly> for LaurentPoly {
    fn add_assign(&mut self, rhs: &LaurentPoly) {
        for (e, c) in &rhs.terms {
            self.add_term(*e, c.clone());
        }
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(*e, -c);
        }
        out
    }
}

impl Sub for LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: LaurentPoly) -> LaurentPoly {
        &self - &rhs
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect(),
        }
    }
}

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        -&self
    }
}

impl From<i64> for LaurentPoly {
    fn from(c: i64) -> Self {
        Self::constant(c)
    }
}

impl From<BigInt> for LaurentPoly {
    fn from(c: BigInt) -> Self {
        Self::constant(c)
    }
}

/// The q-integer `[n]_q = (q^n - q^-n)/(q - q^-1)` in the one-variable
/// profile, or `[n]^c_q = (q^n - p^n)/(q - p)` in the two-variable profile.
///
/// The quotient is exact in both cases. The one-variable form is odd in `n`;
/// the two-variable form satisfies `[-n] = -q^-n p^-n [n]` instead.
pub fn q_int(n: i64, vars: Vars) -> LaurentPoly {
    let mut out = LaurentPoly::zero();
    let k = n.unsigned_abs() as i64;
    match vars {
        Vars::One => {
            for i in 0..k {
                out.add_term((k - 1 - 2 * i, 0), BigInt::one());
            }
            if n < 0 {
                out = -out;
            }
        }
        Vars::Two => {
            // (q^-k - p^-k)/(q - p) = -q^-k p^-k (q^k - p^k)/(q - p)
            for i in 0..k {
                let e = if n > 0 {
                    (i, k - 1 - i)
                } else {
                    (i - k, -1 - i)
                };
                let c = if n > 0 { BigInt::one() } else { -BigInt::one() };
                out.add_term(e, c);
            }
        }
    }
    out
}

/// Checks both q-integer identities
/// `q^n [m] - q^m [n] = [m-n]` and `q^-n [m] + q^m [n] = [m+n]`
/// as exact polynomial equalities.
pub fn q_identity_check(m: i64, n: i64) -> bool {
    let qm = q_int(m, Vars::One);
    let qn = q_int(n, Vars::One);
    let lhs1 = |a: &LaurentPoly,
                sa: i64,
                b: &LaurentPoly,
                sb: i64|
     -> Option<(LaurentPoly, LaurentPoly)> {
        Some((a.shift(sa, 0).ok()?, b.shift(sb, 0).ok()?))
    };
    let Some((a, b)) = lhs1(&qm, n, &qn, m) else {
        return false;
    };
    let first = &a - &b == q_int(m - n, Vars::One);
    let Some((a, b)) = lhs1(&qm, -n, &qn, m) else {
        return false;
    };
    let second = &a + &b == q_int(m + n, Vars::One);
    first && second
}

fn fmt_var(f: &mut fmt::Formatter<'_>, name: char, e: i64) -> fmt::Result {
    if e == 1 {
        write!(f, "{name}")
    } else {
        write!(f, "{name}^{e}")
    }
}

/// Writes `|c| * q^a * p^b` without sign.
fn fmt_term_abs(f: &mut fmt::Formatter<'_>, (eq, ep): Exponent, c: &BigInt) -> fmt::Result {
    let mag = c.abs();
    let mut wrote = false;
    if !mag.is_one() || (eq == 0 && ep == 0) {
        write!(f, "{mag}")?;
        wrote = true;
    }
    if eq != 0 {
        if wrote {
            f.write_str("*")?;
        }
        fmt_var(f, 'q', eq)?;
        wrote = true;
    }
    if ep != 0 {
        if wrote {
            f.write_str("*")?;
        }
        fmt_var(f, 'p', ep)?;
    }
    Ok(())
}

/// Terms are written highest exponent first.
impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (e, c)) in self.terms.iter().rev().enumerate() {
            match (i, c.is_negative()) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            fmt_term_abs(f, *e, c)?;
        }
        Ok(())
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LaurentPoly({self})")
    }
}

impl FromStr for LaurentPoly {
    type Err = Error;

    /// Parses the printed form: a signed sum of `c*q^a*p^b` terms, any factor
    /// optional. Whitespace is ignored.
    fn from_str(s: &str) -> Result<Self> {
        let compact: Vec<(usize, char)> = s
            .char_indices()
            .filter(|(_, c)| !c.is_whitespace())
            .collect();
        let err = |pos: usize, msg: &str| Error::Parse {
            line: 1,
            column: pos + 1,
            message: msg.to_string(),
        };
        if compact.is_empty() {
            return Err(err(0, "empty polynomial"));
        }
        let mut out = LaurentPoly::zero();
        let mut i = 0;
        let read_int = |i: &mut usize, allow_sign: bool| -> Option<i64> {
            let start = *i;
            if allow_sign && *i < compact.len() && compact[*i].1 == '-' {
                *i += 1;
            }
            let digits_start = *i;
            while *i < compact.len() && compact[*i].1.is_ascii_digit() {
                *i += 1;
            }
            if *i == digits_start {
                *i = start;
                return None;
            }
            let text: String = compact[start..*i].iter().map(|(_, c)| *c).collect();
            text.parse().ok()
        };
        let mut first = true;
        while i < compact.len() {
            let mut sign = BigInt::one();
            match compact[i].1 {
                '+' if !first => i += 1,
                '-' => {
                    sign = -sign;
                    i += 1;
                }
                _ if first => {}
                _ => return Err(err(compact[i].0, "expected `+` or `-`")),
            }
            first = false;
            let mut coeff = BigInt::one();
            let (mut eq, mut ep) = (0i64, 0i64);
            let mut factors = 0;
            loop {
                if i >= compact.len() {
                    break;
                }
                let (pos, ch) = compact[i];
                if ch.is_ascii_digit() {
                    let start = i;
                    while i < compact.len() && compact[i].1.is_ascii_digit() {
                        i += 1;
                    }
                    let text: String = compact[start..i].iter().map(|(_, c)| *c).collect();
                    coeff *= text
                        .parse::<BigInt>()
                        .map_err(|_| err(pos, "bad integer"))?;
                } else if ch == 'q' || ch == 'p' {
                    i += 1;
                    let mut e = 1;
                    if i < compact.len() && compact[i].1 == '^' {
                        i += 1;
                        e = read_int(&mut i, true).ok_or_else(|| err(pos, "expected exponent"))?;
                    }
                    let slot = if ch == 'q' { &mut eq } else { &mut ep };
                    *slot = slot
                        .checked_add(e)
                        .ok_or_else(|| Error::ArithmeticBound("exponent overflow".into()))?;
                } else {
                    return Err(err(pos, "unexpected character"));
                }
                factors += 1;
                if i < compact.len() && compact[i].1 == '*' {
                    i += 1;
                    continue;
                }
                break;
            }
            if factors == 0 {
                let pos = compact.get(i).map_or(s.len(), |c| c.0);
                return Err(err(pos, "expected a term"));
            }
            out.add_term((eq, ep), sign * coeff);
        }
        Ok(out)
    }
}
