//! Boson ⊗ fermion oscillator module on `|k, ε⟩`, `k ∈ ℤ`, `ε ∈ {0, 1}`.
//!
//! `a⁺` shifts the grade up by one and is invertible, so `(a⁺)^{n+1}` makes
//! sense for every integer `n`. The annihilator carries the whole weight:
//! `a|k⟩ = λ_k |k-1⟩` with `λ_0 = 0` and
//!
//! ```text
//! classical   λ_k = k                        a a⁺ - a⁺ a = 1
//! q-deformed  λ_k = q^k [k]_q                q^-1 a a⁺ - q a⁺ a = 1
//! two-param   λ_k = p^-k (q^k - p^k)/(q - p)   p a a⁺ - q a⁺ a = 1
//! ```
//!
//! `L_n = (a⁺)^{n+1} a` and `W_n = (a⁺)^{n+1} b⁺ a` then act without touching
//! the rewrite rules, which makes this an independent check of them.

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::RangeInclusive;

use crate::algebra::{classical_limit, Algebra, DeformationProfile, Element, Generator, Word};
use crate::coeff::{q_int, LaurentPoly, Vars};
use crate::error::{Error, Result};

/// Largest admissible |k|.
pub const GRADE_CAP: i64 = 1 << 20;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FockLabel {
    pub k: i64,
    pub occupied: bool,
}

impl FockLabel {
    pub fn new(k: i64, occupied: bool) -> Result<Self> {
        check_grade(k)?;
        Ok(Self { k, occupied })
    }
}

fn check_grade(k: i64) -> Result<()> {
    if k.abs() > GRADE_CAP {
        Err(Error::GradeCap {
            grade: k,
            cap: GRADE_CAP,
        })
    } else {
        Ok(())
    }
}

impl fmt::Display for FockLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "|{},{}>", self.k, u8::from(self.occupied))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum OscillatorProfile {
    Classical,
    QDeformed,
    TwoParam,
}

impl OscillatorProfile {
    pub const ALL: [OscillatorProfile; 3] = [
        OscillatorProfile::Classical,
        OscillatorProfile::QDeformed,
        OscillatorProfile::TwoParam,
    ];

    pub fn name(self) -> &'static str {
        match self {
            OscillatorProfile::Classical => "classical",
            OscillatorProfile::QDeformed => "q-deformed",
            OscillatorProfile::TwoParam => "two-param",
        }
    }

    /// `λ_k`, the weight of `a` on grade `k`.
    pub fn weight(self, k: i64) -> Result<LaurentPoly> {
        Ok(match self {
            OscillatorProfile::Classical => LaurentPoly::constant(k),
            OscillatorProfile::QDeformed => q_int(k, Vars::One).shift(k, 0)?,
            OscillatorProfile::TwoParam => q_int(k, Vars::Two).shift(0, -k)?,
        })
    }

    /// `[n]` in this profile: `n`, `[n]_q` or `[n]^c_q`.
    pub fn bracket_number(self, n: i64) -> LaurentPoly {
        match self {
            OscillatorProfile::Classical => LaurentPoly::constant(n),
            OscillatorProfile::QDeformed => q_int(n, Vars::One),
            OscillatorProfile::TwoParam => q_int(n, Vars::Two),
        }
    }

    fn check_coeff(self, c: &LaurentPoly) -> Result<()> {
        let ok = match self {
            OscillatorProfile::Classical => c.as_constant().is_some(),
            OscillatorProfile::QDeformed => !c.uses_p(),
            OscillatorProfile::TwoParam => true,
        };
        if ok {
            Ok(())
        } else {
            Err(Error::UnsupportedProfile {
                profile: self.name(),
                what: format!("coefficient {c}"),
            })
        }
    }
}

impl fmt::Display for OscillatorProfile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl std::str::FromStr for OscillatorProfile {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        OscillatorProfile::ALL
            .into_iter()
            .find(|p| p.name() == s)
            .ok_or_else(|| Error::Usage(format!("unknown oscillator profile `{s}`")))
    }
}

/// Finite combination of Fock states.
#[derive(Clone, Default, PartialEq, Eq)]
pub struct ModuleVector {
    terms: BTreeMap<FockLabel, LaurentPoly>,
}

impl ModuleVector {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn basis(label: FockLabel) -> Self {
        let mut v = Self::zero();
        v.add_term(label, LaurentPoly::one());
        v
    }

    pub fn state(k: i64, occupied: bool) -> Result<Self> {
        Ok(Self::basis(FockLabel::new(k, occupied)?))
    }

    pub fn add_term(&mut self, label: FockLabel, c: LaurentPoly) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(label) {
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

    pub fn add_scaled(&mut self, other: &ModuleVector, c: &LaurentPoly) -> Result<()> {
        for (l, k) in &other.terms {
            self.add_term(*l, k.mul(c)?);
        }
        Ok(())
    }

    pub fn terms(&self) -> impl Iterator<Item = (&FockLabel, &LaurentPoly)> {
        self.terms.iter()
    }

    pub fn coeff(&self, label: FockLabel) -> LaurentPoly {
        self.terms.get(&label).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn sub(&self, other: &ModuleVector) -> ModuleVector {
        let mut out = self.clone();
        for (l, c) in &other.terms {
            out.add_term(*l, -c);
        }
        out
    }
}

impl fmt::Display for ModuleVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (l, c)) in self.terms.iter().enumerate() {
            crate::algebra::fmt_scaled_term(f, i == 0, c, &l.to_string(), false)?;
        }
        Ok(())
    }
}

impl fmt::Debug for ModuleVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ModuleVector({self})")
    }
}

/// Elementary ladder operators.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Ladder {
    A,
    ADag,
    /// Inverse of `a⁺` on the two-sided graded module.
    ADagInv,
    B,
    BDag,
}

/// `a|k⟩`-style action on one basis state; `None` means the state is killed.
fn ladder_on_state(
    op: Ladder,
    s: FockLabel,
    profile: OscillatorProfile,
) -> Result<Option<(FockLabel, LaurentPoly)>> {
    let one = LaurentPoly::one;
    Ok(match op {
        Ladder::A => {
            let w = profile.weight(s.k)?;
            if w.is_zero() {
                None
            } else {
                Some((FockLabel::new(s.k - 1, s.occupied)?, w))
            }
        }
        Ladder::ADag => Some((FockLabel::new(s.k + 1, s.occupied)?, one())),
        Ladder::ADagInv => Some((FockLabel::new(s.k - 1, s.occupied)?, one())),
        Ladder::B => s.occupied.then(|| {
            (
                FockLabel {
                    k: s.k,
                    occupied: false,
                },
                one(),
            )
        }),
        Ladder::BDag => (!s.occupied).then(|| {
            (
                FockLabel {
                    k: s.k,
                    occupied: true,
                },
                one(),
            )
        }),
    })
}

pub fn apply_ladder(
    op: Ladder,
    v: &ModuleVector,
    profile: OscillatorProfile,
) -> Result<ModuleVector> {
    let mut out = ModuleVector::zero();
    for (s, c) in v.terms() {
        profile.check_coeff(c)?;
        if let Some((t, w)) = ladder_on_state(op, *s, profile)? {
            out.add_term(t, c.mul(&w)?);
        }
    }
    Ok(out)
}

/// A linear combination of ladder words; each word acts right to left.
#[derive(Debug, Clone, Default)]
pub struct OscOperator {
    terms: Vec<(LaurentPoly, Vec<Ladder>)>,
}

impl OscOperator {
    pub fn word(ops: Vec<Ladder>) -> Self {
        Self {
            terms: vec![(LaurentPoly::one(), ops)],
        }
    }

    pub fn scalar(c: LaurentPoly) -> Self {
        Self {
            terms: vec![(c, vec![])],
        }
    }

    pub fn zero() -> Self {
        Self::default()
    }

    /// `(a⁺)^n`, any integer `n`.
    pub fn creation_power(n: i64) -> Vec<Ladder> {
        let op = if n >= 0 {
            Ladder::ADag
        } else {
            Ladder::ADagInv
        };
        vec![op; n.unsigned_abs() as usize]
    }

    /// `L_n = (a⁺)^{n+1} a`.
    pub fn l(n: i64) -> Vec<Ladder> {
        let mut w = Self::creation_power(n + 1);
        w.push(Ladder::A);
        w
    }

    /// `W_n = (a⁺)^{n+1} b⁺ a`.
    pub fn w(n: i64) -> Vec<Ladder> {
        let mut w = Self::creation_power(n + 1);
        w.push(Ladder::BDag);
        w.push(Ladder::A);
        w
    }

    pub fn plus(mut self, c: LaurentPoly, ops: Vec<Ladder>) -> Self {
        self.terms.push((c, ops));
        self
    }

    pub fn apply(&self, v: &ModuleVector, profile: OscillatorProfile) -> Result<ModuleVector> {
        let mut out = ModuleVector::zero();
        for (c, ops) in &self.terms {
            let mut cur = v.clone();
            for op in ops.iter().rev() {
                cur = apply_ladder(*op, &cur, profile)?;
                if cur.is_zero() {
                    break;
                }
            }
            out.add_scaled(&cur, c)?;
        }
        Ok(out)
    }
}

fn generator_ladders(g: Generator) -> Result<Vec<Ladder>> {
    match g {
        Generator::L(n) => Ok(OscOperator::l(n)),
        Generator::W(n) => Ok(OscOperator::w(n)),
        other => Err(Error::UnsupportedGenerator(other.to_string())),
    }
}

/// `L_n|k,ε⟩ = λ_k|k+n,ε⟩`, `W_n|k,0⟩ = λ_k|k+n,1⟩`, `W_n|k,1⟩ = 0`,
/// computed from the ladder composites.
pub fn apply_generator(
    g: Generator,
    v: &ModuleVector,
    profile: OscillatorProfile,
) -> Result<ModuleVector> {
    g.validate()?;
    OscOperator::word(generator_ladders(g)?).apply(v, profile)
}

/// Applies a raw word (rightmost generator first).
pub fn apply_word(w: &Word, v: &ModuleVector, profile: OscillatorProfile) -> Result<ModuleVector> {
    let mut cur = v.clone();
    for g in w.0.iter().rev() {
        cur = apply_generator(*g, &cur, profile)?;
    }
    Ok(cur)
}

/// Linear-multiplicative extension of the generator action to a T-free element.
pub fn apply_element(
    x: &Element,
    v: &ModuleVector,
    profile: OscillatorProfile,
) -> Result<ModuleVector> {
    let mut out = ModuleVector::zero();
    for (w, c) in x.terms() {
        if w.t_exp() != 0 {
            return Err(Error::UnsupportedGenerator(format!("T in {w}")));
        }
        profile.check_coeff(c)?;
        let img = apply_word(&w.to_word(), v, profile)?;
        out.add_scaled(&img, c)?;
    }
    Ok(out)
}

/// Operator identities checked on the module.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum OscRelation {
    /// `a a⁺ - a⁺ a = 1`
    Boson,
    /// `q^-1 a a⁺ - q a⁺ a = 1`
    QBoson,
    /// `p a a⁺ - q a⁺ a = 1`
    PBoson,
    /// `b b⁺ + b⁺ b = 1`, `b² = (b⁺)² = 0`
    Fermion,
    /// Bosons commute with fermions.
    Mixed,
    /// `[a, (a⁺)^n]` in the profile's deformed bracket equals `[n] (a⁺)^{n-1}`.
    Qd(i64),
    /// Classical brackets of `L_m, L_n`, `L_m, W_n`, `W_m, W_n`.
    Le(i64, i64),
    /// Deformed brackets `[L_n, L_m]_{(q^{n-m}, q^{m-n})} = [m-n]_q L_{m+n}` and the W analogues.
    Qle(i64, i64),
    /// Two-parameter brackets `[L_n, L_m]_{(q^{n-m}, p^{n-m})} = -[n-m]^c L_{m+n}` and the W analogues.
    Gq(i64, i64),
}

impl OscRelation {
    fn compatible(self, profile: OscillatorProfile) -> bool {
        use OscillatorProfile::*;
        match self {
            OscRelation::Boson | OscRelation::Le(..) => profile == Classical,
            OscRelation::QBoson | OscRelation::Qle(..) => profile == QDeformed,
            OscRelation::PBoson | OscRelation::Gq(..) => profile == TwoParam,
            OscRelation::Fermion | OscRelation::Mixed | OscRelation::Qd(_) => true,
        }
    }

    /// The profile whose own boson axiom this is.
    pub fn boson_for(profile: OscillatorProfile) -> OscRelation {
        match profile {
            OscillatorProfile::Classical => OscRelation::Boson,
            OscillatorProfile::QDeformed => OscRelation::QBoson,
            OscillatorProfile::TwoParam => OscRelation::PBoson,
        }
    }

    pub fn label(self) -> String {
        match self {
            OscRelation::Boson => "boson".into(),
            OscRelation::QBoson => "qboson".into(),
            OscRelation::PBoson => "pboson".into(),
            OscRelation::Fermion => "fermion".into(),
            OscRelation::Mixed => "mixed".into(),
            OscRelation::Qd(n) => format!("qd({n})"),
            OscRelation::Le(m, n) => format!("LE({m},{n})"),
            OscRelation::Qle(n, m) => format!("qLE({n},{m})"),
            OscRelation::Gq(n, m) => format!("gq({n},{m})"),
        }
    }

    /// Each identity as a list of operators that must vanish.
    fn vanishing_operators(self, profile: OscillatorProfile) -> Result<Vec<OscOperator>> {
        use Ladder::*;
        let q = LaurentPoly::q_pow;
        let one = LaurentPoly::one;
        let minus_one = || LaurentPoly::constant(-1);
        let bracket_ops = |x: Vec<Ladder>,
                           y: Vec<Ladder>,
                           alpha: LaurentPoly,
                           beta: LaurentPoly,
                           rhs: Option<(LaurentPoly, Vec<Ladder>)>| {
            let xy: Vec<Ladder> = x.iter().chain(&y).copied().collect();
            let yx: Vec<Ladder> = y.iter().chain(&x).copied().collect();
            let mut op = OscOperator::zero().plus(alpha, xy).plus(-beta, yx);
            if let Some((c, w)) = rhs {
                op = op.plus(-c, w);
            }
            op
        };
        Ok(match self {
            OscRelation::Boson => vec![bracket_ops(
                vec![A],
                vec![ADag],
                one(),
                one(),
                Some((one(), vec![])),
            )],
            OscRelation::QBoson => vec![bracket_ops(
                vec![A],
                vec![ADag],
                q(-1),
                q(1),
                Some((one(), vec![])),
            )],
            OscRelation::PBoson => vec![bracket_ops(
                vec![A],
                vec![ADag],
                LaurentPoly::p(),
                q(1),
                Some((one(), vec![])),
            )],
            OscRelation::Fermion => vec![
                bracket_ops(
                    vec![B],
                    vec![BDag],
                    one(),
                    minus_one(),
                    Some((one(), vec![])),
                ),
                OscOperator::word(vec![B, B]),
                OscOperator::word(vec![BDag, BDag]),
            ],
            OscRelation::Mixed => {
                let mut ops = Vec::new();
                for x in [A, ADag] {
                    for y in [B, BDag] {
                        ops.push(bracket_ops(vec![x], vec![y], one(), one(), None));
                    }
                }
                ops
            }
            OscRelation::Qd(n) => {
                let (alpha, beta) = match profile {
                    OscillatorProfile::Classical => (one(), one()),
                    OscillatorProfile::QDeformed => (q(-n), q(n)),
                    OscillatorProfile::TwoParam => (LaurentPoly::p_pow(n), q(n)),
                };
                let rhs = (
                    profile.bracket_number(n),
                    OscOperator::creation_power(n - 1),
                );
                vec![bracket_ops(
                    vec![A],
                    OscOperator::creation_power(n),
                    alpha,
                    beta,
                    Some(rhs),
                )]
            }
            OscRelation::Le(m, n) => {
                let c = LaurentPoly::constant(n - m);
                vec![
                    bracket_ops(
                        OscOperator::l(m),
                        OscOperator::l(n),
                        one(),
                        one(),
                        Some((c.clone(), OscOperator::l(m + n))),
                    ),
                    bracket_ops(
                        OscOperator::l(m),
                        OscOperator::w(n),
                        one(),
                        one(),
                        Some((c, OscOperator::w(m + n))),
                    ),
                    bracket_ops(OscOperator::w(m), OscOperator::w(n), one(), one(), None),
                ]
            }
            OscRelation::Qle(n, m) => {
                let c = q_int(m - n, Vars::One);
                let (alpha, beta) = (q(n - m), q(m - n));
                vec![
                    bracket_ops(
                        OscOperator::l(n),
                        OscOperator::l(m),
                        alpha.clone(),
                        beta.clone(),
                        Some((c.clone(), OscOperator::l(m + n))),
                    ),
                    bracket_ops(
                        OscOperator::l(n),
                        OscOperator::w(m),
                        alpha.clone(),
                        beta.clone(),
                        Some((c, OscOperator::w(m + n))),
                    ),
                    bracket_ops(OscOperator::w(n), OscOperator::w(m), alpha, beta, None),
                ]
            }
            OscRelation::Gq(n, m) => {
                let c = -q_int(n - m, Vars::Two);
                let (alpha, beta) = (q(n - m), LaurentPoly::p_pow(n - m));
                vec![
                    bracket_ops(
                        OscOperator::l(n),
                        OscOperator::l(m),
                        alpha.clone(),
                        beta.clone(),
                        Some((c.clone(), OscOperator::l(m + n))),
                    ),
                    bracket_ops(
                        OscOperator::l(n),
                        OscOperator::w(m),
                        alpha.clone(),
                        beta.clone(),
                        Some((c, OscOperator::w(m + n))),
                    ),
                    bracket_ops(OscOperator::w(n), OscOperator::w(m), alpha, beta, None),
                ]
            }
        })
    }
}

/// Outcome of a module check; `witness` names the first failing state.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OscOutcome {
    pub holds: bool,
    pub cases: usize,
    pub witness: Option<String>,
}

/// Checks an operator identity on every `|k, ε⟩` with `k` in `k_range`.
/// Each side maps a basis state to a single grade, so the check is exact.
pub fn check_relation(
    rel: OscRelation,
    profile: OscillatorProfile,
    k_range: RangeInclusive<i64>,
) -> Result<OscOutcome> {
    if !rel.compatible(profile) {
        return Err(Error::RelationProfileMismatch {
            relation: rel.label(),
            profile: profile.name(),
        });
    }
    let ops = rel.vanishing_operators(profile)?;
    let mut cases = 0;
    for k in k_range {
        for occupied in [false, true] {
            let v = ModuleVector::state(k, occupied)?;
            for op in &ops {
                cases += 1;
                let img = op.apply(&v, profile)?;
                if !img.is_zero() {
                    return Ok(OscOutcome {
                        holds: false,
                        cases,
                        witness: Some(format!(
                            "{} on {}: residual {img}",
                            rel.label(),
                            FockLabel { k, occupied }
                        )),
                    });
                }
            }
        }
    }
    Ok(OscOutcome {
        holds: true,
        cases,
        witness: None,
    })
}

/// The rewrite-engine profile whose normal forms this oscillator profile realizes.
fn engine_profile(profile: OscillatorProfile) -> DeformationProfile {
    match profile {
        OscillatorProfile::TwoParam => DeformationProfile::Generalized,
        _ => DeformationProfile::Standard,
    }
}

/// Normal form of `w` as seen by `profile`: the classical profile uses the
/// `q = 1` limit of the standard normal form.
pub fn profile_normal_form(alg: &Algebra, w: &Word, profile: OscillatorProfile) -> Result<Element> {
    let nf = alg.normalize(w)?;
    if profile != OscillatorProfile::Classical {
        return Ok(nf);
    }
    let mut out = Element::zero();
    for (nw, c) in classical_limit(&nf).terms() {
        // coefficients of a q=1 limit are integers
        out.add_term(nw.clone(), LaurentPoly::constant(c.to_integer()));
    }
    Ok(out)
}

/// `ρ(normalize(w)) = ρ(w)` on every sampled state.
pub fn oracle_consistency(
    w: &Word,
    profile: OscillatorProfile,
    k_range: RangeInclusive<i64>,
) -> Result<OscOutcome> {
    let alg = Algebra::new(engine_profile(profile));
    oracle_consistency_with(&alg, w, profile, k_range)
}

/// As [`oracle_consistency`], reusing a normalization context whose profile
/// must match the oscillator profile.
pub fn oracle_consistency_with(
    alg: &Algebra,
    w: &Word,
    profile: OscillatorProfile,
    k_range: RangeInclusive<i64>,
) -> Result<OscOutcome> {
    if !w.is_t_free() {
        return Err(Error::UnsupportedGenerator(format!("T in {w}")));
    }
    if alg.profile() != engine_profile(profile) {
        return Err(Error::RelationProfileMismatch {
            relation: "oracle-consistency".into(),
            profile: profile.name(),
        });
    }
    let nf = profile_normal_form(alg, w, profile)?;
    let mut cases = 0;
    for k in k_range {
        for occupied in [false, true] {
            cases += 1;
            let v = ModuleVector::state(k, occupied)?;
            let lhs = apply_element(&nf, &v, profile)?;
            let rhs = apply_word(w, &v, profile)?;
            if lhs != rhs {
                return Ok(OscOutcome {
                    holds: false,
                    cases,
                    witness: Some(format!(
                        "{w} on {}: difference {}",
                        FockLabel { k, occupied },
                        lhs.sub(&rhs)
                    )),
                });
            }
        }
    }
    Ok(OscOutcome {
        holds: true,
        cases,
        witness: None,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use Generator::*;

    #[test]
    fn ladder_actions() {
        let v = ModuleVector::state(3, false).unwrap();
        let got = apply_ladder(Ladder::A, &v, OscillatorProfile::Classical).unwrap();
        assert_eq!(
            got.coeff(FockLabel::new(2, false).unwrap()),
            LaurentPoly::constant(3)
        );

        let v = ModuleVector::state(1, false).unwrap();
        let got = apply_ladder(Ladder::A, &v, OscillatorProfile::QDeformed).unwrap();
        assert_eq!(
            got.coeff(FockLabel::new(0, false).unwrap()),
            LaurentPoly::q()
        );

        let v = ModuleVector::state(4, true).unwrap();
        assert!(apply_ladder(Ladder::BDag, &v, OscillatorProfile::QDeformed)
            .unwrap()
            .is_zero());
    }

    /// One-step recurrences that pin down the weights, with λ_0 = 0.
    #[test]
    fn weights_solve_the_boson_recurrence() {
        for k in -12..=12 {
            let c = OscillatorProfile::Classical;
            assert_eq!(
                &c.weight(k + 1).unwrap() - &c.weight(k).unwrap(),
                LaurentPoly::one()
            );
            let qd = OscillatorProfile::QDeformed;
            let lhs = &qd.weight(k + 1).unwrap().shift(-1, 0).unwrap()
                - &qd.weight(k).unwrap().shift(1, 0).unwrap();
            assert!(lhs.is_one(), "k = {k}: {lhs}");
            let tp = OscillatorProfile::TwoParam;
            let lhs = &tp.weight(k + 1).unwrap().shift(0, 1).unwrap()
                - &tp.weight(k).unwrap().shift(1, 0).unwrap();
            assert!(lhs.is_one(), "k = {k}: {lhs}");
        }
        for p in OscillatorProfile::ALL {
            assert!(p.weight(0).unwrap().is_zero());
        }
    }

    #[test]
    fn generator_actions() {
        let c = OscillatorProfile::Classical;
        let v = ModuleVector::state(3, false).unwrap();
        let got = apply_generator(L(1), &v, c).unwrap();
        assert_eq!(got, {
            let mut e = ModuleVector::zero();
            e.add_term(FockLabel::new(4, false).unwrap(), LaurentPoly::constant(3));
            e
        });
        for k in -4..=4 {
            let v = ModuleVector::state(k, true).unwrap();
            assert!(apply_generator(W(0), &v, c).unwrap().is_zero());
            let v = ModuleVector::state(k, false).unwrap();
            let got = apply_generator(L(-2), &v, OscillatorProfile::QDeformed).unwrap();
            let want = q_int(k, Vars::One).shift(k, 0).unwrap();
            assert_eq!(got.coeff(FockLabel::new(k - 2, false).unwrap()), want);
        }
        let v = ModuleVector::state(0, false).unwrap();
        assert!(matches!(
            apply_generator(T, &v, c),
            Err(Error::UnsupportedGenerator(_))
        ));
    }

    #[test]
    fn element_actions() {
        let p = OscillatorProfile::QDeformed;
        let v = ModuleVector::state(2, false).unwrap();
        assert_eq!(apply_element(&Element::one(), &v, p).unwrap(), v);
        let alg = Algebra::standard();
        let l1 = alg.generator(L(1)).unwrap();
        let sq = alg.multiply(&l1, &l1).unwrap();
        let zero = ModuleVector::state(0, false).unwrap();
        assert!(apply_element(&sq, &zero, p).unwrap().is_zero());
        for k in -5..=5 {
            let v = ModuleVector::state(k, false).unwrap();
            let nf = alg.normalize(&Word::new([L(2), L(1)])).unwrap();
            assert_eq!(
                apply_element(&nf, &v, p).unwrap(),
                apply_word(&Word::new([L(2), L(1)]), &v, p).unwrap()
            );
        }
        let tx = alg.generator(T).unwrap();
        assert!(apply_element(&tx, &v, p).is_err());
    }

    #[test]
    fn relations_hold() {
        use OscillatorProfile::*;
        assert!(
            check_relation(OscRelation::Qd(2), QDeformed, -10..=10)
                .unwrap()
                .holds
        );
        assert!(
            check_relation(OscRelation::Le(1, 2), Classical, -10..=10)
                .unwrap()
                .holds
        );
        assert!(
            check_relation(OscRelation::Qle(1, 2), QDeformed, -10..=10)
                .unwrap()
                .holds
        );
        assert!(
            check_relation(OscRelation::Gq(-2, 3), TwoParam, -10..=10)
                .unwrap()
                .holds
        );
        for p in OscillatorProfile::ALL {
            assert!(
                check_relation(OscRelation::Fermion, p, 0..=0)
                    .unwrap()
                    .holds
            );
            assert!(check_relation(OscRelation::Mixed, p, -3..=3).unwrap().holds);
            assert!(
                check_relation(OscRelation::boson_for(p), p, -12..=12)
                    .unwrap()
                    .holds
            );
        }
    }

    #[test]
    fn wrong_relation_is_caught() {
        // the classical bracket does not hold for the deformed weights
        let err =
            check_relation(OscRelation::Le(1, 2), OscillatorProfile::QDeformed, 0..=1).unwrap_err();
        assert!(matches!(err, Error::RelationProfileMismatch { .. }));
        let ops = OscRelation::Le(1, 2)
            .vanishing_operators(OscillatorProfile::Classical)
            .unwrap();
        let v = ModuleVector::state(3, false).unwrap();
        assert!(!ops[0]
            .apply(&v, OscillatorProfile::QDeformed)
            .unwrap()
            .is_zero());
    }

    #[test]
    fn oracle_examples() {
        use OscillatorProfile::*;
        assert!(
            oracle_consistency(&Word::new([L(2), L(1)]), QDeformed, -8..=8)
                .unwrap()
                .holds
        );
        for p in OscillatorProfile::ALL {
            assert!(
                oracle_consistency(&Word::new([W(1), W(0)]), p, -8..=8)
                    .unwrap()
                    .holds
            );
        }
        assert!(
            oracle_consistency(&Word::new([W(0), L(3), L(-1)]), QDeformed, -8..=8)
                .unwrap()
                .holds
        );
        assert!(oracle_consistency(&Word::new([T]), QDeformed, 0..=0).is_err());
    }

    #[test]
    fn module_text() {
        let mut v = ModuleVector::zero();
        v.add_term(FockLabel::new(-1, true).unwrap(), LaurentPoly::q_pow(2));
        v.add_term(FockLabel::new(2, false).unwrap(), -LaurentPoly::one());
        assert_eq!(v.to_string(), "q^2 * |-1,1> - |2,0>");
        assert!(FockLabel::new(GRADE_CAP + 1, false).is_err());
    }
}
