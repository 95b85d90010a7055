//! Named verification suites behind `qw22 check`.
//!
//! Random cases are drawn sequentially from a seeded ChaCha stream, then
//! evaluated in parallel; the report keeps the lowest-numbered failure, so a
//! given seed and bounds always produce the same report.

use std::fmt;
use std::str::FromStr;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::algebra::{classical_limit, Algebra, Element, Generator, NormalWord, Word};
use crate::coeff::{q_identity_check, q_int, LaurentPoly, Vars};
use crate::error::{Error, Result};
use crate::hopf::{Axiom, ClosedForm, Hopf, HopfMap, Relation, Subject};
use crate::oscrep::{check_relation, oracle_consistency_with, OscRelation, OscillatorProfile};

/// Highest power used by the closed-form suite.
pub const MAX_POWER: u32 = 6;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Suite {
    QIdentities,
    RewriteAssoc,
    BasisStability,
    HopfAxioms,
    ClosedForms,
    RelationPreservation,
    RepOracle,
    OscRelations,
    ClassicalLimit,
    All,
}

impl Suite {
    pub const EACH: [Suite; 9] = [
        Suite::QIdentities,
        Suite::RewriteAssoc,
        Suite::BasisStability,
        Suite::HopfAxioms,
        Suite::ClosedForms,
        Suite::RelationPreservation,
        Suite::RepOracle,
        Suite::OscRelations,
        Suite::ClassicalLimit,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::QIdentities => "q-identities",
            Suite::RewriteAssoc => "rewrite-assoc",
            Suite::BasisStability => "basis-stability",
            Suite::HopfAxioms => "hopf-axioms",
            Suite::ClosedForms => "closed-forms",
            Suite::RelationPreservation => "relation-preservation",
            Suite::RepOracle => "rep-oracle",
            Suite::OscRelations => "osc-relations",
            Suite::ClassicalLimit => "classical-limit",
            Suite::All => "all",
        }
    }

    fn profile(self) -> &'static str {
        match self {
            Suite::QIdentities | Suite::RewriteAssoc | Suite::BasisStability => "standard",
            Suite::HopfAxioms | Suite::ClosedForms | Suite::RelationPreservation => "standard",
            Suite::RepOracle | Suite::OscRelations => "classical,q-deformed,two-param",
            Suite::ClassicalLimit => "standard,generalized",
            Suite::All => "all",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Suite::EACH
            .into_iter()
            .chain([Suite::All])
            .find(|x| x.name() == s)
            .ok_or_else(|| Error::Usage(format!("unknown suite `{s}`")))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Bounds {
    pub max_index: i64,
    pub max_len: usize,
    pub k_min: i64,
    pub k_max: i64,
    pub cases: usize,
}

impl Default for Bounds {
    fn default() -> Self {
        Self {
            max_index: 4,
            max_len: 3,
            k_min: -8,
            k_max: 8,
            cases: 200,
        }
    }
}

impl fmt::Display for Bounds {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "max-index={} max-len={} k-range={}..{} cases={}",
            self.max_index, self.max_len, self.k_min, self.k_max, self.cases
        )
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckReport {
    pub suite: String,
    pub profile: String,
    pub bounds: Bounds,
    pub seed: u64,
    pub cases_run: usize,
    pub cases_failed: usize,
    pub first_counterexample: Option<String>,
    #[serde(skip)]
    pub wall_time: Duration,
}

impl CheckReport {
    pub fn passed(&self) -> bool {
        self.cases_failed == 0
    }
}

impl fmt::Display for CheckReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "suite: {}", self.suite)?;
        writeln!(f, "profile: {}", self.profile)?;
        writeln!(f, "bounds: {}", self.bounds)?;
        writeln!(f, "seed: {}", self.seed)?;
        writeln!(f, "cases run: {}", self.cases_run)?;
        writeln!(f, "cases failed: {}", self.cases_failed)?;
        match &self.first_counterexample {
            Some(c) => write!(f, "first counterexample: {c}"),
            None => write!(f, "first counterexample: none"),
        }
    }
}

/// Per-thread normalization state.
pub struct Ctx {
    pub hopf: Hopf,
    pub generalized: Algebra,
}

impl Ctx {
    pub fn new() -> Self {
        Self {
            hopf: Hopf::new(),
            generalized: Algebra::generalized(),
        }
    }

    pub fn standard(&self) -> &Algebra {
        self.hopf.algebra()
    }
}

impl Default for Ctx {
    fn default() -> Self {
        Self::new()
    }
}

/// `None` on success, otherwise a description of the failure.
pub type Verdict = Option<String>;

/// One parallelizable check.
pub type Case = Box<dyn Fn(&Ctx) -> Result<Verdict> + Send + Sync>;

pub fn case(f: impl Fn(&Ctx) -> Result<Verdict> + Send + Sync + 'static) -> Case {
    Box::new(f)
}

/// Runs cases in parallel; errors propagate, failures are counted.
pub fn run_cases(cases: &[Case]) -> Result<(usize, Option<String>)> {
    let verdicts: Vec<Result<Verdict>> = cases
        .par_iter()
        .map_init(Ctx::new, |ctx, c| c(ctx))
        .collect();
    let mut failed = 0;
    let mut first = None;
    for v in verdicts {
        if let Some(msg) = v? {
            failed += 1;
            first.get_or_insert(msg);
        }
    }
    Ok((failed, first))
}

// ---- sampling ----

pub fn random_generator(rng: &mut impl Rng, max_index: i64, allow_t: bool) -> Generator {
    let n = rng.gen_range(-max_index..=max_index);
    let kinds = if allow_t { 4 } else { 2 };
    match rng.gen_range(0..kinds) {
        0 => Generator::L(n),
        1 => Generator::W(n),
        2 => Generator::T,
        _ => Generator::TInv,
    }
}

/// A word of length `1..=max_len`.
pub fn random_word(rng: &mut impl Rng, max_len: usize, max_index: i64, allow_t: bool) -> Word {
    let len = rng.gen_range(1..=max_len.max(1));
    (0..len)
        .map(|_| random_generator(rng, max_index, allow_t))
        .collect()
}

/// A basis monomial with `|d| <= max_t` and up to `max_factors` factors per block.
pub fn random_normal_word(
    rng: &mut impl Rng,
    max_t: i64,
    max_factors: usize,
    max_index: i64,
) -> NormalWord {
    let block = |rng: &mut dyn rand::RngCore| {
        let k = rng.gen_range(0..=max_factors);
        let mut idx: Vec<i64> = (0..k)
            .map(|_| rng.gen_range(-max_index..=max_index))
            .collect();
        idx.sort_unstable();
        let mut out: Vec<(i64, u32)> = Vec::new();
        for i in idx {
            match out.last_mut() {
                Some((j, m)) if *j == i => *m += 1,
                _ => out.push((i, 1)),
            }
        }
        out
    };
    let t = rng.gen_range(-max_t..=max_t);
    let l = block(rng);
    let w = block(rng);
    NormalWord::from_parts(t, l, w)
        .expect("indices within cap")
        .expect("blocks are sorted")
}

/// A formal combination of one or two words with coefficients `±q^e`.
pub fn random_combination(
    rng: &mut impl Rng,
    max_len: usize,
    max_index: i64,
    allow_t: bool,
) -> Vec<(LaurentPoly, Word)> {
    let terms = rng.gen_range(1..=2);
    (0..terms)
        .map(|_| {
            let sign = if rng.gen_bool(0.5) { 1 } else { -1 };
            let c = LaurentPoly::monomial(sign, rng.gen_range(-2..=2), 0);
            (c, random_word(rng, max_len, max_index, allow_t))
        })
        .collect()
}

pub fn combination_element(alg: &Algebra, terms: &[(LaurentPoly, Word)]) -> Result<Element> {
    let mut out = Element::zero();
    for (c, w) in terms {
        out.add_scaled(&alg.normalize(w)?, c)?;
    }
    Ok(out)
}

fn rng_for(seed: u64, suite: Suite) -> ChaCha8Rng {
    // separate stream per suite so `all` matches the individual runs
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(suite as u64);
    rng
}

fn indices(max_index: i64) -> impl Iterator<Item = (i64, i64)> + Clone {
    (-max_index..=max_index).flat_map(move |m| (-max_index..=max_index).map(move |n| (m, n)))
}

fn axiom_verdict(axiom: Axiom, what: impl fmt::Display, out: crate::hopf::AxiomOutcome) -> Verdict {
    if out.holds {
        None
    } else {
        Some(format!(
            "{} on {what}: {}",
            axiom.id(),
            out.witness.unwrap_or_else(|| "no witness found".into())
        ))
    }
}

// ---- suites ----

fn q_identity_cases(b: &Bounds) -> Vec<Case> {
    indices(b.max_index)
        .map(|(m, n)| {
            case(move |_| {
                Ok((!q_identity_check(m, n)).then(|| format!("q-identities fail at m={m}, n={n}")))
            })
        })
        .collect()
}

fn assoc_cases(b: &Bounds, rng: &mut ChaCha8Rng) -> Vec<Case> {
    (0..b.cases)
        .map(|_| {
            let parts: Vec<_> = (0..3)
                .map(|_| random_combination(rng, b.max_len, b.max_index, true))
                .collect();
            case(move |ctx| {
                let alg = ctx.standard();
                let x = combination_element(alg, &parts[0])?;
                let y = combination_element(alg, &parts[1])?;
                let z = combination_element(alg, &parts[2])?;
                let left = alg.multiply(&alg.multiply(&x, &y)?, &z)?;
                let right = alg.multiply(&x, &alg.multiply(&y, &z)?)?;
                Ok((left != right).then(|| {
                    format!(
                        "(x y) z - x (y z) = {} for x = {x}, y = {y}, z = {z}",
                        &left - &right
                    )
                }))
            })
        })
        .collect()
}

fn basis_cases(b: &Bounds, rng: &mut ChaCha8Rng) -> Vec<Case> {
    (0..b.cases)
        .map(|_| {
            let w = random_normal_word(rng, 3, b.max_len, b.max_index);
            case(move |ctx| {
                let got = ctx.standard().normalize(&w.to_word())?;
                Ok((got != Element::basis(w.clone())).then(|| format!("normalize({w}) = {got}")))
            })
        })
        .collect()
}

const ELEMENT_AXIOMS: [Axiom; 6] = [
    Axiom::Coassoc,
    Axiom::CounitLeft,
    Axiom::CounitRight,
    Axiom::AntipodeLeft,
    Axiom::AntipodeRight,
    Axiom::SSquared,
];

const PAIR_AXIOMS: [Axiom; 2] = [Axiom::DeltaHom, Axiom::SAntihom];

pub fn all_generators(max_index: i64) -> Vec<Generator> {
    let mut out = vec![Generator::T, Generator::TInv];
    for n in -max_index..=max_index {
        out.push(Generator::L(n));
        out.push(Generator::W(n));
    }
    out
}

fn hopf_cases(b: &Bounds, rng: &mut ChaCha8Rng) -> Vec<Case> {
    let gens = all_generators(b.max_index);
    let mut cases = Vec::new();
    for &g in &gens {
        for axiom in ELEMENT_AXIOMS {
            cases.push(case(move |ctx| {
                let x = ctx.standard().generator(g)?;
                Ok(axiom_verdict(
                    axiom,
                    g,
                    ctx.hopf.check_axiom(axiom, &Subject::Element(x))?,
                ))
            }));
        }
        for &h in &gens {
            for axiom in PAIR_AXIOMS {
                cases.push(case(move |ctx| {
                    let x = ctx.standard().generator(g)?;
                    let y = ctx.standard().generator(h)?;
                    Ok(axiom_verdict(
                        axiom,
                        format!("({g}, {h})"),
                        ctx.hopf.check_axiom(axiom, &Subject::Pair(x, y))?,
                    ))
                }));
            }
        }
    }
    for _ in 0..b.cases {
        let u = random_word(rng, b.max_len, b.max_index, true);
        let v = random_word(rng, b.max_len, b.max_index, true);
        cases.push(case(move |ctx| {
            let x = ctx.standard().normalize(&u)?;
            let y = ctx.standard().normalize(&v)?;
            for axiom in ELEMENT_AXIOMS {
                let out = ctx.hopf.check_axiom(axiom, &Subject::Element(x.clone()))?;
                if let Some(msg) = axiom_verdict(axiom, &u, out) {
                    return Ok(Some(msg));
                }
            }
            for axiom in PAIR_AXIOMS {
                let out = ctx
                    .hopf
                    .check_axiom(axiom, &Subject::Pair(x.clone(), y.clone()))?;
                if let Some(msg) = axiom_verdict(axiom, format!("({u}, {v})"), out) {
                    return Ok(Some(msg));
                }
            }
            Ok(None)
        }));
    }
    let witness_gens = gens.clone();
    cases.push(case(move |ctx| {
        for &g in &witness_gens {
            let x = ctx.standard().generator(g)?;
            if ctx
                .hopf
                .check_axiom(Axiom::CocommutativityWitness, &Subject::Element(x))?
                .holds
            {
                return Ok(None);
            }
        }
        Ok(Some(format!(
            "cocommutativity-witness: flip(Δ(x)) = Δ(x) for every generator with |n| <= {}",
            b_max(&witness_gens)
        )))
    }));
    cases.push(case(move |ctx| {
        for &g in &gens {
            for &h in &gens {
                let x = ctx.standard().generator(g)?;
                let y = ctx.standard().generator(h)?;
                if ctx
                    .hopf
                    .check_axiom(Axiom::CommutativityWitness, &Subject::Pair(x, y))?
                    .holds
                {
                    return Ok(None);
                }
            }
        }
        Ok(Some(
            "commutativity-witness: all generator pairs commute".into(),
        ))
    }));
    cases
}

fn b_max(gens: &[Generator]) -> i64 {
    gens.iter()
        .filter_map(|g| g.index())
        .map(i64::abs)
        .max()
        .unwrap_or(0)
}

/// `power_closed_form` against `Δ` and `S` of the computed power.
pub fn closed_form_verdict(ctx: &Ctx, map: HopfMap, x: Generator, r: u32) -> Result<Verdict> {
    let n = x.index().expect("L or W");
    let alg = ctx.standard();
    let power = alg.pow(&alg.generator(x)?, r as i64)?;
    let ok = match ctx.hopf.power_closed_form(map, x, n, r)? {
        ClosedForm::Tensor(t) => t == ctx.hopf.coproduct(&power)?,
        ClosedForm::Element(e) => e == ctx.hopf.antipode(&power)?,
    };
    Ok((!ok)
        .then(|| format!("closed form of {map:?}(({x})^{r}) differs from the direct computation")))
}

fn closed_form_cases(b: &Bounds) -> Vec<Case> {
    let mut cases = Vec::new();
    for n in -b.max_index..=b.max_index {
        for x in [Generator::L(n), Generator::W(n)] {
            for r in 0..=MAX_POWER {
                for map in [HopfMap::Delta, HopfMap::Antipode] {
                    cases.push(case(move |ctx| closed_form_verdict(ctx, map, x, r)));
                }
            }
        }
    }
    cases
}

fn relation_cases(b: &Bounds) -> Vec<Case> {
    let mut cases = Vec::new();
    for relation in Relation::ALL {
        for map in [HopfMap::Delta, HopfMap::Counit, HopfMap::Antipode] {
            let pairs: Vec<(i64, i64)> = if relation == Relation::TInverse {
                vec![(0, 0)]
            } else {
                indices(b.max_index).collect()
            };
            for (m, n) in pairs {
                cases.push(case(move |ctx| {
                    let out = ctx.hopf.check_axiom(
                        Axiom::RelationPreservation,
                        &Subject::Relation {
                            relation,
                            map,
                            m,
                            n,
                        },
                    )?;
                    Ok(axiom_verdict(
                        Axiom::RelationPreservation,
                        format!("{relation:?} under {map:?} at m={m}, n={n}"),
                        out,
                    ))
                }));
            }
        }
    }
    cases
}

fn rep_oracle_cases(b: &Bounds, rng: &mut ChaCha8Rng) -> Vec<Case> {
    let mut cases = Vec::new();
    for profile in OscillatorProfile::ALL {
        for _ in 0..b.cases {
            let w = random_word(rng, b.max_len, b.max_index, false);
            let (lo, hi) = (b.k_min, b.k_max);
            cases.push(case(move |ctx| {
                let alg = match profile {
                    OscillatorProfile::TwoParam => &ctx.generalized,
                    _ => ctx.standard(),
                };
                let out = oracle_consistency_with(alg, &w, profile, lo..=hi)?;
                Ok(out.witness.map(|wit| format!("{profile}: {wit}")))
            }));
        }
    }
    cases
}

/// The module identities for one profile within the bounds.
pub fn osc_relations(profile: OscillatorProfile, max_index: i64) -> Vec<OscRelation> {
    let mut rels = vec![
        OscRelation::boson_for(profile),
        OscRelation::Fermion,
        OscRelation::Mixed,
    ];
    rels.extend((-max_index..=max_index).map(OscRelation::Qd));
    for (m, n) in indices(max_index) {
        rels.push(match profile {
            OscillatorProfile::Classical => OscRelation::Le(m, n),
            OscillatorProfile::QDeformed => OscRelation::Qle(m, n),
            OscillatorProfile::TwoParam => OscRelation::Gq(m, n),
        });
    }
    rels
}

fn osc_cases(b: &Bounds) -> Vec<Case> {
    let mut cases = Vec::new();
    for profile in OscillatorProfile::ALL {
        for rel in osc_relations(profile, b.max_index) {
            let (lo, hi) = (b.k_min, b.k_max);
            cases.push(case(move |_| {
                let out = check_relation(rel, profile, lo..=hi)?;
                Ok(out.witness.map(|wit| format!("{profile}: {wit}")))
            }));
        }
    }
    cases
}

fn bracket_generators(n: i64, m: i64, which: usize) -> (Generator, Generator, Option<Generator>) {
    match which {
        0 => (Generator::L(n), Generator::L(m), Some(Generator::L(m + n))),
        1 => (Generator::L(n), Generator::W(m), Some(Generator::W(m + n))),
        _ => (Generator::W(n), Generator::W(m), None),
    }
}

/// `[X_n, Y_m]_{(q^{n-m}, q^{m-n})}` against `[m-n]_q Z_{m+n}`, and its
/// `q = 1` limit against `(m-n) Z_{m+n}`.
pub fn round_trip_verdict(ctx: &Ctx, n: i64, m: i64, which: usize) -> Result<Verdict> {
    let alg = ctx.standard();
    let (x, y, z) = bracket_generators(n, m, which);
    let got = alg.q_bracket(
        &alg.generator(x)?,
        &alg.generator(y)?,
        &LaurentPoly::q_pow(n - m),
        &LaurentPoly::q_pow(m - n),
    )?;
    let mut want = Element::zero();
    let mut classical = Element::zero();
    if let Some(z) = z {
        want = alg.generator(z)?.scale(&q_int(m - n, Vars::One))?;
        classical = alg.generator(z)?.scale(&LaurentPoly::constant(m - n))?;
    }
    if got != want {
        return Ok(Some(format!("[{x}, {y}] = {got}, expected {want}")));
    }
    let limit = classical_limit(&got);
    if limit != classical_limit(&classical) {
        return Ok(Some(format!(
            "classical limit of [{x}, {y}] = {limit}, expected {classical}"
        )));
    }
    Ok(None)
}

/// Two-parameter bracket against its right-hand side, and its `p = q^-1`
/// specialization against the standard bracket.
pub fn recovery_verdict(ctx: &Ctx, n: i64, m: i64, which: usize) -> Result<Verdict> {
    let gen = &ctx.generalized;
    let (x, y, z) = bracket_generators(n, m, which);
    let got = gen.q_bracket(
        &gen.generator(x)?,
        &gen.generator(y)?,
        &LaurentPoly::q_pow(n - m),
        &LaurentPoly::p_pow(n - m),
    )?;
    let want = match z {
        Some(z) => gen.generator(z)?.scale(&-q_int(n - m, Vars::Two))?,
        None => Element::zero(),
    };
    if got != want {
        return Ok(Some(format!(
            "two-parameter [{x}, {y}] = {got}, expected {want}"
        )));
    }
    let specialized = got.map_coeffs(|c| c.substitute_p_inverse_q())?;
    let alg = ctx.standard();
    let standard = alg.q_bracket(
        &alg.generator(x)?,
        &alg.generator(y)?,
        &LaurentPoly::q_pow(n - m),
        &LaurentPoly::q_pow(m - n),
    )?;
    Ok((specialized != standard)
        .then(|| format!("p = q^-1 gives {specialized} for [{x}, {y}], standard gives {standard}")))
}

fn classical_limit_cases(b: &Bounds) -> Vec<Case> {
    let mut cases = Vec::new();
    for (n, m) in indices(b.max_index) {
        for which in 0..3 {
            cases.push(case(move |ctx| round_trip_verdict(ctx, n, m, which)));
            cases.push(case(move |ctx| recovery_verdict(ctx, n, m, which)));
        }
    }
    cases
}

fn validate(b: &Bounds) -> Result<()> {
    if b.max_index < 0 || b.max_len == 0 || b.k_min > b.k_max {
        return Err(Error::Usage(format!("invalid bounds: {b}")));
    }
    crate::algebra::check_index(2 * b.max_index)?;
    Ok(())
}

/// Runs one suite (or every suite for [`Suite::All`]).
pub fn run(suite: Suite, bounds: &Bounds, seed: u64) -> Result<Vec<CheckReport>> {
    validate(bounds)?;
    if suite == Suite::All {
        let mut out = Vec::new();
        for s in Suite::EACH {
            out.extend(run(s, bounds, seed)?);
        }
        return Ok(out);
    }
    let start = Instant::now();
    let mut rng = rng_for(seed, suite);
    let cases = match suite {
        Suite::QIdentities => q_identity_cases(bounds),
        Suite::RewriteAssoc => assoc_cases(bounds, &mut rng),
        Suite::BasisStability => basis_cases(bounds, &mut rng),
        Suite::HopfAxioms => hopf_cases(bounds, &mut rng),
        Suite::ClosedForms => closed_form_cases(bounds),
        Suite::RelationPreservation => relation_cases(bounds),
        Suite::RepOracle => rep_oracle_cases(bounds, &mut rng),
        Suite::OscRelations => osc_cases(bounds),
        Suite::ClassicalLimit => classical_limit_cases(bounds),
        Suite::All => unreachable!(),
    };
    let (failed, first) = run_cases(&cases)?;
    Ok(vec![CheckReport {
        suite: suite.name().into(),
        profile: suite.profile().into(),
        bounds: *bounds,
        seed,
        cases_run: cases.len(),
        cases_failed: failed,
        first_counterexample: first,
        wall_time: start.elapsed(),
    }])
}

#[cfg(test)]
mod tests {
    use super::*;

    fn small() -> Bounds {
        Bounds {
            max_index: 2,
            max_len: 2,
            k_min: -3,
            k_max: 3,
            cases: 10,
        }
    }

    #[test]
    fn deterministic_reports() {
        let a = run(Suite::RewriteAssoc, &small(), 11).unwrap();
        let b = run(Suite::RewriteAssoc, &small(), 11).unwrap();
        assert_eq!(a[0].to_string(), b[0].to_string());
        assert_eq!(a[0].cases_run, 10);
    }

    #[test]
    fn passing_suites() {
        for s in [
            Suite::QIdentities,
            Suite::BasisStability,
            Suite::ClosedForms,
            Suite::RepOracle,
            Suite::OscRelations,
            Suite::ClassicalLimit,
        ] {
            let r = &run(s, &small(), 1).unwrap()[0];
            assert!(r.passed(), "{r}");
        }
    }

    #[test]
    fn names_round_trip() {
        for s in Suite::EACH {
            assert_eq!(s.name().parse::<Suite>().unwrap(), s);
        }
        assert!("nope".parse::<Suite>().is_err());
    }

    #[test]
    fn normal_words_are_sorted() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for _ in 0..50 {
            let w = random_normal_word(&mut rng, 3, 4, 6);
            assert!(w.to_word().is_normal());
        }
    }

    #[test]
    fn bad_bounds() {
        let b = Bounds {
            max_len: 0,
            ..small()
        };
        assert!(matches!(
            run(Suite::QIdentities, &b, 0),
            Err(Error::Usage(_))
        ));
    }
}
