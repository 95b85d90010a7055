//! Acceptance criteria 1-11 for the qw22 engine. Every comparison is exact.

use std::path::PathBuf;
use std::process::Command;
use std::time::{Duration, Instant};

use qw22_core::algebra::{Element, Generator};
use qw22_core::coeff::q_identity_check;
use qw22_core::hopf::{Axiom, HopfMap, Relation, Subject};
use qw22_core::oscrep::{check_relation, oracle_consistency_with, OscRelation, OscillatorProfile};
use qw22_core::suites::{
    all_generators, case, closed_form_verdict, combination_element, osc_relations,
    random_combination, random_normal_word, random_word, recovery_verdict, round_trip_verdict,
    run_cases, Case, Ctx, MAX_POWER,
};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub struct Outcome {
    pub cases: usize,
    pub failed: usize,
    pub first: Option<String>,
}

fn run(cases: Vec<Case>) -> Outcome {
    match run_cases(&cases) {
        Ok((failed, first)) => Outcome {
            cases: cases.len(),
            failed,
            first,
        },
        Err(e) => Outcome {
            cases: cases.len(),
            failed: cases.len(),
            first: Some(format!("error: {e}")),
        },
    }
}

fn rng(criterion: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(0x5eed_0000 + criterion)
}

fn verdict(holds: bool, what: impl FnOnce() -> String) -> Option<String> {
    (!holds).then(what)
}

fn element_axiom_cases(
    x: impl Fn(&Ctx) -> qw22_core::Result<Element> + Clone + Send + Sync + 'static,
    label: String,
) -> Vec<Case> {
    [
        Axiom::Coassoc,
        Axiom::CounitLeft,
        Axiom::CounitRight,
        Axiom::AntipodeLeft,
        Axiom::AntipodeRight,
        Axiom::SSquared,
    ]
    .into_iter()
    .map(|axiom| {
        let x = x.clone();
        let label = label.clone();
        case(move |ctx| {
            let out = ctx.hopf.check_axiom(axiom, &Subject::Element(x(ctx)?))?;
            Ok(verdict(out.holds, || {
                format!(
                    "{} on {label}: {}",
                    axiom.id(),
                    out.witness.unwrap_or_default()
                )
            }))
        })
    })
    .collect()
}

fn pair_axiom_cases(
    xy: impl Fn(&Ctx) -> qw22_core::Result<(Element, Element)> + Clone + Send + Sync + 'static,
    label: String,
) -> Vec<Case> {
    [Axiom::DeltaHom, Axiom::SAntihom]
        .into_iter()
        .map(|axiom| {
            let xy = xy.clone();
            let label = label.clone();
            case(move |ctx| {
                let (x, y) = xy(ctx)?;
                let out = ctx.hopf.check_axiom(axiom, &Subject::Pair(x, y))?;
                Ok(verdict(out.holds, || {
                    format!(
                        "{} on {label}: {}",
                        axiom.id(),
                        out.witness.unwrap_or_default()
                    )
                }))
            })
        })
        .collect()
}

fn c1() -> Outcome {
    let mut cases = Vec::new();
    for m in -16..=16 {
        for n in -16..=16 {
            cases.push(case(move |_| {
                Ok(verdict(q_identity_check(m, n), || format!("m={m}, n={n}")))
            }));
        }
    }
    run(cases)
}

fn c2() -> Outcome {
    let mut r = rng(2);
    let cases = (0..500)
        .map(|_| {
            let w = random_normal_word(&mut r, 3, 4, 6);
            case(move |ctx| {
                let got = ctx.standard().normalize(&w.to_word())?;
                Ok(verdict(got == Element::basis(w.clone()), || {
                    format!("normalize({w}) = {got}")
                }))
            })
        })
        .collect();
    run(cases)
}

fn c3() -> Outcome {
    let mut r = rng(3);
    let cases = (0..300)
        .map(|_| {
            let parts: Vec<_> = (0..3)
                .map(|_| random_combination(&mut r, 4, 5, true))
                .collect();
            case(move |ctx| {
                let alg = ctx.standard();
                let x = combination_element(alg, &parts[0])?;
                let y = combination_element(alg, &parts[1])?;
                let z = combination_element(alg, &parts[2])?;
                let l = alg.multiply(&alg.multiply(&x, &y)?, &z)?;
                let rr = alg.multiply(&x, &alg.multiply(&y, &z)?)?;
                Ok(verdict(l == rr, || {
                    format!("x = {x}, y = {y}, z = {z}: (xy)z - x(yz) = {}", &l - &rr)
                }))
            })
        })
        .collect();
    run(cases)
}

fn c4() -> Outcome {
    let mut cases = Vec::new();
    for n in -8..=8 {
        for m in -8..=8 {
            for which in 0..3 {
                cases.push(case(move |ctx| round_trip_verdict(ctx, n, m, which)));
            }
        }
    }
    run(cases)
}

fn c5() -> Outcome {
    let gens = all_generators(8);
    let mut cases = Vec::new();
    for &g in &gens {
        cases.extend(element_axiom_cases(
            move |ctx| ctx.standard().generator(g),
            g.to_string(),
        ));
        for &h in &gens {
            cases.extend(pair_axiom_cases(
                move |ctx| Ok((ctx.standard().generator(g)?, ctx.standard().generator(h)?)),
                format!("({g}, {h})"),
            ));
        }
    }
    let mut r = rng(5);
    for _ in 0..200 {
        let u = random_word(&mut r, 3, 4, true);
        let v = random_word(&mut r, 3, 4, true);
        let uu = u.clone();
        cases.extend(element_axiom_cases(
            move |ctx| ctx.standard().normalize(&uu),
            u.to_string(),
        ));
        let label = format!("({u}, {v})");
        cases.extend(pair_axiom_cases(
            move |ctx| Ok((ctx.standard().normalize(&u)?, ctx.standard().normalize(&v)?)),
            label,
        ));
    }
    // one explicit violation of each kind must be exhibited
    let witness_gens = gens.clone();
    cases.push(case(move |ctx| {
        for &g in &witness_gens {
            let out = ctx.hopf.check_axiom(
                Axiom::CocommutativityWitness,
                &Subject::Element(ctx.standard().generator(g)?),
            )?;
            if out.holds {
                return Ok(None);
            }
        }
        Ok(Some(
            "no cocommutativity violation among generators with |n| <= 8".into(),
        ))
    }));
    cases.push(case(|ctx| {
        let alg = ctx.standard();
        let out = ctx.hopf.check_axiom(
            Axiom::CommutativityWitness,
            &Subject::Pair(
                alg.generator(Generator::L(1))?,
                alg.generator(Generator::L(2))?,
            ),
        )?;
        Ok(verdict(out.holds, || "L[1] and L[2] commute".into()))
    }));
    run(cases)
}

fn c6() -> Outcome {
    let mut cases = Vec::new();
    for relation in Relation::ALL.into_iter().skip(1) {
        for map in [HopfMap::Delta, HopfMap::Counit, HopfMap::Antipode] {
            for m in -8..=8 {
                for n in -8..=8 {
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
                        Ok(verdict(out.holds, || {
                            format!(
                                "{relation:?} under {map:?}, m={m}, n={n}: {}",
                                out.witness.unwrap_or_default()
                            )
                        }))
                    }));
                }
            }
        }
    }
    run(cases)
}

fn c7() -> Outcome {
    let mut cases = Vec::new();
    for n in -4..=4 {
        for x in [Generator::L(n), Generator::W(n)] {
            for r in 0..=MAX_POWER {
                for map in [HopfMap::Delta, HopfMap::Antipode] {
                    cases.push(case(move |ctx| closed_form_verdict(ctx, map, x, r)));
                }
            }
        }
    }
    run(cases)
}

fn c8() -> Outcome {
    let mut rels = Vec::new();
    for profile in OscillatorProfile::ALL {
        let mut list = osc_relations(profile, 6);
        list.extend((-10..=10).map(OscRelation::Qd));
        rels.extend(list.into_iter().map(|r| (profile, r)));
    }
    let cases = rels
        .into_iter()
        .map(|(profile, rel)| {
            case(move |_| {
                let out = check_relation(rel, profile, -12..=12)?;
                Ok(out.witness.map(|w| format!("{profile}: {w}")))
            })
        })
        .collect();
    run(cases)
}

fn c9() -> Outcome {
    let mut r = rng(9);
    let mut cases = Vec::new();
    for profile in OscillatorProfile::ALL {
        for _ in 0..1000 {
            let w = random_word(&mut r, 5, 5, false);
            cases.push(case(move |ctx| {
                let alg = match profile {
                    OscillatorProfile::TwoParam => &ctx.generalized,
                    _ => ctx.standard(),
                };
                let out = oracle_consistency_with(alg, &w, profile, -8..=8)?;
                Ok(out.witness.map(|wit| format!("{profile}: {wit}")))
            }));
        }
    }
    run(cases)
}

fn c10() -> Outcome {
    let mut cases = Vec::new();
    for n in -6..=6 {
        for m in -6..=6 {
            for which in 0..3 {
                cases.push(case(move |ctx| recovery_verdict(ctx, n, m, which)));
            }
        }
    }
    run(cases)
}

/// The `qw22` binary: `$QW22_BIN` if set, otherwise built next to this
/// test executable with the invoking cargo.
pub fn qw22_binary() -> Result<PathBuf, String> {
    if let Ok(p) = std::env::var("QW22_BIN") {
        return Ok(PathBuf::from(p));
    }
    let cargo = std::env::var("CARGO").unwrap_or_else(|_| "cargo".into());
    let status = Command::new(cargo)
        .args(["build", "--quiet", "-p", "qw22-core", "--bin", "qw22"])
        .status()
        .map_err(|e| format!("cannot run cargo: {e}"))?;
    if !status.success() {
        return Err("building qw22 failed".into());
    }
    let exe = std::env::current_exe().map_err(|e| e.to_string())?;
    let dir = exe
        .parent()
        .and_then(|d| d.parent())
        .ok_or("unexpected target layout")?;
    let bin = dir.join(format!("qw22{}", std::env::consts::EXE_SUFFIX));
    if bin.exists() {
        Ok(bin)
    } else {
        Err(format!("{} not found", bin.display()))
    }
}

fn cli(bin: &PathBuf, args: &[&str]) -> (i32, String) {
    let out = Command::new(bin)
        .args(args)
        .env_remove("QW22_SEED")
        .output()
        .expect("binary runs");
    (
        out.status.code().unwrap_or(-1),
        String::from_utf8_lossy(&out.stdout).into_owned(),
    )
}

fn c11() -> Outcome {
    let bin = match qw22_binary() {
        Ok(b) => b,
        Err(e) => {
            return Outcome {
                cases: 4,
                failed: 4,
                first: Some(e),
            }
        }
    };
    let cli = |args: &[&str]| cli(&bin, args);
    let mut failures = Vec::new();
    let (code, out) = cli(&["normalize", "L[2]*L[1]"]);
    if code != 0 || out != "q^-2 * L[1] L[2] - q^-1 * L[3]\n" {
        failures.push(format!("normalize: exit {code}, output {out:?}"));
    }
    let (code, out) = cli(&["counit", "T^2"]);
    if code != 0 || out != "1\n" {
        failures.push(format!("counit: exit {code}, output {out:?}"));
    }
    let (code, out) = cli(&[
        "check",
        "hopf-axioms",
        "--max-index",
        "4",
        "--max-len",
        "3",
        "--seed",
        "7",
    ]);
    if code != 0 || !out.contains("cases failed: 0\n") {
        let line = out
            .lines()
            .find(|l| l.starts_with("cases failed"))
            .unwrap_or("no report");
        failures.push(format!("check hopf-axioms: exit {code}, {line}"));
    }
    let (code, out) = cli(&["check", "all"]);
    if code != 0 {
        let failed: Vec<&str> = out
            .split("\n\n")
            .filter(|r| !r.contains("cases failed: 0\n"))
            .filter_map(|r| r.lines().next())
            .collect();
        failures.push(format!(
            "check all: exit {code}, failing {}",
            failed.join(", ")
        ));
    }
    Outcome {
        cases: 4,
        failed: failures.len(),
        first: (!failures.is_empty()).then(|| failures.join("; ")),
    }
}

pub struct Criterion {
    pub id: u32,
    pub name: &'static str,
    pub limit: Duration,
    pub run: fn() -> Outcome,
}

pub fn criteria() -> Vec<Criterion> {
    let secs = Duration::from_secs;
    vec![
        Criterion {
            id: 1,
            name: "q-identities",
            limit: secs(1),
            run: c1,
        },
        Criterion {
            id: 2,
            name: "basis stability",
            limit: secs(5),
            run: c2,
        },
        Criterion {
            id: 3,
            name: "associativity",
            limit: secs(30),
            run: c3,
        },
        Criterion {
            id: 4,
            name: "relation round-trip",
            limit: secs(5),
            run: c4,
        },
        Criterion {
            id: 5,
            name: "hopf axioms",
            limit: secs(60),
            run: c5,
        },
        Criterion {
            id: 6,
            name: "relation preservation",
            limit: secs(60),
            run: c6,
        },
        Criterion {
            id: 7,
            name: "closed forms",
            limit: secs(30),
            run: c7,
        },
        Criterion {
            id: 8,
            name: "oscillator oracle",
            limit: secs(30),
            run: c8,
        },
        Criterion {
            id: 9,
            name: "cross-validation",
            limit: secs(60),
            run: c9,
        },
        Criterion {
            id: 10,
            name: "generalized recovery",
            limit: secs(5),
            run: c10,
        },
        Criterion {
            id: 11,
            name: "cli contract",
            limit: secs(60),
            run: c11,
        },
    ]
}

/// Runs one criterion and renders its PASS/FAIL line.
pub fn evaluate(c: &Criterion) -> (bool, String) {
    let start = Instant::now();
    let out = (c.run)();
    let took = start.elapsed();
    let slow = took > c.limit;
    let ok = out.failed == 0 && !slow;
    let mut line = format!(
        "criterion {:>2} {:<22} {} {}/{} cases failed, {:.2?} (limit {:?})",
        c.id,
        c.name,
        if ok { "PASS" } else { "FAIL" },
        out.failed,
        out.cases,
        took,
        c.limit
    );
    if slow {
        line.push_str(", over time limit");
    }
    if let Some(first) = out.first {
        let mut short: String = first.chars().take(300).collect();
        if short.len() < first.len() {
            short.push_str("...");
        }
        line.push_str(&format!("; first: {short}"));
    }
    (ok, line)
}
