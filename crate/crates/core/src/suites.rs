//! Named verification suites. Cases run in parallel and are reported in a
//! fixed order.

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::families::{arrangement_report, five_points_counterexample, sym2_euler_check, ArrangementSpec};
use crate::hilbert::oracle::oracle_hilbert;
use crate::hilbert::{hilbert_function, Graded};
use crate::kv::{check_i2_isat, check_saturated_kv, kv_verdict};
use crate::modalg::{saturate, syzygies};
use crate::module::Submodule;
use crate::poly::{Polynomial, Ring};
use crate::random::{self, random_codim_two};

pub const SUITES: [&str; 7] = ["main-theorem", "herzog", "arrangements", "five-points", "sym2", "saturation-lemma", "oracle"];

/// Highest degree compared against the linear algebra oracle.
pub const ORACLE_DEGREE: i64 = 8;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CaseResult {
    pub label: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuiteOutcome {
    pub name: String,
    pub cases: Vec<CaseResult>,
}

impl SuiteOutcome {
    pub fn passed(&self) -> usize {
        self.cases.iter().filter(|c| c.passed).count()
    }

    pub fn all_passed(&self) -> bool {
        self.passed() == self.cases.len()
    }
}

pub fn default_trials(suite: &str) -> usize {
    match suite {
        "main-theorem" | "herzog" => 100,
        "saturation-lemma" => 25,
        "oracle" => 50,
        "five-points" => 3,
        "sym2" => 10,
        _ => 0,
    }
}

/// Fixed ideals used by several suites.
pub fn fixtures(ring: &Ring) -> Vec<(String, Vec<Polynomial>)> {
    let mut out: Vec<(String, Vec<Polynomial>)> = ["xy, xz, yz", "x^2, x*y, y^2", "x, y, x^2 + y^2", "x^2, x*z, y^2"]
        .iter()
        .map(|s| (s.to_string(), ring.parse_list(s).expect("fixture parses")))
        .collect();
    let k = ring.field();
    for (a, b) in [(vec![1, 2], vec![3]), (vec![2], vec![5, 7])] {
        let spec = ArrangementSpec::new(a.iter().map(|&c| k.elem(c)).collect(), b.iter().map(|&c| k.elem(c)).collect())
            .expect("valid fixture");
        let q = crate::families::build_arrangement(ring, &spec).expect("fixture arrangement");
        let label = format!("jacobian of arrangement ({}, {})", spec.m, spec.n);
        out.push((label, ring.jacobian(&q).expect("fixture jacobian").to_vec()));
    }
    out
}

/// Per-case seed derived from the suite seed.
pub fn case_seed(seed: u64, i: usize) -> u64 {
    seed.wrapping_add((i as u64 + 1).wrapping_mul(0x9E37_79B9_7F4A_7C15))
}

fn random_cases(ring: &Ring, trials: usize, seed: u64, max_degree: u32) -> Result<Vec<(String, Vec<Polynomial>)>> {
    (0..trials)
        .into_par_iter()
        .map(|i| {
            let ideal = random_codim_two(ring, &mut random::rng(case_seed(seed, i)), max_degree)?;
            Ok((format!("random #{i}"), ideal.generators))
        })
        .collect()
}

fn case(label: String, outcome: Result<(bool, String)>) -> CaseResult {
    match outcome {
        Ok((passed, detail)) => CaseResult { label, passed, detail },
        Err(e) => CaseResult { label, passed: false, detail: format!("error: {e}") },
    }
}

fn run_cases<F>(cases: Vec<(String, Vec<Polynomial>)>, f: F) -> Vec<CaseResult>
where
    F: Fn(&[Polynomial]) -> Result<(bool, String)> + Sync,
{
    cases.into_par_iter().map(|(label, gens)| case(label, f(&gens))).collect()
}

fn main_theorem_case(ring: &Ring, f: &[Polynomial]) -> Result<(bool, String)> {
    let rep = kv_verdict(ring, f)?;
    let ok = rep.consistent && rep.herzog_slack >= 0 && rep.identities().all() && rep.containment_chain()?;
    Ok((ok, format!("deg Z = {}, slack = {}, K=V {}, lci {}", rep.deg_z, rep.herzog_slack, rep.k_eq_v, rep.lci)))
}

fn oracle_case(ring: &Ring, f: &[Polynomial]) -> Result<(bool, String)> {
    let i = Submodule::ideal(*ring, f)?;
    let s = syzygies(&i)?;
    let mut mismatches = Vec::new();
    for n in 0..=ORACLE_DEGREE {
        for (name, g) in [("R/I", Graded::Quotient(&i)), ("I", Graded::Sub(&i)), ("S", Graded::Sub(&s))] {
            let (a, b) = (hilbert_function(g, n), oracle_hilbert(g, n)?);
            if a != b {
                mismatches.push(format!("{name} in degree {n}: {a} vs {b}"));
            }
        }
    }
    Ok((mismatches.is_empty(), if mismatches.is_empty() { "agree".into() } else { mismatches.join("; ") }))
}

pub fn run_suite(ring: &Ring, name: &str, trials: Option<usize>, seed: u64) -> Result<SuiteOutcome> {
    let trials = trials.unwrap_or_else(|| default_trials(name));
    let cases = match name {
        "main-theorem" => {
            let mut inputs: Vec<_> = fixtures(ring).into_iter().filter(|(l, _)| l != "x^2, x*z, y^2").collect();
            inputs.extend(random_cases(ring, trials, seed, 4)?);
            run_cases(inputs, |f| main_theorem_case(ring, f))
        }
        "herzog" => run_cases(random_cases(ring, trials, seed, 4)?, |f| {
            let rep = kv_verdict(ring, f)?;
            Ok((rep.herzog_slack >= 0, format!("slack = {}", rep.herzog_slack)))
        }),
        "arrangements" => {
            let specs: Vec<(usize, usize)> = (1..=4).flat_map(|m| (1..=4).map(move |n| (m, n))).collect();
            specs
                .into_par_iter()
                .enumerate()
                .map(|(i, (m, n))| {
                    let spec = ArrangementSpec::random(ring, &mut random::rng(case_seed(seed, i)), m, n);
                    case(
                        format!("(m, n) = ({m}, {n})"),
                        arrangement_report(ring, &spec).map(|r| {
                            let detail = format!(
                                "deg Z = {}, H(J/J^2) = {}, shifts {:?} over {:?}",
                                r.report.deg_z, r.report.h_i_mod_i2.polynomial, r.source_twists, r.target_twists
                            );
                            (r.formulas_hold(), detail)
                        }),
                    )
                })
                .collect()
        }
        "five-points" => (0..trials.max(1) as u64)
            .into_par_iter()
            .map(|i| {
                let s = seed + i;
                case(
                    format!("seed {s}"),
                    five_points_counterexample(ring, s).and_then(|fp| {
                        let witness = fp.witness().map_or("none".into(), |w| ring.display_vec(w));
                        Ok((fp.holds()?, format!("deg Z = {}, witness {witness}", fp.report.deg_z)))
                    }),
                )
            })
            .collect(),
        "sym2" => {
            let mut inputs: Vec<_> = fixtures(ring).into_iter().filter(|(l, _)| l != "x^2, x*z, y^2").collect();
            inputs.push(("x, y".into(), ring.parse_list("x, y")?));
            inputs.extend(random_cases(ring, trials, seed, 4)?);
            run_cases(inputs, |f| {
                let i = saturate(&Submodule::ideal(*ring, f)?)?;
                let rep = sym2_euler_check(&i)?;
                let lci = kv_verdict(ring, &i.polys())?.lci;
                let ok = rep.discrepancy.iter().all(|&d| d >= 0) && rep.verdict_iso == lci;
                Ok((ok, format!("total discrepancy {}, iso {}, lci {lci}", rep.total_discrepancy, rep.verdict_iso)))
            })
        }
        "saturation-lemma" => {
            let mut inputs = fixtures(ring);
            inputs.extend(random_cases(ring, trials, seed, 4)?);
            run_cases(inputs, |f| {
                let rep = kv_verdict(ring, f)?;
                let kv = check_saturated_kv(&rep)?;
                let squares = check_i2_isat(ring, f)?;
                Ok((kv && squares, format!("K, V saturated {kv}; sat(I^2) = sat(I I^sat) {squares}")))
            })
        }
        "oracle" => {
            let mut inputs = fixtures(ring);
            inputs.extend(random_cases(ring, trials, seed, 3)?);
            run_cases(inputs, |f| oracle_case(ring, f))
        }
        other => return Err(Error::InvalidInput(format!("unknown suite '{other}'; expected one of {}", SUITES.join(", ")))),
    };
    Ok(SuiteOutcome { name: name.to_string(), cases })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn unknown_suite() {
        assert!(run_suite(&Ring::default(), "nope", None, 0).is_err());
    }

    #[test]
    fn small_runs_pass() {
        let r = Ring::default();
        for name in SUITES {
            let out = run_suite(&r, name, Some(2), 1).unwrap();
            assert!(out.all_passed(), "{name}: {:?}", out.cases.iter().filter(|c| !c.passed).collect::<Vec<_>>());
        }
    }
}
