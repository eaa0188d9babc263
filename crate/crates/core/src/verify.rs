//! Named identity suites. Each check records a label, what it verifies, and
//! on failure both sides of the comparison.

use std::fmt;
use std::str::FromStr;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::charmult::{decompose_tensor_square, is_minuscule, is_small, is_wmf, weyl_dimension};
use crate::dynkin::{
    dynkin_minuscule, dynkin_product, dynkin_sum, hermite_identities, table1_entries,
    verify_spindle,
};
use crate::endalg_a::{end_alg_report, RepKind};
use crate::qanalogues::{
    end_jump_polynomial, f_lambda, jump_polynomial, jump_tensor, lusztig_q_multiplicity,
    poincare_cg, poincare_ct, t0_by_heights, t_poly, t_ratio,
};
use crate::qpoly::{cyclo_product, QPolynomial};
use crate::truncsym::truncsym_report;
use crate::weightlat::{RootSystem, TypeLetter, Weight};
use crate::{Budget, Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Suite {
    Table1,
    Spindle,
    LusztigVsJump,
    DynkinCross,
    WmfIff,
    MinusculeSeries,
    KostantT0,
    Hermite,
    Endalg,
    Truncsym,
}

impl Suite {
    pub const ALL: [Suite; 10] = [
        Suite::Table1,
        Suite::DynkinCross,
        Suite::Spindle,
        Suite::LusztigVsJump,
        Suite::WmfIff,
        Suite::MinusculeSeries,
        Suite::KostantT0,
        Suite::Endalg,
        Suite::Truncsym,
        Suite::Hermite,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Table1 => "table1",
            Suite::Spindle => "spindle",
            Suite::LusztigVsJump => "lusztig-vs-jump",
            Suite::DynkinCross => "dynkin-cross",
            Suite::WmfIff => "wmf-iff",
            Suite::MinusculeSeries => "minuscule-series",
            Suite::KostantT0 => "kostant-t0",
            Suite::Hermite => "hermite",
            Suite::Endalg => "endalg",
            Suite::Truncsym => "truncsym",
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
    fn from_str(s: &str) -> Result<Suite> {
        Suite::ALL
            .into_iter()
            .find(|x| x.name() == s)
            .ok_or_else(|| Error::Usage(format!("unknown suite {s:?}")))
    }
}

/// Grid overrides; `None` means the suite's own default.
#[derive(Debug, Clone)]
pub struct VerifyOptions {
    pub max_rank: Option<usize>,
    pub height_bound: Option<usize>,
    pub budget: Budget,
    pub seed: u64,
    pub samples: usize,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions {
            max_rank: None,
            height_bound: None,
            budget: Budget::default(),
            seed: 20240601,
            samples: 200,
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct Check {
    pub label: String,
    pub reference: &'static str,
    pub passed: bool,
    pub detail: Option<String>,
}

impl Check {
    fn pass(label: String, reference: &'static str) -> Check {
        Check {
            label,
            reference,
            passed: true,
            detail: None,
        }
    }

    fn fail(label: String, reference: &'static str, detail: String) -> Check {
        Check {
            label,
            reference,
            passed: false,
            detail: Some(detail),
        }
    }

    fn from_result(label: String, reference: &'static str, r: Result<Option<String>>) -> Check {
        match r {
            Ok(None) => Check::pass(label, reference),
            Ok(Some(d)) => Check::fail(label, reference, d),
            Err(e) => Check::fail(label, reference, format!("error: {e}")),
        }
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let tag = if self.passed { "PASS" } else { "FAIL" };
        write!(f, "{tag}  {}  [{}]", self.label, self.reference)?;
        if let Some(d) = &self.detail {
            write!(f, "\n      {d}")?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct SuiteReport {
    pub suite: Suite,
    pub checks: Vec<Check>,
    #[serde(skip)]
    pub elapsed: Duration,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.passed)
    }
}

pub fn run_suite(suite: Suite, opts: &VerifyOptions) -> SuiteReport {
    let start = Instant::now();
    let checks = match suite {
        Suite::Table1 => table1(opts),
        Suite::DynkinCross => dynkin_cross(opts),
        Suite::Spindle => spindle(opts),
        Suite::LusztigVsJump => lusztig_vs_jump(opts),
        Suite::WmfIff => wmf_iff(opts),
        Suite::MinusculeSeries => minuscule_series(opts),
        Suite::KostantT0 => kostant_t0(opts),
        Suite::Endalg => endalg(opts),
        Suite::Truncsym => truncsym(opts),
        Suite::Hermite => hermite(opts),
    };
    SuiteReport {
        suite,
        checks,
        elapsed: start.elapsed(),
    }
}

/// Root systems of every type in canonical ranks up to `max_rank`.
pub fn root_systems_up_to(max_rank: usize) -> Vec<RootSystem> {
    TypeLetter::ALL
        .iter()
        .flat_map(|&t| t.canonical_ranks(max_rank).into_iter().map(move |l| (t, l)))
        .map(|(t, l)| RootSystem::new(t, l).expect("canonical rank"))
        .collect()
}

fn named(types: &[(TypeLetter, usize)]) -> Vec<RootSystem> {
    types
        .iter()
        .map(|&(t, l)| RootSystem::new(t, l).expect("valid type"))
        .collect()
}

fn label(rs: &RootSystem, w: &Weight) -> String {
    format!("{rs} {w}")
}

/// Every row of the wmf table against the root product, with the minuscule and wmf
/// columns checked too.
fn table1(opts: &VerifyOptions) -> Vec<Check> {
    const REF: &str = "Dynkin polynomials of the wmf representations";
    let max_n = opts.max_rank.unwrap_or(8);
    table1_entries(max_n, 5)
        .par_iter()
        .map(|e| {
            let r = (|| {
                let rs = RootSystem::new(e.type_letter, e.rank)?;
                let got = dynkin_product(&rs, &e.weight)?;
                let expected = e.expected();
                if got != expected {
                    return Ok(Some(format!(
                        "expected {} = {expected}, got {got}",
                        e.factored()
                    )));
                }
                if is_minuscule(&rs, &e.weight)? != e.minuscule {
                    return Ok(Some(format!("minuscule column says {}", e.minuscule)));
                }
                if !is_wmf(&rs, &e.weight, &opts.budget)? {
                    return Ok(Some(
                        "representation is not weight multiplicity free".into(),
                    ));
                }
                Ok(None)
            })();
            Check::from_result(format!("{} ({})", e.label(), e.row), REF, r)
        })
        .collect()
}

/// Character floors against the root product, and the minuscule quotient
/// against the root product.
fn dynkin_cross(opts: &VerifyOptions) -> Vec<Check> {
    const SUM: &str = "floor sum = root product";
    const MIN: &str = "minuscule quotient t_0/t_λ = root product";
    let max_rank = opts.max_rank.unwrap_or(4);
    let bound2 = 2 * opts.height_bound.unwrap_or(5) as i64;
    let mut cases: Vec<(RootSystem, Weight)> = Vec::new();
    for rs in root_systems_up_to(max_rank) {
        for w in rs.dominant_weights_up_to(bound2) {
            cases.push((rs.clone(), w));
        }
    }
    for e in table1_entries(opts.max_rank.unwrap_or(8), 5) {
        let rs = RootSystem::new(e.type_letter, e.rank).expect("table type");
        if weyl_dimension(&rs, &e.weight) <= BigInt::from(100_000) {
            cases.push((rs, e.weight));
        }
    }
    let mut checks: Vec<Check> = cases
        .par_iter()
        .map(|(rs, w)| {
            let r = dynkin_product(rs, w).and_then(|p| {
                let s = dynkin_sum(rs, w, &opts.budget)?;
                Ok((p != s).then(|| format!("product {p}, floor sum {s}")))
            });
            Check::from_result(label(rs, w), SUM, r)
        })
        .collect();

    let mut minuscule: Vec<(RootSystem, Weight)> = Vec::new();
    for rs in root_systems_up_to(opts.max_rank.unwrap_or(8)) {
        for i in 1..=rs.rank() {
            let w = Weight::fundamental(rs.rank(), i);
            if is_minuscule(&rs, &w).unwrap_or(false) {
                minuscule.push((rs.clone(), w));
            }
        }
    }
    checks.par_extend(minuscule.par_iter().map(|(rs, w)| {
        let r = dynkin_product(rs, w).and_then(|p| {
            let m = dynkin_minuscule(rs, w)?;
            Ok((p != m).then(|| format!("product {p}, quotient {m}")))
        });
        Check::from_result(label(rs, w), MIN, r)
    }));
    checks
}

/// Symmetry and unimodality on randomly sampled dominant weights.
fn spindle(opts: &VerifyOptions) -> Vec<Check> {
    const REF: &str = "D_λ is symmetric and unimodal";
    let systems = root_systems_up_to(opts.max_rank.unwrap_or(6));
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    let max_coord = opts.height_bound.unwrap_or(4) as i64;
    let cases: Vec<(usize, Weight)> = (0..opts.samples)
        .map(|_| {
            let k = rng.gen_range(0..systems.len());
            let l = systems[k].rank();
            (
                k,
                Weight((0..l).map(|_| rng.gen_range(0..=max_coord)).collect()),
            )
        })
        .collect();
    cases
        .par_iter()
        .map(|(k, w)| {
            let rs = &systems[*k];
            let r = verify_spindle(rs, w).map(|rep| {
                (!rep.all_hold()).then(|| {
                    format!(
                        "D = {}: symmetric {} (first break {:?}), unimodal {} (first break {:?}), degree law {}, dimension law {}",
                        rep.polynomial,
                        rep.symmetric,
                        rep.symmetry_violation,
                        rep.unimodal,
                        rep.unimodality_violation,
                        rep.degree_law,
                        rep.dimension_law
                    )
                })
            });
            Check::from_result(label(rs, w), REF, r)
        })
        .collect()
}

/// `m_λ^0(q)` by the Weyl sum against `V_λ^A` computed from explicit
/// matrices, and `F_λ` by the jump sum against `(End V_λ)^A`.
fn lusztig_vs_jump(opts: &VerifyOptions) -> Vec<Check> {
    const REF: &str = "m_λ^0(q) = jump polynomial of V_λ";
    const REF_END: &str = "F_λ = jump polynomial of End V_λ";
    use TypeLetter::*;
    let systems = named(&[(A, 1), (A, 2), (A, 3), (B, 2), (C, 3), (G, 2)]);
    let bound2 = 2 * opts.height_bound.unwrap_or(6) as i64;
    let systems: Vec<RootSystem> = systems
        .into_iter()
        .filter(|rs| opts.max_rank.is_none_or(|m| rs.rank() <= m))
        .collect();
    let cases: Vec<(RootSystem, Weight)> = systems
        .iter()
        .flat_map(|rs| {
            rs.dominant_weights_up_to(bound2)
                .into_iter()
                .filter(|w| rs.in_root_lattice(w))
                .map(move |w| (rs.clone(), w))
        })
        .collect();
    let mut checks: Vec<Check> = cases
        .par_iter()
        .map(|(rs, w)| {
            let r = (|| {
                let m0 = lusztig_q_multiplicity(rs, w, &Weight::zero(rs.rank()), &opts.budget)?;
                let j = jump_polynomial(rs, w, &opts.budget)?;
                Ok((m0 != j).then(|| format!("Weyl sum {m0}, explicit V^A {j}")))
            })();
            Check::from_result(label(rs, w), REF, r)
        })
        .collect();
    let end_cases: Vec<(RootSystem, Weight)> = systems
        .iter()
        .flat_map(|rs| {
            rs.dominant_weights_up_to(bound2.min(8))
                .into_iter()
                .filter(|w| weyl_dimension(rs, w) <= BigInt::from(END_ORACLE_MAX_DIM))
                .map(move |w| (rs.clone(), w))
        })
        .collect();
    checks.par_extend(end_cases.par_iter().map(|(rs, w)| {
        let r = (|| {
            let f = jump_tensor(rs, w, w, &opts.budget)?;
            let e = end_jump_polynomial(rs, w, &opts.budget)?;
            Ok((f != e).then(|| format!("jump sum {f}, explicit (End V)^A {e}")))
        })();
        Check::from_result(label(rs, w), REF_END, r)
    }));
    checks
}

const END_ORACLE_MAX_DIM: u32 = 40;

fn sp6_counterexample(opts: &VerifyOptions) -> Check {
    const REF: &str = "sp6 ϖ_2: F neither symmetric nor unimodal";
    let r = (|| {
        let c3 = RootSystem::new(TypeLetter::C, 3)?;
        let w = Weight(vec![0, 1, 0]);
        let f = f_lambda(&c3, &w, &opts.budget)?;
        let d = dynkin_product(&c3, &w)?;
        let expected = QPolynomial::from_i64s(&[1, 1, 2, 2, 3, 2, 3, 1, 1]);
        let mut problems = Vec::new();
        if f != expected {
            problems.push(format!("expected F = {expected}, got {f}"));
        }
        if f.is_symmetric() || f.is_unimodal() {
            problems.push(format!(
                "symmetric {}, unimodal {}",
                f.is_symmetric(),
                f.is_unimodal()
            ));
        }
        if f.eval_at_one() != BigInt::from(16) || d.eval_at_one() != BigInt::from(14) {
            problems.push(format!(
                "F(1) = {}, D(1) = {}",
                f.eval_at_one(),
                d.eval_at_one()
            ));
        }
        Ok((!problems.is_empty()).then(|| problems.join("; ")))
    })();
    Check::from_result("C3 (0,1,0)".into(), REF, r)
}

/// `F_λ = D_λ` exactly for the wmf weights of the grid.
fn wmf_iff(opts: &VerifyOptions) -> Vec<Check> {
    const REF: &str = "F_λ = D_λ iff V_λ is wmf";
    let bound2 = 2 * opts.height_bound.unwrap_or(4) as i64;
    let cases: Vec<(RootSystem, Weight)> = root_systems_up_to(opts.max_rank.unwrap_or(3))
        .into_iter()
        .flat_map(|rs| {
            let ws = rs.dominant_weights_up_to(bound2);
            ws.into_iter().map(move |w| (rs.clone(), w))
        })
        .collect();
    let mut checks = vec![
        sp6_counterexample(opts),
        wmf_are_fundamental_multiples(&cases, opts),
    ];
    checks.par_extend(cases.par_iter().map(|(rs, w)| {
        let r = (|| {
            let wmf = is_wmf(rs, w, &opts.budget)?;
            let f = f_lambda(rs, w, &opts.budget)?;
            let d = dynkin_product(rs, w)?;
            Ok(match (wmf, f == d) {
                (true, false) => Some(format!("wmf but F = {f}, D = {d}")),
                (false, true) => Some(format!("not wmf yet F = D = {d}")),
                _ => None,
            })
        })();
        Check::from_result(label(rs, w), REF, r)
    }));
    checks
}

/// Every nonzero wmf weight of the sweep is a multiple of one fundamental
/// weight.
fn wmf_are_fundamental_multiples(cases: &[(RootSystem, Weight)], opts: &VerifyOptions) -> Check {
    const REF: &str = "wmf weights are multiples of fundamental weights";
    let r = (|| {
        let mut offenders = Vec::new();
        for (rs, w) in cases {
            let support = w.coords().iter().filter(|&&c| c != 0).count();
            if support > 1 && is_wmf(rs, w, &opts.budget)? {
                offenders.push(label(rs, w));
            }
        }
        Ok((!offenders.is_empty())
            .then(|| format!("wmf with wider support: {}", offenders.join(", "))))
    })();
    Check::from_result(format!("{} weights", cases.len()), REF, r)
}

/// Series equality `F(C_λ(g)) = F(C_λ(t))` with numerator `t_0/t_λ` for
/// every minuscule weight, then multiplicity-free `End V_λ` for the small
/// wmf table entries, with small constituents when `λ` is minuscule.
fn minuscule_series(opts: &VerifyOptions) -> Vec<Check> {
    const SERIES: &str = "F(C_λ(g)) = F(C_λ(t)) = t_0/t_λ · F(J)";
    const TENSOR: &str = "End V_λ is multiplicity free; small constituents if minuscule";
    let mut minuscule: Vec<(RootSystem, Weight)> = Vec::new();
    for rs in root_systems_up_to(opts.max_rank.unwrap_or(8)) {
        for i in 1..=rs.rank() {
            let w = Weight::fundamental(rs.rank(), i);
            if is_minuscule(&rs, &w).unwrap_or(false) {
                minuscule.push((rs.clone(), w));
            }
        }
    }
    let mut checks: Vec<Check> = minuscule
        .par_iter()
        .map(|(rs, w)| {
            let r = (|| {
                let cg = poincare_cg(rs, w, &opts.budget)?;
                let ct = poincare_ct(rs, w)?;
                let t = t_ratio(rs, w)?;
                Ok(if !cg.series_equal(&ct) {
                    Some(format!(
                        "cg numerator {}, ct numerator {}",
                        cg.numerator, ct.numerator
                    ))
                } else if cg.numerator != t {
                    Some(format!("numerator {}, t_0/t_λ = {t}", cg.numerator))
                } else {
                    None
                })
            })();
            Check::from_result(label(rs, w), SERIES, r)
        })
        .collect();

    let entries: Vec<_> = table1_entries(opts.max_rank.unwrap_or(8), 5)
        .into_iter()
        .filter(|e| {
            let rs = RootSystem::new(e.type_letter, e.rank).expect("table type");
            weyl_dimension(&rs, &e.weight) <= BigInt::from(60)
        })
        .collect();
    checks.par_extend(entries.par_iter().map(|e| {
        let r = (|| {
            let rs = RootSystem::new(e.type_letter, e.rank)?;
            let parts = decompose_tensor_square(&rs, &e.weight, &opts.budget)?;
            if let Some(t) = parts.iter().find(|t| t.multiplicity != 1) {
                return Ok(Some(format!(
                    "constituent {} has multiplicity {}",
                    t.weight, t.multiplicity
                )));
            }
            if is_minuscule(&rs, &e.weight)? {
                for t in &parts {
                    if !is_small(&rs, &t.weight)? {
                        return Ok(Some(format!("constituent {} is not small", t.weight)));
                    }
                }
            }
            Ok(None)
        })();
        Check::from_result(e.label(), TENSOR, r)
    }));
    checks
}

/// `t_0` from the degrees against the product over positive roots.
fn kostant_t0(opts: &VerifyOptions) -> Vec<Check> {
    const REF: &str = "t_0 = ∏ (1 − q^{hot(α)+1}) / (1 − q^{hot(α)})";
    root_systems_up_to(opts.max_rank.unwrap_or(8))
        .par_iter()
        .map(|rs| {
            let r = (|| {
                let by_degrees = cyclo_product(rs.degrees(), &vec![1; rs.rank()])?;
                let by_heights = t0_by_heights(rs)?;
                t_poly(rs, &Weight::zero(rs.rank()))?;
                let order = BigInt::from(rs.weyl_order().clone());
                Ok(if by_degrees != by_heights {
                    Some(format!(
                        "degrees give {by_degrees}, heights give {by_heights}"
                    ))
                } else if by_degrees.eval_at_one() != order {
                    Some(format!(
                        "t_0(1) = {}, |W| = {order}",
                        by_degrees.eval_at_one()
                    ))
                } else {
                    None
                })
            })();
            Check::from_result(rs.to_string(), REF, r)
        })
        .collect()
}

pub const ENDALG_GRID: [(usize, RepKind); 8] = [
    (1, RepKind::Symmetric(2)),
    (1, RepKind::Symmetric(3)),
    (1, RepKind::Symmetric(4)),
    (2, RepKind::Symmetric(1)),
    (2, RepKind::Symmetric(2)),
    (2, RepKind::Symmetric(3)),
    (3, RepKind::Symmetric(1)),
    (3, RepKind::Exterior(2)),
];

fn endalg(opts: &VerifyOptions) -> Vec<Check> {
    const REF: &str =
        "(End V)^A: dimension, grading, socle, bijection, Lefschetz, projections, invariants";
    ENDALG_GRID
        .par_iter()
        .map(|&(n, kind)| {
            let r = end_alg_report(n, kind, &opts.budget).map(|rep| {
                let f = rep.failures();
                (!f.is_empty()).then(|| {
                    format!(
                        "failed: {}; commutant {} vs D {}",
                        f.join(", "),
                        rep.poincare,
                        rep.dynkin
                    )
                })
            });
            Check::from_result(format!("sl_{} {kind}", n + 1), REF, r)
        })
        .collect()
}

fn truncsym(opts: &VerifyOptions) -> Vec<Check> {
    const REF: &str = "truncated symmetric polynomials = [m+n over m] = D_{mϖ_1}";
    let top = opts.max_rank.unwrap_or(8);
    let cases: Vec<(usize, usize)> = (1..=top)
        .flat_map(|n| (1..=8).map(move |m| (n, m)))
        .collect();
    cases
        .par_iter()
        .map(|&(n, m)| {
            let r = truncsym_report(n, m, &opts.budget).map(|rep| {
                (!rep.holds()).then(|| {
                    format!(
                        "partitions {}, gaussian {}, dynkin {}, total {}",
                        rep.partitions, rep.gaussian, rep.dynkin, rep.total
                    )
                })
            });
            Check::from_result(format!("n={n} m={m}"), REF, r)
        })
        .collect()
}

fn hermite(opts: &VerifyOptions) -> Vec<Check> {
    const REF: &str = "Hermite reciprocity and the exterior-power form";
    let top = opts.max_rank.unwrap_or(5);
    let cases: Vec<(usize, usize)> = (1..=top)
        .flat_map(|m| (1..=top).map(move |n| (m, n)))
        .collect();
    cases
        .par_iter()
        .map(|&(m, n)| {
            let r = hermite_identities(m, n).map(|rep| {
                (!rep.holds()).then(|| {
                    format!(
                        "reciprocity {}, exterior {}, value {}",
                        rep.reciprocity, rep.exterior, rep.value
                    )
                })
            });
            Check::from_result(format!("m={m} n={n}"), REF, r)
        })
        .collect()
}
