//! Rendering of results as text, JSON or CSV.

use std::fmt::Write as _;

use clap::ValueEnum;
use serde::{Deserialize, Serialize};
use spindle_core::charmult::{TensorConstituent, WeightCharacter};
use spindle_core::dynkin::table1_entries;
use spindle_core::endalg_a::EndAlgReport;
use spindle_core::qpoly::CycloFactorization;
use spindle_core::truncsym::TruncSymReport;
use spindle_core::verify::SuiteReport;
use spindle_core::{GradedSeries, QPolynomial, RootSystem, TypeLetter, Weight};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct RootSystemInfo {
    pub type_letter: String,
    pub rank: usize,
    pub cartan_matrix: Vec<Vec<i64>>,
    pub weyl_order: String,
    pub degrees: Vec<usize>,
    pub exponents: Vec<usize>,
    pub positive_roots: Vec<Vec<i64>>,
    pub highest_root: Vec<i64>,
}

impl RootSystemInfo {
    pub fn of(rs: &RootSystem) -> RootSystemInfo {
        RootSystemInfo {
            type_letter: rs.type_letter().to_string(),
            rank: rs.rank(),
            cartan_matrix: rs.cartan_matrix().to_vec(),
            weyl_order: rs.weyl_order().to_string(),
            degrees: rs.degrees().to_vec(),
            exponents: rs.degrees().iter().map(|d| d - 1).collect(),
            positive_roots: rs.positive_roots().to_vec(),
            highest_root: rs.highest_root().to_vec(),
        }
    }
}

pub enum Value {
    /// A polynomial with an optional known factorization for text output.
    Poly(QPolynomial, Option<String>),
    Series(GradedSeries),
    Character(WeightCharacter),
    Tensor(Vec<TensorConstituent>),
    RootSystem(RootSystemInfo),
    EndAlg(EndAlgReport),
    TruncSym(TruncSymReport),
    Verify(Vec<SuiteReport>),
}

/// Tabulated wmf form when `(type, rank, λ)` is a row of the table, otherwise a
/// product of geometric sums or a cyclotomic quotient, if one exists. Only
/// forms with at least two factors are returned.
pub fn factored_form(p: &QPolynomial, row: Option<(TypeLetter, usize, &Weight)>) -> Option<String> {
    if let Some((t, l, w)) = row {
        let hit = table1_entries(l.max(1), 5)
            .into_iter()
            .find(|e| e.type_letter == t && e.rank == l && &e.weight == w && &e.expected() == p);
        if let Some(e) = hit {
            let n = e
                .factors
                .iter()
                .filter(|f| f.expand() != QPolynomial::one())
                .count();
            return (n >= 2).then(|| e.factored());
        }
    }
    let f = CycloFactorization::of(p)?;
    (f.len() >= 2).then(|| f.to_string())
}

fn series_text(s: &GradedSeries) -> String {
    let den: String = s
        .denominator_exponents
        .iter()
        .map(|d| match d {
            1 => "(1 - q)".to_string(),
            _ => format!("(1 - q^{d})"),
        })
        .collect();
    if den.is_empty() {
        s.numerator.to_string()
    } else {
        format!("({}) / ({den})", s.numerator)
    }
}

fn csv_rows(header: &[&str], rows: impl IntoIterator<Item = Vec<String>>) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(header).expect("in-memory write");
    for r in rows {
        w.write_record(&r).expect("in-memory write");
    }
    String::from_utf8(w.into_inner().expect("in-memory flush")).expect("utf8")
}

fn poly_rows(p: &QPolynomial) -> Vec<Vec<String>> {
    p.coeffs()
        .iter()
        .enumerate()
        .map(|(k, c)| vec![k.to_string(), c.to_string()])
        .collect()
}

fn weight_csv(w: &Weight) -> String {
    w.coords()
        .iter()
        .map(i64::to_string)
        .collect::<Vec<_>>()
        .join(",")
}

fn json<T: Serialize + ?Sized>(v: &T) -> String {
    let mut s = serde_json::to_string(v).expect("serializable");
    s.push('\n');
    s
}

fn flag(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

pub fn render(v: &Value, format: Format) -> String {
    match format {
        Format::Text => text(v),
        Format::Json => match v {
            Value::Poly(p, _) => json(p),
            Value::Series(s) => json(s),
            Value::Character(c) => json(c),
            Value::Tensor(t) => json(t),
            Value::RootSystem(r) => json(r),
            Value::EndAlg(r) => json(r),
            Value::TruncSym(r) => json(r),
            Value::Verify(r) => json(r),
        },
        Format::Csv => csv(v),
    }
}

fn text(v: &Value) -> String {
    let mut out = String::new();
    match v {
        Value::Poly(p, factored) => {
            writeln!(out, "{p}").unwrap();
            if let Some(f) = factored {
                writeln!(out, "= {f}").unwrap();
            }
        }
        Value::Series(s) => writeln!(out, "{}", series_text(s)).unwrap(),
        Value::Character(c) => {
            writeln!(out, "dimension {}", c.dimension()).unwrap();
            for (w, m) in &c.entries {
                writeln!(out, "{w}  {m}").unwrap();
            }
        }
        Value::Tensor(parts) => {
            for t in parts {
                writeln!(
                    out,
                    "{}  multiplicity {}  dimension {}",
                    t.weight, t.multiplicity, t.dimension
                )
                .unwrap();
            }
        }
        Value::RootSystem(r) => {
            writeln!(out, "type {}{}", r.type_letter, r.rank).unwrap();
            writeln!(out, "Weyl group order {}", r.weyl_order).unwrap();
            writeln!(out, "degrees {:?}", r.degrees).unwrap();
            writeln!(out, "exponents {:?}", r.exponents).unwrap();
            writeln!(out, "positive roots {}", r.positive_roots.len()).unwrap();
            writeln!(out, "highest root {:?}", r.highest_root).unwrap();
            writeln!(out, "Cartan matrix").unwrap();
            for row in &r.cartan_matrix {
                let cells: Vec<String> = row.iter().map(|c| format!("{c:>3}")).collect();
                writeln!(out, "{}", cells.join("")).unwrap();
            }
        }
        Value::EndAlg(r) => {
            writeln!(out, "sl{} {}  dimension {}", r.n + 1, r.kind, r.dimension).unwrap();
            writeln!(out, "commutant dimension {}", r.commutant_dimension).unwrap();
            writeln!(out, "graded dimensions {}", r.poincare).unwrap();
            writeln!(out, "Dynkin polynomial {}", r.dynkin).unwrap();
            writeln!(
                out,
                "closed {}, commutative {}",
                flag(r.closed),
                flag(r.commutative)
            )
            .unwrap();
            writeln!(
                out,
                "socle dimension {} in grades {:?}",
                r.socle.dimension, r.socle.grades
            )
            .unwrap();
            writeln!(out, "lowest-vector bijection {}", flag(r.bijection)).unwrap();
            writeln!(out, "Lefschetz ranges {}", flag(r.lefschetz.holds)).unwrap();
            writeln!(out, "e-power projections {}", flag(r.e_power_projections)).unwrap();
            writeln!(out, "A-invariants dimension {}", r.a_invariants_dimension).unwrap();
            let failures = r.failures();
            if failures.is_empty() {
                writeln!(out, "all checks pass").unwrap();
            } else {
                writeln!(out, "failed: {}", failures.join(", ")).unwrap();
            }
        }
        Value::TruncSym(r) => {
            writeln!(out, "box partitions {}", r.partitions).unwrap();
            writeln!(out, "Gaussian binomial {}", r.gaussian).unwrap();
            writeln!(out, "Dynkin polynomial {}", r.dynkin).unwrap();
            writeln!(out, "total {}", r.total).unwrap();
            writeln!(
                out,
                "identity {}",
                if r.holds() { "holds" } else { "fails" }
            )
            .unwrap();
        }
        Value::Verify(reports) => {
            for r in reports {
                let failed = r.failures().count();
                writeln!(
                    out,
                    "== {}: {} checks, {} failed",
                    r.suite,
                    r.checks.len(),
                    failed
                )
                .unwrap();
                for c in &r.checks {
                    writeln!(out, "{c}").unwrap();
                }
            }
            let total: usize = reports.iter().map(|r| r.checks.len()).sum();
            let failed: usize = reports.iter().map(|r| r.failures().count()).sum();
            writeln!(out, "{} of {total} checks passed", total - failed).unwrap();
        }
    }
    out
}

fn csv(v: &Value) -> String {
    match v {
        Value::Poly(p, _) => csv_rows(&["exponent", "coefficient"], poly_rows(p)),
        Value::Series(s) => {
            let num = poly_rows(&s.numerator).into_iter().map(|mut r| {
                r.insert(0, "numerator".into());
                r
            });
            let den = s
                .denominator_exponents
                .iter()
                .map(|d| vec!["denominator".into(), d.to_string(), "1".into()]);
            csv_rows(&["part", "exponent", "coefficient"], num.chain(den))
        }
        Value::Character(c) => csv_rows(
            &["weight", "multiplicity"],
            c.entries
                .iter()
                .map(|(w, m)| vec![weight_csv(w), m.to_string()]),
        ),
        Value::Tensor(parts) => csv_rows(
            &["weight", "multiplicity", "dimension"],
            parts.iter().map(|t| {
                vec![
                    weight_csv(&t.weight),
                    t.multiplicity.to_string(),
                    t.dimension.to_string(),
                ]
            }),
        ),
        Value::RootSystem(r) => csv_rows(
            &["index", "degree", "exponent"],
            r.degrees
                .iter()
                .enumerate()
                .map(|(i, d)| vec![(i + 1).to_string(), d.to_string(), (d - 1).to_string()]),
        ),
        Value::EndAlg(r) => csv_rows(
            &["grade", "commutant", "dynkin"],
            (0..r.poincare.coeffs().len().max(r.dynkin.coeffs().len())).map(|k| {
                vec![
                    k.to_string(),
                    r.poincare.coeff(k).to_string(),
                    r.dynkin.coeff(k).to_string(),
                ]
            }),
        ),
        Value::TruncSym(r) => csv_rows(
            &["exponent", "partitions", "gaussian", "dynkin"],
            (0..r.gaussian.coeffs().len()).map(|k| {
                vec![
                    k.to_string(),
                    r.partitions.coeff(k).to_string(),
                    r.gaussian.coeff(k).to_string(),
                    r.dynkin.coeff(k).to_string(),
                ]
            }),
        ),
        Value::Verify(reports) => csv_rows(
            &["suite", "label", "reference", "passed", "detail"],
            reports.iter().flat_map(|r| {
                r.checks.iter().map(move |c| {
                    vec![
                        r.suite.to_string(),
                        c.label.clone(),
                        c.reference.to_string(),
                        c.passed.to_string(),
                        c.detail.clone().unwrap_or_default(),
                    ]
                })
            }),
        ),
    }
}
