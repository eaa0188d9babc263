//! The Artinian algebra `R = (End V)^A` for `V = S^m(C^{n+1})` or
//! `∧^k(C^{n+1})`, where `A` is the centralizer of the principal nilpotent
//! `e` in `SL_{n+1}`.
//!
//! In type A the Lie algebra of `A` is spanned by the traceless powers
//! `J, J^2, ..., J^n` of the regular nilpotent, so `R` is the joint commutant
//! of their derivation actions. Commutators are homogeneous for the floor
//! grading, so the commutant is solved one grade at a time.

mod rep;

pub use rep::{MatrixRep, RepKind};

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_traits::Zero;
use serde::Serialize;

use crate::dynkin::dynkin_product;
use crate::linalg::{graded_commutant, nullspace, rank, Mat};
use crate::qpoly::QPolynomial;
use crate::weightlat::{RootSystem, TypeLetter};
use crate::{Budget, Error, Result};

#[derive(Debug, Clone)]
pub struct GradedCommutant {
    /// `(T, i)`: `T` maps floor `k` into floor `k + i`.
    pub basis: Vec<(Mat, usize)>,
    pub top_grade: usize,
}

impl GradedCommutant {
    pub fn dimension(&self) -> usize {
        self.basis.len()
    }

    pub fn grade_dimension(&self, i: usize) -> usize {
        self.basis.iter().filter(|(_, g)| *g == i).count()
    }

    pub fn graded(&self, i: usize) -> impl Iterator<Item = &Mat> {
        self.basis
            .iter()
            .filter(move |(_, g)| *g == i)
            .map(|(m, _)| m)
    }

    pub fn poincare(&self) -> QPolynomial {
        QPolynomial::from_coeffs(
            (0..=self.top_grade)
                .map(|i| BigInt::from(self.grade_dimension(i)))
                .collect(),
        )
    }
}

fn flatten<'a>(ms: impl Iterator<Item = &'a Mat>) -> Vec<Vec<BigInt>> {
    ms.map(|m| m.entries().to_vec()).collect()
}

fn transpose(rows: &[Vec<BigInt>], ncols: usize) -> Vec<Vec<BigInt>> {
    (0..ncols)
        .map(|c| rows.iter().map(|r| r[c].clone()).collect())
        .collect()
}

/// Joint commutant of `dπ(J^j)`, `j = 1..n`, graded by floor shift.
pub fn commutant(rep: &MatrixRep) -> Result<GradedCommutant> {
    let d = rep.dimension;
    let ops: Vec<(Mat, usize)> = (1..=rep.n).map(|j| (rep.e_power_action(j), j)).collect();
    let comm = GradedCommutant {
        basis: graded_commutant(&rep.floor_of_basis, &ops, rep.top_floor),
        top_grade: rep.top_floor,
    };
    if comm.dimension() != d {
        return Err(Error::Internal(format!(
            "verification failure: commutant of {} for sl_{} has dimension {}, expected dim V = {d}",
            rep.kind,
            rep.n + 1,
            comm.dimension()
        )));
    }
    Ok(comm)
}

/// `T ↦ T(v_low)` is a bijection onto `V` taking grade `i` onto floor `i`.
pub fn check_bijection(rep: &MatrixRep, comm: &GradedCommutant) -> bool {
    let v = rep.lowest_vector();
    let images: Vec<(Vec<BigInt>, usize)> =
        comm.basis.iter().map(|(t, g)| (t.apply(&v), *g)).collect();
    let graded = images.iter().all(|(w, g)| {
        w.iter()
            .enumerate()
            .all(|(i, x)| x.is_zero() || rep.floor_of_basis[i] == *g)
    });
    let vectors: Vec<Vec<BigInt>> = images.into_iter().map(|(w, _)| w).collect();
    graded && rank(&vectors, rep.dimension) == rep.dimension
}

/// Whether the commutant is closed under products and commutative.
pub fn check_algebra(comm: &GradedCommutant) -> (bool, bool) {
    let n = comm.basis.first().map(|(m, _)| m.size()).unwrap_or(0);
    let mut commutative = true;
    let mut closed = true;
    for (a, ga) in &comm.basis {
        for (b, gb) in &comm.basis {
            let ab = a * b;
            if commutative && ab != b * a {
                commutative = false;
            }
            if ab.is_zero() {
                continue;
            }
            let g = ga + gb;
            let mut rows = flatten(comm.graded(g));
            let before = rank(&rows, n * n);
            rows.push(ab.entries().to_vec());
            if rank(&rows, n * n) != before {
                closed = false;
            }
        }
    }
    (closed, commutative)
}

#[derive(Debug, Clone, Serialize)]
pub struct Socle {
    pub dimension: usize,
    pub grades: BTreeSet<usize>,
}

/// Annihilator of the positive-grade part. The algebra must be commutative.
pub fn socle(comm: &GradedCommutant) -> Result<Socle> {
    let (_, commutative) = check_algebra(comm);
    if !commutative {
        return Err(Error::Domain(
            "socle is computed for commutative algebras only".into(),
        ));
    }
    let k = comm.dimension();
    let mut columns: Vec<Vec<BigInt>> = vec![Vec::new(); k];
    for (m, g) in &comm.basis {
        if *g == 0 {
            continue;
        }
        for (b, (x, _)) in comm.basis.iter().enumerate() {
            columns[b].extend((x * m).entries().iter().cloned());
        }
    }
    let len = columns.first().map(Vec::len).unwrap_or(0);
    let rows = transpose(&columns, len);
    let kernel = nullspace(&rows, k);
    let grades = kernel
        .iter()
        .flat_map(|v| {
            v.iter()
                .enumerate()
                .filter(|(_, x)| !x.is_zero())
                .map(|(b, _)| comm.basis[b].1)
        })
        .collect();
    Ok(Socle {
        dimension: kernel.len(),
        grades,
    })
}

pub fn socle_dimension(comm: &GradedCommutant) -> Result<usize> {
    Ok(socle(comm)?.dimension)
}

#[derive(Debug, Clone, Serialize)]
pub struct LefschetzReport {
    /// `(i, injective, surjective)` for multiplication by `e`: `R_i → R_{i+1}`.
    pub steps: Vec<(usize, bool, bool)>,
    pub holds: bool,
}

/// Multiplication by `e` is injective on `R_i` for `i ≤ ⌊(d−1)/2⌋` and
/// surjective onto `R_{i+1}` for `i ≥ ⌊d/2⌋`, where `d = 2 hot(λ)`.
pub fn lefschetz(rep: &MatrixRep, comm: &GradedCommutant) -> LefschetzReport {
    let d = comm.top_grade;
    let n2 = rep.dimension * rep.dimension;
    let mut steps = Vec::new();
    let mut holds = true;
    for i in 0..d {
        let images: Vec<Mat> = comm.graded(i).map(|t| &rep.e_matrix * t).collect();
        let r = rank(&flatten(images.iter()), n2);
        let injective = r == comm.grade_dimension(i);
        let surjective = r == comm.grade_dimension(i + 1);
        if (2 * i < d && !injective) || (i >= d / 2 && !surjective) {
            holds = false;
        }
        steps.push((i, injective, surjective));
    }
    LefschetzReport { steps, holds }
}

pub fn lefschetz_check(rep: &MatrixRep, comm: &GradedCommutant) -> bool {
    lefschetz(rep, comm).holds
}

/// `e^k(v_low)` has a nonzero coordinate on every basis vector of floor `k`.
pub fn e_power_projections(rep: &MatrixRep) -> bool {
    let mut v = rep.lowest_vector();
    for k in 0..=rep.top_floor {
        let ok = (0..rep.dimension)
            .filter(|&i| rep.floor_of_basis[i] == k)
            .all(|i| !v[i].is_zero());
        if !ok {
            return false;
        }
        v = rep.e_matrix.apply(&v);
    }
    true
}

/// `dim V^A`: the joint kernel of `dπ(J^j)`.
pub fn a_invariants_dimension(rep: &MatrixRep) -> usize {
    let rows: Vec<Vec<BigInt>> = (1..=rep.n)
        .flat_map(|j| {
            let x = rep.e_power_action(j);
            (0..rep.dimension)
                .map(|r| {
                    (0..rep.dimension)
                        .map(|c| x.get(r, c).clone())
                        .collect::<Vec<_>>()
                })
                .collect::<Vec<_>>()
        })
        .collect();
    nullspace(&rows, rep.dimension).len()
}

#[derive(Debug, Clone, Serialize)]
pub struct EndAlgReport {
    pub n: usize,
    pub kind: RepKind,
    pub dimension: usize,
    pub commutant_dimension: usize,
    pub poincare: QPolynomial,
    pub dynkin: QPolynomial,
    pub closed: bool,
    pub commutative: bool,
    pub socle: Socle,
    pub bijection: bool,
    pub lefschetz: LefschetzReport,
    pub e_power_projections: bool,
    pub a_invariants_dimension: usize,
}

impl EndAlgReport {
    pub fn failures(&self) -> Vec<&'static str> {
        let top: BTreeSet<usize> = [self.dynkin.degree().unwrap_or(0)].into();
        [
            (
                self.commutant_dimension == self.dimension,
                "commutant dimension",
            ),
            (self.poincare == self.dynkin, "graded dimensions"),
            (self.closed, "closure under products"),
            (self.commutative, "commutativity"),
            (self.socle.dimension == 1, "socle dimension"),
            (self.socle.grades == top, "socle grade"),
            (self.bijection, "lowest-vector bijection"),
            (self.lefschetz.holds, "Lefschetz ranges"),
            (self.e_power_projections, "e-power projections"),
            (self.a_invariants_dimension == 1, "A-invariants"),
        ]
        .into_iter()
        .filter(|(ok, _)| !ok)
        .map(|(_, name)| name)
        .collect()
    }

    pub fn passes(&self) -> bool {
        self.failures().is_empty()
    }
}

/// Builds the representation and runs every check on its commutant.
pub fn end_alg_report(n: usize, kind: RepKind, budget: &Budget) -> Result<EndAlgReport> {
    let rep = MatrixRep::build(n, kind, budget)?;
    let comm = commutant(&rep)?;
    let (closed, commutative) = check_algebra(&comm);
    let rs = RootSystem::new(TypeLetter::A, n)?;
    Ok(EndAlgReport {
        n,
        kind,
        dimension: rep.dimension,
        commutant_dimension: comm.dimension(),
        poincare: comm.poincare(),
        dynkin: dynkin_product(&rs, &rep.highest_weight())?,
        closed,
        commutative,
        socle: socle(&comm)?,
        bijection: check_bijection(&rep, &comm),
        lefschetz: lefschetz(&rep, &comm),
        e_power_projections: e_power_projections(&rep),
        a_invariants_dimension: a_invariants_dimension(&rep),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn build(n: usize, kind: RepKind) -> (MatrixRep, GradedCommutant) {
        let rep = MatrixRep::build(n, kind, &Budget::default()).unwrap();
        let comm = commutant(&rep).unwrap();
        (rep, comm)
    }

    #[test]
    fn jordan_block_commutants() {
        let (_, c) = build(1, RepKind::Symmetric(2));
        assert_eq!(c.poincare(), QPolynomial::from_i64s(&[1, 1, 1]));
        let (_, c) = build(2, RepKind::Symmetric(1));
        assert_eq!(c.poincare(), QPolynomial::from_i64s(&[1, 1, 1]));
        let (_, c) = build(2, RepKind::Symmetric(2));
        assert_eq!(c.poincare(), QPolynomial::from_i64s(&[1, 1, 2, 1, 1]));
    }

    #[test]
    fn bijections() {
        for (n, k) in [
            (1, RepKind::Symmetric(3)),
            (2, RepKind::Symmetric(2)),
            (3, RepKind::Exterior(2)),
        ] {
            let (rep, c) = build(n, k);
            assert!(check_bijection(&rep, &c));
        }
    }

    #[test]
    fn socles() {
        for (n, k) in [
            (1, RepKind::Symmetric(2)),
            (2, RepKind::Symmetric(1)),
            (2, RepKind::Symmetric(2)),
        ] {
            let (_, c) = build(n, k);
            let s = socle(&c).unwrap();
            assert_eq!(s.dimension, 1);
            assert_eq!(s.grades, [c.top_grade].into());
        }
    }

    #[test]
    fn lefschetz_and_projections() {
        for (n, k) in [
            (1, RepKind::Symmetric(4)),
            (2, RepKind::Symmetric(2)),
            (3, RepKind::Symmetric(1)),
        ] {
            let (rep, c) = build(n, k);
            assert!(lefschetz_check(&rep, &c));
            assert!(e_power_projections(&rep));
        }
        let rep = MatrixRep::build(3, RepKind::Exterior(2), &Budget::default()).unwrap();
        assert!(e_power_projections(&rep));
    }

    #[test]
    fn invariants() {
        for (n, k) in [
            (2, RepKind::Symmetric(2)),
            (1, RepKind::Symmetric(5)),
            (3, RepKind::Exterior(2)),
        ] {
            let rep = MatrixRep::build(n, k, &Budget::default()).unwrap();
            assert_eq!(a_invariants_dimension(&rep), 1);
        }
    }

    #[test]
    fn non_commutative_input_is_rejected() {
        let mut a = Mat::zero(2);
        a.set(0, 1, 1.into());
        let mut b = Mat::zero(2);
        b.set(1, 0, 1.into());
        let c = GradedCommutant {
            basis: vec![(Mat::identity(2), 0), (a, 1), (b, 1)],
            top_grade: 1,
        };
        assert!(matches!(socle(&c), Err(Error::Domain(_))));
    }
}
