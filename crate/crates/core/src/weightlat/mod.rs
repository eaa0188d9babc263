//! Root systems of simple types A–G, weights in the fundamental-weight
//! basis, Weyl orbits, parabolic stabilizers and signed Weyl enumeration.
//!
//! Conventions: the Cartan matrix is `A[i][j] = 2(α_i, α_j)/(α_j, α_j)`, so
//! the simple root `α_i` has fundamental-weight coordinates equal to row `i`
//! and the simple reflection is `s_i(μ) = μ - μ_i α_i`. Roots are stored in
//! simple-root coordinates. Node numbering follows Bourbaki, see [`cartan`].

pub mod cartan;
pub(crate) mod weyl;

pub use cartan::{classical_degrees, TypeLetter};
pub use weyl::{WeylElement, WeylElements};

use std::collections::BTreeSet;
use std::fmt;
use std::ops::{Add, Neg, Sub};

use num_bigint::BigUint;
use num_rational::Rational64;
use num_traits::One;
use serde::{Deserialize, Serialize};

use crate::{Error, Result};

/// Integral weight `Σ coords_i ϖ_i` in the fundamental-weight basis.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Weight(pub Vec<i64>);

impl Weight {
    pub fn zero(rank: usize) -> Self {
        Weight(vec![0; rank])
    }

    /// `ϖ_i`, with `i` 1-based as in Bourbaki numbering.
    pub fn fundamental(rank: usize, i: usize) -> Self {
        assert!(
            (1..=rank).contains(&i),
            "fundamental weight index {i} out of 1..={rank}"
        );
        let mut c = vec![0; rank];
        c[i - 1] = 1;
        Weight(c)
    }

    pub fn coords(&self) -> &[i64] {
        &self.0
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    pub fn is_dominant(&self) -> bool {
        self.0.iter().all(|&c| c >= 0)
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&c| c == 0)
    }

    pub fn scaled(&self, k: i64) -> Weight {
        Weight(self.0.iter().map(|c| c * k).collect())
    }

    /// Parses `"1,0,2"`.
    pub fn parse(s: &str) -> Result<Weight> {
        s.split(',')
            .map(|t| {
                t.trim()
                    .parse::<i64>()
                    .map_err(|e| Error::Usage(format!("bad weight coordinate {t:?}: {e}")))
            })
            .collect::<Result<Vec<_>>>()
            .map(Weight)
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|c| c.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

impl Add<&Weight> for &Weight {
    type Output = Weight;
    fn add(self, rhs: &Weight) -> Weight {
        Weight(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl Sub<&Weight> for &Weight {
    type Output = Weight;
    fn sub(self, rhs: &Weight) -> Weight {
        Weight(self.0.iter().zip(&rhs.0).map(|(a, b)| a - b).collect())
    }
}

impl Neg for &Weight {
    type Output = Weight;
    fn neg(self) -> Weight {
        Weight(self.0.iter().map(|a| -a).collect())
    }
}

/// Immutable tables for one simple root system.
#[derive(Debug, Clone)]
pub struct RootSystem {
    type_letter: TypeLetter,
    rank: usize,
    gram: Vec<Vec<i64>>,
    cartan: Vec<Vec<i64>>,
    /// `det(A) · A^{-1}`, integral.
    inv_cartan_scaled: Vec<Vec<i64>>,
    cartan_det: i64,
    positive_roots: Vec<Vec<i64>>,
    positive_roots_wt: Vec<Weight>,
    root_norms: Vec<i64>,
    /// `2·hot(ϖ_j)`.
    fund_height2: Vec<i64>,
    degrees: Vec<usize>,
    weyl_order: BigUint,
}

impl RootSystem {
    /// Builds the root system of type `(type_letter, rank)`.
    ///
    /// Positive roots come from reflection closure of the simple roots; the
    /// classical degree table is checked against the root count and the
    /// height distribution before returning.
    pub fn new(type_letter: TypeLetter, rank: usize) -> Result<RootSystem> {
        if !type_letter.supports_rank(rank) {
            return Err(Error::Usage(format!(
                "{type_letter}{rank} is not a simple root system"
            )));
        }
        let gram = cartan::simple_root_gram(type_letter, rank);
        let cartan: Vec<Vec<i64>> = (0..rank)
            .map(|i| (0..rank).map(|j| 2 * gram[i][j] / gram[j][j]).collect())
            .collect();
        let (inv_cartan_scaled, cartan_det) = scaled_inverse(&cartan);
        let positive_roots = reflection_closure(&cartan);
        let root_norms = positive_roots
            .iter()
            .map(|c| quad_form(&gram, c))
            .collect::<Vec<_>>();
        let positive_roots_wt = positive_roots
            .iter()
            .map(|c| root_to_weight(&cartan, c))
            .collect();
        let fund_height2 = (0..rank)
            .map(|j| {
                let s: i64 = inv_cartan_scaled[j].iter().sum();
                let twice = 2 * s;
                assert!(
                    twice % cartan_det == 0,
                    "height of a fundamental weight not in Z/2"
                );
                twice / cartan_det
            })
            .collect();
        let degrees = classical_degrees(type_letter, rank);
        let weyl_order = degrees.iter().fold(BigUint::one(), |acc, &d| acc * d);
        let rs = RootSystem {
            type_letter,
            rank,
            gram,
            cartan,
            inv_cartan_scaled,
            cartan_det,
            positive_roots,
            positive_roots_wt,
            root_norms,
            fund_height2,
            degrees,
            weyl_order,
        };
        rs.check_degrees()?;
        Ok(rs)
    }

    fn check_degrees(&self) -> Result<()> {
        let exps: usize = self.degrees.iter().map(|d| d - 1).sum();
        if exps != self.positive_roots.len() {
            return Err(Error::Internal(format!(
                "{self}: {} positive roots but exponents sum to {exps}",
                self.positive_roots.len()
            )));
        }
        let from_heights = exponents_from_heights(
            self.positive_roots
                .iter()
                .map(|r| r.iter().sum::<i64>() as usize),
        );
        let from_table: Vec<usize> = self.degrees.iter().map(|d| d - 1).collect();
        if from_heights != from_table {
            return Err(Error::Internal(format!(
                "{self}: height partition gives exponents {from_heights:?}, table gives {from_table:?}"
            )));
        }
        Ok(())
    }

    pub fn type_letter(&self) -> TypeLetter {
        self.type_letter
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn cartan_matrix(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    /// Squared length `(α_i, α_i)` of each simple root.
    pub fn simple_root_norm(&self, i: usize) -> i64 {
        self.gram[i][i]
    }

    /// Positive roots in simple-root coordinates, ordered by height.
    pub fn positive_roots(&self) -> &[Vec<i64>] {
        &self.positive_roots
    }

    /// Positive roots in the fundamental-weight basis.
    pub fn positive_roots_as_weights(&self) -> &[Weight] {
        &self.positive_roots_wt
    }

    pub fn num_positive_roots(&self) -> usize {
        self.positive_roots.len()
    }

    pub fn degrees(&self) -> &[usize] {
        &self.degrees
    }

    pub fn weyl_order(&self) -> &BigUint {
        &self.weyl_order
    }

    /// Weyl order saturated into `u128`.
    pub fn weyl_order_u128(&self) -> u128 {
        u128::try_from(&self.weyl_order).unwrap_or(u128::MAX)
    }

    pub fn rho(&self) -> Weight {
        Weight(vec![1; self.rank])
    }

    pub fn highest_root(&self) -> &[i64] {
        self.positive_roots
            .last()
            .expect("root systems are nonempty")
    }

    pub(crate) fn check_weight(&self, mu: &Weight) -> Result<()> {
        if mu.rank() != self.rank {
            return Err(Error::Usage(format!(
                "weight {mu} has {} coordinates, {self} needs {}",
                mu.rank(),
                self.rank
            )));
        }
        Ok(())
    }

    pub(crate) fn check_dominant(&self, mu: &Weight) -> Result<()> {
        self.check_weight(mu)?;
        if !mu.is_dominant() {
            return Err(Error::Domain(format!("weight {mu} is not dominant")));
        }
        Ok(())
    }

    /// `(μ, α^∨)` for the positive root with index `root`.
    ///
    /// Integral weights pair integrally with coroots, so the value is exact.
    pub fn pairing(&self, mu: &Weight, root: usize) -> i64 {
        let c = &self.positive_roots[root];
        let num: i64 = (0..self.rank)
            .map(|i| c[i] * mu.0[i] * self.gram[i][i])
            .sum();
        let norm = self.root_norms[root];
        debug_assert_eq!(num % norm, 0);
        num / norm
    }

    /// `(ρ, α^∨)`: the height of the coroot.
    pub fn coroot_height(&self, root: usize) -> i64 {
        self.pairing(&self.rho(), root)
    }

    /// `2·hot(μ) = 2(μ, ρ^∨)`.
    pub fn height2(&self, mu: &Weight) -> i64 {
        mu.0.iter()
            .zip(&self.fund_height2)
            .map(|(a, b)| a * b)
            .sum()
    }

    /// `hot(μ) = (μ, ρ^∨)`, a half-integer in general.
    pub fn height(&self, mu: &Weight) -> Rational64 {
        Rational64::new(self.height2(mu), 2)
    }

    /// Integer height, when `hot(μ) ∈ Z`.
    pub fn height_int(&self, mu: &Weight) -> Option<i64> {
        let h2 = self.height2(mu);
        (h2 % 2 == 0).then_some(h2 / 2)
    }

    /// Simple-root coordinates of `μ`, if `μ` lies in the root lattice.
    pub fn root_coords(&self, mu: &Weight) -> Option<Vec<i64>> {
        let d = self.cartan_det;
        (0..self.rank)
            .map(|i| {
                let s: i64 = (0..self.rank)
                    .map(|j| mu.0[j] * self.inv_cartan_scaled[j][i])
                    .sum();
                (s % d == 0).then_some(s / d)
            })
            .collect()
    }

    pub fn in_root_lattice(&self, mu: &Weight) -> bool {
        self.root_coords(mu).is_some()
    }

    /// Weight with the given simple-root coordinates.
    pub fn weight_of_root_coords(&self, c: &[i64]) -> Weight {
        root_to_weight(&self.cartan, c)
    }

    /// `2·det(A)·(μ, ν)`, an integer.
    pub(crate) fn inner_scaled(&self, mu: &Weight, nu: &Weight) -> i64 {
        (0..self.rank)
            .map(|i| {
                let r: i64 = (0..self.rank)
                    .map(|j| mu.0[j] * self.inv_cartan_scaled[j][i])
                    .sum();
                r * nu.0[i] * self.gram[i][i]
            })
            .sum()
    }

    pub fn reflect(&self, mu: &Weight, i: usize) -> Weight {
        let k = mu.0[i];
        Weight(
            mu.0.iter()
                .zip(&self.cartan[i])
                .map(|(m, a)| m - k * a)
                .collect(),
        )
    }

    pub(crate) fn reflect_in_place(&self, mu: &mut Weight, i: usize) {
        let k = mu.0[i];
        if k != 0 {
            for (m, a) in mu.0.iter_mut().zip(&self.cartan[i]) {
                *m -= k * a;
            }
        }
    }

    /// The unique dominant weight in the Weyl orbit of `μ`.
    pub fn dominant_representative(&self, mu: &Weight) -> Weight {
        let mut w = mu.clone();
        while let Some(i) = w.0.iter().position(|&c| c < 0) {
            self.reflect_in_place(&mut w, i);
        }
        w
    }

    /// `λ* = -w_0(λ)`, the highest weight of the dual module.
    pub fn dual_weight(&self, lambda: &Weight) -> Result<Weight> {
        self.check_dominant(lambda)?;
        Ok(self.dominant_representative(&-lambda))
    }

    /// All weights in the Weyl orbit of `μ`, sorted.
    pub fn weyl_orbit(&self, mu: &Weight) -> Vec<Weight> {
        let top = self.dominant_representative(mu);
        let mut out = Vec::new();
        weyl::orbit_layers(self, &top, |_| true, |w, _| out.push(w.clone()));
        out.sort();
        out
    }

    /// `|Wμ|` for dominant `μ`, from the stabilizer degrees.
    pub fn orbit_size(&self, mu: &Weight) -> Result<BigUint> {
        let stab = self.stabilizer_order(mu)?;
        Ok(&self.weyl_order / stab)
    }

    pub fn stabilizer_order(&self, mu: &Weight) -> Result<BigUint> {
        Ok(self
            .parabolic_degrees(mu)?
            .iter()
            .fold(BigUint::one(), |acc, &d| acc * d))
    }

    /// Degrees `d_i(W_λ)` of the parabolic stabilizer, ascending and padded
    /// with 1's to length `l`.
    pub fn parabolic_degrees(&self, lambda: &Weight) -> Result<Vec<usize>> {
        self.check_dominant(lambda)?;
        let free: Vec<usize> = (0..self.rank).filter(|&i| lambda.0[i] == 0).collect();
        let mut seen = BTreeSet::new();
        let mut out = Vec::new();
        for &start in &free {
            if !seen.insert(start) {
                continue;
            }
            let mut comp = vec![start];
            let mut stack = vec![start];
            while let Some(a) = stack.pop() {
                for &b in &free {
                    if self.cartan[a][b] != 0 && a != b && seen.insert(b) {
                        comp.push(b);
                        stack.push(b);
                    }
                }
            }
            comp.sort_unstable();
            let (ty, k) = cartan::classify_component(&comp, &self.cartan);
            out.extend(classical_degrees(ty, k));
        }
        out.resize(self.rank, 1);
        out.sort_unstable();
        Ok(out)
    }

    /// Dominant weights with `2·hot(λ) ≤ bound2`, in lexicographic order.
    pub fn dominant_weights_up_to(&self, bound2: i64) -> Vec<Weight> {
        fn go(h: &[i64], i: usize, left: i64, cur: &mut Vec<i64>, out: &mut Vec<Weight>) {
            if i == h.len() {
                out.push(Weight(cur.clone()));
                return;
            }
            for c in 0..=left / h[i] {
                cur.push(c);
                go(h, i + 1, left - c * h[i], cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        if bound2 >= 0 {
            go(&self.fund_height2, 0, bound2, &mut Vec::new(), &mut out);
        }
        out
    }

    /// Elements of `W`, each visited once, in order of increasing length.
    pub fn weyl_signed_iterate(&self, budget: &crate::Budget) -> Result<WeylElements<'_>> {
        budget.check_weyl_order(self.weyl_order_u128())?;
        Ok(WeylElements::new(self))
    }
}

impl fmt::Display for RootSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.type_letter, self.rank)
    }
}

fn quad_form(gram: &[Vec<i64>], c: &[i64]) -> i64 {
    let l = c.len();
    (0..l)
        .flat_map(|i| (0..l).map(move |j| (i, j)))
        .map(|(i, j)| c[i] * c[j] * gram[i][j])
        .sum()
}

fn root_to_weight(cartan: &[Vec<i64>], c: &[i64]) -> Weight {
    let l = c.len();
    Weight(
        (0..l)
            .map(|j| (0..l).map(|i| c[i] * cartan[i][j]).sum())
            .collect(),
    )
}

/// Positive roots generated from the simple roots by simple reflections.
fn reflection_closure(cartan: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let l = cartan.len();
    let mut found: BTreeSet<Vec<i64>> = BTreeSet::new();
    let mut frontier: Vec<Vec<i64>> = (0..l)
        .map(|i| {
            let mut e = vec![0; l];
            e[i] = 1;
            e
        })
        .collect();
    found.extend(frontier.iter().cloned());
    while let Some(beta) = frontier.pop() {
        for i in 0..l {
            // <β, α_i^∨> = Σ_j β_j A[j][i]
            let p: i64 = (0..l).map(|j| beta[j] * cartan[j][i]).sum();
            if p == 0 {
                continue;
            }
            let mut gamma = beta.clone();
            gamma[i] -= p;
            if gamma.iter().all(|&x| x >= 0)
                && gamma.iter().any(|&x| x > 0)
                && found.insert(gamma.clone())
            {
                frontier.push(gamma);
            }
        }
    }
    let mut roots: Vec<Vec<i64>> = found.into_iter().collect();
    roots.sort_by_key(|r| (r.iter().sum::<i64>(), std::cmp::Reverse(r.clone())));
    roots
}

/// Exponents as the dual partition of the root-height distribution.
pub(crate) fn exponents_from_heights(heights: impl Iterator<Item = usize>) -> Vec<usize> {
    let mut count: Vec<usize> = Vec::new();
    for h in heights {
        if count.len() <= h {
            count.resize(h + 1, 0);
        }
        count[h] += 1;
    }
    // number of exponents ≥ k is count[k]; exponents equal to k: count[k] - count[k+1]
    let mut exps = Vec::new();
    for k in 1..count.len() {
        let next = count.get(k + 1).copied().unwrap_or(0);
        exps.extend(std::iter::repeat_n(k, count[k].saturating_sub(next)));
    }
    exps.sort_unstable();
    exps
}

/// Returns `(det(A)·A^{-1}, det(A))` by exact rational Gauss–Jordan.
fn scaled_inverse(a: &[Vec<i64>]) -> (Vec<Vec<i64>>, i64) {
    let n = a.len();
    let mut m: Vec<Vec<Rational64>> = a
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r: Vec<Rational64> = row.iter().map(|&x| Rational64::from_integer(x)).collect();
            r.extend((0..n).map(|j| Rational64::from_integer((i == j) as i64)));
            r
        })
        .collect();
    let mut det = Rational64::one();
    for col in 0..n {
        let piv = (col..n)
            .find(|&r| *m[r][col].numer() != 0)
            .expect("Cartan matrices are invertible");
        if piv != col {
            m.swap(piv, col);
            det = -det;
        }
        let p = m[col][col];
        det *= p;
        for x in m[col].iter_mut() {
            *x /= p;
        }
        for r in 0..n {
            if r != col && *m[r][col].numer() != 0 {
                let f = m[r][col];
                let pivot_row = m[col].clone();
                for (x, y) in m[r].iter_mut().zip(pivot_row) {
                    *x -= f * y;
                }
            }
        }
    }
    assert!(det.is_integer());
    let d = det.to_integer();
    let inv = m
        .iter()
        .map(|row| {
            row[n..]
                .iter()
                .map(|x| {
                    let s = *x * Rational64::from_integer(d);
                    assert!(s.is_integer());
                    s.to_integer()
                })
                .collect()
        })
        .collect();
    (inv, d)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rs(t: TypeLetter, l: usize) -> RootSystem {
        RootSystem::new(t, l).unwrap()
    }

    #[test]
    fn bounded_dominant_weights() {
        let a2 = RootSystem::new(TypeLetter::A, 2).unwrap();
        // 2·hot(ϖ_i) = 2 for both nodes
        assert_eq!(a2.dominant_weights_up_to(4).len(), 6);
        assert_eq!(a2.dominant_weights_up_to(1), vec![Weight::zero(2)]);
        let g2 = RootSystem::new(TypeLetter::G, 2).unwrap();
        assert!(g2
            .dominant_weights_up_to(10)
            .iter()
            .all(|w| g2.height2(w) <= 10));
    }

    #[test]
    fn small_systems() {
        let a2 = rs(TypeLetter::A, 2);
        assert_eq!(a2.num_positive_roots(), 3);
        assert_eq!(a2.degrees(), &[2, 3]);
        assert_eq!(a2.weyl_order_u128(), 6);
        let a1 = rs(TypeLetter::A, 1);
        assert_eq!(
            (
                a1.num_positive_roots(),
                a1.degrees().to_vec(),
                a1.weyl_order_u128()
            ),
            (1, vec![2], 2)
        );
        let g2 = rs(TypeLetter::G, 2);
        assert_eq!(g2.num_positive_roots(), 6);
        assert_eq!(g2.degrees(), &[2, 6]);
        assert_eq!(g2.weyl_order_u128(), 12);
    }

    #[test]
    fn invalid_type_rank_is_usage_error() {
        assert!(matches!(
            RootSystem::new(TypeLetter::E, 5),
            Err(Error::Usage(_))
        ));
        assert!(matches!(
            RootSystem::new(TypeLetter::B, 1),
            Err(Error::Usage(_))
        ));
        assert!(matches!(
            RootSystem::new(TypeLetter::F, 3),
            Err(Error::Usage(_))
        ));
    }

    #[test]
    fn simple_roots_are_unit_vectors() {
        let d5 = rs(TypeLetter::D, 5);
        for i in 0..5 {
            let mut e = vec![0; 5];
            e[i] = 1;
            assert!(d5.positive_roots().contains(&e));
        }
        assert!(d5
            .positive_roots()
            .iter()
            .all(|r| r.iter().all(|&x| x >= 0)));
    }

    #[test]
    fn pairing_with_simple_coroots() {
        let a2 = rs(TypeLetter::A, 2);
        let w1 = Weight::fundamental(2, 1);
        let a1 = a2
            .positive_roots()
            .iter()
            .position(|r| r == &vec![1, 0])
            .unwrap();
        let a2i = a2
            .positive_roots()
            .iter()
            .position(|r| r == &vec![0, 1])
            .unwrap();
        assert_eq!(a2.pairing(&w1, a1), 1);
        assert_eq!(a2.pairing(&w1, a2i), 0);
    }

    #[test]
    fn g2_highest_root() {
        let g2 = rs(TypeLetter::G, 2);
        assert_eq!(g2.highest_root(), &[3, 2]);
        let theta = g2.weight_of_root_coords(g2.highest_root());
        // the highest root of G2 is ϖ_2 in Bourbaki numbering
        assert_eq!(theta, Weight::fundamental(2, 2));
        assert_eq!(g2.height(&theta), Rational64::from_integer(5));
        let top = g2.num_positive_roots() - 1;
        // θ^∨ = α_1^∨ + 2α_2^∨
        assert_eq!(g2.pairing(&Weight::fundamental(2, 1), top), 1);
        assert_eq!(g2.pairing(&Weight::fundamental(2, 2), top), 2);
    }

    #[test]
    fn heights() {
        let a3 = rs(TypeLetter::A, 3);
        assert_eq!(
            a3.height(&Weight::fundamental(3, 2)),
            Rational64::from_integer(2)
        );
        assert_eq!(a3.height(&Weight::zero(3)), Rational64::from_integer(0));
        let a1 = rs(TypeLetter::A, 1);
        assert_eq!(a1.height(&Weight(vec![1])), Rational64::new(1, 2));
    }

    #[test]
    fn orbits() {
        let b2 = rs(TypeLetter::B, 2);
        assert_eq!(b2.weyl_orbit(&Weight::fundamental(2, 2)).len(), 4);
        assert_eq!(
            rs(TypeLetter::A, 1).weyl_orbit(&Weight::zero(1)),
            vec![Weight::zero(1)]
        );
        assert_eq!(
            rs(TypeLetter::C, 3)
                .weyl_orbit(&Weight::fundamental(3, 3))
                .len(),
            8
        );
    }

    #[test]
    fn duals() {
        let a2 = rs(TypeLetter::A, 2);
        assert_eq!(
            a2.dual_weight(&Weight(vec![1, 0])).unwrap(),
            Weight(vec![0, 1])
        );
        let b3 = rs(TypeLetter::B, 3);
        assert_eq!(
            b3.dual_weight(&Weight(vec![0, 0, 1])).unwrap(),
            Weight(vec![0, 0, 1])
        );
        let a1 = rs(TypeLetter::A, 1);
        assert_eq!(a1.dual_weight(&Weight(vec![5])).unwrap(), Weight(vec![5]));
        let e6 = rs(TypeLetter::E, 6);
        assert_eq!(
            e6.dual_weight(&Weight::fundamental(6, 1)).unwrap(),
            Weight::fundamental(6, 6)
        );
        let d5 = rs(TypeLetter::D, 5);
        assert_eq!(
            d5.dual_weight(&Weight::fundamental(5, 4)).unwrap(),
            Weight::fundamental(5, 5)
        );
        assert!(matches!(
            a2.dual_weight(&Weight(vec![-1, 0])),
            Err(Error::Domain(_))
        ));
    }

    #[test]
    fn parabolic_degree_lists() {
        let a3 = rs(TypeLetter::A, 3);
        assert_eq!(
            a3.parabolic_degrees(&Weight(vec![0, 1, 0])).unwrap(),
            vec![1, 2, 2]
        );
        assert_eq!(
            a3.parabolic_degrees(&Weight::zero(3)).unwrap(),
            vec![2, 3, 4]
        );
        assert_eq!(
            a3.parabolic_degrees(&Weight(vec![1, 2, 1])).unwrap(),
            vec![1, 1, 1]
        );
        let e7 = rs(TypeLetter::E, 7);
        // deleting node 7 of E7 leaves E6
        let mut d = e7.parabolic_degrees(&Weight::fundamental(7, 7)).unwrap();
        d.retain(|&x| x > 1);
        assert_eq!(d, vec![2, 5, 6, 8, 9, 12]);
        let f4 = rs(TypeLetter::F, 4);
        assert_eq!(
            f4.parabolic_degrees(&Weight::fundamental(4, 1)).unwrap(),
            vec![1, 2, 4, 6]
        );
    }

    #[test]
    fn root_lattice_membership() {
        let a2 = rs(TypeLetter::A, 2);
        assert_eq!(a2.root_coords(&Weight(vec![1, 1])), Some(vec![1, 1]));
        assert_eq!(a2.root_coords(&Weight(vec![1, 0])), None);
        assert!(a2.in_root_lattice(&Weight(vec![3, 0])));
        let g2 = rs(TypeLetter::G, 2);
        assert!(g2.in_root_lattice(&Weight(vec![1, 0])));
    }
}
