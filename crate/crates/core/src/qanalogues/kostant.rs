//! q-analogue of Kostant's partition function.

use std::sync::Arc;

use dashmap::DashMap;
use once_cell::sync::Lazy;

use crate::qpoly::QPolynomial;
use crate::weightlat::{RootSystem, TypeLetter};

/// Memoized `P_q(ν)` for one root system, keyed by root coordinates.
///
/// `f(ν, j)` counts expressions of `ν` as sums of positive roots with index
/// at least `j`, weighted by `q^{#summands}`; `P_q(ν) = f(ν, 0)`.
pub struct QKostantTable {
    roots: Vec<Vec<i64>>,
    memo: DashMap<(Vec<i64>, usize), QPolynomial>,
}

impl QKostantTable {
    fn new(rs: &RootSystem) -> Self {
        QKostantTable {
            roots: rs.positive_roots().to_vec(),
            memo: DashMap::new(),
        }
    }

    pub fn get(&self, nu: &[i64]) -> QPolynomial {
        if nu.iter().any(|&c| c < 0) {
            return QPolynomial::zero();
        }
        self.f(nu, 0)
    }

    fn f(&self, nu: &[i64], mut j: usize) -> QPolynomial {
        if nu.iter().all(|&c| c == 0) {
            return QPolynomial::one();
        }
        while j < self.roots.len() && self.roots[j].iter().zip(nu).any(|(b, n)| b > n) {
            j += 1;
        }
        if j == self.roots.len() {
            return QPolynomial::zero();
        }
        let key = (nu.to_vec(), j);
        if let Some(hit) = self.memo.get(&key) {
            return hit.clone();
        }
        let rest: Vec<i64> = nu.iter().zip(&self.roots[j]).map(|(n, b)| n - b).collect();
        let value = self.f(nu, j + 1) + self.f(&rest, j).shift(1);
        self.memo.entry(key).or_insert(value).clone()
    }
}

static TABLES: Lazy<DashMap<(TypeLetter, usize), Arc<QKostantTable>>> = Lazy::new(DashMap::new);

pub fn kostant_table(rs: &RootSystem) -> Arc<QKostantTable> {
    TABLES
        .entry((rs.type_letter(), rs.rank()))
        .or_insert_with(|| Arc::new(QKostantTable::new(rs)))
        .clone()
}

/// `P_q(ν)`: the coefficient of `q^k` is the number of ways to write `ν`
/// (in simple-root coordinates) as a sum of `k` positive roots.
pub fn kostant_partition_q(rs: &RootSystem, nu: &[i64]) -> QPolynomial {
    kostant_table(rs).get(nu)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_values() {
        let a2 = RootSystem::new(TypeLetter::A, 2).unwrap();
        assert_eq!(
            kostant_partition_q(&a2, &[1, 1]),
            QPolynomial::from_i64s(&[0, 1, 1])
        );
        assert_eq!(kostant_partition_q(&a2, &[0, 0]), QPolynomial::one());
        assert_eq!(kostant_partition_q(&a2, &[-1, 2]), QPolynomial::zero());
        let a1 = RootSystem::new(TypeLetter::A, 1).unwrap();
        assert_eq!(kostant_partition_q(&a1, &[2]), QPolynomial::monomial(2));
    }
}
