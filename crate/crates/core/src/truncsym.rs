//! Graded dimension of the truncated symmetric polynomials
//! `(k[x_1..x_m] / (x_1^{n+1}, ..., x_m^{n+1}))^{S_m}`, counted through its
//! monomial symmetric basis: partitions in an `m × n` box.

use num_bigint::BigInt;
use serde::Serialize;

use crate::dynkin::dynkin_product;
use crate::qpoly::{gaussian_binomial, QPolynomial};
use crate::weightlat::{RootSystem, TypeLetter, Weight};
use crate::{Budget, Error, Result};

/// Calls `visit` on every partition with at most `m` parts, each at most
/// `n`, as a weakly decreasing part list (zeros dropped).
pub fn box_partitions(n: usize, m: usize, mut visit: impl FnMut(&[usize])) {
    fn go(parts: &mut Vec<usize>, max: usize, m: usize, visit: &mut dyn FnMut(&[usize])) {
        visit(parts);
        if parts.len() == m {
            return;
        }
        for p in 1..=max {
            parts.push(p);
            go(parts, p, m, visit);
            parts.pop();
        }
    }
    go(&mut Vec::new(), n, m, &mut visit);
}

fn binomial(a: usize, b: usize) -> u128 {
    (0..b).fold(1u128, |acc, i| acc * (a - i) as u128 / (i + 1) as u128)
}

pub fn box_partition_poincare(n: usize, m: usize, budget: &Budget) -> Result<QPolynomial> {
    if n == 0 || m == 0 {
        return Err(Error::Usage("box sides must be at least 1".into()));
    }
    let total = binomial(m + n, m);
    if total > budget.max_partitions {
        return Err(Error::resource(
            "partition enumeration",
            total,
            budget.max_partitions,
        ));
    }
    let mut counts = vec![0u64; m * n + 1];
    box_partitions(n, m, |p| counts[p.iter().sum::<usize>()] += 1);
    Ok(QPolynomial::from_coeffs(
        counts.into_iter().map(BigInt::from).collect(),
    ))
}

#[derive(Debug, Clone, Serialize)]
pub struct TruncSymReport {
    pub n: usize,
    pub m: usize,
    pub partitions: QPolynomial,
    pub gaussian: QPolynomial,
    pub dynkin: QPolynomial,
    pub total: BigInt,
}

impl TruncSymReport {
    pub fn holds(&self) -> bool {
        self.partitions == self.gaussian
            && self.gaussian == self.dynkin
            && self.partitions.eval_at_one() == self.total
    }
}

/// Box partitions, `[m+n over m]_q` and `D_{mϖ_1}(sl_{n+1})`.
pub fn truncsym_report(n: usize, m: usize, budget: &Budget) -> Result<TruncSymReport> {
    let partitions = box_partition_poincare(n, m, budget)?;
    let rs = RootSystem::new(TypeLetter::A, n)?;
    Ok(TruncSymReport {
        n,
        m,
        partitions,
        gaussian: gaussian_binomial(m, n),
        dynkin: dynkin_product(&rs, &Weight::fundamental(n, 1).scaled(m as i64))?,
        total: BigInt::from(binomial(m + n, m)),
    })
}

pub fn verify_truncsym_identity(n: usize, m: usize, budget: &Budget) -> Result<bool> {
    Ok(truncsym_report(n, m, budget)?.holds())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> QPolynomial {
        QPolynomial::from_i64s(c)
    }

    #[test]
    fn small_boxes() {
        let b = Budget::default();
        assert_eq!(box_partition_poincare(1, 2, &b).unwrap(), p(&[1, 1, 1]));
        assert_eq!(
            box_partition_poincare(2, 2, &b).unwrap(),
            p(&[1, 1, 2, 1, 1])
        );
        assert_eq!(box_partition_poincare(4, 1, &b).unwrap(), p(&[1; 5]));
    }

    #[test]
    fn identity() {
        let b = Budget::default();
        assert!(verify_truncsym_identity(2, 2, &b).unwrap());
        assert!(verify_truncsym_identity(3, 3, &b).unwrap());
        for m in 1..=8 {
            assert!(verify_truncsym_identity(1, m, &b).unwrap());
        }
    }

    #[test]
    fn enumeration_budget() {
        let b = Budget {
            max_partitions: 5,
            ..Budget::default()
        };
        assert!(matches!(
            box_partition_poincare(2, 2, &b),
            Err(Error::Resource { .. })
        ));
    }
}
