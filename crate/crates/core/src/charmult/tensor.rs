//! Decomposition of `V_λ ⊗ V_λ*` by highest-weight stripping.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use super::{dominant_character, irreducible_character, weyl_dimension};
use crate::weightlat::{RootSystem, Weight};
use crate::{Budget, Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TensorConstituent {
    pub weight: Weight,
    pub multiplicity: u64,
    pub dimension: BigInt,
}

/// Irreducible constituents `(ν, c_ν)` of `End V_λ = V_λ ⊗ V_λ*`, by
/// decreasing height of `ν`.
pub fn decompose_tensor_square(
    rs: &RootSystem,
    lambda: &Weight,
    budget: &Budget,
) -> Result<Vec<TensorConstituent>> {
    let ch = irreducible_character(rs, lambda, budget)?;
    let dim = ch.dimension();
    budget.check_dimension("tensor square", dim.saturating_mul(dim))?;
    let dual = ch.dual();

    let mut remaining: BTreeMap<Weight, i128> = BTreeMap::new();
    for (a, &ma) in &ch.entries {
        for (b, &mb) in &dual.entries {
            let nu = a + b;
            if nu.is_dominant() {
                *remaining.entry(nu).or_default() += (ma * mb) as i128;
            }
        }
    }

    let mut out = Vec::new();
    loop {
        let top = remaining
            .iter()
            .filter(|(_, &c)| c != 0)
            .max_by(|(a, _), (b, _)| rs.height2(a).cmp(&rs.height2(b)).then_with(|| a.cmp(b)))
            .map(|(w, &c)| (w.clone(), c));
        let Some((nu, c)) = top else { break };
        if c < 0 {
            return Err(Error::Internal(format!(
                "negative multiplicity {c} at {nu} while stripping {rs} λ={lambda}"
            )));
        }
        for (mu, m) in &dominant_character(rs, &nu, budget)?.entries {
            *remaining.entry(mu.clone()).or_default() -= c * (*m as i128);
        }
        out.push(TensorConstituent {
            dimension: weyl_dimension(rs, &nu),
            weight: nu,
            multiplicity: c as u64,
        });
    }

    let mass: BigInt = out.iter().map(|t| &t.dimension * t.multiplicity).sum();
    if mass != BigInt::from(dim * dim) {
        return Err(Error::Internal(format!(
            "tensor square of {lambda}: constituents have total dimension {mass}, expected {}",
            dim * dim
        )));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::TypeLetter;

    fn pairs(v: &[TensorConstituent]) -> Vec<(Vec<i64>, u64)> {
        v.iter()
            .map(|t| (t.weight.0.clone(), t.multiplicity))
            .collect()
    }

    #[test]
    fn two_by_two() {
        let a1 = RootSystem::new(TypeLetter::A, 1).unwrap();
        let d = decompose_tensor_square(&a1, &Weight(vec![1]), &Budget::default()).unwrap();
        assert_eq!(pairs(&d), vec![(vec![2], 1), (vec![0], 1)]);
    }

    #[test]
    fn g2_seven_is_multiplicity_free() {
        let g2 = RootSystem::new(TypeLetter::G, 2).unwrap();
        let d = decompose_tensor_square(&g2, &Weight(vec![1, 0]), &Budget::default()).unwrap();
        assert!(d.iter().all(|t| t.multiplicity == 1));
        assert!(d.iter().all(|t| g2.in_root_lattice(&t.weight)));
    }

    #[test]
    fn sp6_second_fundamental() {
        let c3 = RootSystem::new(TypeLetter::C, 3).unwrap();
        let b = Budget::default();
        let d = decompose_tensor_square(&c3, &Weight(vec![0, 1, 0]), &b).unwrap();
        let zero = Weight::zero(3);
        let total: u64 = d
            .iter()
            .map(|t| {
                t.multiplicity
                    * dominant_character(&c3, &t.weight, &b)
                        .unwrap()
                        .multiplicity(&zero)
            })
            .sum();
        assert_eq!(total, 16);
    }

    #[test]
    fn respects_budget() {
        let a1 = RootSystem::new(TypeLetter::A, 1).unwrap();
        let b = Budget {
            max_dimension: 10,
            ..Budget::default()
        };
        assert!(matches!(
            decompose_tensor_square(&a1, &Weight(vec![4]), &b),
            Err(Error::Resource { .. })
        ));
    }
}
