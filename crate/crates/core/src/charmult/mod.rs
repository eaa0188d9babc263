//! Formal characters: Freudenthal multiplicities, dominant weight lists,
//! the wmf / minuscule / small predicates, tensor-square decomposition,
//! Dynkin floor profiles and principal-sl2 string counts.

mod freudenthal;
mod strings;
mod tensor;

pub use freudenthal::weyl_dimension;
pub use strings::string_decomposition;
pub use tensor::{decompose_tensor_square, TensorConstituent};

use std::collections::BTreeMap;
use std::sync::Arc;

use dashmap::DashMap;
use num_bigint::BigInt;
use num_traits::ToPrimitive;
use once_cell::sync::Lazy;
use serde::{Deserialize, Serialize};

use crate::qpoly::QPolynomial;
use crate::weightlat::{RootSystem, TypeLetter, Weight};
use crate::{Budget, Error, Result};

/// Finite map weight → positive multiplicity.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WeightCharacter {
    /// Highest weight, for irreducible characters.
    pub highest_weight: Option<Weight>,
    #[serde(with = "entry_list")]
    pub entries: BTreeMap<Weight, u64>,
}

mod entry_list {
    use super::*;
    use serde::{Deserializer, Serializer};

    pub fn serialize<S: Serializer>(
        m: &BTreeMap<Weight, u64>,
        s: S,
    ) -> std::result::Result<S::Ok, S::Error> {
        let v: Vec<(&Weight, &u64)> = m.iter().collect();
        v.serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(
        d: D,
    ) -> std::result::Result<BTreeMap<Weight, u64>, D::Error> {
        let v: Vec<(Weight, u64)> = Vec::deserialize(d)?;
        Ok(v.into_iter().collect())
    }
}

impl WeightCharacter {
    pub fn dimension(&self) -> u128 {
        self.entries.values().map(|&m| m as u128).sum()
    }

    pub fn multiplicity(&self, mu: &Weight) -> u64 {
        self.entries.get(mu).copied().unwrap_or(0)
    }

    /// Character of the dual module.
    pub fn dual(&self) -> WeightCharacter {
        WeightCharacter {
            highest_weight: None,
            entries: self.entries.iter().map(|(w, &m)| (-w, m)).collect(),
        }
    }

    /// Character of the tensor product.
    pub fn tensor(&self, other: &WeightCharacter) -> WeightCharacter {
        let mut entries: BTreeMap<Weight, u64> = BTreeMap::new();
        for (a, &ma) in &self.entries {
            for (b, &mb) in &other.entries {
                *entries.entry(a + b).or_default() += ma * mb;
            }
        }
        WeightCharacter {
            highest_weight: None,
            entries,
        }
    }

    /// Character of `End V = V ⊗ V*`.
    pub fn endomorphisms(&self) -> WeightCharacter {
        self.tensor(&self.dual())
    }
}

/// Dominant part of an irreducible character, shared through the memo.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DominantCharacter {
    pub highest_weight: Weight,
    /// `(μ, m_λ^μ)` over dominant `μ`, by decreasing height.
    pub entries: Vec<(Weight, u64)>,
}

impl DominantCharacter {
    pub fn multiplicity(&self, mu: &Weight) -> u64 {
        self.entries
            .iter()
            .find(|(w, _)| w == mu)
            .map(|&(_, m)| m)
            .unwrap_or(0)
    }
}

type MemoKey = (TypeLetter, usize, Weight);

static CHARACTER_MEMO: Lazy<DashMap<MemoKey, Arc<DominantCharacter>>> = Lazy::new(DashMap::new);

/// Dominant multiplicities of `V_λ` (memoized per `(type, rank, λ)`).
///
/// Concurrent callers may both compute a missing entry; the values are equal
/// and the first insert wins.
pub fn dominant_character(
    rs: &RootSystem,
    lambda: &Weight,
    budget: &Budget,
) -> Result<Arc<DominantCharacter>> {
    rs.check_dominant(lambda)?;
    let key = (rs.type_letter(), rs.rank(), lambda.clone());
    if let Some(hit) = CHARACTER_MEMO.get(&key) {
        return Ok(hit.clone());
    }
    let dim = weyl_dimension(rs, lambda);
    budget.check_dimension("irreducible character", dim.to_u128().unwrap_or(u128::MAX))?;
    let entries = freudenthal::dominant_multiplicities(rs, lambda)?;
    let value = Arc::new(DominantCharacter {
        highest_weight: lambda.clone(),
        entries,
    });
    Ok(CHARACTER_MEMO.entry(key).or_insert(value).clone())
}

/// Full character of `V_λ`: Freudenthal on dominant weights, extended along
/// Weyl orbits. The total mass is checked against the Weyl dimension formula.
pub fn irreducible_character(
    rs: &RootSystem,
    lambda: &Weight,
    budget: &Budget,
) -> Result<WeightCharacter> {
    let dom = dominant_character(rs, lambda, budget)?;
    let mut entries = BTreeMap::new();
    for (mu, m) in &dom.entries {
        for w in rs.weyl_orbit(mu) {
            entries.insert(w, *m);
        }
    }
    let ch = WeightCharacter {
        highest_weight: Some(lambda.clone()),
        entries,
    };
    let expected = weyl_dimension(rs, lambda);
    if BigInt::from(ch.dimension()) != expected {
        return Err(Error::Internal(format!(
            "{rs} λ={lambda}: character mass {} differs from Weyl dimension {expected}",
            ch.dimension()
        )));
    }
    Ok(ch)
}

/// Dominant weights of `V_λ`, by decreasing height. No multiplicities are
/// computed, so this has no dimension budget.
pub fn dominant_weights(rs: &RootSystem, lambda: &Weight) -> Result<Vec<Weight>> {
    rs.check_dominant(lambda)?;
    Ok(freudenthal::dominant_weights_below(rs, lambda))
}

/// `μ ⊣ V_λ` for arbitrary `μ`: its dominant representative lies below `λ`.
pub fn is_weight_of(rs: &RootSystem, lambda: &Weight, mu: &Weight) -> bool {
    let dom = rs.dominant_representative(mu);
    match rs.root_coords(&(lambda - &dom)) {
        Some(c) => c.iter().all(|&x| x >= 0),
        None => false,
    }
}

pub fn is_wmf(rs: &RootSystem, lambda: &Weight, budget: &Budget) -> Result<bool> {
    Ok(dominant_character(rs, lambda, budget)?
        .entries
        .iter()
        .all(|&(_, m)| m == 1))
}

/// `(λ, α^∨) ≤ 1` for every positive root, cross-checked against the
/// single-orbit criterion.
pub fn is_minuscule(rs: &RootSystem, lambda: &Weight) -> Result<bool> {
    rs.check_dominant(lambda)?;
    let by_pairing = (0..rs.num_positive_roots()).all(|k| rs.pairing(lambda, k) <= 1);
    let by_orbit = dominant_weights(rs, lambda)?.len() == 1;
    if by_pairing != by_orbit {
        return Err(Error::Internal(format!(
            "{rs} λ={lambda}: pairing criterion says {by_pairing}, orbit criterion says {by_orbit}"
        )));
    }
    Ok(by_pairing)
}

/// No weight of `V_λ` is twice a root. Defined for `λ` in the root lattice.
pub fn is_small(rs: &RootSystem, lambda: &Weight) -> Result<bool> {
    rs.check_dominant(lambda)?;
    if !rs.in_root_lattice(lambda) {
        return Err(Error::Domain(format!(
            "smallness is defined for λ in the root lattice; {lambda} is not"
        )));
    }
    Ok(rs
        .positive_roots_as_weights()
        .iter()
        .all(|alpha| !is_weight_of(rs, lambda, &alpha.scaled(2))))
}

/// Dynkin polynomial from the character: `a_n = Σ m_λ^μ` over weights on
/// floor `n`, the floor being the coefficient sum of `μ + λ*` over the
/// simple roots.
pub fn floor_profile(rs: &RootSystem, lambda: &Weight, budget: &Budget) -> Result<QPolynomial> {
    let dom = dominant_character(rs, lambda, budget)?;
    let dual = rs.dual_weight(lambda)?;
    let top = rs.height2(lambda) as usize;
    let mut counts = vec![BigInt::from(0); top + 1];
    for (mu, m) in &dom.entries {
        for w in rs.weyl_orbit(mu) {
            let floor: i64 = rs
                .root_coords(&(&w + &dual))
                .ok_or_else(|| {
                    Error::Internal(format!("weight {w} + λ* is not in the root lattice"))
                })?
                .iter()
                .sum();
            if floor < 0 || floor as usize > top {
                return Err(Error::Internal(format!(
                    "weight {w} sits on floor {floor} outside 0..={top}"
                )));
            }
            counts[floor as usize] += *m;
        }
    }
    Ok(QPolynomial::from_coeffs(counts))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rs(t: TypeLetter, l: usize) -> RootSystem {
        RootSystem::new(t, l).unwrap()
    }

    fn b() -> Budget {
        Budget::default()
    }

    #[test]
    fn adjoint_a2() {
        let a2 = rs(TypeLetter::A, 2);
        let ch = irreducible_character(&a2, &Weight(vec![1, 1]), &b()).unwrap();
        assert_eq!(ch.dimension(), 8);
        assert_eq!(ch.multiplicity(&Weight::zero(2)), 2);
        assert_eq!(
            dominant_weights(&a2, &Weight(vec![1, 1])).unwrap(),
            vec![Weight(vec![1, 1]), Weight(vec![0, 0])]
        );
    }

    #[test]
    fn sl2_strings() {
        let a1 = rs(TypeLetter::A, 1);
        for m in 0..6 {
            let ch = irreducible_character(&a1, &Weight(vec![m]), &b()).unwrap();
            assert_eq!(ch.entries.len() as i64, m + 1);
            assert!(ch.entries.values().all(|&x| x == 1));
        }
    }

    #[test]
    fn c3_third_fundamental() {
        let c3 = rs(TypeLetter::C, 3);
        let l = Weight::fundamental(3, 3);
        let ch = irreducible_character(&c3, &l, &b()).unwrap();
        assert_eq!(ch.dimension(), 14);
        assert_eq!(ch.entries.len(), 14);
        assert_eq!(
            dominant_weights(&c3, &l).unwrap(),
            vec![l.clone(), Weight::fundamental(3, 1)]
        );
    }

    #[test]
    fn predicates() {
        let g2 = rs(TypeLetter::G, 2);
        assert!(is_wmf(&g2, &Weight(vec![1, 0]), &b()).unwrap());
        assert!(!is_minuscule(&g2, &Weight(vec![1, 0])).unwrap());
        let c3 = rs(TypeLetter::C, 3);
        assert!(!is_wmf(&c3, &Weight(vec![0, 1, 0]), &b()).unwrap());
        let b3 = rs(TypeLetter::B, 3);
        assert!(is_wmf(&b3, &Weight(vec![1, 0, 0]), &b()).unwrap());
        let d4 = rs(TypeLetter::D, 4);
        assert!(is_minuscule(&d4, &Weight::fundamental(4, 1)).unwrap());
        let a3 = rs(TypeLetter::A, 3);
        assert!(!is_minuscule(&a3, &Weight(vec![2, 0, 0])).unwrap());
    }

    #[test]
    fn smallness() {
        let a2 = rs(TypeLetter::A, 2);
        assert!(is_small(&a2, &Weight(vec![1, 1])).unwrap());
        let a1 = rs(TypeLetter::A, 1);
        assert!(!is_small(&a1, &Weight(vec![4])).unwrap());
        assert!(matches!(
            is_small(&a2, &Weight(vec![1, 0])),
            Err(Error::Domain(_))
        ));
    }

    #[test]
    fn floor_profiles() {
        let c2 = rs(TypeLetter::C, 2);
        assert_eq!(
            floor_profile(&c2, &Weight(vec![1, 0]), &b()).unwrap(),
            QPolynomial::from_i64s(&[1, 1, 1, 1])
        );
        let a1 = rs(TypeLetter::A, 1);
        assert_eq!(
            floor_profile(&a1, &Weight(vec![0]), &b()).unwrap(),
            QPolynomial::one()
        );
        let b3 = rs(TypeLetter::B, 3);
        assert_eq!(
            floor_profile(&b3, &Weight(vec![0, 0, 1]), &b()).unwrap(),
            QPolynomial::from_i64s(&[1, 1, 1, 2, 1, 1, 1])
        );
    }

    #[test]
    fn dimension_budget() {
        let e8 = rs(TypeLetter::E, 8);
        let tight = Budget {
            max_dimension: 1000,
            ..Budget::default()
        };
        assert!(matches!(
            irreducible_character(&e8, &Weight::fundamental(8, 1), &tight),
            Err(Error::Resource { .. })
        ));
    }

    #[test]
    fn character_json_is_a_list_of_pairs() {
        let a1 = rs(TypeLetter::A, 1);
        let ch = irreducible_character(&a1, &Weight(vec![1]), &b()).unwrap();
        let j = serde_json::to_string(&ch).unwrap();
        assert_eq!(j, r#"{"highest_weight":[1],"entries":[[[-1],1],[[1],1]]}"#);
        let back: WeightCharacter = serde_json::from_str(&j).unwrap();
        assert_eq!(back, ch);
    }
}
