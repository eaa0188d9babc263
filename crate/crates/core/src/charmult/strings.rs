//! Principal-sl2 string counts of a character.

use std::collections::BTreeMap;

use num_bigint::BigInt;

use super::WeightCharacter;
use crate::qpoly::QPolynomial;
use crate::weightlat::RootSystem;
use crate::{Error, Result};

/// Jump polynomial: the coefficient of `q^i` counts principal-sl2 strings
/// whose top sits at level `i`, where the level of a weight `μ` is `hot(μ)`.
///
/// All levels must be integers, so the weights must lie in the root lattice
/// coset of 0 (λ ∈ Q, or a character of the form `V ⊗ V*`).
pub fn string_decomposition(rs: &RootSystem, ch: &WeightCharacter) -> Result<QPolynomial> {
    let mut levels: BTreeMap<i64, u128> = BTreeMap::new();
    for (mu, &m) in &ch.entries {
        let h = rs.height_int(mu).ok_or_else(|| {
            Error::Domain(format!(
                "weight {mu} has half-integral level; pass a character with weights in the root lattice"
            ))
        })?;
        *levels.entry(h).or_default() += m as u128;
    }
    let b = |j: i64| levels.get(&j).copied().unwrap_or(0);
    for (&j, &m) in &levels {
        if b(-j) != m {
            return Err(Error::Domain(format!(
                "level profile is not symmetric: {m} weights at level {j}, {} at level {}",
                b(-j),
                -j
            )));
        }
    }
    let top = levels.keys().next_back().copied().unwrap_or(0).max(0);
    let mut coeffs = Vec::with_capacity(top as usize + 1);
    for i in 0..=top {
        let (hi, lo) = (b(i), b(i + 1));
        if lo > hi {
            return Err(Error::Domain(format!(
                "negative string count at level {i}: {hi} − {lo}; not a representation character"
            )));
        }
        coeffs.push(BigInt::from(hi - lo));
    }
    Ok(QPolynomial::from_coeffs(coeffs))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::charmult::irreducible_character;
    use crate::{Budget, TypeLetter, Weight};

    #[test]
    fn single_and_double_strings() {
        let b = Budget::default();
        let g2 = RootSystem::new(TypeLetter::G, 2).unwrap();
        let ch = irreducible_character(&g2, &Weight(vec![1, 0]), &b).unwrap();
        assert_eq!(
            string_decomposition(&g2, &ch).unwrap(),
            QPolynomial::monomial(3)
        );

        let a2 = RootSystem::new(TypeLetter::A, 2).unwrap();
        let ch = irreducible_character(&a2, &Weight(vec![1, 1]), &b).unwrap();
        assert_eq!(
            string_decomposition(&a2, &ch).unwrap(),
            QPolynomial::from_i64s(&[0, 1, 1])
        );
    }

    #[test]
    fn end_of_the_standard_sl2_module() {
        let a1 = RootSystem::new(TypeLetter::A, 1).unwrap();
        let ch = irreducible_character(&a1, &Weight(vec![1]), &Budget::default()).unwrap();
        assert!(matches!(
            string_decomposition(&a1, &ch),
            Err(Error::Domain(_))
        ));
        let end = ch.endomorphisms();
        assert_eq!(
            string_decomposition(&a1, &end).unwrap(),
            QPolynomial::from_i64s(&[1, 1])
        );
    }

    #[test]
    fn rejects_non_characters() {
        let a1 = RootSystem::new(TypeLetter::A, 1).unwrap();
        let ch = WeightCharacter {
            highest_weight: None,
            entries: [
                (Weight(vec![2]), 2),
                (Weight(vec![0]), 1),
                (Weight(vec![-2]), 2),
            ]
            .into_iter()
            .collect(),
        };
        assert!(matches!(
            string_decomposition(&a1, &ch),
            Err(Error::Domain(_))
        ));
    }
}
