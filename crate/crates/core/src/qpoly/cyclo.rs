use std::collections::BTreeMap;

use super::QPolynomial;
use crate::{Error, Result};

/// Evaluates `∏ (1 - q^a) / ∏ (1 - q^b)` over the two exponent lists.
///
/// Common exponents are cancelled as multisets first, the remaining numerator
/// is expanded and then divided factor by factor. Each intermediate quotient
/// is a polynomial whenever the full quotient is, so any remainder means the
/// rational function was not a polynomial.
pub fn cyclo_product(numer_exps: &[usize], denom_exps: &[usize]) -> Result<QPolynomial> {
    if let Some(&0) = denom_exps.iter().find(|&&d| d == 0) {
        return Err(Error::Arithmetic(
            "denominator factor 1 - q^0 vanishes".into(),
        ));
    }
    if numer_exps.contains(&0) {
        return Ok(QPolynomial::zero());
    }
    let mut balance: BTreeMap<usize, i64> = BTreeMap::new();
    for &a in numer_exps {
        *balance.entry(a).or_default() += 1;
    }
    for &b in denom_exps {
        *balance.entry(b).or_default() -= 1;
    }
    let mut poly = QPolynomial::one();
    // largest factors first keeps the expansion short-lived
    for (&a, &count) in balance.iter().rev() {
        for _ in 0..count.max(0) {
            poly.mul_one_minus_q_pow(a);
        }
    }
    for (&b, &count) in balance.iter().rev() {
        for _ in 0..(-count).max(0) {
            poly = poly.div_one_minus_q_pow(b).map_err(|_| {
                Error::Arithmetic(format!(
                    "product over numerator {numer_exps:?} and denominator {denom_exps:?} is not a polynomial"
                ))
            })?;
        }
    }
    Ok(poly)
}

/// Gaussian binomial `[m+n over n]_q`.
pub fn gaussian_binomial(m: usize, n: usize) -> QPolynomial {
    let numer: Vec<usize> = (m + 1..=m + n).collect();
    let denom: Vec<usize> = (1..=n).collect();
    cyclo_product(&numer, &denom).expect("Gaussian binomials are polynomials")
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    fn p(c: &[i64]) -> QPolynomial {
        QPolynomial::from_i64s(c)
    }

    #[test]
    fn simple_quotients() {
        assert_eq!(cyclo_product(&[4], &[2]).unwrap(), p(&[1, 0, 1]));
        assert!(cyclo_product(&[3], &[2]).is_err());
        assert_eq!(cyclo_product(&[], &[]).unwrap(), QPolynomial::one());
    }

    #[test]
    fn g2_weyl_poincare_polynomial() {
        let t0 = cyclo_product(&[2, 6], &[1, 1]).unwrap();
        assert_eq!(t0.eval_at_one(), BigInt::from(12));
        assert_eq!(t0, &p(&[1, 1]) * &QPolynomial::q_integer(6));
    }

    #[test]
    fn gaussian_examples() {
        // (1-q^3)(1-q^4)/((1-q)(1-q^2)) expanded by hand
        assert_eq!(gaussian_binomial(2, 2), p(&[1, 1, 2, 1, 1]));
        assert_eq!(gaussian_binomial(5, 0), QPolynomial::one());
        assert_eq!(gaussian_binomial(2, 1), p(&[1, 1, 1]));
        assert_eq!(gaussian_binomial(3, 4), gaussian_binomial(4, 3));
        assert_eq!(gaussian_binomial(4, 4).eval_at_one(), BigInt::from(70));
    }
}
