use serde::{Deserialize, Serialize};

use super::QPolynomial;

/// `numerator / ∏ (1 - q^{d_i})`, the form of every Poincaré series here.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GradedSeries {
    pub numerator: QPolynomial,
    pub denominator_exponents: Vec<usize>,
}

impl GradedSeries {
    pub fn new(numerator: QPolynomial, mut denominator_exponents: Vec<usize>) -> Self {
        denominator_exponents.sort_unstable();
        GradedSeries {
            numerator,
            denominator_exponents,
        }
    }

    /// Equality of the rational functions, decided by cross-multiplication.
    pub fn series_equal(&self, other: &GradedSeries) -> bool {
        let mut lhs = self.numerator.clone();
        for &d in &other.denominator_exponents {
            lhs.mul_one_minus_q_pow(d);
        }
        let mut rhs = other.numerator.clone();
        for &d in &self.denominator_exponents {
            rhs.mul_one_minus_q_pow(d);
        }
        lhs == rhs
    }

    /// First `n` coefficients of the power-series expansion.
    pub fn expand(&self, n: usize) -> Vec<num_bigint::BigInt> {
        let mut c: Vec<num_bigint::BigInt> = (0..n).map(|k| self.numerator.coeff(k)).collect();
        for &d in &self.denominator_exponents {
            for k in d..n {
                let prev = c[k - d].clone();
                c[k] += prev;
            }
        }
        c
    }
}

#[derive(Serialize, Deserialize)]
struct GradedSeriesJson {
    variable: String,
    coefficients: Vec<String>,
    denominator_exponents: Vec<usize>,
}

impl Serialize for GradedSeries {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        GradedSeriesJson {
            variable: "q".into(),
            coefficients: self
                .numerator
                .coeffs()
                .iter()
                .map(|c| c.to_string())
                .collect(),
            denominator_exponents: self.denominator_exponents.clone(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for GradedSeries {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let raw = GradedSeriesJson::deserialize(d)?;
        if raw.variable != "q" {
            return Err(serde::de::Error::custom("unsupported variable"));
        }
        let coeffs = raw
            .coefficients
            .iter()
            .map(|s| s.parse().map_err(serde::de::Error::custom))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(GradedSeries::new(
            QPolynomial::from_coeffs(coeffs),
            raw.denominator_exponents,
        ))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn normalized_forms_compare_equal() {
        let a = GradedSeries::new(QPolynomial::from_i64s(&[1, 1]), vec![1]);
        let b = GradedSeries::new(QPolynomial::one_minus_q_pow(2), vec![1, 1]);
        assert!(a.series_equal(&b));
        assert!(a.series_equal(&a));
        let c = GradedSeries::new(QPolynomial::from_i64s(&[1, 2]), vec![1]);
        assert!(!a.series_equal(&c));
    }

    #[test]
    fn expansion_of_geometric_series() {
        let s = GradedSeries::new(QPolynomial::one(), vec![2]);
        let e: Vec<i64> = s.expand(5).iter().map(|c| c.try_into().unwrap()).collect();
        assert_eq!(e, vec![1, 0, 1, 0, 1]);
    }

    #[test]
    fn json_carries_denominators() {
        let s = GradedSeries::new(QPolynomial::from_i64s(&[1, 1]), vec![3, 2]);
        let j = serde_json::to_string(&s).unwrap();
        assert_eq!(
            j,
            r#"{"variable":"q","coefficients":["1","1"],"denominator_exponents":[2,3]}"#
        );
        let back: GradedSeries = serde_json::from_str(&j).unwrap();
        assert_eq!(back, s);
    }
}
