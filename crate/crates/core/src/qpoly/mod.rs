//! Exact univariate polynomials in `q` over arbitrary-precision integers,
//! cyclotomic-quotient products, Gaussian binomials and graded series.

mod cyclo;
mod factor;
mod series;

pub use cyclo::{cyclo_product, gaussian_binomial};
pub use factor::{cyclotomic_exponents, CycloFactorization};
pub use series::GradedSeries;

use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::{Error, Result};

/// Dense polynomial `Σ c_k q^k`, coefficients ascending.
///
/// Canonical form has no trailing zero coefficient; the zero polynomial has
/// an empty coefficient list.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct QPolynomial {
    coeffs: Vec<BigInt>,
}

impl QPolynomial {
    pub fn zero() -> Self {
        QPolynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::monomial(0)
    }

    /// `q^k`.
    pub fn monomial(k: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); k + 1];
        coeffs[k] = BigInt::one();
        QPolynomial { coeffs }
    }

    /// `1 + q + ... + q^(n-1)`; zero when `n == 0`.
    pub fn q_integer(n: usize) -> Self {
        QPolynomial {
            coeffs: vec![BigInt::one(); n],
        }
    }

    /// `1 - q^d`.
    pub fn one_minus_q_pow(d: usize) -> Self {
        if d == 0 {
            return Self::zero();
        }
        let mut coeffs = vec![BigInt::zero(); d + 1];
        coeffs[0] = BigInt::one();
        coeffs[d] = -BigInt::one();
        QPolynomial { coeffs }
    }

    pub fn from_coeffs(coeffs: Vec<BigInt>) -> Self {
        let mut p = QPolynomial { coeffs };
        p.normalize();
        p
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Self::from_coeffs(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    fn normalize(&mut self) {
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<BigInt> {
        self.coeffs
    }

    /// Coefficient of `q^k` (zero beyond the degree).
    pub fn coeff(&self, k: usize) -> BigInt {
        self.coeffs.get(k).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Lowest exponent with a nonzero coefficient.
    pub fn low_degree(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    /// Value at `q = 1`, i.e. the coefficient sum.
    pub fn eval_at_one(&self) -> BigInt {
        self.coeffs.iter().sum()
    }

    pub fn eval(&self, q: &BigInt) -> BigInt {
        self.coeffs
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * q + c)
    }

    /// Multiplies by `q^k`.
    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![BigInt::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        QPolynomial { coeffs }
    }

    pub fn pow(&self, e: u32) -> Self {
        (0..e).fold(Self::one(), |acc, _| &acc * self)
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        Self::from_coeffs(self.coeffs.iter().map(|x| x * c).collect())
    }

    /// Exponents with nonzero coefficient, each repeated by its coefficient.
    ///
    /// Fails on a negative coefficient.
    pub fn exponent_multiset(&self) -> Result<Vec<usize>> {
        let mut out = Vec::new();
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_negative() {
                return Err(Error::Domain(format!(
                    "negative coefficient {c} at q^{k} has no exponent multiset"
                )));
            }
            let n: usize = c.try_into().map_err(|_| Error::Resource {
                what: "exponent multiset".into(),
                requested: u128::MAX,
                limit: usize::MAX as u128,
            })?;
            out.extend(std::iter::repeat_n(k, n));
        }
        Ok(out)
    }

    /// `a_i = a_{m-i}` for all `i`, `m` the degree. The zero polynomial is symmetric.
    pub fn is_symmetric(&self) -> bool {
        let c = &self.coeffs;
        c.iter().eq(c.iter().rev())
    }

    /// Coefficients weakly increase and then weakly decrease.
    pub fn is_unimodal(&self) -> bool {
        let mut descending = false;
        for w in self.coeffs.windows(2) {
            if w[1] < w[0] {
                descending = true;
            } else if w[1] > w[0] && descending {
                return false;
            }
        }
        true
    }

    /// First index where unimodality breaks (a rise after a fall).
    pub fn unimodality_violation(&self) -> Option<usize> {
        let mut descending = false;
        for (i, w) in self.coeffs.windows(2).enumerate() {
            if w[1] < w[0] {
                descending = true;
            } else if w[1] > w[0] && descending {
                return Some(i + 1);
            }
        }
        None
    }

    /// First index `i` with `a_i != a_{m-i}`.
    pub fn symmetry_violation(&self) -> Option<usize> {
        let m = self.coeffs.len();
        (0..m).find(|&i| self.coeffs[i] != self.coeffs[m - 1 - i])
    }

    /// Exact quotient `self / divisor` in `Z[q]`.
    pub fn exact_divide(&self, divisor: &QPolynomial) -> Result<QPolynomial> {
        let Some(dd) = divisor.degree() else {
            return Err(Error::Arithmetic("division by the zero polynomial".into()));
        };
        if self.is_zero() {
            return Ok(Self::zero());
        }
        let nd = self.degree().unwrap();
        if nd < dd {
            return Err(Error::Arithmetic(format!(
                "degree {nd} polynomial is not divisible by a degree {dd} polynomial"
            )));
        }
        let lead = &divisor.coeffs[dd];
        let mut rem = self.coeffs.clone();
        let mut quot = vec![BigInt::zero(); nd - dd + 1];
        for k in (0..=nd - dd).rev() {
            let top = &rem[k + dd];
            if top.is_zero() {
                continue;
            }
            let (q, r) = top.div_rem(lead);
            if !r.is_zero() {
                return Err(Error::Arithmetic(format!(
                    "leading coefficient {lead} does not divide {top}"
                )));
            }
            for (j, dc) in divisor.coeffs.iter().enumerate() {
                rem[k + j] -= &q * dc;
            }
            quot[k] = q;
        }
        if rem.iter().any(|c| !c.is_zero()) {
            return Err(Error::Arithmetic(format!(
                "non-exact division: {self} by {divisor}"
            )));
        }
        Ok(Self::from_coeffs(quot))
    }

    /// Multiplies in place by `1 - q^d`.
    pub fn mul_one_minus_q_pow(&mut self, d: usize) {
        if self.is_zero() || d == 0 {
            *self = Self::zero();
            return;
        }
        let n = self.coeffs.len();
        self.coeffs.resize(n + d, BigInt::zero());
        for k in (d..n + d).rev() {
            let sub = self.coeffs[k - d].clone();
            self.coeffs[k] -= sub;
        }
        self.normalize();
    }

    /// Exact division by `1 - q^d`.
    pub fn div_one_minus_q_pow(&self, d: usize) -> Result<QPolynomial> {
        if d == 0 {
            return Err(Error::Arithmetic("division by 1 - q^0 = 0".into()));
        }
        if self.is_zero() {
            return Ok(Self::zero());
        }
        let n = self.coeffs.len();
        if n <= d {
            return Err(Error::Arithmetic(format!(
                "{self} is not divisible by 1 - q^{d}"
            )));
        }
        // quotient c satisfies c_k = p_k + c_{k-d}
        let qlen = n - d;
        let mut quot: Vec<BigInt> = Vec::with_capacity(qlen);
        for k in 0..qlen {
            let mut c = self.coeffs[k].clone();
            if k >= d {
                c += &quot[k - d];
            }
            quot.push(c);
        }
        // p_k = c_k - c_{k-d}, and c_k = 0 from qlen on
        for k in qlen..n {
            let carried = if k >= d {
                quot[k - d].clone()
            } else {
                BigInt::zero()
            };
            if self.coeffs[k] != -carried {
                return Err(Error::Arithmetic(format!(
                    "{self} is not divisible by 1 - q^{d}"
                )));
            }
        }
        Ok(Self::from_coeffs(quot))
    }
}

impl fmt::Display for QPolynomial {
    /// Ascending form such as `1 + q + 2q^2 - q^5`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let mag = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            first = false;
            let unit = mag.is_one();
            match k {
                0 => write!(f, "{mag}")?,
                1 if unit => write!(f, "q")?,
                1 => write!(f, "{mag}q")?,
                _ if unit => write!(f, "q^{k}")?,
                _ => write!(f, "{mag}q^{k}")?,
            }
        }
        Ok(())
    }
}

impl Add<&QPolynomial> for &QPolynomial {
    type Output = QPolynomial;
    fn add(self, rhs: &QPolynomial) -> QPolynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n)
            .map(|k| {
                let a = self.coeffs.get(k);
                let b = rhs.coeffs.get(k);
                match (a, b) {
                    (Some(a), Some(b)) => a + b,
                    (Some(a), None) => a.clone(),
                    (None, Some(b)) => b.clone(),
                    (None, None) => unreachable!(),
                }
            })
            .collect();
        QPolynomial::from_coeffs(coeffs)
    }
}

impl Add for QPolynomial {
    type Output = QPolynomial;
    fn add(self, rhs: QPolynomial) -> QPolynomial {
        &self + &rhs
    }
}

impl AddAssign<&QPolynomial> for QPolynomial {
    fn add_assign(&mut self, rhs: &QPolynomial) {
        if self.coeffs.len() < rhs.coeffs.len() {
            self.coeffs.resize(rhs.coeffs.len(), BigInt::zero());
        }
        for (a, b) in self.coeffs.iter_mut().zip(&rhs.coeffs) {
            *a += b;
        }
        self.normalize();
    }
}

impl Neg for &QPolynomial {
    type Output = QPolynomial;
    fn neg(self) -> QPolynomial {
        QPolynomial {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Neg for QPolynomial {
    type Output = QPolynomial;
    fn neg(mut self) -> QPolynomial {
        for c in &mut self.coeffs {
            *c = -std::mem::take(c);
        }
        self
    }
}

impl Sub<&QPolynomial> for &QPolynomial {
    type Output = QPolynomial;
    fn sub(self, rhs: &QPolynomial) -> QPolynomial {
        self + &(-rhs)
    }
}

impl Sub for QPolynomial {
    type Output = QPolynomial;
    fn sub(self, rhs: QPolynomial) -> QPolynomial {
        &self - &rhs
    }
}

impl Mul<&QPolynomial> for &QPolynomial {
    type Output = QPolynomial;
    fn mul(self, rhs: &QPolynomial) -> QPolynomial {
        if self.is_zero() || rhs.is_zero() {
            return QPolynomial::zero();
        }
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        QPolynomial::from_coeffs(coeffs)
    }
}

impl Mul for QPolynomial {
    type Output = QPolynomial;
    fn mul(self, rhs: QPolynomial) -> QPolynomial {
        &self * &rhs
    }
}

impl std::iter::Sum for QPolynomial {
    fn sum<I: Iterator<Item = QPolynomial>>(iter: I) -> Self {
        iter.fold(QPolynomial::zero(), |mut acc, p| {
            acc += &p;
            acc
        })
    }
}

/// Wire form `{"variable":"q","coefficients":["1","1"]}`; coefficients are
/// decimal strings so big integers survive any JSON reader.
#[derive(Serialize, Deserialize)]
struct QPolynomialJson {
    variable: String,
    coefficients: Vec<String>,
}

impl Serialize for QPolynomial {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        QPolynomialJson {
            variable: "q".into(),
            coefficients: self.coeffs.iter().map(|c| c.to_string()).collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for QPolynomial {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let raw = QPolynomialJson::deserialize(d)?;
        if raw.variable != "q" {
            return Err(serde::de::Error::custom(format!(
                "unsupported variable {:?}",
                raw.variable
            )));
        }
        let coeffs = raw
            .coefficients
            .iter()
            .map(|s| s.parse::<BigInt>().map_err(serde::de::Error::custom))
            .collect::<std::result::Result<Vec<_>, _>>()?;
        Ok(QPolynomial::from_coeffs(coeffs))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> QPolynomial {
        QPolynomial::from_i64s(c)
    }

    #[test]
    fn canonical_form_drops_trailing_zeros() {
        assert_eq!(p(&[1, 0, 0]), p(&[1]));
        assert!(p(&[0, 0]).is_zero());
        assert_eq!(p(&[]).coeffs().len(), 0);
    }

    #[test]
    fn product_and_quotients() {
        assert_eq!(&p(&[1, 1]) * &p(&[1, 0, 1]), p(&[1, 1, 1, 1]));
        let q = QPolynomial::one_minus_q_pow(4)
            .exact_divide(&QPolynomial::one_minus_q_pow(2))
            .unwrap();
        assert_eq!(q, p(&[1, 0, 1]));
        assert!(matches!(
            QPolynomial::one_minus_q_pow(3).exact_divide(&QPolynomial::one_minus_q_pow(2)),
            Err(Error::Arithmetic(_))
        ));
    }

    #[test]
    fn divide_by_cyclotomic_binomial() {
        let q = QPolynomial::one_minus_q_pow(4)
            .div_one_minus_q_pow(2)
            .unwrap();
        assert_eq!(q, p(&[1, 0, 1]));
        assert!(QPolynomial::one_minus_q_pow(3)
            .div_one_minus_q_pow(2)
            .is_err());
        assert!(p(&[1, 1]).div_one_minus_q_pow(1).is_err());
        let mut x = p(&[1, 1, 1]);
        x.mul_one_minus_q_pow(3);
        assert_eq!(x.div_one_minus_q_pow(3).unwrap(), p(&[1, 1, 1]));
    }

    #[test]
    fn symmetry_and_unimodality() {
        assert!(p(&[1, 1, 1]).is_symmetric() && p(&[1, 1, 1]).is_unimodal());
        let dip = p(&[1, 2, 1, 2, 1]);
        assert!(dip.is_symmetric());
        assert!(!dip.is_unimodal());
        assert_eq!(dip.unimodality_violation(), Some(3));
        let sp6 = p(&[1, 1, 2, 2, 3, 2, 3, 1, 1]);
        assert!(!sp6.is_symmetric());
        assert!(!sp6.is_unimodal());
        assert!(p(&[1, 2, 2, 1]).is_unimodal());
    }

    #[test]
    fn display_forms() {
        assert_eq!(p(&[1, 1, 2, 0, -1]).to_string(), "1 + q + 2q^2 - q^4");
        assert_eq!(p(&[0, -3]).to_string(), "-3q");
        assert_eq!(QPolynomial::zero().to_string(), "0");
    }

    #[test]
    fn json_wire_form() {
        let s = serde_json::to_string(&p(&[1, 0, 2])).unwrap();
        assert_eq!(s, r#"{"variable":"q","coefficients":["1","0","2"]}"#);
        let back: QPolynomial = serde_json::from_str(&s).unwrap();
        assert_eq!(back, p(&[1, 0, 2]));
        assert_eq!(
            serde_json::to_string(&QPolynomial::one()).unwrap(),
            r#"{"variable":"q","coefficients":["1"]}"#
        );
    }

    #[test]
    fn exponent_multiset_and_eval() {
        assert_eq!(p(&[0, 1, 2]).exponent_multiset().unwrap(), vec![1, 2, 2]);
        assert!(p(&[1, -1]).exponent_multiset().is_err());
        assert_eq!(p(&[1, 2, 3]).eval_at_one(), BigInt::from(6));
        assert_eq!(p(&[1, 2, 3]).eval(&BigInt::from(2)), BigInt::from(17));
    }
}
