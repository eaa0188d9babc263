use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::{cyclo_product, QPolynomial};

/// Exponents `e_k` with `p = ∏_k (1 - q^k)^{e_k}`, if such a finite product exists.
///
/// Uses the logarithmic derivative: `q p'/p = -Σ_N (Σ_{k|N} k e_k) q^N`.
/// The candidate is verified by re-expansion, so a `Some` is always exact.
pub fn cyclotomic_exponents(p: &QPolynomial) -> Option<BTreeMap<usize, i64>> {
    if p.coeff(0) != BigInt::one() {
        return None;
    }
    let deg = p.degree()?;
    let bound = 2 * deg + 4;
    let pc: Vec<BigInt> = (0..=bound).map(|k| p.coeff(k)).collect();
    // L = q p' / p as a power series, p_0 = 1
    let mut log_der: Vec<BigInt> = Vec::with_capacity(bound + 1);
    for n in 0..=bound {
        let mut v = BigInt::from(n) * &pc[n];
        for j in 1..=n {
            if !pc[j].is_zero() {
                v -= &pc[j] * &log_der[n - j];
            }
        }
        log_der.push(v);
    }
    let mut exps: BTreeMap<usize, i64> = BTreeMap::new();
    for n in 1..=bound {
        let mut rhs = -log_der[n].clone();
        for (&k, &e) in exps.iter() {
            if k < n && n % k == 0 {
                rhs -= BigInt::from(k) * BigInt::from(e);
            }
        }
        let (e, r) = rhs.div_rem(&BigInt::from(n));
        if !r.is_zero() {
            return None;
        }
        let e: i64 = (&e).try_into().ok()?;
        if e != 0 {
            exps.insert(n, e);
        }
    }
    let (num, den) = split_exponents(&exps);
    match cyclo_product(&num, &den) {
        Ok(ref back) if back == p => Some(exps),
        _ => None,
    }
}

fn split_exponents(exps: &BTreeMap<usize, i64>) -> (Vec<usize>, Vec<usize>) {
    let mut num = Vec::new();
    let mut den = Vec::new();
    for (&k, &e) in exps {
        let target = if e > 0 { &mut num } else { &mut den };
        target.extend(std::iter::repeat_n(k, e.unsigned_abs() as usize));
    }
    (num, den)
}

/// A polynomial written as a product of geometric sums
/// `1 + q^b + ... + q^{(t-1)b}`, for human-readable output.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CycloFactorization {
    /// Geometric factors as `(step, terms)` pairs, largest first.
    Geometric(Vec<(usize, usize)>),
    /// Quotient that does not pair up into geometric sums.
    Quotient {
        numer: Vec<usize>,
        denom: Vec<usize>,
    },
}

impl CycloFactorization {
    pub fn of(p: &QPolynomial) -> Option<Self> {
        let exps = cyclotomic_exponents(p)?;
        let (mut num, mut den) = split_exponents(&exps);
        num.sort_unstable_by(|a, b| b.cmp(a));
        den.sort_unstable_by(|a, b| b.cmp(a));
        let mut remaining = den.clone();
        let mut factors = Vec::new();
        for &a in &num {
            match remaining.iter().position(|&b| a % b == 0) {
                Some(i) => {
                    let b = remaining.remove(i);
                    factors.push((b, a / b));
                }
                None => {
                    return Some(CycloFactorization::Quotient {
                        numer: num,
                        denom: den,
                    })
                }
            }
        }
        if !remaining.is_empty() {
            return Some(CycloFactorization::Quotient {
                numer: num,
                denom: den,
            });
        }
        factors.retain(|&(_, t)| t > 1);
        // short sums (two or three terms) first, each group by step
        factors.sort_by_key(|&(step, terms)| (terms > 3, step, terms));
        Some(CycloFactorization::Geometric(factors))
    }

    /// Number of displayed factors.
    pub fn len(&self) -> usize {
        match self {
            CycloFactorization::Geometric(f) => f.len(),
            CycloFactorization::Quotient { numer, .. } => numer.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

fn q_pow(k: usize) -> String {
    match k {
        0 => "1".into(),
        1 => "q".into(),
        _ => format!("q^{k}"),
    }
}

impl fmt::Display for CycloFactorization {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CycloFactorization::Geometric(factors) => {
                if factors.is_empty() {
                    return write!(f, "1");
                }
                for &(step, terms) in factors {
                    match terms {
                        2 => write!(f, "(1 + {})", q_pow(step))?,
                        3 => write!(f, "(1 + {} + {})", q_pow(step), q_pow(2 * step))?,
                        _ => write!(
                            f,
                            "(1 + {} + ... + {})",
                            q_pow(step),
                            q_pow((terms - 1) * step)
                        )?,
                    }
                }
                Ok(())
            }
            CycloFactorization::Quotient { numer, denom } => {
                for &a in numer {
                    write!(f, "(1 - {})", q_pow(a))?;
                }
                if !denom.is_empty() {
                    write!(f, " / (")?;
                    for &b in denom {
                        write!(f, "(1 - {})", q_pow(b))?;
                    }
                    write!(f, ")")?;
                }
                Ok(())
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qpoly::gaussian_binomial;

    #[test]
    fn recovers_e7_minuscule_form() {
        let p = &(&QPolynomial::from_i64s(&[1, 0, 0, 0, 0, 1])
            * &QPolynomial::from_coeffs({
                let mut c = vec![BigInt::zero(); 10];
                c[0] = BigInt::one();
                c[9] = BigInt::one();
                c
            }))
            * &QPolynomial::q_integer(14);
        let f = CycloFactorization::of(&p).unwrap();
        assert_eq!(f.to_string(), "(1 + q^5)(1 + q^9)(1 + q + ... + q^13)");
    }

    #[test]
    fn gaussian_binomials_pair_up() {
        let f = CycloFactorization::of(&gaussian_binomial(2, 2)).unwrap();
        assert_eq!(f.to_string(), "(1 + q + q^2)(1 + q^2)");
    }

    #[test]
    fn non_cyclotomic_polynomials_have_no_factorization() {
        let sp6 = QPolynomial::from_i64s(&[1, 1, 2, 2, 3, 2, 3, 1, 1]);
        assert!(cyclotomic_exponents(&sp6).is_none());
        assert!(CycloFactorization::of(&QPolynomial::from_i64s(&[1, 3, 1])).is_none());
    }

    #[test]
    fn geometric_sum_is_one_factor() {
        let f = CycloFactorization::of(&QPolynomial::q_integer(7)).unwrap();
        assert_eq!(f.len(), 1);
        assert_eq!(f.to_string(), "(1 + q + ... + q^6)");
    }
}
