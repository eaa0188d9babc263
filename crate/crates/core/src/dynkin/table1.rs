//! Dynkin polynomials of the weight multiplicity free representations,
//! stored in factored form.
//!
//! Weights use Bourbaki numbering. The 56-dimensional representation of E7
//! is `ϖ_7` here; the classification table it comes from labels it `ϖ_1`.

use std::fmt;

use crate::qpoly::{gaussian_binomial, QPolynomial};
use crate::weightlat::{TypeLetter, Weight};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Factor {
    /// `1 + q^s + q^{2s} + ... + q^{(k-1)s}`
    Geometric {
        step: usize,
        terms: usize,
    },
    /// `[m+n over n]_q`
    Gaussian {
        m: usize,
        n: usize,
    },
    Coefficients(Vec<i64>),
}

impl Factor {
    pub fn expand(&self) -> QPolynomial {
        match self {
            Factor::Geometric { step, terms } => {
                let mut c = vec![0i64; (terms - 1) * step + 1];
                for k in 0..*terms {
                    c[k * step] = 1;
                }
                QPolynomial::from_i64s(&c)
            }
            Factor::Gaussian { m, n } => gaussian_binomial(*m, *n),
            Factor::Coefficients(c) => QPolynomial::from_i64s(c),
        }
    }
}

impl fmt::Display for Factor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Factor::Gaussian { m, n } => write!(f, "[{} over {}]", m + n, n),
            other => write!(f, "({})", other.expand()),
        }
    }
}

#[derive(Debug, Clone)]
pub struct Table1Entry {
    pub row: &'static str,
    pub type_letter: TypeLetter,
    pub rank: usize,
    pub weight: Weight,
    pub minuscule: bool,
    pub factors: Vec<Factor>,
}

impl Table1Entry {
    pub fn expected(&self) -> QPolynomial {
        self.factors
            .iter()
            .fold(QPolynomial::one(), |acc, f| &acc * &f.expand())
    }

    pub fn label(&self) -> String {
        format!("{}{} {}", self.type_letter, self.rank, self.weight)
    }

    pub fn factored(&self) -> String {
        self.factors.iter().map(ToString::to_string).collect()
    }
}

fn geo(step: usize, terms: usize) -> Factor {
    Factor::Geometric { step, terms }
}

fn plus(k: usize) -> Factor {
    geo(k, 2)
}

/// Every row of the table, instantiated for ranks up to `max_n` and, for
/// `mϖ_1`, multiples `2 ≤ m ≤ max_m`.
pub fn table1_entries(max_n: usize, max_m: usize) -> Vec<Table1Entry> {
    use TypeLetter::*;
    let mut out = Vec::new();
    let mut push = |row, t, n, weight, minuscule, factors| {
        out.push(Table1Entry {
            row,
            type_letter: t,
            rank: n,
            weight,
            minuscule,
            factors,
        })
    };
    for n in 1..=max_n {
        for i in 1..=n {
            push(
                "A_n ϖ_i",
                A,
                n,
                Weight::fundamental(n, i),
                true,
                vec![Factor::Gaussian { m: n + 1 - i, n: i }],
            );
        }
        for m in 2..=max_m {
            push(
                "A_n mϖ_1",
                A,
                n,
                Weight::fundamental(n, 1).scaled(m as i64),
                false,
                vec![Factor::Gaussian { m, n }],
            );
            push(
                "A_n mϖ_n",
                A,
                n,
                Weight::fundamental(n, n).scaled(m as i64),
                false,
                vec![Factor::Gaussian { m, n }],
            );
        }
    }
    for n in 2..=max_n {
        push(
            "B_n ϖ_n",
            B,
            n,
            Weight::fundamental(n, n),
            true,
            (1..=n).map(plus).collect(),
        );
        push(
            "B_n ϖ_1",
            B,
            n,
            Weight::fundamental(n, 1),
            false,
            vec![geo(1, 2 * n + 1)],
        );
        push(
            "C_n ϖ_1",
            C,
            n,
            Weight::fundamental(n, 1),
            true,
            vec![geo(1, 2 * n)],
        );
    }
    if max_n >= 3 {
        push(
            "C_3 ϖ_3",
            C,
            3,
            Weight::fundamental(3, 3),
            false,
            vec![Factor::Coefficients(vec![1, 1, 1, 2, 2, 2, 2, 1, 1, 1])],
        );
    }
    for n in 4..=max_n {
        push(
            "D_n ϖ_1",
            D,
            n,
            Weight::fundamental(n, 1),
            true,
            vec![plus(n - 1), geo(1, n)],
        );
        push(
            "D_n ϖ_{n-1}",
            D,
            n,
            Weight::fundamental(n, n - 1),
            true,
            (1..n).map(plus).collect(),
        );
        push(
            "D_n ϖ_n",
            D,
            n,
            Weight::fundamental(n, n),
            true,
            (1..n).map(plus).collect(),
        );
    }
    if max_n >= 6 {
        push(
            "E_6 ϖ_1",
            E,
            6,
            Weight::fundamental(6, 1),
            true,
            vec![geo(4, 3), geo(1, 9)],
        );
    }
    if max_n >= 7 {
        push(
            "E_7 ϖ_1",
            E,
            7,
            Weight::fundamental(7, 7),
            true,
            vec![plus(5), plus(9), geo(1, 14)],
        );
    }
    if max_n >= 2 {
        push(
            "G_2 ϖ_1",
            G,
            2,
            Weight::fundamental(2, 1),
            false,
            vec![geo(1, 7)],
        );
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn factor_expansion() {
        assert_eq!(
            geo(4, 3).expand(),
            QPolynomial::from_i64s(&[1, 0, 0, 0, 1, 0, 0, 0, 1])
        );
        assert_eq!(
            Factor::Gaussian { m: 2, n: 2 }.expand(),
            QPolynomial::from_i64s(&[1, 1, 2, 1, 1])
        );
    }

    #[test]
    fn every_row_is_present() {
        let rows: std::collections::BTreeSet<&str> =
            table1_entries(8, 3).iter().map(|e| e.row).collect();
        assert_eq!(rows.len(), 13);
    }

    #[test]
    fn values_at_one_are_dimensions() {
        for e in table1_entries(8, 3) {
            if e.row == "E_7 ϖ_1" {
                assert_eq!(e.expected().eval_at_one(), 56.into());
            }
            if e.row == "E_6 ϖ_1" {
                assert_eq!(e.expected().eval_at_one(), 27.into());
            }
        }
    }
}
