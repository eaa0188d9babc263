//! Lusztig's q-analogues of weight multiplicity and the polynomials built
//! from them: parabolic factors `t_λ(q)`, generalized exponents, jump
//! polynomials of `V_λ ⊗ V_μ*`, `F_λ(q)`, and the Poincaré series of the
//! endomorphism algebras `C_λ(g)` and `C_λ(t)`.

mod explicit;
mod kostant;

pub use explicit::{end_jump_polynomial, jump_polynomial, HighestWeightModule, SparseMat};
pub use kostant::{kostant_partition_q, kostant_table, QKostantTable};

use num_bigint::BigInt;
use num_traits::Zero;
use rayon::prelude::*;

use crate::charmult::{dominant_character, dominant_weights, is_weight_of, is_wmf};
use crate::qpoly::{cyclo_product, GradedSeries, QPolynomial};
use crate::weightlat::{weyl, RootSystem, TypeLetter, Weight};
use crate::{Budget, Error, Result};

/// `m_λ^μ(q) = Σ_w det(w) P_q(w(λ+ρ) − μ − ρ)`.
///
/// Only the part of the orbit of `λ+ρ` lying above `μ+ρ` contributes, and
/// that part is closed upward, so the traversal stops at the first element
/// outside it. The nonnegativity, support and degree properties, and the
/// value at `q = 1`, are all checked before returning.
pub fn lusztig_q_multiplicity(
    rs: &RootSystem,
    lambda: &Weight,
    mu: &Weight,
    budget: &Budget,
) -> Result<QPolynomial> {
    rs.check_dominant(lambda)?;
    rs.check_dominant(mu)?;
    if !budget.full_weyl {
        budget.check_weyl_order(rs.weyl_order_u128())?;
    }
    let rho = rs.rho();
    let base = mu + &rho;
    let shifted = lambda + &rho;
    let above = |x: &Weight| {
        rs.root_coords(&(x - &base))
            .map(|c| c.iter().all(|&v| v >= 0))
            .unwrap_or(false)
    };
    let mut terms: Vec<(Vec<i64>, bool)> = Vec::new();
    weyl::orbit_layers(rs, &shifted, above, |x, len| {
        if let Some(c) = rs.root_coords(&(x - &base)) {
            terms.push((c, len % 2 == 0));
        }
    });
    let table = kostant_table(rs);
    let result: QPolynomial = terms
        .par_iter()
        .map(|(c, even)| {
            let p = table.get(c);
            if *even {
                p
            } else {
                -p
            }
        })
        .reduce(QPolynomial::zero, |a, b| a + b);

    let label = || format!("m_{lambda}^{mu}(q) in {rs}");
    if result.coeffs().iter().any(|c| c < &BigInt::zero()) {
        return Err(Error::Internal(format!(
            "{} = {result} has a negative coefficient",
            label()
        )));
    }
    let support = is_weight_of(rs, lambda, mu);
    if result.is_zero() == support {
        return Err(Error::Internal(format!(
            "{} = {result}, but μ ⊣ V_λ is {support}",
            label()
        )));
    }
    if support {
        let deg = rs.height_int(&(lambda - mu)).map(|h| h as usize);
        if result.degree() != deg {
            return Err(Error::Internal(format!(
                "{} = {result} has degree other than hot(λ−μ)",
                label()
            )));
        }
        let m = dominant_character(rs, lambda, budget)?.multiplicity(mu);
        if result.eval_at_one() != BigInt::from(m) {
            return Err(Error::Internal(format!(
                "{} = {result} does not evaluate to m = {m}",
                label()
            )));
        }
    }
    Ok(result)
}

/// `t_λ(q) = ∏ (1 − q^{d_i(W_λ)}) / (1 − q)`. For `λ = 0` the result is also
/// compared with the root-height product.
pub fn t_poly(rs: &RootSystem, lambda: &Weight) -> Result<QPolynomial> {
    let degs = rs.parabolic_degrees(lambda)?;
    let t = cyclo_product(&degs, &vec![1; rs.rank()])?;
    if lambda.is_zero() {
        let k = t0_by_heights(rs)?;
        if k != t {
            return Err(Error::Internal(format!(
                "{rs}: t_0 from degrees {t} differs from height product {k}"
            )));
        }
    }
    Ok(t)
}

/// `t_0(q) = ∏_{α>0} (1 − q^{hot(α)+1}) / (1 − q^{hot(α)})`.
pub fn t0_by_heights(rs: &RootSystem) -> Result<QPolynomial> {
    let heights: Vec<usize> = rs
        .positive_roots()
        .iter()
        .map(|r| r.iter().sum::<i64>() as usize)
        .collect();
    let shifted: Vec<usize> = heights.iter().map(|h| h + 1).collect();
    cyclo_product(&shifted, &heights)
}

/// `t_0(q) / t_ν(q) = ∏ (1 − q^{d_i}) / (1 − q^{d_i(W_ν)})`.
pub fn t_ratio(rs: &RootSystem, nu: &Weight) -> Result<QPolynomial> {
    cyclo_product(rs.degrees(), &rs.parabolic_degrees(nu)?)
}

/// Exponents of `m_λ^0(q)` with multiplicity.
pub fn generalized_exponents(
    rs: &RootSystem,
    lambda: &Weight,
    budget: &Budget,
) -> Result<Vec<usize>> {
    rs.check_dominant(lambda)?;
    if !rs.in_root_lattice(lambda) {
        return Err(Error::Domain(format!(
            "{lambda} is not in the root lattice, so V_λ has no zero weight and no covariants"
        )));
    }
    lusztig_q_multiplicity(rs, lambda, &Weight::zero(rs.rank()), budget)?.exponent_multiset()
}

/// Jump polynomial of `V_λ ⊗ V_μ*` as `Σ_ν m_λ^ν(q) m_μ^ν(q) t_0/t_ν`.
pub fn jump_tensor(
    rs: &RootSystem,
    lambda: &Weight,
    mu: &Weight,
    budget: &Budget,
) -> Result<QPolynomial> {
    rs.check_dominant(mu)?;
    let mut total = QPolynomial::zero();
    for nu in dominant_weights(rs, lambda)? {
        if !is_weight_of(rs, mu, &nu) {
            continue;
        }
        let a = lusztig_q_multiplicity(rs, lambda, &nu, budget)?;
        let b = if lambda == mu {
            a.clone()
        } else {
            lusztig_q_multiplicity(rs, mu, &nu, budget)?
        };
        total += &(&(&a * &b) * &t_ratio(rs, &nu)?);
    }
    Ok(total)
}

/// `Σ_{μ ⊣ V_λ dominant} q^{2 hot(λ−μ)} t_0/t_μ`, valid for wmf `λ` only.
pub fn f_lambda_closed_form(
    rs: &RootSystem,
    lambda: &Weight,
    budget: &Budget,
) -> Result<QPolynomial> {
    if !is_wmf(rs, lambda, budget)? {
        return Err(Error::Domain(format!(
            "{rs} λ={lambda} is not weight multiplicity free"
        )));
    }
    let mut total = QPolynomial::zero();
    for mu in dominant_weights(rs, lambda)? {
        let shift = rs.height2(&(lambda - &mu)) as usize;
        total += &t_ratio(rs, &mu)?.shift(shift);
    }
    Ok(total)
}

fn closed_form_only(rs: &RootSystem, budget: &Budget) -> bool {
    !budget.full_weyl
        && (rs.type_letter() == TypeLetter::E
            || budget.check_weyl_order(rs.weyl_order_u128()).is_err())
}

/// `F_λ(q)`, the jump polynomial of `End V_λ`.
///
/// For wmf `λ` the closed form is computed as well and must agree; in type E
/// and whenever `|W|` exceeds the budget, only the closed form is used
/// unless `budget.full_weyl` is set. Degree
/// `2 hot(λ)` and value `Σ (m_λ^μ)^2` at `q = 1` are checked.
pub fn f_lambda(rs: &RootSystem, lambda: &Weight, budget: &Budget) -> Result<QPolynomial> {
    rs.check_dominant(lambda)?;
    let wmf = is_wmf(rs, lambda, budget)?;
    let f = if wmf && closed_form_only(rs, budget) {
        f_lambda_closed_form(rs, lambda, budget)?
    } else {
        let jump = jump_tensor(rs, lambda, lambda, budget)?;
        if wmf {
            let closed = f_lambda_closed_form(rs, lambda, budget)?;
            if closed != jump {
                return Err(Error::Internal(format!(
                    "{rs} λ={lambda}: jump sum {jump} differs from closed form {closed}"
                )));
            }
        }
        jump
    };
    if f.degree() != Some(rs.height2(lambda) as usize) {
        return Err(Error::Internal(format!(
            "{rs} λ={lambda}: deg F = {:?}, expected 2 hot(λ)",
            f.degree()
        )));
    }
    let squares: u128 = dominant_character(rs, lambda, budget)?
        .entries
        .iter()
        .map(|(mu, m)| rs.weyl_orbit(mu).len() as u128 * (*m as u128) * (*m as u128))
        .sum();
    if f.eval_at_one() != BigInt::from(squares) {
        return Err(Error::Internal(format!(
            "{rs} λ={lambda}: F(1) = {} but Σ m² = {squares}",
            f.eval_at_one()
        )));
    }
    Ok(f)
}

/// Poincaré series of `C_λ(g) = (End V_λ ⊗ k[g])^G`: numerator
/// `Σ_ν (m_λ^ν(q))^2 t_0/t_ν` over the degrees of `W`.
pub fn poincare_cg(rs: &RootSystem, lambda: &Weight, budget: &Budget) -> Result<GradedSeries> {
    Ok(GradedSeries::new(
        f_lambda(rs, lambda, budget)?,
        rs.degrees().to_vec(),
    ))
}

/// Poincaré series of `C_λ(t)`: numerator `Σ_{ν ⊣ V_λ dominant} t_0/t_ν`.
pub fn poincare_ct(rs: &RootSystem, lambda: &Weight) -> Result<GradedSeries> {
    let mut num = QPolynomial::zero();
    for nu in dominant_weights(rs, lambda)? {
        num += &t_ratio(rs, &nu)?;
    }
    Ok(GradedSeries::new(num, rs.degrees().to_vec()))
}
