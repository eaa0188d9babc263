//! Dynkin polynomials: the character-floor sum, the root product, the
//! minuscule quotient, spindle checks and the Hermite reciprocity identities.

mod table1;

pub use table1::{table1_entries, Factor, Table1Entry};

use num_bigint::BigInt;
use serde::Serialize;

use crate::charmult::{floor_profile, is_minuscule, weyl_dimension};
use crate::qpoly::{cyclo_product, QPolynomial};
use crate::weightlat::{RootSystem, TypeLetter, Weight};
use crate::{Budget, Error, Result};

fn check_laws(rs: &RootSystem, lambda: &Weight, d: &QPolynomial, how: &str) -> Result<()> {
    if d.degree() != Some(rs.height2(lambda) as usize) {
        return Err(Error::Internal(format!(
            "{how} D_λ for {rs} λ={lambda} has degree {:?}",
            d.degree()
        )));
    }
    if d.eval_at_one() != weyl_dimension(rs, lambda) {
        return Err(Error::Internal(format!(
            "{how} D_λ for {rs} λ={lambda} does not give dim V_λ at q = 1"
        )));
    }
    Ok(())
}

/// `D_λ(q) = Σ_μ m_λ^μ q^{hot(λ+μ)}`, from the character.
pub fn dynkin_sum(rs: &RootSystem, lambda: &Weight, budget: &Budget) -> Result<QPolynomial> {
    let d = floor_profile(rs, lambda, budget)?;
    check_laws(rs, lambda, &d, "floor")?;
    Ok(d)
}

/// `D_λ(q) = ∏_{α>0} (1 − q^{(λ+ρ, α^∨)}) / (1 − q^{(ρ, α^∨)})`.
pub fn dynkin_product(rs: &RootSystem, lambda: &Weight) -> Result<QPolynomial> {
    rs.check_dominant(lambda)?;
    let lr = lambda + &rs.rho();
    let num: Vec<usize> = (0..rs.num_positive_roots())
        .map(|k| rs.pairing(&lr, k) as usize)
        .collect();
    let den: Vec<usize> = (0..rs.num_positive_roots())
        .map(|k| rs.coroot_height(k) as usize)
        .collect();
    let d = cyclo_product(&num, &den)
        .map_err(|e| Error::Internal(format!("root product for {rs} λ={lambda}: {e}")))?;
    check_laws(rs, lambda, &d, "product")?;
    Ok(d)
}

/// `D_λ(q) = t_0(q) / t_λ(q)` for minuscule `λ`.
pub fn dynkin_minuscule(rs: &RootSystem, lambda: &Weight) -> Result<QPolynomial> {
    if !is_minuscule(rs, lambda)? {
        return Err(Error::Domain(format!("{rs} λ={lambda} is not minuscule")));
    }
    cyclo_product(rs.degrees(), &rs.parabolic_degrees(lambda)?)
}

#[derive(Debug, Clone, Serialize)]
pub struct SpindleReport {
    pub polynomial: QPolynomial,
    pub symmetric: bool,
    pub unimodal: bool,
    pub degree_law: bool,
    pub dimension_law: bool,
    pub symmetry_violation: Option<usize>,
    pub unimodality_violation: Option<usize>,
}

impl SpindleReport {
    pub fn of(p: QPolynomial, degree: usize, dimension: &BigInt) -> Self {
        SpindleReport {
            symmetric: p.is_symmetric(),
            unimodal: p.is_unimodal(),
            degree_law: p.degree() == Some(degree),
            dimension_law: &p.eval_at_one() == dimension,
            symmetry_violation: p.symmetry_violation(),
            unimodality_violation: p.unimodality_violation(),
            polynomial: p,
        }
    }

    pub fn all_hold(&self) -> bool {
        self.symmetric && self.unimodal && self.degree_law && self.dimension_law
    }
}

/// Symmetry, unimodality, `deg = 2 hot(λ)` and `D(1) = dim V_λ` for the root
/// product.
pub fn verify_spindle(rs: &RootSystem, lambda: &Weight) -> Result<SpindleReport> {
    rs.check_dominant(lambda)?;
    let lr = lambda + &rs.rho();
    let num: Vec<usize> = (0..rs.num_positive_roots())
        .map(|k| rs.pairing(&lr, k) as usize)
        .collect();
    let den: Vec<usize> = (0..rs.num_positive_roots())
        .map(|k| rs.coroot_height(k) as usize)
        .collect();
    let d = cyclo_product(&num, &den)?;
    Ok(SpindleReport::of(
        d,
        rs.height2(lambda) as usize,
        &weyl_dimension(rs, lambda),
    ))
}

#[derive(Debug, Clone, Serialize)]
pub struct HermiteReport {
    pub m: usize,
    pub n: usize,
    /// `D_{mϖ_1}(sl_{n+1})`
    pub value: QPolynomial,
    /// equals `D_{nϖ_1}(sl_{m+1})`
    pub reciprocity: bool,
    /// equals `D_{ϖ_m}(sl_{m+n})`
    pub exterior: bool,
}

impl HermiteReport {
    pub fn holds(&self) -> bool {
        self.reciprocity && self.exterior
    }
}

pub fn hermite_identities(m: usize, n: usize) -> Result<HermiteReport> {
    if m == 0 || n == 0 {
        return Err(Error::Usage("Hermite identities need m, n ≥ 1".into()));
    }
    let d = |rank: usize, w: Weight| -> Result<QPolynomial> {
        dynkin_product(&RootSystem::new(TypeLetter::A, rank)?, &w)
    };
    let value = d(n, Weight::fundamental(n, 1).scaled(m as i64))?;
    let swapped = d(m, Weight::fundamental(m, 1).scaled(n as i64))?;
    let wedge = d(m + n - 1, Weight::fundamental(m + n - 1, m))?;
    Ok(HermiteReport {
        m,
        n,
        reciprocity: value == swapped,
        exterior: value == wedge,
        value,
    })
}
