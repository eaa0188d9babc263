//! Freudenthal's multiplicity recursion over dominant weights.

use std::collections::{HashMap, HashSet, VecDeque};

use num_bigint::BigInt;
use num_traits::{One, ToPrimitive};

use crate::weightlat::{RootSystem, Weight};
use crate::{Error, Result};

/// Dominant weights `μ ≤ λ`, ordered by decreasing height then by coordinates.
///
/// Any two dominant weights `μ < ν ≤ λ` are joined by a chain of positive
/// roots through dominant weights, so a breadth-first search that subtracts
/// positive roots and keeps dominant results reaches every one of them.
pub(crate) fn dominant_weights_below(rs: &RootSystem, lambda: &Weight) -> Vec<Weight> {
    let mut seen: HashSet<Weight> = HashSet::new();
    let mut queue = VecDeque::new();
    seen.insert(lambda.clone());
    queue.push_back(lambda.clone());
    while let Some(mu) = queue.pop_front() {
        for alpha in rs.positive_roots_as_weights() {
            let nu = &mu - alpha;
            if nu.is_dominant() && !seen.contains(&nu) {
                seen.insert(nu.clone());
                queue.push_back(nu);
            }
        }
    }
    let mut out: Vec<Weight> = seen.into_iter().collect();
    sort_by_height_desc(rs, &mut out);
    out
}

pub(crate) fn sort_by_height_desc(rs: &RootSystem, ws: &mut [Weight]) {
    ws.sort_by(|a, b| rs.height2(b).cmp(&rs.height2(a)).then_with(|| b.cmp(a)));
}

/// Weyl dimension formula `∏ (λ+ρ, α^∨) / (ρ, α^∨)`.
pub fn weyl_dimension(rs: &RootSystem, lambda: &Weight) -> BigInt {
    let lr = lambda + &rs.rho();
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for k in 0..rs.num_positive_roots() {
        num *= rs.pairing(&lr, k);
        den *= rs.coroot_height(k);
    }
    num / den
}

/// Multiplicities of all dominant weights of `V_λ`, same order as
/// [`dominant_weights_below`].
pub(crate) fn dominant_multiplicities(
    rs: &RootSystem,
    lambda: &Weight,
) -> Result<Vec<(Weight, u64)>> {
    let doms = dominant_weights_below(rs, lambda);
    let rho = rs.rho();
    let lr = lambda + &rho;
    let top_norm = rs.inner_scaled(&lr, &lr) as i128;
    let mut mult: HashMap<Weight, u64> = HashMap::with_capacity(doms.len());
    let mut out = Vec::with_capacity(doms.len());
    for mu in doms {
        let m = if &mu == lambda {
            1
        } else {
            let mut sum: i128 = 0;
            for alpha in rs.positive_roots_as_weights() {
                let mut x = &mu + alpha;
                loop {
                    let dom = rs.dominant_representative(&x);
                    let Some(&mx) = mult.get(&dom) else { break };
                    sum += 2 * (mx as i128) * rs.inner_scaled(&x, alpha) as i128;
                    x = &x + alpha;
                }
            }
            let mr = &mu + &rho;
            let denom = top_norm - rs.inner_scaled(&mr, &mr) as i128;
            if denom <= 0 || sum % denom != 0 {
                return Err(Error::Internal(format!(
                    "Freudenthal recursion for {rs} λ={lambda} at μ={mu}: {sum}/{denom} is not a nonnegative integer"
                )));
            }
            (sum / denom)
                .to_u64()
                .ok_or_else(|| Error::Internal(format!("negative multiplicity at {mu}")))?
        };
        mult.insert(mu.clone(), m);
        out.push((mu, m));
    }
    Ok(out)
}
