//! Explicit matrices for `V_λ` built from the Cartan matrix alone, and the
//! jump polynomials of `V_λ` and `End V_λ` read off from the invariants of
//! the centralizer of the principal nilpotent.
//!
//! Weight spaces are built top down. A vector of weight `ν ≠ λ` is zero
//! exactly when every `e_j` kills it, so `V^ν` is the image of the formal
//! span of `f_i V^{ν+α_i}` under `⊕_j e_j`, and `e_j f_i = f_i e_j + δ_ij h_i`
//! evaluates that map from data already built at higher weights.

use std::collections::{BTreeMap, HashMap};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::charmult::irreducible_character;
use crate::linalg::{graded_commutant, nullspace, Mat};
use crate::qpoly::QPolynomial;
use crate::weightlat::{RootSystem, Weight};
use crate::{Budget, Error, Result};

type Q = BigRational;

/// Square sparse rational matrix, stored by columns.
#[derive(Debug, Clone, PartialEq)]
pub struct SparseMat {
    cols: Vec<BTreeMap<usize, Q>>,
}

impl SparseMat {
    fn zero(n: usize) -> Self {
        SparseMat {
            cols: vec![BTreeMap::new(); n],
        }
    }

    fn add_at(&mut self, r: usize, c: usize, v: Q) {
        if v.is_zero() {
            return;
        }
        let e = self.cols[c].entry(r).or_insert_with(Q::zero);
        *e += v;
        if e.is_zero() {
            self.cols[c].remove(&r);
        }
    }

    pub fn size(&self) -> usize {
        self.cols.len()
    }

    pub fn is_zero(&self) -> bool {
        self.cols.iter().all(BTreeMap::is_empty)
    }

    fn entries(&self) -> impl Iterator<Item = (usize, usize, &Q)> {
        self.cols
            .iter()
            .enumerate()
            .flat_map(|(c, col)| col.iter().map(move |(&r, v)| (r, c, v)))
    }

    fn mul(&self, other: &SparseMat) -> SparseMat {
        let mut out = SparseMat::zero(self.size());
        for (j, col) in other.cols.iter().enumerate() {
            for (&k, b) in col {
                for (&i, a) in &self.cols[k] {
                    out.add_at(i, j, a * b);
                }
            }
        }
        out
    }

    fn lin(&self, a: &Q, other: &SparseMat, b: &Q) -> SparseMat {
        let mut out = SparseMat::zero(self.size());
        for (r, c, v) in self.entries() {
            out.add_at(r, c, v * a);
        }
        for (r, c, v) in other.entries() {
            out.add_at(r, c, v * b);
        }
        out
    }

    fn commutator(&self, other: &SparseMat) -> SparseMat {
        self.mul(other).lin(&Q::one(), &other.mul(self), &-Q::one())
    }

    /// `self = r · other` for some scalar `r`, if any.
    fn ratio_to(&self, other: &SparseMat) -> Option<Q> {
        let (r0, c0, v0) = other.entries().next()?;
        let r = self.cols[c0].get(&r0).cloned().unwrap_or_else(Q::zero) / v0;
        (self.lin(&Q::one(), other, &-r.clone()).is_zero()).then_some(r)
    }

    /// Integer multiple with coprime entries; same kernel and commutant.
    pub fn to_integer(&self) -> Mat {
        let l = self
            .entries()
            .fold(BigInt::one(), |l, (_, _, v)| l.lcm(v.denom()));
        let mut m = Mat::zero(self.size());
        for (r, c, v) in self.entries() {
            m.set(r, c, (v * Q::from_integer(l.clone())).to_integer());
        }
        m
    }
}

/// Reduced row echelon form over `Q`; returns pivot columns.
fn rref(m: &mut [Vec<Q>], ncols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut top = 0;
    for c in 0..ncols {
        let Some(p) = (top..m.len()).find(|&r| !m[r][c].is_zero()) else {
            continue;
        };
        m.swap(top, p);
        let inv = Q::one() / &m[top][c];
        for x in m[top].iter_mut() {
            *x = &*x * &inv;
        }
        let pivot_row = m[top].clone();
        for (r, row) in m.iter_mut().enumerate() {
            if r != top && !row[c].is_zero() {
                let k = row[c].clone();
                for (x, y) in row.iter_mut().zip(&pivot_row) {
                    *x -= &k * y;
                }
            }
        }
        pivots.push(c);
        top += 1;
        if top == m.len() {
            break;
        }
    }
    pivots
}

type Block = Vec<Vec<Q>>;

fn apply_block(b: &Block, v: &[Q]) -> Vec<Q> {
    b.iter()
        .map(|row| row.iter().zip(v).map(|(a, x)| a * x).sum())
        .collect()
}

/// `V_λ` with explicit Chevalley generators on a weight basis.
#[derive(Debug, Clone)]
pub struct HighestWeightModule {
    pub lambda: Weight,
    /// Weight of each basis vector.
    pub weights: Vec<Weight>,
    e: Vec<SparseMat>,
    f: Vec<SparseMat>,
}

impl HighestWeightModule {
    pub fn build(rs: &RootSystem, lambda: &Weight, budget: &Budget) -> Result<HighestWeightModule> {
        let ch = irreducible_character(rs, lambda, budget)?;
        let l = rs.rank();
        let alpha: Vec<Weight> = (0..l)
            .map(|i| Weight(rs.cartan_matrix()[i].clone()))
            .collect();
        let mut order: Vec<Weight> = ch.entries.keys().cloned().collect();
        order.sort_by(|a, b| rs.height2(b).cmp(&rs.height2(a)).then_with(|| b.cmp(a)));

        let mut dim: HashMap<Weight, usize> = HashMap::new();
        // (j, ν) ↦ e_j : V^ν → V^{ν+α_j};  (i, ν) ↦ f_i : V^ν → V^{ν−α_i}
        let mut eb: HashMap<(usize, Weight), Block> = HashMap::new();
        let mut fb: HashMap<(usize, Weight), Block> = HashMap::new();
        for nu in &order {
            if nu == lambda {
                dim.insert(nu.clone(), 1);
                continue;
            }
            let ups: Vec<usize> = (0..l)
                .filter(|&i| dim.contains_key(&(nu + &alpha[i])))
                .collect();
            let gens: Vec<(usize, usize)> = ups
                .iter()
                .flat_map(|&i| (0..dim[&(nu + &alpha[i])]).map(move |b| (i, b)))
                .collect();
            let mut rows: Vec<Vec<Q>> = Vec::new();
            let mut row_of: Vec<(usize, usize)> = Vec::new();
            for &j in &ups {
                let target = nu + &alpha[j];
                let dj = dim[&target];
                let mut block = vec![vec![Q::zero(); gens.len()]; dj];
                for (g, &(i, b)) in gens.iter().enumerate() {
                    let src = nu + &alpha[i];
                    let via = &src + &alpha[j];
                    if let (Some(e), Some(f)) =
                        (eb.get(&(j, src.clone())), fb.get(&(i, via.clone())))
                    {
                        let col: Vec<Q> = e.iter().map(|row| row[b].clone()).collect();
                        for (r, v) in apply_block(f, &col).into_iter().enumerate() {
                            block[r][g] += v;
                        }
                    }
                    if i == j {
                        block[b][g] += Q::from_integer(src.0[i].into());
                    }
                }
                for (r, row) in block.into_iter().enumerate() {
                    rows.push(row);
                    row_of.push((j, r));
                }
            }
            let full = rows.clone();
            let mut reduced = rows;
            let pivots = rref(&mut reduced, gens.len());
            let d = pivots.len();
            let expected = ch.entries[nu] as usize;
            if d != expected {
                return Err(Error::Internal(format!(
                    "explicit V_λ for {rs} λ={lambda}: weight {nu} has dimension {d}, character says {expected}"
                )));
            }
            for &j in &ups {
                let block: Block = full
                    .iter()
                    .zip(&row_of)
                    .filter(|(_, &(jj, _))| jj == j)
                    .map(|(row, _)| pivots.iter().map(|&p| row[p].clone()).collect())
                    .collect();
                eb.insert((j, nu.clone()), block);
            }
            for &i in &ups {
                let src = nu + &alpha[i];
                let block: Block = (0..d)
                    .map(|r| {
                        gens.iter()
                            .enumerate()
                            .filter(|(_, &(ii, _))| ii == i)
                            .map(|(g, _)| reduced[r][g].clone())
                            .collect()
                    })
                    .collect();
                fb.insert((i, src), block);
            }
            dim.insert(nu.clone(), d);
        }

        let mut offset: HashMap<Weight, usize> = HashMap::new();
        let mut weights = Vec::new();
        for nu in &order {
            offset.insert(nu.clone(), weights.len());
            weights.extend(std::iter::repeat_n(nu.clone(), dim[nu]));
        }
        let n = weights.len();
        let mut e = vec![SparseMat::zero(n); l];
        let mut f = vec![SparseMat::zero(n); l];
        for ((j, nu), block) in &eb {
            let (r0, c0) = (offset[&(nu + &alpha[*j])], offset[nu]);
            for (r, row) in block.iter().enumerate() {
                for (c, v) in row.iter().enumerate() {
                    e[*j].add_at(r0 + r, c0 + c, v.clone());
                }
            }
        }
        for ((i, src), block) in &fb {
            let (r0, c0) = (offset[&(src - &alpha[*i])], offset[src]);
            for (r, row) in block.iter().enumerate() {
                for (c, v) in row.iter().enumerate() {
                    f[*i].add_at(r0 + r, c0 + c, v.clone());
                }
            }
        }
        let module = HighestWeightModule {
            lambda: lambda.clone(),
            weights,
            e,
            f,
        };
        module.check_relations()?;
        Ok(module)
    }

    pub fn dimension(&self) -> usize {
        self.weights.len()
    }

    pub fn e(&self, i: usize) -> &SparseMat {
        &self.e[i]
    }

    pub fn f(&self, i: usize) -> &SparseMat {
        &self.f[i]
    }

    /// `[e_i, f_j] = δ_ij h_i`.
    fn check_relations(&self) -> Result<()> {
        let n = self.dimension();
        for i in 0..self.e.len() {
            for j in 0..self.f.len() {
                let c = self.e[i].commutator(&self.f[j]);
                let mut h = SparseMat::zero(n);
                if i == j {
                    for (k, w) in self.weights.iter().enumerate() {
                        h.add_at(k, k, Q::from_integer(w.0[i].into()));
                    }
                }
                if c != h {
                    return Err(Error::Internal(format!(
                        "explicit V_λ for λ={}: [e_{}, f_{}] is wrong",
                        self.lambda,
                        i + 1,
                        j + 1
                    )));
                }
            }
        }
        Ok(())
    }

    /// Root vectors `X_β` as nested brackets of the `e_i`, one per positive
    /// root, in the order of `rs.positive_roots()`.
    fn root_vectors(&self, rs: &RootSystem) -> Result<Vec<SparseMat>> {
        let roots = rs.positive_roots();
        let index: HashMap<&[i64], usize> = roots
            .iter()
            .enumerate()
            .map(|(k, r)| (r.as_slice(), k))
            .collect();
        let mut x: Vec<Option<SparseMat>> = vec![None; roots.len()];
        for (k, beta) in roots.iter().enumerate() {
            let height: i64 = beta.iter().sum();
            if height == 1 {
                let i = beta.iter().position(|&c| c == 1).expect("simple root");
                x[k] = Some(self.e[i].clone());
                continue;
            }
            let (j, prev) = (0..beta.len())
                .filter(|&j| beta[j] > 0)
                .find_map(|j| {
                    let mut g = beta.clone();
                    g[j] -= 1;
                    index.get(g.as_slice()).map(|&p| (j, p))
                })
                .expect("every non-simple positive root is a root plus a simple root");
            let prev = x[prev].as_ref().expect("lower roots come first");
            x[k] = Some(self.e[j].commutator(prev));
        }
        Ok(x.into_iter().map(|m| m.expect("filled")).collect())
    }

    /// Basis of the centralizer `g^e` of `e = Σ e_i`, homogeneous by height,
    /// as operators on this module. `V_λ` must be nontrivial (so faithful).
    pub fn principal_centralizer(&self, rs: &RootSystem) -> Result<Vec<(SparseMat, usize)>> {
        let roots = rs.positive_roots();
        let x = self.root_vectors(rs)?;
        let index: HashMap<&[i64], usize> = roots
            .iter()
            .enumerate()
            .map(|(k, r)| (r.as_slice(), k))
            .collect();
        // [e_j, X_β] = N X_{β+α_j}
        let mut n: HashMap<(usize, usize), Q> = HashMap::new();
        for (k, beta) in roots.iter().enumerate() {
            for j in 0..rs.rank() {
                let c = self.e[j].commutator(&x[k]);
                let mut g = beta.clone();
                g[j] += 1;
                match index.get(g.as_slice()) {
                    Some(&t) => {
                        let r = c.ratio_to(&x[t]).filter(|r| !r.is_zero()).ok_or_else(|| {
                            Error::Internal(format!(
                                "[e_{}, X_{beta:?}] is not a nonzero multiple of X_{g:?}",
                                j + 1
                            ))
                        })?;
                        n.insert((j, k), r);
                    }
                    None if !c.is_zero() => {
                        return Err(Error::Internal(format!(
                            "[e_{}, X_{beta:?}] should vanish",
                            j + 1
                        )));
                    }
                    None => {}
                }
            }
        }
        let height = |k: usize| roots[k].iter().sum::<i64>() as usize;
        let max_h = roots
            .iter()
            .map(|r| r.iter().sum::<i64>() as usize)
            .max()
            .unwrap_or(0);
        let mut out = Vec::new();
        for h in 1..=max_h {
            let cols: Vec<usize> = (0..roots.len()).filter(|&k| height(k) == h).collect();
            let targets: Vec<usize> = (0..roots.len()).filter(|&k| height(k) == h + 1).collect();
            let rows: Vec<Vec<BigInt>> = targets
                .iter()
                .map(|&t| {
                    let row: Vec<Q> = cols
                        .iter()
                        .map(|&k| {
                            (0..rs.rank())
                                .filter_map(|j| {
                                    let mut g = roots[k].clone();
                                    g[j] += 1;
                                    (index.get(g.as_slice()) == Some(&t))
                                        .then(|| n[&(j, k)].clone())
                                })
                                .sum()
                        })
                        .collect();
                    let l = row.iter().fold(BigInt::one(), |l, v| l.lcm(v.denom()));
                    row.iter()
                        .map(|v| (v * Q::from_integer(l.clone())).to_integer())
                        .collect()
                })
                .collect();
            for sol in nullspace(&rows, cols.len()) {
                let mut m = SparseMat::zero(self.dimension());
                for (&k, c) in cols.iter().zip(&sol) {
                    if !c.is_zero() {
                        m = m.lin(&Q::one(), &x[k], &Q::from_integer(c.clone()));
                    }
                }
                out.push((m, h));
            }
        }
        let mut heights: Vec<usize> = out.iter().map(|(_, h)| *h).collect();
        heights.sort_unstable();
        let exponents: Vec<usize> = rs.degrees().iter().map(|d| d - 1).collect();
        if heights != exponents {
            return Err(Error::Internal(format!(
                "{rs}: centralizer of e has heights {heights:?}, expected the exponents {exponents:?}"
            )));
        }
        Ok(out)
    }
}

/// `J_{V_λ}(q) = Σ_i dim (V_λ)^A_i q^i` from explicit matrices. Requires
/// `λ ∈ Q` so that the grading by `hot` is integral.
pub fn jump_polynomial(rs: &RootSystem, lambda: &Weight, budget: &Budget) -> Result<QPolynomial> {
    rs.check_dominant(lambda)?;
    if !rs.in_root_lattice(lambda) {
        return Err(Error::Domain(format!(
            "{lambda} is not in the root lattice"
        )));
    }
    if lambda.is_zero() {
        return Ok(QPolynomial::one());
    }
    let module = HighestWeightModule::build(rs, lambda, budget)?;
    let ops: Vec<Mat> = module
        .principal_centralizer(rs)?
        .iter()
        .map(|(m, _)| m.to_integer())
        .collect();
    let level = |w: &Weight| rs.height_int(w).expect("root lattice weight");
    let mut by_level: BTreeMap<i64, Vec<usize>> = BTreeMap::new();
    for (k, w) in module.weights.iter().enumerate() {
        by_level.entry(level(w)).or_default().push(k);
    }
    let n = module.dimension();
    let top = level(lambda);
    let mut coeffs = vec![BigInt::zero(); top as usize + 1];
    for (lv, cols) in by_level {
        let rows: Vec<Vec<BigInt>> = ops
            .iter()
            .flat_map(|x| {
                let cols = &cols;
                (0..n).map(move |r| {
                    cols.iter()
                        .map(|&c| x.get(r, c).clone())
                        .collect::<Vec<_>>()
                })
            })
            .filter(|row| row.iter().any(|v| !v.is_zero()))
            .collect();
        let k = nullspace(&rows, cols.len()).len();
        if k > 0 && lv < 0 {
            return Err(Error::Internal(format!(
                "A-invariants at negative level {lv}"
            )));
        }
        if lv >= 0 {
            coeffs[lv as usize] = BigInt::from(k);
        }
    }
    Ok(QPolynomial::from_coeffs(coeffs))
}

/// `F_λ(q)`: graded dimension of `(End V_λ)^A`, graded by floor shift.
pub fn end_jump_polynomial(
    rs: &RootSystem,
    lambda: &Weight,
    budget: &Budget,
) -> Result<QPolynomial> {
    rs.check_dominant(lambda)?;
    if lambda.is_zero() {
        return Ok(QPolynomial::one());
    }
    let module = HighestWeightModule::build(rs, lambda, budget)?;
    let d = module.dimension();
    if d > budget.max_matrix_dim {
        return Err(Error::resource(
            "matrix dimension",
            d as u128,
            budget.max_matrix_dim as u128,
        ));
    }
    let ops: Vec<(Mat, usize)> = module
        .principal_centralizer(rs)?
        .iter()
        .map(|(m, h)| (m.to_integer(), *h))
        .collect();
    let h2 = rs.height2(lambda);
    let floors: Vec<usize> = module
        .weights
        .iter()
        .map(|w| ((rs.height2(w) + h2) / 2) as usize)
        .collect();
    let top = h2 as usize;
    let basis = graded_commutant(&floors, &ops, top);
    let mut coeffs = vec![BigInt::zero(); top + 1];
    for (_, g) in &basis {
        coeffs[*g] += 1;
    }
    Ok(QPolynomial::from_coeffs(coeffs))
}
