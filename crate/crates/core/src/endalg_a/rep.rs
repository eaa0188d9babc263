//! Symmetric and exterior powers of the standard `sl_{n+1}` module with the
//! principal triple acting by derivations.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::Zero;
use serde::Serialize;

use crate::linalg::Mat;
use crate::weightlat::Weight;
use crate::{Budget, Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum RepKind {
    /// `S^m`
    Symmetric(usize),
    /// `∧^k`
    Exterior(usize),
}

impl fmt::Display for RepKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RepKind::Symmetric(m) => write!(f, "S^{m}"),
            RepKind::Exterior(k) => write!(f, "∧^{k}"),
        }
    }
}

impl FromStr for RepKind {
    type Err = Error;

    /// `sym:3`, `S3`, `ext:2`, `wedge2`.
    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim().to_ascii_lowercase();
        let split = t.find(|c: char| c.is_ascii_digit()).unwrap_or(t.len());
        let (head, num) = t.split_at(split);
        let k: usize = num.parse().map_err(|_| {
            Error::Usage(format!(
                "representation {s:?}: expected e.g. sym:2 or ext:2"
            ))
        })?;
        match head.trim_end_matches([':', '^']) {
            "s" | "sym" | "symmetric" => Ok(RepKind::Symmetric(k)),
            "e" | "ext" | "wedge" | "exterior" => Ok(RepKind::Exterior(k)),
            _ => Err(Error::Usage(format!(
                "representation {s:?}: expected e.g. sym:2 or ext:2"
            ))),
        }
    }
}

/// Basis vectors are monomials `x^a` (resp. wedges `x_S`), with `x_0` the
/// highest weight vector of `C^{n+1}`.
#[derive(Debug, Clone)]
pub struct MatrixRep {
    pub n: usize,
    pub kind: RepKind,
    pub dimension: usize,
    pub e_matrix: Mat,
    pub h_matrix: Mat,
    pub f_matrix: Mat,
    pub weight_of_basis: Vec<Weight>,
    pub floor_of_basis: Vec<usize>,
    pub lowest_index: usize,
    pub top_floor: usize,
    basis: Vec<Vec<usize>>,
}

/// Multisets (as exponent vectors) or subsets of `{0..=n}`.
fn basis_labels(n: usize, kind: RepKind) -> Vec<Vec<usize>> {
    fn subsets(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..=n {
            cur.push(i);
            subsets(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    fn multisets(i: usize, n: usize, left: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if i == n {
            cur.push(left);
            out.push(cur.clone());
            cur.pop();
            return;
        }
        for a in (0..=left).rev() {
            cur.push(a);
            multisets(i + 1, n, left - a, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    match kind {
        RepKind::Symmetric(m) => multisets(0, n, m, &mut Vec::new(), &mut out),
        RepKind::Exterior(k) => subsets(0, n, k, &mut Vec::new(), &mut out),
    }
    out
}

fn binomial(a: usize, b: usize) -> u128 {
    if b > a {
        return 0;
    }
    (0..b).fold(1u128, |acc, i| acc * (a - i) as u128 / (i + 1) as u128)
}

impl MatrixRep {
    pub fn build(n: usize, kind: RepKind, budget: &Budget) -> Result<MatrixRep> {
        if n == 0 {
            return Err(Error::Usage("sl_{n+1} needs n ≥ 1".into()));
        }
        let dim = match kind {
            RepKind::Symmetric(m) => binomial(m + n, n),
            RepKind::Exterior(k) => {
                if k == 0 || k > n {
                    return Err(Error::Usage(format!(
                        "∧^{k} of C^{} is not a nontrivial irreducible module",
                        n + 1
                    )));
                }
                binomial(n + 1, k)
            }
        };
        if dim > budget.max_matrix_dim as u128 {
            return Err(Error::resource(
                "matrix dimension",
                dim,
                budget.max_matrix_dim as u128,
            ));
        }
        let basis = basis_labels(n, kind);
        let index: HashMap<Vec<usize>, usize> = basis
            .iter()
            .cloned()
            .enumerate()
            .map(|(i, b)| (b, i))
            .collect();

        let (weight_of_basis, floor_of_basis): (Vec<Weight>, Vec<usize>) = basis
            .iter()
            .map(|b| {
                let mut eps = vec![0i64; n + 1];
                match kind {
                    RepKind::Symmetric(_) => {
                        for (i, &a) in b.iter().enumerate() {
                            eps[i] = a as i64;
                        }
                    }
                    RepKind::Exterior(_) => {
                        for &i in b {
                            eps[i] = 1;
                        }
                    }
                }
                let w = Weight((0..n).map(|j| eps[j] - eps[j + 1]).collect());
                let level: i64 = (0..=n).map(|i| eps[i] * (n - i) as i64).sum();
                (w, level)
            })
            .map(|(w, level)| (w, level as usize))
            .unzip();
        let low = *floor_of_basis.iter().min().expect("nonempty basis");
        let floor_of_basis: Vec<usize> = floor_of_basis.iter().map(|f| f - low).collect();
        let lowest_index = floor_of_basis
            .iter()
            .position(|&f| f == 0)
            .expect("lowest vector");
        let top_floor = *floor_of_basis.iter().max().expect("nonempty basis");

        let mut rep = MatrixRep {
            n,
            kind,
            dimension: basis.len(),
            e_matrix: Mat::zero(0),
            h_matrix: Mat::zero(0),
            f_matrix: Mat::zero(0),
            weight_of_basis,
            floor_of_basis,
            lowest_index,
            top_floor,
            basis,
        };
        let mut e = Mat::zero(n + 1);
        let mut f = Mat::zero(n + 1);
        let mut h = Mat::zero(n + 1);
        for j in 1..=n {
            e.set(j - 1, j, 1.into());
            f.set(j, j - 1, BigInt::from(j * (n + 1 - j)));
        }
        for j in 0..=n {
            h.set(j, j, BigInt::from(n as i64 - 2 * j as i64));
        }
        rep.e_matrix = rep.derivation(&e, &index);
        rep.f_matrix = rep.derivation(&f, &index);
        rep.h_matrix = rep.derivation(&h, &index);
        rep.check_triple()?;
        Ok(rep)
    }

    /// Action of `X ∈ gl_{n+1}` extended as a derivation.
    fn derivation(&self, x: &Mat, index: &HashMap<Vec<usize>, usize>) -> Mat {
        let mut out = Mat::zero(self.dimension);
        for (col, b) in self.basis.iter().enumerate() {
            match self.kind {
                RepKind::Symmetric(_) => {
                    for (i, &a) in b.iter().enumerate() {
                        if a == 0 {
                            continue;
                        }
                        for r in 0..=self.n {
                            let c = x.get(r, i);
                            if c.is_zero() {
                                continue;
                            }
                            let mut t = b.clone();
                            t[i] -= 1;
                            t[r] += 1;
                            out.add_at(index[&t], col, &(c * BigInt::from(a)));
                        }
                    }
                }
                RepKind::Exterior(_) => {
                    for (pos, &i) in b.iter().enumerate() {
                        for r in 0..=self.n {
                            let c = x.get(r, i);
                            if c.is_zero() || (r != i && b.contains(&r)) {
                                continue;
                            }
                            let mut t = b.clone();
                            t[pos] = r;
                            let inversions = t
                                .iter()
                                .enumerate()
                                .filter(|&(p, &s)| p != pos && ((p < pos) == (s > r)))
                                .count();
                            t.sort_unstable();
                            let v = if inversions % 2 == 0 { c.clone() } else { -c };
                            out.add_at(index[&t], col, &v);
                        }
                    }
                }
            }
        }
        out
    }

    /// `dπ(J^j)` for the regular nilpotent `J = Σ E_{i-1,i}`.
    pub fn e_power_action(&self, j: usize) -> Mat {
        let index: HashMap<Vec<usize>, usize> = self
            .basis
            .iter()
            .cloned()
            .enumerate()
            .map(|(i, b)| (b, i))
            .collect();
        let mut x = Mat::zero(self.n + 1);
        for i in j..=self.n {
            x.set(i - j, i, 1.into());
        }
        self.derivation(&x, &index)
    }

    fn check_triple(&self) -> Result<()> {
        let (e, h, f) = (&self.e_matrix, &self.h_matrix, &self.f_matrix);
        let ok = h.commutator(e) == e.scaled(2)
            && h.commutator(f) == f.scaled(-2)
            && &e.commutator(f) == h;
        for i in 0..self.dimension {
            let expected = 2 * self.floor_of_basis[i] as i64 - self.top_floor as i64;
            if *h.get(i, i) != BigInt::from(expected) {
                return Err(Error::Internal(format!(
                    "h is not the floor grading at basis vector {i}"
                )));
            }
        }
        if !ok {
            return Err(Error::Internal(format!(
                "{} of sl_{}: triple relations fail",
                self.kind,
                self.n + 1
            )));
        }
        Ok(())
    }

    pub fn lowest_vector(&self) -> Vec<BigInt> {
        let mut v = vec![BigInt::zero(); self.dimension];
        v[self.lowest_index] = 1.into();
        v
    }

    /// Highest weight in fundamental coordinates.
    pub fn highest_weight(&self) -> Weight {
        let mut w = vec![0i64; self.n];
        match self.kind {
            RepKind::Symmetric(m) => w[0] = m as i64,
            RepKind::Exterior(k) => w[k - 1] = 1,
        }
        Weight(w)
    }
}
