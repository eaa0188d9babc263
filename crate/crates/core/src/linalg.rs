//! Exact integer linear algebra: fraction-free row reduction, rank and
//! nullspace over `Q` with primitive integer basis vectors.

use std::ops::{Mul, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// Dense square integer matrix.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Mat {
    n: usize,
    data: Vec<BigInt>,
}

impl Mat {
    pub fn zero(n: usize) -> Self {
        Mat {
            n,
            data: vec![BigInt::zero(); n * n],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Mat::zero(n);
        for i in 0..n {
            m.data[i * n + i] = BigInt::one();
        }
        m
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn get(&self, r: usize, c: usize) -> &BigInt {
        &self.data[r * self.n + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: BigInt) {
        self.data[r * self.n + c] = v;
    }

    pub fn add_at(&mut self, r: usize, c: usize, v: &BigInt) {
        self.data[r * self.n + c] += v;
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn entries(&self) -> &[BigInt] {
        &self.data
    }

    pub fn apply(&self, v: &[BigInt]) -> Vec<BigInt> {
        (0..self.n)
            .map(|r| (0..self.n).map(|c| self.get(r, c) * &v[c]).sum())
            .collect()
    }

    pub fn pow(&self, e: usize) -> Mat {
        (0..e).fold(Mat::identity(self.n), |acc, _| &acc * self)
    }

    pub fn scaled(&self, k: i64) -> Mat {
        let k = BigInt::from(k);
        Mat {
            n: self.n,
            data: self.data.iter().map(|x| x * &k).collect(),
        }
    }

    pub fn commutator(&self, other: &Mat) -> Mat {
        &(self * other) - &(other * self)
    }
}

impl Mul for &Mat {
    type Output = Mat;
    fn mul(self, rhs: &Mat) -> Mat {
        let n = self.n;
        let mut out = Mat::zero(n);
        for i in 0..n {
            for k in 0..n {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..n {
                    let b = rhs.get(k, j);
                    if !b.is_zero() {
                        out.data[i * n + j] += a * b;
                    }
                }
            }
        }
        out
    }
}

impl Sub for &Mat {
    type Output = Mat;
    fn sub(self, rhs: &Mat) -> Mat {
        Mat {
            n: self.n,
            data: self
                .data
                .iter()
                .zip(&rhs.data)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }
}

fn make_primitive(row: &mut [BigInt]) {
    let g = row.iter().fold(BigInt::zero(), |g, x| g.gcd(x));
    if !g.is_zero() && !g.is_one() {
        for x in row.iter_mut() {
            *x = &*x / &g;
        }
    }
}

/// Reduced row echelon form with integer rows, each scaled to be primitive.
/// Returns the nonzero rows and their pivot columns.
fn echelon(rows: &[Vec<BigInt>], ncols: usize) -> (Vec<Vec<BigInt>>, Vec<usize>) {
    let mut m: Vec<Vec<BigInt>> = rows
        .iter()
        .filter(|r| r.iter().any(|x| !x.is_zero()))
        .cloned()
        .collect();
    for r in &mut m {
        make_primitive(r);
    }
    let mut pivots = Vec::new();
    let mut top = 0;
    for col in 0..ncols {
        let Some(p) = (top..m.len())
            .filter(|&r| !m[r][col].is_zero())
            .min_by_key(|&r| m[r][col].abs())
        else {
            continue;
        };
        m.swap(top, p);
        let pivot_row = m[top].clone();
        let pv = &pivot_row[col];
        for (r, row) in m.iter_mut().enumerate() {
            if r == top || row[col].is_zero() {
                continue;
            }
            let g = pv.gcd(&row[col]);
            let a = pv / &g;
            let b = &row[col] / &g;
            for (x, y) in row.iter_mut().zip(&pivot_row) {
                *x = &a * &*x - &b * y;
            }
            make_primitive(row);
        }
        pivots.push(col);
        top += 1;
        if top == m.len() {
            break;
        }
    }
    m.truncate(top);
    (m, pivots)
}

pub fn rank(rows: &[Vec<BigInt>], ncols: usize) -> usize {
    echelon(rows, ncols).1.len()
}

/// Basis of `{x : A x = 0}` as primitive integer vectors, one per free column.
pub fn nullspace(rows: &[Vec<BigInt>], ncols: usize) -> Vec<Vec<BigInt>> {
    let (m, pivots) = echelon(rows, ncols);
    let mut is_pivot = vec![None; ncols];
    for (r, &c) in pivots.iter().enumerate() {
        is_pivot[c] = Some(r);
    }
    let lcm = pivots
        .iter()
        .enumerate()
        .fold(BigInt::one(), |l, (r, &c)| l.lcm(&m[r][c]));
    let mut basis = Vec::new();
    for free in (0..ncols).filter(|&c| is_pivot[c].is_none()) {
        let mut v = vec![BigInt::zero(); ncols];
        v[free] = lcm.clone();
        for (r, &c) in pivots.iter().enumerate() {
            v[c] = -(&m[r][free] * &lcm) / &m[r][c];
        }
        make_primitive(&mut v);
        basis.push(v);
    }
    basis
}

/// Operators `T` of floor degree `g ∈ 0..=max_grade` (mapping floor `k`
/// into floor `k + g`) that commute with every `X` in `ops`, where `X`
/// raises floors by its listed shift. Returns `(T, g)` pairs.
pub fn graded_commutant(
    floors: &[usize],
    ops: &[(Mat, usize)],
    max_grade: usize,
) -> Vec<(Mat, usize)> {
    let d = floors.len();
    let mut basis = Vec::new();
    for g in 0..=max_grade {
        let unknowns: Vec<(usize, usize)> = (0..d)
            .flat_map(|r| (0..d).map(move |c| (r, c)))
            .filter(|&(r, c)| floors[r] == floors[c] + g)
            .collect();
        if unknowns.is_empty() {
            continue;
        }
        let mut rows = Vec::new();
        for (x, shift) in ops {
            for r in 0..d {
                for c in 0..d {
                    if floors[r] != floors[c] + g + shift {
                        continue;
                    }
                    // (X T - T X)[r][c]
                    let row: Vec<BigInt> = unknowns
                        .iter()
                        .map(|&(a, b)| {
                            let mut v = BigInt::zero();
                            if b == c {
                                v += x.get(r, a);
                            }
                            if a == r {
                                v -= x.get(b, c);
                            }
                            v
                        })
                        .collect();
                    if row.iter().any(|v| !v.is_zero()) {
                        rows.push(row);
                    }
                }
            }
        }
        for sol in nullspace(&rows, unknowns.len()) {
            let mut t = Mat::zero(d);
            for (&(a, b), v) in unknowns.iter().zip(sol) {
                t.set(a, b, v);
            }
            basis.push((t, g));
        }
    }
    basis
}
