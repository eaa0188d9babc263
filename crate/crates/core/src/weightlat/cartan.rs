//! Dynkin diagram data in Bourbaki numbering, classical degree tables, and
//! classification of connected subdiagrams.
//!
//! Node numbering (1-based, as in ϖ_i):
//!
//! ```text
//! A_n  1 - 2 - ... - n
//! B_n  1 - 2 - ... - (n-1) => n        α_n short
//! C_n  1 - 2 - ... - (n-1) <= n        α_n long
//! D_n  1 - 2 - ... - (n-2) < (n-1), n
//! E_n  1 - 3 - 4 - 5 - ... - n, with 2 attached to 4
//! F_4  1 - 2 => 3 - 4                  α_1, α_2 long
//! G_2  1 <= 2                          α_1 short
//! ```

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum TypeLetter {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl TypeLetter {
    pub const ALL: [TypeLetter; 7] = [
        TypeLetter::A,
        TypeLetter::B,
        TypeLetter::C,
        TypeLetter::D,
        TypeLetter::E,
        TypeLetter::F,
        TypeLetter::G,
    ];

    /// Whether `(self, rank)` names a simple type.
    pub fn supports_rank(self, rank: usize) -> bool {
        match self {
            TypeLetter::A => rank >= 1,
            TypeLetter::B | TypeLetter::C => rank >= 2,
            TypeLetter::D => rank >= 3,
            TypeLetter::E => (6..=8).contains(&rank),
            TypeLetter::F => rank == 4,
            TypeLetter::G => rank == 2,
        }
    }

    /// Canonical (non-coincident) ranks up to `max_rank`, as used by sweeps.
    pub fn canonical_ranks(self, max_rank: usize) -> Vec<usize> {
        let lo = match self {
            TypeLetter::A => 1,
            TypeLetter::B => 2,
            TypeLetter::C => 3,
            TypeLetter::D => 4,
            TypeLetter::E => 6,
            TypeLetter::F => 4,
            TypeLetter::G => 2,
        };
        (lo..=max_rank).filter(|&r| self.supports_rank(r)).collect()
    }
}

impl fmt::Display for TypeLetter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = match self {
            TypeLetter::A => 'A',
            TypeLetter::B => 'B',
            TypeLetter::C => 'C',
            TypeLetter::D => 'D',
            TypeLetter::E => 'E',
            TypeLetter::F => 'F',
            TypeLetter::G => 'G',
        };
        write!(f, "{c}")
    }
}

impl FromStr for TypeLetter {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_uppercase().as_str() {
            "A" => Ok(TypeLetter::A),
            "B" => Ok(TypeLetter::B),
            "C" => Ok(TypeLetter::C),
            "D" => Ok(TypeLetter::D),
            "E" => Ok(TypeLetter::E),
            "F" => Ok(TypeLetter::F),
            "G" => Ok(TypeLetter::G),
            other => Err(Error::Usage(format!("unknown type letter {other:?}"))),
        }
    }
}

/// Gram matrix `(α_i, α_j)` of the simple roots, integer-normalized so the
/// shortest roots have squared length 2.
pub(crate) fn simple_root_gram(ty: TypeLetter, l: usize) -> Vec<Vec<i64>> {
    let mut g = vec![vec![0i64; l]; l];
    let link = |g: &mut Vec<Vec<i64>>, i: usize, j: usize, v: i64| {
        g[i - 1][j - 1] = v;
        g[j - 1][i - 1] = v;
    };
    match ty {
        TypeLetter::A => {
            for i in 1..=l {
                g[i - 1][i - 1] = 2;
            }
            for i in 1..l {
                link(&mut g, i, i + 1, -1);
            }
        }
        TypeLetter::B => {
            for i in 1..l {
                g[i - 1][i - 1] = 4;
            }
            g[l - 1][l - 1] = 2;
            for i in 1..l {
                link(&mut g, i, i + 1, -2);
            }
        }
        TypeLetter::C => {
            for i in 1..l {
                g[i - 1][i - 1] = 2;
            }
            g[l - 1][l - 1] = 4;
            for i in 1..l - 1 {
                link(&mut g, i, i + 1, -1);
            }
            link(&mut g, l - 1, l, -2);
        }
        TypeLetter::D => {
            for i in 1..=l {
                g[i - 1][i - 1] = 2;
            }
            for i in 1..l - 1 {
                link(&mut g, i, i + 1, -1);
            }
            link(&mut g, l - 2, l, -1);
        }
        TypeLetter::E => {
            for i in 1..=l {
                g[i - 1][i - 1] = 2;
            }
            link(&mut g, 1, 3, -1);
            link(&mut g, 2, 4, -1);
            for i in 3..l {
                link(&mut g, i, i + 1, -1);
            }
        }
        TypeLetter::F => {
            g[0][0] = 4;
            g[1][1] = 4;
            g[2][2] = 2;
            g[3][3] = 2;
            link(&mut g, 1, 2, -2);
            link(&mut g, 2, 3, -2);
            link(&mut g, 3, 4, -1);
        }
        TypeLetter::G => {
            g[0][0] = 2;
            g[1][1] = 6;
            link(&mut g, 1, 2, -3);
        }
    }
    g
}

/// Degrees of the basic invariants of the Weyl group, ascending.
pub fn classical_degrees(ty: TypeLetter, l: usize) -> Vec<usize> {
    let mut d: Vec<usize> = match ty {
        TypeLetter::A => (2..=l + 1).collect(),
        TypeLetter::B | TypeLetter::C => (1..=l).map(|k| 2 * k).collect(),
        TypeLetter::D => (1..l).map(|k| 2 * k).chain(std::iter::once(l)).collect(),
        TypeLetter::E => match l {
            6 => vec![2, 5, 6, 8, 9, 12],
            7 => vec![2, 6, 8, 10, 12, 14, 18],
            8 => vec![2, 8, 12, 14, 18, 20, 24, 30],
            _ => unreachable!("E{l} is not a simple type"),
        },
        TypeLetter::F => vec![2, 6, 8, 12],
        TypeLetter::G => vec![2, 6],
    };
    d.sort_unstable();
    d
}

/// Type of a connected Dynkin subdiagram given by `nodes` (0-based) of a
/// Cartan matrix. B and C are reported as B; their degrees coincide.
pub(crate) fn classify_component(nodes: &[usize], cartan: &[Vec<i64>]) -> (TypeLetter, usize) {
    let k = nodes.len();
    let bond = |a: usize, b: usize| cartan[a][b] * cartan[b][a];
    let mut neighbours = vec![Vec::new(); k];
    let mut max_bond = 0;
    let mut double_in_middle = false;
    for (x, &a) in nodes.iter().enumerate() {
        for (y, &b) in nodes.iter().enumerate() {
            if x != y && cartan[a][b] != 0 {
                neighbours[x].push(y);
                max_bond = max_bond.max(bond(a, b));
            }
        }
    }
    if k == 1 {
        return (TypeLetter::A, 1);
    }
    if max_bond == 3 {
        return (TypeLetter::G, 2);
    }
    if max_bond == 2 {
        for (x, &a) in nodes.iter().enumerate() {
            for &y in &neighbours[x] {
                if bond(a, nodes[y]) == 2 && neighbours[x].len() == 2 && neighbours[y].len() == 2 {
                    double_in_middle = true;
                }
            }
        }
        if double_in_middle {
            return (TypeLetter::F, 4);
        }
        return (TypeLetter::B, k);
    }
    if let Some(branch) = (0..k).find(|&x| neighbours[x].len() == 3) {
        let mut arms: Vec<usize> = neighbours[branch]
            .iter()
            .map(|&start| {
                let (mut prev, mut cur, mut len) = (branch, start, 1);
                loop {
                    let next = neighbours[cur].iter().copied().find(|&n| n != prev);
                    match next {
                        Some(n) => {
                            prev = cur;
                            cur = n;
                            len += 1;
                        }
                        None => break len,
                    }
                }
            })
            .collect();
        arms.sort_unstable();
        return match arms.as_slice() {
            [1, 1, _] => (TypeLetter::D, k),
            [1, 2, 2] | [1, 2, 3] | [1, 2, 4] => (TypeLetter::E, k),
            _ => unreachable!("subdiagram of a finite type has arms {arms:?}"),
        };
    }
    (TypeLetter::A, k)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_print() {
        assert_eq!("g".parse::<TypeLetter>().unwrap(), TypeLetter::G);
        assert!("H".parse::<TypeLetter>().is_err());
        assert_eq!(TypeLetter::E.to_string(), "E");
    }

    #[test]
    fn supported_ranks() {
        assert!(TypeLetter::A.supports_rank(1));
        assert!(!TypeLetter::B.supports_rank(1));
        assert!(TypeLetter::C.supports_rank(2));
        assert!(!TypeLetter::D.supports_rank(2));
        assert!(!TypeLetter::E.supports_rank(9));
        assert!(!TypeLetter::G.supports_rank(3));
    }

    #[test]
    fn degree_tables() {
        assert_eq!(classical_degrees(TypeLetter::D, 4), vec![2, 4, 4, 6]);
        assert_eq!(classical_degrees(TypeLetter::A, 2), vec![2, 3]);
        assert_eq!(
            classical_degrees(TypeLetter::E, 7)
                .iter()
                .product::<usize>(),
            2_903_040
        );
    }
}
