//! Brute-force oracles against the fast paths.

use std::collections::BTreeMap;

use num_bigint::{BigInt, BigUint};
use spindle_core::charmult::{irreducible_character, is_minuscule, weyl_dimension};
use spindle_core::qanalogues::{kostant_partition_q, lusztig_q_multiplicity, t_ratio};
use spindle_core::qpoly::{cyclo_product, gaussian_binomial};
use spindle_core::verify::root_systems_up_to;
use spindle_core::{Budget, QPolynomial, RootSystem, TypeLetter, Weight};

/// Multisets of positive roots summing to `target`, counted by size.
fn kostant_brute(roots: &[Vec<i64>], target: &[i64]) -> QPolynomial {
    fn go(
        roots: &[Vec<i64>],
        from: usize,
        rest: &mut Vec<i64>,
        k: usize,
        out: &mut BTreeMap<usize, i64>,
    ) {
        if rest.iter().all(|&c| c == 0) {
            *out.entry(k).or_default() += 1;
            return;
        }
        for i in from..roots.len() {
            if roots[i].iter().zip(rest.iter()).all(|(r, c)| r <= c) {
                for (c, r) in rest.iter_mut().zip(&roots[i]) {
                    *c -= r;
                }
                go(roots, i, rest, k + 1, out);
                for (c, r) in rest.iter_mut().zip(&roots[i]) {
                    *c += r;
                }
            }
        }
    }
    let mut out = BTreeMap::new();
    go(roots, 0, &mut target.to_vec(), 0, &mut out);
    let top = out.keys().max().copied().unwrap_or(0);
    let mut c = vec![0; top + 1];
    for (k, v) in out {
        c[k] = v;
    }
    QPolynomial::from_i64s(&c)
}

fn boxes(rank: usize, bound: i64) -> Vec<Vec<i64>> {
    let mut out = vec![vec![]];
    for _ in 0..rank {
        out = out
            .into_iter()
            .flat_map(|v| {
                (0..=bound).map(move |c| {
                    let mut w = v.clone();
                    w.push(c);
                    w
                })
            })
            .collect();
    }
    out
}

#[test]
fn q_kostant_matches_enumeration() {
    for (t, l, bound) in [
        (TypeLetter::A, 2, 4),
        (TypeLetter::B, 2, 4),
        (TypeLetter::G, 2, 4),
        (TypeLetter::A, 3, 3),
        (TypeLetter::C, 3, 2),
    ] {
        let rs = RootSystem::new(t, l).unwrap();
        for nu in boxes(l, bound) {
            assert_eq!(
                kostant_partition_q(&rs, &nu),
                kostant_brute(rs.positive_roots(), &nu),
                "{rs} ν = {nu:?}"
            );
        }
    }
}

#[test]
fn weyl_length_generating_function_is_product_of_degrees() {
    let budget = Budget::default();
    for rs in root_systems_up_to(4) {
        let mut c = vec![0i64; rs.num_positive_roots() + 1];
        for w in rs.weyl_signed_iterate(&budget).unwrap() {
            c[w.length()] += 1;
        }
        let ones = vec![1; rs.rank()];
        assert_eq!(
            QPolynomial::from_i64s(&c),
            cyclo_product(rs.degrees(), &ones).unwrap(),
            "{rs}"
        );
    }
}

/// `t_0/t_λ` evaluated at 1 is the orbit size, and `W_λ` counted by length
/// over the whole group reproduces `t_λ`.
#[test]
fn stabilizers_match_parabolic_degrees() {
    let budget = Budget::default();
    for rs in root_systems_up_to(4) {
        let elements: Vec<_> = rs.weyl_signed_iterate(&budget).unwrap().collect();
        for lam in boxes(rs.rank(), 1) {
            let lam = Weight(lam);
            let mut c = vec![0i64; rs.num_positive_roots() + 1];
            for w in &elements {
                if w.apply(&rs, &lam) == lam {
                    c[w.length()] += 1;
                }
            }
            let degs = rs.parabolic_degrees(&lam).unwrap();
            let ones = vec![1; degs.len()];
            assert_eq!(
                QPolynomial::from_i64s(&c),
                cyclo_product(&degs, &ones).unwrap(),
                "{rs} {lam}"
            );
            let orbit = t_ratio(&rs, &lam).unwrap().eval_at_one();
            assert_eq!(orbit, BigInt::from(rs.weyl_orbit(&lam).len()), "{rs} {lam}");
        }
    }
}

#[test]
fn weyl_orders_are_products_of_degrees() {
    for rs in root_systems_up_to(8) {
        let p: BigUint = rs.degrees().iter().map(|&d| BigUint::from(d)).product();
        assert_eq!(&p, rs.weyl_order(), "{rs}");
        let exps: usize = rs.degrees().iter().map(|d| d - 1).sum();
        assert_eq!(exps, rs.num_positive_roots(), "{rs}");
    }
}

#[test]
fn lusztig_at_one_is_the_weight_multiplicity() {
    let budget = Budget::default();
    for (t, l) in [
        (TypeLetter::A, 2),
        (TypeLetter::B, 2),
        (TypeLetter::G, 2),
        (TypeLetter::A, 3),
    ] {
        let rs = RootSystem::new(t, l).unwrap();
        for lam in rs.dominant_weights_up_to(8) {
            let ch = irreducible_character(&rs, &lam, &budget).unwrap();
            for (mu, m) in ch.entries.iter().filter(|(mu, _)| mu.is_dominant()) {
                let p = lusztig_q_multiplicity(&rs, &lam, mu, &budget).unwrap();
                assert_eq!(p.eval_at_one(), BigInt::from(*m), "{rs} {lam} {mu}");
            }
        }
    }
}

/// A minuscule weight has a single orbit of weights, and vice versa.
#[test]
fn minuscule_iff_single_orbit() {
    let budget = Budget::default();
    for rs in root_systems_up_to(5) {
        for i in 1..=rs.rank() {
            let w = Weight::fundamental(rs.rank(), i);
            if weyl_dimension(&rs, &w) > BigInt::from(5000) {
                continue;
            }
            let ch = irreducible_character(&rs, &w, &budget).unwrap();
            let single =
                ch.entries.len() == rs.weyl_orbit(&w).len() && ch.entries.values().all(|&m| m == 1);
            assert_eq!(is_minuscule(&rs, &w).unwrap(), single, "{rs} {w}");
        }
    }
}

/// Partitions in an `m × n` box by size.
#[test]
fn gaussian_binomial_counts_box_partitions() {
    fn count(parts: usize, max: usize, size: usize) -> i64 {
        if size == 0 {
            return 1;
        }
        if parts == 0 || max == 0 {
            return 0;
        }
        (1..=max.min(size))
            .map(|p| count(parts - 1, p, size - p))
            .sum()
    }
    for m in 0..=6 {
        for n in 0..=6 {
            let c: Vec<i64> = (0..=m * n).map(|d| count(m, n, d)).collect();
            assert_eq!(
                gaussian_binomial(m, n),
                QPolynomial::from_i64s(&c),
                "m={m} n={n}"
            );
        }
    }
}
