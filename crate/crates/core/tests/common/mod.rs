#![allow(dead_code)]

use lqsdepth::theorems::{random_linear_quotient_ideal, RandomParams};
use lqsdepth::{AdmissibleOrder, Monomial, MonomialIdeal};
use proptest::prelude::*;

pub fn m(exps: &[u32]) -> Monomial {
    Monomial::new(exps.to_vec())
}

pub fn non_unit(n: usize, max_exp: u32) -> impl Strategy<Value = Monomial> {
    prop::collection::vec(0..=max_exp, n)
        .prop_filter("unit", |e| e.iter().any(|&x| x > 0))
        .prop_map(Monomial::new)
}

pub fn monomial(n: usize, max_exp: u32) -> impl Strategy<Value = Monomial> {
    prop::collection::vec(0..=max_exp, n).prop_map(Monomial::new)
}

/// Arbitrary ideal in `n` variables from up to `max_gens` generators.
pub fn ideal_in(n: usize, max_gens: usize, max_exp: u32) -> impl Strategy<Value = MonomialIdeal> {
    prop::collection::vec(non_unit(n, max_exp), 1..=max_gens)
        .prop_map(move |g| MonomialIdeal::new(n, g).unwrap())
}

pub fn ideal(max_n: usize, max_gens: usize, max_exp: u32) -> impl Strategy<Value = MonomialIdeal> {
    (1..=max_n).prop_flat_map(move |n| ideal_in(n, max_gens, max_exp))
}

/// Random linear-quotient ideal with its admissible order.
pub fn lq_ideal(
    max_n: usize,
    max_m: usize,
    max_deg: u32,
) -> impl Strategy<Value = (MonomialIdeal, AdmissibleOrder)> {
    (2..=max_n, 1..=max_m, 1..=max_deg, any::<u64>()).prop_map(|(n, m, d, seed)| {
        random_linear_quotient_ideal(RandomParams::new(n, m, d).unwrap(), seed).unwrap()
    })
}

/// Every exponent vector with entries `0..=bound[j]`.
pub fn grid(bound: &[u32]) -> Vec<Vec<u32>> {
    let mut out = vec![Vec::new()];
    for &b in bound {
        out = out
            .into_iter()
            .flat_map(|p| {
                (0..=b).map(move |e| {
                    let mut q = p.clone();
                    q.push(e);
                    q
                })
            })
            .collect();
    }
    out
}

/// Naive membership: some generator divides `a`.
pub fn in_ideal(gens: &[Monomial], a: &[u32]) -> bool {
    gens.iter()
        .any(|g| g.exps().iter().zip(a).all(|(x, y)| x <= y))
}
