use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::ideal::MonomialIdeal;
use crate::linquo::{colon_vars_of_slice, AdmissibleOrder};
use crate::monomial::Monomial;
use crate::stanley::BoxIter;

pub const MAX_RANDOM_VARS: usize = 6;
pub const MAX_RANDOM_GENERATORS: usize = 8;
pub const MAX_RANDOM_DEGREE: u32 = 4;

/// Shape of a random linear-quotient ideal.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RandomParams {
    pub n: usize,
    /// Target number of generators; the result may have fewer.
    pub m: usize,
    pub max_degree: u32,
}

impl RandomParams {
    pub fn new(n: usize, m: usize, max_degree: u32) -> Result<Self> {
        if !(1..=MAX_RANDOM_VARS).contains(&n)
            || !(1..=MAX_RANDOM_GENERATORS).contains(&m)
            || !(1..=MAX_RANDOM_DEGREE).contains(&max_degree)
        {
            return Err(Error::Precondition(format!(
                "need 1 <= n <= {MAX_RANDOM_VARS}, 1 <= m <= {MAX_RANDOM_GENERATORS}, \
                 1 <= degree <= {MAX_RANDOM_DEGREE}; got n={n}, m={m}, degree={max_degree}"
            )));
        }
        Ok(RandomParams { n, m, max_degree })
    }
}

/// Independent per-instance seed (splitmix64 of the pair).
pub fn instance_seed(seed: u64, index: u64) -> u64 {
    let mut z = seed ^ index.wrapping_add(1).wrapping_mul(0x9E37_79B9_7F4A_7C15);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// Grows `u_1, u_2, ...` by drawing uniformly among the monomials of degree
/// `1..=max_degree` that keep the generators minimal and whose colon by the
/// current prefix is generated by variables. Stops early when none remain.
pub fn random_linear_quotient_ideal(
    params: RandomParams,
    seed: u64,
) -> Result<(MonomialIdeal, AdmissibleOrder)> {
    let n = params.n;
    let candidates: Vec<Monomial> = BoxIter::new(&vec![params.max_degree; n])
        .map(Monomial::new)
        .filter(|u| (1..=params.max_degree).contains(&u.degree()))
        .collect();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut chosen: Vec<Monomial> = Vec::with_capacity(params.m);
    while chosen.len() < params.m {
        let valid: Vec<&Monomial> = candidates
            .iter()
            .filter(|u| {
                chosen
                    .iter()
                    .all(|g| !g.divides_unchecked(u) && !u.divides_unchecked(g))
                    && (chosen.is_empty() || matches!(colon_vars_of_slice(&chosen, u), Ok(Some(_))))
            })
            .collect();
        match valid.choose(&mut rng) {
            Some(u) => chosen.push((*u).clone()),
            None => break,
        }
    }
    let ideal = MonomialIdeal::new(n, chosen.clone())?;
    let order = AdmissibleOrder::from_order(&ideal, chosen)?;
    Ok((ideal, order))
}
