use crate::betti::depth_oracle;
use crate::error::{Error, Result};
use crate::ideal::MonomialIdeal;
use crate::limits::Limits;
use crate::linquo::{find_admissible_order, AdmissibleOrder};
use crate::monomial::{Monomial, VarSet};
use crate::stanley::{sdepth_exact, TargetKind};

/// `I + (x_i : i ∈ τ) = (u) + (x_i : i ∈ τ)` with `|τ| = s`, where
/// `depth(S/I) = n - s - 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CollapseWitness {
    pub tau: VarSet,
    pub u: Monomial,
    pub s: usize,
}

/// All `k`-subsets of `0..n` in ascending lexicographic order.
pub(crate) fn subsets_of_size(n: usize, k: usize) -> Vec<VarSet> {
    fn go(n: usize, k: usize, start: usize, cur: &mut Vec<usize>, out: &mut Vec<VarSet>) {
        if cur.len() == k {
            out.push(cur.iter().copied().collect());
            return;
        }
        for j in start..n {
            if n - j < k - cur.len() {
                break;
            }
            cur.push(j);
            go(n, k, j + 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(n, k, 0, &mut Vec::new(), &mut out);
    out
}

/// Two-way generator membership between `I + (x_τ)` and `(u) + (x_τ)`.
pub fn verify_collapse(ideal: &MonomialIdeal, w: &CollapseWitness) -> Result<bool> {
    let n = ideal.n();
    let vars: Vec<Monomial> = w.tau.iter().map(|j| Monomial::var(n, j)).collect();
    let left = ideal.add_monomials(&vars)?;
    let mut right_gens = vars;
    right_gens.push(w.u.clone());
    let right = MonomialIdeal::from_generators(n, right_gens)?;
    let (Some(left), Some(right)) = (left.proper(), right.proper()) else {
        return Ok(false);
    };
    Ok(w.tau.len() == w.s
        && ideal.contains(&w.u)?
        && left.contains_ideal(&right)?
        && right.contains_ideal(&left)?)
}

/// Searches `τ` (ascending lex) and then `u ∈ G(I)` (canonical order) for the
/// first pair where every other generator lies in `(x_τ)` and `u` does not.
/// When no such pair exists, falls back to the first `τ` with all of `G(I)`
/// inside `(x_τ)`, where the equality holds for any `u`.
/// `s` comes from the Betti depth oracle.
pub fn find_principal_collapse(
    order: &AdmissibleOrder,
    limits: &Limits,
) -> Result<CollapseWitness> {
    let ideal = order.ideal();
    let n = ideal.n();
    let depth = depth_oracle(ideal, limits)?;
    let s = n - depth - 1;
    let hits = |g: &Monomial, tau: VarSet| !g.support().intersection(tau).is_empty();
    let taus = subsets_of_size(n, s);
    let strict = taus.iter().find_map(|&tau| {
        let (k, u) = ideal
            .gens()
            .iter()
            .enumerate()
            .find(|(_, u)| !hits(u, tau))?;
        let others_inside = ideal
            .gens()
            .iter()
            .enumerate()
            .all(|(l, g)| l == k || hits(g, tau));
        others_inside.then(|| (tau, u.clone()))
    });
    let found = strict.or_else(|| {
        taus.iter()
            .find(|&&tau| ideal.gens().iter().all(|g| hits(g, tau)))
            .map(|&tau| (tau, ideal.gens()[0].clone()))
    });
    let Some((tau, u)) = found else {
        return Err(Error::TheoremViolation(format!(
            "no principal collapse with |τ| = {s} for {ideal}"
        )));
    };
    let w = CollapseWitness { tau, u, s };
    if !verify_collapse(ideal, &w)? {
        return Err(Error::TheoremViolation(format!(
            "collapse witness for {ideal} failed membership check"
        )));
    }
    Ok(w)
}

/// Values behind the `depth(S/I) = n - 2 ⇒ sdepth(S/I) = n - 2` check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DepthNMinus2Verdict {
    pub n: usize,
    pub depth: usize,
    pub sdepth: usize,
}

pub fn verify_depth_nminus2_theorem(
    ideal: &MonomialIdeal,
    limits: &Limits,
) -> Result<DepthNMinus2Verdict> {
    let n = ideal.n();
    if find_admissible_order(ideal, limits)?.is_none() {
        return Err(Error::Precondition(format!(
            "{ideal} does not have linear quotients"
        )));
    }
    let depth = depth_oracle(ideal, limits)?;
    if n < 2 || depth != n - 2 {
        return Err(Error::Precondition(format!(
            "depth(S/I) = {depth}, not n - 2"
        )));
    }
    let sdepth = sdepth_exact(ideal, TargetKind::Quotient, limits)?;
    if sdepth != n - 2 {
        return Err(Error::TheoremViolation(format!(
            "{ideal} has depth n-2 but sdepth {sdepth}"
        )));
    }
    Ok(DepthNMinus2Verdict { n, depth, sdepth })
}
