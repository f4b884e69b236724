//! Witness searches for the two conjectures on adjoining a variable, the
//! combinatorial reformulation, and the certified induction chain.

use crate::betti::depth_oracle;
use crate::error::{Error, Result};
use crate::ideal::MonomialIdeal;
use crate::limits::Limits;
use crate::linquo::{
    add_variable, depth_via_linear_quotients, find_admissible_order, AdmissibleOrder,
};
use crate::stanley::{sdepth_exact, TargetKind};

/// Values computed for one variable `x_i` while scanning for a witness.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VariableProbe {
    pub variable: usize,
    /// `depth(S/(I, x_i))`.
    pub depth_with: usize,
    /// `sdepth(S/(I, x_i))`, evaluated as `sdepth(S'/J)`. Only for the
    /// strong form.
    pub sdepth_with: Option<usize>,
    pub qualifies: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConjectureReport {
    pub ideal: MonomialIdeal,
    pub strong: bool,
    pub depth: usize,
    pub sdepth: Option<usize>,
    pub probes: Vec<VariableProbe>,
    /// Smallest qualifying variable; `None` is a counterexample.
    pub witness: Option<usize>,
}

fn require_linear_quotients(ideal: &MonomialIdeal, limits: &Limits) -> Result<AdmissibleOrder> {
    find_admissible_order(ideal, limits)?
        .ok_or_else(|| Error::Precondition(format!("{ideal} does not have linear quotients")))
}

/// `sdepth(S/(I, x_i))` through `S'/J` from the variable-adjunction lemma;
/// `J = 0` gives `n - 1`.
pub fn sdepth_after_adding_variable(
    order: &AdmissibleOrder,
    i: usize,
    limits: &Limits,
) -> Result<usize> {
    let adj = add_variable(order, i)?;
    match &adj.restricted {
        Some(j) => sdepth_exact(j.ideal(), TargetKind::Quotient, limits),
        None => Ok(order.n() - 1),
    }
}

/// Scans every variable. With `strong`, a variable must also satisfy
/// `sdepth(S/(I, x_i)) <= sdepth(S/I)`.
pub fn conjecture_report(
    ideal: &MonomialIdeal,
    strong: bool,
    limits: &Limits,
) -> Result<ConjectureReport> {
    let order = require_linear_quotients(ideal, limits)?;
    let depth = depth_oracle(ideal, limits)?;
    let sdepth = if strong {
        Some(sdepth_exact(ideal, TargetKind::Quotient, limits)?)
    } else {
        None
    };
    let mut probes = Vec::with_capacity(ideal.n());
    for i in 0..ideal.n() {
        let depth_with = depth_oracle(&ideal.add_variable(i)?, limits)?;
        let sdepth_with = match sdepth {
            Some(_) => Some(sdepth_after_adding_variable(&order, i, limits)?),
            None => None,
        };
        let qualifies = depth_with >= depth
            && match (sdepth_with, sdepth) {
                (Some(with), Some(base)) => with <= base,
                _ => true,
            };
        probes.push(VariableProbe {
            variable: i,
            depth_with,
            sdepth_with,
            qualifies,
        });
    }
    let witness = probes.iter().find(|p| p.qualifies).map(|p| p.variable);
    Ok(ConjectureReport {
        ideal: ideal.clone(),
        strong,
        depth,
        sdepth,
        probes,
        witness,
    })
}

/// Smallest `i` with `depth(S/(I, x_i)) >= depth(S/I)`.
pub fn conjecture_witness(ideal: &MonomialIdeal, limits: &Limits) -> Result<Option<usize>> {
    require_linear_quotients(ideal, limits)?;
    let depth = depth_oracle(ideal, limits)?;
    for i in 0..ideal.n() {
        if depth_oracle(&ideal.add_variable(i)?, limits)? >= depth {
            return Ok(Some(i));
        }
    }
    Ok(None)
}

/// Smallest `i` that also keeps `sdepth(S/(I, x_i)) <= sdepth(S/I)`.
pub fn strong_conjecture_witness(ideal: &MonomialIdeal, limits: &Limits) -> Result<Option<usize>> {
    let order = require_linear_quotients(ideal, limits)?;
    let depth = depth_oracle(ideal, limits)?;
    let sdepth = sdepth_exact(ideal, TargetKind::Quotient, limits)?;
    for i in 0..ideal.n() {
        if depth_oracle(&ideal.add_variable(i)?, limits)? < depth {
            continue;
        }
        if sdepth_after_adding_variable(&order, i, limits)? <= sdepth {
            return Ok(Some(i));
        }
    }
    Ok(None)
}

/// Smallest `i` such that no `j` has `x_i ∤ u_j`, `x_i ∈ Z_j` and
/// `|Z_j| = n - s`, where `n - s = min_j |Z_j|`.
pub fn combinatorial_witness(order: &AdmissibleOrder) -> Option<usize> {
    let n = order.n();
    let min_free = (1..=order.m())
        .map(|j| order.free_vars(j).len())
        .min()
        .unwrap_or(n);
    (0..n).find(|&i| {
        !(1..=order.m()).any(|j| {
            let z = order.free_vars(j);
            order.generators()[j - 1].exp(i) == 0 && z.contains(i) && z.len() == min_free
        })
    })
}

/// One level of the induction: `I` in `n` variables reduced through `x_i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChainLevel {
    pub ideal: MonomialIdeal,
    pub variable: usize,
    /// `sdepth(S/I)`.
    pub sdepth: usize,
    /// `sdepth(S/(I, x_i))` computed directly in `n` variables.
    pub sdepth_with: usize,
    /// `sdepth(S'/J)`.
    pub sdepth_restricted: usize,
    /// `depth(S'/J)`.
    pub depth_restricted: usize,
    /// `depth(S/(I, x_i))`.
    pub depth_with: usize,
    /// `depth(S/I)`.
    pub depth: usize,
}

impl ChainLevel {
    /// `sdepth(S/I) >= sdepth(S/(I,x_i)) = sdepth(S'/J)`,
    /// `depth(S'/J) = depth(S/(I,x_i)) >= depth(S/I)`.
    pub fn links_hold(&self) -> bool {
        self.sdepth >= self.sdepth_with
            && self.sdepth_with == self.sdepth_restricted
            && self.depth_restricted == self.depth_with
            && self.depth_with >= self.depth
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ChainVerdict {
    /// Every level found a witness, every link holds, and the base case
    /// satisfies `sdepth >= depth`.
    Certified,
    /// Level `level` (0-based) has no strong-conjecture witness.
    NoWitness { level: usize },
    /// A computed value breaks the chain at `level`.
    Broken { level: usize, detail: String },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChainReport {
    pub levels: Vec<ChainLevel>,
    pub verdict: ChainVerdict,
    /// `sdepth(S/I)` and `depth(S/I)` of the input.
    pub sdepth: usize,
    pub depth: usize,
}

/// Walks the induction `sdepth(S/I) >= sdepth(S'/J) >= depth(S'/J) >=
/// depth(S/I)` down to one variable, recomputing every quantity exactly.
pub fn conditional_chain_verify(ideal: &MonomialIdeal, limits: &Limits) -> Result<ChainReport> {
    let top_sdepth = sdepth_exact(ideal, TargetKind::Quotient, limits)?;
    let top_depth = depth_oracle(ideal, limits)?;
    let mut levels = Vec::new();
    let mut current = require_linear_quotients(ideal, limits)?;

    let verdict = loop {
        let level = levels.len();
        let i_ideal = current.ideal().clone();
        let n = i_ideal.n();
        let sdepth = sdepth_exact(&i_ideal, TargetKind::Quotient, limits)?;
        let depth = depth_oracle(&i_ideal, limits)?;
        if n == 1 {
            break if sdepth >= depth {
                ChainVerdict::Certified
            } else {
                ChainVerdict::Broken {
                    level,
                    detail: format!("base case sdepth {sdepth} < depth {depth}"),
                }
            };
        }
        let Some(i) = strong_conjecture_witness(&i_ideal, limits)? else {
            break ChainVerdict::NoWitness { level };
        };
        let with = i_ideal.add_variable(i)?;
        let adj = add_variable(&current, i)?;
        let (sdepth_restricted, depth_restricted) = match &adj.restricted {
            Some(j) => (
                sdepth_exact(j.ideal(), TargetKind::Quotient, limits)?,
                depth_oracle(j.ideal(), limits)?,
            ),
            None => (n - 1, n - 1),
        };
        let entry = ChainLevel {
            ideal: i_ideal,
            variable: i,
            sdepth,
            sdepth_with: sdepth_exact(&with, TargetKind::Quotient, limits)?,
            sdepth_restricted,
            depth_restricted,
            depth_with: depth_oracle(&with, limits)?,
            depth,
        };
        let ok = entry.links_hold();
        levels.push(entry);
        if !ok {
            break ChainVerdict::Broken {
                level,
                detail: "a link of the inequality chain fails".into(),
            };
        }
        match adj.restricted {
            Some(j) => {
                if depth_via_linear_quotients(&j) != depth_restricted {
                    break ChainVerdict::Broken {
                        level,
                        detail: "restricted order disagrees with the depth oracle".into(),
                    };
                }
                current = j;
            }
            // S'/0 is a polynomial ring: sdepth = depth = n - 1.
            None => break ChainVerdict::Certified,
        }
    };

    if verdict == ChainVerdict::Certified && top_sdepth < top_depth {
        return Err(Error::TheoremViolation(format!(
            "certified chain but sdepth {top_sdepth} < depth {top_depth} for {ideal}"
        )));
    }
    Ok(ChainReport {
        levels,
        verdict,
        sdepth: top_sdepth,
        depth: top_depth,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::monomial::{Monomial, VarSet};

    fn m(exps: &[u32]) -> Monomial {
        Monomial::new(exps.to_vec())
    }

    fn example() -> MonomialIdeal {
        MonomialIdeal::new(
            4,
            vec![m(&[2, 0, 0, 0]), m(&[1, 2, 0, 0]), m(&[1, 1, 2, 0])],
        )
        .unwrap()
    }

    #[test]
    fn weak_witness_for_example() {
        let l = Limits::default();
        // x1 divides every generator, so (I, x1) = (x1) has depth 3.
        assert_eq!(conjecture_witness(&example(), &l).unwrap(), Some(0));
        let r = conjecture_report(&example(), false, &l).unwrap();
        assert_eq!(r.depth, 1);
        let depths: Vec<usize> = r.probes.iter().map(|p| p.depth_with).collect();
        assert_eq!(depths, vec![3, 2, 1, 0]);
    }

    #[test]
    fn weak_witness_trivial_cases() {
        let l = Limits::default();
        let x1 = MonomialIdeal::new(3, vec![m(&[1, 0, 0])]).unwrap();
        assert_eq!(conjecture_witness(&x1, &l).unwrap(), Some(0));
        let maximal = MonomialIdeal::from_variables(3, VarSet::full(3)).unwrap();
        assert_eq!(conjecture_witness(&maximal, &l).unwrap(), Some(0));
    }

    #[test]
    fn strong_witness_for_example() {
        let l = Limits::default();
        assert_eq!(strong_conjecture_witness(&example(), &l).unwrap(), Some(2));
        let r = conjecture_report(&example(), true, &l).unwrap();
        assert_eq!(r.sdepth, Some(1));
        assert_eq!(r.probes[1].sdepth_with, Some(2));
        assert!(!r.probes[1].qualifies);
        assert_eq!(r.probes[2].sdepth_with, Some(1));
        assert_eq!(r.witness, Some(2));
    }

    #[test]
    fn strong_form_has_no_witness_for_x1x2_times_maximal() {
        // I = x1*x2*(x1, x2): adding x1 or x2 leaves K[x2, x3] or K[x1, x3]
        // with sdepth 2 > 1, adding x3 drops the depth to 0.
        let l = Limits::default();
        let i = MonomialIdeal::new(3, vec![m(&[2, 1, 0]), m(&[1, 2, 0])]).unwrap();
        let weak = conjecture_report(&i, false, &l).unwrap();
        assert_eq!(weak.witness, Some(0));
        let strong = conjecture_report(&i, true, &l).unwrap();
        assert_eq!((strong.depth, strong.sdepth), (1, Some(1)));
        let with: Vec<_> = strong
            .probes
            .iter()
            .map(|p| (p.depth_with, p.sdepth_with))
            .collect();
        assert_eq!(with, vec![(2, Some(2)), (2, Some(2)), (0, Some(0))]);
        assert_eq!(strong.witness, None);
        assert_eq!(strong_conjecture_witness(&i, &l).unwrap(), None);
        let chain = conditional_chain_verify(&i, &l).unwrap();
        assert_eq!(chain.verdict, ChainVerdict::NoWitness { level: 0 });
        assert!(chain.sdepth >= chain.depth);
    }

    #[test]
    fn strong_witness_minimal_generator_variable() {
        let l = Limits::default();
        // x2 is a minimal generator, so i = 2 satisfies both conditions.
        let i = MonomialIdeal::new(3, vec![m(&[0, 1, 0]), m(&[2, 0, 1])]).unwrap();
        let r = conjecture_report(&i, true, &l).unwrap();
        assert!(r.probes[1].qualifies);
        assert!(strong_conjecture_witness(&i, &l).unwrap().unwrap() <= 1);
    }

    #[test]
    fn combinatorial_witness_cases() {
        let l = Limits::default();
        let o = find_admissible_order(&example(), &l).unwrap().unwrap();
        assert_eq!(combinatorial_witness(&o), Some(0));
        let p = MonomialIdeal::new(3, vec![m(&[0, 1, 1])]).unwrap();
        let o = find_admissible_order(&p, &l).unwrap().unwrap();
        // x1 lies in the only (full) free set and divides nothing.
        assert_eq!(combinatorial_witness(&o), Some(1));
    }

    #[test]
    fn chain_for_example_is_certified() {
        let l = Limits::default();
        let r = conditional_chain_verify(&example(), &l).unwrap();
        assert_eq!(r.verdict, ChainVerdict::Certified);
        assert!(r.sdepth >= r.depth);
        assert!(r.levels.iter().all(ChainLevel::links_hold));
    }

    #[test]
    fn chain_for_principal_and_maximal() {
        let l = Limits::default();
        let p = MonomialIdeal::new(3, vec![m(&[1, 1, 0])]).unwrap();
        let r = conditional_chain_verify(&p, &l).unwrap();
        assert_eq!(r.verdict, ChainVerdict::Certified);
        assert_eq!((r.sdepth, r.depth), (2, 2));

        let maximal = MonomialIdeal::from_variables(3, VarSet::full(3)).unwrap();
        let r = conditional_chain_verify(&maximal, &l).unwrap();
        assert_eq!(r.verdict, ChainVerdict::Certified);
        assert_eq!(r.levels.len(), 2);
        assert!(r.levels.iter().all(|lv| lv.sdepth == 0 && lv.depth == 0));
    }
}
