//! Iterated quotient transforms along an admissible order: start from the
//! staircase decomposition of `S/(u_1)` and absorb `u_2, ..., u_m` one at a
//! time, each step keeping `sdepth(D_j) >= min(sdepth(D_{j-1}), n - n_j - 1)`.

use crate::error::{Error, Result};
use crate::ideal::MonomialIdeal;
use crate::linquo::{depth_via_linear_quotients, AdmissibleOrder};
use crate::monomial::{Monomial, VarSet};
use crate::stanley::{
    apply_quotient_transform, find_transform_slot, sdepth_of_decomposition, staircase,
    verify_decomposition, StanleyDecomposition, Target,
};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PipelineStep {
    /// `I_j = (u_1, ..., u_j)`.
    pub ideal: MonomialIdeal,
    pub decomposition: StanleyDecomposition,
    /// Index of the transformed piece in `D_{j-1}`; `None` for `j = 1`.
    pub slot: Option<usize>,
    pub sdepth: usize,
    /// `depth(S/I_j)` from the colon sizes of the prefix order.
    pub depth: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PipelineTrace {
    pub steps: Vec<PipelineStep>,
}

impl PipelineTrace {
    pub fn last(&self) -> &PipelineStep {
        self.steps.last().expect("a trace has at least one step")
    }

    pub fn final_sdepth(&self) -> usize {
        self.last().sdepth
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PipelineOutcome {
    Complete(PipelineTrace),
    /// No piece of `D_{j-1}` satisfies the slot hypothesis at step `step`
    /// (1-based). Not a contradiction: the hypothesis simply fails.
    Stuck {
        partial: PipelineTrace,
        step: usize,
        reason: String,
    },
}

impl PipelineOutcome {
    pub fn trace(&self) -> Option<&PipelineTrace> {
        match self {
            PipelineOutcome::Complete(t) => Some(t),
            PipelineOutcome::Stuck { .. } => None,
        }
    }

    /// Steps completed, whether or not the run finished.
    pub fn steps(&self) -> &[PipelineStep] {
        match self {
            PipelineOutcome::Complete(t) => &t.steps,
            PipelineOutcome::Stuck { partial, .. } => &partial.steps,
        }
    }
}

/// Staircase decomposition of `S/(u)`.
pub fn principal_quotient_decomposition(u: &Monomial) -> Result<StanleyDecomposition> {
    let n = u.n();
    let ideal = MonomialIdeal::new(n, vec![u.clone()])?;
    let pieces = staircase(&Monomial::one(n), u, VarSet::full(n))?;
    StanleyDecomposition::new(Target::Quotient(ideal), pieces)
}

pub fn run_iterative_pipeline(order: &AdmissibleOrder) -> Result<PipelineOutcome> {
    let n = order.n();
    let first = principal_quotient_decomposition(&order.generators()[0])?;
    let mut steps = vec![PipelineStep {
        ideal: first.target().ideal().clone(),
        sdepth: sdepth_of_decomposition(&first)?,
        decomposition: first,
        slot: None,
        depth: n - 1,
    }];

    for j in 2..=order.m() {
        let u = &order.generators()[j - 1];
        let colon = order.colon_vars(j);
        let prev = steps.last().expect("non-empty").clone();
        let Some(slot) = find_transform_slot(&prev.decomposition, u, colon) else {
            return Ok(PipelineOutcome::Stuck {
                partial: PipelineTrace { steps },
                step: j,
                reason: format!(
                    "no piece w K[W] with W = {{{}}} contains u_{j} = {u}",
                    colon.complement(n)
                ),
            });
        };
        let next = apply_quotient_transform(&prev.decomposition, u, colon)?;
        if !verify_decomposition(&next)? {
            return Err(Error::TheoremViolation(format!(
                "transform at step {j} did not produce a decomposition of S/I_{j}"
            )));
        }
        let sdepth = sdepth_of_decomposition(&next)?;
        let bound = prev.sdepth.min(n - colon.len() - 1);
        if sdepth < bound {
            return Err(Error::TheoremViolation(format!(
                "step {j}: sdepth {sdepth} below min(sdepth(D_{}), n - n_j - 1) = {bound}",
                j - 1
            )));
        }
        steps.push(PipelineStep {
            ideal: next.target().ideal().clone(),
            decomposition: next,
            slot: Some(slot),
            sdepth,
            depth: depth_via_linear_quotients(&order.prefix(j)),
        });
    }

    let trace = PipelineTrace { steps };
    let depth = depth_via_linear_quotients(order);
    if trace.final_sdepth() < depth {
        return Err(Error::TheoremViolation(format!(
            "pipeline finished with sdepth {} below depth {depth}",
            trace.final_sdepth()
        )));
    }
    Ok(PipelineOutcome::Complete(trace))
}
