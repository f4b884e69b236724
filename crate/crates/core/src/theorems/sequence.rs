//! Inequalities along `0 → S/(I:x_i) → S/I → S/(I,x_i) → 0`.
//!
//! A unit colon makes `S/(I:x_i)` the zero module; it then drops out of
//! every minimum and the colon monotonicity checks hold vacuously.

use crate::betti::depth_oracle;
use crate::error::{Error, Result};
use crate::ideal::MonomialIdeal;
use crate::limits::Limits;
use crate::monomial::Monomial;
use crate::stanley::{sdepth_exact, TargetKind};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExactSequenceReport {
    pub variable: usize,
    pub colon: Option<MonomialIdeal>,
    pub sum: MonomialIdeal,
    pub depth: usize,
    pub depth_colon: Option<usize>,
    pub depth_sum: usize,
    pub sdepth: usize,
    pub sdepth_colon: Option<usize>,
    pub sdepth_sum: usize,
}

fn min_present(a: Option<usize>, b: usize) -> usize {
    a.map_or(b, |a| a.min(b))
}

impl ExactSequenceReport {
    /// `depth(S/I) >= min(depth(S/(I:x_i)), depth(S/(I,x_i)))`.
    pub fn depth_lemma(&self) -> bool {
        self.depth >= min_present(self.depth_colon, self.depth_sum)
    }

    /// `sdepth(S/I) >= min(sdepth(S/(I:x_i)), sdepth(S/(I,x_i)))`.
    pub fn sdepth_lemma(&self) -> bool {
        self.sdepth >= min_present(self.sdepth_colon, self.sdepth_sum)
    }

    /// `depth(S/(I:x_i)) >= depth(S/I)`.
    pub fn depth_colon_monotone(&self) -> bool {
        self.depth_colon.is_none_or(|d| d >= self.depth)
    }

    /// `sdepth(S/(I:x_i)) >= sdepth(S/I)`.
    pub fn sdepth_colon_monotone(&self) -> bool {
        self.sdepth_colon.is_none_or(|d| d >= self.sdepth)
    }

    /// Named results of the four checks.
    pub fn checks(&self) -> [(&'static str, bool); 4] {
        [
            ("depth_lemma", self.depth_lemma()),
            ("sdepth_lemma", self.sdepth_lemma()),
            ("depth_colon_monotone", self.depth_colon_monotone()),
            ("sdepth_colon_monotone", self.sdepth_colon_monotone()),
        ]
    }

    pub fn all_hold(&self) -> bool {
        self.checks().iter().all(|(_, ok)| *ok)
    }
}

/// Computes every term exactly. Linear quotients are not required.
pub fn exact_sequence_checks(
    ideal: &MonomialIdeal,
    i: usize,
    limits: &Limits,
) -> Result<ExactSequenceReport> {
    let n = ideal.n();
    if i >= n {
        return Err(Error::VariableOutOfRange { index: i, n });
    }
    let colon = ideal.colon(&Monomial::var(n, i))?.proper();
    let sum = ideal.add_variable(i)?;
    let (depth_colon, sdepth_colon) = match &colon {
        Some(c) => (
            Some(depth_oracle(c, limits)?),
            Some(sdepth_exact(c, TargetKind::Quotient, limits)?),
        ),
        None => (None, None),
    };
    Ok(ExactSequenceReport {
        variable: i,
        depth: depth_oracle(ideal, limits)?,
        sdepth: sdepth_exact(ideal, TargetKind::Quotient, limits)?,
        depth_colon,
        sdepth_colon,
        depth_sum: depth_oracle(&sum, limits)?,
        sdepth_sum: sdepth_exact(&sum, TargetKind::Quotient, limits)?,
        colon,
        sum,
    })
}
