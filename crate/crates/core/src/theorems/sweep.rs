//! Randomized battery: every theorem-level invariant on many random
//! linear-quotient ideals. Theorem failures are violations; conjecture misses
//! are only notable, since the conjectures are open.

use std::fmt::Write as _;

use crate::betti::depth_oracle;
use crate::error::{Error, Result};
use crate::exec::map_indexed;
use crate::ideal::MonomialIdeal;
use crate::limits::Limits;
use crate::linquo::{depth_via_linear_quotients, linear_quotient_decomposition, AdmissibleOrder};
use crate::stanley::{sdepth_exact, sdepth_of_decomposition, verify_decomposition, TargetKind};

use super::collapse::{find_principal_collapse, verify_depth_nminus2_theorem, CollapseWitness};
use super::conjecture::{combinatorial_witness, conjecture_report, ConjectureReport};
use super::pipeline::{run_iterative_pipeline, PipelineOutcome};
use super::random::{instance_seed, random_linear_quotient_ideal, RandomParams};
use super::sequence::{exact_sequence_checks, ExactSequenceReport};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SweepConfig {
    pub params: RandomParams,
    pub count: usize,
    pub seed: u64,
}

/// Which conjecture an instance failed to find a witness for.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ConjectureKind {
    Weak,
    Strong,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InstanceRecord {
    pub index: usize,
    pub seed: u64,
    pub ideal: MonomialIdeal,
    pub order: AdmissibleOrder,
    pub depth_formula: usize,
    pub depth_oracle: usize,
    pub sdepth: usize,
    pub sdepth_ideal: usize,
    /// sdepth of `u_1 K[Z_1] ⊕ ... ⊕ u_m K[Z_m]`.
    pub lq_decomposition_sdepth: usize,
    pub collapse: Option<CollapseWitness>,
    /// `Some(sdepth)` when `depth = n - 2`.
    pub depth_nminus2_sdepth: Option<usize>,
    pub pipeline_complete: bool,
    /// Transform steps that passed verification and the sdepth bound.
    pub lemma_steps: usize,
    pub exact_sequence: Option<ExactSequenceReport>,
    pub weak: Option<ConjectureReport>,
    pub strong: Option<ConjectureReport>,
    pub combinatorial_witness: Option<usize>,
    pub violations: Vec<String>,
    pub misses: Vec<ConjectureKind>,
    pub skipped: Option<String>,
}

impl InstanceRecord {
    fn violate(&mut self, what: impl Into<String>) {
        self.violations.push(what.into());
    }

    /// Feeds an error into the record: caps skip, everything else violates.
    fn absorb(&mut self, err: Error) {
        match err {
            Error::ResourceCap { .. } => {
                if self.skipped.is_none() {
                    self.skipped = Some(err.to_string());
                }
            }
            other => self.violate(other.to_string()),
        }
    }

    pub fn summary_line(&self) -> String {
        let witness = |r: &Option<ConjectureReport>| match r {
            Some(ConjectureReport {
                witness: Some(i), ..
            }) => format!("x{}", i + 1),
            Some(_) => "none".into(),
            None => "?".into(),
        };
        let mut line = format!(
            "#{:04} [{}] m={} depth={} sdepth={} sdepth_ideal={} weak={} strong={} pipeline={}",
            self.index,
            self.ideal,
            self.order.m(),
            self.depth_oracle,
            self.sdepth,
            self.sdepth_ideal,
            witness(&self.weak),
            witness(&self.strong),
            if self.pipeline_complete {
                "complete"
            } else {
                "stuck"
            },
        );
        if let Some(s) = &self.skipped {
            let _ = write!(line, " SKIPPED({s})");
        }
        for v in &self.violations {
            let _ = write!(line, " VIOLATION({v})");
        }
        line
    }
}

fn check_instance(rec: &mut InstanceRecord, limits: &Limits) -> Result<()> {
    let n = rec.ideal.n();
    let order = rec.order.clone();

    rec.depth_formula = depth_via_linear_quotients(&order);
    rec.depth_oracle = depth_oracle(&rec.ideal, limits)?;
    if rec.depth_formula != rec.depth_oracle {
        rec.violate(format!(
            "depth formula {} != oracle {}",
            rec.depth_formula, rec.depth_oracle
        ));
    }

    let lq = linear_quotient_decomposition(&order);
    if !verify_decomposition(&lq)? {
        rec.violate("linear-quotient decomposition does not verify");
    }
    rec.lq_decomposition_sdepth = sdepth_of_decomposition(&lq)?;
    if order.m() >= 2 && rec.lq_decomposition_sdepth != rec.depth_oracle + 1 {
        rec.violate(format!(
            "sdepth of the linear-quotient decomposition {} != depth(I) {}",
            rec.lq_decomposition_sdepth,
            rec.depth_oracle + 1
        ));
    }

    match find_principal_collapse(&order, limits) {
        Ok(w) => rec.collapse = Some(w),
        Err(e) => rec.absorb(e),
    }

    rec.sdepth = sdepth_exact(&rec.ideal, TargetKind::Quotient, limits)?;
    rec.sdepth_ideal = sdepth_exact(&rec.ideal, TargetKind::Ideal, limits)?;
    if rec.sdepth_ideal < rec.depth_oracle + 1 {
        rec.violate(format!(
            "sdepth(I) = {} below depth(I) = {}",
            rec.sdepth_ideal,
            rec.depth_oracle + 1
        ));
    }

    if n >= 2 && rec.depth_oracle == n - 2 {
        match verify_depth_nminus2_theorem(&rec.ideal, limits) {
            Ok(v) => rec.depth_nminus2_sdepth = Some(v.sdepth),
            Err(e) => rec.absorb(e),
        }
    }

    match run_iterative_pipeline(&order) {
        Ok(out) => {
            rec.pipeline_complete = matches!(out, PipelineOutcome::Complete(_));
            rec.lemma_steps = out.steps().len().saturating_sub(1);
            if let Some(t) = out.trace() {
                if t.final_sdepth() > rec.sdepth {
                    rec.violate(format!(
                        "pipeline decomposition sdepth {} exceeds exact sdepth {}",
                        t.final_sdepth(),
                        rec.sdepth
                    ));
                }
            }
        }
        Err(e) => rec.absorb(e),
    }

    let variable = (rec.seed % n as u64) as usize;
    match exact_sequence_checks(&rec.ideal, variable, limits) {
        Ok(r) => {
            for (name, ok) in r.checks() {
                if !ok {
                    rec.violate(format!("{name} fails for x{}", variable + 1));
                }
            }
            rec.exact_sequence = Some(r);
        }
        Err(e) => rec.absorb(e),
    }

    let weak = conjecture_report(&rec.ideal, false, limits)?;
    let strong = conjecture_report(&rec.ideal, true, limits)?;
    if weak.witness.is_none() {
        rec.misses.push(ConjectureKind::Weak);
    }
    if strong.witness.is_none() {
        rec.misses.push(ConjectureKind::Strong);
    }
    rec.combinatorial_witness = combinatorial_witness(&order);
    if let Some(i) = rec.combinatorial_witness {
        if weak.probes[i].depth_with < weak.depth {
            rec.violate(format!(
                "combinatorial witness x{} but depth(S/(I,x{})) < depth(S/I)",
                i + 1,
                i + 1
            ));
        }
    }
    rec.weak = Some(weak);
    rec.strong = Some(strong);
    Ok(())
}

/// Generates instance `index` of a sweep and runs the battery on it.
pub fn run_instance(config: &SweepConfig, index: usize, limits: &Limits) -> Result<InstanceRecord> {
    let seed = instance_seed(config.seed, index as u64);
    let (ideal, order) = random_linear_quotient_ideal(config.params, seed)?;
    let mut rec = InstanceRecord {
        index,
        seed,
        ideal,
        order,
        depth_formula: 0,
        depth_oracle: 0,
        sdepth: 0,
        sdepth_ideal: 0,
        lq_decomposition_sdepth: 0,
        collapse: None,
        depth_nminus2_sdepth: None,
        pipeline_complete: false,
        lemma_steps: 0,
        exact_sequence: None,
        weak: None,
        strong: None,
        combinatorial_witness: None,
        violations: Vec::new(),
        misses: Vec::new(),
        skipped: None,
    };
    if let Err(e) = check_instance(&mut rec, limits) {
        rec.absorb(e);
    }
    Ok(rec)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SweepSummary {
    pub config: SweepConfig,
    pub records: Vec<InstanceRecord>,
}

impl SweepSummary {
    pub fn violations(&self) -> impl Iterator<Item = (&InstanceRecord, &String)> {
        self.records
            .iter()
            .flat_map(|r| r.violations.iter().map(move |v| (r, v)))
    }

    pub fn has_violations(&self) -> bool {
        self.records.iter().any(|r| !r.violations.is_empty())
    }

    pub fn notable(&self) -> impl Iterator<Item = &InstanceRecord> {
        self.records.iter().filter(|r| !r.misses.is_empty())
    }

    pub fn count_where(&self, pred: impl Fn(&InstanceRecord) -> bool) -> usize {
        self.records.iter().filter(|r| pred(r)).count()
    }

    /// Deterministic text summary, one line per instance plus totals.
    pub fn render(&self) -> String {
        let p = self.config.params;
        let mut out = String::new();
        let _ = writeln!(
            out,
            "sweep n={} m={} deg={} count={} seed={}",
            p.n, p.m, p.max_degree, self.config.count, self.config.seed
        );
        for r in &self.records {
            let _ = writeln!(out, "{}", r.summary_line());
        }
        let total = self.records.len();
        let lines = [
            ("instances", total),
            ("skipped", self.count_where(|r| r.skipped.is_some())),
            (
                "depth_formula_matches_oracle",
                self.count_where(|r| r.skipped.is_none() && r.depth_formula == r.depth_oracle),
            ),
            ("collapse_found", self.count_where(|r| r.collapse.is_some())),
            (
                "depth_nminus2_instances",
                self.count_where(|r| r.depth_nminus2_sdepth.is_some()),
            ),
            (
                "pipeline_complete",
                self.count_where(|r| r.pipeline_complete),
            ),
            (
                "lemma_steps_checked",
                self.records.iter().map(|r| r.lemma_steps).sum(),
            ),
            (
                "exact_sequence_checked",
                self.count_where(|r| r.exact_sequence.is_some()),
            ),
            (
                "weak_conjecture_misses",
                self.count_where(|r| r.misses.contains(&ConjectureKind::Weak)),
            ),
            (
                "strong_conjecture_misses",
                self.count_where(|r| r.misses.contains(&ConjectureKind::Strong)),
            ),
            (
                "violations",
                self.records.iter().map(|r| r.violations.len()).sum(),
            ),
        ];
        for (k, v) in lines {
            let _ = writeln!(out, "{k}: {v}");
        }
        out
    }
}

pub fn run_sweep(config: &SweepConfig, limits: &Limits) -> Result<SweepSummary> {
    let records = map_indexed(config.count, limits.execution, |k| {
        run_instance(config, k, limits)
    });
    let records = records.into_iter().collect::<Result<Vec<_>>>()?;
    Ok(SweepSummary {
        config: *config,
        records,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_sweep_is_clean_and_deterministic() {
        let config = SweepConfig {
            params: RandomParams::new(3, 3, 2).unwrap(),
            count: 8,
            seed: 11,
        };
        let a = run_sweep(&config, &Limits::sequential()).unwrap();
        let b = run_sweep(&config, &Limits::default()).unwrap();
        assert!(!a.has_violations(), "{}", a.render());
        assert_eq!(a.render(), b.render());
    }

    #[test]
    fn empty_sweep() {
        let config = SweepConfig {
            params: RandomParams::new(3, 3, 2).unwrap(),
            count: 0,
            seed: 1,
        };
        let s = run_sweep(&config, &Limits::default()).unwrap();
        assert!(s.records.is_empty());
        assert!(s.render().contains("instances: 0"));
    }
}
