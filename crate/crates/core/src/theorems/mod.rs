//! Executable forms of the results on Stanley depth under linear quotients:
//! witness searches, the transform pipeline, the inequality battery on the
//! colon/sum exact sequence, and randomized sweeps.

mod collapse;
mod conjecture;
mod pipeline;
mod random;
mod sequence;
mod sweep;

pub use collapse::{
    find_principal_collapse, verify_collapse, verify_depth_nminus2_theorem, CollapseWitness,
    DepthNMinus2Verdict,
};
pub use conjecture::{
    combinatorial_witness, conditional_chain_verify, conjecture_report, conjecture_witness,
    sdepth_after_adding_variable, strong_conjecture_witness, ChainLevel, ChainReport, ChainVerdict,
    ConjectureReport, VariableProbe,
};
pub use pipeline::{
    principal_quotient_decomposition, run_iterative_pipeline, PipelineOutcome, PipelineStep,
    PipelineTrace,
};
pub use random::{
    instance_seed, random_linear_quotient_ideal, RandomParams, MAX_RANDOM_DEGREE,
    MAX_RANDOM_GENERATORS, MAX_RANDOM_VARS,
};
pub use sequence::{exact_sequence_checks, ExactSequenceReport};
pub use sweep::{
    run_instance, run_sweep, ConjectureKind, InstanceRecord, SweepConfig, SweepSummary,
};
