use crate::exec::Execution;

/// Resource caps for the exponential searches, plus the execution mode.
#[derive(Clone, Copy, Debug)]
pub struct Limits {
    /// Largest generator count accepted by the admissible-order search
    /// (its state space is `2^m`).
    pub max_order_generators: usize,
    /// Cap on subset states visited by the admissible-order search.
    pub max_order_states: u64,
    /// Cap on nodes visited by one interval-partition search.
    pub max_search_nodes: u64,
    /// Largest generator count accepted by the Betti scan (`2^m` lcms).
    pub max_betti_generators: usize,
    pub execution: Execution,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_order_generators: 20,
            max_order_states: 1 << 20,
            max_search_nodes: 5_000_000,
            max_betti_generators: 12,
            execution: Execution::default(),
        }
    }
}

impl Limits {
    pub fn sequential() -> Self {
        Limits {
            execution: Execution::Sequential,
            ..Limits::default()
        }
    }
}
