//! Instance generation, counterexample search, witness shrinking and audits.

pub mod audit;
pub mod enumerate;
pub mod pool;
pub mod rng;
pub mod shrink;

pub use audit::{
    audit, find_counterexample, AuditPlan, AuditReport, ClaimRecord, Clock, NoClock, SearchOutcome, Status, Tally,
};
pub use enumerate::{count_topologies, enumerate_fuzzy_sets, enumerate_topologies};
pub use pool::{random_topology, InstancePool, Pass, PassMode, SearchConfig};
pub use rng::SearchRng;
pub use shrink::{shrink_witness, TranscriptEntry, Witness};
