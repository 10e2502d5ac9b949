//! Per-claim audit over an instance pool.
//!
//! Work is split by instance index: [`AuditPlan::evaluate_range`] tallies a
//! contiguous slice of the global index space (unary instances first, then
//! binary), and [`merge_tallies`] combines slices by summing counts and taking
//! the smallest hit index. The merged result does not depend on how the index
//! space was partitioned, so any number of workers gives the same report.

use alloc::vec::Vec;
use core::ops::Range;

use crate::claims::{Claim, ClaimKind, Outcome};
use crate::error::Result;
use crate::search::pool::{InstancePool, SearchConfig};
use crate::search::shrink::{shrink_witness_with_cap, Witness};

/// Monotonic time source; the audit itself never reads wall time.
pub trait Clock {
    fn now_nanos(&self) -> u64;
}

/// A clock that always reads zero.
#[derive(Debug, Clone, Copy, Default)]
pub struct NoClock;

impl Clock for NoClock {
    fn now_nanos(&self) -> u64 {
        0
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    /// Universal claim, no failure among the checked instances.
    VerifiedInBudget,
    /// Universal claim with a failing instance.
    Refuted,
    /// Existential claim with a satisfying instance.
    Witnessed,
    UnwitnessedInBudget,
    /// No instance was checked.
    Skipped,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::VerifiedInBudget => "VERIFIED_IN_BUDGET",
            Status::Refuted => "REFUTED",
            Status::Witnessed => "WITNESSED",
            Status::UnwitnessedInBudget => "UNWITNESSED_IN_BUDGET",
            Status::Skipped => "SKIPPED",
        }
    }
}

impl core::fmt::Display for Status {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Instance counts for one claim over some slice of the pool.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct Tally {
    pub holds: u64,
    pub fails: u64,
    pub hypothesis_not_met: u64,
    /// Smallest index (within the claim's arity list) of a failing instance,
    /// or of a satisfying one for existential claims.
    pub first_hit: Option<usize>,
    pub elapsed_nanos: u64,
}

impl Tally {
    pub fn checked(&self) -> u64 {
        self.holds + self.fails + self.hypothesis_not_met
    }

    fn absorb(&mut self, other: &Tally) {
        self.holds += other.holds;
        self.fails += other.fails;
        self.hypothesis_not_met += other.hypothesis_not_met;
        self.elapsed_nanos += other.elapsed_nanos;
        self.first_hit = match (self.first_hit, other.first_hit) {
            (Some(a), Some(b)) => Some(a.min(b)),
            (a, b) => a.or(b),
        };
    }
}

/// Combine per-slice tallies (each one entry per planned claim).
pub fn merge_tallies<I: IntoIterator<Item = Vec<Tally>>>(parts: I, claims: usize) -> Vec<Tally> {
    let mut merged = alloc::vec![Tally::default(); claims];
    for part in parts {
        for (m, t) in merged.iter_mut().zip(&part) {
            m.absorb(t);
        }
    }
    merged
}

#[derive(Debug, Clone, PartialEq)]
pub struct ClaimRecord {
    pub claim: &'static Claim,
    pub status: Status,
    pub tally: Tally,
    pub witness: Option<Witness>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct AuditReport {
    pub records: Vec<ClaimRecord>,
    pub spaces: usize,
    pub unary_instances: usize,
    pub binary_instances: usize,
}

impl AuditReport {
    pub fn record(&self, id: &str) -> Option<&ClaimRecord> {
        self.records.iter().find(|r| r.claim.id == id)
    }
}

/// A materialised audit: selected claims plus the instance pool.
#[derive(Debug, Clone)]
pub struct AuditPlan {
    claims: Vec<&'static Claim>,
    pool: InstancePool,
    budget: Option<usize>,
    cap: usize,
}

impl AuditPlan {
    pub fn new(config: &SearchConfig, claims: Vec<&'static Claim>) -> Result<Self> {
        Ok(AuditPlan {
            claims,
            pool: InstancePool::build(config)?,
            budget: config.claim_budget,
            cap: config.topology_cap,
        })
    }

    pub fn claims(&self) -> &[&'static Claim] {
        &self.claims
    }

    pub fn pool(&self) -> &InstancePool {
        &self.pool
    }

    /// Size of the global index space.
    pub fn work_len(&self) -> usize {
        self.pool.instances(1).len() + self.pool.instances(2).len()
    }

    /// Tally every planned claim over the global indices in `range`.
    pub fn evaluate_range(&self, range: Range<usize>, clock: &dyn Clock) -> Vec<Tally> {
        let unary = self.pool.instances(1).len();
        let split = |arity: usize| -> Range<usize> {
            let (lo, hi) = (range.start, range.end.min(self.work_len()));
            match arity {
                1 => lo.min(unary)..hi.min(unary),
                _ => lo.saturating_sub(unary)..hi.saturating_sub(unary),
            }
        };
        self.claims
            .iter()
            .map(|claim| {
                let started = clock.now_nanos();
                let mut tally = Tally::default();
                let instances = self.pool.instances(claim.arity);
                for index in split(claim.arity) {
                    if !self.pool.in_budget(claim.arity, index, self.budget) {
                        continue;
                    }
                    let inst = &instances[index];
                    let outcome = claim.evaluate_unchecked(self.pool.topology(inst), &inst.args);
                    match outcome {
                        Outcome::Holds => tally.holds += 1,
                        Outcome::Fails => tally.fails += 1,
                        Outcome::HypothesisNotMet => tally.hypothesis_not_met += 1,
                    }
                    if tally.first_hit.is_none() && claim.is_hit(outcome) {
                        tally.first_hit = Some(index);
                    }
                }
                tally.elapsed_nanos = clock.now_nanos().saturating_sub(started);
                tally
            })
            .collect()
    }

    /// Statuses and witnesses from merged tallies. Refuting witnesses are shrunk.
    pub fn finish(&self, tallies: Vec<Tally>, clock: &dyn Clock) -> Result<AuditReport> {
        let mut records = Vec::with_capacity(self.claims.len());
        for (claim, mut tally) in self.claims.iter().copied().zip(tallies) {
            let started = clock.now_nanos();
            let status = match (claim.kind, tally.first_hit, tally.checked()) {
                (_, _, 0) => Status::Skipped,
                (ClaimKind::Universal, Some(_), _) => Status::Refuted,
                (ClaimKind::Universal, None, _) => Status::VerifiedInBudget,
                (ClaimKind::Existential, Some(_), _) => Status::Witnessed,
                (ClaimKind::Existential, None, _) => Status::UnwitnessedInBudget,
            };
            let witness = match tally.first_hit {
                Some(index) => {
                    let inst = &self.pool.instances(claim.arity)[index];
                    let found = Witness::new(claim, self.pool.topology(inst).clone(), inst.args.clone());
                    Some(match status {
                        Status::Refuted => shrink_witness_with_cap(&found, self.cap)?,
                        _ => found,
                    })
                }
                None => None,
            };
            tally.elapsed_nanos += clock.now_nanos().saturating_sub(started);
            records.push(ClaimRecord {
                claim,
                status,
                tally,
                witness,
            });
        }
        Ok(AuditReport {
            records,
            spaces: self.pool.spaces().len(),
            unary_instances: self.pool.instances(1).len(),
            binary_instances: self.pool.instances(2).len(),
        })
    }

    /// Single-worker audit.
    pub fn run(&self, clock: &dyn Clock) -> Result<AuditReport> {
        let tallies = self.evaluate_range(0..self.work_len(), clock);
        self.finish(tallies, clock)
    }
}

/// Run `claims` under `config` on one worker.
pub fn audit(config: &SearchConfig, claims: Vec<&'static Claim>) -> Result<AuditReport> {
    AuditPlan::new(config, claims)?.run(&NoClock)
}

#[derive(Debug, Clone, PartialEq)]
pub enum SearchOutcome {
    /// First failing (universal) or satisfying (existential) instance, unshrunk.
    Found(Witness),
    Exhausted {
        checked: u64,
    },
}

/// Scan the pool in index order for the first hit of `claim`.
pub fn find_counterexample(claim: &'static Claim, config: &SearchConfig) -> Result<SearchOutcome> {
    let pool = InstancePool::build(config)?;
    let mut checked = 0;
    for (index, inst) in pool.instances(claim.arity).iter().enumerate() {
        if !pool.in_budget(claim.arity, index, config.claim_budget) {
            continue;
        }
        checked += 1;
        let t = pool.topology(inst);
        if claim.is_hit(claim.evaluate_unchecked(t, &inst.args)) {
            return Ok(SearchOutcome::Found(Witness::new(claim, t.clone(), inst.args.clone())));
        }
    }
    Ok(SearchOutcome::Exhausted { checked })
}
