//! Multi-threaded audit over scoped worker threads.

use std::time::Instant;

use fuzzbound_core::search::audit::merge_tallies;
use fuzzbound_core::search::{AuditPlan, AuditReport, Clock};

/// Monotonic nanoseconds since construction.
#[derive(Debug, Clone, Copy)]
pub struct WallClock(Instant);

impl WallClock {
    pub fn start() -> Self {
        WallClock(Instant::now())
    }
}

impl Clock for WallClock {
    fn now_nanos(&self) -> u64 {
        u64::try_from(self.0.elapsed().as_nanos()).unwrap_or(u64::MAX)
    }
}

/// Run `plan` on `workers` threads, each taking one contiguous slice of the
/// instance index space. The report is the same for every worker count except
/// for the timing fields.
pub fn run_audit(plan: &AuditPlan, workers: usize, clock: &WallClock) -> fuzzbound_core::Result<AuditReport> {
    let total = plan.work_len();
    let workers = workers.clamp(1, total.max(1));
    let chunk = total.div_ceil(workers);
    let parts: Vec<_> = std::thread::scope(|scope| {
        let handles: Vec<_> = (0..workers)
            .map(|w| {
                let range = (w * chunk).min(total)..((w + 1) * chunk).min(total);
                scope.spawn(move || plan.evaluate_range(range, clock))
            })
            .collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("audit worker panicked"))
            .collect()
    });
    plan.finish(merge_tallies(parts, plan.claims().len()), clock)
}
