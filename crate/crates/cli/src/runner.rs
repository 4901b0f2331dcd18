//! Runs suite checks concurrently; output keeps the schedule order.

use std::time::{Duration, Instant};

use grassline::verify::{Check, VerificationReport};
use rayon::prelude::*;

pub struct TimedReport {
    pub report: VerificationReport,
    pub elapsed: Duration,
}

fn timed<T>(f: impl FnOnce() -> T) -> (T, Duration) {
    let start = Instant::now();
    let value = f();
    (value, start.elapsed())
}

/// Errors become failing reports, so every scheduled check yields one entry.
pub fn run_checks(checks: &[Check]) -> Vec<TimedReport> {
    checks
        .par_iter()
        .map(|check| {
            let (report, elapsed) = timed(|| check.run_report());
            TimedReport { report, elapsed }
        })
        .collect()
}

/// Stops at the first check whose preconditions fail.
pub fn try_run_checks(checks: &[Check]) -> grassline::Result<Vec<TimedReport>> {
    checks
        .par_iter()
        .map(|check| {
            let (report, elapsed) = timed(|| check.run());
            Ok(TimedReport {
                report: report?,
                elapsed,
            })
        })
        .collect()
}
