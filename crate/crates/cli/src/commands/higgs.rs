use e6check::higgs::random::selftest;

use super::{cite, UsageError};
use crate::report::{timed, CheckResult};

fn citation(name: &str) -> &'static str {
    match name {
        "commuting" => cite::COMMUTING,
        "duality_involution" => cite::DUALITY,
        "duality_preserves_compatibility" => cite::DUAL_COMPAT,
        _ => cite::INDUCED_C,
    }
}

/// The randomized property suite; the total time is booked on the first check.
pub fn higgs_selftest(seed: u64, trials: usize) -> Result<Vec<CheckResult>, UsageError> {
    let (outcomes, ms) = timed(|| selftest(seed, trials));
    let outcomes = outcomes.map_err(|e| UsageError(e.to_string()))?;
    Ok(outcomes
        .iter()
        .enumerate()
        .map(|(i, o)| {
            let c = CheckResult::compare(
                format!("higgs.{}", o.name),
                format!("{}/{}", o.trials, o.trials),
                format!("{}/{}", o.passed, o.trials),
                citation(o.name),
            )
            .with_runtime(if i == 0 { ms } else { 0 });
            match o.first_failure {
                Some(t) => c.with_detail(format!("first failure at trial {t}")),
                None => c,
            }
        })
        .collect())
}
