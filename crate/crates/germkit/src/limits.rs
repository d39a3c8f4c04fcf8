use crate::engine::buchberger::EngineLimits;
use std::time::{Duration, Instant};

/// Resource limits for a pipeline run. Exceeding any of them is an explicit
/// error (exit code 3 in the CLI), never a silently wrong answer.
#[derive(Debug, Clone)]
pub struct Limits {
    /// Cap on the degree of any S-pair lcm processed by the basis engine.
    pub pair_degree_cap: u64,
    /// Cap on the jet degree explored by the stabilization oracle.
    pub jet_cap: u32,
    /// Wall-clock budget for one germ pipeline; None means unlimited.
    pub wall_clock: Option<Duration>,
    started: Instant,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            pair_degree_cap: 40,
            jet_cap: 12,
            wall_clock: Some(Duration::from_secs(600)),
            started: Instant::now(),
        }
    }
}

impl Limits {
    pub fn unlimited() -> Self {
        Limits { wall_clock: None, ..Default::default() }
    }

    /// Restarts the wall clock; call at the start of each independent run.
    pub fn fresh(&self) -> Self {
        Limits { started: Instant::now(), ..self.clone() }
    }

    pub fn engine(&self) -> EngineLimits {
        EngineLimits {
            pair_degree_cap: self.pair_degree_cap,
            mora_step_cap: 2_000_000,
            deadline: self.wall_clock.map(|d| self.started + d),
        }
    }
}
