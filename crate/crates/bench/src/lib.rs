//! Shared inputs for the benchmarks.

use pvs_core::sample::Sampler;
use pvs_core::VElement;

/// Fixed-seed orbit points so runs are comparable.
pub fn orbit_points(seed: u64, count: usize) -> Vec<VElement> {
    let mut s = Sampler::new(seed);
    (0..count).map(|_| s.orbit_point().1).collect()
}
