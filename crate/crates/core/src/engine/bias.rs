use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use super::index::EventSet;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum BiasMode {
    #[default]
    None,
    Additive,
    Multiplicative,
}

/// Seeded perturbation applied to raw hit counts, standing in for the bias a
/// real search engine folds into its reported counts.
#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize, Deserialize)]
pub struct BiasConfig {
    pub mode: BiasMode,
    pub magnitude: f64,
    pub seed: u64,
}

impl BiasConfig {
    pub fn none() -> Self {
        Self::default()
    }

    pub fn new(mode: BiasMode, magnitude: f64, seed: u64) -> Self {
        BiasConfig {
            mode,
            magnitude: if magnitude.is_finite() {
                magnitude.max(0.0)
            } else {
                0.0
            },
            seed,
        }
    }

    fn rng_for(&self, event: &EventSet) -> ChaCha8Rng {
        // FNV-1a over the seed and the event contents.
        let mut h: u64 = 0xcbf2_9ce4_8422_2325;
        let mut feed = |v: u64| {
            for b in v.to_le_bytes() {
                h ^= u64::from(b);
                h = h.wrapping_mul(0x0100_0000_01b3);
            }
        };
        feed(self.seed);
        feed(event.cardinality() as u64);
        for d in event.handles() {
            feed(u64::from(d.0));
        }
        ChaCha8Rng::seed_from_u64(h)
    }
}

/// The hit count reported for `event`: its exact cardinality, optionally
/// perturbed. Equal `(bias, event)` inputs always yield the same value.
pub fn hit_count(event: &EventSet, bias: &BiasConfig) -> f64 {
    let exact = event.cardinality() as f64;
    match bias.mode {
        BiasMode::None => exact,
        BiasMode::Additive => {
            let u: f64 = bias.rng_for(event).gen_range(0.0..=1.0);
            exact + (bias.magnitude * u).round()
        }
        BiasMode::Multiplicative => {
            let u: f64 = bias.rng_for(event).gen_range(-1.0..=1.0);
            (exact * (1.0 + bias.magnitude * u)).max(0.0)
        }
    }
}
