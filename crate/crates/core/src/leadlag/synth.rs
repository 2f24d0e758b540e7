//! Seeded synthetic series: geometric Brownian motion and lagged copies.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, StandardNormal};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::series::PriceSeries;

const START_PRICE: f64 = 100.0;
const GBM_STREAM: u64 = 0;
const NOISE_STREAM: u64 = 1;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SynthKind {
    Gbm,
    LaggedCopy,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SynthSpec {
    pub kind: SynthKind,
    pub n: usize,
    /// Per-tick log drift.
    pub mu: f64,
    /// Per-tick log volatility.
    pub sigma: f64,
    /// Shift in ticks, `LaggedCopy` only.
    pub lag: usize,
    /// Log-scale perturbation of the copy, `LaggedCopy` only.
    pub noise: f64,
    pub seed: u64,
}

impl SynthSpec {
    pub fn gbm(n: usize, mu: f64, sigma: f64, seed: u64) -> Self {
        Self {
            kind: SynthKind::Gbm,
            n,
            mu,
            sigma,
            lag: 0,
            noise: 0.0,
            seed,
        }
    }

    pub fn lagged(n: usize, mu: f64, sigma: f64, lag: usize, noise: f64, seed: u64) -> Self {
        Self {
            kind: SynthKind::LaggedCopy,
            lag,
            noise,
            ..Self::gbm(n, mu, sigma, seed)
        }
    }

    fn validate(&self) -> Result<()> {
        let bad = |msg: String| Err(Error::InvalidConfig(msg));
        if self.n < 2 {
            return bad(format!("n must be at least 2, got {}", self.n));
        }
        if !self.mu.is_finite() {
            return bad(format!("mu must be finite, got {}", self.mu));
        }
        if !(self.sigma.is_finite() && self.sigma >= 0.0) {
            return bad(format!("sigma must be finite and >= 0, got {}", self.sigma));
        }
        if !(self.noise.is_finite() && self.noise >= 0.0) {
            return bad(format!("noise must be finite and >= 0, got {}", self.noise));
        }
        if self.kind == SynthKind::LaggedCopy && self.lag >= self.n {
            return bad(format!("lag {} must be below n = {}", self.lag, self.n));
        }
        Ok(())
    }
}

fn rng(seed: u64, stream: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(stream);
    rng
}

/// `P_t = 100 * exp(mu*t + sigma*W_t)` with `W_t` a sum of `t` standard
/// normal draws, so each log step is `mu + sigma*z`. Timestamps are `0..n`.
pub fn synthesize_gbm(spec: &SynthSpec) -> Result<PriceSeries> {
    if spec.kind != SynthKind::Gbm {
        return Err(Error::InvalidConfig(
            "synthesize_gbm needs kind = gbm".into(),
        ));
    }
    spec.validate()?;
    let mut rng = rng(spec.seed, GBM_STREAM);
    let mut walk = 0.0;
    let mut prices = Vec::with_capacity(spec.n);
    for t in 0..spec.n {
        prices.push(START_PRICE * (spec.mu * t as f64 + spec.sigma * walk).exp());
        let z: f64 = StandardNormal.sample(&mut rng);
        walk += z;
    }
    PriceSeries::from_prices(format!("gbm-{}", spec.seed), prices)
}

/// Copy of `series` delayed by `lag` ticks (the first `lag` ticks repeat
/// the first price), each price scaled by `exp(noise * z_t)`. Keeps the
/// source timestamps.
pub fn lagged_copy(series: &PriceSeries, lag: usize, noise: f64, seed: u64) -> Result<PriceSeries> {
    if lag >= series.len() {
        return Err(Error::InvalidConfig(format!(
            "lag {lag} must be below series length {}",
            series.len()
        )));
    }
    if !(noise.is_finite() && noise >= 0.0) {
        return Err(Error::InvalidConfig(format!(
            "noise must be finite and >= 0, got {noise}"
        )));
    }
    let src = series.prices();
    let mut rng = rng(seed, NOISE_STREAM);
    let prices = (0..src.len())
        .map(|t| {
            let z: f64 = StandardNormal.sample(&mut rng);
            src[t.saturating_sub(lag)] * (noise * z).exp()
        })
        .collect();
    PriceSeries::from_parts(
        format!("{}-lag{lag}", series.id()),
        series.timestamps().to_vec(),
        prices,
    )
}

/// A GBM leader and, for `LaggedCopy`, its lagged follower. For `Gbm` the
/// follower is an independent GBM drawn with `seed + 1`.
pub fn synthesize_pair(spec: &SynthSpec) -> Result<(PriceSeries, PriceSeries)> {
    spec.validate()?;
    let leader = synthesize_gbm(&SynthSpec {
        kind: SynthKind::Gbm,
        ..*spec
    })?;
    let follower = match spec.kind {
        SynthKind::LaggedCopy => lagged_copy(&leader, spec.lag, spec.noise, spec.seed)?,
        SynthKind::Gbm => synthesize_gbm(&SynthSpec {
            seed: spec.seed.wrapping_add(1),
            ..*spec
        })?,
    };
    Ok((leader, follower))
}
