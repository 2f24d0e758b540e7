//! Probability spectra of internal rates of return (IRR) on single buy/sell
//! transaction pairs over price time series.
//!
//! The crate is organised around four transforms that all take a
//! [`PriceSeries`] as input:
//!
//! * [`irr`]: the market IRR transform. For a fixed continuous-compounding
//!   rate `rho`, every start tick is held until the price first reaches the
//!   exponential barrier `P_i * exp(rho * t)`. The fraction of starts that
//!   ever reach it is `p(rho)`, and `I(rho) = rho * p(rho)` is the expected
//!   rate density.
//! * [`strategy`]: Golden Cross / Dead Cross moving-average signals, the
//!   transactions they induce and the signed, rho-weighted strategy spectrum.
//! * [`returns`]: log-return histograms, histogram differences, FWHM regions
//!   and node counting.
//! * [`leadlag`]: tau-thresholded difference spectra between two aligned
//!   markets, plus synthetic GBM and lagged-copy series for validation.

pub mod error;
pub mod irr;
pub mod leadlag;
pub mod returns;
pub mod series;
pub mod strategy;

pub mod bins;
mod par;
mod table;

pub use error::{Error, Result};
pub use irr::{IrrSpectrum, PassageStats, RhoGrid};
pub use leadlag::{SynthKind, SynthSpec, TauSeriesReport};
pub use returns::{DiffProfile, Histogram};
pub use series::{AlignedPair, PriceSeries};
pub use strategy::{MaConfig, SignalEvent, SignalKind, StrategySpectrum, Transaction};
