//! Golden Cross / Dead Cross trend strategy and its signed IRR spectrum.
//!
//! `theta` is the short moving average, `lambda` the long one and
//! `delta = theta - lambda`. A buy fires at tick `i` when `delta` changes
//! sign and both averages rise with the short one gaining on the long one;
//! a sell is the mirror image. Holding from buy to sell gives one
//! transaction with per-tick rate `ln(P_s / P_b) / (i_s - i_b)`.

mod io;
mod signals;
mod spectrum;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::par;
use crate::series::PriceSeries;

pub use io::{
    read_strategy_spectrum_csv, read_transactions_csv, write_strategy_spectrum_csv,
    write_transactions_csv,
};
pub use signals::{detect_signals, moving_average, MovingAverage, SignalEvent, SignalKind};
pub use spectrum::{default_bin_edges, strategy_spectrum, OutOfRange, StrategySpectrum};

/// Short and long moving-average windows, `1 <= short < long`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct MaConfig {
    pub short: usize,
    pub long: usize,
}

impl MaConfig {
    pub fn new(short: usize, long: usize) -> Result<Self> {
        if short == 0 || short >= long {
            return Err(Error::InvalidConfig(format!(
                "moving-average windows need 1 <= S < L, got S={short}, L={long}"
            )));
        }
        Ok(Self { short, long })
    }
}

impl Default for MaConfig {
    fn default() -> Self {
        Self { short: 5, long: 25 }
    }
}

/// One buy/sell round trip.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Transaction {
    pub i_b: usize,
    pub i_s: usize,
    pub duration: usize,
    /// Signed per-tick rate; negative for losses.
    pub rho: f64,
}

impl Transaction {
    pub fn between(series: &PriceSeries, i_b: usize, i_s: usize) -> Result<Self> {
        let prices = series.prices();
        if i_s >= prices.len() {
            return Err(Error::IndexOutOfRange {
                index: i_s,
                len: prices.len(),
            });
        }
        if i_s <= i_b {
            return Err(Error::ZeroDuration);
        }
        let duration = i_s - i_b;
        Ok(Self {
            i_b,
            i_s,
            duration,
            rho: transaction_irr(prices[i_b], prices[i_s], duration)?,
        })
    }
}

/// `ln(p_sell / p_buy) / duration`.
pub fn transaction_irr(p_buy: f64, p_sell: f64, duration: usize) -> Result<f64> {
    if duration == 0 {
        return Err(Error::ZeroDuration);
    }
    for price in [p_buy, p_sell] {
        if !(price.is_finite() && price > 0.0) {
            return Err(Error::InvalidPrice { line: 0, price });
        }
    }
    Ok((p_sell / p_buy).ln() / duration as f64)
}

/// Sequential pairing: the first buy opens a position, the next sell closes
/// it, and scanning resumes after that sell. Buys while a position is open
/// and sells while flat are ignored; a trailing open position is dropped.
pub fn extract_transactions_scan(
    series: &PriceSeries,
    signals: &[SignalEvent],
) -> Result<Vec<Transaction>> {
    let mut out = Vec::new();
    let mut open: Option<usize> = None;
    for ev in signals {
        match (ev.kind, open) {
            (SignalKind::Buy, None) => open = Some(ev.index),
            (SignalKind::Sell, Some(i_b)) if ev.index > i_b => {
                out.push(Transaction::between(series, i_b, ev.index)?);
                open = None;
            }
            _ => {}
        }
    }
    Ok(out)
}

/// For every tick, the first index strictly after it holding a signal of
/// each kind.
#[derive(Debug, Clone)]
pub struct NextSignal {
    buy: Vec<Option<usize>>,
    sell: Vec<Option<usize>>,
}

impl NextSignal {
    pub fn new(len: usize, signals: &[SignalEvent]) -> Self {
        let mut buy = vec![None; len];
        let mut sell = vec![None; len];
        let mut next_buy = None;
        let mut next_sell = None;
        let mut events = signals.iter().rev().peekable();
        for i in (0..len).rev() {
            buy[i] = next_buy;
            sell[i] = next_sell;
            while let Some(ev) = events.next_if(|ev| ev.index == i) {
                match ev.kind {
                    SignalKind::Buy => next_buy = Some(i),
                    SignalKind::Sell => next_sell = Some(i),
                }
            }
        }
        Self { buy, sell }
    }

    /// Buy strictly after `start`, then the first sell strictly after it.
    pub fn round_trip(&self, start: usize) -> Option<(usize, usize)> {
        let i_b = (*self.buy.get(start)?)?;
        let i_s = self.sell[i_b]?;
        Some((i_b, i_s))
    }
}

/// Monte Carlo start sampling: each sample draws `i_0` uniformly from
/// `0..N`, waits for the first buy after it and exits on the first sell
/// after the buy. Samples that run off the end contribute nothing.
///
/// Sample `k` uses its own ChaCha8 stream `(seed, k)`, so the output is
/// the same under any thread count.
pub fn monte_carlo_transactions(
    series: &PriceSeries,
    cfg: MaConfig,
    n_samples: usize,
    seed: u64,
) -> Result<Vec<Transaction>> {
    let signals = detect_signals(series, cfg)?;
    monte_carlo_from_signals(series, &signals, n_samples, seed)
}

pub fn monte_carlo_from_signals(
    series: &PriceSeries,
    signals: &[SignalEvent],
    n_samples: usize,
    seed: u64,
) -> Result<Vec<Transaction>> {
    if n_samples == 0 {
        return Err(Error::InvalidConfig("n_samples must be at least 1".into()));
    }
    let n = series.len();
    let next = NextSignal::new(n, signals);
    let trips = par::map_range(n_samples, |k| {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        rng.set_stream(k as u64);
        next.round_trip(rng.random_range(0..n))
    });
    trips
        .into_iter()
        .flatten()
        .map(|(b, s)| Transaction::between(series, b, s))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ev(index: usize, kind: SignalKind) -> SignalEvent {
        SignalEvent {
            index,
            kind,
            theta: 0.0,
            lambda: 0.0,
        }
    }

    fn ramp(n: usize) -> PriceSeries {
        PriceSeries::from_prices("r", (0..n).map(|k| 100.0 + k as f64).collect()).unwrap()
    }

    #[test]
    fn transaction_rates() {
        assert!(
            (transaction_irr(100.0, 110.0, 5).unwrap() - 0.019_062_035_960_864_986).abs() < 1e-15
        );
        assert!(
            (transaction_irr(100.0, 90.0, 10).unwrap() + 0.010_536_051_565_782_628).abs() < 1e-15
        );
        assert_eq!(transaction_irr(100.0, 100.0, 7).unwrap(), 0.0);
        assert!(matches!(
            transaction_irr(100.0, 100.0, 0),
            Err(Error::ZeroDuration)
        ));
    }

    #[test]
    fn scan_pairing() {
        use SignalKind::*;
        let s = ramp(20);
        let one = extract_transactions_scan(&s, &[ev(5, Buy), ev(9, Sell)]).unwrap();
        assert_eq!(
            (one.len(), one[0].i_b, one[0].i_s, one[0].duration),
            (1, 5, 9, 4)
        );
        let skip =
            extract_transactions_scan(&s, &[ev(5, Buy), ev(7, Buy), ev(9, Sell), ev(12, Sell)])
                .unwrap();
        assert_eq!(skip.len(), 1);
        assert_eq!((skip[0].i_b, skip[0].i_s), (5, 9));
        assert!(extract_transactions_scan(&s, &[ev(3, Sell), ev(5, Buy)])
            .unwrap()
            .is_empty());
        assert!(extract_transactions_scan(&s, &[]).unwrap().is_empty());
    }

    #[test]
    fn next_signal_lookup() {
        use SignalKind::*;
        let next = NextSignal::new(12, &[ev(2, Sell), ev(4, Buy), ev(8, Sell), ev(9, Buy)]);
        assert_eq!(next.round_trip(0), Some((4, 8)));
        assert_eq!(next.round_trip(3), Some((4, 8)));
        assert_eq!(next.round_trip(4), None); // next buy is 9, no sell after
        assert_eq!(next.round_trip(11), None);
    }

    #[test]
    fn monte_carlo_single_pair() {
        use SignalKind::*;
        let s = ramp(30);
        let sigs = [ev(10, Buy), ev(20, Sell)];
        let txs = monte_carlo_from_signals(&s, &sigs, 500, 42).unwrap();
        assert!(!txs.is_empty());
        assert!(txs.iter().all(|t| (t.i_b, t.i_s) == (10, 20)));
        // starts 0..=9 succeed: roughly a third of the draws
        assert!(txs.len() > 100 && txs.len() < 250, "{}", txs.len());
        assert_eq!(txs, monte_carlo_from_signals(&s, &sigs, 500, 42).unwrap());
        assert!(matches!(
            monte_carlo_from_signals(&s, &sigs, 0, 1),
            Err(Error::InvalidConfig(_))
        ));
    }

    #[test]
    fn config_validation() {
        assert!(MaConfig::new(0, 3).is_err());
        assert!(MaConfig::new(5, 5).is_err());
        assert!(MaConfig::new(5, 25).is_ok());
    }
}
