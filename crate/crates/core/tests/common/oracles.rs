//! Independent reference implementations used as test oracles. Nothing here
//! calls into the optimized code paths it is compared against.

#![allow(dead_code)]

use std::collections::BTreeSet;

/// Plain scan over every admissible holding period.
pub fn naive_first_passage(prices: &[f64], start: usize, rho: f64, tau: usize) -> Option<usize> {
    let horizon = prices.len() - 1 - start;
    let mut t = tau.max(1);
    while t <= horizon {
        if prices[start + t] >= prices[start] * (rho * t as f64).exp() {
            return Some(t);
        }
        t += 1;
    }
    None
}

/// Successful starts among `0..=N-2`.
pub fn naive_successes(prices: &[f64], rho: f64, tau: usize) -> usize {
    (0..prices.len() - 1)
        .filter(|&i| naive_first_passage(prices, i, rho, tau).is_some())
        .count()
}

// Indexed on purpose: this is the reference the window sums are checked against.
#[allow(clippy::needless_range_loop)]
fn mean_ending_at(prices: &[f64], t: usize, window: usize) -> f64 {
    let mut acc = 0.0;
    for k in t + 1 - window..=t {
        acc += prices[k];
    }
    acc / window as f64
}

/// `true` for buy, `false` for sell, evaluated condition by condition at
/// every tick where both averages and their one-step differences exist.
pub fn brute_force_signals(prices: &[f64], short: usize, long: usize) -> Vec<(usize, bool)> {
    let mut out = Vec::new();
    for i in long..prices.len() {
        let theta = mean_ending_at(prices, i, short);
        let theta_prev = mean_ending_at(prices, i - 1, short);
        let lambda = mean_ending_at(prices, i, long);
        let lambda_prev = mean_ending_at(prices, i - 1, long);
        let delta = theta - lambda;
        let delta_prev = theta_prev - lambda_prev;
        let accel = (theta + lambda_prev) - (theta_prev + lambda);

        let cross = delta * delta_prev < 0.0;
        let buy = cross && lambda - lambda_prev > 0.0 && theta - theta_prev > 0.0 && accel > 0.0;
        let sell = cross && lambda - lambda_prev < 0.0 && theta - theta_prev < 0.0 && accel < 0.0;
        assert!(!(buy && sell), "buy and sell both fire at {i}");
        if buy {
            out.push((i, true));
        } else if sell {
            out.push((i, false));
        }
    }
    out
}

/// Every `(i_b, i_s)` reachable by the forward-scan protocol from some
/// start tick `i_0` in `0..N`.
pub fn reachable_round_trips(n: usize, signals: &[(usize, bool)]) -> BTreeSet<(usize, usize)> {
    let mut out = BTreeSet::new();
    for start in 0..n {
        let Some(&(i_b, _)) = signals.iter().find(|&&(i, buy)| buy && i > start) else {
            continue;
        };
        if let Some(&(i_s, _)) = signals.iter().find(|&&(i, buy)| !buy && i > i_b) {
            out.insert((i_b, i_s));
        }
    }
    out
}

/// Reference pairing: open on the first buy, close on the next sell.
pub fn sequential_pairs(signals: &[(usize, bool)]) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    let mut open = None;
    for &(i, buy) in signals {
        match (buy, open) {
            (true, None) => open = Some(i),
            (false, Some(b)) => {
                out.push((b, i));
                open = None;
            }
            _ => {}
        }
    }
    out
}
