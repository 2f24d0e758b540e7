use super::PriceSeries;
use crate::error::{Error, Result};

/// Two series restricted to their common timestamps.
#[derive(Debug, Clone, PartialEq)]
pub struct AlignedPair {
    pub a: PriceSeries,
    pub b: PriceSeries,
    pub dropped_a: usize,
    pub dropped_b: usize,
}

impl AlignedPair {
    pub fn len(&self) -> usize {
        self.a.len()
    }

    pub fn is_empty(&self) -> bool {
        self.a.is_empty()
    }
}

/// Inner join on exact timestamp equality, preserving order.
pub fn align_series(a: &PriceSeries, b: &PriceSeries) -> Result<AlignedPair> {
    let (ta, tb) = (a.timestamps(), b.timestamps());
    let (mut i, mut j) = (0, 0);
    let mut ts = Vec::new();
    let mut pa = Vec::new();
    let mut pb = Vec::new();
    while i < ta.len() && j < tb.len() {
        match ta[i].cmp(&tb[j]) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => {
                ts.push(ta[i]);
                pa.push(a.prices()[i]);
                pb.push(b.prices()[j]);
                i += 1;
                j += 1;
            }
        }
    }
    if ts.len() < 2 {
        return Err(Error::EmptyIntersection { common: ts.len() });
    }
    let n = ts.len();
    Ok(AlignedPair {
        a: PriceSeries::from_parts(a.id(), ts.clone(), pa)?,
        b: PriceSeries::from_parts(b.id(), ts, pb)?,
        dropped_a: a.len() - n,
        dropped_b: b.len() - n,
    })
}
