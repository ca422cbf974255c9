use serde::Serialize;

use super::{exhaustive_f, local_search_f, Family, LocalSearchConfig, Method, EXHAUSTIVE_CAP};
use crate::error::Result;

/// One row of the evidence table for the conjectured limit of `f / n`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct RatioRow {
    pub n: usize,
    pub value: f64,
    pub value_over_n: f64,
    pub target: f64,
    /// `target - value / n`.
    pub gap: f64,
    pub method: Method,
}

/// Best values for each `n` in `n_list`: exhaustive up to the default cap,
/// local search above it.
pub fn ratio_table(s: usize, family: Family, n_list: &[usize], config: &LocalSearchConfig) -> Result<Vec<RatioRow>> {
    let target = family.target_constant(s);
    n_list
        .iter()
        .map(|&n| {
            let record = if n <= EXHAUSTIVE_CAP {
                exhaustive_f(n, s, family, false)?
            } else {
                local_search_f(n, s, family, config)?
            };
            let value_over_n = record.value / n as f64;
            Ok(RatioRow {
                n,
                value: record.value,
                value_over_n,
                target,
                gap: target - value_over_n,
                method: record.method,
            })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn top_two_stays_below_target() {
        let rows = ratio_table(2, Family::Top, &[4, 5, 6], &LocalSearchConfig::default()).unwrap();
        assert_eq!(rows.len(), 3);
        for row in &rows {
            assert_eq!(row.method, Method::Exhaustive);
            assert!(row.value_over_n < 1.0 / 2f64.sqrt());
            assert!(row.gap > 0.0);
        }
    }

    #[test]
    fn switches_to_local_search() {
        let config = LocalSearchConfig::new(1, 5, 1).unwrap();
        let rows = ratio_table(1, Family::Bottom, &[9], &config).unwrap();
        assert_eq!(rows[0].method, Method::LocalSearch);
        assert!((rows[0].target - 1.0 / 2f64.sqrt()).abs() < 1e-15);
    }
}
