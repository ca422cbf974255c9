use rayon::prelude::*;

use super::{ExtremalRecord, Family, Method, Scorer, TieSet};
use crate::error::{Error, Result};
use crate::graph::{pair_count, Graph};

/// Largest order enumerated without an explicit override.
pub const EXHAUSTIVE_CAP: usize = 7;
/// Largest order enumerated at all.
pub const EXHAUSTIVE_HARD_CAP: usize = 8;

const SHARDS: u64 = 512;

/// Exact `f_s(n)` (top) or `f_{n-s}(n)` (bottom) by enumerating every labelled
/// graph on `n` vertices.
///
/// Each unordered pair `{G, G'}` is scored once: masks whose complement mask
/// is numerically smaller are skipped. The bitmask space is split into
/// contiguous shards scored in parallel. Among all graphs within the tie
/// tolerance of the maximum (complements included) the witness is the one with
/// the lexicographically smallest graph6 string.
pub fn exhaustive_f(n: usize, s: usize, family: Family, allow_large: bool) -> Result<ExtremalRecord> {
    family.validate(n, s)?;
    let cap = if allow_large { EXHAUSTIVE_HARD_CAP } else { EXHAUSTIVE_CAP };
    if n > cap {
        return Err(Error::SearchCapExceeded { order: n, cap, hard_cap: EXHAUSTIVE_HARD_CAP });
    }
    let m = pair_count(n);
    let full: u64 = if m == 0 { 0 } else { (1u64 << m) - 1 };
    let total = full + 1;
    let shards = SHARDS.min(total);
    let chunk = total.div_ceil(shards);

    let (ties, evaluations) = (0..shards)
        .into_par_iter()
        .map(|shard| -> Result<(TieSet<u64>, u64)> {
            let mut scorer = Scorer::new(n, s, family);
            let mut ties = TieSet::new();
            let mut count = 0u64;
            let end = ((shard + 1) * chunk).min(total);
            for mask in shard * chunk..end {
                if full ^ mask < mask {
                    continue;
                }
                scorer.load_mask(mask);
                ties.offer(scorer.score()?, mask);
                count += 1;
            }
            Ok((ties, count))
        })
        .try_reduce(
            || (TieSet::new(), 0),
            |(a, ca), (b, cb)| Ok((a.merge(b), ca + cb)),
        )?;

    let (value, masks) = ties.finish();
    let witness = masks
        .iter()
        .flat_map(|&mask| [mask, full ^ mask])
        .map(|mask| Graph::from_pair_mask(n, mask).map(|g| g.to_graph6()))
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .min()
        .ok_or_else(|| Error::Internal("enumeration produced no candidates".into()))?;

    Ok(ExtremalRecord {
        n,
        s,
        family,
        value,
        witness,
        method: Method::Exhaustive,
        exact: true,
        evaluations,
        seed: None,
    })
}
