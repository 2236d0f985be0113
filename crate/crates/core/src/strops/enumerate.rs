use std::collections::HashSet;

use super::canon::canonical_code;
use super::StrOpsError;
use crate::codec::{encode, Traversal, TreeString};
use crate::tree::{all_ordered_trees, DyckWords};

/// Largest `n` accepted by [`enumerate_valid`].
pub const ENUMERATE_MAX: usize = 20;
/// Default limit for [`count_canonical`].
pub const COUNT_CANONICAL_MAX: usize = 16;

fn check_size(n: usize, max: usize) -> Result<(), StrOpsError> {
    match n {
        0 => Err(StrOpsError::ZeroSize),
        n if n > max => Err(StrOpsError::TooLarge { n, max }),
        _ => Ok(()),
    }
}

/// All valid tree strings of length `n`, sorted with `x < y < X < Y`.
pub fn enumerate_valid(n: usize, traversal: Traversal) -> Result<Vec<TreeString>, StrOpsError> {
    check_size(n, ENUMERATE_MAX)?;
    let mut out: Vec<TreeString> = all_ordered_trees(n).map(|t| encode(&t, traversal)).collect();
    out.sort_unstable_by(|a, b| a.letters().cmp(b.letters()));
    Ok(out)
}

/// Number of unlabelled rooted trees with `n` nodes, counted as the distinct
/// canonical forms over all ordered trees of that size.
pub fn count_canonical(n: usize) -> Result<u64, StrOpsError> {
    count_canonical_with_limit(n, COUNT_CANONICAL_MAX)
}

pub fn count_canonical_with_limit(n: usize, max: usize) -> Result<u64, StrOpsError> {
    check_size(n, max)?;
    let mut seen: HashSet<Vec<u8>> = HashSet::new();
    for word in DyckWords::new(n - 1) {
        let events = std::iter::once(true).chain(word).chain(std::iter::once(false));
        seen.insert(canonical_code(events));
    }
    Ok(seen.len() as u64)
}
