use super::{require, StrOpsError};
use crate::codec::TreeString;

/// Unit-cost Levenshtein distance between the letter sequences.
pub fn edit_distance(a: &TreeString, b: &TreeString) -> Result<usize, StrOpsError> {
    require(b, a.traversal())?;
    let (a, b) = (a.letters(), b.letters());
    let mut prev: Vec<usize> = (0..=b.len()).collect();
    let mut cur = vec![0; b.len() + 1];
    for (i, &ca) in a.iter().enumerate() {
        cur[0] = i + 1;
        for (j, &cb) in b.iter().enumerate() {
            let cost = usize::from(ca != cb);
            cur[j + 1] = (cur[j] + 1).min(prev[j + 1] + 1).min(prev[j] + cost);
        }
        std::mem::swap(&mut prev, &mut cur);
    }
    Ok(prev[b.len()])
}
