use super::{require, StrOpsError};
use crate::codec::{NodeLetter, Traversal, TreeString};

/// Exclusive end of the subtree that starts at `pos` in a preorder letter
/// sequence.
pub fn subtree_end(letters: &[NodeLetter], pos: usize) -> usize {
    if !letters[pos].has_children() {
        return pos + 1;
    }
    // Open internal nodes below `pos`, as is_last_child flags. `pos` itself
    // is treated as last so that closing it ends the scan.
    let mut open = vec![true];
    for (j, letter) in letters.iter().enumerate().skip(pos + 1) {
        if letter.has_children() {
            open.push(letter.is_last_child());
        } else if letter.is_last_child() {
            while let Some(last) = open.pop() {
                if !last {
                    break;
                }
            }
            if open.is_empty() {
                return j + 1;
            }
        }
    }
    letters.len()
}

/// Positions in `haystack` whose subtree has the same shape as `needle`.
///
/// The letter at a match position only needs the same `has_children` flag as
/// the needle root; whether it is a last child depends on context the needle
/// does not carry. A 1-node needle matches every position.
pub fn find_subtrees(haystack: &TreeString, needle: &TreeString) -> Result<Vec<usize>, StrOpsError> {
    require(haystack, Traversal::Dfs)?;
    require(needle, Traversal::Dfs)?;
    let (hay, pat) = (haystack.letters(), needle.letters());
    if pat.len() == 1 {
        return Ok((0..hay.len()).collect());
    }
    if pat.len() > hay.len() {
        return Ok(Vec::new());
    }
    // Identical letters after the root decode identically, so the match ends
    // exactly where the haystack subtree does.
    let body = &pat[1..];
    Ok((0..=hay.len() - pat.len())
        .filter(|&i| hay[i].has_children() && &hay[i + 1..i + pat.len()] == body)
        .collect())
}

fn check_position(s: &TreeString, position: usize) -> Result<(), StrOpsError> {
    if position < s.len() {
        Ok(())
    } else {
        Err(StrOpsError::IndexOutOfRange { position, len: s.len() })
    }
}

/// The subtree rooted at `position` as a standalone tree string.
pub fn extract_subtree(s: &TreeString, position: usize) -> Result<TreeString, StrOpsError> {
    require(s, Traversal::Dfs)?;
    check_position(s, position)?;
    let letters = s.letters();
    let end = subtree_end(letters, position);
    let mut out = Vec::with_capacity(end - position);
    out.push(NodeLetter::LastBranch);
    out.extend_from_slice(&letters[position + 1..end]);
    Ok(TreeString::from_letters_unchecked(out, Traversal::Dfs))
}

/// Replaces the leaf at `position` with `scion`.
///
/// The scion's root takes over the leaf's `is_last_child` flag. Position 0
/// is accepted only when `host` is the 1-node tree.
pub fn graft(host: &TreeString, position: usize, scion: &TreeString) -> Result<TreeString, StrOpsError> {
    require(host, Traversal::Dfs)?;
    require(scion, Traversal::Dfs)?;
    check_position(host, position)?;
    if position == 0 {
        return if host.len() == 1 {
            Ok(scion.clone())
        } else {
            Err(StrOpsError::NotALeaf(0))
        };
    }
    let letters = host.letters();
    let leaf = letters[position];
    if leaf.has_children() {
        return Err(StrOpsError::NotALeaf(position));
    }
    let mut out = Vec::with_capacity(host.len() + scion.len() - 1);
    out.extend_from_slice(&letters[..position]);
    out.push(NodeLetter::from_flags(scion.len() > 1, leaf.is_last_child()));
    out.extend_from_slice(&scion.letters()[1..]);
    out.extend_from_slice(&letters[position + 1..]);
    TreeString::from_letters(out, Traversal::Dfs).map_err(|e| StrOpsError::InvalidResult(e.0))
}
