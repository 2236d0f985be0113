//! Canonical form for rooted trees up to sibling reordering.
//!
//! Every node gets the shape code `"(" + sorted child codes + ")"`, children
//! sorted by byte order; the root's code names the isomorphism class. The
//! canonical tree string is the preorder encoding of the tree whose children
//! appear in that sorted order.

use crate::codec::{encode_dfs, TreeString};
use crate::tree::RootedOrderedTree;

/// Shape code from a parenthesis event stream (`true` = open), one
/// open/close pair per node.
///
/// Memory is proportional to the sum of subtree sizes along the open path,
/// which is at most `n * depth`.
pub fn canonical_code<I>(events: I) -> Vec<u8>
where
    I: IntoIterator<Item = bool>,
{
    let mut stack: Vec<Vec<Vec<u8>>> = Vec::new();
    for open in events {
        if open {
            stack.push(Vec::new());
            continue;
        }
        let mut children = stack.pop().expect("balanced events");
        children.sort_unstable();
        let len = 2 + children.iter().map(Vec::len).sum::<usize>();
        let mut code = Vec::with_capacity(len);
        code.push(b'(');
        for child in &children {
            code.extend_from_slice(child);
        }
        code.push(b')');
        match stack.last_mut() {
            Some(parent) => parent.push(code),
            None => return code,
        }
    }
    panic!("unbalanced parenthesis events");
}

fn tree_events(tree: &RootedOrderedTree) -> impl Iterator<Item = bool> {
    tree.to_parentheses().into_bytes().into_iter().map(|b| b == b'(')
}

/// Canonical preorder string: equal for two inputs exactly when their trees
/// are isomorphic as unordered rooted trees.
pub fn canonicalize(s: &TreeString) -> TreeString {
    let code = canonical_code(tree_events(&s.decode()));
    let text = String::from_utf8(code).expect("ASCII parentheses");
    let tree = RootedOrderedTree::from_parentheses(&text).expect("well-formed shape code");
    encode_dfs(&tree)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::codec::Traversal;

    fn parse(s: &str, t: Traversal) -> TreeString {
        TreeString::parse(s, t).unwrap()
    }

    #[test]
    fn examples() {
        assert_eq!(canonicalize(&parse("Y", Traversal::Bfs)).to_string(), "Y");
        assert_eq!(canonicalize(&parse("YxYX", Traversal::Bfs)).to_string(), "YyXX");
        assert_eq!(canonicalize(&parse("YyXX", Traversal::Dfs)).to_string(), "YyXX");
        let canon = canonicalize(&parse("YxYX", Traversal::Dfs));
        assert_eq!(canon.traversal(), Traversal::Dfs);
        assert_eq!(canon.to_string(), "YyXX");
    }

    #[test]
    fn shape_codes() {
        let events = |s: &str| s.bytes().map(|b| b == b'(').collect::<Vec<_>>();
        assert_eq!(canonical_code(events("(()(()))")), b"((())())");
        assert_eq!(canonical_code(events("((())())")), b"((())())");
        assert_eq!(canonical_code(events("()")), b"()");
    }

    #[test]
    fn sibling_order_is_irrelevant() {
        let dfs_of = |parens: &str| encode_dfs(&RootedOrderedTree::from_parentheses(parens).unwrap());
        let a = dfs_of("(()(())(((()(()())(()()())))()))");
        // Same tree with the children of the root and of the deepest
        // internal node reversed.
        let b = dfs_of("((()(((()()())(()())())))()(()))");
        assert_eq!(canonicalize(&a), canonicalize(&b));
        // One leaf fewer under the three-leaf node.
        let c = dfs_of("((()(((()())(()())())))()(()))");
        assert_ne!(canonicalize(&a), canonicalize(&c));
    }
}
