//! Reference implementations used as oracles. None of these call into the
//! code paths they check.
#![allow(dead_code)]

use strtree::{RootedOrderedTree, Traversal, TreeString};

/// Parenthesis text of every ordered tree with `n` nodes, built recursively
/// as root + ordered forest of `n - 1` nodes.
pub fn ordered_tree_parens(n: usize) -> Vec<String> {
    fn trees(n: usize, memo: &mut Vec<Option<Vec<String>>>) -> Vec<String> {
        forests(n - 1, memo).into_iter().map(|f| format!("({f})")).collect()
    }
    fn forests(m: usize, memo: &mut Vec<Option<Vec<String>>>) -> Vec<String> {
        if let Some(Some(done)) = memo.get(m) {
            return done.clone();
        }
        let mut out = Vec::new();
        if m == 0 {
            out.push(String::new());
        }
        for first in 1..=m {
            for t in trees(first, memo) {
                for rest in forests(m - first, memo) {
                    out.push(format!("{t}{rest}"));
                }
            }
        }
        if memo.len() <= m {
            memo.resize(m + 1, None);
        }
        memo[m] = Some(out.clone());
        out
    }
    if n == 0 {
        return Vec::new();
    }
    trees(n, &mut Vec::new())
}

pub fn ordered_trees(n: usize) -> Vec<RootedOrderedTree> {
    ordered_tree_parens(n)
        .iter()
        .map(|p| RootedOrderedTree::from_parentheses(p).unwrap())
        .collect()
}

pub fn catalan(n: u64) -> u64 {
    (0..n).fold(1u64, |c, k| c * 2 * (2 * k + 1) / (k + 2))
}

/// Every string over the alphabet of length `n`, as text.
pub fn all_strings(n: u32) -> impl Iterator<Item = String> {
    const ALPHA: [char; 4] = ['x', 'y', 'X', 'Y'];
    (0..4usize.pow(n)).map(move |code| (0..n).map(|i| ALPHA[(code >> (2 * i)) & 3]).collect())
}

/// Full-matrix Wagner-Fischer.
pub fn levenshtein(a: &str, b: &str) -> usize {
    let a: Vec<char> = a.chars().collect();
    let b: Vec<char> = b.chars().collect();
    let mut d = vec![vec![0usize; b.len() + 1]; a.len() + 1];
    for (i, row) in d.iter_mut().enumerate() {
        row[0] = i;
    }
    for (j, cell) in d[0].iter_mut().enumerate() {
        *cell = j;
    }
    for i in 1..=a.len() {
        for j in 1..=b.len() {
            let sub = d[i - 1][j - 1] + usize::from(a[i - 1] != b[j - 1]);
            d[i][j] = sub.min(d[i - 1][j] + 1).min(d[i][j - 1] + 1);
        }
    }
    d[a.len()][b.len()]
}

/// Parenthesis text of the subtree under `v`, walked recursively over the
/// explicit children lists.
pub fn subtree_parens(tree: &RootedOrderedTree, v: usize) -> String {
    let mut out = String::from("(");
    for c in tree.children(v) {
        out.push_str(&subtree_parens(tree, c));
    }
    out.push(')');
    out
}

/// Preorder positions whose subtree has the needle's shape, by decoding both
/// and comparing subtrees node by node. A 1-node needle matches everywhere.
pub fn brute_force_search(haystack: &TreeString, needle: &TreeString) -> Vec<usize> {
    let hay = haystack.decode();
    let pre = hay.preorder().nodes;
    if needle.len() == 1 {
        return (0..pre.len()).collect();
    }
    let target = needle.decode().to_parentheses();
    pre.iter()
        .enumerate()
        .filter(|&(_, &v)| subtree_parens(&hay, v) == target)
        .map(|(i, _)| i)
        .collect()
}

/// Canonical shape of an unordered tree by sorting recursively-built codes.
pub fn ahu_code(tree: &RootedOrderedTree, v: usize) -> String {
    let mut kids: Vec<String> = tree.children(v).map(|c| ahu_code(tree, c)).collect();
    kids.sort();
    format!("({})", kids.concat())
}

pub fn dfs(text: &str) -> TreeString {
    TreeString::parse(text, Traversal::Dfs).unwrap()
}

pub fn bfs(text: &str) -> TreeString {
    TreeString::parse(text, Traversal::Bfs).unwrap()
}

/// Small deterministic generator for test inputs (splitmix64).
pub struct Mix(pub u64);

impl Mix {
    pub fn next(&mut self) -> u64 {
        self.0 = self.0.wrapping_add(0x9e37_79b9_7f4a_7c15);
        let mut z = self.0;
        z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
        z ^ (z >> 31)
    }

    /// Uniform in `lo..=hi`.
    pub fn range(&mut self, lo: usize, hi: usize) -> usize {
        lo + (self.next() % (hi - lo + 1) as u64) as usize
    }
}

/// Parenthesis text of the tree with every sibling list randomly permuted.
pub fn shuffled_parens(tree: &RootedOrderedTree, v: usize, rng: &mut Mix) -> String {
    let mut kids: Vec<String> = tree.children(v).map(|c| shuffled_parens(tree, c, rng)).collect();
    for i in (1..kids.len()).rev() {
        let j = rng.range(0, i);
        kids.swap(i, j);
    }
    format!("({})", kids.concat())
}
