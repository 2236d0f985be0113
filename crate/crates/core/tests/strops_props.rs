mod common;

use std::collections::HashSet;

use common::{ahu_code, all_strings, bfs, brute_force_search, dfs, levenshtein, ordered_trees, shuffled_parens, Mix};
use proptest::prelude::*;
use strtree::strops::count_canonical_with_limit;
use strtree::{
    canonicalize, count_canonical, edit_distance, encode, encode_dfs, enumerate_valid, extract_subtree, find_subtrees,
    graft, rewrite, validate, RewriteMode, RewriteRule, RootedOrderedTree, Traversal, TreeString,
};

fn random_string(n: usize, seed: u64, t: Traversal) -> TreeString {
    encode(&RootedOrderedTree::random(n, seed).unwrap(), t)
}

#[test]
fn edit_distance_matches_full_matrix_oracle() {
    let mut rng = Mix(11);
    for _ in 0..300 {
        let a = random_string(rng.range(1, 40), rng.next(), Traversal::Bfs);
        let b = random_string(rng.range(1, 40), rng.next(), Traversal::Bfs);
        assert_eq!(
            edit_distance(&a, &b).unwrap(),
            levenshtein(&a.to_string(), &b.to_string())
        );
    }
}

proptest! {
    #[test]
    fn edit_distance_is_a_metric(
        na in 1usize..65, nb in 1usize..65, nc in 1usize..65,
        sa in any::<u64>(), sb in any::<u64>(), sc in any::<u64>(),
    ) {
        let a = random_string(na, sa, Traversal::Dfs);
        let b = random_string(nb, sb, Traversal::Dfs);
        let c = random_string(nc, sc, Traversal::Dfs);
        let ab = edit_distance(&a, &b).unwrap();
        prop_assert_eq!(edit_distance(&a, &a).unwrap(), 0);
        prop_assert_eq!(ab == 0, a == b);
        prop_assert_eq!(ab, edit_distance(&b, &a).unwrap());
        prop_assert!(ab <= edit_distance(&a, &c).unwrap() + edit_distance(&c, &b).unwrap());
    }

    #[test]
    fn identity_rewrite_is_identity(n in 1usize..200, seed in any::<u64>()) {
        let s = random_string(n, seed, Traversal::Bfs);
        for (pat, rep) in [("x", "x"), ("(y|Y)", "$1"), ("X", "X")] {
            let rule = RewriteRule::new(pat, rep).unwrap();
            prop_assert_eq!(&rewrite(&s, &rule, RewriteMode::Global).unwrap(), &s);
        }
    }

    #[test]
    fn rewrite_output_is_always_valid(n in 1usize..100, seed in any::<u64>(), pick in 0usize..5) {
        let rules = [("x*X", "X"), ("xX", "X"), ("X", ""), ("yX", "YX"), ("x", "xx")];
        let (pat, rep) = rules[pick];
        let rule = RewriteRule::new(pat, rep).unwrap();
        for t in [Traversal::Bfs, Traversal::Dfs] {
            let s = random_string(n, seed, t);
            if let Ok(out) = rewrite(&s, &rule, RewriteMode::Global) {
                prop_assert!(validate(&out.to_string(), t).is_valid());
                prop_assert_eq!(out.traversal(), t);
            }
        }
    }

    #[test]
    fn graft_then_extract_returns_scion(n in 2usize..120, m in 1usize..40, seed in any::<u64>(), pick in any::<u64>()) {
        let host = random_string(n, seed, Traversal::Dfs);
        let scion = random_string(m, seed ^ 0xabcdef, Traversal::Dfs);
        let leaves: Vec<usize> = (1..n).filter(|&i| !host.letters()[i].has_children()).collect();
        let pos = leaves[(pick % leaves.len() as u64) as usize];
        let grafted = graft(&host, pos, &scion).unwrap();
        prop_assert_eq!(grafted.len(), n + m - 1);
        prop_assert_eq!(extract_subtree(&grafted, pos).unwrap(), scion);
    }

    #[test]
    fn extracted_subtrees_decode(n in 1usize..150, seed in any::<u64>()) {
        let s = random_string(n, seed, Traversal::Dfs);
        let tree = s.decode();
        let pre = tree.preorder().nodes;
        let sizes = tree.subtree_sizes();
        for (i, &v) in pre.iter().enumerate() {
            let sub = extract_subtree(&s, i).unwrap();
            prop_assert_eq!(sub.len(), sizes[v]);
            prop_assert_eq!(sub.decode().to_parentheses(), common::subtree_parens(&tree, v));
        }
    }
}

#[test]
fn find_subtrees_exhaustive_small() {
    let mut needles: Vec<TreeString> = Vec::new();
    for n in 1..=4 {
        needles.extend(ordered_trees(n).iter().map(encode_dfs));
    }
    for n in 1..=8 {
        for tree in ordered_trees(n) {
            let hay = encode_dfs(&tree);
            for needle in &needles {
                assert_eq!(
                    find_subtrees(&hay, needle).unwrap(),
                    brute_force_search(&hay, needle),
                    "{hay} / {needle}"
                );
            }
        }
    }
}

#[test]
fn canonicalize_is_invariant_under_sibling_shuffles() {
    let mut rng = Mix(5);
    for _ in 0..300 {
        let n = rng.range(1, 64);
        let tree = RootedOrderedTree::random(n, rng.next()).unwrap();
        let canon = canonicalize(&encode_dfs(&tree));
        for _ in 0..3 {
            let shuffled = RootedOrderedTree::from_parentheses(&shuffled_parens(&tree, 0, &mut rng)).unwrap();
            assert_eq!(canonicalize(&encode(&shuffled, Traversal::Bfs)), canon);
        }
        assert_eq!(canonicalize(&canon), canon);
        assert_eq!(canon.decode().to_parentheses(), ahu_code(&tree, 0));
    }
}

#[test]
fn canonicalize_idempotent_on_random_trees() {
    let mut rng = Mix(99);
    for _ in 0..1000 {
        let s = random_string(rng.range(1, 64), rng.next(), Traversal::Bfs);
        let once = canonicalize(&s);
        assert_eq!(canonicalize(&once), once);
    }
}

#[test]
fn canonical_image_sizes_match_count() {
    for n in 1..=9 {
        let trees = ordered_trees(n);
        let images: HashSet<String> = trees.iter().map(|t| canonicalize(&encode_dfs(t)).to_string()).collect();
        let oracle: HashSet<String> = trees.iter().map(|t| ahu_code(t, 0)).collect();
        assert_eq!(images.len(), oracle.len());
        assert_eq!(count_canonical(n).unwrap(), images.len() as u64, "n = {n}");
    }
    assert_eq!(count_canonical_with_limit(10, 10).unwrap(), 719);
}

#[test]
fn enumerate_matches_brute_force() {
    for n in 1..=9u32 {
        for t in [Traversal::Bfs, Traversal::Dfs] {
            let listed: Vec<String> = enumerate_valid(n as usize, t)
                .unwrap()
                .iter()
                .map(|s| s.to_string())
                .collect();
            let rank = |c: char| "xyXY".find(c).unwrap();
            let mut brute: Vec<String> = all_strings(n).filter(|s| validate(s, t).is_valid()).collect();
            brute.sort_by(|a, b| a.chars().map(rank).cmp(b.chars().map(rank)));
            assert_eq!(listed, brute, "n = {n}");
        }
    }
}

#[test]
fn example_examples() {
    let rule = RewriteRule::new("x*X", "X").unwrap();
    assert_eq!(
        rewrite(&bfs("YxxX"), &rule, RewriteMode::Global).unwrap().to_string(),
        "YX"
    );
    let example = dfs("YxyXYyYxyxXYxxXX");
    assert_eq!(find_subtrees(&example, &dfs("YxX")).unwrap(), vec![8]);
    assert_eq!(extract_subtree(&example, 8).unwrap().to_string(), "YxX");
}
