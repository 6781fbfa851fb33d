//! The generating tree over all Dyck words of one size.
//!
//! The root is the maximal pyramid. A node's children arise by removing the
//! word's first and last step and then inserting a peak (`10`) at the points
//! of the remaining trailing descent; the root additionally skips the
//! topmost point, which would rebuild the root itself. Descent points are
//! numbered from the right, so inserting at point `t` leaves `t - 1`
//! down-steps after the new peak and the child's last descent has length
//! `t`. Children are ordered firstborn first, i.e. by decreasing length of
//! their last descent.
//!
//! This reference construction is intentionally direct (it copies words and
//! scans them); the sequential generator in [`crate::engine`] produces the
//! same preorder listing with constant amortized work per word and is
//! checked against this module.

use crate::error::{Error, Result};
use crate::label::label_of;
use crate::word::DyckWord;

/// Default guard for materialized trees and tree walks.
pub const DEFAULT_TREE_CAP: usize = 18;

/// Expands one word into its ordered children (firstborn first).
///
/// An inactive non-root word has no children. The root of size `n` has
/// `n - 1` children; any other active word with last descent length `k` has
/// exactly `k`. Passing `is_root` inconsistently with the word is an error.
pub fn children(w: &DyckWord, is_root: bool) -> Result<Vec<DyckWord>> {
    let n = w.semilength();
    if n == 0 {
        return Ok(Vec::new());
    }
    let actually_root = *w == DyckWord::max_path(n)?;
    if is_root && !actually_root {
        return Err(Error::NotRoot);
    }
    if !is_root && actually_root {
        return Err(Error::IsRoot);
    }
    if !is_root && !w.is_active() {
        return Ok(Vec::new());
    }

    let stripped = &w.bits()[1..w.len() - 1];
    let descent = stripped.iter().rev().take_while(|&&b| b == 0).count();
    let longest_child_descent = if is_root { descent } else { descent + 1 };

    let mut out = Vec::with_capacity(longest_child_descent);
    for s in (1..=longest_child_descent).rev() {
        let cut = stripped.len() - (s - 1);
        let mut bits = Vec::with_capacity(w.len());
        bits.extend_from_slice(&stripped[..cut]);
        bits.push(1);
        bits.push(0);
        bits.extend_from_slice(&stripped[cut..]);
        out.push(DyckWord::from_valid_bits(bits));
    }
    Ok(out)
}

/// Maps a non-root word back to its parent: drop the rightmost peak, then
/// prepend an up-step and append a down-step.
pub fn parent(w: &DyckWord) -> Result<DyckWord> {
    let n = w.semilength();
    if n == 0 || *w == DyckWord::max_path(n)? {
        return Err(Error::RootHasNoParent);
    }
    let bits = w.bits();
    let peak = (0..bits.len() - 1)
        .rev()
        .find(|&j| bits[j] == 1 && bits[j + 1] == 0)
        .expect("a nonempty word has a peak");
    let mut out = Vec::with_capacity(bits.len());
    out.push(1);
    out.extend_from_slice(&bits[..peak]);
    out.extend_from_slice(&bits[peak + 2..]);
    out.push(0);
    Ok(DyckWord::from_valid_bits(out))
}

/// One node of a materialized tree.
#[derive(Debug, Clone)]
pub struct TreeNode {
    pub word: DyckWord,
    /// Depth below the root (root is level 0).
    pub level: usize,
    /// Child node ids, firstborn first.
    pub children: Vec<usize>,
}

/// A materialized generating tree. Node ids are preorder indices, so
/// iterating `nodes` visits the tree in generation order.
#[derive(Debug, Clone)]
pub struct PathTree {
    n: usize,
    nodes: Vec<TreeNode>,
}

impl PathTree {
    /// Builds the full tree for semilength `n` (guarded by
    /// [`DEFAULT_TREE_CAP`]).
    pub fn build(n: usize) -> Result<PathTree> {
        PathTree::build_with_cap(n, DEFAULT_TREE_CAP)
    }

    pub fn build_with_cap(n: usize, cap: usize) -> Result<PathTree> {
        if n == 0 {
            return Err(Error::ZeroSemilength);
        }
        if n > cap {
            return Err(Error::CapExceeded { n, cap });
        }
        let mut tree = PathTree {
            n,
            nodes: Vec::new(),
        };
        let root = DyckWord::max_path(n)?;
        tree.grow(root, 0, true)?;
        Ok(tree)
    }

    fn grow(&mut self, word: DyckWord, level: usize, is_root: bool) -> Result<usize> {
        let id = self.nodes.len();
        let kids = children(&word, is_root)?;
        self.nodes.push(TreeNode {
            word,
            level,
            children: Vec::with_capacity(kids.len()),
        });
        for child in kids {
            let child_id = self.grow(child, level + 1, false)?;
            self.nodes[id].children.push(child_id);
        }
        Ok(id)
    }

    pub fn semilength(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn root(&self) -> &TreeNode {
        &self.nodes[0]
    }

    pub fn node(&self, id: usize) -> &TreeNode {
        &self.nodes[id]
    }

    pub fn nodes(&self) -> &[TreeNode] {
        &self.nodes
    }

    /// Depth-first preorder listing, children firstborn first. Because node
    /// ids are preorder indices this is simply the node words in id order.
    pub fn preorder(&self) -> impl Iterator<Item = &DyckWord> {
        self.nodes.iter().map(|node| &node.word)
    }

    /// Node count per level, root level first.
    pub fn level_counts(&self) -> Vec<u64> {
        let mut counts = Vec::new();
        for node in &self.nodes {
            if node.level == counts.len() {
                counts.push(0);
            }
            counts[node.level] += 1;
        }
        counts
    }

    /// DOT rendering: node ids are preorder indices, labels carry the word
    /// and its `(k,i)` label, and edges appear per parent in sibling order.
    pub fn to_dot(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!("digraph paths_n{} {{\n", self.n));
        for (count, level) in self.level_counts().iter().zip(0..) {
            out.push_str(&format!("  // level {level}: {count}\n"));
        }
        out.push_str("  node [shape=box, fontname=\"monospace\"];\n");
        for (id, node) in self.nodes.iter().enumerate() {
            out.push_str(&format!(
                "  n{id} [label=\"{}\\n{}\"];\n",
                node.word,
                label_of(&node.word)
            ));
        }
        for (id, node) in self.nodes.iter().enumerate() {
            for &child in &node.children {
                out.push_str(&format!("  n{id} -> n{child};\n"));
            }
        }
        out.push_str("}\n");
        out
    }
}

/// Visits the whole tree for semilength `n` in preorder without
/// materializing it. The callback receives each word and its level.
pub fn walk_preorder<F>(n: usize, cap: usize, f: &mut F) -> Result<()>
where
    F: FnMut(&DyckWord, usize),
{
    if n == 0 {
        return Err(Error::ZeroSemilength);
    }
    if n > cap {
        return Err(Error::CapExceeded { n, cap });
    }
    fn go<F: FnMut(&DyckWord, usize)>(
        w: &DyckWord,
        level: usize,
        is_root: bool,
        f: &mut F,
    ) -> Result<()> {
        f(w, level);
        for child in children(w, is_root)? {
            go(&child, level + 1, false, f)?;
        }
        Ok(())
    }
    go(&DyckWord::max_path(n)?, 0, true, f)
}

/// Per-level node counts computed by a streaming walk.
pub fn level_counts(n: usize, cap: usize) -> Result<Vec<u64>> {
    let mut counts: Vec<u64> = Vec::new();
    walk_preorder(n, cap, &mut |_, level| {
        if level == counts.len() {
            counts.push(0);
        }
        counts[level] += 1;
    })?;
    Ok(counts)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle;

    fn w(s: &str) -> DyckWord {
        s.parse().unwrap()
    }

    fn strs(words: &[DyckWord]) -> Vec<String> {
        words.iter().map(|x| x.to_string()).collect()
    }

    #[test]
    fn root_expansion_skips_the_top_point() {
        let kids = children(&w("111000"), true).unwrap();
        assert_eq!(strs(&kids), ["110100", "110010"]);

        let kids = children(&w("11110000"), true).unwrap();
        assert_eq!(strs(&kids), ["11101000", "11100100", "11100010"]);
        // Last son: the size-3 pyramid followed by a unit pyramid.
        assert_eq!(kids.last().unwrap().to_string(), "11100010");
    }

    #[test]
    fn non_root_expansion_uses_every_descent_point() {
        let kids = children(&w("110100"), false).unwrap();
        assert_eq!(strs(&kids), ["101100", "101010"]);
    }

    #[test]
    fn inactive_words_are_leaves() {
        assert!(children(&w("1010"), false).unwrap().is_empty());
        assert!(children(&w("10"), true).unwrap().is_empty());
    }

    #[test]
    fn root_flag_must_match_the_word() {
        assert_eq!(children(&w("110100"), true), Err(Error::NotRoot));
        assert_eq!(children(&w("111000"), false), Err(Error::IsRoot));
    }

    #[test]
    fn parent_strips_the_rightmost_peak() {
        assert_eq!(parent(&w("11101000")).unwrap(), w("11110000"));
        assert_eq!(parent(&w("110010")).unwrap(), w("111000"));
        assert_eq!(parent(&w("111000")), Err(Error::RootHasNoParent));
    }

    #[test]
    fn tree_sizes_are_catalan() {
        assert_eq!(PathTree::build(1).unwrap().len(), 1);
        assert_eq!(PathTree::build(4).unwrap().len(), 14);
        assert_eq!(PathTree::build(5).unwrap().len(), 42);
    }

    #[test]
    fn build_honors_the_cap() {
        assert_eq!(
            PathTree::build_with_cap(7, 6).unwrap_err(),
            Error::CapExceeded { n: 7, cap: 6 }
        );
        assert_eq!(PathTree::build(0).unwrap_err(), Error::ZeroSemilength);
    }

    #[test]
    fn preorder_listings() {
        let t = PathTree::build(2).unwrap();
        assert_eq!(strs(&t.preorder().cloned().collect::<Vec<_>>()), ["1100", "1010"]);

        let t = PathTree::build(3).unwrap();
        assert_eq!(
            strs(&t.preorder().cloned().collect::<Vec<_>>()),
            ["111000", "110100", "101100", "101010", "110010"]
        );

        let t = PathTree::build(1).unwrap();
        assert_eq!(strs(&t.preorder().cloned().collect::<Vec<_>>()), ["10"]);
    }

    #[test]
    fn child_counts_follow_the_last_descent() {
        for n in 2..=8 {
            let t = PathTree::build(n).unwrap();
            for (id, node) in t.nodes().iter().enumerate() {
                let expected = if id == 0 {
                    n - 1
                } else if node.word.is_active() {
                    node.word.metrics().last_descent_len
                } else {
                    0
                };
                assert_eq!(node.children.len(), expected, "node {id} at n={n}");
            }
        }
    }

    #[test]
    fn every_edge_inverts_through_parent() {
        for n in 2..=10 {
            let t = PathTree::build(n).unwrap();
            for node in t.nodes() {
                for &c in &node.children {
                    assert_eq!(parent(&t.node(c).word).unwrap(), node.word);
                }
            }
        }
    }

    #[test]
    fn tree_words_match_the_oracle() {
        for n in 1..=12 {
            let set = oracle::enumerate(n).unwrap();
            let mut words = Vec::with_capacity(set.len());
            walk_preorder(n, DEFAULT_TREE_CAP, &mut |word, _| words.push(word.clone())).unwrap();
            assert!(oracle::compare(&set, &words).is_empty(), "n={n}");
        }
    }

    #[test]
    fn streaming_walk_matches_materialized_tree() {
        for n in 1..=8 {
            let t = PathTree::build(n).unwrap();
            let mut seen = Vec::new();
            walk_preorder(n, DEFAULT_TREE_CAP, &mut |word, level| {
                seen.push((word.clone(), level));
            })
            .unwrap();
            let expected: Vec<(DyckWord, usize)> = t
                .nodes()
                .iter()
                .map(|node| (node.word.clone(), node.level))
                .collect();
            assert_eq!(seen, expected);
            assert_eq!(level_counts(n, DEFAULT_TREE_CAP).unwrap(), t.level_counts());
        }
    }

    #[test]
    fn dot_output_is_deterministic() {
        let dot = PathTree::build(3).unwrap().to_dot();
        let expected = "digraph paths_n3 {\n\
                        \x20 // level 0: 1\n\
                        \x20 // level 1: 2\n\
                        \x20 // level 2: 2\n\
                        \x20 node [shape=box, fontname=\"monospace\"];\n\
                        \x20 n0 [label=\"111000\\n(2,2)\"];\n\
                        \x20 n1 [label=\"110100\\n(2,1)\"];\n\
                        \x20 n2 [label=\"101100\\n(2,0)\"];\n\
                        \x20 n3 [label=\"101010\\n(1,0)\"];\n\
                        \x20 n4 [label=\"110010\\n(1,0)\"];\n\
                        \x20 n0 -> n1;\n\
                        \x20 n0 -> n4;\n\
                        \x20 n1 -> n2;\n\
                        \x20 n1 -> n3;\n\
                        }\n";
        assert_eq!(dot, expected);
    }
}
