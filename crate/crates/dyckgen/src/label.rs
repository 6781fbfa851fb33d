//! The `(k,i)` label algebra of the generating tree.
//!
//! Every word carries a label `(k, i)`: `k` is the length of its last
//! descent, which for an active word is also its number of children, and
//! `i` is the height of its lowest valley. The root has no valleys and is
//! labeled `(n-1, n-1)` by convention. A node's children are determined by
//! the production
//!
//! ```text
//! (k,i) -> (1,0) (2,1) ... (i,i-1) (i+1,i-1) ... (k,i-1)
//! ```
//!
//! listed by increasing last-descent length; labels with `i = 0` are
//! leaves. The sequential generator consumes siblings in the opposite
//! (firstborn-first) order, so both orders are exposed.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::tree::{self, PathTree};
use crate::word::DyckWord;

/// A succession-rule label: `k` children / last-descent steps, lowest
/// valley at height `i`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Label {
    pub k: usize,
    pub i: usize,
}

impl Label {
    pub fn new(k: usize, i: usize) -> Label {
        Label { k, i }
    }

    /// The root convention for semilength `n`.
    pub fn root(n: usize) -> Label {
        Label {
            k: n.saturating_sub(1),
            i: n.saturating_sub(1),
        }
    }

    /// Labels with `i = 0` never expand further.
    pub fn is_leaf(&self) -> bool {
        self.i == 0
    }
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.k, self.i)
    }
}

impl FromStr for Label {
    type Err = Error;

    fn from_str(s: &str) -> Result<Label> {
        let bad = || Error::BadSnapshot(format!("malformed label {s:?}"));
        let inner = s
            .strip_prefix('(')
            .and_then(|rest| rest.strip_suffix(')'))
            .ok_or_else(bad)?;
        let (k, i) = inner.split_once(',').ok_or_else(bad)?;
        Ok(Label {
            k: k.trim().parse().map_err(|_| bad())?,
            i: i.trim().parse().map_err(|_| bad())?,
        })
    }
}

/// The label of a word: `(n-1, n-1)` for the maximal pyramid, otherwise
/// `(last descent length, lowest valley height)`. For `n = 1` the root
/// formula degenerates to `(0, 0)`.
pub fn label_of(w: &DyckWord) -> Label {
    let n = w.semilength();
    let m = w.metrics();
    match m.lowest_valley {
        // Only the maximal pyramid has no valley.
        None => Label::root(n),
        Some(i) => Label {
            k: m.last_descent_len,
            i,
        },
    }
}

/// Expands a label by the production, in the rule's increasing-descent
/// order. Labels with `i = 0` produce nothing.
pub fn produce(l: Label) -> Vec<Label> {
    if l.i == 0 {
        return Vec::new();
    }
    (1..=l.k)
        .map(|s| Label {
            k: s,
            i: s.min(l.i) - 1,
        })
        .collect()
}

/// The production in the order the sequential generator visits siblings:
/// firstborn (longest last descent) first.
pub fn produce_firstborn_first(l: Label) -> Vec<Label> {
    let mut out = produce(l);
    out.reverse();
    out
}

/// One node of a materialized label tree.
#[derive(Debug, Clone)]
pub struct LabelNode {
    pub label: Label,
    pub level: usize,
    /// Child ids in production (increasing-descent) order.
    pub children: Vec<usize>,
}

/// The abstract tree generated by the production from the root label.
/// Isomorphic to the word tree of the same size; node ids here follow a
/// preorder walk that expands children in production order.
#[derive(Debug, Clone)]
pub struct LabelTree {
    n: usize,
    nodes: Vec<LabelNode>,
}

impl LabelTree {
    pub fn build(n: usize) -> Result<LabelTree> {
        LabelTree::build_with_cap(n, tree::DEFAULT_TREE_CAP)
    }

    pub fn build_with_cap(n: usize, cap: usize) -> Result<LabelTree> {
        if n == 0 {
            return Err(Error::ZeroSemilength);
        }
        if n > cap {
            return Err(Error::CapExceeded { n, cap });
        }
        let mut t = LabelTree {
            n,
            nodes: Vec::new(),
        };
        t.grow(Label::root(n), 0);
        Ok(t)
    }

    fn grow(&mut self, label: Label, level: usize) -> usize {
        let id = self.nodes.len();
        self.nodes.push(LabelNode {
            label,
            level,
            children: Vec::new(),
        });
        for child in produce(label) {
            let child_id = self.grow(child, level + 1);
            self.nodes[id].children.push(child_id);
        }
        id
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

    pub fn root(&self) -> &LabelNode {
        &self.nodes[0]
    }

    pub fn node(&self, id: usize) -> &LabelNode {
        &self.nodes[id]
    }

    pub fn nodes(&self) -> &[LabelNode] {
        &self.nodes
    }

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

    /// Indented dump in firstborn-first order, matching the generator's
    /// visiting order, followed by per-level counts.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        self.write_text(0, 0, &mut out);
        for (count, level) in self.level_counts().iter().zip(0..) {
            out.push_str(&format!("level {level}: {count}\n"));
        }
        out.push_str(&format!("total: {} nodes\n", self.len()));
        out
    }

    fn write_text(&self, id: usize, depth: usize, out: &mut String) {
        let node = &self.nodes[id];
        out.push_str(&"  ".repeat(depth));
        out.push_str(&node.label.to_string());
        out.push('\n');
        for &child in node.children.iter().rev() {
            self.write_text(child, depth + 1, out);
        }
    }

    /// DOT rendering with ids assigned in firstborn-first preorder, so they
    /// coincide with the word tree's DOT ids.
    pub fn to_dot(&self) -> String {
        let mut ids = vec![0usize; self.nodes.len()];
        let mut next = 0usize;
        self.assign_dot_ids(0, &mut ids, &mut next);
        let mut nodes_out: Vec<String> = vec![String::new(); self.nodes.len()];
        let mut edges = Vec::new();
        for (id, node) in self.nodes.iter().enumerate() {
            nodes_out[ids[id]] = format!("  n{} [label=\"{}\"];\n", ids[id], node.label);
            for &child in node.children.iter().rev() {
                edges.push((ids[id], ids[child]));
            }
        }
        edges.sort_unstable();
        let mut out = String::new();
        out.push_str(&format!("digraph labels_n{} {{\n", self.n));
        out.push_str("  node [shape=oval];\n");
        for line in nodes_out {
            out.push_str(&line);
        }
        for (from, to) in edges {
            out.push_str(&format!("  n{from} -> n{to};\n"));
        }
        out.push_str("}\n");
        out
    }

    fn assign_dot_ids(&self, id: usize, ids: &mut [usize], next: &mut usize) {
        ids[id] = *next;
        *next += 1;
        for &child in self.nodes[id].children.iter().rev() {
            self.assign_dot_ids(child, ids, next);
        }
    }
}

/// Per-level node counts of the label tree, computed by expanding label
/// multiplicities level by level instead of materializing nodes. Cheap even
/// where the tree itself would not fit in memory.
pub fn level_counts(n: usize) -> Vec<u64> {
    if n == 0 {
        return Vec::new();
    }
    let mut counts = Vec::new();
    let mut current: BTreeMap<Label, u64> = BTreeMap::new();
    current.insert(Label::root(n), 1);
    while !current.is_empty() {
        counts.push(current.values().sum());
        let mut next: BTreeMap<Label, u64> = BTreeMap::new();
        for (label, mult) in current {
            for child in produce(label) {
                *next.entry(child).or_insert(0) += mult;
            }
        }
        current = next;
    }
    counts
}

/// Total number of labels generated from the root for semilength `n`.
pub fn total_nodes(n: usize) -> u64 {
    level_counts(n).iter().sum()
}

/// Outcome of walking the word tree and the label tree in lockstep.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CorrespondenceReport {
    pub nodes_checked: u64,
    pub mismatch: Option<Mismatch>,
}

/// First disagreement found between predicted and measured labels.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Mismatch {
    pub word: DyckWord,
    pub expected: Label,
    pub actual: Label,
}

impl CorrespondenceReport {
    pub fn is_success(&self) -> bool {
        self.mismatch.is_none()
    }
}

impl fmt::Display for CorrespondenceReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.mismatch {
            None => write!(f, "success, {} nodes checked", self.nodes_checked),
            Some(m) => write!(
                f,
                "mismatch at {}: expected {}, got {} ({} nodes checked)",
                m.word, m.expected, m.actual, self.nodes_checked
            ),
        }
    }
}

/// Walks the materialized word tree firstborn-first and checks that every
/// node's measured label equals the label the production predicts at its
/// sibling position. Stops at the first mismatch.
pub fn check_correspondence(tree: &PathTree) -> CorrespondenceReport {
    let mut report = CorrespondenceReport {
        nodes_checked: 0,
        mismatch: None,
    };
    let root_label = Label::root(tree.semilength());
    check_node(tree, 0, root_label, &mut report);
    report
}

fn check_node(tree: &PathTree, id: usize, expected: Label, report: &mut CorrespondenceReport) {
    if report.mismatch.is_some() {
        return;
    }
    let node = tree.node(id);
    let actual = label_of(&node.word);
    report.nodes_checked += 1;
    if actual != expected {
        report.mismatch = Some(Mismatch {
            word: node.word.clone(),
            expected,
            actual,
        });
        return;
    }
    let predicted = produce_firstborn_first(actual);
    debug_assert_eq!(predicted.len(), node.children.len());
    for (&child_id, child_label) in node.children.iter().zip(predicted) {
        check_node(tree, child_id, child_label, report);
    }
}

/// Streaming variant of [`check_correspondence`]: expands words and labels
/// side by side without materializing the tree.
pub fn check_correspondence_streaming(n: usize, cap: usize) -> Result<CorrespondenceReport> {
    if n == 0 {
        return Err(Error::ZeroSemilength);
    }
    if n > cap {
        return Err(Error::CapExceeded { n, cap });
    }
    let mut report = CorrespondenceReport {
        nodes_checked: 0,
        mismatch: None,
    };
    let root = DyckWord::max_path(n)?;
    check_streaming(&root, true, Label::root(n), &mut report)?;
    Ok(report)
}

fn check_streaming(
    w: &DyckWord,
    is_root: bool,
    expected: Label,
    report: &mut CorrespondenceReport,
) -> Result<()> {
    if report.mismatch.is_some() {
        return Ok(());
    }
    let actual = label_of(w);
    report.nodes_checked += 1;
    if actual != expected {
        report.mismatch = Some(Mismatch {
            word: w.clone(),
            expected,
            actual,
        });
        return Ok(());
    }
    let kids = tree::children(w, is_root)?;
    let predicted = produce_firstborn_first(actual);
    debug_assert_eq!(predicted.len(), kids.len());
    for (child, child_label) in kids.iter().zip(predicted) {
        check_streaming(child, false, child_label, report)?;
    }
    Ok(())
}
