//! Brute-force ground truth, deliberately unrelated to the generating tree.
//!
//! Enumeration extends prefixes by backtracking on the balance constraints
//! alone, so agreement with the tree-driven generators is meaningful
//! evidence of their correctness.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigUint;

use crate::error::{Error, Result};
use crate::word::DyckWord;

/// Largest semilength the enumerator accepts.
pub const ENUMERATION_CAP: usize = 16;

/// All Dyck words of one semilength, sorted ascending.
#[derive(Debug, Clone)]
pub struct WordSet {
    n: usize,
    words: Vec<DyckWord>,
}

impl WordSet {
    pub fn semilength(&self) -> usize {
        self.n
    }

    pub fn words(&self) -> &[DyckWord] {
        &self.words
    }

    pub fn len(&self) -> usize {
        self.words.len()
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }

    pub fn contains(&self, w: &DyckWord) -> bool {
        self.words.binary_search(w).is_ok()
    }

    /// One word per line, newline-terminated: the same format the
    /// generator streams, so listings can be diffed with standard tools.
    pub fn to_lines(&self) -> String {
        let mut out = String::with_capacity(self.words.len() * (2 * self.n + 1));
        for w in &self.words {
            out.push_str(&w.to_string());
            out.push('\n');
        }
        out
    }
}

/// Enumerates every balanced nonnegative-prefix word of length `2n` by
/// depth-first prefix extension: append `0` while the height is positive,
/// append `1` while up-steps remain. Trying `0` first yields ascending
/// lexicographic order.
pub fn enumerate(n: usize) -> Result<WordSet> {
    if n > ENUMERATION_CAP {
        return Err(Error::CapExceeded {
            n,
            cap: ENUMERATION_CAP,
        });
    }
    let mut words = Vec::new();
    let mut prefix = Vec::with_capacity(2 * n);
    extend(n, 0, 0, &mut prefix, &mut words);
    Ok(WordSet { n, words })
}

fn extend(n: usize, ups: usize, height: usize, prefix: &mut Vec<u8>, out: &mut Vec<DyckWord>) {
    if prefix.len() == 2 * n {
        out.push(DyckWord::from_valid_bits(prefix.clone()));
        return;
    }
    if height > 0 {
        prefix.push(0);
        extend(n, ups, height - 1, prefix, out);
        prefix.pop();
    }
    if ups < n {
        prefix.push(1);
        extend(n, ups + 1, height + 1, prefix, out);
        prefix.pop();
    }
}

/// Exact Catalan numbers by the convolution recurrence
/// `C_0 = 1`, `C_{m+1} = sum_{j=0..m} C_j * C_{m-j}`.
pub fn catalan(n: usize) -> BigUint {
    let mut c: Vec<BigUint> = Vec::with_capacity(n + 1);
    c.push(BigUint::from(1u32));
    for m in 0..n {
        let mut next = BigUint::from(0u32);
        for j in 0..=m {
            next += &c[j] * &c[m - j];
        }
        c.push(next);
    }
    c.pop().unwrap()
}

/// `catalan(n)` narrowed to `u64`; panics past the `u64` range (n > 36).
pub fn catalan_u64(n: usize) -> u64 {
    u64::try_from(catalan(n)).expect("catalan number exceeds u64")
}

/// Difference between a reference set and a candidate listing.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Diff {
    /// Words appearing more than once in the candidate listing.
    pub duplicates: Vec<DyckWord>,
    /// Reference words the candidate listing never produced.
    pub missing: Vec<DyckWord>,
    /// Candidate words that are not in the reference set.
    pub unexpected: Vec<DyckWord>,
}

impl Diff {
    pub fn is_empty(&self) -> bool {
        self.duplicates.is_empty() && self.missing.is_empty() && self.unexpected.is_empty()
    }

    /// Short human-readable excerpt, at most five entries per category.
    pub fn excerpt(&self) -> String {
        fn head(label: &str, words: &[DyckWord]) -> String {
            let shown: Vec<String> = words.iter().take(5).map(|w| w.to_string()).collect();
            let more = if words.len() > 5 {
                format!(" (+{} more)", words.len() - 5)
            } else {
                String::new()
            };
            format!("{} {}: {}{}", words.len(), label, shown.join(" "), more)
        }
        let mut parts = Vec::new();
        if !self.duplicates.is_empty() {
            parts.push(head("duplicated", &self.duplicates));
        }
        if !self.missing.is_empty() {
            parts.push(head("missing", &self.missing));
        }
        if !self.unexpected.is_empty() {
            parts.push(head("unexpected", &self.unexpected));
        }
        if parts.is_empty() {
            "no differences".to_string()
        } else {
            parts.join("; ")
        }
    }
}

impl fmt::Display for Diff {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.excerpt())
    }
}

/// Compares a candidate listing against the reference set. The diff is empty
/// exactly when the listing is a permutation of the set with no repeats.
pub fn compare(reference: &WordSet, candidate: &[DyckWord]) -> Diff {
    let mut counts: BTreeMap<&DyckWord, usize> = BTreeMap::new();
    for w in candidate {
        *counts.entry(w).or_insert(0) += 1;
    }
    let mut diff = Diff::default();
    for (w, c) in &counts {
        if *c > 1 {
            diff.duplicates.push((*w).clone());
        }
        if !reference.contains(w) {
            diff.unexpected.push((*w).clone());
        }
    }
    for w in reference.words() {
        if !counts.contains_key(w) {
            diff.missing.push(w.clone());
        }
    }
    diff
}
