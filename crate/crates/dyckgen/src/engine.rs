//! Sequential generation of all Dyck words of one size in constant
//! amortized time.
//!
//! The generator holds the current word in a circular buffer and walks the
//! generating tree of [`crate::tree`] in preorder, deriving each word from
//! the previous one by one of three constant-cost operations:
//!
//! * `op1` descends to the firstborn child: exchange the word's first
//!   up-step with the first down-step of its last descent, then move the
//!   cursor forward one position.
//! * `op2` steps to the next sibling: overturn the rightmost peak, cursor
//!   unchanged.
//! * `op3` jumps to the parent's next sibling once a subtree is exhausted:
//!   exchange the bits within the last and the second-to-last `10` pairs,
//!   then move the cursor back one position.
//!
//! Positions are resolved through the succession label `(k, i)` and a stack
//! of ancestor labels, so every applicability test is an integer compare
//! and no operation ever scans the word. Work per emitted word is bounded
//! by a small constant; the counters record it exactly.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::label::{label_of, Label};
use crate::word::DyckWord;

/// A fixed buffer of `2n` step bits plus a cursor. The logical word is the
/// rotation of the buffer starting at the cursor; moving the cursor stands
/// in for shifting the whole word.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CircularWord {
    buffer: Vec<u8>,
    cursor: usize,
}

impl CircularWord {
    fn pyramid(n: usize) -> CircularWord {
        let mut buffer = vec![1u8; n];
        buffer.extend(std::iter::repeat_n(0u8, n));
        CircularWord { buffer, cursor: 0 }
    }

    /// Number of steps (`2n`).
    pub fn len(&self) -> usize {
        self.buffer.len()
    }

    pub fn is_empty(&self) -> bool {
        self.buffer.is_empty()
    }

    pub fn cursor(&self) -> usize {
        self.cursor
    }

    /// Bit at logical position `j` (0-based from the cursor).
    pub fn bit(&self, j: usize) -> u8 {
        self.buffer[self.physical(j)]
    }

    fn physical(&self, j: usize) -> usize {
        let m = self.buffer.len();
        let p = self.cursor + j;
        if p >= m {
            p - m
        } else {
            p
        }
    }

    fn swap(&mut self, a: usize, b: usize) {
        let (pa, pb) = (self.physical(a), self.physical(b));
        self.buffer.swap(pa, pb);
    }

    fn advance(&mut self) {
        self.cursor = if self.cursor + 1 == self.buffer.len() {
            0
        } else {
            self.cursor + 1
        };
    }

    fn retreat(&mut self) {
        self.cursor = if self.cursor == 0 {
            self.buffer.len() - 1
        } else {
            self.cursor - 1
        };
    }

    /// Materializes the logical word.
    pub fn to_word(&self) -> DyckWord {
        let mut bits = Vec::with_capacity(self.buffer.len());
        bits.extend_from_slice(&self.buffer[self.cursor..]);
        bits.extend_from_slice(&self.buffer[..self.cursor]);
        DyckWord::from_valid_bits(bits)
    }

    /// Appends the logical word as ASCII `'0'`/`'1'` bytes.
    pub fn push_ascii(&self, out: &mut Vec<u8>) {
        for &b in &self.buffer[self.cursor..] {
            out.push(b'0' + b);
        }
        for &b in &self.buffer[..self.cursor] {
            out.push(b'0' + b);
        }
    }
}

/// Tally of the elementary actions the generator performs. A pair exchange
/// counts as one bit swap; a dispatch test is one integer comparison made
/// while choosing the next operation.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct Counters {
    pub bit_swaps: u64,
    pub cursor_moves: u64,
    pub pushes: u64,
    pub pops: u64,
    pub label_updates: u64,
    pub dispatch_tests: u64,
}

impl Counters {
    pub fn stack_ops(&self) -> u64 {
        self.pushes + self.pops
    }

    pub fn total(&self) -> u64 {
        self.bit_swaps
            + self.cursor_moves
            + self.pushes
            + self.pops
            + self.label_updates
            + self.dispatch_tests
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Phase {
    NotStarted,
    Running,
    Done,
}

impl Phase {
    fn as_str(self) -> &'static str {
        match self {
            Phase::NotStarted => "not-started",
            Phase::Running => "running",
            Phase::Done => "done",
        }
    }
}

/// Totals reported after driving a generator to completion.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RunSummary {
    pub count: u64,
    pub counters: Counters,
    pub max_op3_run: u32,
}

/// The full state of the sequential generator.
///
/// `advance` emits the maximal pyramid first, then derives each following
/// word from the current one, visiting the generating tree in preorder
/// (children firstborn first). The label always equals the measured label
/// of the logical word, and the cursor always equals
/// `max(ancestors - 1, 0)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Generator {
    n: usize,
    word: CircularWord,
    label: Label,
    ancestors: Vec<Label>,
    counters: Counters,
    emitted: u64,
    phase: Phase,
    op3_run: u32,
    max_op3_run: u32,
}

const SNAPSHOT_HEADER: &str = "dyckgen-state v1";

impl Generator {
    /// A fresh generator positioned before the maximal pyramid of size `n`.
    pub fn new(n: usize) -> Result<Generator> {
        if n == 0 {
            return Err(Error::ZeroSemilength);
        }
        Ok(Generator {
            n,
            word: CircularWord::pyramid(n),
            label: Label::root(n),
            ancestors: Vec::with_capacity(n),
            counters: Counters::default(),
            emitted: 0,
            phase: Phase::NotStarted,
            op3_run: 0,
            max_op3_run: 0,
        })
    }

    pub fn semilength(&self) -> usize {
        self.n
    }

    /// The current word in its circular representation.
    pub fn current(&self) -> &CircularWord {
        &self.word
    }

    /// Materialized copy of the current word.
    pub fn current_word(&self) -> DyckWord {
        self.word.to_word()
    }

    pub fn label(&self) -> Label {
        self.label
    }

    /// Ancestor labels, root at the bottom.
    pub fn ancestors(&self) -> &[Label] {
        &self.ancestors
    }

    pub fn counters(&self) -> &Counters {
        &self.counters
    }

    /// Words emitted so far (the root counts).
    pub fn emitted(&self) -> u64 {
        self.emitted
    }

    pub fn phase(&self) -> Phase {
        self.phase
    }

    /// Longest run of consecutive `op3` applications seen so far. Never
    /// exceeds two.
    pub fn max_op3_run(&self) -> u32 {
        self.max_op3_run
    }

    /// Steps to the next word. Returns `true` when a new word is current,
    /// `false` once the listing is exhausted.
    pub fn advance(&mut self) -> bool {
        match self.phase {
            Phase::Done => false,
            Phase::NotStarted => {
                self.phase = if self.n == 1 {
                    Phase::Done
                } else {
                    Phase::Running
                };
                self.emitted = 1;
                true
            }
            Phase::Running => {
                if self.emitted == 1 {
                    self.root_firstborn();
                    true
                } else if self.label.i >= 1 {
                    self.counters.dispatch_tests += 1;
                    self.apply_op1();
                    true
                } else if self.label.k >= 2 {
                    self.counters.dispatch_tests += 2;
                    self.apply_op2();
                    true
                } else if self.ancestors.len() >= 2 {
                    self.counters.dispatch_tests += 3;
                    self.apply_op3();
                    true
                } else {
                    // Current word is the last son of the root: the
                    // listing is complete.
                    self.counters.dispatch_tests += 3;
                    self.phase = Phase::Done;
                    false
                }
            }
        }
    }

    /// Descends from the root to its firstborn child by overturning the
    /// pyramid's peak. Distinct from `op1`, whose bit rule applied at the
    /// root would regenerate the root itself.
    pub fn root_firstborn(&mut self) {
        assert!(
            self.phase == Phase::Running && self.emitted == 1,
            "root_firstborn applies only when the root is current"
        );
        assert!(self.n >= 2, "the size-1 root has no children");
        self.word.swap(self.n - 1, self.n);
        self.counters.bit_swaps += 1;
        self.push_label(Label::new(self.n - 1, self.n - 2));
        self.emitted += 1;
        self.note_op(false);
        self.debug_invariants();
    }

    /// Descends to the firstborn child of the current (active) word:
    /// exchange logical positions `0` and `2n - k`, advance the cursor.
    pub fn apply_op1(&mut self) {
        assert!(
            self.phase == Phase::Running && self.emitted >= 2,
            "op1 applies only to a running non-root state"
        );
        let Label { k, i } = self.label;
        assert!(i >= 1, "op1 requires an active word");
        self.word.swap(0, 2 * self.n - k);
        self.counters.bit_swaps += 1;
        self.word.advance();
        self.counters.cursor_moves += 1;
        self.push_label(Label::new(k, i.min(k) - 1));
        self.emitted += 1;
        self.note_op(false);
        self.debug_invariants();
    }

    /// Moves to the next sibling by overturning the rightmost peak:
    /// exchange logical positions `2n - 1 - k` and `2n - k`.
    pub fn apply_op2(&mut self) {
        assert!(
            self.phase == Phase::Running && self.emitted >= 2,
            "op2 applies only to a running non-root state"
        );
        let Label { k, i } = self.label;
        assert!(k >= 2, "op2 requires a following sibling");
        let m = 2 * self.n;
        self.word.swap(m - 1 - k, m - k);
        self.counters.bit_swaps += 1;
        self.set_label(Label::new(k - 1, if i == k - 1 { i - 1 } else { i }));
        self.emitted += 1;
        self.note_op(false);
        self.debug_invariants();
    }

    /// Jumps from the last child of a node to that node's next sibling:
    /// exchange the bits within the trailing `10` pair and within the `10`
    /// pair `k_parent` positions earlier, then retreat the cursor.
    pub fn apply_op3(&mut self) {
        assert!(
            self.phase == Phase::Running && self.emitted >= 2,
            "op3 applies only to a running non-root state"
        );
        assert!(self.label.k == 1, "op3 requires a word ending in a unit pyramid");
        assert!(
            self.ancestors.len() >= 2,
            "op3 from a child of the root would leave the tree"
        );
        debug_assert_eq!(self.label.i, 0);
        let parent = self.ancestors.pop().expect("stack depth checked above");
        self.counters.pops += 1;
        let Label { k: kp, i: ip } = parent;
        let m = 2 * self.n;
        self.word.swap(m - 2, m - 1);
        self.word.swap(m - 2 - kp, m - 1 - kp);
        self.counters.bit_swaps += 2;
        self.word.retreat();
        self.counters.cursor_moves += 1;
        self.set_label(Label::new(kp - 1, if ip == kp - 1 { ip - 1 } else { ip }));
        self.emitted += 1;
        self.note_op(true);
        self.debug_invariants();
    }

    fn push_label(&mut self, next: Label) {
        self.ancestors.push(self.label);
        self.counters.pushes += 1;
        self.set_label(next);
    }

    fn set_label(&mut self, next: Label) {
        self.label = next;
        self.counters.label_updates += 1;
    }

    fn note_op(&mut self, is_op3: bool) {
        if is_op3 {
            self.op3_run += 1;
            self.max_op3_run = self.max_op3_run.max(self.op3_run);
        } else {
            self.op3_run = 0;
        }
    }

    fn debug_invariants(&self) {
        debug_assert_eq!(
            self.word.cursor(),
            self.ancestors.len().saturating_sub(1),
            "cursor must track the ancestor depth"
        );
        debug_assert!(self
            .ancestors
            .first()
            .is_none_or(|&b| b == Label::root(self.n)));
    }

    /// Drives the generator to completion, handing each word (including
    /// the current resumption point's successors) to `sink`. A sink error
    /// propagates and leaves the generator resumable.
    pub fn run<E, F>(&mut self, mut sink: F) -> std::result::Result<RunSummary, E>
    where
        F: FnMut(&CircularWord) -> std::result::Result<(), E>,
    {
        while self.advance() {
            sink(&self.word)?;
        }
        Ok(self.summary())
    }

    /// Totals so far.
    pub fn summary(&self) -> RunSummary {
        RunSummary {
            count: self.emitted,
            counters: self.counters,
            max_op3_run: self.max_op3_run,
        }
    }

    /// Serializes the full state as versioned plain text.
    pub fn snapshot(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "{SNAPSHOT_HEADER}");
        let _ = writeln!(out, "n {}", self.n);
        let mut buffer = String::with_capacity(2 * self.n);
        for &b in &self.word.buffer {
            buffer.push(if b == 1 { '1' } else { '0' });
        }
        let _ = writeln!(out, "buffer {buffer}");
        let _ = writeln!(out, "cursor {}", self.word.cursor);
        let _ = writeln!(out, "label {}", self.label);
        let ancestors: Vec<String> = self.ancestors.iter().map(|l| l.to_string()).collect();
        let _ = writeln!(out, "ancestors {}", ancestors.join(" "));
        let c = &self.counters;
        let _ = writeln!(out, "bit_swaps {}", c.bit_swaps);
        let _ = writeln!(out, "cursor_moves {}", c.cursor_moves);
        let _ = writeln!(out, "pushes {}", c.pushes);
        let _ = writeln!(out, "pops {}", c.pops);
        let _ = writeln!(out, "label_updates {}", c.label_updates);
        let _ = writeln!(out, "dispatch_tests {}", c.dispatch_tests);
        let _ = writeln!(out, "emitted {}", self.emitted);
        let _ = writeln!(out, "phase {}", self.phase.as_str());
        let _ = writeln!(out, "op3_run {}", self.op3_run);
        let _ = writeln!(out, "max_op3_run {}", self.max_op3_run);
        out
    }

    /// Rebuilds a generator from [`Generator::snapshot`] text, validating
    /// structure and state invariants.
    pub fn restore(text: &str) -> Result<Generator> {
        let bad = |msg: &str| Error::BadSnapshot(msg.to_string());
        let mut lines = text.lines();
        if lines.next().map(str::trim) != Some(SNAPSHOT_HEADER) {
            return Err(bad("missing or unsupported header"));
        }
        let mut fields = std::collections::BTreeMap::new();
        for line in lines {
            if line.trim().is_empty() {
                continue;
            }
            let (key, value) = line.split_once(' ').unwrap_or((line, ""));
            if fields.insert(key.to_string(), value.trim().to_string()).is_some() {
                return Err(Error::BadSnapshot(format!("duplicate field {key:?}")));
            }
        }
        let take = |key: &str| -> Result<String> {
            fields
                .get(key)
                .cloned()
                .ok_or_else(|| Error::BadSnapshot(format!("missing field {key:?}")))
        };
        let parse_u64 = |key: &str| -> Result<u64> {
            take(key)?
                .parse()
                .map_err(|_| Error::BadSnapshot(format!("field {key:?} is not a number")))
        };

        let n = parse_u64("n")? as usize;
        if n == 0 {
            return Err(bad("n must be positive"));
        }
        let buffer_text = take("buffer")?;
        if buffer_text.len() != 2 * n {
            return Err(bad("buffer length does not match n"));
        }
        let mut buffer = Vec::with_capacity(2 * n);
        for ch in buffer_text.chars() {
            match ch {
                '0' => buffer.push(0u8),
                '1' => buffer.push(1u8),
                _ => return Err(bad("buffer must be 0/1 bits")),
            }
        }
        let cursor = parse_u64("cursor")? as usize;
        if cursor >= 2 * n {
            return Err(bad("cursor out of range"));
        }
        let mut rotated = Vec::with_capacity(2 * n);
        rotated.extend_from_slice(&buffer[cursor..]);
        rotated.extend_from_slice(&buffer[..cursor]);
        let logical = DyckWord::validate(&rotated).map_err(|e| {
            Error::BadSnapshot(format!("logical word is not a Dyck word: {e}"))
        })?;
        let word = CircularWord { buffer, cursor };

        let label: Label = take("label")?.parse()?;
        let ancestors_text = take("ancestors")?;
        let mut ancestors = Vec::new();
        for part in ancestors_text.split_whitespace() {
            ancestors.push(part.parse::<Label>()?);
        }
        let phase = match take("phase")?.as_str() {
            "not-started" => Phase::NotStarted,
            "running" => Phase::Running,
            "done" => Phase::Done,
            other => return Err(Error::BadSnapshot(format!("unknown phase {other:?}"))),
        };
        let emitted = parse_u64("emitted")?;
        let counters = Counters {
            bit_swaps: parse_u64("bit_swaps")?,
            cursor_moves: parse_u64("cursor_moves")?,
            pushes: parse_u64("pushes")?,
            pops: parse_u64("pops")?,
            label_updates: parse_u64("label_updates")?,
            dispatch_tests: parse_u64("dispatch_tests")?,
        };
        let op3_run = parse_u64("op3_run")? as u32;
        let max_op3_run = parse_u64("max_op3_run")? as u32;

        // Cross-field invariants.
        if label != label_of(&logical) {
            return Err(bad("label does not match the logical word"));
        }
        if cursor != ancestors.len().saturating_sub(1) {
            return Err(bad("cursor does not match the ancestor depth"));
        }
        if let Some(&bottom) = ancestors.first() {
            if bottom != Label::root(n) {
                return Err(bad("ancestor stack must be rooted at the root label"));
            }
        }
        match phase {
            Phase::NotStarted => {
                if emitted != 0 || !ancestors.is_empty() {
                    return Err(bad("not-started state must be pristine"));
                }
            }
            Phase::Running => {
                if emitted == 0 {
                    return Err(bad("running state must have emitted the root"));
                }
            }
            Phase::Done => {}
        }

        Ok(Generator {
            n,
            word,
            label,
            ancestors,
            counters,
            emitted,
            phase,
            op3_run,
            max_op3_run,
        })
    }
}

impl Iterator for Generator {
    type Item = DyckWord;

    fn next(&mut self) -> Option<DyckWord> {
        if self.advance() {
            Some(self.current_word())
        } else {
            None
        }
    }
}

/// Generates the whole listing for semilength `n` into `sink`.
pub fn run_all<E, F>(n: usize, sink: F) -> std::result::Result<RunSummary, E>
where
    E: From<Error>,
    F: FnMut(&CircularWord) -> std::result::Result<(), E>,
{
    let mut generator = Generator::new(n)?;
    generator.run(sink)
}

/// Counts and tallies the whole listing for semilength `n` without
/// inspecting the words.
pub fn summarize(n: usize) -> Result<RunSummary> {
    run_all(n, |_| Ok(()))
}
