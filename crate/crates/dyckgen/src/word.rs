//! Dyck words and their geometric measurements.
//!
//! A Dyck word encodes a lattice path of northeast (`1`) and southeast (`0`)
//! unit steps that starts and ends on the x-axis and never dips below it.
//! Step indices are 0-based from the left, in path order.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// A balanced binary word of length `2n` with nonnegative prefix heights.
///
/// Bits are stored as `0`/`1` byte values in path order. The empty word
/// (`n = 0`) is representable; it only occurs inside the brute-force oracle.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct DyckWord {
    bits: Vec<u8>,
}

/// Ordinate after each step; `heights()[j]` is the height once step `j` is
/// taken.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HeightProfile {
    heights: Vec<usize>,
}

impl HeightProfile {
    pub fn heights(&self) -> &[usize] {
        &self.heights
    }
}

/// Everything a single left-to-right scan of a word can measure.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PathMetrics {
    /// Indices of up-steps immediately followed by a down-step.
    pub peaks: Vec<usize>,
    /// `(index, height)` of down-steps immediately followed by an up-step;
    /// the height is the ordinate of the valley's low point.
    pub valleys: Vec<(usize, usize)>,
    /// Length of the maximal trailing run of down-steps.
    pub last_descent_len: usize,
    /// Length of the last maximal run of up-steps.
    pub last_ascent_len: usize,
    /// Minimum valley height, absent when the word is a single pyramid.
    pub lowest_valley: Option<usize>,
    /// Sum of the heights at the upper endpoints of up-steps.
    pub area: u64,
}

impl DyckWord {
    /// Checks every invariant and wraps the bits, or explains the first
    /// violation: odd length, a negative prefix, or unbalanced counts.
    pub fn validate(bits: &[u8]) -> Result<DyckWord> {
        if !bits.len().is_multiple_of(2) {
            return Err(Error::OddLength(bits.len()));
        }
        let mut height: i64 = 0;
        let mut ups = 0usize;
        for (index, &b) in bits.iter().enumerate() {
            match b {
                1 => {
                    ups += 1;
                    height += 1;
                }
                0 => {
                    height -= 1;
                    if height < 0 {
                        return Err(Error::NegativePrefix(index));
                    }
                }
                other => {
                    return Err(Error::InvalidSymbol {
                        index,
                        symbol: (b'0' + other) as char,
                    })
                }
            }
        }
        if height != 0 {
            return Err(Error::Unbalanced {
                ups,
                downs: bits.len() - ups,
            });
        }
        Ok(DyckWord {
            bits: bits.to_vec(),
        })
    }

    /// The maximal pyramid of size `n`: `n` up-steps then `n` down-steps.
    pub fn max_path(n: usize) -> Result<DyckWord> {
        if n == 0 {
            return Err(Error::ZeroSemilength);
        }
        let mut bits = vec![1u8; n];
        bits.extend(std::iter::repeat_n(0u8, n));
        Ok(DyckWord { bits })
    }

    /// Builds a word from bits already known to satisfy the invariants.
    /// Checked in debug builds.
    pub(crate) fn from_valid_bits(bits: Vec<u8>) -> DyckWord {
        debug_assert!(DyckWord::validate(&bits).is_ok());
        DyckWord { bits }
    }

    /// Number of up-steps.
    pub fn semilength(&self) -> usize {
        self.bits.len() / 2
    }

    /// Total number of steps (`2n`).
    pub fn len(&self) -> usize {
        self.bits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bits.is_empty()
    }

    /// The steps as `0`/`1` byte values, in path order.
    pub fn bits(&self) -> &[u8] {
        &self.bits
    }

    /// Height after each step.
    pub fn heights(&self) -> HeightProfile {
        let mut heights = Vec::with_capacity(self.bits.len());
        let mut h = 0usize;
        for &b in &self.bits {
            if b == 1 {
                h += 1;
            } else {
                h -= 1;
            }
            heights.push(h);
        }
        HeightProfile { heights }
    }

    /// All measurements in one left-to-right pass.
    pub fn metrics(&self) -> PathMetrics {
        let mut peaks = Vec::new();
        let mut valleys = Vec::new();
        let mut lowest_valley: Option<usize> = None;
        let mut area = 0u64;
        let mut height = 0usize;
        let mut zero_run = 0usize;
        let mut one_run = 0usize;
        let mut last_ascent_len = 0usize;
        for (j, &b) in self.bits.iter().enumerate() {
            if b == 1 {
                height += 1;
                area += height as u64;
                one_run += 1;
                zero_run = 0;
                if j > 0 && self.bits[j - 1] == 0 {
                    let vh = height - 1;
                    valleys.push((j - 1, vh));
                    lowest_valley = Some(lowest_valley.map_or(vh, |m| m.min(vh)));
                }
            } else {
                height -= 1;
                zero_run += 1;
                if one_run > 0 {
                    last_ascent_len = one_run;
                    one_run = 0;
                }
                if j > 0 && self.bits[j - 1] == 1 {
                    peaks.push(j - 1);
                }
            }
        }
        PathMetrics {
            peaks,
            valleys,
            last_descent_len: zero_run,
            last_ascent_len,
            lowest_valley,
            area,
        }
    }

    /// True when the word has no valley at height zero; removing the first
    /// and last step of an active word leaves a valid (possibly empty) word.
    pub fn is_active(&self) -> bool {
        let mut height = 0i64;
        for (j, &b) in self.bits.iter().enumerate() {
            if b == 1 {
                if height == 0 && j > 0 {
                    return false;
                }
                height += 1;
            } else {
                height -= 1;
            }
        }
        true
    }

    /// True when the final peak is a height-1 pyramid sitting on the axis,
    /// i.e. the last descent has exactly one step.
    pub fn ends_in_unit_pyramid(&self) -> bool {
        self.bits.len() >= 2 && self.bits[self.bits.len() - 2] == 1
    }

    /// Renders the word with `U` for up-steps and `D` for down-steps.
    pub fn to_updown(&self) -> String {
        self.bits
            .iter()
            .map(|&b| if b == 1 { 'U' } else { 'D' })
            .collect()
    }

    /// The `2n + 1` lattice points of the path, starting at the origin.
    pub fn coords(&self) -> Vec<(usize, usize)> {
        let mut pts = Vec::with_capacity(self.bits.len() + 1);
        pts.push((0, 0));
        let mut h = 0usize;
        for (j, &b) in self.bits.iter().enumerate() {
            if b == 1 {
                h += 1;
            } else {
                h -= 1;
            }
            pts.push((j + 1, h));
        }
        pts
    }
}

impl fmt::Display for DyckWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &b in &self.bits {
            f.write_str(if b == 1 { "1" } else { "0" })?;
        }
        Ok(())
    }
}

impl fmt::Debug for DyckWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "DyckWord({self})")
    }
}

impl FromStr for DyckWord {
    type Err = Error;

    fn from_str(s: &str) -> Result<DyckWord> {
        let mut bits = Vec::with_capacity(s.len());
        for (index, symbol) in s.chars().enumerate() {
            match symbol {
                '0' => bits.push(0),
                '1' => bits.push(1),
                _ => return Err(Error::InvalidSymbol { index, symbol }),
            }
        }
        DyckWord::validate(&bits)
    }
}
