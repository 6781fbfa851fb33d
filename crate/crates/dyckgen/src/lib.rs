//! Exhaustive generation of Dyck paths of a fixed semilength in constant
//! amortized time.
//!
//! The crate provides two equivalent generation strategies plus the
//! machinery to prove they agree:
//!
//! - [`tree`] builds the generating tree rooted at the maximal pyramid,
//!   where children arise by peak insertion along the last descent. Direct
//!   and easy to inspect, but it copies words.
//! - [`engine`] lists the same tree in preorder by mutating a single
//!   circular word with three constant-cost bit-swap operations, guided by
//!   succession labels from [`label`]. Amortized work per path is bounded
//!   by a small constant, independent of the size.
//! - [`oracle`] enumerates Dyck words by brute-force backtracking and
//!   computes exact Catalan numbers, serving as independent ground truth.
//!
//! ```
//! use dyckgen::engine::Generator;
//!
//! let words: Vec<String> = Generator::new(3)
//!     .unwrap()
//!     .map(|w| w.to_string())
//!     .collect();
//! assert_eq!(words, ["111000", "110100", "101100", "101010", "110010"]);
//! ```

mod error;

pub mod engine;
pub mod label;
pub mod oracle;
pub mod tree;
pub mod word;

pub use error::{Error, Result};
pub use label::Label;
pub use word::DyckWord;
