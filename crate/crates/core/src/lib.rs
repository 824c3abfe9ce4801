//! Cofiniteness and completeness of free monoids generated by finite word
//! lists, set rewriting systems, and the reductions connecting them.
//!
//! ```
//! use freemonoid::frobenius::{is_cofinite, longest_omitted_word};
//! use freemonoid::words::Dictionary;
//!
//! let dict = Dictionary::from_strs(["000", "00000"]).unwrap();
//! assert!(is_cofinite(&dict).unwrap());
//! assert_eq!(longest_omitted_word(&dict).unwrap().unwrap().len(), 7);
//! ```

pub mod automata;
pub mod bitset;
pub mod cli;
pub mod completeness;
pub mod error;
pub mod families;
pub mod frobenius;
mod graph;
pub mod oracle;
pub mod reductions;
pub mod srw;
pub mod words;

pub use error::{Error, Result};
