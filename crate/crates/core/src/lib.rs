//! Height restricted lattice paths, Elena trees and plane trees of height
//! at most 3, with constructive bijections between them.
//!
//! The `A` families live on levels `0..=3` and the `B` families on
//! `-2..=1`. [`bijections::composite_even`] maps `B(2n,0)` onto
//! `A(2n,0) + A(2n,2)` through Elenas and plane trees, and
//! [`bijections::composite_odd`] maps `B(2n-1,-1)` onto
//! `A(2n-1,1) + A(2n-1,3)`. The [`harness`] module checks all of it
//! exhaustively.

pub mod bijections;
pub mod enumeration;
pub mod error;
pub mod harness;
pub mod path;
pub mod render;
pub mod tree;
pub mod word;

pub use bijections::{EvenEnd, OddEnd};
pub use enumeration::{count, fib, generate, union_identity_counts, CountMethod, UnionCounts};
pub use error::{Error, Result};
pub use harness::{CheckRecord, Report};
pub use path::{Band, FamilySpec, LatticePath, Step};
pub use tree::PlaneTree;
pub use word::{elena_to_word, word_to_elena, ElenaToken, ElenaTree, ElenaWord};
