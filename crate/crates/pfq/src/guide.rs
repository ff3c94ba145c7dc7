//! A guided tour of the crate, rendered both as an mdbook (`book/`) and as
//! rustdoc modules. Each chapter is included verbatim from the book
//! sources, so every Rust code block in the guide is compiled and executed
//! as a doc-test — the documentation cannot drift from the library.

#[doc = include_str!("../../../book/src/introduction.md")]
pub mod introduction {}

#[doc = include_str!("../../../book/src/exact-arithmetic.md")]
pub mod exact_arithmetic {}

#[doc = include_str!("../../../book/src/pfaffians.md")]
pub mod pfaffians {}

#[doc = include_str!("../../../book/src/schur-functions.md")]
pub mod schur_functions {}

#[doc = include_str!("../../../book/src/duality.md")]
pub mod duality {}

#[doc = include_str!("../../../book/src/skew.md")]
pub mod skew_and_branching {}

#[doc = include_str!("../../../book/src/pieri.md")]
pub mod pieri_rules {}

#[doc = include_str!("../../../book/src/bcd.md")]
pub mod root_systems {}

#[doc = include_str!("../../../book/src/cli.md")]
pub mod command_line {}

#[doc = include_str!("../../../book/src/verification.md")]
pub mod verification {}
