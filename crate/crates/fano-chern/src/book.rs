//! Compile-checks for the guide: each chapter of `book/` is included as
//! documentation here, so `cargo test` runs every Rust snippet in the book
//! against the current API and the book can never drift from the code.

#[doc = include_str!("../../../book/src/introduction.md")]
mod introduction {}

#[doc = include_str!("../../../book/src/exact-arithmetic.md")]
mod exact_arithmetic {}

#[doc = include_str!("../../../book/src/bernoulli-identities.md")]
mod bernoulli_identities {}

#[doc = include_str!("../../../book/src/coefficient-recursion.md")]
mod coefficient_recursion {}

#[doc = include_str!("../../../book/src/pushforward-calculus.md")]
mod pushforward_calculus {}

#[doc = include_str!("../../../book/src/fano-invariants.md")]
mod fano_invariants {}

#[doc = include_str!("../../../book/src/verification.md")]
mod verification {}
