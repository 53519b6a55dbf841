//! Exact-arithmetic braid group representations built from cluster
//! mutations.
//!
//! The crate evaluates virtual, flat and flat virtual braid words as
//! compositions of birational operators, either at rational points (an
//! invariant vector that can tell braids apart) or at symbolic points (to
//! check group relations as identities of rational maps).

pub mod algebra;
pub mod braid;
pub mod checker;
pub mod cli;
pub mod cluster;
pub mod representation;
