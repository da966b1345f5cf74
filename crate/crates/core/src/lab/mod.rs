//! Exhaustive enumeration of small spaces, canonical forms, model checking of
//! the theorem statements and counterexample search.

pub mod canon;
pub mod preorder;
pub mod search;
pub mod suite;
