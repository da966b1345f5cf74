//! Finite topological spaces with the generalized open-set families
//! (δ-, regular, semi-, α-, a-, b-, e- and feebly open), their locally closed
//! variants, and an exhaustive lab for checking statements about them over
//! every small space.
//!
//! ```
//! use finitop::{lc_family, parse_space, LCVariant};
//!
//! let space = parse_space("points: a b c d\nopen: a\nopen: b\nopen: a b\nopen: a c d\n").unwrap();
//! let alc = lc_family(&space, LCVariant::ALC);
//! assert_eq!(space.format_family(alc), "{}\n{b}\n{a,c,d}\n{a,b,c,d}\n");
//! ```

pub mod error;
pub mod family;
pub mod generalized;
pub mod lab;
pub mod local;
pub mod space;
pub mod subset;
pub mod text;

pub use error::{Error, Result};
pub use family::SetFamily;
pub use generalized::{
    a_closure, a_interior, e_closure, is_variant_closed, is_variant_open, semi_closure, variant_closed_family,
    variant_closure, variant_interior, variant_open_family, Variant,
};
pub use lab::canon::{are_homeomorphic, canonical_form};
pub use lab::preorder::{enumerate_topologies, labeled_preorders, Preorder};
pub use lab::search::{
    find_counterexample, find_counterexample_with, independence_search, independence_search_with, ClaimSpec,
    CounterexampleRecord, Execution, Predicate, SearchStatus,
};
pub use lab::suite::{
    verify_all_labeled, verify_product_theorem, verify_theorem_suite, Census, CheckOutcome, ProductCensus, SuiteReport,
};
pub use local::{
    are_a_separated, characterize_alc, characterize_alo, converse_fails_check, disjoint_aclosed_witness,
    interpolation_witness, is_lc, is_variant_dense, is_variant_space, is_variant_submaximal, lc_family, lc_witness,
    product_lc_witness, sandwich_witness, separated_union_witness, CharacterizationRecord, LCVariant, LCWitness,
};
pub use space::{product_space, FiniteSpace};
pub use subset::PointSubset;
pub use text::{format_space, parse_set, parse_space};
