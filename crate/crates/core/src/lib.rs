//! Exact computational algebra for the bicyclic monoid `C(a,b)` and its
//! positive submonoid `C+(a,b)`: element arithmetic, canonical forms for the
//! named endomorphism families with closed-form composition, a classifier for
//! endomorphisms given by generator images, and a brute-force search used to
//! check the classification on bounded windows.

pub mod classify;
pub mod element;
pub mod endo;
pub mod error;
pub mod hom;
mod parse;
pub mod search;
pub mod structures;
pub mod verify;
pub mod window;

pub use element::{format_element, natural_leq, parse_element, BicyclicElement};
pub use endo::{canonical_forms, format_endo, parse_endo, CanonicalEndo, IDENTITY};
pub use error::{Error, Result};
pub use window::{WindowMap, WindowSpec};
pub use hom::{check_homomorphism, check_isomorphism_window, HomReport, Verdict, Violation, ViolationKind};
pub use structures::{
    omega_embedding, product_in, sigma_from_factorization, AbstractElement, Action, Convention,
    StructureDescriptor,
};
pub use classify::{
    b_consistency, classify, induced_map, strip_varsigma, BeyondPaperLabel, ClassificationResult,
    GeneratorImages,
};
pub use search::{enumerate, pointwise_compose_oracle, CoverageReport, SearchConfig};
pub use verify::{run_suite, Suite, SuiteOptions, SuiteReport};
