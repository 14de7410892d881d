//! The standard examples and the conformal structure of affine envelopes.

pub mod builders;
pub mod dglie;
pub mod examples;
pub mod sugawara;

pub use builders::{
    affine_data, build_affine, build_affine_named, build_neveu_schwarz, build_virasoro, catalog_presentation,
    CATALOG_NAMES,
};
pub use dglie::{BilinearForm, DgLieData, GElement};
pub use sugawara::{casimir_h_dual, sdim, sugawara, verify_virasoro_action, DualBases, Sugawara};
