//! Presentations of dg vertex Lie algebras and the `n`-products on `U`.

pub mod element;
pub mod file;
pub mod functor;
pub mod presentation;
mod products;

pub use element::{central_element, gen_element, CentralId, GenId, UBasis, UElement};
pub use file::{CentralDecl, FormEntry, GeneratorDecl, PresentationFile, ProductDecl, TermDecl, TranslationKind};
pub use functor::build_vla_from_even_dglie;
pub use presentation::{validate_presentation, Central, Generator, VlaPresentation};
