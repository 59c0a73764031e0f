//! Finite models of infinitesimal graded Higgs bundles: graded spaces `H^p`
//! with commuting operators `theta(delta) : H^p -> H^{p-1}`, their duals,
//! and compatibility with a map `mu : Sym^d K -> C` through `kappa : T -> K`.

mod compat;
mod field;
pub mod random;
pub mod sym;

pub use compat::{induced_c, induced_c_from, is_compatible, CompatibilityContext, InducedMap};
pub use field::{HomEntry, InfGradedHiggs};
pub use sym::{multisets, sym_dim, sym_power, Multiset};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("Higgs operators do not commute")]
    NotAHiggsField,
    #[error("kappa is not surjective, so c is not unique")]
    NotVersal,
    #[error("Higgs field is not compatible with the context")]
    NotCompatible,
    #[error(transparent)]
    LinAlg(#[from] crate::exactla::Error),
}
