//! The cup-product map `nu : Sym^2 R_3 -> Hom(wedge^2 R_1, wedge^2 R_4)`,
//! `f.g -> [phi ^ psi -> f phi ^ g psi + g phi ^ f psi]`, for a smooth cubic
//! threefold, plus the Fermat block decomposition and the Grassmannian
//! section count it is compared against.

mod fermat;
mod grassmannian;
mod nu;

pub use fermat::{
    character_blocks, column_character, fermat_character_blocks, fermat_kernel,
    fermat_kernel_vectors, permute_label, row_character, verify_fermat_kernel, CharacterBlock,
    CharacterVec, FermatKernelVector,
};
pub use grassmannian::{
    compare_section_counts, count_ssyt, grassmannian_sections, hook_content, plucker_count,
};
pub use nu::{
    build_nu, build_nu_from_ring, nu_rank, nu_value, wedge, NuMatrix, NuRow, Sym2Label, Wedge2Label,
};

/// Upper bound on the rank of `nu` for every smooth cubic.
pub const NU_RANK_BOUND: usize = 50;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("cubic form is singular")]
    NotSmooth,
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("internal consistency check failed: {0}")]
    Inconsistent(String),
    #[error("section counts disagree: tableaux {tableaux}, Plücker {plucker}")]
    InconsistentMethods { tableaux: usize, plucker: usize },
    #[error(transparent)]
    Ring(crate::polyring::Error),
    #[error(transparent)]
    LinAlg(#[from] crate::exactla::Error),
}

impl From<crate::polyring::Error> for Error {
    fn from(e: crate::polyring::Error) -> Self {
        match e {
            crate::polyring::Error::NotSmooth => Error::NotSmooth,
            other => Error::Ring(other),
        }
    }
}
