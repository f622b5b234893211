//! Exact linear algebra on spaces built from `V = Q^n`: tensor powers, duals,
//! `V^* ⊗ Lie_{k+1}(V)`, and `⋀^d` of a symplectic space.

mod matrix;
mod operator;
mod phi;
mod sl;
mod space;
mod subspace;
pub mod symplectic;
mod vector;

use thiserror::Error;

pub use matrix::IntMatrix;
pub use operator::{induced_operator, LinearOperator};
pub use phi::{
    cyclic_difference_basis, cyclic_shift, e_delta, mk_to_dual_tensor, necklace_count, phi_map,
    simple_tensor, tau_map, w_basis,
};
pub use sl::{
    c_count, closing_identity_check, closing_identity_sides, elementary_matrix, elementary_on,
    elementary_sl, kernel_claim_check, kernel_claim_compare, sl_generators, z_decomposition,
    KernelClaimReport, SequenceTerm, ZReport,
};
pub use space::Space;
pub use subspace::{
    kernel_basis, kernel_of_images, orbit_saturate, span_basis, subspace_equal, Subspace,
    SubspaceJson,
};
pub use vector::{LabelledCoefficient, TensorVector};

use crate::lie::LieError;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LinAlgError {
    #[error("space mismatch: {left} vs {right}")]
    SpaceMismatch { left: String, right: String },
    #[error("expected a vector of {expected}, found {found}")]
    WrongSpace { expected: String, found: String },
    #[error("label {label} does not belong to {space}")]
    BadLabel { space: String, label: String },
    #[error("operator {operator} has no inverse witness")]
    MissingInverse { operator: String },
    #[error("inverse witness for {operator} is wrong")]
    BadInverse { operator: String },
    #[error("{0}")]
    Constraint(String),
    #[error(transparent)]
    Lie(#[from] LieError),
}
