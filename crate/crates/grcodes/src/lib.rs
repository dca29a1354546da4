//! Codes from group ring encodings.
//!
//! Builds error-correcting codes from zero-divisors and units in group
//! rings RG: the RG-matrix isomorphism turns elements into n x n matrices
//! over the coefficient ring, and generator/check matrices for the codes
//! fall out of exact linear algebra on those matrices. Cyclic, dihedral,
//! self-dual and LDPC families are provided as ready-made constructions.

pub mod bits;
pub mod codes;
pub mod constructions;
pub mod error;
pub mod groupring;
pub mod groups;
pub mod poly;
pub mod rgmatrix;

pub use codes::{
    best_basis, check_code, check_elements, check_matrix, dual, greedy_basis, is_ideal,
    is_self_dual, min_distance, unit_code, zero_divisor_code, CheckModule, DistanceOptions,
    LinearCode, Side, SubmoduleBasis,
};
pub use error::{Error, Result};
pub use groupring::{parse_element, GroupRingElement, RingSpec};
pub use groups::{make_group, Group, GroupSpec};
pub use rgmatrix::{classify, rg_matrix, Classification, FieldMatrix, RGMatrix};
