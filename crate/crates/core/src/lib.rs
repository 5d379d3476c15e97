//! Exact decomposition into Specht modules of the permutation modules of
//! perfect m-block matchings and disjoint m-cycle decompositions, i.e. the
//! representations of S_{mn} induced from the trivial character of the
//! block or cycle stabilizers (the hyperoctahedral group at m = 2).
//!
//! Everything is exact arbitrary-precision arithmetic. Each decomposition
//! can be produced three independent ways and cross-checked: the
//! level-to-level recursion with a nonnegative integer solver, character
//! averaging over the stabilizer, and (for m = 2) the even-partition closed
//! form. A fourth route counts fixed points on the enumerated objects.

pub mod character;
pub mod decomposer;
pub mod error;
pub mod matching_iso;
pub mod objects;
pub mod partition;
pub mod young;

pub use character::{class_size, decompose_class_function, inner_product, irreducible_character, mn_char, ClassFunction};
pub use decomposer::{
    closed_form_m2, restricted_target, solve_level, verify_section4, CheckResult, Decomposer,
    LevelResult, Method, PatternLevel, RestrictedLevel, Uniqueness, VerifyReport,
};
pub use error::{Error, Result};
pub use matching_iso::{
    base_matching, equivariance_check, f_row, f_tabloid, polytabloid_image, verify_iso,
    FormalMatchingSum, Tabloid,
};
pub use objects::{
    enumerate_objects, permutation_character_enum, permutation_character_wreath,
    wreath_class_distribution, CycleDecomposition, Family, FamilyKind, GroupedObject,
    HyperMatching, Permutation, DEFAULT_ENUM_CAP,
};
pub use partition::{partitions_of, MultiplicityVector, Partition, PartitionPattern};
