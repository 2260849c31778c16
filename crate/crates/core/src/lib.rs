//! Exact-arithmetic combinatorics of k-ary trees.
//!
//! This crate enumerates k-ary trees, computes hook-length and depth
//! statistics, realizes the bijection between staircase arrays and
//! staircase-labeled trees, and verifies the hook length formulas of
//! Han and Yang by exhaustive summation with arbitrary-precision
//! integers and rationals. No floating point is used anywhere.
//!
//! The main entry points:
//!
//! - [`KAryTree`] and [`TreeIter`] for the tree model and exhaustive
//!   enumeration;
//! - [`StaircaseArray`] / [`StaircaseLabeledTree`] and the mutually
//!   inverse maps [`StaircaseArray::to_labeled_tree`] and
//!   [`StaircaseLabeledTree::to_array`];
//! - [`verify`] for the formula checkers and shape censuses;
//! - [`filtration`] for the nested level sets of binary staircase
//!   arrays whose terminal level corresponds to complete trees.
//!
//! Every enumeration is bounded by a [`WorkGuard`] so that desk-scale
//! sweeps stay desk-scale.

pub mod enumerate;
pub mod error;
pub mod filtration;
pub mod guard;
pub mod json;
pub mod staircase;
pub mod tree;
pub mod verify;

pub use enumerate::{count_trees, TreeIter};
pub use error::{Error, Result};
pub use filtration::{compute_filtration, filtration_level, has_odd_leading_ones, FiltrationReport};
pub use guard::{WorkGuard, DEFAULT_GUARD_CAP};
pub use staircase::{
    count_arrays, count_staircase_labelings, ArrayIter, IncreasingTree, LabelingViolation,
    StaircaseArray, StaircaseLabeledTree,
};
pub use tree::{DepthMap, HookMultiset, KAryTree, TreeCode};
pub use verify::{
    brute_force_increasing_count, census_by_shape, hook_depth_identity_holds, verify_complete_form,
    verify_complete_integer_form, verify_han1, verify_han2, verify_yang, verify_yang_integer_form,
    CensusReport, FormulaId, VerificationReport,
};

pub use num::{BigInt, BigRational};
