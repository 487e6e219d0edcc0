//! Exact combinatorics of extended affine Weyl groups for products of
//! `GL_n`: alcove geometry, Bruhat and upper-arrow orders, admissible sets,
//! lowest-alcove presentations of Serre weights and tame inertial types,
//! predicted weight sets, specialization pairs and the component-count
//! predictor for the associated deformation-space combinatorics.
//!
//! Everything is integer-exact; rational sample points are handled with
//! explicit numerator/denominator arithmetic.

pub mod admissible;
pub mod affine;
pub mod alcove;
pub mod error;
pub mod oracle;
pub mod root_datum;
pub mod serre;
pub mod special;
pub mod tame;

pub use affine::{elt_to_text, parse_elt, parse_weight, weight_to_text, AffineElt, Flag};
pub use error::{Error, Result};
pub use root_datum::{FinWeylElt, Root, RootDatum, RootDatumConfig, Weight};
