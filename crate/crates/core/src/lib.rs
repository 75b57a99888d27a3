//! Finite skew left braces: construction, ideals, semidirect products,
//! primality and enumeration.
//!
//! Every structure lives on the carrier `{0..n-1}` with `0` as the identity
//! of both operations. See the `examples/` directory for one runnable
//! program per capability.

pub mod brace;
pub mod cli;
pub mod construct;
pub mod enumerate;
pub mod error;
pub mod group;
pub mod ideal;
pub mod io;
pub mod primality;
pub mod scenario;
pub mod set;
pub mod suite;

pub use brace::{validate_brace, BraceMap, SkewBrace, ValidationMode};
pub use construct::{
    are_isomorphic, brace_automorphisms, build_sign_action, enumerate_actions, inner_mult_automorphism,
    projection_checks, semidirect_product, ProjectionReport, SemidirectProduct, SemidirectSpec,
};
pub use enumerate::{
    enumerate_braces, find_simple_abelian_s4, fingerprint, regular_subgroups, AdditiveFilter, EnumerationResult,
    SimpleS4,
};
pub use error::{Error, Result};
pub use group::FiniteGroup;
pub use ideal::{
    all_ideals, ideal_intersection, ideal_sum, is_ideal, is_left_ideal, is_simple, minimal_ideals, principal_ideal,
    quotient_brace, IdealHandle, Quotient,
};
pub use primality::{primality_report, Mode, PrimalityReport};
pub use set::ElementSet;
