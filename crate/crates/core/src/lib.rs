//! Exact symbolic engine for the two-parameter quantum group
//! `U_{r,s}(so_{2n+1})`.
//!
//! The crate builds the algebra from its presentation, reduces elements to
//! the convex PBW-Lyndon normal form by oriented rewriting, certifies the
//! complete catalog of straightening and Hopf-structural identities, and
//! checks the root-of-unity phenomena (central elements, restricted
//! quotient, integrals, distinguished group-likes, the double condition and
//! the ribbon criterion) at desk scale. All arithmetic is exact: rational
//! functions in `r, s` over the rationals generically, cyclotomic numbers
//! after specialization at roots of unity.

pub mod catalog;
pub mod coeff;
pub mod cyclo;
pub mod error;
pub mod freealg;
pub mod funcs;
pub mod hopf;
pub mod iso;
pub mod qgroup;
pub mod registry;
pub mod restricted;
pub mod rewrite;
pub mod suites;
pub mod rootsys;

pub use coeff::{LaurentPoly, QIntegerTable, RatFun};
pub use cyclo::{CycField, CycNum, SpecializationMap};
pub use error::{CoeffError, EngineError};
pub use freealg::{Coeff, Element, Letter, TensorElement, Word};
