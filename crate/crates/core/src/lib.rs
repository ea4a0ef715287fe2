//! Exact computations with positively folded alcove walks in extended
//! affine Weyl groups: enumeration, crystal raising operators, walks of
//! maximal dimension, Macdonald spherical functions, affine Hecke algebra
//! identities, and retraction counts in affine buildings.
//!
//! Conventions: simple roots are numbered as in Bourbaki, coweights are
//! written in the fundamental-coweight basis, and generator indices are
//! 1-based for finite reflections with `0` for the affine reflection.

pub mod affine;
pub mod buildings;
pub mod crystal;
pub mod error;
pub mod hecke;
pub mod laurent;
pub mod rootsys;
pub mod saturated;
pub mod spherical;
pub mod walks;

pub use affine::{AffElem, AffRoot, AffineWord, Crossing, SignedAffRoot};
pub use buildings::Thickness;
pub use crystal::{CriticalData, NextEvent, RaiseCase};
pub use error::{Error, Result};
pub use hecke::{HeckeElem, HeckeReport};
pub use laurent::{GroupAlgebraElem, LaurentV};
pub use rootsys::{build_root_system, CartanType, Coweight, FinWeylElem, Limits, Root, RootSystem};
pub use saturated::StringData;
pub use spherical::DirectCheck;
pub use walks::{Step, StepKind, Walk, WalkStats, WalkType};
