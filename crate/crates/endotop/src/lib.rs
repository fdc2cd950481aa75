//! Fuzzy topologies induced by a self-map on a finite carrier.
//!
//! Given a total map `f : X -> X` on a finite set, this crate constructs
//! the three fuzzy topologies driven by its dynamics — the periodic-point
//! chain (`tau1`), the image-shell chain (`tau2`) and the orbit topology
//! of a one-to-one map (`tau3`) — entirely in exact rational arithmetic.
//! On top of the constructions it provides:
//!
//! - the Zadeh extension of `f` to fuzzy sets, with open-map and
//!   continuity deciders;
//! - deciders for compactness, connectedness, the T0 axiom (under three
//!   membership conventions), regularity, normality and the Lindelöf
//!   property, each returning re-checkable witnesses or justifications;
//! - topology equality tests across symbolic and materialized forms;
//! - a registry of claims about these spaces and an exhaustive sweep that
//!   evaluates every claim on every small instance, reporting minimal
//!   counterexamples.
//!
//! The `endotop` binary exposes all of this as a batch CLI.

pub mod endo;
pub mod error;
pub mod fuzzy;
pub mod grade;
pub mod instance;
pub mod maps;
pub mod output;
pub mod properties;
pub mod registry;
pub mod spaces;
pub mod sweep;

pub use endo::{EndoFunction, FunctionProfile, ImagePartition, OrbitData};
pub use error::{Error, Result};
pub use fuzzy::{Carrier, CrispMode, FuzzyPoint, FuzzySet};
pub use grade::Grade;
pub use spaces::{ChainFamily, ExplicitTopology, Space};
