//! Exact characters of the simple `GL(W)`-equivariant D-modules on Veronese
//! cones, together with the plethysm, Schur-function and Bott machinery they
//! are built from.
//!
//! `no_std` with `alloc`. All arithmetic is exact; every potentially
//! unbounded computation is guarded by [`charpoly::Limits`] or a window.

#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;

pub mod bott;
pub mod charpoly;
pub mod error;
pub mod memo;
pub mod veronese;
pub mod weights;
pub mod window;

pub use bott::{bott, bott_inverse, serre_dual, BottOutcome};
pub use charpoly::{mult_of, CharacterPoly, Limits, VirtualCharacter};
pub use error::{Error, Result};
pub use veronese::{d2_table_predicate, ext_closed_form, D2Cell, Engine, ExtTable};
pub use weights::{DominantWeight, Partition};
pub use window::WeightWindow;
