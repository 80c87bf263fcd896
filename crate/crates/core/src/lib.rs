//! Finite groups as dense Cayley tables, chief series, group classes and
//! the composition formations `𝔉(ℛ)` defined by generalized rank functions.
//!
//! Everything here is `no_std` with `alloc`; file formats, the catalog and
//! the command-line driver live in the companion `frlab` crate.

#![no_std]

extern crate alloc;

pub mod aut;
pub mod caps;
pub mod center;
pub mod charsub;
pub mod class;
pub mod error;
pub mod families;
pub mod fr;
pub mod mask;
pub mod perm;
pub mod product;
pub mod quotient;
pub mod rank;
pub mod series;
pub mod subgroup;
pub mod table;

pub use caps::Caps;
pub use error::{Error, Result};
pub use mask::Mask;
pub use perm::{from_permutations, Perm};
pub use subgroup::Subgroup;
pub use table::{GroupAction, GroupHom, GroupTable};
