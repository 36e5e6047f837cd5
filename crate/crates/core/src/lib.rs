//! Generalised characters of the classical groups over an arbitrary parameter
//! sequence `c`, computed exactly, together with checkers for the determinantal
//! and Littlewood-type identities they satisfy.
#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod characters;
pub mod error;
pub mod identities;
pub mod ninth;
pub mod partition;
pub mod registry;
pub mod ring;
pub mod sequences;

pub use error::{Error, Result};
