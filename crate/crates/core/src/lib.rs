//! Smoothness of simple spherical varieties, decided combinatorially.
//!
//! A simple spherical variety is given by a homogeneous spherical datum and a
//! colored cone. [`smooth::is_smooth`] checks local factoriality, matches the
//! localized spherical closure against the catalog of multiplicity-free
//! spaces and assigns marked spherical roots to rays.

pub mod catalog;
pub mod datum;
pub mod diagram;
pub mod document;
pub mod error;
pub mod lattice;
pub mod lp;
pub mod roots;
pub mod smooth;

pub use error::Error;
