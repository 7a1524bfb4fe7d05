//! Special functions, double-exponential quadrature and a machine-checkable
//! catalog of definite integrals that reduce to the beta function.
//!
//! The crate is `no_std` and only needs `alloc`. File formats, the
//! verification harness and the command-line front end live in the
//! `betatab` crate.
#![no_std]
#![allow(clippy::excessive_precision)]

extern crate alloc;

pub mod catalog;
pub mod quad;
pub mod specfun;
