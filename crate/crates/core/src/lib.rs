//! Three-qubit depolarizing noise and tripartite negativity.
//!
//! The crate evolves the GHZ state `(|000⟩+|111⟩)/√2` and the W state
//! `(|100⟩+|010⟩+|001⟩)/√3` through one-, two- and three-site depolarizing
//! channels, with the multi-site channels either correlated (one shared Kraus
//! branch) or non-correlated (independent branches per qubit), and measures
//! the surviving entanglement with the tripartite negativity.
//!
//! Basis convention: qubit `a` is the most significant bit, so the row index
//! of `|q_a q_b q_c⟩` is `4·q_a + 2·q_b + q_c`.
//!
//! The crate is `no_std` and only needs `alloc`. File formats and the command
//! line front end live in the `trinoise` crate.

#![no_std]
// negated comparisons are deliberate: they also reject NaN
#![allow(clippy::neg_cmp_op_on_partial_ord)]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod channels;
pub mod closed_forms;
mod error;
pub mod matrix;
pub mod negativity;
pub mod states;

pub use error::{Error, Result};
pub use matrix::{ComplexMatrix, Eigen, Qubit, Spectrum};
pub use num_complex::Complex64;
