//! Computation of the Sakuma η-polynomial of strongly invertible knots.
//!
//! The crate implements the full symbolic pipeline on *leveled quotient
//! diagrams*: the signed crossing tally η̃, the substitution
//! `x_i = t^{i-1} - 2t^i + t^{i+1}`, the bracket normalization that pins the
//! constant and linear terms, closed forms for the `(K_n, τ)` / `(K_n, σ)`
//! families, and a covering-space linking-number oracle that recomputes the
//! same coefficients from a truncated diagram of the lifts.  A separate
//! fundamental-group engine (Wirtinger presentations, Tietze simplification,
//! Smith normal form) certifies simple-connectivity of the handle-cobordism
//! presentations.
//!
//! Everything is exact integer / rational arithmetic; there is no floating
//! point anywhere. The crate is `no_std` (requires `alloc`); IO, file formats
//! and the CLI live in the companion `etakit` crate.

#![no_std]
#![deny(unsafe_code)]

extern crate alloc;

pub mod cover;
pub mod diagram;
pub mod eta;
pub mod laurent;
pub mod pi1;
pub mod quotient;
pub mod snf;

pub use laurent::{LaurentPoly, SymBracket};
pub use quotient::{EtaTilde, LeveledQuotient};
