//! Exact-arithmetic combinatorics of the Genocchi family: integer
//! sequences from the Seidel triangle, q-Gandhi and normalized median
//! Genocchi polynomials, Dumont permutations, Dellac configurations,
//! Dellac histories, and the statistic-preserving bijections connecting
//! them.
//!
//! Everything is exhaustively verifiable at desk scale; no floating
//! point is used anywhere.
//!
//! - [`sequences`]: Seidel triangle, `G_{2n}`, `H_{2n+1}`, `h_n`
//! - [`qpolys`]: exact polynomial arithmetic, `C_n(x,q)`, `cbar_n(q)`,
//!   λ weights and the truncated continued fraction
//! - [`permutations`]: Dumont permutations, normalized classes, the `st`
//!   statistic, enumeration
//! - [`dellac`]: Dellac configurations, inversions and refinements,
//!   switching, `h̃_n(q)`
//! - [`dumont`]: the bijection `φ : DC(n) -> D'_{n+1}` and its inverse
//! - [`histories`]: Dyck paths, Dellac histories, the bijection
//!   `Φ : DC(n) -> DH(n)` and its inverse

// inequality chains and index maps keep the shapes of the formulas they
// implement
#![allow(
    clippy::int_plus_one,
    clippy::manual_is_multiple_of,
    clippy::manual_div_ceil
)]

pub mod dellac;
pub mod dumont;
pub mod error;
pub mod histories;
pub mod permutations;
pub mod qpolys;
pub mod sequences;

pub use error::{Error, Result};
