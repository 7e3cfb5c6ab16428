//! Sum-over-paths simulation of circuits built from Hadamard and Toffoli
//! gates.
//!
//! A circuit is a table of elementary gates ([`circuit`], [`dsl`]). It
//! compiles to polynomials over Z₂ ([`compile`], [`gf2`]): one output
//! polynomial per qubit plus a phase polynomial. A matrix element
//! `⟨b|U|a⟩` is `(N₀ − N₁)/√(2^h)`, where `N₀`/`N₁` count the common roots of
//! the systems `{f_i, φ}` and `{f_i, φ + 1}`. [`solver`] computes those
//! counts by enumeration or via Boolean Gröbner bases ([`groebner`]), and
//! [`dense`] builds the unitary directly as an independent reference.

pub mod amplitude;
pub mod bits;
pub mod circuit;
pub mod compile;
pub mod dense;
pub mod dsl;
pub mod error;
pub mod gf2;
pub mod groebner;
pub mod matrix;
pub mod solver;

pub use amplitude::Amplitude;
pub use circuit::{Circuit, Gate};
pub use compile::{compile, PolySystem};
pub use error::{BrokenChain, ChainFault, Error, Result};
pub use gf2::{Monomial, OrderKind, Poly, TermOrder, Var, VarKind, VarRegistry};
pub use groebner::{buchberger, normal_form, GroebnerBasis};
pub use matrix::ExactMatrix;
pub use solver::{CountPair, Limits, Method};
