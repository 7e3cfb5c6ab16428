//! Matrix elements from root counts:
//! `⟨b|U|a⟩ = (N₀ − N₁) / √(2^h)`, where `N₀`/`N₁` count the path
//! assignments that reach `b` with phase 0/1.

use std::fmt;

use rayon::prelude::*;

use crate::amplitude::Amplitude;
use crate::bits::{bits_to_index, check_len, index_to_bits};
use crate::circuit::Circuit;
use crate::compile::{compile, PolySystem};
use crate::error::{Error, Result};
use crate::gf2::{Poly, TermOrder, Var};
use crate::groebner::{buchberger, MAX_COUNT_VARS};
use crate::matrix::ExactMatrix;

/// Size guards for the exponential parts of the pipeline.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    /// Largest `h` brute-force enumeration accepts.
    pub max_paths: usize,
    /// Largest `N` for full matrices.
    pub max_qubits: usize,
}

impl Default for Limits {
    fn default() -> Limits {
        Limits {
            max_paths: 24,
            max_qubits: 10,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Method {
    Brute,
    Groebner,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct CountPair {
    pub n0: u64,
    pub n1: u64,
}

impl CountPair {
    /// `(n0 − n1) / √(2^paths)`.
    pub fn amplitude(&self, paths: usize) -> Amplitude {
        Amplitude::new(self.n0 as i128 - self.n1 as i128, paths as u32)
    }
}

impl fmt::Display for CountPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "N0={}, N1={}", self.n0, self.n1)
    }
}

fn bind_inputs(ps: &PolySystem, a: &[bool]) -> Result<(Vec<Poly>, Poly)> {
    let bindings = ps.parameter_bindings(Some(a), None)?;
    let rows = ps
        .row_polys()
        .iter()
        .map(|p| p.substitute(&bindings, ps.registry()))
        .collect::<Result<Vec<_>>>()?;
    let phase = ps.phase().substitute(&bindings, ps.registry())?;
    Ok((rows, phase))
}

/// `(N₀, N₁)` for every output string, indexed big-endian, by enumerating
/// all `2^h` path assignments once.
pub fn counts_for_input(ps: &PolySystem, a: &[bool], limits: &Limits) -> Result<Vec<CountPair>> {
    let h = ps.paths();
    if h > limits.max_paths {
        return Err(Error::CapExceeded {
            what: "number of Hadamard gates",
            limit: limits.max_paths,
            actual: h,
        });
    }
    let (rows, phase) = bind_inputs(ps, a)?;
    let mut counts = vec![CountPair::default(); 1 << ps.qubits()];
    for k in 0..(1u64 << h) {
        // x1 is registry slot 0, the top bit
        let point = if h == 0 { 0 } else { k << (64 - h) };
        let out = rows.iter().fold(0usize, |acc, p| (acc << 1) | p.eval_bits(point) as usize);
        if phase.eval_bits(point) {
            counts[out].n1 += 1;
        } else {
            counts[out].n0 += 1;
        }
    }
    Ok(counts)
}

pub fn count_bruteforce(ps: &PolySystem, a: &[bool], b: &[bool], limits: &Limits) -> Result<CountPair> {
    check_len(b, ps.qubits())?;
    Ok(counts_for_input(ps, a, limits)?[bits_to_index(b)])
}

/// Root counts of the bound systems `F₀` and `F₁` via lexicographic
/// Gröbner bases over the path variables.
pub fn count_groebner(ps: &PolySystem, a: &[bool], b: &[bool]) -> Result<CountPair> {
    if ps.paths() > MAX_COUNT_VARS {
        return Err(Error::CapExceeded {
            what: "number of variables to count over",
            limit: MAX_COUNT_VARS,
            actual: ps.paths(),
        });
    }
    let (f0, f1) = ps.assemble_systems(Some(a), Some(b))?;
    let paths: Vec<Var> = (1..=ps.paths() as u32).map(Var::path).collect();
    let order = TermOrder::lex();
    let n0 = buchberger(&f0, &order, ps.registry())?.count_roots(&paths)?;
    let n1 = buchberger(&f1, &order, ps.registry())?.count_roots(&paths)?;
    Ok(CountPair { n0, n1 })
}

pub fn count(ps: &PolySystem, a: &[bool], b: &[bool], method: Method, limits: &Limits) -> Result<CountPair> {
    match method {
        Method::Brute => count_bruteforce(ps, a, b, limits),
        Method::Groebner => count_groebner(ps, a, b),
    }
}

/// `⟨b|U|a⟩` for one pair of basis strings.
pub fn element(circuit: &Circuit, a: &[bool], b: &[bool], method: Method, limits: &Limits) -> Result<Amplitude> {
    let ps = compile(circuit)?;
    Ok(count(&ps, a, b, method, limits)?.amplitude(ps.paths()))
}

/// All `2^N × 2^N` elements; row index is `a`, column index is `b`.
pub fn full_matrix(circuit: &Circuit, method: Method, limits: &Limits) -> Result<ExactMatrix> {
    let ps = compile(circuit)?;
    system_matrix(&ps, method, limits)
}

/// [`full_matrix`] for an already compiled system.
pub fn system_matrix(ps: &PolySystem, method: Method, limits: &Limits) -> Result<ExactMatrix> {
    let n = ps.qubits();
    if n > limits.max_qubits {
        return Err(Error::CapExceeded {
            what: "number of qubits",
            limit: limits.max_qubits,
            actual: n,
        });
    }
    let dim = 1usize << n;
    let rows = (0..dim)
        .into_par_iter()
        .map(|ai| -> Result<Vec<Amplitude>> {
            let a = index_to_bits(ai, n);
            let counts = match method {
                Method::Brute => counts_for_input(ps, &a, limits)?,
                Method::Groebner => (0..dim)
                    .map(|bi| count_groebner(ps, &a, &index_to_bits(bi, n)))
                    .collect::<Result<_>>()?,
            };
            Ok(counts.iter().map(|c| c.amplitude(ps.paths())).collect())
        })
        .collect::<Result<Vec<_>>>()?;
    ExactMatrix::from_rows(rows)
}
