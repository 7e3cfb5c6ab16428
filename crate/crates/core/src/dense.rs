//! Reference simulation: the full `2^N × 2^N` unitary of a circuit, built by
//! composing one exact matrix per column.
//!
//! Matrices here use the usual convention `U[out][in] = ⟨out|U|in⟩`. Basis
//! index bits are big-endian: qubit 1 is the most significant bit.

use crate::amplitude::Amplitude;
use crate::circuit::{column_chains, Circuit, Gate};
use crate::error::{Error, Result};
use crate::matrix::ExactMatrix;
use crate::solver::Limits;

fn qubit_mask(row: usize, n: usize) -> usize {
    1 << (n - 1 - row)
}

/// Unitary of one column: Hadamards on H rows and one multi-controlled X
/// per vertical chain. All factors act on disjoint qubits.
pub fn column_unitary(column: &[Gate], n: usize) -> Result<ExactMatrix> {
    if column.len() != n {
        return Err(Error::InvalidArgument(format!(
            "column has {} cells, expected {n}",
            column.len()
        )));
    }
    let chains = column_chains(column, 0)?;
    let h_mask: usize = column
        .iter()
        .enumerate()
        .filter(|(_, g)| **g == Gate::Hadamard)
        .map(|(r, _)| qubit_mask(r, n))
        .sum();
    let h_count = h_mask.count_ones();
    let flips: Vec<(usize, usize)> = chains
        .iter()
        .map(|c| {
            let controls = c.controls().map(|r| qubit_mask(r, n)).sum();
            (controls, qubit_mask(c.sink, n))
        })
        .collect();
    let permute = |state: usize| {
        flips.iter().fold(state, |s, &(controls, target)| {
            if state & controls == controls {
                s ^ target
            } else {
                s
            }
        })
    };

    let dim = 1usize << n;
    let mut u = ExactMatrix::zeros(dim);
    for input in 0..dim {
        let fixed = input & !h_mask;
        // enumerate outputs that agree with the input off the H rows
        let mut sub = h_mask;
        loop {
            let mid = fixed | sub;
            let sign = (input & mid & h_mask).count_ones() % 2;
            let value = Amplitude::new(if sign == 1 { -1 } else { 1 }, h_count);
            u.set(permute(mid), input, value);
            if sub == 0 {
                break;
            }
            sub = (sub - 1) & h_mask;
        }
    }
    Ok(u)
}

/// `U = C_M ⋯ C_2 C_1`, column 1 applied first.
pub fn circuit_unitary(circuit: &Circuit, limits: &Limits) -> Result<ExactMatrix> {
    let n = circuit.qubits();
    if n > limits.max_qubits {
        return Err(Error::CapExceeded {
            what: "number of qubits",
            limit: limits.max_qubits,
            actual: n,
        });
    }
    let mut u = ExactMatrix::identity(1 << n);
    for column in circuit.columns() {
        u = column_unitary(column, n)?.mul(&u);
    }
    Ok(u)
}
