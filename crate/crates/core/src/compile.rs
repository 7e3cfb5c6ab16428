//! Lowering a circuit to its sum-over-paths polynomial system.
//!
//! Each qubit row starts as its input parameter `a_i`. Columns are processed
//! left to right; within a column all vertical signals are computed from the
//! column's input state before any row is updated. A Hadamard discards its
//! input, emits a fresh path variable `x_k`, and contributes `input · x_k` to
//! the phase.

use std::collections::BTreeMap;
use std::sync::Arc;

use crate::bits::check_len;
use crate::circuit::{Circuit, Gate};
use crate::error::Result;
use crate::gf2::{Poly, Var, VarRegistry};

/// Output polynomials `b_i(x; a)` for every row plus the phase `φ(x; a)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolySystem {
    registry: Arc<VarRegistry>,
    row_polys: Vec<Poly>,
    phase: Poly,
    paths: usize,
}

impl PolySystem {
    /// Registry `x1..xh, a1..an, b1..bn`.
    pub fn registry(&self) -> &Arc<VarRegistry> {
        &self.registry
    }

    pub fn row_polys(&self) -> &[Poly] {
        &self.row_polys
    }

    pub fn phase(&self) -> &Poly {
        &self.phase
    }

    /// Number of path variables `h`.
    pub fn paths(&self) -> usize {
        self.paths
    }

    pub fn qubits(&self) -> usize {
        self.row_polys.len()
    }

    /// Bindings `a_i ↦ bits[i]` and/or `b_i ↦ bits[i]`.
    pub fn parameter_bindings(&self, a: Option<&[bool]>, b: Option<&[bool]>) -> Result<BTreeMap<Var, Poly>> {
        let n = self.qubits();
        let mut bindings = BTreeMap::new();
        for (bits, make) in [(a, Var::input as fn(u32) -> Var), (b, Var::output)] {
            if let Some(bits) = bits {
                check_len(bits, n)?;
                for (i, &bit) in bits.iter().enumerate() {
                    let value = if bit { Poly::one() } else { Poly::zero() };
                    bindings.insert(make(i as u32 + 1), value);
                }
            }
        }
        Ok(bindings)
    }

    /// The two systems whose root counts are `N₀` and `N₁`:
    /// `F₀ = {f_1..f_N, φ}` and `F₁ = {f_1..f_N, φ ⊕ 1}` with
    /// `f_i = b_i(x; a) ⊕ b_i`. Unbound parameters stay symbolic.
    pub fn assemble_systems(&self, a: Option<&[bool]>, b: Option<&[bool]>) -> Result<(Vec<Poly>, Vec<Poly>)> {
        let bindings = self.parameter_bindings(a, b)?;
        let mut f0 = Vec::with_capacity(self.qubits() + 1);
        for (i, row) in self.row_polys.iter().enumerate() {
            let b_i = self.registry.poly_var(Var::output(i as u32 + 1))?;
            f0.push((row + &b_i).substitute(&bindings, &self.registry)?);
        }
        let mut f1 = f0.clone();
        let phase = self.phase.substitute(&bindings, &self.registry)?;
        f1.push(&phase + &Poly::one());
        f0.push(phase);
        Ok((f0, f1))
    }
}

/// Compiles a validated circuit.
pub fn compile(circuit: &Circuit) -> Result<PolySystem> {
    let n = circuit.qubits();
    let h = circuit.hadamard_count();
    let registry = Arc::new(VarRegistry::standard(h, n)?);
    let mut state: Vec<Poly> = (1..=n as u32)
        .map(|i| registry.poly_var(Var::input(i)))
        .collect::<Result<_>>()?;
    let mut phase = Poly::zero();
    let mut next_path = 1u32;

    for column in circuit.columns() {
        let input = state.clone();
        let mut signal: Option<Poly> = None;
        for (row, gate) in column.iter().enumerate() {
            match gate {
                Gate::IdentityDown => signal = Some(input[row].clone()),
                Gate::MultiplyDown => signal = signal.map(|v| &v * &input[row]),
                Gate::AddDown => {
                    if let Some(v) = signal.take() {
                        state[row] = &input[row] + &v;
                    }
                }
                _ => {}
            }
        }
        let mut signal: Option<Poly> = None;
        for (row, gate) in column.iter().enumerate().rev() {
            match gate {
                Gate::IdentityUp => signal = Some(input[row].clone()),
                Gate::MultiplyUp => signal = signal.map(|v| &v * &input[row]),
                Gate::AddUp => {
                    if let Some(v) = signal.take() {
                        state[row] = &input[row] + &v;
                    }
                }
                _ => {}
            }
        }
        for (row, gate) in column.iter().enumerate() {
            if *gate == Gate::Hadamard {
                let x = registry.poly_var(Var::path(next_path))?;
                next_path += 1;
                phase += &(&input[row] * &x);
                state[row] = x;
            }
        }
    }

    Ok(PolySystem {
        registry,
        row_polys: state,
        phase,
        paths: h,
    })
}
