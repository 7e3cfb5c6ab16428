#![allow(dead_code)]

//! Test-only oracles and generators, independent of the library code they
//! check.

use std::sync::Arc;

use pathsum::{Circuit, Gate, Monomial, Poly, Var, VarRegistry};
use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

pub use rand::SeedableRng;

pub type TestRng = ChaCha8Rng;

pub fn rng(seed: u64) -> TestRng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub const FIG1: &str = "\
qubits 3
columns 4
H  Iv  H  A^
H  Mv  I  M^
I  Av  H  I^
";

/// Allowed (signal in, signal out) pairs of a cell for a signal that moves
/// downwards (`down = true`) or upwards.
fn ports(gate: Gate, down: bool) -> &'static [(bool, bool)] {
    use Gate::*;
    const NONE: &[(bool, bool)] = &[(false, false)];
    const PASS: &[(bool, bool)] = &[(false, false), (true, true)];
    const EMIT: &[(bool, bool)] = &[(false, true)];
    const THRU: &[(bool, bool)] = &[(true, true)];
    const SINK: &[(bool, bool)] = &[(true, false)];
    match (gate, down) {
        (IdentityCross, _) => PASS,
        (IdentityDown, true) | (IdentityUp, false) => EMIT,
        (MultiplyDown, true) | (MultiplyUp, false) => THRU,
        (AddDown, true) | (AddUp, false) => SINK,
        _ => NONE,
    }
}

/// Column well-formedness by exhaustive search for a consistent set of
/// vertical wires: a column is valid when, for each direction, some
/// assignment of signals to the N+1 inter-row edges (boundary edges empty)
/// satisfies every cell's port constraints.
pub fn column_valid_by_ports(column: &[Gate]) -> bool {
    let n = column.len();
    [true, false].into_iter().all(|down| {
        (0..1u32 << (n.saturating_sub(1))).any(|inner| {
            // edge[k] is between row k-1 and row k; edge[0] and edge[n] empty
            let edge = |k: usize| k != 0 && k != n && (inner >> (k - 1)) & 1 == 1;
            (0..n).all(|r| {
                let (into, out_of) = if down { (edge(r), edge(r + 1)) } else { (edge(r + 1), edge(r)) };
                ports(column[r], down).contains(&(into, out_of))
            })
        })
    })
}

/// Every column of height `n` over the nine gates.
pub fn all_columns(n: usize) -> Vec<Vec<Gate>> {
    let mut out = vec![vec![]];
    for _ in 0..n {
        out = out
            .into_iter()
            .flat_map(|prefix| {
                Gate::ALL.into_iter().map(move |g| {
                    let mut c = prefix.clone();
                    c.push(g);
                    c
                })
            })
            .collect();
    }
    out
}

pub fn valid_columns(n: usize) -> Vec<Vec<Gate>> {
    all_columns(n)
        .into_iter()
        .filter(|c| column_valid_by_ports(c))
        .collect()
}

fn hadamards(column: &[Gate]) -> usize {
    column.iter().filter(|&&g| g == Gate::Hadamard).count()
}

/// Random valid circuit with at most `max_qubits` rows, `max_columns`
/// columns and `max_h` Hadamards. Columns come from the exhaustive list of
/// port-valid columns, so idle crosses and opposite chains all appear.
pub fn random_circuit(rng: &mut TestRng, pools: &ColumnPools, max_qubits: usize, max_columns: usize, max_h: usize) -> Circuit {
    let n = rng.gen_range(1..=max_qubits);
    let m = rng.gen_range(1..=max_columns);
    let pool = &pools.by_height[n];
    let mut h = 0;
    let mut columns = Vec::with_capacity(m);
    while columns.len() < m {
        let col = pool.choose(rng).unwrap();
        if h + hadamards(col) <= max_h {
            h += hadamards(col);
            columns.push(col.clone());
        }
    }
    Circuit::from_columns(n, columns).unwrap()
}

/// Random circuit of Toffolis only, placed through the library API.
pub fn random_toffoli_circuit(rng: &mut TestRng, n: usize, m: usize) -> Circuit {
    let mut c = Circuit::identity(n, m).unwrap();
    if n < 2 {
        return c;
    }
    for col in 0..m {
        let target = rng.gen_range(0..n);
        let side: Vec<usize> = if target == 0 || (target + 1 < n && rng.gen_bool(0.5)) {
            (target + 1..n).collect()
        } else {
            (0..target).collect()
        };
        let k = rng.gen_range(1..=side.len());
        let controls: Vec<usize> = side.choose_multiple(rng, k).copied().collect();
        c = c.place_toffoli(col, &controls, target).unwrap();
    }
    c
}

pub struct ColumnPools {
    pub by_height: Vec<Vec<Vec<Gate>>>,
}

impl ColumnPools {
    pub fn new(max_height: usize) -> ColumnPools {
        ColumnPools {
            by_height: (0..=max_height).map(valid_columns).collect(),
        }
    }
}

/// Registry of path-like variables `x1..xv`.
pub fn path_registry(v: usize) -> Arc<VarRegistry> {
    Arc::new(VarRegistry::new((1..=v as u32).map(Var::path)).unwrap())
}

pub fn random_poly(rng: &mut TestRng, registry: &VarRegistry, max_terms: usize, max_degree: usize) -> Poly {
    let v = registry.len();
    let terms = rng.gen_range(0..=max_terms);
    Poly::from_terms((0..terms).map(|_| {
        let degree = rng.gen_range(0..=max_degree.min(v));
        let vars: Vec<Var> = registry.vars().choose_multiple(rng, degree).copied().collect();
        registry.monomial(&vars).unwrap()
    }))
}

/// Evaluates by walking the monomials variable by variable.
pub fn eval_naive(p: &Poly, registry: &VarRegistry, assignment: &dyn Fn(Var) -> bool) -> bool {
    p.terms()
        .iter()
        .filter(|t| registry.vars_of(**t).into_iter().all(assignment))
        .count()
        % 2
        == 1
}

/// Number of points of Z₂^vars at which every polynomial vanishes.
pub fn brute_roots(system: &[Poly], registry: &VarRegistry, vars: &[Var]) -> u64 {
    (0..1u64 << vars.len())
        .filter(|&k| {
            let assignment = |v: Var| {
                let i = vars.iter().position(|&w| w == v).expect("variable in counting set");
                (k >> i) & 1 == 1
            };
            system.iter().all(|p| !eval_naive(p, registry, &assignment))
        })
        .count() as u64
}

pub fn monomial(registry: &VarRegistry, vars: &[Var]) -> Monomial {
    registry.monomial(vars).unwrap()
}
