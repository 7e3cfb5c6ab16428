//! Circuits as an N×M table of elementary gates.
//!
//! A Toffoli gate occupies one column as a vertical chain: a source
//! (`Iv`/`I^`) that emits its row's value, multiply gates that fold in
//! further control rows, pass-through crosses (`I+`), and an add gate that
//! XORs the accumulated product into the target row.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use crate::error::{BrokenChain, ChainFault, Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Gate {
    Identity,
    IdentityCross,
    IdentityDown,
    IdentityUp,
    MultiplyDown,
    MultiplyUp,
    AddDown,
    AddUp,
    Hadamard,
}

impl Gate {
    pub const ALL: [Gate; 9] = [
        Gate::Identity,
        Gate::IdentityCross,
        Gate::IdentityDown,
        Gate::IdentityUp,
        Gate::MultiplyDown,
        Gate::MultiplyUp,
        Gate::AddDown,
        Gate::AddUp,
        Gate::Hadamard,
    ];

    pub fn token(self) -> &'static str {
        match self {
            Gate::Identity => "I",
            Gate::IdentityCross => "I+",
            Gate::IdentityDown => "Iv",
            Gate::IdentityUp => "I^",
            Gate::MultiplyDown => "Mv",
            Gate::MultiplyUp => "M^",
            Gate::AddDown => "Av",
            Gate::AddUp => "A^",
            Gate::Hadamard => "H",
        }
    }

    /// Role of the gate for a vertical signal travelling in `dir`.
    fn role(self, dir: Direction) -> Role {
        use Gate::*;
        match (self, dir) {
            (IdentityCross, _) => Role::Pass,
            (IdentityDown, Direction::Down) | (IdentityUp, Direction::Up) => Role::Source,
            (MultiplyDown, Direction::Down) | (MultiplyUp, Direction::Up) => Role::Multiply,
            (AddDown, Direction::Down) | (AddUp, Direction::Up) => Role::Sink,
            _ => Role::Inert,
        }
    }
}

impl fmt::Display for Gate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.token())
    }
}

impl FromStr for Gate {
    type Err = String;

    fn from_str(s: &str) -> Result<Gate, String> {
        Gate::ALL
            .into_iter()
            .find(|g| g.token() == s)
            .ok_or_else(|| format!("unknown gate `{s}`"))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Direction {
    Down,
    Up,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Role {
    Source,
    Pass,
    Multiply,
    Sink,
    Inert,
}

/// One vertical chain of a column, rows 0-based.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Chain {
    pub direction: Direction,
    pub source: usize,
    /// Rows of multiply gates, in the order the signal visits them.
    pub multipliers: Vec<usize>,
    pub sink: usize,
}

impl Chain {
    /// Source plus multiply rows: the controls of the Toffoli.
    pub fn controls(&self) -> impl Iterator<Item = usize> + '_ {
        std::iter::once(self.source).chain(self.multipliers.iter().copied())
    }
}

/// Checks the vertical chains of one column and returns them.
///
/// `column_index` is 0-based and only used for error reporting.
pub fn column_chains(column: &[Gate], column_index: usize) -> Result<Vec<Chain>, BrokenChain> {
    let mut chains = Vec::new();
    for dir in [Direction::Down, Direction::Up] {
        let rows: Vec<usize> = match dir {
            Direction::Down => (0..column.len()).collect(),
            Direction::Up => (0..column.len()).rev().collect(),
        };
        let fault = |row: usize, fault| BrokenChain {
            column: column_index + 1,
            row: row + 1,
            fault,
        };
        let mut open: Option<Chain> = None;
        for row in rows {
            let gate = column[row];
            match (gate.role(dir), open.as_mut()) {
                (Role::Source, None) => {
                    open = Some(Chain {
                        direction: dir,
                        source: row,
                        multipliers: Vec::new(),
                        sink: row,
                    })
                }
                (Role::Source, Some(_)) => return Err(fault(row, ChainFault::MissingSink)),
                (Role::Multiply | Role::Sink, None) => return Err(fault(row, ChainFault::MissingSource)),
                (Role::Multiply, Some(chain)) => chain.multipliers.push(row),
                (Role::Sink, Some(_)) => {
                    let mut chain = open.take().expect("open chain");
                    chain.sink = row;
                    chains.push(chain);
                }
                (Role::Pass, _) | (Role::Inert, None) => {}
                (Role::Inert, Some(_)) => return Err(fault(row, ChainFault::BlockedBy(gate))),
            }
        }
        if let Some(chain) = open {
            return Err(fault(chain.source, ChainFault::DanglingEmitter));
        }
    }
    Ok(chains)
}

pub fn validate_column(column: &[Gate], column_index: usize) -> Result<(), BrokenChain> {
    column_chains(column, column_index).map(|_| ())
}

/// A validated N×M grid of elementary gates.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Circuit {
    qubits: usize,
    // columns[c][r]
    columns: Vec<Vec<Gate>>,
    hadamards: usize,
}

impl Circuit {
    /// All-identity circuit.
    pub fn identity(qubits: usize, columns: usize) -> Result<Circuit> {
        Circuit::from_columns(qubits, vec![vec![Gate::Identity; qubits]; columns])
    }

    pub fn from_columns(qubits: usize, columns: Vec<Vec<Gate>>) -> Result<Circuit> {
        if qubits == 0 || columns.is_empty() {
            return Err(Error::InvalidArgument(
                "a circuit needs at least one qubit and one column".into(),
            ));
        }
        for (c, column) in columns.iter().enumerate() {
            if column.len() != qubits {
                return Err(Error::InvalidArgument(format!(
                    "column {} has {} cells, expected {qubits}",
                    c + 1,
                    column.len()
                )));
            }
            validate_column(column, c)?;
        }
        let hadamards = columns
            .iter()
            .flatten()
            .filter(|&&g| g == Gate::Hadamard)
            .count();
        Ok(Circuit {
            qubits,
            columns,
            hadamards,
        })
    }

    /// Builds from rows, `rows[r][c]`.
    pub fn from_rows(rows: Vec<Vec<Gate>>) -> Result<Circuit> {
        let qubits = rows.len();
        let width = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != width) {
            return Err(Error::InvalidArgument("rows have different lengths".into()));
        }
        let columns = (0..width)
            .map(|c| rows.iter().map(|r| r[c]).collect())
            .collect();
        Circuit::from_columns(qubits, columns)
    }

    pub fn qubits(&self) -> usize {
        self.qubits
    }

    pub fn n_columns(&self) -> usize {
        self.columns.len()
    }

    /// Number of Hadamard cells, which is also the number of path variables.
    pub fn hadamard_count(&self) -> usize {
        self.hadamards
    }

    pub fn columns(&self) -> &[Vec<Gate>] {
        &self.columns
    }

    pub fn gate(&self, row: usize, column: usize) -> Gate {
        self.columns[column][row]
    }

    /// Prefix of the first `n` columns.
    pub fn prefix(&self, n: usize) -> Result<Circuit> {
        Circuit::from_columns(self.qubits, self.columns[..n].to_vec())
    }

    /// Places a multi-controlled X in one column. Rows and column are 0-based.
    ///
    /// The target must lie strictly above or strictly below every control.
    /// The farthest control becomes the chain's source, the other controls
    /// multiply gates, and non-control rows in between become crosses.
    pub fn place_toffoli(&self, column: usize, controls: &[usize], target: usize) -> Result<Circuit> {
        self.check_column(column)?;
        let controls: BTreeSet<usize> = controls.iter().copied().collect();
        let (Some(&lo), Some(&hi)) = (controls.first(), controls.last()) else {
            return Err(Error::InvalidArgument("a Toffoli needs at least one control".into()));
        };
        if hi >= self.qubits || target >= self.qubits {
            return Err(Error::InvalidArgument(format!(
                "row out of range for a {}-qubit circuit",
                self.qubits
            )));
        }
        if controls.contains(&target) {
            return Err(Error::InvalidArgument(format!(
                "row {} is both control and target",
                target + 1
            )));
        }
        let (source, source_gate, multiply, sink) = if target > hi {
            (lo, Gate::IdentityDown, Gate::MultiplyDown, Gate::AddDown)
        } else if target < lo {
            (hi, Gate::IdentityUp, Gate::MultiplyUp, Gate::AddUp)
        } else {
            return Err(Error::Unsupported(format!(
                "target row {} lies between control rows {} and {}",
                target + 1,
                lo + 1,
                hi + 1
            )));
        };

        let mut col = self.columns[column].clone();
        let (top, bottom) = (source.min(target), source.max(target));
        for (row, cell) in col.iter_mut().enumerate().take(bottom + 1).skip(top) {
            let wanted = if row == source {
                source_gate
            } else if row == target {
                sink
            } else if controls.contains(&row) {
                multiply
            } else {
                Gate::IdentityCross
            };
            let current = *cell;
            let free = current == Gate::Identity || (current == Gate::IdentityCross && wanted == Gate::IdentityCross);
            if !free {
                return Err(Error::Conflict {
                    row: row + 1,
                    column: column + 1,
                    gate: current,
                });
            }
            *cell = wanted;
        }
        self.with_column(column, col)
    }

    /// Places a Hadamard at (row, column), 0-based.
    pub fn place_hadamard(&self, column: usize, row: usize) -> Result<Circuit> {
        self.check_column(column)?;
        if row >= self.qubits {
            return Err(Error::InvalidArgument(format!("row {} out of range", row + 1)));
        }
        let current = self.columns[column][row];
        if current != Gate::Identity {
            return Err(Error::Conflict {
                row: row + 1,
                column: column + 1,
                gate: current,
            });
        }
        let mut col = self.columns[column].clone();
        col[row] = Gate::Hadamard;
        self.with_column(column, col)
    }

    /// Appends an all-identity column.
    pub fn push_column(&self) -> Circuit {
        let mut next = self.clone();
        next.columns.push(vec![Gate::Identity; self.qubits]);
        next
    }

    fn check_column(&self, column: usize) -> Result<()> {
        if column >= self.columns.len() {
            return Err(Error::InvalidArgument(format!("column {} out of range", column + 1)));
        }
        Ok(())
    }

    fn with_column(&self, index: usize, column: Vec<Gate>) -> Result<Circuit> {
        validate_column(&column, index)?;
        let mut next = self.clone();
        next.hadamards = next.hadamards + column.iter().filter(|&&g| g == Gate::Hadamard).count()
            - next.columns[index].iter().filter(|&&g| g == Gate::Hadamard).count();
        next.columns[index] = column;
        Ok(next)
    }
}
