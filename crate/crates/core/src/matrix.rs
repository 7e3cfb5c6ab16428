//! Dense square matrices of exact amplitudes and their text/JSON forms.

use std::fmt::Write as _;

use crate::amplitude::Amplitude;
use crate::bits::{format_bits, index_to_bits};
use crate::error::{Error, Result};

/// Row-major `dim × dim` matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExactMatrix {
    dim: usize,
    entries: Vec<Amplitude>,
}

impl ExactMatrix {
    pub fn zeros(dim: usize) -> ExactMatrix {
        ExactMatrix {
            dim,
            entries: vec![Amplitude::zero(); dim * dim],
        }
    }

    pub fn identity(dim: usize) -> ExactMatrix {
        let mut m = ExactMatrix::zeros(dim);
        for i in 0..dim {
            m.set(i, i, Amplitude::one());
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Amplitude>>) -> Result<ExactMatrix> {
        let dim = rows.len();
        if rows.iter().any(|r| r.len() != dim) {
            return Err(Error::InvalidArgument("matrix is not square".into()));
        }
        Ok(ExactMatrix {
            dim,
            entries: rows.into_iter().flatten().collect(),
        })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, row: usize, col: usize) -> &Amplitude {
        &self.entries[row * self.dim + col]
    }

    pub fn set(&mut self, row: usize, col: usize, value: Amplitude) {
        self.entries[row * self.dim + col] = value;
    }

    pub fn row(&self, row: usize) -> &[Amplitude] {
        &self.entries[row * self.dim..(row + 1) * self.dim]
    }

    pub fn rows(&self) -> impl Iterator<Item = &[Amplitude]> {
        self.entries.chunks(self.dim.max(1)).take(self.dim)
    }

    pub fn transpose(&self) -> ExactMatrix {
        let mut t = ExactMatrix::zeros(self.dim);
        for i in 0..self.dim {
            for j in 0..self.dim {
                t.set(j, i, self.get(i, j).clone());
            }
        }
        t
    }

    /// Matrix product `self · rhs`.
    ///
    /// # Panics
    ///
    /// On dimension mismatch, or when an entry sum leaves the `m/√2^e`
    /// form (cannot happen for products of circuit column matrices, whose
    /// nonzero entries share one exponent parity).
    pub fn mul(&self, rhs: &ExactMatrix) -> ExactMatrix {
        assert_eq!(self.dim, rhs.dim, "dimension mismatch");
        let n = self.dim;
        let mut out = ExactMatrix::zeros(n);
        for i in 0..n {
            for k in 0..n {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..n {
                    let b = rhs.get(k, j);
                    if b.is_zero() {
                        continue;
                    }
                    let sum = out.get(i, j) + &(a * b);
                    out.set(i, j, sum);
                }
            }
        }
        out
    }

    /// True when every entry is 0 or 1 and each row and column holds
    /// exactly one 1.
    pub fn is_permutation(&self) -> bool {
        let one = Amplitude::one();
        let mut col_hits = vec![0usize; self.dim];
        for row in self.rows() {
            let mut hits = 0;
            for (j, a) in row.iter().enumerate() {
                if *a == one {
                    hits += 1;
                    col_hits[j] += 1;
                } else if !a.is_zero() {
                    return false;
                }
            }
            if hits != 1 {
                return false;
            }
        }
        col_hits.iter().all(|&h| h == 1)
    }

    /// Squared norm of a row, exactly.
    pub fn row_norm_sq(&self, row: usize) -> Amplitude {
        self.row(row)
            .iter()
            .fold(Amplitude::zero(), |acc, a| &acc + &(a * a))
    }

    /// `Mᵀ·M = I` (entries are real, so the transpose is the adjoint).
    pub fn is_orthogonal(&self) -> bool {
        self.transpose().mul(self) == ExactMatrix::identity(self.dim)
    }

    /// Aligned text table, rows labelled by input bits and columns by
    /// output bits, big-endian.
    pub fn to_table(&self) -> String {
        let n = self.dim.max(1).trailing_zeros() as usize;
        let cells: Vec<String> = self.entries.iter().map(Amplitude::to_string).collect();
        let label = |i: usize| format_bits(&index_to_bits(i, n));
        let width = cells
            .iter()
            .map(|c| c.chars().count())
            .chain(std::iter::once(n.max(1)))
            .max()
            .unwrap_or(1);
        let corner = "a\\b";
        let label_width = n.max(corner.len());
        let mut out = String::new();
        let _ = write!(out, "{corner:<label_width$}");
        for j in 0..self.dim {
            let _ = write!(out, "  {:>width$}", label(j));
        }
        out.push('\n');
        for i in 0..self.dim {
            let _ = write!(out, "{:<label_width$}", label(i));
            for j in 0..self.dim {
                let _ = write!(out, "  {:>width$}", cells[i * self.dim + j]);
            }
            out.push('\n');
        }
        out
    }

    /// Reads back the output of [`ExactMatrix::to_table`].
    pub fn from_table(text: &str) -> Result<ExactMatrix> {
        let rows = text
            .lines()
            .skip(1)
            .filter(|l| !l.trim().is_empty())
            .map(|line| {
                line.split_whitespace()
                    .skip(1)
                    .map(str::parse)
                    .collect::<Result<Vec<Amplitude>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        ExactMatrix::from_rows(rows)
    }

    /// JSON array of rows, each an array of rendered amplitudes.
    pub fn to_json(&self) -> String {
        let rows: Vec<Vec<String>> = self
            .rows()
            .map(|r| r.iter().map(Amplitude::to_string).collect())
            .collect();
        serde_json::to_string(&rows).expect("strings always serialize")
    }

    pub fn from_json(text: &str) -> Result<ExactMatrix> {
        let rows: Vec<Vec<String>> =
            serde_json::from_str(text).map_err(|e| Error::InvalidArgument(format!("bad matrix JSON: {e}")))?;
        let rows = rows
            .iter()
            .map(|r| r.iter().map(|s| s.parse()).collect::<Result<Vec<Amplitude>>>())
            .collect::<Result<Vec<_>>>()?;
        ExactMatrix::from_rows(rows)
    }
}
