//! Line-oriented text format for circuits.
//!
//! ```text
//! qubits 3
//! columns 4
//! H  Iv  H  A^
//! H  Mv  I  M^
//! I  Av  H  I^
//! ```
//!
//! Row `r`, token `c` is the gate at qubit `r`, column `c`. `#` starts a
//! comment that runs to the end of the line.

use crate::circuit::{Circuit, Gate};
use crate::error::{Error, Result};

struct Token<'a> {
    text: &'a str,
    line: usize,
    column: usize,
}

fn syntax(line: usize, column: usize, message: impl Into<String>) -> Error {
    Error::Syntax {
        line,
        column,
        message: message.into(),
    }
}

/// Non-empty lines, comments stripped, each split into positioned tokens.
fn tokenize(text: &str) -> Vec<Vec<Token<'_>>> {
    let mut lines = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let body = raw.split('#').next().unwrap_or("");
        let mut tokens = Vec::new();
        let mut chars = body.char_indices().peekable();
        while let Some(&(start, c)) = chars.peek() {
            if c.is_whitespace() {
                chars.next();
                continue;
            }
            let mut end = body.len();
            while let Some(&(j, c)) = chars.peek() {
                if c.is_whitespace() {
                    end = j;
                    break;
                }
                chars.next();
            }
            tokens.push(Token {
                text: &body[start..end],
                line: i + 1,
                column: body[..start].chars().count() + 1,
            });
        }
        if !tokens.is_empty() {
            lines.push(tokens);
        }
    }
    lines
}

fn header(line: Option<&Vec<Token<'_>>>, keyword: &str, last_line: usize) -> Result<usize> {
    let Some(tokens) = line else {
        return Err(syntax(last_line, 1, format!("missing `{keyword}` line")));
    };
    let first = &tokens[0];
    if first.text != keyword {
        return Err(syntax(
            first.line,
            first.column,
            format!("expected `{keyword}`, found `{}`", first.text),
        ));
    }
    let Some(value) = tokens.get(1) else {
        return Err(syntax(first.line, first.column, format!("`{keyword}` needs a count")));
    };
    if let Some(extra) = tokens.get(2) {
        return Err(syntax(extra.line, extra.column, format!("unexpected `{}`", extra.text)));
    }
    match value.text.parse::<usize>() {
        Ok(n) if n > 0 => Ok(n),
        _ => Err(syntax(
            value.line,
            value.column,
            format!("expected a positive integer, found `{}`", value.text),
        )),
    }
}

/// Parses and validates a circuit.
pub fn parse(text: &str) -> Result<Circuit> {
    let lines = tokenize(text);
    let last_line = text.lines().count().max(1);
    let mut iter = lines.iter();
    let qubits = header(iter.next(), "qubits", last_line)?;
    let width = header(iter.next(), "columns", last_line)?;

    let mut rows = Vec::with_capacity(qubits);
    for line in iter.by_ref().take(qubits) {
        if line.len() != width {
            let at = line.get(width).unwrap_or(&line[line.len() - 1]);
            return Err(syntax(
                at.line,
                at.column,
                format!("expected {width} gates, found {}", line.len()),
            ));
        }
        let row = line
            .iter()
            .map(|t| t.text.parse::<Gate>().map_err(|msg| syntax(t.line, t.column, msg)))
            .collect::<Result<Vec<Gate>>>()?;
        rows.push(row);
    }
    if rows.len() < qubits {
        return Err(syntax(
            last_line,
            1,
            format!("expected {qubits} gate rows, found {}", rows.len()),
        ));
    }
    if let Some(extra) = iter.next() {
        return Err(syntax(extra[0].line, extra[0].column, "unexpected line after the last gate row"));
    }
    Circuit::from_rows(rows)
}

/// Renders a circuit; tokens are left-aligned per column.
pub fn print(circuit: &Circuit) -> String {
    let widths: Vec<usize> = circuit
        .columns()
        .iter()
        .map(|col| col.iter().map(|g| g.token().len()).max().unwrap_or(1))
        .collect();
    let mut out = format!("qubits {}\ncolumns {}\n", circuit.qubits(), circuit.n_columns());
    for row in 0..circuit.qubits() {
        let mut line = String::new();
        for (c, width) in widths.iter().enumerate() {
            if c > 0 {
                line.push_str("  ");
            }
            line.push_str(&format!("{:<width$}", circuit.gate(row, c).token()));
        }
        out.push_str(line.trim_end());
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    pub(crate) const FIG1: &str = "\
qubits 3
columns 4
H  Iv  H  A^
H  Mv  I  M^
I  Av  H  I^
";

    #[test]
    fn parses_worked_example() {
        let c = parse(FIG1).unwrap();
        assert_eq!((c.qubits(), c.n_columns(), c.hadamard_count()), (3, 4, 4));
        assert_eq!(print(&c), FIG1);
    }

    #[test]
    fn comments_and_blank_lines() {
        let text = "# a one-cell circuit\n\nqubits 1   # one wire\ncolumns 1\n\nH # the only gate\n";
        let c = parse(text).unwrap();
        assert_eq!(c.hadamard_count(), 1);
    }

    #[test]
    fn bad_token_is_named() {
        let err = parse("qubits 1\ncolumns 2\nH Qv\n").unwrap_err();
        match err {
            Error::Syntax { line, column, message } => {
                assert_eq!((line, column), (3, 3));
                assert!(message.contains("Qv"), "{message}");
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn structural_errors() {
        assert!(matches!(parse(""), Err(Error::Syntax { .. })));
        assert!(matches!(parse("columns 1\nqubits 1\nH"), Err(Error::Syntax { line: 1, .. })));
        assert!(matches!(parse("qubits 0\ncolumns 1\n"), Err(Error::Syntax { line: 1, column: 8, .. })));
        assert!(matches!(parse("qubits 2\ncolumns 1\nH\n"), Err(Error::Syntax { .. })));
        assert!(matches!(parse("qubits 1\ncolumns 2\nH\n"), Err(Error::Syntax { line: 3, .. })));
        assert!(matches!(parse("qubits 1\ncolumns 1\nH\nH\n"), Err(Error::Syntax { line: 4, .. })));
    }

    #[test]
    fn validation_errors_propagate() {
        let err = parse("qubits 3\ncolumns 1\nIv\nI\nAv\n").unwrap_err();
        assert!(matches!(err, Error::BrokenChain(b) if b.row == 2 && b.column == 1), "{err:?}");
    }
}
