//! Generator-matrix text format.
//!
//! ```text
//! # comments and blank lines are ignored
//! field gf 4 modulus=[1,1,1]
//! 3 6
//! 1 0 0 1 1     1
//! 0 1 0 1 [0,1] [1,1]
//! 0 0 1 1 [1,1] [0,1]
//! ```
//!
//! The field line is `field rationals`, `field gf <p>` or
//! `field gf <p>^<m> modulus=[c0,...,1]`; then `<k> <n>` and `k` rows of `n`
//! entries.

use std::fmt;

use crate::algebra::{Field, Matrix};
use crate::error::Error;

use super::linear::Code;

/// Input error located at a 1-based line and column.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CodeFileError {
    pub line: usize,
    pub column: usize,
    pub message: String,
}

impl fmt::Display for CodeFileError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "line {}, column {}: {}", self.line, self.column, self.message)
    }
}

impl std::error::Error for CodeFileError {}

/// Whitespace-separated tokens of a line with their 1-based columns; a
/// bracketed group `[a, b]` counts as one token even if it contains spaces.
fn tokens(line: &str) -> Vec<(usize, String)> {
    let mut out = Vec::new();
    let mut chars = line.char_indices().peekable();
    while let Some(&(start, c)) = chars.peek() {
        if c.is_whitespace() {
            chars.next();
            continue;
        }
        let mut tok = String::new();
        let mut depth = 0;
        while let Some(&(_, c)) = chars.peek() {
            if c.is_whitespace() && depth == 0 {
                break;
            }
            match c {
                '[' => depth += 1,
                ']' => depth -= 1,
                _ => {}
            }
            if !c.is_whitespace() {
                tok.push(c);
            }
            chars.next();
        }
        out.push((start + 1, tok));
    }
    out
}

/// Parses a code file; zero columns are rejected unless allowed.
pub fn parse_code(text: &str, allow_zero_columns: bool) -> Result<Code, CodeFileError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("")))
        .filter(|(_, l)| !l.trim().is_empty());
    let err = |line: usize, column: usize, message: String| CodeFileError { line, column, message };
    let eof = |what: &str| err(text.lines().count().max(1), 1, format!("unexpected end of file, expected {what}"));

    let (ln, field_line) = lines.next().ok_or_else(|| eof("a field line"))?;
    let trimmed = field_line.trim_start();
    let col = field_line.len() - trimmed.len() + 1;
    let desc = trimmed
        .strip_prefix("field")
        .filter(|rest| rest.starts_with(char::is_whitespace))
        .ok_or_else(|| err(ln, col, "expected `field <descriptor>`".into()))?;
    let field: Field = desc
        .trim()
        .parse()
        .map_err(|e: Error| err(ln, col + 6, e.to_string()))?;

    let (ln, dims) = lines.next().ok_or_else(|| eof("`<k> <n>`"))?;
    let toks = tokens(dims);
    if toks.len() != 2 {
        return Err(err(ln, toks.first().map_or(1, |t| t.0), "expected `<k> <n>`".into()));
    }
    let parse_usize = |(c, t): &(usize, String)| {
        t.parse::<usize>()
            .map_err(|_| err(ln, *c, format!("expected a nonnegative integer, found {t:?}")))
    };
    let k = parse_usize(&toks[0])?;
    let n = parse_usize(&toks[1])?;
    if k == 0 || n == 0 {
        return Err(err(ln, toks[0].0, "dimensions must be positive".into()));
    }

    let mut rows = Vec::with_capacity(k);
    let mut last_line = ln;
    for r in 0..k {
        let (ln, row) = lines.next().ok_or_else(|| eof(&format!("row {} of the matrix", r + 1)))?;
        last_line = ln;
        let toks = tokens(row);
        if toks.len() != n {
            let col = toks.get(n).map_or(row.len() + 1, |t| t.0);
            return Err(err(ln, col, format!("expected {n} entries, found {}", toks.len())));
        }
        let entries = toks
            .iter()
            .map(|(c, t)| field.parse_elem(t).map_err(|e| err(ln, *c, e.to_string())))
            .collect::<Result<Vec<_>, _>>()?;
        rows.push(entries);
    }
    if let Some((ln, _)) = lines.next() {
        return Err(err(ln, 1, "trailing content after the matrix".into()));
    }
    let g = Matrix::from_rows(field.clone(), rows).map_err(|e| err(last_line, 1, e.to_string()))?;
    Code::new(field, g, allow_zero_columns).map_err(|e| err(last_line, 1, e.to_string()))
}

/// Writes a code in the format read by [`parse_code`].
pub fn format_code(code: &Code) -> String {
    let f = code.field();
    let g = code.generator();
    let mut out = format!("field {f}\n{} {}\n", g.rows(), g.cols());
    for r in 0..g.rows() {
        let row: Vec<String> = g.row(r).iter().map(|e| f.format_elem(e)).collect();
        out.push_str(&row.join(" "));
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    const HEXACODE: &str = "\
# hexacode
field gf 4 modulus=[1,1,1]
3 6
1 0 0 1 1     1
0 1 0 1 [0,1] [1,1]
0 0 1 1 [1,1] [0,1]
";

    #[test]
    fn parses_hexacode_and_round_trips() {
        let c = parse_code(HEXACODE, false).unwrap();
        assert_eq!((c.len(), c.dim()), (6, 3));
        let again = parse_code(&format_code(&c), false).unwrap();
        assert_eq!(again.generator(), c.generator());
    }

    #[test]
    fn rationals_and_negative_entries() {
        let c = parse_code("field rationals\n2 3\n1/2 0 -1\n0 1 3/4\n", false).unwrap();
        assert_eq!(c.field(), &Field::Rationals);
        let c = parse_code("field gf 5\n1 2\n-1 7\n", false).unwrap();
        assert_eq!(format_code(&c), "field gf 5\n1 2\n4 2\n");
    }

    #[test]
    fn errors_name_line_and_column() {
        let e = parse_code("field gf 6\n1 1\n1\n", false).unwrap_err();
        assert_eq!((e.line, e.column), (1, 7));
        let e = parse_code("field gf 2\n2 3\n1 0 1\n0 x 1\n", false).unwrap_err();
        assert_eq!((e.line, e.column), (4, 3));
        let e = parse_code("field gf 2\n1 3\n1 0\n", false).unwrap_err();
        assert_eq!(e.line, 3);
        let e = parse_code("field gf 2\n2 2\n1 1\n1 1\n", false).unwrap_err();
        assert!(e.message.contains("rank"), "{e}");
        let e = parse_code("gf 2\n", false).unwrap_err();
        assert_eq!((e.line, e.column), (1, 1));
        let e = parse_code("field gf 2\n1 2\n", false).unwrap_err();
        assert!(e.message.contains("end of file"));
    }
}
