//! Text formats for algebras and almost complex structures.
//!
//! `.lie` files:
//!
//! ```text
//! # nil^3 x R
//! dim 4
//! 1 3 2 1
//! ```
//!
//! The first non-comment line is `dim n`; each further line `i j k c`
//! sets the coefficient of `f_k` in `[f_i, f_j]` to `c` (`i < j`, `c` an
//! integer or `p/q`). `#` starts a comment.
//!
//! J files hold `n` lines of `n` rationals; row `h`, column `k` is the
//! coefficient of `f_h` in `J f_k`.

use std::collections::BTreeSet;

use crate::acs::AlmostComplexStructure;
use crate::error::{Error, Result};
use crate::lie::{LieAlgebra, StructureConstant};
use crate::linalg::Matrix;
use crate::scalar::{self, Scalar};

fn parse_err(line: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        message: message.into(),
    }
}

/// Non-empty lines with comments stripped, paired with 1-based line numbers.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines().enumerate().filter_map(|(i, raw)| {
        let line = raw.split('#').next().unwrap_or("").trim();
        (!line.is_empty()).then_some((i + 1, line))
    })
}

fn parse_index(tok: &str, line: usize, dim: usize) -> Result<usize> {
    let i: usize = tok
        .parse()
        .map_err(|_| parse_err(line, format!("`{tok}` is not an index")))?;
    if i == 0 || i > dim {
        return Err(parse_err(line, format!("index {i} outside 1..={dim}")));
    }
    Ok(i)
}

fn parse_scalar(tok: &str, line: usize) -> Result<Scalar> {
    scalar::parse(tok).ok_or_else(|| parse_err(line, format!("`{tok}` is not a rational")))
}

pub fn parse_lie(text: &str) -> Result<LieAlgebra> {
    let mut lines = content_lines(text);
    let (first, header) = lines.next().ok_or_else(|| parse_err(1, "missing `dim n` line"))?;
    let dim = match header.split_whitespace().collect::<Vec<_>>().as_slice() {
        ["dim", n] => n
            .parse::<usize>()
            .ok()
            .filter(|&n| n > 0)
            .ok_or_else(|| parse_err(first, format!("bad dimension `{n}`")))?,
        _ => return Err(parse_err(first, "expected `dim n`")),
    };
    let mut seen = BTreeSet::new();
    let mut constants = Vec::new();
    for (no, line) in lines {
        let toks: Vec<&str> = line.split_whitespace().collect();
        if toks.len() != 4 {
            return Err(parse_err(no, "expected `i j k coefficient`"));
        }
        let i = parse_index(toks[0], no, dim)?;
        let j = parse_index(toks[1], no, dim)?;
        let k = parse_index(toks[2], no, dim)?;
        let c = parse_scalar(toks[3], no)?;
        if i >= j {
            return Err(parse_err(no, format!("need i < j, got {i} {j}")));
        }
        if !seen.insert((i, j, k)) {
            return Err(parse_err(no, format!("duplicate constant {i} {j} {k}")));
        }
        constants.push(StructureConstant::new(i, j, k, c));
    }
    LieAlgebra::new(dim, &constants)
}

pub fn write_lie(g: &LieAlgebra, comment: Option<&str>) -> String {
    let mut out = String::new();
    if let Some(c) = comment {
        for line in c.lines() {
            out.push_str(&format!("# {line}\n"));
        }
    }
    out.push_str(&format!("dim {}\n", g.dim()));
    for sc in g.structure_constants() {
        out.push_str(&format!("{} {} {} {}\n", sc.i, sc.j, sc.k, scalar::format(&sc.coeff)));
    }
    out
}

pub fn parse_matrix(text: &str) -> Result<Matrix> {
    let mut rows = Vec::new();
    for (no, line) in content_lines(text) {
        let row = line
            .split_whitespace()
            .map(|t| parse_scalar(t, no))
            .collect::<Result<Vec<_>>>()?;
        if let Some(width) = rows.first().map(Vec::len) {
            if row.len() != width {
                return Err(parse_err(no, format!("expected {width} entries, found {}", row.len())));
            }
        }
        rows.push(row);
    }
    let n = rows.len();
    if n == 0 {
        return Err(parse_err(1, "empty matrix"));
    }
    if rows[0].len() != n {
        return Err(parse_err(1, format!("matrix is {n} x {}, not square", rows[0].len())));
    }
    Ok(Matrix::from_rows(&rows, n))
}

pub fn parse_acs(text: &str) -> Result<AlmostComplexStructure> {
    AlmostComplexStructure::new(parse_matrix(text)?)
}

pub fn write_matrix(m: &Matrix) -> String {
    let mut out = String::new();
    for row in m.to_rows() {
        let cells: Vec<String> = row.iter().map(scalar::format).collect();
        out.push_str(&cells.join(" "));
        out.push('\n');
    }
    out
}

/// Parses `"a,b,c"` or `"a,b,c;d"` into H⁺ and optional H⁻ coordinates.
pub fn parse_class(text: &str) -> Result<(Vec<Scalar>, Option<Vec<Scalar>>)> {
    let list = |s: &str| -> Result<Vec<Scalar>> {
        s.split(',')
            .map(|t| parse_scalar(t.trim(), 1))
            .collect()
    };
    match text.split_once(';') {
        Some((p, m)) => Ok((list(p)?, Some(list(m)?))),
        None => Ok((list(text)?, None)),
    }
}
