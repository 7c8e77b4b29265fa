//! The matrix file format and the result report.
//!
//! Input: the declared number of colors on the first line, `n` on the second,
//! then `n` rows of `n` non-negative integers. Blank lines are ignored.

use std::collections::BTreeSet;
use std::fmt::Write as _;

use wlstab_core::{canonical_relabeling, normalize, ColorMatrix, StableResult};

use crate::CliError;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParsedInput {
    pub matrix: ColorMatrix,
    pub declared_colors: u64,
    /// Distinct values among the entries.
    pub observed_colors: usize,
    /// Input value of each color of `matrix`.
    pub input_values: Vec<u64>,
}

impl ParsedInput {
    pub fn warning(&self) -> Option<String> {
        (self.declared_colors != self.observed_colors as u64).then(|| {
            format!(
                "declared {} colors but the matrix has {} distinct entries; using the matrix",
                self.declared_colors, self.observed_colors
            )
        })
    }
}

fn parse_error(line: usize, message: impl Into<String>) -> CliError {
    CliError::Parse {
        line,
        message: message.into(),
    }
}

fn number(token: &str, line: usize) -> Result<u64, CliError> {
    token.parse().map_err(|_| {
        parse_error(
            line,
            format!("expected a non-negative integer, found {token:?}"),
        )
    })
}

fn single(tokens: &[&str], line: usize, what: &str) -> Result<u64, CliError> {
    match tokens {
        [t] => number(t, line),
        _ => Err(parse_error(
            line,
            format!("expected {what} alone on the line"),
        )),
    }
}

pub fn parse_input(text: &str) -> Result<ParsedInput, CliError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split_whitespace().collect::<Vec<_>>()))
        .filter(|(_, tokens)| !tokens.is_empty());
    let last_line = text.lines().count().max(1);

    let (line, tokens) = lines
        .next()
        .ok_or_else(|| parse_error(1, "missing color count"))?;
    let declared_colors = single(&tokens, line, "the color count")?;
    let (line, tokens) = lines
        .next()
        .ok_or_else(|| parse_error(last_line, "missing vertex count"))?;
    let n = single(&tokens, line, "the vertex count")? as usize;
    if n == 0 {
        return Err(parse_error(line, "vertex count must be positive"));
    }

    let mut rows = Vec::with_capacity(n);
    for row in 0..n {
        let (line, tokens) = lines.next().ok_or_else(|| {
            parse_error(last_line, format!("expected {n} matrix rows, found {row}"))
        })?;
        if tokens.len() != n {
            return Err(parse_error(
                line,
                format!("expected {n} entries, found {}", tokens.len()),
            ));
        }
        let values = tokens
            .iter()
            .map(|t| number(t, line))
            .collect::<Result<Vec<u64>, _>>()?;
        rows.push(values);
    }
    if let Some((line, _)) = lines.next() {
        return Err(parse_error(line, format!("unexpected data after {n} rows")));
    }

    let observed_colors = rows.iter().flatten().collect::<BTreeSet<_>>().len();
    let matrix = normalize(&rows)?;
    let mut input_values = vec![0; matrix.rank()];
    for (&c, &value) in matrix.as_slice().iter().zip(rows.iter().flatten()) {
        input_values[c as usize] = value;
    }
    Ok(ParsedInput {
        matrix,
        declared_colors,
        observed_colors,
        input_values,
    })
}

/// Serializes `m` in the input format.
pub fn write_input(m: &ColorMatrix) -> String {
    let mut out = format!("{}\n{}\n", m.rank(), m.n());
    for row in m.rows() {
        let cells: Vec<String> = row.iter().map(u32::to_string).collect();
        out.push_str(&cells.join(" "));
        out.push('\n');
    }
    out
}

/// Header lines, the stable matrix in canonical numbering and, if requested,
/// one `p i j k value` line per nonzero structure constant.
pub fn emit_result(res: &StableResult, with_constants: bool) -> String {
    let map = canonical_relabeling(&res.stable);
    let mut out = String::new();
    writeln!(out, "rank={}", res.rank).unwrap();
    writeln!(out, "cells={}", res.cells).unwrap();
    writeln!(out, "iterations={}", res.iterations).unwrap();
    for row in res.stable.rows() {
        let cells: Vec<String> = row.iter().map(|&c| map[c as usize].to_string()).collect();
        out.push_str(&cells.join(" "));
        out.push('\n');
    }
    if with_constants {
        if let Some(constants) = &res.constants {
            let mut lines: Vec<((u32, u32, u32), u32)> = constants
                .relabeled(&map)
                .iter()
                .map(|((i, j, k), p)| ((k, i, j), p))
                .collect();
            lines.sort_unstable();
            for ((k, i, j), p) in lines {
                writeln!(out, "p {i} {j} {k} {p}").unwrap();
            }
        }
    }
    out
}
