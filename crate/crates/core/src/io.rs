//! Text formats for tables, FD lists and 3DM instances.
//!
//! Tables:
//!
//! ```text
//! @model vague          # optional; otherwise inferred
//! A,B,C                 # header
//! a1,{b1|b2},c1         # vague row
//! (a1,b1,c1)||(a1,b2,c2)  # disjunctive row
//! ```
//!
//! FD lists hold one `A B -> C D` per line. 3DM instances hold `n` on the
//! first line and one `x y z` triple per following line. `#` starts a comment
//! everywhere.

use std::collections::BTreeSet;
use std::fmt::Write as _;

use crate::error::{FdError, Result};
use crate::fd::FunctionalDependency;
use crate::model::{
    write_cell, Cell, DisjunctiveTuple, Model, Schema, StandardTuple, Table, Tuple, VagueTuple, Value, World,
};
use crate::valuation::ThreeDmInstance;

const RESERVED: &[char] = &[',', '|', '{', '}', '(', ')', '#', '@'];

fn perr(line: usize, column: usize, message: impl Into<String>) -> FdError {
    FdError::Parse {
        line,
        column,
        message: message.into(),
    }
}

/// Strips a trailing `#` comment and surrounding whitespace.
fn content(line: &str) -> &str {
    line.split('#').next().unwrap_or("").trim()
}

/// Model implied by a file extension: `.tab`, `.vtab` or `.dtab`.
pub fn model_from_extension(path: &str) -> Option<Model> {
    let ext = path.rsplit_once('.')?.1;
    match ext {
        "tab" | "stab" => Some(Model::Standard),
        "vtab" => Some(Model::Vague),
        "dtab" => Some(Model::Disjunctive),
        _ => None,
    }
}

fn parse_model(s: &str) -> Option<Model> {
    match s {
        "standard" => Some(Model::Standard),
        "vague" => Some(Model::Vague),
        "disjunctive" => Some(Model::Disjunctive),
        _ => None,
    }
}

enum Row {
    Cells(Vec<Cell>),
    Disjuncts(Vec<StandardTuple>),
}

/// Parses a table, inferring the model from content when there is no
/// `@model` directive.
pub fn parse_table(text: &str) -> Result<Table> {
    parse_table_as(text, None)
}

/// Parses a table; `hint` applies when the text carries no directive.
pub fn parse_table_as(text: &str, hint: Option<Model>) -> Result<Table> {
    let mut directive = None;
    let mut header: Option<(usize, Schema)> = None;
    let mut rows: Vec<(usize, Row)> = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let lineno = i + 1;
        let line = content(raw);
        if line.is_empty() {
            continue;
        }
        let col = raw.find(line).unwrap_or(0) + 1;
        if let Some(rest) = line.strip_prefix('@') {
            let mut parts = rest.split_whitespace();
            match (parts.next(), parts.next(), parts.next()) {
                (Some("model"), Some(m), None) if header.is_none() => {
                    directive = Some(parse_model(m).ok_or_else(|| perr(lineno, col, format!("unknown model `{m}`")))?);
                }
                _ => {
                    return Err(perr(
                        lineno,
                        col,
                        "malformed directive; expected `@model standard|vague|disjunctive` before the header",
                    ))
                }
            }
            continue;
        }
        match &header {
            None => {
                let names: Vec<&str> = line.split(',').map(str::trim).collect();
                for (k, n) in names.iter().enumerate() {
                    if n.is_empty() || n.contains(RESERVED) || n.contains(char::is_whitespace) {
                        return Err(perr(lineno, col, format!("invalid attribute name #{} `{n}`", k + 1)));
                    }
                }
                let schema = Schema::new(names).map_err(|e| perr(lineno, col, e.to_string()))?;
                header = Some((lineno, schema));
            }
            Some((_, schema)) => {
                let row = parse_row(line, lineno, col, schema.len())?;
                rows.push((lineno, row));
            }
        }
    }
    let Some((_, schema)) = header else {
        return Err(perr(1, 1, "missing header row"));
    };
    let model = directive.or(hint).unwrap_or_else(|| {
        if rows.iter().any(|(_, r)| matches!(r, Row::Disjuncts(_))) {
            Model::Disjunctive
        } else if rows
            .iter()
            .any(|(_, r)| matches!(r, Row::Cells(c) if c.iter().any(|c| c.len() > 1)))
        {
            Model::Vague
        } else {
            Model::Standard
        }
    });
    let mut tuples = Vec::with_capacity(rows.len());
    for (lineno, row) in rows {
        let t = match (model, row) {
            (Model::Disjunctive, Row::Disjuncts(ds)) => {
                Tuple::Disjunctive(DisjunctiveTuple::new(ds).map_err(|e| perr(lineno, 1, e.to_string()))?)
            }
            (_, Row::Disjuncts(_)) => {
                return Err(perr(lineno, 1, format!("disjunctive row in a {model} table")));
            }
            (Model::Standard, Row::Cells(cells)) => {
                if cells.iter().any(|c| c.len() > 1) {
                    return Err(perr(lineno, 1, "set-valued cell in a standard table"));
                }
                Tuple::Standard(StandardTuple(
                    cells.into_iter().map(|c| c.into_iter().next().unwrap()).collect(),
                ))
            }
            (Model::Vague, Row::Cells(cells)) => {
                Tuple::Vague(VagueTuple::new(cells).map_err(|e| perr(lineno, 1, e.to_string()))?)
            }
            (Model::Disjunctive, Row::Cells(cells)) => {
                if cells.iter().any(|c| c.len() > 1) {
                    return Err(perr(
                        lineno,
                        1,
                        "set-valued cell in a disjunctive table; write the disjuncts out",
                    ));
                }
                Tuple::Standard(StandardTuple(
                    cells.into_iter().map(|c| c.into_iter().next().unwrap()).collect(),
                ))
            }
        };
        tuples.push(t);
    }
    Table::new(schema, model, tuples)
}

fn parse_row(line: &str, lineno: usize, col: usize, arity: usize) -> Result<Row> {
    if line.starts_with('(') {
        let mut disjuncts = Vec::new();
        let mut offset = 0;
        for part in line.split("||") {
            let trimmed = part.trim();
            let pcol = col + offset + part.find(trimmed).unwrap_or(0);
            offset += part.len() + 2;
            let inner = trimmed
                .strip_prefix('(')
                .and_then(|s| s.strip_suffix(')'))
                .ok_or_else(|| perr(lineno, pcol, "disjunct must be a parenthesized tuple"))?;
            let vals: Vec<&str> = inner.split(',').map(str::trim).collect();
            if vals.len() != arity {
                return Err(perr(
                    lineno,
                    pcol,
                    format!("disjunct has {} values, expected {arity}", vals.len()),
                ));
            }
            let mut out = Vec::with_capacity(arity);
            for v in vals {
                out.push(parse_value(v, lineno, pcol)?);
            }
            disjuncts.push(StandardTuple(out));
        }
        return Ok(Row::Disjuncts(disjuncts));
    }
    let mut cells = Vec::new();
    let mut depth = 0;
    let mut start = 0;
    let bytes: Vec<(usize, char)> = line.char_indices().collect();
    for &(i, ch) in &bytes {
        match ch {
            '{' => depth += 1,
            '}' => depth -= 1,
            ',' if depth == 0 => {
                cells.push(parse_cell(&line[start..i], lineno, col + start)?);
                start = i + 1;
            }
            _ => {}
        }
    }
    cells.push(parse_cell(&line[start..], lineno, col + start)?);
    if cells.len() != arity {
        return Err(perr(
            lineno,
            col,
            format!("row has {} cells, expected {arity}", cells.len()),
        ));
    }
    Ok(Row::Cells(cells))
}

fn parse_cell(raw: &str, lineno: usize, col: usize) -> Result<Cell> {
    let s = raw.trim();
    if let Some(inner) = s.strip_prefix('{') {
        let inner = inner
            .strip_suffix('}')
            .ok_or_else(|| perr(lineno, col, "unterminated `{`"))?;
        if inner.trim().is_empty() {
            return Err(perr(lineno, col, "empty cell set"));
        }
        inner.split('|').map(|v| parse_value(v.trim(), lineno, col)).collect()
    } else {
        Ok(BTreeSet::from([parse_value(s, lineno, col)?]))
    }
}

fn parse_value(s: &str, lineno: usize, col: usize) -> Result<Value> {
    if s.is_empty() {
        return Err(perr(lineno, col, "empty value"));
    }
    if s.contains(RESERVED) {
        return Err(perr(lineno, col, format!("unexpected character in value `{s}`")));
    }
    Ok(Value::new(s))
}

/// Writes a table in the format read by [`parse_table`].
pub fn serialize_table(table: &Table) -> String {
    let mut out = String::new();
    writeln!(out, "@model {}", table.model()).unwrap();
    writeln!(out, "{}", table.schema().names().collect::<Vec<_>>().join(",")).unwrap();
    for t in table.tuples() {
        match t {
            Tuple::Standard(s) => {
                writeln!(out, "{}", join_values(s)).unwrap();
            }
            Tuple::Vague(v) => {
                let cells: Vec<String> = v
                    .cells()
                    .iter()
                    .map(|c| {
                        let mut s = String::new();
                        write_cell(&mut s, c).unwrap();
                        s
                    })
                    .collect();
                writeln!(out, "{}", cells.join(",")).unwrap();
            }
            Tuple::Disjunctive(d) => {
                let ds: Vec<String> = d.disjuncts().iter().map(|s| format!("({})", join_values(s))).collect();
                writeln!(out, "{}", ds.join("||")).unwrap();
            }
        }
    }
    out
}

fn join_values(t: &StandardTuple) -> String {
    t.0.iter().map(Value::as_str).collect::<Vec<_>>().join(",")
}

pub fn serialize_world(world: &World) -> String {
    serialize_table(world.table())
}

/// An FD as written, before attribute names are resolved.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FdSpec {
    pub line: usize,
    pub lhs: Vec<String>,
    pub rhs: Vec<String>,
}

impl FdSpec {
    pub fn resolve(&self, schema: &Schema) -> Result<FunctionalDependency> {
        FunctionalDependency::parse_names(schema, &self.lhs, &self.rhs).map_err(|e| match e {
            FdError::Schema(m) => FdError::Schema(format!("line {}: {m}", self.line)),
            other => other,
        })
    }
}

pub fn parse_fds(text: &str) -> Result<Vec<FdSpec>> {
    let mut out = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = content(raw);
        if line.is_empty() {
            continue;
        }
        let col = raw.find(line).unwrap_or(0) + 1;
        let parts: Vec<&str> = line.split("->").collect();
        if parts.len() != 2 {
            return Err(perr(i + 1, col, "expected exactly one `->`"));
        }
        let names = |s: &str| -> Vec<String> {
            s.split(|c: char| c.is_whitespace() || c == ',')
                .filter(|n| !n.is_empty())
                .map(String::from)
                .collect()
        };
        out.push(FdSpec {
            line: i + 1,
            lhs: names(parts[0]),
            rhs: names(parts[1]),
        });
    }
    Ok(out)
}

pub fn resolve_fds(specs: &[FdSpec], schema: &Schema) -> Result<Vec<FunctionalDependency>> {
    specs.iter().map(|s| s.resolve(schema)).collect()
}

pub fn serialize_fds(fds: &[FunctionalDependency], schema: &Schema) -> String {
    fds.iter().map(|fd| format!("{}\n", fd.display(schema))).collect()
}

pub fn parse_3dm(text: &str) -> Result<ThreeDmInstance> {
    let mut n = None;
    let mut triples: Vec<(usize, [String; 3])> = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = content(raw);
        if line.is_empty() {
            continue;
        }
        let col = raw.find(line).unwrap_or(0) + 1;
        if n.is_none() {
            n = Some(
                line.parse::<usize>()
                    .map_err(|_| perr(i + 1, col, format!("expected the instance size n, found `{line}`")))?,
            );
            continue;
        }
        let f: Vec<&str> = line.split_whitespace().collect();
        if f.len() != 3 {
            return Err(perr(i + 1, col, format!("expected `x y z`, found {} fields", f.len())));
        }
        triples.push((i + 1, [f[0].into(), f[1].into(), f[2].into()]));
    }
    let n = n.ok_or_else(|| perr(1, 1, "empty instance"))?;
    let named: Vec<(&str, &str, &str)> = triples
        .iter()
        .map(|(_, t)| (t[0].as_str(), t[1].as_str(), t[2].as_str()))
        .collect();
    ThreeDmInstance::from_named(n, &named).map_err(|e| perr(triples.first().map_or(1, |t| t.0), 1, e.to_string()))
}
