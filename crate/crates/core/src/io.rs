//! Plain-text formats.
//!
//! Cone files start with a header `n dim count kind` (`kind` is `H` or `V`)
//! followed by `count` lines of `dim` space-separated integers in pair order.
//! An `H` line `a` means `⟨a, d⟩ ≤ 0`. Blank lines and lines starting with
//! `#` are ignored everywhere.

use std::fmt::Write as _;
use std::fs;
use std::path::Path;

use crate::cones::{HCone, Inequality, RayVector, Side, VCone};
use crate::error::{Error, Result};
use crate::hypermetric::{BVector, SimpleGraph};
use crate::pairs::pair_count;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Cone {
    H(HCone),
    V(VCone),
}

struct Token<'a> {
    text: &'a str,
    column: usize,
}

struct Line<'a> {
    number: usize,
    tokens: Vec<Token<'a>>,
}

fn parse_err(line: usize, column: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        column,
        message: message.into(),
    }
}

fn lines(text: &str) -> impl Iterator<Item = Line<'_>> {
    text.lines().enumerate().filter_map(|(k, raw)| {
        let trimmed = raw.trim_start();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            return None;
        }
        let mut tokens = Vec::new();
        let mut start = None;
        for (pos, ch) in raw.char_indices().chain(std::iter::once((raw.len(), ' '))) {
            match (ch.is_whitespace(), start) {
                (false, None) => start = Some(pos),
                (true, Some(s)) => {
                    tokens.push(Token {
                        text: &raw[s..pos],
                        column: raw[..s].chars().count() + 1,
                    });
                    start = None;
                }
                _ => {}
            }
        }
        Some(Line { number: k + 1, tokens })
    })
}

fn int<T: std::str::FromStr>(line: usize, t: &Token<'_>) -> Result<T> {
    t.text
        .parse()
        .map_err(|_| parse_err(line, t.column, format!("expected an integer, found `{}`", t.text)))
}

fn int_row(line: &Line<'_>, tokens: &[Token<'_>], expected: usize) -> Result<Vec<i64>> {
    if tokens.len() != expected {
        let column = tokens.get(expected).or(tokens.last()).map_or(1, |t| t.column);
        return Err(parse_err(
            line.number,
            column,
            format!("expected {expected} entries, found {}", tokens.len()),
        ));
    }
    tokens.iter().map(|t| int(line.number, t)).collect()
}

fn end_of_input(text: &str) -> usize {
    text.lines().count() + 1
}

fn write_row(out: &mut String, v: &[i64]) {
    for (k, x) in v.iter().enumerate() {
        if k > 0 {
            out.push(' ');
        }
        write!(out, "{x}").expect("writing to a String");
    }
    out.push('\n');
}

pub fn write_hcone(c: &HCone) -> String {
    let mut out = format!("{} {} {} H\n", c.points(), c.dim(), c.len());
    for f in c.inequalities() {
        write_row(&mut out, f.coeffs());
    }
    out
}

pub fn write_vcone(c: &VCone) -> String {
    let mut out = format!("{} {} {} V\n", c.points(), c.dim(), c.len());
    for r in c.rays() {
        write_row(&mut out, r.coords());
    }
    out
}

pub fn write_cone(c: &Cone) -> String {
    match c {
        Cone::H(h) => write_hcone(h),
        Cone::V(v) => write_vcone(v),
    }
}

pub fn parse_cone(text: &str) -> Result<Cone> {
    let mut it = lines(text);
    let header = it
        .next()
        .ok_or_else(|| parse_err(1, 1, "missing header `n dim count kind`"))?;
    if header.tokens.len() != 4 {
        let column = header.tokens.get(4).map_or(1, |t| t.column);
        return Err(parse_err(header.number, column, "header must be `n dim count kind`"));
    }
    let n: usize = int(header.number, &header.tokens[0])?;
    let dim: usize = int(header.number, &header.tokens[1])?;
    let count: usize = int(header.number, &header.tokens[2])?;
    let kind = header.tokens[3].text;
    if dim != pair_count(n) {
        return Err(parse_err(
            header.number,
            header.tokens[1].column,
            format!("dim {dim} is not n(n-1)/2 = {} for n = {n}", pair_count(n)),
        ));
    }
    if kind != "H" && kind != "V" {
        return Err(parse_err(
            header.number,
            header.tokens[3].column,
            format!("kind must be H or V, found `{kind}`"),
        ));
    }
    let mut rows = Vec::with_capacity(count);
    for line in it {
        if rows.len() == count {
            return Err(parse_err(line.number, 1, format!("more than {count} rows")));
        }
        let row = int_row(&line, &line.tokens, dim)?;
        if row.iter().all(|&x| x == 0) {
            return Err(parse_err(line.number, 1, "zero row"));
        }
        rows.push(row);
    }
    if rows.len() != count {
        return Err(parse_err(
            end_of_input(text),
            1,
            format!("expected {count} rows, found {}", rows.len()),
        ));
    }
    if kind == "H" {
        let fs = rows.into_iter().map(Inequality::le).collect::<Result<_>>()?;
        Ok(Cone::H(HCone::new(n, fs)?))
    } else {
        let rs = rows.into_iter().map(RayVector::new).collect::<Result<_>>()?;
        Ok(Cone::V(VCone::new(n, rs)?))
    }
}

/// Integer vectors, one per line; all rows must have the same length.
pub fn parse_vectors(text: &str) -> Result<Vec<Vec<i64>>> {
    let mut out: Vec<Vec<i64>> = Vec::new();
    for line in lines(text) {
        let expected = out.first().map_or(line.tokens.len(), Vec::len);
        out.push(int_row(&line, &line.tokens, expected)?);
    }
    Ok(out)
}

/// A single inequality. The vector may be followed by `<= 0` or `>= 0`;
/// without a relation `≤ 0` is assumed. A cone file with one `H` row is
/// accepted too.
pub fn parse_inequality(text: &str) -> Result<Inequality> {
    if let Ok(Cone::H(c)) = parse_cone(text) {
        if c.len() == 1 {
            return Ok(c.inequalities()[0].clone());
        }
    }
    let mut found = None;
    for line in lines(text) {
        if found.is_some() {
            return Err(parse_err(line.number, 1, "expected a single inequality"));
        }
        let toks = &line.tokens;
        let (body, side) = match toks.len() {
            k if k >= 2 && (toks[k - 2].text == "<=" || toks[k - 2].text == ">=") => {
                if toks[k - 1].text != "0" {
                    return Err(parse_err(line.number, toks[k - 1].column, "right-hand side must be 0"));
                }
                let side = if toks[k - 2].text == "<=" { Side::Le } else { Side::Ge };
                (&toks[..k - 2], side)
            }
            _ => (&toks[..], Side::Le),
        };
        let row = int_row(&line, body, body.len())?;
        crate::pairs::points_for_len(row.len()).map_err(|_| {
            parse_err(line.number, 1, format!("length {} is not n(n-1)/2", row.len()))
        })?;
        found = Some(Inequality::new(row, side).map_err(|e| parse_err(line.number, 1, e.to_string()))?);
    }
    found.ok_or_else(|| parse_err(end_of_input(text), 1, "no inequality found"))
}

/// A single ray: one vector line, or a `V` cone file with one ray.
pub fn parse_ray(text: &str) -> Result<RayVector> {
    if let Ok(Cone::V(c)) = parse_cone(text) {
        if c.len() == 1 {
            return Ok(c.rays()[0].clone());
        }
    }
    let rows = parse_vectors(text)?;
    match rows.as_slice() {
        [row] => {
            crate::pairs::points_for_len(row.len())?;
            RayVector::new(row.clone())
        }
        [] => Err(parse_err(end_of_input(text), 1, "no vector found")),
        _ => Err(parse_err(1, 1, format!("expected one vector, found {}", rows.len()))),
    }
}

pub fn parse_bvectors(text: &str) -> Result<Vec<BVector>> {
    let mut out = Vec::new();
    for line in lines(text) {
        let row = int_row(&line, &line.tokens, line.tokens.len())?;
        out.push(BVector::new(row).map_err(|e| parse_err(line.number, 1, e.to_string()))?);
    }
    Ok(out)
}

pub fn write_bvectors(bs: &[BVector]) -> String {
    let mut out = String::new();
    for b in bs {
        write_row(&mut out, b.entries());
    }
    out
}

/// First line `n m`, then `m` lines `i j` with 1-based endpoints.
pub fn parse_graph(text: &str) -> Result<SimpleGraph> {
    let mut it = lines(text);
    let header = it.next().ok_or_else(|| parse_err(1, 1, "missing header `n m`"))?;
    let hv = int_row(&header, &header.tokens, 2)?;
    let (n, m) = (hv[0], hv[1]);
    if n < 1 || m < 0 {
        return Err(parse_err(header.number, 1, "n must be positive and m non-negative"));
    }
    let mut edges = Vec::new();
    for line in it {
        if edges.len() as i64 == m {
            return Err(parse_err(line.number, 1, format!("more than {m} edges")));
        }
        let e = int_row(&line, &line.tokens, 2)?;
        for (k, &x) in e.iter().enumerate() {
            if x < 1 || x > n {
                return Err(parse_err(line.number, line.tokens[k].column, format!("vertex {x} not in 1..={n}")));
            }
        }
        if e[0] == e[1] {
            return Err(parse_err(line.number, 1, "loops are not allowed"));
        }
        edges.push(((e[0] - 1) as usize, (e[1] - 1) as usize));
    }
    if edges.len() as i64 != m {
        return Err(parse_err(end_of_input(text), 1, format!("expected {m} edges, found {}", edges.len())));
    }
    SimpleGraph::new(n as usize, &edges)
}

pub fn write_graph(g: &SimpleGraph) -> String {
    let mut out = format!("{} {}\n", g.points(), g.edge_count());
    for (a, b) in g.edges() {
        writeln!(out, "{} {}", a + 1, b + 1).expect("writing to a String");
    }
    out
}

pub fn read_file(path: impl AsRef<Path>) -> Result<String> {
    Ok(fs::read_to_string(path)?)
}
