//! Structure files in plain text and JSON.
//!
//! Plain text:
//!
//! ```text
//! magma 2          bimagma 2        rmap 2             function 3     family 3
//! 0 0              0 1              0 0 -> 0 0         1 2 0          1 2 0
//! 1 1              0 1              0 1 -> 1 0                        2 0 1
//!                                   1 0 -> 0 1
//!                  0 0              1 1 -> 1 1
//!                  1 1
//! ```
//!
//! JSON objects carry `kind`, `n` and one of `dot` (plus `star`), `out` or
//! `images`.

use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::families::FunctionFamily;
use crate::finite::{BiMagma, CayleyTable, FiniteFunction, RMap};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Structure {
    Magma(CayleyTable),
    BiMagma(BiMagma),
    RMap(RMap),
    Function(FiniteFunction),
    Family(FunctionFamily),
}

impl Structure {
    pub fn kind(&self) -> &'static str {
        match self {
            Structure::Magma(_) => "magma",
            Structure::BiMagma(_) => "bimagma",
            Structure::RMap(_) => "rmap",
            Structure::Function(_) => "function",
            Structure::Family(_) => "family",
        }
    }

    pub fn n(&self) -> usize {
        match self {
            Structure::Magma(t) => t.n(),
            Structure::BiMagma(b) => b.n(),
            Structure::RMap(r) => r.n(),
            Structure::Function(f) => f.n(),
            Structure::Family(f) => f.n(),
        }
    }
}

fn perr(line: usize, column: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        column,
        message: message.into(),
    }
}

/// A whitespace-separated token with its 1-based column.
struct Token<'a> {
    text: &'a str,
    column: usize,
}

fn tokens(line: &str) -> Vec<Token<'_>> {
    let mut out = Vec::new();
    let mut start = None;
    for (i, ch) in line
        .char_indices()
        .chain(std::iter::once((line.len(), ' ')))
    {
        match (ch.is_whitespace(), start) {
            (false, None) => start = Some(i),
            (true, Some(s)) => {
                out.push(Token {
                    text: &line[s..i],
                    column: line[..s].chars().count() + 1,
                });
                start = None;
            }
            _ => {}
        }
    }
    out
}

struct Lines<'a> {
    lines: Vec<&'a str>,
    pos: usize,
}

impl<'a> Lines<'a> {
    fn line_no(&self) -> usize {
        self.pos + 1
    }

    fn next(&mut self, what: &str) -> Result<&'a str> {
        let l = self
            .lines
            .get(self.pos)
            .copied()
            .ok_or_else(|| perr(self.pos + 1, 1, format!("missing {what}")))?;
        self.pos += 1;
        Ok(l)
    }

    fn finish(&self) -> Result<()> {
        match self.lines[self.pos.min(self.lines.len())..]
            .iter()
            .position(|l| !l.trim().is_empty())
        {
            Some(k) => Err(perr(self.pos + k + 1, 1, "unexpected trailing content")),
            None => Ok(()),
        }
    }
}

fn number(t: &Token<'_>, line: usize, n: usize) -> Result<usize> {
    let v: usize = t.text.parse().map_err(|_| {
        perr(
            line,
            t.column,
            format!("expected a number, found {:?}", t.text),
        )
    })?;
    if v >= n {
        return Err(perr(
            line,
            t.column,
            format!("entry {v} out of range 0..{n}"),
        ));
    }
    Ok(v)
}

fn row(lines: &mut Lines<'_>, n: usize, what: &str) -> Result<Vec<usize>> {
    let ln = lines.line_no();
    let text = lines.next(what)?;
    let toks = tokens(text);
    if toks.len() != n {
        let column = toks.get(n).map_or(text.chars().count() + 1, |t| t.column);
        return Err(perr(
            ln,
            column,
            format!("{what} has {} entries, expected {n}", toks.len()),
        ));
    }
    toks.iter().map(|t| number(t, ln, n)).collect()
}

fn table(lines: &mut Lines<'_>, n: usize, name: &str) -> Result<CayleyTable> {
    let mut cells = Vec::with_capacity(n * n);
    for x in 0..n {
        cells.extend(row(lines, n, &format!("{name} row {x}"))?);
    }
    CayleyTable::new(n, cells)
}

fn parse_plain(text: &str) -> Result<Structure> {
    let mut lines = Lines {
        lines: text.lines().collect(),
        pos: 0,
    };
    let header = lines.next("header")?;
    let toks = tokens(header);
    let (kind, n) = match toks.as_slice() {
        [k, n] => {
            let size: usize = n.text.parse().map_err(|_| {
                perr(
                    1,
                    n.column,
                    format!("expected a carrier size, found {:?}", n.text),
                )
            })?;
            if size == 0 {
                return Err(perr(1, n.column, "carrier size must be at least 1"));
            }
            (k, size)
        }
        _ => return Err(perr(1, 1, "header must be '<kind> <n>'")),
    };
    let s = match kind.text {
        "magma" => Structure::Magma(table(&mut lines, n, "dot")?),
        "bimagma" => {
            let dot = table(&mut lines, n, "dot")?;
            let ln = lines.line_no();
            if !lines.next("blank separator")?.trim().is_empty() {
                return Err(perr(ln, 1, "expected a blank line between the two tables"));
            }
            let star = table(&mut lines, n, "star")?;
            Structure::BiMagma(BiMagma::new(dot, star)?)
        }
        "rmap" => {
            let mut out = vec![None; n * n];
            for _ in 0..n * n {
                let ln = lines.line_no();
                let text = lines.next("rmap line")?;
                let toks = tokens(text);
                if toks.len() != 5 || toks[2].text != "->" {
                    return Err(perr(ln, 1, "expected 'x y -> u v'"));
                }
                let v: Vec<usize> = [0, 1, 3, 4]
                    .iter()
                    .map(|&i| number(&toks[i], ln, n))
                    .collect::<Result<_>>()?;
                let slot = &mut out[v[0] * n + v[1]];
                if slot.is_some() {
                    return Err(perr(
                        ln,
                        toks[0].column,
                        format!("pair ({}, {}) given twice", v[0], v[1]),
                    ));
                }
                *slot = Some((v[2], v[3]));
            }
            RMap::new(
                n,
                out.into_iter()
                    .map(|p| p.expect("n² distinct pairs cover every input"))
                    .collect(),
            )
            .map(Structure::RMap)?
        }
        "function" => Structure::Function(FiniteFunction::new(row(&mut lines, n, "images")?)?),
        "family" => {
            let mut members = Vec::new();
            while lines
                .lines
                .get(lines.pos)
                .is_some_and(|l| !l.trim().is_empty())
            {
                members.push(FiniteFunction::new(row(&mut lines, n, "member")?)?);
            }
            if members.is_empty() {
                return Err(perr(2, 1, "a family needs at least one member"));
            }
            Structure::Family(FunctionFamily::new(members)?)
        }
        other => return Err(perr(1, kind.column, format!("unknown kind {other:?}"))),
    };
    lines.finish()?;
    Ok(s)
}

fn write_rows(out: &mut String, t: &CayleyTable) {
    for r in t.rows() {
        out.push_str(&join(r));
        out.push('\n');
    }
}

fn join(v: &[usize]) -> String {
    v.iter()
        .map(|x| x.to_string())
        .collect::<Vec<_>>()
        .join(" ")
}

/// Plain-text form; parsing it back gives the same structure.
pub fn to_plain(s: &Structure) -> String {
    let mut out = format!("{} {}\n", s.kind(), s.n());
    match s {
        Structure::Magma(t) => write_rows(&mut out, t),
        Structure::BiMagma(b) => {
            write_rows(&mut out, b.dot());
            out.push('\n');
            write_rows(&mut out, b.star());
        }
        Structure::RMap(r) => {
            let n = r.n();
            for x in 0..n {
                for y in 0..n {
                    let (u, v) = r.apply(x, y);
                    out.push_str(&format!("{x} {y} -> {u} {v}\n"));
                }
            }
        }
        Structure::Function(f) => {
            out.push_str(&join(f.images()));
            out.push('\n');
        }
        Structure::Family(fam) => {
            for f in fam.members() {
                out.push_str(&join(f.images()));
                out.push('\n');
            }
        }
    }
    out
}

fn rows_json(t: &CayleyTable) -> Value {
    Value::Array(t.rows().map(|r| json!(r)).collect())
}

pub fn to_json_value(s: &Structure) -> Value {
    let mut v = json!({ "kind": s.kind(), "n": s.n() });
    let obj = v.as_object_mut().expect("object literal");
    match s {
        Structure::Magma(t) => {
            obj.insert("dot".into(), rows_json(t));
        }
        Structure::BiMagma(b) => {
            obj.insert("dot".into(), rows_json(b.dot()));
            obj.insert("star".into(), rows_json(b.star()));
        }
        Structure::RMap(r) => {
            obj.insert(
                "out".into(),
                Value::Array(r.pairs().iter().map(|&(u, v)| json!([u, v])).collect()),
            );
        }
        Structure::Function(f) => {
            obj.insert("images".into(), json!(f.images()));
        }
        Structure::Family(fam) => {
            obj.insert(
                "images".into(),
                Value::Array(fam.members().iter().map(|f| json!(f.images())).collect()),
            );
        }
    }
    v
}

pub fn to_json(s: &Structure) -> String {
    serde_json::to_string_pretty(&to_json_value(s)).expect("JSON values serialize") + "\n"
}

fn json_field<T: serde::de::DeserializeOwned>(
    obj: &serde_json::Map<String, Value>,
    key: &str,
) -> Result<T> {
    let v = obj
        .get(key)
        .ok_or_else(|| perr(1, 1, format!("missing key {key:?}")))?;
    serde_json::from_value(v.clone()).map_err(|e| perr(1, 1, format!("key {key:?}: {e}")))
}

fn json_table(obj: &serde_json::Map<String, Value>, key: &str, n: usize) -> Result<CayleyTable> {
    let rows: Vec<Vec<usize>> = json_field(obj, key)?;
    if rows.len() != n || rows.iter().any(|r| r.len() != n) {
        return Err(perr(1, 1, format!("{key:?} must be an {n}×{n} table")));
    }
    CayleyTable::from_rows(rows)
}

fn parse_json(text: &str) -> Result<Structure> {
    let v: Value =
        serde_json::from_str(text).map_err(|e| perr(e.line(), e.column(), e.to_string()))?;
    let obj = v
        .as_object()
        .ok_or_else(|| perr(1, 1, "expected a JSON object"))?;
    let kind: String = json_field(obj, "kind")?;
    let n: usize = json_field(obj, "n")?;
    if n == 0 {
        return Err(perr(1, 1, "carrier size must be at least 1"));
    }
    let check_len = |len: usize, want: usize, key: &str| {
        if len == want {
            Ok(())
        } else {
            Err(perr(
                1,
                1,
                format!("{key:?} has {len} entries, expected {want}"),
            ))
        }
    };
    match kind.as_str() {
        "magma" => Ok(Structure::Magma(json_table(obj, "dot", n)?)),
        "bimagma" => Ok(Structure::BiMagma(BiMagma::new(
            json_table(obj, "dot", n)?,
            json_table(obj, "star", n)?,
        )?)),
        "rmap" => {
            let out: Vec<(usize, usize)> = json_field(obj, "out")?;
            check_len(out.len(), n * n, "out")?;
            Ok(Structure::RMap(RMap::new(n, out)?))
        }
        "function" => {
            let images: Vec<usize> = json_field(obj, "images")?;
            check_len(images.len(), n, "images")?;
            Ok(Structure::Function(FiniteFunction::new(images)?))
        }
        "family" => {
            let images: Vec<Vec<usize>> = json_field(obj, "images")?;
            let members = images
                .into_iter()
                .map(|im| {
                    check_len(im.len(), n, "images")?;
                    FiniteFunction::new(im)
                })
                .collect::<Result<Vec<_>>>()?;
            Ok(Structure::Family(FunctionFamily::new(members)?))
        }
        other => Err(perr(1, 1, format!("unknown kind {other:?}"))),
    }
}

/// Parses either format; JSON is recognized by a leading `{`.
pub fn parse_structure(text: &str) -> Result<Structure> {
    if text.trim_start().starts_with('{') {
        parse_json(text)
    } else {
        parse_plain(text)
    }
}
