//! Reading digraphs and angles from text.
//!
//! Arc lists look like `n=4; 0->1; 1->0; 2<->3`. Statements are separated by
//! `;` or newlines, whitespace is ignored and `#` starts a comment.

use std::path::Path;

use mixwalk_core::digraph::make_y;
use mixwalk_core::{Angle, Digraph};

use crate::error::{CliError, ParseError, Result};

/// Parses an arc list.
pub fn parse_arc_list(text: &str) -> Result<Digraph, ParseError> {
    let mut n: Option<(usize, usize, usize)> = None;
    let mut arcs: Vec<(usize, usize, usize, usize, bool)> = Vec::new();
    for (li, raw) in text.lines().enumerate() {
        let line = li + 1;
        let body = raw.split('#').next().unwrap_or("");
        let mut offset = 0;
        for stmt in body.split(';') {
            let col = offset + 1 + stmt.len() - stmt.trim_start().len();
            offset += stmt.len() + 1;
            let s: String = stmt.chars().filter(|c| !c.is_whitespace()).collect();
            if s.is_empty() {
                continue;
            }
            if let Some(v) = s.strip_prefix("n=") {
                if n.is_some() {
                    return Err(ParseError::new(line, col, "vertex count given twice"));
                }
                let v = v.parse().map_err(|_| ParseError::new(line, col, format!("bad vertex count {:?}", v)))?;
                n = Some((v, line, col));
                continue;
            }
            let (digon, parts) = match s.split_once("<->") {
                Some(p) => (true, p),
                None => match s.split_once("->") {
                    Some(p) => (false, p),
                    None => return Err(ParseError::new(line, col, format!("expected `u->v`, `u<->v` or `n=..`, found {:?}", s))),
                },
            };
            let vertex = |t: &str| t.parse::<usize>().map_err(|_| ParseError::new(line, col, format!("bad vertex {:?}", t)));
            let (u, v) = (vertex(parts.0)?, vertex(parts.1)?);
            if u == v {
                return Err(ParseError::new(line, col, format!("self-loop at {}", u)));
            }
            arcs.push((u, v, line, col, digon));
        }
    }
    let (n, ..) = n.ok_or_else(|| ParseError::new(1, 1, "missing `n=<vertices>`"))?;
    if n > mixwalk_core::digraph::MAX_VERTICES {
        return Err(ParseError::new(1, 1, format!("at most {} vertices", mixwalk_core::digraph::MAX_VERTICES)));
    }
    let mut g = Digraph::empty(n);
    for (u, v, line, col, digon) in arcs {
        if u >= n || v >= n {
            return Err(ParseError::new(line, col, format!("vertex {} out of range for n = {}", u.max(v), n)));
        }
        g.add_arc(u, v);
        if digon {
            g.add_arc(v, u);
        }
    }
    Ok(g)
}

/// Canonical arc-list text: `n=..;` followed by arcs in increasing order.
pub fn format_arc_list(g: &Digraph) -> String {
    let mut s = format!("n={}", g.n());
    for a in g.arcs() {
        s.push_str(&format!("; {}", a));
    }
    s
}

/// `Y a n`, `K n`, `C n` (undirected cycle) or `DC n` (directed cycle).
pub fn parse_family(spec: &str) -> Result<Digraph> {
    let words: Vec<&str> = spec.split_whitespace().collect();
    let num = |i: usize| -> Result<usize, ParseError> {
        let w = words.get(i).ok_or_else(|| ParseError::at(spec.len() + 1, "missing argument"))?;
        let col = spec.find(w).map_or(1, |c| c + 1);
        w.parse().map_err(|_| ParseError::at(col, format!("bad number {:?}", w)))
    };
    let arity = |k: usize| -> Result<(), ParseError> {
        if words.len() == k + 1 {
            Ok(())
        } else {
            Err(ParseError::at(1, format!("`{}` takes {} argument(s)", words[0], k)))
        }
    };
    let head = words.first().copied().unwrap_or("");
    let g = match head {
        "Y" => {
            arity(2)?;
            make_y(num(1)?, num(2)?)?
        }
        "K" => {
            arity(1)?;
            Digraph::complete(num(1)?)
        }
        "C" => {
            arity(1)?;
            Digraph::cycle(num(1)?)
        }
        "DC" => {
            arity(1)?;
            Digraph::directed_cycle(num(1)?)
        }
        _ => return Err(ParseError::at(1, format!("unknown family {:?}; expected Y, K, C or DC", head)).into()),
    };
    Ok(g)
}

pub fn parse_code(code: &str) -> Result<Digraph> {
    Digraph::from_code(code).map_err(|e| ParseError::at(1, e.to_string()).into())
}

pub fn read_arc_file(path: &Path) -> Result<Digraph> {
    let text = std::fs::read_to_string(path)?;
    Ok(parse_arc_list(&text)?)
}

/// `p/q` (a multiple of π) or an integer `p`.
pub fn parse_angle(text: &str) -> Result<Angle, ParseError> {
    let t = text.trim();
    let (p, q) = match t.split_once('/') {
        Some((p, q)) => (p.trim(), q.trim()),
        None => (t, "1"),
    };
    let p: i64 = p.parse().map_err(|_| ParseError::at(1, format!("bad numerator {:?}", p)))?;
    let q: i64 = q.parse().map_err(|_| ParseError::at(t.find('/').map_or(1, |c| c + 2), format!("bad denominator {:?}", q)))?;
    if p < 0 || q <= 0 || p > q {
        return Err(ParseError::at(1, format!("eta = {}/{} of pi must lie in [0, 1]", p, q)));
    }
    Angle::new(p, q).map_err(|e| ParseError::at(1, e.to_string()))
}

/// One input source out of several optional ones.
pub fn resolve(arcs: Option<&str>, file: Option<&Path>, code: Option<&str>, family: Option<&str>) -> Result<Digraph> {
    match (arcs, file, code, family) {
        (Some(a), None, None, None) => Ok(parse_arc_list(a)?),
        (None, Some(f), None, None) => read_arc_file(f),
        (None, None, Some(c), None) => parse_code(c),
        (None, None, None, Some(f)) => parse_family(f),
        (None, None, None, None) => Err(CliError::Precondition("no input graph; use --arcs, --file, --code or --family".into())),
        _ => Err(CliError::Precondition("give exactly one of --arcs, --file, --code, --family".into())),
    }
}
