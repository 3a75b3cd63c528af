//! Text formats for automata.
//!
//! Dense:
//!
//! ```text
//! n s
//! I(0) … I(n-1)
//! δ_0 as n rows of n values
//! …
//! δ_{s-1} as n rows of n values
//! F(0) … F(n-1)
//! ```
//!
//! Sparse:
//!
//! ```text
//! states n
//! symbols s
//! initial q v
//! final q v
//! trans q j p v      # δ_j(q, p) = v
//! ```
//!
//! Unlisted sparse entries are 0. In both formats blank lines and lines
//! starting with `#` are ignored. Symbols are named `0`, `1`, ….

use std::collections::HashSet;
use std::fmt::Write;
use std::str::FromStr;

use crate::automaton::Ffa;
use crate::error::{Error, Result};
use crate::fuzzy::{FuzzyMat, FuzzyVec};
use crate::lattice::Value;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Format {
    #[default]
    Dense,
    Sparse,
}

impl FromStr for Format {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "dense" => Ok(Format::Dense),
            "sparse" => Ok(Format::Sparse),
            _ => Err(Error::Config(format!("unknown format '{s}'"))),
        }
    }
}

pub fn parse_automaton(text: &str, format: Format) -> Result<Ffa> {
    match format {
        Format::Dense => parse_dense(text),
        Format::Sparse => parse_sparse(text),
    }
}

/// Non-comment lines with their 1-based line numbers.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

fn parse_count(tok: &str, line: usize, what: &str) -> Result<usize> {
    tok.parse().map_err(|_| Error::parse(line, format!("expected {what}, got '{tok}'")))
}

fn parse_value(tok: &str, line: usize) -> Result<f64> {
    let x: f64 = tok.parse().map_err(|_| Error::parse(line, format!("'{tok}' is not a number")))?;
    Value::new(x).map_err(|_| Error::parse(line, format!("value {tok} is outside [0, 1]")))?;
    Ok(x)
}

fn parse_row(line: usize, text: &str, n: usize) -> Result<Vec<f64>> {
    let row: Vec<f64> = text.split_whitespace().map(|t| parse_value(t, line)).collect::<Result<_>>()?;
    if row.len() != n {
        return Err(Error::parse(line, format!("expected {n} values, found {}", row.len())));
    }
    Ok(row)
}

pub fn parse_dense(text: &str) -> Result<Ffa> {
    let mut lines = content_lines(text);
    let (hl, header) = lines.next().ok_or_else(|| Error::parse(1, "missing 'n s' header"))?;
    let toks: Vec<&str> = header.split_whitespace().collect();
    if toks.len() != 2 {
        return Err(Error::parse(hl, "header must be 'n s'"));
    }
    let n = parse_count(toks[0], hl, "state count")?;
    let s = parse_count(toks[1], hl, "symbol count")?;
    if s == 0 {
        return Err(Error::EmptyAlphabet);
    }
    let mut last = hl;
    let mut next_row = |what: &str| -> Result<Vec<f64>> {
        if n == 0 {
            return Ok(Vec::new());
        }
        let (ln, l) = lines.next().ok_or_else(|| Error::parse(last + 1, format!("missing {what}")))?;
        last = ln;
        parse_row(ln, l, n)
    };
    let initial = next_row("initial vector")?;
    let mut delta = Vec::with_capacity(s);
    for j in 0..s {
        let rows = (0..n)
            .map(|i| next_row(&format!("row {i} of transition matrix {j}")))
            .collect::<Result<Vec<_>>>()?;
        delta.push(FuzzyMat::from_rows(rows)?);
    }
    let fin = next_row("final vector")?;
    if let Some((ln, _)) = lines.next() {
        return Err(Error::parse(ln, "unexpected trailing content"));
    }
    Ffa::with_numbered_symbols(FuzzyVec(initial), delta, FuzzyVec(fin))
}

pub fn parse_sparse(text: &str) -> Result<Ffa> {
    let mut n = None;
    let mut s = None;
    let mut initial = Vec::new();
    let mut fin = Vec::new();
    let mut delta: Vec<FuzzyMat> = Vec::new();
    let mut seen = HashSet::new();

    for (ln, l) in content_lines(text) {
        let toks: Vec<&str> = l.split_whitespace().collect();
        let arity = |k: usize| -> Result<()> {
            if toks.len() == k {
                Ok(())
            } else {
                Err(Error::parse(ln, format!("'{}' takes {} fields", toks[0], k - 1)))
            }
        };
        match toks[0] {
            "states" | "symbols" => {
                arity(2)?;
                let v = parse_count(toks[1], ln, "a count")?;
                let slot = if toks[0] == "states" { &mut n } else { &mut s };
                if slot.replace(v).is_some() {
                    return Err(Error::parse(ln, format!("duplicate '{}' header", toks[0])));
                }
                if let (Some(n), Some(s)) = (n, s) {
                    if s == 0 {
                        return Err(Error::EmptyAlphabet);
                    }
                    initial = vec![0.0; n];
                    fin = vec![0.0; n];
                    delta = vec![FuzzyMat::zeros(n); s];
                }
            }
            tag @ ("initial" | "final" | "trans") => {
                let (Some(n), Some(s)) = (n, s) else {
                    return Err(Error::parse(ln, "'states' and 'symbols' must come first"));
                };
                let state = |t: &str| -> Result<usize> {
                    let q = parse_count(t, ln, "a state index")?;
                    if q < n {
                        Ok(q)
                    } else {
                        Err(Error::parse(ln, format!("state {q} out of range (n = {n})")))
                    }
                };
                let entry = if tag == "trans" {
                    arity(5)?;
                    let q = state(toks[1])?;
                    let j = parse_count(toks[2], ln, "a symbol index")?;
                    if j >= s {
                        return Err(Error::parse(ln, format!("symbol {j} out of range (s = {s})")));
                    }
                    let p = state(toks[3])?;
                    delta[j][(q, p)] = parse_value(toks[4], ln)?;
                    (tag, q, j, p)
                } else {
                    arity(3)?;
                    let q = state(toks[1])?;
                    let v = parse_value(toks[2], ln)?;
                    if tag == "initial" {
                        initial[q] = v;
                    } else {
                        fin[q] = v;
                    }
                    (tag, q, 0, 0)
                };
                if !seen.insert(entry) {
                    return Err(Error::parse(ln, format!("duplicate '{tag}' entry")));
                }
            }
            other => return Err(Error::parse(ln, format!("unknown tag '{other}'"))),
        }
    }
    match (n, s) {
        (Some(_), Some(_)) => Ffa::with_numbered_symbols(FuzzyVec(initial), delta, FuzzyVec(fin)),
        _ => Err(Error::parse(1, "missing 'states' or 'symbols' header")),
    }
}

/// 12 significant digits, trailing zeros removed.
pub fn format_value(x: f64) -> String {
    if x == 0.0 {
        return "0".into();
    }
    let decimals = (11 - x.abs().log10().floor() as i32).max(0) as usize;
    let s = format!("{x:.decimals$}");
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.').to_string()
    } else {
        s
    }
}

fn push_row(out: &mut String, row: &[f64]) {
    let cells: Vec<String> = row.iter().map(|&x| format_value(x)).collect();
    out.push_str(&cells.join(" "));
    out.push('\n');
}

pub fn to_dense(a: &Ffa) -> String {
    let mut out = format!("{} {}\n", a.states(), a.symbols());
    if a.states() == 0 {
        return out;
    }
    push_row(&mut out, a.initial());
    for d in a.deltas() {
        for row in d.rows() {
            push_row(&mut out, row);
        }
    }
    push_row(&mut out, a.final_states());
    out
}

pub fn to_sparse(a: &Ffa) -> String {
    let mut out = format!("states {}\nsymbols {}\n", a.states(), a.symbols());
    for (q, &v) in a.initial().iter().enumerate().filter(|(_, &v)| v > 0.0) {
        let _ = writeln!(out, "initial {q} {}", format_value(v));
    }
    for (j, d) in a.deltas().iter().enumerate() {
        for q in 0..a.states() {
            for p in 0..a.states() {
                if d[(q, p)] > 0.0 {
                    let _ = writeln!(out, "trans {q} {j} {p} {}", format_value(d[(q, p)]));
                }
            }
        }
    }
    for (q, &v) in a.final_states().iter().enumerate().filter(|(_, &v)| v > 0.0) {
        let _ = writeln!(out, "final {q} {}", format_value(v));
    }
    out
}
