//! Line-oriented text format.
//!
//! ```text
//! GT v1
//! n=2
//! h=2,1
//! v=2,1
//! map (1,1)->(1,1) +1
//! map (1,2)->(2,1) +1
//! map (2,1)->(1,2) +1
//! ```
//!
//! `#` starts a comment, blank lines are ignored, map lines may come in any order.

use std::fmt::Write as _;

use crate::error::CoreError;
use crate::geometric::GeometricType;
use crate::label::{sign_str, HLabel, VLabel};
use crate::validate::{Candidate, MapEntry};

struct Line<'a> {
    no: usize,
    // 1-based column of `text`'s first byte in the original line
    col: usize,
    text: &'a str,
}

fn directives(input: &str) -> Vec<Line<'_>> {
    let mut out = Vec::new();
    for (idx, raw) in input.lines().enumerate() {
        let body = match raw.find('#') {
            Some(p) => &raw[..p],
            None => raw,
        };
        let trimmed = body.trim_start();
        let lead = body.len() - trimmed.len();
        let text = trimmed.trim_end();
        if text.is_empty() {
            continue;
        }
        out.push(Line {
            no: idx + 1,
            col: lead + 1,
            text,
        });
    }
    out
}

struct Cursor<'a> {
    line: &'a Line<'a>,
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn err(&self, msg: impl Into<String>) -> CoreError {
        CoreError::syntax(self.line.no, self.line.col + self.pos, msg)
    }

    fn rest(&self) -> &'a str {
        &self.line.text[self.pos..]
    }

    fn expect(&mut self, tok: &str) -> Result<(), CoreError> {
        if self.rest().starts_with(tok) {
            self.pos += tok.len();
            Ok(())
        } else {
            Err(self.err(format!("expected `{}`", tok)))
        }
    }

    fn spaces(&mut self, at_least_one: bool) -> Result<(), CoreError> {
        let n = self.rest().len() - self.rest().trim_start_matches([' ', '\t']).len();
        if at_least_one && n == 0 {
            return Err(self.err("expected whitespace"));
        }
        self.pos += n;
        Ok(())
    }

    fn int(&mut self) -> Result<usize, CoreError> {
        let digits = self.rest().bytes().take_while(|b| b.is_ascii_digit()).count();
        if digits == 0 {
            return Err(self.err("expected integer"));
        }
        let v = self.rest()[..digits]
            .parse::<usize>()
            .map_err(|_| self.err("integer too large"))?;
        self.pos += digits;
        Ok(v)
    }

    fn end(&self) -> Result<(), CoreError> {
        if self.rest().is_empty() {
            Ok(())
        } else {
            Err(self.err("expected end of line"))
        }
    }

    fn pair(&mut self) -> Result<(usize, usize), CoreError> {
        self.expect("(")?;
        let a = self.int()?;
        self.expect(",")?;
        let b = self.int()?;
        self.expect(")")?;
        Ok((a, b))
    }
}

fn int_list(c: &mut Cursor<'_>) -> Result<Vec<usize>, CoreError> {
    let mut out = vec![c.int()?];
    while c.rest().starts_with(',') {
        c.pos += 1;
        out.push(c.int()?);
    }
    c.end()?;
    Ok(out)
}

/// Parses the text into raw data without checking the type invariants.
pub fn parse_candidate(input: &str) -> Result<Candidate, CoreError> {
    let lines = directives(input);
    let mut it = lines.iter();
    let header = it.next().ok_or_else(|| CoreError::syntax(1, 1, "missing header"))?;
    if header.text != "GT v1" {
        return Err(CoreError::syntax(header.no, header.col, "missing header: expected `GT v1`"));
    }
    let last = header.no;
    let mut next_directive = |prefix: &str| -> Result<&Line<'_>, CoreError> {
        match it.next() {
            Some(l) => Ok(l),
            None => Err(CoreError::syntax(last + 1, 1, format!("expected `{}`", prefix))),
        }
    };
    let nline = next_directive("n=")?;
    let mut c = Cursor { line: nline, pos: 0 };
    c.expect("n=")?;
    let n = c.int()?;
    c.end()?;

    let hline = next_directive("h=")?;
    let mut c = Cursor { line: hline, pos: 0 };
    c.expect("h=")?;
    let h = int_list(&mut c)?;

    let vline = next_directive("v=")?;
    let mut c = Cursor { line: vline, pos: 0 };
    c.expect("v=")?;
    let v = int_list(&mut c)?;

    let mut maps = Vec::new();
    for l in it {
        let mut c = Cursor { line: l, pos: 0 };
        c.expect("map")?;
        c.spaces(true)?;
        let (i, j) = c.pair()?;
        c.expect("->")?;
        let (k, ll) = c.pair()?;
        c.spaces(true)?;
        let sign = if c.rest().starts_with("+1") {
            1
        } else if c.rest().starts_with("-1") {
            -1
        } else {
            return Err(c.err("expected `+1` or `-1`"));
        };
        c.pos += 2;
        c.end()?;
        maps.push(MapEntry {
            from: HLabel::new(i, j),
            to: VLabel::new(k, ll),
            sign,
        });
    }
    Ok(Candidate { n, h, v, maps })
}

/// Parses and validates a geometric type.
pub fn parse_geometric_type(input: &str) -> Result<GeometricType, CoreError> {
    parse_candidate(input)?.into_type()
}

fn join(xs: &[usize]) -> String {
    xs.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")
}

/// Canonical text: map lines sorted by `(i, j)`.
pub fn serialize(t: &GeometricType) -> String {
    let mut s = String::new();
    s.push_str("GT v1\n");
    let _ = writeln!(s, "n={}", t.n());
    let _ = writeln!(s, "h={}", join(t.hs()));
    let _ = writeln!(s, "v={}", join(t.vs()));
    for hl in t.labels() {
        let _ = writeln!(s, "map {}->{} {}", hl, t.rho(hl.i, hl.j), sign_str(t.eps(hl.i, hl.j)));
    }
    s
}
