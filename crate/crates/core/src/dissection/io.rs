//! Line-oriented tiling files.
//!
//! ```text
//! # comment
//! target <x> <y> <w> <h>
//! part <x> <y> <w> <h>
//! part ...
//! ```
//!
//! Every coordinate is a number such as `1/3` or `3/2+1/2*sqrt(3)` written
//! without spaces.

use thiserror::Error;

use super::{Dissection, DissectionError, Rect};
use crate::exactnum::{parse_number, QuadExt};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}: {msg}")]
pub struct ParseError {
    pub line: usize,
    pub msg: String,
}

fn parse_rect(fields: &[&str], line: usize) -> Result<Rect, ParseError> {
    if fields.len() != 4 {
        return Err(ParseError { line, msg: format!("expected 4 coordinates, found {}", fields.len()) });
    }
    let mut v: Vec<QuadExt> = Vec::with_capacity(4);
    for f in fields {
        v.push(parse_number(f).map_err(|e| ParseError { line, msg: format!("{f:?}: {e}") })?);
    }
    let h = v.pop().unwrap();
    let w = v.pop().unwrap();
    let y = v.pop().unwrap();
    let x = v.pop().unwrap();
    Ok(Rect { x, y, w, h })
}

pub fn read_dissection(text: &str) -> Result<Dissection, ParseError> {
    let mut target: Option<Rect> = None;
    let mut parts = Vec::new();
    let mut last_line = 0;
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        last_line = line;
        let content = raw.split('#').next().unwrap_or("");
        let fields: Vec<&str> = content.split_whitespace().collect();
        let Some((&keyword, coords)) = fields.split_first() else {
            continue;
        };
        match (keyword, &target) {
            ("target", None) => target = Some(parse_rect(coords, line)?),
            ("target", Some(_)) => {
                return Err(ParseError { line, msg: "second target line".into() });
            }
            ("part", None) => {
                return Err(ParseError { line, msg: "part before target".into() });
            }
            ("part", Some(_)) => parts.push(parse_rect(coords, line)?),
            (other, _) => {
                return Err(ParseError { line, msg: format!("unknown keyword {other:?}") });
            }
        }
    }
    let target = target.ok_or(ParseError { line: last_line, msg: "missing target line".into() })?;
    Dissection::new(target, parts).map_err(|e| ParseError {
        line: last_line,
        msg: match e {
            DissectionError::NoParts => "no part lines".into(),
            other => other.to_string(),
        },
    })
}

pub fn write_dissection(d: &Dissection) -> String {
    let mut out = String::new();
    let mut line = |kw: &str, r: &Rect| {
        out.push_str(&format!("{kw} {} {} {} {}\n", r.x, r.y, r.w, r.h));
    };
    line("target", d.target());
    for p in d.parts() {
        line("part", p);
    }
    out
}
