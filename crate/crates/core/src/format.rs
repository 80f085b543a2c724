//! Plain-text front files.
//!
//! ```text
//! front v1
//! strands 1
//! events
//! L 2
//! X 1
//! X 1
//! R 2
//! orient 0 -
//! label 0 0
//! ```
//!
//! Blank lines and lines starting with `#` are ignored. Orientation and label
//! lines come after all events.

use std::fmt::Write as _;

use thiserror::Error;

use crate::front::{Event, EventKind, FrontDiagram, Orientation};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}, column {column}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub message: String,
}

struct Line<'a> {
    number: usize,
    text: &'a str,
}

impl<'a> Line<'a> {
    fn error(&self, token: Option<&str>, message: impl Into<String>) -> ParseError {
        let column = token.map_or(1, |t| t.as_ptr() as usize - self.text.as_ptr() as usize + 1);
        ParseError { line: self.number, column, message: message.into() }
    }

    fn tokens(&self) -> Vec<&'a str> {
        self.text.split_whitespace().collect()
    }

    fn int(&self, token: &str, what: &str) -> Result<usize, ParseError> {
        token.parse().map_err(|_| self.error(Some(token), format!("expected non-negative integer {what}, got {token:?}")))
    }

    fn arity(&self, tokens: &[&str], n: usize) -> Result<(), ParseError> {
        match tokens.get(n) {
            Some(extra) => Err(self.error(Some(extra), "unexpected trailing token")),
            None if tokens.len() < n => Err(self.error(None, format!("expected {n} tokens"))),
            None => Ok(()),
        }
    }
}

pub fn parse_front(text: &str) -> Result<FrontDiagram, ParseError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, text)| Line { number: i + 1, text })
        .filter(|l| {
            let t = l.text.trim();
            !t.is_empty() && !t.starts_with('#')
        });
    let eof = |what: &str| ParseError { line: text.lines().count() + 1, column: 1, message: format!("expected {what}") };

    let header = lines.next().ok_or_else(|| eof("\"front v1\""))?;
    if header.tokens() != ["front", "v1"] {
        return Err(header.error(header.tokens().first().copied(), "expected \"front v1\""));
    }
    let strands = lines.next().ok_or_else(|| eof("\"strands N\""))?;
    let t = strands.tokens();
    if t[0] != "strands" {
        return Err(strands.error(Some(t[0]), "expected \"strands N\""));
    }
    strands.arity(&t, 2)?;
    let base = strands.int(t[1], "strand count")?;
    let events_line = lines.next().ok_or_else(|| eof("\"events\""))?;
    let t = events_line.tokens();
    if t != ["events"] {
        return Err(events_line.error(Some(t[0]), "expected \"events\""));
    }

    let mut d = FrontDiagram::new(base, Vec::new());
    let mut in_events = true;
    for line in lines {
        let t = line.tokens();
        let kind = match t[0] {
            "X" => Some(EventKind::Crossing),
            "L" => Some(EventKind::LeftCusp),
            "R" => Some(EventKind::RightCusp),
            _ => None,
        };
        if let Some(kind) = kind {
            if !in_events {
                return Err(line.error(Some(t[0]), "event after orient/label lines"));
            }
            line.arity(&t, 2)?;
            let position = line.int(t[1], "position")?;
            if position == 0 {
                return Err(line.error(Some(t[1]), "positions start at 1"));
            }
            d.events.push(Event { kind, position });
            continue;
        }
        in_events = false;
        match t[0] {
            "orient" => {
                line.arity(&t, 3)?;
                let c = line.int(t[1], "component")?;
                let o = match t[2] {
                    "+" => Orientation::Positive,
                    "-" => Orientation::Negative,
                    other => return Err(line.error(Some(t[2]), format!("expected + or -, got {other:?}"))),
                };
                if d.orientations.insert(c, o).is_some() {
                    return Err(line.error(Some(t[1]), format!("component {c} oriented twice")));
                }
            }
            "label" => {
                line.arity(&t, 3)?;
                let c = line.int(t[1], "component")?;
                let l = line.int(t[2], "label")?;
                if d.labels.insert(c, l).is_some() {
                    return Err(line.error(Some(t[1]), format!("component {c} labelled twice")));
                }
            }
            other => return Err(line.error(Some(t[0]), format!("unknown directive {other:?}"))),
        }
    }
    d.normalize_decorations();
    Ok(d)
}

pub fn serialize_front(d: &FrontDiagram) -> String {
    let mut out = format!("front v1\nstrands {}\nevents\n", d.base_strands);
    for e in &d.events {
        let _ = writeln!(out, "{e}");
    }
    for (c, o) in &d.orientations {
        if *o != Orientation::Positive {
            let _ = writeln!(out, "orient {c} {}", o.symbol());
        }
    }
    for (c, l) in &d.labels {
        if c != l {
            let _ = writeln!(out, "label {c} {l}");
        }
    }
    out
}
