//! Combinatorial fronts on the annulus `[0, 2π] × ℝ`.
//!
//! A front is a word of stack events read from left to right. Between two
//! consecutive events the front consists of `n` horizontal strands, numbered
//! `1..=n` from bottom to top. Strand ends at `x = 2π` are glued to the base
//! strands at `x = 0` position by position.

mod build;
mod trace;

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

pub use build::gcd;
pub use build::{cable_link_front, lambda_front, meridian_eye_front, torus_braid_front};
pub use trace::{ComponentTrace, SegmentId, Trace};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum EventKind {
    Crossing,
    LeftCusp,
    RightCusp,
}

impl EventKind {
    pub fn symbol(self) -> char {
        match self {
            EventKind::Crossing => 'X',
            EventKind::LeftCusp => 'L',
            EventKind::RightCusp => 'R',
        }
    }
}

/// One event of a front word. `position` is the z-order index (1 = bottom)
/// of the lower strand involved, counted in the column to the left of the
/// event for crossings and right cusps, and the insertion slot for left cusps.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Event {
    pub kind: EventKind,
    pub position: usize,
}

impl Event {
    pub const fn crossing(position: usize) -> Self {
        Event { kind: EventKind::Crossing, position }
    }

    pub const fn left_cusp(position: usize) -> Self {
        Event { kind: EventKind::LeftCusp, position }
    }

    pub const fn right_cusp(position: usize) -> Self {
        Event { kind: EventKind::RightCusp, position }
    }

    /// Change in strand count across the event.
    pub fn delta(&self) -> isize {
        match self.kind {
            EventKind::Crossing => 0,
            EventKind::LeftCusp => 2,
            EventKind::RightCusp => -2,
        }
    }
}

impl fmt::Display for Event {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {}", self.kind.symbol(), self.position)
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Orientation {
    /// Rightward (increasing x) at the reference strand.
    #[default]
    Positive,
    Negative,
}

impl Orientation {
    pub fn sign(self) -> i64 {
        match self {
            Orientation::Positive => 1,
            Orientation::Negative => -1,
        }
    }

    pub fn from_sign(sign: i64) -> Self {
        if sign < 0 {
            Orientation::Negative
        } else {
            Orientation::Positive
        }
    }

    pub fn reversed(self) -> Self {
        match self {
            Orientation::Positive => Orientation::Negative,
            Orientation::Negative => Orientation::Positive,
        }
    }

    pub fn symbol(self) -> char {
        match self {
            Orientation::Positive => '+',
            Orientation::Negative => '-',
        }
    }
}

/// A multi-component front on the annulus.
///
/// Components are numbered deterministically: first by their lowest base
/// strand, then (for components that never cross `x = 0`) by the index of
/// their first left cusp. `orientations` and `labels` hold overrides keyed by
/// that numbering; a missing orientation means [`Orientation::Positive`] and a
/// missing label means the component's own id. Labels carry the order of an
/// ordered link, so `Λ₀ ⊔ Λ₁` and `Λ₁ ⊔ Λ₀` are distinct diagrams.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FrontDiagram {
    pub base_strands: usize,
    pub events: Vec<Event>,
    pub orientations: BTreeMap<usize, Orientation>,
    pub labels: BTreeMap<usize, usize>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Rule {
    PositionZero,
    CrossingNeedsTwoStrands,
    LeftCuspOutOfRange,
    RightCuspNeedsTwoStrands,
    NotClosed,
    UnknownComponent,
    DuplicateLabel,
}

impl fmt::Display for Rule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Rule::PositionZero => "positions start at 1",
            Rule::CrossingNeedsTwoStrands => "crossing needs two strands",
            Rule::LeftCuspOutOfRange => "left cusp slot out of range",
            Rule::RightCuspNeedsTwoStrands => "right cusp needs two strands",
            Rule::NotClosed => "strand count does not close up",
            Rule::UnknownComponent => "decoration names a missing component",
            Rule::DuplicateLabel => "component labels must be distinct",
        };
        f.write_str(s)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Violation {
    /// Index of the offending event, if the rule concerns one.
    pub event: Option<usize>,
    pub rule: Rule,
    pub detail: String,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.event {
            Some(i) => write!(f, "event {i}: {} ({})", self.rule, self.detail),
            None => write!(f, "{} ({})", self.rule, self.detail),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum ValidationReport {
    Ok,
    Violations(Vec<Violation>),
}

impl ValidationReport {
    pub fn is_ok(&self) -> bool {
        matches!(self, ValidationReport::Ok)
    }

    pub fn violations(&self) -> &[Violation] {
        match self {
            ValidationReport::Ok => &[],
            ValidationReport::Violations(v) => v,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FrontError {
    #[error("invalid diagram: {0}")]
    Invalid(String),
    #[error("no component with id {0}")]
    UnknownComponent(usize),
    #[error("event {0} is not a crossing")]
    NotACrossing(usize),
    #[error("event index {0} out of range")]
    EventOutOfRange(usize),
    #[error("components must differ (got {0} twice)")]
    SameComponent(usize),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

/// Classical invariants of one oriented component.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct ComponentInvariants {
    pub tb: i64,
    pub rot: i64,
    pub winding: i64,
}

impl FrontDiagram {
    pub fn new(base_strands: usize, events: Vec<Event>) -> Self {
        FrontDiagram { base_strands, events, ..Default::default() }
    }

    pub fn with_orientation(mut self, component: usize, orientation: Orientation) -> Self {
        self.orientations.insert(component, orientation);
        self.normalize_decorations();
        self
    }

    pub fn with_label(mut self, component: usize, label: usize) -> Self {
        self.labels.insert(component, label);
        self.normalize_decorations();
        self
    }

    /// Drops overrides that restate the default.
    pub fn normalize_decorations(&mut self) {
        self.orientations.retain(|_, o| *o != Orientation::Positive);
        self.labels.retain(|c, l| c != l);
    }

    pub fn orientation(&self, component: usize) -> Orientation {
        self.orientations.get(&component).copied().unwrap_or_default()
    }

    pub fn label(&self, component: usize) -> usize {
        self.labels.get(&component).copied().unwrap_or(component)
    }

    /// Strand counts of columns `0..=events.len()`, or `None` if some event
    /// would drive the count negative.
    pub(crate) fn column_counts(&self) -> Option<Vec<usize>> {
        let mut counts = Vec::with_capacity(self.events.len() + 1);
        let mut n = self.base_strands as isize;
        counts.push(self.base_strands);
        for e in &self.events {
            n += e.delta();
            if n < 0 {
                return None;
            }
            counts.push(n as usize);
        }
        Some(counts)
    }

    /// Structural check of the event word only (no decorations).
    pub(crate) fn check_events(&self) -> Option<Violation> {
        let mut n = self.base_strands;
        for (idx, e) in self.events.iter().enumerate() {
            let i = e.position;
            if i == 0 {
                return Some(Violation {
                    event: Some(idx),
                    rule: Rule::PositionZero,
                    detail: format!("{e}"),
                });
            }
            match e.kind {
                EventKind::Crossing if i + 1 > n => {
                    return Some(Violation {
                        event: Some(idx),
                        rule: Rule::CrossingNeedsTwoStrands,
                        detail: format!("{e} with {n} strands"),
                    })
                }
                EventKind::LeftCusp if i > n + 1 => {
                    return Some(Violation {
                        event: Some(idx),
                        rule: Rule::LeftCuspOutOfRange,
                        detail: format!("{e} with {n} strands"),
                    })
                }
                EventKind::RightCusp if i + 1 > n => {
                    return Some(Violation {
                        event: Some(idx),
                        rule: Rule::RightCuspNeedsTwoStrands,
                        detail: format!("{e} with {n} strands"),
                    })
                }
                _ => {}
            }
            n = (n as isize + e.delta()) as usize;
        }
        if n != self.base_strands {
            return Some(Violation {
                event: None,
                rule: Rule::NotClosed,
                detail: format!("ends with {n} strands, starts with {}", self.base_strands),
            });
        }
        None
    }

    pub fn validate(&self) -> ValidationReport {
        if let Some(v) = self.check_events() {
            return ValidationReport::Violations(vec![v]);
        }
        let components = trace::raw_trace(self).num_components();
        let mut violations = Vec::new();
        for &c in self.orientations.keys().chain(self.labels.keys()) {
            if c >= components {
                violations.push(Violation {
                    event: None,
                    rule: Rule::UnknownComponent,
                    detail: format!("component {c}, diagram has {components}"),
                });
            }
        }
        let mut seen = std::collections::BTreeSet::new();
        for c in 0..components {
            if !seen.insert(self.label(c)) {
                violations.push(Violation {
                    event: None,
                    rule: Rule::DuplicateLabel,
                    detail: format!("label {} repeated", self.label(c)),
                });
            }
        }
        if violations.is_empty() {
            ValidationReport::Ok
        } else {
            ValidationReport::Violations(violations)
        }
    }

    fn ensure_valid(&self) -> Result<(), FrontError> {
        match self.validate() {
            ValidationReport::Ok => Ok(()),
            ValidationReport::Violations(v) => Err(FrontError::Invalid(
                v.iter().map(|v| v.to_string()).collect::<Vec<_>>().join("; "),
            )),
        }
    }

    pub fn trace_components(&self) -> Result<Trace, FrontError> {
        self.ensure_valid()?;
        Ok(Trace::oriented(self))
    }

    pub fn component_count(&self) -> Result<usize, FrontError> {
        Ok(self.trace_components()?.components.len())
    }

    /// Sign of a crossing: the product of the x-directions of its two strands.
    pub fn crossing_sign(&self, event: usize) -> Result<i64, FrontError> {
        let trace = self.trace_components()?;
        trace.crossing_sign(self, event)
    }

    pub fn invariants(&self, component: usize) -> Result<ComponentInvariants, FrontError> {
        let trace = self.trace_components()?;
        trace.invariants(self, component)
    }

    pub fn all_invariants(&self) -> Result<Vec<ComponentInvariants>, FrontError> {
        let trace = self.trace_components()?;
        (0..trace.components.len()).map(|c| trace.invariants(self, c)).collect()
    }

    /// Signed count of crossings between two distinct components.
    pub fn inter_component_crossing_sum(&self, a: usize, b: usize) -> Result<i64, FrontError> {
        let trace = self.trace_components()?;
        trace.inter_component_sum(self, a, b)
    }

    pub fn crossing_count(&self) -> usize {
        self.events.iter().filter(|e| e.kind == EventKind::Crossing).count()
    }
}
