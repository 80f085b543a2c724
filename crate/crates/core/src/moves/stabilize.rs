use std::collections::{HashSet, VecDeque};

use serde::{Deserialize, Serialize};

use super::{apply_prepared, column_cap, planar_sites, splice, MoveError, Prepared};
use crate::front::{Event, EventKind, FrontDiagram, FrontError, SegmentId};

/// Number of planar moves explored when looking for a zigzag to remove.
pub const DEFAULT_DESTABILIZE_WINDOW: usize = 8;

const DESTABILIZE_STATE_CAP: usize = 20_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Sign {
    Positive,
    Negative,
}

impl Sign {
    pub fn value(self) -> i64 {
        match self {
            Sign::Positive => 1,
            Sign::Negative => -1,
        }
    }
}

/// Zigzag on the strand at position `i`: both cusps below (`descending`)
/// or both above.
fn zigzag(descending: bool, i: usize) -> [Event; 2] {
    if descending {
        [Event::left_cusp(i), Event::right_cusp(i + 1)]
    } else {
        [Event::left_cusp(i + 1), Event::right_cusp(i)]
    }
}

/// Adds a zigzag to `component` on its first segment. A positive
/// stabilisation lowers tb by one and raises rot by one.
pub fn stabilize(d: &FrontDiagram, component: usize, sign: Sign) -> Result<FrontDiagram, MoveError> {
    let p = Prepared::new(d)?;
    let ct = p.raw.components.get(component).ok_or(FrontError::UnknownComponent(component))?;
    let seg = ct.segments[0];
    let dir = p.actual_dir(seg);
    let descending = (dir > 0) == (sign == Sign::Positive);
    Ok(splice(&p, seg.column, 0, &zigzag(descending, seg.position)))
}

pub fn destabilize(d: &FrontDiagram, component: usize, sign: Sign) -> Result<FrontDiagram, MoveError> {
    destabilize_within(d, component, sign, DEFAULT_DESTABILIZE_WINDOW)
}

/// Removes a zigzag of the given sign from `component`, looking through all
/// words reachable by at most `window` planar moves.
pub fn destabilize_within(
    d: &FrontDiagram,
    component: usize,
    sign: Sign,
    window: usize,
) -> Result<FrontDiagram, MoveError> {
    let p = Prepared::new(d)?;
    if component >= p.raw.num_components() {
        return Err(FrontError::UnknownComponent(component).into());
    }
    let label = d.label(component);
    let cap = column_cap(&p.raw);
    let mut start = d.clone();
    start.normalize_decorations();
    let mut seen = HashSet::from([start.clone()]);
    let mut queue = VecDeque::from([(start, 0usize)]);
    while let Some((x, depth)) = queue.pop_front() {
        let px = Prepared::trusted(&x);
        if let Some(k) = find_zigzag(&px, label, sign) {
            return Ok(splice(&px, k, 2, &[]));
        }
        if depth == window {
            continue;
        }
        for site in planar_sites(&x) {
            let next = apply_prepared(&px, site)?;
            if next.column_counts().expect("valid").into_iter().max().unwrap_or(0) > cap {
                continue;
            }
            if seen.len() < DESTABILIZE_STATE_CAP && seen.insert(next.clone()) {
                queue.push_back((next, depth + 1));
            }
        }
    }
    Err(MoveError::NotFound)
}

fn find_zigzag(p: &Prepared<'_>, label: usize, sign: Sign) -> Option<usize> {
    let ev = &p.d.events;
    for k in 0..ev.len().saturating_sub(1) {
        let (a, b) = (ev[k], ev[k + 1]);
        if a.kind != EventKind::LeftCusp || b.kind != EventKind::RightCusp {
            continue;
        }
        let (descending, i) = if b.position == a.position + 1 {
            (true, a.position)
        } else if a.position == b.position + 1 {
            (false, b.position)
        } else {
            continue;
        };
        let seg = SegmentId { column: k, position: i };
        if p.d.label(p.raw.component_of(seg)) != label {
            continue;
        }
        let positive = (p.actual_dir(seg) > 0) == descending;
        if positive == (sign == Sign::Positive) {
            return Some(k);
        }
    }
    None
}
