//! Legendrian Reidemeister moves as local rewrites of event words.
//!
//! Planar moves ([`MoveKind::Commute`], [`MoveKind::RotateBasepoint`]) only
//! change how the same front is written down. The remaining moves are the
//! front versions of the Legendrian Reidemeister moves: the triple point, a
//! cusp passing through a strand (four variants), and a cusp pair sliding
//! through its own crossing (the kink, two variants). Every move comes with
//! an inverse, and every rewrite carries component orientations and labels
//! across to the new word.

pub(crate) mod canonical;
mod stabilize;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::front::{Event, EventKind, FrontDiagram, FrontError, Orientation, SegmentId, Trace};

pub use canonical::{canonical_key, column_cap, planar_orbit, CanonicalKey, OrbitEntry};
pub use stabilize::{destabilize, destabilize_within, stabilize, Sign, DEFAULT_DESTABILIZE_WINDOW};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MoveError {
    #[error(transparent)]
    Front(#[from] FrontError),
    #[error("move {0:?} does not apply here")]
    IllegalSite(MoveSite),
    #[error("no zigzag of the requested sign found within the commutation window")]
    NotFound,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum CommuteVariant {
    /// Adjacent events on disjoint parts of the strand stack.
    Plain,
    /// A right cusp followed by a left cusp born in the same gap; the new pair
    /// is moved in front and placed below the closing pair.
    PairBelow,
    /// As [`CommuteVariant::PairBelow`] with the new pair placed above.
    PairAbove,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum CuspSide {
    Left,
    Right,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum StrandSide {
    Below,
    Above,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum KinkSide {
    /// `L i, X i+1, R i` on the strand at position i.
    Lower,
    /// `L i+1, X i, R i+1` on the strand at position i.
    Upper,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Action {
    /// Creates crossings.
    Insert,
    /// Removes crossings.
    Remove,
}

impl Action {
    fn inverse(self) -> Action {
        match self {
            Action::Insert => Action::Remove,
            Action::Remove => Action::Insert,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum MoveKind {
    Commute(CommuteVariant),
    /// `forward`: the first event moves to the end of the word.
    RotateBasepoint { forward: bool },
    TriplePoint,
    CuspThroughStrand { cusp: CuspSide, strand: StrandSide, action: Action },
    /// Type-I move: a kink with two cusps and one crossing.
    CuspCrossingSlide { side: KinkSide, action: Action },
}

impl MoveKind {
    pub fn is_planar(&self) -> bool {
        matches!(self, MoveKind::Commute(_) | MoveKind::RotateBasepoint { .. })
    }
}

/// Where a move applies. `index` is the first event of the rewritten window
/// (for insertions, the slot the new events go into). `position` is only
/// used by kink insertion, where it names the strand receiving the kink.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct MoveSite {
    pub kind: MoveKind,
    pub index: usize,
    pub position: usize,
}

impl MoveSite {
    pub fn new(kind: MoveKind, index: usize) -> Self {
        MoveSite { kind, index, position: 0 }
    }
}

impl std::fmt::Display for MoveSite {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let name = match self.kind {
            MoveKind::Commute(CommuteVariant::Plain) => "commute".to_string(),
            MoveKind::Commute(CommuteVariant::PairBelow) => "commute-pair-below".to_string(),
            MoveKind::Commute(CommuteVariant::PairAbove) => "commute-pair-above".to_string(),
            MoveKind::RotateBasepoint { forward: true } => "rotate-forward".to_string(),
            MoveKind::RotateBasepoint { forward: false } => "rotate-backward".to_string(),
            MoveKind::TriplePoint => "triple-point".to_string(),
            MoveKind::CuspThroughStrand { cusp, strand, action } => format!(
                "cusp-through-strand-{}-{}-{}",
                match cusp {
                    CuspSide::Left => "left",
                    CuspSide::Right => "right",
                },
                match strand {
                    StrandSide::Below => "below",
                    StrandSide::Above => "above",
                },
                match action {
                    Action::Insert => "insert",
                    Action::Remove => "remove",
                }
            ),
            MoveKind::CuspCrossingSlide { side, action } => format!(
                "kink-{}-{}",
                match side {
                    KinkSide::Lower => "lower",
                    KinkSide::Upper => "upper",
                },
                match action {
                    Action::Insert => "insert",
                    Action::Remove => "remove",
                }
            ),
        };
        if self.position > 0 {
            write!(f, "{name}@{}:{}", self.index, self.position)
        } else {
            write!(f, "{name}@{}", self.index)
        }
    }
}

/// A validated diagram with its reference trace, reused across many moves.
pub(crate) struct Prepared<'a> {
    pub d: &'a FrontDiagram,
    pub counts: Vec<usize>,
    pub raw: Trace,
}

impl<'a> Prepared<'a> {
    pub fn new(d: &'a FrontDiagram) -> Result<Self, FrontError> {
        if let Some(v) = d.check_events() {
            return Err(FrontError::Invalid(v.to_string()));
        }
        let counts = d.column_counts().expect("checked");
        let raw = Trace::raw(d);
        Ok(Prepared { d, counts, raw })
    }

    /// Assumes the event word is already checked.
    pub fn trusted(d: &'a FrontDiagram) -> Self {
        let counts = d.column_counts().expect("checked");
        let raw = Trace::raw(d);
        Prepared { d, counts, raw }
    }

    fn actual_dir(&self, seg: SegmentId) -> i64 {
        let c = self.raw.component_of(seg);
        self.raw.direction_of(seg) * self.d.orientation(c).sign()
    }

    fn ncols(&self) -> usize {
        self.d.events.len().max(1)
    }
}

/// Builds a diagram from a new word, copying orientation and label of every
/// component from a column the rewrite left untouched. `column_map` sends a
/// column of the new word to the identical column of the old word.
pub(crate) fn rebuild(
    old: &Prepared<'_>,
    base_strands: usize,
    events: Vec<Event>,
    column_map: impl Fn(usize) -> Option<usize>,
) -> FrontDiagram {
    let mut d = FrontDiagram::new(base_strands, events);
    debug_assert!(d.check_events().is_none(), "rewrite produced an invalid word: {d:?}");
    let raw = Trace::raw(&d);
    let counts = d.column_counts().expect("valid rewrite");
    let n = raw.num_components();
    let mut done = vec![false; n];
    let mut remaining = n;
    let ncols = d.events.len().max(1);
    'outer: for col in 0..ncols {
        let Some(old_col) = column_map(col) else { continue };
        for pos in 1..=counts[col] {
            let seg = SegmentId { column: col, position: pos };
            let c = raw.component_of(seg);
            if done[c] {
                continue;
            }
            let old_seg = SegmentId { column: old_col, position: pos };
            let old_c = old.raw.component_of(old_seg);
            let sign = old.actual_dir(old_seg) * raw.direction_of(seg);
            if sign < 0 {
                d.orientations.insert(c, Orientation::Negative);
            }
            let label = old.d.label(old_c);
            if label != c {
                d.labels.insert(c, label);
            }
            done[c] = true;
            remaining -= 1;
            if remaining == 0 {
                break 'outer;
            }
        }
    }
    debug_assert_eq!(remaining, 0, "component lost its decoration");
    d
}

/// Replaces `len` events starting at `start` by `replacement`.
pub(crate) fn splice(old: &Prepared<'_>, start: usize, len: usize, replacement: &[Event]) -> FrontDiagram {
    let events = &old.d.events;
    let mut out = Vec::with_capacity(events.len() + replacement.len() - len);
    out.extend_from_slice(&events[..start]);
    out.extend_from_slice(replacement);
    out.extend_from_slice(&events[start + len..]);
    let new_len = replacement.len();
    rebuild(old, old.d.base_strands, out, |c| {
        if c <= start {
            Some(c)
        } else if c >= start + new_len {
            Some(c + len - new_len)
        } else {
            None
        }
    })
}

fn rotate(old: &Prepared<'_>, forward: bool) -> FrontDiagram {
    let events = &old.d.events;
    let e = events.len();
    if e == 0 {
        return old.d.clone();
    }
    let mut out = Vec::with_capacity(e);
    if forward {
        out.extend_from_slice(&events[1..]);
        out.push(events[0]);
        rebuild(old, old.counts[1], out, |c| Some((c + 1) % e))
    } else {
        out.push(events[e - 1]);
        out.extend_from_slice(&events[..e - 1]);
        rebuild(old, old.counts[e - 1], out, |c| Some((c + e - 1) % e))
    }
}

/// Footprint of an event in doubled coordinates: strand j sits at 2j and the
/// gap below it at 2j-1.
fn footprint_in(e: Event) -> (usize, usize) {
    let i = e.position;
    match e.kind {
        EventKind::LeftCusp => (2 * i - 1, 2 * i - 1),
        _ => (2 * i, 2 * i + 2),
    }
}

fn footprint_out(e: Event) -> (usize, usize) {
    let i = e.position;
    match e.kind {
        EventKind::RightCusp => (2 * i - 1, 2 * i - 1),
        _ => (2 * i, 2 * i + 2),
    }
}

fn shifted(e: Event, by: isize) -> Event {
    Event { kind: e.kind, position: (e.position as isize + by) as usize }
}

/// The pair `(b', a')` obtained by moving `b` in front of `a`.
fn commute_pair(a: Event, b: Event, variant: CommuteVariant) -> Option<(Event, Event)> {
    let (_, a_hi) = footprint_out(a);
    let (a_lo, _) = footprint_out(a);
    let (b_lo, b_hi) = footprint_in(b);
    match variant {
        CommuteVariant::Plain => {
            if b_lo > a_hi {
                Some((shifted(b, -a.delta()), a))
            } else if b_hi < a_lo {
                Some((b, shifted(a, b.delta())))
            } else {
                None
            }
        }
        CommuteVariant::PairBelow | CommuteVariant::PairAbove => {
            if a.kind != EventKind::RightCusp || b.kind != EventKind::LeftCusp || a.position != b.position {
                return None;
            }
            let p = a.position;
            if variant == CommuteVariant::PairBelow {
                Some((Event::left_cusp(p), Event::right_cusp(p + 2)))
            } else {
                Some((Event::left_cusp(p + 2), Event::right_cusp(p)))
            }
        }
    }
}

fn cts_insert(e: Event, cusp: CuspSide, strand: StrandSide, n_in: usize) -> Option<[Event; 3]> {
    let j = e.position;
    match (e.kind, cusp, strand) {
        (EventKind::LeftCusp, CuspSide::Left, StrandSide::Below) if j >= 2 => {
            Some([Event::left_cusp(j - 1), Event::crossing(j), Event::crossing(j - 1)])
        }
        (EventKind::LeftCusp, CuspSide::Left, StrandSide::Above) if j <= n_in => {
            Some([Event::left_cusp(j + 1), Event::crossing(j), Event::crossing(j + 1)])
        }
        (EventKind::RightCusp, CuspSide::Right, StrandSide::Below) if j >= 2 => {
            Some([Event::crossing(j - 1), Event::crossing(j), Event::right_cusp(j - 1)])
        }
        (EventKind::RightCusp, CuspSide::Right, StrandSide::Above) if j + 2 <= n_in => {
            Some([Event::crossing(j + 1), Event::crossing(j), Event::right_cusp(j + 1)])
        }
        _ => None,
    }
}

fn cts_remove(w: &[Event], cusp: CuspSide, strand: StrandSide) -> Option<Event> {
    use EventKind::*;
    let [a, b, c] = [w[0], w[1], w[2]];
    match (cusp, strand) {
        (CuspSide::Left, StrandSide::Below) => {
            let i = a.position;
            (a.kind == LeftCusp && b == Event::crossing(i + 1) && c == Event::crossing(i)).then(|| Event::left_cusp(i + 1))
        }
        (CuspSide::Left, StrandSide::Above) => {
            if a.kind != LeftCusp || a.position < 2 {
                return None;
            }
            let i = a.position - 1;
            (b == Event::crossing(i) && c == Event::crossing(i + 1)).then(|| Event::left_cusp(i))
        }
        (CuspSide::Right, StrandSide::Below) => {
            let i = c.position;
            (c.kind == RightCusp && a == Event::crossing(i) && b == Event::crossing(i + 1)).then(|| Event::right_cusp(i + 1))
        }
        (CuspSide::Right, StrandSide::Above) => {
            if c.kind != RightCusp || c.position < 2 {
                return None;
            }
            let i = c.position - 1;
            (a == Event::crossing(i + 1) && b == Event::crossing(i)).then(|| Event::right_cusp(i))
        }
    }
}

fn kink_events(side: KinkSide, i: usize) -> [Event; 3] {
    match side {
        KinkSide::Lower => [Event::left_cusp(i), Event::crossing(i + 1), Event::right_cusp(i)],
        KinkSide::Upper => [Event::left_cusp(i + 1), Event::crossing(i), Event::right_cusp(i + 1)],
    }
}

/// Strand position carrying the kink in window `w`, if `w` is a kink.
fn kink_strand(w: &[Event], side: KinkSide) -> Option<usize> {
    let l = w[0];
    if l.kind != EventKind::LeftCusp {
        return None;
    }
    let i = match side {
        KinkSide::Lower => l.position,
        KinkSide::Upper => l.position.checked_sub(1).filter(|&i| i >= 1)?,
    };
    (w == kink_events(side, i)).then_some(i)
}

fn triple_other(w: &[Event]) -> Option<[Event; 3]> {
    let [a, b, c] = [w[0], w[1], w[2]];
    if a.kind != EventKind::Crossing || a != c || b.kind != EventKind::Crossing {
        return None;
    }
    let i = a.position;
    if b.position == i + 1 {
        Some([Event::crossing(i + 1), Event::crossing(i), Event::crossing(i + 1)])
    } else if i >= 2 && b.position == i - 1 {
        Some([Event::crossing(i - 1), Event::crossing(i), Event::crossing(i - 1)])
    } else {
        None
    }
}

const CTS_VARIANTS: [(CuspSide, StrandSide); 4] = [
    (CuspSide::Left, StrandSide::Below),
    (CuspSide::Left, StrandSide::Above),
    (CuspSide::Right, StrandSide::Below),
    (CuspSide::Right, StrandSide::Above),
];

const COMMUTE_VARIANTS: [CommuteVariant; 3] =
    [CommuteVariant::Plain, CommuteVariant::PairBelow, CommuteVariant::PairAbove];

/// Sites of planar moves only.
pub(crate) fn planar_sites(d: &FrontDiagram) -> Vec<MoveSite> {
    let mut sites = vec![
        MoveSite::new(MoveKind::RotateBasepoint { forward: true }, 0),
        MoveSite::new(MoveKind::RotateBasepoint { forward: false }, 0),
    ];
    for k in 0..d.events.len().saturating_sub(1) {
        for v in COMMUTE_VARIANTS {
            if commute_pair(d.events[k], d.events[k + 1], v).is_some() {
                sites.push(MoveSite::new(MoveKind::Commute(v), k));
            }
        }
    }
    sites
}

/// Sites of the Reidemeister-type moves other than kink insertion.
pub(crate) fn rewrite_sites(p: &Prepared<'_>) -> Vec<MoveSite> {
    let d = p.d;
    let ev = &d.events;
    let mut sites = Vec::new();
    for k in 0..ev.len() {
        for (cusp, strand) in CTS_VARIANTS {
            if cts_insert(ev[k], cusp, strand, p.counts[k]).is_some() {
                sites.push(MoveSite::new(MoveKind::CuspThroughStrand { cusp, strand, action: Action::Insert }, k));
            }
        }
        if k + 3 <= ev.len() {
            let w = &ev[k..k + 3];
            if triple_other(w).is_some() {
                sites.push(MoveSite::new(MoveKind::TriplePoint, k));
            }
            for (cusp, strand) in CTS_VARIANTS {
                if cts_remove(w, cusp, strand).is_some() {
                    sites.push(MoveSite::new(MoveKind::CuspThroughStrand { cusp, strand, action: Action::Remove }, k));
                }
            }
            for side in [KinkSide::Lower, KinkSide::Upper] {
                if kink_strand(w, side).is_some() {
                    sites.push(MoveSite::new(MoveKind::CuspCrossingSlide { side, action: Action::Remove }, k));
                }
            }
        }
    }
    sites
}

/// Kink insertion sites. With `one_per_arc`, a kink is offered only on the
/// first column of every arc, since sliding it along the arc is planar.
pub(crate) fn kink_sites(p: &Prepared<'_>, one_per_arc: bool) -> Vec<MoveSite> {
    let mut sites = Vec::new();
    for k in 0..p.ncols() {
        let positions: Vec<usize> = if !one_per_arc || k == 0 {
            (1..=p.counts[k]).collect()
        } else {
            let e = p.d.events[k - 1];
            match e.kind {
                EventKind::RightCusp => vec![],
                _ => vec![e.position, e.position + 1],
            }
        };
        for pos in positions {
            for side in [KinkSide::Lower, KinkSide::Upper] {
                sites.push(MoveSite {
                    kind: MoveKind::CuspCrossingSlide { side, action: Action::Insert },
                    index: k,
                    position: pos,
                });
            }
        }
    }
    sites
}

/// Every legal move site of a valid diagram.
pub fn applicable_moves(d: &FrontDiagram) -> Result<Vec<MoveSite>, MoveError> {
    let p = Prepared::new(d)?;
    let mut sites = planar_sites(d);
    sites.extend(rewrite_sites(&p));
    sites.extend(kink_sites(&p, false));
    Ok(sites)
}

pub(crate) fn apply_prepared(p: &Prepared<'_>, site: MoveSite) -> Result<FrontDiagram, MoveError> {
    let ev = &p.d.events;
    let k = site.index;
    let illegal = || MoveError::IllegalSite(site);
    let window = |len: usize| ev.get(k..k + len).ok_or_else(illegal);
    match site.kind {
        MoveKind::RotateBasepoint { forward } => Ok(rotate(p, forward)),
        MoveKind::Commute(v) => {
            let w = window(2)?;
            let (b, a) = commute_pair(w[0], w[1], v).ok_or_else(illegal)?;
            Ok(splice(p, k, 2, &[b, a]))
        }
        MoveKind::TriplePoint => {
            let other = triple_other(window(3)?).ok_or_else(illegal)?;
            Ok(splice(p, k, 3, &other))
        }
        MoveKind::CuspThroughStrand { cusp, strand, action: Action::Insert } => {
            let e = *ev.get(k).ok_or_else(illegal)?;
            let rep = cts_insert(e, cusp, strand, p.counts[k]).ok_or_else(illegal)?;
            Ok(splice(p, k, 1, &rep))
        }
        MoveKind::CuspThroughStrand { cusp, strand, action: Action::Remove } => {
            let e = cts_remove(window(3)?, cusp, strand).ok_or_else(illegal)?;
            Ok(splice(p, k, 3, &[e]))
        }
        MoveKind::CuspCrossingSlide { side, action: Action::Insert } => {
            if k > ev.len() || site.position == 0 || site.position > p.counts[k] {
                return Err(illegal());
            }
            Ok(splice(p, k, 0, &kink_events(side, site.position)))
        }
        MoveKind::CuspCrossingSlide { side, action: Action::Remove } => {
            kink_strand(window(3)?, side).ok_or_else(illegal)?;
            Ok(splice(p, k, 3, &[]))
        }
    }
}

pub fn apply_move(d: &FrontDiagram, site: MoveSite) -> Result<FrontDiagram, MoveError> {
    let p = Prepared::new(d)?;
    apply_prepared(&p, site)
}

/// The site on `after = apply_move(before, site)` that undoes `site`.
pub fn inverse_site(before: &FrontDiagram, site: MoveSite) -> MoveSite {
    let k = site.index;
    match site.kind {
        MoveKind::RotateBasepoint { forward } => MoveSite::new(MoveKind::RotateBasepoint { forward: !forward }, 0),
        MoveKind::Commute(CommuteVariant::Plain) => {
            let (a, b) = (before.events[k], before.events[k + 1]);
            let variant = match (a.kind, b.kind) {
                (EventKind::LeftCusp, EventKind::RightCusp) if b.position == a.position + 2 => CommuteVariant::PairBelow,
                (EventKind::LeftCusp, EventKind::RightCusp) if a.position == b.position + 2 => CommuteVariant::PairAbove,
                _ => CommuteVariant::Plain,
            };
            MoveSite::new(MoveKind::Commute(variant), k)
        }
        MoveKind::Commute(_) => MoveSite::new(MoveKind::Commute(CommuteVariant::Plain), k),
        MoveKind::TriplePoint => site,
        MoveKind::CuspThroughStrand { cusp, strand, action } => {
            MoveSite::new(MoveKind::CuspThroughStrand { cusp, strand, action: action.inverse() }, k)
        }
        MoveKind::CuspCrossingSlide { side, action: Action::Insert } => {
            MoveSite::new(MoveKind::CuspCrossingSlide { side, action: Action::Remove }, k)
        }
        MoveKind::CuspCrossingSlide { side, action: Action::Remove } => {
            let i = kink_strand(&before.events[k..k + 3], side).expect("site was legal");
            MoveSite { kind: MoveKind::CuspCrossingSlide { side, action: Action::Insert }, index: k, position: i }
        }
    }
}
