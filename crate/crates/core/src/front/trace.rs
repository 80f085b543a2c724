use serde::{Deserialize, Serialize};

use super::{ComponentInvariants, EventKind, FrontDiagram, FrontError, Orientation};

/// A strand segment: `column` k lies between events k-1 and k (column 0
/// starts at x = 0 and is glued to the column after the last event).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct SegmentId {
    pub column: usize,
    pub position: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComponentTrace {
    /// Segments in traversal order, following the component's orientation.
    pub segments: Vec<SegmentId>,
    /// Signed number of passages through x = 0.
    pub winding: i64,
    pub cusps_up: usize,
    pub cusps_down: usize,
}

impl ComponentTrace {
    pub fn cusp_count(&self) -> usize {
        self.cusps_up + self.cusps_down
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Trace {
    /// Strand count of columns `0..=E`.
    pub counts: Vec<usize>,
    offsets: Vec<usize>,
    comp: Vec<usize>,
    dir: Vec<i8>,
    pub components: Vec<ComponentTrace>,
}

struct Walker<'a> {
    d: &'a FrontDiagram,
    ncols: usize,
}

impl Walker<'_> {
    fn wrap(&self, col: usize) -> usize {
        if col >= self.ncols {
            0
        } else {
            col
        }
    }

    /// Next segment reached when leaving `(col, pos)` in direction `dir`,
    /// plus the z-change if a cusp is turned (`+1` up, `-1` down).
    fn step(&self, col: usize, pos: usize, dir: i8) -> (usize, usize, i8, i8) {
        let events = &self.d.events;
        if events.is_empty() {
            return (0, pos, dir, 0);
        }
        if dir > 0 {
            let e = events[col];
            let i = e.position;
            let next = self.wrap(col + 1);
            match e.kind {
                EventKind::Crossing => {
                    let p = if pos == i {
                        i + 1
                    } else if pos == i + 1 {
                        i
                    } else {
                        pos
                    };
                    (next, p, 1, 0)
                }
                EventKind::LeftCusp => (next, if pos < i { pos } else { pos + 2 }, 1, 0),
                EventKind::RightCusp => {
                    if pos == i {
                        (col, i + 1, -1, 1)
                    } else if pos == i + 1 {
                        (col, i, -1, -1)
                    } else if pos < i {
                        (next, pos, 1, 0)
                    } else {
                        (next, pos - 2, 1, 0)
                    }
                }
            }
        } else {
            let ev = if col == 0 { events.len() - 1 } else { col - 1 };
            let e = events[ev];
            let i = e.position;
            match e.kind {
                EventKind::Crossing => {
                    let p = if pos == i {
                        i + 1
                    } else if pos == i + 1 {
                        i
                    } else {
                        pos
                    };
                    (ev, p, -1, 0)
                }
                EventKind::LeftCusp => {
                    if pos == i {
                        (col, i + 1, 1, 1)
                    } else if pos == i + 1 {
                        (col, i, 1, -1)
                    } else if pos < i {
                        (ev, pos, -1, 0)
                    } else {
                        (ev, pos - 2, -1, 0)
                    }
                }
                EventKind::RightCusp => (ev, if pos < i { pos } else { pos + 2 }, -1, 0),
            }
        }
    }
}

impl Trace {
    /// Trace with every component in its reference orientation. The diagram's
    /// event word must already be structurally valid.
    pub(crate) fn raw(d: &FrontDiagram) -> Trace {
        let counts = d.column_counts().expect("validated diagram");
        let ncols = d.events.len().max(1);
        let mut offsets = Vec::with_capacity(ncols);
        let mut total = 0;
        for &c in counts.iter().take(ncols) {
            offsets.push(total);
            total += c;
        }
        let mut comp = vec![usize::MAX; total];
        let mut dir = vec![0i8; total];
        let mut components = Vec::new();
        let walker = Walker { d, ncols };

        let mut starts: Vec<(usize, usize)> = (1..=d.base_strands).map(|j| (0, j)).collect();
        for (k, e) in d.events.iter().enumerate() {
            if e.kind == EventKind::LeftCusp {
                starts.push((walker.wrap(k + 1), e.position));
            }
        }

        for (col, pos) in starts {
            if comp[offsets[col] + pos - 1] != usize::MAX {
                continue;
            }
            let id = components.len();
            let mut ct = ComponentTrace { segments: Vec::new(), winding: 0, cusps_up: 0, cusps_down: 0 };
            let (mut c, mut p, mut dr) = (col, pos, 1i8);
            loop {
                let idx = offsets[c] + p - 1;
                comp[idx] = id;
                dir[idx] = dr;
                ct.segments.push(SegmentId { column: c, position: p });
                if c == 0 {
                    ct.winding += dr as i64;
                }
                let (nc, np, nd, dz) = walker.step(c, p, dr);
                match dz {
                    1 => ct.cusps_up += 1,
                    -1 => ct.cusps_down += 1,
                    _ => {}
                }
                if nc == col && np == pos && nd == 1 {
                    break;
                }
                (c, p, dr) = (nc, np, nd);
            }
            components.push(ct);
        }
        Trace { counts, offsets, comp, dir, components }
    }

    /// Trace with the diagram's orientation overrides applied.
    pub(crate) fn oriented(d: &FrontDiagram) -> Trace {
        let mut t = Trace::raw(d);
        for (&c, &o) in &d.orientations {
            if o == Orientation::Negative && c < t.components.len() {
                t.reverse_component(c);
            }
        }
        t
    }

    fn reverse_component(&mut self, c: usize) {
        let ct = &mut self.components[c];
        ct.segments.reverse();
        ct.winding = -ct.winding;
        std::mem::swap(&mut ct.cusps_up, &mut ct.cusps_down);
        for s in &ct.segments {
            let idx = self.offsets[s.column] + s.position - 1;
            self.dir[idx] = -self.dir[idx];
        }
    }

    pub fn num_components(&self) -> usize {
        self.components.len()
    }

    pub fn segment_count(&self) -> usize {
        self.comp.len()
    }

    fn index(&self, seg: SegmentId) -> usize {
        let col = if seg.column >= self.offsets.len() { 0 } else { seg.column };
        self.offsets[col] + seg.position - 1
    }

    /// Component owning a segment. Column `E` is read as column 0.
    pub fn component_of(&self, seg: SegmentId) -> usize {
        self.comp[self.index(seg)]
    }

    /// x-direction (+1 rightward, -1 leftward) of a segment.
    pub fn direction_of(&self, seg: SegmentId) -> i64 {
        self.dir[self.index(seg)] as i64
    }

    fn crossing_pair(&self, d: &FrontDiagram, event: usize) -> Result<(SegmentId, SegmentId), FrontError> {
        let e = d.events.get(event).ok_or(FrontError::EventOutOfRange(event))?;
        if e.kind != EventKind::Crossing {
            return Err(FrontError::NotACrossing(event));
        }
        Ok((
            SegmentId { column: event, position: e.position },
            SegmentId { column: event, position: e.position + 1 },
        ))
    }

    pub fn crossing_sign(&self, d: &FrontDiagram, event: usize) -> Result<i64, FrontError> {
        let (a, b) = self.crossing_pair(d, event)?;
        Ok(self.direction_of(a) * self.direction_of(b))
    }

    pub fn invariants(&self, d: &FrontDiagram, c: usize) -> Result<ComponentInvariants, FrontError> {
        let ct = self.components.get(c).ok_or(FrontError::UnknownComponent(c))?;
        let mut writhe = 0;
        for (k, e) in d.events.iter().enumerate() {
            if e.kind != EventKind::Crossing {
                continue;
            }
            let (a, b) = self.crossing_pair(d, k)?;
            if self.component_of(a) == c && self.component_of(b) == c {
                writhe += self.direction_of(a) * self.direction_of(b);
            }
        }
        let cusps = ct.cusp_count() as i64;
        Ok(ComponentInvariants {
            tb: writhe - cusps / 2,
            rot: (ct.cusps_down as i64 - ct.cusps_up as i64) / 2,
            winding: ct.winding,
        })
    }

    pub fn inter_component_sum(&self, d: &FrontDiagram, a: usize, b: usize) -> Result<i64, FrontError> {
        if a == b {
            return Err(FrontError::SameComponent(a));
        }
        for c in [a, b] {
            if c >= self.components.len() {
                return Err(FrontError::UnknownComponent(c));
            }
        }
        let mut sum = 0;
        for (k, e) in d.events.iter().enumerate() {
            if e.kind != EventKind::Crossing {
                continue;
            }
            let (s, t) = self.crossing_pair(d, k)?;
            let (cs, ct) = (self.component_of(s), self.component_of(t));
            if (cs == a && ct == b) || (cs == b && ct == a) {
                sum += self.direction_of(s) * self.direction_of(t);
            }
        }
        Ok(sum)
    }
}

pub(crate) fn raw_trace(d: &FrontDiagram) -> Trace {
    Trace::raw(d)
}

#[cfg(test)]
mod tests {
    use super::super::*;

    #[test]
    fn parallel_strands_are_separate_components() {
        let d = lambda_front(3).unwrap();
        let t = d.trace_components().unwrap();
        assert_eq!(t.num_components(), 3);
        for c in &t.components {
            assert_eq!(c.winding, 1);
            assert_eq!(c.cusp_count(), 0);
        }
    }

    #[test]
    fn eye_has_winding_zero() {
        let d = FrontDiagram::new(0, vec![Event::left_cusp(1), Event::right_cusp(1)]);
        let t = d.trace_components().unwrap();
        assert_eq!(t.num_components(), 1);
        assert_eq!(t.components[0].winding, 0);
        assert_eq!(t.components[0].segments.len(), 2);
        let inv = d.invariants(0).unwrap();
        assert_eq!((inv.tb, inv.rot, inv.winding), (-1, 0, 0));
    }

    #[test]
    fn torus_braid_two_three_is_one_component() {
        // (σ₁σ₂)² on 3 strands is a 3-cycle.
        let d = torus_braid_front(2, 3).unwrap();
        let t = d.trace_components().unwrap();
        assert_eq!(t.num_components(), 1);
        assert_eq!(t.components[0].winding, 3);
    }

    #[test]
    fn every_segment_belongs_to_one_component() {
        let d = cable_link_front(2, 3).unwrap();
        let t = d.trace_components().unwrap();
        let total: usize = t.components.iter().map(|c| c.segments.len()).sum();
        assert_eq!(total, t.segment_count());
        let mut seen = std::collections::HashSet::new();
        for c in &t.components {
            for s in &c.segments {
                assert!(seen.insert(*s));
            }
        }
    }

    #[test]
    fn direction_flips_exactly_at_cusps() {
        // Zigzag on a rightward strand: the middle segment runs leftward.
        let d = FrontDiagram::new(1, vec![Event::left_cusp(1), Event::right_cusp(2)]);
        let t = d.trace_components().unwrap();
        let c = &t.components[0];
        let dirs: Vec<i64> = c.segments.iter().map(|s| t.direction_of(*s)).collect();
        assert_eq!(dirs, vec![1, 1, -1, 1]);
    }

    #[test]
    fn crossing_signs() {
        let braid = torus_braid_front(2, 3).unwrap();
        for k in 0..braid.events.len() {
            assert_eq!(braid.crossing_sign(k).unwrap(), 1);
        }
        // A rightward strand through the leftward middle of a zigzag.
        let d = FrontDiagram::new(2, vec![Event::left_cusp(2), Event::crossing(1), Event::right_cusp(3)]);
        assert!(d.validate().is_ok());
        let eye = meridian_eye_front();
        assert_eq!(eye.crossing_sign(1).unwrap(), 1);
        assert_eq!(eye.crossing_sign(2).unwrap(), 1);
        assert_eq!(eye.crossing_sign(0), Err(FrontError::NotACrossing(0)));
    }

    #[test]
    fn leftward_strand_crossing_is_negative() {
        // Strand 1 rightward; zigzag on strand 2 pulled down through it, so
        // the leftward middle crosses strand 1 and so does the outgoing branch.
        let d = FrontDiagram::new(
            2,
            vec![Event::left_cusp(1), Event::crossing(2), Event::crossing(1), Event::right_cusp(3)],
        );
        let t = d.trace_components().unwrap();
        assert_eq!(t.num_components(), 2);
        assert_eq!(d.crossing_sign(1).unwrap(), -1);
        assert_eq!(d.crossing_sign(2).unwrap(), 1);
        assert_eq!(d.inter_component_crossing_sum(0, 1).unwrap(), 0);
        let z = d.invariants(1).unwrap();
        assert_eq!((z.tb, z.rot, z.winding), (-1, 1, 1));
    }

    #[test]
    fn reversing_orientation_negates_rot_and_winding() {
        let d = FrontDiagram::new(1, vec![Event::left_cusp(1), Event::right_cusp(2)]);
        let plus = d.invariants(0).unwrap();
        let minus = d.clone().with_orientation(0, Orientation::Negative).invariants(0).unwrap();
        assert_eq!(plus.tb, minus.tb);
        assert_eq!(plus.rot, -minus.rot);
        assert_eq!(plus.winding, -minus.winding);
    }
}
