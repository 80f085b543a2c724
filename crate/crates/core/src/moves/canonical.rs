use std::collections::{HashMap, HashSet, VecDeque};

use serde::{Deserialize, Serialize};

use super::{apply_prepared, planar_sites, MoveError, MoveSite, Prepared};
use crate::front::{FrontDiagram, FrontError, Orientation};

/// Isotopy-invariant name of a planar class: the smallest encoding over all
/// ways of writing the same front (commutations and basepoint rotations),
/// including component orientations and labels.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct CanonicalKey(pub Vec<u32>);

const SEPARATOR: u32 = u32::MAX;

pub(crate) fn encode(d: &FrontDiagram, components: usize) -> Vec<u32> {
    let mut out = Vec::with_capacity(d.events.len() + components + 2);
    out.push(d.base_strands as u32);
    for e in &d.events {
        let kind = match e.kind {
            crate::front::EventKind::Crossing => 0u32,
            crate::front::EventKind::LeftCusp => 1,
            crate::front::EventKind::RightCusp => 2,
        };
        out.push((kind << 24) | e.position as u32);
    }
    out.push(SEPARATOR);
    for c in 0..components {
        let o = u32::from(d.orientation(c) == Orientation::Negative);
        out.push(((d.label(c) as u32) << 1) | o);
    }
    out
}

/// One way of writing a front, reached from the first explored word by a
/// planar move applied to `parent`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrbitEntry {
    pub diagram: FrontDiagram,
    pub parent: Option<(usize, MoveSite)>,
}

/// Planar moves explored from one word.
///
/// Cusps can slide around the annulus indefinitely, piling up strands, so
/// the exploration never lets the total strand length ([`weight`]) grow.
/// As soon as a lighter word shows up, the cap drops and exploration
/// restarts from there. The words at the final cap form the class's `level`, and the
/// key is the smallest encoding among them.
pub(crate) struct PlanarClass {
    /// Every explored word; parents lead back to the starting word.
    pub entries: Vec<OrbitEntry>,
    /// Indices of the final level, with their encodings.
    pub level: Vec<(usize, Vec<u32>)>,
    index: HashMap<Vec<u32>, usize>,
    cap: usize,
    components: usize,
}

impl PlanarClass {
    pub fn key(&self) -> CanonicalKey {
        CanonicalKey(self.level.iter().map(|(_, c)| c).min().expect("non-empty").clone())
    }

    /// Planar moves from the starting word to entry `i`.
    pub fn path_to(&self, mut i: usize) -> Vec<MoveSite> {
        let mut steps = Vec::new();
        while let Some((p, s)) = self.entries[i].parent {
            steps.push(s);
            i = p;
        }
        steps.reverse();
        steps
    }

    pub fn min_entry(&self) -> usize {
        self.level.iter().min_by(|a, b| a.1.cmp(&b.1)).expect("non-empty").0
    }
}

/// Total strand length of a word: the sum of its column counts.
fn weight(d: &FrontDiagram) -> usize {
    let counts = d.column_counts().expect("valid");
    let ncols = d.events.len().max(1);
    counts[..ncols].iter().sum()
}

/// Explores the planar class of a structurally valid word.
pub(crate) fn explore(start: FrontDiagram) -> PlanarClass {
    let components = crate::front::Trace::raw(&start).num_components();
    let mut cap = weight(&start);
    let mut class = PlanarClass { entries: Vec::new(), level: Vec::new(), index: HashMap::new(), cap, components };
    class.index.insert(encode(&start, components), 0);
    class.entries.push(OrbitEntry { diagram: start, parent: None });
    let mut root = 0;
    loop {
        let (level, lower) = class.sweep(&[root], cap, true);
        match lower {
            Some((m, id)) => {
                cap = m;
                root = id;
            }
            None => {
                class.level = level;
                class.cap = cap;
                return class;
            }
        }
    }
}

impl PlanarClass {
    /// Words reachable from `roots` through words of weight at most `cap`,
    /// and a strictly lighter word, if one is seen. With `descend`, the
    /// sweep stops at the first lighter word.
    fn sweep(
        &mut self,
        roots: &[usize],
        cap: usize,
        descend: bool,
    ) -> (Vec<(usize, Vec<u32>)>, Option<(usize, usize)>) {
        let mut level: Vec<(usize, Vec<u32>)> = Vec::new();
        let mut seen: HashSet<Vec<u32>> = HashSet::new();
        for &r in roots {
            let code = encode(&self.entries[r].diagram, self.components);
            if seen.insert(code.clone()) {
                level.push((r, code));
            }
        }
        let mut queue: VecDeque<usize> = roots.iter().copied().collect();
        let mut lower: Option<(usize, Vec<u32>, usize)> = None;
        while let Some(i) = queue.pop_front() {
            let d = self.entries[i].diagram.clone();
            let p = Prepared::trusted(&d);
            for site in planar_sites(&d) {
                let next = apply_prepared(&p, site).expect("planar site is legal");
                let m = weight(&next);
                if m > cap {
                    continue;
                }
                let code = encode(&next, self.components);
                if seen.contains(&code) {
                    continue;
                }
                let id = match self.index.get(&code) {
                    Some(&id) => id,
                    None => {
                        let id = self.entries.len();
                        self.index.insert(code.clone(), id);
                        self.entries.push(OrbitEntry { diagram: next, parent: Some((i, site)) });
                        id
                    }
                };
                seen.insert(code.clone());
                if m < cap && lower.as_ref().is_none_or(|(lm, lc, _)| (m, &code) < (*lm, lc)) {
                    lower = Some((m, code.clone(), id));
                    if descend {
                        return (level, lower.map(|(m, _, id)| (m, id)));
                    }
                }
                level.push((id, code));
                queue.push_back(id);
            }
        }
        (level, lower.map(|(m, _, id)| (m, id)))
    }

    /// Entries reachable from the level through words at most `slack`
    /// heavier than it.
    pub fn widen(&mut self, slack: usize) -> Vec<usize> {
        let roots: Vec<usize> = self.level.iter().map(|(i, _)| *i).collect();
        let cap = self.cap + slack;
        self.sweep(&roots, cap, false).0.into_iter().map(|(i, _)| i).collect()
    }
}

/// The lowest level of the planar class of `d`: the lightest words reached
/// by commutations and basepoint rotations.
pub fn planar_orbit(d: &FrontDiagram) -> Result<Vec<FrontDiagram>, MoveError> {
    if let Some(v) = d.check_events() {
        return Err(FrontError::Invalid(v.to_string()).into());
    }
    let mut start = d.clone();
    start.normalize_decorations();
    let class = explore(start);
    Ok(class.level.iter().map(|(i, _)| class.entries[*i].diagram.clone()).collect())
}

/// Strand bound for planar moves: every component may cross a vertical line
/// once per cusp plus once per unit of winding. Planar moves keep this fixed.
pub fn column_cap(raw: &crate::front::Trace) -> usize {
    raw.components.iter().map(|c| c.winding.unsigned_abs() as usize + c.cusp_count()).sum()
}

pub fn canonical_key(d: &FrontDiagram) -> Result<CanonicalKey, MoveError> {
    if let Some(v) = d.check_events() {
        return Err(FrontError::Invalid(v.to_string()).into());
    }
    let mut start = d.clone();
    start.normalize_decorations();
    Ok(explore(start).key())
}
