//! Bounded bidirectional isotopy search over planar classes of fronts.
//!
//! A search state is a class of words related by commutations and basepoint
//! rotations, named by its [`CanonicalKey`]. Edges are the Reidemeister-type
//! moves applied to any word of the class, so depth counts only those moves.

use std::collections::{BTreeMap, HashMap};

use serde::{Deserialize, Serialize};

use crate::front::{FrontDiagram, FrontError};
use crate::moves::canonical::{encode, explore};
use crate::moves::{apply_prepared, inverse_site, kink_sites, rewrite_sites, CanonicalKey, MoveError, MoveSite, Prepared};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchBudget {
    /// Maximum number of Reidemeister-type moves on a path.
    pub max_depth: usize,
    /// Maximum number of planar classes visited over both directions.
    pub max_states: usize,
    /// Words may grow by at most this many events beyond the longer input.
    pub max_extra_events: usize,
    /// Moves are tried on every word of a class whose total strand length
    /// exceeds the class minimum by at most this much.
    pub planar_slack: usize,
}

impl Default for SearchBudget {
    fn default() -> Self {
        SearchBudget { max_depth: 14, max_states: 2_000_000, max_extra_events: 2, planar_slack: 4 }
    }
}

/// A sequence of moves taking the first diagram to a word of the second
/// diagram's class.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IsotopyPath {
    pub steps: Vec<MoveSite>,
}

impl IsotopyPath {
    /// Number of moves that are not commutations or rotations.
    pub fn nontrivial_len(&self) -> usize {
        self.steps.iter().filter(|s| !s.kind.is_planar()).count()
    }

    /// Replays the path from `start`.
    pub fn apply(&self, start: &FrontDiagram) -> Result<FrontDiagram, MoveError> {
        let mut d = start.clone();
        for &s in &self.steps {
            d = crate::moves::apply_move(&d, s)?;
        }
        Ok(d)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum SearchOutcome {
    Found(IsotopyPath),
    /// Classical invariants differ. This verdict is a proof.
    NotIsotopic(String),
    /// Nothing found within the budget. Says nothing about isotopy.
    NotFound(SearchStats),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchStats {
    pub states: usize,
    pub depth: usize,
    /// The state budget ran out before the depth budget.
    pub state_budget_hit: bool,
}

type Signature = (BTreeMap<usize, (i64, i64, i64)>, BTreeMap<(usize, usize), i64>);

/// Classical invariants keyed by component label.
fn signature(d: &FrontDiagram) -> Result<Signature, FrontError> {
    let t = d.trace_components()?;
    let n = t.num_components();
    let mut comps = BTreeMap::new();
    let mut sums = BTreeMap::new();
    for c in 0..n {
        let i = t.invariants(d, c)?;
        comps.insert(d.label(c), (i.tb, i.rot, i.winding));
        for e in c + 1..n {
            let (a, b) = (d.label(c).min(d.label(e)), d.label(c).max(d.label(e)));
            sums.insert((a, b), t.inter_component_sum(d, c, e)?);
        }
    }
    Ok((comps, sums))
}

fn describe_mismatch(a: &Signature, b: &Signature) -> String {
    if a.0.len() != b.0.len() {
        return format!("component counts differ ({} vs {})", a.0.len(), b.0.len());
    }
    for (l, x) in &a.0 {
        match b.0.get(l) {
            None => return format!("label {l} missing from second diagram"),
            Some(y) if y != x => {
                return format!(
                    "component {l}: (tb, rot, winding) = ({}, {}, {}) vs ({}, {}, {})",
                    x.0, x.1, x.2, y.0, y.1, y.2
                )
            }
            _ => {}
        }
    }
    for (k, x) in &a.1 {
        let y = b.1.get(k).copied().unwrap_or_default();
        if *x != y {
            return format!("crossing sum between components {} and {}: {x} vs {y}", k.0, k.1);
        }
    }
    "invariants differ".into()
}

/// How a class was first reached: from `parent`'s representative, planar
/// moves `planar` lead to a word on which `site` produces this class's
/// representative.
struct Link {
    parent: usize,
    planar: Vec<MoveSite>,
    pre_move: FrontDiagram,
    site: MoveSite,
}

struct Node {
    rep: FrontDiagram,
    depth: usize,
    link: Option<Link>,
}

struct Side {
    nodes: Vec<Node>,
    index: HashMap<CanonicalKey, usize>,
    frontier: Vec<usize>,
}

impl Side {
    fn new(root: FrontDiagram, key: CanonicalKey) -> Self {
        Side {
            nodes: vec![Node { rep: root, depth: 0, link: None }],
            index: HashMap::from([(key, 0)]),
            frontier: vec![0],
        }
    }
}

struct Keys {
    cache: HashMap<Vec<u32>, CanonicalKey>,
    components: usize,
}

impl Keys {
    fn key(&mut self, d: &FrontDiagram) -> CanonicalKey {
        let code = encode(d, self.components);
        if let Some(k) = self.cache.get(&code) {
            return k.clone();
        }
        let class = explore(d.clone());
        let key = class.key();
        for (_, c) in class.level {
            self.cache.insert(c, key.clone());
        }
        self.cache.insert(code, key.clone());
        key
    }
}

/// Planar moves from `from` to `to`, two words with the same key.
fn planar_bridge(from: &FrontDiagram, to: &FrontDiagram) -> Vec<MoveSite> {
    let (cf, ct) = (explore(from.clone()), explore(to.clone()));
    let mut steps = cf.path_to(cf.min_entry());
    let back = ct.path_to(ct.min_entry());
    steps.extend(invert_steps(to, &back));
    steps
}

/// Inverse of a move sequence applied to `start`, as sites on its end word.
fn invert_steps(start: &FrontDiagram, steps: &[MoveSite]) -> Vec<MoveSite> {
    let mut words = vec![start.clone()];
    for &s in steps {
        let next = crate::moves::apply_move(words.last().expect("non-empty"), s).expect("path is legal");
        words.push(next);
    }
    steps.iter().zip(&words).rev().map(|(&s, before)| inverse_site(before, s)).collect()
}

/// Moves from the root of `side` to node `id`'s representative.
fn path_from_root(side: &Side, mut id: usize) -> Vec<MoveSite> {
    let mut chunks = Vec::new();
    while let Some(link) = &side.nodes[id].link {
        let mut chunk = link.planar.clone();
        chunk.push(link.site);
        chunks.push(chunk);
        id = link.parent;
    }
    chunks.reverse();
    chunks.concat()
}

/// Searches for a Legendrian isotopy from `d1` to `d2`.
pub fn search_isotopy(
    d1: &FrontDiagram,
    d2: &FrontDiagram,
    budget: SearchBudget,
) -> Result<SearchOutcome, MoveError> {
    for d in [d1, d2] {
        if let Some(v) = d.validate().violations().first() {
            return Err(FrontError::Invalid(v.to_string()).into());
        }
    }
    let (s1, s2) = (signature(d1)?, signature(d2)?);
    if s1 != s2 {
        return Ok(SearchOutcome::NotIsotopic(describe_mismatch(&s1, &s2)));
    }
    let mut a = d1.clone();
    a.normalize_decorations();
    let mut b = d2.clone();
    b.normalize_decorations();
    let components = s1.0.len();
    let mut keys = Keys { cache: HashMap::new(), components };
    let (ka, kb) = (keys.key(&a), keys.key(&b));
    if ka == kb {
        let steps = planar_bridge(&a, &b);
        return Ok(SearchOutcome::Found(IsotopyPath { steps }));
    }
    let max_events = a.events.len().max(b.events.len()) + budget.max_extra_events;
    // The side with the smaller root key is expanded first on ties, which
    // makes the search symmetric in its arguments.
    let a_first = ka < kb;
    let mut sides = [Side::new(a.clone(), ka), Side::new(b.clone(), kb)];
    let mut depths = [0usize, 0];
    let mut states = 2;
    loop {
        if depths[0] + depths[1] >= budget.max_depth {
            return Ok(SearchOutcome::NotFound(SearchStats {
                states,
                depth: depths[0] + depths[1],
                state_budget_hit: false,
            }));
        }
        let (f0, f1) = (sides[0].frontier.len(), sides[1].frontier.len());
        if f0 == 0 && f1 == 0 {
            return Ok(SearchOutcome::NotFound(SearchStats {
                states,
                depth: depths[0] + depths[1],
                state_budget_hit: false,
            }));
        }
        let s = if f0 == 0 {
            1
        } else if f1 == 0 || f0 < f1 || (f0 == f1 && a_first) {
            0
        } else {
            1
        };
        let o = 1 - s;
        depths[s] += 1;
        let frontier = std::mem::take(&mut sides[s].frontier);
        let mut next_frontier = Vec::new();
        for id in frontier {
            let rep = sides[s].nodes[id].rep.clone();
            let depth = sides[s].nodes[id].depth;
            let mut class = explore(rep.clone());
            let first = class.level[0].0;
            for entry_idx in class.widen(budget.planar_slack) {
                let entry = &class.entries[entry_idx];
                let p = Prepared::trusted(&entry.diagram);
                let mut sites = rewrite_sites(&p);
                if entry_idx == first {
                    sites.extend(kink_sites(&p, true));
                }
                for site in sites {
                    let next = apply_prepared(&p, site)?;
                    if next.events.len() > max_events {
                        continue;
                    }
                    let key = keys.key(&next);
                    if sides[s].index.contains_key(&key) {
                        continue;
                    }
                    let planar = class.path_to(entry_idx);
                    let link = Link { parent: id, planar, pre_move: entry.diagram.clone(), site };
                    let new_id = sides[s].nodes.len();
                    sides[s].nodes.push(Node { rep: next.clone(), depth: depth + 1, link: Some(link) });
                    sides[s].index.insert(key.clone(), new_id);
                    states += 1;
                    if let Some(&other) = sides[o].index.get(&key) {
                        let (fwd, bwd) = if s == 0 { (new_id, other) } else { (other, new_id) };
                        let steps = join(&sides, fwd, bwd);
                        return Ok(SearchOutcome::Found(IsotopyPath { steps }));
                    }
                    if states >= budget.max_states {
                        return Ok(SearchOutcome::NotFound(SearchStats {
                            states,
                            depth: depths[0] + depths[1],
                            state_budget_hit: true,
                        }));
                    }
                    next_frontier.push(new_id);
                }
            }
        }
        sides[s].frontier = next_frontier;
    }
}

/// Full path: root of side 0 to `fwd`, across the shared class to `bwd`,
/// then back along side 1 to its root.
fn join(sides: &[Side; 2], fwd: usize, bwd: usize) -> Vec<MoveSite> {
    let mut steps = path_from_root(&sides[0], fwd);
    steps.extend(planar_bridge(&sides[0].nodes[fwd].rep, &sides[1].nodes[bwd].rep));
    let mut id = bwd;
    while let Some(link) = &sides[1].nodes[id].link {
        let parent_rep = &sides[1].nodes[link.parent].rep;
        let rep = &sides[1].nodes[id].rep;
        steps.push(inverse_site(&link.pre_move, link.site));
        debug_assert_eq!(
            crate::moves::apply_move(rep, *steps.last().expect("just pushed")).ok().as_ref(),
            Some(&link.pre_move)
        );
        steps.extend(invert_steps(parent_rep, &link.planar));
        id = link.parent;
    }
    steps
}
