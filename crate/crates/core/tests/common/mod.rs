#![allow(dead_code)]

use std::collections::BTreeMap;

use jetlink_core::front::{lambda_front, Event, FrontDiagram};
use jetlink_core::moves::{stabilize, Sign};
use rand::Rng;

/// A valid front with 1 or 2 base strands and at most `max_events` events.
pub fn random_front(rng: &mut impl Rng, max_events: usize) -> FrontDiagram {
    loop {
        let base = rng.gen_range(1..=2);
        let len = rng.gen_range(0..=max_events);
        let mut n = base;
        let mut events = Vec::new();
        for _ in 0..len {
            let e = match rng.gen_range(0..3) {
                0 if n >= 2 => Event::crossing(rng.gen_range(1..n)),
                1 => Event::left_cusp(rng.gen_range(1..=n + 1)),
                2 if n >= 2 => Event::right_cusp(rng.gen_range(1..n)),
                _ => continue,
            };
            n = (n as isize + e.delta()) as usize;
            events.push(e);
        }
        let d = FrontDiagram::new(base, events);
        if d.validate().is_ok() {
            return d;
        }
    }
}

pub type Signature = (BTreeMap<usize, (i64, i64, i64)>, BTreeMap<(usize, usize), i64>);

/// Per-label `(tb, rot, winding)` and signed crossing counts between labels.
pub fn signature(d: &FrontDiagram) -> Signature {
    let n = d.component_count().unwrap();
    let mut comps = BTreeMap::new();
    for c in 0..n {
        let i = d.invariants(c).unwrap();
        comps.insert(d.label(c), (i.tb, i.rot, i.winding));
    }
    let mut pairs = BTreeMap::new();
    for a in 0..n {
        for b in a + 1..n {
            let (la, lb) = (d.label(a).min(d.label(b)), d.label(a).max(d.label(b)));
            pairs.insert((la, lb), d.inter_component_crossing_sum(a, b).unwrap());
        }
    }
    (comps, pairs)
}

/// `Λ₀ ⊔ S(Λ₁)` and `Λ₁ ⊔ S(Λ₀)`: label 0 unstabilised, label 1 stabilised,
/// with the stabilised strand on top in the first and at the bottom in the
/// second.
pub fn swapped_helix_pair(sign: Sign) -> (FrontDiagram, FrontDiagram) {
    let low = lambda_front(2).unwrap();
    let a = stabilize(&low, 1, sign).unwrap();
    let high = lambda_front(2).unwrap().with_label(0, 1).with_label(1, 0);
    let b = stabilize(&high, 0, sign).unwrap();
    (a, b)
}

pub fn helix_swap() -> (FrontDiagram, FrontDiagram) {
    let a = lambda_front(2).unwrap();
    let b = lambda_front(2).unwrap().with_label(0, 1).with_label(1, 0);
    (a, b)
}

pub fn component_with_label(d: &FrontDiagram, label: usize) -> usize {
    (0..d.component_count().unwrap()).find(|&c| d.label(c) == label).expect("label present")
}
