//! Acceptance criteria 1 to 10. Prints one PASS/FAIL line per criterion and
//! exits non-zero if any fails.

mod common;

use std::collections::BTreeSet;
use std::time::{Duration, Instant};

use jetlink_core::classify::{
    classify_helix, enumerate_mountain_range, helix_normal_form, rot_at_tb_max, tb_max, HeightOrder, RotBase,
    Verdict,
};
use jetlink_core::front::{gcd, torus_braid_front, ComponentInvariants};
use jetlink_core::moves::{applicable_moves, apply_move, stabilize, Sign};
use jetlink_core::search::{search_isotopy, SearchBudget, SearchOutcome};
use jetlink_core::slope::{kanda_twist, min_intersection, tb_max_oracle, twist_on_torus, CurveClass};
use jetlink_core::translate::{
    cable_type_to_s3, cor_noimage_gap, m_to_s3, s3_positive_torus_tb_max, tb_to_s3,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const GRID_LIMIT: Duration = Duration::from_secs(5);
const SWAP_LIMIT: Duration = Duration::from_secs(60);
const SWAP_DEPTH: usize = 14;
const STABILIZATION_DEPTH: usize = 10;
const RANDOM_FRONTS: usize = 100;
const RANDOM_EVENTS: usize = 4;
const FUZZ_CASES: usize = 200;
const FUZZ_EVENTS: usize = 6;
const SEED: u64 = 7;

/// Normalised classes of the grid: coprime `(p, q)` with `p ∈ [−8, 8]`,
/// `q ∈ [0, 8]`, and `p = 1` when `q = 0`.
fn grid() -> Vec<(i64, i64, i64)> {
    let mut out = Vec::new();
    for p in -8..=8 {
        for q in 0..=8 {
            if gcd(p, q) != 1 || (q == 0 && p != 1) {
                continue;
            }
            for m in 0..=6 {
                out.push((p, q, m));
            }
        }
    }
    out
}

type Outcome = Result<String, String>;

fn criterion_1() -> Outcome {
    let start = Instant::now();
    let g = grid();
    for &(p, q, m) in &g {
        let closed = tb_max(p, q, m).map_err(|e| e.to_string())?;
        let oracle = tb_max_oracle(CurveClass::new(p, q).unwrap(), m).map_err(|e| e.to_string())?;
        if closed != oracle {
            return Err(format!("({p},{q},{m}): closed form {closed}, oracle {oracle}"));
        }
    }
    let t = start.elapsed();
    if t >= GRID_LIMIT {
        return Err(format!("took {t:?}"));
    }
    Ok(format!("{} grid points agree in {t:?}", g.len()))
}

fn criterion_2() -> Outcome {
    let mut n = 0;
    for p in 1..=6 {
        for q in 1..=6 {
            if gcd(p, q) != 1 {
                continue;
            }
            let d = torus_braid_front(p, q).map_err(|e| e.to_string())?;
            let inv = d.all_invariants().map_err(|e| e.to_string())?;
            let want = ComponentInvariants { tb: p * (q - 1), rot: 0, winding: q };
            if inv != vec![want] {
                return Err(format!("({p},{q}): {inv:?}"));
            }
            n += 1;
        }
    }
    Ok(format!("{n} torus braids read (p(q-1), 0, q)"))
}

fn criterion_3() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let budget = SearchBudget { max_depth: STABILIZATION_DEPTH, ..SearchBudget::default() };
    let mut deepest = 0;
    for i in 0..RANDOM_FRONTS {
        let d = common::random_front(&mut rng, RANDOM_EVENTS);
        let c = rng.gen_range(0..d.component_count().unwrap());
        let label = d.label(c);
        let before = common::signature(&d).0[&label];
        for (sign, drot) in [(Sign::Positive, 1), (Sign::Negative, -1)] {
            let s = stabilize(&d, c, sign).map_err(|e| e.to_string())?;
            let (after, _) = common::signature(&s);
            if after[&label] != (before.0 - 1, before.1 + drot, before.2) {
                return Err(format!("front {i}: {before:?} -> {:?} under {sign:?}", after[&label]));
            }
        }
        let twice = |first, second| {
            let s = stabilize(&d, c, first).unwrap();
            stabilize(&s, common::component_with_label(&s, label), second).unwrap()
        };
        let pm = twice(Sign::Negative, Sign::Positive);
        let mp = twice(Sign::Positive, Sign::Negative);
        match search_isotopy(&pm, &mp, budget).map_err(|e| e.to_string())? {
            SearchOutcome::Found(path) => deepest = deepest.max(path.nontrivial_len()),
            other => return Err(format!("front {i} {d:?}: {other:?}")),
        }
    }
    Ok(format!("{RANDOM_FRONTS} fronts; S+S- ~ S-S+ found, longest path {deepest} moves"))
}

fn criterion_4() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED + 1);
    let mut applied = 0;
    let mut kinds = BTreeSet::new();
    while applied < FUZZ_CASES {
        let d = common::random_front(&mut rng, FUZZ_EVENTS);
        let sites = applicable_moves(&d).map_err(|e| e.to_string())?;
        if sites.is_empty() {
            continue;
        }
        let site = sites[rng.gen_range(0..sites.len())];
        let next = apply_move(&d, site).map_err(|e| format!("{d:?} {site}: {e}"))?;
        if common::signature(&next) != common::signature(&d) {
            return Err(format!("{site} on {d:?} changed invariants"));
        }
        kinds.insert(site.to_string().split('@').next().unwrap().to_string());
        applied += 1;
    }
    Ok(format!("{applied} applications, 0 violations, {} move kinds exercised", kinds.len()))
}

fn swapped_helix_search(sign: Sign) -> Outcome {
    let (a, b) = common::swapped_helix_pair(sign);
    let budget = SearchBudget { max_depth: SWAP_DEPTH, ..SearchBudget::default() };
    let start = Instant::now();
    let out = search_isotopy(&a, &b, budget).map_err(|e| e.to_string())?;
    let t = start.elapsed();
    match out {
        SearchOutcome::Found(path) if t < SWAP_LIMIT => {
            let end = path.apply(&a).map_err(|e| e.to_string())?;
            let (ka, kb) = (jetlink_core::moves::canonical_key(&end), jetlink_core::moves::canonical_key(&b));
            if ka != kb {
                return Err("path does not end in the target class".into());
            }
            Ok(format!("{sign:?}: {} moves in {t:?}", path.nontrivial_len()))
        }
        other => Err(format!("{sign:?}: {other:?} after {t:?}")),
    }
}

fn criterion_5() -> Outcome {
    Ok(format!("{}; {}", swapped_helix_search(Sign::Positive)?, swapped_helix_search(Sign::Negative)?))
}

fn criterion_6() -> Outcome {
    let zero = (0, 0);
    let bare = classify_helix(zero, zero, None).map_err(|e| e.to_string())?;
    if bare.verdict != Verdict::ExceptionalPair {
        return Err(format!("without height order: {:?}", bare.verdict));
    }
    let cmp = jetlink_core::classify::compare_helix(
        (zero, zero, Some(HeightOrder::FirstBelow)),
        (zero, zero, Some(HeightOrder::FirstAbove)),
    )
    .map_err(|e| e.to_string())?;
    if cmp.verdict != Verdict::NotIsotopic {
        return Err(format!("with differing height orders: {:?}", cmp.verdict));
    }
    // Same depth, state budget and absolute word-length cap as criterion 5.
    let (a, b) = common::helix_swap();
    let (fa, fb) = common::swapped_helix_pair(Sign::Positive);
    let cap = fa.events.len().max(fb.events.len()) + SearchBudget::default().max_extra_events;
    let budget = SearchBudget { max_depth: SWAP_DEPTH, max_extra_events: cap, ..SearchBudget::default() };
    match search_isotopy(&a, &b, budget).map_err(|e| e.to_string())? {
        SearchOutcome::NotFound(stats) => Ok(format!(
            "ExceptionalPair, NotIsotopic, search not found ({} states, depth {}, words up to {cap} events)",
            stats.states, stats.depth
        )),
        other => Err(format!("search on the swapped helix: {other:?}")),
    }
}

fn criterion_7() -> Outcome {
    let checks = [
        (cable_type_to_s3(2, 3).map_err(|e| e.to_string())?, (-3, 1)),
        ((tb_to_s3(4, 3), 0), (-5, 0)),
    ];
    for (got, want) in checks {
        if got != want {
            return Err(format!("got {got:?}, want {want:?}"));
        }
    }
    for m in 0..=6 {
        if m_to_s3(m) != Ok(m + 1) {
            return Err(format!("m_to_s3({m})"));
        }
    }
    let mut n = 0;
    for p in 1..=8 {
        for q in 1..=p {
            if gcd(p, q) != 1 {
                continue;
            }
            let (p2, q2) = cable_type_to_s3(p, q).map_err(|e| e.to_string())?;
            let s3 = s3_positive_torus_tb_max(p2, q2).map_err(|e| e.to_string())?;
            for m in 0..=6 {
                let j = tb_max(p, q, m).map_err(|e| e.to_string())?;
                if j != s3 + q * q {
                    return Err(format!("({p},{q},{m}): {j} vs {s3} + {}", q * q));
                }
            }
            n += 1;
        }
    }
    Ok(format!("dictionary values match; {n} types with p >= q agree"))
}

fn criterion_8() -> Outcome {
    let mut n = 0;
    for q in 3..=10 {
        for p in 1..q - 1 {
            let gap = cor_noimage_gap(p, q).map_err(|e| e.to_string())?;
            if gap != p {
                return Err(format!("({p},{q}): gap {gap}"));
            }
            n += 1;
        }
    }
    Ok(format!("gap = p on {n} pairs"))
}

fn criterion_9() -> Outcome {
    let mut checked = 0;
    for (p, q, m) in grid() {
        let base = match rot_at_tb_max(p, q, m).map_err(|e| e.to_string())? {
            RotBase::Known(b) => b,
            RotBase::Unknown => continue,
        };
        let max = tb_max(p, q, m).unwrap();
        for (tb, rot) in enumerate_mountain_range(p, q, m, max - 4).map_err(|e| e.to_string())? {
            if tb > max || (rot - base).abs() > max - tb || (max - tb - (rot - base)) % 2 != 0 {
                return Err(format!("({p},{q},{m}): ({tb},{rot}) outside the range"));
            }
            checked += 1;
        }
    }
    let helix: BTreeSet<(i64, i64)> = enumerate_mountain_range(0, 1, 0, -4).unwrap().into_iter().collect();
    let mut lattice = BTreeSet::new();
    for tb in -4..=0 {
        for rot in -4..=4 {
            if helix_normal_form(tb, rot).is_ok() {
                lattice.insert((tb, rot));
            }
        }
    }
    if helix != lattice {
        return Err(format!("(0,1) range {helix:?} vs lattice {lattice:?}"));
    }
    Ok(format!("{checked} pairs sound; (0,1) range equals the {}-point lattice", lattice.len()))
}

fn criterion_10() -> Outcome {
    // Longitude class (1,0): two intersections with slope ∞.
    for m in 0..=6 {
        let class = CurveClass::new(1, 0).unwrap();
        let tb = tb_max(1, 0, m).unwrap();
        let t_t = twist_on_torus(tb, class);
        let t_a = kanda_twist(min_intersection(class, m).unwrap()).unwrap();
        if (tb, t_t, t_a, kanda_twist(2).unwrap()) != (-1, -1, -1, -1) {
            return Err(format!("m = {m}: tb {tb}, t_T {t_t}, t_A {t_a}"));
        }
    }
    let mut n = 0;
    for (p, q, m) in grid() {
        if p < 1 || q < 1 {
            continue;
        }
        let class = CurveClass::new(p, q).unwrap();
        let t_t = twist_on_torus(tb_max(p, q, m).unwrap(), class);
        if t_t > -p || kanda_twist(2 * p) != Ok(-p) {
            return Err(format!("({p},{q},{m}): t_T = {t_t}"));
        }
        n += 1;
    }
    Ok(format!("tb = t_A = t_T = -1 for (1,0); t_T <= -p on {n} grid points"))
}

fn main() {
    let criteria: [(&str, fn() -> Outcome); 10] = [
        ("closed form equals oracle", criterion_1),
        ("torus braid invariants", criterion_2),
        ("stabilization calculus", criterion_3),
        ("move invariance fuzz", criterion_4),
        ("swapped helix regression", criterion_5),
        ("exceptional helix pair", criterion_6),
        ("translation dictionary", criterion_7),
        ("no-image gap", criterion_8),
        ("mountain range soundness", criterion_9),
        ("twisting arithmetic", criterion_10),
    ];
    let mut failed = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let result = f();
        let t = start.elapsed();
        match result {
            Ok(detail) => println!("criterion {:>2} PASS {name} ({t:.2?}): {detail}", i + 1),
            Err(detail) => {
                failed += 1;
                println!("criterion {:>2} FAIL {name} ({t:.2?}): {detail}", i + 1);
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
