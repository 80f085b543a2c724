//! Standard fronts: parallel graph lifts, the meridian eye, torus braids and
//! cable links around a flat core.

use super::{Event, FrontDiagram, FrontError};

pub fn gcd(a: i64, b: i64) -> i64 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

fn check_braid_args(p: i64, q: i64) -> Result<(), FrontError> {
    if p < 1 || q < 1 {
        return Err(FrontError::InvalidArgument(format!("need p, q >= 1, got ({p}, {q})")));
    }
    if gcd(p, q) != 1 {
        return Err(FrontError::InvalidArgument(format!(
            "gcd({p}, {q}) != 1 closes up to several components"
        )));
    }
    Ok(())
}

/// `n` parallel strands, one per constant-function lift, heights ordered by
/// position.
pub fn lambda_front(n: usize) -> Result<FrontDiagram, FrontError> {
    if n == 0 {
        return Err(FrontError::InvalidArgument("need at least one strand".into()));
    }
    Ok(FrontDiagram::new(n, vec![]))
}

/// A flat core with a standard unknot eye whose lower branch dips once below
/// it, linking the core once.
pub fn meridian_eye_front() -> FrontDiagram {
    FrontDiagram::new(
        1,
        vec![Event::left_cusp(2), Event::crossing(1), Event::crossing(1), Event::right_cusp(2)],
    )
}

fn braid_block(q: usize, shift: usize) -> impl Iterator<Item = Event> {
    (1..q).rev().map(move |i| Event::crossing(i + shift))
}

/// Closure of the `(p, q)` torus braid: `q` strands and `p` blocks
/// `σ_{q-1} ⋯ σ_1`.
pub fn torus_braid_front(p: i64, q: i64) -> Result<FrontDiagram, FrontError> {
    check_braid_args(p, q)?;
    let (p, q) = (p as usize, q as usize);
    let events = (0..p).flat_map(|_| braid_block(q, 0)).collect();
    Ok(FrontDiagram::new(q, events))
}

/// The `(p, q)` cable link: component 0 is a flat core at position 1,
/// component 1 is the torus braid on positions `2..=q+1`. After every braid
/// block the lowest cable strand dips in front of and then behind the core,
/// one meridian wrap per block.
pub fn cable_link_front(p: i64, q: i64) -> Result<FrontDiagram, FrontError> {
    check_braid_args(p, q)?;
    let (p, q) = (p as usize, q as usize);
    let mut events = Vec::with_capacity(p * (q + 1));
    for _ in 0..p {
        events.extend(braid_block(q, 1));
        events.push(Event::crossing(1));
        events.push(Event::crossing(1));
    }
    Ok(FrontDiagram::new(q + 1, events))
}
