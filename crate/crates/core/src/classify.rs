//! Classification of helix links `L₀ ⊔ L₁` (both components homotopic to the
//! generator) and of `(p, q)`-cable links around a Legendrian core.
//!
//! Everything here is arithmetic on classical invariants. The one case not
//! decided by tb and rot is the pair of unstabilised helix strands, where the
//! caller must supply which component lies below.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::front::gcd;
use crate::translate::reverse_orientation;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ClassifyError {
    #[error("not realizable: {0}")]
    NotRealizable(String),
    #[error("({p}, {q}) is not a primitive class")]
    InvalidClass { p: i64, q: i64 },
    #[error("class ({p}, {q}) must be normalised: q >= 0, and p = 1 when q = 0")]
    NotNormalized { p: i64, q: i64 },
    #[error("m = {0} must be non-negative")]
    NegativeM(i64),
    #[error("rotation number at maximal tb is unknown for ({p}, {q}); use check_realizable")]
    UnknownRotation { p: i64, q: i64 },
    #[error("floor {floor} exceeds maximal tb {max}")]
    FloorAboveMax { floor: i64, max: i64 },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum HeightOrder {
    FirstBelow,
    FirstAbove,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Verdict {
    Isotopic,
    NotIsotopic,
    ExceptionalPair,
    UnknownCase4Rot,
}

/// Normal form `(k₀, l₀, k₁, l₁)`: the number of positive and negative
/// stabilisations of each component below its maximal representative.
pub type NormalForm = (i64, i64, i64, i64);

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassResult {
    pub verdict: Verdict,
    pub normal_form: Option<NormalForm>,
}

impl ClassResult {
    fn bare(verdict: Verdict) -> Self {
        ClassResult { verdict, normal_form: None }
    }
}

/// Invariants of a cable link: core `L₀` with `tb = −m`, and `L₁` in class
/// `pμ + qλ`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CableDescriptor {
    pub p: i64,
    pub q: i64,
    pub m: i64,
    pub rot0: i64,
    pub tb1: i64,
    pub rot1: i64,
    pub height_order: Option<HeightOrder>,
}

impl CableDescriptor {
    /// Reverses `L₁` if needed so that `q ≥ 0`, and `p = 1` when `q = 0`.
    pub fn normalized(self) -> Self {
        if self.q < 0 || (self.q == 0 && self.p < 0) {
            let (p, q, tb1, rot1) = reverse_orientation(self.p, self.q, self.tb1, self.rot1);
            CableDescriptor { p, q, tb1, rot1, ..self }
        } else {
            self
        }
    }

    fn is_helix_exceptional(&self) -> bool {
        (self.p, self.q) == (0, 1) && self.m == 0 && self.tb1 == 0
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum RotBase {
    Known(i64),
    Unknown,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Realizability {
    Realizable,
    NotRealizable(String),
    Unknown,
}

pub fn helix_normal_form(tb: i64, rot: i64) -> Result<(i64, i64), ClassifyError> {
    if tb + rot.abs() > 0 {
        return Err(ClassifyError::NotRealizable(format!("tb + |rot| = {} > 0", tb + rot.abs())));
    }
    if (tb - rot) % 2 != 0 {
        return Err(ClassifyError::NotRealizable(format!("tb = {tb} and rot = {rot} differ in parity")));
    }
    Ok(((-tb + rot) / 2, (-tb - rot) / 2))
}

/// Identifies the class of a helix link from its invariants. Two
/// unstabilised strands form two classes told apart by `height`; without it
/// the result is [`Verdict::ExceptionalPair`].
pub fn classify_helix(
    inv0: (i64, i64),
    inv1: (i64, i64),
    height: Option<HeightOrder>,
) -> Result<ClassResult, ClassifyError> {
    let (k0, l0) = helix_normal_form(inv0.0, inv0.1)?;
    let (k1, l1) = helix_normal_form(inv1.0, inv1.1)?;
    let normal_form = Some((k0, l0, k1, l1));
    if inv0.0 == 0 && inv1.0 == 0 && height.is_none() {
        return Ok(ClassResult { verdict: Verdict::ExceptionalPair, normal_form });
    }
    Ok(ClassResult { verdict: Verdict::Isotopic, normal_form })
}

/// Decides whether two helix links, given as `(inv0, inv1, height)`, are
/// Legendrian isotopic.
pub fn compare_helix(
    a: ((i64, i64), (i64, i64), Option<HeightOrder>),
    b: ((i64, i64), (i64, i64), Option<HeightOrder>),
) -> Result<ClassResult, ClassifyError> {
    let ra = classify_helix(a.0, a.1, a.2)?;
    let rb = classify_helix(b.0, b.1, b.2)?;
    if ra.normal_form != rb.normal_form {
        return Ok(ClassResult::bare(Verdict::NotIsotopic));
    }
    let exceptional = a.0 .0 == 0 && a.1 .0 == 0;
    if exceptional {
        return Ok(match (a.2, b.2) {
            (Some(x), Some(y)) if x == y => ClassResult { verdict: Verdict::Isotopic, normal_form: ra.normal_form },
            (Some(_), Some(_)) => ClassResult::bare(Verdict::NotIsotopic),
            _ => ClassResult { verdict: Verdict::ExceptionalPair, normal_form: ra.normal_form },
        });
    }
    Ok(ClassResult { verdict: Verdict::Isotopic, normal_form: ra.normal_form })
}

fn check_type(p: i64, q: i64, m: i64) -> Result<(), ClassifyError> {
    if gcd(p, q) != 1 {
        return Err(ClassifyError::InvalidClass { p, q });
    }
    if q < 0 || (q == 0 && p != 1) {
        return Err(ClassifyError::NotNormalized { p, q });
    }
    if m < 0 {
        return Err(ClassifyError::NegativeM(m));
    }
    Ok(())
}

/// Maximal tb of `L₁` in a `(p, q)`-cable link whose core has `tb = −m`.
pub fn tb_max(p: i64, q: i64, m: i64) -> Result<i64, ClassifyError> {
    check_type(p, q, m)?;
    Ok(match (p, q) {
        (0, 1) => 0,
        (1, 0) => -1,
        _ if p >= 1 => p * (q - 1),
        _ if m * q + p < 0 => p * q + m * q + p,
        _ => p * q,
    })
}

pub fn rot_at_tb_max(p: i64, q: i64, m: i64) -> Result<RotBase, ClassifyError> {
    check_type(p, q, m)?;
    Ok(if p < 0 { RotBase::Unknown } else { RotBase::Known(0) })
}

pub fn check_realizable(d: &CableDescriptor) -> Result<Realizability, ClassifyError> {
    let d = d.normalized();
    let max = tb_max(d.p, d.q, d.m)?;
    if d.m < d.rot0.abs() || (d.m - d.rot0) % 2 != 0 {
        return Ok(Realizability::NotRealizable(format!(
            "core with tb = {} cannot have rot = {}",
            -d.m, d.rot0
        )));
    }
    if d.tb1 > max {
        return Ok(Realizability::NotRealizable(format!("tb1 = {} exceeds maximum {max}", d.tb1)));
    }
    match rot_at_tb_max(d.p, d.q, d.m)? {
        RotBase::Unknown => Ok(Realizability::Unknown),
        RotBase::Known(base) => {
            let drop = max - d.tb1;
            let shift = d.rot1 - base;
            if shift.abs() > drop || (drop - shift) % 2 != 0 {
                Ok(Realizability::NotRealizable(format!(
                    "rot1 = {} is not reachable from ({max}, {base}) by stabilisation",
                    d.rot1
                )))
            } else {
                Ok(Realizability::Realizable)
            }
        }
    }
}

fn cable_normal_form(d: &CableDescriptor) -> Result<Option<NormalForm>, ClassifyError> {
    let (k0, l0) = ((d.m + d.rot0) / 2, (d.m - d.rot0) / 2);
    let max = tb_max(d.p, d.q, d.m)?;
    Ok(match rot_at_tb_max(d.p, d.q, d.m)? {
        RotBase::Known(base) => {
            let (drop, shift) = (max - d.tb1, d.rot1 - base);
            Some((k0, l0, (drop + shift) / 2, (drop - shift) / 2))
        }
        RotBase::Unknown => None,
    })
}

fn require_realizable(d: &CableDescriptor) -> Result<bool, ClassifyError> {
    match check_realizable(d)? {
        Realizability::Realizable => Ok(true),
        Realizability::Unknown => Ok(false),
        Realizability::NotRealizable(why) => Err(ClassifyError::NotRealizable(why)),
    }
}

/// Identifies the class of a single cable link.
pub fn describe_cable(d: &CableDescriptor) -> Result<ClassResult, ClassifyError> {
    let d = d.normalized();
    if !require_realizable(&d)? {
        return Ok(ClassResult::bare(Verdict::UnknownCase4Rot));
    }
    let normal_form = cable_normal_form(&d)?;
    let verdict = if d.is_helix_exceptional() && d.height_order.is_none() {
        Verdict::ExceptionalPair
    } else {
        Verdict::Isotopic
    };
    Ok(ClassResult { verdict, normal_form })
}

/// Decides whether two cable links are Legendrian isotopic. Links of
/// different oriented type are never isotopic.
pub fn classify_cable(d1: &CableDescriptor, d2: &CableDescriptor) -> Result<ClassResult, ClassifyError> {
    let (a, b) = (d1.normalized(), d2.normalized());
    require_realizable(&a)?;
    require_realizable(&b)?;
    if (a.p, a.q) != (b.p, b.q) {
        return Ok(ClassResult::bare(Verdict::NotIsotopic));
    }
    if (a.m, a.rot0, a.tb1, a.rot1) != (b.m, b.rot0, b.tb1, b.rot1) {
        return Ok(ClassResult::bare(Verdict::NotIsotopic));
    }
    let normal_form = cable_normal_form(&a)?;
    if a.is_helix_exceptional() {
        return Ok(match (a.height_order, b.height_order) {
            (Some(x), Some(y)) if x == y => ClassResult { verdict: Verdict::Isotopic, normal_form },
            (Some(_), Some(_)) => ClassResult::bare(Verdict::NotIsotopic),
            _ => ClassResult { verdict: Verdict::ExceptionalPair, normal_form },
        });
    }
    Ok(ClassResult { verdict: Verdict::Isotopic, normal_form })
}

/// All `(tb1, rot1)` reachable by stabilising the maximal `L₁`, down to
/// `tb_floor`, ordered by decreasing tb and then decreasing rot.
pub fn enumerate_mountain_range(p: i64, q: i64, m: i64, tb_floor: i64) -> Result<Vec<(i64, i64)>, ClassifyError> {
    let max = tb_max(p, q, m)?;
    let base = match rot_at_tb_max(p, q, m)? {
        RotBase::Known(b) => b,
        RotBase::Unknown => return Err(ClassifyError::UnknownRotation { p, q }),
    };
    if tb_floor > max {
        return Err(ClassifyError::FloorAboveMax { floor: tb_floor, max });
    }
    let mut out = Vec::new();
    for drop in 0..=(max - tb_floor) {
        for k in (0..=drop).rev() {
            out.push((max - drop, base + k - (drop - k)));
        }
    }
    Ok(out)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum PermutationSetting {
    /// Two unstabilised helix strands in `J¹(S¹)`.
    HelixTwoCopyUnstabilized,
    /// Two helix strands, at least one stabilised.
    HelixTwoCopyStabilized,
    /// The `N`-copy of the Legendrian unknot in `S³`.
    UnknotNCopy(usize),
}

/// Group of component permutations realised by Legendrian isotopy.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum PermutationGroup {
    Trivial,
    Symmetric(usize),
    Cyclic(usize),
}

impl PermutationGroup {
    pub fn order(self) -> usize {
        match self {
            PermutationGroup::Trivial => 1,
            PermutationGroup::Symmetric(n) => (1..=n).product(),
            PermutationGroup::Cyclic(n) => n.max(1),
        }
    }
}

pub fn allowed_permutations(setting: PermutationSetting) -> PermutationGroup {
    match setting {
        PermutationSetting::HelixTwoCopyUnstabilized => PermutationGroup::Trivial,
        PermutationSetting::HelixTwoCopyStabilized => PermutationGroup::Symmetric(2),
        PermutationSetting::UnknotNCopy(n) => PermutationGroup::Cyclic(n),
    }
}
