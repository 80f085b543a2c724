//! Python bindings: fronts, moves, isotopy search and the classification
//! arithmetic.

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

use jetlink_core::classify::{self, CableDescriptor, ClassResult, HeightOrder, RotBase, Verdict};
use jetlink_core::format::{parse_front, serialize_front};
use jetlink_core::front::{self as core_front, Event, EventKind, FrontDiagram, Orientation};
use jetlink_core::moves::{self, MoveSite, Sign};
use jetlink_core::search::{search_isotopy, SearchBudget, SearchOutcome};
use jetlink_core::slope::{self, CurveClass};
use jetlink_core::svg::{render_svg, SvgOptions};
use jetlink_core::translate;

fn err(e: impl ToString) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn height(h: Option<&str>) -> PyResult<Option<HeightOrder>> {
    match h {
        None => Ok(None),
        Some("first-below") => Ok(Some(HeightOrder::FirstBelow)),
        Some("first-above") => Ok(Some(HeightOrder::FirstAbove)),
        Some(other) => Err(err(format!("height must be 'first-below' or 'first-above', got {other:?}"))),
    }
}

/// A front on the annulus.
#[pyclass(name = "Front", module = "jetlink", frozen, eq, hash, skip_from_py_object)]
#[derive(Clone, PartialEq, Eq, Hash)]
struct PyFront(FrontDiagram);

/// A move location on a specific front.
#[pyclass(name = "Move", module = "jetlink", frozen, eq, skip_from_py_object)]
#[derive(Clone, PartialEq)]
struct PyMove(MoveSite);

#[pymethods]
impl PyMove {
    fn is_planar(&self) -> bool {
        self.0.kind.is_planar()
    }

    fn __repr__(&self) -> String {
        format!("Move({})", self.0)
    }

    fn __str__(&self) -> String {
        self.0.to_string()
    }
}

#[pymethods]
impl PyFront {
    /// `events` holds pairs such as `("L", 2)`.
    #[new]
    fn new(strands: usize, events: Vec<(String, usize)>) -> PyResult<Self> {
        let events = events
            .into_iter()
            .map(|(k, position)| {
                let kind = match k.as_str() {
                    "X" => EventKind::Crossing,
                    "L" => EventKind::LeftCusp,
                    "R" => EventKind::RightCusp,
                    other => return Err(err(format!("unknown event kind {other:?}"))),
                };
                Ok(Event { kind, position })
            })
            .collect::<PyResult<Vec<_>>>()?;
        Ok(PyFront(FrontDiagram::new(strands, events)))
    }

    #[staticmethod]
    fn parse(text: &str) -> PyResult<Self> {
        parse_front(text).map(PyFront).map_err(err)
    }

    fn to_text(&self) -> String {
        serialize_front(&self.0)
    }

    #[getter]
    fn strands(&self) -> usize {
        self.0.base_strands
    }

    #[getter]
    fn events(&self) -> Vec<(String, usize)> {
        self.0.events.iter().map(|e| (e.kind.symbol().to_string(), e.position)).collect()
    }

    /// Violations as strings; empty when the front is valid.
    fn validate(&self) -> Vec<String> {
        self.0.validate().violations().iter().map(|v| v.to_string()).collect()
    }

    fn component_count(&self) -> PyResult<usize> {
        self.0.component_count().map_err(err)
    }

    /// `(tb, rot, winding)` per component.
    fn invariants(&self) -> PyResult<Vec<(i64, i64, i64)>> {
        let inv = self.0.all_invariants().map_err(err)?;
        Ok(inv.into_iter().map(|i| (i.tb, i.rot, i.winding)).collect())
    }

    fn crossing_sum(&self, a: usize, b: usize) -> PyResult<i64> {
        self.0.inter_component_crossing_sum(a, b).map_err(err)
    }

    fn label(&self, component: usize) -> usize {
        self.0.label(component)
    }

    fn with_label(&self, component: usize, label: usize) -> Self {
        PyFront(self.0.clone().with_label(component, label))
    }

    fn with_orientation(&self, component: usize, positive: bool) -> Self {
        let o = if positive { Orientation::Positive } else { Orientation::Negative };
        PyFront(self.0.clone().with_orientation(component, o))
    }

    fn stabilize(&self, component: usize, positive: bool) -> PyResult<Self> {
        let sign = if positive { Sign::Positive } else { Sign::Negative };
        moves::stabilize(&self.0, component, sign).map(PyFront).map_err(err)
    }

    fn destabilize(&self, component: usize, positive: bool) -> PyResult<Self> {
        let sign = if positive { Sign::Positive } else { Sign::Negative };
        moves::destabilize(&self.0, component, sign).map(PyFront).map_err(err)
    }

    fn moves(&self) -> PyResult<Vec<PyMove>> {
        Ok(moves::applicable_moves(&self.0).map_err(err)?.into_iter().map(PyMove).collect())
    }

    fn apply(&self, site: &PyMove) -> PyResult<Self> {
        moves::apply_move(&self.0, site.0).map(PyFront).map_err(err)
    }

    fn canonical_key(&self) -> PyResult<Vec<u32>> {
        moves::canonical_key(&self.0).map(|k| k.0).map_err(err)
    }

    fn render_svg(&self) -> PyResult<String> {
        render_svg(&self.0, &SvgOptions::default()).map_err(err)
    }

    fn __repr__(&self) -> String {
        let words: Vec<String> = self.0.events.iter().map(|e| e.to_string()).collect();
        format!("Front(strands={}, events=[{}])", self.0.base_strands, words.join(", "))
    }
}

#[pyfunction]
fn lambda_front(n: usize) -> PyResult<PyFront> {
    core_front::lambda_front(n).map(PyFront).map_err(err)
}

#[pyfunction]
fn meridian_eye_front() -> PyFront {
    PyFront(core_front::meridian_eye_front())
}

#[pyfunction]
fn torus_braid_front(p: i64, q: i64) -> PyResult<PyFront> {
    core_front::torus_braid_front(p, q).map(PyFront).map_err(err)
}

#[pyfunction]
fn cable_link_front(p: i64, q: i64) -> PyResult<PyFront> {
    core_front::cable_link_front(p, q).map(PyFront).map_err(err)
}

/// Outcome of an isotopy search.
#[pyclass(name = "SearchResult", module = "jetlink", frozen, get_all)]
struct PySearchResult {
    /// `"found"`, `"not-isotopic"` or `"not-found"`.
    result: String,
    moves: Option<usize>,
    path: Vec<String>,
    detail: String,
}

#[pymethods]
impl PySearchResult {
    fn __repr__(&self) -> String {
        format!("SearchResult(result={:?}, moves={:?})", self.result, self.moves)
    }
}

#[pyfunction]
#[pyo3(signature = (a, b, depth = 14, states = 2_000_000))]
fn search(a: &PyFront, b: &PyFront, depth: usize, states: usize) -> PyResult<PySearchResult> {
    let budget = SearchBudget { max_depth: depth, max_states: states, ..SearchBudget::default() };
    let out = search_isotopy(&a.0, &b.0, budget).map_err(err)?;
    Ok(match out {
        SearchOutcome::Found(p) => PySearchResult {
            result: "found".into(),
            moves: Some(p.nontrivial_len()),
            path: p.steps.iter().map(|s| s.to_string()).collect(),
            detail: String::new(),
        },
        SearchOutcome::NotIsotopic(why) => {
            PySearchResult { result: "not-isotopic".into(), moves: None, path: vec![], detail: why }
        }
        SearchOutcome::NotFound(s) => PySearchResult {
            result: "not-found".into(),
            moves: None,
            path: vec![],
            detail: format!("{} states, depth {}", s.states, s.depth),
        },
    })
}

fn verdict_name(v: Verdict) -> &'static str {
    match v {
        Verdict::Isotopic => "Isotopic",
        Verdict::NotIsotopic => "NotIsotopic",
        Verdict::ExceptionalPair => "ExceptionalPair",
        Verdict::UnknownCase4Rot => "UnknownCase4Rot",
    }
}

type PyClassResult = (String, Option<(i64, i64, i64, i64)>);

fn class_result(r: ClassResult) -> PyClassResult {
    (verdict_name(r.verdict).to_string(), r.normal_form)
}

/// `(verdict, normal_form)` of a helix link; with `other`, whether the two
/// links are isotopic.
#[pyfunction]
#[pyo3(signature = (inv0, inv1, height_order = None, other = None))]
fn classify_helix(
    inv0: (i64, i64),
    inv1: (i64, i64),
    height_order: Option<&str>,
    other: Option<((i64, i64), (i64, i64), Option<String>)>,
) -> PyResult<PyClassResult> {
    let h = height(height_order)?;
    let r = match other {
        None => classify::classify_helix(inv0, inv1, h),
        Some((o0, o1, oh)) => classify::compare_helix((inv0, inv1, h), (o0, o1, height(oh.as_deref())?)),
    };
    r.map(class_result).map_err(err)
}

fn descriptor(d: (i64, i64, i64, i64, i64, i64), h: Option<&str>) -> PyResult<CableDescriptor> {
    let (p, q, m, rot0, tb1, rot1) = d;
    Ok(CableDescriptor { p, q, m, rot0, tb1, rot1, height_order: height(h)? })
}

/// Descriptors are `(p, q, m, rot0, tb1, rot1)`.
#[pyfunction]
#[pyo3(signature = (d1, d2 = None, height1 = None, height2 = None))]
fn classify_cable(
    d1: (i64, i64, i64, i64, i64, i64),
    d2: Option<(i64, i64, i64, i64, i64, i64)>,
    height1: Option<&str>,
    height2: Option<&str>,
) -> PyResult<PyClassResult> {
    let a = descriptor(d1, height1)?;
    let r = match d2 {
        None => classify::describe_cable(&a),
        Some(d2) => classify::classify_cable(&a, &descriptor(d2, height2)?),
    };
    r.map(class_result).map_err(err)
}

#[pyfunction]
fn tb_max(p: i64, q: i64, m: i64) -> PyResult<i64> {
    classify::tb_max(p, q, m).map_err(err)
}

#[pyfunction]
fn tb_max_oracle(p: i64, q: i64, m: i64) -> PyResult<i64> {
    slope::tb_max_oracle(CurveClass::new(p, q).map_err(err)?, m).map_err(err)
}

/// `None` when the rotation number at maximal tb is not determined.
#[pyfunction]
fn rot_at_tb_max(p: i64, q: i64, m: i64) -> PyResult<Option<i64>> {
    Ok(match classify::rot_at_tb_max(p, q, m).map_err(err)? {
        RotBase::Known(v) => Some(v),
        RotBase::Unknown => None,
    })
}

#[pyfunction]
fn enumerate_mountain_range(p: i64, q: i64, m: i64, tb_floor: i64) -> PyResult<Vec<(i64, i64)>> {
    classify::enumerate_mountain_range(p, q, m, tb_floor).map_err(err)
}

#[pyfunction]
fn kanda_twist(intersections: i64) -> PyResult<i64> {
    slope::kanda_twist(intersections).map_err(err)
}

#[pyfunction]
fn cable_type_to_s3(p: i64, q: i64) -> PyResult<(i64, i64)> {
    translate::cable_type_to_s3(p, q).map_err(err)
}

#[pyfunction]
fn tb_to_s3(tb: i64, q: i64) -> i64 {
    translate::tb_to_s3(tb, q)
}

#[pyfunction]
fn m_to_s3(m: i64) -> PyResult<i64> {
    translate::m_to_s3(m).map_err(err)
}

#[pyfunction]
fn cor_noimage_gap(p: i64, q: i64) -> PyResult<i64> {
    translate::cor_noimage_gap(p, q).map_err(err)
}

#[pymodule]
fn jetlink(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyFront>()?;
    m.add_class::<PyMove>()?;
    m.add_class::<PySearchResult>()?;
    m.add_function(wrap_pyfunction!(lambda_front, m)?)?;
    m.add_function(wrap_pyfunction!(meridian_eye_front, m)?)?;
    m.add_function(wrap_pyfunction!(torus_braid_front, m)?)?;
    m.add_function(wrap_pyfunction!(cable_link_front, m)?)?;
    m.add_function(wrap_pyfunction!(search, m)?)?;
    m.add_function(wrap_pyfunction!(classify_helix, m)?)?;
    m.add_function(wrap_pyfunction!(classify_cable, m)?)?;
    m.add_function(wrap_pyfunction!(tb_max, m)?)?;
    m.add_function(wrap_pyfunction!(tb_max_oracle, m)?)?;
    m.add_function(wrap_pyfunction!(rot_at_tb_max, m)?)?;
    m.add_function(wrap_pyfunction!(enumerate_mountain_range, m)?)?;
    m.add_function(wrap_pyfunction!(kanda_twist, m)?)?;
    m.add_function(wrap_pyfunction!(cable_type_to_s3, m)?)?;
    m.add_function(wrap_pyfunction!(tb_to_s3, m)?)?;
    m.add_function(wrap_pyfunction!(m_to_s3, m)?)?;
    m.add_function(wrap_pyfunction!(cor_noimage_gap, m)?)?;
    Ok(())
}
