//! Python bindings: fields, sectioned configurations, perspective pairs and counts.
//!
//! Field elements and coordinates cross the boundary as integer codes; files
//! cross as the same JSON documents the CLI reads and writes.

use std::collections::BTreeMap;

use pyo3::create_exception;
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use pyo3::types::{PyBool, PyDict, PyList};
use serde_json::Value;

use desargues_core::arcs::frame_off_hyperplane;
use desargues_core::config::{substructure_counts, verify_symbol_incidence, vertex_sweep};
use desargues_core::desargues::{
    axis_hyperplane, edge_intersections, extract_perspective_pair, find_vertex, lift_to_arc, section_arc,
    seeded_configuration, seeded_perspective_pair, standard_hyperplane, LabeledConfiguration, LiftChoice,
    PerspectivePair,
};
use desargues_core::enumerate;
use desargues_core::field::{Field, FieldSpec};
use desargues_core::io;
use desargues_core::projlin::{hyperplane_from_dual, ProjPoint, Subspace};
use desargues_core::verify::{verify_config, verify_pair};
use desargues_core::Error;

create_exception!(pydesargues, GeometryError, PyValueError, "A construction or check failed on geometric grounds.");

fn err(e: Error) -> PyErr {
    GeometryError::new_err(format!("{}: {e}", e.name()))
}

fn gf(p: u32, k: u32) -> PyResult<Field> {
    Field::gf(p, k).map_err(err)
}

fn to_py<'py>(py: Python<'py>, v: &Value) -> PyResult<Bound<'py, PyAny>> {
    Ok(match v {
        Value::Null => py.None().into_bound(py),
        Value::Bool(b) => PyBool::new(py, *b).to_owned().into_any(),
        Value::Number(n) => match (n.as_i64(), n.as_u64()) {
            (Some(i), _) => i.into_pyobject(py)?.into_any(),
            (None, Some(u)) => u.into_pyobject(py)?.into_any(),
            _ => n.as_f64().unwrap_or(f64::NAN).into_pyobject(py)?.into_any(),
        },
        Value::String(s) => s.into_pyobject(py)?.into_any(),
        Value::Array(items) => {
            let list = PyList::empty(py);
            for x in items {
                list.append(to_py(py, x)?)?;
            }
            list.into_any()
        }
        Value::Object(map) => {
            let dict = PyDict::new(py);
            for (k, x) in map {
                dict.set_item(k, to_py(py, x)?)?;
            }
            dict.into_any()
        }
    })
}

fn value(v: impl serde::Serialize) -> Value {
    serde_json::to_value(v).expect("reports serialize")
}

#[pyclass(name = "Field", module = "pydesargues", frozen)]
struct PyField {
    inner: Field,
}

impl PyField {
    fn code(&self, a: u32) -> PyResult<u32> {
        if a < self.inner.q() {
            Ok(a)
        } else {
            Err(PyValueError::new_err(format!("{a} is not an element code of GF({})", self.inner.q())))
        }
    }
}

#[pymethods]
impl PyField {
    /// GF(p^k); `modulus` is monic, constant term first.
    #[new]
    #[pyo3(signature = (p, k = 1, modulus = None))]
    fn new(p: u32, k: u32, modulus: Option<Vec<u32>>) -> PyResult<Self> {
        let mut spec = FieldSpec::with_degree(p, k).map_err(err)?;
        if modulus.is_some() {
            spec.modulus = modulus;
        }
        Ok(PyField { inner: Field::new(spec).map_err(err)? })
    }

    #[getter]
    fn p(&self) -> u32 {
        self.inner.p()
    }

    #[getter]
    fn k(&self) -> u32 {
        self.inner.k()
    }

    #[getter]
    fn q(&self) -> u32 {
        self.inner.q()
    }

    fn elements(&self) -> Vec<u32> {
        (0..self.inner.q()).collect()
    }

    fn add(&self, a: u32, b: u32) -> PyResult<u32> {
        Ok(self.inner.add(self.code(a)?, self.code(b)?))
    }

    fn sub(&self, a: u32, b: u32) -> PyResult<u32> {
        Ok(self.inner.sub(self.code(a)?, self.code(b)?))
    }

    fn mul(&self, a: u32, b: u32) -> PyResult<u32> {
        Ok(self.inner.mul(self.code(a)?, self.code(b)?))
    }

    fn div(&self, a: u32, b: u32) -> PyResult<u32> {
        self.inner.div(self.code(a)?, self.code(b)?).map_err(err)
    }

    fn neg(&self, a: u32) -> PyResult<u32> {
        Ok(self.inner.neg(self.code(a)?))
    }

    fn inv(&self, a: u32) -> PyResult<u32> {
        self.inner.try_inv(self.code(a)?).map_err(err)
    }

    /// Polynomial coefficients of an element, constant term first.
    fn coeffs(&self, a: u32) -> PyResult<Vec<u32>> {
        Ok(self.inner.coeffs(self.code(a)?))
    }

    #[allow(clippy::wrong_self_convention)]
    fn from_coeffs(&self, coeffs: Vec<u32>) -> PyResult<u32> {
        self.inner.from_coeffs(&coeffs).map_err(err)
    }

    fn __repr__(&self) -> String {
        match self.inner.k() {
            1 => format!("Field(p={})", self.inner.p()),
            k => format!("Field(p={}, k={k})", self.inner.p()),
        }
    }
}

/// The C(n+3,2) labelled points cut from an (n+3)-arc of PG(n+1, q) by a hyperplane.
#[pyclass(name = "Configuration", module = "pydesargues", frozen)]
struct PyConfiguration {
    inner: LabeledConfiguration,
}

#[pymethods]
impl PyConfiguration {
    /// Section of the frame built off the hyperplane x_{n+2} = 0.
    #[staticmethod]
    #[pyo3(signature = (n, p, k = 1))]
    fn frame(n: usize, p: u32, k: u32) -> PyResult<Self> {
        let h = standard_hyperplane(&gf(p, k)?, n);
        let arc = frame_off_hyperplane(&h).map_err(err)?;
        Ok(PyConfiguration { inner: section_arc(&arc, &h).map_err(err)? })
    }

    /// Section of a random arc by a random hyperplane.
    #[staticmethod]
    #[pyo3(signature = (n, p, seed, k = 1))]
    fn seeded(n: usize, p: u32, seed: u64, k: u32) -> PyResult<Self> {
        let (_, _, inner) = seeded_configuration(&gf(p, k)?, n, seed).map_err(err)?;
        Ok(PyConfiguration { inner })
    }

    /// Section an arc document (with or without a stored hyperplane).
    #[staticmethod]
    fn section(arc_json: &str) -> PyResult<Self> {
        let (arc, h) = io::arc_from_json(arc_json).map_err(err)?;
        let h = match h {
            Some(h) => h,
            None => {
                let mut dual = vec![0; arc.ambient() + 1];
                dual[arc.ambient()] = 1;
                hyperplane_from_dual(arc.field(), &dual).map_err(err)?
            }
        };
        Ok(PyConfiguration { inner: section_arc(&arc, &h).map_err(err)? })
    }

    #[staticmethod]
    fn from_json(text: &str) -> PyResult<Self> {
        Ok(PyConfiguration { inner: io::config_from_json(text).map_err(err)? })
    }

    fn to_json(&self) -> String {
        io::config_to_json(&self.inner)
    }

    #[getter]
    fn n(&self) -> usize {
        self.inner.ambient()
    }

    #[getter]
    fn q(&self) -> u32 {
        self.inner.field().q()
    }

    fn __len__(&self) -> usize {
        self.inner.len()
    }

    /// `{(i, j): coordinate codes}` in the hyperplane's own coordinates.
    fn points(&self) -> BTreeMap<(u8, u8), Vec<u32>> {
        self.inner.table().iter().map(|(l, p)| ((l.i(), l.j()), p.codes().to_vec())).collect()
    }

    /// `{dimension: count}` of the sub-configurations cut out by the symbol sets.
    fn substructure_counts(&self) -> BTreeMap<isize, usize> {
        substructure_counts(&self.inner)
    }

    fn symbol_incidence(&self) -> bool {
        verify_symbol_incidence(&self.inner)
    }

    /// Every point taken as a vertex in turn.
    fn sweep<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyAny>> {
        to_py(py, &value(vertex_sweep(&self.inner)))
    }

    fn verify<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyAny>> {
        let report = verify_config(&self.inner);
        let mut v = value(&report);
        v["passed"] = Value::Bool(report.passed());
        to_py(py, &v)
    }

    /// The two simplexes in perspective from the point labelled (i, j).
    #[pyo3(signature = (i = 1, j = 2))]
    fn pair(&self, i: u8, j: u8) -> PyResult<PyPair> {
        let (inner, v) = extract_perspective_pair(&self.inner, i, j).map_err(err)?;
        Ok(PyPair { inner, vertex: Some(v), hyperplane: None })
    }

    fn incidence_csv(&self) -> PyResult<String> {
        Ok(io::incidence(&self.inner).map_err(err)?.to_csv())
    }

    fn __repr__(&self) -> String {
        format!("Configuration(n={}, q={}, points={})", self.n(), self.q(), self.inner.len())
    }
}

/// Two n-simplexes of PG(n, q) in perspective from a point.
#[pyclass(name = "PerspectivePair", module = "pydesargues", frozen)]
struct PyPair {
    inner: PerspectivePair,
    vertex: Option<ProjPoint>,
    hyperplane: Option<Subspace>,
}

impl PyPair {
    fn codes(points: &[ProjPoint]) -> Vec<Vec<u32>> {
        points.iter().map(|p| p.codes().to_vec()).collect()
    }
}

#[pymethods]
impl PyPair {
    #[staticmethod]
    #[pyo3(signature = (n, p, seed, k = 1))]
    fn seeded(n: usize, p: u32, seed: u64, k: u32) -> PyResult<Self> {
        let (inner, v, _) = seeded_perspective_pair(&gf(p, k)?, n, seed).map_err(err)?;
        Ok(PyPair { inner, vertex: Some(v), hyperplane: None })
    }

    #[staticmethod]
    fn from_json(text: &str) -> PyResult<Self> {
        let file = io::pair_from_json(text).map_err(err)?;
        Ok(PyPair { inner: file.pair, vertex: file.vertex, hyperplane: file.hyperplane })
    }

    fn to_json(&self) -> String {
        io::pair_to_json(&self.inner, self.vertex.as_ref(), self.hyperplane.as_ref())
    }

    #[getter]
    fn n(&self) -> usize {
        self.inner.ambient()
    }

    fn a(&self) -> Vec<Vec<u32>> {
        Self::codes(self.inner.a())
    }

    fn b(&self) -> Vec<Vec<u32>> {
        Self::codes(self.inner.b())
    }

    /// The centre of perspectivity, recomputed from the points.
    fn vertex(&self) -> PyResult<Vec<u32>> {
        Ok(find_vertex(&self.inner).map_err(err)?.codes().to_vec())
    }

    /// `{(i, j): point}` where edge A_iA_j meets edge B_iB_j.
    fn edge_intersections(&self) -> PyResult<BTreeMap<(usize, usize), Vec<u32>>> {
        let edges = edge_intersections(&self.inner).map_err(err)?;
        Ok(edges.into_iter().map(|(k, p)| (k, p.codes().to_vec())).collect())
    }

    /// Dual coordinates of the axis hyperplane.
    fn axis(&self) -> PyResult<Vec<u32>> {
        axis_hyperplane(&self.inner).and_then(|h| h.hyperplane_dual()).map_err(err)
    }

    fn verify<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyAny>> {
        let report = verify_pair(&self.inner, self.vertex.as_ref());
        let mut v = value(&report);
        v["passed"] = Value::Bool(report.passed());
        to_py(py, &v)
    }

    /// An arc document whose section reproduces this pair around (1,2).
    #[pyo3(signature = (seed = None))]
    fn lift(&self, seed: Option<u64>) -> PyResult<String> {
        let v = match &self.vertex {
            Some(v) => v.clone(),
            None => find_vertex(&self.inner).map_err(err)?,
        };
        let h = self.hyperplane.clone().unwrap_or_else(|| standard_hyperplane(self.inner.field(), self.n()));
        let choice = seed.map_or(LiftChoice::First, LiftChoice::Seeded);
        let arc = lift_to_arc(&self.inner, &v, &h, choice).map_err(err)?;
        Ok(io::arc_to_json(&arc, Some(&h)))
    }

    fn __repr__(&self) -> String {
        format!("PerspectivePair(n={}, q={})", self.n(), self.inner.field().q())
    }
}

/// Ordered frames of PG(n, q); equals |PGL(n+1, q)|.
#[pyfunction]
#[pyo3(signature = (n, p, k = 1))]
fn count_frames(n: usize, p: u32, k: u32) -> PyResult<u64> {
    enumerate::count_frames(n, gf(p, k)?.spec()).map_err(err)
}

/// Ordered `size`-arcs of PG(n, q), optionally avoiding the hyperplane with dual coordinates `avoid`.
#[pyfunction]
#[pyo3(signature = (n, p, size, k = 1, avoid = None))]
fn count_arcs(n: usize, p: u32, size: usize, k: u32, avoid: Option<Vec<u32>>) -> PyResult<u64> {
    let field = gf(p, k)?;
    let h = avoid.map(|d| hyperplane_from_dual(&field, &d)).transpose().map_err(err)?;
    enumerate::count_arcs(n, field.spec(), size, h.as_ref()).map_err(err)
}

/// |PGL(n+1, q)|, or None on overflow.
#[pyfunction]
fn projectivity_group_order(n: usize, q: u64) -> Option<u64> {
    enumerate::projectivity_group_order(n, q)
}

#[pymodule]
fn pydesargues(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add("GeometryError", m.py().get_type::<GeometryError>())?;
    m.add_class::<PyField>()?;
    m.add_class::<PyConfiguration>()?;
    m.add_class::<PyPair>()?;
    m.add_function(wrap_pyfunction!(count_frames, m)?)?;
    m.add_function(wrap_pyfunction!(count_arcs, m)?)?;
    m.add_function(wrap_pyfunction!(projectivity_group_order, m)?)?;
    Ok(())
}
