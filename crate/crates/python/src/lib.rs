//! Python bindings for the elena crate.

use elena::bijections as bij;
use elena::enumeration::elena_words;
use elena::harness::{self, CheckRecord};
use elena::{Band, ElenaWord, EvenEnd, FamilySpec, LatticePath, OddEnd, PlaneTree};
use num_bigint::BigUint;
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

fn err(e: elena::Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn band(name: &str) -> PyResult<Band> {
    match name {
        "A" => Ok(Band::A),
        "B" => Ok(Band::B),
        other => Err(PyValueError::new_err(format!(
            "unknown band {other:?}, expected \"A\" or \"B\""
        ))),
    }
}

fn spec(family: &str, length: usize, end: i32) -> PyResult<FamilySpec> {
    FamilySpec::new(band(family)?, length, end).map_err(err)
}

/// A lattice path in band A (levels 0..=3) or B (levels -2..=1).
#[pyclass(frozen, eq, hash, skip_from_py_object, name = "Path")]
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct PyPath(LatticePath);

#[pymethods]
impl PyPath {
    #[new]
    #[pyo3(signature = (text, band = "A"))]
    fn new(text: &str, band: &str) -> PyResult<Self> {
        LatticePath::parse(text, self::band(band)?)
            .map(PyPath)
            .map_err(err)
    }

    #[getter]
    fn band(&self) -> String {
        self.0.band().to_string()
    }

    #[getter]
    fn end_level(&self) -> i32 {
        self.0.end_level()
    }

    fn levels(&self) -> Vec<i32> {
        self.0.levels()
    }

    fn render(&self) -> String {
        elena::render::render_path(&self.0)
    }

    fn __len__(&self) -> usize {
        self.0.len()
    }

    fn __str__(&self) -> String {
        self.0.to_string()
    }

    fn __repr__(&self) -> String {
        format!("Path({:?}, band={:?})", self.0.to_string(), self.band())
    }
}

/// A rooted plane tree in balanced-parentheses form.
#[pyclass(frozen, eq, hash, skip_from_py_object, name = "Tree")]
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct PyTree(PlaneTree);

#[pymethods]
impl PyTree {
    #[new]
    fn new(text: &str) -> PyResult<Self> {
        PlaneTree::parse(text).map(PyTree).map_err(err)
    }

    #[getter]
    fn size(&self) -> usize {
        self.0.size()
    }

    #[getter]
    fn height(&self) -> usize {
        self.0.height()
    }

    fn rightmost_leaf_depth(&self) -> usize {
        self.0.rightmost_leaf_depth()
    }

    fn render(&self) -> String {
        elena::render::render_tree(&self.0)
    }

    fn __str__(&self) -> String {
        self.0.to_string()
    }

    fn __repr__(&self) -> String {
        format!("Tree({:?})", self.0.to_string())
    }
}

/// An Elena in word form, e.g. `"a p3 a p1 a"`.
#[pyclass(frozen, eq, hash, skip_from_py_object, name = "Elena")]
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct PyElena(ElenaWord);

#[pymethods]
impl PyElena {
    #[new]
    fn new(text: &str) -> PyResult<Self> {
        ElenaWord::parse(text).map(PyElena).map_err(err)
    }

    #[staticmethod]
    fn from_groups(groups: Vec<Vec<usize>>) -> PyResult<Self> {
        elena::ElenaTree::new(groups)
            .map(|e| PyElena(e.to_word()))
            .map_err(err)
    }

    #[getter]
    fn size(&self) -> usize {
        self.0.size()
    }

    #[getter]
    fn spine(&self) -> usize {
        self.0.to_elena().spine()
    }

    #[getter]
    fn groups(&self) -> Vec<Vec<usize>> {
        self.0.to_elena().groups().to_vec()
    }

    fn last_group_nonempty(&self) -> bool {
        self.0.to_elena().last_group_nonempty()
    }

    fn render(&self) -> String {
        elena::render::render_elena(&self.0.to_elena())
    }

    fn __str__(&self) -> String {
        self.0.to_string()
    }

    fn __repr__(&self) -> String {
        format!("Elena({:?})", self.0.to_string())
    }
}

#[pyclass(frozen, get_all, name = "CheckRecord")]
pub struct PyCheckRecord {
    claim: String,
    n: usize,
    expected: String,
    actual: String,
    passed: bool,
    witness: Option<String>,
}

#[pymethods]
impl PyCheckRecord {
    fn to_json(&self) -> String {
        CheckRecord::from(self).to_json()
    }

    fn __repr__(&self) -> String {
        CheckRecord::from(self).to_string()
    }
}

impl From<CheckRecord> for PyCheckRecord {
    fn from(r: CheckRecord) -> Self {
        PyCheckRecord {
            claim: r.claim,
            n: r.n,
            expected: r.expected,
            actual: r.actual,
            passed: r.passed,
            witness: r.witness,
        }
    }
}

impl From<&PyCheckRecord> for CheckRecord {
    fn from(r: &PyCheckRecord) -> Self {
        CheckRecord {
            claim: r.claim.clone(),
            n: r.n,
            expected: r.expected.clone(),
            actual: r.actual.clone(),
            passed: r.passed,
            witness: r.witness.clone(),
        }
    }
}

fn records(report: elena::Report) -> Vec<PyCheckRecord> {
    report
        .records
        .into_iter()
        .map(PyCheckRecord::from)
        .collect()
}

#[pyfunction]
fn fib(k: i64) -> PyResult<BigUint> {
    elena::fib(k).map_err(err)
}

/// `method` is one of "brute-force", "transfer-matrix", "formula".
#[pyfunction]
#[pyo3(signature = (family, length, end, method = "transfer-matrix"))]
fn count(family: &str, length: usize, end: i32, method: &str) -> PyResult<BigUint> {
    let method = elena::CountMethod::ALL
        .into_iter()
        .find(|m| m.name() == method)
        .ok_or_else(|| PyValueError::new_err(format!("unknown method {method:?}")))?;
    elena::count(&spec(family, length, end)?, method).map_err(err)
}

#[pyfunction]
fn generate(family: &str, length: usize, end: i32) -> PyResult<Vec<PyPath>> {
    Ok(elena::generate(&spec(family, length, end)?)
        .into_iter()
        .map(PyPath)
        .collect())
}

/// `(lhs, rhs)` of the union identity at length `n`.
#[pyfunction]
fn union_identity_counts(n: usize) -> (BigUint, BigUint) {
    let u = elena::union_identity_counts(n);
    (u.lhs, u.rhs)
}

#[pyfunction]
fn elenas(size: usize) -> Vec<PyElena> {
    elena_words(size).into_iter().map(PyElena).collect()
}

#[pyfunction]
fn glove_path_to_tree(path: &PyPath) -> PyResult<PyTree> {
    bij::glove_path_to_tree(&path.0).map(PyTree).map_err(err)
}

#[pyfunction]
fn glove_tree_to_path(tree: &PyTree) -> PyResult<PyPath> {
    bij::glove_tree_to_path(&tree.0).map(PyPath).map_err(err)
}

#[pyfunction]
fn decompose_b_path(path: &PyPath) -> PyResult<PyElena> {
    bij::decompose_b_path(&path.0).map(PyElena).map_err(err)
}

#[pyfunction]
fn compose_b_path(elena: &PyElena) -> PyPath {
    PyPath(bij::compose_b_path(&elena.0))
}

#[pyfunction]
fn broom_elena_to_tree(elena: &PyElena) -> PyTree {
    PyTree(bij::broom_elena_to_tree(&elena.0.to_elena()))
}

#[pyfunction]
fn broom_tree_to_elena(tree: &PyTree) -> PyResult<PyElena> {
    bij::broom_tree_to_elena(&tree.0)
        .map(|e| PyElena(e.to_word()))
        .map_err(err)
}

fn even_tag(tag: i32) -> PyResult<EvenEnd> {
    EvenEnd::from_level(tag).ok_or_else(|| PyValueError::new_err("tag must be 0 or 2"))
}

fn odd_tag(tag: i32) -> PyResult<OddEnd> {
    OddEnd::from_level(tag).ok_or_else(|| PyValueError::new_err("tag must be 1 or 3"))
}

#[pyfunction]
fn split_last_two(path: &PyPath) -> PyResult<(PyPath, i32)> {
    let (p, tag) = bij::split_last_two(&path.0).map_err(err)?;
    Ok((PyPath(p), tag.level()))
}

#[pyfunction]
fn join_last_two(path: &PyPath, tag: i32) -> PyResult<PyPath> {
    bij::join_last_two(&path.0, even_tag(tag)?)
        .map(PyPath)
        .map_err(err)
}

#[pyfunction]
fn composite_even(path: &PyPath) -> PyResult<(PyPath, i32)> {
    let (p, tag) = bij::composite_even(&path.0).map_err(err)?;
    Ok((PyPath(p), tag.level()))
}

#[pyfunction]
fn composite_even_inv(path: &PyPath, tag: i32) -> PyResult<PyPath> {
    bij::composite_even_inv(&path.0, even_tag(tag)?)
        .map(PyPath)
        .map_err(err)
}

#[pyfunction]
fn composite_odd(path: &PyPath) -> PyResult<(PyPath, i32)> {
    let (p, tag) = bij::composite_odd(&path.0).map_err(err)?;
    Ok((PyPath(p), tag.level()))
}

#[pyfunction]
fn composite_odd_inv(path: &PyPath, tag: i32) -> PyResult<PyPath> {
    bij::composite_odd_inv(&path.0, odd_tag(tag)?)
        .map(PyPath)
        .map_err(err)
}

#[pyfunction]
fn verify_counts(py: Python<'_>, max_length: usize) -> Vec<PyCheckRecord> {
    records(py.detach(|| harness::verify_counts(max_length)))
}

#[pyfunction]
fn verify_bijections(py: Python<'_>, max_length: usize) -> Vec<PyCheckRecord> {
    records(py.detach(|| harness::verify_bijections(max_length)))
}

#[pyfunction]
fn verify_round_trips(py: Python<'_>, max_nodes: usize, max_length: usize) -> Vec<PyCheckRecord> {
    records(py.detach(|| harness::verify_round_trips(max_nodes, max_length)))
}

#[pymodule]
fn pyelena(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyPath>()?;
    m.add_class::<PyTree>()?;
    m.add_class::<PyElena>()?;
    m.add_class::<PyCheckRecord>()?;
    m.add_function(wrap_pyfunction!(fib, m)?)?;
    m.add_function(wrap_pyfunction!(count, m)?)?;
    m.add_function(wrap_pyfunction!(generate, m)?)?;
    m.add_function(wrap_pyfunction!(union_identity_counts, m)?)?;
    m.add_function(wrap_pyfunction!(elenas, m)?)?;
    m.add_function(wrap_pyfunction!(glove_path_to_tree, m)?)?;
    m.add_function(wrap_pyfunction!(glove_tree_to_path, m)?)?;
    m.add_function(wrap_pyfunction!(decompose_b_path, m)?)?;
    m.add_function(wrap_pyfunction!(compose_b_path, m)?)?;
    m.add_function(wrap_pyfunction!(broom_elena_to_tree, m)?)?;
    m.add_function(wrap_pyfunction!(broom_tree_to_elena, m)?)?;
    m.add_function(wrap_pyfunction!(split_last_two, m)?)?;
    m.add_function(wrap_pyfunction!(join_last_two, m)?)?;
    m.add_function(wrap_pyfunction!(composite_even, m)?)?;
    m.add_function(wrap_pyfunction!(composite_even_inv, m)?)?;
    m.add_function(wrap_pyfunction!(composite_odd, m)?)?;
    m.add_function(wrap_pyfunction!(composite_odd_inv, m)?)?;
    m.add_function(wrap_pyfunction!(verify_counts, m)?)?;
    m.add_function(wrap_pyfunction!(verify_bijections, m)?)?;
    m.add_function(wrap_pyfunction!(verify_round_trips, m)?)?;
    Ok(())
}
