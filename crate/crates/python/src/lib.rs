//! Python bindings for `planecount`.
//!
//! Exposes `Graph` and `PlaneGraph` classes plus the coloring, structure,
//! bound and verification functions. Rationals cross the boundary as `"p/q"`
//! strings, which `fractions.Fraction` parses directly.

use pyo3::exceptions::{PyRuntimeError, PyValueError};
use pyo3::prelude::*;
use pyo3::types::PyDict;

use planecount::bounds::{self, ContradictionRegime};
use planecount::coloring::{self, Coloring, ExactOutcome, DEFAULT_BUDGET};
use planecount::enumerate::{self, CorpusFilter};
use planecount::graph::named;
use planecount::report::{analyze, to_json_line};
use planecount::{io, structure, verify, Error, Graph, PlaneGraph, RotationSystem};

fn to_py_err(e: Error) -> PyErr {
    match e {
        Error::SearchBudgetExceeded(_) | Error::BudgetExceeded(_) => PyRuntimeError::new_err(e.to_string()),
        _ => PyValueError::new_err(e.to_string()),
    }
}

/// A simple undirected graph on vertices `0..n`.
#[pyclass(name = "Graph", module = "planecount", frozen)]
struct PyGraph {
    inner: Graph,
}

#[pymethods]
impl PyGraph {
    #[new]
    #[pyo3(signature = (n, edges=Vec::new()))]
    fn new(n: usize, edges: Vec<(usize, usize)>) -> PyResult<Self> {
        Graph::from_edges(n, &edges).map(|inner| PyGraph { inner }).map_err(to_py_err)
    }

    #[staticmethod]
    fn from_graph6(line: &str) -> PyResult<Self> {
        io::parse_graph6(line).map(|inner| PyGraph { inner }).map_err(to_py_err)
    }

    /// One of `k4`, `cube`, `prism`, `grotzsch`, `petersen`, `w5`, or
    /// `c<n>`, `k<n>`, `p<n>` for cycles, complete graphs and paths.
    #[staticmethod]
    fn named(name: &str) -> PyResult<Self> {
        let bad = || PyValueError::new_err(format!("unknown graph name: {name}"));
        let inner = match name {
            "cube" => named::cube(),
            "prism" => named::prism(),
            "grotzsch" => named::grotzsch(),
            "petersen" => named::petersen(),
            "w5" => named::wheel(5),
            _ => {
                let (kind, size) = name.split_at(1);
                let size: usize = size.parse().map_err(|_| bad())?;
                match kind {
                    "c" if size >= 3 => named::cycle(size),
                    "k" => named::complete(size),
                    "p" => named::path(size),
                    _ => return Err(bad()),
                }
            }
        };
        Ok(PyGraph { inner })
    }

    fn graph6(&self) -> String {
        io::write_graph6(&self.inner)
    }

    #[getter]
    fn n(&self) -> usize {
        self.inner.n()
    }

    #[getter]
    fn edge_count(&self) -> usize {
        self.inner.edge_count()
    }

    fn edges(&self) -> Vec<(usize, usize)> {
        self.inner.edges().collect()
    }

    fn neighbors(&self, v: usize) -> PyResult<Vec<usize>> {
        if v >= self.inner.n() {
            return Err(PyValueError::new_err(format!("vertex {v} out of range")));
        }
        Ok(self.inner.neighbors(v).to_vec())
    }

    fn min_degree(&self) -> Option<usize> {
        self.inner.min_degree()
    }

    fn is_connected(&self) -> bool {
        self.inner.is_connected()
    }

    fn is_planar(&self) -> bool {
        self.inner.is_planar()
    }

    fn __len__(&self) -> usize {
        self.inner.n()
    }

    fn __eq__(&self, other: &PyGraph) -> bool {
        self.inner == other.inner
    }

    fn __repr__(&self) -> String {
        format!("Graph(n={}, e={}, graph6={:?})", self.inner.n(), self.inner.edge_count(), self.graph6())
    }
}

/// A connected graph with a genus-0 rotation system.
#[pyclass(name = "PlaneGraph", module = "planecount", frozen)]
struct PyPlaneGraph {
    inner: PlaneGraph,
}

#[pymethods]
impl PyPlaneGraph {
    /// `rotation[v]` lists the neighbours of `v` in cyclic order.
    #[new]
    fn new(rotation: Vec<Vec<usize>>) -> PyResult<Self> {
        RotationSystem::new(rotation).and_then(PlaneGraph::new).map(|inner| PyPlaneGraph { inner }).map_err(to_py_err)
    }

    /// Some plane embedding of `g`, or `None` when `g` is not planar.
    #[staticmethod]
    #[pyo3(signature = (g, budget=DEFAULT_BUDGET))]
    fn embed(g: &PyGraph, budget: u64) -> PyResult<Option<Self>> {
        match enumerate::find_plane_embedding(&g.inner, budget).map_err(to_py_err)? {
            None => Ok(None),
            Some(r) => PlaneGraph::new(r).map(|inner| Some(PyPlaneGraph { inner })).map_err(to_py_err),
        }
    }

    fn rotation(&self) -> Vec<Vec<usize>> {
        self.inner.rotation().rotations().to_vec()
    }

    fn graph(&self) -> PyGraph {
        PyGraph { inner: self.inner.graph().clone() }
    }

    fn face_lengths(&self) -> Vec<usize> {
        self.inner.faces().lengths()
    }

    fn counts<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyDict>> {
        let c = self.inner.counts();
        let d = PyDict::new(py);
        for (k, v) in [("n", c.n), ("e", c.e), ("f", c.f), ("n3", c.n3), ("f3", c.f3), ("e3", c.e3)] {
            d.set_item(k, v)?;
        }
        Ok(d)
    }

    fn theorem4_verdict<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyDict>> {
        let v = bounds::theorem4_verdict(&self.inner);
        let d = PyDict::new(py);
        d.set_item("hypotheses_hold", v.hypotheses_hold)?;
        d.set_item("connected", v.hypotheses.connected)?;
        d.set_item("min_degree_at_least_3", v.hypotheses.min_degree_at_least_3)?;
        d.set_item("no_adjacent_triangles", v.hypotheses.no_adjacent_triangles)?;
        d.set_item("conclusion_holds", v.conclusion_holds)?;
        d.set_item("f3", v.counts.f3)?;
        d.set_item("f", v.counts.f)?;
        d.set_item("slack", v.slack.to_string())?;
        Ok(d)
    }

    /// Full verdict record as a JSON string.
    #[pyo3(signature = (graph_id="0", budget=DEFAULT_BUDGET))]
    fn analyze(&self, graph_id: &str, budget: u64) -> PyResult<String> {
        to_json_line(&analyze(graph_id, &self.inner, budget)).map_err(to_py_err)
    }

    fn __repr__(&self) -> String {
        let c = self.inner.counts();
        format!("PlaneGraph(n={}, e={}, f={}, f3={})", c.n, c.e, c.f, c.f3)
    }
}

fn coloring_of(g: &PyGraph, k: usize, colors: Vec<usize>) -> (Graph, Coloring) {
    (g.inner.clone(), Coloring { k, assignment: colors })
}

#[pyfunction]
fn parse_planar_code(data: &[u8]) -> PyResult<Vec<Vec<Vec<usize>>>> {
    io::parse_planar_code(data).map(|rs| rs.iter().map(|r| r.rotations().to_vec()).collect()).map_err(to_py_err)
}

#[pyfunction]
fn write_planar_code(rotations: Vec<Vec<Vec<usize>>>) -> PyResult<Vec<u8>> {
    let rs = rotations.into_iter().map(RotationSystem::new).collect::<Result<Vec<_>, _>>().map_err(to_py_err)?;
    io::write_planar_code(&rs).map_err(to_py_err)
}

#[pyfunction]
#[pyo3(signature = (max_n, min_n=1, min_degree=None, forbid_cycles=None, connected=true, planar=false))]
fn enumerate_graphs(
    max_n: usize,
    min_n: usize,
    min_degree: Option<usize>,
    forbid_cycles: Option<(usize, usize)>,
    connected: bool,
    planar: bool,
) -> PyResult<Vec<PyGraph>> {
    let filter =
        CorpusFilter { min_n, max_n, min_degree, forbid_cycles, require_connected: connected, require_planar: planar };
    enumerate::enumerate_small_graphs(&filter)
        .map(|gs| gs.into_iter().map(|inner| PyGraph { inner }).collect())
        .map_err(to_py_err)
}

#[pyfunction]
#[pyo3(signature = (g, budget=DEFAULT_BUDGET))]
fn plane_embeddings(g: &PyGraph, budget: u64) -> PyResult<Vec<PyPlaneGraph>> {
    let rs = enumerate::enumerate_embeddings(&g.inner, true, budget).map_err(to_py_err)?;
    rs.into_iter().map(|r| PlaneGraph::new(r).map(|inner| PyPlaneGraph { inner }).map_err(to_py_err)).collect()
}

/// `(removal_order, stuck_at)`; `stuck_at` is `None` when the graph peels completely.
#[pyfunction]
fn peel_order(g: &PyGraph) -> (Vec<usize>, Option<Vec<usize>>) {
    let t = coloring::peel_order(&g.inner);
    (t.removal_order, t.stuck_at)
}

/// Greedy 3-coloring along the peel order, or `None` if peeling gets stuck.
#[pyfunction]
fn greedy_color(g: &PyGraph) -> Option<Vec<usize>> {
    let trace = coloring::peel_order(&g.inner);
    coloring::greedy_color_from_peel(&g.inner, &trace).ok().map(|c| c.assignment)
}

/// A proper `k`-coloring, or `None` if none exists. Raises `RuntimeError`
/// when the search budget runs out.
#[pyfunction]
#[pyo3(signature = (g, k=3, budget=DEFAULT_BUDGET))]
fn exact_k_color(g: &PyGraph, k: usize, budget: u64) -> PyResult<Option<Vec<usize>>> {
    match coloring::exact_k_color(&g.inner, k, budget).map_err(to_py_err)? {
        ExactOutcome::Colored(c) => Ok(Some(c.assignment)),
        ExactOutcome::Infeasible => Ok(None),
    }
}

#[pyfunction]
#[pyo3(signature = (g, colors, k=3))]
fn verify_coloring(g: &PyGraph, colors: Vec<usize>, k: usize) -> PyResult<bool> {
    let (graph, c) = coloring_of(g, k, colors);
    coloring::verify_coloring(&graph, &c).map_err(to_py_err)
}

#[pyfunction]
#[pyo3(signature = (g, budget=DEFAULT_BUDGET))]
fn is_4_critical(g: &PyGraph, budget: u64) -> PyResult<bool> {
    coloring::is_4_critical(&g.inner, budget).map(|c| c.critical).map_err(to_py_err)
}

#[pyfunction]
fn count_triangles(g: &PyGraph) -> usize {
    structure::count_triangles(&g.inner)
}

/// An edge lying in two triangles, if any.
#[pyfunction]
fn adjacent_triangles(g: &PyGraph) -> Option<(usize, usize)> {
    structure::adjacent_triangles_exist(&g.inner)
}

#[pyfunction]
fn cycle_of_length(g: &PyGraph, k: usize) -> Option<Vec<usize>> {
    structure::has_cycle_of_length(&g.inner, k)
}

/// `[(length, witness), ...]` for the cycle lengths in `lo..=hi` present in `g`.
#[pyfunction]
fn forbidden_cycles(g: &PyGraph, lo: usize, hi: usize) -> Vec<(usize, Vec<usize>)> {
    structure::forbidden_cycle_scan(&g.inner, lo, hi).forbidden_cycles_found
}

/// `(f_upper, strict_upper)` as `"p/q"` strings.
#[pyfunction]
fn face_count_bound(m: i64, e: i64, f3: i64) -> PyResult<(String, String)> {
    let b = bounds::face_count_bound(m, e, f3).map_err(to_py_err)?;
    Ok((b.f_upper.to_string(), b.strict_upper_from_thm4.to_string()))
}

#[pyfunction]
fn edge_upper_bound(m: i64, n: i64) -> PyResult<String> {
    bounds::edge_upper_bound(m, n).map(|r| r.to_string()).map_err(to_py_err)
}

#[pyfunction]
fn ky_lower_bound(n: i64) -> PyResult<String> {
    bounds::ky_lower_bound(n).map(|r| r.to_string()).map_err(to_py_err)
}

#[pyfunction]
fn contradiction_report<'py>(py: Python<'py>, m: i64) -> PyResult<Bound<'py, PyDict>> {
    let r = bounds::contradiction_report(m).map_err(to_py_err)?;
    let d = PyDict::new(py);
    d.set_item("m", r.m)?;
    d.set_item("always_contradicts", r.always_contradicts)?;
    d.set_item("threshold_n", r.threshold_n)?;
    let regime = match r.regime {
        ContradictionRegime::Always => "always",
        ContradictionRegime::UpTo(_) => "up_to",
        ContradictionRegime::From(_) => "from",
        ContradictionRegime::Never => "never",
    };
    d.set_item("regime", regime)?;
    d.set_item("gap_slope", r.gap_slope.to_string())?;
    d.set_item("gap_offset", r.gap_offset.to_string())?;
    Ok(d)
}

/// Runs one exhaustive check, selected by the same id as the CLI's `--theorem` flag, and returns the JSON summary.
#[pyfunction]
#[pyo3(signature = (theorem, max_n, budget=DEFAULT_BUDGET))]
fn verify_theorem(py: Python<'_>, theorem: u8, max_n: usize, budget: u64) -> PyResult<String> {
    let summary = py
        .detach(|| match theorem {
            2 => verify::verify_theorem2(max_n),
            4 => verify::verify_theorem4(max_n, budget),
            6 => verify::verify_theorem6(max_n, budget, &[]),
            _ => Err(Error::InvalidGraph(format!("no verifier with id {theorem}"))),
        })
        .map_err(to_py_err)?;
    to_json_line(&summary).map_err(to_py_err)
}

#[pymodule]
#[pyo3(name = "planecount")]
fn planecount_module(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyGraph>()?;
    m.add_class::<PyPlaneGraph>()?;
    m.add_function(wrap_pyfunction!(parse_planar_code, m)?)?;
    m.add_function(wrap_pyfunction!(write_planar_code, m)?)?;
    m.add_function(wrap_pyfunction!(enumerate_graphs, m)?)?;
    m.add_function(wrap_pyfunction!(plane_embeddings, m)?)?;
    m.add_function(wrap_pyfunction!(peel_order, m)?)?;
    m.add_function(wrap_pyfunction!(greedy_color, m)?)?;
    m.add_function(wrap_pyfunction!(exact_k_color, m)?)?;
    m.add_function(wrap_pyfunction!(verify_coloring, m)?)?;
    m.add_function(wrap_pyfunction!(is_4_critical, m)?)?;
    m.add_function(wrap_pyfunction!(count_triangles, m)?)?;
    m.add_function(wrap_pyfunction!(adjacent_triangles, m)?)?;
    m.add_function(wrap_pyfunction!(cycle_of_length, m)?)?;
    m.add_function(wrap_pyfunction!(forbidden_cycles, m)?)?;
    m.add_function(wrap_pyfunction!(face_count_bound, m)?)?;
    m.add_function(wrap_pyfunction!(edge_upper_bound, m)?)?;
    m.add_function(wrap_pyfunction!(ky_lower_bound, m)?)?;
    m.add_function(wrap_pyfunction!(contradiction_report, m)?)?;
    m.add_function(wrap_pyfunction!(verify_theorem, m)?)?;
    m.add("DEFAULT_BUDGET", DEFAULT_BUDGET)?;
    Ok(())
}
