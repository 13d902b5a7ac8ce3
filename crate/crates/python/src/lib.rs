//! Python bindings: graphs, exact counts, closure operations, cycle
//! distributions and verification sweeps.

use num_bigint::BigUint;
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use pyo3::types::PyDict;

use nonham::{
    Claim, Error, ExactCount, Graph, Lemma5Outcome, Shard, SweepSource, VerificationReport,
    Verifier,
};

fn py_err(e: Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn big(c: ExactCount) -> BigUint {
    c.into_inner()
}

/// A simple undirected graph on at most 32 vertices.
#[pyclass(name = "Graph", frozen, eq, skip_from_py_object, module = "pynonham")]
#[derive(Clone, PartialEq, Eq)]
struct PyGraph {
    inner: Graph,
}

impl From<Graph> for PyGraph {
    fn from(inner: Graph) -> Self {
        PyGraph { inner }
    }
}

#[pymethods]
impl PyGraph {
    #[new]
    #[pyo3(signature = (order, edges=Vec::new()))]
    fn new(order: usize, edges: Vec<(usize, usize)>) -> PyResult<Self> {
        Graph::from_edges(order, &edges).map(Into::into).map_err(py_err)
    }

    #[staticmethod]
    fn complete(n: usize) -> PyResult<Self> {
        Graph::complete(n).map(Into::into).map_err(py_err)
    }

    /// K_{n-1}·K_2 with pendant vertex n-1 attached to n-2.
    #[staticmethod]
    fn extremal(n: usize) -> PyResult<Self> {
        Graph::extremal(n).map(Into::into).map_err(py_err)
    }

    #[staticmethod]
    fn path(n: usize) -> PyResult<Self> {
        Graph::path(n).map(Into::into).map_err(py_err)
    }

    #[staticmethod]
    fn cycle(n: usize) -> PyResult<Self> {
        Graph::cycle(n).map(Into::into).map_err(py_err)
    }

    #[staticmethod]
    fn from_graph6(text: &str) -> PyResult<Self> {
        nonham::parse_graph6(text.as_bytes())
            .map(Into::into)
            .map_err(py_err)
    }

    fn to_graph6(&self) -> String {
        nonham::write_graph6(&self.inner)
    }

    #[getter]
    fn order(&self) -> usize {
        self.inner.order()
    }

    fn edges(&self) -> Vec<(usize, usize)> {
        self.inner.edges()
    }

    fn has_edge(&self, u: usize, v: usize) -> bool {
        self.inner.has_edge(u, v)
    }

    fn degree(&self, v: usize) -> PyResult<usize> {
        if v >= self.inner.order() {
            return Err(py_err(Error::VertexOutOfRange {
                vertex: v,
                order: self.inner.order(),
            }));
        }
        Ok(self.inner.degree(v))
    }

    fn edge_count(&self) -> BigUint {
        big(self.inner.edge_count())
    }

    fn complement(&self) -> Self {
        self.inner.complement().into()
    }

    /// Canonical form as a graph6 string; equal exactly for isomorphic graphs.
    fn canonical_form(&self) -> PyResult<String> {
        nonham::canonical_form(&self.inner)
            .map(|f| f.to_graph6())
            .map_err(py_err)
    }

    fn __repr__(&self) -> String {
        format!("Graph.from_graph6({:?})", self.to_graph6())
    }
}

#[pyfunction]
fn permutation_number(n: i64, k: i64) -> PyResult<BigUint> {
    nonham::permutation_number(n, k).map(big).map_err(py_err)
}

#[pyfunction]
fn count_paths(g: &PyGraph, k: usize) -> PyResult<BigUint> {
    nonham::count_paths(&g.inner, k).map(big).map_err(py_err)
}

#[pyfunction]
fn count_hamilton_paths(g: &PyGraph) -> PyResult<BigUint> {
    nonham::count_hamilton_paths(&g.inner).map(big).map_err(py_err)
}

#[pyfunction]
fn count_hamilton_cycles(g: &PyGraph) -> PyResult<BigUint> {
    nonham::count_hamilton_cycles(&g.inner).map(big).map_err(py_err)
}

#[pyfunction]
fn is_hamiltonian(g: &PyGraph) -> PyResult<bool> {
    nonham::is_hamiltonian(&g.inner).map_err(py_err)
}

#[pyfunction]
fn is_maximally_nonhamiltonian(g: &PyGraph) -> PyResult<bool> {
    nonham::is_maximally_nonhamiltonian(&g.inner).map_err(py_err)
}

/// Returns `(closure, added_edges, rounds)`.
#[pyfunction]
fn bondy_chvatal_closure(g: &PyGraph) -> (PyGraph, Vec<(usize, usize)>, usize) {
    let (h, trace) = nonham::bondy_chvatal_closure(&g.inner);
    (h.into(), trace.added_edges, trace.rounds)
}

#[pyfunction]
fn maximal_nonhamiltonian_completion(g: &PyGraph) -> PyResult<PyGraph> {
    nonham::maximal_nonhamiltonian_completion(&g.inner)
        .map(Into::into)
        .map_err(py_err)
}

/// `None` when the complement degree-sum bound holds, otherwise the
/// offending `(u, v, degree_sum)`.
#[pyfunction]
fn check_lemma5(g: &PyGraph) -> PyResult<Option<(usize, usize, usize)>> {
    Ok(match nonham::check_lemma5(&g.inner).map_err(py_err)? {
        Lemma5Outcome::Holds => None,
        Lemma5Outcome::Violation {
            u,
            v,
            complement_degree_sum,
        } => Some((u, v, complement_degree_sum)),
    })
}

#[pyfunction]
fn theorem2_bound(n: usize, k: usize) -> PyResult<BigUint> {
    let q = nonham::BoundQuery::new(n, k).map_err(py_err)?;
    Ok(big(nonham::theorem2_bound(q)))
}

#[pyfunction]
fn ore_bondy_max_size(n: usize) -> PyResult<BigUint> {
    nonham::ore_bondy_max_size(n).map(big).map_err(py_err)
}

#[pyfunction]
fn corollary3_value(n: usize) -> PyResult<BigUint> {
    nonham::corollary3_value(n).map(big).map_err(py_err)
}

/// The bound as a reduced `(numerator, denominator)` pair.
#[pyfunction]
fn lemma6_bound(n: usize, m: usize) -> PyResult<(BigUint, BigUint)> {
    let r = nonham::lemma6_bound(n, m).map_err(py_err)?;
    Ok((r.numer().clone(), r.denom().clone()))
}

/// `{j: x_j}` including `j = 0` for cycles lying inside the graph.
#[pyfunction]
fn xj_distribution<'py>(py: Python<'py>, g: &PyGraph) -> PyResult<Bound<'py, PyDict>> {
    let dist = nonham::xj_distribution(&g.inner).map_err(py_err)?;
    let out = PyDict::new(py);
    out.set_item(0, big(dist.x0.clone()))?;
    for (j, c) in dist.x {
        out.set_item(j, big(c))?;
    }
    Ok(out)
}

#[pyfunction]
fn moment_summary<'py>(py: Python<'py>, g: &PyGraph) -> PyResult<Bound<'py, PyDict>> {
    let dist = nonham::xj_distribution(&g.inner).map_err(py_err)?;
    let ms = nonham::moment_summary(&g.inner, &dist).map_err(py_err)?;
    let out = PyDict::new(py);
    out.set_item("m", ms.m)?;
    for (key, value) in [
        ("omega", &ms.omega),
        ("beta", &ms.beta),
        ("p", &ms.p),
        ("t", &ms.t),
        ("s", &ms.s),
        ("q", &ms.q),
    ] {
        out.set_item(key, value.value().clone())?;
    }
    out.set_item("cauchy_schwarz_holds", ms.cauchy_schwarz_holds())?;
    out.set_item("degree_sum_bound_holds", ms.degree_sum_bound_holds())?;
    Ok(out)
}

/// Runs a builtin verification sweep and returns the reports as a JSON
/// array (timing included).
#[pyfunction]
/// Runs a verification sweep and returns a JSON array of reports.
#[pyo3(signature = (claim, n, k=None, shard=None, jobs=1))]
fn verify(
    py: Python<'_>,
    claim: &str,
    n: usize,
    k: Option<usize>,
    shard: Option<&str>,
    jobs: usize,
) -> PyResult<String> {
    let claim: Claim = claim.parse().map_err(py_err)?;
    let mut source = SweepSource::builtin();
    if let Some(s) = shard {
        source = source.with_shard(s.parse::<Shard>().map_err(py_err)?);
    }
    let verifier = Verifier::new(n, source).jobs(jobs);
    let reports: Vec<VerificationReport> = py
        .detach(|| match (claim, k) {
            (Claim::Theorem1, _) => verifier.theorem1().map(|r| vec![r]),
            (Claim::Theorem2, Some(k)) => verifier.theorem2(k).map(|r| vec![r]),
            (Claim::Theorem2, None) => verifier.theorem2_all(),
            (Claim::Corollary3, _) => verifier.corollary3().map(|r| vec![r]),
            (Claim::Lemma6, _) => verifier.lemma6().map(|r| vec![r]),
        })
        .map_err(py_err)?;
    let docs: Vec<_> = reports.iter().map(|r| r.to_json(true)).collect();
    Ok(serde_json::Value::Array(docs).to_string())
}

#[pymodule]
fn pynonham(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyGraph>()?;
    m.add_function(wrap_pyfunction!(permutation_number, m)?)?;
    m.add_function(wrap_pyfunction!(count_paths, m)?)?;
    m.add_function(wrap_pyfunction!(count_hamilton_paths, m)?)?;
    m.add_function(wrap_pyfunction!(count_hamilton_cycles, m)?)?;
    m.add_function(wrap_pyfunction!(is_hamiltonian, m)?)?;
    m.add_function(wrap_pyfunction!(is_maximally_nonhamiltonian, m)?)?;
    m.add_function(wrap_pyfunction!(bondy_chvatal_closure, m)?)?;
    m.add_function(wrap_pyfunction!(maximal_nonhamiltonian_completion, m)?)?;
    m.add_function(wrap_pyfunction!(check_lemma5, m)?)?;
    m.add_function(wrap_pyfunction!(theorem2_bound, m)?)?;
    m.add_function(wrap_pyfunction!(ore_bondy_max_size, m)?)?;
    m.add_function(wrap_pyfunction!(corollary3_value, m)?)?;
    m.add_function(wrap_pyfunction!(lemma6_bound, m)?)?;
    m.add_function(wrap_pyfunction!(xj_distribution, m)?)?;
    m.add_function(wrap_pyfunction!(moment_summary, m)?)?;
    m.add_function(wrap_pyfunction!(verify, m)?)?;
    Ok(())
}
