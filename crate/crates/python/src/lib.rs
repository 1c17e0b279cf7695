//! Python bindings: the Graph value type, the named constructions, family
//! invariants, minor testing with witnesses, spectral certificates, and the
//! exhaustive searches.
//!
//! Build with `cargo build -p minorspex-py --release`; the smoke test in
//! python/ loads the produced cdylib directly.

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use pyo3::types::PyDict;

use minorspex_core::invariants::{self, FamilySpec};
use minorspex_core::search::{self, SearchMode, SearchQuery, VerifyParams};
use minorspex_core::{canon, constructions as cons, decompose, graph6, minor, spectral};
use minorspex_core::{Graph as CoreGraph, VertexSet};

fn err(e: minorspex_core::Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

/// Undirected simple graph on at most 64 vertices.
#[pyclass(name = "Graph", from_py_object)]
#[derive(Clone)]
struct PyGraph {
    inner: CoreGraph,
}

impl From<CoreGraph> for PyGraph {
    fn from(inner: CoreGraph) -> Self {
        PyGraph { inner }
    }
}

#[pymethods]
impl PyGraph {
    /// Graph(n, edges): builds from an edge list.
    #[new]
    #[pyo3(signature = (n, edges=Vec::new()))]
    fn new(n: usize, edges: Vec<(usize, usize)>) -> PyResult<Self> {
        Ok(CoreGraph::from_edges(n, &edges).map_err(err)?.into())
    }

    #[staticmethod]
    fn from_graph6(text: &str) -> PyResult<Self> {
        Ok(graph6::from_graph6(text).map_err(err)?.into())
    }

    fn to_graph6(&self) -> String {
        graph6::to_graph6(&self.inner)
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

    fn degree(&self, v: usize) -> usize {
        self.inner.degree(v)
    }

    fn has_edge(&self, u: usize, v: usize) -> bool {
        self.inner.has_edge(u, v)
    }

    fn complement(&self) -> Self {
        self.inner.complement().into()
    }

    fn join(&self, other: &PyGraph) -> PyResult<Self> {
        Ok(self.inner.join(&other.inner).map_err(err)?.into())
    }

    fn with_edge(&self, u: usize, v: usize) -> PyResult<Self> {
        Ok(self.inner.with_edge(u, v).map_err(err)?.into())
    }

    fn delete_vertex(&self, v: usize) -> PyResult<Self> {
        Ok(self.inner.delete_vertex(v).map_err(err)?.into())
    }

    fn delete_edge(&self, u: usize, v: usize) -> PyResult<Self> {
        Ok(self.inner.delete_edge(u, v).map_err(err)?.into())
    }

    fn contract_edge(&self, u: usize, v: usize) -> PyResult<Self> {
        Ok(self.inner.contract_edge(u, v).map_err(err)?.into())
    }

    fn subdivide_edge(&self, u: usize, v: usize, count: usize) -> PyResult<Self> {
        Ok(self.inner.subdivide_edge(u, v, count).map_err(err)?.into())
    }

    fn induced(&self, vertices: Vec<usize>) -> PyResult<Self> {
        let set: VertexSet = vertices.into_iter().collect();
        Ok(self.inner.induced(&set).map_err(err)?.into())
    }

    fn is_connected(&self) -> bool {
        self.inner.is_connected()
    }

    fn components(&self) -> Vec<Vec<usize>> {
        self.inner
            .components()
            .iter()
            .map(VertexSet::to_vec)
            .collect()
    }

    fn dominating_vertices(&self) -> Vec<usize> {
        self.inner.dominating_vertices().to_vec()
    }

    fn canonical_form(&self) -> String {
        String::from_utf8(canon::canonical_form(&self.inner)).expect("graph6 is ascii")
    }

    fn is_isomorphic(&self, other: &PyGraph) -> bool {
        canon::is_isomorphic(&self.inner, &other.inner)
    }

    fn __repr__(&self) -> String {
        format!(
            "Graph(n={}, edges={}, graph6={:?})",
            self.inner.n(),
            self.inner.edge_count(),
            graph6::to_graph6(&self.inner)
        )
    }

    fn __eq__(&self, other: &PyGraph) -> bool {
        self.inner == other.inner
    }
}

fn graphs_out(graphs: Vec<CoreGraph>) -> Vec<PyGraph> {
    graphs.into_iter().map(Into::into).collect()
}

fn family_from(members: Vec<PyGraph>) -> PyResult<FamilySpec> {
    FamilySpec::new(members.into_iter().map(|g| g.inner).collect()).map_err(err)
}

// --- constructions ---

#[pyfunction]
fn complete(n: usize) -> PyResult<PyGraph> {
    Ok(cons::complete(n).map_err(err)?.into())
}

#[pyfunction]
fn empty(n: usize) -> PyResult<PyGraph> {
    Ok(CoreGraph::empty(n).map_err(err)?.into())
}

#[pyfunction]
fn path(n: usize) -> PyResult<PyGraph> {
    Ok(cons::path(n).map_err(err)?.into())
}

#[pyfunction]
fn cycle(n: usize) -> PyResult<PyGraph> {
    Ok(cons::cycle(n).map_err(err)?.into())
}

#[pyfunction]
fn petersen() -> PyGraph {
    cons::petersen().into()
}

#[pyfunction]
fn book(gamma: usize, t: usize) -> PyResult<PyGraph> {
    Ok(cons::book(gamma, t).map_err(err)?.into())
}

#[pyfunction]
fn book_with_matching(s: usize, t: usize, k: usize) -> PyResult<PyGraph> {
    Ok(cons::book_with_matching(s, t, k).map_err(err)?.into())
}

#[pyfunction]
fn complete_multipartite(parts: Vec<usize>) -> PyResult<PyGraph> {
    Ok(cons::complete_multipartite_parts(&parts)
        .map_err(err)?
        .into())
}

#[pyfunction]
fn star_forest(s1: usize, s2: usize) -> PyResult<PyGraph> {
    Ok(cons::star_forest(s1, s2).map_err(err)?.into())
}

#[pyfunction]
fn subdivided_complement_star_forest(s1: usize, s2: usize) -> PyResult<PyGraph> {
    Ok(cons::subdivided_complement_star_forest(s1, s2)
        .map_err(err)?
        .into())
}

#[pyfunction]
fn subdivided_clique(t: usize, ell: usize) -> PyResult<PyGraph> {
    Ok(cons::subdivided_clique(t, ell).map_err(err)?.into())
}

#[pyfunction]
fn wheel(k: usize) -> PyResult<PyGraph> {
    Ok(cons::wheel(k).map_err(err)?.into())
}

#[pyfunction]
fn flower(lengths: Vec<usize>) -> PyResult<PyGraph> {
    Ok(cons::flower(&lengths).map_err(err)?.into())
}

#[pyfunction]
fn g_triangle(n: usize, parts: Vec<usize>) -> PyResult<PyGraph> {
    let spec = cons::MultipartiteSpec::new(parts).map_err(err)?;
    Ok(cons::g_triangle(n, &spec).map_err(err)?.into())
}

#[pyfunction]
#[pyo3(signature = (n, s1, gamma, limit=100))]
fn g_down_members(n: usize, s1: usize, gamma: usize, limit: usize) -> PyResult<Vec<PyGraph>> {
    Ok(graphs_out(
        cons::g_down_members(n, s1, gamma, limit).map_err(err)?,
    ))
}

// --- invariants ---

#[pyfunction]
fn independence_number(g: &PyGraph) -> usize {
    invariants::independence_number(&g.inner)
}

#[pyfunction]
fn clique_number(g: &PyGraph) -> usize {
    invariants::clique_number(&g.inner)
}

#[pyfunction]
fn gamma(h: &PyGraph) -> i64 {
    invariants::gamma(&h.inner)
}

#[pyfunction]
fn family_invariants<'py>(py: Python<'py>, members: Vec<PyGraph>) -> PyResult<Bound<'py, PyDict>> {
    let fam = family_from(members)?;
    let inv = invariants::family_invariants(&fam);
    let out = PyDict::new(py);
    out.set_item("gamma_family", inv.gamma_family)?;
    out.set_item("alpha_family", inv.alpha_family)?;
    out.set_item("c_family", inv.c_family)?;
    out.set_item("minimal_ids", inv.minimal_ids)?;
    Ok(out)
}

#[pyfunction]
fn induced_family(h: &PyGraph, s: usize) -> Vec<PyGraph> {
    graphs_out(invariants::induced_family(&h.inner, s))
}

#[pyfunction]
fn irreducible_family(h: &PyGraph, s: usize) -> Vec<PyGraph> {
    graphs_out(invariants::irreducible_family(&h.inner, s))
}

#[pyfunction]
fn gamma_union_family(members: Vec<PyGraph>) -> PyResult<Vec<PyGraph>> {
    let fam = family_from(members)?;
    Ok(graphs_out(invariants::gamma_union_family(&fam)))
}

#[pyfunction]
fn is_connected_family(members: Vec<PyGraph>) -> bool {
    let graphs: Vec<CoreGraph> = members.into_iter().map(|g| g.inner).collect();
    invariants::is_connected_family(&graphs)
}

// --- minor ---

#[pyfunction]
fn has_minor(g: &PyGraph, h: &PyGraph) -> bool {
    minor::has_minor(&g.inner, &h.inner)
}

#[pyfunction]
fn find_model(g: &PyGraph, h: &PyGraph) -> Option<Vec<Vec<usize>>> {
    minor::find_model(&g.inner, &h.inner)
        .map(|m| m.branch_sets.iter().map(VertexSet::to_vec).collect())
}

#[pyfunction]
fn minimal_model(g: &PyGraph, h: &PyGraph) -> Option<Vec<Vec<usize>>> {
    minor::minimal_model(&g.inner, &h.inner)
        .map(|m| m.branch_sets.iter().map(VertexSet::to_vec).collect())
}

#[pyfunction]
fn verify_model(g: &PyGraph, h: &PyGraph, branch_sets: Vec<Vec<usize>>) -> bool {
    let model = minor::MinorModel {
        branch_sets: branch_sets
            .into_iter()
            .map(|s| s.into_iter().collect())
            .collect(),
    };
    minor::verify_model(&g.inner, &h.inner, &model)
}

#[pyfunction]
fn is_family_minor_free(g: &PyGraph, members: Vec<PyGraph>) -> PyResult<bool> {
    let fam = family_from(members)?;
    Ok(minor::is_family_minor_free(&g.inner, &fam))
}

#[pyfunction]
fn is_saturated(g: &PyGraph, members: Vec<PyGraph>) -> PyResult<bool> {
    let fam = family_from(members)?;
    minor::is_saturated(&g.inner, &fam).map_err(err)
}

#[pyfunction]
fn has_minor_oracle(g: &PyGraph, h: &PyGraph) -> PyResult<bool> {
    minor::has_minor_oracle(&g.inner, &h.inner).map_err(err)
}

// --- spectral ---

#[pyfunction]
#[pyo3(signature = (g, tol=spectral::DEFAULT_TOL))]
fn spectral_radius<'py>(py: Python<'py>, g: &PyGraph, tol: f64) -> PyResult<Bound<'py, PyDict>> {
    let cert = spectral::spectral_radius(&g.inner, tol).map_err(err)?;
    let out = PyDict::new(py);
    out.set_item("rho", cert.rho)?;
    out.set_item("perron", cert.perron)?;
    out.set_item("iterations", cert.iterations)?;
    out.set_item("residual", cert.residual)?;
    Ok(out)
}

#[pyfunction]
fn book_rho(gamma: usize, n: usize) -> f64 {
    spectral::book_rho(gamma, n)
}

fn bound_dict<'py>(py: Python<'py>, rep: &spectral::BoundReport) -> PyResult<Bound<'py, PyDict>> {
    let out = PyDict::new(py);
    out.set_item("name", rep.name.clone())?;
    out.set_item("lhs", rep.lhs)?;
    out.set_item("rhs", rep.rhs)?;
    out.set_item("satisfied", rep.satisfied)?;
    out.set_item("slack", rep.slack)?;
    Ok(out)
}

#[pyfunction]
fn quadratic_upper_bound_check<'py>(
    py: Python<'py>,
    rho: f64,
    gamma: usize,
    alpha: usize,
    n: usize,
) -> PyResult<Bound<'py, PyDict>> {
    bound_dict(
        py,
        &spectral::quadratic_upper_bound_check(rho, gamma, alpha, n),
    )
}

#[pyfunction]
fn regular_bound_check<'py>(
    py: Python<'py>,
    rho: f64,
    s1: usize,
    gamma: usize,
    n: usize,
) -> PyResult<Bound<'py, PyDict>> {
    bound_dict(py, &spectral::regular_bound_check(rho, s1, gamma, n))
}

#[pyfunction]
fn edge_density_bound(h: &PyGraph) -> PyResult<u128> {
    spectral::edge_density_bound(&h.inner).map_err(err)
}

// --- decompose ---

#[pyfunction]
fn maximal_linear_paths(g: &PyGraph) -> PyResult<Vec<Vec<usize>>> {
    Ok(decompose::maximal_linear_paths(&g.inner)
        .map_err(err)?
        .paths)
}

#[pyfunction]
fn longest_maximal_linear_path(g: &PyGraph) -> PyResult<Vec<usize>> {
    decompose::longest_maximal_linear_path(&g.inner).map_err(err)
}

// --- search ---

fn report_dict<'py>(
    py: Python<'py>,
    report: &search::SearchReport,
) -> PyResult<Bound<'py, PyDict>> {
    let out = PyDict::new(py);
    let query = PyDict::new(py);
    query.set_item("n", report.query.n)?;
    query.set_item("family", report.query.family.clone())?;
    query.set_item("mode", report.query.mode)?;
    query.set_item("epsilon", report.query.epsilon)?;
    out.set_item("query", query)?;
    match report.value {
        search::SearchValue::Edges(e) => out.set_item("value", e)?,
        search::SearchValue::Rho(r) => out.set_item("value", r)?,
    }
    out.set_item("extremal", report.extremal.clone())?;
    out.set_item("total_minor_free", report.total_minor_free)?;
    match &report.predicted {
        Some(p) => {
            let pd = PyDict::new(py);
            pd.set_item("graphs", p.graphs.clone())?;
            pd.set_item("matches", p.matches)?;
            out.set_item("predicted", pd)?;
        }
        None => out.set_item("predicted", py.None())?,
    }
    out.set_item("elapsed_secs", report.elapsed_secs)?;
    Ok(out)
}

fn run_search<'py>(
    py: Python<'py>,
    n: usize,
    members: Vec<PyGraph>,
    mode: SearchMode,
    epsilon: f64,
    force: bool,
) -> PyResult<Bound<'py, PyDict>> {
    let fam = family_from(members)?;
    let mut q = SearchQuery::new(n, fam, mode);
    q.epsilon = epsilon;
    q.allow_large = force;
    let report = match mode {
        SearchMode::Spex | SearchMode::SpexConnected => search::spex_search(&q),
        SearchMode::Ex | SearchMode::ExConnected => search::ex_search(&q),
        SearchMode::SatList => search::sat_list(&q),
    }
    .map_err(err)?;
    report_dict(py, &report)
}

#[pyfunction]
#[pyo3(signature = (n, members, connected=false, epsilon=spectral::RHO_EPS, force=false))]
fn spex<'py>(
    py: Python<'py>,
    n: usize,
    members: Vec<PyGraph>,
    connected: bool,
    epsilon: f64,
    force: bool,
) -> PyResult<Bound<'py, PyDict>> {
    let mode = if connected {
        SearchMode::SpexConnected
    } else {
        SearchMode::Spex
    };
    run_search(py, n, members, mode, epsilon, force)
}

#[pyfunction]
#[pyo3(signature = (n, members, connected=false, force=false))]
fn ex<'py>(
    py: Python<'py>,
    n: usize,
    members: Vec<PyGraph>,
    connected: bool,
    force: bool,
) -> PyResult<Bound<'py, PyDict>> {
    let mode = if connected {
        SearchMode::ExConnected
    } else {
        SearchMode::Ex
    };
    run_search(py, n, members, mode, spectral::RHO_EPS, force)
}

#[pyfunction]
#[pyo3(signature = (n, members, force=false))]
fn sat<'py>(
    py: Python<'py>,
    n: usize,
    members: Vec<PyGraph>,
    force: bool,
) -> PyResult<Bound<'py, PyDict>> {
    run_search(
        py,
        n,
        members,
        SearchMode::SatList,
        spectral::RHO_EPS,
        force,
    )
}

#[pyfunction]
#[pyo3(signature = (n, members, connected=false))]
fn enumerate_minor_free(
    n: usize,
    members: Vec<PyGraph>,
    connected: bool,
) -> PyResult<Vec<PyGraph>> {
    let fam = family_from(members)?;
    Ok(graphs_out(
        search::enumerate_minor_free(n, &fam, connected).map_err(err)?,
    ))
}

#[pyfunction]
#[pyo3(signature = (theorem, n, a=None, k=None, s1=None, r=None, t=None, gamma=None, lengths=None, parts=None, force=false))]
#[allow(clippy::too_many_arguments)]
fn verify_theorem<'py>(
    py: Python<'py>,
    theorem: &str,
    n: usize,
    a: Option<usize>,
    k: Option<usize>,
    s1: Option<usize>,
    r: Option<usize>,
    t: Option<usize>,
    gamma: Option<usize>,
    lengths: Option<Vec<usize>>,
    parts: Option<Vec<usize>>,
    force: bool,
) -> PyResult<Bound<'py, PyDict>> {
    let params = VerifyParams {
        n,
        a,
        k,
        s1,
        r,
        t,
        gamma,
        lengths,
        parts,
        allow_large: force,
    };
    let rep = search::verify_theorem(theorem, &params).map_err(err)?;
    let out = PyDict::new(py);
    out.set_item("theorem", rep.theorem.clone())?;
    out.set_item("n", rep.n)?;
    out.set_item("assertions_passed", rep.assertions_passed)?;
    out.set_item("agreement", rep.agreement)?;
    out.set_item("predicted", rep.predicted.clone())?;
    out.set_item("detail", rep.detail.clone())?;
    match &rep.report {
        Some(r) => out.set_item("report", report_dict(py, r)?)?,
        None => out.set_item("report", py.None())?,
    }
    Ok(out)
}

#[pymodule]
fn minorspex_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyGraph>()?;
    m.add_function(wrap_pyfunction!(complete, m)?)?;
    m.add_function(wrap_pyfunction!(empty, m)?)?;
    m.add_function(wrap_pyfunction!(path, m)?)?;
    m.add_function(wrap_pyfunction!(cycle, m)?)?;
    m.add_function(wrap_pyfunction!(petersen, m)?)?;
    m.add_function(wrap_pyfunction!(book, m)?)?;
    m.add_function(wrap_pyfunction!(book_with_matching, m)?)?;
    m.add_function(wrap_pyfunction!(complete_multipartite, m)?)?;
    m.add_function(wrap_pyfunction!(star_forest, m)?)?;
    m.add_function(wrap_pyfunction!(subdivided_complement_star_forest, m)?)?;
    m.add_function(wrap_pyfunction!(subdivided_clique, m)?)?;
    m.add_function(wrap_pyfunction!(wheel, m)?)?;
    m.add_function(wrap_pyfunction!(flower, m)?)?;
    m.add_function(wrap_pyfunction!(g_triangle, m)?)?;
    m.add_function(wrap_pyfunction!(g_down_members, m)?)?;
    m.add_function(wrap_pyfunction!(independence_number, m)?)?;
    m.add_function(wrap_pyfunction!(clique_number, m)?)?;
    m.add_function(wrap_pyfunction!(gamma, m)?)?;
    m.add_function(wrap_pyfunction!(family_invariants, m)?)?;
    m.add_function(wrap_pyfunction!(induced_family, m)?)?;
    m.add_function(wrap_pyfunction!(irreducible_family, m)?)?;
    m.add_function(wrap_pyfunction!(gamma_union_family, m)?)?;
    m.add_function(wrap_pyfunction!(is_connected_family, m)?)?;
    m.add_function(wrap_pyfunction!(has_minor, m)?)?;
    m.add_function(wrap_pyfunction!(find_model, m)?)?;
    m.add_function(wrap_pyfunction!(minimal_model, m)?)?;
    m.add_function(wrap_pyfunction!(verify_model, m)?)?;
    m.add_function(wrap_pyfunction!(is_family_minor_free, m)?)?;
    m.add_function(wrap_pyfunction!(is_saturated, m)?)?;
    m.add_function(wrap_pyfunction!(has_minor_oracle, m)?)?;
    m.add_function(wrap_pyfunction!(spectral_radius, m)?)?;
    m.add_function(wrap_pyfunction!(book_rho, m)?)?;
    m.add_function(wrap_pyfunction!(quadratic_upper_bound_check, m)?)?;
    m.add_function(wrap_pyfunction!(regular_bound_check, m)?)?;
    m.add_function(wrap_pyfunction!(edge_density_bound, m)?)?;
    m.add_function(wrap_pyfunction!(maximal_linear_paths, m)?)?;
    m.add_function(wrap_pyfunction!(longest_maximal_linear_path, m)?)?;
    m.add_function(wrap_pyfunction!(spex, m)?)?;
    m.add_function(wrap_pyfunction!(ex, m)?)?;
    m.add_function(wrap_pyfunction!(sat, m)?)?;
    m.add_function(wrap_pyfunction!(enumerate_minor_free, m)?)?;
    m.add_function(wrap_pyfunction!(verify_theorem, m)?)?;
    Ok(())
}
