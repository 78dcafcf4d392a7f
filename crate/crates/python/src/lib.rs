//! Python bindings for the cycle-based synthesis library.

use std::time::Duration;

use cs::blocks::{synthesize_block, BuildingBlockKind};
use cs::circuit::{circuit_cost, mct_cost, peephole_simplify, simulate, worst_case_bound};
use cs::io::{gen_hwb, gen_random_perm, parse_circuit, parse_spec, serialize_circuit, serialize_spec, Rotation};
use cs::perm::{compose_cycles, disjoint_cycles, distance_metric, nop_metric, Cycle};
use cs::pipeline::{
    classify, preprocess_fix_special, schedule_for, synthesize_hybrid_with, synthesize_kcycle_with, synthesize_mmd_with,
    RouterConfig, SynthOptions, SynthesisReport,
};
use cs::{Error, Parity};
use pyo3::exceptions::{PyRuntimeError, PyTimeoutError, PyValueError};
use pyo3::prelude::*;
use pyo3::types::PyDict;

fn err(e: Error) -> PyErr {
    match e {
        Error::Timeout(_) => PyTimeoutError::new_err(e.to_string()),
        Error::Unreachable(_) | Error::SimulationCapacity { .. } => PyRuntimeError::new_err(e.to_string()),
        _ => PyValueError::new_err(e.to_string()),
    }
}

fn cycles_of(lists: Vec<Vec<u32>>) -> PyResult<Vec<Cycle>> {
    lists.into_iter().map(|c| Cycle::new(c).map_err(err)).collect()
}

/// A reversible function on n-bit words, given by its truth table.
#[pyclass(module = "cyclesynth", frozen, eq, skip_from_py_object)]
#[derive(Clone, PartialEq)]
struct Permutation(cs::Permutation);

#[pymethods]
impl Permutation {
    #[new]
    fn new(n: u32, table: Vec<u32>) -> PyResult<Self> {
        cs::Permutation::new(n, table).map(Self).map_err(err)
    }

    #[staticmethod]
    fn identity(n: u32) -> PyResult<Self> {
        cs::Permutation::identity(n).map(Self).map_err(err)
    }

    /// Composes cycles left to right; the first cycle acts first.
    #[staticmethod]
    fn from_cycles(cycles: Vec<Vec<u32>>, n: u32) -> PyResult<Self> {
        compose_cycles(&cycles_of(cycles)?, n).map(Self).map_err(err)
    }

    #[getter]
    fn width(&self) -> u32 {
        self.0.width()
    }

    #[getter]
    fn table(&self) -> Vec<u32> {
        self.0.table().to_vec()
    }

    fn __len__(&self) -> usize {
        self.0.size()
    }

    fn __call__(&self, x: u32) -> PyResult<u32> {
        if (x as usize) < self.0.size() {
            Ok(self.0.apply(x))
        } else {
            Err(PyValueError::new_err(format!("{x} is out of range")))
        }
    }

    fn inverse(&self) -> Self {
        Self(self.0.inverse())
    }

    /// `self` followed by `other`.
    fn then(&self, other: &Permutation) -> PyResult<Self> {
        self.0.then(&other.0).map(Self).map_err(err)
    }

    fn is_identity(&self) -> bool {
        self.0.is_identity()
    }

    fn parity(&self) -> &'static str {
        match self.0.parity() {
            Parity::Even => "even",
            Parity::Odd => "odd",
        }
    }

    fn cycles(&self) -> Vec<Vec<u32>> {
        disjoint_cycles(&self.0).iter().map(|c| c.elements().to_vec()).collect()
    }

    fn distance(&self) -> f64 {
        distance_metric(&self.0).value()
    }

    fn nop(&self) -> usize {
        nop_metric(&self.0)
    }

    fn category(&self) -> u8 {
        classify(&self.0, &RouterConfig::default()).number()
    }

    fn to_spec(&self) -> String {
        serialize_spec(&self.0)
    }

    #[staticmethod]
    fn from_spec(text: &str) -> PyResult<Self> {
        parse_spec(text).map(Self).map_err(err)
    }

    fn __repr__(&self) -> String {
        format!("Permutation(n={}, moved={})", self.0.width(), self.0.moved_count())
    }
}

/// A cascade of multiple-control Toffoli gates. Gates are `(controls, target)`.
#[pyclass(module = "cyclesynth", eq, skip_from_py_object)]
#[derive(Clone, PartialEq)]
struct Circuit(cs::Circuit);

#[pymethods]
impl Circuit {
    #[new]
    #[pyo3(signature = (n, gates = Vec::new()))]
    fn new(n: u32, gates: Vec<(Vec<u32>, u32)>) -> PyResult<Self> {
        let gates = gates
            .iter()
            .map(|(c, t)| cs::Gate::new(c, *t))
            .collect::<Result<Vec<_>, _>>()
            .map_err(err)?;
        cs::Circuit::from_gates(n, gates).map(Self).map_err(err)
    }

    #[getter]
    fn width(&self) -> u32 {
        self.0.width()
    }

    #[getter]
    fn gates(&self) -> Vec<(Vec<u32>, u32)> {
        self.0.gates().iter().map(|g| (g.controls().collect(), g.target())).collect()
    }

    fn __len__(&self) -> usize {
        self.0.len()
    }

    fn push(&mut self, controls: Vec<u32>, target: u32) -> PyResult<()> {
        let g = cs::Gate::new(&controls, target).map_err(err)?;
        self.0.push(g).map_err(err)
    }

    fn cost(&self) -> u64 {
        circuit_cost(&self.0)
    }

    fn simulate(&self) -> PyResult<Permutation> {
        simulate(&self.0).map(Permutation).map_err(err)
    }

    fn reversed(&self) -> Self {
        Self(self.0.reversed())
    }

    fn __add__(&self, other: &Circuit) -> PyResult<Self> {
        self.0.concat(&other.0).map(Self).map_err(err)
    }

    fn simplify(&self) -> Self {
        Self(peephole_simplify(&self.0))
    }

    fn to_text(&self) -> String {
        serialize_circuit(&self.0)
    }

    #[staticmethod]
    fn from_text(text: &str) -> PyResult<Self> {
        parse_circuit(text).map(Self).map_err(err)
    }

    fn __repr__(&self) -> String {
        format!("Circuit(n={}, gates={}, cost={})", self.0.width(), self.0.len(), circuit_cost(&self.0))
    }
}

fn report_dict<'py>(py: Python<'py>, r: &SynthesisReport) -> PyResult<Bound<'py, PyDict>> {
    let d = PyDict::new(py);
    d.set_item("method", r.method.to_string())?;
    d.set_item("n", r.n)?;
    d.set_item("gates", r.gates)?;
    d.set_item("cost", r.cost)?;
    d.set_item("estimate", r.estimate)?;
    d.set_item("distance", r.distance.value())?;
    d.set_item("nop", r.nop)?;
    d.set_item("category", r.category.number())?;
    d.set_item("verified", r.verified)?;
    d.set_item("seconds", r.seconds)?;
    d.set_item("notes", r.notes.clone())?;
    Ok(d)
}

/// Synthesizes `perm` with `method` in `kcycle`, `mmd` or `hybrid`.
/// Returns the circuit and a report dict.
#[pyfunction]
#[pyo3(signature = (perm, method = "hybrid", verify = true, timeout = None))]
fn synthesize<'py>(
    py: Python<'py>,
    perm: &Permutation,
    method: &str,
    verify: bool,
    timeout: Option<f64>,
) -> PyResult<(Circuit, Bound<'py, PyDict>)> {
    let timeout = match timeout {
        Some(t) if !(t >= 0.0 && t.is_finite()) => return Err(PyValueError::new_err(format!("bad timeout {t}"))),
        t => t.map(Duration::from_secs_f64),
    };
    let opts = SynthOptions { verify, timeout, ..Default::default() };
    let p = perm.0.clone();
    let result = py.detach(|| match method {
        "kcycle" => Some(synthesize_kcycle_with(&p, &opts)),
        "mmd" => Some(synthesize_mmd_with(&p, &opts)),
        "hybrid" => Some(synthesize_hybrid_with(&p, &RouterConfig::default(), &opts)),
        _ => None,
    });
    let (c, r) = result.ok_or_else(|| PyValueError::new_err(format!("unknown method {method:?}")))?.map_err(err)?;
    Ok((Circuit(c), report_dict(py, &r)?))
}

/// Names of the building-block kinds.
#[pyfunction]
fn block_kinds() -> Vec<String> {
    BuildingBlockKind::ALL.iter().map(|k| k.to_string()).collect()
}

/// Circuit realizing one building block on the given operands.
#[pyfunction]
fn building_block(kind: &str, operands: Vec<u32>, n: u32) -> PyResult<Circuit> {
    let k = BuildingBlockKind::ALL
        .into_iter()
        .find(|k| k.to_string() == kind)
        .ok_or_else(|| PyValueError::new_err(format!("unknown block kind {kind:?}")))?;
    synthesize_block(k, &operands, n).map(Circuit).map_err(err)
}

/// Task list for the part of `perm` left after the special rows are fixed:
/// `(kind, cycles)` pairs in schedule order.
#[pyfunction]
fn schedule(perm: &Permutation) -> PyResult<Vec<(String, Vec<Vec<u32>>)>> {
    let (_, rest) = preprocess_fix_special(&perm.0);
    let s = schedule_for(&rest, SynthOptions::default().small_cutoff).map_err(err)?;
    Ok(s.tasks
        .iter()
        .map(|t| (t.kind.to_string(), t.cycles.iter().map(|c| c.elements().to_vec()).collect()))
        .collect())
}

#[pyfunction]
#[pyo3(signature = (n, rotation = "left"))]
fn hwb(n: u32, rotation: &str) -> PyResult<Permutation> {
    let dir = match rotation {
        "left" => Rotation::Left,
        "right" => Rotation::Right,
        _ => return Err(PyValueError::new_err(format!("unknown rotation {rotation:?}"))),
    };
    gen_hwb(n, dir).map(Permutation).map_err(err)
}

#[pyfunction]
#[pyo3(signature = (n, seed, parity = None))]
fn random_permutation(n: u32, seed: u64, parity: Option<&str>) -> PyResult<Permutation> {
    let parity = match parity {
        None => None,
        Some("even") => Some(Parity::Even),
        Some("odd") => Some(Parity::Odd),
        Some(other) => return Err(PyValueError::new_err(format!("unknown parity {other:?}"))),
    };
    gen_random_perm(n, seed, parity).map(Permutation).map_err(err)
}

/// Quantum cost of an MCT gate with `m` controls on `n` lines.
#[pyfunction(name = "mct_cost")]
fn py_mct_cost(m: u32, n: u32) -> PyResult<u64> {
    mct_cost(m, n).map_err(err)
}

#[pyfunction(name = "worst_case_bound")]
fn py_worst_case_bound(n: u32) -> u64 {
    worst_case_bound(n)
}

#[pymodule]
fn cyclesynth(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<Permutation>()?;
    m.add_class::<Circuit>()?;
    m.add_function(wrap_pyfunction!(synthesize, m)?)?;
    m.add_function(wrap_pyfunction!(block_kinds, m)?)?;
    m.add_function(wrap_pyfunction!(building_block, m)?)?;
    m.add_function(wrap_pyfunction!(schedule, m)?)?;
    m.add_function(wrap_pyfunction!(hwb, m)?)?;
    m.add_function(wrap_pyfunction!(random_permutation, m)?)?;
    m.add_function(wrap_pyfunction!(py_mct_cost, m)?)?;
    m.add_function(wrap_pyfunction!(py_worst_case_bound, m)?)?;
    Ok(())
}
