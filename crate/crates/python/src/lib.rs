//! Python bindings. Rationals go in as int, str ("p/q") or fractions.Fraction
//! and come back as "p/q" strings; structured results come back as dicts.

use pyo3::exceptions::{PyArithmeticError, PyValueError};
use pyo3::prelude::*;

use k3inv::exact::bigcomplex::DEFAULT_PRECISION;
use k3inv::exact::{fmt_rational, parse_rational, BigComplex, Rational};
use k3inv::{lattice, wire, Error};

fn to_py(e: Error) -> PyErr {
    match e {
        Error::PrecisionExhausted { .. } => PyArithmeticError::new_err(e.to_string()),
        _ => PyValueError::new_err(e.to_string()),
    }
}

fn rational(obj: &Bound<'_, PyAny>) -> PyResult<Rational> {
    let s = obj.str()?.to_string();
    parse_rational(&s).map_err(to_py)
}

fn complex(re: &Bound<'_, PyAny>, im: &Bound<'_, PyAny>, prec: usize) -> PyResult<BigComplex> {
    let s = format!("{},{}", re.str()?, im.str()?);
    BigComplex::parse(&s, prec).ok_or_else(|| PyValueError::new_err(format!("not a complex number: {s}")))
}

fn to_dict<'py>(py: Python<'py>, v: &serde_json::Value) -> PyResult<Bound<'py, PyAny>> {
    py.import("json")?.call_method1("loads", (v.to_string(),))
}

/// Inose surface with parameters (a, b).
#[pyclass(name = "InoseSurface", module = "k3inv")]
struct PyInose {
    a: Rational,
    b: Rational,
}

#[pymethods]
impl PyInose {
    #[new]
    fn new(a: &Bound<'_, PyAny>, b: &Bound<'_, PyAny>) -> PyResult<Self> {
        Ok(PyInose { a: rational(a)?, b: rational(b)? })
    }

    #[getter]
    fn a(&self) -> String {
        fmt_rational(&self.a)
    }

    #[getter]
    fn b(&self) -> String {
        fmt_rational(&self.b)
    }

    /// {"pi", "sigma", "j1", "j2"}
    fn invariants<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyAny>> {
        to_dict(py, &wire::invariants(&self.a, &self.b))
    }

    /// Fiber table of "theta2" or "psi2".
    fn fibers<'py>(&self, py: Python<'py>, which: &str) -> PyResult<Bound<'py, PyAny>> {
        to_dict(py, &wire::inose_fibers(which, &self.a, &self.b).map_err(to_py)?)
    }

    fn __repr__(&self) -> String {
        format!("InoseSurface(a={}, b={})", fmt_rational(&self.a), fmt_rational(&self.b))
    }
}

/// Pair of Legendre parameters (α, β) for the Kummer surface of E_α × E_β.
#[pyclass(name = "LegendrePair", module = "k3inv")]
struct PyLegendre {
    alpha: Rational,
    beta: Rational,
}

#[pymethods]
impl PyLegendre {
    #[new]
    fn new(alpha: &Bound<'_, PyAny>, beta: &Bound<'_, PyAny>) -> PyResult<Self> {
        let (alpha, beta) = (rational(alpha)?, rational(beta)?);
        k3inv::kummer::LegendrePair::new(alpha.clone(), beta.clone()).map_err(to_py)?;
        Ok(PyLegendre { alpha, beta })
    }

    fn upsilon_fibers<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyAny>> {
        to_dict(py, &wire::upsilon_fibers(&self.alpha, &self.beta).map_err(to_py)?)
    }

    /// Coefficient match with Ψ₂; returns (report, all certificates held).
    #[pyo3(signature = (verify_all = false))]
    fn match_inose<'py>(&self, py: Python<'py>, verify_all: bool) -> PyResult<(Bound<'py, PyAny>, bool)> {
        let (v, ok) = wire::match_report(&self.alpha, &self.beta, verify_all).map_err(to_py)?;
        Ok((to_dict(py, &v)?, ok))
    }

    fn __repr__(&self) -> String {
        format!("LegendrePair(alpha={}, beta={})", fmt_rational(&self.alpha), fmt_rational(&self.beta))
    }
}

#[pyclass(name = "Lattice", module = "k3inv")]
struct PyLattice {
    inner: lattice::Lattice,
}

#[pymethods]
impl PyLattice {
    /// A named lattice, e.g. "E8", "Kummer", "H".
    #[new]
    fn new(name: &str) -> PyResult<Self> {
        Ok(PyLattice { inner: lattice::named_lattice(name).map_err(to_py)? })
    }

    #[staticmethod]
    fn from_gram(name: &str, gram: Vec<Vec<i64>>) -> PyResult<Self> {
        Ok(PyLattice { inner: lattice::Lattice::new(name, gram).map_err(to_py)? })
    }

    #[staticmethod]
    fn names() -> Vec<&'static str> {
        lattice::NAMED_LATTICES.to_vec()
    }

    #[getter]
    fn name(&self) -> String {
        self.inner.name.clone()
    }

    #[getter]
    fn gram(&self) -> Vec<Vec<i64>> {
        self.inner.gram.clone()
    }

    #[getter]
    fn rank(&self) -> usize {
        self.inner.rank()
    }

    /// Determinant as a decimal string (it can exceed 64 bits).
    fn det(&self) -> String {
        self.inner.det().to_string()
    }

    /// (positive, negative, zero) eigenvalue counts.
    fn signature(&self) -> (usize, usize, usize) {
        self.inner.signature()
    }

    fn discriminant_form<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyAny>> {
        to_dict(py, &lattice::discriminant_form(&self.inner).map_err(to_py)?.to_json())
    }

    fn roots(&self) -> PyResult<Vec<Vec<i64>>> {
        lattice::roots(&self.inner).map_err(to_py)
    }

    fn __repr__(&self) -> String {
        format!("Lattice({:?}, rank={})", self.inner.name, self.inner.rank())
    }
}

/// J(τ) normalized so that J(i) = 1, as {"j": "re,im", ...}.
#[pyfunction]
#[pyo3(signature = (re, im, prec = DEFAULT_PRECISION))]
fn modular_j<'py>(py: Python<'py>, re: &Bound<'py, PyAny>, im: &Bound<'py, PyAny>, prec: usize) -> PyResult<Bound<'py, PyAny>> {
    let tau = complex(re, im, prec + 32)?;
    to_dict(py, &wire::modj(&tau, prec).map_err(to_py)?)
}

/// (σ, π) from a period point (τ, u), each given as (re, im).
#[pyfunction]
#[pyo3(signature = (tau, u, prec = DEFAULT_PRECISION))]
fn periods<'py>(
    py: Python<'py>,
    tau: (Bound<'py, PyAny>, Bound<'py, PyAny>),
    u: (Bound<'py, PyAny>, Bound<'py, PyAny>),
    prec: usize,
) -> PyResult<Bound<'py, PyAny>> {
    let t = complex(&tau.0, &tau.1, prec + 32)?;
    let w = complex(&u.0, &u.1, prec + 32)?;
    to_dict(py, &wire::periods(&t, &w, prec).map_err(to_py)?.0)
}

#[pyfunction]
fn reconcile(py: Python<'_>) -> PyResult<Bound<'_, PyAny>> {
    to_dict(py, &k3inv::reconcile::reconciliation_report().map_err(to_py)?.to_json())
}

/// Run the acceptance battery; `quick` shrinks the sample counts.
#[pyfunction]
#[pyo3(signature = (quick = true, seed = None))]
fn verify_suite(py: Python<'_>, quick: bool, seed: Option<u64>) -> PyResult<Bound<'_, PyAny>> {
    let mut opts = k3inv::suite::SuiteOptions::default();
    if let Some(s) = seed {
        opts.seed = s;
    }
    if quick {
        opts.invariant_samples = 20;
        opts.discriminant_samples = 5;
        opts.match_samples = 3;
        opts.match_height = 12;
        opts.upsilon_samples = 4;
        opts.upsilon_height = 50;
    }
    let report = py.detach(|| k3inv::suite::run_suite(&opts));
    to_dict(py, &report.to_json())
}

#[pymodule]
#[pyo3(name = "k3inv")]
fn k3inv_module(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyInose>()?;
    m.add_class::<PyLegendre>()?;
    m.add_class::<PyLattice>()?;
    m.add_function(wrap_pyfunction!(modular_j, m)?)?;
    m.add_function(wrap_pyfunction!(periods, m)?)?;
    m.add_function(wrap_pyfunction!(reconcile, m)?)?;
    m.add_function(wrap_pyfunction!(verify_suite, m)?)?;
    Ok(())
}
