//! Python bindings: words are passed as strings over `0`, `1`, `2`; structured
//! results come back as plain dicts.

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

use sepwords::constructions::{verify_witness, witness_pair, Assembly};
use sepwords::lang::{build_g_k, build_h_k, build_l_k};
use sepwords::sep::{lsep_lower_check, no_separator_up_to};
use sepwords::{Dfa, LangHandle, SearchBudget, Word};

fn err(e: sepwords::Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn word(text: &str) -> PyResult<Word> {
    let k = if text.contains('2') { 3 } else { 2 };
    Word::parse(text, k).map_err(err)
}

fn json_to_py<'py>(py: Python<'py>, value: &serde_json::Value) -> PyResult<Bound<'py, PyAny>> {
    py.import("json")?.call_method1("loads", (value.to_string(),))
}

fn budget(max_states: usize, max_nodes: u64) -> SearchBudget {
    SearchBudget::default().with_max_states(max_states).with_max_nodes(max_nodes)
}

#[pyclass(name = "Dfa", frozen)]
struct PyDfa {
    inner: Dfa,
}

#[pymethods]
impl PyDfa {
    /// Parses the `dfa k n` text format.
    #[staticmethod]
    fn from_text(text: &str) -> PyResult<Self> {
        Ok(PyDfa {
            inner: Dfa::parse_text(text).map_err(err)?,
        })
    }

    #[new]
    fn new(alphabet_size: u8, table: Vec<u32>, accepting: Vec<bool>) -> PyResult<Self> {
        Ok(PyDfa {
            inner: Dfa::new(alphabet_size, table, accepting).map_err(err)?,
        })
    }

    fn to_text(&self) -> String {
        self.inner.to_text()
    }

    #[getter]
    fn state_count(&self) -> usize {
        self.inner.state_count()
    }

    #[getter]
    fn alphabet_size(&self) -> u8 {
        self.inner.alphabet_size()
    }

    fn accepts(&self, w: &str) -> PyResult<bool> {
        let w = Word::parse(w, self.inner.alphabet_size()).map_err(err)?;
        self.inner.accepts(&w).map_err(err)
    }

    fn run(&self, q: usize, w: &str) -> PyResult<usize> {
        let w = Word::parse(w, self.inner.alphabet_size()).map_err(err)?;
        self.inner.run(q, &w).map_err(err)
    }

    fn minimize(&self) -> Self {
        PyDfa {
            inner: self.inner.minimize(),
        }
    }

    fn reverse(&self) -> Self {
        PyDfa {
            inner: self.inner.reverse(),
        }
    }

    fn separates(&self, w: &str, x: &str) -> PyResult<bool> {
        Ok(sepwords::sep::check_separates(&self.inner, &word(w)?, &word(x)?))
    }

    fn __repr__(&self) -> String {
        format!(
            "Dfa(alphabet_size={}, state_count={})",
            self.inner.alphabet_size(),
            self.inner.state_count()
        )
    }
}

#[pyclass(name = "Lang", frozen)]
struct PyLang {
    inner: LangHandle,
}

#[pymethods]
impl PyLang {
    /// `name` is one of `L_k`, `G_k`, `H_k`.
    #[staticmethod]
    fn build(name: &str, k: usize) -> PyResult<Self> {
        let inner = match name {
            "L_k" => build_l_k(k).map_err(err)?.1,
            "G_k" => build_g_k(k).map_err(err)?,
            "H_k" => build_h_k(k).map_err(err)?,
            other => return Err(PyValueError::new_err(format!("unknown language {other}"))),
        };
        Ok(PyLang { inner })
    }

    #[staticmethod]
    fn from_text(text: &str) -> PyResult<Self> {
        Ok(PyLang {
            inner: LangHandle::parse_text(text).map_err(err)?,
        })
    }

    fn contains(&self, w: &str) -> PyResult<bool> {
        let w = Word::parse(w, 3).map_err(err)?;
        self.inner.contains(&w).map_err(err)
    }

    fn state_complexity(&self) -> usize {
        self.inner.state_complexity()
    }

    fn reversed(&self) -> Self {
        PyLang {
            inner: self.inner.reversed(),
        }
    }

    fn dfa(&self) -> PyDfa {
        PyDfa {
            inner: self.inner.dfa().clone(),
        }
    }

    fn words_of_length(&self, len: usize) -> Vec<String> {
        self.inner.words_of_length(len).iter().map(sepwords::word::to_digits).collect()
    }

    fn to_text(&self) -> String {
        self.inner.to_text()
    }

    #[getter]
    fn provenance(&self) -> &str {
        self.inner.provenance()
    }

    fn __repr__(&self) -> String {
        format!("Lang({:?}, stc={})", self.inner.provenance(), self.inner.state_complexity())
    }
}

/// The certificate for `sep(w, x)` as a dict.
#[pyfunction]
#[pyo3(signature = (w, x, max_states=16, max_nodes=200_000_000))]
fn exact_sep<'py>(py: Python<'py>, w: &str, x: &str, max_states: usize, max_nodes: u64) -> PyResult<Bound<'py, PyAny>> {
    let (w, x) = (word(w)?, word(x)?);
    let b = budget(max_states, max_nodes);
    let cert = py.detach(|| sepwords::exact_sep(&w, &x, &b)).map_err(err)?;
    json_to_py(py, &cert.to_json_value())
}

#[pyfunction]
fn no_separator(w: &str, x: &str, p: usize) -> PyResult<bool> {
    Ok(no_separator_up_to(&word(w)?, &word(x)?, p))
}

#[pyfunction]
fn lsep_lower(w: &str, lang: &PyLang, p: usize) -> PyResult<bool> {
    let w = Word::parse(w, 3).map_err(err)?;
    lsep_lower_check(&w, &lang.inner, p).map_err(err)
}

/// Builds the `(k, n)` witness pair, optionally verified, as a dict.
#[pyfunction]
#[pyo3(signature = (k, n, verify=true, mirror=false))]
fn witness<'py>(py: Python<'py>, k: usize, n: usize, verify: bool, mirror: bool) -> PyResult<Bound<'py, PyAny>> {
    let assembly = if mirror { Assembly::Mirror } else { Assembly::ReversalReady };
    let b = SearchBudget::default();
    let report = py
        .detach(|| {
            let r = witness_pair(k, n, &b, assembly)?;
            if verify {
                verify_witness(&r, &b)
            } else {
                Ok(r)
            }
        })
        .map_err(err)?;
    json_to_py(py, &report.to_json_value())
}

#[pymodule]
fn pysepwords(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyDfa>()?;
    m.add_class::<PyLang>()?;
    m.add_function(wrap_pyfunction!(exact_sep, m)?)?;
    m.add_function(wrap_pyfunction!(no_separator, m)?)?;
    m.add_function(wrap_pyfunction!(lsep_lower, m)?)?;
    m.add_function(wrap_pyfunction!(witness, m)?)?;
    Ok(())
}
