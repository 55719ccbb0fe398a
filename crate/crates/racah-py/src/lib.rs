//! Python bindings: exact tensor-algebra elements, the symbolic generators,
//! relation verification, the Hilbert-Poincaré series routes and the PBW
//! certificates, exposed as the `racah_py` module.

use num_bigint::BigInt;
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use pyo3::types::PyDict;

use racah_core::pbw;
use racah_core::racah::{self, RelationId, RelationTag};
use racah_core::series;
use racah_core::tensor::{self, Sl2Gen};
use racah_core::Error;

fn value_error(err: Error) -> PyErr {
    PyValueError::new_err(err.to_string())
}

fn parse_gen(name: &str) -> PyResult<Sl2Gen> {
    name.parse::<Sl2Gen>().map_err(value_error)
}

/// An element of `U(sl2)^⊗n` in canonical PBW form with exact rational
/// coefficients.
#[pyclass(frozen, skip_from_py_object)]
#[derive(Clone)]
struct TensorElement {
    inner: tensor::TensorElement,
}

#[pymethods]
impl TensorElement {
    /// Number of tensor factors.
    #[getter]
    fn n(&self) -> usize {
        self.inner.n()
    }

    /// Maximal total degree, or None for the zero element.
    fn degree(&self) -> Option<u32> {
        self.inner.degree()
    }

    fn num_terms(&self) -> usize {
        self.inner.num_terms()
    }

    fn is_zero(&self) -> bool {
        self.inner.is_zero()
    }

    /// True iff the element commutes with the diagonal sl2 embedding.
    fn is_central(&self) -> bool {
        tensor::is_central(&self.inner)
    }

    /// Canonical text form with exact fractions.
    fn to_text(&self) -> String {
        self.inner.to_text()
    }

    /// JSON list of `{monomial: [[a,b,c],...], coeff: "p/q"}`.
    fn to_json(&self) -> String {
        self.inner.to_json().to_string()
    }

    fn homogeneous_part(&self, degree: u32) -> TensorElement {
        TensorElement {
            inner: self.inner.homogeneous_part(degree),
        }
    }

    fn commutator(&self, other: &TensorElement) -> PyResult<TensorElement> {
        Ok(TensorElement {
            inner: self.inner.commutator(&other.inner).map_err(value_error)?,
        })
    }

    fn __add__(&self, other: &TensorElement) -> PyResult<TensorElement> {
        if self.inner.n() != other.inner.n() {
            return Err(PyValueError::new_err("factor count mismatch"));
        }
        Ok(TensorElement {
            inner: &self.inner + &other.inner,
        })
    }

    fn __sub__(&self, other: &TensorElement) -> PyResult<TensorElement> {
        if self.inner.n() != other.inner.n() {
            return Err(PyValueError::new_err("factor count mismatch"));
        }
        Ok(TensorElement {
            inner: &self.inner - &other.inner,
        })
    }

    fn __mul__(&self, other: &TensorElement) -> PyResult<TensorElement> {
        Ok(TensorElement {
            inner: self.inner.multiply(&other.inner).map_err(value_error)?,
        })
    }

    fn __neg__(&self) -> TensorElement {
        TensorElement {
            inner: -&self.inner,
        }
    }

    fn __eq__(&self, other: &TensorElement) -> bool {
        self.inner == other.inner
    }

    fn __repr__(&self) -> String {
        format!("TensorElement(n={}, {})", self.inner.n(), self.inner.to_text())
    }
}

/// A noncommutative polynomial in the generators `P_ij`, `F_ijk`.
#[pyclass(frozen, skip_from_py_object)]
#[derive(Clone)]
struct RacahExpr {
    inner: racah::RacahExpr,
}

#[pymethods]
impl RacahExpr {
    /// Canonical `P_ij` (index order irrelevant).
    #[staticmethod]
    fn p(n: usize, i: usize, j: usize) -> PyResult<RacahExpr> {
        Ok(RacahExpr {
            inner: racah::RacahExpr::p(n, i, j).map_err(value_error)?,
        })
    }

    /// `F_ijk`, normalized with its antisymmetry sign.
    #[staticmethod]
    fn f(n: usize, i: usize, j: usize, k: usize) -> PyResult<RacahExpr> {
        Ok(RacahExpr {
            inner: racah::RacahExpr::f(n, i, j, k).map_err(value_error)?,
        })
    }

    #[getter]
    fn n(&self) -> usize {
        self.inner.n()
    }

    fn num_terms(&self) -> usize {
        self.inner.num_terms()
    }

    fn is_zero(&self) -> bool {
        self.inner.is_zero()
    }

    fn degree(&self) -> Option<u32> {
        self.inner.degree()
    }

    fn commutator(&self, other: &RacahExpr) -> RacahExpr {
        RacahExpr {
            inner: self.inner.commutator(&other.inner),
        }
    }

    /// Image in `U(sl2)^⊗n` under `P_ab -> T^(a,b)`, `F_ijk -> -T^(i,j,k)`.
    fn eval_in_tensor(&self, n: usize) -> PyResult<TensorElement> {
        Ok(TensorElement {
            inner: racah::eval_in_tensor(&self.inner, n).map_err(value_error)?,
        })
    }

    fn __add__(&self, other: &RacahExpr) -> RacahExpr {
        RacahExpr {
            inner: &self.inner + &other.inner,
        }
    }

    fn __sub__(&self, other: &RacahExpr) -> RacahExpr {
        RacahExpr {
            inner: &self.inner - &other.inner,
        }
    }

    fn __mul__(&self, other: &RacahExpr) -> RacahExpr {
        RacahExpr {
            inner: &self.inner * &other.inner,
        }
    }

    fn __eq__(&self, other: &RacahExpr) -> bool {
        self.inner == other.inner
    }

    fn __repr__(&self) -> String {
        format!("RacahExpr({})", self.inner)
    }
}

#[pyfunction]
fn one(n: usize) -> TensorElement {
    TensorElement {
        inner: tensor::TensorElement::one(n),
    }
}

/// Diagonal embedding of an sl2 generator: `"e12" | "e11" | "e21"`.
#[pyfunction]
fn diagonal(gen: &str, n: usize) -> PyResult<TensorElement> {
    Ok(TensorElement {
        inner: tensor::diagonal(parse_gen(gen)?, n),
    })
}

#[pyfunction]
fn adjoint_action(gen: &str, x: &TensorElement) -> PyResult<TensorElement> {
    Ok(TensorElement {
        inner: tensor::adjoint_action(parse_gen(gen)?, &x.inner),
    })
}

#[pyfunction]
fn casimir(i: usize, n: usize) -> PyResult<TensorElement> {
    Ok(TensorElement {
        inner: tensor::casimir(i, n).map_err(value_error)?,
    })
}

#[pyfunction]
fn intermediate_casimir(i: usize, j: usize, n: usize) -> PyResult<TensorElement> {
    Ok(TensorElement {
        inner: tensor::intermediate_casimir(i, j, n).map_err(value_error)?,
    })
}

#[pyfunction]
fn polarized_trace(indices: Vec<usize>, n: usize) -> PyResult<TensorElement> {
    Ok(TensorElement {
        inner: tensor::polarized_trace(&indices, n).map_err(value_error)?,
    })
}

#[pyfunction]
fn build_q(n: usize) -> PyResult<RacahExpr> {
    Ok(RacahExpr {
        inner: racah::build_q(n).map_err(value_error)?,
    })
}

#[pyfunction]
fn build_w(n: usize, i: usize, j: usize, k: usize) -> PyResult<RacahExpr> {
    Ok(RacahExpr {
        inner: racah::build_w(n, i, j, k).map_err(value_error)?,
    })
}

#[pyfunction]
fn build_x(n: usize, i: usize, j: usize, k: usize, l: usize) -> PyResult<RacahExpr> {
    Ok(RacahExpr {
        inner: racah::build_x(n, i, j, k, l).map_err(value_error)?,
    })
}

#[pyfunction]
fn build_y(n: usize, i: usize, j: usize, k: usize, l: usize, m: usize) -> PyResult<RacahExpr> {
    Ok(RacahExpr {
        inner: racah::build_y(n, i, j, k, l, m).map_err(value_error)?,
    })
}

#[pyfunction]
#[allow(clippy::too_many_arguments)]
fn build_z(
    n: usize,
    i: usize,
    j: usize,
    k: usize,
    l: usize,
    m: usize,
    p: usize,
) -> PyResult<RacahExpr> {
    Ok(RacahExpr {
        inner: racah::build_z(n, i, j, k, l, m, p).map_err(value_error)?,
    })
}

fn report_to_dict<'py>(
    py: Python<'py>,
    report: &racah::RelationReport,
) -> PyResult<Bound<'py, PyDict>> {
    let dict = PyDict::new(py);
    dict.set_item("tag", &report.tag)?;
    dict.set_item("indices", &report.indices)?;
    dict.set_item("n", report.n)?;
    dict.set_item("residual_zero", report.residual_zero)?;
    dict.set_item("residual_terms", report.residual_terms)?;
    dict.set_item("millis", report.millis as u64)?;
    Ok(dict)
}

/// Verify one relation instance; returns the report as a dict.
#[pyfunction]
fn verify_relation<'py>(
    py: Python<'py>,
    tag: &str,
    indices: Vec<usize>,
    n: usize,
) -> PyResult<Bound<'py, PyDict>> {
    let tag: RelationTag = tag.parse().map_err(value_error)?;
    let report = racah::verify_relation(&RelationId::new(tag, indices), n).map_err(value_error)?;
    report_to_dict(py, &report)
}

/// Run the relation suite; `tags=None` runs the full catalogue.
#[pyfunction]
#[pyo3(signature = (n, tags=None, max_cases=None))]
fn relation_suite<'py>(
    py: Python<'py>,
    n: usize,
    tags: Option<Vec<String>>,
    max_cases: Option<usize>,
) -> PyResult<Vec<Bound<'py, PyDict>>> {
    let parsed: Option<Vec<RelationTag>> = match tags {
        None => None,
        Some(raw) => Some(
            raw.iter()
                .map(|t| t.parse::<RelationTag>())
                .collect::<Result<_, _>>()
                .map_err(value_error)?,
        ),
    };
    let reports =
        racah::relation_suite(n, parsed.as_deref(), max_cases).map_err(value_error)?;
    reports.iter().map(|r| report_to_dict(py, r)).collect()
}

#[pyfunction]
fn catalan(r: usize) -> BigInt {
    series::catalan(r)
}

#[pyfunction]
fn riordan(k: usize) -> BigInt {
    series::riordan(k)
}

#[pyfunction]
fn q_poly(r: usize) -> Vec<BigInt> {
    series::q_poly(r).coeffs().to_vec()
}

#[pyfunction]
fn p_poly(r: usize) -> Vec<BigInt> {
    series::p_poly(r).coeffs().to_vec()
}

#[pyfunction]
fn closed_form_series(n: usize, k: usize) -> PyResult<Vec<BigInt>> {
    Ok(series::closed_form_series(n, k)
        .map_err(value_error)?
        .coeffs()
        .to_vec())
}

#[pyfunction]
fn constant_term_series(n: usize, k: usize) -> PyResult<Vec<BigInt>> {
    Ok(series::constant_term_series(n, k)
        .map_err(value_error)?
        .coeffs()
        .to_vec())
}

#[pyfunction]
fn tilde_formula_series(n: usize, k: usize) -> PyResult<Vec<BigInt>> {
    Ok(series::tilde_formula_series(n, k)
        .map_err(value_error)?
        .coeffs()
        .to_vec())
}

#[pyfunction]
fn check_palindrome(r: usize) -> bool {
    series::check_palindrome(r)
}

#[pyfunction]
fn check_riordan_expansion(r: usize) -> bool {
    series::check_riordan_expansion(r)
}

#[pyfunction]
fn check_gould_identity(a: u32, b: u32, k: u32, kp: u32) -> bool {
    series::check_gould_identity(a, b, k, kp)
}

/// Multigraded series with all bounds equal, specialized to one variable,
/// compared against the direct expansion.
#[pyfunction]
fn multigraded_specialization_matches(n: usize, bound: u32) -> PyResult<bool> {
    let multi = series::multigraded_series(n, &vec![bound; n]).map_err(value_error)?;
    let reference = series::tilde_formula_series(n, bound as usize).map_err(value_error)?;
    Ok(multi.specialize() == reference)
}

#[pyfunction]
fn pbw_count_by_degree(n: usize, max_degree: u32) -> PyResult<Vec<usize>> {
    pbw::count_by_degree(n, max_degree).map_err(value_error)
}

#[pyfunction]
fn pbw_verify_counts(n: usize, max_degree: u32) -> PyResult<bool> {
    pbw::verify_counts(n, max_degree).map_err(value_error)
}

#[pyfunction]
#[pyo3(signature = (n, degree, budget=None))]
fn pbw_independence_rank<'py>(
    py: Python<'py>,
    n: usize,
    degree: u32,
    budget: Option<u64>,
) -> PyResult<Bound<'py, PyDict>> {
    let cert = pbw::independence_rank(n, degree, budget).map_err(value_error)?;
    let dict = PyDict::new(py);
    dict.set_item("n", cert.n)?;
    dict.set_item("degree", cert.degree)?;
    dict.set_item("count", cert.count)?;
    dict.set_item("ambient_dim", cert.ambient_dim)?;
    dict.set_item("rank", cert.rank)?;
    dict.set_item("pass", cert.pass)?;
    Ok(dict)
}

#[pymodule]
fn racah_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<TensorElement>()?;
    m.add_class::<RacahExpr>()?;
    m.add_function(wrap_pyfunction!(one, m)?)?;
    m.add_function(wrap_pyfunction!(diagonal, m)?)?;
    m.add_function(wrap_pyfunction!(adjoint_action, m)?)?;
    m.add_function(wrap_pyfunction!(casimir, m)?)?;
    m.add_function(wrap_pyfunction!(intermediate_casimir, m)?)?;
    m.add_function(wrap_pyfunction!(polarized_trace, m)?)?;
    m.add_function(wrap_pyfunction!(build_q, m)?)?;
    m.add_function(wrap_pyfunction!(build_w, m)?)?;
    m.add_function(wrap_pyfunction!(build_x, m)?)?;
    m.add_function(wrap_pyfunction!(build_y, m)?)?;
    m.add_function(wrap_pyfunction!(build_z, m)?)?;
    m.add_function(wrap_pyfunction!(verify_relation, m)?)?;
    m.add_function(wrap_pyfunction!(relation_suite, m)?)?;
    m.add_function(wrap_pyfunction!(catalan, m)?)?;
    m.add_function(wrap_pyfunction!(riordan, m)?)?;
    m.add_function(wrap_pyfunction!(q_poly, m)?)?;
    m.add_function(wrap_pyfunction!(p_poly, m)?)?;
    m.add_function(wrap_pyfunction!(closed_form_series, m)?)?;
    m.add_function(wrap_pyfunction!(constant_term_series, m)?)?;
    m.add_function(wrap_pyfunction!(tilde_formula_series, m)?)?;
    m.add_function(wrap_pyfunction!(check_palindrome, m)?)?;
    m.add_function(wrap_pyfunction!(check_riordan_expansion, m)?)?;
    m.add_function(wrap_pyfunction!(check_gould_identity, m)?)?;
    m.add_function(wrap_pyfunction!(multigraded_specialization_matches, m)?)?;
    m.add_function(wrap_pyfunction!(pbw_count_by_degree, m)?)?;
    m.add_function(wrap_pyfunction!(pbw_verify_counts, m)?)?;
    m.add_function(wrap_pyfunction!(pbw_independence_rank, m)?)?;
    Ok(())
}
