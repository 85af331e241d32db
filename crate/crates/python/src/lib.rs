//! Python bindings for `golayzcp`.
//!
//! Signs are accepted as the integers 1 and -1 or as the strings "+", "-",
//! "+1", "-1". Library errors surface as `ValueError`.

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

use golayzcp::{
    GcpRecipe, InsertionPosition, InsertionSpec, SearchConfig, SequencePair, Sign, ZcpType,
};

fn value_error(e: golayzcp::Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn sign_from(obj: &Bound<'_, PyAny>) -> PyResult<Sign> {
    if let Ok(v) = obj.extract::<i64>() {
        return Sign::from_value(v)
            .ok_or_else(|| PyValueError::new_err(format!("sign must be 1 or -1, got {v}")));
    }
    let s: String = obj.extract()?;
    s.parse().map_err(value_error)
}

fn recipe_from(s: &str) -> PyResult<GcpRecipe> {
    s.parse().map_err(value_error)
}

fn type_from(t: u8) -> PyResult<ZcpType> {
    match t {
        1 => Ok(ZcpType::Type1),
        2 => Ok(ZcpType::Type2),
        other => Err(PyValueError::new_err(format!(
            "ZCP type must be 1 or 2, got {other}"
        ))),
    }
}

/// `(r_first, r_second, x, y, zcp_type)`.
type Hit = (usize, usize, i8, i8, u8);

fn type_number(t: ZcpType) -> u8 {
    match t {
        ZcpType::Type1 => 1,
        ZcpType::Type2 => 2,
    }
}

/// Two equal-length rows of +1/-1 symbols.
#[pyclass(
    name = "SequencePair",
    module = "golayzcp",
    frozen,
    eq,
    skip_from_py_object
)]
#[derive(Clone, PartialEq)]
struct PyPair {
    inner: SequencePair,
}

#[pymethods]
impl PyPair {
    #[new]
    fn new(first: &str, second: &str) -> PyResult<Self> {
        let inner = SequencePair::parse(first, second).map_err(value_error)?;
        Ok(PyPair { inner })
    }

    /// Parses the two-line text format.
    #[staticmethod]
    fn from_text(text: &str) -> PyResult<Self> {
        let inner = SequencePair::from_text(text).map_err(value_error)?;
        Ok(PyPair { inner })
    }

    fn to_text(&self) -> String {
        self.inner.to_text()
    }

    #[getter]
    fn first(&self) -> String {
        self.inner.first().to_string()
    }

    #[getter]
    fn second(&self) -> String {
        self.inner.second().to_string()
    }

    /// Rows as lists of +1/-1 integers.
    fn values(&self) -> (Vec<i8>, Vec<i8>) {
        (
            self.inner.first().as_slice().to_vec(),
            self.inner.second().as_slice().to_vec(),
        )
    }

    fn insert(
        &self,
        r_first: usize,
        x: &Bound<'_, PyAny>,
        r_second: usize,
        y: &Bound<'_, PyAny>,
    ) -> PyResult<Self> {
        let inner = self
            .inner
            .insert(r_first, sign_from(x)?, r_second, sign_from(y)?)
            .map_err(value_error)?;
        Ok(PyPair { inner })
    }

    fn swap_rows(&self) -> Self {
        PyPair {
            inner: self.inner.swap_rows(),
        }
    }

    /// Autocorrelation sums for shifts 0..N.
    fn profile(&self) -> Vec<i64> {
        golayzcp::aacs_profile(&self.inner).values().to_vec()
    }

    fn is_gcp(&self) -> bool {
        golayzcp::is_gcp(&self.inner)
    }

    fn classify(&self) -> PyReport {
        PyReport {
            inner: golayzcp::classify(&self.inner),
        }
    }

    fn __len__(&self) -> usize {
        self.inner.len()
    }

    fn __repr__(&self) -> String {
        format!(
            "SequencePair({:?}, {:?})",
            self.inner.first().to_string(),
            self.inner.second().to_string()
        )
    }
}

/// Zero-correlation-zone classification of a pair.
#[pyclass(name = "ZcpReport", module = "golayzcp", frozen)]
struct PyReport {
    inner: golayzcp::ZcpReport,
}

#[pymethods]
impl PyReport {
    #[getter]
    fn n(&self) -> usize {
        self.inner.n
    }

    #[getter]
    fn type1_zcz(&self) -> usize {
        self.inner.type1_zcz
    }

    #[getter]
    fn type2_zcz(&self) -> usize {
        self.inner.type2_zcz
    }

    #[getter]
    fn profile(&self) -> Vec<i64> {
        self.inner.profile.values().to_vec()
    }

    #[getter]
    fn magnitudes(&self) -> Vec<u64> {
        self.inner.profile.magnitudes()
    }

    fn zcz(&self, zcp_type: u8) -> PyResult<usize> {
        Ok(self.inner.zcz(type_from(zcp_type)?))
    }

    fn is_z_optimal(&self, zcp_type: u8) -> PyResult<bool> {
        Ok(*self.inner.z_optimal.get(type_from(zcp_type)?))
    }

    fn is_optimal(&self, zcp_type: u8) -> PyResult<bool> {
        Ok(self.inner.is_optimal(type_from(zcp_type)?))
    }

    fn out_of_zone(&self, zcp_type: u8) -> PyResult<Vec<u64>> {
        Ok(self.inner.out_of_zone.get(type_from(zcp_type)?).clone())
    }

    fn to_json(&self) -> String {
        self.inner.to_json()
    }

    fn __repr__(&self) -> String {
        format!(
            "ZcpReport(n={}, type1_zcz={}, type2_zcz={})",
            self.inner.n, self.inner.type1_zcz, self.inner.type2_zcz
        )
    }
}

/// An inserted pair with its report and, for supported combinations, the
/// predicted magnitude segments `(lo, hi, mag)`.
#[pyclass(name = "Construction", module = "golayzcp", frozen)]
struct PyConstruction {
    inner: golayzcp::Construction,
}

#[pymethods]
impl PyConstruction {
    #[getter]
    fn pair(&self) -> PyPair {
        PyPair {
            inner: self.inner.pair.clone(),
        }
    }

    #[getter]
    fn report(&self) -> PyReport {
        PyReport {
            inner: self.inner.report.clone(),
        }
    }

    #[getter]
    fn prediction(&self) -> Option<Vec<(usize, usize, u64)>> {
        self.inner.prediction.as_ref().map(segments)
    }

    /// `None` when the combination is only measured.
    #[getter]
    fn prediction_holds(&self) -> Option<bool> {
        self.inner.prediction_holds()
    }
}

fn segments(p: &golayzcp::PredictedProfile) -> Vec<(usize, usize, u64)> {
    p.segments().iter().map(|s| (s.lo, s.hi, s.mag)).collect()
}

fn spec_from(
    position: &str,
    x: &Bound<'_, PyAny>,
    y: &Bound<'_, PyAny>,
) -> PyResult<InsertionSpec> {
    let position: InsertionPosition = position.parse().map_err(value_error)?;
    Ok(InsertionSpec::new(position, sign_from(x)?, sign_from(y)?))
}

/// One of the kernels "K2", "K10", "K26".
#[pyfunction]
fn kernel(name: &str) -> PyResult<PyPair> {
    let id = name.parse().map_err(value_error)?;
    Ok(PyPair {
        inner: golayzcp::kernel(id),
    })
}

/// Builds the GCP for a recipe such as "K2*K10".
#[pyfunction]
fn build_gcp(recipe: &str) -> PyResult<PyPair> {
    let inner = golayzcp::build_gcp(&recipe_from(recipe)?).map_err(value_error)?;
    Ok(PyPair { inner })
}

#[pyfunction]
fn turyn(outer: &PyPair, inner: &PyPair) -> PyResult<PyPair> {
    let inner = golayzcp::turyn(&outer.inner, &inner.inner).map_err(value_error)?;
    Ok(PyPair { inner })
}

#[pyfunction]
fn classify(pair: &PyPair) -> PyReport {
    pair.classify()
}

/// Inserts `x`/`y` at `position` ("front", "end" or "middle") of the
/// recipe's GCP. With `strict`, combinations without a prediction raise.
#[pyfunction]
#[pyo3(signature = (recipe, position, x, y, strict = true))]
fn construct(
    recipe: &str,
    position: &str,
    x: &Bound<'_, PyAny>,
    y: &Bound<'_, PyAny>,
    strict: bool,
) -> PyResult<PyConstruction> {
    let recipe = recipe_from(recipe)?;
    let spec = spec_from(position, x, y)?;
    let inner = if strict {
        golayzcp::construct_obzcp(&recipe, &spec)
    } else {
        golayzcp::measure_obzcp(&recipe, &spec)
    }
    .map_err(value_error)?;
    Ok(PyConstruction { inner })
}

#[pyfunction]
fn predicted_profile(
    recipe: &str,
    position: &str,
    x: &Bound<'_, PyAny>,
    y: &Bound<'_, PyAny>,
) -> PyResult<Vec<(usize, usize, u64)>> {
    let p = golayzcp::predicted_profile(&recipe_from(recipe)?, &spec_from(position, x, y)?)
        .map_err(value_error)?;
    Ok(segments(&p))
}

/// Exhaustive search over all pairs of length `n`. Returns
/// `(max_zcz, witness_count, witnesses)`.
#[pyfunction]
fn exhaustive_max_zcz(
    py: Python<'_>,
    n: usize,
    zcp_type: u8,
) -> PyResult<(usize, u64, Vec<PyPair>)> {
    let t = type_from(zcp_type)?;
    let config = SearchConfig::from_env();
    let r = py
        .detach(|| golayzcp::exhaustive_max_zcz(n, t, &config))
        .map_err(value_error)?;
    let witnesses = r
        .witnesses
        .into_iter()
        .map(|inner| PyPair { inner })
        .collect();
    Ok((r.max_zcz, r.witness_count, witnesses))
}

/// Every optimal single-symbol insertion into `pair`, as tuples
/// `(r_first, r_second, x, y, zcp_type)`.
#[pyfunction]
#[pyo3(signature = (pair, unequal = false))]
fn insertion_search(py: Python<'_>, pair: &PyPair, unequal: bool) -> PyResult<Vec<Hit>> {
    let config = SearchConfig::from_env();
    let p = pair.inner.clone();
    let r = py
        .detach(|| golayzcp::insertion_search(&p, "", unequal, &config))
        .map_err(value_error)?;
    Ok(r.hits
        .iter()
        .map(|h| {
            (
                h.r_first,
                h.r_second,
                h.x.value(),
                h.y.value(),
                type_number(h.zcp_type),
            )
        })
        .collect())
}

#[pymodule(name = "golayzcp")]
fn golayzcp_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyPair>()?;
    m.add_class::<PyReport>()?;
    m.add_class::<PyConstruction>()?;
    m.add_function(wrap_pyfunction!(kernel, m)?)?;
    m.add_function(wrap_pyfunction!(build_gcp, m)?)?;
    m.add_function(wrap_pyfunction!(turyn, m)?)?;
    m.add_function(wrap_pyfunction!(classify, m)?)?;
    m.add_function(wrap_pyfunction!(construct, m)?)?;
    m.add_function(wrap_pyfunction!(predicted_profile, m)?)?;
    m.add_function(wrap_pyfunction!(exhaustive_max_zcz, m)?)?;
    m.add_function(wrap_pyfunction!(insertion_search, m)?)?;
    Ok(())
}
