//! Python bindings for the qcf crate. Everything crosses the boundary as
//! strings in the same grammar the CLI uses; structured results come back
//! as small frozen classes or JSON strings.

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

use qcf::classify::is_admissible;
use qcf::curves::{to_short, torsion_subgroup};
use qcf::reduction::reduce_and_count;
use qcf::rings::{factor, splitting_type};
use qcf::textio;
use qcf::verify::{verify_lemma, verify_search_model, SEARCH_BOUND};
use qcf::{CurveLong, ModelId, RingTag, SplitType};

fn err(e: qcf::Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn parse_tag(field: &str) -> PyResult<RingTag> {
    textio::parse_field(field).map_err(err)
}

fn opt_tag(field: Option<&str>) -> PyResult<Option<RingTag>> {
    field.map(parse_tag).transpose()
}

/// The torsion subgroup of one curve: invariants and the points themselves.
#[pyclass(frozen)]
struct Torsion {
    #[pyo3(get)]
    n1: u32,
    #[pyo3(get)]
    n2: u32,
    #[pyo3(get)]
    group: String,
    #[pyo3(get)]
    points: Vec<String>,
}

#[pymethods]
impl Torsion {
    #[getter]
    fn order(&self) -> u32 {
        self.n1 * self.n2
    }

    #[getter]
    fn invariants(&self) -> (u32, u32) {
        (self.n1, self.n2)
    }

    fn __repr__(&self) -> String {
        format!("Torsion({}, order {})", self.group, self.n1 * self.n2)
    }
}

/// An elliptic curve over Q(i) or Q(sqrt(-3)), built from the CLI grammar:
/// an equation like "y^2 = x^3 - x over Qi" or a bracket form
/// "[0,2w,0,1-w,0] over Qw3". The field suffix may instead be passed as
/// the second argument.
#[pyclass(frozen)]
struct Curve {
    inner: CurveLong,
}

impl Curve {
    fn tag(&self) -> RingTag {
        self.inner.tag
    }
}

#[pymethods]
impl Curve {
    #[new]
    #[pyo3(signature = (equation, field=None))]
    fn new(equation: &str, field: Option<&str>) -> PyResult<Self> {
        let (inner, _) = textio::parse_curve(equation, opt_tag(field)?).map_err(err)?;
        Ok(Curve { inner })
    }

    #[getter]
    fn field(&self) -> &'static str {
        textio::field_str(self.tag())
    }

    fn discriminant(&self) -> String {
        self.inner.discriminant().to_string()
    }

    fn torsion(&self) -> PyResult<Torsion> {
        let tor = torsion_subgroup(&self.inner).map_err(err)?;
        Ok(Torsion {
            n1: tor.n1,
            n2: tor.n2,
            group: textio::group_str(tor.n1, tor.n2),
            points: tor.points.iter().map(|p| p.to_string()).collect(),
        })
    }

    /// Number of points on the reduction at the canonical prime above p,
    /// together with the splitting type of p.
    fn count_points(&self, p: u64) -> PyResult<(u64, &'static str)> {
        let (st, qp) = splitting_type(p, self.tag()).map_err(err)?;
        let (short, _) = to_short(&self.inner).map_err(err)?;
        let count = reduce_and_count(&short, &qp).map_err(err)?;
        let kind = match st {
            SplitType::Split => "split",
            SplitType::Inert => "inert",
            SplitType::Ramified => "ramified",
        };
        Ok((count, kind))
    }

    fn __str__(&self) -> String {
        self.inner.to_string()
    }

    fn __repr__(&self) -> String {
        format!("Curve(\"{} over {}\")", self.inner, self.field())
    }
}

/// Torsion of a curve given in the CLI grammar; shorthand for
/// Curve(equation, field).torsion().
#[pyfunction]
#[pyo3(signature = (equation, field=None))]
fn torsion(equation: &str, field: Option<&str>) -> PyResult<Torsion> {
    Curve::new(equation, field)?.torsion()
}

/// Factor a ring element into a unit and canonical primes, e.g.
/// factorize("2", "Qi") == "2 = -i * (1+i)^2".
#[pyfunction]
fn factorize(element: &str, field: &str) -> PyResult<String> {
    let tag = parse_tag(field)?;
    let z = textio::parse_qint(element, tag).map_err(err)?;
    let f = factor(&z).map_err(err)?;
    Ok(textio::factorization_line(&z, &f))
}

/// The square-free part of a ring element, canonical up to the recorded
/// unit class.
#[pyfunction]
fn squarefree_part(element: &str, field: &str) -> PyResult<String> {
    let tag = parse_tag(field)?;
    let z = textio::parse_qint(element, tag).map_err(err)?;
    let c = qcf::rings::squarefree_part(&z).map_err(err)?;
    Ok(c.rep.to_string())
}

/// Whether a torsion group such as "Z2+Z10" occurs over the field, and the
/// tag naming the theorem or lemma that decides it.
#[pyfunction]
#[pyo3(signature = (group, field, rational=true))]
fn classify(group: &str, field: &str, rational: bool) -> PyResult<(bool, String)> {
    let tag = parse_tag(field)?;
    let label = textio::parse_group(group).map_err(err)?;
    let (adm, why) = is_admissible(&label, tag, rational);
    Ok((adm, why.as_str().to_string()))
}

/// The admissible torsion groups over the field, as "Zm" / "Zm+Zn" labels.
#[pyfunction]
#[pyo3(signature = (field, rational=true))]
fn admissible_groups(field: &str, rational: bool) -> PyResult<Vec<String>> {
    let tag = parse_tag(field)?;
    Ok(qcf::classify::admissible_groups(tag, rational)
        .groups
        .iter()
        .map(|g| textio::group_str(g.n1, g.n2))
        .collect())
}

/// Re-run one catalog model (L6, L6AUX, L7..L11, L13, HE1, HE2, HILBERT)
/// and return its reproduction report as a JSON string.
#[pyfunction]
fn reproduce(model: &str) -> PyResult<String> {
    let id = ModelId::parse(model).ok_or_else(|| err(qcf::Error::UnknownModel(model.to_string())))?;
    let entry = qcf::verify::model(id);
    let report = if entry.is_search_only() {
        verify_search_model(id, entry.field, SEARCH_BOUND).map_err(err)?
    } else {
        verify_lemma(id).map_err(err)?
    };
    Ok(textio::repro_json(&report).to_string())
}

#[pymodule]
fn qcf_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<Curve>()?;
    m.add_class::<Torsion>()?;
    m.add_function(wrap_pyfunction!(torsion, m)?)?;
    m.add_function(wrap_pyfunction!(factorize, m)?)?;
    m.add_function(wrap_pyfunction!(squarefree_part, m)?)?;
    m.add_function(wrap_pyfunction!(classify, m)?)?;
    m.add_function(wrap_pyfunction!(admissible_groups, m)?)?;
    m.add_function(wrap_pyfunction!(reproduce, m)?)?;
    m.add("SEARCH_BOUND", SEARCH_BOUND)?;
    Ok(())
}
