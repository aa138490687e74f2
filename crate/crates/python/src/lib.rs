//! Python bindings: rings, presented modules, presentation files, complexes
//! and the corpus. Infinite depth or syzygy order comes back as
//! `float("inf")`; the Krull dimension of the zero module as `None`.

use gradmod::complexes::CochainComplex;
use gradmod::homalg::{self, Depth, SyzygyOrder};
use gradmod::resolution::Measured;
use gradmod::{corpus, Error, Polynomial, Vector};
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

fn py_err(e: Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

#[derive(IntoPyObject)]
enum Extended {
    Finite(usize),
    Infinite(f64),
}

impl From<SyzygyOrder> for Extended {
    fn from(s: SyzygyOrder) -> Self {
        s.finite().map_or(Extended::Infinite(f64::INFINITY), Extended::Finite)
    }
}

impl From<Depth> for Extended {
    fn from(d: Depth) -> Self {
        d.finite().map_or(Extended::Infinite(f64::INFINITY), Extended::Finite)
    }
}

#[pyclass(name = "GradedRing", module = "pygradmod", frozen, from_py_object)]
#[derive(Clone)]
struct PyRing(gradmod::GradedRing);

#[pymethods]
impl PyRing {
    /// `GradedRing(p, r)` with variables `t1..tr` of degree 2, or
    /// `GradedRing(p, names=[...], degrees=[...])`.
    #[new]
    #[pyo3(signature = (p, r=None, names=None, degrees=None))]
    fn new(p: u64, r: Option<usize>, names: Option<Vec<String>>, degrees: Option<Vec<u32>>) -> PyResult<Self> {
        let ring = match (r, names) {
            (Some(r), None) => match degrees {
                None => gradmod::GradedRing::standard(p, r),
                Some(d) => {
                    let names = (1..=r).map(|i| format!("t{i}")).collect();
                    gradmod::GradedRing::new(p, names, d)
                }
            },
            (None, Some(names)) => {
                let d = degrees.unwrap_or_else(|| vec![gradmod::ring::DEFAULT_VAR_DEGREE; names.len()]);
                gradmod::GradedRing::new(p, names, d)
            }
            _ => return Err(PyValueError::new_err("give either r or names")),
        };
        ring.map(PyRing).map_err(py_err)
    }

    #[getter]
    fn characteristic(&self) -> u64 {
        self.0.characteristic()
    }

    #[getter]
    fn num_vars(&self) -> usize {
        self.0.num_vars()
    }

    #[getter]
    fn var_names(&self) -> Vec<String> {
        self.0.var_names().to_vec()
    }

    #[getter]
    fn var_degrees(&self) -> Vec<u32> {
        self.0.var_degrees().to_vec()
    }

    fn __repr__(&self) -> String {
        format!("GradedRing({})", self.0)
    }
}

#[pyclass(name = "Module", module = "pygradmod", frozen, from_py_object)]
#[derive(Clone)]
struct PyModulePresentation(gradmod::ModulePresentation);

fn parse_rows(ring: &gradmod::GradedRing, rows: &[Vec<String>], rank: usize) -> PyResult<Vec<Vector>> {
    rows.iter()
        .map(|row| {
            if row.len() != rank {
                return Err(PyValueError::new_err(format!("row has {} entries, expected {rank}", row.len())));
            }
            let coords = row
                .iter()
                .map(|s| Polynomial::parse(ring, s))
                .collect::<Result<Vec<_>, _>>()
                .map_err(py_err)?;
            Ok(Vector::from_coordinates(&coords))
        })
        .collect()
}

#[pymethods]
impl PyModulePresentation {
    /// Cokernel of the relation rows (each a list of polynomial strings,
    /// one per generator) on free generators of the given degrees.
    #[new]
    #[pyo3(signature = (ring, cover, relations=Vec::new()))]
    fn new(ring: &PyRing, cover: Vec<i32>, relations: Vec<Vec<String>>) -> PyResult<Self> {
        let rels = parse_rows(&ring.0, &relations, cover.len())?;
        gradmod::ModulePresentation::new(&ring.0, cover, rels)
            .map(PyModulePresentation)
            .map_err(py_err)
    }

    #[staticmethod]
    fn free(ring: &PyRing, shifts: Vec<i32>) -> Self {
        PyModulePresentation(gradmod::ModulePresentation::free(&ring.0, shifts))
    }

    #[staticmethod]
    fn residue_field(ring: &PyRing) -> Self {
        PyModulePresentation(gradmod::ModulePresentation::residue_field(&ring.0))
    }

    #[getter]
    fn ring(&self) -> PyRing {
        PyRing(self.0.ring().clone())
    }

    #[getter]
    fn cover(&self) -> Vec<i32> {
        self.0.cover_shifts().to_vec()
    }

    #[getter]
    fn relations(&self) -> Vec<Vec<String>> {
        self.0
            .relations()
            .iter()
            .map(|v| v.coordinates(self.0.ring(), self.0.rank()).iter().map(ToString::to_string).collect())
            .collect()
    }

    fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    fn minimal_presentation(&self) -> Self {
        PyModulePresentation(self.0.minimal_presentation())
    }

    /// Graded Betti numbers as `(i, degree, rank)` triples.
    fn betti(&self) -> Vec<(usize, i32, usize)> {
        gradmod::graded_betti(&self.0)
            .records()
            .into_iter()
            .map(|b| (b.index, b.degree, b.rank))
            .collect()
    }

    fn betti_table(&self) -> String {
        gradmod::graded_betti(&self.0).grid()
    }

    /// Ranks and generator degrees of the minimal free resolution.
    fn resolution(&self) -> Vec<Vec<i32>> {
        gradmod::minimal_free_resolution(&self.0).modules().to_vec()
    }

    fn hilbert_series(&self) -> String {
        gradmod::hilbert_series(&self.0).reduced().to_string()
    }

    /// `dim M_d` for `d` in `start..=end`.
    fn hilbert_function(&self, start: i32, end: i32) -> Vec<i64> {
        gradmod::hilbert_series(&self.0).expand(start, end)
    }

    fn projective_dimension(&self) -> Option<usize> {
        gradmod::projective_dimension(&self.0).value()
    }

    fn depth(&self) -> Extended {
        homalg::depth(&self.0).into()
    }

    fn krull_dimension(&self) -> Option<usize> {
        match homalg::krull_dimension(&self.0) {
            Measured::ZeroModule => None,
            Measured::Value(v) => Some(v),
        }
    }

    fn ext(&self, i: usize) -> Self {
        PyModulePresentation(homalg::ext_module(&self.0, i))
    }

    fn hom(&self, other: &PyModulePresentation) -> PyResult<Self> {
        homalg::hom_module(&self.0, &other.0).map(PyModulePresentation).map_err(py_err)
    }

    fn is_cm_of_projdim(&self, i: usize) -> bool {
        homalg::is_cm_of_projdim(&self.0, i)
    }

    fn cm_dual(&self, i: usize) -> PyResult<Self> {
        homalg::cm_dual(&self.0, i).map(PyModulePresentation).map_err(py_err)
    }

    fn is_torsion_free(&self) -> bool {
        homalg::is_torsion_free(&self.0)
    }

    fn is_reflexive(&self) -> bool {
        homalg::is_reflexive(&self.0)
    }

    fn syzygy_order(&self) -> Extended {
        homalg::syzygy_order(&self.0).into()
    }

    fn lambda_induce(&self) -> Self {
        PyModulePresentation(homalg::lambda_induce(&self.0))
    }

    fn tensor(&self, other: &PyModulePresentation) -> PyResult<Self> {
        homalg::tensor_external(&self.0, &other.0).map(PyModulePresentation).map_err(py_err)
    }

    fn direct_sum(&self, other: &PyModulePresentation) -> PyResult<Self> {
        self.0.direct_sum(&other.0).map(PyModulePresentation).map_err(py_err)
    }

    fn shift(&self, k: i32) -> Self {
        PyModulePresentation(self.0.shift(k))
    }

    fn is_regular_sequence(&self, seq: Vec<String>) -> PyResult<bool> {
        let polys = seq
            .iter()
            .map(|s| Polynomial::parse(self.0.ring(), s))
            .collect::<Result<Vec<_>, _>>()
            .map_err(py_err)?;
        homalg::is_regular_sequence(&self.0, &polys).map_err(py_err)
    }

    fn linear_regular_test(&self, forms: Vec<String>, j: usize) -> PyResult<bool> {
        let polys = forms
            .iter()
            .map(|s| Polynomial::parse(self.0.ring(), s))
            .collect::<Result<Vec<_>, _>>()
            .map_err(py_err)?;
        homalg::linear_regular_test(&self.0, &polys, j).map_err(py_err)
    }

    fn __repr__(&self) -> String {
        format!(
            "Module(ring={}, cover={:?}, relations={})",
            self.0.ring(),
            self.0.cover_shifts(),
            self.0.relations().len()
        )
    }
}

#[pyclass(name = "Complex", module = "pygradmod", frozen, from_py_object)]
#[derive(Clone)]
struct PyComplex(CochainComplex);

#[pymethods]
impl PyComplex {
    #[getter]
    fn modules(&self) -> Vec<PyModulePresentation> {
        self.0.modules().iter().cloned().map(PyModulePresentation).collect()
    }

    #[getter]
    fn augmentation(&self) -> Option<PyModulePresentation> {
        self.0.augmentation().map(|a| PyModulePresentation(a.module.clone()))
    }

    /// Violations as readable strings; empty for a valid complex.
    fn validate(&self) -> Vec<String> {
        self.0.validate().iter().map(ToString::to_string).collect()
    }

    fn cohomology(&self, i: i32) -> PyResult<PyModulePresentation> {
        self.0.cohomology_at(i).map(PyModulePresentation).map_err(py_err)
    }

    fn check_cm_assumption(&self) -> PyResult<Vec<bool>> {
        self.0.check_cm_assumption().map(|r| r.positions).map_err(py_err)
    }

    /// `(max_j, exact_everywhere, [(position, exact, hilbert series)])`.
    fn exactness_profile(&self) -> PyResult<(usize, bool, Vec<(i32, bool, String)>)> {
        let p = self.0.exactness_profile().map_err(py_err)?;
        let rows = p
            .positions
            .iter()
            .map(|x| (x.position, x.exact, x.hilbert.reduced().to_string()))
            .collect();
        Ok((p.max_j, p.exact_everywhere, rows))
    }

    /// `(agreement, syzygy order, [(j, exact through j-2, order >= j)])`.
    fn crosscheck(&self) -> PyResult<(bool, Extended, Vec<(usize, bool, bool)>)> {
        let x = self.0.exactness_crosscheck().map_err(py_err)?;
        let rows = x.rows.iter().map(|r| (r.j, r.exact, r.syzygy)).collect();
        Ok((x.agreement, x.syzygy_order.into(), rows))
    }

    fn tensor(&self, other: &PyComplex) -> PyResult<PyComplex> {
        gradmod::tensor_complexes(&self.0, &other.0).map(PyComplex).map_err(py_err)
    }
}

#[pyclass(name = "PresentationFile", module = "pygradmod", frozen)]
struct PyPresentationFile(gradmod::PresentationFile);

#[pymethods]
impl PyPresentationFile {
    #[staticmethod]
    fn parse(text: &str) -> PyResult<Self> {
        gradmod::PresentationFile::parse(text)
            .map(PyPresentationFile)
            .map_err(py_err)
    }

    #[getter]
    fn ring(&self) -> PyRing {
        PyRing(self.0.ring().clone())
    }

    fn module_names(&self) -> Vec<String> {
        self.0.modules().iter().map(|(n, _)| n.clone()).collect()
    }

    fn complex_names(&self) -> Vec<String> {
        self.0.complexes().iter().map(|c| c.name.clone()).collect()
    }

    fn module(&self, name: &str) -> PyResult<PyModulePresentation> {
        self.0
            .module(name)
            .cloned()
            .map(PyModulePresentation)
            .ok_or_else(|| PyValueError::new_err(format!("no module named `{name}`")))
    }

    fn complex(&self, name: &str) -> PyResult<PyComplex> {
        self.0
            .complex(name)
            .map(|c| PyComplex(c.complex.clone()))
            .ok_or_else(|| PyValueError::new_err(format!("no complex named `{name}`")))
    }

    fn print(&self) -> String {
        self.0.print()
    }
}

/// Identifiers of the standard corpus.
#[pyfunction]
fn corpus_ids() -> Vec<String> {
    corpus::standard_ids()
}

/// The module of a corpus entry and its augmented complex, if any.
#[pyfunction]
fn corpus_entry(id: &str) -> PyResult<(PyModulePresentation, Option<PyComplex>)> {
    let e = corpus::lookup(id).map_err(py_err)?;
    Ok((PyModulePresentation(e.module), e.complex.map(PyComplex)))
}

/// Names of expected facts of a corpus entry that the engine fails to
/// reproduce.
#[pyfunction]
fn corpus_mismatches(id: &str) -> PyResult<Vec<String>> {
    let e = corpus::lookup(id).map_err(py_err)?;
    Ok(e.check().into_iter().filter(|c| !c.ok).map(|c| c.fact.to_string()).collect())
}

/// Run the command-line tool in-process: `(exit code, stdout, stderr)`.
#[pyfunction]
fn run(args: Vec<String>) -> (i32, String, String) {
    let out = gradmod::cli::run_command(std::iter::once("gradmod".to_string()).chain(args));
    (out.code, out.stdout, out.stderr)
}

#[pymodule]
fn pygradmod(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyRing>()?;
    m.add_class::<PyModulePresentation>()?;
    m.add_class::<PyComplex>()?;
    m.add_class::<PyPresentationFile>()?;
    m.add_function(wrap_pyfunction!(corpus_ids, m)?)?;
    m.add_function(wrap_pyfunction!(corpus_entry, m)?)?;
    m.add_function(wrap_pyfunction!(corpus_mismatches, m)?)?;
    m.add_function(wrap_pyfunction!(run, m)?)?;
    Ok(())
}
