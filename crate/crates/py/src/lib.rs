//! Python bindings: the main types and operations of the jagged-partition
//! toolkit as an extension module.
//!
//! Exposes `Partition` and `LatticePath` classes plus module-level functions
//! for family counts, the bijections, series coefficient tables, and the
//! theorem verifiers. Sequences cross the boundary as plain lists; reports
//! come back as dicts.

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use pyo3::types::{PyDict, PyList};

use jagged_core::error::Error;
use jagged_core::jagged::Restriction;
use jagged_core::{burge, families, jagged, partition, path, render, series};

fn to_py_err(e: Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn restriction(k: u32, i: u32) -> PyResult<Restriction> {
    Restriction::new(k, i).map_err(to_py_err)
}

/// An integer partition with its classical derived data.
#[pyclass(frozen)]
struct Partition {
    inner: partition::Partition,
}

#[pymethods]
impl Partition {
    #[new]
    fn new(parts: Vec<u32>) -> PyResult<Self> {
        Ok(Self {
            inner: partition::Partition::new(parts).map_err(to_py_err)?,
        })
    }

    fn parts(&self) -> Vec<u32> {
        self.inner.parts().to_vec()
    }

    fn weight(&self) -> u64 {
        self.inner.weight()
    }

    fn __len__(&self) -> usize {
        self.inner.len()
    }

    fn conjugate(&self) -> Partition {
        Partition {
            inner: self.inner.conjugate(),
        }
    }

    /// Frequency table as a dict {part value: multiplicity}.
    fn frequencies<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyDict>> {
        let freq = self.inner.frequencies();
        let dict = PyDict::new(py);
        for v in 1..=freq.max_value() {
            if freq.get(v) > 0 {
                dict.set_item(v, freq.get(v))?;
            }
        }
        Ok(dict)
    }

    /// Frobenius symbol as a pair of rows (s, t).
    fn frobenius(&self) -> (Vec<u32>, Vec<u32>) {
        let fs = self.inner.frobenius();
        (fs.s().to_vec(), fs.t().to_vec())
    }

    fn successive_ranks(&self) -> Vec<i64> {
        self.inner.successive_ranks()
    }

    /// The Burge word over 'a'/'b' in application order.
    fn burge_word(&self) -> String {
        burge::burge_word(&self.inner).to_compact_string()
    }

    /// The path read from the Burge word, starting at (0, start).
    fn to_path(&self, start: u32) -> PyResult<LatticePath> {
        let word = burge::burge_word(&self.inner);
        Ok(LatticePath {
            inner: burge::word_to_path(&word, start).map_err(to_py_err)?,
        })
    }

    fn __repr__(&self) -> String {
        format!("Partition({:?})", self.inner.parts())
    }

    fn __eq__(&self, other: &Partition) -> bool {
        self.inner == other.inner
    }
}

/// A lattice path with NE/SE/H steps in canonical form.
#[pyclass(frozen)]
struct LatticePath {
    inner: path::LatticePath,
}

#[pymethods]
impl LatticePath {
    #[new]
    fn new(start: u32, steps: &str) -> PyResult<Self> {
        Ok(Self {
            inner: path::LatticePath::from_steps_str(start, steps).map_err(to_py_err)?,
        })
    }

    fn start(&self) -> u32 {
        self.inner.start()
    }

    fn steps(&self) -> String {
        self.inner.steps_string()
    }

    fn weight(&self) -> u64 {
        self.inner.weight()
    }

    fn charge(&self) -> u64 {
        self.inner.charge()
    }

    /// Peaks as (x, y, relative height, horizontal moves to the left).
    fn peaks(&self) -> Vec<(u32, u32, u32, u32)> {
        self.inner
            .peaks()
            .iter()
            .map(|p| (p.x, p.y, p.h, p.o))
            .collect()
    }

    fn relative_heights(&self) -> Vec<u32> {
        self.inner.relative_heights()
    }

    /// True iff all peaks sit at even positions with height at most k-1.
    fn validate(&self, k: u32) -> bool {
        self.inner.validate(k)
    }

    fn to_word(&self) -> String {
        burge::path_to_word(&self.inner).to_compact_string()
    }

    /// The partition recovered by replaying the word backwards.
    fn to_partition(&self) -> PyResult<Partition> {
        let word = burge::path_to_word(&self.inner);
        Ok(Partition {
            inner: burge::burge_inverse(&word).map_err(to_py_err)?,
        })
    }

    /// Frobenius symbol of the path, rows (s, t).
    fn to_frobenius(&self) -> PyResult<(Vec<u32>, Vec<u32>)> {
        let fs = burge::path_to_frobenius(&self.inner).map_err(to_py_err)?;
        Ok((fs.s().to_vec(), fs.t().to_vec()))
    }

    /// Peak-pair reading with shuffles (diagnostic).
    fn peak_pair(&self, k: u32) -> PyResult<Partition> {
        Ok(Partition {
            inner: burge::peak_pair_map(&self.inner, k).map_err(to_py_err)?,
        })
    }

    fn render_ascii(&self) -> String {
        render::render_ascii(&self.inner)
    }

    fn render_svg(&self) -> String {
        render::render_svg(&self.inner)
    }

    fn __repr__(&self) -> String {
        format!(
            "LatticePath(start={}, steps={:?})",
            self.inner.start(),
            self.inner.steps_string()
        )
    }

    fn __eq__(&self, other: &LatticePath) -> bool {
        self.inner == other.inner
    }
}

/// Count one of the families J, P, E, R, O. `n` is the jagged-side weight:
/// P, E and R count objects of weight 2n. `m` restricts length or charge.
#[pyfunction]
#[pyo3(signature = (family, k, i, n, m=None))]
fn count(family: &str, k: u32, i: u32, n: u64, m: Option<u64>) -> PyResult<u64> {
    let r = restriction(k, i)?;
    let value = match family {
        "J" | "j" => jagged::enumerate_jagged(&r, n, None)
            .map_err(to_py_err)?
            .iter()
            .filter(|jp| m.is_none_or(|m| jp.len() as u64 == m))
            .count() as u64,
        "P" | "p" => {
            let t = path::path_counts(&r, 2 * n).map_err(to_py_err)?;
            match m {
                Some(m) => t.get(2 * n, m),
                None => t.row_sum(2 * n),
            }
        }
        "E" | "e" => {
            families::count_e(&r, 2 * n, m.map(|m| m as usize)).map_err(to_py_err)?
        }
        "R" | "r" => families::count_r(&r, 2 * n).map_err(to_py_err)?,
        "O" | "o" => families::count_o(&r, n).map_err(to_py_err)?,
        other => {
            return Err(PyValueError::new_err(format!(
                "unknown family {other:?}; use J, P, E, R or O"
            )))
        }
    };
    Ok(value)
}

/// All K-restricted jagged partitions of weight n (length m if given) as
/// lists of parts, lexicographically ordered.
#[pyfunction]
#[pyo3(signature = (k, i, n, m=None))]
fn enumerate_jagged(k: u32, i: u32, n: u64, m: Option<usize>) -> PyResult<Vec<Vec<u32>>> {
    let r = restriction(k, i)?;
    Ok(jagged::enumerate_jagged(&r, n, m)
        .map_err(to_py_err)?
        .into_iter()
        .map(|jp| jp.parts().to_vec())
        .collect())
}

#[pyfunction]
fn is_jagged(seq: Vec<i64>) -> bool {
    jagged::is_jagged(&seq)
}

#[pyfunction]
fn is_k_restricted(seq: Vec<u32>, k: u32) -> PyResult<bool> {
    let jp = jagged::JaggedPartition::new(seq).map_err(to_py_err)?;
    jp.is_k_restricted(k).map_err(to_py_err)
}

/// Doubling bijection onto E-partitions.
#[pyfunction]
fn jagged_to_epartition(seq: Vec<u32>) -> PyResult<Vec<u32>> {
    let jp = jagged::JaggedPartition::new(seq).map_err(to_py_err)?;
    Ok(jagged::jagged_to_epartition(&jp).parts().to_vec())
}

/// Inverse doubling bijection.
#[pyfunction]
fn epartition_to_jagged(parts: Vec<u32>) -> PyResult<Vec<u32>> {
    let p = partition::Partition::new(parts).map_err(to_py_err)?;
    Ok(jagged::epartition_to_jagged(&p)
        .map_err(to_py_err)?
        .parts()
        .to_vec())
}

/// Pairing bijection onto overpartitions: list of (value, overlined).
#[pyfunction]
fn jagged_to_overpartition(seq: Vec<u32>) -> PyResult<Vec<(u32, bool)>> {
    let jp = jagged::JaggedPartition::new(seq).map_err(to_py_err)?;
    Ok(jagged::jagged_to_overpartition(&jp)
        .parts()
        .iter()
        .map(|p| (p.value, p.overlined))
        .collect())
}

/// Experimental transform of a 0^2 1 sequence into a partition of triple
/// weight.
#[pyfunction]
fn p2_transform(seq: Vec<u32>) -> PyResult<Vec<u32>> {
    Ok(jagged::p2_transform(&seq).map_err(to_py_err)?.parts().to_vec())
}

/// Partition recovered from a Burge word over 'a'/'b'.
#[pyfunction]
fn burge_inverse(word: &str) -> PyResult<Vec<u32>> {
    let w = burge::BurgeWord::from_compact_str(word).map_err(to_py_err)?;
    Ok(burge::burge_inverse(&w).map_err(to_py_err)?.parts().to_vec())
}

/// Path read from a Burge word, starting at (0, start).
#[pyfunction]
fn word_to_path(word: &str, start: u32) -> PyResult<LatticePath> {
    let w = burge::BurgeWord::from_compact_str(word).map_err(to_py_err)?;
    Ok(LatticePath {
        inner: burge::word_to_path(&w, start).map_err(to_py_err)?,
    })
}

/// Coefficient table of J_{K,i}(z;q): rows by z-degree, columns by q-degree.
#[pyfunction]
fn j_series(k: u32, i: u32, qmax: usize, zmax: usize) -> PyResult<Vec<Vec<i64>>> {
    let r = restriction(k, i)?;
    Ok(series::j_series(&r, qmax, zmax)
        .map_err(to_py_err)?
        .rows()
        .to_vec())
}

/// Coefficient table of G_{K,i}(z;q).
#[pyfunction]
fn g_series(k: u32, i: u32, qmax: usize, zmax: usize) -> PyResult<Vec<Vec<i64>>> {
    let r = restriction(k, i)?;
    Ok(series::g_series(&r, qmax, zmax)
        .map_err(to_py_err)?
        .rows()
        .to_vec())
}

/// Coefficients of G_{K,i}(1;q).
#[pyfunction]
fn g_series_z1(k: u32, i: u32, qmax: usize) -> PyResult<Vec<i64>> {
    let r = restriction(k, i)?;
    Ok(series::g_series_z1(&r, qmax)
        .map_err(to_py_err)?
        .coeffs()
        .to_vec())
}

/// Coefficients of the overpartition product form.
#[pyfunction]
fn product_series(k: u32, i: u32, qmax: usize) -> PyResult<Vec<i64>> {
    let r = restriction(k, i)?;
    Ok(series::product_series(&r, qmax)
        .map_err(to_py_err)?
        .coeffs()
        .to_vec())
}

/// Gaussian polynomial [n choose k]_q coefficients up to q^qmax.
#[pyfunction]
fn q_binomial(n: usize, k: usize, qmax: usize) -> Vec<i64> {
    series::q_binomial(n, k, qmax).coeffs().to_vec()
}

fn report_to_dict<'py>(
    py: Python<'py>,
    report: &families::VerifyReport,
) -> PyResult<Bound<'py, PyDict>> {
    let dict = PyDict::new(py);
    dict.set_item("description", &report.description)?;
    dict.set_item("checked", report.checked)?;
    dict.set_item("passed", report.passed())?;
    let failures = PyList::empty(py);
    for f in &report.failures {
        let item = PyDict::new(py);
        item.set_item("identity", &f.identity)?;
        item.set_item("n", f.n)?;
        item.set_item("m", f.m)?;
        item.set_item("lhs", f.lhs)?;
        item.set_item("rhs", f.rhs)?;
        failures.append(item)?;
    }
    dict.set_item("failures", failures)?;
    dict.set_item("notes", report.notes.clone())?;
    Ok(dict)
}

/// Check theorem 1 (J = P) or theorem 2 (J = E per length, sum J = R = O)
/// for all weights up to nmax; returns a report dict.
#[pyfunction]
fn verify_theorem(py: Python<'_>, theorem: u8, k: u32, i: u32, nmax: u64) -> PyResult<Py<PyDict>> {
    let r = restriction(k, i)?;
    let report = match theorem {
        1 => families::verify_theorem1(&r, nmax).map_err(to_py_err)?,
        2 => families::verify_theorem2(&r, nmax).map_err(to_py_err)?,
        other => {
            return Err(PyValueError::new_err(format!(
                "unknown theorem {other}; use 1 or 2"
            )))
        }
    };
    Ok(report_to_dict(py, &report)?.into())
}

#[pymodule]
fn jagged_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<Partition>()?;
    m.add_class::<LatticePath>()?;
    m.add_function(wrap_pyfunction!(count, m)?)?;
    m.add_function(wrap_pyfunction!(enumerate_jagged, m)?)?;
    m.add_function(wrap_pyfunction!(is_jagged, m)?)?;
    m.add_function(wrap_pyfunction!(is_k_restricted, m)?)?;
    m.add_function(wrap_pyfunction!(jagged_to_epartition, m)?)?;
    m.add_function(wrap_pyfunction!(epartition_to_jagged, m)?)?;
    m.add_function(wrap_pyfunction!(jagged_to_overpartition, m)?)?;
    m.add_function(wrap_pyfunction!(p2_transform, m)?)?;
    m.add_function(wrap_pyfunction!(burge_inverse, m)?)?;
    m.add_function(wrap_pyfunction!(word_to_path, m)?)?;
    m.add_function(wrap_pyfunction!(j_series, m)?)?;
    m.add_function(wrap_pyfunction!(g_series, m)?)?;
    m.add_function(wrap_pyfunction!(g_series_z1, m)?)?;
    m.add_function(wrap_pyfunction!(product_series, m)?)?;
    m.add_function(wrap_pyfunction!(q_binomial, m)?)?;
    m.add_function(wrap_pyfunction!(verify_theorem, m)?)?;
    Ok(())
}
