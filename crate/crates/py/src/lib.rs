//! Python bindings. Words are strings over `ENWS`, maps use the
//! `planarmap v1` text format.

use num_bigint::BigUint;
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

use fishmaps::bijection::{phi, phi_inv, xi, xi_inv};
use fishmaps::enumerate::{count_ff, count_gff, formula_ff_ij, sample_ff, sample_gff, RNG_ALGORITHM};
use fishmaps::gff::{down_bridges, is_fighting_fish, is_gff, up_bridges};
use fishmaps::map::{parse_map, serialize_map};
use fishmaps::word::{dual_word, is_quadrant_excursion, jaw, parse_word, visits_ell};
use fishmaps::{verify, LatticeWord};

fn value_error(e: impl std::fmt::Display) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn word(text: &str) -> PyResult<LatticeWord> {
    parse_word(text.trim()).map_err(value_error)
}

/// Code of a map given in the text format; with `nonseparable=True` the map
/// must be nonseparable and the code is a fighting fish.
#[pyfunction]
#[pyo3(signature = (map_text, nonseparable = false))]
fn encode(map_text: &str, nonseparable: bool) -> PyResult<String> {
    let m = parse_map(map_text).map_err(value_error)?;
    if nonseparable {
        return Ok(phi(&m).map_err(value_error)?.to_string());
    }
    Ok(xi(&m).to_string())
}

/// Map of a generalized fighting fish, in the text format.
#[pyfunction]
#[pyo3(signature = (w, nonseparable = false))]
fn decode(w: &str, nonseparable: bool) -> PyResult<String> {
    let w = word(w)?;
    let m = if nonseparable { phi_inv(&w).map_err(value_error)? } else { xi_inv(&w).map_err(value_error)? };
    Ok(serialize_map(&m))
}

#[pyfunction(name = "is_gff")]
fn py_is_gff(w: &str) -> PyResult<bool> {
    Ok(is_gff(&word(w)?))
}

#[pyfunction(name = "is_fighting_fish")]
fn py_is_fighting_fish(w: &str) -> PyResult<bool> {
    Ok(is_fighting_fish(&word(w)?))
}

#[pyfunction(name = "dual_word")]
fn py_dual_word(w: &str) -> PyResult<String> {
    Ok(dual_word(&word(w)?).to_string())
}

/// Classification flags and statistics; bridge counts are `None` off Gff.
#[pyfunction]
fn recognize(py: Python<'_>, w: &str) -> PyResult<Py<PyAny>> {
    let w = word(w)?;
    let gff = is_gff(&w);
    let d = pyo3::types::PyDict::new(py);
    d.set_item("excursion", is_quadrant_excursion(&w))?;
    d.set_item("gff", gff)?;
    d.set_item("fighting_fish", gff && is_fighting_fish(&w))?;
    d.set_item("jaw", jaw(&w))?;
    d.set_item("ell", visits_ell(&w).ok())?;
    d.set_item("up_bridges", gff.then(|| up_bridges(&w).expect("Gff")))?;
    d.set_item("down_bridges", gff.then(|| down_bridges(&w).expect("Gff")))?;
    Ok(d.into_any().unbind())
}

/// Number of rooted planar maps (equivalently Gff) with `n` edges.
#[pyfunction]
fn count_maps(n: usize) -> BigUint {
    count_gff(n).total(n)
}

/// Number of fighting fish (equivalently nonseparable maps) of size `n`.
#[pyfunction]
fn count_fish(n: usize) -> BigUint {
    count_ff(n).total(n)
}

/// Fighting fish with `i` letters `E` and `j` letters `N`.
#[pyfunction]
fn count_fish_ij(i: usize, j: usize) -> BigUint {
    formula_ff_ij(i, j)
}

/// Uniform fighting fish of size `n >= 2`.
#[pyfunction]
#[pyo3(signature = (n, seed = 0))]
fn sample_fish(n: usize, seed: u64) -> PyResult<String> {
    sample_ff(n, seed).map(|f| f.to_string()).ok_or_else(|| value_error("fighting fish have size at least 2"))
}

/// Uniform generalized fighting fish of size `n`.
#[pyfunction]
#[pyo3(signature = (n, seed = 0))]
fn sample_gff_word(n: usize, seed: u64) -> String {
    sample_gff(n, seed).to_string()
}

#[pyfunction]
fn render_svg(w: &str) -> PyResult<String> {
    Ok(fishmaps::render::render_svg(&word(w)?))
}

/// `(name, passed, detail)` for every cross-check up to `limit` edges.
#[pyfunction]
#[pyo3(signature = (limit = 3))]
fn run_verify(limit: usize) -> Vec<(String, bool, String)> {
    verify::run(limit)
        .into_iter()
        .map(|o| {
            let passed = o.passed();
            let detail = o.result.unwrap_or_else(|e| e);
            (o.name.to_string(), passed, detail)
        })
        .collect()
}

#[pymodule]
fn pyfishmaps(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add("RNG_ALGORITHM", RNG_ALGORITHM)?;
    m.add_function(wrap_pyfunction!(encode, m)?)?;
    m.add_function(wrap_pyfunction!(decode, m)?)?;
    m.add_function(wrap_pyfunction!(py_is_gff, m)?)?;
    m.add_function(wrap_pyfunction!(py_is_fighting_fish, m)?)?;
    m.add_function(wrap_pyfunction!(py_dual_word, m)?)?;
    m.add_function(wrap_pyfunction!(recognize, m)?)?;
    m.add_function(wrap_pyfunction!(count_maps, m)?)?;
    m.add_function(wrap_pyfunction!(count_fish, m)?)?;
    m.add_function(wrap_pyfunction!(count_fish_ij, m)?)?;
    m.add_function(wrap_pyfunction!(sample_fish, m)?)?;
    m.add_function(wrap_pyfunction!(sample_gff_word, m)?)?;
    m.add_function(wrap_pyfunction!(render_svg, m)?)?;
    m.add_function(wrap_pyfunction!(run_verify, m)?)?;
    Ok(())
}
