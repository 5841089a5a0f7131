//! Python bindings. Paths are step strings over `N`, `E`, `S`; regions are
//! given by their top and bottom boundaries.

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

use pathlab_core::enumerate::{enumerate_paths, enumerate_tuples, lgv_count, PathFilter};
use pathlab_core::matroid::{tutte_poly, LatticePathMatroid, LinearOrder};
use pathlab_core::tableau::{psi as core_psi, psi_inv as core_psi_inv};
use pathlab_core::triangulation::{catalan_det as core_catalan_det, enumerate_k_triangulations};
use pathlab_core::{poly, swap, verify, ContactWord, MultiPoly, Path, PathTuple, Region, Tableau};

fn err(e: impl std::fmt::Display) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn path(s: &str) -> PyResult<Path> {
    Path::parse(s).map_err(err)
}

fn region(top: &str, bottom: &str) -> PyResult<Region> {
    Region::new(&path(top)?, &path(bottom)?).map_err(err)
}

type Terms = Vec<(Vec<u32>, i64)>;

fn terms(p: &MultiPoly) -> Terms {
    p.terms().map(|(e, c)| (e.to_vec(), c)).collect()
}

/// `(t, b, l, r)` for a path of the region.
#[pyfunction]
fn contact_stats(top: &str, bottom: &str, p: &str) -> PyResult<(u32, u32, u32, u32)> {
    let s = region(top, bottom)?.contact_stats(&path(p)?).map_err(err)?;
    Ok((s.t, s.b, s.l, s.r))
}

/// Generating polynomial of the chosen statistics (letters of `tblr`) over
/// the paths of the region, as `(exponents, count)` pairs.
#[pyfunction]
#[pyo3(signature = (top, bottom, stats = "tb", south = false))]
fn distribution(top: &str, bottom: &str, stats: &str, south: bool) -> PyResult<Terms> {
    let r = region(top, bottom)?;
    if let Some(c) = stats.chars().find(|c| !"tblr".contains(*c)) {
        return Err(err(format!("unknown statistic {c:?}")));
    }
    let filter = if south { PathFilter::with_south() } else { PathFilter::monotone() };
    let vars: Vec<String> = stats.chars().map(String::from).collect();
    let p = poly::distribution(enumerate_paths(&r, &filter), vars, |p: &Path| {
        let s = r.contact_stats(p).expect("enumerated inside the region");
        stats
            .chars()
            .map(|c| match c {
                't' => s.t,
                'b' => s.b,
                'l' => s.l,
                _ => s.r,
            })
            .collect()
    })
    .map_err(err)?;
    Ok(terms(&p))
}

/// The contact-exchanging involution applied to one path.
#[pyfunction]
fn swap_path(top: &str, bottom: &str, p: &str) -> PyResult<String> {
    Ok(swap::swapall(&region(top, bottom)?, &path(p)?).map_err(err)?.to_step_string())
}

/// Switch on a word over `t`, `b`.
#[pyfunction]
#[pyo3(signature = (word, inverse = false))]
fn switch(word: &str, inverse: bool) -> PyResult<String> {
    let w = ContactWord::parse(word).map_err(err)?;
    let out = if inverse { w.switch_inv() } else { w.switch() }.map_err(err)?;
    Ok(out.to_string())
}

/// Tutte polynomial of the lattice path matroid in `x`, `y` under the
/// natural, reversed, or an explicit order (`"3 1 2 ..."`).
#[pyfunction]
#[pyo3(signature = (top, bottom, order = "natural"))]
fn tutte(top: &str, bottom: &str, order: &str) -> PyResult<Terms> {
    let r = region(top, bottom)?;
    let m = r.x() + r.y() as usize;
    let order = match order {
        "natural" => LinearOrder::natural(m),
        "reversed" => LinearOrder::reversed(m),
        s => LinearOrder::parse(s, m).map_err(err)?,
    };
    Ok(terms(&tutte_poly(&LatticePathMatroid::new(r), &order).map_err(err)?))
}

/// Number of weakly nested `k`-tuples, by enumeration and by the
/// determinant formula.
#[pyfunction]
fn count_tuples(top: &str, bottom: &str, k: usize) -> PyResult<(usize, i128)> {
    let r = region(top, bottom)?;
    Ok((enumerate_tuples(&r, k).len(), lgv_count(&r, k).map_err(err)?))
}

/// The tableau of a tuple of paths, as rows.
#[pyfunction]
fn psi(top: &str, bottom: &str, paths: Vec<String>) -> PyResult<Vec<Vec<u32>>> {
    let ps = paths.iter().map(|s| path(s)).collect::<PyResult<Vec<_>>>()?;
    let t = PathTuple::new(region(top, bottom)?, ps).map_err(err)?;
    Ok(core_psi(&t).map_err(err)?.rows().to_vec())
}

/// The tuple of paths of a `k`-flagged tableau in the region.
#[pyfunction]
fn psi_inv(top: &str, bottom: &str, rows: Vec<Vec<u32>>, k: u32) -> PyResult<Vec<String>> {
    let t = Tableau::new(rows, k).map_err(err)?;
    let tuple = core_psi_inv(&t, &region(top, bottom)?).map_err(err)?;
    Ok(tuple.paths().iter().map(Path::to_step_string).collect())
}

#[pyfunction]
fn catalan_det(n: u32, k: u32) -> i128 {
    core_catalan_det(n, k)
}

#[pyfunction]
fn count_k_triangulations(n: u32, k: u32) -> usize {
    enumerate_k_triangulations(n, k).len()
}

/// Runs a named verification suite: `(checked, failure_count, failures)`.
#[pyfunction]
#[pyo3(signature = (suite, bound = None))]
fn run_suite(suite: &str, bound: Option<usize>) -> PyResult<(u64, usize, Vec<String>)> {
    let s = verify::suite(suite).ok_or_else(|| err(format!("unknown suite {suite:?}")))?;
    let o = (s.run)(bound.unwrap_or(s.default_bound));
    Ok((o.checked, o.failure_count, o.failures))
}

#[pymodule]
fn pathlab(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_function(wrap_pyfunction!(contact_stats, m)?)?;
    m.add_function(wrap_pyfunction!(distribution, m)?)?;
    m.add_function(wrap_pyfunction!(swap_path, m)?)?;
    m.add_function(wrap_pyfunction!(switch, m)?)?;
    m.add_function(wrap_pyfunction!(tutte, m)?)?;
    m.add_function(wrap_pyfunction!(count_tuples, m)?)?;
    m.add_function(wrap_pyfunction!(psi, m)?)?;
    m.add_function(wrap_pyfunction!(psi_inv, m)?)?;
    m.add_function(wrap_pyfunction!(catalan_det, m)?)?;
    m.add_function(wrap_pyfunction!(count_k_triangulations, m)?)?;
    m.add_function(wrap_pyfunction!(run_suite, m)?)?;
    Ok(())
}
