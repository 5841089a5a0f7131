//! The map from path tuples to tableaux, the local moves `j` and `j^-1`, and
//! the weight-preserving bijection built from them.

use std::collections::BTreeSet;

use serde::Serialize;

use super::{shape_of_region, Cell, Tableau};
use crate::error::{Error, Result};
use crate::ktuple::PathTuple;
use crate::path::{Path, Region};

/// Violation cells of a tableau, in row-major order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Violations {
    pub semistandard: Vec<Cell>,
    pub path: Vec<Cell>,
    pub minimal_semistandard: Option<Cell>,
    pub maximal_path: Option<Cell>,
}

impl Tableau {
    fn entry_or_zero(&self, cell: Option<Cell>) -> u32 {
        cell.and_then(|c| self.get(c)).unwrap_or(0)
    }

    pub fn is_semistandard_violation(&self, (r, c): Cell) -> bool {
        let e = self.rows[r][c];
        (r > 0 && self.rows[r - 1][c] >= e) || (c > 0 && self.rows[r][c - 1] > e)
    }

    pub fn is_path_violation(&self, (r, c): Cell) -> bool {
        let e = self.rows[r][c];
        if !self.is_small(e) {
            return false;
        }
        if let Some(below) = self.get((r + 1, c)) {
            if self.is_large(below) && !self.is_maximal((r + 1, c), below) {
                return true;
            }
        }
        match self.get((r, c + 1)) {
            Some(right) if self.is_large(right) => (0..r)
                .map(|i| self.rows[i][c + 1])
                .filter(|&f| self.is_small(f))
                .all(|f| f < e),
            _ => false,
        }
    }

    pub fn semistandard_violations(&self) -> Vec<Cell> {
        self.cells().map(|(c, _)| c).filter(|&c| self.is_semistandard_violation(c)).collect()
    }

    pub fn path_violations(&self) -> Vec<Cell> {
        self.cells().map(|(c, _)| c).filter(|&c| self.is_path_violation(c)).collect()
    }

    /// Smallest entry, then leftmost column.
    pub fn minimal_semistandard_violation(&self) -> Option<Cell> {
        let v = self.semistandard_violations();
        let best = v.iter().copied().min_by_key(|&(r, c)| (self.rows[r][c], c))?;
        debug_assert_eq!(
            v.iter().filter(|&&(r, c)| (self.rows[r][c], c) == (self.get(best).unwrap(), best.1)).count(),
            1
        );
        Some(best)
    }

    /// Largest entry, then rightmost column.
    pub fn maximal_path_violation(&self) -> Option<Cell> {
        self.path_violations().into_iter().max_by_key(|&(r, c)| (self.rows[r][c], c))
    }

    pub fn violations(&self) -> Violations {
        Violations {
            semistandard: self.semistandard_violations(),
            path: self.path_violations(),
            minimal_semistandard: self.minimal_semistandard_violation(),
            maximal_path: self.maximal_path_violation(),
        }
    }
}

/// Applies `j` and returns the new tableau and the cell the violating entry
/// moved to.
fn j_step(t: &Tableau) -> Result<(Tableau, Cell)> {
    let c = t.minimal_semistandard_violation().ok_or(Error::NoViolation("semistandard"))?;
    let above = (c.0 > 0).then(|| (c.0 - 1, c.1));
    let left = (c.1 > 0).then(|| (c.0, c.1 - 1));
    let target = if t.entry_or_zero(left) > t.entry_or_zero(above) { left } else { above };
    let target = target.expect("a violation has a neighbour above or to the left");
    let mut out = t.clone();
    out.swap_cells(c, target);
    Ok((out, target))
}

/// Swaps the minimal semistandard violation with its left neighbour if that
/// is larger than the entry above it, and with the entry above otherwise.
pub fn j_move(t: &Tableau) -> Result<Tableau> {
    j_step(t).map(|(s, _)| s)
}

/// Swaps the maximal path violation with the smaller large entry among its
/// right and lower neighbours, preferring the lower one on ties.
pub fn j_inv_move(t: &Tableau) -> Result<Tableau> {
    let d = t.maximal_path_violation().ok_or(Error::NoViolation("path"))?;
    let large = |cell: Cell| t.get(cell).filter(|&e| t.is_large(e)).map(|e| (e, cell));
    let below = large((d.0 + 1, d.1));
    let right = large((d.0, d.1 + 1));
    let target = match (below, right) {
        (Some(b), Some(r)) => {
            if r.0 < b.0 {
                r.1
            } else {
                b.1
            }
        }
        (Some(b), None) => b.1,
        (None, Some(r)) => r.1,
        (None, None) => unreachable!("a path violation has a large neighbour"),
    };
    let mut out = t.clone();
    out.swap_cells(d, target);
    Ok(out)
}

/// Fills each cell whose upper edge is an east step of some `P_i` (with
/// `P_0` the upper boundary) with `i + 1` for the largest such `i`, and every
/// other cell of row `r` with `k + r`.
pub fn tab_of_tuple(tuple: &PathTuple) -> Result<Tableau> {
    let region = tuple.region();
    let shape = shape_of_region(region)?;
    let y = region.y();
    let k = tuple.k();
    let layers: Vec<Path> = (0..=k).map(|i| tuple.layer(i)).collect();
    let rows = shape
        .iter()
        .enumerate()
        .map(|(r, &len)| {
            let height = y - r as u32;
            (0..len)
                .map(|c| match (0..=k).rev().find(|&i| layers[i].heights()[c] == height) {
                    Some(i) => i as u32 + 1,
                    None => (k + r + 1) as u32,
                })
                .collect()
        })
        .collect();
    Tableau::new(rows, k as u32)
}

/// Reads a tuple back from a perflagged tableau without path violations:
/// in each column, the small entries `e_1 < ... < e_s` say which paths run
/// along the upper edges of their cells, and the remaining paths follow the
/// lower boundary.
pub fn tuple_of_tab(t: &Tableau, region: &Region) -> Result<PathTuple> {
    let shape = shape_of_region(region)?;
    if t.shape() != shape {
        return Err(Error::InvalidTableau(format!(
            "shape {:?} does not match the region's shape {shape:?}",
            t.shape()
        )));
    }
    if !t.is_perflagged() {
        return Err(Error::InvalidTableau("not perflagged".into()));
    }
    if !t.path_violations().is_empty() {
        return Err(Error::HasPathViolations);
    }
    let k = t.k() as usize;
    let y = region.y();
    let bottom = region.bottom_heights();
    let mut heights = vec![vec![0u32; region.x()]; k];
    for (c, &b) in bottom.iter().enumerate() {
        let mut next = 1usize;
        for r in 0..t.column_length(c) {
            let e = t.rows[r][c];
            if t.is_small(e) {
                for h in heights.iter_mut().take(e as usize - 1).skip(next - 1) {
                    h[c] = y - r as u32;
                }
                next = next.max(e as usize);
            }
        }
        for h in heights.iter_mut().skip(next - 1) {
            h[c] = b;
        }
    }
    let paths = heights.into_iter().map(|h| Path::from_heights(h, y)).collect();
    PathTuple::new(region.clone(), paths)
}

/// One application of `j` in a run of the bijection.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PsiStep {
    pub before: Tableau,
    pub violation: Cell,
    pub moved_to: Cell,
}

/// The full run: `Tab` of the tuple followed by `j` until no semistandard
/// violation is left.
pub fn psi_trace(tuple: &PathTuple) -> Result<(Vec<PsiStep>, Tableau)> {
    let mut t = tab_of_tuple(tuple)?;
    let mut steps = Vec::new();
    while let Some(c) = t.minimal_semistandard_violation() {
        let (next, moved_to) = j_step(&t)?;
        debug_assert!(next.potential() > t.potential());
        steps.push(PsiStep { before: t, violation: c, moved_to });
        t = next;
    }
    Ok((steps, t))
}

/// The weight-preserving bijection from tuples to flagged semistandard
/// tableaux: entry `i + 1` occurs `x - h_i` times for `i <= k`, and
/// entry `k + 1 + s` occurs `u_s` times.
pub fn psi(tuple: &PathTuple) -> Result<Tableau> {
    psi_trace(tuple).map(|(_, t)| t)
}

/// Inverse of [`psi`]: applies `j^-1` until no path violation is left, then
/// reads off the tuple.
pub fn psi_inv(t: &Tableau, region: &Region) -> Result<PathTuple> {
    if !t.is_k_flagged() || !t.is_semistandard() {
        return Err(Error::InvalidTableau("expected a k-flagged semistandard tableau".into()));
    }
    let cells = t.cells().count() as u64;
    let max_entry = t.cells().map(|(_, e)| e).max().unwrap_or(0) as u64;
    // each move lowers the potential, which stays positive
    let bound = (t.shape().len() as u64 + t.shape().first().copied().unwrap_or(0) as u64)
        * max_entry
        * cells;
    let mut s = t.clone();
    let mut iterations = 0u64;
    while s.maximal_path_violation().is_some() {
        let next = j_inv_move(&s)?;
        debug_assert!(next.potential() < s.potential());
        s = next;
        iterations += 1;
        if iterations > bound {
            return Err(Error::InvalidTableau("inverse moves did not terminate".into()));
        }
    }
    tuple_of_tab(&s, region)
}

/// The weight a tuple's image must have, of length `k + y`. Entry `i + 1`
/// fills the columns where `P_i` and `P_{i+1}` differ, so it occurs `x - h_i`
/// times; this is `lambda_1 - h_i` unless the lower boundary ends with east
/// steps along the top edge.
pub fn expected_weight(tuple: &PathTuple) -> Vec<u32> {
    let width = tuple.region().x() as u32;
    let mut w: Vec<u32> = tuple.h_stats().iter().map(|h| width - h).collect();
    w.extend(tuple.u_stats());
    w
}

/// Runs the bijection on a tuple and checks, at every `j` step that moves an
/// entry `e`, the facts its correctness rests on: the result stays
/// perflagged, the weight is kept, the potential `sum (i + j) e_ij` strictly
/// increases (each move sends the larger entry down or right), the only new
/// path violation with entry at least `e` is the moved cell, that cell is the
/// maximal path violation, new semistandard violations away from it hold
/// entries of at least `e`, and `j^-1` undoes the step.
/// Returns a description of every failed check.
pub fn audit_psi_run(tuple: &PathTuple) -> Result<Vec<String>> {
    let (steps, last) = psi_trace(tuple)?;
    let mut failures = Vec::new();
    let start = steps.first().map(|s| s.before.clone()).unwrap_or_else(|| last.clone());
    if !start.path_violations().is_empty() {
        failures.push("the starting tableau has path violations".to_string());
    }
    for (n, step) in steps.iter().enumerate() {
        let s = &step.before;
        let js = steps.get(n + 1).map(|s| &s.before).unwrap_or(&last);
        let e = s.get(step.violation).expect("cell exists");
        let mut fail = |what: &str| failures.push(format!("step {}: {what}\n{s}", n + 1));
        if !js.is_perflagged() {
            fail("result is not perflagged");
        }
        let len = s.k() as usize + s.shape().len();
        if js.weight(len) != s.weight(len) {
            fail("weight changed");
        }
        if js.potential() <= s.potential() {
            fail("potential did not increase");
        }
        let at_least_e = |t: &Tableau| -> BTreeSet<Cell> {
            t.path_violations().into_iter().filter(|&c| t.get(c).unwrap() >= e).collect()
        };
        let created: Vec<Cell> = at_least_e(js).difference(&at_least_e(s)).copied().collect();
        if created != vec![step.moved_to] {
            fail("new path violations are not exactly the moved cell");
        }
        let new_elsewhere = new_semistandard_violations(s, js, step.moved_to);
        if new_elsewhere.iter().any(|&c| js.get(c).unwrap() < e) {
            fail("a semistandard violation with entry below e appeared away from the moved cell");
        }
        if js.maximal_path_violation() != Some(step.moved_to) {
            fail("the moved cell is not the maximal path violation");
        }
        if j_inv_move(js).ok().as_ref() != Some(s) {
            fail("j^-1 does not undo the step");
        }
    }
    if !last.is_semistandard() || !last.is_k_flagged() {
        failures.push(format!("final tableau is not a flagged SSYT\n{last}"));
    }
    let w = expected_weight(tuple);
    if last.weight(w.len()) != w {
        failures.push(format!("weight {:?} differs from {w:?}", last.weight(w.len())));
    }
    Ok(failures)
}

/// Semistandard violations of `after` that `before` lacks, other than `moved_to`.
/// These do occur: moving a large entry down can put it left of a smaller
/// small entry.
pub fn new_semistandard_violations(before: &Tableau, after: &Tableau, moved_to: Cell) -> Vec<Cell> {
    let old: BTreeSet<Cell> = before.semistandard_violations().into_iter().collect();
    after
        .semistandard_violations()
        .into_iter()
        .filter(|c| !old.contains(c) && *c != moved_to)
        .collect()
}

/// Fills each cell with the number of paths passing above it, plus the row
/// number. A bijection onto flagged SSYT that ignores the statistics.
pub fn easy_bijection(tuple: &PathTuple) -> Result<Tableau> {
    let region = tuple.region();
    let shape = shape_of_region(region)?;
    let y = region.y();
    let rows = shape
        .iter()
        .enumerate()
        .map(|(r, &len)| {
            (0..len)
                .map(|c| {
                    let above = tuple.paths().iter().filter(|p| p.heights()[c] >= y - r as u32).count();
                    (above + r + 1) as u32
                })
                .collect()
        })
        .collect();
    Tableau::new(rows, tuple.k() as u32)
}
