//! Flagged semistandard tableaux and their generating functions.

use itertools::Itertools;

use super::Tableau;
use crate::error::{Error, Result};
use crate::poly::{default_var_names, MultiPoly};

/// All `k`-flagged SSYT of the given shape, in lexicographic order of their
/// row-major readings.
pub fn flagged_ssyt(shape: &[usize], k: u32) -> Vec<Tableau> {
    let shape: Vec<usize> = shape.iter().copied().filter(|&n| n > 0).collect();
    let cells: Vec<(usize, usize)> =
        shape.iter().enumerate().flat_map(|(r, &n)| (0..n).map(move |c| (r, c))).collect();
    let mut rows: Vec<Vec<u32>> = shape.iter().map(|&n| vec![0; n]).collect();
    let mut out = Vec::new();
    fill(&cells, 0, &mut rows, k, &mut out);
    out
}

fn fill(cells: &[(usize, usize)], i: usize, rows: &mut Vec<Vec<u32>>, k: u32, out: &mut Vec<Tableau>) {
    let Some(&(r, c)) = cells.get(i) else {
        out.push(Tableau { rows: rows.clone(), k });
        return;
    };
    let left = if c > 0 { rows[r][c - 1] } else { 1 };
    let below_above = if r > 0 { rows[r - 1][c] + 1 } else { 1 };
    for e in left.max(below_above)..=k + r as u32 + 1 {
        rows[r][c] = e;
        fill(cells, i + 1, rows, k, out);
    }
}

/// Sum of `x^S` over the `k`-flagged SSYT of the shape, by enumeration.
pub fn flagged_ssyt_generating_function(shape: &[usize], k: u32, nvars: usize) -> Result<MultiPoly> {
    let mut p = MultiPoly::zero(default_var_names(nvars));
    for t in flagged_ssyt(shape, k) {
        if t.cells().any(|(_, e)| e as usize > nvars) {
            return Err(Error::InvalidArgument(format!("entries exceed {nvars} variables")));
        }
        p.add_term(t.weight(nvars), 1)?;
    }
    Ok(p)
}

/// `h_n(x_1, ..., x_m)` as a polynomial in `nvars` variables.
pub fn complete_homogeneous(n: i64, m: usize, nvars: usize) -> MultiPoly {
    let vars = default_var_names(nvars);
    if n < 0 {
        return MultiPoly::zero(vars);
    }
    let mut p = MultiPoly::zero(vars);
    for combo in (0..m).combinations_with_replacement(n as usize) {
        let mut exp = vec![0; nvars];
        for v in combo {
            exp[v] += 1;
        }
        p.add_term(exp, 1).expect("arity matches");
    }
    p
}

/// The flagged Jacobi-Trudi determinant
/// `det(h_{lambda_i - i + j}(x_1, ..., x_{k+i}))`, expanded over permutations.
pub fn flagged_schur(shape: &[usize], k: u32, nvars: usize) -> Result<MultiPoly> {
    let shape: Vec<usize> = shape.iter().copied().filter(|&n| n > 0).collect();
    let l = shape.len();
    if nvars < k as usize + l {
        return Err(Error::InvalidArgument(format!(
            "need at least {} variables, got {nvars}",
            k as usize + l
        )));
    }
    let entry = |i: usize, j: usize| {
        complete_homogeneous(shape[i] as i64 - i as i64 + j as i64, k as usize + i + 1, nvars)
    };
    let matrix: Vec<Vec<MultiPoly>> = (0..l).map(|i| (0..l).map(|j| entry(i, j)).collect()).collect();
    let vars = default_var_names(nvars);
    let mut det = MultiPoly::zero(vars.clone());
    for perm in (0..l).permutations(l) {
        let inversions = (0..l).tuple_combinations().filter(|&(a, b)| perm[a] > perm[b]).count();
        let mut term = MultiPoly::one(vars.clone());
        for (i, &j) in perm.iter().enumerate() {
            term = &term * &matrix[i][j];
            if term.is_zero() {
                break;
            }
        }
        det = if inversions % 2 == 0 { &det + &term } else { &det - &term };
    }
    Ok(det)
}
