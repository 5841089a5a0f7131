//! Young tableaux (English notation) with a flag bound `k`: entries of row
//! `r` (1-based) are at most `k + r`.
//!
//! Cells are addressed by 0-based `(row, col)` pairs.

mod psi;
mod schur;

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::path::Region;

pub use psi::{
    audit_psi_run, easy_bijection, expected_weight, j_inv_move, j_move, new_semistandard_violations, psi, psi_inv,
    psi_trace, tab_of_tuple, tuple_of_tab, PsiStep, Violations,
};
pub use schur::{complete_homogeneous, flagged_schur, flagged_ssyt, flagged_ssyt_generating_function};

pub type Cell = (usize, usize);

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Tableau {
    rows: Vec<Vec<u32>>,
    k: u32,
}

/// Shape of the region between `N^y E^x` and `B`: row `r` from the top has
/// one cell per column whose lower boundary step lies at height at most
/// `y - r`. Empty rows are dropped.
pub fn shape_of_region(region: &Region) -> Result<Vec<usize>> {
    let y = region.y();
    if region.top_heights().iter().any(|&t| t != y) {
        return Err(Error::NotStaircase);
    }
    Ok((1..=y)
        .map(|r| region.bottom_heights().iter().filter(|&&b| b + r <= y).count())
        .take_while(|&n| n > 0)
        .collect())
}

impl Tableau {
    pub fn new(rows: Vec<Vec<u32>>, k: u32) -> Result<Self> {
        let rows: Vec<Vec<u32>> = rows.into_iter().filter(|r| !r.is_empty()).collect();
        if rows.windows(2).any(|w| w[0].len() < w[1].len()) {
            return Err(Error::InvalidTableau("row lengths must weakly decrease".into()));
        }
        if rows.iter().flatten().any(|&e| e == 0) {
            return Err(Error::InvalidTableau("entries are positive".into()));
        }
        Ok(Tableau { rows, k })
    }

    /// Parses rows of space-separated integers, one row per line. Rows may
    /// also be separated by `/`, and a row without spaces is read digit by
    /// digit (`"1122/333"`).
    pub fn parse(s: &str, k: u32) -> Result<Self> {
        let rows = s
            .split(['\n', '/'])
            .map(str::trim)
            .filter(|l| !l.is_empty())
            .map(|line| {
                let tokens: Vec<String> = if line.contains(char::is_whitespace) {
                    line.split_whitespace().map(String::from).collect()
                } else {
                    line.chars().map(String::from).collect()
                };
                tokens
                    .iter()
                    .map(|t| t.parse::<u32>().map_err(|e| Error::Parse(format!("{t:?}: {e}"))))
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        Tableau::new(rows, k)
    }

    pub fn rows(&self) -> &[Vec<u32>] {
        &self.rows
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn shape(&self) -> Vec<usize> {
        self.rows.iter().map(Vec::len).collect()
    }

    pub fn get(&self, (r, c): Cell) -> Option<u32> {
        self.rows.get(r).and_then(|row| row.get(c)).copied()
    }

    pub(crate) fn swap_cells(&mut self, a: Cell, b: Cell) {
        let (va, vb) = (self.rows[a.0][a.1], self.rows[b.0][b.1]);
        self.rows[a.0][a.1] = vb;
        self.rows[b.0][b.1] = va;
    }

    pub fn cells(&self) -> impl Iterator<Item = (Cell, u32)> + '_ {
        self.rows
            .iter()
            .enumerate()
            .flat_map(|(r, row)| row.iter().enumerate().map(move |(c, &e)| ((r, c), e)))
    }

    pub fn column_length(&self, c: usize) -> usize {
        self.rows.iter().take_while(|row| row.len() > c).count()
    }

    pub fn is_small(&self, e: u32) -> bool {
        e <= self.k + 1
    }

    pub fn is_large(&self, e: u32) -> bool {
        e > self.k + 1
    }

    /// The flag bound of 0-based row `r`.
    pub fn row_max(&self, r: usize) -> u32 {
        self.k + r as u32 + 1
    }

    pub fn is_maximal(&self, (r, _): Cell, e: u32) -> bool {
        e == self.row_max(r)
    }

    pub fn is_k_flagged(&self) -> bool {
        self.cells().all(|((r, _), e)| e >= 1 && e <= self.row_max(r))
    }

    pub fn is_semistandard(&self) -> bool {
        self.cells().all(|((r, c), e)| {
            (c == 0 || self.rows[r][c - 1] <= e) && (r == 0 || self.rows[r - 1][c] < e)
        })
    }

    /// Counts of the entries `1..=len`.
    pub fn weight(&self, len: usize) -> Vec<u32> {
        let mut w = vec![0; len];
        for (_, e) in self.cells() {
            if (e as usize) <= len {
                w[e as usize - 1] += 1;
            }
        }
        w
    }

    /// `sum (i + j) e_ij` over cells, 1-based row `i` and column `j`.
    pub fn potential(&self) -> u64 {
        self.cells().map(|((r, c), e)| (r + c + 2) as u64 * e as u64).sum()
    }

    /// Whether the tableau is `k`-flagged and, among pairs of entries with
    /// the second weakly southeast of the first, small entries and large
    /// entries are each semistandard, except that equal small entries in
    /// different rows are allowed when a chain links them.
    pub fn is_perflagged(&self) -> bool {
        if !self.is_k_flagged() {
            return false;
        }
        let cells: Vec<(Cell, u32)> = self.cells().collect();
        for &(a, e1) in &cells {
            for &(b, e2) in &cells {
                if b == a || b.0 < a.0 || b.1 < a.1 {
                    continue;
                }
                let (s1, s2) = (self.is_small(e1), self.is_small(e2));
                if s1 != s2 {
                    continue;
                }
                if a.0 == b.0 {
                    if e1 > e2 {
                        return false;
                    }
                } else if !s1 {
                    if e1 >= e2 {
                        return false;
                    }
                } else if e1 > e2 || (e1 == e2 && !self.has_chain(a, b)) {
                    return false;
                }
            }
        }
        true
    }

    /// A chain from `a` down to the row of `b`: one cell per row, each weakly
    /// east of the previous, each holding an entry no larger than the entry
    /// just northeast of it, ending strictly west of `b`.
    fn has_chain(&self, a: Cell, b: Cell) -> bool {
        let mut min_col = a.1;
        for r in a.0 + 1..=b.0 {
            let found = (min_col..self.rows[r].len()).find(|&c| {
                self.get((r - 1, c + 1)).is_some_and(|ne| self.rows[r][c] <= ne)
            });
            match found {
                Some(c) => min_col = c,
                None => return false,
            }
        }
        min_col < b.1
    }
}

impl fmt::Display for Tableau {
    /// Rows of space-separated entries, one row per line.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, row) in self.rows.iter().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            let s: Vec<String> = row.iter().map(|e| e.to_string()).collect();
            f.write_str(&s.join(" "))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::path::Path;

    #[test]
    fn parse_and_display() {
        let t = Tableau::parse("1122/333/22/5", 1).unwrap();
        assert_eq!(t.shape(), vec![4, 3, 2, 1]);
        assert_eq!(t.to_string(), "1 1 2 2\n3 3 3\n2 2\n5");
        assert_eq!(Tableau::parse(&t.to_string(), 1).unwrap(), t);
        assert!(Tableau::parse("12/345", 1).is_err());
    }

    #[test]
    fn perflagged_example_with_chain() {
        let t = Tableau::parse("1111/2222/3444/4556/6663", 2).unwrap();
        assert!(t.is_perflagged());
        // breaking the chain: the cell used in the last row is no longer
        // bounded by its northeast neighbour
        let broken = Tableau::parse("1111/2222/3444/4556/6773", 2).unwrap();
        assert!(broken.is_k_flagged());
        assert!(!broken.is_perflagged());
    }

    #[test]
    fn equal_small_entries_in_one_column_are_rejected() {
        let t = Tableau::parse("12/13", 1).unwrap();
        assert!(!t.is_perflagged());
    }

    #[test]
    fn flagged_ssyt_are_perflagged() {
        for shape in [vec![3, 2, 1], vec![2, 2, 2], vec![4, 1]] {
            for k in 0..=2 {
                for t in flagged_ssyt(&shape, k) {
                    assert!(t.is_perflagged(), "{t}");
                    assert!(t.is_semistandard());
                }
            }
        }
    }

    #[test]
    fn region_shape() {
        let r = Region::new(&Path::parse("NNNNNEEEEEE").unwrap(), &Path::parse("ENEENNENEEN").unwrap())
            .unwrap();
        assert_eq!(shape_of_region(&r).unwrap(), vec![6, 4, 3, 3, 1]);
        let r = Region::new(&Path::parse("NENE").unwrap(), &Path::parse("EENN").unwrap()).unwrap();
        assert_eq!(shape_of_region(&r), Err(Error::NotStaircase));
    }
}
