//! Permutations as paths with south steps: right-to-left minima and maxima
//! become top and bottom contacts, and occurrences of the dashed pattern
//! 13-2 become descents.

use std::collections::BTreeMap;
use std::fmt;

use itertools::Itertools;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::path::{Path, Region};
use crate::swap::swapall;

/// One-line notation of a permutation of `1..=n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Permutation(Vec<u32>);

impl Permutation {
    pub fn new(values: Vec<u32>) -> Result<Self> {
        let n = values.len() as u32;
        let mut seen = vec![false; values.len()];
        for &v in &values {
            if v == 0 || v > n || std::mem::replace(&mut seen[v as usize - 1], true) {
                return Err(Error::InvalidArgument(format!("{values:?} is not a permutation")));
            }
        }
        Ok(Permutation(values))
    }

    /// Space- or comma-separated values, or a bare digit string when `n < 10`.
    pub fn parse(s: &str) -> Result<Self> {
        let s = s.trim();
        let tokens: Vec<&str> = if s.contains([' ', ',']) {
            s.split([' ', ',']).filter(|t| !t.is_empty()).collect()
        } else {
            s.split("").filter(|t| !t.is_empty()).collect()
        };
        let values = tokens
            .iter()
            .map(|t| t.parse::<u32>().map_err(|e| Error::Parse(format!("{t:?}: {e}"))))
            .collect::<Result<Vec<_>>>()?;
        Permutation::new(values)
    }

    pub fn values(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn all(n: usize) -> impl Iterator<Item = Permutation> {
        (1..=n as u32).permutations(n).map(Permutation)
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sep = if self.0.len() < 10 { "" } else { " " };
        f.write_str(&self.0.iter().map(u32::to_string).join(sep))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct PermStats {
    pub rl_min: u32,
    pub rl_max: u32,
    /// 1-based positions `i` with some `j > i + 1` and
    /// `pi(i) < pi(j) < pi(i + 1)`.
    pub pattern_positions: Vec<usize>,
}

pub fn perm_stats(pi: &Permutation) -> PermStats {
    let v = &pi.0;
    let n = v.len();
    let rl_min = (0..n).filter(|&i| v[i + 1..].iter().all(|&w| v[i] < w)).count() as u32;
    let rl_max = (0..n).filter(|&i| v[i + 1..].iter().all(|&w| v[i] > w)).count() as u32;
    let pattern_positions = (0..n.saturating_sub(2))
        .filter(|&i| v[i + 2..].iter().any(|&w| v[i] < w && w < v[i + 1]))
        .map(|i| i + 1)
        .collect();
    PermStats { rl_min, rl_max, pattern_positions }
}

/// `T = N^n E^n` over `B = (NE)^n`: column `i` (1-based) offers exactly the
/// `n + 1 - i` heights `i..=n`.
pub fn permutation_region(n: usize) -> Region {
    let y = n as u32;
    Region::from_heights(vec![y; n], (1..=y).collect(), y).expect("nested boundaries")
}

/// East step `i` at height `y_i` picks the `(n + 1 - y_i)`-th smallest value
/// not used yet.
pub fn perm_of_path(path: &Path) -> Result<Permutation> {
    let n = path.x();
    permutation_region(n).check_contains(path)?;
    let mut remaining: Vec<u32> = (1..=n as u32).collect();
    let values = path
        .heights()
        .iter()
        .map(|&h| remaining.remove((n as u32 - h) as usize))
        .collect();
    Ok(Permutation(values))
}

pub fn path_of_perm(pi: &Permutation) -> Path {
    let n = pi.len();
    let mut remaining: Vec<u32> = (1..=n as u32).collect();
    let heights = pi
        .0
        .iter()
        .map(|v| {
            let rank = remaining.iter().position(|w| w == v).expect("value unused so far");
            remaining.remove(rank);
            (n - rank) as u32
        })
        .collect();
    Path::from_heights(heights, n as u32)
}

/// Carries the top/bottom involution over to permutations. The image keeps
/// the 13-2 positions and exchanges the numbers of right-to-left minima and
/// maxima.
pub fn exchange_rl_extrema(pi: &Permutation) -> Result<Permutation> {
    let region = permutation_region(pi.len());
    perm_of_path(&swapall(&region, &path_of_perm(pi))?)
}

/// Checks, for every permutation of `1..=n`, that the path correspondence is
/// invertible and matches statistics, that every path of the region arises,
/// that the transported involution exchanges `(rl_min, rl_max)` and keeps
/// the 13-2 positions, and that within each class of 13-2 positions the
/// joint distribution of `(rl_min, rl_max)` is symmetric. Returns the
/// failures found.
pub fn permutation_correspondence_check(n: usize) -> Result<Vec<String>> {
    let region = permutation_region(n);
    let mut failures = Vec::new();
    let mut by_class: BTreeMap<Vec<usize>, BTreeMap<(u32, u32), u64>> = BTreeMap::new();
    let mut count = 0u64;
    for pi in Permutation::all(n) {
        count += 1;
        let p = path_of_perm(&pi);
        let st = perm_stats(&pi);
        if perm_of_path(&p)? != pi {
            failures.push(format!("{pi}: round trip fails"));
        }
        let c = region.contact_stats(&p)?;
        if (c.t, c.b) != (st.rl_min, st.rl_max) || p.descent_set() != st.pattern_positions {
            failures.push(format!("{pi}: statistics differ from path {p}"));
        }
        let img = exchange_rl_extrema(&pi)?;
        let si = perm_stats(&img);
        if (si.rl_min, si.rl_max) != (st.rl_max, st.rl_min) || si.pattern_positions != st.pattern_positions {
            failures.push(format!("{pi} -> {img}: involution does not exchange the extrema"));
        }
        *by_class.entry(st.pattern_positions).or_default().entry((st.rl_min, st.rl_max)).or_default() += 1;
    }
    let paths = crate::enumerate::enumerate_paths(&region, &crate::enumerate::PathFilter::with_south()).count();
    if paths as u64 != count {
        failures.push(format!("{paths} paths for {count} permutations"));
    }
    for (class, dist) in &by_class {
        if dist.iter().any(|(&(a, b), &m)| dist.get(&(b, a)) != Some(&m)) {
            failures.push(format!("class {class:?}: extrema distribution is not symmetric"));
        }
    }
    Ok(failures)
}
