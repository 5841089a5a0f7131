//! Exhaustive enumeration of paths and nested path tuples in a region, and a
//! determinant count for the tuples.

use crate::error::{Error, Result};
use crate::ktuple::PathTuple;
use crate::numeric::determinant;
use crate::path::{Path, Region};

/// Which paths of a region to enumerate.
#[derive(Clone, Debug, Default)]
pub struct PathFilter {
    /// Allow south steps (the path set is then a product of column ranges).
    pub south: bool,
    /// Keep only paths with exactly this 1-based descent set.
    pub descents: Option<Vec<usize>>,
    /// Keep only paths with exactly these noncontact heights.
    pub noncontact: Option<Vec<u32>>,
}

impl PathFilter {
    pub fn monotone() -> Self {
        Self::default()
    }

    pub fn with_south() -> Self {
        PathFilter { south: true, ..Self::default() }
    }

    fn accepts(&self, region: &Region, p: &Path) -> bool {
        if let Some(d) = &self.descents {
            if &p.descent_set() != d {
                return false;
            }
        }
        if let Some(h) = &self.noncontact {
            if &region.noncontact_heights(p).expect("enumerated path lies in region") != h {
                return false;
            }
        }
        true
    }
}

/// Odometer over height vectors in lexicographic order.
struct Heights<'a> {
    region: &'a Region,
    south: bool,
    cur: Option<Vec<u32>>,
    started: bool,
}

impl Iterator for Heights<'_> {
    type Item = Vec<u32>;

    fn next(&mut self) -> Option<Vec<u32>> {
        if !self.started {
            self.started = true;
            self.cur = Some(self.region.bottom_heights().to_vec());
            return self.cur.clone();
        }
        let cur = self.cur.as_mut()?;
        let top = self.region.top_heights();
        let bottom = self.region.bottom_heights();
        let Some(i) = (0..cur.len()).rev().find(|&i| cur[i] < top[i]) else {
            self.cur = None;
            return None;
        };
        cur[i] += 1;
        for j in i + 1..cur.len() {
            cur[j] = if self.south { bottom[j] } else { bottom[j].max(cur[j - 1]) };
        }
        Some(cur.clone())
    }
}

/// Paths of the region accepted by the filter, in lexicographic order of
/// their height vectors.
pub fn enumerate_paths<'a>(
    region: &'a Region,
    filter: &'a PathFilter,
) -> impl Iterator<Item = Path> + 'a {
    Heights { region, south: filter.south, cur: None, started: false }
        .map(move |h| Path::from_heights(h, region.y()))
        .filter(move |p| filter.accepts(region, p))
}

/// All monotone paths of the region.
pub fn monotone_paths(region: &Region) -> Vec<Path> {
    enumerate_paths(region, &PathFilter::monotone()).collect()
}

/// Weakly nested `k`-tuples `P_1 >= ... >= P_k` in the region, in
/// lexicographic order of the concatenated height vectors.
pub fn enumerate_tuples(region: &Region, k: usize) -> Vec<PathTuple> {
    let mut out = Vec::new();
    let mut acc = Vec::with_capacity(k);
    tuples_below(region, k, region.top_heights().to_vec(), &mut acc, &mut out);
    out
}

fn tuples_below(
    region: &Region,
    k: usize,
    upper: Vec<u32>,
    acc: &mut Vec<Path>,
    out: &mut Vec<PathTuple>,
) {
    if acc.len() == k {
        out.push(PathTuple::new_unchecked(region.clone(), acc.clone()));
        return;
    }
    let sub = Region::from_heights(upper, region.bottom_heights().to_vec(), region.y())
        .expect("nested path stays above the lower boundary");
    for p in monotone_paths(&sub) {
        let h = p.heights().to_vec();
        acc.push(p);
        tuples_below(region, k, h, acc, out);
        acc.pop();
    }
}

/// Number of weakly nested `k`-tuples by a transfer count over columns whose
/// states are the `k` heights in one column.
pub fn count_tuples_by_columns(region: &Region, k: usize) -> u128 {
    fn states(lo: u32, hi: u32, k: usize) -> Vec<Vec<u32>> {
        // non-increasing vectors of length k with entries in [lo, hi]
        let mut out = vec![vec![]];
        for _ in 0..k {
            let mut next = Vec::new();
            for s in &out {
                let cap = s.last().copied().unwrap_or(hi);
                for h in lo..=cap {
                    let mut t = s.clone();
                    t.push(h);
                    next.push(t);
                }
            }
            out = next;
        }
        out
    }
    let mut prev: Vec<(Vec<u32>, u128)> = vec![(vec![0; k], 1)];
    for i in 0..region.x() {
        let cur = states(region.bottom_heights()[i], region.top_heights()[i], k);
        prev = cur
            .into_iter()
            .map(|s| {
                let n: u128 = prev
                    .iter()
                    .filter(|(p, _)| p.iter().zip(&s).all(|(a, b)| a <= b))
                    .map(|(_, c)| c)
                    .sum();
                (s, n)
            })
            .collect();
    }
    prev.iter().map(|(_, c)| c).sum()
}

/// Number of weakly nested `k`-tuples as a determinant of single-path
/// counts.
///
/// Path `P_i` is translated by `(k - i) * (-1, 1)`, which turns weak nesting
/// into vertex-disjointness. All translated paths live in one graph: lattice
/// points weakly above `B` and weakly below `T` translated like `P_1`.
pub fn lgv_count(region: &Region, k: usize) -> Result<i128> {
    if k == 0 {
        return Err(Error::InvalidArgument("k must be at least 1".into()));
    }
    let x = region.x() as i64;
    let y = region.y() as i64;
    let shift = k as i64 - 1;
    let top = region.top_heights();
    let bottom = region.bottom_heights();
    let low = |px: i64| -> i64 {
        if px <= 0 {
            0
        } else {
            bottom[px as usize - 1] as i64
        }
    };
    let high = |px: i64| -> i64 {
        let q = px + shift;
        if q > x {
            i64::MAX
        } else if q < x {
            top[q as usize] as i64 + shift
        } else {
            y + shift
        }
    };
    let allowed = |px: i64, py: i64| py >= low(px) && py <= high(px);
    let width = (x + shift + 1) as usize;
    let height = (y + shift + 1) as usize;
    let count = |from: (i64, i64), to: (i64, i64)| -> i128 {
        if !allowed(from.0, from.1) || !allowed(to.0, to.1) {
            return 0;
        }
        let mut dp = vec![vec![0i128; height]; width];
        for px in from.0..=to.0 {
            for py in from.1..=to.1 {
                let (cx, cy) = ((px + shift) as usize, py as usize);
                if !allowed(px, py) {
                    continue;
                }
                dp[cx][cy] = if (px, py) == from {
                    1
                } else {
                    let w = if px > from.0 { dp[cx - 1][cy] } else { 0 };
                    let s = if py > from.1 { dp[cx][cy - 1] } else { 0 };
                    w + s
                };
            }
        }
        if to.0 < from.0 || to.1 < from.1 {
            0
        } else {
            dp[(to.0 + shift) as usize][to.1 as usize]
        }
    };
    let starts: Vec<(i64, i64)> = (0..k as i64).map(|i| (i - shift, shift - i)).collect();
    let ends: Vec<(i64, i64)> = (0..k as i64).map(|i| (x + i - shift, y + shift - i)).collect();
    let m: Vec<Vec<i128>> = starts
        .iter()
        .map(|&a| ends.iter().map(|&e| count(a, e)).collect())
        .collect();
    Ok(determinant(&m))
}

/// All monotone paths from the origin to `(x, y)`.
pub fn all_paths(x: usize, y: u32) -> Vec<Path> {
    let top = Path::from_heights(vec![y; x], y);
    let bottom = Path::from_heights(vec![0; x], y);
    monotone_paths(&Region::new(&top, &bottom).expect("box region"))
}

/// Every region with `x + y <= max_size` (boundaries compared by heights).
pub fn all_regions(max_size: usize) -> Vec<Region> {
    let mut out = Vec::new();
    for n in 0..=max_size {
        for x in 0..=n {
            let y = (n - x) as u32;
            let paths = all_paths(x, y);
            for t in &paths {
                for b in &paths {
                    if let Ok(r) = Region::new(t, b) {
                        out.push(r);
                    }
                }
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn region(t: &str, b: &str) -> Region {
        Region::new(&Path::parse(t).unwrap(), &Path::parse(b).unwrap()).unwrap()
    }

    #[test]
    fn small_region_has_fifteen_paths() {
        let r = region("NNENEE", "ENEENN");
        let ps = monotone_paths(&r);
        assert_eq!(ps.len(), 15);
        assert!(ps.windows(2).all(|w| w[0].heights() < w[1].heights()));
        assert_eq!(ps.first().unwrap(), &r.bottom_path());
        assert_eq!(ps.last().unwrap(), &r.top_path());
    }

    #[test]
    fn south_paths_form_a_product() {
        let r = region("NNENEE", "ENEENN");
        let n = enumerate_paths(&r, &PathFilter::with_south()).count();
        assert_eq!(n, 3 * 3 * 3);
    }

    #[test]
    fn filters() {
        let r = region("NNNEEENEE", "EENEEENNN");
        let f = PathFilter {
            south: true,
            descents: Some(vec![2]),
            noncontact: Some(vec![2, 2, 3]),
        };
        let ps: Vec<Path> = enumerate_paths(&r, &f).collect();
        assert!(ps.contains(&Path::from_heights(vec![2, 3, 2, 3, 4], 4)));
        assert!(ps.iter().all(|p| p.descent_set() == vec![2]));
    }

    #[test]
    fn tuples_small() {
        let r = region("NE", "EN");
        let ts = enumerate_tuples(&r, 2);
        assert_eq!(ts.len(), 3);
        assert_eq!(lgv_count(&r, 2).unwrap(), 3);
        assert_eq!(count_tuples_by_columns(&r, 2), 3);
    }

    #[test]
    fn lgv_matches_enumeration() {
        for r in all_regions(7) {
            for k in 1..=3 {
                let n = enumerate_tuples(&r, k).len() as i128;
                assert_eq!(lgv_count(&r, k).unwrap(), n, "{r} k={k}");
                assert_eq!(count_tuples_by_columns(&r, k) as i128, n, "{r} k={k}");
            }
        }
    }

    #[test]
    fn region_counts() {
        let rs = all_regions(2);
        // x+y=0: 1, x+y=1: 2, x+y=2: (2,0),(0,2) one each, (1,1): 3 pairs
        assert_eq!(rs.len(), 1 + 2 + 1 + 1 + 3);
    }
}
