//! Watermelon configurations: `k` non-intersecting paths of up and down
//! steps, the `i`-th (from 0) running from `(0, 2i)` to `(x, y + 2i)` and
//! staying weakly above the axis.

use serde::Serialize;

use crate::enumerate::enumerate_tuples;
use crate::error::{Error, Result};
use crate::ktuple::PathTuple;
use crate::path::{Path, Region};

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct Watermelon {
    x: usize,
    y: u32,
    /// Up steps are `true`; `paths[0]` is the bottom path.
    paths: Vec<Vec<bool>>,
}

fn heights_of(steps: &[bool], start: i64) -> Vec<i64> {
    let mut out = Vec::with_capacity(steps.len() + 1);
    let mut h = start;
    out.push(h);
    for &up in steps {
        h += if up { 1 } else { -1 };
        out.push(h);
    }
    out
}

impl Watermelon {
    pub fn new(x: usize, y: u32, paths: Vec<Vec<bool>>) -> Result<Self> {
        for (i, p) in paths.iter().enumerate() {
            if p.len() != x {
                return Err(Error::InvalidArgument(format!("path {i} has {} steps, expected {x}", p.len())));
            }
            let h = heights_of(p, 2 * i as i64);
            if h[x] != y as i64 + 2 * i as i64 {
                return Err(Error::InvalidArgument(format!("path {i} ends at height {}", h[x])));
            }
            if h.iter().any(|&v| v < 0) {
                return Err(Error::InvalidArgument(format!("path {i} goes below the axis")));
            }
            if i > 0 {
                let below = heights_of(&paths[i - 1], 2 * (i as i64 - 1));
                if h.iter().zip(&below).any(|(a, b)| a <= b) {
                    return Err(Error::InvalidArgument(format!("paths {} and {i} meet", i - 1)));
                }
            }
        }
        Ok(Watermelon { x, y, paths })
    }

    /// Paths as `U`/`D` strings, bottom path first.
    pub fn parse(x: usize, y: u32, paths: &[&str]) -> Result<Self> {
        let steps = paths
            .iter()
            .map(|s| {
                s.chars()
                    .map(|c| match c {
                        'U' => Ok(true),
                        'D' => Ok(false),
                        _ => Err(Error::Parse(format!("watermelon steps are U and D, got {c:?}"))),
                    })
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        Watermelon::new(x, y, steps)
    }

    pub fn k(&self) -> usize {
        self.paths.len()
    }

    pub fn step_strings(&self) -> Vec<String> {
        self.paths.iter().map(|p| p.iter().map(|&u| if u { 'U' } else { 'D' }).collect()).collect()
    }

    /// Number of times the bottom path comes back to the axis.
    pub fn returns(&self) -> u32 {
        match self.paths.first() {
            Some(p) => heights_of(p, 0)[1..].iter().filter(|&&h| h == 0).count() as u32,
            None => 0,
        }
    }
}

/// `T = N^{(x+y)/2} E^{(x-y)/2}` over `B = (NE)^{(x-y)/2} N^y`.
pub fn watermelon_region(x: usize, y: u32) -> Result<Region> {
    if !(x + y as usize).is_multiple_of(2) || (y as usize) > x {
        return Err(Error::InvalidArgument(format!("length {x} and deviation {y} differ in parity or y > x")));
    }
    let m = (x - y as usize) / 2;
    let top = ((x + y as usize) / 2) as u32;
    Region::from_heights(vec![top; m], (1..=m as u32).collect(), top)
}

fn to_path(steps: &[bool]) -> Path {
    let s: String = steps.iter().map(|&u| if u { 'N' } else { 'E' }).collect();
    Path::parse(&s).expect("north and east steps")
}

/// Up steps become north steps and down steps east steps; the top path
/// becomes `P_1`. Returns to the axis become bottom contacts of `P_k`.
pub fn watermelon_to_tuple(w: &Watermelon) -> Result<PathTuple> {
    let region = watermelon_region(w.x, w.y)?;
    let paths = w.paths.iter().rev().map(|p| to_path(p)).collect();
    PathTuple::new(region, paths)
}

pub fn tuple_to_watermelon(t: &PathTuple) -> Result<Watermelon> {
    let region = t.region();
    let (m, top) = (region.x(), region.y());
    if top < m as u32 {
        return Err(Error::InvalidArgument("region is not a watermelon region".into()));
    }
    let (x, y) = (m + top as usize, top - m as u32);
    if &watermelon_region(x, y)? != region {
        return Err(Error::InvalidArgument("region is not a watermelon region".into()));
    }
    let paths = t
        .paths()
        .iter()
        .rev()
        .map(|p| p.to_step_string().chars().map(|c| c == 'N').collect())
        .collect();
    Watermelon::new(x, y, paths)
}

/// Per number of returns `e`: watermelons whose bottom path returns `e`
/// times, tuples of the region whose upper path has `e` top contacts, and
/// families whose lower `k - 1` paths form a watermelon while the top path
/// runs from `(0, 2k - 2)` to `(x - e - 1, y + 2k + e - 3)` above them.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ReturnsRow {
    pub e: u32,
    pub watermelons: u64,
    pub tuples_with_top_contacts: u64,
    pub truncated_families: u64,
}

pub fn returns_table(x: usize, y: u32, k: usize) -> Result<Vec<ReturnsRow>> {
    if k == 0 || x == 0 {
        return Err(Error::InvalidArgument("need k >= 1 and x >= 1".into()));
    }
    let region = watermelon_region(x, y)?;
    let m = region.x() as u32;
    let full = enumerate_tuples(&region, k);
    let lower = enumerate_tuples(&region, k - 1);
    let mut rows = Vec::new();
    for e in 0..=m {
        let mut watermelons = 0;
        let mut tuples_with_top_contacts = 0;
        for t in &full {
            let w = tuple_to_watermelon(t)?;
            watermelons += u64::from(w.returns() == e);
            let top = region.contact_stats(&t.paths()[0])?.t;
            tuples_with_top_contacts += u64::from(top == e);
        }
        let truncated_families = lower.iter().map(|t| top_paths_above(t, x, y, k, e)).sum::<Result<u64>>()?;
        rows.push(ReturnsRow { e, watermelons, tuples_with_top_contacts, truncated_families });
    }
    Ok(rows)
}

/// Up/down paths of length `x - e - 1` from height `2k - 2` to
/// `y + 2k + e - 3`, at least 2 above the top path of the lower watermelon
/// (or weakly above the axis when there is none).
fn top_paths_above(lower: &PathTuple, x: usize, y: u32, k: usize, e: u32) -> Result<u64> {
    let Some(len) = x.checked_sub(e as usize + 1) else { return Ok(0) };
    let floor: Vec<i64> = match lower.paths().first() {
        Some(p) => {
            let w = tuple_to_watermelon(lower)?;
            let steps = &w.paths[w.k() - 1];
            debug_assert_eq!(to_path(steps), *p);
            heights_of(steps, 2 * (k as i64 - 2)).iter().map(|h| h + 2).collect()
        }
        None => vec![0; x + 1],
    };
    let start = 2 * k as i64 - 2;
    let end = y as i64 + 2 * k as i64 + e as i64 - 3;
    let max_h = start + len as i64 + 1;
    let mut ways = vec![0u64; max_h as usize + 1];
    if start < floor[0] {
        return Ok(0);
    }
    ways[start as usize] = 1;
    for t in 1..=len {
        let mut next = vec![0u64; ways.len()];
        for h in floor[t]..max_h {
            let h = h.max(0) as usize;
            let from_below = if h > 0 { ways[h - 1] } else { 0 };
            let from_above = ways.get(h + 1).copied().unwrap_or(0);
            next[h] = from_below + from_above;
        }
        ways = next;
    }
    Ok(if end >= 0 && (end as usize) < ways.len() { ways[end as usize] } else { 0 })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn single_path_examples() {
        let w = Watermelon::parse(4, 0, &["UDUD"]).unwrap();
        let t = watermelon_to_tuple(&w).unwrap();
        assert_eq!(t.paths()[0].heights(), &[1, 2]);
        assert_eq!(w.returns(), 2);
        assert_eq!(t.region().contact_stats(&t.paths()[0]).unwrap().b, 2);
        let w = Watermelon::parse(4, 0, &["UUDD"]).unwrap();
        let t = watermelon_to_tuple(&w).unwrap();
        assert_eq!(t.paths()[0].heights(), &[2, 2]);
        assert_eq!(w.returns(), 1);
        assert_eq!(tuple_to_watermelon(&t).unwrap(), w);
        assert_eq!(Watermelon::parse(2, 0, &["UD"]).unwrap().returns(), 1);
    }

    #[test]
    fn invalid_watermelons() {
        assert!(Watermelon::parse(2, 0, &["DU"]).is_err());
        assert!(Watermelon::parse(2, 0, &["UD", "DU"]).is_err());
        assert!(Watermelon::parse(2, 0, &["UD", "UD"]).is_ok());
        assert!(watermelon_region(3, 0).is_err());
    }

    #[test]
    fn both_sides_agree() {
        for x in 1..=8 {
            for y in (x % 2..=x).step_by(2) {
                for k in 1..=2 {
                    for row in returns_table(x, y as u32, k).unwrap() {
                        assert_eq!(row.watermelons, row.tuples_with_top_contacts, "{x} {y} {k} {row:?}");
                        assert_eq!(row.watermelons, row.truncated_families, "{x} {y} {k} {row:?}");
                    }
                }
            }
        }
    }
}
