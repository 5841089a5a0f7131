//! Regions where contact counts depend only on the total number of contacts,
//! and the closed formulas available for two families of boundaries.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::enumerate::monotone_paths;
use crate::error::{Error, Result};
use crate::numeric::binomial;
use crate::path::{Path, Region};

/// Number of monotone paths of the region with each `(t, b)`.
pub fn contact_counts(region: &Region) -> BTreeMap<(u32, u32), u64> {
    let mut counts = BTreeMap::new();
    for p in monotone_paths(region) {
        let s = region.contact_stats(&p).expect("enumerated path lies in region");
        *counts.entry((s.t, s.b)).or_insert(0) += 1;
    }
    counts
}

/// Whether `count(i, j)` depends only on `i + j`, zero counts included.
pub fn depends_only_on_sum(counts: &BTreeMap<(u32, u32), u64>) -> bool {
    let max_sum = counts.keys().map(|&(i, j)| i + j).max().unwrap_or(0);
    (0..=max_sum).all(|c| {
        let at = |i: u32| counts.get(&(i, c - i)).copied().unwrap_or(0);
        (0..=c).all(|i| at(i) == at(0))
    })
}

/// The three equivalent conditions on a region: counts by `(t, b)` depend
/// only on `t + b`; every path has all its bottom contacts strictly before
/// its top contacts; the last east step of `B` is lower than the first east
/// step of `T`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct SumDependenceReport {
    pub counts_depend_on_sum: bool,
    pub bottoms_before_tops: bool,
    pub last_bottom_below_first_top: bool,
}

impl SumDependenceReport {
    pub fn agree(&self) -> bool {
        self.counts_depend_on_sum == self.bottoms_before_tops
            && self.bottoms_before_tops == self.last_bottom_below_first_top
    }
}

/// Evaluates each condition independently. A column touching both
/// boundaries counts as a bottom contact that is not before a top contact.
pub fn sum_dependence_check(region: &Region) -> SumDependenceReport {
    let counts_depend_on_sum = depends_only_on_sum(&contact_counts(region));
    let bottoms_before_tops = monotone_paths(region).iter().all(|p| {
        let last_bottom = (0..region.x()).rev().find(|&c| region.is_bottom_contact(p, c));
        let first_top = (0..region.x()).find(|&c| region.is_top_contact(p, c));
        match (last_bottom, first_top) {
            (Some(b), Some(t)) => b < t,
            _ => true,
        }
    });
    let x = region.x();
    let last_bottom_below_first_top =
        x == 0 || region.bottom_heights()[x - 1] < region.top_heights()[0];
    SumDependenceReport { counts_depend_on_sum, bottoms_before_tops, last_bottom_below_first_top }
}

/// Number of paths with `i` top and `j` bottom contacts when `T = N^y E^x`
/// and `B` ends with a north step: the number of monotone paths from the
/// origin to `(x - i - j, y - 2)` weakly above `B`.
pub fn easy_bottom_count(region: &Region, i: u32, j: u32) -> Result<u128> {
    let (x, y) = (region.x(), region.y());
    if region.top_heights().iter().any(|&t| t != y) {
        return Err(Error::NotStaircase);
    }
    if x > 0 && region.bottom_heights()[x - 1] == y {
        return Err(Error::InvalidArgument("the lower boundary must end with a north step".into()));
    }
    if y < 2 {
        return Err(Error::InvalidArgument("the reduction needs y >= 2".into()));
    }
    let c = (i + j) as usize;
    if c > x {
        return Ok(0);
    }
    let top = y - 2;
    let mut ways = vec![0u128; top as usize + 1];
    ways[0] = 1;
    for &b in &region.bottom_heights()[..x - c] {
        let mut next = vec![0u128; ways.len()];
        let mut acc = 0;
        for h in 0..=top {
            acc += ways[h as usize];
            if h >= b {
                next[h as usize] = acc;
            }
        }
        ways = next;
    }
    Ok(ways.iter().sum())
}

/// The two boundary families with closed path counts.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "case", rename_all = "lowercase")]
pub enum BoundaryFamily {
    /// `T = N^{n+r} E^{n+s}`, `B = E^s (NE)^n N^r`.
    Ballot { n: u32, r: u32, s: u32 },
    /// `B = E (N^k E)^n N^r` with `T = N^{kn+r} E^{n+1}`.
    Slope { n: u32, r: u32, k: u32 },
}

fn repeat(s: &str, n: u32) -> String {
    s.repeat(n as usize)
}

impl BoundaryFamily {
    /// The boundaries as printed. For the slope family the printed upper
    /// boundary `N^{kn+r} E^n` has one east step fewer than `B`.
    pub fn printed_boundaries(&self) -> (Path, Path) {
        let (t, b) = match *self {
            BoundaryFamily::Ballot { n, r, s } => (
                format!("{}{}", repeat("N", n + r), repeat("E", n + s)),
                format!("{}{}{}", repeat("E", s), repeat("NE", n), repeat("N", r)),
            ),
            BoundaryFamily::Slope { n, r, k } => (
                format!("{}{}", repeat("N", k * n + r), repeat("E", n)),
                format!("E{}{}", repeat(&format!("{}E", repeat("N", k)), n), repeat("N", r)),
            ),
        };
        (Path::parse(&t).expect("valid steps"), Path::parse(&b).expect("valid steps"))
    }

    /// The region the formula counts. For the slope family the upper boundary
    /// is widened to `N^{kn+r} E^{n+1}` so that both boundaries end at the same
    /// point.
    pub fn region(&self) -> Region {
        let (t, b) = self.printed_boundaries();
        match *self {
            BoundaryFamily::Ballot { .. } => Region::new(&t, &b).expect("nested boundaries"),
            BoundaryFamily::Slope { .. } => {
                let top = Path::from_heights(vec![b.y(); b.x()], b.y());
                Region::new(&top, &b).expect("nested boundaries")
            }
        }
    }

    /// Number of paths in the region.
    pub fn count(&self) -> Result<i128> {
        match *self {
            BoundaryFamily::Ballot { n, r, s } => {
                let (n, r, s) = (n as i64, r as i64, s as i64);
                Ok(binomial(2 * n + r + s, n + s) - binomial(2 * n + r + s, n - 1))
            }
            BoundaryFamily::Slope { n, r, k } => {
                let (n, r, k) = (n as i64, r as i64, k as i64);
                exact_quotient((r + 1) as i128 * binomial(r + (n + 1) * (k + 1), n), (n + 1) as i128)
            }
        }
    }

    /// Number of paths with `i` top and `j` bottom contacts, `c = i + j`.
    /// Requires `r > 0`; the reduction behind the formula also needs the
    /// region to have height at least 2.
    pub fn contact_count(&self, c: u32) -> Result<i128> {
        let region = self.region();
        if region.y() < 2 {
            return Err(Error::InvalidArgument("the formula needs height at least 2".into()));
        }
        match *self {
            BoundaryFamily::Ballot { r: 0, .. } | BoundaryFamily::Slope { r: 0, .. } => {
                Err(Error::InvalidArgument("the formula needs r > 0".into()))
            }
            BoundaryFamily::Ballot { n, r, s } => {
                let (n, r, s, c) = (n as i64, r as i64, s as i64, c as i64);
                let m = 2 * n + r + s - c - 2;
                Ok(binomial(m, n + s - c) - binomial(m, n - 1 - c))
            }
            BoundaryFamily::Slope { n, r, k } => {
                if c > n + 1 {
                    return Ok(0);
                }
                if c == n + 1 {
                    // every column is a contact: only the path hugging the
                    // top after its first north steps; the closed form has a
                    // zero denominator here
                    return Ok(1);
                }
                let (n, r, k, c) = (n as i64, r as i64, k as i64, c as i64);
                exact_quotient(
                    (k * c + r - 1) as i128 * binomial(r - c - 2 + (n + 1) * (k + 1), n - c),
                    (n - c + 1) as i128,
                )
            }
        }
    }
}

fn exact_quotient(num: i128, den: i128) -> Result<i128> {
    if num % den != 0 {
        return Err(Error::InvalidArgument(format!("{num}/{den} is not an integer")));
    }
    Ok(num / den)
}

/// Formula value and enumeration counts for a boundary family.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FamilyCountReport {
    pub family: BoundaryFamily,
    pub formula: i128,
    /// Count in the region the formula is stated for (widened for the slope
    /// family).
    pub enumerated: u128,
    /// Count with the boundaries exactly as printed, when they share an
    /// endpoint.
    pub printed_enumerated: Option<u128>,
}

pub fn family_count_report(family: BoundaryFamily) -> Result<FamilyCountReport> {
    let (t, b) = family.printed_boundaries();
    Ok(FamilyCountReport {
        family,
        formula: family.count()?,
        enumerated: monotone_paths(&family.region()).len() as u128,
        printed_enumerated: Region::new(&t, &b).ok().map(|r| monotone_paths(&r).len() as u128),
    })
}
