//! Finite checks of two conjectured characterizations of the regions with
//! extra contact symmetries. Boundary pairs run over all `T`, `B` from the
//! origin to `(n, n)` that meet only at their endpoints.

use std::collections::{BTreeMap, BTreeSet};

use rayon::prelude::*;
use serde::Serialize;

use crate::enumerate::{all_paths, monotone_paths};
use crate::path::{ContactStats, Path, Region};

fn lattice_points(p: &Path) -> BTreeSet<(usize, u32)> {
    let mut pts = BTreeSet::new();
    for j in 0..=p.x() {
        let (a, b) = p.vertical_run(j);
        for v in a.min(b)..=a.max(b) {
            pts.insert((j, v));
        }
    }
    pts
}

/// Whether the boundaries share no lattice point besides the two endpoints.
pub fn touch_only_at_endpoints(region: &Region) -> bool {
    let t = lattice_points(&region.top_path());
    let b = lattice_points(&region.bottom_path());
    t.intersection(&b).count() == if region.x() == 0 && region.y() == 0 { 1 } else { 2 }
}

/// All regions from the origin to `(n, n)` whose boundaries meet only at the
/// endpoints, ordered by the boundary step strings.
pub fn separated_regions(n: usize) -> Vec<Region> {
    let paths = all_paths(n, n as u32);
    let mut out = Vec::new();
    for t in &paths {
        for b in &paths {
            if let Ok(r) = Region::new(t, b) {
                if touch_only_at_endpoints(&r) {
                    out.push(r);
                }
            }
        }
    }
    out
}

type Joint = BTreeMap<(u32, u32), u64>;

fn joint(stats: &[ContactStats], f: impl Fn(&ContactStats) -> (u32, u32)) -> Joint {
    let mut m = Joint::new();
    for s in stats {
        *m.entry(f(s)).or_insert(0) += 1;
    }
    m
}

fn stats_of(region: &Region) -> Vec<ContactStats> {
    monotone_paths(region).iter().map(|p| region.contact_stats(p).expect("inside")).collect()
}

/// The four equidistribution statements and the boundary shape for one
/// region.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PairEquidistribution {
    pub region: String,
    pub bl_bt: bool,
    pub bl_lr: bool,
    pub tr_bt: bool,
    pub tr_lr: bool,
    pub special_shape: bool,
}

impl PairEquidistribution {
    pub fn consistent(&self) -> bool {
        [self.bl_bt, self.bl_lr, self.tr_bt, self.tr_lr].iter().all(|&v| v == self.special_shape)
    }
}

pub fn pair_equidistribution(region: &Region) -> PairEquidistribution {
    let n = region.x();
    let s = stats_of(region);
    let bl = joint(&s, |c| (c.b, c.l));
    let bt = joint(&s, |c| (c.b, c.t));
    let tr = joint(&s, |c| (c.t, c.r));
    let lr = joint(&s, |c| (c.l, c.r));
    let top = region.top_path().to_step_string();
    let bottom = region.bottom_path().to_step_string();
    PairEquidistribution {
        region: region.to_string(),
        bl_bt: bl == bt,
        bl_lr: bl == lr,
        tr_bt: tr == bt,
        tr_lr: tr == lr,
        special_shape: top == "NE".repeat(n) || bottom == "EN".repeat(n),
    }
}

/// Whether counts by `(b, l)` depend only on `b + l`, and whether the
/// boundaries have one of the two shapes expected to allow it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BottomLeftSum {
    pub region: String,
    pub depends_on_sum: bool,
    pub special_shape: bool,
}

pub fn bottom_left_sum(region: &Region) -> BottomLeftSum {
    let n = region.x();
    let counts = joint(&stats_of(region), |c| (c.b, c.l));
    let top = region.top_path().to_step_string();
    let bottom = region.bottom_path().to_step_string();
    let staircase = format!("{}{}", "N".repeat(n), "E".repeat(n));
    let corner = format!("{}{}", "E".repeat(n), "N".repeat(n));
    BottomLeftSum {
        region: region.to_string(),
        depends_on_sum: super::dyck::depends_only_on_sum(&counts),
        special_shape: (top == staircase && bottom == "EN".repeat(n))
            || (top == "NE".repeat(n) && bottom == corner),
    }
}

/// Outcome of a sweep: how many regions were examined, how many satisfy the
/// symmetry, and the first region (in sweep order) where the symmetry and
/// the predicted shape disagree.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SweepReport<T> {
    pub n: usize,
    pub regions: usize,
    pub symmetric: usize,
    pub counterexample: Option<T>,
}

impl<T> SweepReport<T> {
    pub fn holds(&self) -> bool {
        self.counterexample.is_none()
    }
}

/// Checks that the four pairs `(b,l)~(b,t)`, `(b,l)~(l,r)`, `(t,r)~(b,t)`,
/// `(t,r)~(l,r)` are equidistributed exactly when `T = (NE)^n` or
/// `B = (EN)^n`.
pub fn check_pair_equidistribution(n: usize) -> SweepReport<PairEquidistribution> {
    let regions = separated_regions(n);
    let results: Vec<PairEquidistribution> = regions.par_iter().map(pair_equidistribution).collect();
    SweepReport {
        n,
        regions: results.len(),
        symmetric: results.iter().filter(|r| r.bl_bt).count(),
        counterexample: results.into_iter().find(|r| !r.consistent()),
    }
}

/// Checks that counts by `(b, l)` depend only on `b + l` exactly when
/// `T = N^n E^n, B = (EN)^n` or `T = (NE)^n, B = E^n N^n`.
pub fn check_bottom_left_sum(n: usize) -> SweepReport<BottomLeftSum> {
    let regions = separated_regions(n);
    let results: Vec<BottomLeftSum> = regions.par_iter().map(bottom_left_sum).collect();
    SweepReport {
        n,
        regions: results.len(),
        symmetric: results.iter().filter(|r| r.depends_on_sum).count(),
        counterexample: results.into_iter().find(|r| r.depends_on_sum != r.special_shape),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn separation() {
        let r = Region::parse("T=NNEE;B=EENN").unwrap();
        assert!(touch_only_at_endpoints(&r));
        let r = Region::parse("T=NENE;B=ENEN").unwrap();
        assert!(!touch_only_at_endpoints(&r));
        // Narayana numbers N(2n - 1, n)
        assert_eq!(separated_regions(2).len(), 3);
        assert_eq!(separated_regions(3).len(), 20);
        assert_eq!(separated_regions(4).len(), 175);
    }

    #[test]
    fn diagonal_top_gives_all_symmetries() {
        let r = Region::parse("T=NENENE;B=EEENNN").unwrap();
        let p = pair_equidistribution(&r);
        assert!(p.bl_bt && p.bl_lr && p.tr_bt && p.tr_lr && p.special_shape);
    }

    #[test]
    fn sweeps_small() {
        for n in 1..=4 {
            let a = check_pair_equidistribution(n);
            assert!(a.holds(), "{a:?}");
            let b = check_bottom_left_sum(n);
            assert!(b.holds(), "{b:?}");
        }
    }
}
