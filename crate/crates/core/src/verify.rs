//! Named exhaustive verification sweeps. Each suite takes one size bound and
//! reports how many objects it checked and which checks failed.

use std::collections::{BTreeMap, BTreeSet};

use itertools::Itertools;
use rayon::prelude::*;
use serde::Serialize;

use crate::applications::conjectures::{check_bottom_left_sum, check_pair_equidistribution};
use crate::applications::dyck::{family_count_report, sum_dependence_check, BoundaryFamily};
use crate::applications::permutations::permutation_correspondence_check;
use crate::applications::watermelon::returns_table;
use crate::enumerate::{all_paths, all_regions, enumerate_paths, enumerate_tuples, lgv_count, PathFilter};
use crate::matroid::{activities, phi_xy, tutte_poly, BasesOracle, LatticePathMatroid, LinearOrder, UniformMatroid};
use crate::path::{Path, Region};
use crate::poly::distribution;
use crate::swap::swapall;
use crate::tableau::{audit_psi_run, expected_weight, flagged_schur, flagged_ssyt, flagged_ssyt_generating_function, psi, psi_inv, shape_of_region};
use crate::triangulation::{catalan_det, degree_distribution_check, enumerate_k_triangulations, fan_region, nontrivial_size};
use crate::word::{switch_neighbors_ok, ContactWord};

const KEPT_FAILURES: usize = 20;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SuiteOutcome {
    pub suite: String,
    pub bound: usize,
    pub checked: u64,
    pub failure_count: usize,
    /// The first failures, in sweep order.
    pub failures: Vec<String>,
}

impl SuiteOutcome {
    fn new(suite: &str, bound: usize, checked: u64, failures: Vec<String>) -> Self {
        SuiteOutcome {
            suite: suite.to_string(),
            bound,
            checked,
            failure_count: failures.len(),
            failures: failures.into_iter().take(KEPT_FAILURES).collect(),
        }
    }

    pub fn passed(&self) -> bool {
        self.failure_count == 0
    }
}

pub struct Suite {
    pub name: &'static str,
    pub description: &'static str,
    /// Meaning of the bound.
    pub bound_meaning: &'static str,
    pub default_bound: usize,
    pub run: fn(usize) -> SuiteOutcome,
}

pub const SUITES: &[Suite] = &[
    Suite {
        name: "switch",
        description: "switch and its inverse are mutually inverse on words with an unmatched letter; neighbours of the switched letter",
        bound_meaning: "word length",
        default_bound: 14,
        run: check_switch,
    },
    Suite {
        name: "swap",
        description: "the top/bottom involution exchanges (t, b) and keeps descents and noncontact heights, south steps allowed",
        bound_meaning: "x + y",
        default_bound: 8,
        run: check_swap_involution,
    },
    Suite {
        name: "tutte",
        description: "Tutte polynomials of lattice path matroids agree for every ground-set order and match the contact distributions",
        bound_meaning: "x + y",
        default_bound: 6,
        run: check_tutte_orders,
    },
    Suite {
        name: "order-change",
        description: "the adjacent-exchange bijection keeps activity pairs and undoes itself, lattice path and uniform matroids",
        bound_meaning: "ground set size",
        default_bound: 6,
        run: |b| check_order_change(b, b.min(5)),
    },
    Suite {
        name: "ktuple",
        description: "transpositions permute h, the h distribution is symmetric for each u, and (h_k, v_0) ~ (h_0, v_k) for k-tuples",
        bound_meaning: "x + y",
        default_bound: 6,
        run: |b| check_ktuples(b, 3),
    },
    Suite {
        name: "psi",
        description: "Psi is a weight-preserving bijection onto k-flagged SSYT for staircase regions, k <= 3",
        bound_meaning: "box side",
        default_bound: 4,
        run: |b| check_psi(b, 3),
    },
    Suite {
        name: "flagged-schur",
        description: "the flagged Jacobi-Trudi determinant equals the flagged SSYT generating function, k <= 2",
        bound_meaning: "box side",
        default_bound: 3,
        run: |b| check_flagged_schur(b, 2),
    },
    Suite {
        name: "fan-counts",
        description: "k-triangulation counts equal the Catalan determinant and the k-fan counts",
        bound_meaning: "polygon size n",
        default_bound: 9,
        run: check_fan_counts,
    },
    Suite {
        name: "degrees",
        description: "degree distributions of k-triangulations against h and u statistics of k-fans, k <= 2",
        bound_meaning: "polygon size n",
        default_bound: 9,
        run: check_degrees,
    },
    Suite {
        name: "contact-sum",
        description: "the three conditions for (t, b) counts depending only on t + b agree",
        bound_meaning: "x + y",
        default_bound: 8,
        run: check_contact_sum,
    },
    Suite {
        name: "ballot",
        description: "closed counts for the ballot and slope boundary families",
        bound_meaning: "n + r + s",
        default_bound: 7,
        run: check_families,
    },
    Suite {
        name: "permutations",
        description: "permutation statistics against path contacts and descents",
        bound_meaning: "permutation length",
        default_bound: 7,
        run: check_permutations,
    },
    Suite {
        name: "watermelon",
        description: "returns of watermelons against top contacts and truncated families, k <= 2",
        bound_meaning: "watermelon length x",
        default_bound: 8,
        run: |b| check_watermelons(b, 2),
    },
    Suite {
        name: "conjectures",
        description: "the conjectured shapes for contact-pair equidistribution and (b, l) sum dependence",
        bound_meaning: "square side n",
        default_bound: 5,
        run: check_conjectures,
    },
];

pub fn suite(name: &str) -> Option<&'static Suite> {
    SUITES.iter().find(|s| s.name == name)
}

fn collect(results: Vec<(u64, Vec<String>)>) -> (u64, Vec<String>) {
    results.into_iter().fold((0, Vec::new()), |(n, mut f), (m, g)| {
        f.extend(g);
        (n + m, f)
    })
}

pub fn check_switch(max_len: usize) -> SuiteOutcome {
    let mut failures = Vec::new();
    let mut checked = 0;
    for len in 0..=max_len {
        // (#t, #b) -> (words with an unmatched t, words with an unmatched b)
        let mut classes: BTreeMap<(usize, usize), (u64, u64)> = BTreeMap::new();
        for w in ContactWord::all(len) {
            checked += 1;
            let (nt, nb) = w.counts();
            if let Ok(s) = w.switch() {
                classes.entry((nt, nb)).or_default().0 += 1;
                if s.counts() != (nt - 1, nb + 1) || s.switch_inv().as_ref() != Ok(&w) {
                    failures.push(format!("switch does not invert at {w}"));
                }
                if switch_neighbors_ok(&w) != Ok(true) {
                    failures.push(format!("neighbours of the switched letter are wrong at {w}"));
                }
            }
            if let Ok(s) = w.switch_inv() {
                classes.entry((nt, nb)).or_default().1 += 1;
                if s.switch().as_ref() != Ok(&w) {
                    failures.push(format!("switch_inv does not invert at {w}"));
                }
            }
        }
        for (&(nt, nb), &(with_t, _)) in &classes {
            if nt == 0 {
                continue;
            }
            let with_b = classes.get(&(nt - 1, nb + 1)).map_or(0, |c| c.1);
            if with_t != with_b {
                failures.push(format!("length {len}: {with_t} words ({nt}t,{nb}b) with unmatched t but {with_b} images"));
            }
        }
    }
    SuiteOutcome::new("switch", max_len, checked, failures)
}

pub fn check_swap_involution(max_size: usize) -> SuiteOutcome {
    let results = all_regions(max_size)
        .par_iter()
        .map(|r| {
            let mut failures = Vec::new();
            let mut n = 0;
            for p in enumerate_paths(r, &PathFilter::with_south()) {
                n += 1;
                let q = match swapall(r, &p) {
                    Ok(q) => q,
                    Err(e) => {
                        failures.push(format!("{r} {p}: {e}"));
                        continue;
                    }
                };
                let (s, sq) = (r.contact_stats(&p), r.contact_stats(&q));
                let ok = matches!((&s, &sq), (Ok(a), Ok(b)) if (a.t, a.b) == (b.b, b.t))
                    && q.descent_set() == p.descent_set()
                    && r.noncontact_heights(&q) == r.noncontact_heights(&p)
                    && swapall(r, &q).as_ref() == Ok(&p);
                if !ok {
                    failures.push(format!("{r}: {p} -> {q}"));
                }
            }
            (n, failures)
        })
        .collect();
    let (checked, failures) = collect(results);
    SuiteOutcome::new("swap", max_size, checked, failures)
}

/// `sum x^a y^b` over the monotone paths of the region for a pair of
/// contact statistics.
fn contact_pair_poly(region: &Region, f: impl Fn(&crate::path::ContactStats) -> [u32; 2]) -> crate::poly::MultiPoly {
    let filter = PathFilter::monotone();
    distribution(enumerate_paths(region, &filter), ["x", "y"], |p: &Path| f(&region.contact_stats(p).expect("inside")).to_vec())
        .expect("two statistics")
}

pub fn check_tutte_orders(max_size: usize) -> SuiteOutcome {
    let results = all_regions(max_size)
        .par_iter()
        .map(|r| {
            let lpm = LatticePathMatroid::new(r.clone());
            let m = lpm.ground_size();
            let mut failures = Vec::new();
            let natural = tutte_poly(&lpm, &LinearOrder::natural(m)).expect("order fits");
            let reversed = tutte_poly(&lpm, &LinearOrder::reversed(m)).expect("order fits");
            if natural != contact_pair_poly(r, |s| [s.l, s.b]) {
                failures.push(format!("{r}: natural order is not sum x^l y^b"));
            }
            if reversed != contact_pair_poly(r, |s| [s.r, s.t]) {
                failures.push(format!("{r}: reversed order is not sum x^r y^t"));
            }
            let mut n = 0;
            for ranking in (1..=m).permutations(m) {
                n += 1;
                let order = LinearOrder::from_ranking(ranking).expect("permutation");
                if tutte_poly(&lpm, &order).expect("order fits") != natural {
                    failures.push(format!("{r}: order {:?} changes the polynomial", order.ranking()));
                    break;
                }
            }
            (n, failures)
        })
        .collect();
    let (checked, failures) = collect(results);
    SuiteOutcome::new("tutte", max_size, checked, failures)
}

/// Checks every adjacent exchange of every order on every base.
fn order_change_failures(name: &str, oracle: &dyn BasesOracle) -> (u64, Vec<String>) {
    let m = oracle.ground_size();
    let bases = oracle.bases();
    let mut failures = Vec::new();
    let mut n = 0;
    for ranking in (1..=m).permutations(m) {
        let order = LinearOrder::from_ranking(ranking.clone()).expect("permutation");
        for p in 0..m.saturating_sub(1) {
            let (x, y) = (ranking[p], ranking[p + 1]);
            let mut swapped_ranking = ranking.clone();
            swapped_ranking.swap(p, p + 1);
            let swapped = LinearOrder::from_ranking(swapped_ranking).expect("permutation");
            for &b in &bases {
                n += 1;
                let ok = phi_xy(oracle, &order, x, y, b).is_ok_and(|img| {
                    let before = activities(oracle, b, &order).map(|a| a.counts());
                    let after = activities(oracle, img, &swapped).map(|a| a.counts());
                    before.is_ok() && before == after && phi_xy(oracle, &swapped, y, x, img) == Ok(b)
                });
                if !ok {
                    failures.push(format!("{name}: base {b}, order {ranking:?}, exchange {x},{y}"));
                }
            }
        }
    }
    (n, failures)
}

pub fn check_order_change(max_size: usize, max_uniform: usize) -> SuiteOutcome {
    let mut results: Vec<(u64, Vec<String>)> = all_regions(max_size)
        .par_iter()
        .map(|r| order_change_failures(&r.to_string(), &LatticePathMatroid::new(r.clone())))
        .collect();
    for m in 0..=max_uniform {
        for r in 0..=m {
            results.push(order_change_failures(&format!("U({r},{m})"), &UniformMatroid { r, m }));
        }
    }
    let (checked, failures) = collect(results);
    SuiteOutcome::new("order-change", max_size, checked, failures)
}

pub fn check_ktuples(max_size: usize, max_k: usize) -> SuiteOutcome {
    let results = all_regions(max_size)
        .par_iter()
        .map(|r| {
            let mut failures = Vec::new();
            let mut n = 0;
            for k in 1..=max_k {
                let tuples = enumerate_tuples(r, k);
                // (u, h) -> count
                let mut h_dist: BTreeMap<(Vec<u32>, Vec<u32>), u64> = BTreeMap::new();
                let mut corner: BTreeMap<(u32, u32, bool), u64> = BTreeMap::new();
                for t in &tuples {
                    n += 1;
                    let (h, v) = (t.h_stats(), t.v_stats());
                    *h_dist.entry((t.u_stats(), h.clone())).or_default() += 1;
                    *corner.entry((h[k], v[0], false)).or_default() += 1;
                    *corner.entry((h[0], v[k], true)).or_default() += 1;
                    for i in 1..=k {
                        let ok = t.transpose_h(i).is_ok_and(|s| {
                            let mut expected = h.clone();
                            expected.swap(i - 1, i);
                            s.h_stats() == expected && s.transpose_h(i).as_ref() == Ok(t)
                        });
                        if !ok {
                            failures.push(format!("{r} k={k}: transposition {i} fails on {:?}", t.paths()));
                        }
                    }
                    let ok = t.bltr().is_ok_and(|s| {
                        let (h2, v2) = (s.h_stats(), s.v_stats());
                        (h2[0], v2[k]) == (h[k], v[0])
                    });
                    if !ok {
                        failures.push(format!("{r} k={k}: corner map fails on {:?}", t.paths()));
                    }
                }
                for ((u, h), &c) in &h_dist {
                    for perm in (0..=k).permutations(k + 1) {
                        let g: Vec<u32> = perm.iter().map(|&j| h[j]).collect();
                        if h_dist.get(&(u.clone(), g)) != Some(&c) {
                            failures.push(format!("{r} k={k}: h distribution not symmetric at u={u:?}, h={h:?}"));
                        }
                    }
                }
                for (&(e, f, _), &c) in corner.iter().filter(|(key, _)| !key.2) {
                    if corner.get(&(e, f, true)) != Some(&c) {
                        failures.push(format!("{r} k={k}: (h_k, v_0) = ({e}, {f}) count differs from (h_0, v_k)"));
                    }
                }
            }
            (n, failures)
        })
        .collect();
    let (checked, failures) = collect(results);
    SuiteOutcome::new("ktuple", max_size, checked, failures)
}

/// Regions `T = N^y E^x` with `x, y <= side` and any lower boundary.
pub fn staircase_regions(side: usize) -> Vec<Region> {
    let mut out = Vec::new();
    for x in 0..=side {
        for y in 0..=side as u32 {
            let top = Path::from_heights(vec![y; x], y);
            for b in all_paths(x, y) {
                out.push(Region::new(&top, &b).expect("staircase dominates"));
            }
        }
    }
    out
}

pub fn check_psi(side: usize, max_k: usize) -> SuiteOutcome {
    let jobs: Vec<(Region, usize)> = staircase_regions(side)
        .into_iter()
        .flat_map(|r| (1..=max_k).map(move |k| (r.clone(), k)))
        .collect();
    let results = jobs
        .par_iter()
        .map(|(r, k)| {
            let mut failures = Vec::new();
            let tuples = enumerate_tuples(r, *k);
            let shape = shape_of_region(r).expect("staircase");
            let mut image = BTreeSet::new();
            for t in &tuples {
                match audit_psi_run(t) {
                    Ok(f) if f.is_empty() => {}
                    Ok(f) => failures.extend(f.into_iter().map(|m| format!("{r} k={k}: {m}"))),
                    Err(e) => failures.push(format!("{r} k={k}: {e}")),
                }
                match psi(t) {
                    Ok(s) => {
                        if s.weight(expected_weight(t).len()) != expected_weight(t) {
                            failures.push(format!("{r} k={k}: weight of {s}"));
                        }
                        if psi_inv(&s, r).as_ref() != Ok(t) {
                            failures.push(format!("{r} k={k}: inverse fails on {s}"));
                        }
                        image.insert(s);
                    }
                    Err(e) => failures.push(format!("{r} k={k}: {e}")),
                }
            }
            let target: BTreeSet<_> = flagged_ssyt(&shape, *k as u32).into_iter().collect();
            if image.len() != tuples.len() || image != target {
                failures.push(format!(
                    "{r} k={k}: {} tuples, {} images, {} flagged tableaux",
                    tuples.len(),
                    image.len(),
                    target.len()
                ));
            }
            (tuples.len() as u64, failures)
        })
        .collect();
    let (checked, failures) = collect(results);
    SuiteOutcome::new("psi", side, checked, failures)
}

/// Partitions with at most `side` parts, each at most `side`.
pub fn shapes_in_box(side: usize) -> Vec<Vec<usize>> {
    fn rec(max_part: usize, rows_left: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        out.push(cur.clone());
        if rows_left == 0 {
            return;
        }
        for p in 1..=max_part {
            cur.push(p);
            rec(p, rows_left - 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(side, side, &mut Vec::new(), &mut out);
    out
}

pub fn check_flagged_schur(side: usize, max_k: u32) -> SuiteOutcome {
    let mut failures = Vec::new();
    let mut checked = 0;
    for shape in shapes_in_box(side) {
        for k in 0..=max_k {
            checked += 1;
            let nvars = k as usize + shape.len();
            let det = flagged_schur(&shape, k, nvars);
            let gf = flagged_ssyt_generating_function(&shape, k, nvars);
            if det.is_err() || det != gf {
                failures.push(format!("shape {shape:?} k={k}"));
            }
        }
    }
    SuiteOutcome::new("flagged-schur", side, checked, failures)
}

/// The `(n, k)` pairs with `2k + 1 <= n <= max_n`, `k <= 2`, plus `k = 3`
/// up to `n = 8`.
pub fn fan_pairs(max_n: u32) -> Vec<(u32, u32)> {
    let mut out = Vec::new();
    for k in 1..=3 {
        let top = if k == 3 { max_n.min(8) } else { max_n };
        for n in 2 * k + 1..=top {
            out.push((n, k));
        }
    }
    out
}

pub fn check_fan_counts(max_n: usize) -> SuiteOutcome {
    let pairs = fan_pairs(max_n as u32);
    let results = pairs
        .par_iter()
        .map(|&(n, k)| {
            let tris = enumerate_k_triangulations(n, k);
            let region = fan_region(n, k).expect("n >= 2k + 1");
            let det = catalan_det(n, k);
            let fans = enumerate_tuples(&region, k as usize).len() as i128;
            let lgv = lgv_count(&region, k as usize);
            let mut failures = Vec::new();
            if tris.iter().any(|t| t.diagonals().len() != nontrivial_size(n, k)) {
                failures.push(format!("n={n} k={k}: wrong number of diagonals"));
            }
            if tris.len() as i128 != det || fans != det || lgv != Ok(det) {
                failures.push(format!("n={n} k={k}: {} triangulations, det {det}, {fans} fans, lgv {lgv:?}", tris.len()));
            }
            (tris.len() as u64, failures)
        })
        .collect();
    let (checked, failures) = collect(results);
    SuiteOutcome::new("fan-counts", max_n, checked, failures)
}

pub fn degree_pairs(max_n: u32) -> Vec<(u32, u32)> {
    fan_pairs(max_n).into_iter().filter(|&(n, k)| k <= 2 && n >= 2 * k + 3).collect()
}

pub fn check_degrees(max_n: usize) -> SuiteOutcome {
    let results = degree_pairs(max_n as u32)
        .par_iter()
        .map(|&(n, k)| match degree_distribution_check(n, k) {
            Ok(rep) if rep.holds() => (rep.triangulations as u64, vec![]),
            Ok(rep) => (rep.triangulations as u64, vec![format!("n={n} k={k}: {rep:?}")]),
            Err(e) => (0, vec![format!("n={n} k={k}: {e}")]),
        })
        .collect();
    let (checked, failures) = collect(results);
    SuiteOutcome::new("degrees", max_n, checked, failures)
}

pub fn check_contact_sum(max_size: usize) -> SuiteOutcome {
    let regions = all_regions(max_size);
    let failures = regions
        .par_iter()
        .filter_map(|r| {
            let rep = sum_dependence_check(r);
            (!rep.agree()).then(|| format!("{r}: {rep:?}"))
        })
        .collect();
    SuiteOutcome::new("contact-sum", max_size, regions.len() as u64, failures)
}

pub fn check_families(max: usize) -> SuiteOutcome {
    let max = max as u32;
    let mut failures = Vec::new();
    let mut checked = 0;
    for n in 0..=max {
        for r in 0..=max - n {
            for s in 0..=max - n - r {
                checked += 1;
                let f = BoundaryFamily::Ballot { n, r, s };
                match family_count_report(f) {
                    Ok(rep) if rep.formula >= 0 && rep.formula as u128 == rep.enumerated => {}
                    Ok(rep) => failures.push(format!("{rep:?}")),
                    Err(e) => failures.push(format!("{f:?}: {e}")),
                }
            }
            for k in 1..=3 {
                if n + r + k > max {
                    continue;
                }
                checked += 1;
                let f = BoundaryFamily::Slope { n, r, k };
                match family_count_report(f) {
                    Ok(rep) if rep.formula >= 0 && rep.formula as u128 == rep.enumerated => {}
                    Ok(rep) => failures.push(format!("{rep:?}")),
                    Err(e) => failures.push(format!("{f:?}: {e}")),
                }
            }
        }
    }
    SuiteOutcome::new("ballot", max as usize, checked, failures)
}

pub fn check_permutations(max_n: usize) -> SuiteOutcome {
    let mut failures = Vec::new();
    let mut checked = 0u64;
    for n in 0..=max_n {
        checked += (1..=n as u64).product::<u64>();
        match permutation_correspondence_check(n) {
            Ok(f) => failures.extend(f),
            Err(e) => failures.push(format!("n={n}: {e}")),
        }
    }
    SuiteOutcome::new("permutations", max_n, checked, failures)
}

pub fn check_watermelons(max_x: usize, max_k: usize) -> SuiteOutcome {
    let mut failures = Vec::new();
    let mut checked = 0;
    for x in 1..=max_x {
        for y in (x % 2..=x).step_by(2) {
            for k in 1..=max_k {
                match returns_table(x, y as u32, k) {
                    Ok(rows) => {
                        for row in rows {
                            checked += row.watermelons;
                            if row.watermelons != row.tuples_with_top_contacts || row.watermelons != row.truncated_families {
                                failures.push(format!("x={x} y={y} k={k}: {row:?}"));
                            }
                        }
                    }
                    Err(e) => failures.push(format!("x={x} y={y} k={k}: {e}")),
                }
            }
        }
    }
    SuiteOutcome::new("watermelon", max_x, checked, failures)
}

pub fn check_conjectures(max_n: usize) -> SuiteOutcome {
    let mut failures = Vec::new();
    let mut checked = 0;
    for n in 1..=max_n {
        let a = check_pair_equidistribution(n);
        checked += a.regions as u64;
        if let Some(c) = a.counterexample {
            failures.push(format!("pair equidistribution, n={n}: {c:?}"));
        }
        let b = check_bottom_left_sum(n);
        if let Some(c) = b.counterexample {
            failures.push(format!("(b, l) sum dependence, n={n}: {c:?}"));
        }
    }
    SuiteOutcome::new("conjectures", max_n, checked, failures)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suite_names_are_unique() {
        let names: BTreeSet<_> = SUITES.iter().map(|s| s.name).collect();
        assert_eq!(names.len(), SUITES.len());
        assert!(suite("psi").is_some());
        assert!(suite("nope").is_none());
    }

    #[test]
    fn every_suite_passes_at_small_bounds() {
        for s in SUITES {
            let small = if s.bound_meaning == "polygon size n" { 7 } else { 4 };
            let out = (s.run)(s.default_bound.min(small));
            assert!(out.passed(), "{:?}", out);
            assert!(out.checked > 0, "{}", s.name);
        }
    }

    #[test]
    fn shapes() {
        assert_eq!(shapes_in_box(2), vec![vec![], vec![1], vec![1, 1], vec![2], vec![2, 1], vec![2, 2]]);
        assert_eq!(staircase_regions(1).len(), 1 + 1 + 1 + 2);
    }

    #[test]
    fn fan_pair_list() {
        assert_eq!(fan_pairs(7), vec![(3, 1), (4, 1), (5, 1), (6, 1), (7, 1), (5, 2), (6, 2), (7, 2), (7, 3)]);
        assert_eq!(degree_pairs(8), vec![(5, 1), (6, 1), (7, 1), (8, 1), (7, 2), (8, 2)]);
    }

    #[test]
    fn a_broken_involution_is_reported() {
        let out = SuiteOutcome::new("x", 1, 3, vec!["a".into(); 30]);
        assert!(!out.passed());
        assert_eq!(out.failure_count, 30);
        assert_eq!(out.failures.len(), KEPT_FAILURES);
    }
}
