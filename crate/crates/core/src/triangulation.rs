//! k-triangulations of a convex polygon: brute-force enumeration, Catalan
//! determinants, degree sequences, and the comparison of degree
//! distributions with statistics of k-fans of Dyck paths.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use rayon::prelude::*;
use serde::Serialize;

use crate::enumerate::enumerate_tuples;
use crate::error::{Error, Result};
use crate::ktuple::PathTuple;
use crate::numeric::{catalan, determinant};
use crate::path::Region;

/// A diagonal `(a, b)` with `1 <= a < b <= n`.
pub type Diagonal = (u32, u32);

pub fn cyclic_distance(n: u32, a: u32, b: u32) -> u32 {
    let d = a.abs_diff(b);
    d.min(n - d)
}

/// Whether two diagonals cross in their interiors, i.e. their endpoints
/// strictly interleave around the polygon.
pub fn crosses(d: Diagonal, e: Diagonal) -> bool {
    let ((a, b), (c, f)) = (d, e);
    (a < c && c < b && b < f) || (c < a && a < f && f < b)
}

/// Diagonals joining vertices at cyclic distance more than `k`, in
/// lexicographic order.
pub fn nontrivial_diagonals(n: u32, k: u32) -> Vec<Diagonal> {
    let mut out = Vec::new();
    for a in 1..=n {
        for b in a + 1..=n {
            if cyclic_distance(n, a, b) > k {
                out.push((a, b));
            }
        }
    }
    out
}

/// Whether `set` has `size` pairwise crossing members.
fn has_crossing_family(set: &[Diagonal], size: usize) -> bool {
    fn extend(set: &[Diagonal], chosen: &mut Vec<Diagonal>, from: usize, size: usize) -> bool {
        if chosen.len() == size {
            return true;
        }
        for i in from..set.len() {
            if chosen.iter().all(|&c| crosses(c, set[i])) {
                chosen.push(set[i]);
                if extend(set, chosen, i + 1, size) {
                    return true;
                }
                chosen.pop();
            }
        }
        false
    }
    extend(set, &mut Vec::new(), 0, size)
}

/// Whether adding `d` to `set` creates `k + 1` mutually crossing diagonals,
/// assuming `set` has none.
fn completes_crossing(set: &[Diagonal], d: Diagonal, k: u32) -> bool {
    let crossing: Vec<Diagonal> = set.iter().copied().filter(|&e| crosses(d, e)).collect();
    has_crossing_family(&crossing, k as usize)
}

/// A k-triangulation, stored by its nontrivial diagonals.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Triangulation {
    n: u32,
    k: u32,
    diagonals: BTreeSet<Diagonal>,
}

impl Triangulation {
    /// Checks that the diagonals are nontrivial, that no `k + 1` of them
    /// mutually cross, and that no nontrivial diagonal can be added.
    pub fn new(n: u32, k: u32, diagonals: impl IntoIterator<Item = Diagonal>) -> Result<Self> {
        let mut set = BTreeSet::new();
        for (a, b) in diagonals {
            let d = (a.min(b), a.max(b));
            if d.0 == 0 || d.1 > n || cyclic_distance(n, d.0, d.1) <= k {
                return Err(Error::InvalidArgument(format!("{}-{} is not a nontrivial diagonal", d.0, d.1)));
            }
            set.insert(d);
        }
        let list: Vec<Diagonal> = set.iter().copied().collect();
        if has_crossing_family(&list, k as usize + 1) {
            return Err(Error::InvalidArgument(format!("{} diagonals mutually cross", k + 1)));
        }
        if let Some(d) = nontrivial_diagonals(n, k)
            .into_iter()
            .find(|d| !set.contains(d) && !completes_crossing(&list, *d, k))
        {
            return Err(Error::InvalidArgument(format!("not maximal: {}-{} can be added", d.0, d.1)));
        }
        Ok(Triangulation { n, k, diagonals: set })
    }

    /// Diagonals written `a-b`, separated by spaces or commas.
    pub fn parse(n: u32, k: u32, s: &str) -> Result<Self> {
        let diagonals = s
            .split([' ', ','])
            .filter(|t| !t.is_empty())
            .map(|t| {
                let (a, b) = t.split_once('-').ok_or_else(|| Error::Parse(format!("expected a-b, got {t:?}")))?;
                let p = |v: &str| v.trim().parse::<u32>().map_err(|e| Error::Parse(format!("{v:?}: {e}")));
                Ok((p(a)?, p(b)?))
            })
            .collect::<Result<Vec<_>>>()?;
        Triangulation::new(n, k, diagonals)
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn diagonals(&self) -> &BTreeSet<Diagonal> {
        &self.diagonals
    }
}

impl fmt::Display for Triangulation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.diagonals.iter().map(|(a, b)| format!("{a}-{b}")).collect();
        f.write_str(&parts.join(" "))
    }
}

/// `k(n - 2k - 1)`, the number of nontrivial diagonals of every
/// k-triangulation (zero when `n <= 2k + 1`).
pub fn nontrivial_size(n: u32, k: u32) -> usize {
    (k as usize) * (n as usize).saturating_sub(2 * k as usize + 1)
}

/// All k-triangulations of the `n`-gon in lexicographic order of their
/// diagonal lists. Sets of the right size with no `k + 1` mutually crossing
/// diagonals are collected, then checked for maximality.
pub fn enumerate_k_triangulations(n: u32, k: u32) -> Vec<Triangulation> {
    let all = nontrivial_diagonals(n, k);
    let size = nontrivial_size(n, k);
    if size == 0 {
        return vec![Triangulation::new(n, k, []).expect("no nontrivial diagonal fits")];
    }

    fn grow(all: &[Diagonal], k: u32, size: usize, from: usize, chosen: &mut Vec<Diagonal>, out: &mut Vec<Vec<Diagonal>>) {
        if chosen.len() == size {
            out.push(chosen.clone());
            return;
        }
        for i in from..all.len() {
            if all.len() - i < size - chosen.len() {
                break;
            }
            if !completes_crossing(chosen, all[i], k) {
                chosen.push(all[i]);
                grow(all, k, size, i + 1, chosen, out);
                chosen.pop();
            }
        }
    }

    let mut sets: Vec<Vec<Diagonal>> = (0..all.len())
        .into_par_iter()
        .flat_map_iter(|first| {
            let mut out = Vec::new();
            grow(&all, k, size, first + 1, &mut vec![all[first]], &mut out);
            out
        })
        .collect();
    sets.sort();
    sets.into_iter()
        .map(|s| Triangulation::new(n, k, s).expect("k(n-2k-1) diagonals without k+1 crossing are maximal"))
        .collect()
}

/// `det(C_{n-i-j})` for `i, j = 1..=k`, with `C_m = 0` for `m < 0`.
pub fn catalan_det(n: u32, k: u32) -> i128 {
    let m: Vec<Vec<i128>> = (1..=k as i64)
        .map(|i| {
            (1..=k as i64)
                .map(|j| {
                    let idx = n as i64 - i - j;
                    if idx < 0 { 0 } else { catalan(idx as u32) }
                })
                .collect()
        })
        .collect();
    determinant(&m)
}

/// `T = N^m E^m` over `B = (EN)^m` with `m = n - 2k - 1`; its k-tuples are the
/// k-fans of Dyck paths counted by [`catalan_det`].
pub fn fan_region(n: u32, k: u32) -> Result<Region> {
    let m = n
        .checked_sub(2 * k + 1)
        .ok_or_else(|| Error::InvalidArgument(format!("need n >= 2k + 1, got n={n}, k={k}")))?;
    Region::from_heights(vec![m; m as usize], (0..m).collect(), m)
}

/// `d_i` for `i = 1..=n-k-1`: the number of nontrivial neighbours of vertex
/// `i` among `i + 1, ..., n`.
pub fn degree_sequence(t: &Triangulation) -> Vec<u32> {
    let len = (t.n as usize).saturating_sub(t.k as usize + 1);
    let mut d = vec![0; len];
    for &(a, _) in &t.diagonals {
        if (a as usize) <= len {
            d[a as usize - 1] += 1;
        }
    }
    d
}

/// The degree sequence a k-fan corresponds to:
/// `d_i = h_{i-1}` for `i <= k + 1` and `d_i = n - i - k - u_{i-k-1}` after.
pub fn predicted_degrees(t: &PathTuple, n: u32) -> Vec<u32> {
    let k = t.k() as u32;
    let h = t.h_stats();
    let u = t.u_stats();
    (1..n - k)
        .map(|i| {
            if i <= k + 1 {
                h[i as usize - 1]
            } else {
                n - i - k - u[(i - k - 2) as usize]
            }
        })
        .collect()
}

type Distribution = BTreeMap<Vec<u32>, u64>;

fn distribution(items: impl Iterator<Item = Vec<u32>>) -> Distribution {
    let mut m = Distribution::new();
    for v in items {
        *m.entry(v).or_insert(0) += 1;
    }
    m
}

/// First key whose counts differ, with the two counts.
fn first_difference(a: &Distribution, b: &Distribution) -> Option<(Vec<u32>, u64, u64)> {
    a.keys()
        .chain(b.keys())
        .collect::<BTreeSet<_>>()
        .into_iter()
        .map(|key| (key.clone(), a.get(key).copied().unwrap_or(0), b.get(key).copied().unwrap_or(0)))
        .find(|(_, x, y)| x != y)
}

/// One distribution comparison: triangulation side against fan side.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DistributionComparison {
    pub equal: bool,
    /// `(value, triangulations, fans)` for the first value counted differently.
    pub counterexample: Option<(Vec<u32>, u64, u64)>,
}

impl DistributionComparison {
    fn of(a: &Distribution, b: &Distribution) -> Self {
        let counterexample = first_difference(a, b);
        DistributionComparison { equal: counterexample.is_none(), counterexample }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DegreeReport {
    pub n: u32,
    pub k: u32,
    pub triangulations: usize,
    pub fans: usize,
    /// `(d_1..d_k)` against `(h_0..h_{k-1})`.
    pub first_k_degrees: DistributionComparison,
    /// `(d_1..d_{k+1})` against `(h_0..h_k)`.
    pub first_k_plus_one_degrees: DistributionComparison,
    /// Full degree sequence against the sequence predicted from `(h, u)`.
    pub full_sequence: DistributionComparison,
    /// Whether `(d_1..d_{k+1})` is invariant under every permutation.
    pub window_symmetric: bool,
}

impl DegreeReport {
    pub fn holds(&self) -> bool {
        self.triangulations == self.fans
            && self.first_k_degrees.equal
            && self.first_k_plus_one_degrees.equal
            && self.full_sequence.equal
            && self.window_symmetric
    }
}

fn is_symmetric(dist: &Distribution) -> bool {
    dist.iter().all(|(v, &c)| {
        (0..v.len()).all(|i| {
            (i + 1..v.len()).all(|j| {
                let mut w = v.clone();
                w.swap(i, j);
                dist.get(&w) == Some(&c)
            })
        })
    })
}

/// Compares degree distributions of all k-triangulations of the `n`-gon with
/// the statistics of k-fans.
pub fn degree_distribution_check(n: u32, k: u32) -> Result<DegreeReport> {
    let region = fan_region(n, k)?;
    let tris = enumerate_k_triangulations(n, k);
    let fans = enumerate_tuples(&region, k as usize);
    let degrees: Vec<Vec<u32>> = tris.iter().map(degree_sequence).collect();
    let window = |len: usize| -> Distribution { distribution(degrees.iter().map(|d| d[..len].to_vec())) };
    let h_window = |len: usize| -> Distribution { distribution(fans.iter().map(|t| t.h_stats()[..len].to_vec())) };
    let (k_us, k1) = (k as usize, k as usize + 1);
    let d_k1 = window(k1);
    Ok(DegreeReport {
        n,
        k,
        triangulations: tris.len(),
        fans: fans.len(),
        first_k_degrees: DistributionComparison::of(&window(k_us), &h_window(k_us)),
        first_k_plus_one_degrees: DistributionComparison::of(&d_k1, &h_window(k1)),
        full_sequence: DistributionComparison::of(
            &distribution(degrees.iter().cloned()),
            &distribution(fans.iter().map(|t| predicted_degrees(t, n))),
        ),
        window_symmetric: is_symmetric(&d_k1),
    })
}
