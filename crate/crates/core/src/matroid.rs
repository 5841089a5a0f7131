//! Matroids given by a bases oracle, Tutte activities under a linear order,
//! and the activity-preserving bijections between two orders.
//!
//! Elements are `1..=m`. A monotone path in a region is identified with the
//! set of positions of its north steps; these sets are the bases of the
//! lattice path matroid of the region.

use std::fmt;

use crate::error::{Error, Result};
use crate::path::{Path, Region};
use crate::poly::MultiPoly;

/// A subset of `1..=64`, bit `e - 1` standing for element `e`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ElementSet(pub u64);

impl ElementSet {
    pub fn from_elements(elements: &[usize]) -> Self {
        ElementSet(elements.iter().fold(0, |acc, &e| acc | 1 << (e - 1)))
    }

    pub fn contains(self, e: usize) -> bool {
        self.0 >> (e - 1) & 1 == 1
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn with(self, e: usize) -> Self {
        ElementSet(self.0 | 1 << (e - 1))
    }

    pub fn without(self, e: usize) -> Self {
        ElementSet(self.0 & !(1 << (e - 1)))
    }

    /// `B - out + into`.
    pub fn exchange(self, out: usize, into: usize) -> Self {
        self.without(out).with(into)
    }

    pub fn elements(self) -> Vec<usize> {
        (1..=64).filter(|&e| self.contains(e)).collect()
    }

    /// The set with membership of `a` and `b` exchanged, when it contains
    /// exactly one of them.
    pub fn toggled_pair(self, a: usize, b: usize) -> Option<Self> {
        match (self.contains(a), self.contains(b)) {
            (true, false) => Some(self.exchange(a, b)),
            (false, true) => Some(self.exchange(b, a)),
            _ => None,
        }
    }
}

impl fmt::Display for ElementSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let es: Vec<String> = self.elements().iter().map(|e| e.to_string()).collect();
        write!(f, "{{{}}}", es.join(","))
    }
}

pub trait BasesOracle: Sync {
    fn ground_size(&self) -> usize;
    fn rank(&self) -> usize;
    fn is_base(&self, set: ElementSet) -> bool;

    /// All bases, in increasing order of their bit patterns.
    fn bases(&self) -> Vec<ElementSet> {
        subsets_of_size(self.ground_size(), self.rank())
            .filter(|&s| self.is_base(s))
            .collect()
    }
}

/// Subsets of `1..=m` of size `r` in increasing bit order.
pub fn subsets_of_size(m: usize, r: usize) -> impl Iterator<Item = ElementSet> {
    let limit: u64 = if m == 64 { u64::MAX } else { (1u64 << m) - 1 };
    let first = if r == 0 { 0 } else { (1u64 << r) - 1 };
    let mut next = (r <= m).then_some(first);
    std::iter::from_fn(move || {
        let cur = next?;
        next = if cur == 0 {
            None
        } else {
            // Gosper's hack
            let c = cur & cur.wrapping_neg();
            let rr = cur + c;
            let n = (((rr ^ cur) >> 2) / c) | rr;
            (rr != 0 && n <= limit && n.count_ones() as usize == r).then_some(n)
        };
        Some(ElementSet(cur))
    })
}

/// Checks the basis exchange axiom: for bases `C`, `D` and `d` in `D - C`
/// some `c` in `C - D` makes `C - c + d` a base.
pub fn check_exchange_axiom(oracle: &dyn BasesOracle) -> Result<()> {
    let bases = oracle.bases();
    if bases.is_empty() {
        return Err(Error::NotAMatroid("no bases".into()));
    }
    for &c in &bases {
        for &d in &bases {
            for e in ElementSet(d.0 & !c.0).elements() {
                let ok = ElementSet(c.0 & !d.0)
                    .elements()
                    .into_iter()
                    .any(|a| oracle.is_base(c.exchange(a, e)));
                if !ok {
                    return Err(Error::NotAMatroid(format!("exchange fails for {c}, {d}, {e}")));
                }
            }
        }
    }
    Ok(())
}

/// The lattice path matroid of a region.
pub struct LatticePathMatroid {
    region: Region,
    table: Option<Vec<bool>>,
}

impl LatticePathMatroid {
    const TABLE_LIMIT: usize = 20;

    pub fn new(region: Region) -> Self {
        let mut lpm = LatticePathMatroid { region, table: None };
        let m = lpm.ground_size();
        if m <= Self::TABLE_LIMIT {
            let mut table = vec![false; 1 << m];
            for s in subsets_of_size(m, lpm.rank()) {
                table[s.0 as usize] = lpm.check(s);
            }
            lpm.table = Some(table);
        }
        lpm
    }

    pub fn region(&self) -> &Region {
        &self.region
    }

    fn check(&self, set: ElementSet) -> bool {
        set.len() == self.rank()
            && self
                .path_of(set)
                .is_some_and(|p| self.region.contains(&p).unwrap_or(false))
    }

    fn path_of(&self, set: ElementSet) -> Option<Path> {
        if set.0 >> self.ground_size() != 0 {
            return None;
        }
        Path::from_north_index_set(&set.elements(), self.region.x(), self.region.y()).ok()
    }

    pub fn base_of_path(&self, path: &Path) -> Result<ElementSet> {
        self.region.check_contains(path)?;
        Ok(ElementSet::from_elements(&path.north_index_set()?))
    }

    pub fn path_of_base(&self, base: ElementSet) -> Result<Path> {
        if !self.is_base(base) {
            return Err(Error::NotABase(base.to_string()));
        }
        Ok(self.path_of(base).expect("bases decode to paths"))
    }
}

impl BasesOracle for LatticePathMatroid {
    fn ground_size(&self) -> usize {
        self.region.x() + self.region.y() as usize
    }

    fn rank(&self) -> usize {
        self.region.y() as usize
    }

    fn is_base(&self, set: ElementSet) -> bool {
        match &self.table {
            Some(t) => (set.0 as usize) < t.len() && t[set.0 as usize],
            None => self.check(set),
        }
    }
}

/// The uniform matroid `U_{r,m}`: every `r`-subset is a base.
pub struct UniformMatroid {
    pub r: usize,
    pub m: usize,
}

impl BasesOracle for UniformMatroid {
    fn ground_size(&self) -> usize {
        self.m
    }

    fn rank(&self) -> usize {
        self.r
    }

    fn is_base(&self, set: ElementSet) -> bool {
        set.len() == self.r && set.0 >> self.m == 0
    }
}

/// A linear order on `1..=m`, stored as the list of elements from smallest
/// to largest.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LinearOrder {
    ranking: Vec<usize>,
    position: Vec<usize>,
}

impl LinearOrder {
    pub fn from_ranking(ranking: Vec<usize>) -> Result<Self> {
        let m = ranking.len();
        let mut position = vec![usize::MAX; m + 1];
        for (p, &e) in ranking.iter().enumerate() {
            if e == 0 || e > m || position[e] != usize::MAX {
                return Err(Error::InvalidOrder(format!("{ranking:?} is not a permutation of 1..={m}")));
            }
            position[e] = p;
        }
        Ok(LinearOrder { ranking, position })
    }

    pub fn natural(m: usize) -> Self {
        Self::from_ranking((1..=m).collect()).expect("identity")
    }

    pub fn reversed(m: usize) -> Self {
        Self::from_ranking((1..=m).rev().collect()).expect("reversal")
    }

    /// `natural`, `reversed`, or `perm:e1,e2,...` listing elements from
    /// smallest to largest.
    pub fn parse(s: &str, m: usize) -> Result<Self> {
        match s {
            "natural" => Ok(Self::natural(m)),
            "reversed" => Ok(Self::reversed(m)),
            _ => {
                let list = s
                    .strip_prefix("perm:")
                    .ok_or_else(|| Error::InvalidOrder(format!("unknown order {s:?}")))?;
                let ranking = list
                    .split(',')
                    .map(|t| t.trim().parse::<usize>().map_err(|e| Error::InvalidOrder(e.to_string())))
                    .collect::<Result<Vec<_>>>()?;
                if ranking.len() != m {
                    return Err(Error::InvalidOrder(format!("expected {m} elements")));
                }
                Self::from_ranking(ranking)
            }
        }
    }

    pub fn len(&self) -> usize {
        self.ranking.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ranking.is_empty()
    }

    pub fn ranking(&self) -> &[usize] {
        &self.ranking
    }

    pub fn precedes(&self, a: usize, b: usize) -> bool {
        self.position[a] < self.position[b]
    }

    fn swap_positions(&mut self, p: usize) {
        self.ranking.swap(p, p + 1);
        self.position[self.ranking[p]] = p;
        self.position[self.ranking[p + 1]] = p + 1;
    }
}

/// Whether `elem` is active with respect to `base`: no smaller `z` exchanges
/// with it to give another base. For `elem` in the base this is internal
/// activity, otherwise external activity.
pub fn is_active(oracle: &dyn BasesOracle, base: ElementSet, order: &LinearOrder, elem: usize) -> bool {
    order.ranking[..order.position[elem]]
        .iter()
        .all(|&z| base.toggled_pair(elem, z).is_none_or(|b| !oracle.is_base(b)))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Activities {
    pub internal: Vec<usize>,
    pub external: Vec<usize>,
}

impl Activities {
    pub fn counts(&self) -> (u32, u32) {
        (self.internal.len() as u32, self.external.len() as u32)
    }
}

pub fn activities(oracle: &dyn BasesOracle, base: ElementSet, order: &LinearOrder) -> Result<Activities> {
    if !oracle.is_base(base) {
        return Err(Error::NotABase(base.to_string()));
    }
    check_order(oracle, order)?;
    let (mut internal, mut external) = (Vec::new(), Vec::new());
    for e in 1..=oracle.ground_size() {
        if is_active(oracle, base, order, e) {
            if base.contains(e) {
                internal.push(e);
            } else {
                external.push(e);
            }
        }
    }
    Ok(Activities { internal, external })
}

fn check_order(oracle: &dyn BasesOracle, order: &LinearOrder) -> Result<()> {
    if order.len() != oracle.ground_size() {
        return Err(Error::InvalidOrder(format!(
            "order on {} elements for a ground set of size {}",
            order.len(),
            oracle.ground_size()
        )));
    }
    Ok(())
}

/// The Tutte polynomial `sum x^internal y^external` over all bases.
pub fn tutte_poly(oracle: &dyn BasesOracle, order: &LinearOrder) -> Result<MultiPoly> {
    check_order(oracle, order)?;
    let mut p = MultiPoly::zero(["x", "y"]);
    for b in oracle.bases() {
        let (i, e) = activities(oracle, b, order)?.counts();
        p.add_term(vec![i, e], 1)?;
    }
    Ok(p)
}

/// Symmetric exchange: for `d` in `D - C`, the first `c` in `C - D` such that
/// both `C - c + d` and `D - d + c` are bases.
pub fn strong_exchange(oracle: &dyn BasesOracle, c: ElementSet, d: ElementSet, elem: usize) -> Result<usize> {
    for s in [c, d] {
        if !oracle.is_base(s) {
            return Err(Error::NotABase(s.to_string()));
        }
    }
    if !d.contains(elem) || c.contains(elem) {
        return Err(Error::InvalidArgument(format!("{elem} is not in D - C")));
    }
    ElementSet(c.0 & !d.0)
        .elements()
        .into_iter()
        .find(|&a| oracle.is_base(c.exchange(a, elem)) && oracle.is_base(d.exchange(elem, a)))
        .ok_or_else(|| Error::NotAMatroid(format!("no symmetric exchange for {c}, {d}, {elem}")))
}

/// The bijection for exchanging adjacent elements `x < y` of the order: it
/// carries activities with respect to `order` to activities with respect to
/// the order with `x` and `y` exchanged, and `phi_xy(y, x)` undoes it.
pub fn phi_xy(oracle: &dyn BasesOracle, order: &LinearOrder, x: usize, y: usize, base: ElementSet) -> Result<ElementSet> {
    check_order(oracle, order)?;
    let m = oracle.ground_size();
    if x == 0 || y == 0 || x > m || y > m || order.position[y] != order.position[x] + 1 {
        return Err(Error::NotAdjacent(x, y));
    }
    if !oracle.is_base(base) {
        return Err(Error::NotABase(base.to_string()));
    }
    let mut swapped = order.clone();
    swapped.swap_positions(order.position[x]);
    Ok(match base.toggled_pair(x, y) {
        Some(b)
            if oracle.is_base(b)
                && (is_active(oracle, base, order, x) || is_active(oracle, base, &swapped, y)) =>
        {
            b
        }
        _ => base,
    })
}

/// Composes [`phi_xy`] along a sequence of adjacent transpositions turning
/// `from` into `to`: each element of `to`, smallest first, is bubbled down
/// into place. Activities under `from` become activities under `to`.
pub fn reorder_bijection(oracle: &dyn BasesOracle, from: &LinearOrder, to: &LinearOrder, base: ElementSet) -> Result<ElementSet> {
    check_order(oracle, from)?;
    check_order(oracle, to)?;
    let mut cur = from.clone();
    let mut b = base;
    for p in 0..to.len() {
        let target = to.ranking[p];
        let mut q = cur.position[target];
        while q > p {
            let (x, y) = (cur.ranking[q - 1], cur.ranking[q]);
            b = phi_xy(oracle, &cur, x, y, b)?;
            cur.swap_positions(q - 1);
            q -= 1;
        }
    }
    Ok(b)
}

/// The path whose top and right contacts equal the bottom and left contacts
/// of `path`, obtained by reversing the order of the lattice path matroid.
pub fn bltr_single_path(region: &Region, path: &Path) -> Result<Path> {
    let lpm = LatticePathMatroid::new(region.clone());
    let m = lpm.ground_size();
    let base = lpm.base_of_path(path)?;
    let image = reorder_bijection(&lpm, &LinearOrder::natural(m), &LinearOrder::reversed(m), base)?;
    lpm.path_of_base(image)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::enumerate::{all_regions, monotone_paths};

    fn region(t: &str, b: &str) -> Region {
        Region::new(&Path::parse(t).unwrap(), &Path::parse(b).unwrap()).unwrap()
    }

    #[test]
    fn subsets_enumeration() {
        assert_eq!(subsets_of_size(5, 2).count(), 10);
        assert_eq!(subsets_of_size(4, 0).count(), 1);
        assert_eq!(subsets_of_size(3, 4).count(), 0);
        assert_eq!(subsets_of_size(3, 3).collect::<Vec<_>>(), vec![ElementSet(7)]);
    }

    #[test]
    fn uniform_one_two() {
        let u = UniformMatroid { r: 1, m: 2 };
        let nat = LinearOrder::natural(2);
        let a = activities(&u, ElementSet::from_elements(&[1]), &nat).unwrap();
        assert_eq!(a.counts(), (1, 0));
        let a = activities(&u, ElementSet::from_elements(&[2]), &nat).unwrap();
        assert_eq!(a.counts(), (0, 1));
        let t = tutte_poly(&u, &nat).unwrap();
        assert_eq!(t.to_string(), "x + y");
        assert!(matches!(activities(&u, ElementSet::from_elements(&[1, 2]), &nat), Err(Error::NotABase(_))));
    }

    #[test]
    fn lpm_bases_are_paths() {
        let r = region("NNENEE", "ENEENN");
        let lpm = LatticePathMatroid::new(r.clone());
        assert_eq!(lpm.bases().len(), 15);
        check_exchange_axiom(&lpm).unwrap();
        for p in monotone_paths(&r) {
            let b = lpm.base_of_path(&p).unwrap();
            assert_eq!(lpm.path_of_base(b).unwrap(), p);
        }
    }

    #[test]
    fn natural_order_activities_are_left_and_bottom_contacts() {
        for r in all_regions(6) {
            let lpm = LatticePathMatroid::new(r.clone());
            let m = lpm.ground_size();
            for p in monotone_paths(&r) {
                let s = r.contact_stats(&p).unwrap();
                let b = lpm.base_of_path(&p).unwrap();
                let nat = activities(&lpm, b, &LinearOrder::natural(m)).unwrap();
                assert_eq!(nat.counts(), (s.l, s.b), "{r} {p}");
                let rev = activities(&lpm, b, &LinearOrder::reversed(m)).unwrap();
                assert_eq!(rev.counts(), (s.r, s.t), "{r} {p}");
            }
        }
    }

    #[test]
    fn phi_is_an_involution_on_uniform() {
        let u = UniformMatroid { r: 2, m: 4 };
        let ord = LinearOrder::natural(4);
        let mut swapped = ord.clone();
        swapped.swap_positions(1);
        for b in u.bases() {
            let c = phi_xy(&u, &ord, 2, 3, b).unwrap();
            assert_eq!(phi_xy(&u, &swapped, 3, 2, c).unwrap(), b);
        }
        assert_eq!(phi_xy(&u, &ord, 1, 3, ElementSet::from_elements(&[1, 2])), Err(Error::NotAdjacent(1, 3)));
    }

    #[test]
    fn order_parsing() {
        assert_eq!(LinearOrder::parse("perm:3,1,2", 3).unwrap().ranking(), &[3, 1, 2]);
        assert!(LinearOrder::parse("perm:1,1,2", 3).is_err());
        assert!(LinearOrder::parse("sideways", 3).is_err());
    }

    #[test]
    fn bltr_single_path_swaps_statistics() {
        for r in all_regions(6) {
            let mut seen = std::collections::HashSet::new();
            for p in monotone_paths(&r) {
                let q = bltr_single_path(&r, &p).unwrap();
                let (s, t) = (r.contact_stats(&p).unwrap(), r.contact_stats(&q).unwrap());
                assert_eq!((t.t, t.r), (s.b, s.l), "{r} {p} -> {q}");
                assert!(seen.insert(q));
            }
        }
    }
}
