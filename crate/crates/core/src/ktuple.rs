//! Weakly nested tuples of paths and their coincidence statistics.

use crate::error::{Error, Result};
use crate::matroid::bltr_single_path;
use crate::path::{shared_east_steps, shared_north_steps, Path, Region};
use crate::swap::swapall;

/// Paths `P_1 >= P_2 >= ... >= P_k` in a region, compared column by column.
/// `P_0` is the upper boundary and `P_{k+1}` the lower one.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PathTuple {
    region: Region,
    paths: Vec<Path>,
}

impl PathTuple {
    pub fn new(region: Region, paths: Vec<Path>) -> Result<Self> {
        for p in &paths {
            if !p.is_monotone() {
                return Err(Error::NotMonotone);
            }
            region.check_contains(p)?;
        }
        for (i, w) in paths.windows(2).enumerate() {
            if let Some(c) = (0..region.x()).find(|&c| w[0].heights()[c] < w[1].heights()[c]) {
                return Err(Error::InvalidArgument(format!(
                    "path {} dips below path {} at column {}",
                    i + 1,
                    i + 2,
                    c + 1
                )));
            }
        }
        Ok(PathTuple { region, paths })
    }

    pub(crate) fn new_unchecked(region: Region, paths: Vec<Path>) -> Self {
        PathTuple { region, paths }
    }

    pub fn region(&self) -> &Region {
        &self.region
    }

    pub fn paths(&self) -> &[Path] {
        &self.paths
    }

    pub fn k(&self) -> usize {
        self.paths.len()
    }

    /// `P_i` for `0 <= i <= k + 1`, boundaries included.
    pub fn layer(&self, i: usize) -> Path {
        match i {
            0 => self.region.top_path(),
            i if i == self.k() + 1 => self.region.bottom_path(),
            i => self.paths[i - 1].clone(),
        }
    }

    /// `h_i`, the number of east steps shared by `P_i` and `P_{i+1}`, for
    /// `i = 0..=k`.
    pub fn h_stats(&self) -> Vec<u32> {
        (0..=self.k()).map(|i| shared_east_steps(&self.layer(i), &self.layer(i + 1))).collect()
    }

    /// `v_i`, the number of north steps shared by `P_i` and `P_{i+1}`.
    pub fn v_stats(&self) -> Vec<u32> {
        (0..=self.k()).map(|i| shared_north_steps(&self.layer(i), &self.layer(i + 1))).collect()
    }

    /// `u_s` for `s = 1..y-1`: east edges at height `y - s` strictly between
    /// the boundaries that no path of the tuple uses.
    pub fn u_stats(&self) -> Vec<u32> {
        let y = self.region.y();
        let (top, bottom) = (self.region.top_heights(), self.region.bottom_heights());
        (1..y)
            .map(|s| {
                let z = y - s;
                (0..self.region.x())
                    .filter(|&c| bottom[c] < z && z < top[c])
                    .filter(|&c| self.paths.iter().all(|p| p.heights()[c] != z))
                    .count() as u32
            })
            .collect()
    }

    fn sub_region(&self, i: usize) -> Region {
        Region::new(&self.layer(i - 1), &self.layer(i + 1)).expect("neighbouring layers are nested")
    }

    fn replace(&self, i: usize, p: Path) -> Self {
        let mut paths = self.paths.clone();
        paths[i - 1] = p;
        PathTuple { region: self.region.clone(), paths }
    }

    fn check_layer(&self, i: usize) -> Result<()> {
        if i == 0 || i > self.k() {
            return Err(Error::InvalidArgument(format!("layer {i} is not in 1..={}", self.k())));
        }
        Ok(())
    }

    /// Applies the top/bottom involution to `P_i` inside the region between
    /// `P_{i-1}` and `P_{i+1}`, exchanging `h_{i-1}` and `h_i`.
    pub fn transpose_h(&self, i: usize) -> Result<Self> {
        self.check_layer(i)?;
        let p = swapall(&self.sub_region(i), &self.paths[i - 1])?;
        Ok(self.replace(i, p))
    }

    /// Rearranges the `h` statistics by adjacent transpositions so that
    /// position `j` of the result's `h` vector holds `h[perm[j]]` of this
    /// tuple. `perm` is a permutation of `0..=k`.
    pub fn apply_perm_h(&self, perm: &[usize]) -> Result<Self> {
        let n = self.k() + 1;
        let mut seen = vec![false; n];
        if perm.len() != n || perm.iter().any(|&p| p >= n || std::mem::replace(&mut seen[p], true)) {
            return Err(Error::InvalidArgument(format!("{perm:?} is not a permutation of 0..{n}")));
        }
        let mut arrangement: Vec<usize> = (0..n).collect();
        let mut t = self.clone();
        for j in 0..n {
            let mut q = arrangement.iter().position(|&a| a == perm[j]).expect("present");
            while q > j {
                t = t.transpose_h(q)?;
                arrangement.swap(q - 1, q);
                q -= 1;
            }
        }
        Ok(t)
    }

    /// Applies the bottom/left to top/right path bijection to
    /// `P_k, ..., P_1` and then to `P_2, ..., P_k`, each inside the region
    /// between its neighbours. Tuples with `(h_k, v_0) = (e, f)` go to tuples
    /// with `(h_0, v_k) = (e, f)`.
    pub fn bltr(&self) -> Result<Self> {
        let k = self.k();
        let order = (1..=k).rev().chain(2..=k);
        let mut t = self.clone();
        for i in order {
            let p = bltr_single_path(&t.sub_region(i), &t.paths[i - 1])?;
            t = t.replace(i, p);
        }
        Ok(t)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::enumerate::{all_regions, enumerate_tuples};

    fn p(s: &str) -> Path {
        Path::parse(s).unwrap()
    }

    fn region(t: &str, b: &str) -> Region {
        Region::new(&p(t), &p(b)).unwrap()
    }

    #[test]
    fn weight_example_tuple() {
        let r = region("NNNNNEEEEEE", "ENEENNENEEN");
        let t = PathTuple::new(r, vec![p("NNENENNEEEE"), p("ENNNENEENEE"), p("ENENENNEENE")]).unwrap();
        assert_eq!(t.h_stats(), vec![4, 3, 3, 3]);
        assert_eq!(t.u_stats(), vec![2, 2, 1, 1]);
    }

    #[test]
    fn transpose_small() {
        let r = region("NE", "EN");
        let t = PathTuple::new(r, vec![p("NE"), p("EN")]).unwrap();
        assert_eq!(t.h_stats(), vec![1, 0, 1]);
        assert_eq!(t.transpose_h(1).unwrap().h_stats(), vec![0, 1, 1]);
        assert!(t.transpose_h(3).is_err());
    }

    #[test]
    fn nesting_is_checked() {
        let r = region("NNEE", "EENN");
        assert!(PathTuple::new(r, vec![p("ENEN"), p("NNEE")]).is_err());
    }

    #[test]
    fn transpositions_exchange_h_and_are_involutions() {
        for r in all_regions(6) {
            for k in 1..=3 {
                for t in enumerate_tuples(&r, k) {
                    let h = t.h_stats();
                    for i in 1..=k {
                        let s = t.transpose_h(i).unwrap();
                        let mut expected = h.clone();
                        expected.swap(i - 1, i);
                        assert_eq!(s.h_stats(), expected);
                        assert_eq!(s.transpose_h(i).unwrap(), t);
                    }
                }
            }
        }
    }

    #[test]
    fn perm_h_realizes_the_permutation() {
        let r = region("NNNEEE", "ENENEN");
        for t in enumerate_tuples(&r, 2) {
            let h = t.h_stats();
            for perm in [[0, 1, 2], [2, 0, 1], [1, 2, 0], [2, 1, 0]] {
                let s = t.apply_perm_h(&perm).unwrap();
                let expected: Vec<u32> = perm.iter().map(|&j| h[j]).collect();
                assert_eq!(s.h_stats(), expected);
            }
        }
    }

    #[test]
    fn bltr_moves_bottom_left_to_top_right() {
        for r in all_regions(5) {
            for k in 1..=3 {
                for t in enumerate_tuples(&r, k) {
                    let s = t.bltr().unwrap();
                    let (h, v) = (t.h_stats(), t.v_stats());
                    let (h2, v2) = (s.h_stats(), s.v_stats());
                    assert_eq!((h2[0], v2[k]), (h[k], v[0]), "{r} {t:?}");
                }
            }
        }
    }
}
