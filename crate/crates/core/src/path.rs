//! Lattice paths encoded by the heights of their east steps, and regions
//! bounded by two monotone paths.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A lattice path from the origin made of unit N, E and S steps.
///
/// Column `j` (0-based) is the `j`-th east step; `heights[j]` is its
/// y-coordinate. The vertical run at x-coordinate `j` goes from the previous
/// east step's height (0 for the first) to `heights[j]`, and the path closes
/// with a vertical run up to `y`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "PathWire", into = "PathWire")]
pub struct Path {
    heights: Vec<u32>,
    y: u32,
}

#[derive(Serialize, Deserialize)]
struct PathWire {
    x: usize,
    y: u32,
    heights: Vec<u32>,
}

impl TryFrom<PathWire> for Path {
    type Error = Error;

    fn try_from(w: PathWire) -> Result<Self> {
        if w.heights.len() != w.x {
            return Err(Error::Parse(format!(
                "x = {} but {} heights given",
                w.x,
                w.heights.len()
            )));
        }
        Ok(Path::from_heights(w.heights, w.y))
    }
}

impl From<Path> for PathWire {
    fn from(p: Path) -> Self {
        PathWire { x: p.x(), y: p.y, heights: p.heights }
    }
}

impl Path {
    pub fn from_heights(heights: Vec<u32>, y: u32) -> Self {
        Path { heights, y }
    }

    /// Parses an uppercase step string over `{N, E, S}`.
    pub fn parse(steps: &str) -> Result<Self> {
        #[derive(PartialEq)]
        enum Dir {
            Flat,
            Up,
            Down,
        }
        let mut heights = Vec::new();
        let mut py: u32 = 0;
        let mut dir = Dir::Flat;
        for (i, c) in steps.chars().enumerate() {
            let position = i + 1;
            match c {
                'N' => {
                    if dir == Dir::Down {
                        return Err(Error::RevisitsEdge(position));
                    }
                    dir = Dir::Up;
                    py += 1;
                }
                'S' => {
                    if py == 0 {
                        return Err(Error::LeavesQuadrant(position));
                    }
                    if dir == Dir::Up {
                        return Err(Error::RevisitsEdge(position));
                    }
                    dir = Dir::Down;
                    py -= 1;
                }
                'E' => {
                    heights.push(py);
                    dir = Dir::Flat;
                }
                _ => return Err(Error::InvalidStep { step: c, position }),
            }
        }
        Ok(Path { heights, y: py })
    }

    pub fn x(&self) -> usize {
        self.heights.len()
    }

    pub fn y(&self) -> u32 {
        self.y
    }

    pub fn heights(&self) -> &[u32] {
        &self.heights
    }

    pub fn endpoint(&self) -> (usize, u32) {
        (self.x(), self.y)
    }

    pub fn is_monotone(&self) -> bool {
        self.heights.windows(2).all(|w| w[0] <= w[1])
            && self.heights.last().is_none_or(|&h| h <= self.y)
    }

    /// Start and end height of the vertical run at x-coordinate `j`.
    pub fn vertical_run(&self, j: usize) -> (u32, u32) {
        run(&self.heights, self.y, j)
    }

    pub fn to_step_string(&self) -> String {
        let mut s = String::new();
        let mut cur = 0u32;
        for &h in self.heights.iter().chain(std::iter::once(&self.y)) {
            if h >= cur {
                s.extend(std::iter::repeat_n('N', (h - cur) as usize));
            } else {
                s.extend(std::iter::repeat_n('S', (cur - h) as usize));
            }
            s.push('E');
            cur = h;
        }
        s.pop();
        s
    }

    /// 1-based columns `i` with `heights[i] > heights[i + 1]`, i.e. east
    /// steps followed by a south step.
    pub fn descent_set(&self) -> Vec<usize> {
        (0..self.x().saturating_sub(1))
            .filter(|&i| self.heights[i] > self.heights[i + 1])
            .map(|i| i + 1)
            .collect()
    }

    /// 1-based positions of the north steps in the step string.
    pub fn north_index_set(&self) -> Result<Vec<usize>> {
        if !self.is_monotone() {
            return Err(Error::NotMonotone);
        }
        Ok(self
            .to_step_string()
            .chars()
            .enumerate()
            .filter(|&(_, c)| c == 'N')
            .map(|(i, _)| i + 1)
            .collect())
    }

    /// Inverse of [`Path::north_index_set`] for a path ending at `(x, y)`.
    pub fn from_north_index_set(indices: &[usize], x: usize, y: u32) -> Result<Self> {
        let m = x + y as usize;
        if indices.len() != y as usize {
            return Err(Error::InvalidArgument(format!(
                "{} north indices for a path with {y} north steps",
                indices.len()
            )));
        }
        let mut is_north = vec![false; m];
        for &i in indices {
            if i == 0 || i > m || is_north[i - 1] {
                return Err(Error::InvalidArgument(format!("bad north index {i}")));
            }
            is_north[i - 1] = true;
        }
        let mut heights = Vec::with_capacity(x);
        let mut h = 0;
        for north in is_north {
            if north {
                h += 1;
            } else {
                heights.push(h);
            }
        }
        Ok(Path { heights, y })
    }
}

fn run(heights: &[u32], y: u32, j: usize) -> (u32, u32) {
    let from = if j == 0 { 0 } else { heights[j - 1] };
    let to = if j < heights.len() { heights[j] } else { y };
    (from, to)
}

/// Number of unit north steps shared by two ascending vertical runs.
fn shared_rise(a: (u32, u32), b: (u32, u32)) -> u32 {
    if a.1 < a.0 || b.1 < b.0 {
        return 0;
    }
    a.1.min(b.1).saturating_sub(a.0.max(b.0))
}

/// Number of columns where two paths with the same endpoint have an east
/// step at the same height.
pub fn shared_east_steps(a: &Path, b: &Path) -> u32 {
    a.heights.iter().zip(&b.heights).filter(|(p, q)| p == q).count() as u32
}

/// Number of unit north steps two paths with the same endpoint have in
/// common.
pub fn shared_north_steps(a: &Path, b: &Path) -> u32 {
    (0..=a.x()).map(|j| shared_rise(a.vertical_run(j), b.vertical_run(j))).sum()
}

impl FromStr for Path {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Path::parse(s)
    }
}

impl fmt::Display for Path {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_step_string())
    }
}

/// Contact statistics of a path in a region: east steps shared with the
/// top (`t`) and bottom (`b`) boundary, north steps shared with the top
/// (`l`) and bottom (`r`) boundary.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ContactStats {
    pub t: u32,
    pub b: u32,
    pub l: u32,
    pub r: u32,
}

/// The set of lattice paths weakly between an upper boundary `T` and a lower
/// boundary `B` with common endpoints.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Region {
    top: Vec<u32>,
    bottom: Vec<u32>,
    y: u32,
}

impl Region {
    pub fn new(top: &Path, bottom: &Path) -> Result<Self> {
        if !top.is_monotone() || !bottom.is_monotone() {
            return Err(Error::NotMonotone);
        }
        if top.endpoint() != bottom.endpoint() {
            return Err(Error::EndpointMismatch(top.endpoint(), bottom.endpoint()));
        }
        Self::from_heights(top.heights.clone(), bottom.heights.clone(), top.y)
    }

    pub fn from_heights(top: Vec<u32>, bottom: Vec<u32>, y: u32) -> Result<Self> {
        if top.len() != bottom.len() {
            return Err(Error::EndpointMismatch((top.len(), y), (bottom.len(), y)));
        }
        let t = Path::from_heights(top, y);
        let b = Path::from_heights(bottom, y);
        if !t.is_monotone() || !b.is_monotone() {
            return Err(Error::NotMonotone);
        }
        if let Some(i) = (0..t.x()).find(|&i| t.heights[i] < b.heights[i]) {
            return Err(Error::Dominance(i + 1));
        }
        Ok(Region { top: t.heights, bottom: b.heights, y })
    }

    /// Parses `T=<steps>;B=<steps>`.
    pub fn parse(s: &str) -> Result<Self> {
        let mut top = None;
        let mut bottom = None;
        for part in s.split(';').map(str::trim).filter(|p| !p.is_empty()) {
            let (key, val) = part
                .split_once('=')
                .ok_or_else(|| Error::Parse(format!("expected KEY=steps, got {part:?}")))?;
            match key.trim() {
                "T" => top = Some(Path::parse(val.trim())?),
                "B" => bottom = Some(Path::parse(val.trim())?),
                k => return Err(Error::Parse(format!("unknown boundary {k:?}"))),
            }
        }
        match (top, bottom) {
            (Some(t), Some(b)) => Region::new(&t, &b),
            _ => Err(Error::Parse("region needs both T= and B=".into())),
        }
    }

    pub fn x(&self) -> usize {
        self.top.len()
    }

    pub fn y(&self) -> u32 {
        self.y
    }

    pub fn top_heights(&self) -> &[u32] {
        &self.top
    }

    pub fn bottom_heights(&self) -> &[u32] {
        &self.bottom
    }

    pub fn top_path(&self) -> Path {
        Path::from_heights(self.top.clone(), self.y)
    }

    pub fn bottom_path(&self) -> Path {
        Path::from_heights(self.bottom.clone(), self.y)
    }

    fn check_endpoint(&self, path: &Path) -> Result<()> {
        if path.endpoint() != (self.x(), self.y) {
            return Err(Error::EndpointMismatch(path.endpoint(), (self.x(), self.y)));
        }
        Ok(())
    }

    /// Whether the path lies weakly between the boundaries. Comparing east
    /// step heights column by column suffices even when south steps occur.
    pub fn contains(&self, path: &Path) -> Result<bool> {
        self.check_endpoint(path)?;
        Ok(self.first_escape(path).is_none())
    }

    fn first_escape(&self, path: &Path) -> Option<usize> {
        (0..self.x()).find(|&i| {
            let h = path.heights[i];
            h > self.top[i] || h < self.bottom[i]
        })
    }

    pub fn check_contains(&self, path: &Path) -> Result<()> {
        self.check_endpoint(path)?;
        match self.first_escape(path) {
            Some(i) => Err(Error::OutsideRegion(i + 1)),
            None => Ok(()),
        }
    }

    pub fn is_top_contact(&self, path: &Path, col: usize) -> bool {
        path.heights[col] == self.top[col]
    }

    pub fn is_bottom_contact(&self, path: &Path, col: usize) -> bool {
        path.heights[col] == self.bottom[col]
    }

    pub fn contact_stats(&self, path: &Path) -> Result<ContactStats> {
        self.check_contains(path)?;
        let mut s = ContactStats::default();
        for i in 0..self.x() {
            s.t += u32::from(self.is_top_contact(path, i));
            s.b += u32::from(self.is_bottom_contact(path, i));
        }
        for j in 0..=self.x() {
            let p = path.vertical_run(j);
            s.l += shared_rise(p, run(&self.top, self.y, j));
            s.r += shared_rise(p, run(&self.bottom, self.y, j));
        }
        Ok(s)
    }

    /// Heights of the east steps that touch neither boundary, left to right.
    pub fn noncontact_heights(&self, path: &Path) -> Result<Vec<u32>> {
        self.check_contains(path)?;
        Ok((0..self.x())
            .filter(|&i| !self.is_top_contact(path, i) && !self.is_bottom_contact(path, i))
            .map(|i| path.heights[i])
            .collect())
    }

    /// Number of monotone paths in the region, by a column-by-column count.
    pub fn count_paths(&self) -> u128 {
        let y = self.y as usize;
        let mut ways = vec![0u128; y + 1];
        ways[0] = 1;
        for i in 0..self.x() {
            let mut next = vec![0u128; y + 1];
            let mut acc = 0u128;
            for h in 0..=y {
                acc += ways[h];
                if h as u32 >= self.bottom[i] && h as u32 <= self.top[i] {
                    next[h] = acc;
                }
            }
            ways = next;
        }
        ways.iter().sum()
    }
}

impl FromStr for Region {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Region::parse(s)
    }
}

impl fmt::Display for Region {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "T={};B={}", self.top_path(), self.bottom_path())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn region(t: &str, b: &str) -> Region {
        Region::new(&Path::parse(t).unwrap(), &Path::parse(b).unwrap()).unwrap()
    }

    #[test]
    fn parse_heights() {
        let p = Path::parse("ENENEN").unwrap();
        assert_eq!(p.heights(), &[0, 1, 2]);
        assert_eq!(p.y(), 3);
        assert_eq!(p.to_step_string(), "ENENEN");
    }

    #[test]
    fn parse_rejects() {
        assert_eq!(Path::parse("ENSE"), Err(Error::RevisitsEdge(3)));
        assert_eq!(Path::parse("SE"), Err(Error::LeavesQuadrant(1)));
        assert!(matches!(Path::parse("ENx"), Err(Error::InvalidStep { step: 'x', .. })));
    }

    #[test]
    fn south_steps_roundtrip() {
        let p = Path::parse("NNESENN").unwrap();
        assert_eq!(p.heights(), &[2, 1]);
        assert_eq!(p.y(), 3);
        assert_eq!(p.to_step_string(), "NNESENN");
        assert!(!p.is_monotone());
    }

    #[test]
    fn region_heights() {
        let r = region("NNENEE", "ENEENN");
        assert_eq!(r.top_heights(), &[2, 3, 3]);
        assert_eq!(r.bottom_heights(), &[0, 1, 1]);
        assert_eq!(r.to_string(), "T=NNENEE;B=ENEENN");
    }

    #[test]
    fn region_rejects_crossing_boundaries() {
        let t = Path::parse("ENNE").unwrap();
        let b = Path::parse("NNEE").unwrap();
        assert_eq!(Region::new(&t, &b), Err(Error::Dominance(1)));
        let short = Path::parse("NE").unwrap();
        assert!(matches!(Region::new(&t, &short), Err(Error::EndpointMismatch(..))));
    }

    #[test]
    fn contact_stats_small() {
        let r = region("NNENEE", "ENEENN");
        let s = r.contact_stats(&Path::parse("ENENEN").unwrap()).unwrap();
        assert_eq!((s.t, s.b, s.l, s.r), (0, 2, 0, 2));
        let s = r.contact_stats(&r.bottom_path()).unwrap();
        assert_eq!((s.t, s.b, s.l, s.r), (0, 3, 0, 3));
        let s = r.contact_stats(&r.top_path()).unwrap();
        assert_eq!((s.t, s.b, s.l, s.r), (3, 0, 3, 0));
    }

    #[test]
    fn figure_one_path() {
        let r = region("NNENEENENENENEEEE", "EEENENEENENNEENEN");
        let p = Path::parse("ENNNEEENNEEEEENNE").unwrap();
        let s = r.contact_stats(&p).unwrap();
        assert_eq!((s.t, s.b, s.l, s.r), (4, 3, 2, 1));
        assert_eq!(p.north_index_set().unwrap(), vec![2, 3, 4, 8, 9, 15, 16]);
    }

    #[test]
    fn figure_two_path_with_south_steps() {
        let r = region("NNENEENENENENEEEE", "EEENENEENENNEENEN");
        let p = Path::parse("ENNNESESENNNESSENNENEENNE").unwrap();
        assert_eq!(p.heights(), &[0, 3, 2, 1, 4, 2, 4, 5, 5, 7]);
        assert_eq!(p.descent_set(), vec![2, 3, 5]);
        let s = r.contact_stats(&p).unwrap();
        // bottom contacts in columns 1, 4, 6, 8, 9
        assert_eq!((s.t, s.b), (2, 5));
    }

    #[test]
    fn noncontact_heights_example() {
        let r = region("NNNEEENEE", "EENEEENNN");
        let p = Path::parse("NNENESENENE").unwrap();
        assert_eq!(p.heights(), &[2, 3, 2, 3, 4]);
        assert_eq!(p.descent_set(), vec![2]);
        assert_eq!(r.noncontact_heights(&p).unwrap(), vec![2, 2, 3]);
    }

    #[test]
    fn descents() {
        assert_eq!(Path::from_heights(vec![3, 1], 3).descent_set(), vec![1]);
        assert!(Path::parse("NNEE").unwrap().descent_set().is_empty());
    }

    #[test]
    fn north_indices_roundtrip() {
        let p = Path::parse("ENNENE").unwrap();
        let idx = p.north_index_set().unwrap();
        assert_eq!(idx, vec![2, 3, 5]);
        assert_eq!(Path::from_north_index_set(&idx, 3, 3).unwrap(), p);
        assert_eq!(Path::from_heights(vec![2, 1], 2).north_index_set(), Err(Error::NotMonotone));
    }

    #[test]
    fn json_shape() {
        let p = Path::parse("ENEN").unwrap();
        let j = serde_json::to_string(&p).unwrap();
        assert_eq!(j, r#"{"x":2,"y":2,"heights":[0,1]}"#);
        let back: Path = serde_json::from_str(&j).unwrap();
        assert_eq!(back, p);
    }

    #[test]
    fn count_matches_small_region() {
        assert_eq!(region("NNENEE", "ENEENN").count_paths(), 15);
    }
}
