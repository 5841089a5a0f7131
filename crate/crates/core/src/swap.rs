//! The swap map on paths, its inverse, and the involution obtained by
//! iterating it, which exchanges the numbers of top and bottom contacts while
//! keeping the descent set and the noncontact heights.

use crate::error::{Error, Result};
use crate::path::{Path, Region};
use crate::word::{ContactWord, Letter};

/// The contact word of a path and, for each letter, its 0-based column.
/// Columns that touch both boundaries are skipped.
pub fn contact_word_with_columns(region: &Region, path: &Path) -> Result<(ContactWord, Vec<usize>)> {
    region.check_contains(path)?;
    let mut letters = Vec::new();
    let mut cols = Vec::new();
    for i in 0..region.x() {
        let t = region.is_top_contact(path, i);
        let b = region.is_bottom_contact(path, i);
        if t != b {
            letters.push(if t { Letter::Top } else { Letter::Bottom });
            cols.push(i);
        }
    }
    Ok((ContactWord::new(letters), cols))
}

pub fn contact_word(region: &Region, path: &Path) -> Result<ContactWord> {
    contact_word_with_columns(region, path).map(|(w, _)| w)
}

/// Height of a factor's boundary step, with explicit infinities for empty
/// factors.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
enum Level {
    NegInf,
    At(u32),
    PosInf,
}

/// Moves the leftmost unmatched top contact: the path `W X t Y Z` becomes
/// `W X Y b Z` or `W b X Y Z` depending on the heights around `t`.
pub fn swap(region: &Region, path: &Path) -> Result<Path> {
    let (word, cols) = contact_word_with_columns(region, path)?;
    let first = *word.factorize().unmatched_tops.first().ok_or(Error::NoUnmatched('t'))?;
    let s = cols[first - 1];
    let h = path.heights();
    let x = region.x();
    let bottom = region.bottom_heights();
    let y = region.y();

    // right endpoint (j + 1, h[j]) of east step j lies on the lower boundary
    let ends_on_bottom = |j: usize| {
        let next = if j + 1 < x { bottom[j + 1] } else { y };
        h[j] >= bottom[j] && h[j] <= next
    };
    let mut xs = s;
    while xs > 0 && h[xs - 1] <= h[xs] && !ends_on_bottom(xs - 1) {
        xs -= 1;
    }
    let mut ye = s + 1;
    while ye < x && h[ye - 1] > h[ye] {
        ye += 1;
    }
    debug_assert!((xs..s).chain(s + 1..ye).all(|j| {
        !region.is_top_contact(path, j) && !region.is_bottom_contact(path, j)
    }));

    let hx = if xs < s { Level::At(h[s - 1]) } else { Level::NegInf };
    let hy = if ye > s + 1 { Level::At(h[s + 1]) } else { Level::NegInf };
    let mut out = h.to_vec();
    if hx <= hy {
        out[s..ye - 1].copy_from_slice(&h[s + 1..ye]);
        out[ye - 1] = bottom[ye - 1];
    } else {
        out[xs + 1..=s].copy_from_slice(&h[xs..s]);
        out[xs] = bottom[xs];
    }
    Ok(Path::from_heights(out, y))
}

/// Inverse of [`swap`]: moves the rightmost unmatched bottom contact, turning
/// `R S b U V` into `R t S U V` or `R S U t V`.
pub fn swap_inv(region: &Region, path: &Path) -> Result<Path> {
    let (word, cols) = contact_word_with_columns(region, path)?;
    let last = *word.factorize().unmatched_bottoms.last().ok_or(Error::NoUnmatched('b'))?;
    let s = cols[last - 1];
    let h = path.heights();
    let x = region.x();
    let top = region.top_heights();

    // left endpoint (j, h[j]) of east step j lies on the upper boundary
    let starts_on_top = |j: usize| {
        let prev = if j == 0 { 0 } else { top[j - 1] };
        h[j] >= prev && h[j] <= top[j]
    };
    let mut ss = s;
    while ss > 0 && h[ss - 1] > h[ss] {
        ss -= 1;
    }
    let mut ue = s + 1;
    while ue < x && h[ue - 1] <= h[ue] && !starts_on_top(ue) {
        ue += 1;
    }

    let hs = if ss < s { Level::At(h[s - 1]) } else { Level::PosInf };
    let hu = if ue > s + 1 { Level::At(h[s + 1]) } else { Level::PosInf };
    let mut out = h.to_vec();
    if hs <= hu {
        out[ss + 1..=s].copy_from_slice(&h[ss..s]);
        out[ss] = top[ss];
    } else {
        out[s..ue - 1].copy_from_slice(&h[s + 1..ue]);
        out[ue - 1] = top[ue - 1];
    }
    Ok(Path::from_heights(out, region.y()))
}

/// Applies [`swap`] `t - b` times, or [`swap_inv`] `b - t` times.
pub fn swapall(region: &Region, path: &Path) -> Result<Path> {
    let s = region.contact_stats(path)?;
    let mut p = path.clone();
    if s.t >= s.b {
        for _ in 0..s.t - s.b {
            p = swap(region, &p)?;
        }
    } else {
        for _ in 0..s.b - s.t {
            p = swap_inv(region, &p)?;
        }
    }
    Ok(p)
}
