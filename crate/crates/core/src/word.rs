//! Words over `{t, b}` and the switch map on them.
//!
//! A `t` acts as an opening parenthesis and a `b` as a closing one. After
//! matching, the unmatched letters read `b...bt...t`.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Letter {
    Top,
    Bottom,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ContactWord(Vec<Letter>);

/// Positions (1-based) of the unmatched letters of a word.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Factorization {
    pub unmatched_bottoms: Vec<usize>,
    pub unmatched_tops: Vec<usize>,
}

impl Factorization {
    pub fn unmatched(&self) -> usize {
        self.unmatched_bottoms.len() + self.unmatched_tops.len()
    }
}

impl ContactWord {
    pub fn new(letters: Vec<Letter>) -> Self {
        ContactWord(letters)
    }

    pub fn parse(s: &str) -> Result<Self> {
        s.chars()
            .map(|c| match c {
                't' => Ok(Letter::Top),
                'b' => Ok(Letter::Bottom),
                _ => Err(Error::Parse(format!("contact words use t and b, got {c:?}"))),
            })
            .collect::<Result<Vec<_>>>()
            .map(ContactWord)
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Number of `t`s and number of `b`s.
    pub fn counts(&self) -> (usize, usize) {
        let tops = self.0.iter().filter(|&&l| l == Letter::Top).count();
        (tops, self.0.len() - tops)
    }

    pub fn factorize(&self) -> Factorization {
        let mut open = Vec::new();
        let mut unmatched_bottoms = Vec::new();
        for (i, &l) in self.0.iter().enumerate() {
            match l {
                Letter::Top => open.push(i + 1),
                Letter::Bottom => {
                    if open.pop().is_none() {
                        unmatched_bottoms.push(i + 1);
                    }
                }
            }
        }
        Factorization { unmatched_bottoms, unmatched_tops: open }
    }

    /// Replaces the leftmost unmatched `t` by `b`. Returns the new word and
    /// the 1-based position that changed.
    pub fn switch_at(&self) -> Result<(Self, usize)> {
        let i = *self.factorize().unmatched_tops.first().ok_or(Error::NoUnmatched('t'))?;
        let mut w = self.0.clone();
        w[i - 1] = Letter::Bottom;
        Ok((ContactWord(w), i))
    }

    pub fn switch(&self) -> Result<Self> {
        self.switch_at().map(|(w, _)| w)
    }

    /// Replaces the rightmost unmatched `b` by `t`.
    pub fn switch_inv(&self) -> Result<Self> {
        let i = *self.factorize().unmatched_bottoms.last().ok_or(Error::NoUnmatched('b'))?;
        let mut w = self.0.clone();
        w[i - 1] = Letter::Top;
        Ok(ContactWord(w))
    }

    /// All words of the given length.
    pub fn all(len: usize) -> impl Iterator<Item = ContactWord> {
        (0u64..1 << len).map(move |bits| {
            ContactWord(
                (0..len)
                    .map(|i| if bits >> (len - 1 - i) & 1 == 0 { Letter::Bottom } else { Letter::Top })
                    .collect(),
            )
        })
    }
}

/// Whether the letters around the switched position are `b` before and `t`
/// after, in both the word and its image.
pub fn switch_neighbors_ok(w: &ContactWord) -> Result<bool> {
    let (img, i) = w.switch_at()?;
    let (a, b) = (w.letters(), img.letters());
    let before = i == 1 || (a[i - 2] == Letter::Bottom && b[i - 2] == Letter::Bottom);
    let after = i == a.len() || (a[i] == Letter::Top && b[i] == Letter::Top);
    Ok(before && after)
}

impl FromStr for ContactWord {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        ContactWord::parse(s)
    }
}

impl fmt::Display for ContactWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for l in &self.0 {
            f.write_str(match l {
                Letter::Top => "t",
                Letter::Bottom => "b",
            })?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn w(s: &str) -> ContactWord {
        ContactWord::parse(s).unwrap()
    }

    #[test]
    fn factorization_example() {
        let f = w("bttbtbbbttbttbtbtt").factorize();
        assert_eq!(f.unmatched_bottoms, vec![1, 8]);
        assert_eq!(f.unmatched_tops, vec![9, 12, 17, 18]);
    }

    #[test]
    fn switch_example() {
        let (img, i) = w("bttbtbbbttbttbtbtt").switch_at().unwrap();
        assert_eq!(i, 9);
        assert_eq!(img.to_string(), "bttbtbbbbtbttbtbtt");
        let f = img.factorize();
        assert_eq!(f.unmatched_bottoms, vec![1, 8, 9]);
        assert_eq!(f.unmatched_tops, vec![12, 17, 18]);
        assert_eq!(img.switch_inv().unwrap(), w("bttbtbbbttbttbtbtt"));
    }

    #[test]
    fn dyck_words_have_nothing_to_switch() {
        assert_eq!(w("tb").switch(), Err(Error::NoUnmatched('t')));
        assert_eq!(w("tb").switch_inv(), Err(Error::NoUnmatched('b')));
        assert_eq!(w("").factorize().unmatched(), 0);
    }

    #[test]
    fn all_words_enumerates_every_word() {
        let ws: Vec<_> = ContactWord::all(3).collect();
        assert_eq!(ws.len(), 8);
        assert_eq!(ws[0].to_string(), "bbb");
        assert_eq!(ws[7].to_string(), "ttt");
    }

    fn word() -> impl Strategy<Value = ContactWord> {
        prop::collection::vec(prop::bool::ANY, 0..24).prop_map(|v| {
            ContactWord::new(v.into_iter().map(|t| if t { Letter::Top } else { Letter::Bottom }).collect())
        })
    }

    proptest! {
        #[test]
        fn unmatched_letters_read_b_then_t(w in word()) {
            let f = w.factorize();
            if let (Some(&b), Some(&t)) = (f.unmatched_bottoms.last(), f.unmatched_tops.first()) {
                prop_assert!(b < t);
            }
        }

        #[test]
        fn switch_inverts(w in word()) {
            if let Ok(s) = w.switch() {
                prop_assert_eq!(s.switch_inv().unwrap(), w.clone());
                prop_assert_eq!(s.factorize().unmatched(), w.factorize().unmatched());
                prop_assert!(switch_neighbors_ok(&w).unwrap());
            }
        }
    }
}
