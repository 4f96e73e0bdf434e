use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// Generator symbols. Lowercase letters are the algebra generators, the
/// uppercase ones the degree-one generators of the blow-up algebra.
pub const LETTERS: [char; 6] = ['x', 'y', 'z', 'X', 'Y', 'Z'];

pub const X: u8 = 0;
pub const Y: u8 = 1;
pub const Z: u8 = 2;
pub const BIG_X: u8 = 3;
pub const BIG_Y: u8 = 4;
pub const BIG_Z: u8 = 5;

/// A monomial in the free algebra, ordered lexicographically with
/// `x < y < z < X < Y < Z`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Word(pub Vec<u8>);

impl Word {
    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn letter(l: u8) -> Self {
        Word(vec![l])
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }

    /// Number of uppercase letters.
    pub fn t_grade(&self) -> usize {
        self.0.iter().filter(|&&l| l >= BIG_X).count()
    }

    pub fn is_lowercase(&self) -> bool {
        self.0.iter().all(|&l| l < BIG_X)
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut v = Vec::with_capacity(self.0.len() + other.0.len());
        v.extend_from_slice(&self.0);
        v.extend_from_slice(&other.0);
        Word(v)
    }

    /// Position among the `3^d` lowercase words of the same degree.
    pub fn index(&self) -> usize {
        debug_assert!(self.is_lowercase());
        self.0.iter().fold(0, |acc, &l| acc * 3 + l as usize)
    }

    pub fn from_index(mut idx: usize, degree: usize) -> Word {
        let mut v = vec![0u8; degree];
        for slot in v.iter_mut().rev() {
            *slot = (idx % 3) as u8;
            idx /= 3;
        }
        Word(v)
    }

    /// All lowercase words of degree `d`, in lexicographic order.
    pub fn all_of_degree(d: usize) -> impl Iterator<Item = Word> {
        (0..3usize.pow(d as u32)).map(move |i| Word::from_index(i, d))
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("1");
        }
        for &l in &self.0 {
            write!(f, "{}", LETTERS[l as usize])?;
        }
        Ok(())
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Word {
    type Err = Error;

    fn from_str(s: &str) -> Result<Word> {
        if s == "1" {
            return Ok(Word::empty());
        }
        s.chars()
            .map(|c| {
                LETTERS
                    .iter()
                    .position(|&l| l == c)
                    .map(|p| p as u8)
                    .ok_or_else(|| Error::Usage(format!("unknown generator {c:?} in word {s:?}")))
            })
            .collect::<Result<Vec<_>>>()
            .map(Word)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn enumeration_is_lexicographic() {
        let words: Vec<String> = Word::all_of_degree(2).map(|w| w.to_string()).collect();
        assert_eq!(
            words,
            ["xx", "xy", "xz", "yx", "yy", "yz", "zx", "zy", "zz"]
        );
        let mut sorted = Word::all_of_degree(3).collect::<Vec<_>>();
        sorted.sort();
        assert!(sorted.iter().enumerate().all(|(i, w)| w.index() == i));
    }

    #[test]
    fn grades() {
        let w: Word = "xYzZ".parse().unwrap();
        assert_eq!(w.degree(), 4);
        assert_eq!(w.t_grade(), 2);
        assert!("xw".parse::<Word>().is_err());
    }
}
