//! Permutations in one-line notation and the four statistics tracked over
//! `Av_n(321)`.
//!
//! Positions are 1-indexed throughout, so `Des σ ⊆ {1, …, n-1}` and the
//! major index is the sum of those positions.

use alloc::vec::Vec;
use core::fmt;

use crate::Error;

/// A permutation of `1..=n` stored as its one-line word.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Permutation {
    word: Vec<u32>,
}

impl Permutation {
    /// Validates that `word` is a bijection on `1..=word.len()`.
    pub fn new(word: Vec<u32>) -> Result<Self, Error> {
        let n = word.len();
        let mut seen = alloc::vec![false; n];
        for &v in &word {
            let v = v as usize;
            if v == 0 || v > n || seen[v - 1] {
                return Err(Error::NotAPermutation);
            }
            seen[v - 1] = true;
        }
        Ok(Permutation { word })
    }

    pub(crate) fn from_word_unchecked(word: Vec<u32>) -> Self {
        debug_assert!(Permutation::new(word.clone()).is_ok());
        Permutation { word }
    }

    pub fn identity(n: usize) -> Self {
        Permutation {
            word: (1..=n as u32).collect(),
        }
    }

    /// The empty permutation of length 0.
    pub fn empty() -> Self {
        Permutation { word: Vec::new() }
    }

    pub fn len(&self) -> usize {
        self.word.len()
    }

    pub fn is_empty(&self) -> bool {
        self.word.is_empty()
    }

    pub fn word(&self) -> &[u32] {
        &self.word
    }

    pub fn into_word(self) -> Vec<u32> {
        self.word
    }

    /// True iff some subsequence of `self` is order isomorphic to `pattern`.
    pub fn contains_pattern(&self, pattern: &Permutation) -> bool {
        let k = pattern.len();
        if k == 0 {
            return true;
        }
        if k > self.len() {
            return false;
        }
        let mut chosen = Vec::with_capacity(k);
        embed(&self.word, &pattern.word, 0, &mut chosen)
    }

    pub fn avoids(&self, pattern: &Permutation) -> bool {
        !self.contains_pattern(pattern)
    }

    /// Fast check for the pattern 321: a decreasing subsequence of length 3.
    pub fn avoids_321(&self) -> bool {
        // A 321 exists iff some entry is smaller than a non-left-to-right
        // maximum that precedes it.
        let mut max = 0;
        let mut big_non_max = 0;
        for &b in &self.word {
            if b < big_non_max {
                return false;
            }
            if b > max {
                max = b;
            } else {
                big_non_max = big_non_max.max(b);
            }
        }
        true
    }

    /// Descent positions `{i : b_i > b_{i+1}}`, 1-indexed.
    pub fn descent_set(&self) -> Vec<usize> {
        self.word
            .windows(2)
            .enumerate()
            .filter(|(_, w)| w[0] > w[1])
            .map(|(i, _)| i + 1)
            .collect()
    }

    pub fn des(&self) -> usize {
        self.word.windows(2).filter(|w| w[0] > w[1]).count()
    }

    pub fn maj(&self) -> usize {
        self.descent_set().iter().sum()
    }

    pub fn inv(&self) -> usize {
        let w = &self.word;
        (0..w.len())
            .map(|i| w[i + 1..].iter().filter(|&&b| b < w[i]).count())
            .sum()
    }

    /// Number of left-right maxima; position 1 always counts when `n ≥ 1`.
    pub fn lrm(&self) -> usize {
        let mut max = 0;
        let mut count = 0;
        for &b in &self.word {
            if b > max {
                max = b;
                count += 1;
            }
        }
        count
    }

    /// Rotation of the permutation diagram by 180 degrees:
    /// `r(i) = n + 1 - σ(n + 1 - i)`.
    pub fn rotate180(&self) -> Permutation {
        let n = self.len() as u32;
        Permutation {
            word: self.word.iter().rev().map(|&b| n + 1 - b).collect(),
        }
    }

    /// The inflation `π[σ_1, …, σ_n]`: the dot `(i, π_i)` of the diagram of
    /// `π` is replaced by a copy of `σ_i`. Blocks must be nonempty.
    pub fn inflate(&self, blocks: &[Permutation]) -> Result<Permutation, Error> {
        if blocks.len() != self.len() {
            return Err(Error::InflationArity {
                expected: self.len(),
                got: blocks.len(),
            });
        }
        if let Some(i) = blocks.iter().position(Permutation::is_empty) {
            return Err(Error::EmptyBlock(i));
        }
        // offset[v] = total size of the blocks sitting at pattern values below v
        let mut size_by_value = alloc::vec![0u32; self.len() + 1];
        for (&v, block) in self.word.iter().zip(blocks) {
            size_by_value[v as usize] = block.len() as u32;
        }
        let mut offset_by_value = alloc::vec![0u32; self.len() + 1];
        for v in 1..=self.len() {
            offset_by_value[v] = offset_by_value[v - 1] + size_by_value[v - 1];
        }
        let word = self
            .word
            .iter()
            .zip(blocks)
            .flat_map(|(&v, block)| {
                let off = offset_by_value[v as usize];
                block.word.iter().map(move |&b| off + b)
            })
            .collect();
        Ok(Permutation { word })
    }
}

fn embed(text: &[u32], pattern: &[u32], from: usize, chosen: &mut Vec<u32>) -> bool {
    let depth = chosen.len();
    if depth == pattern.len() {
        return true;
    }
    let remaining = pattern.len() - depth;
    for i in from..=text.len() - remaining {
        let v = text[i];
        let consistent = chosen
            .iter()
            .zip(pattern)
            .all(|(&c, &p)| (c < v) == (p < pattern[depth]));
        if consistent {
            chosen.push(v);
            if embed(text, pattern, i + 1, chosen) {
                return true;
            }
            chosen.pop();
        }
    }
    false
}

impl TryFrom<Vec<u32>> for Permutation {
    type Error = Error;

    fn try_from(word: Vec<u32>) -> Result<Self, Error> {
        Permutation::new(word)
    }
}

impl TryFrom<&str> for Permutation {
    type Error = Error;

    /// Parses a digit word such as `"216534"` (only for `n ≤ 9`).
    fn try_from(s: &str) -> Result<Self, Error> {
        let word = s
            .chars()
            .map(|c| c.to_digit(10).ok_or(Error::NotAPermutation))
            .collect::<Result<Vec<_>, _>>()?;
        Permutation::new(word)
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.word.is_empty() {
            return write!(f, "ε");
        }
        let sep = if self.word.len() > 9 { " " } else { "" };
        for (i, b) in self.word.iter().enumerate() {
            if i > 0 {
                f.write_str(sep)?;
            }
            write!(f, "{b}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Permutation({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn p(s: &str) -> Permutation {
        Permutation::try_from(s).unwrap()
    }

    #[test]
    fn rejects_non_bijections() {
        assert_eq!(Permutation::new(vec![1, 1]), Err(Error::NotAPermutation));
        assert_eq!(Permutation::new(vec![0, 1]), Err(Error::NotAPermutation));
        assert_eq!(Permutation::new(vec![3, 1]), Err(Error::NotAPermutation));
        assert!(Permutation::new(vec![]).is_ok());
    }

    #[test]
    fn pattern_containment() {
        assert!(p("321").contains_pattern(&p("321")));
        assert!(p("216534").contains_pattern(&p("321")));
        assert!(!p("1234").contains_pattern(&p("21")));
        assert!(p("1234").contains_pattern(&Permutation::empty()));
        assert!(!p("12").contains_pattern(&p("123")));
        assert!(p("2413").contains_pattern(&p("2413")));
        assert!(!p("2413").contains_pattern(&p("1234")));
    }

    #[test]
    fn fast_321_check_agrees_with_general_scan() {
        let pat = p("321");
        for w in [
            "123", "321", "216534", "2413", "31524", "52143", "4123", "3412",
        ] {
            let s = p(w);
            assert_eq!(s.avoids_321(), s.avoids(&pat), "{w}");
        }
    }

    #[test]
    fn statistics_on_reference_word() {
        let s = p("216534");
        assert_eq!(s.descent_set(), vec![1, 3, 4]);
        assert_eq!(s.des(), 3);
        assert_eq!(s.maj(), 8);
        assert_eq!(s.inv(), 6);
        assert_eq!(s.lrm(), 2);
    }

    #[test]
    fn statistics_on_identity_and_empty() {
        let id = Permutation::identity(6);
        assert_eq!((id.des(), id.maj(), id.inv(), id.lrm()), (0, 0, 0, 6));
        let e = Permutation::empty();
        assert_eq!((e.des(), e.maj(), e.inv(), e.lrm()), (0, 0, 0, 0));
    }

    #[test]
    fn rotation() {
        assert_eq!(
            Permutation::identity(5).rotate180(),
            Permutation::identity(5)
        );
        let r = p("132").rotate180();
        assert_eq!(r, p("213"));
        assert_eq!(p("132").descent_set(), vec![2]);
        assert_eq!(r.descent_set(), vec![1]);
        assert_eq!(p("216534").rotate180().rotate180(), p("216534"));
    }

    #[test]
    fn inflation() {
        let got = p("132").inflate(&[p("21"), p("1"), p("312")]).unwrap();
        assert_eq!(got, p("216534"));
        assert_eq!(p("1").inflate(&[p("2413")]).unwrap(), p("2413"));
        let tau = p("12");
        let got = p("123")
            .inflate(&[tau.clone(), p("1"), tau.rotate180()])
            .unwrap();
        assert_eq!(got, p("12345"));
        assert_eq!(got.word()[2], 3);
    }

    #[test]
    fn inflation_errors() {
        assert_eq!(
            p("12").inflate(&[p("1")]),
            Err(Error::InflationArity {
                expected: 2,
                got: 1
            })
        );
        assert_eq!(
            p("12").inflate(&[p("1"), Permutation::empty()]),
            Err(Error::EmptyBlock(1))
        );
    }

    #[test]
    fn display() {
        assert_eq!(alloc::format!("{}", p("216534")), "216534");
        assert_eq!(alloc::format!("{}", Permutation::empty()), "ε");
        assert_eq!(
            alloc::format!("{}", Permutation::identity(10)),
            "1 2 3 4 5 6 7 8 9 10"
        );
    }
}
