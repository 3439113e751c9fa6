//! Lexicographic enumeration of `Av_n(321)` by prefix-pruned backtracking.
//!
//! In a 321-avoiding word every entry is either a new left-right maximum or
//! the smallest value not yet used; any other choice either creates a 321
//! immediately or strands a smaller value that can never be placed. The
//! walker therefore only ever branches on those candidates, every prefix it
//! visits extends to at least one avoider, and the cost per visited node is
//! O(1) amortized. `des`, `maj`, `inv` and `lrm` are carried along the
//! branch, so leaves come with their statistics for free.

use alloc::vec::Vec;

use crate::Permutation;

/// Statistics of a complete word produced by [`Walker`].
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct StepStats {
    pub des: u32,
    pub maj: u32,
    pub inv: u32,
    pub lrm: u32,
}

#[derive(Debug, Clone, Copy)]
struct Frame {
    max: u32,
    smallest_unused: u32,
    stats: StepStats,
    /// Next value to try at this position; `> n` once exhausted.
    next: u32,
}

/// Depth-first walker over `Av_n(321)` in lexicographic order.
///
/// This is a lending iterator: [`Walker::next_leaf`] returns the statistics
/// of the next avoider and [`Walker::word`] borrows its one-line word until
/// the following call.
#[derive(Debug, Clone)]
pub struct Walker {
    n: u32,
    word: Vec<u32>,
    used: Vec<bool>,
    frames: Vec<Frame>,
    at_leaf: bool,
    started: bool,
    /// Try a single candidate at the root.
    root_only: bool,
}

impl Walker {
    pub fn new(n: usize) -> Self {
        let n = n as u32;
        let root = Frame {
            max: 0,
            smallest_unused: 1,
            stats: StepStats::default(),
            next: 1,
        };
        Walker {
            n,
            word: Vec::with_capacity(n as usize),
            used: alloc::vec![false; n as usize + 2],
            frames: alloc::vec![root],
            at_leaf: false,
            started: false,
            root_only: false,
        }
    }

    /// Restricts the walk to avoiders whose first entry is `first`.
    ///
    /// Used to split the walk across workers; the union over all `first` in
    /// `1..=n` is the full set, each avoider appearing exactly once.
    pub fn with_first(n: usize, first: u32) -> Self {
        let mut w = Walker::new(n);
        if n == 0 || first == 0 || first > n as u32 {
            w.frames.clear();
            w.started = true;
            return w;
        }
        w.frames[0].next = first;
        w.root_only = true;
        w
    }

    pub fn word(&self) -> &[u32] {
        &self.word
    }

    pub fn len(&self) -> usize {
        self.n as usize
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    /// Advances to the next avoider and returns its statistics.
    pub fn next_leaf(&mut self) -> Option<StepStats> {
        if !self.started {
            self.started = true;
            if self.n == 0 {
                self.frames.clear();
                return Some(StepStats::default());
            }
        }
        if self.at_leaf {
            let v = self.word.pop().expect("leaf has a word");
            self.used[v as usize] = false;
            self.at_leaf = false;
        }
        loop {
            let frame = self.frames.last_mut()?;
            if frame.next > self.n {
                self.frames.pop();
                if self.frames.is_empty() {
                    return None;
                }
                let v = self.word.pop().expect("inner frame has a placed value");
                self.used[v as usize] = false;
                continue;
            }
            let v = frame.next;
            frame.next = if v < frame.max { frame.max + 1 } else { v + 1 };
            if self.root_only && self.frames.len() == 1 {
                self.frames[0].next = self.n + 1;
            }
            if let Some(stats) = self.place(v) {
                return Some(stats);
            }
        }
    }

    /// Places `v` after the current prefix. Returns the statistics if the
    /// word is now complete, otherwise pushes a frame for the next position.
    fn place(&mut self, v: u32) -> Option<StepStats> {
        let top = *self.frames.last().expect("walker has a frame");
        let pos = self.word.len() as u32 + 1;
        let mut stats = top.stats;
        if let Some(&prev) = self.word.last() {
            if prev > v {
                stats.des += 1;
                stats.maj += pos - 1;
            }
        }
        let max = if v > top.max {
            stats.lrm += 1;
            v
        } else {
            debug_assert_eq!(v, top.smallest_unused);
            // every value below v is already placed, so the larger earlier
            // entries are the other pos - 1 - (v - 1)
            stats.inv += pos - v;
            top.max
        };
        self.word.push(v);
        self.used[v as usize] = true;
        if pos == self.n {
            self.at_leaf = true;
            return Some(stats);
        }
        let mut smallest = top.smallest_unused;
        while self.used[smallest as usize] {
            smallest += 1;
        }
        self.frames.push(Frame {
            max,
            smallest_unused: smallest,
            stats,
            next: smallest,
        });
        None
    }
}

/// Iterator over `Av_n(321)` in lexicographic order.
#[derive(Debug, Clone)]
pub struct Avoiders321 {
    walker: Walker,
}

impl Avoiders321 {
    pub fn new(n: usize) -> Self {
        Avoiders321 {
            walker: Walker::new(n),
        }
    }
}

impl Iterator for Avoiders321 {
    type Item = Permutation;

    fn next(&mut self) -> Option<Permutation> {
        self.walker.next_leaf()?;
        Some(Permutation::from_word_unchecked(
            self.walker.word().to_vec(),
        ))
    }
}

/// Each `σ ∈ Av_n(321)` exactly once, in lexicographic order of the word.
pub fn enumerate_avoiders(n: usize) -> Avoiders321 {
    Avoiders321::new(n)
}

/// Calls `f` on every avoider of length `n` with its statistics.
pub fn for_each_avoider<F: FnMut(&[u32], StepStats)>(n: usize, mut f: F) {
    let mut w = Walker::new(n);
    while let Some(stats) = w.next_leaf() {
        f(w.word(), stats);
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;
    use alloc::vec;

    fn all_perms(n: usize) -> Vec<Vec<u32>> {
        if n == 0 {
            return vec![vec![]];
        }
        let mut out = Vec::new();
        for p in all_perms(n - 1) {
            for pos in 0..=p.len() {
                let mut q = p.clone();
                q.insert(pos, n as u32);
                out.push(q);
            }
        }
        out.sort();
        out
    }

    #[test]
    fn small_cases_match_filtered_symmetric_group() {
        let pat = Permutation::try_from("321").unwrap();
        for n in 0..=7 {
            let expected: Vec<Permutation> = all_perms(n)
                .into_iter()
                .map(|w| Permutation::new(w).unwrap())
                .filter(|s| s.avoids(&pat))
                .collect();
            let got: Vec<Permutation> = enumerate_avoiders(n).collect();
            assert_eq!(got, expected, "n={n}");
        }
    }

    #[test]
    fn length_three_listing() {
        let got: Vec<_> = enumerate_avoiders(3).map(|p| p.to_string()).collect();
        assert_eq!(got, ["123", "132", "213", "231", "312"]);
    }

    #[test]
    fn empty_and_singleton() {
        let e: Vec<_> = enumerate_avoiders(0).collect();
        assert_eq!(e, vec![Permutation::empty()]);
        let one: Vec<_> = enumerate_avoiders(1).collect();
        assert_eq!(one, vec![Permutation::identity(1)]);
    }

    #[test]
    fn catalan_counts() {
        let expected = [1u64, 1, 2, 5, 14, 42, 132, 429, 1430, 4862, 16796];
        for (n, &c) in expected.iter().enumerate() {
            assert_eq!(enumerate_avoiders(n).count() as u64, c, "n={n}");
        }
    }

    #[test]
    fn incremental_stats_match_direct_evaluation() {
        for n in 0..=8 {
            for_each_avoider(n, |word, s| {
                let p = Permutation::new(word.to_vec()).unwrap();
                assert_eq!(s.des as usize, p.des(), "{p}");
                assert_eq!(s.maj as usize, p.maj(), "{p}");
                assert_eq!(s.inv as usize, p.inv(), "{p}");
                assert_eq!(s.lrm as usize, p.lrm(), "{p}");
            });
        }
    }

    #[test]
    fn split_by_first_entry_partitions_the_walk() {
        for n in 0..=7 {
            let mut pieces = Vec::new();
            for first in 1..=n as u32 {
                let mut w = Walker::with_first(n, first);
                while w.next_leaf().is_some() {
                    pieces.push(w.word().to_vec());
                }
            }
            let full: Vec<_> = enumerate_avoiders(n).map(Permutation::into_word).collect();
            if n == 0 {
                assert!(pieces.is_empty());
            } else {
                assert_eq!(pieces, full, "n={n}");
            }
        }
    }
}
