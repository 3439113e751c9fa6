//! Structural checks behind the symmetry and parity results: orbits of the
//! 180° rotation, its fixed points as inflations, the mod-2 behaviour at
//! `n = 2^m - 1`, and symmetric Dyck paths counted by peaks.

use alloc::collections::BTreeSet;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::avoiders::enumerate_avoiders;
use crate::poly::UnivarPoly;
use crate::statpoly::{self, StatTables};
use crate::{Error, Permutation};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Step {
    U,
    D,
}

/// A balanced `U`/`D` word whose prefixes never have more `D`s than `U`s.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct DyckPath {
    steps: Vec<Step>,
}

impl DyckPath {
    pub fn new(steps: Vec<Step>) -> Option<Self> {
        let mut height: i64 = 0;
        for s in &steps {
            height += match s {
                Step::U => 1,
                Step::D => -1,
            };
            if height < 0 {
                return None;
            }
        }
        (height == 0).then_some(DyckPath { steps })
    }

    pub fn steps(&self) -> &[Step] {
        &self.steps
    }

    pub fn semilength(&self) -> usize {
        self.steps.len() / 2
    }

    /// Occurrences of the factor `UD`.
    pub fn peaks(&self) -> usize {
        self.steps
            .windows(2)
            .filter(|w| w[0] == Step::U && w[1] == Step::D)
            .count()
    }

    /// Mirror image in the vertical line through the midpoint:
    /// reverse the word and swap `U` with `D`.
    pub fn mirror(&self) -> DyckPath {
        DyckPath {
            steps: self
                .steps
                .iter()
                .rev()
                .map(|s| match s {
                    Step::U => Step::D,
                    Step::D => Step::U,
                })
                .collect(),
        }
    }

    /// `s_i = U` iff `s_{2n+1-i} = D` for every `i`.
    pub fn is_symmetric(&self) -> bool {
        let n = self.steps.len();
        (0..n / 2).all(|i| self.steps[i] != self.steps[n - 1 - i])
    }
}

impl fmt::Display for DyckPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.steps {
            f.write_str(match s {
                Step::U => "U",
                Step::D => "D",
            })?;
        }
        Ok(())
    }
}

impl fmt::Debug for DyckPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "DyckPath({self})")
    }
}

/// Calls `f` on every Dyck path of semilength `n`, `U` before `D`.
pub fn for_each_dyck_path<F: FnMut(&[Step])>(n: usize, mut f: F) {
    fn go<F: FnMut(&[Step])>(n: usize, ups: usize, downs: usize, word: &mut Vec<Step>, f: &mut F) {
        if downs == n {
            f(word);
            return;
        }
        if ups < n {
            word.push(Step::U);
            go(n, ups + 1, downs, word, f);
            word.pop();
        }
        if downs < ups {
            word.push(Step::D);
            go(n, ups, downs + 1, word, f);
            word.pop();
        }
    }
    let mut word = Vec::with_capacity(2 * n);
    go(n, 0, 0, &mut word, &mut f);
}

pub fn dyck_paths(n: usize) -> Vec<DyckPath> {
    let mut out = Vec::new();
    for_each_dyck_path(n, |w| out.push(DyckPath { steps: w.to_vec() }));
    out
}

/// `counts[k]` = symmetric Dyck paths of semilength `n` with `k` peaks,
/// by exhaustive generation.
pub fn symmetric_dyck_by_peaks(n: usize) -> Vec<BigInt> {
    let mut counts = alloc::vec![0u64; n + 1];
    for_each_dyck_path(n, |w| {
        let len = w.len();
        if (0..len / 2).all(|i| w[i] != w[len - 1 - i]) {
            let peaks = w
                .windows(2)
                .filter(|p| p[0] == Step::U && p[1] == Step::D)
                .count();
            counts[peaks] += 1;
        }
    });
    counts.into_iter().map(BigInt::from).collect()
}

pub fn count_symmetric_dyck(n: usize, k: usize) -> BigInt {
    symmetric_dyck_by_peaks(n)
        .get(k)
        .cloned()
        .unwrap_or_else(BigInt::zero)
}

/// Constant term 1 and every other coefficient even.
pub fn is_one_then_even(p: &UnivarPoly) -> bool {
    p.coeff(0).is_one() && p.terms().all(|(e, c)| e == 0 || c.is_even())
}

/// True iff `n = 2^m - 1` for some `m ≥ 0`.
pub fn is_mersenne(n: usize) -> bool {
    (n + 1).is_power_of_two()
}

fn mersenne_tables(n: usize) -> Result<StatTables, Error> {
    if !is_mersenne(n) {
        return Err(Error::NotMersenne(n));
    }
    Ok(StatTables::compute(n))
}

/// `[q^k] I_n(q,1)` is 1 at `k = 0` and even otherwise.
pub fn parity_inv(n: usize) -> Result<bool, Error> {
    mersenne_tables(n).map(|t| parity_inv_of(&t))
}

/// `[q^k] M_n(q,1)` is 1 at `k = 0` and even otherwise.
pub fn parity_maj_q(n: usize) -> Result<bool, Error> {
    mersenne_tables(n).map(|t| parity_maj_q_of(&t))
}

/// `[t^k] M_n(1,t) = A_{n,k}(1)` is 1 at `k = 0` and even otherwise.
pub fn parity_maj_t(n: usize) -> Result<bool, Error> {
    mersenne_tables(n).map(|t| parity_maj_t_of(&t))
}

pub fn parity_inv_of(t: &StatTables) -> bool {
    is_one_then_even(&statpoly::inv_at_t1(t))
}

pub fn parity_maj_q_of(t: &StatTables) -> bool {
    is_one_then_even(&statpoly::maj_at_t1(t))
}

pub fn parity_maj_t_of(t: &StatTables) -> bool {
    is_one_then_even(&statpoly::maj_at_q1(t))
}

/// Both descriptions of the rotation-fixed avoiders with `k` descents.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FixedPoints {
    /// `{σ ∈ Av_n(321) : des σ = k, maj σ = nk/2, R(σ) = σ}` by search.
    pub brute_force: Vec<Permutation>,
    /// `{123[τ, 1, R(τ)] : τ ∈ Av_{(n-1)/2}(321), des τ = k/2}`.
    pub constructive: Vec<Permutation>,
}

/// Fixed points of the rotation among avoiders with `k` descents, for odd
/// `n` and even `k`. Both lists are computed and must agree as sets; the
/// returned list is sorted.
pub fn r180_fixed_points(n: usize, k: usize) -> Result<Vec<Permutation>, Error> {
    let fp = r180_fixed_point_sets(n, k)?;
    let a: BTreeSet<_> = fp.brute_force.iter().cloned().collect();
    let b: BTreeSet<_> = fp.constructive.iter().cloned().collect();
    if a != b || a.len() != fp.brute_force.len() || b.len() != fp.constructive.len() {
        return Err(Error::FixedPointMismatch { n, k });
    }
    Ok(a.into_iter().collect())
}

pub fn r180_fixed_point_sets(n: usize, k: usize) -> Result<FixedPoints, Error> {
    if n.is_multiple_of(2) || k % 2 == 1 {
        return Err(Error::FixedPointParity { n, k });
    }
    let target = n * k / 2;
    let brute_force = enumerate_avoiders(n)
        .filter(|s| s.des() == k && s.maj() == target && s.rotate180() == *s)
        .collect();
    let frame = Permutation::identity(3);
    let constructive = enumerate_avoiders((n - 1) / 2)
        .filter(|tau| tau.des() == k / 2)
        .map(|tau| {
            let blocks = [tau.clone(), Permutation::identity(1), tau.rotate180()];
            // an empty τ (n = 1) contributes no block
            if tau.is_empty() {
                Ok(Permutation::identity(1))
            } else {
                frame.inflate(&blocks)
            }
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(FixedPoints {
        brute_force,
        constructive,
    })
}

/// Orbit structure of the rotation on `𝒜_i ∪ R(𝒜_i)` where
/// `𝒜_i = {σ ∈ Av_n(321) : des σ = k, maj σ = i}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct OrbitReport {
    pub n: usize,
    pub k: usize,
    pub target_maj: usize,
    /// `#𝒜_i`
    pub class_size: usize,
    /// `#𝒜_{nk-i}`, or 0 when `i > nk`
    pub mirror_size: usize,
    pub fixed: usize,
    pub pairs: usize,
    /// Larger orbits; always 0 for an involution.
    pub larger: usize,
    /// `R(𝒜_i) = 𝒜_{nk-i}` exactly.
    pub maps_onto_mirror: bool,
}

impl OrbitReport {
    pub fn orbit_sizes_at_most_two(&self) -> bool {
        self.larger == 0
    }
}

pub fn orbit_partition(n: usize, k: usize, target_maj: usize) -> OrbitReport {
    let class: BTreeSet<Permutation> = enumerate_avoiders(n)
        .filter(|s| s.des() == k && s.maj() == target_maj)
        .collect();
    let mirror: BTreeSet<Permutation> = match (n * k).checked_sub(target_maj) {
        Some(m) => enumerate_avoiders(n)
            .filter(|s| s.des() == k && s.maj() == m)
            .collect(),
        None => BTreeSet::new(),
    };
    let image: BTreeSet<Permutation> = class.iter().map(Permutation::rotate180).collect();
    let union: BTreeSet<Permutation> = class.union(&image).cloned().collect();

    let mut seen = BTreeSet::new();
    let mut report = OrbitReport {
        n,
        k,
        target_maj,
        class_size: class.len(),
        mirror_size: mirror.len(),
        maps_onto_mirror: image == mirror,
        ..OrbitReport::default()
    };
    for s in &union {
        if seen.contains(s) {
            continue;
        }
        let mut orbit = alloc::vec![s.clone()];
        let mut cur = s.rotate180();
        while cur != *s {
            orbit.push(cur.clone());
            cur = cur.rotate180();
        }
        match orbit.len() {
            1 => report.fixed += 1,
            2 => report.pairs += 1,
            _ => report.larger += 1,
        }
        seen.extend(orbit);
    }
    report
}
