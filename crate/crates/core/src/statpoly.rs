//! Brute-force statistic polynomials over `Av_n(321)`.
//!
//! Everything in this module is a direct sum over the avoiders produced by
//! [`Walker`]; nothing here consults a closed form. The rest of the crate
//! checks its formulas against these sums.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::One;

use crate::avoiders::Walker;
use crate::poly::{BivarPoly, UnivarPoly};
use crate::series::Coefficient;
use crate::RatPoly;

/// `M_n(q,t)` and `I_n(q,t)` from a single pass over `Av_n(321)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StatTables {
    pub n: usize,
    /// `Σ q^maj t^des`
    pub maj: BivarPoly,
    /// `Σ q^inv t^lrm`
    pub inv: BivarPoly,
    pub count: u64,
}

/// Dense `u64` tally indexed by `(q-exponent, t-exponent)`.
struct Tally {
    width: usize,
    cells: Vec<u64>,
}

impl Tally {
    fn new(max_q: usize, max_t: usize) -> Self {
        Tally {
            width: max_t + 1,
            cells: alloc::vec![0; (max_q + 1) * (max_t + 1)],
        }
    }

    #[inline]
    fn bump(&mut self, a: u32, b: u32) {
        self.cells[a as usize * self.width + b as usize] += 1;
    }

    fn into_poly(self) -> BivarPoly {
        let width = self.width;
        BivarPoly::from_terms(
            self.cells
                .into_iter()
                .enumerate()
                .filter(|&(_, c)| c > 0)
                .map(|(i, c)| (((i / width) as u32, (i % width) as u32), c)),
        )
    }
}

impl StatTables {
    pub fn compute(n: usize) -> Self {
        let max_q = n * n.saturating_sub(1) / 2;
        let mut maj = Tally::new(max_q, n);
        let mut inv = Tally::new(max_q, n);
        let mut count = 0u64;
        let mut w = Walker::new(n);
        while let Some(s) = w.next_leaf() {
            maj.bump(s.maj, s.des);
            inv.bump(s.inv, s.lrm);
            count += 1;
        }
        StatTables {
            n,
            maj: maj.into_poly(),
            inv: inv.into_poly(),
            count,
        }
    }

    /// `A_{n,k}(q) = [t^k] M_n(q,t)`.
    pub fn a_poly(&self, k: u32) -> UnivarPoly {
        self.maj.coeff_t(k)
    }

    /// `I_n(-1, t)`.
    pub fn signed_inv(&self) -> UnivarPoly {
        self.inv.subst_q(&BigInt::from(-1))
    }
}

/// `M_n(q,t) = Σ_{σ ∈ Av_n(321)} q^{maj σ} t^{des σ}`.
pub fn maj_poly(n: usize) -> BivarPoly {
    StatTables::compute(n).maj
}

/// `I_n(q,t) = Σ_{σ ∈ Av_n(321)} q^{inv σ} t^{lrm σ}`.
pub fn inv_poly(n: usize) -> BivarPoly {
    StatTables::compute(n).inv
}

/// `A_{n,k}(q)`: the major index generating function of the avoiders with
/// exactly `k` descents.
pub fn a_poly(n: usize, k: u32) -> UnivarPoly {
    maj_poly(n).coeff_t(k)
}

/// `I_n(-1, t) = Σ (-1)^{inv σ} t^{lrm σ}`.
pub fn signed_inv_poly(n: usize) -> UnivarPoly {
    StatTables::compute(n).signed_inv()
}

/// `I_n(q, t)` by a transfer-matrix sum instead of listing the avoiders.
///
/// An avoider is determined by the positions and values of its left-right
/// maxima; every other entry is the smallest value still unused. A maximum
/// `v` at position `p` contributes `v - p` inversions, the other entries
/// contribute none on this accounting, so `inv σ = Σ_{maxima} (v - p)`.
/// The state after `p` entries is the current maximum `m ≥ p`.
///
/// This is a second, independent route to the oracle. It reaches lengths
/// where listing `C_n` words is out of reach.
pub fn inv_poly_transfer(n: usize) -> BivarPoly {
    transfer(n, |excess| BivarPoly::monomial(1, excess, 1))
}

/// `I_n(-1, t)` through [`inv_poly_transfer`]'s recursion, with `q = -1`
/// substituted in every step.
pub fn signed_inv_poly_transfer(n: usize) -> UnivarPoly {
    let p = transfer(n, |excess| {
        let sign = if excess % 2 == 0 { 1 } else { -1 };
        RatPoly::from_ints([0, sign])
    });
    p.to_integer().expect("integer weights give integer sums")
}

fn transfer<C: Coefficient>(n: usize, max_weight: impl Fn(u32) -> C) -> C {
    // states[m] = weight of prefixes of the current length with maximum m
    let mut states: Vec<C> = alloc::vec![C::zero(); n + 1];
    states[0] = C::one();
    for p in 1..=n {
        let mut next: Vec<C> = alloc::vec![C::zero(); n + 1];
        for (m, w) in states.iter().enumerate() {
            if w.is_zero() {
                continue;
            }
            // a value below m is still free
            if m >= p {
                next[m] = next[m].add(w);
            }
            for v in m + 1..=n {
                next[v] = next[v].add(&w.mul(&max_weight((v - p) as u32)));
            }
        }
        states = next;
    }
    states.swap_remove(n)
}

/// Per-`n` memo of [`StatTables`], refusing lengths above `cap`.
#[derive(Debug, Clone)]
pub struct OracleCache {
    cap: usize,
    tables: BTreeMap<usize, StatTables>,
}

impl OracleCache {
    pub fn new(cap: usize) -> Self {
        OracleCache {
            cap,
            tables: BTreeMap::new(),
        }
    }

    pub fn cap(&self) -> usize {
        self.cap
    }

    /// Tables for length `n`, or `None` if `n` exceeds the cap.
    pub fn get(&mut self, n: usize) -> Option<&StatTables> {
        if n > self.cap {
            return None;
        }
        Some(
            self.tables
                .entry(n)
                .or_insert_with(|| StatTables::compute(n)),
        )
    }

    /// # Panics
    /// If `n` exceeds the cap.
    pub fn tables(&mut self, n: usize) -> &StatTables {
        let cap = self.cap;
        self.get(n)
            .unwrap_or_else(|| panic!("length {n} exceeds the oracle cap {cap}"))
    }

    pub fn maj(&mut self, n: usize) -> BivarPoly {
        self.tables(n).maj.clone()
    }

    pub fn inv(&mut self, n: usize) -> BivarPoly {
        self.tables(n).inv.clone()
    }

    pub fn a_poly(&mut self, n: usize, k: u32) -> UnivarPoly {
        self.tables(n).a_poly(k)
    }

    pub fn signed_inv(&mut self, n: usize) -> UnivarPoly {
        self.tables(n).signed_inv()
    }

    /// `Σ_{n ≤ order} I_n(-1,t) z^n` as integer polynomials in `t`.
    pub fn signed_inv_series(&mut self, order: usize) -> Vec<UnivarPoly> {
        (0..=order).map(|n| self.signed_inv(n)).collect()
    }
}

/// `[q^k] I_n(q,1)` as a polynomial in `q`.
pub fn inv_at_t1(tables: &StatTables) -> UnivarPoly {
    tables.inv.subst_t(&BigInt::one())
}

/// `M_n(q,1)` as a polynomial in `q`.
pub fn maj_at_t1(tables: &StatTables) -> UnivarPoly {
    tables.maj.subst_t(&BigInt::one())
}

/// `M_n(1,t)` as a polynomial in `t`.
pub fn maj_at_q1(tables: &StatTables) -> UnivarPoly {
    tables.maj.subst_q(&BigInt::one())
}

/// `I_n(1,t)` as a polynomial in `t`.
pub fn inv_at_q1(tables: &StatTables) -> UnivarPoly {
    tables.inv.subst_q(&BigInt::one())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::avoiders::enumerate_avoiders;
    use crate::poly::Var;
    use crate::Permutation;
    use alloc::string::ToString;

    fn bi(v: i64) -> BigInt {
        BigInt::from(v)
    }

    /// Sums over the iterator with the direct statistic definitions, no
    /// incremental bookkeeping.
    fn naive_tables(n: usize) -> (BivarPoly, BivarPoly) {
        let mut maj = BivarPoly::zero();
        let mut inv = BivarPoly::zero();
        for s in enumerate_avoiders(n) {
            maj = &maj + &BivarPoly::monomial(1, s.maj() as u32, s.des() as u32);
            inv = &inv + &BivarPoly::monomial(1, s.inv() as u32, s.lrm() as u32);
        }
        (maj, inv)
    }

    #[test]
    fn small_polynomials() {
        assert_eq!(maj_poly(0), BivarPoly::one());
        assert_eq!(inv_poly(0), BivarPoly::one());
        assert_eq!(maj_poly(2).to_string(), "1 + q*t");
        assert_eq!(inv_poly(1), BivarPoly::t());
        assert_eq!(inv_poly(2).to_string(), "t^2 + q*t");
        assert_eq!(signed_inv_poly(1), UnivarPoly::monomial(Var::T, 1, 1));
        assert_eq!(signed_inv_poly(2).to_string(), "-t + t^2");
    }

    #[test]
    fn one_descent_at_length_three() {
        // 132, 213, 231, 312 have maj 2, 1, 2, 1
        let descent_one: Vec<_> = enumerate_avoiders(3).filter(|s| s.des() == 1).collect();
        assert_eq!(descent_one.len(), 4);
        let majs: Vec<_> = descent_one.iter().map(Permutation::maj).collect();
        assert_eq!(majs, [2, 1, 2, 1]);
        assert_eq!(
            a_poly(3, 1),
            UnivarPoly::from_terms(Var::Q, [(1, 2), (2, 2)])
        );
        assert_eq!(a_poly(5, 0), UnivarPoly::constant(Var::Q, 1));
    }

    #[test]
    fn incremental_tables_match_naive_sums() {
        for n in 0..=8 {
            let t = StatTables::compute(n);
            let (maj, inv) = naive_tables(n);
            assert_eq!(t.maj, maj, "n={n}");
            assert_eq!(t.inv, inv, "n={n}");
        }
    }

    #[test]
    fn evaluations_at_one_are_catalan() {
        let catalan = [1i64, 1, 2, 5, 14, 42, 132, 429, 1430, 4862, 16796];
        for (n, &c) in catalan.iter().enumerate() {
            let t = StatTables::compute(n);
            assert_eq!(t.maj.eval_int(&bi(1), &bi(1)), bi(c));
            assert_eq!(t.inv.eval_int(&bi(1), &bi(1)), bi(c));
            assert_eq!(t.count, c as u64);
        }
    }

    #[test]
    fn signed_values_at_small_lengths() {
        let i3 = inv_poly(3);
        assert_eq!(i3.eval_int(&bi(1), &bi(1)), bi(5));
        assert_eq!(i3.eval_int(&bi(-1), &bi(1)), bi(1));
        assert_eq!(signed_inv_poly(2).eval(&bi(1)), bi(0));
        assert_eq!(signed_inv_poly(3).eval(&bi(1)), bi(1));
    }

    #[test]
    fn lrm_refinement_at_length_four() {
        let at_q1 = inv_at_q1(&StatTables::compute(4));
        assert_eq!(at_q1, UnivarPoly::from_dense(Var::T, [0, 1, 6, 6, 1]));
    }

    #[test]
    fn descent_support_window() {
        for n in 1..=8usize {
            let t = StatTables::compute(n);
            for k in 1..n as u32 {
                let a = t.a_poly(k);
                if let Some((r, s)) = a.support() {
                    assert!(r >= k * k, "n={n} k={k}");
                    assert!(s <= n as u32 * k - k * k, "n={n} k={k}");
                }
            }
        }
    }

    #[test]
    fn transfer_route_matches_enumeration() {
        for n in 0..=10 {
            assert_eq!(inv_poly_transfer(n), inv_poly(n), "n={n}");
            assert_eq!(signed_inv_poly_transfer(n), signed_inv_poly(n), "n={n}");
        }
    }

    #[test]
    fn cache_respects_cap() {
        let mut c = OracleCache::new(4);
        assert!(c.get(5).is_none());
        assert_eq!(c.get(4).unwrap().count, 14);
        assert_eq!(c.signed_inv_series(2).len(), 3);
    }
}
