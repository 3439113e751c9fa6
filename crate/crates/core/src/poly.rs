//! Sparse polynomials over arbitrary-precision integers.
//!
//! [`BivarPoly`] carries `M_n(q,t)` and `I_n(q,t)`; [`UnivarPoly`] carries
//! single-variable slices such as `A_{n,k}(q)` or `I_n(-1,t)`. Neither type
//! ever stores a zero coefficient.

use alloc::collections::btree_map::{BTreeMap, Entry};
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Pow, Signed, Zero};

/// Variable tag of a [`UnivarPoly`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Var {
    Q,
    T,
    Z,
    X,
}

impl Var {
    pub fn name(self) -> &'static str {
        match self {
            Var::Q => "q",
            Var::T => "t",
            Var::Z => "z",
            Var::X => "x",
        }
    }
}

fn add_term<K: Ord>(map: &mut BTreeMap<K, BigInt>, key: K, c: BigInt) {
    if c.is_zero() {
        return;
    }
    match map.entry(key) {
        Entry::Vacant(e) => {
            e.insert(c);
        }
        Entry::Occupied(mut e) => {
            *e.get_mut() += c;
            if e.get().is_zero() {
                e.remove();
            }
        }
    }
}

fn int_pow(base: &BigInt, exp: u32) -> BigInt {
    Pow::pow(base, exp)
}

/// Polynomial in `(q, t)`; keys are `(q-exponent, t-exponent)`.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct BivarPoly {
    terms: BTreeMap<(u32, u32), BigInt>,
}

impl BivarPoly {
    pub fn zero() -> Self {
        BivarPoly::default()
    }

    pub fn one() -> Self {
        BivarPoly::constant(BigInt::one())
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        BivarPoly::monomial(c, 0, 0)
    }

    /// `c · q^a t^b`
    pub fn monomial(c: impl Into<BigInt>, a: u32, b: u32) -> Self {
        let mut p = BivarPoly::zero();
        add_term(&mut p.terms, (a, b), c.into());
        p
    }

    pub fn q() -> Self {
        BivarPoly::monomial(1, 1, 0)
    }

    pub fn t() -> Self {
        BivarPoly::monomial(1, 0, 1)
    }

    /// Builds a polynomial from `((a, b), c)` terms; repeated keys are summed.
    pub fn from_terms<I, C>(terms: I) -> Self
    where
        I: IntoIterator<Item = ((u32, u32), C)>,
        C: Into<BigInt>,
    {
        let mut p = BivarPoly::zero();
        for (k, c) in terms {
            add_term(&mut p.terms, k, c.into());
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&(0, 0)).is_some_and(One::is_one)
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in ascending `(q, t)` exponent order.
    pub fn terms(&self) -> impl Iterator<Item = ((u32, u32), &BigInt)> + '_ {
        self.terms.iter().map(|(&k, c)| (k, c))
    }

    /// Terms in canonical display order: ascending total degree, then
    /// ascending q-degree.
    pub fn canonical_terms(&self) -> Vec<((u32, u32), &BigInt)> {
        let mut v: Vec<_> = self.terms().collect();
        v.sort_by_key(|&((a, b), _)| (a + b, a));
        v
    }

    pub fn coeff_of(&self, a: u32, b: u32) -> BigInt {
        self.terms.get(&(a, b)).cloned().unwrap_or_default()
    }

    pub fn constant_term(&self) -> BigInt {
        self.coeff_of(0, 0)
    }

    pub fn degree_q(&self) -> Option<u32> {
        self.terms.keys().map(|k| k.0).max()
    }

    pub fn degree_t(&self) -> Option<u32> {
        self.terms.keys().map(|k| k.1).max()
    }

    /// `[t^k] p` as a polynomial in `q`.
    pub fn coeff_t(&self, k: u32) -> UnivarPoly {
        UnivarPoly::from_terms(
            Var::Q,
            self.terms
                .iter()
                .filter(|(&(_, b), _)| b == k)
                .map(|(&(a, _), c)| (a, c.clone())),
        )
    }

    /// `[q^a] p` as a polynomial in `t`.
    pub fn coeff_q(&self, a: u32) -> UnivarPoly {
        UnivarPoly::from_terms(
            Var::T,
            self.terms
                .iter()
                .filter(|(&(e, _), _)| e == a)
                .map(|(&(_, b), c)| (b, c.clone())),
        )
    }

    /// Exact value at `(q0, t0)`.
    pub fn eval_int(&self, q0: &BigInt, t0: &BigInt) -> BigInt {
        self.terms
            .iter()
            .map(|(&(a, b), c)| c * int_pow(q0, a) * int_pow(t0, b))
            .sum()
    }

    /// Substitutes `q := q0`, leaving a polynomial in `t`.
    pub fn subst_q(&self, q0: &BigInt) -> UnivarPoly {
        UnivarPoly::from_terms(
            Var::T,
            self.terms
                .iter()
                .map(|(&(a, b), c)| (b, c * int_pow(q0, a))),
        )
    }

    /// Substitutes `t := t0`, leaving a polynomial in `q`.
    pub fn subst_t(&self, t0: &BigInt) -> UnivarPoly {
        UnivarPoly::from_terms(
            Var::Q,
            self.terms
                .iter()
                .map(|(&(a, b), c)| (a, c * int_pow(t0, b))),
        )
    }

    /// Substitutes any subset of the variables, keeping the result bivariate.
    pub fn specialize(&self, q0: Option<&BigInt>, t0: Option<&BigInt>) -> BivarPoly {
        BivarPoly::from_terms(self.terms.iter().map(|(&(a, b), c)| {
            let mut c = c.clone();
            let mut key = (a, b);
            if let Some(q0) = q0 {
                c *= int_pow(q0, a);
                key.0 = 0;
            }
            if let Some(t0) = t0 {
                c *= int_pow(t0, b);
                key.1 = 0;
            }
            (key, c)
        }))
    }

    pub fn scale(&self, c: &BigInt) -> BivarPoly {
        if c.is_zero() {
            return BivarPoly::zero();
        }
        BivarPoly {
            terms: self.terms.iter().map(|(&k, v)| (k, v * c)).collect(),
        }
    }
}

impl<'a> Add<&'a BivarPoly> for &'a BivarPoly {
    type Output = BivarPoly;

    fn add(self, rhs: &BivarPoly) -> BivarPoly {
        let mut out = self.clone();
        for (&k, c) in &rhs.terms {
            add_term(&mut out.terms, k, c.clone());
        }
        out
    }
}

impl<'a> Sub<&'a BivarPoly> for &'a BivarPoly {
    type Output = BivarPoly;

    fn sub(self, rhs: &BivarPoly) -> BivarPoly {
        let mut out = self.clone();
        for (&k, c) in &rhs.terms {
            add_term(&mut out.terms, k, -c);
        }
        out
    }
}

impl<'a> Mul<&'a BivarPoly> for &'a BivarPoly {
    type Output = BivarPoly;

    fn mul(self, rhs: &BivarPoly) -> BivarPoly {
        let mut out = BivarPoly::zero();
        for (&(a1, b1), c1) in &self.terms {
            for (&(a2, b2), c2) in &rhs.terms {
                add_term(&mut out.terms, (a1 + a2, b1 + b2), c1 * c2);
            }
        }
        out
    }
}

impl Neg for &BivarPoly {
    type Output = BivarPoly;

    fn neg(self) -> BivarPoly {
        BivarPoly {
            terms: self.terms.iter().map(|(&k, c)| (k, -c)).collect(),
        }
    }
}

macro_rules! forward_owned_binops {
    ($ty:ty) => {
        impl Add for $ty {
            type Output = $ty;
            fn add(self, rhs: $ty) -> $ty {
                &self + &rhs
            }
        }
        impl Sub for $ty {
            type Output = $ty;
            fn sub(self, rhs: $ty) -> $ty {
                &self - &rhs
            }
        }
        impl Mul for $ty {
            type Output = $ty;
            fn mul(self, rhs: $ty) -> $ty {
                &self * &rhs
            }
        }
        impl Neg for $ty {
            type Output = $ty;
            fn neg(self) -> $ty {
                -&self
            }
        }
    };
}

forward_owned_binops!(BivarPoly);
forward_owned_binops!(UnivarPoly);

fn write_monomial(
    f: &mut fmt::Formatter<'_>,
    first: bool,
    c: &BigInt,
    vars: &[(&str, u32)],
) -> fmt::Result {
    let neg = c.is_negative();
    let mag = c.abs();
    match (first, neg) {
        (true, true) => f.write_str("-")?,
        (true, false) => {}
        (false, true) => f.write_str(" - ")?,
        (false, false) => f.write_str(" + ")?,
    }
    let powers: Vec<_> = vars.iter().filter(|(_, e)| *e > 0).collect();
    if powers.is_empty() {
        return write!(f, "{mag}");
    }
    if !mag.is_one() {
        write!(f, "{mag}*")?;
    }
    for (i, (v, e)) in powers.iter().enumerate() {
        if i > 0 {
            f.write_str("*")?;
        }
        if *e == 1 {
            write!(f, "{v}")?;
        } else {
            write!(f, "{v}^{e}")?;
        }
    }
    Ok(())
}

/// Canonical rendering: terms by ascending total degree then q-degree,
/// e.g. `t^2 + q*t`, `1 + 2*q*t`, `0` for the zero polynomial.
impl fmt::Display for BivarPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, ((a, b), c)) in self.canonical_terms().into_iter().enumerate() {
            write_monomial(f, i == 0, c, &[("q", a), ("t", b)])?;
        }
        Ok(())
    }
}

impl fmt::Debug for BivarPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BivarPoly({self})")
    }
}

/// Polynomial in one tagged variable with big-integer coefficients.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct UnivarPoly {
    var: Var,
    coeffs: BTreeMap<u32, BigInt>,
}

impl UnivarPoly {
    pub fn zero(var: Var) -> Self {
        UnivarPoly {
            var,
            coeffs: BTreeMap::new(),
        }
    }

    pub fn constant(var: Var, c: impl Into<BigInt>) -> Self {
        UnivarPoly::monomial(var, c, 0)
    }

    pub fn monomial(var: Var, c: impl Into<BigInt>, e: u32) -> Self {
        let mut p = UnivarPoly::zero(var);
        add_term(&mut p.coeffs, e, c.into());
        p
    }

    pub fn from_terms<I, C>(var: Var, terms: I) -> Self
    where
        I: IntoIterator<Item = (u32, C)>,
        C: Into<BigInt>,
    {
        let mut p = UnivarPoly::zero(var);
        for (e, c) in terms {
            add_term(&mut p.coeffs, e, c.into());
        }
        p
    }

    /// `coeffs[i]` becomes the coefficient of `var^i`.
    pub fn from_dense<C: Into<BigInt>>(var: Var, coeffs: impl IntoIterator<Item = C>) -> Self {
        UnivarPoly::from_terms(
            var,
            coeffs.into_iter().enumerate().map(|(i, c)| (i as u32, c)),
        )
    }

    pub fn var(&self) -> Var {
        self.var
    }

    /// Same coefficients, different variable tag.
    pub fn with_var(mut self, var: Var) -> Self {
        self.var = var;
        self
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, e: u32) -> BigInt {
        self.coeffs.get(&e).cloned().unwrap_or_default()
    }

    pub fn terms(&self) -> impl Iterator<Item = (u32, &BigInt)> + '_ {
        self.coeffs.iter().map(|(&e, c)| (e, c))
    }

    pub fn num_terms(&self) -> usize {
        self.coeffs.len()
    }

    /// `(r, s)`: the smallest and largest exponent with nonzero coefficient.
    pub fn support(&self) -> Option<(u32, u32)> {
        let lo = *self.coeffs.keys().next()?;
        let hi = *self.coeffs.keys().next_back()?;
        Some((lo, hi))
    }

    pub fn degree(&self) -> Option<u32> {
        self.support().map(|(_, s)| s)
    }

    /// Coefficients `a_r, …, a_s` over the support window, internal zeros
    /// included.
    pub fn window(&self) -> Vec<BigInt> {
        match self.support() {
            None => Vec::new(),
            Some((r, s)) => (r..=s).map(|e| self.coeff(e)).collect(),
        }
    }

    /// Dense coefficients `a_0, …, a_s`.
    pub fn dense(&self) -> Vec<BigInt> {
        match self.degree() {
            None => Vec::new(),
            Some(s) => (0..=s).map(|e| self.coeff(e)).collect(),
        }
    }

    pub fn eval(&self, x: &BigInt) -> BigInt {
        self.coeffs.iter().map(|(&e, c)| c * int_pow(x, e)).sum()
    }

    pub fn scale(&self, c: &BigInt) -> UnivarPoly {
        UnivarPoly::from_terms(self.var, self.coeffs.iter().map(|(&e, v)| (e, v * c)))
    }

    /// Sum of the coefficients, i.e. the value at 1.
    pub fn coeff_sum(&self) -> BigInt {
        self.coeffs.values().sum()
    }

    /// `a_i = a_{r+s-i}` across the support. The zero polynomial counts as
    /// symmetric.
    pub fn is_symmetric(&self) -> bool {
        let w = self.window();
        w.iter().eq(w.iter().rev())
    }

    /// Coefficients over the support window rise weakly then fall weakly.
    pub fn is_unimodal(&self) -> bool {
        let w = self.window();
        let mut i = 1;
        while i < w.len() && w[i - 1] <= w[i] {
            i += 1;
        }
        while i < w.len() && w[i - 1] >= w[i] {
            i += 1;
        }
        i >= w.len()
    }

    /// `a_i^2 ≥ a_{i-1} a_{i+1}` for every interior index of the support
    /// window.
    pub fn is_log_concave(&self) -> bool {
        self.first_log_concavity_failure().is_none()
    }

    /// Exponent `i` of the first interior index where `a_i^2 < a_{i-1} a_{i+1}`.
    pub fn first_log_concavity_failure(&self) -> Option<u32> {
        let (r, _) = self.support()?;
        let w = self.window();
        w.windows(3)
            .position(|a| &a[1] * &a[1] < &a[0] * &a[2])
            .map(|i| r + i as u32 + 1)
    }

    fn check_var(&self, other: &UnivarPoly) {
        assert_eq!(
            self.var, other.var,
            "arithmetic between polynomials in different variables"
        );
    }
}

impl<'a> Add<&'a UnivarPoly> for &'a UnivarPoly {
    type Output = UnivarPoly;

    fn add(self, rhs: &UnivarPoly) -> UnivarPoly {
        self.check_var(rhs);
        let mut out = self.clone();
        for (&e, c) in &rhs.coeffs {
            add_term(&mut out.coeffs, e, c.clone());
        }
        out
    }
}

impl<'a> Sub<&'a UnivarPoly> for &'a UnivarPoly {
    type Output = UnivarPoly;

    fn sub(self, rhs: &UnivarPoly) -> UnivarPoly {
        self.check_var(rhs);
        let mut out = self.clone();
        for (&e, c) in &rhs.coeffs {
            add_term(&mut out.coeffs, e, -c);
        }
        out
    }
}

impl<'a> Mul<&'a UnivarPoly> for &'a UnivarPoly {
    type Output = UnivarPoly;

    fn mul(self, rhs: &UnivarPoly) -> UnivarPoly {
        self.check_var(rhs);
        let mut out = UnivarPoly::zero(self.var);
        for (&e1, c1) in &self.coeffs {
            for (&e2, c2) in &rhs.coeffs {
                add_term(&mut out.coeffs, e1 + e2, c1 * c2);
            }
        }
        out
    }
}

impl Neg for &UnivarPoly {
    type Output = UnivarPoly;

    fn neg(self) -> UnivarPoly {
        UnivarPoly {
            var: self.var,
            coeffs: self.coeffs.iter().map(|(&e, c)| (e, -c)).collect(),
        }
    }
}

/// Ascending powers, e.g. `q^4 + 2*q^5 + q^6` or `t^2 - t` printed as
/// `-t + t^2`.
impl fmt::Display for UnivarPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (&e, c)) in self.coeffs.iter().enumerate() {
            write_monomial(f, i == 0, c, &[(self.var.name(), e)])?;
        }
        Ok(())
    }
}

impl fmt::Debug for UnivarPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "UnivarPoly({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;
    use proptest::prelude::*;

    fn bi(v: i64) -> BigInt {
        BigInt::from(v)
    }

    fn qt() -> BivarPoly {
        BivarPoly::monomial(1, 1, 1)
    }

    #[test]
    fn ring_basics() {
        let one = BivarPoly::one();
        assert_eq!(
            (&one + &qt()) + qt(),
            BivarPoly::from_terms([((0, 0), 1), ((1, 1), 2)])
        );
        let p = BivarPoly::from_terms([((0, 2), 1), ((1, 1), 1)]);
        assert_eq!(&p * &one, p);
        assert!((&p - &p).is_zero());
        // M_2 * M_1 with M_1 = 1, M_2 = 1 + qt
        assert_eq!(&(&one + &qt()) * &one, &one + &qt());
    }

    #[test]
    fn never_stores_zero() {
        let p = BivarPoly::from_terms([((1, 1), 3), ((1, 1), -3), ((0, 0), 0)]);
        assert!(p.is_zero());
        assert_eq!(p.num_terms(), 0);
        let u = UnivarPoly::from_dense(Var::Q, [0, 0, 5, 0]);
        assert_eq!(u.num_terms(), 1);
    }

    #[test]
    fn evaluation_and_extraction() {
        let p = &BivarPoly::one() + &qt();
        assert_eq!(p.eval_int(&bi(1), &bi(1)), bi(2));
        assert_eq!(p.eval_int(&bi(-1), &bi(2)), bi(-1));
        assert_eq!(p.coeff_t(1), UnivarPoly::monomial(Var::Q, 1, 1));
        assert!(p.coeff_t(7).is_zero());
        assert_eq!(p.coeff_q(0), UnivarPoly::constant(Var::T, 1));
        assert_eq!(p.coeff_of(1, 1), bi(1));
        assert_eq!(p.subst_q(&bi(-1)).to_string(), "1 - t");
        assert_eq!(
            p.specialize(Some(&bi(2)), None),
            BivarPoly::from_terms([((0, 0), 1), ((0, 1), 2)])
        );
    }

    #[test]
    fn rendering() {
        let i2 = BivarPoly::from_terms([((0, 2), 1), ((1, 1), 1)]);
        assert_eq!(i2.to_string(), "t^2 + q*t");
        assert_eq!(BivarPoly::one().to_string(), "1");
        assert_eq!(BivarPoly::zero().to_string(), "0");
        assert_eq!(
            BivarPoly::from_terms([((0, 0), 1), ((1, 1), -2)]).to_string(),
            "1 - 2*q*t"
        );
        let u = UnivarPoly::from_terms(Var::T, [(1, -1), (2, 1)]);
        assert_eq!(u.to_string(), "-t + t^2");
    }

    #[test]
    fn shape_predicates() {
        let sym = UnivarPoly::from_terms(Var::Q, [(4, 1), (5, 2), (6, 1)]);
        assert!(sym.is_symmetric());
        assert!(!UnivarPoly::from_dense(Var::Q, [1, 2]).is_symmetric());
        assert!(UnivarPoly::zero(Var::Q).is_symmetric());

        let binom3 = UnivarPoly::from_dense(Var::Q, [1, 3, 3, 1]);
        assert!(binom3.is_unimodal());
        assert!(binom3.is_log_concave());

        let valley = UnivarPoly::from_dense(Var::Q, [2, 1, 2]);
        assert!(!valley.is_unimodal());
        assert!(!valley.is_log_concave());

        // internal zero breaks log-concavity but leading zeros do not
        let gap = UnivarPoly::from_terms(Var::Q, [(3, 1), (5, 1)]);
        assert!(!gap.is_log_concave());
        assert_eq!(gap.first_log_concavity_failure(), Some(4));
        assert!(UnivarPoly::from_terms(Var::Q, [(7, 1), (8, 2), (9, 1)]).is_log_concave());
        // plateau then descent is unimodal
        assert!(UnivarPoly::from_dense(Var::Q, [1, 2, 2, 1, 1]).is_unimodal());
    }

    fn arb_bivar() -> impl Strategy<Value = BivarPoly> {
        proptest::collection::vec(((0u32..4, 0u32..4), -5i64..=5), 0..6)
            .prop_map(BivarPoly::from_terms)
    }

    fn arb_positive_window() -> impl Strategy<Value = UnivarPoly> {
        (0u32..5, proptest::collection::vec(1i64..20, 1..8)).prop_map(|(shift, c)| {
            UnivarPoly::from_terms(
                Var::Q,
                c.into_iter()
                    .enumerate()
                    .map(|(i, v)| (shift + i as u32, v)),
            )
        })
    }

    proptest! {
        #[test]
        fn ring_axioms(a in arb_bivar(), b in arb_bivar(), c in arb_bivar()) {
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert_eq!(&a + &b, &b + &a);
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert_eq!(&(&a + &b) - &b, a.clone());
        }

        #[test]
        fn evaluation_is_a_ring_map(a in arb_bivar(), b in arb_bivar(), q0 in -3i64..=3, t0 in -3i64..=3) {
            let (q0, t0) = (bi(q0), bi(t0));
            prop_assert_eq!((&a * &b).eval_int(&q0, &t0), a.eval_int(&q0, &t0) * b.eval_int(&q0, &t0));
            prop_assert_eq!((&a + &b).eval_int(&q0, &t0), a.eval_int(&q0, &t0) + b.eval_int(&q0, &t0));
        }

        #[test]
        fn log_concave_positive_implies_unimodal(p in arb_positive_window()) {
            if p.is_log_concave() {
                prop_assert!(p.is_unimodal());
            }
        }
    }
}
