//! Explicit formulas for the signed inversion polynomials and the identities
//! their generating functions satisfy.
//!
//! Every `verify_*` function compares whole polynomial objects against the
//! brute-force oracle (or, for the two-sided Lagrange identity, against an
//! independent computation) and returns the first mismatch in full.
//!
//! Notation: `F(t; z) = Σ_n I_n(-1,t) z^n` and
//! `F_odd(t; z) = Σ_n I_{2n+1}(-1,t) z^n`.

use alloc::format;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::check::{expect_eq, Mismatch, Verification};
use crate::poly::{UnivarPoly, Var};
use crate::series::{Series, ZSeries};
use crate::statpoly::{self, OracleCache};
use crate::{Error, RatPoly};

/// Pascal's triangle, grown on demand. `C(n,k) = 0` outside `0 ≤ k ≤ n`.
#[derive(Debug, Clone)]
pub struct BinomialTable {
    rows: Vec<Vec<BigInt>>,
}

impl Default for BinomialTable {
    fn default() -> Self {
        BinomialTable::new(0)
    }
}

impl BinomialTable {
    pub fn new(n_max: usize) -> Self {
        let mut t = BinomialTable {
            rows: alloc::vec![alloc::vec![BigInt::one()]],
        };
        t.grow(n_max);
        t
    }

    fn grow(&mut self, n_max: usize) {
        while self.rows.len() <= n_max {
            let prev = self.rows.last().expect("row 0 exists");
            let mut row = Vec::with_capacity(prev.len() + 1);
            row.push(BigInt::one());
            for w in prev.windows(2) {
                row.push(&w[0] + &w[1]);
            }
            row.push(BigInt::one());
            self.rows.push(row);
        }
    }

    pub fn get(&mut self, n: i64, k: i64) -> BigInt {
        if n < 0 || k < 0 || k > n {
            return BigInt::zero();
        }
        self.grow(n as usize);
        self.rows[n as usize][k as usize].clone()
    }
}

/// `C(n,k)` by the multiplicative formula; zero outside `0 ≤ k ≤ n`.
pub fn binomial(n: i64, k: i64) -> BigInt {
    if n < 0 || k < 0 || k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

/// `C_0, …, C_{n_max}` from Segner's recurrence
/// `C_{m+1} = Σ_{i=0}^{m} C_i C_{m-i}`.
pub fn catalan_numbers(n_max: usize) -> Vec<BigInt> {
    let mut c: Vec<BigInt> = alloc::vec![BigInt::one()];
    for m in 0..n_max {
        let next = (0..=m).map(|i| &c[i] * &c[m - i]).sum();
        c.push(next);
    }
    c
}

/// The `n`th Catalan number.
pub fn catalan(n: usize) -> BigInt {
    catalan_numbers(n).swap_remove(n)
}

/// `N_{n,k} = C(n,k) C(n,k-1) / n` for `n ≥ k ≥ 1`, zero otherwise.
pub fn narayana(n: i64, k: i64) -> BigInt {
    if k < 1 || k > n {
        return BigInt::zero();
    }
    let (q, r) = (binomial(n, k) * binomial(n, k - 1)).div_rem(&BigInt::from(n));
    debug_assert!(r.is_zero());
    q
}

/// `Σ_k N_{n,k} t^k`.
pub fn narayana_poly(n: usize) -> UnivarPoly {
    let n = n as i64;
    UnivarPoly::from_terms(Var::T, (1..=n).map(|k| (k as u32, narayana(n, k))))
}

/// `s_{n,k} = C(⌊(n-1)/2⌋, ⌊(k-1)/2⌋) · C(⌈(n-1)/2⌉, ⌈(k-1)/2⌉)` for
/// `n ≥ k ≥ 1`, zero otherwise.
pub fn s_coeff(n: i64, k: i64) -> BigInt {
    if k < 1 || k > n {
        return BigInt::zero();
    }
    let (n1, k1) = (n - 1, k - 1);
    binomial(Integer::div_floor(&n1, &2), Integer::div_floor(&k1, &2))
        * binomial(Integer::div_ceil(&n1, &2), Integer::div_ceil(&k1, &2))
}

/// The predicted `I_n(-1,t) = Σ_{k=1}^{n} (-1)^{n-k} s_{n,k} t^k`, for `n ≥ 1`.
pub fn sign_enum_formula(n: usize) -> UnivarPoly {
    let n = n as i64;
    UnivarPoly::from_terms(
        Var::T,
        (1..=n).map(|k| {
            let s = s_coeff(n, k);
            (k as u32, if (n - k) % 2 == 0 { s } else { -s })
        }),
    )
}

/// `([t^{2k+1}] I_{2n+1}(-1,t), [t^{2k}] I_{2n+1}(-1,t))` as predicted:
/// `C(n,k)²` and `-C(n,k-1) C(n,k)`.
pub fn coeff_formulas(n: i64, k: i64) -> (BigInt, BigInt) {
    let b = binomial(n, k);
    let odd = &b * &b;
    let even = -(binomial(n, k - 1) * b);
    (odd, even)
}

fn t_poly(cs: &[i64]) -> UnivarPoly {
    UnivarPoly::from_dense(Var::T, cs.iter().copied())
}

/// `I_n(-1,t)` equals the `s_{n,k}` formula, `n ≥ 1`.
pub fn verify_sign_enum(oracle: &mut OracleCache, n: usize) -> Verification {
    expect_eq(
        || format!("I_{n}(-1,t) = Σ (-1)^(n-k) s_(n,k) t^k"),
        &sign_enum_formula(n),
        &oracle.signed_inv(n),
    )
}

/// `I_{2n}(-1,t) = (t-1) I_{2n-1}(-1,t)`, `n ≥ 1`.
pub fn verify_rec1(oracle: &mut OracleCache, n: usize) -> Verification {
    let rhs = &t_poly(&[-1, 1]) * &oracle.signed_inv(2 * n - 1);
    expect_eq(
        || format!("I_{}(-1,t) = (t-1) I_{}(-1,t)", 2 * n, 2 * n - 1),
        &oracle.signed_inv(2 * n),
        &rhs,
    )
}

/// `(n+1) I_{2n+1} = 2((1+t²)n - t) I_{2n-1} - (1-t²)²(n-1) I_{2n-3}`
/// at `q = -1`, `n ≥ 2`.
pub fn verify_rec2(oracle: &mut OracleCache, n: usize) -> Verification {
    let (lhs, rhs) = rec2_sides(n, |m| oracle.signed_inv(m));
    expect_eq(
        || format!("rec2 at n={n}: (n+1) I_{} vs recurrence", 2 * n + 1),
        &lhs,
        &rhs,
    )
}

fn rec2_sides(n: usize, mut signed: impl FnMut(usize) -> UnivarPoly) -> (UnivarPoly, UnivarPoly) {
    let ni = n as i64;
    let lhs = signed(2 * n + 1).scale(&BigInt::from(ni + 1));
    // 2((1+t²)n - t) = 2n - 2t + 2n t²
    let a = t_poly(&[2 * ni, -2, 2 * ni]);
    // (1-t²)²(n-1) = (n-1)(1 - 2t² + t⁴)
    let b = t_poly(&[1, 0, -2, 0, 1]).scale(&BigInt::from(ni - 1));
    let rhs = &(&a * &signed(2 * n - 1)) - &(&b * &signed(2 * n - 3));
    (lhs, rhs)
}

/// `I_{2n}(-1,1) = 0` and `I_{2n+1}(-1,1) = C_n`, `n ≥ 1`.
pub fn verify_simion_schmidt(oracle: &mut OracleCache, n: usize) -> Verification {
    let one = BigInt::one();
    expect_eq(
        || format!("I_{}(-1,1) = 0", 2 * n),
        &BigInt::zero(),
        &oracle.signed_inv(2 * n).eval(&one),
    )?;
    expect_eq(
        || format!("I_{}(-1,1) = C_{n}", 2 * n + 1),
        &catalan(n),
        &oracle.signed_inv(2 * n + 1).eval(&one),
    )
}

/// `I_n(1,t) = Σ_k N_{n,k} t^k`, `n ≥ 1`.
pub fn verify_narayana(oracle: &mut OracleCache, n: usize) -> Verification {
    let at_q1 = statpoly::inv_at_q1(oracle.tables(n));
    expect_eq(
        || format!("I_{n}(1,t) = Narayana polynomial"),
        &narayana_poly(n),
        &at_q1,
    )
}

/// Predicted `I_{2n+1}(-1,t)` assembled from [`coeff_formulas`], compared
/// coefficient by coefficient with the oracle.
pub fn verify_coeff_formulas(oracle: &mut OracleCache, n: usize) -> Verification {
    let ni = n as i64;
    let predicted = UnivarPoly::from_terms(
        Var::T,
        (0..=ni + 1).flat_map(|k| {
            let (odd, even) = coeff_formulas(ni, k);
            [((2 * k + 1) as u32, odd), ((2 * k) as u32, even)]
        }),
    );
    expect_eq(
        || format!("I_{}(-1,t) from binomial coefficient formulas", 2 * n + 1),
        &predicted,
        &oracle.signed_inv(2 * n + 1),
    )
}

fn zs(cs: &[&[i64]], precision: usize) -> ZSeries {
    Series::from_poly(
        cs.iter()
            .map(|c| RatPoly::from_ints(c.iter().copied()))
            .collect(),
        precision,
    )
}

fn half() -> RatPoly {
    RatPoly::constant(BigRational::new(1.into(), 2.into()))
}

/// `(1 + 2z + (1-t²)z² - √(1 - 2(1+t²)z² + (1-t²)²z⁴)) / (2z(1+z-tz))`
/// through `z^order`, with integral coefficients asserted.
pub fn gf_sign(order: usize) -> Result<ZSeries, Error> {
    let p = order + 2;
    let radicand = zs(&[&[1], &[], &[-2, 0, -2], &[], &[1, 0, -2, 0, 1]], p);
    let numerator = &zs(&[&[1], &[2], &[1, 0, -1]], p) - &radicand.sqrt()?;
    let quotient = numerator
        .div_z()?
        .checked_div(&zs(&[&[1], &[1, -1]], p - 1))?
        .scale(&half());
    quotient.to_integer_coeffs()?;
    Ok(quotient)
}

/// `(1 - (1-t)²z - √(1 - 2(1+t²)z + (1-t²)²z²)) / (2z(1 - (1-t)²z))`
/// through `z^order`, with integral coefficients asserted.
pub fn gf_sign_odd(order: usize) -> Result<ZSeries, Error> {
    let p = order + 2;
    let radicand = zs(&[&[1], &[-2, 0, -2], &[1, 0, -2, 0, 1]], p);
    let numerator = &zs(&[&[1], &[-1, 2, -1]], p) - &radicand.sqrt()?;
    let quotient = numerator
        .div_z()?
        .checked_div(&zs(&[&[1], &[-1, 2, -1]], p - 1))?
        .scale(&half());
    quotient.to_integer_coeffs()?;
    Ok(quotient)
}

fn series_coeffs_match(
    label: &str,
    computed: &ZSeries,
    expected: impl Fn(usize) -> UnivarPoly,
) -> Verification {
    let ints = computed
        .to_integer_coeffs()
        .map_err(|e| Mismatch::new(format!("{label}: integrality"), "integer coefficients", e))?;
    for (n, c) in ints.iter().enumerate() {
        expect_eq(|| format!("{label}: [z^{n}]"), &expected(n), c)?;
    }
    Ok(())
}

/// Closed form of `F(t; z)` against `Σ I_n(-1,t) z^n` through `z^order`.
pub fn verify_gf_sign(oracle: &mut impl SignedOracle, order: usize) -> Verification {
    let gf = gf_sign(order).map_err(|e| Mismatch::new("closed form for F(t;z)", "a series", e))?;
    let oracle_coeffs = signed_series(oracle, order);
    series_coeffs_match("closed form for F(t;z)", &gf, |n| oracle_coeffs[n].clone())
}

/// Closed form of `F_odd(t; z)` against `Σ I_{2n+1}(-1,t) z^n` through
/// `z^order`.
pub fn verify_gf_sign_odd(oracle: &mut impl SignedOracle, order: usize) -> Verification {
    let gf = gf_sign_odd(order)
        .map_err(|e| Mismatch::new("closed form for F_odd(t;z)", "a series", e))?;
    let oracle_coeffs: Vec<_> = (0..=order).map(|n| oracle.signed_inv(2 * n + 1)).collect();
    series_coeffs_match("closed form for F_odd(t;z)", &gf, |n| {
        oracle_coeffs[n].clone()
    })
}

fn expect_vanishing(label: &str, s: &ZSeries) -> Verification {
    match s.first_nonzero() {
        None => Ok(()),
        Some(n) => Err(Mismatch::new(format!("{label}: [z^{n}]"), "0", s.coeff(n))),
    }
}

/// `(1+z-tz) z F² - (1+2z+z²-t²z²) F + (1+z+tz) = 0` with `F` taken from
/// the oracle through `z^order`. Every term is known through `z^order`, and
/// the left side is checked there.
pub fn verify_functional_equation(oracle: &mut impl SignedOracle, order: usize) -> Verification {
    let p = order + 1;
    let f = ZSeries::from_univar(&signed_series(oracle, order));
    let a = zs(&[&[1], &[1, -1]], p);
    let b = zs(&[&[1], &[2], &[1, 0, -1]], p);
    let c = zs(&[&[1], &[1, 1]], p);
    let z_f2 = (&f * &f).shift_up(1).truncate(p);
    let lhs = &(&(&a * &z_f2) - &(&b * &f)) + &c;
    expect_vanishing("functional equation", &lhs)
}

/// `(1+z-tz) F(t;z) + (1-z+tz) F(t;-z) = 2` through `z^order`.
pub fn verify_reflection_identity(oracle: &mut impl SignedOracle, order: usize) -> Verification {
    let p = order + 1;
    let f = ZSeries::from_univar(&signed_series(oracle, order));
    let lhs = &(&zs(&[&[1], &[1, -1]], p) * &f) + &(&zs(&[&[1], &[-1, 1]], p) * &f.negate_z());
    expect_vanishing("reflection identity", &(&lhs - &zs(&[&[2]], p)))
}

fn signed_series(oracle: &mut impl SignedOracle, order: usize) -> Vec<UnivarPoly> {
    (0..=order).map(|n| oracle.signed_inv(n)).collect()
}

/// Source of `I_n(-1,t)` for lengths possibly beyond the enumeration cap.
pub trait SignedOracle {
    fn signed_inv(&mut self, n: usize) -> UnivarPoly;
}

impl SignedOracle for OracleCache {
    /// Enumeration only; panics above the cache cap.
    fn signed_inv(&mut self, n: usize) -> UnivarPoly {
        OracleCache::signed_inv(self, n)
    }
}

/// Enumeration up to the cache cap, transfer-matrix sums above it.
pub struct WithTransfer<'a>(pub &'a mut OracleCache);

impl SignedOracle for WithTransfer<'_> {
    fn signed_inv(&mut self, n: usize) -> UnivarPoly {
        if n <= self.0.cap() {
            self.0.signed_inv(n)
        } else {
            statpoly::signed_inv_poly_transfer(n)
        }
    }
}

/// `z(1-2(1+t²)z+(1-t²)²z²) F_odd' + (1-2(1-t+t²)z+(1-t²)²z²) F_odd - t = 0`
/// through `z^order`, with `F_odd` from `oracle` (lengths up to
/// `2·order + 1`).
pub fn verify_ode(oracle: &mut impl SignedOracle, order: usize) -> Verification {
    let p = order + 1;
    let coeffs: Vec<_> = (0..=order).map(|n| oracle.signed_inv(2 * n + 1)).collect();
    let f = ZSeries::from_univar(&coeffs);
    let a = zs(&[&[1], &[-2, 0, -2], &[1, 0, -2, 0, 1]], p);
    let b = zs(&[&[1], &[-2, 2, -2], &[1, 0, -2, 0, 1]], p);
    let z_fprime = f.derivative().shift_up(1);
    let lhs = &(&(&a * &z_fprime) + &(&b * &f)) - &zs(&[&[0, 1]], p);
    expect_vanishing("differential equation for F_odd", &lhs)
}

/// Reads the second recurrence off `[z^n]` of the differential equation.
///
/// With `A = 1 + a_1 z + a_2 z²` multiplying `z F_odd'` and
/// `B = 1 + b_1 z + b_2 z²` multiplying `F_odd`, the coefficient of `z^n`
/// (`n ≥ 1`) gives
/// `(n+1) f_n = -(a_1(n-1) + b_1) f_{n-1} - (a_2(n-2) + b_2) f_{n-2}`.
/// Returns both sides with `f_m = I_{2m+1}(-1,t)`, for `n ≥ 2`.
pub fn rec2_from_ode(oracle: &mut impl SignedOracle, n: usize) -> (UnivarPoly, UnivarPoly) {
    let ni = n as i64;
    let a1 = t_poly(&[-2, 0, -2]);
    let a2 = t_poly(&[1, 0, -2, 0, 1]);
    let b1 = t_poly(&[-2, 2, -2]);
    let b2 = a2.clone();
    let lhs = oracle.signed_inv(2 * n + 1).scale(&BigInt::from(ni + 1));
    let c1 = &a1.scale(&BigInt::from(ni - 1)) + &b1;
    let c2 = &a2.scale(&BigInt::from(ni - 2)) + &b2;
    let rhs = -&(&(&c1 * &oracle.signed_inv(2 * n - 1)) + &(&c2 * &oracle.signed_inv(2 * n - 3)));
    (lhs, rhs)
}

/// `[z^n] 1/√(1-2(1+t)z+(1-t)²z²) = [x^n] (1+(1+t)x+tx²)^n`, both sides
/// computed independently: series square root and inversion on the left,
/// a polynomial power on the right.
pub fn verify_lagrange(n: usize) -> Verification {
    let lhs = lagrange_lhs(n);
    let rhs = lagrange_rhs(n);
    expect_eq(|| format!("Lagrange identity at n={n}"), &rhs, &lhs)
}

/// `[z^n] 1/√(1-2(1+t)z+(1-t)²z²)`.
pub fn lagrange_lhs(n: usize) -> UnivarPoly {
    let p = n + 1;
    let radicand = zs(&[&[1], &[-2, -2], &[1, -2, 1]], p);
    let inv_sqrt = radicand
        .sqrt()
        .and_then(|s| s.inverse())
        .expect("radicand has constant term 1");
    inv_sqrt
        .coeff(n)
        .to_integer()
        .expect("coefficients of the inverse square root are integral")
}

/// `[x^n] (1 + (1+t)x + tx²)^n`.
pub fn lagrange_rhs(n: usize) -> UnivarPoly {
    let base = [t_poly(&[1]), t_poly(&[1, 1]), t_poly(&[0, 1])];
    let mut power: Vec<UnivarPoly> = alloc::vec![t_poly(&[1])];
    for _ in 0..n {
        let mut next = alloc::vec![UnivarPoly::zero(Var::T); (power.len() + 2).min(n + 1)];
        for (i, a) in power.iter().enumerate() {
            for (j, b) in base.iter().enumerate() {
                if i + j <= n {
                    next[i + j] = &next[i + j] + &(a * b);
                }
            }
        }
        power = next;
    }
    power
        .get(n)
        .cloned()
        .unwrap_or_else(|| UnivarPoly::zero(Var::T))
}
