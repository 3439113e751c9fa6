//! Truncated power series in `z`.
//!
//! A [`Series`] holds the coefficients of `z^0 … z^{p-1}` exactly, where `p`
//! is its precision; everything from `z^p` on is unknown. Binary operations
//! return the smaller of the two precisions, so no result ever claims more
//! than its inputs determine.

use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::poly::{BivarPoly, UnivarPoly};
use crate::{Error, RatPoly};

/// Coefficient ring of a [`Series`].
pub trait Coefficient: Clone + PartialEq + fmt::Debug + fmt::Display {
    fn zero() -> Self;
    fn one() -> Self;
    fn from_int(n: i64) -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, rhs: &Self) -> Self;
    fn sub(&self, rhs: &Self) -> Self;
    fn mul(&self, rhs: &Self) -> Self;
    fn neg(&self) -> Self;
    /// The multiplicative inverse, if `self` is a unit of the ring.
    fn unit_inverse(&self) -> Option<Self>;
}

impl Coefficient for RatPoly {
    fn zero() -> Self {
        RatPoly::zero()
    }
    fn one() -> Self {
        RatPoly::one()
    }
    fn from_int(n: i64) -> Self {
        RatPoly::from_int(n)
    }
    fn is_zero(&self) -> bool {
        RatPoly::is_zero(self)
    }
    fn add(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn sub(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn neg(&self) -> Self {
        -self
    }
    /// Units of `Q[t]` are the nonzero constants.
    fn unit_inverse(&self) -> Option<Self> {
        let c = self.as_constant()?;
        if c.is_zero() {
            return None;
        }
        Some(RatPoly::constant(c.recip()))
    }
}

impl Coefficient for BivarPoly {
    fn zero() -> Self {
        BivarPoly::zero()
    }
    fn one() -> Self {
        BivarPoly::one()
    }
    fn from_int(n: i64) -> Self {
        BivarPoly::constant(n)
    }
    fn is_zero(&self) -> bool {
        BivarPoly::is_zero(self)
    }
    fn add(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn sub(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn neg(&self) -> Self {
        -self
    }
    /// Units of `Z[q,t]` are `±1`.
    fn unit_inverse(&self) -> Option<Self> {
        if self.num_terms() != 1 {
            return None;
        }
        let c = self.constant_term();
        if c.is_one() || c == -BigInt::one() {
            Some(self.clone())
        } else {
            None
        }
    }
}

/// Truncated power series `c_0 + c_1 z + … + c_{p-1} z^{p-1} + O(z^p)`.
#[derive(Clone, PartialEq)]
pub struct Series<C> {
    coeffs: Vec<C>,
}

/// Series whose coefficients are rational polynomials in `t`.
pub type ZSeries = Series<RatPoly>;

/// Series whose coefficients are integer polynomials in `(q, t)`.
pub type QtSeries = Series<BivarPoly>;

impl<C: Coefficient> Series<C> {
    /// A series known exactly through `z^{coeffs.len()-1}`.
    pub fn new(coeffs: Vec<C>) -> Self {
        Series { coeffs }
    }

    /// A polynomial in `z` viewed as a series of the given precision;
    /// coefficients beyond it are dropped, missing ones are zero.
    pub fn from_poly(mut coeffs: Vec<C>, precision: usize) -> Self {
        coeffs.resize(precision, C::zero());
        Series { coeffs }
    }

    pub fn zero(precision: usize) -> Self {
        Series::from_poly(Vec::new(), precision)
    }

    pub fn one(precision: usize) -> Self {
        Series::constant(C::one(), precision)
    }

    pub fn constant(c: C, precision: usize) -> Self {
        Series::from_poly(alloc::vec![c], precision)
    }

    /// `c z^k + O(z^precision)`
    pub fn monomial(c: C, k: usize, precision: usize) -> Self {
        let mut coeffs = alloc::vec![C::zero(); k];
        coeffs.push(c);
        Series::from_poly(coeffs, precision)
    }

    /// Number of known coefficients.
    pub fn precision(&self) -> usize {
        self.coeffs.len()
    }

    /// Truncation order `N`: coefficients of `z^0..=z^N` are known. `None`
    /// when nothing is known.
    pub fn order(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[C] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<C> {
        self.coeffs
    }

    /// Coefficient of `z^n`.
    ///
    /// # Panics
    /// If `n` is at or beyond the precision.
    pub fn coeff(&self, n: usize) -> &C {
        assert!(
            n < self.coeffs.len(),
            "coefficient z^{n} requested from a series known to O(z^{})",
            self.coeffs.len()
        );
        &self.coeffs[n]
    }

    pub fn truncate(&self, precision: usize) -> Self {
        Series {
            coeffs: self.coeffs.iter().take(precision).cloned().collect(),
        }
    }

    pub fn map<D, F: FnMut(&C) -> D>(&self, f: F) -> Series<D> {
        Series {
            coeffs: self.coeffs.iter().map(f).collect(),
        }
    }

    pub fn scale(&self, c: &C) -> Self {
        self.map(|x| x.mul(c))
    }

    /// `z^k · self`; the precision grows by `k`.
    pub fn shift_up(&self, k: usize) -> Self {
        let mut coeffs = alloc::vec![C::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        Series { coeffs }
    }

    /// `self / z`; the constant coefficient must vanish.
    pub fn div_z(&self) -> Result<Self, Error> {
        match self.coeffs.first() {
            None => Ok(self.clone()),
            Some(c0) if c0.is_zero() => Ok(Series {
                coeffs: self.coeffs[1..].to_vec(),
            }),
            Some(_) => Err(Error::PoleDoesNotCancel),
        }
    }

    /// Multiplicative inverse; the constant term must be a unit.
    pub fn inverse(&self) -> Result<Self, Error> {
        self.checked_div_inner(&Series::one(self.precision()))
    }

    /// `self / divisor` to the smaller precision; the divisor's constant
    /// term must be a unit of the coefficient ring.
    pub fn checked_div(&self, divisor: &Self) -> Result<Self, Error> {
        divisor.checked_div_inner(self)
    }

    fn checked_div_inner(&self, numerator: &Self) -> Result<Self, Error> {
        let p = self.precision().min(numerator.precision());
        if p == 0 {
            return Ok(Series::zero(0));
        }
        let inv0 = self.coeffs[0]
            .unit_inverse()
            .ok_or(Error::NonUnitConstant)?;
        let mut out: Vec<C> = Vec::with_capacity(p);
        for n in 0..p {
            let mut acc = numerator.coeffs[n].clone();
            for i in 1..=n {
                if !self.coeffs[i].is_zero() {
                    acc = acc.sub(&self.coeffs[i].mul(&out[n - i]));
                }
            }
            out.push(acc.mul(&inv0));
        }
        Ok(Series { coeffs: out })
    }

    /// Formal derivative in `z`; the precision drops by one.
    pub fn derivative(&self) -> Self {
        Series {
            coeffs: self
                .coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(n, c)| c.mul(&C::from_int(n as i64)))
                .collect(),
        }
    }

    /// `z → -z`.
    pub fn negate_z(&self) -> Self {
        Series {
            coeffs: self
                .coeffs
                .iter()
                .enumerate()
                .map(|(n, c)| if n % 2 == 1 { c.neg() } else { c.clone() })
                .collect(),
        }
    }

    /// `Σ c_{2n+1} z^n`, i.e. `(f(√z) - f(-√z)) / 2√z`.
    pub fn odd_part(&self) -> Self {
        Series {
            coeffs: self.coeffs.iter().skip(1).step_by(2).cloned().collect(),
        }
    }

    /// `Σ c_{2n} z^n`, i.e. `(f(√z) + f(-√z)) / 2`.
    pub fn even_part(&self) -> Self {
        Series {
            coeffs: self.coeffs.iter().step_by(2).cloned().collect(),
        }
    }

    /// `z → z^k` for `k ≥ 1`. Precision `p` becomes `kp`: the positions
    /// between the last multiple of `k` and `kp` are known zeros.
    pub fn dilate(&self, k: usize) -> Self {
        assert!(k >= 1, "dilation factor must be positive");
        let p = self.precision();
        if p == 0 {
            return self.clone();
        }
        let mut coeffs = alloc::vec![C::zero(); k * p];
        for (n, c) in self.coeffs.iter().enumerate() {
            coeffs[k * n] = c.clone();
        }
        Series { coeffs }
    }

    /// True iff every known coefficient is zero.
    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Coefficient::is_zero)
    }

    /// Index of the first nonzero coefficient, if any.
    pub fn first_nonzero(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }
}

impl ZSeries {
    /// Square root with constant term 1, by the coefficient recursion
    /// `s_n = (a_n - Σ_{0<i<n} s_i s_{n-i}) / 2`.
    pub fn sqrt(&self) -> Result<Self, Error> {
        let p = self.precision();
        if p == 0 {
            return Ok(self.clone());
        }
        if !self.coeffs[0].is_one() {
            return Err(Error::SqrtConstantTerm);
        }
        let half = RatPoly::constant(BigRational::new(1.into(), 2.into()));
        let mut out: Vec<RatPoly> = Vec::with_capacity(p);
        out.push(RatPoly::one());
        for n in 1..p {
            let mut acc = self.coeffs[n].clone();
            for i in 1..n {
                acc = &acc - &(&out[i] * &out[n - i]);
            }
            out.push(&acc * &half);
        }
        Ok(Series { coeffs: out })
    }

    /// The coefficients as integer polynomials in `t`; fails at the first
    /// coefficient with a non-integral rational.
    pub fn to_integer_coeffs(&self) -> Result<Vec<UnivarPoly>, Error> {
        self.coeffs
            .iter()
            .enumerate()
            .map(|(index, c)| c.to_integer().ok_or(Error::NotIntegral { index }))
            .collect()
    }

    /// Series from integer polynomials in `t`.
    pub fn from_univar(coeffs: &[UnivarPoly]) -> Self {
        Series::new(coeffs.iter().map(RatPoly::from_univar).collect())
    }
}

impl<'a, C: Coefficient> Add<&'a Series<C>> for &'a Series<C> {
    type Output = Series<C>;

    fn add(self, rhs: &Series<C>) -> Series<C> {
        Series {
            coeffs: self
                .coeffs
                .iter()
                .zip(&rhs.coeffs)
                .map(|(a, b)| a.add(b))
                .collect(),
        }
    }
}

impl<'a, C: Coefficient> Sub<&'a Series<C>> for &'a Series<C> {
    type Output = Series<C>;

    fn sub(self, rhs: &Series<C>) -> Series<C> {
        Series {
            coeffs: self
                .coeffs
                .iter()
                .zip(&rhs.coeffs)
                .map(|(a, b)| a.sub(b))
                .collect(),
        }
    }
}

impl<'a, C: Coefficient> Mul<&'a Series<C>> for &'a Series<C> {
    type Output = Series<C>;

    fn mul(self, rhs: &Series<C>) -> Series<C> {
        let p = self.precision().min(rhs.precision());
        let mut coeffs = alloc::vec![C::zero(); p];
        for (i, a) in self.coeffs.iter().take(p).enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().take(p - i).enumerate() {
                if !b.is_zero() {
                    coeffs[i + j] = coeffs[i + j].add(&a.mul(b));
                }
            }
        }
        Series { coeffs }
    }
}

impl<C: Coefficient> Neg for &Series<C> {
    type Output = Series<C>;

    fn neg(self) -> Series<C> {
        self.map(Coefficient::neg)
    }
}

impl<C: Coefficient> Add for Series<C> {
    type Output = Series<C>;
    fn add(self, rhs: Series<C>) -> Series<C> {
        &self + &rhs
    }
}

impl<C: Coefficient> Sub for Series<C> {
    type Output = Series<C>;
    fn sub(self, rhs: Series<C>) -> Series<C> {
        &self - &rhs
    }
}

impl<C: Coefficient> Mul for Series<C> {
    type Output = Series<C>;
    fn mul(self, rhs: Series<C>) -> Series<C> {
        &self * &rhs
    }
}

impl<C: Coefficient> fmt::Display for Series<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut wrote = false;
        for (n, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if wrote {
                f.write_str(" + ")?;
            }
            wrote = true;
            match n {
                0 => write!(f, "({c})")?,
                1 => write!(f, "({c})*z")?,
                _ => write!(f, "({c})*z^{n}")?,
            }
        }
        if wrote {
            f.write_str(" + ")?;
        }
        write!(f, "O(z^{})", self.coeffs.len())
    }
}

impl<C: Coefficient> fmt::Debug for Series<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Series({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn zs(cs: &[&[i64]], precision: usize) -> ZSeries {
        Series::from_poly(
            cs.iter()
                .map(|c| RatPoly::from_ints(c.iter().copied()))
                .collect(),
            precision,
        )
    }

    fn ints(cs: &[i64], precision: usize) -> ZSeries {
        Series::from_poly(
            cs.iter().map(|&c| RatPoly::from_int(c)).collect(),
            precision,
        )
    }

    #[test]
    fn product_and_geometric_series() {
        let prod = &ints(&[1, 1], 6) * &ints(&[1, -1], 6);
        assert_eq!(prod, ints(&[1, 0, -1], 6));
        let geo = ints(&[1, -1], 8).inverse().unwrap();
        assert_eq!(geo, ints(&[1; 8], 8));
    }

    #[test]
    fn precision_is_the_minimum() {
        let a = ints(&[1, 2, 3], 3);
        let b = ints(&[1], 7);
        assert_eq!((&a * &b).precision(), 3);
        assert_eq!((&a + &b).precision(), 3);
        assert_eq!(a.derivative().precision(), 2);
        assert_eq!(a.checked_div(&b).unwrap().precision(), 3);
    }

    #[test]
    fn division_needs_a_unit() {
        let a = ints(&[1, 1], 4);
        assert_eq!(
            a.checked_div(&ints(&[0, 1], 4)),
            Err(Error::NonUnitConstant)
        );
        // t is not a unit of Q[t]
        assert_eq!(
            a.checked_div(&zs(&[&[0, 1]], 4)),
            Err(Error::NonUnitConstant)
        );
        // 2 is a unit over Q
        assert_eq!(
            ints(&[2, 4], 3).checked_div(&ints(&[2], 3)).unwrap(),
            ints(&[1, 2], 3)
        );
    }

    #[test]
    fn square_roots() {
        assert_eq!(ints(&[1], 5).sqrt().unwrap(), ints(&[1], 5));
        assert_eq!(ints(&[1, -2, 1], 9).sqrt().unwrap(), ints(&[1, -1], 9));
        assert_eq!(ints(&[2, 1], 3).sqrt(), Err(Error::SqrtConstantTerm));
        // √(1 - 4z) = 1 - 2z - 2z² - 4z³ - 10z⁴ (Catalan: -2 C_{n-1})
        assert_eq!(
            ints(&[1, -4], 5).sqrt().unwrap(),
            ints(&[1, -2, -2, -4, -10], 5)
        );
    }

    #[test]
    fn parts_and_reflection() {
        let s = ints(&[0, 1, 0, 1], 4);
        assert_eq!(s.odd_part(), ints(&[1, 1], 2));
        let f = ints(&[3, 1, 4, 1, 5, 9, 2], 7);
        assert_eq!(f.even_part(), ints(&[3, 4, 5, 2], 4));
        assert_eq!(f.odd_part(), ints(&[1, 1, 9], 3));
        let rebuilt = &f.even_part().dilate(2) + &f.odd_part().dilate(2).shift_up(1);
        assert_eq!(rebuilt.truncate(7), f);
        assert_eq!(f.negate_z(), ints(&[3, -1, 4, -1, 5, -9, 2], 7));
    }

    #[test]
    fn pole_cancellation() {
        assert_eq!(ints(&[0, 2, 3], 3).div_z().unwrap(), ints(&[2, 3], 2));
        assert_eq!(ints(&[1, 2], 3).div_z(), Err(Error::PoleDoesNotCancel));
    }

    #[test]
    fn integer_coefficient_series_division() {
        let one = QtSeries::one(5);
        let q = BivarPoly::q();
        let denom = Series::from_poly(vec_bivar(&[BivarPoly::one(), -&q]), 5);
        let geo = one.checked_div(&denom).unwrap();
        for n in 0..5 {
            assert_eq!(geo.coeff(n), &BivarPoly::monomial(1, n as u32, 0));
        }
        let bad = Series::from_poly(vec_bivar(&[BivarPoly::constant(2)]), 5);
        assert_eq!(one.checked_div(&bad), Err(Error::NonUnitConstant));
    }

    fn vec_bivar(v: &[BivarPoly]) -> Vec<BivarPoly> {
        v.to_vec()
    }

    fn arb_ratpoly() -> impl Strategy<Value = RatPoly> {
        proptest::collection::vec((-4i64..=4, 1i64..=3), 0..4).prop_map(|cs| {
            RatPoly::from_coeffs(
                cs.into_iter()
                    .map(|(a, b)| BigRational::new(a.into(), b.into()))
                    .collect(),
            )
        })
    }

    fn arb_series(precision: usize) -> impl Strategy<Value = ZSeries> {
        proptest::collection::vec(arb_ratpoly(), precision).prop_map(Series::new)
    }

    fn arb_unit_series(precision: usize) -> impl Strategy<Value = ZSeries> {
        arb_series(precision).prop_map(|mut s| {
            s.coeffs[0] = RatPoly::one();
            s
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(48))]

        #[test]
        fn sqrt_squares_back(a in arb_unit_series(7)) {
            let s = a.sqrt().unwrap();
            prop_assert_eq!(&s * &s, a);
        }

        #[test]
        fn leibniz_rule(a in arb_series(7), b in arb_series(7)) {
            let lhs = (&a * &b).derivative();
            let rhs = &(&a.derivative() * &b.truncate(6)) + &(&a.truncate(6) * &b.derivative());
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn division_round_trips(a in arb_series(7), b in arb_unit_series(7)) {
            let q = a.checked_div(&b).unwrap();
            prop_assert_eq!(&q * &b, a);
        }
    }
}
