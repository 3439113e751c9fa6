//! Continued fractions `b_0 + a_1/(b_1 ± a_2/(b_2 ± …))` whose partial
//! numerators and denominators are polynomials in `z`.
//!
//! A [`CFSpec`] is a finite prefix of a conceptually infinite fraction.
//! [`CFSpec::expand`] turns it into a truncated power series, refusing
//! prefixes too shallow to determine the requested order;
//! [`CFSpec::evaluate`] expands the finite fraction as written.

use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;

use crate::poly::BivarPoly;
use crate::series::{Coefficient, Series};
use crate::Error;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Sign {
    Plus,
    Minus,
}

/// One level `± a_i / b_i`; both parts are dense polynomials in `z`.
#[derive(Debug, Clone, PartialEq)]
pub struct CfTerm<C> {
    pub sign: Sign,
    pub numerator: Vec<C>,
    pub denominator: Vec<C>,
}

impl<C: Coefficient> CfTerm<C> {
    /// `sign · numerator / 1`
    pub fn unit(sign: Sign, numerator: Vec<C>) -> Self {
        CfTerm {
            sign,
            numerator,
            denominator: alloc::vec![C::one()],
        }
    }

    /// The numerator with the sign folded in.
    pub fn signed_numerator(&self) -> Vec<C> {
        match self.sign {
            Sign::Plus => self.numerator.clone(),
            Sign::Minus => self.numerator.iter().map(Coefficient::neg).collect(),
        }
    }

    fn has_unit_denominator(&self) -> bool {
        let d = trim(self.denominator.clone());
        d.len() == 1 && d[0] == C::one()
    }
}

/// `head + s_1 a_1/(b_1 + s_2 a_2/(b_2 + …))` with signs `s_i = ±1`.
#[derive(Debug, Clone, PartialEq)]
pub struct CFSpec<C> {
    pub head: Vec<C>,
    pub terms: Vec<CfTerm<C>>,
}

fn trim<C: Coefficient>(mut p: Vec<C>) -> Vec<C> {
    while p.last().is_some_and(Coefficient::is_zero) {
        p.pop();
    }
    p
}

fn poly_add<C: Coefficient>(a: &[C], b: &[C]) -> Vec<C> {
    let n = a.len().max(b.len());
    let zero = C::zero();
    trim(
        (0..n)
            .map(|i| a.get(i).unwrap_or(&zero).add(b.get(i).unwrap_or(&zero)))
            .collect(),
    )
}

fn poly_mul<C: Coefficient>(a: &[C], b: &[C]) -> Vec<C> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = alloc::vec![C::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] = out[i + j].add(&x.mul(y));
        }
    }
    trim(out)
}

fn as_series<C: Coefficient>(p: &[C], precision: usize) -> Series<C> {
    Series::from_poly(p.to_vec(), precision)
}

impl<C: Coefficient> CFSpec<C> {
    /// `a_1/1 - a_2/1 - a_3/1 - …` with the given numerators.
    pub fn all_minus(numerators: Vec<Vec<C>>) -> Self {
        let terms = numerators
            .into_iter()
            .enumerate()
            .map(|(i, a)| CfTerm::unit(if i == 0 { Sign::Plus } else { Sign::Minus }, a))
            .collect();
        CFSpec {
            head: Vec::new(),
            terms,
        }
    }

    /// Number of levels `a_i / b_i`.
    pub fn depth(&self) -> usize {
        self.terms.len()
    }

    /// The first `depth` levels.
    pub fn truncated(&self, depth: usize) -> Self {
        CFSpec {
            head: self.head.clone(),
            terms: self.terms.iter().take(depth).cloned().collect(),
        }
    }

    /// Applies `f` to every coefficient, e.g. to specialise `q` and `t`.
    pub fn map<D: Coefficient>(&self, mut f: impl FnMut(&C) -> D) -> CFSpec<D> {
        let mut conv = |p: &Vec<C>| trim(p.iter().map(&mut f).collect());
        CFSpec {
            head: conv(&self.head),
            terms: self
                .terms
                .iter()
                .map(|t| CfTerm {
                    sign: t.sign,
                    numerator: conv(&t.numerator),
                    denominator: conv(&t.denominator),
                })
                .collect(),
        }
    }

    /// Same value, every level written with a `+`.
    pub fn normalized(&self) -> Self {
        CFSpec {
            head: self.head.clone(),
            terms: self
                .terms
                .iter()
                .map(|t| CfTerm {
                    sign: Sign::Plus,
                    numerator: trim(t.signed_numerator()),
                    denominator: t.denominator.clone(),
                })
                .collect(),
        }
    }

    /// Expands the finite fraction as written, bottom-up, to `precision`
    /// coefficients.
    pub fn evaluate(&self, precision: usize) -> Result<Series<C>, Error> {
        let head = as_series(&self.head, precision);
        let Some(last) = self.terms.last() else {
            return Ok(head);
        };
        let mut tail = as_series(&last.denominator, precision);
        for j in (1..self.terms.len()).rev() {
            let num = as_series(&self.terms[j].signed_numerator(), precision);
            let den = as_series(&self.terms[j - 1].denominator, precision);
            tail = &den + &num.checked_div(&tail)?;
        }
        let first = as_series(&self.terms[0].signed_numerator(), precision);
        Ok(&head + &first.checked_div(&tail)?)
    }

    /// Expansion through `z^order` of the infinite fraction this prefix
    /// begins, assuming every numerator past the first carries a factor `z`.
    ///
    /// Uses `order + 2` levels; when a deeper level is available the
    /// `order + 3` truncation must agree through `z^order`.
    pub fn expand(&self, order: usize) -> Result<Series<C>, Error> {
        let needed = order + 2;
        if self.depth() < needed {
            return Err(Error::InsufficientDepth {
                needed,
                available: self.depth(),
            });
        }
        let value = self.truncated(needed).evaluate(order + 1)?;
        if self.depth() > needed {
            let deeper = self.truncated(needed + 1).evaluate(order + 1)?;
            if deeper != value {
                return Err(Error::DepthUnstable { order });
            }
        }
        Ok(value)
    }

    fn unit_numerators(&self) -> Result<Vec<Vec<C>>, Error> {
        let norm = self.normalized();
        norm.terms
            .iter()
            .enumerate()
            .map(|(i, t)| {
                if t.has_unit_denominator() {
                    Ok(t.numerator.clone())
                } else {
                    Err(Error::NonUnitDenominator(i + 1))
                }
            })
            .collect()
    }

    /// Even contraction
    /// `a_1/(1+a_2) - a_2a_3/(1+a_3+a_4) - a_4a_5/(1+a_5+a_6) - …`
    /// of `a_1/1 + a_2/1 + …` (after normalising signs). Its `m`-th
    /// truncation equals the `2m`-th truncation of the input, so the
    /// contraction of a depth-`d` prefix has value equal to the prefix.
    pub fn even_part(&self) -> Result<Self, Error> {
        let a = self.unit_numerators()?;
        let d = a.len();
        let zero: Vec<C> = Vec::new();
        let at = |i: usize| if i >= 1 && i <= d { &a[i - 1] } else { &zero };
        let one = alloc::vec![C::one()];
        let mut terms = Vec::new();
        if d >= 1 {
            terms.push(CfTerm {
                sign: Sign::Plus,
                numerator: a[0].clone(),
                denominator: poly_add(&one, at(2)),
            });
        }
        let mut j = 2;
        while 2 * j - 1 <= d {
            terms.push(CfTerm {
                sign: Sign::Minus,
                numerator: poly_mul(at(2 * j - 2), at(2 * j - 1)),
                denominator: poly_add(&poly_add(&one, at(2 * j - 1)), at(2 * j)),
            });
            j += 1;
        }
        Ok(CFSpec {
            head: self.head.clone(),
            terms,
        })
    }

    /// Odd contraction
    /// `a_1 - a_1a_2/(1+a_2+a_3) - a_3a_4/(1+a_4+a_5) - …`
    /// of `a_1/1 + a_2/1 + …`; its `m`-th truncation equals the
    /// `(2m+1)`-th truncation of the input.
    pub fn odd_part(&self) -> Result<Self, Error> {
        let a = self.unit_numerators()?;
        let d = a.len();
        if d == 0 {
            return Ok(self.clone());
        }
        let zero: Vec<C> = Vec::new();
        let at = |i: usize| if i >= 1 && i <= d { &a[i - 1] } else { &zero };
        let one = alloc::vec![C::one()];
        let mut terms = Vec::new();
        let mut j = 1;
        while 2 * j <= d {
            terms.push(CfTerm {
                sign: Sign::Minus,
                numerator: poly_mul(at(2 * j - 1), at(2 * j)),
                denominator: poly_add(&poly_add(&one, at(2 * j)), at(2 * j + 1)),
            });
            j += 1;
        }
        Ok(CFSpec {
            head: poly_add(&self.head, &a[0]),
            terms,
        })
    }
}

/// Numerator of level `i ≥ 2` of the inversion-polynomial fraction:
/// `t z, q z, t q z, q² z, t q² z, …`.
fn inversion_numerator(i: usize) -> BivarPoly {
    debug_assert!(i >= 2);
    if i.is_multiple_of(2) {
        BivarPoly::monomial(1, ((i - 2) / 2) as u32, 1)
    } else {
        BivarPoly::monomial(1, ((i - 1) / 2) as u32, 0)
    }
}

/// `1/1 - tz/1 - qz/1 - tqz/1 - q²z/1 - tq²z/1 - …` to `depth ≥ 1` levels.
/// Its expansion is `Σ_n I_n(q,t) z^n`.
pub fn inversion_cf(depth: usize) -> CFSpec<BivarPoly> {
    let numerators = (1..=depth)
        .map(|i| {
            if i == 1 {
                alloc::vec![BivarPoly::one()]
            } else {
                alloc::vec![BivarPoly::zero(), inversion_numerator(i)]
            }
        })
        .collect();
    CFSpec::all_minus(numerators)
}

/// `1/1 - z/1 - z/1 - …`, whose expansion is the Catalan generating function.
pub fn catalan_cf(depth: usize) -> CFSpec<BivarPoly> {
    let numerators = (1..=depth)
        .map(|i| {
            if i == 1 {
                alloc::vec![BivarPoly::one()]
            } else {
                alloc::vec![BivarPoly::zero(), BivarPoly::one()]
            }
        })
        .collect();
    CFSpec::all_minus(numerators)
}

/// Substitutes numeric `q` and/or `t` into every coefficient.
pub fn specialize(cf: &CFSpec<BivarPoly>, q: Option<i64>, t: Option<i64>) -> CFSpec<BivarPoly> {
    let q = q.map(BigInt::from);
    let t = t.map(BigInt::from);
    cf.map(|c| c.specialize(q.as_ref(), t.as_ref()))
}

fn fmt_zpoly<C: Coefficient>(f: &mut fmt::Formatter<'_>, p: &[C]) -> fmt::Result {
    let mut first = true;
    f.write_str("(")?;
    for (k, c) in p.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        if !first {
            f.write_str(" + ")?;
        }
        first = false;
        match k {
            0 => write!(f, "{c}")?,
            1 => write!(f, "({c})*z")?,
            _ => write!(f, "({c})*z^{k}")?,
        }
    }
    if first {
        f.write_str("0")?;
    }
    f.write_str(")")
}

/// Flat notation `head + a1|/|b1 - a2|/|b2 - …`.
impl<C: Coefficient> fmt::Display for CFSpec<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_zpoly(f, &self.head)?;
        for t in &self.terms {
            f.write_str(match t.sign {
                Sign::Plus => " + ",
                Sign::Minus => " - ",
            })?;
            fmt_zpoly(f, &t.numerator)?;
            f.write_str("|/|")?;
            fmt_zpoly(f, &t.denominator)?;
        }
        Ok(())
    }
}
