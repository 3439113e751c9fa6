//! Output of `pavstat poly`.
//!
//! Text output is the canonical rendering: terms by ascending total degree,
//! ties broken by ascending `q`-degree, coefficients written before the
//! monomial (`3*q^2*t`), unit coefficients dropped, `0` for the zero
//! polynomial. JSON carries the same terms in the same order.

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use pavstat_core::statpoly::OracleCache;
use pavstat_core::{BivarPoly, UnivarPoly};
use serde_json::{json, Value};

use crate::config::Config;

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum PolyKind {
    /// M_n(q,t) = Σ q^maj t^des
    Maj,
    /// I_n(q,t) = Σ q^inv t^lrm
    Inv,
    /// I_n(-1,t)
    Signed,
    /// A_{n,k}(q) = Σ q^maj over des = k
    Ank,
}

impl PolyKind {
    pub fn name(self) -> &'static str {
        match self {
            PolyKind::Maj => "maj",
            PolyKind::Inv => "inv",
            PolyKind::Signed => "signed",
            PolyKind::Ank => "ank",
        }
    }
}

pub enum Computed {
    Bivariate(BivarPoly),
    Univariate(UnivarPoly),
}

impl Computed {
    pub fn render(&self) -> String {
        match self {
            Computed::Bivariate(p) => p.to_string(),
            Computed::Univariate(p) => p.to_string(),
        }
    }

    /// `[{"q": a, "t": b, "coeff": c}, …]` in canonical order; a univariate
    /// polynomial carries only its own variable.
    pub fn terms_json(&self) -> Vec<Value> {
        match self {
            Computed::Bivariate(p) => p
                .canonical_terms()
                .into_iter()
                .map(|((a, b), c)| json!({ "q": a, "t": b, "coeff": big_json(c) }))
                .collect(),
            Computed::Univariate(p) => p
                .terms()
                .map(|(e, c)| {
                    let mut v = json!({ "coeff": big_json(c) });
                    v[p.var().name()] = json!(e);
                    v
                })
                .collect(),
        }
    }
}

/// A JSON number when it fits in 64 bits, a decimal string otherwise.
pub fn big_json(c: &BigInt) -> Value {
    match c.to_i64() {
        Some(v) => json!(v),
        None => json!(c.to_string()),
    }
}

pub fn compute(
    config: &Config,
    kind: PolyKind,
    n: usize,
    k: Option<usize>,
) -> anyhow::Result<Computed> {
    config.admit(n)?;
    match (kind, k) {
        (PolyKind::Ank, None) => anyhow::bail!("ank needs a descent count k"),
        (PolyKind::Ank, Some(k)) if n > 0 && k >= n => {
            anyhow::bail!(
                "A_{{{n},{k}}} is empty: a permutation of length {n} has at most {} descents",
                n - 1
            )
        }
        (PolyKind::Ank, Some(k)) if n == 0 && k > 0 => {
            anyhow::bail!("the empty permutation has no descents")
        }
        (_, Some(_)) if kind != PolyKind::Ank => anyhow::bail!("k only applies to ank"),
        _ => {}
    }
    let mut oracle = OracleCache::new(config.cap);
    Ok(match kind {
        PolyKind::Maj => Computed::Bivariate(oracle.maj(n)),
        PolyKind::Inv => Computed::Bivariate(oracle.inv(n)),
        PolyKind::Signed => Computed::Univariate(oracle.signed_inv(n)),
        PolyKind::Ank => Computed::Univariate(oracle.a_poly(n, k.unwrap_or(0) as u32)),
    })
}

pub fn to_json(kind: PolyKind, n: usize, k: Option<usize>, p: &Computed) -> Value {
    json!({
        "kind": kind.name(),
        "n": n,
        "k": k,
        "polynomial": p.render(),
        "terms": p.terms_json(),
    })
}
