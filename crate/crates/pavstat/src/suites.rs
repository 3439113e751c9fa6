//! The verification suites behind `pavstat verify`.
//!
//! Each suite walks its parameters in increasing `(n, k)` order and records
//! one [`CheckResult`] per instance, so reports are stable across runs.

use std::time::Instant;

use num_bigint::BigInt;
use pavstat_core::bijections::{
    is_mersenne, is_one_then_even, orbit_partition, r180_fixed_points, symmetric_dyck_by_peaks,
};
use pavstat_core::cfrac::{self, CFSpec, CfTerm, Sign};
use pavstat_core::check::expect_eq;
use pavstat_core::closed_forms::{self, catalan, catalan_numbers, s_coeff, WithTransfer};
use pavstat_core::statpoly::{self, OracleCache};
use pavstat_core::{avoiders, BivarPoly, Mismatch, UnivarPoly, Var, Verification};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::config::Config;
use crate::report::{CheckResult, Note, Report};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, clap::ValueEnum)]
pub enum Suite {
    /// Catalan counts of the avoiders
    Count,
    /// A_{n,k}(q) palindromic, rotation orbits and fixed points
    Symmetry,
    /// A_{n,k}(q) unimodal, with the log-concavity exceptions listed
    Unimodality,
    /// Mod-2 behaviour at n = 2^m - 1
    Parity,
    /// Signed enumeration at q = -1 and its recurrences
    Signed,
    /// Continued fraction expansion and contractions
    Cf,
    /// Generating functions, functional equation, ODE, Lagrange identity
    Gf,
    /// Symmetric Dyck paths by peaks
    Dyck,
    /// Every suite above, in order
    All,
}

impl Suite {
    pub const EACH: [Suite; 8] = [
        Suite::Count,
        Suite::Symmetry,
        Suite::Unimodality,
        Suite::Parity,
        Suite::Signed,
        Suite::Cf,
        Suite::Gf,
        Suite::Dyck,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Count => "count",
            Suite::Symmetry => "symmetry",
            Suite::Unimodality => "unimodality",
            Suite::Parity => "parity",
            Suite::Signed => "signed",
            Suite::Cf => "cf",
            Suite::Gf => "gf",
            Suite::Dyck => "dyck",
            Suite::All => "all",
        }
    }

    /// Largest `n` (or series order) reached when no `--max-n` is given,
    /// before clamping to the cap.
    pub fn default_limit(self, config: &Config) -> usize {
        match self {
            Suite::Count => 12,
            Suite::Symmetry => 8,
            Suite::Unimodality => 10,
            Suite::Parity => config.cap,
            Suite::Signed => 11,
            Suite::Cf => 8,
            Suite::Gf => 12,
            Suite::Dyck => 12,
            Suite::All => config.cap,
        }
    }
}

type Specialisation = fn(&statpoly::StatTables) -> UnivarPoly;

/// Seed for the random continued fractions of the `cf` suite.
pub const CF_SEED: u64 = 0x0321_0321;
pub const RANDOM_CFS: usize = 20;
pub const RANDOM_CF_ORDER: usize = 10;

pub struct Runner {
    config: Config,
    oracle: OracleCache,
    report: Report,
}

impl Runner {
    pub fn new(config: Config) -> Self {
        Runner {
            oracle: OracleCache::new(config.cap),
            config,
            report: Report::default(),
        }
    }

    pub fn run(&mut self, suite: Suite) {
        if suite == Suite::All {
            for s in Suite::EACH {
                self.run(s);
            }
            return;
        }
        let limit = self.config.limit(suite.default_limit(&self.config));
        match suite {
            Suite::Count => self.count(limit),
            Suite::Symmetry => self.symmetry(limit),
            Suite::Unimodality => self.unimodality(limit),
            Suite::Parity => self.parity(limit),
            Suite::Signed => self.signed(limit),
            Suite::Cf => self.cf(limit),
            Suite::Gf => self.gf(limit),
            Suite::Dyck => self.dyck(limit),
            Suite::All => unreachable!(),
        }
    }

    pub fn finish(self) -> Report {
        self.report
    }

    fn check(
        &mut self,
        suite: Suite,
        label: impl Into<String>,
        params: impl Into<String>,
        f: impl FnOnce(&mut OracleCache) -> Verification,
    ) {
        let start = Instant::now();
        let outcome = f(&mut self.oracle);
        self.report.checks.push(CheckResult {
            suite,
            label: label.into(),
            params: params.into(),
            outcome,
            elapsed: start.elapsed(),
        });
    }

    fn note(&mut self, suite: Suite, text: String) {
        self.report.notes.push(Note { suite, text });
    }

    fn count(&mut self, limit: usize) {
        let recurrence = catalan_numbers(limit);
        for n in 0..=limit {
            let expected = recurrence[n].clone();
            self.check(Suite::Count, "#Av_n(321) = C_n", format!("n={n}"), |_| {
                expect_eq(
                    || format!("C_{n} by recurrence vs binomial"),
                    &expected,
                    &catalan(n),
                )?;
                let counted = BigInt::from(avoiders::Avoiders321::new(n).count());
                expect_eq(
                    || format!("#Av_{n}(321) by enumeration"),
                    &expected,
                    &counted,
                )
            });
        }
    }

    fn symmetry(&mut self, limit: usize) {
        for n in 1..=limit {
            for k in 0..n {
                self.check(
                    Suite::Symmetry,
                    "A_{n,k}(q) symmetric",
                    format!("n={n} k={k}"),
                    |o| {
                        let a = o.a_poly(n, k as u32);
                        let mirrored = UnivarPoly::from_terms(
                            Var::Q,
                            a.terms().map(|(e, c)| ((n * k) as u32 - e, c.clone())),
                        );
                        expect_eq(
                            || format!("A_{{{n},{k}}}(q) vs q^{} A(1/q)", n * k),
                            &a,
                            &mirrored,
                        )?;
                        if a.is_symmetric() {
                            Ok(())
                        } else {
                            Err(Mismatch::new(
                                "palindromic coefficient window",
                                "symmetric",
                                a,
                            ))
                        }
                    },
                );
            }
        }
        let orbit_limit = limit.min(7);
        for n in 1..=orbit_limit {
            for k in 0..n {
                self.check(
                    Suite::Symmetry,
                    "rotation pairs a_i with a_(nk-i)",
                    format!("n={n} k={k}"),
                    |_| orbit_pairing(n, k),
                );
            }
        }
        for n in (1..=orbit_limit).step_by(2) {
            for k in (0..n).step_by(2) {
                self.check(
                    Suite::Symmetry,
                    "fixed points are 123[τ,1,R(τ)]",
                    format!("n={n} k={k}"),
                    |_| fixed_points(n, k),
                );
            }
        }
    }

    fn unimodality(&mut self, limit: usize) {
        let mut not_log_concave = Vec::new();
        for n in 1..=limit {
            for k in 0..n {
                self.check(
                    Suite::Unimodality,
                    "A_{n,k}(q) unimodal",
                    format!("n={n} k={k}"),
                    |o| {
                        let a = o.a_poly(n, k as u32);
                        if let Some(i) = a.first_log_concavity_failure() {
                            not_log_concave.push(format!("A_{{{n},{k}}} (at q^{i})"));
                        }
                        if a.is_unimodal() {
                            Ok(())
                        } else {
                            Err(Mismatch::new(format!("A_{{{n},{k}}}(q)"), "unimodal", a))
                        }
                    },
                );
            }
        }
        if limit >= 6 {
            self.check(
                Suite::Unimodality,
                "A_{6,2}(q) not log-concave",
                "n=6 k=2",
                |o| {
                    let a = o.a_poly(6, 2);
                    if a.is_log_concave() {
                        Err(Mismatch::new("A_{6,2}(q)", "a log-concavity failure", a))
                    } else {
                        Ok(())
                    }
                },
            );
        }
        let text = if not_log_concave.is_empty() {
            format!("every A_{{n,k}}(q) with n <= {limit} is log-concave")
        } else {
            format!("not log-concave: {}", not_log_concave.join(", "))
        };
        self.note(Suite::Unimodality, text);
    }

    fn parity(&mut self, limit: usize) {
        for n in (1..=limit).filter(|&n| is_mersenne(n)) {
            let cases: [(&str, Specialisation); 3] = [
                ("[q^k] I_n(q,1) even for k > 0", statpoly::inv_at_t1),
                ("[q^k] M_n(q,1) even for k > 0", statpoly::maj_at_t1),
                ("[t^k] M_n(1,t) even for k > 0", statpoly::maj_at_q1),
            ];
            for (label, specialise) in cases {
                self.check(Suite::Parity, label, format!("n={n}"), |o| {
                    let p = specialise(o.tables(n));
                    if is_one_then_even(&p) {
                        Ok(())
                    } else {
                        Err(Mismatch::new(label, "1 + (even terms)", p))
                    }
                });
            }
        }
    }

    fn signed(&mut self, limit: usize) {
        for n in 1..=limit {
            self.check(
                Suite::Signed,
                "I_n(-1,t) by s_(n,k)",
                format!("n={n}"),
                |o| closed_forms::verify_sign_enum(o, n),
            );
        }
        for n in (1..=limit / 2).filter(|n| 2 * n <= limit) {
            self.check(
                Suite::Signed,
                "I_2n = (t-1) I_(2n-1)",
                format!("n={n}"),
                |o| closed_forms::verify_rec1(o, n),
            );
        }
        for n in (2..).take_while(|n| 2 * n < limit) {
            self.check(
                Suite::Signed,
                "three-term recurrence for I_(2n+1)",
                format!("n={n}"),
                |o| {
                    closed_forms::verify_rec2(o, n)?;
                    let (lhs, rhs) = closed_forms::rec2_from_ode(o, n);
                    expect_eq(
                        || format!("[z^{n}] of the differential equation"),
                        &lhs,
                        &rhs,
                    )
                },
            );
        }
        for n in (1..).take_while(|n| 2 * n < limit) {
            self.check(
                Suite::Signed,
                "I_2n(-1,1) = 0, I_(2n+1)(-1,1) = C_n",
                format!("n={n}"),
                |o| closed_forms::verify_simion_schmidt(o, n),
            );
        }
        for n in (0..).take_while(|n| 2 * n < limit) {
            self.check(
                Suite::Signed,
                "[t^j] I_(2n+1)(-1,t) by binomials",
                format!("n={n}"),
                |o| closed_forms::verify_coeff_formulas(o, n),
            );
        }
        for n in 1..=limit {
            self.check(
                Suite::Signed,
                "I_n(1,t) = Narayana",
                format!("n={n}"),
                |o| closed_forms::verify_narayana(o, n),
            );
        }
    }

    fn cf(&mut self, limit: usize) {
        self.check(
            Suite::Cf,
            "continued fraction = Σ I_n(q,t) z^n",
            format!("order={limit}"),
            |o| {
                let series = cfrac::inversion_cf(limit + 3)
                    .expand(limit)
                    .map_err(|e| Mismatch::new("expansion", "a series", e))?;
                for n in 0..=limit {
                    expect_eq(|| format!("[z^{n}]"), &o.inv(n), series.coeff(n))?;
                }
                Ok(())
            },
        );
        let mut rng = ChaCha8Rng::seed_from_u64(CF_SEED);
        for i in 0..RANDOM_CFS {
            let cf = random_cf(&mut rng, 2 * RANDOM_CF_ORDER + 4);
            self.check(
                Suite::Cf,
                "even and odd contractions agree",
                format!("seed={CF_SEED:#x} #{i} order={RANDOM_CF_ORDER}"),
                |_| contractions_agree(&cf, RANDOM_CF_ORDER),
            );
        }
        self.check(
            Suite::Cf,
            "odd part at q=-1, t=1 is 1 + zC(z²)",
            "order=9",
            |_| {
                let cf = cfrac::specialize(&cfrac::inversion_cf(25), Some(-1), Some(1));
                let odd = cf
                    .odd_part()
                    .map_err(|e| Mismatch::new("odd part", "a fraction", e))?;
                let series = odd
                    .expand(9)
                    .map_err(|e| Mismatch::new("odd part", "a series", e))?;
                let expected = [1, 1, 0, 1, 0, 2, 0, 5, 0, 14];
                for (n, c) in expected.into_iter().enumerate() {
                    expect_eq(
                        || format!("[z^{n}]"),
                        &BivarPoly::constant(c),
                        series.coeff(n),
                    )?;
                }
                Ok(())
            },
        );
    }

    fn gf(&mut self, limit: usize) {
        self.check(
            Suite::Gf,
            "closed form for Σ I_n(-1,t) z^n",
            format!("order={limit}"),
            |o| closed_forms::verify_gf_sign(o, limit),
        );
        let odd = limit / 2;
        self.check(
            Suite::Gf,
            "closed form for Σ I_(2n+1)(-1,t) z^n",
            format!("order={odd}"),
            |o| closed_forms::verify_gf_sign_odd(&mut WithTransfer(o), odd),
        );
        let order = limit.min(10);
        self.check(
            Suite::Gf,
            "functional equation",
            format!("order={order}"),
            |o| closed_forms::verify_functional_equation(o, order),
        );
        self.check(
            Suite::Gf,
            "reflection identity",
            format!("order={order}"),
            |o| closed_forms::verify_reflection_identity(o, order),
        );
        self.check(
            Suite::Gf,
            "differential equation for the odd part",
            format!("order={order}"),
            |o| closed_forms::verify_ode(&mut WithTransfer(o), order),
        );
        for n in 0..=limit {
            self.check(
                Suite::Gf,
                "Lagrange inversion identity",
                format!("n={n}"),
                |_| closed_forms::verify_lagrange(n),
            );
        }
    }

    fn dyck(&mut self, limit: usize) {
        for n in 1..=limit {
            let by_peaks = symmetric_dyck_by_peaks(n);
            for k in 1..=n {
                let counted = by_peaks[k].clone();
                self.check(
                    Suite::Dyck,
                    "symmetric Dyck paths = s_(n,k)",
                    format!("n={n} k={k}"),
                    |_| {
                        expect_eq(
                            || format!("symmetric Dyck paths of semilength {n} with {k} peaks"),
                            &s_coeff(n as i64, k as i64),
                            &counted,
                        )
                    },
                );
            }
            self.check(Suite::Dyck, "row sums agree", format!("n={n}"), |_| {
                let paths: BigInt = by_peaks.iter().sum();
                let formula: BigInt = (1..=n as i64).map(|k| s_coeff(n as i64, k)).sum();
                expect_eq(|| format!("row {n}"), &formula, &paths)
            });
        }
    }
}

fn orbit_pairing(n: usize, k: usize) -> Verification {
    for i in 0..=n * k {
        let r = orbit_partition(n, k, i);
        let sized_ok = r.orbit_sizes_at_most_two() && (2 * i == n * k || r.fixed == 0);
        if !(sized_ok && r.maps_onto_mirror) {
            return Err(Mismatch::new(
                format!("orbits on maj = {i}"),
                "orbits of size 1 or 2, class mapped onto its mirror",
                format_args!(
                    "{} fixed, {} pairs, {} larger, class {} vs mirror {}",
                    r.fixed, r.pairs, r.larger, r.class_size, r.mirror_size
                ),
            ));
        }
    }
    Ok(())
}

fn fixed_points(n: usize, k: usize) -> Verification {
    let fp = r180_fixed_points(n, k)
        .map_err(|e| Mismatch::new("fixed points", "brute-force set = inflations", e))?;
    if k >= 2 && is_mersenne(n) && fp.len() % 2 != 0 {
        return Err(Mismatch::new("number of fixed points", "even", fp.len()));
    }
    Ok(())
}

/// A fraction `c/(1 ± m_2 z^{e_2}/(1 ± …))` with random monomials
/// `m_i = c_i q^a t^b`, `1 ≤ e_i ≤ 2`.
pub fn random_cf(rng: &mut impl Rng, depth: usize) -> CFSpec<BivarPoly> {
    let mut terms = vec![CfTerm::unit(
        Sign::Plus,
        vec![BivarPoly::constant(rng.gen_range(1..=3))],
    )];
    for _ in 1..depth {
        let sign = if rng.gen_bool(0.5) {
            Sign::Plus
        } else {
            Sign::Minus
        };
        let c = rng.gen_range(1..=3);
        let mut numerator = vec![BivarPoly::zero(); rng.gen_range(1..=2)];
        numerator.push(BivarPoly::monomial(
            c,
            rng.gen_range(0..3),
            rng.gen_range(0..3),
        ));
        terms.push(CfTerm::unit(sign, numerator));
    }
    CFSpec {
        head: Vec::new(),
        terms,
    }
}

/// Even and odd contractions against direct expansion through `z^order`.
pub fn contractions_agree(cf: &CFSpec<BivarPoly>, order: usize) -> Verification {
    let err = |what: &'static str| move |e| Mismatch::new(what, "a series", e);
    let direct = cf.expand(order).map_err(err("direct expansion"))?;
    let even = cf.even_part().map_err(err("even part"))?;
    let odd = cf.odd_part().map_err(err("odd part"))?;
    let even = even.evaluate(order + 1).map_err(err("even part"))?;
    let odd = odd.evaluate(order + 1).map_err(err("odd part"))?;
    for n in 0..=order {
        expect_eq(
            || format!("even part [z^{n}]"),
            direct.coeff(n),
            even.coeff(n),
        )?;
        expect_eq(
            || format!("odd part [z^{n}]"),
            direct.coeff(n),
            odd.coeff(n),
        )?;
    }
    Ok(())
}
