//! Acceptance suite: every criterion at its stated range and time budget.
//! Runs without the libtest harness so the PASS/FAIL lines always print.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use pavstat::suites::{contractions_agree, random_cf, CF_SEED, RANDOM_CFS, RANDOM_CF_ORDER};
use pavstat_core::avoiders::Avoiders321;
use pavstat_core::bijections::{
    count_symmetric_dyck, is_one_then_even, orbit_partition, r180_fixed_points,
};
use pavstat_core::cfrac::{inversion_cf, specialize};
use pavstat_core::closed_forms::{self, catalan_numbers, s_coeff, WithTransfer};
use pavstat_core::statpoly::{self, OracleCache, StatTables};
use pavstat_core::{BivarPoly, UnivarPoly, Var};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

type Outcome = Result<(), String>;
type Criterion = (
    &'static str,
    Duration,
    Box<dyn FnMut(&mut OracleCache) -> Outcome>,
);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Outcome {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn counting() -> Outcome {
    let recurrence = catalan_numbers(12);
    ensure(recurrence[12] == BigInt::from(208_012), || {
        format!("C_12 = {}", recurrence[12])
    })?;
    for n in 0..=12 {
        let counted = Avoiders321::new(n).count();
        ensure(BigInt::from(counted) == recurrence[n], || {
            format!("#Av_{n}(321) = {counted}, C_{n} = {}", recurrence[n])
        })?;
    }
    Ok(())
}

fn symmetry(oracle: &mut OracleCache) -> Outcome {
    for n in 1..=8 {
        for k in 0..n {
            let a = oracle.a_poly(n, k as u32);
            let nk = (n * k) as u32;
            let mirrored =
                UnivarPoly::from_terms(Var::Q, a.terms().map(|(e, c)| (nk - e, c.clone())));
            ensure(a.is_symmetric() && a == mirrored, || {
                format!("A_{{{n},{k}}} = {a}")
            })?;
        }
    }
    for n in 1..=7 {
        for k in 0..n {
            for i in 0..=n * k {
                let r = orbit_partition(n, k, i);
                let ok = r.orbit_sizes_at_most_two()
                    && r.maps_onto_mirror
                    && (2 * i == n * k || r.fixed == 0)
                    && r.class_size == r.mirror_size;
                ensure(ok, || format!("orbits at n={n} k={k} maj={i}: {r:?}"))?;
            }
        }
    }
    Ok(())
}

fn unimodality(oracle: &mut OracleCache) -> Outcome {
    for n in 1..=10 {
        for k in 0..n {
            let a = oracle.a_poly(n, k as u32);
            ensure(a.is_unimodal(), || {
                format!("A_{{{n},{k}}} = {a} is not unimodal")
            })?;
        }
    }
    let a62 = oracle.a_poly(6, 2);
    ensure(!a62.is_log_concave(), || {
        format!("A_{{6,2}} = {a62} is log-concave")
    })
}

fn parity() -> Outcome {
    for n in [1, 3, 7, 15] {
        let tables = StatTables::compute(n);
        ensure(
            BigInt::from(tables.count) == closed_forms::catalan(n),
            || format!("count at n={n}"),
        )?;
        for (name, p) in [
            ("I_n(q,1)", statpoly::inv_at_t1(&tables)),
            ("M_n(q,1)", statpoly::maj_at_t1(&tables)),
            ("M_n(1,t)", statpoly::maj_at_q1(&tables)),
        ] {
            ensure(is_one_then_even(&p), || format!("{name} at n={n}: {p}"))?;
        }
    }
    Ok(())
}

fn signed(oracle: &mut OracleCache) -> Outcome {
    for n in 1..=10 {
        closed_forms::verify_sign_enum(oracle, n).map_err(|m| m.to_string())?;
    }
    for n in 1..=5 {
        closed_forms::verify_rec1(oracle, n).map_err(|m| m.to_string())?;
    }
    for n in 2..=5 {
        closed_forms::verify_rec2(oracle, n).map_err(|m| m.to_string())?;
    }
    Ok(())
}

fn simion_schmidt(oracle: &mut OracleCache) -> Outcome {
    for n in 1..=5 {
        closed_forms::verify_simion_schmidt(oracle, n).map_err(|m| m.to_string())?;
    }
    Ok(())
}

fn continued_fractions(oracle: &mut OracleCache) -> Outcome {
    let series = inversion_cf(12).expand(8).map_err(|e| e.to_string())?;
    for n in 0..=8 {
        let expected = oracle.inv(n);
        ensure(series.coeff(n) == &expected, || {
            format!("[z^{n}]: {} vs {expected}", series.coeff(n))
        })?;
    }
    let mut rng = ChaCha8Rng::seed_from_u64(CF_SEED);
    for i in 0..RANDOM_CFS {
        let cf = random_cf(&mut rng, 2 * RANDOM_CF_ORDER + 4);
        contractions_agree(&cf, RANDOM_CF_ORDER)
            .map_err(|m| format!("random fraction #{i}: {m}"))?;
    }
    let odd = specialize(&inversion_cf(25), Some(-1), Some(1))
        .odd_part()
        .and_then(|cf| cf.expand(9))
        .map_err(|e| e.to_string())?;
    for (n, c) in [1, 1, 0, 1, 0, 2, 0, 5, 0, 14].into_iter().enumerate() {
        ensure(odd.coeff(n) == &BivarPoly::constant(c), || {
            format!("odd part [z^{n}] = {}", odd.coeff(n))
        })?;
    }
    Ok(())
}

fn generating_functions(oracle: &mut OracleCache) -> Outcome {
    let m = |m: pavstat_core::Mismatch| m.to_string();
    closed_forms::verify_gf_sign(oracle, 12).map_err(m)?;
    closed_forms::verify_gf_sign_odd(&mut WithTransfer(oracle), 6).map_err(m)?;
    closed_forms::verify_functional_equation(oracle, 10).map_err(m)?;
    closed_forms::verify_reflection_identity(oracle, 10).map_err(m)?;
    closed_forms::verify_ode(&mut WithTransfer(oracle), 10).map_err(m)
}

fn lagrange(oracle: &mut OracleCache) -> Outcome {
    for n in 0..=12 {
        closed_forms::verify_lagrange(n).map_err(|m| m.to_string())?;
    }
    for n in 0..=5 {
        closed_forms::verify_coeff_formulas(oracle, n).map_err(|m| m.to_string())?;
    }
    Ok(())
}

fn dyck() -> Outcome {
    for n in 1..=12usize {
        for k in 1..=n {
            let paths = count_symmetric_dyck(n, k);
            let s = s_coeff(n as i64, k as i64);
            ensure(paths == s, || {
                format!("n={n} k={k}: {paths} paths, s = {s}")
            })?;
        }
    }
    Ok(())
}

fn fixed_points() -> Outcome {
    for n in [3usize, 5, 7] {
        for k in (0..n).step_by(2) {
            let fp = r180_fixed_points(n, k).map_err(|e| e.to_string())?;
            if matches!(n, 3 | 7) && k >= 2 {
                ensure(fp.len() % 2 == 0, || {
                    format!("n={n} k={k}: {} fixed points", fp.len())
                })?;
            }
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let mut oracle = OracleCache::new(12);
    let mut criteria: Vec<Criterion> = vec![
        (
            "1  counting",
            Duration::from_secs(30),
            Box::new(|_| counting()),
        ),
        (
            "2  symmetry and rotation orbits",
            Duration::MAX,
            Box::new(symmetry),
        ),
        (
            "3  unimodality, A_{6,2} not log-concave",
            Duration::from_secs(120),
            Box::new(unimodality),
        ),
        (
            "4  parity at n = 1, 3, 7, 15",
            Duration::from_secs(600),
            Box::new(|_| parity()),
        ),
        (
            "5  signed enumeration and recurrences",
            Duration::MAX,
            Box::new(signed),
        ),
        (
            "6  Simion-Schmidt values",
            Duration::MAX,
            Box::new(simion_schmidt),
        ),
        (
            "7  continued fractions",
            Duration::MAX,
            Box::new(continued_fractions),
        ),
        (
            "8  generating functions",
            Duration::MAX,
            Box::new(generating_functions),
        ),
        (
            "9  Lagrange identity and coefficient formulas",
            Duration::MAX,
            Box::new(lagrange),
        ),
        (
            "10 symmetric Dyck paths",
            Duration::from_secs(60),
            Box::new(|_| dyck()),
        ),
        (
            "11 rotation fixed points",
            Duration::MAX,
            Box::new(|_| fixed_points()),
        ),
    ];

    let mut failed = 0;
    for (name, budget, run) in criteria.iter_mut() {
        let start = Instant::now();
        let mut outcome = run(&mut oracle);
        let elapsed = start.elapsed();
        if outcome.is_ok() && elapsed > *budget {
            outcome = Err(format!("took {elapsed:.2?}, budget {budget:.0?}"));
        }
        match outcome {
            Ok(()) => println!("PASS  {name}  ({elapsed:.2?})"),
            Err(why) => {
                failed += 1;
                println!(
                    "FAIL  {name}  ({elapsed:.2?})\n      {}",
                    why.replace('\n', "\n      ")
                );
            }
        }
    }
    println!("{} criteria, {failed} failed", criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
