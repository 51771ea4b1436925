//! Acceptance run: one line per criterion, nonzero exit on any failure.

use std::panic::{self, AssertUnwindSafe};
use std::process::ExitCode;
use std::time::Instant;

use qcontig::cli::bench::{bench, BenchInput};
use qcontig::contiguous::{
    coeff_st_rational, coeff_st_tilde_rational, coeff_uv_rational, p01, p01_coeff, p11, p11_coeff,
    CoeffPair, ShiftPair, ShiftTriple,
};
use qcontig::numerics::{rational, BigFloat, LaurentPoly, Precision, RatFn, Rational, Scalar};
use qcontig::qbessel::{
    degree_bound_p2, degree_bound_p3, jackson_j, lommel_closed, p2, p2_coeff, p3, p3_coeff, r2, r3,
    s_tilde_scaled, BesselParams,
};
use qcontig::qcore::{phi_eval, q_pochhammer_inf, PhiOpts, PhiSpec};
use qcontig::verify::{self, golden, run_sweep, IdentityId, Mode, Residual, Status, SweepConfig};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Outcome = Result<String, String>;

fn jobs() -> usize {
    std::thread::available_parallelism().map_or(1, |n| n.get())
}

fn sweep(suite: &[IdentityId], mode: Mode, trials: u64) -> verify::Report {
    run_sweep(&SweepConfig {
        suite: suite.to_vec(),
        max_shift: 4,
        trials,
        seed: 0,
        modes: vec![mode],
        order: 32,
        precision: 128,
        cond: 1e3,
        jobs: jobs(),
        only_shift: None,
        only_trial: None,
    })
}

fn first_failure(r: &verify::Report) -> String {
    r.cases
        .iter()
        .find(|c| c.status == Status::Fail)
        .map(|c| {
            format!(
                "{} {:?} trial {}: {}",
                c.id,
                c.shifts,
                c.trial,
                c.detail.clone().unwrap_or_default()
            )
        })
        .unwrap_or_default()
}

/// Exact sweep with zero failures and a pole-skip rate below `max_skip`.
fn exact_sweep(suite: &[IdentityId], trials: u64, max_skip: f64) -> Outcome {
    let r = sweep(suite, Mode::Exact, trials);
    let t = &r.totals;
    let skip = t.skipped_pole as f64 / t.total.max(1) as f64;
    let summary = format!(
        "{} cases, {} pass, {} fail, {} pole ({:.2}%), {:.1}s",
        t.total,
        t.pass,
        t.fail,
        t.skipped_pole,
        100.0 * skip,
        r.elapsed.as_secs_f64()
    );
    if t.fail > 0 {
        Err(format!("{summary}; first: {}", first_failure(&r)))
    } else if skip >= max_skip {
        Err(format!("{summary}; skip rate too high"))
    } else {
        Ok(summary)
    }
}

fn criterion1() -> Outcome {
    exact_sweep(&[IdentityId::Trr1phi1], 100, 0.05)
}

fn criterion2() -> Outcome {
    let a = exact_sweep(&[IdentityId::Trr1phi1Tilde], 100, 0.05)?;
    let b = exact_sweep(&[IdentityId::Trr0phi1], 100, 0.05)?;
    Ok(format!("3trr_1phi1_2: {a}; 3trr_0phi1: {b}"))
}

fn same_at(
    what: &str,
    got: &CoeffPair<RatFn<Rational>>,
    want: &CoeffPair<RatFn<Rational>>,
    xs: &[Rational],
) -> Result<(), String> {
    for x in xs {
        let g = got.eval(x).map_err(|e| format!("{what} at x={x}: {e}"))?;
        let w = want.eval(x).map_err(|e| format!("{what} at x={x}: {e}"))?;
        if g.first != w.first || g.second != w.second {
            return Err(format!(
                "{what} at x={x}: ({}, {}) vs ({}, {})",
                g.first, g.second, w.first, w.second
            ));
        }
    }
    Ok(())
}

fn criterion3() -> Outcome {
    let xs = [
        rational(1, 7),
        rational(2, 9),
        rational(-3, 11),
        rational(5, 13),
        rational(17, 4),
    ];
    let draws = 20;
    for trial in 0..draws {
        let d = verify::draw(3, trial);
        let (a, c, q) = (&d.a, &d.c, &d.q);
        let e = |e: qcontig::Error| e.to_string();
        same_at(
            "st(1,1,0)",
            &coeff_st_rational(ShiftTriple::new(1, 1, 0), a, c, q).map_err(e)?,
            &golden::st_110(a, c),
            &xs,
        )?;
        same_at(
            "st(2,2,2)",
            &coeff_st_rational(ShiftTriple::new(2, 2, 2), a, c, q).map_err(e)?,
            &golden::st_222(a, c, q),
            &xs,
        )?;
        same_at(
            "st_tilde(2,2,0)",
            &coeff_st_tilde_rational(ShiftTriple::new(2, 2, 0), a, c, q).map_err(e)?,
            &golden::st_tilde_220(a, c, q),
            &xs,
        )?;
        same_at(
            "uv(2,2)",
            &coeff_uv_rational(ShiftPair::new(2, 2), c, q).map_err(e)?,
            &golden::uv_22(c, q),
            &xs,
        )?;
    }
    Ok(format!(
        "4 golden pairs x {draws} draws x {} points",
        xs.len()
    ))
}

fn criterion4() -> Outcome {
    exact_sweep(
        &[
            IdentityId::RelationSt,
            IdentityId::RelationTildeSt,
            IdentityId::RelationUv,
            IdentityId::SEqCaxStilde,
        ],
        100,
        1.0,
    )
}

fn criterion5() -> Outcome {
    exact_sweep(&[IdentityId::TrrJ3, IdentityId::TrrJ2], 50, 1.0)
}

fn criterion6() -> Outcome {
    let draws = 20;
    for trial in 0..draws {
        let d = verify::draw(6, trial);
        for m in 1..=6 {
            for kind in [2u8, 3] {
                let e = |e: qcontig::Error| format!("kind {kind}, m={m}: {e}");
                let got = if kind == 3 {
                    r3(m, 0, &d.t, &d.q).map_err(e)?
                } else {
                    r2(m, 0, &d.t, &d.q).map_err(e)?
                };
                let want = lommel_closed(kind, m, &d.t, &d.q).map_err(e)?;
                if !got.value.denom.is_empty() || got.value.numer != want.value.numer {
                    return Err(format!(
                        "kind {kind}, m={m}, t={}, q={}: R differs from the closed form",
                        d.t, d.q
                    ));
                }
            }
        }
    }
    Ok(format!("kinds 2 and 3, m = 1..6, {draws} draws"))
}

fn relative(r: &Option<Residual>) -> Option<f64> {
    match r {
        Some(Residual::Relative(s)) => s.parse().ok(),
        _ => None,
    }
}

fn criterion7() -> Outcome {
    let suite = [
        IdentityId::ChuVandermonde,
        IdentityId::Lemma31,
        IdentityId::Special1phi1,
        IdentityId::Special0phi1,
        IdentityId::J1J2,
    ];
    let r = sweep(&suite, Mode::Float, 100);
    if r.totals.fail > 0 {
        return Err(format!(
            "{} of {} float cases failed; first: {}",
            r.totals.fail,
            r.totals.total,
            first_failure(&r)
        ));
    }
    let mut worst = 0.0f64;
    for c in r.cases.iter().filter(|c| c.status == Status::Pass) {
        match relative(&c.residual) {
            Some(v) if v < 1e-30 => worst = worst.max(v),
            other => {
                return Err(format!(
                    "{} {:?} trial {}: residual {other:?}",
                    c.id, c.shifts, c.trial
                ))
            }
        }
    }

    let p = Precision(128);
    let f = |n: i64, d: i64| BigFloat::from_rational(p, &rational(n, d));
    let opts = PhiOpts::default();
    let e = |e: qcontig::Error| e.to_string();

    // 1phi1(a; 0; q, -q) = (aq; q^2)_inf / (q; q^2)_inf at a = 1/3, q = 1/2.
    let (a, q) = (f(1, 3), f(1, 2));
    let q2 = q.clone() * &q;
    let lhs = phi_eval(
        &PhiSpec::new(vec![a.clone()], vec![f(0, 1)], q.clone(), -q.clone()),
        &opts,
    )
    .map_err(e)?
    .value;
    let rhs =
        q_pochhammer_inf(&(a * &q), &q2).map_err(e)? / &q_pochhammer_inf(&q, &q2).map_err(e)?;
    let special = lhs.rel_diff(&rhs).to_f64();

    // J1 (-y^2; q)_inf = J2 at nu = 1/2, x = 1, q = 1/2.
    let params = |kind| BesselParams {
        kind,
        nu: f(1, 2),
        x: f(1, 1),
        q: f(1, 2),
    };
    let j1 = jackson_j(&params(1), &opts).map_err(e)?;
    let j2 = jackson_j(&params(2), &opts).map_err(e)?;
    let y2 = f(1, 4);
    let bridge = q_pochhammer_inf(&-y2, &f(1, 2)).map_err(e)? * &j1;
    let j12 = j2.rel_diff(&bridge).to_f64();

    if special >= 1e-30 || j12 >= 1e-30 {
        return Err(format!(
            "fixed examples: special_1phi1 {special:.3e}, J1_J2 {j12:.3e}"
        ));
    }
    Ok(format!(
        "{} cases, {} pole, worst residual {worst:.3e}; special_1phi1 {special:.3e}, J1_J2 {j12:.3e}",
        r.totals.total, r.totals.skipped_pole
    ))
}

/// Degree and lowest exponent of `p` within `[0, max]`, and the untruncated
/// coefficients `coeff(j)` zero for the six indices past `bound`.
fn check_poly(
    what: &str,
    p: &LaurentPoly<Rational>,
    max: i64,
    bound: i64,
    coeff: impl Fn(i64) -> qcontig::Result<Rational>,
) -> Result<usize, String> {
    if p.min_exp().is_some_and(|e| e < 0) || p.max_exp().is_some_and(|e| e > max) {
        return Err(format!(
            "{what}: exponents {:?}..{:?} outside 0..={max}",
            p.min_exp(),
            p.max_exp()
        ));
    }
    let start = (bound + 1).max(0);
    let mut checked = 0;
    for j in start..start + 6 {
        let c = coeff(j).map_err(|e| format!("{what}, j={j}: {e}"))?;
        if !c.is_zero() {
            return Err(format!("{what}: coefficient {j} past bound {bound} is {c}"));
        }
        checked += 1;
    }
    Ok(checked)
}

fn criterion8() -> Outcome {
    let draws = 5;
    let (mut polys, mut coeffs) = (0usize, 0usize);
    for trial in 0..draws {
        let d = verify::draw(8, trial);
        let (a, c, q, t) = (&d.a, &d.c, &d.q, &d.t);
        let e = |e: qcontig::Error| e.to_string();
        for k in -4..=4 {
            for m in -4..=4 {
                for n in -4..=4 {
                    let s = ShiftTriple::new(k, m, n);
                    let what = format!("P11{:?}", (k, m, n));
                    let p = p11(s, a, c, q).map_err(e)?;
                    coeffs += check_poly(&what, &p, s.d(), s.d(), |j| p11_coeff(s, j, a, c, q))?;
                    polys += 1;
                }
            }
        }
        for m in -4..=4 {
            for n in -4..=4 {
                let s = ShiftPair::new(m, n);
                let what = format!("P01{:?}", (m, n));
                let p = p01(s, c, q).map_err(e)?;
                coeffs += check_poly(&what, &p, s.e(), s.e(), |j| p01_coeff(s, j, c, q))?;

                let f = degree_bound_p3(m, n);
                let what = format!("P3{:?}", (m, n));
                let p = p3(m, n, t, q).map_err(e)?;
                coeffs += check_poly(&what, &p, 2 * f, f, |j| p3_coeff(m, n, j, t, q))?;

                let g = degree_bound_p2(m, n);
                let what = format!("P2{:?}", (m, n));
                let p = p2(m, n, t, q).map_err(e)?;
                coeffs += check_poly(&what, &p, 2 * g, g, |j| p2_coeff(m, n, j, t, q))?;
                polys += 3;
            }
        }
    }
    Ok(format!(
        "{polys} polynomials within bounds, {coeffs} coefficients past the bound all zero"
    ))
}

/// Classical `J_nu(x)` for integer `nu >= 0` by its power series.
fn bessel_j(nu: u32, x: f64) -> f64 {
    let y = x / 2.0;
    let mut term = y.powi(nu as i32) / (1..=nu).map(f64::from).product::<f64>();
    let mut sum = term;
    for k in 1..200u32 {
        term *= -y * y / (f64::from(k) * f64::from(k + nu));
        sum += term;
        if term.abs() < 1e-18 * sum.abs() {
            break;
        }
    }
    sum
}

fn criterion9() -> Outcome {
    let p = Precision(128);
    let q = BigFloat::from_rational(p, &rational(999, 1000));
    let mut worst = 0.0f64;
    for nu in [0u32, 1, 2] {
        for (xn, xd) in [(1, 2), (1, 1), (2, 1)] {
            let x = xn as f64 / xd as f64;
            let arg = BigFloat::from_rational(p, &rational(xn, 1000 * xd));
            let params = BesselParams {
                kind: 2,
                nu: BigFloat::from_i64(p, nu.into()),
                x: arg,
                q: q.clone(),
            };
            let jq = jackson_j(&params, &PhiOpts::default())
                .map_err(|e| format!("nu={nu}, x={x}: {e}"))?
                .to_f64();
            let diff = (jq - bessel_j(nu, x)).abs();
            if diff.is_nan() || diff >= 2e-2 {
                return Err(format!(
                    "nu={nu}, x={x}: J2 = {jq}, J = {}, diff {diff:.3e}",
                    bessel_j(nu, x)
                ));
            }
            worst = worst.max(diff);
        }
    }
    Ok(format!("9 points, worst |J2 - J| = {worst:.3e}"))
}

fn criterion10() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(10);
    let zero = Rational::from(0);
    let (mut done, mut trial, mut skipped) = (0, 0, 0);
    while done < 20 {
        let d = verify::draw(10, trial);
        trial += 1;
        let (m, n) = (rng.gen_range(-4..=4), rng.gen_range(-4..=4));
        let values: Result<Vec<Rational>, qcontig::Error> = (0..=3)
            .map(|k| {
                let s = ShiftTriple::new(k, m, n);
                Ok(s_tilde_scaled(s, &zero, &d.c, &d.q)?.eval(&d.x)?)
            })
            .collect();
        let values = match values {
            Ok(v) => v,
            Err(e) if e.is_pole() => {
                skipped += 1;
                continue;
            }
            Err(e) => return Err(format!("(m,n)=({m},{n}): {e}")),
        };
        if values.iter().any(|v| v != &values[0]) {
            return Err(format!(
                "(m,n)=({m},{n}), c={}, x={}, q={}: values {values:?}",
                d.c, d.x, d.q
            ));
        }
        done += 1;
    }
    Ok(format!(
        "20 draws k-independent, {skipped} pole draws replaced"
    ))
}

fn criterion11() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let (mut direct, mut recurrence) = (0.0, 0.0);
    let mut worst = 0.0f64;
    for trial in 0..20 {
        let d = verify::draw(11, trial);
        let shift = ShiftTriple::new(
            rng.gen_range(-4..=4),
            rng.gen_range(-4..=4),
            rng.gen_range(-4..=4),
        );
        let r = bench(&BenchInput {
            shift,
            a: d.a.clone(),
            c: d.c.clone(),
            x: d.x.clone(),
            q: d.q.clone(),
            precision: Precision(128),
            repeat: 3,
        })
        .map_err(|e| format!("{shift:?}: {e}"))?;
        println!(
            "  bench {:>2} {:>2} {:>2}: direct {:.3e}s, recurrence {:.3e}s, rel diff {}",
            shift.k, shift.m, shift.n, r.direct_time.median, r.recurrence_time.median, r.rel_diff
        );
        if !r.agree {
            return Err(format!(
                "{shift:?} a={} c={} x={} q={}: rel diff {} > {}",
                r.a, r.c, r.x, r.q, r.rel_diff, r.tolerance
            ));
        }
        direct += r.direct_time.median;
        recurrence += r.recurrence_time.median;
        worst = worst.max(r.rel_diff.parse::<f64>().unwrap_or(f64::INFINITY));
    }
    Ok(format!(
        "20 draws agree, worst rel diff {worst:.3e}; median time direct {direct:.3e}s, recurrence {recurrence:.3e}s total"
    ))
}

fn main() -> ExitCode {
    let criteria: [(u32, fn() -> Outcome); 11] = [
        (1, criterion1),
        (2, criterion2),
        (3, criterion3),
        (4, criterion4),
        (5, criterion5),
        (6, criterion6),
        (7, criterion7),
        (8, criterion8),
        (9, criterion9),
        (10, criterion10),
        (11, criterion11),
    ];
    // `cargo test` forwards harness flags; a bare number selects criteria.
    let only: Vec<u32> = std::env::args()
        .skip(1)
        .filter_map(|a| a.parse().ok())
        .collect();
    let mut failed = 0;
    for (n, f) in criteria {
        if !only.is_empty() && !only.contains(&n) {
            continue;
        }
        let start = Instant::now();
        let outcome = panic::catch_unwind(AssertUnwindSafe(f))
            .unwrap_or_else(|_| Err("panicked".to_string()));
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(msg) => println!("criterion {n}: pass ({msg}) [{secs:.1}s]"),
            Err(msg) => {
                failed += 1;
                println!("criterion {n}: FAIL ({msg}) [{secs:.1}s]");
            }
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
