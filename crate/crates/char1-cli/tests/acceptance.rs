//! End-to-end acceptance suite: ten numbered criteria, one printed
//! pass/fail line each. Every expected value is frozen here with its
//! provenance tag; failures are collected so a single broken criterion
//! does not mask the others.

use std::collections::{BTreeMap, BTreeSet};
use std::time::Instant;

use char1::num::complex::Complex64;
use char1::zeta::{LdMode, LogDerivEvaluator};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

type CheckResult = Result<String, String>;

#[test]
fn acceptance() {
    let criteria: Vec<(u32, &str, fn() -> CheckResult)> = vec![
        (1, "witt table reproduction", criterion_1),
        (2, "deformed addition vs tau-adic oracle", criterion_2),
        (3, "symmetry counts for n = 1..8", criterion_3),
        (4, "gcd/Fourier identity", criterion_4),
        (5, "exponent vectors", criterion_5),
        (6, "f(s,a) self-consistency", criterion_6),
        (7, "integral/discrete singularity equivalence", criterion_7),
        (8, "von Mangoldt partial sum", criterion_8),
        (9, "elliptic reference curve", criterion_9),
        (10, "property suites", criterion_10),
    ];
    let mut failures = Vec::new();
    for (idx, name, check) in criteria {
        let start = Instant::now();
        match check() {
            Ok(detail) => {
                println!("criterion {idx}: PASS ({:.1}s) — {name}: {detail}", start.elapsed().as_secs_f64());
            }
            Err(reason) => {
                println!("criterion {idx}: FAIL ({:.1}s) — {name}: {reason}", start.elapsed().as_secs_f64());
                failures.push(format!("criterion {idx} ({name}): {reason}"));
            }
        }
    }
    assert!(failures.is_empty(), "failed criteria:\n{}", failures.join("\n"));
}

fn fail(msg: String) -> CheckResult {
    Err(msg)
}

/// Criterion 1: the CLI's p = 5, N = 3 table is byte-identical to the
/// shipped reference fixture and contains the frozen spot values.
fn criterion_1() -> CheckResult {
    let start = Instant::now();
    // [PAPER] fixtures/witt_w5_T4_reference.csv transcribes the published
    // w5 table; the CLI must reproduce it byte-for-byte.
    let fixture = include_str!("../../../fixtures/witt_w5_T4_reference.csv");
    let out = std::process::Command::new(env!("CARGO_BIN_EXE_char1"))
        .args(["witt-table", "--p", "5", "--N", "3", "--no-header"])
        .output()
        .map_err(|e| format!("cannot run CLI: {e}"))?;
    if !out.status.success() {
        return fail(format!("CLI exited with {:?}", out.status.code()));
    }
    let text = String::from_utf8(out.stdout).map_err(|e| format!("non-UTF8 output: {e}"))?;
    if text != fixture {
        return fail("CLI table differs from the reference fixture".into());
    }

    let mut rows: BTreeMap<(u64, u64), String> = BTreeMap::new();
    for line in text.lines().skip(1) {
        let mut parts = line.splitn(3, ',');
        let num: u64 = parts.next().unwrap().parse().unwrap();
        let den: u64 = parts.next().unwrap().parse().unwrap();
        rows.insert((num, den), parts.next().unwrap().to_string());
    }
    // [PAPER] spot values from the table itself.
    let spots = [
        ((1u64, 5u64), "4T"),
        ((1, 25), "4T^2"),
        ((8, 125), "0"),
        ((3, 25), "3T^2+2T^3"),
        ((1, 1), "1"),
        ((1, 125), "4T^3"),
        ((124, 125), "4T^3"),
    ];
    for ((num, den), want) in spots {
        match rows.get(&(num, den)) {
            Some(got) if got == want => {}
            other => return fail(format!("w5({num}/{den}) = {other:?}, want {want}")),
        }
    }
    // [DERIVED] the reflection symmetry w5(a) = w5(1-a) across all rows.
    for k in 1..125u64 {
        let g1 = char1::arith::gcd(k, 125);
        let g2 = char1::arith::gcd(125 - k, 125);
        if rows[&(k / g1, 125 / g1)] != rows[&((125 - k) / g2, 125 / g2)] {
            return fail(format!("w5({k}/125) != w5({}/125)", 125 - k));
        }
    }
    let elapsed = start.elapsed().as_secs_f64();
    if elapsed >= 60.0 {
        return fail(format!("runtime {elapsed:.1}s exceeds the 60s budget"));
    }
    Ok(format!("125 rows byte-identical, 7 spot values, full reflection symmetry ({elapsed:.1}s < 60s)"))
}

/// Criterion 2: the universal-coefficient deformed addition equals the
/// tau-adic oracle on seeded random monomial pairs for p in {2,3,5}.
fn criterion_2() -> CheckResult {
    use char1::witt::{deformed_add, deformed_add_oracle, witt_coeffs, MonomialExp};
    let start = Instant::now();
    for p in [2u64, 3, 5] {
        let table = witt_coeffs(p, 3).map_err(|e| format!("table p={p}: {e}"))?;
        let mut rng = ChaCha8Rng::seed_from_u64(200 + p);
        for trial in 0..100 {
            // [DERIVED] both sides computed independently; equality is exact.
            let mut pick = || {
                let den_exp = rng.gen_range(0..=3u32);
                let num = rng.gen_range(1..=60u64);
                MonomialExp::from_fraction(num, p.pow(den_exp), p, 3)
            };
            let xe = pick().map_err(|e| e.to_string())?;
            let ye = pick().map_err(|e| e.to_string())?;
            let lhs = deformed_add(xe, ye, &table).map_err(|e| e.to_string())?;
            let rhs = deformed_add_oracle(xe, ye, p, 3).map_err(|e| e.to_string())?;
            if lhs != rhs {
                return fail(format!("p={p}, trial {trial}: {xe:?} +' {ye:?} disagrees with the oracle"));
            }
        }
    }
    let elapsed = start.elapsed().as_secs_f64();
    if elapsed >= 120.0 {
        return fail(format!("runtime {elapsed:.1}s exceeds the 120s budget"));
    }
    Ok(format!("300 random pairs exact across p = 2, 3, 5 ({elapsed:.1}s < 120s)"))
}

/// Criterion 3: brute-force symmetry counts for n = 1..8 match the frozen
/// sequence and the closed-form count, and the constructive search agrees.
fn criterion_3() -> CheckResult {
    use char1::additive::{count_formula, search_a, SearchMode};
    let start = Instant::now();
    // [PAPER] counts (2,1,1,2,0,2,2,2) for n = 1..8; n = 1 is the
    // footnote value 2, n = 5 is 0 because 6 is not a prime power.
    let expected = [2usize, 1, 1, 2, 0, 2, 2, 2];
    for (i, &want) in expected.iter().enumerate() {
        let n = i + 1;
        let brute = search_a(n, SearchMode::Brute).map_err(|e| format!("brute n={n}: {e}"))?;
        if brute.len() != want {
            return fail(format!("brute count at n={n} is {}, want {want}", brute.len()));
        }
        if count_formula(n) != want as u64 {
            return fail(format!("formula count at n={n} is {}, want {want}", count_formula(n)));
        }
        let constructive =
            search_a(n, SearchMode::Constructive).map_err(|e| format!("constructive n={n}: {e}"))?;
        let brute_maps: Vec<&[usize]> = brute.iter().map(|s| s.map()).collect();
        let cons_maps: Vec<&[usize]> = constructive.iter().map(|s| s.map()).collect();
        if brute_maps != cons_maps {
            return fail(format!("constructive search disagrees with brute force at n={n}"));
        }
    }
    let elapsed = start.elapsed().as_secs_f64();
    if elapsed >= 300.0 {
        return fail(format!("runtime {elapsed:.1}s exceeds the 300s budget"));
    }
    Ok(format!("counts (2,1,1,2,0,2,2,2) from brute force, formula, and construction ({elapsed:.1}s < 300s)"))
}

/// Criterion 4: the Fourier-sum evaluation of the hom count equals
/// gcd(n, m) after rounding, with pre-round residual < 1e-9, for all
/// n, m <= 100.
fn criterion_4() -> CheckResult {
    use char1::monoid::{gcd_fourier, hom_count_cyclic};
    let mut worst = 0.0f64;
    for n in 1..=100u64 {
        for m in 1..=100u64 {
            let g = char1::arith::gcd(n, m);
            // [TRIVIAL] the hom count is the gcd.
            if hom_count_cyclic(n, m) != g {
                return fail(format!("hom count ({n},{m}) != gcd"));
            }
            // [DERIVED] the Fourier sum is the same integer up to floating
            // round-off.
            let f = gcd_fourier(n, m);
            let residual = (f - Complex64::new(g as f64, 0.0)).norm();
            worst = worst.max(residual);
            if residual >= 1e-9 {
                return fail(format!("Fourier residual {residual:.3e} at ({n},{m})"));
            }
            if f.re.round() as u64 != g {
                return fail(format!("rounded Fourier value at ({n},{m}) is not the gcd"));
            }
        }
    }
    Ok(format!("all 10^4 pairs exact after rounding; worst pre-round residual {worst:.2e}"))
}

/// Criterion 5: exact exponent vectors for the projective line,
/// Spec F_1^5, and 20 random torsion-free polynomial counting functions.
fn criterion_5() -> CheckResult {
    use char1::monoid::{SchemeData, SchemePoint};
    use char1::zeta::alpha_exponents;
    use char1::BigRational;
    let rat = |n: i64, d: i64| BigRational::new(n.into(), d.into());

    // [PAPER] P^1 has zeta 1/(s(s-1)): alpha = (-1, -1).
    let p1 = alpha_exponents(&SchemeData::p1()).map_err(|e| e.to_string())?;
    if p1.alphas != vec![rat(-1, 1), rat(-1, 1)] {
        return fail(format!("P^1 exponents {:?}", p1.alphas));
    }
    // [PAPER] Spec F_1^5: alpha_0 = -9/5.
    let f15 = alpha_exponents(&SchemeData::spec_f1m(5)).map_err(|e| e.to_string())?;
    if f15.alphas != vec![rat(-9, 5)] {
        return fail(format!("Spec F_1^5 exponents {:?}", f15.alphas));
    }
    // [DERIVED] a torsion-free scheme with counting polynomial
    // N(z) = sum a_k z^k gives alpha_k = -a_k. Since a rank-j point
    // contributes (z-1)^j, the monomial z^k is realized by C(k,j) points
    // of rank j: use multiplicity sum_k a_k C(k,j) at rank j.
    let binom = |n: usize, k: usize| -> i64 {
        let mut acc = 1i64;
        for i in 0..k.min(n - k) {
            acc = acc * (n - i) as i64 / (i + 1) as i64;
        }
        acc
    };
    let mut rng = ChaCha8Rng::seed_from_u64(500);
    let mut produced = 0;
    while produced < 20 {
        let deg = rng.gen_range(1..=4usize);
        let mut coeffs: Vec<i64> = (0..=deg).map(|_| rng.gen_range(0..=5)).collect();
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        if coeffs.is_empty() {
            continue;
        }
        produced += 1;
        let deg = coeffs.len() - 1;
        let mut points = Vec::new();
        for j in 0..=deg {
            let mult: i64 = (j..=deg).map(|k| coeffs[k] * binom(k, j)).sum();
            for _ in 0..mult {
                points.push(SchemePoint { rank: j as u32, torsion: vec![] });
            }
        }
        let scheme = SchemeData { points };
        let got = alpha_exponents(&scheme).map_err(|e| e.to_string())?;
        let want: Vec<BigRational> = coeffs.iter().map(|&a| rat(-a, 1)).collect();
        if got.alphas != want {
            return fail(format!("coeffs {coeffs:?}: exponents {:?}", got.alphas));
        }
    }
    Ok("P^1 = (-1,-1), Spec F_1^5 = (-9/5), 20 random polynomial schemes exact".into())
}

/// Criterion 6: the entire-function recursion residual stays below 1e-8
/// on the grid, and the series evaluation matches oscillatory quadrature
/// to 1e-6 on Re(s) in [1.5, 3].
fn criterion_6() -> CheckResult {
    use char1::special::{f_auto, f_by_quadrature, recursion_residual};
    use std::f64::consts::PI;

    // [DERIVED] a = 2*pi*k/d over all reduced k/d <= 1, d <= 12.
    let mut fractions = BTreeSet::new();
    for d in 1..=12u64 {
        for k in 1..=d {
            let g = char1::arith::gcd(k, d);
            fractions.insert((k / g, d / g));
        }
    }
    let a_values: Vec<f64> = fractions.iter().map(|&(k, d)| 2.0 * PI * k as f64 / d as f64).collect();
    let re_grid: Vec<f64> = (0..10).map(|i| 0.5 + 2.5 * i as f64 / 9.0).collect();
    let im_grid: Vec<f64> = (0..10).map(|i| -1.0 + 2.0 * i as f64 / 9.0).collect();

    let worst_residual = a_values
        .par_iter()
        .map(|&a| {
            let mut worst: f64 = 0.0;
            for &re in &re_grid {
                for &im in &im_grid {
                    let r = recursion_residual(Complex64::new(re, im), a)
                        .map_err(|e| format!("residual at a={a}: {e}"))?;
                    worst = worst.max(r);
                }
            }
            Ok::<f64, String>(worst)
        })
        .try_reduce(|| 0.0, |x, y| Ok(x.max(y)))?;
    if worst_residual >= 1e-8 {
        return fail(format!("worst recursion residual {worst_residual:.3e} >= 1e-8"));
    }

    // [DERIVED] independent oscillatory-quadrature evaluation, tolerance
    // 2e-7 per point, compared at 1e-6.
    let quad_s: Vec<Complex64> = [1.5, 2.25, 3.0]
        .iter()
        .flat_map(|&re| [-1.0, 0.5].iter().map(move |&im| Complex64::new(re, im)))
        .collect();
    let worst_quad = (1..=12u64)
        .into_par_iter()
        .map(|d| {
            let a = 2.0 * PI / d as f64;
            let mut worst: f64 = 0.0;
            for &s in &quad_s {
                let series = f_auto(s, a).map_err(|e| format!("series at d={d}: {e}"))?;
                let quad = f_by_quadrature(s, a, 2e-7).map_err(|e| format!("quadrature at d={d}: {e}"))?;
                worst = worst.max((series - quad).norm());
            }
            Ok::<f64, String>(worst)
        })
        .try_reduce(|| 0.0, |x, y| Ok(x.max(y)))?;
    if worst_quad >= 1e-6 {
        return fail(format!("worst series/quadrature gap {worst_quad:.3e} >= 1e-6"));
    }
    Ok(format!(
        "recursion residual <= {worst_residual:.1e} on {} a-values x 100 s-points; quadrature gap <= {worst_quad:.1e}",
        a_values.len()
    ))
}

/// Criterion 7: for Spec F_1^m, m <= 12, s * (log-derivative) extracted
/// along four rays tends to the same phi-weighted limit in both modes,
/// and the mode difference stays bounded by 10 on |s| = 0.1.
fn criterion_7() -> CheckResult {
    use char1::monoid::SchemeData;
    for m in 1..=12u64 {
        let scheme = SchemeData::spec_f1m(m);
        let int_ev = LogDerivEvaluator::new(&scheme, LdMode::Integral).map_err(|e| e.to_string())?;
        let disc_ev = LogDerivEvaluator::new(&scheme, LdMode::Discrete).map_err(|e| e.to_string())?;
        // [DERIVED] the limit of s*LD as s->0 is -sum_{d|m} phi(d)/d; the
        // four-ray average at |s| = 1e-3 cancels the s, s^2, s^3 terms of
        // the analytic part, leaving an O(|s|^4) extraction error.
        let expected: f64 = -char1::arith::divisors(m)
            .iter()
            .map(|&d| char1::arith::euler_phi(d) as f64 / d as f64)
            .sum::<f64>();
        let limit_of = |ev: &LogDerivEvaluator| -> Result<f64, String> {
            let r = 1e-3;
            let mut acc = Complex64::new(0.0, 0.0);
            for k in 0..4 {
                let theta = 0.3 + k as f64 * std::f64::consts::FRAC_PI_2;
                let s = Complex64::from_polar(r, theta);
                acc += s * char1::zeta::zeta_logderiv(ev, s).map_err(|e| e.to_string())?;
            }
            let avg = acc / 4.0;
            if avg.im.abs() > 1e-6 {
                return Err(format!("m={m}: extracted limit has imaginary part {:.3e}", avg.im));
            }
            Ok(avg.re)
        };
        let li = limit_of(&int_ev)?;
        let ld = limit_of(&disc_ev)?;
        let rel = (li - ld).abs() / li.abs().max(1e-300);
        if rel >= 1e-3 {
            return fail(format!("m={m}: mode limits {li:.9} vs {ld:.9}, relative gap {rel:.3e}"));
        }
        for (tag, v) in [("integral", li), ("discrete", ld)] {
            if (v - expected).abs() >= 1e-6 {
                return fail(format!("m={m}: {tag} limit {v:.9} differs from {expected:.9}"));
            }
        }
        // [DERIVED] boundedness of the mode difference on |s| = 0.1.
        for k in 0..16 {
            let theta = 0.2 + k as f64 * std::f64::consts::TAU / 16.0;
            let s = Complex64::from_polar(0.1, theta);
            let vi = char1::zeta::zeta_logderiv(&int_ev, s).map_err(|e| e.to_string())?;
            let vd = char1::zeta::zeta_logderiv(&disc_ev, s).map_err(|e| e.to_string())?;
            let gap = (vi - vd).norm();
            if gap > 10.0 {
                return fail(format!("m={m}: mode gap {gap:.3} > 10 at s = {s}"));
            }
        }
    }
    Ok("limits agree with the phi-weighted value in both modes for m <= 12; circle gap <= 10".into())
}

/// Criterion 8: the sieve-built von Mangoldt partial sum at s = 2 matches
/// -zeta'(2)/zeta(2) from the Euler-Maclaurin oracle to 1e-4.
fn criterion_8() -> CheckResult {
    let profile = char1::zeta::mangoldt_profile(100_000).map_err(|e| e.to_string())?;
    let lambda_sum = profile.dirichlet_lambda_sum(2.0);
    // [DERIVED] independent oracle: zeta'(2)/zeta(2) via Euler-Maclaurin
    // with Bernoulli tail corrections (Hurwitz at q = 1).
    let zeta2 = char1::special::hurwitz_zeta(Complex64::new(2.0, 0.0), 1.0).map_err(|e| e.to_string())?;
    let dzeta2 = char1::special::hurwitz_zeta_ds(Complex64::new(2.0, 0.0), 1.0).map_err(|e| e.to_string())?;
    let ratio = (dzeta2 / zeta2).re;
    let gap = (lambda_sum + ratio).abs();
    if gap >= 1e-4 {
        return fail(format!("|sum + zeta'/zeta(2)| = {gap:.3e} >= 1e-4"));
    }
    Ok(format!("|sum_{{n<=1e5}} Lambda(n)/n^2 + zeta'(2)/zeta(2)| = {gap:.2e} < 1e-4"))
}

/// Criterion 9: the conductor-11 curve — eta coefficients, point counts,
/// the exact Dirichlet identity, positivity of N(n), and the exact
/// singularity catalog on [-2,2]^2.
fn criterion_9() -> CheckResult {
    use char1::elliptic::{
        dirichlet_identity_check, eta_coeffs, singularity_catalog, t_coeffs, CurveModel,
    };
    let start = Instant::now();
    let e = CurveModel::eleven_a();
    let a = eta_coeffs(100_000).map_err(|e| e.to_string())?;

    // [PAPER] a(1..7) = (1,-2,-1,2,1,2,-2).
    let want = [1i64, -2, -1, 2, 1, 2, -2];
    for (i, &w) in want.iter().enumerate() {
        if a.get(i as u64 + 1) != w {
            return fail(format!("a({}) = {}, want {w}", i + 1, a.get(i as u64 + 1)));
        }
    }
    // [PAPER] a(p) = p + 1 - N(p) at every good prime p <= 97.
    let sieve = char1::arith::Sieve::new(97);
    for &p in sieve.primes() {
        if p == 11 {
            continue;
        }
        let n_p = e.count_points_modp(p).map_err(|e| e.to_string())?;
        if a.get(p) != p as i64 + 1 - n_p as i64 {
            return fail(format!("a({p}) = {} but p+1-N(p) = {}", a.get(p), p as i64 + 1 - n_p as i64));
        }
    }
    // [DERIVED] t = a * (1/zeta(2s-1)) * (1/M) exactly through 1000.
    let t = t_coeffs(&e, &a, 100_000).map_err(|e| e.to_string())?;
    let report = dirichlet_identity_check(&e, &a, &t, 1000).map_err(|e| e.to_string())?;
    if !report.ok() {
        return fail(format!("Dirichlet identity: {report:?}"));
    }
    // [PAPER] N(n) = n + 1 - t(n) stays positive through 1e5.
    for n in 1..=100_000u64 {
        if n as i64 + 1 - t.get(n) <= 0 {
            return fail(format!("N({n}) = {} is not positive", n as i64 + 1 - t.get(n)));
        }
    }
    // [PAPER] catalog on [-2,2]^2: {0, 1, -1/2 (order 1), -3/2,
    // -1/2 +- pi*i/log 11} plus the conditional Re = -1/4 flag.
    let cat = singularity_catalog(&e, (-2.0, 2.0), (-2.0, 2.0));
    let spacing = std::f64::consts::PI / 11f64.ln();
    let mut want_pts = vec![
        (-1.5, 0.0, 1u32),
        (-0.5, -spacing, 1),
        (-0.5, 0.0, 1),
        (-0.5, spacing, 1),
        (0.0, 0.0, 1),
        (1.0, 0.0, 1),
    ];
    want_pts.sort_by(|a, b| a.partial_cmp(b).unwrap());
    let concrete: Vec<(f64, f64, u32)> = cat
        .iter()
        .filter(|s| !s.conditional)
        .map(|s| (s.re, s.im, s.order))
        .collect();
    if concrete.len() != want_pts.len() {
        return fail(format!("catalog has {} concrete singularities, want {}", concrete.len(), want_pts.len()));
    }
    for (got, want) in concrete.iter().zip(&want_pts) {
        if (got.0 - want.0).abs() > 1e-12 || (got.1 - want.1).abs() > 1e-12 || got.2 != want.2 {
            return fail(format!("catalog entry {got:?}, want {want:?}"));
        }
    }
    let flags: Vec<_> = cat.iter().filter(|s| s.conditional).collect();
    if flags.len() != 1 || (flags[0].re + 0.25).abs() > 1e-15 {
        return fail("conditional Re = -1/4 flag missing or misplaced".into());
    }
    let elapsed = start.elapsed().as_secs_f64();
    if elapsed >= 120.0 {
        return fail(format!("runtime {elapsed:.1}s exceeds the 120s budget"));
    }
    Ok(format!("coefficients, identity, positivity to 1e5, catalog exact ({elapsed:.1}s < 120s)"))
}

/// Criterion 10: the three property suites — semifield uniqueness,
/// prime/radical identity on the monoid corpus, field axioms for every
/// criterion-3 symmetry.
fn criterion_10() -> CheckResult {
    use char1::additive::{addition_from_symmetry, kmul, search_a, SearchMode};
    use char1::monoid::{ideals, prime_ideals, radical, PointedMonoid};
    use char1::semiring::{characteristic_of, enumerate_semifields, Characteristic, SemiringTable};

    // [DERIVED] among all finite semifields of size <= 5, exactly one has
    // idempotent addition: the boolean semifield.
    let mut idempotent = Vec::new();
    for size in 2..=5 {
        for t in enumerate_semifields(size).map_err(|e| e.to_string())? {
            if t.is_additively_idempotent() {
                idempotent.push(t);
            }
        }
    }
    if idempotent.len() != 1 || idempotent[0] != SemiringTable::boolean() {
        return fail(format!("idempotent semifields found: {}", idempotent.len()));
    }
    match characteristic_of(&idempotent[0]).map_err(|e| e.to_string())? {
        Characteristic::Combinatorial { n: 2, i: 1 } => {}
        other => return fail(format!("boolean characteristic classified as {other:?}")),
    }

    // [DERIVED] radical(I) equals the intersection of the primes
    // containing I, for every ideal of every corpus monoid of size <= 8.
    let mut corpus: Vec<PointedMonoid> = vec![PointedMonoid::f1()];
    for n in 1..=7 {
        corpus.push(PointedMonoid::group_monoid_cyclic(n));
    }
    for k in 1..=6 {
        corpus.push(PointedMonoid::free_nilpotent(k));
        corpus.push(PointedMonoid::free_idempotent_tail(k));
    }
    corpus.push(PointedMonoid::smash(
        &PointedMonoid::group_monoid_cyclic(2),
        &PointedMonoid::group_monoid_cyclic(3),
    ));
    corpus.push(PointedMonoid::smash(
        &PointedMonoid::free_nilpotent(2),
        &PointedMonoid::group_monoid_cyclic(2),
    ));
    corpus.retain(|m| m.size() <= 8);
    if corpus.len() < 10 {
        return fail(format!("corpus unexpectedly small: {} monoids", corpus.len()));
    }
    for m in &corpus {
        let primes = prime_ideals(m);
        for ideal in ideals(m) {
            let rad = radical(m, &ideal);
            let mut meet: Option<BTreeSet<usize>> = None;
            for p in primes.iter().filter(|p| p.is_superset(&ideal)) {
                meet = Some(match meet {
                    None => p.clone(),
                    Some(acc) => acc.intersection(p).copied().collect(),
                });
            }
            let meet = meet.unwrap_or_else(|| (0..m.size()).collect());
            if rad != meet {
                return fail(format!("radical mismatch on a monoid of size {}", m.size()));
            }
        }
    }

    // [DERIVED] every symmetry found by the criterion-3 search induces a
    // commutative, associative, distributive addition with 0 neutral —
    // re-verified here element by element. Bijective symmetries must give
    // additive inverses (a field); the idempotent n = 1 retraction must
    // instead satisfy 1 + 1 = 1.
    let mut laws = 0;
    for n in 1..=8usize {
        for s in search_a(n, SearchMode::Brute).map_err(|e| e.to_string())? {
            let law = addition_from_symmetry(&s).map_err(|e| format!("n={n}: {e}"))?;
            laws += 1;
            let mut seen = vec![false; n + 1];
            for &v in s.map() {
                seen[v] = true;
            }
            let bijective = seen.iter().all(|&b| b);
            if !bijective && law.add(1, 1) != 1 {
                return fail(format!("n={n}: retraction law violates 1 + 1 = 1"));
            }
            for a in 0..=n {
                if law.add(0, a) != a {
                    return fail(format!("n={n}: 0 is not neutral"));
                }
                if bijective && !(0..=n).any(|b| law.add(a, b) == 0) {
                    return fail(format!("n={n}: {a} has no additive inverse"));
                }
                for b in 0..=n {
                    if law.add(a, b) != law.add(b, a) {
                        return fail(format!("n={n}: addition not commutative"));
                    }
                    for c in 0..=n {
                        if law.add(law.add(a, b), c) != law.add(a, law.add(b, c)) {
                            return fail(format!("n={n}: addition not associative"));
                        }
                        if kmul(n, c, law.add(a, b)) != law.add(kmul(n, c, a), kmul(n, c, b)) {
                            return fail(format!("n={n}: multiplication not distributive"));
                        }
                    }
                }
            }
        }
    }
    Ok(format!(
        "boolean uniqueness at sizes <= 5; radical identity on {} monoids; field axioms for {laws} laws",
        corpus.len()
    ))
}
