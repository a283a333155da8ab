//! Acceptance suite: one test per shipping criterion, each printing a
//! PASS line with the measured numbers (run with `--nocapture` to see them
//! on success; failures carry the same detail in the panic message).
//!
//! Empirical tolerances live in tests/golden/golden.json, computed once and
//! frozen; re-generate with
//! `UPDATE_GOLDEN=1 cargo test --test acceptance -- --ignored regenerate`.

use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, Mutex, OnceLock};

use harperdisc_core::asymptotics::{
    approx_a_even, approx_a_odd, mu_nu, sigma_prime_zero_asym, sigma_prime_zero_asym_p1,
    thouless_w, uniform_center,
};
use harperdisc_core::bands::{
    band_density_check, cluster_stats, compute_bands_escalating, hausdorff_wd, SpectrumSummary,
};
use harperdisc_core::exactdisc::{
    a_even_exact, a_odd_exact, build_model, last_wilkinson_sum, s_direct, s_regrouped, sigma_det,
    sigma_prime_zero_exact, sigma_transfer_default, zeros_of_sigma, FluxRatio,
};
use harperdisc_core::numerics::default_precision;
use harperdisc_core::specfun::{catalan, elliptic_k_prime, eta_const, euler_constant};
use harperdisc_core::Real;

#[derive(serde::Serialize, serde::Deserialize)]
struct Golden {
    /// absolute error of the P=1 expansion at Q=401
    eq16_abs_err_q401: f64,
    /// per-(P,s) absolute error of the general expansion at the largest
    /// tested Q of each fixed-s subsequence
    eq15_abs_err: BTreeMap<String, f64>,
    /// relative error of the near-center uniform form at Q=201, x=t/Q
    uniform_center_rel: BTreeMap<String, f64>,
    /// relative error of ln|Sigma(1)| against 2Q mu + ln 2 at Q=201
    log_magnitude_rel: f64,
    /// measured W*Q trajectory for P=1 at Q = 101, 201, 301 (informational)
    thouless_wq: Vec<f64>,
    /// measured relative deviation of the exact centermost width at Q=301
    /// from 2 pi^2/(Q ln Q) (informational; the criterion pins 25%)
    centermost_rel_vs_asym: f64,
    /// band centers counted in [1.0, 1.5] at P=1, Q=301 (informational)
    dos_window_counted: u64,
}

fn golden() -> &'static Golden {
    static G: OnceLock<Golden> = OnceLock::new();
    G.get_or_init(|| {
        let raw = std::fs::read_to_string(concat!(
            env!("CARGO_MANIFEST_DIR"),
            "/tests/golden/golden.json"
        ))
        .expect("golden file present");
        serde_json::from_str(&raw).expect("golden file parses")
    })
}

/// Band structures shared across criteria (10, 11, 12, 14 reuse them).
fn bands_for(p: u64, q: u64) -> Arc<SpectrumSummary> {
    static CACHE: OnceLock<Mutex<HashMap<(u64, u64), Arc<SpectrumSummary>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(s) = cache.lock().unwrap().get(&(p, q)) {
        return s.clone();
    }
    let s = Arc::new(
        compute_bands_escalating(p, q, 0, (16 * q).max(256) as u32)
            .unwrap_or_else(|e| panic!("bands for {p}/{q}: {e}")),
    );
    cache.lock().unwrap().insert((p, q), s.clone());
    s
}

fn f(v: &Real) -> f64 {
    v.to_f64()
}

#[test]
fn criterion_01_exact_small_cases() {
    let start = std::time::Instant::now();
    let bits = 128;
    let model = build_model(1, 3, bits).unwrap();
    let one = Real::one(bits);

    // Sigma(1) = -5 on both routes
    let det = sigma_det(&model, &one).unwrap();
    let tr = sigma_transfer_default(&model, &one);
    let m5 = Real::from_i64(-5, bits);
    assert!((&det.sigma - &m5).abs() < Real::parse("1e-30", bits).unwrap());
    assert!((&tr.sigma - &m5).abs() < Real::parse("1e-30", bits).unwrap());

    // Sigma'(0) = -6 on both routes and by the closed form
    let m6 = Real::from_i64(-6, bits);
    let det0 = sigma_det(&model, &Real::zero(bits)).unwrap();
    let tr0 = sigma_transfer_default(&model, &Real::zero(bits));
    let closed = sigma_prime_zero_exact(model.flux()).unwrap();
    for v in [&det0.sigma_prime, &tr0.sigma_prime, &closed.with_precision(bits)] {
        assert!((v - &m6).abs() < Real::parse("1e-30", bits).unwrap(), "{v:?}");
    }

    // zeros are -sqrt6, 0, sqrt6
    let zeros = zeros_of_sigma(&model).unwrap();
    let s6 = Real::from_u64(6, bits).sqrt();
    assert!((&zeros[0] + &s6).abs() < Real::parse("1e-18", bits).unwrap());
    assert!(zeros[1].is_zero());
    assert!((&zeros[2] - &s6).abs() < Real::parse("1e-18", bits).unwrap());

    // Last-Wilkinson sum = 1/3 within 1e-25 at 128 bits
    let lw = last_wilkinson_sum(&model).unwrap();
    let err = (&lw - &Real::from_ratio(1, 3, bits)).abs();
    assert!(err < Real::parse("1e-25", bits).unwrap(), "LW err {err:?}");

    let dt = start.elapsed();
    assert!(dt.as_secs_f64() < 1.0, "runtime {dt:?} exceeds 1 s");
    println!(
        "criterion 01 (exact small cases P=1 Q=3): PASS — LW err {:.3e}, {:.3} s",
        f(&err),
        dt.as_secs_f64()
    );
}

#[test]
fn criterion_02_regrouping_identity() {
    use rayon::prelude::*;
    let start = std::time::Instant::now();
    let mut cases = Vec::new();
    for p in [1u64, 2, 3, 5] {
        for q in (3..=99u64).step_by(2) {
            if let Ok(flux) = FluxRatio::new(p, q) {
                let (s, r) = flux.decomposition().unwrap();
                if r >= 1 && s < q {
                    cases.push((p, q));
                }
            }
        }
    }
    let worst: f64 = cases
        .par_iter()
        .map(|&(p, q)| {
            let flux = FluxRatio::new(p, q).unwrap();
            let a = s_direct(&flux).unwrap();
            let b = s_regrouped(&flux).unwrap();
            let bits = a.precision_bits();
            let diff = (&a - &b).abs();
            let tol = Real::exp2i(-((bits / 2) as i64), bits);
            assert!(diff < tol, "P={p} Q={q}: diff {diff:?} vs tol {tol:?}");
            // normalized defect for reporting
            f(&diff) * 2f64.powi((bits / 2) as i32)
        })
        .reduce(|| 0.0, f64::max);
    let dt = start.elapsed();
    assert!(dt.as_secs_f64() < 60.0, "runtime {dt:?} exceeds 1 min");
    println!(
        "criterion 02 (regrouped sum is exact, {} cases): PASS — worst diff {:.2e} of tolerance, {:.2} s",
        cases.len(),
        worst,
        dt.as_secs_f64()
    );
}

#[test]
fn criterion_03_derivative_sum_identity() {
    use rayon::prelude::*;
    let start = std::time::Instant::now();
    let mut cases = Vec::new();
    for q in (3..=99u64).step_by(2) {
        for p in 1..q {
            if FluxRatio::new(p, q).is_ok() {
                cases.push((p, q));
            }
        }
    }
    let tol = 1e-20f64;
    let worst: f64 = cases
        .par_iter()
        .map(|&(p, q)| {
            let model = build_model(p, q, 256).unwrap();
            let lw = last_wilkinson_sum(&model).unwrap();
            let err = f(&(&lw - &Real::from_u64(q, 256).recip()).abs());
            assert!(err < tol, "P={p} Q={q}: err {err:e}");
            err
        })
        .reduce(|| 0.0, f64::max);
    let dt = start.elapsed();
    assert!(dt.as_secs_f64() < 600.0, "runtime {dt:?} exceeds 10 min");
    println!(
        "criterion 03 (derivative-sum identity, {} (P,Q) pairs): PASS — worst err {worst:.2e}, {:.1} s",
        cases.len(),
        dt.as_secs_f64()
    );
}

#[test]
fn criterion_04_eta_zero_identity() {
    let start = std::time::Instant::now();
    let bits = 192;
    let target = Real::parse("1e-15", bits).unwrap();
    let eta0 = eta_const(&Real::zero(bits), &target).unwrap();
    let closed = &(&Real::from_u64(16, bits).ln() + &euler_constant(bits)) - &Real::pi(bits);
    let err = (&eta0.value - &closed).abs();
    assert!(err < Real::parse("1e-14", bits).unwrap(), "err {err:?}");
    let dt = start.elapsed();
    assert!(dt.as_secs_f64() < 10.0, "runtime {dt:?} exceeds 10 s");
    println!(
        "criterion 04 (eta(0) = ln16 + C - pi): PASS — err {:.2e}, cutoff M={}, {:.2} s",
        f(&err),
        eta0.cutoff_m,
        dt.as_secs_f64()
    );
}

fn p1_abs_err(q: u64) -> f64 {
    let flux = FluxRatio::new(1, q).unwrap();
    let exact = sigma_prime_zero_exact(&flux).unwrap();
    let asym = sigma_prime_zero_asym_p1(q, 192).unwrap();
    f(&(&exact - &asym).abs())
}

#[test]
fn criterion_05_p1_expansion_error_decay() {
    let start = std::time::Instant::now();
    let e41 = p1_abs_err(41);
    let e401 = p1_abs_err(401);
    assert!(e401 < e41, "no decay: err(41)={e41:e} err(401)={e401:e}");
    let threshold = golden().eq16_abs_err_q401;
    assert!(
        e401 < threshold,
        "err(401)={e401:e} above frozen threshold {threshold:e}"
    );
    let dt = start.elapsed();
    assert!(dt.as_secs_f64() < 60.0);
    println!(
        "criterion 05 (P=1 expansion, o(1) decay): PASS — err 41->{e41:.3e}, 401->{e401:.3e} (< {threshold:.2e}), {:.2} s",
        dt.as_secs_f64()
    );
}

fn fixed_s_subsequences(p: u64) -> Vec<(u64, [u64; 3])> {
    match p {
        2 => vec![(1, [17, 49, 97]), (3, [11, 43, 83]), (5, [13, 45, 85]), (7, [15, 47, 87])],
        3 => vec![(1, [13, 49, 97]), (5, [17, 53, 89]), (7, [19, 43, 91]), (11, [23, 47, 95])],
        _ => unreachable!(),
    }
}

#[test]
fn criterion_06_per_s_error_decay() {
    let start = std::time::Instant::now();
    for p in [2u64, 3] {
        for (s, qs) in fixed_s_subsequences(p) {
            let mut errs = Vec::new();
            for q in qs {
                let flux = FluxRatio::new(p, q).unwrap();
                assert_eq!(flux.decomposition().unwrap().0, s, "subsequence s value");
                let exact = sigma_prime_zero_exact(&flux).unwrap();
                let asym = sigma_prime_zero_asym(&flux).unwrap();
                errs.push(f(&(&exact - &asym).abs()));
            }
            assert!(
                errs[0] > errs[1] && errs[1] > errs[2],
                "P={p} s={s}: errors not monotone: {errs:?}"
            );
            let key = format!("P{p}_s{s}");
            let threshold = golden().eq15_abs_err[&key];
            assert!(
                errs[2] < threshold,
                "P={p} s={s}: err {:.3e} above frozen {threshold:.3e}",
                errs[2]
            );
        }
    }
    let dt = start.elapsed();
    assert!(dt.as_secs_f64() < 300.0, "runtime {dt:?} exceeds 5 min");
    println!(
        "criterion 06 (fixed-s error decay, P=2 and P=3): PASS — {:.2} s",
        dt.as_secs_f64()
    );
}

#[test]
fn criterion_07_a_factor_error_order() {
    let start = std::time::Instant::now();
    let rel_err_even = |p: u64, q: u64, k: u64| {
        let flux = FluxRatio::new(p, q).unwrap();
        let exact = a_even_exact(&flux, k).unwrap();
        let approx = approx_a_even(&flux, k).unwrap();
        f(&((&approx - &exact).abs() / &exact.abs()))
    };
    let rel_err_odd = |p: u64, q: u64, k: u64| {
        let flux = FluxRatio::new(p, q).unwrap();
        let exact = a_odd_exact(&flux, k).unwrap();
        let approx = approx_a_odd(&flux, k).unwrap();
        f(&((&approx - &exact).abs() / &exact.abs()))
    };
    // Q doubling along fixed-s subsequences: 101 -> 201 (s=1), 103 -> 207 (s=7)
    let mut ratios = Vec::new();
    ratios.push(("P1 even k=0", rel_err_even(1, 201, 0) / rel_err_even(1, 101, 0)));
    ratios.push(("P1 odd k=1", rel_err_odd(1, 201, 1) / rel_err_odd(1, 101, 1)));
    ratios.push(("P2 even k=1", rel_err_even(2, 207, 1) / rel_err_even(2, 103, 1)));
    ratios.push(("P2 odd k=1", rel_err_odd(2, 207, 1) / rel_err_odd(2, 103, 1)));
    // fixed-s doubling for P=3: 97 and 193 are both 1 mod 12
    ratios.push(("P3 even k=2", rel_err_even(3, 193, 2) / rel_err_even(3, 97, 2)));
    for (name, r) in &ratios {
        assert!(
            (0.15..0.4).contains(r),
            "{name}: halving ratio {r} outside [0.15, 0.4]"
        );
    }
    let dt = start.elapsed();
    assert!(dt.as_secs_f64() < 60.0);
    println!(
        "criterion 07 (A-factor error order 1/Q^2): PASS — ratios {:?}, {:.2} s",
        ratios.iter().map(|(_, r)| (*r * 1000.0).round() / 1000.0).collect::<Vec<_>>(),
        dt.as_secs_f64()
    );
}

#[test]
fn criterion_08_nu_derivative_elliptic_identity() {
    let start = std::time::Instant::now();
    let bits = 256;
    let h = Real::parse("1e-6", bits).unwrap();
    let mut worst = 0.0f64;
    for lam_str in ["0.1", "0.3", "0.5", "0.7", "0.9"] {
        let lam = Real::parse(lam_str, bits).unwrap();
        let up = mu_nu(&(&lam + &h)).unwrap();
        let dn = mu_nu(&(&lam - &h)).unwrap();
        let fd = &(&up.nu - &dn.nu) / &(&Real::from_u64(2, bits) * &h);
        let expect = -&(&elliptic_k_prime(&lam).unwrap() / &Real::pi(bits));
        let err = f(&(&fd - &expect).abs());
        assert!(err < 1e-8, "lambda={lam_str}: |dnu/dlambda - (-K'/pi)| = {err:e}");
        worst = worst.max(err);
    }
    let dt = start.elapsed();
    assert!(dt.as_secs_f64() < 60.0);
    println!(
        "criterion 08 (dnu/dlambda = -K'(lambda)/pi at 5 points): PASS — worst {worst:.2e}, {:.2} s",
        dt.as_secs_f64()
    );
}

#[test]
fn criterion_09_uniform_asymptotics() {
    let start = std::time::Instant::now();
    let q = 201u64;
    let bits = default_precision(q);
    let model = build_model(1, q, bits).unwrap();

    // (a) near-center form at x = t/Q
    for t_str in ["0.5", "1", "2"] {
        let t = Real::parse(t_str, bits).unwrap();
        let x = &t / &Real::from_u64(q, bits);
        let exact = sigma_det(&model, &x).unwrap().sigma;
        let asym = uniform_center(q, &x);
        let rel = f(&((&exact - &asym).abs() / &exact.abs()));
        assert!(rel < 0.05, "t={t_str}: rel err {rel:e} above 5%");
        let frozen = golden().uniform_center_rel[&format!("t{t_str}")];
        assert!(rel < frozen, "t={t_str}: rel {rel:e} above frozen {frozen:e}");
    }

    // (b) log-magnitude away from center at x = 1
    let exact = sigma_det(&model, &Real::one(bits)).unwrap().sigma;
    let mn = mu_nu(&Real::from_ratio(1, 4, 256)).unwrap();
    let rhs = &(&Real::from_u64(2 * q, 256) * &mn.mu) + &Real::from_u64(2, 256).ln();
    let lhs = exact.abs().ln().with_precision(256);
    let rel = f(&((&lhs - &rhs).abs() / &rhs.abs()));
    assert!(rel < 0.02, "log-magnitude rel err {rel:e} above 2%");
    assert!(rel < golden().log_magnitude_rel, "above frozen threshold");

    let dt = start.elapsed();
    assert!(dt.as_secs_f64() < 300.0);
    println!(
        "criterion 09 (uniform asymptotics at Q=201): PASS — log-magnitude rel {rel:.2e}, {:.2} s",
        dt.as_secs_f64()
    );
}

#[test]
fn criterion_10_thouless_trend() {
    let start = std::time::Instant::now();
    let bits = 192;
    let target = f(&(&(&Real::from_u64(32, bits) * &catalan(bits)) / &Real::pi(bits)));
    let mut devs = Vec::new();
    let mut wqs = Vec::new();
    for q in [101u64, 201, 301] {
        let s = bands_for(1, q);
        let wq = f(&(&s.total_width * &Real::from_u64(q, s.bands[0].lo.precision_bits())));
        wqs.push(wq);
        devs.push((wq - target).abs());
    }
    assert!(
        devs[0] > devs[1] && devs[1] > devs[2],
        "W*Q not approaching {target}: {wqs:?}"
    );
    let final_rel = devs[2] / target;
    assert!(final_rel < 0.10, "final deviation {final_rel:e} above 10%");
    // thouless_w(q) agrees with target/q by construction; spot check
    let tw = thouless_w(301, bits);
    assert!((f(&tw) - target / 301.0).abs() < 1e-12);
    let dt = start.elapsed();
    assert!(dt.as_secs_f64() < 1800.0, "runtime {dt:?} exceeds 30 min");
    println!(
        "criterion 10 (Thouless trend): PASS — W*Q = {wqs:?} -> {target:.5}, final rel dev {final_rel:.3}, {:.1} s",
        dt.as_secs_f64()
    );
}

#[test]
fn criterion_11_central_band_width() {
    // The criterion compares the exact centermost width at P=1, Q=301
    // against 2 pi^2/(Q ln Q) at 25% relative. The measured deviation is
    // ~40%: the asymptotic law's "ln Q" is the leading order of an
    // effective logarithm ln(16Q/pi) + C (+ pi/2 from the self-consistent
    // edge condition), whose constant terms are not negligible until
    // ln Q >> 4. The comparison is asserted as specified; the failure is
    // expected and documented, and the measured value is recorded in the
    // golden file. Against the effective-log form the agreement is ~16%.
    let start = std::time::Instant::now();
    let q = 301u64;
    let s = bands_for(1, q);
    let bits = 192;
    let width = s.centermost_width.with_precision(bits);
    let pi = Real::pi(bits);
    let q_r = Real::from_u64(q, bits);
    let asym = &(&(&pi * &pi) * &Real::from_u64(2, bits)) / &(&q_r * &q_r.ln());
    let rel = f(&((&width - &asym).abs() / &asym));

    // effective-logarithm diagnostic for the failure message
    let eff_log = &(&(&Real::from_u64(16, bits) * &q_r) / &pi).ln() + &euler_constant(bits);
    let asym_eff = &(&(&pi * &pi) * &Real::from_u64(2, bits)) / &(&q_r * &eff_log);
    let rel_eff = f(&((&width - &asym_eff).abs() / &asym_eff));

    let dt = start.elapsed();
    println!(
        "criterion 11 (central band width): width {:.6e}, 2pi^2/(Q lnQ) {:.6e}, rel {rel:.4}; \
         effective-log form rel {rel_eff:.4}; {:.1} s",
        f(&width),
        f(&asym),
        dt.as_secs_f64()
    );
    assert!(
        rel <= 0.25,
        "exact centermost width {:.6e} deviates {:.1}% from 2pi^2/(Q lnQ) = {:.6e} \
         (> 25%); expected defect of the leading-order law at Q=301 — the effective \
         logarithm ln(16Q/pi)+C makes it {:.1}%; see docs/decision notes",
        f(&width),
        rel * 100.0,
        f(&asym),
        rel_eff * 100.0
    );
}

#[test]
fn criterion_12_hausdorff_diagnostic() {
    let start = std::time::Instant::now();
    for d_str in ["0.25", "0.5", "0.75"] {
        let mut prev: Option<f64> = None;
        for q in [41u64, 101, 201] {
            let s = bands_for(1, q);
            let d = Real::parse(d_str, s.bands[0].lo.precision_bits()).unwrap();
            let wd = f(&hausdorff_wd(&s, &d).unwrap());
            if let Some(p) = prev {
                assert!(wd < p, "W({d_str}) not decreasing: {wd} !< {p} at Q={q}");
            }
            prev = Some(wd);
        }
    }
    let dt = start.elapsed();
    assert!(dt.as_secs_f64() < 1800.0);
    println!(
        "criterion 12 (W(d) decreasing across Q = 41, 101, 201): PASS — {:.1} s",
        dt.as_secs_f64()
    );
}

#[test]
fn criterion_13_cluster_structure() {
    let start = std::time::Instant::now();
    let s = bands_for(3, 41);
    let stats = cluster_stats(&s).unwrap();
    let central_id = s.bands[20].cluster_id; // band containing 0 (1-based 21)
    for c in &stats {
        if c.cluster_id == central_id {
            assert_eq!(c.band_count, 5, "central cluster must have s=5 bands");
        } else {
            assert_eq!(c.band_count, 3, "side clusters must have P=3 bands");
        }
    }
    let dt = start.elapsed();
    assert!(dt.as_secs_f64() < 60.0);
    println!(
        "criterion 13 (P=3 Q=41 clusters: 5 central, 3 elsewhere, {} clusters): PASS — {:.2} s",
        stats.len(),
        dt.as_secs_f64()
    );
}

#[test]
fn criterion_14_dos_window_count() {
    let start = std::time::Instant::now();
    let s = bands_for(1, 301);
    let bits = 256;
    let check = band_density_check(
        &s,
        &Real::one(bits),
        &Real::parse("1.5", bits).unwrap(),
    )
    .unwrap();
    let predicted = f(&check.predicted);
    let dev = (check.counted as f64 - predicted).abs();
    assert!(
        dev <= 2.0,
        "counted {} vs predicted {predicted:.3}: off by {dev:.2} bands",
        check.counted
    );
    let dt = start.elapsed();
    println!(
        "criterion 14 (DOS window count [1.0, 1.5] at Q=301): PASS — counted {}, predicted {predicted:.3}, {:.1} s",
        check.counted,
        dt.as_secs_f64()
    );
}

/// Regenerates tests/golden/golden.json from the current implementation.
#[test]
#[ignore = "writes the golden file; run with UPDATE_GOLDEN=1"]
fn regenerate_golden_thresholds() {
    if std::env::var("UPDATE_GOLDEN").is_err() {
        eprintln!("set UPDATE_GOLDEN=1 to write the golden file");
        return;
    }
    let mut eq15 = BTreeMap::new();
    for p in [2u64, 3] {
        for (s, qs) in fixed_s_subsequences(p) {
            let q = qs[2];
            let flux = FluxRatio::new(p, q).unwrap();
            let exact = sigma_prime_zero_exact(&flux).unwrap();
            let asym = sigma_prime_zero_asym(&flux).unwrap();
            let err = f(&(&exact - &asym).abs());
            eq15.insert(format!("P{p}_s{s}"), err * 1.25);
        }
    }
    let mut uc = BTreeMap::new();
    let q = 201u64;
    let bits = default_precision(q);
    let model = build_model(1, q, bits).unwrap();
    for t_str in ["0.5", "1", "2"] {
        let t = Real::parse(t_str, bits).unwrap();
        let x = &t / &Real::from_u64(q, bits);
        let exact = sigma_det(&model, &x).unwrap().sigma;
        let asym = uniform_center(q, &x);
        let rel = f(&((&exact - &asym).abs() / &exact.abs()));
        uc.insert(format!("t{t_str}"), rel * 2.0);
    }
    let exact = sigma_det(&model, &Real::one(bits)).unwrap().sigma;
    let mn = mu_nu(&Real::from_ratio(1, 4, 256)).unwrap();
    let rhs = &(&Real::from_u64(2 * q, 256) * &mn.mu) + &Real::from_u64(2, 256).ln();
    let lhs = exact.abs().ln().with_precision(256);
    let log_rel = f(&((&lhs - &rhs).abs() / &rhs.abs())) * 2.0;

    let bits192 = 192;
    let target = f(&(&(&Real::from_u64(32, bits192) * &catalan(bits192)) / &Real::pi(bits192)));
    let mut wqs = Vec::new();
    for q in [101u64, 201, 301] {
        let s = bands_for(1, q);
        wqs.push(f(
            &(&s.total_width * &Real::from_u64(q, s.bands[0].lo.precision_bits()))
        ));
    }
    let _ = target;

    let s301 = bands_for(1, 301);
    let w = s301.centermost_width.with_precision(bits192);
    let pi = Real::pi(bits192);
    let q_r = Real::from_u64(301, bits192);
    let asym = &(&(&pi * &pi) * &Real::from_u64(2, bits192)) / &(&q_r * &q_r.ln());
    let centermost_rel = f(&((&w - &asym).abs() / &asym));
    let window = band_density_check(
        &s301,
        &Real::one(256),
        &Real::parse("1.5", 256).unwrap(),
    )
    .unwrap();

    let g = Golden {
        eq16_abs_err_q401: p1_abs_err(401) * 1.25,
        eq15_abs_err: eq15,
        uniform_center_rel: uc,
        log_magnitude_rel: log_rel,
        thouless_wq: wqs,
        centermost_rel_vs_asym: centermost_rel,
        dos_window_counted: window.counted,
    };
    let path = concat!(env!("CARGO_MANIFEST_DIR"), "/tests/golden/golden.json");
    std::fs::write(path, serde_json::to_string_pretty(&g).unwrap()).unwrap();
    println!("golden thresholds written to {path}");
}
