//! Acceptance suite. Prints one PASS/FAIL line per criterion and exits
//! non-zero if any criterion fails.

use std::process::Command;
use std::time::{Duration, Instant};

use cdmass::algebra::{property_report, Identity};
use cdmass::operators::{DenseMatrix, SymMatrix};
use cdmass::sampling::{rng_from_seed, sub_seed};
use cdmass::spectral::{jacobi_eigen, shifted_spectrum, DEFAULT_CLUSTER_TOL, DEFAULT_JACOBI_TOL};
use cdmass::structure::{fit_theta_pattern, generic_alternative_element, inclusion_check, InclusionMode};
use cdmass::CdElement;
use rand::Rng;
use serde_json::Value;

const SEED: u64 = 20_240_601;

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(pass: bool, detail: impl Into<String>) -> Outcome {
    Outcome { pass, detail: detail.into() }
}

fn within(elapsed: Duration, limit_s: f64) -> bool {
    elapsed.as_secs_f64() < limit_s
}

/// Δ from raw coordinates: 2·sqrt(|a|²|b|² − (a·b)²) on the imaginary parts.
fn oracle_delta(x: &CdElement) -> f64 {
    let half = x.dim() / 2;
    let c = x.coords();
    let (a, b) = (&c[1..half], &c[half + 1..]);
    let dot = |u: &[f64], v: &[f64]| u.iter().zip(v).map(|(p, q)| p * q).sum::<f64>();
    2.0 * (dot(a, a) * dot(b, b) - dot(a, b).powi(2)).max(0.0).sqrt()
}

fn cli(args: &[&str]) -> (i32, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_cdmass")).args(args).output().expect("binary runs");
    (out.status.code().unwrap_or(-1), String::from_utf8(out.stdout).expect("utf-8 report"))
}

fn criterion_1() -> Outcome {
    let start = Instant::now();
    let mut failures = Vec::new();
    let mut commutator_witness = 0.0;
    for level in 0..=7 {
        let r = property_report(level, 1000, SEED + u64::from(level), 1e-10).expect("report");
        let comm = r.result(Identity::Commutative);
        if level <= 1 && !comm.holds {
            failures.push(format!("commutativity fails at level {level}"));
        }
        if level == 2 {
            commutator_witness = comm.witness.as_ref().map_or(0.0, |w| w.residual);
            if commutator_witness <= 1e-6 {
                failures.push("no commutativity witness above 1e-6 at level 2".into());
            }
        }
        for (identity, last) in [(Identity::Associative, 2), (Identity::Alternative, 3), (Identity::Flexible, 7)] {
            let holds = r.result(identity).holds;
            if holds != (level <= last) {
                failures.push(format!("{} at level {level}: holds = {holds}", identity.name()));
            }
        }
    }
    let elapsed = start.elapsed();
    if !within(elapsed, 10.0) {
        failures.push(format!("runtime {elapsed:.2?} exceeds 10 s"));
    }
    outcome(
        failures.is_empty(),
        if failures.is_empty() {
            format!("ladder levels 0-7 as expected; level-2 commutator witness {commutator_witness:.3e}; {elapsed:.2?}")
        } else {
            failures.join("; ")
        },
    )
}

fn criterion_2() -> Outcome {
    let start = Instant::now();
    let mut rng = rng_from_seed(SEED);
    let mut bad = 0;
    for level in 0..=3 {
        for _ in 0..100 {
            let x = CdElement::random(level, &mut rng).expect("element");
            let s = shifted_spectrum(&x, 1e-8).expect("spectrum");
            let scale = 1.0 + x.norm_sq();
            let ok = s.clusters.len() == 1
                && s.clusters[0].value.abs() <= 1e-8 * scale
                && s.clusters[0].multiplicity == 1 << level;
            bad += usize::from(!ok);
        }
    }
    let elapsed = start.elapsed();
    outcome(bad == 0 && within(elapsed, 5.0), format!("{bad}/400 spectra differ from {{(0, 2^n)}}; {elapsed:.2?}"))
}

/// Whether the clusters equal {-v x4, 0 x8, +v x4} to relative tolerance 1e-8.
fn matches_sedenion_form(x: &CdElement, v: f64) -> bool {
    let s = shifted_spectrum(x, DEFAULT_CLUSTER_TOL).expect("spectrum");
    let want = [(-v, 4), (0.0, 8), (v, 4)];
    s.clusters.len() == 3
        && s.clusters
            .iter()
            .zip(want)
            .all(|(c, (wv, wm))| c.multiplicity == wm && (c.value - wv).abs() <= 1e-8 * v.abs().max(1.0))
}

fn criterion_3() -> (Outcome, String) {
    let start = Instant::now();
    let mut rng = rng_from_seed(SEED + 3);
    let xs: Vec<CdElement> = (0..100).map(|_| CdElement::random(4, &mut rng).expect("element")).collect();
    let squared = xs.iter().filter(|x| matches_sedenion_form(x, oracle_delta(x).powi(2))).count();
    let linear = xs.iter().filter(|x| matches_sedenion_form(x, oracle_delta(x))).count();
    let elapsed = start.elapsed();
    (
        outcome(
            squared == 100 && within(elapsed, 10.0),
            format!("{squared}/100 spectra equal {{0 x8, +D^2 x4, -D^2 x4}}; {elapsed:.2?}"),
        ),
        format!("{linear}/100 spectra equal {{0 x8, +D x4, -D x4}}"),
    )
}

fn criterion_4() -> Outcome {
    let start = Instant::now();
    let mut included = 0;
    for level in 5..=7 {
        included +=
            inclusion_check(level, InclusionMode::Alternative, 20, SEED + u64::from(level), DEFAULT_CLUSTER_TOL)
                .expect("inclusion")
                .holds;
    }
    let generic = inclusion_check(5, InclusionMode::Generic, 50, SEED, DEFAULT_CLUSTER_TOL).expect("inclusion");
    // the stored witness seed must reproduce a violation by itself
    let witness_ok = generic.violation_seeds.first().is_some_and(|&seed| {
        let x = CdElement::random_seeded(5, seed).expect("element");
        let (x1, x2) = x.split().expect("split");
        let whole = shifted_spectrum(&x, DEFAULT_CLUSTER_TOL).expect("spectrum");
        [x1, x2].iter().any(|part| {
            let s = shifted_spectrum(part, DEFAULT_CLUSTER_TOL).expect("spectrum");
            s.clusters
                .iter()
                .any(|c| whole.clusters.iter().all(|w| (w.value - c.value).abs() > DEFAULT_CLUSTER_TOL * whole.scale()))
        })
    });
    let elapsed = start.elapsed();
    outcome(
        included == 60 && witness_ok && within(elapsed, 120.0),
        format!(
            "alternative entries {included}/60 include; generic level 5: {} violations, witness reproduces = {witness_ok}; {elapsed:.2?}",
            generic.violation_seeds.len()
        ),
    )
}

fn criterion_5() -> (Outcome, String) {
    let mut lines = Vec::new();
    let mut structural_ok = true;
    let mut fit_ok = true;
    let mut diag = Vec::new();
    for level in 5..=7u32 {
        let (mut even, mut fours, mut counts, mut fits, mut fits_eigen) = (0, 0, 0, 0, 0);
        for trial in 0..20 {
            let draw =
                generic_alternative_element(level, sub_seed(SEED + 5, u64::from(level) * 100 + trial)).expect("draw");
            let s = &draw.spectrum;
            let (sym, _) = s.negation_symmetry(s.threshold);
            even += usize::from(sym);
            fours +=
                usize::from(s.clusters.iter().filter(|c| c.value.abs() > s.threshold).all(|c| c.multiplicity % 4 == 0));
            counts += usize::from(s.nonnegative().len() == 1 << (level - 3));
            let d = oracle_delta(&draw.element);
            let k = (level - 4) as usize;
            let fit = fit_theta_pattern(s, d, k).expect("fit");
            fits += usize::from(fit.residual <= 1e-6 * d * d);
            let eig = fit_theta_pattern(s, d.sqrt(), k).expect("fit");
            fits_eigen += usize::from(eig.residual <= 1e-6 * d);
        }
        structural_ok &= even == 20 && fours == 20 && counts == 20;
        fit_ok &= fits >= 18;
        lines.push(format!("level {level}: even {even}/20, x4 {fours}/20, count {counts}/20, fit {fits}/20"));
        diag.push(format!("level {level}: {fits_eigen}/20 with amplitude sqrt(D)"));
    }
    (
        outcome(structural_ok && fit_ok, lines.join("; ")),
        format!("cos-sum fit at eigenvalue scale: {}", diag.join("; ")),
    )
}

fn random_symmetric(n: usize, seed: u64) -> SymMatrix {
    let mut rng = rng_from_seed(seed);
    let mut e = vec![0.0; n * n];
    for i in 0..n {
        for j in i..n {
            let v: f64 = rng.gen_range(-1.0..1.0);
            e[i * n + j] = v;
            e[j * n + i] = v;
        }
    }
    SymMatrix::from_dense(DenseMatrix::new(n, e).expect("matrix")).expect("symmetric")
}

fn criterion_6() -> Outcome {
    let mut worst = (0.0f64, 0.0f64, 0.0f64);
    let mut count = 0;
    for n in [16usize, 64, 128] {
        for m in 0..50 {
            let a = random_symmetric(n, sub_seed(SEED + 6, (n * 100 + m) as u64));
            let s = jacobi_eigen(&a, DEFAULT_JACOBI_TOL).expect("converges");
            let dense = a.as_dense();
            let frob2: f64 = dense.entries().iter().map(|v| v * v).sum();
            let scale = 1.0 + frob2.sqrt();
            let tr_err =
                (s.eigenvalues.iter().sum::<f64>() - (0..n).map(|i| dense.get(i, i)).sum::<f64>()).abs() / scale;
            let fr_err = (s.eigenvalues.iter().map(|l| l * l).sum::<f64>() - frob2).abs() / (scale * scale);
            let mut res: f64 = 0.0;
            for (j, lambda) in s.eigenvalues.iter().enumerate() {
                let v = s.eigenvectors.column(j);
                let r2: f64 = (0..n)
                    .map(|i| {
                        let av: f64 = (0..n).map(|k| dense.get(i, k) * v[k]).sum();
                        (av - lambda * v[i]).powi(2)
                    })
                    .sum();
                res = res.max(r2.sqrt() / scale);
            }
            worst = (worst.0.max(tr_err), worst.1.max(fr_err), worst.2.max(res));
            count += 1;
        }
    }
    outcome(
        worst.0 <= 1e-9 && worst.1 <= 1e-9 && worst.2 <= 1e-8,
        format!(
            "{count} matrices; worst scaled trace {:.1e}, Frobenius {:.1e}, residual {:.1e}",
            worst.0, worst.1, worst.2
        ),
    )
}

fn first_formula(json: &str) -> Value {
    let v: Value = serde_json::from_str(json).expect("json report");
    v["results"]["formulas"][0].clone()
}

fn criterion_7() -> Outcome {
    let start = Instant::now();
    let (code, out) = cli(&["mass", "--which", "formula16"]);
    let elapsed = start.elapsed();
    let f = first_formula(&out);
    let digit = |key: &str, want: f64| {
        f[key].as_str().and_then(|s| s.parse::<f64>().ok()).is_some_and(|v| (v - want).abs() <= 1.000001e-5)
    };
    let pass = code == 0
        && digit("ratio_display", 1.00033)
        && digit("sigma_display", 0.00035)
        && f["verdict"] == "consistent"
        && f["z"] == 2.0
        && within(elapsed, 1.0);
    outcome(
        pass,
        format!(
            "ratio {} sigma {} verdict {} exit {code}; {elapsed:.2?}",
            f["ratio_display"], f["sigma_display"], f["verdict"]
        ),
    )
}

fn criterion_8() -> Outcome {
    let (code, out) = cli(&["mass", "--which", "vector"]);
    let f = first_formula(&out);
    outcome(
        code == 0 && f["verdict"] == "tension",
        format!("ratio {} sigma {} verdict {} exit {code}", f["ratio_display"], f["sigma_display"], f["verdict"]),
    )
}

fn criterion_9() -> Outcome {
    let (code, out) = cli(&["dimension"]);
    let v: Value = serde_json::from_str(&out).expect("json report");
    let cases = v["results"]["cases"].as_array().cloned().unwrap_or_default();
    let find =
        |p: u64, l: u64| cases.iter().find(|c| c["plet_size"] == p && c["level"] == l).cloned().unwrap_or(Value::Null);
    let (a, b, c) = (find(8, 6), find(16, 7), find(25, 8));
    let pass = code == 0
        && a["matches"] == true
        && b["matches"] == true
        && c["matches"] == false
        && c["summary"].as_str().is_some_and(|s| s.contains("32 > 25"));
    outcome(pass, format!("{} | {} | {}", a["summary"], b["summary"], c["summary"]))
}

fn criterion_10() -> Outcome {
    let seed = SEED.to_string();
    let runs: Vec<Vec<&str>> = vec![
        vec!["props", "--level", "2", "--seed", &seed],
        vec!["props", "--level", "4", "--seed", &seed, "--trials", "200"],
        vec!["spectrum", "--level", "3", "--seed", &seed, "--mode", "generic"],
        vec!["spectrum", "--level", "4", "--seed", &seed, "--mode", "generic"],
        vec!["spectrum", "--level", "6", "--seed", &seed],
        vec!["inclusion", "--level", "5", "--seed", &seed],
        vec!["inclusion", "--level", "5", "--seed", &seed, "--mode", "generic", "--trials", "50"],
        vec!["dimension"],
        vec!["mass", "--which", "all"],
        vec!["table", "--level", "4"],
    ];
    let mut differing = Vec::new();
    for args in &runs {
        let (c1, o1) = cli(args);
        let (c2, o2) = cli(args);
        if c1 != c2 || o1 != o2 || o1.is_empty() {
            differing.push(args.join(" "));
        }
    }
    outcome(
        differing.is_empty(),
        if differing.is_empty() {
            format!("{} commands byte-identical across two runs", runs.len())
        } else {
            format!("differ: {}", differing.join(", "))
        },
    )
}

fn main() {
    let (c3, diag3) = criterion_3();
    let (c5, diag5) = criterion_5();
    let results = [
        ("1 identity ladder", criterion_1()),
        ("2 division-algebra spectra", criterion_2()),
        ("3 sedenion closed form", c3),
        ("4 spectral inclusion", criterion_4()),
        ("5 degeneracy, evenness and cos-sum fit", c5),
        ("6 eigensolver oracle", criterion_6()),
        ("7 headline ratio", criterion_7()),
        ("8 vector analogue tension", criterion_8()),
        ("9 dimension count", criterion_9()),
        ("10 determinism", criterion_10()),
    ];
    for (name, o) in &results {
        println!("[{}] criterion {name}: {}", if o.pass { "PASS" } else { "FAIL" }, o.detail);
    }
    println!("[diagnostic] criterion 3: {diag3}");
    println!("[diagnostic] criterion 5: {diag5}");
    let failed = results.iter().filter(|(_, o)| !o.pass).count();
    println!("acceptance: {} passed, {failed} failed", results.len() - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
