//! Acceptance criteria. Prints one `pass`/`FAIL` line per criterion and
//! exits nonzero if any fails.

use std::process::ExitCode;

use veronese::verify::{self, Report};
use veronese_core::{Engine, Result, WeightWindow};

/// Partitions of `t` into parts from `2..=d`, counted by direct recursion.
fn restricted_partitions(t: u32, largest: u32) -> u64 {
    if t == 0 {
        return 1;
    }
    (2..=largest.min(t))
        .map(|g| restricted_partitions(t - g, g))
        .sum()
}

type Outcome = std::result::Result<u64, String>;
type Criterion<'a> = (&'static str, Box<dyn Fn() -> Outcome + 'a>);

fn all_pass(reports: Result<Vec<Report>>) -> Outcome {
    let reports = reports.map_err(|e| e.to_string())?;
    let mut checked = 0;
    for r in reports {
        if !r.passed() {
            return Err(r.to_string());
        }
        checked += r.checked;
    }
    if checked == 0 {
        return Err("nothing was checked".into());
    }
    Ok(checked)
}

fn grid<T>(ns: &[usize], ds: &[u32], f: impl Fn(usize, u32) -> Result<T>) -> Result<Vec<T>> {
    let mut out = Vec::new();
    for &n in ns {
        for &d in ds {
            out.push(f(n, d)?);
        }
    }
    Ok(out)
}

fn main() -> ExitCode {
    let engine = Engine::default();
    let e = &engine;
    let criteria: Vec<Criterion> = vec![
        (
            "d=2 characters match the parity table (n = 2..5, lambda_1 <= 10, lambda_n >= -6)",
            Box::new(|| {
                all_pass((2..=5).map(|n| verify::d2_table(e, &WeightWindow::new(n, 10, -6)?)).collect())
            }),
        ),
        (
            "hook plethysm multiplicities (|lambda| <= 12, n, d in 2..4)",
            Box::new(|| all_pass(grid(&[2, 3, 4], &[2, 3, 4], |n, d| verify::hook_plethysm(e, n, d, 12)))),
        ),
        (
            "stabilization of nu_mu along mu[r] (n, d in 2..4, |mu| <= 8)",
            Box::new(|| all_pass(grid(&[2, 3, 4], &[2, 3, 4], |n, d| verify::stabilization(e, n, d, 8)))),
        ),
        (
            "primitive string sums equal nu (|tail| <= 6, n, d in 2..3)",
            Box::new(|| all_pass(grid(&[2, 3], &[2, 3], |n, d| verify::primitive_sum(e, n, d, 6)))),
        ),
        (
            "Ext via Bott agrees with the closed form (n, d in 2..3, |mu| <= 8, window 8/-8)",
            Box::new(|| {
                all_pass(grid(&[2, 3], &[2, 3], |n, d| {
                    verify::ext_two_route(d, 8, &WeightWindow::new(n, 8, -8)?)
                }))
            }),
        ),
        (
            "primitive sources never reach the determinant (n, d in 2..3, |mu| <= 8)",
            Box::new(|| all_pass(grid(&[2, 3], &[2, 3], |n, d| verify::det_exclusion(e, n, d, 8)))),
        ),
        (
            "D0 from the spectral sequence equals the direct formula (n, d in 2..3, window 8/-4)",
            Box::new(|| {
                all_pass(grid(&[2, 3], &[2, 3], |n, d| {
                    verify::d0_two_route(e, d, &WeightWindow::new(n, 8, -4)?)
                }))
            }),
        ),
        (
            "n = 2 stable plethysm matches 1/prod(1 - t^g) (d in 2..4, t <= 20)",
            Box::new(|| {
                for d in 2..=4 {
                    let lib = verify::series_coefficients(d, 20);
                    for t in 0..=20 {
                        let naive = restricted_partitions(t, d);
                        if lib[t as usize] != naive {
                            return Err(format!("series coefficient t={t} d={d}: {} vs {naive}", lib[t as usize]));
                        }
                    }
                }
                all_pass((2..=4).map(|d| verify::generating_function(e, d, 20)).collect())
            }),
        ),
        (
            "Bott round trip and uniqueness (entries in [-5, 5], n in 2..4)",
            Box::new(|| all_pass((2..=4).map(|n| verify::bott_roundtrip(n, 5)).collect())),
        ),
        (
            "witness weights below the box (n in 2..4, d in 2..3)",
            Box::new(|| all_pass(grid(&[2, 3, 4], &[2, 3], |n, d| verify::witness(e, n, d)))),
        ),
    ];

    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        match check() {
            Ok(checked) => println!("pass  {:>2}. {name} ({checked} checks)", i + 1),
            Err(why) => {
                failed += 1;
                println!("FAIL  {:>2}. {name}: {why}", i + 1);
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
