//! Verification suites. Each one sweeps a finite range, compares two
//! independent descriptions of the same numbers and reports the first
//! disagreement.
//!
//! Mathematical errors raised inside a suite (a negative multiplicity, two
//! routes disagreeing) become a [`Status::Fail`]; malformed parameters and
//! resource caps are returned as `Err` so callers can tell them apart.

use std::collections::BTreeMap;
use std::fmt;

use rayon::prelude::*;
use veronese_core::veronese::{check_primitive_ordering, stabilization_horizon};
use veronese_core::weights::{partitions_up_to, u_d};
use veronese_core::{
    bott, bott_inverse, d2_table_predicate, ext_closed_form, BottOutcome, D2Cell, DominantWeight,
    Engine, Error, ExtTable, Partition, Result, WeightWindow,
};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Status {
    Pass,
    Fail(String),
    /// The check ran out of horizon before it could decide.
    Inconclusive(String),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Report {
    pub suite: &'static str,
    pub params: String,
    pub checked: u64,
    pub status: Status,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }

    pub fn is_mismatch(&self) -> bool {
        matches!(self.status, Status::Fail(_))
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let head = format!("{} [{}]", self.suite, self.params);
        match &self.status {
            Status::Pass => write!(f, "pass  {head}: {} checks", self.checked),
            Status::Fail(why) => write!(f, "FAIL  {head}: {why}"),
            Status::Inconclusive(why) => write!(f, "INCONCLUSIVE  {head}: {why}"),
        }
    }
}

/// Outcome of a single check inside a sweep.
enum Check {
    Ok,
    /// The item is outside the statement being tested.
    Skip,
    Fail(String),
    Inconclusive(String),
}

fn lift(r: Result<Check>) -> Result<Check> {
    match r {
        Err(e) if e.is_mathematical() => Ok(Check::Fail(e.to_string())),
        other => other,
    }
}

/// Runs `check` over `items` in parallel and keeps the first non-passing
/// result in item order.
fn sweep<T: Sync>(
    suite: &'static str,
    params: String,
    items: &[T],
    check: impl Fn(&T) -> Result<Check> + Sync,
) -> Result<Report> {
    let results: Vec<Result<Check>> = items.par_iter().map(|t| lift(check(t))).collect();
    let mut status = Status::Pass;
    let mut checked = 0;
    for r in results {
        match r? {
            Check::Ok => checked += 1,
            Check::Skip => {}
            Check::Fail(why) => {
                status = Status::Fail(why);
                break;
            }
            Check::Inconclusive(why) => {
                if status == Status::Pass {
                    status = Status::Inconclusive(why);
                }
            }
        }
    }
    Ok(Report {
        suite,
        params,
        checked,
        status,
    })
}

/// `a_λ^j` for `d = 2` against the closed-form table, cell by cell.
pub fn d2_table(engine: &Engine, window: &WeightWindow) -> Result<Report> {
    engine.prepare(2, window)?;
    let weights = window.weights()?;
    let params = format!("n={} l1max={} lnmin={}", window.n, window.lambda1_max, window.lambdan_min);
    sweep("d2-table", params, &weights, |lambda| {
        let cell = d2_table_predicate(lambda);
        for j in 0..2u32 {
            let got = engine.a_lambda_j(lambda, j, 2)?;
            let expected = i64::from(
                (j == 0 && cell == D2Cell::D0) || (j == 1 && cell == D2Cell::D1),
            );
            if got != expected {
                return Ok(Check::Fail(format!(
                    "a^{j} at {lambda} is {got}, table says {expected}"
                )));
            }
        }
        Ok(Check::Ok)
    })
}

/// All hooks `(a, 1^b, 0, ...)` with `n` parts and size at most `max_size`.
pub fn hooks(n: usize, max_size: u32) -> Vec<DominantWeight> {
    let mut out = Vec::new();
    for size in 0..=i64::from(max_size) {
        for b in 0..n.min(size as usize + 1) {
            let a = size - b as i64;
            if b > 0 && a < 1 {
                continue;
            }
            let mut parts = vec![0i64; n];
            parts[0] = a;
            for p in parts.iter_mut().skip(1).take(b) {
                *p = 1;
            }
            out.push(DominantWeight::new(parts).expect("hooks are dominant"));
        }
    }
    out
}

/// `s_λ` on hooks: 1 on `(kd, 0, ..., 0)`, 0 on every other hook.
pub fn hook_plethysm(engine: &Engine, n: usize, d: u32, max_size: u32) -> Result<Report> {
    let items = hooks(n, max_size);
    sweep("hooks", format!("n={n} d={d} sizemax={max_size}"), &items, |lambda| {
        let parts = lambda.parts();
        let row = parts[1..].iter().all(|&p| p == 0) && parts[0] % i64::from(d) == 0;
        let expected = u64::from(row);
        let got = engine.s_mult(lambda, d)?;
        Ok(if got == expected {
            Check::Ok
        } else {
            Check::Fail(format!("s at {lambda} is {got}, expected {expected}"))
        })
    })
}

/// `k ↦ ν_μ(k)` is nondecreasing, bounded by `ν_μ` and reaches it by `|μ| + 2`.
pub fn stabilization(engine: &Engine, n: usize, d: u32, max_size: u32) -> Result<Report> {
    check_n(n)?;
    let items = partitions_up_to(n - 1, max_size);
    sweep("stabilization", format!("n={n} d={d} musize={max_size}"), &items, |mu| {
        let size = mu.iter().sum::<i64>() as u32;
        let horizon = stabilization_horizon(size);
        let profile = engine.stabilization_profile(mu, d, horizon)?;
        let nu = engine.nu_stable(mu, d)?;
        if let Some(k) = profile.windows(2).position(|w| w[1] < w[0]) {
            return Ok(Check::Fail(format!("ν_{mu:?}(k) decreases at k={}: {profile:?}", k + 1)));
        }
        if let Some(k) = profile.iter().position(|&v| v > nu) {
            return Ok(Check::Fail(format!("ν_{mu:?}({k}) exceeds ν = {nu}: {profile:?}")));
        }
        if profile.last() != Some(&nu) {
            return Ok(Check::Inconclusive(format!(
                "ν_{mu:?} not reached by k={horizon}: {profile:?} vs {nu}"
            )));
        }
        Ok(Check::Ok)
    })
}

/// `Σ_k p_{μ̄[kd]} = ν_μ̄` along every δ-string, and `p` vanishes past the horizon.
pub fn primitive_sum(engine: &Engine, n: usize, d: u32, max_size: u32) -> Result<Report> {
    check_n(n)?;
    let items = partitions_up_to(n - 1, max_size);
    sweep("primitive-sum", format!("n={n} d={d} musize={max_size}"), &items, |tail| {
        let r = engine.primitive_sum_check(tail, d, 2)?;
        if r.holds() {
            Ok(Check::Ok)
        } else if r.sum > r.nu {
            Ok(Check::Fail(format!("string of {tail:?} sums to {} > ν = {}", r.sum, r.nu)))
        } else {
            Ok(Check::Inconclusive(format!(
                "string of {tail:?}: sum {} vs ν {}, beyond horizon {:?}",
                r.sum, r.nu, r.beyond
            )))
        }
    })
}

/// Primitive partitions ordered by `λ_2 + ... + λ_n`, then lexicographically,
/// satisfy both conditions needed for the filtration; and each `s_λ` is
/// exhausted by the primitive parts below it.
pub fn primitive_ordering(engine: &Engine, n: usize, d: u32, g_max: u32) -> Result<Report> {
    let order = engine.primitive_ordering(n, d, g_max)?;
    let parts: Vec<Partition> = order.iter().map(|(l, _)| l.clone()).collect();
    let params = format!("n={n} d={d} gmax={g_max}");
    if let Some(v) = check_primitive_ordering(&parts)? {
        return Ok(Report {
            suite: "primitive-ordering",
            params,
            checked: parts.len() as u64,
            status: Status::Fail(format!("{v:?}")),
        });
    }
    sweep("primitive-ordering", params, &parts, |lambda| {
        let (s, total) = engine.filtration_check(lambda, d)?;
        Ok(if s == total {
            Check::Ok
        } else {
            Check::Fail(format!("s at {lambda} is {s}, primitive parts give {total}"))
        })
    })
}

/// Partitions with `n` parts, size at most `max_size`, size divisible by `d`.
pub fn ext_sources(n: usize, d: u32, max_size: u32) -> Vec<Partition> {
    partitions_up_to(n, max_size)
        .into_iter()
        .filter(|p| p.iter().sum::<i64>() % i64::from(d) == 0)
        .map(|p| Partition::new(p).expect("partitions"))
        .collect()
}

/// Ext tables from the closed form and from Bott's theorem agree.
pub fn ext_two_route(d: u32, max_size: u32, window: &WeightWindow) -> Result<Report> {
    let n = window.n;
    let items = ext_sources(n, d, max_size);
    let params = format!(
        "n={n} d={d} musize={max_size} l1max={} lnmin={}",
        window.lambda1_max, window.lambdan_min
    );
    sweep("ext-two-route", params, &items, |mu| {
        let closed = ExtTable::closed_form(mu, d, window)?;
        let bott = ExtTable::via_bott(mu, d, window)?;
        if closed == bott {
            return Ok(Check::Ok);
        }
        let diff = closed
            .entries()
            .keys()
            .find(|k| !bott.entries().contains_key(*k))
            .map(|(j, l)| format!("closed form has (j={j}, {l}), Bott does not"))
            .or_else(|| {
                bott.entries()
                    .keys()
                    .find(|k| !closed.entries().contains_key(*k))
                    .map(|(j, l)| format!("Bott has (j={j}, {l}), closed form does not"))
            })
            .unwrap_or_else(|| "multiplicities differ".into());
        Ok(Check::Fail(format!("μ = {mu}: {diff}")))
    })
}

/// `det(Sym^d W)` never occurs in the Ext modules of a primitive `μ`.
pub fn det_exclusion(engine: &Engine, n: usize, d: u32, max_size: u32) -> Result<Report> {
    check_n(n)?;
    let u = u_d(n, d)?;
    let det = DominantWeight::constant(n, u)?;
    let window = WeightWindow::new(n, u, u)?;
    let items = ext_sources(n, d, max_size);
    sweep("det-exclusion", format!("n={n} d={d} musize={max_size}"), &items, |mu| {
        if engine.p_mult(mu, d)? == 0 {
            return Ok(Check::Skip);
        }
        let bott = ExtTable::via_bott(mu, d, &window)?;
        for j in 0..n {
            let closed = ext_closed_form(mu, &det, j, d)?;
            let via = bott.get(j, &det)?;
            if closed != 0 || via != 0 {
                return Ok(Check::Fail(format!(
                    "primitive μ = {mu} has det(Sym^d W) in Ext^(n_d+{j}) (closed {closed}, Bott {via})"
                )));
            }
        }
        Ok(Check::Ok)
    })
}

/// `D_0` from the filtration spectral sequence equals the `a_λ^0` formula.
pub fn d0_two_route(engine: &Engine, d: u32, window: &WeightWindow) -> Result<Report> {
    engine.prepare(d, window)?;
    let params = format!(
        "n={} d={d} l1max={} lnmin={}",
        window.n, window.lambda1_max, window.lambdan_min
    );
    let checked = window.with_residue(0, d)?.weights()?.len() as u64;
    let status = match engine.d0_spectral(d, window) {
        Ok(spectral) => {
            let direct = engine.dj_character(0, d, window)?;
            if spectral == direct {
                Status::Pass
            } else {
                let bad = spectral
                    .terms()
                    .keys()
                    .chain(direct.terms().keys())
                    .find(|l| spectral.coefficient(l) != direct.coefficient(l))
                    .map(|l| {
                        format!(
                            "at {l}: spectral {} vs direct {}",
                            spectral.coefficient(l),
                            direct.coefficient(l)
                        )
                    })
                    .unwrap_or_default();
                Status::Fail(bad)
            }
        }
        Err(e) if e.is_mathematical() => Status::Fail(e.to_string()),
        Err(e) => return Err(e),
    };
    Ok(Report {
        suite: "d0-two-route",
        params,
        checked,
        status,
    })
}

/// Coefficients of `1/((1−t^2)⋯(1−t^d))` up to `t^t_max`, by repeated
/// division by `1 − t^g`.
pub fn series_coefficients(d: u32, t_max: u32) -> Vec<u64> {
    let len = t_max as usize + 1;
    let mut c = vec![0u64; len];
    c[0] = 1;
    for g in 2..=d as usize {
        for t in g..len {
            c[t] += c[t - g];
        }
    }
    c
}

/// `ν_(t)` for `n = 2` against the generating function.
pub fn generating_function(engine: &Engine, d: u32, t_max: u32) -> Result<Report> {
    let coeffs = series_coefficients(d, t_max);
    let items: Vec<u32> = (0..=t_max).collect();
    sweep("generating-function", format!("d={d} tmax={t_max}"), &items, |&t| {
        let got = engine.nu_stable(&[i64::from(t)], d)?;
        let expected = coeffs[t as usize];
        Ok(if got == expected {
            Check::Ok
        } else {
            Check::Fail(format!("ν_({t}) is {got}, series gives {expected}"))
        })
    })
}

/// All dominant weights with `n` parts in `[-range, range]`.
pub fn weights_in_box(n: usize, range: i64) -> Result<Vec<DominantWeight>> {
    WeightWindow::new(n, range, -range)?.weights()
}

/// `bott ∘ bott_inverse = id`, and no `(μ, r)` is hit by two `(l, λ)`.
pub fn bott_roundtrip(n: usize, range: i64) -> Result<Report> {
    check_n(n)?;
    let weights = weights_in_box(n, range)?;
    let mut seen: BTreeMap<(Vec<i64>, i64), (usize, DominantWeight)> = BTreeMap::new();
    let mut status = Status::Pass;
    let mut checked = 0u64;
    'outer: for lambda in &weights {
        for l in 0..n {
            checked += 1;
            let (mu, r) = bott_inverse(lambda, l)?;
            let expected = BottOutcome::Cohomology {
                degree: l,
                weight: lambda.clone(),
            };
            let got = bott(&mu, r, n)?;
            if got != expected {
                status = Status::Fail(format!("bott(bott_inverse({lambda}, {l})) = {got:?}"));
                break 'outer;
            }
            if let Some((l2, lambda2)) = seen.insert((mu.clone(), r), (l, lambda.clone())) {
                status = Status::Fail(format!(
                    "(μ={mu:?}, r={r}) comes from both (l={l2}, {lambda2}) and (l={l}, {lambda})"
                ));
                break 'outer;
            }
        }
    }
    Ok(Report {
        suite: "bott-roundtrip",
        params: format!("n={n} range={range}"),
        checked,
        status,
    })
}

/// `m_λ = 1` on `(u_d+1, u_d−1, ..., u_d−1, λ_n)`, `λ_n < u_d`, with `λ_n`
/// running over `2d` consecutive values so that every residue mod `d` occurs.
pub fn witness(engine: &Engine, n: usize, d: u32) -> Result<Report> {
    if n < 2 {
        return Err(Error::InvalidParameter("witness family needs n ≥ 2".into()));
    }
    let u = u_d(n, d)?;
    let mut items = Vec::new();
    for last in (u - 2 * i64::from(d)..u).rev() {
        let mut parts = vec![u - 1; n];
        parts[0] = u + 1;
        parts[n - 1] = last;
        items.push(DominantWeight::new(parts)?);
    }
    let residues: std::collections::BTreeSet<i64> = items
        .iter()
        .map(|l| l.size().map(|s| s.rem_euclid(i64::from(d))))
        .collect::<Result<_>>()?;
    if residues.len() != d as usize {
        return Ok(Report {
            suite: "witness",
            params: format!("n={n} d={d}"),
            checked: 0,
            status: Status::Fail(format!("family realizes residues {residues:?} only")),
        });
    }
    sweep("witness", format!("n={n} d={d}"), &items, |lambda| {
        let m = engine.m_lambda(lambda, d)?;
        Ok(if m == 1 {
            Check::Ok
        } else {
            Check::Fail(format!("m at {lambda} is {m}"))
        })
    })
}

fn check_n(n: usize) -> Result<()> {
    if n == 0 {
        Err(Error::InvalidParameter("n must be at least 1".into()))
    } else {
        Ok(())
    }
}
