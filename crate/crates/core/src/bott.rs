//! Cohomology of `S_μ R ⊗ Q^r` on `P^{n−1}` (projective space of
//! one-dimensional quotients of `V`, with tautological sub-bundle `R` of rank
//! `n−1` and quotient line bundle `Q`), computed combinatorially.

use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::weights::{is_dominant, tilde_lambda_sup_i, DominantWeight};

/// Result of Bott's recipe: all cohomology vanishes, or exactly one group
/// `H^degree = S_weight V` survives.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum BottOutcome {
    Vanishing,
    Cohomology { degree: usize, weight: DominantWeight },
}

/// Cohomology of `S_μ R ⊗ Q^r` where `μ` has `n − 1` parts.
pub fn bott(mu: &[i64], r: i64, n: usize) -> Result<BottOutcome> {
    if n == 0 || mu.len() + 1 != n {
        return Err(Error::LengthMismatch {
            expected: n.saturating_sub(1),
            found: mu.len(),
        });
    }
    if !is_dominant(mu) {
        return Err(Error::NotDominant { parts: mu.to_vec() });
    }
    let overflow = || Error::Overflow("Bott recipe");
    // Threshold i is μ_i − i, for i = 1..n−1; strictly decreasing in i.
    let thresholds = mu
        .iter()
        .enumerate()
        .map(|(pos, &m)| m.checked_sub(pos as i64 + 1).ok_or_else(overflow))
        .collect::<Result<Vec<_>>>()?;
    if thresholds.contains(&r) {
        return Ok(BottOutcome::Vanishing);
    }
    // l is the number of thresholds above r.
    let l = thresholds.iter().take_while(|&&t| t > r).count();
    let mut parts = Vec::with_capacity(n);
    for &m in &mu[..l] {
        parts.push(m.checked_sub(1).ok_or_else(overflow)?);
    }
    parts.push(r.checked_add(l as i64).ok_or_else(overflow)?);
    parts.extend_from_slice(&mu[l..]);
    Ok(BottOutcome::Cohomology {
        degree: l,
        weight: DominantWeight::new(parts)?,
    })
}

/// The unique `(μ, r)` with `H^l(S_μ R ⊗ Q^r) = S_λ V`:
/// `μ = λ̃^{l+1}` and `r = λ_{l+1} − l`.
pub fn bott_inverse(lambda: &DominantWeight, l: usize) -> Result<(Vec<i64>, i64)> {
    let n = lambda.n();
    if l >= n {
        return Err(Error::IndexOutOfRange { index: l + 1, len: n });
    }
    let mu = tilde_lambda_sup_i(lambda, l + 1)?;
    let r = lambda.parts()[l]
        .checked_sub(l as i64)
        .ok_or(Error::Overflow("Bott inverse"))?;
    Ok((mu, r))
}

/// Shift applied to every part of the dual `μ` under Serre duality.
///
/// With `ω = det V ⊗ Q^{−n}` and `det R = det V ⊗ Q^{−1}`, the dual of
/// `S_μ R ⊗ Q^r` twisted by `ω` is, up to the trivial factor `det V` which
/// only shifts `λ`, `S_{μ*} R ⊗ det R ⊗ Q^{−r−(n−1)}`. Absorbing `det R`
/// into `μ` gives the shift of `+1` below and `SERRE_R_OFFSET_PER_RANK` on `r`;
/// with these the dual cohomology weight is exactly `λ*`. Checked by hand on
/// `n = 2` (`μ = (0), r = 0` ↔ `μ = (1), r = −1`) and `n = 3`.
pub const SERRE_MU_SHIFT: i64 = 1;
/// `r ↦ −r − (n − 1)`.
pub const SERRE_R_OFFSET_PER_RANK: i64 = -1;

/// Serre-dual data: `bott(μ, r) = H^l = S_λ` iff
/// `bott(serre_dual(μ, r)) = H^{n−1−l} = S_{λ*}` with `λ*` the dual weight.
pub fn serre_dual(mu: &[i64], r: i64) -> Result<(Vec<i64>, i64)> {
    let overflow = || Error::Overflow("Serre dual");
    let dual_mu = mu
        .iter()
        .rev()
        .map(|&m| m.checked_neg().and_then(|x| x.checked_add(SERRE_MU_SHIFT)))
        .collect::<Option<Vec<_>>>()
        .ok_or_else(overflow)?;
    let rank = mu.len() as i64;
    let dual_r = r
        .checked_neg()
        .and_then(|x| x.checked_add(SERRE_R_OFFSET_PER_RANK * rank))
        .ok_or_else(overflow)?;
    Ok((dual_mu, dual_r))
}
