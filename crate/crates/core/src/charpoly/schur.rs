//! Schur characters by semistandard tableaux.
//!
//! Tableaux with entries in `1..=m` are generated one value at a time: the
//! cells holding `m` form a horizontal strip, and removing them leaves a
//! tableau of an interlacing shape with entries in `1..m`. Grouping tableaux
//! by that shape gives the recursion
//! `s_λ(x_1..x_m) = Σ_μ x_m^{|λ|−|μ|} s_μ(x_1..x_{m−1})` over interlacing `μ`.

use alloc::collections::BTreeMap;
use alloc::sync::Arc;
use alloc::vec::Vec;

use super::{CharacterPoly, Exponent};
use crate::error::{Error, Result};
use crate::memo::Memo;
use crate::weights::DominantWeight;

type Terms = BTreeMap<Exponent, u64>;

/// Calls `f` with every `μ` of length `m−1` such that
/// `λ_1 ≥ μ_1 ≥ λ_2 ≥ ... ≥ μ_{m−1} ≥ λ_m`.
pub(crate) fn for_each_interlacing(
    shape: &[u32],
    mut f: impl FnMut(&[u32]) -> Result<()>,
) -> Result<()> {
    let m = shape.len();
    if m == 0 {
        return Ok(());
    }
    let len = m - 1;
    let mut mu: Vec<u32> = shape[1..].to_vec();
    loop {
        f(&mu)?;
        // Odometer: mu[i] runs over shape[i+1]..=shape[i].
        let mut i = len;
        loop {
            if i == 0 {
                return Ok(());
            }
            i -= 1;
            if mu[i] < shape[i] {
                mu[i] += 1;
                mu[i + 1..len].copy_from_slice(&shape[i + 2..=len]);
                break;
            }
        }
    }
}

fn shape_size(shape: &[u32]) -> Result<u32> {
    shape
        .iter()
        .try_fold(0u32, |acc, &p| acc.checked_add(p))
        .ok_or(Error::Overflow("shape size"))
}

fn add_into(out: &mut Terms, key: Exponent, m: u64) -> Result<()> {
    let slot = out.entry(key).or_insert(0);
    *slot = slot
        .checked_add(m)
        .ok_or(Error::Overflow("Kostka number"))?;
    Ok(())
}

/// One branching step. With `dominant_only`, keeps only nonincreasing
/// exponents; those only arise from nonincreasing exponents one level down,
/// so the restricted recursion is closed.
fn branch(
    shape: &[u32],
    dominant_only: bool,
    lower: &mut dyn FnMut(&[u32]) -> Result<Arc<Terms>>,
) -> Result<Terms> {
    let mut out = Terms::new();
    if shape.is_empty() {
        out.insert(Vec::new(), 1);
        return Ok(out);
    }
    let total = shape_size(shape)?;
    for_each_interlacing(shape, |mu| {
        let last = total - shape_size(mu)?;
        let sub = lower(mu)?;
        for (e, &m) in sub.iter() {
            if dominant_only && e.last().is_some_and(|&p| p < last) {
                continue;
            }
            let mut key = Vec::with_capacity(e.len() + 1);
            key.extend_from_slice(e);
            key.push(last);
            add_into(&mut out, key, m)?;
        }
        Ok(())
    })?;
    Ok(out)
}

fn full_terms(shape: &[u32], memo: &mut BTreeMap<Vec<u32>, Arc<Terms>>) -> Result<Arc<Terms>> {
    if let Some(t) = memo.get(shape) {
        return Ok(t.clone());
    }
    let terms = Arc::new(branch(shape, false, &mut |mu| full_terms(mu, memo))?);
    memo.insert(shape.to_vec(), terms.clone());
    Ok(terms)
}

/// Character of the irreducible `S_λ C^n`, `n = λ.n()`.
///
/// Only partitions are materialized; for `λ_n < 0` compute the character of
/// `λ.det_twist(−λ_n)` and shift every exponent back.
pub fn schur_char(lambda: &DominantWeight) -> Result<CharacterPoly> {
    let shape = lambda.to_exponent()?;
    let mut memo = BTreeMap::new();
    let terms = full_terms(&shape, &mut memo)?;
    Ok(CharacterPoly {
        n: shape.len(),
        terms: (*terms).clone(),
    })
}

/// Memoized Kostka numbers `K_{λμ}` for dominant `μ`, i.e. the dominant part
/// of each Schur character. Shared across threads.
#[derive(Default)]
pub struct KostkaTable {
    rows: Memo<Vec<u32>, Terms>,
}

impl KostkaTable {
    pub fn new() -> Self {
        Self::default()
    }

    /// `{μ: K_{λμ}}` over nonincreasing `μ` of the same length as `shape`.
    pub fn row(&self, shape: &[u32]) -> Result<Arc<Terms>> {
        if !shape.windows(2).all(|w| w[0] >= w[1]) {
            return Err(Error::NotDominant {
                parts: shape.iter().map(|&p| i64::from(p)).collect(),
            });
        }
        self.row_unchecked(shape)
    }

    fn row_unchecked(&self, shape: &[u32]) -> Result<Arc<Terms>> {
        let key = shape.to_vec();
        self.rows
            .get_or_try_insert_with(&key, || branch(shape, true, &mut |mu| self.row_unchecked(mu)))
    }

    pub fn cached_rows(&self) -> usize {
        self.rows.len()
    }
}
