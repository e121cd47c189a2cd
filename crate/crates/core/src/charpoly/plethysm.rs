//! Characters of `Sym^k(Sym^d C^n)` and of the graded pieces of
//! `⊗_{g} Sym(Sym^g C^n)`.
//!
//! Both are coefficients of `Π_m 1/(1 − q^{w(m)} x^m)` over a finite set of
//! monomials `m`, so they are computed by an unbounded-knapsack sweep over
//! the monomials: level `t` accumulates `x^m · level(t − w(m))` in increasing
//! `t`. Each multiset of monomials is counted exactly once, without listing
//! the multisets themselves.

use alloc::vec::Vec;

use super::CharacterPoly;
use crate::error::{Error, Result};
use crate::weights::binomial;

pub const DEFAULT_MAX_TERMS: u64 = 20_000_000;

/// Resource guard for materialized characters.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Limits {
    /// Largest total number of exponent vectors a single sweep may hold.
    pub max_terms: u64,
}

impl Default for Limits {
    fn default() -> Self {
        Self {
            max_terms: DEFAULT_MAX_TERMS,
        }
    }
}

impl Limits {
    pub fn new(max_terms: u64) -> Self {
        Self { max_terms }
    }

    fn check(&self, what: &'static str, needed: u128) -> Result<()> {
        if needed > u128::from(self.max_terms) {
            Err(Error::ResourceCap {
                what,
                needed,
                cap: self.max_terms,
            })
        } else {
            Ok(())
        }
    }
}

/// All exponent vectors of length `n` and total degree `d`, in
/// lexicographically decreasing order.
pub fn degree_monomials(n: usize, d: u32) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    if n == 0 {
        if d == 0 {
            out.push(Vec::new());
        }
        return out;
    }
    let mut current = alloc::vec![0u32; n];
    fn fill(pos: usize, left: u32, current: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        let n = current.len();
        if pos == n - 1 {
            current[pos] = left;
            out.push(current.clone());
            return;
        }
        for v in (0..=left).rev() {
            current[pos] = v;
            fill(pos + 1, left - v, current, out);
        }
    }
    fill(0, d, &mut current, &mut out);
    out
}

/// Number of exponent vectors of length `n` and degree `t`.
fn terms_in_degree(n: usize, t: u64) -> Result<u128> {
    if n == 0 {
        return Ok(u128::from(t == 0));
    }
    Ok(u128::from(binomial(t + n as u64 - 1, n as u64 - 1)?))
}

/// Levels `0..=max_level` of `Π_m 1/(1 − q^{w(m)} x^m)`.
fn knapsack(n: usize, items: &[(Vec<u32>, usize)], max_level: usize) -> Result<Vec<CharacterPoly>> {
    let mut table: Vec<CharacterPoly> = (0..=max_level).map(|_| CharacterPoly::new(n)).collect();
    table[0] = CharacterPoly::one(n);
    for (monomial, weight) in items {
        let weight = *weight;
        if weight == 0 || weight > max_level {
            continue;
        }
        for t in weight..=max_level {
            let (lower, upper) = table.split_at_mut(t);
            upper[0].add_shifted(&lower[t - weight], monomial)?;
        }
    }
    Ok(table)
}

/// Character of `Sym^k(Sym^d C^n)`.
pub fn sym_power_of_sym(k: u32, d: u32, n: usize, limits: &Limits) -> Result<CharacterPoly> {
    if n == 0 || d == 0 {
        return Err(Error::InvalidParameter("sym_power_of_sym needs n ≥ 1, d ≥ 1".into()));
    }
    let mut needed = 0u128;
    for level in 0..=u64::from(k) {
        needed += terms_in_degree(n, level * u64::from(d))?;
    }
    limits.check("Sym^k(Sym^d) character", needed)?;
    let items: Vec<(Vec<u32>, usize)> = degree_monomials(n, d).into_iter().map(|m| (m, 1)).collect();
    let mut table = knapsack(n, &items, k as usize)?;
    Ok(table.swap_remove(k as usize))
}

/// Graded pieces, degrees `0..=degree_cap`, of `⊗_{g ∈ degrees} Sym(Sym^g C^n)`,
/// graded by polynomial degree in `C^n`.
pub fn graded_tensor_sym_algebra(
    degrees: &[u32],
    n: usize,
    degree_cap: u32,
    limits: &Limits,
) -> Result<Vec<CharacterPoly>> {
    if degrees.contains(&0) {
        return Err(Error::InvalidParameter(
            "Sym(Sym^0) is not graded-finite".into(),
        ));
    }
    let mut needed = 0u128;
    for t in 0..=u64::from(degree_cap) {
        needed += terms_in_degree(n, t)?;
    }
    limits.check("graded tensor algebra", needed)?;
    let items: Vec<(Vec<u32>, usize)> = degrees
        .iter()
        .flat_map(|&g| degree_monomials(n, g).into_iter().map(move |m| (m, g as usize)))
        .collect();
    knapsack(n, &items, degree_cap as usize)
}
