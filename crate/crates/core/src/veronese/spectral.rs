//! `D_0` through the filtration of `S` by ideals generated by primitive
//! components, and the combinatorics that makes that filtration exist.
//!
//! For a tail `μ̄` (a partition with `n − 1` parts) the δ-string of `μ̄` is the
//! sequence of partitions `μ̄[kd] = (kd − |μ̄|, μ̄)`, `k ≥ k_min`, the first
//! one being the smallest dominant member.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec::Vec;

use super::characters::residue_window;
use super::ext::ext_closed_form;
use super::{sign, Engine};
use crate::charpoly::VirtualCharacter;
use crate::error::{Error, Result};
use crate::weights::{
    is_partition, lambda_sup_i, mu_bracket_r, partitions_up_to, size, DominantWeight, Partition,
};
use crate::window::WeightWindow;

/// Last level `k` at which stabilization and string sums are tested for a
/// tail of size `size`: `|μ̄| + 2`.
pub fn stabilization_horizon(size: u32) -> u32 {
    size + 2
}

/// Smallest `k ≥ 0` with `μ̄[kd]` dominant.
fn first_level(tail: &[i64], d: u32) -> Result<u32> {
    let need = size(tail)? + tail.first().copied().unwrap_or(0);
    let d = i64::from(d);
    let k = (need.max(0) + d - 1) / d;
    u32::try_from(k).map_err(|_| Error::Overflow("string level"))
}

fn level_weight(tail: &[i64], k: u32, d: u32) -> Result<DominantWeight> {
    DominantWeight::new(mu_bracket_r(tail, i64::from(k) * i64::from(d))?)
}

fn tail_size(tail: &[i64]) -> Result<u32> {
    u32::try_from(size(tail)?).map_err(|_| Error::Overflow("tail size"))
}

/// Outcome of summing `p` along one δ-string.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PrimitiveSumReport {
    pub tail: Vec<i64>,
    pub d: u32,
    /// `(k, p_{μ̄[kd]})` for `k` from the first dominant level to the horizon.
    pub levels: Vec<(u32, u64)>,
    pub sum: u64,
    pub nu: u64,
    /// `p` at the levels checked past the horizon; all zero when the string
    /// has ended.
    pub beyond: Vec<(u32, u64)>,
}

impl PrimitiveSumReport {
    pub fn holds(&self) -> bool {
        self.sum == self.nu && self.beyond.iter().all(|&(_, p)| p == 0)
    }
}

/// First pair of positions breaking one of the two ordering conditions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum OrderingViolation {
    /// An earlier entry contains a later one.
    Containment { earlier: usize, later: usize },
    /// `λ_2 + ... + λ_n` decreases.
    TailSumDecreases { at: usize },
}

/// Checks that no entry contains a later one and that `λ_2 + ... + λ_n` is
/// nondecreasing along `order`.
pub fn check_primitive_ordering(order: &[Partition]) -> Result<Option<OrderingViolation>> {
    let tail_sum = |p: &Partition| size(&p.drop_first());
    for at in 1..order.len() {
        if tail_sum(&order[at])? < tail_sum(&order[at - 1])? {
            return Ok(Some(OrderingViolation::TailSumDecreases { at }));
        }
    }
    for earlier in 0..order.len() {
        for later in earlier + 1..order.len() {
            if order[earlier].contains(&order[later])? {
                return Ok(Some(OrderingViolation::Containment { earlier, later }));
            }
        }
    }
    Ok(None)
}

impl Engine {
    /// `(k, p_{μ̄[kd]})` from the first dominant level through `last`.
    fn string(&self, tail: &[i64], d: u32, last: u32) -> Result<Vec<(u32, u64)>> {
        let first = first_level(tail, d)?;
        (first..=last.max(first))
            .map(|k| Ok((k, self.p_mult(&level_weight(tail, k, d)?, d)?)))
            .collect()
    }

    /// The primitive members of the δ-string of `tail` up to its horizon.
    pub fn primitive_string(&self, tail: &[i64], d: u32) -> Result<Vec<(Partition, u64)>> {
        if !is_partition(tail) {
            return Err(Error::NotAPartition { parts: tail.to_vec() });
        }
        let horizon = stabilization_horizon(tail_size(tail)?);
        let mut out = Vec::new();
        for (k, p) in self.string(tail, d, horizon)? {
            if p > 0 {
                out.push((Partition::try_from(level_weight(tail, k, d)?)?, p));
            }
        }
        Ok(out)
    }

    /// Sums `p` along the δ-string of `tail` up to the horizon and compares
    /// with `ν_tail`; also evaluates `p` on `extra` levels past the horizon.
    pub fn primitive_sum_check(&self, tail: &[i64], d: u32, extra: u32) -> Result<PrimitiveSumReport> {
        if !is_partition(tail) {
            return Err(Error::NotAPartition { parts: tail.to_vec() });
        }
        let horizon = stabilization_horizon(tail_size(tail)?);
        let levels = self.string(tail, d, horizon)?;
        let last = levels.last().map_or(horizon, |&(k, _)| k);
        let beyond = (last + 1..=last + extra)
            .map(|k| Ok((k, self.p_mult(&level_weight(tail, k, d)?, d)?)))
            .collect::<Result<Vec<_>>>()?;
        let sum = levels.iter().map(|&(_, p)| p).sum();
        Ok(PrimitiveSumReport {
            tail: tail.to_vec(),
            d,
            levels,
            sum,
            nu: self.nu_stable(tail, d)?,
            beyond,
        })
    }

    /// `k ↦ ν_μ(k)` for `k = 0..=horizon`.
    pub fn stabilization_profile(&self, mu: &[i64], d: u32, horizon: u32) -> Result<Vec<u64>> {
        (0..=horizon).map(|k| self.nu_at_level(mu, k, d)).collect()
    }

    /// All partitions with `n` parts, `p > 0` and `λ_2 + ... + λ_n ≤ g_max`,
    /// ordered by that tail sum and then lexicographically.
    pub fn primitive_ordering(&self, n: usize, d: u32, g_max: u32) -> Result<Vec<(Partition, u64)>> {
        if n == 0 {
            return Err(Error::InvalidParameter("n must be at least 1".into()));
        }
        let mut out = Vec::new();
        for tail in partitions_up_to(n - 1, g_max) {
            out.extend(self.primitive_string(&tail, d)?);
        }
        out.sort_by(|(a, _), (b, _)| {
            let ga = size(&a.drop_first()).unwrap_or(0);
            let gb = size(&b.drop_first()).unwrap_or(0);
            ga.cmp(&gb).then_with(|| a.weight().cmp(b.weight()))
        });
        Ok(out)
    }

    /// `s_λ = Σ_{k≥0} p_{λ−kδ}`: the filtration accounts for every copy of
    /// `S_λ V` in `S`.
    pub fn filtration_check(&self, lambda: &Partition, d: u32) -> Result<(u64, u64)> {
        let s = self.s_mult(lambda, d)?;
        let mut total = 0u64;
        let mut k = 0i64;
        while let Some(w) = self.delta_shift(lambda.parts(), -k, d)? {
            total += self.p_mult(&w, d)?;
            k += 1;
        }
        Ok((s, total))
    }

    /// `D_0` on `window` as the alternating sum of the Ext modules of the
    /// filtration quotients, `Σ_j (−1)^j Σ_μ p_μ Ext^{n_d+j}(M_μ, S)`.
    ///
    /// The sum runs literally over the primitive `μ` whose tails can meet the
    /// window. It is checked weight by weight against the collapsed form
    /// `Σ_{j<n−1} (−1)^j ν_{λ^{n−j}} + (−1)^{n−1}(ν_{λ^1} − e_λ)`; any
    /// disagreement is returned as [`Error::RouteMismatch`].
    pub fn d0_spectral(&self, d: u32, window: &WeightWindow) -> Result<VirtualCharacter> {
        let window = residue_window(window, 0, d)?;
        let n = window.n;
        let targets = window.weights()?;

        let mut tails: BTreeSet<Vec<i64>> = BTreeSet::new();
        for lambda in &targets {
            for i in 1..=n {
                let tail = lambda_sup_i(lambda, i, d)?;
                if is_partition(&tail) {
                    tails.insert(tail);
                }
            }
        }
        let mut by_tail: BTreeMap<Vec<i64>, Vec<(Partition, u64)>> = BTreeMap::new();
        for tail in tails {
            let string = self.primitive_string(&tail, d)?;
            by_tail.insert(tail, string);
        }
        let primitives: Vec<&(Partition, u64)> = by_tail.values().flatten().collect();

        let mut out = VirtualCharacter::windowed(window);
        for lambda in targets {
            let mut literal = 0i64;
            for j in 0..n {
                let mut term = 0i64;
                for (mu, p) in &primitives {
                    let hit = ext_closed_form(mu, &lambda, j, d)?;
                    term += i64::from(hit) * i64::try_from(*p).map_err(|_| Error::Overflow("p"))?;
                }
                literal += sign(j) * term;
            }
            let collapsed = self.d0_collapsed(&lambda, d)?;
            if literal != collapsed {
                return Err(Error::RouteMismatch {
                    lambda: lambda.parts().to_vec(),
                    left: literal,
                    right: collapsed,
                });
            }
            out.add(lambda, literal)?;
        }
        Ok(out)
    }

    fn d0_collapsed(&self, lambda: &DominantWeight, d: u32) -> Result<i64> {
        let n = lambda.n();
        let nu = |i: usize| -> Result<i64> {
            i64::try_from(self.nu_stable(&lambda_sup_i(lambda, i, d)?, d)?)
                .map_err(|_| Error::Overflow("ν"))
        };
        let mut total = 0i64;
        for j in 0..n - 1 {
            total += sign(j) * nu(n - j)?;
        }
        let e = i64::try_from(self.e_lambda(lambda, d)?).map_err(|_| Error::Overflow("e_λ"))?;
        total += sign(n - 1) * (nu(1)? - e);
        Ok(total)
    }
}
