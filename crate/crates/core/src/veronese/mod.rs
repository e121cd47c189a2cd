//! Multiplicities and characters for the simple equivariant D-modules on the
//! degree-`d` Veronese cone in `Sym^d W`, `dim W = n`.
//!
//! Everything goes through an [`Engine`], which owns the plethysm caches.
//! Notation follows the usual conventions for `S = Sym(Sym^d V)`, `V = W*`:
//!
//! * `s_λ` multiplicity of `S_λ V` in `S`, `a_λ = s_{λ−δ}`, `p_λ = s_λ − a_λ`;
//! * `ν_μ` stable plethysm multiplicity, read off `⊗_{g=2}^d Sym(Sym^g C^{n−1})`;
//! * `m_λ = Σ_i (−1)^{n−i} ν_{λ^i}` and `e_λ` the multiplicity in
//!   `E = det(Sym^d W) ⊗ Sym(Sym^d W)`;
//! * `a_λ^j` the multiplicity of `S_λ W` in `D_j`.

mod characters;
mod ext;
mod spectral;

use alloc::sync::Arc;
use alloc::vec::Vec;

use spin::Mutex;

use crate::charpoly::{
    graded_tensor_sym_algebra, sym_power_of_sym, Decomposer, KostkaTable, Limits,
};
use crate::error::{Error, Result};
use crate::memo::Memo;
use crate::window::WeightWindow;
use crate::weights::{
    self, add_k_delta, is_dominant, is_partition, lambda_sup_i, mu_bracket_r, u_d, DominantWeight,
};

pub use characters::{d2_table_predicate, D2Cell};
pub use ext::{ext_closed_form, ExtTable, MAX_BOTT_STEPS};
pub use spectral::{
    check_primitive_ordering, stabilization_horizon, OrderingViolation, PrimitiveSumReport,
};

/// Cache-owning evaluator. `Sync`: share one engine across worker threads.
pub struct Engine {
    limits: Limits,
    kostka: KostkaTable,
    /// `(k, d, n)` ↦ decomposition of `Sym^k(Sym^d C^n)`.
    plethysm: Memo<(u32, u32, usize), Mutex<Decomposer>>,
    /// `(d, n−1, t)` ↦ decomposition of the degree-`t` piece of
    /// `⊗_{g=2}^d Sym(Sym^g C^{n−1})`.
    stable: Memo<(u32, usize, u32), Mutex<Decomposer>>,
}

impl Default for Engine {
    fn default() -> Self {
        Self::new(Limits::default())
    }
}

fn check_d(d: u32) -> Result<()> {
    if d < 2 {
        Err(Error::InvalidParameter("d must be at least 2".into()))
    } else {
        Ok(())
    }
}

fn to_u32(parts: &[i64]) -> Result<Vec<u32>> {
    parts
        .iter()
        .map(|&p| {
            u32::try_from(p).map_err(|_| Error::NotAPartition {
                parts: parts.to_vec(),
            })
        })
        .collect()
}

fn sign(exponent: usize) -> i64 {
    if exponent.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

impl Engine {
    pub fn new(limits: Limits) -> Self {
        Self {
            limits,
            kostka: KostkaTable::new(),
            plethysm: Memo::new(),
            stable: Memo::new(),
        }
    }

    pub fn limits(&self) -> &Limits {
        &self.limits
    }

    pub fn cached_plethysms(&self) -> usize {
        self.plethysm.len()
    }

    fn plethysm_level(&self, k: u32, d: u32, n: usize) -> Result<Arc<Mutex<Decomposer>>> {
        self.plethysm.get_or_try_insert_with(&(k, d, n), || {
            let c = sym_power_of_sym(k, d, n, &self.limits)?;
            Ok::<_, Error>(Mutex::new(Decomposer::new(&c)?))
        })
    }

    /// Multiplicity of the partition `shape` in `Sym^{|shape|/d}(Sym^d C^n)`,
    /// zero when `d ∤ |shape|`.
    fn plethysm_multiplicity(&self, shape: &[u32], d: u32) -> Result<u64> {
        let size: u64 = shape.iter().map(|&p| u64::from(p)).sum();
        if !size.is_multiple_of(u64::from(d)) {
            return Ok(0);
        }
        let k = u32::try_from(size / u64::from(d)).map_err(|_| Error::Overflow("plethysm level"))?;
        let entry = self.plethysm_level(k, d, shape.len())?;
        let mut dec = entry.lock();
        dec.multiplicity(shape, &self.kostka)
    }

    /// One sweep yields every degree up to `t`, so all of them are kept.
    fn stable_piece(&self, d: u32, nvars: usize, t: u32) -> Result<Arc<Mutex<Decomposer>>> {
        if let Some(piece) = self.stable.get(&(d, nvars, t)) {
            return Ok(piece);
        }
        let degrees: Vec<u32> = (2..=d).collect();
        let pieces = graded_tensor_sym_algebra(&degrees, nvars, t, &self.limits)?;
        let mut last = None;
        for (deg, piece) in (0u32..).zip(pieces) {
            last = Some(self.stable.insert((d, nvars, deg), Mutex::new(Decomposer::new(&piece)?)));
        }
        last.ok_or(Error::Inconsistency("empty graded sweep".into()))
    }

    /// Builds the plethysm tables every multiplicity in `window` will touch,
    /// so that parallel sweeps over the window only read shared state.
    pub fn prepare(&self, d: u32, window: &WeightWindow) -> Result<()> {
        check_d(d)?;
        if window.is_empty() {
            return Ok(());
        }
        let n = window.n;
        let u = u_d(n, d)?;
        // Tails λ^i have n − 1 parts, each at most λ_1 + 1 − u_d.
        let tail_max = (n as i64 - 1) * (window.lambda1_max + 1 - u);
        if n > 1 && tail_max >= 0 {
            let t = u32::try_from(tail_max).map_err(|_| Error::Overflow("tail size"))?;
            self.stable_piece(d, n - 1, t)?;
        }
        // λ − (u_d^n) for e_λ.
        let excess = n as i64 * (window.lambda1_max - u);
        if excess >= 0 {
            let top = u32::try_from(excess / i64::from(d)).map_err(|_| Error::Overflow("level"))?;
            for k in 0..=top {
                self.plethysm_level(k, d, n)?;
            }
        }
        Ok(())
    }

    /// `s_λ = ⟨S_λ V, Sym(Sym^d V)⟩`; zero off partitions and off `|λ| ≡ 0 (mod d)`.
    pub fn s_mult(&self, lambda: &DominantWeight, d: u32) -> Result<u64> {
        check_d(d)?;
        if !lambda.is_partition() {
            return Ok(0);
        }
        self.plethysm_multiplicity(&lambda.to_exponent()?, d)
    }

    fn s_of_parts(&self, parts: &[i64], d: u32) -> Result<u64> {
        if !is_partition(parts) {
            return Ok(0);
        }
        self.plethysm_multiplicity(&to_u32(parts)?, d)
    }

    /// `a_λ = s_{λ−δ}`, `δ = (d, 0, ..., 0)`.
    pub fn a_pleth(&self, lambda: &DominantWeight, d: u32) -> Result<u64> {
        check_d(d)?;
        let shifted = lambda.add_k_delta(-1, i64::from(d))?;
        self.s_of_parts(&shifted, d)
    }

    /// `p_λ = s_λ − a_λ`, the multiplicity of primitive generators.
    pub fn p_mult(&self, lambda: &DominantWeight, d: u32) -> Result<u64> {
        let s = self.s_mult(lambda, d)?;
        let a = self.a_pleth(lambda, d)?;
        s.checked_sub(a).ok_or_else(|| {
            Error::Inconsistency(alloc::format!(
                "a_λ = {a} exceeds s_λ = {s} at λ = {lambda}"
            ))
        })
    }

    /// Stable multiplicity `ν_μ` for `μ` with `n − 1` parts; zero off partitions.
    pub fn nu_stable(&self, mu: &[i64], d: u32) -> Result<u64> {
        check_d(d)?;
        if !is_partition(mu) {
            return Ok(0);
        }
        if mu.is_empty() {
            return Ok(1);
        }
        let t = u32::try_from(weights::size(mu)?).map_err(|_| Error::Overflow("degree"))?;
        let piece = self.stable_piece(d, mu.len(), t)?;
        let mut dec = piece.lock();
        dec.multiplicity(&to_u32(mu)?, &self.kostka)
    }

    /// `ν_μ(k) = ⟨S_{μ[kd]} C^n, Sym^k(Sym^d C^n)⟩`.
    pub fn nu_at_level(&self, mu: &[i64], k: u32, d: u32) -> Result<u64> {
        check_d(d)?;
        if !is_partition(mu) {
            return Err(Error::NotAPartition { parts: mu.to_vec() });
        }
        let r = i64::from(k)
            .checked_mul(i64::from(d))
            .ok_or(Error::Overflow("kd"))?;
        let top = mu_bracket_r(mu, r)?;
        if !is_dominant(&top) {
            return Ok(0);
        }
        self.s_of_parts(&top, d)
    }

    /// `m_λ = Σ_{i=1}^n (−1)^{n−i} ν_{λ^i}`.
    pub fn m_lambda(&self, lambda: &DominantWeight, d: u32) -> Result<i64> {
        check_d(d)?;
        let n = lambda.n();
        let mut total = 0i64;
        for i in 1..=n {
            let nu = self.nu_stable(&lambda_sup_i(lambda, i, d)?, d)?;
            let nu = i64::try_from(nu).map_err(|_| Error::Overflow("m_λ"))?;
            total = total
                .checked_add(sign(n - i) * nu)
                .ok_or(Error::Overflow("m_λ"))?;
        }
        Ok(total)
    }

    /// `e_λ = s_{λ−(u_d^n)}`, the multiplicity of `S_λ W` in `E`.
    pub fn e_lambda(&self, lambda: &DominantWeight, d: u32) -> Result<u64> {
        check_d(d)?;
        let u = u_d(lambda.n(), d)?;
        let shifted = lambda.det_twist(-u)?;
        self.s_of_parts(shifted.parts(), d)
    }

    /// Multiplicity of `S_λ W` in `D_j`: zero unless `|λ| ≡ j (mod d)`, then
    /// `m_λ + (−1)^n e_λ` for `j = 0` and `m_λ` otherwise. A negative value is
    /// reported as an [`Error::Inconsistency`].
    pub fn a_lambda_j(&self, lambda: &DominantWeight, j: u32, d: u32) -> Result<i64> {
        check_d(d)?;
        if j >= d {
            return Err(Error::InvalidParameter(alloc::format!(
                "j = {j} must be below d = {d}"
            )));
        }
        if lambda.size()?.rem_euclid(i64::from(d)) != i64::from(j) {
            return Ok(0);
        }
        let mut value = self.m_lambda(lambda, d)?;
        if j == 0 {
            let e = i64::try_from(self.e_lambda(lambda, d)?).map_err(|_| Error::Overflow("e_λ"))?;
            value = value
                .checked_add(sign(lambda.n()) * e)
                .ok_or(Error::Overflow("a_λ^0"))?;
        }
        if value < 0 {
            return Err(Error::Inconsistency(alloc::format!(
                "negative multiplicity a^{j} = {value} at λ = {lambda} (d = {d})"
            )));
        }
        Ok(value)
    }

    /// `λ + kδ` as a partition, if it is one.
    fn delta_shift(&self, parts: &[i64], k: i64, d: u32) -> Result<Option<DominantWeight>> {
        let v = add_k_delta(parts, k, i64::from(d))?;
        is_partition(&v).then(|| DominantWeight::new(v)).transpose()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::weights::Partition;
    use alloc::vec;

    fn w(parts: &[i64]) -> DominantWeight {
        DominantWeight::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn s_examples() {
        let e = Engine::default();
        for d in [2u32, 3] {
            for n in [2usize, 3] {
                for k in 0..4i64 {
                    let mut parts = vec![0i64; n];
                    parts[0] = k * i64::from(d);
                    assert_eq!(e.s_mult(&w(&parts), d).unwrap(), 1, "d={d} n={n} k={k}");
                }
            }
        }
        assert_eq!(e.s_mult(&w(&[3, 1]), 2).unwrap(), 0);
        assert_eq!(e.s_mult(&w(&[2, 2]), 2).unwrap(), 1);
        assert_eq!(e.s_mult(&w(&[3, 0]), 2).unwrap(), 0);
        assert_eq!(e.s_mult(&w(&[3, -1]), 2).unwrap(), 0);
        assert!(e.s_mult(&w(&[2, 2]), 1).is_err());
    }

    #[test]
    fn a_and_p_examples() {
        let e = Engine::default();
        assert_eq!(e.a_pleth(&w(&[2, 2]), 2).unwrap(), 0);
        assert_eq!(e.a_pleth(&w(&[4, 0]), 2).unwrap(), 1);
        assert_eq!(e.a_pleth(&w(&[4, 2]), 2).unwrap(), 1);
        for k in 1..4i64 {
            assert_eq!(e.p_mult(&w(&[2 * k, 0, 0]), 2).unwrap(), 0);
            assert_eq!(e.p_mult(&w(&[3 * k, 0]), 3).unwrap(), 0);
        }
        assert_eq!(e.p_mult(&w(&[2, 2]), 2).unwrap(), 1);
        assert_eq!(e.p_mult(&w(&[0, 0, 0]), 2).unwrap(), 1);
    }

    #[test]
    fn nu_examples() {
        let e = Engine::default();
        assert_eq!(e.nu_stable(&[4, 2], 2).unwrap(), 1);
        assert_eq!(e.nu_stable(&[3, 2], 2).unwrap(), 0);
        assert_eq!(e.nu_stable(&[5], 3).unwrap(), 1);
        assert_eq!(e.nu_stable(&[6], 3).unwrap(), 2);
        assert_eq!(e.nu_stable(&[], 3).unwrap(), 1);
        assert_eq!(e.nu_stable(&[0, 0], 3).unwrap(), 1);
        assert_eq!(e.nu_stable(&[-1], 2).unwrap(), 0);
        assert_eq!(e.nu_stable(&[1, 2], 2).unwrap(), 0);
    }

    #[test]
    fn nu_at_level_examples() {
        let e = Engine::default();
        assert_eq!(e.nu_at_level(&[2], 2, 2).unwrap(), 1);
        assert_eq!(e.nu_at_level(&[2], 1, 2).unwrap(), 0);
        for k in 0..5 {
            assert_eq!(e.nu_at_level(&[0, 0], k, 3).unwrap(), 1);
        }
        assert!(e.nu_at_level(&[-1], 3, 2).is_err());
    }

    #[test]
    fn m_examples() {
        let e = Engine::default();
        assert_eq!(e.m_lambda(&w(&[4, 2]), 2).unwrap(), 1);
        assert_eq!(e.m_lambda(&w(&[3, 3]), 2).unwrap(), -1);
        for d in [2u32, 3] {
            for n in [2usize, 3, 4] {
                let u = u_d(n, d).unwrap();
                for last in [u - 1, 0, -3] {
                    let mut parts = vec![u - 1; n];
                    parts[0] = u + 1;
                    parts[n - 1] = last;
                    assert_eq!(e.m_lambda(&w(&parts), d).unwrap(), 1, "{parts:?}");
                }
            }
        }
    }

    #[test]
    fn e_examples() {
        let e = Engine::default();
        assert_eq!(e.e_lambda(&w(&[3, 3]), 2).unwrap(), 1);
        assert_eq!(e.e_lambda(&w(&[4, 3]), 2).unwrap(), 0);
        assert_eq!(e.e_lambda(&w(&[5, 3]), 2).unwrap(), 1);
        let u = u_d(3, 3).unwrap();
        assert_eq!(e.e_lambda(&DominantWeight::constant(3, u).unwrap(), 3).unwrap(), 1);
        // d = 2 closed form: all λ_i ≥ n+1 with λ_i − n odd.
        for parts in [[3i64, 3], [5, 3], [7, 5], [4, 4], [6, 3], [3, 1]] {
            let closed = parts.iter().all(|&p| p >= 3 && (p - 2) % 2 == 1);
            assert_eq!(e.e_lambda(&w(&parts), 2).unwrap(), u64::from(closed), "{parts:?}");
        }
    }

    #[test]
    fn a_j_examples() {
        let e = Engine::default();
        assert_eq!(e.a_lambda_j(&w(&[3, 3]), 0, 2).unwrap(), 0);
        assert_eq!(e.a_lambda_j(&w(&[4, 2]), 0, 2).unwrap(), 1);
        assert_eq!(e.a_lambda_j(&w(&[4, 1]), 1, 2).unwrap(), 1);
        assert_eq!(e.a_lambda_j(&w(&[4, 1]), 0, 2).unwrap(), 0);
        assert!(e.a_lambda_j(&w(&[4, 1]), 2, 2).is_err());
    }

    #[test]
    fn engine_is_sync() {
        fn check<T: Send + Sync>() {}
        check::<Engine>();
        let _ = Partition::new(vec![0]).unwrap();
    }
}
