//! Windowed characters of `D_j` and `E`, and the closed-form `d = 2` table.

use super::Engine;
use crate::charpoly::VirtualCharacter;
use crate::error::{Error, Result};
use crate::weights::DominantWeight;
use crate::window::WeightWindow;

impl Engine {
    /// `D_j` restricted to `window`: every `λ` in the window with
    /// `|λ| ≡ j (mod d)` and nonzero `a_λ^j`.
    pub fn dj_character(&self, j: u32, d: u32, window: &WeightWindow) -> Result<VirtualCharacter> {
        let window = residue_window(window, j, d)?;
        let mut out = VirtualCharacter::windowed(window);
        for lambda in window.weights()? {
            let a = self.a_lambda_j(&lambda, j, d)?;
            out.add(lambda, a)?;
        }
        Ok(out)
    }

    /// `E = det(Sym^d W) ⊗ Sym(Sym^d W)` restricted to `window`.
    pub fn e_character(&self, d: u32, window: &WeightWindow) -> Result<VirtualCharacter> {
        let mut out = VirtualCharacter::windowed(*window);
        for lambda in window.weights()? {
            let e = self.e_lambda(&lambda, d)?;
            out.add(lambda, i64::try_from(e).map_err(|_| Error::Overflow("e_λ"))?)?;
        }
        Ok(out)
    }
}

/// `window` with the residue `j mod d` attached; a conflicting residue is an error.
pub(crate) fn residue_window(window: &WeightWindow, j: u32, d: u32) -> Result<WeightWindow> {
    match window.residue {
        Some(r) if r.j != j || r.d != d => Err(Error::InvalidParameter(alloc::format!(
            "window already restricted to {} mod {}",
            r.j, r.d
        ))),
        _ => window.with_residue(j, d),
    }
}

/// Cell of the `d = 2` table a weight belongs to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum D2Cell {
    D0,
    D1,
    None,
}

/// Closed-form description of `D_0` and `D_1` for `d = 2`.
///
/// With `λ_1, ..., λ_{n−1} ≥ n` throughout:
///
/// | | `D_0` | `D_1` |
/// |---|---|---|
/// | `n` even | all `λ_i` even | `λ_i` even for `i < n`, `λ_n ≤ n−1` odd |
/// | `n` odd | `λ_i` odd for `i < n`, `λ_n ≤ n−1` even | all `λ_i` odd |
pub fn d2_table_predicate(lambda: &DominantWeight) -> D2Cell {
    let parts = lambda.parts();
    let n = parts.len();
    let bound = n as i64;
    let (head, last) = parts.split_at(n - 1);
    let last = last[0];
    if head.iter().any(|&p| p < bound) {
        return D2Cell::None;
    }
    let head_parity = if n.is_multiple_of(2) { 0 } else { 1 };
    if head.iter().any(|&p| p.rem_euclid(2) != head_parity) {
        return D2Cell::None;
    }
    let last_even = last.rem_euclid(2) == 0;
    let last_low = last < bound;
    match (n.is_multiple_of(2), last_even) {
        (true, true) => D2Cell::D0,
        (true, false) if last_low => D2Cell::D1,
        (false, true) if last_low => D2Cell::D0,
        (false, false) => D2Cell::D1,
        _ => D2Cell::None,
    }
}
