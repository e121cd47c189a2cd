//! `Ext^{n_d+j}_S(M_μ, S)` as `GL(W)`-representations, where `M_μ` is the
//! cyclic module `⊕_{k≥0} S_{μ+kδ} V`.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use crate::bott::{bott, BottOutcome};
use crate::error::{Error, Result};
use crate::weights::{lambda_sup_i, n_d, u_d, DominantWeight, Partition};
use crate::window::WeightWindow;

/// Upper bound on the `k`-loop of [`ExtTable::via_bott`].
pub const MAX_BOTT_STEPS: u64 = 1_000_000;

/// Ext multiplicities of `M_μ`, restricted to a window of `W`-weights.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExtTable {
    mu: Partition,
    d: u32,
    window: WeightWindow,
    /// `(j, λ) ↦ ⟨S_λ W, Ext^{n_d+j}⟩`, zeros omitted.
    entries: BTreeMap<(usize, DominantWeight), u64>,
}

impl ExtTable {
    pub fn mu(&self) -> &Partition {
        &self.mu
    }

    pub fn d(&self) -> u32 {
        self.d
    }

    pub fn n(&self) -> usize {
        self.window.n
    }

    pub fn window(&self) -> &WeightWindow {
        &self.window
    }

    pub fn entries(&self) -> &BTreeMap<(usize, DominantWeight), u64> {
        &self.entries
    }

    /// Cohomological index `n_d + j`.
    pub fn index(&self, j: usize) -> Result<i64> {
        n_d(self.n(), self.d)?
            .checked_add(j as i64)
            .ok_or(Error::Overflow("Ext index"))
    }

    pub fn get(&self, j: usize, lambda: &DominantWeight) -> Result<u64> {
        if !self.window.contains(lambda) {
            return Err(Error::OutsideWindow {
                lambda: lambda.parts().to_vec(),
            });
        }
        Ok(self.entries.get(&(j, lambda.clone())).copied().unwrap_or(0))
    }

    /// Builds the table from Bott's theorem.
    ///
    /// `M*_μ = S_μ̄ R ⊗ ⊕_{k>0} Q^{μ_1−kd}` up to the twist by
    /// `det(Sym^d V)`, and `Ext^{n_d+j}` is dual to `H^{n−1−j}`. Each `k`
    /// contributes at most one weight. Once `r = μ_1 − kd` is below every
    /// Bott threshold the answer sits in top degree with last part
    /// `r + n − 1 + u_d`, which only decreases, so the loop stops as soon as
    /// that falls out of the window.
    pub fn via_bott(mu: &Partition, d: u32, window: &WeightWindow) -> Result<Self> {
        let n = mu.n();
        if window.n != n {
            return Err(Error::LengthMismatch {
                expected: n,
                found: window.n,
            });
        }
        check_congruence(mu.size()?, d, "|μ|")?;
        let u = u_d(n, d)?;
        let mut table = Self {
            mu: mu.clone(),
            d,
            window: *window,
            entries: BTreeMap::new(),
        };
        if window.is_empty() {
            return Ok(table);
        }
        let bar = mu.drop_first();
        let lowest_threshold = bar.last().map(|&m| m - (n as i64 - 1));
        let twist = DominantWeight::constant(n, u)?;
        for k in 1..=MAX_BOTT_STEPS {
            let r = mu.first() - k as i64 * i64::from(d);
            match bott(&bar, r, n)? {
                BottOutcome::Vanishing => {}
                BottOutcome::Cohomology { degree, weight } => {
                    let lambda = weight.det_twist(twist.first())?;
                    let j = n - 1 - degree;
                    if window.contains(&lambda) {
                        let slot = table.entries.entry((j, lambda.clone())).or_insert(0);
                        *slot += 1;
                        if *slot > 1 {
                            return Err(Error::Inconsistency(alloc::format!(
                                "Ext^{{n_d+{j}}}(M_{}) meets S_{}W more than once",
                                mu,
                                lambda
                            )));
                        }
                    }
                }
            }
            let settled = lowest_threshold.is_none_or(|t| r < t);
            if settled && r + (n as i64 - 1) + u < window.lambdan_min {
                return Ok(table);
            }
        }
        Err(Error::ResourceCap {
            what: "Ext k-cutoff",
            needed: u128::from(MAX_BOTT_STEPS) + 1,
            cap: MAX_BOTT_STEPS,
        })
    }

    /// Builds the table from the closed form by scanning the window.
    pub fn closed_form(mu: &Partition, d: u32, window: &WeightWindow) -> Result<Self> {
        let n = mu.n();
        if window.n != n {
            return Err(Error::LengthMismatch {
                expected: n,
                found: window.n,
            });
        }
        check_congruence(mu.size()?, d, "|μ|")?;
        let mut table = Self {
            mu: mu.clone(),
            d,
            window: *window,
            entries: BTreeMap::new(),
        };
        for lambda in window.weights()? {
            if lambda.size()?.rem_euclid(i64::from(d)) != 0 {
                continue;
            }
            for j in 0..n {
                if ext_closed_form(mu, &lambda, j, d)? == 1 {
                    table.entries.insert((j, lambda.clone()), 1);
                }
            }
        }
        Ok(table)
    }
}

fn check_congruence(size: i64, d: u32, what: &str) -> Result<()> {
    if d < 2 {
        return Err(Error::InvalidParameter("d must be at least 2".into()));
    }
    if size.rem_euclid(i64::from(d)) != 0 {
        return Err(Error::Precondition(alloc::format!(
            "{what} = {size} is not divisible by d = {d}"
        )));
    }
    Ok(())
}

/// `⟨S_λ W, Ext^{n_d+j}_S(M_μ, S)⟩` for `|λ| ≡ |μ| ≡ 0 (mod d)`:
/// 1 iff `μ̄ = λ^{n−j}`, with the extra condition `μ_1 − λ_1 + u_d > 0`
/// in top degree `j = n − 1`.
pub fn ext_closed_form(mu: &Partition, lambda: &DominantWeight, j: usize, d: u32) -> Result<u8> {
    let n = mu.n();
    if lambda.n() != n {
        return Err(Error::LengthMismatch {
            expected: n,
            found: lambda.n(),
        });
    }
    if j >= n {
        return Err(Error::IndexOutOfRange { index: j, len: n - 1 });
    }
    check_congruence(mu.size()?, d, "|μ|")?;
    check_congruence(lambda.size()?, d, "|λ|")?;
    let bar: Vec<i64> = mu.drop_first();
    if bar != lambda_sup_i(lambda, n - j, d)? {
        return Ok(0);
    }
    if j + 1 == n {
        let u = u_d(n, d)?;
        return Ok(u8::from(mu.first() - lambda.first() + u > 0));
    }
    Ok(1)
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn w(parts: &[i64]) -> DominantWeight {
        DominantWeight::new(parts.to_vec()).unwrap()
    }

    fn p(parts: &[i64]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn closed_form_examples() {
        assert_eq!(ext_closed_form(&p(&[2, 2]), &w(&[4, 2]), 0, 2).unwrap(), 1);
        assert_eq!(ext_closed_form(&p(&[2, 2]), &w(&[5, 5]), 1, 2).unwrap(), 0);
        assert_eq!(ext_closed_form(&p(&[2, 2]), &w(&[4, 2]), 1, 2).unwrap(), 0);
        assert!(ext_closed_form(&p(&[2, 1]), &w(&[4, 2]), 0, 2).is_err());
        assert!(ext_closed_form(&p(&[2, 2]), &w(&[4, 1]), 0, 2).is_err());
        assert!(ext_closed_form(&p(&[2, 2]), &w(&[4, 2]), 2, 2).is_err());
    }

    #[test]
    fn non_hooks_miss_the_determinant() {
        for (n, d) in [(2usize, 2u32), (3, 2), (3, 3)] {
            let det = DominantWeight::constant(n, u_d(n, d).unwrap()).unwrap();
            let mut mu = vec![0i64; n];
            mu[0] = 2 * i64::from(d) - 2;
            mu[1] = 2;
            let mu = p(&mu);
            for j in 0..n {
                assert_eq!(ext_closed_form(&mu, &det, j, d).unwrap(), 0);
            }
        }
    }

    #[test]
    fn bott_route_example() {
        let win = WeightWindow::new(2, 6, -2).unwrap();
        let t = ExtTable::via_bott(&p(&[2, 2]), 2, &win).unwrap();
        let got: Vec<_> = t.entries().keys().cloned().collect();
        // S_(4,λ_2) W in Ext^{n_d}, one for each even λ_2 ≤ 4 in the window.
        let expected: Vec<_> = [-2i64, 0, 2, 4].iter().map(|&b| (0usize, w(&[4, b]))).collect();
        assert_eq!(got, expected);
        assert_eq!(t.index(0).unwrap(), 1);
        assert_eq!(t, ExtTable::closed_form(&p(&[2, 2]), 2, &win).unwrap());
    }

    #[test]
    fn coordinate_ring() {
        // M_0 is the coordinate ring of the cone, Cohen-Macaulay of codimension n_d.
        for (n, d) in [(2usize, 2u32), (3, 2), (2, 3)] {
            let win = WeightWindow::new(n, 10, -10).unwrap();
            let mu = p(&vec![0; n]);
            let t = ExtTable::via_bott(&mu, d, &win).unwrap();
            assert!(!t.entries().is_empty());
            assert!(t.entries().keys().all(|(j, _)| *j == 0));
            assert_eq!(t, ExtTable::closed_form(&mu, d, &win).unwrap());
        }
    }

    #[test]
    fn two_routes_small() {
        let win = WeightWindow::new(3, 6, -6).unwrap();
        for parts in [[2i64, 0, 0], [2, 2, 0], [4, 2, 0], [2, 2, 2], [3, 1, 0], [1, 1, 0]] {
            let mu = p(&parts);
            assert_eq!(
                ExtTable::via_bott(&mu, 2, &win).unwrap(),
                ExtTable::closed_form(&mu, 2, &win).unwrap(),
                "{parts:?}"
            );
        }
    }

    #[test]
    fn empty_window() {
        let t = ExtTable::via_bott(&p(&[2, 0]), 2, &WeightWindow::empty(2)).unwrap();
        assert!(t.entries().is_empty());
    }
}
