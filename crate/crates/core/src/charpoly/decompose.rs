//! Inverse of the character map by leading-term subtraction.
//!
//! Schur polynomials are unitriangular with respect to dominance, and the
//! lexicographic order refines dominance. Repeatedly taking the
//! lexicographically greatest dominant exponent still present and subtracting
//! that many copies of its Schur character therefore recovers every
//! multiplicity, and the multiplicity at `λ` only depends on constituents
//! lexicographically above `λ`. [`Decomposer`] exploits the latter: it can
//! stop at a floor and resume later.

use alloc::collections::BTreeMap;
use super::{CharacterPoly, Exponent, KostkaTable, VirtualCharacter};
use crate::error::{Error, Result};
use crate::weights::DominantWeight;

/// Resumable decomposition of a symmetric character.
#[derive(Clone, Debug)]
pub struct Decomposer {
    n: usize,
    /// Dominant part of what is left to explain.
    residual: BTreeMap<Exponent, i128>,
    found: BTreeMap<Exponent, u64>,
}

impl Decomposer {
    /// Fails with [`Error::NotSymmetric`] on non-symmetric input.
    pub fn new(c: &CharacterPoly) -> Result<Self> {
        if let Some(e) = c.first_asymmetry() {
            return Err(Error::NotSymmetric { weight: e.clone() });
        }
        let residual = c
            .dominant_terms()
            .map(|(e, m)| (e.clone(), i128::from(m)))
            .collect();
        Ok(Self {
            n: c.n(),
            residual,
            found: BTreeMap::new(),
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn is_complete(&self) -> bool {
        self.residual.is_empty()
    }

    /// Peels constituents until every remaining residual weight is below
    /// `floor` (all of them when `floor` is `None`).
    pub fn advance(&mut self, floor: Option<&[u32]>, kostka: &KostkaTable) -> Result<()> {
        loop {
            let Some((top, &coeff)) = self.residual.last_key_value() else {
                return Ok(());
            };
            if floor.is_some_and(|f| top.as_slice() < f) {
                return Ok(());
            }
            let top = top.clone();
            if coeff < 0 {
                return Err(Error::NotACharacter { weight: top });
            }
            let mult = u64::try_from(coeff).map_err(|_| Error::Overflow("multiplicity"))?;
            let row = kostka.row(&top)?;
            for (mu, &k) in row.iter() {
                let delta = i128::from(mult) * i128::from(k);
                let slot = self.residual.entry(mu.clone()).or_insert(0);
                *slot -= delta;
                // Later steps only subtract further, so a negative entry can
                // never recover.
                if *slot < 0 {
                    return Err(Error::NotACharacter { weight: mu.clone() });
                }
                if *slot == 0 {
                    self.residual.remove(mu);
                }
            }
            self.found.insert(top, mult);
        }
    }

    /// Multiplicity of `S_λ`, decomposing only as far as needed.
    pub fn multiplicity(&mut self, lambda: &[u32], kostka: &KostkaTable) -> Result<u64> {
        if lambda.len() != self.n {
            return Err(Error::LengthMismatch {
                expected: self.n,
                found: lambda.len(),
            });
        }
        self.advance(Some(lambda), kostka)?;
        Ok(self.found.get(lambda).copied().unwrap_or(0))
    }

    /// Constituents found so far, in ascending lexicographic order.
    pub fn found(&self) -> &BTreeMap<Exponent, u64> {
        &self.found
    }

    pub fn into_virtual(mut self, kostka: &KostkaTable) -> Result<VirtualCharacter> {
        self.advance(None, kostka)?;
        let mut out = VirtualCharacter::new(self.n);
        for (e, m) in self.found {
            let m = i64::try_from(m).map_err(|_| Error::Overflow("multiplicity"))?;
            out.add(DominantWeight::from_exponent(&e)?, m)?;
        }
        Ok(out)
    }
}

/// The unique combination `Σ a_λ S_λ` whose character is `c`.
pub fn decompose(c: &CharacterPoly) -> Result<VirtualCharacter> {
    let kostka = KostkaTable::new();
    Decomposer::new(c)?.into_virtual(&kostka)
}
