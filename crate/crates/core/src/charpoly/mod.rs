//! Exact GL(n) character arithmetic.
//!
//! A [`CharacterPoly`] is a weight-multiplicity map: the coefficient of
//! `x^e` is the dimension of the `e`-weight space. Irreducible characters are
//! produced by [`schur_char`], tensor products by [`multiply`], and
//! [`decompose`] inverts the character map back to irreducible
//! multiplicities, returning a [`VirtualCharacter`].

mod decompose;
mod plethysm;
mod schur;

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::weights::DominantWeight;
use crate::window::WeightWindow;

pub use decompose::{decompose, Decomposer};
pub use plethysm::{
    degree_monomials, graded_tensor_sym_algebra, sym_power_of_sym, Limits, DEFAULT_MAX_TERMS,
};
pub use schur::{schur_char, KostkaTable};

pub type Exponent = Vec<u32>;

/// Finitely supported map from exponent vectors of length `n` to positive
/// multiplicities.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CharacterPoly {
    n: usize,
    terms: BTreeMap<Exponent, u64>,
}

impl CharacterPoly {
    pub fn new(n: usize) -> Self {
        Self {
            n,
            terms: BTreeMap::new(),
        }
    }

    /// The trivial character `{(0, ..., 0): 1}`.
    pub fn one(n: usize) -> Self {
        let mut c = Self::new(n);
        c.terms.insert(alloc::vec![0; n], 1);
        c
    }

    pub fn from_terms(n: usize, terms: impl IntoIterator<Item = (Exponent, u64)>) -> Result<Self> {
        let mut c = Self::new(n);
        for (e, m) in terms {
            c.add_term(e, m)?;
        }
        Ok(c)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn terms(&self) -> &BTreeMap<Exponent, u64> {
        &self.terms
    }

    pub fn get(&self, exponent: &[u32]) -> u64 {
        self.terms.get(exponent).copied().unwrap_or(0)
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, exponent: Exponent, mult: u64) -> Result<()> {
        if exponent.len() != self.n {
            return Err(Error::LengthMismatch {
                expected: self.n,
                found: exponent.len(),
            });
        }
        if mult == 0 {
            return Ok(());
        }
        let slot = self.terms.entry(exponent).or_insert(0);
        *slot = slot
            .checked_add(mult)
            .ok_or(Error::Overflow("character multiplicity"))?;
        Ok(())
    }

    /// `self += x^shift · other`, used by the generating-function sweeps.
    pub(crate) fn add_shifted(&mut self, other: &CharacterPoly, shift: &[u32]) -> Result<()> {
        for (e, &m) in &other.terms {
            let key = e
                .iter()
                .zip(shift)
                .map(|(a, b)| a.checked_add(*b))
                .collect::<Option<Exponent>>()
                .ok_or(Error::Overflow("exponent"))?;
            let slot = self.terms.entry(key).or_insert(0);
            *slot = slot
                .checked_add(m)
                .ok_or(Error::Overflow("character multiplicity"))?;
        }
        Ok(())
    }

    /// Sum of all multiplicities, i.e. the dimension of the representation.
    pub fn dimension(&self) -> Result<u64> {
        self.terms
            .values()
            .try_fold(0u64, |acc, &m| acc.checked_add(m))
            .ok_or(Error::Overflow("dimension"))
    }

    /// Invariance under permutation of the coordinates.
    pub fn is_symmetric(&self) -> bool {
        self.first_asymmetry().is_none()
    }

    /// First exponent whose coefficient changes under some adjacent
    /// transposition; adjacent transpositions generate the symmetric group.
    pub(crate) fn first_asymmetry(&self) -> Option<&Exponent> {
        let mut swapped = Vec::new();
        self.terms.iter().find_map(|(e, &m)| {
            (0..e.len().saturating_sub(1)).find_map(|i| {
                if e[i] == e[i + 1] {
                    return None;
                }
                swapped.clone_from(e);
                swapped.swap(i, i + 1);
                (self.get(&swapped) != m).then_some(e)
            })
        })
    }

    /// Coefficients at dominant (nonincreasing) exponents.
    pub fn dominant_terms(&self) -> impl Iterator<Item = (&Exponent, u64)> {
        self.terms
            .iter()
            .filter(|(e, _)| e.windows(2).all(|w| w[0] >= w[1]))
            .map(|(e, &m)| (e, m))
    }
}

/// Tensor product at the level of characters.
pub fn multiply(a: &CharacterPoly, b: &CharacterPoly) -> Result<CharacterPoly> {
    if a.n != b.n {
        return Err(Error::LengthMismatch {
            expected: a.n,
            found: b.n,
        });
    }
    let mut out = CharacterPoly::new(a.n);
    for (ea, &ma) in &a.terms {
        for (eb, &mb) in &b.terms {
            let key = ea
                .iter()
                .zip(eb)
                .map(|(x, y)| x.checked_add(*y))
                .collect::<Option<Exponent>>()
                .ok_or(Error::Overflow("exponent"))?;
            let m = ma
                .checked_mul(mb)
                .ok_or(Error::Overflow("character multiplicity"))?;
            out.add_term(key, m)?;
        }
    }
    Ok(out)
}

/// Integer combination of irreducibles `S_λ`, indexed by dominant weights.
///
/// When a window is attached the stored coefficients are exact inside it and
/// nothing is claimed outside.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VirtualCharacter {
    n: usize,
    terms: BTreeMap<DominantWeight, i64>,
    window: Option<WeightWindow>,
}

impl VirtualCharacter {
    pub fn new(n: usize) -> Self {
        Self {
            n,
            terms: BTreeMap::new(),
            window: None,
        }
    }

    pub fn windowed(window: WeightWindow) -> Self {
        Self {
            n: window.n,
            terms: BTreeMap::new(),
            window: Some(window),
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn window(&self) -> Option<&WeightWindow> {
        self.window.as_ref()
    }

    pub fn terms(&self) -> &BTreeMap<DominantWeight, i64> {
        &self.terms
    }

    /// Entries in descending lexicographic order of the weight.
    pub fn iter_desc(&self) -> impl Iterator<Item = (&DominantWeight, i64)> {
        self.terms.iter().rev().map(|(w, &m)| (w, m))
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Raw coefficient lookup, no window check.
    pub fn coefficient(&self, lambda: &DominantWeight) -> i64 {
        self.terms.get(lambda).copied().unwrap_or(0)
    }

    pub fn add(&mut self, lambda: DominantWeight, mult: i64) -> Result<()> {
        if lambda.n() != self.n {
            return Err(Error::LengthMismatch {
                expected: self.n,
                found: lambda.n(),
            });
        }
        if mult == 0 {
            return Ok(());
        }
        let slot = self.terms.entry(lambda.clone()).or_insert(0);
        *slot = slot
            .checked_add(mult)
            .ok_or(Error::Overflow("virtual multiplicity"))?;
        if *slot == 0 {
            self.terms.remove(&lambda);
        }
        Ok(())
    }
}

/// Multiplicity of `S_λ` in `u`.
///
/// For a windowed character, asking about a weight outside the window bounds
/// is an error rather than a silent zero. A weight inside the bounds but of a
/// different size residue has multiplicity zero by construction.
pub fn mult_of(lambda: &DominantWeight, u: &VirtualCharacter) -> Result<i64> {
    if lambda.n() != u.n {
        return Err(Error::LengthMismatch {
            expected: u.n,
            found: lambda.n(),
        });
    }
    if let Some(w) = &u.window {
        if w.is_empty() || lambda.first() > w.lambda1_max || lambda.last() < w.lambdan_min {
            return Err(Error::OutsideWindow {
                lambda: lambda.parts().to_vec(),
            });
        }
    }
    Ok(u.coefficient(lambda))
}
