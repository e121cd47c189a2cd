//! Finite truncations of the (infinite) characters.

use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::weights::{binomial, DominantWeight};

/// Congruence condition `|λ| ≡ j (mod d)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Residue {
    pub j: u32,
    pub d: u32,
}

/// Dominant weights with `λ_1 ≤ lambda1_max`, `λ_n ≥ lambdan_min` and an
/// optional size residue. Inside a window every reported multiplicity is
/// exact.
///
/// A window with `lambda1_max < lambdan_min` is the empty window; it is only
/// produced by [`WeightWindow::empty`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct WeightWindow {
    pub n: usize,
    pub lambda1_max: i64,
    pub lambdan_min: i64,
    pub residue: Option<Residue>,
}

/// Upper bound on the number of weights a window may enumerate.
pub const MAX_WINDOW_WEIGHTS: u64 = 50_000_000;

impl WeightWindow {
    pub fn new(n: usize, lambda1_max: i64, lambdan_min: i64) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidParameter("window needs n ≥ 1".into()));
        }
        if lambda1_max < lambdan_min {
            return Err(Error::InvalidParameter(alloc::format!(
                "window bounds inverted: lambda1_max {lambda1_max} < lambdan_min {lambdan_min}"
            )));
        }
        Ok(Self {
            n,
            lambda1_max,
            lambdan_min,
            residue: None,
        })
    }

    pub fn empty(n: usize) -> Self {
        Self {
            n,
            lambda1_max: -1,
            lambdan_min: 0,
            residue: None,
        }
    }

    pub fn with_residue(mut self, j: u32, d: u32) -> Result<Self> {
        if d == 0 || j >= d {
            return Err(Error::InvalidParameter(alloc::format!(
                "residue {j} mod {d} out of range"
            )));
        }
        self.residue = Some(Residue { j, d });
        Ok(self)
    }

    pub fn is_empty(&self) -> bool {
        self.lambda1_max < self.lambdan_min
    }

    pub fn contains(&self, lambda: &DominantWeight) -> bool {
        lambda.n() == self.n
            && lambda.first() <= self.lambda1_max
            && lambda.last() >= self.lambdan_min
            && self.residue.is_none_or(|r| {
                lambda
                    .size()
                    .is_ok_and(|s| s.rem_euclid(i64::from(r.d)) == i64::from(r.j))
            })
    }

    /// Number of dominant weights inside the bounds, ignoring the residue.
    pub fn count_bound(&self) -> Result<u64> {
        if self.is_empty() {
            return Ok(0);
        }
        let span = (self.lambda1_max - self.lambdan_min) as u64 + 1;
        binomial(span + self.n as u64 - 1, self.n as u64)
    }

    /// All weights of the window, in descending lexicographic order.
    pub fn weights(&self) -> Result<Vec<DominantWeight>> {
        let count = self.count_bound()?;
        if count > MAX_WINDOW_WEIGHTS {
            return Err(Error::ResourceCap {
                what: "window enumeration",
                needed: u128::from(count),
                cap: MAX_WINDOW_WEIGHTS,
            });
        }
        let mut out = Vec::with_capacity(count as usize);
        if self.is_empty() {
            return Ok(out);
        }
        let n = self.n;
        let lo = self.lambdan_min;
        let mut parts = alloc::vec![self.lambda1_max; n];
        // Odometer over nonincreasing vectors, from the lex-greatest down.
        loop {
            let w = DominantWeight::new(parts.clone())?;
            if self.contains(&w) {
                out.push(w);
            }
            // Decrement the rightmost part that can move, reset the tail to it.
            let mut pos = n;
            loop {
                if pos == 0 {
                    return Ok(out);
                }
                pos -= 1;
                if parts[pos] > lo {
                    break;
                }
            }
            parts[pos] -= 1;
            let v = parts[pos];
            for p in parts.iter_mut().skip(pos + 1) {
                *p = v;
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn enumeration_is_complete_and_ordered() {
        let w = WeightWindow::new(3, 2, -1).unwrap();
        let all = w.weights().unwrap();
        assert_eq!(all.len() as u64, w.count_bound().unwrap());
        assert_eq!(all.len(), 20); // C(4+2, 3)
        assert!(all.windows(2).all(|p| p[0] > p[1]));
        assert_eq!(all[0].parts(), &[2, 2, 2]);
        assert_eq!(all.last().unwrap().parts(), &[-1, -1, -1]);
    }

    #[test]
    fn residue_filter() {
        let w = WeightWindow::new(2, 4, 0).unwrap().with_residue(1, 2).unwrap();
        let all = w.weights().unwrap();
        assert!(all.iter().all(|l| l.size().unwrap() % 2 == 1));
        assert!(all.iter().any(|l| l.parts() == [4, 1]));
        assert!(WeightWindow::new(2, 4, 0).unwrap().with_residue(2, 2).is_err());
    }

    #[test]
    fn empty_and_inverted() {
        assert!(WeightWindow::empty(3).weights().unwrap().is_empty());
        assert!(WeightWindow::new(2, 0, 1).is_err());
        assert!(WeightWindow::new(0, 1, 0).is_err());
    }
}
