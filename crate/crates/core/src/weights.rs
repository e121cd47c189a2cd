//! Dominant weights of GL(n), partitions, and the weight transforms used by
//! the multiplicity formulas.
//!
//! A weight is stored most significant part first. All arithmetic on parts is
//! checked; an overflow surfaces as [`Error::Overflow`] instead of wrapping.

use alloc::vec::Vec;
use core::fmt;
use core::ops::Deref;

use crate::error::{Error, Result};

/// A nonincreasing integer vector `(λ_1 ≥ ... ≥ λ_n)` with `n ≥ 1`.
///
/// Ordering is lexicographic on the parts, which is the order the
/// decomposition and serialization code rely on.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct DominantWeight {
    parts: Vec<i64>,
}

impl DominantWeight {
    pub fn new(parts: Vec<i64>) -> Result<Self> {
        if parts.is_empty() {
            return Err(Error::InvalidParameter("a weight needs at least one part".into()));
        }
        if !is_dominant(&parts) {
            return Err(Error::NotDominant { parts });
        }
        Ok(Self { parts })
    }

    /// `(c, c, ..., c)` with `n` parts.
    pub fn constant(n: usize, c: i64) -> Result<Self> {
        Self::new(alloc::vec![c; n])
    }

    pub fn zero(n: usize) -> Result<Self> {
        Self::constant(n, 0)
    }

    pub fn parts(&self) -> &[i64] {
        &self.parts
    }

    pub fn into_parts(self) -> Vec<i64> {
        self.parts
    }

    pub fn n(&self) -> usize {
        self.parts.len()
    }

    pub fn first(&self) -> i64 {
        self.parts[0]
    }

    pub fn last(&self) -> i64 {
        self.parts[self.parts.len() - 1]
    }

    pub fn size(&self) -> Result<i64> {
        size(&self.parts)
    }

    pub fn is_partition(&self) -> bool {
        self.last() >= 0
    }

    /// Componentwise `self ≥ other`.
    pub fn contains(&self, other: &DominantWeight) -> Result<bool> {
        if self.n() != other.n() {
            return Err(Error::LengthMismatch {
                expected: self.n(),
                found: other.n(),
            });
        }
        Ok(self.parts.iter().zip(&other.parts).all(|(a, b)| a >= b))
    }

    /// `λ + (c^n)`: tensoring with the `c`-th power of the determinant.
    pub fn det_twist(&self, c: i64) -> Result<DominantWeight> {
        let parts = self
            .parts
            .iter()
            .map(|&p| p.checked_add(c).ok_or(Error::Overflow("determinant twist")))
            .collect::<Result<Vec<_>>>()?;
        Ok(Self { parts })
    }

    /// `(−λ_n, ..., −λ_1)`, the weight of the dual representation.
    pub fn dual(&self) -> Result<DominantWeight> {
        let parts = self
            .parts
            .iter()
            .rev()
            .map(|&p| p.checked_neg().ok_or(Error::Overflow("dual weight")))
            .collect::<Result<Vec<_>>>()?;
        Ok(Self { parts })
    }

    /// `λ̄ = (λ_2, ..., λ_n)`.
    pub fn drop_first(&self) -> Vec<i64> {
        self.parts[1..].to_vec()
    }

    /// `λ + kδ` where `δ = (d, 0, ..., 0)`. Only the first part moves, so the
    /// result may fail to be dominant when `k < 0`.
    pub fn add_k_delta(&self, k: i64, d: i64) -> Result<Vec<i64>> {
        add_k_delta(&self.parts, k, d)
    }

    /// Parts as `u32` exponents, for weights that are partitions.
    pub fn to_exponent(&self) -> Result<Vec<u32>> {
        self.parts
            .iter()
            .map(|&p| {
                u32::try_from(p).map_err(|_| Error::NotAPartition {
                    parts: self.parts.clone(),
                })
            })
            .collect()
    }

    pub fn from_exponent(exponent: &[u32]) -> Result<Self> {
        Self::new(exponent.iter().map(|&e| i64::from(e)).collect())
    }
}

impl fmt::Debug for DominantWeight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_tuple("DominantWeight").field(&self.parts).finish()
    }
}

impl fmt::Display for DominantWeight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

impl TryFrom<Vec<i64>> for DominantWeight {
    type Error = Error;

    fn try_from(parts: Vec<i64>) -> Result<Self> {
        Self::new(parts)
    }
}

/// A dominant weight with nonnegative parts.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Partition(DominantWeight);

impl Partition {
    pub fn new(parts: Vec<i64>) -> Result<Self> {
        DominantWeight::new(parts)?.try_into()
    }

    pub fn weight(&self) -> &DominantWeight {
        &self.0
    }

    pub fn into_weight(self) -> DominantWeight {
        self.0
    }

    /// `λ_2 ≤ 1`; vacuously true when `n = 1`.
    pub fn is_hook(&self) -> bool {
        self.0.parts.get(1).is_none_or(|&p| p <= 1)
    }
}

impl TryFrom<DominantWeight> for Partition {
    type Error = Error;

    fn try_from(w: DominantWeight) -> Result<Self> {
        if w.is_partition() {
            Ok(Partition(w))
        } else {
            Err(Error::NotAPartition { parts: w.parts })
        }
    }
}

impl Deref for Partition {
    type Target = DominantWeight;

    fn deref(&self) -> &DominantWeight {
        &self.0
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

pub fn is_dominant(parts: &[i64]) -> bool {
    parts.windows(2).all(|w| w[0] >= w[1])
}

/// Nonincreasing with nonnegative parts. The empty vector is a partition.
pub fn is_partition(parts: &[i64]) -> bool {
    is_dominant(parts) && parts.last().is_none_or(|&p| p >= 0)
}

pub fn size(parts: &[i64]) -> Result<i64> {
    parts
        .iter()
        .try_fold(0i64, |acc, &p| acc.checked_add(p))
        .ok_or(Error::Overflow("weight size"))
}

/// `C(top, bottom)` with overflow detection.
pub fn binomial(top: u64, bottom: u64) -> Result<u64> {
    if bottom > top {
        return Ok(0);
    }
    let bottom = bottom.min(top - bottom);
    let mut acc: u128 = 1;
    for i in 0..bottom {
        // acc = C(top, i) here, so the division is exact.
        acc = acc
            .checked_mul(u128::from(top - i))
            .ok_or(Error::Overflow("binomial coefficient"))?
            / u128::from(i + 1);
    }
    u64::try_from(acc).map_err(|_| Error::Overflow("binomial coefficient"))
}

fn check_nd(n: usize, d: u32) -> Result<()> {
    if n == 0 {
        return Err(Error::InvalidParameter("n must be at least 1".into()));
    }
    if d < 2 {
        return Err(Error::InvalidParameter("d must be at least 2".into()));
    }
    Ok(())
}

/// Exponent of the determinant in `det(Sym^d W) = det(W)^u`, i.e. `C(n−1+d, n)`.
pub fn u_d(n: usize, d: u32) -> Result<i64> {
    check_nd(n, d)?;
    let b = binomial(n as u64 - 1 + u64::from(d), n as u64)?;
    i64::try_from(b).map_err(|_| Error::Overflow("u_d"))
}

/// Codimension of the Veronese cone in `Sym^d W`: `C(n−1+d, d) − n`.
pub fn n_d(n: usize, d: u32) -> Result<i64> {
    check_nd(n, d)?;
    let b = binomial(n as u64 - 1 + u64::from(d), u64::from(d))?;
    i64::try_from(b)
        .map_err(|_| Error::Overflow("n_d"))?
        .checked_sub(n as i64)
        .ok_or(Error::Overflow("n_d"))
}

fn checked_index(i: usize, n: usize) -> Result<()> {
    if i == 0 || i > n {
        Err(Error::IndexOutOfRange { index: i, len: n })
    } else {
        Ok(())
    }
}

/// `(λ_1+1, ..., λ_{i−1}+1, λ_{i+1}, ..., λ_n)` for `1 ≤ i ≤ n`.
pub fn tilde_lambda_sup_i(lambda: &DominantWeight, i: usize) -> Result<Vec<i64>> {
    shifted_removal(lambda, i, 0)
}

/// `(λ_1+1−u_d, ..., λ_{i−1}+1−u_d, λ_{i+1}−u_d, ..., λ_n−u_d)`.
///
/// The result is always nonincreasing but may have negative parts.
pub fn lambda_sup_i(lambda: &DominantWeight, i: usize, d: u32) -> Result<Vec<i64>> {
    let u = u_d(lambda.n(), d)?;
    shifted_removal(lambda, i, u)
}

fn shifted_removal(lambda: &DominantWeight, i: usize, u: i64) -> Result<Vec<i64>> {
    let n = lambda.n();
    checked_index(i, n)?;
    let overflow = || Error::Overflow("weight transform");
    let mut out = Vec::with_capacity(n - 1);
    for (pos, &p) in lambda.parts().iter().enumerate() {
        let idx = pos + 1;
        if idx < i {
            out.push(p.checked_add(1).and_then(|q| q.checked_sub(u)).ok_or_else(overflow)?);
        } else if idx > i {
            out.push(p.checked_sub(u).ok_or_else(overflow)?);
        }
    }
    Ok(out)
}

/// `μ[r] = (r − |μ|, μ_1, ..., μ_{n−1})`. Dominance is not checked.
pub fn mu_bracket_r(mu: &[i64], r: i64) -> Result<Vec<i64>> {
    let head = r
        .checked_sub(size(mu)?)
        .ok_or(Error::Overflow("mu[r]"))?;
    let mut out = Vec::with_capacity(mu.len() + 1);
    out.push(head);
    out.extend_from_slice(mu);
    Ok(out)
}

pub fn add_k_delta(parts: &[i64], k: i64, d: i64) -> Result<Vec<i64>> {
    let mut out = parts.to_vec();
    if let Some(first) = out.first_mut() {
        *first = k
            .checked_mul(d)
            .and_then(|s| first.checked_add(s))
            .ok_or(Error::Overflow("lambda + k delta"))?;
    }
    Ok(out)
}

/// Partitions with exactly `parts` parts and size at most `max_size`.
pub fn partitions_up_to(parts: usize, max_size: u32) -> Vec<Vec<i64>> {
    fn rec(prefix: &mut Vec<i64>, parts: usize, left: i64, cap: i64, out: &mut Vec<Vec<i64>>) {
        if prefix.len() == parts {
            out.push(prefix.clone());
            return;
        }
        for v in 0..=cap.min(left) {
            prefix.push(v);
            rec(prefix, parts, left - v, v, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    let max = i64::from(max_size);
    rec(&mut Vec::with_capacity(parts), parts, max, max, &mut out);
    out
}

/// Componentwise difference `a − b` of equal-length vectors.
pub fn sub(a: &[i64], b: &[i64]) -> Result<Vec<i64>> {
    if a.len() != b.len() {
        return Err(Error::LengthMismatch {
            expected: a.len(),
            found: b.len(),
        });
    }
    a.iter()
        .zip(b)
        .map(|(x, y)| x.checked_sub(*y).ok_or(Error::Overflow("weight difference")))
        .collect()
}

#[cfg(test)]
mod tests {
    #[test]
    fn partition_listing() {
        assert_eq!(partitions_up_to(0, 3), vec![Vec::<i64>::new()]);
        assert_eq!(partitions_up_to(1, 2), vec![vec![0], vec![1], vec![2]]);
        assert_eq!(partitions_up_to(2, 2), vec![vec![0, 0], vec![1, 0], vec![1, 1], vec![2, 0]]);
    }

    use super::*;
    use alloc::vec;
    use proptest::prelude::*;

    fn w(parts: &[i64]) -> DominantWeight {
        DominantWeight::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn sizes() {
        assert_eq!(w(&[0, 0, 0]).size().unwrap(), 0);
        assert_eq!(w(&[4, 2]).size().unwrap(), 6);
        // (u^n) for n = 2, d = 2 has size u·n = N·d with N = dim Sym^2 C^2 = 3.
        let u = u_d(2, 2).unwrap();
        assert_eq!(DominantWeight::constant(2, u).unwrap().size().unwrap(), 3 * 2);
    }

    #[test]
    fn u_and_codimension() {
        assert_eq!(u_d(2, 2).unwrap(), 3);
        assert_eq!(u_d(3, 2).unwrap(), 4);
        assert_eq!(u_d(2, 3).unwrap(), 6);
        assert_eq!(n_d(2, 2).unwrap(), 1);
        assert_eq!(n_d(3, 2).unwrap(), 3);
        assert_eq!(n_d(2, 3).unwrap(), 2);
        assert!(u_d(0, 2).is_err());
        assert!(n_d(2, 1).is_err());
    }

    #[test]
    fn binomial_overflow_is_reported() {
        assert_eq!(binomial(5, 2).unwrap(), 10);
        assert_eq!(binomial(2, 5).unwrap(), 0);
        assert_eq!(binomial(67, 33).unwrap(), 14226520737620288370);
        assert!(matches!(binomial(200, 100), Err(Error::Overflow(_))));
        assert!(matches!(u_d(40, 40), Err(Error::Overflow(_))));
    }

    #[test]
    fn lambda_sup_examples() {
        assert_eq!(lambda_sup_i(&w(&[4, 2]), 2, 2).unwrap(), vec![2]);
        assert_eq!(lambda_sup_i(&w(&[4, 2]), 1, 2).unwrap(), vec![-1]);
        let u = u_d(3, 2).unwrap();
        let lam = w(&[u + 1, u - 1, 0]);
        assert_eq!(lambda_sup_i(&lam, 3, 2).unwrap(), vec![2, 0]);
        assert!(matches!(
            lambda_sup_i(&lam, 4, 2),
            Err(Error::IndexOutOfRange { index: 4, len: 3 })
        ));
        assert!(lambda_sup_i(&lam, 0, 2).is_err());
        // n = 1: the transform is the empty vector.
        assert!(lambda_sup_i(&w(&[7]), 1, 2).unwrap().is_empty());
    }

    #[test]
    fn tilde_examples() {
        assert_eq!(tilde_lambda_sup_i(&w(&[4, 2]), 2).unwrap(), vec![5]);
        assert_eq!(tilde_lambda_sup_i(&w(&[4, 2]), 1).unwrap(), vec![2]);
        assert_eq!(tilde_lambda_sup_i(&w(&[0, 0, 0]), 1).unwrap(), vec![0, 0]);
    }

    #[test]
    fn mu_bracket_examples() {
        assert_eq!(mu_bracket_r(&[2], 4).unwrap(), vec![2, 2]);
        assert_eq!(mu_bracket_r(&[], 5).unwrap(), vec![5]);
        let v = mu_bracket_r(&[2], 2).unwrap();
        assert_eq!(v, vec![0, 2]);
        assert!(!is_dominant(&v));
    }

    #[test]
    fn hooks() {
        assert!(Partition::new(vec![5, 1, 1]).unwrap().is_hook());
        assert!(!Partition::new(vec![2, 2]).unwrap().is_hook());
        assert!(Partition::new(vec![0, 0]).unwrap().is_hook());
        assert!(Partition::new(vec![3]).unwrap().is_hook());
    }

    #[test]
    fn construction_rejects_bad_vectors() {
        assert!(matches!(
            DominantWeight::new(vec![1, 2]),
            Err(Error::NotDominant { .. })
        ));
        assert!(DominantWeight::new(vec![]).is_err());
        assert!(matches!(
            Partition::new(vec![1, -1]),
            Err(Error::NotAPartition { .. })
        ));
    }

    #[test]
    fn containment_and_delta() {
        assert!(w(&[3, 2, 1]).contains(&w(&[3, 1, 1])).unwrap());
        assert!(!w(&[3, 1, 1]).contains(&w(&[2, 2, 0])).unwrap());
        assert!(w(&[3, 1]).contains(&w(&[1, 1, 1])).is_err());
        assert_eq!(w(&[3, 1]).add_k_delta(2, 3).unwrap(), vec![9, 1]);
        assert_eq!(w(&[3, 1]).add_k_delta(-1, 3).unwrap(), vec![0, 1]);
        assert_eq!(w(&[3, 1, 0]).drop_first(), vec![1, 0]);
    }

    #[test]
    fn twist_overflow() {
        assert!(matches!(
            w(&[i64::MAX, 0]).det_twist(1),
            Err(Error::Overflow(_))
        ));
        assert!(matches!(w(&[0, i64::MIN]).dual(), Err(Error::Overflow(_))));
    }

    fn dominant_strategy() -> impl Strategy<Value = DominantWeight> {
        (1usize..6)
            .prop_flat_map(|n| proptest::collection::vec(-20i64..20, n))
            .prop_map(|mut v| {
                v.sort_unstable_by(|a, b| b.cmp(a));
                DominantWeight::new(v).unwrap()
            })
    }

    proptest! {
        #[test]
        fn tilde_minus_sup_is_constant(lam in dominant_strategy(), d in 2u32..5, i_seed in 0usize..100) {
            let i = 1 + i_seed % lam.n();
            let u = u_d(lam.n(), d).unwrap();
            let tilde = tilde_lambda_sup_i(&lam, i).unwrap();
            let sup = lambda_sup_i(&lam, i, d).unwrap();
            prop_assert!(tilde.iter().zip(&sup).all(|(a, b)| a - b == u));
            prop_assert!(is_dominant(&sup));
        }

        #[test]
        fn involutions(lam in dominant_strategy(), c in -10i64..10) {
            prop_assert_eq!(&lam.dual().unwrap().dual().unwrap(), &lam);
            prop_assert_eq!(&lam.det_twist(c).unwrap().det_twist(-c).unwrap(), &lam);
            let back = mu_bracket_r(&lam.drop_first(), lam.size().unwrap()).unwrap();
            prop_assert_eq!(back.as_slice(), lam.parts());
        }
    }
}
