//! Catalan tuples: ballot sequences `(e_0, ..., e_k)` with total `k` whose
//! partial sums `e_0 + ... + e_l` exceed `l` for every `l < k`.
//!
//! Besides validation this module provides the partial sums `p_l`, the first
//! hitting index `sigma_a`, the two compositions `∘` and `•` with their unique
//! factorizations, and exhaustive enumeration.

use std::cmp::Reverse;
use std::fmt;

use num_bigint::BigUint;
use num_traits::One;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest tuple length enumerated without an explicit override.
pub const DEFAULT_TUPLE_LIMIT: usize = 12;

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct CatalanTuple(Vec<usize>);

impl CatalanTuple {
    /// Checks the total and the ballot condition, reporting the first violation.
    pub fn new(entries: Vec<usize>) -> Result<Self> {
        if entries.is_empty() {
            return Err(Error::EmptyTuple);
        }
        let length = entries.len() - 1;
        let mut sum = 0usize;
        for (l, &e) in entries.iter().enumerate().take(length) {
            sum = sum.checked_add(e).ok_or(Error::WrongTotal {
                sum: usize::MAX,
                length,
            })?;
            if sum <= l {
                return Err(Error::BallotViolated { index: l, sum });
            }
        }
        let total = sum.checked_add(entries[length]).ok_or(Error::WrongTotal {
            sum: usize::MAX,
            length,
        })?;
        if total != length {
            return Err(Error::WrongTotal { sum: total, length });
        }
        Ok(CatalanTuple(entries))
    }

    /// The tuple `(0)`, the only element of `C_0`.
    pub fn trivial() -> Self {
        CatalanTuple(vec![0])
    }

    // Callers guarantee validity.
    fn from_raw(entries: Vec<usize>) -> Self {
        debug_assert!(CatalanTuple::new(entries.clone()).is_ok(), "{entries:?}");
        CatalanTuple(entries)
    }

    /// Length `k`, one less than the number of entries.
    pub fn length(&self) -> usize {
        self.0.len() - 1
    }

    pub fn entries(&self) -> &[usize] {
        &self.0
    }

    pub fn into_entries(self) -> Vec<usize> {
        self.0
    }

    pub fn first(&self) -> usize {
        self.0[0]
    }

    pub fn is_trivial(&self) -> bool {
        self.0.len() == 1
    }

    /// `p_l = e_0 + ... + e_l - l` for `0 <= l < k`; always at least 1.
    pub fn partial_sum(&self, l: usize) -> Result<usize> {
        if l >= self.length() {
            return Err(Error::IndexOutOfRange {
                index: l,
                length: self.length(),
            });
        }
        Ok(self.extended_partial_sum(l))
    }

    // Also defined at l = k, where it is 0.
    fn extended_partial_sum(&self, l: usize) -> usize {
        self.0[..=l].iter().sum::<usize>() - l
    }

    /// Smallest `l` with `p_l = a`, or `None` if `a` is never attained.
    ///
    /// `p_k = 0` is included, so `sigma(0)` is always `k`.
    pub fn sigma(&self, a: usize) -> Option<usize> {
        let mut sum = 0usize;
        for (l, &e) in self.0.iter().enumerate() {
            sum += e;
            if sum - l == a {
                return Some(l);
            }
        }
        None
    }

    /// `(e_0 + 1, e_1, ..., e_k, f_0, ..., f_m)`.
    pub fn compose_circ(&self, other: &CatalanTuple) -> CatalanTuple {
        let mut entries = Vec::with_capacity(self.0.len() + other.0.len());
        entries.extend_from_slice(&self.0);
        entries[0] += 1;
        entries.extend_from_slice(&other.0);
        CatalanTuple::from_raw(entries)
    }

    /// Splits at `sigma_1`: the unique pair `(a, b)` with `a ∘ b == self`.
    pub fn factor_circ(&self) -> Result<(CatalanTuple, CatalanTuple)> {
        if self.is_trivial() {
            return Err(Error::NoFactorization);
        }
        let split = self.sigma(1).expect("sigma_1 exists for length >= 1");
        let mut left = self.0[..=split].to_vec();
        left[0] -= 1;
        let right = self.0[split + 1..].to_vec();
        Ok((CatalanTuple::from_raw(left), CatalanTuple::from_raw(right)))
    }

    /// `(e_0 + 1, f_0, ..., f_m, e_1, ..., e_k)`.
    pub fn compose_bullet(&self, other: &CatalanTuple) -> CatalanTuple {
        let mut entries = Vec::with_capacity(self.0.len() + other.0.len());
        entries.push(self.0[0] + 1);
        entries.extend_from_slice(&other.0);
        entries.extend_from_slice(&self.0[1..]);
        CatalanTuple::from_raw(entries)
    }

    /// Splits at `sigma_{e_0 - 1}`: the unique pair `(a, b)` with `a • b == self`.
    pub fn factor_bullet(&self) -> Result<(CatalanTuple, CatalanTuple)> {
        if self.is_trivial() {
            return Err(Error::NoFactorization);
        }
        let split = self
            .sigma(self.0[0] - 1)
            .expect("sigma_{e_0 - 1} exists for length >= 1");
        let mut left = Vec::with_capacity(self.0.len() - split);
        left.push(self.0[0] - 1);
        left.extend_from_slice(&self.0[split + 1..]);
        let right = self.0[1..=split].to_vec();
        Ok((CatalanTuple::from_raw(left), CatalanTuple::from_raw(right)))
    }
}

impl TryFrom<Vec<usize>> for CatalanTuple {
    type Error = Error;

    fn try_from(entries: Vec<usize>) -> Result<Self> {
        CatalanTuple::new(entries)
    }
}

impl From<CatalanTuple> for Vec<usize> {
    fn from(t: CatalanTuple) -> Self {
        t.0
    }
}

impl fmt::Display for CatalanTuple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, e) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, ")")
    }
}

/// All of `C_k` in canonical order (lexicographically descending), guarded
/// by [`DEFAULT_TUPLE_LIMIT`].
pub fn enumerate_tuples(k: usize) -> Result<Vec<CatalanTuple>> {
    enumerate_tuples_with_limit(k, Some(DEFAULT_TUPLE_LIMIT))
}

pub fn enumerate_tuples_with_limit(k: usize, limit: Option<usize>) -> Result<Vec<CatalanTuple>> {
    if let Some(limit) = limit {
        if k > limit {
            return Err(Error::LimitExceeded {
                what: "tuple length",
                k,
                limit,
            });
        }
    }
    Ok(tuple_lists(k).pop().expect("at least C_0"))
}

/// `C_0, ..., C_k`, each in canonical order.
///
/// Every tuple of length `n >= 1` is `a ∘ b` for exactly one split, so the
/// lists are built from all `∘`-products of shorter ones.
pub(crate) fn tuple_lists(k: usize) -> Vec<Vec<CatalanTuple>> {
    let mut lists: Vec<Vec<CatalanTuple>> = vec![vec![CatalanTuple::trivial()]];
    for n in 1..=k {
        let mut level = Vec::new();
        for m in 0..n {
            for a in &lists[m] {
                for b in &lists[n - 1 - m] {
                    level.push(a.compose_circ(b));
                }
            }
        }
        level.sort_unstable_by(|x, y| Reverse(&x.0).cmp(&Reverse(&y.0)));
        lists.push(level);
    }
    lists
}

/// `c_k = binom(2k, k) / (k + 1)`.
pub fn catalan_number(k: usize) -> BigUint {
    binomial(2 * k, k) / BigUint::from(k + 1)
}

pub(crate) fn binomial(n: usize, r: usize) -> BigUint {
    if r > n {
        return BigUint::ZERO;
    }
    let r = r.min(n - r);
    let mut acc = BigUint::one();
    for i in 0..r {
        acc *= BigUint::from(n - i);
        acc /= BigUint::from(i + 1);
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(entries: &[usize]) -> CatalanTuple {
        CatalanTuple::new(entries.to_vec()).unwrap()
    }

    #[test]
    fn validate_examples() {
        assert_eq!(t(&[0]).length(), 0);
        assert_eq!(t(&[1, 1, 0]).length(), 2);
        assert_eq!(
            CatalanTuple::new(vec![0, 1]),
            Err(Error::BallotViolated { index: 0, sum: 0 })
        );
        assert_eq!(CatalanTuple::new(vec![]), Err(Error::EmptyTuple));
        assert_eq!(
            CatalanTuple::new(vec![2, 0]),
            Err(Error::WrongTotal { sum: 2, length: 1 })
        );
        assert_eq!(
            CatalanTuple::new(vec![1, 0, 1]),
            Err(Error::BallotViolated { index: 1, sum: 1 })
        );
    }

    #[test]
    fn partial_sums() {
        assert_eq!(t(&[2, 0, 0]).partial_sum(0), Ok(2));
        assert_eq!(t(&[2, 0, 0]).partial_sum(1), Ok(1));
        assert_eq!(t(&[1, 1, 0]).partial_sum(1), Ok(1));
        assert!(matches!(
            t(&[1, 1, 0]).partial_sum(2),
            Err(Error::IndexOutOfRange {
                index: 2,
                length: 2
            })
        ));
        assert!(t(&[0]).partial_sum(0).is_err());
    }

    #[test]
    fn sigma_examples() {
        assert_eq!(t(&[2, 0, 0]).sigma(1), Some(1));
        assert_eq!(t(&[3, 0, 0, 1, 0]).sigma(1), Some(2));
        assert_eq!(t(&[1, 3, 0, 0, 0]).sigma(2), Some(2));
        assert_eq!(t(&[2, 0, 0]).sigma(5), None);
        assert_eq!(t(&[1, 1, 0]).sigma(0), Some(2));
    }

    #[test]
    fn circ_examples() {
        assert_eq!(t(&[0]).compose_circ(&t(&[0])), t(&[1, 0]));
        assert_eq!(t(&[1, 0]).compose_circ(&t(&[0])), t(&[2, 0, 0]));
        assert_eq!(
            t(&[2, 1, 0, 0]).compose_circ(&t(&[2, 0, 0])),
            t(&[3, 1, 0, 0, 2, 0, 0])
        );
        assert_eq!(t(&[2, 0, 0]).factor_circ(), Ok((t(&[1, 0]), t(&[0]))));
        assert_eq!(t(&[1, 1, 0]).factor_circ(), Ok((t(&[0]), t(&[1, 0]))));
        assert_eq!(t(&[1, 0]).factor_circ(), Ok((t(&[0]), t(&[0]))));
        assert_eq!(t(&[0]).factor_circ(), Err(Error::NoFactorization));
    }

    #[test]
    fn bullet_examples() {
        assert_eq!(t(&[0]).compose_bullet(&t(&[0])), t(&[1, 0]));
        assert_eq!(t(&[1, 0]).compose_bullet(&t(&[0])), t(&[2, 0, 0]));
        assert_eq!(
            t(&[2, 0, 2, 0, 0]).compose_bullet(&t(&[1, 0])),
            t(&[3, 1, 0, 0, 2, 0, 0])
        );
        assert_eq!(t(&[1, 1, 0]).factor_bullet(), Ok((t(&[0]), t(&[1, 0]))));
        assert_eq!(
            t(&[2, 1, 0, 0]).factor_bullet(),
            Ok((t(&[1, 0]), t(&[1, 0])))
        );
        assert_eq!(
            t(&[3, 1, 0, 0, 2, 0, 0]).factor_bullet(),
            Ok((t(&[2, 0, 2, 0, 0]), t(&[1, 0])))
        );
        assert_eq!(t(&[0]).factor_bullet(), Err(Error::NoFactorization));
    }

    #[test]
    fn enumeration_small() {
        assert_eq!(enumerate_tuples(0).unwrap(), vec![t(&[0])]);
        assert_eq!(
            enumerate_tuples(2).unwrap(),
            vec![t(&[2, 0, 0]), t(&[1, 1, 0])]
        );
        assert_eq!(
            enumerate_tuples(3).unwrap(),
            vec![
                t(&[3, 0, 0, 0]),
                t(&[2, 1, 0, 0]),
                t(&[2, 0, 1, 0]),
                t(&[1, 2, 0, 0]),
                t(&[1, 1, 1, 0]),
            ]
        );
        assert!(matches!(
            enumerate_tuples(13),
            Err(Error::LimitExceeded {
                k: 13,
                limit: 12,
                ..
            })
        ));
        assert_eq!(
            enumerate_tuples_with_limit(13, None).unwrap().len(),
            742_900
        );
    }

    #[test]
    fn catalan_numbers() {
        assert_eq!(catalan_number(0), BigUint::from(1u32));
        assert_eq!(catalan_number(3), BigUint::from(5u32));
        assert_eq!(catalan_number(8), BigUint::from(1430u32));
    }

    #[test]
    fn serde_rejects_invalid() {
        let ok: CatalanTuple = serde_json::from_str("[2,0,0]").unwrap();
        assert_eq!(ok, t(&[2, 0, 0]));
        assert!(serde_json::from_str::<CatalanTuple>("[0,1]").is_err());
        assert_eq!(serde_json::to_string(&ok).unwrap(), "[2,0,0]");
    }
}
