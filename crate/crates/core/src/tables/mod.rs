//! Catalan tables: tuples of Catalan tuples whose shifted length profile is
//! itself a Catalan tuple, together with the gluing operations `◊` and `◆`.

mod counting;

pub use counting::{
    count_tables, count_trivial_first_pocket, count_trivial_first_pocket_enumerated,
    count_trivial_zeroth_pocket_enumerated, generating_functions_by_closed_form,
    generating_functions_by_recursion, verify_generating_functions, verify_pocket_sum_identity,
    GeneratingFunctionReport, PocketSumIdentity,
};

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::tuples::{tuple_lists, CatalanTuple};

/// Largest table length enumerated without an explicit override.
pub const DEFAULT_TABLE_LIMIT: usize = 9;

/// A Catalan table `⟨e^(0), ..., e^(k)⟩` of length `k >= 1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<CatalanTuple>", into = "Vec<CatalanTuple>")]
pub struct CatalanTable {
    pockets: Vec<CatalanTuple>,
}

impl CatalanTable {
    pub fn new(pockets: Vec<CatalanTuple>) -> Result<Self> {
        if pockets.len() < 2 {
            return Err(Error::TooFewPockets {
                expected: 2,
                actual: pockets.len(),
            });
        }
        let lengths = raw_lengths(&pockets);
        if let Err(e) = CatalanTuple::new(lengths.clone()) {
            return Err(Error::InvalidLengthTuple {
                lengths,
                reason: e.to_string(),
            });
        }
        Ok(CatalanTable { pockets })
    }

    /// Builds a table from raw integer arrays, validating every pocket.
    pub fn from_entries<I, V>(pockets: I) -> Result<Self>
    where
        I: IntoIterator<Item = V>,
        V: Into<Vec<usize>>,
    {
        let pockets = pockets
            .into_iter()
            .map(|p| CatalanTuple::new(p.into()))
            .collect::<Result<Vec<_>>>()?;
        CatalanTable::new(pockets)
    }

    fn from_raw(pockets: Vec<CatalanTuple>) -> Self {
        debug_assert!(CatalanTable::new(pockets.clone()).is_ok());
        CatalanTable { pockets }
    }

    /// Table length `k`; there are `k + 1` pockets.
    pub fn length(&self) -> usize {
        self.pockets.len() - 1
    }

    pub fn pockets(&self) -> &[CatalanTuple] {
        &self.pockets
    }

    pub fn pocket(&self, j: usize) -> &CatalanTuple {
        &self.pockets[j]
    }

    /// `(1 + |e^(0)|, |e^(1)|, ..., |e^(k)|)`.
    pub fn length_tuple(&self) -> CatalanTuple {
        CatalanTuple::new(raw_lengths(&self.pockets)).expect("validated at construction")
    }

    /// `⟨e^(0) ∘ f^(0), e^(1), ..., e^(k), f^(1), ..., f^(l)⟩`.
    pub fn compose_lozenge(&self, other: &CatalanTable) -> CatalanTable {
        let mut pockets = Vec::with_capacity(self.pockets.len() + other.pockets.len() - 1);
        pockets.push(self.pockets[0].compose_circ(&other.pockets[0]));
        pockets.extend_from_slice(&self.pockets[1..]);
        pockets.extend_from_slice(&other.pockets[1..]);
        CatalanTable::from_raw(pockets)
    }

    /// Inverse of [`compose_lozenge`](Self::compose_lozenge); needs `|e^(0)| >= 1`.
    ///
    /// The left factor keeps the pockets up to `sigma_{1 + |f^(0)|}` of the
    /// length tuple, where `f^(0)` is the right `∘`-factor of the zeroth pocket.
    pub fn factor_lozenge(&self) -> Result<(CatalanTable, CatalanTable)> {
        let (left0, right0) = self.pockets[0]
            .factor_circ()
            .map_err(|_| Error::NoLozengeDecomposition)?;
        let split = self
            .length_tuple()
            .sigma(1 + right0.length())
            .expect("attained by construction");
        let mut left = Vec::with_capacity(split + 1);
        left.push(left0);
        left.extend_from_slice(&self.pockets[1..=split]);
        let mut right = Vec::with_capacity(self.pockets.len() - split);
        right.push(right0);
        right.extend_from_slice(&self.pockets[split + 1..]);
        Ok((CatalanTable::from_raw(left), CatalanTable::from_raw(right)))
    }

    /// `⟨e^(0), e^(1) • f^(0), f^(1), ..., f^(l), e^(2), ..., e^(k)⟩`.
    pub fn compose_blacklozenge(&self, other: &CatalanTable) -> CatalanTable {
        let mut pockets = Vec::with_capacity(self.pockets.len() + other.pockets.len() - 1);
        pockets.push(self.pockets[0].clone());
        pockets.push(self.pockets[1].compose_bullet(&other.pockets[0]));
        pockets.extend_from_slice(&other.pockets[1..]);
        pockets.extend_from_slice(&self.pockets[2..]);
        CatalanTable::from_raw(pockets)
    }

    /// Inverse of [`compose_blacklozenge`](Self::compose_blacklozenge); needs `|e^(1)| >= 1`.
    ///
    /// With `e^(1) = c • f`, the length-tuple partial sums over the inserted
    /// pockets stay above `|e^(0)| + |c|` and first return to it at the last
    /// of them, which fixes the right factor's length.
    pub fn factor_blacklozenge(&self) -> Result<(CatalanTable, CatalanTable)> {
        let (kept, inserted0) = self.pockets[1]
            .factor_bullet()
            .map_err(|_| Error::NoBlackLozengeDecomposition)?;
        let target = self.pockets[0].length() + kept.length();
        let lengths = self.length_tuple();
        let mut partial = lengths.entries()[0];
        let mut end = None;
        for (j, &len) in lengths.entries().iter().enumerate().skip(1) {
            partial = partial + len - 1;
            if partial == target {
                end = Some(j);
                break;
            }
        }
        let end = end.expect("attained by construction");
        let mut right = Vec::with_capacity(end);
        right.push(inserted0);
        right.extend_from_slice(&self.pockets[2..=end]);
        let mut left = Vec::with_capacity(self.pockets.len() - end + 1);
        left.push(self.pockets[0].clone());
        left.push(kept);
        left.extend_from_slice(&self.pockets[end + 1..]);
        Ok((CatalanTable::from_raw(left), CatalanTable::from_raw(right)))
    }

    /// Entries of every pocket, for serialization.
    pub fn to_entries(&self) -> Vec<Vec<usize>> {
        self.pockets.iter().map(|p| p.entries().to_vec()).collect()
    }
}

fn raw_lengths(pockets: &[CatalanTuple]) -> Vec<usize> {
    pockets
        .iter()
        .enumerate()
        .map(|(j, p)| if j == 0 { p.length() + 1 } else { p.length() })
        .collect()
}

impl TryFrom<Vec<CatalanTuple>> for CatalanTable {
    type Error = Error;

    fn try_from(pockets: Vec<CatalanTuple>) -> Result<Self> {
        CatalanTable::new(pockets)
    }
}

impl From<CatalanTable> for Vec<CatalanTuple> {
    fn from(t: CatalanTable) -> Self {
        t.pockets
    }
}

impl fmt::Display for CatalanTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "⟨")?;
        for (i, p) in self.pockets.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, "⟩")
    }
}

/// All tables of length `k` in canonical order, guarded by [`DEFAULT_TABLE_LIMIT`].
pub fn enumerate_tables(k: usize) -> Result<Vec<CatalanTable>> {
    enumerate_tables_with_limit(k, Some(DEFAULT_TABLE_LIMIT))
}

/// Canonical order: length tuples in tuple order, then pockets as an
/// odometer over each pocket's tuples (pocket 0 slowest).
pub fn enumerate_tables_with_limit(k: usize, limit: Option<usize>) -> Result<Vec<CatalanTable>> {
    if k == 0 {
        return Err(Error::TooFewPockets {
            expected: 2,
            actual: 1,
        });
    }
    if let Some(limit) = limit {
        if k > limit {
            return Err(Error::LimitExceeded {
                what: "table length",
                k,
                limit,
            });
        }
    }
    let lists = tuple_lists(k);
    let mut out = Vec::new();
    for profile in &lists[k] {
        let choices: Vec<&[CatalanTuple]> = profile
            .entries()
            .iter()
            .enumerate()
            .map(|(j, &len)| lists[if j == 0 { len - 1 } else { len }].as_slice())
            .collect();
        let mut odometer = vec![0usize; choices.len()];
        loop {
            let pockets = odometer
                .iter()
                .zip(&choices)
                .map(|(&i, list)| list[i].clone())
                .collect();
            out.push(CatalanTable::from_raw(pockets));
            let mut pos = choices.len();
            loop {
                if pos == 0 {
                    break;
                }
                pos -= 1;
                odometer[pos] += 1;
                if odometer[pos] < choices[pos].len() {
                    break;
                }
                odometer[pos] = 0;
            }
            if odometer.iter().all(|&i| i == 0) {
                break;
            }
        }
    }
    Ok(out)
}

/// Tables of length `k` generated from `⟨(0),(0)⟩` by closing under `◊` and
/// `◆`, returned sorted. Cross-check for [`enumerate_tables`].
pub fn enumerate_tables_by_closure(k: usize) -> Result<Vec<CatalanTable>> {
    if k == 0 {
        return Err(Error::TooFewPockets {
            expected: 2,
            actual: 1,
        });
    }
    let base = CatalanTable::from_raw(vec![CatalanTuple::trivial(), CatalanTuple::trivial()]);
    let mut levels: Vec<Vec<CatalanTable>> = vec![Vec::new(), vec![base]];
    for n in 2..=k {
        let mut set = BTreeSet::new();
        for i in 1..n {
            for a in &levels[i] {
                for b in &levels[n - i] {
                    set.insert(a.compose_lozenge(b));
                    set.insert(a.compose_blacklozenge(b));
                }
            }
        }
        levels.push(set.into_iter().collect());
    }
    Ok(levels.swap_remove(k))
}
