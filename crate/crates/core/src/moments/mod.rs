//! The `N`-point functions of the quartic matrix model at coupling `λ = -1`:
//! the Catalan-table expansion, the defining recursion it solves, and the
//! symmetry checks between them.

mod data;
mod monomial;

pub use data::{ModelData, Rational, SAMPLE_BOUND};
pub use monomial::{monomial_from_table, sign_tau, tau_exponent, Monomial, Parity, Thread};

use std::collections::HashMap;

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::tables::{enumerate_tables_with_limit, DEFAULT_TABLE_LIMIT};
use crate::tuples::catalan_number;

/// The quartic coupling. Every term of the recursion carries `-λ = 1`, so
/// each monomial enters with weight `(-λ)^k = 1`.
pub const COUPLING: i64 = -1;

/// How a monomial's overall sign is produced.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum SignConvention {
    /// Threads keep their tree orientation; no extra sign.
    #[default]
    Oriented,
    /// Every thread is written as `1 / (E_low - E_high)` and the product is
    /// multiplied by `τ`.
    SortedWithTau,
}

pub fn evaluate_monomial(monomial: &Monomial, data: &ModelData) -> Result<Rational> {
    evaluate_monomial_with(monomial, data, SignConvention::Oriented)
}

pub fn evaluate_monomial_with(
    monomial: &Monomial,
    data: &ModelData,
    convention: SignConvention,
) -> Result<Rational> {
    let mut value = Rational::one();
    for &(l, m) in monomial.chords() {
        value *= data.two_point(l, m)?;
    }
    for thread in monomial.threads() {
        let (from, to) = match convention {
            SignConvention::Oriented => (thread.from, thread.to),
            SignConvention::SortedWithTau => thread.sorted(),
        };
        value *= data.resolvent(from, to)?;
    }
    if convention == SignConvention::SortedWithTau && sign_tau(monomial.table()) < 0 {
        value = -value;
    }
    Ok(value)
}

#[derive(Debug, Clone)]
pub struct Term {
    pub monomial: Monomial,
    pub value: Rational,
}

#[derive(Debug, Clone)]
pub struct Expansion {
    pub terms: Vec<Term>,
    pub total: Rational,
}

pub fn check_point_count(n: usize) -> Result<usize> {
    if n < 2 || !n.is_multiple_of(2) {
        return Err(Error::BadPointCount(n));
    }
    Ok(n / 2)
}

/// All monomials of `G^(n)`, one per Catalan table of length `n / 2`.
pub fn monomials(n: usize) -> Result<Vec<Monomial>> {
    monomials_with_limit(n, Some(DEFAULT_TABLE_LIMIT))
}

pub fn monomials_with_limit(n: usize, limit: Option<usize>) -> Result<Vec<Monomial>> {
    let k = check_point_count(n)?;
    Ok(enumerate_tables_with_limit(k, limit)?
        .iter()
        .map(monomial_from_table)
        .collect())
}

/// `G^(n)` as the sum over Catalan tables, with every term kept.
pub fn expand_moment(n: usize, data: &ModelData) -> Result<Expansion> {
    expand_moment_with(n, data, SignConvention::Oriented, Some(DEFAULT_TABLE_LIMIT))
}

pub fn expand_moment_with(
    n: usize,
    data: &ModelData,
    convention: SignConvention,
    limit: Option<usize>,
) -> Result<Expansion> {
    let mut terms = Vec::new();
    let mut total = Rational::zero();
    for monomial in monomials_with_limit(n, limit)? {
        let value = evaluate_monomial_with(&monomial, data, convention)?;
        total += &value;
        terms.push(Term { monomial, value });
    }
    Ok(Expansion { terms, total })
}

/// `G^(n)_{b_0 ... b_{n-1}}` straight from the recursion
///
/// ```text
/// G(b_0..b_{N-1}) = Σ_{l=1}^{(N-2)/2} [ G(b_0..b_{2l-1}) G(b_{2l}..b_{N-1})
///                                     - G(b_1..b_{2l}) G(b_0 b_{2l+1}..b_{N-1}) ]
///                                   / ((E_{b_0} - E_{b_{2l}}) (E_{b_1} - E_{b_{N-1}}))
/// ```
///
/// with `G(b_p b_q)` the two-point value. Memoized on index sequences.
pub fn recursion_oracle(n: usize, data: &ModelData) -> Result<Rational> {
    check_point_count(n)?;
    let indices: Vec<usize> = (0..n).collect();
    let mut memo = HashMap::new();
    recurse(&indices, data, &mut memo)
}

fn recurse(
    b: &[usize],
    data: &ModelData,
    memo: &mut HashMap<Vec<usize>, Rational>,
) -> Result<Rational> {
    let n = b.len();
    if n == 2 {
        return data.two_point(b[0], b[1]).cloned();
    }
    if let Some(v) = memo.get(b) {
        return Ok(v.clone());
    }
    let mut sum = Rational::zero();
    for l in 1..=(n - 2) / 2 {
        let first = recurse(&b[..2 * l], data, memo)? * recurse(&b[2 * l..], data, memo)?;
        let rest: Vec<usize> = std::iter::once(b[0])
            .chain(b[2 * l + 1..].iter().copied())
            .collect();
        let second = recurse(&b[1..=2 * l], data, memo)? * recurse(&rest, data, memo)?;
        sum +=
            (first - second) * data.resolvent(b[0], b[2 * l])? * data.resolvent(b[1], b[n - 1])?;
    }
    memo.insert(b.to_vec(), sum.clone());
    Ok(sum)
}

/// `2^k c_k` for `n = 2k + 2`: terms produced by fully unfolding the
/// recursion before any cancellation.
pub fn raw_term_count(n: usize) -> Result<BigUint> {
    let k = check_point_count(n)? - 1;
    Ok(BigUint::from(2u32).pow(k as u32) * catalan_number(k))
}

/// Leaves of the fully unfolded recursion tree, counted by recursing on the
/// recursion itself.
pub fn unfolded_leaf_count(n: usize) -> Result<BigUint> {
    let half = check_point_count(n)?;
    // counts[h] for 2h points
    let mut counts: Vec<BigUint> = vec![BigUint::zero(), BigUint::one()];
    for h in 2..=half {
        let c = (1..h)
            .map(|l| BigUint::from(2u32) * &counts[l] * &counts[h - l])
            .sum();
        counts.push(c);
    }
    Ok(counts.swap_remove(half))
}

#[derive(Debug, Clone)]
pub struct SymmetryReport {
    pub value: Rational,
    pub rotations_checked: Vec<usize>,
    pub first_failing_rotation: Option<usize>,
    pub reversal_invariant: bool,
}

impl SymmetryReport {
    pub fn holds(&self) -> bool {
        self.first_failing_rotation.is_none() && self.reversal_invariant
    }
}

/// Compares the table expansion on `data` against the same expansion on
/// cyclically shifted and on reversed data.
pub fn check_cyclic_invariance<I>(
    n: usize,
    data: &ModelData,
    rotations: I,
) -> Result<SymmetryReport>
where
    I: IntoIterator<Item = usize>,
{
    check_cyclic_invariance_with_limit(n, data, rotations, Some(DEFAULT_TABLE_LIMIT))
}

pub fn check_cyclic_invariance_with_limit<I>(
    n: usize,
    data: &ModelData,
    rotations: I,
    limit: Option<usize>,
) -> Result<SymmetryReport>
where
    I: IntoIterator<Item = usize>,
{
    let expand = |d: &ModelData| expand_moment_with(n, d, SignConvention::Oriented, limit);
    let value = expand(data)?.total;
    let mut rotations_checked = Vec::new();
    let mut first_failing_rotation = None;
    for shift in rotations {
        rotations_checked.push(shift);
        if expand(&data.rotated(shift))?.total != value {
            first_failing_rotation = Some(shift);
            break;
        }
    }
    let reversal_invariant = expand(&data.reversed())?.total == value;
    Ok(SymmetryReport {
        value,
        rotations_checked,
        first_failing_rotation,
        reversal_invariant,
    })
}

/// The three-term resolvent identity, which is identically zero:
/// `1/((p-q)(q-r)) + 1/((r-p)(p-q)) + 1/((q-r)(r-p))`.
pub fn partial_fraction_identity(p: &Rational, q: &Rational, r: &Rational) -> Result<Rational> {
    let inv = |a: &Rational, b: &Rational, ia: usize, ib: usize| -> Result<Rational> {
        let d = a - b;
        if d.is_zero() {
            return Err(Error::ZeroDenominator(ia, ib));
        }
        Ok(d.recip())
    };
    let pq = inv(p, q, 0, 1)?;
    let qr = inv(q, r, 1, 2)?;
    let rp = inv(r, p, 2, 0)?;
    Ok(&pq * &qr + &rp * &pq + &qr * &rp)
}
