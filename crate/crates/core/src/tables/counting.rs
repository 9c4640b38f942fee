//! Counting Catalan tables: closed forms, recursions, the pocket-tree sum and
//! the generating-function identities.

use num_bigint::{BigInt, BigUint};
use num_traits::One;

use super::enumerate_tables;
use crate::error::Result;
use crate::series::Series;
use crate::tuples::{binomial, catalan_number, enumerate_tuples};

/// `d_k = binom(3k + 1, k) / (k + 1)`, the number of tables of length `k + 1`.
pub fn count_tables(k: usize) -> BigUint {
    binomial(3 * k + 1, k) / BigUint::from(k + 1)
}

/// `f_k = binom(3k, k) / (2k + 1)`, the number of tables of length `k + 1`
/// whose first pocket is `(0)` (equally, whose zeroth pocket is `(0)`).
pub fn count_trivial_first_pocket(k: usize) -> BigUint {
    binomial(3 * k, k) / BigUint::from(2 * k + 1)
}

/// Enumerated count of length-`(k + 1)` tables with first pocket `(0)`.
pub fn count_trivial_first_pocket_enumerated(k: usize) -> Result<usize> {
    Ok(enumerate_tables(k + 1)?
        .iter()
        .filter(|t| t.pocket(1).is_trivial())
        .count())
}

/// Enumerated count of length-`(k + 1)` tables with zeroth pocket `(0)`.
pub fn count_trivial_zeroth_pocket_enumerated(k: usize) -> Result<usize> {
    Ok(enumerate_tables(k + 1)?
        .iter()
        .filter(|t| t.pocket(0).is_trivial())
        .count())
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PocketSumIdentity {
    pub k: usize,
    /// `Σ c_{e_0 - 1} c_{e_1} ... c_{e_{k+1}}` over `C_{k+1}`.
    pub sum: BigUint,
    pub closed_form: BigUint,
}

impl PocketSumIdentity {
    pub fn holds(&self) -> bool {
        self.sum == self.closed_form
    }
}

/// Counts tables one pocket tree at a time: each length tuple contributes the
/// product of the numbers of tuples that fit its pockets.
pub fn verify_pocket_sum_identity(k: usize) -> Result<PocketSumIdentity> {
    let catalan: Vec<BigUint> = (0..=k + 1).map(catalan_number).collect();
    let mut sum = BigUint::ZERO;
    for profile in enumerate_tuples(k + 1)? {
        let mut term = BigUint::one();
        for (j, &e) in profile.entries().iter().enumerate() {
            term *= &catalan[if j == 0 { e - 1 } else { e }];
        }
        sum += term;
    }
    Ok(PocketSumIdentity {
        k,
        sum,
        closed_form: count_tables(k),
    })
}

/// `(f_0..f_{n-1}, d_0..d_{n-1})` from the closed forms.
pub fn generating_functions_by_closed_form(n: usize) -> (Vec<BigUint>, Vec<BigUint>) {
    (
        (0..n).map(count_trivial_first_pocket).collect(),
        (0..n).map(count_tables).collect(),
    )
}

/// `(f_0..f_{n-1}, d_0..d_{n-1})` from `f_k = Σ f_{l-1} d_{k-l}` and
/// `d_k = f_k + Σ d_{l-1} d_{k-l}` with `f_0 = d_0 = 1`.
pub fn generating_functions_by_recursion(n: usize) -> (Vec<BigUint>, Vec<BigUint>) {
    let mut f: Vec<BigUint> = Vec::with_capacity(n);
    let mut d: Vec<BigUint> = Vec::with_capacity(n);
    for k in 0..n {
        if k == 0 {
            f.push(BigUint::one());
            d.push(BigUint::one());
            continue;
        }
        let fk: BigUint = (1..=k).map(|l| &f[l - 1] * &d[k - l]).sum();
        let dd: BigUint = (1..=k).map(|l| &d[l - 1] * &d[k - l]).sum();
        d.push(&fk + dd);
        f.push(fk);
    }
    (f, d)
}

#[derive(Debug, Clone)]
pub struct GeneratingFunctionReport {
    pub order: usize,
    pub f_closed: Vec<BigUint>,
    pub f_recursion: Vec<BigUint>,
    pub d_closed: Vec<BigUint>,
    pub d_recursion: Vec<BigUint>,
    /// `H^3 / x - H + x = 0` through `x^order`, for both coefficient sources.
    pub h_cubic: bool,
    /// `G (1 - G)^2 = x` through `x^order`, for both coefficient sources.
    pub g_cubic: bool,
    /// `x G = H^2` through `x^order`, for both coefficient sources.
    pub product: bool,
}

impl GeneratingFunctionReport {
    pub fn sequences_agree(&self) -> bool {
        self.f_closed == self.f_recursion && self.d_closed == self.d_recursion
    }

    pub fn all_hold(&self) -> bool {
        self.sequences_agree() && self.h_cubic && self.g_cubic && self.product
    }
}

/// Builds `H = Σ f_n x^(n+1)` and `G = Σ d_n x^(n+1)` from both the closed
/// forms and the recursions and checks the three identities coefficient-wise.
pub fn verify_generating_functions(order: usize) -> GeneratingFunctionReport {
    let order = order.max(1);
    // One extra coefficient so that H^3 / x is exact through x^order.
    let (f_closed, d_closed) = generating_functions_by_closed_form(order + 1);
    let (f_recursion, d_recursion) = generating_functions_by_recursion(order + 1);

    let mut h_cubic = true;
    let mut g_cubic = true;
    let mut product = true;
    for (f, d) in [(&f_closed, &d_closed), (&f_recursion, &d_recursion)] {
        let h = integer_series(order + 1, f);
        let g = integer_series(order + 1, d);
        let x = Series::x(order + 1);
        let one = Series::from_integers(order + 1, 0, [1]);

        let h3 = &(&h * &h) * &h;
        let h3_over_x = h3.div_x().expect("H has no constant term");
        let cubic = &(&h3_over_x - &h.truncate(order)) + &x.truncate(order);
        h_cubic &= cubic.is_zero();

        let one_minus_g = &one - &g;
        let lhs = &g * &(&one_minus_g * &one_minus_g);
        g_cubic &= (&lhs - &x).truncate(order).is_zero();

        product &= (&(&x * &g) - &(&h * &h)).truncate(order).is_zero();
    }

    let visible = |mut v: Vec<BigUint>| {
        v.truncate(order);
        v
    };
    GeneratingFunctionReport {
        order,
        f_closed: visible(f_closed),
        f_recursion: visible(f_recursion),
        d_closed: visible(d_closed),
        d_recursion: visible(d_recursion),
        h_cubic,
        g_cubic,
        product,
    }
}

fn integer_series(order: usize, values: &[BigUint]) -> Series {
    Series::from_integers(order, 1, values.iter().map(|v| BigInt::from(v.clone())))
}
