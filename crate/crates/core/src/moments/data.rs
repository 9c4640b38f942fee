use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};

pub type Rational = BigRational;

/// Bound on numerators and denominators of sampled values.
pub const SAMPLE_BOUND: i64 = 1000;

/// Eigenvalues `E_0..E_{n-1}` and symmetric two-point values `G_{lm}`.
///
/// The eigenvalues are pairwise distinct, so no resolvent factor has a zero
/// denominator.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ModelData {
    eigenvalues: Vec<Rational>,
    two_point: BTreeMap<(usize, usize), Rational>,
}

impl ModelData {
    /// `two_point` may list a pair in either or both orders; both orders
    /// must then agree.
    pub fn new<I>(eigenvalues: Vec<Rational>, two_point: I) -> Result<Self>
    where
        I: IntoIterator<Item = ((usize, usize), Rational)>,
    {
        for i in 0..eigenvalues.len() {
            for j in i + 1..eigenvalues.len() {
                if eigenvalues[i] == eigenvalues[j] {
                    return Err(Error::CoincidentEigenvalues(i, j));
                }
            }
        }
        let mut map = BTreeMap::new();
        for ((l, m), value) in two_point {
            let key = (l.min(m), l.max(m));
            if let Some(previous) = map.get(&key) {
                if *previous != value {
                    return Err(Error::AsymmetricTwoPoint(key.0, key.1));
                }
            }
            map.insert(key, value);
        }
        Ok(ModelData {
            eigenvalues,
            two_point: map,
        })
    }

    /// One draw from `seed`; may fail if two eigenvalues coincide.
    pub fn sample(n: usize, seed: u64) -> Result<Self> {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let eigenvalues = (0..n).map(|_| random_rational(&mut rng, true)).collect();
        let mut two_point = Vec::with_capacity(n * n.saturating_sub(1) / 2);
        for l in 0..n {
            for m in l + 1..n {
                two_point.push(((l, m), random_rational(&mut rng, false)));
            }
        }
        ModelData::new(eigenvalues, two_point)
    }

    /// Draws with `seed`, `seed + 1`, ... until the eigenvalues are distinct.
    /// Returns the data and the number of rejected draws.
    pub fn random(n: usize, seed: u64) -> (Self, u64) {
        let mut rejected = 0;
        loop {
            match ModelData::sample(n, seed.wrapping_add(rejected)) {
                Ok(data) => return (data, rejected),
                Err(_) => rejected += 1,
            }
        }
    }

    pub fn len(&self) -> usize {
        self.eigenvalues.len()
    }

    pub fn is_empty(&self) -> bool {
        self.eigenvalues.is_empty()
    }

    pub fn eigenvalues(&self) -> &[Rational] {
        &self.eigenvalues
    }

    pub fn two_point_values(&self) -> impl Iterator<Item = ((usize, usize), &Rational)> {
        self.two_point.iter().map(|(&k, v)| (k, v))
    }

    pub fn eigenvalue(&self, index: usize) -> Result<&Rational> {
        self.eigenvalues
            .get(index)
            .ok_or(Error::MissingEigenvalue(index))
    }

    pub fn two_point(&self, l: usize, m: usize) -> Result<&Rational> {
        self.two_point
            .get(&(l.min(m), l.max(m)))
            .ok_or(Error::MissingTwoPoint(l, m))
    }

    /// `1 / (E_from - E_to)`.
    pub fn resolvent(&self, from: usize, to: usize) -> Result<Rational> {
        let diff = self.eigenvalue(from)? - self.eigenvalue(to)?;
        if diff.is_zero() {
            return Err(Error::ZeroDenominator(from, to));
        }
        Ok(diff.recip())
    }

    /// Relabels `b_j -> b_{j + shift mod n}`.
    pub fn rotated(&self, shift: usize) -> ModelData {
        let n = self.len();
        self.relabeled(|j| (j + shift) % n)
    }

    /// Relabels `b_j -> b_{n - 1 - j}`.
    pub fn reversed(&self) -> ModelData {
        let n = self.len();
        self.relabeled(|j| n - 1 - j)
    }

    // New index j reads old index source(j).
    fn relabeled(&self, source: impl Fn(usize) -> usize) -> ModelData {
        let n = self.len();
        let eigenvalues = (0..n)
            .map(|j| self.eigenvalues[source(j)].clone())
            .collect();
        let mut two_point = BTreeMap::new();
        for l in 0..n {
            for m in l + 1..n {
                let (sl, sm) = (source(l), source(m));
                if let Some(v) = self.two_point.get(&(sl.min(sm), sl.max(sm))) {
                    two_point.insert((l, m), v.clone());
                }
            }
        }
        ModelData {
            eigenvalues,
            two_point,
        }
    }
}

fn random_rational(rng: &mut ChaCha8Rng, allow_zero: bool) -> Rational {
    loop {
        let num = rng.random_range(-SAMPLE_BOUND..=SAMPLE_BOUND);
        let den = rng.random_range(1..=SAMPLE_BOUND);
        if num != 0 || allow_zero {
            return Rational::new(BigInt::from(num), BigInt::from(den));
        }
    }
}
