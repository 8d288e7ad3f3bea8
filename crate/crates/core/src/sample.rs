//! Seeded random elements for randomized checks.

use rand::Rng;

use crate::error::Result;
use crate::exterior::{binomial, Graded, Variance};
use crate::scalar::{self, Scalar};

/// A rational with numerator in `-range..=range` and denominator in `1..=3`.
pub fn scalar<R: Rng>(rng: &mut R, range: i64) -> Scalar {
    scalar::ratio(rng.gen_range(-range..=range), rng.gen_range(1..=3))
}

pub fn vector<R: Rng>(rng: &mut R, n: usize) -> Vec<Scalar> {
    (0..n).map(|_| scalar(rng, 5)).collect()
}

/// A nonzero vector.
pub fn nonzero_vector<R: Rng>(rng: &mut R, n: usize) -> Vec<Scalar> {
    loop {
        let v = vector(rng, n);
        if crate::acs::is_nonzero(&v) {
            return v;
        }
    }
}

pub fn graded<V: Variance, R: Rng>(rng: &mut R, n: usize, k: usize) -> Result<Graded<V>> {
    let coords: Vec<Scalar> = (0..binomial(n, k)).map(|_| scalar(rng, 5)).collect();
    Graded::from_coords(n, k, &coords)
}
