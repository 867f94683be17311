//! Seeded random elements for property checks.

use num_bigint::BigInt;
use rand::seq::SliceRandom;
use rand::Rng;

use crate::derivation::Derivation;
use crate::lie::{witt_dimension, LieElement};
use crate::permutation::Permutation;
use crate::schur::SchurElement;
use crate::transfer::{coset_transversal, Composition};
use crate::word::{orbit_keys, sorted_words};

fn small<R: Rng>(rng: &mut R) -> BigInt {
    let mut c = 0;
    while c == 0 {
        c = rng.gen_range(-3i64..=3);
    }
    BigInt::from(c)
}

/// A Schur element with each orbit coefficient nonzero with probability `density`.
pub fn random_schur<R: Rng>(rng: &mut R, n: usize, q: usize, density: f64) -> SchurElement {
    let mut data = Vec::new();
    for u in sorted_words(n, q) {
        for key in orbit_keys(&u, n) {
            if rng.gen_bool(density) {
                data.push((u.clone(), key, small(rng)));
            }
        }
    }
    SchurElement::from_orbit_data(n, q, data).expect("keys are canonical")
}

pub fn random_lie<R: Rng>(rng: &mut R, n: usize, p: usize) -> LieElement {
    let coords: Vec<BigInt> = (0..witt_dimension(n, p))
        .map(|_| if rng.gen_bool(0.6) { small(rng) } else { BigInt::from(0) })
        .collect();
    LieElement::from_coordinates(n, p, &coords).expect("coordinate count matches")
}

pub fn random_derivation<R: Rng>(rng: &mut R, n: usize, p: usize) -> Derivation {
    let images = (0..n).map(|_| random_lie(rng, n, p)).collect();
    Derivation::new(n, p, images).expect("degrees match")
}

/// A random permutation of size `q`.
pub fn random_permutation<R: Rng>(rng: &mut R, q: usize) -> Permutation {
    let mut images: Vec<usize> = (0..q).collect();
    images.shuffle(rng);
    Permutation::from_zero_based(images)
}

/// Coset representatives `σh` with `σ` canonical and `h` a random element of
/// the Young subgroup, listed in random order.
pub fn random_transversal<R: Rng>(rng: &mut R, lambda: &Composition) -> Vec<Permutation> {
    let mut out: Vec<Permutation> = coset_transversal(lambda)
        .into_iter()
        .map(|sigma| {
            let h = lambda
                .parts()
                .iter()
                .map(|&a| random_permutation(rng, a))
                .reduce(|x, y| x.direct_sum(&y))
                .expect("at least one part");
            sigma.compose(&h)
        })
        .collect();
    out.shuffle(rng);
    out
}
