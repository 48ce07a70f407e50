//! Seeded generation of random exact objects.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::cochain::{multi_indices, Cochain, MultiIndex};
use crate::linalg::{q, Matrix};
use crate::word::num_words;

pub type SeededRng = ChaCha8Rng;

pub fn rng(seed: u64) -> SeededRng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Integer entries drawn uniformly from `-bound..=bound`.
pub fn integer_matrix(rng: &mut impl Rng, rows: usize, cols: usize, bound: i64) -> Matrix {
    let data = (0..rows * cols).map(|_| q(rng.gen_range(-bound..=bound))).collect();
    Matrix::from_vec(rows, cols, data).expect("sized")
}

/// An invertible integer matrix, found by retrying.
pub fn invertible_matrix(rng: &mut impl Rng, n: usize, bound: i64) -> Matrix {
    loop {
        let m = integer_matrix(rng, n, n, bound);
        if m.is_invertible() {
            return m;
        }
    }
}

/// A nonzero integer in `-bound..=bound`.
pub fn nonzero_integer(rng: &mut impl Rng, bound: i64) -> i64 {
    loop {
        let x = rng.gen_range(-bound..=bound);
        if x != 0 {
            return x;
        }
    }
}

/// Random invertible blocks; counital variants put identities on zero-containing indices.
pub fn cochain(rng: &mut impl Rng, level: usize, dim: usize, cutoff: usize, counital: bool) -> Cochain {
    let mut blocks = std::collections::BTreeMap::new();
    for r in multi_indices(level, cutoff) {
        let side = num_words(dim, r.iter().sum());
        let b = if counital && (r.contains(&0) || level == 0) {
            Matrix::identity(side)
        } else if side == 1 {
            Matrix::scalar(q(nonzero_integer(rng, 3)))
        } else {
            invertible_matrix(rng, side, 2)
        };
        blocks.insert(r, b);
    }
    Cochain::new(level, dim, cutoff, blocks).expect("random blocks are invertible")
}

/// A random invertible element of the stored block at one index, leaving the rest as given.
pub fn perturb_block(rng: &mut impl Rng, c: &Cochain, index: &MultiIndex) -> Cochain {
    let mut blocks = c.blocks().clone();
    let side = num_words(c.dim(), index.iter().sum());
    loop {
        let m = invertible_matrix(rng, side, 2);
        if &m != c.block(index) {
            blocks.insert(index.clone(), m);
            break;
        }
    }
    Cochain::new(c.level(), c.dim(), c.cutoff(), blocks).expect("invertible")
}

/// A random convolution-invertible form on the free matrix bialgebra.
pub fn form(rng: &mut impl Rng, level: usize, dim: usize, cutoff: usize, counital: bool) -> crate::bridge::BiForm {
    crate::bridge::cochain_to_form(&cochain(rng, level, dim, cutoff, counital))
}

/// A random invertible form on the free bialgebra over a group-like coalgebra.
pub fn group_like_form(rng: &mut impl Rng, level: usize, dim: usize, cutoff: usize) -> crate::bridge::GroupLikeForm {
    let values = multi_indices(level, cutoff)
        .into_iter()
        .map(|r| {
            let v = (0..num_words(dim, r.iter().sum())).map(|_| q(nonzero_integer(rng, 3))).collect();
            (r, v)
        })
        .collect();
    crate::bridge::GroupLikeForm::new(level, dim, cutoff, values).expect("nonzero values")
}
