//! Truncated cosimplicial quasicomplex of homogeneous automorphisms over `V`.
//!
//! A level-`n` cochain stores one invertible matrix per multi-index
//! `R = (r₁,…,rₙ)` with `|R| ≤ cutoff`, acting on the flat word basis of
//! `V^{⊗|R|}`.

mod cosimplicial;
mod ops;

use std::collections::BTreeMap;

pub use cosimplicial::{psi_13, Coboundary, CochainClass, SeedKind};
pub use ops::{
    coadjoint, cohomology_witness, conjugate_by_iso, extend_seed, primitive, product_cochain,
    product_cochain_all, restrict, star, star_inverse,
};

use crate::linalg::{LinalgError, Matrix, Q};
use crate::word::num_words;

pub type MultiIndex = Vec<usize>;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CochainError {
    #[error("shape mismatch: {0}")]
    Shape(String),
    #[error("{op} index {index} out of range at level {level}")]
    IndexOutOfRange { op: &'static str, index: usize, level: usize },
    #[error("missing block {0:?}")]
    MissingBlock(MultiIndex),
    #[error("block {index:?}: {reason}")]
    BadBlock { index: MultiIndex, reason: String },
    #[error("block {0:?} is singular")]
    Singular(MultiIndex),
    #[error("not a cocycle: failing block {0:?}")]
    NotCocycle(MultiIndex),
    #[error("not counital: failing block {0:?}")]
    NotCounital(MultiIndex),
    #[error("primitive check failed: ∂θ differs from ψ at block {0:?}")]
    PrimitiveMismatch(MultiIndex),
    #[error("cohomology relation fails at block {0:?}")]
    WitnessMismatch(MultiIndex),
    #[error("cochain does not stabilise the subspace at block {0:?}")]
    Unstable(MultiIndex),
    #[error(transparent)]
    Linalg(#[from] LinalgError),
}

/// All multi-indices of length `n` with total at most `cutoff`, in lexicographic order.
pub fn multi_indices(n: usize, cutoff: usize) -> Vec<MultiIndex> {
    fn go(n: usize, budget: usize, prefix: &mut Vec<usize>, out: &mut Vec<MultiIndex>) {
        if prefix.len() == n {
            out.push(prefix.clone());
            return;
        }
        for r in 0..=budget {
            prefix.push(r);
            go(n, budget - r, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(n, cutoff, &mut Vec::new(), &mut out);
    out
}

#[derive(Clone, PartialEq, Eq)]
pub struct Cochain {
    level: usize,
    dim: usize,
    cutoff: usize,
    blocks: BTreeMap<MultiIndex, Matrix>,
}

impl Cochain {
    /// Validating constructor: every block present, square of side `dim^|R|`, invertible.
    pub fn new(
        level: usize,
        dim: usize,
        cutoff: usize,
        blocks: BTreeMap<MultiIndex, Matrix>,
    ) -> Result<Self, CochainError> {
        if dim == 0 {
            return Err(CochainError::Shape("dim must be positive".into()));
        }
        for r in multi_indices(level, cutoff) {
            let b = blocks.get(&r).ok_or_else(|| CochainError::MissingBlock(r.clone()))?;
            let side = num_words(dim, r.iter().sum());
            if b.rows() != side || b.cols() != side {
                return Err(CochainError::BadBlock {
                    index: r,
                    reason: format!("expected {side}x{side}, got {}x{}", b.rows(), b.cols()),
                });
            }
            if !b.is_invertible() {
                return Err(CochainError::Singular(r));
            }
        }
        if let Some(extra) = blocks.keys().find(|k| k.len() != level || k.iter().sum::<usize>() > cutoff) {
            return Err(CochainError::BadBlock { index: extra.clone(), reason: "outside the truncation".into() });
        }
        Ok(Cochain { level, dim, cutoff, blocks })
    }

    /// Builds blocks from a closure whose outputs are known to be invertible.
    pub(crate) fn from_fn(level: usize, dim: usize, cutoff: usize, f: impl Fn(&[usize]) -> Matrix) -> Self {
        let blocks = multi_indices(level, cutoff).into_iter().map(|r| {
            let b = f(&r);
            (r, b)
        });
        Cochain { level, dim, cutoff, blocks: blocks.collect() }
    }

    pub(crate) fn try_from_fn<E>(
        level: usize,
        dim: usize,
        cutoff: usize,
        f: impl Fn(&[usize]) -> Result<Matrix, E>,
    ) -> Result<Self, E> {
        let mut blocks = BTreeMap::new();
        for r in multi_indices(level, cutoff) {
            let b = f(&r)?;
            blocks.insert(r, b);
        }
        Ok(Cochain { level, dim, cutoff, blocks })
    }

    pub fn identity(level: usize, dim: usize, cutoff: usize) -> Self {
        Cochain::from_fn(level, dim, cutoff, |r| Matrix::identity(num_words(dim, r.iter().sum())))
    }

    /// The level-0 cochain with scalar `x`.
    pub fn scalar(x: Q, dim: usize, cutoff: usize) -> Result<Self, CochainError> {
        let mut blocks = BTreeMap::new();
        blocks.insert(Vec::new(), Matrix::scalar(x));
        Cochain::new(0, dim, cutoff, blocks)
    }

    /// The level-1 cochain `ϖ^{⊗r}` (a 1-cocycle).
    pub fn tensor_powers(w: &Matrix, cutoff: usize) -> Result<Self, CochainError> {
        let dim = w.rows();
        if !w.is_square() || dim == 0 {
            return Err(CochainError::Shape("ϖ must be square".into()));
        }
        if !w.is_invertible() {
            return Err(CochainError::Singular(vec![1]));
        }
        Ok(Cochain::from_fn(1, dim, cutoff, |r| w.kron_power(r[0])))
    }

    pub fn level(&self) -> usize {
        self.level
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn cutoff(&self) -> usize {
        self.cutoff
    }

    pub fn block(&self, r: &[usize]) -> &Matrix {
        self.blocks.get(r).unwrap_or_else(|| panic!("no block {r:?} at level {} cutoff {}", self.level, self.cutoff))
    }

    pub fn blocks(&self) -> &BTreeMap<MultiIndex, Matrix> {
        &self.blocks
    }

    pub fn indices(&self) -> impl Iterator<Item = &MultiIndex> {
        self.blocks.keys()
    }

    pub(crate) fn check_same_shape(&self, other: &Cochain) -> Result<(), CochainError> {
        if self.level != other.level || self.dim != other.dim || self.cutoff != other.cutoff {
            return Err(CochainError::Shape(format!(
                "(level {}, dim {}, cutoff {}) vs (level {}, dim {}, cutoff {})",
                self.level, self.dim, self.cutoff, other.level, other.dim, other.cutoff
            )));
        }
        Ok(())
    }

    /// Blockwise product `self · other`.
    pub fn compose(&self, other: &Cochain) -> Result<Cochain, CochainError> {
        self.check_same_shape(other)?;
        Ok(Cochain::from_fn(self.level, self.dim, self.cutoff, |r| self.block(r) * other.block(r)))
    }

    /// Blockwise inverse.
    pub fn inverse(&self) -> Cochain {
        Cochain::from_fn(self.level, self.dim, self.cutoff, |r| {
            self.block(r).inverse().expect("cochain blocks are invertible")
        })
    }

    pub fn is_identity(&self) -> bool {
        self.blocks.values().all(Matrix::is_identity)
    }

    /// First block where the two cochains differ.
    pub fn first_difference(&self, other: &Cochain) -> Option<MultiIndex> {
        if self.check_same_shape(other).is_err() {
            return Some(Vec::new());
        }
        self.blocks.iter().find(|(r, b)| other.block(r) != *b).map(|(r, _)| r.clone())
    }

    /// First block that is not an identity matrix.
    pub fn first_non_identity(&self) -> Option<MultiIndex> {
        self.blocks.iter().find(|(_, b)| !b.is_identity()).map(|(r, _)| r.clone())
    }

    /// The same blocks at a lower cutoff.
    pub fn truncate(&self, cutoff: usize) -> Result<Cochain, CochainError> {
        if cutoff > self.cutoff {
            return Err(CochainError::Shape(format!("cannot raise cutoff {} to {cutoff}", self.cutoff)));
        }
        Ok(Cochain::from_fn(self.level, self.dim, cutoff, |r| self.block(r).clone()))
    }

    /// Scalar of the all-zero block.
    pub fn scalar_00(&self) -> Q {
        self.block(&vec![0; self.level]).get(0, 0).clone()
    }
}

impl std::fmt::Debug for Cochain {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Cochain")
            .field("level", &self.level)
            .field("dim", &self.dim)
            .field("cutoff", &self.cutoff)
            .field("blocks", &self.blocks)
            .finish()
    }
}
