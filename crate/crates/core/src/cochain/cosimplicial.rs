//! Cofaces, codegeneracies, the coboundary and cochain classification.

use crate::linalg::{Matrix, Q};
use crate::word::{flip_perm, num_words};

use super::{multi_indices, Cochain, CochainError, MultiIndex};

/// Which factorization a level-2 cochain is extended or tested against.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SeedKind {
    Bicharacter,
    Antibicharacter,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CochainClass {
    pub is_counital: bool,
    pub is_cocycle: bool,
    pub is_bicharacter: bool,
    pub is_antibicharacter: bool,
    pub scalar_00: Q,
}

/// `∂ψ` together with the two alternating products it is built from.
#[derive(Debug, Clone)]
pub struct Coboundary {
    pub full: Cochain,
    pub minus: Cochain,
    pub plus: Cochain,
}

/// Permutation of `X ⊗ Y` acting as the identity on `X` (size `left`) and `inner` on `Y`.
pub(crate) fn lift_perm(left: usize, inner: &[usize]) -> Vec<usize> {
    let n = inner.len();
    (0..left * n).map(|i| (i / n) * n + inner[i % n]).collect()
}

/// `ψ₁₃` at `(r,s,t)`: `(𝕀_r⊗f_{s,t}⁻¹)(ψ_{r,t}⊗𝕀_s)(𝕀_r⊗f_{s,t})`, with `f_{s,t}` the flip `V^s⊗V^t → V^t⊗V^s`.
pub fn psi_13(psi: &Cochain, r: usize, s: usize, t: usize) -> Matrix {
    leg_13(psi.block(&[r, t]), psi.dim(), r, s, t)
}

/// `ψ₁₃` built from the single block `ψ_{r,t}`.
pub(crate) fn leg_13(block_rt: &Matrix, d: usize, r: usize, s: usize, t: usize) -> Matrix {
    let m = block_rt.kron(&Matrix::identity(num_words(d, s)));
    let perm = lift_perm(num_words(d, r), &flip_perm(s, t, d, d));
    m.conjugate_by_permutation(&perm)
}

impl Cochain {
    /// `δ_i : Cⁿ → Cⁿ⁺¹` for `0 ≤ i ≤ n+1`.
    pub fn coface(&self, i: usize) -> Result<Cochain, CochainError> {
        let n = self.level;
        if i > n + 1 {
            return Err(CochainError::IndexOutOfRange { op: "coface", index: i, level: n });
        }
        let d = self.dim;
        Ok(Cochain::from_fn(n + 1, d, self.cutoff, |r| {
            if i == 0 {
                Matrix::identity(num_words(d, r[0])).kron(self.block(&r[1..]))
            } else if i == n + 1 {
                self.block(&r[..n]).kron(&Matrix::identity(num_words(d, r[n])))
            } else {
                // merge entries i and i+1 (1-indexed)
                let mut merged: MultiIndex = r[..i - 1].to_vec();
                merged.push(r[i - 1] + r[i]);
                merged.extend_from_slice(&r[i + 1..]);
                self.block(&merged).clone()
            }
        }))
    }

    /// `σ_i : Cⁿ → Cⁿ⁻¹` for `0 ≤ i ≤ n−1`; the block at `R` is `ψ` at `R` with a zero inserted at position `i`.
    pub fn codegeneracy(&self, i: usize) -> Result<Cochain, CochainError> {
        let n = self.level;
        if n == 0 || i >= n {
            return Err(CochainError::IndexOutOfRange { op: "codegeneracy", index: i, level: n });
        }
        Ok(Cochain::from_fn(n - 1, self.dim, self.cutoff, |r| {
            let mut s = r.to_vec();
            s.insert(i, 0);
            self.block(&s).clone()
        }))
    }

    /// `∂ψ = ∂₋ψ · (∂₊ψ)⁻¹` with `∂₋ = δ₁δ₃⋯` and `∂₊ = ⋯δ₂δ₀`.
    ///
    /// Cofaces are multiplicative, so `(∂₊ψ)⁻¹ = δ₀(ψ⁻¹)δ₂(ψ⁻¹)⋯` and only the blocks of `ψ` are inverted.
    pub fn coboundary(&self) -> Coboundary {
        let n = self.level;
        let inv = self.inverse();
        let faces: Vec<Cochain> = (0..=n + 1).map(|i| self.coface(i).expect("index in range")).collect();
        let id = Cochain::identity(n + 1, self.dim, self.cutoff);
        let minus = (1..=n + 1)
            .step_by(2)
            .fold(id.clone(), |acc, i| acc.compose(&faces[i]).expect("same shape"));
        let evens: Vec<usize> = (0..=n + 1).step_by(2).collect();
        let plus = evens.iter().rev().fold(id.clone(), |acc, &i| acc.compose(&faces[i]).expect("same shape"));
        let plus_inv = evens
            .iter()
            .fold(id, |acc, &i| acc.compose(&inv.coface(i).expect("index in range")).expect("same shape"));
        let full = minus.compose(&plus_inv).expect("same shape");
        Coboundary { full, minus, plus }
    }

    pub fn cocycle_failure(&self) -> Option<MultiIndex> {
        self.coboundary().full.first_non_identity()
    }

    /// First block whose multi-index contains a zero and is not the identity.
    pub fn counital_failure(&self) -> Option<MultiIndex> {
        self.blocks()
            .iter()
            .find(|(r, b)| r.contains(&0) && !b.is_identity())
            .map(|(r, _)| r.clone())
    }

    /// First level-3 block where the (anti)bicharacter factorization fails.
    pub fn factorization_failure(&self, kind: SeedKind) -> Option<MultiIndex> {
        if self.level != 2 {
            return Some(Vec::new());
        }
        let d1 = self.coface(1).expect("in range");
        let d2 = self.coface(2).expect("in range");
        let d = self.dim;
        for r in multi_indices(3, self.cutoff) {
            let (a, b, c) = (r[0], r[1], r[2]);
            let p12 = self.block(&[a, b]).kron(&Matrix::identity(num_words(d, c)));
            let p23 = Matrix::identity(num_words(d, a)).kron(self.block(&[b, c]));
            let p13 = psi_13(self, a, b, c);
            let (lhs1, lhs2) = match kind {
                SeedKind::Bicharacter => (&p23 * &p13, &p12 * &p13),
                SeedKind::Antibicharacter => (&p13 * &p23, &p13 * &p12),
            };
            if d1.block(&r) != &lhs1 || d2.block(&r) != &lhs2 {
                return Some(r);
            }
        }
        None
    }

    pub fn classify(&self) -> CochainClass {
        CochainClass {
            is_counital: self.counital_failure().is_none(),
            is_cocycle: self.cocycle_failure().is_none(),
            is_bicharacter: self.factorization_failure(SeedKind::Bicharacter).is_none(),
            is_antibicharacter: self.factorization_failure(SeedKind::Antibicharacter).is_none(),
            scalar_00: self.scalar_00(),
        }
    }

    /// Errors unless the cochain is a counital cocycle.
    pub fn require_counital_cocycle(&self) -> Result<(), CochainError> {
        if let Some(b) = self.cocycle_failure() {
            return Err(CochainError::NotCocycle(b));
        }
        if let Some(b) = self.counital_failure() {
            return Err(CochainError::NotCounital(b));
        }
        Ok(())
    }
}
