//! Seeds, primitives, coadjoints, product cochains, the ⋆ group and functoriality.

use std::collections::BTreeMap;

use crate::linalg::{Matrix, Subspace};
use crate::word::{num_words, shuffle_perm};

use super::cosimplicial::leg_13;
use super::{Cochain, CochainError, SeedKind};

fn seed_dim(seed: &Matrix) -> Result<usize, CochainError> {
    let n = seed.rows();
    let d = (1..=n).find(|d| d * d >= n).unwrap_or(0);
    if !seed.is_square() || d == 0 || d * d != n {
        return Err(CochainError::Shape(format!("seed of size {}x{} is not dim²", seed.rows(), seed.cols())));
    }
    Ok(d)
}

/// Extends a `V⊗V` seed to the unique level-2 (anti)bicharacter with that `(1,1)` block.
pub fn extend_seed(seed: &Matrix, kind: SeedKind, cutoff: usize) -> Result<Cochain, CochainError> {
    let d = seed_dim(seed)?;
    if !seed.is_invertible() {
        return Err(CochainError::Singular(vec![1, 1]));
    }
    let mut blocks: BTreeMap<Vec<usize>, Matrix> = BTreeMap::new();
    for n in 0..=cutoff {
        blocks.insert(vec![n, 0], Matrix::identity(num_words(d, n)));
        blocks.insert(vec![0, n], Matrix::identity(num_words(d, n)));
    }
    let product = |x: &Matrix, y: &Matrix| match kind {
        SeedKind::Bicharacter => x * y,
        SeedKind::Antibicharacter => y * x,
    };
    if cutoff >= 2 {
        blocks.insert(vec![1, 1], seed.clone());
    }
    // row r = 1: ψ_{1,s+1} from ψ_{1,s} and ψ_{1,1}
    for s in 1..cutoff.saturating_sub(1) {
        let p13 = leg_13(&blocks[&vec![1, 1]], d, 1, s, 1);
        let p12 = blocks[&vec![1, s]].kron(&Matrix::identity(d));
        blocks.insert(vec![1, s + 1], product(&p12, &p13));
    }
    // ψ_{r+1,s} from ψ_{1,s} and ψ_{r,s}
    for r in 1..cutoff {
        for s in 1..=cutoff.saturating_sub(r + 1) {
            let p13 = leg_13(&blocks[&vec![r, s]], d, r, 1, s);
            let p23 = Matrix::identity(num_words(d, r)).kron(&blocks[&vec![1, s]]);
            blocks.insert(vec![r + 1, s], product(&p23, &p13));
        }
    }
    Ok(Cochain { level: 2, dim: d, cutoff, blocks })
}

/// The level-1 cochain `θ` with `θ₁ = ϖ` and `∂θ = ψ`, checked on every block.
pub fn primitive(psi: &Cochain, w: &Matrix) -> Result<Cochain, CochainError> {
    if psi.level() != 2 {
        return Err(CochainError::Shape("primitive needs a level-2 cochain".into()));
    }
    let d = psi.dim();
    if w.rows() != d || !w.is_square() {
        return Err(CochainError::Shape("ϖ must act on V".into()));
    }
    if !w.is_invertible() {
        return Err(CochainError::Singular(vec![1]));
    }
    let mut thetas = vec![Matrix::scalar(psi.scalar_00().recip())];
    if psi.cutoff() >= 1 {
        thetas.push(w.clone());
    }
    for n in 1..psi.cutoff() {
        let next = psi.block(&[n, 1]) * &thetas[n].kron(w);
        thetas.push(next);
    }
    let theta = Cochain::from_fn(1, d, psi.cutoff(), |r| thetas[r[0]].clone());
    if let Some(b) = theta.coboundary().full.first_difference(psi) {
        return Err(CochainError::PrimitiveMismatch(b));
    }
    Ok(theta)
}

/// Blockwise transpose-inverse `ψ^! = (ψᵀ)⁻¹`.
pub fn coadjoint(psi: &Cochain) -> Cochain {
    Cochain::from_fn(psi.level(), psi.dim(), psi.cutoff(), |r| {
        psi.block(r).transpose().inverse().expect("cochain blocks are invertible")
    })
}

/// `𝔧(ψ, φ)` over `V⊗W`: each block is `ψ_R ⊗ φ_R` read in the interleaved basis.
pub fn product_cochain(psi: &Cochain, phi: &Cochain) -> Result<Cochain, CochainError> {
    if psi.level() != phi.level() || psi.cutoff() != phi.cutoff() {
        return Err(CochainError::Shape("product cochain needs equal level and cutoff".into()));
    }
    let (da, db) = (psi.dim(), phi.dim());
    let perms: Vec<Vec<usize>> = (0..=psi.cutoff()).map(|k| shuffle_perm(k, da, db)).collect();
    Ok(Cochain::from_fn(psi.level(), da * db, psi.cutoff(), |r| {
        let k: usize = r.iter().sum();
        psi.block(r).kron(phi.block(r)).conjugate_by_permutation(&perms[k])
    }))
}

/// `𝔧(ψ₁, …, ψ_m)` by left-nested iteration.
pub fn product_cochain_all(parts: &[&Cochain]) -> Result<Cochain, CochainError> {
    let (first, rest) = parts.split_first().ok_or_else(|| CochainError::Shape("no factors".into()))?;
    rest.iter().try_fold((*first).clone(), |acc, c| product_cochain(&acc, c))
}

fn theta_pair(theta: &Cochain, r: usize, s: usize) -> Matrix {
    theta.block(&[r]).kron(theta.block(&[s]))
}

/// `ψ⋆φ = ψ(θ⊗θ)φ(θ⊗θ)⁻¹` with `θ` the primitive of `ψ`.
pub fn star(psi: &Cochain, phi: &Cochain) -> Result<Cochain, CochainError> {
    psi.check_same_shape(phi)?;
    psi.require_counital_cocycle()?;
    phi.require_counital_cocycle()?;
    let theta = primitive(psi, &Matrix::identity(psi.dim()))?;
    Ok(Cochain::from_fn(2, psi.dim(), psi.cutoff(), |r| {
        let tt = theta_pair(&theta, r[0], r[1]);
        let tt_inv = tt.inverse().expect("invertible");
        &(&(psi.block(r) * &tt) * phi.block(r)) * &tt_inv
    }))
}

/// `𝔦ψ = (θ⊗θ)⁻¹ψ⁻¹(θ⊗θ)`, the ⋆ inverse.
pub fn star_inverse(psi: &Cochain) -> Result<Cochain, CochainError> {
    psi.require_counital_cocycle()?;
    let theta = primitive(psi, &Matrix::identity(psi.dim()))?;
    Ok(Cochain::from_fn(2, psi.dim(), psi.cutoff(), |r| {
        let tt = theta_pair(&theta, r[0], r[1]);
        let tt_inv = tt.inverse().expect("invertible");
        &(&tt_inv * &psi.block(r).inverse().expect("invertible")) * &tt
    }))
}

/// `θ_k = λ_k ϖ^{⊗k} χ_k⁻¹` relating `ψ` and `φ` through `∂₋θ · φ · (∂₊θ)⁻¹ = ψ`.
pub fn cohomology_witness(psi: &Cochain, phi: &Cochain, w: &Matrix) -> Result<Cochain, CochainError> {
    psi.check_same_shape(phi)?;
    psi.require_counital_cocycle()?;
    phi.require_counital_cocycle()?;
    let id = Matrix::identity(psi.dim());
    let lambda = primitive(psi, &id)?;
    let chi = primitive(phi, &id)?;
    let theta = Cochain::from_fn(1, psi.dim(), psi.cutoff(), |r| {
        let k = r[0];
        &(lambda.block(r) * &w.kron_power(k)) * &chi.block(r).inverse().expect("invertible")
    });
    let cb = theta.coboundary();
    let lhs = cb.minus.compose(phi)?.compose(&cb.plus.inverse())?;
    if let Some(b) = lhs.first_difference(psi) {
        return Err(CochainError::WitnessMismatch(b));
    }
    Ok(theta)
}

/// `ψ^f = f^{⊗R} ψ (f^{⊗R})⁻¹`.
pub fn conjugate_by_iso(f: &Matrix, psi: &Cochain) -> Result<Cochain, CochainError> {
    if !f.is_square() || f.rows() != psi.dim() {
        return Err(CochainError::Shape("f must be an automorphism of dim V".into()));
    }
    let f_inv = f.inverse().map_err(|_| CochainError::Singular(vec![1]))?;
    let fp: Vec<Matrix> = (0..=psi.cutoff()).map(|k| f.kron_power(k)).collect();
    let fip: Vec<Matrix> = (0..=psi.cutoff()).map(|k| f_inv.kron_power(k)).collect();
    Ok(Cochain::from_fn(psi.level(), psi.dim(), psi.cutoff(), |r| {
        let k: usize = r.iter().sum();
        &(&fp[k] * psi.block(r)) * &fip[k]
    }))
}

/// Restriction to `V ⊂ W`, where the columns of `inclusion` are a basis of `V`.
pub fn restrict(psi: &Cochain, inclusion: &Matrix) -> Result<Cochain, CochainError> {
    if inclusion.rows() != psi.dim() || inclusion.rank() != inclusion.cols() || inclusion.cols() == 0 {
        return Err(CochainError::Shape("inclusion must have full column rank into W".into()));
    }
    let e_t = inclusion.transpose();
    let left_inv = &(&e_t * inclusion).inverse()? * &e_t;
    let dv = inclusion.cols();
    let ep: Vec<Matrix> = (0..=psi.cutoff()).map(|k| inclusion.kron_power(k)).collect();
    let lp: Vec<Matrix> = (0..=psi.cutoff()).map(|k| left_inv.kron_power(k)).collect();
    Cochain::try_from_fn(psi.level(), dv, psi.cutoff(), |r| {
        let k: usize = r.iter().sum();
        let sub = Subspace::from_rows(&ep[k].transpose());
        if !sub.contains(&sub.image(psi.block(r))?)? {
            return Err(CochainError::Unstable(r.to_vec()));
        }
        Ok(&(&lp[k] * psi.block(r)) * &ep[k])
    })
}
