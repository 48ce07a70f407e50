//! Admissibility of cochains with respect to a presentation.

use crate::cochain::Cochain;
use crate::linalg::Subspace;
use crate::word::num_words;
use crate::Verdict;

use super::{full, sandwich, QuantumSpace, SpaceError};

fn check_compatible(qs: &QuantumSpace, c: &Cochain) -> Result<(), SpaceError> {
    if c.dim() != qs.dim() {
        return Err(SpaceError::Shape(format!("cochain on dim {} vs space dim {}", c.dim(), qs.dim())));
    }
    if c.cutoff() != qs.cutoff() {
        return Err(SpaceError::CutoffMismatch(c.cutoff(), qs.cutoff()));
    }
    Ok(())
}

/// `K_R = Σ_i A₁^{⊗r₁}⊗…⊗I_{r_i}⊗…⊗A₁^{⊗rₙ}`, the kernel of `Π^{⊗n}` on `V^{⊗R}`.
pub fn kernel_subspace(qs: &QuantumSpace, r: &[usize]) -> Subspace {
    let d = qs.dim();
    let total: usize = r.iter().sum();
    let parts: Vec<Subspace> = (0..r.len())
        .map(|i| {
            let factors: Vec<Subspace> = r
                .iter()
                .enumerate()
                .map(|(j, &rj)| if i == j { qs.ideal().component(rj).clone() } else { full(d, rj) })
                .collect();
            Subspace::kron_all(&factors)
        })
        .collect();
    Subspace::sum_all(num_words(d, total), &parts).expect("same ambient")
}

/// `ψ_R(K_R) ⊆ K_R` on every stored block; for level 1 this is `θ_n(I_n) ⊆ I_n`.
pub fn is_admissible(qs: &QuantumSpace, c: &Cochain) -> Result<Verdict, SpaceError> {
    check_compatible(qs, c)?;
    for (r, block) in c.blocks() {
        let k = kernel_subspace(qs, r);
        if k.is_zero() {
            continue;
        }
        if !k.contains(&k.image(block)?)? {
            return Ok(Verdict::fail(r.clone()));
        }
    }
    Ok(Verdict::pass())
}

/// The finer one-sided condition on `A₁^{⊗p}·I_q·A₁^{⊗r}`.
///
/// Level 2 checks both placements `A₁^{⊗s} ⊗ X` and `X ⊗ A₁^{⊗s}`; the witness is
/// `[p, q, r, s, side]`. Level 1 checks `θ⁻¹(A^p I_q A^r) = A^p θ⁻¹(I_q) A^r`, witness `[p, q, r]`.
pub fn is_second_admissible(qs: &QuantumSpace, c: &Cochain) -> Result<Verdict, SpaceError> {
    check_compatible(qs, c)?;
    let d = qs.dim();
    let cutoff = qs.cutoff();
    match c.level() {
        2 => {
            for q in 2..=cutoff {
                let iq = qs.ideal().component(q);
                if iq.is_zero() {
                    continue;
                }
                for p in 0..=cutoff - q {
                    for r in 0..=cutoff - q - p {
                        let x = sandwich(d, p, iq, r);
                        let m = p + q + r;
                        for s in 0..=cutoff - m {
                            let left = full(d, s).kron(&x);
                            if !left.contains(&left.image(c.block(&[s, m]))?)? {
                                return Ok(Verdict::fail(vec![p, q, r, s, 0]));
                            }
                            let right = x.kron(&full(d, s));
                            if !right.contains(&right.image(c.block(&[m, s]))?)? {
                                return Ok(Verdict::fail(vec![p, q, r, s, 1]));
                            }
                        }
                    }
                }
            }
            Ok(Verdict::pass())
        }
        1 => {
            for q in 2..=cutoff {
                let pulled = qs.ideal().component(q).preimage(c.block(&[q]))?;
                for p in 0..=cutoff - q {
                    for r in 0..=cutoff - q - p {
                        let x = sandwich(d, p, qs.ideal().component(q), r);
                        let lhs = x.preimage(c.block(&[p + q + r]))?;
                        if lhs != sandwich(d, p, &pulled, r) {
                            return Ok(Verdict::fail(vec![p, q, r]));
                        }
                    }
                }
            }
            Ok(Verdict::pass())
        }
        n => Err(SpaceError::Shape(format!("second admissibility is defined for levels 1 and 2, got {n}"))),
    }
}

/// Whether `Π^{⊗n}(c₁ − c₂) = 0` on every block.
pub fn equal_mod_ideal(qs: &QuantumSpace, c1: &Cochain, c2: &Cochain) -> Result<bool, SpaceError> {
    c1.check_same_shape(c2)?;
    check_compatible(qs, c1)?;
    for (r, b1) in c1.blocks() {
        let diff = b1 - c2.block(r);
        if diff.is_zero() {
            continue;
        }
        let k = kernel_subspace(qs, r);
        if !(0..diff.cols()).all(|j| k.contains_vector(&diff.column(j))) {
            return Ok(false);
        }
    }
    Ok(true)
}
