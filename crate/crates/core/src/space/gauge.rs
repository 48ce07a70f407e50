//! The gauge groupoid of pairs `(α₁, ψ)` and witness verification.

use crate::cochain::{conjugate_by_iso, star, star_inverse, Cochain};
use crate::linalg::{Matrix, Subspace};
use crate::word::num_words;
use crate::Verdict;

use super::{full, sandwich, twist, GradedIdeal, QuantumSpace, SpaceError};

/// A generator isomorphism paired with a counital 2-cocycle.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GaugeTransformation {
    alpha1: Matrix,
    psi: Cochain,
}

impl GaugeTransformation {
    pub fn new(alpha1: Matrix, psi: Cochain) -> Result<Self, SpaceError> {
        if !alpha1.is_square() || alpha1.rows() != psi.dim() || psi.level() != 2 {
            return Err(SpaceError::Shape("α₁ must be an automorphism of the cochain's generator space".into()));
        }
        if !alpha1.is_invertible() {
            return Err(SpaceError::Linalg(crate::linalg::LinalgError::Singular));
        }
        psi.require_counital_cocycle()?;
        Ok(GaugeTransformation { alpha1, psi })
    }

    pub fn identity(dim: usize, cutoff: usize) -> Self {
        GaugeTransformation { alpha1: Matrix::identity(dim), psi: Cochain::identity(2, dim, cutoff) }
    }

    pub fn alpha1(&self) -> &Matrix {
        &self.alpha1
    }

    pub fn psi(&self) -> &Cochain {
        &self.psi
    }

    /// `α₁^{⊗n}` applied to the components of `A_ψ`.
    pub fn apply(&self, a: &QuantumSpace) -> Result<QuantumSpace, SpaceError> {
        let t = twist(a, &self.psi)?;
        let comps = (0..=a.cutoff())
            .map(|n| t.ideal().component(n).image(&self.alpha1.kron_power(n)))
            .collect::<Result<Vec<_>, _>>()?;
        let ideal = GradedIdeal::direct(a.dim(), a.cutoff(), comps)?;
        QuantumSpace::new(format!("{}_gauged", a.name()), a.generators().to_vec(), ideal)
    }

    /// `(β, φ) ∘ (α, ψ) = (βα, ψ ⋆ φ^{α₁⁻¹})`, i.e. `self` after `first`.
    pub fn compose(&self, first: &GaugeTransformation) -> Result<GaugeTransformation, SpaceError> {
        let alpha_inv = first.alpha1.inverse()?;
        let pulled = conjugate_by_iso(&alpha_inv, &self.psi)?;
        let psi = star(&first.psi, &pulled)?;
        GaugeTransformation::new(&self.alpha1 * &first.alpha1, psi)
    }

    /// `𝔦(α, ψ) = (α⁻¹, (𝔦ψ)^{α₁})`.
    pub fn invert(&self) -> Result<GaugeTransformation, SpaceError> {
        let psi = conjugate_by_iso(&self.alpha1, &star_inverse(&self.psi)?)?;
        GaugeTransformation::new(self.alpha1.inverse()?, psi)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize, serde::Deserialize, clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum WitnessVariant {
    /// `ϑ(A₁^{⊗r}·I_s + I_r·A₁^{⊗s}) = B₁^{⊗r}·J_s + J_r·B₁^{⊗s}`.
    Pairwise,
    /// `ϑ(A₁^{⊗r}·I_s·A₁^{⊗t}) = B₁^{⊗r}·J_s·B₁^{⊗t}`.
    Triple,
}

fn pair_part(qs: &QuantumSpace, r: usize, s: usize) -> Subspace {
    let d = qs.dim();
    let left = full(d, r).kron(qs.ideal().component(s));
    let right = qs.ideal().component(r).kron(&full(d, s));
    left.sum(&right).expect("same ambient")
}

/// Checks that the degree-wise maps `ϑ_n` carry the ideal structure of `A` onto that of `B`.
pub fn verify_gauge_witness(
    a: &QuantumSpace,
    b: &QuantumSpace,
    theta: &[Matrix],
    variant: WitnessVariant,
) -> Result<Verdict, SpaceError> {
    if a.cutoff() != b.cutoff() {
        return Err(SpaceError::CutoffMismatch(a.cutoff(), b.cutoff()));
    }
    if a.dim() != b.dim() {
        return Err(SpaceError::Shape(format!("generator dims {} and {} admit no isomorphism", a.dim(), b.dim())));
    }
    let cutoff = a.cutoff();
    if theta.len() != cutoff + 1 {
        return Err(SpaceError::Shape(format!("{} witness blocks for cutoff {cutoff}", theta.len())));
    }
    for (n, t) in theta.iter().enumerate() {
        let side = num_words(a.dim(), n);
        if t.rows() != side || t.cols() != side {
            return Err(SpaceError::Shape(format!("witness block {n} is {}x{}", t.rows(), t.cols())));
        }
        if !t.is_invertible() {
            return Err(SpaceError::Linalg(crate::linalg::LinalgError::Singular));
        }
    }
    let d = a.dim();
    match variant {
        WitnessVariant::Pairwise => {
            for r in 0..=cutoff {
                for s in 0..=cutoff - r {
                    if pair_part(a, r, s).image(&theta[r + s])? != pair_part(b, r, s) {
                        return Ok(Verdict::fail(vec![r, s]));
                    }
                }
            }
        }
        WitnessVariant::Triple => {
            for r in 0..=cutoff {
                for s in 0..=cutoff - r {
                    for t in 0..=cutoff - r - s {
                        let lhs = sandwich(d, r, a.ideal().component(s), t).image(&theta[r + s + t])?;
                        if lhs != sandwich(d, r, b.ideal().component(s), t) {
                            return Ok(Verdict::fail(vec![r, s, t]));
                        }
                    }
                }
            }
        }
    }
    Ok(Verdict::pass())
}
