//! Twisting, duals, products and internal coHom objects.

use crate::cochain::{primitive, Cochain};
use crate::linalg::{Matrix, Subspace};
use crate::word::{num_words, shuffle_perm};

use super::{full, is_admissible, GradedIdeal, QuantumSpace, SpaceError};

/// `A_ψ`: components `θ_n⁻¹(I_n)` with `θ` the primitive of `ψ` normalised by `θ₁ = 𝕀`.
pub fn twist(qs: &QuantumSpace, psi: &Cochain) -> Result<QuantumSpace, SpaceError> {
    if psi.level() != 2 {
        return Err(SpaceError::Shape(format!("twisting needs a level-2 cochain, got level {}", psi.level())));
    }
    if psi.dim() != qs.dim() {
        return Err(SpaceError::Shape(format!("cochain on dim {} vs space dim {}", psi.dim(), qs.dim())));
    }
    if psi.cutoff() != qs.cutoff() {
        return Err(SpaceError::CutoffMismatch(psi.cutoff(), qs.cutoff()));
    }
    if let Some(b) = psi.cocycle_failure() {
        return Err(SpaceError::NotCocycle(b));
    }
    if let Some(b) = psi.counital_failure() {
        return Err(SpaceError::NotCounital(b));
    }
    if let Some(b) = is_admissible(qs, psi)?.witness {
        return Err(SpaceError::NotAdmissible(b));
    }
    let theta = primitive(psi, &Matrix::identity(qs.dim()))?;
    let comps = (0..=qs.cutoff())
        .map(|n| qs.ideal().component(n).preimage(theta.block(&[n])))
        .collect::<Result<Vec<_>, _>>()?;
    let ideal = GradedIdeal::direct(qs.dim(), qs.cutoff(), comps)?;
    QuantumSpace::new(format!("{}_twisted", qs.name()), qs.generators().to_vec(), ideal)
}

/// `A^!`: starred generators, ideal generated by `⊕_{n≥2} I_n^⊥`.
pub fn dual(qs: &QuantumSpace) -> QuantumSpace {
    let generating: Vec<Subspace> = (0..=qs.cutoff())
        .map(|n| if n < 2 { Subspace::zero(num_words(qs.dim(), n)) } else { qs.ideal().component(n).perp() })
        .collect();
    let ideal = GradedIdeal::generated(qs.dim(), qs.cutoff(), &generating).expect("perp components are sized");
    let names = qs.generators().iter().map(|g| star_name(g)).collect();
    QuantumSpace::new(format!("{}!", qs.name()), names, ideal).expect("dual of a conic space")
}

fn star_name(g: &str) -> String {
    match g.strip_suffix('*') {
        Some(base) => base.to_string(),
        None => format!("{g}*"),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize, serde::Deserialize, clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum ProductKind {
    Circ,
    Bullet,
    Odot,
    Ltri,
    Rtri,
    Diamond,
}

impl ProductKind {
    /// Whether the left, resp. right, generator space enters dualised.
    fn dualises(self) -> (bool, bool) {
        match self {
            ProductKind::Rtri => (true, false),
            ProductKind::Ltri => (false, true),
            ProductKind::Diamond => (true, true),
            _ => (false, false),
        }
    }
}

/// Moves a subspace of `A₁^{⊗n} ⊗ B₁^{⊗n}` to the interleaved basis of `(A₁⊗B₁)^{⊗n}`.
pub fn interleave(s: &Subspace, n: usize, da: usize, db: usize) -> Subspace {
    let perm = shuffle_perm(n, da, db);
    let mut inv = vec![0; perm.len()];
    for (i, &p) in perm.iter().enumerate() {
        inv[p] = i;
    }
    s.image(&Matrix::permutation(&inv)).expect("sized")
}

pub fn product(kind: ProductKind, a: &QuantumSpace, b: &QuantumSpace) -> Result<QuantumSpace, SpaceError> {
    if a.cutoff() != b.cutoff() {
        return Err(SpaceError::CutoffMismatch(a.cutoff(), b.cutoff()));
    }
    if kind == ProductKind::Bullet {
        for s in [a, b] {
            if !s.ideal().is_quadratic() {
                return Err(SpaceError::NotQuadratic(s.name().to_string()));
            }
        }
    }
    let (da, db, cutoff) = (a.dim(), b.dim(), a.cutoff());
    let (dual_a, dual_b) = kind.dualises();
    let side = |s: &QuantumSpace, dualise: bool, n: usize| {
        let c = s.ideal().component(n);
        if dualise { if n < 2 { Subspace::zero(c.ambient()) } else { c.perp() } } else { c.clone() }
    };
    let per_degree = |n: usize| -> Subspace {
        let (i, j) = (side(a, dual_a, n), side(b, dual_b, n));
        let deinterleaved = match kind {
            ProductKind::Circ => i.kron(&full(db, n)).sum(&full(da, n).kron(&j)).expect("same ambient"),
            ProductKind::Bullet if n != 2 => Subspace::zero(num_words(da * db, n)),
            _ => i.kron(&j),
        };
        interleave(&deinterleaved, n, da, db)
    };
    let comps: Vec<Subspace> = (0..=cutoff).map(per_degree).collect();
    let ideal = match kind {
        ProductKind::Circ | ProductKind::Odot => GradedIdeal::direct(da * db, cutoff, comps)?,
        _ => GradedIdeal::generated(da * db, cutoff, &comps)?,
    };
    let name_of = |s: &QuantumSpace, dualise: bool, k: usize| {
        let g = &s.generators()[k];
        if dualise { star_name(g) } else { g.clone() }
    };
    let names = (0..da * db)
        .map(|p| format!("{}{}", name_of(a, dual_a, p / db), name_of(b, dual_b, p % db)))
        .collect();
    let symbol = match kind {
        ProductKind::Circ => "∘",
        ProductKind::Bullet => "•",
        ProductKind::Odot => "⊙",
        ProductKind::Ltri => "◁",
        ProductKind::Rtri => "▷",
        ProductKind::Diamond => "◇",
    };
    QuantumSpace::new(format!("{}{symbol}{}", a.name(), b.name()), names, ideal)
}

/// `hom[B, A] = B ▷ A` on generators `z_i^j = b^j ⊗ a_i` (pair index `j·dim A + i`).
pub fn cohom(b: &QuantumSpace, a: &QuantumSpace) -> Result<QuantumSpace, SpaceError> {
    let p = product(ProductKind::Rtri, b, a)?;
    let da = a.dim();
    let names = (0..b.dim() * da).map(|k| format!("z_{}^{}", a.generators()[k % da], b.generators()[k / da])).collect();
    QuantumSpace::new(format!("hom[{},{}]", b.name(), a.name()), names, p.ideal().clone())
}
