//! Named spaces and cochains: planes, superplanes, `ψ_q`, `ς` and the twisted coHom.

use crate::cochain::{extend_seed, Cochain, SeedKind};
use crate::linalg::{q, qpow, Matrix, Subspace, Q};
use crate::space::{interleave, is_admissible, GradedIdeal, QuantumSpace, Relation};
use crate::word::num_words;

use super::ScenarioError;

fn rel(degree: usize, terms: &[(&[usize], i64)]) -> Relation {
    Relation::new(degree, terms.iter().map(|(w, c)| (w.to_vec(), q(*c))))
}

/// The commutative plane `k[a,b]`.
pub fn plane(cutoff: usize) -> QuantumSpace {
    QuantumSpace::from_relations("k[a,b]", &["a", "b"], &[rel(2, &[(&[0, 1], 1), (&[1, 0], -1)])], cutoff)
        .expect("plane")
}

/// The commutative plane on other generator names.
pub fn plane_named(name: &str, x: &str, y: &str, cutoff: usize) -> QuantumSpace {
    QuantumSpace::from_relations(name, &[x, y], &[rel(2, &[(&[0, 1], 1), (&[1, 0], -1)])], cutoff).expect("plane")
}

/// The Grassmann plane: `a² = b² = ab + ba = 0`.
pub fn grassmann(cutoff: usize) -> QuantumSpace {
    let rels = [rel(2, &[(&[0, 0], 1)]), rel(2, &[(&[1, 1], 1)]), rel(2, &[(&[0, 1], 1), (&[1, 0], 1)])];
    QuantumSpace::from_relations("Λ[a,b]", &["a", "b"], &rels, cutoff).expect("grassmann")
}

/// `𝒦`: the free algebra on one generator.
pub fn k_line(cutoff: usize) -> QuantumSpace {
    QuantumSpace::free("K", &["x"], cutoff)
}

/// `𝒰 = k[e]/(e²)`.
pub fn u_point(cutoff: usize) -> QuantumSpace {
    QuantumSpace::from_relations("U", &["e"], &[rel(2, &[(&[0, 0], 1)])], cutoff).expect("U")
}

/// Weight matrix with `w(a,b) = 1` and all other weights zero.
pub fn plane_weights() -> Vec<Vec<i64>> {
    vec![vec![0, 1], vec![0, 0]]
}

/// The diagonal bicharacter extending `ψ₁₁(a_i⊗a_j) = q^{w_ij} a_i⊗a_j`.
pub fn build_psi_q(weights: &[Vec<i64>], qv: &Q, cutoff: usize) -> Result<Cochain, ScenarioError> {
    if qv == &q(0) {
        return Err(ScenarioError::BadParameter("q must be nonzero".into()));
    }
    let d = weights.len();
    if d == 0 || weights.iter().any(|row| row.len() != d) {
        return Err(ScenarioError::BadParameter("weights must be a square matrix".into()));
    }
    let diag: Vec<Q> = (0..d * d).map(|k| qpow(qv, weights[k / d][k % d])).collect();
    Ok(extend_seed(&Matrix::diagonal(&diag), SeedKind::Bicharacter, cutoff)?)
}

/// Sign with `sg(0) = 1`.
fn sg(x: i64) -> i64 {
    if x < 0 { -1 } else { 1 }
}

/// The seed `M_{ij}^{kl} = q^{[1 − sg(i−j)]/2} δ_i^k δ_j^l`, extended as a bicharacter.
pub fn build_psi_q_sg(qv: &Q, dim: usize, cutoff: usize) -> Result<Cochain, ScenarioError> {
    let mut diag = Vec::with_capacity(dim * dim);
    for i in 0..dim as i64 {
        for j in 0..dim as i64 {
            let twice = 1 - sg(i - j);
            if twice % 2 != 0 {
                return Err(ScenarioError::BadParameter("odd exponent would need a square root of q".into()));
            }
            diag.push(qpow(qv, twice / 2));
        }
    }
    Ok(extend_seed(&Matrix::diagonal(&diag), SeedKind::Bicharacter, cutoff)?)
}

fn require_automorphism(space: &QuantumSpace, sigma: &Matrix) -> Result<(), ScenarioError> {
    if !sigma.is_square() || sigma.rows() != space.dim() || !sigma.is_invertible() {
        return Err(ScenarioError::NotAutomorphism(space.name().to_string()));
    }
    let powers = Cochain::tensor_powers(sigma, space.cutoff())?;
    if !is_admissible(space, &powers)?.holds {
        return Err(ScenarioError::NotAutomorphism(space.name().to_string()));
    }
    Ok(())
}

/// `ς_{r,s} = 𝕀_r ⊗ (σ^{-r})^{⊗s}` for an automorphism `σ` of `A`.
pub fn build_varsigma_on_a(space: &QuantumSpace, sigma: &Matrix) -> Result<Cochain, ScenarioError> {
    require_automorphism(space, sigma)?;
    let (d, cutoff) = (space.dim(), space.cutoff());
    let inv_powers: Vec<Matrix> = (0..=cutoff as i64).map(|r| sigma.pow(-r)).collect::<Result<_, _>>()?;
    Ok(Cochain::new(
        2,
        d,
        cutoff,
        crate::cochain::multi_indices(2, cutoff)
            .into_iter()
            .map(|r| {
                let b = Matrix::identity(num_words(d, r[0])).kron(&inv_powers[r[0]].kron_power(r[1]));
                (r, b)
            })
            .collect(),
    )?)
}

/// `ξ^{[r]}` on one letter `z_i^j = b^j ⊗ a_i`: `ρ^{-r}` on the `B*` index and `φ^{-r}` on the `A` index.
fn xi_letter(sigma_a: &Matrix, sigma_b: &Matrix, r: i64) -> Result<Matrix, ScenarioError> {
    // ρ = σ_B^{*−1} has matrix (σ_Bᵀ)⁻¹ on dual coordinates, so ρ^{-r} = (σ_Bᵀ)^r.
    Ok(sigma_b.transpose().pow(r)?.kron(&sigma_a.pow(-r)?))
}

/// `ς_{r,s} = 𝕀_r ⊗ (ξ^{[r]})^{⊗s}` on `hom[B, A]`.
pub fn build_varsigma_on_hom(
    a: &QuantumSpace,
    b: &QuantumSpace,
    sigma_a: &Matrix,
    sigma_b: &Matrix,
) -> Result<Cochain, ScenarioError> {
    require_automorphism(a, sigma_a)?;
    require_automorphism(b, sigma_b)?;
    if a.cutoff() != b.cutoff() {
        return Err(ScenarioError::BadParameter("cutoffs differ".into()));
    }
    let cutoff = a.cutoff();
    let d = a.dim() * b.dim();
    let xis: Vec<Matrix> = (0..=cutoff as i64).map(|r| xi_letter(sigma_a, sigma_b, r)).collect::<Result<_, _>>()?;
    let blocks = crate::cochain::multi_indices(2, cutoff)
        .into_iter()
        .map(|r| {
            let b = Matrix::identity(num_words(d, r[0])).kron(&xis[r[0]].kron_power(r[1]));
            (r, b)
        })
        .collect();
    Ok(Cochain::new(2, d, cutoff, blocks)?)
}

/// `𝕀 ⊗ m ⊗ m² ⊗ ⋯ ⊗ m^{n−1}` on `V^{⊗n}`.
fn graded_powers(m: &Matrix, n: usize) -> Result<Matrix, ScenarioError> {
    let mut out = Matrix::identity(1);
    let mut p = Matrix::identity(m.rows());
    for _ in 0..n {
        out = out.kron(&p);
        p = &p * m;
    }
    Ok(out)
}

/// Coordinate form of the twisted coHom: `A^Υ`, `B^Υ` and `(J_σ)^⊥` by explicit index transforms.
#[derive(Debug, Clone)]
pub struct HomUpsilon {
    pub a_upsilon: QuantumSpace,
    pub b_upsilon: QuantumSpace,
    /// `(J_σ)_n^⊥` computed by transforming `J_n^⊥` with `ρ`.
    pub j_sigma_perp: Vec<Subspace>,
    pub space: QuantumSpace,
}

pub fn build_hom_upsilon(
    a: &QuantumSpace,
    b: &QuantumSpace,
    sigma_a: &Matrix,
    sigma_b: &Matrix,
) -> Result<HomUpsilon, ScenarioError> {
    require_automorphism(a, sigma_a)?;
    require_automorphism(b, sigma_b)?;
    if a.cutoff() != b.cutoff() {
        return Err(ScenarioError::BadParameter("cutoffs differ".into()));
    }
    let cutoff = a.cutoff();
    let (da, db) = (a.dim(), b.dim());
    let rho = sigma_b.transpose().inverse()?;
    let mut i_sigma = Vec::new();
    let mut j_sigma = Vec::new();
    let mut j_perp = Vec::new();
    for n in 0..=cutoff {
        i_sigma.push(a.ideal().component(n).image(&graded_powers(sigma_a, n)?)?);
        j_sigma.push(b.ideal().component(n).image(&graded_powers(sigma_b, n)?)?);
        let perp = if n < 2 {
            Subspace::zero(num_words(db, n))
        } else {
            b.ideal().component(n).perp().image(&graded_powers(&rho, n)?)?
        };
        j_perp.push(perp);
    }
    let a_up = QuantumSpace::new(
        format!("{}^Υ", a.name()),
        a.generators().to_vec(),
        GradedIdeal::direct(da, cutoff, i_sigma.clone())?,
    )?;
    let b_up = QuantumSpace::new(
        format!("{}^Υ", b.name()),
        b.generators().to_vec(),
        GradedIdeal::direct(db, cutoff, j_sigma)?,
    )?;
    let generating = (0..=cutoff)
        .map(|n| {
            interleave(&j_perp[n].kron(&i_sigma[n]), n, db, da)
        })
        .collect::<Vec<_>>();
    let names = (0..db * da).map(|k| format!("z_{}^{}", a.generators()[k % da], b.generators()[k / da])).collect();
    let space = QuantumSpace::new(
        format!("hom^Υ[{},{}]", b.name(), a.name()),
        names,
        GradedIdeal::generated(db * da, cutoff, &generating)?,
    )?;
    Ok(HomUpsilon { a_upsilon: a_up, b_upsilon: b_up, j_sigma_perp: j_perp, space })
}

/// `τ = c·flip` on `B₁⊗A₁ → A₁⊗B₁`.
pub fn scaled_flip(c: &Q, da: usize, db: usize) -> Matrix {
    let perm = crate::word::flip_perm(1, 1, db, da);
    Matrix::permutation(&perm).scale(c)
}

/// `R₁₂R₁₃R₂₃ = R₂₃R₁₃R₁₂` checked directly on `V^{⊗3}`.
pub fn satisfies_ybe(seed: &Matrix) -> bool {
    let d = (1..=seed.rows()).find(|d| d * d >= seed.rows()).unwrap_or(0);
    if d * d != seed.rows() || !seed.is_square() {
        return false;
    }
    let id = Matrix::identity(d);
    let r12 = seed.kron(&id);
    let r23 = id.kron(seed);
    let swap23 = id.kron(&Matrix::permutation(&crate::word::flip_perm(1, 1, d, d)));
    let r13 = &(&swap23 * &r12) * &swap23;
    &(&r12 * &r13) * &r23 == &(&r23 * &r13) * &r12
}

/// The standard `U_q(sl₂)` R-matrix on `k²⊗k²`.
pub fn r_matrix(qv: &Q) -> Matrix {
    let mut m = Matrix::identity(4);
    m.set(0, 0, qv.clone());
    m.set(3, 3, qv.clone());
    m.set(1, 2, qv - qv.recip());
    m
}

/// A Yang-Baxter seed on `k²⊗k²`: a conjugate `(g⊗g)R(g⊗g)⁻¹` of a diagonal seed (even
/// `index`) or of an R-matrix (odd `index`), with random integer data.
pub fn random_ybe_seed(rng: &mut crate::random::SeededRng, index: usize) -> Matrix {
    use crate::random::{invertible_matrix, nonzero_integer};
    let core = if index.is_multiple_of(2) {
        Matrix::diagonal(&(0..4).map(|_| q(nonzero_integer(rng, 3))).collect::<Vec<_>>())
    } else {
        let mut qv = q(nonzero_integer(rng, 3));
        if qv == q(1) || qv == q(-1) {
            qv = q(2);
        }
        r_matrix(&qv)
    };
    let g = invertible_matrix(rng, 2, 2).kron_power(2);
    &(&g * &core) * &g.inverse().expect("invertible")
}
