//! Conic quantum spaces `A = A₁^⊗ / I`, truncated at a degree cutoff.

mod admissible;
mod construct;
mod gauge;
mod ideal;

pub use admissible::{equal_mod_ideal, is_admissible, is_second_admissible, kernel_subspace};
pub use construct::{cohom, dual, interleave, product, twist, ProductKind};
pub use gauge::{verify_gauge_witness, GaugeTransformation, WitnessVariant};
pub use ideal::{GradedIdeal, Provenance, Relation};
pub(crate) use ideal::{full, sandwich};

use crate::cochain::{CochainError, MultiIndex};
use crate::linalg::{LinalgError, Q};
use crate::word::num_words;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SpaceError {
    #[error("shape mismatch: {0}")]
    Shape(String),
    #[error("relations of degree {0} are not allowed in a conic space")]
    LowDegreeRelation(usize),
    #[error("degree {degree} exceeds cutoff {cutoff}")]
    DegreeExceedsCutoff { degree: usize, cutoff: usize },
    #[error("invalid relation: {0}")]
    BadRelation(String),
    #[error("degenerate space: I₀ is nonzero")]
    Degenerate,
    #[error("components are not an ideal: closure fails from degree {0}")]
    NotClosed(usize),
    #[error("cutoff mismatch: {0} vs {1}")]
    CutoffMismatch(usize, usize),
    #[error("{0} is not quadratic")]
    NotQuadratic(String),
    #[error("twist refused: not a cocycle, failing block {0:?}")]
    NotCocycle(MultiIndex),
    #[error("twist refused: not counital, failing block {0:?}")]
    NotCounital(MultiIndex),
    #[error("twist refused: not admissible, failing block {0:?}")]
    NotAdmissible(MultiIndex),
    #[error(transparent)]
    Cochain(#[from] CochainError),
    #[error(transparent)]
    Linalg(#[from] LinalgError),
}

/// Named generators plus a graded ideal.
#[derive(Debug, Clone)]
pub struct QuantumSpace {
    name: String,
    generators: Vec<String>,
    ideal: GradedIdeal,
}

/// Equality is ideal-componentwise; names and provenance are ignored.
impl PartialEq for QuantumSpace {
    fn eq(&self, other: &Self) -> bool {
        self.ideal == other.ideal
    }
}

impl Eq for QuantumSpace {}

impl QuantumSpace {
    pub fn new(name: impl Into<String>, generators: Vec<String>, ideal: GradedIdeal) -> Result<Self, SpaceError> {
        if generators.is_empty() {
            return Err(SpaceError::Shape("at least one generator is required".into()));
        }
        if generators.len() != ideal.dim() {
            return Err(SpaceError::Shape(format!("{} names for a {}-dimensional generator space", generators.len(), ideal.dim())));
        }
        if !ideal.component(0).is_zero() {
            return Err(SpaceError::Degenerate);
        }
        Ok(QuantumSpace { name: name.into(), generators, ideal })
    }

    pub fn from_relations(
        name: impl Into<String>,
        generators: &[&str],
        relations: &[Relation],
        cutoff: usize,
    ) -> Result<Self, SpaceError> {
        let ideal = GradedIdeal::from_relations(relations, generators.len(), cutoff)?;
        QuantumSpace::new(name, generators.iter().map(|s| s.to_string()).collect(), ideal)
    }

    /// The free algebra on the given generators.
    pub fn free(name: impl Into<String>, generators: &[&str], cutoff: usize) -> Self {
        QuantumSpace::from_relations(name, generators, &[], cutoff).expect("free algebra")
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn generators(&self) -> &[String] {
        &self.generators
    }

    pub fn dim(&self) -> usize {
        self.generators.len()
    }

    pub fn cutoff(&self) -> usize {
        self.ideal.cutoff()
    }

    pub fn ideal(&self) -> &GradedIdeal {
        &self.ideal
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    /// `h_n = dimⁿ − dim I_n` for `n = 0..=cutoff`.
    pub fn hilbert(&self) -> Vec<usize> {
        (0..=self.cutoff()).map(|n| num_words(self.dim(), n) - self.ideal.component(n).dim()).collect()
    }

    /// Representative of `v + I_n` supported on non-pivot words.
    pub fn normal_form(&self, v: &[Q], n: usize) -> Result<Vec<Q>, SpaceError> {
        if n > self.cutoff() {
            return Err(SpaceError::DegreeExceedsCutoff { degree: n, cutoff: self.cutoff() });
        }
        if v.len() != num_words(self.dim(), n) {
            return Err(SpaceError::Shape(format!("vector of length {} in degree {n}", v.len())));
        }
        Ok(self.ideal.component(n).reduce(v))
    }

    /// The same space with a lower cutoff.
    pub fn truncate(&self, cutoff: usize) -> Result<Self, SpaceError> {
        if cutoff > self.cutoff() {
            return Err(SpaceError::CutoffMismatch(self.cutoff(), cutoff));
        }
        let comps = self.ideal.components()[..=cutoff].to_vec();
        let ideal = GradedIdeal::direct(self.dim(), cutoff, comps)?.with_provenance(self.ideal.provenance());
        QuantumSpace::new(self.name.clone(), self.generators.clone(), ideal)
    }
}
