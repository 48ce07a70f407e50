//! Graded two-sided ideals of the truncated tensor algebra.

use std::collections::BTreeMap;

use num_traits::Zero;

use crate::linalg::{Subspace, Q};
use crate::word::{flat_index, num_words};

use super::SpaceError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Provenance {
    GeneratedByRelations,
    DirectComponents,
}

/// A homogeneous relation: a coordinate vector in `V^{⊗degree}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Relation {
    pub degree: usize,
    pub coeffs: BTreeMap<Vec<usize>, Q>,
}

impl Relation {
    pub fn new(degree: usize, terms: impl IntoIterator<Item = (Vec<usize>, Q)>) -> Self {
        let mut coeffs: BTreeMap<Vec<usize>, Q> = BTreeMap::new();
        for (w, c) in terms {
            *coeffs.entry(w).or_insert_with(Q::zero) += c;
        }
        coeffs.retain(|_, c| !c.is_zero());
        Relation { degree, coeffs }
    }

    pub fn to_vector(&self, dim: usize) -> Result<Vec<Q>, SpaceError> {
        let mut v = vec![Q::zero(); num_words(dim, self.degree)];
        for (w, c) in &self.coeffs {
            if w.len() != self.degree || w.iter().any(|&i| i >= dim) {
                return Err(SpaceError::BadRelation(format!("word {w:?} invalid for degree {} on {dim} generators", self.degree)));
            }
            v[flat_index(w, dim)] += c;
        }
        Ok(v)
    }
}

/// Per-degree components `I_0, …, I_D` of a conic ideal.
#[derive(Debug, Clone)]
pub struct GradedIdeal {
    dim: usize,
    cutoff: usize,
    components: Vec<Subspace>,
    provenance: Provenance,
}

impl PartialEq for GradedIdeal {
    fn eq(&self, other: &Self) -> bool {
        self.dim == other.dim && self.cutoff == other.cutoff && self.components == other.components
    }
}

impl Eq for GradedIdeal {}

pub(crate) fn full(dim: usize, k: usize) -> Subspace {
    Subspace::full(num_words(dim, k))
}

/// `A₁^{⊗p} ⊗ X ⊗ A₁^{⊗r}`.
pub(crate) fn sandwich(dim: usize, p: usize, x: &Subspace, r: usize) -> Subspace {
    Subspace::kron_all(&[full(dim, p), x.clone(), full(dim, r)])
}

impl GradedIdeal {
    pub fn zero(dim: usize, cutoff: usize) -> Self {
        GradedIdeal {
            dim,
            cutoff,
            components: (0..=cutoff).map(|n| Subspace::zero(num_words(dim, n))).collect(),
            provenance: Provenance::GeneratedByRelations,
        }
    }

    /// The ideal `A₁^⊗ · S · A₁^⊗` generated by the graded subspace `S`, truncated at the cutoff.
    pub fn generated(dim: usize, cutoff: usize, generating: &[Subspace]) -> Result<Self, SpaceError> {
        if generating.len() != cutoff + 1 {
            return Err(SpaceError::Shape(format!("{} generating components for cutoff {cutoff}", generating.len())));
        }
        let mut components: Vec<Subspace> = Vec::with_capacity(cutoff + 1);
        for (n, s) in generating.iter().enumerate() {
            if s.ambient() != num_words(dim, n) {
                return Err(SpaceError::Shape(format!("generating component {n} has ambient {}", s.ambient())));
            }
            if n < 2 {
                if !s.is_zero() {
                    return Err(SpaceError::LowDegreeRelation(n));
                }
                components.push(s.clone());
                continue;
            }
            let prev = &components[n - 1];
            let v = full(dim, 1);
            let left = v.kron(prev);
            let right = prev.kron(&v);
            components.push(Subspace::sum_all(num_words(dim, n), [&left, &right, s])?);
        }
        Ok(GradedIdeal { dim, cutoff, components, provenance: Provenance::GeneratedByRelations })
    }

    pub fn from_relations(relations: &[Relation], dim: usize, cutoff: usize) -> Result<Self, SpaceError> {
        let mut per_degree: Vec<Vec<Vec<Q>>> = vec![Vec::new(); cutoff + 1];
        for rel in relations {
            if rel.degree < 2 {
                return Err(SpaceError::LowDegreeRelation(rel.degree));
            }
            if rel.degree > cutoff {
                return Err(SpaceError::DegreeExceedsCutoff { degree: rel.degree, cutoff });
            }
            if rel.coeffs.is_empty() {
                return Err(SpaceError::BadRelation("zero relation".into()));
            }
            per_degree[rel.degree].push(rel.to_vector(dim)?);
        }
        let generating = per_degree
            .into_iter()
            .enumerate()
            .map(|(n, vs)| Subspace::span(num_words(dim, n), vs))
            .collect::<Result<Vec<_>, _>>()?;
        GradedIdeal::generated(dim, cutoff, &generating)
    }

    /// Directly assigned components, checked for `I₀ = 0`, `I₁ = 0` and two-sided closure.
    pub fn direct(dim: usize, cutoff: usize, components: Vec<Subspace>) -> Result<Self, SpaceError> {
        if components.len() != cutoff + 1 {
            return Err(SpaceError::Shape(format!("{} components for cutoff {cutoff}", components.len())));
        }
        for (n, c) in components.iter().enumerate() {
            if c.ambient() != num_words(dim, n) {
                return Err(SpaceError::Shape(format!("component {n} has ambient {}", c.ambient())));
            }
        }
        if !components[0].is_zero() {
            return Err(SpaceError::Degenerate);
        }
        if cutoff >= 1 && !components[1].is_zero() {
            return Err(SpaceError::LowDegreeRelation(1));
        }
        let ideal = GradedIdeal { dim, cutoff, components, provenance: Provenance::DirectComponents };
        if let Some(n) = ideal.closure_failure() {
            return Err(SpaceError::NotClosed(n));
        }
        Ok(ideal)
    }

    /// First degree `n` with `A₁·I_n ⊄ I_{n+1}` or `I_n·A₁ ⊄ I_{n+1}`.
    pub fn closure_failure(&self) -> Option<usize> {
        let v = full(self.dim, 1);
        (0..self.cutoff).find(|&n| {
            let next = &self.components[n + 1];
            let c = &self.components[n];
            !next.contains(&v.kron(c)).unwrap_or(false) || !next.contains(&c.kron(&v)).unwrap_or(false)
        })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn cutoff(&self) -> usize {
        self.cutoff
    }

    pub fn provenance(&self) -> Provenance {
        self.provenance
    }

    pub fn component(&self, n: usize) -> &Subspace {
        &self.components[n]
    }

    pub fn components(&self) -> &[Subspace] {
        &self.components
    }

    /// The part of `I_n` generated from lower degrees, `A₁·I_{n−1} + I_{n−1}·A₁`.
    pub fn inherited(&self, n: usize) -> Subspace {
        if n < 2 {
            return Subspace::zero(num_words(self.dim, n));
        }
        let v = full(self.dim, 1);
        let prev = &self.components[n - 1];
        v.kron(prev).sum(&prev.kron(&v)).expect("same ambient")
    }

    /// Canonical minimal relations: per degree, RREF rows of `I_n` completing the inherited part.
    pub fn minimal_relations(&self) -> Vec<Relation> {
        let mut out = Vec::new();
        for n in 2..=self.cutoff {
            let mut acc = self.inherited(n);
            for v in self.components[n].basis_vectors() {
                if acc.contains_vector(&v) {
                    continue;
                }
                acc = acc
                    .sum(&Subspace::span(acc.ambient(), vec![v.clone()]).expect("sized"))
                    .expect("same ambient");
                let terms = v
                    .iter()
                    .enumerate()
                    .filter(|(_, c)| !c.is_zero())
                    .map(|(i, c)| (crate::word::word_of(i, self.dim, n), c.clone()));
                out.push(Relation::new(n, terms));
            }
        }
        out
    }

    /// Whether the ideal is generated by its degree-2 component.
    pub fn is_quadratic(&self) -> bool {
        let mut generating: Vec<Subspace> = (0..=self.cutoff).map(|n| Subspace::zero(num_words(self.dim, n))).collect();
        if self.cutoff >= 2 {
            generating[2] = self.components[2].clone();
        }
        GradedIdeal::generated(self.dim, self.cutoff, &generating).map(|g| &g == self).unwrap_or(false)
    }

    pub(crate) fn with_provenance(mut self, provenance: Provenance) -> Self {
        self.provenance = provenance;
        self
    }
}
