//! Subspaces of `Q^n` in canonical reduced row echelon form.

use num_traits::Zero;

use super::{LinalgError, Matrix, Q};

/// A subspace held as the RREF of a spanning set; equality is entrywise.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Subspace {
    ambient: usize,
    basis: Matrix,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(ambient: usize) -> Self {
        Subspace { ambient, basis: Matrix::zeros(0, ambient), pivots: Vec::new() }
    }

    pub fn full(ambient: usize) -> Self {
        Subspace { ambient, basis: Matrix::identity(ambient), pivots: (0..ambient).collect() }
    }

    /// Row span of `m`.
    pub fn from_rows(m: &Matrix) -> Self {
        let (basis, pivots) = m.rref();
        Subspace { ambient: m.cols(), basis, pivots }
    }

    pub fn span(ambient: usize, vectors: Vec<Vec<Q>>) -> Result<Self, LinalgError> {
        if vectors.iter().any(|v| v.len() != ambient) {
            return Err(LinalgError::DimensionMismatch(format!(
                "vector length differs from ambient dimension {ambient}"
            )));
        }
        if vectors.is_empty() {
            return Ok(Subspace::zero(ambient));
        }
        let data = vectors.into_iter().flatten().collect::<Vec<_>>();
        let rows = data.len() / ambient.max(1);
        Ok(Subspace::from_rows(&Matrix::from_vec(rows, ambient, data)?))
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.rows()
    }

    pub fn basis(&self) -> &Matrix {
        &self.basis
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn basis_vectors(&self) -> Vec<Vec<Q>> {
        self.basis.to_rows()
    }

    pub fn is_zero(&self) -> bool {
        self.dim() == 0
    }

    pub fn is_full(&self) -> bool {
        self.dim() == self.ambient
    }

    fn check_ambient(&self, other: &Subspace) -> Result<(), LinalgError> {
        if self.ambient != other.ambient {
            return Err(LinalgError::DimensionMismatch(format!(
                "ambient {} vs {}",
                self.ambient, other.ambient
            )));
        }
        Ok(())
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace, LinalgError> {
        self.check_ambient(other)?;
        if other.is_zero() || self.is_full() {
            return Ok(self.clone());
        }
        if self.is_zero() || other.is_full() {
            return Ok(other.clone());
        }
        Ok(Subspace::from_rows(&self.basis.vstack(&other.basis)?))
    }

    /// Sum of many subspaces of a common ambient space.
    pub fn sum_all<'a, I>(ambient: usize, parts: I) -> Result<Subspace, LinalgError>
    where
        I: IntoIterator<Item = &'a Subspace>,
    {
        let mut stacked = Matrix::zeros(0, ambient);
        for p in parts {
            if p.ambient != ambient {
                return Err(LinalgError::DimensionMismatch("sum_all ambient mismatch".into()));
            }
            if p.is_full() {
                return Ok(Subspace::full(ambient));
            }
            stacked = stacked.vstack(&p.basis)?;
        }
        Ok(Subspace::from_rows(&stacked))
    }

    /// Reduces `v` against the basis; the result vanishes iff `v` lies in the subspace.
    pub fn reduce(&self, v: &[Q]) -> Vec<Q> {
        let mut out = v.to_vec();
        for (i, &p) in self.pivots.iter().enumerate() {
            if out[p].is_zero() {
                continue;
            }
            let f = out[p].clone();
            for (o, b) in out.iter_mut().zip(self.basis.row(i)) {
                if !b.is_zero() {
                    *o -= &f * b;
                }
            }
        }
        out
    }

    pub fn contains_vector(&self, v: &[Q]) -> bool {
        v.len() == self.ambient && self.reduce(v).iter().all(Zero::is_zero)
    }

    /// Whether `other ⊆ self`.
    pub fn contains(&self, other: &Subspace) -> Result<bool, LinalgError> {
        self.check_ambient(other)?;
        if self.is_full() || other.is_zero() {
            return Ok(true);
        }
        if other.dim() > self.dim() {
            return Ok(false);
        }
        Ok((0..other.dim()).all(|i| self.contains_vector(other.basis.row(i))))
    }

    /// Orthogonal complement under the coordinate pairing.
    pub fn perp(&self) -> Subspace {
        if self.is_zero() {
            return Subspace::full(self.ambient);
        }
        self.basis.kernel()
    }

    pub fn intersect(&self, other: &Subspace) -> Result<Subspace, LinalgError> {
        Ok(self.perp().sum(&other.perp())?.perp())
    }

    /// `{M v : v ∈ S}`.
    pub fn image(&self, m: &Matrix) -> Result<Subspace, LinalgError> {
        if m.cols() != self.ambient {
            return Err(LinalgError::DimensionMismatch(format!(
                "{}x{} map on ambient {}",
                m.rows(),
                m.cols(),
                self.ambient
            )));
        }
        if self.is_zero() {
            return Ok(Subspace::zero(m.rows()));
        }
        Ok(Subspace::from_rows(&(&self.basis * &m.transpose())))
    }

    /// `{v : M v ∈ S}` for invertible `M`.
    pub fn preimage(&self, m: &Matrix) -> Result<Subspace, LinalgError> {
        self.image(&m.inverse()?)
    }

    /// `S ⊗ T`; the Kronecker product of two RREF bases is already in RREF.
    pub fn kron(&self, other: &Subspace) -> Subspace {
        let basis = self.basis.kron(&other.basis);
        let pivots = self
            .pivots
            .iter()
            .flat_map(|&p| other.pivots.iter().map(move |&q| p * other.ambient + q))
            .collect();
        Subspace { ambient: self.ambient * other.ambient, basis, pivots }
    }

    /// Tensor product of a list of factors, in order.
    pub fn kron_all(parts: &[Subspace]) -> Subspace {
        parts.iter().fold(Subspace::full(1), |acc, p| acc.kron(p))
    }
}

impl std::fmt::Debug for Subspace {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Subspace(dim {} in {}, {:?})", self.dim(), self.ambient, self.basis)
    }
}
