//! Convolution-invertible forms on the free matrix bialgebra over `t = V*⊗V` and the `Ϝ` map.
//!
//! A form of level `n` stores, per multi-index `R`, its values on `t`-words of length `|R|`,
//! with the letter `t_i^j` at index `i·dim + j`. Coproduct and counit are fixed:
//! `Δ t_i^j = Σ_k t_i^k ⊗ t_k^j` and `ε(t_i^j) = δ_i^j`.

use std::collections::BTreeMap;

use num_traits::{One, Zero};

use crate::cochain::{multi_indices, Cochain, CochainError, MultiIndex};
use crate::linalg::{Matrix, Q};
use crate::word::{flat_index, num_words, word_of};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum BridgeError {
    #[error("shape mismatch: {0}")]
    Shape(String),
    #[error("form is not convolution-invertible at block {0:?}")]
    NotInvertible(MultiIndex),
    #[error(transparent)]
    Cochain(#[from] CochainError),
}

/// Splits a `t`-word index into its lower (`i`) and upper (`j`) word indices.
fn split_t(idx: usize, d: usize, k: usize) -> (usize, usize) {
    let letters = word_of(idx, d * d, k);
    let lower: Vec<usize> = letters.iter().map(|l| l / d).collect();
    let upper: Vec<usize> = letters.iter().map(|l| l % d).collect();
    (flat_index(&lower, d), flat_index(&upper, d))
}

/// Index of `t_I^J` for lower word `I` and upper word `J`, both of length `k`.
fn join_t(lower: usize, upper: usize, d: usize, k: usize) -> usize {
    let (i, j) = (word_of(lower, d, k), word_of(upper, d, k));
    let letters: Vec<usize> = i.iter().zip(&j).map(|(a, b)| a * d + b).collect();
    flat_index(&letters, d * d)
}

/// `join_t` tabulated over all lower and upper words of length `k`.
struct JoinTable {
    n: usize,
    table: Vec<usize>,
}

impl JoinTable {
    fn new(d: usize, k: usize) -> Self {
        let n = num_words(d, k);
        let table = (0..n * n).map(|x| join_t(x / n, x % n, d, k)).collect();
        JoinTable { n, table }
    }

    fn at(&self, lower: usize, upper: usize) -> usize {
        self.table[lower * self.n + upper]
    }
}

/// `ε(t_I^J) = δ_I^J` on words of length `k`.
fn counit_values(d: usize, k: usize) -> Vec<Q> {
    (0..num_words(d * d, k))
        .map(|idx| {
            let (i, j) = split_t(idx, d, k);
            if i == j { Q::one() } else { Q::zero() }
        })
        .collect()
}

/// `(a∗b)(t_I^J) = Σ_K a(t_I^K) b(t_K^J)`, the explicit Sweedler sum.
fn convolve_values(a: &[Q], b: &[Q], d: usize, k: usize) -> Vec<Q> {
    let t = JoinTable::new(d, k);
    let n = t.n;
    let mut out = vec![Q::zero(); a.len()];
    for i in 0..n {
        for j in 0..n {
            let mut acc = Q::zero();
            for m in 0..n {
                let x = &a[t.at(i, m)];
                if x.is_zero() {
                    continue;
                }
                acc += x * &b[t.at(m, j)];
            }
            out[t.at(i, j)] = acc;
        }
    }
    out
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BiForm {
    level: usize,
    dim: usize,
    cutoff: usize,
    values: BTreeMap<MultiIndex, Vec<Q>>,
}

impl BiForm {
    pub fn new(level: usize, dim: usize, cutoff: usize, values: BTreeMap<MultiIndex, Vec<Q>>) -> Result<Self, BridgeError> {
        let expected = multi_indices(level, cutoff);
        if values.len() != expected.len() {
            return Err(BridgeError::Shape(format!("{} blocks, expected {}", values.len(), expected.len())));
        }
        for r in &expected {
            let v = values.get(r).ok_or_else(|| BridgeError::Shape(format!("missing block {r:?}")))?;
            let k: usize = r.iter().sum();
            if v.len() != num_words(dim * dim, k) {
                return Err(BridgeError::Shape(format!("block {r:?} has {} values", v.len())));
            }
        }
        let form = BiForm { level, dim, cutoff, values };
        if let Some(r) = expected.into_iter().find(|r| !form.matrix(r).is_invertible()) {
            return Err(BridgeError::NotInvertible(r));
        }
        Ok(form)
    }

    fn from_fn(level: usize, dim: usize, cutoff: usize, f: impl Fn(&[usize]) -> Vec<Q>) -> Self {
        let values = multi_indices(level, cutoff).into_iter().map(|r| {
            let v = f(&r);
            (r, v)
        });
        BiForm { level, dim, cutoff, values: values.collect() }
    }

    /// The convolution unit `ε^⊗n`.
    pub fn unit(level: usize, dim: usize, cutoff: usize) -> Self {
        BiForm::from_fn(level, dim, cutoff, |r| counit_values(dim, r.iter().sum()))
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

    /// Values on `t`-words of multidegree `R`.
    pub fn values(&self, r: &[usize]) -> &[Q] {
        &self.values[r]
    }

    /// `X[J][I] = χ(t_I^J)`.
    fn matrix(&self, r: &[usize]) -> Matrix {
        let (d, k) = (self.dim, r.iter().sum());
        let n = num_words(d, k);
        let vals = &self.values[r];
        let mut m = Matrix::zeros(n, n);
        for (idx, v) in vals.iter().enumerate() {
            let (i, j) = split_t(idx, d, k);
            m.set(j, i, v.clone());
        }
        m
    }

    fn check_same_shape(&self, other: &BiForm) -> Result<(), BridgeError> {
        if (self.level, self.dim, self.cutoff) != (other.level, other.dim, other.cutoff) {
            return Err(BridgeError::Shape(format!(
                "(level {}, dim {}, cutoff {}) vs (level {}, dim {}, cutoff {})",
                self.level, self.dim, self.cutoff, other.level, other.dim, other.cutoff
            )));
        }
        Ok(())
    }

    /// `χ ∗ ζ = (χ⊗ζ)Δ^{(n)}`, blockwise.
    pub fn convolution(&self, other: &BiForm) -> Result<BiForm, BridgeError> {
        self.check_same_shape(other)?;
        Ok(BiForm::from_fn(self.level, self.dim, self.cutoff, |r| {
            convolve_values(&self.values[r], &other.values[r], self.dim, r.iter().sum())
        }))
    }

    /// The convolution inverse, read off the matrix inverse.
    pub fn convolution_inverse(&self) -> BiForm {
        let inv = form_to_cochain(self).inverse();
        cochain_to_form(&inv)
    }

    /// `d_i : Gⁿ → Gⁿ⁺¹`; boundary faces tensor with `ε`, middle faces merge adjacent legs.
    pub fn face(&self, i: usize) -> Result<BiForm, BridgeError> {
        let n = self.level;
        if i > n + 1 {
            return Err(BridgeError::Shape(format!("face {i} on level {n}")));
        }
        let d = self.dim;
        let dd = d * d;
        Ok(BiForm::from_fn(n + 1, d, self.cutoff, |r| {
            let k: usize = r.iter().sum();
            if i == 0 || i == n + 1 {
                let (eps_len, rest): (usize, &[usize]) = if i == 0 { (r[0], &r[1..]) } else { (r[n], &r[..n]) };
                let rest_len = k - eps_len;
                let eps = counit_values(d, eps_len);
                let vals = &self.values[rest];
                (0..num_words(dd, k))
                    .map(|idx| {
                        let (e, v) = if i == 0 {
                            (idx / num_words(dd, rest_len), idx % num_words(dd, rest_len))
                        } else {
                            (idx % num_words(dd, eps_len), idx / num_words(dd, eps_len))
                        };
                        &eps[e] * &vals[v]
                    })
                    .collect()
            } else {
                let mut merged: MultiIndex = r[..i - 1].to_vec();
                merged.push(r[i - 1] + r[i]);
                merged.extend_from_slice(&r[i + 1..]);
                self.values[&merged].clone()
            }
        }))
    }

    /// `s_i : Gⁿ → Gⁿ⁻¹`: evaluate with the unit inserted in leg `i`.
    pub fn degeneracy(&self, i: usize) -> Result<BiForm, BridgeError> {
        let n = self.level;
        if n == 0 || i >= n {
            return Err(BridgeError::Shape(format!("degeneracy {i} on level {n}")));
        }
        Ok(BiForm::from_fn(n - 1, self.dim, self.cutoff, |r| {
            let mut s = r.to_vec();
            s.insert(i, 0);
            self.values[&s].clone()
        }))
    }

    /// `dχ = (d₀χ ∗ d₂χ ∗ ⋯)⁻¹ ∗ (⋯ ∗ d₃χ ∗ d₁χ)`.
    pub fn coboundary(&self) -> BiForm {
        let n = self.level;
        let faces: Vec<BiForm> = (0..=n + 1).map(|i| self.face(i).expect("index in range")).collect();
        let unit = BiForm::unit(n + 1, self.dim, self.cutoff);
        let even = (0..=n + 1)
            .step_by(2)
            .fold(unit.clone(), |acc, i| acc.convolution(&faces[i]).expect("same shape"));
        let mut odds: Vec<usize> = (1..=n + 1).step_by(2).collect();
        odds.reverse();
        let odd = odds.into_iter().fold(unit, |acc, i| acc.convolution(&faces[i]).expect("same shape"));
        even.convolution_inverse().convolution(&odd).expect("same shape")
    }

    pub fn is_unit(&self) -> bool {
        *self == BiForm::unit(self.level, self.dim, self.cutoff)
    }
}

/// `Lin[t^⊗k, 𝕜] → End[V^⊗k]`, `χ ↦ (X[J][I] = χ(t_I^J))`.
pub fn form_to_cochain(chi: &BiForm) -> Cochain {
    let blocks = multi_indices(chi.level, chi.cutoff).into_iter().map(|r| {
        let m = chi.matrix(&r);
        (r, m)
    });
    Cochain::new(chi.level, chi.dim, chi.cutoff, blocks.collect()).expect("form blocks are invertible")
}

/// Inverse of [`form_to_cochain`].
pub fn cochain_to_form(c: &Cochain) -> BiForm {
    let d = c.dim();
    BiForm::from_fn(c.level(), d, c.cutoff(), |r| {
        let k: usize = r.iter().sum();
        let m = c.block(r);
        (0..num_words(d * d, k))
            .map(|idx| {
                let (i, j) = split_t(idx, d, k);
                m.get(j, i).clone()
            })
            .collect()
    })
}

/// `Ϝχ = (χ ⊗ 𝕀 ⊗ χ⁻¹)Δ^{(2)}` on `(t^⊗)^{⊗n}`, by explicit summation over
/// `Δ^{(2)} t_I^J = Σ_{K,L} t_I^K ⊗ t_K^L ⊗ t_L^J`.
pub fn digamma(chi: &BiForm) -> Cochain {
    let inv = chi.convolution_inverse();
    let d = chi.dim;
    let blocks = multi_indices(chi.level, chi.cutoff).into_iter().map(|r| {
        let k: usize = r.iter().sum();
        let n = num_words(d, k);
        let (left, right) = (&chi.values[&r], &inv.values[&r]);
        let t = JoinTable::new(d, k);
        let mut m = Matrix::zeros(n * n, n * n);
        for i in 0..n {
            for j in 0..n {
                let col = t.at(i, j);
                for kk in 0..n {
                    let a = &left[t.at(i, kk)];
                    if a.is_zero() {
                        continue;
                    }
                    for l in 0..n {
                        let b = &right[t.at(l, j)];
                        if !b.is_zero() {
                            m.set(t.at(kk, l), col, a * b);
                        }
                    }
                }
            }
        }
        (r, m)
    });
    Cochain::new(chi.level, d * d, chi.cutoff, blocks.collect()).expect("Ϝ of an invertible form is invertible")
}

/// The G-primitive `λ₀ = 1/χ₀₀`, `λ_{n+1} = (λ_n⊗ε) ∗ χ_{n,1}` of a level-2 form.
pub fn form_primitive(chi: &BiForm) -> Result<BiForm, BridgeError> {
    if chi.level != 2 {
        return Err(BridgeError::Shape("the G-primitive needs a level-2 form".into()));
    }
    let (d, dd) = (chi.dim, chi.dim * chi.dim);
    let mut lambdas: Vec<Vec<Q>> = vec![vec![chi.values[&vec![0, 0]][0].recip()]];
    let eps = counit_values(d, 1);
    for n in 0..chi.cutoff {
        let prev = &lambdas[n];
        let extended: Vec<Q> = (0..num_words(dd, n + 1)).map(|idx| &prev[idx / dd] * &eps[idx % dd]).collect();
        let next = convolve_values(&extended, &chi.values[&vec![n, 1]], d, n + 1);
        lambdas.push(next);
    }
    let values = (0..=chi.cutoff).map(|n| (vec![n], lambdas[n].clone())).collect();
    BiForm::new(1, d, chi.cutoff, values)
}

/// A form on the free bialgebra over a group-like coalgebra, `Δv_i = v_i⊗v_i`, `ε(v_i) = 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupLikeForm {
    level: usize,
    dim: usize,
    cutoff: usize,
    values: BTreeMap<MultiIndex, Vec<Q>>,
}

impl GroupLikeForm {
    /// Values on `v`-words of multidegree `R`; invertible iff every value is nonzero.
    pub fn new(level: usize, dim: usize, cutoff: usize, values: BTreeMap<MultiIndex, Vec<Q>>) -> Result<Self, BridgeError> {
        for r in multi_indices(level, cutoff) {
            let v = values.get(&r).ok_or_else(|| BridgeError::Shape(format!("missing block {r:?}")))?;
            if v.len() != num_words(dim, r.iter().sum()) {
                return Err(BridgeError::Shape(format!("block {r:?} has {} values", v.len())));
            }
            if v.iter().any(Zero::is_zero) {
                return Err(BridgeError::NotInvertible(r));
            }
        }
        Ok(GroupLikeForm { level, dim, cutoff, values })
    }

    pub fn level(&self) -> usize {
        self.level
    }

    pub fn values(&self, r: &[usize]) -> &[Q] {
        &self.values[r]
    }
}

/// `Ϝχ` over the group-like coalgebra by explicit summation over `Δ^{(2)} v_I = v_I⊗v_I⊗v_I`.
pub fn digamma_group_like(chi: &GroupLikeForm) -> Cochain {
    let d = chi.dim;
    let blocks = multi_indices(chi.level, chi.cutoff).into_iter().map(|r| {
        let vals = &chi.values[&r];
        let n = vals.len();
        let mut m = Matrix::zeros(n, n);
        for (w, x) in vals.iter().enumerate() {
            // convolution is pointwise here, so χ⁻¹(v_I) = 1/χ(v_I)
            m.set(w, w, m.get(w, w) + x * x.recip());
        }
        (r, m)
    });
    Cochain::new(chi.level, d, chi.cutoff, blocks.collect()).expect("diagonal with nonzero entries")
}
