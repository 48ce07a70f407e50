//! Twisted tensor products `A ⊗_τ B` and the anti-bicharacter `ω` they induce on `A∘B`.

use std::collections::BTreeMap;

use num_traits::Zero;

use crate::cochain::{Cochain, SeedKind};
use crate::linalg::{Matrix, Subspace, Q};
use crate::space::{is_admissible, product, ProductKind, QuantumSpace};
use crate::word::{flat_index, flip_perm, num_words, shuffle_perm, word_of};
use crate::Verdict;

use super::{ScenarioError, ScenarioReport};

/// `τ_{r,s} : B^{⊗r}⊗A^{⊗s} → A^{⊗s}⊗B^{⊗r}` for `r + s ≤ cutoff`.
pub fn extend_tau(
    seed: &Matrix,
    da: usize,
    db: usize,
    cutoff: usize,
) -> Result<BTreeMap<(usize, usize), Matrix>, ScenarioError> {
    if seed.rows() != da * db || !seed.is_square() {
        return Err(ScenarioError::BadParameter("τ seed must map B₁⊗A₁ to A₁⊗B₁".into()));
    }
    if !seed.is_invertible() {
        return Err(ScenarioError::BadParameter("τ seed is singular".into()));
    }
    let mut tau = BTreeMap::new();
    for n in 0..=cutoff {
        tau.insert((0, n), Matrix::identity(num_words(da, n)));
        tau.insert((n, 0), Matrix::identity(num_words(db, n)));
    }
    if cutoff >= 2 {
        tau.insert((1, 1), seed.clone());
    }
    // τ_{1,s+1} = (𝕀_{A^s}⊗τ_{1,1})(τ_{1,s}⊗𝕀_A)
    for s in 1..cutoff.saturating_sub(1) {
        let step = &Matrix::identity(num_words(da, s)).kron(seed) * &tau[&(1, s)].kron(&Matrix::identity(da));
        tau.insert((1, s + 1), step);
    }
    // τ_{r+1,s} = (τ_{r,s}⊗𝕀_B)(𝕀_{B^r}⊗τ_{1,s})
    for r in 1..cutoff {
        for s in 1..=cutoff.saturating_sub(r + 1) {
            let step = &tau[&(r, s)].kron(&Matrix::identity(db)) * &Matrix::identity(num_words(db, r)).kron(&tau[&(1, s)]);
            tau.insert((r + 1, s), step);
        }
    }
    if let Some((k, _)) = tau.iter().find(|(_, m)| !m.is_invertible()) {
        return Err(ScenarioError::BadParameter(format!("τ extension is singular at {k:?}")));
    }
    Ok(tau)
}

/// `ω_{r,s} = (S_r⊗S_s)⁻¹ (𝕀_{A^r} ⊗ f⁻¹τ_{r,s} ⊗ 𝕀_{B^s}) (S_r⊗S_s)` on `(A₁⊗B₁)^{⊗(r+s)}`.
pub fn omega_from_tau(tau: &BTreeMap<(usize, usize), Matrix>, da: usize, db: usize, cutoff: usize) -> Cochain {
    let d = da * db;
    let blocks = crate::cochain::multi_indices(2, cutoff)
        .into_iter()
        .map(|idx| {
            let (r, s) = (idx[0], idx[1]);
            let flip_inv = Matrix::permutation(&flip_perm(r, s, db, da)).transpose();
            let middle = &flip_inv * &tau[&(r, s)];
            let m = Matrix::identity(num_words(da, r)).kron(&middle).kron(&Matrix::identity(num_words(db, s)));
            let (sr, ss) = (shuffle_perm(r, da, db), shuffle_perm(s, da, db));
            let ns = num_words(d, s);
            let perm: Vec<usize> = (0..num_words(d, r) * ns).map(|i| sr[i / ns] * ns + ss[i % ns]).collect();
            (idx, m.conjugate_by_permutation(&perm))
        })
        .collect();
    Cochain::new(2, d, cutoff, blocks).expect("conjugates of invertible blocks")
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
enum Letter {
    A(usize),
    B(usize),
}

type Poly = BTreeMap<Vec<Letter>, Q>;

/// Normal-orders a mixed word by rewriting `b_j a_i ↦ Σ τ(b_j⊗a_i)` one adjacent pair at a time.
fn normal_order(word: Vec<Letter>, seed: &Matrix, da: usize, db: usize) -> Poly {
    let mut done = Poly::new();
    let mut pending: Poly = Poly::from([(word, Q::from_integer(1.into()))]);
    while let Some((w, c)) = pending.pop_first() {
        if c.is_zero() {
            continue;
        }
        let pos = w.windows(2).position(|p| matches!(p, [Letter::B(_), Letter::A(_)]));
        let Some(p) = pos else {
            *done.entry(w).or_insert_with(Q::zero) += c;
            continue;
        };
        let (Letter::B(j), Letter::A(i)) = (w[p], w[p + 1]) else { unreachable!() };
        let col = j * da + i;
        for ip in 0..da {
            for jp in 0..db {
                let t = seed.get(ip * db + jp, col);
                if t.is_zero() {
                    continue;
                }
                let mut nw = w.clone();
                nw[p] = Letter::A(ip);
                nw[p + 1] = Letter::B(jp);
                *pending.entry(nw).or_insert_with(Q::zero) += &c * t;
            }
        }
    }
    done.retain(|_, c| !c.is_zero());
    done
}

fn split_normal(w: &[Letter]) -> (Vec<usize>, Vec<usize>) {
    let a = w.iter().filter_map(|l| if let Letter::A(i) = l { Some(*i) } else { None }).collect();
    let b = w.iter().filter_map(|l| if let Letter::B(j) = l { Some(*j) } else { None }).collect();
    (a, b)
}

/// Compares the rewriting oracle for `b`-words past `a`-words with the recursive `τ_{r,s}`.
pub fn tau_oracle(tau: &BTreeMap<(usize, usize), Matrix>, seed: &Matrix, da: usize, db: usize, max_degree: usize) -> Verdict {
    for (&(r, s), m) in tau {
        if r + s > max_degree {
            continue;
        }
        for col in 0..num_words(db, r) * num_words(da, s) {
            let na = num_words(da, s);
            let (v, u) = (word_of(col / na, db, r), word_of(col % na, da, s));
            let word: Vec<Letter> = v.iter().map(|&j| Letter::B(j)).chain(u.iter().map(|&i| Letter::A(i))).collect();
            let poly = normal_order(word, seed, da, db);
            let mut expect = vec![Q::zero(); m.rows()];
            for (w, c) in poly {
                let (a, b) = split_normal(&w);
                expect[flat_index(&a, da) * num_words(db, r) + flat_index(&b, db)] += c;
            }
            if expect != m.column(col) {
                return Verdict::fail(vec![r, s, col]);
            }
        }
    }
    Verdict::pass()
}

/// Checks `X ·_τ Y = m(ω_{r,s}(X⊗Y))` on all basis words of `A∘B` with `r + s ≤ max_degree`.
pub fn multiplication_oracle(omega: &Cochain, seed: &Matrix, da: usize, db: usize, max_degree: usize) -> Verdict {
    let d = da * db;
    let split = |idx: usize, k: usize| -> (Vec<usize>, Vec<usize>) {
        let pairs = word_of(idx, d, k);
        (pairs.iter().map(|p| p / db).collect(), pairs.iter().map(|p| p % db).collect())
    };
    for (r, s) in (0..=max_degree.min(omega.cutoff())).flat_map(|t| (0..=t).map(move |r| (r, t - r))) {
        let block = omega.block(&[r, s]);
        let ns = num_words(d, s);
        for col in 0..num_words(d, r) * ns {
            let (u, v) = split(col / ns, r);
            let (up, vp) = split(col % ns, s);
            let word: Vec<Letter> = u
                .iter()
                .map(|&i| Letter::A(i))
                .chain(v.iter().map(|&j| Letter::B(j)))
                .chain(up.iter().map(|&i| Letter::A(i)))
                .chain(vp.iter().map(|&j| Letter::B(j)))
                .collect();
            let brute = normal_order(word, seed, da, db);
            // m ∘ ω: the untwisted product in A∘B just deinterleaves the pair word.
            let mut via_omega = Poly::new();
            for (row, c) in block.column(col).into_iter().enumerate() {
                if c.is_zero() {
                    continue;
                }
                let (a, b) = split(row, r + s);
                let w: Vec<Letter> = a.into_iter().map(Letter::A).chain(b.into_iter().map(Letter::B)).collect();
                *via_omega.entry(w).or_insert_with(Q::zero) += c;
            }
            if brute != via_omega {
                return Verdict::fail(vec![r, s, col]);
            }
        }
    }
    Verdict::pass()
}

/// Degree-`n` relations of `A ⊗_τ B` for free `A`, `B`, as a subspace of the free algebra on
/// `A₁ ⊕ B₁` (letters `0..da` from `A`, `da..da+db` from `B`): the kernel of normal ordering.
pub fn relation_space(seed: &Matrix, da: usize, db: usize, n: usize) -> Subspace {
    let g = da + db;
    let mut columns: Vec<Poly> = Vec::new();
    let mut targets: BTreeMap<Vec<Letter>, usize> = BTreeMap::new();
    for idx in 0..num_words(g, n) {
        let word: Vec<Letter> = word_of(idx, g, n)
            .into_iter()
            .map(|l| if l < da { Letter::A(l) } else { Letter::B(l - da) })
            .collect();
        let poly = normal_order(word, seed, da, db);
        for w in poly.keys() {
            let next = targets.len();
            targets.entry(w.clone()).or_insert(next);
        }
        columns.push(poly);
    }
    let mut m = Matrix::zeros(targets.len(), columns.len());
    for (j, poly) in columns.iter().enumerate() {
        for (w, c) in poly {
            m.set(targets[w], j, c.clone());
        }
    }
    m.kernel()
}

/// Builds `ω` from `τ`, classifies it and runs the brute-force oracles.
pub fn build_sttp_omega(
    seed: &Matrix,
    a: &QuantumSpace,
    b: &QuantumSpace,
) -> Result<(Cochain, ScenarioReport), ScenarioError> {
    if a.cutoff() != b.cutoff() {
        return Err(ScenarioError::BadParameter("cutoffs differ".into()));
    }
    let (da, db, cutoff) = (a.dim(), b.dim(), a.cutoff());
    let tau = extend_tau(seed, da, db, cutoff)?;
    let omega = omega_from_tau(&tau, da, db, cutoff);
    let mut report = ScenarioReport::new("sttp");
    report.param("A", a.name()).param("B", b.name()).param("cutoff", cutoff);
    let class = omega.classify();
    report.record("omega anti-bicharacter", class.is_antibicharacter, omega.factorization_failure(SeedKind::Antibicharacter).map(|r| format!("{r:?}")));
    report.record("omega cocycle", class.is_cocycle, omega.cocycle_failure().map(|r| format!("{r:?}")));
    report.check("omega counital", class.is_counital);
    report.verdict("tau extension matches rewriting", &tau_oracle(&tau, seed, da, db, cutoff.min(3)));
    report.verdict("twisted product matches m∘ω", &multiplication_oracle(&omega, seed, da, db, 3));
    let circ = product(ProductKind::Circ, a, b)?;
    report.verdict("omega admissible for A∘B", &is_admissible(&circ, &omega)?);
    Ok((omega, report))
}
