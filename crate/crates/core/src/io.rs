//! JSON file formats for quantum spaces and cochains.
//!
//! Rationals are strings, words are integer arrays, and emission is canonical:
//! minimal relations in RREF order, terms sorted by word, reduced rationals.

use std::collections::BTreeMap;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::cochain::{extend_seed, multi_indices, Cochain, SeedKind};
use crate::linalg::{format_rational, parse_rational, Matrix, Q};
use crate::scenarios::{build_psi_q, ScenarioError};
use crate::space::{QuantumSpace, Relation};

#[derive(Debug, thiserror::Error)]
pub enum IoError {
    #[error("{path}: {source}")]
    Read { path: String, source: std::io::Error },
    #[error("{path}: malformed JSON: {source}")]
    Json { path: String, source: serde_json::Error },
    #[error("{at}: {reason}")]
    Invalid { at: String, reason: String },
    #[error("cutoff {requested} exceeds the file cutoff {file}; cutoffs may only be lowered")]
    RaisedCutoff { requested: usize, file: usize },
}

fn invalid(at: impl Into<String>, reason: impl ToString) -> IoError {
    IoError::Invalid { at: at.into(), reason: reason.to_string() }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Term {
    pub word: Vec<usize>,
    pub coef: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RelationEntry {
    pub degree: usize,
    pub terms: Vec<Term>,
}

/// A presentation `A₁^⊗ / (relations)` truncated at `cutoff`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SpaceFile {
    pub name: String,
    pub generators: Vec<String>,
    pub cutoff: usize,
    pub relations: Vec<RelationEntry>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BlockEntry {
    pub index: Vec<usize>,
    pub matrix: Vec<Vec<String>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DegreeBlock {
    pub degree: usize,
    pub matrix: Vec<Vec<String>>,
}

/// A level-2 cochain given by a seed, a diagonal weight rule, explicit blocks, or a primitive.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase", deny_unknown_fields)]
pub enum CochainFile {
    /// Seed on `V⊗V`, extended by the bicharacter rule.
    Bicharacter { cutoff: usize, seed: Vec<Vec<String>> },
    /// Seed on `V⊗V`, extended by the anti-bicharacter rule.
    Antibicharacter { cutoff: usize, seed: Vec<Vec<String>> },
    /// Diagonal seed `q^{w_ij}` on `v_i⊗v_j`.
    Diagonal { cutoff: usize, q: String, weights: Vec<Vec<i64>> },
    /// One block per multi-index `R` with `|R| ≤ cutoff`.
    Explicit { level: usize, dim: usize, cutoff: usize, blocks: Vec<BlockEntry> },
    /// Blocks `θ_0, …, θ_D` of a level-1 cochain; the file denotes `∂θ`.
    Primitive { cutoff: usize, theta: Vec<DegreeBlock> },
}

fn read_json<T: for<'de> Deserialize<'de>>(path: &Path) -> Result<T, IoError> {
    let shown = path.display().to_string();
    let text = std::fs::read_to_string(path).map_err(|source| IoError::Read { path: shown.clone(), source })?;
    serde_json::from_str(&text).map_err(|source| IoError::Json { path: shown, source })
}

/// Pretty JSON with a trailing newline; identical inputs give identical bytes.
pub fn to_canonical_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("serialisable");
    s.push('\n');
    s
}

fn effective_cutoff(file: usize, requested: Option<usize>) -> Result<usize, IoError> {
    match requested {
        Some(c) if c > file => Err(IoError::RaisedCutoff { requested: c, file }),
        Some(c) => Ok(c),
        None => Ok(file),
    }
}

fn parse_matrix(rows: &[Vec<String>], at: &str) -> Result<Matrix, IoError> {
    let n = rows.len();
    if n == 0 {
        return Err(invalid(at, "empty matrix"));
    }
    let mut parsed = Vec::with_capacity(n);
    for (i, row) in rows.iter().enumerate() {
        if row.len() != n {
            return Err(invalid(format!("{at}[{i}]"), format!("row of length {} in a {n}x{n} matrix", row.len())));
        }
        let vals = row
            .iter()
            .enumerate()
            .map(|(j, s)| parse_rational(s).map_err(|e| invalid(format!("{at}[{i}][{j}]"), e)))
            .collect::<Result<Vec<Q>, _>>()?;
        parsed.push(vals);
    }
    Ok(Matrix::from_rows(parsed).expect("rows checked square"))
}

pub fn emit_matrix(m: &Matrix) -> Vec<Vec<String>> {
    m.to_rows().iter().map(|row| row.iter().map(format_rational).collect()).collect()
}

/// Reads a square rational matrix stored as a bare array of rows.
pub fn load_matrix(path: &Path) -> Result<Matrix, IoError> {
    let rows: Vec<Vec<String>> = read_json(path)?;
    parse_matrix(&rows, &path.display().to_string())
}

impl SpaceFile {
    pub fn to_space(&self, cutoff: Option<usize>) -> Result<QuantumSpace, IoError> {
        let cutoff = effective_cutoff(self.cutoff, cutoff)?;
        let d = self.generators.len();
        if d == 0 {
            return Err(invalid("generators", "at least one generator is required"));
        }
        let mut relations = Vec::new();
        for (k, rel) in self.relations.iter().enumerate() {
            let at = format!("relations[{k}]");
            if rel.degree < 2 {
                return Err(invalid(&at, format!("degree {} relations are not allowed in a conic space", rel.degree)));
            }
            if rel.degree > self.cutoff {
                return Err(invalid(&at, format!("degree {} exceeds cutoff {}", rel.degree, self.cutoff)));
            }
            let mut terms = Vec::new();
            for (t, term) in rel.terms.iter().enumerate() {
                let at = format!("{at}.terms[{t}]");
                if term.word.len() != rel.degree {
                    return Err(invalid(&at, format!("word length {} differs from degree {}", term.word.len(), rel.degree)));
                }
                if let Some(&g) = term.word.iter().find(|&&g| g >= d) {
                    return Err(invalid(&at, format!("letter {g} out of range for {d} generators")));
                }
                let c = parse_rational(&term.coef).map_err(|e| invalid(&at, e))?;
                if num_traits::Zero::is_zero(&c) {
                    return Err(invalid(&at, "zero coefficient"));
                }
                terms.push((term.word.clone(), c));
            }
            if rel.degree <= cutoff {
                relations.push(Relation::new(rel.degree, terms));
            }
        }
        let names: Vec<&str> = self.generators.iter().map(String::as_str).collect();
        QuantumSpace::from_relations(self.name.clone(), &names, &relations, cutoff).map_err(|e| invalid("relations", e))
    }

    /// Canonical presentation by minimal relations.
    pub fn from_space(qs: &QuantumSpace) -> Self {
        let relations = qs
            .ideal()
            .minimal_relations()
            .into_iter()
            .map(|rel| RelationEntry {
                degree: rel.degree,
                terms: rel.coeffs.iter().map(|(w, c)| Term { word: w.clone(), coef: format_rational(c) }).collect(),
            })
            .collect();
        SpaceFile { name: qs.name().to_string(), generators: qs.generators().to_vec(), cutoff: qs.cutoff(), relations }
    }
}

fn seed_dim(seed: &Matrix, at: &str) -> Result<usize, IoError> {
    let n = seed.rows();
    let d = (1..=n).find(|d| d * d >= n).unwrap_or(1);
    if d * d != n {
        return Err(invalid(at, format!("seed side {n} is not the square of a dimension")));
    }
    Ok(d)
}

impl CochainFile {
    pub fn to_cochain(&self, cutoff: Option<usize>) -> Result<Cochain, IoError> {
        match self {
            CochainFile::Bicharacter { cutoff: c, seed } | CochainFile::Antibicharacter { cutoff: c, seed } => {
                let cutoff = effective_cutoff(*c, cutoff)?;
                let kind = if matches!(self, CochainFile::Bicharacter { .. }) {
                    SeedKind::Bicharacter
                } else {
                    SeedKind::Antibicharacter
                };
                let m = parse_matrix(seed, "seed")?;
                seed_dim(&m, "seed")?;
                extend_seed(&m, kind, cutoff).map_err(|e| invalid("seed", e))
            }
            CochainFile::Diagonal { cutoff: c, q, weights } => {
                let cutoff = effective_cutoff(*c, cutoff)?;
                let d = weights.len();
                if d == 0 {
                    return Err(invalid("weights", "empty weight matrix"));
                }
                if let Some(i) = weights.iter().position(|row| row.len() != d) {
                    return Err(invalid(format!("weights[{i}]"), format!("row of length {} in a {d}x{d} matrix", weights[i].len())));
                }
                let qv = parse_rational(q).map_err(|e| invalid("q", e))?;
                build_psi_q(weights, &qv, cutoff).map_err(|e: ScenarioError| invalid("q", e))
            }
            CochainFile::Explicit { level, dim, cutoff: c, blocks } => {
                let cutoff = effective_cutoff(*c, cutoff)?;
                let mut map = BTreeMap::new();
                for (k, b) in blocks.iter().enumerate() {
                    let at = format!("blocks[{k}]");
                    if b.index.len() != *level || b.index.iter().sum::<usize>() > *c {
                        return Err(invalid(&at, format!("index {:?} outside level {level}, cutoff {c}", b.index)));
                    }
                    if map.contains_key(&b.index) {
                        return Err(invalid(&at, format!("duplicate index {:?}", b.index)));
                    }
                    let m = parse_matrix(&b.matrix, &format!("{at}.matrix"))?;
                    map.insert(b.index.clone(), m);
                }
                if let Some(r) = multi_indices(*level, *c).into_iter().find(|r| !map.contains_key(r)) {
                    return Err(invalid("blocks", format!("missing block {r:?}")));
                }
                map.retain(|r, _| r.iter().sum::<usize>() <= cutoff);
                Cochain::new(*level, *dim, cutoff, map).map_err(|e| invalid("blocks", e))
            }
            CochainFile::Primitive { cutoff: c, theta } => {
                let cutoff = effective_cutoff(*c, cutoff)?;
                let mut map = BTreeMap::new();
                for (k, b) in theta.iter().enumerate() {
                    let at = format!("theta[{k}]");
                    if b.degree > *c || map.contains_key(&vec![b.degree]) {
                        return Err(invalid(&at, format!("degree {} duplicated or beyond cutoff {c}", b.degree)));
                    }
                    map.insert(vec![b.degree], parse_matrix(&b.matrix, &format!("{at}.matrix"))?);
                }
                if let Some(n) = (0..=*c).find(|n| !map.contains_key(&vec![*n])) {
                    return Err(invalid("theta", format!("missing degree {n}")));
                }
                let d = map[&vec![1]].rows();
                map.retain(|r, _| r[0] <= cutoff);
                let theta = Cochain::new(1, d, cutoff, map).map_err(|e| invalid("theta", e))?;
                Ok(theta.coboundary().full)
            }
        }
    }

    /// Explicit blocks in multi-index order.
    pub fn from_cochain(c: &Cochain) -> Self {
        let blocks =
            c.blocks().iter().map(|(r, m)| BlockEntry { index: r.clone(), matrix: emit_matrix(m) }).collect();
        CochainFile::Explicit { level: c.level(), dim: c.dim(), cutoff: c.cutoff(), blocks }
    }
}

pub fn load_space(path: &Path, cutoff: Option<usize>) -> Result<QuantumSpace, IoError> {
    read_json::<SpaceFile>(path)?.to_space(cutoff)
}

pub fn load_cochain(path: &Path, cutoff: Option<usize>) -> Result<Cochain, IoError> {
    read_json::<CochainFile>(path)?.to_cochain(cutoff)
}

pub fn emit_space(qs: &QuantumSpace) -> String {
    to_canonical_json(&SpaceFile::from_space(qs))
}

pub fn emit_cochain(c: &Cochain) -> String {
    to_canonical_json(&CochainFile::from_cochain(c))
}

/// `ab - 3/2 ba` style rendering with generator names.
pub fn format_relation(rel: &Relation, generators: &[String]) -> String {
    let mut out = String::new();
    for (k, (w, c)) in rel.coeffs.iter().enumerate() {
        let word: String = w.iter().map(|&g| generators[g].as_str()).collect();
        let neg = c < &Q::from_integer(0.into());
        let mag = if neg { -c.clone() } else { c.clone() };
        let sign = match (k, neg) {
            (0, true) => "-",
            (0, false) => "",
            (_, true) => " - ",
            (_, false) => " + ",
        };
        out.push_str(sign);
        if !num_traits::One::is_one(&mag) {
            out.push_str(&format_rational(&mag));
            out.push(' ');
        }
        out.push_str(&word);
    }
    out
}
