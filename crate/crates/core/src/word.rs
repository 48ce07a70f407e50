//! Flat indexing of tensor-power bases by lexicographically ordered words.

/// `dim^k`.
pub fn num_words(dim: usize, k: usize) -> usize {
    dim.pow(k as u32)
}

/// Flat index `Σ i_j · dim^{k-j}` of a word.
pub fn flat_index(word: &[usize], dim: usize) -> usize {
    word.iter().fold(0, |acc, &i| {
        debug_assert!(i < dim, "letter out of range");
        acc * dim + i
    })
}

/// Inverse of [`flat_index`] for words of length `k`.
pub fn word_of(mut index: usize, dim: usize, k: usize) -> Vec<usize> {
    let mut w = vec![0; k];
    for slot in w.iter_mut().rev() {
        *slot = index % dim;
        index /= dim;
    }
    w
}

/// All words of length `k` in flat order.
pub fn all_words(dim: usize, k: usize) -> Vec<Vec<usize>> {
    (0..num_words(dim, k)).map(|i| word_of(i, dim, k)).collect()
}

/// Maps the interleaved index of `(A₁⊗B₁)^{⊗k}` (pair letter `a·dim_b + b`)
/// to the deinterleaved index of `A₁^{⊗k} ⊗ B₁^{⊗k}`.
pub fn shuffle_perm(k: usize, dim_a: usize, dim_b: usize) -> Vec<usize> {
    let nb = num_words(dim_b, k);
    (0..num_words(dim_a * dim_b, k))
        .map(|idx| {
            let pairs = word_of(idx, dim_a * dim_b, k);
            let a: Vec<usize> = pairs.iter().map(|p| p / dim_b).collect();
            let b: Vec<usize> = pairs.iter().map(|p| p % dim_b).collect();
            flat_index(&a, dim_a) * nb + flat_index(&b, dim_b)
        })
        .collect()
}

/// Maps the index of `V^{⊗r} ⊗ W^{⊗s}` to that of `W^{⊗s} ⊗ V^{⊗r}`.
pub fn flip_perm(r: usize, s: usize, dim_v: usize, dim_w: usize) -> Vec<usize> {
    let (nv, nw) = (num_words(dim_v, r), num_words(dim_w, s));
    (0..nv * nw).map(|idx| (idx % nw) * nv + idx / nw).collect()
}
