use num_traits::{One, Zero};
use proptest::prelude::*;

use qtwist::linalg::{format_rational, frac, parse_rational, q, Matrix, Subspace, Q};

/// Textbook rational Gauss-Jordan, the oracle for the fraction-free kernels.
fn naive_rref(m: &Matrix) -> (Vec<Vec<Q>>, Vec<usize>) {
    let mut a = m.to_rows();
    let (rows, cols) = (m.rows(), m.cols());
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows).find(|&i| !a[i][c].is_zero()) else { continue };
        a.swap(p, r);
        let inv = a[r][c].recip();
        for x in a[r].iter_mut() {
            *x *= &inv;
        }
        for i in 0..rows {
            if i != r && !a[i][c].is_zero() {
                let f = a[i][c].clone();
                for j in 0..cols {
                    let t = &f * &a[r][j];
                    a[i][j] -= t;
                }
            }
        }
        pivots.push(c);
        r += 1;
        if r == rows {
            break;
        }
    }
    a.truncate(r);
    (a, pivots)
}

fn naive_inverse(m: &Matrix) -> Option<Matrix> {
    let n = m.rows();
    let wide: Vec<Vec<Q>> = m
        .to_rows()
        .into_iter()
        .enumerate()
        .map(|(i, mut row)| {
            row.extend((0..n).map(|j| if i == j { Q::one() } else { Q::zero() }));
            row
        })
        .collect();
    let (red, pivots) = naive_rref(&Matrix::from_rows(wide).unwrap());
    if pivots.len() < n || pivots[n - 1] >= n {
        return None;
    }
    Some(Matrix::from_rows(red.into_iter().map(|row| row[n..].to_vec()).collect()).unwrap())
}

fn rational() -> impl Strategy<Value = Q> {
    (-4i64..=4, 1i64..=3).prop_map(|(n, d)| frac(n, d))
}

fn matrix(max: usize) -> impl Strategy<Value = Matrix> {
    (1..=max, 1..=max).prop_flat_map(|(r, c)| {
        prop::collection::vec(rational(), r * c).prop_map(move |d| Matrix::from_vec(r, c, d).unwrap())
    })
}

fn square(max: usize) -> impl Strategy<Value = Matrix> {
    (1..=max).prop_flat_map(|n| prop::collection::vec(rational(), n * n).prop_map(move |d| Matrix::from_vec(n, n, d).unwrap()))
}

fn subspace(ambient: usize, max_vectors: usize) -> impl Strategy<Value = Subspace> {
    prop::collection::vec(prop::collection::vec(rational(), ambient), 0..=max_vectors)
        .prop_map(move |vs| Subspace::span(ambient, vs).unwrap())
}

#[test]
fn inverse_of_known_matrix() {
    let m = Matrix::from_i64(&[&[2, 1], &[5, 3]]);
    assert_eq!(m.inverse().unwrap(), Matrix::from_i64(&[&[3, -1], &[-5, 2]]));
}

#[test]
fn singular_matrix_has_no_inverse() {
    let m = Matrix::from_i64(&[&[1, 2], &[2, 4]]);
    assert!(m.inverse().is_err());
    assert!(!m.is_invertible());
    assert_eq!(m.rank(), 1);
}

#[test]
fn determinant_divisible_by_the_fast_path_prime_is_still_invertible() {
    // det = 2^61 - 1, which vanishes modulo the prime used by the quick rank test
    let p = (1i64 << 61) - 1;
    let m = Matrix::from_vec(2, 2, vec![q(p), q(0), q(0), q(1)]).unwrap();
    assert!(m.is_invertible());
    assert_eq!(&m * &m.inverse().unwrap(), Matrix::identity(2));
}

#[test]
fn kernel_of_rank_one_map() {
    let m = Matrix::from_i64(&[&[1, -1, 0]]);
    let k = m.kernel();
    assert_eq!(k.dim(), 2);
    for v in k.basis_vectors() {
        assert!(m.apply(&v).iter().all(Zero::is_zero));
    }
}

#[test]
fn rational_strings_are_canonical() {
    assert_eq!(parse_rational("6/4").unwrap(), frac(3, 2));
    assert_eq!(format_rational(&parse_rational("-6/-4").unwrap()), "3/2");
    assert_eq!(format_rational(&q(-7)), "-7");
    assert!(parse_rational("1.5").is_err());
    assert!(parse_rational("1/0").is_err());
    assert!(parse_rational("").is_err());
}

#[test]
fn perp_of_extremes() {
    assert!(Subspace::zero(3).perp().is_full());
    assert!(Subspace::full(3).perp().is_zero());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn rref_matches_the_naive_oracle(m in matrix(8)) {
        let (r, pivots) = m.rref();
        let (nr, npivots) = naive_rref(&m);
        prop_assert_eq!(r.to_rows(), nr);
        prop_assert_eq!(pivots, npivots);
    }

    #[test]
    fn rref_is_idempotent(m in matrix(8)) {
        let (r, _) = m.rref();
        prop_assert_eq!(r.rref().0, r);
    }

    #[test]
    fn rank_nullity(m in matrix(7)) {
        prop_assert_eq!(m.rank() + m.kernel().dim(), m.cols());
    }

    #[test]
    fn inverse_matches_the_naive_oracle(m in square(6)) {
        match naive_inverse(&m) {
            Some(inv) => {
                prop_assert!(m.is_invertible());
                prop_assert_eq!(m.inverse().unwrap(), inv);
            }
            None => {
                prop_assert!(!m.is_invertible());
                prop_assert!(m.inverse().is_err());
            }
        }
    }

    #[test]
    fn product_matches_entrywise_sums(a in matrix(5), seed in any::<u64>()) {
        let mut g = qtwist::random::rng(seed);
        let b = qtwist::random::integer_matrix(&mut g, a.cols(), 3, 3);
        let p = &a * &b;
        for i in 0..a.rows() {
            for j in 0..3 {
                let mut acc = Q::zero();
                for k in 0..a.cols() {
                    acc += a.get(i, k) * b.get(k, j);
                }
                prop_assert_eq!(p.get(i, j), &acc);
            }
        }
    }

    #[test]
    fn kron_mixed_product(a in square(3), b in square(3), c in square(3), d in square(3)) {
        prop_assume!(a.rows() == c.rows() && b.rows() == d.rows());
        prop_assert_eq!(&a.kron(&b) * &c.kron(&d), (&a * &c).kron(&(&b * &d)));
    }

    #[test]
    fn perp_is_an_involution(s in (1usize..=6).prop_flat_map(|n| subspace(n, 6))) {
        prop_assert_eq!(s.perp().perp(), s.clone());
        prop_assert_eq!(s.dim() + s.perp().dim(), s.ambient());
    }

    #[test]
    fn image_then_preimage_round_trips(n in 1usize..=5, seed in any::<u64>(), vs in prop::collection::vec(prop::collection::vec(rational(), 5), 0..=4)) {
        let vs: Vec<Vec<Q>> = vs.into_iter().map(|v| v[..n].to_vec()).collect();
        let s = Subspace::span(n, vs).unwrap();
        let m = qtwist::random::invertible_matrix(&mut qtwist::random::rng(seed), n, 3);
        prop_assert_eq!(s.preimage(&m).unwrap().image(&m).unwrap(), s.clone());
        prop_assert_eq!(s.image(&m).unwrap().dim(), s.dim());
    }

    #[test]
    fn sum_and_intersection_dimensions(s in subspace(5, 3), t in subspace(5, 3)) {
        let sum = s.sum(&t).unwrap();
        let cap = s.intersect(&t).unwrap();
        prop_assert_eq!(sum.dim() + cap.dim(), s.dim() + t.dim());
        prop_assert!(sum.contains(&s).unwrap() && s.contains(&cap).unwrap() && t.contains(&cap).unwrap());
    }

    #[test]
    fn reduce_is_a_projection_modulo_the_subspace(s in subspace(4, 3), v in prop::collection::vec(rational(), 4)) {
        let r = s.reduce(&v);
        prop_assert_eq!(s.reduce(&r), r.clone());
        let diff: Vec<Q> = v.iter().zip(&r).map(|(a, b)| a - b).collect();
        prop_assert!(s.contains_vector(&diff));
        for &p in s.pivots() {
            prop_assert!(r[p].is_zero());
        }
    }

    #[test]
    fn kron_of_rref_bases_is_canonical(s in subspace(3, 2), t in subspace(2, 2)) {
        let k = s.kron(&t);
        prop_assert_eq!(Subspace::from_rows(k.basis()), k.clone());
    }

    #[test]
    fn rationals_round_trip_through_strings(x in rational()) {
        prop_assert_eq!(parse_rational(&format_rational(&x)).unwrap(), x);
    }
}
