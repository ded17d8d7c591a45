use lieforge::ffield::{ff_make, Fe, Field};
use lieforge::linalg::{kernel, rref, rref_generic, solve, Matrix, Subspace, Vector};
use proptest::prelude::*;

/// Every field of order at most 256 with the default modulus.
fn small_fields() -> Vec<Field> {
    let mut out = Vec::new();
    for (p, kmax) in [(2u32, 8u32), (3, 5), (5, 3)] {
        for k in 1..=kmax {
            out.push(ff_make(p, k, None).unwrap());
        }
    }
    out
}

#[test]
fn frobenius_is_additive() {
    for f in small_fields() {
        for a in f.elements() {
            for b in f.elements() {
                assert_eq!(f.frobenius(f.add(a, b)), f.add(f.frobenius(a), f.frobenius(b)), "{f:?}");
            }
        }
    }
}

#[test]
fn nonzero_elements_are_invertible() {
    for f in small_fields() {
        for a in f.elements().skip(1) {
            assert_eq!(f.mul(a, f.inv(a).unwrap()), 1, "{f:?} a={a}");
        }
        assert!(f.inv(0).is_err());
    }
}

#[test]
fn frobenius_has_order_dividing_k() {
    for f in small_fields() {
        for a in f.elements() {
            let mut x = a;
            for _ in 0..f.k() {
                x = f.frobenius(x);
            }
            assert_eq!(x, a);
        }
    }
}

fn field_of(choice: u8) -> Field {
    match choice % 4 {
        0 => ff_make(2, 1, None),
        1 => ff_make(2, 2, None),
        2 => ff_make(3, 1, None),
        _ => ff_make(3, 2, None),
    }
    .unwrap()
}

fn matrix(f: &Field, rows: usize, cols: usize, seed: &[u32]) -> Matrix {
    Matrix::from_fn(f, rows, cols, |i, j| seed[(i * cols + j) % seed.len()] % f.order())
}

fn naive_rank(m: &Matrix) -> usize {
    rref_generic(m, m.cols()).rank
}

prop_compose! {
    fn any_matrix(max: usize)(choice in any::<u8>(), rows in 1..=max, cols in 1..=max,
                              seed in prop::collection::vec(any::<u32>(), 1..200)) -> Matrix {
        matrix(&field_of(choice), rows, cols, &seed)
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn rref_is_idempotent(m in any_matrix(12)) {
        let r = rref(&m);
        prop_assert_eq!(rref(&r.matrix), r.clone());
        prop_assert_eq!(r.rank, r.pivots.len());
        prop_assert_eq!(r.rank, naive_rank(&m));
    }

    #[test]
    fn rank_of_transpose(m in any_matrix(20)) {
        prop_assert_eq!(rref(&m).rank, rref(&m.transpose()).rank);
    }

    #[test]
    fn packed_gf2_matches_generic(bits in prop::collection::vec(any::<u64>(), 64), rows in 1usize..=64, cols in 1usize..=64) {
        let f = ff_make(2, 1, None).unwrap();
        let m = Matrix::from_fn(&f, rows, cols, |i, j| ((bits[i] >> j) & 1) as u32);
        prop_assert_eq!(rref(&m), rref_generic(&m, cols));
    }

    #[test]
    fn solutions_form_a_coset_of_the_kernel(m in any_matrix(10), seed in prop::collection::vec(any::<u32>(), 20)) {
        let f = m.field().clone();
        let x0: Vector = (0..m.cols()).map(|i| seed[i % seed.len()] % f.order()).collect();
        let b = m.mul_vec(&x0);
        let x = solve(&m, &b).unwrap().expect("consistent by construction");
        prop_assert_eq!(m.mul_vec(&x), b.clone());
        let ker = kernel(&m);
        prop_assert_eq!(ker.dim(), m.cols() - rref(&m).rank);
        let diff: Vector = x0.iter().zip(&x).map(|(&a, &c)| f.sub(a, c)).collect();
        prop_assert!(ker.contains(&diff));
        for v in ker.vectors() {
            prop_assert!(m.mul_vec(&v).iter().all(|&c| c == 0));
            let y: Vector = x.iter().zip(&v).map(|(&a, &c)| f.add(a, f.mul(seed[0] % f.order(), c))).collect();
            prop_assert_eq!(m.mul_vec(&y), b.clone());
        }
    }

    #[test]
    fn inconsistent_system_has_no_solution(n in 1usize..6) {
        let f = ff_make(3, 1, None).unwrap();
        let z = Matrix::zeros(&f, n, n);
        let mut b = vec![0; n];
        b[0] = 1;
        prop_assert_eq!(solve(&z, &b).unwrap(), None);
    }

    #[test]
    fn modular_law(a in prop::collection::vec(any::<u16>(), 1..8), b in prop::collection::vec(any::<u16>(), 1..8)) {
        let f = ff_make(2, 1, None).unwrap();
        let vecs = |s: &[u16]| -> Vec<Vector> { s.iter().map(|&w| (0..10).map(|j| ((w >> j) & 1) as Fe).collect()).collect() };
        let u = Subspace::from_vectors(&f, 10, &vecs(&a));
        let v = Subspace::from_vectors(&f, 10, &vecs(&b));
        let s = u.sum(&v).unwrap();
        let i = u.intersect(&v).unwrap();
        prop_assert_eq!(s.dim() + i.dim(), u.dim() + v.dim());
        prop_assert!(i.is_subspace_of(&u) && i.is_subspace_of(&v));
        prop_assert_eq!(u.sum(&u).unwrap(), u.clone());
        prop_assert_eq!(u.intersect(&u).unwrap(), u.clone());
        prop_assert!(u.sum(&u.complement()).unwrap().is_full());
        prop_assert!(u.intersect(&u.complement()).unwrap().is_zero());
    }

    #[test]
    fn matrix_power_matches_repeated_product(bits in any::<u64>(), e in 1u64..9) {
        let f = ff_make(2, 1, None).unwrap();
        let a = Matrix::from_fn(&f, 6, 6, |i, j| ((bits >> (i * 6 + j)) & 1) as u32);
        let mut naive = Matrix::identity(&f, 6);
        for _ in 0..e {
            naive = naive.mul(&a);
        }
        prop_assert_eq!(a.pow(e).unwrap(), naive);
    }
}

#[test]
fn kernel_of_rank_five_map_is_exhaustively_right() {
    let f = ff_make(2, 1, None).unwrap();
    let rows: Vec<Vector> = (0..8)
        .map(|i| (0..8).map(|j| if i < 5 && (j == i || j == i + 3) { 1 } else { 0 }).collect())
        .collect();
    let a = Matrix::from_rows(&f, 8, &rows);
    assert_eq!(a.rank(), 5);
    let ker = kernel(&a);
    assert_eq!(ker.dim(), 3);
    for w in 0u32..256 {
        let v: Vector = (0..8).map(|j| (w >> j) & 1).collect();
        assert_eq!(a.mul_vec(&v).iter().all(|&c| c == 0), ker.contains(&v));
    }
}

#[test]
fn power_of_nonsquare_fails() {
    let f = ff_make(2, 1, None).unwrap();
    assert!(Matrix::zeros(&f, 2, 3).pow(2).is_err());
}
