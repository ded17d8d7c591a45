use std::path::PathBuf;

use lieforge::catalog::{self, matrix};
use lieforge::ffield::{ff_make, Fe};
use lieforge::format::AlgebraFile;
use lieforge::linalg::{Matrix, Subspace, Vector};
use lieforge::prolong;
use lieforge::restrict::{self, StructureWitness};
use lieforge::superalg::{
    bracket_span, center, derived, derived_series, is_simple, is_ideal, quotient, spin_ideal, IdealMode,
    SimplicityOptions, SuperAlgebra,
};
use lieforge::superize::{self, Origin};
use proptest::prelude::*;

fn build(r: &str) -> SuperAlgebra {
    catalog::build(r).unwrap_or_else(|e| panic!("{r}: {e}")).algebra
}

fn fixture(name: &str) -> AlgebraFile {
    let path = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("data").join(name);
    AlgebraFile::parse(&std::fs::read_to_string(path).unwrap()).unwrap()
}

fn combo(g: &SuperAlgebra, coeffs: &[u32]) -> Vector {
    let f = g.field();
    (0..g.dim()).map(|i| coeffs[i % coeffs.len()] % f.order()).collect()
}

fn span(g: &SuperAlgebra, vecs: &[Vector]) -> Subspace {
    Subspace::from_vectors(g.field(), g.dim(), vecs)
}

// ---------------------------------------------------------------- superalg

const SAMPLE: &[&str] = &["psl:n=3", "gl:n=3,p=3", "q:n=2", "vect:n=1,N=2", "k:n=1,odd=1", "oo1_IPi:n=1,m=2", "sl:n=2,p=3"];

#[test]
fn derived_series_descends_and_stabilizes() {
    let mut algebras: Vec<SuperAlgebra> = SAMPLE.iter().map(|r| build(r)).collect();
    algebras.push(fixture("wk1_3_a_c.alg").algebra);
    for g in &algebras {
        let s = derived_series(g);
        assert!(s.len() <= g.dim() + 1);
        for w in s.windows(2) {
            assert!(w[1].is_subspace_of(&w[0]));
        }
        assert_eq!(derived(g, Some(s.len())), *s.last().unwrap());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn spin_ideal_is_an_ideal(which in 0..SAMPLE.len(), coeffs in prop::collection::vec(any::<u32>(), 1..12)) {
        let g = build(SAMPLE[which]);
        let seed = span(&g, &[combo(&g, &coeffs)]);
        let i = spin_ideal(&g, &seed, IdealMode::WithSquares);
        prop_assert!(seed.is_subspace_of(&i));
        for v in i.vectors() {
            for b in 0..g.dim() {
                prop_assert!(i.contains(&g.bracket(&g.unit(b), &v)));
            }
            let (ev, od) = g.split_parity(&v);
            prop_assert!(i.contains(&ev) && i.contains(&od));
            if g.p() == 2 {
                prop_assert!(i.contains(&g.square(&od).unwrap()));
            }
        }
        prop_assert!(is_ideal(&g, &i, IdealMode::WithSquares));
    }

    #[test]
    fn simple_algebras_are_spun_by_any_nonzero_vector(which in 0..3usize, coeffs in prop::collection::vec(any::<u32>(), 1..12)) {
        let g = build(["psl:n=3", "sl:n=2,p=3", "psl:n=4"][which]);
        let v = combo(&g, &coeffs);
        prop_assume!(v.iter().any(|&c| c != 0));
        prop_assert!(spin_ideal(&g, &span(&g, &[v]), IdealMode::WithSquares).is_full());
    }
}

#[test]
fn simple_algebras_are_spun_by_every_basis_vector() {
    for r in ["psl:n=3", "sl:n=2,p=3", "psl:n=4", "psl:n=3,p=3"] {
        let g = build(r);
        assert!(is_simple(&g, &SimplicityOptions::default()).simple, "{r}");
        for i in 0..g.dim() {
            assert!(spin_ideal(&g, &span(&g, &[g.unit(i)]), IdealMode::WithSquares).is_full(), "{r} b{i}");
        }
    }
}

#[test]
fn perfect_modulo_center_is_centerless() {
    for r in ["sl:n=4", "sl:n=3,p=3", "sl:n=6"] {
        let g = build(r);
        assert!(derived(&g, Some(1)).is_full(), "{r} should be perfect");
        let c = center(&g);
        assert!(!c.is_zero());
        let q = quotient(&g, &c, IdealMode::WithSquares).unwrap();
        assert!(center(&q.algebra).is_zero(), "{r}");
    }
}

// ---------------------------------------------------------------- restrict

fn assert_witness(g: &SuperAlgebra, w: &StructureWitness, what: &str) {
    let bad = restrict::verify_witness(g, w).unwrap();
    assert!(bad.is_empty(), "{what}: {} violations", bad.len());
}

#[test]
fn shipped_witnesses_verify() {
    for name in ["wk3_a.alg", "wk4_a.alg", "br2_eps.alg", "br2_inv_eps.alg", "L_eps_0_0.alg"] {
        let file = fixture(name);
        assert_witness(&file.algebra, file.witness.as_ref().unwrap(), name);
    }
}

#[test]
fn solver_witnesses_verify_and_are_unique() {
    for r in ["psl:n=3", "psl:n=4", "sl:n=2,p=3", "vect:n=2,N=1:1", "vect:n=1,N=1,p=3", "h_Pi:n=2,N=1:1,p=3"] {
        let g = build(r);
        let s = restrict::find_p_structure(&g).unwrap();
        let w = s.witness.as_ref().unwrap_or_else(|| panic!("{r}: no p-structure"));
        assert_witness(&g, w, r);
        assert!(center(&g).is_zero());
        assert_eq!(s.freedom, 0, "{r}");
        assert_eq!(restrict::find_p_structure(&g).unwrap(), s, "{r}: not deterministic");
    }
}

#[test]
fn solver_is_deterministic_on_files() {
    for name in ["wk3_a.alg", "wk4_a.alg", "br2_eps.alg"] {
        let a = fixture(name).algebra;
        let b = fixture(name).algebra;
        let wa = restrict::find_p_structure(&a).unwrap();
        assert_eq!(wa, restrict::find_p_structure(&b).unwrap(), "{name}");
    }
}

fn flat_span(f: &lieforge::ffield::Field, n: usize, mats: &[Vector]) -> Subspace {
    Subspace::from_vectors(f, n * n, mats)
}

#[test]
fn closures_are_idempotent_and_nested() {
    let mut inputs = vec![("wk1_3_a_c", fixture("wk1_3_a_c.alg").algebra)];
    inputs.push(("vect1", build("derived[i=1]:vect:n=1,N=2")));
    for (label, g) in inputs {
        let f = g.field().clone();
        let n = g.dim();
        let full = restrict::restricted_closure(&g).unwrap();
        let big = flat_span(&f, n, &full.matrices);
        for m in &full.matrices {
            let pw = Matrix::unflatten(&f, n, m).pow(g.p() as u64).unwrap().flatten();
            assert!(big.contains(&pw), "{label}: closure not closed under p-th powers");
        }
        if center(&full.algebra).is_zero() {
            let again = restrict::restricted_closure(&full.algebra).unwrap();
            assert_eq!(again.algebra.dim(), full.algebra.dim(), "{label}");
        }
        let one = restrict::one_step_closure(&g).unwrap();
        let small = flat_span(&f, n, &one.matrices);
        assert!(small.is_subspace_of(&big), "{label}: one-step closure escapes");
        let squares_closed = one
            .matrices
            .iter()
            .all(|m| small.contains(&Matrix::unflatten(&f, n, m).pow(2).unwrap().flatten()));
        if squares_closed {
            assert_eq!(small, big, "{label}");
        }
    }
}

/// Toral basis vectors (diagonal `ad`) are fixed by `[p]`; every other
/// basis vector of these weight bases maps to zero.
#[test]
fn vectorial_witness_on_weight_bases() {
    for r in ["vect:n=2,N=1:1", "vect:n=1,N=1,p=3", "vect:n=2,N=1:1,p=3", "h_Pi:n=2,N=1:1,p=3", "h_Pi:n=4,N=1:1:1:1"] {
        let g = build(r);
        let w = restrict::find_p_structure(&g).unwrap().witness.unwrap();
        for i in 0..g.dim() {
            let ad = g.ad(i);
            let diagonal = (0..g.dim()).all(|a| (0..g.dim()).all(|b| a == b || ad.get(a, b) == 0));
            let want = if diagonal { g.unit(i) } else { g.zero_vector() };
            assert_eq!(w.value_p(i).unwrap(), &want, "{r}: {}", g.names()[i]);
        }
    }
}

#[test]
fn deforms_of_restricted_vectorial_algebras_stay_restricted() {
    for r in ["vect:n=1,N=1", "vect:n=2,N=1:1", "vect:n=2,N=1:1,p=3", "svect:n=3,N=1:1:1", "k:n=1,N=1", "h_I:n=1,N=1"] {
        assert!(restrict::find_p_structure(&build(r)).unwrap().witness.is_some(), "{r}");
        let d = build(&format!("deform:{r}"));
        let s = restrict::find_p_structure(&d).unwrap();
        assert_witness(&d, s.witness.as_ref().unwrap_or_else(|| panic!("deform of {r} lost its p-structure")), r);
    }
}

/// With the vect bracket, (1 - x1 x2) h_Pi(2;(1,1)) has [A,B] = E,
/// [E,A] = A, [E,B] = B, and ad_A^2 (B -> A) is not inner.
#[test]
fn deform_of_h_pi_2_is_not_restricted() {
    let g = build("h_Pi:n=2,N=1:1");
    assert!(restrict::find_p_structure(&g).unwrap().witness.is_some());
    let d = build("deform:h_Pi:n=2,N=1:1");
    assert_eq!(d.dim(), 3);
    assert!(derived(&d, Some(1)).is_full());
    assert!(restrict::find_p_structure(&d).unwrap().witness.is_none());
}

/// h_I(3;N_s) carries no 2-structure, and its (1 - xbar) carrier is not
/// closed under the bracket.
#[test]
fn h_i_3_has_no_2_structure() {
    assert!(restrict::find_p_structure(&build("h_I:n=3,N=1:1:1")).unwrap().witness.is_none());
    assert!(catalog::build("deform:h_I:n=3,N=1:1:1").is_err());
}

/// h_I(2k+1; N_s) in coordinates x, p_1..p_k, q_1..q_k where the form is
/// x^2 + sum p_i q_i; over GF(2) this is equivalent to the identity form.
/// Weights x = 1, p = 0, q = 2 give a Z-grading with x odd, p and q even.
fn h_pqx(k: usize) -> (SuperAlgebra, lieforge::superalg::Split) {
    use lieforge::catalog::divided::DividedPowers;
    use lieforge::catalog::vectorial::{hamiltonian_field, FieldSpace};
    let f = ff_make(2, 1, None).unwrap();
    let m = 2 * k + 1;
    let b = Matrix::from_fn(&f, m, m, |i, j| {
        u32::from((i == 0 && j == 0) || (i >= 1 && j >= 1 && (i + k == j || j + k == i)))
    });
    let space = FieldSpace::new(DividedPowers::new(&f, &vec![1; m], 0).unwrap(), None).unwrap();
    let one = space.dp.one();
    let fields: Vec<Vector> = (0..space.dp.dim())
        .filter(|&i| i != one)
        .map(|i| hamiltonian_field(&space, &b, &space.dp.unit(i)))
        .collect();
    let names = fields.iter().map(|v| space.field_name(v)).collect();
    let g = space.algebra(&fields, names).unwrap();
    let mut w = vec![0; m];
    w[0] = 1;
    for x in w.iter_mut().skip(k + 1) {
        *x = 2;
    }
    let minus = fields.iter().map(|v| space.degree_with(v, &w).unwrap().rem_euclid(2) == 1).collect();
    (g, lieforge::superalg::Split::new(minus))
}

#[test]
fn hamiltonian_identity_form_has_a_24_structure() {
    for k in [1, 2] {
        let (g, split) = h_pqx(k);
        assert!(g.check_axioms().passed());
        assert_eq!(g.dim(), (1 << (2 * k + 1)) - 1);
        let s = restrict::find_24_structure(&g, &split).unwrap();
        assert_eq!(s.outcome, restrict::TwoFourOutcome::TwoFour, "k={k}");
        assert_witness(&g, s.witness.as_ref().unwrap(), "h_I (2,4)");
    }
}

// ---------------------------------------------------------------- superize

#[test]
fn queerification_round_trip() {
    let opts = SimplicityOptions::default();
    for r in ["psl:n=3", "psl:n=4"] {
        let g = build(r);
        let w = restrict::find_p_structure(&g).unwrap().witness.unwrap();
        let q = superize::queerify_restricted(&g, &w).unwrap().algebra;
        assert!(restrict::find_p2p_structure(&q).unwrap().witness.is_some(), "{r}: q(g) has no 2|4-structure");
        let c = superize::classify_origin(&q, &opts).unwrap();
        assert_eq!(c.verdict, Origin::PartialQueerification, "{r}");
        assert_eq!(c.h_dims, (g.dim(), g.dim()), "{r}");
    }
}

#[test]
fn method2_round_trip() {
    let opts = SimplicityOptions::default();
    for r in ["psl:n=4,w=0:0:1:1", "derived[i=1]:vect:n=1,N=2"] {
        let g = build(r);
        let split = g.grade_mod2().unwrap();
        let m = superize::method2(&g, &split, &opts).unwrap();
        assert!(m.simplicity.simple, "{r}: S(g,gr) not simple");
        let c = superize::classify_origin(&m.algebra, &opts).unwrap();
        assert_eq!(c.verdict, Origin::Method2, "{r}");
        assert_eq!(c.h_dims.0 + c.h_dims.1, g.dim(), "{r}");
    }
}

#[test]
fn partial_queerifications_are_simple() {
    let opts = SimplicityOptions::default();
    for r in ["psl:n=3", "derived:o_I:n=5"] {
        let t = superize::partial_queerify(&build(r), &opts).unwrap();
        assert!(t.simplicity.as_ref().is_some_and(|v| v.simple), "{r}");
        assert!(is_simple(&t.algebra, &opts).simple, "{r}");
    }
}

/// `([g_od, g_od] + span{x^2}) + g_od` is an ideal.
#[test]
fn odd_part_generates_an_ideal() {
    let opts = SimplicityOptions::default();
    let mut inputs: Vec<SuperAlgebra> =
        ["q:n=2", "q:n=3,p=3", "k:n=1,odd=1", "oo1_IPi:n=1,m=2", "sq:n=3", "q:psl:n=3"].iter().map(|r| build(r)).collect();
    let g = build("psl:n=4,w=0:0:1:1");
    inputs.push(superize::method2(&g, &g.grade_mod2().unwrap(), &opts).unwrap().algebra);
    for g in inputs {
        let odd = span(&g, &g.odd_indices().into_iter().map(|i| g.unit(i)).collect::<Vec<_>>());
        let mut vecs = bracket_span(&g, &odd, &odd).vectors();
        if g.p() == 2 {
            vecs.extend(g.odd_indices().into_iter().map(|i| g.square(&g.unit(i)).unwrap()));
        }
        vecs.extend(odd.vectors());
        let i = span(&g, &vecs);
        assert_eq!(spin_ideal(&g, &i, IdealMode::WithSquares), i);
    }
}

#[test]
fn even_trace_vanishes_on_sq1_only() {
    let f = ff_make(2, 1, None).unwrap();
    let etr_on_derived = |queertraceless| {
        let (g, etr) = matrix::even_trace(&f, 3, queertraceless).unwrap();
        derived(&g, Some(1))
            .vectors()
            .iter()
            .any(|v| v.iter().zip(&etr).fold(0, |acc, (&a, &b)| f.add(acc, f.mul(a, b))) != 0)
    };
    assert!(etr_on_derived(false), "etr should not vanish on q^(1)(3)");
    assert!(!etr_on_derived(true), "etr should vanish on sq^(1)(3)");
}

// ---------------------------------------------------------------- catalog

fn is_in_o_b(x: &Matrix, b: &Matrix) -> bool {
    x.mul(b).add(&b.mul(&x.transpose())).is_zero()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(50))]

    #[test]
    fn orthogonal_algebras_are_closed_under_squaring(n in 2usize..=6, pi in any::<bool>(), bits in any::<u64>()) {
        let f = ff_make(2, 1, None).unwrap();
        let (family, form) = if pi && n % 2 == 0 {
            ("o_Pi", matrix::pi_form(&f, n / 2))
        } else {
            ("o_I", Matrix::identity(&f, n))
        };
        let basis = matrix::linear_basis(&f, family, n).unwrap();
        let mut x = Matrix::zeros(&f, n, n);
        for (k, v) in basis.iter().enumerate() {
            let m = Matrix::unflatten(&f, n, v);
            prop_assert!(is_in_o_b(&m, &form));
            prop_assert!(is_in_o_b(&m.mul(&m), &form));
            if (bits >> (k % 64)) & 1 == 1 {
                x = x.add(&m);
            }
        }
        prop_assert!(is_in_o_b(&x.mul(&x), &form));
    }
}

#[test]
fn derived_o_i_is_zd() {
    let f = ff_make(2, 1, None).unwrap();
    for n in 3..=5 {
        let o = matrix::linear_basis(&f, "o_I", n).unwrap();
        let mats: Vec<Matrix> = o.iter().map(|v| Matrix::unflatten(&f, n, v)).collect();
        let brackets: Vec<Vector> = mats
            .iter()
            .flat_map(|a| mats.iter().map(move |b| a.commutator(b).flatten()))
            .collect();
        let zd = Subspace::from_vectors(&f, n * n, &matrix::linear_basis(&f, "ZD", n).unwrap());
        assert_eq!(Subspace::from_vectors(&f, n * n, &brackets), zd, "n={n}");
    }
}

fn same_table(a: &SuperAlgebra, b: &SuperAlgebra) -> bool {
    a.dim() == b.dim()
        && a.parity() == b.parity()
        && (0..a.dim()).all(|i| (0..a.dim()).all(|j| a.bracket_basis(i, j) == b.bracket_basis(i, j)))
        && (!a.has_squares() || a.odd_indices().into_iter().all(|i| a.square_basis(i) == b.square_basis(i)))
}

fn invariants(g: &SuperAlgebra) -> Vec<(usize, usize)> {
    let mut out = vec![(g.dim_even(), g.dim_odd()), (center(g).dim(), 0)];
    for s in derived_series(g) {
        let sub = g.subalgebra(&s, "").unwrap();
        out.push((sub.dim_even(), sub.dim_odd()));
    }
    out
}

#[test]
fn queer_identities() {
    for n in [3, 4] {
        let q = build(&format!("q:n={n}"));
        let qgl = build(&format!("q:gl:n={n}"));
        assert!(same_table(&q, &qgl) || invariants(&q) == invariants(&qgl), "q({n})");
        assert_eq!(invariants(&build(&format!("s_e_sq:n={n}"))), invariants(&build(&format!("q:sl:n={n}"))), "s_e sq({n})");
    }
    assert_eq!(invariants(&build("s_e_sq:n=3")), invariants(&build("psq:n=3")));
    assert_eq!(invariants(&build("ps_e_psq:n=4")), invariants(&build("q:psl:n=4")));
}

/// Necessary conditions for br(2;eps) = br(2;1/eps): equal graded
/// dimensions, and equal multisets of ad-eigenvalue profiles of the toral
/// elements of the Cartan subalgebra.
#[test]
fn brown_algebras_share_invariants() {
    let profile = |name: &str| {
        let file = fixture(name);
        let g = file.algebra;
        let w = file.witness.unwrap();
        let f = g.field().clone();
        let h: Vec<usize> = (0..g.dim()).filter(|&i| g.degrees().unwrap()[i] == 0).collect();
        let mut dims = std::collections::BTreeMap::new();
        for &d in g.degrees().unwrap() {
            *dims.entry(d).or_insert(0) += 1;
        }
        let mut out = Vec::new();
        for c1 in f.elements() {
            for c2 in f.elements() {
                let mut t = g.zero_vector();
                t[h[0]] = c1;
                t[h[1]] = c2;
                let mut tp = g.zero_vector();
                for (k, &c) in [c1, c2].iter().enumerate() {
                    let v = w.value_p(h[k]).unwrap();
                    for (a, &x) in v.iter().enumerate() {
                        tp[a] = f.add(tp[a], f.mul(f.pow(c, g.p() as u64), x));
                    }
                }
                if tp == t && t.iter().any(|&x| x != 0) {
                    let ad = g.ad_of(&t);
                    let mut eig: Vec<Fe> = (0..g.dim()).map(|i| ad.get(i, i)).collect();
                    eig.sort_unstable();
                    out.push(eig);
                }
            }
        }
        out.sort();
        (dims, out)
    };
    let (a, b) = (profile("br2_eps.alg"), profile("br2_inv_eps.alg"));
    assert_eq!(a.0, b.0);
    assert_eq!(a.1.len(), 8);
    assert_eq!(a.1, b.1);
}

// ---------------------------------------------------------------- prolong

fn check_prolong(r: &prolong::ProlongResult, what: &str) {
    assert!(prolong::transitivity_defects(r).is_empty(), "{what}: not transitive");
    let space = &r.ambient;
    let comp = |d: i64| Subspace::from_vectors(space.field(), space.dim(), r.components.get(&d).map_or(&[][..], |v| v));
    let minus = r.components[&-1].clone();
    for (&d, _) in r.components.range(1..) {
        let here = comp(d);
        let below = comp(d - 1);
        for i in 0..space.dim() {
            let u = lieforge::linalg::unit(space.dim(), i);
            if space.degree_of(&u) != Some(d) || here.contains(&u) {
                continue;
            }
            let inside = minus.iter().all(|m| below.contains(&space.bracket(&u, m)));
            assert!(!inside, "{what}: {} belongs to degree {d}", space.field_name(&u));
        }
    }
}

#[test]
fn prolongs_are_transitive_and_maximal() {
    let f2 = ff_make(2, 1, None).unwrap();
    let f3 = ff_make(3, 1, None).unwrap();
    let sl2 = |f: &lieforge::ffield::Field| -> Vec<Matrix> {
        matrix::linear_basis(f, "sl", 2).unwrap().iter().map(|v| Matrix::unflatten(f, 2, v)).collect()
    };
    for (f, shear) in [(&f2, vec![2, 2]), (&f3, vec![1, 1]), (&f2, vec![1, 3])] {
        let e = prolong::linear_embedding(f, &shear, &sl2(f)).unwrap();
        let r = prolong::cartan_prolong(&e).unwrap();
        check_prolong(&r, &format!("sl2 p={} N={shear:?}", f.p()));
        assert!(r.algebra.check_axioms().passed());
    }
    let e = prolong::embed_phi(&f2, 2).unwrap();
    check_prolong(&prolong::cartan_prolong(&e.nonpositive(false).unwrap()).unwrap(), "phi n=2");
}

#[test]
fn degree_two_vanishes_for_phi_with_j() {
    let f3 = ff_make(3, 1, None).unwrap();
    let e = prolong::embed_phi(&f3, 2).unwrap();
    let r = prolong::cartan_prolong(&e.nonpositive(true).unwrap()).unwrap();
    assert!(r.components.get(&2).is_none_or(|v| v.is_empty()));
}

#[test]
fn vectorial_algebras_are_determined_by_their_nonpositive_part() {
    for r in ["vect:n=1,N=2", "vect:n=2,N=1:1", "vect:n=1,N=2,p=3"] {
        let v = catalog::build(r).unwrap().vectorial.unwrap();
        let e = prolong::nonpositive_part(&v.space, &v.fields).unwrap();
        let p = prolong::cartan_prolong(&e).unwrap();
        let sp = |vecs: &[Vector]| Subspace::from_vectors(v.space.field(), v.space.dim(), vecs);
        assert_eq!(sp(&p.fields), sp(&v.fields), "{r}");
    }
}
