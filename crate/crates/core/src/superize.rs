//! Queerification, partial queerification, method 2, and recovery of the
//! originating Lie algebra from a simple Lie superalgebra (`p = 2`).

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::ffield::{Fe, Field};
use crate::linalg::{axpy, is_zero, kernel, Coordinatizer, Matrix, Subspace, Vector};
use crate::restrict::{
    find_p_structure, minimal_graded_closure, one_step_closure, verify_witness, StructureWitness, Variant,
};
use crate::superalg::{is_simple, Parity, SimplicityOptions, SimplicityVerdict, Split, SuperAlgebra};

/// An associative algebra given by structure constants.
#[derive(Debug, Clone)]
pub struct AssocAlgebra {
    pub field: Field,
    pub names: Vec<String>,
    /// `table[i][j] = b_i b_j`.
    pub table: Vec<Vec<Vector>>,
}

impl AssocAlgebra {
    /// The full matrix algebra `Mat(n)` with basis `E_ij`.
    pub fn matrix(field: &Field, n: usize) -> AssocAlgebra {
        let idx = |i: usize, j: usize| i * n + j;
        let names = (0..n * n).map(|k| format!("E{}{}", k / n + 1, k % n + 1)).collect();
        let table = (0..n * n)
            .map(|a| {
                (0..n * n)
                    .map(|b| {
                        let mut v = vec![0; n * n];
                        let (i, j) = (a / n, a % n);
                        let (k, l) = (b / n, b % n);
                        if j == k {
                            v[idx(i, l)] = 1;
                        }
                        v
                    })
                    .collect()
            })
            .collect();
        AssocAlgebra {
            field: field.clone(),
            names,
            table,
        }
    }

    pub fn dim(&self) -> usize {
        self.names.len()
    }

    pub fn mul(&self, x: &[Fe], y: &[Fe]) -> Vector {
        let f = &*self.field;
        let mut out = vec![0; self.dim()];
        for (i, &a) in x.iter().enumerate().filter(|(_, &a)| a != 0) {
            for (j, &b) in y.iter().enumerate().filter(|(_, &b)| b != 0) {
                axpy(f, &mut out, f.mul(a, b), &self.table[i][j]);
            }
        }
        out
    }
}

/// `g (+) Pi(g)` with the parity mirror recorded.
#[derive(Debug, Clone)]
pub struct QueerPair {
    pub algebra: SuperAlgebra,
    /// `mirror[i]` is the index of `Pi(b_i)`.
    pub mirror: Vec<usize>,
    /// Dimension of the even part built from the base algebra.
    pub even_dim: usize,
    pub simplicity: Option<SimplicityVerdict>,
}

fn pi_name(s: &str) -> String {
    format!("Pi({s})")
}

/// `q(A)` on `A_L (+) Pi(A)`: `[x, y] = xy - yx`, `[x, Pi y] = Pi(xy - yx)`,
/// `[Pi x, Pi y] = xy + yx`, and `(Pi x)^2 = x^2` when `p = 2`.
pub fn queerify_assoc(a: &AssocAlgebra) -> Result<QueerPair> {
    let f = &*a.field;
    let m = a.dim();
    let lift = |v: &Vector, odd: bool| -> Vector {
        let mut w = vec![0; 2 * m];
        let off = if odd { m } else { 0 };
        w[off..off + m].copy_from_slice(v);
        w
    };
    let mut names = a.names.clone();
    names.extend(a.names.iter().map(|s| pi_name(s)));
    let mut parity = vec![Parity::Even; m];
    parity.extend(vec![Parity::Odd; m]);
    let mut b = SuperAlgebra::builder(&a.field).basis(names, parity);
    let mut lie = SuperAlgebra::builder(&a.field).basis(a.names.clone(), vec![Parity::Even; m]);
    for i in 0..m {
        for j in 0..m {
            let (ei, ej) = (crate::linalg::unit(m, i), crate::linalg::unit(m, j));
            let xy = a.mul(&ei, &ej);
            let yx = a.mul(&ej, &ei);
            let comm: Vector = xy.iter().zip(&yx).map(|(&u, &v)| f.sub(u, v)).collect();
            let anti: Vector = xy.iter().zip(&yx).map(|(&u, &v)| f.add(u, v)).collect();
            if j >= i {
                lie.set_bracket(i, j, comm.clone());
                b.set_bracket(i, j, lift(&comm, false));
                if a.field.p() != 2 || i != j {
                    b.set_bracket(m + i, m + j, lift(&anti, false));
                }
            }
            b.set_bracket(i, m + j, lift(&comm, true));
        }
        if a.field.p() == 2 {
            let ei = crate::linalg::unit(m, i);
            b.set_square(m + i, lift(&a.mul(&ei, &ei), false));
        }
    }
    let lie = lie.build().map_err(|e| Error::NotLieAdmissible(e.to_string()))?;
    if !lie.check_axioms().passed() {
        return Err(Error::NotLieAdmissible("the commutator fails the Jacobi identity".into()));
    }
    let algebra = b.build()?;
    if !algebra.check_axioms().passed() {
        return Err(Error::NotLieAdmissible("the queerification fails the super Jacobi identity".into()));
    }
    Ok(QueerPair {
        algebra,
        mirror: (m..2 * m).collect(),
        even_dim: m,
        simplicity: None,
    })
}

fn require_p2(g: &SuperAlgebra) -> Result<()> {
    if g.p() != 2 {
        return Err(Error::WrongCharacteristic { expected: 2, found: g.p() });
    }
    Ok(())
}

/// `q(g) = g (+) Pi(g)` with `[x, Pi y] = Pi[x, y]`, `(Pi x)^2 = x^[2]`.
pub fn queerify_restricted(g: &SuperAlgebra, w: &StructureWitness) -> Result<QueerPair> {
    require_p2(g)?;
    if g.dim_odd() > 0 {
        return Err(Error::BadParams("q(g) takes a Lie algebra; desuperize first".into()));
    }
    if !matches!(w.variant, Variant::P | Variant::TwoTwo) {
        return Err(Error::VariantMismatch(format!("need a 2-structure, got {}", w.variant.label())));
    }
    let bad = verify_witness(g, w)?;
    if let Some(v) = bad.first() {
        return Err(Error::InvalidWitness(format!(
            "[{}^[2], {}] differs from ad^2",
            g.names()[v.x],
            g.names()[v.y]
        )));
    }
    let n = g.dim();
    let lift = |v: &[Fe], odd: bool| -> Vector {
        let mut out = vec![0; 2 * n];
        let off = if odd { n } else { 0 };
        out[off..off + n].copy_from_slice(v);
        out
    };
    let mut names = g.names().to_vec();
    names.extend(g.names().iter().map(|s| pi_name(s)));
    let mut parity = vec![Parity::Even; n];
    parity.extend(vec![Parity::Odd; n]);
    let mut degrees = g.degrees().map(|d| d.to_vec());
    if let Some(d) = degrees.as_mut() {
        d.extend_from_within(..);
    }
    let mut b = SuperAlgebra::builder(g.field()).basis(names, parity).degrees(degrees);
    for i in 0..n {
        for j in 0..n {
            let c = g.bracket(&g.unit(i), &g.unit(j));
            if is_zero(&c) {
                continue;
            }
            if j >= i {
                b.set_bracket(i, j, lift(&c, false));
                if j > i {
                    b.set_bracket(n + i, n + j, lift(&c, false));
                }
            }
            b.set_bracket(i, n + j, lift(&c, true));
        }
        let v = w
            .value_p(i)
            .ok_or_else(|| Error::InvalidWitness(format!("no value for {}", g.names()[i])))?;
        b.set_square(n + i, lift(v, false));
    }
    Ok(QueerPair {
        algebra: b.build()?,
        mirror: (n..2 * n).collect(),
        even_dim: n,
        simplicity: None,
    })
}

/// `q(g)` for a Lie algebra with a 2-structure found by the solver.
pub fn queerify(g: &SuperAlgebra) -> Result<QueerPair> {
    let s = find_p_structure(g)?;
    let w = s
        .witness
        .ok_or_else(|| Error::NotRestricted(format!("no 2-structure; {} basis equations fail", s.failed.len())))?;
    queerify_restricted(g, &w)
}

fn check_simple(g: &SuperAlgebra, opts: &SimplicityOptions) -> Result<SimplicityVerdict> {
    let v = is_simple(g, opts);
    if !v.simple {
        return Err(Error::NotSimpleInput);
    }
    Ok(v)
}

/// `tilde q(g) = g^<1> (+) Pi(g)` for simple `g`; the square of `Pi(x)` is
/// `(ad x)^2` inside `gl(g)`.
pub fn partial_queerify(g: &SuperAlgebra, opts: &SimplicityOptions) -> Result<QueerPair> {
    require_p2(g)?;
    check_simple(g, opts)?;
    let closure = one_step_closure(g)?;
    let f = g.field().clone();
    let n = g.dim();
    let n2 = n * n;
    let k = closure.matrices.len();
    let mut basis: Vec<Vector> = closure
        .matrices
        .iter()
        .map(|m| {
            let mut v = m.clone();
            v.extend(vec![0; n]);
            v
        })
        .collect();
    for i in 0..n {
        let mut v = vec![0; n2 + n];
        v[n2 + i] = 1;
        basis.push(v);
    }
    let mut names = closure.algebra.names().to_vec();
    names.extend(g.names().iter().map(|s| pi_name(s)));
    let mut parity = vec![Parity::Even; k];
    parity.extend(vec![Parity::Odd; n]);
    let mat = |v: &[Fe]| Matrix::unflatten(&f, n, &v[..n2]);
    let bracket = |x: &Vector, y: &Vector| -> Vector {
        let (a, u) = (mat(x), &x[n2..]);
        let (b, v) = (mat(y), &y[n2..]);
        let mut m = a.commutator(&b);
        if !is_zero(u) && !is_zero(v) {
            let (au, av) = (g.ad_of(u), g.ad_of(v));
            m = m.add(&au.mul(&av)).add(&av.mul(&au));
        }
        let mut out = m.flatten();
        let av = a.mul_vec(v);
        let bu = b.mul_vec(u);
        out.extend(av.iter().zip(&bu).map(|(&s, &t)| f.sub(s, t)));
        out
    };
    let square = |x: &Vector| -> Vector {
        let au = g.ad_of(&x[n2..]);
        let mut out = au.mul(&au).flatten();
        out.extend(vec![0; n]);
        out
    };
    let algebra = SuperAlgebra::from_realization(&f, names, parity, None, &basis, bracket, Some(square))?;
    let verdict = is_simple(&algebra, opts);
    if !verdict.simple {
        return Err(Error::TheoremCheckFailed("partial queerification of a simple algebra is not simple".into()));
    }
    Ok(QueerPair {
        algebra,
        mirror: (k..k + n).collect(),
        even_dim: k,
        simplicity: Some(verdict),
    })
}

/// `S(g, gr)` together with where `g` sits inside it.
#[derive(Debug, Clone)]
pub struct Method2 {
    pub algebra: SuperAlgebra,
    /// The first `base` basis vectors are the image of `g`.
    pub base: usize,
    pub split: Split,
    pub simplicity: SimplicityVerdict,
}

/// Superization of a simple Z/2-graded Lie algebra by declaring `g_-` odd
/// inside the minimal graded closure, with `x^2 := x^[2]`.
pub fn method2(g: &SuperAlgebra, split: &Split, opts: &SimplicityOptions) -> Result<Method2> {
    require_p2(g)?;
    split.validate(g)?;
    check_simple(g, opts)?;
    let c = minimal_graded_closure(g, split)?;
    let s = c.split.clone().unwrap_or_else(|| Split::trivial(c.algebra.dim()));
    let f = g.field().clone();
    let n = g.dim();
    // order: g first (as in the closure), then the rest
    let parity: Vec<Parity> = s.labels().iter().map(|&m| if m { Parity::Odd } else { Parity::Even }).collect();
    let mat = |v: &Vector| Matrix::unflatten(&f, n, v);
    let algebra = SuperAlgebra::from_realization(
        &f,
        c.algebra.names().to_vec(),
        parity,
        c.algebra.degrees().map(<[i64]>::to_vec),
        &c.matrices,
        |a, b| mat(a).commutator(&mat(b)).flatten(),
        Some(|a: &Vector| mat(a).mul(&mat(a)).flatten()),
    )
    .map_err(|e| match e {
        Error::BadDimensions(m) => Error::BadSplit(format!("squares leave (g, gr): {m}")),
        other => other,
    })?;
    let verdict = is_simple(&algebra, opts);
    if !verdict.simple {
        return Err(Error::TheoremCheckFailed("S(g, gr) is not simple".into()));
    }
    Ok(Method2 {
        algebra,
        base: c.base,
        split: s,
        simplicity: verdict,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Origin {
    PartialQueerification,
    Method2,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OriginCertificate {
    pub verdict: Origin,
    /// Basis of `h_ev = [g_od, g_od]` in coordinates of the input.
    pub h_even: Vec<Vector>,
    pub h_dims: (usize, usize),
    /// Rows `f(e_a)` in coordinates of the odd basis vectors, when found.
    pub bijection: Option<Vec<Vector>>,
    pub intertwiner_dim: usize,
    pub candidates_checked: u64,
    pub solutions_found: u64,
    /// True when the intertwiner space was sampled instead of enumerated.
    pub bounded_search: bool,
    pub rng_seed: u64,
}

pub const ORIGIN_SEARCH_LIMIT: u64 = 4096;

/// Decides whether a simple `g` comes from (partial) queerification or from
/// method 2 by solving for the bijection `f: h_ev -> h_od`.
pub fn classify_origin(g: &SuperAlgebra, opts: &SimplicityOptions) -> Result<OriginCertificate> {
    require_p2(g)?;
    check_simple(g, opts)?;
    let f = g.field().clone();
    let od = g.odd_indices();
    let m_od = od.len();
    let mut brackets = Vec::new();
    let mut squares = Vec::new();
    for (a, &i) in od.iter().enumerate() {
        squares.push(g.square_unchecked(&g.unit(i)));
        for &j in &od[a + 1..] {
            brackets.push(g.bracket(&g.unit(i), &g.unit(j)));
        }
    }
    let h_ev = Subspace::from_vectors(&f, g.dim(), &brackets);
    let mut all = brackets.clone();
    all.extend(squares);
    let ev_span = Subspace::from_vectors(&f, g.dim(), &all);
    if ev_span != Subspace::coordinate(&f, g.dim(), &g.even_indices()) {
        return Err(Error::DecompositionFails(format!(
            "[g_od, g_od] + S has dimension {} but g_ev has {}",
            ev_span.dim(),
            g.dim_even()
        )));
    }
    let e_basis = h_ev.vectors();
    let m = e_basis.len();
    let mut cert = OriginCertificate {
        verdict: Origin::Method2,
        h_even: e_basis.clone(),
        h_dims: (m, m_od),
        bijection: None,
        intertwiner_dim: 0,
        candidates_checked: 0,
        solutions_found: 0,
        bounded_search: false,
        rng_seed: opts.seed,
    };
    if m != m_od || m == 0 {
        return Ok(cert);
    }
    let coord = Coordinatizer::new(&f, g.dim(), &e_basis)?;
    let odd_coords = |v: &Vector| -> Vector { od.iter().map(|&i| v[i]).collect() };
    // ad(e_a) restricted to the odd part, in odd coordinates
    let act: Vec<Matrix> = e_basis
        .iter()
        .map(|e| {
            let cols: Vec<Vector> = od.iter().map(|&i| odd_coords(&g.bracket(e, &g.unit(i)))).collect();
            Matrix::from_cols(&f, m, &cols)
        })
        .collect();
    let t: Vec<Vec<Vector>> = e_basis
        .iter()
        .map(|ea| {
            e_basis
                .iter()
                .map(|eb| coord.coords(&g.bracket(ea, eb)).expect("[h_ev, h_ev] stays in h_ev"))
                .collect()
        })
        .collect();
    // unknown F[c][b] at index c * m + b; equation for (a, b, c')
    let fld = &*f;
    let mut rows = Vec::with_capacity(m * m * m);
    for a in 0..m {
        for b in 0..m {
            for cp in 0..m {
                let mut r = vec![0; m * m];
                for c in 0..m {
                    let v = act[a].get(cp, c);
                    if v != 0 {
                        r[c * m + b] = fld.add(r[c * m + b], v);
                    }
                }
                for d in 0..m {
                    let v = t[a][b][d];
                    if v != 0 {
                        r[cp * m + d] = fld.sub(r[cp * m + d], v);
                    }
                }
                if !is_zero(&r) {
                    rows.push(r);
                }
            }
        }
    }
    let sols = if rows.is_empty() {
        Subspace::full(&f, m * m)
    } else {
        kernel(&Matrix::from_rows(&f, m * m, &rows))
    };
    let ks = sols.vectors();
    cert.intertwiner_dim = ks.len();
    let q = f.order() as u64;
    let total = q.checked_pow(ks.len() as u32);
    let enumerate = total.is_some_and(|t| t <= ORIGIN_SEARCH_LIMIT);
    cert.bounded_search = !enumerate;
    let lift_odd = |c: &[Fe]| -> Vector {
        let mut v = vec![0; g.dim()];
        for (k, &i) in od.iter().enumerate() {
            v[i] = c[k];
        }
        v
    };
    let test = |coeffs: &[Fe]| -> Option<Vec<Vector>> {
        let mut fm = vec![0; m * m];
        for (k, &c) in ks.iter().zip(coeffs) {
            axpy(fld, &mut fm, c, k);
        }
        let fmat = Matrix::unflatten(&f, m, &fm);
        if fmat.rank() != m {
            return None;
        }
        let images: Vec<Vector> = (0..m).map(|b| lift_odd(&fmat.col(b))).collect();
        for a in 0..m {
            for b in 0..m {
                if g.bracket(&images[a], &images[b]) != g.bracket(&e_basis[a], &e_basis[b]) {
                    return None;
                }
            }
        }
        Some((0..m).map(|b| fmat.col(b)).collect())
    };
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    let count = if enumerate { total.unwrap() } else { ORIGIN_SEARCH_LIMIT };
    for idx in 0..count {
        let coeffs: Vec<Fe> = if enumerate {
            let mut x = idx;
            (0..ks.len())
                .map(|_| {
                    let c = (x % q) as Fe;
                    x /= q;
                    c
                })
                .collect()
        } else {
            (0..ks.len()).map(|_| rng.gen_range(0..q as Fe)).collect()
        };
        cert.candidates_checked += 1;
        if let Some(fm) = test(&coeffs) {
            cert.solutions_found += 1;
            if cert.bijection.is_none() {
                cert.bijection = Some(fm);
                cert.verdict = Origin::PartialQueerification;
            }
        }
    }
    Ok(cert)
}

/// `q(F(G))` built twice: once from the 2-structure that the p|2p witness
/// of `G` induces on `F(G)`, once from a 2-structure solved on `F(G)`
/// directly. Returns both; they agree when `F(G)` is centerless.
pub fn queerify_superalgebra(g: &SuperAlgebra) -> Result<(QueerPair, QueerPair)> {
    require_p2(g)?;
    let s = crate::restrict::find_p2p_structure(g)?;
    let w = s
        .witness
        .ok_or_else(|| Error::NotRestricted("the superalgebra has no p|2p-structure".into()))?;
    let tt = crate::restrict::derive_22_structure(g, Some(&w))?;
    let fg = g.desuperize();
    let induced = queerify_restricted(&fg, &tt.as_witness())?;
    let solved = queerify(&fg)?;
    Ok((induced, solved))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::matrix::{o_i, psl, zd};
    use crate::ffield::prime_field;

    fn f2() -> Field {
        prime_field(2).unwrap()
    }

    #[test]
    fn queer_matrix_algebras() {
        let f3 = prime_field(3).unwrap();
        let q2 = queerify_assoc(&AssocAlgebra::matrix(&f3, 2)).unwrap().algebra;
        assert_eq!((q2.dim_even(), q2.dim_odd()), (4, 4));
        assert!(q2.check_axioms().passed());
        let g = queerify_assoc(&AssocAlgebra::matrix(&f2(), 2)).unwrap().algebra;
        let (b12, b21) = (g.index_of("Pi(E12)").unwrap(), g.index_of("Pi(E21)").unwrap());
        let mut one = g.zero_vector();
        one[g.index_of("E11").unwrap()] = 1;
        one[g.index_of("E22").unwrap()] = 1;
        assert_eq!(g.bracket(&g.unit(b12), &g.unit(b21)), one);
        assert!(g.check_axioms().passed());
        let k = queerify_assoc(&AssocAlgebra::matrix(&f2(), 1)).unwrap().algebra;
        assert_eq!(k.square(&k.unit(1)).unwrap(), k.unit(0));
    }

    #[test]
    fn q_of_psl3_round_trip() {
        let g = psl(&f2(), 3, None).unwrap();
        let q = queerify(&g).unwrap().algebra;
        assert_eq!((q.dim_even(), q.dim_odd()), (8, 8));
        assert!(q.check_axioms().passed());
        let opts = SimplicityOptions::default();
        assert!(is_simple(&q, &opts).simple);
        let c = classify_origin(&q, &opts).unwrap();
        assert_eq!(c.verdict, Origin::PartialQueerification);
        assert_eq!(c.h_dims, (8, 8));
        assert!(!c.bounded_search);
    }

    #[test]
    fn partial_queerification_of_zd5() {
        let g = zd(&f2(), 5).unwrap();
        let t = partial_queerify(&g, &SimplicityOptions::default()).unwrap().algebra;
        assert_eq!((t.dim_even(), t.dim_odd()), (14, 10));
        assert!(t.check_axioms().passed());
        let c = classify_origin(&t, &SimplicityOptions::default()).unwrap();
        assert_eq!(c.verdict, Origin::PartialQueerification);
        let _ = o_i(&f2(), 5).unwrap();
    }

    #[test]
    fn method2_on_psl4_blocks() {
        let g = psl(&f2(), 4, Some(vec![0, 0, 1, 1])).unwrap();
        let split = g.grade_mod2().unwrap();
        let s = method2(&g, &split, &SimplicityOptions::default()).unwrap();
        assert!(s.algebra.check_axioms().passed());
        let c = classify_origin(&s.algebra, &SimplicityOptions::default()).unwrap();
        assert_eq!(c.verdict, Origin::Method2);
        assert_eq!((s.algebra.dim_even(), s.algebra.dim_odd()), (6, 8));
        assert_eq!(c.h_dims, (6, 8));
    }
}
