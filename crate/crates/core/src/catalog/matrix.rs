//! Matrix (super)algebras realized inside `gl(n|m)`.
//!
//! A supermatrix of size `N = n + m` is stored flattened row-major; entry
//! `(i, j)` has parity `par(i) + par(j)`. Brackets are supercommutators and,
//! for `p = 2`, odd elements square to their matrix square.

use crate::error::{Error, Result};
use crate::ffield::{Fe, Field};
use crate::linalg::{kernel, Matrix, Subspace, Vector};
use crate::superalg::{derived, Parity, SuperAlgebra};

/// The ambient `gl(n|m)` with an optional integer weight per coordinate;
/// `E_ij` then has degree `w_i - w_j`.
#[derive(Clone)]
pub struct SuperMatrixSpace {
    pub field: Field,
    pub coord_parity: Vec<Parity>,
    pub weights: Option<Vec<i64>>,
}

impl SuperMatrixSpace {
    pub fn new(field: &Field, even: usize, odd: usize) -> SuperMatrixSpace {
        let mut coord_parity = vec![Parity::Even; even];
        coord_parity.extend(vec![Parity::Odd; odd]);
        SuperMatrixSpace {
            field: field.clone(),
            coord_parity,
            weights: None,
        }
    }

    pub fn with_weights(mut self, w: Option<Vec<i64>>) -> Self {
        self.weights = w;
        self
    }

    pub fn size(&self) -> usize {
        self.coord_parity.len()
    }

    pub fn entry_parity(&self, i: usize, j: usize) -> Parity {
        self.coord_parity[i].add(self.coord_parity[j])
    }

    fn as_matrix(&self, v: &[Fe]) -> Matrix {
        Matrix::unflatten(&self.field, self.size(), v)
    }

    pub fn parity_of(&self, v: &[Fe]) -> Option<Parity> {
        let n = self.size();
        let mut found = None;
        for (idx, &c) in v.iter().enumerate() {
            if c != 0 {
                let par = self.entry_parity(idx / n, idx % n);
                match found {
                    None => found = Some(par),
                    Some(q) if q != par => return None,
                    _ => {}
                }
            }
        }
        found
    }

    pub fn degree_of(&self, v: &[Fe]) -> Option<i64> {
        let w = self.weights.as_ref()?;
        let n = self.size();
        let mut found = None;
        for (idx, &c) in v.iter().enumerate() {
            if c != 0 {
                let d = w[idx / n] - w[idx % n];
                match found {
                    None => found = Some(d),
                    Some(e) if e != d => return None,
                    _ => {}
                }
            }
        }
        found
    }

    /// Supercommutator of homogeneous supermatrices (bilinear extension).
    pub fn bracket(&self, x: &[Fe], y: &[Fe]) -> Vector {
        let f = &*self.field;
        let (x_ev, x_od) = self.split(x);
        let (y_ev, y_od) = self.split(y);
        let mut out = vec![0; x.len()];
        for (a, pa) in [(&x_ev, Parity::Even), (&x_od, Parity::Odd)] {
            for (b, pb) in [(&y_ev, Parity::Even), (&y_od, Parity::Odd)] {
                if crate::linalg::is_zero(a) || crate::linalg::is_zero(b) {
                    continue;
                }
                let ma = self.as_matrix(a);
                let mb = self.as_matrix(b);
                let ab = ma.mul(&mb);
                let ba = mb.mul(&ma);
                let r = if pa.is_odd() && pb.is_odd() { ab.add(&ba) } else { ab.sub(&ba) };
                crate::linalg::axpy(f, &mut out, 1, r.data());
            }
        }
        out
    }

    fn split(&self, v: &[Fe]) -> (Vector, Vector) {
        let n = self.size();
        let mut ev = v.to_vec();
        let mut od = v.to_vec();
        for idx in 0..v.len() {
            if self.entry_parity(idx / n, idx % n).is_odd() {
                ev[idx] = 0;
            } else {
                od[idx] = 0;
            }
        }
        (ev, od)
    }

    pub fn square(&self, x: &[Fe]) -> Vector {
        let m = self.as_matrix(x);
        m.mul(&m).flatten()
    }

    pub fn entry_name(&self, v: &[Fe]) -> String {
        let n = self.size();
        let sep = if n > 9 { "," } else { "" };
        let terms: Vec<String> = v
            .iter()
            .enumerate()
            .filter(|(_, &c)| c != 0)
            .map(|(idx, &c)| {
                let e = format!("E{}{}{}", idx / n + 1, sep, idx % n + 1);
                if c == 1 {
                    e
                } else {
                    format!("{}{}", self.field.render(c), e)
                }
            })
            .collect();
        terms.join("+")
    }

    /// Structure constants of the subalgebra spanned by `basis`.
    pub fn algebra(&self, basis: &[Vector]) -> Result<SuperAlgebra> {
        let parity: Vec<Parity> = basis
            .iter()
            .map(|v| self.parity_of(v).ok_or(Error::NotHomogeneous))
            .collect::<Result<_>>()?;
        let degrees = self
            .weights
            .as_ref()
            .map(|_| basis.iter().map(|v| self.degree_of(v).ok_or(Error::NotHomogeneous)).collect::<Result<Vec<i64>>>())
            .transpose()?;
        let names: Vec<String> = basis.iter().map(|v| self.entry_name(v)).collect();
        let sq = |v: &Vector| self.square(v);
        SuperAlgebra::from_realization(
            &self.field,
            names,
            parity,
            degrees,
            basis,
            |a, b| self.bracket(a, b),
            (self.field.p() == 2).then_some(sq),
        )
    }

    /// Homogeneous RREF basis of a subspace of supermatrices, ordered even
    /// before odd.
    pub fn homogeneous_basis(&self, s: &Subspace) -> Result<Vec<Vector>> {
        let mut vecs = s.vectors();
        for v in &vecs {
            if self.parity_of(v).is_none() {
                return Err(Error::NotHomogeneous);
            }
        }
        vecs.sort_by_key(|v| self.parity_of(v) == Some(Parity::Odd));
        Ok(vecs)
    }

    /// All supermatrices, as a subspace of the flattened ambient.
    pub fn full(&self) -> Subspace {
        Subspace::full(&self.field, self.size() * self.size())
    }

    /// Solutions of a family of linear conditions on the flattened entries.
    pub fn solutions(&self, conditions: &[Vector]) -> Subspace {
        let n2 = self.size() * self.size();
        if conditions.is_empty() {
            return self.full();
        }
        kernel(&Matrix::from_rows(&self.field, n2, conditions))
    }
}

fn idx(n: usize, i: usize, j: usize) -> usize {
    i * n + j
}

/// Linear conditions `(X B + B X^T)_{ij} = 0`.
fn form_conditions(field: &Field, b: &Matrix) -> Vec<Vector> {
    let n = b.rows();
    let mut rows = Vec::new();
    for i in 0..n {
        for j in 0..n {
            let mut r = vec![0; n * n];
            // (X B)_{ij} = sum_k X_ik B_kj ; (B X^T)_{ij} = sum_k B_ik X_jk
            for k in 0..n {
                let a = b.get(k, j);
                r[idx(n, i, k)] = field.add(r[idx(n, i, k)], a);
                let c = b.get(i, k);
                r[idx(n, j, k)] = field.add(r[idx(n, j, k)], c);
            }
            rows.push(r);
        }
    }
    rows
}

fn trace_condition(n: usize, offset: (usize, usize), total: usize) -> Vector {
    let mut r = vec![0; total * total];
    for i in 0..n {
        r[idx(total, offset.0 + i, offset.1 + i)] = 1;
    }
    r
}

pub fn gl(field: &Field, n: usize, weights: Option<Vec<i64>>) -> Result<SuperAlgebra> {
    let sp = SuperMatrixSpace::new(field, n, 0).with_weights(weights);
    sp.algebra(&sp.full().vectors())
}

pub fn sl_space(field: &Field, n: usize) -> (SuperMatrixSpace, Subspace) {
    let sp = SuperMatrixSpace::new(field, n, 0);
    let s = sp.solutions(&[trace_condition(n, (0, 0), n)]);
    (sp, s)
}

pub fn sl(field: &Field, n: usize, weights: Option<Vec<i64>>) -> Result<SuperAlgebra> {
    let (sp, s) = sl_space(field, n);
    sp.with_weights(weights).algebra(&s.vectors())
}

/// `sl(n)` modulo its center (scalars when `p | n`).
pub fn psl(field: &Field, n: usize, weights: Option<Vec<i64>>) -> Result<SuperAlgebra> {
    let g = sl(field, n, weights)?;
    let c = crate::superalg::center(&g);
    if c.is_zero() {
        return Ok(g);
    }
    Ok(crate::superalg::quotient(&g, &c, Default::default())?.algebra)
}

fn require_p2(field: &Field, what: &str) -> Result<()> {
    if field.p() != 2 {
        return Err(Error::BadParams(format!("{what} is defined here for p = 2 only")));
    }
    Ok(())
}

/// `o_B(n) = {X : XB + BX^T = 0}` for a symmetric form `B`.
pub fn o_form(field: &Field, b: &Matrix, weights: Option<Vec<i64>>) -> Result<SuperAlgebra> {
    let sp = SuperMatrixSpace::new(field, b.rows(), 0).with_weights(weights);
    let s = sp.solutions(&form_conditions(field, b));
    sp.algebra(&s.vectors())
}

pub fn o_i(field: &Field, n: usize) -> Result<SuperAlgebra> {
    require_p2(field, "o_I")?;
    o_form(field, &Matrix::identity(field, n), None)
}

pub fn pi_form(field: &Field, k: usize) -> Matrix {
    Matrix::from_fn(field, 2 * k, 2 * k, |i, j| u32::from(i + k == j || j + k == i))
}

pub fn o_pi(field: &Field, n: usize) -> Result<SuperAlgebra> {
    require_p2(field, "o_Pi")?;
    if n % 2 != 0 || n == 0 {
        return Err(Error::BadParams("o_Pi needs an even size".into()));
    }
    o_form(field, &pi_form(field, n / 2), None)
}

/// Symmetric matrices with zero diagonal.
pub fn zd(field: &Field, n: usize) -> Result<SuperAlgebra> {
    require_p2(field, "ZD")?;
    let sp = SuperMatrixSpace::new(field, n, 0);
    let mut conds = form_conditions(field, &Matrix::identity(field, n));
    for i in 0..n {
        let mut r = vec![0; n * n];
        r[idx(n, i, i)] = 1;
        conds.push(r);
    }
    sp.algebra(&sp.solutions(&conds).vectors())
}

/// Flattened `n x n` basis matrices of a Lie algebra of matrices, for the
/// families that act on the tautological module.
pub fn linear_basis(field: &Field, family: &str, n: usize) -> Result<Vec<Vector>> {
    let sp = SuperMatrixSpace::new(field, n, 0);
    let trace = trace_condition(n, (0, 0), n);
    let ident = Matrix::identity(field, n);
    let conds = match family {
        "gl" => vec![],
        "sl" => vec![trace],
        "o_I" | "osl_I" | "ZD" | "o_Pi" => {
            require_p2(field, family)?;
            if family == "o_Pi" && n % 2 != 0 {
                return Err(Error::BadParams("o_Pi needs an even size".into()));
            }
            let b = if family == "o_Pi" { pi_form(field, n / 2) } else { ident };
            let mut c = form_conditions(field, &b);
            if family == "osl_I" {
                c.push(trace);
            }
            if family == "ZD" {
                c.extend((0..n).map(|i| crate::linalg::unit(n * n, idx(n, i, i))));
            }
            c
        }
        other => return Err(Error::BadParams(format!("{other} is not a matrix family acting on K^n"))),
    };
    Ok(sp.solutions(&conds).vectors())
}

/// `o_I(n) ∩ sl(n)`.
pub fn osl_i(field: &Field, n: usize) -> Result<SuperAlgebra> {
    let sp = SuperMatrixSpace::new(field, n, 0);
    sp.algebra(&linear_basis(field, "osl_I", n)?)
}

/// The matrix model `[[A, X, B], [Y^T, 0, X^T], [C, Y, A^T]]` of
/// `o^(1)(2n+1)` with `B, C` in `ZD(n)`, graded by coordinate weights
/// `(0^n, 1, 2^n)`.
pub fn o1_odd(field: &Field, n: usize) -> Result<SuperAlgebra> {
    require_p2(field, "o^(1)(2n+1)")?;
    let size = 2 * n + 1;
    let mid = n;
    let sp = SuperMatrixSpace::new(field, size, 0)
        .with_weights(Some((0..size).map(|i| if i < n { 0 } else if i == mid { 1 } else { 2 }).collect()));
    let mut basis: Vec<Vector> = Vec::new();
    let e = |i: usize, j: usize| -> Vector {
        let mut v = vec![0; size * size];
        v[idx(size, i, j)] = 1;
        v
    };
    let sum = |a: Vector, b: Vector| -> Vector { a.iter().zip(&b).map(|(x, y)| field.add(*x, *y)).collect() };
    for i in 0..n {
        for j in 0..n {
            // A_ij together with the mirrored entry of A^T
            basis.push(sum(e(i, j), e(n + 1 + j, n + 1 + i)));
        }
    }
    for i in 0..n {
        for j in (i + 1)..n {
            basis.push(sum(e(i, n + 1 + j), e(j, n + 1 + i)));
            basis.push(sum(e(n + 1 + i, j), e(n + 1 + j, i)));
        }
    }
    for i in 0..n {
        basis.push(sum(e(i, mid), e(mid, n + 1 + i)));
        basis.push(sum(e(mid, i), e(n + 1 + i, mid)));
    }
    sp.algebra(&basis)
}

/// `q(n)` inside `gl(n|n)`: pairs `(A, B)` as `[[A, B], [B, A]]`.
pub fn q_space(field: &Field, n: usize) -> (SuperMatrixSpace, Vec<Vector>, Vec<Vector>) {
    let sp = SuperMatrixSpace::new(field, n, n);
    let size = 2 * n;
    let mut even = Vec::new();
    let mut odd = Vec::new();
    for i in 0..n {
        for j in 0..n {
            let mut a = vec![0; size * size];
            a[idx(size, i, j)] = 1;
            a[idx(size, n + i, n + j)] = 1;
            even.push(a);
            let mut b = vec![0; size * size];
            b[idx(size, i, n + j)] = 1;
            b[idx(size, n + i, j)] = 1;
            odd.push(b);
        }
    }
    (sp, even, odd)
}

fn q_names(n: usize, parity: Parity, v: &[Fe], field: &Field) -> String {
    let size = 2 * n;
    let col0 = if parity.is_odd() { n } else { 0 };
    let terms: Vec<String> = (0..n)
        .flat_map(|i| (0..n).map(move |j| (i, j)))
        .filter(|&(i, j)| v[idx(size, i, col0 + j)] != 0)
        .map(|(i, j)| {
            let c = v[idx(size, i, col0 + j)];
            let lbl = if parity.is_odd() { "B" } else { "A" };
            let base = format!("{lbl}{}{}", i + 1, j + 1);
            if c == 1 {
                base
            } else {
                format!("{}{}", field.render(c), base)
            }
        })
        .collect();
    terms.join("+")
}

/// Subalgebra of `q(n)` cut out by linear conditions on `(A, B)`, each given
/// as a pair of `n x n` coefficient matrices `(alpha, beta)` meaning
/// `sum alpha_ij A_ij + beta_ij B_ij = 0`.
fn q_family(field: &Field, n: usize, conditions: &[(Vector, Vector)]) -> Result<SuperAlgebra> {
    Ok(q_family_realized(field, n, conditions)?.0)
}

/// As [`q_family`], also returning the `2n x 2n` matrices of the basis.
fn q_family_realized(field: &Field, n: usize, conditions: &[(Vector, Vector)]) -> Result<(SuperAlgebra, Vec<Vector>)> {
    let (sp, even, odd) = q_space(field, n);
    let dim = 2 * n * n;
    // coordinates (A entries, B entries)
    let rows: Vec<Vector> = conditions.iter().map(|(a, b)| a.iter().chain(b.iter()).copied().collect()).collect();
    let sol = if rows.is_empty() {
        Subspace::full(field, dim)
    } else {
        kernel(&Matrix::from_rows(field, dim, &rows))
    };
    let mut basis = Vec::new();
    let mut names = Vec::new();
    let mut parity = Vec::new();
    let mut vecs = sol.vectors();
    vecs.sort_by_key(|c| c[..n * n].iter().all(|&x| x == 0));
    for c in vecs {
        let a_part = &c[..n * n];
        let b_part = &c[n * n..];
        let is_even = b_part.iter().all(|&x| x == 0);
        let is_odd = a_part.iter().all(|&x| x == 0);
        if !is_even && !is_odd {
            return Err(Error::NotHomogeneous);
        }
        let mut m = vec![0; 4 * n * n];
        let src = if is_even { &even } else { &odd };
        let coeffs = if is_even { a_part } else { b_part };
        for (k, &co) in coeffs.iter().enumerate() {
            crate::linalg::axpy(field, &mut m, co, &src[k]);
        }
        let par = if is_even { Parity::Even } else { Parity::Odd };
        names.push(q_names(n, par, &m, field));
        parity.push(par);
        basis.push(m);
    }
    let sq = |v: &Vector| sp.square(v);
    let g = SuperAlgebra::from_realization(
        field,
        names,
        parity,
        None,
        &basis,
        |a, b| sp.bracket(a, b),
        (field.p() == 2).then_some(sq),
    )?;
    Ok((g, basis))
}

fn trace_vec(n: usize) -> Vector {
    let mut t = vec![0; n * n];
    for i in 0..n {
        t[i * n + i] = 1;
    }
    t
}

pub fn q(field: &Field, n: usize) -> Result<SuperAlgebra> {
    q_family(field, n, &[])
}

/// Queertraceless: `tr B = 0`.
pub fn sq(field: &Field, n: usize) -> Result<SuperAlgebra> {
    q_family(field, n, &[(vec![0; n * n], trace_vec(n))])
}

/// `q(n)`, or `sq(n)` when `queertraceless`, with the values of the
/// even-trace `(A, B) -> tr A` on its basis.
pub fn even_trace(field: &Field, n: usize, queertraceless: bool) -> Result<(SuperAlgebra, Vector)> {
    let conds = if queertraceless { vec![(vec![0; n * n], trace_vec(n))] } else { Vec::new() };
    let (g, basis) = q_family_realized(field, n, &conds)?;
    let size = 2 * n;
    let etr = basis
        .iter()
        .map(|m| (0..n).fold(0, |acc, i| field.add(acc, m[idx(size, i, i)])))
        .collect();
    Ok((g, etr))
}

/// `sq(n) / K 1_{2n}`.
pub fn psq(field: &Field, n: usize) -> Result<SuperAlgebra> {
    let (g, basis) = q_family_realized(field, n, &[(vec![0; n * n], trace_vec(n))])?;
    let one = identity_in(&g, &basis, n, false)?;
    Ok(crate::superalg::quotient(&g, &one, Default::default())?.algebra)
}

/// `sq(n)` with zero even-trace `tr A` (`p = 2`).
pub fn s_e_sq(field: &Field, n: usize) -> Result<SuperAlgebra> {
    require_p2(field, "s_e sq")?;
    q_family(field, n, &[(vec![0; n * n], trace_vec(n)), (trace_vec(n), vec![0; n * n])])
}


/// `s_e sq(2k) / ii(2k)` with `ii = {(a 1, b 1)}`.
pub fn ps_e_psq(field: &Field, n: usize) -> Result<SuperAlgebra> {
    if n % 2 != 0 {
        return Err(Error::BadParams("ps_e psq needs an even size".into()));
    }
    let (g, basis) = q_family_realized(field, n, &[(vec![0; n * n], trace_vec(n)), (trace_vec(n), vec![0; n * n])])?;
    let mut vecs = identity_in(&g, &basis, n, false)?.vectors();
    vecs.extend(identity_in(&g, &basis, n, true)?.vectors());
    let ii = Subspace::from_vectors(g.field(), g.dim(), &vecs);
    Ok(crate::superalg::quotient(&g, &ii, Default::default())?.algebra)
}

/// `K (1_n, 0)`, or `K (0, 1_n)` when `odd`, in the coordinates of a
/// q-type algebra with realization `basis`.
fn identity_in(g: &SuperAlgebra, basis: &[Vector], n: usize, odd: bool) -> Result<Subspace> {
    let (_, even, odd_part) = q_space(g.field(), n);
    let even = if odd { odd_part } else { even };
    let mut one = vec![0; 4 * n * n];
    for i in 0..n {
        crate::linalg::axpy(g.field(), &mut one, 1, &even[i * n + i]);
    }
    let c = crate::linalg::Coordinatizer::new(g.field(), 4 * n * n, basis)?
        .coords(&one)
        .ok_or_else(|| Error::BadParams("the identity is not in the algebra".into()))?;
    Ok(Subspace::from_vectors(g.field(), g.dim(), &[c]))
}

/// `oo_{IΠ}(n|2k)`: supermatrices preserving `I_n ⊕ Π_{2k}`; `p = 2`.
pub fn oo_ipi(field: &Field, n: usize, m: usize, weights: Option<Vec<i64>>) -> Result<SuperAlgebra> {
    require_p2(field, "oo_IPi")?;
    if m % 2 != 0 {
        return Err(Error::BadParams("odd size of oo_IPi must be even".into()));
    }
    let size = n + m;
    let pi = pi_form(field, m / 2);
    let b = Matrix::from_fn(field, size, size, |i, j| {
        if i < n && j < n {
            u32::from(i == j)
        } else if i >= n && j >= n {
            pi.get(i - n, j - n)
        } else {
            0
        }
    });
    let sp = SuperMatrixSpace::new(field, n, m).with_weights(weights);
    let s = sp.solutions(&form_conditions(field, &b));
    sp.algebra(&sp.homogeneous_basis(&s)?)
}

/// `oo_{IΠ}(2k+1|2m)` preserving `(Π_{2k} with a middle 1) ⊕ Π_{2m}`, in the
/// coordinates of [`o1_odd`]; weights `(0^k, 1, 2^k | 1^2m)` make the form
/// homogeneous.
pub fn oo_ipi_model(field: &Field, k: usize, m: usize) -> Result<SuperAlgebra> {
    require_p2(field, "oo_IPi")?;
    let n = 2 * k + 1;
    let size = n + 2 * m;
    let b = Matrix::from_fn(field, size, size, |i, j| {
        if i < n && j < n {
            u32::from(i + j == 2 * k)
        } else if i >= n && j >= n {
            u32::from((i - n) + m == (j - n) || (j - n) + m == (i - n))
        } else {
            0
        }
    });
    let weights: Vec<i64> = (0..size)
        .map(|i| if i < k { 0 } else if i == k || i >= n { 1 } else { 2 })
        .collect();
    let sp = SuperMatrixSpace::new(field, n, 2 * m).with_weights(Some(weights));
    let s = sp.solutions(&form_conditions(field, &b));
    sp.algebra(&sp.homogeneous_basis(&s)?)
}

/// `g^(i)` as an algebra in its own right.
pub fn derived_algebra(g: &SuperAlgebra, i: usize) -> Result<SuperAlgebra> {
    let d = derived(g, Some(i));
    g.subalgebra(&d, "d")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ffield::prime_field;

    fn f2() -> Field {
        prime_field(2).unwrap()
    }

    #[test]
    fn dimensions() {
        let f = f2();
        assert_eq!(gl(&f, 3, None).unwrap().dim(), 9);
        assert_eq!(sl(&f, 3, None).unwrap().dim(), 8);
        assert_eq!(psl(&f, 3, None).unwrap().dim(), 8);
        assert_eq!(psl(&f, 4, None).unwrap().dim(), 14);
        assert_eq!(o_i(&f, 3).unwrap().dim(), 6);
        assert_eq!(zd(&f, 3).unwrap().dim(), 3);
        assert_eq!(o_pi(&f, 6).unwrap().dim(), 21);
        assert_eq!(o1_odd(&f, 2).unwrap().dim(), 10);
        let q2 = q(&prime_field(3).unwrap(), 2).unwrap();
        assert_eq!((q2.dim_even(), q2.dim_odd()), (4, 4));
        let oo = oo_ipi(&f, 1, 2, None).unwrap();
        assert_eq!((oo.dim_even(), oo.dim_odd()), (4, 2));
    }

    #[test]
    fn q2_odd_bracket() {
        let f = f2();
        let g = q(&f, 2).unwrap();
        let b12 = g.index_of("B12").unwrap();
        let b21 = g.index_of("B21").unwrap();
        let a11 = g.index_of("A11").unwrap();
        let a22 = g.index_of("A22").unwrap();
        let mut want = g.zero_vector();
        want[a11] = 1;
        want[a22] = 1;
        assert_eq!(g.bracket(&g.unit(b12), &g.unit(b21)), want);
        // (0, E_11)^2 = (E_11, 0)
        assert_eq!(g.square(&g.unit(g.index_of("B11").unwrap())).unwrap(), g.unit(a11));
    }

    #[test]
    fn axioms_hold() {
        let f = f2();
        for g in [
            o_i(&f, 4).unwrap(),
            o_pi(&f, 4).unwrap(),
            q(&f, 2).unwrap(),
            sq(&f, 3).unwrap(),
            o1_odd(&f, 2).unwrap(),
            oo_ipi(&f, 1, 2, None).unwrap(),
            oo_ipi_model(&f, 0, 1).unwrap(),
        ] {
            assert!(g.check_axioms().passed(), "{g:?}");
        }
    }
}
