//! Cartan prolongation inside a fixed `vect(m; N | n)`, the homomorphism
//! `phi: q(n+1) -> vect(n | n)`, main parts, and the `qg = gq` comparison.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::catalog::divided::DividedPowers;
use crate::catalog::vectorial::FieldSpace;
use crate::error::{Error, Result};
use crate::ffield::{Fe, Field};
use crate::linalg::{axpy, is_zero, kernel, Matrix, Subspace, Vector};
use crate::restrict::{check_restricted_module, find_p_structure, verify_witness, Entry, ModuleAction};
use crate::restrict::{StructureWitness, Variant};
use crate::superalg::{Parity, SuperAlgebra};
use crate::superize::{queerify_assoc, AssocAlgebra};

/// The non-positive part of a graded algebra realized by vector fields.
#[derive(Debug, Clone)]
pub struct GradedEmbedding {
    pub ambient: FieldSpace,
    pub components: BTreeMap<i64, Vec<Vector>>,
}

impl GradedEmbedding {
    /// Checks degrees, parities and `[g_i, g_j] ⊆ g_{i+j}`.
    pub fn new(ambient: FieldSpace, components: BTreeMap<i64, Vec<Vector>>) -> Result<GradedEmbedding> {
        if !components.contains_key(&-1) {
            return Err(Error::InconsistentEmbedding("no component of degree -1".into()));
        }
        if components.keys().any(|&d| d > 0) {
            return Err(Error::InconsistentEmbedding("positive components are computed, not given".into()));
        }
        let f = ambient.field().clone();
        let mut spans = BTreeMap::new();
        for (&d, vs) in &components {
            for v in vs {
                if ambient.parity_of(v).is_none() && !is_zero(v) {
                    return Err(Error::InconsistentEmbedding(format!("element of degree {d} is not homogeneous")));
                }
                if !is_zero(v) && ambient.degree_of(v) != Some(d) {
                    return Err(Error::InconsistentEmbedding(format!("element listed in degree {d} has another degree")));
                }
            }
            spans.insert(d, Subspace::from_vectors(&f, ambient.dim(), vs));
        }
        let zero = Subspace::zero(&f, ambient.dim());
        for (&i, a) in &components {
            for (&j, b) in components.range(i..) {
                let target = spans.get(&(i + j)).unwrap_or(&zero);
                let low = *components.keys().next().unwrap();
                if i + j < low {
                    continue;
                }
                for x in a {
                    for y in b {
                        if !target.contains(&ambient.bracket(x, y)) {
                            return Err(Error::InconsistentEmbedding(format!(
                                "[g_{i}, g_{j}] is not inside g_{}",
                                i + j
                            )));
                        }
                    }
                }
            }
        }
        Ok(GradedEmbedding { ambient, components })
    }
}

#[derive(Debug, Clone)]
pub struct ProlongResult {
    pub ambient: FieldSpace,
    /// Homogeneous bases by degree, non-positive ones as given.
    pub components: BTreeMap<i64, Vec<Vector>>,
    pub algebra: SuperAlgebra,
    pub fields: Vec<Vector>,
    /// First positive degree from which every component vanishes.
    pub stabilized_at: Option<i64>,
}

impl ProlongResult {
    /// `(even, odd)` dimensions by degree.
    pub fn graded_dims(&self) -> BTreeMap<i64, (usize, usize)> {
        graded_dims(&self.ambient, &self.components)
    }

    pub fn span(&self, d: i64) -> Subspace {
        let vs = self.components.get(&d).cloned().unwrap_or_default();
        Subspace::from_vectors(self.ambient.field(), self.ambient.dim(), &vs)
    }
}

fn graded_dims(space: &FieldSpace, comps: &BTreeMap<i64, Vec<Vector>>) -> BTreeMap<i64, (usize, usize)> {
    comps
        .iter()
        .map(|(&d, vs)| {
            let odd = vs.iter().filter(|v| space.parity_of(v) == Some(Parity::Odd)).count();
            (d, (vs.len() - odd, odd))
        })
        .collect()
}

fn units_of_degree(space: &FieldSpace, d: i64, odd: bool) -> Vec<usize> {
    (0..space.dim())
        .filter(|&i| {
            let u = crate::linalg::unit(space.dim(), i);
            space.degree_of(&u) == Some(d) && space.parity_of(&u).is_some_and(|p| p.is_odd() == odd)
        })
        .collect()
}

/// `g_k = {X in W_k : [X, g_-1] ⊆ g_{k-1}}` for `k = 1, 2, ...` up to the
/// top degree of the ambient.
pub fn cartan_prolong(e: &GradedEmbedding) -> Result<ProlongResult> {
    let space = &e.ambient;
    let f = space.field().clone();
    let top = (0..space.dim())
        .map(|i| space.degree_of(&crate::linalg::unit(space.dim(), i)).unwrap_or(0))
        .max()
        .unwrap_or(0);
    let g_minus = e.components[&-1].clone();
    let mut comps = e.components.clone();
    let mut stabilized_at = None;
    for k in 1..=top {
        let prev = Subspace::from_vectors(&f, space.dim(), comps.get(&(k - 1)).map_or(&[][..], |v| v));
        let mut basis = Vec::new();
        for odd in [false, true] {
            let idx = units_of_degree(space, k, odd);
            if idx.is_empty() {
                continue;
            }
            let images: Vec<Vector> = crate::par::map_slice(&idx, |&i| {
                let u = crate::linalg::unit(space.dim(), i);
                g_minus.iter().flat_map(|v| prev.reduce(&space.bracket(&u, v))).collect()
            });
            let rows = images[0].len();
            let sols = if rows == 0 {
                Subspace::full(&f, idx.len())
            } else {
                kernel(&Matrix::from_cols(&f, rows, &images))
            };
            for c in sols.vectors() {
                let mut v = vec![0; space.dim()];
                for (&i, &ci) in idx.iter().zip(&c) {
                    v[i] = ci;
                }
                basis.push(v);
            }
        }
        if basis.is_empty() {
            stabilized_at.get_or_insert(k);
        } else {
            stabilized_at = None;
        }
        comps.insert(k, basis);
    }
    let mut fields = Vec::new();
    for vs in comps.values() {
        let mut evens: Vec<&Vector> = vs.iter().filter(|v| space.parity_of(v) != Some(Parity::Odd)).collect();
        evens.extend(vs.iter().filter(|v| space.parity_of(v) == Some(Parity::Odd)));
        fields.extend(evens.into_iter().cloned());
    }
    let names = fields.iter().map(|v| space.field_name(v)).collect();
    let algebra = space.algebra(&fields, names).map_err(|err| match err {
        Error::BadDimensions(m) => Error::TheoremCheckFailed(format!("the prolong is not closed: {m}")),
        other => other,
    })?;
    Ok(ProlongResult {
        ambient: space.clone(),
        components: comps,
        algebra,
        fields,
        stabilized_at,
    })
}

/// Elements `X` of non-negative degree with `[X, g_-1] = 0`; empty when the
/// prolong is transitive.
pub fn transitivity_defects(r: &ProlongResult) -> Vec<(i64, Vector)> {
    let space = &r.ambient;
    let g_minus = &r.components[&-1];
    let f = space.field();
    let mut out = Vec::new();
    for (&d, vs) in r.components.range(0..) {
        if vs.is_empty() {
            continue;
        }
        let images: Vec<Vector> = vs
            .iter()
            .map(|x| g_minus.iter().flat_map(|v| space.bracket(x, v)).collect())
            .collect();
        let m = Matrix::from_cols(f, images[0].len(), &images);
        for c in kernel(&m).vectors() {
            let mut x = vec![0; space.dim()];
            for (v, &ci) in vs.iter().zip(&c) {
                axpy(f, &mut x, ci, v);
            }
            out.push((d, x));
        }
    }
    out
}

/// `vect(n; N | n_odd)` with the standard grading.
pub fn standard_space(field: &Field, shear: &[u32], n_odd: usize) -> Result<FieldSpace> {
    FieldSpace::new(DividedPowers::new(field, shear, n_odd)?, None)
}

/// The image of `phi: q(n+1) -> vect(n; N_s | n)`.
#[derive(Debug, Clone)]
pub struct PhiEmbedding {
    pub n: usize,
    pub ambient: FieldSpace,
    /// `q(n+1)` with basis `E_ij`, `X_ij`, `i, j = 0..n`.
    pub source: SuperAlgebra,
    pub images: Vec<Vector>,
    /// `-1`, `0` or `1` for each source basis vector.
    pub source_degrees: Vec<i64>,
    pub kernel: Subspace,
    /// Source basis pairs where `phi` fails to be a homomorphism.
    pub failures: Vec<(usize, usize)>,
}

impl PhiEmbedding {
    fn index(&self, odd: bool, i: usize, j: usize) -> usize {
        let m = self.n + 1;
        (if odd { m * m } else { 0 }) + i * m + j
    }

    pub fn image_of_degree(&self, d: i64) -> Vec<Vector> {
        let f = self.ambient.field();
        let vs: Vec<Vector> = (0..self.images.len())
            .filter(|&i| self.source_degrees[i] == d)
            .map(|i| self.images[i].clone())
            .collect();
        homogeneous_basis(&self.ambient, &Subspace::from_vectors(f, self.ambient.dim(), &vs))
    }

    /// `(id, q(n))` or, with `with_j`, the whole `phi(g_0)`.
    pub fn nonpositive(&self, with_j: bool) -> Result<GradedEmbedding> {
        let f = self.ambient.field();
        let mut zero = Vec::new();
        for odd in [false, true] {
            for i in 1..=self.n {
                for j in 1..=self.n {
                    zero.push(self.images[self.index(odd, i, j)].clone());
                }
            }
            if with_j {
                zero.push(self.images[self.index(odd, 0, 0)].clone());
            }
        }
        let zero = homogeneous_basis(&self.ambient, &Subspace::from_vectors(f, self.ambient.dim(), &zero));
        let mut comps = BTreeMap::new();
        comps.insert(-1, self.image_of_degree(-1));
        comps.insert(0, zero);
        GradedEmbedding::new(self.ambient.clone(), comps)
    }
}

/// RREF basis, even vectors first; panics only if the subspace is not
/// spanned by homogeneous vectors.
fn homogeneous_basis(space: &FieldSpace, s: &Subspace) -> Vec<Vector> {
    let mut vs = s.vectors();
    vs.sort_by_key(|v| space.parity_of(v) == Some(Parity::Odd));
    vs
}

/// `phi` on the basis of `q(n+1)` by the explicit formulas.
pub fn embed_phi(field: &Field, n: usize) -> Result<PhiEmbedding> {
    if n == 0 {
        return Err(Error::BadParams("phi needs n >= 1".into()));
    }
    let space = standard_space(field, &vec![1; n], n)?;
    let dp = space.dp.clone();
    let fl = &**field;
    let m = n + 1;
    let mut a = AssocAlgebra::matrix(field, m);
    a.names = (0..m * m).map(|k| format!("E{}{}", k / m, k % m)).collect();
    let q = queerify_assoc(&a)?.algebra;
    let names: Vec<String> = (0..2 * m * m)
        .map(|k| {
            let (odd, r) = (k >= m * m, k % (m * m));
            format!("{}{}{}", if odd { "X" } else { "E" }, r / m, r % m)
        })
        .collect();
    let source = q.with_names(names);
    let z = |i: usize| dp.unit(dp.coordinate(i - 1));
    let xi = |i: usize| dp.unit(dp.coordinate(n + i - 1));
    let one = dp.unit(dp.one());
    // f d_k with k counted from 0 (z) and n (xi)
    let field_of = |f: &Vector, k: usize| -> Vector {
        let mut comps = vec![vec![0; dp.dim()]; 2 * n];
        comps[k] = f.clone();
        comps.concat()
    };
    let dz = |j: usize| j - 1;
    let dxi = |j: usize| n + j - 1;
    let add = |acc: &mut Vector, c: Fe, v: &Vector| axpy(fl, acc, c, v);
    let minus = fl.neg(1);
    // euler = sum z d_z + xi d_xi, chi = sum z d_xi - xi d_z
    let mut euler = vec![0; space.dim()];
    let mut chi = vec![0; space.dim()];
    for j in 1..=n {
        add(&mut euler, 1, &field_of(&z(j), dz(j)));
        add(&mut euler, 1, &field_of(&xi(j), dxi(j)));
        add(&mut chi, 1, &field_of(&z(j), dxi(j)));
        add(&mut chi, minus, &field_of(&xi(j), dz(j)));
    }
    let mut images = vec![vec![0; space.dim()]; 2 * m * m];
    let mut degrees = vec![0; 2 * m * m];
    for i in 0..m {
        for j in 0..m {
            let (e, x) = (i * m + j, m * m + i * m + j);
            let (ie, ix) = match (i, j) {
                (0, 0) => {
                    let mut x00 = vec![0; space.dim()];
                    add(&mut x00, minus, &chi);
                    (euler.iter().map(|&c| fl.neg(c)).collect(), x00)
                }
                (0, j) => (field_of(&one, dz(j)), field_of(&one, dxi(j))),
                (i, 0) => {
                    degrees[e] = 1;
                    degrees[x] = 1;
                    let mut ie = vec![0; space.dim()];
                    add(&mut ie, minus, &space.times(&z(i), &euler));
                    add(&mut ie, minus, &space.times(&xi(i), &chi));
                    let mut ix = vec![0; space.dim()];
                    add(&mut ix, minus, &space.times(&z(i), &chi));
                    add(&mut ix, minus, &space.times(&xi(i), &euler));
                    (ie, ix)
                }
                (i, j) => {
                    let mut ie = field_of(&z(i), dz(j));
                    add(&mut ie, 1, &field_of(&xi(i), dxi(j)));
                    let mut ix = field_of(&z(i), dxi(j));
                    add(&mut ix, 1, &field_of(&xi(i), dz(j)));
                    (ie, ix)
                }
            };
            if i == 0 && j > 0 {
                degrees[e] = -1;
                degrees[x] = -1;
            }
            images[e] = ie;
            images[x] = ix;
        }
    }
    let total = source.dim();
    let as_cols = Matrix::from_cols(field, space.dim(), &images);
    let ker = kernel(&as_cols);
    let apply = |v: &[Fe]| -> Vector {
        let mut out = vec![0; space.dim()];
        for (k, &c) in v.iter().enumerate().filter(|(_, &c)| c != 0) {
            axpy(fl, &mut out, c, &images[k]);
        }
        out
    };
    let mut failures = Vec::new();
    for s in 0..total {
        for t in s..total {
            let lhs = apply(&source.bracket(&source.unit(s), &source.unit(t)));
            if lhs != space.bracket(&images[s], &images[t]) {
                failures.push((s, t));
            }
        }
        if field.p() == 2 && source.parity()[s].is_odd() {
            let lhs = apply(&source.square_unchecked(&source.unit(s)));
            if lhs != space.square(&images[s]) {
                failures.push((s, s));
            }
        }
    }
    Ok(PhiEmbedding {
        n,
        ambient: space,
        source,
        images,
        source_degrees: degrees,
        kernel: ker,
        failures,
    })
}

fn has_odd_part(space: &FieldSpace, mono: usize) -> bool {
    space.dp.monomial(mono).s != 0
}

/// `X^m`: the z-only part of the `d_z` coefficients (even `X`) or of the
/// `d_xi` coefficients (odd `X`), in `vect(n; N | n)` with `n` odd
/// indeterminates paired with the even ones.
pub fn main_part(space: &FieldSpace, x: &[Fe]) -> Result<Vector> {
    let n = space.dp.n_even();
    if space.dp.n_odd() != n {
        return Err(Error::NotVectorial);
    }
    let Some(par) = space.parity_of(x) else {
        return Err(Error::NotHomogeneous);
    };
    let o = space.dp.dim();
    let slots = if par.is_odd() { n..2 * n } else { 0..n };
    let mut out = vec![0; space.dim()];
    for k in slots {
        for mono in 0..o {
            if !has_odd_part(space, mono) {
                out[k * o + mono] = x[k * o + mono];
            }
        }
    }
    Ok(out)
}

/// For `p = 2`: the even (`odd = false`) or odd lift of a field
/// `sum f_i d_{z_i}` of `vect(n; N_s | 0)` into `vect(n; N_s | n)`, with
/// `F = sum_{|S| even} d_{z_S} f xi_S` and `G` over odd `|S|`.
pub fn queer_lift(base: &FieldSpace, space: &FieldSpace, x: &[Fe], odd: bool) -> Result<Vector> {
    let n = base.dp.n_even();
    if base.field().p() != 2 || space.dp.n_odd() != n || space.dp.n_even() != n || base.dp.n_odd() != 0 {
        return Err(Error::BadParams("queer lift needs p = 2 and matching ambients".into()));
    }
    let f = space.field();
    let (bo, so) = (base.dp.dim(), space.dp.dim());
    let mut out = vec![0; space.dim()];
    for i in 0..n {
        let comp = &x[i * bo..(i + 1) * bo];
        for (mono, &c) in comp.iter().enumerate().filter(|(_, &c)| c != 0) {
            let a = &base.dp.monomial(mono).a;
            for s in 0u32..(1 << n) {
                // d_{z_S} z^(a) = z^(a - 1_S)
                if (0..n).any(|t| s >> t & 1 == 1 && a[t] == 0) {
                    continue;
                }
                let b: Vec<u32> = (0..n).map(|t| a[t] - (s >> t & 1)).collect();
                let target = crate::catalog::divided::Monomial { a: b, s };
                let Some(j) = space.dp.index_of(&target) else { continue };
                let g_part = s.count_ones() % 2 == 1;
                let slot = if g_part != odd { n + i } else { i };
                out[slot * so + j] = f.add(out[slot * so + j], c);
            }
        }
    }
    Ok(out)
}

/// `q(vect(n; N_s | 0))` inside `vect(n; N_s | n)` by queer lifts.
pub fn q_of_vect(field: &Field, n: usize) -> Result<(FieldSpace, BTreeMap<i64, Vec<Vector>>)> {
    let base = standard_space(field, &vec![1; n], 0)?;
    let space = standard_space(field, &vec![1; n], n)?;
    let mut comps: BTreeMap<i64, Vec<Vector>> = BTreeMap::new();
    for odd in [false, true] {
        for i in 0..base.dim() {
            let u = crate::linalg::unit(base.dim(), i);
            let d = base.degree_of(&u).unwrap_or(0);
            comps.entry(d).or_default().push(queer_lift(&base, &space, &u, odd)?);
        }
    }
    Ok((space, comps))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct QgReport {
    pub equal: bool,
    pub dims_qg: BTreeMap<i64, (usize, usize)>,
    pub dims_gq: BTreeMap<i64, (usize, usize)>,
    pub first_mismatch: Option<i64>,
    /// Dimensions of the prolong `g` before queerification.
    pub dims_g: BTreeMap<i64, usize>,
}

/// Matrix `A` acting on `K^n` as the linear field `sum A_ij z_j d_i`.
fn linear_field(space: &FieldSpace, a: &Matrix) -> Vector {
    let dp = &space.dp;
    let n = a.rows();
    let mut comps = vec![vec![0; dp.dim()]; space.n_vars()];
    for (i, comp) in comps.iter_mut().enumerate().take(n) {
        for j in 0..n {
            let c = a.get(i, j);
            if c != 0 {
                comp[dp.coordinate(j)] = c;
            }
        }
    }
    comps.concat()
}

fn matrix_witness(g0: &SuperAlgebra, mats: &[Matrix]) -> Option<StructureWitness> {
    let f = g0.field();
    let n = mats.first()?.rows();
    let flat: Vec<Vector> = mats.iter().map(|m| m.flatten()).collect();
    let coord = crate::linalg::Coordinatizer::new(f, n * n, &flat).ok()?;
    let table_p = mats
        .iter()
        .enumerate()
        .map(|(i, m)| coord.coords(&m.mul(m).flatten()).map(|value| Entry { basis: i, value }))
        .collect::<Option<Vec<_>>>()?;
    Some(StructureWitness {
        variant: Variant::P,
        table_p,
        table_2p_or_4: vec![],
        split: None,
    })
}

/// Compares `q(g)` with `g q` for `g = (K^n, g0)_*` over `N_s` (`p = 2`).
pub fn check_qg_eq_gq(field: &Field, n: usize, g0: &[Matrix]) -> Result<QgReport> {
    if field.p() != 2 {
        return Err(Error::WrongCharacteristic { expected: 2, found: field.p() });
    }
    if g0.iter().any(|m| m.rows() != n || m.cols() != n) {
        return Err(Error::BadDimensions("g0 must consist of n x n matrices".into()));
    }
    let flat: Vec<Vector> = g0.iter().map(|m| m.flatten()).collect();
    let span = Subspace::from_vectors(field, n * n, &flat);
    let mats: Vec<Matrix> = span.vectors().iter().map(|v| Matrix::unflatten(field, n, v)).collect();
    if !mats.is_empty() {
        let names = (0..mats.len()).map(|i| format!("a{i}")).collect();
        let alg = SuperAlgebra::from_realization(
            field,
            names,
            vec![Parity::Even; mats.len()],
            None,
            &span.vectors(),
            |a, b| Matrix::unflatten(field, n, a).commutator(&Matrix::unflatten(field, n, b)).flatten(),
            None::<fn(&Vector) -> Vector>,
        )?;
        let w = match matrix_witness(&alg, &mats) {
            Some(w) if verify_witness(&alg, &w)?.is_empty() => w,
            _ => find_p_structure(&alg)?
                .witness
                .ok_or_else(|| Error::NotRestricted("g0 has no 2-structure".into()))?,
        };
        let act = ModuleAction { dim: n, rho: mats.clone() };
        if !check_restricted_module(&alg, &w, &act)?.is_empty() {
            return Err(Error::NotRestricted("K^n is not a restricted g0-module".into()));
        }
    }
    let base = standard_space(field, &vec![1; n], 0)?;
    let space = standard_space(field, &vec![1; n], n)?;
    let minus1 = |s: &FieldSpace, count: usize| -> Vec<Vector> {
        (0..count).map(|k| s.unit_field(s.dp.one(), k)).collect()
    };
    let zero: Vec<Vector> = mats.iter().map(|a| linear_field(&base, a)).collect();
    let g = cartan_prolong(&GradedEmbedding::new(
        base.clone(),
        BTreeMap::from([(-1, minus1(&base, n)), (0, zero.clone())]),
    )?)?;
    let mut qg: BTreeMap<i64, Vec<Vector>> = BTreeMap::new();
    for (&d, vs) in &g.components {
        let entry = qg.entry(d).or_default();
        for odd in [false, true] {
            for v in vs {
                entry.push(queer_lift(&base, &space, v, odd)?);
            }
        }
    }
    let mut qzero = Vec::new();
    for odd in [false, true] {
        for v in &zero {
            qzero.push(queer_lift(&base, &space, v, odd)?);
        }
    }
    let gq = cartan_prolong(&GradedEmbedding::new(
        space.clone(),
        BTreeMap::from([(-1, minus1(&space, 2 * n)), (0, qzero)]),
    )?)?;
    let mut first_mismatch = None;
    let degrees: std::collections::BTreeSet<i64> = qg.keys().chain(gq.components.keys()).copied().collect();
    for d in degrees {
        let a = Subspace::from_vectors(field, space.dim(), qg.get(&d).map_or(&[][..], |v| v));
        if a != gq.span(d) {
            first_mismatch = Some(d);
            break;
        }
    }
    Ok(QgReport {
        equal: first_mismatch.is_none(),
        dims_qg: graded_dims(&space, &qg),
        dims_gq: gq.graded_dims(),
        first_mismatch,
        dims_g: g.components.iter().map(|(&d, v)| (d, v.len())).collect(),
    })
}

/// Non-positive part of a vectorial algebra as an embedding in its own
/// ambient.
pub fn nonpositive_part(space: &FieldSpace, fields: &[Vector]) -> Result<GradedEmbedding> {
    let mut comps: BTreeMap<i64, Vec<Vector>> = BTreeMap::new();
    for v in fields {
        let d = space.degree_of(v).ok_or(Error::NotHomogeneous)?;
        if d <= 0 {
            comps.entry(d).or_default().push(v.clone());
        }
    }
    GradedEmbedding::new(space.clone(), comps)
}

/// `(K^n, g0)` inside `vect(n; shear)`: `d_i` in degree -1 and the linear
/// fields of `g0` in degree 0.
pub fn linear_embedding(field: &Field, shear: &[u32], g0: &[Matrix]) -> Result<GradedEmbedding> {
    let n = shear.len();
    if g0.iter().any(|m| m.rows() != n || m.cols() != n) {
        return Err(Error::BadDimensions("g0 must consist of n x n matrices".into()));
    }
    let space = standard_space(field, shear, 0)?;
    let dp = &space.dp;
    let minus: Vec<Vector> = (0..n)
        .map(|i| {
            let mut v = vec![0; space.dim()];
            v[i * dp.dim() + dp.one()] = 1;
            v
        })
        .collect();
    let zero: Vec<Vector> = g0.iter().map(|a| linear_field(&space, a)).collect();
    let zero = Subspace::from_vectors(field, space.dim(), &zero).vectors();
    let mut comps = BTreeMap::new();
    comps.insert(-1, minus);
    comps.insert(0, zero);
    GradedEmbedding::new(space, comps)
}
