//! Vector fields on `O(m; N | n)` and the families vect, svect, h_B, k.

use std::collections::BTreeMap;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::ffield::{Fe, Field};
use crate::linalg::{axpy, is_zero, kernel, Matrix, Vector};
use crate::superalg::{Parity, Split, SuperAlgebra};

use super::divided::DividedPowers;

/// `vect(m; N | n)` as a graded space: a field `sum f_k d_k` is stored as
/// the concatenation of its components `f_k = D(u_k)`.
#[derive(Debug, Clone)]
pub struct FieldSpace {
    pub dp: Arc<DividedPowers>,
    /// Degree of each indeterminate (even ones first).
    pub weights: Vec<i64>,
}

impl FieldSpace {
    pub fn new(dp: DividedPowers, weights: Option<Vec<i64>>) -> Result<FieldSpace> {
        let n = dp.n_vars();
        let weights = weights.unwrap_or_else(|| vec![1; n]);
        if weights.len() != n {
            return Err(Error::BadParams(format!("expected {n} weights")));
        }
        Ok(FieldSpace { dp: Arc::new(dp), weights })
    }

    pub fn field(&self) -> &Field {
        self.dp.field()
    }
    pub fn n_vars(&self) -> usize {
        self.dp.n_vars()
    }
    pub fn dim(&self) -> usize {
        self.n_vars() * self.dp.dim()
    }

    fn var_odd(&self, k: usize) -> bool {
        k >= self.dp.n_even()
    }

    pub fn component<'a>(&self, d: &'a [Fe], k: usize) -> &'a [Fe] {
        let o = self.dp.dim();
        &d[k * o..(k + 1) * o]
    }

    /// Field `f d_k` for a basis monomial `f`.
    pub fn unit_field(&self, mono: usize, k: usize) -> Vector {
        crate::linalg::unit(self.dim(), k * self.dp.dim() + mono)
    }

    pub fn from_components(&self, comps: &[Vector]) -> Vector {
        comps.concat()
    }

    fn entry_parity(&self, idx: usize) -> Parity {
        let o = self.dp.dim();
        let odd = self.dp.is_odd(idx % o) != self.var_odd(idx / o);
        if odd {
            Parity::Odd
        } else {
            Parity::Even
        }
    }

    pub fn entry_degree(&self, idx: usize) -> i64 {
        let o = self.dp.dim();
        self.dp.degree(idx % o, &self.weights) - self.weights[idx / o]
    }

    pub fn parity_of(&self, d: &[Fe]) -> Option<Parity> {
        uniform(d, |i| self.entry_parity(i))
    }

    pub fn degree_of(&self, d: &[Fe]) -> Option<i64> {
        uniform(d, |i| self.entry_degree(i))
    }

    /// Degree of a field under other weights.
    pub fn degree_with(&self, d: &[Fe], weights: &[i64]) -> Option<i64> {
        let o = self.dp.dim();
        uniform(d, |i| self.dp.degree(i % o, weights) - weights[i / o])
    }

    /// `D(f) = sum_k D_k d_k(f)`.
    pub fn apply(&self, d: &[Fe], f: &[Fe]) -> Vector {
        let fld = self.field();
        let mut out = vec![0; self.dp.dim()];
        for k in 0..self.n_vars() {
            let c = self.component(d, k);
            if is_zero(c) {
                continue;
            }
            let df = self.dp.deriv(k, f);
            if is_zero(&df) {
                continue;
            }
            axpy(fld, &mut out, 1, &self.dp.mul(c, &df));
        }
        out
    }

    fn split(&self, d: &[Fe]) -> [(Vector, Parity); 2] {
        let mut ev = d.to_vec();
        let mut od = d.to_vec();
        for i in 0..d.len() {
            if self.entry_parity(i).is_odd() {
                ev[i] = 0;
            } else {
                od[i] = 0;
            }
        }
        [(ev, Parity::Even), (od, Parity::Odd)]
    }

    pub fn bracket(&self, x: &[Fe], y: &[Fe]) -> Vector {
        let fld = self.field();
        let mut out = vec![0; self.dim()];
        for (a, pa) in self.split(x) {
            if is_zero(&a) {
                continue;
            }
            for (b, pb) in self.split(y) {
                if is_zero(&b) {
                    continue;
                }
                let sign = if pa.is_odd() && pb.is_odd() { 1 } else { fld.neg(1) };
                for k in 0..self.n_vars() {
                    let ab = self.apply(&a, self.component(&b, k));
                    let ba = self.apply(&b, self.component(&a, k));
                    let o = self.dp.dim();
                    let slot = &mut out[k * o..(k + 1) * o];
                    axpy(fld, slot, 1, &ab);
                    axpy(fld, slot, sign, &ba);
                }
            }
        }
        out
    }

    /// `D^2` for an odd field (characteristic 2).
    pub fn square(&self, d: &[Fe]) -> Vector {
        (0..self.n_vars()).flat_map(|k| self.apply(d, self.component(d, k))).collect()
    }

    /// Multiply every component by a function.
    pub fn times(&self, f: &[Fe], d: &[Fe]) -> Vector {
        (0..self.n_vars()).flat_map(|k| self.dp.mul(f, self.component(d, k))).collect()
    }

    pub fn var_name(&self, k: usize) -> String {
        let m = self.dp.n_even();
        if k < m {
            format!("d{}", k + 1)
        } else {
            format!("dt{}", k - m + 1)
        }
    }

    pub fn field_name(&self, d: &[Fe]) -> String {
        let o = self.dp.dim();
        let fld = self.field();
        let terms: Vec<String> = d
            .iter()
            .enumerate()
            .filter(|(_, &c)| c != 0)
            .map(|(i, &c)| {
                let mono = self.dp.monomial_name(i % o);
                let coef = if c == 1 { String::new() } else { format!("{}*", fld.render(c)) };
                if mono == "1" {
                    format!("{coef}{}", self.var_name(i / o))
                } else {
                    format!("{coef}{mono}*{}", self.var_name(i / o))
                }
            })
            .collect();
        terms.join("+")
    }

    /// Unit fields grouped by (degree, parity).
    pub fn graded_units(&self) -> BTreeMap<(i64, bool), Vec<Vector>> {
        let mut out: BTreeMap<(i64, bool), Vec<Vector>> = BTreeMap::new();
        for i in 0..self.dim() {
            out.entry((self.entry_degree(i), self.entry_parity(i).is_odd()))
                .or_default()
                .push(crate::linalg::unit(self.dim(), i));
        }
        out
    }

    /// Homogeneous basis of the kernel of a linear map, block by block.
    pub fn graded_kernel(&self, map: impl Fn(&Vector) -> Vector + Sync) -> Vec<Vector> {
        let mut out = Vec::new();
        for (_, units) in self.graded_units() {
            let images: Vec<Vector> = crate::par::map_slice(&units, &map);
            let rows = images.first().map_or(0, |v| v.len());
            if rows == 0 {
                out.extend(units);
                continue;
            }
            let m = Matrix::from_cols(self.field(), rows, &images);
            for c in kernel(&m).vectors() {
                let mut v = vec![0; self.dim()];
                for (u, &ci) in units.iter().zip(&c) {
                    axpy(self.field(), &mut v, ci, u);
                }
                out.push(v);
            }
        }
        out
    }

    /// The subalgebra of fields spanned by `fields`.
    pub fn algebra(&self, fields: &[Vector], names: Vec<String>) -> Result<SuperAlgebra> {
        let parity: Vec<Parity> = fields
            .iter()
            .map(|v| self.parity_of(v).ok_or(Error::NotHomogeneous))
            .collect::<Result<_>>()?;
        let degrees: Option<Vec<i64>> = fields.iter().map(|v| self.degree_of(v)).collect();
        let sq = |v: &Vector| self.square(v);
        SuperAlgebra::from_realization(
            self.field(),
            names,
            parity,
            degrees,
            fields,
            |a, b| self.bracket(a, b),
            (self.field().p() == 2).then_some(sq),
        )
    }
}

fn uniform<T: PartialEq>(d: &[Fe], f: impl Fn(usize) -> T) -> Option<T> {
    let mut found = None;
    for (i, &c) in d.iter().enumerate() {
        if c != 0 {
            let t = f(i);
            match &found {
                None => found = Some(t),
                Some(s) if *s != t => return None,
                _ => {}
            }
        }
    }
    found
}

/// A vectorial (super)algebra together with its realization.
#[derive(Debug, Clone)]
pub struct Vectorial {
    pub family: String,
    pub space: FieldSpace,
    pub fields: Vec<Vector>,
    pub algebra: SuperAlgebra,
}

impl Vectorial {
    fn build(family: &str, space: FieldSpace, mut fields: Vec<Vector>, names: Option<Vec<String>>) -> Result<Vectorial> {
        let mut names = names.unwrap_or_else(|| fields.iter().map(|v| space.field_name(v)).collect());
        // sort by (degree, parity) keeping names aligned
        let mut order: Vec<usize> = (0..fields.len()).collect();
        order.sort_by_key(|&i| {
            (
                space.degree_of(&fields[i]).unwrap_or(0),
                space.parity_of(&fields[i]).is_some_and(|p| p.is_odd()),
            )
        });
        fields = order.iter().map(|&i| fields[i].clone()).collect();
        names = order.iter().map(|&i| names[i].clone()).collect();
        let algebra = space.algebra(&fields, names)?;
        Ok(Vectorial {
            family: family.into(),
            space,
            fields,
            algebra,
        })
    }

    /// Z/2-split by the parity of degrees under integer weights.
    pub fn split_by_weights(&self, weights: &[i64]) -> Result<Split> {
        let minus = self
            .fields
            .iter()
            .map(|v| {
                let par = uniform(v, |i| {
                    let o = self.space.dp.dim();
                    (self.space.dp.degree(i % o, weights) - weights[i / o]).rem_euclid(2)
                });
                par.map(|d| d == 1).ok_or_else(|| Error::BadSplit("basis field not homogeneous mod 2".into()))
            })
            .collect::<Result<Vec<bool>>>()?;
        Ok(Split::new(minus))
    }
}

pub fn vect(field: &Field, shear: &[u32], n_odd: usize, weights: Option<Vec<i64>>) -> Result<Vectorial> {
    let space = FieldSpace::new(DividedPowers::new(field, shear, n_odd)?, weights)?;
    let fields: Vec<Vector> = (0..space.dim()).map(|i| crate::linalg::unit(space.dim(), i)).collect();
    Vectorial::build("vect", space, fields, None)
}

/// Divergence-free fields.
pub fn svect(field: &Field, shear: &[u32], n_odd: usize, weights: Option<Vec<i64>>) -> Result<Vectorial> {
    let space = FieldSpace::new(DividedPowers::new(field, shear, n_odd)?, weights)?;
    let fields = space.graded_kernel(|d| divergence(&space, d));
    Vectorial::build("svect", space, fields, None)
}

pub fn divergence(space: &FieldSpace, d: &[Fe]) -> Vector {
    let fld = space.field();
    let dp = &space.dp;
    let mut out = vec![0; dp.dim()];
    for k in 0..space.n_vars() {
        let comp = space.component(d, k);
        for (i, &c) in comp.iter().enumerate().filter(|(_, &c)| c != 0) {
            if let Some((e, j)) = dp.deriv_monomial(k, i) {
                let odd = space.var_odd(k) && dp.is_odd(i);
                let s = if odd { fld.neg(1) } else { 1 };
                out[j] = fld.add(out[j], fld.mul(s, fld.mul(c, e)));
            }
        }
    }
    out
}

/// Form used by the Hamiltonian family.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Form {
    I,
    Pi,
}

fn form_matrix(field: &Field, form: Form, m: usize) -> Result<Matrix> {
    match form {
        // symmetric, so a Poisson bracket only when p = 2
        Form::I if field.p() != 2 => Err(Error::WrongCharacteristic { expected: 2, found: field.p() }),
        Form::I => Ok(Matrix::identity(field, m)),
        Form::Pi => {
            if m % 2 != 0 {
                return Err(Error::BadParams("h_Pi needs an even number of indeterminates".into()));
            }
            let k = m / 2;
            let minus = field.neg(1);
            Ok(Matrix::from_fn(field, m, m, |i, j| {
                if i + k == j {
                    1
                } else if j + k == i {
                    minus
                } else {
                    0
                }
            }))
        }
    }
}

/// `H_f` with `H_f(g) = sum B_ij d_i f d_j g`.
pub fn hamiltonian_field(space: &FieldSpace, b: &Matrix, f: &[Fe]) -> Vector {
    let fld = space.field();
    let m = b.rows();
    let derivs: Vec<Vector> = (0..m).map(|i| space.dp.deriv(i, f)).collect();
    let mut comps = Vec::with_capacity(m);
    for j in 0..m {
        let mut c = vec![0; space.dp.dim()];
        for (i, di) in derivs.iter().enumerate() {
            axpy(fld, &mut c, b.get(i, j), di);
        }
        comps.push(c);
    }
    comps.concat()
}

/// `h_B(m; N)`: Hamiltonian fields of nonconstant generating functions.
pub fn h(field: &Field, form: Form, shear: &[u32], weights: Option<Vec<i64>>) -> Result<Vectorial> {
    let dp = DividedPowers::new(field, shear, 0)?;
    let b = form_matrix(field, form, shear.len())?;
    let space = FieldSpace::new(dp, weights)?;
    let one = space.dp.one();
    let mut fields = Vec::new();
    let mut names = Vec::new();
    for i in (0..space.dp.dim()).filter(|&i| i != one) {
        fields.push(hamiltonian_field(&space, &b, &space.dp.unit(i)));
        names.push(format!("H({})", space.dp.monomial_name(i)));
    }
    let fam = match form {
        Form::I => "h_I",
        Form::Pi => "h_Pi",
    };
    Vectorial::build(fam, space, fields, Some(names))
}

/// Contact fields on `p_1..p_m, q_1..q_m, t | xi_1..xi_r` preserving the
/// distribution of `dt + sum p_i dq_i + sum xi_j dxi_j`; `deg t = 2`.
/// Odd indeterminates are supported for `p = 2` only.
pub fn k_contact(field: &Field, shear: &[u32], n_odd: usize) -> Result<Vectorial> {
    let n_even = shear.len();
    if n_even % 2 != 1 {
        return Err(Error::BadParams("k needs an odd number of even indeterminates".into()));
    }
    if n_odd > 0 && field.p() != 2 {
        return Err(Error::BadParams("k with odd indeterminates is built for p = 2 only".into()));
    }
    let m = n_even / 2;
    let t = n_even - 1;
    let n = n_even + n_odd;
    let mut weights = vec![1; n];
    weights[t] = 2;
    let space = FieldSpace::new(DividedPowers::new(field, shear, n_odd)?, Some(weights))?;
    let dp = space.dp.clone();
    let fld = field.clone();
    // coefficients a_j of the form
    let coeffs: Vec<Vector> = (0..n)
        .map(|j| {
            if j == t {
                dp.unit(dp.one())
            } else if j > t || (j >= m && j < t) {
                let c = if j > t { j } else { j - m };
                dp.unit(dp.coordinate(c))
            } else {
                vec![0; dp.dim()]
            }
        })
        .collect();
    let lie_coeffs = |d: &Vector| -> Vec<Vector> {
        (0..n)
            .map(|j| {
                let mut c = space.apply(d, &coeffs[j]);
                for (k, ak) in coeffs.iter().enumerate() {
                    if is_zero(ak) {
                        continue;
                    }
                    let djk = dp.deriv(j, space.component(d, k));
                    axpy(&fld, &mut c, 1, &dp.mul(ak, &djk));
                }
                c
            })
            .collect()
    };
    let fields = space.graded_kernel(|d| {
        let c = lie_coeffs(d);
        let ct = &c[t];
        let mut out = Vec::new();
        for j in (0..n).filter(|&j| j != t) {
            let mut r = c[j].clone();
            axpy(&fld, &mut r, fld.neg(1), &dp.mul(ct, &coeffs[j]));
            out.extend(r);
        }
        out
    });
    Vectorial::build("k", space, fields, None)
}

/// `(1 - xbar) g` with `xbar` the product of top divided powers.
pub fn deform_onebarx(g: &Vectorial) -> Result<Vectorial> {
    let dp = &g.space.dp;
    if dp.n_even() == 0 {
        return Err(Error::NotVectorial);
    }
    let fld = g.space.field();
    let mut u = dp.unit(dp.one());
    u[dp.top()] = fld.sub(u[dp.top()], 1);
    let fields: Vec<Vector> = g.fields.iter().map(|d| g.space.times(&u, d)).collect();
    let names: Vec<String> = g.algebra.names().iter().map(|s| format!("(1-xbar)({s})")).collect();
    // the deform is filtered, not graded
    let parity: Vec<Parity> = fields
        .iter()
        .map(|v| g.space.parity_of(v).ok_or(Error::NotHomogeneous))
        .collect::<Result<_>>()?;
    let sq = |v: &Vector| g.space.square(v);
    let algebra = SuperAlgebra::from_realization(
        fld,
        names,
        parity,
        None,
        &fields,
        |a, b| g.space.bracket(a, b),
        (fld.p() == 2).then_some(sq),
    )?;
    Ok(Vectorial {
        family: format!("(1-xbar){}", g.family),
        space: g.space.clone(),
        fields,
        algebra,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ffield::prime_field;

    #[test]
    fn vect_dims_and_grading() {
        let f = prime_field(2).unwrap();
        let v1 = vect(&f, &[1], 0, None).unwrap();
        assert_eq!(v1.algebra.dim(), 2);
        let v2 = vect(&f, &[1, 1], 0, None).unwrap();
        assert_eq!(v2.algebra.dim(), 8);
        let d = v2.algebra.degrees().unwrap();
        let count = |k| d.iter().filter(|&&x| x == k).count();
        assert_eq!((count(-1), count(0), count(1)), (2, 4, 2));
        assert!(v2.algebra.check_axioms().passed());
    }

    #[test]
    fn super_vect_axioms() {
        for p in [2, 3] {
            let f = prime_field(p).unwrap();
            let g = vect(&f, &[1], 1, None).unwrap();
            assert!(g.algebra.check_axioms().passed(), "p = {p}");
        }
    }

    #[test]
    fn hamiltonian_and_contact_close() {
        let f = prime_field(2).unwrap();
        let hi = h(&f, Form::I, &[1, 1, 1], None).unwrap();
        assert_eq!(hi.algebra.dim(), 7);
        assert!(hi.algebra.check_axioms().passed());
        let k3 = k_contact(&prime_field(3).unwrap(), &[1, 1, 1], 0).unwrap();
        assert!(k3.algebra.check_axioms().passed());
        assert_eq!(k3.algebra.dim(), 27);
    }

    #[test]
    fn deform_of_vect1() {
        let f = prime_field(2).unwrap();
        let g = vect(&f, &[1], 0, None).unwrap();
        let d = deform_onebarx(&g).unwrap();
        assert_eq!(d.algebra.dim(), 2);
        assert!(d.algebra.check_axioms().passed());
        let dd = deform_onebarx(&d).unwrap();
        assert_eq!(dd.algebra.dim(), 2);
    }

    #[test]
    fn contact_with_odd_indeterminate() {
        let f = prime_field(2).unwrap();
        let k = k_contact(&f, &[1], 1).unwrap();
        assert!(k.algebra.check_axioms().passed());
        // t1*dt1 preserves dt + t1 dt1 outright when p = 2
        assert_eq!(k.algebra.dim(), 5);
        assert_eq!(k.algebra.degrees().unwrap(), &[-2, -1, 0, 1, 2]);
    }
}
