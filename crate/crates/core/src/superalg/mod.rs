//! Lie (super)algebras given by structure constants.
//!
//! Basis vectors carry a parity and optionally an integer degree. Brackets
//! are stored sparsely for every ordered pair; in characteristic 2 odd basis
//! vectors additionally carry a square.

mod ideal;
mod simple;

use std::collections::BTreeMap;
use std::fmt;
use std::sync::OnceLock;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::ffield::{Fe, Field, FieldCtx};
use crate::linalg::{axpy, is_zero, Coordinatizer, Matrix, Subspace, Vector};
use crate::par;

pub use ideal::{
    bracket_span, center, centralizer, derived, derived_series, is_ideal, quotient, spin_ideal, IdealMode, Quotient,
};
pub use simple::{is_simple, SimplicityOptions, SimplicityVerdict};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    pub fn add(self, other: Parity) -> Parity {
        if self == other {
            Parity::Even
        } else {
            Parity::Odd
        }
    }
    pub fn is_odd(self) -> bool {
        self == Parity::Odd
    }
}

/// Sparse vector: `(index, nonzero coefficient)` pairs sorted by index.
pub type Sparse = Vec<(usize, Fe)>;

fn to_sparse(v: &[Fe]) -> Sparse {
    v.iter().enumerate().filter(|(_, &c)| c != 0).map(|(i, &c)| (i, c)).collect()
}

#[derive(Clone)]
pub struct SuperAlgebra {
    field: Field,
    names: Vec<String>,
    parity: Vec<Parity>,
    degrees: Option<Vec<i64>>,
    table: Vec<Sparse>,
    squares: Vec<Sparse>,
    ad_cache: OnceLock<Vec<Matrix>>,
}

impl fmt::Debug for SuperAlgebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SuperAlgebra({}|{} over {:?}; {:?})", self.dim_even(), self.dim_odd(), self.field, self.names)
    }
}

/// Collects structure constants before validation.
#[derive(Clone)]
pub struct AlgebraBuilder {
    field: Field,
    names: Vec<String>,
    parity: Vec<Parity>,
    degrees: Option<Vec<i64>>,
    brackets: BTreeMap<(usize, usize), Vector>,
    squares: BTreeMap<usize, Vector>,
}

impl AlgebraBuilder {
    pub fn new(field: &Field) -> AlgebraBuilder {
        AlgebraBuilder {
            field: field.clone(),
            names: Vec::new(),
            parity: Vec::new(),
            degrees: None,
            brackets: BTreeMap::new(),
            squares: BTreeMap::new(),
        }
    }

    pub fn basis(mut self, names: Vec<String>, parity: Vec<Parity>) -> Self {
        self.names = names;
        self.parity = parity;
        self
    }

    pub fn degrees(mut self, degrees: Option<Vec<i64>>) -> Self {
        self.degrees = degrees;
        self
    }

    pub fn dim(&self) -> usize {
        self.names.len()
    }

    /// Adds `c * v` to `[b_i, b_j]`.
    pub fn add_bracket(&mut self, i: usize, j: usize, v: &[Fe]) {
        let n = self.dim();
        let f = self.field.clone();
        let e = self.brackets.entry((i, j)).or_insert_with(|| vec![0; n]);
        axpy(&f, e, 1, v);
    }

    pub fn set_bracket(&mut self, i: usize, j: usize, v: Vector) {
        self.brackets.insert((i, j), v);
    }

    pub fn set_square(&mut self, i: usize, v: Vector) {
        self.squares.insert(i, v);
    }

    pub fn build(self) -> Result<SuperAlgebra> {
        let f = self.field.clone();
        let n = self.names.len();
        let p = f.p();
        if self.parity.len() != n {
            return Err(Error::BadDimensions(format!("{} names but {} parities", n, self.parity.len())));
        }
        if let Some(d) = &self.degrees {
            if d.len() != n {
                return Err(Error::BadDimensions(format!("{} names but {} degrees", n, d.len())));
            }
        }
        let mut dense: Vec<Option<Vector>> = vec![None; n * n];
        for (&(i, j), v) in &self.brackets {
            if i >= n || j >= n || v.len() != n || v.iter().any(|&c| c >= f.order()) {
                return Err(Error::BadDimensions(format!("bracket entry ({i},{j})")));
            }
            let want = self.parity[i].add(self.parity[j]);
            if let Some(k) = (0..n).find(|&k| v[k] != 0 && self.parity[k] != want) {
                return Err(Error::ParityViolation(format!(
                    "[{}, {}] has a component along {}",
                    self.names[i], self.names[j], self.names[k]
                )));
            }
            if i == j && !is_zero(v) && (p == 2 || !self.parity[i].is_odd()) {
                return Err(Error::SymmetryViolation(format!(
                    "[{0}, {0}] must vanish",
                    self.names[i]
                )));
            }
            let mirrored: Vector = if p == 2 || (self.parity[i].is_odd() && self.parity[j].is_odd()) {
                v.clone()
            } else {
                v.iter().map(|&c| f.neg(c)).collect()
            };
            match &dense[j * n + i] {
                Some(existing) if *existing != mirrored => {
                    return Err(Error::SymmetryViolation(format!(
                        "[{}, {}] and [{}, {}] disagree",
                        self.names[i], self.names[j], self.names[j], self.names[i]
                    )))
                }
                _ => {}
            }
            dense[i * n + j] = Some(v.clone());
            dense[j * n + i] = Some(mirrored);
        }
        let mut squares = vec![Sparse::new(); n];
        for (&i, v) in &self.squares {
            if p != 2 {
                return Err(Error::WrongCharacteristic { expected: 2, found: p });
            }
            if i >= n || v.len() != n {
                return Err(Error::BadDimensions(format!("square entry {i}")));
            }
            if !self.parity[i].is_odd() {
                return Err(Error::ParityViolation(format!("square of even {}", self.names[i])));
            }
            if let Some(k) = (0..n).find(|&k| v[k] != 0 && self.parity[k].is_odd()) {
                return Err(Error::ParityViolation(format!(
                    "{}^2 has a component along odd {}",
                    self.names[i], self.names[k]
                )));
            }
            squares[i] = to_sparse(v);
        }
        let table: Vec<Sparse> = dense
            .into_iter()
            .map(|e| e.map(|v| to_sparse(&v)).unwrap_or_default())
            .collect();
        let g = SuperAlgebra {
            field: f,
            names: self.names,
            parity: self.parity,
            degrees: self.degrees,
            table,
            squares,
            ad_cache: OnceLock::new(),
        };
        g.check_grading()?;
        Ok(g)
    }
}

impl SuperAlgebra {
    pub fn builder(field: &Field) -> AlgebraBuilder {
        AlgebraBuilder::new(field)
    }

    /// Structure constants of a subspace-with-basis inside some realization.
    ///
    /// `basis` is a list of independent vectors in an ambient space where
    /// `bracket` (and `square` for odd vectors when `p = 2`) can be computed;
    /// results must lie in the span of `basis`.
    pub fn from_realization<B, S>(
        field: &Field,
        names: Vec<String>,
        parity: Vec<Parity>,
        degrees: Option<Vec<i64>>,
        basis: &[Vector],
        bracket: B,
        square: Option<S>,
    ) -> Result<SuperAlgebra>
    where
        B: Fn(&Vector, &Vector) -> Vector + Sync + Send,
        S: Fn(&Vector) -> Vector + Sync + Send,
    {
        let n = basis.len();
        let ambient = basis.first().map_or(0, |v| v.len());
        let coord = Coordinatizer::new(field, ambient, basis)?;
        let rows: Vec<Result<Vec<(usize, usize, Vector)>>> = par::map_range(n, |i| {
            let mut out = Vec::new();
            for j in i..n {
                let w = bracket(&basis[i], &basis[j]);
                if is_zero(&w) {
                    continue;
                }
                let c = coord.coords(&w).ok_or_else(|| {
                    Error::BadDimensions(format!("[{}, {}] leaves the span", names[i], names[j]))
                })?;
                out.push((i, j, c));
            }
            Ok(out)
        });
        let mut b = AlgebraBuilder::new(field).basis(names.clone(), parity.clone()).degrees(degrees);
        for r in rows {
            for (i, j, c) in r? {
                b.set_bracket(i, j, c);
            }
        }
        if let Some(sq) = square {
            for i in (0..n).filter(|&i| parity[i].is_odd()) {
                let w = sq(&basis[i]);
                if is_zero(&w) {
                    continue;
                }
                let c = coord
                    .coords(&w)
                    .ok_or_else(|| Error::BadDimensions(format!("{}^2 leaves the span", names[i])))?;
                b.set_square(i, c);
            }
        }
        b.build()
    }

    pub fn field(&self) -> &Field {
        &self.field
    }
    pub fn p(&self) -> u32 {
        self.field.p()
    }
    pub fn dim(&self) -> usize {
        self.names.len()
    }
    pub fn dim_even(&self) -> usize {
        self.parity.iter().filter(|p| !p.is_odd()).count()
    }
    pub fn dim_odd(&self) -> usize {
        self.dim() - self.dim_even()
    }
    pub fn names(&self) -> &[String] {
        &self.names
    }
    pub fn parity(&self) -> &[Parity] {
        &self.parity
    }
    pub fn parity_of_basis(&self, i: usize) -> Parity {
        self.parity[i]
    }
    pub fn degrees(&self) -> Option<&[i64]> {
        self.degrees.as_deref()
    }
    pub fn is_lie(&self) -> bool {
        self.dim_odd() == 0
    }
    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }
    pub fn even_indices(&self) -> Vec<usize> {
        (0..self.dim()).filter(|&i| !self.parity[i].is_odd()).collect()
    }
    pub fn odd_indices(&self) -> Vec<usize> {
        (0..self.dim()).filter(|&i| self.parity[i].is_odd()).collect()
    }

    /// Sparse `[b_i, b_j]`.
    pub fn bracket_basis(&self, i: usize, j: usize) -> &Sparse {
        &self.table[i * self.dim() + j]
    }

    /// Sparse `b_i^2` (odd `b_i`, `p = 2`); empty otherwise.
    pub fn square_basis(&self, i: usize) -> &Sparse {
        &self.squares[i]
    }

    pub fn has_squares(&self) -> bool {
        self.squares.iter().any(|s| !s.is_empty())
    }

    pub fn unit(&self, i: usize) -> Vector {
        crate::linalg::unit(self.dim(), i)
    }

    pub fn zero_vector(&self) -> Vector {
        vec![0; self.dim()]
    }

    /// Bilinear bracket of two coefficient vectors.
    pub fn bracket(&self, x: &[Fe], y: &[Fe]) -> Vector {
        let f = &*self.field;
        let n = self.dim();
        let mut out = vec![0; n];
        for (i, &a) in x.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in y.iter().enumerate() {
                if b == 0 {
                    continue;
                }
                let ab = f.mul(a, b);
                for &(k, c) in &self.table[i * n + j] {
                    out[k] = f.add(out[k], f.mul(ab, c));
                }
            }
        }
        out
    }

    /// `[b_i, y]`.
    pub fn bracket_with_basis(&self, i: usize, y: &[Fe]) -> Vector {
        let f = &*self.field;
        let n = self.dim();
        let mut out = vec![0; n];
        for (j, &b) in y.iter().enumerate() {
            if b == 0 {
                continue;
            }
            for &(k, c) in &self.table[i * n + j] {
                out[k] = f.add(out[k], f.mul(b, c));
            }
        }
        out
    }

    pub fn is_odd_vector(&self, x: &[Fe]) -> bool {
        x.iter().enumerate().all(|(i, &c)| c == 0 || self.parity[i].is_odd())
    }

    pub fn is_even_vector(&self, x: &[Fe]) -> bool {
        x.iter().enumerate().all(|(i, &c)| c == 0 || !self.parity[i].is_odd())
    }

    /// Parity of a homogeneous nonzero vector; `None` for mixed or zero.
    pub fn parity_of(&self, x: &[Fe]) -> Option<Parity> {
        if is_zero(x) {
            None
        } else if self.is_even_vector(x) {
            Some(Parity::Even)
        } else if self.is_odd_vector(x) {
            Some(Parity::Odd)
        } else {
            None
        }
    }

    /// Even and odd components.
    pub fn split_parity(&self, x: &[Fe]) -> (Vector, Vector) {
        let mut ev = x.to_vec();
        let mut od = x.to_vec();
        for i in 0..self.dim() {
            if self.parity[i].is_odd() {
                ev[i] = 0;
            } else {
                od[i] = 0;
            }
        }
        (ev, od)
    }

    /// `x^2` for purely odd `x` in characteristic 2, expanded as
    /// `sum c_i^2 s(b_i) + sum_{i<j} c_i c_j [b_i, b_j]`.
    pub fn square(&self, x: &[Fe]) -> Result<Vector> {
        if self.p() != 2 {
            return Err(Error::WrongCharacteristic { expected: 2, found: self.p() });
        }
        if !self.is_odd_vector(x) {
            return Err(Error::NotOdd);
        }
        Ok(self.square_unchecked(x))
    }

    pub(crate) fn square_unchecked(&self, x: &[Fe]) -> Vector {
        let f = &*self.field;
        let n = self.dim();
        let mut out = vec![0; n];
        let supp: Vec<usize> = (0..n).filter(|&i| x[i] != 0).collect();
        for (a, &i) in supp.iter().enumerate() {
            let ci2 = f.mul(x[i], x[i]);
            for &(k, c) in &self.squares[i] {
                out[k] = f.add(out[k], f.mul(ci2, c));
            }
            for &j in &supp[a + 1..] {
                let cij = f.mul(x[i], x[j]);
                for &(k, c) in &self.table[i * n + j] {
                    out[k] = f.add(out[k], f.mul(cij, c));
                }
            }
        }
        out
    }

    /// Adjoint matrices of the basis vectors (column `j` of `ad(i)` is
    /// `[b_i, b_j]`), built once.
    pub fn ad_matrices(&self) -> &[Matrix] {
        self.ad_cache.get_or_init(|| {
            let n = self.dim();
            par::map_range(n, |i| {
                let mut m = Matrix::zeros(&self.field, n, n);
                for j in 0..n {
                    for &(k, c) in &self.table[i * n + j] {
                        m.set(k, j, c);
                    }
                }
                m
            })
        })
    }

    pub fn ad(&self, i: usize) -> &Matrix {
        &self.ad_matrices()[i]
    }

    /// `ad_x` for an arbitrary vector.
    pub fn ad_of(&self, x: &[Fe]) -> Matrix {
        let n = self.dim();
        let mut m = Matrix::zeros(&self.field, n, n);
        for j in 0..n {
            let col = self.bracket(x, &self.unit(j));
            for (k, &c) in col.iter().enumerate() {
                m.set(k, j, c);
            }
        }
        m
    }

    pub fn is_abelian(&self) -> bool {
        self.table.iter().all(|e| e.is_empty())
    }

    pub fn render_vector(&self, x: &[Fe]) -> String {
        render_in(&self.field, &self.names, x)
    }

    fn check_grading(&self) -> Result<()> {
        let Some(d) = &self.degrees else { return Ok(()) };
        let n = self.dim();
        for i in 0..n {
            for j in 0..n {
                for &(k, _) in &self.table[i * n + j] {
                    if d[k] != d[i] + d[j] {
                        return Err(Error::IncompatibleGrading(format!(
                            "[{}, {}] meets {} of degree {}",
                            self.names[i], self.names[j], self.names[k], d[k]
                        )));
                    }
                }
            }
            for &(k, _) in &self.squares[i] {
                if d[k] != 2 * d[i] {
                    return Err(Error::IncompatibleGrading(format!(
                        "{}^2 meets {} of degree {}",
                        self.names[i], self.names[k], d[k]
                    )));
                }
            }
        }
        Ok(())
    }

    /// Same constants with a different (or no) Z-grading.
    pub fn with_degrees(&self, degrees: Option<Vec<i64>>) -> Result<SuperAlgebra> {
        let mut g = self.clone();
        g.degrees = degrees;
        g.ad_cache = OnceLock::new();
        g.check_grading()?;
        Ok(g)
    }

    pub fn with_names(&self, names: Vec<String>) -> SuperAlgebra {
        assert_eq!(names.len(), self.dim());
        let mut g = self.clone();
        g.names = names;
        g
    }

    /// Re-expresses the constants as a builder (used when editing).
    pub fn to_builder(&self) -> AlgebraBuilder {
        let n = self.dim();
        let mut b = AlgebraBuilder::new(&self.field)
            .basis(self.names.clone(), self.parity.clone())
            .degrees(self.degrees.clone());
        for i in 0..n {
            for j in i..n {
                let s = &self.table[i * n + j];
                if !s.is_empty() {
                    let mut v = vec![0; n];
                    for &(k, c) in s {
                        v[k] = c;
                    }
                    b.set_bracket(i, j, v);
                }
            }
            if !self.squares[i].is_empty() {
                let mut v = vec![0; n];
                for &(k, c) in &self.squares[i] {
                    v[k] = c;
                }
                b.set_square(i, v);
            }
        }
        b
    }

    /// Induced structure on a subalgebra, using its canonical (RREF) basis.
    pub fn subalgebra(&self, u: &Subspace, prefix: &str) -> Result<SuperAlgebra> {
        let basis = u.vectors();
        let parity: Vec<Parity> = basis
            .iter()
            .map(|v| self.parity_of(v).ok_or(Error::NotHomogeneous))
            .collect::<Result<_>>()?;
        let degrees = self.degrees.as_ref().and_then(|d| {
            basis
                .iter()
                .map(|v| {
                    let mut it = v.iter().enumerate().filter(|(_, &c)| c != 0).map(|(i, _)| d[i]);
                    let first = it.next()?;
                    it.all(|x| x == first).then_some(first)
                })
                .collect::<Option<Vec<i64>>>()
        });
        let names: Vec<String> = (0..basis.len())
            .map(|i| {
                let supp: Vec<usize> = (0..self.dim()).filter(|&k| basis[i][k] != 0).collect();
                if supp.len() == 1 && basis[i][supp[0]] == 1 {
                    self.names[supp[0]].clone()
                } else {
                    format!("{prefix}{i}")
                }
            })
            .collect();
        let sq = |v: &Vector| self.square_unchecked(v);
        SuperAlgebra::from_realization(
            &self.field,
            names,
            parity,
            degrees,
            &basis,
            |a, b| self.bracket(a, b),
            (self.p() == 2).then_some(sq),
        )
    }

    /// Desuperization: the same brackets with parity and squares forgotten.
    pub fn desuperize(&self) -> SuperAlgebra {
        let mut g = self.clone();
        if self.p() != 2 {
            // odd-odd brackets are symmetric for p > 2 and cannot be reread
            // as a Lie bracket; only characteristic 2 is meaningful here
            return g;
        }
        g.parity = vec![Parity::Even; self.dim()];
        g.squares = vec![Sparse::new(); self.dim()];
        g.ad_cache = OnceLock::new();
        g
    }

    /// Axiom check over all basis triples.
    pub fn check_axioms(&self) -> AxiomReport {
        let n = self.dim();
        let f = &*self.field;
        let p = self.p();
        let sign = |a: usize, b: usize| -> Fe {
            if p != 2 && self.parity[a].is_odd() && self.parity[b].is_odd() {
                f.neg(1)
            } else {
                1
            }
        };
        let rows: Vec<Vec<Violation>> = par::map_range(n, |i| {
            let mut out = Vec::new();
            for j in 0..n {
                // [b_i, [b_j, z]] = [[b_i, b_j], z] + s [b_j, [b_i, z]]
                let bij = self.sparse_to_dense(&self.table[i * n + j]);
                for k in 0..n {
                    let jk = self.sparse_to_dense(&self.table[j * n + k]);
                    let ik = self.sparse_to_dense(&self.table[i * n + k]);
                    let lhs = self.bracket_with_basis(i, &jk);
                    let mut rhs = self.bracket(&bij, &self.unit(k));
                    let t = self.bracket_with_basis(j, &ik);
                    axpy(f, &mut rhs, sign(i, j), &t);
                    if lhs != rhs {
                        out.push(Violation {
                            kind: ViolationKind::Jacobi,
                            basis: vec![i, j, k],
                            residual: crate::linalg::vsub(f, &lhs, &rhs),
                        });
                    }
                }
                if p == 2 && self.parity[i].is_odd() {
                    // [b_i^2, b_j] = [b_i, [b_i, b_j]]
                    let s = self.sparse_to_dense(&self.squares[i]);
                    let lhs = self.bracket(&s, &self.unit(j));
                    let ij = self.sparse_to_dense(&self.table[i * n + j]);
                    let rhs = self.bracket_with_basis(i, &ij);
                    if lhs != rhs {
                        out.push(Violation {
                            kind: ViolationKind::Square,
                            basis: vec![i, j],
                            residual: crate::linalg::vsub(f, &lhs, &rhs),
                        });
                    }
                }
            }
            if p == 3 && self.parity[i].is_odd() {
                out.extend(self.cubic_violations(i));
            }
            out
        });
        AxiomReport {
            violations: rows.into_iter().flatten().collect(),
        }
    }

    /// In characteristic 3 super Jacobi does not imply `[x,[x,x]] = 0` for
    /// odd `x`; check every coefficient of that cubic form with least index
    /// `i`.
    fn cubic_violations(&self, i: usize) -> Vec<Violation> {
        let f = &*self.field;
        let n = self.dim();
        let odd: Vec<usize> = (i..n).filter(|&k| self.parity[k].is_odd()).collect();
        let term = |a: usize, b: usize, c: usize| -> Vector {
            let bc = self.sparse_to_dense(&self.table[b * n + c]);
            self.bracket_with_basis(a, &bc)
        };
        let mut out = Vec::new();
        for (x, &j) in odd.iter().enumerate() {
            for &k in &odd[x..] {
                let idx = [i, j, k];
                let mut perms: Vec<[usize; 3]> = vec![
                    [idx[0], idx[1], idx[2]],
                    [idx[0], idx[2], idx[1]],
                    [idx[1], idx[0], idx[2]],
                    [idx[1], idx[2], idx[0]],
                    [idx[2], idx[0], idx[1]],
                    [idx[2], idx[1], idx[0]],
                ];
                perms.sort();
                perms.dedup();
                let mut acc = vec![0; n];
                for pm in perms {
                    axpy(f, &mut acc, 1, &term(pm[0], pm[1], pm[2]));
                }
                if !is_zero(&acc) {
                    out.push(Violation {
                        kind: ViolationKind::OddCube,
                        basis: idx.to_vec(),
                        residual: acc,
                    });
                }
            }
        }
        out
    }

    fn sparse_to_dense(&self, s: &Sparse) -> Vector {
        let mut v = vec![0; self.dim()];
        for &(k, c) in s {
            v[k] = c;
        }
        v
    }

    /// Z/2 labels from the degrees (true for odd degree).
    pub fn grade_mod2(&self) -> Result<Split> {
        let d = self.degrees.as_ref().ok_or(Error::NoGrading)?;
        let split = Split::new(d.iter().map(|&x| x.rem_euclid(2) == 1).collect());
        split.validate(self)?;
        Ok(split)
    }
}

pub fn render_in(field: &FieldCtx, names: &[String], x: &[Fe]) -> String {
    let terms: Vec<String> = x
        .iter()
        .enumerate()
        .filter(|(_, &c)| c != 0)
        .map(|(i, &c)| {
            if c == 1 {
                names[i].clone()
            } else {
                let s = field.render(c);
                if s.contains('+') {
                    format!("({s})*{}", names[i])
                } else {
                    format!("{s}*{}", names[i])
                }
            }
        })
        .collect();
    if terms.is_empty() {
        "0".into()
    } else {
        terms.join(" + ")
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum ViolationKind {
    Jacobi,
    Square,
    OddCube,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub kind: ViolationKind,
    pub basis: Vec<usize>,
    pub residual: Vector,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AxiomReport {
    pub violations: Vec<Violation>,
}

impl AxiomReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

/// A Z/2 split `g = g_+ (+) g_-` of the basis; `minus[i]` marks `g_-`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Split {
    minus: Vec<bool>,
}

impl Split {
    pub fn new(minus: Vec<bool>) -> Split {
        Split { minus }
    }

    pub fn trivial(n: usize) -> Split {
        Split { minus: vec![false; n] }
    }

    pub fn is_minus(&self, i: usize) -> bool {
        self.minus[i]
    }

    pub fn labels(&self) -> &[bool] {
        &self.minus
    }

    pub fn plus_indices(&self) -> Vec<usize> {
        (0..self.minus.len()).filter(|&i| !self.minus[i]).collect()
    }

    pub fn minus_indices(&self) -> Vec<usize> {
        (0..self.minus.len()).filter(|&i| self.minus[i]).collect()
    }

    /// Checks `[g_a, g_b] ⊂ g_{a+b}` and `(g_a)^2 ⊂ g_+`.
    pub fn validate(&self, g: &SuperAlgebra) -> Result<()> {
        let n = g.dim();
        if self.minus.len() != n {
            return Err(Error::BadSplit(format!("{} labels for dimension {}", self.minus.len(), n)));
        }
        for i in 0..n {
            for j in 0..n {
                let want = self.minus[i] ^ self.minus[j];
                if let Some(&(k, _)) = g.bracket_basis(i, j).iter().find(|&&(k, _)| self.minus[k] != want) {
                    return Err(Error::BadSplit(format!(
                        "[{}, {}] meets {}",
                        g.names()[i],
                        g.names()[j],
                        g.names()[k]
                    )));
                }
            }
            if let Some(&(k, _)) = g.square_basis(i).iter().find(|&&(k, _)| self.minus[k]) {
                return Err(Error::BadSplit(format!("{}^2 meets {}", g.names()[i], g.names()[k])));
            }
        }
        Ok(())
    }
}
