use crate::error::{Error, Result};
use crate::linalg::{is_zero, kernel, EchelonBuilder, Matrix, Subspace, Vector};

use super::{AlgebraBuilder, Parity, SuperAlgebra};

/// What "ideal" means in characteristic 2: the default also requires
/// closure under squares of odd elements.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum IdealMode {
    #[default]
    WithSquares,
    BracketOnly,
}

/// Smallest homogeneous subspace containing `seed` that is stable under
/// `[g, .]` and, for `p = 2` in the default mode, under squares of its odd
/// elements.
pub fn spin_ideal(g: &SuperAlgebra, seed: &Subspace, mode: IdealMode) -> Subspace {
    let vecs = seed.vectors();
    spin_vectors(g, &vecs, mode, usize::MAX).to_subspace()
}

/// Spins until closed or until the dimension reaches `stop_at`.
pub(crate) fn spin_vectors(g: &SuperAlgebra, seed: &[Vector], mode: IdealMode, stop_at: usize) -> EchelonBuilder {
    let n = g.dim();
    let squares = mode == IdealMode::WithSquares && g.p() == 2 && g.has_squares();
    let mut ech = EchelonBuilder::new(g.field(), n);
    let mut queue: Vec<Vector> = Vec::new();
    let push = |ech: &mut EchelonBuilder, queue: &mut Vec<Vector>, v: &Vector| {
        let (ev, od) = g.split_parity(v);
        for part in [ev, od] {
            if let Some(r) = ech.insert(&part) {
                queue.push(r);
            }
        }
    };
    for v in seed {
        push(&mut ech, &mut queue, v);
    }
    while let Some(v) = queue.pop() {
        if ech.dim() >= stop_at || ech.is_full() {
            break;
        }
        for i in 0..n {
            let w = g.bracket_with_basis(i, &v);
            if !is_zero(&w) {
                push(&mut ech, &mut queue, &w);
            }
        }
        if squares && g.is_odd_vector(&v) {
            let s = g.square_unchecked(&v);
            push(&mut ech, &mut queue, &s);
        }
    }
    ech
}

/// `[U, V]` as a subspace.
pub fn bracket_span(g: &SuperAlgebra, u: &Subspace, v: &Subspace) -> Subspace {
    let uv = u.vectors();
    let vv = v.vectors();
    let out: Vec<Vec<Vector>> = crate::par::map_slice(&uv, |a| vv.iter().map(|b| g.bracket(a, b)).collect());
    Subspace::from_vectors(g.field(), g.dim(), &out.concat())
}

/// `[U, U] + Span{x^2 : x in U_od}` (squares only for `p = 2`).
fn derived_step(g: &SuperAlgebra, u: &Subspace) -> Subspace {
    let mut vecs: Vec<Vector> = bracket_span(g, u, u).vectors();
    if g.p() == 2 {
        for v in u.vectors() {
            if g.parity_of(&v) == Some(Parity::Odd) {
                vecs.push(g.square_unchecked(&v));
            }
        }
    }
    Subspace::from_vectors(g.field(), g.dim(), &vecs)
}

/// `g^(0), g^(1), ...` until the series stabilizes; the last entry repeats
/// nothing (it is the stable term).
pub fn derived_series(g: &SuperAlgebra) -> Vec<Subspace> {
    let mut series = vec![Subspace::full(g.field(), g.dim())];
    loop {
        let next = derived_step(g, series.last().unwrap());
        if &next == series.last().unwrap() {
            return series;
        }
        series.push(next);
    }
}

/// `g^(i)`; `None` means the stable term.
pub fn derived(g: &SuperAlgebra, i: Option<usize>) -> Subspace {
    let series = derived_series(g);
    match i {
        Some(i) if i < series.len() => series[i].clone(),
        _ => series.last().unwrap().clone(),
    }
}

/// `{z : [z, u] = 0 for all u in U}`.
pub fn centralizer(g: &SuperAlgebra, u: &Subspace) -> Subspace {
    let n = g.dim();
    let uv = u.vectors();
    if uv.is_empty() {
        return Subspace::full(g.field(), n);
    }
    // rows of the stacked map z -> ([z, u_1], ..., [z, u_m])
    let blocks: Vec<Matrix> = crate::par::map_slice(&uv, |w| {
        let cols: Vec<Vector> = (0..n).map(|i| g.bracket_with_basis(i, w)).collect();
        Matrix::from_cols(g.field(), n, &cols)
    });
    let mut stacked = blocks[0].clone();
    for b in &blocks[1..] {
        stacked = stacked.vstack(b);
    }
    kernel(&stacked)
}

pub fn center(g: &SuperAlgebra) -> Subspace {
    centralizer(g, &Subspace::full(g.field(), g.dim()))
}

/// Whether `i` is a homogeneous ideal in the given sense.
pub fn is_ideal(g: &SuperAlgebra, i: &Subspace, mode: IdealMode) -> bool {
    let vecs = i.vectors();
    if vecs.iter().any(|v| g.parity_of(v).is_none()) {
        return false;
    }
    let closed = vecs
        .iter()
        .all(|v| (0..g.dim()).all(|b| i.contains(&g.bracket_with_basis(b, v))));
    let sq = mode == IdealMode::BracketOnly
        || g.p() != 2
        || vecs
            .iter()
            .filter(|v| g.parity_of(v) == Some(Parity::Odd))
            .all(|v| i.contains(&g.square_unchecked(v)));
    closed && sq
}

/// `g / I` on the complement spanned by non-pivot basis vectors.
pub struct Quotient {
    pub algebra: SuperAlgebra,
    /// Indices of `g`'s basis vectors that map to the quotient basis.
    pub representatives: Vec<usize>,
    ideal: Subspace,
}

impl Quotient {
    /// Image of `x` in quotient coordinates.
    pub fn project(&self, x: &[crate::ffield::Fe]) -> Vector {
        let r = self.ideal.reduce(x);
        self.representatives.iter().map(|&i| r[i]).collect()
    }

    /// A preimage of `y` (supported on the representatives).
    pub fn lift(&self, y: &[crate::ffield::Fe], ambient: usize) -> Vector {
        let mut v = vec![0; ambient];
        for (k, &i) in self.representatives.iter().enumerate() {
            v[i] = y[k];
        }
        v
    }
}

pub fn quotient(g: &SuperAlgebra, ideal: &Subspace, mode: IdealMode) -> Result<Quotient> {
    if !is_ideal(g, ideal, mode) {
        return Err(Error::NotAnIdeal);
    }
    let reps = ideal.complement_indices();
    let m = reps.len();
    let names: Vec<String> = reps.iter().map(|&i| g.names()[i].clone()).collect();
    let parity: Vec<Parity> = reps.iter().map(|&i| g.parity()[i]).collect();
    let graded = g.degrees().is_some_and(|d| {
        ideal.vectors().iter().all(|v| {
            let mut it = v.iter().enumerate().filter(|(_, &c)| c != 0).map(|(k, _)| d[k]);
            let first = it.next();
            it.all(|x| Some(x) == first)
        })
    });
    let degrees = if graded {
        g.degrees().map(|d| reps.iter().map(|&i| d[i]).collect())
    } else {
        None
    };
    let mut b = AlgebraBuilder::new(g.field()).basis(names, parity).degrees(degrees);
    let proj = |v: &Vector| -> Vector {
        let r = ideal.reduce(v);
        reps.iter().map(|&i| r[i]).collect()
    };
    for a in 0..m {
        for c in a..m {
            let w = g.bracket(&g.unit(reps[a]), &g.unit(reps[c]));
            let pw = proj(&w);
            if !is_zero(&pw) {
                b.set_bracket(a, c, pw);
            }
        }
        if g.p() == 2 && g.parity()[reps[a]].is_odd() {
            let s = g.square_unchecked(&g.unit(reps[a]));
            let ps = proj(&s);
            if !is_zero(&ps) {
                b.set_square(a, ps);
            }
        }
    }
    Ok(Quotient {
        algebra: b.build()?,
        representatives: reps,
        ideal: ideal.clone(),
    })
}
