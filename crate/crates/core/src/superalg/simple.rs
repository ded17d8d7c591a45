//! Simplicity test.
//!
//! A proper nonzero ideal is a submodule of the adjoint module for the
//! associative algebra generated by the `ad_b` and the parity projector, so
//! a MeatAxe run settles most inputs: an irreducible adjoint module proves
//! simplicity, and a submodule whose ideal closure is proper disproves it.
//! In characteristic 2 a proper submodule can still generate everything
//! once squares are added; then every nonzero ideal meets the kernel of any
//! nilpotent `ad_x`, and the vectors of that kernel are spun one by one.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::ffield::Fe;
use crate::linalg::{is_zero, kernel, EchelonBuilder, Matrix, Subspace, Vector};
use crate::par;

use super::ideal::{spin_ideal, spin_vectors, IdealMode};
use super::{Parity, SuperAlgebra};

#[derive(Debug, Clone)]
pub struct SimplicityOptions {
    pub seed: u64,
    pub max_random: usize,
    pub exhaustive_limit: u64,
    pub mode: IdealMode,
    /// Run the kernel-seed enumeration even after a Norton certificate.
    pub confirm_exhaustively: bool,
}

impl Default for SimplicityOptions {
    fn default() -> Self {
        SimplicityOptions {
            seed: 0,
            max_random: 200,
            exhaustive_limit: 1 << 20,
            mode: IdealMode::WithSquares,
            confirm_exhaustively: false,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SimplicityVerdict {
    pub simple: bool,
    /// False when the verdict rests on random sampling only.
    pub certain: bool,
    pub method: String,
    pub proper_ideal: Option<Vec<Vector>>,
    pub generator: Option<Vector>,
    pub rng_seed: u64,
    pub random_elements: usize,
    /// Element `x` whose nilpotent `ad_x` bounded the seed set.
    pub nilpotent_element: Option<Vector>,
    pub seeds_checked: u64,
}

impl SimplicityVerdict {
    fn new(seed: u64) -> Self {
        SimplicityVerdict {
            simple: false,
            certain: true,
            method: String::new(),
            proper_ideal: None,
            generator: None,
            rng_seed: seed,
            random_elements: 0,
            nilpotent_element: None,
            seeds_checked: 0,
        }
    }

    fn not_simple(mut self, method: &str, ideal: &Subspace, generator: Vector) -> Self {
        self.simple = false;
        self.certain = true;
        self.method = method.into();
        self.proper_ideal = Some(ideal.vectors());
        self.generator = Some(generator);
        self
    }
}

enum Norton {
    Irreducible,
    Submodule(Subspace, Vector),
    Undecided,
}

fn generators(g: &SuperAlgebra) -> Vec<Matrix> {
    let mut gens: Vec<Matrix> = g.ad_matrices().iter().filter(|m| !m.is_zero()).cloned().collect();
    if g.dim_odd() > 0 && g.dim_even() > 0 {
        let n = g.dim();
        gens.push(Matrix::from_fn(g.field(), n, n, |i, j| {
            u32::from(i == j && g.parity()[i] == Parity::Even)
        }));
    }
    gens
}

fn spin_under(gens: &[Matrix], seed: &[Fe], field: &crate::ffield::Field) -> EchelonBuilder {
    let n = seed.len();
    let mut ech = EchelonBuilder::new(field, n);
    let mut queue = Vec::new();
    if let Some(r) = ech.insert(seed) {
        queue.push(r);
    }
    while let Some(v) = queue.pop() {
        if ech.is_full() {
            break;
        }
        for m in gens {
            if let Some(r) = ech.insert(&m.mul_vec(&v)) {
                queue.push(r);
            }
        }
    }
    ech
}

fn norton(g: &SuperAlgebra, gens: &[Matrix], rng: &mut ChaCha8Rng, max_random: usize) -> (Norton, usize) {
    let f = g.field().clone();
    let n = g.dim();
    let tgens: Vec<Matrix> = gens.iter().map(|m| m.transpose()).collect();
    let mut pool: Vec<Matrix> = gens.to_vec();
    let ident = Matrix::identity(&f, n);
    for tries in 1..=max_random {
        let a = &pool[rng.gen_range(0..pool.len())];
        let b = &pool[rng.gen_range(0..pool.len())];
        let c = &pool[rng.gen_range(0..pool.len())];
        let theta = a.mul(b).add(&c.scale(rng.gen_range(0..f.order())));
        pool.push(theta.clone());
        for _ in 0..4 {
            let lambda = rng.gen_range(0..f.order());
            let shifted = theta.sub(&ident.scale(lambda));
            let ker = kernel(&shifted);
            if ker.is_zero() {
                continue;
            }
            for v in ker.vectors() {
                let s = spin_under(gens, &v, &f);
                if !s.is_full() {
                    return (Norton::Submodule(s.to_subspace(), v), tries);
                }
            }
            if ker.dim() == 1 {
                let kt = kernel(&shifted.transpose());
                let w = kt.vectors().remove(0);
                let s = spin_under(&tgens, &w, &f);
                if s.is_full() {
                    return (Norton::Irreducible, tries);
                }
                // annihilator of a proper dual submodule
                let ann = kernel(&Matrix::from_rows(&f, n, s.vectors()));
                let v = ann.vectors().remove(0);
                return (Norton::Submodule(ann, v), tries);
            }
        }
    }
    (Norton::Undecided, max_random)
}

fn is_nilpotent(m: &Matrix) -> bool {
    m.pow(m.rows() as u64).map(|x| x.is_zero()).unwrap_or(false)
}

/// A homogeneous `x` with `ad_x` nilpotent and kernel as small as found.
fn nilpotent_kernel(g: &SuperAlgebra, rng: &mut ChaCha8Rng) -> Option<(Vector, Subspace)> {
    let n = g.dim();
    let f = g.field().clone();
    let mut cands: Vec<Vector> = (0..n).map(|i| g.unit(i)).collect();
    if let Some(d) = g.degrees() {
        for sign in [1i64, -1] {
            for par in [Parity::Even, Parity::Odd] {
                let v: Vector = (0..n)
                    .map(|i| u32::from(d[i] * sign > 0 && g.parity()[i] == par))
                    .collect();
                cands.push(v);
            }
        }
    }
    for _ in 0..16 {
        for par in [Parity::Even, Parity::Odd] {
            let v: Vector = (0..n)
                .map(|i| if g.parity()[i] == par { rng.gen_range(0..f.order()) } else { 0 })
                .collect();
            cands.push(v);
        }
    }
    cands.retain(|v| !is_zero(v));
    let scored: Vec<Option<(usize, Subspace)>> = par::map_slice(&cands, |v| {
        let m = g.ad_of(v);
        if m.is_zero() || !is_nilpotent(&m) {
            return None;
        }
        let k = kernel(&m);
        Some((k.dim(), k))
    });
    scored
        .into_iter()
        .zip(cands)
        .filter_map(|(s, v)| s.map(|(d, k)| (d, v, k)))
        .min_by_key(|(d, _, _)| *d)
        .map(|(_, v, k)| (v, k))
}

/// Projective points of the span of `basis`: coefficient vectors whose
/// first nonzero entry is 1, enumerated by integer index.
fn projective_point(q: u64, k: usize, mut idx: u64) -> Option<Vec<Fe>> {
    let mut c = vec![0; k];
    for ci in c.iter_mut() {
        *ci = (idx % q) as Fe;
        idx /= q;
    }
    match c.iter().find(|&&x| x != 0) {
        Some(&1) => Some(c),
        _ => None,
    }
}

fn combine(g: &SuperAlgebra, basis: &[Vector], c: &[Fe]) -> Vector {
    let mut v = g.zero_vector();
    for (b, &ci) in basis.iter().zip(c) {
        crate::linalg::axpy(g.field(), &mut v, ci, b);
    }
    v
}

pub fn is_simple(g: &SuperAlgebra, opts: &SimplicityOptions) -> SimplicityVerdict {
    let n = g.dim();
    let mut verdict = SimplicityVerdict::new(opts.seed);
    if n == 0 || g.is_abelian() {
        verdict.method = "abelian".into();
        return verdict;
    }
    // cheap: ideals generated by basis vectors
    let basis_hit = par::find_first(n, |i| {
        let e = g.unit(i);
        let s = spin_vectors(g, std::slice::from_ref(&e), opts.mode, n);
        (!s.is_full()).then(|| (s.to_subspace(), e))
    });
    if let Some((ideal, e)) = basis_hit {
        return verdict.not_simple("basis-seed", &ideal, e);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    let gens = generators(g);
    let (outcome, used) = norton(g, &gens, &mut rng, opts.max_random);
    verdict.random_elements = used;
    match outcome {
        Norton::Irreducible if !opts.confirm_exhaustively => {
            verdict.simple = true;
            verdict.method = "norton".into();
            return verdict;
        }
        Norton::Submodule(sub, v) => {
            let ideal = spin_ideal(g, &sub, opts.mode);
            if !ideal.is_full() {
                return verdict.not_simple("meataxe-submodule", &ideal, v);
            }
        }
        _ => {}
    }
    exhaustive(g, opts, &mut rng, verdict)
}

fn exhaustive(g: &SuperAlgebra, opts: &SimplicityOptions, rng: &mut ChaCha8Rng, mut verdict: SimplicityVerdict) -> SimplicityVerdict {
    let n = g.dim();
    let q = g.field().order() as u64;
    let (x, ker) = match nilpotent_kernel(g, rng) {
        Some((x, k)) => (Some(x), k),
        None => (None, Subspace::full(g.field(), n)),
    };
    verdict.nilpotent_element = x;
    // kernel of a homogeneous operator is graded: seed from each half
    let vecs = ker.vectors();
    let halves: Vec<Vec<Vector>> = [Parity::Even, Parity::Odd]
        .iter()
        .map(|&par| vecs.iter().filter(|v| g.parity_of(v) == Some(par)).cloned().collect())
        .collect();
    debug_assert_eq!(halves[0].len() + halves[1].len(), vecs.len());
    let total: u64 = halves.iter().map(|h| q.saturating_pow(h.len() as u32)).sum();
    if total <= opts.exhaustive_limit {
        for half in &halves {
            let k = half.len();
            let count = q.pow(k as u32);
            let hit = par::find_first(count as usize, |idx| {
                let c = projective_point(q, k, idx as u64)?;
                let v = combine(g, half, &c);
                let s = spin_vectors(g, std::slice::from_ref(&v), opts.mode, n);
                (!s.is_full()).then(|| (s.to_subspace(), v))
            });
            verdict.seeds_checked += if q > 1 { (count - 1) / (q - 1) } else { 0 };
            if let Some((ideal, v)) = hit {
                return verdict.not_simple("exhaustive", &ideal, v);
            }
        }
        verdict.simple = true;
        verdict.certain = true;
        verdict.method = "exhaustive".into();
        return verdict;
    }
    for _ in 0..opts.max_random {
        let half = &halves[rng.gen_range(0..2)];
        if half.is_empty() {
            continue;
        }
        let c: Vec<Fe> = (0..half.len()).map(|_| rng.gen_range(0..q as Fe)).collect();
        let v = combine(g, half, &c);
        if is_zero(&v) {
            continue;
        }
        verdict.seeds_checked += 1;
        let s = spin_vectors(g, std::slice::from_ref(&v), opts.mode, n);
        if !s.is_full() {
            return verdict.not_simple("sampled", &s.to_subspace(), v);
        }
    }
    verdict.simple = true;
    verdict.certain = false;
    verdict.method = "sampled".into();
    verdict
}
