//! Regenerates the Cartan-matrix fixtures in `data/`.
//!
//! Building g(A) is not part of the library; this program does it once by
//! the standard recursion: a positive element of degree `b` is zero in g(A)
//! exactly when all of its brackets with the `f_j` vanish, so each root
//! space is spanned by the independent candidates `[e_i, v]`, compared via
//! their images under `ad f_j`. The negative part is the image under the
//! Chevalley involution.
//!
//! Usage: `cargo run --example fixtures -- <data dir>`

use std::collections::BTreeMap;
use std::path::Path;

use lieforge::ffield::{ff_make, Fe, Field};
use lieforge::format::AlgebraFile;
use lieforge::linalg::{Coordinatizer, EchelonBuilder, Matrix, Vector};
use lieforge::restrict::{Entry, StructureWitness, Variant};
use lieforge::superalg::{center, derived, quotient, IdealMode, Parity, SuperAlgebra};

struct Cartan {
    field: Field,
    /// `a[i][j] = alpha_j(h_i)`
    a: Vec<Vec<Fe>>,
    /// eigenvalues of the extra grading elements on the `e_j`
    d: Vec<Vec<Fe>>,
}

struct Positive {
    mult: Vec<u32>,
    /// `[e_i, parent]`, or `None` for `e_i` itself
    from: (usize, Option<usize>),
}

/// Sparse combination of positive elements.
type Pos = BTreeMap<usize, Fe>;

fn axpy_pos(f: &Field, y: &mut Pos, c: Fe, x: &Pos) {
    for (&k, &v) in x {
        let e = y.entry(k).or_insert(0);
        *e = f.add(*e, f.mul(c, v));
    }
    y.retain(|_, v| *v != 0);
}

impl Cartan {
    fn n(&self) -> usize {
        self.a.len()
    }

    fn h_dim(&self) -> usize {
        self.n() + self.d.len()
    }

    /// `beta(h_k)` for the `k`-th element of the Cartan subalgebra.
    fn eval(&self, mult: &[u32], k: usize) -> Fe {
        let f = &self.field;
        let row = if k < self.n() { &self.a[k] } else { &self.d[k - self.n()] };
        mult.iter()
            .zip(row)
            .fold(0, |acc, (&m, &c)| f.add(acc, f.mul(f.from_int(m as i64), c)))
    }

    fn build(&self, upper: &str, lower: &str, cartan: &str) -> SuperAlgebra {
        let f = &self.field;
        let n = self.n();
        let mut pos: Vec<Positive> = Vec::new();
        // ad e_i on positives, and [f_j, x] split into positive and Cartan parts
        let mut ad_e: Vec<BTreeMap<usize, Pos>> = vec![BTreeMap::new(); n];
        let mut f_pos: Vec<Vec<Pos>> = Vec::new();
        let mut f_h: Vec<Vec<Vector>> = Vec::new();
        for i in 0..n {
            let mut mult = vec![0; n];
            mult[i] = 1;
            pos.push(Positive { mult, from: (i, None) });
            f_pos.push(vec![Pos::new(); n]);
            f_h.push(
                (0..n)
                    .map(|j| {
                        let mut v = vec![0; self.h_dim()];
                        if i == j {
                            v[i] = f.neg(1);
                        }
                        v
                    })
                    .collect(),
            );
        }
        let mut level: Vec<usize> = (0..n).collect();
        while !level.is_empty() {
            let mut by_degree: BTreeMap<Vec<u32>, Vec<(usize, usize)>> = BTreeMap::new();
            for &v in &level {
                for i in 0..n {
                    let mut m = pos[v].mult.clone();
                    m[i] += 1;
                    by_degree.entry(m).or_default().push((i, v));
                }
            }
            let mut next = Vec::new();
            for (mult, cands) in by_degree {
                let width = pos.len();
                let sigs: Vec<Vec<Pos>> = cands
                    .iter()
                    .map(|&(i, v)| {
                        (0..n)
                            .map(|j| {
                                let mut s = Pos::new();
                                if i == j {
                                    let c = f.neg(self.eval(&pos[v].mult, i));
                                    axpy_pos(f, &mut s, c, &Pos::from([(v, 1)]));
                                }
                                for (&w, &c) in &f_pos[v][j] {
                                    if let Some(img) = ad_e[i].get(&w) {
                                        axpy_pos(f, &mut s, c, img);
                                    }
                                }
                                // [e_i, h] = -alpha_i(h) e_i
                                for (k, &c) in f_h[v][j].iter().enumerate() {
                                    if c != 0 {
                                        let mut ei = vec![0; n];
                                        ei[i] = 1;
                                        let coef = f.neg(f.mul(c, self.eval(&ei, k)));
                                        axpy_pos(f, &mut s, coef, &Pos::from([(i, 1)]));
                                    }
                                }
                                s
                            })
                            .collect()
                    })
                    .collect();
                let flat = |s: &Vec<Pos>| -> Vector {
                    let mut out = vec![0; n * width];
                    for (j, p) in s.iter().enumerate() {
                        for (&k, &c) in p {
                            out[j * width + k] = c;
                        }
                    }
                    out
                };
                let flats: Vec<Vector> = sigs.iter().map(flat).collect();
                let mut ech = EchelonBuilder::new(f, n * width);
                let mut chosen = Vec::new();
                for (c, fl) in flats.iter().enumerate() {
                    if ech.insert(fl).is_some() {
                        chosen.push(c);
                    }
                }
                if chosen.is_empty() {
                    continue;
                }
                let basis: Vec<Vector> = chosen.iter().map(|&c| flats[c].clone()).collect();
                let coord = Coordinatizer::new(f, n * width, &basis).unwrap();
                let first = pos.len();
                for (k, &c) in chosen.iter().enumerate() {
                    let (i, v) = cands[c];
                    pos.push(Positive { mult: mult.clone(), from: (i, Some(v)) });
                    f_pos.push(sigs[c].clone());
                    f_h.push(vec![vec![0; self.h_dim()]; n]);
                    next.push(first + k);
                }
                for (c, &(i, v)) in cands.iter().enumerate() {
                    let x = coord.coords(&flats[c]).unwrap();
                    let img: Pos = x
                        .iter()
                        .enumerate()
                        .filter(|(_, &c)| c != 0)
                        .map(|(k, &c)| (first + k, c))
                        .collect();
                    ad_e[i].insert(v, img);
                }
            }
            level = next;
        }

        let p_count = pos.len();
        let hd = self.h_dim();
        let dim = 2 * p_count + hd;
        let x_at = |u: usize| u;
        let h_at = |k: usize| p_count + k;
        let y_at = |u: usize| p_count + hd + u;
        let mut e_mats = Vec::new();
        let mut f_mats = Vec::new();
        for i in 0..n {
            let mut e = Matrix::zeros(f, dim, dim);
            let mut fm = Matrix::zeros(f, dim, dim);
            let mut ei = vec![0; n];
            ei[i] = 1;
            for v in 0..p_count {
                if let Some(img) = ad_e[i].get(&v) {
                    for (&w, &c) in img {
                        e.set(x_at(w), x_at(v), c);
                        // [f_i, y_w] = -omega([e_i, w])
                        fm.set(y_at(w), y_at(v), f.neg(c));
                    }
                }
                for (&w, &c) in &f_pos[v][i] {
                    fm.set(x_at(w), x_at(v), c);
                    // [e_i, y_v] = -omega([f_i, v])
                    e.set(y_at(w), y_at(v), f.neg(c));
                }
                for (k, &c) in f_h[v][i].iter().enumerate() {
                    if c != 0 {
                        fm.set(h_at(k), x_at(v), c);
                        // omega(h) = -h
                        e.set(h_at(k), y_at(v), c);
                    }
                }
            }
            for k in 0..hd {
                let alpha = self.eval(&ei, k);
                e.set(x_at(i), h_at(k), f.neg(alpha));
                // f_i = -y_i
                fm.set(y_at(i), h_at(k), f.neg(alpha));
            }
            e_mats.push(e);
            f_mats.push(fm);
        }
        let mut ads: Vec<Matrix> = vec![Matrix::zeros(f, dim, dim); dim];
        for u in 0..p_count {
            let (i, parent) = pos[u].from;
            ads[x_at(u)] = match parent {
                None => e_mats[i].clone(),
                Some(v) => e_mats[i].commutator(&ads[x_at(v)]),
            };
            ads[y_at(u)] = match parent {
                None => f_mats[i].scale(f.neg(1)),
                Some(v) => f_mats[i].commutator(&ads[y_at(v)]).scale(f.neg(1)),
            };
        }
        for k in 0..hd {
            let mut m = Matrix::zeros(f, dim, dim);
            for u in 0..p_count {
                let c = self.eval(&pos[u].mult, k);
                m.set(x_at(u), x_at(u), c);
                m.set(y_at(u), y_at(u), f.neg(c));
            }
            ads[h_at(k)] = m;
        }

        let mut names = Vec::new();
        let mut degrees = Vec::new();
        for u in 0..p_count {
            names.push(format!("{upper}{}", u + 1));
            degrees.push(pos[u].mult.iter().sum::<u32>() as i64);
        }
        for k in 0..hd {
            names.push(if k < n { format!("{cartan}{}", k + 1) } else if hd == n + 1 { "d".into() } else { format!("d{}", k - n + 1) });
            degrees.push(0);
        }
        for u in 0..p_count {
            names.push(format!("{lower}{}", u + 1));
            degrees.push(-(pos[u].mult.iter().sum::<u32>() as i64));
        }
        let mut b = SuperAlgebra::builder(f).basis(names, vec![Parity::Even; dim]).degrees(Some(degrees));
        for a in 0..dim {
            for c in a..dim {
                let v = ads[a].col(c);
                if v.iter().any(|&x| x != 0) {
                    b.set_bracket(a, c, v);
                }
            }
        }
        let omega = b.build().expect("consistent table");
        // rescale so that y_i = f_i, i.e. y = -omega(x)
        let basis: Vec<Vector> = (0..dim)
            .map(|i| {
                let mut v = vec![0; dim];
                v[i] = if i >= y_at(0) { f.neg(1) } else { 1 };
                v
            })
            .collect();
        let g = SuperAlgebra::from_realization(
            f,
            omega.names().to_vec(),
            omega.parity().to_vec(),
            omega.degrees().map(|d| d.to_vec()),
            &basis,
            |a, b| omega.bracket(a, b),
            None::<fn(&Vector) -> Vector>,
        )
        .unwrap();
        assert!(g.check_axioms().passed(), "Jacobi fails for the generated algebra");
        for i in 0..n {
            for j in 0..n {
                let v = g.bracket(&g.unit(x_at(i)), &g.unit(y_at(j)));
                let mut want = vec![0; dim];
                if i == j {
                    want[h_at(i)] = 1;
                }
                assert_eq!(v, want, "[x{i}, y{j}]");
            }
        }
        g
    }
}

fn terms(g: &SuperAlgebra, t: &[(&str, Fe)]) -> Vector {
    let mut v = g.zero_vector();
    for &(name, c) in t {
        let i = g.index_of(name).unwrap_or_else(|| panic!("no basis vector {name}"));
        v[i] = g.field().add(v[i], c);
    }
    v
}

/// `[2]`-table: the listed Cartan values and zero on every root vector.
fn witness(g: &SuperAlgebra, cartan: &[(&str, Vec<(&str, Fe)>)]) -> StructureWitness {
    let mut table = Vec::new();
    for i in 0..g.dim() {
        let name = g.names()[i].as_str();
        let value = match cartan.iter().find(|(n, _)| *n == name) {
            Some((_, t)) => terms(g, t),
            None => g.zero_vector(),
        };
        table.push(Entry { basis: i, value });
    }
    StructureWitness { variant: Variant::P, table_p: table, table_2p_or_4: Vec::new(), split: None }
}

fn save(dir: &Path, name: &str, g: SuperAlgebra, w: Option<StructureWitness>, source: &str) {
    if let Some(w) = &w {
        let bad = lieforge::restrict::verify_witness(&g, w).unwrap();
        assert!(bad.is_empty(), "{name}: witness fails at {} places", bad.len());
    }
    let mut file = AlgebraFile::new(g);
    file.witness = w;
    file.metadata.insert("source".into(), source.into());
    let text = file.to_canonical();
    std::fs::write(dir.join(name), &text).unwrap();
    println!("{name}: dim {}", file.algebra.dim());
}

fn wk3(dir: &Path) {
    let f = ff_make(2, 2, Some(&[1, 1, 1])).unwrap();
    let a = f.generator();
    let c = Cartan { field: f.clone(), a: vec![vec![0, 1, 0], vec![1, 0, a], vec![0, a, 0]], d: vec![vec![1, 0, 0]] };
    let g = c.build("x", "y", "h");
    let one = 1;
    let w = witness(
        &g,
        &[
            ("h1", vec![("h1", one)]),
            ("h2", vec![("h2", a), ("d", f.add(1, a))]),
            ("h3", vec![("h1", f.mul(a, a))]),
            ("d", vec![("d", one)]),
        ],
    );
    save(
        dir,
        "wk3_a.alg",
        g.clone(),
        Some(w),
        "wk(3;a) over GF(4), a = generator; Weisfeiler-Kac algebra given by its Cartan matrix and B = (1,0,0); 2-structure taken modulo the center",
    );

    let d1 = derived(&g, Some(1));
    let sub = g.subalgebra(&d1, "").unwrap();
    let c = center(&sub);
    let q = quotient(&sub, &c, IdealMode::WithSquares).unwrap();
    save(
        dir,
        "wk1_3_a_c.alg",
        q.algebra,
        None,
        "derived algebra of wk(3;a) modulo its center, over GF(4), a = generator",
    );
}

fn wk4(dir: &Path) {
    let f = ff_make(2, 2, Some(&[1, 1, 1])).unwrap();
    let a = f.generator();
    let b = f.add(1, a);
    let c = Cartan {
        field: f.clone(),
        a: vec![vec![0, a, 1, 0], vec![a, 0, 0, 0], vec![1, 0, 0, 1], vec![0, 0, 1, 0]],
        d: vec![],
    };
    let g = c.build("x", "y", "h");
    let w = witness(
        &g,
        &[
            ("h1", vec![("h1", a), ("h4", b)]),
            ("h2", vec![("h2", a)]),
            ("h3", vec![("h3", 1)]),
            ("h4", vec![("h4", 1)]),
        ],
    );
    save(dir, "wk4_a.alg", g, Some(w), "wk(4;a) over GF(4), a = generator; Weisfeiler-Kac algebra given by its Cartan matrix");
}

fn br2(dir: &Path) {
    // Conway modulus x^2 + 2x + 2, so x generates GF(9)^*
    let f = ff_make(3, 2, Some(&[2, 2, 1])).unwrap();
    let eps = f.generator();
    for (file, e, label) in [("br2_eps.alg", eps, "eps"), ("br2_inv_eps.alg", f.inv(eps).unwrap(), "1/eps")] {
        let c = Cartan {
            field: f.clone(),
            a: vec![vec![f.from_int(2), f.from_int(-1)], vec![f.from_int(-2), f.sub(1, e)]],
            d: vec![],
        };
        let g = c.build("X", "Y", "H");
        let e2 = f.mul(e, e);
        let mut w = witness(
            &g,
            &[("H1", vec![("H1", 1)]), ("H2", vec![("H1", f.add(2, e2)), ("H2", e2)])],
        );
        w.variant = Variant::P;
        save(
            dir,
            file,
            g,
            Some(w),
            &format!("Brown algebra br(2;{label}) over GF(9), eps = class of x modulo x^2+2x+2; Cartan matrix (2,-1;-2,1-eps)"),
        );
    }
}

/// L(eps,0,0) is br(2;eps) in another Cartan basis; the h's are chosen so
/// that alpha(h_1) has entries in GF(3) and alpha(h_2) in eps GF(3).
fn l_eps_0_0(dir: &Path) {
    let f = ff_make(3, 2, Some(&[2, 2, 1])).unwrap();
    let eps = f.generator();
    let c = Cartan {
        field: f.clone(),
        a: vec![vec![f.from_int(2), f.from_int(-1)], vec![f.from_int(-2), f.sub(1, eps)]],
        d: vec![],
    };
    let br = c.build("X", "Y", "H");
    let n = br.dim();
    let mut names = Vec::new();
    let mut basis = Vec::new();
    for (i, name) in br.names().iter().enumerate() {
        let mut v = vec![0; n];
        v[i] = 1;
        if name == "H2" {
            v[br.index_of("H1").unwrap()] = 1;
        }
        basis.push(v);
        names.push(name.to_lowercase());
    }
    let g = SuperAlgebra::from_realization(
        &f,
        names,
        br.parity().to_vec(),
        br.degrees().map(|d| d.to_vec()),
        &basis,
        |a, b| br.bracket(a, b),
        None::<fn(&Vector) -> Vector>,
    )
    .unwrap();
    let w = witness(&g, &[("h1", vec![("h1", 1)]), ("h2", vec![("h2", f.mul(eps, eps))])]);
    save(
        dir,
        "L_eps_0_0.alg",
        g,
        Some(w),
        "L(eps,0,0) over GF(9), eps = class of x modulo x^2+2x+2, as br(2;eps) with h1 = H1, h2 = H1 + H2",
    );
}

fn bad_jacobi(dir: &Path) {
    let f = ff_make(3, 1, None).unwrap();
    let names = vec!["a".to_string(), "b".to_string(), "c".to_string()];
    let mut b = SuperAlgebra::builder(&f).basis(names, vec![Parity::Even; 3]);
    // [a,b] = b, [b,c] = a: the Jacobi sum on (a,b,c) is -a
    b.set_bracket(0, 1, vec![0, 1, 0]);
    b.set_bracket(1, 2, vec![1, 0, 0]);
    let g = b.build().unwrap();
    assert!(!g.check_axioms().passed());
    save(dir, "bad_jacobi.alg", g, None, "deliberately broken: violates the Jacobi identity on (a, b, c)");
}

fn main() {
    let dir = std::env::args().nth(1).unwrap_or_else(|| "data".into());
    let dir = Path::new(&dir);
    std::fs::create_dir_all(dir).unwrap();
    wk3(dir);
    wk4(dir);
    br2(dir);
    l_eps_0_0(dir);
    bad_jacobi(dir);
}
