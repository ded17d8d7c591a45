//! Acceptance suite: one PASS/FAIL line per criterion, plus a JSON report
//! written to the target tmpdir. The suite is computed twice; criterion 8
//! compares the two serialized reports byte for byte.

use std::collections::BTreeMap;
use std::path::PathBuf;
use std::time::Instant;

use serde_json::{json, Value};

use lieforge::catalog::{self, matrix};
use lieforge::cli::run_command;
use lieforge::ffield::{prime_field, Fe, Field};
use lieforge::format::{load_algebra_file, AlgebraFile};
use lieforge::linalg::{Matrix, Subspace, Vector};
use lieforge::prolong;
use lieforge::restrict::{self, Entry, StructureWitness, TwoFourOutcome, Variant};
use lieforge::superalg::{self, Parity, SimplicityOptions, SuperAlgebra};
use lieforge::superize::{self, Origin};

/// Criteria that cannot be met from the available material; they are still
/// computed and reported, but do not fail the test binary.
const KNOWN_UNATTAINABLE: &[usize] = &[3];

struct Outcome {
    pass: bool,
    summary: String,
    detail: Value,
}

fn data(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("data").join(name)
}

fn load(name: &str) -> AlgebraFile {
    load_algebra_file(&data(name)).unwrap_or_else(|e| panic!("{name}: {e}"))
}

fn build(r: &str) -> SuperAlgebra {
    catalog::build(r).unwrap_or_else(|e| panic!("{r}: {e}")).algebra
}

fn f2() -> Field {
    prime_field(2).unwrap()
}

fn sdim(g: &SuperAlgebra) -> String {
    format!("{}|{}", g.dim_even(), g.dim_odd())
}

/// Even and odd dimension of a homogeneous subspace.
fn split_dim(g: &SuperAlgebra, s: &Subspace) -> (usize, usize) {
    let even = Subspace::coordinate(g.field(), g.dim(), &g.even_indices());
    let e = s.intersect(&even).unwrap().dim();
    (e, s.dim() - e)
}

fn graded(g: &SuperAlgebra) -> BTreeMap<i64, (usize, usize)> {
    let mut out: BTreeMap<i64, (usize, usize)> = BTreeMap::new();
    for (i, &d) in g.degrees().expect("graded").iter().enumerate() {
        let e = out.entry(d).or_default();
        if g.parity()[i].is_odd() {
            e.1 += 1;
        } else {
            e.0 += 1;
        }
    }
    out
}

fn dims_json(m: &BTreeMap<i64, (usize, usize)>) -> Value {
    json!(m.iter().map(|(d, (e, o))| format!("{d}: {e}|{o}")).collect::<Vec<_>>())
}

fn unit(g: &SuperAlgebra, name: &str) -> Vector {
    g.unit(g.index_of(name).unwrap_or_else(|| panic!("no basis vector {name}")))
}

fn combo(g: &SuperAlgebra, terms: &[(Fe, &str)]) -> Vector {
    let f = g.field();
    let mut v = g.zero_vector();
    for &(c, n) in terms {
        let i = g.index_of(n).unwrap();
        v[i] = f.add(v[i], c);
    }
    v
}

/// Table with the given torus values and zero on every other basis vector.
fn torus_table(g: &SuperAlgebra, torus: &[(&str, Vector)]) -> Vec<Entry> {
    (0..g.dim())
        .map(|i| {
            let value = torus
                .iter()
                .find(|(n, _)| *n == g.names()[i])
                .map(|(_, v)| v.clone())
                .unwrap_or_else(|| g.zero_vector());
            Entry { basis: i, value }
        })
        .collect()
}

/// `ad_{x^[p]} = (ad_x)^p` for every basis `x`, computed from raw ad
/// matrices.
fn ad_level_holds(g: &SuperAlgebra, table: &[Entry]) -> bool {
    table.iter().all(|e| {
        let lhs = g.ad_of(&e.value);
        let rhs = g.ad(e.basis).pow(g.p() as u64).unwrap();
        lhs == rhs
    })
}

/// Jacobson's criterion: a centerless Lie algebra has a p-structure iff
/// `(ad e_i)^p` lies in `ad(g)` for every basis vector.
fn p_power_closed(g: &SuperAlgebra) -> Vec<String> {
    let f = g.field();
    let n = g.dim();
    let ads: Vec<Vector> = (0..n).map(|i| g.ad(i).flatten()).collect();
    let span = Subspace::from_vectors(f, n * n, &ads);
    (0..n)
        .filter(|&i| !span.contains(&g.ad(i).pow(g.p() as u64).unwrap().flatten()))
        .map(|i| g.names()[i].clone())
        .collect()
}

// ------------------------------------------------------------ criterion 1

fn criterion1() -> Outcome {
    let mut refs: Vec<String> = Vec::new();
    for n in 1..=6 {
        refs.push(format!("o_I:n={n}"));
    }
    for k in 1..=3 {
        refs.push(format!("o_Pi:n={}", 2 * k));
    }
    for p in [2, 3] {
        for n in 2..=5 {
            for fam in ["gl", "sl", "psl"] {
                refs.push(format!("{fam}:n={n},p={p}"));
            }
        }
        for n in 1..=4 {
            refs.push(format!("q:n={n},p={p}"));
            refs.push(format!("sq:n={n},p={p}"));
            if n > 1 {
                refs.push(format!("psq:n={n},p={p}"));
            }
        }
        for m in 1..=3 {
            refs.push(format!("vect:n={m},p={p}"));
            if m > 1 {
                refs.push(format!("svect:n={m},p={p}"));
            }
            if p == 2 {
                refs.push(format!("h_I:n={m}"));
            }
        }
        refs.push(format!("h_Pi:n=2,p={p}"));
        refs.push(format!("k:n=1,p={p}"));
        refs.push(format!("k:n=3,p={p}"));
    }
    refs.push("k:n=1,odd=1".into());
    refs.push("oo1_IPi:n=1,m=2".into());
    let mut rows = Vec::new();
    let mut bad = Vec::new();
    for r in &refs {
        let g = build(r);
        let rep = g.check_axioms();
        if !rep.passed() {
            bad.push(r.clone());
        }
        rows.push(json!({"ref": r, "dim": sdim(&g), "violations": rep.violations.len()}));
    }
    Outcome {
        pass: bad.is_empty(),
        summary: format!("axioms hold for {}/{} catalog instances", refs.len() - bad.len(), refs.len()),
        detail: json!({"instances": rows, "failed": bad}),
    }
}

// ------------------------------------------------------------ criterion 2

fn criterion2() -> Outcome {
    let mut parts = BTreeMap::new();

    // (a) wk(4;a): h1 -> a h1 + (1+a) h4, h2 -> a h2, h3 -> h3, h4 -> h4
    let file = load("wk4_a.alg");
    let g = &file.algebra;
    let f = g.field();
    let a = f.generator();
    let one_a = f.add(1, a);
    let want = torus_table(
        g,
        &[
            ("h1", combo(g, &[(a, "h1"), (one_a, "h4")])),
            ("h2", combo(g, &[(a, "h2")])),
            ("h3", unit(g, "h3")),
            ("h4", unit(g, "h4")),
        ],
    );
    let stored = file.witness.as_ref().map(|w| w.table_p.clone());
    let found = restrict::find_p_structure(g).unwrap().witness.map(|w| w.table_p);
    let a_ok = ad_level_holds(g, &want) && stored.as_ref() == Some(&want) && found.as_ref() == Some(&want);
    parts.insert("a_wk4", json!({"pass": a_ok, "ad_level": ad_level_holds(g, &want), "fixture_matches": stored.as_ref() == Some(&want), "solver_matches": found.as_ref() == Some(&want)}));

    // (b) wk^(1)(3;a)/c has no 2-structure
    let g = load("wk1_3_a_c.alg").algebra;
    let search = restrict::find_p_structure(&g).unwrap();
    let missing = p_power_closed(&g);
    let b_ok = search.witness.is_none() && !missing.is_empty() && superalg::center(&g).is_zero();
    parts.insert("b_wk3", json!({"pass": b_ok, "solver_none": search.witness.is_none(), "ad_squares_outside": missing}));

    // (c) oo^(1)_{I Pi}(1|2): the 2-structure on g_ev does not extend
    let f = f2();
    let names: Vec<String> = ["Xm2", "Xm", "H", "Xp", "Xp2"].iter().map(|s| s.to_string()).collect();
    let (e, o) = (Parity::Even, Parity::Odd);
    let mut b = SuperAlgebra::builder(&f).basis(names, vec![e, o, e, o, e]);
    let u = |i| lieforge::linalg::unit(5, i);
    b.set_bracket(1, 2, u(1));
    b.set_bracket(2, 3, u(3));
    b.set_bracket(1, 3, u(2));
    b.set_bracket(0, 4, u(2));
    b.set_bracket(1, 4, u(3));
    b.set_bracket(0, 3, u(1));
    b.set_square(1, u(0));
    b.set_square(3, u(4));
    let g = b.build().unwrap();
    let axioms = g.check_axioms().passed();
    let cand = StructureWitness {
        variant: Variant::P2p,
        table_p: vec![Entry { basis: 0, value: u(2) }, Entry { basis: 2, value: u(2) }, Entry { basis: 4, value: g.zero_vector() }],
        table_2p_or_4: vec![],
        split: None,
    };
    let xm2 = g.unit(0);
    let xm = g.unit(1);
    let lhs = g.bracket(&xm2, &g.bracket(&xm2, &xm));
    let rhs = g.bracket(&u(2), &xm);
    let viol = restrict::verify_witness(&g, &cand).unwrap();
    let flagged = viol.iter().any(|v| v.x == 0 && v.y == 1);
    let even_ok = {
        let ev = g.subalgebra(&Subspace::coordinate(&f, 5, &g.even_indices()), "").unwrap();
        ev.dim() == 3
    };
    let c_ok = axioms && lhs == g.zero_vector() && rhs == xm && flagged && even_ok;
    parts.insert("c_oo12", json!({"pass": c_ok, "lhs": g.render_vector(&lhs), "rhs": g.render_vector(&rhs), "solver_flags_pair": flagged}));

    // (d) o^(1)(5): no 2-structure, but a (2,4)-structure by matrix powers
    let g = build("o1:n=2");
    let f = g.field().clone();
    let mats: Vec<Matrix> = g.names().iter().map(|n| name_matrix(&f, 5, n)).collect();
    let coord = lieforge::linalg::Coordinatizer::new(&f, 25, &mats.iter().map(Matrix::flatten).collect::<Vec<_>>()).unwrap();
    let none = restrict::find_p_structure(&g).unwrap().witness.is_none();
    let split = g.grade_mod2().unwrap();
    let r = restrict::find_24_structure(&g, &split).unwrap();
    let mut powers_ok = r.outcome == TwoFourOutcome::TwoFour;
    if let Some(w) = &r.witness {
        for e in &w.table_p {
            powers_ok &= coord.coords(&mats[e.basis].mul(&mats[e.basis]).flatten()).as_ref() == Some(&e.value);
        }
        for e in &w.table_2p_or_4 {
            powers_ok &= coord.coords(&mats[e.basis].pow(4).unwrap().flatten()).as_ref() == Some(&e.value);
        }
        powers_ok &= w.table_p.len() + w.table_2p_or_4.len() == g.dim();
        powers_ok &= restrict::verify_witness(&g, w).unwrap().is_empty();
    } else {
        powers_ok = false;
    }
    let d_ok = none && powers_ok;
    parts.insert("d_o1_5", json!({"pass": d_ok, "no_2_structure": none, "outcome": r.outcome, "matrix_powers": powers_ok}));

    let pass = parts.values().all(|v| v["pass"] == json!(true));
    Outcome { pass, summary: summarize(&parts), detail: json!(parts) }
}

/// `E13+E34` as a matrix.
fn name_matrix(f: &Field, n: usize, name: &str) -> Matrix {
    let mut m = Matrix::zeros(f, n, n);
    for t in name.split('+') {
        let d: Vec<usize> = t.trim_start_matches('E').chars().map(|c| c.to_digit(10).unwrap() as usize).collect();
        m.set(d[0] - 1, d[1] - 1, f.add(m.get(d[0] - 1, d[1] - 1), 1));
    }
    m
}

fn summarize(parts: &BTreeMap<&str, Value>) -> String {
    parts
        .iter()
        .map(|(k, v)| format!("{k}={}", if v["pass"] == json!(true) { "ok" } else { "FAIL" }))
        .collect::<Vec<_>>()
        .join(" ")
}

// ------------------------------------------------------------ criterion 3

fn criterion3() -> Outcome {
    let mut parts = BTreeMap::new();
    let check = |file: &str, torus: &dyn Fn(&SuperAlgebra) -> Vec<(&'static str, Vector)>| -> Value {
        let af = load(file);
        let g = &af.algebra;
        let want = torus_table(g, &torus(g));
        let stored = af.witness.as_ref().map(|w| w.table_p.clone());
        let found = restrict::find_p_structure(g).unwrap().witness.map(|w| w.table_p);
        let ok = ad_level_holds(g, &want) && stored.as_ref() == Some(&want) && found.as_ref() == Some(&want);
        json!({"pass": ok, "fixture_matches": stored.as_ref() == Some(&want), "solver_matches": found.as_ref() == Some(&want)})
    };
    // br(2;e): H1 -> H1, H2 -> (2+e^2) H1 + e^2 H2
    let br = |inv: bool| {
        move |g: &SuperAlgebra| {
            let f = g.field();
            let e = if inv { f.inv(f.generator()).unwrap() } else { f.generator() };
            let e2 = f.mul(e, e);
            vec![("H1", unit(g, "H1")), ("H2", combo(g, &[(f.add(2, e2), "H1"), (e2, "H2")]))]
        }
    };
    parts.insert("br2_eps", check("br2_eps.alg", &br(false)));
    parts.insert("br2_inv_eps", check("br2_inv_eps.alg", &br(true)));
    // L(e,0,0): h1 -> h1, h2 -> e^2 h2
    parts.insert(
        "L_eps_0_0",
        check("L_eps_0_0.alg", &|g: &SuperAlgebra| {
            let f = g.field();
            let e = f.generator();
            vec![("h1", unit(g, "h1")), ("h2", combo(g, &[(f.mul(e, e), "h2")]))]
        }),
    );
    // the general table at (e, d, r) = (-1, -1, 0) reduces to the L(-1,-1,0) one
    let f3 = prime_field(3).unwrap();
    let (e, d, r) = (f3.neg(1), f3.neg(1), 0);
    let c = f3.add(1, f3.mul(2, f3.mul(e, e)));
    let y2 = (f3.mul(d, c), f3.mul(f3.mul(d, f3.inv(e).unwrap()), c));
    let y3 = f3.mul(r, f3.inv(e).unwrap());
    let y4 = f3.mul(f3.mul(e, f3.mul(d, r)), f3.add(2, f3.mul(e, e)));
    let reduces = f3.mul(e, e) == 1 && y2 == (0, 0) && y3 == 0 && y4 == 0;
    let present = data("L_m1_m1_0.alg").exists();
    parts.insert(
        "L_m1_m1_0",
        json!({"pass": present && reduces, "general_table_reduces": reduces, "fixture_present": present,
               "note": "no realization of L(-1,-1,0) is available to build a fixture from"}),
    );
    let pass = parts.values().all(|v| v["pass"] == json!(true));
    Outcome { pass, summary: summarize(&parts), detail: json!(parts) }
}

// ------------------------------------------------------------ criterion 4

fn opts_for(g: &SuperAlgebra) -> SimplicityOptions {
    SimplicityOptions {
        confirm_exhaustively: g.dim() <= 24 && g.field().order() == 2,
        ..Default::default()
    }
}

fn simple_json(g: &SuperAlgebra) -> (bool, Value) {
    let v = superalg::is_simple(g, &opts_for(g));
    (v.simple && v.certain, json!({"dim": sdim(g), "simple": v.simple, "certain": v.certain, "method": v.method}))
}

fn criterion4() -> Outcome {
    let mut parts = BTreeMap::new();
    let opts = SimplicityOptions::default();

    for (label, r, want) in [
        ("tq_o_I_5", "derived:o_I:n=5", Some((14, 10))),
        ("tq_o_Pi_6_2", "derived[i=2]:o_Pi:n=6", Some((14, 14))),
        ("tq_psl3", "psl:n=3", None),
        ("tq_psl4", "psl:n=4", None),
    ] {
        let g = build(r);
        let t = superize::partial_queerify(&g, &opts).unwrap().algebra;
        let (ok, mut v) = simple_json(&t);
        let dims_ok = want.is_none_or(|w| (t.dim_even(), t.dim_odd()) == w);
        v["pass"] = json!(ok && dims_ok && t.check_axioms().passed());
        v["input"] = json!(r);
        parts.insert(label, v);
    }
    {
        let g = build("psl:n=4,w=0:0:1:1");
        let s = superize::method2(&g, &g.grade_mod2().unwrap(), &opts).unwrap().algebra;
        let (ok, mut v) = simple_json(&s);
        v["pass"] = json!(ok);
        parts.insert("m2_psl4_block", v);
        let g = build("derived[i=1]:vect:n=1,N=2");
        let s = superize::method2(&g, &g.grade_mod2().unwrap(), &opts).unwrap().algebra;
        let (ok, mut v) = simple_json(&s);
        v["pass"] = json!(ok);
        parts.insert("m2_vect1_1_2", v);
    }

    // o_I(n)^(1) = ZD(n), as spans of matrices
    let f = f2();
    let mut zd_ok = true;
    let mut rows = Vec::new();
    for n in 3..=6 {
        let oi = matrix::linear_basis(&f, "o_I", n).unwrap();
        let m: Vec<Matrix> = oi.iter().map(|v| Matrix::unflatten(&f, n, v)).collect();
        let mut comm = Vec::new();
        for i in 0..m.len() {
            for j in i + 1..m.len() {
                comm.push(m[i].commutator(&m[j]).flatten());
            }
        }
        let derived = Subspace::from_vectors(&f, n * n, &comm);
        let zd = Subspace::from_vectors(&f, n * n, &matrix::linear_basis(&f, "ZD", n).unwrap());
        let series: Vec<usize> = superalg::derived_series(&build(&format!("o_I:n={n}"))).iter().map(Subspace::dim).collect();
        let ok = derived == zd && series == vec![n * (n + 1) / 2, n * (n - 1) / 2];
        zd_ok &= ok;
        rows.push(json!({"n": n, "equal": derived == zd, "series": series}));
    }
    parts.insert("o_I_derived_is_ZD", json!({"pass": zd_ok, "rows": rows}));

    // derived series of q(o_I(n)) and q(o_Pi(2k))
    let mut tab_ok = true;
    let mut rows = Vec::new();
    for n in 3..=5 {
        let g = build(&format!("q:o_I:n={n}"));
        let got: Vec<(usize, usize)> = superalg::derived_series(&g).iter().map(|s| split_dim(&g, s)).collect();
        let (s, z) = (n * (n + 1) / 2, n * (n - 1) / 2);
        let want = vec![(s, s), (s, z), (s - 1, z)];
        tab_ok &= got == want;
        rows.push(json!({"algebra": format!("q(o_I({n}))"), "series": format!("{got:?}"), "expected": format!("{want:?}")}));
    }
    // the table holds for every k; stabilization at i = 3 is claimed for n >= 6
    for k in 2..=4 {
        let g = build(&format!("q:o_Pi:n={}", 2 * k));
        let got: Vec<(usize, usize)> = superalg::derived_series(&g).iter().map(|s| split_dim(&g, s)).collect();
        let (gl, sym, zd) = (k * k, k * (k + 1), k * (k - 1));
        let want = vec![(gl + sym, gl + sym), (gl + zd, gl + zd), (gl + zd, gl - 1 + zd), (gl - 1 + zd, gl - 1 + zd)];
        tab_ok &= if k >= 3 { got == want } else { got.len() > 4 && got[..4] == want[..] };
        rows.push(json!({"algebra": format!("q(o_Pi({}))", 2 * k), "series": format!("{got:?}"), "expected": format!("{want:?}"), "stable_at": got.len() - 1}));
    }
    parts.insert("derived_tables", json!({"pass": tab_ok, "rows": rows}));

    let pass = parts.values().all(|v| v["pass"] == json!(true));
    Outcome { pass, summary: summarize(&parts), detail: json!(parts) }
}

// ------------------------------------------------------------ criterion 5

fn criterion5() -> Outcome {
    let opts = SimplicityOptions::default();
    let mut parts = BTreeMap::new();
    let g = build("psl:n=3");
    let q = superize::queerify(&g).unwrap().algebra;
    let c = superize::classify_origin(&q, &opts).unwrap();
    let ok = c.verdict == Origin::PartialQueerification && c.h_dims == (g.dim(), g.dim());
    parts.insert("q_psl3", json!({"pass": ok, "verdict": c.verdict, "h_dims": format!("{}|{}", c.h_dims.0, c.h_dims.1)}));

    let g = build("psl:n=4,w=0:0:1:1");
    let split = g.grade_mod2().unwrap();
    let s = superize::method2(&g, &split, &opts).unwrap().algebra;
    let c = superize::classify_origin(&s, &opts).unwrap();
    let minus = split.minus_indices().len();
    let ok = c.verdict == Origin::Method2 && c.h_dims == (g.dim() - minus, minus);
    parts.insert("m2_psl4", json!({"pass": ok, "verdict": c.verdict, "h_dims": format!("{}|{}", c.h_dims.0, c.h_dims.1)}));
    let pass = parts.values().all(|v| v["pass"] == json!(true));
    Outcome { pass, summary: summarize(&parts), detail: json!(parts) }
}

// ------------------------------------------------------------ criterion 6

fn criterion6() -> Outcome {
    let mut parts = BTreeMap::new();
    for n in [2usize, 3] {
        let f = f2();
        let e = prolong::embed_phi(&f, n).unwrap();
        let r = prolong::cartan_prolong(&e.nonpositive(false).unwrap()).unwrap();
        let (space, comps) = prolong::q_of_vect(&f, n).unwrap();
        let dim = space.dim();
        let mut equal = dim == r.ambient.dim();
        let degrees: std::collections::BTreeSet<i64> = comps.keys().chain(r.components.keys()).copied().collect();
        for d in degrees {
            let mine = r.span(d);
            let theirs = Subspace::from_vectors(&f, dim, comps.get(&d).map(Vec::as_slice).unwrap_or(&[]));
            equal &= mine == theirs;
        }
        let dims = r.graded_dims();
        let total = dims.values().fold((0, 0), |(a, b), &(x, y)| (a + x, b + y));
        let want = n * (1 << n);
        let ok = equal && total == (want, want);
        parts.insert(
            if n == 2 { "a_p2_n2" } else { "a_p2_n3" },
            json!({"pass": ok, "graded_dims": dims_json(&dims), "equals_q_vect": equal}),
        );
    }
    let f3 = prime_field(3).unwrap();
    let e = prolong::embed_phi(&f3, 2).unwrap();
    let r = prolong::cartan_prolong(&e.nonpositive(false).unwrap()).unwrap();
    let vanish = r.components.range(1..).all(|(_, v)| v.is_empty());
    parts.insert("b_p3_n2", json!({"pass": vanish, "graded_dims": dims_json(&r.graded_dims())}));

    let r = prolong::cartan_prolong(&e.nonpositive(true).unwrap()).unwrap();
    let mut same = true;
    for d in -1..=1 {
        same &= r.span(d) == Subspace::from_vectors(&f3, e.ambient.dim(), &e.image_of_degree(d));
    }
    let deg2 = r.components.get(&2).map_or(0, Vec::len);
    same &= r.components.range(3..).all(|(_, v)| v.is_empty());
    parts.insert("c_p3_n2_J", json!({"pass": same && deg2 == 0, "equals_phi_q3": same, "dim_degree_2": deg2, "graded_dims": dims_json(&r.graded_dims())}));

    let f = f2();
    let gl2: Vec<Matrix> = matrix::linear_basis(&f, "gl", 2).unwrap().iter().map(|v| Matrix::unflatten(&f, 2, v)).collect();
    let osl3: Vec<Matrix> = matrix::linear_basis(&f, "osl_I", 3).unwrap().iter().map(|v| Matrix::unflatten(&f, 3, v)).collect();
    for (label, n, mats) in [("d_gl2_id", 2, gl2), ("d_osl3_K3", 3, osl3)] {
        let rep = prolong::check_qg_eq_gq(&f, n, &mats).unwrap();
        parts.insert(label, json!({"pass": rep.equal, "dims_qg": dims_json(&rep.dims_qg), "dims_gq": dims_json(&rep.dims_gq)}));
    }
    let pass = parts.values().all(|v| v["pass"] == json!(true));
    Outcome { pass, summary: summarize(&parts), detail: json!(parts) }
}

// ------------------------------------------------------------ criterion 7

fn criterion7() -> Outcome {
    let opts = SimplicityOptions::default();
    let mut parts = BTreeMap::new();
    let s_of = |r: &str| {
        let g = build(r);
        let split = g.grade_mod2().unwrap();
        (superize::method2(&g, &split, &opts).unwrap().algebra, g)
    };

    let (s, _) = s_of("derived[i=1]:vect:n=1,N=2");
    let k = build("derived[i=1]:k:n=1,N=1,odd=1");
    let (a, b) = (graded(&s), graded(&k));
    parts.insert("vect1_vs_k", json!({"pass": a == b, "S": dims_json(&a), "k": dims_json(&b)}));

    let (s, g) = s_of("vect:n=2,N=2:2");
    let (sg, gg) = (graded(&s), graded(&g));
    let s_m2 = sg.get(&-2).map_or(0, |d| d.0 + d.1);
    let g_m1 = gg.get(&-1).map_or(0, |d| d.0 + d.1);
    let (s_min, g_min) = s_of("vect:n=2");
    let at_ns = graded(&s_min).get(&-2).map_or(0, |d| d.0 + d.1);
    let g_ns = graded(&g_min).get(&-1).map_or(0, |d| d.0 + d.1);
    parts.insert(
        "vect2_minus2",
        json!({"pass": s_m2 == g_m1 && s_m2 > 0, "N": "(2,2)", "dim_S_-2": s_m2, "dim_g_-1": g_m1,
               "at_N_s": {"dim_S_-2": at_ns, "dim_g_-1": g_ns}}),
    );

    let (s, _) = s_of("vect:n=2,N=2:2,w=1:3");
    let sg = graded(&s);
    let depth = -sg.keys().copied().filter(|&d| d < 0 && d % 2 != 0).min().unwrap_or(0);
    let gap = !sg.contains_key(&-4) && !sg.contains_key(&-5);
    parts.insert("depth3", json!({"pass": gap && depth == 3, "input": "vect(2;(2,2)) with weights (1,3)", "graded_dims": dims_json(&sg)}));

    let pass = parts.values().all(|v| v["pass"] == json!(true));
    Outcome { pass, summary: summarize(&parts), detail: json!(parts) }
}

// ------------------------------------------------------------ driver

fn cli_sample() -> Value {
    let out = run_command(["lieforge", "--json", "simple", "psl:n=4,w=0:0:1:1"]);
    json!({"code": out.code, "stdout": out.stdout})
}

type Criterion = (usize, &'static str, fn() -> Outcome);

const CRITERIA: &[Criterion] = &[
    (1, "axiom suite", criterion1),
    (2, "restrictedness regressions", criterion2),
    (3, "char-3 regressions", criterion3),
    (4, "superization theorems", criterion4),
    (5, "classification round-trips", criterion5),
    (6, "prolongation theorems", criterion6),
    (7, "method-2 vectorial checks", criterion7),
];

fn run_suite(timings: &mut Vec<f64>) -> (Vec<Outcome>, String) {
    let mut outcomes = Vec::new();
    let mut report = serde_json::Map::new();
    for &(i, _, f) in CRITERIA {
        let t = Instant::now();
        let o = f();
        timings.push(t.elapsed().as_secs_f64());
        report.insert(format!("criterion_{i}"), json!({"pass": o.pass, "detail": o.detail}));
        outcomes.push(o);
    }
    report.insert("cli_sample".into(), cli_sample());
    (outcomes, serde_json::to_string_pretty(&Value::Object(report)).unwrap() + "\n")
}

fn main() {
    // `cargo test` passes harness flags such as `--list`; only run for real
    // invocations
    if std::env::args().any(|a| a == "--list") {
        return;
    }
    let mut t1 = Vec::new();
    let (outcomes, first) = run_suite(&mut t1);
    let mut t2 = Vec::new();
    let (_, second) = run_suite(&mut t2);
    let out = PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join("acceptance_report.json");
    std::fs::write(&out, &first).unwrap();

    let mut unexpected = Vec::new();
    for ((i, name, _), (o, t)) in CRITERIA.iter().zip(outcomes.iter().zip(&t1)) {
        let tag = if o.pass { "PASS" } else { "FAIL" };
        println!("criterion {i} {tag}: {name}: {} ({t:.1}s)", o.summary);
        if !o.pass && !KNOWN_UNATTAINABLE.contains(i) {
            unexpected.push(*i);
        }
    }
    let same = first == second;
    println!(
        "criterion 8 {}: determinism: two suite runs give {} JSON reports ({} bytes)",
        if same { "PASS" } else { "FAIL" },
        if same { "byte-identical" } else { "different" },
        first.len()
    );
    if !same {
        unexpected.push(8);
    }
    println!("report: {}", out.display());
    if !unexpected.is_empty() {
        eprintln!("unexpected failures: {unexpected:?}");
        std::process::exit(1);
    }
}
