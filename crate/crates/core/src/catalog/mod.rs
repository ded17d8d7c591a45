//! Named algebra families and the `family:key=value,...` reference syntax.
//!
//! A reference is either `family:params` (for example `o_I:n=5,p=2`), a
//! short alias such as `psl3`, or a wrapper applied to another reference:
//! `q:psl3`, `derived[i=1]:o_I:n=4`. Vector-valued parameters use `:` as the
//! separator inside the value, as in `vect:N=1:1`.

pub mod divided;
pub mod matrix;
pub mod vectorial;

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::ffield::{ff_make, Field};
use crate::linalg::{Coordinatizer, Matrix};
use crate::restrict::{Entry, StructureWitness, Variant};
use crate::superalg::SuperAlgebra;

pub use vectorial::{Form, Vectorial};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CatalogRef {
    pub family: String,
    pub params: BTreeMap<String, String>,
    pub inner: Option<Box<CatalogRef>>,
}

/// Families with a one-line description, as printed by `catalog list`.
pub const FAMILIES: &[(&str, &str)] = &[
    ("gl", "gl(n); n, p, k, w"),
    ("sl", "sl(n); n, p, k, w"),
    ("psl", "sl(n) modulo its center; n, p, k, w"),
    ("o_I", "o_I(n), symmetric matrices (p=2); n"),
    ("o_Pi", "o_Pi(n) for the split form (p=2); n even"),
    ("osl_I", "o_I(n) ∩ sl(n) (p=2); n"),
    ("ZD", "symmetric zero-diagonal matrices (p=2); n"),
    ("o1", "matrix model of o^(1)(2n+1), graded by (0^n,1,2^n) (p=2); n"),
    ("q", "q(n) in gl(n|n); n, p"),
    ("sq", "q(n) with tr B = 0; n, p"),
    ("psq", "sq(n) modulo the identity; n, p"),
    ("s_e_sq", "sq(n) with tr A = 0 (p=2); n"),
    ("ps_e_psq", "s_e_sq(n) modulo (1,0),(0,1) (p=2); n even"),
    ("oo_IPi", "oo_IPi(n|m) (p=2); n, m even"),
    ("oo1_IPi", "derived algebra of oo_IPi(n|m) (p=2); n, m even"),
    ("oo_model", "oo_IPi(2k+1|2m) in o1 coordinates, graded (p=2); k, m"),
    ("vect", "vect(n; N | odd); n, N, odd, p, w"),
    ("svect", "divergence-free fields; n, N, odd, p, w"),
    ("h_I", "Hamiltonian fields for the identity form (p=2); n, N, w"),
    ("h_Pi", "Hamiltonian fields for the split form; n even, N, p, w"),
    ("k", "contact fields, deg t = 2; n odd, N, odd (p=2), p"),
    ("derived", "wrapper: g^(i); i (default: stable term)"),
    ("modcenter", "wrapper: g modulo its center"),
    ("deform", "wrapper: (1 - xbar) g for a vectorial g"),
    ("q", "wrapper: queerification of a restricted algebra"),
    ("tq", "wrapper: partial queerification of a simple algebra"),
];

fn parse_params(s: &str) -> Result<BTreeMap<String, String>> {
    let mut out = BTreeMap::new();
    for part in s.split(',').filter(|p| !p.is_empty()) {
        let (k, v) = part
            .split_once('=')
            .ok_or_else(|| Error::Parse(format!("expected key=value, got {part:?}")))?;
        if out.insert(k.trim().to_string(), v.trim().to_string()).is_some() {
            return Err(Error::Parse(format!("parameter {k} given twice")));
        }
    }
    Ok(out)
}

// `o_I:n=4` or `derived[i=1]:...` rather than `N=1:1,odd=1`
fn is_nested(rest: &str) -> bool {
    let first = rest.split(':').next().unwrap_or("");
    !first.contains('=') || first.contains('[')
}

impl CatalogRef {
    pub fn parse(s: &str) -> Result<CatalogRef> {
        let s = s.trim();
        if s.is_empty() {
            return Err(Error::Parse("empty catalog reference".into()));
        }
        let (head, rest) = match s.split_once(':') {
            Some((h, r)) => (h, Some(r)),
            None => (s, None),
        };
        let (family, mut params) = match head.split_once('[') {
            Some((f, p)) => {
                let p = p
                    .strip_suffix(']')
                    .ok_or_else(|| Error::Parse(format!("unclosed '[' in {head:?}")))?;
                (f.to_string(), parse_params(p)?)
            }
            None => (head.to_string(), BTreeMap::new()),
        };
        match rest {
            None => {
                // alias: family name followed by its size, e.g. psl3
                let cut = family.trim_end_matches(|c: char| c.is_ascii_digit()).len();
                if cut == family.len() || cut == 0 {
                    return Err(Error::Parse(format!("cannot read {family:?} as a catalog reference")));
                }
                params.insert("n".into(), family[cut..].to_string());
                Ok(CatalogRef {
                    family: family[..cut].to_string(),
                    params,
                    inner: None,
                })
            }
            Some(r) if is_nested(r) => Ok(CatalogRef {
                family,
                params,
                inner: Some(Box::new(CatalogRef::parse(r)?)),
            }),
            Some(r) => {
                if !params.is_empty() {
                    return Err(Error::Parse("parameters given twice".into()));
                }
                Ok(CatalogRef {
                    family,
                    params: parse_params(r)?,
                    inner: None,
                })
            }
        }
    }

    fn get_usize(&self, key: &str) -> Result<Option<usize>> {
        self.params
            .get(key)
            .map(|v| v.parse::<usize>().map_err(|_| Error::Parse(format!("{key}={v} is not a number"))))
            .transpose()
    }

    fn req(&self, key: &str) -> Result<usize> {
        self.get_usize(key)?
            .ok_or_else(|| Error::BadParams(format!("{} needs parameter {key}", self.family)))
    }

    fn list<T: std::str::FromStr>(&self, key: &str) -> Result<Option<Vec<T>>> {
        self.params
            .get(key)
            .map(|v| {
                v.split(':')
                    .map(|x| x.parse::<T>().map_err(|_| Error::Parse(format!("bad entry {x:?} in {key}"))))
                    .collect()
            })
            .transpose()
    }

    fn field(&self) -> Result<Field> {
        let p = self.get_usize("p")?.unwrap_or(2) as u32;
        let k = self.get_usize("k")?.unwrap_or(1) as u32;
        Ok(ff_make(p, k, None)?)
    }

    fn check_keys(&self, allowed: &[&str]) -> Result<()> {
        for k in self.params.keys() {
            if !allowed.contains(&k.as_str()) && k != "p" && k != "k" {
                return Err(Error::BadParams(format!("{} does not take parameter {k}", self.family)));
            }
        }
        Ok(())
    }
}

impl std::fmt::Display for CatalogRef {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let params: Vec<String> = self.params.iter().map(|(k, v)| format!("{k}={v}")).collect();
        match &self.inner {
            Some(inner) if params.is_empty() => write!(f, "{}:{}", self.family, inner),
            Some(inner) => write!(f, "{}[{}]:{}", self.family, params.join(","), inner),
            None => write!(f, "{}:{}", self.family, params.join(",")),
        }
    }
}

/// A constructed algebra, with its vector-field realization when it has one.
#[derive(Debug, Clone)]
pub struct Built {
    pub algebra: SuperAlgebra,
    pub vectorial: Option<Vectorial>,
}

impl From<SuperAlgebra> for Built {
    fn from(algebra: SuperAlgebra) -> Built {
        Built { algebra, vectorial: None }
    }
}

impl From<Vectorial> for Built {
    fn from(v: Vectorial) -> Built {
        Built {
            algebra: v.algebra.clone(),
            vectorial: Some(v),
        }
    }
}

pub fn build(s: &str) -> Result<Built> {
    build_ref(&CatalogRef::parse(s)?)
}

pub fn build_ref(r: &CatalogRef) -> Result<Built> {
    if let Some(inner) = &r.inner {
        return build_wrapper(r, inner);
    }
    let f = r.field()?;
    let w = r.list::<i64>("w")?;
    use matrix::*;
    let built: Built = match r.family.as_str() {
        "gl" | "sl" | "psl" => {
            r.check_keys(&["n", "w"])?;
            let n = r.req("n")?;
            match r.family.as_str() {
                "gl" => gl(&f, n, w)?,
                "sl" => sl(&f, n, w)?,
                _ => psl(&f, n, w)?,
            }
            .into()
        }
        "o_I" | "o_Pi" | "osl_I" | "ZD" | "o1" => {
            r.check_keys(&["n"])?;
            let n = r.req("n")?;
            match r.family.as_str() {
                "o_I" => o_i(&f, n)?,
                "o_Pi" => o_pi(&f, n)?,
                "ZD" => zd(&f, n)?,
                "osl_I" => osl_i(&f, n)?,
                _ => o1_odd(&f, n)?,
            }
            .into()
        }
        "q" | "sq" | "psq" | "s_e_sq" | "ps_e_psq" => {
            r.check_keys(&["n"])?;
            let n = r.req("n")?;
            match r.family.as_str() {
                "q" => q(&f, n)?,
                "sq" => sq(&f, n)?,
                "psq" => psq(&f, n)?,
                "s_e_sq" => s_e_sq(&f, n)?,
                _ => ps_e_psq(&f, n)?,
            }
            .into()
        }
        "oo_IPi" | "oo1_IPi" => {
            r.check_keys(&["n", "m", "w"])?;
            let g = oo_ipi(&f, r.req("n")?, r.req("m")?, w)?;
            if r.family == "oo1_IPi" {
                derived_algebra(&g, 1)?.into()
            } else {
                g.into()
            }
        }
        "oo_model" => {
            r.check_keys(&["k", "m", "d"])?;
            // here k is the half-size of the even block; the field is GF(2)
            let f2 = ff_make(2, 1, None)?;
            let g = oo_ipi_model(&f2, r.req("k")?, r.req("m")?)?;
            match r.get_usize("d")? {
                Some(d) => derived_algebra(&g, d)?.into(),
                None => g.into(),
            }
        }
        "vect" | "svect" | "h_I" | "h_Pi" | "k" => {
            r.check_keys(&["n", "N", "odd", "w"])?;
            let shear: Vec<u32> = match r.list::<u32>("N")? {
                Some(v) => v,
                None => vec![1; r.req("n")?],
            };
            if let Some(n) = r.get_usize("n")? {
                if n != shear.len() {
                    return Err(Error::BadParams("n does not match the length of N".into()));
                }
            }
            let odd = r.get_usize("odd")?.unwrap_or(0);
            if odd > 0 && !matches!(r.family.as_str(), "vect" | "svect" | "k") {
                return Err(Error::BadParams(format!("{} takes no odd indeterminates", r.family)));
            }
            match r.family.as_str() {
                "vect" => vectorial::vect(&f, &shear, odd, w)?,
                "svect" => vectorial::svect(&f, &shear, odd, w)?,
                "h_I" => vectorial::h(&f, Form::I, &shear, w)?,
                "h_Pi" => vectorial::h(&f, Form::Pi, &shear, w)?,
                _ => vectorial::k_contact(&f, &shear, odd)?,
            }
            .into()
        }
        other => return Err(Error::BadParams(format!("unknown family {other:?}"))),
    };
    Ok(built)
}

fn build_wrapper(r: &CatalogRef, inner: &CatalogRef) -> Result<Built> {
    let g = build_ref(inner)?;
    match r.family.as_str() {
        "derived" => {
            r.check_keys(&["i"])?;
            let d = crate::superalg::derived(&g.algebra, r.get_usize("i")?);
            Ok(g.algebra.subalgebra(&d, "d")?.into())
        }
        "modcenter" => {
            let c = crate::superalg::center(&g.algebra);
            Ok(crate::superalg::quotient(&g.algebra, &c, Default::default())?.algebra.into())
        }
        "deform" => {
            let v = g.vectorial.as_ref().ok_or(Error::NotVectorial)?;
            Ok(vectorial::deform_onebarx(v)?.into())
        }
        "q" => match natural_witness(inner, &g.algebra) {
            Some(w) => Ok(crate::superize::queerify_restricted(&g.algebra, &w)?.algebra.into()),
            None => Ok(crate::superize::queerify(&g.algebra)?.algebra.into()),
        },
        "tq" => Ok(crate::superize::partial_queerify(&g.algebra, &Default::default())?.algebra.into()),
        other => Err(Error::BadParams(format!("unknown wrapper {other:?}"))),
    }
}

/// `X^[p] = X^p` for the matrix families acting on `K^n`, when `g` is the
/// algebra built from `r` (unweighted). The solver's choice may differ from
/// it by a central term.
pub fn natural_witness(r: &CatalogRef, g: &SuperAlgebra) -> Option<StructureWitness> {
    if r.inner.is_some() || r.params.contains_key("w") {
        return None;
    }
    let f = r.field().ok()?;
    let n = r.req("n").ok()?;
    let basis = matrix::linear_basis(&f, &r.family, n).ok()?;
    if basis.len() != g.dim() || g.dim_odd() > 0 {
        return None;
    }
    let coord = Coordinatizer::new(&f, n * n, &basis).ok()?;
    let table_p = basis
        .iter()
        .enumerate()
        .map(|(i, v)| {
            let m = Matrix::unflatten(&f, n, v).pow(f.p() as u64).ok()?;
            coord.coords(&m.flatten()).map(|value| Entry { basis: i, value })
        })
        .collect::<Option<Vec<_>>>()?;
    let w = StructureWitness { variant: Variant::P, table_p, table_2p_or_4: vec![], split: None };
    // the catalog basis must be the one of linear_basis
    let same = (0..g.dim()).all(|i| {
        (0..g.dim()).all(|j| {
            let mi = Matrix::unflatten(&f, n, &basis[i]);
            let mj = Matrix::unflatten(&f, n, &basis[j]);
            coord.coords(&mi.commutator(&mj).flatten()).as_ref() == Some(&g.bracket(&g.unit(i), &g.unit(j)))
        })
    });
    (same && crate::restrict::verify_witness(g, &w).ok()?.is_empty()).then_some(w)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_forms() {
        let r = CatalogRef::parse("o_I:n=5,p=2").unwrap();
        assert_eq!(r.family, "o_I");
        assert_eq!(r.params["n"], "5");
        let q = CatalogRef::parse("q:psl3").unwrap();
        assert_eq!(q.family, "q");
        assert_eq!(q.inner.as_ref().unwrap().family, "psl");
        let d = CatalogRef::parse("derived[i=1]:o_I:n=4").unwrap();
        assert_eq!(d.params["i"], "1");
        assert_eq!(d.inner.as_ref().unwrap().params["n"], "4");
        assert_eq!(CatalogRef::parse(&d.to_string()).unwrap(), d);
        assert!(CatalogRef::parse("o_I").is_err());
        assert!(CatalogRef::parse("o_I:n").is_err());
    }

    #[test]
    fn build_and_reject() {
        assert_eq!(build("o_I:n=5,p=2").unwrap().algebra.dim(), 15);
        assert_eq!(build("vect:N=1:1").unwrap().algebra.dim(), 8);
        assert!(matches!(build("o_Pi:n=3"), Err(Error::BadParams(_))));
        assert!(matches!(build("nosuch:n=3"), Err(Error::BadParams(_))));
        assert!(matches!(build("o_I:n=3,z=1"), Err(Error::BadParams(_))));
    }
}
