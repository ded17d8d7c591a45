//! Algebra files and certificates.
//!
//! Algebra files are UTF-8 JSON with keys in lexicographic order. The
//! writer puts one basis, bracket or table entry per line, so a file that
//! was written by [`save_algebra`] reloads and re-saves byte for byte.

use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::error::{Error, Result};
use crate::ffield::{self, Fe, FieldCtx, FieldSpec};
use crate::linalg::Vector;
use crate::restrict::{Entry, StructureWitness, Variant};
use crate::superalg::{Parity, Split, SuperAlgebra};

pub const FORMAT_VERSION: u32 = 1;
pub const TOOL_VERSION: &str = concat!("lieforge ", env!("CARGO_PKG_VERSION"));

/// A linear combination written as `[[name, coefficient digits], ...]`.
pub type Terms = Vec<(String, Vec<u32>)>;

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct BasisLine {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    degree: Option<i64>,
    name: String,
    parity: Parity,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct BracketLine {
    left: String,
    right: String,
    value: Terms,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct ValueLine {
    of: String,
    value: Terms,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct WitnessBlock {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    split: Option<Vec<String>>,
    #[serde(default)]
    table_2p_or_4: Vec<ValueLine>,
    table_p: Vec<ValueLine>,
    variant: Variant,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawFile {
    basis: Vec<BasisLine>,
    #[serde(default)]
    brackets: Vec<BracketLine>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    expected_witness: Option<WitnessBlock>,
    field: FieldSpec,
    format: u32,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    metadata: BTreeMap<String, String>,
    #[serde(default)]
    squares: Vec<ValueLine>,
}

/// Contents of an algebra file before the axioms are checked.
#[derive(Debug, Clone)]
pub struct AlgebraFile {
    pub algebra: SuperAlgebra,
    pub witness: Option<StructureWitness>,
    pub metadata: BTreeMap<String, String>,
}

impl AlgebraFile {
    pub fn new(algebra: SuperAlgebra) -> AlgebraFile {
        AlgebraFile { algebra, witness: None, metadata: BTreeMap::new() }
    }

    /// Parses without checking the Jacobi identity.
    pub fn parse_unchecked(text: &str) -> Result<AlgebraFile> {
        let raw: RawFile = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
        if raw.format != FORMAT_VERSION {
            return Err(Error::Parse(format!("unsupported format version {}", raw.format)));
        }
        let field = ffield::from_spec(&raw.field)?;
        let names: Vec<String> = raw.basis.iter().map(|b| b.name.clone()).collect();
        let mut index = BTreeMap::new();
        for (i, name) in names.iter().enumerate() {
            if name.is_empty() || index.insert(name.clone(), i).is_some() {
                return Err(Error::Parse(format!("duplicate or empty basis name {name:?}")));
            }
        }
        let parity: Vec<Parity> = raw.basis.iter().map(|b| b.parity).collect();
        let degrees = match raw.basis.iter().filter(|b| b.degree.is_some()).count() {
            0 => None,
            k if k == names.len() => Some(raw.basis.iter().map(|b| b.degree.unwrap()).collect()),
            _ => return Err(Error::Parse("degrees must be given for all basis vectors or none".into())),
        };
        let n = names.len();
        let lookup = |s: &str| -> Result<usize> {
            index.get(s).copied().ok_or_else(|| Error::Parse(format!("unknown basis name {s:?}")))
        };
        let vector = |t: &Terms| -> Result<Vector> { terms_to_vector(&field, n, t, &lookup) };

        let mut b = SuperAlgebra::builder(&field).basis(names.clone(), parity.clone()).degrees(degrees);
        let mut seen = BTreeSet::new();
        for line in &raw.brackets {
            let (i, j) = (lookup(&line.left)?, lookup(&line.right)?);
            let mut v = vector(&line.value)?;
            let (i, j) = if i <= j {
                (i, j)
            } else {
                // [b_j, b_i] = -(-1)^{|i||j|} [b_i, b_j]
                if !(parity[i].is_odd() && parity[j].is_odd()) {
                    v = v.iter().map(|&c| field.neg(c)).collect();
                }
                (j, i)
            };
            if !seen.insert((i, j)) {
                return Err(Error::Parse(format!("bracket [{}, {}] given twice", names[i], names[j])));
            }
            b.set_bracket(i, j, v);
        }
        let mut seen = BTreeSet::new();
        for line in &raw.squares {
            let i = lookup(&line.of)?;
            if !seen.insert(i) {
                return Err(Error::Parse(format!("square of {} given twice", names[i])));
            }
            b.set_square(i, vector(&line.value)?);
        }
        let algebra = b.build()?;

        let witness = match &raw.expected_witness {
            None => None,
            Some(w) => {
                let table = |lines: &[ValueLine]| -> Result<Vec<Entry>> {
                    let mut out: Vec<Entry> = lines
                        .iter()
                        .map(|l| Ok(Entry { basis: lookup(&l.of)?, value: vector(&l.value)? }))
                        .collect::<Result<_>>()?;
                    out.sort_by_key(|e| e.basis);
                    if out.windows(2).any(|w| w[0].basis == w[1].basis) {
                        return Err(Error::Parse("witness table lists a basis vector twice".into()));
                    }
                    Ok(out)
                };
                let split = match &w.split {
                    None => None,
                    Some(minus) => {
                        let mut labels = vec![false; n];
                        for m in minus {
                            labels[lookup(m)?] = true;
                        }
                        Some(Split::new(labels))
                    }
                };
                Some(StructureWitness {
                    variant: w.variant,
                    table_p: table(&w.table_p)?,
                    table_2p_or_4: table(&w.table_2p_or_4)?,
                    split,
                })
            }
        };
        Ok(AlgebraFile { algebra, witness, metadata: raw.metadata })
    }

    /// Parses and rejects algebras that fail the axioms.
    pub fn parse(text: &str) -> Result<AlgebraFile> {
        let f = AlgebraFile::parse_unchecked(text)?;
        let report = f.algebra.check_axioms();
        if let Some(v) = report.violations.first() {
            let names: Vec<&str> = v.basis.iter().map(|&i| f.algebra.names()[i].as_str()).collect();
            return Err(Error::AxiomFailure(format!(
                "{} violations, first {:?} at ({})",
                report.violations.len(),
                v.kind,
                names.join(", ")
            )));
        }
        Ok(f)
    }

    /// Canonical text: sorted keys, one entry per line, trailing newline.
    pub fn to_canonical(&self) -> String {
        let g = &self.algebra;
        let f = g.field();
        let n = g.dim();
        let names = g.names();
        let terms = |v: &[Fe]| vector_to_terms(f, names, v);
        let mut out = String::from("{\n");

        let basis: Vec<String> = (0..n)
            .map(|i| {
                line(&BasisLine {
                    degree: g.degrees().map(|d| d[i]),
                    name: names[i].clone(),
                    parity: g.parity()[i],
                })
            })
            .collect();
        push_array(&mut out, "basis", &basis, 1);

        let mut brackets = Vec::new();
        for i in 0..n {
            for j in i..n {
                let v = dense(n, g.bracket_basis(i, j));
                if v.iter().any(|&c| c != 0) {
                    brackets.push(line(&BracketLine {
                        left: names[i].clone(),
                        right: names[j].clone(),
                        value: terms(&v),
                    }));
                }
            }
        }
        push_array(&mut out, "brackets", &brackets, 1);

        if let Some(w) = &self.witness {
            let table = |entries: &[Entry]| -> Vec<String> {
                let mut e: Vec<&Entry> = entries.iter().collect();
                e.sort_by_key(|e| e.basis);
                e.iter()
                    .map(|e| line(&ValueLine { of: names[e.basis].clone(), value: terms(&e.value) }))
                    .collect()
            };
            out.push_str("  \"expected_witness\": {\n");
            if let Some(s) = &w.split {
                let minus: Vec<&String> = s.minus_indices().into_iter().map(|i| &names[i]).collect();
                out.push_str(&format!("    \"split\": {},\n", serde_json::to_string(&minus).unwrap()));
            }
            push_array(&mut out, "table_2p_or_4", &table(&w.table_2p_or_4), 2);
            push_array(&mut out, "table_p", &table(&w.table_p), 2);
            out.push_str(&format!("    \"variant\": {}\n", serde_json::to_string(&w.variant).unwrap()));
            out.push_str("  },\n");
        }

        out.push_str(&format!("  \"field\": {},\n", line(&f.spec())));
        out.push_str(&format!("  \"format\": {FORMAT_VERSION},\n"));
        if !self.metadata.is_empty() {
            out.push_str(&format!("  \"metadata\": {},\n", line(&self.metadata)));
        }

        let squares: Vec<String> = (0..n)
            .filter(|&i| !g.square_basis(i).is_empty())
            .map(|i| line(&ValueLine { of: names[i].clone(), value: terms(&dense(n, g.square_basis(i))) }))
            .collect();
        push_array(&mut out, "squares", &squares, 1);
        // the last member carries no trailing comma
        if out.ends_with(",\n") {
            out.truncate(out.len() - 2);
            out.push('\n');
        }
        out.push_str("}\n");
        out
    }
}

fn line<T: Serialize + ?Sized>(x: &T) -> String {
    serde_json::to_string(x).expect("plain data serializes")
}

fn push_array(out: &mut String, key: &str, items: &[String], depth: usize) {
    let pad = "  ".repeat(depth);
    if items.is_empty() {
        out.push_str(&format!("{pad}\"{key}\": [],\n"));
        return;
    }
    out.push_str(&format!("{pad}\"{key}\": [\n"));
    for (k, it) in items.iter().enumerate() {
        let sep = if k + 1 < items.len() { "," } else { "" };
        out.push_str(&format!("{pad}  {it}{sep}\n"));
    }
    out.push_str(&format!("{pad}],\n"));
}

fn dense(n: usize, s: &[(usize, Fe)]) -> Vector {
    let mut v = vec![0; n];
    for &(k, c) in s {
        v[k] = c;
    }
    v
}

pub fn vector_to_terms(f: &FieldCtx, names: &[String], v: &[Fe]) -> Terms {
    v.iter()
        .enumerate()
        .filter(|(_, &c)| c != 0)
        .map(|(i, &c)| (names[i].clone(), f.digits(c)))
        .collect()
}

fn terms_to_vector(f: &FieldCtx, n: usize, t: &Terms, lookup: &dyn Fn(&str) -> Result<usize>) -> Result<Vector> {
    let mut v = vec![0; n];
    let mut seen = BTreeSet::new();
    for (name, digits) in t {
        let i = lookup(name)?;
        if !seen.insert(i) {
            return Err(Error::Parse(format!("term {name:?} repeated")));
        }
        if digits.len() != f.k() as usize || digits.iter().any(|&d| d >= f.p()) {
            return Err(Error::Parse(format!("bad coefficient {digits:?} for {name:?}")));
        }
        v[i] = f.from_digits(digits);
    }
    Ok(v)
}

/// Loads a file and checks the axioms.
pub fn load_algebra_file(path: &std::path::Path) -> Result<AlgebraFile> {
    AlgebraFile::parse(&read_text(path)?)
}

pub fn read_text(path: &std::path::Path) -> Result<String> {
    let bytes = std::fs::read(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
    String::from_utf8(bytes).map_err(|_| Error::Parse(format!("{} is not UTF-8", path.display())))
}

pub fn save_algebra(file: &AlgebraFile) -> String {
    file.to_canonical()
}

pub fn sha256_hex(bytes: &[u8]) -> String {
    hex::encode(Sha256::digest(bytes))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum CertKind {
    Witness,
    Simplicity,
    Origin,
    ProlongEquality,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Certificate {
    pub input_digest: String,
    pub kind: CertKind,
    pub payload: serde_json::Value,
    pub tool: String,
}

impl Certificate {
    pub fn new<T: Serialize>(kind: CertKind, input: &[u8], payload: &T) -> Certificate {
        Certificate {
            input_digest: format!("sha256:{}", sha256_hex(input)),
            kind,
            payload: serde_json::to_value(payload).expect("payload serializes"),
            tool: TOOL_VERSION.to_string(),
        }
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(&serde_json::to_value(self).unwrap()).unwrap();
        s.push('\n');
        s
    }

    pub fn from_json(text: &str) -> Result<Certificate> {
        serde_json::from_str(text).map_err(|e| Error::Parse(format!("certificate: {e}")))
    }

    pub fn matches_input(&self, input: &[u8]) -> bool {
        self.input_digest == format!("sha256:{}", sha256_hex(input))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    #[test]
    fn round_trip_is_byte_stable() {
        for name in ["psl:n=3,p=2", "q:n=2,p=2", "o_I:n=4,p=2", "sl:n=2,p=3", "vect:N=1:1"] {
            let g = catalog::build(name).unwrap().algebra;
            let text = AlgebraFile::new(g.clone()).to_canonical();
            let back = AlgebraFile::parse(&text).unwrap();
            assert_eq!(back.algebra.names(), g.names());
            assert_eq!(back.to_canonical(), text, "{name}");
        }
    }

    #[test]
    fn witness_block_round_trip() {
        let g = catalog::build("psl:n=3,p=2").unwrap().algebra;
        let w = crate::restrict::find_p_structure(&g).unwrap().witness.unwrap();
        let mut f = AlgebraFile::new(g);
        f.witness = Some(w.clone());
        f.metadata.insert("source".into(), "test".into());
        let text = f.to_canonical();
        let back = AlgebraFile::parse(&text).unwrap();
        assert_eq!(back.witness.as_ref().unwrap().table_p, w.table_p);
        assert_eq!(back.to_canonical(), text);
    }

    #[test]
    fn rejects_unknown_keys_and_names() {
        let good = AlgebraFile::new(catalog::build("sl:n=2,p=3").unwrap().algebra).to_canonical();
        let bad = good.replacen("\"format\"", "\"extra\": 1,\n  \"format\"", 1);
        assert!(matches!(AlgebraFile::parse(&bad), Err(Error::Parse(_))));
        let bad = good.replacen("\"left\":\"", "\"left\":\"zz", 1);
        assert!(matches!(AlgebraFile::parse(&bad), Err(Error::Parse(_))));
    }

    #[test]
    fn certificate_digest() {
        let c = Certificate::new(CertKind::Simplicity, b"abc", &serde_json::json!({"simple": true}));
        assert_eq!(
            c.input_digest,
            "sha256:ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad"
        );
        assert!(c.matches_input(b"abc"));
        assert_eq!(Certificate::from_json(&c.to_json()).unwrap(), c);
    }
}
