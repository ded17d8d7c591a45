//! Arithmetic in GF(p^k) for small p and k.
//!
//! Elements are encoded as integers `sum c_i p^i` where `c_i` is the
//! coefficient of `x^i` modulo the defining polynomial. Multiplication goes
//! through discrete log tables, so a [`FieldCtx`] costs `O(p^k)` memory; the
//! order is capped at 2^16.

use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Raw field element, only meaningful together with its [`FieldCtx`].
pub type Fe = u32;

pub const MAX_ORDER: u64 = 1 << 16;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FieldError {
    #[error("{0} is not prime")]
    NotPrime(u32),
    #[error("characteristic {0} is not supported (use 2, 3 or 5)")]
    UnsupportedPrime(u32),
    #[error("extension degree {0} outside 1..=8")]
    BadDegree(u32),
    #[error("modulus {0:?} is not monic of the requested degree")]
    BadModulus(Vec<u32>),
    #[error("modulus {0:?} is reducible")]
    ReducibleModulus(Vec<u32>),
    #[error("field order {0} exceeds 2^16")]
    OrderTooLarge(u64),
    #[error("division by zero")]
    DivisionByZero,
    #[error("operands live in different fields")]
    MixedFields,
}

/// Serialized form of a field: `{"p": 2, "k": 2, "modulus": [1, 1, 1]}`.
/// The modulus is listed constant term first and includes the leading 1.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FieldSpec {
    pub p: u32,
    pub k: u32,
    pub modulus: Vec<u32>,
}

pub struct FieldCtx {
    p: u32,
    k: u32,
    modulus: Vec<u32>,
    order: u32,
    exp: Vec<Fe>,
    log: Vec<u32>,
    primitive: Fe,
}

/// Shared handle to a field.
pub type Field = Arc<FieldCtx>;

impl fmt::Debug for FieldCtx {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GF({}^{}; {:?})", self.p, self.k, self.modulus)
    }
}

impl PartialEq for FieldCtx {
    fn eq(&self, other: &Self) -> bool {
        self.p == other.p && self.k == other.k && self.modulus == other.modulus
    }
}
impl Eq for FieldCtx {}

fn is_prime(p: u32) -> bool {
    p >= 2 && (2..p).take_while(|d| d * d <= p).all(|d| p % d != 0)
}

// ---- polynomials over GF(p), coefficient lists constant term first ----

fn poly_trim(mut a: Vec<u32>) -> Vec<u32> {
    while a.last() == Some(&0) {
        a.pop();
    }
    a
}

fn poly_rem(a: &[u32], m: &[u32], p: u32) -> Vec<u32> {
    let mut r = poly_trim(a.to_vec());
    let m = poly_trim(m.to_vec());
    let dm = m.len() - 1;
    let lead_inv = mod_inv(*m.last().unwrap(), p);
    while r.len() > dm {
        let shift = r.len() - 1 - dm;
        let c = (r.last().unwrap() * lead_inv) % p;
        for (i, &mi) in m.iter().enumerate() {
            r[shift + i] = (r[shift + i] + p * p - c * mi % p) % p;
        }
        r = poly_trim(r);
    }
    r
}

fn mod_inv(a: u32, p: u32) -> u32 {
    (1..p).find(|b| a * b % p == 1).expect("nonzero residue")
}

/// Enumerates monic polynomials of degree `d` in the order used to pick the
/// default modulus: lexicographic in `(c_{d-1}, ..., c_0)`.
fn monic_polys(p: u32, d: u32) -> impl Iterator<Item = Vec<u32>> {
    let count = (p as u64).pow(d);
    (0..count).map(move |mut idx| {
        let mut c = vec![0u32; d as usize + 1];
        c[d as usize] = 1;
        // idx enumerates (c_{d-1},...,c_0) with c_0 varying fastest
        for i in 0..d as usize {
            c[i] = (idx % p as u64) as u32;
            idx /= p as u64;
        }
        c
    })
}

/// Irreducibility by exhaustive trial division with monic polynomials of
/// degree at most `deg/2`.
pub fn is_irreducible(poly: &[u32], p: u32) -> bool {
    let poly = poly_trim(poly.to_vec());
    let d = poly.len().saturating_sub(1) as u32;
    if d == 0 {
        return false;
    }
    (1..=d / 2).all(|e| monic_polys(p, e).all(|q| !poly_rem(&poly, &q, p).is_empty()))
}

/// Builds GF(p^k). Without an explicit modulus the lexicographically
/// smallest irreducible monic polynomial is used, so field specs written to
/// disk are reproducible.
pub fn ff_make(p: u32, k: u32, modulus: Option<&[u32]>) -> Result<Field, FieldError> {
    if !is_prime(p) {
        return Err(FieldError::NotPrime(p));
    }
    if !matches!(p, 2 | 3 | 5) {
        return Err(FieldError::UnsupportedPrime(p));
    }
    if !(1..=8).contains(&k) {
        return Err(FieldError::BadDegree(k));
    }
    let order = (p as u64).pow(k);
    if order > MAX_ORDER {
        return Err(FieldError::OrderTooLarge(order));
    }
    let modulus = if k == 1 {
        vec![0, 1]
    } else if let Some(m) = modulus {
        let m: Vec<u32> = m.to_vec();
        if m.len() != k as usize + 1 || m[k as usize] != 1 || m.iter().any(|&c| c >= p) {
            return Err(FieldError::BadModulus(m));
        }
        if !is_irreducible(&m, p) {
            return Err(FieldError::ReducibleModulus(m));
        }
        m
    } else {
        monic_polys(p, k)
            .find(|m| is_irreducible(m, p))
            .expect("an irreducible polynomial of every degree exists")
    };
    Ok(Arc::new(FieldCtx::build(p, k, modulus)))
}

/// Convenience for the prime field GF(p).
pub fn prime_field(p: u32) -> Result<Field, FieldError> {
    ff_make(p, 1, None)
}

pub fn from_spec(spec: &FieldSpec) -> Result<Field, FieldError> {
    ff_make(spec.p, spec.k, Some(&spec.modulus))
}

impl FieldCtx {
    fn build(p: u32, k: u32, modulus: Vec<u32>) -> FieldCtx {
        let order = p.pow(k);
        let mut ctx = FieldCtx {
            p,
            k,
            modulus,
            order,
            exp: Vec::new(),
            log: Vec::new(),
            primitive: 1,
        };
        // schoolbook multiplication for table construction
        let slow_mul = |ctx: &FieldCtx, a: Fe, b: Fe| -> Fe {
            let da = ctx.digits(a);
            let db = ctx.digits(b);
            let mut prod = vec![0u32; 2 * k as usize];
            for (i, &x) in da.iter().enumerate() {
                for (j, &y) in db.iter().enumerate() {
                    prod[i + j] = (prod[i + j] + x * y) % p;
                }
            }
            let r = poly_rem(&prod, &ctx.modulus, p);
            ctx.from_digits(&r)
        };
        let n = order - 1;
        for g in 2..order {
            let mut x: Fe = 1;
            let mut period = 0u32;
            loop {
                x = slow_mul(&ctx, x, g);
                period += 1;
                if x == 1 || period > n {
                    break;
                }
            }
            if period == n {
                ctx.primitive = g;
                break;
            }
        }
        let mut exp = vec![0; 2 * n as usize];
        let mut log = vec![0; order as usize];
        let mut x: Fe = 1;
        for i in 0..n {
            exp[i as usize] = x;
            exp[(i + n) as usize] = x;
            log[x as usize] = i;
            x = slow_mul(&ctx, x, ctx.primitive);
        }
        ctx.exp = exp;
        ctx.log = log;
        ctx
    }

    pub fn p(&self) -> u32 {
        self.p
    }
    pub fn k(&self) -> u32 {
        self.k
    }
    pub fn order(&self) -> u32 {
        self.order
    }
    pub fn modulus(&self) -> &[u32] {
        &self.modulus
    }
    pub fn spec(&self) -> FieldSpec {
        FieldSpec {
            p: self.p,
            k: self.k,
            modulus: self.modulus.clone(),
        }
    }
    pub fn is_gf2(&self) -> bool {
        self.order == 2
    }

    pub fn digits(&self, a: Fe) -> Vec<u32> {
        let mut a = a;
        (0..self.k)
            .map(|_| {
                let d = a % self.p;
                a /= self.p;
                d
            })
            .collect()
    }

    pub fn from_digits(&self, d: &[u32]) -> Fe {
        d.iter().rev().fold(0, |acc, &c| acc * self.p + c % self.p)
    }

    /// Image of an integer under `Z -> GF(p) -> GF(p^k)`.
    pub fn from_int(&self, n: i64) -> Fe {
        n.rem_euclid(self.p as i64) as Fe
    }

    /// The class of `x` modulo the defining polynomial; 1 for prime fields.
    pub fn generator(&self) -> Fe {
        if self.k == 1 {
            1
        } else {
            self.p
        }
    }

    /// A fixed generator of the multiplicative group.
    pub fn primitive_element(&self) -> Fe {
        self.primitive
    }

    #[inline]
    pub fn add(&self, a: Fe, b: Fe) -> Fe {
        if self.p == 2 {
            return a ^ b;
        }
        if self.k == 1 {
            let s = a + b;
            return if s >= self.p { s - self.p } else { s };
        }
        let (mut a, mut b) = (a, b);
        let mut out = 0;
        let mut place = 1;
        for _ in 0..self.k {
            let s = (a % self.p + b % self.p) % self.p;
            out += s * place;
            place *= self.p;
            a /= self.p;
            b /= self.p;
        }
        out
    }

    #[inline]
    pub fn neg(&self, a: Fe) -> Fe {
        if self.p == 2 {
            return a;
        }
        if self.k == 1 {
            return if a == 0 { 0 } else { self.p - a };
        }
        let mut a = a;
        let mut out = 0;
        let mut place = 1;
        for _ in 0..self.k {
            let d = a % self.p;
            out += ((self.p - d) % self.p) * place;
            place *= self.p;
            a /= self.p;
        }
        out
    }

    #[inline]
    pub fn sub(&self, a: Fe, b: Fe) -> Fe {
        self.add(a, self.neg(b))
    }

    #[inline]
    pub fn mul(&self, a: Fe, b: Fe) -> Fe {
        if a == 0 || b == 0 {
            return 0;
        }
        if self.order == 2 {
            return 1;
        }
        self.exp[(self.log[a as usize] + self.log[b as usize]) as usize]
    }

    pub fn inv(&self, a: Fe) -> Result<Fe, FieldError> {
        if a == 0 {
            return Err(FieldError::DivisionByZero);
        }
        if self.order == 2 {
            return Ok(1);
        }
        let n = self.order - 1;
        Ok(self.exp[((n - self.log[a as usize]) % n) as usize])
    }

    pub fn div(&self, a: Fe, b: Fe) -> Result<Fe, FieldError> {
        Ok(self.mul(a, self.inv(b)?))
    }

    pub fn pow(&self, a: Fe, e: u64) -> Fe {
        if e == 0 {
            return 1;
        }
        if a == 0 {
            return 0;
        }
        if self.order == 2 {
            return 1;
        }
        let n = (self.order - 1) as u64;
        let l = (self.log[a as usize] as u64 * (e % n)) % n;
        self.exp[l as usize]
    }

    /// `a -> a^p`.
    pub fn frobenius(&self, a: Fe) -> Fe {
        self.pow(a, self.p as u64)
    }

    pub fn elements(&self) -> impl Iterator<Item = Fe> {
        0..self.order
    }

    /// Human-readable rendering: integers for prime fields, otherwise a
    /// polynomial in `a` (the class of `x`).
    pub fn render(&self, a: Fe) -> String {
        if self.k == 1 {
            return a.to_string();
        }
        let d = self.digits(a);
        let mut terms = Vec::new();
        for (i, &c) in d.iter().enumerate().rev() {
            if c == 0 {
                continue;
            }
            let mono = match i {
                0 => String::new(),
                1 => "a".to_string(),
                _ => format!("a^{i}"),
            };
            terms.push(match (c, i) {
                (_, 0) => c.to_string(),
                (1, _) => mono,
                _ => format!("{c}{mono}"),
            });
        }
        if terms.is_empty() {
            "0".into()
        } else {
            terms.join("+")
        }
    }
}

/// A field element bundled with its field, for checked arithmetic at API
/// boundaries. Inner loops use raw [`Fe`] values directly.
#[derive(Clone)]
pub struct FieldElement {
    field: Field,
    value: Fe,
}

impl fmt::Debug for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.field.render(self.value))
    }
}

impl PartialEq for FieldElement {
    fn eq(&self, other: &Self) -> bool {
        *self.field == *other.field && self.value == other.value
    }
}

impl FieldElement {
    pub fn new(field: &Field, value: Fe) -> FieldElement {
        assert!(value < field.order(), "element out of range");
        FieldElement {
            field: field.clone(),
            value,
        }
    }
    pub fn value(&self) -> Fe {
        self.value
    }
    pub fn field(&self) -> &Field {
        &self.field
    }

    fn same(&self, other: &FieldElement) -> Result<(), FieldError> {
        if Arc::ptr_eq(&self.field, &other.field) || *self.field == *other.field {
            Ok(())
        } else {
            Err(FieldError::MixedFields)
        }
    }

    fn wrap(&self, value: Fe) -> FieldElement {
        FieldElement {
            field: self.field.clone(),
            value,
        }
    }

    pub fn add(&self, other: &FieldElement) -> Result<FieldElement, FieldError> {
        self.same(other)?;
        Ok(self.wrap(self.field.add(self.value, other.value)))
    }
    pub fn sub(&self, other: &FieldElement) -> Result<FieldElement, FieldError> {
        self.same(other)?;
        Ok(self.wrap(self.field.sub(self.value, other.value)))
    }
    pub fn mul(&self, other: &FieldElement) -> Result<FieldElement, FieldError> {
        self.same(other)?;
        Ok(self.wrap(self.field.mul(self.value, other.value)))
    }
    pub fn inv(&self) -> Result<FieldElement, FieldError> {
        Ok(self.wrap(self.field.inv(self.value)?))
    }
    pub fn pow(&self, e: u64) -> FieldElement {
        self.wrap(self.field.pow(self.value, e))
    }
    pub fn frobenius(&self) -> FieldElement {
        self.wrap(self.field.frobenius(self.value))
    }
}
