//! Divided powers `O(m; N | n)`.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::ffield::{Fe, Field};
use crate::linalg::Vector;

/// Monomial `x^(a) xi^S` with `S` a bitmask over the odd indeterminates.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial {
    pub a: Vec<u32>,
    pub s: u32,
}

impl Monomial {
    pub fn odd_count(&self) -> u32 {
        self.s.count_ones()
    }
}

/// `binom(n, k) mod p` by Lucas' theorem.
pub fn lucas(p: u32, mut n: u64, mut k: u64) -> u32 {
    let p64 = p as u64;
    let mut out = 1u64;
    while n > 0 || k > 0 {
        let (ni, ki) = (n % p64, k % p64);
        if ki > ni {
            return 0;
        }
        let mut c = 1u64;
        for t in 0..ki {
            c = c * (ni - t) / (t + 1);
        }
        out = out * (c % p64) % p64;
        n /= p64;
        k /= p64;
    }
    out as u32
}

#[derive(Debug)]
pub struct DividedPowers {
    field: Field,
    shear: Vec<u32>,
    n_odd: usize,
    monos: Vec<Monomial>,
    index: HashMap<Monomial, usize>,
}

impl DividedPowers {
    pub fn new(field: &Field, shear: &[u32], n_odd: usize) -> Result<DividedPowers> {
        if shear.contains(&0) {
            return Err(Error::BadShearing("shearing entries must be at least 1".into()));
        }
        let p = field.p() as u64;
        let bounds: Vec<u64> = shear.iter().map(|&s| p.pow(s)).collect();
        let total: u64 = bounds.iter().product::<u64>() << n_odd;
        if total > 1 << 16 || n_odd > 16 {
            return Err(Error::BadShearing(format!("O has dimension {total}, too large")));
        }
        let mut monos = Vec::with_capacity(total as usize);
        let even: u64 = bounds.iter().product();
        for s in 0..(1u32 << n_odd) {
            for mut idx in 0..even {
                let mut a = vec![0u32; shear.len()];
                for (ai, &b) in a.iter_mut().zip(&bounds) {
                    *ai = (idx % b) as u32;
                    idx /= b;
                }
                monos.push(Monomial { a, s });
            }
        }
        // order by total degree so low-degree monomials come first
        monos.sort_by_key(|m| (m.a.iter().sum::<u32>() + m.odd_count(), m.clone()));
        let index = monos.iter().enumerate().map(|(i, m)| (m.clone(), i)).collect();
        Ok(DividedPowers {
            field: field.clone(),
            shear: shear.to_vec(),
            n_odd,
            monos,
            index,
        })
    }

    pub fn field(&self) -> &Field {
        &self.field
    }
    pub fn n_even(&self) -> usize {
        self.shear.len()
    }
    pub fn n_odd(&self) -> usize {
        self.n_odd
    }
    pub fn n_vars(&self) -> usize {
        self.shear.len() + self.n_odd
    }
    pub fn shear(&self) -> &[u32] {
        &self.shear
    }
    pub fn dim(&self) -> usize {
        self.monos.len()
    }
    pub fn monomial(&self, i: usize) -> &Monomial {
        &self.monos[i]
    }
    pub fn index_of(&self, m: &Monomial) -> Option<usize> {
        self.index.get(m).copied()
    }

    pub fn bound(&self, i: usize) -> u32 {
        self.field.p().pow(self.shear[i])
    }

    /// Index of the coordinate function `u_k` (`x_k` then `xi_k`).
    pub fn coordinate(&self, k: usize) -> usize {
        let m = self.n_even();
        let mono = if k < m {
            let mut a = vec![0; m];
            a[k] = 1;
            Monomial { a, s: 0 }
        } else {
            Monomial { a: vec![0; m], s: 1 << (k - m) }
        };
        self.index[&mono]
    }

    pub fn one(&self) -> usize {
        self.index[&Monomial { a: vec![0; self.n_even()], s: 0 }]
    }

    /// The product of all top divided powers (no odd part).
    pub fn top(&self) -> usize {
        let a = (0..self.n_even()).map(|i| self.bound(i) - 1).collect();
        self.index[&Monomial { a, s: 0 }]
    }

    pub fn is_odd(&self, i: usize) -> bool {
        self.monos[i].odd_count() % 2 == 1
    }

    pub fn mul_monomials(&self, i: usize, j: usize) -> Option<(Fe, usize)> {
        let (x, y) = (&self.monos[i], &self.monos[j]);
        if x.s & y.s != 0 {
            return None;
        }
        let p = self.field.p();
        let mut coeff = 1u32;
        let mut a = Vec::with_capacity(x.a.len());
        for k in 0..x.a.len() {
            let s = x.a[k] + y.a[k];
            if s >= self.bound(k) {
                return None;
            }
            coeff = coeff * lucas(p, s as u64, x.a[k] as u64) % p;
            if coeff == 0 {
                return None;
            }
            a.push(s);
        }
        // reorder xi^S xi^T into increasing order
        let mut swaps = 0;
        for t in 0..self.n_odd {
            if y.s >> t & 1 == 1 {
                swaps += (x.s >> (t + 1)).count_ones();
            }
        }
        let f = &*self.field;
        let c = if swaps % 2 == 1 { f.neg(coeff) } else { coeff };
        Some((c, self.index[&Monomial { a, s: x.s | y.s }]))
    }

    pub fn mul(&self, f: &[Fe], g: &[Fe]) -> Vector {
        let fld = &*self.field;
        let mut out = vec![0; self.dim()];
        for (i, &a) in f.iter().enumerate().filter(|(_, &a)| a != 0) {
            for (j, &b) in g.iter().enumerate().filter(|(_, &b)| b != 0) {
                if let Some((c, k)) = self.mul_monomials(i, j) {
                    out[k] = fld.add(out[k], fld.mul(c, fld.mul(a, b)));
                }
            }
        }
        out
    }

    /// `d/du_k` of a basis monomial.
    pub fn deriv_monomial(&self, k: usize, i: usize) -> Option<(Fe, usize)> {
        let x = &self.monos[i];
        let m = self.n_even();
        if k < m {
            if x.a[k] == 0 {
                return None;
            }
            let mut a = x.a.clone();
            a[k] -= 1;
            Some((1, self.index[&Monomial { a, s: x.s }]))
        } else {
            let t = k - m;
            if x.s >> t & 1 == 0 {
                return None;
            }
            let before = (x.s & ((1 << t) - 1)).count_ones();
            let c = if before % 2 == 1 { self.field.neg(1) } else { 1 };
            Some((c, self.index[&Monomial { a: x.a.clone(), s: x.s & !(1 << t) }]))
        }
    }

    pub fn deriv(&self, k: usize, f: &[Fe]) -> Vector {
        let fld = &*self.field;
        let mut out = vec![0; self.dim()];
        for (i, &a) in f.iter().enumerate().filter(|(_, &a)| a != 0) {
            if let Some((c, j)) = self.deriv_monomial(k, i) {
                out[j] = fld.add(out[j], fld.mul(a, c));
            }
        }
        out
    }

    pub fn unit(&self, i: usize) -> Vector {
        crate::linalg::unit(self.dim(), i)
    }

    pub fn monomial_name(&self, i: usize) -> String {
        let x = &self.monos[i];
        let mut parts = Vec::new();
        for (k, &a) in x.a.iter().enumerate() {
            match a {
                0 => {}
                1 => parts.push(format!("x{}", k + 1)),
                _ => parts.push(format!("x{}^({a})", k + 1)),
            }
        }
        for t in 0..self.n_odd {
            if x.s >> t & 1 == 1 {
                parts.push(format!("t{}", t + 1));
            }
        }
        if parts.is_empty() {
            "1".into()
        } else {
            parts.join("")
        }
    }

    /// Weighted degree of a basis monomial.
    pub fn degree(&self, i: usize, weights: &[i64]) -> i64 {
        let x = &self.monos[i];
        let m = self.n_even();
        let mut d: i64 = x.a.iter().zip(weights).map(|(&a, &w)| a as i64 * w).sum();
        for t in 0..self.n_odd {
            if x.s >> t & 1 == 1 {
                d += weights[m + t];
            }
        }
        d
    }
}
