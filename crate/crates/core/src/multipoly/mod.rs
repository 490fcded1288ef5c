//! Sparse multivariate polynomials over a finite field, plus the constructions
//! built on them: summation polynomials, symmetrization, Weil restriction.

pub mod semaev;
pub mod symmetric;
pub mod weil;

use std::collections::{BTreeMap, HashMap};
use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::ff_prime::{Fp, PrimeField};
use crate::field::Field;
use crate::unipoly::UniPoly;

pub use semaev::{resultant_in, semaev};
pub use symmetric::{elementary, symmetrize};
pub use weil::{restricted_symmetric_functions, weil_restrict, weil_restrict_f3};

pub const MAX_VARS: usize = 7;

/// A monomial packed into a `u64`: the total degree in the top byte, then the
/// exponent of variable 0, 1, … in successively lower bytes. Integer order is
/// graded lexicographic order with x0 > x1 > …, and multiplication is addition.
pub type Monomial = u64;

pub fn pack(exps: &[u32]) -> Monomial {
    assert!(exps.len() <= MAX_VARS, "too many variables");
    let mut m = 0u64;
    let mut total = 0u32;
    for (i, &e) in exps.iter().enumerate() {
        assert!(e < 256, "exponent {e} out of range");
        total += e;
        m |= (e as u64) << (8 * (MAX_VARS - 1 - i));
    }
    assert!(total < 256, "total degree {total} out of range");
    m | ((total as u64) << 56)
}

#[inline]
pub fn exponent(m: Monomial, i: usize) -> u32 {
    ((m >> (8 * (MAX_VARS - 1 - i))) & 0xff) as u32
}

#[inline]
pub fn total_degree_of(m: Monomial) -> u32 {
    (m >> 56) as u32
}

pub fn unpack(m: Monomial, nvars: usize) -> Vec<u32> {
    (0..nvars).map(|i| exponent(m, i)).collect()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MultiPoly<E> {
    nvars: usize,
    /// Sorted by monomial, leading (largest) term first; no zero coefficients.
    terms: Vec<(Monomial, E)>,
}

impl<E: Copy + Eq> MultiPoly<E> {
    pub fn zero(nvars: usize) -> Self {
        assert!(nvars <= MAX_VARS);
        MultiPoly { nvars, terms: Vec::new() }
    }

    pub fn constant<F: Field<Elem = E>>(k: &F, nvars: usize, c: E) -> Self {
        Self::from_terms(k, nvars, [(0, c)])
    }

    pub fn var<F: Field<Elem = E>>(k: &F, nvars: usize, i: usize) -> Self {
        let mut e = vec![0; nvars];
        e[i] = 1;
        Self::monomial(k, nvars, &e, k.one())
    }

    pub fn monomial<F: Field<Elem = E>>(k: &F, nvars: usize, exps: &[u32], c: E) -> Self {
        assert_eq!(exps.len(), nvars);
        Self::from_terms(k, nvars, [(pack(exps), c)])
    }

    /// Collects terms, merging repeated monomials and dropping zeros.
    pub fn from_terms<F: Field<Elem = E>>(k: &F, nvars: usize, terms: impl IntoIterator<Item = (Monomial, E)>) -> Self {
        let mut acc: HashMap<Monomial, E> = HashMap::new();
        for (m, c) in terms {
            let slot = acc.entry(m).or_insert_with(|| k.zero());
            *slot = k.add(*slot, c);
        }
        Self::from_map(k, nvars, acc)
    }

    fn from_map<F: Field<Elem = E>>(k: &F, nvars: usize, acc: HashMap<Monomial, E>) -> Self {
        let mut terms: Vec<_> = acc.into_iter().filter(|&(_, c)| !k.is_zero(c)).collect();
        terms.sort_unstable_by(|a, b| b.0.cmp(&a.0));
        MultiPoly { nvars, terms }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn terms(&self) -> &[(Monomial, E)] {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn leading_term(&self) -> Option<(Monomial, E)> {
        self.terms.first().copied()
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.iter().map(|&(m, _)| total_degree_of(m)).max()
    }

    pub fn degree_in(&self, i: usize) -> Option<u32> {
        self.terms.iter().map(|&(m, _)| exponent(m, i)).max()
    }

    pub fn coeff<F: Field<Elem = E>>(&self, k: &F, exps: &[u32]) -> E {
        let m = pack(exps);
        self.terms.binary_search_by(|t| m.cmp(&t.0)).map(|i| self.terms[i].1).unwrap_or_else(|_| k.zero())
    }

    pub fn is_homogeneous(&self) -> bool {
        self.terms.windows(2).all(|w| total_degree_of(w[0].0) == total_degree_of(w[1].0))
    }

    pub fn add<F: Field<Elem = E>>(&self, other: &Self, k: &F) -> Self {
        assert_eq!(self.nvars, other.nvars);
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        while i < self.terms.len() && j < other.terms.len() {
            let (a, b) = (self.terms[i], other.terms[j]);
            match a.0.cmp(&b.0) {
                std::cmp::Ordering::Greater => {
                    out.push(a);
                    i += 1;
                }
                std::cmp::Ordering::Less => {
                    out.push(b);
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    let c = k.add(a.1, b.1);
                    if !k.is_zero(c) {
                        out.push((a.0, c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&self.terms[i..]);
        out.extend_from_slice(&other.terms[j..]);
        MultiPoly { nvars: self.nvars, terms: out }
    }

    pub fn neg<F: Field<Elem = E>>(&self, k: &F) -> Self {
        let terms = self.terms.iter().map(|&(m, c)| (m, k.neg(c))).collect();
        MultiPoly { nvars: self.nvars, terms }
    }

    pub fn sub<F: Field<Elem = E>>(&self, other: &Self, k: &F) -> Self {
        self.add(&other.neg(k), k)
    }

    pub fn scale<F: Field<Elem = E>>(&self, k: &F, c: E) -> Self {
        if k.is_zero(c) {
            return Self::zero(self.nvars);
        }
        let terms = self.terms.iter().map(|&(m, a)| (m, k.mul(a, c))).collect();
        MultiPoly { nvars: self.nvars, terms }
    }

    /// Multiplies by `c · x^mono`.
    pub fn mul_term<F: Field<Elem = E>>(&self, k: &F, mono: Monomial, c: E) -> Self {
        if k.is_zero(c) {
            return Self::zero(self.nvars);
        }
        let terms = self.terms.iter().map(|&(m, a)| (m + mono, k.mul(a, c))).collect();
        MultiPoly { nvars: self.nvars, terms }
    }

    pub fn mul<F: Field<Elem = E>>(&self, other: &Self, k: &F) -> Self {
        assert_eq!(self.nvars, other.nvars);
        let mut acc: HashMap<Monomial, E> = HashMap::with_capacity(self.terms.len() * other.terms.len() / 2 + 1);
        for &(ma, a) in &self.terms {
            for &(mb, b) in &other.terms {
                let slot = acc.entry(ma + mb).or_insert_with(|| k.zero());
                *slot = k.add(*slot, k.mul(a, b));
            }
        }
        Self::from_map(k, self.nvars, acc)
    }

    pub fn pow<F: Field<Elem = E>>(&self, k: &F, e: u32) -> Self {
        let mut acc = Self::constant(k, self.nvars, k.one());
        for _ in 0..e {
            acc = acc.mul(self, k);
        }
        acc
    }

    /// Substitutes `values[i]` (polynomials in `nvars` variables) for variable i.
    pub fn substitute<F: Field<Elem = E>>(&self, k: &F, nvars: usize, values: &[Self]) -> Self {
        assert_eq!(values.len(), self.nvars);
        let mut powers: Vec<Vec<Self>> = Vec::with_capacity(self.nvars);
        for (i, v) in values.iter().enumerate() {
            let d = self.degree_in(i).unwrap_or(0);
            let mut row = vec![Self::constant(k, nvars, k.one())];
            for j in 0..d as usize {
                row.push(row[j].mul(v, k));
            }
            powers.push(row);
        }
        let mut acc: HashMap<Monomial, E> = HashMap::new();
        for &(m, c) in &self.terms {
            let mut t = Self::constant(k, nvars, c);
            for (i, row) in powers.iter().enumerate() {
                let e = exponent(m, i) as usize;
                if e > 0 {
                    t = t.mul(&row[e], k);
                }
            }
            for (tm, tc) in t.terms {
                let slot = acc.entry(tm).or_insert_with(|| k.zero());
                *slot = k.add(*slot, tc);
            }
        }
        Self::from_map(k, nvars, acc)
    }

    pub fn eval<F: Field<Elem = E>>(&self, k: &F, point: &[E]) -> E {
        assert_eq!(point.len(), self.nvars);
        let mut powers: Vec<Vec<E>> = Vec::with_capacity(self.nvars);
        for i in 0..self.nvars {
            let d = self.degree_in(i).unwrap_or(0) as usize;
            let mut row = Vec::with_capacity(d + 1);
            let mut acc = k.one();
            for _ in 0..=d {
                row.push(acc);
                acc = k.mul(acc, point[i]);
            }
            powers.push(row);
        }
        let mut sum = k.zero();
        for &(m, c) in &self.terms {
            let mut t = c;
            for (i, row) in powers.iter().enumerate() {
                let e = exponent(m, i) as usize;
                if e > 0 {
                    t = k.mul(t, row[e]);
                }
            }
            sum = k.add(sum, t);
        }
        sum
    }

    /// Renames variable `i` to `perm[i]`.
    pub fn permute<F: Field<Elem = E>>(&self, k: &F, perm: &[usize]) -> Self {
        assert_eq!(perm.len(), self.nvars);
        self.rename(k, self.nvars, perm)
    }

    /// Moves variable `i` to position `map[i]` of a ring with `nvars` variables.
    /// Variables absent from the new ring must not occur.
    pub fn rename<F: Field<Elem = E>>(&self, k: &F, nvars: usize, map: &[usize]) -> Self {
        assert_eq!(map.len(), self.nvars);
        let terms = self.terms.iter().map(|&(m, c)| {
            let mut e = vec![0; nvars];
            for (i, &p) in map.iter().enumerate() {
                let x = exponent(m, i);
                if p >= nvars {
                    assert_eq!(x, 0, "dropping a variable that occurs");
                } else {
                    e[p] += x;
                }
            }
            (pack(&e), c)
        });
        Self::from_terms(k, nvars, terms)
    }

    /// Invariance under a transposition and a full cycle, which generate S_n.
    pub fn is_symmetric<F: Field<Elem = E>>(&self, k: &F) -> bool {
        let n = self.nvars;
        if n < 2 {
            return true;
        }
        let mut swap: Vec<usize> = (0..n).collect();
        swap.swap(0, 1);
        let cycle: Vec<usize> = (0..n).map(|i| (i + 1) % n).collect();
        self.permute(k, &swap) == *self && self.permute(k, &cycle) == *self
    }

    /// Reduces modulo x_i^q − x_i: every positive exponent e becomes
    /// ((e − 1) mod (q − 1)) + 1.
    pub fn reduce_exponents<F: Field<Elem = E>>(&self, k: &F, q: u128) -> Self {
        let terms = self.terms.iter().map(|&(m, c)| {
            let e: Vec<u32> =
                unpack(m, self.nvars).into_iter().map(|e| if e == 0 { 0 } else { (((e - 1) as u128 % (q - 1)) + 1) as u32 }).collect();
            (pack(&e), c)
        });
        Self::from_terms(k, self.nvars, terms)
    }

    /// Coefficients with respect to variable `i`: entry j is the coefficient of
    /// x_i^j, a polynomial in which x_i no longer occurs.
    pub fn coefficients_in<F: Field<Elem = E>>(&self, k: &F, i: usize) -> Vec<Self> {
        let d = self.degree_in(i).unwrap_or(0) as usize;
        let mut parts: Vec<Vec<(Monomial, E)>> = vec![Vec::new(); d + 1];
        let shift = 8 * (MAX_VARS - 1 - i);
        for &(m, c) in &self.terms {
            let e = exponent(m, i) as u64;
            let stripped = m - (e << shift) - (e << 56);
            parts[e as usize].push((stripped, c));
        }
        parts.into_iter().map(|t| Self::from_terms(k, self.nvars, t)).collect()
    }

    /// Substitutes values for every variable except `keep`, giving a univariate
    /// polynomial in x_keep. Entries of `point` at index `keep` are ignored.
    pub fn specialize<F: Field<Elem = E>>(&self, k: &F, point: &[E], keep: usize) -> UniPoly<E> {
        let mut pt = point.to_vec();
        pt[keep] = k.one();
        let coeffs = self.coefficients_in(k, keep).iter().map(|c| c.eval(k, &pt)).collect();
        UniPoly::from_coeffs(k, coeffs)
    }

    /// Moves to a field with a different element type, coefficient-wise.
    pub fn map_coeffs<G: Field>(&self, g: &G, f: impl Fn(E) -> G::Elem) -> MultiPoly<G::Elem> {
        MultiPoly::from_terms(g, self.nvars, self.terms.iter().map(|&(m, c)| (m, f(c))))
    }

    /// Exact division; errors when `d` does not divide `self`.
    pub fn div_exact<F: Field<Elem = E>>(&self, d: &Self, k: &F) -> Result<Self> {
        let (lm, lc) = d.leading_term().ok_or(Error::DivisionByZero)?;
        let inv = k.inv(lc)?;
        let mut rem: BTreeMap<Monomial, E> = self.terms.iter().copied().collect();
        let mut quot = Vec::new();
        while let Some((&m, &c)) = rem.iter().next_back() {
            let divisible = (0..self.nvars).all(|i| exponent(m, i) >= exponent(lm, i));
            if !divisible {
                return Err(Error::Internal("inexact multivariate division".into()));
            }
            let qm = m - lm;
            let qc = k.mul(c, inv);
            quot.push((qm, qc));
            for &(dm, dc) in &d.terms {
                let key = dm + qm;
                let slot = rem.entry(key).or_insert_with(|| k.zero());
                *slot = k.sub(*slot, k.mul(dc, qc));
                if k.is_zero(*slot) {
                    rem.remove(&key);
                }
            }
        }
        Ok(MultiPoly { nvars: self.nvars, terms: quot })
    }
}

impl MultiPoly<Fp> {
    /// Text form: terms in descending graded-lex order, `c*x0^2*x1`, with
    /// decimal coefficients in [0, q), joined by " + ".
    pub fn to_text(&self, names: &[&str]) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (idx, &(m, c)) in self.terms.iter().enumerate() {
            if idx > 0 {
                out.push_str(" + ");
            }
            write!(out, "{c}").unwrap();
            for (i, name) in names.iter().enumerate().take(self.nvars) {
                match exponent(m, i) {
                    0 => {}
                    1 => write!(out, "*{name}").unwrap(),
                    e => write!(out, "*{name}^{e}").unwrap(),
                }
            }
        }
        out
    }

    /// Parses a sum of products such as `-12*mu^2*x0*x2^3 + A^2`.
    ///
    /// Factors are non-negative integers, variables from `vars`, or named
    /// constants from `consts`, each optionally raised to `^e`.
    pub fn parse(k: &PrimeField, vars: &[&str], consts: &[(&str, Fp)], text: &str) -> Result<Self> {
        let nvars = vars.len();
        let mut terms = Vec::new();
        let cleaned: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        if cleaned.is_empty() {
            return Err(Error::Parse("empty polynomial".into()));
        }
        let mut chunks = Vec::new();
        let mut cur = String::new();
        for ch in cleaned.chars() {
            if (ch == '+' || ch == '-') && !cur.is_empty() && !cur.ends_with('^') {
                chunks.push(std::mem::take(&mut cur));
            }
            cur.push(ch);
        }
        chunks.push(cur);
        for chunk in chunks {
            let (neg, body) = match chunk.strip_prefix('-') {
                Some(b) => (true, b),
                None => (false, chunk.strip_prefix('+').unwrap_or(&chunk)),
            };
            let mut coeff = k.one();
            let mut exps = vec![0u32; nvars];
            for factor in body.split('*') {
                let (base, e) = match factor.split_once('^') {
                    Some((b, e)) => (b, e.parse::<u32>().map_err(|_| Error::Parse(format!("bad exponent in {factor:?}")))?),
                    None => (factor, 1),
                };
                if let Some(i) = vars.iter().position(|&v| v == base) {
                    exps[i] += e;
                } else if let Some(&(_, c)) = consts.iter().find(|(n, _)| *n == base) {
                    coeff = k.mul(coeff, k.pow_u128(c, e as u128));
                } else if let Ok(v) = base.parse::<u128>() {
                    coeff = k.mul(coeff, k.pow_u128(k.elem(v % k.modulus()), e as u128));
                } else {
                    return Err(Error::Parse(format!("unknown factor {base:?}")));
                }
            }
            if neg {
                coeff = k.neg(coeff);
            }
            terms.push((pack(&exps), coeff));
        }
        Ok(Self::from_terms(k, nvars, terms))
    }
}
