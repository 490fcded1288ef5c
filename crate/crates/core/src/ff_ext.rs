//! The Kummer extension F_{q^n} = F_q[ζ]/(ζ^n − μ) for n | q − 1.
//!
//! Elements are coordinate vectors on the basis 1, ζ, …, ζ^{n−1}. The q-power
//! Frobenius acts diagonally on that basis: ζ^j ↦ μ^{jb} ζ^j with b = (q − 1)/n.

use std::fmt;

use num_bigint::BigUint;
use num_traits::One;
use rand::Rng;

use crate::error::{Error, Result};
use crate::ff_prime::{Fp, PrimeField};
use crate::field::Field;
use crate::unipoly::UniPoly;

pub const MAX_DEGREE: usize = 5;

/// An element of F_{q^n}; coordinates past `n` are always zero.
#[derive(Copy, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ExtElement {
    c: [Fp; MAX_DEGREE],
}

impl ExtElement {
    pub fn coord(&self, i: usize) -> Fp {
        self.c[i]
    }

    /// All `MAX_DEGREE` coordinates, including the zero padding.
    pub fn raw_coords(&self) -> &[Fp; MAX_DEGREE] {
        &self.c
    }
}

impl fmt::Debug for ExtElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.c)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExtField {
    base: PrimeField,
    n: usize,
    mu: Fp,
    b: u128,
    /// twist[i][j] = μ^{i·j·b}: the factor applied to coordinate j by φ^i.
    twist: [[Fp; MAX_DEGREE]; MAX_DEGREE],
    // |F_{q^n}^*| = 2^two_adicity * two_odd
    two_adicity: u32,
    two_odd: BigUint,
    half_odd: BigUint,
    two_sylow_gen: ExtElement,
    lazy: bool,
}

impl ExtField {
    #[inline]
    fn mul_lazy(&self, a: ExtElement, b: ExtElement) -> ExtElement {
        match self.n {
            2 => self.mul_lazy_n::<2>(a, b),
            3 => self.mul_lazy_n::<3>(a, b),
            _ => self.mul_lazy_n::<5>(a, b),
        }
    }

    #[inline(always)]
    fn mul_lazy_n<const N: usize>(&self, a: ExtElement, b: ExtElement) -> ExtElement {
        let k = &self.base;
        let n = N;
        let a64 = a.c.map(|v| v.value() as u64);
        let b64 = b.c.map(|v| v.value() as u64);
        let mut low = [0u128; MAX_DEGREE];
        let mut high = [0u128; MAX_DEGREE];
        for i in 0..n {
            let ai = a64[i] as u128;
            for j in 0..n - i {
                low[i + j] += ai * b64[j] as u128;
            }
            for j in n - i..n {
                high[i + j - n] += ai * b64[j] as u128;
            }
        }
        let mu = self.mu.value() as u64 as u128;
        let mut out = ExtElement::default();
        for d in 0..n {
            let h = k.reduce_wide(high[d]).value() as u64 as u128;
            out.c[d] = k.reduce_wide(low[d] + mu * h);
        }
        out
    }

    /// F_{q^n} with an explicit μ, which must not be an n-th power in F_q.
    pub fn new(base: PrimeField, n: usize, mu: Fp) -> Result<Self> {
        let q = base.modulus();
        if !matches!(n, 2 | 3 | 5) {
            return Err(Error::InvalidParams(format!("extension degree {n} is not one of 2, 3, 5")));
        }
        if !(q - 1).is_multiple_of(n as u128) {
            return Err(Error::InvalidParams(format!("n = {n} does not divide q - 1")));
        }
        if mu == Fp::ZERO || base.is_nth_power(mu, n as u32)? {
            return Err(Error::InvalidParams(format!("mu = {mu} is an {n}-th power in F_q")));
        }
        let b = (q - 1) / n as u128;
        let omega = base.pow_u128(mu, b);
        let mut twist = [[Fp::ZERO; MAX_DEGREE]; MAX_DEGREE];
        for (i, row) in twist.iter_mut().enumerate().take(n) {
            let step = base.pow_u128(omega, i as u128);
            let mut acc = base.one();
            for cell in row.iter_mut().take(n) {
                *cell = acc;
                acc = base.mul(acc, step);
            }
        }

        let order_minus_one = BigUint::from(q).pow(n as u32) - BigUint::one();
        let two_adicity = order_minus_one.trailing_zeros().unwrap_or(0) as u32;
        let two_odd = &order_minus_one >> two_adicity;

        let mut ext = ExtField {
            base,
            n,
            mu,
            b,
            twist,
            two_adicity,
            half_odd: &two_odd >> 1,
            two_odd,
            two_sylow_gen: ExtElement::default(),
            lazy: base.accumulates(n as u32 + 1),
        };
        // A quadratic non-residue: squareness in F_{q^n} is squareness of the norm in F_q.
        let mut c = ext.zeta();
        let mut k = 0u64;
        while base.legendre(ext.norm(c)) != -1 {
            k += 1;
            c = ext.add(ext.zeta(), ext.from_u64(k));
        }
        ext.two_sylow_gen = ext.pow(c, &ext.two_odd.clone());
        Ok(ext)
    }

    /// F_{q^n} with μ chosen by [`select_mu`].
    pub fn with_default_mu(base: PrimeField, n: usize) -> Result<Self> {
        Self::new(base, n, select_mu(&base, n)?)
    }

    pub fn base(&self) -> &PrimeField {
        &self.base
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn mu(&self) -> Fp {
        self.mu
    }

    /// b = (q − 1)/n.
    pub fn b(&self) -> u128 {
        self.b
    }

    pub fn zeta(&self) -> ExtElement {
        self.monomial(1, self.base.one())
    }

    /// `c · ζ^j` for `j < n`.
    pub fn monomial(&self, j: usize, c: Fp) -> ExtElement {
        let mut e = ExtElement::default();
        e.c[j] = c;
        e
    }

    pub fn from_base(&self, a: Fp) -> ExtElement {
        self.monomial(0, a)
    }

    pub fn from_coords(&self, coords: &[Fp]) -> Result<ExtElement> {
        if coords.len() != self.n {
            return Err(Error::InvalidInput(format!("expected {} coordinates, got {}", self.n, coords.len())));
        }
        let mut e = ExtElement::default();
        e.c[..self.n].copy_from_slice(coords);
        Ok(e)
    }

    pub fn from_u128_coords(&self, coords: &[u128]) -> Result<ExtElement> {
        let v: Vec<Fp> = coords.iter().map(|&c| self.base.try_elem(c)).collect::<Result<_>>()?;
        self.from_coords(&v)
    }

    pub fn coords<'a>(&self, a: &'a ExtElement) -> &'a [Fp] {
        &a.c[..self.n]
    }

    pub fn is_base(&self, a: ExtElement) -> bool {
        a.c[1..].iter().all(|&x| x == Fp::ZERO)
    }

    /// φ^i(a) = a^{q^i}.
    pub fn frobenius_pow(&self, a: ExtElement, i: usize) -> ExtElement {
        let row = &self.twist[if i < self.n { i } else { i % self.n }];
        let mut out = a;
        for j in 1..self.n {
            out.c[j] = self.base.mul(a.c[j], row[j]);
        }
        out
    }

    /// Whether a is the smallest of its conjugates.
    pub fn is_least_conjugate(&self, a: ExtElement) -> bool {
        (1..self.n).all(|i| {
            for j in 1..self.n {
                let c = self.base.mul(a.c[j], self.twist[i][j]);
                if c != a.c[j] {
                    return c > a.c[j];
                }
            }
            true
        })
    }

    /// [a, a^q, …, a^{q^{n−1}}].
    pub fn conjugates(&self, a: ExtElement) -> Vec<ExtElement> {
        (0..self.n).map(|i| self.frobenius_pow(a, i)).collect()
    }

    /// Norm to F_q: the product of all conjugates.
    pub fn norm(&self, a: ExtElement) -> Fp {
        let mut acc = a;
        for i in 1..self.n {
            acc = self.mul(acc, self.frobenius_pow(a, i));
        }
        debug_assert!(self.is_base(acc));
        acc.c[0]
    }

    pub fn mul_base(&self, a: ExtElement, k: Fp) -> ExtElement {
        let mut out = a;
        for j in 0..self.n {
            out.c[j] = self.base.mul(a.c[j], k);
        }
        out
    }

    pub fn is_square(&self, a: ExtElement) -> bool {
        self.base.legendre(self.norm(a)) >= 0
    }

    /// a^{(Q+1)/2} and a^Q for Q the odd part of q^n − 1, n odd. Then Q = t·N
    /// with q − 1 = 2^s·t and N = 1 + q + … + q^{n−1}, and
    /// (N − 1)/2 = q · (q + 1)/2 · (1 + q² + … + q^{n−3}).
    fn sqrt_start_odd(&self, a: ExtElement, norm: Fp) -> (ExtElement, ExtElement) {
        let q = self.base.modulus();
        let t = self.base.two_odd();
        let mut d = a;
        for j in (2..self.n - 1).step_by(2) {
            d = self.mul(d, self.frobenius_pow(a, j));
        }
        let u = self.frobenius_pow(self.pow_u128(d, q / 2 + 1), 1);
        let w = self.pow_u128(a, t / 2);
        let x = self.mul(self.pow_u128(u, t), self.mul(w, a));
        (x, self.from_base(self.base.pow_u128(norm, t)))
    }

    /// A square root, choosing the lexicographically smaller of ±r.
    pub fn sqrt(&self, a: ExtElement) -> Option<ExtElement> {
        if a == self.zero() {
            return Some(a);
        }
        let norm = self.norm(a);
        if self.base.legendre(norm) < 0 {
            return None;
        }
        // Tonelli-Shanks over the extension.
        let (mut x, mut b) = if self.n % 2 == 1 {
            self.sqrt_start_odd(a, norm)
        } else {
            let w = self.pow(a, &self.half_odd);
            let x = self.mul(w, a);
            (x, self.mul(x, w))
        };
        let mut g = self.two_sylow_gen;
        let mut r = self.two_adicity;
        let one = self.one();
        while b != one {
            let mut k = 0;
            let mut t = b;
            while t != one {
                t = self.sqr(t);
                k += 1;
            }
            let mut gs = g;
            for _ in 0..(r - k - 1) {
                gs = self.sqr(gs);
            }
            x = self.mul(x, gs);
            g = self.sqr(gs);
            b = self.mul(b, g);
            r = k;
        }
        let y = self.neg(x);
        Some(x.min(y))
    }

    pub fn to_bytes(&self, a: ExtElement) -> Vec<u8> {
        self.coords(&a).iter().flat_map(|&c| self.base.to_bytes(c)).collect()
    }

    pub fn from_bytes(&self, bytes: &[u8]) -> Result<ExtElement> {
        let w = self.base.byte_len();
        if bytes.len() != w * self.n {
            return Err(Error::Parse(format!("expected {} bytes for an extension element, got {}", w * self.n, bytes.len())));
        }
        let coords: Vec<Fp> = bytes.chunks(w).map(|ch| self.base.from_bytes(ch)).collect::<Result<_>>()?;
        self.from_coords(&coords)
    }

    /// Decimal text: `[x0, x1, …]`.
    pub fn format(&self, a: ExtElement) -> String {
        let parts: Vec<String> = self.coords(&a).iter().map(|c| c.to_string()).collect();
        format!("[{}]", parts.join(", "))
    }

    pub fn parse(&self, s: &str) -> Result<ExtElement> {
        let inner = s
            .trim()
            .strip_prefix('[')
            .and_then(|t| t.strip_suffix(']'))
            .ok_or_else(|| Error::Parse(format!("expected [x0, ..., x{}], got {s:?}", self.n - 1)))?;
        let coords: Vec<Fp> = inner.split(',').map(|p| self.base.parse(p)).collect::<Result<_>>()?;
        self.from_coords(&coords)
    }
}

impl ExtField {
    /// Roots in F_{q^n} of a monic `f` ∈ F_q[X] that is irreducible of degree n.
    ///
    /// In K = F_q[X]/(f) the Frobenius eigenvector v for the eigenvalue
    /// μ^{(q−1)/n} satisfies v = c·ι(ζ) for the isomorphism ι: F_{q^n} → K and
    /// some c ∈ F_q with c^n = v^n/μ. Writing X = Σ a_j v^j gives the root
    /// Σ a_j c^j ζ^j; the other choices of c give its conjugates.
    pub fn roots_of_irreducible(&self, f: &UniPoly<Fp>) -> Result<Vec<ExtElement>> {
        let k = &self.base;
        let n = self.n;
        if f.degree() != Some(n) || f.lead() != Some(k.one()) {
            return Err(Error::InvalidInput(format!("expected a monic polynomial of degree {n}")));
        }
        let vec_of = |p: &UniPoly<Fp>| (0..n).map(|i| p.coeff(k, i)).collect::<Vec<_>>();
        let xq = UniPoly::x(k).pow_mod(k.modulus(), f, k);
        let omega = self.twist[1][1];
        // columns: Frobenius images of 1, X, …, X^{n−1}, minus ω on the diagonal
        let mut cols = Vec::with_capacity(n);
        let mut p = UniPoly::constant(k, k.one());
        for j in 0..n {
            let mut c = vec_of(&p);
            c[j] = k.sub(c[j], omega);
            cols.push(c);
            p = p.mul_mod(&xq, f, k);
        }
        let v = UniPoly::from_coeffs(k, kernel_vector(k, &cols).ok_or_else(not_irreducible)?);
        let mut powers = vec![UniPoly::constant(k, k.one())];
        for j in 1..=n {
            powers.push(powers[j - 1].mul_mod(&v, f, k));
        }
        let lambda = &powers[n];
        if lambda.degree().is_some_and(|d| d > 0) {
            return Err(not_irreducible());
        }
        let ratio = k.mul(lambda.coeff(k, 0), k.inv(self.mu)?);
        let c = *k.nth_roots(ratio, n as u32)?.first().ok_or_else(not_irreducible)?;
        let basis: Vec<Vec<Fp>> = powers[..n].iter().map(vec_of).collect();
        let mut target = vec![k.zero(); n];
        target[1] = k.one();
        let a = solve_linear(k, &basis, &target).ok_or_else(not_irreducible)?;
        let mut root = self.zero();
        let mut cj = k.one();
        for j in 0..n {
            root.c[j] = k.mul(a[j], cj);
            cj = k.mul(cj, c);
        }
        let lifted = UniPoly::from_coeffs(self, f.coeffs().iter().map(|&c| self.from_base(c)).collect());
        if lifted.eval(self, root) != self.zero() {
            return Err(not_irreducible());
        }
        let mut out = self.conjugates(root);
        out.sort();
        Ok(out)
    }
}

fn not_irreducible() -> Error {
    Error::InvalidInput("polynomial is not irreducible of the extension degree".into())
}

/// Gaussian elimination on the matrix with the given columns. Returns the
/// reduced rows and the pivot column of each.
fn row_reduce(k: &PrimeField, cols: &[Vec<Fp>], rhs: Option<&[Fp]>) -> (Vec<Vec<Fp>>, Vec<usize>) {
    let rows = cols[0].len();
    let width = cols.len() + usize::from(rhs.is_some());
    let mut m: Vec<Vec<Fp>> = (0..rows)
        .map(|r| {
            let mut row: Vec<Fp> = cols.iter().map(|c| c[r]).collect();
            if let Some(b) = rhs {
                row.push(b[r]);
            }
            row
        })
        .collect();
    let mut pivots = Vec::new();
    let mut r = 0;
    for col in 0..cols.len() {
        let Some(p) = (r..rows).find(|&i| m[i][col] != Fp::ZERO) else {
            continue;
        };
        m.swap(r, p);
        let inv = k.inv(m[r][col]).expect("nonzero pivot");
        for x in m[r].iter_mut() {
            *x = k.mul(*x, inv);
        }
        for i in 0..rows {
            if i != r && m[i][col] != Fp::ZERO {
                let f = m[i][col];
                for j in 0..width {
                    m[i][j] = k.sub(m[i][j], k.mul(f, m[r][j]));
                }
            }
        }
        pivots.push(col);
        r += 1;
    }
    (m, pivots)
}

/// A nonzero vector in the kernel of the matrix with columns `cols`.
fn kernel_vector(k: &PrimeField, cols: &[Vec<Fp>]) -> Option<Vec<Fp>> {
    let (m, pivots) = row_reduce(k, cols, None);
    let free = (0..cols.len()).find(|c| !pivots.contains(c))?;
    let mut v = vec![k.zero(); cols.len()];
    v[free] = k.one();
    for (r, &p) in pivots.iter().enumerate() {
        v[p] = k.neg(m[r][free]);
    }
    Some(v)
}

/// The unique solution of M a = b for square invertible M.
fn solve_linear(k: &PrimeField, cols: &[Vec<Fp>], b: &[Fp]) -> Option<Vec<Fp>> {
    let (m, pivots) = row_reduce(k, cols, Some(b));
    if pivots.len() != cols.len() {
        return None;
    }
    Some(m.iter().map(|row| row[cols.len()]).collect())
}

/// Smallest μ ≥ 3 that is not an n-th power in F_q.
pub fn select_mu(base: &PrimeField, n: usize) -> Result<Fp> {
    let q = base.modulus();
    if !(q - 1).is_multiple_of(n as u128) {
        return Err(Error::InvalidParams(format!("n = {n} does not divide q - 1")));
    }
    (3..q)
        .map(|v| base.elem(v))
        .find(|&m| !base.is_nth_power(m, n as u32).unwrap_or(true))
        .ok_or_else(|| Error::InvalidParams("no non-n-th power found".into()))
}

impl Field for ExtField {
    type Elem = ExtElement;

    fn zero(&self) -> ExtElement {
        ExtElement::default()
    }

    fn one(&self) -> ExtElement {
        self.from_base(self.base.one())
    }

    fn from_u64(&self, v: u64) -> ExtElement {
        self.from_base(self.base.from_u64(v))
    }

    #[inline]
    fn add(&self, a: ExtElement, b: ExtElement) -> ExtElement {
        let mut out = a;
        for j in 0..self.n {
            out.c[j] = self.base.add(a.c[j], b.c[j]);
        }
        out
    }

    #[inline]
    fn sub(&self, a: ExtElement, b: ExtElement) -> ExtElement {
        let mut out = a;
        for j in 0..self.n {
            out.c[j] = self.base.sub(a.c[j], b.c[j]);
        }
        out
    }

    #[inline]
    fn neg(&self, a: ExtElement) -> ExtElement {
        let mut out = a;
        for j in 0..self.n {
            out.c[j] = self.base.neg(a.c[j]);
        }
        out
    }

    fn mul(&self, a: ExtElement, b: ExtElement) -> ExtElement {
        if self.lazy {
            return self.mul_lazy(a, b);
        }
        let k = &self.base;
        let n = self.n;
        let mut low = [Fp::ZERO; MAX_DEGREE];
        let mut high = [Fp::ZERO; MAX_DEGREE];
        for i in 0..n {
            if a.c[i] == Fp::ZERO {
                continue;
            }
            for j in 0..n {
                let p = k.mul(a.c[i], b.c[j]);
                let d = i + j;
                if d < n {
                    low[d] = k.add(low[d], p);
                } else {
                    high[d - n] = k.add(high[d - n], p);
                }
            }
        }
        let mut out = ExtElement::default();
        for d in 0..n {
            out.c[d] = if high[d] == Fp::ZERO { low[d] } else { k.add(low[d], k.mul(self.mu, high[d])) };
        }
        out
    }

    fn inv(&self, a: ExtElement) -> Result<ExtElement> {
        if a == self.zero() {
            return Err(Error::DivisionByZero);
        }
        // a^{-1} = (a^q ⋯ a^{q^{n-1}}) / N(a)
        let mut rest = self.frobenius_pow(a, 1);
        for i in 2..self.n {
            rest = self.mul(rest, self.frobenius_pow(a, i));
        }
        let norm = self.mul(a, rest).c[0];
        Ok(self.mul_base(rest, self.base.inv(norm)?))
    }

    fn characteristic(&self) -> u128 {
        self.base.modulus()
    }

    fn degree(&self) -> u32 {
        self.n as u32
    }

    fn frobenius(&self, a: ExtElement) -> ExtElement {
        self.frobenius_pow(a, 1)
    }

    fn random<R: Rng + ?Sized>(&self, rng: &mut R) -> ExtElement {
        let mut e = ExtElement::default();
        for j in 0..self.n {
            e.c[j] = self.base.random(rng);
        }
        e
    }
}
