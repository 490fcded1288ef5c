//! Dense univariate polynomials over a finite field: arithmetic, gcd,
//! resultants, and extraction of all roots lying in the coefficient field.

use std::collections::hash_map::DefaultHasher;
use std::hash::{Hash, Hasher};

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::field::Field;

/// Coefficients in ascending degree, with no trailing zeros.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct UniPoly<E> {
    coeffs: Vec<E>,
}

impl<E: Copy + Eq> UniPoly<E> {
    pub fn zero() -> Self {
        UniPoly { coeffs: Vec::new() }
    }

    pub fn from_coeffs<F: Field<Elem = E>>(k: &F, mut coeffs: Vec<E>) -> Self {
        while coeffs.last().is_some_and(|&c| k.is_zero(c)) {
            coeffs.pop();
        }
        UniPoly { coeffs }
    }

    pub fn constant<F: Field<Elem = E>>(k: &F, c: E) -> Self {
        Self::from_coeffs(k, vec![c])
    }

    /// `x`.
    pub fn x<F: Field<Elem = E>>(k: &F) -> Self {
        UniPoly { coeffs: vec![k.zero(), k.one()] }
    }

    /// `x - r`.
    pub fn linear_root<F: Field<Elem = E>>(k: &F, r: E) -> Self {
        UniPoly { coeffs: vec![k.neg(r), k.one()] }
    }

    pub fn coeffs(&self) -> &[E] {
        &self.coeffs
    }

    pub fn coeff<F: Field<Elem = E>>(&self, k: &F, i: usize) -> E {
        self.coeffs.get(i).copied().unwrap_or_else(|| k.zero())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn lead(&self) -> Option<E> {
        self.coeffs.last().copied()
    }

    pub fn eval<F: Field<Elem = E>>(&self, k: &F, x: E) -> E {
        self.coeffs.iter().rev().fold(k.zero(), |acc, &c| k.add(k.mul(acc, x), c))
    }

    pub fn add<F: Field<Elem = E>>(&self, other: &Self, k: &F) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let v = (0..n).map(|i| k.add(self.coeff(k, i), other.coeff(k, i))).collect();
        Self::from_coeffs(k, v)
    }

    pub fn sub<F: Field<Elem = E>>(&self, other: &Self, k: &F) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let v = (0..n).map(|i| k.sub(self.coeff(k, i), other.coeff(k, i))).collect();
        Self::from_coeffs(k, v)
    }

    pub fn scale<F: Field<Elem = E>>(&self, k: &F, c: E) -> Self {
        Self::from_coeffs(k, self.coeffs.iter().map(|&a| k.mul(a, c)).collect())
    }

    pub fn mul<F: Field<Elem = E>>(&self, other: &Self, k: &F) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut v = vec![k.zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if k.is_zero(a) {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                v[i + j] = k.add(v[i + j], k.mul(a, b));
            }
        }
        Self::from_coeffs(k, v)
    }

    pub fn monic<F: Field<Elem = E>>(&self, k: &F) -> Self {
        match self.lead() {
            None => Self::zero(),
            Some(l) => self.scale(k, k.inv(l).expect("leading coefficient is nonzero")),
        }
    }

    /// Euclidean division; errors when dividing by zero.
    pub fn div_rem<F: Field<Elem = E>>(&self, d: &Self, k: &F) -> Result<(Self, Self)> {
        let dl = d.lead().ok_or(Error::DivisionByZero)?;
        let dd = d.coeffs.len() - 1;
        if self.coeffs.len() <= dd {
            return Ok((Self::zero(), self.clone()));
        }
        let inv = if dl == k.one() { dl } else { k.inv(dl)? };
        let mut r = self.coeffs.clone();
        let mut quot = vec![k.zero(); r.len() - dd];
        for i in (dd..r.len()).rev() {
            let c = k.mul(r[i], inv);
            quot[i - dd] = c;
            if k.is_zero(c) {
                continue;
            }
            for (j, &b) in d.coeffs.iter().enumerate() {
                r[i - dd + j] = k.sub(r[i - dd + j], k.mul(c, b));
            }
        }
        r.truncate(dd);
        Ok((Self::from_coeffs(k, quot), Self::from_coeffs(k, r)))
    }

    pub fn rem<F: Field<Elem = E>>(&self, d: &Self, k: &F) -> Result<Self> {
        Ok(self.div_rem(d, k)?.1)
    }

    /// Monic gcd; both arguments zero is an error.
    pub fn gcd<F: Field<Elem = E>>(&self, other: &Self, k: &F) -> Result<Self> {
        if self.is_zero() && other.is_zero() {
            return Err(Error::InvalidInput("gcd(0, 0) is undefined".into()));
        }
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.rem(&b, k)?;
            a = b;
            b = r;
        }
        Ok(a.monic(k))
    }

    pub fn mul_mod<F: Field<Elem = E>>(&self, other: &Self, m: &Self, k: &F) -> Self {
        self.mul(other, k).rem(m, k).expect("nonzero modulus")
    }

    /// `self^e mod m` by square-and-multiply over the bits of `e`.
    pub fn pow_mod<F: Field<Elem = E>>(&self, e: u128, m: &Self, k: &F) -> Self {
        let mut acc = Self::constant(k, k.one()).rem(m, k).expect("nonzero modulus");
        let base = self.rem(m, k).expect("nonzero modulus");
        for i in (0..(128 - e.leading_zeros())).rev() {
            acc = acc.mul_mod(&acc, m, k);
            if (e >> i) & 1 == 1 {
                acc = acc.mul_mod(&base, m, k);
            }
        }
        acc
    }
}

/// Resultant of `a` and `b` normalised so that `resultant(x − α, x − β) = β − α`:
/// `lc(b)^{deg a} · ∏_{b(β)=0} a(β)`, i.e. the Sylvester determinant with the
/// rows of `b` placed above the rows of `a`.
pub fn resultant<F: Field>(a: &UniPoly<F::Elem>, b: &UniPoly<F::Elem>, k: &F) -> F::Elem {
    // Standard Res(f, g) = lc(f)^{deg g} ∏_{f(α)=0} g(α); ours is Res(b, a).
    standard_resultant(b, a, k)
}

fn standard_resultant<F: Field>(f: &UniPoly<F::Elem>, g: &UniPoly<F::Elem>, k: &F) -> F::Elem {
    let (Some(_), Some(_)) = (f.degree(), g.degree()) else {
        return k.zero();
    };
    let mut f = f.clone();
    let mut g = g.clone();
    let mut acc = k.one();
    loop {
        let m = f.degree().unwrap();
        let n = g.degree().unwrap();
        if n == 0 {
            return k.mul(acc, k.pow_u128(g.lead().unwrap(), m as u128));
        }
        if m == 0 {
            return k.mul(acc, k.pow_u128(f.lead().unwrap(), n as u128));
        }
        // Res(f, g) = (−1)^{mn} lc(g)^{m − deg r} Res(g, r) with r = f mod g
        let r = f.rem(&g, k).expect("g is nonzero");
        let Some(dr) = r.degree() else {
            return k.zero();
        };
        if (m * n) % 2 == 1 {
            acc = k.neg(acc);
        }
        acc = k.mul(acc, k.pow_u128(g.lead().unwrap(), (m - dr) as u128));
        f = g;
        g = r;
    }
}

/// Computes `x^{q^i} mod m` for i = 1..=count, where q is the characteristic.
///
/// Only `x^q` is found by exponentiation; every further power follows from
/// p(x)^q = p^φ(x^q), composing with the precomputed powers of `x^q`.
pub fn frobenius_powers_of_x<F: Field>(m: &UniPoly<F::Elem>, count: u32, k: &F) -> Vec<UniPoly<F::Elem>> {
    let xq = UniPoly::x(k).pow_mod(k.characteristic(), m, k);
    let map = FrobeniusMap::new(&xq, m, k);
    let mut out = Vec::with_capacity(count as usize);
    let mut cur = xq;
    for i in 0..count {
        if i > 0 {
            cur = map.apply(&cur, k);
        }
        out.push(cur.clone());
    }
    out
}

/// p ↦ p^q in F[x]/(m).
struct FrobeniusMap<E> {
    modulus: UniPoly<E>,
    /// (x^q)^j mod m for j < deg m.
    xq_powers: Vec<UniPoly<E>>,
}

impl<E: Copy + Eq> FrobeniusMap<E> {
    fn new<F: Field<Elem = E>>(xq: &UniPoly<E>, m: &UniPoly<E>, k: &F) -> Self {
        let d = m.degree().unwrap_or(0);
        let mut xq_powers = Vec::with_capacity(d);
        let mut cur = UniPoly::constant(k, k.one()).rem(m, k).expect("nonzero modulus");
        for _ in 0..d {
            xq_powers.push(cur.clone());
            cur = cur.mul_mod(xq, m, k);
        }
        FrobeniusMap { modulus: m.clone(), xq_powers }
    }

    fn apply<F: Field<Elem = E>>(&self, p: &UniPoly<E>, k: &F) -> UniPoly<E> {
        let d = self.modulus.degree().unwrap_or(0);
        let mut acc = vec![k.zero(); d];
        for (j, &c) in p.coeffs().iter().enumerate() {
            if k.is_zero(c) {
                continue;
            }
            let c = k.frobenius(c);
            for (i, &t) in self.xq_powers[j].coeffs().iter().enumerate() {
                acc[i] = k.add(acc[i], k.mul(c, t));
            }
        }
        UniPoly::from_coeffs(k, acc)
    }
}

/// The product of the distinct linear factors of `f` over the coefficient
/// field: `gcd(f, x^Q − x)` with Q the field size. Monic.
pub fn split_part<F: Field>(f: &UniPoly<F::Elem>, k: &F) -> Result<UniPoly<F::Elem>> {
    let Some(d) = f.degree() else {
        return Err(Error::InvalidInput("root finding on the zero polynomial".into()));
    };
    if d == 0 {
        return Ok(UniPoly::constant(k, k.one()));
    }
    let f = f.monic(k);
    let x_big_q = frobenius_powers_of_x(&f, k.degree(), k).pop().expect("degree ≥ 1");
    let h = x_big_q.sub(&UniPoly::x(k), k);
    f.gcd(&h, k)
}

/// All roots of `f` in its coefficient field, sorted ascending and without
/// repetition. Errors only for the zero polynomial.
pub fn roots_in_field<F: Field>(f: &UniPoly<F::Elem>, k: &F) -> Result<Vec<F::Elem>> {
    let h = split_part(f, k)?;
    let mut roots = Vec::new();
    if h.degree().unwrap_or(0) > 0 {
        let mut hasher = DefaultHasher::new();
        f.coeffs().hash(&mut hasher);
        let mut rng = ChaCha8Rng::seed_from_u64(hasher.finish());
        split_linear(&h, k, &mut rng, &mut roots);
    }
    roots.sort();
    Ok(roots)
}

/// Equal-degree splitting of a monic squarefree product of linear factors.
fn split_linear<F: Field>(h: &UniPoly<F::Elem>, k: &F, rng: &mut ChaCha8Rng, out: &mut Vec<F::Elem>) {
    let d = h.degree().expect("nonzero");
    if d == 0 {
        return;
    }
    if d == 1 {
        out.push(k.neg(h.coeffs()[0]));
        return;
    }
    let q = k.characteristic();
    let xq = UniPoly::x(k).pow_mod(q, h, k);
    let map = FrobeniusMap::new(&xq, h, k);
    let one = UniPoly::constant(k, k.one());
    loop {
        let delta = k.random(rng);
        let a = UniPoly::from_coeffs(k, vec![delta, k.one()]);
        // a^{(Q−1)/2} = (a · a^q ⋯ a^{q^{deg−1}})^{(q−1)/2}
        let mut norm = a.clone();
        let mut conj = a;
        for _ in 1..k.degree() {
            conj = map.apply(&conj, k);
            norm = norm.mul_mod(&conj, h, k);
        }
        let w = norm.pow_mod((q - 1) / 2, h, k).sub(&one, k);
        if w.is_zero() {
            continue;
        }
        let g = h.gcd(&w, k).expect("h is nonzero");
        let dg = g.degree().unwrap();
        if dg == 0 || dg == d {
            continue;
        }
        let (cofactor, _) = h.div_rem(&g, k).expect("g is nonzero");
        split_linear(&g, k, rng, out);
        split_linear(&cofactor.monic(k), k, rng, out);
        return;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{ExtField, PrimeField};
    use proptest::prelude::*;
    use rand::Rng;

    fn fq(q: u128) -> PrimeField {
        PrimeField::new(q).unwrap()
    }

    fn poly(k: &PrimeField, c: &[i128]) -> UniPoly<crate::Fp> {
        UniPoly::from_coeffs(k, c.iter().map(|&v| k.from_i128(v)).collect())
    }

    /// Sylvester determinant with the rows of `b` above those of `a`.
    fn sylvester_oracle(a: &[crate::Fp], b: &[crate::Fp], k: &PrimeField) -> crate::Fp {
        let (m, n) = (a.len() - 1, b.len() - 1);
        let size = m + n;
        let mut rows: Vec<Vec<crate::Fp>> = Vec::new();
        for (p, count) in [(b, m), (a, n)] {
            for r in 0..count {
                let mut row = vec![k.zero(); size];
                for (i, &c) in p.iter().rev().enumerate() {
                    row[r + i] = c;
                }
                rows.push(row);
            }
        }
        // Gaussian elimination
        let mut det = k.one();
        for col in 0..size {
            let Some(piv) = (col..size).find(|&r| rows[r][col] != k.zero()) else {
                return k.zero();
            };
            if piv != col {
                rows.swap(piv, col);
                det = k.neg(det);
            }
            let p = rows[col][col];
            det = k.mul(det, p);
            let inv = k.inv(p).unwrap();
            for r in col + 1..size {
                let f = k.mul(rows[r][col], inv);
                for c in col..size {
                    let v = k.mul(f, rows[col][c]);
                    rows[r][c] = k.sub(rows[r][c], v);
                }
            }
        }
        det
    }

    #[test]
    fn gcd_examples() {
        let k = fq(7);
        let g = poly(&k, &[-1, 0, 1]).gcd(&poly(&k, &[-1, 1]), &k).unwrap();
        assert_eq!(g, poly(&k, &[-1, 1]));
        let f = poly(&k, &[3, 0, 2]);
        assert_eq!(f.gcd(&UniPoly::zero(), &k).unwrap(), f.monic(&k));
        assert!(UniPoly::<crate::Fp>::zero().gcd(&UniPoly::zero(), &k).is_err());
        let common = poly(&k, &[2, 1]);
        let a = common.mul(&poly(&k, &[1, 1, 1]), &k);
        let b = common.mul(&poly(&k, &[5, 0, 3, 1]), &k);
        assert_eq!(a.gcd(&b, &k).unwrap(), common);
    }

    #[test]
    fn resultant_examples() {
        let k = fq(7);
        let (a, b) = (k.elem(2), k.elem(5));
        let r = resultant(&UniPoly::linear_root(&k, a), &UniPoly::linear_root(&k, b), &k);
        assert_eq!(r, k.sub(b, a));
        assert_eq!(resultant(&poly(&k, &[-1, 0, 1]), &poly(&k, &[-4, 0, 1]), &k), k.elem(2));
    }

    #[test]
    fn resultant_matches_sylvester_random() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for q in [7u128, 101, (1 << 61) - 1] {
            let k = fq(q);
            for _ in 0..300 {
                let mut a: Vec<_> = (0..4).map(|_| k.random(&mut rng)).collect();
                let mut b: Vec<_> = (0..5).map(|_| k.random(&mut rng)).collect();
                if a[3] == k.zero() {
                    a[3] = k.one();
                }
                if b[4] == k.zero() {
                    b[4] = k.one();
                }
                let pa = UniPoly::from_coeffs(&k, a.clone());
                let pb = UniPoly::from_coeffs(&k, b.clone());
                assert_eq!(resultant(&pa, &pb, &k), sylvester_oracle(&a, &b, &k));
                let common = pa.gcd(&pb, &k).unwrap().degree().unwrap() > 0;
                assert_eq!(resultant(&pa, &pb, &k) == k.zero(), common);
            }
        }
    }

    #[test]
    fn roots_examples() {
        let k = fq(7);
        assert_eq!(roots_in_field(&poly(&k, &[-1, 0, 0, 1]), &k).unwrap(), vec![k.elem(1), k.elem(2), k.elem(4)]);
        assert!(roots_in_field(&poly(&k, &[1, 0, 1]), &k).unwrap().is_empty());
        assert!(roots_in_field(&UniPoly::<crate::Fp>::zero(), &k).is_err());
        assert!(roots_in_field(&poly(&k, &[3]), &k).unwrap().is_empty());
        // repeated roots are reported once
        let f = poly(&k, &[-1, 1]).mul(&poly(&k, &[-1, 1]), &k).mul(&poly(&k, &[0, 1]), &k);
        assert_eq!(roots_in_field(&f, &k).unwrap(), vec![k.elem(0), k.elem(1)]);
    }

    #[test]
    fn roots_match_exhaustive_evaluation() {
        let mut rng = ChaCha8Rng::seed_from_u64(9);
        for (q, n) in [(7u128, 3usize), (11, 5), (13, 3)] {
            let e = ExtField::with_default_mu(fq(q), n).unwrap();
            let size = q.pow(n as u32);
            if size > 2000 {
                continue;
            }
            let all: Vec<_> = (0..size)
                .map(|v| {
                    let c: Vec<u128> = (0..n).map(|j| (v / q.pow(j as u32)) % q).collect();
                    e.from_u128_coords(&c).unwrap()
                })
                .collect();
            for _ in 0..20 {
                let deg = rng.gen_range(1..7);
                let f = UniPoly::from_coeffs(&e, (0..=deg).map(|_| e.random(&mut rng)).collect());
                if f.is_zero() {
                    continue;
                }
                let mut brute: Vec<_> = all.iter().copied().filter(|&x| f.eval(&e, x) == e.zero()).collect();
                brute.sort();
                assert_eq!(roots_in_field(&f, &e).unwrap(), brute);
            }
        }
        let k = fq(1999);
        for _ in 0..50 {
            let f = UniPoly::from_coeffs(&k, (0..6).map(|_| k.random(&mut rng)).collect());
            let brute: Vec<_> = (0..1999).map(|v| k.elem(v)).filter(|&x| f.eval(&k, x) == k.zero()).collect();
            assert_eq!(roots_in_field(&f, &k).unwrap(), brute);
        }
    }

    #[test]
    fn planted_roots_over_quintic_extension() {
        let mut rng = ChaCha8Rng::seed_from_u64(13);
        let e = ExtField::with_default_mu(fq(11), 5).unwrap();
        for _ in 0..20 {
            let planted: Vec<_> = (0..3).map(|_| e.random(&mut rng)).collect();
            // x^3 − μ has no roots in F_{11^5}? It might; use an irreducible-over-F_q quadratic
            // only when it has no roots in the big field.
            let mut f = UniPoly::constant(&e, e.one());
            for &r in &planted {
                f = f.mul(&UniPoly::linear_root(&e, r), &e);
            }
            let extra = UniPoly::from_coeffs(&e, vec![e.random(&mut rng), e.random(&mut rng), e.one()]);
            let f = f.mul(&extra, &e);
            let mut expect = planted.clone();
            expect.extend(roots_in_field(&extra, &e).unwrap());
            expect.sort();
            expect.dedup();
            assert_eq!(roots_in_field(&f, &e).unwrap(), expect);
        }
        let big = ExtField::new(fq((1 << 60) - 695), 5, fq((1 << 60) - 695).elem(3)).unwrap();
        for _ in 0..3 {
            let planted: Vec<_> = (0..5).map(|_| big.random(&mut rng)).collect();
            let mut f = UniPoly::constant(&big, big.one());
            for &r in &planted {
                f = f.mul(&UniPoly::linear_root(&big, r), &big);
            }
            let mut expect = planted;
            expect.sort();
            assert_eq!(roots_in_field(&f, &big).unwrap(), expect);
        }
    }

    proptest! {
        #[test]
        fn div_rem_reconstructs(a in proptest::collection::vec(0u64..101, 0..8), b in proptest::collection::vec(0u64..101, 1..6)) {
            let k = fq(101);
            let pa = UniPoly::from_coeffs(&k, a.iter().map(|&v| k.from_u64(v)).collect());
            let pb = UniPoly::from_coeffs(&k, b.iter().map(|&v| k.from_u64(v)).collect());
            prop_assume!(!pb.is_zero());
            let (qq, r) = pa.div_rem(&pb, &k).unwrap();
            prop_assert_eq!(qq.mul(&pb, &k).add(&r, &k), pa);
            prop_assert!(r.degree().is_none_or(|d| d < pb.degree().unwrap()));
        }
    }
}
