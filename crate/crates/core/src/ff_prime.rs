//! Arithmetic in the prime field F_q for an odd prime `q > 3` of up to 128 bits.
//!
//! Residues are kept fully reduced in a `u128`. Moduli below 2^64 take a Barrett
//! reduction path; larger moduli multiply through two Montgomery products.

use std::fmt;

use num_bigint::BigUint;
use rand::Rng;

use crate::error::{Error, Result};
use crate::field::Field;

/// An element of F_q, always in `[0, q)`.
#[derive(Copy, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Fp(u128);

impl Fp {
    pub const ZERO: Fp = Fp(0);

    pub fn value(self) -> u128 {
        self.0
    }
}

impl fmt::Debug for Fp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl fmt::Display for Fp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// High 128 bits of the 256-bit product `a * b`.
#[inline]
fn mulhi(a: u128, b: u128) -> u128 {
    let (a1, a0) = (a >> 64, a & u64::MAX as u128);
    let (b1, b0) = (b >> 64, b & u64::MAX as u128);
    let p00 = a0 * b0;
    let p01 = a0 * b1;
    let p10 = a1 * b0;
    let p11 = a1 * b1;
    let mid = (p00 >> 64) + (p01 & u64::MAX as u128) + (p10 & u64::MAX as u128);
    p11 + (p01 >> 64) + (p10 >> 64) + (mid >> 64)
}

/// Moduli of at most `SHORT_BITS` bits reduce inputs below 2^(2·bits + 3) with a
/// single 64 × 64-bit multiplication.
const SHORT_BITS: u32 = 60;

#[derive(Copy, Clone, Debug, PartialEq, Eq)]
struct Modulus {
    q: u128,
    /// floor(2^128 / q), present when q < 2^64.
    barrett: Option<u128>,
    /// bits(q) and floor(2^(2·bits + 3) / q), present when bits(q) ≤ SHORT_BITS.
    short: Option<(u32, u64)>,
    /// −q^{−1} mod 2^64 and 2^256 mod q, for Montgomery products when q ≥ 2^64.
    mont: (u64, u128),
}

impl Modulus {
    fn new(q: u128) -> Self {
        let barrett = (q < (1u128 << 64)).then(|| u128::MAX / q);
        let bits = 128 - q.leading_zeros();
        let short = (bits <= SHORT_BITS).then(|| (bits, ((1u128 << (2 * bits + 3)) / q) as u64));
        let mut m = Modulus { q, barrett, short, mont: (0, 0) };
        if barrett.is_none() {
            let mut inv = 1u64;
            for _ in 0..6 {
                inv = inv.wrapping_mul(2u64.wrapping_sub((q as u64).wrapping_mul(inv)));
            }
            let r = (u128::MAX % q + 1) % q;
            m.mont = (inv.wrapping_neg(), m.mul_slow(r, r));
        }
        m
    }

    /// a·b·2^{−128} mod q for a, b < q, two 64-bit limbs at a time.
    #[inline]
    fn montgomery(&self, a: u128, b: u128) -> u128 {
        const LO: u128 = u64::MAX as u128;
        let (q0, q1) = (self.q & LO, self.q >> 64);
        let (a0, a1) = (a & LO, a >> 64);
        let n0 = self.mont.0 as u128;
        let (mut t0, mut t1, mut t2) = (0u128, 0u128, 0u128);
        for bi in [b & LO, b >> 64] {
            let c = t0 + a0 * bi;
            t0 = c & LO;
            let c = t1 + a1 * bi + (c >> 64);
            t1 = c & LO;
            t2 += c >> 64;
            let m = ((t0 as u64).wrapping_mul(n0 as u64)) as u128;
            let c = t0 + m * q0;
            let c = t1 + m * q1 + (c >> 64);
            t0 = c & LO;
            let c = t2 + (c >> 64);
            t1 = c & LO;
            t2 = c >> 64;
        }
        let r = t0 | (t1 << 64);
        if t2 != 0 || r >= self.q {
            r.wrapping_sub(self.q)
        } else {
            r
        }
    }

    #[inline(always)]
    fn add(&self, a: u128, b: u128) -> u128 {
        let (s, overflow) = a.overflowing_add(b);
        if overflow || s >= self.q {
            s.wrapping_sub(self.q)
        } else {
            s
        }
    }

    #[inline(always)]
    fn sub(&self, a: u128, b: u128) -> u128 {
        if a >= b {
            a - b
        } else {
            a.wrapping_sub(b).wrapping_add(self.q)
        }
    }

    #[inline(always)]
    fn mul(&self, a: u128, b: u128) -> u128 {
        if self.short.is_some() {
            return self.reduce((a as u64 as u128) * (b as u64 as u128));
        }
        match self.barrett {
            Some(_) => self.reduce(a * b),
            None => self.montgomery(self.montgomery(a, b), self.mont.1),
        }
    }

    #[inline(always)]
    fn reduce(&self, x: u128) -> u128 {
        if let Some((bits, mu)) = self.short {
            if x >> (2 * bits + 3) == 0 {
                let est = (((x >> (bits - 1)) as u64 as u128) * mu as u128) >> (bits + 4);
                let mut r = x - est * self.q;
                while r >= self.q {
                    r -= self.q;
                }
                return r;
            }
        }
        match self.barrett {
            Some(mu) => {
                let est = mulhi(x, mu);
                let mut r = x - est * self.q;
                while r >= self.q {
                    r -= self.q;
                }
                r
            }
            None => x % self.q,
        }
    }

    #[inline(never)]
    fn mul_slow(&self, a: u128, mut b: u128) -> u128 {
        let mut acc = 0u128;
        let mut base = a;
        while b != 0 {
            if b & 1 == 1 {
                acc = self.add(acc, base);
            }
            base = self.add(base, base);
            b >>= 1;
        }
        acc
    }

    fn pow(&self, a: u128, e: u128) -> u128 {
        let mut acc = 1u128 % self.q;
        for i in (0..(128 - e.leading_zeros())).rev() {
            acc = self.mul(acc, acc);
            if (e >> i) & 1 == 1 {
                acc = self.mul(acc, a);
            }
        }
        acc
    }
}

/// Miller-Rabin on a `u128`. Deterministic below 3.3e24 (the first twelve prime
/// bases); above that the extra bases make a false positive vanishingly unlikely.
pub fn is_prime_u128(n: u128) -> bool {
    const BASES: [u128; 20] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71];
    if n < 2 {
        return false;
    }
    for p in BASES {
        if n == p {
            return true;
        }
        if n.is_multiple_of(p) {
            return false;
        }
    }
    let m = Modulus::new(n);
    let s = (n - 1).trailing_zeros();
    let d = (n - 1) >> s;
    'witness: for a in BASES {
        let mut x = m.pow(a, d);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = m.mul(x, x);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// The prime field F_q together with the precomputed data for square and cube roots.
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub struct PrimeField {
    m: Modulus,
    bits: u32,
    // q - 1 = 2^two_adicity * two_odd
    two_adicity: u32,
    two_odd: u128,
    /// A generator of the 2-Sylow subgroup of F_q^*.
    two_sylow_gen: u128,
    // q - 1 = 3^three_adicity * three_rest, only meaningful when 3 | q - 1.
    three_adicity: u32,
    three_rest: u128,
    three_sylow_gen: u128,
}

impl PrimeField {
    /// Builds F_q, rejecting anything that is not an odd prime greater than 3.
    pub fn new(q: u128) -> Result<Self> {
        if q <= 3 || !is_prime_u128(q) {
            return Err(Error::InvalidParams(format!("q = {q} is not a prime greater than 3")));
        }
        let m = Modulus::new(q);
        let two_adicity = (q - 1).trailing_zeros();
        let two_odd = (q - 1) >> two_adicity;
        let mut three_adicity = 0;
        let mut three_rest = q - 1;
        while three_rest.is_multiple_of(3) {
            three_rest /= 3;
            three_adicity += 1;
        }

        // Smallest quadratic non-residue, and smallest cubic non-residue when 3 | q - 1.
        let mut c = 2u128;
        while m.pow(c, (q - 1) / 2) == 1 {
            c += 1;
        }
        let two_sylow_gen = m.pow(c, two_odd);
        let three_sylow_gen = if three_adicity > 0 {
            let mut c = 2u128;
            while m.pow(c, (q - 1) / 3) == 1 {
                c += 1;
            }
            m.pow(c, three_rest)
        } else {
            1
        };

        Ok(PrimeField { m, bits: 128 - q.leading_zeros(), two_adicity, two_odd, two_sylow_gen, three_adicity, three_rest, three_sylow_gen })
    }

    pub fn modulus(&self) -> u128 {
        self.m.q
    }

    pub fn bits(&self) -> u32 {
        self.bits
    }

    /// The odd part of q − 1.
    pub(crate) fn two_odd(&self) -> u128 {
        self.two_odd
    }

    /// Whether `terms` unreduced products of residues fit in a `u128`.
    pub(crate) fn accumulates(&self, terms: u32) -> bool {
        self.m.barrett.is_some() && 2 * self.bits + (32 - terms.leading_zeros()) <= 128
    }

    /// Reduces a lazily accumulated sum of products.
    #[inline]
    pub(crate) fn reduce_wide(&self, x: u128) -> Fp {
        Fp(self.m.reduce(x))
    }

    /// Width of the fixed-size big-endian encoding of an element.
    pub fn byte_len(&self) -> usize {
        self.bits.div_ceil(8) as usize
    }

    pub fn elem(&self, v: u128) -> Fp {
        Fp(v % self.m.q)
    }

    pub fn from_i128(&self, v: i128) -> Fp {
        let q = self.m.q;
        if v >= 0 {
            Fp(v as u128 % q)
        } else {
            Fp(self.m.sub(0, v.unsigned_abs() % q))
        }
    }

    /// Reduces an arbitrary big integer into the field.
    pub fn from_biguint(&self, v: &BigUint) -> Fp {
        let r = v % BigUint::from(self.m.q);
        Fp(r.try_into().expect("residue fits u128"))
    }

    /// Strict conversion: the value must already be a residue.
    pub fn try_elem(&self, v: u128) -> Result<Fp> {
        if v < self.m.q {
            Ok(Fp(v))
        } else {
            Err(Error::InvalidInput(format!("{v} is not reduced modulo {}", self.m.q)))
        }
    }

    pub fn parse(&self, s: &str) -> Result<Fp> {
        let v: u128 = s.trim().parse().map_err(|_| Error::Parse(format!("not a decimal field element: {s:?}")))?;
        self.try_elem(v)
    }

    pub fn to_bytes(&self, a: Fp) -> Vec<u8> {
        let full = a.0.to_be_bytes();
        full[16 - self.byte_len()..].to_vec()
    }

    pub fn from_bytes(&self, bytes: &[u8]) -> Result<Fp> {
        if bytes.len() != self.byte_len() {
            return Err(Error::Parse(format!("expected {} bytes per field element, got {}", self.byte_len(), bytes.len())));
        }
        let mut full = [0u8; 16];
        full[16 - bytes.len()..].copy_from_slice(bytes);
        self.try_elem(u128::from_be_bytes(full))
    }

    /// Square roots: `Some([r, -r])` with `r` the numerically smaller one.
    pub fn sqrt(&self, a: Fp) -> Option<[Fp; 2]> {
        if a.0 == 0 {
            return Some([Fp(0), Fp(0)]);
        }
        let m = &self.m;
        let q = m.q;
        if m.pow(a.0, (q - 1) / 2) != 1 {
            return None;
        }
        // Tonelli-Shanks.
        let mut x = m.pow(a.0, self.two_odd.div_ceil(2));
        let mut b = m.pow(a.0, self.two_odd);
        let mut g = self.two_sylow_gen;
        let mut r = self.two_adicity;
        while b != 1 {
            let mut k = 0;
            let mut t = b;
            while t != 1 {
                t = m.mul(t, t);
                k += 1;
            }
            let mut gs = g;
            for _ in 0..(r - k - 1) {
                gs = m.mul(gs, gs);
            }
            x = m.mul(x, gs);
            g = m.mul(gs, gs);
            b = m.mul(b, g);
            r = k;
        }
        let y = m.sub(0, x);
        Some(if x <= y { [Fp(x), Fp(y)] } else { [Fp(y), Fp(x)] })
    }

    /// All cube roots of `a`, sorted ascending.
    pub fn cbrt_all(&self, a: Fp) -> Vec<Fp> {
        let m = &self.m;
        let q = m.q;
        if a.0 == 0 {
            return vec![Fp(0)];
        }
        if q % 3 == 2 {
            // Cubing is a bijection; its inverse is exponentiation by (2q - 1) / 3.
            let e = (q / 3) * 2 + ((q % 3) * 2 - 1) / 3;
            return vec![Fp(m.pow(a.0, e))];
        }
        if m.pow(a.0, (q - 1) / 3) != 1 {
            return Vec::new();
        }
        // Cube-root analogue of Tonelli-Shanks on the 3-Sylow subgroup.
        let t = self.three_rest;
        let inv3 = inverse_mod_small(3, t);
        let mut x = m.pow(a.0, inv3);
        let a_inv = m.pow(a.0, q - 2);
        let mut e = m.mul(m.mul(m.mul(x, x), x), a_inv);
        let s = self.three_adicity;
        let g = self.three_sylow_gen;
        while e != 1 {
            // order of e is 3^k
            let mut k = 0u32;
            let mut tt = e;
            let mut omega_e = e;
            while tt != 1 {
                omega_e = tt;
                tt = m.pow(tt, 3);
                k += 1;
            }
            let mut h = g;
            for _ in 0..(s - k - 1) {
                h = m.pow(h, 3);
            }
            // h has order 3^(k+1); h^(3^k) is a primitive cube root of unity.
            let mut omega_h = h;
            for _ in 0..k {
                omega_h = m.pow(omega_h, 3);
            }
            if m.mul(omega_e, omega_h) != 1 {
                h = m.mul(h, h);
            }
            x = m.mul(x, h);
            e = m.mul(e, m.pow(h, 3));
        }
        let omega = m.pow(g, 3u128.pow(s - 1));
        let x1 = m.mul(x, omega);
        let x2 = m.mul(x1, omega);
        let mut out = vec![Fp(x), Fp(x1), Fp(x2)];
        out.sort();
        out
    }

    /// All `n`-th roots of `a` for a prime `n`, sorted ascending.
    pub fn nth_roots(&self, a: Fp, n: u32) -> Result<Vec<Fp>> {
        if n < 2 || !is_prime_u128(n as u128) {
            return Err(Error::InvalidInput(format!("root index {n} is not prime")));
        }
        let m = &self.m;
        let q = m.q;
        let nn = n as u128;
        if a.0 == 0 {
            return Ok(vec![Fp(0)]);
        }
        if !(q - 1).is_multiple_of(nn) {
            return Ok(vec![Fp(m.pow(a.0, inverse_mod_small(nn, q - 1)))]);
        }
        if m.pow(a.0, (q - 1) / nn) != 1 {
            return Ok(Vec::new());
        }
        let (mut s, mut t) = (0u32, q - 1);
        while t % nn == 0 {
            t /= nn;
            s += 1;
        }
        let z = (2..q).find(|&z| m.pow(z, (q - 1) / nn) != 1).expect("n | q - 1 leaves non-residues");
        let g = m.pow(z, t);
        let mut x = m.pow(a.0, inverse_mod_small(nn, t));
        let a_inv = m.pow(a.0, q - 2);
        let mut e = m.mul(m.pow(x, nn), a_inv);
        let unity = m.pow(g, nn.pow(s - 1));
        while e != 1 {
            let mut k = 0u32;
            let mut tt = e;
            let mut omega_e = e;
            while tt != 1 {
                omega_e = tt;
                tt = m.pow(tt, nn);
                k += 1;
            }
            // h has order n^(k+1), so h^n can cancel the top layer of e
            let h = m.pow(g, nn.pow(s - k - 1));
            let omega_h = m.pow(h, nn.pow(k));
            let mut j = 1u128;
            let mut w = omega_h;
            while m.mul(omega_e, w) != 1 {
                w = m.mul(w, omega_h);
                j += 1;
            }
            let hj = m.pow(h, j);
            x = m.mul(x, hj);
            e = m.mul(e, m.pow(hj, nn));
        }
        let mut out = Vec::with_capacity(n as usize);
        let mut r = x;
        for _ in 0..n {
            out.push(Fp(r));
            r = m.mul(r, unity);
        }
        out.sort();
        Ok(out)
    }

    /// Whether `a` is an `n`-th power; requires `n | q - 1` and `a != 0`.
    pub fn is_nth_power(&self, a: Fp, n: u32) -> Result<bool> {
        let q = self.m.q;
        if n == 0 || !(q - 1).is_multiple_of(n as u128) {
            return Err(Error::InvalidInput(format!("{n} does not divide q - 1")));
        }
        if a.0 == 0 {
            return Err(Error::InvalidInput("is_nth_power of zero".into()));
        }
        Ok(self.m.pow(a.0, (q - 1) / n as u128) == 1)
    }

    pub fn legendre(&self, a: Fp) -> i32 {
        if a.0 == 0 {
            return 0;
        }
        if self.m.pow(a.0, (self.m.q - 1) / 2) == 1 {
            1
        } else {
            -1
        }
    }
}

/// Inverse of `a` modulo `m` for small coprime arguments (`m` may be 1).
fn inverse_mod_small(a: u128, m: u128) -> u128 {
    if m == 1 {
        return 0;
    }
    let (mut r0, mut r1) = (m as i128, (a % m) as i128);
    let (mut t0, mut t1) = (0i128, 1i128);
    while r1 != 0 {
        let k = r0 / r1;
        (r0, r1) = (r1, r0 - k * r1);
        (t0, t1) = (t1, t0 - k * t1);
    }
    debug_assert_eq!(r0, 1);
    t0.rem_euclid(m as i128) as u128
}

impl Field for PrimeField {
    type Elem = Fp;

    #[inline]
    fn zero(&self) -> Fp {
        Fp(0)
    }

    #[inline]
    fn one(&self) -> Fp {
        Fp(1)
    }

    fn from_u64(&self, v: u64) -> Fp {
        Fp(v as u128 % self.m.q)
    }

    #[inline]
    fn add(&self, a: Fp, b: Fp) -> Fp {
        Fp(self.m.add(a.0, b.0))
    }

    #[inline]
    fn sub(&self, a: Fp, b: Fp) -> Fp {
        Fp(self.m.sub(a.0, b.0))
    }

    #[inline]
    fn neg(&self, a: Fp) -> Fp {
        Fp(self.m.sub(0, a.0))
    }

    #[inline]
    fn mul(&self, a: Fp, b: Fp) -> Fp {
        Fp(self.m.mul(a.0, b.0))
    }

    fn inv(&self, a: Fp) -> Result<Fp> {
        if a.0 == 0 {
            return Err(Error::DivisionByZero);
        }
        if self.m.q < 1 << 126 {
            Ok(Fp(inverse_mod_small(a.0, self.m.q)))
        } else {
            Ok(Fp(self.m.pow(a.0, self.m.q - 2)))
        }
    }

    fn characteristic(&self) -> u128 {
        self.m.q
    }

    fn degree(&self) -> u32 {
        1
    }

    #[inline]
    fn frobenius(&self, a: Fp) -> Fp {
        a
    }

    fn random<R: Rng + ?Sized>(&self, rng: &mut R) -> Fp {
        Fp(rng.gen_range(0..self.m.q))
    }

    fn pow_u128(&self, a: Fp, e: u128) -> Fp {
        Fp(self.m.pow(a.0, e))
    }
}
